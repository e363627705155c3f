use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeP(u64),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("modulus must be monic of degree {expected} with coefficients below p")]
    InvalidModulus { expected: u32 },
    #[error("field order {0} exceeds the table-backed range 2^20")]
    FieldTooLarge(u64),
    #[error("operation undefined for the zero element")]
    ZeroElement,
    #[error("{r} does not divide the extension degree {s}")]
    NotASubfield { r: u32, s: u32 },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("binomial constant must be nonzero")]
    ZeroConstant,
    #[error("empty binomial list")]
    EmptyList,
    #[error("operation undefined for the zero polynomial")]
    ZeroPoly,
    #[error("ambient spaces have different supports")]
    SupportMismatch,
    #[error("ambient spaces have different lengths")]
    LengthMismatch,
    #[error("invalid support for length {n}")]
    BadSupport { n: usize },
    #[error("class representatives collided; enumeration is inconsistent")]
    RepresentativeCollision,
    #[error("ambient space is not a trinomial space")]
    NotTrinomial,
    #[error("generator does not divide the ambient modulus")]
    NotADivisor,
    #[error("code has dimension zero")]
    ZeroCode,
    #[error("x^p - x - a is irreducible (nonzero absolute trace)")]
    IrreducibleCase,
    #[error("element does not lie in the subfield of order p^{0}")]
    NotInSubfield(u32),
    #[error("compatibility condition a^p = b^(p-1) fails")]
    CompatibilityFailed,
    #[error("factor product does not reproduce the target polynomial")]
    ProductMismatch,
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}
