//! Dense univariate polynomials over a [`GaloisField`].

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef, GaloisField};

/// A polynomial with coefficients constant term first and trailing zeros
/// stripped; the zero polynomial has no coefficients.
#[derive(Clone)]
pub struct Poly {
    field: FieldRef,
    coeffs: Vec<Elem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_field(&self.field, &other.field)
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

pub(crate) fn same_field(a: &FieldRef, b: &FieldRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn trim(v: &mut Vec<Elem>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl Poly {
    pub fn new(field: &FieldRef, mut coeffs: Vec<Elem>) -> Self {
        trim(&mut coeffs);
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &FieldRef) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldRef) -> Self {
        Self::constant(field, Elem::ONE)
    }

    pub fn constant(field: &FieldRef, c: Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: &FieldRef) -> Self {
        Self::monomial(field, Elem::ONE, 1)
    }

    /// `c x^deg`.
    pub fn monomial(field: &FieldRef, c: Elem, deg: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        Self::new(field, coeffs)
    }

    /// Builds a polynomial from integer coefficients reduced into `GF(p)`.
    pub fn from_ints(field: &FieldRef, ints: &[i64]) -> Self {
        Self::new(field, ints.iter().map(|&n| field.from_int(n)).collect())
    }

    /// `x^n - a`.
    pub fn binomial(field: &FieldRef, n: usize, a: Elem) -> Self {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[n] = Elem::ONE;
        coeffs[0] = field.sub(coeffs[0], a);
        Self::new(field, coeffs)
    }

    #[inline]
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Elem::ONE
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&Elem::ONE)
    }

    pub fn lead(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    fn with(&self, coeffs: Vec<Elem>) -> Poly {
        Poly::new(&self.field, coeffs)
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.with(add_slices(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.with(sub_slices(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.with(mul_slices(&self.field, &self.coeffs, &other.coeffs)))
    }

    /// `(quotient, remainder)` with `deg(remainder) < deg(divisor)`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let (q, r) = divrem_slices(&self.field, &self.coeffs, &divisor.coeffs);
        Ok((self.with(q), self.with(r)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Whether `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Poly) -> Result<bool> {
        Ok(self.rem(divisor)?.is_zero())
    }

    /// Exact quotient; [`Error::NotADivisor`] when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotADivisor)
        }
    }

    pub fn neg(&self) -> Poly {
        self.with(self.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem) -> Poly {
        self.with(self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect())
    }

    /// `self` divided by its leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(self.field.inv(l).expect("leading coefficient is nonzero")),
        }
    }

    pub fn eval(&self, x: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        self.with(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
                .collect(),
        )
    }

    /// `f(alpha x)`.
    pub fn substitute_scaled(&self, alpha: Elem) -> Poly {
        let f = &self.field;
        let mut pow = Elem::ONE;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            out.push(f.mul(c, pow));
            pow = f.mul(pow, alpha);
        }
        self.with(out)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        self.check(modulus)?;
        if modulus.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let f = &self.field;
        let m = &modulus.coeffs;
        let mut acc = divrem_slices(f, &[Elem::ONE], m).1;
        let mut base = divrem_slices(f, &self.coeffs, m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod_slices(f, &acc, &base, m);
            }
            e >>= 1;
            if e > 0 {
                base = mulmod_slices(f, &base, &base, m);
            }
        }
        Ok(self.with(acc))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        Ok(self.with(gcd_slices(&self.field, &self.coeffs, &other.coeffs)))
    }

    /// Polynomial text: comma-separated coefficients, constant term first,
    /// each written `0` or `z^k`.
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&self.field.fmt_elem(c));
        }
        out
    }
}

impl fmt::Display for Poly {
    /// Human-readable form such as `x^3 + 2x + 1`; coefficients of prime
    /// fields print as integers, extension-field coefficients as `z^k`
    /// (`x^3 + z^2*x + z^0`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let field = &self.field;
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if field.degree() == 1 {
                alloc::format!("{}", c.0)
            } else {
                field.fmt_elem(c)
            };
            let show_coef = c != Elem::ONE || i == 0;
            if show_coef {
                write!(f, "{coef}")?;
                if i > 0 && field.degree() > 1 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn add_slices(f: &GaloisField, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = f.add(*o, s);
    }
    trim(&mut out);
    out
}

pub(crate) fn sub_slices(f: &GaloisField, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Elem::ZERO);
    }
    for (o, &s) in out.iter_mut().zip(b) {
        *o = f.sub(*o, s);
    }
    trim(&mut out);
    out
}

pub(crate) fn mul_slices(f: &GaloisField, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Division with remainder; `b` must be nonzero and trimmed.
pub(crate) fn divrem_slices(f: &GaloisField, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(b[db]).expect("divisor is trimmed");
    let mut q = vec![Elem::ZERO; r.len() - db];
    for i in (0..q.len()).rev() {
        let c = f.mul(r[i + db], lead_inv);
        q[i] = c;
        if c.is_zero() {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] = f.sub(r[i + j], f.mul(c, bj));
        }
    }
    r.truncate(db);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub(crate) fn mulmod_slices(f: &GaloisField, a: &[Elem], b: &[Elem], m: &[Elem]) -> Vec<Elem> {
    divrem_slices(f, &mul_slices(f, a, b), m).1
}

pub(crate) fn monic_slices(f: &GaloisField, mut a: Vec<Elem>) -> Vec<Elem> {
    if let Some(&l) = a.last() {
        let inv = f.inv(l).expect("trimmed");
        for c in a.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
    a
}

pub(crate) fn gcd_slices(f: &GaloisField, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = divrem_slices(f, &a, &b).1;
        a = b;
        b = r;
    }
    monic_slices(f, a)
}

/// Closed-form `gcd(x^n - a, x^m - b)` as `(degree, constant)`, meaning
/// `x^d - c`; `None` when the gcd is 1.
///
/// The gcd has degree `d = gcd(n, m)` exactly when `a^(m/d) = b^(n/d)`, in
/// which case it equals `x^d - a^u b^v` for Bézout coefficients
/// `d = u n + v m`.
pub fn binomial_gcd_params(
    field: &GaloisField,
    n: u64,
    a: Elem,
    m: u64,
    b: Elem,
) -> Result<Option<(u64, Elem)>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroConstant);
    }
    let d = arith::gcd(n, m);
    if field.pow(a, m / d) != field.pow(b, n / d) {
        return Ok(None);
    }
    let (g, u, v) = arith::ext_gcd(n as i64, m as i64);
    debug_assert_eq!(g as u64, d);
    let au = field.pow_signed(a, u).expect("a is nonzero");
    let bv = field.pow_signed(b, v).expect("b is nonzero");
    Ok(Some((d, field.mul(au, bv))))
}

/// `gcd(x^n - a, x^m - b)` in closed form.
pub fn binomial_gcd(field: &FieldRef, n: u64, a: Elem, m: u64, b: Elem) -> Result<Poly> {
    Ok(match binomial_gcd_params(field, n, a, m, b)? {
        None => Poly::one(field),
        Some((d, c)) => Poly::binomial(field, d as usize, c),
    })
}

/// Left fold of [`binomial_gcd_params`] over `x^(n_i) - a_i`.
pub fn multi_binomial_gcd_params(
    field: &GaloisField,
    pairs: &[(u64, Elem)],
) -> Result<Option<(u64, Elem)>> {
    let (&(n0, a0), rest) = pairs.split_first().ok_or(Error::EmptyList)?;
    if pairs.iter().any(|(_, a)| a.is_zero()) {
        return Err(Error::ZeroConstant);
    }
    let mut acc = Some((n0, a0));
    for &(n, a) in rest {
        acc = match acc {
            None => None,
            Some((d, c)) => binomial_gcd_params(field, d, c, n, a)?,
        };
    }
    Ok(acc)
}

/// `gcd` of all `x^(n_i) - a_i`: either 1 or `x^d - prod a_i^(u_i)`.
pub fn multi_binomial_gcd(field: &FieldRef, pairs: &[(u64, Elem)]) -> Result<Poly> {
    Ok(match multi_binomial_gcd_params(field, pairs)? {
        None => Poly::one(field),
        Some((d, c)) => Poly::binomial(field, d as usize, c),
    })
}
