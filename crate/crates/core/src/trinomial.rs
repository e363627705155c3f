//! Artin–Schreier factorizations of `p^ell`-trinomials and the generator
//! families they induce.
//!
//! Over `GF(q)`, `q = p^s`, the trinomial `x^p - x - a` is irreducible iff
//! the absolute trace of `a` is nonzero, and otherwise splits as
//! `prod_i (x - (beta + i))`. Raising to `p^ell` gives closed forms for
//! `x^(p^(ell+1)) - x^(p^ell) - 1` and `x^(p^(ell+s)) - x^(p^ell) - 1`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef};
use crate::poly::Poly;

/// Largest trinomial degree the closed forms will build.
pub const MAX_DEGREE: u64 = 1 << 16;

/// A closed-form factorization of a trinomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsFactorization {
    pub target: Poly,
    /// Distinct factors with their multiplicities.
    pub factors: Vec<(Poly, u64)>,
    /// Scaling element, when the factors were obtained by substitution.
    pub alpha: Option<Elem>,
    /// Constants of the Artin–Schreier factors (roots in the split case).
    pub betas: Vec<Elem>,
}

impl AsFactorization {
    pub fn product(&self) -> Poly {
        let mut acc = Poly::one(self.target.field());
        for (g, e) in &self.factors {
            acc = acc.mul(&g.pow(*e)).expect("same field");
        }
        acc
    }

    fn checked(self) -> Result<Self> {
        if self.product() == self.target.monic() {
            Ok(self)
        } else {
            Err(Error::ProductMismatch)
        }
    }
}

fn p_power(p: u32, e: u32) -> Result<u64> {
    (p as u64)
        .checked_pow(e)
        .filter(|&v| v <= MAX_DEGREE)
        .ok_or(Error::Overflow("trinomial degree"))
}

/// `x^p - x - a`.
pub fn artin_schreier_poly(field: &FieldRef, a: Elem) -> Poly {
    let p = field.characteristic() as usize;
    let mut c = vec![Elem::ZERO; p + 1];
    c[p] = Elem::ONE;
    c[1] = field.neg(Elem::ONE);
    c[0] = field.add(c[0], field.neg(a));
    Poly::new(field, c)
}

/// `x^n - a x^m - b`.
pub fn trinomial_poly(field: &FieldRef, n: usize, m: usize, a: Elem, b: Elem) -> Poly {
    let mut c = vec![Elem::ZERO; n + 1];
    c[n] = Elem::ONE;
    c[m] = field.sub(c[m], a);
    c[0] = field.sub(c[0], b);
    Poly::new(field, c)
}

pub fn artin_schreier_irreducible(field: &FieldRef, a: Elem) -> bool {
    !field.absolute_trace(a).is_zero()
}

/// The `p` roots `beta, beta + 1, ..., beta + (p-1)` of `x^p - x - a`, with
/// `beta` the smallest root.
pub fn artin_schreier_roots(field: &FieldRef, a: Elem) -> Result<Vec<Elem>> {
    if artin_schreier_irreducible(field, a) {
        return Err(Error::IrreducibleCase);
    }
    let p = field.characteristic() as u64;
    let beta = field
        .elements()
        .find(|&x| field.sub(field.pow(x, p), x) == a)
        .expect("trace zero guarantees a root");
    Ok((0..p as i64).map(|i| field.add(beta, field.from_int(i))).collect())
}

/// Splits `x^p - x - a` into its irreducible factors.
fn artin_schreier_factors(field: &FieldRef, a: Elem) -> (Vec<Poly>, Vec<Elem>) {
    match artin_schreier_roots(field, a) {
        Err(_) => (vec![artin_schreier_poly(field, a)], vec![a]),
        Ok(roots) => {
            let lin = roots
                .iter()
                .map(|&r| Poly::new(field, vec![field.neg(r), Elem::ONE]))
                .collect();
            (lin, roots)
        }
    }
}

/// `x^(p^(ell+1)) - x^(p^ell) - 1 = (x^p - x - 1)^(p^ell)`, with the inner
/// trinomial split into linear factors when it is reducible.
pub fn factor_tower_trinomial(field: &FieldRef, ell: u32) -> Result<AsFactorization> {
    let p = field.characteristic();
    let mult = p_power(p, ell)?;
    let n = p_power(p, ell + 1)?;
    let target = trinomial_poly(field, n as usize, mult as usize, Elem::ONE, Elem::ONE);
    let (factors, betas) = artin_schreier_factors(field, Elem::ONE);
    AsFactorization {
        target,
        factors: factors.into_iter().map(|g| (g, mult)).collect(),
        alpha: None,
        betas,
    }
    .checked()
}

/// `x^(p^s) - x - a = prod_j (x^(p^r) - x - beta_j)` over the `beta_j` of
/// relative trace `a` into `GF(p^r)`, for `a` in that subfield. Factors are
/// ordered by the discrete log of `beta_j` (zero first).
pub fn factor_xq_x_a(field: &FieldRef, a: Elem, r: u32) -> Result<AsFactorization> {
    let s = field.degree();
    if r == 0 || !s.is_multiple_of(r) {
        return Err(Error::NotASubfield { r, s });
    }
    if !field.in_subfield(a, r) {
        return Err(Error::NotInSubfield(r));
    }
    let q = field.order() as usize;
    let pr = p_power(field.characteristic(), r)? as usize;
    let target = trinomial_poly(field, q, 1, Elem::ONE, a);
    let mut betas: Vec<Elem> = Vec::new();
    if field.trace_to_subfield(Elem::ZERO, r)? == a {
        betas.push(Elem::ZERO);
    }
    for b in field.nonzero_by_log() {
        if field.trace_to_subfield(b, r)? == a {
            betas.push(b);
        }
    }
    let factors = betas
        .iter()
        .map(|&b| (trinomial_poly(field, pr, 1, Elem::ONE, b), 1))
        .collect();
    AsFactorization { target, factors, alpha: None, betas }.checked()
}

/// `x^(p^(ell+s)) - x^(p^ell) - 1 = prod_j (x^p - x - beta_j)^(p^ell)` over
/// the `p^(s-1)` elements `beta_j` of absolute trace 1, ordered by discrete
/// log. Every factor is irreducible.
pub fn ccor4_factorization(field: &FieldRef, ell: u32) -> Result<AsFactorization> {
    let p = field.characteristic();
    let mult = p_power(p, ell)?;
    let n = p_power(p, ell + field.degree())?;
    let target = trinomial_poly(field, n as usize, mult as usize, Elem::ONE, Elem::ONE);
    let betas: Vec<Elem> = field
        .nonzero_by_log()
        .filter(|&b| field.absolute_trace(b) == Elem::ONE)
        .collect();
    let factors = betas
        .iter()
        .map(|&b| (artin_schreier_poly(field, b), mult))
        .collect();
    AsFactorization { target, factors, alpha: None, betas }.checked()
}

/// Generators `g_0, ..., g_(p^ell)` of codes in a trinomial ambient space,
/// obtained from a unit trinomial factorization by a scaling substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFamily {
    pub modulus: Poly,
    pub alpha: Elem,
    pub generators: Vec<Poly>,
}

/// Builds `g_j = monic(prod_k h_k(c x))^j` for `j = 0..=mult` and checks
/// each divides `modulus`.
fn scaled_family(modulus: Poly, alpha: Elem, c: Elem, base: &[Poly], mult: u64) -> Result<GeneratorFamily> {
    let field = modulus.field().clone();
    let mut unit = Poly::one(&field);
    for h in base {
        unit = unit.mul(&h.substitute_scaled(c))?;
    }
    let unit = unit.monic();
    let mut generators = Vec::with_capacity(mult as usize + 1);
    let mut g = Poly::one(&field);
    for j in 0..=mult {
        if j > 0 {
            g = g.mul(&unit)?;
        }
        if !modulus.is_divisible_by(&g)? {
            return Err(Error::NotADivisor);
        }
        generators.push(g.clone());
    }
    Ok(GeneratorFamily { modulus, alpha, generators })
}

/// For `x^(p^(ell+1)) - a x^(p^ell) - b` with `a^p = b^(p-1)`: with
/// `alpha = (b a^(-1))^(p^(-ell))` the modulus is `b (x^p - x - 1)^(p^ell)`
/// evaluated at `alpha^(-1) x`, so its divisors include
/// `((alpha^(-1) x)^p - alpha^(-1) x - 1)^j` (or the product of the linear
/// factors `alpha^(-1) x - (beta + i)` when the inner trinomial splits),
/// `j = 0..=p^ell`. The `j = 0` member is the whole space.
pub fn th4_generator_family(field: &FieldRef, ell: u32, a: Elem, b: Elem) -> Result<GeneratorFamily> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroElement);
    }
    let p = field.characteristic() as u64;
    if field.pow(a, p) != field.pow(b, p - 1) {
        return Err(Error::CompatibilityFailed);
    }
    let mult = p_power(field.characteristic(), ell)?;
    let n = p_power(field.characteristic(), ell + 1)?;
    let modulus = trinomial_poly(field, n as usize, mult as usize, a, b);
    let ratio = field.div(b, a).expect("a is nonzero");
    let alpha = field.frobenius_inverse_root(ratio, ell);
    let alpha_inv = field.inv(alpha).expect("nonzero");
    let (base, _) = artin_schreier_factors(field, Elem::ONE);
    scaled_family(modulus, alpha, alpha_inv, &base, mult)
}

/// For `x^(p^(ell+s)) - x^(p^ell) - b`: with `alpha = b^(-p^(-ell))` the
/// modulus is `b (x^q - x - 1)^(p^ell)` evaluated at `alpha x`, giving the
/// divisors `prod_j ((alpha x)^p - alpha x - beta_j)^i`, `i = 0..=p^ell`,
/// over the `beta_j` of absolute trace 1.
pub fn th5_generator_family(field: &FieldRef, ell: u32, b: Elem) -> Result<GeneratorFamily> {
    if b.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mult = p_power(field.characteristic(), ell)?;
    let n = p_power(field.characteristic(), ell + field.degree())?;
    let modulus = trinomial_poly(field, n as usize, mult as usize, Elem::ONE, b);
    let b_inv = field.inv(b).expect("nonzero");
    let alpha = field.frobenius_inverse_root(b_inv, ell);
    let base: Vec<Poly> = field
        .nonzero_by_log()
        .filter(|&beta| field.absolute_trace(beta) == Elem::ONE)
        .map(|beta| artin_schreier_poly(field, beta))
        .collect();
    scaled_family(modulus, alpha, alpha, &base, mult)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{factor, is_irreducible};
    use crate::field::GaloisField;

    fn gf(p: u32, s: u32) -> FieldRef {
        GaloisField::with_order(p, s).unwrap()
    }

    #[test]
    fn irreducibility_examples() {
        assert!(artin_schreier_irreducible(&gf(3, 1), Elem::ONE));
        assert!(!artin_schreier_irreducible(&gf(2, 2), Elem::ONE));
        let f9 = gf(3, 2);
        let t0 = f9.nonzero_by_log().find(|&x| f9.absolute_trace(x).is_zero()).unwrap();
        assert!(!artin_schreier_irreducible(&f9, t0));
        let roots = artin_schreier_roots(&f9, t0).unwrap();
        assert_eq!(roots.len(), 3);
        let g = artin_schreier_poly(&f9, t0);
        assert!(roots.iter().all(|&r| g.eval(r).is_zero()));
    }

    #[test]
    fn roots_examples() {
        let f3 = gf(3, 1);
        assert_eq!(artin_schreier_roots(&f3, Elem::ZERO).unwrap(), vec![Elem(0), Elem(1), Elem(2)]);
        assert_eq!(artin_schreier_roots(&f3, Elem::ONE), Err(Error::IrreducibleCase));
        let f4 = gf(2, 2);
        let mut roots = artin_schreier_roots(&f4, Elem::ONE).unwrap();
        roots.sort();
        assert_eq!(roots, vec![f4.xi(), f4.mul(f4.xi(), f4.xi())]);
        assert_eq!(f4.sub(roots[1], roots[0]), Elem::ONE);
    }

    #[test]
    fn tower_examples() {
        let f3 = gf(3, 1);
        let t = factor_tower_trinomial(&f3, 2).unwrap();
        assert_eq!(t.factors, vec![(Poly::from_ints(&f3, &[-1, -1, 0, 1]), 9)]);
        assert_eq!(t.target, Poly::from_ints(&f3, &{
            let mut c = [0i64; 28];
            c[27] = 1;
            c[9] = -1;
            c[0] = -1;
            c
        }));
        let t0 = factor_tower_trinomial(&f3, 0).unwrap();
        assert_eq!(t0.factors.len(), 1);
        assert!(is_irreducible(&t0.factors[0].0));
        let f4 = gf(2, 2);
        let t = factor_tower_trinomial(&f4, 1).unwrap();
        assert_eq!(t.factors.len(), 2);
        assert!(t.factors.iter().all(|(g, e)| g.degree() == Some(1) && *e == 2));
    }

    #[test]
    fn xq_x_a_examples() {
        let f9 = gf(3, 2);
        let fz = factor_xq_x_a(&f9, Elem::ONE, 1).unwrap();
        assert_eq!(fz.factors.len(), 3);
        assert!(fz.betas.iter().all(|&b| f9.absolute_trace(b) == Elem::ONE));
        let z = factor_xq_x_a(&f9, Elem::ZERO, 1).unwrap();
        assert_eq!(z.betas[0], Elem::ZERO);
        assert_eq!(z.factors.len(), 3);
        assert_eq!(factor_xq_x_a(&f9, f9.xi(), 1), Err(Error::NotInSubfield(1)));
        assert!(matches!(factor_xq_x_a(&gf(2, 3), Elem::ONE, 2), Err(Error::NotASubfield { .. })));
        let f16 = gf(2, 4);
        for a in f16.elements().filter(|&a| f16.in_subfield(a, 2)) {
            let fa = factor_xq_x_a(&f16, a, 2).unwrap();
            assert_eq!(fa.factors.len(), 4);
        }
    }

    #[test]
    fn trace_one_cubic_factorizations() {
        let f9 = gf(3, 2);
        let c = ccor4_factorization(&f9, 1).unwrap();
        assert_eq!(c.factors.len(), 3);
        let xi = f9.xi();
        let mut expected = vec![xi, f9.from_int(2), f9.pow(xi, 3)];
        expected.sort_by_key(|&b| f9.log(b));
        assert_eq!(c.betas, expected);
        for (g, e) in &c.factors {
            assert_eq!(*e, 3);
            assert!(is_irreducible(g));
        }
        assert_eq!(c.target.degree(), Some(27));
        let c2 = ccor4_factorization(&f9, 2).unwrap();
        assert_eq!(c2.target.degree(), Some(81));
        assert_eq!(c2.target.coeff(9), f9.from_int(-1));
        assert_eq!(c2.betas, c.betas);
        assert!(c2.factors.iter().all(|(_, e)| *e == 9));
        let c3 = ccor4_factorization(&gf(3, 1), 2).unwrap();
        assert_eq!(c3.factors, factor_tower_trinomial(&gf(3, 1), 2).unwrap().factors);
    }

    #[test]
    fn th4_examples() {
        let f3 = gf(3, 1);
        let fam = th4_generator_family(&f3, 2, Elem::ONE, Elem::ONE).unwrap();
        assert_eq!(fam.alpha, Elem::ONE);
        assert_eq!(fam.generators.len(), 10);
        assert!(fam.generators[0].is_one());
        let base = Poly::from_ints(&f3, &[-1, -1, 0, 1]);
        for (j, g) in fam.generators.iter().enumerate() {
            assert_eq!(*g, base.pow(j as u64));
        }
        assert_eq!(fam.generators[9], fam.modulus);
        assert_eq!(th4_generator_family(&f3, 2, Elem(2), Elem(2)), Err(Error::CompatibilityFailed));
    }

    #[test]
    fn th4_every_compatible_pair() {
        for (p, s, ell) in [(3, 2, 1), (2, 2, 1), (2, 3, 2), (5, 1, 1)] {
            let f = gf(p, s);
            for a in f.nonzero_by_log() {
                for b in f.nonzero_by_log() {
                    let res = th4_generator_family(&f, ell, a, b);
                    if f.pow(a, p as u64) == f.pow(b, p as u64 - 1) {
                        let fam = res.unwrap();
                        assert_eq!(fam.generators.last().unwrap(), &fam.modulus.monic());
                    } else {
                        assert_eq!(res, Err(Error::CompatibilityFailed));
                    }
                }
            }
        }
    }

    #[test]
    fn th5_examples() {
        let f9 = gf(3, 2);
        let unit = th5_generator_family(&f9, 1, Elem::ONE).unwrap();
        assert_eq!(unit.alpha, Elem::ONE);
        assert_eq!(unit.generators.len(), 4);
        let c = ccor4_factorization(&f9, 1).unwrap();
        let mut prod = Poly::one(&f9);
        for (g, _) in &c.factors {
            prod = prod.mul(g).unwrap();
        }
        assert_eq!(unit.generators[1], prod);
        for b in f9.nonzero_by_log() {
            let fam = th5_generator_family(&f9, 1, b).unwrap();
            assert_eq!(f9.pow(fam.alpha, 3), f9.inv(b).unwrap());
            assert_eq!(fam.generators.len(), 4);
            assert_eq!(fam.generators[3], fam.modulus);
        }
        // the inverse substitution only works when alpha is its own inverse
        for b in f9.nonzero_by_log() {
            let fam = th5_generator_family(&f9, 1, b).unwrap();
            let inv = f9.inv(fam.alpha).unwrap();
            let mut g = Poly::one(&f9);
            for (h, _) in &c.factors {
                g = g.mul(&h.substitute_scaled(inv)).unwrap();
            }
            let divides = fam.modulus.is_divisible_by(&g.monic()).unwrap();
            assert_eq!(divides, f9.mul(fam.alpha, fam.alpha) == Elem::ONE);
        }
        let f4 = gf(2, 2);
        for b in f4.nonzero_by_log() {
            assert!(th5_generator_family(&f4, 2, b).is_ok());
        }
    }

    #[test]
    fn scaling_invariance() {
        for (p, s) in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (5, 1), (2, 4)] {
            let f = gf(p, s);
            let unit = artin_schreier_poly(&f, Elem::ONE);
            let expected = is_irreducible(&unit);
            for b in f.nonzero_by_log() {
                let scaled = unit.substitute_scaled(b);
                assert_eq!(is_irreducible(&scaled), expected);
            }
        }
    }

    #[test]
    fn agrees_with_factorization_small() {
        for (p, s) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)] {
            let f = gf(p, s);
            for a in f.elements() {
                let fac = factor(&artin_schreier_poly(&f, a)).unwrap();
                let irr = fac.factors.len() == 1 && fac.factors[0].1 == 1;
                assert_eq!(artin_schreier_irreducible(&f, a), irr);
            }
        }
    }
}
