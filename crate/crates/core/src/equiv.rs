//! n-equivalence of polycyclic ambient spaces.
//!
//! Two associated vectors `a`, `b` on the same support are equivalent when
//! some `alpha` in `GF(q)*` makes `f(x) -> f(alpha x)` an algebra isomorphism
//! `GF(q)[x]/<x^n - b(x)> -> GF(q)[x]/<x^n - a(x)>`, which happens exactly
//! when `a_i alpha^(n-i) = b_i` on every support index. Witnesses are found
//! as the roots of `gcd_j(x^(n-i_j) - b_(i_j)/a_(i_j))`, computed in closed
//! form by [`multi_binomial_gcd_params`].
//!
//! Class enumeration works in exponent space: writing `a_(i_j) = xi^(k_j)`,
//! equivalence becomes congruence modulo the cyclic subgroup of
//! `(Z/(q-1))^m` generated by `(n - i_j)_j`.

use alloc::collections::{btree_map, BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef};
use crate::poly::{multi_binomial_gcd_params, same_field, Poly};

/// Representative sets above this size are deduplicated by orbit keys only,
/// without the quadratic pairwise `is_equivalent` pass.
pub const PAIRWISE_CHECK_LIMIT: usize = 256;

/// Largest class count [`class_representatives`] will materialize.
pub const MAX_REPRESENTATIVES: u128 = 1 << 20;

/// The quotient ring `GF(q)[x]/<x^n - a(x)>`, described by its length and
/// associated vector `a = (a_0, ..., a_(n-1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientSpace {
    field: FieldRef,
    n: usize,
    assoc: Vec<Elem>,
    support: Vec<usize>,
}

fn validate_support(n: usize, support: &[usize]) -> Result<()> {
    let sorted = support.windows(2).all(|w| w[0] < w[1]);
    if n < 2 || support.is_empty() || !sorted || support.iter().any(|&i| i >= n) {
        return Err(Error::BadSupport { n });
    }
    Ok(())
}

impl AmbientSpace {
    /// From a full associated vector of length `n` with at least one nonzero
    /// entry.
    pub fn new(field: &FieldRef, n: usize, assoc: Vec<Elem>) -> Result<Self> {
        if assoc.len() != n {
            return Err(Error::LengthMismatch);
        }
        let support: Vec<usize> = (0..n).filter(|&i| !assoc[i].is_zero()).collect();
        validate_support(n, &support)?;
        if assoc.iter().any(|a| a.0 >= field.order()) {
            return Err(Error::MixedFields);
        }
        Ok(AmbientSpace { field: field.clone(), n, assoc, support })
    }

    /// From a support and the (nonzero) values on it.
    pub fn from_support(
        field: &FieldRef,
        n: usize,
        support: &[usize],
        values: &[Elem],
    ) -> Result<Self> {
        validate_support(n, support)?;
        if values.len() != support.len() || values.iter().any(|v| v.is_zero()) {
            return Err(Error::BadSupport { n });
        }
        let mut assoc = vec![Elem::ZERO; n];
        for (&i, &v) in support.iter().zip(values) {
            assoc[i] = v;
        }
        Self::new(field, n, assoc)
    }

    /// The trinomial space `x^n - a_ell x^ell - a_0`.
    pub fn trinomial(field: &FieldRef, n: usize, ell: usize, a0: Elem, a_ell: Elem) -> Result<Self> {
        if ell == 0 || ell >= n {
            return Err(Error::BadSupport { n });
        }
        Self::from_support(field, n, &[0, ell], &[a0, a_ell])
    }

    /// From a monic modulus `x^n - a(x)` of degree at least 2.
    pub fn from_modulus(modulus: &Poly) -> Result<Self> {
        let n = modulus.degree().unwrap_or(0);
        if n < 2 || !modulus.is_monic() {
            return Err(Error::BadSupport { n });
        }
        let f = modulus.field();
        let assoc = modulus.coeffs()[..n].iter().map(|&c| f.neg(c)).collect();
        Self::new(f, n, assoc)
    }

    /// The space with every support coordinate equal to 1.
    pub fn unit(field: &FieldRef, n: usize, support: &[usize]) -> Result<Self> {
        Self::from_support(field, n, support, &vec![Elem::ONE; support.len()])
    }

    /// Same support, new values.
    pub fn with_values(&self, values: &[Elem]) -> Result<Self> {
        Self::from_support(&self.field, self.n, &self.support, values)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn assoc(&self) -> &[Elem] {
        &self.assoc
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// `(a_(i_0), ..., a_(i_(m-1)))`.
    pub fn support_values(&self) -> Vec<Elem> {
        self.support.iter().map(|&i| self.assoc[i]).collect()
    }

    /// `ell` when the support is `{0, ell}`.
    pub fn trinomial_ell(&self) -> Option<usize> {
        match self.support[..] {
            [0, ell] => Some(ell),
            _ => None,
        }
    }

    /// `x^n - a(x)`.
    pub fn modulus(&self) -> Poly {
        let f = &self.field;
        let mut coeffs: Vec<Elem> = self.assoc.iter().map(|&a| f.neg(a)).collect();
        coeffs.push(Elem::ONE);
        Poly::new(f, coeffs)
    }

    /// Discrete logs of the support values.
    fn exponents(&self) -> Vec<u32> {
        self.support_values()
            .iter()
            .map(|&v| self.field.log(v).expect("support values are nonzero"))
            .collect()
    }
}

/// A scalar `alpha` such that `g(x) -> g(alpha x)` maps
/// `GF(q)[x]/<x^n - source(x)>` isometrically onto
/// `GF(q)[x]/<x^n - target(x)>`; equivalently
/// `target_i alpha^(n-i) = source_i` on the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivWitness {
    pub alpha: Elem,
    pub source: AmbientSpace,
    pub target: AmbientSpace,
}

impl EquivWitness {
    /// Checks the coordinate condition literally.
    pub fn is_valid(&self) -> bool {
        let f = &self.target.field;
        let n = self.target.n;
        self.source.support == self.target.support
            && self.source.support.iter().all(|&i| {
                f.mul(self.target.assoc[i], f.pow(self.alpha, (n - i) as u64))
                    == self.source.assoc[i]
            })
    }
}

fn check_pair(a: &AmbientSpace, b: &AmbientSpace) -> Result<()> {
    if !same_field(&a.field, &b.field) {
        return Err(Error::MixedFields);
    }
    if a.n != b.n {
        return Err(Error::LengthMismatch);
    }
    if a.support != b.support {
        return Err(Error::SupportMismatch);
    }
    Ok(())
}

/// All `alpha` with `a_(i_j) alpha^(n - i_j) = b_(i_j)` for every `j`, sorted
/// by discrete log. Each witness maps `b`'s ring onto `a`'s ring.
pub fn witnesses(a: &AmbientSpace, b: &AmbientSpace) -> Result<Vec<EquivWitness>> {
    Ok(witness_scalars(a, b)?
        .into_iter()
        .map(|alpha| EquivWitness { alpha, source: b.clone(), target: a.clone() })
        .collect())
}

/// The scalars of [`witnesses`] without the space copies.
pub fn witness_scalars(a: &AmbientSpace, b: &AmbientSpace) -> Result<Vec<Elem>> {
    check_pair(a, b)?;
    let f = &a.field;
    let pairs: Vec<(u64, Elem)> = a
        .support
        .iter()
        .map(|&i| {
            let ratio = f.div(b.assoc[i], a.assoc[i]).expect("support values are nonzero");
            ((a.n - i) as u64, ratio)
        })
        .collect();
    match multi_binomial_gcd_params(f, &pairs)? {
        None => Ok(Vec::new()),
        Some((d, c)) => f.nth_root_solutions(c, d),
    }
}

pub fn is_equivalent(a: &AmbientSpace, b: &AmbientSpace) -> Result<bool> {
    Ok(!witness_scalars(a, b)?.is_empty())
}

/// Number of equivalence classes on associated vectors with this support:
/// `(q-1)^m / lcm_j((q-1)/gcd(n - i_j, q-1))`.
pub fn class_count(field: &FieldRef, n: usize, support: &[usize]) -> Result<u128> {
    validate_support(n, support)?;
    let order = field.group_order() as u64;
    let subgroup = support.iter().fold(1u64, |acc, &i| {
        arith::lcm(acc, order / arith::gcd((n - i) as u64, order))
    });
    let total = (order as u128)
        .checked_pow(support.len() as u32)
        .ok_or(Error::Overflow("class count"))?;
    Ok(total / subgroup as u128)
}

/// Representatives of every equivalence class on one support, with the
/// orbit-key index used to locate the class of an arbitrary space.
#[derive(Clone, Debug)]
pub struct ClassIndex {
    pub field: FieldRef,
    pub n: usize,
    pub support: Vec<usize>,
    pub reps: Vec<AmbientSpace>,
    pub count: u128,
    generator: Vec<u32>,
    orbit_len: u64,
    keys: BTreeMap<Vec<u32>, usize>,
}

impl ClassIndex {
    /// Lexicographically smallest exponent vector in the coset `x + H`.
    fn orbit_key(&self, x: &[u32]) -> Vec<u32> {
        orbit_key(x, &self.generator, self.orbit_len, self.field.group_order())
    }

    /// Index of the representative equivalent to `a`.
    pub fn class_of(&self, a: &AmbientSpace) -> Result<usize> {
        if !same_field(&a.field, &self.field) {
            return Err(Error::MixedFields);
        }
        if a.n != self.n {
            return Err(Error::LengthMismatch);
        }
        if a.support != self.support {
            return Err(Error::SupportMismatch);
        }
        self.keys
            .get(&self.orbit_key(&a.exponents()))
            .copied()
            .ok_or(Error::RepresentativeCollision)
    }

    /// The representative equivalent to `a` and a witness mapping `a`'s ring
    /// onto the representative's ring (smallest discrete log).
    pub fn canonicalize(&self, a: &AmbientSpace) -> Result<(AmbientSpace, EquivWitness)> {
        let rep = self.reps[self.class_of(a)?].clone();
        let w = witnesses(&rep, a)?
            .into_iter()
            .next()
            .ok_or(Error::RepresentativeCollision)?;
        Ok((rep, w))
    }
}

fn orbit_key(x: &[u32], generator: &[u32], orbit_len: u64, order: u32) -> Vec<u32> {
    let mut best = x.to_vec();
    let mut cur = x.to_vec();
    for _ in 1..orbit_len {
        for (c, &g) in cur.iter_mut().zip(generator) {
            *c = ((*c as u64 + g as u64) % order as u64) as u32;
        }
        if cur < best {
            best.clone_from(&cur);
        }
    }
    best
}

/// Enumerates one representative per equivalence class.
///
/// Candidates are generated first from the closed form: with
/// `d_j = gcd(n - i_j, q-1)` and `d = gcd_j((q-1)/d_j)`, the vectors
/// `(xi^(k_0 + h n), xi^(k_1), ..., xi^(k_(m-1)))` for `k_j < d_j` and
/// `h < d` (only `h = 0` when `d = 1`), in lexicographic `(h, k)` order.
/// Redundant candidates are dropped. When the closed form does not reach all
/// `N` classes (it can fall short once three or more support indices are
/// involved) the remaining classes are filled in by scanning exponent tuples
/// lexicographically.
pub fn class_representatives(field: &FieldRef, n: usize, support: &[usize]) -> Result<ClassIndex> {
    let count = class_count(field, n, support)?;
    if count > MAX_REPRESENTATIVES {
        return Err(Error::Overflow("class representatives"));
    }
    let order = field.group_order();
    let order64 = order as u64;
    let m = support.len();
    let generator: Vec<u32> = support.iter().map(|&i| ((n - i) as u64 % order64) as u32).collect();
    let divisors: Vec<u64> = support.iter().map(|&i| arith::gcd((n - i) as u64, order64)).collect();
    let orbit_len = divisors.iter().fold(1u64, |acc, &dj| arith::lcm(acc, order64 / dj));
    let d = divisors.iter().fold(0u64, |acc, &dj| arith::gcd(acc, order64 / dj));
    let h_range = if d == 1 { 1 } else { d };

    let mut keys: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut exps: Vec<Vec<u32>> = Vec::new();
    let mut consider = |x: Vec<u32>, keys: &mut BTreeMap<Vec<u32>, usize>| {
        let key = orbit_key(&x, &generator, orbit_len, order);
        if let btree_map::Entry::Vacant(e) = keys.entry(key) {
            e.insert(exps.len());
            exps.push(x);
        }
    };

    for h in 0..h_range {
        let shift = (h as u128 * n as u128 % order64 as u128) as u64;
        let mut k = vec![0u64; m];
        loop {
            let mut x: Vec<u32> = k.iter().map(|&v| v as u32).collect();
            x[0] = ((k[0] + shift) % order64) as u32;
            consider(x, &mut keys);
            if !odometer(&mut k, &divisors) {
                break;
            }
        }
    }

    if (keys.len() as u128) < count {
        let full = vec![order64; m];
        let mut k = vec![0u64; m];
        loop {
            consider(k.iter().map(|&v| v as u32).collect(), &mut keys);
            if keys.len() as u128 == count || !odometer(&mut k, &full) {
                break;
            }
        }
    }
    if keys.len() as u128 != count {
        return Err(Error::RepresentativeCollision);
    }

    let reps: Vec<AmbientSpace> = exps
        .iter()
        .map(|x| {
            let values: Vec<Elem> = x.iter().map(|&t| field.exp(t as u64)).collect();
            AmbientSpace::from_support(field, n, support, &values)
        })
        .collect::<Result<_>>()?;

    if reps.len() <= PAIRWISE_CHECK_LIMIT {
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                if is_equivalent(a, b)? {
                    return Err(Error::RepresentativeCollision);
                }
            }
        }
    }

    Ok(ClassIndex {
        field: field.clone(),
        n,
        support: support.to_vec(),
        reps,
        count,
        generator,
        orbit_len,
        keys,
    })
}

/// Advances a mixed-radix counter; false once it wraps around.
fn odometer(k: &mut [u64], radix: &[u64]) -> bool {
    for j in (0..k.len()).rev() {
        k[j] += 1;
        if k[j] < radix[j] {
            return true;
        }
        k[j] = 0;
    }
    false
}

/// The class representative of `a` together with a witness from `a`.
pub fn canonicalize(a: &AmbientSpace) -> Result<(AmbientSpace, EquivWitness)> {
    class_representatives(&a.field, a.n, &a.support)?.canonicalize(a)
}

/// For a trinomial space `A`, decides whether the family of
/// `x^n - x^ell - 1` maps onto `A`'s family: requires
/// `a_ell^(n/g) = a_0^((n-ell)/g)` with `g = gcd(n, n-ell)`, and then the
/// roots `r` of `x^g - a_0^v a_ell^u` (`g = v n + u (n-ell)`) give the
/// witnesses `alpha = r^(-1)`. Returns the one of smallest discrete log.
pub fn unit_trinomial_test(a: &AmbientSpace) -> Result<Option<Elem>> {
    let ell = a.trinomial_ell().ok_or(Error::NotTrinomial)?;
    let f = &a.field;
    let n = a.n as u64;
    let nl = n - ell as u64;
    let a0 = a.assoc[0];
    let al = a.assoc[ell];
    let (g, v, u) = arith::ext_gcd(n as i64, nl as i64);
    let g = g as u64;
    if f.pow(al, n / g) != f.pow(a0, nl / g) {
        return Ok(None);
    }
    let c = f.mul(
        f.pow_signed(a0, v).expect("nonzero"),
        f.pow_signed(al, u).expect("nonzero"),
    );
    let alphas: BTreeSet<(u32, Elem)> = f
        .nth_root_solutions(c, g)?
        .into_iter()
        .map(|r| {
            let alpha = f.inv(r).expect("roots are nonzero");
            (f.log(alpha).expect("nonzero"), alpha)
        })
        .collect();
    Ok(alphas.into_iter().next().map(|(_, alpha)| alpha))
}

/// Necessary condition for trinomial equivalence: for each `i` in
/// `{0, ell}`, `(a_i^(-1) b_i)^((q-1)/gcd(n-i, q-1)) = 1`.
pub fn constacyclic_necessary(a: &AmbientSpace, b: &AmbientSpace) -> Result<bool> {
    check_pair(a, b)?;
    a.trinomial_ell().ok_or(Error::NotTrinomial)?;
    let f = &a.field;
    let order = f.group_order() as u64;
    Ok(a.support.iter().all(|&i| {
        let ratio = f.div(b.assoc[i], a.assoc[i]).expect("nonzero");
        f.pow(ratio, order / arith::gcd((a.n - i) as u64, order)) == Elem::ONE
    }))
}

/// Transports a generator of a code in the witness's source ring: returns
/// the monic normalization of `g(alpha x)`, which divides the target modulus.
pub fn map_generator(w: &EquivWitness, g: &Poly) -> Result<Poly> {
    if !same_field(g.field(), &w.source.field) {
        return Err(Error::MixedFields);
    }
    if g.is_zero() || !w.source.modulus().is_divisible_by(g)? {
        return Err(Error::NotADivisor);
    }
    let image = g.substitute_scaled(w.alpha).monic();
    if !w.target.modulus().is_divisible_by(&image)? {
        return Err(Error::NotADivisor);
    }
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaloisField;

    fn gf(p: u32, s: u32) -> FieldRef {
        GaloisField::with_order(p, s).unwrap()
    }

    #[test]
    fn example_one_classes() {
        let f = gf(3, 1);
        let a = AmbientSpace::trinomial(&f, 27, 9, Elem(1), Elem(1)).unwrap();
        let b = AmbientSpace::trinomial(&f, 27, 9, Elem(2), Elem(1)).unwrap();
        let c = AmbientSpace::trinomial(&f, 27, 9, Elem(1), Elem(2)).unwrap();
        let w = witnesses(&a, &b).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].alpha, Elem(2));
        assert!(w[0].is_valid());
        assert!(witnesses(&a, &c).unwrap().is_empty());
        assert!(is_equivalent(&a, &b).unwrap());
        let own = witnesses(&a, &a).unwrap();
        assert!(own.iter().any(|w| w.alpha == Elem::ONE));
        assert_eq!(own.len() as u64, arith::gcd(arith::gcd(27, 18), 2));
    }

    #[test]
    fn modulus_round_trip() {
        let f = gf(3, 1);
        let a = AmbientSpace::from_support(&f, 12, &[0, 1, 7], &[Elem(1), Elem(2), Elem(1)]).unwrap();
        assert_eq!(AmbientSpace::from_modulus(&a.modulus()).unwrap(), a);
        assert!(AmbientSpace::from_modulus(&Poly::from_ints(&f, &[1, 0, 2])).is_err());
        assert!(AmbientSpace::from_modulus(&Poly::from_ints(&f, &[0, 0, 1])).is_err());
    }

    #[test]
    fn mismatches_are_errors() {
        let f = gf(3, 1);
        let a = AmbientSpace::trinomial(&f, 12, 3, Elem(1), Elem(1)).unwrap();
        let b = AmbientSpace::trinomial(&f, 12, 4, Elem(1), Elem(1)).unwrap();
        let c = AmbientSpace::trinomial(&f, 13, 3, Elem(1), Elem(1)).unwrap();
        assert_eq!(witnesses(&a, &b).unwrap_err(), Error::SupportMismatch);
        assert_eq!(witnesses(&a, &c).unwrap_err(), Error::LengthMismatch);
        let g = gf(3, 2);
        let d = AmbientSpace::trinomial(&g, 12, 3, Elem(1), Elem(1)).unwrap();
        assert_eq!(witnesses(&a, &d).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn bad_supports_are_rejected() {
        let f = gf(3, 1);
        assert!(class_count(&f, 12, &[]).is_err());
        assert!(class_count(&f, 12, &[0, 12]).is_err());
        assert!(class_count(&f, 12, &[7, 1]).is_err());
        assert!(AmbientSpace::new(&f, 4, vec![Elem::ZERO; 4]).is_err());
        assert!(AmbientSpace::trinomial(&f, 4, 0, Elem(1), Elem(1)).is_err());
    }

    #[test]
    fn class_counts_from_examples() {
        assert_eq!(class_count(&gf(3, 1), 27, &[0, 9]).unwrap(), 2);
        assert_eq!(class_count(&gf(3, 2), 81, &[0, 9]).unwrap(), 8);
        assert_eq!(class_count(&gf(3, 1), 12, &[0, 1, 7]).unwrap(), 4);
        let f4 = gf(2, 2);
        for ell in 1..27 {
            let expected = if ell % 3 == 0 { 9 } else { 3 };
            assert_eq!(class_count(&f4, 27, &[0, ell]).unwrap(), expected);
        }
    }

    #[test]
    fn constacyclic_support_is_supported() {
        let f = gf(3, 2);
        // lambda ~_n mu iff mu / lambda is an n-th power
        let n = 6;
        let idx = class_representatives(&f, n, &[0]).unwrap();
        assert_eq!(idx.count, 2);
        for lambda in f.nonzero_by_log() {
            for mu in f.nonzero_by_log() {
                let a = AmbientSpace::from_support(&f, n, &[0], &[lambda]).unwrap();
                let b = AmbientSpace::from_support(&f, n, &[0], &[mu]).unwrap();
                let ratio = f.div(mu, lambda).unwrap();
                let power = f.nonzero_by_log().any(|x| f.pow(x, n as u64) == ratio);
                assert_eq!(is_equivalent(&a, &b).unwrap(), power);
            }
        }
    }

    #[test]
    fn example_one_representatives_and_canonical_form() {
        let f = gf(3, 1);
        let idx = class_representatives(&f, 27, &[0, 9]).unwrap();
        let vals: Vec<Vec<Elem>> = idx.reps.iter().map(|r| r.support_values()).collect();
        assert_eq!(vals, vec![vec![Elem(1), Elem(1)], vec![Elem(1), Elem(2)]]);
        let a = AmbientSpace::trinomial(&f, 27, 9, Elem(2), Elem(1)).unwrap();
        let (rep, w) = canonicalize(&a).unwrap();
        assert_eq!(rep.support_values(), vec![Elem(1), Elem(1)]);
        assert_eq!(w.alpha, Elem(2));
        assert_eq!(w.source, a);
        assert!(w.is_valid());
        let (rep, w) = canonicalize(&idx.reps[1]).unwrap();
        assert_eq!(rep, idx.reps[1]);
        assert_eq!(w.alpha, Elem::ONE);
    }

    #[test]
    fn general_example_representatives() {
        let f = gf(3, 1);
        let idx = class_representatives(&f, 12, &[0, 1, 7]).unwrap();
        let mut vals: Vec<Vec<u32>> = idx
            .reps
            .iter()
            .map(|r| r.support_values().iter().map(|e| e.0).collect())
            .collect();
        vals.sort();
        assert_eq!(vals, vec![vec![1, 1, 1], vec![1, 1, 2], vec![2, 1, 1], vec![2, 1, 2]]);
    }

    #[test]
    fn gf4_length_27_representatives() {
        let f = gf(2, 2);
        let xi = f.xi();
        let idx = class_representatives(&f, 27, &[0, 8]).unwrap();
        let vals: Vec<Vec<Elem>> = idx.reps.iter().map(|r| r.support_values()).collect();
        assert_eq!(
            vals,
            vec![
                vec![Elem::ONE, Elem::ONE],
                vec![xi, Elem::ONE],
                vec![f.mul(xi, xi), Elem::ONE]
            ]
        );
    }

    #[test]
    fn unit_trinomial_test_examples() {
        let f = gf(3, 1);
        let unit = AmbientSpace::trinomial(&f, 27, 9, Elem(1), Elem(1)).unwrap();
        assert_eq!(unit_trinomial_test(&unit).unwrap(), Some(Elem::ONE));
        let a = AmbientSpace::trinomial(&f, 27, 9, Elem(2), Elem(1)).unwrap();
        assert_eq!(unit_trinomial_test(&a).unwrap(), Some(Elem(2)));
        let f9 = gf(3, 2);
        for ell in 0..2u32 {
            let small = 3usize.pow(ell);
            let n = 3usize.pow(ell + 2);
            for a0 in f9.nonzero_by_log() {
                let a = AmbientSpace::trinomial(&f9, n, small, a0, Elem::ONE).unwrap();
                let got = unit_trinomial_test(&a).unwrap();
                assert!(got.is_some());
                let u = AmbientSpace::unit(&f9, n, &[0, small]).unwrap();
                assert_eq!(got, witness_scalars(&a, &u).unwrap().first().copied());
            }
        }
        let c = AmbientSpace::from_support(&f, 12, &[0, 1, 7], &[Elem(1); 3]).unwrap();
        assert_eq!(unit_trinomial_test(&c), Err(Error::NotTrinomial));
    }

    #[test]
    fn coprime_exponents_make_every_compatible_family_unit_equivalent() {
        // gcd(n, n - ell) = 1: the conditions reduce to a single x - c root
        let f = gf(5, 1);
        let (n, ell) = (7, 3);
        for a0 in f.nonzero_by_log() {
            for al in f.nonzero_by_log() {
                let a = AmbientSpace::trinomial(&f, n, ell, a0, al).unwrap();
                let u = AmbientSpace::unit(&f, n, &[0, ell]).unwrap();
                let got = unit_trinomial_test(&a).unwrap();
                assert_eq!(got.is_some(), is_equivalent(&a, &u).unwrap());
            }
        }
    }

    #[test]
    fn constacyclic_condition_is_necessary_but_not_sufficient() {
        let f = gf(3, 2);
        let n = 12;
        let mut counterexample = None;
        for ell in 1..n {
            for a in f.nonzero_by_log() {
                for b in f.nonzero_by_log() {
                    let x = AmbientSpace::unit(&f, n, &[0, ell]).unwrap();
                    let y = AmbientSpace::trinomial(&f, n, ell, a, b).unwrap();
                    let eq = is_equivalent(&x, &y).unwrap();
                    let nec = constacyclic_necessary(&x, &y).unwrap();
                    assert!(!eq || nec);
                    if nec && !eq && counterexample.is_none() {
                        counterexample = Some((ell, a, b));
                    }
                }
            }
        }
        assert!(counterexample.is_some());
    }

    #[test]
    fn map_generator_examples() {
        let f = gf(3, 1);
        let src = AmbientSpace::trinomial(&f, 27, 9, Elem(1), Elem(1)).unwrap();
        let tgt = AmbientSpace::trinomial(&f, 27, 9, Elem(2), Elem(1)).unwrap();
        let w = witnesses(&tgt, &src).unwrap().remove(0);
        assert_eq!(w.alpha, Elem(2));
        let base = Poly::from_ints(&f, &[-1, -1, 0, 1]);
        for j in 0..=9u64 {
            let g = base.pow(j);
            let img = map_generator(&w, &g).unwrap();
            assert_eq!(img.degree(), g.degree());
            let expected = base.substitute_scaled(Elem(2)).monic().pow(j);
            assert_eq!(img, expected);
            assert!(tgt.modulus().is_divisible_by(&img).unwrap());
        }
        assert!(map_generator(&w, &Poly::one(&f)).unwrap().is_one());
        let id = witnesses(&src, &src).unwrap().remove(0);
        assert_eq!(map_generator(&id, &base).unwrap(), base);
        let not_div = Poly::from_ints(&f, &[1, 1]);
        assert_eq!(map_generator(&w, &not_div), Err(Error::NotADivisor));
    }
}
