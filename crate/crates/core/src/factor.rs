//! Complete factorization over `GF(q)`: square-free decomposition (with
//! p-th root descent), distinct-degree splitting and equal-degree splitting
//! (Cantor–Zassenhaus for odd `q`, trace map for even `q`).

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::arith;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef, GaloisField};
use crate::poly::{
    add_slices, divrem_slices, gcd_slices, monic_slices, mulmod_slices, sub_slices, trim, Poly,
};

/// Seed for the equal-degree splitting stream; any seed gives the same
/// (sorted) factorization.
const EDF_SEED: u64 = 0x706f_6c79_6379_636c;

/// `unit * prod factor^mult`, factors monic irreducible, pairwise distinct,
/// sorted by degree and then by coefficient tuple (constant term first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Elem,
    pub factors: Vec<(Poly, u32)>,
    field: FieldRef,
}

impl Factorization {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    /// Multiplies the factorization back out.
    pub fn product(&self) -> Poly {
        let mut acc = Poly::constant(&self.field, self.unit);
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m as u64)).expect("same field");
        }
        acc
    }

    /// Number of monic divisors, `prod (mult_i + 1)`.
    pub fn divisor_count(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, (_, m)| acc.saturating_mul(*m as u128 + 1))
    }

    /// Streams the monic divisors in nondecreasing degree order.
    pub fn divisors(&self) -> MonicDivisors {
        MonicDivisors::new(self)
    }
}

/// Factors a nonzero polynomial completely.
pub fn factor(f: &Poly) -> Result<Factorization> {
    let unit = f.lead().ok_or(Error::ZeroPoly)?;
    let field = f.field().clone();
    let monic = monic_slices(&field, f.coeffs().to_vec());
    let mut acc: BTreeMap<Vec<Elem>, u32> = BTreeMap::new();
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    for (part, mult) in square_free(&field, monic) {
        for (d, block) in distinct_degree(&field, part) {
            for irr in equal_degree(&field, block, d, &mut rng) {
                *acc.entry(irr).or_insert(0) += mult;
            }
        }
    }
    let mut factors: Vec<(Poly, u32)> = acc
        .into_iter()
        .map(|(c, m)| (Poly::new(&field, c), m))
        .collect();
    factors.sort_by(|(a, _), (b, _)| {
        a.coeffs()
            .len()
            .cmp(&b.coeffs().len())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(Factorization { unit, factors, field })
}

/// Streams every monic divisor of `f`.
pub fn monic_divisors(f: &Poly) -> Result<MonicDivisors> {
    Ok(factor(f)?.divisors())
}

fn x_slice() -> Vec<Elem> {
    vec![Elem::ZERO, Elem::ONE]
}

fn derivative(f: &GaloisField, a: &[Elem]) -> Vec<Elem> {
    let mut out: Vec<Elem> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
        .collect();
    trim(&mut out);
    out
}

fn exact_div(f: &GaloisField, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let (q, r) = divrem_slices(f, a, b);
    debug_assert!(r.is_empty());
    q
}

/// p-th root of a polynomial whose exponents are all multiples of p.
fn pth_root(f: &GaloisField, a: &[Elem]) -> Vec<Elem> {
    let p = f.characteristic() as usize;
    a.iter()
        .step_by(p)
        .map(|&c| f.frobenius_inverse_root(c, 1))
        .collect()
}

/// Square-free decomposition of a monic polynomial into pairwise coprime
/// square-free parts with multiplicities.
fn square_free(f: &GaloisField, a: Vec<Elem>) -> Vec<(Vec<Elem>, u32)> {
    let mut out = Vec::new();
    if a.len() <= 1 {
        return out;
    }
    let p = f.characteristic();
    let da = derivative(f, &a);
    if da.is_empty() {
        for (part, m) in square_free(f, pth_root(f, &a)) {
            out.push((part, m * p));
        }
        return out;
    }
    let mut c = gcd_slices(f, &a, &da);
    let mut w = exact_div(f, &a, &c);
    let mut i = 1u32;
    while w.len() > 1 {
        let y = gcd_slices(f, &w, &c);
        let fac = exact_div(f, &w, &y);
        if fac.len() > 1 {
            out.push((fac, i));
        }
        w = y;
        c = exact_div(f, &c, &w);
        i += 1;
    }
    if c.len() > 1 {
        for (part, m) in square_free(f, pth_root(f, &c)) {
            out.push((part, m * p));
        }
    }
    out
}

/// `h^q mod m`.
fn frobenius_mod(f: &GaloisField, h: &[Elem], m: &[Elem]) -> Vec<Elem> {
    let mut e = f.order() as u64;
    let mut acc = vec![Elem::ONE];
    let mut base = h.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_slices(f, &acc, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod_slices(f, &base, &base, m);
        }
    }
    acc
}

fn distinct_degree(f: &GaloisField, a: Vec<Elem>) -> Vec<(usize, Vec<Elem>)> {
    let mut out = Vec::new();
    let mut rest = a;
    let mut h = divrem_slices(f, &x_slice(), &rest).1;
    let mut d = 1usize;
    while rest.len() > 2 * d {
        h = frobenius_mod(f, &h, &rest);
        let g = gcd_slices(f, &sub_slices(f, &h, &x_slice()), &rest);
        if g.len() > 1 {
            rest = exact_div(f, &rest, &g);
            h = divrem_slices(f, &h, &rest).1;
            out.push((d, g));
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push((rest.len() - 1, rest));
    }
    out
}

fn equal_degree(
    f: &GaloisField,
    a: Vec<Elem>,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<Elem>> {
    let n = a.len() - 1;
    if n == d {
        return vec![a];
    }
    let q = f.order();
    loop {
        let mut h: Vec<Elem> = (0..n).map(|_| Elem(rng.next_u32() % q)).collect();
        trim(&mut h);
        if h.len() < 2 {
            continue;
        }
        let probe = if f.characteristic() == 2 {
            // absolute trace of h over GF(2^(s d))
            let rounds = f.degree() as usize * d;
            let mut term = h.clone();
            let mut acc = term.clone();
            for _ in 1..rounds {
                term = mulmod_slices(f, &term, &term, &a);
                acc = add_slices(f, &acc, &term);
            }
            acc
        } else {
            // h^((q^d - 1)/2) = (prod_{i<d} h^(q^i))^((q-1)/2)
            let mut term = divrem_slices(f, &h, &a).1;
            let mut norm = term.clone();
            for _ in 1..d {
                term = frobenius_mod(f, &term, &a);
                norm = mulmod_slices(f, &norm, &term, &a);
            }
            let mut e = (q as u64 - 1) / 2;
            let mut acc = vec![Elem::ONE];
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod_slices(f, &acc, &norm, &a);
                }
                e >>= 1;
                if e > 0 {
                    norm = mulmod_slices(f, &norm, &norm, &a);
                }
            }
            sub_slices(f, &acc, &[Elem::ONE])
        };
        let g = gcd_slices(f, &probe, &a);
        if g.len() > 1 && g.len() < a.len() {
            let other = exact_div(f, &a, &g);
            let mut out = equal_degree(f, g, d, rng);
            out.extend(equal_degree(f, monic_slices(f, other), d, rng));
            return out;
        }
    }
}

/// Rabin's test: `x^(q^n) = x mod f` and `gcd(x^(q^(n/r)) - x, f) = 1` for
/// every prime `r | n`.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let field = f.field();
    let m = f.coeffs();
    let x = x_slice();
    let frob_iter = |k: usize| {
        let mut h = divrem_slices(field, &x, m).1;
        for _ in 0..k {
            h = frobenius_mod(field, &h, m);
        }
        h
    };
    if sub_slices(field, &frob_iter(n), &x) != Vec::<Elem>::new() {
        return false;
    }
    arith::prime_divisors(n as u64).into_iter().all(|r| {
        let h = sub_slices(field, &frob_iter(n / r as usize), &x);
        gcd_slices(field, &h, m).len() == 1
    })
}

/// Iterator over the monic divisors of a factored polynomial, by degree and
/// then by exponent tuple.
pub struct MonicDivisors {
    field: FieldRef,
    degrees: Vec<usize>,
    mults: Vec<u32>,
    powers: Vec<Vec<Poly>>,
    suffix_max: Vec<usize>,
    target: usize,
    max_degree: usize,
    pending: VecDeque<Vec<u32>>,
}

impl MonicDivisors {
    fn new(fac: &Factorization) -> Self {
        let degrees: Vec<usize> = fac
            .factors
            .iter()
            .map(|(f, _)| f.degree().expect("nonconstant"))
            .collect();
        let mults: Vec<u32> = fac.factors.iter().map(|(_, m)| *m).collect();
        let powers = fac
            .factors
            .iter()
            .map(|(f, m)| {
                let mut v = Vec::with_capacity(*m as usize + 1);
                let mut acc = Poly::one(f.field());
                v.push(acc.clone());
                for _ in 0..*m {
                    acc = acc.mul(f).expect("same field");
                    v.push(acc.clone());
                }
                v
            })
            .collect();
        let mut suffix_max = vec![0usize; degrees.len() + 1];
        for i in (0..degrees.len()).rev() {
            suffix_max[i] = suffix_max[i + 1] + degrees[i] * mults[i] as usize;
        }
        MonicDivisors {
            field: fac.field.clone(),
            max_degree: suffix_max[0],
            degrees,
            mults,
            powers,
            suffix_max,
            target: 0,
            pending: VecDeque::new(),
        }
    }

    fn fill(&mut self, idx: usize, remaining: usize, cur: &mut Vec<u32>) {
        if idx == self.degrees.len() {
            if remaining == 0 {
                self.pending.push_back(cur.clone());
            }
            return;
        }
        if remaining > self.suffix_max[idx] {
            return;
        }
        let deg = self.degrees[idx];
        for e in 0..=self.mults[idx] {
            let used = deg * e as usize;
            if used > remaining {
                break;
            }
            cur.push(e);
            self.fill(idx + 1, remaining - used, cur);
            cur.pop();
        }
    }
}

impl Iterator for MonicDivisors {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        while self.pending.is_empty() {
            if self.target > self.max_degree {
                return None;
            }
            let target = self.target;
            let mut cur = Vec::with_capacity(self.degrees.len());
            self.fill(0, target, &mut cur);
            self.target += 1;
        }
        let exps = self.pending.pop_front()?;
        let mut acc = Poly::one(&self.field);
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&self.powers[i][e as usize]).expect("same field");
            }
        }
        Some(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaloisField;

    fn gf(p: u32, s: u32) -> FieldRef {
        GaloisField::with_order(p, s).unwrap()
    }

    #[test]
    fn tower_trinomial_over_gf3() {
        let f = gf(3, 1);
        let mut c = vec![Elem::ZERO; 28];
        c[27] = Elem::ONE;
        c[9] = f.from_int(-1);
        c[0] = f.from_int(-1);
        let target = Poly::new(&f, c);
        let fac = factor(&target).unwrap();
        let base = Poly::from_ints(&f, &[-1, -1, 0, 1]);
        assert_eq!(fac.factors, vec![(base, 9)]);
        assert_eq!(fac.unit, Elem::ONE);
        assert_eq!(fac.divisor_count(), 10);
    }

    #[test]
    fn x2_minus_1_over_gf3() {
        let f = gf(3, 1);
        let fac = factor(&Poly::from_ints(&f, &[-1, 0, 1])).unwrap();
        assert_eq!(
            fac.factors,
            vec![
                (Poly::from_ints(&f, &[1, 1]), 1),
                (Poly::from_ints(&f, &[2, 1]), 1)
            ]
        );
        let divs: Vec<Poly> = fac.divisors().collect();
        assert_eq!(divs.len(), 4);
        assert!(divs[0].is_one());
        assert_eq!(divs[3], Poly::from_ints(&f, &[-1, 0, 1]));
    }

    #[test]
    fn x9_minus_x_minus_1_over_gf9_splits_into_trace_one_cubics() {
        let f = gf(3, 2);
        let mut c = vec![Elem::ZERO; 10];
        c[9] = Elem::ONE;
        c[1] = f.from_int(-1);
        c[0] = f.from_int(-1);
        let fac = factor(&Poly::new(&f, c)).unwrap();
        assert_eq!(fac.factors.len(), 3);
        let xi = f.xi();
        let mut betas: Vec<Elem> = fac
            .factors
            .iter()
            .map(|(g, m)| {
                assert_eq!(*m, 1);
                assert_eq!(g.degree(), Some(3));
                assert_eq!(g.coeff(1), f.from_int(-1));
                assert_eq!(g.coeff(2), Elem::ZERO);
                f.neg(g.coeff(0))
            })
            .collect();
        betas.sort();
        let mut expected = vec![xi, Elem(2), f.pow(xi, 3)];
        expected.sort();
        assert_eq!(betas, expected);
    }

    #[test]
    fn zero_poly_is_rejected() {
        let f = gf(2, 1);
        assert_eq!(factor(&Poly::zero(&f)).unwrap_err(), Error::ZeroPoly);
        assert!(monic_divisors(&Poly::zero(&f)).is_err());
    }

    #[test]
    fn constants_have_empty_factor_list() {
        let f = gf(5, 1);
        let fac = factor(&Poly::constant(&f, Elem(3))).unwrap();
        assert!(fac.factors.is_empty());
        assert_eq!(fac.unit, Elem(3));
        assert_eq!(fac.divisors().count(), 1);
    }

    #[test]
    fn irreducible_has_two_divisors() {
        let f = gf(3, 1);
        let g = Poly::from_ints(&f, &[1, 1, 0, 2]);
        let divs: Vec<Poly> = monic_divisors(&g).unwrap().collect();
        assert_eq!(divs, vec![Poly::one(&f), g.monic()]);
    }

    #[test]
    fn divisors_stream_by_degree_and_divide() {
        let f = gf(3, 1);
        let g = Poly::binomial(&f, 12, Elem::ONE);
        let fac = factor(&g).unwrap();
        let divs: Vec<Poly> = fac.divisors().collect();
        assert_eq!(divs.len() as u128, fac.divisor_count());
        for w in divs.windows(2) {
            assert!(w[0].degree() <= w[1].degree());
        }
        for d in &divs {
            assert!(d.is_monic());
            assert!(g.is_divisible_by(d).unwrap());
        }
    }

    #[test]
    fn rabin_agrees_with_root_count_for_low_degree() {
        let f = gf(3, 1);
        for idx in 0..27u32 {
            let c = [idx % 3, (idx / 3) % 3, idx / 9, 1];
            let g = Poly::new(&f, c.iter().map(|&v| Elem(v)).collect());
            let has_root = f.elements().any(|a| g.eval(a).is_zero());
            assert_eq!(is_irreducible(&g), !has_root, "{g}");
        }
    }
}
