//! Table-backed arithmetic in `GF(p^s)`.
//!
//! Elements are stored packed: the polynomial-basis coordinates
//! `(c_0, ..., c_{s-1})` over `GF(p)` become the integer `sum c_i p^i`.
//! Multiplication goes through discrete-log tables with respect to the
//! designated primitive element `xi`; addition of two nonzero elements uses
//! Zech logarithms, with shortcuts for binary and prime fields.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

const NONE: u32 = u32::MAX;

/// An element of some [`GaloisField`], in packed polynomial-basis form.
///
/// Elements carry no field reference; all arithmetic goes through the
/// owning field. `Elem(0)` is zero and `Elem(1)` is one in every field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Shared handle to an immutable field context.
pub type FieldRef = Arc<GaloisField>;

/// Conway polynomials for the bundled orders, constant term first, monic
/// leading coefficient omitted.
const DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1]),
    (3, 1, &[1]),
    (5, 1, &[3]),
    (7, 1, &[4]),
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (5, 2, &[2, 4]),
];

/// The finite field `GF(p^s)` with its modulus, primitive element and
/// exp/log/Zech tables.
pub struct GaloisField {
    p: u32,
    s: u32,
    q: u32,
    modulus: Vec<u32>,
    xi: Elem,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    neg_one_log: u32,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s == other.s && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.p)
            .field("s", &self.s)
            .field("modulus", &self.modulus)
            .field("xi", &self.xi)
            .finish()
    }
}

impl GaloisField {
    /// Builds `GF(p^s)`.
    ///
    /// `modulus` lists the coefficients of a monic degree-`s` polynomial over
    /// `GF(p)`, constant term first; the leading 1 may be omitted. When it is
    /// `None` a bundled Conway polynomial is used, falling back to the
    /// smallest irreducible polynomial for orders outside the bundle.
    pub fn new(p: u32, s: u32, modulus: Option<&[u32]>) -> Result<FieldRef> {
        if !arith::is_prime(p as u64) {
            return Err(Error::NonPrimeP(p as u64));
        }
        if s == 0 {
            return Err(Error::InvalidModulus { expected: 0 });
        }
        let order = (p as u64).checked_pow(s).filter(|&q| q <= MAX_ORDER);
        let q = order.ok_or(Error::FieldTooLarge(
            (p as u64).saturating_pow(s),
        ))? as u32;

        let modulus = match modulus {
            Some(c) => {
                let mut m = c.to_vec();
                if m.len() == s as usize {
                    m.push(1);
                }
                if m.len() != s as usize + 1 || m[s as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus { expected: s });
                }
                if !fp_poly::is_irreducible(p, &m) {
                    return Err(Error::ReducibleModulus(p));
                }
                m
            }
            None => match DEFAULT_MODULI.iter().find(|(pp, ss, _)| *pp == p && *ss == s) {
                Some((_, _, c)) => {
                    let mut m = c.to_vec();
                    m.push(1);
                    m
                }
                None => fp_poly::smallest_irreducible(p, s),
            },
        };

        let mut field = GaloisField {
            p,
            s,
            q,
            modulus,
            xi: Elem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
            zech: Vec::new(),
            neg_one_log: 0,
        };
        field.build_tables();
        Ok(Arc::new(field))
    }

    /// `GF(p^s)` with the default modulus.
    pub fn with_order(p: u32, s: u32) -> Result<FieldRef> {
        Self::new(p, s, None)
    }

    fn build_tables(&mut self) {
        let order = self.q - 1;
        let primes = arith::prime_divisors(order as u64);
        let xi = (1..self.q)
            .find(|&c| {
                primes
                    .iter()
                    .all(|&r| self.slow_pow(c, order as u64 / r) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic");
        self.xi = Elem(xi);

        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![NONE; self.q as usize];
        let mut cur = 1u32;
        for t in 0..order {
            exp[t as usize] = cur;
            exp[(t + order) as usize] = cur;
            log[cur as usize] = t;
            cur = self.slow_mul(cur, xi);
        }
        debug_assert_eq!(cur, 1);
        let mut zech = vec![NONE; order as usize];
        for t in 0..order {
            let sum = self.slow_add(1, exp[t as usize]);
            zech[t as usize] = log[sum as usize];
        }
        self.neg_one_log = if self.p == 2 { 0 } else { order / 2 };
        self.exp = exp;
        self.log = log;
        self.zech = zech;
    }

    fn digits(&self, mut v: u32) -> Vec<u32> {
        let mut d = vec![0u32; self.s as usize];
        for slot in d.iter_mut() {
            *slot = v % self.p;
            v /= self.p;
        }
        d
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let s = self.s as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * s - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for i in (s..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus[..s].iter().enumerate() {
                let sub = c * m as u64 % p;
                prod[i - s + j] = (prod[i - s + j] + p - sub) % p;
            }
        }
        let reduced: Vec<u32> = prod[..s].iter().map(|&c| c as u32).collect();
        self.pack(&reduced)
    }

    fn slow_pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, a);
            }
            a = self.slow_mul(a, a);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.s
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Order of the multiplicative group, `q - 1`.
    #[inline]
    pub fn group_order(&self) -> u32 {
        self.q - 1
    }

    /// Modulus coefficients, constant term first, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The designated primitive element: the smallest packed value of
    /// multiplicative order `q - 1`.
    #[inline]
    pub fn xi(&self) -> Elem {
        self.xi
    }

    /// Polynomial-basis coordinates of `a`, constant coordinate first.
    pub fn coords(&self, a: Elem) -> Vec<u32> {
        self.digits(a.0)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Option<Elem> {
        if coords.len() > self.s as usize || coords.iter().any(|&c| c >= self.p) {
            return None;
        }
        Some(Elem(self.pack(coords)))
    }

    /// Checks that a packed value is a valid element of this field.
    pub fn elem(&self, packed: u32) -> Option<Elem> {
        (packed < self.q).then_some(Elem(packed))
    }

    /// Image of an integer under `Z -> GF(p)`.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn exp(&self, t: u64) -> Elem {
        Elem(self.exp[(t % (self.q as u64 - 1)) as usize])
    }

    /// Discrete log base `xi`; `None` for zero.
    #[inline]
    pub fn log(&self, a: Elem) -> Option<u32> {
        match self.log[a.0 as usize] {
            NONE => None,
            t => Some(t),
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.s == 1 {
            return Elem((a.0 + b.0) % self.p);
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let order = self.q - 1;
        let t = if lb >= la { lb - la } else { lb + order - la };
        match self.zech[t as usize] {
            NONE => Elem::ZERO,
            z => Elem(self.exp[(la + z) as usize]),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 || a.0 == 0 {
            return a;
        }
        if self.s == 1 {
            return Elem(self.p - a.0);
        }
        Elem(self.exp[(self.log[a.0 as usize] + self.neg_one_log) as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        let la = self.log(a)?;
        let order = self.q - 1;
        Some(Elem(self.exp[((order - la) % order) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        Some(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        match self.log(a) {
            None => Elem::ZERO,
            Some(la) => {
                let order = (self.q - 1) as u128;
                let t = (la as u128 * (e as u128 % order)) % order;
                Elem(self.exp[t as usize])
            }
        }
    }

    /// `a^e` for signed `e`; negative powers of zero are undefined.
    pub fn pow_signed(&self, a: Elem, e: i64) -> Option<Elem> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            Some(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// Frobenius map `a -> a^p`.
    #[inline]
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p as u64)
    }

    /// All elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q).map(Elem)
    }

    /// Nonzero elements ordered by discrete log: `1, xi, xi^2, ...`.
    pub fn nonzero_by_log(&self) -> impl Iterator<Item = Elem> + '_ {
        self.exp[..(self.q - 1) as usize].iter().map(|&v| Elem(v))
    }

    /// Smallest `t >= 1` with `a^t = 1`.
    pub fn mul_order(&self, a: Elem) -> Result<u64> {
        let la = self.log(a).ok_or(Error::ZeroElement)? as u64;
        let order = (self.q - 1) as u64;
        Ok(order / arith::gcd(la, order))
    }

    /// All `x` in `GF(q)*` with `x^n = a`, sorted by discrete log.
    ///
    /// Solved as the linear congruence `n t = log(a) (mod q - 1)`.
    pub fn nth_root_solutions(&self, a: Elem, n: u64) -> Result<Vec<Elem>> {
        let la = self.log(a).ok_or(Error::ZeroElement)? as u64;
        let order = (self.q - 1) as u64;
        let d = arith::gcd(n, order);
        if !la.is_multiple_of(d) {
            return Ok(Vec::new());
        }
        let m = order / d;
        let inv = arith::mod_inverse((n / d) % m, m).expect("n/d is a unit mod (q-1)/d");
        let t0 = ((la / d) as u128 * inv as u128 % m as u128) as u64;
        Ok((0..d).map(|k| self.exp(t0 + k * m)).collect())
    }

    /// The unique `b` with `b^(p^r) = a`, via `r` applications of the
    /// inverse Frobenius `a -> a^(p^(s-1))`.
    pub fn frobenius_inverse_root(&self, a: Elem, r: u32) -> Elem {
        let inv_frob = (self.p as u64).pow(self.s - 1);
        let mut b = a;
        for _ in 0..(r % self.s) {
            b = self.pow(b, inv_frob);
        }
        b
    }

    /// Whether `a` lies in the subfield of order `p^r`.
    pub fn in_subfield(&self, a: Elem, r: u32) -> bool {
        self.pow(a, (self.p as u64).pow(r)) == a
    }

    /// `Tr_{GF(q)/GF(p^r)}(a) = sum_{i < s/r} a^(p^(r i))`.
    pub fn trace_to_subfield(&self, a: Elem, r: u32) -> Result<Elem> {
        if r == 0 || !self.s.is_multiple_of(r) {
            return Err(Error::NotASubfield { r, s: self.s });
        }
        let step = (self.p as u64).pow(r);
        let mut term = a;
        let mut acc = Elem::ZERO;
        for _ in 0..self.s / r {
            acc = self.add(acc, term);
            term = self.pow(term, step);
        }
        Ok(acc)
    }

    /// Absolute trace to the prime field.
    pub fn absolute_trace(&self, a: Elem) -> Elem {
        self.trace_to_subfield(a, 1).expect("1 divides s")
    }

    /// `0` or `z^k` with `k` the discrete log.
    pub fn fmt_elem(&self, a: Elem) -> String {
        match self.log(a) {
            None => String::from("0"),
            Some(k) => format!("z^{k}"),
        }
    }
}

/// Prime-field polynomial routines used only to validate moduli.
mod fp_poly {
    use alloc::vec;
    use alloc::vec::Vec;

    use crate::arith;

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn inv(a: u64, p: u64) -> u64 {
        arith::mod_inverse(a, p).expect("nonzero mod prime")
    }

    fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv(m[dm], p);
        while r.len() > dm {
            let c = r[r.len() - 1] * lead_inv % p;
            let shift = r.len() - 1 - dm;
            for (j, &mj) in m.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - c * mj % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, m, p)
    }

    fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        acc
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// `x^(p^k) mod m`, by repeated p-th powering.
    fn x_pow_pk(k: u32, m: &[u64], p: u64) -> Vec<u64> {
        let mut cur = rem(&[0, 1], m, p);
        for _ in 0..k {
            cur = powmod(&cur, p, m, p);
        }
        cur
    }

    fn sub_x(v: &[u64], p: u64) -> Vec<u64> {
        let mut v = v.to_vec();
        if v.len() < 2 {
            v.resize(2, 0);
        }
        v[1] = (v[1] + p - 1) % p;
        trim(&mut v);
        v
    }

    /// Exhaustive divisor search for degree <= 4, Rabin's test otherwise.
    pub(super) fn is_irreducible(p: u32, m: &[u32]) -> bool {
        let p = p as u64;
        let m: Vec<u64> = m.iter().map(|&c| c as u64).collect();
        let n = m.len() - 1;
        if n <= 1 {
            return n == 1;
        }
        if n <= 4 {
            for d in 1..=n / 2 {
                let count = p.pow(d as u32);
                for idx in 0..count {
                    let mut cand = Vec::with_capacity(d + 1);
                    let mut v = idx;
                    for _ in 0..d {
                        cand.push(v % p);
                        v /= p;
                    }
                    cand.push(1);
                    if rem(&m, &cand, p).is_empty() {
                        return false;
                    }
                }
            }
            return true;
        }
        let n = n as u32;
        if sub_x(&x_pow_pk(n, &m, p), p) != Vec::<u64>::new() {
            return false;
        }
        arith::prime_divisors(n as u64).into_iter().all(|r| {
            let h = sub_x(&x_pow_pk(n / r as u32, &m, p), p);
            gcd(&m, &h, p).len() == 1
        })
    }

    /// Lexicographically smallest monic irreducible polynomial of degree `s`.
    pub(super) fn smallest_irreducible(p: u32, s: u32) -> Vec<u32> {
        let count = (p as u64).pow(s);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(s as usize + 1);
            let mut v = idx;
            for _ in 0..s {
                cand.push((v % p as u64) as u32);
                v /= p as u64;
            }
            cand.push(1);
            if is_irreducible(p, &cand) {
                return cand;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, s: u32) -> FieldRef {
        GaloisField::with_order(p, s).unwrap()
    }

    /// Orders shipped with a default modulus.
    pub(crate) const BUNDLED: &[(u32, u32)] = &[
        (2, 1),
        (3, 1),
        (2, 2),
        (5, 1),
        (7, 1),
        (2, 3),
        (3, 2),
        (2, 4),
        (5, 2),
        (3, 3),
        (2, 5),
        (2, 6),
        (3, 4),
        (2, 7),
        (3, 5),
    ];

    #[test]
    fn bundled_fields_build_and_are_consistent() {
        for &(p, s) in BUNDLED {
            let f = gf(p, s);
            assert_eq!(f.mul_order(f.xi()).unwrap(), (f.order() - 1) as u64);
            for a in f.elements().skip(1) {
                assert_eq!(f.exp(f.log(a).unwrap() as u64), a);
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
            }
        }
    }

    #[test]
    fn conway_moduli_make_x_primitive() {
        for &(p, s) in BUNDLED.iter().filter(|(_, s)| *s > 1) {
            assert_eq!(gf(p, s).xi(), Elem(p), "GF({p}^{s})");
        }
    }

    #[test]
    fn prime_field_primitive_roots() {
        assert_eq!(gf(3, 1).xi(), Elem(2));
        assert_eq!(gf(5, 1).xi(), Elem(2));
        assert_eq!(gf(7, 1).xi(), Elem(3));
    }

    #[test]
    fn gf4_from_explicit_modulus() {
        let f = GaloisField::new(2, 2, Some(&[1, 1])).unwrap();
        let xi = f.xi();
        assert_eq!(f.mul(xi, xi), f.add(xi, Elem::ONE));
        // exhaustive table against packed carry-less arithmetic mod x^2+x+1
        for a in 0..4u32 {
            for b in 0..4u32 {
                let mut prod = 0u32;
                for i in 0..2 {
                    if (b >> i) & 1 == 1 {
                        prod ^= a << i;
                    }
                }
                if prod & 4 != 0 {
                    prod ^= 0b111;
                }
                assert_eq!(f.mul(Elem(a), Elem(b)), Elem(prod));
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(GaloisField::new(4, 1, None).unwrap_err(), Error::NonPrimeP(4));
        assert_eq!(
            GaloisField::new(2, 2, Some(&[1, 0])).unwrap_err(),
            Error::ReducibleModulus(2)
        );
        assert!(matches!(
            GaloisField::new(2, 21, None).unwrap_err(),
            Error::FieldTooLarge(_)
        ));
        assert!(GaloisField::new(3, 2, Some(&[1, 0, 2])).is_err());
    }

    #[test]
    fn unbundled_orders_fall_back_to_smallest_irreducible() {
        let f = gf(11, 2);
        assert_eq!(f.order(), 121);
        assert_eq!(f.mul_order(f.xi()).unwrap(), 120);
        let f = gf(2, 9);
        assert_eq!(f.mul_order(f.xi()).unwrap(), 511);
    }

    #[test]
    fn mul_order_examples() {
        let f3 = gf(3, 1);
        assert_eq!(f3.mul_order(Elem(2)).unwrap(), 2);
        let f9 = gf(3, 2);
        assert_eq!(f9.mul_order(f9.xi()).unwrap(), 8);
        let f4 = gf(2, 2);
        // brute force powers
        let mut t = 1;
        let mut acc = f4.xi();
        while acc != Elem::ONE {
            acc = f4.mul(acc, f4.xi());
            t += 1;
        }
        assert_eq!(f4.mul_order(f4.xi()).unwrap(), t);
        assert_eq!(t, 3);
        assert_eq!(f4.mul_order(Elem::ZERO), Err(Error::ZeroElement));
    }

    fn brute_roots(f: &GaloisField, a: Elem, n: u64) -> Vec<Elem> {
        let mut v: Vec<Elem> = f.nonzero_by_log().filter(|&x| f.pow(x, n) == a).collect();
        v.sort_by_key(|&x| f.log(x));
        v
    }

    #[test]
    fn nth_roots_examples() {
        let f9 = gf(3, 2);
        assert_eq!(f9.nth_root_solutions(Elem::ONE, 8).unwrap().len(), 8);
        let f5 = gf(5, 1);
        let mut r = f5.nth_root_solutions(Elem(4), 2).unwrap();
        r.sort();
        assert_eq!(r, [Elem(2), Elem(3)]);
        assert!(gf(7, 1).nth_root_solutions(Elem(3), 3).unwrap().is_empty());
        assert_eq!(f5.nth_root_solutions(Elem::ZERO, 2), Err(Error::ZeroElement));
    }

    #[test]
    fn nth_roots_match_brute_force() {
        for &(p, s) in BUNDLED.iter().filter(|(p, s)| p.pow(*s) <= 81) {
            let f = gf(p, s);
            for a in f.elements().skip(1) {
                for n in 1..=20u64 {
                    let got = f.nth_root_solutions(a, n).unwrap();
                    assert_eq!(got, brute_roots(&f, a, n));
                    let d = arith::gcd(n, f.group_order() as u64) as usize;
                    assert!(got.is_empty() || got.len() == d);
                }
            }
        }
    }

    #[test]
    fn frobenius_inverse_root_examples() {
        let f3 = gf(3, 1);
        assert_eq!(f3.frobenius_inverse_root(Elem(2), 5), Elem(2));
        let f9 = gf(3, 2);
        assert_eq!(f9.frobenius_inverse_root(Elem::ONE, 7), Elem::ONE);
        let xi = f9.xi();
        let b = f9.frobenius_inverse_root(xi, 1);
        assert_eq!(b, f9.pow(xi, 3));
        assert_eq!(f9.pow(b, 3), xi);
    }

    #[test]
    fn frobenius_inverse_round_trip() {
        for &(p, s) in BUNDLED {
            let f = gf(p, s);
            for a in f.elements() {
                for r in 0..=3u32 {
                    let b = f.frobenius_inverse_root(a, r);
                    assert_eq!(f.pow(b, (p as u64).pow(r)), a);
                }
            }
        }
    }

    #[test]
    fn trace_examples() {
        let f9 = gf(3, 2);
        assert_eq!(f9.trace_to_subfield(Elem::ONE, 1).unwrap(), Elem(2));
        let xi = f9.xi();
        let t = f9.trace_to_subfield(xi, 1).unwrap();
        assert_eq!(t, f9.add(xi, f9.pow(xi, 3)));
        // x^2 + 2x + 2: xi^3 = 2 xi + 1, so xi + xi^3 = 1
        assert_eq!(t, Elem::ONE);
        let f4 = gf(2, 2);
        assert_eq!(f4.trace_to_subfield(f4.xi(), 1).unwrap(), Elem::ONE);
        assert_eq!(
            f9.trace_to_subfield(xi, 3),
            Err(Error::NotASubfield { r: 3, s: 2 })
        );
    }

    #[test]
    fn trace_is_additive_and_onto() {
        for &(p, s) in BUNDLED.iter().filter(|(p, s)| p.pow(*s) <= 81) {
            let f = gf(p, s);
            for r in (1..=s).filter(|r| s % r == 0) {
                let mut image = std::collections::BTreeSet::new();
                for a in f.elements() {
                    let ta = f.trace_to_subfield(a, r).unwrap();
                    assert!(f.in_subfield(ta, r));
                    image.insert(ta);
                    for b in f.elements() {
                        let tb = f.trace_to_subfield(b, r).unwrap();
                        assert_eq!(f.trace_to_subfield(f.add(a, b), r).unwrap(), f.add(ta, tb));
                    }
                }
                assert_eq!(image.len() as u32, p.pow(r));
            }
        }
    }

    #[test]
    fn log_is_a_homomorphism() {
        for &(p, s) in BUNDLED.iter().filter(|(p, s)| p.pow(*s) <= 128) {
            let f = gf(p, s);
            let order = f.group_order();
            for a in f.elements().skip(1) {
                for b in f.elements().skip(1) {
                    let lhs = f.log(f.mul(a, b)).unwrap();
                    assert_eq!(lhs, (f.log(a).unwrap() + f.log(b).unwrap()) % order);
                }
            }
        }
    }
}
