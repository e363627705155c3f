//! Polycyclic codes: ideals `<g>` of `GF(q)[x]/<x^n - a(x)>` with `g`
//! dividing the modulus, their matrices and minimum distance.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::equiv::AmbientSpace;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef};
use crate::poly::{same_field, Poly};

/// Default work budget for [`Strategy::Auto`], in field operations.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest message space [`weight_distribution`] will walk.
pub const WEIGHT_DISTRIBUTION_LIMIT: u64 = 1_000_000;

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})", self.rows, self.cols)
    }
}

impl Matrix {
    pub fn zeros(field: &FieldRef, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &FieldRef, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Rows must share one length (`cols` is used when there are none).
    pub fn from_rows(field: &FieldRef, cols: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch);
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch);
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let s = self
                    .row(i)
                    .iter()
                    .zip(other.row(j))
                    .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    /// `v * self`, for `v` of length `rows`.
    pub fn encode(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (r, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(c, m));
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                let factor = self.get(i, c);
                if i == r || factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{v : self * v^T = 0}`, one vector per row.
    pub fn null_space(&self) -> Matrix {
        let f = &self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, Elem::ONE);
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(m.get(r, fc)));
            }
        }
        out
    }

    /// The rows spanning the same space with dependent rows removed.
    pub fn row_basis(&self) -> Matrix {
        let mut m = self.clone();
        let rank = m.rref().len();
        m.rows = rank;
        m.data.truncate(rank * self.cols);
        m
    }

    /// Whether `v` lies in the row space.
    pub fn spans(&self, v: &[Elem]) -> bool {
        let mut rows: Vec<Vec<Elem>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let before = self.rank();
        rows.push(v.to_vec());
        let ext = Matrix::from_rows(&self.field, self.cols, &rows).expect("same width");
        ext.rank() == before
    }
}

/// `[n, k, d]_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u32,
}

impl CodeParams {
    pub fn griesmer(&self) -> u64 {
        griesmer_bound(self.k, self.d, self.q)
    }

    pub fn satisfies_singleton(&self) -> bool {
        self.d >= 1 && self.d + self.k <= self.n + 1
    }

    pub fn satisfies_griesmer(&self) -> bool {
        self.k == 0 || self.griesmer() <= self.n as u64
    }

    pub fn attains_griesmer(&self) -> bool {
        self.k > 0 && self.griesmer() == self.n as u64
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]_{}", self.n, self.k, self.d, self.q)
    }
}

/// `sum_{i<k} ceil(d / q^i)`: the least length of an `[n, k, d]_q` code.
pub fn griesmer_bound(k: usize, d: usize, q: u32) -> u64 {
    let d = d as u64;
    let mut total = 0u64;
    let mut qi: u64 = 1;
    for _ in 0..k {
        total += d.div_ceil(qi);
        qi = qi.saturating_mul(q as u64);
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Exhaustive when `q^k` times the row width fits the budget, otherwise
    /// low-weight search deepened until the budget runs out.
    Auto { budget: u64 },
    Exhaustive,
    /// Search for dependent sets of at most `w_max` parity-check columns.
    LowWeight { w_max: usize },
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::Auto { budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistanceMethod {
    Exhaustive,
    LowWeight,
    BoundOnly,
}

impl DistanceMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceMethod::Exhaustive => "exhaustive",
            DistanceMethod::LowWeight => "low-weight",
            DistanceMethod::BoundOnly => "bound-only",
        }
    }
}

impl fmt::Display for DistanceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Minimum distance result; exact when `lower == upper`. `witness` is a
/// codeword of weight `upper` when one was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub lower: usize,
    pub upper: usize,
    pub method: DistanceMethod,
    pub witness: Option<Vec<Elem>>,
}

impl DistanceResult {
    pub fn exact(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

/// A code `<g>` in a polycyclic ambient space, with `g` its monic standard
/// generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolycyclicCode {
    space: AmbientSpace,
    gen: Poly,
}

/// `monic(gcd(any_gen, x^n - a(x)))`: the standard generator of the ideal
/// generated by `any_gen`.
pub fn standard_generator(space: &AmbientSpace, any_gen: &Poly) -> Result<Poly> {
    if any_gen.is_zero() {
        return Err(Error::ZeroPoly);
    }
    any_gen.gcd(&space.modulus())
}

impl PolycyclicCode {
    /// `gen` must divide the modulus; it is normalized to be monic.
    pub fn new(space: &AmbientSpace, gen: &Poly) -> Result<Self> {
        if !same_field(gen.field(), space.field()) {
            return Err(Error::MixedFields);
        }
        if gen.is_zero() {
            return Err(Error::ZeroPoly);
        }
        if !space.modulus().is_divisible_by(gen)? {
            return Err(Error::NotADivisor);
        }
        Ok(PolycyclicCode { space: space.clone(), gen: gen.monic() })
    }

    /// The code generated by an arbitrary nonzero polynomial.
    pub fn from_any_generator(space: &AmbientSpace, any_gen: &Poly) -> Result<Self> {
        Self::new(space, &standard_generator(space, any_gen)?)
    }

    pub fn space(&self) -> &AmbientSpace {
        &self.space
    }

    pub fn generator(&self) -> &Poly {
        &self.gen
    }

    pub fn field(&self) -> &FieldRef {
        self.space.field()
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dimension(&self) -> usize {
        self.space.len() - self.gen.degree().expect("nonzero")
    }

    /// Rows `x^i g(x)`, `i < k`.
    pub fn generator_matrix(&self) -> Result<Matrix> {
        let (n, k) = (self.len(), self.dimension());
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        let mut m = Matrix::zeros(self.field(), k, n);
        for i in 0..k {
            for (j, &c) in self.gen.coeffs().iter().enumerate() {
                m.set(i, i + j, c);
            }
        }
        Ok(m)
    }

    /// A full-rank `(n-k) x n` matrix `H` with `G H^T = 0`.
    pub fn parity_check_matrix(&self) -> Matrix {
        match self.generator_matrix() {
            Ok(g) => g.null_space(),
            Err(_) => Matrix::identity(self.field(), self.len()),
        }
    }

    /// Membership: `c(x)` lies in the code iff `g` divides it.
    pub fn contains(&self, word: &[Elem]) -> bool {
        word.len() == self.len()
            && Poly::new(self.field(), word.to_vec())
                .is_divisible_by(&self.gen)
                .expect("same field")
    }

    /// Checks that the polycyclic shift of every basis row stays in the
    /// code.
    pub fn shift_check(&self) -> bool {
        let n = self.len();
        (0..self.dimension()).all(|i| {
            let mut row = vec![Elem::ZERO; n];
            for (j, &c) in self.gen.coeffs().iter().enumerate() {
                row[i + j] = c;
            }
            self.contains(&polycyclic_shift(&self.space, &row))
        })
    }

    pub fn min_distance(&self, strategy: Strategy) -> Result<DistanceResult> {
        let g = self.generator_matrix()?;
        let h = self.parity_check_matrix();
        distance_with(&g, &h, strategy)
    }

    /// `[n, k, d]_q` when the distance is exact under `strategy`.
    pub fn params(&self, strategy: Strategy) -> Result<Option<CodeParams>> {
        let r = self.min_distance(strategy)?;
        Ok(r.exact().map(|d| CodeParams {
            n: self.len(),
            k: self.dimension(),
            d,
            q: self.field().order(),
        }))
    }
}

/// `(0, c_0, ..., c_(n-2)) + c_(n-1) a`.
pub fn polycyclic_shift(space: &AmbientSpace, word: &[Elem]) -> Vec<Elem> {
    let f = space.field();
    let n = word.len();
    let last = word[n - 1];
    let mut out = Vec::with_capacity(n);
    out.push(Elem::ZERO);
    out.extend_from_slice(&word[..n - 1]);
    for (o, &a) in out.iter_mut().zip(space.assoc()) {
        *o = f.add(*o, f.mul(last, a));
    }
    out
}

/// Whether the row space of `basis` is closed under the polycyclic shift of
/// `space`.
pub fn subspace_shift_check(space: &AmbientSpace, basis: &Matrix) -> bool {
    (0..basis.rows()).all(|r| basis.spans(&polycyclic_shift(space, basis.row(r))))
}

/// Minimum distance of the row space of an arbitrary generator matrix.
pub fn matrix_min_distance(g: &Matrix, strategy: Strategy) -> Result<DistanceResult> {
    let g = g.row_basis();
    if g.rows() == 0 {
        return Err(Error::ZeroCode);
    }
    let h = g.null_space();
    distance_with(&g, &h, strategy)
}

fn distance_with(g: &Matrix, h: &Matrix, strategy: Strategy) -> Result<DistanceResult> {
    if g.rows() == 0 {
        return Err(Error::ZeroCode);
    }
    match strategy {
        Strategy::Exhaustive => Ok(exhaustive(g)),
        Strategy::LowWeight { w_max } => Ok(low_weight(g, h, w_max, u64::MAX)),
        Strategy::Auto { budget } => {
            if exhaustive_cost(g) <= budget as u128 {
                Ok(exhaustive(g))
            } else {
                Ok(low_weight(g, h, g.cols(), budget))
            }
        }
    }
}

fn row_supports(g: &Matrix) -> Vec<Vec<usize>> {
    (0..g.rows())
        .map(|r| (0..g.cols()).filter(|&c| !g.get(r, c).is_zero()).collect())
        .collect()
}

fn exhaustive_cost(g: &Matrix) -> u128 {
    let width = row_supports(g).iter().map(Vec::len).max().unwrap_or(0).max(1) as u128;
    (g.field().order() as u128)
        .checked_pow(g.rows() as u32)
        .map_or(u128::MAX, |m| m.saturating_mul(width))
}

fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

/// Steps through every nonzero message in a q-ary modular Gray order,
/// calling `visit` with the current codeword and its weight. Digit `j`
/// changes at steps `t` with `q^j || t` and cycles through
/// `0, 1, xi, ..., xi^(q-2)`, so each step adds one scaled row.
fn gray_walk(g: &Matrix, mut visit: impl FnMut(&[Elem], usize) -> bool) {
    let f = g.field().clone();
    let q = f.order() as u64;
    let k = g.rows();
    let supports = row_supports(g);
    // element cycle and the increments between consecutive entries
    let mut cycle = vec![Elem::ZERO];
    cycle.extend(f.nonzero_by_log());
    let deltas: Vec<Elem> = (0..q as usize)
        .map(|i| f.sub(cycle[(i + 1) % q as usize], cycle[i]))
        .collect();
    let scaled: Vec<Vec<Vec<Elem>>> = (0..k)
        .map(|r| {
            deltas
                .iter()
                .map(|&d| supports[r].iter().map(|&c| f.mul(d, g.get(r, c))).collect())
                .collect()
        })
        .collect();
    let mut state = vec![0usize; k];
    let mut word = vec![Elem::ZERO; g.cols()];
    let mut w = 0usize;
    let mut counter = vec![0u64; k];
    loop {
        // j = q-adic valuation of the step index, via a base-q counter
        let mut j = 0;
        while j < k {
            counter[j] += 1;
            if counter[j] < q {
                break;
            }
            counter[j] = 0;
            j += 1;
        }
        if j == k {
            return;
        }
        let add = &scaled[j][state[j]];
        for (&c, &v) in supports[j].iter().zip(add) {
            let old = word[c];
            let new = f.add(old, v);
            word[c] = new;
            w = w + usize::from(old.is_zero() && !new.is_zero()) - usize::from(!old.is_zero() && new.is_zero());
        }
        state[j] = (state[j] + 1) % q as usize;
        if !visit(&word, w) {
            return;
        }
    }
}

fn exhaustive(g: &Matrix) -> DistanceResult {
    let mut best = usize::MAX;
    let mut witness = Vec::new();
    gray_walk(g, |word, w| {
        if w < best {
            best = w;
            witness = word.to_vec();
        }
        best > 1
    });
    DistanceResult { lower: best, upper: best, method: DistanceMethod::Exhaustive, witness: Some(witness) }
}

/// Number of codewords of each weight (index = weight), for `q^k` up to
/// [`WEIGHT_DISTRIBUTION_LIMIT`].
pub fn weight_distribution(g: &Matrix) -> Result<Vec<u64>> {
    let g = g.row_basis();
    let size = (g.field().order() as u64).checked_pow(g.rows() as u32);
    if size.is_none_or(|s| s > WEIGHT_DISTRIBUTION_LIMIT) {
        return Err(Error::Overflow("weight distribution"));
    }
    let mut dist = vec![0u64; g.cols() + 1];
    dist[0] = 1;
    gray_walk(&g, |_, w| {
        dist[w] += 1;
        true
    });
    Ok(dist)
}

/// Incrementally maintained echelon basis of column vectors.
struct Echelon<'a> {
    field: &'a FieldRef,
    basis: Vec<(usize, Vec<Elem>)>,
}

impl Echelon<'_> {
    /// Reduces `v`; pushes it and returns true if it was independent.
    fn push(&mut self, mut v: Vec<Elem>) -> bool {
        let f = self.field;
        for (p, b) in &self.basis {
            let c = v[*p];
            if !c.is_zero() {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        match v.iter().position(|e| !e.is_zero()) {
            None => false,
            Some(p) => {
                let inv = f.inv(v[p]).expect("nonzero");
                for x in v.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                self.basis.push((p, v));
                true
            }
        }
    }
}

/// Depth-`t` search for `t` columns of `h` that are linearly dependent while
/// every proper prefix is independent.
fn dependent_set(h_cols: &[Vec<Elem>], field: &FieldRef, t: usize) -> Option<Vec<usize>> {
    fn go(
        h_cols: &[Vec<Elem>],
        ech: &mut Echelon<'_>,
        chosen: &mut Vec<usize>,
        start: usize,
        t: usize,
    ) -> bool {
        let need = t - chosen.len();
        for c in start..=h_cols.len() - need {
            chosen.push(c);
            let independent = ech.push(h_cols[c].clone());
            if !independent {
                if chosen.len() == t {
                    return true;
                }
            } else {
                if chosen.len() < t && go(h_cols, ech, chosen, c + 1, t) {
                    return true;
                }
                ech.basis.pop();
            }
            chosen.pop();
        }
        false
    }
    if t == 0 || t > h_cols.len() {
        return None;
    }
    let mut ech = Echelon { field, basis: Vec::new() };
    let mut chosen = Vec::new();
    go(h_cols, &mut ech, &mut chosen, 0, t).then_some(chosen)
}

/// Nonzero codeword supported on `cols` (a minimal dependent set of `h`).
fn kernel_word(h: &Matrix, cols: &[usize], n: usize) -> Vec<Elem> {
    let f = h.field();
    let mut sub = Matrix::zeros(f, h.rows(), cols.len());
    for (j, &c) in cols.iter().enumerate() {
        for r in 0..h.rows() {
            sub.set(r, j, h.get(r, c));
        }
    }
    let ker = sub.null_space();
    let mut word = vec![Elem::ZERO; n];
    for (j, &c) in cols.iter().enumerate() {
        word[c] = ker.get(0, j);
    }
    word
}

/// The smallest dependent set of parity-check columns has size `d`. Depths
/// are tried in increasing order up to `w_max`, stopping early when the
/// next depth's estimated cost would exceed `budget`.
fn low_weight(g: &Matrix, h: &Matrix, w_max: usize, budget: u64) -> DistanceResult {
    let n = g.cols();
    let k = g.rows();
    let singleton = n - k + 1;
    let row_min = (0..g.rows()).map(|r| weight(g.row(r))).min().unwrap_or(n);
    let upper = row_min.min(singleton);
    let h_cols: Vec<Vec<Elem>> = (0..n).map(|c| h.column(c)).collect();
    let mut spent: u128 = 0;
    for t in 1..=w_max.min(singleton) {
        let cost = arith::binomial(n as u64, t as u64)
            .saturating_mul(t as u128)
            .saturating_mul(h.rows().max(1) as u128);
        spent = spent.saturating_add(cost);
        if spent > budget as u128 {
            return DistanceResult { lower: t, upper, method: DistanceMethod::BoundOnly, witness: None };
        }
        if let Some(cols) = dependent_set(&h_cols, g.field(), t) {
            let word = kernel_word(h, &cols, n);
            return DistanceResult { lower: t, upper: t, method: DistanceMethod::LowWeight, witness: Some(word) };
        }
    }
    let lower = w_max.min(singleton) + 1;
    if lower >= upper {
        // no lighter word exists; the generator row of weight `upper` is one
        let r = (0..g.rows()).find(|&r| weight(g.row(r)) == upper);
        let witness = r.map(|r| g.row(r).to_vec());
        if witness.is_some() {
            return DistanceResult { lower: upper, upper, method: DistanceMethod::LowWeight, witness };
        }
    }
    DistanceResult { lower, upper, method: DistanceMethod::BoundOnly, witness: None }
}
