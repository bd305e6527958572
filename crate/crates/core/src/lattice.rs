//! Integer matrices, Hermite and Smith normal forms, lattice membership and quotients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{modulo, rat_int, Int, Rat};
use crate::error::{Error, Result};

/// Dense integer matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<Int>> = (0..self.rows).map(|i| self.row(i)).collect();
        write!(f, "IntMatrix{:?}", rows)
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Int::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: &[Vec<Int>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.iter().cloned());
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<Int>> = rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect();
        Self::from_rows(&rows)
    }

    /// Builds an `n × k` matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, cols: &[Vec<Int>]) -> Result<Self> {
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        m.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[Int]) -> Result<Vec<Int>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    pub fn mul_vec_rat(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| rat_int(self.get(i, j)) * &v[j]).sum())
            .collect())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `(col a, col b) ← (p·a + q·b, r·a + s·b)`.
    fn combine_cols(&mut self, a: usize, b: usize, p: &Int, q: &Int, r: &Int, s: &Int) {
        for i in 0..self.rows {
            let x = self.get(i, a).clone();
            let y = self.get(i, b).clone();
            self.set(i, a, p * &x + q * &y);
            self.set(i, b, r * &x + s * &y);
        }
    }

    /// `(row a, row b) ← (p·a + q·b, r·a + s·b)`.
    fn combine_rows(&mut self, a: usize, b: usize, p: &Int, q: &Int, r: &Int, s: &Int) {
        for j in 0..self.cols {
            let x = self.get(a, j).clone();
            let y = self.get(b, j).clone();
            self.set(a, j, p * &x + q * &y);
            self.set(b, j, r * &x + s * &y);
        }
    }

    fn axpy_col(&mut self, dst: usize, src: usize, k: &Int) {
        for i in 0..self.rows {
            let v = self.get(i, src) * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

/// Bezout data `(g, x, y)` with `x·a + y·b = g > 0`; requires `(a, b) ≠ 0`.
fn bezout(a: &Int, b: &Int) -> (Int, Int, Int) {
    if !a.is_zero() && b.is_multiple_of(a) {
        return (a.abs(), a.signum(), Int::zero());
    }
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Column Hermite normal form `H = M·U`.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Row index of the leading entry of each of the first `rank` columns of `H`.
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Lower-triangular column HNF: `H = M·U` with `U` unimodular, pivot rows strictly
/// increasing, positive pivots, entries left of a pivot reduced into `[0, pivot)`,
/// and zero columns after the rank.
pub fn hermite_normal_form(m: &IntMatrix) -> Hnf {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols);
    let mut pivots = Vec::new();
    let mut k = 0;
    for i in 0..m.rows {
        if k == m.cols {
            break;
        }
        for j in k + 1..m.cols {
            if h.get(i, j).is_zero() {
                continue;
            }
            let a = h.get(i, k).clone();
            let b = h.get(i, j).clone();
            let (g, x, y) = bezout(&a, &b);
            let (ag, bg) = (&a / &g, &b / &g);
            h.combine_cols(k, j, &x, &y, &-bg.clone(), &ag);
            u.combine_cols(k, j, &x, &y, &-bg, &ag);
        }
        if h.get(i, k).is_zero() {
            continue;
        }
        if h.get(i, k).is_negative() {
            h.negate_col(k);
            u.negate_col(k);
        }
        let p = h.get(i, k).clone();
        for j in 0..k {
            let q = h.get(i, j).div_floor(&p);
            if !q.is_zero() {
                h.axpy_col(j, k, &-q.clone());
                u.axpy_col(j, k, &-q);
            }
        }
        pivots.push(i);
        k += 1;
    }
    Hnf { h, u, pivots }
}

/// Smith normal form `S = U·M·V`, with `U⁻¹` tracked as well.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn invariants(&self) -> Vec<Int> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = s.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        s.swap_rows(t, bi);
        u.swap_rows(t, bi);
        u_inv.swap_cols(t, bi);
        s.swap_cols(t, bj);
        v.swap_cols(t, bj);
        loop {
            for i in t + 1..rows {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let a = s.get(t, t).clone();
                let b = s.get(i, t).clone();
                let (g, x, y) = bezout(&a, &b);
                let (ag, bg) = (&a / &g, &b / &g);
                s.combine_rows(t, i, &x, &y, &-bg.clone(), &ag);
                u.combine_rows(t, i, &x, &y, &-bg.clone(), &ag);
                u_inv.combine_cols(t, i, &ag, &bg, &-y, &x);
            }
            for j in t + 1..cols {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let a = s.get(t, t).clone();
                let b = s.get(t, j).clone();
                let (g, x, y) = bezout(&a, &b);
                let (ag, bg) = (&a / &g, &b / &g);
                s.combine_cols(t, j, &x, &y, &-bg.clone(), &ag);
                v.combine_cols(t, j, &x, &y, &-bg, &ag);
            }
            if (t + 1..rows).all(|i| s.get(i, t).is_zero()) {
                break;
            }
        }
        let p = s.get(t, t).clone();
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s.get(i, j).is_multiple_of(&p)));
        if let Some(i) = bad {
            let one = Int::one();
            let zero = Int::zero();
            s.combine_rows(t, i, &one, &one, &zero, &one);
            u.combine_rows(t, i, &one, &one, &zero, &one);
            u_inv.combine_cols(t, i, &one, &zero, &-one.clone(), &one);
            continue;
        }
        if p.is_negative() {
            s.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        t += 1;
    }
    Snf { s, u, u_inv, v }
}

/// Basis (as columns) of the integer kernel `{x ∈ ℤᵏ : M·x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<Int>> {
    let hnf = hermite_normal_form(m);
    (hnf.rank()..m.cols).map(|j| hnf.u.col(j)).collect()
}

pub fn rank(m: &IntMatrix) -> usize {
    hermite_normal_form(m).rank()
}

pub fn rank_of(n: usize, vecs: &[Vec<Int>]) -> Result<usize> {
    Ok(rank(&IntMatrix::from_columns(n, vecs)?))
}

/// A lattice `ℤB ⊆ ℤⁿ` presented by its column-HNF basis, with coordinate maps.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    n: usize,
    basis: Vec<Vec<Int>>,
    pivots: Vec<usize>,
}

impl LatticeBasis {
    pub fn new(n: usize, gens: &[Vec<Int>]) -> Result<Self> {
        let m = IntMatrix::from_columns(n, gens)?;
        let hnf = hermite_normal_form(&m);
        let basis = (0..hnf.rank()).map(|j| hnf.h.col(j)).collect();
        Ok(LatticeBasis { n, basis, pivots: hnf.pivots })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Int>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `x` in the basis when `x` lies in the rational span.
    pub fn coords_rat(&self, x: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
        }
        let r = self.rank();
        let mut y: Vec<Rat> = Vec::with_capacity(r);
        for k in 0..r {
            let p = self.pivots[k];
            let mut acc = x[p].clone();
            for (j, yj) in y.iter().enumerate() {
                acc -= rat_int(&self.basis[j][p]) * yj;
            }
            y.push(acc / rat_int(&self.basis[k][p]));
        }
        for i in 0..self.n {
            let v: Rat = (0..r).map(|j| rat_int(&self.basis[j][i]) * &y[j]).sum();
            if v != x[i] {
                return Ok(None);
            }
        }
        Ok(Some(y))
    }

    /// Integer coordinates of `x` when `x ∈ ℤB`.
    pub fn coords_int(&self, x: &[Int]) -> Result<Option<Vec<Int>>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
        }
        let r = self.rank();
        let mut y: Vec<Int> = Vec::with_capacity(r);
        for k in 0..r {
            let p = self.pivots[k];
            let mut acc = x[p].clone();
            for (j, yj) in y.iter().enumerate() {
                acc -= &self.basis[j][p] * yj;
            }
            let (q, rem) = acc.div_rem(&self.basis[k][p]);
            if !rem.is_zero() {
                return Ok(None);
            }
            y.push(q);
        }
        for i in 0..self.n {
            let v: Int = (0..r).map(|j| &self.basis[j][i] * &y[j]).sum();
            if v != x[i] {
                return Ok(None);
            }
        }
        Ok(Some(y))
    }

    /// Ambient point with the given coordinates.
    pub fn point(&self, y: &[Int]) -> Vec<Int> {
        (0..self.n)
            .map(|i| self.basis.iter().zip(y).map(|(b, c)| &b[i] * c).sum())
            .collect()
    }

    pub fn point_rat(&self, y: &[Rat]) -> Vec<Rat> {
        (0..self.n)
            .map(|i| self.basis.iter().zip(y).map(|(b, c)| rat_int(&b[i]) * c).sum())
            .collect()
    }

    /// Ambient rational covector `φ` with `φ·x = h·coords(x)` for every `x` in the span,
    /// supported on the pivot rows.
    pub fn ambient_functional(&self, h: &[Int]) -> Vec<Rat> {
        let r = self.rank();
        let mut phi = vec![Rat::zero(); r];
        for k in (0..r).rev() {
            let mut acc = rat_int(&h[k]);
            for j in k + 1..r {
                acc -= rat_int(&self.basis[k][self.pivots[j]]) * &phi[j];
            }
            phi[k] = acc / rat_int(&self.basis[k][self.pivots[k]]);
        }
        let mut out = vec![Rat::zero(); self.n];
        for k in 0..r {
            out[self.pivots[k]] = phi[k].clone();
        }
        out
    }
}

/// True iff `v` lies in the ℤ-span of `b`.
pub fn lattice_member(b: &[Vec<Int>], v: &[Int]) -> Result<bool> {
    for x in b {
        if x.len() != v.len() {
            return Err(Error::DimensionMismatch { expected: v.len(), found: x.len() });
        }
    }
    Ok(LatticeBasis::new(v.len(), b)?.coords_int(v)?.is_some())
}

/// Some solution of `M·x = b` (free variables set to zero), or `None` when inconsistent.
pub fn rational_solve(m: &IntMatrix, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch { expected: m.rows, found: b.len() });
    }
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            let mut r: Vec<Rat> = (0..cols).map(|j| rat_int(m.get(i, j))).collect();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[i][cols].clone();
    }
    Ok(Some(x))
}

/// `ℤⁿ ∩ ℚB` given by a basis.
pub fn saturate(n: usize, b: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
    let bt = IntMatrix::from_columns(n, b)?.transpose();
    let dual = integer_kernel(&bt);
    let k = IntMatrix::from_columns(n, &dual)?.transpose();
    let sat = integer_kernel(&k);
    Ok(LatticeBasis::new(n, &sat)?.basis().to_vec())
}

/// An element of `ℤⁿ/ℤB` in Smith coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuotientElem {
    pub torsion: Vec<Int>,
    pub free: Vec<Int>,
}

impl QuotientElem {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().all(Zero::is_zero) && self.free.iter().all(Zero::is_zero)
    }
}

/// The quotient `ℤⁿ/ℤB ≅ ⊕ ℤ/dᵢ ⊕ ℤᶠ` with exact projection and section.
#[derive(Clone, Debug)]
pub struct LatticeQuotient {
    n: usize,
    u: IntMatrix,
    u_inv: IntMatrix,
    /// Nonzero invariant factors, including units.
    invariants: Vec<Int>,
    /// Positions (rows of `U`) and orders of the nontrivial torsion factors.
    torsion: Vec<(usize, Int)>,
}

impl LatticeQuotient {
    pub fn new(n: usize, b: &[Vec<Int>]) -> Result<Self> {
        let m = IntMatrix::from_columns(n, b)?;
        let snf = smith_normal_form(&m);
        let invariants = snf.invariants();
        let torsion = invariants
            .iter()
            .enumerate()
            .filter(|(_, d)| **d > Int::one())
            .map(|(i, d)| (i, d.clone()))
            .collect();
        Ok(LatticeQuotient { n, u: snf.u, u_inv: snf.u_inv, invariants, torsion })
    }

    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    pub fn free_rank(&self) -> usize {
        self.n - self.invariants.len()
    }

    pub fn sub_rank(&self) -> usize {
        self.invariants.len()
    }

    /// Torsion invariants `d₁ | d₂ | …`, all `≥ 2`.
    pub fn torsion_invariants(&self) -> Vec<Int> {
        self.torsion.iter().map(|(_, d)| d.clone()).collect()
    }

    /// Rows of `U` carrying the nontrivial torsion factors.
    pub fn torsion_positions(&self) -> Vec<usize> {
        self.torsion.iter().map(|(i, _)| *i).collect()
    }

    pub fn torsion_order(&self) -> Int {
        self.torsion.iter().map(|(_, d)| d.clone()).product()
    }

    pub fn u(&self) -> &IntMatrix {
        &self.u
    }

    pub fn u_inv(&self) -> &IntMatrix {
        &self.u_inv
    }

    pub fn project(&self, x: &[Int]) -> Result<QuotientElem> {
        let y = self.u.mul_vec(x)?;
        let torsion = self.torsion.iter().map(|(i, d)| modulo(&y[*i], d)).collect();
        let free = y[self.sub_rank()..].to_vec();
        Ok(QuotientElem { torsion, free })
    }

    /// Free coordinates of a rational vector (rows after the sublattice rank of `U·x`).
    pub fn free_part_rat(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        Ok(self.u.mul_vec_rat(x)?[self.sub_rank()..].to_vec())
    }

    /// All Smith coordinates of a rational vector.
    pub fn smith_coords_rat(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        self.u.mul_vec_rat(x)
    }

    pub fn section(&self, q: &QuotientElem) -> Vec<Int> {
        let mut y = vec![Int::zero(); self.n];
        for ((i, _), t) in self.torsion.iter().zip(&q.torsion) {
            y[*i] = t.clone();
        }
        for (k, f) in q.free.iter().enumerate() {
            y[self.sub_rank() + k] = f.clone();
        }
        self.u_inv.mul_vec(&y).expect("square matrix")
    }

    /// Ambient vector from full Smith coordinates (rational).
    pub fn from_smith_rat(&self, y: &[Rat]) -> Vec<Rat> {
        self.u_inv.mul_vec_rat(y).expect("square matrix")
    }

    /// Every element of the torsion subgroup, in lexicographic order.
    pub fn torsion_elements(&self) -> Vec<Vec<Int>> {
        let mut out = vec![Vec::new()];
        for (_, d) in &self.torsion {
            let mut next = Vec::new();
            for prefix in &out {
                let mut t = Int::zero();
                while &t < d {
                    let mut p = prefix.clone();
                    p.push(t.clone());
                    next.push(p);
                    t += 1;
                }
            }
            out = next;
        }
        out
    }

    pub fn add(&self, a: &QuotientElem, b: &QuotientElem) -> QuotientElem {
        QuotientElem {
            torsion: a
                .torsion
                .iter()
                .zip(&b.torsion)
                .zip(&self.torsion)
                .map(|((x, y), (_, d))| modulo(&(x + y), d))
                .collect(),
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, a: &QuotientElem, b: &QuotientElem) -> QuotientElem {
        QuotientElem {
            torsion: a
                .torsion
                .iter()
                .zip(&b.torsion)
                .zip(&self.torsion)
                .map(|((x, y), (_, d))| modulo(&(x - y), d))
                .collect(),
            free: a.free.iter().zip(&b.free).map(|(x, y)| x - y).collect(),
        }
    }
}

/// `ℤⁿ/ℤB` for generators `b`.
pub fn quotient(n: usize, b: &[Vec<Int>]) -> Result<LatticeQuotient> {
    LatticeQuotient::new(n, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ints, rat};

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn hnf_of_coprime_row() {
        let hnf = hermite_normal_form(&m(&[&[2, 3]]));
        assert_eq!(hnf.h.col(0), ints(&[1]));
        assert_eq!(hnf.h.col(1), ints(&[0]));
        assert_eq!(m(&[&[2, 3]]).mul(&hnf.u).unwrap(), hnf.h);
    }

    #[test]
    fn hnf_identity_is_fixed() {
        let id = IntMatrix::identity(2);
        assert_eq!(hermite_normal_form(&id).h, id);
    }

    #[test]
    fn hnf_of_three_columns_is_standard_basis() {
        let a = m(&[&[1, 0, 1], &[0, 2, 1]]);
        let hnf = hermite_normal_form(&a);
        assert_eq!(hnf.rank(), 2);
        assert_eq!(hnf.h.col(0), ints(&[1, 0]));
        assert_eq!(hnf.h.col(1), ints(&[0, 1]));
    }

    #[test]
    fn snf_examples() {
        let s = smith_normal_form(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.invariants(), ints(&[1, 6]));
        let z = smith_normal_form(&IntMatrix::zeros(2, 3));
        assert!(z.invariants().is_empty());
        let q = quotient(2, &[ints(&[0, 2])]).unwrap();
        assert_eq!(q.free_rank(), 1);
        assert_eq!(q.torsion_invariants(), ints(&[2]));
    }

    #[test]
    fn snf_transforms_are_consistent() {
        let a = m(&[&[4, 6, 2], &[2, -8, 10], &[0, 4, 12]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.s);
        assert_eq!(s.u.mul(&s.u_inv).unwrap(), IntMatrix::identity(3));
        assert!(s.s.is_diagonal());
    }

    #[test]
    fn membership_examples() {
        let b = [ints(&[1, 0]), ints(&[0, 2])];
        assert!(!lattice_member(&b, &ints(&[0, 1])).unwrap());
        assert!(lattice_member(&b, &ints(&[3, 4])).unwrap());
        assert!(lattice_member(&[], &ints(&[0, 0])).unwrap());
        assert!(lattice_member(&b, &ints(&[1])).is_err());
    }

    #[test]
    fn quotient_examples() {
        let q = quotient(3, &[ints(&[1, 0, 0])]).unwrap();
        assert_eq!(q.free_rank(), 2);
        assert!(q.torsion_invariants().is_empty());
        let q = quotient(1, &[ints(&[1])]).unwrap();
        assert_eq!(q.free_rank(), 0);
        assert!(q.project(&ints(&[5])).unwrap().is_zero());
    }

    #[test]
    fn rational_solve_examples() {
        let a = IntMatrix::from_columns(2, &[ints(&[1, 0])]).unwrap();
        assert_eq!(rational_solve(&a, &[rat(1, 2), rat(0, 1)]).unwrap(), Some(alloc::vec![rat(1, 2)]));
        assert_eq!(rational_solve(&a, &[rat(0, 1), rat(1, 1)]).unwrap(), None);
        let b = IntMatrix::from_columns(2, &[ints(&[0, 2])]).unwrap();
        assert_eq!(rational_solve(&b, &[rat(0, 1), rat(3, 1)]).unwrap(), Some(alloc::vec![rat(3, 2)]));
    }

    #[test]
    fn ambient_functional_matches_coordinates() {
        let lb = LatticeBasis::new(3, &[ints(&[2, 1, 0]), ints(&[0, 3, 3])]).unwrap();
        let h = ints(&[1, -2]);
        let phi = lb.ambient_functional(&h);
        for x in [ints(&[2, 1, 0]), ints(&[0, 3, 3]), ints(&[4, 5, 3])] {
            let y = lb.coords_int(&x).unwrap().unwrap();
            let lhs: Rat = phi.iter().zip(&x).map(|(p, v)| p * rat_int(v)).sum();
            assert_eq!(lhs, rat_int(&crate::arith::dot_int(&h, &y)));
        }
    }

    #[test]
    fn saturation_of_scaled_vector() {
        assert_eq!(saturate(2, &[ints(&[2, 4])]).unwrap(), alloc::vec![ints(&[1, 2])]);
    }
}
