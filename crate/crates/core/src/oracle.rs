//! Brute-force oracles over machine integers and a randomized property suite.
//!
//! Nothing here calls the lattice, cone or membership code of the main path: faces come from a
//! Carathéodory cone test, monoids are explored by breadth-first search inside a box, and degree
//! sets are materialised point by point. Everything is exponential and meant for desk-scale inputs.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::factors;
use crate::geometry::Configuration;
use crate::resonance::{self, Bounds, SetName, Verdict};
use crate::semigroup::{self, DegreeSet, MembershipQuery};

/// Largest class order handled by the pullback oracle in the suite.
pub const PULLBACK_ORDER_BOUND: u64 = 12;
const PULLBACK_RADIUS: i64 = 12;

/// Default seed of the property suite.
pub const DEFAULT_SEED: u64 = 0x5EED_0F_6C2A;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Box radius `R` for membership targets.
    pub radius: i64,
    /// Coefficient bound for parameter samples and face-direction depth.
    pub coeff_bound: i64,
    pub seed: u64,
    pub max_dim: usize,
    pub max_cols: usize,
    pub max_entry: i64,
    /// Randomized membership queries.
    pub queries: usize,
    /// Randomized configurations for the structural properties.
    pub instances: usize,
    /// Parameters sampled per configuration.
    pub samples: usize,
    /// Configurations (as column lists) checked before the random ones.
    pub fixed: Vec<Vec<Vec<i64>>>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            radius: 8,
            coeff_bound: 4,
            seed: DEFAULT_SEED,
            max_dim: 3,
            max_cols: 5,
            max_entry: 3,
            queries: 500,
            instances: 40,
            samples: 6,
            fixed: Vec::new(),
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.radius <= 0 || self.coeff_bound <= 0 || self.max_dim == 0 || self.max_cols == 0 || self.max_entry <= 0 {
            return Err(Error::Unsupported("oracle bounds must be positive".into()));
        }
        if self.max_cols > 12 {
            return Err(Error::Unsupported("oracle supports at most 12 columns".into()));
        }
        Ok(())
    }
}

fn to_i64(x: &Int) -> Result<i64> {
    x.to_i64().ok_or(Error::LimitExceeded { what: "oracle integer range", limit: i64::MAX as u64 })
}

fn vec_i64(v: &[Int]) -> Result<Vec<i64>> {
    v.iter().map(to_i64).collect()
}

/// Columns of a configuration as machine integers.
pub fn columns_i64(cfg: &Configuration) -> Result<Vec<Vec<i64>>> {
    cfg.matrix().columns().iter().map(|c| vec_i64(c)).collect()
}

/// A rational vector as `(numerators, common denominator)`.
fn scaled(v: &[Rat]) -> Result<(Vec<i128>, i128)> {
    let mut den = 1i128;
    for x in v {
        let d = x.denom().to_i128().ok_or(Error::LimitExceeded { what: "oracle integer range", limit: i64::MAX as u64 })?;
        den = den / gcd(den, d) * d;
    }
    let mut nums = Vec::with_capacity(v.len());
    for x in v {
        let n = (x * Rat::from_integer(Int::from(den))).to_integer();
        nums.push(n.to_i128().ok_or(Error::LimitExceeded { what: "oracle integer range", limit: i64::MAX as u64 })?);
    }
    Ok((nums, den))
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn widen(v: &[i64]) -> Vec<i128> {
    v.iter().map(|&x| x as i128).collect()
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => {
            let mut s = 0;
            for j in 0..n {
                if m[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| *x).collect()).collect();
                let t = m[0][j] * det(&minor);
                s += if j % 2 == 0 { t } else { -t };
            }
            s
        }
    }
}

/// Row reduction with gcd-normalised integer rows; returns the reduced rows and pivot columns.
fn reduce(rows: &[Vec<i128>], n: usize) -> (Vec<Vec<i128>>, Vec<usize>) {
    let mut m: Vec<Vec<i128>> = rows.iter().filter(|r| r.iter().any(|x| *x != 0)).cloned().collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i == r || m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let row: Vec<i128> = (0..n).map(|j| a * m[i][j] - b * m[r][j]).collect();
            let g = row.iter().fold(0, |g, x| gcd(g, *x));
            m[i] = if g > 1 { row.into_iter().map(|x| x / g).collect() } else { row };
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

fn rank(vecs: &[Vec<i128>], n: usize) -> usize {
    reduce(vecs, n).1.len()
}

/// Integer vectors spanning `{x : v·x = 0 for all v}`.
fn annihilator(vecs: &[Vec<i128>], n: usize) -> Vec<Vec<i128>> {
    let (m, pivots) = reduce(vecs, n);
    let mut out = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let scale = m.iter().zip(&pivots).fold(1i128, |l, (row, &p)| l / gcd(l, row[p]) * row[p].abs());
        let mut x = vec![0i128; n];
        x[f] = scale;
        for (row, &p) in m.iter().zip(&pivots) {
            x[p] = -row[f] * scale / row[p];
        }
        let g = x.iter().fold(0, |g, v| gcd(g, *v));
        out.push(x.into_iter().map(|v| v / g).collect());
    }
    out
}

/// Whether `q` is a nonnegative real combination of `gens` (Carathéodory over independent subsets).
fn in_cone(q: &[i128], gens: &[Vec<i128>]) -> bool {
    let n = q.len();
    if q.iter().all(|x| *x == 0) {
        return true;
    }
    for t in 1..=n.min(gens.len()) {
        for cols in combos(gens.len(), t) {
            for rows in combos(n, t) {
                let mat: Vec<Vec<i128>> = rows.iter().map(|&i| cols.iter().map(|&j| gens[j][i]).collect()).collect();
                let d = det(&mat);
                if d == 0 {
                    continue;
                }
                let nums: Vec<i128> = (0..t)
                    .map(|j| {
                        let mut mj = mat.clone();
                        for (k, &i) in rows.iter().enumerate() {
                            mj[k][j] = q[i];
                        }
                        det(&mj)
                    })
                    .collect();
                let nonneg = nums.iter().all(|x| *x == 0 || x.signum() == d.signum());
                let consistent = (0..n).all(|i| cols.iter().zip(&nums).map(|(&j, x)| gens[j][i] * x).sum::<i128>() == q[i] * d);
                if nonneg && consistent {
                    return true;
                }
                break;
            }
        }
    }
    false
}

/// Column sets of all faces: `S` is a face iff no `-a_k` with `k ∉ S` lies in `cone(A ∪ -S)`.
pub fn bf_faces(cols: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cols.first().map_or(0, Vec::len);
    let wide: Vec<Vec<i128>> = cols.iter().map(|c| widen(c)).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << cols.len()) {
        let s: Vec<usize> = (0..cols.len()).filter(|j| mask >> j & 1 == 1).collect();
        let mut gens = wide.clone();
        gens.extend(s.iter().map(|&j| wide[j].iter().map(|x| -x).collect::<Vec<_>>()));
        let face = (0..cols.len())
            .filter(|k| !s.contains(k))
            .all(|k| !in_cone(&wide[k].iter().map(|x| -x).collect::<Vec<_>>(), &gens));
        if face {
            out.push(s);
        }
        let _ = n;
    }
    out.sort();
    out
}

/// Lattice points of `[-r, r]^n`.
#[derive(Clone, Debug)]
struct BoxGrid {
    n: usize,
    r: i64,
    side: usize,
}

impl BoxGrid {
    fn new(n: usize, r: i64) -> Self {
        BoxGrid { n, r, side: (2 * r + 1) as usize }
    }

    fn len(&self) -> usize {
        self.side.pow(self.n as u32)
    }

    fn index(&self, p: &[i128]) -> Option<usize> {
        let mut idx = 0usize;
        for &x in p {
            if x < -(self.r as i128) || x > self.r as i128 {
                return None;
            }
            idx = idx * self.side + (x + self.r as i128) as usize;
        }
        Some(idx)
    }

    fn point(&self, mut idx: usize) -> Vec<i128> {
        let mut p = vec![0i128; self.n];
        for k in (0..self.n).rev() {
            p[k] = (idx % self.side) as i128 - self.r as i128;
            idx /= self.side;
        }
        p
    }
}

#[derive(Clone, Debug)]
struct PointSet {
    grid: BoxGrid,
    bits: Vec<bool>,
}

impl PointSet {
    fn empty(grid: &BoxGrid) -> Self {
        PointSet { grid: grid.clone(), bits: vec![false; grid.len()] }
    }

    /// Points reachable from `starts` by adding `steps`, never leaving the box.
    fn closure(grid: &BoxGrid, starts: &[Vec<i128>], steps: &[Vec<i128>]) -> Self {
        let mut set = PointSet::empty(grid);
        let mut queue = VecDeque::new();
        for s in starts {
            if let Some(i) = grid.index(s) {
                if !set.bits[i] {
                    set.bits[i] = true;
                    queue.push_back(i);
                }
            }
        }
        while let Some(i) = queue.pop_front() {
            let p = grid.point(i);
            for s in steps {
                let q: Vec<i128> = p.iter().zip(s).map(|(a, b)| a + b).collect();
                if let Some(j) = grid.index(&q) {
                    if !set.bits[j] {
                        set.bits[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        set
    }

    /// `None` outside the box.
    fn get(&self, p: &[i128]) -> Option<bool> {
        self.grid.index(p).map(|i| self.bits[i])
    }

    fn contains(&self, p: &[i128]) -> bool {
        self.get(p) == Some(true)
    }

    fn members(&self) -> impl Iterator<Item = Vec<i128>> + '_ {
        self.bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| self.grid.point(i))
    }
}

/// `target ∈ shift + ℕS + ℤL` by breadth-first search inside the box of radius `2·radius`.
pub fn bf_member(q: &MembershipQuery, target: &[Int], radius: i64) -> Result<bool> {
    let n = target.len();
    let grid = BoxGrid::new(n, 2 * radius);
    let shift = widen(&vec_i64(&q.shift)?);
    let mut steps: Vec<Vec<i128>> = q.generators.iter().map(|g| vec_i64(g).map(|v| widen(&v))).collect::<Result<_>>()?;
    for l in &q.lattice {
        let l = widen(&vec_i64(l)?);
        steps.push(l.iter().map(|x| -x).collect());
        steps.push(l);
    }
    let t = widen(&vec_i64(target)?);
    if grid.index(&t).is_none() || grid.index(&shift).is_none() {
        return Ok(false);
    }
    Ok(PointSet::closure(&grid, &[shift], &steps).contains(&t))
}

/// Search limits for [`bf_region`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegionParams {
    /// Box radius for degree-set points and lattice witnesses.
    pub radius: i64,
    /// Largest `m` tried in `γ + m·a_A`.
    pub m_max: i64,
    /// Largest power `k` of the ideals.
    pub k_max: usize,
    /// Multiples of each face column tested when checking `b + ℕF ⊆ D`.
    pub depth: i64,
}

impl Default for RegionParams {
    fn default() -> Self {
        RegionParams { radius: 24, m_max: 6, k_max: 5, depth: 4 }
    }
}

struct FaceData {
    cols: Vec<usize>,
    codim: usize,
    /// Integer vectors cutting out `ℚF`.
    ann: Vec<Vec<i128>>,
    /// A column off the face, for facet-value signs.
    off: Option<usize>,
}

/// Everything the region oracle needs, built from first principles.
struct Scene {
    n: usize,
    cols: Vec<Vec<i128>>,
    rank: usize,
    ann_a: Vec<Vec<i128>>,
    faces: Vec<FaceData>,
    grid: BoxGrid,
    semigroup: PointSet,
    lattice: PointSet,
    a_sum: Vec<i128>,
}

impl Scene {
    fn new(cols: &[Vec<i64>], radius: i64) -> Self {
        let n = cols.first().map_or(0, Vec::len);
        let wide: Vec<Vec<i128>> = cols.iter().map(|c| widen(c)).collect();
        let rank_a = rank(&wide, n);
        let faces = bf_faces(cols)
            .into_iter()
            .map(|s| {
                let fv: Vec<Vec<i128>> = s.iter().map(|&j| wide[j].clone()).collect();
                let codim = rank_a - rank(&fv, n);
                let off = (0..cols.len()).find(|j| !s.contains(j));
                FaceData { ann: annihilator(&fv, n), cols: s, codim, off }
            })
            .collect();
        let grid = BoxGrid::new(n, radius);
        let zero = vec![0i128; n];
        let semigroup = PointSet::closure(&grid, core::slice::from_ref(&zero), &wide);
        let mut pm = wide.clone();
        pm.extend(wide.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
        let lattice = PointSet::closure(&grid, core::slice::from_ref(&zero), &pm);
        let a_sum = (0..n).map(|i| wide.iter().map(|c| c[i]).sum()).collect();
        Scene { n, ann_a: annihilator(&wide, n), cols: wide, rank: rank_a, faces, grid, semigroup, lattice, a_sum }
    }

    fn face_semigroup(&self, f: &FaceData) -> PointSet {
        let steps: Vec<Vec<i128>> = f.cols.iter().map(|&j| self.cols[j].clone()).collect();
        PointSet::closure(&self.grid, &[vec![0; self.n]], &steps)
    }

    fn in_span(ann: &[Vec<i128>], v: &[i128]) -> bool {
        ann.iter().all(|a| dot(a, v) == 0)
    }

    /// `(tn/den) ∈ qdeg(D)`: some `b ∈ D` with `t - b ∈ ℚF` and `b + ℕF ⊆ D` up to the depth.
    fn in_qdeg(&self, d: &PointSet, tn: &[i128], den: i128, depth: i64) -> bool {
        for f in &self.faces {
            'base: for b in d.members() {
                let diff: Vec<i128> = tn.iter().zip(&b).map(|(t, x)| t - den * x).collect();
                if !Scene::in_span(&f.ann, &diff) {
                    continue;
                }
                let k = f.cols.len();
                let mut c = vec![0i64; k];
                loop {
                    let mut p = b.clone();
                    for (idx, &j) in f.cols.iter().enumerate() {
                        for (x, y) in p.iter_mut().zip(&self.cols[j]) {
                            *x += c[idx] as i128 * y;
                        }
                    }
                    if d.get(&p) == Some(false) {
                        continue 'base;
                    }
                    let mut pos = 0;
                    loop {
                        if pos == k {
                            return true;
                        }
                        c[pos] += 1;
                        if c[pos] <= depth {
                            break;
                        }
                        c[pos] = 0;
                        pos += 1;
                    }
                }
            }
        }
        false
    }

    /// Signs of `l_F(γ)` over facets where it is an integer: `(negative, positive, any)`.
    fn integral_facet_values(&self, tn: &[i128], den: i128) -> (bool, bool, bool) {
        let (mut neg, mut pos, mut any) = (false, false, false);
        for f in self.faces.iter().filter(|f| f.codim == 1) {
            let off: Vec<i128> = self.cols[f.off.expect("facet misses a column")].clone();
            let po: Vec<i128> = f.ann.iter().map(|a| dot(a, &off)).collect();
            for z in self.lattice.members() {
                let diff: Vec<i128> = tn.iter().zip(&z).map(|(t, x)| t - den * x).collect();
                if !Scene::in_span(&f.ann, &diff) {
                    continue;
                }
                any = true;
                let pz: Vec<i128> = f.ann.iter().map(|a| dot(a, &z)).collect();
                match dot(&pz, &po).signum() {
                    -1 => neg = true,
                    1 => pos = true,
                    _ => {}
                }
                break;
            }
        }
        (neg, pos, any)
    }

    fn quotient_degrees(&self) -> PointSet {
        let mut d = PointSet::empty(&self.grid);
        for (i, p) in self.semigroup.bits.iter().enumerate() {
            if *p {
                let b = self.grid.point(i);
                let lower: Vec<i128> = b.iter().zip(&self.a_sum).map(|(x, a)| x - a).collect();
                d.bits[i] = !self.semigroup.contains(&lower);
            }
        }
        d
    }

    fn ideal_degrees(&self, level: usize) -> PointSet {
        let small: Vec<PointSet> =
            self.faces.iter().filter(|f| f.codim > level).map(|f| self.face_semigroup(f)).collect();
        let mut d = self.semigroup.clone();
        for (i, bit) in d.bits.iter_mut().enumerate() {
            if *bit && small.iter().any(|s| s.bits[i]) {
                *bit = false;
            }
        }
        d
    }

    fn sumset(&self, a: &PointSet, b: &PointSet) -> PointSet {
        let mut out = PointSet::empty(&self.grid);
        let bm: Vec<Vec<i128>> = b.members().collect();
        for x in a.members() {
            for y in &bm {
                let s: Vec<i128> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                if let Some(i) = self.grid.index(&s) {
                    out.bits[i] = true;
                }
            }
        }
        out
    }

    fn ideal_quotients(&self, k_max: usize) -> Vec<PointSet> {
        let mut out = Vec::new();
        for level in 0..self.rank {
            let base = self.ideal_degrees(level);
            let mut power = base.clone();
            for _k in 2..=k_max {
                power = self.sumset(&power, &base);
                let mut d = base.clone();
                for (bit, p) in d.bits.iter_mut().zip(&power.bits) {
                    *bit = *bit && !*p;
                }
                out.push(d);
            }
        }
        out
    }
}

/// Membership of each grid point in a resonance locus, evaluated from the defining formulas
/// with bounded `m`, `k` and witnesses inside a box. `None` marks points outside `ℚA`.
pub fn bf_region(cols: &[Vec<i64>], set: SetName, points: &[Vec<Rat>], params: &RegionParams) -> Result<Vec<Option<bool>>> {
    let scene = Scene::new(cols, params.radius);
    let quotient = matches!(set, SetName::Sres | SetName::Wres).then(|| scene.quotient_degrees());
    let ideals = if matches!(set, SetName::Dres | SetName::Wres) { scene.ideal_quotients(params.k_max) } else { Vec::new() };
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        if p.len() != scene.n {
            return Err(Error::DimensionMismatch { expected: scene.n, found: p.len() });
        }
        let (tn, den) = scaled(p)?;
        if !Scene::in_span(&scene.ann_a, &tn) {
            out.push(None);
            continue;
        }
        let sres = || {
            let d = quotient.as_ref().expect("quotient degrees");
            (1..=params.m_max).any(|m| {
                let t: Vec<i128> = tn.iter().zip(&scene.a_sum).map(|(x, a)| x + den * m as i128 * a).collect();
                scene.in_qdeg(d, &t, den, params.depth)
            })
        };
        let dres = || ideals.iter().any(|d| scene.in_qdeg(d, &tn, den, params.depth));
        let v = match set {
            SetName::Sres => sres(),
            SetName::Dres => dres(),
            SetName::Wres => sres() || dres(),
            SetName::Res => scene.integral_facet_values(&tn, den).2,
            SetName::BigSres => scene.integral_facet_values(&tn, den).0,
            SetName::BigDres => scene.integral_facet_values(&tn, den).1,
        };
        out.push(Some(v));
    }
    Ok(out)
}

/// Number of classes of `(γ + ℤA) ∩ ℚF` modulo `ℤF`, found among `γ + z` with `z` in a box.
pub fn bf_pullback_count(cols: &[Vec<i64>], face: &[usize], class: &[Rat], order_bound: u64, radius: i64) -> Result<usize> {
    let n = cols.first().map_or(class.len(), Vec::len);
    if class.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: class.len() });
    }
    let wide: Vec<Vec<i128>> = cols.iter().map(|c| widen(c)).collect();
    let grid = BoxGrid::new(n, radius);
    let mut pm = wide.clone();
    pm.extend(wide.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
    let lattice = PointSet::closure(&grid, &[vec![0; n]], &pm);
    let (num, den) = scaled(class)?;
    let order = (1..=order_bound as i128).find(|&d| {
        if (0..n).any(|i| (d * num[i]) % den != 0) {
            return false;
        }
        let v: Vec<i128> = num.iter().map(|x| d * x / den).collect();
        lattice.contains(&v)
    });
    if order.is_none() {
        return Err(Error::OrderExceedsBound { order: format!("> {order_bound}"), bound: order_bound });
    }
    let fv: Vec<Vec<i128>> = face.iter().map(|&j| wide[j].clone()).collect();
    let ann = annihilator(&fv, n);
    let big = BoxGrid::new(n, 2 * radius);
    let mut fpm = fv.clone();
    fpm.extend(fv.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
    let face_lattice = PointSet::closure(&big, &[vec![0; n]], &fpm);
    let mut reps: Vec<Vec<i128>> = Vec::new();
    for z in lattice.members() {
        let g: Vec<i128> = num.iter().zip(&z).map(|(x, y)| x + den * y).collect();
        if !Scene::in_span(&ann, &g) {
            continue;
        }
        let fresh = reps.iter().all(|r| {
            let d: Vec<i128> = z.iter().zip(r).map(|(a, b)| a - b).collect();
            !face_lattice.contains(&d)
        });
        if fresh {
            reps.push(z);
        }
    }
    Ok(reps.len())
}

/// A violated property with the seed that reproduces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyFailure {
    pub seed: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<PropertyFailure>,
}

impl PropertyCheck {
    fn new(name: &'static str) -> Self {
        PropertyCheck { name, cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, seed: u64, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(PropertyFailure { seed, detail: detail() });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub seed: u64,
    pub checks: Vec<PropertyCheck>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(PropertyCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn instance_seed(base: u64, i: u64) -> u64 {
    base ^ i.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// A random configuration within the size caps.
pub fn random_columns(rng: &mut ChaCha8Rng, cfg: &OracleConfig) -> Vec<Vec<i64>> {
    let n = rng.gen_range(1..=cfg.max_dim);
    let m = rng.gen_range(1..=cfg.max_cols);
    let nonneg = rng.gen_bool(0.6);
    let lo = if nonneg { 0 } else { -cfg.max_entry };
    (0..m).map(|_| (0..n).map(|_| rng.gen_range(lo..=cfg.max_entry)).collect()).collect()
}

fn random_query(rng: &mut ChaCha8Rng, cfg: &OracleConfig) -> (MembershipQuery, Vec<Int>) {
    let cols = random_columns(rng, cfg);
    let n = cols[0].len();
    let ints = |v: &[i64]| v.iter().map(|&x| Int::from(x)).collect::<Vec<_>>();
    let lattice: Vec<Vec<Int>> = (0..rng.gen_range(0..=1usize))
        .map(|_| ints(&(0..n).map(|_| rng.gen_range(-1..=2)).collect::<Vec<_>>()))
        .collect();
    let shift = ints(&(0..n).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>());
    let target = ints(&(0..n).map(|_| rng.gen_range(-cfg.radius..=cfg.radius)).collect::<Vec<_>>());
    (MembershipQuery { shift, generators: cols.iter().map(|c| ints(c)).collect(), lattice }, target)
}

fn configuration(cols: &[Vec<i64>]) -> Result<Configuration> {
    let n = cols[0].len();
    let rows: Vec<Vec<i64>> = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    Configuration::from_i64_rows(&refs)
}

/// Random parameters in `ℚA`: small rational combinations of the columns plus integer shifts.
fn random_parameters(rng: &mut ChaCha8Rng, cfg: &Configuration, count: usize, bound: i64) -> Vec<Vec<Rat>> {
    let cols = cfg.matrix().columns();
    let n = cfg.dim();
    (0..count)
        .map(|_| {
            let q: i64 = [1, 1, 2, 3][rng.gen_range(0..4)];
            let mut g = vec![Rat::zero(); n];
            for c in &cols {
                let p = rng.gen_range(-bound..=bound);
                for (x, y) in g.iter_mut().zip(c) {
                    *x += Rat::new(Int::from(p), Int::from(q)) * Rat::from_integer(y.clone());
                }
            }
            g
        })
        .collect()
}

fn fmt_cols(cols: &[Vec<i64>]) -> String {
    format!("{cols:?}")
}

fn fmt_point(g: &[Rat]) -> String {
    crate::arith::fmt_vec_rat(g)
}

struct Instance {
    seed: u64,
    cols: Vec<Vec<i64>>,
    rng: ChaCha8Rng,
    config: Configuration,
}

/// Fixed configurations first, then random ones; degenerate ones are skipped with a note.
fn instances(cfg: &OracleConfig, salt: u64, notes: &mut Vec<String>) -> Result<Vec<Instance>> {
    let fixed = cfg.fixed.iter().enumerate().map(|(i, c)| (instance_seed(cfg.seed ^ 0xF1C5, i as u64), Some(c.clone())));
    let random = (0..cfg.instances as u64).map(|i| (instance_seed(cfg.seed ^ salt, i), None));
    let mut out = Vec::new();
    for (seed, given) in fixed.chain(random) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cols = match given {
            Some(c) => c,
            None => random_columns(&mut rng, cfg),
        };
        if cols.is_empty() || cols[0].is_empty() {
            notes.push(format!("seed {seed}: degenerate configuration with no entries skipped"));
            continue;
        }
        let config = configuration(&cols)?;
        if config.rank() == 0 {
            notes.push(format!("seed {seed}: degenerate configuration {} (rank zero) skipped", fmt_cols(&cols)));
            continue;
        }
        out.push(Instance { seed, cols, rng, config });
    }
    Ok(out)
}

/// Main path against the brute-force oracles: membership, faces and pullback counts.
pub fn oracle_agreement(cfg: &OracleConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let mut notes = Vec::new();
    let mut membership = PropertyCheck::new("membership-oracle");
    for i in 0..cfg.queries as u64 {
        let seed = instance_seed(cfg.seed, i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (q, target) = random_query(&mut rng, cfg);
        let main = semigroup::member(&q, &target, crate::geometry::DEFAULT_BUDGET);
        let brute = bf_member(&q, &target, cfg.radius)?;
        membership.record(seed, matches!(main, Ok(b) if b == brute), || {
            format!("query {q:?} target {target:?}: main {main:?}, oracle {brute}")
        });
    }
    let mut faces = PropertyCheck::new("faces-oracle");
    let mut pullback = PropertyCheck::new("pullback-oracle");
    for Instance { seed, cols, mut rng, config: a } in instances(cfg, 0xFACE, &mut notes)? {
        let main_faces: BTreeSet<Vec<usize>> = a.all_faces().iter().map(|f| f.indices.clone()).collect();
        let brute_faces: BTreeSet<Vec<usize>> = bf_faces(&cols).into_iter().collect();
        faces.record(seed, main_faces == brute_faces, || {
            format!("A = {}: main {main_faces:?}, oracle {brute_faces:?}", fmt_cols(&cols))
        });
        let mut classes = vec![vec![Rat::zero(); a.dim()]];
        classes.extend(random_parameters(&mut rng, &a, 2, 1));
        for g in &classes {
            let class = factors::class_of(&a, 0, g)?;
            for f in 0..a.all_faces().len() {
                let face = &a.face(f).indices;
                let brute = match bf_pullback_count(&cols, face, &class.rep, PULLBACK_ORDER_BOUND, PULLBACK_RADIUS) {
                    Ok(c) => c,
                    Err(Error::OrderExceedsBound { .. }) => continue,
                    Err(e) => return Err(e),
                };
                let main = factors::pullback_solutions(&a, f, &class)?.len();
                pullback.record(seed, main == brute, || {
                    format!("A = {}, face {face:?}, class {}: main {main}, oracle {brute}", fmt_cols(&cols), fmt_point(&class.rep))
                });
            }
        }
    }
    Ok(SuiteReport { seed: cfg.seed, checks: vec![membership, faces, pullback], notes })
}

/// Structural invariants: facet-functional axioms, the resonance implications (both directions
/// on normal instances obtained by appending saturation bases), the quotient-component witness
/// on normal instances, and the chain `sres ⊆ wres ⊆ res`.
pub fn invariant_suite(cfg: &OracleConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let mut notes = Vec::new();
    let mut axioms = PropertyCheck::new("facet-functional-axioms");
    let mut res_equiv = PropertyCheck::new("res-iff-resonant");
    let mut sres_one = PropertyCheck::new("semi-implies-outside-sres");
    let mut dres_one = PropertyCheck::new("dres-implies-positive-facet-value");
    let mut sres_both = PropertyCheck::new("normal-sres-iff-negative-facet-value");
    let mut dres_both = PropertyCheck::new("normal-dres-iff-positive-facet-value");
    let mut wres_weak = PropertyCheck::new("normal-wres-iff-not-weak");
    let mut witness = PropertyCheck::new("normal-quotient-witness");
    let mut chain = PropertyCheck::new("sres-wres-res-chain");
    let bounds = Bounds::default();

    for Instance { seed, cols, mut rng, config: a } in instances(cfg, 0xFACE, &mut notes)? {
        for f in a.facets() {
            let values: Vec<Int> = (0..a.num_columns()).map(|j| f.value_coords(&a.coords()[j])).collect();
            let nonneg = values.iter().all(|v| !v.is_negative());
            let zero_exactly = (0..values.len()).all(|j| values[j].is_zero() == f.face.indices.contains(&j));
            let primitive = crate::arith::gcd_all(&values) == Int::from(1);
            axioms.record(seed, nonneg && zero_exactly && primitive, || {
                format!("A = {}: facet {:?} values {values:?}", fmt_cols(&cols), f.face.indices)
            });
        }

        let normal = a.augmented()?;
        for (cfg_a, is_normal) in [(&a, a.is_normal()?.0), (&normal, true)] {
            let label = fmt_cols(&columns_i64(cfg_a)?);
            for g in random_parameters(&mut rng, cfg_a, cfg.samples, cfg.coeff_bound) {
                let profile = resonance::classify(cfg_a, &g)?;
                let res = resonance::in_res(cfg_a, &g)?;
                let res_c = resonance::in_res_by_cosets(cfg_a, &g)?;
                res_equiv.record(seed, res == !profile.nonresonant && res == res_c, || {
                    format!("A = {label}, γ = {}: res {res}, by cosets {res_c}, nonresonant {}", fmt_point(&g), profile.nonresonant)
                });
                let sres = resonance::in_sres(cfg_a, &g)?;
                let big_s = resonance::in_SRes(cfg_a, &g)?;
                let big_d = resonance::in_DRes(cfg_a, &g)?;
                sres_one.record(seed, !big_s || sres, || format!("A = {label}, γ = {}: in SRes but not sres", fmt_point(&g)));
                let dres = resonance::in_dres(cfg_a, &g, &bounds)?.verdict;
                dres_one.record(seed, dres != Verdict::True || big_d, || {
                    format!("A = {label}, γ = {}: dres true but no positive integral facet value", fmt_point(&g))
                });
                let wres = resonance::in_wres(cfg_a, &g, &bounds)?;
                chain.record(seed, (!sres || wres == Verdict::True) && (wres != Verdict::True || res), || {
                    format!("A = {label}, γ = {}: sres {sres}, wres {wres:?}, res {res}", fmt_point(&g))
                });
                if is_normal {
                    sres_both.record(seed, sres == big_s, || format!("A = {label}, γ = {}: sres {sres}, SRes {big_s}", fmt_point(&g)));
                    dres_both.record(seed, (dres == Verdict::True) == big_d, || {
                        format!("A = {label}, γ = {}: dres {dres:?}, DRes {big_d}", fmt_point(&g))
                    });
                    wres_weak.record(seed, (wres == Verdict::True) == !profile.weak, || {
                        format!("A = {label}, γ = {}: wres {wres:?}, weak {}", fmt_point(&g), profile.weak)
                    });
                }
            }
            if is_normal {
                let a_sum = cfg_a.a_sum_coords();
                for c in semigroup::qdeg_components(cfg_a, DegreeSet::Quotient, 2)? {
                    let shifted: Vec<Int> = c.base_coords.iter().zip(&a_sum).map(|(x, y)| x - y).collect();
                    let ok = cfg_a.facets().iter().any(|f| {
                        crate::geometry::is_subset(&cfg_a.face(c.face).indices, &f.face.indices)
                            && f.value_coords(&shifted).is_negative()
                    });
                    witness.record(seed, ok, || {
                        format!("A = {label}: component b = {:?} along face {:?} has no witnessing facet", c.base, cfg_a.face(c.face).indices)
                    });
                }
            }
        }
    }
    Ok(SuiteReport {
        seed: cfg.seed,
        checks: vec![axioms, res_equiv, sres_one, dres_one, sres_both, dres_both, wres_weak, witness, chain],
        notes,
    })
}

/// Both suites, merged; notes are deduplicated.
pub fn property_suite(cfg: &OracleConfig) -> Result<SuiteReport> {
    let mut a = oracle_agreement(cfg)?;
    let b = invariant_suite(cfg)?;
    a.checks.extend(b.checks);
    for n in b.notes {
        if !a.notes.contains(&n) {
            a.notes.push(n);
        }
    }
    Ok(a)
}

/// Region-scan agreement on a configuration, as `(point, main, oracle)` mismatches.
pub fn region_mismatches(
    cfg: &Configuration,
    set: SetName,
    bx: &[(Rat, Rat)],
    step: &Rat,
    bounds: &Bounds,
    params: &RegionParams,
) -> Result<Vec<(Vec<Rat>, Option<Verdict>, Option<bool>)>> {
    let grid = resonance::region_scan(cfg, set, bx, step, bounds)?;
    let points: Vec<Vec<Rat>> = grid.cells.iter().map(|c| c.point.clone()).collect();
    let brute = bf_region(&columns_i64(cfg)?, set, &points, params)?;
    Ok(grid
        .cells
        .into_iter()
        .zip(brute)
        .filter(|(c, b)| c.verdict.map(Verdict::is_true) != *b)
        .map(|(c, b)| (c.point, c.verdict, b))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ints, rat};

    fn q(shift: &[i64], gens: &[&[i64]], lattice: &[&[i64]]) -> MembershipQuery {
        MembershipQuery {
            shift: ints(shift),
            generators: gens.iter().map(|g| ints(g)).collect(),
            lattice: lattice.iter().map(|g| ints(g)).collect(),
        }
    }

    #[test]
    fn brute_membership_examples() {
        let gap = q(&[0, 0], &[&[1, 0], &[0, 2], &[1, 1]], &[]);
        assert!(bf_member(&gap, &ints(&[3, 4]), 6).unwrap());
        assert!(!bf_member(&gap, &ints(&[0, 1]), 6).unwrap());
        let shifted = q(&[2, -1], &[&[1, 0]], &[]);
        assert!(bf_member(&shifted, &ints(&[2, -1]), 6).unwrap());
        let with_lattice = q(&[0], &[&[2]], &[&[3]]);
        assert!(bf_member(&with_lattice, &ints(&[-7]), 8).unwrap());
    }

    #[test]
    fn brute_faces_examples() {
        assert_eq!(bf_faces(&[vec![1, 0], vec![0, 2], vec![1, 1]]), vec![vec![], vec![0], vec![0, 1, 2], vec![1]]);
        assert_eq!(bf_faces(&[vec![1], vec![-1]]), vec![vec![0, 1]]);
        assert_eq!(bf_faces(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).len(), 8);
        assert_eq!(bf_faces(&[vec![0, 0]]), vec![vec![0]]);
    }

    #[test]
    fn brute_region_numerical_semigroup() {
        let cols = vec![vec![2], vec![3]];
        let pts: Vec<Vec<Rat>> = (-6..=6).map(|x| vec![rat(x, 1)]).collect();
        let p = RegionParams::default();
        let members = |set| -> Vec<i64> {
            let v = bf_region(&cols, set, &pts, &p).unwrap();
            (-6..=6).zip(v).filter(|(_, b)| *b == Some(true)).map(|(x, _)| x).collect()
        };
        assert_eq!(members(SetName::Sres), alloc::vec![-6, -5, -4, -3, -2, -1, 1]);
        assert_eq!(members(SetName::BigDres), alloc::vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(members(SetName::BigSres), alloc::vec![-6, -5, -4, -3, -2, -1]);
        assert_eq!(members(SetName::Dres), alloc::vec![2, 3, 4, 5, 6]);
        assert!(bf_region(&cols, SetName::Sres, &[], &p).unwrap().is_empty());
    }

    #[test]
    fn brute_pullback_examples() {
        let cols = vec![vec![1, 0], vec![0, 2], vec![1, 1]];
        let zero = [rat(0, 1), rat(0, 1)];
        assert_eq!(bf_pullback_count(&cols, &[1], &zero, 12, 8).unwrap(), 2);
        assert_eq!(bf_pullback_count(&cols, &[0], &zero, 12, 8).unwrap(), 1);
        assert_eq!(bf_pullback_count(&cols, &[1], &[rat(1, 2), rat(0, 1)], 12, 8).unwrap(), 0);
        assert!(matches!(
            bf_pullback_count(&cols, &[1], &[rat(1, 13), rat(0, 1)], 12, 8),
            Err(Error::OrderExceedsBound { .. })
        ));
    }

    #[test]
    fn degenerate_instances_are_noted() {
        let cfg = OracleConfig { queries: 0, instances: 0, fixed: alloc::vec![alloc::vec![alloc::vec![0]]], ..OracleConfig::default() };
        let report = property_suite(&cfg).unwrap();
        assert!(report.passed());
        assert_eq!(report.notes.len(), 1);
        assert!(report.notes[0].contains("degenerate"));
        let bad = OracleConfig { radius: 0, ..OracleConfig::default() };
        assert!(property_suite(&bad).is_err());
    }
}
