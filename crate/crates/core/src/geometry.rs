//! Configurations, their face lattice, facet functionals, saturation and normality.

use alloc::borrow::Cow;
use alloc::boxed::Box;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};
use once_cell::race::OnceBox;

use crate::arith::{
    denom_lcm, dot_int, dot_rat, frac, integral, primitive, rat_int, Int, Rat,
};
use crate::cone::{combinations, facet_normals};
use crate::error::{Error, Result};
use crate::lattice::{
    quotient, rank_of, rational_solve, saturate, smith_normal_form, IntMatrix, LatticeBasis,
    LatticeQuotient, QuotientElem,
};
use crate::semigroup::Membership;

/// Default cap on enumeration work (states visited, subsets scanned, points listed).
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// A face of `A`: the columns annihilated by a supporting functional.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    /// Sorted column indices.
    pub indices: Vec<usize>,
    /// `r_A - r_F`.
    pub codim: usize,
    /// `r_F`.
    pub rank: usize,
    /// Primitive integer covector `h` with `h(A) ⊆ ℕ` and `ker(h) ∩ A = F`.
    pub witness: Vec<Int>,
}

/// A facet together with its primitive supporting functional `l_F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetFunctional {
    pub face: Face,
    /// Position of the facet in the face list of its configuration.
    pub face_index: usize,
    /// `l_F` in coordinates of the lattice `ℤA`.
    pub normal: Vec<Int>,
    /// `l_F` as an ambient rational covector, integral on `ℤA`.
    pub functional: Vec<Rat>,
}

impl FacetFunctional {
    /// `l_F(x)` for an ambient vector `x` in the rational span of `A`.
    pub fn value(&self, x: &[Rat]) -> Rat {
        dot_rat(&self.functional, x)
    }

    /// `l_F(y)` for `y` given in `ℤA` coordinates.
    pub fn value_coords(&self, y: &[Int]) -> Int {
        dot_int(&self.normal, y)
    }

    pub fn value_coords_rat(&self, y: &[Rat]) -> Rat {
        self.normal.iter().zip(y).map(|(h, x)| rat_int(h) * x).sum()
    }
}

struct Memo {
    hilbert: OnceBox<Vec<Vec<Int>>>,
    quotients: Vec<OnceBox<LatticeQuotient>>,
    face_lattices: Vec<OnceBox<LatticeBasis>>,
    /// Slot `g * (faces + 1) + f`: engine for `ℕG + ℤF`; `f = faces` means no lattice part.
    engines: Vec<OnceBox<Membership>>,
    ideal_gens: Vec<OnceBox<Vec<Vec<Int>>>>,
}

impl Memo {
    fn new(faces: usize, rank: usize) -> Self {
        Memo {
            hilbert: OnceBox::new(),
            quotients: (0..faces).map(|_| OnceBox::new()).collect(),
            face_lattices: (0..faces).map(|_| OnceBox::new()).collect(),
            engines: (0..faces * (faces + 1)).map(|_| OnceBox::new()).collect(),
            ideal_gens: (0..=rank).map(|_| OnceBox::new()).collect(),
        }
    }
}

/// An integer point configuration `A` (an `n × N` matrix read as its columns).
pub struct Configuration {
    matrix: IntMatrix,
    lattice: LatticeBasis,
    coords: Vec<Vec<Int>>,
    facets: Vec<FacetFunctional>,
    faces: Vec<Face>,
    budget: u64,
    caching: bool,
    memo: Memo,
}

impl Clone for Configuration {
    fn clone(&self) -> Self {
        Configuration {
            matrix: self.matrix.clone(),
            lattice: self.lattice.clone(),
            coords: self.coords.clone(),
            facets: self.facets.clone(),
            faces: self.faces.clone(),
            budget: self.budget,
            caching: self.caching,
            memo: Memo::new(self.faces.len(), self.lattice.rank()),
        }
    }
}

impl core::fmt::Debug for Configuration {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Configuration").field("matrix", &self.matrix).finish()
    }
}

fn cached<'a, T: Clone>(
    enabled: bool,
    slot: &'a OnceBox<T>,
    init: impl FnOnce() -> Result<T>,
) -> Result<Cow<'a, T>> {
    if !enabled {
        return Ok(Cow::Owned(init()?));
    }
    if let Some(v) = slot.get() {
        return Ok(Cow::Borrowed(v));
    }
    let v = init()?;
    Ok(Cow::Borrowed(slot.get_or_init(|| Box::new(v))))
}

impl Configuration {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        Self::with_budget(matrix, DEFAULT_BUDGET)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64_rows(rows)?)
    }

    pub fn with_budget(matrix: IntMatrix, budget: u64) -> Result<Self> {
        let n = matrix.rows();
        let columns = matrix.columns();
        let lattice = LatticeBasis::new(n, &columns)?;
        let r = lattice.rank();
        let coords: Vec<Vec<Int>> = columns
            .iter()
            .map(|c| lattice.coords_int(c).map(|y| y.expect("column lies in its own lattice")))
            .collect::<Result<_>>()?;
        let normals = facet_normals(r, &coords, budget)?;
        let mut facet_sets: Vec<(Vec<usize>, Vec<Int>)> = normals
            .into_iter()
            .map(|h| {
                let idx = (0..coords.len()).filter(|&j| dot_int(&h, &coords[j]).is_zero()).collect();
                (idx, h)
            })
            .collect();
        facet_sets.sort();

        let all: Vec<usize> = (0..coords.len()).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(all.clone());
        let mut queue = VecDeque::from([all]);
        while let Some(x) = queue.pop_front() {
            for (g, _) in &facet_sets {
                let y: Vec<usize> = x.iter().copied().filter(|j| g.binary_search(j).is_ok()).collect();
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
            if seen.len() as u64 > budget {
                return Err(Error::LimitExceeded { what: "face lattice", limit: budget });
            }
        }
        let mut faces: Vec<Face> = Vec::with_capacity(seen.len());
        for idx in seen {
            let cols: Vec<Vec<Int>> = idx.iter().map(|&j| coords[j].clone()).collect();
            let rank = rank_of(r, &cols)?;
            let mut w = vec![Int::zero(); r];
            for (g, h) in &facet_sets {
                if idx.iter().all(|j| g.binary_search(j).is_ok()) {
                    for (wi, hi) in w.iter_mut().zip(h) {
                        *wi += hi;
                    }
                }
            }
            let phi = lattice.ambient_functional(&w);
            let scale = rat_int(&denom_lcm(&phi));
            let witness = primitive(&phi.iter().map(|x| (x * &scale).to_integer()).collect::<Vec<_>>());
            faces.push(Face { indices: idx, codim: r - rank, rank, witness });
        }
        faces.sort_by(|a, b| (a.codim, &a.indices).cmp(&(b.codim, &b.indices)));
        let facets = facet_sets
            .into_iter()
            .map(|(idx, h)| {
                let face_index = faces.iter().position(|f| f.indices == idx).expect("facet is a face");
                FacetFunctional {
                    face: faces[face_index].clone(),
                    face_index,
                    functional: lattice.ambient_functional(&h),
                    normal: h,
                }
            })
            .collect();
        let memo = Memo::new(faces.len(), r);
        Ok(Configuration { matrix, lattice, coords, facets, faces, budget, caching: true, memo })
    }

    /// Same configuration with a different work budget.
    pub fn set_budget(&mut self, budget: u64) {
        self.budget = budget;
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Enables or disables the internal memo tables; results do not depend on this.
    pub fn set_caching(&mut self, enabled: bool) {
        self.caching = enabled;
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn num_columns(&self) -> usize {
        self.matrix.cols()
    }

    /// `r_A`.
    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        self.matrix.col(j)
    }

    /// The lattice `ℤA` with its HNF basis.
    pub fn lattice(&self) -> &LatticeBasis {
        &self.lattice
    }

    /// Columns in `ℤA` coordinates.
    pub fn coords(&self) -> &[Vec<Int>] {
        &self.coords
    }

    pub fn facets(&self) -> &[FacetFunctional] {
        &self.facets
    }

    /// Every face, sorted by codimension and then by column indices; `A` comes first.
    pub fn all_faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, idx: usize) -> &Face {
        &self.faces[idx]
    }

    pub fn face_index(&self, indices: &[usize]) -> Option<usize> {
        self.faces.iter().position(|f| f.indices == indices)
    }

    pub fn full_face_index(&self) -> usize {
        0
    }

    /// Faces of codimension `i`.
    pub fn faces_of_codim(&self, i: usize) -> Vec<usize> {
        (0..self.faces.len()).filter(|&k| self.faces[k].codim == i).collect()
    }

    /// Index of the smallest face (intersection of all facets).
    pub fn minimal_face_index(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn minimal_face(&self) -> &Face {
        &self.faces[self.minimal_face_index()]
    }

    /// True when the cone contains no line.
    pub fn is_pointed(&self) -> bool {
        self.minimal_face().rank == 0
    }

    pub fn face_columns(&self, idx: usize) -> Vec<Vec<Int>> {
        self.faces[idx].indices.iter().map(|&j| self.coords[j].clone()).collect()
    }

    /// `a_F = Σ_{j ∈ F} a_j` in `ℤA` coordinates.
    pub fn face_sum_coords(&self, idx: usize) -> Vec<Int> {
        let mut s = vec![Int::zero(); self.rank()];
        for &j in &self.faces[idx].indices {
            for (x, y) in s.iter_mut().zip(&self.coords[j]) {
                *x += y;
            }
        }
        s
    }

    /// `a_A` in `ℤA` coordinates.
    pub fn a_sum_coords(&self) -> Vec<Int> {
        self.face_sum_coords(0)
    }

    /// Coordinates of an ambient rational vector in the basis of `ℤA`.
    pub fn gamma_coords(&self, gamma: &[Rat]) -> Result<Vec<Rat>> {
        if gamma.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: gamma.len() });
        }
        self.lattice.coords_rat(gamma)?.ok_or(Error::OutsideSpan)
    }

    pub fn point(&self, coords: &[Int]) -> Vec<Int> {
        self.lattice.point(coords)
    }

    pub fn point_rat(&self, coords: &[Rat]) -> Vec<Rat> {
        self.lattice.point_rat(coords)
    }

    /// Facets containing face `idx`.
    pub fn facets_containing(&self, idx: usize) -> Vec<usize> {
        let f = &self.faces[idx].indices;
        (0..self.facets.len())
            .filter(|&k| is_subset(f, &self.facets[k].face.indices))
            .collect()
    }

    /// Faces containing face `idx` (including itself).
    pub fn faces_containing(&self, idx: usize) -> Vec<usize> {
        let f = &self.faces[idx].indices;
        (0..self.faces.len()).filter(|&k| is_subset(f, &self.faces[k].indices)).collect()
    }

    /// Smallest face containing the given columns.
    pub fn closure(&self, cols: &[usize]) -> usize {
        let mut set: Vec<usize> = (0..self.num_columns()).collect();
        for g in &self.facets {
            if cols.iter().all(|j| g.face.indices.binary_search(j).is_ok()) {
                set.retain(|j| g.face.indices.binary_search(j).is_ok());
            }
        }
        self.face_index(&set).expect("intersection of facets is a face")
    }

    /// Smallest face whose span contains a point of the cone (given in `ℤA` coordinates).
    pub fn carrier_face(&self, y: &[Int]) -> usize {
        let mut set: Vec<usize> = (0..self.num_columns()).collect();
        for g in &self.facets {
            if g.value_coords(y).is_zero() {
                set.retain(|j| g.face.indices.binary_search(j).is_ok());
            }
        }
        self.face_index(&set).expect("intersection of facets is a face")
    }

    /// Faces of codimension at most `i`, i.e. the torus orbits making up `U_i(A)`.
    pub fn stratum(&self, i: usize) -> Vec<usize> {
        (0..self.faces.len()).filter(|&k| self.faces[k].codim <= i).collect()
    }

    /// True iff every `l` of the listed facets meet in a face of codimension exactly `l`.
    pub fn is_simplicial_family(&self, faces: &[usize]) -> Result<bool> {
        for &f in faces {
            if self.faces[f].codim != 1 {
                return Err(Error::NotCodimOne {
                    face: self.faces[f].indices.clone(),
                    codim: self.faces[f].codim,
                });
            }
        }
        let distinct: Vec<usize> = faces.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if distinct.len() != faces.len() {
            return Ok(false);
        }
        if distinct.len() >= 63 || (1u64 << distinct.len()) > self.budget {
            return Err(Error::LimitExceeded { what: "simplicial family check", limit: self.budget });
        }
        for l in 2..=distinct.len() {
            for sub in combinations(distinct.len(), l) {
                let mut set = self.faces[distinct[sub[0]]].indices.clone();
                for &s in &sub[1..] {
                    let g = &self.faces[distinct[s]].indices;
                    set.retain(|j| g.binary_search(j).is_ok());
                }
                let idx = self.face_index(&set).expect("intersection of faces is a face");
                if self.faces[idx].codim != l {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `ℤA/ℤF` in `ℤA` coordinates.
    pub fn face_quotient(&self, idx: usize) -> Result<Cow<'_, LatticeQuotient>> {
        cached(self.caching, &self.memo.quotients[idx], || quotient(self.rank(), &self.face_columns(idx)))
    }

    /// The lattice `ℤF` in ambient coordinates.
    pub fn face_lattice(&self, idx: usize) -> Result<Cow<'_, LatticeBasis>> {
        cached(self.caching, &self.memo.face_lattices[idx], || {
            let cols: Vec<Vec<Int>> = self.faces[idx].indices.iter().map(|&j| self.column(j)).collect();
            LatticeBasis::new(self.dim(), &cols)
        })
    }

    /// Prepared membership test for `ℕG + ℤF` in `ℤA` coordinates (`f = None`: `ℕG`).
    pub fn engine(&self, g: usize, f: Option<usize>) -> Result<Cow<'_, Membership>> {
        let nf = self.faces.len();
        let slot = g * (nf + 1) + f.unwrap_or(nf);
        cached(self.caching, &self.memo.engines[slot], || {
            let lat = match f {
                Some(f) => self.face_columns(f),
                None => Vec::new(),
            };
            Membership::new(self.rank(), &self.face_columns(g), &lat, self.budget)
        })
    }

    /// `y ∈ ℕA` for `y` in `ℤA` coordinates.
    pub fn in_semigroup(&self, y: &[Int]) -> Result<bool> {
        self.engine(0, None)?.contains(y, self.budget)
    }

    /// Minimal generators of the monoid `ℝ≥0A ∩ ℤA`, as ambient vectors sorted lexicographically.
    pub fn saturation_hilbert_basis(&self) -> Result<Vec<Vec<Int>>> {
        let coords = self.hilbert_basis_coords()?;
        let mut pts: Vec<Vec<Int>> = coords.iter().map(|y| self.point(y)).collect();
        pts.sort();
        Ok(pts)
    }

    pub fn hilbert_basis_coords(&self) -> Result<Vec<Vec<Int>>> {
        Ok(cached(self.caching, &self.memo.hilbert, || self.compute_hilbert_basis())?.into_owned())
    }

    fn compute_hilbert_basis(&self) -> Result<Vec<Vec<Int>>> {
        let r = self.rank();
        if r == 0 {
            return Ok(Vec::new());
        }
        let lineality = saturate(r, &self.face_columns(self.minimal_face_index()))?;
        let q = quotient(r, &lineality)?;
        let rp = q.free_rank();
        let mut gens: Vec<Vec<Int>> = Vec::new();
        for c in &self.coords {
            let p = q.project(c)?.free;
            if p.iter().any(|x| !x.is_zero()) && !gens.contains(&p) {
                gens.push(p);
            }
        }
        let mut reduced: Vec<Vec<Int>> = Vec::new();
        if rp > 0 {
            let normals = facet_normals(rp, &gens, self.budget)?;
            let inside = |x: &[Int]| normals.iter().all(|h| !dot_int(h, x).is_negative());
            let mut candidates: BTreeSet<Vec<Int>> = gens.iter().cloned().collect();
            let mut work: u64 = 0;
            for sub in combinations(gens.len(), rp) {
                let cols: Vec<Vec<Int>> = sub.iter().map(|&i| gens[i].clone()).collect();
                let v = IntMatrix::from_columns(rp, &cols)?;
                let snf = smith_normal_form(&v);
                let inv = snf.invariants();
                if inv.len() < rp {
                    continue;
                }
                let vol: Int = inv.iter().product();
                work += u64::try_from(&vol).unwrap_or(u64::MAX);
                if work > self.budget {
                    return Err(Error::LimitExceeded { what: "Hilbert basis", limit: self.budget });
                }
                let group = quotient(rp, &cols)?;
                for t in group.torsion_elements() {
                    let x0 = group.section(&QuotientElem { torsion: t, free: Vec::new() });
                    let lam = rational_solve(&v, &x0.iter().map(rat_int).collect::<Vec<_>>())?
                        .expect("full-rank square system");
                    let fl: Vec<Rat> = lam.iter().map(frac).collect();
                    let p = integral(&v.mul_vec_rat(&fl)?).expect("parallelepiped point is integral");
                    if p.iter().any(|x| !x.is_zero()) {
                        candidates.insert(p);
                    }
                }
            }
            let cand: Vec<Vec<Int>> = candidates.into_iter().collect();
            for x in &cand {
                let reducible = cand.iter().any(|y| {
                    y != x && inside(&x.iter().zip(y).map(|(a, b)| a - b).collect::<Vec<_>>())
                });
                if !reducible {
                    reduced.push(x.clone());
                }
            }
        }
        let mut out: Vec<Vec<Int>> = reduced
            .iter()
            .map(|h| q.section(&QuotientElem { torsion: Vec::new(), free: h.clone() }))
            .collect();
        for b in &lineality {
            out.push(b.clone());
            out.push(b.iter().map(|x| -x).collect());
        }
        Ok(out)
    }

    /// Normality test; on failure returns a point of `ℝ≥0A ∩ ℤA` outside `ℕA`.
    pub fn is_normal(&self) -> Result<(bool, Option<Vec<Int>>)> {
        let mut hb = self.hilbert_basis_coords()?;
        hb.sort_by_key(|y| self.point(y));
        for y in &hb {
            if !self.in_semigroup(y)? {
                return Ok((false, Some(self.point(y))));
            }
        }
        Ok((true, None))
    }

    /// `Â`: `A` with the saturation Hilbert basis elements not already among its columns appended.
    pub fn augmented(&self) -> Result<Configuration> {
        let mut cols = self.matrix.columns();
        for h in self.saturation_hilbert_basis()? {
            if !cols.contains(&h) {
                cols.push(h);
            }
        }
        let m = IntMatrix::from_columns(self.dim(), &cols)?;
        let mut c = Configuration::with_budget(m, self.budget)?;
        c.caching = self.caching;
        Ok(c)
    }

    /// Minimal generators of the monomial ideal with degrees
    /// `ℕA ∖ ⋃_{codim G > i} ℕG`, in `ℤA` coordinates.
    pub fn ideal_generators(&self, level: usize) -> Result<Vec<Vec<Int>>> {
        let level = level.min(self.rank());
        Ok(cached(self.caching, &self.memo.ideal_gens[level], || self.compute_ideal_generators(level))?
            .into_owned())
    }

    fn compute_ideal_generators(&self, level: usize) -> Result<Vec<Vec<Int>>> {
        let n = self.num_columns();
        if n >= 40 || (1u64 << n) > self.budget {
            return Err(Error::LimitExceeded { what: "ideal generators", limit: self.budget });
        }
        let mut sums: BTreeSet<Vec<Int>> = BTreeSet::new();
        for mask in 0u64..(1u64 << n) {
            let cols: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
            if self.faces[self.closure(&cols)].codim <= level {
                let mut s = vec![Int::zero(); self.rank()];
                for &j in &cols {
                    for (x, y) in s.iter_mut().zip(&self.coords[j]) {
                        *x += y;
                    }
                }
                sums.insert(s);
            }
        }
        let all: Vec<Vec<Int>> = sums.into_iter().collect();
        let mut out = Vec::new();
        for e in &all {
            let mut redundant = false;
            for e2 in &all {
                if e2 != e && self.in_semigroup(&e.iter().zip(e2).map(|(a, b)| a - b).collect::<Vec<_>>())? {
                    redundant = true;
                    break;
                }
            }
            if !redundant {
                out.push(e.clone());
            }
        }
        Ok(out)
    }
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ints, rat};

    fn cfg(rows: &[&[i64]]) -> Configuration {
        Configuration::from_i64_rows(rows).unwrap()
    }

    fn face_sets(c: &Configuration) -> Vec<(Vec<usize>, usize)> {
        c.all_faces().iter().map(|f| (f.indices.clone(), f.codim)).collect()
    }

    #[test]
    fn two_three_has_one_facet() {
        let c = cfg(&[&[2, 3]]);
        assert_eq!(c.facets().len(), 1);
        let f = &c.facets()[0];
        assert!(f.face.indices.is_empty());
        assert_eq!(f.value(&[rat(7, 1)]), rat(7, 1));
        assert_eq!(face_sets(&c), alloc::vec![(alloc::vec![0, 1], 0), (alloc::vec![], 1)]);
    }

    #[test]
    fn example_gap_configuration_faces() {
        let c = cfg(&[&[1, 0, 1], &[0, 2, 1]]);
        let sets: Vec<Vec<usize>> = c.facets().iter().map(|f| f.face.indices.clone()).collect();
        assert_eq!(sets, alloc::vec![alloc::vec![0], alloc::vec![1]]);
        assert_eq!(c.facets()[0].functional, alloc::vec![rat(0, 1), rat(1, 1)]);
        assert_eq!(c.facets()[1].functional, alloc::vec![rat(1, 1), rat(0, 1)]);
        assert_eq!(
            face_sets(&c),
            alloc::vec![(alloc::vec![0, 1, 2], 0), (alloc::vec![0], 1), (alloc::vec![1], 1), (alloc::vec![], 2)]
        );
        assert!(c.minimal_face().indices.is_empty());
        assert!(c.is_simplicial_family(&[1, 2]).unwrap());
    }

    #[test]
    fn square_cone_facets() {
        let c = cfg(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, -1]]);
        let sets: Vec<Vec<usize>> = c.facets().iter().map(|f| f.face.indices.clone()).collect();
        assert_eq!(
            sets,
            alloc::vec![alloc::vec![0, 2], alloc::vec![0, 3], alloc::vec![1, 2], alloc::vec![1, 3]]
        );
        let idx: Vec<usize> = c.facets().iter().map(|f| f.face_index).collect();
        assert!(!c.is_simplicial_family(&idx).unwrap());
        assert_eq!(c.faces_of_codim(2).len(), 4);
        assert!(c.is_normal().unwrap().0);
    }

    #[test]
    fn line_is_its_own_minimal_face() {
        let c = cfg(&[&[1, -1]]);
        assert!(c.facets().is_empty());
        assert_eq!(c.minimal_face().indices, alloc::vec![0, 1]);
        assert_eq!(c.all_faces().len(), 1);
        assert!(c.is_normal().unwrap().0);
    }

    #[test]
    fn identity_faces() {
        let c = cfg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(c.all_faces().len(), 8);
        assert!(c.minimal_face().indices.is_empty());
        assert_eq!(c.is_normal().unwrap(), (true, None));
        assert_eq!(c.saturation_hilbert_basis().unwrap().len(), 3);
    }

    #[test]
    fn normality_witnesses() {
        let c = cfg(&[&[2, 3]]);
        assert_eq!(c.is_normal().unwrap(), (false, Some(ints(&[1]))));
        assert_eq!(c.saturation_hilbert_basis().unwrap(), alloc::vec![ints(&[1])]);
        let c = cfg(&[&[1, 0, 1], &[0, 2, 1]]);
        assert_eq!(c.is_normal().unwrap(), (false, Some(ints(&[0, 1]))));
        assert_eq!(c.saturation_hilbert_basis().unwrap(), alloc::vec![ints(&[0, 1]), ints(&[1, 0])]);
        let aug = c.augmented().unwrap();
        assert_eq!(aug.num_columns(), 4);
        assert!(aug.is_normal().unwrap().0);
    }

    #[test]
    fn witnesses_cut_out_faces() {
        let c = cfg(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, -1]]);
        for f in c.all_faces() {
            for j in 0..c.num_columns() {
                let v = dot_int(&f.witness, &c.column(j));
                assert!(!v.is_negative());
                assert_eq!(v.is_zero(), f.indices.contains(&j));
            }
        }
    }

    #[test]
    fn ideal_generators_of_numerical_semigroup() {
        let c = cfg(&[&[2, 3]]);
        assert_eq!(c.ideal_generators(0).unwrap(), alloc::vec![ints(&[2]), ints(&[3])]);
        assert_eq!(c.ideal_generators(1).unwrap(), alloc::vec![ints(&[0])]);
    }

    #[test]
    fn caching_is_transparent() {
        let mut c = cfg(&[&[1, 0, 1], &[0, 2, 1]]);
        let a = c.saturation_hilbert_basis().unwrap();
        c.set_caching(false);
        assert_eq!(c.saturation_hilbert_basis().unwrap(), a);
    }
}
