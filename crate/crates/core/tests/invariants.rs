use gkz_core::arith::{fmt_rat, int, parse_rat, rat};
use gkz_core::factors;
use gkz_core::lattice::{hermite_normal_form, integer_kernel, quotient, smith_normal_form, LatticeBasis, QuotientElem};
use gkz_core::resonance::{self, Bounds, Verdict};
use gkz_core::semigroup::{self, DegreeSet, MembershipQuery};
use gkz_core::{Configuration, Int, IntMatrix, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix(max_rows: usize, max_cols: usize, e: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(move |(r, c)| prop::collection::vec(prop::collection::vec(-e..=e, c), r))
}

fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64_rows(&refs).unwrap()
}

fn config(rows: &[Vec<i64>]) -> Configuration {
    Configuration::new(to_matrix(rows)).unwrap()
}

fn spans_same_lattice(n: usize, a: &[Vec<Int>], b: &[Vec<Int>]) -> bool {
    let la = LatticeBasis::new(n, a).unwrap();
    let lb = LatticeBasis::new(n, b).unwrap();
    a.iter().all(|v| lb.coords_int(v).unwrap().is_some()) && b.iter().all(|v| la.coords_int(v).unwrap().is_some())
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn is_identity(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| *m.get(i, j) == if i == j { Int::one() } else { Int::zero() }))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_round_trip(p in -1000i64..1000, q in 1i64..50) {
        let x = rat(p, q);
        prop_assert_eq!(parse_rat(&fmt_rat(&x)).unwrap(), x);
    }

    #[test]
    fn hermite_form_is_reduced_and_spans(rows in matrix(3, 5, 6)) {
        let m = to_matrix(&rows);
        let hnf = hermite_normal_form(&m);
        prop_assert_eq!(&m.mul(&hnf.u).unwrap(), &hnf.h);
        let k = hnf.rank();
        for (c, &p) in hnf.pivots.iter().enumerate() {
            prop_assert!(hnf.h.get(p, c).is_positive());
            for i in 0..p {
                prop_assert!(hnf.h.get(i, c).is_zero());
            }
            for j in 0..c {
                let x = hnf.h.get(p, j);
                prop_assert!(!x.is_negative() && x < hnf.h.get(p, c));
            }
        }
        prop_assert!(hnf.pivots.windows(2).all(|w| w[0] < w[1]));
        for j in k..m.cols() {
            prop_assert!(hnf.h.col(j).iter().all(Zero::is_zero));
        }
        let hcols: Vec<Vec<Int>> = (0..k).map(|j| hnf.h.col(j)).collect();
        prop_assert!(spans_same_lattice(m.rows(), &m.columns(), &hcols));
    }

    #[test]
    fn smith_form_is_diagonal_with_divisibility(rows in matrix(3, 4, 6)) {
        let m = to_matrix(&rows);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(&snf.u.mul(&m).unwrap().mul(&snf.v).unwrap(), &snf.s);
        prop_assert!(snf.s.is_diagonal());
        prop_assert!(is_identity(&snf.u.mul(&snf.u_inv).unwrap()));
        let inv = snf.invariants();
        prop_assert!(inv.iter().all(Signed::is_positive));
        prop_assert!(inv.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in matrix(3, 5, 5)) {
        let m = to_matrix(&rows);
        for v in integer_kernel(&m) {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn quotient_section_and_projection_agree(rows in matrix(3, 3, 4), x in prop::collection::vec(-9i64..=9, 3)) {
        let m = to_matrix(&rows);
        let n = m.rows();
        let q = quotient(n, &m.columns()).unwrap();
        let x: Vec<Int> = x[..n].iter().map(|&v| int(v)).collect();
        let e = q.project(&x).unwrap();
        prop_assert_eq!(&q.project(&q.section(&e)).unwrap(), &e);
        let zero = QuotientElem { torsion: vec![Int::zero(); q.torsion_invariants().len()], free: vec![Int::zero(); q.free_rank()] };
        for c in m.columns() {
            prop_assert_eq!(&q.project(&c).unwrap(), &zero);
        }
        prop_assert!(q.sub(&e, &e).is_zero());
    }

    #[test]
    fn facet_functionals_are_primitive_and_supporting(rows in matrix(3, 5, 3)) {
        let a = config(&rows);
        for f in a.facets() {
            let values: Vec<Int> = a.coords().iter().map(|y| f.value_coords(y)).collect();
            prop_assert!(values.iter().all(|v| !v.is_negative()));
            for (j, v) in values.iter().enumerate() {
                prop_assert_eq!(v.is_zero(), f.face.indices.contains(&j));
            }
            prop_assert_eq!(gkz_core::arith::gcd_all(&values), Int::one());
            prop_assert_eq!(a.face(f.face_index).codim, 1);
        }
    }

    #[test]
    fn lattice_part_matches_negated_generators(rows in matrix(2, 4, 3), face_pick in 0usize..8, t in prop::collection::vec(-6i64..=6, 2)) {
        let a = config(&rows);
        let f = face_pick % a.all_faces().len();
        let gens = a.matrix().columns();
        let face_cols = a.face_columns(f).iter().map(|y| a.point(y)).collect::<Vec<_>>();
        let n = a.dim();
        let target: Vec<Int> = t[..n].iter().map(|&v| int(v)).collect();
        let shift = vec![Int::zero(); n];
        let with_lattice = MembershipQuery { shift: shift.clone(), generators: gens.clone(), lattice: face_cols.clone() };
        let mut extended = gens.clone();
        extended.extend(face_cols.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
        let with_negatives = MembershipQuery { shift, generators: extended, lattice: Vec::new() };
        prop_assert_eq!(
            semigroup::member(&with_lattice, &target, 1_000_000).unwrap(),
            semigroup::member(&with_negatives, &target, 1_000_000).unwrap()
        );
    }

    #[test]
    fn ideal_components_grow_with_level(rows in matrix(2, 4, 3)) {
        let a = config(&rows);
        prop_assume!(a.rank() >= 1 && a.is_pointed());
        let mut previous: Vec<(usize, Vec<Int>)> = Vec::new();
        for level in 0..a.rank() {
            let comps = semigroup::qdeg_components(&a, DegreeSet::Ideal { level }, 2).unwrap();
            let gamma_covered = |face: usize, base: &[Int]| {
                let g: Vec<Rat> = base.iter().map(|x| Rat::from_integer(x.clone())).collect();
                (0..a.all_faces().len()).any(|h| {
                    gkz_core::geometry::is_subset(&a.face(face).indices, &a.face(h).indices)
                        && semigroup::good_class_exists(&a, DegreeSet::Ideal { level }, h, &a.gamma_coords(&g).unwrap()).unwrap()
                })
            };
            for (face, base) in &previous {
                prop_assert!(gamma_covered(*face, base));
            }
            previous = comps.into_iter().map(|c| (c.face, c.base)).collect();
        }
    }

    #[test]
    fn resonance_flags_are_consistent(rows in matrix(2, 4, 3), g in prop::collection::vec(small_rat(), 2)) {
        let a = config(&rows);
        let gamma: Vec<Rat> = g[..a.dim()].to_vec();
        let Ok(p) = resonance::classify(&a, &gamma) else { return Ok(()) };
        if p.nonresonant {
            prop_assert!(p.weak && p.semi);
        }
        prop_assert_eq!(resonance::in_res(&a, &gamma).unwrap(), !p.nonresonant);
        let b = Bounds::default();
        let s = resonance::in_sres(&a, &gamma).unwrap();
        let w = resonance::in_wres(&a, &gamma, &b).unwrap();
        prop_assert!(!s || w == Verdict::True);
        prop_assert!(w != Verdict::True || !p.nonresonant);
    }

    #[test]
    fn class_representatives_are_canonical(rows in matrix(2, 4, 3), g in prop::collection::vec(small_rat(), 2), shift in prop::collection::vec(-3i64..=3, 4)) {
        let a = config(&rows);
        let gamma: Vec<Rat> = g[..a.dim()].to_vec();
        prop_assume!(a.gamma_coords(&gamma).is_ok());
        let c = factors::class_of(&a, 0, &gamma).unwrap();
        prop_assert_eq!(&factors::class_of(&a, 0, &c.rep).unwrap(), &c);
        let mut moved = gamma.clone();
        for (j, col) in a.matrix().columns().iter().enumerate() {
            for (x, y) in moved.iter_mut().zip(col) {
                *x += Rat::from_integer(y * shift[j % shift.len()]);
            }
        }
        prop_assert_eq!(factors::class_of(&a, 0, &moved).unwrap(), c);
    }

    #[test]
    fn pullback_counts_are_torsion_orders_or_zero(rows in matrix(2, 4, 4), g in prop::collection::vec(small_rat(), 2)) {
        let a = config(&rows);
        let gamma: Vec<Rat> = g[..a.dim()].to_vec();
        prop_assume!(a.gamma_coords(&gamma).is_ok());
        let c = factors::class_of(&a, 0, &gamma).unwrap();
        for f in 0..a.all_faces().len() {
            let k = factors::pullback_solutions(&a, f, &c).unwrap().len();
            let order = a.face_quotient(f).unwrap().torsion_order();
            prop_assert!(k == 0 || Int::from(k) == order);
        }
    }

    #[test]
    fn caching_does_not_change_answers(rows in matrix(2, 4, 3), g in prop::collection::vec(small_rat(), 2)) {
        let cached = config(&rows);
        let mut fresh = config(&rows);
        fresh.set_caching(false);
        let gamma: Vec<Rat> = g[..cached.dim()].to_vec();
        prop_assert_eq!(cached.saturation_hilbert_basis().unwrap(), fresh.saturation_hilbert_basis().unwrap());
        prop_assert_eq!(cached.is_normal().unwrap(), fresh.is_normal().unwrap());
        if cached.gamma_coords(&gamma).is_ok() {
            prop_assert_eq!(resonance::in_sres(&cached, &gamma).unwrap(), resonance::in_sres(&fresh, &gamma).unwrap());
        }
    }
}
