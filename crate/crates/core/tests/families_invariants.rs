//! Exhaustive small-scale invariants for subsets, families and complexes:
//! closure idempotence, complement involutions, the commutation square
//! between complexes, upward complexes and transversal families, and the
//! join's algebraic behavior.

use powerset_operads::family::{ClosureMode, ComplementMode, ExtremalMode, Family, NonFaceMode};
use powerset_operads::laws::enumerate_complexes;
use powerset_operads::subset::Subset;
use powerset_operads::sym::Permutation;
use powerset_operads::SimplicialComplex;

fn all_families(n: usize) -> Vec<Family> {
    powerset_operads::laws::enumerate_families(n).unwrap()
}

#[test]
fn closure_idempotence_exhaustive() {
    for n in 0..=3usize {
        for f in all_families(n) {
            for mode in [ClosureMode::Down, ClosureMode::Up] {
                let once = f.closure(mode).unwrap();
                assert_eq!(once.closure(mode).unwrap(), once, "mode {mode:?} on {f}");
            }
            if !f.is_empty() && !f.contains_mask(0) {
                let once = f.closure(ClosureMode::ReducedDown).unwrap();
                assert_eq!(once.closure(ClosureMode::ReducedDown).unwrap(), once);
                // reduced and plain downward closure differ exactly by ∅
                let plain = f.closure(ClosureMode::Down).unwrap();
                let mut with_empty: Vec<u32> = once.masks().to_vec();
                with_empty.push(0);
                assert_eq!(
                    plain,
                    Family::from_masks(n, with_empty).unwrap(),
                    "reduced vs plain on {f}"
                );
            }
        }
    }
}

#[test]
fn complement_involutions_exhaustive() {
    for f in all_families(3) {
        for mode in [ComplementMode::Faces, ComplementMode::Pointwise] {
            assert_eq!(
                f.complement(mode).unwrap().complement(mode).unwrap(),
                f,
                "mode {mode:?} on {f}"
            );
        }
    }
}

#[test]
fn complements_of_complexes_are_upward() {
    for n in 1..=3usize {
        for k in enumerate_complexes(n).unwrap() {
            for mode in [ComplementMode::Faces, ComplementMode::Pointwise] {
                let c = k.family().complement(mode).unwrap();
                assert!(c.classify().is_upward, "mode {mode:?} on {k}");
            }
        }
    }
}

#[test]
fn extremals_are_transversal() {
    for n in 0..=3usize {
        for f in all_families(n) {
            for mode in [ExtremalMode::Maximal, ExtremalMode::Minimal] {
                assert!(f.extremals(mode).classify().is_transversal);
            }
        }
    }
}

#[test]
fn commutation_between_the_three_presentations() {
    for n in 1..=3usize {
        for k in enumerate_complexes(n).unwrap() {
            // facets then downward closure recovers the complex
            let back = k.facets().closure(ClosureMode::Down).unwrap();
            assert_eq!(&back, k.family(), "K={k}");

            // minimal non-faces against a brute-force oracle
            let oracle: Vec<u32> = {
                let missing: Vec<u32> = (0..(1u32 << n)).filter(|&m| !k.contains_mask(m)).collect();
                missing
                    .iter()
                    .copied()
                    .filter(|&m| missing.iter().all(|&o| o == m || o & !m != 0))
                    .collect()
            };
            assert_eq!(
                k.family().non_faces(NonFaceMode::Mnf).unwrap(),
                Family::from_masks(n, oracle).unwrap(),
                "K={k}"
            );
            assert_eq!(
                k.family().non_faces(NonFaceMode::Mnf).unwrap(),
                k.family()
                    .complement(ComplementMode::Faces)
                    .unwrap()
                    .extremals(ExtremalMode::Minimal)
            );

            // pointwise complement is an involution on complexes
            assert_eq!(
                k.family()
                    .complement(ComplementMode::Pointwise)
                    .unwrap()
                    .complement(ComplementMode::Pointwise)
                    .unwrap(),
                *k.family()
            );

            // minimal upfaces of the complement recover the minimal
            // non-faces through the other path of the square
            let up = k.family().complement(ComplementMode::Faces).unwrap();
            if !up.is_empty() {
                assert_eq!(up.extremals(ExtremalMode::Minimal), k.minimal_non_faces());
            }
        }
    }
}

#[test]
fn join_is_associative_and_unital() {
    let mut small: Vec<SimplicialComplex> = Vec::new();
    for n in 1..=2usize {
        small.extend(enumerate_complexes(n).unwrap());
    }
    let unit = SimplicialComplex::trivial(0).unwrap();
    for k in &small {
        assert_eq!(&k.join(&unit).unwrap(), k);
        assert_eq!(&unit.join(k).unwrap(), k);
        for l in &small {
            for m in &small {
                let left = k.join(l).unwrap().join(m).unwrap();
                let right = k.join(&l.join(m).unwrap()).unwrap();
                assert_eq!(left, right, "K={k} L={l} M={m}");
            }
        }
    }
}

#[test]
fn join_dimension_formula() {
    for k in enumerate_complexes(2).unwrap() {
        for l in enumerate_complexes(2).unwrap() {
            if k.is_empty() || l.is_empty() {
                continue;
            }
            let j = k.join(&l).unwrap();
            assert_eq!(
                j.dimension().unwrap(),
                k.dimension().unwrap() + l.dimension().unwrap() + 1,
                "K={k} L={l}"
            );
        }
    }
}

#[test]
fn relabel_round_trips_over_s3() {
    for sigma in Permutation::all(3) {
        let inv = sigma.inverse();
        for k in enumerate_complexes(3).unwrap() {
            assert_eq!(k.relabel(&sigma).unwrap().relabel(&inv).unwrap(), k);
            // flags and dimension are preserved
            let r = k.relabel(&sigma).unwrap();
            assert_eq!(r.dimension(), k.dimension());
            assert_eq!(r.family().classify(), k.family().classify());
        }
    }
}

#[test]
fn mnu_example_against_enumeration() {
    // the maximal sets not above {1,2} in the boolean lattice of [2]
    let u = Family::from_faces(2, vec![vec![1, 2]]).unwrap();
    let oracle: Vec<u32> = (0..4u32)
        .filter(|&m| m != 0b11)
        .filter(|&m| (0..4u32).all(|o| o == m || o == 0b11 || m & !o != 0))
        .collect();
    assert_eq!(
        u.non_faces(NonFaceMode::Mnu).unwrap(),
        Family::from_masks(2, oracle).unwrap()
    );
    assert_eq!(
        u.non_faces(NonFaceMode::Mnu).unwrap(),
        Family::from_faces(2, vec![vec![1], vec![2]]).unwrap()
    );
}

#[test]
fn subset_display_and_order() {
    let a = Subset::new(3, [1, 3]).unwrap();
    assert_eq!(format!("{a}"), "1 3");
    assert_eq!(format!("{}", Subset::empty(3).unwrap()), "-");
    // canonical order: cardinality first, then mask value
    let b = Subset::new(3, [2]).unwrap();
    assert!(b < a);
}
