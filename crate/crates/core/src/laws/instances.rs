//! The operads of this crate packaged as [`OperadInstance`]s, and a string
//! registry for the command line.

use super::{
    check_laws_with_workers, enumerate_complexes, enumerate_families, enumerate_transversal,
    CheckMode, LawReport, OperadInstance, ENUMERATION_BOUND,
};
use crate::base_operads::{family_compose, perm_compose, subset_compose, PermElement, Variant};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::join_operad::join_compose;
use crate::pair::RelativePair;
use crate::scpx_operads::{compose, subcomplexes_of, transversal_compose, TransportMode};
use crate::subset::Subset;
use crate::sym::Permutation;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// The permutative operad: `O(n) = [n]` for `n ≥ 1`.
pub struct PermOperad;

impl OperadInstance for PermOperad {
    type Elem = PermElement;

    fn name(&self) -> &str {
        "perm"
    }
    fn min_arity(&self) -> usize {
        1
    }
    fn unit(&self) -> Option<PermElement> {
        Some(PermElement::new(1, 1).unwrap())
    }
    fn arity(&self, e: &PermElement) -> usize {
        e.arity()
    }
    fn elements(&self, n: usize) -> Vec<PermElement> {
        (1..=n).map(|i| PermElement::new(n, i).unwrap()).collect()
    }
    fn sample(&self, n: usize, rng: &mut ChaCha8Rng) -> Option<PermElement> {
        if n == 0 {
            return None;
        }
        Some(PermElement::new(n, rng.gen_range(1..=n)).unwrap())
    }
    fn compose(&self, a: &PermElement, k: usize, b: &PermElement) -> Result<PermElement> {
        perm_compose(*a, k, *b)
    }
    fn act(&self, a: &PermElement, sigma: &Permutation) -> Result<PermElement> {
        if sigma.degree() != a.arity() {
            return Err(Error::domain("permutation degree does not match arity"));
        }
        PermElement::new(a.arity(), sigma.apply(a.value()))
    }
}

/// Subsets of `[n]` under the closed-formula composition: the power-one
/// operads (`Subst`: unit `{1}`; `Comp`: unit `∅₁`). Arity 0 holds the
/// single element `∅₀`.
pub struct SubsetOperad {
    pub variant: Variant,
}

impl OperadInstance for SubsetOperad {
    type Elem = Subset;

    fn name(&self) -> &str {
        match self.variant {
            Variant::Subst => "idemcom",
            Variant::Comp => "idemcom-c",
        }
    }
    fn min_arity(&self) -> usize {
        0
    }
    fn unit(&self) -> Option<Subset> {
        Some(match self.variant {
            Variant::Subst => Subset::new(1, [1]).unwrap(),
            Variant::Comp => Subset::empty(1).unwrap(),
        })
    }
    fn arity(&self, e: &Subset) -> usize {
        e.ambient()
    }
    fn elements(&self, n: usize) -> Vec<Subset> {
        crate::subset::all_masks_canonical(n)
            .into_iter()
            .map(|m| Subset::from_bits(n, m).unwrap())
            .collect()
    }
    fn sample(&self, n: usize, rng: &mut ChaCha8Rng) -> Option<Subset> {
        let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
        Some(Subset::from_bits(n, rng.gen::<u32>() & full).unwrap())
    }
    fn compose(&self, a: &Subset, k: usize, b: &Subset) -> Result<Subset> {
        subset_compose(a, k, b, self.variant)
    }
    fn act(&self, a: &Subset, sigma: &Permutation) -> Result<Subset> {
        a.relabel(sigma)
    }
}

/// Families of subsets (hypergraphs) under the elementwise composition:
/// the power-two operads. Arity 0 holds the two families on `[0]`.
pub struct FamilyOperad {
    pub variant: Variant,
}

impl OperadInstance for FamilyOperad {
    type Elem = Family;

    fn name(&self) -> &str {
        match self.variant {
            Variant::Subst => "hypg-subst",
            Variant::Comp => "hypg-comp",
        }
    }
    fn min_arity(&self) -> usize {
        0
    }
    fn unit(&self) -> Option<Family> {
        Some(match self.variant {
            Variant::Subst => Family::from_faces(1, vec![vec![1]]).unwrap(),
            Variant::Comp => Family::from_faces(1, vec![vec![]]).unwrap(),
        })
    }
    fn arity(&self, e: &Family) -> usize {
        e.ambient()
    }
    fn elements(&self, n: usize) -> Vec<Family> {
        enumerate_families(n).unwrap_or_default()
    }
    fn sample(&self, n: usize, rng: &mut ChaCha8Rng) -> Option<Family> {
        let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
        let size = rng.gen_range(0..=4usize);
        let masks: Vec<u32> = (0..size).map(|_| rng.gen::<u32>() & full).collect();
        Some(Family::from_masks_unchecked(n, masks))
    }
    fn compose(&self, a: &Family, k: usize, b: &Family) -> Result<Family> {
        family_compose(a, k, b, self.variant)
    }
    fn act(&self, a: &Family, sigma: &Permutation) -> Result<Family> {
        a.relabel(sigma)
    }
}

/// Reduced hypergraphs (nonempty families of nonempty subsets) under the
/// elementwise substitution. Closed because composing nonempty subsets
/// yields nonempty subsets.
pub struct ReducedFamilyOperad;

impl OperadInstance for ReducedFamilyOperad {
    type Elem = Family;

    fn name(&self) -> &str {
        "hypg-subst-reduced"
    }
    fn min_arity(&self) -> usize {
        1
    }
    fn unit(&self) -> Option<Family> {
        Some(Family::from_faces(1, vec![vec![1]]).unwrap())
    }
    fn arity(&self, e: &Family) -> usize {
        e.ambient()
    }
    fn elements(&self, n: usize) -> Vec<Family> {
        enumerate_families(n)
            .unwrap_or_default()
            .into_iter()
            .filter(|f| f.classify().is_reduced)
            .collect()
    }
    fn sample(&self, n: usize, rng: &mut ChaCha8Rng) -> Option<Family> {
        if n == 0 {
            return None;
        }
        let full = (1u32 << n) - 1;
        let size = rng.gen_range(1..=4usize);
        let masks: Vec<u32> = (0..size)
            .map(|_| 1 + rng.gen::<u32>() % full.max(1))
            .map(|m| m & full)
            .filter(|&m| m != 0)
            .collect();
        if masks.is_empty() {
            return None;
        }
        Some(Family::from_masks_unchecked(n, masks))
    }
    fn compose(&self, a: &Family, k: usize, b: &Family) -> Result<Family> {
        family_compose(a, k, b, Variant::Subst)
    }
    fn act(&self, a: &Family, sigma: &Permutation) -> Result<Family> {
        a.relabel(sigma)
    }
}

/// Simplicial complexes under substitution or composition; `nonempty`
/// restricts the universe to the nonempty complexes.
pub struct ComplexOperad {
    pub variant: Variant,
    pub nonempty: bool,
}

impl OperadInstance for ComplexOperad {
    type Elem = SimplicialComplex;

    fn name(&self) -> &str {
        match (self.variant, self.nonempty) {
            (Variant::Subst, false) => "scpx-subst",
            (Variant::Comp, false) => "scpx-comp",
            (Variant::Subst, true) => "scpx-subst-nonempty",
            (Variant::Comp, true) => "scpx-comp-nonempty",
        }
    }
    fn min_arity(&self) -> usize {
        1
    }
    fn unit(&self) -> Option<SimplicialComplex> {
        Some(match self.variant {
            Variant::Subst => SimplicialComplex::point(),
            Variant::Comp => SimplicialComplex::trivial(1).unwrap(),
        })
    }
    fn arity(&self, e: &SimplicialComplex) -> usize {
        e.ambient()
    }
    fn elements(&self, n: usize) -> Vec<SimplicialComplex> {
        let mut all = enumerate_complexes(n).unwrap_or_default();
        if self.nonempty {
            all.retain(|c| !c.is_empty());
        }
        all
    }
    fn sample(&self, n: usize, rng: &mut ChaCha8Rng) -> Option<SimplicialComplex> {
        sample_complex(n, self.nonempty, rng)
    }
    fn compose(
        &self,
        a: &SimplicialComplex,
        k: usize,
        b: &SimplicialComplex,
    ) -> Result<SimplicialComplex> {
        compose(a, k, b, self.variant)
    }
    fn act(&self, a: &SimplicialComplex, sigma: &Permutation) -> Result<SimplicialComplex> {
        a.relabel(sigma)
    }
}

/// Transversal families under the transported compositions.
pub struct TransversalOperad {
    pub mode: TransportMode,
    pub variant: Variant,
}

impl OperadInstance for TransversalOperad {
    type Elem = Family;

    fn name(&self) -> &str {
        match (self.mode, self.variant) {
            (TransportMode::Hat, Variant::Subst) => "transv-hat-subst",
            (TransportMode::Hat, Variant::Comp) => "transv-hat-comp",
            (TransportMode::Check, Variant::Subst) => "transv-check-subst",
            (TransportMode::Check, Variant::Comp) => "transv-check-comp",
        }
    }
    fn min_arity(&self) -> usize {
        1
    }
    fn unit(&self) -> Option<Family> {
        Some(match self.variant {
            Variant::Subst => Family::from_faces(1, vec![vec![1]]).unwrap(),
            Variant::Comp => Family::from_faces(1, vec![vec![]]).unwrap(),
        })
    }
    fn arity(&self, e: &Family) -> usize {
        e.ambient()
    }
    fn elements(&self, n: usize) -> Vec<Family> {
        enumerate_transversal(n).unwrap_or_default()
    }
    fn sample(&self, n: usize, rng: &mut ChaCha8Rng) -> Option<Family> {
        sample_complex(n, false, rng).map(|c| c.facets())
    }
    fn compose(&self, a: &Family, k: usize, b: &Family) -> Result<Family> {
        transversal_compose(a, k, b, self.mode, self.variant)
    }
    fn act(&self, a: &Family, sigma: &Permutation) -> Result<Family> {
        a.relabel(sigma)
    }
}

/// Relative simplicial complexes under the join composition.
pub struct RelPairOperad;

impl OperadInstance for RelPairOperad {
    type Elem = RelativePair;

    fn name(&self) -> &str {
        "relscpx"
    }
    fn min_arity(&self) -> usize {
        1
    }
    fn unit(&self) -> Option<RelativePair> {
        Some(RelativePair::unit())
    }
    fn arity(&self, e: &RelativePair) -> usize {
        e.ambient()
    }
    fn elements(&self, n: usize) -> Vec<RelativePair> {
        let mut out = Vec::new();
        for total in enumerate_complexes(n).unwrap_or_default() {
            for sub in subcomplexes_of(&total) {
                out.push(RelativePair::new(total.clone(), sub).expect("sub ⊆ total"));
            }
        }
        out.sort();
        out
    }
    fn sample(&self, n: usize, rng: &mut ChaCha8Rng) -> Option<RelativePair> {
        let total = sample_complex(n, false, rng)?;
        // random subfamily of the faces, closed downward, is a subcomplex
        let picked: Vec<u32> = total
            .family()
            .masks()
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let sub = SimplicialComplex::new(
            Family::from_masks_unchecked(n, picked)
                .closure(crate::family::ClosureMode::Down)
                .ok()?,
        )
        .ok()?;
        RelativePair::new(total, sub).ok()
    }
    fn compose(&self, a: &RelativePair, k: usize, b: &RelativePair) -> Result<RelativePair> {
        join_compose(a, k, b)
    }
    fn act(&self, a: &RelativePair, sigma: &Permutation) -> Result<RelativePair> {
        a.relabel(sigma)
    }
}

fn sample_complex(n: usize, nonempty: bool, rng: &mut ChaCha8Rng) -> Option<SimplicialComplex> {
    if n == 0 {
        return None;
    }
    let full = (1u32 << n) - 1;
    let size = if nonempty {
        rng.gen_range(1..=3usize)
    } else {
        rng.gen_range(0..=3usize)
    };
    let facets: Vec<u32> = (0..size).map(|_| rng.gen::<u32>() & full).collect();
    let fam = Family::from_masks_unchecked(n, facets)
        .closure(crate::family::ClosureMode::Down)
        .ok()?;
    if nonempty && fam.is_empty() {
        return None;
    }
    Some(SimplicialComplex::from_family_unchecked(fam))
}

/// The registry names accepted by [`run_named_laws`], with the exhaustive
/// arity bound each instance is documented to pass.
pub fn instance_names() -> Vec<(&'static str, usize)> {
    vec![
        ("perm", 4),
        ("idemcom", 3),
        ("idemcom-c", 3),
        ("hypg-subst", 2),
        ("hypg-comp", 2),
        ("hypg-subst-reduced", 2),
        ("scpx-subst", 3),
        ("scpx-comp", 3),
        ("scpx-subst-nonempty", 3),
        ("scpx-comp-nonempty", 3),
        ("transv-hat-subst", 3),
        ("transv-check-subst", 3),
        ("transv-hat-comp", 3),
        ("transv-check-comp", 3),
        ("relscpx", 2),
    ]
}

/// Runs the law checker on a named instance.
pub fn run_named_laws(
    name: &str,
    arity_bound: usize,
    mode: CheckMode,
    workers: usize,
) -> Result<LawReport> {
    if matches!(mode, CheckMode::Exhaustive) {
        let cap = match name {
            "hypg-subst" | "hypg-comp" | "hypg-subst-reduced" => 3,
            _ => ENUMERATION_BOUND,
        };
        if arity_bound > cap {
            return Err(Error::resource(format!(
                "exhaustive bound {arity_bound} for {name} above the enumeration limit {cap}"
            )));
        }
    }
    let report = match name {
        "perm" => check_laws_with_workers(&PermOperad, arity_bound, mode, workers),
        "idemcom" => check_laws_with_workers(
            &SubsetOperad {
                variant: Variant::Subst,
            },
            arity_bound,
            mode,
            workers,
        ),
        "idemcom-c" => check_laws_with_workers(
            &SubsetOperad {
                variant: Variant::Comp,
            },
            arity_bound,
            mode,
            workers,
        ),
        "hypg-subst" => check_laws_with_workers(
            &FamilyOperad {
                variant: Variant::Subst,
            },
            arity_bound,
            mode,
            workers,
        ),
        "hypg-comp" => check_laws_with_workers(
            &FamilyOperad {
                variant: Variant::Comp,
            },
            arity_bound,
            mode,
            workers,
        ),
        "hypg-subst-reduced" => {
            check_laws_with_workers(&ReducedFamilyOperad, arity_bound, mode, workers)
        }
        "scpx-subst" => check_laws_with_workers(
            &ComplexOperad {
                variant: Variant::Subst,
                nonempty: false,
            },
            arity_bound,
            mode,
            workers,
        ),
        "scpx-comp" => check_laws_with_workers(
            &ComplexOperad {
                variant: Variant::Comp,
                nonempty: false,
            },
            arity_bound,
            mode,
            workers,
        ),
        "scpx-subst-nonempty" => check_laws_with_workers(
            &ComplexOperad {
                variant: Variant::Subst,
                nonempty: true,
            },
            arity_bound,
            mode,
            workers,
        ),
        "scpx-comp-nonempty" => check_laws_with_workers(
            &ComplexOperad {
                variant: Variant::Comp,
                nonempty: true,
            },
            arity_bound,
            mode,
            workers,
        ),
        "transv-hat-subst" => check_laws_with_workers(
            &TransversalOperad {
                mode: TransportMode::Hat,
                variant: Variant::Subst,
            },
            arity_bound,
            mode,
            workers,
        ),
        "transv-check-subst" => check_laws_with_workers(
            &TransversalOperad {
                mode: TransportMode::Check,
                variant: Variant::Subst,
            },
            arity_bound,
            mode,
            workers,
        ),
        "transv-hat-comp" => check_laws_with_workers(
            &TransversalOperad {
                mode: TransportMode::Hat,
                variant: Variant::Comp,
            },
            arity_bound,
            mode,
            workers,
        ),
        "transv-check-comp" => check_laws_with_workers(
            &TransversalOperad {
                mode: TransportMode::Check,
                variant: Variant::Comp,
            },
            arity_bound,
            mode,
            workers,
        ),
        "relscpx" => check_laws_with_workers(&RelPairOperad, arity_bound, mode, workers),
        _ => {
            return Err(Error::domain(format!(
                "unknown operad '{name}'; known: {}",
                instance_names()
                    .iter()
                    .map(|(n, _)| *n)
                    .collect::<Vec<_>>()
                    .join(", ")
            )))
        }
    };
    Ok(report)
}
