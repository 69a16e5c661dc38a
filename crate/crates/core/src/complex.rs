//! Abstract simplicial complexes: downward-closed families of subsets.
//!
//! Both the empty complex `∅` and the trivial complex `{∅}` are legal
//! values; a vertex `i` with `{i}` not a face is a *ghost vertex*. The
//! dimension of the empty complex is a distinguished marker (`None`), while
//! `{∅}` has dimension −1.

use crate::error::{Error, Result};
use crate::family::{ClosureMode, ExtremalMode, Family, NonFaceMode};
use crate::subset::Subset;
use crate::sym::Permutation;

/// A downward-closed family of subsets of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    fam: Family,
}

impl SimplicialComplex {
    /// Wraps a family after checking downward closure.
    pub fn new(fam: Family) -> Result<Self> {
        if !fam.classify().is_simplicial {
            return Err(Error::domain("family is not downward closed"));
        }
        Ok(SimplicialComplex { fam })
    }

    /// Wraps a family known to be downward closed.
    pub(crate) fn from_family_unchecked(fam: Family) -> Self {
        debug_assert!(fam.classify().is_simplicial);
        SimplicialComplex { fam }
    }

    /// Downward closure of arbitrary generating faces.
    pub fn from_facets(ambient: usize, facets: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let fam = Family::new(ambient, facets)?.closure(ClosureMode::Down)?;
        Ok(SimplicialComplex { fam })
    }

    /// Downward closure of 1-based vertex lists.
    pub fn from_facet_lists(
        ambient: usize,
        facets: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        let fam = Family::from_faces(ambient, facets)?.closure(ClosureMode::Down)?;
        Ok(SimplicialComplex { fam })
    }

    /// The empty complex `∅` on `[n]`.
    pub fn empty(ambient: usize) -> Result<Self> {
        Ok(SimplicialComplex {
            fam: Family::empty(ambient)?,
        })
    }

    /// The trivial complex `{∅}` on `[n]`.
    pub fn trivial(ambient: usize) -> Result<Self> {
        Ok(SimplicialComplex {
            fam: Family::from_masks(ambient, [0])?,
        })
    }

    /// The point `pt = {∅, {1}}` on `[1]`, the substitution-operad unit.
    pub fn point() -> Self {
        SimplicialComplex {
            fam: Family::from_masks(1, [0, 1]).expect("point is valid"),
        }
    }

    pub fn family(&self) -> &Family {
        &self.fam
    }

    pub fn into_family(self) -> Family {
        self.fam
    }

    pub fn ambient(&self) -> usize {
        self.fam.ambient()
    }

    pub fn is_empty(&self) -> bool {
        self.fam.is_empty()
    }

    /// `true` for `{∅}`.
    pub fn is_trivial(&self) -> bool {
        self.fam.is_trivial()
    }

    pub fn faces(&self) -> impl Iterator<Item = Subset> + '_ {
        self.fam.faces()
    }

    pub fn face_count(&self) -> usize {
        self.fam.len()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.fam.contains(s)
    }

    pub fn contains_mask(&self, m: u32) -> bool {
        self.fam.contains_mask(m)
    }

    /// `true` when `{v}` is not a face.
    pub fn is_ghost(&self, v: usize) -> bool {
        v >= 1 && v <= self.ambient() && !self.fam.contains_mask(1 << (v - 1))
    }

    /// Non-ghost vertices in ascending order.
    pub fn vertices(&self) -> Vec<usize> {
        (1..=self.ambient())
            .filter(|&v| !self.is_ghost(v))
            .collect()
    }

    /// Max face dimension; `Some(-1)` for `{∅}`, `None` for the empty
    /// complex.
    pub fn dimension(&self) -> Option<i64> {
        self.fam
            .masks()
            .iter()
            .map(|m| m.count_ones() as i64 - 1)
            .max()
    }

    /// The facets (inclusionwise maximal faces), as a transversal family.
    pub fn facets(&self) -> Family {
        self.fam.extremals(ExtremalMode::Maximal)
    }

    /// All facets have the same dimension. Vacuously true for `∅`.
    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        let mut dims = facets.faces().map(|f| f.face_dimension());
        match dims.next() {
            None => true,
            Some(d0) => dims.all(|d| d == d0),
        }
    }

    /// Minimal non-faces.
    pub fn minimal_non_faces(&self) -> Family {
        self.fam
            .non_faces(NonFaceMode::Mnf)
            .expect("complex is downward closed")
    }

    pub fn relabel(&self, sigma: &Permutation) -> Result<SimplicialComplex> {
        Ok(SimplicialComplex {
            fam: self.fam.relabel(sigma)?,
        })
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.ambient() == other.ambient()
            && self.fam.masks().iter().all(|&m| other.contains_mask(m))
    }

    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        Ok(SimplicialComplex {
            fam: self.fam.union(&other.fam)?,
        })
    }

    /// Join `K ∗ L` on `[n₁+n₂]`: faces `I₁ ⊔ (I₂ + n₁)`.
    ///
    /// Joining with the empty complex yields the empty complex; `{∅}` on
    /// `[0]` is the unit.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let n1 = self.ambient();
        let n2 = other.ambient();
        crate::error::check_ambient(n1 + n2)?;
        let mut masks = Vec::with_capacity(self.face_count() * other.face_count());
        for &a in self.fam.masks() {
            for &b in other.fam.masks() {
                masks.push(a | (b << n1));
            }
        }
        Ok(SimplicialComplex {
            fam: Family::from_masks_unchecked(n1 + n2, masks),
        })
    }

    /// Join of `B` into the ghost slot `k` of `A`:
    /// `A ∗_k B = (A_{<k}) ∗ (B + k−1) ∗ (A_{>k} + m−1)` on `[n+m−1]`,
    /// with faces `I^{<k} ⊔ (J + k−1) ⊔ (I^{>k} + m−1)`.
    ///
    /// Requires `{k}` not to be a face of `A`.
    pub fn slot_join(&self, k: usize, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let n = self.ambient();
        let m = other.ambient();
        if k == 0 || k > n {
            return Err(Error::domain(format!("slot {k} outside [{n}]")));
        }
        if !self.is_ghost(k) {
            return Err(Error::precondition(format!(
                "slot join requires {{{k}}} not to be a face"
            )));
        }
        crate::error::check_ambient(n + m - 1)?;
        let mut masks = Vec::with_capacity(self.face_count() * other.face_count());
        for &a in self.fam.masks() {
            let (below, above) = split_mask(a, k);
            for &b in other.fam.masks() {
                masks.push(below | (b << (k - 1)) | (above << (k + m - 1)));
            }
        }
        Ok(SimplicialComplex {
            fam: Family::from_masks_unchecked(n + m - 1, masks),
        })
    }
}

impl std::fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.fam)
    }
}

/// Splits a mask around position `k`: bits `< k` stay put, bits `> k` are
/// rebased to start at position 1.
pub(crate) fn split_mask(m: u32, k: usize) -> (u32, u32) {
    let below = m & ((1u32 << (k - 1)) - 1);
    let above = m >> k;
    (below, above)
}
