//! Families of subsets of `[n]`: hypergraphs, their closures, complements
//! and extremal elements.
//!
//! A [`Family`] is a canonically ordered, duplicate-free set of [`Subset`]s
//! over one ambient `[n]`. The canonical order is (cardinality, mask value)
//! ascending, which makes equality, hashing and all printed output
//! deterministic. Two families on different ambients are never equal, even
//! when their face sets coincide.

use crate::error::{check_ambient, Error, Result};
use crate::subset::{all_masks_canonical, full_mask, Subset};
use crate::sym::Permutation;

/// A finite family of subsets of `[n]` (a hypergraph on `[n]`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    ambient: usize,
    /// Masks sorted by (popcount, value), no duplicates.
    masks: Vec<u32>,
}

/// Closure operators on families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureMode {
    /// Smallest downward-closed superfamily; contains ∅ whenever the input
    /// is nonempty.
    Down,
    /// `{J : ∅ ≠ J ⊆ I, I ∈ F}`; requires a nonempty input without ∅.
    ReducedDown,
    /// Smallest upward-closed superfamily inside the powerset of `[n]`.
    Up,
}

/// Complement operators on families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementMode {
    /// `℘([n]) \ F`: complement at the family level.
    Faces,
    /// `{[n] \ I : I ∈ F}`: complement each member.
    Pointwise,
    /// The recursive complement at depth `ℓ ∈ {1, 2}`; depth 1 is `Faces`,
    /// depth 2 is `Pointwise`.
    Derived(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalMode {
    /// Inclusionwise maximal members (the facets of a complex).
    Maximal,
    /// Inclusionwise minimal members.
    Minimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonFaceMode {
    /// Minimal non-faces of a downward-closed family.
    Mnf,
    /// Maximal non-upfaces of an upward-closed family.
    Mnu,
}

/// The four classification flags of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_simplicial: bool,
    pub is_upward: bool,
    pub is_transversal: bool,
    pub is_reduced: bool,
}

impl Family {
    /// The empty family on `[n]` (no members at all).
    pub fn empty(ambient: usize) -> Result<Self> {
        check_ambient(ambient)?;
        Ok(Family {
            ambient,
            masks: Vec::new(),
        })
    }

    /// Builds a family from subsets, which must all share the ambient.
    pub fn new(ambient: usize, faces: impl IntoIterator<Item = Subset>) -> Result<Self> {
        check_ambient(ambient)?;
        let mut masks = Vec::new();
        for s in faces {
            if s.ambient() != ambient {
                return Err(Error::domain(format!(
                    "face on ambient [{}] in a family on [{}]",
                    s.ambient(),
                    ambient
                )));
            }
            masks.push(s.bits());
        }
        Ok(Self::from_masks_unchecked(ambient, masks))
    }

    /// Builds a family from raw masks.
    pub fn from_masks(ambient: usize, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_ambient(ambient)?;
        let mut out = Vec::new();
        for m in masks {
            if m & !full_mask(ambient) != 0 {
                return Err(Error::domain(format!(
                    "mask {m:#b} outside the ambient [{ambient}]"
                )));
            }
            out.push(m);
        }
        Ok(Self::from_masks_unchecked(ambient, out))
    }

    /// Convenience constructor from 1-based vertex lists.
    pub fn from_faces(ambient: usize, faces: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let subsets = faces
            .into_iter()
            .map(|f| Subset::new(ambient, f))
            .collect::<Result<Vec<_>>>()?;
        Family::new(ambient, subsets)
    }

    pub(crate) fn from_masks_unchecked(ambient: usize, mut masks: Vec<u32>) -> Self {
        masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
        masks.dedup();
        Family { ambient, masks }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// `true` for the trivial family `{∅}`.
    pub fn is_trivial(&self) -> bool {
        self.masks == [0]
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    /// Members in canonical order.
    pub fn faces(&self) -> impl Iterator<Item = Subset> + '_ {
        self.masks
            .iter()
            .map(move |&m| Subset::from_bits(self.ambient, m).expect("stored mask is valid"))
    }

    pub fn contains_mask(&self, m: u32) -> bool {
        self.masks
            .binary_search_by_key(&(m.count_ones(), m), |x| (x.count_ones(), *x))
            .is_ok()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        s.ambient() == self.ambient && self.contains_mask(s.bits())
    }

    /// Union of the member sets, as a single subset of `[n]`.
    pub fn support(&self) -> Subset {
        let bits = self.masks.iter().fold(0u32, |a, b| a | b);
        Subset::from_bits(self.ambient, bits).expect("support is valid")
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        self.same_ambient(other)?;
        let mut masks = self.masks.clone();
        masks.extend_from_slice(&other.masks);
        Ok(Family::from_masks_unchecked(self.ambient, masks))
    }

    /// Closure of the family in the given mode.
    pub fn closure(&self, mode: ClosureMode) -> Result<Family> {
        match mode {
            ClosureMode::Down => {
                let mut out = Vec::new();
                for &m in &self.masks {
                    push_submasks(m, &mut out);
                }
                Ok(Family::from_masks_unchecked(self.ambient, out))
            }
            ClosureMode::ReducedDown => {
                if self.is_empty() {
                    return Err(Error::domain(
                        "reduced downward closure of the empty family",
                    ));
                }
                if self.contains_mask(0) {
                    return Err(Error::domain(
                        "reduced downward closure of a family containing the empty face",
                    ));
                }
                let mut out = Vec::new();
                for &m in &self.masks {
                    push_submasks(m, &mut out);
                }
                out.retain(|&m| m != 0);
                Ok(Family::from_masks_unchecked(self.ambient, out))
            }
            ClosureMode::Up => {
                let full = full_mask(self.ambient);
                let mut out = Vec::new();
                for &m in &self.masks {
                    // enumerate supersets of m: free positions are !m.
                    let free = !m & full;
                    let mut sub = free;
                    loop {
                        out.push(m | sub);
                        if sub == 0 {
                            break;
                        }
                        sub = (sub - 1) & free;
                    }
                }
                Ok(Family::from_masks_unchecked(self.ambient, out))
            }
        }
    }

    /// Complement of the family in the given mode.
    pub fn complement(&self, mode: ComplementMode) -> Result<Family> {
        match mode {
            ComplementMode::Faces => {
                let out: Vec<u32> = all_masks_canonical(self.ambient)
                    .into_iter()
                    .filter(|&m| !self.contains_mask(m))
                    .collect();
                Ok(Family::from_masks_unchecked(self.ambient, out))
            }
            ComplementMode::Pointwise => {
                let full = full_mask(self.ambient);
                let out: Vec<u32> = self.masks.iter().map(|&m| !m & full).collect();
                Ok(Family::from_masks_unchecked(self.ambient, out))
            }
            ComplementMode::Derived(1) => self.complement(ComplementMode::Faces),
            ComplementMode::Derived(2) => self.complement(ComplementMode::Pointwise),
            ComplementMode::Derived(l) => Err(Error::domain(format!(
                "derived complement depth {l} not in {{1, 2}}"
            ))),
        }
    }

    /// Inclusionwise maximal or minimal members. Always a transversal family.
    pub fn extremals(&self, mode: ExtremalMode) -> Family {
        let keep = |i: usize| -> bool {
            let m = self.masks[i];
            self.masks.iter().enumerate().all(|(j, &o)| {
                if i == j {
                    return true;
                }
                match mode {
                    ExtremalMode::Maximal => !(m & !o == 0 && m != o),
                    ExtremalMode::Minimal => !(o & !m == 0 && m != o),
                }
            })
        };
        let out: Vec<u32> = (0..self.masks.len())
            .filter(|&i| keep(i))
            .map(|i| self.masks[i])
            .collect();
        Family::from_masks_unchecked(self.ambient, out)
    }

    /// Minimal non-faces (of a downward-closed family) or maximal
    /// non-upfaces (of an upward-closed family).
    pub fn non_faces(&self, mode: NonFaceMode) -> Result<Family> {
        let flags = self.classify();
        match mode {
            NonFaceMode::Mnf => {
                if !flags.is_simplicial {
                    return Err(Error::domain(
                        "minimal non-faces require a downward-closed family",
                    ));
                }
                Ok(self
                    .complement(ComplementMode::Faces)?
                    .extremals(ExtremalMode::Minimal))
            }
            NonFaceMode::Mnu => {
                if !flags.is_upward {
                    return Err(Error::domain(
                        "maximal non-upfaces require an upward-closed family",
                    ));
                }
                Ok(self
                    .complement(ComplementMode::Faces)?
                    .extremals(ExtremalMode::Maximal))
            }
        }
    }

    /// Computes the four classification flags, each by its defining
    /// quantifier.
    pub fn classify(&self) -> Classification {
        let full = full_mask(self.ambient);
        let mut is_simplicial = true;
        let mut is_upward = true;
        for &m in &self.masks {
            // one-step deletions and additions suffice by induction
            for b in 0..self.ambient {
                let bit = 1u32 << b;
                if m & bit != 0 && !self.contains_mask(m & !bit) {
                    is_simplicial = false;
                }
                if m & bit == 0 && (m | bit) & !full == 0 && !self.contains_mask(m | bit) {
                    is_upward = false;
                }
            }
        }
        let mut is_transversal = true;
        for (i, &m) in self.masks.iter().enumerate() {
            for (j, &o) in self.masks.iter().enumerate() {
                if i != j && m & !o == 0 {
                    is_transversal = false;
                }
            }
        }
        let is_reduced = !self.is_empty() && !self.contains_mask(0);
        Classification {
            is_simplicial,
            is_upward,
            is_transversal,
            is_reduced,
        }
    }

    /// Image of the family under a permutation of the ambient. Preserves all
    /// classification flags and dimensions.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Family> {
        if sigma.degree() != self.ambient {
            return Err(Error::domain(format!(
                "permutation of [{}] applied to a family on [{}]",
                sigma.degree(),
                self.ambient
            )));
        }
        let faces = self
            .faces()
            .map(|s| s.relabel(sigma))
            .collect::<Result<Vec<_>>>()?;
        Family::new(self.ambient, faces)
    }

    /// Canonical total order key; used for deterministic enumeration.
    pub fn canon_key(&self) -> (usize, Vec<(u32, u32)>) {
        (
            self.ambient,
            self.masks.iter().map(|&m| (m.count_ones(), m)).collect(),
        )
    }

    fn same_ambient(&self, other: &Family) -> Result<()> {
        if self.ambient != other.ambient {
            Err(Error::domain(format!(
                "ambient mismatch: [{}] vs [{}]",
                self.ambient, other.ambient
            )))
        } else {
            Ok(())
        }
    }
}

impl PartialOrd for Family {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Family {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canon_key().cmp(&other.canon_key())
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, face) in self.faces().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{face}")?;
        }
        write!(f, "]")
    }
}

fn push_submasks(m: u32, out: &mut Vec<u32>) {
    let mut sub = m;
    loop {
        out.push(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & m;
    }
}
