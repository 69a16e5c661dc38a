//! Subsets of `[n] = {1,…,n}` with an explicit ambient size.
//!
//! A [`Subset`] is an `n`-bit mask together with the ambient `n` itself.
//! Keeping the ambient explicit matters: the empty subset of `[1]` and the
//! empty subset of `[2]` are different values, and every operadic
//! composition in this crate does ambient arithmetic (`n + m - 1`).

use crate::error::{check_ambient, Error, Result};
use crate::sym::Permutation;

/// A subset of `[n]`, stored as a bitmask (`bit i-1` ⇔ `i` is a member).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    ambient: usize,
    bits: u32,
}

impl Subset {
    /// The empty subset of `[n]`.
    pub fn empty(ambient: usize) -> Result<Self> {
        check_ambient(ambient)?;
        Ok(Subset { ambient, bits: 0 })
    }

    /// The full subset `[n]`.
    pub fn full(ambient: usize) -> Result<Self> {
        check_ambient(ambient)?;
        Ok(Subset {
            ambient,
            bits: full_mask(ambient),
        })
    }

    /// Builds a subset from 1-based vertex numbers.
    pub fn new(ambient: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_ambient(ambient)?;
        let mut bits = 0u32;
        for v in vertices {
            if v == 0 || v > ambient {
                return Err(Error::domain(format!(
                    "vertex {v} outside the ambient [{ambient}]"
                )));
            }
            bits |= 1 << (v - 1);
        }
        Ok(Subset { ambient, bits })
    }

    /// Builds a subset directly from a bitmask.
    pub fn from_bits(ambient: usize, bits: u32) -> Result<Self> {
        check_ambient(ambient)?;
        if bits & !full_mask(ambient) != 0 {
            return Err(Error::domain(format!(
                "mask {bits:#b} has members outside the ambient [{ambient}]"
            )));
        }
        Ok(Subset { ambient, bits })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn cardinality(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.ambient)
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.ambient && self.bits & (1 << (v - 1)) != 0
    }

    /// The members in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (1..=self.ambient).filter(move |v| bits & (1 << (v - 1)) != 0)
    }

    /// Dimension as a face: cardinality minus one (the empty face has
    /// dimension −1).
    pub fn face_dimension(&self) -> i64 {
        self.cardinality() as i64 - 1
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.ambient == other.ambient && self.bits & !other.bits == 0
    }

    /// Complement inside the ambient `[n]`.
    pub fn complement(&self) -> Subset {
        Subset {
            ambient: self.ambient,
            bits: !self.bits & full_mask(self.ambient),
        }
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.same_ambient(other)?;
        Ok(Subset {
            ambient: self.ambient,
            bits: self.bits | other.bits,
        })
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.same_ambient(other)?;
        Ok(Subset {
            ambient: self.ambient,
            bits: self.bits & other.bits,
        })
    }

    /// Image under a permutation of the ambient.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Subset> {
        if sigma.degree() != self.ambient {
            return Err(Error::domain(format!(
                "permutation of [{}] applied to a subset of [{}]",
                sigma.degree(),
                self.ambient
            )));
        }
        let mut bits = 0u32;
        for v in self.vertices() {
            bits |= 1 << (sigma.apply(v) - 1);
        }
        Ok(Subset {
            ambient: self.ambient,
            bits,
        })
    }

    /// Canonical sort key: cardinality first, then mask value.
    pub fn canon_key(&self) -> (u32, u32) {
        (self.bits.count_ones(), self.bits)
    }

    fn same_ambient(&self, other: &Subset) -> Result<()> {
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

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    /// Canonical order: ambient, then (cardinality, mask value).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ambient, self.canon_key()).cmp(&(other.ambient, other.canon_key()))
    }
}

impl std::fmt::Display for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for v in self.vertices() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        (1u32 << n) - 1
    }
}

/// All masks over `[n]` in canonical (cardinality, value) order.
pub(crate) fn all_masks_canonical(n: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..=full_mask(n)).collect();
    if n == 0 {
        masks = vec![0];
    }
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_membership() {
        let s = Subset::new(5, [2, 3, 5]).unwrap();
        assert_eq!(s.cardinality(), 3);
        assert!(s.contains(2) && s.contains(3) && s.contains(5));
        assert!(!s.contains(1) && !s.contains(4));
        assert_eq!(s.vertices().collect::<Vec<_>>(), vec![2, 3, 5]);
    }

    #[test]
    fn ambient_zero_is_legal() {
        let s = Subset::empty(0).unwrap();
        assert!(s.is_empty());
        assert!(s.is_full());
    }

    #[test]
    fn out_of_range_vertex_is_rejected() {
        assert!(Subset::new(3, [4]).is_err());
        assert!(Subset::new(3, [0]).is_err());
    }

    #[test]
    fn ambient_cap_enforced() {
        assert!(Subset::empty(31).is_err());
    }

    #[test]
    fn complement_is_involutive() {
        let s = Subset::new(4, [1, 3]).unwrap();
        assert_eq!(s.complement().complement(), s);
        assert_eq!(s.complement(), Subset::new(4, [2, 4]).unwrap());
    }

    #[test]
    fn equality_depends_on_ambient() {
        assert_ne!(Subset::empty(1).unwrap(), Subset::empty(2).unwrap());
    }
}
