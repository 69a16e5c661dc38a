//! Relative simplicial complexes: pairs `(K, L)` with `L` a subcomplex of
//! `K` on the same ambient.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::sym::Permutation;

/// A relative simplicial complex `(total, sub)` with `sub ⊆ total`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelativePair {
    total: SimplicialComplex,
    sub: SimplicialComplex,
}

impl RelativePair {
    pub fn new(total: SimplicialComplex, sub: SimplicialComplex) -> Result<Self> {
        if total.ambient() != sub.ambient() {
            return Err(Error::domain(format!(
                "relative pair with mismatched ambients [{}] and [{}]",
                total.ambient(),
                sub.ambient()
            )));
        }
        if !sub.is_subcomplex_of(&total) {
            return Err(Error::domain("sub is not a subcomplex of total"));
        }
        Ok(RelativePair { total, sub })
    }

    /// The operad unit `(pt, {∅})`.
    pub fn unit() -> Self {
        RelativePair {
            total: SimplicialComplex::point(),
            sub: SimplicialComplex::trivial(1).expect("trivial on [1]"),
        }
    }

    /// `(K, {∅})`, the substitution-style embedding (requires `K` nonempty
    /// so that `{∅} ⊆ K`).
    pub fn over_trivial(total: SimplicialComplex) -> Result<Self> {
        let sub = SimplicialComplex::trivial(total.ambient())?;
        RelativePair::new(total, sub)
    }

    /// `(Δ_{[n]}, K)`, the composition-style embedding.
    pub fn under_simplex(sub: SimplicialComplex) -> Result<Self> {
        let n = sub.ambient();
        let total = crate::scpx_operads::NamedComplex::Simplex(n).realize()?;
        RelativePair::new(total, sub)
    }

    pub fn total(&self) -> &SimplicialComplex {
        &self.total
    }

    pub fn sub(&self) -> &SimplicialComplex {
        &self.sub
    }

    pub fn ambient(&self) -> usize {
        self.total.ambient()
    }

    pub fn into_parts(self) -> (SimplicialComplex, SimplicialComplex) {
        (self.total, self.sub)
    }

    pub fn relabel(&self, sigma: &Permutation) -> Result<RelativePair> {
        Ok(RelativePair {
            total: self.total.relabel(sigma)?,
            sub: self.sub.relabel(sigma)?,
        })
    }
}

impl std::fmt::Display for RelativePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.total, self.sub)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containment_is_checked() {
        let k = SimplicialComplex::from_facet_lists(2, vec![vec![1]]).unwrap();
        let l = SimplicialComplex::from_facet_lists(2, vec![vec![2]]).unwrap();
        assert!(RelativePair::new(k.clone(), l).is_err());
        let t = SimplicialComplex::trivial(2).unwrap();
        assert!(RelativePair::new(k.clone(), t).is_ok());
        // the empty complex is a subcomplex of everything
        let e = SimplicialComplex::empty(2).unwrap();
        assert!(RelativePair::new(k, e).is_ok());
    }

    #[test]
    fn ambients_must_agree() {
        let k = SimplicialComplex::point();
        let l = SimplicialComplex::trivial(2).unwrap();
        assert!(RelativePair::new(k, l).is_err());
    }
}
