//! Permutations of `[n] = {1,…,n}` and the block permutations used by the
//! operadic equivariance axiom.

use crate::error::{Error, Result};

/// A permutation of `[n]`, stored as the image list: `map[i-1] = sigma(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image list; fails unless it is a
    /// bijection of `[n]`.
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::domain(format!(
                    "{:?} is not a permutation of [{}]",
                    map, n
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (1..=n).collect(),
        }
    }

    /// The transposition `(a b)` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::domain(format!(
                "transposition ({a} {b}) outside [{n}]"
            )));
        }
        let mut map: Vec<usize> = (1..=n).collect();
        map.swap(a - 1, b - 1);
        Ok(Permutation { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// `sigma(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v - 1] = i + 1;
        }
        Permutation { map }
    }

    /// `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::domain("composing permutations of different degrees"));
        }
        Ok(Permutation {
            map: (1..=self.degree())
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// All elements of `S_n`, in a deterministic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        permute_rec(&mut cur, 0, &mut out);
        out
    }
}

fn permute_rec(cur: &mut Vec<usize>, at: usize, out: &mut Vec<Permutation>) {
    if at == cur.len() {
        out.push(Permutation { map: cur.clone() });
        return;
    }
    for i in at..cur.len() {
        cur.swap(at, i);
        permute_rec(cur, at + 1, out);
        cur.swap(at, i);
    }
}

/// The block permutation of `[n+m-1]` induced by `sigma ∈ S_n`, a slot
/// `k ∈ [n]` and `tau ∈ S_m`.
///
/// It acts as `tau` inside the block `[sigma(k), sigma(k)+m-1]` and as
/// `sigma` on the collapsed outer positions, so that for any of the subset
/// compositions in this crate
///
/// ```text
/// relabel(A, sigma) ∘_{sigma(k)} relabel(B, tau)
///     = relabel(A ∘_k B, block_perm(sigma, k, tau)).
/// ```
pub fn block_perm(sigma: &Permutation, k: usize, tau: &Permutation) -> Result<Permutation> {
    let n = sigma.degree();
    let m = tau.degree();
    if k == 0 || k > n {
        return Err(Error::domain(format!("slot {k} outside [{n}]")));
    }
    let sk = sigma.apply(k);
    let adj = |x: usize| if x < sk { x } else { x + m - 1 };
    let mut map = Vec::with_capacity(n + m - 1);
    for p in 1..=(n + m - 1) {
        let image = if p < k {
            adj(sigma.apply(p))
        } else if p < k + m {
            sk - 1 + tau.apply(p - k + 1)
        } else {
            adj(sigma.apply(p - m + 1))
        };
        map.push(image);
    }
    Permutation::new(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        for sigma in Permutation::all(4) {
            let inv = sigma.inverse();
            assert!(sigma.compose(&inv).unwrap().is_identity());
            assert!(inv.compose(&sigma).unwrap().is_identity());
        }
    }

    #[test]
    fn all_has_factorial_size() {
        assert_eq!(Permutation::all(1).len(), 1);
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn block_perm_is_bijective_and_blocky() {
        for sigma in Permutation::all(3) {
            for tau in Permutation::all(2) {
                for k in 1..=3 {
                    let bp = block_perm(&sigma, k, &tau).unwrap();
                    assert_eq!(bp.degree(), 4);
                    // block positions land in a contiguous block at sigma(k)
                    let sk = sigma.apply(k);
                    for j in 0..2 {
                        let img = bp.apply(k + j);
                        assert!(img >= sk && img < sk + 2);
                    }
                }
            }
        }
    }
}
