//! The simplicial join product, the right action `⊳*` of relative pairs on
//! complexes, the join composition `∘*` on relative pairs, the classical
//! local operations (link, star, deletion, wedge) it specializes to, the
//! pushout decomposition, and the total algebra map of the join product.

use crate::base_operads::{compose_masks, Variant};
use crate::complex::{split_mask, SimplicialComplex};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::pair::RelativePair;

/// Joins a slice of complexes, left to right, onto the summed ambient.
/// The empty sequence joins to `{∅}` on `[0]`; any empty factor collapses
/// everything to the empty complex.
pub fn join_all(factors: &[&SimplicialComplex]) -> Result<SimplicialComplex> {
    let mut acc = SimplicialComplex::trivial(0)?;
    for f in factors {
        acc = acc.join(f)?;
    }
    Ok(acc)
}

/// The simplicial join product `Z*(K; (M_i, N_i)_i)`: the union over faces
/// `I ∈ K` of the joins `∗_i P_i^I`, with `P_i^I = M_i` if `i ∈ I`, else
/// `N_i`. Computed facet-wise (over the facets of `K` and the facets of the
/// chosen factors) and closed downward.
pub fn simplicial_join_product(
    k_cx: &SimplicialComplex,
    pairs: &[RelativePair],
) -> Result<SimplicialComplex> {
    let n = k_cx.ambient();
    if pairs.len() != n {
        return Err(Error::domain(format!(
            "{} slot pairs supplied for a complex on [{n}]",
            pairs.len()
        )));
    }
    let total_ambient: usize = pairs.iter().map(|p| p.ambient()).sum();
    crate::error::check_ambient(total_ambient)?;
    let mut out = SimplicialComplex::empty(total_ambient)?;
    // z(I) ⊆ z(I') for I ⊆ I', so the union over the facets suffices
    for facet in k_cx.facets().faces() {
        let factors: Vec<&SimplicialComplex> = (1..=n)
            .map(|i| {
                if facet.contains(i) {
                    pairs[i - 1].total()
                } else {
                    pairs[i - 1].sub()
                }
            })
            .collect();
        let term = join_all(&factors)?;
        out = out.union(&term)?;
    }
    Ok(out)
}

/// Face-wise reference evaluation of the join product; used as an oracle
/// against the facet-wise implementation.
pub fn simplicial_join_product_facewise(
    k_cx: &SimplicialComplex,
    pairs: &[RelativePair],
) -> Result<SimplicialComplex> {
    let n = k_cx.ambient();
    if pairs.len() != n {
        return Err(Error::domain("slot-pair length mismatch"));
    }
    let total_ambient: usize = pairs.iter().map(|p| p.ambient()).sum();
    let mut out = SimplicialComplex::empty(total_ambient)?;
    for face in k_cx.faces() {
        let factors: Vec<&SimplicialComplex> = (1..=n)
            .map(|i| {
                if face.contains(i) {
                    pairs[i - 1].total()
                } else {
                    pairs[i - 1].sub()
                }
            })
            .collect();
        out = out.union(&join_all(&factors)?)?;
    }
    Ok(out)
}

/// The right action `K ⊳_k* (M, N)`: the join product with `(pt, {∅})` in
/// every slot except `(M, N)` at slot `k`. Its faces are
/// `I ∘_k J` for `k ∈ I, J ∈ M` together with `I ∘_k^c J` for
/// `k ∉ I, J ∈ N`; both cases insert `J` into the `k`-gap of `I`.
pub fn right_action(
    k_cx: &SimplicialComplex,
    slot: usize,
    pair: &RelativePair,
) -> Result<SimplicialComplex> {
    let n = k_cx.ambient();
    if slot == 0 || slot > n {
        return Err(Error::domain(format!("slot {slot} outside [{n}]")));
    }
    let m = pair.ambient();
    crate::error::check_ambient(n + m - 1)?;
    let mut masks = Vec::new();
    for i in k_cx.family().masks() {
        let k_in = i & (1 << (slot - 1)) != 0;
        let source = if k_in { pair.total() } else { pair.sub() };
        for j in source.family().masks() {
            let variant = if k_in { Variant::Subst } else { Variant::Comp };
            masks.push(compose_masks(*i, n, slot, *j, m, variant));
        }
    }
    Ok(SimplicialComplex::from_family_unchecked(
        Family::from_masks_unchecked(n + m - 1, masks),
    ))
}

/// The classical local operations recovered from the right action.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalOp {
    /// `{I : k ∉ I, I ∪ {k} ∈ K}` on `[n]` (slot `k` becomes a ghost).
    Link,
    /// `{I : I ∪ {k} ∈ K}` on `[n]`.
    Star,
    /// `{I \ {k} : I ∈ K}` on `[n]` (slot `k` becomes a ghost).
    Delete,
    /// Vertex doubling on `[n+1]`.
    Wedge,
}

/// Computes a local operation directly from its face description.
pub fn local_op(k_cx: &SimplicialComplex, v: usize, op: LocalOp) -> Result<SimplicialComplex> {
    let n = k_cx.ambient();
    if v == 0 || v > n {
        return Err(Error::domain(format!("vertex {v} outside [{n}]")));
    }
    let bit = 1u32 << (v - 1);
    match op {
        LocalOp::Link => {
            let masks: Vec<u32> = k_cx
                .family()
                .masks()
                .iter()
                .filter(|&&m| m & bit == 0 && k_cx.contains_mask(m | bit))
                .copied()
                .collect();
            Ok(SimplicialComplex::from_family_unchecked(
                Family::from_masks_unchecked(n, masks),
            ))
        }
        LocalOp::Star => {
            let masks: Vec<u32> = k_cx
                .family()
                .masks()
                .iter()
                .filter(|&&m| k_cx.contains_mask(m | bit))
                .copied()
                .collect();
            Ok(SimplicialComplex::from_family_unchecked(
                Family::from_masks_unchecked(n, masks),
            ))
        }
        LocalOp::Delete => {
            let masks: Vec<u32> = k_cx.family().masks().iter().map(|&m| m & !bit).collect();
            Ok(SimplicialComplex::from_family_unchecked(
                Family::from_masks_unchecked(n, masks),
            ))
        }
        LocalOp::Wedge => {
            // facet recipe: facets without v gain v or v+1; facets with v
            // gain the pair {v, v+1}; vertices above v shift up
            let mut facet_masks = Vec::new();
            for f in k_cx.facets().masks() {
                // bits above v shift up by one; the v bit is re-added below
                let (below, above) = split_mask(*f, v);
                let shifted = below | (above << (v + 1));
                let vbit = 1u32 << (v - 1);
                let wbit = 1u32 << v;
                if f & vbit != 0 {
                    facet_masks.push(shifted | vbit | wbit);
                } else {
                    facet_masks.push(shifted | vbit);
                    facet_masks.push(shifted | wbit);
                }
            }
            let fam = Family::from_masks(n + 1, facet_masks)?
                .closure(crate::family::ClosureMode::Down)?;
            Ok(SimplicialComplex::from_family_unchecked(fam))
        }
    }
}

/// Deletion that also compacts the ambient to `[n−1]` (vertices above `v`
/// shift down); the plain [`LocalOp::Delete`] keeps `v` as a ghost so that
/// it can feed a slot join.
pub fn delete_compact(k_cx: &SimplicialComplex, v: usize) -> Result<SimplicialComplex> {
    let n = k_cx.ambient();
    if v == 0 || v > n {
        return Err(Error::domain(format!("vertex {v} outside [{n}]")));
    }
    let masks: Vec<u32> = k_cx
        .family()
        .masks()
        .iter()
        .map(|&m| {
            let (below, above) = split_mask(m, v);
            below | (above << (v - 1))
        })
        .collect();
    Ok(SimplicialComplex::from_family_unchecked(
        Family::from_masks_unchecked(n - 1, masks),
    ))
}

/// The join composition on relative pairs:
/// `(K, L) ∘_k* (M, N) = (K ⊳_k* (M,N), L ⊳_k* (M,N))`.
/// The unit is `(pt, {∅})`.
pub fn join_compose(p: &RelativePair, slot: usize, q: &RelativePair) -> Result<RelativePair> {
    let total = right_action(p.total(), slot, q)?;
    let sub = right_action(p.sub(), slot, q)?;
    RelativePair::new(total, sub)
}

/// The four corners of the pushout square under `K ⊳_k* (M, N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushoutWitness {
    /// `Lk_k(K) ∗_k M`
    pub link_side: SimplicialComplex,
    /// `(K \ k) ∗_k N`
    pub delete_side: SimplicialComplex,
    /// `Lk_k(K) ∗_k N`
    pub intersection: SimplicialComplex,
    /// `K ⊳_k* (M, N)`
    pub union: SimplicialComplex,
}

/// Computes the pushout square of the right action and verifies its two
/// identities: the union of the sides is the right action and their
/// intersection is `Lk_k(K) ∗_k N`.
pub fn pushout_witness(
    k_cx: &SimplicialComplex,
    slot: usize,
    pair: &RelativePair,
) -> Result<PushoutWitness> {
    let link = local_op(k_cx, slot, LocalOp::Link)?;
    let deleted = local_op(k_cx, slot, LocalOp::Delete)?;
    let link_side = link.slot_join(slot, pair.total())?;
    let delete_side = deleted.slot_join(slot, pair.sub())?;
    let intersection_direct = Family::from_masks_unchecked(
        link_side.ambient(),
        link_side
            .family()
            .masks()
            .iter()
            .filter(|m| delete_side.contains_mask(**m))
            .copied()
            .collect(),
    );
    let union = link_side.union(&delete_side)?;
    let action = right_action(k_cx, slot, pair)?;
    if union != action {
        return Err(Error::internal(
            "pushout union does not match the right action",
        ));
    }
    let link_n = link.slot_join(slot, pair.sub())?;
    if intersection_direct != *link_n.family() {
        return Err(Error::internal(
            "pushout intersection does not match link ∗ sub",
        ));
    }
    Ok(PushoutWitness {
        link_side,
        delete_side,
        intersection: link_n,
        union,
    })
}

/// The total algebra map: applies the join product to both components of a
/// relative pair, giving another relative pair.
pub fn algebra_total_map(p: &RelativePair, pairs: &[RelativePair]) -> Result<RelativePair> {
    let total = simplicial_join_product(p.total(), pairs)?;
    let sub = simplicial_join_product(p.sub(), pairs)?;
    RelativePair::new(total, sub)
}

/// Replaces the `k`-block of a slot-pair sequence by its own algebra value:
/// the right-hand side of the algebra axiom
/// `M(P ∘_k* Q; pairs) = M(P; outer pairs with slot k ← M(Q; k-block))`.
pub fn algebra_axiom_rhs(
    p: &RelativePair,
    slot: usize,
    q: &RelativePair,
    pairs: &[RelativePair],
) -> Result<RelativePair> {
    let n = p.ambient();
    let m = q.ambient();
    if pairs.len() != n + m - 1 {
        return Err(Error::domain("slot-pair length mismatch for the axiom"));
    }
    let block = &pairs[slot - 1..slot - 1 + m];
    let inner = algebra_total_map(q, block)?;
    let mut outer: Vec<RelativePair> = Vec::with_capacity(n);
    outer.extend_from_slice(&pairs[..slot - 1]);
    outer.push(inner);
    outer.extend_from_slice(&pairs[slot - 1 + m..]);
    algebra_total_map(p, &outer)
}
