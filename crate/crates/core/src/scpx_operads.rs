//! The substitution and composition operads on simplicial complexes, their
//! transversal transports, named suboperads, vertex constructions, and a
//! brute-force decomposability oracle.

use crate::base_operads::{family_compose, Variant};
use crate::complex::{split_mask, SimplicialComplex};
use crate::error::{Error, Result};
use crate::family::{ClosureMode, ExtremalMode, Family};
use crate::subset::full_mask;

/// The standing small complexes of the theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedComplex {
    /// `{∅}` on `[n]`.
    Trivial(usize),
    /// `{∅, {1}, …, {n}}`.
    Discrete(usize),
    /// The full simplex `Δ_[n]`.
    Simplex(usize),
    /// All proper subsets of `[n]`.
    BoundarySimplex(usize),
    /// The downward closure of all `k`-subsets of `[n]`.
    CompletePure(usize, usize),
    /// `pt = {∅, {1}}` on `[1]`.
    Point,
}

impl NamedComplex {
    pub fn realize(&self) -> Result<SimplicialComplex> {
        match *self {
            NamedComplex::Trivial(n) => SimplicialComplex::trivial(n),
            NamedComplex::Discrete(n) => {
                let singles = (1..=n).map(|v| vec![v]);
                SimplicialComplex::from_facet_lists(n, singles)
            }
            NamedComplex::Simplex(n) => {
                SimplicialComplex::from_facet_lists(n, [(1..=n).collect::<Vec<_>>()])
            }
            NamedComplex::BoundarySimplex(n) => {
                crate::error::check_ambient(n)?;
                let masks = (0..=full_mask(n)).filter(|&m| m != full_mask(n) || n == 0);
                // for n = 0 there is no proper subset at all
                if n == 0 {
                    return SimplicialComplex::empty(0);
                }
                SimplicialComplex::new(Family::from_masks(n, masks)?)
            }
            NamedComplex::CompletePure(n, k) => {
                if k > n {
                    return Err(Error::domain(format!(
                        "complete pure complex needs k ≤ n, got k={k}, n={n}"
                    )));
                }
                crate::error::check_ambient(n)?;
                let facets = (0..=full_mask(n)).filter(|m| m.count_ones() as usize == k);
                let fam = Family::from_masks(n, facets)?.closure(ClosureMode::Down)?;
                SimplicialComplex::new(fam)
            }
            NamedComplex::Point => Ok(SimplicialComplex::point()),
        }
    }
}

fn check_nonzero_arities(n: usize, m: usize, k: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::domain(
            "simplicial complex operads have no arity-0 operations",
        ));
    }
    if k == 0 || k > n {
        return Err(Error::domain(format!("slot {k} outside [{n}]")));
    }
    Ok(())
}

/// Substitution `K ∘_k L`: the elementwise power composition in the `Subst`
/// variant. The result is downward closed whenever both inputs are, the
/// unit is `pt = {∅, {1}}`, and composing with the empty complex on either
/// side yields the empty complex.
pub fn substitute(
    k_cx: &SimplicialComplex,
    slot: usize,
    l_cx: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    check_nonzero_arities(k_cx.ambient(), l_cx.ambient(), slot)?;
    let fam = family_compose(k_cx.family(), slot, l_cx.family(), Variant::Subst)?;
    SimplicialComplex::new(fam)
}

/// Composition `K ∘_k^c L`: the downward closure of the elementwise power
/// composition in the `Comp` variant. The unit is `{∅}` on `[1]`; the empty
/// complex absorbs on either side.
pub fn compose_c(
    k_cx: &SimplicialComplex,
    slot: usize,
    l_cx: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    check_nonzero_arities(k_cx.ambient(), l_cx.ambient(), slot)?;
    let raw = family_compose(k_cx.family(), slot, l_cx.family(), Variant::Comp)?;
    Ok(SimplicialComplex::from_family_unchecked(
        raw.closure(ClosureMode::Down)?,
    ))
}

/// Dispatch over the two operad compositions on complexes.
pub fn compose(
    k_cx: &SimplicialComplex,
    slot: usize,
    l_cx: &SimplicialComplex,
    variant: Variant,
) -> Result<SimplicialComplex> {
    match variant {
        Variant::Subst => substitute(k_cx, slot, l_cx),
        Variant::Comp => compose_c(k_cx, slot, l_cx),
    }
}

/// Facets of `K ∘_k L` (either variant) computed from the facets of the
/// operands only, without materializing the full composition: the facet
/// candidates are assembled per the two case splits and then filtered to
/// the inclusionwise maximal ones. Equals `compose(…).facets()`.
///
/// Both operands must be nonempty and nontrivial.
pub fn facets_of_composition(
    k_cx: &SimplicialComplex,
    slot: usize,
    l_cx: &SimplicialComplex,
    variant: Variant,
) -> Result<Family> {
    if k_cx.is_empty() || k_cx.is_trivial() || l_cx.is_empty() || l_cx.is_trivial() {
        return Err(Error::precondition(
            "facet formula needs nonempty nontrivial operands",
        ));
    }
    let (n, m) = (k_cx.ambient(), l_cx.ambient());
    check_nonzero_arities(n, m, slot)?;
    crate::error::check_ambient(n + m - 1)?;
    let kf = k_cx.facets();
    let lf = l_cx.facets();
    let mut masks = Vec::new();
    for &f in kf.masks() {
        let (below, above) = split_mask(f, slot);
        let outer = below | (above << (slot + m - 1));
        let has_slot = f & (1 << (slot - 1)) != 0;
        match variant {
            Variant::Subst => {
                if has_slot {
                    for &fp in lf.masks() {
                        masks.push(outer | (fp << (slot - 1)));
                    }
                } else {
                    masks.push(outer);
                }
            }
            Variant::Comp => {
                if has_slot {
                    masks.push(outer | (full_mask(m) << (slot - 1)));
                } else {
                    for &fp in lf.masks() {
                        masks.push(outer | (fp << (slot - 1)));
                    }
                }
            }
        }
    }
    Ok(Family::from_masks_unchecked(n + m - 1, masks).extremals(ExtremalMode::Maximal))
}

/// Which transversal transport to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransportMode {
    /// Through downward closure and facets.
    Hat,
    /// Through upward closure and minimal elements.
    Check,
}

/// Transported compositions on transversal families.
///
/// `Hat` transports through the simplicial-complex operads: close both
/// operands downward, compose, take facets. `Check` transports through the
/// upward-complex operads: close upward, compose elementwise, take minimal
/// elements. On families in which `{∅}` (for `Subst`) or `{[n]}` (for
/// `Comp`) does not occur, the two transports coincide with the raw
/// elementwise composition.
pub fn transversal_compose(
    s: &Family,
    slot: usize,
    t: &Family,
    mode: TransportMode,
    variant: Variant,
) -> Result<Family> {
    if !s.classify().is_transversal || !t.classify().is_transversal {
        return Err(Error::domain(
            "transversal transport needs transversal operands",
        ));
    }
    check_nonzero_arities(s.ambient(), t.ambient(), slot)?;
    match mode {
        TransportMode::Hat => {
            let ks = SimplicialComplex::from_family_unchecked(s.closure(ClosureMode::Down)?);
            let kt = SimplicialComplex::from_family_unchecked(t.closure(ClosureMode::Down)?);
            Ok(compose(&ks, slot, &kt, variant)?.facets())
        }
        TransportMode::Check => {
            let us = s.closure(ClosureMode::Up)?;
            let ut = t.closure(ClosureMode::Up)?;
            Ok(family_compose(&us, slot, &ut, variant)?.extremals(ExtremalMode::Minimal))
        }
    }
}

/// `dup_vertex(K, i) = K ∘_i^c T₂`: relabel `j > i` to `j+1` and add `i+1`
/// to every facet containing `i`.
pub fn dup_vertex(k_cx: &SimplicialComplex, i: usize) -> Result<SimplicialComplex> {
    let t2 = NamedComplex::Trivial(2).realize()?;
    compose_c(k_cx, i, &t2)
}

/// `para_vertex(K, i) = K ∘_i D₂`: two parallel copies of every facet
/// containing `i`, one with `i` and one with `i+1`.
pub fn para_vertex(k_cx: &SimplicialComplex, i: usize) -> Result<SimplicialComplex> {
    let d2 = NamedComplex::Discrete(2).realize()?;
    substitute(k_cx, i, &d2)
}

/// `universal_dup(K, i) = K ∘_i^c Δ_[2]`: relabel `j > i` to `j+1` and add
/// the pair `{i, i+1}` to every facet.
pub fn universal_dup(k_cx: &SimplicialComplex, i: usize) -> Result<SimplicialComplex> {
    let s2 = NamedComplex::Simplex(2).realize()?;
    compose_c(k_cx, i, &s2)
}

/// `wed_vertex(K, i) = K ∘_i^c ∂Δ_[2]`: the wedge (vertex doubling) at `i`.
pub fn wed_vertex(k_cx: &SimplicialComplex, i: usize) -> Result<SimplicialComplex> {
    let bd2 = NamedComplex::BoundarySimplex(2).realize()?;
    compose_c(k_cx, i, &bd2)
}

/// Disjoint union: the complex on `[n+m]` with faces `K ∪ (L+n)`.
/// Both operands must be nonempty.
pub fn disjoint_union(
    k_cx: &SimplicialComplex,
    l_cx: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    if k_cx.is_empty() || l_cx.is_empty() {
        return Err(Error::precondition(
            "disjoint union needs nonempty operands",
        ));
    }
    let n = k_cx.ambient();
    let m = l_cx.ambient();
    crate::error::check_ambient(n + m)?;
    let mut masks: Vec<u32> = k_cx.family().masks().to_vec();
    masks.extend(l_cx.family().masks().iter().map(|&b| b << n));
    Ok(SimplicialComplex::from_family_unchecked(
        Family::from_masks_unchecked(n + m, masks),
    ))
}

/// Outcome of the decomposability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Witness {
        outer: SimplicialComplex,
        slot: usize,
        inner: SimplicialComplex,
    },
    Indecomposable,
}

/// Default ambient bound for [`decompose`].
pub const DECOMPOSE_DEFAULT_BOUND: usize = 6;

/// Largest supported search bound: splits with both sides of arity ≥ 2 must
/// stay within the family-enumeration bound.
pub const DECOMPOSE_MAX_BOUND: usize = crate::laws::ENUMERATION_BOUND + 1;

/// Exhaustively searches for `X = K ∘_k L` (in the given variant) with both
/// operands different from the variant's unit. Returns the first witness in
/// canonical order (splits `p + q − 1 = n` with `p` ascending, then the
/// slot, then `K`, then `L` in canonical family order), or reports
/// `Indecomposable`.
pub fn decompose(x: &SimplicialComplex, variant: Variant, workers: usize) -> Result<Decomposition> {
    decompose_bounded(x, variant, DECOMPOSE_DEFAULT_BOUND, workers)
}

type Hit = (usize, usize, SimplicialComplex, SimplicialComplex);

enum Shard {
    /// Both sides enumerated: (p, slot).
    Enumerated(usize, usize),
    /// p = 1 with the inner arity above the enumeration bound.
    UnitOuter,
    /// q = 1 with the outer arity above the enumeration bound: (slot).
    UnitInner(usize),
}

pub fn decompose_bounded(
    x: &SimplicialComplex,
    variant: Variant,
    bound: usize,
    workers: usize,
) -> Result<Decomposition> {
    let n = x.ambient();
    if n == 0 {
        return Err(Error::domain("decomposition search needs arity ≥ 1"));
    }
    if bound > DECOMPOSE_MAX_BOUND {
        return Err(Error::resource(format!(
            "search bound {bound} above the supported maximum {DECOMPOSE_MAX_BOUND}"
        )));
    }
    if n > bound {
        return Err(Error::resource(format!(
            "ambient {n} above the decomposition search bound {bound}"
        )));
    }
    let unit = match variant {
        Variant::Subst => SimplicialComplex::point(),
        Variant::Comp => SimplicialComplex::trivial(1)?,
    };
    let x_dim = x.dimension();
    let eb = crate::laws::ENUMERATION_BOUND;

    let mut table: Vec<Vec<SimplicialComplex>> = vec![Vec::new()];
    for a in 1..=n.min(eb) {
        table.push(crate::laws::enumerate_complexes(a)?);
    }

    let mut shards: Vec<Shard> = Vec::new();
    for p in 1..=n {
        let q = n + 1 - p;
        if p <= eb && q <= eb {
            for k in 1..=p {
                shards.push(Shard::Enumerated(p, k));
            }
        }
    }
    if n > eb {
        // the two edge splits whose large side cannot be enumerated
        shards.push(Shard::UnitOuter);
        for k in 1..=n {
            shards.push(Shard::UnitInner(k));
        }
    }

    let enumerated = |p: usize, k: usize| -> Option<Hit> {
        let q = n + 1 - p;
        for outer in &table[p] {
            if *outer == unit {
                continue;
            }
            let o_dim = outer.dimension();
            for inner in &table[q] {
                if *inner == unit {
                    continue;
                }
                // dimension pruning; sound only for nonempty nontrivial pairs
                if let (Some(xd), Some(od), Some(id)) = (x_dim, o_dim, inner.dimension()) {
                    if od >= 0 && id >= 0 {
                        let (lo, hi) = match variant {
                            Variant::Subst => (od, od + id),
                            Variant::Comp => (od, od + (id + 1).max(q as i64 - 1)),
                        };
                        if xd < lo || xd > hi {
                            continue;
                        }
                    }
                }
                if let Ok(c) = compose(outer, k, inner, variant) {
                    if c == *x {
                        return Some((p, k, outer.clone(), inner.clone()));
                    }
                }
            }
        }
        None
    };

    // p = 1: the outer operand is one of the three complexes on [1], and the
    // matching inner operand can be written down directly.
    let unit_outer = || -> Option<Hit> {
        let empty1 = SimplicialComplex::empty(1).ok()?;
        let empty_n = SimplicialComplex::empty(n).ok()?;
        let trivial_n = SimplicialComplex::trivial(n).ok()?;
        if x.is_empty() {
            // ∅₁ ∘₁ L = ∅ for every L; the empty complex is canonically first
            return Some((1, 1, empty1, empty_n));
        }
        match variant {
            Variant::Subst => {
                if x.is_trivial() {
                    // {∅}₁ ∘₁ L = {∅} for every nonempty L
                    let t1 = SimplicialComplex::trivial(1).ok()?;
                    return Some((1, 1, t1, trivial_n));
                }
            }
            Variant::Comp => {
                let full = NamedComplex::Simplex(n).realize().ok()?;
                if *x == full {
                    // pt ∘₁^c L = Δ for every nonempty L
                    return Some((1, 1, SimplicialComplex::point(), trivial_n));
                }
            }
        }
        None
    };

    // q = 1: the inner operand is on [1]; solving X = K ∘_k L for K.
    let unit_inner = |k: usize| -> Option<Hit> {
        match variant {
            Variant::Subst => {
                // L = {∅}₁ ghosts slot k, so X must have k as a ghost vertex,
                // and the outer operands are exactly X with any subcomplex of
                // X lifted onto k.
                if x.is_empty() || !x.is_ghost(k) {
                    return None;
                }
                let t1 = SimplicialComplex::trivial(1).ok()?;
                let bit = 1u32 << (k - 1);
                let best = subcomplexes_of(x)
                    .into_iter()
                    .map(|t| {
                        let mut masks: Vec<u32> = x.family().masks().to_vec();
                        masks.extend(t.family().masks().iter().map(|&m| m | bit));
                        SimplicialComplex::from_family_unchecked(Family::from_masks_unchecked(
                            n, masks,
                        ))
                    })
                    .min()?;
                Some((n, k, best, t1))
            }
            Variant::Comp => {
                // L = pt cones slot k: X = {I, I∪{k} : I ∈ K} forces
                // K = {I ∈ X : k ∉ I}.
                if x.is_empty() {
                    return None;
                }
                let bit = 1u32 << (k - 1);
                let d_masks: Vec<u32> = x
                    .family()
                    .masks()
                    .iter()
                    .copied()
                    .filter(|m| m & bit == 0)
                    .collect();
                let d = SimplicialComplex::from_family_unchecked(Family::from_masks_unchecked(
                    n, d_masks,
                ));
                let pt = SimplicialComplex::point();
                match compose_c(&d, k, &pt) {
                    Ok(c) if c == *x => Some((n, k, d, pt)),
                    _ => None,
                }
            }
        }
    };

    let eval = |shard: &Shard| -> Option<Hit> {
        match *shard {
            Shard::Enumerated(p, k) => enumerated(p, k),
            Shard::UnitOuter => unit_outer(),
            Shard::UnitInner(k) => unit_inner(k),
        }
    };

    let hits: Vec<Hit> = if workers > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::internal(format!("thread pool: {e}")))?;
        pool.install(|| shards.par_iter().filter_map(eval).collect())
    } else {
        shards.iter().filter_map(eval).collect()
    };

    match hits.into_iter().min() {
        Some((_, slot, outer, inner)) => Ok(Decomposition::Witness { outer, slot, inner }),
        None => Ok(Decomposition::Indecomposable),
    }
}

/// All subcomplexes of `x`, including the empty complex and `x` itself.
pub fn subcomplexes_of(x: &SimplicialComplex) -> Vec<SimplicialComplex> {
    // DFS over antichains of facets drawn from the faces of x
    let faces: Vec<u32> = x.family().masks().to_vec();
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn rec(
        faces: &[u32],
        from: usize,
        chosen: &mut Vec<u32>,
        n: usize,
        out: &mut Vec<SimplicialComplex>,
    ) {
        let fam = Family::from_masks_unchecked(n, chosen.clone());
        out.push(SimplicialComplex::from_family_unchecked(
            fam.closure(ClosureMode::Down).expect("closure within cap"),
        ));
        for i in from..faces.len() {
            let cand = faces[i];
            let incomparable = chosen.iter().all(|&c| c & !cand != 0 && cand & !c != 0);
            if incomparable {
                chosen.push(cand);
                rec(faces, i + 1, chosen, n, out);
                chosen.pop();
            }
        }
    }
    rec(&faces, 0, &mut chosen, x.ambient(), &mut out);
    out.sort();
    out.dedup();
    out
}
