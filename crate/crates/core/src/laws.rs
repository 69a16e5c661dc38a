//! A generic verifier for the operad axioms (unit, parallel, sequential,
//! equivariance) over any [`OperadInstance`], with exhaustive small-arity
//! enumeration and seeded random sampling.
//!
//! The checked laws, for `A ∈ O(ℓ)`, `B ∈ O(n)`, `C ∈ O(m)`:
//!
//! * unit: `id ∘₁ A = A ∘_i id = A` (when the instance is unital);
//! * parallel: `(A ∘_i B) ∘_{j+n−1} C = (A ∘_j C) ∘_i B` for `i < j ≤ ℓ`;
//! * sequential: `A ∘_i (B ∘_j C) = (A ∘_i B) ∘_{j+i−1} C` for `i ≤ ℓ`,
//!   `j ≤ n`;
//! * equivariance, in the one-sided forms
//!   `act(A,σ) ∘_{σ(i)} B = act(A ∘_i B, block_perm(σ,i,id))` and
//!   `A ∘_i act(B,τ) = act(A ∘_i B, block_perm(id,i,τ))`.
//!
//! The case space is partitioned by the outer operand (exhaustive mode) or
//! by case index with a per-case derived seed (sampled mode), so reports
//! are identical for every worker count and reproducible from the seed.
//! Violations are reported in canonical case order; they are data, not
//! errors.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::sym::{block_perm, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Debug;
use std::time::{Duration, Instant};

/// Largest `n` for which all downward-closed families on `[n]` are
/// enumerated (the counts grow like the Dedekind numbers).
pub const ENUMERATION_BOUND: usize = 5;

/// All simplicial complexes on `[n]` (including `∅` and `{∅}`), in
/// canonical order. The counts for `n = 1..5` are 3, 6, 20, 168, 7581.
pub fn enumerate_complexes(n: usize) -> Result<Vec<SimplicialComplex>> {
    if n > ENUMERATION_BOUND {
        return Err(Error::resource(format!(
            "complex enumeration on [{n}] above the bound {ENUMERATION_BOUND}"
        )));
    }
    // DFS over antichains of facets, in canonical mask order
    let masks = crate::subset::all_masks_canonical(n);
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn rec(
        masks: &[u32],
        from: usize,
        chosen: &mut Vec<u32>,
        n: usize,
        out: &mut Vec<SimplicialComplex>,
    ) {
        let fam = Family::from_masks_unchecked(n, chosen.clone());
        out.push(SimplicialComplex::from_family_unchecked(
            fam.closure(crate::family::ClosureMode::Down)
                .expect("closure within cap"),
        ));
        for i in from..masks.len() {
            let cand = masks[i];
            let ok = chosen.iter().all(|&c| c & !cand != 0 && cand & !c != 0);
            if ok {
                chosen.push(cand);
                rec(masks, i + 1, chosen, n, out);
                chosen.pop();
            }
        }
    }
    rec(&masks, 0, &mut chosen, n, &mut out);
    out.sort();
    Ok(out)
}

/// All transversal families on `[n]`, in canonical order (the facet sets of
/// the enumerated complexes).
pub fn enumerate_transversal(n: usize) -> Result<Vec<Family>> {
    let mut out: Vec<Family> = enumerate_complexes(n)?
        .into_iter()
        .map(|c| c.facets())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// All families of subsets of `[n]`; there are `2^(2^n)`, so `n ≤ 3`.
pub fn enumerate_families(n: usize) -> Result<Vec<Family>> {
    if n > 3 {
        return Err(Error::resource(format!(
            "family enumeration on [{n}] is limited to n ≤ 3"
        )));
    }
    let all = crate::subset::all_masks_canonical(n);
    let count = 1usize << all.len();
    let mut out = Vec::with_capacity(count);
    for pick in 0..count {
        let masks: Vec<u32> = all
            .iter()
            .enumerate()
            .filter(|(i, _)| pick & (1 << i) != 0)
            .map(|(_, &m)| m)
            .collect();
        out.push(Family::from_masks_unchecked(n, masks));
    }
    out.sort();
    Ok(out)
}

/// One operad presented to the law checker.
pub trait OperadInstance: Sync {
    type Elem: Clone + Eq + Ord + Debug + Send + Sync;

    fn name(&self) -> &str;

    /// Smallest arity carrying operations (0 when arity 0 is inhabited).
    fn min_arity(&self) -> usize;

    /// The unit in arity 1, when the operad is unital.
    fn unit(&self) -> Option<Self::Elem>;

    fn arity(&self, e: &Self::Elem) -> usize;

    /// Duplicate-free, deterministic enumeration of the arity-`n`
    /// operations.
    fn elements(&self, n: usize) -> Vec<Self::Elem>;

    /// A random arity-`n` operation, for sampled checking.
    fn sample(&self, n: usize, rng: &mut ChaCha8Rng) -> Option<Self::Elem>;

    fn compose(&self, a: &Self::Elem, k: usize, b: &Self::Elem) -> Result<Self::Elem>;

    /// The symmetric-group action by relabeling.
    fn act(&self, a: &Self::Elem, sigma: &Permutation) -> Result<Self::Elem>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LawKind {
    Unit,
    Parallel,
    Sequential,
    Equivariance,
}

pub const ALL_LAWS: [LawKind; 4] = [
    LawKind::Unit,
    LawKind::Parallel,
    LawKind::Sequential,
    LawKind::Equivariance,
];

impl std::fmt::Display for LawKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LawKind::Unit => write!(f, "unit"),
            LawKind::Parallel => write!(f, "parallel"),
            LawKind::Sequential => write!(f, "sequential"),
            LawKind::Equivariance => write!(f, "equivariance"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: LawKind,
    pub case_id: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCount {
    pub law: LawKind,
    pub cases: u64,
    pub violations: Vec<Violation>,
}

/// How the case space is walked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { count: u64, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub operad: String,
    pub arity_bound: usize,
    pub mode: CheckMode,
    pub laws: Vec<LawCount>,
    pub elapsed: Duration,
}

impl LawReport {
    pub fn total_cases(&self) -> u64 {
        self.laws.iter().map(|l| l.cases).sum()
    }

    pub fn total_violations(&self) -> usize {
        self.laws.iter().map(|l| l.violations.len()).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_violations() == 0
    }

    /// Equality that ignores wall-clock time; used for replay checks.
    pub fn same_findings(&self, other: &LawReport) -> bool {
        self.operad == other.operad
            && self.arity_bound == other.arity_bound
            && self.mode == other.mode
            && self.laws == other.laws
    }
}

impl std::fmt::Display for LawReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "operad={} bound={} mode={:?}",
            self.operad, self.arity_bound, self.mode
        )?;
        for l in &self.laws {
            writeln!(
                f,
                "  law={} cases={} violations={}",
                l.law,
                l.cases,
                l.violations.len()
            )?;
            for v in l.violations.iter().take(5) {
                writeln!(f, "    {}: {} != {}", v.case_id, v.lhs, v.rhs)?;
            }
        }
        write!(
            f,
            "  total: {} cases, {} violations in {:?}",
            self.total_cases(),
            self.total_violations(),
            self.elapsed
        )
    }
}

/// Accumulators for the four laws of one case-space slice.
#[derive(Default)]
struct QuadAccum {
    counts: [u64; 4],
    violations: [Vec<Violation>; 4],
}

impl QuadAccum {
    fn record<E: Debug + Eq>(
        &mut self,
        law: LawKind,
        case_id: impl Fn() -> String,
        lhs: &E,
        rhs: &E,
    ) {
        let idx = law as usize;
        self.counts[idx] += 1;
        if lhs != rhs {
            self.violations[idx].push(Violation {
                law,
                case_id: case_id(),
                lhs: format!("{lhs:?}"),
                rhs: format!("{rhs:?}"),
            });
        }
    }

    fn merge(mut self, other: QuadAccum) -> QuadAccum {
        for i in 0..4 {
            self.counts[i] += other.counts[i];
        }
        let mut violations = self.violations;
        for (i, v) in other.violations.into_iter().enumerate() {
            violations[i].extend(v);
        }
        QuadAccum {
            counts: self.counts,
            violations,
        }
    }
}

/// Runs the four law suites over the instance, single-threaded.
pub fn check_laws<O: OperadInstance>(inst: &O, arity_bound: usize, mode: CheckMode) -> LawReport {
    check_laws_with_workers(inst, arity_bound, mode, 1)
}

/// Runs the four law suites, optionally fanning the case space over a rayon
/// pool. The partitioning is independent of the worker count, so the report
/// is always the same.
pub fn check_laws_with_workers<O: OperadInstance>(
    inst: &O,
    arity_bound: usize,
    mode: CheckMode,
    workers: usize,
) -> LawReport {
    let started = Instant::now();
    let accum = match mode {
        CheckMode::Exhaustive => {
            let lo = inst.min_arity();
            let universes: Vec<Vec<O::Elem>> = (0..=arity_bound)
                .map(|n| {
                    if n >= lo {
                        inst.elements(n)
                    } else {
                        Vec::new()
                    }
                })
                .collect();
            let slices: Vec<(usize, usize)> = (0..=arity_bound)
                .flat_map(|l| (0..universes[l].len()).map(move |ai| (l, ai)))
                .collect();
            let eval = |&(l, ai): &(usize, usize)| exhaustive_slice(inst, &universes, l, ai);
            map_merge(&slices, eval, workers)
        }
        CheckMode::Sampled { count, seed } => {
            let cases: Vec<u64> = (0..count).collect();
            let eval = |&case: &u64| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(case);
                sampled_case(inst, arity_bound, case, &mut rng)
            };
            map_merge(&cases, eval, workers)
        }
    };

    LawReport {
        operad: inst.name().to_string(),
        arity_bound,
        mode,
        laws: ALL_LAWS
            .iter()
            .map(|&law| LawCount {
                law,
                cases: accum.counts[law as usize],
                violations: accum.violations[law as usize].clone(),
            })
            .collect(),
        elapsed: started.elapsed(),
    }
}

fn map_merge<T: Sync, F: Fn(&T) -> QuadAccum + Sync>(
    items: &[T],
    eval: F,
    workers: usize,
) -> QuadAccum {
    if workers > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build();
        if let Ok(pool) = pool {
            return pool.install(|| {
                items
                    .par_iter()
                    .map(&eval)
                    .reduce(QuadAccum::default, QuadAccum::merge)
            });
        }
    }
    items
        .iter()
        .map(eval)
        .fold(QuadAccum::default(), QuadAccum::merge)
}

/// All law cases whose outer operand is `universes[l][ai]`.
fn exhaustive_slice<O: OperadInstance>(
    inst: &O,
    universes: &[Vec<O::Elem>],
    l: usize,
    ai: usize,
) -> QuadAccum {
    let mut acc = QuadAccum::default();
    let bound = universes.len() - 1;
    let a = &universes[l][ai];

    if let Some(id) = inst.unit() {
        if let Ok(lhs) = inst.compose(&id, 1, a) {
            acc.record(LawKind::Unit, || format!("id∘1 {a:?}"), &lhs, a);
        }
        for i in 1..=l {
            if let Ok(lhs) = inst.compose(a, i, &id) {
                acc.record(LawKind::Unit, || format!("{a:?} ∘{i} id"), &lhs, a);
            }
        }
    }

    // parallel: (A∘ᵢB)∘_{j+n-1}C = (A∘ⱼC)∘ᵢB for i < j ≤ l
    for i in 1..=l {
        for j in (i + 1)..=l {
            for nb in 0..=bound {
                for b in &universes[nb] {
                    let ab = match inst.compose(a, i, b) {
                        Ok(x) => x,
                        Err(_) => continue,
                    };
                    for c in universes.iter().flatten() {
                        let lhs = match inst.compose(&ab, j + nb - 1, c) {
                            Ok(x) => x,
                            Err(_) => continue,
                        };
                        let rhs = match inst.compose(a, j, c).and_then(|ac| inst.compose(&ac, i, b))
                        {
                            Ok(x) => x,
                            Err(_) => continue,
                        };
                        acc.record(
                            LawKind::Parallel,
                            || format!("({a:?} ∘{i} {b:?}) ∘{} {c:?}", j + nb - 1),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }

    // sequential: A∘ᵢ(B∘ⱼC) = (A∘ᵢB)∘_{j+i-1}C
    for i in 1..=l {
        for nb in 1..=bound {
            for b in &universes[nb] {
                let ab = match inst.compose(a, i, b) {
                    Ok(x) => x,
                    Err(_) => continue,
                };
                for j in 1..=nb {
                    for c in universes.iter().flatten() {
                        let lhs = match inst.compose(b, j, c).and_then(|bc| inst.compose(a, i, &bc))
                        {
                            Ok(x) => x,
                            Err(_) => continue,
                        };
                        let rhs = match inst.compose(&ab, j + i - 1, c) {
                            Ok(x) => x,
                            Err(_) => continue,
                        };
                        acc.record(
                            LawKind::Sequential,
                            || format!("{a:?} ∘{i} ({b:?} ∘{j} {c:?})"),
                            &lhs,
                            &rhs,
                        );
                    }
                }
            }
        }
    }

    // equivariance, outer and inner forms
    let perms_l = Permutation::all(l);
    for i in 1..=l {
        for (nb, universe_b) in universes.iter().enumerate() {
            let perms_b = Permutation::all(nb);
            for b in universe_b {
                let ab = match inst.compose(a, i, b) {
                    Ok(x) => x,
                    Err(_) => continue,
                };
                for sigma in &perms_l {
                    let lhs = match inst
                        .act(a, sigma)
                        .and_then(|a_s| inst.compose(&a_s, sigma.apply(i), b))
                    {
                        Ok(x) => x,
                        Err(_) => continue,
                    };
                    let rhs = match block_perm(sigma, i, &Permutation::identity(nb))
                        .and_then(|bp| inst.act(&ab, &bp))
                    {
                        Ok(x) => x,
                        Err(_) => continue,
                    };
                    acc.record(
                        LawKind::Equivariance,
                        || format!("act({a:?},{sigma:?}) ∘{} {b:?}", sigma.apply(i)),
                        &lhs,
                        &rhs,
                    );
                }
                for tau in &perms_b {
                    let lhs = match inst.act(b, tau).and_then(|b_t| inst.compose(a, i, &b_t)) {
                        Ok(x) => x,
                        Err(_) => continue,
                    };
                    let rhs = match block_perm(&Permutation::identity(l), i, tau)
                        .and_then(|bp| inst.act(&ab, &bp))
                    {
                        Ok(x) => x,
                        Err(_) => continue,
                    };
                    acc.record(
                        LawKind::Equivariance,
                        || format!("{a:?} ∘{i} act({b:?},{tau:?})"),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }

    acc
}

fn sampled_case<O: OperadInstance>(
    inst: &O,
    arity_bound: usize,
    case: u64,
    rng: &mut ChaCha8Rng,
) -> QuadAccum {
    let mut acc = QuadAccum::default();
    let lo = inst.min_arity().max(1);
    if lo > arity_bound {
        return acc;
    }
    let l = rng.gen_range(lo..=arity_bound);
    let nb = rng.gen_range(lo..=arity_bound);
    let mc = rng.gen_range(lo..=arity_bound);
    let (a, b, c) = match (
        inst.sample(l, rng),
        inst.sample(nb, rng),
        inst.sample(mc, rng),
    ) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => return acc,
    };

    if let Some(id) = inst.unit() {
        if let Ok(lhs) = inst.compose(&id, 1, &a) {
            acc.record(LawKind::Unit, || format!("case {case}: id∘1 A"), &lhs, &a);
        }
        let i = rng.gen_range(1..=l);
        if let Ok(lhs) = inst.compose(&a, i, &id) {
            acc.record(LawKind::Unit, || format!("case {case}: A∘{i} id"), &lhs, &a);
        }
    }
    if l >= 2 {
        let i = rng.gen_range(1..l);
        let j = rng.gen_range((i + 1)..=l);
        let lhs = inst
            .compose(&a, i, &b)
            .and_then(|ab| inst.compose(&ab, j + nb - 1, &c));
        let rhs = inst
            .compose(&a, j, &c)
            .and_then(|ac| inst.compose(&ac, i, &b));
        if let (Ok(lhs), Ok(rhs)) = (lhs, rhs) {
            acc.record(
                LawKind::Parallel,
                || format!("case {case}: parallel i={i} j={j}"),
                &lhs,
                &rhs,
            );
        }
    }
    {
        let i = rng.gen_range(1..=l);
        let j = rng.gen_range(1..=nb);
        let lhs = inst
            .compose(&b, j, &c)
            .and_then(|bc| inst.compose(&a, i, &bc));
        let rhs = inst
            .compose(&a, i, &b)
            .and_then(|ab| inst.compose(&ab, j + i - 1, &c));
        if let (Ok(lhs), Ok(rhs)) = (lhs, rhs) {
            acc.record(
                LawKind::Sequential,
                || format!("case {case}: sequential i={i} j={j}"),
                &lhs,
                &rhs,
            );
        }
    }
    {
        let i = rng.gen_range(1..=l);
        let perms = Permutation::all(l);
        let sigma = &perms[rng.gen_range(0..perms.len())];
        let lhs = inst
            .act(&a, sigma)
            .and_then(|a_s| inst.compose(&a_s, sigma.apply(i), &b));
        let rhs = inst.compose(&a, i, &b).and_then(|ab| {
            block_perm(sigma, i, &Permutation::identity(nb)).and_then(|bp| inst.act(&ab, &bp))
        });
        if let (Ok(lhs), Ok(rhs)) = (lhs, rhs) {
            acc.record(
                LawKind::Equivariance,
                || format!("case {case}: equivariance i={i}"),
                &lhs,
                &rhs,
            );
        }
    }
    acc
}

pub mod instances;

pub use instances::{instance_names, run_named_laws};
