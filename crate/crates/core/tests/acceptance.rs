//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see the PASS lines).
//!
//! Criteria 7 and 9 assert two textbook identities about the composition
//! variant (the dimension bounds of `∘ᶜ` and the disjoint-union reading of
//! the left trivial-complex action) that direct enumeration refutes. The
//! tests state them as given and fail with explicit counterexamples; the
//! true identities are covered by passing unit tests in the library.

use powerset_operads::base_operads::{
    comtrias_relations_check, family_compose, monad_mult, monad_unit_perm, monad_unit_subset,
    perm_compose, subset_compose, subset_compose_strict, PermElement, Variant,
};
use powerset_operads::family::{ComplementMode, Family};
use powerset_operads::join_operad::{
    algebra_axiom_rhs, algebra_total_map, join_all, join_compose, local_op, pushout_witness,
    right_action, simplicial_join_product, LocalOp,
};
use powerset_operads::laws::{enumerate_complexes, enumerate_families, run_named_laws, CheckMode};
use powerset_operads::pl::{
    combinatorial_boundary, j_construction, recognize_low_dim, NeatPair, Recognition,
};
use powerset_operads::scpx_operads::{
    compose, decompose, disjoint_union, dup_vertex, facets_of_composition, para_vertex,
    subcomplexes_of, substitute, wed_vertex, Decomposition, NamedComplex,
};
use powerset_operads::{RelativePair, SimplicialComplex};
use std::time::Instant;

fn named(c: NamedComplex) -> SimplicialComplex {
    c.realize().unwrap()
}

fn all_pairs(n: usize) -> Vec<RelativePair> {
    let mut out = Vec::new();
    for total in enumerate_complexes(n).unwrap() {
        for sub in subcomplexes_of(&total) {
            out.push(RelativePair::new(total.clone(), sub).unwrap());
        }
    }
    out
}

fn verdict(criterion: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {criterion}: PASS");
    } else {
        println!(
            "criterion {criterion}: FAIL: {} violation(s), first: {}",
            failures.len(),
            failures[0]
        );
        panic!(
            "criterion {criterion} failed with {} violation(s):\n{}",
            failures.len(),
            failures
                .iter()
                .take(8)
                .cloned()
                .collect::<Vec<_>>()
                .join("\n")
        );
    }
}

#[test]
fn criterion_01_perm_figure_rows() {
    let started = Instant::now();
    let pe = |n, i| PermElement::new(n, i).unwrap();
    let mut failures = Vec::new();
    for (k, expected) in [(2usize, 5usize), (3, 4), (4, 3)] {
        let got = perm_compose(pe(5, 3), k, pe(3, 2)).unwrap();
        if got != pe(7, expected) {
            failures.push(format!("3∘{k}2 gave {got:?}, expected {expected} in [7]"));
        }
    }
    let elapsed = started.elapsed();
    if elapsed.as_millis() >= 1 {
        failures.push(format!("took {elapsed:?}, budget 1 ms"));
    }
    verdict("01 (permutative rows)", &failures);
}

#[test]
fn criterion_02_comtrias_relations() {
    let started = Instant::now();
    let report = comtrias_relations_check();
    let mut failures = Vec::new();
    if report.passed() != 11 {
        failures.push(format!("{}/11 relations hold: {report:?}", report.passed()));
    }
    if !report.swap_action {
        failures.push("the (12)-swap action fails".to_string());
    }
    if started.elapsed().as_secs() >= 1 {
        failures.push(format!("took {:?}, budget 1 s", started.elapsed()));
    }
    verdict("02 (eleven relations)", &failures);
}

#[test]
fn criterion_03_law_suites() {
    let started = Instant::now();
    let plan = [
        ("perm", 4usize),
        ("idemcom", 3),
        ("idemcom-c", 3),
        ("hypg-subst", 2),
        ("hypg-comp", 2),
        ("hypg-subst-reduced", 2),
        ("scpx-subst", 3),
        ("scpx-comp", 3),
        ("transv-hat-subst", 3),
        ("transv-check-subst", 3),
        ("transv-hat-comp", 3),
        ("transv-check-comp", 3),
        ("relscpx", 2),
    ];
    let mut failures = Vec::new();
    for (name, bound) in plan {
        let report = run_named_laws(name, bound, CheckMode::Exhaustive, 1).unwrap();
        if !report.is_clean() {
            failures.push(format!("{name}: {report}"));
        }
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs() >= 60 {
        failures.push(format!("suite took {elapsed:?}, budget 60 s"));
    }
    verdict("03 (law suites)", &failures);
}

#[test]
fn criterion_04_monad_morphisms() {
    let mut failures = Vec::new();
    // the monad product is a morphism for the elementwise power
    // compositions on both levels, where an empty operand absorbs
    let strict_family_compose = |a: &Family, k: usize, b: &Family| -> Family {
        let mut faces = Vec::new();
        for i in a.faces() {
            for j in b.faces() {
                faces.push(subset_compose_strict(&i, k, &j, Variant::Subst).unwrap());
            }
        }
        Family::new(a.ambient() + b.ambient() - 1, faces).unwrap()
    };
    // μ(A ∘_k B) = μ(A) ∘_k μ(B), exhaustively over hypergraphs on
    // ambients ≤ 2
    for n in 1..=2usize {
        for m in 1..=2usize {
            for a in enumerate_families(n).unwrap() {
                for b in enumerate_families(m).unwrap() {
                    for k in 1..=n {
                        let lhs = monad_mult(&strict_family_compose(&a, k, &b));
                        let rhs = subset_compose_strict(
                            &monad_mult(&a),
                            k,
                            &monad_mult(&b),
                            Variant::Subst,
                        )
                        .unwrap();
                        if lhs != rhs {
                            failures.push(format!("μ({a} ∘{k} {b}) = {lhs} but μ∘μ gives {rhs}"));
                        }
                    }
                }
            }
        }
    }
    // η(x ∘_k y) = η(x) ∘_k η(y) for all Perm elements with arities ≤ 3
    for n in 1..=3usize {
        for m in 1..=3usize {
            for i in 1..=n {
                for j in 1..=m {
                    for k in 1..=n {
                        let x = PermElement::new(n, i).unwrap();
                        let y = PermElement::new(m, j).unwrap();
                        let lhs = monad_unit_perm(perm_compose(x, k, y).unwrap());
                        let rhs = subset_compose(
                            &monad_unit_perm(x),
                            k,
                            &monad_unit_perm(y),
                            Variant::Subst,
                        )
                        .unwrap();
                        if lhs != rhs {
                            failures.push(format!("η({i}∘{k}{j}) = {lhs} != {rhs}"));
                        }
                        // and one level up
                        let lhs2 = monad_unit_subset(&rhs);
                        let rhs2 = family_compose(
                            &monad_unit_subset(&monad_unit_perm(x)),
                            k,
                            &monad_unit_subset(&monad_unit_perm(y)),
                            Variant::Subst,
                        )
                        .unwrap();
                        if lhs2 != rhs2 {
                            failures.push(format!("η² mismatch at ({i},{k},{j})"));
                        }
                    }
                }
            }
        }
    }
    verdict("04 (monad morphisms)", &failures);
}

#[test]
fn criterion_05_pointwise_complement_conjugacy() {
    let mut failures = Vec::new();
    let all2 = enumerate_complexes(2).unwrap();
    for k in &all2 {
        for l in &all2 {
            for slot in 1..=2usize {
                let lhs = substitute(k, slot, l)
                    .unwrap()
                    .family()
                    .complement(ComplementMode::Pointwise)
                    .unwrap();
                let rhs = family_compose(
                    &k.family().complement(ComplementMode::Pointwise).unwrap(),
                    slot,
                    &l.family().complement(ComplementMode::Pointwise).unwrap(),
                    Variant::Comp,
                )
                .unwrap();
                if lhs != rhs {
                    failures.push(format!("K={k} slot={slot} L={l}: {lhs} != {rhs}"));
                }
            }
        }
    }
    verdict("05 (complement conjugacy)", &failures);
}

#[test]
fn criterion_06_facet_formula_oracle() {
    let mut failures = Vec::new();
    let all3 = enumerate_complexes(3).unwrap();
    let all2 = enumerate_complexes(2).unwrap();
    for k in &all3 {
        if k.is_empty() || k.is_trivial() {
            continue;
        }
        for l in &all2 {
            if l.is_empty() || l.is_trivial() {
                continue;
            }
            for slot in 1..=3usize {
                for variant in [Variant::Subst, Variant::Comp] {
                    let fast = facets_of_composition(k, slot, l, variant).unwrap();
                    let slow = compose(k, slot, l, variant).unwrap().facets();
                    if fast != slow {
                        failures.push(format!(
                            "K={k} slot={slot} L={l} {variant}: {fast} != {slow}"
                        ));
                    }
                }
            }
        }
    }
    verdict("06 (facet formula)", &failures);
}

#[test]
fn criterion_07_dimension_formulas() {
    let mut failures = Vec::new();
    let all3 = enumerate_complexes(3).unwrap();
    for k in &all3 {
        if k.is_empty() || k.is_trivial() {
            continue;
        }
        let kd = k.dimension().unwrap();
        for l in &all3 {
            if l.is_empty() || l.is_trivial() {
                continue;
            }
            let ld = l.dimension().unwrap();
            let m = l.ambient() as i64;
            for slot in 1..=3usize {
                // substitution: dim ∈ [dim K, dim K + dim L], with the exact
                // value max(dim K, max{dim I + dim L : slot ∈ I}) and
                // equality dim K + dim L for pure K at a non-ghost slot
                let ds = substitute(k, slot, l).unwrap().dimension().unwrap();
                if ds < kd || ds > kd + ld {
                    failures.push(format!(
                        "subst bounds: dim({k} ∘{slot} {l}) = {ds} outside [{kd}, {}]",
                        kd + ld
                    ));
                }
                let exact = k
                    .faces()
                    .filter(|f| f.contains(slot))
                    .map(|f| f.face_dimension() + ld)
                    .fold(kd, i64::max);
                if ds != exact {
                    failures.push(format!(
                        "subst exact value: dim({k} ∘{slot} {l}) = {ds}, formula gives {exact}"
                    ));
                }
                if k.is_pure() && !k.is_ghost(slot) && ds != kd + ld {
                    failures.push(format!(
                        "subst pure case: dim({k} ∘{slot} {l}) = {ds} != {}",
                        kd + ld
                    ));
                }

                // composition: the stated bounds
                // [dim K + dim L + 1, dim K + m − 1] and the pure-case
                // equality dim K + m − 1
                let dc = powerset_operads::scpx_operads::compose_c(k, slot, l)
                    .unwrap()
                    .dimension()
                    .unwrap();
                if dc < kd + ld + 1 || dc > kd + m - 1 {
                    failures.push(format!(
                        "comp bounds: dim({k} ∘c{slot} {l}) = {dc} outside [{}, {}]",
                        kd + ld + 1,
                        kd + m - 1
                    ));
                }
                if k.is_pure() && !k.is_ghost(slot) && dc != kd + m - 1 {
                    failures.push(format!(
                        "comp pure case: dim({k} ∘c{slot} {l}) = {dc} != {}",
                        kd + m - 1
                    ));
                }
            }
        }
    }
    verdict("07 (dimension formulas)", &failures);
}

#[test]
fn criterion_08_indecomposability() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let cp42 = named(NamedComplex::CompletePure(4, 2));
    for variant in [Variant::Subst, Variant::Comp] {
        match decompose(&cp42, variant, 1).unwrap() {
            Decomposition::Indecomposable => {}
            Decomposition::Witness { outer, slot, inner } => failures.push(format!(
                "complete pure (4,2) decomposed under {variant} as {outer} ∘{slot} {inner}"
            )),
        }
    }
    let d3 = named(NamedComplex::CompletePure(3, 1));
    match decompose(&d3, Variant::Comp, 1).unwrap() {
        Decomposition::Indecomposable => {}
        Decomposition::Witness { outer, slot, inner } => failures.push(format!(
            "discrete(3) decomposed under comp as {outer} ∘{slot} {inner}"
        )),
    }
    let x = SimplicialComplex::from_facet_lists(3, vec![vec![1, 2], vec![3]]).unwrap();
    match decompose(&x, Variant::Subst, 1).unwrap() {
        Decomposition::Witness { outer, slot, inner } => {
            if outer != named(NamedComplex::Discrete(2))
                || slot != 1
                || inner != named(NamedComplex::Simplex(2))
            {
                failures.push(format!(
                    "wrong witness for the decomposable example: {outer} ∘{slot} {inner}"
                ));
            }
        }
        Decomposition::Indecomposable => {
            failures.push("the decomposable example was reported indecomposable".into())
        }
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs() >= 10 {
        failures.push(format!("search took {elapsed:?}, budget 10 s"));
    }
    verdict("08 (indecomposability)", &failures);
}

#[test]
fn criterion_09_module_action_identities() {
    let mut failures = Vec::new();
    let t2 = named(NamedComplex::Trivial(2));
    let d2 = named(NamedComplex::Discrete(2));
    let bd2 = named(NamedComplex::BoundarySimplex(2));
    for n in 1..=3usize {
        for k in enumerate_complexes(n).unwrap() {
            for i in 1..=n {
                let wed = wed_vertex(&k, i).unwrap();
                let via = powerset_operads::scpx_operads::compose_c(&k, i, &bd2).unwrap();
                if wed != via {
                    failures.push(format!("wed({k},{i}) != composition with {bd2}"));
                }
                let dup = dup_vertex(&k, i).unwrap();
                let via = powerset_operads::scpx_operads::compose_c(&k, i, &t2).unwrap();
                if dup != via {
                    failures.push(format!("dup({k},{i}) != composition with {t2}"));
                }
                let para = para_vertex(&k, i).unwrap();
                let via = substitute(&k, i, &d2).unwrap();
                if para != via {
                    failures.push(format!("para({k},{i}) != substitution of {d2}"));
                }
            }
        }
    }
    // both disjoint-union realizations must agree with the direct
    // construction: (D₂ ∘₂ L) ∘₁ K under substitution and
    // (T₂ ∘₂ᶜ L) ∘₁ᶜ K under composition
    'outer: for n in 1..=3usize {
        for m in 1..=3usize {
            for k in &enumerate_complexes(n).unwrap() {
                if k.is_empty() {
                    continue;
                }
                for l in &enumerate_complexes(m).unwrap() {
                    if l.is_empty() {
                        continue;
                    }
                    let direct = disjoint_union(k, l).unwrap();
                    let via_subst = substitute(&substitute(&d2, 2, l).unwrap(), 1, k).unwrap();
                    if via_subst != direct {
                        failures.push(format!(
                            "substitution realization differs from K ⊔ L for K={k}, L={l}"
                        ));
                    }
                    let via_comp = powerset_operads::scpx_operads::compose_c(
                        &powerset_operads::scpx_operads::compose_c(&t2, 2, l).unwrap(),
                        1,
                        k,
                    )
                    .unwrap();
                    if via_comp != direct {
                        failures.push(format!(
                            "composition realization differs from K ⊔ L: K={k}, L={l} gives {via_comp}, the join, not {direct}"
                        ));
                        if failures.len() > 4 {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    verdict("09 (module actions)", &failures);
}

#[test]
fn criterion_10_join_operad_identities() {
    let mut failures = Vec::new();
    let all3 = enumerate_complexes(3).unwrap();
    let all2 = enumerate_complexes(2).unwrap();
    let pairs2 = all_pairs(2);

    for k in &all3 {
        for slot in 1..=3usize {
            for pq in &pairs2 {
                // three formulations of the right action
                let face_formula = right_action(k, slot, pq).unwrap();
                let mut slot_pairs = vec![RelativePair::unit(); 3];
                slot_pairs[slot - 1] = pq.clone();
                let via_product = simplicial_join_product(k, &slot_pairs).unwrap();
                if face_formula != via_product {
                    failures.push(format!(
                        "face formula vs join product: K={k} slot={slot} pair={pq}"
                    ));
                }
                let link = local_op(k, slot, LocalOp::Link).unwrap();
                let deleted = local_op(k, slot, LocalOp::Delete).unwrap();
                let decomposition = link
                    .slot_join(slot, pq.total())
                    .unwrap()
                    .union(&deleted.slot_join(slot, pq.sub()).unwrap())
                    .unwrap();
                if face_formula != decomposition {
                    failures.push(format!(
                        "face formula vs link/delete decomposition: K={k} slot={slot} pair={pq}"
                    ));
                }
                // pushout identities (checked internally, error on failure)
                if let Err(e) = pushout_witness(k, slot, pq) {
                    failures.push(format!("pushout K={k} slot={slot} pair={pq}: {e}"));
                }
            }

            // local operation identities
            let empty1 = SimplicialComplex::empty(1).unwrap();
            let trivial1 = SimplicialComplex::trivial(1).unwrap();
            let checks: [(LocalOp, RelativePair); 4] = [
                (
                    LocalOp::Link,
                    RelativePair::new(trivial1.clone(), empty1.clone()).unwrap(),
                ),
                (
                    LocalOp::Star,
                    RelativePair::new(SimplicialComplex::point(), empty1.clone()).unwrap(),
                ),
                (
                    LocalOp::Delete,
                    RelativePair::new(trivial1.clone(), trivial1.clone()).unwrap(),
                ),
                (
                    LocalOp::Wedge,
                    RelativePair::new(
                        named(NamedComplex::Simplex(2)),
                        named(NamedComplex::BoundarySimplex(2)),
                    )
                    .unwrap(),
                ),
            ];
            for (op, pair) in &checks {
                let direct = local_op(k, slot, *op).unwrap();
                let via = right_action(k, slot, pair).unwrap();
                if direct != via {
                    failures.push(format!("local op {op:?} differs at K={k} slot={slot}"));
                }
            }
        }
    }

    // suboperad identifications
    for k in &all3 {
        if k.is_empty() {
            continue;
        }
        for l in &all2 {
            if l.is_empty() {
                continue;
            }
            for slot in 1..=3usize {
                let p = RelativePair::over_trivial(k.clone()).unwrap();
                let q = RelativePair::over_trivial(l.clone()).unwrap();
                let got = join_compose(&p, slot, &q).unwrap();
                if got.total() != &substitute(k, slot, l).unwrap() || !got.sub().is_trivial() {
                    failures.push(format!("(K,{{∅}}) identification fails at K={k} L={l}"));
                }
                let p = RelativePair::under_simplex(k.clone()).unwrap();
                let q = RelativePair::under_simplex(l.clone()).unwrap();
                let got = join_compose(&p, slot, &q).unwrap();
                let expected_total = named(NamedComplex::Simplex(4));
                if got.total() != &expected_total
                    || got.sub() != &powerset_operads::scpx_operads::compose_c(k, slot, l).unwrap()
                {
                    failures.push(format!("(Δ,K) identification fails at K={k} L={l}"));
                }
            }
        }
    }
    verdict("10 (join operad identities)", &failures);
}

#[test]
fn criterion_11_algebra_axiom() {
    let mut failures = Vec::new();
    let pairs2 = all_pairs(2);
    let pairs1 = all_pairs(1);

    // axiom over the join instance: slot pairs on [1] and on [2]
    for scale in [&pairs1, &pairs2] {
        for p in &pairs2 {
            for q in &pairs2 {
                for slot in 1..=2usize {
                    let composed = join_compose(p, slot, q).unwrap();
                    for s1 in scale.iter() {
                        for s2 in scale.iter() {
                            for s3 in scale.iter() {
                                let seq = [s1.clone(), s2.clone(), s3.clone()];
                                let lhs = algebra_total_map(&composed, &seq).unwrap();
                                let rhs = algebra_axiom_rhs(p, slot, q, &seq).unwrap();
                                if lhs != rhs {
                                    failures.push(format!(
                                        "axiom fails: P={p} slot={slot} Q={q} pairs=({s1},{s2},{s3})"
                                    ));
                                    if failures.len() > 4 {
                                        verdict("11 (algebra axiom)", &failures);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // restriction to (−, {∅}) gives the substitution-side structure map,
    // restriction to (Δ, −) the composition-side one
    let all2 = enumerate_complexes(2).unwrap();
    for k in &all2 {
        if k.is_empty() {
            continue;
        }
        for s1 in &pairs1 {
            for s2 in &pairs1 {
                let seq = [s1.clone(), s2.clone()];
                let p = RelativePair::over_trivial(k.clone()).unwrap();
                let got = algebra_total_map(&p, &seq).unwrap();
                let subs = join_all(&[s1.sub(), s2.sub()]).unwrap();
                if got.total() != &simplicial_join_product(k, &seq).unwrap() || got.sub() != &subs {
                    failures.push(format!("(−,{{∅}}) restriction fails at K={k}"));
                }
                let p = RelativePair::under_simplex(k.clone()).unwrap();
                let got = algebra_total_map(&p, &seq).unwrap();
                let totals = join_all(&[s1.total(), s2.total()]).unwrap();
                if got.sub() != &simplicial_join_product(k, &seq).unwrap() || got.total() != &totals
                {
                    failures.push(format!("(Δ,−) restriction fails at K={k}"));
                }
            }
        }
    }
    verdict("11 (algebra axiom)", &failures);
}

#[test]
fn criterion_12_neat_pl_closure() {
    let mut failures = Vec::new();
    for a in 1..=3usize {
        for b in 1..=3usize {
            for slot in 1..=a {
                let p = NeatPair::simplex(a).unwrap();
                let q = NeatPair::simplex(b).unwrap();
                match powerset_operads::pl::neat_compose(&p, slot, &q) {
                    Err(e) => failures.push(format!("neat ({a},{b},{slot}): {e}")),
                    Ok(out) => {
                        let expect = NeatPair::simplex(a + b - 1).unwrap();
                        if out.pair() != expect.pair() {
                            failures.push(format!("neat ({a},{b},{slot}) is not the simplex pair"));
                        }
                        // boundary of the composed total is the composed sub
                        let boundary = combinatorial_boundary(out.ball()).unwrap();
                        if &boundary != out.boundary() {
                            failures.push(format!("boundary mismatch at ({a},{b},{slot})"));
                        }
                        if out.ball_dim() <= 2 {
                            match recognize_low_dim(out.ball()).unwrap() {
                                Recognition::Ball(d) if d == out.ball_dim() => {}
                                other => failures.push(format!(
                                    "recognizer says {other} for the ({a},{b},{slot}) ball"
                                )),
                            }
                            match recognize_low_dim(out.boundary()).unwrap() {
                                Recognition::Sphere(d) if d == out.ball_dim() - 1 => {}
                                other => failures.push(format!(
                                    "recognizer says {other} for the ({a},{b},{slot}) boundary"
                                )),
                            }
                        }
                    }
                }
            }
        }
    }

    // iterated wedges of the triangle circle: every result of dimension ≤ 2
    // is a recognized sphere of the predicted dimension
    let cycle = named(NamedComplex::BoundarySimplex(3));
    for j1 in 1..=4usize {
        for j2 in 1..=4usize {
            for j3 in 1..=4usize {
                if j1 + j2 + j3 > 6 {
                    continue;
                }
                let j = [j1, j2, j3];
                let out = j_construction(&cycle, &j).unwrap();
                let expected_dim = 1 + (j1 + j2 + j3) as i64 - 3;
                if out.dimension() != Some(expected_dim) {
                    failures.push(format!(
                        "wedge dimensions: J={j:?} gives {:?}, expected {expected_dim}",
                        out.dimension()
                    ));
                }
                if out.ambient() != j1 + j2 + j3 {
                    failures.push(format!("wedge ambient: J={j:?}"));
                }
                if expected_dim <= 2 {
                    match recognize_low_dim(&out).unwrap() {
                        Recognition::Sphere(d) if d == expected_dim => {}
                        other => failures.push(format!("J={j:?} recognizes as {other}")),
                    }
                }
            }
        }
    }
    verdict("12 (neat PL closure)", &failures);
}

#[test]
fn criterion_13_enumeration_counts() {
    let mut failures = Vec::new();
    let expected = [3usize, 6, 20, 168, 7581];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let got = enumerate_complexes(n).unwrap().len();
        if got != want {
            failures.push(format!("count on [{n}]: got {got}, expected {want}"));
        }
    }

    // independent cross-check: build the complexes on [n] from pairs
    // (D, L) with L ⊆ D on [n−1], via K = D ∪ {I ∪ {n} : I ∈ L}
    let mut prev: Vec<SimplicialComplex> = vec![
        SimplicialComplex::empty(0).unwrap(),
        SimplicialComplex::trivial(0).unwrap(),
    ];
    for n in 1..=5usize {
        let mut next = Vec::new();
        for d in &prev {
            for l in &prev {
                if !l.is_subcomplex_of(d) {
                    continue;
                }
                let mut masks: Vec<u32> = d.family().masks().to_vec();
                let bit = 1u32 << (n - 1);
                masks.extend(l.family().masks().iter().map(|&m| m | bit));
                let fam = Family::from_masks(n, masks).unwrap();
                next.push(SimplicialComplex::new(fam).unwrap());
            }
        }
        next.sort();
        next.dedup();
        if next.len() != expected[n - 1] {
            failures.push(format!(
                "independent count on [{n}]: got {}, expected {}",
                next.len(),
                expected[n - 1]
            ));
        }
        if n <= 4 && next != enumerate_complexes(n).unwrap() {
            failures.push(format!("independent enumeration differs on [{n}]"));
        }
        prev = next;
    }
    verdict("13 (enumeration counts)", &failures);
}
