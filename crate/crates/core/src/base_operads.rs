//! The permutative operad, its power-set operads on subsets and families,
//! and the power-set monad maps.
//!
//! The permutative operad has `[n]` as its set of arity-`n` operations and
//! composes by index arithmetic. Applying the power-set construction once
//! yields compositions of *subsets* of `[n]`; because `i ∘_k j` does not
//! depend on `j` when `i ≠ k`, the elementwise composition of nonempty
//! subsets collapses to a closed formula with two cases ([`subset_compose`],
//! the `Subst` variant). Conjugating by set complement gives the second
//! closed formula (the `Comp` variant). Applying the power-set construction
//! a second time gives the elementwise composition of *families* of subsets
//! ([`family_compose`]), which is the substitution/composition machinery on
//! hypergraphs used throughout the crate.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::subset::Subset;

/// An operation of the permutative operad: `value ∈ [arity]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermElement {
    arity: usize,
    value: usize,
}

impl PermElement {
    pub fn new(arity: usize, value: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::domain(
                "the permutative operad has no arity-0 operations",
            ));
        }
        if value == 0 || value > arity {
            return Err(Error::domain(format!("value {value} outside [{arity}]")));
        }
        Ok(PermElement { arity, value })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn value(&self) -> usize {
        self.value
    }
}

/// `i ∘_k j` in the permutative operad:
/// `i+m−1` if `k < i`, `i+j−1` if `k = i`, and `i` if `k > i`.
pub fn perm_compose(x: PermElement, k: usize, y: PermElement) -> Result<PermElement> {
    let (n, i) = (x.arity, x.value);
    let (m, j) = (y.arity, y.value);
    if k == 0 || k > n {
        return Err(Error::domain(format!("slot {k} outside [{n}]")));
    }
    let value = if k < i {
        i + m - 1
    } else if k == i {
        i + j - 1
    } else {
        i
    };
    PermElement::new(n + m - 1, value)
}

/// The two power compositions on subsets and families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Substitution: insert `J` at slot `k` when `k ∈ I`, otherwise collapse
    /// the slot.
    Subst,
    /// Composition (the complement transport): insert the full block `[m]`
    /// when `k ∈ I`, otherwise insert `J`.
    Comp,
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::Subst => write!(f, "subst"),
            Variant::Comp => write!(f, "comp"),
        }
    }
}

/// Mask-level composition kernel; the result lives on `[n+m-1]`.
pub(crate) fn compose_masks(
    i_bits: u32,
    _n: usize,
    k: usize,
    j_bits: u32,
    m: usize,
    variant: Variant,
) -> u32 {
    let below = i_bits & ((1u32 << (k - 1)) - 1);
    let above = i_bits >> k;
    let k_in_i = i_bits & (1 << (k - 1)) != 0;
    let outer = below | (above << (k + m - 1));
    let block = |b: u32| b << (k - 1);
    match variant {
        Variant::Subst => {
            if k_in_i {
                outer | block(j_bits)
            } else {
                outer
            }
        }
        Variant::Comp => {
            if k_in_i {
                outer | block(crate::subset::full_mask(m))
            } else {
                outer | block(j_bits)
            }
        }
    }
}

fn check_slot_arity(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("composition into an arity-0 element"));
    }
    if k == 0 || k > n {
        return Err(Error::domain(format!("slot {k} outside [{n}]")));
    }
    Ok(())
}

/// Closed-formula composition of subsets (`I ⊆ [n]`, `J ⊆ [m]`, `k ∈ [n]`,
/// result in `[n+m−1]`).
///
/// `Subst`: `I^{<k} ⊔ (J+k−1) ⊔ (I^{>k}+m−1)` if `k ∈ I`, else
/// `I^{<k} ⊔ (I^{>k}+m−1)`.
/// `Comp`: `I^{<k} ⊔ ([m]+k−1) ⊔ (I^{>k}+m−1)` if `k ∈ I`, else
/// `I^{<k} ⊔ (J+k−1) ⊔ (I^{>k}+m−1)`.
///
/// Both formulas are valid for every `J`, including the empty subset, and
/// for `m = 0`, where they delete the slot.
pub fn subset_compose(i: &Subset, k: usize, j: &Subset, variant: Variant) -> Result<Subset> {
    let (n, m) = (i.ambient(), j.ambient());
    check_slot_arity(n, k)?;
    let bits = compose_masks(i.bits(), n, k, j.bits(), m, variant);
    Subset::from_bits(n + m - 1, bits)
}

/// Strict elementwise power composition of subsets:
/// `I ∘_k J = {i ∘_k j : i ∈ I, j ∈ J}`.
///
/// Agrees with [`subset_compose`] whenever both operands are nonempty; an
/// empty operand absorbs the composition to the empty subset of `[n+m−1]`.
pub fn subset_compose_strict(i: &Subset, k: usize, j: &Subset, variant: Variant) -> Result<Subset> {
    let (n, m) = (i.ambient(), j.ambient());
    check_slot_arity(n, k)?;
    if i.is_empty() || j.is_empty() {
        return Subset::empty(n + m - 1);
    }
    subset_compose(i, k, j, variant)
}

/// Elementwise composition of families:
/// `A ∘_k B = {I ∘_k J : I ∈ A, J ∈ B}` with [`subset_compose`] on members.
///
/// An empty family absorbs (the comprehension over no pairs is empty).
pub fn family_compose(a: &Family, k: usize, b: &Family, variant: Variant) -> Result<Family> {
    let (n, m) = (a.ambient(), b.ambient());
    check_slot_arity(n, k)?;
    crate::error::check_ambient(n + m - 1)?;
    let mut masks = Vec::with_capacity(a.len() * b.len());
    for &i in a.masks() {
        for &j in b.masks() {
            masks.push(compose_masks(i, n, k, j, m, variant));
        }
    }
    Ok(Family::from_masks_unchecked(n + m - 1, masks))
}

/// An element of a power of the permutative operad: a subset at power one,
/// a family of subsets at power two.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PowerPermElement {
    Level1(Subset),
    Level2(Family),
}

impl PowerPermElement {
    pub fn arity(&self) -> usize {
        match self {
            PowerPermElement::Level1(s) => s.ambient(),
            PowerPermElement::Level2(f) => f.ambient(),
        }
    }

    pub fn level(&self) -> u8 {
        match self {
            PowerPermElement::Level1(_) => 1,
            PowerPermElement::Level2(_) => 2,
        }
    }
}

/// Slot composition of power elements; both sides must sit at the same
/// power. Level one composes by the closed formula, level two elementwise.
pub fn power_compose(
    a: &PowerPermElement,
    k: usize,
    b: &PowerPermElement,
    variant: Variant,
) -> Result<PowerPermElement> {
    match (a, b) {
        (PowerPermElement::Level1(i), PowerPermElement::Level1(j)) => {
            Ok(PowerPermElement::Level1(subset_compose(i, k, j, variant)?))
        }
        (PowerPermElement::Level2(x), PowerPermElement::Level2(y)) => {
            Ok(PowerPermElement::Level2(family_compose(x, k, y, variant)?))
        }
        _ => Err(Error::domain(format!(
            "power level mismatch: {} vs {}",
            a.level(),
            b.level()
        ))),
    }
}

/// Monad unit at power zero: `i ↦ {i}`.
pub fn monad_unit_perm(x: PermElement) -> Subset {
    Subset::new(x.arity(), [x.value()]).expect("value lies in the ambient")
}

/// Monad unit at power one: `I ↦ {I}`.
pub fn monad_unit_subset(s: &Subset) -> Family {
    Family::new(s.ambient(), [*s]).expect("ambients agree")
}

/// Monad product: the union of the members of a family, as a subset.
/// The empty family maps to the empty subset.
pub fn monad_mult(f: &Family) -> Subset {
    f.support()
}

/// One verified relation of the three-generator presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub label: String,
    pub holds: bool,
}

/// Report of the eleven-relation presentation check for the reduced power
/// of the permutative operad, plus the transposition action on the
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComTriasReport {
    pub relations: Vec<RelationCheck>,
    pub swap_action: bool,
}

impl ComTriasReport {
    pub fn all_pass(&self) -> bool {
        self.swap_action && self.relations.iter().all(|r| r.holds)
    }

    pub fn passed(&self) -> usize {
        self.relations.iter().filter(|r| r.holds).count()
    }
}

/// Verifies the eleven relations satisfied by the three binary generators
/// `{1}`, `{2}`, `{1,2} ⊆ [2]` of the reduced power of the permutative
/// operad, as equalities of arity-3 subsets, together with the `(12)`-swap
/// of the generators.
///
/// Relation labels encode the resulting arity-3 subset with `#` for a
/// member and `.` for a non-member.
pub fn comtrias_relations_check() -> ComTriasReport {
    let a = Subset::new(2, [1]).unwrap();
    let b = Subset::new(2, [2]).unwrap();
    let c = Subset::new(2, [1, 2]).unwrap();
    let o = |x: &Subset, k: usize, y: &Subset| subset_compose(x, k, y, Variant::Subst).unwrap();

    let mut relations = Vec::new();
    let mut rel = |label: &str, lhs: Subset, rhs: Subset| {
        relations.push(RelationCheck {
            label: label.to_string(),
            holds: lhs == rhs,
        });
    };

    // (#..): a∘₁a ≡ a∘₂a ≡ a∘₂b ≡ a∘₂c
    rel("#.. 1/3", o(&a, 1, &a), o(&a, 2, &a));
    rel("#.. 2/3", o(&a, 2, &a), o(&a, 2, &b));
    rel("#.. 3/3", o(&a, 2, &b), o(&a, 2, &c));
    // (..#): b∘₂b ≡ b∘₁a ≡ b∘₁b ≡ b∘₁c
    rel("..# 1/3", o(&b, 2, &b), o(&b, 1, &a));
    rel("..# 2/3", o(&b, 1, &a), o(&b, 1, &b));
    rel("..# 3/3", o(&b, 1, &b), o(&b, 1, &c));
    // (.#.): a∘₁b ≡ b∘₂a
    rel(".#.", o(&a, 1, &b), o(&b, 2, &a));
    // (#.#): c∘₁a ≡ c∘₂b
    rel("#.#", o(&c, 1, &a), o(&c, 2, &b));
    // (.##): c∘₁b ≡ b∘₂c
    rel(".##", o(&c, 1, &b), o(&b, 2, &c));
    // (##.): a∘₁c ≡ c∘₂a
    rel("##.", o(&a, 1, &c), o(&c, 2, &a));
    // (###): c∘₁c ≡ c∘₂c
    rel("###", o(&c, 1, &c), o(&c, 2, &c));

    let swap = crate::sym::Permutation::transposition(2, 1, 2).unwrap();
    let swap_action = a.relabel(&swap).unwrap() == b
        && b.relabel(&swap).unwrap() == a
        && c.relabel(&swap).unwrap() == c;

    ComTriasReport {
        relations,
        swap_action,
    }
}
