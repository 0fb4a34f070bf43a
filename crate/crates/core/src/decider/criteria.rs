//! Criteria that decide a pair `(G, H)` directly from the table.

use crate::error::{Error, Result};
use crate::group::{ElementId, Group};
use crate::mask::SubsetMask;
use crate::subgroup::{
    check_width, coset_system, double_coset_info, double_coset_info_with, normalizer,
    odd_part_power, Side, Subgroup,
};

/// Result of a single criterion. `No` carries the offending element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finding {
    Yes,
    No(ElementId),
    Inapplicable,
}

/// For every `g ∉ H`: `gH` contains an involution or
/// `|H{g,g⁻¹}H| / |H|` is even. Returns the least `g` of the first left
/// coset that violates this.
///
/// `gH` contains an involution iff `HgH` does (conjugate by `H`), and when
/// `m` is odd `HgH = Hg⁻¹H`, so the condition is constant on the pair
/// `{gH, g⁻¹H}` and only one of them is examined.
pub fn criterion_basic(g: &Group, h: &Subgroup) -> Result<Finding> {
    check_width(g, h)?;
    let left = coset_system(g, h, Side::Left);
    let mut has_involution = vec![false; left.len()];
    for x in g.elements().filter(|&x| g.is_involution(x)) {
        has_involution[left.coset_of(x)] = true;
    }
    let passes = |x: ElementId| {
        has_involution[left.coset_of(x)] || double_coset_info_with(g, h, &left, x).m % 2 == 0
    };
    let mut seen = SubsetMask::empty(left.len());
    seen.insert(left.coset_of(0));
    for x in g.elements() {
        let c = left.coset_of(x);
        if !seen.insert(c) {
            continue;
        }
        let xi = g.inv(x);
        seen.insert(left.coset_of(xi));
        let ok = passes(x);
        debug_assert_eq!(ok, passes(xi));
        if !ok {
            return Ok(Finding::No(x));
        }
    }
    Ok(Finding::Yes)
}

/// For normal `H`: every `x` with `x² ∈ H` has some `k ∈ H` with
/// `(xk)² = 1`.
pub fn criterion_normal(g: &Group, h: &Subgroup) -> Result<Finding> {
    check_width(g, h)?;
    if !h.is_normal(g) {
        return Err(Error::NotNormal);
    }
    Ok(square_condition(g, h, g.elements()))
}

/// Whether the normalizer criterion is known to be conclusive: `H` is a
/// 2-group, or `|H|` or `|G:H|` is odd.
pub fn normalizer_gate(g: &Group, h: &Subgroup) -> bool {
    h.is_2_group() || h.order() % 2 == 1 || h.index_in(g) % 2 == 1
}

/// The square condition over 2-elements of `N_G(H)`. Only used under
/// [`normalizer_gate`]; otherwise `Inapplicable`.
pub fn criterion_normalizer(g: &Group, h: &Subgroup) -> Result<Finding> {
    check_width(g, h)?;
    if !normalizer_gate(g, h) {
        return Ok(Finding::Inapplicable);
    }
    let n = normalizer(g, h);
    Ok(square_condition(
        g,
        h,
        n.elements().filter(|&x| g.is_2_element(x)),
    ))
}

fn square_condition(g: &Group, h: &Subgroup, xs: impl Iterator<Item = ElementId>) -> Finding {
    for x in xs {
        if h.contains(x) || !h.contains(g.mul(x, x)) {
            continue;
        }
        if !h.elements().any(|k| g.is_involution(g.mul(x, k))) {
            return Finding::No(x);
        }
    }
    Finding::Yes
}

/// Odd order or odd index forces a perfect code. Never says no.
pub fn shortcut_odd(g: &Group, h: &Subgroup) -> Finding {
    if h.order() % 2 == 1 || h.index_in(g) % 2 == 1 {
        Finding::Yes
    } else {
        Finding::Inapplicable
    }
}

/// Turns a violating element into one with the sharper properties checked
/// by [`check_no_witness`]: pick `k ∈ H` with `(gk)² ∈ H` (it exists since
/// `g⁻¹ ∈ HgH`) and take the 2-part of `gk`. The coset `gH` is unchanged.
pub fn refine_no_witness(g: &Group, h: &Subgroup, raw: ElementId) -> Result<ElementId> {
    let k = h
        .elements()
        .find(|&k| h.contains(g.mul(g.mul(raw, k), g.mul(raw, k))))
        .ok_or_else(|| {
            Error::Inconsistent(format!("{raw} is not a violating element: g⁻¹ ∉ HgH"))
        })?;
    Ok(odd_part_power(g, g.mul(raw, k)))
}

/// `x` is a 2-element outside `H` with `x² ∈ H`, `|H : H ∩ xHx⁻¹|` odd
/// and no involution in `xH`. Such an element proves `H` is not a perfect
/// code.
pub fn check_no_witness(g: &Group, h: &Subgroup, x: ElementId) -> bool {
    if x >= g.order() || h.contains(x) || !g.is_2_element(x) || !h.contains(g.mul(x, x)) {
        return false;
    }
    let Ok(info) = double_coset_info(g, h, x) else {
        return false;
    };
    info.ell % 2 == 1
        && info.m % 2 == 1
        && !h.elements().any(|k| g.is_involution(g.mul(x, k)))
}
