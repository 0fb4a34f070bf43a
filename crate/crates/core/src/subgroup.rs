//! Subgroups and the structural queries built on them: closures, cosets,
//! double cosets, normalizers, conjugates, commutators and quotients.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ElementId, Group, IDENTITY};
use crate::mask::SubsetMask;

/// A subgroup of a parent group, identified by its element mask.
///
/// A `Subgroup` does not borrow its parent; every operation takes the parent
/// explicitly and checks that the mask width matches its order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    mask: SubsetMask,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.mask)
    }
}

impl Subgroup {
    /// Validates that `mask` is a subgroup of `g`.
    pub fn new(g: &Group, mask: SubsetMask) -> Result<Subgroup> {
        if mask.width() != g.order() {
            return Err(Error::WidthMismatch {
                expected: g.order(),
                found: mask.width(),
            });
        }
        if !mask.contains(IDENTITY) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for a in &mask {
            if !mask.contains(g.inv(a)) {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for b in &mask {
                if !mask.contains(g.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!("{a}*{b} missing")));
                }
            }
        }
        assert_eq!(g.order() % mask.len(), 0, "Lagrange");
        Ok(Subgroup { mask })
    }

    pub(crate) fn from_mask_unchecked(mask: SubsetMask) -> Subgroup {
        Subgroup { mask }
    }

    pub fn trivial(g: &Group) -> Subgroup {
        Subgroup {
            mask: SubsetMask::from_elements(g.order(), [IDENTITY]),
        }
    }

    pub fn whole(g: &Group) -> Subgroup {
        Subgroup {
            mask: SubsetMask::full(g.order()),
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(g: &Group, gens: &[ElementId]) -> Result<Subgroup> {
        for &x in gens {
            g.check_element(x)?;
        }
        Ok(closure(g, gens))
    }

    #[inline]
    pub fn mask(&self) -> &SubsetMask {
        &self.mask
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.mask.len()
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        self.mask.contains(x)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.mask.iter()
    }

    pub fn index_in(&self, g: &Group) -> usize {
        g.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self, g: &Group) -> bool {
        self.order() == g.order()
    }

    pub fn is_2_group(&self) -> bool {
        self.order().is_power_of_two()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            mask: self.mask.intersection(&other.mask),
        }
    }

    /// A small generating set, chosen greedily in ascending id order.
    pub fn generators(&self, g: &Group) -> Vec<ElementId> {
        let mut gens = Vec::new();
        let mut span = SubsetMask::from_elements(g.order(), [IDENTITY]);
        for x in &self.mask {
            if !span.contains(x) {
                gens.push(x);
                span = closure(g, &gens).mask;
            }
        }
        gens
    }

    pub fn is_normal(&self, g: &Group) -> bool {
        let gens = self.generators(g);
        g.elements()
            .all(|x| gens.iter().all(|&h| self.contains(g.conj(h, x))))
    }

    pub fn to_hex(&self) -> String {
        self.mask.to_hex()
    }
}

pub(crate) fn check_width(g: &Group, h: &Subgroup) -> Result<()> {
    if h.mask.width() == g.order() {
        Ok(())
    } else {
        Err(Error::WidthMismatch {
            expected: g.order(),
            found: h.mask.width(),
        })
    }
}

/// The subgroup generated by `gens`: the orbit of the identity under right
/// multiplication by the generators, which is closed under inverses in a
/// finite group.
pub fn closure(g: &Group, gens: &[ElementId]) -> Subgroup {
    let gens: Vec<ElementId> = gens.iter().copied().filter(|&x| x != IDENTITY).collect();
    let mut mask = SubsetMask::from_elements(g.order(), [IDENTITY]);
    let mut stack = vec![IDENTITY];
    while let Some(x) = stack.pop() {
        for &s in &gens {
            let y = g.mul(x, s);
            if mask.insert(y) {
                stack.push(y);
            }
        }
    }
    Subgroup { mask }
}

/// Smallest subgroup containing every element of `gens`.
pub fn subgroup_closure(g: &Group, gens: &SubsetMask) -> Subgroup {
    closure(g, &gens.to_vec())
}

/// `y^s` where `s` is the largest odd divisor of the order of `y`; the
/// result is a 2-element and a power of `y`.
pub fn odd_part_power(g: &Group, y: ElementId) -> ElementId {
    g.pow(y, odd_part(g.element_order(y)))
}

pub fn odd_part(mut n: usize) -> usize {
    while n > 0 && n % 2 == 0 {
        n /= 2;
    }
    n
}

pub fn two_part(n: usize) -> usize {
    n / odd_part(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A partition of a group into the cosets of a subgroup. Cosets are
/// numbered by ascending least element, which is also the representative;
/// coset 0 is the subgroup itself.
#[derive(Clone, Debug)]
pub struct CosetSystem {
    pub side: Side,
    pub reps: Vec<ElementId>,
    coset_of: Vec<u32>,
}

impl CosetSystem {
    #[inline]
    pub fn coset_of(&self, x: ElementId) -> usize {
        self.coset_of[x] as usize
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// The elements of coset `i`.
    pub fn members(&self, i: usize) -> impl Iterator<Item = ElementId> + '_ {
        self.coset_of
            .iter()
            .enumerate()
            .filter(move |(_, &c)| c as usize == i)
            .map(|(x, _)| x)
    }
}

pub fn coset_system(g: &Group, h: &Subgroup, side: Side) -> CosetSystem {
    let n = g.order();
    let mut coset_of = vec![u32::MAX; n];
    let mut reps = Vec::with_capacity(h.index_in(g));
    for x in 0..n {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let idx = reps.len() as u32;
        reps.push(x);
        for k in h.elements() {
            let y = match side {
                Side::Left => g.mul(x, k),
                Side::Right => g.mul(k, x),
            };
            coset_of[y] = idx;
        }
    }
    CosetSystem {
        side,
        reps,
        coset_of,
    }
}

/// Shape of the double coset union `H{x,x⁻¹}H` in units of left cosets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleCosetInfo {
    /// `|H{x,x⁻¹}H| / |H|`.
    pub m: usize,
    /// `|H : H ∩ xHx⁻¹|`, the number of left cosets in `HxH`.
    pub ell: usize,
    /// Whether `HxH = Hx⁻¹H`.
    pub merged: bool,
}

pub fn double_coset_info(g: &Group, h: &Subgroup, x: ElementId) -> Result<DoubleCosetInfo> {
    check_width(g, h)?;
    g.check_element(x)?;
    if h.contains(x) {
        return Err(Error::ElementInSubgroup(x));
    }
    let left = coset_system(g, h, Side::Left);
    Ok(double_coset_info_with(g, h, &left, x))
}

/// [`double_coset_info`] against a precomputed left coset system.
pub fn double_coset_info_with(
    g: &Group,
    h: &Subgroup,
    left: &CosetSystem,
    x: ElementId,
) -> DoubleCosetInfo {
    debug_assert_eq!(left.side, Side::Left);
    let mut fwd = SubsetMask::empty(left.len());
    let mut both = SubsetMask::empty(left.len());
    let xi = g.inv(x);
    for k in h.elements() {
        let c = left.coset_of(g.mul(k, x));
        fwd.insert(c);
        both.insert(c);
        both.insert(left.coset_of(g.mul(k, xi)));
    }
    let ell = fwd.len();
    let merged = fwd.contains(left.coset_of(xi));
    let m = both.len();
    assert_eq!(m, if merged { ell } else { 2 * ell });
    DoubleCosetInfo { m, ell, merged }
}

/// `N_G(H) = {x : xHx⁻¹ = H}`.
pub fn normalizer(g: &Group, h: &Subgroup) -> Subgroup {
    let gens = h.generators(g);
    let mask = SubsetMask::from_elements(
        g.order(),
        g.elements()
            .filter(|&x| gens.iter().all(|&k| h.contains(g.conj(k, x)))),
    );
    Subgroup { mask }
}

/// `x⁻¹ H x`.
pub fn conjugate_subgroup(g: &Group, h: &Subgroup, x: ElementId) -> Subgroup {
    Subgroup {
        mask: SubsetMask::from_elements(g.order(), h.elements().map(|k| g.conj(k, x))),
    }
}

/// `[A, B]`, generated by all `[a, b] = a⁻¹b⁻¹ab`.
pub fn commutator_subgroup(g: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut comms = SubsetMask::empty(g.order());
    for x in a.elements() {
        for y in b.elements() {
            comms.insert(g.commutator(x, y));
        }
    }
    subgroup_closure(g, &comms)
}

/// `G/N` over cosets numbered by least representative, with the natural
/// projection as a lookup table.
pub fn quotient_group(g: &Group, n: &Subgroup) -> Result<(Group, Vec<ElementId>)> {
    check_width(g, n)?;
    if !n.is_normal(g) {
        return Err(Error::NotNormal);
    }
    let cosets = coset_system(g, n, Side::Left);
    let q = cosets.len();
    let mut table = Vec::with_capacity(q * q);
    for &a in &cosets.reps {
        for &b in &cosets.reps {
            table.push(cosets.coset_of(g.mul(a, b)));
        }
    }
    let proj = g.elements().map(|x| cosets.coset_of(x)).collect();
    Ok((Group::from_trusted_usize(q, table), proj))
}

/// The odd-order elements of `g` when they form a subgroup.
pub fn odd_order_elements_subgroup(g: &Group) -> Result<Subgroup> {
    let mask = SubsetMask::from_elements(
        g.order(),
        g.elements().filter(|&x| g.element_order(x) % 2 == 1),
    );
    for a in &mask {
        for b in &mask {
            if !mask.contains(g.mul(a, b)) {
                return Err(Error::OddElementsNotClosed);
            }
        }
    }
    Ok(Subgroup { mask })
}

/// `{ab : a ∈ A, b ∈ B}` when it is a subgroup.
pub fn product_subgroup(g: &Group, a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    let mut mask = SubsetMask::empty(g.order());
    for x in a.elements() {
        for y in b.elements() {
            mask.insert(g.mul(x, y));
        }
    }
    Subgroup::new(g, mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::GroupSpec;

    fn build(s: &str) -> Group {
        s.parse::<GroupSpec>().unwrap().build().unwrap().group
    }

    fn sub(g: &Group, elems: &[ElementId]) -> Subgroup {
        Subgroup::new(g, SubsetMask::from_elements(g.order(), elems.iter().copied())).unwrap()
    }

    #[test]
    fn closure_examples() {
        let d4 = build("d4");
        assert!(subgroup_closure(&d4, &SubsetMask::empty(8)).is_trivial());
        assert_eq!(closure(&d4, &[1]).order(), 4);
        assert_eq!(closure(&d4, &[1, 4]).order(), 8);
        let z12 = build("c12");
        assert_eq!(closure(&z12, &[8]).order(), 3);
    }

    #[test]
    fn rejects_non_subgroups() {
        let z4 = build("c4");
        assert!(Subgroup::new(&z4, SubsetMask::from_elements(4, [0, 1])).is_err());
        assert!(Subgroup::new(&z4, SubsetMask::from_elements(4, [2])).is_err());
        assert!(Subgroup::new(&z4, SubsetMask::from_elements(5, [0])).is_err());
    }

    #[test]
    fn odd_part_power_examples() {
        let z12 = build("c12");
        let x = odd_part_power(&z12, 1);
        assert_eq!(x, 3);
        assert_eq!(z12.element_order(x), 4);
        let z8 = build("c8");
        assert_eq!(odd_part_power(&z8, 1), 1);
        assert_eq!(odd_part_power(&z12, 0), 0);
    }

    #[test]
    fn coset_examples() {
        let z4 = build("c4");
        let h = sub(&z4, &[0, 2]);
        let left = coset_system(&z4, &h, Side::Left);
        assert_eq!(left.reps, vec![0, 1]);
        assert_eq!(left.members(0).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(left.members(1).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(coset_system(&z4, &Subgroup::whole(&z4), Side::Right).len(), 1);
        assert_eq!(coset_system(&z4, &Subgroup::trivial(&z4), Side::Right).len(), 4);
    }

    #[test]
    fn double_coset_examples() {
        let z4 = build("c4");
        let h = sub(&z4, &[0, 2]);
        let info = double_coset_info(&z4, &h, 1).unwrap();
        assert_eq!(
            info,
            DoubleCosetInfo {
                m: 1,
                ell: 1,
                merged: true
            }
        );
        assert!(double_coset_info(&z4, &h, 2).is_err());

        // Abelian, x⁻¹H ≠ xH: m = 2.
        let z8 = build("c8");
        let h = sub(&z8, &[0, 4]);
        assert_eq!(double_coset_info(&z8, &h, 1).unwrap().m, 2);

        let e3 = build("a(2,2,2)");
        let h = sub(&e3, &[0, 1]);
        for x in 2..8 {
            let i = double_coset_info(&e3, &h, x).unwrap();
            assert!(i.merged && i.m == 1);
        }
    }

    #[test]
    fn normalizer_and_conjugates() {
        let d4 = build("d4");
        let b = sub(&d4, &[0, 4]);
        assert_eq!(normalizer(&d4, &b).order(), 4);
        let rot = closure(&d4, &[1]);
        assert!(normalizer(&d4, &rot).is_whole(&d4));
        assert_eq!(conjugate_subgroup(&d4, &rot, 5), rot);
        assert_eq!(conjugate_subgroup(&d4, &b, 4), b);

        // S3 as dihedral(3): reflections 3, 4, 5.
        let s3 = build("d3");
        let t = sub(&s3, &[0, 3]);
        let c = conjugate_subgroup(&s3, &t, 1);
        assert_eq!(c.order(), 2);
        assert_ne!(c, t);
        // r⁻¹ b r = r⁻¹ r⁻¹ b = r b (n = 3) -> element 3 + 1.
        assert!(c.contains(4));
    }

    #[test]
    fn commutators() {
        let d4 = build("d4");
        let whole = Subgroup::whole(&d4);
        let dg = commutator_subgroup(&d4, &whole, &whole);
        assert_eq!(dg.mask().to_vec(), vec![0, 2]);
        let triv = Subgroup::trivial(&d4);
        assert!(commutator_subgroup(&d4, &whole, &triv).is_trivial());
        let z6 = build("c6");
        let w = Subgroup::whole(&z6);
        assert!(commutator_subgroup(&z6, &w, &w).is_trivial());
    }

    #[test]
    fn quotients() {
        let z4 = build("c4");
        let (q, proj) = quotient_group(&z4, &sub(&z4, &[0, 2])).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj, vec![0, 1, 0, 1]);
        let (q, _) = quotient_group(&z4, &Subgroup::trivial(&z4)).unwrap();
        assert!(q.same_table(&z4));
        let (q, _) = quotient_group(&z4, &Subgroup::whole(&z4)).unwrap();
        assert_eq!(q.order(), 1);
        let d4 = build("d4");
        assert!(matches!(
            quotient_group(&d4, &sub(&d4, &[0, 4])),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn odd_elements() {
        let z9 = build("c9");
        assert!(odd_order_elements_subgroup(&z9).unwrap().is_whole(&z9));
        let z12 = build("c12");
        assert_eq!(
            odd_order_elements_subgroup(&z12).unwrap().mask().to_vec(),
            vec![0, 4, 8]
        );
        let s3 = build("d3");
        assert_eq!(
            odd_order_elements_subgroup(&s3).unwrap().mask().to_vec(),
            vec![0, 1, 2]
        );
        // A4: the eight 3-cycles and the identity do not close.
        let a = build("sd(a(2,2),3,[[0,1],[1,1]])");
        assert!(odd_order_elements_subgroup(&a).is_err());
    }
}
