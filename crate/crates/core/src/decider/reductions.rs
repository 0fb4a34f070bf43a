//! Reductions to smaller subproblems and the transfer results between
//! related pairs. Most of these are not part of the dispatcher's route;
//! the harness uses them to cross-check verdicts.

use serde::Serialize;

use super::{criteria::Finding, Decider, Verdict};
use crate::classify::classify;
use crate::error::{Error, Result};
use crate::group::{ElementId, Group};
use crate::lattice::{frattini_subgroup, sylow_2_subgroup, sylow_2_subgroups, two_elements};
use crate::mask::SubsetMask;
use crate::subgroup::{
    check_width, closure, commutator_subgroup, conjugate_subgroup, normalizer, product_subgroup,
    quotient_group, Subgroup,
};
use crate::transversal::{Transversal, TransversalSearch};

/// A pair `(K, H ∩ K)` with `K` rebuilt as a group on local ids.
#[derive(Clone, Debug)]
pub struct Subproblem {
    pub group: Group,
    pub subgroup: Subgroup,
    /// Local id to id in the parent group.
    pub embedding: Vec<ElementId>,
}

impl Subproblem {
    /// `h` as a subgroup of `k`, with `k` restricted to a group.
    pub fn new(g: &Group, k: &Subgroup, h: &Subgroup) -> Subproblem {
        debug_assert!(h.is_subgroup_of(k));
        let (group, embedding) = g.restrict(k);
        let mask = SubsetMask::from_elements(
            embedding.len(),
            (0..embedding.len()).filter(|&i| h.contains(embedding[i])),
        );
        Subproblem {
            subgroup: Subgroup::from_mask_unchecked(mask),
            group,
            embedding,
        }
    }

    pub fn describe(&self) -> String {
        format!("g={} h={}", self.group.hash(), self.subgroup.to_hex())
    }
}

#[derive(Clone, Debug)]
pub enum Reduction {
    Yes,
    Subproblem(Box<Subproblem>),
}

/// In `A ⋊ <b>` with `b` inverting the abelian `A`: a subgroup not inside
/// `A` is a perfect code, and one inside `A` is a perfect code of `G` iff
/// it is one of `A`.
pub fn shortcut_gen_dihedral(g: &Group, a: &Subgroup, h: &Subgroup) -> Result<Reduction> {
    check_width(g, h)?;
    check_width(g, a)?;
    // With A abelian of index 2, b inverts A exactly when every element
    // outside A is an involution.
    let valid = 2 * a.order() == g.order()
        && a.elements().all(|x| a.elements().all(|y| g.mul(x, y) == g.mul(y, x)))
        && g.elements().all(|x| a.contains(x) || g.is_involution(x));
    if !valid {
        return Err(Error::Precondition(
            "not a generalized dihedral decomposition".into(),
        ));
    }
    if h.is_subgroup_of(a) {
        Ok(Reduction::Subproblem(Box::new(Subproblem::new(g, a, h))))
    } else {
        Ok(Reduction::Yes)
    }
}

/// For nilpotent `G`: `(G, H)` reduces to `(P, Q)` with `P` the Sylow
/// 2-subgroup of `G` and `Q` that of `H`.
pub fn shortcut_nilpotent(g: &Group, h: &Subgroup) -> Result<Subproblem> {
    check_width(g, h)?;
    if !classify(g).is_nilpotent {
        return Err(Error::Precondition("group is not nilpotent".into()));
    }
    let p = Subgroup::from_mask_unchecked(two_elements(g, &Subgroup::whole(g)));
    let q = Subgroup::from_mask_unchecked(two_elements(g, h));
    Ok(Subproblem::new(g, &p, &q))
}

/// Yes when a Sylow 2-subgroup of `H` is a perfect code of `G`. The
/// converse is not claimed, so a failure is `Inapplicable`, never `No`.
/// Sylow 2-subgroups of `H` are conjugate in `H` and conjugation preserves
/// perfect codes, so one of them is tested.
pub fn shortcut_sylow_lift(decider: &Decider, g: &Group, h: &Subgroup) -> Result<Finding> {
    let q = sylow_2_subgroup(g, h)?;
    Ok(if decider.verdict(g, &q)?.is_yes() {
        Finding::Yes
    } else {
        Finding::Inapplicable
    })
}

/// Two verdicts that a theorem says must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub lhs: Verdict,
    pub rhs: Verdict,
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `decide(G, QK) = decide(G, Q)` for a 2-subgroup `Q` and odd-order `K`
/// such that every Sylow 2-subgroup of `N_G(Q)` normalizes `K`. Those
/// Sylow subgroups cover exactly the 2-elements of `N_G(Q)`, which is what
/// is checked.
pub fn shortcut_qk(
    decider: &Decider,
    g: &Group,
    q: &Subgroup,
    k: &Subgroup,
) -> Result<Equivalence> {
    check_width(g, q)?;
    check_width(g, k)?;
    if !q.is_2_group() {
        return Err(Error::Precondition("Q must be a 2-subgroup".into()));
    }
    if k.order() % 2 == 0 {
        return Err(Error::Precondition("K must have odd order".into()));
    }
    let nk = normalizer(g, k);
    let gate = normalizer(g, q)
        .elements()
        .filter(|&x| g.is_2_element(x))
        .all(|x| nk.contains(x));
    if !gate {
        return Err(Error::Precondition(
            "a 2-element of N(Q) does not normalize K".into(),
        ));
    }
    let qk = product_subgroup(g, q, k)?;
    Ok(Equivalence {
        lhs: decider.verdict(g, &qk)?,
        rhs: decider.verdict(g, q)?,
    })
}

/// For metabelian `G` and normal `H`: `decide(G, H)` against `decide(G, Q)`
/// for a Sylow 2-subgroup `Q` of `H`.
pub fn shortcut_metabelian_normal(
    decider: &Decider,
    g: &Group,
    h: &Subgroup,
) -> Result<Equivalence> {
    check_width(g, h)?;
    if !classify(g).is_metabelian {
        return Err(Error::Precondition("group is not metabelian".into()));
    }
    if !h.is_normal(g) {
        return Err(Error::NotNormal);
    }
    let q = sylow_2_subgroup(g, h)?;
    let rhs = decider.verdict(g, &q)?;
    if let Some(x) = h.elements().find(|&x| conjugate_subgroup(g, &q, x) != q) {
        let other = conjugate_subgroup(g, &q, x);
        assert_eq!(decider.verdict(g, &other)?, rhs, "conjugate Sylow subgroups disagree");
    }
    Ok(Equivalence {
        lhs: decider.verdict(g, h)?,
        rhs,
    })
}

/// Verdicts for `(G, H)`, `(G, N)` and `(G/N, H/N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientTransfer {
    pub whole: Verdict,
    pub normal: Verdict,
    pub quotient: Verdict,
}

impl QuotientTransfer {
    /// A perfect code `H` gives a perfect code `H/N`.
    pub fn part_a_holds(&self) -> bool {
        !self.whole.is_yes() || self.quotient.is_yes()
    }

    /// Perfect codes `N` and `H/N` give a perfect code `H`.
    pub fn part_b_holds(&self) -> bool {
        !(self.normal.is_yes() && self.quotient.is_yes()) || self.whole.is_yes()
    }
}

pub fn quotient_transfer(
    decider: &Decider,
    g: &Group,
    n: &Subgroup,
    h: &Subgroup,
) -> Result<QuotientTransfer> {
    check_width(g, h)?;
    check_width(g, n)?;
    if !n.is_subgroup_of(h) {
        return Err(Error::Precondition("N must lie in H".into()));
    }
    let (gq, proj) = quotient_group(g, n)?;
    let hq = Subgroup::from_mask_unchecked(SubsetMask::from_elements(
        gq.order(),
        h.elements().map(|x| proj[x]),
    ));
    Ok(QuotientTransfer {
        whole: decider.verdict(g, h)?,
        normal: decider.verdict(g, n)?,
        quotient: decider.verdict(&gq, &hq)?,
    })
}

/// For a normal perfect code `H` and `[G, H] ≤ K ≤ H`: `K` is a perfect
/// code when `|H : K|` is odd, or when `[G, H]` is a perfect code of `G`
/// and `K` one of `H`. Otherwise `Inapplicable`.
pub fn commutator_transfer(
    decider: &Decider,
    g: &Group,
    h: &Subgroup,
    k: &Subgroup,
) -> Result<Finding> {
    check_width(g, h)?;
    check_width(g, k)?;
    if !h.is_normal(g) {
        return Err(Error::NotNormal);
    }
    let whole = Subgroup::whole(g);
    let gh = commutator_subgroup(g, &whole, h);
    if !gh.is_subgroup_of(k) || !k.is_subgroup_of(h) {
        return Err(Error::Precondition("need [G, H] ≤ K ≤ H".into()));
    }
    if !decider.verdict(g, h)?.is_yes() {
        return Err(Error::Precondition("H is not a perfect code".into()));
    }
    if (h.order() / k.order()) % 2 == 1 {
        return Ok(Finding::Yes);
    }
    if decider.verdict(g, &gh)?.is_yes() {
        let sp = Subproblem::new(g, h, k);
        if decider.verdict(&sp.group, &sp.subgroup)?.is_yes() {
            return Ok(Finding::Yes);
        }
    }
    Ok(Finding::Inapplicable)
}

/// A 2-subgroup `Q` decided in `G` and in every Sylow 2-subgroup
/// containing it.
#[derive(Clone, Debug, Serialize)]
pub struct SylowContainment {
    pub direct: Verdict,
    /// `(P as mask, verdict of Q in P)`.
    pub per_sylow: Vec<(SubsetMask, Verdict)>,
}

impl SylowContainment {
    /// `Q` is a perfect code of `G` iff it is one of every such `P`.
    pub fn holds(&self) -> bool {
        self.direct.is_yes() == self.per_sylow.iter().all(|(_, v)| v.is_yes())
    }
}

pub fn sylow_containment_reduction(
    decider: &Decider,
    g: &Group,
    q: &Subgroup,
) -> Result<SylowContainment> {
    check_width(g, q)?;
    if !q.is_2_group() {
        return Err(Error::Precondition("Q must be a 2-subgroup".into()));
    }
    let mut per_sylow = Vec::new();
    for p in sylow_2_subgroups(g)? {
        if q.is_subgroup_of(&p) {
            let sp = Subproblem::new(g, &p, q);
            per_sylow.push((p.mask().clone(), decider.verdict(&sp.group, &sp.subgroup)?));
        }
    }
    Ok(SylowContainment {
        direct: decider.verdict(g, q)?,
        per_sylow,
    })
}

/// Which alternative holds for a 2-group.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Horn {
    /// Every `<c>` with `c ∉ Φ(G)` is a perfect code; one generator per
    /// distinct cyclic subgroup.
    Cyclic { generators: Vec<ElementId> },
    /// `<c>` is not a perfect code; `b ∈ N(<c>)` has `b² ∈ <c>` and no
    /// involution in `b<c>`; `<b, c>` is generalized quaternion and a
    /// perfect code, certified by `transversal`.
    Quaternion {
        c: ElementId,
        b: ElementId,
        subgroup: SubsetMask,
        transversal: Transversal,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct DichotomyReport {
    pub frattini: SubsetMask,
    pub horn: Horn,
}

impl DichotomyReport {
    /// Re-checks the certificate against `g` with the exhaustive search.
    pub fn certify(&self, g: &Group, budget: u64) -> Result<bool> {
        match &self.horn {
            Horn::Cyclic { generators } => {
                let outside: Vec<ElementId> =
                    g.elements().filter(|&x| !self.frattini.contains(x)).collect();
                let mut covered = SubsetMask::empty(g.order());
                for &c in generators {
                    let s = closure(g, &[c]);
                    if TransversalSearch::new(g, &s).budget(budget).cayley()?.is_none() {
                        return Ok(false);
                    }
                    covered.union_with(s.mask());
                }
                // Each c outside Φ generates one of the listed subgroups.
                let listed: Vec<Subgroup> = generators.iter().map(|&c| closure(g, &[c])).collect();
                Ok(outside
                    .iter()
                    .all(|&x| listed.contains(&closure(g, &[x]))))
            }
            Horn::Quaternion {
                c,
                b,
                subgroup,
                transversal,
            } => {
                let h = closure(g, &[*b, *c]);
                if h.mask() != subgroup || self.frattini.contains(*c) {
                    return Ok(false);
                }
                // The cyclic horn must fail at c, and b must show why.
                let cyc = closure(g, &[*c]);
                if TransversalSearch::new(g, &cyc).budget(budget).cayley()?.is_some() {
                    return Ok(false);
                }
                let normalizes = cyc.elements().all(|k| cyc.contains(g.conj(k, *b)));
                if !normalizes
                    || cyc.contains(*b)
                    || !cyc.contains(g.mul(*b, *b))
                    || cyc.elements().any(|k| g.is_involution(g.mul(*b, k)))
                {
                    return Ok(false);
                }
                let involutions = h.elements().filter(|&x| g.is_involution(x)).count();
                let cyclic = h.elements().any(|x| g.element_order(x) == h.order());
                Ok(involutions == 1
                    && !cyclic
                    && crate::transversal::verify_transversal(g, &h, transversal))
            }
        }
    }
}

/// Either every cyclic subgroup generated outside the Frattini subgroup is
/// a perfect code, or some generalized quaternion subgroup is.
pub fn two_group_dichotomy(decider: &Decider, g: &Group) -> Result<DichotomyReport> {
    if !g.order().is_power_of_two() {
        return Err(Error::Precondition("not a 2-group".into()));
    }
    let phi = frattini_subgroup(g)?;
    let mut seen: Vec<Subgroup> = Vec::new();
    let mut generators = Vec::new();
    for c in g.elements().filter(|&x| !phi.contains(x)) {
        let cyc = closure(g, &[c]);
        if seen.contains(&cyc) {
            continue;
        }
        if decider.verdict(g, &cyc)?.is_yes() {
            seen.push(cyc);
            generators.push(c);
            continue;
        }
        let b = normalizer(g, &cyc)
            .elements()
            .find(|&x| {
                !cyc.contains(x)
                    && cyc.contains(g.mul(x, x))
                    && !cyc.elements().any(|k| g.is_involution(g.mul(x, k)))
            })
            .ok_or_else(|| {
                Error::Inconsistent(format!("<{c}> fails but no element of N(<{c}>) shows it"))
            })?;
        let h = closure(g, &[b, c]);
        let transversal = TransversalSearch::new(g, &h)
            .budget(decider.node_budget())
            .cayley()?
            .ok_or_else(|| {
                Error::Inconsistent(format!("<{b}, {c}> is not a perfect code"))
            })?;
        return Ok(DichotomyReport {
            frattini: phi.mask().clone(),
            horn: Horn::Quaternion {
                c,
                b,
                subgroup: h.mask().clone(),
                transversal,
            },
        });
    }
    Ok(DichotomyReport {
        frattini: phi.mask().clone(),
        horn: Horn::Cyclic { generators },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::GroupSpec;
    use crate::lattice::enumerate_subgroups;
    use crate::transversal::find_cayley_transversal;

    fn built(s: &str) -> crate::builders::BuiltGroup {
        s.parse::<GroupSpec>().unwrap().build().unwrap()
    }

    fn oracle(g: &Group, h: &Subgroup) -> Verdict {
        Verdict::from_bool(find_cayley_transversal(g, h).unwrap().is_some())
    }

    #[test]
    fn gen_dihedral_examples() {
        let b = built("d6");
        let d = b.group.dihedral_structure().unwrap();
        let h = b.subgroup("b").unwrap();
        assert!(matches!(
            shortcut_gen_dihedral(&b.group, &d.abelian, &h).unwrap(),
            Reduction::Yes
        ));
        let b = built("d4");
        let a = &b.group.dihedral_structure().unwrap().abelian;
        let h = b.subgroup("r^2").unwrap();
        let Reduction::Subproblem(sp) = shortcut_gen_dihedral(&b.group, a, &h).unwrap() else {
            panic!("expected a reduction")
        };
        assert!(sp.group.same_table(&built("c4").group));
        assert_eq!(oracle(&sp.group, &sp.subgroup), Verdict::NotPerfectCode);
        let b = built("gd(2,4)");
        let a = b.group.dihedral_structure().unwrap().abelian.clone();
        let Reduction::Subproblem(sp) = shortcut_gen_dihedral(&b.group, &a, &a).unwrap() else {
            panic!("expected a reduction")
        };
        assert!(sp.subgroup.is_whole(&sp.group));
        // The rotations of D4 are not a valid A for a different split.
        let q = built("q8");
        let x = q.subgroup("x").unwrap();
        assert!(shortcut_gen_dihedral(&q.group, &x, &x).is_err());
    }

    #[test]
    fn nilpotent_examples() {
        let b = built("c12");
        let h = b.subgroup("2").unwrap();
        let sp = shortcut_nilpotent(&b.group, &h).unwrap();
        assert_eq!(sp.group.order(), 4);
        assert_eq!(sp.embedding, vec![0, 3, 6, 9]);
        assert_eq!(sp.subgroup.mask().to_vec(), vec![0, 2]);
        assert_eq!(oracle(&sp.group, &sp.subgroup), Verdict::NotPerfectCode);
        assert_eq!(oracle(&b.group, &h), Verdict::NotPerfectCode);
        let g = built("c15").group;
        let sp = shortcut_nilpotent(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(sp.group.order(), 1);
        let g = built("a(2,4)").group;
        let sp = shortcut_nilpotent(&g, &Subgroup::whole(&g)).unwrap();
        assert!(sp.group.same_table(&g) && sp.subgroup.is_whole(&g));
        assert!(shortcut_nilpotent(&built("d3").group, &Subgroup::trivial(&built("d3").group)).is_err());
    }

    #[test]
    fn sylow_lift_examples() {
        let dec = Decider::new();
        let b = built("c12");
        assert_eq!(shortcut_sylow_lift(&dec, &b.group, &b.subgroup("4").unwrap()).unwrap(), Finding::Yes);
        let b = built("d3");
        let g = &b.group;
        assert_eq!(shortcut_sylow_lift(&dec, g, &Subgroup::whole(g)).unwrap(), Finding::Yes);
        let b = built("c12");
        assert_eq!(
            shortcut_sylow_lift(&dec, &b.group, &b.subgroup("2").unwrap()).unwrap(),
            Finding::Inapplicable
        );
    }

    #[test]
    fn qk_examples() {
        let dec = Decider::new();
        let b = built("c12");
        let g = &b.group;
        let q = b.subgroup("6").unwrap();
        let k = b.subgroup("4").unwrap();
        let e = shortcut_qk(&dec, g, &q, &k).unwrap();
        assert!(e.holds());
        assert_eq!(e.lhs, oracle(g, &b.subgroup("2").unwrap()));
        assert_eq!(e.rhs, oracle(g, &q));
        assert_eq!(e.lhs, Verdict::NotPerfectCode);
        let e = shortcut_qk(&dec, g, &q, &Subgroup::trivial(g)).unwrap();
        assert_eq!(e.lhs, e.rhs);
        assert!(shortcut_qk(&dec, g, &k, &q).is_err());
        // K normal of odd order: the gate holds automatically.
        let b = built("sd(c3,4,2)");
        let g = &b.group;
        let k = b.subgroup("e1").unwrap();
        for q in enumerate_subgroups(g).unwrap().iter().filter(|q| q.is_2_group()) {
            assert!(shortcut_qk(&dec, g, q, &k).unwrap().holds());
        }
    }

    #[test]
    fn metabelian_examples() {
        let dec = Decider::new();
        let b = built("c4");
        let e = shortcut_metabelian_normal(&dec, &b.group, &b.subgroup("2").unwrap()).unwrap();
        assert_eq!(e.lhs, Verdict::NotPerfectCode);
        assert!(e.holds());
        let b = built("d4");
        let h = b.subgroup("r").unwrap();
        let e = shortcut_metabelian_normal(&dec, &b.group, &h).unwrap();
        assert_eq!(e.lhs, Verdict::PerfectCode);
        assert_eq!(e.lhs, oracle(&b.group, &h));
        assert!(e.holds());
        let b = built("d7");
        let e = shortcut_metabelian_normal(&dec, &b.group, &b.subgroup("r").unwrap()).unwrap();
        assert!(e.holds() && e.lhs.is_yes());
        for s in ["d6", "dic(12)", "sd(a(2,2),3,[[0,1],[1,1]])", "dp(d4,c3)"] {
            let g = built(s).group;
            for h in enumerate_subgroups(&g).unwrap().iter().filter(|h| h.is_normal(&g)) {
                assert!(shortcut_metabelian_normal(&dec, &g, h).unwrap().holds(), "{s}");
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let dec = Decider::new();
        let b = built("c8");
        let g = &b.group;
        let t = quotient_transfer(&dec, g, &b.subgroup("4").unwrap(), &b.subgroup("2").unwrap())
            .unwrap();
        assert_eq!(t.whole, Verdict::NotPerfectCode);
        assert_eq!(t.quotient, Verdict::NotPerfectCode);
        assert!(t.part_a_holds() && t.part_b_holds());
        let h = b.subgroup("2").unwrap();
        let t = quotient_transfer(&dec, g, &h, &h).unwrap();
        assert!(t.quotient.is_yes());
        let t = quotient_transfer(&dec, g, &Subgroup::trivial(g), &h).unwrap();
        assert_eq!(t.whole, t.quotient);
        assert!(quotient_transfer(&dec, g, &h, &b.subgroup("4").unwrap()).is_err());
    }

    #[test]
    fn commutator_examples() {
        let dec = Decider::new();
        let b = built("d4");
        let g = &b.group;
        let h = b.subgroup("r").unwrap();
        let k = b.subgroup("r^2").unwrap();
        assert_eq!(commutator_transfer(&dec, g, &h, &k).unwrap(), Finding::Inapplicable);
        assert_eq!(oracle(g, &k), Verdict::NotPerfectCode);
        assert_eq!(commutator_transfer(&dec, g, &h, &h).unwrap(), Finding::Yes);
        // Abelian G: perfect codes of a perfect code H are perfect in G.
        let b = built("a(2,2,4)");
        let g = &b.group;
        let l = enumerate_subgroups(g).unwrap();
        for h in l.iter().filter(|h| dec.verdict(g, h).unwrap().is_yes()) {
            for k in l.iter().filter(|k| k.is_subgroup_of(h)) {
                if commutator_transfer(&dec, g, h, k).unwrap() == Finding::Yes {
                    assert!(oracle(g, k).is_yes());
                }
            }
        }
        let b = built("c4");
        assert!(commutator_transfer(&dec, &b.group, &b.subgroup("2").unwrap(), &Subgroup::trivial(&b.group)).is_err());
    }

    #[test]
    fn sylow_containment() {
        let dec = Decider::new();
        for s in ["d3", "d6", "sd(a(2,2),3,[[0,1],[1,1]])", "dic(12)"] {
            let g = built(s).group;
            for q in enumerate_subgroups(&g).unwrap().iter().filter(|q| q.is_2_group()) {
                let r = sylow_containment_reduction(&dec, &g, q).unwrap();
                assert!(!r.per_sylow.is_empty());
                assert!(r.holds(), "{s} {:?}", q);
            }
        }
    }

    #[test]
    fn dichotomy_examples() {
        let dec = Decider::new();
        let g = built("a(2,2,2)").group;
        let r = two_group_dichotomy(&dec, &g).unwrap();
        assert!(r.frattini.len() == 1 && matches!(r.horn, Horn::Cyclic { .. }));
        assert!(r.certify(&g, 1_000_000).unwrap());
        let g = built("q8").group;
        let r = two_group_dichotomy(&dec, &g).unwrap();
        let Horn::Quaternion { subgroup, .. } = &r.horn else {
            panic!("expected the quaternion horn")
        };
        assert_eq!(subgroup.len(), 8);
        assert!(r.certify(&g, 1_000_000).unwrap());
        let g = built("c4").group;
        let r = two_group_dichotomy(&dec, &g).unwrap();
        assert_eq!(r.frattini.to_vec(), vec![0, 2]);
        let Horn::Cyclic { generators } = &r.horn else {
            panic!("expected the cyclic horn")
        };
        assert_eq!(generators, &vec![1]);
        assert!(two_group_dichotomy(&dec, &built("c6").group).is_err());
        for s in ["d4", "q16", "dp(q8,c2)", "a(2,4)", "sd(c8,2,3)", "d8", "dic(16)"] {
            let g = built(s).group;
            let r = two_group_dichotomy(&dec, &g).unwrap();
            assert!(r.certify(&g, 1_000_000).unwrap(), "{s}");
        }
    }
}
