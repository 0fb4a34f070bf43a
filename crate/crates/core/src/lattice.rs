//! Subgroup lattices and the queries that go through them (Sylow
//! 2-subgroups, maximal subgroups, the Frattini subgroup).

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{ElementId, Group};
use crate::mask::SubsetMask;
use crate::subgroup::{
    check_width, closure, conjugate_subgroup, normalizer, two_part, Subgroup,
};

/// Largest group order whose full subgroup lattice is enumerated.
pub const LATTICE_ORDER_BOUND: usize = 128;

/// All subgroups of `g`, sorted by order then mask. Cached on the group.
pub fn enumerate_subgroups(g: &Group) -> Result<Arc<Vec<Subgroup>>> {
    if let Some(l) = g.lattice.get() {
        return Ok(l.clone());
    }
    let l = Arc::new(enumerate_subgroups_with_bound(g, LATTICE_ORDER_BOUND)?);
    Ok(g.lattice.get_or_init(|| l).clone())
}

/// Cyclic-join enumeration: seed with every cyclic subgroup, then join
/// each newly found subgroup with every cyclic subgroup until nothing new
/// appears. Every subgroup is a join of cyclic ones, so this reaches all.
pub fn enumerate_subgroups_with_bound(g: &Group, bound: usize) -> Result<Vec<Subgroup>> {
    if g.order() > bound {
        return Err(Error::BoundExceeded {
            order: g.order(),
            bound,
        });
    }
    let mut seen: HashSet<SubsetMask> = HashSet::new();
    // (subgroup, generators) pairs; generators keep closures cheap.
    let mut cyclic: Vec<(Subgroup, ElementId)> = Vec::new();
    for x in g.elements() {
        let c = closure(g, &[x]);
        if seen.insert(c.mask().clone()) {
            cyclic.push((c, x));
        }
    }
    let mut all: Vec<Subgroup> = cyclic.iter().map(|(c, _)| c.clone()).collect();
    let mut frontier: Vec<(Subgroup, Vec<ElementId>)> = cyclic
        .iter()
        .map(|(c, x)| (c.clone(), vec![*x]))
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (s, gens) in &frontier {
            for (_, c) in &cyclic {
                if s.contains(*c) {
                    continue;
                }
                let mut jg = gens.clone();
                jg.push(*c);
                let j = closure(g, &jg);
                if seen.insert(j.mask().clone()) {
                    all.push(j.clone());
                    next.push((j, jg));
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.mask().cmp(b.mask())));
    Ok(all)
}

/// Proper subgroups not contained in any other proper subgroup.
pub fn maximal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let lattice = enumerate_subgroups(g)?;
    let proper: Vec<&Subgroup> = lattice.iter().filter(|s| !s.is_whole(g)).collect();
    Ok(proper
        .iter()
        .filter(|m| {
            !proper
                .iter()
                .any(|k| k.order() > m.order() && m.is_subgroup_of(k))
        })
        .map(|m| (*m).clone())
        .collect())
}

/// Intersection of all maximal subgroups (the whole group when there are
/// none, i.e. for the trivial group).
pub fn frattini_subgroup(g: &Group) -> Result<Subgroup> {
    let mut phi = Subgroup::whole(g);
    for m in maximal_subgroups(g)? {
        phi = phi.intersection(&m);
    }
    Ok(phi)
}

/// Every Sylow 2-subgroup, read off the lattice. All of them are checked
/// to be conjugate to the first.
pub fn sylow_2_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let target = two_part(g.order());
    let lattice = enumerate_subgroups(g)?;
    let sylows: Vec<Subgroup> = lattice
        .iter()
        .filter(|s| s.order() == target)
        .cloned()
        .collect();
    let first = &sylows[0];
    for p in &sylows[1..] {
        assert!(
            g.elements().any(|x| &conjugate_subgroup(g, first, x) == p),
            "Sylow 2-subgroups not conjugate"
        );
    }
    Ok(sylows)
}

/// One Sylow 2-subgroup of `within`, grown from the trivial subgroup: while
/// `P` is not Sylow, `N(P)/P` has even order, so some `x ∈ N(P)∖P` has
/// `x² ∈ P` and `<P, x>` doubles `P`. The least such `x` is used. No
/// lattice is needed, so this has no order bound.
pub fn sylow_2_subgroup(g: &Group, within: &Subgroup) -> Result<Subgroup> {
    check_width(g, within)?;
    let target = two_part(within.order());
    let mut p = Subgroup::trivial(g);
    let mut gens: Vec<ElementId> = Vec::new();
    while p.order() < target {
        let norm = normalizer(g, &p).intersection(within);
        let x = norm
            .elements()
            .find(|&x| !p.contains(x) && p.contains(g.mul(x, x)))
            .ok_or_else(|| Error::Inconsistent("no element doubles a 2-subgroup".into()))?;
        gens.push(x);
        p = closure(g, &gens);
    }
    Ok(p)
}

/// The set of 2-elements of `h`, which is its unique Sylow 2-subgroup when
/// `h` is nilpotent.
pub fn two_elements(g: &Group, h: &Subgroup) -> SubsetMask {
    SubsetMask::from_elements(
        g.order(),
        h.elements().filter(|&x| g.is_2_element(x)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::GroupSpec;

    fn build(s: &str) -> Group {
        s.parse::<GroupSpec>().unwrap().build().unwrap().group
    }

    /// Brute force: every subset containing the identity that is closed
    /// under multiplication.
    fn brute_force_subgroups(g: &Group) -> usize {
        let n = g.order();
        assert!(n <= 16);
        (0u32..1 << n)
            .filter(|bits| bits & 1 == 1)
            .filter(|bits| {
                (0..n).all(|a| {
                    bits >> a & 1 == 0
                        || (0..n).all(|b| bits >> b & 1 == 0 || bits >> g.mul(a, b) & 1 == 1)
                })
            })
            .count()
    }

    #[test]
    fn subgroup_counts() {
        let z4 = enumerate_subgroups(&build("c4")).unwrap();
        assert_eq!(
            z4.iter().map(|s| s.mask().to_vec()).collect::<Vec<_>>(),
            vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]
        );
        for (spec, expected) in [("q8", 6), ("a(2,2)", 5), ("d4", 10), ("d3", 6)] {
            let g = build(spec);
            assert_eq!(brute_force_subgroups(&g), expected, "{spec}");
            assert_eq!(enumerate_subgroups(&g).unwrap().len(), expected, "{spec}");
        }
        // Z2^4 has 1 + 15 + 35 + 15 + 1 subgroups.
        assert_eq!(enumerate_subgroups(&build("a(2,2,2,2)")).unwrap().len(), 67);
    }

    #[test]
    fn lattice_closed_under_conjugation_and_intersection() {
        for spec in ["d6", "q16", "dic(12)", "dp(d3,c2)"] {
            let g = build(spec);
            let l = enumerate_subgroups(&g).unwrap();
            let set: HashSet<_> = l.iter().map(|s| s.mask().clone()).collect();
            for s in l.iter() {
                for x in g.elements() {
                    assert!(set.contains(conjugate_subgroup(&g, s, x).mask()));
                }
                for t in l.iter().step_by(3) {
                    assert!(set.contains(s.intersection(t).mask()));
                }
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let g = build("c130");
        assert!(matches!(
            enumerate_subgroups(&g),
            Err(Error::BoundExceeded { order: 130, .. })
        ));
    }

    #[test]
    fn sylow_examples() {
        let z9 = build("c9");
        let s = sylow_2_subgroups(&z9).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].is_trivial());
        let q8 = build("q8");
        assert!(sylow_2_subgroups(&q8).unwrap()[0].is_whole(&q8));
        let s3 = build("d3");
        let s = sylow_2_subgroups(&s3).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.iter().all(|p| p.order() == 2));
    }

    #[test]
    fn greedy_sylow_matches_lattice() {
        for spec in ["d3", "d6", "dic(12)", "sd(c7,3,2)", "dp(q8,c3)", "sd(a(2,2),3,[[0,1],[1,1]])"] {
            let g = build(spec);
            let all = sylow_2_subgroups(&g).unwrap();
            let p = sylow_2_subgroup(&g, &Subgroup::whole(&g)).unwrap();
            assert!(all.contains(&p), "{spec}");
            // Its conjugates are exactly the lattice's Sylow subgroups.
            let conj: HashSet<_> = g.elements().map(|x| conjugate_subgroup(&g, &p, x)).collect();
            assert_eq!(conj.len(), all.len(), "{spec}");
        }
    }

    #[test]
    fn frattini_examples() {
        assert!(frattini_subgroup(&build("a(2,2)")).unwrap().is_trivial());
        assert_eq!(
            frattini_subgroup(&build("c4")).unwrap().mask().to_vec(),
            vec![0, 2]
        );
        let q8 = build("q8");
        let phi = frattini_subgroup(&q8).unwrap();
        assert_eq!(phi.order(), 2);
        assert!(phi.contains(2)); // x^2 = -1
        assert!(frattini_subgroup(&Group::trivial()).unwrap().is_trivial());
    }

    #[test]
    fn frattini_of_2_groups_is_generated_by_squares() {
        for spec in ["q16", "d8", "a(2,4)", "dp(q8,c2)", "sd(c8,2,3)", "sd(c8,2,5)"] {
            let g = build(spec);
            let squares: Vec<_> = g.elements().map(|x| g.mul(x, x)).collect();
            assert_eq!(frattini_subgroup(&g).unwrap(), closure(&g, &squares), "{spec}");
        }
    }
}
