use serde::{Deserialize, Serialize};

use crate::group::Group;
use crate::subgroup::{commutator_subgroup, Subgroup};

/// Structural flags used to gate the class-specific reductions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupClass {
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub is_metabelian: bool,
    pub is_nilpotent: bool,
    pub is_2group: bool,
    pub is_elementary_abelian_2: bool,
    pub is_generalized_quaternion: bool,
    pub has_order4_element: bool,
}

/// Computes (once) and returns the class flags of `g`.
///
/// Nilpotency is tested as "every Sylow subgroup is normal", via the
/// equivalent count: for each prime `p`, the number of `p`-elements equals
/// the `p`-part of `|G|` exactly when the Sylow `p`-subgroup is unique.
pub fn classify(g: &Group) -> GroupClass {
    *g.class.get_or_init(|| compute(g))
}

fn compute(g: &Group) -> GroupClass {
    let n = g.order();
    let is_abelian = g.is_abelian();
    let is_cyclic = g.elements().any(|x| g.element_order(x) == n);
    let is_metabelian = is_abelian || {
        let whole = Subgroup::whole(g);
        let d = commutator_subgroup(g, &whole, &whole);
        let abelian = d
            .elements()
            .all(|a| d.elements().all(|b| g.mul(a, b) == g.mul(b, a)));
        abelian
    };
    let is_nilpotent = is_abelian
        || prime_powers(n).into_iter().all(|(p, pk)| {
            let count = g
                .elements()
                .filter(|&x| is_power_of(g.element_order(x), p))
                .count();
            count == pk
        });
    let is_2group = n.is_power_of_two();
    let involutions = g.elements().filter(|&x| g.is_involution(x)).count();
    GroupClass {
        is_abelian,
        is_cyclic,
        is_metabelian,
        is_nilpotent,
        is_2group,
        is_elementary_abelian_2: is_abelian && g.elements().all(|x| g.element_order(x) <= 2),
        is_generalized_quaternion: is_2group && !is_cyclic && involutions == 1,
        has_order4_element: g.elements().any(|x| g.element_order(x) == 4),
    }
}

fn is_power_of(mut k: usize, p: usize) -> bool {
    while k % p == 0 {
        k /= p;
    }
    k == 1
}

/// `(p, p^k)` for each prime power exactly dividing `n`.
pub fn prime_powers(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            out.push((p, pk));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::GroupSpec;
    use crate::lattice::enumerate_subgroups;

    fn class(s: &str) -> GroupClass {
        classify(&s.parse::<GroupSpec>().unwrap().build().unwrap().group)
    }

    #[test]
    fn examples() {
        let z6 = class("c6");
        assert!(z6.is_cyclic && z6.is_abelian && z6.is_nilpotent && !z6.has_order4_element);
        let q8 = class("q8");
        assert!(q8.is_generalized_quaternion && q8.is_2group && q8.is_nilpotent);
        let d6 = class("d6");
        assert!(d6.is_metabelian && !d6.is_nilpotent);
        assert!(class("a(2,2,2)").is_elementary_abelian_2);
        assert!(!class("d4").is_generalized_quaternion);
        // [A4, A4] = V4 is abelian.
        assert!(class("sd(a(2,2),3,[[0,1],[1,1]])").is_metabelian);
    }

    #[test]
    fn flag_implications() {
        for s in [
            "c1", "c8", "a(2,4)", "d5", "q16", "dic(12)", "dp(d3,d3)", "sd(c7,3,2)",
            "sd(a(2,2),3,[[0,1],[1,1]])", "dp(q8,c3)",
        ] {
            let c = class(s);
            assert!(!c.is_cyclic || c.is_abelian, "{s}");
            assert!(!c.is_abelian || (c.is_metabelian && c.is_nilpotent), "{s}");
            assert!(!c.is_generalized_quaternion || (c.is_2group && !c.is_cyclic), "{s}");
        }
    }

    #[test]
    fn nilpotent_count_matches_sylow_normality() {
        for s in ["d4", "d6", "dp(q8,c3)", "dic(12)", "sd(c5,4,2)", "dp(d4,c3)", "c30"] {
            let g = s.parse::<GroupSpec>().unwrap().build().unwrap().group;
            let lattice = enumerate_subgroups(&g).unwrap();
            let by_lattice = prime_powers(g.order()).into_iter().all(|(_, pk)| {
                lattice.iter().filter(|h| h.order() == pk).count() == 1
            });
            assert_eq!(classify(&g).is_nilpotent, by_lattice, "{s}");
        }
    }
}
