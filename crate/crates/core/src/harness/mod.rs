//! Catalog runs: decide every subgroup of every group in a family list,
//! compare against the exhaustive search, and check the structural
//! properties P1–P10 over the results.

mod properties;
mod run;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use properties::{Counterexample, PropertyResult};
pub use run::{run_catalog, CatalogReport, GroupSummary, OracleVerdict, Row, Summary};

use crate::builders::GroupSpec;
use crate::error::{Error, Result};
use crate::lattice::LATTICE_ORDER_BOUND;
use crate::transversal::DEFAULT_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PropertyId {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    P9,
    P10,
}

impl PropertyId {
    pub const ALL: [PropertyId; 10] = [
        PropertyId::P1,
        PropertyId::P2,
        PropertyId::P3,
        PropertyId::P4,
        PropertyId::P5,
        PropertyId::P6,
        PropertyId::P7,
        PropertyId::P8,
        PropertyId::P9,
        PropertyId::P10,
    ];

    pub fn description(self) -> &'static str {
        match self {
            PropertyId::P1 => "decider agrees with the transversal search; witnesses pass the graph check",
            PropertyId::P2 => "odd order or odd index implies perfect code",
            PropertyId::P3 => "verdicts are invariant under conjugation",
            PropertyId::P4 => "a perfect code of G is a perfect code of every intermediate subgroup",
            PropertyId::P5 => "perfect codes pass to quotients by normal subgroups they contain",
            PropertyId::P6 => "generalized dihedral: perfect iff not inside A or perfect in A",
            PropertyId::P7 => "nilpotent: verdict equals that of the Sylow 2-part, in G and in P",
            PropertyId::P8 => "groups without elements of order 4 have only perfect codes",
            PropertyId::P9 => "2-groups certify one horn of the Frattini dichotomy",
            PropertyId::P10 => "a perfect code is a total perfect code iff its order is even",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Config(format!("unknown property {s:?}")))
    }
}

/// Parsed from TOML. Every field has a default, so an empty file runs the
/// default catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CatalogConfig {
    pub max_order: usize,
    /// Family names, optionally with an order cap: `"dicyclic:24"`.
    pub families: Vec<String>,
    /// Extra groups by name, e.g. `"dp(d3,c4)"`.
    pub groups: Vec<String>,
    pub properties: Vec<PropertyId>,
    pub confirm_witnesses: bool,
    /// Worker threads; 0 uses every core.
    pub jobs: usize,
    /// Node budget per transversal search.
    pub budget: u64,
}

pub const DEFAULT_FAMILIES: [&str; 8] = [
    "cyclic",
    "abelian",
    "dihedral",
    "gen_dihedral",
    "quaternion",
    "dicyclic",
    "direct_products",
    "semidirect",
];

impl Default for CatalogConfig {
    fn default() -> Self {
        CatalogConfig {
            max_order: 64,
            families: DEFAULT_FAMILIES.iter().map(|s| s.to_string()).collect(),
            groups: Vec::new(),
            properties: PropertyId::ALL.to_vec(),
            confirm_witnesses: true,
            jobs: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl CatalogConfig {
    pub fn from_toml(text: &str) -> Result<CatalogConfig> {
        let c: CatalogConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<CatalogConfig> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml(&text)
    }

    /// Only the named families, everything else default.
    pub fn with_families(families: &[&str]) -> CatalogConfig {
        CatalogConfig {
            families: families.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_order == 0 || self.max_order > LATTICE_ORDER_BOUND {
            return Err(Error::Config(format!(
                "max_order must be in 1..={LATTICE_ORDER_BOUND}, got {}",
                self.max_order
            )));
        }
        if self.budget == 0 {
            return Err(Error::Config("budget must be positive".into()));
        }
        for f in &self.families {
            Family::parse(f)?;
        }
        for g in &self.groups {
            g.parse::<GroupSpec>()?;
        }
        Ok(())
    }

    /// The groups this config covers, deduplicated by name and in a fixed
    /// order: families first, in the listed order, then explicit groups.
    pub fn expand(&self) -> Result<Vec<GroupSpec>> {
        self.validate()?;
        let mut out: Vec<GroupSpec> = Vec::new();
        let mut push = |s: GroupSpec| {
            if !out.contains(&s) {
                out.push(s);
            }
        };
        for f in &self.families {
            for s in Family::parse(f)?.members(self.max_order) {
                push(s);
            }
        }
        for g in &self.groups {
            let s: GroupSpec = g.parse()?;
            if s.order().map_or(true, |n| n <= self.max_order) {
                push(s);
            } else {
                return Err(Error::Config(format!(
                    "group {g} exceeds max_order {}",
                    self.max_order
                )));
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyKind {
    Cyclic,
    Abelian,
    Dihedral,
    GenDihedral,
    Quaternion,
    Dicyclic,
    DirectProducts,
    Semidirect,
    ElementaryAbelian,
}

#[derive(Clone, Copy, Debug)]
struct Family {
    kind: FamilyKind,
    cap: Option<usize>,
}

impl Family {
    fn parse(s: &str) -> Result<Family> {
        let (name, cap) = match s.split_once(':') {
            Some((n, c)) => (
                n.trim(),
                Some(
                    c.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Config(format!("bad order cap in {s:?}")))?,
                ),
            ),
            None => (s.trim(), None),
        };
        let kind = match name {
            "cyclic" => FamilyKind::Cyclic,
            "abelian" => FamilyKind::Abelian,
            "dihedral" => FamilyKind::Dihedral,
            "gen_dihedral" => FamilyKind::GenDihedral,
            "quaternion" => FamilyKind::Quaternion,
            "dicyclic" => FamilyKind::Dicyclic,
            "direct_products" => FamilyKind::DirectProducts,
            "semidirect" => FamilyKind::Semidirect,
            "elementary_abelian" => FamilyKind::ElementaryAbelian,
            _ => return Err(Error::Config(format!("unknown family {name:?}"))),
        };
        Ok(Family { kind, cap })
    }

    fn default_cap(kind: FamilyKind) -> usize {
        match kind {
            FamilyKind::GenDihedral | FamilyKind::Dicyclic | FamilyKind::Semidirect => 48,
            FamilyKind::Quaternion => 32,
            _ => usize::MAX,
        }
    }

    fn members(self, max_order: usize) -> Vec<GroupSpec> {
        let cap = self
            .cap
            .unwrap_or(Self::default_cap(self.kind))
            .min(max_order);
        let mut v: Vec<GroupSpec> = match self.kind {
            FamilyKind::Cyclic => (1..=cap).map(GroupSpec::Cyclic).collect(),
            FamilyKind::Abelian => noncyclic_abelian(cap)
                .into_iter()
                .map(GroupSpec::Abelian)
                .collect(),
            FamilyKind::ElementaryAbelian => (2..)
                .take_while(|k| 1usize << k <= cap)
                .map(|k| GroupSpec::Abelian(vec![2; k]))
                .collect(),
            FamilyKind::Dihedral => (3..).take_while(|n| 2 * n <= cap).map(GroupSpec::Dihedral).collect(),
            // Cyclic A gives the ordinary dihedral groups.
            FamilyKind::GenDihedral => noncyclic_abelian(cap / 2)
                .into_iter()
                .map(GroupSpec::GeneralizedDihedral)
                .collect(),
            FamilyKind::Quaternion => (3..)
                .map(|k| 1usize << k)
                .take_while(|&n| n <= cap)
                .map(GroupSpec::GeneralizedQuaternion)
                .collect(),
            FamilyKind::Dicyclic => (3..)
                .map(|n| 4 * n)
                .take_while(|&n| n <= cap)
                .filter(|n| !n.is_power_of_two())
                .map(GroupSpec::Dicyclic)
                .collect(),
            FamilyKind::DirectProducts => direct_products(cap),
            FamilyKind::Semidirect => SEMIDIRECT
                .iter()
                .map(|s| s.parse().expect("built-in semidirect spec"))
                .collect(),
        };
        v.retain(|s: &GroupSpec| s.order().is_some_and(|n| n <= cap));
        v
    }
}

/// Nonabelian semidirect products not covered by the other families.
const SEMIDIRECT: [&str; 12] = [
    "sd(c3,4,2)",
    "sd(c7,3,2)",
    "sd(a(2,2),3,[[0,1],[1,1]])",
    "sd(c5,4,2)",
    "sd(c9,3,4)",
    "sd(c8,2,3)",
    "sd(c8,2,5)",
    "sd(c4,4,3)",
    "sd(c3,8,2)",
    "sd(c5,8,2)",
    "sd(a(3,3),4,[[0,1],[2,0]])",
    "sd(c7,6,3)",
];

/// Invariant factor lists with at least two factors and product ≤ `cap`.
fn noncyclic_abelian(cap: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, product: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let last = *prefix.last().unwrap_or(&1);
        let mut d = if prefix.is_empty() { 2 } else { last };
        while product * d <= cap {
            if d % last == 0 {
                prefix.push(d);
                extend(prefix, product * d, cap, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, cap, &mut out);
    out.sort_by_key(|f| (f.iter().product::<usize>(), f.clone()));
    out
}

/// Products of a small nonabelian factor with a cyclic or Klein factor,
/// and of two small nonabelian factors.
fn direct_products(cap: usize) -> Vec<GroupSpec> {
    let nonabelian: Vec<GroupSpec> = ["d3", "d4", "q8", "d5", "d6", "dic(12)", "sd(c7,3,2)", "d8", "q16", "sd(c8,2,3)"]
        .iter()
        .map(|s| s.parse().expect("built-in spec"))
        .collect();
    let small: Vec<GroupSpec> = ["c2", "c3", "c4", "a(2,2)", "c5", "c6", "c8"]
        .iter()
        .map(|s| s.parse().expect("built-in spec"))
        .collect();
    let mut out = Vec::new();
    for x in &nonabelian {
        for y in &small {
            out.push(GroupSpec::DirectProduct(Box::new(x.clone()), Box::new(y.clone())));
        }
    }
    for (i, x) in nonabelian.iter().enumerate() {
        for y in &nonabelian[i..] {
            out.push(GroupSpec::DirectProduct(Box::new(x.clone()), Box::new(y.clone())));
        }
    }
    out.retain(|s| s.order().is_some_and(|n| n <= cap));
    out.sort_by_key(|s| s.order());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip() {
        let c = CatalogConfig::from_toml("").unwrap();
        assert_eq!(c, CatalogConfig::default());
        let text = toml::to_string(&c).unwrap();
        assert_eq!(CatalogConfig::from_toml(&text).unwrap(), c);
    }

    #[test]
    fn config_errors() {
        assert!(CatalogConfig::from_toml("max_order = 500").is_err());
        assert!(CatalogConfig::from_toml("families = [\"nope\"]").is_err());
        assert!(CatalogConfig::from_toml("colour = 3").is_err());
        assert!(CatalogConfig::from_toml("properties = [\"P11\"]").is_err());
        let c = CatalogConfig::from_toml("max_order = 8\ngroups = [\"c16\"]").unwrap();
        assert!(c.expand().is_err());
    }

    #[test]
    fn family_expansion() {
        let c = CatalogConfig {
            max_order: 16,
            ..CatalogConfig::with_families(&["cyclic:6", "quaternion", "abelian"])
        };
        let names: Vec<String> = c.expand().unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(
            names,
            [
                "c1", "c2", "c3", "c4", "c5", "c6", "q8", "q16", "a(2,2)", "a(2,2,2)", "a(2,4)",
                "a(3,3)", "a(2,6)", "a(2,2,2,2)", "a(2,2,4)", "a(2,8)", "a(4,4)"
            ]
        );
    }

    #[test]
    fn default_catalog_builds() {
        let specs = CatalogConfig::default().expand().unwrap();
        for s in &specs {
            assert!(s.order().unwrap() <= 64, "{s}");
            s.build().unwrap();
        }
        assert!(specs.len() > 150);
    }
}
