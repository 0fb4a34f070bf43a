//! Shared fixtures for the benchmarks.

use perfcode::{enumerate_subgroups, BuiltGroup, GroupSpec, Subgroup};

/// Groups used across the benches, smallest first.
pub const GROUPS: &[&str] = &["q16", "d12", "dp(d4,c4)", "a(2,2,2,2,2,2)", "sd(c7,6,3)"];

pub fn build(spec: &str) -> BuiltGroup {
    spec.parse::<GroupSpec>()
        .and_then(|s| s.build())
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}

/// A group together with its full subgroup lattice.
pub fn with_lattice(spec: &str) -> (BuiltGroup, Vec<Subgroup>) {
    let b = build(spec);
    let lattice = enumerate_subgroups(&b.group).expect("bench groups are small");
    (b, lattice.as_ref().clone())
}
