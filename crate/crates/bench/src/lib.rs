//! Fixtures shared by the criterion benches.

use cdlab_core::{named, CatalogSpec, Group, Limits};

/// Groups spanning the interesting enumeration regimes: many small
/// subgroups, a p-group, a simple group, and a central extension.
pub const BENCH_SPECS: &[&str] = &[
    "symmetric:4",
    "heisenberg:3",
    "product(dihedral:4,dihedral:4)",
    "alternating:5",
    "corpus:sl2_5",
];

pub fn bench_group(spec: &str) -> Group {
    let spec = CatalogSpec::parse(spec).expect("bench spec parses");
    named(&spec, Limits::default()).expect("bench group builds")
}
