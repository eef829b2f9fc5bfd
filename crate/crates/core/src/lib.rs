//! Finite groups as Cayley tables, exhaustive subgroup enumeration, and the
//! Chermak-Delgado measure and lattice, with executable checks of the
//! structural statements about CD-subgroups.
//!
//! ```
//! use cdlab_core::{named, Analysis, CatalogSpec, CdLattice, Limits};
//!
//! let q8 = named(&CatalogSpec::parse("dicyclic:2").unwrap(), Limits::default()).unwrap();
//! let analysis = Analysis::new(&q8, 1000).unwrap();
//! let lattice = CdLattice::build(&analysis).unwrap();
//! assert_eq!(lattice.mu, 4);
//! assert_eq!(lattice.len(), 5);
//! ```

pub mod analysis;
pub mod arith;
pub mod catalog;
pub mod error;
pub mod family;
pub mod group;
pub mod harness;
pub mod io;
pub mod lattice;
pub mod mask;
pub mod report;
pub mod series;
pub mod subgroup;
pub mod theorems;

pub use analysis::Analysis;
pub use catalog::{default_catalog, Catalog, CatalogEntry, CatalogSource};
pub use error::{Error, Result};
pub use family::{named, CatalogSpec};
pub use group::{Group, Limits, PermGenSet, Quotient, DEFAULT_MAX_ORDER};
pub use harness::{
    check_group, emit_lattice_dot, emit_report, run_harness, HarnessOptions, HarnessRun, ReportFormat,
    DEFAULT_VERIFY_MAX_ORDER, HARD_MAX_ORDER,
};
pub use lattice::{cd_measure, cd_subgroups, mu, CdLattice, CdMeasure};
pub use mask::Mask;
pub use report::{TheoremId, TheoremReport, Verdict, Witness, WitnessValue};
pub use series::CentralSeries;
pub use subgroup::{Subgroup, SubgroupSet, DEFAULT_SUBGROUP_BUDGET};
