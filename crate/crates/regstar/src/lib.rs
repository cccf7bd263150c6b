#![allow(clippy::needless_range_loop)]

//! Finite regular *-semigroups and their chained projection groupoids.
//!
//! A semigroup is turned into a triple (P, 𝒢, ε) by [`ChainedProjectionGroupoid::extract`]
//! and rebuilt with [`ChainedProjectionGroupoid::reconstruct`]; both directions
//! are checked as literal table equality.

pub mod chains;
pub mod constructions;
pub mod cpg;
pub mod diagram;
pub mod dot;
mod error;
pub mod groupoid;
pub mod io;
pub mod palg;
mod report;
pub mod semigroup;
mod unionfind;

pub use chains::Chain;
pub use constructions::{adjacency_semigroup, fp_semigroup, rees_semigroup, FpSemigroup, Group, SandwichMatrix, SimpleGraph};
pub use cpg::{check_cpg_morphism, compare_semigroups, esn, roundtrip_semigroup, ChainedProjectionGroupoid, CoherenceCertificate, LinkedPair, RoundTrip, Triviality};
pub use diagram::{partition_monoid, Family, G2PrimeCounterexample, Partition, PartitionStats};
pub use error::{Error, Result};
pub use groupoid::{GroupoidParts, OrderedGroupoid};
pub use palg::{ProjectionAlgebra, Relations};
pub use report::{Check, Report, Witness};
pub use semigroup::{Closure, Congruence, GreenData, OrderRelations, SpecialElements, StarSemigroup};
pub use unionfind::UnionFind;
