//! Hypercube-variant graph families, their automorphism groups, and the
//! determining number, distinguishing number and cost of 2-distinguishing.

pub mod constructions;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod symmetry;
pub mod autgroup;
pub mod vertex;

pub use error::{Error, Result};
pub use family::{build_family, build_family_capped, FamilySpec};
pub use graph::{Graph, Labeling};
pub use vertex::{hamming_distance, BitVertex};
pub use autgroup::{
    automorphism_group, is_automorphism, search_automorphisms, structured_group, Automorphism, Constraint,
    GroupLimits, Method, PermGroup,
};
pub use symmetry::{
    cost_2dist, determining_number, distinguishing_number, transitivity_report, Certificate, Coloring, Parameter,
    Solver, SolverOptions, SymmetryReport, TransitivityReport, Witness,
};
pub use constructions::{Check, Construction};
