//! Automorphisms and automorphism groups: closed forms for the families
//! that have one, and a refinement search for everything else.

mod automorphism;
mod group;
mod search;
mod structured;

pub use automorphism::{aq_base, fq_phi_extend, is_automorphism, Automorphism};
pub use group::{
    automorphism_group, automorphism_group_with, search_automorphisms, search_automorphisms_with,
    structured_group, Constraint, GroupLimits, GroupSummary, Method, PermGroup,
};
pub use search::SearchOptions;
