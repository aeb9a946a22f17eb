//! Finite universal algebra workbench.
//!
//! Algebras are operation tables over `{0..n}`. On top of them the crate
//! computes congruence lattices, term-condition commutators, relatively free
//! algebras and free intersections, and decides lax centrality of
//! congruences with explicit, re-checkable witnesses. The [`jonsson`]
//! module runs the finite form of the generalized Jónsson theorem: for an
//! SI algebra `B` in `HSP(K)` and a maximal `α` laxly centralizing the
//! monolith, `B/α` lies in `HS(K)`.

pub mod algebra;
pub mod budget;
mod closure;
pub mod commutator;
pub mod congruence;
pub mod curated;
pub mod dot;
pub mod error;
pub mod format;
pub mod free;
pub mod hom;
pub mod jonsson;
pub mod lattice;
pub mod lax;
pub mod product;
pub mod pushout;
pub mod term;

pub use algebra::{
    enumerate_subuniverses, make_algebra, quotient, subalgebra_generated, FiniteAlgebra, Quotient,
    Signature, Subalgebra,
};
pub use budget::{Budgets, SearchBudget};
pub use closure::Derivation;
pub use commutator::{free_intersection, tc_commutator, FreeIntersection};
pub use congruence::{cg, pull_back, push_forward, Congruence};
pub use dot::{lattice_dot, report_dot};
pub use error::{Error, Result};
pub use format::{parse_algebra_file, parse_congruence, serialize_algebras, ParseError};
pub use free::{free_algebra, FreePresentation};
pub use hom::{enumerate_homomorphisms, enumerate_onto_maps, Homomorphism};
pub use jonsson::{
    hs_membership, hsp_membership, jonsson_check, si_quotients, JonssonReport,
    MembershipCertificate, Status,
};
pub use lattice::{
    con_lattice, is_modular_lattice, monolith_and_si, CongruenceLattice, Lattice, SiStatus,
};
pub use lax::{
    decide_lax_centrality, maximal_lax_centralizers, normalize_witness, sp_normalize_witness,
    trivial_commutator, verify_witness, witness_meet_commutator, CentralityVerdict, DecideOptions,
    Kappa, LaxWitness, MaximalCentralizers, MeetCommutator, Route, SearchReport, Verification,
    WitnessFailure,
};
pub use product::{direct_product, ProductAlgebra};
pub use pushout::{b_mu, delta_congruence, modular_witness, PairAlgebra};
pub use term::Term;

#[cfg(test)]
pub(crate) mod testing {
    pub use crate::curated::*;
}
