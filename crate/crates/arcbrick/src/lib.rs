//! Arc diagrams on `n + 1` nodes and the bricks they encode over the
//! family of algebras `c_2(S)` cuts out of the doubled linear quiver.
//!
//! The crate has two independent computational routes to every quantity:
//! word-combinatorial crossing counts on arcs, and exact rational linear
//! algebra on quiver representations. The `classify` module sweeps the two
//! against each other; the `witness` module realizes extension classes as
//! explicit short exact sequences.

pub mod algebra;
pub mod arc;
pub mod classify;
pub mod crossing;
pub mod diagram;
pub mod error;
pub mod json;
pub mod ratmat;
pub mod rep;
pub mod witness;

pub use algebra::{algebra, all_family_members, gentle, hereditary_algebra, preprojective, AlgebraKind, AlgebraSpec, ArrowId, Relation};
pub use arc::{enumerate_arcs, is_eps_admissible, is_quotient_arc, is_restriction, is_submodule_arc, is_tau_rigid_arc, Arc, EpsOrientation, Letter};
pub use crossing::{almost_rigid_pair_arcs, crossing_report, directed_crossing_pairs, euler_form_arcs, ext_dim_arcs, hom_arcs, is_clockwise, is_weak_pair_arcs, resolve_crossing, CrossingReport, ExtMode};
pub use diagram::{diagram_graph_check, enumerate_clockwise_sets, enumerate_noncrossing, enumerate_weak, is_clockwise_ordered, is_noncrossing, is_strand_diagram, longest_weak_length, max_weak_example, ArcDiagram, DiagramGraphReport};
pub use error::{Error, Result};
pub use rep::{arc_from_brick, brick_from_arc, brick_from_arc_mirrored, euler_form, ext1, hom_basis, hom_dim, is_brick, is_indecomposable, is_tau_rigid_oracle, simple_socle, thin_subquotients, validate_rep, ExtResult, Representation, ThinSubquotients};
pub use witness::{ext_basis, ses_contested, ses_cross_from, ses_cross_to, ses_to_cocycle, verify_ses, CrossingTag, SesDefect, SesWitness};
pub use classify::{bricks, is_exceptional_sequence_hereditary, is_weak_pair_modules, is_weak_sequence, maximal_almost_rigid, semibricks, sweep_verify, sweep_verify_with, IdentityReport, SweepReport};
