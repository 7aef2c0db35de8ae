//! Strong integer additive set-indexers (IASIs) and nourishing numbers.
//!
//! - [`setalg`]: sumsets, difference sets, difference chains.
//! - [`graph`]: simple graphs, distances, powers, exact maximum cliques.
//! - [`families`]: generators for the named graph families.
//! - [`labeling`]: construction and verification of strong IASIs.
//! - [`nourish`]: closed-form nourishing numbers, the clique oracle, reconciliation.

mod bitset;
pub mod families;
pub mod graph;
pub mod labeling;
pub mod nourish;
pub mod setalg;

pub use families::{generate, FamilyKind, FamilySpec};
pub use graph::{Clique, DistanceMatrix, Graph};
pub use labeling::{construct_strong_iasi, verify_strong_iasi, Labeling, VerificationReport};
pub use nourish::{formula_kappa, oracle_kappa, reconcile, NourishingRecord, Status};
pub use setalg::{difference_set, is_strong_pair, make_difference_chain, sumset, DiffSet, IntSet};
