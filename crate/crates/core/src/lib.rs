//! Exact computer algebra for Takeuchi smash products.
//!
//! The crate builds graded algebras from finite presentations, forms smash
//! products `A # B` twisted by a Hopf action, computes truncated minimal
//! free resolutions and Yoneda Ext-algebras, and certifies structural
//! results: the graded-smash decomposition of the Ext-algebra of a smash
//! product, transfer of Artin–Schelter regularity, and the Nakayama
//! automorphism formula, together with a Tor counterpart. All arithmetic
//! is exact, over `Q` or a prime field.
//!
//! Numbered labels used throughout the crate: `(1.3)`-`(1.6)` are the
//! four module structures induced on tensor products over a smash
//! algebra (left/right, plain/antipode-twisted; see [`smash`]), and
//! `(3.5)`/`(3.7)` are the induced `H`-action and `H`-coaction on Ext
//! classes (see [`extalg`]).

pub mod error;
pub mod extalg;
pub mod field;
pub mod gralg;
pub mod hopf;
pub mod job;
pub mod matrix;
pub mod module;
pub mod regular;
pub mod report;
pub mod resolve;
pub mod runner;
pub mod smash;

pub use error::{Error, Result};
