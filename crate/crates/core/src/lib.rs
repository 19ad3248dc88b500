//! Exact algebra for knottedness certificates of high-dimensional knots.
//!
//! The engine works over the Laurent polynomial ring `Z[t, t^-1]`: Seifert
//! matrices give presentations of the middle Alexander module, determinants
//! give the Alexander class, and a non-unit class certifies that a knot is
//! not the standard sphere. The [`catalog`] module describes the spun-knot
//! constructions with their declared projection complexity and checks each
//! algebraic claim about them.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod lambda_module;
pub mod laurent;
pub mod matrix;
pub mod ring;
pub mod seifert;

pub use catalog::{KnotDescriptor, TheoremReport};
pub use error::{Error, Result};
pub use lambda_module::ModulePresentation;
pub use laurent::{AlexanderClass, LaurentPoly};
pub use matrix::{IntMatrix, LaurentMatrix, Matrix};
pub use seifert::{KnottednessCertificate, SeifertMatrix, Verdict};
