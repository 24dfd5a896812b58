//! Recognition of 12-representable graphs.
//!
//! A labeled graph is 12-represented by a word when two labels are adjacent
//! exactly when the word restricted to them never has the smaller letter
//! immediately followed by the larger one. This crate decides
//! representability by searching vertex orderings that avoid the forbidden
//! ordered patterns, turns such orderings into interval-containment or
//! simple-triangle models, reads representants off the models, and checks
//! every certificate with an independent word verifier.

pub mod error;
pub mod graph;
pub mod io;
pub mod models;
pub mod oracle;
pub mod patterns;
pub mod recognition;
pub mod word;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, GridGraph, LabeledGraph, Labeling, Side};
pub use models::{IntervalModel, TriangleModel};
pub use patterns::{OrderedPattern, PatternFamily};
pub use recognition::{Certificate, Decision, Model, Witness};
pub use word::{PatternWord, Word};
