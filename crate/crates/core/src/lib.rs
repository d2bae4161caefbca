//! Word-combinatorics workbench for substitutions: factor-set enumeration,
//! exact and sampled insert-delete diameters, growth classification from the
//! letter graph, and the measurement harness around the contraction and
//! square-root growth bounds.

pub mod alphabet;
pub mod catalogue;
pub mod classify;
pub mod edit;
pub mod error;
pub mod experiments;
pub mod fixtures;
pub mod graph;
pub mod language;
pub mod matrix;
pub mod perron;
pub mod render;
pub mod sampling;
pub mod substitution;
pub mod thue_morse;
pub mod verify;

pub use alphabet::{Alphabet, Letter, Word};
pub use edit::{diameter, indel_distance, DiameterMode, DiameterReport, Engine, HalfDistance};
pub use error::{Error, Result};
pub use language::{language, languages_up_to, LanguageSet};
pub use substitution::Substitution;
