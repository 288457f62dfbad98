//! Exact graded dimensions of Lie algebras presented by degree-1 generators
//! and degree-2 relations, plus power-series utilities.

pub mod echelon;
pub mod engine;
pub mod expr;
pub mod presentation;
pub mod series;
pub mod tensor;
pub mod witt;

pub use engine::{
    graded_dims, graded_dims_with, ideal_dims, ideal_dims_with, quotient_dims, Coordinates,
    EngineConfig, IdealTower, DEFAULT_MAX_WORDS,
};
pub use expr::{expand_bracket, LieExpr};
pub use presentation::{BracketTerm, LiePresentation, Relation};
pub use series::{enveloping_series, format_poly, series_product, GradedDims, SeriesTruncation};
pub use tensor::{TensorVector, Word};
pub use witt::witt;
