//! Generators of arithmetic-sequence scales in `Z_c` and on the circle `R/Z`.
//!
//! A scale is a subset of the cyclic group `Z_c`; it is *generated* by a
//! step `f` when it equals `{a, a + f, ..., a + (d - 1) f}` for some start
//! `a`, with the `d` terms distinct. This crate enumerates and classifies
//! those steps, relates them to interval vectors and to the discrete
//! Fourier transform, checks the complement property, handles
//! non-integer steps over exact rationals, and exhaustively verifies the
//! whole picture at small moduli.

pub mod complement;
pub mod dft;
pub mod error;
pub mod generation;
pub mod interval_vector;
pub mod numtheory;
pub mod real_gen;
pub mod scale;
pub mod verify;

pub use complement::{chopin_check, ChopinReport, Embedding, EmbeddingDirection};
pub use dft::{
    closed_form_magnitude, dft, recover_generators_via_dft, seminorm, Seminorm, Spectrum,
};
pub use error::{Error, Result};
pub use generation::{
    classify, enumerate_generators, generate, geometric_support, Classification, GenSpec,
    GeneratorReport, ScaleKind,
};
pub use interval_vector::{
    cluster_vector, difference_group, interval_vector, is_regular_polygon, is_union_of_polygons,
    IntervalVector,
};
pub use real_gen::{
    alpha_stability_interval, j_set, p_generators_finite, p_infinite_generators, p_set, PSet,
    Rational, RationalPoint,
};
pub use scale::{AffineMap, Scale};
