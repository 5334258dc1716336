//! Multidimensional continued fractions, substitutions and infimax sequences.

pub mod itinerary;
pub mod kmap;
pub mod matrix;
pub mod subst;

pub use itinerary::{compare_itineraries, metric_d, Entry, FiniteCandidate, Itinerary};
pub use kmap::{itinerary_of, j_index, k_inv, k_map, simplex_images, upsilon, SimplexImages};
pub use matrix::{hilbert_diameter, AbelianMatrix, Diameter};
pub use subst::{
    apply_lambda, apply_lambda_digits, apply_lambda_seq, gamma, lambda_chain, lambda_image, n_of_w, s_of,
    ExtractedItinerary,
};
