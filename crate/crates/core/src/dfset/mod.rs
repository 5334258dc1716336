//! Digit frequency sets: exact polytopes, sandwiches, locking intervals and
//! the angle diagnostic.

pub mod geometry;
pub mod lock;
pub mod plot;
pub mod polytope;
pub mod theta;

pub use lock::{df_of_beta, lock_interval, DfOfBeta, DfResult, LockEndpoint, LockInterval};
pub use polytope::{
    df_polytope, df_sandwich, extremality_gaps, forcing_compare, is_certified_extreme, membership, DfSandwich, Membership,
    Polytope, Vertex, VertexTag,
};
pub use plot::{fe_table, plot_csv, plot_rows, PlotRow, PlotRule};
pub use theta::{theta, theta_sequence, ThetaCertificate};
