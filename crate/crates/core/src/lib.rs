//! Exact computation of coherent triangulations, GKZ vectors, and the
//! extremal terms of principal A-determinants, with Sylvester-matrix
//! resultants as an independent check.

mod error;
mod linalg;
pub mod poly;
pub mod resultant;

pub mod config;
pub mod game;
pub mod json;
pub mod lp;
pub mod triangulation;

pub use config::{Face, PointConfiguration, Simplex};
pub use error::{Error, Result};
pub use triangulation::{
    enumerate_coherent_triangulations, enumerate_triangulations, gkz_vector, is_coherent,
    triangulation_from_heights, GkzVector, HeightCertificate, Triangulation, DEFAULT_CAP,
};
pub use game::{
    all_game_terms, chow_monomial, ea_oracle, game_term, secondary_polytope, verify_main_theorem,
    ChowMonomial, GkzMonomial, SecondaryPolytope, Status, VerificationReport,
};
pub use poly::{bareiss_determinant, cofactor_determinant, Exponent, NewtonPolytope, PolyMatrix, SparsePoly};
pub use resultant::{
    discriminant_univariate, ea_univariate, plucker_specialization, resultant, specialize,
    sylvester_matrix, LogDerivativeBasis, PluckerImage, SpecializationMap, UnivariatePoly,
    UnivariateSymbolic,
};
