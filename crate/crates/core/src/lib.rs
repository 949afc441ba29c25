//! Exact standard monomial theory for Schubert varieties in Grassmannians.
//!
//! The crate straightens Plücker monomials into the standard-monomial
//! basis, enumerates torus-invariant standard tableaux, and probes the
//! graded pieces `R_k = H⁰(X(w), L(2ω_n)^{⊗k})^T` of torus GIT quotients of
//! Schubert varieties in `G(n, 2n)` for generation and projective normality.
//! [`verify`] rebuilds the distinguished tableaux `X_1…X_5`, `Y_1`, `Y_2` on
//! `X(w_5)` and machine-checks the identities relating them.
//!
//! The algebraic layers are generic over a [`Scalar`] coefficient ring; the
//! aliases below fix it to [`BigInt`], which is what the invariant-ring and
//! verification layers use.

pub mod error;
pub mod eval;
pub mod invariant;
pub mod lattice;
pub mod linalg;
pub mod plucker;
pub mod scalar;
pub mod straighten;
pub mod tableau;
pub mod verify;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use error::{Error, Result};
pub use eval::{evaluate, random_matrix, random_schubert_point, PointEvaluator, PointSampler};
pub use invariant::{
    generation_degree_probe, hilbert_series, invariant_basis, multiply_to_coordinates,
    normality_probe, semistable_nonempty, CoordinateVector, GenerationReport, GradedPieceBasis,
    NormalityReport,
};
pub use lattice::{
    apply_coset_to_weight, distinguished_w, is_dominance_nonpositive, leq_componentwise,
    line_bundle_descends, make_index_tuple, minimal_semistable_w, IndexTuple, MiddleRank,
    WeightVector,
};
pub use plucker::{normalize_index, plucker_relation, restrict, two_row_exchange, PluckerMonomial};
pub use scalar::Scalar;
pub use straighten::{straighten, straighten_with, StandardCell, StraightenOptions};
pub use tableau::{enumerate_standard, make_tableau, Content, Tableau};
pub use verify::{
    build_generators, run_case, run_cases, verify_appendix, verify_lemma_relation,
    verify_proposition, verify_remarks, verify_theorem, Case, Generators, Status,
    VerificationReport,
};

/// Plücker polynomial with arbitrary-precision integer coefficients.
pub type Polynomial = plucker::PluckerPolynomial<BigInt>;
/// Evaluation point with arbitrary-precision entries.
pub type Matrix = eval::IntegerMatrix<BigInt>;
/// Exact rational coordinates.
pub type Rational = scalar::Rational<BigInt>;
