//! Representation varieties of graded maximal Cohen-Macaulay modules.
//!
//! A graded algebra `R = k[z, y]/I` finite over a normalization `S = k[y]`
//! has its MCM modules of fixed shift type `V` parameterized by tuples of
//! matrices over `S`. This crate builds the defining ideal of that variety,
//! tests points for isomorphism and indecomposability, and counts orbits
//! over finite fields. Everything is exact: coefficients live in `Q` or `F_p`.
//!
//! The core is generic over a [`Field`]; the aliases below fix the scalar.

pub mod error;
pub mod families;
pub mod field;
pub mod graded;
pub mod groebner;
pub mod linalg;
pub mod matrix;
pub mod orbits;
pub mod parse;
pub mod poly;
pub mod rep;

pub use error::{Error, Result};
pub use families::{
    example_algebra_x2, generator_degree_spread, module_point_in, module_point_r, module_point_zero,
    normalize_shifts, rank_over_s, three_orbit_representatives,
};
pub use field::{Field, Fp, PrimeField, Rational, RationalField};
pub use graded::{
    hilbert_series_of_type, hom_entry_degrees, BaseField, GradedAlgebra, HilbertPolynomial, HilbertSeries,
    ShiftType, Violation,
};
pub use groebner::{
    component_monomials, groebner_basis, ideal_equal, ideal_membership, is_zero_dimensional, normal_form,
    Ideal,
};
pub use matrix::PolyMatrix;
pub use orbits::{
    are_isomorphic, conjugate, enumerate_points, group_elements, group_order, hom_component,
    is_indecomposable, isomorphism_evidence, orbit_partition, rational_isomorphism, CensusMethod,
    GroupElement, HomComponentBasis, IsoEvidence, NamedModulePoint, OrbitCensus, OrbitRecord,
};
pub use poly::{Monomial, PolyRing, Polynomial, RingRef};
pub use rep::{build_defining_ideal, parameterize, validate_point, MatrixPoint, ParameterSpace, RepIdeal};

pub type QPoly = Polynomial<Rational>;
pub type FpPoly = Polynomial<Fp>;
pub type QRing = RingRef<Rational>;
pub type FpRing = RingRef<Fp>;
pub type QIdeal = Ideal<Rational>;
pub type FpIdeal = Ideal<Fp>;
pub type QMatrix = PolyMatrix<Rational>;
pub type FpMatrix = PolyMatrix<Fp>;
pub type QPoint = MatrixPoint<Rational>;
pub type FpPoint = MatrixPoint<Fp>;
pub type QRepIdeal = RepIdeal<Rational>;
pub type FpRepIdeal = RepIdeal<Fp>;
pub type FpCensus = OrbitCensus<Fp>;
