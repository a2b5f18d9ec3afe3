//! Exact computer algebra for determinantal and pfaffian representations of
//! projective hypersurfaces: sparse multivariate polynomials over Q and
//! GF(p), a Buchberger-based ideal engine (normal forms, elimination,
//! ring-map kernels, saturation, Hilbert polynomials), matrices of forms with
//! exact determinants and pfaffians, closed-form sheaf invariant calculators,
//! rank-2 Picard lattice searches, and the del Pezzo projection pipeline.

pub mod delpezzo;
pub mod elim;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod invariants;
pub mod lattice;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod rng;
pub mod verify;

pub use delpezzo::{run_pipeline, PipelineConfig, PipelineReport, Variant};
pub use elim::{eliminate, ideal_intersection, ring_map_kernel, saturate};
pub use error::{Error, Result};
pub use field::{Coeff, Field};
pub use groebner::{groebner_basis, groebner_basis_with, normal_form, Budget, GroebnerBasis};
pub use hilbert::{
    hilbert_polynomial, is_projectively_empty, minimal_generator_degrees, HilbertPolynomial,
};
pub use ideal::{jacobian_ideal, parse_ideal_file, Ideal};
pub use matrix::{
    degeneracy_locus_ideal, determinant, determinant_cofactor, minors_ideal, parse_matrix_file,
    pfaffian, PolyMatrix,
};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{format_poly, parse_poly};
pub use poly::{random_linear_forms, Polynomial};
pub use ring::PolyRing;
pub use rng::SplitMix64;
pub use verify::{
    verify_representation, RepresentationCertificate, RepresentationMode, VerificationReport,
};
