//! Exact-arithmetic kernel for the nth Weyl algebra over the rationals and
//! its hom-associative twists.
//!
//! The algebra is generated by x_1..x_n, y_1..y_n with x_i y_i = y_i x_i + 1
//! and all other pairs commuting; elements are kept in the unique normal
//! form with y's left of x's. For a twist vector k, the automorphism
//! alpha_k fixes each x_i and sends y_i to y_i + k_i, and the twisted
//! product a * b = alpha_k(ab) makes the algebra hom-associative with weak
//! unit 1.
//!
//! On top of the arithmetic sit certified ideal transformations: one-sided
//! ideals presented by generators can be rewritten to constant-coefficient
//! generators and packed into a single principal generator, with
//! machine-checkable membership certificates in both directions.
//!
//! Modules:
//! - [`element`]: normal-form arithmetic, the twist, degree data.
//! - [`oracle`]: independent one-swap multiplication for cross-checking.
//! - [`hom`]: executable checks of the hom-associativity identities.
//! - [`cert`]: membership certificates, evaluation, canonical JSON.
//! - [`ideal`]: the certified generator transformations.
//! - [`parse`] / [`print`]: the text grammar and canonical printer.
//! - [`sample`]: seeded random generation for the property suites.

pub mod cert;
pub mod element;
pub mod error;
pub mod hom;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod print;
pub mod rational;
pub mod sample;

pub use cert::{
    compose_presentation_change, verify_membership, Certificate, IdealPresentation, Side,
};
pub use element::{Degrees, TwistParameter, WeylElement};
pub use error::{AlgorithmError, CertificateError, WeylError};
pub use hom::{check_hom_associativity, check_morphism_of_twist, check_weak_unit, IdentityReport};
pub use ideal::{
    alpha_invariance_witness, constant_generators, flatten_leading, hom_generators_from_assoc,
    principal_from_constant, principal_from_two, CertifiedGenerators, DifferenceChain,
};
pub use monomial::{grlex_cmp, MultiIndex};
pub use parse::{parse, ExpressionAst, ParseError};
pub use poly::YPolynomial;
pub use print::{print_canonical, print_y_polynomial};
pub use rational::Rational;
