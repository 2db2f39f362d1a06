//! Exact computation of the rectangles inscribed in four lines.
//!
//! A configuration is four lines taken as two ordered pairs `(A, C)` and
//! `(B, D)`. An inscribed rectangle has one vertex on each line, in the order
//! `A, B, C, D`. Rectangles are points of a projective space `PC` whose
//! coordinate `w = 0` describes rectangles "at infinity". The slope path and
//! the aspect path parameterize all of them by a point of the projective line.
//!
//! All arithmetic is exact. The core is generic over [`Field`], implemented
//! for [`Rational`] and for the prime fields [`Fp`].

pub mod census;
pub mod configuration;
pub mod form;
pub mod fp;
pub mod linalg;
pub mod locus;
pub mod paths;
pub mod quadratic;
pub mod ratio;
pub mod rectangle;
pub mod scalar;

pub use configuration::{
    degenerating_intercepts, normalize, ConfigClass, ConfigError, ConfigurationInput, DegeneratingIntercepts,
    DiagonalE, DiagonalF, DiagonalSlopes, InputLine, Labeling, LocusShape, NormalizedConfig, PlaneMap, Role,
};
pub use form::BinaryForm;
pub use fp::Fp;
pub use ratio::{sample_ratios, Measure, Ratio, RatioError};
pub use rectangle::ProjectiveRectangle;
pub use scalar::{parse_scalar, FiniteField, Field, FieldTag, ScalarError};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

pub type RationalConfig = NormalizedConfig<Rational>;
pub type RationalRectangle = ProjectiveRectangle<Rational>;
pub type RationalRatio = Ratio<Rational>;

pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F11 = Fp<11>;
pub type F13 = Fp<13>;
