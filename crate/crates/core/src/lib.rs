//! Exact and numerical computation of amenability constants of finite
//! groups: Cayley tables, degree spectra, explicit unitary irreducibles,
//! Fourier-algebra norms and the closed-form bounds relating them.

pub mod constants;
pub mod corpus;
pub mod degrees;
pub mod error;
pub mod families;
pub mod fourier;
pub mod group;
pub mod irreps;
pub mod modular;
pub mod scalar;
pub mod suite;

pub use constants::{AmenabilityReport, Check, Outcome, TheoremReport};
pub use degrees::{degree_spectrum, DegreeSpectrum};
pub use error::{Error, Result};
pub use families::{parse_family, parse_family_expression, FamilyExpression};
pub use fourier::{GroupFunction, OperatorField};
pub use group::{FiniteGroup, Subgroup};
pub use irreps::UnitaryIrrep;
pub use scalar::Real;
pub use suite::{run_theorem, Subject, SuiteOptions, Theorem};

/// Exact rationals used for all reported constants.
pub type Rational = num_rational::Ratio<i128>;
pub type Report = AmenabilityReport<i128>;
pub type Irrep = UnitaryIrrep<f64>;
pub type Function = GroupFunction<f64>;
pub type Field = OperatorField<f64>;
