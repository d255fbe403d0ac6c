//! Exact amenability constants from degree data.
//!
//! Everything here is rational arithmetic over an integer type `I`; floats
//! never enter. For a finite group with degree multiset `{(d, m)}`:
//!
//! * `AM = (1/|G|) Σ m d³`
//! * `AD = Σ_π ν(π) d_π²` with `ν(π) = d_π/|G|`
//! * Runde: `AD ≤ AM ≤ maxdeg`
//! * sharper bound: `AM ≤ 1 + (maxdeg − 1)(1 − 1/|[G,G]|)`

pub mod report;
pub mod standard_polynomial;
pub mod verify;

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed};

use crate::degrees::DegreeSpectrum;

pub use report::{amenability_report, amenability_report_for, AmenabilityReport, Flags};
pub use standard_polynomial::{standard_polynomial, standard_polynomial_check, StandardPolynomialReport};
pub use verify::{
    hr_sequence, verify_minimal_theorem, verify_product_identities, verify_two_degree, Check, HrSequence,
    Outcome, TheoremReport,
};

/// Integer types exact constants can be computed over.
pub trait ExactInt: Integer + Signed + Clone + FromPrimitive + Display + Debug {}

impl<T: Integer + Signed + Clone + FromPrimitive + Display + Debug> ExactInt for T {}

fn int<I: ExactInt>(x: u64) -> I {
    I::from_u64(x).expect("value fits the integer type")
}

/// `(1/|G|) Σ m d³`.
pub fn johnson_constant<I: ExactInt>(spectrum: &DegreeSpectrum) -> Ratio<I> {
    let cubes = spectrum
        .entries()
        .iter()
        .fold(I::zero(), |acc, &(d, m)| acc + int::<I>(m) * int::<I>(d) * int::<I>(d) * int::<I>(d));
    Ratio::new(cubes, int(spectrum.group_order()))
}

/// `Σ_π ν(π) d_π²`, summed irreducible by irreducible with the Plancherel
/// weights as rationals.
pub fn ad_constant<I: ExactInt>(spectrum: &DegreeSpectrum) -> Ratio<I> {
    let order = int::<I>(spectrum.group_order());
    let mut acc = Ratio::from_integer(I::zero());
    for &(d, m) in spectrum.entries() {
        let nu = Ratio::new(int::<I>(d), order.clone());
        let d2 = Ratio::from_integer(int::<I>(d * d));
        for _ in 0..m {
            acc = acc + nu.clone() * d2.clone();
        }
    }
    acc
}

/// `(AD, maxdeg)`.
pub fn runde_bounds<I: ExactInt>(spectrum: &DegreeSpectrum) -> (Ratio<I>, I) {
    (ad_constant(spectrum), int(spectrum.maxdeg()))
}

/// `1 + (maxdeg − 1)(1 − 1/|[G,G]|)`.
pub fn improved_upper_bound<I: ExactInt>(spectrum: &DegreeSpectrum, commutator_order: u64) -> Ratio<I> {
    assert!(commutator_order >= 1, "commutator subgroup has at least one element");
    let one = Ratio::from_integer(I::one());
    let m = Ratio::from_integer(int::<I>(spectrum.maxdeg()));
    let frac = Ratio::new(I::one(), int(commutator_order));
    one.clone() + (m - one.clone()) * (one - frac)
}

/// Plancherel mass of the degree-1 irreducibles.
pub fn nu_omega<I: ExactInt>(spectrum: &DegreeSpectrum) -> Ratio<I> {
    Ratio::new(int(spectrum.linear_count()), int(spectrum.group_order()))
}

/// `p − 1 + 1/p`.
pub fn hr_constant<I: ExactInt>(p: u64) -> Ratio<I> {
    Ratio::from_integer(int::<I>(p) - I::one()) + Ratio::new(I::one(), int(p))
}

/// Canonical `p/q` text, or `p` when `q = 1`.
pub fn rational_string<I: ExactInt>(r: &Ratio<I>) -> String {
    r.to_string()
}

/// Decimal value with 6 significant digits.
pub fn rational_decimal<I: ExactInt>(r: &Ratio<I>) -> String {
    let num: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let den: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    let x = num / den;
    if x == 0.0 {
        return "0".into();
    }
    let digits = 5 - x.abs().log10().floor() as i32;
    format!("{:.*}", digits.max(0) as usize, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = Ratio<i64>;

    fn spectrum(e: &[(u64, u64)]) -> DegreeSpectrum {
        DegreeSpectrum::from_entries(e.iter().copied())
    }

    #[test]
    fn johnson_examples() {
        assert_eq!(johnson_constant::<i64>(&spectrum(&[(1, 12)])), Q::from_integer(1));
        assert_eq!(johnson_constant::<i64>(&spectrum(&[(1, 4), (2, 1)])), Q::new(3, 2));
        assert_eq!(johnson_constant::<i64>(&spectrum(&[(1, 2), (2, 1)])), Q::new(5, 3));
        assert_eq!(johnson_constant::<i64>(&spectrum(&[(1, 2), (2, 1), (3, 2)])), Q::new(8, 3));
    }

    #[test]
    fn ad_examples() {
        assert_eq!(ad_constant::<i64>(&spectrum(&[(1, 5)])), Q::from_integer(1));
        assert_eq!(ad_constant::<i64>(&spectrum(&[(1, 9), (3, 2)])), Q::new(7, 3));
        assert_eq!(ad_constant::<i64>(&spectrum(&[(1, 2), (2, 2)])), Q::new(9, 5));
    }

    #[test]
    fn runde_examples() {
        assert_eq!(runde_bounds::<i64>(&spectrum(&[(1, 3)])), (Q::from_integer(1), 1));
        assert_eq!(runde_bounds::<i64>(&spectrum(&[(1, 2), (2, 1)])), (Q::new(5, 3), 2));
        assert_eq!(runde_bounds::<i64>(&spectrum(&[(1, 16), (2, 4)])), (Q::new(3, 2), 2));
    }

    #[test]
    fn improved_bound_examples() {
        assert_eq!(improved_upper_bound::<i64>(&spectrum(&[(1, 7)]), 1), Q::from_integer(1));
        let s4 = spectrum(&[(1, 2), (2, 1), (3, 2)]);
        assert_eq!(improved_upper_bound::<i64>(&s4, 12), Q::new(17, 6));
        assert!(improved_upper_bound::<i64>(&s4, 12) > johnson_constant(&s4));
        assert_eq!(improved_upper_bound::<i64>(&spectrum(&[(1, 2), (2, 1)]), 3), Q::new(5, 3));
    }

    #[test]
    fn nu_omega_examples() {
        assert_eq!(nu_omega::<i64>(&spectrum(&[(1, 6)])), Q::from_integer(1));
        assert_eq!(nu_omega::<i64>(&spectrum(&[(1, 4), (2, 1)])), Q::new(1, 2));
        assert_eq!(nu_omega::<i64>(&spectrum(&[(1, 9), (3, 2)])), Q::new(1, 3));
    }

    #[test]
    fn integer_types_agree() {
        let s = spectrum(&[(1, 81), (3, 18)]);
        assert_eq!(johnson_constant::<BigInt>(&s).to_string(), johnson_constant::<i64>(&s).to_string());
        assert_eq!(ad_constant::<i128>(&s).to_string(), "7/3");
        assert_eq!(hr_constant::<BigInt>(7).to_string(), "43/7");
    }

    #[test]
    fn formatting() {
        assert_eq!(rational_string(&Q::new(6, 4)), "3/2");
        assert_eq!(rational_string(&Q::from_integer(1)), "1");
        assert_eq!(rational_decimal(&Q::new(7, 3)), "2.33333");
        assert_eq!(rational_decimal(&Q::new(43, 7)), "6.14286");
        assert_eq!(rational_decimal(&Q::new(17, 6)), "2.83333");
        assert_eq!(rational_decimal(&Q::new(1, 27)), "0.0370370");
    }
}
