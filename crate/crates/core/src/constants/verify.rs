//! Exact checks of the closed-form statements about amenability constants,
//! one group (or pair of groups) at a time.

use std::fmt;

use num_rational::Ratio;

use super::report::{amenability_report, AmenabilityReport};
use super::{ad_constant, hr_constant, improved_upper_bound, int, johnson_constant, ExactInt};
use crate::degrees::{degree_spectrum, DegreeSpectrum};
use crate::error::{Error, Result};
use crate::families::{is_prime, FamilyExpression};
use crate::group::{direct_product, FiniteGroup, DEFAULT_MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "n/a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub outcome: Outcome,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn compare(name: &str, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let outcome = if expected == actual { Outcome::Pass } else { Outcome::Fail };
        Self { name: name.into(), outcome, expected, actual }
    }

    pub fn holds(name: &str, ok: bool, expected: impl ToString, actual: impl ToString) -> Self {
        Self {
            name: name.into(),
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn not_applicable(name: &str, why: impl ToString) -> Self {
        Self { name: name.into(), outcome: Outcome::NotApplicable, expected: "-".into(), actual: why.to_string() }
    }
}

/// Outcome of one verification suite on one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: String,
    pub group: String,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    pub fn new(theorem: &str, group: &str) -> Self {
        Self { theorem: theorem.into(), group: group.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    /// Fail if any check failed, n/a if none applied, pass otherwise.
    pub fn outcome(&self) -> Outcome {
        if !self.passed() {
            Outcome::Fail
        } else if self.checks.iter().all(|c| c.outcome == Outcome::NotApplicable) {
            Outcome::NotApplicable
        } else {
            Outcome::Pass
        }
    }
}

/// If the degrees are exactly `{1, d}` then
/// `AM = AD = 1 + (d − 1)(1 − 1/|[G,G]|)`.
pub fn verify_two_degree<I: ExactInt>(g: &FiniteGroup, descriptor: &str) -> Result<TheoremReport> {
    let spectrum = degree_spectrum(g)?;
    let mut report = TheoremReport::new("two-degree", descriptor);
    let degrees = spectrum.distinct_degrees();
    if degrees.len() != 2 || degrees[0] != 1 {
        report.push(Check::not_applicable("two-degree formula", format!("degrees {degrees:?}")));
        return Ok(report);
    }
    let commutator = g.commutator_subgroup().order() as u64;
    let formula = improved_upper_bound::<I>(&spectrum, commutator);
    report.push(Check::compare("AM = 1+(d-1)(1-1/|[G,G]|)", &formula, johnson_constant::<I>(&spectrum)));
    report.push(Check::compare("AD = 1+(d-1)(1-1/|[G,G]|)", &formula, ad_constant::<I>(&spectrum)));
    Ok(report)
}

/// Non-abelian implies `AM ≥ 3/2`; `|G:Z(G)| = 4` implies `AM = 3/2`,
/// `|[G,G]| = 2` and all degrees in `{1, 2}`.
pub fn verify_minimal_theorem<I: ExactInt>(g: &FiniteGroup, descriptor: &str) -> Result<TheoremReport> {
    let spectrum = degree_spectrum(g)?;
    let am = johnson_constant::<I>(&spectrum);
    let three_halves = Ratio::new(int::<I>(3), int::<I>(2));
    let mut report = TheoremReport::new("minimal", descriptor);
    if spectrum.is_abelian() {
        report.push(Check::not_applicable("non-abelian => AM >= 3/2", "abelian"));
    } else {
        report.push(Check::holds("non-abelian => AM >= 3/2", am >= three_halves, ">= 3/2", &am));
    }
    let center_index = g.center().index();
    if center_index == 4 {
        report.push(Check::compare("|G:Z(G)| = 4 => AM = 3/2", &three_halves, &am));
        report.push(Check::compare("|G:Z(G)| = 4 => |[G,G]| = 2", 2, g.commutator_subgroup().order()));
        report.push(Check::compare("|G:Z(G)| = 4 => maxdeg = 2", 2, spectrum.maxdeg()));
    } else {
        report.push(Check::not_applicable("|G:Z(G)| = 4 => AM = 3/2", format!("|G:Z(G)| = {center_index}")));
    }
    Ok(report)
}

/// `AD(G×H) = AD(G)·AD(H)`, `AM(G×H) = AM(G)·AM(H)`, and invariance of `AM`
/// under an abelian factor. The product spectrum is computed from the
/// product group itself.
pub fn verify_product_identities<I: ExactInt>(
    g: &FiniteGroup,
    h: &FiniteGroup,
    g_name: &str,
    h_name: &str,
) -> Result<TheoremReport> {
    let product = direct_product(g, h)?;
    let (sg, sh, sp) = (degree_spectrum(g)?, degree_spectrum(h)?, degree_spectrum(&product)?);
    let mut report = TheoremReport::new("products", &format!("{g_name} x {h_name}"));
    report.push(Check::compare(
        "AD(GxH) = AD(G) AD(H)",
        ad_constant::<I>(&sg) * ad_constant::<I>(&sh),
        ad_constant::<I>(&sp),
    ));
    let am_g = johnson_constant::<I>(&sg);
    let am_h = johnson_constant::<I>(&sh);
    let am_p = johnson_constant::<I>(&sp);
    report.push(Check::holds("AM(GxH) <= AM(G) AM(H)", am_p <= am_g.clone() * am_h.clone(), am_g.clone() * am_h.clone(), &am_p));
    report.push(Check::compare("AM(GxH) = AM(G) AM(H)", am_g.clone() * am_h.clone(), &am_p));
    if sh.is_abelian() {
        report.push(Check::compare("H abelian => AM(GxH) = AM(G)", &am_g, &am_p));
    } else {
        report.push(Check::not_applicable("H abelian => AM(GxH) = AM(G)", "H non-abelian"));
    }
    if sg.is_abelian() {
        report.push(Check::compare("G abelian => AM(GxH) = AM(H)", &am_h, &am_p));
    }
    report.push(Check::compare("spectrum(GxH) = spectrum(G) (x) spectrum(H)", sg.product(&sh), &sp));
    Ok(report)
}

/// Reports on `Hr_p(Z/p^nZ)` for `n = 1..=max_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct HrSequence<I: ExactInt> {
    pub p: u64,
    pub reports: Vec<AmenabilityReport<I>>,
    /// `p − 1 + 1/p`
    pub limit: Ratio<I>,
    pub constant: bool,
    pub spectra_match: bool,
    pub summary: String,
}

pub fn hr_sequence<I: ExactInt>(p: u64, max_n: u32) -> Result<HrSequence<I>> {
    hr_sequence_capped(p, max_n, DEFAULT_MAX_ORDER)
}

pub fn hr_sequence_capped<I: ExactInt>(p: u64, max_n: u32, max_order: usize) -> Result<HrSequence<I>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if max_n < 1 {
        return Err(Error::InvalidParameter("sequence length must be at least 1".into()));
    }
    let top = FamilyExpression::ReducedHeisenberg(p, max_n);
    if top.order() > max_order as u128 {
        return Err(Error::Overflow { order: top.order(), cap: max_order });
    }
    let limit = hr_constant::<I>(p);
    let mut reports = Vec::new();
    let mut spectra_match = true;
    for n in 1..=max_n {
        let expr = FamilyExpression::ReducedHeisenberg(p, n);
        let report = amenability_report::<I>(&expr.build_capped(max_order)?, &expr.to_string())?;
        let expected =
            DegreeSpectrum::from_entries([(1, p.pow(2 * n)), (p, p.pow(2 * n - 1) - p.pow(2 * n - 2))]);
        spectra_match &= report.spectrum == expected;
        reports.push(report);
    }
    let constant = reports.iter().all(|r| r.am == limit);
    let values: Vec<String> = reports.iter().map(|r| r.am.to_string()).collect();
    let summary = format!(
        "AM(Hr_{p}(Z/{p}^nZ)) for n = 1..{max_n}: [{}]; {} p-1+1/p = {limit} (witnessed at finite scale)",
        values.join(", "),
        if constant { "constant and equal to" } else { "NOT constantly equal to" },
    );
    Ok(HrSequence { p, reports, limit, constant, spectra_match, summary })
}
