use num_rational::Ratio;
use serde_json::{json, Value};

use super::{ad_constant, improved_upper_bound, int, johnson_constant, nu_omega, rational_decimal, ExactInt};
use crate::degrees::{degree_spectrum_capped, DegreeSpectrum, DEFAULT_CLASS_CAP};
use crate::error::{Error, Result};
use crate::families::FamilyExpression;
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub abelian: bool,
    /// `AD = maxdeg`
    pub ad_maximal: bool,
    /// Degrees are exactly `{1, d}` for some `d > 1`.
    pub two_degree: bool,
    pub center_index_4: bool,
}

/// All constants and structural flags for one group.
#[derive(Clone, Debug, PartialEq)]
pub struct AmenabilityReport<I: ExactInt> {
    pub group: String,
    pub order: u64,
    pub am: Ratio<I>,
    pub ad: Ratio<I>,
    pub runde_lower: Ratio<I>,
    pub runde_upper: I,
    pub improved_upper: Ratio<I>,
    pub nu_omega: Ratio<I>,
    pub maxdeg: u64,
    pub commutator_order: u64,
    pub center_index: u64,
    pub spectrum: DegreeSpectrum,
    pub flags: Flags,
}

pub const CSV_COLUMNS: [&str; 16] = [
    "group",
    "order",
    "am",
    "ad",
    "bounds_lower",
    "bounds_upper",
    "bounds_improved",
    "nu_omega",
    "maxdeg",
    "commutator_order",
    "center_index",
    "spectrum",
    "abelian",
    "ad_maximal",
    "two_degree",
    "center_index_4",
];

impl<I: ExactInt> AmenabilityReport<I> {
    /// Checks the finite-group chain `1 ≤ AD = AM ≤ improved ≤ maxdeg`, the
    /// strictness of the improved bound for non-abelian groups and
    /// `ν(Ω) = 1/|[G,G]|`.
    pub fn check_invariants(&self) -> Result<()> {
        let one = Ratio::from_integer(I::one());
        let maxdeg = Ratio::from_integer(self.runde_upper.clone());
        let fail = |what: &str| Err(Error::Inconsistent(format!("{}: {what}", self.group)));
        if self.ad != self.am {
            return fail("AD differs from AM");
        }
        if !(one <= self.ad && self.ad <= self.improved_upper && self.improved_upper <= maxdeg) {
            return fail("bound chain 1 <= AD <= improved <= maxdeg violated");
        }
        if !self.flags.abelian && self.improved_upper >= maxdeg {
            return fail("improved bound is not strictly below maxdeg");
        }
        if self.nu_omega != Ratio::new(I::one(), int(self.commutator_order)) {
            return fail("nu(Omega) differs from 1/|[G,G]|");
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group,
            "order": self.order,
            "am": self.am.to_string(),
            "ad": self.ad.to_string(),
            "bounds": {
                "lower": self.runde_lower.to_string(),
                "upper": self.maxdeg,
                "improved": self.improved_upper.to_string(),
            },
            "nu_omega": self.nu_omega.to_string(),
            "maxdeg": self.maxdeg,
            "commutator_order": self.commutator_order,
            "center_index": self.center_index,
            "spectrum": self.spectrum.entries().iter().map(|&(d, m)| vec![d, m]).collect::<Vec<_>>(),
            "flags": {
                "abelian": self.flags.abelian,
                "ad_maximal": self.flags.ad_maximal,
                "two_degree": self.flags.two_degree,
                "center_index_4": self.flags.center_index_4,
            },
        })
    }

    /// Fields in [`CSV_COLUMNS`] order. The spectrum is rendered as
    /// `d:m;d:m`.
    pub fn csv_fields(&self) -> Vec<String> {
        let spectrum = self
            .spectrum
            .entries()
            .iter()
            .map(|(d, m)| format!("{d}:{m}"))
            .collect::<Vec<_>>()
            .join(";");
        vec![
            self.group.clone(),
            self.order.to_string(),
            self.am.to_string(),
            self.ad.to_string(),
            self.runde_lower.to_string(),
            self.maxdeg.to_string(),
            self.improved_upper.to_string(),
            self.nu_omega.to_string(),
            self.maxdeg.to_string(),
            self.commutator_order.to_string(),
            self.center_index.to_string(),
            spectrum,
            self.flags.abelian.to_string(),
            self.flags.ad_maximal.to_string(),
            self.flags.two_degree.to_string(),
            self.flags.center_index_4.to_string(),
        ]
    }

    /// Human-readable block; rationals carry a 6-digit decimal alongside.
    pub fn to_text(&self) -> String {
        let q = |r: &Ratio<I>| format!("{} (~{})", r, rational_decimal(r));
        let mut s = String::new();
        s.push_str(&format!("group            {}\n", self.group));
        s.push_str(&format!("order            {}\n", self.order));
        s.push_str(&format!("spectrum         {}\n", self.spectrum));
        s.push_str(&format!("AM (Johnson)     {}\n", q(&self.am)));
        s.push_str(&format!("AD               {}\n", q(&self.ad)));
        s.push_str(&format!("improved upper   {}\n", q(&self.improved_upper)));
        s.push_str(&format!("maxdeg           {}\n", self.maxdeg));
        s.push_str(&format!("nu(Omega)        {}\n", q(&self.nu_omega)));
        s.push_str(&format!("|[G,G]|          {}\n", self.commutator_order));
        s.push_str(&format!("|G:Z(G)|         {}\n", self.center_index));
        s.push_str(&format!(
            "flags            abelian={} ad_maximal={} two_degree={} center_index_4={}\n",
            self.flags.abelian, self.flags.ad_maximal, self.flags.two_degree, self.flags.center_index_4
        ));
        s
    }
}

pub fn amenability_report<I: ExactInt>(g: &FiniteGroup, descriptor: &str) -> Result<AmenabilityReport<I>> {
    amenability_report_capped(g, descriptor, DEFAULT_CLASS_CAP)
}

pub fn amenability_report_capped<I: ExactInt>(
    g: &FiniteGroup,
    descriptor: &str,
    class_cap: usize,
) -> Result<AmenabilityReport<I>> {
    let spectrum = degree_spectrum_capped(g, class_cap)?;
    let commutator_order = g.commutator_subgroup().order() as u64;
    let center_index = g.center().index() as u64;
    let report = report_from_parts(descriptor, spectrum, commutator_order, center_index);
    report.check_invariants()?;
    Ok(report)
}

/// Builds the group named by `expr` and reports on it.
pub fn amenability_report_for<I: ExactInt>(expr: &FamilyExpression) -> Result<AmenabilityReport<I>> {
    amenability_report(&expr.build()?, &expr.to_string())
}

pub(crate) fn report_from_parts<I: ExactInt>(
    descriptor: &str,
    spectrum: DegreeSpectrum,
    commutator_order: u64,
    center_index: u64,
) -> AmenabilityReport<I> {
    let am = johnson_constant::<I>(&spectrum);
    let ad = ad_constant::<I>(&spectrum);
    let maxdeg = spectrum.maxdeg();
    let improved = improved_upper_bound::<I>(&spectrum, commutator_order);
    let degrees = spectrum.distinct_degrees();
    let flags = Flags {
        abelian: maxdeg == 1,
        ad_maximal: ad == Ratio::from_integer(int(maxdeg)),
        two_degree: degrees.len() == 2 && degrees[0] == 1,
        center_index_4: center_index == 4,
    };
    AmenabilityReport {
        group: descriptor.to_string(),
        order: spectrum.group_order(),
        runde_lower: ad.clone(),
        runde_upper: int(maxdeg),
        improved_upper: improved,
        nu_omega: nu_omega(&spectrum),
        am,
        ad,
        maxdeg,
        commutator_order,
        center_index,
        spectrum,
        flags,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{parse_family, parse_family_expression};

    fn report(expr: &str) -> AmenabilityReport<i128> {
        amenability_report_for(&parse_family_expression(expr).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_report() {
        let r = report("C(12)");
        assert_eq!(r.am, Ratio::from_integer(1));
        assert!(r.flags.abelian && r.flags.ad_maximal && !r.flags.two_degree);
        assert_eq!(r.commutator_order, 1);
        assert_eq!(r.center_index, 1);
    }

    #[test]
    fn quaternion_report() {
        let r = report("Q8");
        assert_eq!(r.am, Ratio::new(3, 2));
        assert!(r.flags.center_index_4 && r.flags.two_degree && !r.flags.ad_maximal);
    }

    #[test]
    fn reduced_heisenberg_report() {
        let r = report("Hr(3,2)");
        assert_eq!(r.am, Ratio::new(7, 3));
        assert!(r.flags.two_degree);
        assert_eq!(r.nu_omega, Ratio::new(1, 3));
        assert_eq!(r.center_index, 9);
    }

    #[test]
    fn json_schema() {
        let v = report("D(3)").to_json();
        assert_eq!(v["group"], "D(3)");
        assert_eq!(v["order"], 6);
        assert_eq!(v["am"], "5/3");
        assert_eq!(v["bounds"]["lower"], "5/3");
        assert_eq!(v["bounds"]["upper"], 2);
        assert_eq!(v["bounds"]["improved"], "5/3");
        assert_eq!(v["nu_omega"], "1/3");
        assert_eq!(v["spectrum"], json!([[1, 2], [2, 1]]));
        assert_eq!(v["flags"]["two_degree"], true);
        let c = report("C(5)").to_json();
        assert_eq!(c["am"], "1");
    }

    #[test]
    fn csv_and_text() {
        let r = report("D(4)");
        let fields = r.csv_fields();
        assert_eq!(fields.len(), CSV_COLUMNS.len());
        assert_eq!(fields[2], "3/2");
        assert_eq!(fields[11], "1:4;2:1");
        assert!(r.to_text().contains("3/2 (~1.50000)"));
    }

    #[test]
    fn invariant_violation_detected() {
        let g = parse_family("D(3)").unwrap();
        let mut r: AmenabilityReport<i64> = amenability_report(&g, "D(3)").unwrap();
        r.ad = Ratio::new(2, 1);
        assert!(matches!(r.check_invariants(), Err(Error::Inconsistent(_))));
    }
}
