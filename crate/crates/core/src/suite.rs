//! Named verification suites, dispatched by id. Exact suites work on any
//! group; the Fourier suites need a full set of unitary irreducibles and so
//! run on family expressions (or abelian tables).

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constants::report::amenability_report_capped;
use crate::constants::{
    standard_polynomial_check, verify_minimal_theorem, verify_product_identities, verify_two_degree, Check,
    TheoremReport,
};
use crate::degrees::DEFAULT_CLASS_CAP;
use crate::error::{Error, Result};
use crate::families::{parse_family_expression, FamilyExpression};
use crate::fourier::{
    diagonal_embed, fourier_algebra_norm, fourier_transform, inverse_fourier, psi_functional, verify_mu_k_projection,
    verify_plancherel, GroupFunction, PlancherelWeights,
};
use crate::group::{read_cayley_file, FiniteGroup};
use crate::irreps::{abelian_dual, family_irreps, UnitaryIrrep};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const DEFAULT_TRIALS: usize = 100;

pub const PLANCHEREL_TOLERANCE: f64 = 1e-9;
pub const INVERSION_TOLERANCE: f64 = 1e-9;
pub const KEY_TRICK_TOLERANCE: f64 = 1e-8;
pub const ISOMETRY_TOLERANCE: f64 = 1e-9;
pub const PROJECTION_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    JohnsonVsAd,
    TwoDegree,
    Minimal,
    Products,
    KeyTrick,
    Plancherel,
    MuK,
    Al,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::JohnsonVsAd,
        Theorem::TwoDegree,
        Theorem::Minimal,
        Theorem::Products,
        Theorem::KeyTrick,
        Theorem::Plancherel,
        Theorem::MuK,
        Theorem::Al,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::JohnsonVsAd => "johnson-vs-ad",
            Theorem::TwoDegree => "two-degree",
            Theorem::Minimal => "minimal",
            Theorem::Products => "products",
            Theorem::KeyTrick => "key-trick",
            Theorem::Plancherel => "plancherel",
            Theorem::MuK => "muK",
            Theorem::Al => "al",
        }
    }

    /// Whether the suite ignores its group argument.
    pub fn needs_group(self) -> bool {
        self != Theorem::Al
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub trials: usize,
    pub seed: u64,
    pub max_order: usize,
    pub class_cap: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            max_order: crate::group::DEFAULT_MAX_ORDER,
            class_cap: DEFAULT_CLASS_CAP,
        }
    }
}

/// A group together with the name it was given and, when it came from an
/// expression, the expression itself.
#[derive(Clone, Debug)]
pub struct Subject {
    pub descriptor: String,
    pub group: FiniteGroup,
    pub expr: Option<FamilyExpression>,
}

impl Subject {
    pub fn from_expr(expr: FamilyExpression, max_order: usize) -> Result<Self> {
        let group = expr.build_capped(max_order)?;
        Ok(Self { descriptor: expr.to_string(), group, expr: Some(expr) })
    }

    pub fn parse(text: &str, max_order: usize) -> Result<Self> {
        Self::from_expr(parse_family_expression(text)?, max_order)
    }

    pub fn from_table(path: &Path, max_order: usize) -> Result<Self> {
        let group = read_cayley_file(path)?;
        if group.order() > max_order {
            return Err(Error::Overflow { order: group.order() as u128, cap: max_order });
        }
        let descriptor = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
        Ok(Self { descriptor, group, expr: None })
    }

    /// Unitary irreducibles: from the family construction, or the dual
    /// group for abelian tables.
    pub fn irreps(&self) -> Result<Vec<UnitaryIrrep<f64>>> {
        match &self.expr {
            Some(e) => family_irreps(e),
            None if self.group.is_abelian() => abelian_dual(&self.group),
            None => Err(Error::UnsupportedGroup(format!(
                "{}: explicit irreducibles need a family expression or an abelian table",
                self.descriptor
            ))),
        }
    }

    /// Splits `AxB...xZ` into `AxB...` and `Z`.
    pub fn split_product(&self, max_order: usize) -> Result<(Subject, Subject)> {
        match &self.expr {
            Some(FamilyExpression::Product(a, b)) => {
                Ok((Subject::from_expr((**a).clone(), max_order)?, Subject::from_expr((**b).clone(), max_order)?))
            }
            _ => Err(Error::InvalidParameter(format!("{} is not a direct product expression", self.descriptor))),
        }
    }
}

fn tolerance_check(name: &str, deviation: f64, tol: f64) -> Check {
    Check::holds(name, deviation <= tol, format!("<= {tol:e}"), format!("{deviation:.3e}"))
}

/// Runs one suite. `products` takes its second group from `partner`, or
/// splits a product expression when no partner is given; `al` ignores the
/// group entirely.
pub fn run_theorem(
    theorem: Theorem,
    subject: Option<&Subject>,
    partner: Option<&Subject>,
    opts: &SuiteOptions,
) -> Result<TheoremReport> {
    if theorem == Theorem::Al {
        return al_suite(opts);
    }
    let subject = subject.ok_or_else(|| Error::InvalidParameter(format!("{theorem} needs a group")))?;
    let (g, name) = (&subject.group, subject.descriptor.as_str());
    match theorem {
        Theorem::JohnsonVsAd => johnson_vs_ad(subject, opts),
        Theorem::TwoDegree => verify_two_degree::<i128>(g, name),
        Theorem::Minimal => verify_minimal_theorem::<i128>(g, name),
        Theorem::Products => match partner {
            Some(h) => verify_product_identities::<i128>(g, &h.group, name, &h.descriptor),
            None => {
                let (a, b) = subject.split_product(opts.max_order)?;
                verify_product_identities::<i128>(&a.group, &b.group, &a.descriptor, &b.descriptor)
            }
        },
        Theorem::Plancherel => plancherel_suite(subject, opts),
        Theorem::KeyTrick => key_trick_suite(subject, opts),
        Theorem::MuK => mu_k_suite(subject),
        Theorem::Al => unreachable!(),
    }
}

fn johnson_vs_ad(subject: &Subject, opts: &SuiteOptions) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("johnson-vs-ad", &subject.descriptor);
    let r = match amenability_report_capped::<i128>(&subject.group, &subject.descriptor, opts.class_cap) {
        Ok(r) => r,
        Err(Error::Inconsistent(msg)) => {
            report.push(Check::holds("report invariants", false, "consistent", msg));
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.push(Check::compare("AD = AM", r.am, r.ad));
    report.push(Check::holds("1 <= AD", r.ad >= Ratio::from_integer(1), ">= 1", r.ad));
    report.push(Check::holds("AD <= improved", r.ad <= r.improved_upper, format!("<= {}", r.improved_upper), r.ad));
    let strict = r.flags.abelian || r.improved_upper < Ratio::from_integer(r.runde_upper);
    report.push(Check::holds(
        "improved <= maxdeg, strict if non-abelian",
        r.improved_upper <= Ratio::from_integer(r.runde_upper) && strict,
        format!("<= {}", r.maxdeg),
        r.improved_upper,
    ));
    report.push(Check::compare("nu(Omega) = 1/|[G,G]|", Ratio::new(1, r.commutator_order as i128), r.nu_omega));
    Ok(report)
}

fn plancherel_suite(subject: &Subject, opts: &SuiteOptions) -> Result<TheoremReport> {
    let g = &subject.group;
    let irreps = subject.irreps()?;
    let weights = PlancherelWeights::new(g, &irreps)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (mut plancherel, mut inversion) = (0.0f64, 0.0f64);
    for _ in 0..opts.trials {
        let f = GroupFunction::<f64>::random(g.order(), &mut rng);
        plancherel = plancherel.max(verify_plancherel(g, &irreps, &f)?.relative_deviation());
        let back = inverse_fourier(g, &irreps, &weights, &fourier_transform(&irreps, &f)?)?;
        inversion = inversion.max(back.max_abs_diff(&f));
    }
    let mut report = TheoremReport::new("plancherel", &subject.descriptor);
    report.push(tolerance_check("Plancherel identity (relative)", plancherel, PLANCHEREL_TOLERANCE));
    report.push(tolerance_check("inversion round trip", inversion, INVERSION_TOLERANCE));
    Ok(report)
}

fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn key_trick_suite(subject: &Subject, opts: &SuiteOptions) -> Result<TheoremReport> {
    let g = &subject.group;
    let irreps = subject.irreps()?;
    let weights = PlancherelWeights::new(g, &irreps)?;
    let nu = weights.linear_mass(&irreps);
    let nu_omega = *nu.numer() as f64 / *nu.denom() as f64;
    let characters: Vec<GroupFunction<f64>> = irreps
        .iter()
        .filter(|r| r.is_linear())
        .map(|chi| GroupFunction::new(g.elements().map(|s| chi.scalar(s)).collect()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (mut key, mut isometry, mut sandwich) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..opts.trials {
        let f = GroupFunction::<f64>::random(g.order(), &mut rng);
        let norm = fourier_algebra_norm(g, &irreps, &f)?;
        let psi = psi_functional(g, &irreps, &diagonal_embed(&f))?;
        key = key.max(relative(psi, nu_omega * norm));
        for chi in &characters {
            isometry = isometry.max(relative(fourier_algebra_norm(g, &irreps, &f.pointwise(chi))?, norm));
        }
        let slack = 1e-12 * norm.max(1.0);
        sandwich = sandwich.max(f.sup_norm() - norm - slack).max(norm - f.l1_norm() - slack);
    }
    let mut report = TheoremReport::new("key-trick", &subject.descriptor);
    report.push(tolerance_check("Psi(iota f) = nu(Omega) ||f||_A", key, KEY_TRICK_TOLERANCE));
    report.push(tolerance_check("||chi f||_A = ||f||_A", isometry, ISOMETRY_TOLERANCE));
    report.push(Check::holds(
        "||f||_inf <= ||f||_A <= ||f||_1",
        sandwich <= 0.0,
        "no violation",
        if sandwich <= 0.0 { "none".to_string() } else { format!("excess {sandwich:.3e}") },
    ));
    Ok(report)
}

fn mu_k_suite(subject: &Subject) -> Result<TheoremReport> {
    let g = &subject.group;
    let irreps = subject.irreps()?;
    let k = g.commutator_subgroup();
    let projection = verify_mu_k_projection(g, &irreps, &k)?;
    let mut report = TheoremReport::new("muK", &subject.descriptor);
    report.push(tolerance_check("pi(mu_K) in {0, I} for K = [G,G]", projection.max_deviation, PROJECTION_TOLERANCE));
    let kernel_mass: usize =
        projection.rows.iter().filter(|r| r.kernel_contains_k).map(|r| r.degree * r.degree).sum();
    report.push(Check::compare("sum of d^2 over irreducibles trivial on K = |G:K|", k.index(), kernel_mass));
    Ok(report)
}

fn al_suite(opts: &SuiteOptions) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("al", "-");
    for (n, d, trials) in [(2, 2, 200), (3, 3, 50), (1, 2, 20), (2, 3, 20)] {
        let r = standard_polynomial_check(n, d, trials, opts.seed)?;
        let name = format!("P_{} on {d}x{d}", 2 * n);
        if r.expected_zero {
            report.push(Check::compare(&format!("{name} vanishes"), trials, r.zero_trials));
        } else {
            report.push(Check::holds(
                &format!("{name} has a nonzero witness"),
                r.witness.is_some(),
                "witness",
                if r.witness.is_some() { "found" } else { "none" },
            ));
        }
    }
    Ok(report)
}
