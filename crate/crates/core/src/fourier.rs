//! Operator-valued Fourier analysis on a finite group.
//!
//! Haar measure is counting measure, so the Plancherel weight of `π` is
//! `ν(π) = d_π / |G|` and the Fourier coefficient is `π(f) = Σ_s f(s) π(s)`.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex;
use num_rational::Ratio;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::irreps::{check_complete, Matrix, UnitaryIrrep};
use crate::scalar::Real;

/// A complex function on a finite group, one value per element.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupFunction<T: Real> {
    pub values: Vec<Complex<T>>,
}

impl<T: Real> GroupFunction<T> {
    pub fn new(values: Vec<Complex<T>>) -> Self {
        Self { values }
    }

    pub fn zeros(order: usize) -> Self {
        Self { values: vec![Complex::zero(); order] }
    }

    /// Point mass at `s`.
    pub fn delta(order: usize, s: usize) -> Self {
        let mut f = Self::zeros(order);
        f.values[s] = Complex::new(T::one(), T::zero());
        f
    }

    /// Real and imaginary parts drawn uniformly from `[-1, 1)`.
    pub fn random<R: Rng>(order: usize, rng: &mut R) -> Self {
        let values = (0..order)
            .map(|_| Complex::new(T::lit(rng.random_range(-1.0..1.0)), T::lit(rng.random_range(-1.0..1.0))))
            .collect();
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn l2_norm_sq(&self) -> T {
        self.values.iter().fold(T::zero(), |s, z| s + z.norm_sqr())
    }

    pub fn l1_norm(&self) -> T {
        self.values.iter().fold(T::zero(), |s, z| s + z.norm_sqr().sqrt())
    }

    pub fn sup_norm(&self) -> T {
        self.values.iter().fold(T::zero(), |s, z| s.max(z.norm_sqr().sqrt()))
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self { values: self.values.iter().map(|&z| z * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { values: self.values.iter().zip(&other.values).map(|(&a, &b)| a + b).collect() }
    }

    /// Pointwise product, e.g. multiplication by a linear character.
    pub fn pointwise(&self, other: &Self) -> Self {
        Self { values: self.values.iter().zip(&other.values).map(|(&a, &b)| a * b).collect() }
    }

    /// `(a * b)(x) = Σ_y a(y) b(y^-1 x)`.
    pub fn convolve(&self, g: &FiniteGroup, other: &Self) -> Self {
        let mut out = Self::zeros(g.order());
        for y in g.elements() {
            if self.values[y].is_zero() {
                continue;
            }
            for z in g.elements() {
                out.values[g.mul(y, z)] += self.values[y] * other.values[z];
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .fold(0.0f64, |s, (&a, &b)| s.max((a - b).norm_sqr().sqrt().to_f64_lossy()))
    }
}

/// A finitely supported function on `G × N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoVariableFunction<T: Real> {
    pub left_order: usize,
    pub right_order: usize,
    pub entries: BTreeMap<(usize, usize), Complex<T>>,
}

impl<T: Real> TwoVariableFunction<T> {
    pub fn zeros(left_order: usize, right_order: usize) -> Self {
        Self { left_order, right_order, entries: BTreeMap::new() }
    }

    pub fn delta(left_order: usize, right_order: usize, s: usize, t: usize) -> Self {
        let mut u = Self::zeros(left_order, right_order);
        u.entries.insert((s, t), Complex::new(T::one(), T::zero()));
        u
    }
}

/// One matrix per irreducible.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorField<T: Real> {
    pub blocks: Vec<Matrix<T>>,
}

/// Plancherel weights `ν(π) = d_π / |G|`, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlancherelWeights {
    pub weights: Vec<Ratio<i64>>,
}

impl PlancherelWeights {
    pub fn new<T: Real>(g: &FiniteGroup, irreps: &[UnitaryIrrep<T>]) -> Result<Self> {
        check_complete(g, irreps)?;
        let n = g.order() as i64;
        let weights: Vec<Ratio<i64>> = irreps.iter().map(|r| Ratio::new(r.degree as i64, n)).collect();
        let total: Ratio<i64> =
            weights.iter().zip(irreps).map(|(w, r)| w * Ratio::from_integer(r.degree as i64)).sum();
        if total != Ratio::from_integer(1) {
            return Err(Error::Inconsistent("Plancherel weights are not normalised".into()));
        }
        Ok(Self { weights })
    }

    pub fn weight<T: Real>(&self, i: usize) -> T {
        let w = self.weights[i];
        T::lit(*w.numer() as f64 / *w.denom() as f64)
    }

    /// Total weight of the degree-1 irreducibles.
    pub fn linear_mass<T: Real>(&self, irreps: &[UnitaryIrrep<T>]) -> Ratio<i64> {
        self.weights.iter().zip(irreps).filter(|(_, r)| r.is_linear()).map(|(w, _)| *w).sum()
    }
}

fn weight<T: Real>(g: &FiniteGroup, rho: &UnitaryIrrep<T>) -> T {
    T::lit(rho.degree as f64 / g.order() as f64)
}

/// Sum of singular values.
pub fn trace_norm<T: Real>(m: &Matrix<T>) -> T {
    if m.nrows() == 1 && m.ncols() == 1 {
        return m[(0, 0)].norm_sqr().sqrt();
    }
    m.clone().singular_values().iter().fold(T::zero(), |s, &x| s + x)
}

/// `π(f) = Σ_s f(s) π(s)`.
pub fn fourier_coefficient<T: Real>(rho: &UnitaryIrrep<T>, f: &GroupFunction<T>) -> Result<Matrix<T>> {
    if rho.matrices.len() != f.len() {
        return Err(Error::GroupMismatch { expected: rho.matrices.len(), found: f.len() });
    }
    let mut out = DMatrix::zeros(rho.degree, rho.degree);
    for (s, &v) in f.values.iter().enumerate() {
        if !v.is_zero() {
            out += rho.matrix(s) * v;
        }
    }
    Ok(out)
}

pub fn fourier_transform<T: Real>(irreps: &[UnitaryIrrep<T>], f: &GroupFunction<T>) -> Result<OperatorField<T>> {
    Ok(OperatorField { blocks: irreps.iter().map(|r| fourier_coefficient(r, f)).collect::<Result<_>>()? })
}

/// Both sides of `‖f‖₂² = Σ_π ν(π) tr(π(f)* π(f))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlancherelCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub deviation: f64,
}

impl PlancherelCheck {
    pub fn relative_deviation(&self) -> f64 {
        self.deviation / self.lhs.abs().max(f64::MIN_POSITIVE)
    }
}

pub fn verify_plancherel<T: Real>(
    g: &FiniteGroup,
    irreps: &[UnitaryIrrep<T>],
    f: &GroupFunction<T>,
) -> Result<PlancherelCheck> {
    check_complete(g, irreps)?;
    let lhs = f.l2_norm_sq().to_f64_lossy();
    let mut rhs = T::zero();
    for rho in irreps {
        let c = fourier_coefficient(rho, f)?;
        let hs = c.iter().fold(T::zero(), |s, z| s + z.norm_sqr());
        rhs += weight(g, rho) * hs;
    }
    let rhs = rhs.to_f64_lossy();
    Ok(PlancherelCheck { lhs, rhs, deviation: (lhs - rhs).abs() })
}

/// `‖f‖_A = Σ_π ν(π) ‖π(f)‖_{S¹}`.
pub fn fourier_algebra_norm<T: Real>(g: &FiniteGroup, irreps: &[UnitaryIrrep<T>], f: &GroupFunction<T>) -> Result<T> {
    check_complete(g, irreps)?;
    let mut acc = T::zero();
    for rho in irreps {
        acc += weight(g, rho) * trace_norm(&fourier_coefficient(rho, f)?);
    }
    Ok(acc)
}

/// `Ψ(C)(s) = Σ_π ν(π) tr(C_π π(s^-1))`.
pub fn inverse_fourier<T: Real>(
    g: &FiniteGroup,
    irreps: &[UnitaryIrrep<T>],
    weights: &PlancherelWeights,
    field: &OperatorField<T>,
) -> Result<GroupFunction<T>> {
    check_complete(g, irreps)?;
    if field.blocks.len() != irreps.len() || weights.weights.len() != irreps.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} blocks and {} weights for {} irreducibles",
            field.blocks.len(),
            weights.weights.len(),
            irreps.len()
        )));
    }
    for (i, (b, r)) in field.blocks.iter().zip(irreps).enumerate() {
        if b.nrows() != r.degree || b.ncols() != r.degree {
            return Err(Error::ShapeMismatch(format!("block {i} is {}x{}, expected degree {}", b.nrows(), b.ncols(), r.degree)));
        }
    }
    let mut out = GroupFunction::zeros(g.order());
    for s in g.elements() {
        let s_inv = g.inv(s);
        let mut acc = Complex::<T>::zero();
        for (i, (c, rho)) in field.blocks.iter().zip(irreps).enumerate() {
            // tr(C π(s^-1)) without forming the product
            let p = rho.matrix(s_inv);
            let mut tr = Complex::<T>::zero();
            for a in 0..rho.degree {
                for b in 0..rho.degree {
                    tr += c[(a, b)] * p[(b, a)];
                }
            }
            acc += tr * weights.weight::<T>(i);
        }
        out.values[s] = acc;
    }
    Ok(out)
}

/// `ι_Δ f(s, t) = f(s)` on the diagonal, zero elsewhere.
pub fn diagonal_embed<T: Real>(f: &GroupFunction<T>) -> TwoVariableFunction<T> {
    let n = f.len();
    let mut u = TwoVariableFunction::zeros(n, n);
    for (s, &v) in f.values.iter().enumerate() {
        if !v.is_zero() {
            u.entries.insert((s, s), v);
        }
    }
    u
}

/// `Ψ(u) = Σ_{χ linear} Σ_σ ν(χ) ν(σ) ‖(χ ⊗ σ)(u)‖_{S¹}` for `u` on `G × G`.
pub fn psi_functional<T: Real>(
    g: &FiniteGroup,
    irreps: &[UnitaryIrrep<T>],
    u: &TwoVariableFunction<T>,
) -> Result<T> {
    check_complete(g, irreps)?;
    if u.left_order != g.order() || u.right_order != g.order() {
        return Err(Error::GroupMismatch { expected: g.order(), found: u.left_order.max(u.right_order) });
    }
    let mut total = T::zero();
    for chi in irreps.iter().filter(|r| r.is_linear()) {
        let nu_chi = weight(g, chi);
        for sigma in irreps {
            let mut m = DMatrix::zeros(sigma.degree, sigma.degree);
            for (&(s, t), &v) in &u.entries {
                m += sigma.matrix(t) * (v * chi.scalar(s));
            }
            total += nu_chi * weight(g, sigma) * trace_norm(&m);
        }
    }
    Ok(total)
}

/// Value `1/|K|` on `K`, zero elsewhere.
pub fn uniform_on_subgroup<T: Real>(g: &FiniteGroup, k: &Subgroup) -> GroupFunction<T> {
    let mut f = GroupFunction::zeros(g.order());
    let v = Complex::new(T::lit(1.0 / k.order() as f64), T::zero());
    for &x in k.members() {
        f.values[x] = v;
    }
    f
}

/// Per-irreducible outcome of the `μ_K` projection check.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionRow {
    pub label: String,
    pub degree: usize,
    pub kernel_contains_k: bool,
    /// Distance of `π(μ_K)` from `I` (kernel case) or from `0`.
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionReport {
    pub rows: Vec<ProjectionRow>,
    pub max_deviation: f64,
}

impl ProjectionReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.max_deviation <= tol
    }
}

/// `π(μ_K)` is `I` when `K ⊆ ker π` and `0` otherwise.
pub fn verify_mu_k_projection<T: Real>(
    g: &FiniteGroup,
    irreps: &[UnitaryIrrep<T>],
    k: &Subgroup,
) -> Result<ProjectionReport> {
    g.is_normal(k)?;
    check_complete(g, irreps)?;
    let mu = uniform_on_subgroup(g, k);
    let mut rows = Vec::with_capacity(irreps.len());
    let mut max_deviation = 0.0f64;
    for rho in irreps {
        let kernel = k.members().iter().all(|&x| rho.in_kernel(x, 1e-9));
        let c = fourier_coefficient(rho, &mu)?;
        let target = if kernel { Matrix::<T>::identity(rho.degree, rho.degree) } else { Matrix::<T>::zeros(rho.degree, rho.degree) };
        let deviation = (c - target).iter().fold(0.0f64, |s, z| s.max(z.norm_sqr().sqrt().to_f64_lossy()));
        max_deviation = max_deviation.max(deviation);
        rows.push(ProjectionRow { label: rho.label.clone(), degree: rho.degree, kernel_contains_k: kernel, deviation });
    }
    Ok(ProjectionReport { rows, max_deviation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{parse_family_expression, FamilyExpression};
    use crate::irreps::family_irreps;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn setup(expr: &str) -> (FiniteGroup, Vec<UnitaryIrrep<f64>>) {
        let e = if expr == "S3" { FamilyExpression::Symmetric(3) } else { parse_family_expression(expr).unwrap() };
        (e.build().unwrap(), family_irreps(&e).unwrap())
    }

    #[test]
    fn delta_coefficients() {
        let (g, irreps) = setup("D(4)");
        for rho in &irreps {
            let c = fourier_coefficient(rho, &GroupFunction::delta(8, g.identity())).unwrap();
            assert!((c - Matrix::<f64>::identity(rho.degree, rho.degree)).norm() < 1e-14);
            let c = fourier_coefficient(rho, &GroupFunction::delta(8, 5)).unwrap();
            assert!((c - rho.matrix(5)).norm() < 1e-14);
        }
        assert!(matches!(
            fourier_coefficient(&irreps[0], &GroupFunction::<f64>::zeros(3)),
            Err(Error::GroupMismatch { .. })
        ));
    }

    #[test]
    fn plancherel_examples() {
        let (g, irreps) = setup("S3");
        let c = verify_plancherel(&g, &irreps, &GroupFunction::delta(6, 2)).unwrap();
        assert!((c.lhs - 1.0).abs() < 1e-15 && c.deviation < 1e-12);
        let ones = GroupFunction::new(vec![Complex::new(1.0, 0.0); 6]);
        let c = verify_plancherel(&g, &irreps, &ones).unwrap();
        assert!((c.lhs - 6.0).abs() < 1e-12 && (c.rhs - 6.0).abs() < 1e-9);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = verify_plancherel(&g, &irreps, &GroupFunction::random(6, &mut rng)).unwrap();
        assert!(c.deviation < 1e-9);
        assert!(matches!(
            verify_plancherel(&g, &irreps[..2], &ones),
            Err(Error::IncompleteDual { sum: 2, order: 6 })
        ));
    }

    #[test]
    fn a_norm_examples() {
        let (g, irreps) = setup("Q8");
        for s in g.elements() {
            let n = fourier_algebra_norm(&g, &irreps, &GroupFunction::delta(8, s)).unwrap();
            assert!((n - 1.0).abs() < 1e-12);
        }
        let (g, irreps) = setup("C(2)");
        let f = GroupFunction::new(vec![Complex::new(1.0, 0.0); 2]);
        assert!((fourier_algebra_norm(&g, &irreps, &f).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn linear_character_isometry() {
        let (g, irreps) = setup("Hr(2,2)");
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = GroupFunction::random(g.order(), &mut rng);
        let base = fourier_algebra_norm(&g, &irreps, &f).unwrap();
        for chi in irreps.iter().filter(|r| r.is_linear()) {
            let twisted = f.pointwise(&GroupFunction::new((0..g.order()).map(|s| chi.scalar(s)).collect()));
            assert!((fourier_algebra_norm(&g, &irreps, &twisted).unwrap() - base).abs() < 1e-9);
        }
    }

    #[test]
    fn inverse_transform_examples() {
        let (g, irreps) = setup("D(4)");
        let w = PlancherelWeights::new(&g, &irreps).unwrap();
        let ident = OperatorField { blocks: irreps.iter().map(|r| Matrix::identity(r.degree, r.degree)).collect() };
        let f = inverse_fourier(&g, &irreps, &w, &ident).unwrap();
        assert!(f.max_abs_diff(&GroupFunction::delta(8, g.identity())) < 1e-12);
        let at_s = OperatorField { blocks: irreps.iter().map(|r| r.matrix(6).clone()).collect() };
        let f = inverse_fourier(&g, &irreps, &w, &at_s).unwrap();
        assert!(f.max_abs_diff(&GroupFunction::delta(8, 6)) < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = GroupFunction::random(8, &mut rng);
        let back = inverse_fourier(&g, &irreps, &w, &fourier_transform(&irreps, &f).unwrap()).unwrap();
        assert!(back.max_abs_diff(&f) < 1e-9);
        let bad = OperatorField { blocks: vec![Matrix::identity(1, 1)] };
        assert!(matches!(inverse_fourier(&g, &irreps, &w, &bad), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn psi_examples() {
        let (g, irreps) = setup("S3");
        let zero = TwoVariableFunction::<f64>::zeros(6, 6);
        assert_eq!(psi_functional(&g, &irreps, &zero).unwrap(), 0.0);
        // ν(Ω) = 2/6
        let u = TwoVariableFunction::delta(6, 6, 1, 4);
        assert!((psi_functional(&g, &irreps, &u).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = GroupFunction::random(6, &mut rng);
        let lhs = psi_functional(&g, &irreps, &diagonal_embed(&f)).unwrap();
        let rhs = fourier_algebra_norm(&g, &irreps, &f).unwrap() / 3.0;
        assert!((lhs - rhs).abs() < 1e-8);
    }

    #[test]
    fn diagonal_embedding() {
        let f = GroupFunction::<f64>::delta(4, 2);
        let u = diagonal_embed(&f);
        assert_eq!(u.entries.len(), 1);
        assert!(u.entries.contains_key(&(2, 2)));
        assert!(diagonal_embed(&GroupFunction::<f64>::zeros(4)).entries.is_empty());
        let two = GroupFunction::delta(4, 0).add(&GroupFunction::delta(4, 3).scale(Complex::new(2.0, 0.0)));
        assert_eq!(diagonal_embed(&two).entries.keys().copied().collect::<Vec<_>>(), vec![(0, 0), (3, 3)]);
    }

    #[test]
    fn uniform_measures() {
        let (g, _) = setup("S3");
        let triv = g.subgroup_generated(&[]);
        assert_eq!(uniform_on_subgroup::<f64>(&g, &triv), GroupFunction::delta(6, g.identity()));
        let all = g.subgroup_generated(&[1, 3]);
        let h = uniform_on_subgroup::<f64>(&g, &all);
        assert!(h.values.iter().all(|z| (z.re - 1.0 / 6.0).abs() < 1e-15));
        let k = g.commutator_subgroup();
        let h = uniform_on_subgroup::<f64>(&g, &k);
        assert_eq!(k.members(), &[0, 3, 4]);
        assert!(h.convolve(&g, &h).max_abs_diff(&h) < 1e-15);
        let total: f64 = h.values.iter().map(|z| z.re).sum();
        assert!((total - 1.0).abs() < 1e-15);
    }

    #[test]
    fn projection_onto_linears() {
        let (g, irreps) = setup("Hr(3,1)");
        let k = g.commutator_subgroup();
        let report = verify_mu_k_projection(&g, &irreps, &k).unwrap();
        assert!(report.passed(1e-10), "{report:?}");
        let identity_rows = report.rows.iter().filter(|r| r.kernel_contains_k).count();
        assert_eq!(identity_rows, 9);
        assert!(report.rows.iter().filter(|r| !r.kernel_contains_k).all(|r| r.degree == 3));
        let all = Subgroup::new(&g, g.elements().collect()).unwrap();
        let report = verify_mu_k_projection(&g, &irreps, &all).unwrap();
        assert_eq!(report.rows.iter().filter(|r| r.kernel_contains_k).count(), 1);
        assert!(report.passed(1e-10));
        let triv = g.subgroup_generated(&[]);
        assert!(verify_mu_k_projection(&g, &irreps, &triv).unwrap().rows.iter().all(|r| r.kernel_contains_k));
    }

    #[test]
    fn projection_requires_normality() {
        let (g, irreps) = setup("S3");
        let h = g.subgroup_generated(&[1]);
        assert!(matches!(verify_mu_k_projection(&g, &irreps, &h), Err(Error::NotNormal { .. })));
    }

    #[test]
    fn trace_norm_two_routes() {
        // Σ sqrt(eig(A* A)) as an independent route
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for d in 1..6 {
            let m = Matrix::<f64>::from_fn(d, d, |_, _| {
                Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
            });
            let gram = m.adjoint() * &m;
            let via_eig: f64 = gram.symmetric_eigenvalues().iter().map(|&x| x.max(0.0).sqrt()).sum();
            assert!((trace_norm(&m) - via_eig).abs() < 1e-10);
        }
    }

    #[test]
    fn weights_are_normalised() {
        let (g, irreps) = setup("Q8");
        let w = PlancherelWeights::new(&g, &irreps).unwrap();
        assert_eq!(w.linear_mass(&irreps), Ratio::new(1, 2));
    }
}
