//! Explicit unitary irreducible representations.
//!
//! Supported groups: abelian groups (characters by iterated cyclic
//! extension), semidirect products `A ⋊ H` with `A` abelian and abelian
//! stabilisers (Mackey's little-group method), direct products (Kronecker
//! products), and `Q8` by formula.

use std::collections::HashMap;

use nalgebra::DMatrix;
use num_complex::Complex;
use num_rational::Ratio;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::FamilyExpression;
use crate::group::{FiniteGroup, Subgroup};
use crate::scalar::{reduce_turns, root_of_unity, Real};

/// Construction-level tolerance for homomorphism and unitarity.
pub const CONSTRUCTION_TOLERANCE: f64 = 1e-10;
/// Tolerance for averaged identities such as the irreducibility criterion.
pub const STATISTICAL_TOLERANCE: f64 = 1e-8;
const EXHAUSTIVE_VERIFY_LIMIT: usize = 256;
const SAMPLED_PAIRS: usize = 20_000;

pub type Matrix<T> = DMatrix<Complex<T>>;

/// A unitary irreducible representation, one matrix per group element.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryIrrep<T: Real> {
    pub degree: usize,
    pub matrices: Vec<Matrix<T>>,
    pub label: String,
}

impl<T: Real> UnitaryIrrep<T> {
    pub fn new(label: impl Into<String>, matrices: Vec<Matrix<T>>) -> Self {
        let degree = matrices.first().map_or(0, |m| m.nrows());
        Self { degree, matrices, label: label.into() }
    }

    pub fn matrix(&self, g: usize) -> &Matrix<T> {
        &self.matrices[g]
    }

    pub fn character(&self, g: usize) -> Complex<T> {
        self.matrices[g].trace()
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }

    /// Value of a degree-1 representation.
    pub fn scalar(&self, g: usize) -> Complex<T> {
        self.matrices[g][(0, 0)]
    }

    /// `true` when `tr ρ(k) = d` within `tol`, i.e. `ρ(k) = I`.
    pub fn in_kernel(&self, k: usize, tol: f64) -> bool {
        let t = self.character(k);
        (t.re.to_f64_lossy() - self.degree as f64).abs() <= tol && t.im.to_f64_lossy().abs() <= tol
    }
}

/// Exact characters of an abelian group as angles in turns, indexed
/// `[character][element]`. Built by adjoining one generator at a time: each
/// character of `S` extends to `t` characters of `<S, g>` where `t` is the
/// least power with `g^t ∈ S`.
pub fn abelian_characters(a: &FiniteGroup) -> Result<Vec<Vec<Ratio<i64>>>> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let n = a.order();
    let mut pos: Vec<Option<usize>> = vec![None; n];
    let mut members = vec![a.identity()];
    pos[a.identity()] = Some(0);
    let mut chars: Vec<Vec<Ratio<i64>>> = vec![vec![Ratio::zero()]];
    while members.len() < n {
        let g = (0..n).find(|&x| pos[x].is_none()).expect("some element outside");
        let mut t = 1usize;
        let mut gt = g;
        while pos[gt].is_none() {
            gt = a.mul(gt, g);
            t += 1;
        }
        let gt_pos = pos[gt].unwrap();
        let old_len = members.len();
        // new element s * g^i sits at position i*old_len + pos(s)
        let mut gi = a.identity();
        for _ in 1..t {
            gi = a.mul(gi, g);
            for s in 0..old_len {
                let x = a.mul(members[s], gi);
                pos[x] = Some(members.len());
                members.push(x);
            }
        }
        let mut next = Vec::with_capacity(chars.len() * t);
        for chi in &chars {
            for j in 0..t {
                let theta = (chi[gt_pos] + Ratio::from_integer(j as i64)) / Ratio::from_integer(t as i64);
                let mut values = Vec::with_capacity(old_len * t);
                for i in 0..t {
                    let shift = theta * Ratio::from_integer(i as i64);
                    values.extend(chi.iter().map(|&v| reduce_turns(v + shift)));
                }
                next.push(values);
            }
        }
        chars = next;
    }
    // reorder values by element index
    Ok(chars
        .into_iter()
        .map(|vals| (0..n).map(|x| vals[pos[x].unwrap()]).collect())
        .collect())
}

/// All characters of an abelian group as degree-1 unitary representations.
pub fn abelian_dual<T: Real>(a: &FiniteGroup) -> Result<Vec<UnitaryIrrep<T>>> {
    Ok(abelian_characters(a)?
        .into_iter()
        .enumerate()
        .map(|(i, angles)| {
            let matrices = angles.iter().map(|&t| Matrix::from_element(1, 1, root_of_unity(t))).collect();
            UnitaryIrrep::new(format!("chi{i}"), matrices)
        })
        .collect())
}

/// An internal semidirect product `G = A ⋊ H` with `A` abelian and normal.
#[derive(Clone, Debug)]
pub struct SemidirectData<'g> {
    parent: &'g FiniteGroup,
    normal_abelian: Subgroup,
    complement: Subgroup,
    /// `g = a * h` for each parent element `g`.
    factorization: Vec<(usize, usize)>,
}

impl<'g> SemidirectData<'g> {
    pub fn new(parent: &'g FiniteGroup, normal_abelian: Subgroup, complement: Subgroup) -> Result<Self> {
        parent
            .is_normal(&normal_abelian)
            .map_err(|_| Error::InvalidDecomposition("A is not normal".into()))?;
        if !parent.subgroup_as_group(&normal_abelian).is_abelian() {
            return Err(Error::InvalidDecomposition("A is not abelian".into()));
        }
        if normal_abelian.members().iter().any(|&x| x != parent.identity() && complement.contains(x)) {
            return Err(Error::InvalidDecomposition("A and H intersect non-trivially".into()));
        }
        if normal_abelian.order() * complement.order() != parent.order() {
            return Err(Error::InvalidDecomposition("|A|·|H| differs from |G|".into()));
        }
        let mut factorization = vec![(usize::MAX, usize::MAX); parent.order()];
        for &a in normal_abelian.members() {
            for &h in complement.members() {
                factorization[parent.mul(a, h)] = (a, h);
            }
        }
        if factorization.iter().any(|&(a, _)| a == usize::MAX) {
            return Err(Error::InvalidDecomposition("A·H does not cover G".into()));
        }
        Ok(Self { parent, normal_abelian, complement, factorization })
    }

    pub fn parent(&self) -> &FiniteGroup {
        self.parent
    }

    pub fn normal_abelian(&self) -> &Subgroup {
        &self.normal_abelian
    }

    pub fn complement(&self) -> &Subgroup {
        &self.complement
    }

    pub fn factor(&self, g: usize) -> (usize, usize) {
        self.factorization[g]
    }
}

/// Irreducibles of `A ⋊ H`: for each `H`-orbit on the dual of `A`, extend a
/// representative `χ` to `A ⋊ H_χ`, twist by each character of the
/// stabiliser `H_χ`, and induce to `G`.
pub fn semidirect_irreps<T: Real>(data: &SemidirectData<'_>) -> Result<Vec<UnitaryIrrep<T>>> {
    let g = data.parent;
    let a_sub = &data.normal_abelian;
    let a_group = g.subgroup_as_group(a_sub);
    let dual = abelian_characters(&a_group)?;
    let key_index: HashMap<&[Ratio<i64>], usize> =
        dual.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    // (h·χ)(a) = χ(h^-1 a h)
    let act = |h: usize, chi: usize| -> usize {
        let moved: Vec<Ratio<i64>> = a_sub
            .members()
            .iter()
            .map(|&a| {
                let c = g.mul(g.mul(g.inv(h), a), h);
                dual[chi][a_sub.index_of(c).expect("A is normal")]
            })
            .collect();
        key_index[moved.as_slice()]
    };
    let mut seen = vec![false; dual.len()];
    let mut out = Vec::new();
    for chi in 0..dual.len() {
        if seen[chi] {
            continue;
        }
        let mut stabilizer = Vec::new();
        for &h in data.complement.members() {
            let image = act(h, chi);
            seen[image] = true;
            if image == chi {
                stabilizer.push(h);
            }
        }
        let stab = Subgroup::new(g, stabilizer).map_err(|e| Error::Inconsistent(e.to_string()))?;
        let stab_group = g.subgroup_as_group(&stab);
        let stab_chars = abelian_characters(&stab_group).map_err(|_| {
            Error::UnsupportedStabilizer(format!("stabiliser of order {} is not abelian", stab.order()))
        })?;
        let little: Vec<usize> = {
            let mut k: Vec<usize> = a_sub
                .members()
                .iter()
                .flat_map(|&a| stab.members().iter().map(move |&h| g.mul(a, h)))
                .collect();
            k.sort_unstable();
            k
        };
        let little = Subgroup::new(g, little).map_err(|e| Error::Inconsistent(e.to_string()))?;
        for (s, sigma) in stab_chars.iter().enumerate() {
            // ρ(a h) = χ(a) σ(h) on the little group
            let mut angle: HashMap<usize, Ratio<i64>> = HashMap::with_capacity(little.order());
            for &k in little.members() {
                let (a, h) = data.factor(k);
                let va = dual[chi][a_sub.index_of(a).unwrap()];
                let vh = sigma[stab.index_of(h).unwrap()];
                angle.insert(k, reduce_turns(va + vh));
            }
            let matrices = induce_linear(g, &little, |k| angle.get(&k).copied())?;
            out.push(UnitaryIrrep::new(format!("Ind[chi{chi} x sigma{s}]"), matrices));
        }
    }
    let sum: usize = out.iter().map(|r| r.degree * r.degree).sum();
    if sum != g.order() {
        return Err(Error::IncompleteDual { sum, order: g.order() });
    }
    Ok(out)
}

/// Sorted left-coset transversal of `k` in `g`: each coset represented by its
/// smallest element.
pub fn coset_transversal(g: &FiniteGroup, k: &Subgroup) -> Vec<usize> {
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if covered[x] {
            continue;
        }
        reps.push(x);
        for &y in k.members() {
            covered[g.mul(x, y)] = true;
        }
    }
    reps
}

/// Induces a degree-1 representation (given as angles on `k`) up to `g`.
fn induce_linear<T: Real>(
    g: &FiniteGroup,
    k: &Subgroup,
    angle: impl Fn(usize) -> Option<Ratio<i64>>,
) -> Result<Vec<Matrix<T>>> {
    let transversal = coset_transversal(g, k);
    let m = transversal.len();
    let mut coset_of = vec![0usize; g.order()];
    for (i, &t) in transversal.iter().enumerate() {
        for &y in k.members() {
            coset_of[g.mul(t, y)] = i;
        }
    }
    let mut matrices = Vec::with_capacity(g.order());
    for x in g.elements() {
        let mut mat = Matrix::<T>::zeros(m, m);
        for (j, &tj) in transversal.iter().enumerate() {
            let y = g.mul(x, tj);
            let i = coset_of[y];
            let inner = g.mul(g.inv(transversal[i]), y);
            let theta = angle(inner)
                .ok_or_else(|| Error::Inconsistent("induction left the little group".into()))?;
            mat[(i, j)] = root_of_unity(theta);
        }
        matrices.push(mat);
    }
    Ok(matrices)
}

/// `π ⊗ σ` on `G × H`, element `(i, j)` encoded as `i·|H| + j`.
pub fn tensor_irrep<T: Real>(pi: &UnitaryIrrep<T>, sigma: &UnitaryIrrep<T>) -> UnitaryIrrep<T> {
    let matrices = pi
        .matrices
        .iter()
        .flat_map(|a| sigma.matrices.iter().map(move |b| a.kronecker(b)))
        .collect();
    UnitaryIrrep::new(format!("{} (x) {}", pi.label, sigma.label), matrices)
}

/// Irreducibles of `Q8` in the element order used by the family constructor.
pub fn quaternion_irreps<T: Real>() -> Vec<UnitaryIrrep<T>> {
    let c = |re: f64, im: f64| Complex::new(T::lit(re), T::lit(im));
    let mut out = Vec::new();
    for (ei, ej) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
        let unit_value = [1.0, ei, ej, ei * ej];
        let matrices = (0..8).map(|x| Matrix::from_element(1, 1, c(unit_value[x / 2], 0.0))).collect();
        out.push(UnitaryIrrep::new(format!("lin[{ei:+},{ej:+}]"), matrices));
    }
    let one = Matrix::<T>::identity(2, 2);
    let i = Matrix::from_row_slice(2, 2, &[c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0)]);
    let j = Matrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]);
    let k = &i * &j;
    let units = [one, i, j, k];
    let matrices = (0..8)
        .map(|x| if x % 2 == 0 { units[x / 2].clone() } else { -units[x / 2].clone() })
        .collect();
    out.push(UnitaryIrrep::new("quaternion", matrices));
    out
}

/// Explicit irreducibles for a group named by a family expression, in the
/// element encoding produced by [`FamilyExpression::build`].
pub fn family_irreps<T: Real>(expr: &FamilyExpression) -> Result<Vec<UnitaryIrrep<T>>> {
    match *expr {
        FamilyExpression::Product(ref a, ref b) => {
            let left = family_irreps::<T>(a)?;
            let right = family_irreps::<T>(b)?;
            Ok(left.iter().flat_map(|p| right.iter().map(move |s| tensor_irrep(p, s))).collect())
        }
        FamilyExpression::Quaternion => Ok(quaternion_irreps()),
        FamilyExpression::Cyclic(_) => abelian_dual(&expr.build()?),
        FamilyExpression::Dihedral(n) => {
            let g = expr.build()?;
            let n = n as usize;
            let a = Subgroup::new(&g, (0..n).collect())?;
            let h = Subgroup::new(&g, vec![0, n])?;
            semidirect_irreps(&SemidirectData::new(&g, a, h)?)
        }
        FamilyExpression::Heisenberg(m) => {
            let g = expr.build()?;
            let m = m as usize;
            let a = Subgroup::new(&g, (0..m * m).collect())?;
            let h = Subgroup::new(&g, (0..m).map(|x| x * m * m).collect())?;
            semidirect_irreps(&SemidirectData::new(&g, a, h)?)
        }
        FamilyExpression::ReducedHeisenberg(p, n) => {
            let g = expr.build()?;
            let (p, q) = (p as usize, (p as usize).pow(n));
            let a = Subgroup::new(&g, (0..q * p).collect())?;
            let h = Subgroup::new(&g, (0..q).map(|x| x * q * p).collect())?;
            semidirect_irreps(&SemidirectData::new(&g, a, h)?)
        }
        FamilyExpression::Symmetric(n) if n <= 2 => abelian_dual(&expr.build()?),
        FamilyExpression::Symmetric(3) => {
            // lexicographic permutations: 0 = id, 3 and 4 are the 3-cycles, 1 = (1 2)
            let g = expr.build()?;
            let a = Subgroup::new(&g, vec![0, 3, 4])?;
            let h = Subgroup::new(&g, vec![0, 1])?;
            semidirect_irreps(&SemidirectData::new(&g, a, h)?)
        }
        FamilyExpression::Symmetric(_) => Err(Error::UnsupportedGroup(expr.to_string())),
    }
}

/// Errors unless `Σ d² = |G|` and every matrix list has length `|G|`.
pub fn check_complete<T: Real>(g: &FiniteGroup, irreps: &[UnitaryIrrep<T>]) -> Result<()> {
    if let Some(r) = irreps.iter().find(|r| r.matrices.len() != g.order()) {
        return Err(Error::GroupMismatch { expected: g.order(), found: r.matrices.len() });
    }
    let sum: usize = irreps.iter().map(|r| r.degree * r.degree).sum();
    if sum != g.order() {
        return Err(Error::IncompleteDual { sum, order: g.order() });
    }
    Ok(())
}

/// Maximum deviations found by [`verify_irrep`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IrrepCheck {
    pub homomorphism: f64,
    pub unitarity: f64,
    /// `|(1/|G|) Σ |tr ρ(g)|² − 1|`
    pub irreducibility: f64,
    pub passed: bool,
}

pub fn verify_irrep<T: Real>(g: &FiniteGroup, rho: &UnitaryIrrep<T>) -> IrrepCheck {
    verify_irrep_with(g, rho, CONSTRUCTION_TOLERANCE, STATISTICAL_TOLERANCE)
}

pub fn verify_irrep_with<T: Real>(
    g: &FiniteGroup,
    rho: &UnitaryIrrep<T>,
    construction_tol: f64,
    statistical_tol: f64,
) -> IrrepCheck {
    if rho.matrices.len() != g.order() {
        return IrrepCheck { homomorphism: f64::INFINITY, unitarity: f64::INFINITY, irreducibility: f64::INFINITY, passed: false };
    }
    let max_abs = |m: &Matrix<T>| m.iter().fold(0.0f64, |s, z| s.max(z.norm_sqr().to_f64_lossy().sqrt()));
    let mut hom = 0.0f64;
    let mut check_pair = |a: usize, b: usize| {
        let diff = rho.matrix(g.mul(a, b)) - rho.matrix(a) * rho.matrix(b);
        hom = hom.max(max_abs(&diff));
    };
    let n = g.order();
    if n <= EXHAUSTIVE_VERIFY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                check_pair(a, b);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..SAMPLED_PAIRS {
            check_pair(rng.random_range(0..n), rng.random_range(0..n));
        }
    }
    let eye = Matrix::<T>::identity(rho.degree, rho.degree);
    let unit = rho
        .matrices
        .iter()
        .map(|m| max_abs(&(m * m.adjoint() - &eye)))
        .fold(0.0f64, f64::max);
    let norm_sq: f64 = rho.matrices.iter().map(|m| m.trace().norm_sqr().to_f64_lossy()).sum::<f64>() / n as f64;
    let irr = (norm_sq - 1.0).abs();
    IrrepCheck {
        homomorphism: hom,
        unitarity: unit,
        irreducibility: irr,
        passed: hom <= construction_tol && unit <= construction_tol && irr <= statistical_tol,
    }
}

/// `(1/|G|) Σ_g tr ρ(g) · conj(tr ρ'(g))`.
pub fn character_inner_product<T: Real>(rho: &UnitaryIrrep<T>, other: &UnitaryIrrep<T>) -> Complex<T> {
    let n = rho.matrices.len();
    let mut acc = Complex::<T>::zero();
    for x in 0..n {
        acc += rho.character(x) * other.character(x).conj();
    }
    acc / Complex::new(T::lit(n as f64), T::zero())
}

/// Degrees of a list of irreducibles as a spectrum.
pub fn degrees_of<T: Real>(irreps: &[UnitaryIrrep<T>]) -> crate::degrees::DegreeSpectrum {
    crate::degrees::DegreeSpectrum::from_degrees(irreps.iter().map(|r| r.degree as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degrees::degree_spectrum;
    use crate::families::{cyclic, dihedral, parse_family, parse_family_expression};

    fn assert_all_pass(g: &FiniteGroup, irreps: &[UnitaryIrrep<f64>]) {
        for r in irreps {
            let c = verify_irrep(g, r);
            assert!(c.passed, "{}: {c:?}", r.label);
        }
    }

    #[test]
    fn z2_and_z3_duals() {
        let d = abelian_dual::<f64>(&cyclic(2).unwrap()).unwrap();
        assert_eq!(d.len(), 2);
        assert!((d[1].scalar(1).re + 1.0).abs() < 1e-15);
        let d = abelian_dual::<f64>(&cyclic(3).unwrap()).unwrap();
        let omega = Complex::from_polar(1.0, std::f64::consts::TAU / 3.0);
        for r in &d {
            let v = r.scalar(1);
            assert!([Complex::new(1.0, 0.0), omega, omega * omega].iter().any(|w| (v - w).norm() < 1e-12));
        }
    }

    #[test]
    fn klein_four_characters_are_real_and_distinct() {
        let g = parse_family("C(2)xC(2)").unwrap();
        let chars = abelian_characters(&g).unwrap();
        assert_eq!(chars.len(), 4);
        for c in &chars {
            assert!(c.iter().all(|t| *t.denom() <= 2));
        }
        let mut sorted = chars.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 4);
        assert!(matches!(abelian_characters(&dihedral(3).unwrap()), Err(Error::NotAbelian)));
    }

    #[test]
    fn odd_dihedral_mackey() {
        for n in [3u64, 5, 7] {
            let expr = FamilyExpression::Dihedral(n);
            let g = expr.build().unwrap();
            let irreps = family_irreps::<f64>(&expr).unwrap();
            let lin = irreps.iter().filter(|r| r.degree == 1).count();
            let two = irreps.iter().filter(|r| r.degree == 2).count();
            assert_eq!((lin, two), (2, (n as usize - 1) / 2));
            assert_all_pass(&g, &irreps);
        }
    }

    #[test]
    fn d4_and_heisenberg_pass_verifier() {
        for s in ["D(4)", "Hr(3,1)", "Hr(2,2)", "H(3)", "H(4)"] {
            let expr = parse_family_expression(s).unwrap();
            let g = expr.build().unwrap();
            let irreps = family_irreps::<f64>(&expr).unwrap();
            assert_eq!(degrees_of(&irreps), degree_spectrum(&g).unwrap(), "{s}");
            assert_all_pass(&g, &irreps);
        }
    }

    #[test]
    fn tensor_products() {
        let expr = parse_family_expression("Q8xD(4)").unwrap();
        let g = expr.build().unwrap();
        let irreps = family_irreps::<f64>(&expr).unwrap();
        let four = irreps.iter().find(|r| r.degree == 4).unwrap();
        assert!(verify_irrep(&g, four).passed);
        assert_eq!(degrees_of(&irreps), degree_spectrum(&g).unwrap());
        // sign ⊗ sign on C2 x C2 is linear
        let d = abelian_dual::<f64>(&cyclic(2).unwrap()).unwrap();
        let t = tensor_irrep(&d[1], &d[1]);
        assert_eq!(t.degree, 1);
        let k = parse_family("C(2)xC(2)").unwrap();
        assert!(verify_irrep(&k, &t).passed);
    }

    #[test]
    fn trivial_action_gives_product_of_duals() {
        // C(3) x C(2) as an internal semidirect product with trivial action
        let g = parse_family("C(3)xC(2)").unwrap();
        let a = Subgroup::new(&g, vec![0, 2, 4]).unwrap();
        let h = Subgroup::new(&g, vec![0, 1]).unwrap();
        let irreps = semidirect_irreps::<f64>(&SemidirectData::new(&g, a, h).unwrap()).unwrap();
        assert_eq!(irreps.len(), 6);
        assert!(irreps.iter().all(|r| r.degree == 1));
        assert_all_pass(&g, &irreps);
    }

    #[test]
    fn invalid_decompositions() {
        let g = dihedral(3).unwrap();
        let reflections = Subgroup::new(&g, vec![0, 3]).unwrap();
        let rotations = Subgroup::new(&g, vec![0, 1, 2]).unwrap();
        assert!(matches!(
            SemidirectData::new(&g, reflections.clone(), rotations.clone()),
            Err(Error::InvalidDecomposition(_))
        ));
        let trivial = Subgroup::new(&g, vec![0]).unwrap();
        assert!(SemidirectData::new(&g, rotations, trivial).is_err());
    }

    #[test]
    fn perturbed_matrix_fails() {
        let g = dihedral(4).unwrap();
        let mut r = family_irreps::<f64>(&FamilyExpression::Dihedral(4))
            .unwrap()
            .into_iter()
            .find(|r| r.degree == 2)
            .unwrap();
        r.matrices[3][(0, 1)] += Complex::new(1e-3, 0.0);
        let c = verify_irrep(&g, &r);
        assert!(!c.passed);
        assert!(c.homomorphism > 5e-4 && c.homomorphism < 3e-3, "{c:?}");
    }

    #[test]
    fn trivial_group_block() {
        let g = cyclic(1).unwrap();
        let r = UnitaryIrrep::<f64>::new("triv", vec![Matrix::identity(1, 1)]);
        assert!(verify_irrep(&g, &r).passed);
    }

    #[test]
    fn schur_orthogonality() {
        for s in ["Q8", "D(5)", "Hr(2,2)", "S3"] {
            let expr = if s == "S3" { FamilyExpression::Symmetric(3) } else { parse_family_expression(s).unwrap() };
            let irreps = family_irreps::<f64>(&expr).unwrap();
            for (i, a) in irreps.iter().enumerate() {
                for (j, b) in irreps.iter().enumerate() {
                    let ip = character_inner_product(a, b);
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((ip.re - expect).abs() < 1e-8 && ip.im.abs() < 1e-8, "{s} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn single_precision_irreps() {
        let expr = parse_family_expression("Hr(3,1)").unwrap();
        let g = expr.build().unwrap();
        for r in family_irreps::<f32>(&expr).unwrap() {
            assert!(verify_irrep_with(&g, &r, 1e-5, 1e-5).passed);
        }
    }

    #[test]
    fn unsupported_groups_are_reported() {
        assert!(matches!(
            family_irreps::<f64>(&FamilyExpression::Symmetric(4)),
            Err(Error::UnsupportedGroup(_))
        ));
    }
}
