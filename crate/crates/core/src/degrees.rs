//! Degrees of the irreducible representations of a finite group.
//!
//! The exact route is Burnside–Dixon: the class multiplication matrices are
//! simultaneously diagonalised over a prime field F_q with `q ≡ 1 (mod exp G)`
//! and `q > 2|G|`. Each joint eigenvector is a central character `ω`, and
//! the degree is recovered from
//!
//! ```text
//! |G| / d² = Σ_k ω_k ω_{k*} / |C_k|
//! ```
//!
//! where `k*` is the class of inverses. The numeric route decomposes the
//! regular representation with a random Hermitian central element and is
//! kept independent of the exact path so the two can check each other.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, FiniteGroup};
use crate::modular::{admissible_prime, PrimeField};

pub const DEFAULT_CLASS_CAP: usize = 2000;
pub const NUMERIC_ORACLE_MAX_ORDER: usize = 2000;
const NUMERIC_CLUSTER_TOLERANCE: f64 = 1e-7;
const NUMERIC_ATTEMPTS: usize = 5;

/// Multiset of irreducible degrees as sorted `(degree, multiplicity)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSpectrum {
    entries: Vec<(u64, u64)>,
}

impl DegreeSpectrum {
    /// Collects degrees (in any order) into a spectrum.
    pub fn from_degrees(degrees: impl IntoIterator<Item = u64>) -> Self {
        let mut map = BTreeMap::new();
        for d in degrees {
            *map.entry(d).or_insert(0u64) += 1;
        }
        Self { entries: map.into_iter().collect() }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (d, m) in entries {
            if m > 0 {
                *map.entry(d).or_insert(0u64) += m;
            }
        }
        Self { entries: map.into_iter().collect() }
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    /// `Σ m d²`, the order of the group.
    pub fn group_order(&self) -> u64 {
        self.entries.iter().map(|&(d, m)| m * d * d).sum()
    }

    /// Number of irreducibles, i.e. of conjugacy classes.
    pub fn irreducible_count(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn maxdeg(&self) -> u64 {
        self.entries.last().map_or(1, |&(d, _)| d)
    }

    /// Multiplicity of degree 1.
    pub fn linear_count(&self) -> u64 {
        self.entries.iter().find(|&&(d, _)| d == 1).map_or(0, |&(_, m)| m)
    }

    pub fn distinct_degrees(&self) -> Vec<u64> {
        self.entries.iter().map(|&(d, _)| d).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.maxdeg() == 1
    }

    /// Spectrum of a direct product: degrees multiply pairwise.
    pub fn product(&self, other: &Self) -> Self {
        Self::from_entries(
            self.entries
                .iter()
                .flat_map(|&(d, m)| other.entries.iter().map(move |&(e, n)| (d * e, m * n))),
        )
    }
}

impl fmt::Display for DegreeSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({d}, {m})")?;
        }
        write!(f, "}}")
    }
}

/// Exact degree spectrum with the default class cap.
pub fn degree_spectrum(g: &FiniteGroup) -> Result<DegreeSpectrum> {
    degree_spectrum_capped(g, DEFAULT_CLASS_CAP)
}

pub fn degree_spectrum_capped(g: &FiniteGroup, class_cap: usize) -> Result<DegreeSpectrum> {
    let n = g.order();
    if g.is_abelian() {
        return Ok(DegreeSpectrum::from_entries([(1, n as u64)]));
    }
    let classes = g.conjugacy_classes();
    let r = classes.len();
    if r > class_cap {
        return Err(Error::ClassCapExceeded { classes: r, cap: class_cap });
    }
    let q = admissible_prime(g.exponent() as u64, 2 * n as u64).ok_or(Error::NoSuitablePrime)?;
    let field = PrimeField::new(q);
    let characters = central_characters(g, &classes, &field)?;
    if characters.len() != r {
        return Err(Error::Inconsistent(format!(
            "found {} central characters for {r} classes",
            characters.len()
        )));
    }
    let inverse_class: Vec<usize> =
        (0..r).map(|k| classes.class_of[g.inv(classes.representative(k))]).collect();
    let size_inv: Vec<u64> = classes.classes.iter().map(|c| field.inv(c.len() as u64)).collect();
    let mut degrees = Vec::with_capacity(r);
    for omega in &characters {
        let s = (0..r).fold(0, |acc, k| {
            field.add(acc, field.mul(field.mul(omega[k], omega[inverse_class[k]]), size_inv[k]))
        });
        if s == 0 {
            return Err(Error::Inconsistent("degenerate central character".into()));
        }
        let d2 = field.mul(n as u64 % q, field.inv(s));
        let d = integer_sqrt(d2);
        if d2 == 0 || d2 > n as u64 || d * d != d2 {
            return Err(Error::Inconsistent(format!("squared degree {d2} does not lift to a square")));
        }
        degrees.push(d);
    }
    let spectrum = DegreeSpectrum::from_degrees(degrees);
    if spectrum.group_order() != n as u64 {
        return Err(Error::Inconsistent(format!(
            "squared degrees sum to {} instead of {n}",
            spectrum.group_order()
        )));
    }
    Ok(spectrum)
}

pub(crate) fn integer_sqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// `M[j][k] = #{x ∈ C_i : x^-1 g_k ∈ C_j}`, the structure constants of
/// class sum `i` acting on central-character vectors.
fn class_matrix(g: &FiniteGroup, classes: &ConjugacyClasses, i: usize) -> Vec<Vec<u64>> {
    let r = classes.len();
    let mut m = vec![vec![0u64; r]; r];
    for k in 0..r {
        let gk = classes.representative(k);
        for &x in &classes.classes[i] {
            m[classes.class_of[g.mul(g.inv(x), gk)]][k] += 1;
        }
    }
    m
}

/// Joint eigenvectors of all class matrices, normalised to 1 at the
/// identity class, in a deterministic order.
fn central_characters(
    g: &FiniteGroup,
    classes: &ConjugacyClasses,
    field: &PrimeField,
) -> Result<Vec<Vec<u64>>> {
    let r = classes.len();
    let mut rng = ChaCha8Rng::seed_from_u64(field.modulus());
    // each space: rows in reduced echelon form plus pivot columns
    let identity_rows: Vec<Vec<u64>> =
        (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces = vec![(identity_rows, (0..r).collect::<Vec<_>>())];
    for i in 1..r {
        if spaces.iter().all(|(rows, _)| rows.len() == 1) {
            break;
        }
        let m: Vec<Vec<u64>> =
            class_matrix(g, classes, i).into_iter().map(|row| row.into_iter().map(|x| field.reduce(x)).collect()).collect();
        let mut next = Vec::new();
        for (rows, pivots) in spaces {
            if rows.len() == 1 {
                next.push((rows, pivots));
                continue;
            }
            let dim = rows.len();
            // restricted[s][t]: coefficient of basis s in the image of basis t.
            // The space is invariant and its basis is in reduced echelon
            // form, so only the pivot rows of the image are needed.
            let restricted: Vec<Vec<u64>> = (0..dim)
                .map(|s| {
                    let mrow = &m[pivots[s]];
                    (0..dim)
                        .map(|t| mrow.iter().zip(&rows[t]).fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b))))
                        .collect()
                })
                .collect();
            let eigenvalues = field.poly_roots(&field.charpoly(&restricted), &mut rng);
            if eigenvalues.len() == 1 {
                next.push((rows, pivots));
                continue;
            }
            let mut total = 0;
            for lambda in eigenvalues {
                let shifted: Vec<Vec<u64>> = (0..dim)
                    .map(|s| {
                        (0..dim)
                            .map(|t| if s == t { field.sub(restricted[s][t], lambda) } else { restricted[s][t] })
                            .collect()
                    })
                    .collect();
                let kernel = field.nullspace(&shifted);
                total += kernel.len();
                let vectors: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|j| (0..dim).fold(0, |acc, t| field.add(acc, field.mul(c[t], rows[t][j]))))
                            .collect()
                    })
                    .collect();
                next.push(field.row_reduce(vectors));
            }
            if total != dim {
                return Err(Error::Inconsistent("class matrix is not diagonalisable over F_q".into()));
            }
        }
        spaces = next;
    }
    let mut characters = Vec::with_capacity(spaces.len());
    for (rows, _) in spaces {
        if rows.len() != 1 {
            return Err(Error::Inconsistent("class matrices failed to separate characters".into()));
        }
        let v = &rows[0];
        if v[0] == 0 {
            return Err(Error::Inconsistent("central character vanishes at the identity".into()));
        }
        let scale = field.inv(v[0]);
        characters.push(v.iter().map(|&x| field.mul(x, scale)).collect());
    }
    characters.sort();
    Ok(characters)
}

/// Degree spectrum from a numerical decomposition of the regular
/// representation.
pub fn degree_spectrum_numeric_oracle(g: &FiniteGroup, seed: u64) -> Result<DegreeSpectrum> {
    let n = g.order();
    if n > NUMERIC_ORACLE_MAX_ORDER {
        return Err(Error::CapExceeded { what: "numeric oracle group order", value: n, limit: NUMERIC_ORACLE_MAX_ORDER });
    }
    let classes = g.conjugacy_classes();
    let r = classes.len();
    let inverse_class: Vec<usize> =
        (0..r).map(|k| classes.class_of[g.inv(classes.representative(k))]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..NUMERIC_ATTEMPTS {
        // Hermitian central element: coefficient on C_{k*} is the conjugate of C_k's
        let mut coeff = vec![Complex::new(0.0, 0.0); r];
        for k in 0..r {
            let kk = inverse_class[k];
            if kk < k {
                continue;
            }
            let re = rng.random_range(-1.0..1.0);
            if kk == k {
                coeff[k] = Complex::new(re, 0.0);
            } else {
                let c = Complex::new(re, rng.random_range(-1.0..1.0));
                coeff[k] = c;
                coeff[kk] = c.conj();
            }
        }
        let mut m = DMatrix::<Complex<f64>>::zeros(n, n);
        for h in 0..n {
            let c = coeff[classes.class_of[h]];
            for x in 0..n {
                m[(g.mul(h, x), x)] += c;
            }
        }
        let mut eig: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        eig.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
        let scale = eig.iter().fold(1.0f64, |s, x| s.max(x.abs()));
        let tol = NUMERIC_CLUSTER_TOLERANCE * scale;
        let mut sizes = Vec::new();
        let mut run = 1u64;
        for w in eig.windows(2) {
            if w[1] - w[0] <= tol {
                run += 1;
            } else {
                sizes.push(run);
                run = 1;
            }
        }
        sizes.push(run);
        let degrees: Option<Vec<u64>> = sizes
            .iter()
            .map(|&s| {
                let d = integer_sqrt(s);
                (d * d == s).then_some(d)
            })
            .collect();
        let Some(degrees) = degrees else { continue };
        if degrees.len() != r {
            continue;
        }
        let spectrum = DegreeSpectrum::from_degrees(degrees);
        if spectrum.group_order() == n as u64 {
            return Ok(spectrum);
        }
    }
    Err(Error::DegenerateSample(NUMERIC_ATTEMPTS))
}
