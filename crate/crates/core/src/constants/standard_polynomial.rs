//! The standard polynomial `P_k(X_1, …, X_k) = Σ_σ sgn(σ) X_σ(1)···X_σ(k)`
//! evaluated on exact integer matrices. `P_{2n}` vanishes on all `d × d`
//! matrices iff `d ≤ n`.

use itertools::Itertools;
use num_traits::Num;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub const MAX_N: usize = 3;
pub const MAX_D: usize = 8;
pub const ENTRY_BOUND: i64 = 9;

/// Dense row-major square matrix.
pub type SquareMatrix<T> = Vec<Vec<T>>;

fn identity<T: Clone + Num>(d: usize) -> SquareMatrix<T> {
    (0..d).map(|i| (0..d).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect()
}

fn mat_mul<T: Clone + Num>(a: &SquareMatrix<T>, b: &SquareMatrix<T>) -> SquareMatrix<T> {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).fold(T::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone()))
                .collect()
        })
        .collect()
}

fn permutation_sign(p: &[usize]) -> bool {
    let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inversions % 2 == 0
}

/// `Σ_σ sgn(σ) X_σ(1)···X_σ(k)` for `k = xs.len()` square matrices of equal size.
pub fn standard_polynomial<T: Clone + Num>(xs: &[SquareMatrix<T>]) -> SquareMatrix<T> {
    let d = xs.first().map_or(0, |x| x.len());
    let mut total: SquareMatrix<T> = vec![vec![T::zero(); d]; d];
    for perm in (0..xs.len()).permutations(xs.len()) {
        let term = perm.iter().fold(identity::<T>(d), |acc, &i| mat_mul(&acc, &xs[i]));
        let even = permutation_sign(&perm);
        for (row, trow) in total.iter_mut().zip(term) {
            for (x, t) in row.iter_mut().zip(trow) {
                *x = if even { x.clone() + t } else { x.clone() - t };
            }
        }
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardPolynomialReport {
    pub n: usize,
    pub d: usize,
    pub trials: usize,
    /// Whether `P_{2n}` is an identity on `d × d` matrices (`d ≤ n`).
    pub expected_zero: bool,
    pub zero_trials: usize,
    /// First tuple on which `P_{2n}` was nonzero, with its value.
    pub witness: Option<(Vec<SquareMatrix<i64>>, SquareMatrix<i64>)>,
}

impl StandardPolynomialReport {
    pub fn all_zero(&self) -> bool {
        self.zero_trials == self.trials
    }

    /// Exact zero on every trial when `d ≤ n`, a nonzero witness otherwise.
    pub fn passed(&self) -> bool {
        if self.expected_zero {
            self.all_zero()
        } else {
            self.witness.is_some()
        }
    }
}

/// Evaluates `P_{2n}` on `trials` random tuples of `d × d` integer matrices
/// with entries in `[-9, 9]`.
pub fn standard_polynomial_check(n: usize, d: usize, trials: usize, seed: u64) -> Result<StandardPolynomialReport> {
    if n > MAX_N {
        return Err(Error::CapExceeded { what: "standard polynomial half-degree", value: n, limit: MAX_N });
    }
    if d > MAX_D {
        return Err(Error::CapExceeded { what: "matrix size", value: d, limit: MAX_D });
    }
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter("n and d must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut zero_trials = 0;
    let mut witness = None;
    for _ in 0..trials {
        let xs: Vec<SquareMatrix<i64>> = (0..2 * n)
            .map(|_| (0..d).map(|_| (0..d).map(|_| rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND)).collect()).collect())
            .collect();
        let value = standard_polynomial(&xs);
        if value.iter().flatten().all(|&x| x == 0) {
            zero_trials += 1;
        } else if witness.is_none() {
            witness = Some((xs, value));
        }
    }
    Ok(StandardPolynomialReport { n, d, trials, expected_zero: d <= n, zero_trials, witness })
}
