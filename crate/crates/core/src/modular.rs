//! Arithmetic in a prime field F_q (q < 2^31): scalars, dense matrices and
//! univariate polynomials, with root finding by distinct-degree and
//! equal-degree splitting.

use rand::Rng;

use crate::families::is_prime;

/// Smallest prime `q` with `q ≡ 1 (mod modulus)` and `q > lower`, searched
/// below 2^31.
pub fn admissible_prime(modulus: u64, lower: u64) -> Option<u64> {
    let limit = 1u64 << 31;
    let mut q = (lower / modulus) * modulus + 1;
    while q < limit {
        if q > lower && is_prime(q) {
            return Some(q);
        }
        q += modulus;
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Self {
        debug_assert!(q < (1 << 31));
        Self { q }
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    #[inline]
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.q
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.q;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a non-zero element.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.q));
        self.pow(a, self.q - 2)
    }

    // ---- polynomials: coefficient vectors, lowest degree first, no trailing zeros

    fn trim(p: &mut Vec<u64>) {
        while p.last() == Some(&0) {
            p.pop();
        }
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Self::trim(&mut out);
        out
    }

    /// Remainder of `a` modulo a non-zero `m`.
    pub fn poly_rem(&self, a: &[u64], m: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        Self::trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = self.inv(m[dm]);
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let c = self.mul(*r.last().unwrap(), lead_inv);
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = self.sub(r[shift + i], self.mul(c, mi));
            }
            Self::trim(&mut r);
        }
        r
    }

    /// Exact quotient of `a` by non-zero `m` (remainder discarded).
    pub fn poly_div(&self, a: &[u64], m: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        Self::trim(&mut r);
        let dm = m.len() - 1;
        if r.len() <= dm {
            return Vec::new();
        }
        let mut quot = vec![0u64; r.len() - dm];
        let lead_inv = self.inv(m[dm]);
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let c = self.mul(*r.last().unwrap(), lead_inv);
            quot[shift] = c;
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = self.sub(r[shift + i], self.mul(c, mi));
            }
            Self::trim(&mut r);
        }
        Self::trim(&mut quot);
        quot
    }

    /// Monic gcd.
    pub fn poly_gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        Self::trim(&mut a);
        Self::trim(&mut b);
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        if let Some(&lead) = a.last() {
            let li = self.inv(lead);
            for c in a.iter_mut() {
                *c = self.mul(*c, li);
            }
        }
        a
    }

    /// `base^e mod m`.
    pub fn poly_pow_mod(&self, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut acc = self.poly_rem(&[1], m);
        let mut b = self.poly_rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_rem(&self.poly_mul(&acc, &b), m);
            }
            b = self.poly_rem(&self.poly_mul(&b, &b), m);
            e >>= 1;
        }
        acc
    }

    pub fn poly_eval(&self, p: &[u64], x: u64) -> u64 {
        p.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// The distinct roots of `p` lying in F_q, sorted ascending.
    pub fn poly_roots<R: Rng>(&self, p: &[u64], rng: &mut R) -> Vec<u64> {
        let mut p = p.to_vec();
        Self::trim(&mut p);
        if p.len() <= 1 {
            return Vec::new();
        }
        // product of the distinct linear factors: gcd(p, x^q - x)
        let xq = self.poly_pow_mod(&[0, 1], self.q, &p);
        let mut xq_minus_x = xq;
        xq_minus_x.resize(xq_minus_x.len().max(2), 0);
        xq_minus_x[1] = self.sub(xq_minus_x[1], 1);
        Self::trim(&mut xq_minus_x);
        let g = self.poly_gcd(&p, &xq_minus_x);
        let mut roots = Vec::new();
        self.split_linear(g, rng, &mut roots);
        roots.sort_unstable();
        roots
    }

    /// Equal-degree splitting of a squarefree product of linear factors.
    fn split_linear<R: Rng>(&self, f: Vec<u64>, rng: &mut R, out: &mut Vec<u64>) {
        match f.len() {
            0 | 1 => {}
            2 => out.push(self.mul(self.neg(f[0]), self.inv(f[1]))),
            _ => {
                if self.q == 2 {
                    // f divides x(x+1); both roots present
                    out.extend([0, 1]);
                    return;
                }
                loop {
                    let a = rng.random_range(0..self.q);
                    let mut h = self.poly_pow_mod(&[a, 1], (self.q - 1) / 2, &f);
                    if h.is_empty() {
                        h.push(0);
                    }
                    h[0] = self.sub(h[0], 1);
                    Self::trim(&mut h);
                    let d = self.poly_gcd(&f, &h);
                    if d.len() > 1 && d.len() < f.len() {
                        let rest = self.poly_div(&f, &d);
                        self.split_linear(d, rng, out);
                        self.split_linear(rest, rng, out);
                        return;
                    }
                }
            }
        }
    }

    // ---- dense matrices (row-major Vec<Vec<u64>>)

    /// Characteristic polynomial `det(xI - A)` via reduction to upper
    /// Hessenberg form.
    pub fn charpoly(&self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h: Vec<Vec<u64>> = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
            if piv != m {
                h.swap(piv, m);
                for row in h.iter_mut() {
                    row.swap(piv, m);
                }
            }
            let inv = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let u = self.mul(h[i][m - 1], inv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = self.mul(u, h[m][j]);
                    h[i][j] = self.sub(h[i][j], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[m] = self.add(row[m], t);
                }
            }
        }
        // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let mut next = self.poly_mul(&polys[k], &[self.neg(h[k][k]), 1]);
            let mut prod = 1u64;
            for i in (0..k).rev() {
                prod = self.mul(prod, h[i + 1][i]);
                if prod == 0 {
                    break;
                }
                let c = self.mul(h[i][k], prod);
                for (d, &coef) in polys[i].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(c, coef));
                }
            }
            Self::trim(&mut next);
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    /// Basis (as row vectors) of the right null space `{v : A v = 0}`.
    pub fn nullspace(&self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let rows = a.len();
        if rows == 0 {
            return Vec::new();
        }
        let cols = a[0].len();
        let mut m: Vec<Vec<u64>> = a.to_vec();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, p);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = self.neg(m[i][f]);
                }
                v
            })
            .collect()
    }

    /// Reduced row echelon form of a set of row vectors; returns the non-zero
    /// rows and their pivot columns.
    pub fn row_reduce(&self, mut rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
        if rows.is_empty() {
            return (rows, Vec::new());
        }
        let cols = rows[0].len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, p);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (rows, pivots)
    }
}
