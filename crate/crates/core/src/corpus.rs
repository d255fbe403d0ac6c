//! The fixed list of groups the scans and acceptance checks run over.
//! Every entry has order at most 512.

use crate::families::FamilyExpression;

pub const CORPUS_MAX_ORDER: u128 = 512;

/// `(p, n)` for the reduced Heisenberg groups checked against the closed
/// form `{(1, p^2n), (p, p^(2n-1) - p^(2n-2))}`.
pub const HEISENBERG_CASES: [(u64, u32); 7] = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)];

/// Groups with centre of index 4.
pub fn center_index_four() -> Vec<FamilyExpression> {
    use FamilyExpression::*;
    vec![
        Dihedral(4),
        Quaternion,
        ReducedHeisenberg(2, 1),
        FamilyExpression::product(Dihedral(4), Cyclic(3)),
        FamilyExpression::product(Quaternion, Cyclic(5)),
    ]
}

/// Groups whose degrees are exactly `{1, d}`.
pub fn two_degree_groups() -> Vec<FamilyExpression> {
    use FamilyExpression::*;
    let mut out = vec![Symmetric(3)];
    out.extend([3, 5, 7, 9].map(Dihedral));
    out.push(Quaternion);
    out.push(Dihedral(4));
    out.extend(HEISENBERG_CASES.map(|(p, n)| ReducedHeisenberg(p, n)));
    out
}

/// Groups on which the Fourier-analysis suites run.
pub fn fourier_groups() -> Vec<FamilyExpression> {
    use FamilyExpression::*;
    vec![Symmetric(3), Dihedral(4), Quaternion, ReducedHeisenberg(3, 1), ReducedHeisenberg(2, 2)]
}

pub fn standard_corpus() -> Vec<FamilyExpression> {
    use FamilyExpression::*;
    let p = FamilyExpression::product;
    let mut out: Vec<FamilyExpression> = [1, 2, 3, 4, 5, 6, 7, 8, 12, 16, 30].map(Cyclic).to_vec();
    out.extend((3..=12).map(Dihedral));
    out.extend([16, 25].map(Dihedral));
    out.push(Quaternion);
    out.extend((2..=8).map(Heisenberg));
    out.extend(HEISENBERG_CASES.map(|(p, n)| ReducedHeisenberg(p, n)));
    out.push(ReducedHeisenberg(2, 4));
    out.extend([Symmetric(3), Symmetric(4)]);
    out.extend([
        p(Cyclic(2), Cyclic(2)),
        p(p(Cyclic(2), Cyclic(2)), Cyclic(2)),
        p(Dihedral(4), Cyclic(3)),
        p(Quaternion, Cyclic(5)),
        p(Quaternion, Quaternion),
        p(Dihedral(3), Dihedral(3)),
        p(Quaternion, Dihedral(4)),
        p(Dihedral(5), Cyclic(4)),
        p(ReducedHeisenberg(3, 1), Cyclic(2)),
        p(ReducedHeisenberg(2, 1), Dihedral(3)),
        p(Dihedral(4), Dihedral(4)),
        p(Heisenberg(3), Cyclic(3)),
    ]);
    debug_assert!(out.iter().all(|e| e.order() <= CORPUS_MAX_ORDER));
    out
}

/// Ten `(G, H)` pairs for the product identities.
pub fn product_pairs() -> Vec<(FamilyExpression, FamilyExpression)> {
    use FamilyExpression::*;
    vec![
        (Symmetric(3), Cyclic(4)),
        (Quaternion, Quaternion),
        (Cyclic(1), Dihedral(5)),
        (Dihedral(4), Cyclic(3)),
        (Quaternion, Cyclic(5)),
        (ReducedHeisenberg(3, 1), Cyclic(2)),
        (Dihedral(3), Dihedral(3)),
        (Quaternion, Dihedral(4)),
        (Dihedral(5), ReducedHeisenberg(2, 1)),
        (Heisenberg(3), Cyclic(6)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_within_bounds_and_distinct() {
        let c = standard_corpus();
        assert!(c.iter().all(|e| e.order() <= CORPUS_MAX_ORDER));
        let names: std::collections::BTreeSet<String> = c.iter().map(|e| e.to_string()).collect();
        assert_eq!(names.len(), c.len());
        for e in center_index_four().iter().chain(&two_degree_groups()).chain(&fourier_groups()) {
            assert!(e.order() <= CORPUS_MAX_ORDER);
        }
        assert_eq!(product_pairs().len(), 10);
    }
}
