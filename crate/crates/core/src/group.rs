//! Finite groups as dense Cayley tables, plus the structural subobjects the
//! rest of the engine needs: center, commutator subgroup, conjugacy classes,
//! quotients and direct products.

use std::collections::VecDeque;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on group order accepted by constructors.
pub const DEFAULT_MAX_ORDER: usize = 1 << 20;

/// Groups up to this order get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 512;

const RANDOM_ASSOCIATIVITY_TRIALS: usize = 100_000;

/// A finite group given by its full multiplication table over element
/// indices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a Cayley table and derives identity and inverses from it.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > DEFAULT_MAX_ORDER {
            return Err(Error::Overflow { order: n as u128, cap: DEFAULT_MAX_ORDER });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has length {} but the table has {n} rows",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::NotAGroup(format!("entry ({i},{j}) = {v} is out of range")));
                }
                flat.push(v as u32);
            }
        }
        let group = Self::from_flat_unchecked(n, flat, labels)?;
        group.check_associative()?;
        Ok(group)
    }

    /// Builds a group from a table that is associative by construction.
    /// Identity and inverses are still derived and checked.
    pub(crate) fn from_flat_unchecked(
        order: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::NotAGroup(format!(
                    "{} labels given for a group of order {order}",
                    l.len()
                )));
            }
        }
        let at = |i: usize, j: usize| table[i * order + j] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| at(e, j) == j && at(j, e) == j))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity element".into()))?;
        let mut inverses = vec![usize::MAX; order];
        for i in 0..order {
            let j = (0..order)
                .find(|&j| at(i, j) == identity)
                .filter(|&j| at(j, i) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {i} has no inverse")))?;
            inverses[i] = j;
        }
        Ok(Self { order, table, identity, inverses, labels })
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let check = |i: usize, j: usize, k: usize| -> Result<()> {
            if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)) {
                return Err(Error::NotAGroup(format!(
                    "associativity fails on the triple ({i}, {j}, {k})"
                )));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        check(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_a550c);
            for _ in 0..RANDOM_ASSOCIATIVITY_TRIALS {
                check(rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n))?;
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Row-major copy of the multiplication table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }

    /// `a^k` for `k >= 0`.
    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g^-1 h^-1 g h`.
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.elements().fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// The center `{z : zg = gz for all g}`.
    pub fn center(&self) -> Subgroup {
        let members = self
            .elements()
            .filter(|&z| self.elements().all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup::from_sorted(self.order, members)
    }

    /// Subgroup generated by all commutators `[g, h]`.
    pub fn commutator_subgroup(&self) -> Subgroup {
        let mut seen = vec![false; self.order];
        let mut gens = Vec::new();
        for g in self.elements() {
            for h in self.elements() {
                let c = self.commutator(g, h);
                if !seen[c] {
                    seen[c] = true;
                    gens.push(c);
                }
            }
        }
        self.subgroup_generated(&gens)
    }

    /// Closure of `gens` under multiplication. Inverses come for free in a
    /// finite group.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut members = vec![self.identity];
        let mut queue = VecDeque::from([self.identity]);
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != self.identity).collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup::from_sorted(self.order, members)
    }

    /// Conjugacy classes ordered by (size, smallest member); the identity
    /// class is always first.
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for g in 0..n {
                let y = self.conjugate(g, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    class.push(y);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        // identity is the unique smallest-size class with the smallest member
        // only when identity == 0; enforce it explicitly.
        if let Some(pos) = classes.iter().position(|c| c == &[self.identity]) {
            let id_class = classes.remove(pos);
            classes.insert(0, id_class);
        }
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = i;
            }
        }
        ConjugacyClasses { classes, class_of }
    }

    pub fn is_normal(&self, n: &Subgroup) -> Result<()> {
        for g in self.elements() {
            for &x in n.members() {
                if !n.contains(self.conjugate(g, x)) {
                    return Err(Error::NotNormal { g, n: x });
                }
            }
        }
        Ok(())
    }

    /// The group of cosets `G/N` together with the quotient map.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
        self.is_normal(n)?;
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &x in n.members() {
                coset_of[self.mul(g, x)] = id;
            }
        }
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)] as u32);
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|_| reps.iter().map(|&r| format!("{}N", self.label(r))).collect());
        let q = FiniteGroup::from_flat_unchecked(m, table, labels)?;
        for a in self.elements() {
            for b in self.elements() {
                if coset_of[self.mul(a, b)] != q.mul(coset_of[a], coset_of[b]) {
                    return Err(Error::Inconsistent(format!(
                        "quotient map fails to be a homomorphism on ({a}, {b})"
                    )));
                }
            }
        }
        Ok((q, coset_of))
    }

    /// The subgroup as a group in its own right. Element `i` of the result is
    /// `sub.members()[i]`.
    pub fn subgroup_as_group(&self, sub: &Subgroup) -> FiniteGroup {
        let members = sub.members();
        let m = members.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in members {
            for &b in members {
                let idx = sub.index_of(self.mul(a, b)).expect("subgroup is closed");
                table.push(idx as u32);
            }
        }
        let labels = self.labels.as_ref().map(|l| members.iter().map(|&x| l[x].clone()).collect());
        FiniteGroup::from_flat_unchecked(m, table, labels).expect("a subgroup is a group")
    }

    /// Relabels elements by `perm` (old index `i` becomes `perm[i]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::InvalidParameter("permutation length differs from order".into()));
        }
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)] as u32;
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for i in 0..n {
                out[perm[i]] = l[i].clone();
            }
            out
        });
        FiniteGroup::from_flat_unchecked(n, table, labels)
    }
}

/// `G x H` with the pair `(i, j)` encoded as `i * |H| + j`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_capped(g, h, DEFAULT_MAX_ORDER)
}

pub fn direct_product_capped(g: &FiniteGroup, h: &FiniteGroup, max_order: usize) -> Result<FiniteGroup> {
    let order = g.order as u128 * h.order as u128;
    if order > max_order as u128 {
        return Err(Error::Overflow { order, cap: max_order });
    }
    let (n, m) = (g.order, h.order);
    let order = n * m;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (a1, a2) = (a / m, a % m);
        for b in 0..order {
            let (b1, b2) = (b / m, b % m);
            table.push((g.mul(a1, b1) * m + h.mul(a2, b2)) as u32);
        }
    }
    let labels = if g.labels.is_some() || h.labels.is_some() {
        Some(
            (0..order)
                .map(|a| format!("({}, {})", g.label(a / m), h.label(a % m)))
                .collect(),
        )
    } else {
        None
    };
    FiniteGroup::from_flat_unchecked(order, table, labels)
}

/// A subgroup, stored as the sorted list of its member indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<usize>,
}

impl Subgroup {
    fn from_sorted(parent_order: usize, members: Vec<usize>) -> Self {
        Self { parent_order, members }
    }

    /// Checks closure before accepting an arbitrary member list.
    pub fn new(parent: &FiniteGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&x| x >= parent.order()) {
            return Err(Error::InvalidParameter("subgroup member out of range".into()));
        }
        let sub = Self::from_sorted(parent.order(), members);
        if !sub.contains(parent.identity()) {
            return Err(Error::InvalidParameter("subgroup must contain the identity".into()));
        }
        for &a in sub.members() {
            if !sub.contains(parent.inv(a)) {
                return Err(Error::InvalidParameter(format!("not closed under inverse at {a}")));
            }
            for &b in sub.members() {
                if !sub.contains(parent.mul(a, b)) {
                    return Err(Error::InvalidParameter(format!(
                        "not closed under multiplication at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(sub)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn index(&self) -> usize {
        self.parent_order / self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }
}

/// Partition of a group into conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }
}

/// On-disk Cayley table: `{"order": n, "table": [[...]], "labels": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CayleyFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl CayleyFile {
    pub fn from_group(g: &FiniteGroup) -> Self {
        Self { order: g.order(), table: g.table_rows(), labels: g.labels.clone() }
    }

    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::NotAGroup(format!(
                "declared order {} but table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        FiniteGroup::from_table(self.table, self.labels)
    }
}

pub fn parse_cayley_json(text: &str) -> Result<FiniteGroup> {
    let file: CayleyFile =
        serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
    file.into_group()
}

pub fn read_cayley_file(path: &std::path::Path) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_cayley_json(&text)
}
