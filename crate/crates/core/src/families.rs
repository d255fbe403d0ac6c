//! Example groups built directly from their multiplication laws, and the
//! small expression language used to name them (`"D(4)xC(3)"`, `"Hr(3,2)"`).

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group::{direct_product_capped, FiniteGroup, DEFAULT_MAX_ORDER};

/// A group named by formula. Products associate to the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyExpression {
    /// `C(n)`, cyclic of order `n`.
    Cyclic(u64),
    /// `D(n)`, dihedral of order `2n`.
    Dihedral(u64),
    /// `Q8`.
    Quaternion,
    /// `H(m)`, Heisenberg group over `Z/mZ`.
    Heisenberg(u64),
    /// `Hr(p,n)`, reduced Heisenberg group over `Z/p^nZ`.
    ReducedHeisenberg(u64, u32),
    /// Symmetric group on `n` letters. Library-only; not part of the grammar.
    Symmetric(u64),
    Product(Box<FamilyExpression>, Box<FamilyExpression>),
}

impl FamilyExpression {
    pub fn product(a: FamilyExpression, b: FamilyExpression) -> Self {
        Self::Product(Box::new(a), Box::new(b))
    }

    /// Group order, computed without building anything.
    pub fn order(&self) -> u128 {
        match *self {
            Self::Cyclic(n) => n as u128,
            Self::Dihedral(n) => 2 * n as u128,
            Self::Quaternion => 8,
            Self::Heisenberg(m) => (m as u128).pow(3),
            Self::ReducedHeisenberg(p, n) => (p as u128).pow(2 * n + 1),
            Self::Symmetric(n) => (1..=n as u128).product(),
            Self::Product(ref a, ref b) => a.order().saturating_mul(b.order()),
        }
    }

    fn validate(&self, max_order: usize) -> Result<()> {
        match *self {
            Self::Cyclic(n) | Self::Dihedral(n) if n < 1 => {
                return Err(Error::InvalidParameter(format!("{self}: parameter must be at least 1")))
            }
            Self::Heisenberg(m) if m < 2 => {
                return Err(Error::InvalidParameter(format!("{self}: m must be at least 2")))
            }
            Self::ReducedHeisenberg(p, n) => {
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                if n < 1 {
                    return Err(Error::InvalidParameter(format!("{self}: n must be at least 1")));
                }
            }
            Self::Symmetric(n) if n < 1 => {
                return Err(Error::InvalidParameter(format!("{self}: n must be at least 1")))
            }
            Self::Product(ref a, ref b) => {
                a.validate(max_order)?;
                b.validate(max_order)?;
            }
            _ => {}
        }
        let order = self.order();
        if order > max_order as u128 {
            return Err(Error::Overflow { order, cap: max_order });
        }
        Ok(())
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_capped(DEFAULT_MAX_ORDER)
    }

    pub fn build_capped(&self, max_order: usize) -> Result<FiniteGroup> {
        self.validate(max_order)?;
        match *self {
            Self::Cyclic(n) => Ok(cyclic_table(n as usize)),
            Self::Dihedral(n) => Ok(dihedral_table(n as usize)),
            Self::Quaternion => Ok(quaternion_table()),
            Self::Heisenberg(m) => Ok(heisenberg_table(m as usize)),
            Self::ReducedHeisenberg(p, n) => Ok(reduced_heisenberg_table(p as usize, n)),
            Self::Symmetric(n) => Ok(symmetric_table(n as usize)),
            Self::Product(ref a, ref b) => {
                direct_product_capped(&a.build_capped(max_order)?, &b.build_capped(max_order)?, max_order)
            }
        }
    }

    /// Atoms of a left-associated product, in order.
    pub fn factors(&self) -> Vec<&FamilyExpression> {
        match self {
            Self::Product(a, b) => {
                let mut f = a.factors();
                f.extend(b.factors());
                f
            }
            atom => vec![atom],
        }
    }
}

impl fmt::Display for FamilyExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(n) => write!(f, "C({n})"),
            Self::Dihedral(n) => write!(f, "D({n})"),
            Self::Quaternion => write!(f, "Q8"),
            Self::Heisenberg(m) => write!(f, "H({m})"),
            Self::ReducedHeisenberg(p, n) => write!(f, "Hr({p},{n})"),
            Self::Symmetric(n) => write!(f, "S({n})"),
            Self::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn cyclic(n: u64) -> Result<FiniteGroup> {
    FamilyExpression::Cyclic(n).build()
}

pub fn dihedral(n: u64) -> Result<FiniteGroup> {
    FamilyExpression::Dihedral(n).build()
}

pub fn quaternion() -> FiniteGroup {
    quaternion_table()
}

pub fn heisenberg(m: u64) -> Result<FiniteGroup> {
    FamilyExpression::Heisenberg(m).build()
}

pub fn reduced_heisenberg(p: u64, n: u32) -> Result<FiniteGroup> {
    FamilyExpression::ReducedHeisenberg(p, n).build()
}

pub fn symmetric(n: u64) -> Result<FiniteGroup> {
    FamilyExpression::Symmetric(n).build()
}

fn from_law(order: usize, law: impl Fn(usize, usize) -> usize, label: impl Fn(usize) -> String) -> FiniteGroup {
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(law(a, b) as u32);
        }
    }
    let labels = (0..order).map(label).collect();
    FiniteGroup::from_flat_unchecked(order, table, Some(labels)).expect("family law defines a group")
}

fn cyclic_table(n: usize) -> FiniteGroup {
    from_law(n, |a, b| (a + b) % n, |a| a.to_string())
}

/// Element `r^k s^e` is encoded as `k + n*e`.
fn dihedral_table(n: usize) -> FiniteGroup {
    from_law(
        2 * n,
        |a, b| {
            let (ka, ea) = (a % n, a / n);
            let (kb, eb) = (b % n, b / n);
            let k = if ea == 0 { (ka + kb) % n } else { (ka + n - kb) % n };
            k + n * ((ea + eb) % 2)
        },
        |a| match (a % n, a / n) {
            (0, 0) => "e".into(),
            (0, _) => "s".into(),
            (k, 0) => format!("r^{k}"),
            (k, _) => format!("r^{k}s"),
        },
    )
}

/// Index `2u + s` stands for `(-1)^s * unit[u]` with units `1, i, j, k`.
fn quaternion_table() -> FiniteGroup {
    // unit products as (sign flip, unit)
    const UNIT_MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    const NAMES: [&str; 4] = ["1", "i", "j", "k"];
    from_law(
        8,
        |a, b| {
            let (s, u) = UNIT_MUL[a / 2][b / 2];
            2 * u + (s + a % 2 + b % 2) % 2
        },
        |a| format!("{}{}", if a % 2 == 1 { "-" } else { "" }, NAMES[a / 2]),
    )
}

/// `(x, y, z)` is encoded as `(x*m + y)*m + z`.
fn heisenberg_table(m: usize) -> FiniteGroup {
    let split = |a: usize| (a / (m * m), (a / m) % m, a % m);
    from_law(
        m * m * m,
        |a, b| {
            let (x, y, z) = split(a);
            let (x2, y2, z2) = split(b);
            (((x + x2) % m) * m + (y + y2) % m) * m + (z + x * y2 + z2) % m
        },
        |a| {
            let (x, y, z) = split(a);
            format!("({x},{y},{z})")
        },
    )
}

/// `(x, y, [z])` with `x, y` mod `p^n` and `z` mod `p`, encoded as
/// `(x*p^n + y)*p + z`.
fn reduced_heisenberg_table(p: usize, n: u32) -> FiniteGroup {
    let q = p.pow(n);
    let split = |a: usize| (a / (q * p), (a / p) % q, a % p);
    from_law(
        q * q * p,
        |a, b| {
            let (x, y, z) = split(a);
            let (x2, y2, z2) = split(b);
            (((x + x2) % q) * q + (y + y2) % q) * p + (z + x * y2 + z2) % p
        },
        |a| {
            let (x, y, z) = split(a);
            format!("({x},{y},[{z}])")
        },
    )
}

/// Permutations of `0..n` in lexicographic order; `(a*b)(i) = a(b(i))`.
fn symmetric_table(n: usize) -> FiniteGroup {
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("permutation");
    let order = perms.len();
    let mut table = Vec::with_capacity(order * order);
    let mut buf = vec![0; n];
    for a in &perms {
        for b in &perms {
            for i in 0..n {
                buf[i] = a[b[i]];
            }
            table.push(index(&buf) as u32);
        }
    }
    let labels = perms.iter().map(|p| format!("{p:?}")).collect();
    FiniteGroup::from_flat_unchecked(order, table, Some(labels)).expect("symmetric group")
}

/// Parses `atom (x atom)*`, ignoring whitespace.
pub fn parse_family_expression(expr: &str) -> Result<FamilyExpression> {
    let chars: Vec<(usize, char)> = expr.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut parser = Parser { chars, pos: 0, end: expr.len() };
    let mut acc = parser.atom()?;
    while parser.peek().is_some() {
        parser.expect('x')?;
        let rhs = parser.atom()?;
        acc = FamilyExpression::product(acc, rhs);
    }
    Ok(acc)
}

/// Parses and builds a family expression.
pub fn parse_family(expr: &str) -> Result<FiniteGroup> {
    parse_family_expression(expr)?.build()
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.fail(format!("expected '{c}', found '{d}'")),
            None => self.fail(format!("expected '{c}', found end of input")),
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        digits.parse().or_else(|_| {
            self.pos = start;
            self.fail("number too large")
        })
    }

    fn args(&mut self, count: usize) -> Result<Vec<u64>> {
        self.expect('(')?;
        let mut out = vec![self.number()?];
        while out.len() < count {
            self.expect(',')?;
            out.push(self.number()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn atom(&mut self) -> Result<FamilyExpression> {
        match self.peek() {
            Some('C') => {
                self.pos += 1;
                Ok(FamilyExpression::Cyclic(self.args(1)?[0]))
            }
            Some('D') => {
                self.pos += 1;
                Ok(FamilyExpression::Dihedral(self.args(1)?[0]))
            }
            Some('Q') => {
                self.pos += 1;
                self.expect('8')?;
                Ok(FamilyExpression::Quaternion)
            }
            Some('H') => {
                self.pos += 1;
                if self.peek() == Some('r') {
                    self.pos += 1;
                    let at = self.offset();
                    let a = self.args(2)?;
                    let n = u32::try_from(a[1])
                        .map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
                    Ok(FamilyExpression::ReducedHeisenberg(a[0], n))
                } else {
                    Ok(FamilyExpression::Heisenberg(self.args(1)?[0]))
                }
            }
            Some(c) => self.fail(format!("unknown atom starting with '{c}'")),
            None => self.fail("expected an atom"),
        }
    }
}
