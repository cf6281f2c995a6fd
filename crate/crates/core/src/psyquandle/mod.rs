//! Finite psyquandles as four operation tables.
//!
//! Elements are labeled `1..=n`. Entry `(j, k)` of a table is `x_j op x_k`.

mod axioms;
mod format;
mod search;

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

pub use axioms::{verify_biquandle, verify_psyquandle, AxiomFailure, AxiomReport};
pub use format::{emit_psy, parse_psy};
pub use search::{search, Search, SearchOptions, DEFAULT_SEARCH_BOUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    /// `▷̲`
    UnderTri,
    /// `▷̄`
    OverTri,
    /// `●̲`
    UnderDot,
    /// `●̄`
    OverDot,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::UnderTri, Op::OverTri, Op::UnderDot, Op::OverDot];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Op::UnderTri => "▷̲",
            Op::OverTri => "▷̄",
            Op::UnderDot => "●̲",
            Op::OverDot => "●̄",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Op::UnderTri => "under_tri",
            Op::OverTri => "over_tri",
            Op::UnderDot => "under_dot",
            Op::OverDot => "over_dot",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// Four `n x n` tables with entries in `1..=n`, unverified.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tables {
    n: usize,
    // 0-based values, row-major
    data: [Vec<u16>; 4],
}

impl Tables {
    /// `f(op, x, y)` gives `x op y`, all 1-based.
    pub fn from_fn(n: usize, f: impl Fn(Op, usize, usize) -> usize) -> Result<Self> {
        if n == 0 || n > u16::MAX as usize {
            return Err(Error::InvalidParameter(format!("order {n} out of range")));
        }
        let mut data: [Vec<u16>; 4] = Default::default();
        for op in Op::ALL {
            let mut t = Vec::with_capacity(n * n);
            for x in 1..=n {
                for y in 1..=n {
                    let v = f(op, x, y);
                    if v == 0 || v > n {
                        return Err(Error::OutOfRange {
                            table: op.name(),
                            row: x,
                            col: y,
                            value: v as i64,
                            n,
                        });
                    }
                    t.push((v - 1) as u16);
                }
            }
            data[op.index()] = t;
        }
        Ok(Tables { n, data })
    }

    /// From the `n x 4n` layout: blocks `▷̲ | ▷̄ | ●̲ | ●̄`.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != 4 * n {
                return Err(Error::InvalidParameter(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    r.len(),
                    4 * n
                )));
            }
            for (j, &v) in r.iter().enumerate() {
                if v < 1 || v as usize > n {
                    return Err(Error::OutOfRange {
                        table: Op::ALL[j / n].name(),
                        row: i + 1,
                        col: j % n + 1,
                        value: v,
                        n,
                    });
                }
            }
        }
        Tables::from_fn(n, |op, x, y| rows[x - 1][op.index() * n + y - 1] as usize)
    }

    /// Only the two biquandle tables; the dot tables copy them.
    pub fn biquandle(
        n: usize,
        under: impl Fn(usize, usize) -> usize,
        over: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        Tables::from_fn(n, |op, x, y| match op {
            Op::UnderTri | Op::UnderDot => under(x, y),
            Op::OverTri | Op::OverDot => over(x, y),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x op y` with 1-based labels.
    pub fn get(&self, op: Op, x: usize, y: usize) -> usize {
        self.at(op, x - 1, y - 1) + 1
    }

    /// `x op y` with 0-based labels.
    #[inline]
    pub fn at(&self, op: Op, x: usize, y: usize) -> usize {
        self.data[op.index()][x * self.n + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (1..=self.n)
            .map(|x| {
                Op::ALL
                    .iter()
                    .flat_map(|&op| (1..=self.n).map(move |y| (op, y)))
                    .map(|(op, y)| self.get(op, x, y))
                    .collect()
            })
            .collect()
    }

    /// Same tables with arguments swapped: `T'(x, y) = T(y, x)`.
    pub fn transposed(&self) -> Tables {
        Tables::from_fn(self.n, |op, x, y| self.get(op, y, x)).expect("same range")
    }

    pub fn with_entry(&self, op: Op, x: usize, y: usize, value: usize) -> Result<Tables> {
        Tables::from_fn(self.n, |o, a, b| {
            if (o, a, b) == (op, x, y) {
                value
            } else {
                self.get(o, a, b)
            }
        })
    }

    /// Diagonals of the two dot tables agree.
    pub fn is_pi_adequate(&self) -> bool {
        (0..self.n).all(|x| self.at(Op::UnderDot, x, x) == self.at(Op::OverDot, x, x))
    }
}

/// A psyquandle whose tables passed every axiom check.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinitePsyquandle {
    tables: Tables,
}

impl FinitePsyquandle {
    pub fn new(tables: Tables) -> Result<Self> {
        let report = verify_psyquandle(&tables);
        if report.passed() {
            Ok(FinitePsyquandle { tables })
        } else {
            Err(Error::Axioms(report))
        }
    }

    pub fn tables(&self) -> &Tables {
        &self.tables
    }

    pub fn order(&self) -> usize {
        self.tables.n
    }

    pub fn get(&self, op: Op, x: usize, y: usize) -> usize {
        self.tables.get(op, x, y)
    }

    pub fn is_pi_adequate(&self) -> bool {
        self.tables.is_pi_adequate()
    }

    pub fn trivial(n: usize) -> Result<Self> {
        FinitePsyquandle::new(Tables::from_fn(n, |_, x, _| x)?)
    }

    /// Dot operations copied from the biquandle: `+` keeps (▷̲, ▷̄), `-` swaps them.
    pub fn from_classical(b: &Tables, sign: Sign) -> Result<Self> {
        let report = verify_biquandle(b);
        if !report.passed() {
            return Err(Error::Axioms(report));
        }
        let t = Tables::from_fn(b.n, |op, x, y| match (op, sign) {
            (Op::UnderTri, _) | (Op::UnderDot, Sign::Positive) | (Op::OverDot, Sign::Negative) => {
                b.get(Op::UnderTri, x, y)
            }
            _ => b.get(Op::OverTri, x, y),
        })?;
        FinitePsyquandle::new(t)
    }

    /// `x ▷̲ y = x ▷̄ y = τ(x)` and `x ●̲ y = x ●̄ y = σ(x)`; permutations as image lists.
    pub fn constant_action(n: usize, sigma: &[usize], tau: &[usize]) -> Result<Self> {
        check_permutation(n, sigma, "sigma")?;
        check_permutation(n, tau, "tau")?;
        let inv = |p: &[usize]| {
            let mut q = vec![0; n];
            for (i, &v) in p.iter().enumerate() {
                q[v - 1] = i + 1;
            }
            q
        };
        let compose =
            |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&v| p[v - 1]).collect() };
        let (si, ti) = (inv(sigma), inv(tau));
        if compose(&si, tau) != compose(&ti, sigma) {
            return Err(Error::Precondition(
                "sigma^-1 tau = tau^-1 sigma does not hold".into(),
            ));
        }
        if compose(sigma, tau) != compose(tau, sigma) {
            return Err(Error::Precondition(
                "sigma tau = tau sigma does not hold".into(),
            ));
        }
        let t = Tables::from_fn(n, |op, x, _| match op {
            Op::UnderTri | Op::OverTri => tau[x - 1],
            Op::UnderDot | Op::OverDot => sigma[x - 1],
        })?;
        FinitePsyquandle::new(t)
    }

    /// Alexander psyquandle on `Z_m`; element `j` is the residue `j mod m`.
    pub fn alexander_mod(m: u64, s: i64, t: i64, a: i64, b: i64) -> Result<Self> {
        FinitePsyquandle::new(alexander_tables(m, s, t, a, b)?)
    }

    /// `X_p`: the dot operations equal the triangle ones (s=1, t=-1).
    pub fn x_p(p: u64) -> Result<Self> {
        FinitePsyquandle::alexander_mod(p, 1, -1, -1, 1)
    }

    /// `X'_p`: dot operations of the negative resolution (a=1, b=-1).
    pub fn x_p_prime(p: u64) -> Result<Self> {
        FinitePsyquandle::alexander_mod(p, 1, -1, 1, -1)
    }
}

impl fmt::Display for FinitePsyquandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_psy(&self.tables))
    }
}

fn check_permutation(n: usize, p: &[usize], name: &str) -> Result<()> {
    let mut seen = vec![false; n + 1];
    if p.len() != n
        || p.iter()
            .any(|&v| v == 0 || v > n || std::mem::replace(&mut seen[v], true))
    {
        return Err(Error::InvalidParameter(format!(
            "{name} is not a permutation of 1..{n}"
        )));
    }
    Ok(())
}

pub(crate) fn residue(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

/// Validated Alexander parameters reduced mod `m`.
pub(crate) fn alexander_params(m: u64, s: i64, t: i64, a: i64, b: i64) -> Result<[u64; 4]> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "modulus {m} must be at least 2"
        )));
    }
    let p = [s, t, a, b].map(|v| residue(v, m));
    for (name, v) in ["s", "t", "a", "b"].iter().zip(p) {
        if v.gcd(&m) != 1 {
            return Err(Error::InvalidParameter(format!(
                "{name} = {v} is not a unit mod {m}"
            )));
        }
    }
    if (p[0] + p[1]) % m != (p[2] + p[3]) % m {
        return Err(Error::InvalidParameter(format!("s + t != a + b mod {m}")));
    }
    Ok(p)
}

pub fn alexander_tables(m: u64, s: i64, t: i64, a: i64, b: i64) -> Result<Tables> {
    let [s, t, a, b] = alexander_params(m, s, t, a, b)?;
    let lin = |c: u64, d: u64, x: usize, y: usize| -> usize {
        let (x, y) = (x as u64 % m, y as u64 % m);
        let v = (c * x + d * y) % m;
        if v == 0 {
            m as usize
        } else {
            v as usize
        }
    };
    let neg = |v: u64| (m - v) % m;
    Tables::from_fn(m as usize, |op, x, y| match op {
        Op::UnderTri => lin(t, (s + neg(t)) % m, x, y),
        Op::OverTri => lin(s, 0, x, y),
        Op::UnderDot => lin(a, (s + neg(a)) % m, x, y),
        Op::OverDot => lin(b, (s + neg(b)) % m, x, y),
    })
}

/// Parses a permutation of `1..=n` in cycle notation, e.g. `(12)(34)` or `(1 2)(3,4)`.
/// Single-digit labels may be written without separators.
pub fn parse_permutation(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = (1..=n).collect();
    let bad = || Error::InvalidParameter(format!("bad permutation `{text}`"));
    let mut rest = text.trim();
    if rest.is_empty() || rest == "()" || rest == "id" {
        return Ok(p);
    }
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let end = body.find(')').ok_or_else(bad)?;
        let inner = &body[..end];
        rest = body[end + 1..].trim_start();
        let labels: Vec<usize> = if inner.contains([' ', ',']) {
            inner
                .split([' ', ','])
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            inner
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        if labels.iter().any(|&l| l == 0 || l > n) {
            return Err(bad());
        }
        // cycles compose right to left
        let mut cyc: Vec<usize> = (1..=n).collect();
        for (i, &l) in labels.iter().enumerate() {
            cyc[l - 1] = labels[(i + 1) % labels.len()];
        }
        p = (0..n).map(|v| p[cyc[v] - 1]).collect();
    }
    check_permutation(n, &p, "permutation")?;
    Ok(p)
}
