//! Psyquandle colorings of diagrams and the counting invariant.
//!
//! A coloring is indexed by semiarc `1..=semiarc_count`, followed by one slot
//! per crossing-free component. Colors are 1-based.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::diagram::{CrossingKind, Diagram};
use crate::error::{Error, Result};
use crate::linalg::{is_prime, rank_mod_p};
use crate::psyquandle::{alexander_params, FinitePsyquandle, Op, Tables};

pub type Coloring = Vec<usize>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomSet {
    /// Sorted lexicographically, no duplicates.
    pub colorings: Vec<Coloring>,
}

impl HomSet {
    pub fn count(&self) -> usize {
        self.colorings.len()
    }

    pub fn intersection(&self, other: &HomSet) -> HomSet {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.colorings, &other.colorings);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        HomSet { colorings: out }
    }
}

const NONE: u16 = u16::MAX;

struct Constraint {
    ids: [usize; 4],
    tuples: Vec<[u16; 4]>,
}

struct Engine {
    n: usize,
    slots: usize,
    constraints: Vec<Constraint>,
    adjacent: Vec<Vec<usize>>,
}

fn check_applicable(d: &Diagram, p: &FinitePsyquandle) -> Result<()> {
    d.require_unmixed()?;
    if d.precrossing_count() > 0 && !p.is_pi_adequate() {
        return Err(Error::NotPiAdequate);
    }
    Ok(())
}

impl Engine {
    fn new(d: &Diagram, t: &Tables) -> Engine {
        let n = t.order();
        let slots = d.semiarc_count();
        let mut constraints = Vec::with_capacity(d.crossings().len());
        let mut adjacent = vec![Vec::new(); slots];
        for (ci, c) in d.crossings().iter().enumerate() {
            let ids = c.ends().map(|e| e as usize - 1);
            let rels = c.slot_relations();
            let mut tuples = Vec::with_capacity(n * n);
            for il in 0..n {
                for ol in 0..n {
                    let mut v = [NONE; 4];
                    v[0] = il as u16;
                    v[2] = ol as u16;
                    for (target, left, op, right) in rels {
                        v[target] = t.at(op, v[left] as usize, v[right] as usize) as u16;
                    }
                    // repeated ids within one crossing must agree
                    let consistent =
                        (0..4).all(|a| (0..4).all(|b| ids[a] != ids[b] || v[a] == v[b]));
                    if consistent {
                        tuples.push(v);
                    }
                }
            }
            for &id in &ids {
                if !adjacent[id].contains(&ci) {
                    adjacent[id].push(ci);
                }
            }
            constraints.push(Constraint { ids, tuples });
        }
        Engine {
            n,
            slots,
            constraints,
            adjacent,
        }
    }

    fn propagate(&self, a: &mut [u16], seed: impl IntoIterator<Item = usize>) -> bool {
        let mut queued = vec![false; self.constraints.len()];
        let mut work = VecDeque::new();
        for c in seed {
            if !queued[c] {
                queued[c] = true;
                work.push_back(c);
            }
        }
        while let Some(ci) = work.pop_front() {
            queued[ci] = false;
            let c = &self.constraints[ci];
            let mut agreed = [NONE; 4];
            let mut conflict = [false; 4];
            let mut any = false;
            for tup in &c.tuples {
                if (0..4).any(|k| a[c.ids[k]] != NONE && a[c.ids[k]] != tup[k]) {
                    continue;
                }
                if !any {
                    agreed = *tup;
                    any = true;
                } else {
                    for k in 0..4 {
                        if agreed[k] != tup[k] {
                            conflict[k] = true;
                        }
                    }
                }
            }
            if !any {
                return false;
            }
            for k in 0..4 {
                let id = c.ids[k];
                if a[id] == NONE && !conflict[k] {
                    a[id] = agreed[k];
                    for &nb in &self.adjacent[id] {
                        if !queued[nb] {
                            queued[nb] = true;
                            work.push_back(nb);
                        }
                    }
                }
            }
        }
        true
    }

    fn search(&self, a: Vec<u16>, out: &mut Vec<Vec<u16>>, count: &mut u64, collect: bool) {
        let Some(free) = a.iter().position(|&v| v == NONE) else {
            *count += 1;
            if collect {
                out.push(a);
            }
            return;
        };
        for v in 0..self.n {
            let mut b = a.clone();
            b[free] = v as u16;
            if self.propagate(&mut b, self.adjacent[free].iter().copied()) {
                self.search(b, out, count, collect);
            }
        }
    }

    /// Colorings of the crossing semiarcs; the root branch runs in parallel.
    fn run(&self, collect: bool) -> (Vec<Vec<u16>>, u64) {
        let mut root = vec![NONE; self.slots];
        if !self.propagate(&mut root, 0..self.constraints.len()) {
            return (Vec::new(), 0);
        }
        let Some(free) = root.iter().position(|&v| v == NONE) else {
            return (if collect { vec![root] } else { Vec::new() }, 1);
        };
        let parts: Vec<(Vec<Vec<u16>>, u64)> = (0..self.n)
            .into_par_iter()
            .map(|v| {
                let mut b = root.clone();
                b[free] = v as u16;
                let mut out = Vec::new();
                let mut count = 0;
                if self.propagate(&mut b, self.adjacent[free].iter().copied()) {
                    self.search(b, &mut out, &mut count, collect);
                }
                (out, count)
            })
            .collect();
        let mut all = Vec::new();
        let mut total = 0;
        for (o, c) in parts {
            all.extend(o);
            total += c;
        }
        (all, total)
    }
}

pub fn enumerate_colorings(d: &Diagram, p: &FinitePsyquandle) -> Result<HomSet> {
    check_applicable(d, p)?;
    let engine = Engine::new(d, p.tables());
    let (base, _) = engine.run(true);
    let n = p.order();
    let mut colorings: Vec<Coloring> = base
        .into_iter()
        .map(|c| c.into_iter().map(|v| v as usize + 1).collect())
        .collect();
    for _ in 0..d.closed_components() {
        colorings = colorings
            .into_iter()
            .flat_map(|c| {
                (1..=n).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    colorings.sort();
    colorings.dedup();
    Ok(HomSet { colorings })
}

/// |Hom(P(L), X)| without materializing the colorings.
pub fn counting_invariant(d: &Diagram, p: &FinitePsyquandle) -> Result<u64> {
    check_applicable(d, p)?;
    let engine = Engine::new(d, p.tables());
    let (_, base) = engine.run(false);
    let free = (p.order() as u64)
        .checked_pow(d.closed_components() as u32)
        .ok_or(Error::BoundExceeded {
            what: "crossing-free components",
            value: d.closed_components(),
            bound: 64,
        })?;
    base.checked_mul(free).ok_or(Error::BoundExceeded {
        what: "coloring count",
        value: usize::MAX,
        bound: u64::MAX as usize,
    })
}

/// Checks every crossing equation directly.
pub fn is_coloring(d: &Diagram, t: &Tables, c: &[usize]) -> bool {
    if c.len() != d.color_slots() || c.iter().any(|&x| x == 0 || x > t.order()) {
        return false;
    }
    d.crossing_relations().iter().all(|r| {
        let x = |e: u32| c[e as usize - 1];
        x(r.target) == t.get(r.op, x(r.left), x(r.right))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearCount {
    /// `None` when the modulus is composite and enumeration was used.
    pub kernel_dimension: Option<usize>,
    pub count: u64,
}

/// The coloring equations of `d` over `Z_m` with the Alexander operations.
pub fn alexander_linear_system(
    d: &Diagram,
    m: u64,
    s: i64,
    t: i64,
    a: i64,
    b: i64,
) -> Result<Vec<Vec<u64>>> {
    let [s, t, a, b] = alexander_params(m, s, t, a, b)?;
    let neg = |v: u64| (m - v % m) % m;
    let coef = |op: Op| match op {
        Op::UnderTri => (t, (s + neg(t)) % m),
        Op::OverTri => (s, 0),
        Op::UnderDot => (a, (s + neg(a)) % m),
        Op::OverDot => (b, (s + neg(b)) % m),
    };
    let cols = d.color_slots();
    Ok(d.crossing_relations()
        .iter()
        .map(|r| {
            let mut row = vec![0u64; cols];
            let (cl, cr) = coef(r.op);
            row[r.left as usize - 1] = (row[r.left as usize - 1] + cl) % m;
            row[r.right as usize - 1] = (row[r.right as usize - 1] + cr) % m;
            row[r.target as usize - 1] = (row[r.target as usize - 1] + m - 1) % m;
            row
        })
        .collect())
}

/// Φ for an Alexander psyquandle by row reduction when `m` is prime.
pub fn count_alexander_linear(
    d: &Diagram,
    m: u64,
    s: i64,
    t: i64,
    a: i64,
    b: i64,
) -> Result<LinearCount> {
    d.require_unmixed()?;
    let rows = alexander_linear_system(d, m, s, t, a, b)?;
    if !is_prime(m) {
        let p = FinitePsyquandle::alexander_mod(m, s, t, a, b)?;
        return Ok(LinearCount {
            kernel_dimension: None,
            count: counting_invariant(d, &p)?,
        });
    }
    let dim = d.color_slots() - rank_mod_p(&rows, m);
    let count = m.checked_pow(dim as u32).ok_or(Error::BoundExceeded {
        what: "kernel dimension",
        value: dim,
        bound: 63,
    })?;
    Ok(LinearCount {
        kernel_dimension: Some(dim),
        count,
    })
}

fn odd_prime_pseudolink(d: &Diagram, p: u64) -> Result<()> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
    }
    if d.count_kind(CrossingKind::Singular) > 0 {
        return Err(Error::NotPseudolink);
    }
    Ok(())
}

/// Colorings by both `X_p` and `X'_p`.
pub fn strong_p_colorings(d: &Diagram, p: u64) -> Result<HomSet> {
    odd_prime_pseudolink(d, p)?;
    let a = enumerate_colorings(d, &FinitePsyquandle::x_p(p)?)?;
    let b = enumerate_colorings(d, &FinitePsyquandle::x_p_prime(p)?)?;
    let both = a.intersection(&b);
    for c in &both.colorings {
        for x in d.crossings() {
            if x.kind == CrossingKind::Precrossing {
                let e = x.ends().map(|e| c[e as usize - 1]);
                assert!(
                    e.iter().all(|&v| v == e[0]),
                    "strong coloring with distinct colors at a precrossing"
                );
            }
        }
    }
    Ok(both)
}

/// `X_p` colorings match p-colorings of the all-positive resolution, and
/// `X'_p` colorings those of the all-negative one.
pub fn check_resolution_observation(d: &Diagram, p: u64) -> Result<bool> {
    odd_prime_pseudolink(d, p)?;
    let xp = FinitePsyquandle::x_p(p)?;
    let xq = FinitePsyquandle::x_p_prime(p)?;
    let pos = d.resolve_all(CrossingKind::PositiveClassical)?;
    let neg = d.resolve_all(CrossingKind::NegativeClassical)?;
    Ok(
        enumerate_colorings(d, &xp)? == enumerate_colorings(&pos, &xp)?
            && enumerate_colorings(d, &xq)? == enumerate_colorings(&neg, &xp)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn unknot_has_n_colorings() {
        let p = FinitePsyquandle::alexander_mod(5, 2, 3, 4, 1).unwrap();
        let h = enumerate_colorings(&Diagram::unknot(), &p).unwrap();
        assert_eq!(h.count(), 5);
        assert_eq!(h.colorings[0], vec![1]);
    }

    #[test]
    fn kinks_have_n_colorings() {
        let p = FinitePsyquandle::alexander_mod(7, 3, 5, 2, 6).unwrap();
        for text in ["X+ 1 2 1 2", "X- 1 2 1 2", "X+ 2 1 2 1", "P 1 2 1 2"] {
            let d = parse_pd(text).unwrap();
            assert_eq!(counting_invariant(&d, &p).unwrap(), 7, "{text}");
        }
    }

    #[test]
    fn trefoil_three_colorings() {
        let d = parse_pd("X+ 1 2 3 4\nX+ 3 4 5 6\nX+ 5 6 1 2").unwrap();
        let x3 = FinitePsyquandle::x_p(3).unwrap();
        assert_eq!(counting_invariant(&d, &x3).unwrap(), 9);
        let h = enumerate_colorings(&d, &x3).unwrap();
        assert!(h.colorings.iter().all(|c| is_coloring(&d, x3.tables(), c)));
    }

    #[test]
    fn precrossings_need_pi_adequacy() {
        let rows: Vec<Vec<i64>> = vec![
            vec![1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 2, 2],
            vec![2, 2, 2, 2, 2, 2, 1, 3, 1, 1, 1, 1],
            vec![3, 3, 3, 3, 3, 3, 3, 1, 3, 2, 3, 3],
        ];
        let pure = FinitePsyquandle::new(Tables::from_rows(&rows).unwrap()).unwrap();
        let d = parse_pd("P 1 2 3 4\nX+ 3 4 1 2").unwrap();
        assert_eq!(
            enumerate_colorings(&d, &pure).unwrap_err(),
            Error::NotPiAdequate
        );
        let s = parse_pd("S 1 2 3 4\nX+ 3 4 1 2").unwrap();
        assert!(enumerate_colorings(&s, &pure).is_ok());
    }

    #[test]
    fn linear_matches_enumeration_on_unknot() {
        let r = count_alexander_linear(&Diagram::unknot(), 5, 3, 1, 2, 2).unwrap();
        assert_eq!(
            r,
            LinearCount {
                kernel_dimension: Some(1),
                count: 5
            }
        );
        let c = count_alexander_linear(&parse_pd("X+ 1 2 1 2").unwrap(), 9, 2, 4, 5, 1).unwrap();
        assert_eq!(c.kernel_dimension, None);
        assert_eq!(c.count, 9);
    }
}
