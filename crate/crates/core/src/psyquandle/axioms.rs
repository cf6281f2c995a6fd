use std::fmt;

use super::{Op, Tables};

const MAX_FAILURES: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    /// 1-based elements.
    pub witness: Vec<usize>,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|x| x.to_string()).collect();
        write!(f, "({}) at ({})", self.axiom, w.join(","))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
    /// More failures existed than were recorded.
    pub truncated: bool,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, axiom: &'static str, witness: &[usize]) {
        if self.failures.len() >= MAX_FAILURES {
            self.truncated = true;
            return;
        }
        self.failures.push(AxiomFailure {
            axiom,
            witness: witness.iter().map(|x| x + 1).collect(),
        });
    }

    pub fn failed_axioms(&self) -> Vec<&'static str> {
        let mut v: Vec<&'static str> = Vec::new();
        for f in &self.failures {
            if !v.contains(&f.axiom) {
                v.push(f.axiom);
            }
        }
        v
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("passed");
        }
        let shown: Vec<String> = self
            .failures
            .iter()
            .take(5)
            .map(|x| x.to_string())
            .collect();
        write!(
            f,
            "{} failure(s): {}",
            self.failures.len(),
            shown.join(", ")
        )?;
        if self.failures.len() > 5 || self.truncated {
            f.write_str(", ...")?;
        }
        Ok(())
    }
}

fn column_bijective(
    n: usize,
    op: Op,
    look: &impl Fn(Op, usize, usize) -> usize,
    axiom: &'static str,
    r: &mut AxiomReport,
) {
    for y in 0..n {
        let mut seen = vec![false; n];
        for x in 0..n {
            let v = look(op, x, y);
            if std::mem::replace(&mut seen[v], true) {
                r.fail(axiom, &[y]);
                break;
            }
        }
    }
}

fn pair_map_bijective(
    n: usize,
    map: impl Fn(usize, usize) -> (usize, usize),
    axiom: &'static str,
    r: &mut AxiomReport,
) {
    let mut seen = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let (a, b) = map(x, y);
            if std::mem::replace(&mut seen[a * n + b], true) {
                r.fail(axiom, &[x, y]);
            }
        }
    }
}

/// Axioms (i)-(iii) with an arbitrary 0-based lookup.
pub(crate) fn biquandle_with(n: usize, look: impl Fn(Op, usize, usize) -> usize) -> AxiomReport {
    let mut r = AxiomReport::default();
    let u = |x, y| look(Op::UnderTri, x, y);
    let o = |x, y| look(Op::OverTri, x, y);
    for x in 0..n {
        if u(x, x) != o(x, x) {
            r.fail("i", &[x]);
        }
    }
    column_bijective(n, Op::UnderTri, &look, "ii.under", &mut r);
    column_bijective(n, Op::OverTri, &look, "ii.over", &mut r);
    pair_map_bijective(n, |x, y| (o(y, x), u(x, y)), "ii.S", &mut r);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)) {
                    r.fail("iii.1", &[x, y, z]);
                }
                if o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)) {
                    r.fail("iii.2", &[x, y, z]);
                }
                if o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)) {
                    r.fail("iii.3", &[x, y, z]);
                }
            }
        }
    }
    r
}

/// Axioms (p/si)-(p/siii), assuming the biquandle part passed.
pub(crate) fn psyquandle_part_with(
    n: usize,
    look: impl Fn(Op, usize, usize) -> usize,
) -> AxiomReport {
    let mut r = AxiomReport::default();
    let u = |x, y| look(Op::UnderTri, x, y);
    let o = |x, y| look(Op::OverTri, x, y);
    let ud = |x, y| look(Op::UnderDot, x, y);
    let od = |x, y| look(Op::OverDot, x, y);
    column_bijective(n, Op::UnderDot, &look, "p/si.under", &mut r);
    column_bijective(n, Op::OverDot, &look, "p/si.over", &mut r);
    pair_map_bijective(n, |x, y| (od(y, x), ud(x, y)), "p/si.S'", &mut r);
    for x in 0..n {
        for y in 0..n {
            let mut count = 0usize;
            for w in 0..n {
                if o(y, x) != od(w, x) {
                    continue;
                }
                for z in 0..n {
                    if u(x, y) == od(z, y) && u(w, z) == ud(y, z) && o(z, w) == ud(x, w) {
                        count += 1;
                    }
                }
            }
            if count != 1 {
                r.fail("p/sii", &[x, y]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let laws = [
                    o(o(x, y), od(z, y)) == o(o(x, z), ud(y, z)),
                    u(u(x, y), od(z, y)) == u(u(x, z), ud(y, z)),
                    od(o(x, y), o(z, y)) == o(od(x, z), u(y, z)),
                    ud(u(x, y), u(z, y)) == u(ud(x, z), o(y, z)),
                    ud(o(x, y), o(z, y)) == o(ud(x, z), u(y, z)),
                    od(u(x, y), u(z, y)) == u(od(x, z), o(y, z)),
                ];
                const IDS: [&str; 6] = [
                    "p/siii.1", "p/siii.2", "p/siii.3", "p/siii.4", "p/siii.5", "p/siii.6",
                ];
                for (ok, id) in laws.iter().zip(IDS) {
                    if !ok {
                        r.fail(id, &[x, y, z]);
                    }
                }
            }
        }
    }
    r
}

pub(crate) fn psyquandle_with(n: usize, look: impl Fn(Op, usize, usize) -> usize) -> AxiomReport {
    let r = biquandle_with(n, &look);
    if !r.passed() {
        return r;
    }
    psyquandle_part_with(n, look)
}

pub fn verify_biquandle(t: &Tables) -> AxiomReport {
    biquandle_with(t.order(), |op, x, y| t.at(op, x, y))
}

/// Runs the biquandle checks first and stops there if they fail.
pub fn verify_psyquandle(t: &Tables) -> AxiomReport {
    psyquandle_with(t.order(), |op, x, y| t.at(op, x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psyquandle::alexander_tables;

    #[test]
    fn trivial_passes() {
        let t = Tables::from_fn(3, |_, x, _| x).unwrap();
        assert!(verify_biquandle(&t).passed());
        assert!(verify_psyquandle(&t).passed());
    }

    #[test]
    fn non_permutation_column_caught() {
        let t = Tables::from_fn(3, |op, x, _| if op == Op::UnderTri { 1 } else { x }).unwrap();
        let r = verify_biquandle(&t);
        assert!(!r.passed());
        assert!(r.failures.iter().any(|f| f.axiom == "ii.under"));
    }

    #[test]
    fn mutation_is_detected() {
        let t = alexander_tables(5, 2, 3, 4, 1).unwrap();
        assert!(verify_psyquandle(&t).passed());
        let v = t.get(Op::UnderDot, 2, 3);
        let bad = t.with_entry(Op::UnderDot, 2, 3, v % 5 + 1).unwrap();
        assert!(!verify_psyquandle(&bad).passed());
    }

    #[test]
    fn transposed_check_agrees() {
        for (s, t, a, b) in [(2, 3, 4, 1), (1, 4, 2, 3), (3, 1, 2, 2)] {
            let tab = alexander_tables(5, s, t, a, b).unwrap();
            let tr = tab.transposed();
            let swapped = psyquandle_with(5, |op, x, y| tr.at(op, y, x));
            assert_eq!(swapped, verify_psyquandle(&tab));
        }
    }
}
