//! Matrices over the integer polynomial ring.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use super::{MultiPoly, Vars};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    vars: Vars,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(vars: &Vars, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries: vec![MultiPoly::zero(vars); rows * cols],
        }
    }

    pub fn from_rows(vars: &Vars, rows: Vec<Vec<MultiPoly>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        PolyMatrix {
            vars: vars.clone(),
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn add_to(&mut self, i: usize, j: usize, p: &MultiPoly) {
        let k = i * self.cols + j;
        self.entries[k] = &self.entries[k] + p;
    }

    pub fn row(&self, i: usize) -> &[MultiPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<MultiPoly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        PolyMatrix {
            vars: self.vars.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        let mut m = Self::from_rows(&self.vars, data);
        m.cols = cols.len();
        m
    }

    /// Fraction-free Gaussian elimination. The 0x0 determinant is 1.
    pub fn determinant(&self) -> MultiPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return MultiPoly::one(&self.vars);
        }
        let mut m = self.to_rows();
        let mut negate = false;
        let mut prev = MultiPoly::one(&self.vars);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return MultiPoly::zero(&self.vars);
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                m[i][k] = MultiPoly::zero(&self.vars);
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// All `size x size` minors. Size 0 gives `[1]`; a size larger than
    /// either dimension gives nothing.
    pub fn minors(&self, size: usize) -> Vec<MultiPoly> {
        if size == 0 {
            return vec![MultiPoly::one(&self.vars)];
        }
        if size > self.rows || size > self.cols {
            return Vec::new();
        }
        let row_sets = combinations(self.rows, size);
        let col_sets = combinations(self.cols, size);
        row_sets
            .par_iter()
            .flat_map_iter(|r| col_sets.iter().map(move |c| (r, c)))
            .map(|(r, c)| self.submatrix(r, c).determinant())
            .collect()
    }

    /// Minors generating the codimension-`k` elementary ideal: those of
    /// size `cols - k`.
    pub fn codim_minors(&self, k: usize) -> Vec<MultiPoly> {
        if k >= self.cols {
            return vec![MultiPoly::one(&self.vars)];
        }
        self.minors(self.cols - k)
    }

    /// Removes `±1` pivots by row and column operations and drops zero rows.
    /// Every elementary ideal of the result, taken relative to its own
    /// column count, equals that of `self`.
    pub fn eliminate_unit_pivots(&self) -> Self {
        self.eliminate_pivots(is_unit)
    }

    /// Like `eliminate_unit_pivots`, also pivoting on `±` monomials in the
    /// listed variables (treated as invertible). Rows are rescaled by monomials
    /// so entries stay polynomial.
    pub fn eliminate_monomial_pivots(&self, invertible: &[usize]) -> Self {
        let once = self.eliminate_unit_pivots();
        once.eliminate_pivots(|p| {
            p.monomial_inverse().is_some()
                && p.terms().all(|(e, _)| {
                    e.iter()
                        .enumerate()
                        .all(|(v, &k)| k == 0 || invertible.contains(&v))
                })
        })
    }

    fn eliminate_pivots(&self, admissible: impl Fn(&MultiPoly) -> bool) -> Self {
        let mut m = self.to_rows();
        let mut cols = self.cols;
        loop {
            let found = m
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.iter().position(&admissible).map(|j| (i, j)))
                .min_by_key(|&(i, _)| m[i].iter().filter(|x| !x.is_zero()).count());
            let Some((pi, pj)) = found else { break };
            let inv = m[pi][pj].monomial_inverse().expect("pivot is a unit");
            let pivot_row = m[pi].clone();
            for (i, r) in m.iter_mut().enumerate() {
                if i == pi || r[pj].is_zero() {
                    continue;
                }
                let f = &r[pj] * &inv;
                for (x, y) in r.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
                clear_denominators(r);
            }
            m.remove(pi);
            for r in m.iter_mut() {
                r.remove(pj);
            }
            cols -= 1;
        }
        m.retain(|r| r.iter().any(|x| !x.is_zero()));
        let mut out = Self::from_rows(&self.vars, m);
        out.cols = cols;
        out
    }
}

/// Multiplies a row by the monomial that makes every exponent nonnegative.
fn clear_denominators(row: &mut [MultiPoly]) {
    let Some(n) = row.first().map(|p| p.nvars()) else {
        return;
    };
    let mut shift = vec![0i32; n];
    for p in row.iter().filter(|p| !p.is_zero()) {
        for (s, e) in shift.iter_mut().zip(p.min_exponents()) {
            *s = (*s).min(e);
        }
    }
    if shift.iter().all(|&s| s == 0) {
        return;
    }
    let up: Vec<i32> = shift.iter().map(|s| -s).collect();
    for p in row.iter_mut() {
        *p = p.mul_monomial(&up, &BigInt::one());
    }
}

fn is_unit(p: &MultiPoly) -> bool {
    p.constant_value().is_some_and(|c| c.abs() == BigInt::one())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        let width = cells.iter().map(|c| c.len()).max().unwrap_or(0);
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}
