//! Backtracking census of small psyquandles.

use super::axioms::biquandle_with;
use super::{verify_psyquandle, FinitePsyquandle, Op, Tables};
use crate::error::{Error, Result};

pub const DEFAULT_SEARCH_BOUND: usize = 4;

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub require_pi: bool,
    /// Keep ▷̲ and ▷̄ fixed to these tables and only search the dot tables.
    pub fixed_biquandle: Option<Tables>,
    /// Largest allowed order; defaults to [`DEFAULT_SEARCH_BOUND`].
    pub bound: Option<usize>,
}

/// Yields every verified psyquandle of order `n`, in lexicographic table order.
pub fn search(n: usize, opts: SearchOptions) -> Result<Search> {
    let bound = opts.bound.unwrap_or(DEFAULT_SEARCH_BOUND);
    if n > bound || n > 16 {
        return Err(Error::BoundExceeded {
            what: "order",
            value: n,
            bound: bound.min(16),
        });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("order must be positive".into()));
    }
    let mut s = Search {
        n,
        require_pi: opts.require_pi,
        cells: Vec::new(),
        table: vec![None; 4 * n * n],
        used: vec![0; 4 * n],
        next_val: Vec::new(),
        depth: 0,
        biquandle_cells: 0,
        done: false,
    };
    if let Some(b) = &opts.fixed_biquandle {
        if b.order() != n {
            return Err(Error::InvalidParameter(
                "fixed biquandle has the wrong order".into(),
            ));
        }
        for op in [Op::UnderTri, Op::OverTri] {
            for x in 0..n {
                for y in 0..n {
                    s.set(op, x, y, b.at(op, x, y));
                }
            }
        }
    } else {
        for x in 0..n {
            for y in 0..n {
                s.cells.push((Op::UnderTri, x, y));
                s.cells.push((Op::OverTri, x, y));
            }
        }
    }
    s.biquandle_cells = s.cells.len();
    for x in 0..n {
        for y in 0..n {
            s.cells.push((Op::UnderDot, x, y));
            s.cells.push((Op::OverDot, x, y));
        }
    }
    s.next_val = vec![0; s.cells.len()];
    if opts.fixed_biquandle.is_some()
        && !biquandle_with(n, |op, x, y| s.get(op, x, y).unwrap()).passed()
    {
        s.done = true;
    }
    Ok(s)
}

pub struct Search {
    n: usize,
    require_pi: bool,
    cells: Vec<(Op, usize, usize)>,
    table: Vec<Option<u16>>,
    // bitmask of values used in each (op, column)
    used: Vec<u32>,
    next_val: Vec<u16>,
    depth: usize,
    biquandle_cells: usize,
    done: bool,
}

impl Search {
    fn idx(&self, op: Op, x: usize, y: usize) -> usize {
        (op.index() * self.n + x) * self.n + y
    }

    fn get(&self, op: Op, x: usize, y: usize) -> Option<usize> {
        self.table[self.idx(op, x, y)].map(|v| v as usize)
    }

    fn set(&mut self, op: Op, x: usize, y: usize, v: usize) {
        let i = self.idx(op, x, y);
        self.table[i] = Some(v as u16);
        self.used[op.index() * self.n + y] |= 1 << v;
    }

    fn clear(&mut self, op: Op, x: usize, y: usize) {
        let i = self.idx(op, x, y);
        if let Some(v) = self.table[i].take() {
            self.used[op.index() * self.n + y] &= !(1 << v);
        }
    }

    /// No fully-determined law instance is violated.
    fn partial_ok(&self) -> bool {
        let n = self.n;
        let g = |op: Op, a: Option<usize>, b: Option<usize>| self.get(op, a?, b?);
        let (u, o, ud, od) = (
            |a, b| g(Op::UnderTri, a, b),
            |a, b| g(Op::OverTri, a, b),
            |a, b| g(Op::UnderDot, a, b),
            |a, b| g(Op::OverDot, a, b),
        );
        let clash =
            |l: Option<usize>, r: Option<usize>| matches!((l, r), (Some(a), Some(b)) if a != b);
        for x in 0..n {
            let xs = Some(x);
            if clash(u(xs, xs), o(xs, xs)) {
                return false;
            }
            for y in 0..n {
                let ys = Some(y);
                for z in 0..n {
                    let zs = Some(z);
                    if clash(u(u(xs, ys), u(zs, ys)), u(u(xs, zs), o(ys, zs)))
                        || clash(o(u(xs, ys), u(zs, ys)), u(o(xs, zs), o(ys, zs)))
                        || clash(o(o(xs, ys), o(zs, ys)), o(o(xs, zs), u(ys, zs)))
                        || clash(o(o(xs, ys), od(zs, ys)), o(o(xs, zs), ud(ys, zs)))
                        || clash(u(u(xs, ys), od(zs, ys)), u(u(xs, zs), ud(ys, zs)))
                        || clash(od(o(xs, ys), o(zs, ys)), o(od(xs, zs), u(ys, zs)))
                        || clash(ud(u(xs, ys), u(zs, ys)), u(ud(xs, zs), o(ys, zs)))
                        || clash(ud(o(xs, ys), o(zs, ys)), o(ud(xs, zs), u(ys, zs)))
                        || clash(od(u(xs, ys), u(zs, ys)), u(od(xs, zs), o(ys, zs)))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn complete_tables(&self) -> Tables {
        Tables::from_fn(self.n, |op, x, y| self.get(op, x - 1, y - 1).unwrap() + 1)
            .expect("values in range")
    }

    fn retreat(&mut self) {
        if self.depth == 0 {
            self.done = true;
            return;
        }
        self.depth -= 1;
        let (op, x, y) = self.cells[self.depth];
        self.clear(op, x, y);
    }
}

impl Iterator for Search {
    type Item = FinitePsyquandle;

    fn next(&mut self) -> Option<FinitePsyquandle> {
        let n = self.n;
        while !self.done {
            if self.depth == self.cells.len() {
                let t = self.complete_tables();
                self.retreat();
                if self.require_pi && !t.is_pi_adequate() {
                    continue;
                }
                if verify_psyquandle(&t).passed() {
                    return Some(FinitePsyquandle::new(t).expect("verified"));
                }
                continue;
            }
            let (op, x, y) = self.cells[self.depth];
            let mask = self.used[op.index() * n + y];
            let mut placed = false;
            let mut v = self.next_val[self.depth] as usize;
            while v < n {
                if mask & (1 << v) == 0 {
                    self.set(op, x, y, v);
                    let ok = self.partial_ok()
                        && (self.depth + 1 != self.biquandle_cells
                            || biquandle_with(n, |o, a, b| self.get(o, a, b).unwrap()).passed());
                    if ok {
                        placed = true;
                        break;
                    }
                    self.clear(op, x, y);
                }
                v += 1;
            }
            if placed {
                self.next_val[self.depth] = v as u16 + 1;
                self.depth += 1;
                if self.depth < self.cells.len() {
                    self.next_val[self.depth] = 0;
                }
            } else {
                self.next_val[self.depth] = 0;
                self.retreat();
            }
        }
        None
    }
}
