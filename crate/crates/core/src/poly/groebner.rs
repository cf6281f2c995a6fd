//! Buchberger's algorithm over the rationals. Bases are computed modulo word
//! sized primes, lifted by Chinese remaindering and rational reconstruction,
//! and then checked over the rationals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{RatPoly, Vars};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
}

impl MonomialOrder {
    pub fn compare(self, a: &[i32], b: &[i32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let (da, db): (i32, i32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| {
                    for i in (0..a.len()).rev() {
                        if a[i] != b[i] {
                            return b[i].cmp(&a[i]);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            _ => Err(Error::InvalidParameter(format!(
                "unknown monomial order `{s}`"
            ))),
        }
    }
}

type Mono = Vec<i32>;

fn divides(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[i32], b: &[i32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn disjoint(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn quotient(a: &[i32], b: &[i32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn shifted(e: &[i32], m: &[i32]) -> Mono {
    e.iter().zip(m).map(|(u, v)| u + v).collect()
}

/// Polynomial types the Buchberger loop runs over. Terms are stored in
/// descending order.
trait Element: Clone + Send + Sync {
    fn lm(&self) -> &[i32];
    fn is_zero(&self) -> bool;
    fn s_poly(&self, other: &Self, order: MonomialOrder) -> Self;
    /// Cancels the term at `pos` against `g`, whose leading monomial divides it.
    fn eliminate_at(&self, pos: usize, g: &Self, order: MonomialOrder) -> Self;
    fn term_mono(&self, pos: usize) -> &[i32];
    fn len(&self) -> usize;
    fn normalized(self) -> Self;
}

fn top_reduce<E: Element>(f: E, basis: &[&E], order: MonomialOrder) -> E {
    let mut p = f;
    while !p.is_zero() {
        let Some(g) = basis.iter().find(|g| divides(g.lm(), p.lm())) else {
            break;
        };
        p = p.eliminate_at(0, g, order);
    }
    p
}

fn full_reduce<E: Element>(f: E, basis: &[&E], order: MonomialOrder) -> E {
    let mut p = top_reduce(f, basis, order);
    let mut pos = 1;
    while pos < p.len() {
        match basis.iter().find(|g| divides(g.lm(), p.term_mono(pos))) {
            Some(g) => p = p.eliminate_at(pos, g, order),
            None => pos += 1,
        }
    }
    p.normalized()
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
}

/// Basis under construction with Gebauer-Möller pair bookkeeping.
struct Basis<E> {
    order: MonomialOrder,
    polys: Vec<E>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<E: Element> Basis<E> {
    fn new(order: MonomialOrder) -> Self {
        Basis {
            order,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn reducers(&self) -> Vec<&E> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(g, _)| g)
            .collect()
    }

    fn insert(&mut self, h: E) {
        let k = self.polys.len();
        let hl = h.lm().to_vec();
        let mut cands: Vec<(usize, Mono, bool)> = (0..k)
            .filter(|&g| self.active[g])
            .map(|g| {
                let gl = self.polys[g].lm();
                (g, lcm(&hl, gl), disjoint(&hl, gl))
            })
            .collect();
        cands.sort_by(|a, b| self.order.compare(&a.1, &b.1).then(a.0.cmp(&b.0)));
        let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
        for c in cands {
            if !kept.iter().any(|k| divides(&k.1, &c.1)) {
                kept.push(c);
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(divides(&hl, &p.lcm)
                && lcm(polys[p.i].lm(), &hl) != p.lcm
                && lcm(polys[p.j].lm(), &hl) != p.lcm)
        });
        self.pairs
            .extend(
                kept.into_iter()
                    .filter(|c| !c.2)
                    .map(|(g, l, _)| Pair { i: g, j: k, lcm: l }),
            );
        for g in 0..k {
            if self.active[g] && divides(&hl, self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            order
                .compare(&pa.lcm, &pb.lcm)
                .then((pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced basis, sorted by leading monomial descending.
fn buchberger<E: Element>(input: Vec<E>, order: MonomialOrder) -> Vec<E> {
    let mut input: Vec<E> = input.into_iter().filter(|p| !p.is_zero()).collect();
    input.sort_by(|a, b| order.compare(a.lm(), b.lm()));
    let mut st = Basis::new(order);
    for p in input {
        let h = full_reduce(p, &st.reducers(), order);
        if !h.is_zero() {
            st.insert(h);
        }
    }
    while let Some(pair) = st.next_pair() {
        let sp = st.polys[pair.i].s_poly(&st.polys[pair.j], order);
        let h = full_reduce(sp, &st.reducers(), order);
        if !h.is_zero() {
            st.insert(h);
        }
    }
    let minimal: Vec<E> = st
        .polys
        .into_iter()
        .zip(st.active)
        .filter(|(_, a)| *a)
        .map(|(g, _)| g)
        .collect();
    let mut reduced: Vec<E> = (0..minimal.len())
        .map(|i| {
            let others: Vec<&E> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, g)| g)
                .collect();
            full_reduce(minimal[i].clone(), &others, order)
        })
        .collect();
    reduced.sort_by(|a, b| order.compare(b.lm(), a.lm()));
    reduced
}

/// Integer polynomial, kept primitive with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ZPoly {
    terms: Vec<(Mono, BigInt)>,
}

impl ZPoly {
    fn from_poly(p: &RatPoly, order: MonomialOrder) -> Result<Self> {
        if p.has_negative_exponents() {
            return Err(Error::InvalidParameter(
                "Gröbner bases need nonnegative exponents".into(),
            ));
        }
        let den = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms: Vec<(Mono, BigInt)> = p
            .terms()
            .map(|(e, c)| (e.clone(), c.numer() * (&den / c.denom())))
            .collect();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Ok(ZPoly { terms }.normalized())
    }

    fn to_poly(&self, vars: &Vars) -> RatPoly {
        let lc = BigRational::from_integer(self.terms[0].1.clone());
        RatPoly::from_terms(
            vars,
            self.terms
                .iter()
                .map(|(e, c)| (e.clone(), BigRational::from_integer(c.clone()) / &lc)),
        )
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    /// `a * self - b * x^m * g`, skipping the first `skip` terms of both.
    fn combine(
        &self,
        a: &BigInt,
        b: &BigInt,
        m: &[i32],
        g: &ZPoly,
        order: MonomialOrder,
        skip: usize,
    ) -> ZPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut x = self.terms[skip.min(self.terms.len())..].iter().peekable();
        let mut y = g.terms[skip.min(g.terms.len())..]
            .iter()
            .map(|(e, c)| (shifted(e, m), c))
            .peekable();
        loop {
            let next = match (x.peek(), y.peek()) {
                (None, None) => break,
                (Some(_), None) => x.next().map(|(e, c)| (e.clone(), a * c)).unwrap(),
                (None, Some(_)) => y.next().map(|(e, c)| (e, -(b * c))).unwrap(),
                (Some((e1, _)), Some((e2, _))) => match order.compare(e1, e2) {
                    Ordering::Greater => x.next().map(|(e, c)| (e.clone(), a * c)).unwrap(),
                    Ordering::Less => y.next().map(|(e, c)| (e, -(b * c))).unwrap(),
                    Ordering::Equal => {
                        let (_, c1) = x.next().unwrap();
                        let (e, c2) = y.next().unwrap();
                        (e, a * c1 - b * c2)
                    }
                },
            };
            if !next.1.is_zero() {
                out.push(next);
            }
        }
        ZPoly { terms: out }
    }
}

impl Element for ZPoly {
    fn lm(&self) -> &[i32] {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn s_poly(&self, g: &Self, order: MonomialOrder) -> Self {
        let l = lcm(self.lm(), g.lm());
        let mf = quotient(&l, self.lm());
        let mg = quotient(&l, g.lm());
        let d = self.lc().gcd(g.lc());
        let fm = ZPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (shifted(e, &mf), c.clone()))
                .collect(),
        };
        fm.combine(&(g.lc() / &d), &(self.lc() / &d), &mg, g, order, 1)
            .normalized()
    }

    fn eliminate_at(&self, pos: usize, g: &Self, order: MonomialOrder) -> Self {
        let (m, c) = &self.terms[pos];
        let q = quotient(m, g.lm());
        let d = c.gcd(g.lc());
        let skip = usize::from(pos == 0);
        self.combine(&(g.lc() / &d), &(c / &d), &q, g, order, skip)
            .normalized()
    }

    fn term_mono(&self, pos: usize) -> &[i32] {
        &self.terms[pos].0
    }

    fn len(&self) -> usize {
        self.terms.len()
    }

    fn normalized(mut self) -> Self {
        if self.terms.is_empty() {
            return self;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for t in &mut self.terms {
                t.1 = &t.1 / &g;
            }
        }
        self
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Polynomial over `Z/p`, monic once normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
struct FPoly {
    p: u64,
    terms: Vec<(Mono, u64)>,
}

impl FPoly {
    fn from_z(z: &ZPoly, p: u64) -> FPoly {
        let pb = BigInt::from(p);
        let terms = z
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let r = c.mod_floor(&pb).to_u64().unwrap();
                (r != 0).then(|| (e.clone(), r))
            })
            .collect();
        FPoly { p, terms }
    }

    /// `self - c * x^m * g`, skipping the first `skip` terms of both.
    fn combine(&self, c: u64, m: &[i32], g: &FPoly, order: MonomialOrder, skip: usize) -> FPoly {
        let p = self.p;
        let neg = |v: u64| (p - mul_mod(c, v, p)) % p;
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut x = self.terms[skip.min(self.terms.len())..].iter().peekable();
        let mut y = g.terms[skip.min(g.terms.len())..]
            .iter()
            .map(|(e, v)| (shifted(e, m), *v))
            .peekable();
        loop {
            let next = match (x.peek(), y.peek()) {
                (None, None) => break,
                (Some(_), None) => x.next().map(|(e, v)| (e.clone(), *v)).unwrap(),
                (None, Some(_)) => y.next().map(|(e, v)| (e, neg(v))).unwrap(),
                (Some((e1, _)), Some((e2, _))) => match order.compare(e1, e2) {
                    Ordering::Greater => x.next().map(|(e, v)| (e.clone(), *v)).unwrap(),
                    Ordering::Less => y.next().map(|(e, v)| (e, neg(v))).unwrap(),
                    Ordering::Equal => {
                        let (_, v1) = x.next().unwrap();
                        let (e, v2) = y.next().unwrap();
                        (e, (v1 + neg(v2)) % p)
                    }
                },
            };
            if next.1 != 0 {
                out.push(next);
            }
        }
        FPoly { p, terms: out }
    }
}

impl Element for FPoly {
    fn lm(&self) -> &[i32] {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn s_poly(&self, g: &Self, order: MonomialOrder) -> Self {
        let l = lcm(self.lm(), g.lm());
        let mf = quotient(&l, self.lm());
        let mg = quotient(&l, g.lm());
        let p = self.p;
        let a = inv_mod(self.terms[0].1, p);
        let fm = FPoly {
            p,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (shifted(e, &mf), mul_mod(*v, a, p)))
                .collect(),
        };
        let c = inv_mod(g.terms[0].1, p);
        fm.combine(c, &mg, g, order, 1)
    }

    fn eliminate_at(&self, pos: usize, g: &Self, order: MonomialOrder) -> Self {
        let (m, v) = &self.terms[pos];
        let q = quotient(m, g.lm());
        let c = mul_mod(*v, inv_mod(g.terms[0].1, self.p), self.p);
        self.combine(c, &q, g, order, usize::from(pos == 0))
    }

    fn term_mono(&self, pos: usize) -> &[i32] {
        &self.terms[pos].0
    }

    fn len(&self) -> usize {
        self.terms.len()
    }

    fn normalized(mut self) -> Self {
        if let Some(&(_, lc)) = self.terms.first() {
            if lc != 1 {
                let a = inv_mod(lc, self.p);
                for t in &mut self.terms {
                    t.1 = mul_mod(t.1, a, self.p);
                }
            }
        }
        self
    }
}

/// Deterministic Miller-Rabin for `n < 2^32`.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2, 3, 5, 7, 61] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let (mut d, mut r) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    [2u64, 7, 61].iter().all(|&a| {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                return true;
            }
        }
        false
    })
}

/// Primes below `2^31`, descending.
fn primes() -> impl Iterator<Item = u64> {
    (1u64..(1 << 31)).rev().filter(|&n| is_prime(n))
}

/// `a / b` with `|a|, b <= sqrt(m / 2)` and `a ≡ b * x (mod m)`.
fn rational_reconstruction(x: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Residues of one basis shape across primes.
struct Lift {
    modulus: BigInt,
    primes: usize,
    terms: Vec<BTreeMap<Mono, BigInt>>,
}

impl Lift {
    fn new(basis: &[FPoly]) -> Lift {
        let p = basis.first().map(|g| g.p).unwrap_or(2);
        Lift {
            modulus: BigInt::from(p),
            primes: 1,
            terms: basis
                .iter()
                .map(|g| {
                    g.terms
                        .iter()
                        .map(|(e, v)| (e.clone(), BigInt::from(*v)))
                        .collect()
                })
                .collect(),
        }
    }

    fn absorb(&mut self, basis: &[FPoly]) {
        let p = basis[0].p;
        let pb = BigInt::from(p);
        let m_mod_p = self.modulus.mod_floor(&pb).to_u64().unwrap();
        let m_inv = inv_mod(m_mod_p, p);
        for (acc, g) in self.terms.iter_mut().zip(basis) {
            let new: BTreeMap<&Mono, u64> = g.terms.iter().map(|(e, v)| (e, *v)).collect();
            for (e, _) in &g.terms {
                acc.entry(e.clone()).or_insert_with(BigInt::zero);
            }
            for (e, r) in acc.iter_mut() {
                let target = new.get(e).copied().unwrap_or(0);
                let cur = r.mod_floor(&pb).to_u64().unwrap();
                let diff = (target + p - cur) % p;
                let k = mul_mod(diff, m_inv, p);
                *r += &self.modulus * BigInt::from(k);
            }
        }
        self.modulus *= pb;
        self.primes += 1;
    }

    fn reconstruct(&self, vars: &Vars) -> Option<Vec<RatPoly>> {
        self.terms
            .iter()
            .map(|acc| {
                let terms = acc
                    .iter()
                    .map(|(e, r)| rational_reconstruction(r, &self.modulus).map(|q| (e.clone(), q)))
                    .collect::<Option<Vec<_>>>()?;
                Some(RatPoly::from_terms(vars, terms))
            })
            .collect()
    }
}

/// Checks that `candidate` is a Gröbner basis containing every generator.
fn verify(gens: &[ZPoly], candidate: &[RatPoly], order: MonomialOrder) -> bool {
    let Ok(zs) = candidate
        .iter()
        .map(|g| ZPoly::from_poly(g, order))
        .collect::<Result<Vec<_>>>()
    else {
        return false;
    };
    let refs: Vec<&ZPoly> = zs.iter().collect();
    let gens_ok = gens
        .par_iter()
        .all(|g| full_reduce(g.clone(), &refs, order).is_zero());
    if !gens_ok {
        return false;
    }
    let pairs: Vec<(usize, usize)> = (0..zs.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| !disjoint(zs[i].lm(), zs[j].lm()))
        .collect();
    pairs
        .par_iter()
        .all(|&(i, j)| full_reduce(zs[i].s_poly(&zs[j], order), &refs, order).is_zero())
}

const PRIME_BATCH: usize = 4;
const MAX_PRIMES: usize = 400;

fn modular_groebner(gens: &[ZPoly], vars: &Vars, order: MonomialOrder) -> Option<Vec<RatPoly>> {
    let mut lifts: HashMap<Vec<Mono>, Lift> = HashMap::new();
    let mut last: Option<Vec<RatPoly>> = None;
    let mut used = 0;
    let mut source = primes().filter(|&p| {
        let pb = BigInt::from(p);
        gens.iter().all(|g| !g.lc().mod_floor(&pb).is_zero())
    });
    while used < MAX_PRIMES {
        let batch: Vec<u64> = source.by_ref().take(PRIME_BATCH).collect();
        used += batch.len();
        let bases: Vec<Vec<FPoly>> = batch
            .par_iter()
            .map(|&p| {
                let input = gens
                    .iter()
                    .map(|g| FPoly::from_z(g, p).normalized())
                    .collect();
                buchberger(input, order)
            })
            .collect();
        for b in bases {
            if b.is_empty() {
                continue;
            }
            let shape: Vec<Mono> = b.iter().map(|g| g.lm().to_vec()).collect();
            match lifts.get_mut(&shape) {
                Some(l) => l.absorb(&b),
                None => {
                    lifts.insert(shape, Lift::new(&b));
                }
            }
        }
        let best = lifts.values().max_by_key(|l| l.primes)?;
        if let Some(c) = best.reconstruct(vars) {
            if last.as_ref() == Some(&c) && verify(gens, &c, order) {
                return Some(c);
            }
            last = Some(c);
        }
    }
    None
}

/// Reduced Gröbner basis, monic, sorted by leading monomial descending.
pub fn groebner(gens: &[RatPoly], order: MonomialOrder) -> Result<Vec<RatPoly>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    if gens.iter().any(|p| p.vars() != first.vars()) {
        return Err(Error::InvalidParameter(
            "generators over different variables".into(),
        ));
    }
    let vars = first.vars().clone();
    let zs: Vec<ZPoly> = gens
        .iter()
        .map(|g| ZPoly::from_poly(g, order))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    if zs.is_empty() {
        return Ok(Vec::new());
    }
    if let Some(b) = modular_groebner(&zs, &vars, order) {
        return Ok(b);
    }
    Ok(buchberger(zs, order)
        .iter()
        .map(|g| g.to_poly(&vars))
        .collect())
}

/// Remainder of `f` on division by `basis`.
pub fn reduce(f: &RatPoly, basis: &[RatPoly], order: MonomialOrder) -> Result<RatPoly> {
    let gb: Vec<ZPoly> = basis
        .iter()
        .map(|g| ZPoly::from_poly(g, order))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    ZPoly::from_poly(f, order)?;
    let mut p: Vec<(Mono, BigRational)> = f.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    p.sort_by(|a, b| order.compare(&b.0, &a.0));
    let mut rem: Vec<(Mono, BigRational)> = Vec::new();
    while !p.is_empty() {
        let (m, c) = p[0].clone();
        match gb.iter().find(|g| divides(g.lm(), &m)) {
            Some(g) => {
                let q = quotient(&m, g.lm());
                let k = &c / BigRational::from_integer(g.lc().clone());
                let mut merged: BTreeMap<Mono, BigRational> = p.drain(..).skip(1).collect();
                for (e, v) in g.terms.iter().skip(1) {
                    let entry = merged
                        .entry(shifted(e, &q))
                        .or_insert_with(BigRational::zero);
                    *entry -= &k * BigRational::from_integer(v.clone());
                }
                p = merged.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                p.sort_by(|a, b| order.compare(&b.0, &a.0));
            }
            None => rem.push(p.remove(0)),
        }
    }
    Ok(RatPoly::from_terms(f.vars(), rem))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, vars};

    fn rp(s: &str, v: &Vars) -> RatPoly {
        parse_poly(s, v).unwrap().to_rational()
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(2147483647));
        assert!(!is_prime(25326001));
        assert_eq!(primes().next(), Some(2147483647));
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(2147483647u64) * BigInt::from(2147483629u64);
        let q = BigRational::new(BigInt::from(-7), BigInt::from(12));
        let x = (q.numer() * q.denom().modinv(&m).unwrap()).mod_floor(&m);
        assert_eq!(rational_reconstruction(&x, &m), Some(q));
    }

    #[test]
    fn modular_matches_direct() {
        let v = vars(&["x", "y", "z"]);
        let g = [
            rp("3*x^2*y - 2*z + 5", &v),
            rp("x*y*z - 7*y^2 + x", &v),
            rp("2*z^2 - x*y + 3", &v),
        ];
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let zs: Vec<ZPoly> = g
                .iter()
                .map(|p| ZPoly::from_poly(p, order).unwrap())
                .collect();
            let direct: Vec<RatPoly> = buchberger(zs.clone(), order)
                .iter()
                .map(|p| p.to_poly(&v))
                .collect();
            let lifted = modular_groebner(&zs, &v, order).unwrap();
            assert_eq!(direct, lifted);
            assert!(verify(&zs, &lifted, order));
        }
    }

    #[test]
    fn verification_rejects_wrong_basis() {
        let v = vars(&["x", "y"]);
        let zs = [ZPoly::from_poly(&rp("x^2 + y", &v), MonomialOrder::GrevLex).unwrap()];
        assert!(!verify(
            &zs,
            &[rp("x + 1", &v), rp("y", &v)],
            MonomialOrder::GrevLex
        ));
        assert!(!verify(&zs, &[rp("x^2", &v)], MonomialOrder::GrevLex));
    }

    #[test]
    fn twisted_cubic() {
        let v = vars(&["x", "y", "z"]);
        let g = [rp("y - x^2", &v), rp("z - x^3", &v)];
        let gb = groebner(&g, MonomialOrder::Lex).unwrap();
        let printed: Vec<String> = gb.iter().map(|p| p.to_string()).collect();
        assert_eq!(printed, ["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"]);
        for p in &g {
            assert!(reduce(p, &gb, MonomialOrder::Lex).unwrap().is_zero());
        }
    }

    #[test]
    fn unit_ideal() {
        let v = vars(&["x", "y"]);
        let gb = groebner(&[rp("x*y - 1", &v), rp("x", &v)], MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0].to_string(), "1");
    }

    #[test]
    fn orders_differ_but_ideal_agrees() {
        let v = vars(&["x", "y"]);
        let g = [rp("x^2 + y", &v), rp("x*y - 1", &v)];
        let a = groebner(&g, MonomialOrder::Lex).unwrap();
        let b = groebner(&g, MonomialOrder::GrevLex).unwrap();
        for p in &a {
            assert!(reduce(p, &b, MonomialOrder::GrevLex).unwrap().is_zero());
        }
        for p in &b {
            assert!(reduce(p, &a, MonomialOrder::Lex).unwrap().is_zero());
        }
    }
}
