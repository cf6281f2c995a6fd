//! Sparse multivariate Laurent polynomials with exact coefficients.

mod gcd;
mod groebner;
mod matrix;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub use gcd::{
    gcd, gcd_all, gcd_homogeneous_bivariate, gcd_up_to_units, normalize, UnitGroup, UnitNormalForm,
    UnitRecord,
};
pub use groebner::{groebner, reduce, MonomialOrder};
pub use matrix::PolyMatrix;

pub trait Coefficient:
    num_traits::Num + Signed + Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync
{
    /// `self / d` when it is exact in the coefficient ring.
    fn exact_div(&self, d: &Self) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl Coefficient for BigRational {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

/// Ordered variable names shared by polynomials of one ring.
pub type Vars = Arc<Vec<String>>;

pub fn vars(names: &[&str]) -> Vars {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<C> {
    vars: Vars,
    terms: BTreeMap<Vec<i32>, C>,
}

pub type MultiPoly = Polynomial<BigInt>;
pub type RatPoly = Polynomial<BigRational>;

fn grlex(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(vars: &Vars) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn constant(vars: &Vars, c: C) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &Vars, exps: Vec<i32>, c: C) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn var(vars: &Vars, index: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[index] = 1;
        Self::monomial(vars, e, C::one())
    }

    pub fn var_named(vars: &Vars, name: &str) -> Option<Self> {
        vars.iter()
            .position(|v| v == name)
            .map(|i| Self::var(vars, i))
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<i32>, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in lexicographic exponent order (last = lex-leading).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i32>, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().all(|e| e.iter().all(|&x| x == 0)))
    }

    pub fn constant_value(&self) -> Option<C> {
        if self.is_zero() {
            Some(C::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn coefficient(&self, exps: &[i32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exps: Vec<i32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "polynomials over different variables: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &[i32], c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    let e2 = e.iter().zip(exps).map(|(a, b)| a + b).collect();
                    (e2, v.clone() * c.clone())
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Largest total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, v: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[v]).max()
    }

    pub fn min_degree_in(&self, v: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[v]).min()
    }

    /// Componentwise minimum of all exponent vectors.
    pub fn min_exponents(&self) -> Vec<i32> {
        (0..self.nvars())
            .map(|v| self.min_degree_in(v).unwrap_or(0))
            .collect()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut d = self.terms.keys().map(|e| e.iter().sum::<i32>());
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(&Vec<i32>, &C)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.leading_term().map(|t| t.1)
    }

    /// Terms in printing order: graded-lex descending.
    pub fn sorted_terms(&self) -> Vec<(&Vec<i32>, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex(b.0, a.0));
        v
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(
            &self.vars,
            self.terms.iter().map(|(e, c)| (e.clone(), f(c))),
        )
    }

    /// Replaces variable `v` by `q`. Negative powers of `v` need `q` to be a
    /// monomial with unit coefficient.
    pub fn substitute(&self, v: usize, q: &Self) -> Result<Self> {
        self.check_ring(q);
        let inverse = if self.min_degree_in(v).unwrap_or(0) < 0 {
            Some(q.monomial_inverse().ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "cannot substitute a non-unit for {} under a negative power",
                    self.vars[v]
                ))
            })?)
        } else {
            None
        };
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[v];
            let mut rest = e.clone();
            rest[v] = 0;
            let factor = if k >= 0 {
                q.pow(k as u32)
            } else {
                inverse.as_ref().unwrap().pow((-k) as u32)
            };
            out = &out + &factor.mul_monomial(&rest, c);
        }
        Ok(out)
    }

    /// 1 / self when self is `±x^e`.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !(c.is_one() || (-c.clone()).is_one()) {
            return None;
        }
        Some(Self::monomial(
            &self.vars,
            e.iter().map(|x| -x).collect(),
            c.clone(),
        ))
    }

    /// Same polynomial over another ordering or superset of the variables.
    pub fn embed(&self, target: &Vars) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|w| w == v))
            .collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if x != 0 {
                    let j = map[i].ok_or_else(|| {
                        Error::InvalidParameter(format!(
                            "variable {} missing from target ring",
                            self.vars[i]
                        ))
                    })?;
                    e2[j] = x;
                }
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Exact quotient in the polynomial ring, or in the Laurent ring when
    /// either side has negative exponents.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check_ring(d);
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(&self.vars));
        }
        if self.has_negative_exponents() || d.has_negative_exponents() {
            let (ma, md) = (self.min_exponents(), d.min_exponents());
            let neg = |m: &[i32]| m.iter().map(|x| -x).collect::<Vec<_>>();
            let a = self.mul_monomial(&neg(&ma), &C::one());
            let b = d.mul_monomial(&neg(&md), &C::one());
            let q = a.div_exact(&b)?;
            let shift: Vec<i32> = ma.iter().zip(&md).map(|(x, y)| x - y).collect();
            return Some(q.mul_monomial(&shift, &C::one()));
        }
        let (lm, lc) = d.terms.iter().next_back().unwrap();
        let mut r = self.clone();
        let mut q = Self::zero(&self.vars);
        while let Some((m, c)) = r.terms.iter().next_back() {
            let e: Vec<i32> = m.iter().zip(lm).map(|(a, b)| a - b).collect();
            if e.iter().any(|&x| x < 0) {
                return None;
            }
            let qc = c.exact_div(lc)?;
            r = &r - &d.mul_monomial(&e, &qc);
            q.add_term(e, qc);
        }
        Some(q)
    }
}

impl MultiPoly {
    pub fn from_i64(vars: &Vars, c: i64) -> Self {
        Self::constant(vars, BigInt::from(c))
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map_coefficients(|c| BigRational::from_integer(c.clone()))
    }

    /// Sets variable `v` to a rational value.
    pub fn evaluate(&self, v: usize, value: &BigRational) -> Result<RatPoly> {
        let mut out = RatPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let k = e[v];
            if k < 0 && value.is_zero() {
                return Err(Error::InvalidParameter(format!(
                    "{} = 0 under a negative power",
                    self.vars[v]
                )));
            }
            let f = num_traits::pow::Pow::pow(value, k);
            let mut rest = e.clone();
            rest[v] = 0;
            out.add_term(rest, BigRational::from_integer(c.clone()) * f);
        }
        Ok(out)
    }

    /// Integer content (gcd of coefficients, nonnegative).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

impl RatPoly {
    /// Integer polynomial when every coefficient is integral.
    pub fn to_integer(&self) -> Option<MultiPoly> {
        if self.terms.values().all(|c| c.is_integer()) {
            Some(self.map_coefficients(|c| c.to_integer()))
        } else {
            None
        }
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        self.check_ring(rhs);
        let mut out = Polynomial::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.map_coefficients(|c| -c.clone())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<C: Coefficient> $tr for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$f(&rhs)
            }
        }
        impl<C: Coefficient> $tr<&Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $f(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                (&self).$f(rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

fn fmt_monomial(vars: &[String], e: &[i32]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(e)
        .filter(|(_, &k)| k != 0)
        .map(|(v, &k)| {
            if k == 1 {
                v.clone()
            } else {
                format!("{v}^{k}")
            }
        })
        .collect();
    parts.join("*")
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let m = fmt_monomial(&self.vars, e);
            if m.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&m)?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

pub use parse::parse_poly;

#[cfg(test)]
mod tests {
    use super::*;

    fn st() -> Vars {
        vars(&["s", "t"])
    }

    fn p(text: &str) -> MultiPoly {
        parse_poly(text, &st()).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("s - t") * &p("s + t"), p("s^2 - t^2"));
        assert_eq!((&p("s - t") * &p("s + t")).to_string(), "s^2 - t^2");
    }

    #[test]
    fn laurent_inverse() {
        assert_eq!(&p("t") * &p("t^-1"), p("1"));
        assert_eq!(p("t^-1 - 1 + t").to_string(), "t - 1 + t^-1");
    }

    #[test]
    fn printing_order() {
        assert_eq!(p("t^2 + s^2 - 4*s*t").to_string(), "s^2 - 4*s*t + t^2");
        assert_eq!(p("-2 + 3s").to_string(), "3*s - 2");
        assert_eq!(MultiPoly::zero(&st()).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = p("s^3 - t^3");
        assert_eq!(a.div_exact(&p("s - t")).unwrap(), p("s^2 + s*t + t^2"));
        assert!(a.div_exact(&p("s + t")).is_none());
        assert_eq!(p("2*s + 2*t").div_exact(&p("2")).unwrap(), p("s + t"));
        assert_eq!(p("s*t^-1 + 1").div_exact(&p("s + t")).unwrap(), p("t^-1"));
    }

    #[test]
    fn substitution_and_evaluation() {
        let q = p("s^2 + s*t").substitute(0, &p("1")).unwrap();
        assert_eq!(q, p("1 + t"));
        let r = p("s^-1 + t").substitute(0, &p("t")).unwrap();
        assert_eq!(r, p("t^-1 + t"));
        assert!(p("s^-1").substitute(0, &p("s + t")).is_err());
        let half = BigRational::new(1.into(), 2.into());
        let e = p("2*s + t").evaluate(0, &half).unwrap();
        assert_eq!(e.to_integer().unwrap(), p("1 + t"));
        assert!(p("s^-1").evaluate(0, &BigRational::zero()).is_err());
    }

    #[test]
    fn alexander_exchange_identities() {
        let v = vars(&["t", "s", "a", "b", "x", "y", "z"]);
        let q = |s: &str| parse_poly(s, &v).unwrap();
        let under = |x: &MultiPoly, y: &MultiPoly| &(&q("t") * x) + &(&q("s - t") * y);
        let over = |x: &MultiPoly, _y: &MultiPoly| &q("s") * x;
        let udot = |x: &MultiPoly, y: &MultiPoly| &(&q("a") * x) + &(&q("s - a") * y);
        let (x, y, z) = (q("x"), q("y"), q("z"));
        // (x ▷̲ y) ●̲ (z ▷̲ y) = (x ●̲ z) ▷̲ (y ▷̄ z)
        let lhs = udot(&under(&x, &y), &under(&z, &y));
        let rhs = under(&udot(&x, &z), &over(&y, &z));
        assert_eq!(lhs, rhs);
    }
}
