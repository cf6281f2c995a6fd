//! Polynomial gcd over the integers and normal forms up to units.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{vars, MultiPoly, Vars};
use crate::error::{Error, Result};

fn positive_leading(p: MultiPoly) -> MultiPoly {
    match p.leading_coefficient() {
        Some(c) if c.is_negative() => -p,
        _ => p,
    }
}

fn shift_nonnegative(p: &MultiPoly) -> MultiPoly {
    let m: Vec<i32> = p.min_exponents().iter().map(|x| -x).collect();
    p.mul_monomial(&m, &BigInt::one())
}

/// Coefficients of `p` as a polynomial in variable `v`, indexed by degree.
fn coeffs_in(p: &MultiPoly, v: usize) -> Vec<MultiPoly> {
    let d = p.degree_in(v).unwrap_or(0).max(0) as usize;
    let mut out = vec![MultiPoly::zero(p.vars()); d + 1];
    for (e, c) in p.terms() {
        let mut rest = e.clone();
        let k = rest[v] as usize;
        rest[v] = 0;
        out[k].add_term(rest, c.clone());
    }
    out
}

fn deg(p: &MultiPoly, v: usize) -> i32 {
    p.degree_in(v).unwrap_or(-1)
}

fn lead_in(p: &MultiPoly, v: usize) -> MultiPoly {
    coeffs_in(p, v).pop().unwrap()
}

fn content_in(p: &MultiPoly, v: usize) -> MultiPoly {
    coeffs_in(p, v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .fold(MultiPoly::zero(p.vars()), |g, c| gcd_rec(&g, &c))
}

fn primitive_in(p: &MultiPoly, v: usize) -> MultiPoly {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides")
}

fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let db = deg(b, v);
    let lcb = lead_in(b, v);
    let mut r = a.clone();
    while !r.is_zero() && deg(&r, v) >= db {
        let dr = deg(&r, v);
        let lcr = lead_in(&r, v);
        let mut e = vec![0; a.nvars()];
        e[v] = dr - db;
        r = &(&r * &lcb) - &(&lcr * &b.mul_monomial(&e, &BigInt::one()));
    }
    r
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return positive_leading(b.clone());
    }
    if b.is_zero() {
        return positive_leading(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        let g = a.content().gcd(&b.content());
        return MultiPoly::constant(a.vars(), g);
    }
    let v = (0..a.nvars())
        .find(|&v| deg(a, v) > 0 || deg(b, v) > 0)
        .expect("nonconstant");
    if deg(a, v) == 0 {
        return gcd_rec(a, &content_in(b, v));
    }
    if deg(b, v) == 0 {
        return gcd_rec(&content_in(a, v), b);
    }
    let g_content = gcd_rec(&content_in(a, v), &content_in(b, v));
    let (mut r0, mut r1) = (primitive_in(a, v), primitive_in(b, v));
    if deg(&r0, v) < deg(&r1, v) {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        let r = pseudo_remainder(&r0, &r1, v);
        if r.is_zero() {
            break;
        }
        if deg(&r, v) == 0 {
            r1 = MultiPoly::one(a.vars());
            break;
        }
        r0 = r1;
        r1 = primitive_in(&r, v);
    }
    let g = if r1.is_constant() {
        r1
    } else {
        primitive_in(&r1, v)
    };
    positive_leading(&g_content * &g)
}

/// Greatest common divisor, normalized to a positive leading coefficient.
/// Laurent inputs are first shifted to honest polynomials.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.has_negative_exponents() || b.has_negative_exponents() {
        gcd_rec(&shift_nonnegative(a), &shift_nonnegative(b))
    } else {
        gcd_rec(a, b)
    }
}

pub fn gcd_all(ps: &[MultiPoly]) -> Option<MultiPoly> {
    let first = ps.first()?;
    let mut g = MultiPoly::zero(first.vars());
    for p in ps {
        if p.is_zero() {
            continue;
        }
        g = gcd(&g, p);
        if g.is_constant() && g.constant_value().is_some_and(|c| c.is_one()) {
            break;
        }
    }
    Some(g)
}

/// Fast gcd for homogeneous polynomials in two variables: strip monomials,
/// set the second variable to 1, take a univariate gcd, rehomogenize.
/// `None` if the inputs are not of that shape.
pub fn gcd_homogeneous_bivariate(ps: &[MultiPoly]) -> Option<MultiPoly> {
    let first = ps.first()?;
    if first.nvars() != 2 || !ps.iter().all(|p| p.is_homogeneous()) {
        return None;
    }
    let sv = first.vars().clone();
    let x: Vars = vars(&["x"]);
    let mut g_uni = MultiPoly::zero(&x);
    let mut min_common: Option<Vec<i32>> = None;
    let laurent = ps.iter().any(|p| p.has_negative_exponents());
    for p in ps.iter().filter(|p| !p.is_zero()) {
        let m = if laurent {
            vec![0, 0]
        } else {
            p.min_exponents()
        };
        min_common = Some(match min_common {
            None => m.clone(),
            Some(c) => c.iter().zip(&m).map(|(a, b)| *a.min(b)).collect(),
        });
        let q = shift_nonnegative(p);
        let u = MultiPoly::from_terms(&x, q.terms().map(|(e, c)| (vec![e[0]], c.clone())));
        g_uni = gcd_rec(&g_uni, &u);
    }
    let Some(m) = min_common else {
        return Some(MultiPoly::zero(&sv));
    };
    let d = g_uni.degree_in(0).unwrap_or(0);
    let g = MultiPoly::from_terms(
        &sv,
        g_uni
            .terms()
            .map(|(e, c)| (vec![e[0], d - e[0]], c.clone())),
    );
    Some(positive_leading(g.mul_monomial(&m, &BigInt::one())))
}

/// What may be stripped from a polynomial as a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    pub two: bool,
    /// Monomials in the ring variables.
    pub monomials: bool,
    pub factors: Vec<MultiPoly>,
}

impl UnitGroup {
    pub fn signs_only() -> Self {
        UnitGroup {
            two: false,
            monomials: false,
            factors: Vec::new(),
        }
    }

    pub fn laurent() -> Self {
        UnitGroup {
            monomials: true,
            ..Self::signs_only()
        }
    }

    /// ±1, 2, s, t and s + t.
    pub fn jablan(st: &Vars) -> Self {
        let s_plus_t = &MultiPoly::var(st, 0) + &MultiPoly::var(st, 1);
        UnitGroup {
            two: true,
            monomials: true,
            factors: vec![s_plus_t],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitRecord {
    pub sign: i8,
    pub power_of_two: u32,
    pub monomial: Vec<i32>,
    pub factors: Vec<(MultiPoly, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitNormalForm {
    pub polynomial: MultiPoly,
    pub extracted: UnitRecord,
}

/// Divides out every unit of `units`; the result has a positive leading
/// coefficient. Applying it twice changes nothing.
pub fn normalize(p: &MultiPoly, units: &UnitGroup) -> UnitNormalForm {
    let mut q = p.clone();
    let mut rec = UnitRecord {
        sign: 1,
        power_of_two: 0,
        monomial: vec![0; p.nvars()],
        factors: Vec::new(),
    };
    if q.is_zero() {
        return UnitNormalForm {
            polynomial: q,
            extracted: rec,
        };
    }
    if units.monomials {
        rec.monomial = q.min_exponents();
        q = shift_nonnegative(&q);
    }
    if units.two {
        let two = BigInt::from(2);
        while q.content().is_even() {
            q = q.map_coefficients(|c| c / &two);
            rec.power_of_two += 1;
        }
    }
    for f in &units.factors {
        if f.is_constant() {
            continue;
        }
        let mut k = 0;
        while let Some(r) = q.div_exact(f) {
            q = r;
            k += 1;
        }
        if k > 0 {
            rec.factors.push((f.clone(), k));
        }
    }
    if q.leading_coefficient().is_some_and(|c| c.is_negative()) {
        q = -q;
        rec.sign = -1;
    }
    UnitNormalForm {
        polynomial: q,
        extracted: rec,
    }
}

/// Normalized gcd of a nonempty list. The all-zero list gives 0.
pub fn gcd_up_to_units(ps: &[MultiPoly], units: &UnitGroup) -> Result<UnitNormalForm> {
    if ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let g = gcd_homogeneous_bivariate(ps).unwrap_or_else(|| gcd_all(ps).unwrap());
    Ok(normalize(&g, units))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn st() -> Vars {
        vars(&["s", "t"])
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &st()).unwrap()
    }

    #[test]
    fn simple_gcds() {
        assert_eq!(gcd(&p("s^2 - t^2"), &p("s^2 - 2*s*t + t^2")), p("s - t"));
        assert_eq!(gcd(&p("6*s"), &p("4*s^2")), p("2*s"));
        assert_eq!(gcd(&p("s + 1"), &p("t + 1")), p("1"));
        assert_eq!(gcd(&p("0"), &p("-s")), p("s"));
    }

    #[test]
    fn three_variables() {
        let v = vars(&["x", "y", "z"]);
        let q = |s: &str| parse_poly(s, &v).unwrap();
        let f = q("x*y + z");
        let a = &f * &q("x - z^2");
        let b = &f * &q("y^2 + 3");
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn fast_path_matches_general() {
        let ps = [p("s^3 - t^3"), p("s^2*t - t^3"), p("2*s^4 - 2*s*t^3")];
        let fast = gcd_homogeneous_bivariate(&ps).unwrap();
        let slow = gcd_all(&ps).unwrap();
        assert_eq!(fast, slow);
        assert_eq!(fast, p("s - t"));
    }

    #[test]
    fn jablan_units() {
        let u = UnitGroup::jablan(&st());
        let nf = normalize(&p("-2*s*t*(s + t)^2*(s^2 + t^2)"), &u);
        assert_eq!(nf.polynomial, p("s^2 + t^2"));
        assert_eq!(nf.extracted.sign, -1);
        assert_eq!(nf.extracted.power_of_two, 1);
        assert_eq!(nf.extracted.monomial, vec![1, 1]);
        assert_eq!(nf.extracted.factors[0].1, 2);
        assert_eq!(normalize(&nf.polynomial, &u).polynomial, nf.polynomial);
    }

    #[test]
    fn empty_list_rejected() {
        assert!(gcd_up_to_units(&[], &UnitGroup::laurent()).is_err());
        let z = gcd_up_to_units(&[p("0")], &UnitGroup::laurent()).unwrap();
        assert!(z.polynomial.is_zero());
    }
}
