//! Polynomial invariants from Alexander and Jablan presentations.

mod were;

use crate::diagram::{CrossingKind, Diagram, DiagramClass, Relation};
use crate::error::{Error, Result};
use crate::poly::{
    gcd_all, gcd_up_to_units, groebner, normalize, vars, MonomialOrder, MultiPoly, PolyMatrix,
    RatPoly, UnitGroup, UnitNormalForm, Vars,
};
use crate::psyquandle::Op;

pub use were::{
    symmetrize, weighted_sum, were_weighted_sum, WeReGroup, WeReMatch, WeReReport, WeReTarget,
    DEFAULT_WERE_BOUND,
};

/// `t, s, a, b`
pub fn alexander_vars() -> Vars {
    vars(&["t", "s", "a", "b"])
}

/// `s, t`
pub fn jablan_vars() -> Vars {
    vars(&["s", "t"])
}

pub fn laurent_t_vars() -> Vars {
    vars(&["t"])
}

/// `t, s, a, b` followed by their inverses as independent symbols.
pub fn groebner_vars() -> Vars {
    vars(&["t", "s", "a", "b", "tinv", "sinv", "ainv", "binv"])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderPresentation {
    pub matrix: PolyMatrix,
    /// The relation encoded by each row.
    pub relations: Vec<Relation>,
}

fn presentation_rows(
    d: &Diagram,
    v: &Vars,
    coef: impl Fn(Op) -> (MultiPoly, MultiPoly, MultiPoly),
) -> Result<(PolyMatrix, Vec<Relation>)> {
    d.require_unmixed()?;
    let rels = d.crossing_relations();
    let mut m = PolyMatrix::zeros(v, rels.len(), d.color_slots());
    for (i, r) in rels.iter().enumerate() {
        let (cl, cr, ct) = coef(r.op);
        m.add_to(i, r.left as usize - 1, &cl);
        m.add_to(i, r.right as usize - 1, &cr);
        m.add_to(i, r.target as usize - 1, &ct);
    }
    Ok((m, rels))
}

/// One row per coloring equation `target = left op right`, written as
/// `c_l x_left + c_r x_right - x_target`; one column per semiarc (and per
/// crossing-free component).
pub fn alexander_presentation(d: &Diagram) -> Result<AlexanderPresentation> {
    let v = alexander_vars();
    let x = |name: &str| MultiPoly::var_named(&v, name).unwrap();
    let (t, s, a, b) = (x("t"), x("s"), x("a"), x("b"));
    let zero = MultiPoly::zero(&v);
    let minus_one = MultiPoly::from_i64(&v, -1);
    let (matrix, relations) = presentation_rows(d, &v, |op| {
        let (l, r) = match op {
            Op::UnderTri => (t.clone(), &s - &t),
            Op::OverTri => (s.clone(), zero.clone()),
            Op::UnderDot => (a.clone(), &s - &a),
            Op::OverDot => (b.clone(), &s - &b),
        };
        (l, r, minus_one.clone())
    })?;
    Ok(AlexanderPresentation { matrix, relations })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JablanMatrix {
    pub matrix: PolyMatrix,
    /// Rows multiplied by 2 to clear the halves in `a = b = (s+t)/2`.
    pub doubled_rows: Vec<usize>,
}

/// The presentation at `a = b = (s+t)/2`, dot rows doubled.
pub fn jablan_matrix(d: &Diagram) -> Result<JablanMatrix> {
    let v = jablan_vars();
    let s = MultiPoly::var(&v, 0);
    let t = MultiPoly::var(&v, 1);
    let zero = MultiPoly::zero(&v);
    let (matrix, rels) = presentation_rows(d, &v, |op| match op {
        Op::UnderTri => (t.clone(), &s - &t, MultiPoly::from_i64(&v, -1)),
        Op::OverTri => (s.clone(), zero.clone(), MultiPoly::from_i64(&v, -1)),
        Op::UnderDot | Op::OverDot => (&s + &t, &s - &t, MultiPoly::from_i64(&v, -2)),
    })?;
    let doubled_rows = rels
        .iter()
        .enumerate()
        .filter(|(_, r)| matches!(r.op, Op::UnderDot | Op::OverDot))
        .map(|(i, _)| i)
        .collect();
    Ok(JablanMatrix {
        matrix,
        doubled_rows,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JablanPolynomial {
    pub normal_form: UnitNormalForm,
    /// gcd of the codimension-1 minors before unit normalization.
    pub raw_gcd: MultiPoly,
    pub homogeneous: bool,
    /// Coefficient of `s^(n-k) t^k` equals that of `s^k t^(n-k)`.
    pub symmetric: bool,
    /// The first nonzero minor alone gives the same normal form.
    pub single_minor_agrees: bool,
    pub minor_count: usize,
}

impl JablanPolynomial {
    pub fn polynomial(&self) -> &MultiPoly {
        &self.normal_form.polynomial
    }
}

fn swap_st(p: &MultiPoly) -> MultiPoly {
    MultiPoly::from_terms(
        p.vars(),
        p.terms().map(|(e, c)| (vec![e[1], e[0]], c.clone())),
    )
}

pub fn jablan_polynomial(d: &Diagram) -> Result<JablanPolynomial> {
    let jm = jablan_matrix(d)?;
    let reduced = jm.matrix.eliminate_unit_pivots();
    let minors = reduced.codim_minors(1);
    let v = jablan_vars();
    let units = UnitGroup::jablan(&v);
    let raw_gcd = if minors.is_empty() {
        MultiPoly::zero(&v)
    } else {
        gcd_all(&minors).unwrap()
    };
    let normal_form = if minors.is_empty() {
        normalize(&raw_gcd, &units)
    } else {
        gcd_up_to_units(&minors, &units)?
    };
    let single_minor_agrees = match minors.iter().find(|m| !m.is_zero()) {
        Some(m) => normalize(m, &units).polynomial == normal_form.polynomial,
        None => normal_form.polynomial.is_zero(),
    };
    let p = &normal_form.polynomial;
    Ok(JablanPolynomial {
        homogeneous: p.is_homogeneous(),
        symmetric: swap_st(p) == *p,
        single_minor_agrees,
        minor_count: minors.len(),
        raw_gcd,
        normal_form,
    })
}

/// `p(s, t)` at `s = 1` as a polynomial in `t` alone.
pub(crate) fn at_s_equals_one(p: &MultiPoly) -> MultiPoly {
    let tv = laurent_t_vars();
    let mut out = MultiPoly::zero(&tv);
    for (e, c) in p.terms() {
        out.add_term(vec![e[1]], c.clone());
    }
    out
}

/// The Jablan polynomial at `s = 1`, up to `±2^i t^k`.
pub fn classical_alexander(d: &Diagram) -> Result<UnitNormalForm> {
    if d.class() != DiagramClass::Classical {
        return Err(Error::NotClassical);
    }
    let j = jablan_polynomial(d)?;
    let units = UnitGroup {
        two: true,
        monomials: true,
        factors: Vec::new(),
    };
    Ok(normalize(&at_s_equals_one(&j.raw_gcd), &units))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerInvariant {
    pub codimension: usize,
    pub order: MonomialOrder,
    /// Reduced basis over the rationals.
    pub basis: Vec<RatPoly>,
    /// gcd of the minors together with the relation polynomials.
    pub generator_gcd: UnitNormalForm,
    /// gcd of the minors alone in `t, s, a, b`.
    pub minor_gcd: UnitNormalForm,
    pub generator_count: usize,
}

pub const COEFFICIENT_FIELD: &str = "Q";

/// `t tinv - 1`, ..., `s + t - a - b` in [`groebner_vars`].
pub fn relation_polynomials() -> Vec<MultiPoly> {
    let g = groebner_vars();
    let x = |i: usize| MultiPoly::var(&g, i);
    let one = MultiPoly::one(&g);
    let mut out: Vec<MultiPoly> = (0..4).map(|i| &(&x(i) * &x(i + 4)) - &one).collect();
    out.push(&(&x(1) + &x(0)) - &(&x(2) + &x(3)));
    out
}

pub fn alexander_groebner(
    d: &Diagram,
    k: usize,
    order: MonomialOrder,
) -> Result<GroebnerInvariant> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "codimension must be at least 1".into(),
        ));
    }
    let pres = alexander_presentation(d)?;
    let av = alexander_vars();
    let reduced = pres.matrix.eliminate_monomial_pivots(&[0, 1, 2, 3]);
    // b = s + t - a modulo the last relation
    let b_sub = &(&MultiPoly::var(&av, 1) + &MultiPoly::var(&av, 0)) - &MultiPoly::var(&av, 2);
    let mut minors: Vec<MultiPoly> = reduced
        .codim_minors(k)
        .into_iter()
        .map(|m| m.substitute(3, &b_sub).expect("polynomial substitution"))
        .filter(|m| !m.is_zero())
        .collect();
    minors.sort_by_key(|m| m.to_string());
    minors.dedup();
    let minor_gcd = if minors.is_empty() {
        normalize(&MultiPoly::zero(&av), &UnitGroup::laurent())
    } else {
        gcd_up_to_units(&minors, &UnitGroup::laurent())?
    };
    let gv = groebner_vars();
    let mut gens: Vec<MultiPoly> = minors.iter().map(|m| m.embed(&gv)).collect::<Result<_>>()?;
    gens.extend(relation_polynomials());
    let generator_gcd = gcd_up_to_units(&gens, &UnitGroup::laurent())?;
    let rational: Vec<RatPoly> = gens.iter().map(|g| g.to_rational()).collect();
    let basis = groebner(&rational, order)?;
    Ok(GroebnerInvariant {
        codimension: k,
        order,
        basis,
        generator_gcd,
        minor_gcd,
        generator_count: gens.len(),
    })
}

/// Counts the diagram's precrossings and singular crossings.
pub fn special_crossings(d: &Diagram) -> usize {
    d.count_kind(CrossingKind::Precrossing) + d.count_kind(CrossingKind::Singular)
}
