//! Weighted sums of classical-resolution polynomials compared against the
//! Jablan polynomial at `s = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use super::{at_s_equals_one, classical_alexander, jablan_polynomial, laurent_t_vars};
use crate::diagram::{CrossingKind, Diagram};
use crate::error::{Error, Result};
use crate::poly::{normalize, MultiPoly, UnitGroup};

pub const DEFAULT_WERE_BOUND: usize = 12;
const SHIFT_WINDOW: i32 = 2;
const MAX_SEARCH_GROUPS: usize = 6;

/// Centers a Laurent polynomial in `t` so that it equals its image under
/// `t -> t^-1`, with positive leading coefficient. `None` if impossible.
pub fn symmetrize(p: &MultiPoly) -> Option<MultiPoly> {
    if p.is_zero() {
        return Some(p.clone());
    }
    let lo = p.min_degree_in(0)?;
    let hi = p.degree_in(0)?;
    if (lo + hi) % 2 != 0 {
        return None;
    }
    let mut q = p.mul_monomial(&[-(lo + hi) / 2], &BigInt::from(1));
    if q.leading_coefficient().is_some_and(|c| c.is_negative()) {
        q = -q;
    }
    let mirrored =
        MultiPoly::from_terms(q.vars(), q.terms().map(|(e, c)| (vec![-e[0]], c.clone())));
    (mirrored == q).then_some(q)
}

fn symmetric_or_raw(p: &MultiPoly) -> MultiPoly {
    symmetrize(p).unwrap_or_else(|| {
        let nf = normalize(p, &UnitGroup::laurent());
        nf.polynomial
    })
}

/// `sum weight * sign * t^shift * p` over the given terms.
pub fn weighted_sum(terms: &[(i64, i8, i32, &MultiPoly)]) -> MultiPoly {
    let tv = laurent_t_vars();
    let mut acc = MultiPoly::zero(&tv);
    for &(w, sign, shift, p) in terms {
        let c = BigInt::from(w * sign as i64);
        acc = &acc + &p.mul_monomial(&[shift], &c);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeReGroup {
    /// Symmetrized classical polynomial shared by the group.
    pub polynomial: MultiPoly,
    pub words: Vec<String>,
    /// Sum of `2^-k` over the group.
    pub weight: BigRational,
    /// Weight after clearing denominators to coprime integers.
    pub cleared_weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeReTarget {
    pub label: &'static str,
    pub polynomial: MultiPoly,
    pub symmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeReMatch {
    pub target: &'static str,
    pub signs: Vec<i8>,
    pub shifts: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeReReport {
    pub precrossings: usize,
    /// Resolution word and its symmetrized classical polynomial.
    pub resolutions: Vec<(String, MultiPoly)>,
    pub groups: Vec<WeReGroup>,
    pub targets: Vec<WeReTarget>,
    pub matches: Vec<WeReMatch>,
    /// False when there were too many groups to search.
    pub searched: bool,
}

pub fn were_weighted_sum(d: &Diagram, bound: usize) -> Result<WeReReport> {
    if d.count_kind(CrossingKind::Singular) > 0 {
        return Err(Error::NotPseudolink);
    }
    let k = d.precrossing_count();
    if k > bound {
        return Err(Error::BoundExceeded {
            what: "precrossings",
            value: k,
            bound,
        });
    }
    let resolved = d.resolutions()?;
    let resolutions: Vec<(String, MultiPoly)> = resolved
        .par_iter()
        .map(|(r, word)| {
            let nf = classical_alexander(r)?;
            Ok((word.clone(), symmetric_or_raw(&nf.polynomial)))
        })
        .collect::<Result<_>>()?;

    let mut groups: Vec<WeReGroup> = Vec::new();
    let unit_weight = BigRational::new(BigInt::from(1), BigInt::from(1u64 << k));
    for (word, p) in &resolutions {
        match groups.iter_mut().find(|g| &g.polynomial == p) {
            Some(g) => {
                g.words.push(word.clone());
                g.weight += &unit_weight;
            }
            None => groups.push(WeReGroup {
                polynomial: p.clone(),
                words: vec![word.clone()],
                weight: unit_weight.clone(),
                cleared_weight: 0,
            }),
        }
    }
    let common = groups
        .iter()
        .map(|g| g.words.len() as i64)
        .fold(0i64, |a, b| a.gcd(&b));
    for g in &mut groups {
        g.cleared_weight = g.words.len() as i64 / common;
    }

    let j = jablan_polynomial(d)?;
    let keep_sum = UnitGroup {
        two: true,
        monomials: true,
        factors: Vec::new(),
    };
    let with_units = normalize(&j.raw_gcd, &keep_sum).polynomial;
    let mut targets = Vec::new();
    for (label, p) in [
        ("with-s+t", with_units),
        ("reduced", j.normal_form.polynomial.clone()),
    ] {
        let at_one = normalize(&at_s_equals_one(&p), &keep_sum).polynomial;
        let sym = symmetrize(&at_one);
        let polynomial = sym.clone().unwrap_or(at_one);
        if targets
            .iter()
            .any(|t: &WeReTarget| t.polynomial == polynomial)
        {
            continue;
        }
        targets.push(WeReTarget {
            label,
            polynomial,
            symmetric: sym.is_some(),
        });
    }

    let searched = groups.len() <= MAX_SEARCH_GROUPS;
    let mut matches = Vec::new();
    if searched {
        let choices: Vec<(i8, i32)> = [1i8, -1]
            .into_iter()
            .flat_map(|s| (-SHIFT_WINDOW..=SHIFT_WINDOW).map(move |h| (s, h)))
            .collect();
        let g = groups.len();
        let mut idx = vec![0usize; g];
        loop {
            let terms: Vec<(i64, i8, i32, &MultiPoly)> = (0..g)
                .map(|i| {
                    let (s, h) = choices[idx[i]];
                    (groups[i].cleared_weight, s, h, &groups[i].polynomial)
                })
                .collect();
            let sum = weighted_sum(&terms);
            for t in &targets {
                if sum == t.polynomial {
                    matches.push(WeReMatch {
                        target: t.label,
                        signs: terms.iter().map(|x| x.1).collect(),
                        shifts: terms.iter().map(|x| x.2).collect(),
                    });
                }
            }
            let Some(pos) = (0..g).rev().find(|&i| idx[i] + 1 < choices.len()) else {
                break;
            };
            idx[pos] += 1;
            for x in idx.iter_mut().skip(pos + 1) {
                *x = 0;
            }
        }
    }
    Ok(WeReReport {
        precrossings: k,
        resolutions,
        groups,
        targets,
        matches,
        searched,
    })
}
