//! Oriented singular-link and pseudolink diagrams.
//!
//! A crossing record `K a b c d` lists the semiarcs at its four ends in the
//! order (SW, SE, NW, NE), drawn with both strands pointing upward. One strand
//! runs SW to NE, the other SE to NW. At `X+` the SW-NE strand passes over, at
//! `X-` the SE-NW strand does. `S` is a singular crossing, `P` a precrossing.
//!
//! Colors are read across the crossing from its left side (NW, SW) to its
//! right side (NE, SE):
//!
//! * `X+`: S(NW, SW) = (NE, SE)
//! * `X-`: S(SW, NW) = (SE, NE)
//! * `S`, `P`: S'(NW, SW) = (NE, SE)
//!
//! where S(x,y) = (y ▷̄ x, x ▷̲ y) and S'(x,y) = (y ●̄ x, x ●̲ y).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::psyquandle::Op;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingKind {
    PositiveClassical,
    NegativeClassical,
    Singular,
    Precrossing,
}

impl CrossingKind {
    pub fn code(self) -> &'static str {
        match self {
            CrossingKind::PositiveClassical => "X+",
            CrossingKind::NegativeClassical => "X-",
            CrossingKind::Singular => "S",
            CrossingKind::Precrossing => "P",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "X+" => Some(CrossingKind::PositiveClassical),
            "X-" => Some(CrossingKind::NegativeClassical),
            "S" => Some(CrossingKind::Singular),
            "P" => Some(CrossingKind::Precrossing),
            _ => None,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            CrossingKind::PositiveClassical | CrossingKind::NegativeClassical
        )
    }
}

impl fmt::Display for CrossingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub kind: CrossingKind,
    pub in_left: u32,
    pub in_right: u32,
    pub out_left: u32,
    pub out_right: u32,
}

/// `x_target = x_left op x_right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub target: u32,
    pub left: u32,
    pub op: Op,
    pub right: u32,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x{} = x{} {} x{}",
            self.target,
            self.left,
            self.op.symbol(),
            self.right
        )
    }
}

impl Crossing {
    pub fn new(kind: CrossingKind, ends: [u32; 4]) -> Self {
        Crossing {
            kind,
            in_left: ends[0],
            in_right: ends[1],
            out_left: ends[2],
            out_right: ends[3],
        }
    }

    pub fn ends(&self) -> [u32; 4] {
        [self.in_left, self.in_right, self.out_left, self.out_right]
    }

    /// The two coloring equations as `(target, left, op, right)` slot indices
    /// into `ends()`.
    pub fn slot_relations(&self) -> [(usize, usize, Op, usize); 2] {
        const IL: usize = 0;
        const IR: usize = 1;
        const OL: usize = 2;
        const OR: usize = 3;
        match self.kind {
            CrossingKind::PositiveClassical => {
                [(OR, IL, Op::OverTri, OL), (IR, OL, Op::UnderTri, IL)]
            }
            CrossingKind::NegativeClassical => {
                [(IR, OL, Op::OverTri, IL), (OR, IL, Op::UnderTri, OL)]
            }
            CrossingKind::Singular | CrossingKind::Precrossing => {
                [(OR, IL, Op::OverDot, OL), (IR, OL, Op::UnderDot, IL)]
            }
        }
    }

    /// The two coloring equations at this crossing.
    pub fn relations(&self) -> [Relation; 2] {
        let e = self.ends();
        self.slot_relations().map(|(t, l, op, r)| Relation {
            target: e[t],
            left: e[l],
            op,
            right: e[r],
        })
    }

    fn with_kind(mut self, kind: CrossingKind) -> Self {
        self.kind = kind;
        self
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            self.kind, self.in_left, self.in_right, self.out_left, self.out_right
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    ZeroId { crossing: usize },
    DuplicateInCrossing { crossing: usize, semiarc: u32 },
    InputCount { semiarc: u32, count: usize },
    OutputCount { semiarc: u32, count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroId { crossing } => {
                write!(f, "crossing {} uses semiarc id 0", crossing + 1)
            }
            Violation::DuplicateInCrossing { crossing, semiarc } => write!(
                f,
                "crossing {} repeats semiarc {} within its inputs or outputs",
                crossing + 1,
                semiarc
            ),
            Violation::InputCount { semiarc, count } => write!(
                f,
                "semiarc {} appears {} times as an input (expected 1)",
                semiarc, count
            ),
            Violation::OutputCount { semiarc, count } => write!(
                f,
                "semiarc {} appears {} times as an output (expected 1)",
                semiarc, count
            ),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramClass {
    Classical,
    Singular,
    Pseudo,
    Mixed,
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagramClass::Classical => "classical",
            DiagramClass::Singular => "singular",
            DiagramClass::Pseudo => "pseudo",
            DiagramClass::Mixed => "mixed",
        })
    }
}

/// Local moves used to grow a diagram without changing the link it represents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// Positive curl.
    R1Positive,
    /// Negative curl.
    R1Negative,
    /// A finger of the strand pushed over an earlier part of itself.
    R2Over,
    /// Same finger, pushed underneath.
    R2Under,
    /// Curl through a precrossing.
    PI,
    /// Conjugate a singular crossing or precrossing by a classical crossing.
    PsII,
}

impl Move {
    pub const ALL: [Move; 6] = [
        Move::R1Positive,
        Move::R1Negative,
        Move::R2Over,
        Move::R2Under,
        Move::PI,
        Move::PsII,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Move::R1Positive => "R1+",
            Move::R1Negative => "R1-",
            Move::R2Over => "R2",
            Move::R2Under => "R2'",
            Move::PI => "pI",
            Move::PsII => "p/sII",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Move::ALL
            .iter()
            .copied()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown move {s}")))
    }
}

/// Where a move is applied.
///
/// Semiarc ids above `semiarc_count` name the crossing-free components in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Site {
    Semiarc(u32),
    Crossing(usize),
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Semiarc(e) => write!(f, "semiarc {e}"),
            Site::Crossing(i) => write!(f, "crossing {}", i + 1),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    semiarc_count: usize,
    closed_components: usize,
}

impl Diagram {
    /// Builds and validates a diagram.
    pub fn new(crossings: Vec<Crossing>, closed_components: usize) -> Result<Self> {
        let d = Diagram::unchecked(crossings, closed_components);
        let v = d.validate();
        if v.is_empty() {
            Ok(d)
        } else {
            Err(Error::InvalidDiagram(v))
        }
    }

    /// Builds a diagram without validation. `validate` reports what is wrong.
    pub fn unchecked(crossings: Vec<Crossing>, closed_components: usize) -> Self {
        let semiarc_count = crossings.iter().flat_map(|c| c.ends()).max().unwrap_or(0) as usize;
        Diagram {
            crossings,
            semiarc_count,
            closed_components,
        }
    }

    pub fn unknot() -> Self {
        Diagram::unchecked(Vec::new(), 1)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn semiarc_count(&self) -> usize {
        self.semiarc_count
    }

    pub fn closed_components(&self) -> usize {
        self.closed_components
    }

    /// Semiarcs plus one slot per crossing-free component.
    pub fn color_slots(&self) -> usize {
        self.semiarc_count + self.closed_components
    }

    pub fn count_kind(&self, kind: CrossingKind) -> usize {
        self.crossings.iter().filter(|c| c.kind == kind).count()
    }

    pub fn precrossing_count(&self) -> usize {
        self.count_kind(CrossingKind::Precrossing)
    }

    pub fn validate(&self) -> Vec<Violation> {
        let n = self.semiarc_count;
        let mut ins = vec![0usize; n + 1];
        let mut outs = vec![0usize; n + 1];
        let mut out = Vec::new();
        for (i, c) in self.crossings.iter().enumerate() {
            if c.ends().contains(&0) {
                out.push(Violation::ZeroId { crossing: i });
                continue;
            }
            if c.in_left == c.in_right {
                out.push(Violation::DuplicateInCrossing {
                    crossing: i,
                    semiarc: c.in_left,
                });
            }
            if c.out_left == c.out_right {
                out.push(Violation::DuplicateInCrossing {
                    crossing: i,
                    semiarc: c.out_left,
                });
            }
            ins[c.in_left as usize] += 1;
            ins[c.in_right as usize] += 1;
            outs[c.out_left as usize] += 1;
            outs[c.out_right as usize] += 1;
        }
        for e in 1..=n {
            if ins[e] != 1 {
                out.push(Violation::InputCount {
                    semiarc: e as u32,
                    count: ins[e],
                });
            }
            if outs[e] != 1 {
                out.push(Violation::OutputCount {
                    semiarc: e as u32,
                    count: outs[e],
                });
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn class(&self) -> DiagramClass {
        let s = self.count_kind(CrossingKind::Singular) > 0;
        let p = self.precrossing_count() > 0;
        match (s, p) {
            (false, false) => DiagramClass::Classical,
            (true, false) => DiagramClass::Singular,
            (false, true) => DiagramClass::Pseudo,
            (true, true) => DiagramClass::Mixed,
        }
    }

    /// Errors on mixed diagrams.
    pub fn require_unmixed(&self) -> Result<DiagramClass> {
        match self.class() {
            DiagramClass::Mixed => Err(Error::MixedDiagram),
            c => Ok(c),
        }
    }

    pub fn crossing_relations(&self) -> Vec<Relation> {
        self.crossings.iter().flat_map(|c| c.relations()).collect()
    }

    /// Number of link components, counting crossing-free ones.
    pub fn component_count(&self) -> usize {
        let n = self.semiarc_count;
        // next[e] = semiarc following e along its strand
        let mut next = vec![0u32; n + 1];
        for c in &self.crossings {
            next[c.in_left as usize] = c.out_right;
            next[c.in_right as usize] = c.out_left;
        }
        let mut seen = vec![false; n + 1];
        let mut count = self.closed_components;
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                e = next[e] as usize;
            }
        }
        count
    }

    /// Every precrossing replaced by `+` or `-`, in lexicographic word order.
    pub fn resolutions(&self) -> Result<Vec<(Diagram, String)>> {
        if self.count_kind(CrossingKind::Singular) > 0 {
            return Err(Error::NotPseudolink);
        }
        let pre: Vec<usize> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(_, c)| c.kind == CrossingKind::Precrossing)
            .map(|(i, _)| i)
            .collect();
        let k = pre.len();
        if k > 24 {
            return Err(Error::BoundExceeded {
                what: "precrossings",
                value: k,
                bound: 24,
            });
        }
        let mut out = Vec::with_capacity(1 << k);
        for mask in 0u32..(1u32 << k) {
            let mut d = self.clone();
            let mut word = String::with_capacity(k);
            for (j, &i) in pre.iter().enumerate() {
                let negative = mask >> (k - 1 - j) & 1 == 1;
                let kind = if negative {
                    CrossingKind::NegativeClassical
                } else {
                    CrossingKind::PositiveClassical
                };
                word.push(if negative { '-' } else { '+' });
                d.crossings[i] = d.crossings[i].with_kind(kind);
            }
            out.push((d, word));
        }
        Ok(out)
    }

    /// The resolution with every precrossing set to `kind`.
    pub fn resolve_all(&self, kind: CrossingKind) -> Result<Diagram> {
        if self.count_kind(CrossingKind::Singular) > 0 {
            return Err(Error::NotPseudolink);
        }
        let mut d = self.clone();
        for c in &mut d.crossings {
            if c.kind == CrossingKind::Precrossing {
                *c = c.with_kind(kind);
            }
        }
        Ok(d)
    }

    /// Applies a local move at `site`, returning a larger diagram of the same link.
    pub fn insert_move(&self, mv: Move, site: Site) -> Result<Diagram> {
        match mv {
            Move::PsII => {
                let Site::Crossing(i) = site else {
                    return Err(Error::MoveNotApplicable(
                        mv.to_string(),
                        "site must be a crossing".into(),
                    ));
                };
                self.conjugate_crossing(i)
            }
            _ => {
                let Site::Semiarc(e) = site else {
                    return Err(Error::MoveNotApplicable(
                        mv.to_string(),
                        "site must be a semiarc".into(),
                    ));
                };
                if mv == Move::PI && self.count_kind(CrossingKind::Singular) > 0 {
                    return Err(Error::MoveNotApplicable(
                        mv.to_string(),
                        "pI applies only to pseudolink diagrams".into(),
                    ));
                }
                self.splice(e, mv)
            }
        }
    }

    fn splice(&self, e: u32, mv: Move) -> Result<Diagram> {
        let n = self.semiarc_count as u32;
        let mut crossings = self.crossings.clone();
        let mut closed = self.closed_components;
        let (entry, exit, mut fresh);
        if e >= 1 && e <= n {
            entry = e;
            exit = n + 1;
            fresh = n + 2;
            // the end where e enters a crossing now receives the exit semiarc
            let c = crossings
                .iter_mut()
                .find(|c| c.in_left == e || c.in_right == e)
                .ok_or_else(|| Error::UnknownSite(format!("semiarc {e}")))?;
            if c.in_left == e {
                c.in_left = exit;
            } else {
                c.in_right = exit;
            }
        } else if e > n && (e - n) as usize <= closed {
            closed -= 1;
            entry = n + 1;
            exit = entry;
            fresh = n + 2;
        } else {
            return Err(Error::UnknownSite(format!("semiarc {e}")));
        }
        let mut id = || {
            fresh += 1;
            fresh - 1
        };
        use CrossingKind::*;
        match mv {
            Move::R1Positive | Move::R1Negative | Move::PI => {
                let kind = match mv {
                    Move::R1Positive => PositiveClassical,
                    Move::R1Negative => NegativeClassical,
                    _ => Precrossing,
                };
                let lobe = id();
                crossings.push(Crossing::new(kind, [entry, lobe, exit, lobe]));
            }
            Move::R2Over | Move::R2Under => {
                let (m, w, v) = (id(), id(), id());
                let (first, second) = if mv == Move::R2Over {
                    (NegativeClassical, PositiveClassical)
                } else {
                    (PositiveClassical, NegativeClassical)
                };
                crossings.push(Crossing::new(first, [entry, v, exit, m]));
                crossings.push(Crossing::new(second, [w, m, w, v]));
            }
            Move::PsII => unreachable!(),
        }
        Diagram::new(crossings, closed)
    }

    fn conjugate_crossing(&self, i: usize) -> Result<Diagram> {
        let c = *self
            .crossings
            .get(i)
            .ok_or_else(|| Error::UnknownSite(format!("crossing {}", i + 1)))?;
        if c.kind.is_classical() {
            return Err(Error::MoveNotApplicable(
                Move::PsII.to_string(),
                "site must be a singular crossing or precrossing".into(),
            ));
        }
        let n = self.semiarc_count as u32;
        let (p1, p2, q1, q2) = (n + 1, n + 2, n + 3, n + 4);
        let mut crossings = self.crossings.clone();
        crossings[i] = Crossing::new(
            CrossingKind::PositiveClassical,
            [c.in_left, c.in_right, p1, p2],
        );
        crossings.insert(i + 1, Crossing::new(c.kind, [p1, p2, q1, q2]));
        crossings.insert(
            i + 2,
            Crossing::new(
                CrossingKind::NegativeClassical,
                [q1, q2, c.out_left, c.out_right],
            ),
        );
        Diagram::new(crossings, self.closed_components)
    }

    /// Side-by-side union; `other`'s semiarcs are shifted past ours.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let shift = self.semiarc_count as u32;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| {
            let e = c.ends();
            Crossing::new(
                c.kind,
                [e[0] + shift, e[1] + shift, e[2] + shift, e[3] + shift],
            )
        }));
        Diagram {
            crossings,
            semiarc_count: self.semiarc_count + other.semiarc_count,
            closed_components: self.closed_components + other.closed_components,
        }
    }

    /// Renames semiarc `e` to `perm[e - 1]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Diagram> {
        let n = self.semiarc_count;
        let mut seen = vec![false; n + 1];
        if perm.len() != n
            || perm.iter().any(|&p| {
                p == 0 || p as usize > n || std::mem::replace(&mut seen[p as usize], true)
            })
        {
            return Err(Error::InvalidParameter(
                "relabeling must be a permutation of the semiarc ids".into(),
            ));
        }
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let e = c.ends().map(|x| perm[x as usize - 1]);
                Crossing::new(c.kind, e)
            })
            .collect();
        Diagram::new(crossings, self.closed_components)
    }

    /// Closure of a braid word. Each letter acts on positions `i, i+1`
    /// (0-based); strands that never cross become crossing-free components.
    pub fn from_braid(word: &[(CrossingKind, usize)], strands: usize) -> Result<Diagram> {
        let mut cur: Vec<u32> = (1..=strands as u32).collect();
        let mut next = strands as u32 + 1;
        let mut raw = Vec::with_capacity(word.len());
        for &(kind, i) in word {
            if i + 1 >= strands {
                return Err(Error::InvalidParameter(format!(
                    "braid letter at position {i} needs more than {strands} strands"
                )));
            }
            let (a, b) = (cur[i], cur[i + 1]);
            let (c, d) = (next, next + 1);
            next += 2;
            raw.push(Crossing::new(kind, [a, b, c, d]));
            cur[i] = c;
            cur[i + 1] = d;
        }
        // close up: the top of strand j is its bottom
        let close = |x: u32| -> u32 {
            cur.iter()
                .position(|&y| y == x)
                .map(|j| j as u32 + 1)
                .unwrap_or(x)
        };
        let raw: Vec<Crossing> = raw
            .into_iter()
            .map(|c| Crossing::new(c.kind, c.ends().map(close)))
            .collect();
        let mut ids: Vec<u32> = raw.iter().flat_map(|c| c.ends()).collect();
        ids.sort_unstable();
        ids.dedup();
        let untouched = (1..=strands as u32).filter(|s| !ids.contains(s)).count();
        let rename = |x: u32| ids.binary_search(&x).unwrap() as u32 + 1;
        let crossings = raw
            .iter()
            .map(|c| Crossing::new(c.kind, c.ends().map(rename)))
            .collect();
        Diagram::new(crossings, untouched)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_pd(self))
    }
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

/// Parses `.pd` text and validates the result.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let mut crossings = Vec::new();
    let mut unknots: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        let err = |col: usize, message: String| Error::Syntax {
            line: lineno + 1,
            column: col + 1,
            message,
        };
        let (col0, head) = toks[0];
        if head == "unknots" {
            if toks.len() != 2 {
                return Err(err(col0, "expected `unknots k`".into()));
            }
            if unknots.is_some() {
                return Err(err(col0, "duplicate unknots header".into()));
            }
            let (c, v) = toks[1];
            unknots = Some(
                v.parse()
                    .map_err(|_| err(c, format!("expected a nonnegative integer, found `{v}`")))?,
            );
            continue;
        }
        let kind = CrossingKind::from_code(head)
            .ok_or_else(|| err(col0, format!("unknown crossing type `{head}`")))?;
        if toks.len() != 5 {
            let col = toks.get(5).map(|t| t.0).unwrap_or(line.trim_end().len());
            return Err(err(
                col,
                format!("expected 4 semiarc ids, found {}", toks.len() - 1),
            ));
        }
        let mut ends = [0u32; 4];
        for (slot, &(c, v)) in toks[1..].iter().enumerate() {
            ends[slot] = match v.parse::<u32>() {
                Ok(x) if x > 0 => x,
                _ => return Err(err(c, format!("expected a positive integer, found `{v}`"))),
            };
        }
        crossings.push(Crossing::new(kind, ends));
    }
    Diagram::new(crossings, unknots.unwrap_or(0))
}

pub fn emit_pd(d: &Diagram) -> String {
    let mut s = String::new();
    if d.closed_components > 0 {
        s.push_str(&format!("unknots {}\n", d.closed_components));
    }
    for c in &d.crossings {
        s.push_str(&c.to_string());
        s.push('\n');
    }
    s
}
