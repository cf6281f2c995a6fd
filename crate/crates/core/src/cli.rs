//! The `psyknot` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coloring::{
    check_resolution_observation, count_alexander_linear, counting_invariant, enumerate_colorings,
    strong_p_colorings, HomSet,
};
use crate::corpus::Corpus;
use crate::diagram::{parse_pd, Diagram};
use crate::error::Error;
use crate::invariants::{
    alexander_groebner, alexander_presentation, classical_alexander, jablan_polynomial,
    were_weighted_sum, COEFFICIENT_FIELD, DEFAULT_WERE_BOUND,
};
use crate::poly::{MonomialOrder, UnitNormalForm};
use crate::psyquandle::{
    emit_psy, parse_psy, search, verify_psyquandle, FinitePsyquandle, SearchOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "psyknot",
    version,
    about = "Psyquandle colorings and polynomial invariants"
)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; report through the exit status only.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the psyquandle axioms for a `.psy` table.
    Verify { psy: PathBuf },
    /// Count colorings of a diagram.
    Count {
        pd: PathBuf,
        psy: PathBuf,
        #[arg(long)]
        list: bool,
        /// Omit the colorings when there are more than this many.
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// List the colorings of a diagram.
    Hom {
        pd: PathBuf,
        psy: PathBuf,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Jablan polynomial.
    Jablan { pd: PathBuf },
    /// Alexander presentation, or the linear coloring count over `Z_m`.
    Alexander {
        pd: PathBuf,
        #[arg(short)]
        m: Option<u64>,
        #[arg(short, allow_negative_numbers = true)]
        s: Option<i64>,
        #[arg(short, allow_negative_numbers = true)]
        t: Option<i64>,
        #[arg(short, allow_negative_numbers = true)]
        a: Option<i64>,
        #[arg(short, allow_negative_numbers = true)]
        b: Option<i64>,
    },
    /// Reduced Gröbner basis of an elementary ideal.
    Groebner {
        pd: PathBuf,
        #[arg(long, default_value_t = 1)]
        codim: usize,
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// p-colorings through `X_p`, or strong p-colorings.
    Pcolor {
        pd: PathBuf,
        #[arg(short)]
        p: u64,
        #[arg(long)]
        strong: bool,
        #[arg(long)]
        list: bool,
        /// Also compare with the colorings of the extreme resolutions.
        #[arg(long)]
        check_resolutions: bool,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Classical resolutions and their Alexander polynomials.
    Resolutions { pd: PathBuf },
    /// Weighted resolution sums against the Jablan polynomial at s = 1.
    Were {
        pd: PathBuf,
        #[arg(long, default_value_t = DEFAULT_WERE_BOUND)]
        bound: usize,
    },
    /// Group corpus labels by invariant value.
    Table {
        /// Corpus directory and/or `.psy` file.
        paths: Vec<PathBuf>,
        #[arg(long)]
        jablan: bool,
        #[arg(long)]
        markdown: bool,
    },
    /// Enumerate psyquandles of a given order.
    Search {
        n: usize,
        #[arg(long)]
        pi: bool,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        limit: Option<usize>,
    },
}

enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Axioms(r) => Failure::Check(format!("axioms failed: {r}")),
            e => Failure::Input(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<Output, Failure>;

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_pd(path: &Path) -> std::result::Result<Diagram, Failure> {
    parse_pd(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_psy(path: &Path) -> std::result::Result<FinitePsyquandle, Failure> {
    let t =
        parse_psy(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    FinitePsyquandle::new(t).map_err(|e| match e {
        Error::Axioms(r) => Failure::Check(format!("{}: not a psyquandle: {r}", path.display())),
        e => Failure::Input(e.to_string()),
    })
}

fn tuple(c: &[usize]) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn homset_output(h: &HomSet, list: bool, limit: usize) -> Output {
    let mut text = format!("{}\n", h.count());
    let shown = h.count() <= limit;
    if list {
        if shown {
            for c in &h.colorings {
                text.push_str(&tuple(c));
                text.push('\n');
            }
        } else {
            text.push_str(&format!(
                "({} colorings not listed; raise --limit)\n",
                h.count()
            ));
        }
    }
    let mut j = json!({ "count": h.count() });
    if shown {
        j["colorings"] = json!(h.colorings);
    }
    Output::ok(text, j)
}

fn units_json(nf: &UnitNormalForm) -> Value {
    let vars = nf.polynomial.vars();
    let monomial: BTreeMap<&str, i32> = vars
        .iter()
        .map(|v| v.as_str())
        .zip(nf.extracted.monomial.iter().copied())
        .filter(|(_, k)| *k != 0)
        .collect();
    let factors: BTreeMap<String, u32> = nf
        .extracted
        .factors
        .iter()
        .map(|(f, k)| (f.to_string(), *k))
        .collect();
    json!({
        "sign": nf.extracted.sign,
        "power_of_two": nf.extracted.power_of_two,
        "monomial": monomial,
        "factors": factors,
    })
}

fn cmd_verify(psy: &Path) -> CmdResult {
    let t =
        parse_psy(&read(psy)?).map_err(|e| Failure::Input(format!("{}: {e}", psy.display())))?;
    let report = verify_psyquandle(&t);
    let pi = t.is_pi_adequate();
    let mut text = String::new();
    if report.passed() {
        text.push_str("axioms: pass\n");
    } else {
        text.push_str(&format!(
            "axioms: FAIL ({})\n",
            report.failed_axioms().join(", ")
        ));
        for f in &report.failures {
            text.push_str(&format!("  {f}\n"));
        }
        if report.truncated {
            text.push_str("  ...\n");
        }
    }
    text.push_str(&format!("pI-adequate: {}\n", if pi { "yes" } else { "no" }));
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| json!({ "axiom": f.axiom, "witness": f.witness }))
        .collect();
    Ok(Output {
        text,
        json: json!({
            "order": t.order(),
            "passed": report.passed(),
            "pi_adequate": pi,
            "failures": failures,
            "truncated": report.truncated,
        }),
        ok: report.passed(),
    })
}

fn jablan_json(d: &Diagram) -> std::result::Result<(String, Value), Failure> {
    let j = jablan_polynomial(d)?;
    let text = format!("{}\n", j.polynomial());
    let value = json!({
        "jablan": j.polynomial().to_string(),
        "raw_gcd": j.raw_gcd.to_string(),
        "units_extracted": units_json(&j.normal_form),
        "homogeneous": j.homogeneous,
        "symmetric": j.symmetric,
        "single_minor_agrees": j.single_minor_agrees,
    });
    Ok((text, value))
}

fn cmd_alexander(d: &Diagram, params: [Option<i64>; 4], m: Option<u64>) -> CmdResult {
    if let Some(m) = m {
        let [s, t, a, b] = params;
        let need = |v: Option<i64>, n: &str| {
            v.ok_or_else(|| Failure::Input(format!("-{n} is required with -m")))
        };
        let (s, t, a, b) = (need(s, "s")?, need(t, "t")?, need(a, "a")?, need(b, "b")?);
        let lc = count_alexander_linear(d, m, s, t, a, b)?;
        let text = match lc.kernel_dimension {
            Some(k) => format!("kernel dimension: {k}\ncount: {}\n", lc.count),
            None => format!("count: {}\n", lc.count),
        };
        return Ok(Output::ok(
            text,
            json!({ "modulus": m, "kernel_dimension": lc.kernel_dimension, "count": lc.count }),
        ));
    }
    let p = alexander_presentation(d)?;
    let mut text = String::new();
    for r in &p.relations {
        text.push_str(&format!("{r}\n"));
    }
    text.push_str(&p.matrix.to_string());
    let rows: Vec<Vec<String>> = p
        .matrix
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    let mut j = json!({ "variables": ["t", "s", "a", "b"], "matrix": rows });
    if let Ok(c) = classical_alexander(d) {
        text.push_str(&format!("classical: {}\n", c.polynomial));
        j["classical"] = json!(c.polynomial.to_string());
    }
    Ok(Output::ok(text, j))
}

fn cmd_groebner(d: &Diagram, codim: usize, order: &str) -> CmdResult {
    let order: MonomialOrder = order.parse()?;
    let g = alexander_groebner(d, codim, order)?;
    let order_name = match order {
        MonomialOrder::Lex => "lex",
        MonomialOrder::GrevLex => "grevlex",
    };
    let mut text = format!(
        "order: {order_name} (t > s > a > b > tinv > sinv > ainv > binv)\ncoefficients: {COEFFICIENT_FIELD}\ncodimension: {codim}\n"
    );
    for p in &g.basis {
        text.push_str(&format!("{p}\n"));
    }
    text.push_str(&format!("gcd of minors: {}\n", g.minor_gcd.polynomial));
    text.push_str(&format!(
        "gcd with relations: {}\n",
        g.generator_gcd.polynomial
    ));
    let basis: Vec<String> = g.basis.iter().map(|p| p.to_string()).collect();
    Ok(Output::ok(
        text,
        json!({
            "order": order_name,
            "coefficient_field": COEFFICIENT_FIELD,
            "codimension": codim,
            "basis": basis,
            "minor_gcd": g.minor_gcd.polynomial.to_string(),
            "generator_gcd": g.generator_gcd.polynomial.to_string(),
        }),
    ))
}

fn cmd_pcolor(
    d: &Diagram,
    p: u64,
    strong: bool,
    list: bool,
    check: bool,
    limit: usize,
) -> CmdResult {
    let h = if strong {
        strong_p_colorings(d, p)?
    } else {
        enumerate_colorings(d, &FinitePsyquandle::x_p(p)?)?
    };
    let mut out = homset_output(&h, list, limit);
    if check {
        let agrees = check_resolution_observation(d, p)?;
        out.text.push_str(&format!(
            "matches resolutions: {}\n",
            if agrees { "yes" } else { "no" }
        ));
        out.json["matches_resolutions"] = json!(agrees);
        out.ok = agrees;
    }
    Ok(out)
}

fn cmd_resolutions(d: &Diagram) -> CmdResult {
    let rs = d.resolutions()?;
    let rows: Vec<(String, String)> = rs
        .par_iter()
        .map(|(r, w)| {
            let a = classical_alexander(r).map(|nf| nf.polynomial.to_string());
            (w.clone(), a.unwrap_or_else(|e| format!("error: {e}")))
        })
        .collect();
    let mut text = String::new();
    for (w, a) in &rows {
        let w = if w.is_empty() { "(none)" } else { w.as_str() };
        text.push_str(&format!("{w}\t{a}\n"));
    }
    let j: Vec<Value> = rows
        .iter()
        .map(|(w, a)| json!({ "word": w, "alexander": a }))
        .collect();
    Ok(Output::ok(text, json!({ "resolutions": j })))
}

fn cmd_were(d: &Diagram, bound: usize) -> CmdResult {
    let r = were_weighted_sum(d, bound)?;
    let mut text = format!("precrossings: {}\n", r.precrossings);
    for g in &r.groups {
        text.push_str(&format!(
            "weight {} (x{})\t{}\t{}\n",
            g.weight,
            g.cleared_weight,
            g.polynomial,
            g.words.join(" ")
        ));
    }
    for t in &r.targets {
        let note = if t.symmetric { "" } else { " (not symmetric)" };
        text.push_str(&format!("target {}: {}{note}\n", t.label, t.polynomial));
    }
    if !r.searched {
        text.push_str("too many groups; search skipped\n");
    } else if r.matches.is_empty() {
        text.push_str("no matches\n");
    }
    for m in &r.matches {
        text.push_str(&format!(
            "match {}: signs {:?} shifts {:?}\n",
            m.target, m.signs, m.shifts
        ));
    }
    let groups: Vec<Value> = r
        .groups
        .iter()
        .map(|g| {
            json!({
                "polynomial": g.polynomial.to_string(),
                "words": g.words,
                "weight": g.weight.to_string(),
                "cleared_weight": g.cleared_weight,
            })
        })
        .collect();
    let targets: Vec<Value> = r
        .targets
        .iter()
        .map(|t| json!({ "label": t.label, "polynomial": t.polynomial.to_string(), "symmetric": t.symmetric }))
        .collect();
    let matches: Vec<Value> = r
        .matches
        .iter()
        .map(|m| json!({ "target": m.target, "signs": m.signs, "shifts": m.shifts }))
        .collect();
    Ok(Output::ok(
        text,
        json!({
            "precrossings": r.precrossings,
            "groups": groups,
            "targets": targets,
            "matches": matches,
            "searched": r.searched,
        }),
    ))
}

fn cmd_table(paths: &[PathBuf], jablan: bool, markdown: bool) -> CmdResult {
    let (corpus_dir, psy) = match paths {
        [] => (Corpus::default_dir(), None),
        [p] if p.extension().is_some_and(|e| e == "psy") => {
            (Corpus::default_dir(), Some(p.clone()))
        }
        [p] => (p.clone(), None),
        [c, p] => (c.clone(), Some(p.clone())),
        _ => {
            return Err(Failure::Input(
                "expected a corpus directory and an optional .psy file".into(),
            ))
        }
    };
    let psy = match (&psy, jablan) {
        (Some(p), false) => Some(load_psy(p)?),
        (None, true) => None,
        (Some(_), true) => {
            return Err(Failure::Input("give either a .psy file or --jablan".into()))
        }
        (None, false) => return Err(Failure::Input("a .psy file or --jablan is required".into())),
    };
    let corpus = Corpus::load(&corpus_dir)?;
    let values: Vec<(String, Option<String>)> = corpus
        .entries
        .par_iter()
        .map(|e| {
            let v = e.diagram.as_ref().map(|d| match &psy {
                Some(p) => counting_invariant(d, p).map(|c| c.to_string()),
                None => jablan_polynomial(d).map(|j| j.polynomial().to_string()),
            });
            let v = v.map(|r| r.unwrap_or_else(|e| format!("error: {e}")));
            (e.label.clone(), v)
        })
        .collect();
    let mut groups: Vec<(String, Vec<String>)> = Vec::new();
    let mut missing = Vec::new();
    for (label, v) in values {
        match v {
            None => missing.push(label),
            Some(v) => match groups.iter_mut().find(|g| g.0 == v) {
                Some(g) => g.1.push(label),
                None => groups.push((v, vec![label])),
            },
        }
    }
    if psy.is_some() {
        groups.sort_by_key(|g| (g.0.parse::<u64>().unwrap_or(u64::MAX), g.0.clone()));
    }
    let head = if psy.is_some() { "Phi" } else { "Delta_J" };
    let mut text = String::new();
    if markdown {
        text.push_str(&format!("| {head} | L |\n|---|---|\n"));
        for (v, ls) in &groups {
            text.push_str(&format!("| {v} | {} |\n", ls.join(", ")));
        }
        if !missing.is_empty() {
            text.push_str(&format!("| (missing) | {} |\n", missing.join(", ")));
        }
    } else {
        text.push_str(&format!("{head}\tlabels\n"));
        for (v, ls) in &groups {
            text.push_str(&format!("{v}\t{}\n", ls.join(" ")));
        }
        if !missing.is_empty() {
            text.push_str(&format!("-\t{}\n", missing.join(" ")));
        }
    }
    let rows: Vec<Value> = groups
        .iter()
        .map(|(v, ls)| json!({ "value": v, "labels": ls }))
        .collect();
    Ok(Output::ok(
        text,
        json!({ "invariant": head, "rows": rows, "missing": missing }),
    ))
}

fn cmd_search(n: usize, pi: bool, bound: Option<usize>, limit: Option<usize>) -> CmdResult {
    let opts = SearchOptions {
        require_pi: pi,
        fixed_biquandle: None,
        bound,
    };
    let found: Vec<FinitePsyquandle> = search(n, opts)?.take(limit.unwrap_or(usize::MAX)).collect();
    let mut text = String::new();
    for p in &found {
        text.push_str(&emit_psy(p.tables()));
        text.push('\n');
    }
    text.push_str(&format!("{} psyquandles of order {n}\n", found.len()));
    let tables: Vec<Vec<Vec<usize>>> = found.iter().map(|p| p.tables().rows()).collect();
    Ok(Output::ok(
        text,
        json!({ "order": n, "count": found.len(), "psyquandles": tables }),
    ))
}

fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Verify { psy } => cmd_verify(psy),
        Command::Count {
            pd,
            psy,
            list,
            limit,
        } => {
            let d = load_pd(pd)?;
            let p = load_psy(psy)?;
            if *list {
                Ok(homset_output(&enumerate_colorings(&d, &p)?, true, *limit))
            } else {
                Ok(homset_output(&enumerate_colorings(&d, &p)?, false, *limit))
            }
        }
        Command::Hom { pd, psy, limit } => {
            let d = load_pd(pd)?;
            let p = load_psy(psy)?;
            Ok(homset_output(&enumerate_colorings(&d, &p)?, true, *limit))
        }
        Command::Jablan { pd } => {
            let (text, j) = jablan_json(&load_pd(pd)?)?;
            Ok(Output::ok(text, j))
        }
        Command::Alexander { pd, m, s, t, a, b } => {
            cmd_alexander(&load_pd(pd)?, [*s, *t, *a, *b], *m)
        }
        Command::Groebner { pd, codim, order } => cmd_groebner(&load_pd(pd)?, *codim, order),
        Command::Pcolor {
            pd,
            p,
            strong,
            list,
            check_resolutions,
            limit,
        } => cmd_pcolor(
            &load_pd(pd)?,
            *p,
            *strong,
            *list,
            *check_resolutions,
            *limit,
        ),
        Command::Resolutions { pd } => cmd_resolutions(&load_pd(pd)?),
        Command::Were { pd, bound } => cmd_were(&load_pd(pd)?, *bound),
        Command::Table {
            paths,
            jablan,
            markdown,
        } => cmd_table(paths, *jablan, *markdown),
        Command::Search {
            n,
            pi,
            bound,
            limit,
        } => cmd_search(*n, *pi, *bound, *limit),
    }
}

/// Runs the command line, writing to `out` and `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(o) => {
            if !cli.quiet {
                let text = if cli.json {
                    format!("{}\n", serde_json::to_string_pretty(&o.json).unwrap())
                } else {
                    o.text
                };
                let _ = out.write_all(text.as_bytes());
            }
            if o.ok {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INPUT
        }
        Err(Failure::Check(m)) => {
            let _ = writeln!(err, "{m}");
            EXIT_FAILURE
        }
    }
}
