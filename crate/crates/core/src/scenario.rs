//! Line-oriented scenario files: named curve models, named weight
//! vectors, and a sequence of tasks with optional exact expectations.
//!
//! Format sketch:
//!
//! ```text
//! # comment
//! curve cstar
//!   component genus=0 param=(2,0;1,1;0,2;-;-)
//!   singularity kind=node at=(0:1,2:1) coords=[1,0,0,0,0]
//!   marked component=2 coords=[1,0,0,1,1]
//! end
//! oneps rho (3,-2,-7,3,3)
//! task hilbert_index curve=cstar rho=rho m=3 expect=2 tag=paper
//! ```
//!
//! Parametrizations are exponent tables: coordinate entries `a,b` mean
//! s^a t^b and `-` means the coordinate vanishes identically. Expected
//! values are rationals `p/q`, polynomials `[c0,c1,...]` (lowest degree
//! first), rational tuples `(a,b,c)`, or classifier verdicts
//! `verdict:<flags>`.

use crate::curves::{
    classify, curve_genus, curve_ideal, Component, ComponentParam, CurveModel, Incidence,
    MarkedPoint, Singularity, SingularityKind, StabilityVerdict,
};
use crate::divisors::{vital_intersection, VitalData};
use crate::error::{Error, Result};
use crate::poly::{hilbert_function, initial_ideal, Ideal};
use crate::rational::{fmt_rat, int, parse_rat, Rat};
use crate::report::{Report, TaskRecord, Verdict};
use crate::stability::{
    balanced_index, chow_combined_index, chow_index, hilbert_index, hilbert_index_polynomial,
    instability_certificate, point_index, point_index_bound, versal_weights,
    AmbientConfig, ChowConvention, OnePS,
};
use crate::unipoly::UniPoly;
use std::collections::BTreeMap;

/// Exact value produced by a task or recorded as its expectation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Rat(Rat),
    Poly(UniPoly),
    List(Vec<Rat>),
    Verdict(String),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Rat(r) => fmt_rat(r),
            Value::Poly(p) => {
                let cs: Vec<String> = p.coeffs().iter().map(fmt_rat).collect();
                format!("[{}]", cs.join(","))
            }
            Value::List(v) => {
                let cs: Vec<String> = v.iter().map(fmt_rat).collect();
                format!("({})", cs.join(","))
            }
            Value::Verdict(s) => format!("verdict:{s}"),
        }
    }

    pub fn parse(s: &str) -> Option<Value> {
        if let Some(v) = s.strip_prefix("verdict:") {
            return Some(Value::Verdict(v.to_string()));
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let coeffs = parse_rat_list(inner)?;
            return Some(Value::Poly(UniPoly::new(coeffs)));
        }
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            return Some(Value::List(parse_rat_list(inner)?));
        }
        parse_rat(s).ok().map(Value::Rat)
    }
}

fn parse_rat_list(s: &str) -> Option<Vec<Rat>> {
    if s.trim().is_empty() {
        return Some(vec![]);
    }
    s.split(',').map(|t| parse_rat(t.trim()).ok()).collect()
}

/// Canonical flag string for a stability verdict, e.g.
/// `h_stable+c_stable+c_semistable`, `c_semistable`, or `none`.
pub fn verdict_string(v: &StabilityVerdict) -> String {
    let mut flags = Vec::new();
    if v.h_stable {
        flags.push("h_stable");
    }
    if v.c_stable {
        flags.push("c_stable");
    }
    if v.c_semistable {
        flags.push("c_semistable");
    }
    if flags.is_empty() {
        "none".to_string()
    } else {
        flags.join("+")
    }
}

/// Provenance tag of an expectation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Paper,
    Derived,
    Trivial,
}

impl Provenance {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "paper" => Some(Provenance::Paper),
            "derived" => Some(Provenance::Derived),
            "trivial" => Some(Provenance::Trivial),
            _ => None,
        }
    }
}

/// One task line: operation, bindings, optional expectation.
#[derive(Debug, Clone)]
pub struct Task {
    pub line: usize,
    pub op: String,
    pub args: BTreeMap<String, String>,
    pub expect: Option<(Value, Provenance)>,
    pub open_question: Option<String>,
}

/// Parsed scenario file.
#[derive(Debug, Clone, Default)]
pub struct Scenario {
    pub curves: BTreeMap<String, CurveModel>,
    pub one_ps: BTreeMap<String, OnePS>,
    pub tasks: Vec<Task>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn split_kv(line: usize, tok: &str) -> Result<(String, String)> {
    tok.split_once('=')
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .ok_or_else(|| perr(line, format!("expected key=value, got `{tok}`")))
}

fn parse_param(line: usize, s: &str) -> Result<ComponentParam> {
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| perr(line, "param must look like (a,b;...;-)"))?;
    let entries: Vec<&str> = inner.split(';').collect();
    if entries.len() != 5 {
        return Err(perr(line, "param needs exactly 5 coordinate entries"));
    }
    let mut out: ComponentParam = [None; 5];
    for (i, e) in entries.iter().enumerate() {
        let e = e.trim();
        if e == "-" {
            continue;
        }
        let (a, b) = e
            .split_once(',')
            .ok_or_else(|| perr(line, format!("bad exponent pair `{e}`")))?;
        let a: u32 = a
            .trim()
            .parse()
            .map_err(|_| perr(line, format!("bad exponent `{a}`")))?;
        let b: u32 = b
            .trim()
            .parse()
            .map_err(|_| perr(line, format!("bad exponent `{b}`")))?;
        out[i] = Some((a, b));
    }
    Ok(out)
}

fn parse_coords(line: usize, s: &str) -> Result<Vec<Rat>> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| perr(line, "coords must look like [a,b,c,d,e]"))?;
    let v = parse_rat_list(inner).ok_or_else(|| perr(line, "bad rational in coords"))?;
    if v.len() != 5 {
        return Err(perr(line, "coords need exactly 5 entries"));
    }
    Ok(v)
}

fn parse_incidences(line: usize, s: &str) -> Result<Vec<Incidence>> {
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| perr(line, "incidences must look like (comp:branches,...)"))?;
    inner
        .split(',')
        .map(|e| {
            let (c, b) = e
                .trim()
                .split_once(':')
                .ok_or_else(|| perr(line, format!("bad incidence `{e}`")))?;
            Ok(Incidence {
                component: c
                    .parse()
                    .map_err(|_| perr(line, format!("bad component index `{c}`")))?,
                branches: b
                    .parse()
                    .map_err(|_| perr(line, format!("bad branch count `{b}`")))?,
            })
        })
        .collect()
}

fn parse_weights(line: usize, s: &str) -> Result<[i64; 5]> {
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| perr(line, "weights must look like (a,b,c,d,e)"))?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 5 {
        return Err(perr(line, "weights need exactly 5 entries"));
    }
    let mut out = [0i64; 5];
    for (i, p) in parts.iter().enumerate() {
        out[i] = p
            .trim()
            .parse()
            .map_err(|_| perr(line, format!("bad integer weight `{p}`")))?;
    }
    Ok(out)
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Scenario> {
        let mut sc = Scenario::default();
        let mut lines = text.lines().enumerate().peekable();
        while let Some((idx, raw)) = lines.next() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut toks = line.split_whitespace();
            match toks.next().unwrap() {
                "curve" => {
                    let name = toks
                        .next()
                        .ok_or_else(|| perr(lineno, "curve needs a name"))?
                        .to_string();
                    let mut model = CurveModel {
                        components: vec![],
                        singularities: vec![],
                        marked_point: None,
                    };
                    let mut closed = false;
                    for (bidx, braw) in lines.by_ref() {
                        let blineno = bidx + 1;
                        let bline = braw.trim();
                        if bline.is_empty() || bline.starts_with('#') {
                            continue;
                        }
                        if bline == "end" {
                            closed = true;
                            break;
                        }
                        let mut btoks = bline.split_whitespace();
                        let head = btoks.next().unwrap();
                        let mut kv: BTreeMap<String, String> = BTreeMap::new();
                        for t in btoks {
                            let (k, v) = split_kv(blineno, t)?;
                            kv.insert(k, v);
                        }
                        match head {
                            "component" => {
                                let genus: i64 = kv
                                    .get("genus")
                                    .ok_or_else(|| perr(blineno, "component needs genus="))?
                                    .parse()
                                    .map_err(|_| perr(blineno, "bad genus"))?;
                                let multiplicity: i64 = match kv.get("multiplicity") {
                                    Some(m) => m
                                        .parse()
                                        .map_err(|_| perr(blineno, "bad multiplicity"))?,
                                    None => 1,
                                };
                                let param = match kv.get("param") {
                                    None => None,
                                    Some(p) if p == "none" => None,
                                    Some(p) => Some(parse_param(blineno, p)?),
                                };
                                model.components.push(Component {
                                    genus,
                                    multiplicity,
                                    param,
                                });
                            }
                            "singularity" => {
                                let kind = kv
                                    .get("kind")
                                    .and_then(|k| SingularityKind::parse(k))
                                    .ok_or_else(|| {
                                        perr(blineno, "singularity needs a known kind=")
                                    })?;
                                let incidences = parse_incidences(
                                    blineno,
                                    kv.get("at")
                                        .ok_or_else(|| perr(blineno, "singularity needs at="))?,
                                )?;
                                let coords = match kv.get("coords") {
                                    None => None,
                                    Some(c) => Some(parse_coords(blineno, c)?),
                                };
                                model.singularities.push(Singularity {
                                    kind,
                                    incidences,
                                    coords,
                                });
                            }
                            "marked" => {
                                let component: usize = kv
                                    .get("component")
                                    .ok_or_else(|| perr(blineno, "marked needs component="))?
                                    .parse()
                                    .map_err(|_| perr(blineno, "bad component index"))?;
                                let smooth = match kv.get("smooth").map(|s| s.as_str()) {
                                    None | Some("true") => true,
                                    Some("false") => false,
                                    Some(other) => {
                                        return Err(perr(
                                            blineno,
                                            format!("bad smooth flag `{other}`"),
                                        ))
                                    }
                                };
                                let coords = match kv.get("coords") {
                                    None => None,
                                    Some(c) => Some(parse_coords(blineno, c)?),
                                };
                                model.marked_point = Some(MarkedPoint {
                                    component,
                                    smooth,
                                    coords,
                                });
                            }
                            other => {
                                return Err(perr(
                                    blineno,
                                    format!("unknown curve entry `{other}`"),
                                ))
                            }
                        }
                    }
                    if !closed {
                        return Err(perr(lineno, format!("curve {name} not closed by `end`")));
                    }
                    sc.curves.insert(name, model);
                }
                "oneps" => {
                    let name = toks
                        .next()
                        .ok_or_else(|| perr(lineno, "oneps needs a name"))?
                        .to_string();
                    let weights = toks
                        .next()
                        .ok_or_else(|| perr(lineno, "oneps needs a weight tuple"))?;
                    if toks.next().is_some() {
                        return Err(perr(lineno, "trailing tokens after oneps weights"));
                    }
                    sc.one_ps
                        .insert(name, OnePS::new(parse_weights(lineno, weights)?));
                }
                "task" => {
                    let op = toks
                        .next()
                        .ok_or_else(|| perr(lineno, "task needs an operation name"))?
                        .to_string();
                    let mut args = BTreeMap::new();
                    let mut expect_raw: Option<String> = None;
                    let mut tag: Option<Provenance> = None;
                    let mut open_question = None;
                    for t in toks {
                        let (k, v) = split_kv(lineno, t)?;
                        match k.as_str() {
                            "expect" => expect_raw = Some(v),
                            "tag" => {
                                tag = Some(Provenance::parse(&v).ok_or_else(|| {
                                    perr(lineno, format!("unknown provenance tag `{v}`"))
                                })?)
                            }
                            "open_question" => open_question = Some(v),
                            _ => {
                                args.insert(k, v);
                            }
                        }
                    }
                    let expect = match expect_raw {
                        None => None,
                        Some(raw) => {
                            let value = Value::parse(&raw).ok_or_else(|| {
                                perr(lineno, format!("unparseable expected value `{raw}`"))
                            })?;
                            let tag = tag.ok_or_else(|| {
                                perr(lineno, "expected values require a tag= provenance")
                            })?;
                            Some((value, tag))
                        }
                    };
                    sc.tasks.push(Task {
                        line: lineno,
                        op,
                        args,
                        expect,
                        open_question,
                    });
                }
                other => return Err(perr(lineno, format!("unknown directive `{other}`"))),
            }
        }
        Ok(sc)
    }

    fn curve(&self, task: &Task, key: &str) -> Result<&CurveModel> {
        let name = task
            .args
            .get(key)
            .ok_or_else(|| perr(task.line, format!("task {} needs {key}=", task.op)))?;
        self.curves
            .get(name)
            .ok_or_else(|| Error::UnresolvedName(format!("curve `{name}`")))
    }

    fn oneps(&self, task: &Task, key: &str) -> Result<&OnePS> {
        let name = task
            .args
            .get(key)
            .ok_or_else(|| perr(task.line, format!("task {} needs {key}=", task.op)))?;
        self.one_ps
            .get(name)
            .ok_or_else(|| Error::UnresolvedName(format!("oneps `{name}`")))
    }

    fn ideal_of(&self, task: &Task, key: &str, cache: &mut BTreeMap<String, Ideal>) -> Result<Ideal> {
        let name = task
            .args
            .get(key)
            .ok_or_else(|| perr(task.line, format!("task {} needs {key}=", task.op)))?;
        if let Some(i) = cache.get(name) {
            return Ok(i.clone());
        }
        let model = self
            .curves
            .get(name)
            .ok_or_else(|| Error::UnresolvedName(format!("curve `{name}`")))?;
        let ideal = curve_ideal(model)?;
        cache.insert(name.clone(), ideal.clone());
        Ok(ideal)
    }

    fn arg<'a>(&self, task: &'a Task, key: &str) -> Result<&'a str> {
        task.args
            .get(key)
            .map(|s| s.as_str())
            .ok_or_else(|| perr(task.line, format!("task {} needs {key}=", task.op)))
    }

    fn arg_i64(&self, task: &Task, key: &str) -> Result<i64> {
        self.arg(task, key)?
            .parse()
            .map_err(|_| perr(task.line, format!("bad integer for {key}=")))
    }

    fn arg_rat(&self, task: &Task, key: &str) -> Result<Rat> {
        parse_rat(self.arg(task, key)?)
            .map_err(|_| perr(task.line, format!("bad rational for {key}=")))
    }

    fn marked_coords(&self, task: &Task) -> Result<Vec<Rat>> {
        if let Some(c) = task.args.get("coords") {
            return parse_coords(task.line, c);
        }
        let model = self.curve(task, "curve")?;
        model
            .marked_point
            .as_ref()
            .and_then(|mp| mp.coords.clone())
            .ok_or_else(|| {
                perr(
                    task.line,
                    "no coords= given and the curve's marked point has none",
                )
            })
    }

    fn convention(&self, task: &Task) -> Result<ChowConvention> {
        let s = self.arg(task, "convention")?;
        ChowConvention::parse(s)
            .ok_or_else(|| perr(task.line, format!("unknown convention `{s}`")))
    }

    /// Runs one task, producing (module, computed value).
    fn dispatch(&self, task: &Task, cache: &mut BTreeMap<String, Ideal>) -> Result<(&'static str, Value)> {
        let cfg = AmbientConfig::default();
        Ok(match task.op.as_str() {
            "curve_genus" => {
                let g = curve_genus(self.curve(task, "curve")?)?;
                ("curve_models", Value::Rat(int(g)))
            }
            "classify" => {
                let v = classify(self.curve(task, "curve")?)?;
                ("curve_models", Value::Verdict(verdict_string(&v)))
            }
            "hilbert_function" => {
                let ideal = self.ideal_of(task, "curve", cache)?;
                let m = self.arg_i64(task, "m")?;
                let init = initial_ideal(&ideal, &vec![int(0); 5]);
                (
                    "polynomial_algebra",
                    Value::Rat(int(hilbert_function(&init, m as u32))),
                )
            }
            "hilbert_index" => {
                let ideal = self.ideal_of(task, "curve", cache)?;
                let rho = self.oneps(task, "rho")?;
                let m = self.arg_i64(task, "m")?;
                ("git_stability", Value::Rat(hilbert_index(&ideal, rho, m, &cfg)?))
            }
            "hilbert_index_polynomial" => {
                let ideal = self.ideal_of(task, "curve", cache)?;
                let rho = self.oneps(task, "rho")?;
                let from = self.arg_i64(task, "m_from")?;
                let to = self.arg_i64(task, "m_to")?;
                (
                    "git_stability",
                    Value::Poly(hilbert_index_polynomial(&ideal, rho, from..=to, &cfg)?),
                )
            }
            "balanced_index" => {
                let ideal = self.ideal_of(task, "curve", cache)?;
                let rho = self.oneps(task, "rho")?;
                let m = self.arg_i64(task, "m")?;
                let point = self.marked_coords(task)?;
                (
                    "git_stability",
                    Value::Rat(balanced_index(&ideal, &point, rho, m, &cfg)?),
                )
            }
            "chow_index" => {
                let ideal = self.ideal_of(task, "curve", cache)?;
                let rho = self.oneps(task, "rho")?;
                let conv = self.convention(task)?;
                let from = self.arg_i64(task, "m_from")?;
                let to = self.arg_i64(task, "m_to")?;
                (
                    "git_stability",
                    Value::Rat(chow_index(&ideal, rho, conv, from..=to, &cfg)?),
                )
            }
            "chow_combined_index" => {
                let ideal = self.ideal_of(task, "curve", cache)?;
                let rho = self.oneps(task, "rho")?;
                let conv = self.convention(task)?;
                let from = self.arg_i64(task, "m_from")?;
                let to = self.arg_i64(task, "m_to")?;
                let point = self.marked_coords(task)?;
                (
                    "git_stability",
                    Value::Rat(chow_combined_index(
                        &ideal,
                        &point,
                        rho,
                        conv,
                        from..=to,
                        &cfg,
                    )?),
                )
            }
            "point_index" => {
                let rho = self.oneps(task, "rho")?;
                let coords = self.marked_coords(task)?;
                ("git_stability", Value::Rat(point_index(&coords, rho)))
            }
            "point_index_bound" => {
                let rho = self.oneps(task, "rho")?;
                ("git_stability", Value::Rat(point_index_bound(rho)))
            }
            "sl_normalize" => {
                let rho = self.oneps(task, "rho")?;
                ("git_stability", Value::List(rho.sl_weights().to_vec()))
            }
            "instability_certificate" => {
                let rho = self.oneps(task, "rho")?;
                let e = self.arg_rat(task, "e")?;
                let with_point = match task.args.get("with_point").map(|s| s.as_str()) {
                    None | Some("true") => true,
                    Some("false") => false,
                    Some(other) => {
                        return Err(perr(task.line, format!("bad with_point flag `{other}`")))
                    }
                };
                let bound = match task.args.get("point_bound") {
                    None => None,
                    Some(b) => Some(
                        parse_rat(b)
                            .map_err(|_| perr(task.line, "bad rational for point_bound="))?,
                    ),
                };
                (
                    "git_stability",
                    Value::Rat(instability_certificate(
                        rho,
                        &e,
                        with_point,
                        bound.as_ref(),
                        &cfg,
                    )),
                )
            }
            "versal_weights" => {
                let kind = SingularityKind::parse(self.arg(task, "kind")?)
                    .ok_or_else(|| perr(task.line, "unknown singularity kind"))?;
                let wx = self.arg_rat(task, "wt_x")?;
                let wy = self.arg_rat(task, "wt_y")?;
                ("git_stability", Value::List(versal_weights(kind, &wx, &wy)?))
            }
            "vital_intersection" => {
                let alpha = self.arg_rat(task, "alpha")?;
                let data = match task.args.get("data").map(|s| s.as_str()) {
                    None | Some("shipped") => VitalData::shipped(),
                    Some("zero") => VitalData::zero(),
                    Some(other) => {
                        return Err(perr(task.line, format!("unknown data source `{other}`")))
                    }
                };
                (
                    "divisor_calculus",
                    Value::Rat(vital_intersection(&alpha, &data)),
                )
            }
            other => return Err(Error::UnknownOperation(other.to_string())),
        })
    }

    /// Executes every task (optionally restricted to one module) and
    /// assembles the report. Computation failures inside a task are
    /// recorded as mismatches rather than aborting the run; unknown
    /// operations and unresolved names abort.
    pub fn execute(&self, filter: Option<&str>) -> Result<Report> {
        let mut report = Report::new();
        let mut cache: BTreeMap<String, Ideal> = BTreeMap::new();
        for task in &self.tasks {
            let inputs = task
                .args
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            let (module, outcome) = match self.dispatch(task, &mut cache) {
                Ok((module, value)) => (module, Ok(value)),
                Err(e @ (Error::UnknownOperation(_) | Error::UnresolvedName(_) | Error::Parse { .. })) => {
                    return Err(e)
                }
                Err(e) => ("(failed)", Err(e)),
            };
            if let Some(f) = filter {
                if module != f {
                    continue;
                }
            }
            let computed = match &outcome {
                Ok(v) => v.render(),
                Err(e) => format!("error: {e}"),
            };
            let (verdict, expected, note) = match (&task.expect, &outcome) {
                (None, _) => (Verdict::Match, None, None),
                (Some((want, _)), Ok(got)) => {
                    if want == got {
                        (Verdict::Match, Some(want.render()), None)
                    } else if let Some(q) = &task.open_question {
                        (
                            Verdict::DocumentedDeviation,
                            Some(want.render()),
                            Some(format!(
                                "open question {q}: recorded {} vs computed {}",
                                want.render(),
                                computed
                            )),
                        )
                    } else {
                        (Verdict::Mismatch, Some(want.render()), None)
                    }
                }
                (Some((want, _)), Err(_)) => (Verdict::Mismatch, Some(want.render()), None),
            };
            report.push(TaskRecord {
                key: format!("{}:{}", task.op, task.line),
                module: module.to_string(),
                inputs,
                computed,
                expected,
                verdict,
                note,
            });
        }
        Ok(report)
    }
}
