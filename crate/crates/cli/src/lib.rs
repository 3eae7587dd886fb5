//! Command-line front end: reads a scenario, runs one decision procedure and
//! reports the verdict with its witness or obstruction.

pub mod dot;
pub mod scenario;

use std::fmt::Write;

use serde_json::{json, Value};
use thiserror::Error;
use vankampen::oracle::graph::GraphOracle;
use vankampen::{
    amalgamate, amalgamate_graph, brute_domain_cycle, brute_reachable, brute_van_kampen,
    coherence_witness, cycle_condition_holds, find_domain_cycle, find_unreachable_span,
    graph_pushout, proper_domain_cycles, pull_back_instance, pushout, spans_isomorphic,
    unreachable_graph_span, unreachable_span_for_cycle, Coherence, CommutingSquare, DescentData,
    DomainCycle, FinMap, PullbackSpan, SearchBudget,
};

use scenario::{cube_scenario, Arrow, Cube, Scenario, ScenarioError, Span, Square, Target, Writer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    CheckVk,
    CheckReachable,
    Amalgamate,
    Cycles,
    Counterexample,
    Oracle,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckVk => "check-vk",
            Command::CheckReachable => "check-reachable",
            Command::Amalgamate => "amalgamate",
            Command::Cycles => "cycles",
            Command::Counterexample => "counterexample",
            Command::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub budget_apex: Option<usize>,
    pub budget_fiber: Option<usize>,
    /// Also run the brute-force oracle and fail on disagreement.
    pub oracle: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error(transparent)]
    Core(#[from] vankampen::Error),
    #[error("{0}")]
    Usage(String),
    #[error("oracle disagreement: {0}")]
    Disagreement(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: Command,
    pub verdict: bool,
    pub summary: String,
    pub justification: String,
    pub details: Vec<String>,
    pub data: Value,
    pub dot: Option<String>,
}

impl Report {
    /// 0 when decided true or something was constructed, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        if self.verdict {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command.name(),
            "verdict": self.verdict,
            "summary": self.summary,
            "justification": self.justification,
            "details": self.details,
            "data": self.data,
        })
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => {
                let mut out = format!("{}: {}\n", self.command.name(), self.summary);
                for d in &self.details {
                    let _ = writeln!(out, "  {d}");
                }
                let _ = writeln!(out, "justification: {}", self.justification);
                let _ = writeln!(out, "result: {}", self.to_json());
                Ok(out)
            }
            Format::Json => {
                Ok(serde_json::to_string_pretty(&self.to_json()).expect("plain data") + "\n")
            }
            Format::Dot => self.dot.clone().ok_or_else(|| {
                CliError::Usage(format!(
                    "`{}` has no DOT output for this scenario",
                    self.command.name()
                ))
            }),
        }
    }
}

const VK_SETS: &str =
    "a pushout of finite sets is Van Kampen exactly when the kernels of its legs are separated, \
    that is, when the incidence multigraph of the legs has no cycle";
const VK_GRAPHS: &str =
    "pullbacks and pushouts of graphs are computed on vertices and edges separately, so a pushout \
    of graphs is Van Kampen exactly when its vertex and edge pushouts are";
const NOT_PUSHOUT: &str =
    "a Van Kampen square is in particular a pushout, and this square is not one";
const REACHABLE: &str = "a rear span over a pushout is reachable exactly when it carries coherent descent data along \
    the diagonal: every block of the join of ker a' and ker r' meets each fiber over its diagonal class exactly once";
const AMALGAMATION: &str =
    "the amalgamated instance is the realization of the coherence witness, extended by the \
    parts of J and H outside the images of a' and r'; every face of the cube was checked";
const CYCLES: &str =
    "the kernels of a and r are separated exactly when their incidence multigraph (one node per \
    block, one edge per element of L) is a forest";
const COUNTEREXAMPLE: &str =
    "a proper domain cycle lets one fiber be swapped along ker a inside a single block; the \
    swap cannot be made coherent, so the resulting rear span is not reachable";
const BRUTE: &str = "exhaustive search over instances within the budget; a negative answer is conclusive only up to \
    the budget";

fn show_cycle(c: &[String]) -> String {
    format!("({})", c.join(", "))
}

fn show_map(m: &FinMap) -> String {
    let body: Vec<String> = m.pairs().map(|(k, v)| format!("{k} ↦ {v}")).collect();
    format!("{{{}}}", body.join(", "))
}

/// The representative of a cycle, up to even rotation and reversal, that is
/// least in the declaration order of `L`.
pub fn canonical_cycle(c: &DomainCycle, order: &[String]) -> Vec<usize> {
    let l = c.names();
    let rank = |i: usize| order.iter().position(|x| *x == l[i]).unwrap_or(usize::MAX);
    let n = c.len();
    let seq: Vec<usize> = (0..n).collect();
    let rev: Vec<usize> = (0..n).map(|i| (n + 1 - i) % n).collect();
    let best = [seq, rev]
        .into_iter()
        .flat_map(|s| {
            (0..n)
                .step_by(2)
                .map(move |k| (0..n).map(|i| s[(i + k) % n]).collect::<Vec<_>>())
        })
        .min_by_key(|form| form.iter().map(|&i| rank(i)).collect::<Vec<_>>())
        .expect("cycles are non-empty");
    best.into_iter().map(|i| c.elements()[i]).collect()
}

fn cycle_in(scn: &Scenario, a: &FinMap, r: &FinMap) -> Result<Option<DomainCycle>, CliError> {
    let Some(c) = find_domain_cycle(a, r)? else {
        return Ok(None);
    };
    let order = scn.element_order(a.dom());
    Ok(Some(DomainCycle::new(a, r, canonical_cycle(&c, &order))?))
}

fn budget(opts: &Options, s: usize) -> Result<SearchBudget, CliError> {
    Ok(SearchBudget::new(
        opts.budget_apex.unwrap_or((2 * s).max(1)),
        opts.budget_fiber.unwrap_or(2),
    )?)
}

fn agree(what: &str, decided: bool, brute: bool) -> Result<(), CliError> {
    if decided == brute {
        Ok(())
    } else {
        Err(CliError::Disagreement(format!(
            "{what}: decision procedure says {decided}, oracle says {brute}"
        )))
    }
}

fn bottom(scn: &Scenario) -> Result<Square, CliError> {
    let t = &scn.target;
    if let Some(b) = &t.bottom {
        return Ok(scn.squares[b].clone());
    }
    let legs = match (&t.legs, &t.span) {
        (Some([a, r]), _) => (
            scn.arrow(a).expect("checked"),
            scn.arrow(r).expect("checked"),
        ),
        (None, Some(s)) => match &scn.spans[s] {
            Span::Set(sp) => (Arrow::Set(sp.a().clone()), Arrow::Set(sp.r().clone())),
            Span::Graph(sp) => (
                Arrow::Graph(sp.left_square().bottom().clone()),
                Arrow::Graph(sp.right_square().bottom().clone()),
            ),
        },
        (None, None) => {
            return Err(CliError::Usage(
                "target names no bottom square, legs or span".into(),
            ))
        }
    };
    match legs {
        (Arrow::Set(a), Arrow::Set(r)) => Ok(Square::Set(pushout(&a, &r)?.square(&a, &r))),
        (Arrow::Graph(a), Arrow::Graph(r)) => {
            Ok(Square::Graph(graph_pushout(&a, &r)?.square(&a, &r)?))
        }
        _ => Err(CliError::Usage(
            "legs mix maps of sets with graph homs".into(),
        )),
    }
}

fn legs(scn: &Scenario) -> Result<(Arrow, Arrow), CliError> {
    if let Some([a, r]) = &scn.target.legs {
        return Ok((
            scn.arrow(a).expect("checked"),
            scn.arrow(r).expect("checked"),
        ));
    }
    Ok(match bottom(scn)? {
        Square::Set(sq) => (Arrow::Set(sq.left().clone()), Arrow::Set(sq.top().clone())),
        Square::Graph(sq) => (
            Arrow::Graph(sq.left().clone()),
            Arrow::Graph(sq.top().clone()),
        ),
    })
}

fn span(scn: &Scenario) -> Result<Span, CliError> {
    let name = scn
        .target
        .span
        .as_ref()
        .ok_or_else(|| CliError::Usage("target names no span".into()))?;
    Ok(scn.spans[name].clone())
}

fn pushout_bottom(scn: &Scenario) -> Result<Square, CliError> {
    let sq = bottom(scn)?;
    let is_pushout = match &sq {
        Square::Set(s) => s.is_pushout(),
        Square::Graph(g) => g.is_pushout(),
    };
    if is_pushout {
        Ok(sq)
    } else {
        Err(CliError::Usage("the bottom square is not a pushout".into()))
    }
}

pub fn run(command: Command, scn: &Scenario, opts: &Options) -> Result<Report, CliError> {
    match command {
        Command::CheckVk => check_vk(scn, opts),
        Command::Cycles => cycles(scn, opts),
        Command::CheckReachable => check_reachable(scn, opts),
        Command::Amalgamate => run_amalgamate(scn, opts),
        Command::Counterexample => counterexample(scn, opts),
        Command::Oracle => oracle(scn, opts),
    }
}

fn report(
    command: Command,
    verdict: bool,
    summary: impl Into<String>,
    justification: &str,
) -> Report {
    Report {
        command,
        verdict,
        summary: summary.into(),
        justification: justification.into(),
        details: Vec::new(),
        data: Value::Null,
        dot: None,
    }
}

fn check_vk(scn: &Scenario, opts: &Options) -> Result<Report, CliError> {
    match bottom(scn)? {
        Square::Set(sq) => {
            if !sq.is_pushout() {
                let mut rep = report(Command::CheckVk, false, "not a pushout", NOT_PUSHOUT);
                rep.data = json!({ "pushout": false, "van_kampen": false });
                return Ok(rep);
            }
            let (a, r) = (sq.left(), sq.top());
            let cycle = cycle_in(scn, a, r)?;
            let verdict = cycle.is_none();
            if opts.oracle {
                agree(
                    "Van Kampen",
                    verdict,
                    brute_van_kampen(&sq, &budget(opts, sq.right().cod().len())?)?,
                )?;
            }
            let shown = cycle.as_ref().map(|c| c.names());
            let mut rep = report(
                Command::CheckVk,
                verdict,
                if verdict {
                    "Van Kampen"
                } else {
                    "not Van Kampen"
                },
                VK_SETS,
            );
            rep.details.push(match &shown {
                None => "kernels of a and r are separated".into(),
                Some(c) => format!("domain cycle {}", show_cycle(c)),
            });
            rep.data = json!({ "pushout": true, "van_kampen": verdict, "cycle": shown });
            rep.dot = Some(dot::incidence(a, r, cycle.as_ref().map(|c| c.elements())));
            Ok(rep)
        }
        Square::Graph(sq) => {
            if !sq.is_pushout() {
                let mut rep = report(Command::CheckVk, false, "not a pushout", NOT_PUSHOUT);
                rep.data = json!({ "pushout": false, "van_kampen": false });
                return Ok(rep);
            }
            let mut rep = report(Command::CheckVk, true, "", VK_GRAPHS);
            let mut data = serde_json::Map::new();
            data.insert("pushout".into(), true.into());
            let mut dot_out = None;
            for (component, part) in [
                ("vertices", sq.vertex_square()),
                ("edges", sq.edge_square()),
            ] {
                let cycle = cycle_in(scn, part.left(), part.top())?;
                let shown = cycle.as_ref().map(|c| c.names());
                rep.details.push(match &shown {
                    None => format!("{component}: kernels separated"),
                    Some(c) => format!("{component}: domain cycle {}", show_cycle(c)),
                });
                if cycle.is_some() && rep.verdict {
                    rep.verdict = false;
                    dot_out = Some(dot::incidence(
                        part.left(),
                        part.top(),
                        cycle.as_ref().map(|c| c.elements()),
                    ));
                }
                data.insert(format!("{component}_cycle"), json!(shown));
            }
            if opts.oracle {
                let s = sq.right().cod();
                let b = budget(opts, s.vertices().len().max(s.edges().len()))?;
                agree(
                    "Van Kampen",
                    rep.verdict,
                    GraphOracle::new(b).is_van_kampen(&sq)?,
                )?;
            }
            data.insert("van_kampen".into(), rep.verdict.into());
            rep.summary = if rep.verdict {
                "Van Kampen".into()
            } else {
                "not Van Kampen".into()
            };
            rep.data = Value::Object(data);
            rep.dot = dot_out.or_else(|| {
                let v = sq.vertex_square();
                Some(dot::incidence(v.left(), v.top(), None))
            });
            Ok(rep)
        }
    }
}

fn set_cycles(
    scn: &Scenario,
    a: &FinMap,
    r: &FinMap,
    opts: &Options,
    label: &str,
) -> Result<(Vec<Vec<String>>, Option<String>), CliError> {
    let order = scn.element_order(a.dom());
    let found: Vec<DomainCycle> = proper_domain_cycles(a, r)?
        .into_iter()
        .map(|c| DomainCycle::new(a, r, canonical_cycle(&c, &order)))
        .collect::<Result<_, _>>()?;
    if opts.oracle {
        let walk = brute_domain_cycle(a, r, 2 * a.dom().len())?.is_some();
        agree(&format!("domain cycle on {label}"), !found.is_empty(), walk)?;
    }
    let dot = dot::incidence(a, r, found.first().map(|c| c.elements()));
    Ok((found.iter().map(|c| c.names()).collect(), Some(dot)))
}

fn cycles(scn: &Scenario, opts: &Options) -> Result<Report, CliError> {
    let components: Vec<(&str, FinMap, FinMap)> = match legs(scn)? {
        (Arrow::Set(a), Arrow::Set(r)) => vec![("L", a, r)],
        (Arrow::Graph(a), Arrow::Graph(r)) => vec![
            ("vertices", a.on_vertices().clone(), r.on_vertices().clone()),
            ("edges", a.on_edges().clone(), r.on_edges().clone()),
        ],
        _ => {
            return Err(CliError::Usage(
                "legs mix maps of sets with graph homs".into(),
            ))
        }
    };
    let mut rep = report(Command::Cycles, true, "", CYCLES);
    let mut data = serde_json::Map::new();
    for (label, a, r) in &components {
        let (found, dot) = set_cycles(scn, a, r, opts, label)?;
        if found.is_empty() {
            rep.details.push(format!("{label}: separated kernels"));
        }
        for c in &found {
            rep.details
                .push(format!("{label}: proper domain cycle {}", show_cycle(c)));
        }
        if !found.is_empty() && rep.verdict {
            rep.verdict = false;
            rep.dot = dot;
        } else if rep.dot.is_none() {
            rep.dot = dot;
        }
        data.insert(label.to_string(), json!(found));
    }
    rep.summary = if rep.verdict {
        "separated kernels".into()
    } else {
        "domain cycles found".into()
    };
    rep.data = json!({ "separated": rep.verdict, "cycles": data });
    Ok(rep)
}

fn witness_json(dd: &DescentData) -> Value {
    let (i, l) = (dd.carrier().dom(), dd.base().dom());
    let family: Vec<Value> = dd
        .family()
        .iter()
        .filter(|((e, e2), _)| e != e2)
        .map(|(&(e, e2), m)| json!({ "from": l.name(e), "to": l.name(e2), "map": m.named(i) }))
        .collect();
    json!(family)
}

/// Coherence of one set-level span, as (reachable, details, data).
fn set_coherence(
    span: &PullbackSpan,
    bottom: &CommutingSquare,
    prefix: &str,
) -> Result<(bool, Vec<String>, Value), CliError> {
    let rep = coherence_witness(span, bottom)?;
    let cyc = cycle_condition_holds(span)?;
    let cyc_line = format!(
        "{prefix}alternating products around every domain cycle are identities: {}",
        if cyc { "yes" } else { "no" }
    );
    Ok(match rep.outcome {
        Coherence::Witness(dd) => {
            let mut details = vec![format!(
                "{prefix}coherent descent data along the diagonal exist"
            )];
            for (&(e, e2), m) in dd.family().iter().filter(|((e, e2), _)| e != e2) {
                let l = dd.base().dom();
                let body: Vec<String> = m
                    .named(dd.carrier().dom())
                    .into_iter()
                    .map(|(x, y)| format!("{x} ↦ {y}"))
                    .collect();
                details.push(format!(
                    "{prefix}ξ({}, {}) = {{{}}}",
                    l.name(e),
                    l.name(e2),
                    body.join(", ")
                ));
            }
            details.push(cyc_line);
            (
                true,
                details,
                json!({ "reachable": true, "witness": witness_json(&dd) }),
            )
        }
        Coherence::Obstructed {
            block,
            fiber,
            count,
        } => {
            let details = vec![
                format!(
                    "{prefix}block {{{}}} of join(ker a', ker r') meets the fiber over `{fiber}` {count} times",
                    block.join(", ")
                ),
                cyc_line,
            ];
            (
                false,
                details,
                json!({ "reachable": false, "obstruction": { "block": block, "fiber": fiber, "count": count } }),
            )
        }
    })
}

fn check_reachable(scn: &Scenario, opts: &Options) -> Result<Report, CliError> {
    let sp = span(scn)?;
    let bottom = pushout_bottom(scn)?;
    let mut rep = report(Command::CheckReachable, true, "", REACHABLE);
    match (&sp, &bottom) {
        (Span::Set(sp), Square::Set(sq)) => {
            let (ok, details, data) = set_coherence(sp, sq, "")?;
            if opts.oracle {
                let found =
                    brute_reachable(sp, sq, &budget(opts, sq.right().cod().len())?)?.is_some();
                agree("reachability", ok, found)?;
            }
            rep.verdict = ok;
            rep.details = details;
            rep.data = data;
        }
        (Span::Graph(sp), Square::Graph(sq)) => {
            let mut data = serde_json::Map::new();
            for (label, s, b) in [
                ("vertices", sp.vertex_span(), sq.vertex_square()),
                ("edges", sp.edge_span(), sq.edge_square()),
            ] {
                let (ok, details, d) = set_coherence(s, b, &format!("{label}: "))?;
                if opts.oracle {
                    let found =
                        brute_reachable(s, b, &budget(opts, b.right().cod().len())?)?.is_some();
                    agree(&format!("reachability on {label}"), ok, found)?;
                }
                rep.verdict &= ok;
                rep.details.extend(details);
                data.insert(label.into(), d);
            }
            rep.justification = format!("{VK_GRAPHS}; {REACHABLE}");
            rep.data = Value::Object(data);
        }
        _ => {
            return Err(CliError::Usage(
                "span and bottom mix sets with graphs".into(),
            ))
        }
    }
    rep.summary = if rep.verdict {
        "reachable".into()
    } else {
        "not reachable".into()
    };
    Ok(rep)
}

fn run_amalgamate(scn: &Scenario, opts: &Options) -> Result<Report, CliError> {
    let sp = span(scn)?;
    let bottom = pushout_bottom(scn)?;
    let mut rep = report(Command::Amalgamate, true, "", AMALGAMATION);
    let cube = match (&sp, &bottom) {
        (Span::Set(sp), Square::Set(sq)) => {
            let cube = amalgamate(sp, sq)?;
            if opts.oracle {
                match &cube {
                    Some(c) => {
                        let back = pull_back_instance(sq, &c.sigma)?;
                        agree(
                            "pullback of the amalgamation is the span",
                            true,
                            spans_isomorphic(&back, sp),
                        )?;
                    }
                    None => {
                        let found =
                            brute_reachable(sp, sq, &budget(opts, sq.right().cod().len())?)?
                                .is_some();
                        agree("reachability", false, found)?;
                    }
                }
            }
            match cube {
                Some(c) => {
                    rep.details.push(format!("|K| = {}", c.sigma.dom().len()));
                    rep.details.push(format!("σ = {}", show_map(&c.sigma)));
                    rep.details.push(format!("s' = {}", show_map(&c.s_prime)));
                    rep.details
                        .push(format!("r̄' = {}", show_map(&c.r_bar_prime)));
                    rep.details
                        .push(format!("ā' = {}", show_map(&c.a_bar_prime)));
                    rep.dot = Some(dot::cube(&c, "cube"));
                    Some(Cube::Set(c))
                }
                None => {
                    let (_, details, data) = set_coherence(sp, sq, "")?;
                    rep.details = details;
                    rep.data = data;
                    None
                }
            }
        }
        (Span::Graph(sp), Square::Graph(sq)) => {
            let cube = amalgamate_graph(sp, sq)?;
            if opts.oracle {
                if let Some(c) = &cube {
                    for (label, s, b, sigma) in [
                        (
                            "vertices",
                            sp.vertex_span(),
                            sq.vertex_square(),
                            c.sigma.on_vertices(),
                        ),
                        (
                            "edges",
                            sp.edge_span(),
                            sq.edge_square(),
                            c.sigma.on_edges(),
                        ),
                    ] {
                        let back = pull_back_instance(b, sigma)?;
                        agree(
                            &format!("pullback of the amalgamation on {label}"),
                            true,
                            spans_isomorphic(&back, s),
                        )?;
                    }
                }
            }
            match cube {
                Some(c) => {
                    let k = c.sigma.dom();
                    rep.details.push(format!(
                        "|K| = {} vertices, {} edges",
                        k.vertices().len(),
                        k.edges().len()
                    ));
                    rep.details.push(format!(
                        "σ on vertices = {}",
                        show_map(c.sigma.on_vertices())
                    ));
                    rep.details
                        .push(format!("σ on edges = {}", show_map(c.sigma.on_edges())));
                    rep.dot =
                        Some(dot::cube(&c.vertices, "vertices") + &dot::cube(&c.edges, "edges"));
                    Some(Cube::Graph(c))
                }
                None => {
                    rep.details
                        .push("vertex or edge span is not reachable".into());
                    None
                }
            }
        }
        _ => {
            return Err(CliError::Usage(
                "span and bottom mix sets with graphs".into(),
            ))
        }
    };
    match cube {
        Some(c) => {
            rep.details.push("every face of the cube verified".into());
            rep.summary = "amalgamation constructed".into();
            rep.data = json!({ "scenario": cube_scenario(&c).to_value() });
        }
        None => {
            rep.verdict = false;
            rep.summary = "no amalgamation: the span is not reachable".into();
        }
    }
    Ok(rep)
}

fn counterexample(scn: &Scenario, opts: &Options) -> Result<Report, CliError> {
    let mut rep = report(Command::Counterexample, true, "", COUNTEREXAMPLE);
    match pushout_bottom(scn)? {
        Square::Set(sq) => {
            let (a, r) = (sq.left(), sq.top());
            let Some(cycle) = cycle_in(scn, a, r)? else {
                rep.verdict = false;
                rep.summary = "none: kernels are separated, so every rear span is reachable".into();
                rep.justification = VK_SETS.into();
                rep.dot = Some(dot::incidence(a, r, None));
                return Ok(rep);
            };
            let sp = unreachable_span_for_cycle(a, r, &cycle)?;
            if opts.oracle {
                let found =
                    brute_reachable(&sp, &sq, &budget(opts, sq.right().cod().len())?)?.is_some();
                agree("counterexample is unreachable", false, found)?;
            }
            let mut w = Writer::new();
            w.set_bottom(&sq).set_span(&sp).target(Target {
                bottom: Some("bottom".into()),
                span: Some("span".into()),
                ..Target::default()
            });
            rep.summary = "unreachable rear span constructed".into();
            rep.details
                .push(format!("domain cycle {}", show_cycle(&cycle.names())));
            rep.details
                .push(format!("|I| = {}", sp.carrier().dom().len()));
            rep.data = json!({ "cycle": cycle.names(), "scenario": w.to_value() });
            rep.dot = Some(dot::incidence(a, r, Some(cycle.elements())));
        }
        Square::Graph(sq) => {
            let Some(sp) = unreachable_graph_span(&sq)? else {
                rep.verdict = false;
                rep.summary = "none: vertex and edge kernels are separated".into();
                rep.justification = VK_GRAPHS.into();
                return Ok(rep);
            };
            if opts.oracle {
                agree(
                    "counterexample is unreachable",
                    false,
                    amalgamate_graph(&sp, &sq)?.is_some(),
                )?;
            }
            let mut w = Writer::new();
            w.graph_bottom(&sq).graph_span(&sp).target(Target {
                bottom: Some("bottom".into()),
                span: Some("span".into()),
                ..Target::default()
            });
            let i = sp.carrier().dom();
            rep.summary = "unreachable rear span constructed".into();
            rep.details.push(format!(
                "|I| = {} vertices, {} edges",
                i.vertices().len(),
                i.edges().len()
            ));
            rep.justification = format!("{VK_GRAPHS}; {COUNTEREXAMPLE}");
            rep.data = json!({ "scenario": w.to_value() });
        }
    }
    Ok(rep)
}

fn oracle(scn: &Scenario, opts: &Options) -> Result<Report, CliError> {
    let mut rep = report(Command::Oracle, true, "", BRUTE);
    let sq = pushout_bottom(scn)?;
    match (&scn.target.span, sq) {
        (Some(_), Square::Set(sq)) => {
            let Span::Set(sp) = span(scn)? else {
                return Err(CliError::Usage(
                    "span and bottom mix sets with graphs".into(),
                ));
            };
            let b = budget(opts, sq.right().cod().len())?;
            let found = brute_reachable(&sp, &sq, &b)?;
            if opts.oracle {
                agree(
                    "reachability",
                    coherence_witness(&sp, &sq)?.witness().is_some(),
                    found.is_some(),
                )?;
            }
            rep.details.push(format!(
                "budget: |K| ≤ {}, fibers ≤ {}",
                b.max_apex_size, b.max_fiber_size
            ));
            match &found {
                Some(sigma) => {
                    rep.summary = "reachable".into();
                    rep.details
                        .push(format!("instance σ = {}", show_map(sigma)));
                }
                None => {
                    rep.verdict = false;
                    rep.summary = "no instance within the budget reaches the span".into();
                }
            }
            rep.data = json!({ "reachable": found.is_some(), "sigma": found.map(|s| s.pairs().map(|(k, v)| (k.to_string(), v.to_string())).collect::<Vec<_>>()) });
        }
        (Some(_), Square::Graph(sq)) => {
            let Span::Graph(sp) = span(scn)? else {
                return Err(CliError::Usage(
                    "span and bottom mix sets with graphs".into(),
                ));
            };
            for (label, s, b) in [
                ("vertices", sp.vertex_span(), sq.vertex_square()),
                ("edges", sp.edge_span(), sq.edge_square()),
            ] {
                let found = brute_reachable(s, b, &budget(opts, b.right().cod().len())?)?.is_some();
                if opts.oracle {
                    agree(
                        &format!("reachability on {label}"),
                        coherence_witness(s, b)?.witness().is_some(),
                        found,
                    )?;
                }
                rep.details.push(format!(
                    "{label}: {}",
                    if found {
                        "reachable"
                    } else {
                        "no instance within the budget"
                    }
                ));
                rep.verdict &= found;
            }
            rep.summary = if rep.verdict {
                "reachable".into()
            } else {
                "not reachable within the budget".into()
            };
            rep.justification = format!("{VK_GRAPHS}; {BRUTE}");
            rep.data = json!({ "reachable": rep.verdict });
        }
        (None, Square::Set(sq)) => {
            let b = budget(opts, sq.right().cod().len())?;
            let found = find_unreachable_span(&sq, &b)?;
            if opts.oracle {
                agree(
                    "Van Kampen",
                    find_domain_cycle(sq.left(), sq.top())?.is_none(),
                    found.is_none(),
                )?;
            }
            rep.details.push(format!(
                "budget: |K| ≤ {}, fibers ≤ {}",
                b.max_apex_size, b.max_fiber_size
            ));
            match &found {
                None => rep.summary = "Van Kampen within the budget".into(),
                Some(sp) => {
                    rep.verdict = false;
                    rep.summary = "not Van Kampen".into();
                    rep.details.push(format!(
                        "unreachable span with |I| = {}",
                        sp.carrier().dom().len()
                    ));
                }
            }
            rep.data = json!({ "van_kampen": found.is_none() });
        }
        (None, Square::Graph(sq)) => {
            let s = sq.right().cod();
            let b = budget(opts, s.vertices().len().max(s.edges().len()))?;
            let found = GraphOracle::new(b).find_unreachable_graph_span(&sq)?;
            if opts.oracle {
                agree(
                    "Van Kampen",
                    vankampen::is_van_kampen_graph(&sq)?,
                    found.is_none(),
                )?;
            }
            rep.verdict = found.is_none();
            rep.summary = if rep.verdict {
                "Van Kampen within the budget".into()
            } else {
                "not Van Kampen".into()
            };
            rep.justification = format!("{VK_GRAPHS}; {BRUTE}");
            rep.data = json!({ "van_kampen": rep.verdict });
        }
    }
    Ok(rep)
}

/// Reads, parses and runs a scenario file.
pub fn run_file(command: Command, path: &str, opts: &Options) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })?;
    let scn = scenario::parse_scenario(&text)?;
    run(command, &scn, opts)
}
