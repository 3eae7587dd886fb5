//! JSON scenario files: named sets, maps, graphs, homs, squares, spans,
//! cubes and descent data, plus a target naming what a command acts on.
//!
//! ```json
//! {
//!   "sets":    { "L": ["x", "y"], "A": ["p"] },
//!   "maps":    { "a": { "dom": "L", "cod": "A", "map": { "x": "p", "y": "p" } } },
//!   "graphs":  { "G": { "vertices": ["u"], "edges": ["e"], "src": { "e": "u" }, "tgt": { "e": "u" } } },
//!   "homs":    { "f": { "dom": "G", "cod": "G", "vertices": { "u": "u" }, "edges": { "e": "e" } } },
//!   "squares": { "bottom": { "left": "a", "top": "r", "right": "a_bar", "bottom": "r_bar" } },
//!   "spans":   { "span": { "left": "sq1", "right": "sq2" } },
//!   "cubes":   { "cube": { "span": "span", "bottom": "bottom", "sigma": "…",
//!                          "s_prime": "…", "a_bar_prime": "…", "r_bar_prime": "…" } },
//!   "descent": { "xi": { "carrier": "gamma", "base": "a",
//!                        "family": [ { "from": "x", "to": "y", "map": { "i": "j" } } ] } },
//!   "target":  { "bottom": "bottom", "span": "span", "legs": ["a", "r"], "cube": "cube" }
//! }
//! ```
//!
//! A square has `left: L → A`, `top: L → R`, `right: R → S`, `bottom: A → S`.
//! Squares, spans and cubes built from homs are graph squares, spans and cubes.
//! All names share one namespace.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::marker::PhantomData;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;
use vankampen::{
    CommutingSquare, DescentData, FiberMap, FinGraph, FinMap, FinSet, GraphCube, GraphHom,
    GraphSpan, GraphSquare, InstanceCube, PullbackSpan,
};

/// Key/value pairs in file order; duplicate keys are kept so they can be reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entries<T>(pub Vec<(String, T)>);

impl<T> Default for Entries<T> {
    fn default() -> Self {
        Entries(Vec::new())
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Entries<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V<T>(PhantomData<T>);
        impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
            type Value = Entries<T>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object")
            }
            fn visit_map<M: MapAccess<'de>>(self, mut m: M) -> Result<Self::Value, M::Error> {
                let mut out = Vec::new();
                while let Some(entry) = m.next_entry()? {
                    out.push(entry);
                }
                Ok(Entries(out))
            }
        }
        d.deserialize_map(V(PhantomData))
    }
}

impl<T: Serialize> Serialize for Entries<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl<T> Entries<T> {
    fn push(&mut self, k: impl Into<String>, v: T) {
        self.0.push((k.into(), v));
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawMap {
    pub dom: String,
    pub cod: String,
    pub map: Entries<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub src: Entries<String>,
    pub tgt: Entries<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawHom {
    pub dom: String,
    pub cod: String,
    pub vertices: Entries<String>,
    pub edges: Entries<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawSquare {
    pub left: String,
    pub top: String,
    pub right: String,
    pub bottom: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawSpan {
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawCube {
    pub span: String,
    pub bottom: String,
    pub sigma: String,
    pub s_prime: String,
    pub a_bar_prime: String,
    pub r_bar_prime: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawComponent {
    pub from: String,
    pub to: String,
    pub map: Entries<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawDescent {
    pub carrier: String,
    pub base: String,
    pub family: Vec<RawComponent>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Target {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub legs: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cube: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawScenario {
    #[serde(default)]
    pub sets: Entries<Vec<String>>,
    #[serde(default)]
    pub maps: Entries<RawMap>,
    #[serde(default)]
    pub graphs: Entries<RawGraph>,
    #[serde(default)]
    pub homs: Entries<RawHom>,
    #[serde(default)]
    pub squares: Entries<RawSquare>,
    #[serde(default)]
    pub spans: Entries<RawSpan>,
    #[serde(default)]
    pub cubes: Entries<RawCube>,
    #[serde(default)]
    pub descent: Entries<RawDescent>,
    #[serde(default)]
    pub target: Target,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScenarioError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{}`{name}`: {message}", .line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Invalid {
        line: Option<usize>,
        name: String,
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDecl {
    pub dom: String,
    pub cod: String,
    pub map: FinMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomDecl {
    pub dom: String,
    pub cod: String,
    pub hom: GraphHom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Square {
    Set(CommutingSquare),
    Graph(GraphSquare),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Span {
    Set(PullbackSpan),
    Graph(GraphSpan),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cube {
    Set(InstanceCube),
    Graph(GraphCube),
}

/// A morphism reference resolved to either a map of sets or a graph hom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arrow {
    Set(FinMap),
    Graph(GraphHom),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Scenario {
    pub sets: BTreeMap<String, FinSet>,
    /// Declared element order of each set, and of each graph's vertices and
    /// edges under `G.vertices`, `G.edges`.
    pub order: BTreeMap<String, Vec<String>>,
    pub maps: BTreeMap<String, MapDecl>,
    pub graphs: BTreeMap<String, FinGraph>,
    pub homs: BTreeMap<String, HomDecl>,
    pub squares: BTreeMap<String, Square>,
    pub spans: BTreeMap<String, Span>,
    pub cubes: BTreeMap<String, Cube>,
    pub descent: BTreeMap<String, DescentData>,
    pub target: Target,
}

impl Scenario {
    pub fn arrow(&self, name: &str) -> Option<Arrow> {
        if let Some(m) = self.maps.get(name) {
            return Some(Arrow::Set(m.map.clone()));
        }
        self.homs.get(name).map(|h| Arrow::Graph(h.hom.clone()))
    }

    /// Declaration order of a set's elements, or its sorted order when it was
    /// not declared directly.
    pub fn element_order(&self, set: &FinSet) -> Vec<String> {
        let from_sets = self
            .sets
            .iter()
            .find(|(_, s)| *s == set)
            .map(|(name, _)| name.clone());
        let from_graphs = || {
            self.graphs.iter().find_map(|(name, g)| {
                (g.vertices() == set)
                    .then(|| format!("{name}.vertices"))
                    .or_else(|| (g.edges() == set).then(|| format!("{name}.edges")))
            })
        };
        from_sets
            .or_else(from_graphs)
            .and_then(|key| self.order.get(&key).cloned())
            .unwrap_or_else(|| set.elements().to_vec())
    }
}

/// Line of the first `"name":` key in `text`.
fn locate(text: &str, name: &str) -> Option<usize> {
    let quoted = format!("\"{name}\"");
    text.match_indices(&quoted).find_map(|(at, _)| {
        let rest = text[at + quoted.len()..].trim_start();
        rest.starts_with(':')
            .then(|| text[..at].matches('\n').count() + 1)
    })
}

struct Ctx<'a> {
    text: &'a str,
}

impl Ctx<'_> {
    fn err(&self, name: &str, message: impl fmt::Display) -> ScenarioError {
        ScenarioError::Invalid {
            line: locate(self.text, name),
            name: name.to_string(),
            message: message.to_string(),
        }
    }
}

fn lookup<'m, T>(
    ctx: &Ctx,
    owner: &str,
    table: &'m BTreeMap<String, T>,
    kind: &str,
    name: &str,
) -> Result<&'m T, ScenarioError> {
    table
        .get(name)
        .ok_or_else(|| ctx.err(owner, format!("unknown {kind} `{name}`")))
}

fn entries_map(
    ctx: &Ctx,
    owner: &str,
    dom: &FinSet,
    cod: &FinSet,
    entries: &Entries<String>,
) -> Result<FinMap, ScenarioError> {
    let mut seen = BTreeSet::new();
    for (k, _) in &entries.0 {
        if !seen.insert(k) {
            return Err(ctx.err(owner, format!("element `{k}` is assigned twice")));
        }
    }
    FinMap::new(
        dom.clone(),
        cod.clone(),
        entries.0.iter().map(|(k, v)| (k.as_str(), v.as_str())),
    )
    .map_err(|e| ctx.err(owner, e))
}

fn set_square(ctx: &Ctx, name: &str, maps: [&FinMap; 4]) -> Result<CommutingSquare, ScenarioError> {
    let [l, t, r, b] = maps.map(Clone::clone);
    CommutingSquare::new(l, t, r, b).map_err(|e| ctx.err(name, e))
}

/// Parses and validates a scenario. Errors carry the line of the offending
/// declaration when it can be found.
pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let raw: RawScenario = serde_json::from_str(text).map_err(|e| ScenarioError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(text, raw)
}

fn build(text: &str, raw: RawScenario) -> Result<Scenario, ScenarioError> {
    let ctx = Ctx { text };
    let mut names = BTreeSet::new();
    let all = raw
        .sets
        .0
        .iter()
        .map(|e| &e.0)
        .chain(raw.maps.0.iter().map(|e| &e.0))
        .chain(raw.graphs.0.iter().map(|e| &e.0))
        .chain(raw.homs.0.iter().map(|e| &e.0))
        .chain(raw.squares.0.iter().map(|e| &e.0))
        .chain(raw.spans.0.iter().map(|e| &e.0))
        .chain(raw.cubes.0.iter().map(|e| &e.0))
        .chain(raw.descent.0.iter().map(|e| &e.0));
    for name in all {
        if !names.insert(name.clone()) {
            return Err(ctx.err(name, "duplicate name"));
        }
    }

    let mut scn = Scenario::default();
    for (name, elems) in &raw.sets.0 {
        let set = FinSet::new(elems.iter().cloned()).map_err(|e| ctx.err(name, e))?;
        scn.sets.insert(name.clone(), set);
        scn.order.insert(name.clone(), elems.clone());
    }
    for (name, g) in &raw.graphs.0 {
        let v = FinSet::new(g.vertices.iter().cloned()).map_err(|e| ctx.err(name, e))?;
        let e = FinSet::new(g.edges.iter().cloned()).map_err(|e| ctx.err(name, e))?;
        let src = entries_map(&ctx, name, &e, &v, &g.src)?;
        let tgt = entries_map(&ctx, name, &e, &v, &g.tgt)?;
        scn.graphs.insert(
            name.clone(),
            FinGraph::new(src, tgt).map_err(|e| ctx.err(name, e))?,
        );
        scn.order
            .insert(format!("{name}.vertices"), g.vertices.clone());
        scn.order.insert(format!("{name}.edges"), g.edges.clone());
    }
    for (name, m) in &raw.maps.0 {
        let dom = lookup(&ctx, name, &scn.sets, "set", &m.dom)?;
        let cod = lookup(&ctx, name, &scn.sets, "set", &m.cod)?;
        let map = entries_map(&ctx, name, dom, cod, &m.map)?;
        scn.maps.insert(
            name.clone(),
            MapDecl {
                dom: m.dom.clone(),
                cod: m.cod.clone(),
                map,
            },
        );
    }
    for (name, h) in &raw.homs.0 {
        let dom = lookup(&ctx, name, &scn.graphs, "graph", &h.dom)?;
        let cod = lookup(&ctx, name, &scn.graphs, "graph", &h.cod)?;
        let on_v = entries_map(&ctx, name, dom.vertices(), cod.vertices(), &h.vertices)?;
        let on_e = entries_map(&ctx, name, dom.edges(), cod.edges(), &h.edges)?;
        let hom =
            GraphHom::new(dom.clone(), cod.clone(), on_v, on_e).map_err(|e| ctx.err(name, e))?;
        scn.homs.insert(
            name.clone(),
            HomDecl {
                dom: h.dom.clone(),
                cod: h.cod.clone(),
                hom,
            },
        );
    }
    for (name, sq) in &raw.squares.0 {
        let refs = [&sq.left, &sq.top, &sq.right, &sq.bottom];
        let square = if refs.iter().all(|r| scn.maps.contains_key(*r)) {
            Square::Set(set_square(&ctx, name, refs.map(|r| &scn.maps[r].map))?)
        } else if refs.iter().all(|r| scn.homs.contains_key(*r)) {
            let [l, t, r, b] = refs.map(|r| scn.homs[r].hom.clone());
            Square::Graph(GraphSquare::new(l, t, r, b).map_err(|e| ctx.err(name, e))?)
        } else {
            let missing = refs
                .iter()
                .find(|r| !scn.maps.contains_key(**r) && !scn.homs.contains_key(**r));
            return Err(match missing {
                Some(r) => ctx.err(name, format!("unknown map `{r}`")),
                None => ctx.err(name, "square mixes maps of sets with graph homs"),
            });
        };
        scn.squares.insert(name.clone(), square);
    }
    for (name, sp) in &raw.spans.0 {
        let left = lookup(&ctx, name, &scn.squares, "square", &sp.left)?;
        let right = lookup(&ctx, name, &scn.squares, "square", &sp.right)?;
        let span = match (left, right) {
            (Square::Set(l), Square::Set(r)) => {
                Span::Set(PullbackSpan::new(l.clone(), r.clone()).map_err(|e| ctx.err(name, e))?)
            }
            (Square::Graph(l), Square::Graph(r)) => {
                Span::Graph(GraphSpan::new(l.clone(), r.clone()).map_err(|e| ctx.err(name, e))?)
            }
            _ => return Err(ctx.err(name, "span mixes set squares with graph squares")),
        };
        scn.spans.insert(name.clone(), span);
    }
    for (name, d) in &raw.descent.0 {
        let carrier = &lookup(&ctx, name, &scn.maps, "map", &d.carrier)?.map;
        let base = &lookup(&ctx, name, &scn.maps, "map", &d.base)?.map;
        let (i, l) = (carrier.dom(), base.dom());
        let index = |set: &FinSet, x: &str| {
            set.index_of(x)
                .ok_or_else(|| ctx.err(name, format!("unknown element `{x}`")))
        };
        let mut family = BTreeMap::new();
        for c in &d.family {
            let key = (index(l, &c.from)?, index(l, &c.to)?);
            let pairs = c
                .map
                .0
                .iter()
                .map(|(x, y)| Ok((index(i, x)?, index(i, y)?)))
                .collect::<Result<Vec<_>, ScenarioError>>()?;
            if family.insert(key, FiberMap::new(pairs)).is_some() {
                return Err(ctx.err(
                    name,
                    format!("component ({}, {}) given twice", c.from, c.to),
                ));
            }
        }
        let dd = DescentData::new(carrier.clone(), base.clone(), family)
            .map_err(|e| ctx.err(name, e))?;
        dd.validate()
            .map_err(|v| ctx.err(name, format!("invalid descent data: {v}")))?;
        scn.descent.insert(name.clone(), dd);
    }
    for (name, c) in &raw.cubes.0 {
        let span = lookup(&ctx, name, &scn.spans, "span", &c.span)?;
        let bottom = lookup(&ctx, name, &scn.squares, "square", &c.bottom)?;
        let arrows = [&c.sigma, &c.s_prime, &c.a_bar_prime, &c.r_bar_prime].map(|r| {
            scn.arrow(r)
                .ok_or_else(|| ctx.err(name, format!("unknown map `{r}`")))
        });
        let [sigma, s_prime, a_bar_prime, r_bar_prime] = arrows;
        let (sigma, s_prime, a_bar_prime, r_bar_prime) =
            (sigma?, s_prime?, a_bar_prime?, r_bar_prime?);
        let cube = match (span, bottom, sigma, s_prime, a_bar_prime, r_bar_prime) {
            (
                Span::Set(span),
                Square::Set(bottom),
                Arrow::Set(sigma),
                Arrow::Set(s_prime),
                Arrow::Set(ab),
                Arrow::Set(rb),
            ) => {
                let cube = InstanceCube {
                    span: span.clone(),
                    bottom: bottom.clone(),
                    sigma,
                    s_prime,
                    a_bar_prime: ab,
                    r_bar_prime: rb,
                };
                cube.verify().map_err(|e| ctx.err(name, e))?;
                Cube::Set(cube)
            }
            (
                Span::Graph(span),
                Square::Graph(bottom),
                Arrow::Graph(sigma),
                Arrow::Graph(s_prime),
                Arrow::Graph(ab),
                Arrow::Graph(rb),
            ) => {
                let component =
                    |span: &PullbackSpan,
                     bottom: &CommutingSquare,
                     pick: &dyn Fn(&GraphHom) -> FinMap| {
                        let cube = InstanceCube {
                            span: span.clone(),
                            bottom: bottom.clone(),
                            sigma: pick(&sigma),
                            s_prime: pick(&s_prime),
                            a_bar_prime: pick(&ab),
                            r_bar_prime: pick(&rb),
                        };
                        cube.verify().map_err(|e| ctx.err(name, e))?;
                        Ok::<_, ScenarioError>(cube)
                    };
                let vertices = component(span.vertex_span(), bottom.vertex_square(), &|h| {
                    h.on_vertices().clone()
                })?;
                let edges = component(span.edge_span(), bottom.edge_square(), &|h| {
                    h.on_edges().clone()
                })?;
                Cube::Graph(GraphCube {
                    span: span.clone(),
                    bottom: bottom.clone(),
                    sigma,
                    s_prime,
                    a_bar_prime: ab,
                    r_bar_prime: rb,
                    vertices,
                    edges,
                })
            }
            _ => return Err(ctx.err(name, "cube mixes sets with graphs")),
        };
        scn.cubes.insert(name.clone(), cube);
    }

    let t = &raw.target;
    let known = |r: &str, ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(ctx.err("target", format!("unknown reference `{r}`")))
        }
    };
    if let Some(b) = &t.bottom {
        known(b, scn.squares.contains_key(b))?;
    }
    if let Some(s) = &t.span {
        known(s, scn.spans.contains_key(s))?;
    }
    if let Some(c) = &t.cube {
        known(c, scn.cubes.contains_key(c))?;
    }
    if let Some(legs) = &t.legs {
        for l in legs {
            known(l, scn.arrow(l).is_some())?;
        }
    }
    scn.target = t.clone();
    Ok(scn)
}

/// Builds scenario files from constructed objects.
#[derive(Debug, Default)]
pub struct Writer {
    raw: RawScenario,
}

fn named_entries(m: &FinMap) -> Entries<String> {
    Entries(
        m.pairs()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect(),
    )
}

impl Writer {
    pub fn new() -> Self {
        Writer::default()
    }

    pub fn set(&mut self, name: &str, set: &FinSet) -> &mut Self {
        self.raw.sets.push(name, set.elements().to_vec());
        self
    }

    pub fn map(&mut self, name: &str, dom: &str, cod: &str, m: &FinMap) -> &mut Self {
        self.raw.maps.push(
            name,
            RawMap {
                dom: dom.into(),
                cod: cod.into(),
                map: named_entries(m),
            },
        );
        self
    }

    pub fn graph(&mut self, name: &str, g: &FinGraph) -> &mut Self {
        self.raw.graphs.push(
            name,
            RawGraph {
                vertices: g.vertices().elements().to_vec(),
                edges: g.edges().elements().to_vec(),
                src: named_entries(g.src()),
                tgt: named_entries(g.tgt()),
            },
        );
        self
    }

    pub fn hom(&mut self, name: &str, dom: &str, cod: &str, h: &GraphHom) -> &mut Self {
        self.raw.homs.push(
            name,
            RawHom {
                dom: dom.into(),
                cod: cod.into(),
                vertices: named_entries(h.on_vertices()),
                edges: named_entries(h.on_edges()),
            },
        );
        self
    }

    pub fn square(&mut self, name: &str, [left, top, right, bottom]: [&str; 4]) -> &mut Self {
        self.raw.squares.push(
            name,
            RawSquare {
                left: left.into(),
                top: top.into(),
                right: right.into(),
                bottom: bottom.into(),
            },
        );
        self
    }

    pub fn span(&mut self, name: &str, left: &str, right: &str) -> &mut Self {
        self.raw.spans.push(
            name,
            RawSpan {
                left: left.into(),
                right: right.into(),
            },
        );
        self
    }

    pub fn descent(
        &mut self,
        name: &str,
        carrier: &str,
        base: &str,
        dd: &DescentData,
    ) -> &mut Self {
        let (i, l) = (dd.carrier().dom(), dd.base().dom());
        let family = dd
            .family()
            .iter()
            .map(|(&(e, e2), m)| RawComponent {
                from: l.name(e).into(),
                to: l.name(e2).into(),
                map: Entries(m.named(i)),
            })
            .collect();
        self.raw.descent.push(
            name,
            RawDescent {
                carrier: carrier.into(),
                base: base.into(),
                family,
            },
        );
        self
    }

    pub fn target(&mut self, target: Target) -> &mut Self {
        self.raw.target = target;
        self
    }

    /// Writes the bottom square as sets `L, A, R, S` and maps `a, r, a_bar, r_bar`.
    pub fn set_bottom(&mut self, bottom: &CommutingSquare) -> &mut Self {
        self.set("L", bottom.left().dom())
            .set("A", bottom.left().cod())
            .set("R", bottom.top().cod())
            .set("S", bottom.right().cod())
            .map("a", "L", "A", bottom.left())
            .map("r", "L", "R", bottom.top())
            .map("a_bar", "R", "S", bottom.right())
            .map("r_bar", "A", "S", bottom.bottom())
            .square("bottom", ["a", "r", "a_bar", "r_bar"])
    }

    /// Writes a rear span as sets `I, J, H`, maps `gamma, a_prime, r_prime,
    /// tau, beta` and squares `left`, `right`; the bottom must be written first.
    pub fn set_span(&mut self, span: &PullbackSpan) -> &mut Self {
        self.set("I", span.carrier().dom())
            .set("J", span.tau().dom())
            .set("H", span.beta().dom())
            .map("gamma", "I", "L", span.carrier())
            .map("a_prime", "I", "J", span.a_prime())
            .map("r_prime", "I", "H", span.r_prime())
            .map("tau", "J", "A", span.tau())
            .map("beta", "H", "R", span.beta())
            .square("left", ["gamma", "a_prime", "tau", "a"])
            .square("right", ["gamma", "r_prime", "beta", "r"])
            .span("span", "left", "right")
    }

    pub fn set_cube(&mut self, cube: &InstanceCube) -> &mut Self {
        self.set_bottom(&cube.bottom)
            .set_span(&cube.span)
            .set("K", cube.sigma.dom())
            .map("sigma", "K", "S", &cube.sigma)
            .map("s_prime", "I", "K", &cube.s_prime)
            .map("a_bar_prime", "H", "K", &cube.a_bar_prime)
            .map("r_bar_prime", "J", "K", &cube.r_bar_prime);
        self.raw.cubes.push(
            "cube",
            RawCube {
                span: "span".into(),
                bottom: "bottom".into(),
                sigma: "sigma".into(),
                s_prime: "s_prime".into(),
                a_bar_prime: "a_bar_prime".into(),
                r_bar_prime: "r_bar_prime".into(),
            },
        );
        self
    }

    pub fn graph_bottom(&mut self, bottom: &GraphSquare) -> &mut Self {
        self.graph("L", bottom.left().dom())
            .graph("A", bottom.left().cod())
            .graph("R", bottom.top().cod())
            .graph("S", bottom.right().cod())
            .hom("a", "L", "A", bottom.left())
            .hom("r", "L", "R", bottom.top())
            .hom("a_bar", "R", "S", bottom.right())
            .hom("r_bar", "A", "S", bottom.bottom())
            .square("bottom", ["a", "r", "a_bar", "r_bar"])
    }

    pub fn graph_span(&mut self, span: &GraphSpan) -> &mut Self {
        let (left, right) = (span.left_square(), span.right_square());
        self.graph("I", span.carrier().dom())
            .graph("J", left.right().dom())
            .graph("H", right.right().dom())
            .hom("gamma", "I", "L", span.carrier())
            .hom("a_prime", "I", "J", left.top())
            .hom("r_prime", "I", "H", right.top())
            .hom("tau", "J", "A", left.right())
            .hom("beta", "H", "R", right.right())
            .square("left", ["gamma", "a_prime", "tau", "a"])
            .square("right", ["gamma", "r_prime", "beta", "r"])
            .span("span", "left", "right")
    }

    pub fn graph_cube(&mut self, cube: &GraphCube) -> &mut Self {
        self.graph_bottom(&cube.bottom)
            .graph_span(&cube.span)
            .graph("K", cube.sigma.dom())
            .hom("sigma", "K", "S", &cube.sigma)
            .hom("s_prime", "I", "K", &cube.s_prime)
            .hom("a_bar_prime", "H", "K", &cube.a_bar_prime)
            .hom("r_bar_prime", "J", "K", &cube.r_bar_prime);
        self.raw.cubes.push(
            "cube",
            RawCube {
                span: "span".into(),
                bottom: "bottom".into(),
                sigma: "sigma".into(),
                s_prime: "s_prime".into(),
                a_bar_prime: "a_bar_prime".into(),
                r_bar_prime: "r_bar_prime".into(),
            },
        );
        self
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(&self.raw).expect("scenario is plain data")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.raw).expect("scenario is plain data")
    }
}

/// A cube as a standalone scenario targeting it.
pub fn cube_scenario(cube: &Cube) -> Writer {
    let mut w = Writer::new();
    match cube {
        Cube::Set(c) => w.set_cube(c),
        Cube::Graph(c) => w.graph_cube(c),
    };
    w.target(Target {
        bottom: Some("bottom".into()),
        span: Some("span".into()),
        legs: None,
        cube: Some("cube".into()),
    });
    w
}
