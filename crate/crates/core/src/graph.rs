//! Finite directed multigraphs `(V, E; src, tgt)` and their homomorphisms.
//! Limits and colimits are computed componentwise on vertices and edges.

use std::fmt;

use crate::coherence::{amalgamate, unreachable_span_for_cycle};
use crate::cycles::{find_domain_cycle, has_separated_kernels};
use crate::error::{Error, Result};
use crate::finset::{compose, FinMap, FinSet};
use crate::limits::{pullback, pushout, CommutingSquare};
use crate::span::{InstanceCube, PullbackSpan};

#[derive(Clone, PartialEq, Eq)]
pub struct FinGraph {
    src: FinMap,
    tgt: FinMap,
}

impl FinGraph {
    pub fn new(src: FinMap, tgt: FinMap) -> Result<Self> {
        if src.dom() != tgt.dom() || src.cod() != tgt.cod() {
            return Err(Error::ShapeMismatch(
                "src and tgt must both map edges to vertices".into(),
            ));
        }
        Ok(FinGraph { src, tgt })
    }

    /// Builds a graph from named edges `(edge, source, target)`.
    pub fn from_edges<S: AsRef<str>>(vertices: FinSet, edges: &[(S, S, S)]) -> Result<Self> {
        let e = FinSet::new(edges.iter().map(|t| t.0.as_ref()))?;
        let src = FinMap::new(
            e.clone(),
            vertices.clone(),
            edges.iter().map(|t| (t.0.as_ref(), t.1.as_ref())),
        )?;
        let tgt = FinMap::new(
            e,
            vertices,
            edges.iter().map(|t| (t.0.as_ref(), t.2.as_ref())),
        )?;
        FinGraph::new(src, tgt)
    }

    /// The graph with the given vertices and no edges.
    pub fn discrete(vertices: FinSet) -> Self {
        let none = FinMap::from_indices(FinSet::empty(), vertices, Vec::new()).expect("empty map");
        FinGraph {
            src: none.clone(),
            tgt: none,
        }
    }

    pub fn vertices(&self) -> &FinSet {
        self.src.cod()
    }

    pub fn edges(&self) -> &FinSet {
        self.src.dom()
    }

    pub fn src(&self) -> &FinMap {
        &self.src
    }

    pub fn tgt(&self) -> &FinMap {
        &self.tgt
    }
}

impl fmt::Debug for FinGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={} E=[", self.vertices())?;
        for e in 0..self.edges().len() {
            if e > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{}: {}→{}",
                self.edges().name(e),
                self.vertices().name(self.src.at(e)),
                self.vertices().name(self.tgt.at(e))
            )?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct GraphHom {
    dom: FinGraph,
    cod: FinGraph,
    on_vertices: FinMap,
    on_edges: FinMap,
}

impl GraphHom {
    pub fn new(
        dom: FinGraph,
        cod: FinGraph,
        on_vertices: FinMap,
        on_edges: FinMap,
    ) -> Result<Self> {
        if on_vertices.dom() != dom.vertices() || on_vertices.cod() != cod.vertices() {
            return Err(Error::NotGraphHom("vertex map has the wrong shape".into()));
        }
        if on_edges.dom() != dom.edges() || on_edges.cod() != cod.edges() {
            return Err(Error::NotGraphHom("edge map has the wrong shape".into()));
        }
        for e in 0..dom.edges().len() {
            let image = on_edges.at(e);
            if on_vertices.at(dom.src.at(e)) != cod.src.at(image)
                || on_vertices.at(dom.tgt.at(e)) != cod.tgt.at(image)
            {
                return Err(Error::NotGraphHom(format!(
                    "edge {} is not mapped compatibly with its endpoints",
                    dom.edges().name(e)
                )));
            }
        }
        Ok(GraphHom {
            dom,
            cod,
            on_vertices,
            on_edges,
        })
    }

    pub fn identity(g: &FinGraph) -> Self {
        GraphHom {
            dom: g.clone(),
            cod: g.clone(),
            on_vertices: FinMap::identity(g.vertices()),
            on_edges: FinMap::identity(g.edges()),
        }
    }

    pub fn dom(&self) -> &FinGraph {
        &self.dom
    }

    pub fn cod(&self) -> &FinGraph {
        &self.cod
    }

    pub fn on_vertices(&self) -> &FinMap {
        &self.on_vertices
    }

    pub fn on_edges(&self) -> &FinMap {
        &self.on_edges
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GraphHom) -> Result<GraphHom> {
        if self.cod != other.dom {
            return Err(Error::ShapeMismatch(
                "graph homomorphisms do not compose".into(),
            ));
        }
        Ok(GraphHom {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            on_vertices: compose(&other.on_vertices, &self.on_vertices)?,
            on_edges: compose(&other.on_edges, &self.on_edges)?,
        })
    }
}

impl fmt::Debug for GraphHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphHom")
            .field("vertices", &self.on_vertices)
            .field("edges", &self.on_edges)
            .finish()
    }
}

/// Builds the hom from its components, with `src` and `tgt` induced on the
/// codomain's edges by any preimage.
fn induced_graph(
    edges: &FinSet,
    vertices: &FinSet,
    preimages: &[(&FinMap, &FinGraph, &FinMap)],
) -> Result<FinGraph> {
    let mut src = vec![usize::MAX; edges.len()];
    let mut tgt = vec![usize::MAX; edges.len()];
    for &(on_edges, g, on_vertices) in preimages {
        for e in 0..g.edges().len() {
            let k = on_edges.at(e);
            for (slot, end) in [(&mut src[k], g.src.at(e)), (&mut tgt[k], g.tgt.at(e))] {
                let v = on_vertices.at(end);
                if *slot != usize::MAX && *slot != v {
                    return Err(Error::ComponentMismatch(edges.name(k).to_string()));
                }
                *slot = v;
            }
        }
    }
    if let Some(k) = src.iter().position(|&v| v == usize::MAX) {
        return Err(Error::Internal(format!(
            "edge {} has no preimage",
            edges.name(k)
        )));
    }
    FinGraph::new(
        FinMap::from_indices(edges.clone(), vertices.clone(), src)?,
        FinMap::from_indices(edges.clone(), vertices.clone(), tgt)?,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPushout {
    pub apex: FinGraph,
    pub inj1: GraphHom,
    pub inj2: GraphHom,
}

pub fn graph_pushout(f: &GraphHom, g: &GraphHom) -> Result<GraphPushout> {
    if f.dom != g.dom {
        return Err(Error::ShapeMismatch(
            "pushout of graph homs with different domains".into(),
        ));
    }
    let pv = pushout(&f.on_vertices, &g.on_vertices)?;
    let pe = pushout(&f.on_edges, &g.on_edges)?;
    let apex = induced_graph(
        &pe.apex,
        &pv.apex,
        &[(&pe.inj1, &f.cod, &pv.inj1), (&pe.inj2, &g.cod, &pv.inj2)],
    )?;
    Ok(GraphPushout {
        inj1: GraphHom::new(f.cod.clone(), apex.clone(), pv.inj1, pe.inj1)?,
        inj2: GraphHom::new(g.cod.clone(), apex.clone(), pv.inj2, pe.inj2)?,
        apex,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphPullback {
    pub apex: FinGraph,
    pub proj1: GraphHom,
    pub proj2: GraphHom,
}

pub fn graph_pullback(f: &GraphHom, g: &GraphHom) -> Result<GraphPullback> {
    if f.cod != g.cod {
        return Err(Error::ShapeMismatch(
            "pullback of graph homs with different codomains".into(),
        ));
    }
    let pv = pullback(&f.on_vertices, &g.on_vertices)?;
    let pe = pullback(&f.on_edges, &g.on_edges)?;
    let index: std::collections::HashMap<(usize, usize), usize> = (0..pv.apex.len())
        .map(|t| ((pv.proj1.at(t), pv.proj2.at(t)), t))
        .collect();
    let end = |m1: &FinMap, m2: &FinMap| -> Result<FinMap> {
        let images = (0..pe.apex.len())
            .map(|t| index[&(m1.at(pe.proj1.at(t)), m2.at(pe.proj2.at(t)))])
            .collect();
        FinMap::from_indices(pe.apex.clone(), pv.apex.clone(), images)
    };
    let apex = FinGraph::new(end(&f.dom.src, &g.dom.src)?, end(&f.dom.tgt, &g.dom.tgt)?)?;
    Ok(GraphPullback {
        proj1: GraphHom::new(apex.clone(), f.dom.clone(), pv.proj1, pe.proj1)?,
        proj2: GraphHom::new(apex.clone(), g.dom.clone(), pv.proj2, pe.proj2)?,
        apex,
    })
}

/// A commuting square of graph homs, laid out like [`CommutingSquare`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSquare {
    left: GraphHom,
    top: GraphHom,
    right: GraphHom,
    bottom: GraphHom,
    vertices: CommutingSquare,
    edges: CommutingSquare,
}

impl GraphSquare {
    pub fn new(left: GraphHom, top: GraphHom, right: GraphHom, bottom: GraphHom) -> Result<Self> {
        let vertices = CommutingSquare::new(
            left.on_vertices.clone(),
            top.on_vertices.clone(),
            right.on_vertices.clone(),
            bottom.on_vertices.clone(),
        )?;
        let edges = CommutingSquare::new(
            left.on_edges.clone(),
            top.on_edges.clone(),
            right.on_edges.clone(),
            bottom.on_edges.clone(),
        )?;
        if left.cod != bottom.dom
            || top.cod != right.dom
            || left.dom != top.dom
            || right.cod != bottom.cod
        {
            return Err(Error::ShapeMismatch(
                "graph square corners do not match".into(),
            ));
        }
        Ok(GraphSquare {
            left,
            top,
            right,
            bottom,
            vertices,
            edges,
        })
    }

    pub fn left(&self) -> &GraphHom {
        &self.left
    }

    pub fn top(&self) -> &GraphHom {
        &self.top
    }

    pub fn right(&self) -> &GraphHom {
        &self.right
    }

    pub fn bottom(&self) -> &GraphHom {
        &self.bottom
    }

    pub fn vertex_square(&self) -> &CommutingSquare {
        &self.vertices
    }

    pub fn edge_square(&self) -> &CommutingSquare {
        &self.edges
    }

    pub fn is_pushout(&self) -> bool {
        self.vertices.is_pushout() && self.edges.is_pushout()
    }

    pub fn is_pullback(&self) -> bool {
        self.vertices.is_pullback() && self.edges.is_pullback()
    }
}

impl GraphPushout {
    pub fn square(&self, f: &GraphHom, g: &GraphHom) -> Result<GraphSquare> {
        GraphSquare::new(f.clone(), g.clone(), self.inj2.clone(), self.inj1.clone())
    }
}

/// Decides the Van Kampen property of a pushout of graphs: separated
/// kernels on the vertex maps and on the edge maps.
pub fn is_van_kampen_graph(sq: &GraphSquare) -> Result<bool> {
    if !sq.is_pushout() {
        return Err(Error::NotAPushout);
    }
    Ok(
        has_separated_kernels(sq.left.on_vertices(), sq.top.on_vertices())?
            && has_separated_kernels(sq.left.on_edges(), sq.top.on_edges())?,
    )
}

/// Two pullback squares of graphs sharing the instance `γ: I → L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpan {
    left: GraphSquare,
    right: GraphSquare,
    vertices: PullbackSpan,
    edges: PullbackSpan,
}

impl GraphSpan {
    pub fn new(left: GraphSquare, right: GraphSquare) -> Result<Self> {
        if left.left != right.left {
            return Err(Error::MalformedSpan(
                "the two squares do not share the instance γ".into(),
            ));
        }
        let vertices = PullbackSpan::new(left.vertices.clone(), right.vertices.clone())?;
        let edges = PullbackSpan::new(left.edges.clone(), right.edges.clone())?;
        Ok(GraphSpan {
            left,
            right,
            vertices,
            edges,
        })
    }

    pub fn left_square(&self) -> &GraphSquare {
        &self.left
    }

    pub fn right_square(&self) -> &GraphSquare {
        &self.right
    }

    pub fn carrier(&self) -> &GraphHom {
        &self.left.left
    }

    pub fn vertex_span(&self) -> &PullbackSpan {
        &self.vertices
    }

    pub fn edge_span(&self) -> &PullbackSpan {
        &self.edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCube {
    pub span: GraphSpan,
    pub bottom: GraphSquare,
    pub sigma: GraphHom,
    pub s_prime: GraphHom,
    pub a_bar_prime: GraphHom,
    pub r_bar_prime: GraphHom,
    pub vertices: InstanceCube,
    pub edges: InstanceCube,
}

/// Amalgamates vertex and edge components separately and induces `src`/`tgt`
/// on the amalgamated apex; fails with [`Error::ComponentMismatch`] when the
/// induced endpoints disagree.
pub fn amalgamate_graph(span: &GraphSpan, bottom: &GraphSquare) -> Result<Option<GraphCube>> {
    if !bottom.is_pushout() {
        return Err(Error::NotAPushout);
    }
    let (Some(cv), Some(ce)) = (
        amalgamate(&span.vertices, &bottom.vertices)?,
        amalgamate(&span.edges, &bottom.edges)?,
    ) else {
        return Ok(None);
    };
    let i = span.carrier().dom();
    let j = span.left.top.cod();
    let h = span.right.top.cod();
    let k = induced_graph(
        ce.sigma.dom(),
        cv.sigma.dom(),
        &[
            (&ce.s_prime, i, &cv.s_prime),
            (&ce.r_bar_prime, j, &cv.r_bar_prime),
            (&ce.a_bar_prime, h, &cv.a_bar_prime),
        ],
    )?;
    let s = bottom.right.cod();
    let hom = |dom: &FinGraph, cod: &FinGraph, v: &FinMap, e: &FinMap| {
        GraphHom::new(dom.clone(), cod.clone(), v.clone(), e.clone())
            .map_err(|err| Error::Internal(format!("amalgamated map is not a graph hom: {err}")))
    };
    Ok(Some(GraphCube {
        span: span.clone(),
        bottom: bottom.clone(),
        sigma: hom(&k, s, &cv.sigma, &ce.sigma)?,
        s_prime: hom(i, &k, &cv.s_prime, &ce.s_prime)?,
        a_bar_prime: hom(h, &k, &cv.a_bar_prime, &ce.a_bar_prime)?,
        r_bar_prime: hom(j, &k, &cv.r_bar_prime, &ce.r_bar_prime)?,
        vertices: cv,
        edges: ce,
    }))
}

/// Pulls a graph instance `σ: K → S` back along a bottom square.
pub fn pull_back_graph_instance(bottom: &GraphSquare, sigma: &GraphHom) -> Result<GraphSpan> {
    let diagonal = bottom.left.then(&bottom.bottom)?;
    let i = graph_pullback(&diagonal, sigma)?;
    let j = graph_pullback(&bottom.bottom, sigma)?;
    let h = graph_pullback(&bottom.right, sigma)?;
    let gamma = i.proj1.clone();
    let leg = |target: &GraphPullback, m: &GraphHom| -> Result<GraphHom> {
        let mediate =
            |i_proj1: &FinMap, i_proj2: &FinMap, t_proj1: &FinMap, t_proj2: &FinMap, m: &FinMap| {
                let index: std::collections::HashMap<(usize, usize), usize> =
                    (0..t_proj1.dom().len())
                        .map(|t| ((t_proj1.at(t), t_proj2.at(t)), t))
                        .collect();
                let images = (0..i_proj1.dom().len())
                    .map(|t| index[&(m.at(i_proj1.at(t)), i_proj2.at(t))])
                    .collect();
                FinMap::from_indices(i_proj1.dom().clone(), t_proj1.dom().clone(), images)
            };
        let v = mediate(
            i.proj1.on_vertices(),
            i.proj2.on_vertices(),
            target.proj1.on_vertices(),
            target.proj2.on_vertices(),
            m.on_vertices(),
        )?;
        let e = mediate(
            i.proj1.on_edges(),
            i.proj2.on_edges(),
            target.proj1.on_edges(),
            target.proj2.on_edges(),
            m.on_edges(),
        )?;
        GraphHom::new(i.apex.clone(), target.apex.clone(), v, e)
    };
    let a_prime = leg(&j, &bottom.left)?;
    let r_prime = leg(&h, &bottom.top)?;
    GraphSpan::new(
        GraphSquare::new(gamma.clone(), a_prime, j.proj1.clone(), bottom.left.clone())?,
        GraphSquare::new(gamma, r_prime, h.proj1.clone(), bottom.top.clone())?,
    )
}

/// A rear span over a non-Van-Kampen pushout of graphs that no instance
/// reaches, built from a domain cycle of the vertex legs (as a span with no
/// edges) or else of the edge legs (over the identity vertex span).
pub fn unreachable_graph_span(sq: &GraphSquare) -> Result<Option<GraphSpan>> {
    if !sq.is_pushout() {
        return Err(Error::NotAPushout);
    }
    let (l, a, r) = (sq.left.dom(), sq.left.cod(), sq.top.cod());
    if let Some(cycle) = find_domain_cycle(sq.left.on_vertices(), sq.top.on_vertices())? {
        let v = unreachable_span_for_cycle(sq.left.on_vertices(), sq.top.on_vertices(), &cycle)?;
        return discrete_graph_span(sq, &v).map(Some);
    }
    let Some(cycle) = find_domain_cycle(sq.left.on_edges(), sq.top.on_edges())? else {
        return Ok(None);
    };
    let e = unreachable_span_for_cycle(sq.left.on_edges(), sq.top.on_edges(), &cycle)?;
    let over = |base: &FinGraph, leg: &FinMap| -> Result<FinGraph> {
        FinGraph::new(compose(base.src(), leg)?, compose(base.tgt(), leg)?)
    };
    let i = over(l, e.carrier())?;
    let j = over(a, e.tau())?;
    let h = over(r, e.beta())?;
    let hom = |dom: &FinGraph, cod: &FinGraph, v: &FinMap, m: &FinMap| {
        GraphHom::new(dom.clone(), cod.clone(), v.clone(), m.clone())
    };
    let (id_l, id_a, id_r) = (
        FinMap::identity(l.vertices()),
        FinMap::identity(a.vertices()),
        FinMap::identity(r.vertices()),
    );
    let gamma = hom(&i, l, &id_l, e.carrier())?;
    GraphSpan::new(
        GraphSquare::new(
            gamma.clone(),
            hom(&i, &j, sq.left.on_vertices(), e.a_prime())?,
            hom(&j, a, &id_a, e.tau())?,
            sq.left.clone(),
        )?,
        GraphSquare::new(
            gamma,
            hom(&i, &h, sq.top.on_vertices(), e.r_prime())?,
            hom(&h, r, &id_r, e.beta())?,
            sq.top.clone(),
        )?,
    )
    .map(Some)
}

/// A vertex span with no edges, as a span of graphs over `sq`.
pub(crate) fn discrete_graph_span(sq: &GraphSquare, v: &PullbackSpan) -> Result<GraphSpan> {
    let lift = |g: &FinGraph, m: &FinMap, to: &FinGraph| {
        let none = FinMap::from_indices(FinSet::empty(), to.edges().clone(), Vec::new())?;
        GraphHom::new(g.clone(), to.clone(), m.clone(), none)
    };
    let between = |m: &FinMap| {
        let (d, c) = (
            FinGraph::discrete(m.dom().clone()),
            FinGraph::discrete(m.cod().clone()),
        );
        GraphHom::new(d, c, m.clone(), FinMap::identity(&FinSet::empty()))
    };
    let (l, a, r) = (sq.left.dom(), sq.left.cod(), sq.top.cod());
    let i = FinGraph::discrete(v.carrier().dom().clone());
    let j = FinGraph::discrete(v.tau().dom().clone());
    let h = FinGraph::discrete(v.beta().dom().clone());
    let gamma = lift(&i, v.carrier(), l)?;
    GraphSpan::new(
        GraphSquare::new(
            gamma.clone(),
            between(v.a_prime())?,
            lift(&j, v.tau(), a)?,
            sq.left.clone(),
        )?,
        GraphSquare::new(
            gamma,
            between(v.r_prime())?,
            lift(&h, v.beta(), r)?,
            sq.top.clone(),
        )?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[&str]) -> FinSet {
        FinSet::new(xs.iter().copied()).unwrap()
    }

    fn arrow() -> FinGraph {
        FinGraph::from_edges(set(&["s", "t"]), &[("e", "s", "t")]).unwrap()
    }

    fn point() -> FinGraph {
        FinGraph::discrete(set(&["v"]))
    }

    #[test]
    fn hom_validation() {
        let g = arrow();
        let loop_graph = FinGraph::from_edges(set(&["v"]), &[("l", "v", "v")]).unwrap();
        let collapse = FinMap::from_fn(g.vertices().clone(), set(&["v"]), |_| "v".into()).unwrap();
        let on_e = FinMap::from_fn(g.edges().clone(), set(&["l"]), |_| "l".into()).unwrap();
        assert!(GraphHom::new(g.clone(), loop_graph.clone(), collapse, on_e.clone()).is_ok());
        let two = FinGraph::from_edges(set(&["v", "w"]), &[("l", "v", "v")]).unwrap();
        let bad = FinMap::new(
            g.vertices().clone(),
            set(&["v", "w"]),
            [("s", "v"), ("t", "w")],
        )
        .unwrap();
        assert!(matches!(
            GraphHom::new(g, two, bad, on_e),
            Err(Error::NotGraphHom(_))
        ));
    }

    #[test]
    fn gluing_two_arrows_at_a_vertex() {
        // Point ↦ target of one arrow and source of another.
        let p = point();
        let g = arrow();
        let at = |name: &str| {
            let v = FinMap::new(p.vertices().clone(), g.vertices().clone(), [("v", name)]).unwrap();
            let e = FinMap::from_indices(FinSet::empty(), g.edges().clone(), vec![]).unwrap();
            GraphHom::new(p.clone(), g.clone(), v, e).unwrap()
        };
        let po = graph_pushout(&at("t"), &at("s")).unwrap();
        assert_eq!(po.apex.vertices().len(), 3);
        assert_eq!(po.apex.edges().len(), 2);
        assert!(po.square(&at("t"), &at("s")).unwrap().is_pushout());
    }

    #[test]
    fn pushout_of_identities_and_empty_domain() {
        let g = arrow();
        let id = GraphHom::identity(&g);
        assert_eq!(graph_pushout(&id, &id).unwrap().apex.edges().len(), 1);
        let empty = FinGraph::discrete(FinSet::empty());
        let from_empty = GraphHom::new(
            empty,
            g.clone(),
            FinMap::from_indices(FinSet::empty(), g.vertices().clone(), vec![]).unwrap(),
            FinMap::from_indices(FinSet::empty(), g.edges().clone(), vec![]).unwrap(),
        )
        .unwrap();
        let po = graph_pushout(&from_empty, &from_empty).unwrap();
        assert_eq!((po.apex.vertices().len(), po.apex.edges().len()), (4, 2));
    }

    #[test]
    fn pullbacks() {
        let g = arrow();
        let id = GraphHom::identity(&g);
        let pb = graph_pullback(&id, &id).unwrap();
        assert_eq!((pb.apex.vertices().len(), pb.apex.edges().len()), (2, 1));
        // Vertex-disjoint images.
        let host = FinGraph::discrete(set(&["x", "y"]));
        let to = |name: &str| {
            let v = FinMap::from_fn(point().vertices().clone(), host.vertices().clone(), |_| {
                name.into()
            })
            .unwrap();
            let e = FinMap::from_indices(FinSet::empty(), FinSet::empty(), vec![]).unwrap();
            GraphHom::new(point(), host.clone(), v, e).unwrap()
        };
        let pb = graph_pullback(&to("x"), &to("y")).unwrap();
        assert!(pb.apex.vertices().is_empty());
    }

    #[test]
    fn monic_legs_are_van_kampen() {
        let g = arrow();
        let id = GraphHom::identity(&g);
        let po = graph_pushout(&id, &id).unwrap();
        assert!(is_van_kampen_graph(&po.square(&id, &id).unwrap()).unwrap());
    }
}
