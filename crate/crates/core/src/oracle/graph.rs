//! Brute-force Van Kampen check for pushouts of graphs.
//!
//! Pullbacks and pushouts of graphs are computed on vertices and edges
//! separately, so a rear span of graphs is reachable exactly when its vertex
//! span and its edge span are. The search therefore looks for an unreachable
//! vertex span or edge span (by instance enumeration over the apex) and then
//! for a rear span of graphs that has it as a component. Any span found is
//! returned as a certificate.

use std::collections::HashMap;
use std::rc::Rc;

use super::{enumerate_spans, permutations, set_partitions, unreachable_spans, SearchBudget};
use crate::error::{Error, Result};
use crate::finset::{FinMap, FinSet};
use crate::graph::{discrete_graph_span, FinGraph, GraphHom, GraphSpan, GraphSquare};
use crate::limits::CommutingSquare;
use crate::partition::Partition;
use crate::span::PullbackSpan;

type LegsKey = (
    Vec<String>,
    Vec<String>,
    Vec<usize>,
    Vec<String>,
    Vec<usize>,
);

fn legs_key(a: &FinMap, r: &FinMap) -> LegsKey {
    (
        a.dom().elements().to_vec(),
        a.cod().elements().to_vec(),
        a.images().to_vec(),
        r.cod().elements().to_vec(),
        r.images().to_vec(),
    )
}

/// Graph oracle with a cache of unreachable set-level spans per pair of legs.
pub struct GraphOracle {
    budget: SearchBudget,
    cache: HashMap<LegsKey, Rc<Vec<PullbackSpan>>>,
    vertex_spans: HashMap<LegsKey, Rc<Vec<PullbackSpan>>>,
}

impl GraphOracle {
    pub fn new(budget: SearchBudget) -> Self {
        GraphOracle {
            budget,
            cache: HashMap::new(),
            vertex_spans: HashMap::new(),
        }
    }

    fn unreachable(&mut self, sq: &CommutingSquare) -> Result<Rc<Vec<PullbackSpan>>> {
        let key = legs_key(sq.left(), sq.top());
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        let spans = Rc::new(unreachable_spans(sq, &self.budget)?);
        self.cache.insert(key, spans.clone());
        Ok(spans)
    }

    fn all_spans(&mut self, a: &FinMap, r: &FinMap) -> Result<Rc<Vec<PullbackSpan>>> {
        let key = legs_key(a, r);
        if let Some(hit) = self.vertex_spans.get(&key) {
            return Ok(hit.clone());
        }
        let spans = Rc::new(enumerate_spans(a, r, self.budget.max_fiber_size)?);
        self.vertex_spans.insert(key, spans.clone());
        Ok(spans)
    }

    /// A rear span of graphs with fibers bounded by the budget that is not
    /// reachable, if any.
    pub fn find_unreachable_graph_span(&mut self, sq: &GraphSquare) -> Result<Option<GraphSpan>> {
        if !sq.is_pushout() {
            return Err(Error::NotAPushout);
        }
        if let Some(v) = self.unreachable(sq.vertex_square())?.first() {
            return discrete_graph_span(sq, v).map(Some);
        }
        let edge_spans = self.unreachable(sq.edge_square())?;
        if edge_spans.is_empty() {
            return Ok(None);
        }
        let vertex_spans = self.all_spans(sq.left().on_vertices(), sq.top().on_vertices())?;
        for e in edge_spans.iter() {
            for v in vertex_spans.iter() {
                if let Some(span) = extend(sq, v, e)? {
                    return Ok(Some(span));
                }
            }
        }
        Ok(None)
    }

    pub fn is_van_kampen(&mut self, sq: &GraphSquare) -> Result<bool> {
        Ok(self.find_unreachable_graph_span(sq)?.is_none())
    }
}

pub fn brute_van_kampen_graph(sq: &GraphSquare, budget: &SearchBudget) -> Result<bool> {
    GraphOracle::new(*budget).is_van_kampen(sq)
}

/// Endpoint maps `I_E → I_V`, `J_E → J_V`, `H_E → H_V` over one endpoint
/// map of `L`, `A`, `R`, or none.
fn endpoints(
    v: &PullbackSpan,
    e: &PullbackSpan,
    end_l: &FinMap,
    end_a: &FinMap,
    end_r: &FinMap,
) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let n_i = e.carrier().dom().len();
    let mut over_l = vec![Vec::new(); v.carrier().cod().len()];
    for x in 0..v.carrier().dom().len() {
        over_l[v.carrier().at(x)].push(x);
    }
    let mut state = (
        vec![usize::MAX; n_i],
        vec![usize::MAX; e.tau().dom().len()],
        vec![usize::MAX; e.beta().dom().len()],
    );

    fn go(
        t: usize,
        v: &PullbackSpan,
        e: &PullbackSpan,
        end_l: &FinMap,
        over_l: &[Vec<usize>],
        state: &mut (Vec<usize>, Vec<usize>, Vec<usize>),
    ) -> bool {
        if t == state.0.len() {
            return true;
        }
        let (j, h) = (e.a_prime().at(t), e.r_prime().at(t));
        for &x in &over_l[end_l.at(e.carrier().at(t))] {
            let (jv, hv) = (v.a_prime().at(x), v.r_prime().at(x));
            let (old_j, old_h) = (state.1[j], state.2[h]);
            if (old_j != usize::MAX && old_j != jv) || (old_h != usize::MAX && old_h != hv) {
                continue;
            }
            state.0[t] = x;
            state.1[j] = jv;
            state.2[h] = hv;
            if go(t + 1, v, e, end_l, over_l, state) {
                return true;
            }
            state.1[j] = old_j;
            state.2[h] = old_h;
        }
        false
    }
    if !go(0, v, e, end_l, &over_l, &mut state) {
        return None;
    }
    let fill = |slots: &mut Vec<usize>, over: &FinMap, end: &FinMap, vertical: &FinMap| -> bool {
        for (k, slot) in slots.iter_mut().enumerate() {
            if *slot == usize::MAX {
                let want = end.at(over.at(k));
                match (0..vertical.dom().len()).find(|&y| vertical.at(y) == want) {
                    Some(y) => *slot = y,
                    None => return false,
                }
            }
        }
        true
    };
    let (i_end, mut j_end, mut h_end) = state;
    (fill(&mut j_end, e.tau(), end_a, v.tau()) && fill(&mut h_end, e.beta(), end_r, v.beta()))
        .then_some((i_end, j_end, h_end))
}

/// A span of graphs with vertex span `v` and edge span `e`, if the endpoint
/// maps can be chosen compatibly.
fn extend(sq: &GraphSquare, v: &PullbackSpan, e: &PullbackSpan) -> Result<Option<GraphSpan>> {
    let (l, a, r) = (sq.left().dom(), sq.left().cod(), sq.top().cod());
    let Some(src) = endpoints(v, e, l.src(), a.src(), r.src()) else {
        return Ok(None);
    };
    let Some(tgt) = endpoints(v, e, l.tgt(), a.tgt(), r.tgt()) else {
        return Ok(None);
    };
    let graph = |edges: &FinSet, vertices: &FinSet, s: Vec<usize>, t: Vec<usize>| {
        FinGraph::new(
            FinMap::from_indices(edges.clone(), vertices.clone(), s)?,
            FinMap::from_indices(edges.clone(), vertices.clone(), t)?,
        )
    };
    let i = graph(e.carrier().dom(), v.carrier().dom(), src.0, tgt.0)?;
    let j = graph(e.tau().dom(), v.tau().dom(), src.1, tgt.1)?;
    let h = graph(e.beta().dom(), v.beta().dom(), src.2, tgt.2)?;
    let gamma = GraphHom::new(
        i.clone(),
        l.clone(),
        v.carrier().clone(),
        e.carrier().clone(),
    )?;
    let a_prime = GraphHom::new(
        i.clone(),
        j.clone(),
        v.a_prime().clone(),
        e.a_prime().clone(),
    )?;
    let r_prime = GraphHom::new(i, h.clone(), v.r_prime().clone(), e.r_prime().clone())?;
    let tau = GraphHom::new(j, a.clone(), v.tau().clone(), e.tau().clone())?;
    let beta = GraphHom::new(h, r.clone(), v.beta().clone(), e.beta().clone())?;
    GraphSpan::new(
        GraphSquare::new(gamma.clone(), a_prime, tau, sq.left().clone())?,
        GraphSquare::new(gamma, r_prime, beta, sq.top().clone())?,
    )
    .map(Some)
}

/// Every graph with at most `max_v` vertices and `max_e` edges, one per
/// isomorphism class. Vertices are `v0…`, edges `e0…`.
pub fn enumerate_graphs(max_v: usize, max_e: usize) -> Vec<FinGraph> {
    let mut out = Vec::new();
    for n in 0..=max_v {
        let perms = permutations(n);
        for m in 0..=max_e {
            if m > 0 && n == 0 {
                continue;
            }
            let mut cur = Vec::new();
            arcs(n * n, m, 0, &mut cur, &mut |codes| {
                let canonical = perms.iter().all(|p| {
                    let mut image: Vec<usize> =
                        codes.iter().map(|&c| p[c / n] * n + p[c % n]).collect();
                    image.sort_unstable();
                    image.as_slice() >= codes
                });
                if canonical {
                    out.push(graph_from_codes(n, codes));
                }
            });
        }
    }
    out
}

fn arcs(
    codes: usize,
    len: usize,
    from: usize,
    cur: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if cur.len() == len {
        visit(cur);
        return;
    }
    for c in from..codes {
        cur.push(c);
        arcs(codes, len, c, cur, visit);
        cur.pop();
    }
}

fn graph_from_codes(n: usize, codes: &[usize]) -> FinGraph {
    let vertices = FinSet::new((0..n).map(|i| format!("v{i}"))).expect("distinct");
    let edges = FinSet::new((0..codes.len()).map(|i| format!("e{i}"))).expect("distinct");
    let s = codes.iter().map(|&c| c / n).collect();
    let t = codes.iter().map(|&c| c % n).collect();
    FinGraph::new(
        FinMap::from_indices(edges.clone(), vertices.clone(), s).expect("in range"),
        FinMap::from_indices(edges, vertices, t).expect("in range"),
    )
    .expect("same shape")
}

/// Quotient homs of `g`: one per pair of vertex and edge partitions such
/// that related edges have related sources and related targets.
pub fn quotient_homs(g: &FinGraph) -> Vec<GraphHom> {
    let mut out = Vec::new();
    for pv in set_partitions(g.vertices().len()) {
        for pe in set_partitions(g.edges().len()) {
            let compatible = (0..pe.len()).all(|x| {
                (0..pe.len()).all(|y| {
                    pe[x] != pe[y]
                        || (pv[g.src().at(x)] == pv[g.src().at(y)]
                            && pv[g.tgt().at(x)] == pv[g.tgt().at(y)])
                })
            });
            if compatible {
                out.push(quotient_hom(g, &pv, &pe));
            }
        }
    }
    out
}

fn quotient_hom(g: &FinGraph, pv: &[usize], pe: &[usize]) -> GraphHom {
    let qv = Partition::from_labels(g.vertices(), pv)
        .expect("labels fit")
        .quotient_map();
    let qe = Partition::from_labels(g.edges(), pe)
        .expect("labels fit")
        .quotient_map();
    let mut s = vec![0; qe.cod().len()];
    let mut t = vec![0; qe.cod().len()];
    for e in 0..g.edges().len() {
        s[qe.at(e)] = qv.at(g.src().at(e));
        t[qe.at(e)] = qv.at(g.tgt().at(e));
    }
    let quotient = FinGraph::new(
        FinMap::from_indices(qe.cod().clone(), qv.cod().clone(), s).expect("in range"),
        FinMap::from_indices(qe.cod().clone(), qv.cod().clone(), t).expect("in range"),
    )
    .expect("same shape");
    GraphHom::new(g.clone(), quotient, qv, qe).expect("congruence")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_pushout, is_van_kampen_graph};

    fn budget() -> SearchBudget {
        SearchBudget::new(8, 2).unwrap()
    }

    #[test]
    fn graph_counts() {
        // Up to two vertices and one edge: ∅; •; ••; •↺; •→•; •↺ •.
        assert_eq!(enumerate_graphs(2, 1).len(), 6);
    }

    #[test]
    fn quotients_of_an_arrow() {
        let g = graph_from_codes(2, &[1]);
        // Keep both vertices, or glue them into a loop.
        assert_eq!(quotient_homs(&g).len(), 2);
    }

    #[test]
    fn parallel_edges_glued_twice() {
        // Two parallel arrows collapsed by both legs: an edge-kernel 2-cycle.
        let g = graph_from_codes(2, &[1, 1]);
        let glue = quotient_homs(&g)
            .into_iter()
            .find(|h| h.on_vertices().is_injective() && h.cod().edges().len() == 1)
            .unwrap();
        let sq = graph_pushout(&glue, &glue)
            .unwrap()
            .square(&glue, &glue)
            .unwrap();
        assert!(!is_van_kampen_graph(&sq).unwrap());
        let cert = GraphOracle::new(budget())
            .find_unreachable_graph_span(&sq)
            .unwrap()
            .unwrap();
        assert!(cert.left_square().is_pullback());
    }

    #[test]
    fn identity_legs_are_van_kampen() {
        let g = graph_from_codes(2, &[1, 3]);
        let id = GraphHom::identity(&g);
        let sq = graph_pushout(&id, &id).unwrap().square(&id, &id).unwrap();
        assert!(brute_van_kampen_graph(&sq, &budget()).unwrap());
    }
}
