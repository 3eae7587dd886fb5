//! Domain cycles of a span `a: L → A`, `r: L → R`.
//!
//! A domain cycle is a closed sequence `x₀, …, x_{2k+1}` in `L` with distinct
//! neighbours, `(x_{2i}, x_{2i+1}) ∈ ker(a)` and `(x_{2i+1}, x_{2i+2}) ∈ ker(r)`
//! (indices mod `2k + 2`). Cycles are detected on the incidence multigraph
//! whose nodes are the blocks of `ker(a)` and of `ker(r)`, with one edge per
//! element of `L`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::finset::{FinMap, FinSet};
use crate::partition::{kernel_pair, Partition, UnionFind};

#[derive(Clone, PartialEq, Eq)]
pub struct DomainCycle {
    carrier: FinSet,
    elements: Vec<usize>,
}

impl DomainCycle {
    /// Checks the cycle conditions against `a` and `r`.
    pub fn new(a: &FinMap, r: &FinMap, elements: Vec<usize>) -> Result<Self> {
        check_span(a, r)?;
        let n = elements.len();
        if n < 2 || !n.is_multiple_of(2) {
            return Err(Error::NotADomainCycle(format!(
                "length {n} is not a positive even number"
            )));
        }
        let l = a.dom();
        if let Some(&bad) = elements.iter().find(|&&x| x >= l.len()) {
            return Err(Error::NotADomainCycle(format!("index {bad} outside L")));
        }
        let name = |i: usize| l.name(elements[i % n]).to_string();
        for i in 0..n {
            let (x, y) = (elements[i], elements[(i + 1) % n]);
            if x == y {
                return Err(Error::NotADomainCycle(format!(
                    "{} repeats at position {i}",
                    name(i)
                )));
            }
            let (kernel, m) = if i % 2 == 0 { ("a", a) } else { ("r", r) };
            if m.at(x) != m.at(y) {
                return Err(Error::NotADomainCycle(format!(
                    "({}, {}) not in ker({kernel})",
                    name(i),
                    name(i + 1)
                )));
            }
        }
        Ok(DomainCycle {
            carrier: l.clone(),
            elements,
        })
    }

    pub fn from_names<S: AsRef<str>>(a: &FinMap, r: &FinMap, names: &[S]) -> Result<Self> {
        let indices = names
            .iter()
            .map(|s| a.dom().require(s.as_ref(), "cycle carrier"))
            .collect::<Result<Vec<_>>>()?;
        DomainCycle::new(a, r, indices)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn names(&self) -> Vec<String> {
        self.elements
            .iter()
            .map(|&i| self.carrier.name(i).to_string())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The `k` of a cycle of length `2k + 2`.
    pub fn k(&self) -> usize {
        self.elements.len() / 2 - 1
    }

    pub fn is_proper(&self) -> bool {
        let mut seen = self.elements.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Whether `other` is this cycle up to a rotation by an even number of
    /// steps or a reversal.
    pub fn same_cycle(&self, other: &DomainCycle) -> bool {
        let n = self.elements.len();
        if n != other.elements.len() || self.carrier != other.carrier {
            return false;
        }
        let reversed: Vec<usize> = (0..n).map(|i| self.elements[(n + 1 - i) % n]).collect();
        [&self.elements, &reversed].iter().any(|seq| {
            (0..n)
                .step_by(2)
                .any(|shift| (0..n).all(|i| seq[(i + shift) % n] == other.elements[i]))
        })
    }

    /// The closed alternating sequence `x₀, …, x_{2k+1}, x₀`, starting in `ker(a)`.
    pub fn closed_sequence(&self) -> AlternatingSequence {
        let mut elements = self.elements.clone();
        elements.push(self.elements[0]);
        AlternatingSequence {
            elements,
            start: Kernel::A,
        }
    }
}

impl fmt::Debug for DomainCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names().join(", "))
    }
}

impl fmt::Display for DomainCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kernel {
    A,
    R,
}

impl Kernel {
    pub fn other(self) -> Kernel {
        match self {
            Kernel::A => Kernel::R,
            Kernel::R => Kernel::A,
        }
    }
}

/// A sequence `y₀, …, y_m` whose even-indexed steps lie in `ker(start)` and
/// odd-indexed steps in the other kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingSequence {
    pub elements: Vec<usize>,
    pub start: Kernel,
}

impl AlternatingSequence {
    pub fn new(elements: Vec<usize>, start: Kernel) -> Self {
        AlternatingSequence { elements, start }
    }

    /// Kernel used by step `i`, i.e. `(y_i, y_{i+1})`.
    pub fn kernel_at(&self, i: usize) -> Kernel {
        if i.is_multiple_of(2) {
            self.start
        } else {
            self.start.other()
        }
    }

    /// The reversed sequence; its steps use the same kernels in reverse.
    pub fn reversed(&self) -> AlternatingSequence {
        let m = self.elements.len().saturating_sub(1);
        let start = if m == 0 {
            self.start
        } else {
            self.kernel_at(m - 1)
        };
        AlternatingSequence {
            elements: self.elements.iter().rev().copied().collect(),
            start,
        }
    }

    pub fn is_valid(&self, a: &FinMap, r: &FinMap) -> bool {
        let n = a.dom().len();
        self.elements.iter().all(|&y| y < n)
            && self.elements.windows(2).enumerate().all(|(i, w)| {
                let m = match self.kernel_at(i) {
                    Kernel::A => a,
                    Kernel::R => r,
                };
                m.at(w[0]) == m.at(w[1])
            })
    }
}

fn check_span(a: &FinMap, r: &FinMap) -> Result<()> {
    if a.dom() != r.dom() {
        return Err(Error::ShapeMismatch(
            "a and r have different domains".into(),
        ));
    }
    Ok(())
}

/// The incidence multigraph: node `b` for block `b` of `ker(a)`, node
/// `na + c` for block `c` of `ker(r)`; edge `l` joins the blocks of `l`.
struct Incidence {
    ka: Partition,
    kr: Partition,
}

impl Incidence {
    fn new(a: &FinMap, r: &FinMap) -> Self {
        Incidence {
            ka: kernel_pair(a),
            kr: kernel_pair(r),
        }
    }

    fn nodes(&self) -> usize {
        self.ka.block_count() + self.kr.block_count()
    }

    fn a_node(&self, l: usize) -> usize {
        self.ka.block_of(l)
    }

    fn r_node(&self, l: usize) -> usize {
        self.ka.block_count() + self.kr.block_of(l)
    }

    fn edges(&self) -> usize {
        self.ka.carrier().len()
    }

    /// Shortest path of edges from `from` to `to` using only `allowed` edges.
    fn path(&self, from: usize, to: usize, allowed: &[bool]) -> Option<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes()];
        for l in (0..self.edges()).filter(|&l| allowed[l]) {
            let (u, v) = (self.a_node(l), self.r_node(l));
            adj[u].push((v, l));
            adj[v].push((u, l));
        }
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.nodes()];
        let mut seen = vec![false; self.nodes()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = Vec::new();
                let mut at = to;
                while let Some((p, l)) = prev[at] {
                    path.push(l);
                    at = p;
                }
                path.reverse();
                return Some(path);
            }
            for &(v, l) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    prev[v] = Some((u, l));
                    queue.push_back(v);
                }
            }
        }
        None
    }

    /// The cycle closed by edge `l` with a path from its r-node to its
    /// a-node, as an element sequence starting in `ker(a)`.
    fn close(&self, l: usize, path: Vec<usize>) -> Vec<usize> {
        let mut seq = path;
        seq.push(l);
        seq
    }
}

/// A proper domain cycle of `(a, r)`, if any.
///
/// Edges are added in element order; the first one joining two connected
/// blocks closes the reported cycle.
pub fn find_domain_cycle(a: &FinMap, r: &FinMap) -> Result<Option<DomainCycle>> {
    check_span(a, r)?;
    let g = Incidence::new(a, r);
    let mut uf = UnionFind::new(g.nodes());
    let mut forest = vec![false; g.edges()];
    for l in 0..g.edges() {
        let (u, v) = (g.a_node(l), g.r_node(l));
        if uf.union(u, v) {
            forest[l] = true;
            continue;
        }
        let path = g
            .path(v, u, &forest)
            .ok_or_else(|| Error::Internal("forest path missing".into()))?;
        return DomainCycle::new(a, r, g.close(l, path)).map(Some);
    }
    Ok(None)
}

pub fn has_separated_kernels(a: &FinMap, r: &FinMap) -> Result<bool> {
    Ok(find_domain_cycle(a, r)?.is_none())
}

/// Every proper domain cycle, once per cycle of the incidence multigraph.
/// Exponential in the worst case.
pub fn proper_domain_cycles(a: &FinMap, r: &FinMap) -> Result<Vec<DomainCycle>> {
    check_span(a, r)?;
    let g = Incidence::new(a, r);
    let mut out = Vec::new();
    for first in 0..g.edges() {
        let start = g.r_node(first);
        let mut on_path = vec![false; g.nodes()];
        on_path[start] = true;
        on_path[g.a_node(first)] = true;
        let mut seq = vec![first];
        extend_cycles(
            &g,
            start,
            g.a_node(first),
            first,
            &mut on_path,
            &mut seq,
            &mut out,
        );
    }
    out.into_iter()
        .map(|seq| DomainCycle::new(a, r, seq))
        .collect()
}

fn extend_cycles(
    g: &Incidence,
    start: usize,
    at: usize,
    first: usize,
    on_path: &mut [bool],
    seq: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    for l in first + 1..g.edges() {
        let (u, v) = (g.a_node(l), g.r_node(l));
        let next = if u == at {
            v
        } else if v == at {
            u
        } else {
            continue;
        };
        seq.push(l);
        if next == start {
            out.push(seq.clone());
        } else if !on_path[next] {
            on_path[next] = true;
            extend_cycles(g, start, next, first, on_path, seq, out);
            on_path[next] = false;
        }
        seq.pop();
    }
}

/// A proper subcycle of a (possibly non-proper) domain cycle: the shortest
/// cycle among its elements, ties broken by the earliest closing element.
pub fn proper_subcycle(a: &FinMap, r: &FinMap, cycle: &DomainCycle) -> Result<DomainCycle> {
    check_span(a, r)?;
    if cycle.is_proper() {
        return Ok(cycle.clone());
    }
    let g = Incidence::new(a, r);
    let mut used = vec![false; g.edges()];
    let mut order = Vec::new();
    for &x in cycle.elements() {
        if !used[x] {
            used[x] = true;
            order.push(x);
        }
    }
    let mut best: Option<Vec<usize>> = None;
    for &l in &order {
        let mut allowed = used.clone();
        allowed[l] = false;
        if let Some(path) = g.path(g.r_node(l), g.a_node(l), &allowed) {
            if best.as_ref().is_none_or(|b| path.len() + 1 < b.len()) {
                best = Some(g.close(l, path));
            }
        }
    }
    let seq = best.ok_or_else(|| Error::Internal("closed walk without a cycle".into()))?;
    DomainCycle::new(a, r, seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(dom: &FinSet, pairs: &[(&str, &str)]) -> FinMap {
        let cod = FinSet::from_names_dedup(pairs.iter().map(|p| p.1));
        FinMap::new(dom.clone(), cod, pairs.iter().copied()).unwrap()
    }

    fn xyzw() -> FinSet {
        FinSet::new(["x", "y", "z", "w"]).unwrap()
    }

    fn intertwined() -> (FinMap, FinMap) {
        let l = xyzw();
        let a = map(&l, &[("x", "xz"), ("z", "xz"), ("y", "yw"), ("w", "yw")]);
        let r = map(&l, &[("z", "zw"), ("w", "zw"), ("x", "xy"), ("y", "xy")]);
        (a, r)
    }

    #[test]
    fn intertwined_kernels_have_the_four_cycle() {
        let (a, r) = intertwined();
        let c = find_domain_cycle(&a, &r).unwrap().unwrap();
        assert_eq!(c.k(), 1);
        assert!(c.is_proper());
        let expected = DomainCycle::from_names(&a, &r, &["x", "z", "w", "y"]).unwrap();
        assert!(c.same_cycle(&expected), "{c}");
        assert!(!has_separated_kernels(&a, &r).unwrap());
        assert_eq!(proper_domain_cycles(&a, &r).unwrap().len(), 1);
    }

    #[test]
    fn injective_leg_separates() {
        let (_, r) = intertwined();
        let a = FinMap::identity(&xyzw());
        assert!(find_domain_cycle(&a, &r).unwrap().is_none());
        assert!(proper_domain_cycles(&a, &r).unwrap().is_empty());
    }

    #[test]
    fn not_jointly_monic_gives_a_two_cycle() {
        let l = FinSet::new(["p", "q"]).unwrap();
        let a = map(&l, &[("p", "A"), ("q", "A")]);
        let r = map(&l, &[("p", "R"), ("q", "R")]);
        let c = find_domain_cycle(&a, &r).unwrap().unwrap();
        assert_eq!((c.len(), c.k()), (2, 0));
    }

    #[test]
    fn staircase_kernels_are_separated() {
        let l = FinSet::new(["l1", "l2", "l3"]).unwrap();
        let a = map(&l, &[("l1", "A12"), ("l2", "A12"), ("l3", "A3")]);
        let r = map(&l, &[("l1", "R1"), ("l2", "R23"), ("l3", "R23")]);
        assert!(has_separated_kernels(&a, &r).unwrap());
    }

    #[test]
    fn cycle_validation() {
        let (a, r) = intertwined();
        assert!(DomainCycle::from_names(&a, &r, &["x", "y", "w", "z"]).is_err());
        assert!(DomainCycle::from_names(&a, &r, &["x", "z", "w"]).is_err());
        assert!(DomainCycle::from_names(&a, &r, &["x", "x"]).is_err());
    }

    #[test]
    fn subcycle_of_a_doubled_cycle() {
        let (a, r) = intertwined();
        let doubled =
            DomainCycle::from_names(&a, &r, &["x", "z", "w", "y", "x", "z", "w", "y"]).unwrap();
        assert!(!doubled.is_proper());
        let sub = proper_subcycle(&a, &r, &doubled).unwrap();
        assert!(sub.is_proper());
        assert_eq!(sub.len(), 4);
    }

    #[test]
    fn reversal_keeps_kernels() {
        let (a, r) = intertwined();
        let c = DomainCycle::from_names(&a, &r, &["x", "z", "w", "y"]).unwrap();
        let seq = c.closed_sequence();
        assert!(seq.is_valid(&a, &r));
        assert!(seq.reversed().is_valid(&a, &r));
    }
}
