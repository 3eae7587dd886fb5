//! Small fixed instances used in tests, docs and the CLI fixtures.

use crate::coherence::unreachable_span_for_cycle;
use crate::cycles::DomainCycle;
use crate::finset::{FinMap, FinSet};
use crate::limits::{pushout, CommutingSquare};
use crate::span::{product_span, PullbackSpan};

fn map(dom: &FinSet, cod: &[&str], pairs: &[(&str, &str)]) -> FinMap {
    FinMap::new(
        dom.clone(),
        FinSet::new(cod.iter().copied()).unwrap(),
        pairs.iter().copied(),
    )
    .unwrap()
}

/// `L = {x, y, z, w}` with `ker(a) = {{x, z}, {y, w}}` and
/// `ker(r) = {{z, w}, {x, y}}`.
pub fn intertwined_legs() -> (FinMap, FinMap) {
    let l = FinSet::new(["x", "y", "z", "w"]).unwrap();
    let a = map(
        &l,
        &["xz", "yw"],
        &[("x", "xz"), ("z", "xz"), ("y", "yw"), ("w", "yw")],
    );
    let r = map(
        &l,
        &["xy", "zw"],
        &[("z", "zw"), ("w", "zw"), ("x", "xy"), ("y", "xy")],
    );
    (a, r)
}

/// The chosen pushout of `(a, r)` as a bottom square.
pub fn pushout_bottom(a: &FinMap, r: &FinMap) -> CommutingSquare {
    pushout(a, r).expect("legs share a domain").square(a, r)
}

/// The cycle `(x, z, w, y)` of [`intertwined_legs`].
pub fn intertwined_cycle() -> DomainCycle {
    let (a, r) = intertwined_legs();
    DomainCycle::from_names(&a, &r, &["x", "z", "w", "y"]).unwrap()
}

/// Two copies of `L` with one pair of fibers swapped along `ker(a)`: not reachable.
pub fn twisted_span() -> PullbackSpan {
    let (a, r) = intertwined_legs();
    unreachable_span_for_cycle(&a, &r, &intertwined_cycle()).unwrap()
}

/// Two copies `1:…`, `2:…` lifted uniformly over the intertwined legs: reachable.
pub fn uniform_span() -> PullbackSpan {
    let (a, r) = intertwined_legs();
    product_span(&a, &r, &FinSet::new(["1", "2"]).unwrap()).unwrap()
}

/// `L = {l1, l2, l3}`, `ker(a) = {{l1, l2}, {l3}}`, `ker(r) = {{l1}, {l2, l3}}`:
/// neither leg is monic, yet the kernels are separated.
pub fn staircase_legs() -> (FinMap, FinMap) {
    let l = FinSet::new(["l1", "l2", "l3"]).unwrap();
    let a = map(
        &l,
        &["A12", "A3"],
        &[("l1", "A12"), ("l2", "A12"), ("l3", "A3")],
    );
    let r = map(
        &l,
        &["R1", "R23"],
        &[("l1", "R1"), ("l2", "R23"), ("l3", "R23")],
    );
    (a, r)
}
