use vankampen::oracle::graph::{enumerate_graphs, quotient_homs};
use vankampen::samples::{intertwined_legs, twisted_span, uniform_span};
use vankampen::*;

fn discrete_hom(f: &FinMap) -> GraphHom {
    let (dom, cod) = (
        FinGraph::discrete(f.dom().clone()),
        FinGraph::discrete(f.cod().clone()),
    );
    GraphHom::new(dom, cod, f.clone(), FinMap::identity(&FinSet::empty())).unwrap()
}

fn discrete_square(sq: &CommutingSquare) -> GraphSquare {
    GraphSquare::new(
        discrete_hom(sq.left()),
        discrete_hom(sq.top()),
        discrete_hom(sq.right()),
        discrete_hom(sq.bottom()),
    )
    .unwrap()
}

fn discrete_span(span: &PullbackSpan) -> GraphSpan {
    GraphSpan::new(
        discrete_square(span.left_square()),
        discrete_square(span.right_square()),
    )
    .unwrap()
}

fn intertwined_bottom() -> GraphSquare {
    let (a, r) = intertwined_legs();
    let (a, r) = (discrete_hom(&a), discrete_hom(&r));
    graph_pushout(&a, &r).unwrap().square(&a, &r).unwrap()
}

/// Two disjoint copies of `g` folded onto it.
fn doubled(g: &FinGraph) -> GraphHom {
    let tag = |k: u8, x: &str| format!("{k}:{x}");
    let v = FinSet::new((0..2).flat_map(|k| g.vertices().iter().map(move |x| tag(k, x)))).unwrap();
    let edges: Vec<(String, String, String)> = (0..2)
        .flat_map(|k| {
            g.edges().iter().map(move |e| {
                (
                    tag(k, e),
                    tag(k, g.src().apply(e).unwrap()),
                    tag(k, g.tgt().apply(e).unwrap()),
                )
            })
        })
        .collect();
    let k = FinGraph::from_edges(v.clone(), &edges).unwrap();
    let on_v = FinMap::from_fn(v, g.vertices().clone(), |x| x[2..].to_string()).unwrap();
    let on_e =
        FinMap::from_fn(k.edges().clone(), g.edges().clone(), |x| x[2..].to_string()).unwrap();
    GraphHom::new(k, g.clone(), on_v, on_e).unwrap()
}

#[test]
fn discrete_uniform_span_amalgamates() {
    let bottom = intertwined_bottom();
    let cube = amalgamate_graph(&discrete_span(&uniform_span()), &bottom)
        .unwrap()
        .unwrap();
    assert_eq!(cube.sigma.dom().vertices().len(), 2);
    assert!(cube.sigma.dom().edges().is_empty());
}

#[test]
fn discrete_twisted_span_is_rejected() {
    let bottom = intertwined_bottom();
    assert!(amalgamate_graph(&discrete_span(&twisted_span()), &bottom)
        .unwrap()
        .is_none());
    assert!(!is_van_kampen_graph(&bottom).unwrap());
}

#[test]
fn loop_bottom_with_doubled_instance() {
    // L is a vertex with a loop; both legs are identities.
    let v = FinSet::new(["v"]).unwrap();
    let g = FinGraph::from_edges(v, &[("e", "v", "v")]).unwrap();
    let id = GraphHom::identity(&g);
    let bottom = graph_pushout(&id, &id).unwrap().square(&id, &id).unwrap();
    assert!(is_van_kampen_graph(&bottom).unwrap());
    let sigma = doubled(bottom.right().cod());
    let span = pull_back_graph_instance(&bottom, &sigma).unwrap();
    let cube = amalgamate_graph(&span, &bottom).unwrap().unwrap();
    assert_eq!(cube.sigma.dom().vertices().len(), 2);
    assert_eq!(cube.sigma.dom().edges().len(), 2);
}

#[test]
fn pulled_back_instances_reamalgamate() {
    let mut checked = 0;
    for g in enumerate_graphs(2, 2) {
        let homs = quotient_homs(&g);
        for a in &homs {
            for r in &homs {
                let bottom = graph_pushout(a, r).unwrap().square(a, r).unwrap();
                for sigma in [
                    GraphHom::identity(bottom.right().cod()),
                    doubled(bottom.right().cod()),
                ] {
                    let span = pull_back_graph_instance(&bottom, &sigma).unwrap();
                    let cube = amalgamate_graph(&span, &bottom)
                        .unwrap()
                        .expect("reachable span");
                    let back = pull_back_graph_instance(&bottom, &cube.sigma).unwrap();
                    assert!(spans_isomorphic(back.vertex_span(), span.vertex_span()));
                    assert!(spans_isomorphic(back.edge_span(), span.edge_span()));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn constructed_graph_counterexamples_are_unreachable() {
    let (mut vk, mut not_vk) = (0, 0);
    for g in enumerate_graphs(3, 2) {
        let homs = quotient_homs(&g);
        for a in &homs {
            for r in &homs {
                let bottom = graph_pushout(a, r).unwrap().square(a, r).unwrap();
                let span = unreachable_graph_span(&bottom).unwrap();
                assert_eq!(span.is_none(), is_van_kampen_graph(&bottom).unwrap());
                match span {
                    Some(span) => {
                        assert!(amalgamate_graph(&span, &bottom).unwrap().is_none());
                        not_vk += 1;
                    }
                    None => vk += 1,
                }
            }
        }
    }
    assert!(vk > 0 && not_vk > 0);
}

#[test]
fn edge_only_cycle_yields_an_edge_counterexample() {
    // Four parallel edges; the vertex legs are identities, so only the edge
    // kernels intertwine.
    let v = FinSet::new(["p", "q"]).unwrap();
    let l = FinGraph::from_edges(
        v.clone(),
        &[
            ("x", "p", "q"),
            ("y", "p", "q"),
            ("z", "p", "q"),
            ("w", "p", "q"),
        ],
    )
    .unwrap();
    let quotient = |edges: [&str; 2], blocks: &[(&str, &str)]| {
        let cod = FinGraph::from_edges(v.clone(), &edges.map(|e| (e, "p", "q"))).unwrap();
        let on_e = FinMap::new(
            l.edges().clone(),
            cod.edges().clone(),
            blocks.iter().copied(),
        )
        .unwrap();
        GraphHom::new(l.clone(), cod, FinMap::identity(&v), on_e).unwrap()
    };
    let a = quotient(
        ["xz", "yw"],
        &[("x", "xz"), ("z", "xz"), ("y", "yw"), ("w", "yw")],
    );
    let r = quotient(
        ["xy", "zw"],
        &[("x", "xy"), ("y", "xy"), ("z", "zw"), ("w", "zw")],
    );
    let bottom = graph_pushout(&a, &r).unwrap().square(&a, &r).unwrap();
    assert!(!is_van_kampen_graph(&bottom).unwrap());
    let span = unreachable_graph_span(&bottom).unwrap().unwrap();
    assert_eq!(span.carrier().dom().vertices().len(), 2);
    assert_eq!(span.carrier().dom().edges().len(), 8);
    assert!(amalgamate_graph(&span, &bottom).unwrap().is_none());
}
