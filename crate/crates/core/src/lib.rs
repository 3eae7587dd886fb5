//! Descent data, reachability of pullback spans and Van Kampen squares over
//! finite sets and finite directed multigraphs.

pub mod coherence;
pub mod cycles;
pub mod descent;
pub mod error;
pub mod finset;
pub mod graph;
pub mod limits;
pub mod oracle;
pub mod partition;
pub mod samples;
pub mod span;

pub use coherence::{
    amalgamate, coherence_witness, cycle_condition_holds, evaluate_alternating, is_van_kampen,
    unreachable_span_for_cycle, van_kampen_verdict, Coherence, CoherenceReport, VanKampenVerdict,
};
pub use cycles::{
    find_domain_cycle, has_separated_kernels, proper_domain_cycles, proper_subcycle,
    AlternatingSequence, DomainCycle, Kernel,
};
pub use descent::{
    canonical_descent, kernel_of_realization, realize, restrict, validate, DescentData,
    DescentViolation, FiberMap, ViolationKind,
};
pub use error::{Error, Result};
pub use finset::{classify, compose, epi_mono_factorize, pair_name, FinMap, FinSet, MapClass};
pub use graph::{
    amalgamate_graph, graph_pullback, graph_pushout, is_van_kampen_graph, pull_back_graph_instance,
    unreachable_graph_span, FinGraph, GraphCube, GraphHom, GraphPullback, GraphPushout, GraphSpan,
    GraphSquare,
};
pub use limits::{
    coequalizer, is_pullback, is_pushout, pullback, pushout, ChosenPullback, CommutingSquare,
    Pushout,
};
pub use oracle::{
    brute_domain_cycle, brute_reachable, brute_van_kampen, brute_witness, enumerate_legs,
    enumerate_spans, find_unreachable_span, spans_isomorphic, unreachable_spans, SearchBudget,
};
pub use partition::{join, kernel_pair, Partition, UnionFind};
pub use span::{product_span, pull_back_instance, InstanceCube, PullbackSpan};
