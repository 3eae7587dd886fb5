//! Brute-force reference implementations for small instances.
//!
//! Nothing here calls the decision procedures it is meant to check: spans are
//! tested for reachability by enumerating instances over the apex and
//! comparing pullbacks up to isomorphism, witnesses by enumerating families
//! of fiber bijections, and domain cycles by walking alternating sequences.

pub mod graph;

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use crate::descent::{restrict, DescentData, FiberMap};
use crate::error::{Error, Result};
use crate::finset::{pair_name, FinMap, FinSet};
use crate::limits::CommutingSquare;
use crate::partition::kernel_pair;
use crate::span::{pull_back_instance, PullbackSpan};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_apex_size: usize,
    pub max_fiber_size: usize,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn new(max_apex_size: usize, max_fiber_size: usize) -> Result<Self> {
        if max_apex_size == 0 || max_fiber_size == 0 {
            return Err(Error::InvalidBudget("bounds must be positive".into()));
        }
        Ok(SearchBudget {
            max_apex_size,
            max_fiber_size,
            time_limit: None,
        })
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

struct Clock {
    deadline: Option<Instant>,
}

impl Clock {
    fn start(budget: &SearchBudget) -> Self {
        Clock {
            deadline: budget.time_limit.map(|d| Instant::now() + d),
        }
    }

    fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded),
            _ => Ok(()),
        }
    }
}

/// Searches for `σ: K → S` with `|K| ≤ max_apex_size` and fibers of size at
/// most `max_fiber_size` whose pullback along the bottom square is isomorphic
/// to `span`. `K` is `{k0, k1, …}` with `σ` monotone, which covers every
/// instance up to renaming of `K`.
pub fn brute_reachable(
    span: &PullbackSpan,
    bottom: &CommutingSquare,
    budget: &SearchBudget,
) -> Result<Option<FinMap>> {
    span.check_bottom(bottom)?;
    let clock = Clock::start(budget);
    let s_set = bottom.diagonal().cod().clone();
    let s = bottom.diagonal();
    let (r_bar, a_bar) = (bottom.bottom(), bottom.right());
    let gamma_sizes = fiber_sizes(span.carrier());
    let tau_sizes = fiber_sizes(span.tau());
    let beta_sizes = fiber_sizes(span.beta());

    let mut counts = vec![0; s_set.len()];
    let mut found = None;
    search_counts(
        &mut counts,
        0,
        budget.max_apex_size,
        budget.max_fiber_size,
        &mut |n| {
            clock.check()?;
            let fits =
                |m: &FinMap, sizes: &[usize]| (0..m.dom().len()).all(|x| n[m.at(x)] == sizes[x]);
            if !(fits(&s, &gamma_sizes) && fits(r_bar, &tau_sizes) && fits(a_bar, &beta_sizes)) {
                return Ok(false);
            }
            let sigma = instance_from_counts(&s_set, n);
            let candidate = pull_back_instance(bottom, &sigma)?;
            if spans_isomorphic(span, &candidate) {
                found = Some(sigma);
                return Ok(true);
            }
            Ok(false)
        },
    )?;
    Ok(found)
}

fn fiber_sizes(m: &FinMap) -> Vec<usize> {
    m.fibers().iter().map(Vec::len).collect()
}

/// Visits every count vector with entries `≤ max_fiber` and total `≤ left`;
/// stops when `visit` returns true.
fn search_counts(
    counts: &mut Vec<usize>,
    at: usize,
    left: usize,
    max_fiber: usize,
    visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    if at == counts.len() {
        return visit(counts);
    }
    for c in 0..=max_fiber.min(left) {
        counts[at] = c;
        if search_counts(counts, at + 1, left - c, max_fiber, visit)? {
            return Ok(true);
        }
    }
    counts[at] = 0;
    Ok(false)
}

fn instance_from_counts(s: &FinSet, counts: &[usize]) -> FinMap {
    let total: usize = counts.iter().sum();
    let width = total.to_string().len();
    let k = FinSet::new((0..total).map(|i| format!("k{i:0width$}"))).expect("distinct");
    let images = counts
        .iter()
        .enumerate()
        .flat_map(|(x, &c)| std::iter::repeat_n(x, c))
        .collect();
    FinMap::from_indices(k, s.clone(), images).expect("counts sum to |K|")
}

/// Whether there are bijections on `J`, `I`, `H` over `A`, `L`, `R` that
/// commute with `a'` and `r'`. Backtracks over `I`, extending the induced
/// partial bijections on `J` and `H`, then matches the remaining elements of
/// `J` and `H` fiberwise.
pub fn spans_isomorphic(s1: &PullbackSpan, s2: &PullbackSpan) -> bool {
    if s1.a() != s2.a() || s1.r() != s2.r() {
        return false;
    }
    let sizes = |s: &PullbackSpan| {
        (
            s.carrier().dom().len(),
            s.tau().dom().len(),
            s.beta().dom().len(),
        )
    };
    if sizes(s1) != sizes(s2) {
        return false;
    }
    let mut state = IsoState {
        s1,
        s2,
        phi_i: vec![usize::MAX; s1.carrier().dom().len()],
        used_i: vec![false; s2.carrier().dom().len()],
        phi_j: vec![usize::MAX; s1.tau().dom().len()],
        used_j: vec![false; s2.tau().dom().len()],
        phi_h: vec![usize::MAX; s1.beta().dom().len()],
        used_h: vec![false; s2.beta().dom().len()],
    };
    state.extend(0)
}

struct IsoState<'a> {
    s1: &'a PullbackSpan,
    s2: &'a PullbackSpan,
    phi_i: Vec<usize>,
    used_i: Vec<bool>,
    phi_j: Vec<usize>,
    used_j: Vec<bool>,
    phi_h: Vec<usize>,
    used_h: Vec<bool>,
}

/// Tries `phi(x) = y` on a partial bijection; returns whether it was newly set.
fn assign(phi: &mut [usize], used: &mut [bool], x: usize, y: usize) -> Option<bool> {
    if phi[x] == usize::MAX {
        if used[y] {
            return None;
        }
        phi[x] = y;
        used[y] = true;
        Some(true)
    } else if phi[x] == y {
        Some(false)
    } else {
        None
    }
}

fn unassign(phi: &mut [usize], used: &mut [bool], x: usize, set: bool) {
    if set {
        used[phi[x]] = false;
        phi[x] = usize::MAX;
    }
}

impl IsoState<'_> {
    fn extend(&mut self, i: usize) -> bool {
        if i == self.phi_i.len() {
            return self.leftovers_match();
        }
        let (g1, g2) = (self.s1.carrier(), self.s2.carrier());
        for t in 0..g2.dom().len() {
            if self.used_i[t] || g2.at(t) != g1.at(i) {
                continue;
            }
            let (j1, j2) = (self.s1.a_prime().at(i), self.s2.a_prime().at(t));
            let (h1, h2) = (self.s1.r_prime().at(i), self.s2.r_prime().at(t));
            if self.s1.tau().at(j1) != self.s2.tau().at(j2)
                || self.s1.beta().at(h1) != self.s2.beta().at(h2)
            {
                continue;
            }
            let Some(set_j) = assign(&mut self.phi_j, &mut self.used_j, j1, j2) else {
                continue;
            };
            if let Some(set_h) = assign(&mut self.phi_h, &mut self.used_h, h1, h2) {
                self.phi_i[i] = t;
                self.used_i[t] = true;
                if self.extend(i + 1) {
                    return true;
                }
                self.used_i[t] = false;
                self.phi_i[i] = usize::MAX;
                unassign(&mut self.phi_h, &mut self.used_h, h1, set_h);
            }
            unassign(&mut self.phi_j, &mut self.used_j, j1, set_j);
        }
        false
    }

    fn leftovers_match(&self) -> bool {
        let count = |phi: &[usize], used: &[bool], m1: &FinMap, m2: &FinMap| {
            let mut left = vec![0isize; m1.cod().len()];
            for x in (0..phi.len()).filter(|&x| phi[x] == usize::MAX) {
                left[m1.at(x)] += 1;
            }
            for y in (0..used.len()).filter(|&y| !used[y]) {
                left[m2.at(y)] -= 1;
            }
            left.iter().all(|&c| c == 0)
        };
        count(&self.phi_j, &self.used_j, self.s1.tau(), self.s2.tau())
            && count(&self.phi_h, &self.used_h, self.s1.beta(), self.s2.beta())
    }
}

/// All descent data over `s` that restrict to the span's canonical data over
/// `a` and `r`, found by enumerating fiber bijections for every pair of
/// `ker(s)` not already fixed by neutrality, `ker(a)` or `ker(r)`.
pub fn brute_witness(span: &PullbackSpan, bottom: &CommutingSquare) -> Result<Vec<DescentData>> {
    span.check_bottom(bottom)?;
    let s = bottom.diagonal();
    let gamma = span.carrier();
    let (xi_tau, xi_beta) = (span.xi_tau(), span.xi_beta());
    let fibers = gamma.fibers();
    let (a, r) = (span.a(), span.r());

    let mut per_block: Vec<Vec<BTreeMap<(usize, usize), FiberMap>>> = Vec::new();
    for block in kernel_pair(&s).blocks() {
        let mut fixed = BTreeMap::new();
        let mut free = Vec::new();
        for &e in &block {
            for &e2 in &block {
                let by_a = (a.at(e) == a.at(e2))
                    .then(|| xi_tau.component(e, e2).cloned())
                    .flatten();
                let by_r = (r.at(e) == r.at(e2))
                    .then(|| xi_beta.component(e, e2).cloned())
                    .flatten();
                match (by_a, by_r) {
                    (Some(x), Some(y)) if x != y => return Ok(Vec::new()),
                    (Some(x), _) | (None, Some(x)) => {
                        fixed.insert((e, e2), x);
                    }
                    (None, None) => free.push((e, e2)),
                }
            }
        }
        let options: Vec<Vec<FiberMap>> = free
            .iter()
            .map(|&(e, e2)| bijections(&fibers[e], &fibers[e2]))
            .collect();
        let mut valid = Vec::new();
        let mut choice = vec![0; free.len()];
        loop {
            if options.iter().all(|o| !o.is_empty()) {
                let mut family = fixed.clone();
                for (k, &(e, e2)) in free.iter().enumerate() {
                    family.insert((e, e2), options[k][choice[k]].clone());
                }
                if block_laws_hold(&block, &family) {
                    valid.push(family);
                }
            } else {
                break;
            }
            if !advance(&mut choice, &options) {
                break;
            }
        }
        per_block.push(valid);
    }

    let mut out = Vec::new();
    let mut choice = vec![0; per_block.len()];
    if per_block.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    loop {
        let mut family = BTreeMap::new();
        for (b, &c) in choice.iter().enumerate() {
            family.extend(per_block[b][c].iter().map(|(k, v)| (*k, v.clone())));
        }
        let dd = DescentData::new(gamma.clone(), s.clone(), family)?;
        if dd.validate().is_ok()
            && restrict(&dd, a, bottom.bottom())? == xi_tau
            && restrict(&dd, r, bottom.right())? == xi_beta
        {
            out.push(dd);
        }
        if !advance(&mut choice, &per_block) {
            break;
        }
    }
    Ok(out)
}

/// Odometer step over mixed radices; false once every combination was seen.
fn advance<T>(choice: &mut [usize], options: &[Vec<T>]) -> bool {
    for k in 0..choice.len() {
        choice[k] += 1;
        if choice[k] < options[k].len() {
            return true;
        }
        choice[k] = 0;
    }
    false
}

fn block_laws_hold(block: &[usize], family: &BTreeMap<(usize, usize), FiberMap>) -> bool {
    block.iter().all(|&e| family[&(e, e)].is_identity())
        && block.iter().all(|&e| {
            block.iter().all(|&e2| {
                block
                    .iter()
                    .all(|&e3| family[&(e, e2)].then(&family[&(e2, e3)]) == family[&(e, e3)])
            })
        })
}

fn bijections(from: &[usize], to: &[usize]) -> Vec<FiberMap> {
    if from.len() != to.len() {
        return Vec::new();
    }
    permutations(to.len())
        .into_iter()
        .map(|p| FiberMap::new(from.iter().enumerate().map(|(k, &x)| (x, to[p[k]]))))
        .collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every rear pullback span over `(a, r)` with fibers of size at most
/// `max_fiber`, one per isomorphism class.
///
/// A span is fixed by fiber counts `n_A` on `A` and `n_R` on `R` agreeing
/// along `L`, and per element `l` a bijection `θ_l` between the `J`-fiber
/// over `a(l)` and the `H`-fiber over `r(l)`. Renaming fibers acts by
/// `θ_l ↦ ρ_{r(l)} ∘ θ_l ∘ π_{a(l)}⁻¹`; only orbit minima are kept.
pub fn enumerate_spans(a: &FinMap, r: &FinMap, max_fiber: usize) -> Result<Vec<PullbackSpan>> {
    if a.dom() != r.dom() {
        return Err(Error::ShapeMismatch(
            "a and r have different domains".into(),
        ));
    }
    let perms: Vec<Vec<Vec<usize>>> = (0..=max_fiber).map(permutations).collect();
    let mut out = Vec::new();
    let mut n_a = vec![0; a.cod().len()];
    let mut n_r_all = Vec::new();
    let mut n_r = vec![0; r.cod().len()];
    collect_counts(&mut n_r, 0, max_fiber, &mut n_r_all);
    let mut n_a_all = Vec::new();
    collect_counts(&mut n_a, 0, max_fiber, &mut n_a_all);

    for n_a in &n_a_all {
        for n_r in &n_r_all {
            let l_len = a.dom().len();
            if (0..l_len).any(|l| n_a[a.at(l)] != n_r[r.at(l)]) {
                continue;
            }
            let sizes: Vec<usize> = (0..l_len).map(|l| n_a[a.at(l)]).collect();
            let options: Vec<Vec<Vec<usize>>> = sizes.iter().map(|&n| perms[n].clone()).collect();
            let group_a: Vec<Vec<Vec<usize>>> = n_a.iter().map(|&n| perms[n].clone()).collect();
            let group_r: Vec<Vec<Vec<usize>>> = n_r.iter().map(|&n| perms[n].clone()).collect();
            let mut choice = vec![0; l_len];
            loop {
                let theta: Vec<&Vec<usize>> = (0..l_len).map(|l| &options[l][choice[l]]).collect();
                if is_orbit_minimum(a, r, &theta, &group_a, &group_r) {
                    out.push(build_span(a, r, n_a, n_r, &theta)?);
                }
                if !advance(&mut choice, &options) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn collect_counts(counts: &mut Vec<usize>, at: usize, max: usize, out: &mut Vec<Vec<usize>>) {
    if at == counts.len() {
        out.push(counts.clone());
        return;
    }
    for c in 0..=max {
        counts[at] = c;
        collect_counts(counts, at + 1, max, out);
    }
}

fn is_orbit_minimum(
    a: &FinMap,
    r: &FinMap,
    theta: &[&Vec<usize>],
    group_a: &[Vec<Vec<usize>>],
    group_r: &[Vec<Vec<usize>>],
) -> bool {
    let mut ca = vec![0; group_a.len()];
    loop {
        let mut cr = vec![0; group_r.len()];
        loop {
            let mut image = theta.iter().enumerate().map(|(l, th)| {
                let pi = &group_a[a.at(l)][ca[a.at(l)]];
                let rho = &group_r[r.at(l)][cr[r.at(l)]];
                // θ'(π(j)) = ρ(θ(j))
                let mut out = vec![0; th.len()];
                for j in 0..th.len() {
                    out[pi[j]] = rho[th[j]];
                }
                out
            });
            let smaller = theta
                .iter()
                .map(|t| t.as_slice())
                .zip(&mut image)
                .find_map(|(t, i)| match i.as_slice().cmp(t) {
                    std::cmp::Ordering::Equal => None,
                    o => Some(o == std::cmp::Ordering::Less),
                })
                .unwrap_or(false);
            if smaller {
                return false;
            }
            if !advance(&mut cr, group_r) {
                break;
            }
        }
        if !advance(&mut ca, group_a) {
            break;
        }
    }
    true
}

fn build_span(
    a: &FinMap,
    r: &FinMap,
    n_a: &[usize],
    n_r: &[usize],
    theta: &[&Vec<usize>],
) -> Result<PullbackSpan> {
    let l = a.dom();
    let over = |base: &FinSet, counts: &dyn Fn(usize) -> usize| {
        let mut entries = Vec::new();
        for x in 0..base.len() {
            for j in 0..counts(x) {
                entries.push((pair_name(base.name(x), &j.to_string()), x, j));
            }
        }
        entries.sort();
        entries
    };
    let i_entries = over(l, &|x| n_a[a.at(x)]);
    let j_entries = over(a.cod(), &|x| n_a[x]);
    let h_entries = over(r.cod(), &|x| n_r[x]);
    let set = |e: &[(String, usize, usize)]| FinSet::new(e.iter().map(|t| t.0.clone()));
    let (i_set, j_set, h_set) = (set(&i_entries)?, set(&j_entries)?, set(&h_entries)?);
    let proj = |dom: &FinSet, e: &[(String, usize, usize)], cod: &FinSet| {
        FinMap::from_indices(dom.clone(), cod.clone(), e.iter().map(|t| t.1).collect())
    };
    let gamma = proj(&i_set, &i_entries, l)?;
    let tau = proj(&j_set, &j_entries, a.cod())?;
    let beta = proj(&h_set, &h_entries, r.cod())?;
    let index = |e: &[(String, usize, usize)]| -> HashMap<(usize, usize), usize> {
        e.iter().enumerate().map(|(k, t)| ((t.1, t.2), k)).collect()
    };
    let (j_index, h_index) = (index(&j_entries), index(&h_entries));
    let a_prime = i_entries
        .iter()
        .map(|t| j_index[&(a.at(t.1), t.2)])
        .collect();
    let r_prime = i_entries
        .iter()
        .map(|t| h_index[&(r.at(t.1), theta[t.1][t.2])])
        .collect();
    let a_prime = FinMap::from_indices(i_set.clone(), j_set, a_prime)?;
    let r_prime = FinMap::from_indices(i_set, h_set, r_prime)?;
    PullbackSpan::new(
        CommutingSquare::new(gamma.clone(), a_prime, tau, a.clone())?,
        CommutingSquare::new(gamma, r_prime, beta, r.clone())?,
    )
}

/// A rear span with fibers bounded by the budget that no instance over the
/// pushout apex pulls back to, if any.
pub fn find_unreachable_span(
    sq: &CommutingSquare,
    budget: &SearchBudget,
) -> Result<Option<PullbackSpan>> {
    if !sq.is_pushout() {
        return Err(Error::NotAPushout);
    }
    for span in enumerate_spans(sq.left(), sq.top(), budget.max_fiber_size)? {
        if brute_reachable(&span, sq, budget)?.is_none() {
            return Ok(Some(span));
        }
    }
    Ok(None)
}

/// Every unreachable rear span with fibers bounded by the budget, one per
/// isomorphism class.
pub fn unreachable_spans(sq: &CommutingSquare, budget: &SearchBudget) -> Result<Vec<PullbackSpan>> {
    if !sq.is_pushout() {
        return Err(Error::NotAPushout);
    }
    let mut out = Vec::new();
    for span in enumerate_spans(sq.left(), sq.top(), budget.max_fiber_size)? {
        if brute_reachable(&span, sq, budget)?.is_none() {
            out.push(span);
        }
    }
    Ok(out)
}

/// Whether every rear span with fibers bounded by the budget is reachable.
/// The apex bound must allow `max_fiber_size · |S|` elements to be complete.
pub fn brute_van_kampen(sq: &CommutingSquare, budget: &SearchBudget) -> Result<bool> {
    Ok(find_unreachable_span(sq, budget)?.is_none())
}

/// Searches for a closed alternating walk of at most `max_len` elements
/// with distinct neighbours, starting in `ker(a)` and closing in `ker(r)`.
pub fn brute_domain_cycle(a: &FinMap, r: &FinMap, max_len: usize) -> Result<Option<Vec<usize>>> {
    if a.dom() != r.dom() {
        return Err(Error::ShapeMismatch(
            "a and r have different domains".into(),
        ));
    }
    fn walk(a: &FinMap, r: &FinMap, seq: &mut Vec<usize>, max_len: usize) -> bool {
        let len = seq.len();
        let (first, last) = (seq[0], seq[len - 1]);
        if len >= 2 && len.is_multiple_of(2) && last != first && r.at(last) == r.at(first) {
            return true;
        }
        if len == max_len {
            return false;
        }
        let m = if len % 2 == 1 { a } else { r };
        for y in 0..a.dom().len() {
            if y != last && m.at(y) == m.at(last) {
                seq.push(y);
                if walk(a, r, seq, max_len) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }
    for x in 0..a.dom().len() {
        let mut seq = vec![x];
        if walk(a, r, &mut seq, max_len) {
            return Ok(Some(seq));
        }
    }
    Ok(None)
}

/// Every span `a: L → A`, `r: L → R` with `|L| ≤ max_l`, `|A| ≤ max_a`,
/// `|R| ≤ max_r`, one per isomorphism class. Elements are named `l0…`,
/// `a0…`, `r0…`.
pub fn enumerate_legs(max_l: usize, max_a: usize, max_r: usize) -> Vec<(FinMap, FinMap)> {
    let mut out = Vec::new();
    for na in 0..=max_a {
        for nr in 0..=max_r {
            let pa = permutations(na);
            let pr = permutations(nr);
            for nl in 0..=max_l {
                if nl > 0 && (na == 0 || nr == 0) {
                    continue;
                }
                let mut edges = Vec::new();
                multisets(na * nr, nl, 0, &mut edges, &mut |edges| {
                    let canonical = pa.iter().all(|p| {
                        pr.iter().all(|q| {
                            let mut image: Vec<usize> =
                                edges.iter().map(|&e| p[e / nr] * nr + q[e % nr]).collect();
                            image.sort_unstable();
                            image.as_slice() >= edges
                        })
                    });
                    if canonical {
                        out.push(legs_from_edges(na, nr, edges));
                    }
                });
            }
        }
    }
    out
}

fn multisets(
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
        multisets(codes, len, c, cur, visit);
        cur.pop();
    }
}

fn names(prefix: &str, n: usize) -> FinSet {
    FinSet::new((0..n).map(|i| format!("{prefix}{i}"))).expect("distinct")
}

fn legs_from_edges(na: usize, nr: usize, edges: &[usize]) -> (FinMap, FinMap) {
    let (l, a_set, r_set) = (names("l", edges.len()), names("a", na), names("r", nr));
    let a = FinMap::from_indices(l.clone(), a_set, edges.iter().map(|&e| e / nr).collect());
    let r = FinMap::from_indices(l, r_set, edges.iter().map(|&e| e % nr).collect());
    (a.expect("in range"), r.expect("in range"))
}

/// Every partition of `0..n` as restricted-growth label vectors.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, n: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for label in 0..=max {
            cur.push(label);
            go(cur, n, max.max(label + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{
        intertwined_legs, pushout_bottom, staircase_legs, twisted_span, uniform_span,
    };

    fn budget() -> SearchBudget {
        SearchBudget::new(4, 2).unwrap()
    }

    #[test]
    fn intertwined_spans() {
        let (a, r) = intertwined_legs();
        let bottom = pushout_bottom(&a, &r);
        let sigma = brute_reachable(&uniform_span(), &bottom, &budget())
            .unwrap()
            .unwrap();
        assert_eq!(sigma.dom().len(), 2);
        assert_eq!(
            brute_reachable(&twisted_span(), &bottom, &budget()).unwrap(),
            None
        );
        assert!(brute_witness(&twisted_span(), &bottom).unwrap().is_empty());
        assert_eq!(brute_witness(&uniform_span(), &bottom).unwrap().len(), 1);
        assert!(!brute_van_kampen(&bottom, &budget()).unwrap());
    }

    #[test]
    fn identity_span_is_reached_by_identity() {
        let l = FinSet::new(["p", "q"]).unwrap();
        let id = FinMap::identity(&l);
        let bottom = pushout_bottom(&id, &id);
        let span = pull_back_instance(&bottom, &FinMap::identity(bottom.right().cod())).unwrap();
        let sigma = brute_reachable(&span, &bottom, &budget()).unwrap().unwrap();
        assert_eq!(sigma.dom().len(), 2);
        assert!(sigma.classify().iso);
    }

    #[test]
    fn staircase_is_van_kampen() {
        let (a, r) = staircase_legs();
        let bottom = pushout_bottom(&a, &r);
        assert!(brute_van_kampen(&bottom, &SearchBudget::new(2, 2).unwrap()).unwrap());
    }

    #[test]
    fn isomorphism_basics() {
        let u = uniform_span();
        let t = twisted_span();
        assert!(spans_isomorphic(&u, &u));
        assert!(spans_isomorphic(&t, &t));
        assert!(!spans_isomorphic(&u, &t));
        let (a, r) = intertwined_legs();
        let one = crate::span::product_span(&a, &r, &FinSet::new(["0"]).unwrap()).unwrap();
        assert!(!spans_isomorphic(&u, &one));
    }

    #[test]
    fn span_enumeration_counts() {
        // One element, one fiber of size ≤ 2 on each side: sizes 0, 1, 2, and
        // θ ∈ Sym(2) collapses to one class.
        let l = FinSet::new(["l"]).unwrap();
        let id = FinMap::identity(&l);
        assert_eq!(enumerate_spans(&id, &id, 2).unwrap().len(), 3);
        // Two parallel elements: size-2 fibers give θ_l1, θ_l2 up to a common
        // twist on each side, so two classes.
        let (a, r) = (
            FinMap::from_fn(
                FinSet::new(["p", "q"]).unwrap(),
                FinSet::new(["A"]).unwrap(),
                |_| "A".into(),
            )
            .unwrap(),
            FinMap::from_fn(
                FinSet::new(["p", "q"]).unwrap(),
                FinSet::new(["R"]).unwrap(),
                |_| "R".into(),
            )
            .unwrap(),
        );
        assert_eq!(enumerate_spans(&a, &r, 2).unwrap().len(), 4);
    }

    #[test]
    fn leg_enumeration_small_cases() {
        // |L| = 1, |A| = |R| = 1: one class; plus the empty-L classes.
        let legs = enumerate_legs(1, 1, 1);
        assert_eq!(legs.len(), 5);
        assert_eq!(set_partitions(4).len(), 15);
    }

    #[test]
    fn walk_search_finds_the_four_cycle() {
        let (a, r) = intertwined_legs();
        assert!(brute_domain_cycle(&a, &r, 8).unwrap().is_some());
        let (a, r) = staircase_legs();
        assert!(brute_domain_cycle(&a, &r, 6).unwrap().is_none());
    }

    #[test]
    fn budget_must_be_positive() {
        assert!(SearchBudget::new(0, 2).is_err());
    }
}
