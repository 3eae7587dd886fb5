//! Reachability of pullback spans: coherence witnesses from the join of
//! `ker(a')` and `ker(r')`, amalgamation into a cube, the cycle condition,
//! twisted counterexamples and the Van Kampen decision.

use std::collections::HashMap;

use crate::cycles::{
    find_domain_cycle, proper_domain_cycles, AlternatingSequence, DomainCycle, Kernel,
};
use crate::descent::{realize, DescentData, FiberMap};
use crate::error::{Error, Result};
use crate::finset::{pair_name, FinMap, FinSet};
use crate::limits::CommutingSquare;
use crate::partition::{join, kernel_pair};
use crate::span::{product, unpair, InstanceCube, PullbackSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coherence {
    Witness(DescentData),
    /// A block of `join(ker a', ker r')` meeting the fiber over `fiber`
    /// `count` times instead of once.
    Obstructed {
        block: Vec<String>,
        fiber: String,
        count: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceReport {
    /// Only over a pushout bottom does a witness mean reachability.
    pub bottom_is_pushout: bool,
    pub outcome: Coherence,
}

impl CoherenceReport {
    pub fn witness(&self) -> Option<&DescentData> {
        match &self.outcome {
            Coherence::Witness(dd) => Some(dd),
            Coherence::Obstructed { .. } => None,
        }
    }

    pub fn into_witness(self) -> Option<DescentData> {
        match self.outcome {
            Coherence::Witness(dd) => Some(dd),
            Coherence::Obstructed { .. } => None,
        }
    }
}

/// Decides coherence of the span over `bottom` by checking that every block
/// of `P = join(ker a', ker r')` meets each fiber of its `s`-class exactly
/// once. The witness sends `x` to its unique `P`-partner in the target fiber.
pub fn coherence_witness(span: &PullbackSpan, bottom: &CommutingSquare) -> Result<CoherenceReport> {
    span.check_bottom(bottom)?;
    let bottom_is_pushout = bottom.is_pushout();
    let gamma = span.carrier();
    let s = bottom.diagonal();
    let p = join(&kernel_pair(span.a_prime()), &kernel_pair(span.r_prime()))?;
    let s_classes = kernel_pair(&s);
    let s_blocks = s_classes.blocks();

    let mut partner: HashMap<(usize, usize), usize> = HashMap::new();
    for (b, block) in p.blocks().iter().enumerate() {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &i in block {
            *counts.entry(gamma.at(i)).or_default() += 1;
            partner.insert((b, gamma.at(i)), i);
        }
        let class = &s_blocks[s_classes.block_of(gamma.at(block[0]))];
        if let Some(&x) = class
            .iter()
            .find(|x| counts.get(x).copied().unwrap_or(0) != 1)
        {
            return Ok(CoherenceReport {
                bottom_is_pushout,
                outcome: Coherence::Obstructed {
                    block: block
                        .iter()
                        .map(|&i| gamma.dom().name(i).to_string())
                        .collect(),
                    fiber: gamma.cod().name(x).to_string(),
                    count: counts.get(&x).copied().unwrap_or(0),
                },
            });
        }
    }
    let dd = DescentData::from_fn(gamma.clone(), s, |_, e2, i| partner[&(p.block_of(i), e2)])?;
    debug_assert_eq!(dd.validate(), Ok(()));
    Ok(CoherenceReport {
        bottom_is_pushout,
        outcome: Coherence::Witness(dd),
    })
}

/// Builds the cube over a pushout bottom when the span is coherent.
///
/// `K` is the realization of the witness, extended by the elements of `J`
/// and `H` lying over parts of `A` and `R` outside the images of `a` and `r`.
/// Every face is verified before returning.
pub fn amalgamate(span: &PullbackSpan, bottom: &CommutingSquare) -> Result<Option<InstanceCube>> {
    if !bottom.is_pushout() {
        return Err(Error::NotAPushout);
    }
    let Some(witness) = coherence_witness(span, bottom)?.into_witness() else {
        return Ok(None);
    };
    let realized = realize(&witness)?;
    let (c, alpha) = (realized.top(), realized.right());
    let (a_prime, r_prime) = (span.a_prime(), span.r_prime());
    let (tau, beta) = (span.tau(), span.beta());
    let image = |m: &FinMap| {
        let mut hit = vec![false; m.cod().len()];
        m.images().iter().for_each(|&t| hit[t] = true);
        hit
    };
    let (hit_j, hit_h) = (image(a_prime), image(r_prime));

    let mut names: Vec<(String, usize)> = Vec::new();
    for q in 0..c.cod().len() {
        names.push((format!("I:{}", c.cod().name(q)), alpha.at(q)));
    }
    for j in (0..tau.dom().len()).filter(|&j| !hit_j[j]) {
        names.push((
            format!("J:{}", tau.dom().name(j)),
            bottom.bottom().at(tau.at(j)),
        ));
    }
    for h in (0..beta.dom().len()).filter(|&h| !hit_h[h]) {
        names.push((
            format!("H:{}", beta.dom().name(h)),
            bottom.right().at(beta.at(h)),
        ));
    }
    let k = FinSet::new(names.iter().map(|n| n.0.clone()))?;
    let k_index = |name: &str| k.index_of(name).expect("named above");
    let mut sigma = vec![0; k.len()];
    for (name, target) in &names {
        sigma[k_index(name)] = *target;
    }
    let sigma = FinMap::from_indices(k.clone(), bottom.diagonal().cod().clone(), sigma)?;
    let s_prime = FinMap::from_fn(c.dom().clone(), k.clone(), |i| {
        format!("I:{}", c.apply(i).expect("total"))
    })?;

    let mediate = |leg: &FinMap, hit: &[bool], tag: &str| -> Result<FinMap> {
        let mut images = vec![usize::MAX; leg.cod().len()];
        for i in 0..leg.dom().len() {
            let target = s_prime.at(i);
            let slot = &mut images[leg.at(i)];
            if *slot != usize::MAX && *slot != target {
                return Err(Error::Internal(format!(
                    "mediator through {tag} is ill defined"
                )));
            }
            *slot = target;
        }
        for (t, slot) in images.iter_mut().enumerate() {
            if !hit[t] {
                *slot = k_index(&format!("{tag}:{}", leg.cod().name(t)));
            }
        }
        FinMap::from_indices(leg.cod().clone(), k.clone(), images)
    };
    let r_bar_prime = mediate(a_prime, &hit_j, "J")?;
    let a_bar_prime = mediate(r_prime, &hit_h, "H")?;

    let cube = InstanceCube {
        span: span.clone(),
        bottom: bottom.clone(),
        sigma,
        s_prime,
        a_bar_prime,
        r_bar_prime,
    };
    cube.verify()?;
    Ok(Some(cube))
}

/// Composite of the span's canonical fiber maps along an alternating
/// sequence: `ξ^τ` on `ker(a)` steps, `ξ^β` on `ker(r)` steps.
pub fn evaluate_alternating(span: &PullbackSpan, seq: &AlternatingSequence) -> Result<FiberMap> {
    let (a, r) = (span.a(), span.r());
    if seq.elements.is_empty() {
        return Err(Error::InvalidSequence("empty sequence".into()));
    }
    if !seq.is_valid(a, r) {
        return Err(Error::InvalidSequence(
            "steps do not alternate between ker(a) and ker(r)".into(),
        ));
    }
    let (xi_tau, xi_beta) = (span.xi_tau(), span.xi_beta());
    let fibers = span.carrier().fibers();
    let mut acc = FiberMap::identity(&fibers[seq.elements[0]]);
    for (i, w) in seq.elements.windows(2).enumerate() {
        let dd = match seq.kernel_at(i) {
            Kernel::A => &xi_tau,
            Kernel::R => &xi_beta,
        };
        let step = dd
            .component(w[0], w[1])
            .ok_or_else(|| Error::Internal("missing component".into()))?;
        acc = acc.then(step);
    }
    Ok(acc)
}

/// Whether every proper domain cycle evaluates to the identity.
pub fn cycle_condition_holds(span: &PullbackSpan) -> Result<bool> {
    for cycle in proper_domain_cycles(span.a(), span.r())? {
        if !evaluate_alternating(span, &cycle.closed_sequence())?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The twisted span over `γ = π₂: Ω × L → L` with `Ω = {0, 1}`.
///
/// `ξ^r` lifts `ker(r)` identically; `ξ^a` flips the copy index on the way
/// into or out of `x₁` inside the `a`-block of `x₀`, and is the identity lift
/// elsewhere.
pub fn unreachable_span_for_cycle(
    a: &FinMap,
    r: &FinMap,
    cycle: &DomainCycle,
) -> Result<PullbackSpan> {
    let checked = DomainCycle::new(a, r, cycle.elements().to_vec())?;
    if !checked.is_proper() {
        return Err(Error::NotADomainCycle("cycle is not proper".into()));
    }
    let l = a.dom();
    let omega = FinSet::new(["0", "1"])?;
    let i = product(&omega, l);
    let gamma = FinMap::from_fn(i.clone(), l.clone(), |t| unpair(t).1)?;
    let flip = |b: &str| if b == "0" { "1" } else { "0" };

    let (x0, x1) = (cycle.elements()[0], cycle.elements()[1]);
    let xi_a = DescentData::from_fn(gamma.clone(), a.clone(), |e, e2, t| {
        let (b, _) = unpair(i.name(t));
        let twisted = a.at(e) == a.at(x0) && ((e == x1) != (e2 == x1));
        let b = if twisted { flip(&b) } else { &b };
        i.index_of(&pair_name(b, l.name(e2)))
            .expect("Ω × L is complete")
    })?;
    let xi_r = DescentData::from_named(gamma, r.clone(), |_, e2, t| pair_name(&unpair(t).0, e2))?;
    let xi_a_sq = realize(&xi_a)?;
    let xi_r_sq = realize(&xi_r)?;
    PullbackSpan::new(xi_a_sq, xi_r_sq)
}

/// Outcome of the Van Kampen decision for a pushout square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanKampenVerdict {
    pub separated: bool,
    pub cycle: Option<DomainCycle>,
}

/// A pushout `(a, r, ā, r̄)` is Van Kampen iff `a` and `r` have separated kernels.
pub fn van_kampen_verdict(sq: &CommutingSquare) -> Result<VanKampenVerdict> {
    if !sq.is_pushout() {
        return Err(Error::NotAPushout);
    }
    let cycle = find_domain_cycle(sq.left(), sq.top())?;
    Ok(VanKampenVerdict {
        separated: cycle.is_none(),
        cycle,
    })
}

pub fn is_van_kampen(sq: &CommutingSquare) -> Result<bool> {
    Ok(van_kampen_verdict(sq)?.separated)
}
