//! Descent data over a base map, in family-of-bijections form.
//!
//! For a carrier `γ: I → L` and a base `p: L → B`, descent data is a family of
//! fiber maps `ξ(e, e'): γ⁻¹e → γ⁻¹e'`, one for every ordered pair in
//! `ker(p)`, satisfying neutrality (`ξ(e, e) = id`) and the cocycle law
//! (`ξ(e, e'') = ξ(e', e'') ∘ ξ(e, e')`).
//!
//! [`canonical_descent`] reads descent data off a pullback square, [`realize`]
//! rebuilds a pullback square from descent data by a coequalizer, and
//! [`restrict`] forgets a family down along a factorization of the base.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::finset::{compose, FinMap, FinSet};
use crate::limits::CommutingSquare;
use crate::partition::{kernel_pair, Partition, UnionFind};

/// A map between two fibers of the carrier, stored on carrier indices.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FiberMap(BTreeMap<usize, usize>);

impl FiberMap {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        FiberMap(pairs.into_iter().collect())
    }

    pub fn identity(fiber: &[usize]) -> Self {
        FiberMap(fiber.iter().map(|&i| (i, i)).collect())
    }

    pub fn get(&self, i: usize) -> Option<usize> {
        self.0.get(&i).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|(k, v)| k == v)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.0.values().all(|v| seen.insert(*v))
    }

    pub fn inverse(&self) -> FiberMap {
        FiberMap(self.0.iter().map(|(&k, &v)| (v, k)).collect())
    }

    /// `next ∘ self`; elements whose image is outside `next`'s domain are dropped.
    pub fn then(&self, next: &FiberMap) -> FiberMap {
        FiberMap(
            self.0
                .iter()
                .filter_map(|(&k, v)| next.get(*v).map(|w| (k, w)))
                .collect(),
        )
    }

    pub fn named(&self, carrier: &FinSet) -> Vec<(String, String)> {
        self.iter()
            .map(|(k, v)| (carrier.name(k).to_string(), carrier.name(v).to_string()))
            .collect()
    }
}

impl fmt::Debug for FiberMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.0.iter()).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    NotTotal,
    NotBijective,
    Neutrality,
    Cocycle,
}

/// The first law broken by a candidate family, with named witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescentViolation {
    /// A pair of `ker(p)` without a component, a component outside `ker(p)`,
    /// or a component that is not a total map between the right fibers.
    NotTotal {
        pair: (String, String),
        element: Option<String>,
    },
    NotBijective {
        pair: (String, String),
    },
    Neutrality {
        at: String,
        element: String,
    },
    Cocycle {
        triple: (String, String, String),
        element: String,
    },
}

impl DescentViolation {
    pub fn kind(&self) -> ViolationKind {
        match self {
            DescentViolation::NotTotal { .. } => ViolationKind::NotTotal,
            DescentViolation::NotBijective { .. } => ViolationKind::NotBijective,
            DescentViolation::Neutrality { .. } => ViolationKind::Neutrality,
            DescentViolation::Cocycle { .. } => ViolationKind::Cocycle,
        }
    }
}

impl fmt::Display for DescentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescentViolation::NotTotal {
                pair,
                element: None,
            } => {
                write!(
                    f,
                    "component for ({}, {}) missing or outside the kernel",
                    pair.0, pair.1
                )
            }
            DescentViolation::NotTotal {
                pair,
                element: Some(x),
            } => {
                write!(
                    f,
                    "component ({}, {}) is not a map of fibers at {x}",
                    pair.0, pair.1
                )
            }
            DescentViolation::NotBijective { pair } => {
                write!(f, "component ({}, {}) is not bijective", pair.0, pair.1)
            }
            DescentViolation::Neutrality { at, element } => {
                write!(f, "component ({at}, {at}) moves {element}")
            }
            DescentViolation::Cocycle { triple, element } => write!(
                f,
                "cocycle law fails for ({}, {}, {}) at {element}",
                triple.0, triple.1, triple.2
            ),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DescentData {
    carrier: FinMap,
    base: FinMap,
    family: BTreeMap<(usize, usize), FiberMap>,
}

impl DescentData {
    /// Assembles a candidate family; laws are checked by [`validate`].
    pub fn new(
        carrier: FinMap,
        base: FinMap,
        family: BTreeMap<(usize, usize), FiberMap>,
    ) -> Result<Self> {
        if carrier.cod() != base.dom() {
            return Err(Error::ShapeMismatch(
                "carrier does not land in the base's domain".into(),
            ));
        }
        Ok(DescentData {
            carrier,
            base,
            family,
        })
    }

    /// Dense family over `ker(base)` computed element by element:
    /// `image(e, e', i)` is the carrier index of `ξ(e, e')(i)`.
    pub fn from_fn<F>(carrier: FinMap, base: FinMap, mut image: F) -> Result<Self>
    where
        F: FnMut(usize, usize, usize) -> usize,
    {
        if carrier.cod() != base.dom() {
            return Err(Error::ShapeMismatch(
                "carrier does not land in the base's domain".into(),
            ));
        }
        let fibers = carrier.fibers();
        let mut family = BTreeMap::new();
        for (e, e2) in kernel_pair(&base).pairs() {
            let map = FiberMap::new(fibers[e].iter().map(|&i| (i, image(e, e2, i))));
            family.insert((e, e2), map);
        }
        Ok(DescentData {
            carrier,
            base,
            family,
        })
    }

    /// Name-based variant of [`from_fn`](Self::from_fn).
    pub fn from_named<F>(carrier: FinMap, base: FinMap, mut image: F) -> Result<Self>
    where
        F: FnMut(&str, &str, &str) -> String,
    {
        let i_set = carrier.dom().clone();
        let l_set = carrier.cod().clone();
        let mut missing = None;
        let dd = DescentData::from_fn(carrier, base, |e, e2, i| {
            let name = image(l_set.name(e), l_set.name(e2), i_set.name(i));
            i_set.index_of(&name).unwrap_or_else(|| {
                missing.get_or_insert(name);
                0
            })
        })?;
        match missing {
            Some(name) => Err(Error::UnknownElement {
                element: name,
                role: "carrier domain",
            }),
            None => Ok(dd),
        }
    }

    pub fn carrier(&self) -> &FinMap {
        &self.carrier
    }

    pub fn base(&self) -> &FinMap {
        &self.base
    }

    pub fn family(&self) -> &BTreeMap<(usize, usize), FiberMap> {
        &self.family
    }

    pub fn component(&self, e: usize, e2: usize) -> Option<&FiberMap> {
        self.family.get(&(e, e2))
    }

    pub fn component_named(&self, e: &str, e2: &str) -> Option<Vec<(String, String)>> {
        let l = self.carrier.cod();
        let (e, e2) = (l.index_of(e)?, l.index_of(e2)?);
        self.component(e, e2).map(|m| m.named(self.carrier.dom()))
    }

    pub fn validate(&self) -> std::result::Result<(), DescentViolation> {
        validate(self)
    }

    fn pair_names(&self, e: usize, e2: usize) -> (String, String) {
        let l = self.carrier.cod();
        (l.name(e).to_string(), l.name(e2).to_string())
    }
}

impl fmt::Debug for DescentData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.carrier.cod();
        let i = self.carrier.dom();
        let mut m = f.debug_map();
        for (&(e, e2), xi) in &self.family {
            m.entry(&(l.name(e), l.name(e2)), &xi.named(i));
        }
        m.finish()
    }
}

/// Checks totality, bijectivity, neutrality and the cocycle law, in that
/// order; within each law, blocks of `ker(base)` are scanned in
/// representative order and pairs lexicographically.
pub fn validate(dd: &DescentData) -> std::result::Result<(), DescentViolation> {
    let kernel = kernel_pair(&dd.base);
    let blocks = kernel.blocks();
    let fibers = dd.carrier.fibers();
    let i_set = dd.carrier.dom();

    for block in &blocks {
        for &e in block {
            for &e2 in block {
                let Some(xi) = dd.family.get(&(e, e2)) else {
                    return Err(DescentViolation::NotTotal {
                        pair: dd.pair_names(e, e2),
                        element: None,
                    });
                };
                let fiber_ok =
                    xi.len() == fibers[e].len() && fibers[e].iter().all(|&i| xi.get(i).is_some());
                if !fiber_ok {
                    let element = fibers[e]
                        .iter()
                        .find(|&&i| xi.get(i).is_none())
                        .or_else(|| {
                            xi.0.keys()
                                .find(|k| dd.carrier.images().get(**k) != Some(&e))
                        })
                        .map(|&i| i_set.name(i.min(i_set.len().saturating_sub(1))).to_string());
                    return Err(DescentViolation::NotTotal {
                        pair: dd.pair_names(e, e2),
                        element,
                    });
                }
                if let Some((x, _)) = xi
                    .iter()
                    .find(|&(_, y)| y >= i_set.len() || dd.carrier.at(y) != e2)
                {
                    return Err(DescentViolation::NotTotal {
                        pair: dd.pair_names(e, e2),
                        element: Some(i_set.name(x).to_string()),
                    });
                }
            }
        }
    }
    if let Some(&(e, e2)) = dd.family.keys().find(|&&(e, e2)| {
        e >= kernel.carrier().len() || e2 >= kernel.carrier().len() || !kernel.related(e, e2)
    }) {
        let l = dd.carrier.cod();
        let name = |k: usize| {
            if k < l.len() {
                l.name(k).to_string()
            } else {
                format!("#{k}")
            }
        };
        return Err(DescentViolation::NotTotal {
            pair: (name(e), name(e2)),
            element: None,
        });
    }

    for block in &blocks {
        for &e in block {
            for &e2 in block {
                let xi = &dd.family[&(e, e2)];
                if !xi.is_injective() || fibers[e].len() != fibers[e2].len() {
                    return Err(DescentViolation::NotBijective {
                        pair: dd.pair_names(e, e2),
                    });
                }
            }
        }
    }

    for block in &blocks {
        for &e in block {
            if let Some((x, _)) = dd.family[&(e, e)].iter().find(|(x, y)| x != y) {
                return Err(DescentViolation::Neutrality {
                    at: dd.carrier.cod().name(e).to_string(),
                    element: i_set.name(x).to_string(),
                });
            }
        }
    }

    for block in &blocks {
        for &e in block {
            for &e2 in block {
                let first = &dd.family[&(e, e2)];
                for &e3 in block {
                    let second = &dd.family[&(e2, e3)];
                    let direct = &dd.family[&(e, e3)];
                    for (x, y) in first.iter() {
                        if second.get(y) != direct.get(x) {
                            let l = dd.carrier.cod();
                            return Err(DescentViolation::Cocycle {
                                triple: (
                                    l.name(e).to_string(),
                                    l.name(e2).to_string(),
                                    l.name(e3).to_string(),
                                ),
                                element: i_set.name(x).to_string(),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Descent data of a pullback square `(γ, q, α, p)`: `ξ(e, e')(x)` is the
/// unique `y` over `e'` with `q(y) = q(x)`.
pub fn canonical_descent(sq: &CommutingSquare) -> Result<DescentData> {
    if !sq.is_pullback() {
        return Err(Error::NotAPullback);
    }
    let gamma = sq.left();
    let q = sq.top();
    let fibers = gamma.fibers();
    let mut family = BTreeMap::new();
    for (e, e2) in kernel_pair(sq.bottom()).pairs() {
        let mut map = BTreeMap::new();
        for &x in &fibers[e] {
            let mut partners = fibers[e2].iter().filter(|&&y| q.at(y) == q.at(x));
            match (partners.next(), partners.next()) {
                (Some(&y), None) => {
                    map.insert(x, y);
                }
                _ => return Err(Error::NotUnique(gamma.dom().name(x).to_string())),
            }
        }
        family.insert((e, e2), FiberMap(map));
    }
    Ok(DescentData {
        carrier: gamma.clone(),
        base: sq.bottom().clone(),
        family,
    })
}

fn realization_partition(dd: &DescentData) -> Partition {
    let mut uf = UnionFind::new(dd.carrier.dom().len());
    for xi in dd.family.values() {
        for (x, y) in xi.iter() {
            uf.union(x, y);
        }
    }
    Partition::from_union_find(dd.carrier.dom(), &mut uf)
}

/// The pullback square `(γ, c, α, p)` where `c` is the coequalizer that
/// identifies every `x` with all of its `ξ`-images.
pub fn realize(dd: &DescentData) -> Result<CommutingSquare> {
    dd.validate().map_err(Error::InvalidDescent)?;
    let c = realization_partition(dd).quotient_map();
    let diagonal = compose(&dd.base, &dd.carrier)?;
    let mut alpha = vec![usize::MAX; c.cod().len()];
    for (x, &h) in c.images().iter().enumerate() {
        alpha[h] = diagonal.at(x);
    }
    let alpha = FinMap::from_indices(c.cod().clone(), dd.base.cod().clone(), alpha)?;
    let sq = CommutingSquare::new(dd.carrier.clone(), c, alpha, dd.base.clone())?;
    if !sq.is_pullback() {
        return Err(Error::Internal("realized square is not a pullback".into()));
    }
    Ok(sq)
}

/// The kernel of the realization's top map: the equivalence generated by the
/// graphs of all components.
pub fn kernel_of_realization(dd: &DescentData) -> Result<Partition> {
    dd.validate().map_err(Error::InvalidDescent)?;
    Ok(realization_partition(dd))
}

/// Restricts descent data over `h = g ∘ f` to descent data over `f`: the
/// sub-family indexed by `ker(f) ⊆ ker(h)`.
pub fn restrict(dd: &DescentData, f: &FinMap, g: &FinMap) -> Result<DescentData> {
    let h = compose(g, f)?;
    if h != dd.base {
        return Err(Error::BaseMismatch(
            "g ∘ f differs from the base of the descent data".into(),
        ));
    }
    let family = dd
        .family
        .iter()
        .filter(|(&(e, e2), _)| f.at(e) == f.at(e2))
        .map(|(&k, v)| (k, v.clone()))
        .collect();
    Ok(DescentData {
        carrier: dd.carrier.clone(),
        base: f.clone(),
        family,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::pullback;

    fn set(xs: &[&str]) -> FinSet {
        FinSet::new(xs.iter().copied()).unwrap()
    }

    fn map(dom: &FinSet, cod: &FinSet, pairs: &[(&str, &str)]) -> FinMap {
        FinMap::new(dom.clone(), cod.clone(), pairs.iter().copied()).unwrap()
    }

    /// Two copies of `{x, y}` over `x, y`, base collapsing `x ~ y`.
    fn two_copies() -> (FinMap, FinMap) {
        let i = set(&["0x", "1x", "0y", "1y"]);
        let l = set(&["x", "y"]);
        let b = set(&["b"]);
        let gamma = map(
            &i,
            &l,
            &[("0x", "x"), ("1x", "x"), ("0y", "y"), ("1y", "y")],
        );
        let p = map(&l, &b, &[("x", "b"), ("y", "b")]);
        (gamma, p)
    }

    fn lift(swap: bool) -> DescentData {
        let (gamma, p) = two_copies();
        DescentData::from_named(gamma, p, |e, e2, x| {
            let copy = &x[..1];
            let copy = if swap && e != e2 {
                if copy == "0" {
                    "1"
                } else {
                    "0"
                }
            } else {
                copy
            };
            format!("{copy}{e2}")
        })
        .unwrap()
    }

    #[test]
    fn iso_base_gives_identities() {
        let (gamma, _) = two_copies();
        let l = gamma.cod().clone();
        let p = FinMap::identity(&l);
        let pb = pullback(&p, &gamma).unwrap();
        let dd = canonical_descent(&pb.square()).unwrap();
        assert_eq!(dd.family().len(), 2);
        assert!(dd.family().values().all(FiberMap::is_identity));
    }

    #[test]
    fn canonical_descent_requires_pullback() {
        let (gamma, p) = two_copies();
        let pt = set(&["k"]);
        let q = FinMap::from_fn(gamma.dom().clone(), pt.clone(), |_| "k".into()).unwrap();
        let alpha = FinMap::from_fn(pt, p.cod().clone(), |_| "b".into()).unwrap();
        let sq = CommutingSquare::new(gamma, q, alpha, p).unwrap();
        assert_eq!(canonical_descent(&sq).unwrap_err(), Error::NotAPullback);
    }

    #[test]
    fn lifts_are_valid_and_round_trip() {
        for swap in [false, true] {
            let dd = lift(swap);
            assert_eq!(dd.validate(), Ok(()));
            let sq = realize(&dd).unwrap();
            assert!(sq.is_pullback());
            assert_eq!(sq.top().cod().len(), 2);
            assert_eq!(canonical_descent(&sq).unwrap(), dd);
            assert_eq!(kernel_of_realization(&dd).unwrap(), kernel_pair(sq.top()));
        }
    }

    #[test]
    fn swapped_lift_identifies_across_copies() {
        let dd = lift(true);
        let k = kernel_of_realization(&dd).unwrap();
        let i = dd.carrier().dom();
        assert!(k.related(i.index_of("0x").unwrap(), i.index_of("1y").unwrap()));
        assert!(!k.related(i.index_of("0x").unwrap(), i.index_of("0y").unwrap()));
    }

    #[test]
    fn neutrality_violation() {
        let dd = lift(false);
        let mut family = dd.family().clone();
        let x = dd.carrier().cod().index_of("x").unwrap();
        let swapped: Vec<(usize, usize)> = family[&(x, x)].iter().collect();
        family.insert(
            (x, x),
            FiberMap::new([(swapped[0].0, swapped[1].1), (swapped[1].0, swapped[0].1)]),
        );
        let bad = DescentData::new(dd.carrier().clone(), dd.base().clone(), family).unwrap();
        assert_eq!(
            bad.validate().unwrap_err().kind(),
            ViolationKind::Neutrality
        );
        assert!(matches!(realize(&bad), Err(Error::InvalidDescent(_))));
    }

    #[test]
    fn missing_and_non_bijective_components() {
        let dd = lift(false);
        let l = dd.carrier().cod();
        let (x, y) = (l.index_of("x").unwrap(), l.index_of("y").unwrap());

        let mut family = dd.family().clone();
        family.remove(&(x, y));
        let bad = DescentData::new(dd.carrier().clone(), dd.base().clone(), family).unwrap();
        assert_eq!(
            bad.validate().unwrap_err(),
            DescentViolation::NotTotal {
                pair: ("x".into(), "y".into()),
                element: None
            }
        );

        let mut family = dd.family().clone();
        let i = dd.carrier().dom();
        let target = i.index_of("0y").unwrap();
        let collapsed = FiberMap::new(family[&(x, y)].iter().map(|(k, _)| (k, target)));
        family.insert((x, y), collapsed);
        let bad = DescentData::new(dd.carrier().clone(), dd.base().clone(), family).unwrap();
        assert_eq!(
            bad.validate().unwrap_err().kind(),
            ViolationKind::NotBijective
        );
    }

    #[test]
    fn cocycle_violation() {
        let dd = lift(false);
        let l = dd.carrier().cod();
        let (x, y) = (l.index_of("x").unwrap(), l.index_of("y").unwrap());
        let mut family = dd.family().clone();
        let twisted = lift(true).component(x, y).unwrap().clone();
        family.insert((x, y), twisted);
        let bad = DescentData::new(dd.carrier().clone(), dd.base().clone(), family).unwrap();
        assert_eq!(bad.validate().unwrap_err().kind(), ViolationKind::Cocycle);
    }

    #[test]
    fn restriction_cases() {
        let dd = lift(true);
        let p = dd.base().clone();
        let l = dd.carrier().cod().clone();
        // g iso: nothing forgotten.
        let same = restrict(&dd, &p, &FinMap::identity(p.cod())).unwrap();
        assert_eq!(same.family(), dd.family());
        // f = id: only the diagonal, all identities.
        let diag = restrict(&dd, &FinMap::identity(&l), &p).unwrap();
        assert_eq!(diag.family().len(), 2);
        assert!(diag.family().values().all(FiberMap::is_identity));
        assert_eq!(diag.validate(), Ok(()));
        // Base mismatch.
        let wrong = FinMap::identity(&l);
        assert!(matches!(
            restrict(&dd, &wrong, &wrong),
            Err(Error::BaseMismatch(_))
        ));
    }
}
