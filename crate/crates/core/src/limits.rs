//! Chosen pullbacks, pushouts and coequalizers of finite sets, and tests of
//! the pullback/pushout property for commuting squares.

use crate::error::{Error, Result};
use crate::finset::{compose, pair_name, FinMap, FinSet};
use crate::partition::{Partition, UnionFind};

/// A commuting square
///
/// ```text
///   tl --top--> tr
///   |           |
///  left       right
///   v           v
///   bl -bottom-> br
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingSquare {
    left: FinMap,
    top: FinMap,
    right: FinMap,
    bottom: FinMap,
}

impl CommutingSquare {
    pub fn new(left: FinMap, top: FinMap, right: FinMap, bottom: FinMap) -> Result<Self> {
        if left.dom() != top.dom() {
            return Err(Error::ShapeMismatch(
                "left and top legs have different domains".into(),
            ));
        }
        if left.cod() != bottom.dom() {
            return Err(Error::ShapeMismatch(
                "left leg does not end at the bottom map".into(),
            ));
        }
        if top.cod() != right.dom() {
            return Err(Error::ShapeMismatch(
                "top leg does not end at the right map".into(),
            ));
        }
        if right.cod() != bottom.cod() {
            return Err(Error::ShapeMismatch(
                "right and bottom maps have different codomains".into(),
            ));
        }
        for t in 0..left.dom().len() {
            let via_top = right.at(top.at(t));
            let via_left = bottom.at(left.at(t));
            if via_top != via_left {
                return Err(Error::NotCommuting {
                    element: left.dom().name(t).to_string(),
                    via_top: right.cod().name(via_top).to_string(),
                    via_left: right.cod().name(via_left).to_string(),
                });
            }
        }
        Ok(CommutingSquare {
            left,
            top,
            right,
            bottom,
        })
    }

    pub fn left(&self) -> &FinMap {
        &self.left
    }

    pub fn top(&self) -> &FinMap {
        &self.top
    }

    pub fn right(&self) -> &FinMap {
        &self.right
    }

    pub fn bottom(&self) -> &FinMap {
        &self.bottom
    }

    /// The diagonal `bottom ∘ left = right ∘ top`.
    pub fn diagonal(&self) -> FinMap {
        compose(&self.bottom, &self.left).expect("square shape checked")
    }

    pub fn is_pullback(&self) -> bool {
        is_pullback(self)
    }

    pub fn is_pushout(&self) -> bool {
        is_pushout(self)
    }
}

/// The chosen pullback of a cospan `f: X → Z ← Y: g`, with apex the set of
/// matched pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChosenPullback {
    pub apex: FinSet,
    pub proj1: FinMap,
    pub proj2: FinMap,
    pub along: (FinMap, FinMap),
}

impl ChosenPullback {
    /// The pullback as a square with `proj1` on the left and `f` at the bottom.
    pub fn square(&self) -> CommutingSquare {
        CommutingSquare::new(
            self.proj1.clone(),
            self.proj2.clone(),
            self.along.1.clone(),
            self.along.0.clone(),
        )
        .expect("chosen pullback commutes")
    }
}

pub fn pullback(f: &FinMap, g: &FinMap) -> Result<ChosenPullback> {
    if f.cod() != g.cod() {
        return Err(Error::ShapeMismatch(
            "pullback of maps with different codomains".into(),
        ));
    }
    let g_fibers = g.fibers();
    let mut entries: Vec<(String, usize, usize)> = Vec::new();
    for x in 0..f.dom().len() {
        for &y in &g_fibers[f.at(x)] {
            entries.push((pair_name(f.dom().name(x), g.dom().name(y)), x, y));
        }
    }
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let p1 = entries.iter().map(|e| e.1).collect();
    let p2 = entries.iter().map(|e| e.2).collect();
    let apex = FinSet::from_sorted_unchecked(entries.into_iter().map(|e| e.0).collect());
    Ok(ChosenPullback {
        proj1: FinMap::with_images(apex.clone(), f.dom().clone(), p1),
        proj2: FinMap::with_images(apex.clone(), g.dom().clone(), p2),
        apex,
        along: (f.clone(), g.clone()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pushout {
    pub apex: FinSet,
    pub inj1: FinMap,
    pub inj2: FinMap,
}

impl Pushout {
    /// The pushout of `(f, g)` as a square with `f` on the left and `g` on top.
    pub fn square(&self, f: &FinMap, g: &FinMap) -> CommutingSquare {
        CommutingSquare::new(f.clone(), g.clone(), self.inj2.clone(), self.inj1.clone())
            .expect("pushout square commutes")
    }
}

const LEFT_TAG: &str = "L:";
const RIGHT_TAG: &str = "R:";

/// Pushout of the span `X ← dom → Y`. The apex is the quotient of the tagged
/// union `L:X ⊎ R:Y`; each class is named after its least tagged member.
pub fn pushout(f: &FinMap, g: &FinMap) -> Result<Pushout> {
    if f.dom() != g.dom() {
        return Err(Error::ShapeMismatch(
            "pushout of maps with different domains".into(),
        ));
    }
    let (nx, ny) = (f.cod().len(), g.cod().len());
    let mut uf = UnionFind::new(nx + ny);
    for i in 0..f.dom().len() {
        uf.union(f.at(i), nx + g.at(i));
    }
    // Tagged names sort with every `L:` before every `R:`, preserving the
    // order inside each summand, so index order is name order.
    let labels = uf.labels();
    let mut names = Vec::new();
    let mut seen = 0;
    for (k, &l) in labels.iter().enumerate() {
        if l == seen {
            seen += 1;
            names.push(if k < nx {
                format!("{LEFT_TAG}{}", f.cod().name(k))
            } else {
                format!("{RIGHT_TAG}{}", g.cod().name(k - nx))
            });
        }
    }
    let apex = FinSet::from_sorted_unchecked(names);
    Ok(Pushout {
        inj1: FinMap::with_images(f.cod().clone(), apex.clone(), labels[..nx].to_vec()),
        inj2: FinMap::with_images(g.cod().clone(), apex.clone(), labels[nx..].to_vec()),
        apex,
    })
}

/// Quotient of the common codomain by the equivalence generated by
/// `f(x) ~ g(x)`.
pub fn coequalizer(f: &FinMap, g: &FinMap) -> Result<FinMap> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::ShapeMismatch(
            "coequalizer of non-parallel maps".into(),
        ));
    }
    let mut uf = UnionFind::new(f.cod().len());
    for i in 0..f.dom().len() {
        uf.union(f.at(i), g.at(i));
    }
    Ok(Partition::from_union_find(f.cod(), &mut uf).quotient_map())
}

/// The comparison map from the top-left corner into the chosen pullback of
/// `(bottom, right)` is a bijection.
pub fn is_pullback(sq: &CommutingSquare) -> bool {
    let bottom_fibers = sq.bottom.fibers();
    let right_fibers = sq.right.fibers();
    let matched: usize = bottom_fibers
        .iter()
        .zip(&right_fibers)
        .map(|(b, r)| b.len() * r.len())
        .sum();
    if matched != sq.left.dom().len() {
        return false;
    }
    let width = sq.top.cod().len();
    let mut seen = vec![false; sq.left.cod().len() * width];
    (0..sq.left.dom().len()).all(|t| {
        let key = sq.left.at(t) * width + sq.top.at(t);
        !std::mem::replace(&mut seen[key], true)
    })
}

/// The comparison map from the chosen pushout of `(left, top)` into the
/// bottom-right corner is a bijection.
pub fn is_pushout(sq: &CommutingSquare) -> bool {
    let nb = sq.left.cod().len();
    let nr = sq.top.cod().len();
    let mut uf = UnionFind::new(nb + nr);
    for t in 0..sq.left.dom().len() {
        uf.union(sq.left.at(t), nb + sq.top.at(t));
    }
    let labels = uf.labels();
    let target = |k: usize| {
        if k < nb {
            sq.bottom.at(k)
        } else {
            sq.right.at(k - nb)
        }
    };
    // Injective: each class goes to a distinct corner element.
    let mut class_of_target = vec![usize::MAX; sq.bottom.cod().len()];
    for (k, &l) in labels.iter().enumerate() {
        let slot = &mut class_of_target[target(k)];
        if *slot == usize::MAX {
            *slot = l;
        } else if *slot != l {
            return false;
        }
    }
    // Surjective.
    class_of_target.iter().all(|&l| l != usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::kernel_pair;

    fn set(xs: &[&str]) -> FinSet {
        FinSet::new(xs.iter().copied()).unwrap()
    }

    fn map(dom: &FinSet, cod: &FinSet, pairs: &[(&str, &str)]) -> FinMap {
        FinMap::new(dom.clone(), cod.clone(), pairs.iter().copied()).unwrap()
    }

    #[test]
    fn pullback_of_identities_on_point() {
        let c = set(&["c"]);
        let id = FinMap::identity(&c);
        let pb = pullback(&id, &id).unwrap();
        assert_eq!(pb.apex, set(&["(c,c)"]));
        assert!(pb.square().is_pullback());
    }

    #[test]
    fn pullback_matched_pairs() {
        let (a, b, c) = (set(&["a1", "a2"]), set(&["b1"]), set(&["c"]));
        let f = map(&a, &c, &[("a1", "c"), ("a2", "c")]);
        let g = map(&b, &c, &[("b1", "c")]);
        let pb = pullback(&f, &g).unwrap();
        assert_eq!(pb.apex, set(&["(a1,b1)", "(a2,b1)"]));
    }

    #[test]
    fn pullback_along_itself_is_kernel_pair() {
        let (x, y) = (set(&["1", "2", "3"]), set(&["p", "q"]));
        let f = map(&x, &y, &[("1", "p"), ("2", "q"), ("3", "p")]);
        let pb = pullback(&f, &f).unwrap();
        let pairs: Vec<(usize, usize)> = kernel_pair(&f).pairs();
        let mut names: Vec<String> = pairs
            .iter()
            .map(|&(i, j)| pair_name(x.name(i), x.name(j)))
            .collect();
        names.sort();
        assert_eq!(pb.apex.elements(), names.as_slice());
    }

    #[test]
    fn pullback_codomain_mismatch() {
        let f = FinMap::identity(&set(&["a"]));
        let g = FinMap::identity(&set(&["b"]));
        assert!(pullback(&f, &g).is_err());
    }

    #[test]
    fn pushout_of_identities() {
        let c = set(&["a", "b"]);
        let id = FinMap::identity(&c);
        let po = pushout(&id, &id).unwrap();
        assert_eq!(po.apex.len(), 2);
        assert!(po.square(&id, &id).is_pushout());
    }

    #[test]
    fn pushout_with_empty_domain_is_disjoint_union() {
        let e = FinSet::empty();
        let (x, y) = (set(&["a"]), set(&["a", "b"]));
        let f = FinMap::from_indices(e.clone(), x, vec![]).unwrap();
        let g = FinMap::from_indices(e, y, vec![]).unwrap();
        let po = pushout(&f, &g).unwrap();
        assert_eq!(po.apex, set(&["L:a", "R:a", "R:b"]));
    }

    #[test]
    fn intertwined_kernels_push_out_to_a_point() {
        let l = set(&["x", "y", "z", "w"]);
        let (a_set, r_set) = (set(&["xz", "yw"]), set(&["zw", "xy"]));
        let a = map(
            &l,
            &a_set,
            &[("x", "xz"), ("z", "xz"), ("y", "yw"), ("w", "yw")],
        );
        let r = map(
            &l,
            &r_set,
            &[("z", "zw"), ("w", "zw"), ("x", "xy"), ("y", "xy")],
        );
        let po = pushout(&a, &r).unwrap();
        assert_eq!(po.apex.len(), 1);
        assert!(po.square(&a, &r).is_pushout());
    }

    #[test]
    fn pushout_domain_mismatch() {
        let f = FinMap::identity(&set(&["a"]));
        let g = FinMap::identity(&set(&["b"]));
        assert!(pushout(&f, &g).is_err());
    }

    #[test]
    fn coequalizer_cases() {
        let y = set(&["1", "2"]);
        let id = FinMap::identity(&y);
        let c = coequalizer(&id, &id).unwrap();
        assert!(c.classify().iso);

        let p = set(&["p"]);
        let f = map(&p, &y, &[("p", "1")]);
        let g = map(&p, &y, &[("p", "2")]);
        let c = coequalizer(&f, &g).unwrap();
        assert_eq!(c.cod().len(), 1);
        assert!(coequalizer(&f, &FinMap::identity(&y)).is_err());
    }

    #[test]
    fn coequalizer_of_kernel_projections_is_epi_part() {
        let (x, y) = (set(&["1", "2", "3", "4"]), set(&["p", "q", "r"]));
        let h = map(&x, &y, &[("1", "p"), ("2", "q"), ("3", "p"), ("4", "q")]);
        let kp = pullback(&h, &h).unwrap();
        let c = coequalizer(&kp.proj1, &kp.proj2).unwrap();
        assert_eq!(c.cod().len(), 2);
        assert_eq!(kernel_pair(&c), kernel_pair(&h));
    }

    #[test]
    fn non_commuting_square_is_rejected() {
        let y = set(&["1", "2"]);
        let p = set(&["p"]);
        let f = map(&p, &y, &[("p", "1")]);
        let g = map(&p, &y, &[("p", "2")]);
        let id = FinMap::identity(&y);
        let err = CommutingSquare::new(f, g, id.clone(), id).unwrap_err();
        assert!(matches!(err, Error::NotCommuting { .. }));
    }

    #[test]
    fn pullback_detection() {
        let (a, c) = (set(&["a1", "a2"]), set(&["c"]));
        let f = map(&a, &c, &[("a1", "c"), ("a2", "c")]);
        let g = FinMap::identity(&c);
        let pb = pullback(&f, &g).unwrap();
        assert!(pb.square().is_pullback());

        // An extra element duplicating (a1, c): comparison not injective.
        let tl = set(&["t1", "t1'", "t2"]);
        let left = map(&tl, &a, &[("t1", "a1"), ("t1'", "a1"), ("t2", "a2")]);
        let top = FinMap::from_fn(tl.clone(), c.clone(), |_| "c".into()).unwrap();
        let sq = CommutingSquare::new(left, top, g.clone(), f.clone()).unwrap();
        assert!(!sq.is_pullback());

        // Missing the pair (a2, c): comparison not surjective.
        let tl = set(&["t1"]);
        let left = map(&tl, &a, &[("t1", "a1")]);
        let top = FinMap::from_fn(tl.clone(), c.clone(), |_| "c".into()).unwrap();
        let sq = CommutingSquare::new(left, top, g, f).unwrap();
        assert!(!sq.is_pullback());
    }

    #[test]
    fn pushout_detection() {
        let l = set(&["x", "y"]);
        let (a, r) = (set(&["a"]), set(&["r1", "r2"]));
        let f = map(&l, &a, &[("x", "a"), ("y", "a")]);
        let g = map(&l, &r, &[("x", "r1"), ("y", "r2")]);
        let po = pushout(&f, &g).unwrap();
        assert!(po.square(&f, &g).is_pushout());

        // Extra unreached element.
        let s = set(&["s", "t"]);
        let bottom = map(&a, &s, &[("a", "s")]);
        let right = map(&r, &s, &[("r1", "s"), ("r2", "s")]);
        let sq = CommutingSquare::new(f.clone(), g.clone(), right, bottom).unwrap();
        assert!(!sq.is_pushout());

        // Identifying too much: two disconnected points glued.
        let l1 = set(&["x"]);
        let (a1, r1) = (set(&["a"]), set(&["r", "r'"]));
        let f1 = map(&l1, &a1, &[("x", "a")]);
        let g1 = map(&l1, &r1, &[("x", "r")]);
        let pt = set(&["s"]);
        let bottom = map(&a1, &pt, &[("a", "s")]);
        let right = map(&r1, &pt, &[("r", "s"), ("r'", "s")]);
        let sq = CommutingSquare::new(f1, g1, right, bottom).unwrap();
        assert!(!sq.is_pushout());
    }
}
