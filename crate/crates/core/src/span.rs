//! Pullback spans over a span `a: L → A`, `r: L → R`, instance cubes, and
//! the pullback of an instance over the pushout apex.
//!
//! A bottom square is stored with `a` on the left, `r` on top, `ā: R → S` on
//! the right and `r̄: A → S` at the bottom, so `s = r̄ ∘ a = ā ∘ r` is its
//! diagonal.

use std::collections::HashMap;

use crate::descent::{canonical_descent, DescentData};
use crate::error::{Error, Result};
use crate::finset::{pair_name, FinMap, FinSet};
use crate::limits::{pullback, CommutingSquare};

/// Two pullback squares over a common instance `γ: I → L`:
/// `(γ, a', τ, a)` and `(γ, r', β, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackSpan {
    left: CommutingSquare,
    right: CommutingSquare,
}

impl PullbackSpan {
    pub fn new(left: CommutingSquare, right: CommutingSquare) -> Result<Self> {
        if left.left() != right.left() {
            return Err(Error::MalformedSpan(
                "the two squares do not share the instance γ".into(),
            ));
        }
        if left.bottom().dom() != right.bottom().dom() {
            return Err(Error::MalformedSpan(
                "a and r have different domains".into(),
            ));
        }
        if !left.is_pullback() {
            return Err(Error::MalformedSpan("left square is not a pullback".into()));
        }
        if !right.is_pullback() {
            return Err(Error::MalformedSpan(
                "right square is not a pullback".into(),
            ));
        }
        Ok(PullbackSpan { left, right })
    }

    /// `γ: I → L`
    pub fn carrier(&self) -> &FinMap {
        self.left.left()
    }

    pub fn a(&self) -> &FinMap {
        self.left.bottom()
    }

    pub fn r(&self) -> &FinMap {
        self.right.bottom()
    }

    /// `a': I → J`
    pub fn a_prime(&self) -> &FinMap {
        self.left.top()
    }

    /// `r': I → H`
    pub fn r_prime(&self) -> &FinMap {
        self.right.top()
    }

    /// `τ: J → A`
    pub fn tau(&self) -> &FinMap {
        self.left.right()
    }

    /// `β: H → R`
    pub fn beta(&self) -> &FinMap {
        self.right.right()
    }

    pub fn left_square(&self) -> &CommutingSquare {
        &self.left
    }

    pub fn right_square(&self) -> &CommutingSquare {
        &self.right
    }

    /// Canonical descent data of the left square, over `a`.
    pub fn xi_tau(&self) -> DescentData {
        canonical_descent(&self.left).expect("span squares are pullbacks")
    }

    /// Canonical descent data of the right square, over `r`.
    pub fn xi_beta(&self) -> DescentData {
        canonical_descent(&self.right).expect("span squares are pullbacks")
    }

    pub(crate) fn check_bottom(&self, bottom: &CommutingSquare) -> Result<()> {
        if bottom.left() != self.a() || bottom.top() != self.r() {
            return Err(Error::MalformedSpan(
                "span legs differ from the bottom square's a and r".into(),
            ));
        }
        Ok(())
    }
}

/// A completed cube: a pullback span, the bottom square, an instance
/// `σ: K → S` and the top maps `s': I → K`, `ā': H → K`, `r̄': J → K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceCube {
    pub span: PullbackSpan,
    pub bottom: CommutingSquare,
    pub sigma: FinMap,
    pub s_prime: FinMap,
    pub a_bar_prime: FinMap,
    pub r_bar_prime: FinMap,
}

impl InstanceCube {
    /// Square `(a', r', ā', r̄')` over `I`.
    pub fn top_face(&self) -> Result<CommutingSquare> {
        CommutingSquare::new(
            self.span.a_prime().clone(),
            self.span.r_prime().clone(),
            self.a_bar_prime.clone(),
            self.r_bar_prime.clone(),
        )
    }

    /// Square `(τ, r̄', σ, r̄)` over `J`.
    pub fn front_left(&self) -> Result<CommutingSquare> {
        CommutingSquare::new(
            self.span.tau().clone(),
            self.r_bar_prime.clone(),
            self.sigma.clone(),
            self.bottom.bottom().clone(),
        )
    }

    /// Square `(β, ā', σ, ā)` over `H`.
    pub fn front_right(&self) -> Result<CommutingSquare> {
        CommutingSquare::new(
            self.span.beta().clone(),
            self.a_bar_prime.clone(),
            self.sigma.clone(),
            self.bottom.right().clone(),
        )
    }

    /// Checks that every face commutes, the rear and front faces are
    /// pullbacks, and the top is a pushout whenever the bottom is.
    pub fn verify(&self) -> Result<()> {
        self.span.check_bottom(&self.bottom)?;
        let top = self.top_face()?;
        if top.diagonal() != self.s_prime {
            return Err(Error::Internal(
                "s' differs from the top face's diagonal".into(),
            ));
        }
        CommutingSquare::new(
            self.span.carrier().clone(),
            self.s_prime.clone(),
            self.sigma.clone(),
            self.bottom.diagonal(),
        )?;
        for (name, face) in [
            ("front left", self.front_left()?),
            ("front right", self.front_right()?),
        ] {
            if !face.is_pullback() {
                return Err(Error::Internal(format!("{name} face is not a pullback")));
            }
        }
        if self.bottom.is_pushout() && !top.is_pushout() {
            return Err(Error::Internal(
                "top face is not a pushout over a pushout bottom".into(),
            ));
        }
        Ok(())
    }
}

/// Pulls an instance `σ: K → S` back along the bottom square: chosen
/// pullbacks along `s`, `r̄` and `ā`, with `a'(l, k) = (a(l), k)` and
/// `r'(l, k) = (r(l), k)`.
pub fn pull_back_instance(bottom: &CommutingSquare, sigma: &FinMap) -> Result<PullbackSpan> {
    let s = bottom.diagonal();
    let (a, r) = (bottom.left(), bottom.top());
    let i = pullback(&s, sigma)?;
    let j = pullback(bottom.bottom(), sigma)?;
    let h = pullback(bottom.right(), sigma)?;

    let leg = |pb_i: &crate::limits::ChosenPullback,
               target: &crate::limits::ChosenPullback,
               m: &FinMap| {
        let index: HashMap<(usize, usize), usize> = (0..target.apex.len())
            .map(|t| ((target.proj1.at(t), target.proj2.at(t)), t))
            .collect();
        let images = (0..pb_i.apex.len())
            .map(|t| index[&(m.at(pb_i.proj1.at(t)), pb_i.proj2.at(t))])
            .collect();
        FinMap::from_indices(pb_i.apex.clone(), target.apex.clone(), images)
    };
    let a_prime = leg(&i, &j, a)?;
    let r_prime = leg(&i, &h, r)?;
    let left = CommutingSquare::new(i.proj1.clone(), a_prime, j.proj1.clone(), a.clone())?;
    let right = CommutingSquare::new(i.proj1.clone(), r_prime, h.proj1.clone(), r.clone())?;
    PullbackSpan::new(left, right)
}

/// The span `Ω × L → Ω × A`, `Ω × L → Ω × R` lifting every fiber identically
/// along the copy coordinate.
pub fn product_span(a: &FinMap, r: &FinMap, omega: &FinSet) -> Result<PullbackSpan> {
    if a.dom() != r.dom() {
        return Err(Error::MalformedSpan(
            "a and r have different domains".into(),
        ));
    }
    let l = a.dom();
    let i = product(omega, l);
    let gamma = FinMap::from_fn(i.clone(), l.clone(), |t| unpair(t).1)?;
    let side = |m: &FinMap| -> Result<CommutingSquare> {
        let j = product(omega, m.cod());
        let top = FinMap::from_fn(i.clone(), j.clone(), |t| {
            let (b, x) = unpair(t);
            pair_name(&b, m.apply(&x).expect("total"))
        })?;
        let proj = FinMap::from_fn(j, m.cod().clone(), |t| unpair(t).1)?;
        CommutingSquare::new(gamma.clone(), top, proj, m.clone())
    };
    PullbackSpan::new(side(a)?, side(r)?)
}

pub(crate) fn product(x: &FinSet, y: &FinSet) -> FinSet {
    FinSet::new(
        x.iter()
            .flat_map(|p| y.iter().map(move |q| pair_name(p, q))),
    )
    .expect("pair names are injective")
}

/// Inverse of [`pair_name`].
pub(crate) fn unpair(name: &str) -> (String, String) {
    let inner = &name[1..name.len() - 1];
    let mut parts = [String::new(), String::new()];
    let mut slot = 0;
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => parts[slot].extend(chars.next()),
            ',' => slot = 1,
            c => parts[slot].push(c),
        }
    }
    let [x, y] = parts;
    (x, y)
}
