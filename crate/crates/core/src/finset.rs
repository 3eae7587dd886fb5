//! Finite sets with opaque string elements and total maps between them.
//!
//! Elements are kept in lexicographic order so that two sets with the same
//! members are structurally equal. Maps store the index of each image in the
//! codomain, which keeps composition and fiber computations allocation-light.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Default)]
pub struct FinSet {
    elems: Arc<[String]>,
}

impl FinSet {
    pub fn new<I, S>(elems: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v: Vec<String> = elems.into_iter().map(Into::into).collect();
        v.sort();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0].clone()));
        }
        Ok(FinSet { elems: v.into() })
    }

    /// Builds a set from names that may contain duplicates; duplicates collapse.
    pub fn from_names_dedup<I, S>(elems: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v: Vec<String> = elems.into_iter().map(Into::into).collect();
        v.sort();
        v.dedup();
        FinSet { elems: v.into() }
    }

    pub fn empty() -> Self {
        FinSet::default()
    }

    /// Caller guarantees `elems` is strictly increasing.
    pub(crate) fn from_sorted_unchecked(elems: Vec<String>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        FinSet {
            elems: elems.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> + '_ {
        self.elems.iter().map(String::as_str)
    }

    /// Name of the element at `index`.
    pub fn name(&self, index: usize) -> &str {
        &self.elems[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elems.binary_search_by(|e| e.as_str().cmp(name)).ok()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    pub(crate) fn require(&self, name: &str, role: &'static str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownElement {
            element: name.to_string(),
            role,
        })
    }
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.elems, &other.elems) || self.elems == other.elems
    }
}

impl Eq for FinSet {}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elems.iter()).finish()
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.elems.join(", "))
    }
}

/// Canonical name of an ordered pair. Components containing `\`, `(`, `)`
/// or `,` are escaped so that the encoding stays injective under nesting.
pub fn pair_name(x: &str, y: &str) -> String {
    let mut out = String::with_capacity(x.len() + y.len() + 3);
    out.push('(');
    escape_into(&mut out, x);
    out.push(',');
    escape_into(&mut out, y);
    out.push(')');
    out
}

fn escape_into(out: &mut String, s: &str) {
    for ch in s.chars() {
        if matches!(ch, '\\' | '(' | ')' | ',') {
            out.push('\\');
        }
        out.push(ch);
    }
}

/// A total map between finite sets.
#[derive(Clone, PartialEq, Eq)]
pub struct FinMap {
    dom: FinSet,
    cod: FinSet,
    images: Vec<usize>,
}

impl FinMap {
    /// Builds a map from `(element, image)` name pairs. Every domain element
    /// must be assigned exactly once.
    pub fn new<I, S, T>(dom: FinSet, cod: FinSet, assignment: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut images = vec![usize::MAX; dom.len()];
        for (x, y) in assignment {
            let i = dom.require(x.as_ref(), "domain")?;
            let j = cod.require(y.as_ref(), "codomain")?;
            if images[i] != usize::MAX {
                return Err(Error::DuplicateElement(x.as_ref().to_string()));
            }
            images[i] = j;
        }
        if let Some(i) = images.iter().position(|&j| j == usize::MAX) {
            return Err(Error::NotTotal(dom.name(i).to_string()));
        }
        Ok(FinMap { dom, cod, images })
    }

    pub fn from_indices(dom: FinSet, cod: FinSet, images: Vec<usize>) -> Result<Self> {
        if images.len() != dom.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} images for a domain of {} elements",
                images.len(),
                dom.len()
            )));
        }
        if let Some(i) = images.iter().position(|&j| j >= cod.len()) {
            return Err(Error::NotTotal(dom.name(i).to_string()));
        }
        Ok(FinMap { dom, cod, images })
    }

    /// Builds a map from a closure on names.
    pub fn from_fn<F>(dom: FinSet, cod: FinSet, mut f: F) -> Result<Self>
    where
        F: FnMut(&str) -> String,
    {
        let images = dom
            .iter()
            .map(|x| cod.require(&f(x), "codomain"))
            .collect::<Result<Vec<_>>>()?;
        Ok(FinMap { dom, cod, images })
    }

    pub fn identity(set: &FinSet) -> Self {
        FinMap {
            dom: set.clone(),
            cod: set.clone(),
            images: (0..set.len()).collect(),
        }
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image index of the domain element at `index`.
    pub fn at(&self, index: usize) -> usize {
        self.images[index]
    }

    pub fn apply(&self, name: &str) -> Option<&str> {
        self.dom
            .index_of(name)
            .map(|i| self.cod.name(self.images[i]))
    }

    /// Preimage lists indexed by codomain element, each in increasing order.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.cod.len()];
        for (i, &j) in self.images.iter().enumerate() {
            fibers[j].push(i);
        }
        fibers
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FinMap) -> Result<FinMap> {
        compose(other, self)
    }

    pub fn classify(&self) -> MapClass {
        classify(self)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        self.images
            .iter()
            .all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        for &j in &self.images {
            seen[j] = true;
        }
        seen.into_iter().all(|b| b)
    }

    /// Unchecked constructor for images already known to be in range.
    pub(crate) fn with_images(dom: FinSet, cod: FinSet, images: Vec<usize>) -> Self {
        debug_assert_eq!(images.len(), dom.len());
        debug_assert!(images.iter().all(|&j| j < cod.len()));
        FinMap { dom, cod, images }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.images
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.dom.name(i), self.cod.name(j)))
    }
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pairs()).finish()
    }
}

/// `g ∘ f`.
pub fn compose(g: &FinMap, f: &FinMap) -> Result<FinMap> {
    if f.cod != g.dom {
        return Err(Error::ShapeMismatch(
            "codomain of the first map differs from the domain of the second".into(),
        ));
    }
    let images = f.images.iter().map(|&j| g.images[j]).collect();
    Ok(FinMap::with_images(f.dom.clone(), g.cod.clone(), images))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapClass {
    pub mono: bool,
    pub epi: bool,
    pub iso: bool,
}

pub fn classify(f: &FinMap) -> MapClass {
    let mono = f.is_injective();
    let epi = f.is_surjective();
    MapClass {
        mono,
        epi,
        iso: mono && epi,
    }
}

/// Factors `f = m ∘ e` through its image. The image set carries the names of
/// the image elements in `cod(f)`.
pub fn epi_mono_factorize(f: &FinMap) -> (FinMap, FinMap) {
    let mut hit = vec![false; f.cod.len()];
    for &j in &f.images {
        hit[j] = true;
    }
    let mut renumber = vec![usize::MAX; f.cod.len()];
    let mut names = Vec::new();
    for (j, _) in hit.iter().enumerate().filter(|(_, &h)| h) {
        renumber[j] = names.len();
        names.push(f.cod.name(j).to_string());
    }
    // Sorted input stays sorted after filtering.
    let image = FinSet {
        elems: names.into(),
    };
    let e = FinMap::with_images(
        f.dom.clone(),
        image.clone(),
        f.images.iter().map(|&j| renumber[j]).collect(),
    );
    let m = FinMap::with_images(
        image.clone(),
        f.cod.clone(),
        (0..image.len())
            .map(|k| f.cod.index_of(image.name(k)).expect("image element"))
            .collect(),
    );
    (e, m)
}
