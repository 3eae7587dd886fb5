//! Equivalence relations on finite sets, kept in canonical block form.

use std::fmt;

use crate::error::{Error, Result};
use crate::finset::{FinMap, FinSet};

/// Disjoint-set forest over `0..n` with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `x` and `y` were already related.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (mut rx, mut ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
        true
    }

    /// Block labels numbered by first occurrence.
    pub fn labels(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut by_root = vec![usize::MAX; n];
        let mut next = 0;
        (0..n)
            .map(|x| {
                let r = self.find(x);
                if by_root[r] == usize::MAX {
                    by_root[r] = next;
                    next += 1;
                }
                by_root[r]
            })
            .collect()
    }
}

/// A partition of `carrier`. Blocks are numbered by their least element, so
/// the representative of each block is its least element and equal relations
/// compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    carrier: FinSet,
    labels: Vec<usize>,
    block_count: usize,
}

impl Partition {
    pub fn discrete(carrier: &FinSet) -> Self {
        Partition {
            carrier: carrier.clone(),
            labels: (0..carrier.len()).collect(),
            block_count: carrier.len(),
        }
    }

    pub fn indiscrete(carrier: &FinSet) -> Self {
        Partition {
            carrier: carrier.clone(),
            labels: vec![0; carrier.len()],
            block_count: usize::from(!carrier.is_empty()),
        }
    }

    /// Relabels arbitrary block labels into canonical form.
    pub fn from_labels(carrier: &FinSet, labels: &[usize]) -> Result<Self> {
        if labels.len() != carrier.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} labels for {} elements",
                labels.len(),
                carrier.len()
            )));
        }
        let mut map = std::collections::HashMap::new();
        let canon = labels
            .iter()
            .map(|&l| {
                let next = map.len();
                *map.entry(l).or_insert(next)
            })
            .collect();
        Ok(Partition {
            carrier: carrier.clone(),
            labels: canon,
            block_count: map.len(),
        })
    }

    pub fn from_blocks<I, B, S>(carrier: &FinSet, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut labels = vec![usize::MAX; carrier.len()];
        for (b, block) in blocks.into_iter().enumerate() {
            for x in block {
                let i = carrier.require(x.as_ref(), "carrier")?;
                if labels[i] != usize::MAX {
                    return Err(Error::DuplicateElement(x.as_ref().to_string()));
                }
                labels[i] = b;
            }
        }
        if let Some(i) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::NotTotal(carrier.name(i).to_string()));
        }
        Partition::from_labels(carrier, &labels)
    }

    pub(crate) fn from_union_find(carrier: &FinSet, uf: &mut UnionFind) -> Self {
        let labels = uf.labels();
        let block_count = labels.iter().max().map_or(0, |m| m + 1);
        Partition {
            carrier: carrier.clone(),
            labels,
            block_count,
        }
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    /// Block number of the element at `index`.
    pub fn block_of(&self, index: usize) -> usize {
        self.labels[index]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.labels[i] == self.labels[j]
    }

    /// Blocks as index lists, in representative order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l].push(i);
        }
        blocks
    }

    pub fn named_blocks(&self) -> Vec<Vec<String>> {
        self.blocks()
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|i| self.carrier.name(i).to_string())
                    .collect()
            })
            .collect()
    }

    /// All related ordered pairs `(i, j)`, lexicographic.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let blocks = self.blocks();
        let mut out = Vec::new();
        for i in 0..self.labels.len() {
            for &j in &blocks[self.labels[i]] {
                out.push((i, j));
            }
        }
        out
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Partition) -> bool {
        self.carrier == other.carrier && {
            let mut image = vec![usize::MAX; self.block_count];
            self.labels.iter().zip(&other.labels).all(|(&a, &b)| {
                let slot = &mut image[a];
                if *slot == usize::MAX {
                    *slot = b;
                }
                *slot == b
            })
        }
    }

    /// The quotient map onto the block set; blocks are named after their
    /// representatives.
    pub fn quotient_map(&self) -> FinMap {
        let mut reps = vec![usize::MAX; self.block_count];
        for (i, &l) in self.labels.iter().enumerate() {
            if reps[l] == usize::MAX {
                reps[l] = i;
            }
        }
        // Representatives are least elements, so they appear in sorted order.
        let cod = FinSet::new(reps.iter().map(|&i| self.carrier.name(i).to_string()))
            .expect("representatives are distinct");
        FinMap::with_images(self.carrier.clone(), cod, self.labels.clone())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.named_blocks()).finish()
    }
}

/// Fibers of `f` as a partition of its domain.
pub fn kernel_pair(f: &FinMap) -> Partition {
    Partition::from_labels(f.dom(), f.images()).expect("one label per element")
}

/// Least upper bound: the equivalence closure of the union.
pub fn join(p1: &Partition, p2: &Partition) -> Result<Partition> {
    if p1.carrier != p2.carrier {
        return Err(Error::ShapeMismatch(
            "partitions on different carriers".into(),
        ));
    }
    let n = p1.carrier.len();
    let mut uf = UnionFind::new(n);
    for p in [p1, p2] {
        let mut first = vec![usize::MAX; p.block_count];
        for (i, &l) in p.labels.iter().enumerate() {
            if first[l] == usize::MAX {
                first[l] = i;
            } else {
                uf.union(first[l], i);
            }
        }
    }
    Ok(Partition::from_union_find(&p1.carrier, &mut uf))
}
