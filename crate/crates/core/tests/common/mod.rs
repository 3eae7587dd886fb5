#![allow(dead_code)]

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vankampen::{pair_name, DescentData, FinMap, FinSet};

pub fn set(prefix: &str, n: usize) -> FinSet {
    FinSet::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

pub fn map_from(dom: &FinSet, cod: &FinSet, images: &[usize]) -> FinMap {
    FinMap::from_indices(dom.clone(), cod.clone(), images.to_vec()).unwrap()
}

/// Image vectors `dom → cod` with `1 ≤ |cod| ≤ max_cod`.
pub fn images(max_dom: usize, max_cod: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1..=max_cod, 0..=max_dom).prop_flat_map(|(m, n)| (Just(m), proptest::collection::vec(0..m, n)))
}

/// A pair of legs out of a shared `L`.
pub fn legs(max_l: usize, max_cod: usize) -> impl Strategy<Value = (FinMap, FinMap)> {
    (0..=max_l).prop_flat_map(move |n| {
        (
            1..=max_cod,
            1..=max_cod,
            proptest::collection::vec(0..max_cod, n),
            proptest::collection::vec(0..max_cod, n),
        )
            .prop_map(move |(na, nr, a_img, r_img)| {
                let l = set("l", n);
                let a = map_from(
                    &l,
                    &set("a", na),
                    &a_img.iter().map(|&i| i % na).collect::<Vec<_>>(),
                );
                let r = map_from(
                    &l,
                    &set("r", nr),
                    &r_img.iter().map(|&i| i % nr).collect::<Vec<_>>(),
                );
                (a, r)
            })
    })
}

/// Valid descent data over `base` whose fibers over one `base`-block all have
/// size `sizes[block]`; the components are `σ_{e'}⁻¹ ∘ σ_e` for random
/// per-element labellings `σ`.
pub fn descent_over(base: &FinMap, sizes: &[usize], seed: u64) -> DescentData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = base.dom().clone();
    let n = l.len();
    let size = |x: usize| sizes[base.at(x) % sizes.len().max(1)];
    let names: Vec<(String, String)> = (0..n)
        .flat_map(|x| (0..size(x)).map(move |j| (x, j)))
        .map(|(x, j)| (pair_name(l.name(x), &j.to_string()), l.name(x).to_string()))
        .collect();
    let i = FinSet::new(names.iter().map(|(t, _)| t.clone())).unwrap();
    let gamma = FinMap::new(
        i.clone(),
        l.clone(),
        names.iter().map(|(t, x)| (t.clone(), x.clone())),
    )
    .unwrap();
    let perms: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let mut v: Vec<usize> = (0..size(x)).collect();
            v.shuffle(&mut rng);
            v
        })
        .collect();
    DescentData::from_fn(gamma, base.clone(), |e, e2, t| {
        let j: usize = i
            .name(t)
            .trim_end_matches(')')
            .rsplit(',')
            .next()
            .unwrap()
            .parse()
            .unwrap();
        let j2 = perms[e2].iter().position(|&v| v == perms[e][j]).unwrap();
        i.index_of(&pair_name(l.name(e2), &j2.to_string())).unwrap()
    })
    .unwrap()
}

/// Every map `dom → cod`, as image vectors.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| (0..m).map(move |k| [v.clone(), vec![k]].concat()))
            .collect();
    }
    out
}
