mod common;

use common::{all_maps, images, legs, map_from, set};
use proptest::prelude::*;
use vankampen::*;

fn commutes(u: &FinMap, f: &FinMap, v: &FinMap, g: &FinMap) -> bool {
    compose(f, u).unwrap() == compose(g, v).unwrap()
}

proptest! {
    #[test]
    fn pullback_has_unique_mediators(
        (nz, fi) in images(3, 3),
        gi in proptest::collection::vec(0usize..3, 0..=3),
        nt in 0usize..=2,
    ) {
        let z = set("z", nz);
        let f = map_from(&set("x", fi.len()), &z, &fi);
        let gi: Vec<usize> = gi.iter().map(|&k| k % nz).collect();
        let g = map_from(&set("y", gi.len()), &z, &gi);
        let pb = pullback(&f, &g).unwrap();
        prop_assert!(pb.square().is_pullback());
        let t = set("t", nt);
        for ui in all_maps(nt, f.dom().len()) {
            for vi in all_maps(nt, g.dom().len()) {
                let u = map_from(&t, f.dom(), &ui);
                let v = map_from(&t, g.dom(), &vi);
                if !commutes(&u, &f, &v, &g) {
                    continue;
                }
                let count = all_maps(nt, pb.apex.len())
                    .into_iter()
                    .map(|mi| map_from(&t, &pb.apex, &mi))
                    .filter(|m| compose(&pb.proj1, m).unwrap() == u && compose(&pb.proj2, m).unwrap() == v)
                    .count();
                prop_assert_eq!(count, 1);
            }
        }
    }

    #[test]
    fn pushout_has_unique_mediators((a, r) in legs(3, 3), nt in 1usize..=2) {
        let po = pushout(&a, &r).unwrap();
        prop_assert!(po.square(&a, &r).is_pushout());
        let t = set("t", nt);
        for ui in all_maps(a.cod().len(), nt) {
            for vi in all_maps(r.cod().len(), nt) {
                let u = map_from(a.cod(), &t, &ui);
                let v = map_from(r.cod(), &t, &vi);
                if compose(&u, &a).unwrap() != compose(&v, &r).unwrap() {
                    continue;
                }
                let count = all_maps(po.apex.len(), nt)
                    .into_iter()
                    .map(|mi| map_from(&po.apex, &t, &mi))
                    .filter(|m| compose(m, &po.inj1).unwrap() == u && compose(m, &po.inj2).unwrap() == v)
                    .count();
                prop_assert_eq!(count, 1);
            }
        }
    }

    #[test]
    fn pushouts_along_monos_are_pullbacks((a, r) in legs(4, 5)) {
        prop_assume!(a.is_injective());
        prop_assert!(pushout(&a, &r).unwrap().square(&a, &r).is_pullback());
    }

    #[test]
    fn pullbacks_preserve_epis((nz, fi) in images(4, 3), gi in proptest::collection::vec(0usize..3, 0..=2)) {
        let z = set("z", nz);
        let f = map_from(&set("x", fi.len()), &z, &fi);
        let covering: Vec<usize> = (0..nz).chain(gi.iter().map(|&k| k % nz)).collect();
        let g = map_from(&set("y", covering.len()), &z, &covering);
        prop_assert!(pullback(&f, &g).unwrap().proj1.is_surjective());
    }

    #[test]
    fn factorization_is_epi_then_mono((n, fi) in images(5, 5)) {
        let f = map_from(&set("x", fi.len()), &set("y", n), &fi);
        let (e, m) = epi_mono_factorize(&f);
        prop_assert!(classify(&e).epi);
        prop_assert!(classify(&m).mono);
        prop_assert_eq!(compose(&m, &e).unwrap(), f);
    }

    #[test]
    fn coequalizer_identifies_parallel_pair((n, fi) in images(4, 4), gi in proptest::collection::vec(0usize..4, 4)) {
        let y = set("y", n);
        let x = set("x", fi.len());
        let f = map_from(&x, &y, &fi);
        let g = map_from(&x, &y, &gi[..fi.len()].iter().map(|&k| k % n).collect::<Vec<_>>());
        let q = coequalizer(&f, &g).unwrap();
        prop_assert!(q.is_surjective());
        prop_assert_eq!(compose(&q, &f).unwrap(), compose(&q, &g).unwrap());
    }
}

#[test]
fn empty_participants_follow_the_general_formulas() {
    let e = FinSet::empty();
    let x = set("x", 2);
    let f = map_from(&e, &x, &[]);
    let po = pushout(&f, &f).unwrap();
    assert_eq!(po.apex.len(), 4);
    let pb = pullback(&f, &f).unwrap();
    assert_eq!(pb.apex.len(), 0);
}
