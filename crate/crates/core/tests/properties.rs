use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use turanl2_core::canon::{canonical_form, isomorphic};
use turanl2_core::classification::{
    classify_edges, intersection_size, link_inequalities, optimize_partition, Family, OptimizeMode,
};
use turanl2_core::constructions::c_edges;
use turanl2_core::gen::{random_ctf_colored, random_k43_free};
use turanl2_core::improve::{apply_toggle, verify_change_sets, Phase};
use turanl2_core::inequality::duplicate_vertex;
use turanl2_core::{Pair, Partition3, ThreeGraph};

fn graph(max_n: usize) -> impl Strategy<Value = ThreeGraph> {
    (3..=max_n).prop_flat_map(|n| {
        let all = ThreeGraph::complete(n).edges().to_vec();
        let m = all.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges = all.iter().zip(&keep).filter(|(_, &k)| k).map(|(t, _)| *t);
            ThreeGraph::new(n, edges).unwrap()
        })
    })
}

fn graph_and_partition(max_n: usize) -> impl Strategy<Value = (ThreeGraph, Partition3)> {
    graph(max_n).prop_flat_map(|h| {
        let n = h.n();
        proptest::collection::vec(0u8..3, n).prop_map(move |parts| (h.clone(), Partition3::new(parts).unwrap()))
    })
}

proptest! {
    #[test]
    fn l2_identity_and_handshake(h in graph(9)) {
        prop_assert_eq!(h.l2_norm(), 2 * h.count_s2() + 3 * h.len() as u64);
        let sum: u64 = h.codegrees().iter().map(|(_, d)| u64::from(d)).sum();
        prop_assert_eq!(sum, 3 * h.len() as u64);
    }

    #[test]
    fn two_norm_degree_is_deletion_drop(h in graph(9), v in 0usize..9) {
        let v = v % h.n();
        let drop = h.l2_norm() - h.remove_vertex(v).unwrap().l2_norm();
        prop_assert_eq!(h.two_norm_degree(v).unwrap(), drop);
    }

    #[test]
    fn canonical_form_ignores_labels(h in graph(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..h.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let g = h.relabel(&perm);
        let (fh, fg) = (canonical_form(&h).unwrap(), canonical_form(&g).unwrap());
        prop_assert_eq!(fh.key(), fg.key());
        prop_assert!(isomorphic(&h, &g).unwrap());
    }

    #[test]
    fn classification_partitions_the_edges((h, p) in graph_and_partition(9)) {
        let ec = classify_edges(&h, &p).unwrap();
        prop_assert_eq!(ec.b.len(), ec.b_int.len() + ec.b_bi.len());
        prop_assert_eq!(ec.m.len(), ec.m_tri.len() + ec.m_bi.len());
        let rebuilt = h.with_changes(&ec.b, &ec.m);
        prop_assert_eq!(rebuilt.edges(), &c_edges(&p)[..]);
        for f in Family::ALL {
            let mut naive = vec![0usize; h.n()];
            for t in ec.family(f) {
                for &x in t {
                    naive[x] += 1;
                }
            }
            prop_assert_eq!(ec.stats(f).max_vertex_degree, naive.into_iter().max().unwrap_or(0));
        }
    }

    #[test]
    fn toggles_are_exact((h, p) in graph_and_partition(9), a in 0usize..9, b in 0usize..9) {
        let n = h.n();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let e = Pair::new(a, b);
        let phase = if p.part(a) == p.part(b) { Phase::One } else { Phase::Two };
        let (g, r) = apply_toggle(&h, &p, e, phase).unwrap();
        prop_assert!(r.reconciles());
        prop_assert_eq!(verify_change_sets(&h.codegrees(), &g, &r), Ok(()));
        let s1 = r.set("S1").unwrap().pairs.len();
        prop_assert_eq!(s1, 2 * r.added.len());
        if phase == Phase::Two {
            prop_assert_eq!(r.set("S2a").unwrap().pairs.len(), r.removed.len());
            prop_assert_eq!(r.set("S2b").unwrap().pairs.len(), r.removed.len());
        }
    }

    #[test]
    fn partition_optimizers_are_ordered(h in graph(8)) {
        let ex = optimize_partition(&h, OptimizeMode::Exhaustive, None).unwrap();
        let vm = optimize_partition(&h, OptimizeMode::VertexMoves, None).unwrap();
        prop_assert!(ex.intersection >= vm.intersection);
        prop_assert!(vm.intersection >= intersection_size(&h, &Partition3::balanced(h.n())));
        prop_assert_eq!(ex.intersection, intersection_size(&h, &ex.partition));
        for v in 0..h.n() {
            prop_assert!(link_inequalities(&h, &vm.partition, v).unwrap().hold());
        }
    }

    #[test]
    fn symmetrization_is_monotone(seed in any::<u64>(), n in 3usize..=12) {
        let g = random_ctf_colored(n, 0.6, &mut ChaCha8Rng::seed_from_u64(seed));
        let (s, _) = g.locally_symmetrize();
        prop_assert!(s.len() >= g.len());
        prop_assert!(s.is_cyclic_triangle_free());
        prop_assert!(s.is_locally_symmetrized());
        prop_assert!(s.check_symmetrized_facts().unwrap().all_pass());
    }

    #[test]
    fn duplication_keeps_k43_freeness(seed in any::<u64>(), n in 4usize..=8, u in 0usize..8, v in 0usize..8) {
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let h = random_k43_free(n, 0.7, &mut ChaCha8Rng::seed_from_u64(seed));
        let d = duplicate_vertex(&h, u, v).unwrap();
        prop_assert!(!d.contains_k43());
        let s = d.two_norm_degrees();
        prop_assert_eq!(s[u], s[v]);
    }

    #[test]
    fn maximal_completion_does_not_lower_l2(seed in any::<u64>(), n in 4usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_k43_free(n, 0.4, &mut rng);
        let mut g = h.clone();
        for t in ThreeGraph::complete(n).edges() {
            if !g.has_edge(t) {
                let cand = g.with_edge(*t);
                if !cand.contains_k43() {
                    g = cand;
                }
            }
        }
        prop_assert!(h.is_subgraph_of(&g));
        prop_assert!(g.l2_norm() >= h.l2_norm());
        for t in ThreeGraph::complete(n).edges() {
            prop_assert!(g.has_edge(t) || g.with_edge(*t).contains_k43());
        }
    }
}
