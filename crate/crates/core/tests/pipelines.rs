use partite::connectivity::{global_lambda, is_strong};
use partite::cut_improver::{spanning_kpartite_ec, target_lambda};
use partite::degree::{
    decide_2k_partite_mindeg, majority_4_colouring, sixpartite_semidegree, AlonBudget,
};
use partite::ear::{ear_decomposition, strong_3partite, validate_ear_decomposition};
use partite::gallery::{
    dkr, exceptional, kt_chromatic_2k, odd_wheel, rotative_tournament, walecki_paths,
};
use partite::mader::spanning_kac_partite;
use partite::oracle::{chromatic_number, exists_strong_bipartite, CHI_CAP, STRONG_BIP_CAP};
use partite::random::{self, rng};
use partite::tournament::{hamiltonian_cycle, is_hamiltonian_cycle, strong_bipartite_semicomplete};
use partite::tree_packing::{kpartite_kt, validate_packing};
use partite::{AnyGraph, Digraph, Error, Graph};

#[test]
fn json_round_trip_is_byte_exact() {
    let g = AnyGraph::Directed(dkr(1, 2).unwrap());
    let text = g.to_json();
    let back = AnyGraph::from_json(&text).unwrap();
    assert_eq!(back, g);
    assert_eq!(back.to_json(), text);
    assert!(back.to_dot().starts_with("digraph G {"));
}

#[test]
fn kpartite_on_complete_graphs() {
    for n in 4..9 {
        let g = Graph::complete(n);
        for k in 2..=4.min(n) {
            let out = spanning_kpartite_ec(&g, k, 0).unwrap();
            assert!(global_lambda(&out.subgraph).unwrap().0 >= target_lambda(n - 1, k));
        }
    }
}

#[test]
fn kt_pipeline_on_cycle_powers() {
    let mut r = rng(4);
    for k in 1..=2 {
        let g = random::k_edge_connected_graph(16, 2 * k + 1, 0.1, &mut r).unwrap();
        let out = kpartite_kt(&g, k, false, 0).unwrap();
        assert!(validate_packing(&g, &out.packing, k));
        assert!(out.partition.part_count() <= k + 1);
    }
}

#[test]
fn ears_cover_random_strong_digraphs() {
    let mut r = rng(11);
    for _ in 0..30 {
        let d = random::strong_digraph(25, 0.08, &mut r);
        let ed = ear_decomposition(&d, None).unwrap();
        assert!(validate_ear_decomposition(&d, &ed));
        let three = strong_3partite(&d).unwrap();
        assert!(is_strong(&three.subgraph));
    }
    assert_eq!(
        strong_3partite(&Digraph::path(3)).unwrap_err(),
        Error::NotStrong
    );
}

#[test]
fn semicomplete_answers_match_the_oracle() {
    let mut r = rng(5);
    for _ in 0..200 {
        let s = random::strong_semicomplete(7, 0.3, &mut r);
        let c = hamiltonian_cycle(&s).unwrap();
        assert!(is_hamiltonian_cycle(&s, &c));
        let oracle = exists_strong_bipartite(&s, STRONG_BIP_CAP).unwrap();
        assert_eq!(strong_bipartite_semicomplete(&s).is_ok(), oracle.found());
    }
    let t5 = exceptional("T5").unwrap();
    assert_eq!(
        strong_bipartite_semicomplete(&t5),
        Err(Error::Exceptional("T5".into()))
    );
}

#[test]
fn mader_on_rotative_tournaments_uses_every_part() {
    for k in 1..=3 {
        let r = rotative_tournament(k).unwrap();
        let out = spanning_kac_partite(&r, k, false).unwrap();
        assert_eq!(out.partition.nonempty_part_count(), 2 * k + 1);
        assert!(out.lambda_h >= k);
    }
    let d = dkr(2, 3).unwrap();
    let fast = spanning_kac_partite(&d, 2, true).unwrap();
    assert!(fast.lambda_h >= 2);
}

#[test]
fn degree_pipelines() {
    let mut r = rng(8);
    let d = random::k_arc_connected_digraph(40, 6, 0.05, &mut r).unwrap();
    let out = sixpartite_semidegree(&d, &AlonBudget::default()).unwrap();
    assert!(out.subgraph.min_semi_degree() >= 2);
    let c = majority_4_colouring(&d).unwrap();
    assert_eq!(c.colours.len(), 40);
    let r5 = rotative_tournament(2).unwrap();
    let no = decide_2k_partite_mindeg(&r5, 2).unwrap();
    assert!(!no.exists);
    assert_eq!(no.certificate.unwrap().len(), 5);
}

#[test]
fn chromatic_families() {
    let w = odd_wheel(9).unwrap();
    assert_eq!(chromatic_number(&w, CHI_CAP).unwrap(), 4);
    let paths = walecki_paths(3).unwrap();
    assert_eq!(paths.len(), 3);
    let host = Graph::complete(7);
    let g = kt_chromatic_2k(2, &host).unwrap();
    assert!(g.vertex_count() > host.vertex_count());
}
