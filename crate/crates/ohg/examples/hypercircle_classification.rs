//! The headline capability: deciding structurally whether a balanced
//! oriented hypergraph is a minimal dependency — a balanced subdivision of
//! a balanced hypercircle — with a witness decomposition, cross-validated
//! against the exact oracle.
//!
//! Run with: cargo run --example hypercircle_classification

use ohg::analysis::Limits;
use ohg::classifier::{self, Verdict};
use ohg::generate;
use ohg::hypergraph::{OrientedHypergraph, Sign};

fn main() {
    let limits = Limits::default();

    // Two triangles with thorns, joined through a 2-edge artery.
    let g = OrientedHypergraph::from_edge_lists(
        &["u1", "v1", "w1", "t1", "u2", "v2", "w2", "t2"],
        &[
            ("a1", &[("u1", Sign::Plus), ("v1", Sign::Minus)]),
            ("a2", &[("v1", Sign::Plus), ("w1", Sign::Minus)]),
            ("a3", &[("w1", Sign::Plus), ("u1", Sign::Minus), ("t1", Sign::Plus)]),
            ("b1", &[("u2", Sign::Plus), ("v2", Sign::Minus)]),
            ("b2", &[("v2", Sign::Plus), ("w2", Sign::Minus)]),
            ("b3", &[("w2", Sign::Plus), ("u2", Sign::Minus), ("t2", Sign::Plus)]),
            ("link", &[("t1", Sign::Minus), ("t2", Sign::Plus)]),
        ],
    )
    .unwrap();

    let verdict = classifier::classify_balanced_circuit(&g, &limits);
    println!("verdict: {}", verdict.verdict);
    println!("oracle:  {} (nullity {})", verdict.oracle.status, verdict.oracle.nullity);
    let w = verdict.witness.expect("circuits carry a witness");
    println!(
        "witness: {} pseudo-flowers, {} arteries, {} terminal 1-edges",
        w.pseudo_flowers.len(),
        w.arteries.len(),
        w.terminal_one_edges.len()
    );
    for (i, pf) in w.pseudo_flowers.iter().enumerate() {
        println!(
            "  P{i}: flower edges {:?}, thorns {:?}",
            pf.flower_edges.iter().map(|e| e.as_str()).collect::<Vec<_>>(),
            pf.thorns.iter().map(|t| t.as_str()).collect::<Vec<_>>()
        );
    }
    println!(
        "contracted {} scaffold vertices; the hypercircle has {} edges",
        w.contracted_vertices.len(),
        w.hypercircle.edges().len()
    );
    classifier::validate_decomposition(&g, &w, &limits).expect("witness re-validates");

    // The acyclic circuits: two 1-edges joined by a path.
    let path = OrientedHypergraph::from_edge_lists(
        &["a", "b"],
        &[
            ("cap1", &[("a", Sign::Plus)]),
            ("m", &[("a", Sign::Minus), ("b", Sign::Plus)]),
            ("cap2", &[("b", Sign::Minus)]),
        ],
    )
    .unwrap();
    let v = classifier::classify_balanced_circuit(&path, &limits);
    println!("\ntwo 1-edges joined by a path: {} (order {})",
        v.verdict,
        v.witness.as_ref().map(|w| w.order()).unwrap_or_default());

    // Rejections agree with the oracle too.
    let pendant = OrientedHypergraph::from_edge_lists(
        &["u", "v", "w", "x"],
        &[
            ("e1", &[("u", Sign::Plus), ("v", Sign::Minus)]),
            ("e2", &[("v", Sign::Plus), ("w", Sign::Minus)]),
            ("e3", &[("w", Sign::Plus), ("u", Sign::Minus)]),
            ("p", &[("u", Sign::Plus), ("x", Sign::Minus)]),
        ],
    )
    .unwrap();
    let report = classifier::cross_validate(&pendant, &limits);
    println!(
        "triangle + pendant: {} / oracle {} / mismatch: {}",
        report.verdict.verdict, report.verdict.oracle.status, report.mismatch
    );

    // Generated hypercircles classify as circuits and recognize properly.
    let mut circuits = 0;
    for seed in 0..50u64 {
        let h = generate::random_balanced_hypercircle(seed);
        let v = classifier::classify_balanced_circuit(&h, &limits);
        assert_eq!(v.verdict, Verdict::Circuit);
        circuits += 1;
    }
    println!("\n{circuits} generated balanced hypercircles, all classified as circuits");
}
