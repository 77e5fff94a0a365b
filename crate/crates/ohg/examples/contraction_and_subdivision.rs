//! 2-edge and 2-vertex contraction, edge subdivision with its
//! compatible/balanced classification, and the inverse relationship between
//! the two.
//!
//! Run with: cargo run --example contraction_and_subdivision

use ohg::hypergraph::{IncidenceRef, OrientedHypergraph, Sign};
use ohg::transforms::{self, Compatibility};

fn main() {
    let triangle = OrientedHypergraph::from_edge_lists(
        &["u", "v", "w"],
        &[
            ("e1", &[("u", Sign::Plus), ("v", Sign::Minus)]),
            ("e2", &[("v", Sign::Plus), ("w", Sign::Minus)]),
            ("e3", &[("w", Sign::Plus), ("u", Sign::Minus)]),
        ],
    )
    .unwrap();

    // Contracting a positive 2-edge identifies its endpoints.
    let digon = transforms::contract_2edge(&triangle, &"e1".into()).unwrap();
    println!(
        "contract e1: {} vertices, {} edges (a length-2 circle)",
        digon.vertices().len(),
        digon.edges().len()
    );

    // Contracting a degree-2 vertex merges its two edges; it equals the
    // dual route dual∘contract_2edge∘dual.
    let merged = transforms::contract_2vertex(&triangle, &"v".into()).unwrap();
    let dual_route = transforms::contract_2edge(&triangle.incidence_dual(), &"v".into())
        .unwrap()
        .incidence_dual();
    assert_eq!(merged, dual_route);
    println!(
        "contract vertex v: edges {:?}",
        merged.edges().iter().map(|e| e.as_str()).collect::<Vec<_>>()
    );

    // Subdividing a 3-edge pinches it into two edges around a new vertex.
    let hyper = OrientedHypergraph::from_edge_lists(
        &["a", "b", "c"],
        &[("e", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Minus)])],
    )
    .unwrap();
    let part1 = vec![IncidenceRef::new("a", "e", 1)];
    let part2 = vec![IncidenceRef::new("b", "e", 1), IncidenceRef::new("c", "e", 1)];
    let r = transforms::subdivide_edge(&hyper, &"e".into(), &part1, &part2, Sign::Plus, Sign::Minus)
        .unwrap();
    println!(
        "subdivide e at {}: new edges {} / {}, {:?}, balanced: {}",
        r.new_vertex,
        r.new_edges.0,
        r.new_edges.1,
        r.compatibility,
        r.balanced
    );
    assert_eq!(r.compatibility, Compatibility::Compatible);

    // A compatible subdivision is undone by contracting the new vertex.
    let back = transforms::contract_2vertex(&r.hypergraph, &r.new_vertex).unwrap();
    println!(
        "contracting {} back: {} edges, {} incidences (the original shape)",
        r.new_vertex,
        back.edges().len(),
        back.incidences().len()
    );

    // An incompatible split on a circle changes circle signs: unbalanced.
    let bad = transforms::subdivide_edge(
        &triangle,
        &"e1".into(),
        &[IncidenceRef::new("u", "e1", 1)],
        &[IncidenceRef::new("v", "e1", 1)],
        Sign::Plus,
        Sign::Plus,
    )
    .unwrap();
    println!(
        "incompatible split of e1 on the triangle: balanced = {}",
        bad.balanced
    );
}
