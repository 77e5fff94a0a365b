//! Building an oriented hypergraph and reading off its basic quantities:
//! degrees, edge sizes, multiplicities, adjacency signs, and what the
//! validator rejects.
//!
//! Run with: cargo run --example build_and_inspect

use ohg::hypergraph::{Adjacency, Incidence, OrientedHypergraph, Sign};

fn main() {
    // A triangle: three vertices, three 2-edges, each edge oriented with
    // one arrow in (+) and one out (-).
    let triangle = OrientedHypergraph::from_edge_lists(
        &["u", "v", "w"],
        &[
            ("e1", &[("u", Sign::Plus), ("v", Sign::Minus)]),
            ("e2", &[("v", Sign::Plus), ("w", Sign::Minus)]),
            ("e3", &[("w", Sign::Plus), ("u", Sign::Minus)]),
        ],
    )
    .expect("well-formed input");

    for v in triangle.vertices() {
        println!("deg({v}) = {}", triangle.degree(v).unwrap());
    }
    for e in triangle.edges() {
        println!("|{e}| = {}", triangle.edge_size(e).unwrap());
    }

    // The sign of an adjacency is -σ(v,e,k1)·σ(w,e,k2); a non-adjacency
    // has sign 0 (None).
    let adj = Adjacency {
        v: "u".into(),
        k1: 1,
        w: "v".into(),
        k2: 1,
        edge: "e1".into(),
    };
    println!("sgn_e1(u, v) = {:?}", triangle.adjacency_sign(&adj));

    // Multiplicities: slots of a pair must be the consecutive range 1..=k.
    let doubled = OrientedHypergraph::build(
        ["a"],
        ["e"],
        [
            Incidence::new("a", "e", 1, Sign::Plus),
            Incidence::new("a", "e", 2, Sign::Plus),
        ],
        true,
    )
    .unwrap();
    println!(
        "ι(a, e) = {}",
        doubled.multiplicity(&"a".into(), &"e".into()).unwrap()
    );

    // Validation failures are structured errors.
    let gap = OrientedHypergraph::build(
        ["a"],
        ["e"],
        [Incidence::new("a", "e", 2, Sign::Plus)],
        true,
    );
    println!("slot gap: {}", gap.unwrap_err());

    let mixed = OrientedHypergraph::build(
        ["a"],
        ["e"],
        [
            Incidence::new("a", "e", 1, Sign::Plus),
            Incidence::new("a", "e", 2, Sign::Minus),
        ],
        true,
    );
    println!("strict mode: {}", mixed.unwrap_err());
}
