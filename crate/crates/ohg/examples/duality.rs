//! Incidence duality: vertices and edges exchange roles, the dual of the
//! dual is the original, and circles keep their signs and purity.
//!
//! Run with: cargo run --example duality

use ohg::analysis::{self, Limits};
use ohg::format;
use ohg::hypergraph::{OrientedHypergraph, Sign};

fn main() {
    let limits = Limits::default();
    let g = OrientedHypergraph::from_edge_lists(
        &["a", "b", "c"],
        &[
            ("p", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Plus)]),
            ("q", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Plus)]),
        ],
    )
    .unwrap();
    let d = g.incidence_dual();
    println!("original:\n{}", format::serialize_hypergraph(&g));
    println!("dual:\n{}", format::serialize_hypergraph(&d));
    assert_eq!(d.incidence_dual(), g);
    println!("dual of dual equals the original: true");

    println!(
        "φ(G) = {}, φ(G*) = {}",
        analysis::cyclomatic_number(&g),
        analysis::cyclomatic_number(&d)
    );

    for c in analysis::enumerate_circles(&g, &limits).unwrap() {
        let class = analysis::classify_circle(&g, &c).unwrap();
        let cd = c.dualize().normalized(&d);
        let class_d = analysis::classify_circle(&d, &cd).unwrap();
        println!(
            "circle {} | sign {} purity {} -> dual sign {} purity {}",
            c.display(),
            class.sign,
            class.pure,
            class_d.sign,
            class_d.pure
        );
        assert_eq!(class.sign, class_d.sign);
        assert_eq!(class.pure, class_d.pure);
    }
}
