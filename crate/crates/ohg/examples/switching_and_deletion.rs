//! Switching and the deletion operations, and how they act on the
//! incidence matrix: switching is row/column negation, weak deletion is
//! row/column deletion.
//!
//! Run with: cargo run --example switching_and_deletion

use ohg::hypergraph::{OrientedHypergraph, Sign};
use ohg::matrix::IncidenceMatrix;
use ohg::transforms;

fn main() {
    let g = OrientedHypergraph::from_edge_lists(
        &["u", "v", "w"],
        &[
            ("e1", &[("u", Sign::Plus), ("v", Sign::Minus)]),
            ("e2", &[("v", Sign::Plus), ("w", Sign::Minus)]),
            ("e3", &[("w", Sign::Plus), ("u", Sign::Minus)]),
        ],
    )
    .unwrap();
    let m = IncidenceMatrix::from_hypergraph(&g);
    println!("{m}");

    // Vertex switching negates a row; edge switching negates a column.
    let switched_u = transforms::switch(&g, ["u"]).unwrap();
    assert_eq!(IncidenceMatrix::from_hypergraph(&switched_u), m.negate_row(0));
    println!("switch u = negate row u:\n{}", m.negate_row(0));

    let switched_e2 = transforms::switch(&g, ["e2"]).unwrap();
    assert_eq!(IncidenceMatrix::from_hypergraph(&switched_e2), m.negate_col(1));

    // Weak deletion = column/row deletion.
    let no_e1 = transforms::weak_delete_edge(&g, &"e1".into()).unwrap();
    assert_eq!(IncidenceMatrix::from_hypergraph(&no_e1), m.without_col(0));
    println!("weak-delete e1 = drop column e1:\n{}", m.without_col(0));

    // Strong vertex deletion takes the incident edges with it.
    let strong = transforms::strong_delete_vertex(&g, &"u".into()).unwrap();
    println!(
        "strong-delete u leaves vertices {:?} and edges {:?}",
        strong.vertices().iter().map(|v| v.as_str()).collect::<Vec<_>>(),
        strong.edges().iter().map(|e| e.as_str()).collect::<Vec<_>>()
    );

    // Breaking one incidence of a circle reduces the cyclomatic number.
    let broken = transforms::break_incidence(
        &g,
        &ohg::hypergraph::IncidenceRef::new("u", "e1", 1),
    )
    .unwrap();
    println!(
        "φ before {} / after breaking one incidence {}",
        ohg::analysis::cyclomatic_number(&g),
        ohg::analysis::cyclomatic_number(&broken)
    );
}
