//! Circle enumeration through the incidence graph, signs and purity,
//! balance with negative-circle witnesses, and the constructive balanced
//! re-orientation.
//!
//! Run with: cargo run --example circles_and_balance

use ohg::analysis::{self, Limits};
use ohg::hypergraph::{OrientedHypergraph, Sign};

fn main() {
    let limits = Limits::default();

    // Two parallel 3-edges carry three circles of length 2.
    let bundle = OrientedHypergraph::from_edge_lists(
        &["a", "b", "c"],
        &[
            ("p", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Plus)]),
            ("q", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Plus)]),
        ],
    )
    .unwrap();
    for c in analysis::enumerate_circles(&bundle, &limits).unwrap() {
        let class = analysis::classify_circle(&bundle, &c).unwrap();
        println!(
            "{} {} length={} {}",
            class.sign,
            if class.pure { "pure" } else { "degenerate" },
            c.circle_length(),
            c.display()
        );
    }
    println!("balanced: {}", analysis::is_balanced(&bundle, &limits).unwrap().balanced);

    // Flip one incidence: a negative circle appears and is reported.
    let mut incs = bundle.incidences().to_vec();
    incs[0].sign = incs[0].sign.flip();
    let unbalanced =
        OrientedHypergraph::build(["a", "b", "c"], ["p", "q"], incs, true).unwrap();
    let report = analysis::is_balanced(&unbalanced, &limits).unwrap();
    println!(
        "after one flip, balanced: {}, witness: {}",
        report.balanced,
        report.negative_circle.unwrap().display()
    );

    // The forest-gauge re-orientation balances anything balanceable.
    let fixed = analysis::balanced_orientation(&unbalanced, &limits)
        .unwrap()
        .expect("no cross-theta here");
    println!(
        "re-oriented, balanced: {}",
        analysis::is_balanced(&fixed, &limits).unwrap().balanced
    );

    // The cyclomatic number counts the essential circles.
    println!(
        "φ = {}, essential circles: {}",
        analysis::cyclomatic_number(&bundle),
        analysis::essential_circles(&bundle).len()
    );
}
