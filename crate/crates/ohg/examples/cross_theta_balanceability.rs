//! Cross-thetas as the one obstruction to balanceability: the structural
//! test (disjoint-path search) against the brute-force flip-set search, and
//! theta parity.
//!
//! Run with: cargo run --example cross_theta_balanceability

use ohg::analysis::{self, Limits};
use ohg::hypergraph::{Incidence, OrientedHypergraph, Sign};

fn main() {
    let limits = Limits::default();

    // A vertex joined to an edge by three 2-paths: the canonical
    // cross-theta. No orientation of it is balanced.
    let xt = OrientedHypergraph::from_edge_lists(
        &["v", "w1", "w2", "w3"],
        &[
            ("f1", &[("v", Sign::Plus), ("w1", Sign::Minus)]),
            ("f2", &[("v", Sign::Plus), ("w2", Sign::Minus)]),
            ("f3", &[("v", Sign::Plus), ("w3", Sign::Minus)]),
            ("e", &[("w1", Sign::Plus), ("w2", Sign::Plus), ("w3", Sign::Plus)]),
        ],
    )
    .unwrap();
    let report = analysis::is_balanceable(&xt);
    println!("cross-theta fixture balanceable: {}", report.balanceable);
    if let Some(t) = &report.cross_theta {
        println!("witness endpoints: {} and {}", t.endpoints.0, t.endpoints.1);
        for c in t.circles(&xt).unwrap() {
            println!("  theta circle: {}", c.display());
        }
    }
    let brute = analysis::brute_force_balanceable(&xt, &limits).unwrap();
    println!("brute force found a flip set: {}", brute.is_some());

    // An incidence of multiplicity 3 is already a cross-theta.
    let triple = OrientedHypergraph::build(
        ["v"],
        ["e"],
        [
            Incidence::new("v", "e", 1, Sign::Plus),
            Incidence::new("v", "e", 2, Sign::Plus),
            Incidence::new("v", "e", 3, Sign::Plus),
        ],
        true,
    )
    .unwrap();
    println!(
        "ι(v,e) = 3 balanceable: {}",
        analysis::is_balanceable(&triple).balanceable
    );

    // Any simple graph is balanceable: a flip set always exists.
    let mut incs = Vec::new();
    for (e, (a, b)) in [("ab", ("a", "b")), ("bc", ("b", "c")), ("ca", ("c", "a"))] {
        incs.push(Incidence::simple(a, e, Sign::Plus));
        incs.push(Incidence::simple(b, e, Sign::Plus));
    }
    let graph = OrientedHypergraph::build(["a", "b", "c"], ["ab", "bc", "ca"], incs, true)
        .unwrap();
    let flips = analysis::brute_force_balanceable(&graph, &limits).unwrap();
    println!(
        "triangle graph: flip set of size {} balances it",
        flips.expect("graphs are balanceable").len()
    );
}
