//! The incidence matrix and the exact dependency oracle: rank and nullity
//! over the rationals, nullspace generators, and minimal-dependency
//! certificates for column subsets.
//!
//! Run with: cargo run --example incidence_matrix_oracle

use ohg::hypergraph::{OrientedHypergraph, Sign};
use ohg::matrix::IncidenceMatrix;

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
    let m = IncidenceMatrix::from_hypergraph(&triangle);
    println!("{m}");
    let (rank, nullity) = m.rank_nullity();
    println!("rank {rank}, nullity {nullity}");
    let cert = m.certificate();
    println!("status: {}", cert.status);
    if let Some(gen) = &cert.generator {
        println!(
            "generator: ({})",
            gen.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        );
    }

    // Two parallel all-positive 3-edges: minimally dependent with
    // generator (1, -1); every proper column subset is independent.
    let bundle = OrientedHypergraph::from_edge_lists(
        &["a", "b", "c"],
        &[
            ("p", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Plus)]),
            ("q", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Plus)]),
        ],
    )
    .unwrap();
    let m = IncidenceMatrix::from_hypergraph(&bundle);
    println!("\n{m}");
    println!("full columns: {}", m.certificate().status);
    for j in 0..m.cols() {
        println!("column {{{}}}: {}", m.col_labels()[j], m.certificate_for_columns(&[j]).status);
    }

    // A monovalent vertex pins its column's coefficient to zero, so the
    // dependency cannot be minimal.
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
    let cert = IncidenceMatrix::from_hypergraph(&pendant).certificate();
    println!("\ntriangle + pendant: {} (nullity {})", cert.status, cert.nullity);
}
