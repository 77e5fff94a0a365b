//! The structural species: the inventory of leaves, thorns, twigs, briars,
//! isthmi, cut vertices and shoals; flower and pseudo-flower recognition;
//! arteries.
//!
//! Run with: cargo run --example flowers_arteries_inventory

use ohg::analysis::{self, FlowerVerdict, Limits};
use ohg::hypergraph::{OrientedHypergraph, Sign};

fn main() {
    let limits = Limits::default();

    // A triangle with a thorn: a pseudo-flower.
    let pf = OrientedHypergraph::from_edge_lists(
        &["u", "v", "w", "t"],
        &[
            ("e1", &[("u", Sign::Plus), ("v", Sign::Minus), ("t", Sign::Plus)]),
            ("e2", &[("v", Sign::Plus), ("w", Sign::Minus)]),
            ("e3", &[("w", Sign::Plus), ("u", Sign::Minus)]),
        ],
    )
    .unwrap();
    let inv = analysis::structural_inventory(&pf);
    println!("thorns: {:?}", inv.thorns.iter().map(|x| x.as_str()).collect::<Vec<_>>());
    println!("briars: {:?}", inv.briars.iter().map(|x| x.as_str()).collect::<Vec<_>>());
    println!("shoals: {}", inv.shoals.len());

    let fa = analysis::flower_analysis(&pf, &limits).unwrap();
    println!("verdict: {:?}", fa.verdict);
    assert_eq!(fa.verdict, FlowerVerdict::PseudoFlower);
    let part = fa.flower_part.unwrap();
    println!(
        "flower-part: {} vertices, {} edges",
        part.vertices().len(),
        part.edges().len()
    );

    // A 1-edge is the half-edge pseudo-flower over a 0-edge.
    let half = OrientedHypergraph::from_edge_lists(&["x"], &[("h", &[("x", Sign::Plus)])])
        .unwrap();
    println!(
        "1-edge: {:?}",
        analysis::flower_analysis(&half, &limits).unwrap().verdict
    );

    // Arteries: subdivided k-edges. A 3-edge with one leg subdivided is a
    // 3-artery.
    let artery = OrientedHypergraph::from_edge_lists(
        &["a", "b", "m", "c"],
        &[
            ("e", &[("a", Sign::Plus), ("b", Sign::Minus), ("m", Sign::Plus)]),
            ("f", &[("m", Sign::Minus), ("c", Sign::Plus)]),
        ],
    )
    .unwrap();
    let r = analysis::is_artery(&artery);
    println!(
        "artery: {} with externals {:?}",
        r.is_artery,
        r.externals.iter().map(|x| x.as_str()).collect::<Vec<_>>()
    );

    // Matrix balance: a {0,±1}-matrix is balanced iff every pure circle of
    // its hypergraph is positive; an odd hole witnesses failure.
    let m = vec![
        vec![1, 1, 0, 0],
        vec![0, 1, 1, 0],
        vec![0, 0, 1, 1],
        vec![-1, 0, 0, 1],
    ];
    let b = analysis::matrix_is_balanced(&m, &limits).unwrap();
    println!("matrix balanced: {}", b.balanced);
    if let Some(hole) = b.odd_hole {
        println!(
            "odd hole on rows {:?}, cols {:?}, entry sum {} (≡ 2 mod 4)",
            hole.rows, hole.cols, hole.entry_sum
        );
    }
}
