//! The text format and the DOT export: parse, serialize, round-trip, and
//! render the incidence graph.
//!
//! Run with: cargo run --example file_format_and_dot

use ohg::dot;
use ohg::format::{self, HypergraphDocument};

const DOC: &str = "\
ohg 1
# name: triangle
# note: each edge carries one arrow in and one out
v u
v v
v w
e e1
e e2
e e3
i u e1 1 +
i v e1 1 -
i v e2 1 +
i w e2 1 -
i w e3 1 +
i u e3 1 -
";

fn main() {
    let doc = format::parse(DOC, true).expect("valid document");
    println!(
        "parsed `{}`: {} vertices, {} edges, {} incidences",
        doc.name.as_deref().unwrap_or("?"),
        doc.hypergraph.vertices().len(),
        doc.hypergraph.edges().len(),
        doc.hypergraph.incidences().len()
    );

    // Round trip: parse(serialize(d)) == d, element order included.
    let text = format::serialize(&doc);
    assert_eq!(format::parse(&text, true).unwrap(), doc);
    println!("round trip stable: true\n");

    // Errors carry locations.
    match format::parse("ohg 1\nv a\nv a\n", true) {
        Err(e) => println!("duplicate id: {e}"),
        Ok(_) => unreachable!(),
    }
    match format::parse("ohg 1\nv a\ne f\ni a f 0 +\n", true) {
        Err(e) => println!("bad slot: {e}"),
        Ok(_) => unreachable!(),
    }

    // DOT export of the incidence graph: + arrows point into the vertex.
    println!("\n{}", dot::dot_export(&doc.hypergraph));

    // Documents are plain values; build one programmatically.
    let mut new_doc = HypergraphDocument::new(doc.hypergraph.incidence_dual());
    new_doc.name = Some("triangle-dual".into());
    print!("{}", format::serialize(&new_doc));
}
