//! DOT export of the incidence graph. Vertices render as circles, edges as
//! boxes; a `+` incidence is drawn as an arrow into the vertex, a `-` one as
//! an arrow out of it. Output is byte-stable for fixed input.

use crate::hypergraph::{OrientedHypergraph, Sign};

pub fn dot_export(g: &OrientedHypergraph) -> String {
    let mut out = String::from("digraph ohg {\n");
    for v in g.vertices() {
        out.push_str(&format!("  \"{v}\" [shape=circle];\n"));
    }
    for e in g.edges() {
        out.push_str(&format!("  \"{e}\" [shape=box];\n"));
    }
    for i in g.incidences() {
        let label = if i.slot > 1 || g.multiplicity(&i.vertex, &i.edge).unwrap_or(0) > 1 {
            format!(" [label=\"{}\"]", i.slot)
        } else {
            String::new()
        };
        match i.sign {
            Sign::Plus => out.push_str(&format!("  \"{}\" -> \"{}\"{};\n", i.edge, i.vertex, label)),
            Sign::Minus => out.push_str(&format!("  \"{}\" -> \"{}\"{};\n", i.vertex, i.edge, label)),
        }
    }
    out.push_str("}\n");
    out
}
