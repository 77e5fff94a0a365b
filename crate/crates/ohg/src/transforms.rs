//! Structure-preserving operations: deletion, breaking, switching,
//! 2-contractions and subdivision. Inputs are never mutated; every operation
//! returns a new hypergraph.

use std::collections::HashMap;

use crate::error::TransformError;
use crate::hypergraph::{
    EdgeId, Incidence, IncidenceRef, OrientedHypergraph, Sign, VertexId,
};
use crate::incidence_graph::IncidenceGraph;

/// Target of a weak deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeleteTarget {
    Vertex(VertexId),
    Edge(EdgeId),
    Incidence(IncidenceRef),
}

/// Weak deletion: removes the target and only the incidences it carries.
/// Deleting a single incidence is "breaking"; trailing slots of the affected
/// pair are renumbered so slots stay consecutive.
pub fn weak_delete(
    g: &OrientedHypergraph,
    target: &DeleteTarget,
) -> Result<OrientedHypergraph, TransformError> {
    match target {
        DeleteTarget::Vertex(v) => weak_delete_vertex(g, v),
        DeleteTarget::Edge(e) => weak_delete_edge(g, e),
        DeleteTarget::Incidence(i) => break_incidence(g, i),
    }
}

pub fn weak_delete_vertex(
    g: &OrientedHypergraph,
    v: &VertexId,
) -> Result<OrientedHypergraph, TransformError> {
    if !g.has_vertex(v) {
        return Err(TransformError::UnknownId(v.as_str().to_owned()));
    }
    let vertices: Vec<VertexId> = g.vertices().iter().filter(|x| *x != v).cloned().collect();
    let incidences: Vec<Incidence> = g
        .incidences()
        .iter()
        .filter(|i| &i.vertex != v)
        .cloned()
        .collect();
    Ok(rebuild(vertices, g.edges().to_vec(), incidences))
}

pub fn weak_delete_edge(
    g: &OrientedHypergraph,
    e: &EdgeId,
) -> Result<OrientedHypergraph, TransformError> {
    if !g.has_edge(e) {
        return Err(TransformError::UnknownId(e.as_str().to_owned()));
    }
    let edges: Vec<EdgeId> = g.edges().iter().filter(|x| *x != e).cloned().collect();
    let incidences: Vec<Incidence> = g
        .incidences()
        .iter()
        .filter(|i| &i.edge != e)
        .cloned()
        .collect();
    Ok(rebuild(g.vertices().to_vec(), edges, incidences))
}

/// Removes exactly one incidence and renumbers the trailing slots of its
/// (vertex, edge) pair.
pub fn break_incidence(
    g: &OrientedHypergraph,
    target: &IncidenceRef,
) -> Result<OrientedHypergraph, TransformError> {
    if !g.has_incidence(target) {
        return Err(TransformError::UnknownId(target.to_string()));
    }
    let incidences: Vec<Incidence> = g
        .incidences()
        .iter()
        .filter(|i| i.to_ref() != *target)
        .map(|i| {
            let mut i = i.clone();
            if i.vertex == target.vertex && i.edge == target.edge && i.slot > target.slot {
                i.slot -= 1;
            }
            i
        })
        .collect();
    Ok(rebuild(g.vertices().to_vec(), g.edges().to_vec(), incidences))
}

/// Strong vertex-deletion: the vertex goes together with every edge it
/// meets.
pub fn strong_delete_vertex(
    g: &OrientedHypergraph,
    v: &VertexId,
) -> Result<OrientedHypergraph, TransformError> {
    if !g.has_vertex(v) {
        return Err(TransformError::UnknownId(v.as_str().to_owned()));
    }
    let doomed: std::collections::HashSet<EdgeId> = g
        .incidences_of_vertex(v)
        .map(|i| i.edge.clone())
        .collect();
    let vertices: Vec<VertexId> = g.vertices().iter().filter(|x| *x != v).cloned().collect();
    let edges: Vec<EdgeId> = g
        .edges()
        .iter()
        .filter(|e| !doomed.contains(e))
        .cloned()
        .collect();
    let incidences: Vec<Incidence> = g
        .incidences()
        .iter()
        .filter(|i| &i.vertex != v && !doomed.contains(&i.edge))
        .cloned()
        .collect();
    Ok(rebuild(vertices, edges, incidences))
}

/// Strong edge-deletion, the incidence dual of strong vertex-deletion: the
/// edge goes together with every vertex it meets (and all their incidences).
pub fn strong_delete_edge(
    g: &OrientedHypergraph,
    e: &EdgeId,
) -> Result<OrientedHypergraph, TransformError> {
    if !g.has_edge(e) {
        return Err(TransformError::UnknownId(e.as_str().to_owned()));
    }
    let doomed: std::collections::HashSet<VertexId> = g
        .incidences_of_edge(e)
        .map(|i| i.vertex.clone())
        .collect();
    let vertices: Vec<VertexId> = g
        .vertices()
        .iter()
        .filter(|v| !doomed.contains(v))
        .cloned()
        .collect();
    let edges: Vec<EdgeId> = g.edges().iter().filter(|x| *x != e).cloned().collect();
    let incidences: Vec<Incidence> = g
        .incidences()
        .iter()
        .filter(|i| &i.edge != e && !doomed.contains(&i.vertex))
        .cloned()
        .collect();
    Ok(rebuild(vertices, edges, incidences))
}

/// Switching: `σ'(v,e,k) = θ(v)·σ(v,e,k)·θ(e)` where `θ` is -1 on the listed
/// ids and +1 elsewhere. Ids may name vertices or edges.
pub fn switch(
    g: &OrientedHypergraph,
    negate: impl IntoIterator<Item = impl AsRef<str>>,
) -> Result<OrientedHypergraph, TransformError> {
    let mut neg_v: std::collections::HashSet<VertexId> = Default::default();
    let mut neg_e: std::collections::HashSet<EdgeId> = Default::default();
    for id in negate {
        let id = id.as_ref();
        let vid = VertexId::new(id);
        let eid = EdgeId::new(id);
        if g.has_vertex(&vid) {
            neg_v.insert(vid);
        } else if g.has_edge(&eid) {
            neg_e.insert(eid);
        } else {
            return Err(TransformError::UnknownId(id.to_owned()));
        }
    }
    let incidences: Vec<Incidence> = g
        .incidences()
        .iter()
        .map(|i| {
            let mut i = i.clone();
            let mut s = i.sign;
            if neg_v.contains(&i.vertex) {
                s = s.flip();
            }
            if neg_e.contains(&i.edge) {
                s = s.flip();
            }
            i.sign = s;
            i
        })
        .collect();
    Ok(rebuild(g.vertices().to_vec(), g.edges().to_vec(), incidences))
}

fn smaller_id(a: &str, b: &str) -> bool {
    a < b
}

/// Contracts a 2-edge. A positive 2-edge contracts as a graphic edge; a
/// negative one is first made positive by switching the lexicographically
/// smaller endpoint. The merged vertex takes the smaller endpoint id and its
/// position.
pub fn contract_2edge(
    g: &OrientedHypergraph,
    e: &EdgeId,
) -> Result<OrientedHypergraph, TransformError> {
    if !g.has_edge(e) {
        return Err(TransformError::UnknownId(e.as_str().to_owned()));
    }
    let incs: Vec<&Incidence> = g.incidences_of_edge(e).collect();
    if incs.len() != 2 {
        return Err(TransformError::NotA2Edge(e.as_str().to_owned()));
    }
    if incs[0].vertex == incs[1].vertex {
        return Err(TransformError::LoopEdge(e.as_str().to_owned()));
    }
    let (a, b) = (incs[0].vertex.clone(), incs[1].vertex.clone());
    let adjacency_sign = incs[0].sign.mul(incs[1].sign).flip();
    let keep = if smaller_id(a.as_str(), b.as_str()) { a.clone() } else { b.clone() };
    let drop = if keep == a { b.clone() } else { a.clone() };

    let g = if adjacency_sign == Sign::Minus {
        switch(g, [keep.as_str()])?
    } else {
        g.clone()
    };

    let vertices: Vec<VertexId> = g
        .vertices()
        .iter()
        .filter(|v| **v != drop)
        .cloned()
        .collect();
    let edges: Vec<EdgeId> = g.edges().iter().filter(|x| *x != e).cloned().collect();
    let incidences: Vec<Incidence> = g
        .incidences()
        .iter()
        .filter(|i| &i.edge != e)
        .map(|i| {
            let mut i = i.clone();
            if i.vertex == drop {
                i.vertex = keep.clone();
            }
            i
        })
        .collect();
    let incidences = renumber_pairs_of_vertex(incidences, &keep);
    Ok(rebuild(vertices, edges, incidences))
}

/// Contracts a degree-2 vertex whose incidences lie in two distinct edges,
/// merging the edges. An incompatibly oriented vertex is first fixed by
/// switching the lexicographically smaller incident edge. Equals
/// `dual ∘ contract_2edge ∘ dual`.
pub fn contract_2vertex(
    g: &OrientedHypergraph,
    v: &VertexId,
) -> Result<OrientedHypergraph, TransformError> {
    if !g.has_vertex(v) {
        return Err(TransformError::UnknownId(v.as_str().to_owned()));
    }
    let incs: Vec<&Incidence> = g.incidences_of_vertex(v).collect();
    if incs.len() != 2 {
        return Err(TransformError::NotDegree2(v.as_str().to_owned()));
    }
    if incs[0].edge == incs[1].edge {
        return Err(TransformError::SameEdge(v.as_str().to_owned()));
    }
    let (a, b) = (incs[0].edge.clone(), incs[1].edge.clone());
    let compatible = incs[0].sign.mul(incs[1].sign) == Sign::Minus;
    let keep = if smaller_id(a.as_str(), b.as_str()) { a.clone() } else { b.clone() };
    let drop = if keep == a { b.clone() } else { a.clone() };

    let g = if !compatible {
        switch(g, [keep.as_str()])?
    } else {
        g.clone()
    };

    let vertices: Vec<VertexId> = g.vertices().iter().filter(|x| *x != v).cloned().collect();
    let edges: Vec<EdgeId> = g.edges().iter().filter(|x| **x != drop).cloned().collect();
    let incidences: Vec<Incidence> = g
        .incidences()
        .iter()
        .filter(|i| &i.vertex != v)
        .map(|i| {
            let mut i = i.clone();
            if i.edge == drop {
                i.edge = keep.clone();
            }
            i
        })
        .collect();
    let incidences = renumber_pairs_of_edge(incidences, &keep);
    Ok(rebuild(vertices, edges, incidences))
}

/// Compatibility of a subdivision: the two new incidence signs multiply to
/// -1 when compatible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Compatibility {
    Compatible,
    Incompatible,
}

/// Outcome of an edge subdivision.
#[derive(Debug, Clone)]
pub struct SubdivisionResult {
    pub hypergraph: OrientedHypergraph,
    pub new_vertex: VertexId,
    pub new_edges: (EdgeId, EdgeId),
    pub compatibility: Compatibility,
    /// Compatible, or incompatible with the new vertex on no circle.
    pub balanced: bool,
    mapping: Vec<(IncidenceRef, IncidenceRef)>,
}

impl SubdivisionResult {
    /// Image of an incidence of the subdivided edge in the result; identity
    /// for incidences of other edges.
    pub fn image_of(&self, old: &IncidenceRef) -> Option<IncidenceRef> {
        if let Some((_, new)) = self.mapping.iter().find(|(o, _)| o == old) {
            return Some(new.clone());
        }
        self.hypergraph.has_incidence(old).then(|| old.clone())
    }
}

/// Subdivides an edge: the incidences of `e` are bipartitioned onto two new
/// edges joined by a fresh degree-2 vertex carrying `sign1`, `sign2`. Either
/// part may be empty (a pendant 1-edge appears).
pub fn subdivide_edge(
    g: &OrientedHypergraph,
    e: &EdgeId,
    part1: &[IncidenceRef],
    part2: &[IncidenceRef],
    sign1: Sign,
    sign2: Sign,
) -> Result<SubdivisionResult, TransformError> {
    if !g.has_edge(e) {
        return Err(TransformError::UnknownId(e.as_str().to_owned()));
    }
    let all: Vec<IncidenceRef> = g.incidences_of_edge(e).map(|i| i.to_ref()).collect();
    let bad = || TransformError::BadBipartition(e.as_str().to_owned());
    let p1: std::collections::HashSet<&IncidenceRef> = part1.iter().collect();
    let p2: std::collections::HashSet<&IncidenceRef> = part2.iter().collect();
    if p1.len() != part1.len() || p2.len() != part2.len() {
        return Err(bad());
    }
    if p1.intersection(&p2).next().is_some() {
        return Err(bad());
    }
    if p1.len() + p2.len() != all.len() || !all.iter().all(|i| p1.contains(i) || p2.contains(i)) {
        return Err(bad());
    }

    // Fresh ids: u#n for the vertex, <e>#n.1 / <e>#n.2 for the edges.
    let fresh = |n: usize| {
        (
            VertexId::new(format!("u#{n}")),
            EdgeId::new(format!("{e}#{n}.1")),
            EdgeId::new(format!("{e}#{n}.2")),
        )
    };
    let mut n = 1usize;
    let (new_vertex, e1, e2) = loop {
        let (v, a, b) = fresh(n);
        let v_clash = g.has_vertex(&v) || g.has_edge(&EdgeId::new(v.as_str()));
        let a_clash = g.has_edge(&a) || g.has_vertex(&VertexId::new(a.as_str()));
        let b_clash = g.has_edge(&b) || g.has_vertex(&VertexId::new(b.as_str()));
        if !v_clash && !a_clash && !b_clash {
            break (v, a, b);
        }
        n += 1;
    };

    let vertices: Vec<VertexId> = g
        .vertices()
        .iter()
        .cloned()
        .chain([new_vertex.clone()])
        .collect();
    let mut edges: Vec<EdgeId> = Vec::with_capacity(g.edges().len() + 1);
    for x in g.edges() {
        if x == e {
            edges.push(e1.clone());
            edges.push(e2.clone());
        } else {
            edges.push(x.clone());
        }
    }

    // Move the incidences of e onto e1/e2 per part, renumbering slots per
    // pair in list order; record the mapping.
    let mut mapping = Vec::new();
    let mut slot_counter: HashMap<(VertexId, EdgeId), u32> = HashMap::new();
    let mut incidences: Vec<Incidence> = Vec::with_capacity(g.incidences().len() + 2);
    for i in g.incidences() {
        if &i.edge != e {
            incidences.push(i.clone());
            continue;
        }
        let r = i.to_ref();
        let target = if p1.contains(&r) { e1.clone() } else { e2.clone() };
        let key = (i.vertex.clone(), target.clone());
        let slot = slot_counter.entry(key).or_insert(0);
        *slot += 1;
        let moved = Incidence::new(i.vertex.as_str(), target.as_str(), *slot, i.sign);
        mapping.push((r, moved.to_ref()));
        incidences.push(moved);
    }
    incidences.push(Incidence::new(new_vertex.as_str(), e1.as_str(), 1, sign1));
    incidences.push(Incidence::new(new_vertex.as_str(), e2.as_str(), 1, sign2));

    let hypergraph = rebuild(vertices, edges, incidences);
    let compatibility = if sign1.mul(sign2) == Sign::Minus {
        Compatibility::Compatible
    } else {
        Compatibility::Incompatible
    };

    // The new vertex lies on a circle exactly when its two edges stay
    // connected after removing it from the incidence graph.
    let balanced = match compatibility {
        Compatibility::Compatible => true,
        Compatibility::Incompatible => !on_a_circle(&hypergraph, &new_vertex, &e1, &e2),
    };

    Ok(SubdivisionResult {
        hypergraph,
        new_vertex,
        new_edges: (e1, e2),
        compatibility,
        balanced,
        mapping,
    })
}

/// True when the degree-2 vertex `v` (incident to exactly `e1` and `e2`)
/// lies on a circle: its edges stay connected with `v` removed.
fn on_a_circle(g: &OrientedHypergraph, v: &VertexId, e1: &EdgeId, e2: &EdgeId) -> bool {
    let ig = IncidenceGraph::from_hypergraph(g);
    let v_node = g.vertex_position(v).expect("new vertex present");
    let from = g.vertices().len() + g.edge_position(e1).expect("present");
    let to = g.vertices().len() + g.edge_position(e2).expect("present");
    let mut visited = vec![false; ig.node_count()];
    visited[v_node] = true; // blocked
    visited[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        if u == to {
            return true;
        }
        for &(w, _) in ig.neighbors(u) {
            if !visited[w] {
                visited[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Renumbers every pair's slots in list-appearance order. Used to compare
/// hypergraphs up to slot renumbering.
pub fn canonicalize_slots(g: &OrientedHypergraph) -> OrientedHypergraph {
    let mut slot_counter: HashMap<(VertexId, EdgeId), u32> = HashMap::new();
    let incidences: Vec<Incidence> = g
        .incidences()
        .iter()
        .map(|i| {
            let key = (i.vertex.clone(), i.edge.clone());
            let slot = slot_counter.entry(key).or_insert(0);
            *slot += 1;
            Incidence::new(i.vertex.as_str(), i.edge.as_str(), *slot, i.sign)
        })
        .collect();
    rebuild(g.vertices().to_vec(), g.edges().to_vec(), incidences)
}

fn renumber_pairs_of_vertex(incidences: Vec<Incidence>, v: &VertexId) -> Vec<Incidence> {
    let mut slot_counter: HashMap<EdgeId, u32> = HashMap::new();
    incidences
        .into_iter()
        .map(|mut i| {
            if &i.vertex == v {
                let slot = slot_counter.entry(i.edge.clone()).or_insert(0);
                *slot += 1;
                i.slot = *slot;
            }
            i
        })
        .collect()
}

fn renumber_pairs_of_edge(incidences: Vec<Incidence>, e: &EdgeId) -> Vec<Incidence> {
    let mut slot_counter: HashMap<VertexId, u32> = HashMap::new();
    incidences
        .into_iter()
        .map(|mut i| {
            if &i.edge == e {
                let slot = slot_counter.entry(i.vertex.clone()).or_insert(0);
                *slot += 1;
                i.slot = *slot;
            }
            i
        })
        .collect()
}

fn rebuild(
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    incidences: Vec<Incidence>,
) -> OrientedHypergraph {
    OrientedHypergraph::build(vertices, edges, incidences, false)
        .expect("transform produced an invalid hypergraph")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> OrientedHypergraph {
        OrientedHypergraph::from_edge_lists(
            &["u", "v", "w"],
            &[
                ("e1", &[("u", Sign::Plus), ("v", Sign::Minus)]),
                ("e2", &[("v", Sign::Plus), ("w", Sign::Minus)]),
                ("e3", &[("w", Sign::Plus), ("u", Sign::Minus)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn weak_edge_delete_leaves_a_path() {
        let g = triangle();
        let h = weak_delete_edge(&g, &"e1".into()).unwrap();
        assert_eq!(h.vertices().len(), 3);
        assert_eq!(h.edges().len(), 2);
        assert_eq!(h.incidences().len(), 4);
        assert_eq!(h.component_count(), 1);
    }

    #[test]
    fn weak_vertex_delete_makes_one_edges() {
        let g = triangle();
        let h = weak_delete_vertex(&g, &"u".into()).unwrap();
        assert_eq!(h.edge_size(&"e1".into()).unwrap(), 1);
        assert_eq!(h.edge_size(&"e3".into()).unwrap(), 1);
        assert_eq!(h.edge_size(&"e2".into()).unwrap(), 2);
    }

    #[test]
    fn breaking_renumbers_trailing_slots() {
        let g = OrientedHypergraph::build(
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
        let h = break_incidence(&g, &IncidenceRef::new("v", "e", 2)).unwrap();
        let slots: Vec<u32> = h.incidences().iter().map(|i| i.slot).collect();
        assert_eq!(slots, vec![1, 2]);
    }

    #[test]
    fn strong_vertex_delete_removes_incident_edges() {
        let g = triangle();
        let h = strong_delete_vertex(&g, &"u".into()).unwrap();
        assert_eq!(h.vertices().to_vec(), vec![VertexId::new("v"), VertexId::new("w")]);
        assert_eq!(h.edges().to_vec(), vec![EdgeId::new("e2")]);
        assert_eq!(h.incidences().len(), 2);
    }

    #[test]
    fn strong_delete_on_isolated_vertex_is_weak_delete() {
        let g = OrientedHypergraph::build(["x", "y"], Vec::<EdgeId>::new(), [], true).unwrap();
        assert_eq!(
            strong_delete_vertex(&g, &"x".into()).unwrap(),
            weak_delete_vertex(&g, &"x".into()).unwrap()
        );
    }

    #[test]
    fn strong_edge_delete_is_dual_of_strong_vertex_delete() {
        let g = triangle();
        for e in ["e1", "e2", "e3"] {
            let direct = strong_delete_edge(&g, &e.into()).unwrap();
            let dual_route = strong_delete_vertex(&g.incidence_dual(), &e.into())
                .unwrap()
                .incidence_dual();
            assert_eq!(direct, dual_route);
        }
    }

    #[test]
    fn identity_switch_is_identity() {
        let g = triangle();
        assert_eq!(switch(&g, Vec::<&str>::new()).unwrap(), g);
        // Switching twice undoes itself.
        let once = switch(&g, ["u", "e2"]).unwrap();
        assert_eq!(switch(&once, ["u", "e2"]).unwrap(), g);
    }

    #[test]
    fn edge_switch_preserves_adjacency_signs() {
        let g = triangle();
        let h = switch(&g, ["e1"]).unwrap();
        for (e, (v, w)) in [("e1", ("u", "v")), ("e2", ("v", "w")), ("e3", ("w", "u"))] {
            let adj = crate::hypergraph::Adjacency {
                v: v.into(),
                k1: 1,
                w: w.into(),
                k2: 1,
                edge: e.into(),
            };
            assert_eq!(g.adjacency_sign(&adj), h.adjacency_sign(&adj));
        }
    }

    #[test]
    fn positive_2edge_contracts_to_digon() {
        // e1 has adjacency sign -(+1)(-1) = +1: positive, contracts directly.
        let g = triangle();
        let h = contract_2edge(&g, &"e1".into()).unwrap();
        assert_eq!(h.vertices().len(), 2);
        assert_eq!(h.edges().len(), 2);
        // u and v merged into u; e2, e3 now join u and w twice: a length-2
        // circle on two vertices.
        assert_eq!(h.vertices()[0], VertexId::new("u"));
        assert_eq!(h.degree(&"u".into()).unwrap(), 2);
        assert_eq!(h.degree(&"w".into()).unwrap(), 2);
    }

    #[test]
    fn negative_2edge_switches_before_contracting() {
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b", "c"],
            &[
                ("e1", &[("a", Sign::Plus), ("b", Sign::Plus)]), // negative edge
                ("e2", &[("b", Sign::Plus), ("c", Sign::Minus)]),
                ("e3", &[("c", Sign::Plus), ("a", Sign::Minus)]),
            ],
        )
        .unwrap();
        let h = contract_2edge(&g, &"e1".into()).unwrap();
        assert_eq!(h.vertices().len(), 2);
        // a was switched: its e3 incidence flipped sign.
        let s = h
            .sign_of(&IncidenceRef::new("a", "e3", 1))
            .expect("incidence kept");
        assert_eq!(s, Sign::Plus);
    }

    #[test]
    fn loop_2edge_contraction_is_an_error() {
        let g = OrientedHypergraph::build(
            ["v"],
            ["e"],
            [
                Incidence::new("v", "e", 1, Sign::Plus),
                Incidence::new("v", "e", 2, Sign::Plus),
            ],
            true,
        )
        .unwrap();
        assert!(matches!(
            contract_2edge(&g, &"e".into()),
            Err(TransformError::LoopEdge(_))
        ));
    }

    #[test]
    fn contract_isthmus_preserves_component_count() {
        // Path u - e - v - f - w: contracting e keeps one component.
        let g = OrientedHypergraph::from_edge_lists(
            &["u", "v", "w"],
            &[
                ("e", &[("u", Sign::Plus), ("v", Sign::Minus)]),
                ("f", &[("v", Sign::Plus), ("w", Sign::Minus)]),
            ],
        )
        .unwrap();
        let h = contract_2edge(&g, &"e".into()).unwrap();
        assert_eq!(h.component_count(), g.component_count());
    }

    #[test]
    fn contract_2vertex_merges_edges_and_matches_dual_route() {
        let g = triangle();
        for v in ["u", "v", "w"] {
            let direct = contract_2vertex(&g, &v.into()).unwrap();
            let dual_route = contract_2edge(&g.incidence_dual(), &v.into())
                .unwrap()
                .incidence_dual();
            assert_eq!(direct, dual_route);
        }
    }

    #[test]
    fn contract_2vertex_rejects_wrong_degrees() {
        let g = OrientedHypergraph::build(
            ["v", "w"],
            ["e"],
            [
                Incidence::new("v", "e", 1, Sign::Plus),
                Incidence::new("v", "e", 2, Sign::Plus),
            ],
            true,
        )
        .unwrap();
        assert!(matches!(
            contract_2vertex(&g, &"v".into()),
            Err(TransformError::SameEdge(_))
        ));
        assert!(matches!(
            contract_2vertex(&g, &"w".into()),
            Err(TransformError::NotDegree2(_))
        ));
    }

    #[test]
    fn artery_vertex_contraction_yields_k_edge() {
        // A 2-artery (graphic path) contracts into a 2-edge.
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "m", "b"],
            &[
                ("e", &[("a", Sign::Plus), ("m", Sign::Minus)]),
                ("f", &[("m", Sign::Plus), ("b", Sign::Minus)]),
            ],
        )
        .unwrap();
        let h = contract_2vertex(&g, &"m".into()).unwrap();
        assert_eq!(h.edges().len(), 1);
        assert_eq!(h.edge_size(&"e".into()).unwrap(), 2);
        assert_eq!(h.vertices().len(), 2);
    }

    #[test]
    fn subdivision_splits_parts_and_classifies() {
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b", "c"],
            &[("e", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Minus)])],
        )
        .unwrap();
        let part1 = vec![IncidenceRef::new("a", "e", 1), IncidenceRef::new("b", "e", 1)];
        let part2 = vec![IncidenceRef::new("c", "e", 1)];
        let r = subdivide_edge(&g, &"e".into(), &part1, &part2, Sign::Plus, Sign::Minus).unwrap();
        assert_eq!(r.compatibility, Compatibility::Compatible);
        assert!(r.balanced);
        let h = &r.hypergraph;
        assert_eq!(h.vertices().len(), 4);
        assert_eq!(h.edges().len(), 2);
        assert_eq!(h.edge_size(&r.new_edges.0).unwrap(), 3);
        assert_eq!(h.edge_size(&r.new_edges.1).unwrap(), 2);
        assert_eq!(h.degree(&r.new_vertex).unwrap(), 2);
    }

    #[test]
    fn empty_part_creates_pendant_one_edge() {
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b"],
            &[("e", &[("a", Sign::Plus), ("b", Sign::Minus)])],
        )
        .unwrap();
        let all: Vec<IncidenceRef> =
            g.incidences().iter().map(|i| i.to_ref()).collect();
        let r = subdivide_edge(&g, &"e".into(), &all, &[], Sign::Plus, Sign::Plus).unwrap();
        assert_eq!(r.compatibility, Compatibility::Incompatible);
        // Pendant new vertex lies on no circle: still balanced.
        assert!(r.balanced);
        assert_eq!(r.hypergraph.edge_size(&r.new_edges.1).unwrap(), 1);
    }

    #[test]
    fn incompatible_subdivision_on_a_circle_is_unbalanced() {
        let g = triangle();
        let part1 = vec![IncidenceRef::new("u", "e1", 1)];
        let part2 = vec![IncidenceRef::new("v", "e1", 1)];
        let r = subdivide_edge(&g, &"e1".into(), &part1, &part2, Sign::Plus, Sign::Plus).unwrap();
        assert_eq!(r.compatibility, Compatibility::Incompatible);
        assert!(!r.balanced);
        let r2 = subdivide_edge(&g, &"e1".into(), &part1, &part2, Sign::Plus, Sign::Minus).unwrap();
        assert!(r2.balanced);
    }

    #[test]
    fn bad_bipartitions_are_rejected() {
        let g = triangle();
        let i_u = IncidenceRef::new("u", "e1", 1);
        let i_v = IncidenceRef::new("v", "e1", 1);
        // Overlap.
        assert!(subdivide_edge(
            &g,
            &"e1".into(),
            &[i_u.clone(), i_v.clone()],
            std::slice::from_ref(&i_v),
            Sign::Plus,
            Sign::Minus
        )
        .is_err());
        // Missing incidence.
        assert!(subdivide_edge(&g, &"e1".into(), &[i_u], &[], Sign::Plus, Sign::Minus).is_err());
    }

    #[test]
    fn contracting_the_new_vertex_inverts_a_compatible_subdivision() {
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b", "c"],
            &[
                ("e", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Minus)]),
                ("f", &[("a", Sign::Minus), ("c", Sign::Plus)]),
            ],
        )
        .unwrap();
        let part1 = vec![IncidenceRef::new("a", "e", 1)];
        let part2 = vec![IncidenceRef::new("b", "e", 1), IncidenceRef::new("c", "e", 1)];
        let r = subdivide_edge(&g, &"e".into(), &part1, &part2, Sign::Minus, Sign::Plus).unwrap();
        assert_eq!(r.compatibility, Compatibility::Compatible);
        let back = contract_2vertex(&r.hypergraph, &r.new_vertex).unwrap();
        // The merged edge keeps the smaller new id; rename it back to e and
        // compare up to slot renumbering.
        let renamed = OrientedHypergraph::build(
            back.vertices().to_vec(),
            back.edges()
                .iter()
                .map(|x| {
                    if x == &r.new_edges.0 {
                        EdgeId::new("e")
                    } else {
                        x.clone()
                    }
                })
                .collect::<Vec<_>>(),
            back.incidences()
                .iter()
                .map(|i| {
                    let mut i = i.clone();
                    if i.edge == r.new_edges.0 {
                        i.edge = EdgeId::new("e");
                    }
                    i
                })
                .collect::<Vec<_>>(),
            false,
        )
        .unwrap();
        assert_eq!(canonicalize_slots(&renamed), canonicalize_slots(&g));
    }
}
