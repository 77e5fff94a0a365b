//! Circle enumeration, signs and purity, theta detection, balance and
//! balanceability, the cyclomatic number, essential circles, and recognition
//! of the structural species (flowers, pseudo-flowers, arteries).
//!
//! Enumerations are exponential in the worst case, so every enumeration
//! carries hard limits and fails with a structured error instead of
//! truncating silently.

use std::collections::HashSet;

use crate::error::AnalysisError;
use crate::hypergraph::{
    EdgeId, Element, Incidence, IncidenceRef, OrientedHypergraph, Sign, VertexId,
};
use crate::incidence_graph::{IncidenceGraph, NodeLinkPath};
use crate::transforms;
use crate::walk::{Walk, WalkKind};

/// Hard limits for the exponential enumerations.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Maximum circle length `k` (a circle uses `2k` incidences).
    pub max_circle_len: usize,
    /// Maximum number of circles (and of thetas) to enumerate.
    pub max_circles: usize,
    /// Flower minimality enumerates proper edge subsets up to this edge count.
    pub max_flower_edges: usize,
    /// Brute-force balanceability flips subsets of up to this many incidences.
    pub max_flip_incidences: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_circle_len: 16,
            max_circles: 10_000,
            max_flower_edges: 16,
            max_flip_incidences: 20,
        }
    }
}

fn limit_err(what: &'static str, limit: usize) -> AnalysisError {
    AnalysisError::LimitExceeded { what, limit }
}

/// Enumerates every circle of the hypergraph in canonical order (by length,
/// then by the normalized element sequence).
pub fn enumerate_circles(
    g: &OrientedHypergraph,
    limits: &Limits,
) -> Result<Vec<Walk>, AnalysisError> {
    let ig = IncidenceGraph::from_hypergraph(g);
    let (cycles, complete) = ig
        .simple_cycles(2 * limits.max_circle_len, limits.max_circles)
        .ok_or_else(|| limit_err("circle count", limits.max_circles))?;
    if !complete {
        return Err(limit_err("circle length", limits.max_circle_len));
    }
    type Keyed = (Walk, (usize, Vec<(usize, u32)>));
    let mut walks: Vec<Keyed> = cycles
        .into_iter()
        .map(|(nodes, links)| {
            let elements: Vec<Element> =
                nodes.iter().map(|&n| ig.element_of(g, n)).collect();
            let incidences: Vec<IncidenceRef> = links
                .iter()
                .map(|&l| g.incidences()[ig.links[l].incidence].to_ref())
                .collect();
            let w = Walk::circle_unchecked(elements, incidences).normalized(g);
            let key = w.canonical_key(g);
            (w, key)
        })
        .collect();
    walks.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(walks.into_iter().map(|(w, _)| w).collect())
}

/// Sign and purity of a circle of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleClass {
    pub sign: Sign,
    pub pure: bool,
}

/// A circle is degenerate when some incidence outside it joins a vertex and
/// an edge of the circle (a chord of the incidence graph).
pub fn classify_circle(g: &OrientedHypergraph, c: &Walk) -> Result<CircleClass, AnalysisError> {
    if c.kind() != WalkKind::Circle {
        return Err(AnalysisError::NotACircle("walk is a path".into()));
    }
    c.validate(g)
        .map_err(|e| AnalysisError::NotACircle(e.to_string()))?;
    let vertices: HashSet<&VertexId> = c.vertices().collect();
    let edges: HashSet<&EdgeId> = c.edges().collect();
    let on_circle: HashSet<IncidenceRef> = c.incidences().iter().cloned().collect();
    let pure = !g.incidences().iter().any(|i| {
        vertices.contains(&i.vertex) && edges.contains(&i.edge) && !on_circle.contains(&i.to_ref())
    });
    Ok(CircleClass {
        sign: c.sign_unchecked(g),
        pure,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaKind {
    VertexTheta,
    EdgeTheta,
    CrossTheta,
}

/// Three internally disjoint paths between two common end-points.
#[derive(Debug, Clone)]
pub struct Theta {
    pub endpoints: (Element, Element),
    pub paths: [Walk; 3],
    pub kind: ThetaKind,
}

impl Theta {
    /// The three circles formed by the pairwise unions of the paths (plus
    /// the shared end-points).
    pub fn circles(&self, g: &OrientedHypergraph) -> Result<[Walk; 3], AnalysisError> {
        Ok([
            circle_from_two_paths(g, &self.paths[0], &self.paths[1])?,
            circle_from_two_paths(g, &self.paths[0], &self.paths[2])?,
            circle_from_two_paths(g, &self.paths[1], &self.paths[2])?,
        ])
    }
}

/// Joins two internally disjoint paths with common end-points into a circle.
pub fn circle_from_two_paths(
    g: &OrientedHypergraph,
    p: &Walk,
    q: &Walk,
) -> Result<Walk, AnalysisError> {
    let pe = p.elements();
    let qe = q.elements();
    if pe.first() != qe.first() || pe.last() != qe.last() {
        return Err(AnalysisError::InvalidWalk(
            "paths do not share end-points".into(),
        ));
    }
    // All of p's elements, then q's internal elements in reverse.
    let mut elements: Vec<Element> = pe.to_vec();
    let mut incidences: Vec<IncidenceRef> = p.incidences().to_vec();
    for j in (1..qe.len() - 1).rev() {
        elements.push(qe[j].clone());
    }
    for j in (0..q.incidences().len()).rev() {
        incidences.push(q.incidences()[j].clone());
    }
    // Rotate so a vertex leads.
    if !elements[0].is_vertex() {
        elements.rotate_left(1);
        incidences.rotate_left(1);
    }
    Walk::circle(elements, incidences, g)
}

fn walk_from_graph_path(
    g: &OrientedHypergraph,
    ig: &IncidenceGraph,
    nodes: &[usize],
    links: &[usize],
) -> Walk {
    let elements: Vec<Element> = nodes.iter().map(|&n| ig.element_of(g, n)).collect();
    let incidences: Vec<IncidenceRef> = links
        .iter()
        .map(|&l| g.incidences()[ig.links[l].incidence].to_ref())
        .collect();
    Walk::path(elements, incidences, g).expect("graph path maps to a valid walk")
}

/// Exact cross-theta search: three internally disjoint paths from a vertex
/// to an edge, found by unit-capacity flow. Never truncates.
pub fn has_cross_theta(g: &OrientedHypergraph) -> Option<Theta> {
    let ig = IncidenceGraph::from_hypergraph(g);
    let nv = g.vertices().len();
    for v_node in 0..nv {
        for e_node in nv..ig.node_count() {
            let paths = ig.disjoint_paths(v_node, e_node, 3);
            if paths.len() >= 3 {
                let walks: Vec<Walk> = paths
                    .iter()
                    .take(3)
                    .map(|(ns, ls)| walk_from_graph_path(g, &ig, ns, ls))
                    .collect();
                return Some(Theta {
                    endpoints: (ig.element_of(g, v_node), ig.element_of(g, e_node)),
                    paths: [walks[0].clone(), walks[1].clone(), walks[2].clone()],
                    kind: ThetaKind::CrossTheta,
                });
            }
        }
    }
    None
}

/// Enumerates theta subgraphs between all end-point pairs, within limits.
pub fn find_thetas(g: &OrientedHypergraph, limits: &Limits) -> Result<Vec<Theta>, AnalysisError> {
    let ig = IncidenceGraph::from_hypergraph(g);
    let n = ig.node_count();
    let nv = g.vertices().len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let paths = ig
                .simple_paths(a, b, 2 * limits.max_circle_len, limits.max_circles)
                .ok_or_else(|| limit_err("theta paths", limits.max_circles))?;
            let m = paths.len();
            for i in 0..m {
                for j in (i + 1)..m {
                    if !internally_disjoint(&paths[i], &paths[j]) {
                        continue;
                    }
                    for k in (j + 1)..m {
                        if internally_disjoint(&paths[i], &paths[k])
                            && internally_disjoint(&paths[j], &paths[k])
                        {
                            if out.len() >= limits.max_circles {
                                return Err(limit_err("theta count", limits.max_circles));
                            }
                            let kind = match (a < nv, b < nv) {
                                (true, true) => ThetaKind::VertexTheta,
                                (false, false) => ThetaKind::EdgeTheta,
                                _ => ThetaKind::CrossTheta,
                            };
                            out.push(Theta {
                                endpoints: (ig.element_of(g, a), ig.element_of(g, b)),
                                paths: [
                                    walk_from_graph_path(g, &ig, &paths[i].0, &paths[i].1),
                                    walk_from_graph_path(g, &ig, &paths[j].0, &paths[j].1),
                                    walk_from_graph_path(g, &ig, &paths[k].0, &paths[k].1),
                                ],
                                kind,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn internally_disjoint(p: &NodeLinkPath, q: &NodeLinkPath) -> bool {
    let pi: HashSet<usize> = p.0[1..p.0.len() - 1].iter().copied().collect();
    if q.0[1..q.0.len() - 1].iter().any(|n| pi.contains(n)) {
        return false;
    }
    let pl: HashSet<usize> = p.1.iter().copied().collect();
    !q.1.iter().any(|l| pl.contains(l))
}

/// Balance verdict with a negative-circle witness on failure.
#[derive(Debug, Clone)]
pub struct BalanceReport {
    pub balanced: bool,
    pub negative_circle: Option<Walk>,
}

/// Balanced: every circle is positive.
pub fn is_balanced(g: &OrientedHypergraph, limits: &Limits) -> Result<BalanceReport, AnalysisError> {
    let circles = enumerate_circles(g, limits)?;
    let negative = circles
        .into_iter()
        .find(|c| c.sign_unchecked(g) == Sign::Minus);
    Ok(BalanceReport {
        balanced: negative.is_none(),
        negative_circle: negative,
    })
}

/// Balanceability verdict with a cross-theta witness on failure.
#[derive(Debug, Clone)]
pub struct BalanceabilityReport {
    pub balanceable: bool,
    pub cross_theta: Option<Theta>,
}

/// Balanceable exactly when no cross-theta exists. The structural check is
/// exact; `brute_force_balanceable` is the independent oracle.
pub fn is_balanceable(g: &OrientedHypergraph) -> BalanceabilityReport {
    let witness = has_cross_theta(g);
    BalanceabilityReport {
        balanceable: witness.is_none(),
        cross_theta: witness,
    }
}

/// Searches all `2^|I|` incidence flip sets for one that balances the
/// hypergraph; returns the first flip set found, or `None` when every
/// orientation stays unbalanced.
pub fn brute_force_balanceable(
    g: &OrientedHypergraph,
    limits: &Limits,
) -> Result<Option<Vec<IncidenceRef>>, AnalysisError> {
    let m = g.incidences().len();
    if m > limits.max_flip_incidences {
        return Err(limit_err("flip subset incidences", limits.max_flip_incidences));
    }
    let circles = enumerate_circles(g, limits)?;
    if circles.is_empty() {
        return Ok(Some(Vec::new()));
    }
    // Bitmask per circle over incidence indices plus its length parity.
    let index_of = |r: &IncidenceRef| -> usize {
        g.incidences()
            .iter()
            .position(|i| &i.to_ref() == r)
            .expect("circle incidence exists")
    };
    let circle_masks: Vec<(u32, u32)> = circles
        .iter()
        .map(|c| {
            let mut mask = 0u32;
            for r in c.incidences() {
                mask |= 1 << index_of(r);
            }
            (mask, (c.circle_length() % 2) as u32)
        })
        .collect();
    let mut base_neg = 0u32;
    for (i, inc) in g.incidences().iter().enumerate() {
        if inc.sign == Sign::Minus {
            base_neg |= 1 << i;
        }
    }
    for flip in 0u32..(1u32 << m) {
        let signs = base_neg ^ flip;
        let balanced = circle_masks
            .iter()
            .all(|&(mask, parity)| ((mask & signs).count_ones() + parity).is_multiple_of(2));
        if balanced {
            let set = (0..m)
                .filter(|i| flip & (1 << i) != 0)
                .map(|i| g.incidences()[i].to_ref())
                .collect();
            return Ok(Some(set));
        }
    }
    Ok(None)
}

/// Cyclomatic number `φ = |I| - (|V| + |E|) + c`. The two incidence-dual
/// forms (edge sizes, vertex degrees) are asserted to agree.
pub fn cyclomatic_number(g: &OrientedHypergraph) -> usize {
    let c = g.component_count() as isize;
    let i = g.incidences().len() as isize;
    let v = g.vertices().len() as isize;
    let e = g.edges().len() as isize;
    let phi = i - (v + e) + c;
    let by_sizes: isize = g
        .edges()
        .iter()
        .map(|x| g.edge_size(x).expect("own edge") as isize)
        .sum::<isize>()
        - (v + e)
        + c;
    let by_degrees: isize = g
        .vertices()
        .iter()
        .map(|x| g.degree(x).expect("own vertex") as isize)
        .sum::<isize>()
        - (v + e)
        + c;
    assert_eq!(phi, by_sizes);
    assert_eq!(phi, by_degrees);
    assert!(phi >= 0, "cyclomatic number is never negative");
    phi as usize
}

/// Essential circles with the non-forest incidence that closes each; the
/// collection has size `φ` and breaking every closer leaves an acyclic
/// hypergraph.
pub fn essential_circles_with_closers(g: &OrientedHypergraph) -> Vec<(Walk, IncidenceRef)> {
    let ig = IncidenceGraph::from_hypergraph(g);
    let forest = ig.spanning_forest();
    let mut out = Vec::new();
    for (l, link) in ig.links.iter().enumerate() {
        if forest[l] {
            continue;
        }
        // The forest path's nodes are exactly the circle's elements; the
        // non-forest link closes it.
        let (nodes, mut links) = ig.forest_path(&forest, link.vertex, link.edge);
        links.push(l);
        let elements: Vec<Element> = nodes.iter().map(|&n| ig.element_of(g, n)).collect();
        let incidences: Vec<IncidenceRef> = links
            .iter()
            .map(|&x| g.incidences()[ig.links[x].incidence].to_ref())
            .collect();
        let closer = g.incidences()[link.incidence].to_ref();
        let w = Walk::circle_unchecked(elements, incidences).normalized(g);
        debug_assert!(w.validate(g).is_ok());
        out.push((w, closer));
    }
    out
}

/// A minimal collection of circles whose breaking leaves the hypergraph
/// acyclic; always exactly `φ` of them.
pub fn essential_circles(g: &OrientedHypergraph) -> Vec<Walk> {
    essential_circles_with_closers(g)
        .into_iter()
        .map(|(w, _)| w)
        .collect()
}

/// Category listing of the structural species of a hypergraph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructureReport {
    pub isolated_vertices: Vec<VertexId>,
    pub monovalent_vertices: Vec<VertexId>,
    pub leaves: Vec<VertexId>,
    pub thorns: Vec<VertexId>,
    pub twigs: Vec<EdgeId>,
    pub briars: Vec<EdgeId>,
    pub isthmi: Vec<EdgeId>,
    pub cut_vertices: Vec<VertexId>,
    pub shoals: Vec<IncidenceRef>,
}

/// Computes every category by its definition: removal-based categories by
/// component recounting, leaf/thorn by circle membership of the incident
/// edge (via the block decomposition, which is exact).
pub fn structural_inventory(g: &OrientedHypergraph) -> StructureReport {
    let ig = IncidenceGraph::from_hypergraph(g);
    let blocks = ig.blocks();
    let nv = g.vertices().len();
    // A node lies on a circle exactly when one of its links lies in a block
    // with two or more links.
    let mut node_on_circle = vec![false; ig.node_count()];
    for (l, link) in ig.links.iter().enumerate() {
        if blocks.links_per_block[blocks.block_of_link[l]] >= 2 {
            node_on_circle[link.vertex] = true;
            node_on_circle[link.edge] = true;
        }
    }
    let edge_on_circle =
        |e: &EdgeId| node_on_circle[nv + g.edge_position(e).expect("own edge")];

    let mut report = StructureReport::default();
    let base_components = g.component_count();

    for v in g.vertices() {
        match g.degree(v).expect("own vertex") {
            0 => report.isolated_vertices.push(v.clone()),
            1 => {
                report.monovalent_vertices.push(v.clone());
                let e = g
                    .incidences_of_vertex(v)
                    .next()
                    .expect("degree 1")
                    .edge
                    .clone();
                if edge_on_circle(&e) {
                    report.thorns.push(v.clone());
                } else {
                    report.leaves.push(v.clone());
                }
            }
            _ => {}
        }
        let fewer = transforms::weak_delete_vertex(g, v).expect("own vertex");
        if fewer.component_count() > base_components {
            report.cut_vertices.push(v.clone());
        }
    }
    let leaves: HashSet<&VertexId> = report.leaves.iter().collect();
    let thorns: HashSet<&VertexId> = report.thorns.iter().collect();
    for e in g.edges() {
        let members: Vec<&VertexId> = g.incidences_of_edge(e).map(|i| &i.vertex).collect();
        if members.iter().any(|v| leaves.contains(*v)) {
            report.twigs.push(e.clone());
        }
        if members.iter().any(|v| thorns.contains(*v)) {
            report.briars.push(e.clone());
        }
        let fewer = transforms::weak_delete_edge(g, e).expect("own edge");
        if fewer.component_count() > base_components {
            report.isthmi.push(e.clone());
        }
    }
    for inc in g.incidences() {
        let fewer = transforms::break_incidence(g, &inc.to_ref()).expect("own incidence");
        if fewer.component_count() > base_components {
            report.shoals.push(inc.to_ref());
        }
    }
    report
}

/// Inseparable: every pair of distinct incidences lies on a common circle.
/// Decided from the definition over the enumerated circles.
pub fn is_inseparable(g: &OrientedHypergraph, limits: &Limits) -> Result<bool, AnalysisError> {
    let m = g.incidences().len();
    if m <= 1 {
        return Ok(true);
    }
    let circles = enumerate_circles(g, limits)?;
    let sets: Vec<HashSet<IncidenceRef>> = circles
        .iter()
        .map(|c| c.incidences().iter().cloned().collect())
        .collect();
    for a in 0..m {
        for b in (a + 1)..m {
            let ia = g.incidences()[a].to_ref();
            let ib = g.incidences()[b].to_ref();
            if !sets.iter().any(|s| s.contains(&ia) && s.contains(&ib)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Block-decomposition fast path for inseparability: at most one link, or
/// all links in a single cyclic block. Cross-asserted against the
/// definitional check in tests.
pub fn is_inseparable_blocks(g: &OrientedHypergraph) -> bool {
    let ig = IncidenceGraph::from_hypergraph(g);
    if ig.links.len() <= 1 {
        return true;
    }
    let blocks = ig.blocks();
    blocks.block_count == 1 && blocks.links_per_block[0] == ig.links.len()
}

/// Circle-covered: inseparable, connected, and containing a circle — or a
/// single 0-edge. Connectivity is required; the defining texts leave the
/// disconnected case unstated.
pub fn is_circle_covered(g: &OrientedHypergraph, limits: &Limits) -> Result<bool, AnalysisError> {
    if g.vertices().is_empty() && g.edges().len() == 1 && g.incidences().is_empty() {
        return Ok(true);
    }
    if g.component_count() != 1 {
        return Ok(false);
    }
    if cyclomatic_number(g) == 0 {
        return Ok(false);
    }
    is_inseparable(g, limits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlowerVerdict {
    Flower,
    PseudoFlower,
    Neither,
}

/// Flower / pseudo-flower recognition.
#[derive(Debug, Clone)]
pub struct FlowerAnalysis {
    pub verdict: FlowerVerdict,
    pub thorns: Vec<VertexId>,
    /// Present for pseudo-flowers: the hypergraph left by deleting the
    /// thorns.
    pub flower_part: Option<OrientedHypergraph>,
}

/// A flower is circle-covered and minimal in the edge-induced ordering; a
/// pseudo-flower has thorns whose deletion leaves a flower. A single 1-edge
/// counts as a pseudo-flower over a 0-edge, the half-edge of signed graphs.
pub fn flower_analysis(
    g: &OrientedHypergraph,
    limits: &Limits,
) -> Result<FlowerAnalysis, AnalysisError> {
    if is_flower(g, limits)? {
        return Ok(FlowerAnalysis {
            verdict: FlowerVerdict::Flower,
            thorns: Vec::new(),
            flower_part: None,
        });
    }
    // The half-edge case: a single 1-edge with its vertex.
    let half_edge = g.vertices().len() == 1
        && g.edges().len() == 1
        && g.incidences().len() == 1;
    let thorns = if half_edge {
        vec![g.vertices()[0].clone()]
    } else {
        structural_inventory(g).thorns
    };
    if !thorns.is_empty() {
        let mut part = g.clone();
        for t in &thorns {
            part = transforms::weak_delete_vertex(&part, t).expect("thorn exists");
        }
        if is_flower(&part, limits)? {
            return Ok(FlowerAnalysis {
                verdict: FlowerVerdict::PseudoFlower,
                thorns,
                flower_part: Some(part),
            });
        }
    }
    Ok(FlowerAnalysis {
        verdict: FlowerVerdict::Neither,
        thorns: Vec::new(),
        flower_part: None,
    })
}

/// Circle-covered and no proper nonempty edge subset is circle-covered
/// under edge-induction.
pub fn is_flower(g: &OrientedHypergraph, limits: &Limits) -> Result<bool, AnalysisError> {
    if !is_circle_covered(g, limits)? {
        return Ok(false);
    }
    let ne = g.edges().len();
    if ne > limits.max_flower_edges {
        return Err(limit_err("flower edge subsets", limits.max_flower_edges));
    }
    // Proper nonempty subsets of the edge set.
    for mask in 1..((1usize << ne) - 1).max(1) {
        if ne == 1 {
            break;
        }
        let subset: Vec<EdgeId> = (0..ne)
            .filter(|j| mask & (1 << j) != 0)
            .map(|j| g.edges()[j].clone())
            .collect();
        let sub = g.edge_induced(&subset).expect("own edges");
        if is_circle_covered(&sub, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Artery verdict with the external (non-divalent) vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArteryReport {
    pub is_artery: bool,
    pub externals: Vec<VertexId>,
}

/// An artery is a single vertex, or a connected, circle-free, 1-edge-free
/// hypergraph whose vertices all have degree 1 or 2.
pub fn is_artery(g: &OrientedHypergraph) -> ArteryReport {
    if g.vertices().len() == 1 && g.edges().is_empty() {
        return ArteryReport {
            is_artery: true,
            externals: vec![g.vertices()[0].clone()],
        };
    }
    let no = ArteryReport {
        is_artery: false,
        externals: Vec::new(),
    };
    if g.vertices().is_empty() || g.component_count() != 1 || cyclomatic_number(g) != 0 {
        return no;
    }
    if g.edges()
        .iter()
        .any(|e| g.edge_size(e).expect("own edge") <= 1)
    {
        return no;
    }
    let degrees: Vec<usize> = g
        .vertices()
        .iter()
        .map(|v| g.degree(v).expect("own vertex"))
        .collect();
    if degrees.iter().any(|&d| d == 0 || d > 2) {
        return no;
    }
    ArteryReport {
        is_artery: true,
        externals: g
            .vertices()
            .iter()
            .zip(degrees)
            .filter(|(_, d)| *d != 2)
            .map(|(v, _)| v.clone())
            .collect(),
    }
}

/// Witness that a `{0,±1}`-matrix is unbalanced: the submatrix of a negative
/// pure circle, an odd hole.
#[derive(Debug, Clone)]
pub struct OddHole {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub entry_sum: i64,
    pub circle: Walk,
}

#[derive(Debug, Clone)]
pub struct MatrixBalance {
    pub balanced: bool,
    pub odd_hole: Option<OddHole>,
}

/// A `{0,±1}`-matrix is balanced exactly when every pure circle of its
/// associated oriented hypergraph is positive. The odd-hole witness has
/// entry sum congruent to 2 mod 4.
pub fn matrix_is_balanced(
    entries: &[Vec<i64>],
    limits: &Limits,
) -> Result<MatrixBalance, AnalysisError> {
    for row in entries {
        for &x in row {
            if !(-1..=1).contains(&x) {
                return Err(AnalysisError::BadEntries(x));
            }
        }
    }
    let rows = entries.len();
    let cols = entries.first().map_or(0, Vec::len);
    let mut incidences = Vec::new();
    for (i, row) in entries.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x != 0 {
                let sign = if x > 0 { Sign::Plus } else { Sign::Minus };
                incidences.push(Incidence::simple(
                    format!("r{}", i + 1),
                    format!("c{}", j + 1),
                    sign,
                ));
            }
        }
    }
    let g = OrientedHypergraph::build(
        (0..rows).map(|i| format!("r{}", i + 1)),
        (0..cols).map(|j| format!("c{}", j + 1)),
        incidences,
        true,
    )
    .expect("matrix hypergraph is valid");
    let circles = enumerate_circles(&g, limits)?;
    for c in circles {
        let class = classify_circle(&g, &c)?;
        if class.pure && class.sign == Sign::Minus {
            let row_ids: Vec<usize> = c
                .vertices()
                .map(|v| g.vertex_position(v).expect("own vertex"))
                .collect();
            let col_ids: Vec<usize> = c
                .edges()
                .map(|e| g.edge_position(e).expect("own edge"))
                .collect();
            let entry_sum = row_ids
                .iter()
                .map(|&i| col_ids.iter().map(|&j| entries[i][j]).sum::<i64>())
                .sum();
            return Ok(MatrixBalance {
                balanced: false,
                odd_hole: Some(OddHole {
                    rows: row_ids,
                    cols: col_ids,
                    entry_sum,
                    circle: c,
                }),
            });
        }
    }
    Ok(MatrixBalance {
        balanced: true,
        odd_hole: None,
    })
}

/// The forest-gauge orientation: spanning-forest signs stay, each non-forest
/// incidence is forced so its fundamental circle is positive. The result is
/// balanced exactly when the hypergraph is balanceable (cross-theta-free).
pub fn forced_orientation(g: &OrientedHypergraph) -> OrientedHypergraph {
    let ig = IncidenceGraph::from_hypergraph(g);
    let forest = ig.spanning_forest();
    let mut signs: Vec<Sign> = g.incidences().iter().map(|i| i.sign).collect();
    for (l, link) in ig.links.iter().enumerate() {
        if forest[l] {
            continue;
        }
        let (_, path_links) = ig.forest_path(&forest, link.vertex, link.edge);
        // The fundamental circle has path_links + 1 links, i.e. 2k
        // incidences.
        let k = path_links.len().div_ceil(2);
        let mut product = if k % 2 == 0 { Sign::Plus } else { Sign::Minus };
        for &pl in &path_links {
            product = product.mul(signs[ig.links[pl].incidence]);
        }
        // sign(C) = product · σ(l) must be +1.
        signs[link.incidence] = product;
    }
    OrientedHypergraph::build(
        g.vertices().to_vec(),
        g.edges().to_vec(),
        g.incidences()
            .iter()
            .zip(&signs)
            .map(|(i, &s)| Incidence::new(i.vertex.as_str(), i.edge.as_str(), i.slot, s))
            .collect::<Vec<_>>(),
        false,
    )
    .expect("re-signing preserves validity")
}

/// Re-signs the hypergraph so every circle is positive, when possible, and
/// verifies the result. Returns `None` exactly for unbalanceable inputs.
pub fn balanced_orientation(
    g: &OrientedHypergraph,
    limits: &Limits,
) -> Result<Option<OrientedHypergraph>, AnalysisError> {
    let candidate = forced_orientation(g);
    let report = is_balanced(&candidate, limits)?;
    Ok(report.balanced.then_some(candidate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::OrientedHypergraph;

    fn limits() -> Limits {
        Limits::default()
    }

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

    fn parallel_three_edges() -> OrientedHypergraph {
        OrientedHypergraph::from_edge_lists(
            &["a", "b", "c"],
            &[
                ("p", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Plus)]),
                ("q", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Plus)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn triangle_has_one_circle_of_length_three() {
        let circles = enumerate_circles(&triangle(), &limits()).unwrap();
        assert_eq!(circles.len(), 1);
        assert_eq!(circles[0].circle_length(), 3);
    }

    #[test]
    fn parallel_three_edges_have_three_digons() {
        let circles = enumerate_circles(&parallel_three_edges(), &limits()).unwrap();
        assert_eq!(circles.len(), 3);
        assert!(circles.iter().all(|c| c.circle_length() == 2));
    }

    #[test]
    fn trees_have_no_circles() {
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b", "c"],
            &[
                ("e", &[("a", Sign::Plus), ("b", Sign::Minus)]),
                ("f", &[("b", Sign::Plus), ("c", Sign::Minus)]),
            ],
        )
        .unwrap();
        assert!(enumerate_circles(&g, &limits()).unwrap().is_empty());
    }

    #[test]
    fn triangle_circle_is_pure() {
        let g = triangle();
        let c = &enumerate_circles(&g, &limits()).unwrap()[0];
        let class = classify_circle(&g, c).unwrap();
        assert!(class.pure);
    }

    #[test]
    fn third_vertex_of_an_edge_on_the_circle_makes_it_degenerate() {
        // Circle through a and b of the 3-edge t; c also lies on the circle
        // via 2-edges, so (c, t) chords it.
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b", "c"],
            &[
                ("t", &[("a", Sign::Plus), ("b", Sign::Minus), ("c", Sign::Plus)]),
                ("f", &[("b", Sign::Plus), ("c", Sign::Minus)]),
                ("h", &[("c", Sign::Plus), ("a", Sign::Minus)]),
            ],
        )
        .unwrap();
        let circles = enumerate_circles(&g, &limits()).unwrap();
        let through_t_a_b = circles
            .iter()
            .find(|c| {
                let vs: Vec<_> = c.vertices().collect();
                c.edges().any(|e| e == &EdgeId::new("t"))
                    && vs.contains(&&VertexId::new("a"))
                    && vs.contains(&&VertexId::new("b"))
                    && c.circle_length() == 3
            })
            .expect("triangle through t exists");
        let class = classify_circle(&g, through_t_a_b).unwrap();
        assert!(!class.pure);
        // Degenerate circle forces a cross-theta (and unbalanceability).
        assert!(has_cross_theta(&g).is_some());
        assert!(!is_balanceable(&g).balanceable);
    }

    #[test]
    fn purity_is_preserved_under_duality() {
        let g = parallel_three_edges();
        let d = g.incidence_dual();
        for c in enumerate_circles(&g, &limits()).unwrap() {
            let cd = c.dualize();
            let a = classify_circle(&g, &c).unwrap();
            let b = classify_circle(&d, &cd.normalized(&d)).unwrap();
            assert_eq!(a.pure, b.pure);
            assert_eq!(a.sign, b.sign);
        }
    }

    #[test]
    fn multiplicity_three_has_a_cross_theta() {
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
        let t = has_cross_theta(&g).expect("three parallel incidences");
        assert_eq!(t.kind, ThetaKind::CrossTheta);
        assert!(!is_balanceable(&g).balanceable);
    }

    #[test]
    fn triangle_has_no_thetas() {
        let g = triangle();
        assert!(find_thetas(&g, &limits()).unwrap().is_empty());
        assert!(has_cross_theta(&g).is_none());
    }

    #[test]
    fn theta_circles_have_odd_negative_count_for_cross_thetas() {
        let g = OrientedHypergraph::from_edge_lists(
            &["v", "w1", "w2", "w3"],
            &[
                ("f1", &[("v", Sign::Plus), ("w1", Sign::Minus)]),
                ("f2", &[("v", Sign::Plus), ("w2", Sign::Minus)]),
                ("f3", &[("v", Sign::Plus), ("w3", Sign::Plus)]),
                ("e", &[("w1", Sign::Plus), ("w2", Sign::Plus), ("w3", Sign::Plus)]),
            ],
        )
        .unwrap();
        let theta = has_cross_theta(&g).expect("cross-theta");
        let circles = theta.circles(&g).expect("three circles");
        let negatives = circles
            .iter()
            .filter(|c| c.sign(&g).unwrap() == Sign::Minus)
            .count();
        assert_eq!(negatives % 2, 1);
    }

    #[test]
    fn theta_kinds_are_detected() {
        // Vertex-theta: u and w joined by three 2-edge paths.
        let g = OrientedHypergraph::from_edge_lists(
            &["u", "w"],
            &[
                ("e1", &[("u", Sign::Plus), ("w", Sign::Minus)]),
                ("e2", &[("u", Sign::Plus), ("w", Sign::Minus)]),
                ("e3", &[("u", Sign::Plus), ("w", Sign::Minus)]),
            ],
        )
        .unwrap();
        let thetas = find_thetas(&g, &limits()).unwrap();
        assert!(thetas.iter().any(|t| t.kind == ThetaKind::VertexTheta));
        // Its dual is an edge-theta.
        let d = g.incidence_dual();
        let thetas_d = find_thetas(&d, &limits()).unwrap();
        assert!(thetas_d.iter().any(|t| t.kind == ThetaKind::EdgeTheta));
    }

    #[test]
    fn balance_detects_the_flipped_incidence() {
        let g = triangle();
        assert!(is_balanced(&g, &limits()).unwrap().balanced);
        let flipped = transforms::switch(&g, ["u"]).unwrap();
        // Vertex switching preserves balance.
        assert!(is_balanced(&flipped, &limits()).unwrap().balanced);
        // A single flipped incidence breaks it.
        let mut incs = g.incidences().to_vec();
        incs[0].sign = incs[0].sign.flip();
        let unbalanced = OrientedHypergraph::build(
            g.vertices().to_vec(),
            g.edges().to_vec(),
            incs,
            true,
        )
        .unwrap();
        let report = is_balanced(&unbalanced, &limits()).unwrap();
        assert!(!report.balanced);
        assert_eq!(report.negative_circle.unwrap().circle_length(), 3);
    }

    #[test]
    fn acyclic_is_vacuously_balanced() {
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b"],
            &[("e", &[("a", Sign::Plus), ("b", Sign::Plus)])],
        )
        .unwrap();
        assert!(is_balanced(&g, &limits()).unwrap().balanced);
    }

    #[test]
    fn cross_theta_fixture_is_unbalanceable_and_brute_force_agrees() {
        // v joined to edge e by three 2-paths.
        let g = OrientedHypergraph::from_edge_lists(
            &["v", "w1", "w2", "w3"],
            &[
                ("f1", &[("v", Sign::Plus), ("w1", Sign::Minus)]),
                ("f2", &[("v", Sign::Plus), ("w2", Sign::Minus)]),
                ("f3", &[("v", Sign::Plus), ("w3", Sign::Minus)]),
                ("e", &[("w1", Sign::Plus), ("w2", Sign::Plus), ("w3", Sign::Plus)]),
            ],
        )
        .unwrap();
        assert!(!is_balanceable(&g).balanceable);
        assert_eq!(brute_force_balanceable(&g, &limits()).unwrap(), None);
    }

    #[test]
    fn simple_graphs_are_balanceable_by_flipping() {
        let g = {
            let mut incs = triangle().incidences().to_vec();
            incs[3].sign = incs[3].sign.flip();
            OrientedHypergraph::build(["u", "v", "w"], ["e1", "e2", "e3"], incs, true).unwrap()
        };
        assert!(is_balanceable(&g).balanceable);
        let flips = brute_force_balanceable(&g, &limits()).unwrap();
        assert!(flips.is_some());
        // Balanced inputs need the empty flip set.
        let b = triangle();
        assert_eq!(brute_force_balanceable(&b, &limits()).unwrap(), Some(vec![]));
        // And the constructive orientation works.
        assert!(balanced_orientation(&g, &limits()).unwrap().is_some());
    }

    #[test]
    fn cyclomatic_number_formulas() {
        assert_eq!(cyclomatic_number(&triangle()), 1);
        assert_eq!(cyclomatic_number(&parallel_three_edges()), 2);
        let forest = OrientedHypergraph::from_edge_lists(
            &["a", "b", "c"],
            &[
                ("e", &[("a", Sign::Plus), ("b", Sign::Minus)]),
                ("f", &[("b", Sign::Plus), ("c", Sign::Minus)]),
            ],
        )
        .unwrap();
        assert_eq!(cyclomatic_number(&forest), 0);
    }

    #[test]
    fn graphic_case_matches_graph_cyclomatic_number() {
        // K4 as a 2-uniform hypergraph: m - n + c = 6 - 4 + 1 = 3.
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b", "c", "d"],
            &[
                ("ab", &[("a", Sign::Plus), ("b", Sign::Minus)]),
                ("ac", &[("a", Sign::Plus), ("c", Sign::Minus)]),
                ("ad", &[("a", Sign::Plus), ("d", Sign::Minus)]),
                ("bc", &[("b", Sign::Plus), ("c", Sign::Minus)]),
                ("bd", &[("b", Sign::Plus), ("d", Sign::Minus)]),
                ("cd", &[("c", Sign::Plus), ("d", Sign::Minus)]),
            ],
        )
        .unwrap();
        assert_eq!(cyclomatic_number(&g), 3);
    }

    #[test]
    fn essential_circles_count_phi_and_break_to_acyclic() {
        for g in [triangle(), parallel_three_edges()] {
            let phi = cyclomatic_number(&g);
            let with_closers = essential_circles_with_closers(&g);
            assert_eq!(with_closers.len(), phi);
            let mut h = g.clone();
            for (_, closer) in &with_closers {
                h = transforms::break_incidence(&h, closer).unwrap();
            }
            assert_eq!(cyclomatic_number(&h), 0);
        }
        let acyclic = OrientedHypergraph::from_edge_lists(
            &["a"],
            &[("e", &[("a", Sign::Plus)])],
        )
        .unwrap();
        assert!(essential_circles(&acyclic).is_empty());
    }

    #[test]
    fn inventory_of_a_path() {
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b", "c"],
            &[
                ("e", &[("a", Sign::Plus), ("b", Sign::Minus)]),
                ("f", &[("b", Sign::Plus), ("c", Sign::Minus)]),
            ],
        )
        .unwrap();
        let report = structural_inventory(&g);
        assert_eq!(report.cut_vertices, vec![VertexId::new("b")]);
        assert_eq!(report.isthmi.len(), 2);
        assert_eq!(report.leaves.len(), 2);
        assert!(report.thorns.is_empty());
        assert_eq!(report.twigs.len(), 2);
        assert_eq!(report.shoals.len(), 4);
    }

    #[test]
    fn inventory_of_a_pseudo_flower() {
        // Triangle with a thorn t on e1.
        let g = OrientedHypergraph::from_edge_lists(
            &["u", "v", "w", "t"],
            &[
                ("e1", &[("u", Sign::Plus), ("v", Sign::Minus), ("t", Sign::Plus)]),
                ("e2", &[("v", Sign::Plus), ("w", Sign::Minus)]),
                ("e3", &[("w", Sign::Plus), ("u", Sign::Minus)]),
            ],
        )
        .unwrap();
        let report = structural_inventory(&g);
        assert_eq!(report.thorns, vec![VertexId::new("t")]);
        assert!(report.leaves.is_empty());
        assert_eq!(report.briars, vec![EdgeId::new("e1")]);
        assert!(report.twigs.is_empty());
        // The thorn incidence is a shoal.
        assert_eq!(report.shoals, vec![IncidenceRef::new("t", "e1", 1)]);

        let fa = flower_analysis(&g, &limits()).unwrap();
        assert_eq!(fa.verdict, FlowerVerdict::PseudoFlower);
        assert_eq!(fa.thorns, vec![VertexId::new("t")]);
        assert_eq!(fa.flower_part.unwrap(), triangle());
    }

    #[test]
    fn triangle_inventory_is_empty() {
        let report = structural_inventory(&triangle());
        assert_eq!(report, StructureReport::default());
    }

    #[test]
    fn inseparability_paths_agree() {
        let fixtures = [
            triangle(),
            parallel_three_edges(),
            OrientedHypergraph::from_edge_lists(
                &["a", "b"],
                &[("e", &[("a", Sign::Plus), ("b", Sign::Minus)])],
            )
            .unwrap(),
        ];
        for g in fixtures {
            assert_eq!(
                is_inseparable(&g, &limits()).unwrap(),
                is_inseparable_blocks(&g),
                "{g:?}"
            );
        }
    }

    #[test]
    fn flowers_are_recognized() {
        // A signed-graph circle is a flower.
        let fa = flower_analysis(&triangle(), &limits()).unwrap();
        assert_eq!(fa.verdict, FlowerVerdict::Flower);
        // Two parallel 3-edges form a flower.
        let fa = flower_analysis(&parallel_three_edges(), &limits()).unwrap();
        assert_eq!(fa.verdict, FlowerVerdict::Flower);
        // A 0-edge is a flower (loose edge).
        let zero = OrientedHypergraph::build(Vec::<&str>::new(), ["z"], [], true).unwrap();
        assert_eq!(
            flower_analysis(&zero, &limits()).unwrap().verdict,
            FlowerVerdict::Flower
        );
    }

    #[test]
    fn half_edge_is_a_pseudo_flower() {
        let g = OrientedHypergraph::from_edge_lists(&["v"], &[("e", &[("v", Sign::Plus)])])
            .unwrap();
        let fa = flower_analysis(&g, &limits()).unwrap();
        assert_eq!(fa.verdict, FlowerVerdict::PseudoFlower);
        assert_eq!(fa.thorns, vec![VertexId::new("v")]);
        let part = fa.flower_part.unwrap();
        assert!(part.vertices().is_empty());
        assert_eq!(part.edges().len(), 1);
    }

    #[test]
    fn bare_2edge_is_not_a_pseudo_flower() {
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b"],
            &[("e", &[("a", Sign::Plus), ("b", Sign::Minus)])],
        )
        .unwrap();
        assert_eq!(
            flower_analysis(&g, &limits()).unwrap().verdict,
            FlowerVerdict::Neither
        );
    }

    #[test]
    fn arteries_are_recognized() {
        // Graphic path = 2-artery.
        let path = OrientedHypergraph::from_edge_lists(
            &["a", "m", "b"],
            &[
                ("e", &[("a", Sign::Plus), ("m", Sign::Minus)]),
                ("f", &[("m", Sign::Plus), ("b", Sign::Minus)]),
            ],
        )
        .unwrap();
        let r = is_artery(&path);
        assert!(r.is_artery);
        assert_eq!(r.externals, vec![VertexId::new("a"), VertexId::new("b")]);
        // Single vertex = vertex-artery.
        let v = OrientedHypergraph::build(["x"], Vec::<EdgeId>::new(), [], true).unwrap();
        assert!(is_artery(&v).is_artery);
        // Triangle is not (it has a circle).
        assert!(!is_artery(&triangle()).is_artery);
        // A 1-edge disqualifies.
        let one = OrientedHypergraph::from_edge_lists(&["v"], &[("e", &[("v", Sign::Plus)])])
            .unwrap();
        assert!(!is_artery(&one).is_artery);
    }

    #[test]
    fn artery_contracts_to_k_edge() {
        // 3-artery: 3-edge with one leg subdivided.
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b", "m", "c"],
            &[
                ("e", &[("a", Sign::Plus), ("b", Sign::Minus), ("m", Sign::Plus)]),
                ("f", &[("m", Sign::Minus), ("c", Sign::Plus)]),
            ],
        )
        .unwrap();
        let r = is_artery(&g);
        assert!(r.is_artery);
        assert_eq!(r.externals.len(), 3);
        let contracted = transforms::contract_2vertex(&g, &"m".into()).unwrap();
        assert_eq!(contracted.edges().len(), 1);
        assert_eq!(contracted.edge_size(&contracted.edges()[0].clone()).unwrap(), 3);
    }

    #[test]
    fn matrix_balance_and_odd_holes() {
        // A positive pure circle's matrix is balanced.
        let balanced = vec![vec![1, 0, -1], vec![-1, 1, 0], vec![0, -1, 1]];
        let r = matrix_is_balanced(&balanced, &limits()).unwrap();
        assert!(r.balanced);
        // Flipping one entry makes the 3-circle negative: odd hole, sum ≡ 2 mod 4.
        let unbalanced = vec![vec![1, 0, 1], vec![-1, 1, 0], vec![0, -1, 1]];
        let r = matrix_is_balanced(&unbalanced, &limits()).unwrap();
        assert!(!r.balanced);
        let hole = r.odd_hole.unwrap();
        assert_eq!(hole.entry_sum.rem_euclid(4), 2);
        // Entries outside {0,±1} are rejected.
        assert!(matrix_is_balanced(&[vec![2]], &limits()).is_err());
    }

    #[test]
    fn negative_pure_four_circle_has_odd_hole_parity() {
        let m = vec![
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 1],
        ];
        let r = matrix_is_balanced(&m, &limits()).unwrap();
        // All-negative adjacencies: a 4-circle has sign (+1)^4·(-1)^{...};
        // k = 4, all entries +1: sign = (-1)^4 · 1 = +1? The sum is 8 ≡ 0.
        // This one is balanced; flip one entry to get the odd hole.
        assert!(r.balanced);
        let m2 = vec![
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
            vec![-1, 0, 0, 1],
        ];
        let r2 = matrix_is_balanced(&m2, &limits()).unwrap();
        assert!(!r2.balanced);
        assert_eq!(r2.odd_hole.unwrap().entry_sum.rem_euclid(4), 2);
    }

    #[test]
    fn balanced_orientation_fails_only_on_cross_thetas() {
        let g = OrientedHypergraph::from_edge_lists(
            &["v", "w1", "w2", "w3"],
            &[
                ("f1", &[("v", Sign::Plus), ("w1", Sign::Minus)]),
                ("f2", &[("v", Sign::Plus), ("w2", Sign::Minus)]),
                ("f3", &[("v", Sign::Plus), ("w3", Sign::Minus)]),
                ("e", &[("w1", Sign::Plus), ("w2", Sign::Plus), ("w3", Sign::Plus)]),
            ],
        )
        .unwrap();
        assert!(balanced_orientation(&g, &limits()).unwrap().is_none());
        assert!(balanced_orientation(&triangle(), &limits()).unwrap().is_some());
    }
}
