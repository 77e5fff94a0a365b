//! The oriented-hypergraph value type and its validity rules.
//!
//! An oriented hypergraph is a quadruple: disjoint finite sets of vertices
//! and edges, a finite list of incidences `(v, e, k)` where `k` numbers the
//! slots joining one vertex/edge pair, and a sign in `{+1, -1}` per
//! incidence. Everything in this crate is built on top of this type; values
//! are immutable after construction and every operation is a pure function.

use std::collections::HashMap;
use std::fmt;

use crate::error::BuildError;

/// Incidence orientation, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        self.mul(rhs)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Opaque vertex identifier. Determinism throughout the crate comes from
/// insertion order, never from the lexicographic order of these strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(String);

/// Opaque edge identifier; the namespace is disjoint from vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(String);

macro_rules! id_impls {
    ($t:ident) => {
        impl $t {
            pub fn new(s: impl Into<String>) -> Self {
                $t(s.into())
            }
            pub fn as_str(&self) -> &str {
                &self.0
            }
        }
        impl From<&str> for $t {
            fn from(s: &str) -> Self {
                $t(s.to_owned())
            }
        }
        impl From<String> for $t {
            fn from(s: String) -> Self {
                $t(s)
            }
        }
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }
    };
}

id_impls!(VertexId);
id_impls!(EdgeId);

/// A vertex or an edge; walks and component listings mix the two.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
}

impl Element {
    pub fn is_vertex(&self) -> bool {
        matches!(self, Element::Vertex(_))
    }
    pub fn as_vertex(&self) -> Option<&VertexId> {
        match self {
            Element::Vertex(v) => Some(v),
            Element::Edge(_) => None,
        }
    }
    pub fn as_edge(&self) -> Option<&EdgeId> {
        match self {
            Element::Edge(e) => Some(e),
            Element::Vertex(_) => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "{v}"),
            Element::Edge(e) => write!(f, "{e}"),
        }
    }
}

/// An oriented incidence: the triple `(vertex, edge, slot)` together with its
/// sign. Slots for a fixed pair run 1..=multiplicity with no gaps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Incidence {
    pub vertex: VertexId,
    pub edge: EdgeId,
    pub slot: u32,
    pub sign: Sign,
}

impl Incidence {
    pub fn new(
        vertex: impl Into<VertexId>,
        edge: impl Into<EdgeId>,
        slot: u32,
        sign: Sign,
    ) -> Self {
        Incidence {
            vertex: vertex.into(),
            edge: edge.into(),
            slot,
            sign,
        }
    }

    /// Slot-1 incidence, for simple hypergraphs.
    pub fn simple(vertex: impl Into<VertexId>, edge: impl Into<EdgeId>, sign: Sign) -> Self {
        Incidence::new(vertex, edge, 1, sign)
    }

    pub fn to_ref(&self) -> IncidenceRef {
        IncidenceRef {
            vertex: self.vertex.clone(),
            edge: self.edge.clone(),
            slot: self.slot,
        }
    }
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.vertex, self.edge, self.slot, self.sign)
    }
}

/// Reference to an incidence by its identifying triple, without the sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncidenceRef {
    pub vertex: VertexId,
    pub edge: EdgeId,
    pub slot: u32,
}

impl IncidenceRef {
    pub fn new(vertex: impl Into<VertexId>, edge: impl Into<EdgeId>, slot: u32) -> Self {
        IncidenceRef {
            vertex: vertex.into(),
            edge: edge.into(),
            slot,
        }
    }
}

impl fmt::Display for IncidenceRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.vertex, self.edge, self.slot)
    }
}

/// An adjacency: two distinct incidences inside one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjacency {
    pub v: VertexId,
    pub k1: u32,
    pub w: VertexId,
    pub k2: u32,
    pub edge: EdgeId,
}

/// The oriented hypergraph. Iteration order over vertices, edges and
/// incidences is insertion order; equality is labeled equality including
/// that order.
#[derive(Clone)]
pub struct OrientedHypergraph {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    incidences: Vec<Incidence>,
    vertex_index: HashMap<VertexId, usize>,
    edge_index: HashMap<EdgeId, usize>,
}

impl PartialEq for OrientedHypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.incidences == other.incidences
    }
}

impl Eq for OrientedHypergraph {}

impl fmt::Debug for OrientedHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrientedHypergraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .field("incidences", &self.incidences)
            .finish()
    }
}

fn id_well_formed(s: &str) -> bool {
    // Ids are whitespace-delimited tokens in the text format and never start
    // a line, so `#` inside an id is harmless.
    !s.is_empty() && !s.contains(char::is_whitespace)
}

impl OrientedHypergraph {
    /// Validates and assembles an oriented hypergraph.
    ///
    /// Under strict mode (the default convention) all incidences sharing a
    /// (vertex, edge) pair must carry the same sign, so the incidence-matrix
    /// entry for the pair cannot cancel.
    pub fn build(
        vertices: impl IntoIterator<Item = impl Into<VertexId>>,
        edges: impl IntoIterator<Item = impl Into<EdgeId>>,
        incidences: impl IntoIterator<Item = Incidence>,
        strict: bool,
    ) -> Result<Self, BuildError> {
        let vertices: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        let edges: Vec<EdgeId> = edges.into_iter().map(Into::into).collect();
        let incidences: Vec<Incidence> = incidences.into_iter().collect();

        let mut vertex_index = HashMap::new();
        let mut edge_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if !id_well_formed(v.as_str()) {
                return Err(BuildError::MalformedId(v.as_str().to_owned()));
            }
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(BuildError::DuplicateId(v.as_str().to_owned()));
            }
        }
        for (i, e) in edges.iter().enumerate() {
            if !id_well_formed(e.as_str()) {
                return Err(BuildError::MalformedId(e.as_str().to_owned()));
            }
            if vertex_index.contains_key(&VertexId::new(e.as_str())) {
                return Err(BuildError::DuplicateId(e.as_str().to_owned()));
            }
            if edge_index.insert(e.clone(), i).is_some() {
                return Err(BuildError::DuplicateId(e.as_str().to_owned()));
            }
        }

        for inc in &incidences {
            if !vertex_index.contains_key(&inc.vertex) {
                return Err(BuildError::UnknownId(inc.vertex.as_str().to_owned()));
            }
            if !edge_index.contains_key(&inc.edge) {
                return Err(BuildError::UnknownId(inc.edge.as_str().to_owned()));
            }
        }

        // Slots per pair must be exactly 1..=count, and equal-signed in
        // strict mode.
        let mut pairs: HashMap<(usize, usize), Vec<(u32, Sign)>> = HashMap::new();
        for inc in &incidences {
            let vi = vertex_index[&inc.vertex];
            let ei = edge_index[&inc.edge];
            pairs.entry((vi, ei)).or_default().push((inc.slot, inc.sign));
        }
        for ((vi, ei), mut slots) in pairs {
            slots.sort_unstable_by_key(|(k, _)| *k);
            let gap = slots
                .iter()
                .enumerate()
                .any(|(i, (k, _))| *k != (i + 1) as u32);
            if gap {
                return Err(BuildError::SlotGap {
                    vertex: vertices[vi].as_str().to_owned(),
                    edge: edges[ei].as_str().to_owned(),
                    count: slots.len() as u32,
                });
            }
            if strict && slots.iter().any(|(_, s)| *s != slots[0].1) {
                return Err(BuildError::MixedSigns {
                    vertex: vertices[vi].as_str().to_owned(),
                    edge: edges[ei].as_str().to_owned(),
                });
            }
        }

        Ok(OrientedHypergraph {
            vertices,
            edges,
            incidences,
            vertex_index,
            edge_index,
        })
    }

    /// Builds a simple hypergraph from per-edge signed vertex lists.
    pub fn from_edge_lists(
        vertices: &[&str],
        edges: &[(&str, &[(&str, Sign)])],
    ) -> Result<Self, BuildError> {
        let mut incidences = Vec::new();
        for (e, members) in edges {
            for (v, sign) in members.iter() {
                incidences.push(Incidence::simple(*v, *e, *sign));
            }
        }
        Self::build(
            vertices.iter().copied(),
            edges.iter().map(|(e, _)| *e),
            incidences,
            true,
        )
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn vertex_position(&self, v: &VertexId) -> Option<usize> {
        self.vertex_index.get(v).copied()
    }

    pub fn edge_position(&self, e: &EdgeId) -> Option<usize> {
        self.edge_index.get(e).copied()
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.vertex_index.contains_key(v)
    }

    pub fn has_edge(&self, e: &EdgeId) -> bool {
        self.edge_index.contains_key(e)
    }

    /// Insertion-order position of an element among all of `V ∪ E`
    /// (vertices first). Used for canonical orderings.
    pub fn element_position(&self, el: &Element) -> Option<usize> {
        match el {
            Element::Vertex(v) => self.vertex_position(v),
            Element::Edge(e) => self.edge_position(e).map(|i| self.vertices.len() + i),
        }
    }

    /// Number of incidences containing the vertex.
    pub fn degree(&self, v: &VertexId) -> Result<usize, BuildError> {
        if !self.has_vertex(v) {
            return Err(BuildError::UnknownId(v.as_str().to_owned()));
        }
        Ok(self.incidences.iter().filter(|i| &i.vertex == v).count())
    }

    /// Number of incidences containing the edge; a size-0 edge is a 0-edge,
    /// a size-1 edge a 1-edge.
    pub fn edge_size(&self, e: &EdgeId) -> Result<usize, BuildError> {
        if !self.has_edge(e) {
            return Err(BuildError::UnknownId(e.as_str().to_owned()));
        }
        Ok(self.incidences.iter().filter(|i| &i.edge == e).count())
    }

    /// Incidence multiplicity of the pair, `ι(v, e)`.
    pub fn multiplicity(&self, v: &VertexId, e: &EdgeId) -> Result<usize, BuildError> {
        if !self.has_vertex(v) {
            return Err(BuildError::UnknownId(v.as_str().to_owned()));
        }
        if !self.has_edge(e) {
            return Err(BuildError::UnknownId(e.as_str().to_owned()));
        }
        Ok(self
            .incidences
            .iter()
            .filter(|i| &i.vertex == v && &i.edge == e)
            .count())
    }

    pub fn sign_of(&self, inc: &IncidenceRef) -> Option<Sign> {
        self.incidences
            .iter()
            .find(|i| i.vertex == inc.vertex && i.edge == inc.edge && i.slot == inc.slot)
            .map(|i| i.sign)
    }

    pub fn has_incidence(&self, inc: &IncidenceRef) -> bool {
        self.sign_of(inc).is_some()
    }

    pub fn incidences_of_vertex<'a>(&'a self, v: &'a VertexId) -> impl Iterator<Item = &'a Incidence> {
        self.incidences.iter().filter(move |i| &i.vertex == v)
    }

    pub fn incidences_of_edge<'a>(&'a self, e: &'a EdgeId) -> impl Iterator<Item = &'a Incidence> {
        self.incidences.iter().filter(move |i| &i.edge == e)
    }

    /// `ι(v, e) ≤ 1` for all pairs.
    pub fn is_simple(&self) -> bool {
        self.incidences.iter().all(|i| i.slot == 1)
    }

    /// All incidences sharing a pair carry equal signs.
    pub fn is_strict(&self) -> bool {
        let mut seen: HashMap<(usize, usize), Sign> = HashMap::new();
        for inc in &self.incidences {
            let key = (
                self.vertex_index[&inc.vertex],
                self.edge_index[&inc.edge],
            );
            match seen.insert(key, inc.sign) {
                Some(prev) if prev != inc.sign => return false,
                _ => {}
            }
        }
        true
    }

    /// Sign of an adjacency, `-σ(v,e,k1)·σ(w,e,k2)`, or `None` when the
    /// adjacency does not exist (the paper's sign 0).
    pub fn adjacency_sign(&self, adj: &Adjacency) -> Option<Sign> {
        let i1 = IncidenceRef::new(adj.v.clone(), adj.edge.clone(), adj.k1);
        let i2 = IncidenceRef::new(adj.w.clone(), adj.edge.clone(), adj.k2);
        if i1 == i2 {
            return None;
        }
        let s1 = self.sign_of(&i1)?;
        let s2 = self.sign_of(&i2)?;
        Some(s1.mul(s2).flip())
    }

    /// The incidence dual: vertices and edges exchange roles, signs and
    /// slots carry over unchanged. Applying it twice returns the original.
    pub fn incidence_dual(&self) -> OrientedHypergraph {
        let vertices: Vec<VertexId> = self.edges.iter().map(|e| VertexId::new(e.as_str())).collect();
        let edges: Vec<EdgeId> = self.vertices.iter().map(|v| EdgeId::new(v.as_str())).collect();
        let incidences = self
            .incidences
            .iter()
            .map(|i| Incidence::new(i.edge.as_str(), i.vertex.as_str(), i.slot, i.sign))
            .collect::<Vec<_>>();
        OrientedHypergraph::build(vertices, edges, incidences, false)
            .expect("dual of a valid hypergraph is valid")
    }

    /// Connected components of `V ∪ E`, each listed vertices-first in
    /// insertion order. Isolated vertices and 0-edges are singletons.
    pub fn connected_components(&self) -> Vec<Vec<Element>> {
        let n = self.vertices.len() + self.edges.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        // Union via repeated BFS in node order; incidences are the links.
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for inc in &self.incidences {
            let a = self.vertex_index[&inc.vertex];
            let b = self.vertices.len() + self.edge_index[&inc.edge];
            adj[a].push(b);
            adj[b].push(a);
        }
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = count;
            count += 1;
            let mut queue = vec![start];
            comp[start] = id;
            while let Some(u) = queue.pop() {
                for &w in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        queue.push(w);
                    }
                }
            }
        }
        let mut out: Vec<Vec<Element>> = vec![Vec::new(); count];
        for (i, v) in self.vertices.iter().enumerate() {
            out[comp[i]].push(Element::Vertex(v.clone()));
        }
        for (i, e) in self.edges.iter().enumerate() {
            out[comp[self.vertices.len() + i]].push(Element::Edge(e.clone()));
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Cross-induced subhypergraph `G:(U, F)`: keeps incidences with both
    /// ends inside the chosen sets.
    pub fn cross_induced(&self, us: &[VertexId], fs: &[EdgeId]) -> Result<Self, BuildError> {
        for v in us {
            if !self.has_vertex(v) {
                return Err(BuildError::UnknownId(v.as_str().to_owned()));
            }
        }
        for e in fs {
            if !self.has_edge(e) {
                return Err(BuildError::UnknownId(e.as_str().to_owned()));
            }
        }
        let uset: std::collections::HashSet<&VertexId> = us.iter().collect();
        let fset: std::collections::HashSet<&EdgeId> = fs.iter().collect();
        let vertices: Vec<VertexId> = self
            .vertices
            .iter()
            .filter(|v| uset.contains(v))
            .cloned()
            .collect();
        let edges: Vec<EdgeId> = self.edges.iter().filter(|e| fset.contains(e)).cloned().collect();
        let incidences: Vec<Incidence> = self
            .incidences
            .iter()
            .filter(|i| uset.contains(&i.vertex) && fset.contains(&i.edge))
            .cloned()
            .collect();
        OrientedHypergraph::build(vertices, edges, incidences, false)
    }

    /// Edge-restriction `G|F`: keeps all of `V`.
    pub fn edge_restriction(&self, fs: &[EdgeId]) -> Result<Self, BuildError> {
        let us: Vec<VertexId> = self.vertices.clone();
        self.cross_induced(&us, fs)
    }

    /// Edge-induced subhypergraph `G:F`: keeps exactly the vertices meeting
    /// some edge of `F`.
    pub fn edge_induced(&self, fs: &[EdgeId]) -> Result<Self, BuildError> {
        for e in fs {
            if !self.has_edge(e) {
                return Err(BuildError::UnknownId(e.as_str().to_owned()));
            }
        }
        let fset: std::collections::HashSet<&EdgeId> = fs.iter().collect();
        let us: Vec<VertexId> = self
            .vertices
            .iter()
            .filter(|v| {
                self.incidences
                    .iter()
                    .any(|i| &i.vertex == *v && fset.contains(&i.edge))
            })
            .cloned()
            .collect();
        self.cross_induced(&us, fs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn triangle() -> OrientedHypergraph {
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
    fn triangle_is_valid_and_counts_check_out() {
        let g = triangle();
        assert_eq!(g.vertices().len(), 3);
        assert_eq!(g.degree(&"u".into()).unwrap(), 2);
        assert_eq!(g.edge_size(&"e1".into()).unwrap(), 2);
        assert_eq!(g.multiplicity(&"u".into(), &"e1".into()).unwrap(), 1);
        assert_eq!(g.multiplicity(&"u".into(), &"e2".into()).unwrap(), 0);
        assert!(g.is_simple());
        assert!(g.is_strict());
    }

    #[test]
    fn isolated_vertex_has_degree_zero() {
        let g = OrientedHypergraph::build(["x"], Vec::<EdgeId>::new(), [], true).unwrap();
        assert_eq!(g.degree(&"x".into()).unwrap(), 0);
    }

    #[test]
    fn multiplicity_counts_slots() {
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
        assert_eq!(g.multiplicity(&"v".into(), &"e".into()).unwrap(), 3);
        assert!(!g.is_simple());
    }

    #[test]
    fn slot_gap_is_rejected() {
        let err = OrientedHypergraph::build(
            ["v"],
            ["e"],
            [Incidence::new("v", "e", 2, Sign::Plus)],
            true,
        )
        .unwrap_err();
        assert!(matches!(err, BuildError::SlotGap { .. }));
    }

    #[test]
    fn mixed_signs_rejected_in_strict_mode_only() {
        let incs = [
            Incidence::new("v", "e", 1, Sign::Plus),
            Incidence::new("v", "e", 2, Sign::Minus),
        ];
        let err =
            OrientedHypergraph::build(["v"], ["e"], incs.clone(), true).unwrap_err();
        assert!(matches!(err, BuildError::MixedSigns { .. }));
        let g = OrientedHypergraph::build(["v"], ["e"], incs, false).unwrap();
        assert!(!g.is_strict());
    }

    #[test]
    fn namespaces_are_disjoint() {
        let err = OrientedHypergraph::build(["a"], ["a"], [], true).unwrap_err();
        assert!(matches!(err, BuildError::DuplicateId(_)));
    }

    #[test]
    fn unknown_incidence_id_is_rejected() {
        let err = OrientedHypergraph::build(
            ["v"],
            ["e"],
            [Incidence::simple("z", "e", Sign::Plus)],
            true,
        )
        .unwrap_err();
        assert_eq!(err, BuildError::UnknownId("z".to_owned()));
    }

    #[test]
    fn adjacency_sign_matches_formula() {
        let g = triangle();
        // σ(u,e1) = +1, σ(v,e1) = -1 → sign = -(+1)(-1) = +1.
        let adj = Adjacency {
            v: "u".into(),
            k1: 1,
            w: "v".into(),
            k2: 1,
            edge: "e1".into(),
        };
        assert_eq!(g.adjacency_sign(&adj), Some(Sign::Plus));
        // Same-signed incidences give a negative adjacency.
        let g2 = OrientedHypergraph::from_edge_lists(
            &["v", "w"],
            &[("e", &[("v", Sign::Plus), ("w", Sign::Plus)])],
        )
        .unwrap();
        let adj2 = Adjacency {
            v: "v".into(),
            k1: 1,
            w: "w".into(),
            k2: 1,
            edge: "e".into(),
        };
        assert_eq!(g2.adjacency_sign(&adj2), Some(Sign::Minus));
        // Non-adjacency has sign 0 (None here).
        let adj3 = Adjacency {
            v: "u".into(),
            k1: 1,
            w: "w".into(),
            k2: 1,
            edge: "e1".into(),
        };
        assert_eq!(g.adjacency_sign(&adj3), None);
    }

    #[test]
    fn self_adjacency_needs_two_distinct_incidences() {
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
        let same = Adjacency {
            v: "v".into(),
            k1: 1,
            w: "v".into(),
            k2: 1,
            edge: "e".into(),
        };
        assert_eq!(g.adjacency_sign(&same), None);
        let distinct = Adjacency {
            v: "v".into(),
            k1: 1,
            w: "v".into(),
            k2: 2,
            edge: "e".into(),
        };
        assert_eq!(g.adjacency_sign(&distinct), Some(Sign::Minus));
    }

    #[test]
    fn dual_is_an_involution() {
        let g = triangle();
        assert_eq!(g.incidence_dual().incidence_dual(), g);
    }

    #[test]
    fn dual_swaps_roles_and_multiplicities() {
        // 3 vertices, 2 parallel 3-edges.
        let g = OrientedHypergraph::from_edge_lists(
            &["a", "b", "c"],
            &[
                ("p", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Plus)]),
                ("q", &[("a", Sign::Plus), ("b", Sign::Plus), ("c", Sign::Plus)]),
            ],
        )
        .unwrap();
        let d = g.incidence_dual();
        assert_eq!(d.vertices().len(), 2);
        assert_eq!(d.edges().len(), 3);
        for e in d.edges() {
            assert_eq!(d.edge_size(e).unwrap(), 2);
        }
        // ι*(e,v) = ι(v,e) on every pair.
        for v in g.vertices() {
            for e in g.edges() {
                let m = g.multiplicity(v, e).unwrap();
                let dv = VertexId::new(e.as_str());
                let de = EdgeId::new(v.as_str());
                assert_eq!(d.multiplicity(&dv, &de).unwrap(), m);
            }
        }
        // Degree in G equals size of the corresponding dual edge.
        for v in g.vertices() {
            let de = EdgeId::new(v.as_str());
            assert_eq!(g.degree(v).unwrap(), d.edge_size(&de).unwrap());
        }
    }

    #[test]
    fn components_split_as_expected() {
        let g = triangle();
        assert_eq!(g.connected_components().len(), 1);

        let g2 = OrientedHypergraph::build(
            ["u", "v", "w", "x"],
            ["e1", "e2", "e3"],
            triangle().incidences().to_vec(),
            true,
        )
        .unwrap();
        assert_eq!(g2.connected_components().len(), 2);

        // Two disjoint triangles.
        let mut incs = triangle().incidences().to_vec();
        for (v, e) in [("p", "f1"), ("q", "f1"), ("q", "f2"), ("r", "f2"), ("r", "f3"), ("p", "f3")]
        {
            incs.push(Incidence::simple(v, e, Sign::Plus));
        }
        let g3 = OrientedHypergraph::build(
            ["u", "v", "w", "p", "q", "r"],
            ["e1", "e2", "e3", "f1", "f2", "f3"],
            incs,
            true,
        )
        .unwrap();
        assert_eq!(g3.connected_components().len(), 2);
    }

    #[test]
    fn zero_edge_is_a_singleton_component() {
        let g = OrientedHypergraph::build(Vec::<VertexId>::new(), ["z"], [], true).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0], vec![Element::Edge("z".into())]);
    }

    #[test]
    fn edge_induced_keeps_only_met_vertices() {
        let g = triangle();
        let sub = g.edge_induced(&["e1".into()]).unwrap();
        assert_eq!(sub.vertices().len(), 2);
        assert_eq!(sub.edges().len(), 1);
        assert_eq!(sub.incidences().len(), 2);
    }

    #[test]
    fn cross_induced_on_empty_vertex_set_yields_zero_edges() {
        let g = triangle();
        let sub = g
            .cross_induced(&[], g.edges())
            .unwrap();
        assert_eq!(sub.vertices().len(), 0);
        assert_eq!(sub.edges().len(), 3);
        assert_eq!(sub.incidences().len(), 0);
        for e in sub.edges() {
            assert_eq!(sub.edge_size(e).unwrap(), 0);
        }
    }

    #[test]
    fn edge_restriction_keeps_all_vertices() {
        let g = triangle();
        let sub = g.edge_restriction(&["e1".into()]).unwrap();
        assert_eq!(sub.vertices().len(), 3);
        assert_eq!(sub.edges().len(), 1);
    }
}
