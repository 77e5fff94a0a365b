//! Paths and circles: alternating vertex–edge walks with incidence
//! references, their signs, and a canonical form for circles.

use crate::error::AnalysisError;
use crate::hypergraph::{Element, EdgeId, IncidenceRef, OrientedHypergraph, Sign, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkKind {
    Path,
    Circle,
}

/// An alternating sequence `a0, i1, a1, ..., i_n, a_n` of elements and
/// incidences. For a path the element list has one more entry than the
/// incidence list; for a circle both lists have length `2k` and the final
/// incidence returns to `a0`, which is always a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    kind: WalkKind,
    elements: Vec<Element>,
    incidences: Vec<IncidenceRef>,
}

impl Walk {
    pub fn path(
        elements: Vec<Element>,
        incidences: Vec<IncidenceRef>,
        g: &OrientedHypergraph,
    ) -> Result<Walk, AnalysisError> {
        let w = Walk {
            kind: WalkKind::Path,
            elements,
            incidences,
        };
        w.validate(g)?;
        Ok(w)
    }

    pub fn circle(
        elements: Vec<Element>,
        incidences: Vec<IncidenceRef>,
        g: &OrientedHypergraph,
    ) -> Result<Walk, AnalysisError> {
        let w = Walk {
            kind: WalkKind::Circle,
            elements,
            incidences,
        };
        w.validate(g)?;
        Ok(w)
    }

    pub(crate) fn circle_unchecked(elements: Vec<Element>, incidences: Vec<IncidenceRef>) -> Walk {
        Walk {
            kind: WalkKind::Circle,
            elements,
            incidences,
        }
    }

    pub fn kind(&self) -> WalkKind {
        self.kind
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn incidences(&self) -> &[IncidenceRef] {
        &self.incidences
    }

    /// Circle length `k`: the number of vertices (equivalently edges) on it.
    pub fn circle_length(&self) -> usize {
        debug_assert_eq!(self.kind, WalkKind::Circle);
        self.incidences.len() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.elements.iter().filter_map(Element::as_vertex)
    }

    pub fn edges(&self) -> impl Iterator<Item = &EdgeId> {
        self.elements.iter().filter_map(Element::as_edge)
    }

    fn incidence_joins(inc: &IncidenceRef, a: &Element, b: &Element) -> bool {
        let (v, e) = match (a, b) {
            (Element::Vertex(v), Element::Edge(e)) => (v, e),
            (Element::Edge(e), Element::Vertex(v)) => (v, e),
            _ => return false,
        };
        &inc.vertex == v && &inc.edge == e
    }

    pub fn validate(&self, g: &OrientedHypergraph) -> Result<(), AnalysisError> {
        let fail = |msg: String| Err(AnalysisError::InvalidWalk(msg));
        for el in &self.elements {
            let known = match el {
                Element::Vertex(v) => g.has_vertex(v),
                Element::Edge(e) => g.has_edge(e),
            };
            if !known {
                return fail(format!("unknown element {el}"));
            }
        }
        for inc in &self.incidences {
            if !g.has_incidence(inc) {
                return fail(format!("unknown incidence {inc}"));
            }
        }
        // No vertex, edge or incidence repeats.
        let mut seen_el = std::collections::HashSet::new();
        for el in &self.elements {
            if !seen_el.insert(el.clone()) {
                return fail(format!("repeated element {el}"));
            }
        }
        let mut seen_inc = std::collections::HashSet::new();
        for inc in &self.incidences {
            if !seen_inc.insert(inc.clone()) {
                return fail(format!("repeated incidence {inc}"));
            }
        }
        match self.kind {
            WalkKind::Path => {
                if self.elements.len() != self.incidences.len() + 1 {
                    return fail("path element/incidence counts out of step".into());
                }
                for (j, inc) in self.incidences.iter().enumerate() {
                    if !Self::incidence_joins(inc, &self.elements[j], &self.elements[j + 1]) {
                        return fail(format!("incidence {inc} does not join step {j}"));
                    }
                }
            }
            WalkKind::Circle => {
                let n = self.incidences.len();
                if n < 2 || !n.is_multiple_of(2) || self.elements.len() != n {
                    return fail("circle must alternate 2k elements with 2k incidences".into());
                }
                if !self.elements[0].is_vertex() {
                    return fail("circle must start at a vertex".into());
                }
                for j in 0..n {
                    let a = &self.elements[j];
                    let b = &self.elements[(j + 1) % n];
                    if !Self::incidence_joins(&self.incidences[j], a, b) {
                        return fail(format!(
                            "incidence {} does not join step {j}",
                            self.incidences[j]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Sign of the walk, `(-1)^⌊n/2⌋ · Π σ(i_h)` over its `n` incidences.
    pub fn sign(&self, g: &OrientedHypergraph) -> Result<Sign, AnalysisError> {
        self.validate(g)?;
        Ok(self.sign_unchecked(g))
    }

    pub(crate) fn sign_unchecked(&self, g: &OrientedHypergraph) -> Sign {
        let n = self.incidences.len();
        let mut sign = if (n / 2).is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
        for inc in &self.incidences {
            sign = sign.mul(g.sign_of(inc).expect("validated incidence"));
        }
        sign
    }

    /// Canonical form of a circle: start at the vertex with the smallest
    /// insertion-order position, then traverse toward the smaller of the two
    /// neighboring edges (tie on a length-1 circle broken by slot).
    pub fn normalized(&self, g: &OrientedHypergraph) -> Walk {
        debug_assert_eq!(self.kind, WalkKind::Circle);
        let n = self.elements.len();
        let start = (0..n)
            .filter(|&j| self.elements[j].is_vertex())
            .min_by_key(|&j| g.element_position(&self.elements[j]).expect("validated"))
            .expect("circle contains a vertex");

        let rotate = |dir_forward: bool| -> Walk {
            let mut elements = Vec::with_capacity(n);
            let mut incidences = Vec::with_capacity(n);
            if dir_forward {
                for off in 0..n {
                    elements.push(self.elements[(start + off) % n].clone());
                    incidences.push(self.incidences[(start + off) % n].clone());
                }
            } else {
                // Reversed: a_start, i_start-1, a_start-1, ...
                for off in 0..n {
                    elements.push(self.elements[(start + n - off) % n].clone());
                    incidences.push(self.incidences[(start + n - 1 - off) % n].clone());
                }
            }
            Walk {
                kind: WalkKind::Circle,
                elements,
                incidences,
            }
        };

        let fwd = rotate(true);
        let bwd = rotate(false);
        let fwd_edge = g.element_position(&fwd.elements[1]).expect("validated");
        let bwd_edge = g.element_position(&bwd.elements[1]).expect("validated");
        match fwd_edge.cmp(&bwd_edge) {
            std::cmp::Ordering::Less => fwd,
            std::cmp::Ordering::Greater => bwd,
            std::cmp::Ordering::Equal => {
                if fwd.incidences[0].slot <= bwd.incidences[0].slot {
                    fwd
                } else {
                    bwd
                }
            }
        }
    }

    /// Key for the canonical circle order: length first, then the
    /// insertion-order positions of the normalized form.
    pub fn canonical_key(&self, g: &OrientedHypergraph) -> (usize, Vec<(usize, u32)>) {
        let norm = self.normalized(g);
        let seq = norm
            .elements
            .iter()
            .zip(norm.incidences.iter())
            .map(|(el, inc)| (g.element_position(el).expect("validated"), inc.slot))
            .collect();
        (norm.incidences.len(), seq)
    }

    /// The same walk read in the incidence dual (roles of vertices and edges
    /// exchanged). For circles the start is re-normalized by the caller.
    pub fn dualize(&self) -> Walk {
        let elements = self
            .elements
            .iter()
            .map(|el| match el {
                Element::Vertex(v) => Element::Edge(EdgeId::new(v.as_str())),
                Element::Edge(e) => Element::Vertex(VertexId::new(e.as_str())),
            })
            .collect::<Vec<_>>();
        let incidences = self
            .incidences
            .iter()
            .map(|i| IncidenceRef::new(i.edge.as_str(), i.vertex.as_str(), i.slot))
            .collect::<Vec<_>>();
        match self.kind {
            WalkKind::Path => Walk {
                kind: WalkKind::Path,
                elements,
                incidences,
            },
            WalkKind::Circle => {
                // Rotate so a vertex of the dual leads again.
                let n = elements.len();
                debug_assert!(n >= 2);
                let start = if elements[0].is_vertex() { 0 } else { 1 };
                let mut els = Vec::with_capacity(n);
                let mut incs = Vec::with_capacity(n);
                for off in 0..n {
                    els.push(elements[(start + off) % n].clone());
                    incs.push(incidences[(start + off) % n].clone());
                }
                Walk {
                    kind: WalkKind::Circle,
                    elements: els,
                    incidences: incs,
                }
            }
        }
    }

    /// Element sequence as a single line, for reports.
    pub fn display(&self) -> String {
        self.elements
            .iter()
            .map(|el| el.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}
