//! Deterministic instance generation: a seeded random generator for the
//! CLI and test streams, exhaustive enumerators of small structures for the
//! verification suites, and constructors for balanced flowers and
//! hypercircles.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::{self, Limits};
use crate::error::GenerateError;
use crate::hypergraph::{EdgeId, Incidence, OrientedHypergraph, Sign, VertexId};
use crate::transforms;

/// Parameters of the seeded generator. Identical parameters and seed give
/// byte-identical output on every platform.
#[derive(Debug, Clone)]
pub struct GeneratorParams {
    pub vertex_range: (usize, usize),
    pub edge_range: (usize, usize),
    /// Weight of edge size `s` is `size_weights[s]`.
    pub size_weights: Vec<u32>,
    /// Probability of a `+` sign per (vertex, edge) pair.
    pub sign_bias: f64,
    pub multiplicity_cap: u32,
    pub seed: u64,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        GeneratorParams {
            vertex_range: (2, 6),
            edge_range: (1, 6),
            size_weights: vec![1, 2, 8, 4, 2],
            sign_bias: 0.5,
            multiplicity_cap: 1,
            seed: 1,
        }
    }
}

impl GeneratorParams {
    fn validate(&self) -> Result<(), GenerateError> {
        let bad = |msg: &str| Err(GenerateError::InfeasibleParams(msg.to_owned()));
        if self.vertex_range.0 > self.vertex_range.1 {
            return bad("vertex range is empty");
        }
        if self.edge_range.0 > self.edge_range.1 {
            return bad("edge range is empty");
        }
        if self.size_weights.iter().all(|&w| w == 0) {
            return bad("size distribution has no mass");
        }
        if !(0.0..=1.0).contains(&self.sign_bias) {
            return bad("sign bias outside [0, 1]");
        }
        if self.multiplicity_cap == 0 {
            return bad("multiplicity cap must be at least 1");
        }
        Ok(())
    }
}

/// Draws a valid oriented hypergraph; deterministic in the seed. Sampled
/// edge sizes are clamped to the available incidence capacity
/// (vertices × multiplicity cap).
pub fn random_instance(params: &GeneratorParams) -> Result<OrientedHypergraph, GenerateError> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let nv = rng.gen_range(params.vertex_range.0..=params.vertex_range.1);
    let ne = rng.gen_range(params.edge_range.0..=params.edge_range.1);
    let vertices: Vec<String> = (1..=nv).map(|i| format!("v{i}")).collect();
    let edges: Vec<String> = (1..=ne).map(|j| format!("e{j}")).collect();

    let total_weight: u32 = params.size_weights.iter().sum();
    let mut incidences = Vec::new();
    for e in &edges {
        let mut t = rng.gen_range(0..total_weight);
        let mut size = 0usize;
        for (s, &w) in params.size_weights.iter().enumerate() {
            if t < w {
                size = s;
                break;
            }
            t -= w;
        }
        let capacity = nv * params.multiplicity_cap as usize;
        let size = size.min(capacity);
        // Multiplicity per vertex for this edge; signs are per pair, so the
        // result is strict by construction.
        let mut mult = vec![0u32; nv];
        for _ in 0..size {
            let open: Vec<usize> = (0..nv)
                .filter(|&i| mult[i] < params.multiplicity_cap)
                .collect();
            let i = open[rng.gen_range(0..open.len())];
            mult[i] += 1;
        }
        for (i, &m) in mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let sign = if rng.gen_bool(params.sign_bias) {
                Sign::Plus
            } else {
                Sign::Minus
            };
            for k in 1..=m {
                incidences.push(Incidence::new(vertices[i].as_str(), e.as_str(), k, sign));
            }
        }
    }
    Ok(
        OrientedHypergraph::build(vertices, edges, incidences, true)
            .expect("generator output is valid by construction"),
    )
}

/// Visits every connected simple incidence structure with
/// `|V| + |E| <= max_total`, signs all `+`. Labeled structures; no
/// isomorphism reduction.
pub fn for_each_connected_structure(
    max_total: usize,
    mut f: impl FnMut(&OrientedHypergraph),
) {
    for nv in 0..=max_total {
        for ne in 0..=(max_total - nv) {
            let cells = nv * ne;
            if cells > usize::BITS as usize - 2 {
                continue;
            }
            let vertices: Vec<VertexId> = (1..=nv).map(|i| VertexId::new(format!("v{i}"))).collect();
            let edges: Vec<EdgeId> = (1..=ne).map(|j| EdgeId::new(format!("e{j}"))).collect();
            for mask in 0u64..(1u64 << cells) {
                if !mask_connected(nv, ne, |i, j| mask & (1 << (i * ne + j)) != 0) {
                    continue;
                }
                let mut incidences = Vec::new();
                for (i, v) in vertices.iter().enumerate() {
                    for (j, e) in edges.iter().enumerate() {
                        if mask & (1 << (i * ne + j)) != 0 {
                            incidences.push(Incidence::simple(
                                v.as_str(),
                                e.as_str(),
                                Sign::Plus,
                            ));
                        }
                    }
                }
                let g = OrientedHypergraph::build(
                    vertices.clone(),
                    edges.clone(),
                    incidences,
                    true,
                )
                .expect("structure is valid");
                f(&g);
            }
        }
    }
}

/// Visits every connected structure with `|V| + |E| <= max_total`,
/// multiplicities up to `max_mult` per pair, and at most `max_incidences`
/// incidences in total; signs all `+` (strict).
pub fn for_each_connected_multiplicity_structure(
    max_total: usize,
    max_incidences: usize,
    max_mult: u32,
    mut f: impl FnMut(&OrientedHypergraph),
) {
    for nv in 0..=max_total {
        for ne in 0..=(max_total - nv) {
            let cells = nv * ne;
            let vertices: Vec<VertexId> = (1..=nv).map(|i| VertexId::new(format!("v{i}"))).collect();
            let edges: Vec<EdgeId> = (1..=ne).map(|j| EdgeId::new(format!("e{j}"))).collect();
            let mut mult = vec![0u32; cells];
            visit_mult(
                0,
                0,
                max_incidences,
                max_mult,
                &mut mult,
                &mut |mult: &[u32]| {
                    if !mask_connected(nv, ne, |i, j| mult[i * ne + j] > 0) {
                        return;
                    }
                    let mut incidences = Vec::new();
                    for i in 0..nv {
                        for j in 0..ne {
                            for k in 1..=mult[i * ne + j] {
                                incidences.push(Incidence::new(
                                    vertices[i].as_str(),
                                    edges[j].as_str(),
                                    k,
                                    Sign::Plus,
                                ));
                            }
                        }
                    }
                    let g = OrientedHypergraph::build(
                        vertices.clone(),
                        edges.clone(),
                        incidences,
                        true,
                    )
                    .expect("structure is valid");
                    f(&g);
                },
            );
        }
    }
}

fn visit_mult(
    cell: usize,
    used: usize,
    max_incidences: usize,
    max_mult: u32,
    mult: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    if cell == mult.len() {
        f(mult);
        return;
    }
    for m in 0..=max_mult {
        if used + m as usize > max_incidences {
            break;
        }
        mult[cell] = m;
        visit_mult(cell + 1, used + m as usize, max_incidences, max_mult, mult, f);
    }
    mult[cell] = 0;
}

/// Connectivity over `V ∪ E` given the incidence predicate; the empty
/// structure and singletons count as connected.
fn mask_connected(nv: usize, ne: usize, incident: impl Fn(usize, usize) -> bool) -> bool {
    let n = nv + ne;
    if n <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..nv {
        for j in 0..ne {
            if incident(i, j) {
                let a = find(&mut parent, i);
                let b = find(&mut parent, nv + j);
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let root = find(&mut parent, 0);
    (1..n).all(|x| find(&mut parent, x) == root)
}

/// Builds a balanced flower variant selected by the seed: a signed-graph
/// circle, a parallel edge bundle, an edge-theta, or a compatible
/// subdivision of one of those.
pub fn random_balanced_flower(seed: u64) -> OrientedHypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5f10_77e5);
    let base = match rng.gen_range(0..3u32) {
        0 => {
            // Circle of length k with compatibly signed 2-edges.
            let k = rng.gen_range(2..=6usize);
            let vertices: Vec<String> = (1..=k).map(|i| format!("c{i}")).collect();
            let edges: Vec<String> = (1..=k).map(|i| format!("f{i}")).collect();
            let mut incidences = Vec::new();
            for i in 0..k {
                incidences.push(Incidence::simple(
                    vertices[i].as_str(),
                    edges[i].as_str(),
                    Sign::Plus,
                ));
                incidences.push(Incidence::simple(
                    vertices[(i + 1) % k].as_str(),
                    edges[i].as_str(),
                    Sign::Minus,
                ));
            }
            OrientedHypergraph::build(vertices, edges, incidences, true).unwrap()
        }
        1 => {
            // Two parallel k-edges, all +.
            let k = rng.gen_range(2..=5usize);
            let vertices: Vec<&str> = ["a", "b", "c", "d", "g"][..k].to_vec();
            let mut incidences = Vec::new();
            for e in ["p", "q"] {
                for v in &vertices {
                    incidences.push(Incidence::simple(*v, e, Sign::Plus));
                }
            }
            OrientedHypergraph::build(vertices, ["p", "q"], incidences, true).unwrap()
        }
        _ => {
            // Edge-theta: two 3-edges joined by three disjoint paths, one of
            // them lengthened; orientation forced balanced afterwards.
            let g = OrientedHypergraph::from_edge_lists(
                &["x1", "x2", "x3", "y"],
                &[
                    ("p", &[("x1", Sign::Plus), ("x2", Sign::Plus), ("x3", Sign::Plus)]),
                    ("q", &[("x1", Sign::Plus), ("x2", Sign::Plus), ("y", Sign::Plus)]),
                    ("r", &[("x3", Sign::Plus), ("y", Sign::Plus)]),
                ],
            )
            .unwrap();
            analysis::balanced_orientation(&g, &Limits::default())
                .expect("within limits")
                .expect("edge-theta shape is balanceable")
        }
    };
    // Optionally apply a couple of compatible subdivisions; the result stays
    // a balanced flower.
    let mut g = base;
    for _ in 0..rng.gen_range(0..3u32) {
        let e = g.edges()[rng.gen_range(0..g.edges().len())].clone();
        let all: Vec<_> = g.incidences_of_edge(&e).map(|i| i.to_ref()).collect();
        if all.len() < 2 {
            continue;
        }
        let cut = rng.gen_range(1..all.len());
        let (p1, p2) = all.split_at(cut);
        let s1 = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        g = transforms::subdivide_edge(&g, &e, p1, p2, s1, s1.flip())
            .expect("valid bipartition")
            .hypergraph;
    }
    g
}

/// Builds a balanced hypercircle: `k` balanced pseudo-flowers joined through
/// a hub k-edge at fresh thorns, with the thorns contracted away.
pub fn random_balanced_hypercircle(seed: u64) -> OrientedHypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let k = rng.gen_range(2..=3usize);
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<String> = Vec::new();
    let mut incidences: Vec<Incidence> = Vec::new();
    let mut thorns: Vec<String> = Vec::new();
    for part in 1..=k {
        let flower = random_balanced_flower(seed.wrapping_mul(31).wrapping_add(part as u64));
        let tag = |s: &str| format!("P{part}.{s}");
        for v in flower.vertices() {
            vertices.push(tag(v.as_str()));
        }
        for e in flower.edges() {
            edges.push(tag(e.as_str()));
        }
        for i in flower.incidences() {
            incidences.push(Incidence::new(
                tag(i.vertex.as_str()),
                tag(i.edge.as_str()),
                i.slot,
                i.sign,
            ));
        }
        // Thorn on a random briar-to-be.
        let briar = flower.edges()[rng.gen_range(0..flower.edges().len())].clone();
        let t = format!("t{part}");
        incidences.push(Incidence::simple(
            t.as_str(),
            tag(briar.as_str()),
            if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus },
        ));
        vertices.push(t.clone());
        thorns.push(t);
    }
    // Hub k-edge on the thorns.
    edges.push("hub".to_owned());
    for t in &thorns {
        incidences.push(Incidence::simple(
            t.as_str(),
            "hub",
            if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus },
        ));
    }
    let mut g = OrientedHypergraph::build(vertices, edges, incidences, true)
        .expect("hypercircle assembly is valid");
    for t in &thorns {
        g = transforms::contract_2vertex(&g, &VertexId::new(t.as_str()))
            .expect("thorns have degree 2 in distinct edges");
    }
    g
}
