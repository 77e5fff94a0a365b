//! The bipartite incidence graph and the graph algorithms the analysis layer
//! runs on it.
//!
//! Nodes 0..nv are the hypergraph's vertices, nodes nv..nv+ne its edges; one
//! graph link per incidence, in incidence order. Parallel links appear
//! exactly when some pair has multiplicity two or more.

use crate::hypergraph::{Element, OrientedHypergraph, Sign};

/// A walk through the incidence graph: node sequence plus link sequence.
pub type NodeLinkPath = (Vec<usize>, Vec<usize>);

/// One link of the incidence graph: an incidence seen as a graph edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphLink {
    /// Node index of the hypergraph vertex (left side).
    pub vertex: usize,
    /// Node index of the hypergraph edge (right side, offset by `nv`).
    pub edge: usize,
    pub sign: Sign,
    /// Index into the source hypergraph's incidence list.
    pub incidence: usize,
}

/// Oriented bipartite incidence graph of an oriented hypergraph.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    pub vertex_nodes: usize,
    pub edge_nodes: usize,
    pub links: Vec<GraphLink>,
    adj: Vec<Vec<(usize, usize)>>, // (neighbor node, link index)
}

impl IncidenceGraph {
    pub fn from_hypergraph(g: &OrientedHypergraph) -> Self {
        let nv = g.vertices().len();
        let ne = g.edges().len();
        let mut links = Vec::with_capacity(g.incidences().len());
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv + ne];
        for (idx, inc) in g.incidences().iter().enumerate() {
            let a = g.vertex_position(&inc.vertex).expect("validated");
            let b = nv + g.edge_position(&inc.edge).expect("validated");
            adj[a].push((b, idx));
            adj[b].push((a, idx));
            links.push(GraphLink {
                vertex: a,
                edge: b,
                sign: inc.sign,
                incidence: idx,
            });
        }
        IncidenceGraph {
            vertex_nodes: nv,
            edge_nodes: ne,
            links,
            adj,
        }
    }

    pub fn node_count(&self) -> usize {
        self.vertex_nodes + self.edge_nodes
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.links.iter().all(|l| seen.insert((l.vertex, l.edge)))
    }

    pub fn degree_of_node(&self, n: usize) -> usize {
        self.adj[n].len()
    }

    pub fn neighbors(&self, n: usize) -> &[(usize, usize)] {
        &self.adj[n]
    }

    /// Element corresponding to a node index.
    pub fn element_of(&self, g: &OrientedHypergraph, node: usize) -> Element {
        if node < self.vertex_nodes {
            Element::Vertex(g.vertices()[node].clone())
        } else {
            Element::Edge(g.edges()[node - self.vertex_nodes].clone())
        }
    }

    /// Per-node component id plus component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.node_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Deterministic BFS spanning forest; returns one flag per link.
    pub fn spanning_forest(&self) -> Vec<bool> {
        let n = self.node_count();
        let mut in_forest = vec![false; n.max(self.links.len())];
        in_forest.truncate(self.links.len());
        in_forest.resize(self.links.len(), false);
        let mut visited = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &(w, link) in &self.adj[u] {
                    if !visited[w] {
                        visited[w] = true;
                        in_forest[link] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        in_forest
    }

    /// Unique forest path between two nodes as (node sequence, link sequence).
    /// Panics if the nodes are in different trees.
    pub fn forest_path(&self, forest: &[bool], from: usize, to: usize) -> (Vec<usize>, Vec<usize>) {
        let n = self.node_count();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut visited = vec![false; n];
        visited[from] = true;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &(w, link) in &self.adj[u] {
                if forest[link] && !visited[w] {
                    visited[w] = true;
                    prev[w] = Some((u, link));
                    queue.push_back(w);
                }
            }
        }
        assert!(visited[to], "nodes lie in different forest trees");
        let mut nodes = vec![to];
        let mut links = Vec::new();
        let mut cur = to;
        while let Some((p, link)) = prev[cur] {
            links.push(link);
            nodes.push(p);
            cur = p;
        }
        nodes.reverse();
        links.reverse();
        (nodes, links)
    }

    /// Biconnected components: returns one block id per link, the number of
    /// blocks, and the set of cut nodes. Parallel links share a block.
    pub fn blocks(&self) -> BlockDecomposition {
        let n = self.node_count();
        let m = self.links.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut block_of_link = vec![usize::MAX; m];
        let mut is_cut = vec![false; n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<usize> = Vec::new();
        let mut blocks = 0usize;

        // Iterative DFS; entries are (node, incoming link, adjacency cursor).
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0usize;
            while let Some(&mut (u, in_link, ref mut cursor)) = stack.last_mut() {
                if *cursor < self.adj[u].len() {
                    let (w, link) = self.adj[u][*cursor];
                    *cursor += 1;
                    if link == in_link {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push(link);
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, link, 0));
                    } else if disc[w] < disc[u] {
                        // Back link.
                        edge_stack.push(link);
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            // p closes a block; pop links up to the tree link (p,u).
                            if p != root || root_children >= 1 {
                                is_cut[p] = true;
                            }
                            let id = blocks;
                            blocks += 1;
                            while let Some(&top) = edge_stack.last() {
                                let l = &self.links[top];
                                let (a, b) = (l.vertex, l.edge);
                                // Pop while the link lies in the subtree of u or is (p,u).
                                if disc[a].max(disc[b]) >= disc[u] {
                                    block_of_link[top] = id;
                                    edge_stack.pop();
                                } else {
                                    break;
                                }
                            }
                        }
                    }
                }
            }
            // Root cut-vertex rule.
            is_cut[root] = root_children >= 2;
        }
        debug_assert!(block_of_link.iter().all(|&b| b != usize::MAX) || m == 0);

        // Count links per block to identify bridges (single-link blocks).
        let mut link_count = vec![0usize; blocks];
        for &b in &block_of_link {
            if b != usize::MAX {
                link_count[b] += 1;
            }
        }
        BlockDecomposition {
            block_of_link,
            block_count: blocks,
            links_per_block: link_count,
            is_cut_node: is_cut,
        }
    }

    /// Enumerates simple cycles as (node sequence, link sequence) pairs,
    /// each cycle reported once, anchored at its smallest node. `max_links`
    /// caps the cycle length in links; if any search branch is cut by that
    /// cap the `complete` flag comes back false. Exceeding the count cap
    /// aborts the enumeration with `None`.
    pub fn simple_cycles(
        &self,
        max_links: usize,
        max_count: usize,
    ) -> Option<(Vec<NodeLinkPath>, bool)> {
        let n = self.node_count();
        let mut out = Vec::new();
        let mut complete = true;
        let mut on_path = vec![false; n];
        let mut used_link = vec![false; self.links.len()];

        for anchor in 0..n {
            let mut node_path = vec![anchor];
            let mut link_path: Vec<usize> = Vec::new();
            on_path[anchor] = true;
            // Depth-first over links; only nodes >= anchor may be visited.
            let mut cursors = vec![0usize];
            while !cursors.is_empty() {
                let u = *node_path.last().unwrap();
                let cursor = cursors.last_mut().unwrap();
                if *cursor >= self.adj[u].len() {
                    cursors.pop();
                    if let Some(link) = link_path.pop() {
                        used_link[link] = false;
                    }
                    let popped = node_path.pop().unwrap();
                    if popped != anchor {
                        on_path[popped] = false;
                    }
                    continue;
                }
                let (w, link) = self.adj[u][*cursor];
                *cursor += 1;
                if used_link[link] || w < anchor {
                    continue;
                }
                if w == anchor {
                    // Cycle closed (length >= 2 by used_link exclusion).
                    if link_path.is_empty() {
                        continue;
                    }
                    // Report each cycle once: require the first link index to
                    // be smaller than the closing link index.
                    if link_path[0] < link {
                        let mut links = link_path.clone();
                        links.push(link);
                        if out.len() >= max_count {
                            return None;
                        }
                        out.push((node_path.clone(), links));
                    }
                    continue;
                }
                if on_path[w] {
                    continue;
                }
                if link_path.len() + 1 >= max_links {
                    // A longer walk might close into a cycle we will not see.
                    complete = false;
                    continue;
                }
                on_path[w] = true;
                node_path.push(w);
                link_path.push(link);
                used_link[link] = true;
                cursors.push(0);
            }
            on_path[anchor] = false;
        }
        Some((out, complete))
    }

    /// Enumerates simple paths between two distinct nodes as
    /// (node sequence, link sequence) pairs. Caps mirror `simple_cycles`.
    pub fn simple_paths(
        &self,
        from: usize,
        to: usize,
        max_links: usize,
        max_count: usize,
    ) -> Option<Vec<NodeLinkPath>> {
        let n = self.node_count();
        let mut out = Vec::new();
        let mut on_path = vec![false; n];
        on_path[from] = true;
        let mut node_path = vec![from];
        let mut link_path: Vec<usize> = Vec::new();
        let mut cursors = vec![0usize];
        while !cursors.is_empty() {
            let u = *node_path.last().unwrap();
            let cursor = cursors.last_mut().unwrap();
            if *cursor >= self.adj[u].len() {
                cursors.pop();
                node_path.pop();
                on_path[u] = false;
                link_path.pop();
                continue;
            }
            let (w, link) = self.adj[u][*cursor];
            *cursor += 1;
            if on_path[w] {
                continue;
            }
            if w == to {
                if out.len() >= max_count {
                    return None;
                }
                let mut nodes = node_path.clone();
                nodes.push(w);
                let mut links = link_path.clone();
                links.push(link);
                out.push((nodes, links));
                continue;
            }
            if link_path.len() + 1 >= max_links {
                continue;
            }
            on_path[w] = true;
            node_path.push(w);
            link_path.push(link);
            cursors.push(0);
        }
        Some(out)
    }

    /// Maximum number of internally disjoint paths between two distinct
    /// nodes, capped at `cap`; returns the paths as (nodes, links). Internal
    /// nodes and links are used at most once (Menger via unit capacities on
    /// split nodes and links).
    pub fn disjoint_paths(&self, from: usize, to: usize, cap: usize) -> Vec<NodeLinkPath> {
        // Arc list for a tiny max-flow: node v splits into v_in = 2v,
        // v_out = 2v+1 with capacity-1 arc between; each link becomes two
        // capacity-1 arcs (one per direction) between the outs and ins.
        let n = self.node_count();
        let mut arcs: Vec<(usize, usize, i32, usize)> = Vec::new(); // (from, to, cap, link+1 or 0)
        let source = 2 * from + 1; // out side of `from`
        let sink = 2 * to; // in side of `to`
        for v in 0..n {
            if v != from && v != to {
                arcs.push((2 * v, 2 * v + 1, 1, 0));
            } else {
                arcs.push((2 * v, 2 * v + 1, cap as i32, 0));
            }
        }
        for (li, l) in self.links.iter().enumerate() {
            let (a, b) = (l.vertex, l.edge);
            arcs.push((2 * a + 1, 2 * b, 1, li + 1));
            arcs.push((2 * b + 1, 2 * a, 1, li + 1));
        }
        // Residual representation.
        let node_total = 2 * n;
        let mut head: Vec<Vec<usize>> = vec![Vec::new(); node_total];
        let mut cap_vec: Vec<i32> = Vec::new();
        let mut dest: Vec<usize> = Vec::new();
        let mut tag: Vec<usize> = Vec::new();
        for &(u, w, c, t) in &arcs {
            head[u].push(cap_vec.len());
            dest.push(w);
            cap_vec.push(c);
            tag.push(t);
            head[w].push(cap_vec.len());
            dest.push(u);
            cap_vec.push(0);
            tag.push(t);
        }
        let mut flow = 0usize;
        while flow < cap {
            // BFS augmenting path.
            let mut prev_arc = vec![usize::MAX; node_total];
            let mut visited = vec![false; node_total];
            visited[source] = true;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(source);
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &head[u] {
                    if cap_vec[a] > 0 && !visited[dest[a]] {
                        visited[dest[a]] = true;
                        prev_arc[dest[a]] = a;
                        if dest[a] == sink {
                            break 'bfs;
                        }
                        queue.push_back(dest[a]);
                    }
                }
            }
            if !visited[sink] {
                break;
            }
            let mut cur = sink;
            while cur != source {
                let a = prev_arc[cur];
                cap_vec[a] -= 1;
                cap_vec[a ^ 1] += 1;
                cur = if a % 2 == 0 { dest[a + 1] } else { dest[a - 1] };
            }
            flow += 1;
        }
        // Decompose: walk flow-carrying forward arcs from the source,
        // removing each unit as it is traced. Link arcs alternate with split
        // arcs, so the walk needs no special casing.
        let orig_cap = |a: usize| arcs[a / 2].2;
        let mut paths = Vec::new();
        for _ in 0..flow {
            let mut nodes = vec![from];
            let mut links = Vec::new();
            let mut cur = source;
            while cur != sink {
                let a = *head[cur]
                    .iter()
                    .find(|&&a| a % 2 == 0 && cap_vec[a] < orig_cap(a))
                    .expect("flow decomposition stuck");
                cap_vec[a] += 1;
                cap_vec[a ^ 1] -= 1;
                if tag[a] > 0 {
                    links.push(tag[a] - 1);
                    nodes.push(dest[a] / 2);
                }
                cur = dest[a];
            }
            paths.push((nodes, links));
        }
        paths
    }
}

/// Result of the biconnected-component decomposition.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub block_of_link: Vec<usize>,
    pub block_count: usize,
    pub links_per_block: Vec<usize>,
    pub is_cut_node: Vec<bool>,
}

impl BlockDecomposition {
    /// A link is a bridge when it forms a block by itself.
    pub fn is_bridge(&self, link: usize) -> bool {
        self.links_per_block[self.block_of_link[link]] == 1
    }

    /// Blocks that contain a cycle, i.e. at least two links.
    pub fn cyclic_blocks(&self) -> Vec<usize> {
        (0..self.block_count)
            .filter(|&b| self.links_per_block[b] >= 2)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::OrientedHypergraph;

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
    fn triangle_incidence_graph_is_a_six_cycle() {
        let g = triangle();
        let ig = IncidenceGraph::from_hypergraph(&g);
        assert_eq!(ig.node_count(), 6);
        assert_eq!(ig.links.len(), 6);
        for n in 0..6 {
            assert_eq!(ig.degree_of_node(n), 2);
        }
        let (cycles, complete) = ig.simple_cycles(64, 1000).unwrap();
        assert!(complete);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].1.len(), 6);
    }

    #[test]
    fn parallel_incidences_make_parallel_links() {
        let g = OrientedHypergraph::build(
            ["v"],
            ["e"],
            [
                crate::hypergraph::Incidence::new("v", "e", 1, Sign::Plus),
                crate::hypergraph::Incidence::new("v", "e", 2, Sign::Plus),
            ],
            true,
        )
        .unwrap();
        let ig = IncidenceGraph::from_hypergraph(&g);
        assert!(!ig.is_simple());
        let (cycles, _) = ig.simple_cycles(64, 1000).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].1.len(), 2);
    }

    #[test]
    fn empty_graph_has_no_cycles() {
        let g = OrientedHypergraph::build(Vec::<&str>::new(), Vec::<&str>::new(), [], true)
            .unwrap();
        let ig = IncidenceGraph::from_hypergraph(&g);
        let (cycles, complete) = ig.simple_cycles(64, 10).unwrap();
        assert!(cycles.is_empty());
        assert!(complete);
    }

    #[test]
    fn forest_and_fundamental_counts_match() {
        let g = triangle();
        let ig = IncidenceGraph::from_hypergraph(&g);
        let forest = ig.spanning_forest();
        let non_forest = forest.iter().filter(|&&f| !f).count();
        assert_eq!(non_forest, 1);
    }

    #[test]
    fn blocks_find_bridges_and_cut_nodes() {
        // Triangle with a pendant 2-edge at u: two blocks, link to pendant is a bridge.
        let g = OrientedHypergraph::from_edge_lists(
            &["u", "v", "w", "x"],
            &[
                ("e1", &[("u", Sign::Plus), ("v", Sign::Minus)]),
                ("e2", &[("v", Sign::Plus), ("w", Sign::Minus)]),
                ("e3", &[("w", Sign::Plus), ("u", Sign::Minus)]),
                ("p", &[("u", Sign::Plus), ("x", Sign::Minus)]),
            ],
        )
        .unwrap();
        let ig = IncidenceGraph::from_hypergraph(&g);
        let blocks = ig.blocks();
        assert_eq!(blocks.cyclic_blocks().len(), 1);
        // The two links of edge p are bridges.
        let bridge_count = (0..ig.links.len()).filter(|&l| blocks.is_bridge(l)).count();
        assert_eq!(bridge_count, 2);
        // u is a cut node.
        let u_node = 0;
        assert!(blocks.is_cut_node[u_node]);
    }

    #[test]
    fn disjoint_paths_count_parallel_links() {
        let g = OrientedHypergraph::build(
            ["v"],
            ["e"],
            [
                crate::hypergraph::Incidence::new("v", "e", 1, Sign::Plus),
                crate::hypergraph::Incidence::new("v", "e", 2, Sign::Plus),
                crate::hypergraph::Incidence::new("v", "e", 3, Sign::Plus),
            ],
            true,
        )
        .unwrap();
        let ig = IncidenceGraph::from_hypergraph(&g);
        let paths = ig.disjoint_paths(0, 1, 3);
        assert_eq!(paths.len(), 3);
    }

    #[test]
    fn disjoint_paths_respect_internal_nodes() {
        // Theta of paths through distinct middle vertices: 3 disjoint paths
        // from u to w; through a single shared vertex only 1.
        let g = OrientedHypergraph::from_edge_lists(
            &["u", "m1", "m2", "m3", "w"],
            &[
                ("a1", &[("u", Sign::Plus), ("m1", Sign::Minus)]),
                ("a2", &[("m1", Sign::Plus), ("w", Sign::Minus)]),
                ("b1", &[("u", Sign::Plus), ("m2", Sign::Minus)]),
                ("b2", &[("m2", Sign::Plus), ("w", Sign::Minus)]),
                ("c1", &[("u", Sign::Plus), ("m3", Sign::Minus)]),
                ("c2", &[("m3", Sign::Plus), ("w", Sign::Minus)]),
            ],
        )
        .unwrap();
        let ig = IncidenceGraph::from_hypergraph(&g);
        let u = 0;
        let w = 4;
        assert_eq!(ig.disjoint_paths(u, w, 4).len(), 3);
        // u to m1: the direct path plus one route around through w; the two
        // w-routes collide at w.
        let m1 = 1;
        assert_eq!(ig.disjoint_paths(u, m1, 4).len(), 2);
    }

    #[test]
    fn simple_paths_enumeration_is_exhaustive() {
        let g = triangle();
        let ig = IncidenceGraph::from_hypergraph(&g);
        // Between u and v: along e1, or the long way via e3, w, e2.
        let paths = ig.simple_paths(0, 1, 16, 100).unwrap();
        assert_eq!(paths.len(), 2);
    }
}
