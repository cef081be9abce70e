//! Minimal simple undirected graph with labelled vertices.

/// Simple undirected graph. Vertices are dense indices with string
/// labels; parallel edges and self-loops are rejected at insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph {
            labels,
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Graph on `n` vertices labelled "0".."n-1".
    pub fn unlabeled(n: usize) -> Self {
        Graph::new((0..n).map(|i| i.to_string()).collect())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::unlabeled(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loops are not allowed");
        assert!(u < self.labels.len() && v < self.labels.len(), "vertex out of range");
        assert!(!self.adj[u].contains(&v), "parallel edge {u}-{v}");
        let pos_u = self.adj[u].partition_point(|&x| x < v);
        self.adj[u].insert(pos_u, v);
        let pos_v = self.adj[v].partition_point(|&x| x < u);
        self.adj[v].insert(pos_v, u);
        self.edge_count += 1;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    /// Edges as (u, v) with u < v, ordered by index.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.adj.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Length of a shortest cycle, or `None` for a forest.
    ///
    /// Runs one breadth-first search per start vertex; an edge closing
    /// back into the tree at depth d from two sides witnesses a closed
    /// walk, and the minimum such walk over all starts is the girth.
    pub fn girth(&self) -> Option<usize> {
        let n = self.labels.len();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let cycle = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// One `"<label u> <label v>"` line per edge, sorted; the debug dump
    /// format.
    pub fn to_edge_list_string(&self) -> String {
        let mut lines: Vec<String> = self
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = if self.labels[u] <= self.labels[v] {
                    (&self.labels[u], &self.labels[v])
                } else {
                    (&self.labels[v], &self.labels[u])
                };
                format!("{a} {b}")
            })
            .collect();
        lines.sort();
        lines.join("\n") + if lines.is_empty() { "" } else { "\n" }
    }
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::unlabeled(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Complete bipartite graph with parts of size `a` and `b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::unlabeled(a + b);
    for u in 0..a {
        for v in 0..b {
            g.add_edge(u, a + v);
        }
    }
    g
}

/// The Petersen graph: outer 5-cycle, inner 5-star, spokes.
pub fn petersen() -> Graph {
    let mut g = Graph::unlabeled(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}
