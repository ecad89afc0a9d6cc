//! The position graph `G(w)` of a word, and the graph predicates the
//! rest of the crate builds on.
//!
//! `G(w)` has vertex set `{1..N}` for a word of length `N` and an edge
//! `{i, j}` with `i < j` exactly when the letter at position `i` is
//! strictly smaller than the letter at position `j`. Graphs are plain
//! edge lists over 1-based vertices; everything here is desk-scale.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::Word;

/// Default order cap for simple-cycle enumeration; the cycle count is
/// exponential in the order.
pub const DEFAULT_CYCLE_ORDER_BOUND: usize = 12;

/// An undirected simple graph on vertices `1..=order`.
///
/// Serializes as `{"order": N, "edges": [[i, j], ...]}` with `i < j` and
/// the edge list sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawGraph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Graph> {
        Graph::new(raw.order, raw.edges)
    }
}

impl Graph {
    /// Builds a graph, normalizing endpoint order and dropping duplicate
    /// edges. Self-loops and out-of-range endpoints are rejected.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for x in [u, v] {
                if x == 0 || x > order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph {
            order,
            edges: set.into_iter().collect(),
        })
    }

    pub fn empty(order: usize) -> Graph {
        Graph {
            order,
            edges: Vec::new(),
        }
    }

    pub fn complete(order: usize) -> Graph {
        let edges = (1..=order)
            .flat_map(|i| (i + 1..=order).map(move |j| (i, j)))
            .collect();
        Graph { order, edges }
    }

    /// The cycle `1 - 2 - ... - order - 1` (order >= 3).
    pub fn cycle(order: usize) -> Graph {
        assert!(order >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..order).map(|i| (i, i + 1)).collect();
        edges.push((1, order));
        edges.sort();
        Graph { order, edges }
    }

    /// The path `1 - 2 - ... - order`.
    pub fn path(order: usize) -> Graph {
        Graph {
            order,
            edges: (1..order).map(|i| (i, i + 1)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Adjacency lists indexed by vertex (index 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// DOT rendering; vertex labels are positions, annotated with the
    /// word's letters when one is supplied.
    pub fn to_dot(&self, word: Option<&Word>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 1..=self.order {
            match word {
                Some(w) => {
                    let ch = crate::words::Alphabet::letter_char(w.letters()[v - 1]);
                    let _ = writeln!(out, "  {v} [label=\"{v}:{ch}\"];");
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// A graph remembered together with the word that produced it; the graph
/// is exactly `build_lyndon_graph(word)`, label for label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledLyndonGraph {
    word: Word,
    graph: Graph,
}

impl LabeledLyndonGraph {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

/// Builds `G(w)`: edge `{i, j}` with `i < j` iff `w_i` is strictly
/// smaller than `w_j` in the alphabet order. The empty word yields the
/// empty graph.
pub fn build_lyndon_graph(w: &Word) -> LabeledLyndonGraph {
    let s = w.letters();
    let n = s.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if s[i] < s[j] {
                edges.push((i + 1, j + 1));
            }
        }
    }
    LabeledLyndonGraph {
        word: w.clone(),
        graph: Graph { order: n, edges },
    }
}

/// Connected components as sorted vertex sets, listed by minimum element.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let mut seen = vec![false; g.order() + 1];
    let mut out = Vec::new();
    for start in 1..=g.order() {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.order() >= 1 && components(g).len() == 1
}

/// Number of components that contain at least one edge.
pub fn nontrivial_component_count(g: &Graph) -> usize {
    let adj = g.adjacency();
    components(g)
        .iter()
        .filter(|comp| comp.iter().any(|&v| !adj[v].is_empty()))
        .count()
}

/// Positions of each alphabet letter: part `t` holds the 1-based
/// positions `i` with `w_i` equal to letter `t`. Every part is an
/// independent set of `G(w)` and the parts partition the positions.
pub fn letter_partition(w: &Word) -> Vec<Vec<usize>> {
    let mut parts = vec![Vec::new(); w.alphabet().size()];
    for (i, &l) in w.letters().iter().enumerate() {
        parts[l as usize].push(i + 1);
    }
    parts
}

/// The lexicographically smallest edge `{u, v}` whose endpoint degrees
/// sum to the order of the graph, if any.
pub fn has_degree_sum_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let mut deg = vec![0usize; n + 1];
    for &(u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| deg[u] + deg[v] == n)
}

fn for_each_simple_cycle<F>(g: &Graph, min_len: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> bool, // return false to stop early
{
    // Each cycle is produced once in canonical form: it starts at its
    // minimum vertex and its second vertex is the lesser of the two
    // neighbors of the start on the cycle.
    let adj = g.adjacency();
    let n = g.order();
    let mut on_path = vec![false; n + 1];
    let mut path: Vec<usize> = Vec::new();

    fn dfs(
        adj: &[Vec<usize>],
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        min_len: usize,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let v = *path.last().unwrap();
        for &u in &adj[v] {
            if u == start {
                if path.len() >= min_len.max(3) && path[1] < path[path.len() - 1] {
                    if !visit(path) {
                        return false;
                    }
                }
            } else if u > start && !on_path[u] {
                on_path[u] = true;
                path.push(u);
                let keep_going = dfs(adj, start, path, on_path, min_len, visit);
                path.pop();
                on_path[u] = false;
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }

    for start in 1..=n {
        on_path[start] = true;
        path.push(start);
        let keep_going = dfs(&adj, start, &mut path, &mut on_path, min_len, &mut visit);
        path.pop();
        on_path[start] = false;
        if !keep_going {
            return;
        }
    }
}

/// Every simple cycle of length at least `min_len`, each reported once
/// as a vertex sequence in canonical form. Refuses graphs with more than
/// `max_order` vertices.
pub fn enumerate_simple_cycles(
    g: &Graph,
    min_len: usize,
    max_order: usize,
) -> Result<Vec<Vec<usize>>> {
    if g.order() > max_order {
        return Err(Error::BudgetExceeded(format!(
            "cycle enumeration on {} vertices exceeds bound {}",
            g.order(),
            max_order
        )));
    }
    let mut out = Vec::new();
    for_each_simple_cycle(g, min_len, |cycle| {
        out.push(cycle.to_vec());
        true
    });
    Ok(out)
}

fn chord_count(g: &Graph, cycle: &[usize]) -> usize {
    let k = cycle.len();
    let mut count = 0;
    for a in 0..k {
        for b in a + 1..k {
            let consecutive = b == a + 1 || (a == 0 && b == k - 1);
            if !consecutive && g.has_edge(cycle[a], cycle[b]) {
                count += 1;
            }
        }
    }
    count
}

/// Whether every simple cycle of length at least `r` has at least `s`
/// chords (edges of the graph joining non-consecutive cycle vertices).
/// Vacuously true when no such cycle exists. Requires `r > s >= 1`.
pub fn is_rs_chordal(g: &Graph, r: usize, s: usize) -> Result<bool> {
    if s < 1 || r <= s {
        return Err(Error::InvalidArgument(format!(
            "(r, s)-chordality needs r > s >= 1, got r={r}, s={s}"
        )));
    }
    if g.order() > DEFAULT_CYCLE_ORDER_BOUND {
        return Err(Error::BudgetExceeded(format!(
            "chordality check on {} vertices exceeds bound {}",
            g.order(),
            DEFAULT_CYCLE_ORDER_BOUND
        )));
    }
    let mut ok = true;
    for_each_simple_cycle(g, r, |cycle| {
        if chord_count(g, cycle) < s {
            ok = false;
            return false;
        }
        true
    });
    Ok(ok)
}

/// The subgraph induced on a set of vertices, relabeled 1..|S|
/// order-preservingly. Duplicate vertices in the input are ignored.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    let mut set: Vec<usize> = vertices.to_vec();
    set.sort_unstable();
    set.dedup();
    for &v in &set {
        if v == 0 || v > g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    let mut index = vec![0usize; g.order() + 1];
    for (i, &v) in set.iter().enumerate() {
        index[v] = i + 1;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| index[u] != 0 && index[v] != 0)
        .map(|&(u, v)| (index[u], index[v]))
        .collect();
    Ok(Graph {
        order: set.len(),
        edges,
    })
}
