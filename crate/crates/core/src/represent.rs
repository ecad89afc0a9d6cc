//! Deciding whether a graph is the position graph of some word, up to
//! isomorphism: exhaustive word search with pruning, a small-order
//! canonical form, and the characterization audit built on both.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    build_lyndon_graph, has_degree_sum_pair, is_connected, is_rs_chordal, letter_partition,
    Graph,
};
use crate::words::{words_of_length, Alphabet, Word};

/// Largest order supported by the canonical form and the isomorphism
/// backtracker.
pub const MAX_CANONICAL_ORDER: usize = 10;

/// Largest order for exhaustive isomorph-free graph enumeration
/// (2^(N choose 2) labeled graphs are generated and deduplicated).
pub const MAX_AUDIT_ORDER: usize = 6;

/// Default cap on the number of words a representability scan may visit.
pub const DEFAULT_WORD_BUDGET: u64 = 20_000_000;

/// A complete isomorphism invariant at small order: the minimum packed
/// upper-triangle adjacency encoding over all vertex relabelings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    certificate: Vec<u8>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn certificate(&self) -> &[u8] {
        &self.certificate
    }

    pub fn hex(&self) -> String {
        let mut s = format!("{:02x}", self.order);
        for b in &self.certificate {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    /// The canonically labeled representative graph this form encodes.
    pub fn representative(&self) -> Graph {
        let n = self.order;
        let mut edges = Vec::new();
        let mut idx = 0usize;
        for k in 2..=n {
            for j in 1..k {
                let byte = self.certificate[idx / 8];
                if byte >> (7 - idx % 8) & 1 == 1 {
                    edges.push((j, k));
                }
                idx += 1;
            }
        }
        Graph::new(n, edges).expect("certificate encodes a valid graph")
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.hex())
    }
}

/// Bit sequence for one relabeling: for new label k = 2..N, for j < k,
/// the adjacency bit of (j, k). At order <= 10 this is at most 45 bits,
/// so a u64 holds the whole encoding.
struct CanonSearch {
    adj: Vec<u64>, // adjacency bitmasks of the input graph, 0-based
    n: usize,
    best: u64,
    assigned: Vec<usize>, // original vertex placed at each new label
    used: u64,
}

impl CanonSearch {
    fn run(g: &Graph) -> u64 {
        let n = g.order();
        let mut adj = vec![0u64; n];
        for &(u, v) in g.edges() {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        let mut search = CanonSearch {
            adj,
            n,
            best: u64::MAX,
            assigned: Vec::with_capacity(n),
            used: 0,
        };
        search.extend(0, 0);
        search.best
    }

    fn total_bits(n: usize) -> u32 {
        (n * (n - 1) / 2) as u32
    }

    /// Depth-first over partial relabelings, pruning whenever the bit
    /// prefix already exceeds the best complete encoding found.
    fn extend(&mut self, prefix: u64, bits_so_far: u32) {
        let depth = self.assigned.len();
        if depth == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        let new_bits = depth as u32; // adjacency to the `depth` already-placed vertices
        for v in 0..self.n {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut row = 0u64;
            for (slot, &w) in self.assigned.iter().enumerate() {
                if self.adj[v] >> w & 1 == 1 {
                    row |= 1 << (new_bits - 1 - slot as u32);
                }
            }
            let prefix2 = (prefix << new_bits) | row;
            let bits2 = bits_so_far + new_bits;
            if self.best != u64::MAX {
                let best_prefix = self.best >> (Self::total_bits(self.n) - bits2);
                if prefix2 > best_prefix {
                    continue;
                }
            }
            self.used |= 1 << v;
            self.assigned.push(v);
            self.extend(prefix2, bits2);
            self.assigned.pop();
            self.used &= !(1 << v);
        }
    }
}

/// Label-invariant complete certificate for graphs of order at most
/// [`MAX_CANONICAL_ORDER`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "canonical form on {n} vertices exceeds bound {MAX_CANONICAL_ORDER}"
        )));
    }
    let encoding = CanonSearch::run(g);
    let total = n * (n - 1) / 2;
    let n_bytes = total.div_ceil(8);
    let mut certificate = vec![0u8; n_bytes];
    for i in 0..total {
        if encoding >> (total - 1 - i) & 1 == 1 {
            certificate[i / 8] |= 1 << (7 - i % 8);
        }
    }
    Ok(CanonicalForm {
        order: n,
        certificate,
    })
}

/// Searches for a vertex bijection carrying edges of `g` exactly onto
/// edges of `h`. The returned map sends vertex `i` of `g` to
/// `mapping[i - 1]` in `h`, and is re-verified before being returned.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER || h.order() > MAX_CANONICAL_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "isomorphism test beyond order {MAX_CANONICAL_ORDER}"
        )));
    }
    if n != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut deg_g: Vec<usize> = (1..=n).map(|v| g.degree(v)).collect();
    let mut deg_h: Vec<usize> = (1..=n).map(|v| h.degree(v)).collect();
    let degrees_g = deg_g.clone();
    let degrees_h = deg_h.clone();
    deg_g.sort_unstable();
    deg_h.sort_unstable();
    if deg_g != deg_h {
        return Ok(None);
    }

    // order g's vertices by decreasing degree so constrained vertices
    // are assigned first
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(degrees_g[v - 1]));

    let mut mapping = vec![0usize; n + 1]; // g -> h, 0 = unassigned
    let mut taken = vec![false; n + 1];

    fn assign(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        degrees_g: &[usize],
        degrees_h: &[usize],
        mapping: &mut Vec<usize>,
        taken: &mut Vec<bool>,
        depth: usize,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for cand in 1..=h.order() {
            if taken[cand] || degrees_h[cand - 1] != degrees_g[v - 1] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&w| {
                let img = mapping[w];
                g.has_edge(v, w) == h.has_edge(cand, img)
            });
            if consistent {
                mapping[v] = cand;
                taken[cand] = true;
                if assign(g, h, order, degrees_g, degrees_h, mapping, taken, depth + 1) {
                    return true;
                }
                mapping[v] = 0;
                taken[cand] = false;
            }
        }
        false
    }

    if !assign(
        g,
        h,
        &order,
        &degrees_g,
        &degrees_h,
        &mut mapping,
        &mut taken,
        0,
    ) {
        return Ok(None);
    }

    let result: Vec<usize> = (1..=n).map(|v| mapping[v]).collect();
    // verify before returning
    for u in 1..=n {
        for v in u + 1..=n {
            if g.has_edge(u, v) != h.has_edge(result[u - 1], result[v - 1]) {
                return Err(Error::Inconsistency(
                    "isomorphism backtracker produced an invalid mapping".into(),
                ));
            }
        }
    }
    Ok(Some(result))
}

/// Outcome of a representability search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    Representable { witness: Word },
    NotRepresentable,
    BoundExceeded,
}

#[derive(Debug, Clone, Serialize)]
pub struct RepresentabilityResult {
    pub graph: Graph,
    pub alphabet: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub words_examined: u64,
}

impl RepresentabilityResult {
    pub fn witness(&self) -> Option<&Word> {
        match &self.verdict {
            Verdict::Representable { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn is_representable(&self) -> bool {
        matches!(self.verdict, Verdict::Representable { .. })
    }
}

/// Size multisets of partitions of `g`'s vertices into at most `n`
/// independent sets (proper colorings with unordered color classes).
/// Used to prune the word scan; `None` when the enumeration would be
/// bigger than the scan it is meant to save.
fn independent_partition_sizes(g: &Graph, n: usize) -> Option<BTreeSet<Vec<usize>>> {
    let order = g.order();
    if (n as f64).powi(order as i32) > 1e6 {
        return None;
    }
    let adj = g.adjacency();
    let mut sizes = BTreeSet::new();
    let mut coloring = vec![usize::MAX; order + 1];

    fn go(
        v: usize,
        order: usize,
        n: usize,
        adj: &[Vec<usize>],
        coloring: &mut Vec<usize>,
        sizes: &mut BTreeSet<Vec<usize>>,
    ) {
        if v > order {
            let mut counts = vec![0usize; n];
            for &c in &coloring[1..=order] {
                counts[c] += 1;
            }
            counts.sort_unstable();
            sizes.insert(counts);
            return;
        }
        for color in 0..n {
            if adj[v]
                .iter()
                .all(|&u| u > v || coloring[u] != color)
            {
                coloring[v] = color;
                go(v + 1, order, n, adj, coloring, sizes);
                coloring[v] = usize::MAX;
            }
        }
    }

    go(1, order, n, &adj, &mut coloring, &mut sizes);
    Some(sizes)
}

fn ascent_pairs(s: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] < s[j] {
                count += 1;
            }
        }
    }
    count
}

/// Scans all `n^N` words of length `N = g.order()` in lexicographic
/// order for one whose position graph is isomorphic to `g`. Returns the
/// first witness, or not-representable after the complete scan. Words
/// whose ascent-pair count or letter-class size multiset cannot match
/// are skipped without an isomorphism test.
pub fn find_representing_word(g: &Graph, n: usize, budget: u64) -> Result<RepresentabilityResult> {
    let alphabet = Alphabet::new(n)?;
    let order = g.order();
    let space = (n as u128).checked_pow(order as u32);
    let too_big = match space {
        Some(s) => s > budget as u128,
        None => true,
    };
    if too_big || order > MAX_CANONICAL_ORDER {
        return Ok(RepresentabilityResult {
            graph: g.clone(),
            alphabet: n,
            verdict: Verdict::BoundExceeded,
            words_examined: 0,
        });
    }

    let target_edges = g.edge_count();
    let feasible_sizes = independent_partition_sizes(g, n);
    let mut examined = 0u64;
    for w in words_of_length(alphabet, order) {
        examined += 1;
        if ascent_pairs(w.letters()) != target_edges {
            continue;
        }
        if let Some(feasible) = &feasible_sizes {
            let mut sizes: Vec<usize> =
                letter_partition(&w).iter().map(|p| p.len()).collect();
            sizes.sort_unstable();
            if !feasible.contains(&sizes) {
                continue;
            }
        }
        let candidate = build_lyndon_graph(&w);
        if are_isomorphic(candidate.graph(), g)?.is_some() {
            return Ok(RepresentabilityResult {
                graph: g.clone(),
                alphabet: n,
                verdict: Verdict::Representable { witness: w },
                words_examined: examined,
            });
        }
    }
    Ok(RepresentabilityResult {
        graph: g.clone(),
        alphabet: n,
        verdict: Verdict::NotRepresentable,
        words_examined: examined,
    })
}

/// Buckets every word of length `len` over `n` letters by the canonical
/// form of its position graph.
pub fn classify_words(
    len: usize,
    n: usize,
    budget: u64,
) -> Result<BTreeMap<CanonicalForm, Vec<Word>>> {
    let alphabet = Alphabet::new(n)?;
    let space = (n as u128).checked_pow(len as u32);
    if space.is_none() || space.unwrap() > budget as u128 {
        return Err(Error::BudgetExceeded(format!(
            "classifying {n}^{len} words exceeds budget {budget}"
        )));
    }
    if len > MAX_CANONICAL_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "classification needs canonical forms beyond order {MAX_CANONICAL_ORDER}"
        )));
    }
    let mut buckets: BTreeMap<CanonicalForm, Vec<Word>> = BTreeMap::new();
    for w in words_of_length(alphabet, len) {
        let cf = canonical_form(build_lyndon_graph(&w).graph())?;
        buckets.entry(cf).or_default().push(w);
    }
    Ok(buckets)
}

/// Whether the graph admits a proper coloring with at most 3 colors.
pub fn is_three_colorable(g: &Graph) -> bool {
    let adj = g.adjacency();
    let order = g.order();
    let mut coloring = vec![usize::MAX; order + 1];
    fn go(v: usize, order: usize, adj: &[Vec<usize>], coloring: &mut Vec<usize>) -> bool {
        if v > order {
            return true;
        }
        // vertex 1 may take color 0 only; breaks color symmetry
        let max_color = if v == 1 { 1 } else { 3 };
        for color in 0..max_color {
            if adj[v].iter().all(|&u| u > v || coloring[u] != color) {
                coloring[v] = color;
                if go(v + 1, order, adj, coloring) {
                    return true;
                }
                coloring[v] = usize::MAX;
            }
        }
        false
    }
    go(1, order, &adj, &mut coloring)
}

/// The four sides of the characterization, each computed independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CharacterizationFlags {
    pub connected: bool,
    pub tripartite: bool,
    pub chordal63: bool,
    pub degree_sum_pair: bool,
    pub all: bool,
}

/// Evaluates the characterization predicate: connected, 3-colorable,
/// (6,3)-chordal, and possessing an adjacent pair whose degrees sum to
/// the order.
pub fn theorem3_predicate(g: &Graph) -> Result<CharacterizationFlags> {
    if g.order() > MAX_CANONICAL_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "predicate evaluation beyond order {MAX_CANONICAL_ORDER}"
        )));
    }
    let connected = is_connected(g);
    let tripartite = is_three_colorable(g);
    let chordal63 = is_rs_chordal(g, 6, 3)?;
    let degree_sum_pair = has_degree_sum_pair(g).is_some();
    Ok(CharacterizationFlags {
        connected,
        tripartite,
        chordal63,
        degree_sum_pair,
        all: connected && tripartite && chordal63 && degree_sum_pair,
    })
}

/// One isomorphism class in a characterization audit.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterizationEntry {
    pub certificate: String,
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
    pub flags: CharacterizationFlags,
    pub representable: bool,
    pub witness: Option<Word>,
    pub agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterizationSummary {
    pub max_order: usize,
    pub alphabet: usize,
    pub connected_classes: usize,
    pub agreements: usize,
    pub mismatch_count: usize,
}

/// Full audit report: one entry per connected isomorphism class, with
/// mismatching classes listed separately.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterizationReport {
    pub summary: CharacterizationSummary,
    pub mismatches: Vec<CharacterizationEntry>,
}

/// Compares the characterization predicate against the exhaustive word
/// search over every connected isomorphism class of graphs on
/// `1..=max_order` vertices. The single-vertex graph is included and
/// reported verbatim (it is representable but has no adjacent pair).
pub fn audit_theorem3(max_order: usize, n: usize, budget: u64) -> Result<CharacterizationReport> {
    if max_order == 0 || max_order > MAX_AUDIT_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "class enumeration supports orders 1..={MAX_AUDIT_ORDER}, got {max_order}"
        )));
    }
    let mut connected_classes = 0usize;
    let mut agreements = 0usize;
    let mut mismatches = Vec::new();

    for order in 1..=max_order {
        for rep in connected_classes_of_order(order)? {
            connected_classes += 1;
            let flags = theorem3_predicate(&rep)?;
            let result = find_representing_word(&rep, n, budget)?;
            if matches!(result.verdict, Verdict::BoundExceeded) {
                return Err(Error::BudgetExceeded(format!(
                    "representability scan at order {order} exceeds budget {budget}"
                )));
            }
            let representable = result.is_representable();
            let agrees = flags.all == representable;
            if agrees {
                agreements += 1;
            } else {
                mismatches.push(CharacterizationEntry {
                    certificate: canonical_form(&rep)?.hex(),
                    order,
                    edges: rep.edges().to_vec(),
                    flags,
                    representable,
                    witness: result.witness().cloned(),
                    agrees,
                });
            }
        }
    }

    Ok(CharacterizationReport {
        summary: CharacterizationSummary {
            max_order,
            alphabet: n,
            connected_classes,
            agreements,
            mismatch_count: mismatches.len(),
        },
        mismatches,
    })
}

/// Canonical representatives of all connected isomorphism classes on
/// exactly `order` vertices, in a deterministic order.
pub fn connected_classes_of_order(order: usize) -> Result<Vec<Graph>> {
    if order > MAX_AUDIT_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "class enumeration supports orders 1..={MAX_AUDIT_ORDER}, got {order}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..=order)
        .flat_map(|i| (i + 1..=order).map(move |j| (i, j)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1u64 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(order, edges)?;
        if !is_connected(&g) {
            continue;
        }
        let cf = canonical_form(&g)?;
        if seen.insert(cf.clone()) {
            out.push(cf.representative());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, Alphabet::new(n).unwrap()).unwrap()
    }

    fn graph_of(s: &str, n: usize) -> Graph {
        build_lyndon_graph(&w(s, n)).into_graph()
    }

    #[test]
    fn isomorphism_examples() {
        let k3 = Graph::complete(3);
        let relabeled = Graph::new(3, [(3, 2), (2, 1), (1, 3)]).unwrap();
        assert!(are_isomorphic(&k3, &relabeled).unwrap().is_some());
        assert!(are_isomorphic(&Graph::cycle(4), &Graph::path(4))
            .unwrap()
            .is_none());
        let g1 = graph_of("ab", 2);
        let g2 = graph_of("ac", 3);
        assert!(are_isomorphic(&g1, &g2).unwrap().is_some());
        assert!(matches!(
            are_isomorphic(&Graph::empty(11), &Graph::empty(11)),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn returned_mapping_is_an_isomorphism() {
        let g = graph_of("abccab", 3);
        let h = Graph::new(6, g.edges().iter().map(|&(u, v)| (7 - u, 7 - v))).unwrap();
        let phi = are_isomorphic(&g, &h).unwrap().unwrap();
        for u in 1..=6 {
            for v in u + 1..=6 {
                assert_eq!(g.has_edge(u, v), h.has_edge(phi[u - 1], phi[v - 1]));
            }
        }
    }

    #[test]
    fn canonical_form_invariance() {
        use std::collections::HashSet;
        // C4 under all 24 relabelings yields one certificate; P4 differs
        let perms = permutations(4);
        let mut certs = HashSet::new();
        for p in &perms {
            let g = Graph::new(
                4,
                Graph::cycle(4)
                    .edges()
                    .iter()
                    .map(|&(u, v)| (p[u - 1], p[v - 1])),
            )
            .unwrap();
            certs.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(certs.len(), 1);
        let c4 = canonical_form(&Graph::cycle(4)).unwrap();
        let p4 = canonical_form(&Graph::path(4)).unwrap();
        assert_ne!(c4, p4);
        // representative decodes to an isomorphic graph
        assert!(are_isomorphic(&c4.representative(), &Graph::cycle(4))
            .unwrap()
            .is_some());
        assert!(canonical_form(&Graph::empty(11)).is_err());
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![1]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for slot in 0..=p.len() {
                let mut q = p.clone();
                q.insert(slot, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn find_witness_examples() {
        let r = find_representing_word(&Graph::complete(2), 2, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(r.witness().unwrap().to_string(), "ab");

        let r = find_representing_word(&Graph::complete(3), 3, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(r.witness().unwrap().to_string(), "abc");

        let r = find_representing_word(&Graph::cycle(6), 3, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(r.verdict, Verdict::NotRepresentable);
        assert_eq!(r.words_examined, 729);

        let r = find_representing_word(&Graph::empty(30), 2, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(r.verdict, Verdict::BoundExceeded);
    }

    #[test]
    fn witness_is_verified_isomorphic() {
        let diamond = Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let r = find_representing_word(&diamond, 3, DEFAULT_WORD_BUDGET).unwrap();
        let witness = r.witness().unwrap();
        let gw = build_lyndon_graph(witness);
        assert!(are_isomorphic(gw.graph(), &diamond).unwrap().is_some());
    }

    #[test]
    fn classify_examples() {
        let buckets = classify_words(2, 2, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(buckets.len(), 2);
        let sizes: Vec<usize> = buckets.values().map(|v| v.len()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 4);
        for (cf, words) in &buckets {
            let class_words: Vec<String> = words.iter().map(|w| w.to_string()).collect();
            if cf.representative().edge_count() == 1 {
                assert_eq!(class_words, ["ab"]);
            } else {
                assert_eq!(class_words, ["aa", "ba", "bb"]);
            }
        }

        let buckets = classify_words(1, 3, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(buckets.len(), 1);
        assert_eq!(buckets.values().next().unwrap().len(), 3);

        let buckets = classify_words(2, 3, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(buckets.len(), 2);
        let mut sizes: Vec<usize> = buckets.values().map(|v| v.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, [3, 6]);
    }

    #[test]
    fn predicate_examples() {
        let f = theorem3_predicate(&Graph::complete(2)).unwrap();
        assert!(f.all);

        let f = theorem3_predicate(&Graph::cycle(6)).unwrap();
        assert!(f.connected && f.tripartite);
        assert!(!f.chordal63 && !f.degree_sum_pair && !f.all);

        let f = theorem3_predicate(&Graph::complete(3)).unwrap();
        assert!(f.connected && f.tripartite && f.chordal63);
        assert!(!f.degree_sum_pair && !f.all);

        let f = theorem3_predicate(&Graph::empty(1)).unwrap();
        assert!(f.connected && !f.degree_sum_pair && !f.all);
    }

    #[test]
    fn audit_at_order_three() {
        let report = audit_theorem3(3, 3, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(report.summary.connected_classes, 4); // K1, K2, P3, K3
        assert_eq!(report.summary.agreements, 2); // K2 and P3
        assert_eq!(report.summary.mismatch_count, 2); // K1 and K3
        let k3 = report
            .mismatches
            .iter()
            .find(|m| m.order == 3)
            .expect("K3 mismatch");
        assert_eq!(k3.edges, vec![(1, 2), (1, 3), (2, 3)]);
        assert!(!k3.flags.all && k3.representable);
        assert_eq!(k3.witness.as_ref().unwrap().to_string(), "abc");
        let k1 = report.mismatches.iter().find(|m| m.order == 1).unwrap();
        assert!(k1.representable && !k1.flags.degree_sum_pair);
    }

    #[test]
    fn letter_order_is_all_that_matters() {
        // order-preserving re-injections of the used letters leave the
        // labeled graph unchanged; exhaustive at length <= 5, n = 3
        let alpha = Alphabet::new(3).unwrap();
        for len in 1..=5 {
            for word in words_of_length(alpha, len) {
                let mut used: Vec<u8> = word.letters().to_vec();
                used.sort_unstable();
                used.dedup();
                for target in increasing_injections(used.len(), 3) {
                    let relabeled: Vec<u8> = word
                        .letters()
                        .iter()
                        .map(|l| target[used.iter().position(|u| u == l).unwrap()])
                        .collect();
                    let image = Word::new(alpha, relabeled).unwrap();
                    assert_eq!(
                        build_lyndon_graph(&word).graph(),
                        build_lyndon_graph(&image).graph(),
                        "word {word} image {image}"
                    );
                }
            }
        }
    }

    fn increasing_injections(k: usize, n: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut buf = Vec::new();
        fn go(start: u8, k: usize, n: u8, buf: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if buf.len() == k {
                out.push(buf.clone());
                return;
            }
            for v in start..n {
                buf.push(v);
                go(v + 1, k, n, buf, out);
                buf.pop();
            }
        }
        go(0, k, n as u8, &mut buf, &mut out);
        out
    }
}
