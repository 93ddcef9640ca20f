//! Brute-force reference counts.
//!
//! Every 3- and 4-vertex subset is classified by the 6-bit mask of the edges
//! it induces. Non-induced counts come from enumerating the edge subsets of
//! each mask, so they are independent of the multiplicity table below.

use crate::counters::Pattern;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use std::sync::OnceLock;

/// Vertex pairs of a 4-subset in mask bit order.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Induced,
    NonInduced,
}

/// Restricts counting to occurrences containing a vertex or an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    None,
    Vertex(VertexId),
    Edge(VertexId, VertexId),
}

/// Non-induced and induced counts of every pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OracleResult {
    noninduced: [u64; 7],
    induced: [u64; 7],
}

impl OracleResult {
    pub fn noninduced(&self, p: Pattern) -> u64 {
        self.noninduced[p.index()]
    }

    pub fn induced(&self, p: Pattern) -> u64 {
        self.induced[p.index()]
    }

    pub fn get(&self, p: Pattern, mode: Mode) -> u64 {
        match mode {
            Mode::Induced => self.induced(p),
            Mode::NonInduced => self.noninduced(p),
        }
    }
}

/// The spanning pattern formed by an edge mask on four vertices, if connected.
fn classify(mask: u8) -> Option<Pattern> {
    let mut deg = [0u8; 4];
    for (bit, &(a, b)) in PAIRS.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    deg.sort_unstable();
    match (mask.count_ones(), deg) {
        (3, [1, 1, 2, 2]) => Some(Pattern::Path3),
        (3, [1, 1, 1, 3]) => Some(Pattern::Claw),
        (4, [1, 2, 2, 3]) => Some(Pattern::Paw),
        (4, [2, 2, 2, 2]) => Some(Pattern::Cycle4),
        (5, _) => Some(Pattern::Diamond),
        (6, _) => Some(Pattern::Clique4),
        _ => None,
    }
}

struct MaskTables {
    induced: [Option<Pattern>; 64],
    /// Occurrences of each pattern among the edge subsets of a mask.
    sub: [[u8; 7]; 64],
    /// Same, restricted to subsets containing a given edge bit.
    sub_edge: [[[u8; 7]; 6]; 64],
}

fn tables() -> &'static MaskTables {
    static TABLES: OnceLock<MaskTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut t = MaskTables { induced: [None; 64], sub: [[0; 7]; 64], sub_edge: [[[0; 7]; 6]; 64] };
        for mask in 0u8..64 {
            t.induced[mask as usize] = classify(mask);
            // walk all submasks of mask, including mask itself
            let mut sub = mask;
            loop {
                if let Some(p) = classify(sub) {
                    t.sub[mask as usize][p.index()] += 1;
                    for bit in 0..6 {
                        if sub >> bit & 1 == 1 {
                            t.sub_edge[mask as usize][bit][p.index()] += 1;
                        }
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        t
    })
}

/// Multiplicity `c(P, P')`: number of subgraphs of `P` isomorphic to `P'`.
///
/// Zero whenever either pattern is the triangle.
pub fn multiplicity(p: Pattern, q: Pattern) -> u64 {
    use Pattern::*;
    if p == Triangle || q == Triangle {
        return 0;
    }
    if p == q {
        return 1;
    }
    match (p, q) {
        (Paw, Path3) => 2,
        (Cycle4, Path3) => 4,
        (Diamond, Path3) => 6,
        (Clique4, Path3) => 12,
        (Paw, Claw) => 1,
        (Diamond, Claw) => 2,
        (Clique4, Claw) => 4,
        (Diamond, Paw) => 4,
        (Clique4, Paw) => 12,
        (Diamond, Cycle4) => 1,
        (Clique4, Cycle4) => 3,
        (Clique4, Diamond) => 6,
        _ => 0,
    }
}

/// Subset-enumeration counter for graphs up to a vertex limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    limit: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { limit: 16 }
    }
}

struct Dense {
    ids: Vec<VertexId>,
    adj: Vec<Vec<bool>>,
}

impl Dense {
    fn index(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }
}

impl Oracle {
    pub fn new(limit: usize) -> Self {
        Oracle { limit }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn dense(&self, graph: &Graph) -> Result<Dense> {
        let ids = graph.vertices();
        if ids.len() > self.limit {
            return Err(Error::SizeLimit { found: ids.len(), limit: self.limit });
        }
        let n = ids.len();
        let mut adj = vec![vec![false; n]; n];
        for (i, &a) in ids.iter().enumerate() {
            for (j, &b) in ids.iter().enumerate() {
                adj[i][j] = graph.has_edge(a, b);
            }
        }
        Ok(Dense { ids, adj })
    }

    /// Counts of every pattern in both modes.
    pub fn all_counts(&self, graph: &Graph, filter: Filter) -> Result<OracleResult> {
        let d = self.dense(graph)?;
        let n = d.ids.len();
        let mut out = OracleResult::default();
        let (fv, fe) = match filter {
            Filter::None => (None, None),
            Filter::Vertex(v) => match d.index(v) {
                Some(i) => (Some(i), None),
                None => return Ok(out),
            },
            Filter::Edge(a, b) => match (d.index(a), d.index(b)) {
                (Some(i), Some(j)) if i != j => (None, Some((i.min(j), i.max(j)))),
                _ => return Ok(out),
            },
        };
        let t = tables();
        let tri = Pattern::Triangle.index();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let set = [a, b, c];
                    if !admits(&set, fv, fe) {
                        continue;
                    }
                    if d.adj[a][b] && d.adj[a][c] && d.adj[b][c] {
                        out.noninduced[tri] += 1;
                        out.induced[tri] += 1;
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for e in c + 1..n {
                        let set = [a, b, c, e];
                        if !admits(&set, fv, fe) {
                            continue;
                        }
                        let mut mask = 0u8;
                        for (bit, &(x, y)) in PAIRS.iter().enumerate() {
                            if d.adj[set[x]][set[y]] {
                                mask |= 1 << bit;
                            }
                        }
                        let sub = match fe {
                            None => &t.sub[mask as usize],
                            Some((i, j)) => {
                                let x = set.iter().position(|&w| w == i).unwrap();
                                let y = set.iter().position(|&w| w == j).unwrap();
                                let bit = PAIRS.iter().position(|&pr| pr == (x, y)).unwrap();
                                if mask >> bit & 1 == 0 {
                                    continue;
                                }
                                &t.sub_edge[mask as usize][bit]
                            }
                        };
                        for (k, &cnt) in sub.iter().enumerate() {
                            out.noninduced[k] += cnt as u64;
                        }
                        if let Some(p) = t.induced[mask as usize] {
                            out.induced[p.index()] += 1;
                        }
                    }
                }
            }
        }
        if let Some((i, j)) = fe {
            // a triangle contains the edge only if both ends are adjacent
            if !d.adj[i][j] {
                out.noninduced[tri] = 0;
                out.induced[tri] = 0;
            }
        }
        Ok(out)
    }

    pub fn count(&self, graph: &Graph, pattern: Pattern, mode: Mode, filter: Filter) -> Result<u64> {
        Ok(self.all_counts(graph, filter)?.get(pattern, mode))
    }

    /// Simple cycles of length `k` (3 ≤ k ≤ 7), optionally through `through`.
    pub fn count_cycles(&self, graph: &Graph, k: usize, through: Option<VertexId>) -> Result<u64> {
        if !(3..=7).contains(&k) {
            return Err(Error::UnsupportedProblem(format!("cycle length {k} outside 3..=7")));
        }
        let d = self.dense(graph)?;
        let n = d.ids.len();
        let nbrs: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| d.adj[i][j]).collect()).collect();
        let target = match through {
            Some(v) => match d.index(v) {
                Some(i) => Some(i),
                None => return Ok(0),
            },
            None => None,
        };
        let mut total = 0u64;
        let mut path = Vec::with_capacity(k);
        let mut on_path = vec![false; n];
        for start in 0..n {
            path.push(start);
            on_path[start] = true;
            extend(&nbrs, &d.adj, start, k, target, &mut path, &mut on_path, &mut total);
            on_path[start] = false;
            path.pop();
        }
        // each cycle is found once per direction from its smallest vertex
        Ok(total / 2)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    nbrs: &[Vec<usize>],
    adj: &[Vec<bool>],
    start: usize,
    k: usize,
    target: Option<usize>,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    total: &mut u64,
) {
    let last = *path.last().unwrap();
    if path.len() == k {
        if adj[last][start] && target.is_none_or(|t| on_path[t]) {
            *total += 1;
        }
        return;
    }
    for &next in &nbrs[last] {
        if next > start && !on_path[next] {
            path.push(next);
            on_path[next] = true;
            extend(nbrs, adj, start, k, target, path, on_path, total);
            on_path[next] = false;
            path.pop();
        }
    }
}

fn admits(set: &[usize], fv: Option<usize>, fe: Option<(usize, usize)>) -> bool {
    if let Some(v) = fv {
        if !set.contains(&v) {
            return false;
        }
    }
    if let Some((i, j)) = fe {
        if !set.contains(&i) || !set.contains(&j) {
            return false;
        }
    }
    true
}
