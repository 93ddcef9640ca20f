//! Reduction gadgets encoding a Boolean product `uᵀ M v`.
//!
//! [`build_g`] produces the layered graph `G_{M,g,h}` and [`build_h`] its
//! variant with the left side split into a top and a bottom copy. A
//! [`GadgetSpec`] turns one of these into a base graph plus an update
//! sequence that depends on `u` and `v`; after the updates the target pattern
//! is present exactly when `uᵀ M v = 1`.
//!
//! Vertex numbering for `G_{M,g,h}`: `l^(p)_i = p·n1 + i`, then
//! `r^(q)_j = (g+1)·n1 + q·n2 + j`, then the apex `s` and the extra vertex `t`.
//! For `H_{M,g,h}`: `t^(p)_i = p·n1 + i`, `b^(p)_i = (g+1)·n1 + p·n1 + i`,
//! `r^(q)_j = 2·(g+1)·n1 + q·n2 + j`. Indices are 0-based.

use crate::counters::{CounterConfig, DynamicCounter, Pattern};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::oracle::{Filter, Mode, Oracle};
use std::fmt;
use std::str::FromStr;

/// Dense `n1 × n2` Boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n1: usize,
    n2: usize,
    bits: Vec<bool>,
}

impl BoolMatrix {
    pub fn zeros(n1: usize, n2: usize) -> Self {
        BoolMatrix { n1, n2, bits: vec![false; n1 * n2] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n1 = rows.len();
        let n2 = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(n1, n2);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n2 {
                return Err(Error::InvalidConfig(format!("row {i} has {} entries, expected {n2}", row.len())));
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return Err(Error::InvalidConfig(format!("entry ({i}, {j}) is {x}, expected 0 or 1"))),
                }
            }
        }
        Ok(m)
    }

    /// Matrix whose entry `(i, j)` is bit `i·n2 + j` of `mask`.
    pub fn from_mask(n1: usize, n2: usize, mask: u64) -> Self {
        let mut m = Self::zeros(n1, n2);
        for k in 0..n1 * n2 {
            m.bits[k] = mask >> k & 1 == 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.n1
    }

    pub fn cols(&self) -> usize {
        self.n2
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n2 + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.n2 + j] = value;
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n1 {
            if i > 0 {
                f.write_str("/")?;
            }
            for j in 0..self.n2 {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

/// `∨_{i,j} u_i ∧ M_ij ∧ v_j`.
pub fn boolean_product(m: &BoolMatrix, u: &[bool], v: &[bool]) -> bool {
    (0..m.rows()).any(|i| u[i] && (0..m.cols()).any(|j| m.get(i, j) && v[j]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    /// Cycle of odd length `k ≥ 3`.
    OddCycle(usize),
    /// Cycle of length `k ≥ 4`.
    EvenCycle(usize),
    Paw,
    Diamond,
    Clique4,
    /// Counting length-3 paths.
    Path3Count,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::OddCycle(k) | Problem::EvenCycle(k) => write!(f, "cycle{k}"),
            Problem::Paw => f.write_str("paw"),
            Problem::Diamond => f.write_str("diamond"),
            Problem::Clique4 => f.write_str("k4"),
            Problem::Path3Count => f.write_str("path3"),
        }
    }
}

impl FromStr for Problem {
    type Err = Error;

    /// Accepts `cycleK`, `triangle`, `c4`, `paw`, `diamond`, `k4`, `path3`.
    fn from_str(s: &str) -> Result<Self> {
        let p = match s {
            "triangle" => Problem::OddCycle(3),
            "c4" => Problem::EvenCycle(4),
            "paw" => Problem::Paw,
            "diamond" => Problem::Diamond,
            "k4" => Problem::Clique4,
            "path3" => Problem::Path3Count,
            _ => {
                let k = s
                    .strip_prefix("cycle")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| Error::InvalidConfig(format!("unknown problem `{s}`")))?;
                if k % 2 == 1 {
                    Problem::OddCycle(k)
                } else {
                    Problem::EvenCycle(k)
                }
            }
        };
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UpdateDirection {
    /// Start without the vector-dependent edges and insert those selected.
    Incremental,
    /// Start with all vector-dependent edges and delete those not selected.
    Decremental,
}

impl FromStr for UpdateDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "incremental" | "inc" => Ok(UpdateDirection::Incremental),
            "decremental" | "dec" => Ok(UpdateDirection::Decremental),
            _ => Err(Error::InvalidConfig(format!("unknown direction `{s}`"))),
        }
    }
}

impl fmt::Display for UpdateDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UpdateDirection::Incremental => "incremental",
            UpdateDirection::Decremental => "decremental",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetUpdate {
    Insert(Edge),
    Delete(Edge),
}

/// What the final query asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Pattern(Pattern),
    Cycle(usize),
}

/// Base graph, update sequence and query of one reduction instance.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub base: Vec<Edge>,
    pub updates: Vec<GadgetUpdate>,
    /// Apex vertex, absent for the even-cycle construction.
    pub s: Option<VertexId>,
    pub target: Target,
    /// For path counting: the query is positive when the count exceeds this
    /// value (global and s-restricted variants).
    pub threshold: Option<u128>,
    pub s_threshold: Option<u128>,
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetSpec {
    pub matrix: BoolMatrix,
    pub problem: Problem,
    pub direction: UpdateDirection,
}

fn edge(a: usize, b: usize) -> Edge {
    Edge::new(VertexId(a as u32), VertexId(b as u32)).expect("gadget edges join distinct vertices")
}

/// `G_{M,g,h}`: left layers `L^(0..=g)`, right layers `R^(0..=h)`, rails
/// between consecutive layers and `l^(g)_i – r^(h)_j` for every one-entry.
pub fn build_g(m: &BoolMatrix, g: usize, h: usize) -> Graph {
    let (n1, n2) = (m.rows(), m.cols());
    let l = |p: usize, i: usize| p * n1 + i;
    let r = |q: usize, j: usize| (g + 1) * n1 + q * n2 + j;
    let mut graph = Graph::new();
    for x in 0..(g + 1) * n1 + (h + 1) * n2 {
        graph.add_vertex(x as u32);
    }
    for p in 0..g {
        for i in 0..n1 {
            graph.insert_edge(l(p, i) as u32, l(p + 1, i) as u32).unwrap();
        }
    }
    for q in 0..h {
        for j in 0..n2 {
            graph.insert_edge(r(q, j) as u32, r(q + 1, j) as u32).unwrap();
        }
    }
    for i in 0..n1 {
        for j in 0..n2 {
            if m.get(i, j) {
                graph.insert_edge(l(g, i) as u32, r(h, j) as u32).unwrap();
            }
        }
    }
    graph
}

/// `H_{M,g,h}` for `g, h ≥ 1`: top copies `T^(p)` take the one-entries with
/// `i ≤ j`, bottom copies `B^(p)` those with `i > j`; layer-0 to layer-1
/// rails are left out.
pub fn build_h(m: &BoolMatrix, g: usize, h: usize) -> Result<Graph> {
    if g == 0 || h == 0 {
        return Err(Error::InvalidConfig(format!("H needs g, h >= 1, got g = {g}, h = {h}")));
    }
    let (n1, n2) = (m.rows(), m.cols());
    let t = |p: usize, i: usize| p * n1 + i;
    let b = |p: usize, i: usize| (g + 1) * n1 + p * n1 + i;
    let r = |q: usize, j: usize| 2 * (g + 1) * n1 + q * n2 + j;
    let mut graph = Graph::new();
    for x in 0..2 * (g + 1) * n1 + (h + 1) * n2 {
        graph.add_vertex(x as u32);
    }
    for p in 1..g {
        for i in 0..n1 {
            graph.insert_edge(t(p, i) as u32, t(p + 1, i) as u32).unwrap();
            graph.insert_edge(b(p, i) as u32, b(p + 1, i) as u32).unwrap();
        }
    }
    for q in 1..h {
        for j in 0..n2 {
            graph.insert_edge(r(q, j) as u32, r(q + 1, j) as u32).unwrap();
        }
    }
    for i in 0..n1 {
        for j in 0..n2 {
            if !m.get(i, j) {
                continue;
            }
            let (near, far) = if i <= j { (t(0, i), t(g, i)) } else { (b(0, i), b(g, i)) };
            graph.insert_edge(near as u32, r(0, j) as u32).unwrap();
            graph.insert_edge(far as u32, r(h, j) as u32).unwrap();
        }
    }
    Ok(graph)
}

/// Length-3 paths of a static graph.
fn path3_static(graph: &Graph) -> u128 {
    let mut centre: i128 = 0;
    for e in graph.edges() {
        centre += (graph.degree(e.a) as i128 - 1) * (graph.degree(e.b) as i128 - 1);
    }
    let mut tri: i128 = 0;
    for e in graph.edges() {
        tri += graph.neighbors(e.a).filter(|&x| graph.has_edge(x, e.b)).count() as i128;
    }
    (centre - tri) as u128
}

/// 2-paths starting at `x`.
fn two_paths_from(graph: &Graph, x: VertexId) -> u128 {
    graph.neighbors(x).map(|y| graph.degree(y) as u128 - 1).sum()
}

impl GadgetSpec {
    pub fn new(matrix: BoolMatrix, problem: Problem, direction: UpdateDirection) -> Result<Self> {
        match problem {
            Problem::OddCycle(k) if k < 3 || k % 2 == 0 => {
                return Err(Error::InvalidConfig(format!("odd cycle length {k} must be odd and at least 3")))
            }
            Problem::EvenCycle(k) if k < 4 => {
                return Err(Error::InvalidConfig(format!("cycle length {k} must be at least 4")))
            }
            _ => {}
        }
        Ok(GadgetSpec { matrix, problem, direction })
    }

    /// Layer parameters `(g, h)` of the underlying construction.
    pub fn layers(&self) -> (usize, usize) {
        match self.problem {
            Problem::OddCycle(k) => ((k - 3) / 2, (k - 3) / 2),
            Problem::EvenCycle(k) => (k.div_ceil(2) - 1, k / 2 - 1),
            Problem::Paw | Problem::Path3Count => (0, 0),
            Problem::Diamond | Problem::Clique4 => (1, 0),
        }
    }

    /// Builds the instance for the vectors `u` (length `n1`) and `v` (`n2`).
    pub fn reduction(&self, u: &[bool], v: &[bool]) -> Result<Reduction> {
        let m = &self.matrix;
        let (n1, n2) = (m.rows(), m.cols());
        if u.len() != n1 || v.len() != n2 {
            return Err(Error::InvalidConfig(format!(
                "vector lengths ({}, {}) do not match a {n1}x{n2} matrix",
                u.len(),
                v.len()
            )));
        }
        let (g, h) = self.layers();
        let expected = boolean_product(m, u, v);
        let mut base: Vec<Edge>;
        // (edge, selected) pairs whose presence depends on the vectors
        let mut switches: Vec<(Edge, bool)> = Vec::new();
        let mut s = None;
        let mut threshold = None;
        let mut s_threshold = None;
        let target;

        if let Problem::EvenCycle(k) = self.problem {
            let graph = build_h(m, g, h)?;
            base = graph.edges();
            let r0 = 2 * (g + 1) * n1;
            for (i, &ui) in u.iter().enumerate() {
                switches.push((edge(i, n1 + i), ui));
                switches.push((edge((g + 1) * n1 + i, (g + 1) * n1 + n1 + i), ui));
            }
            for (j, &vj) in v.iter().enumerate() {
                switches.push((edge(r0 + j, r0 + n2 + j), vj));
            }
            target = if k == 4 { Target::Pattern(Pattern::Cycle4) } else { Target::Cycle(k) };
        } else {
            let graph = build_g(m, g, h);
            base = graph.edges();
            let l = |p: usize, i: usize| p * n1 + i;
            let r = |j: usize| (g + 1) * n1 + j;
            let apex = (g + 1) * n1 + (h + 1) * n2;
            s = Some(VertexId(apex as u32));
            for (i, &ui) in u.iter().enumerate() {
                switches.push((edge(apex, l(0, i)), ui));
            }
            match self.problem {
                Problem::OddCycle(k) => {
                    for (j, &vj) in v.iter().enumerate() {
                        switches.push((edge(apex, r(j)), vj));
                    }
                    target = if k == 3 { Target::Pattern(Pattern::Triangle) } else { Target::Cycle(k) };
                }
                Problem::Paw => {
                    for (j, &vj) in v.iter().enumerate() {
                        switches.push((edge(apex, r(j)), vj));
                    }
                    base.push(edge(apex, apex + 1));
                    target = Target::Pattern(Pattern::Paw);
                }
                Problem::Diamond | Problem::Clique4 => {
                    for (i, &ui) in u.iter().enumerate() {
                        switches.push((edge(apex, l(1, i)), ui));
                    }
                    for (j, &vj) in v.iter().enumerate() {
                        switches.push((edge(apex, r(j)), vj));
                    }
                    if self.problem == Problem::Clique4 {
                        for i in 0..n1 {
                            for j in 0..n2 {
                                base.push(edge(l(0, i), r(j)));
                            }
                        }
                        target = Target::Pattern(Pattern::Clique4);
                    } else {
                        target = Target::Pattern(Pattern::Diamond);
                    }
                }
                Problem::Path3Count => {
                    let t = apex + 1;
                    for (j, &vj) in v.iter().enumerate() {
                        switches.push((edge(r(j), t), vj));
                    }
                    let ku = u.iter().filter(|&&x| x).count() as u128;
                    let kv = v.iter().filter(|&&x| x).count() as u128;
                    let side = |x: usize, k: u128| {
                        let x = VertexId(x as u32);
                        two_paths_from(&graph, x) + (k - 1) * graph.degree(x) as u128
                    };
                    let left: u128 = (0..n1).filter(|&i| u[i]).map(|i| side(l(0, i), ku)).sum();
                    let right: u128 = (0..n2).filter(|&j| v[j]).map(|j| side(r(j), kv)).sum();
                    threshold = Some(path3_static(&graph) + left + right);
                    s_threshold = Some(left);
                    target = Target::Pattern(Pattern::Path3);
                }
                Problem::EvenCycle(_) => unreachable!(),
            }
        }

        let mut updates = Vec::new();
        match self.direction {
            UpdateDirection::Incremental => {
                for (e, on) in switches {
                    if on {
                        updates.push(GadgetUpdate::Insert(e));
                    }
                }
            }
            UpdateDirection::Decremental => {
                for (e, on) in switches {
                    base.push(e);
                    if !on {
                        updates.push(GadgetUpdate::Delete(e));
                    }
                }
            }
        }
        Ok(Reduction { base, updates, s, target, threshold, s_threshold, expected })
    }
}

/// Detector answering the final query of a reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Global counts of a [`DynamicCounter`].
    Engine,
    /// Counts containing the apex from an s-engine pinned there.
    SEngine,
    /// Brute-force counts.
    Oracle,
    /// Brute-force counts restricted to occurrences containing the apex.
    SOracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRun {
    pub expected: bool,
    pub observed: bool,
    pub agree: bool,
    /// The count the verdict was read from.
    pub count: u128,
}

impl Reduction {
    /// The final graph after all updates.
    pub fn final_graph(&self) -> Graph {
        let mut g = Graph::from_edges(self.base.iter().map(|e| (e.a, e.b))).expect("valid edges");
        for up in &self.updates {
            match up {
                GadgetUpdate::Insert(e) => g.insert_edge(e.a, e.b).expect("valid edge"),
                GadgetUpdate::Delete(e) => g.delete_edge(e.a, e.b).expect("valid edge"),
            };
        }
        g
    }

    fn verdict(&self, count: u128, pinned: bool) -> bool {
        let limit = if pinned { self.s_threshold } else { self.threshold };
        count > limit.unwrap_or(0)
    }
}

/// Builds the instance for `(u, v)`, replays it through `backend` and
/// compares the verdict with `uᵀ M v`.
pub fn run_reduction(spec: &GadgetSpec, u: &[bool], v: &[bool], backend: Backend) -> Result<ReductionRun> {
    let red = spec.reduction(u, v)?;
    let pinned = matches!(backend, Backend::SEngine | Backend::SOracle);
    if pinned && red.s.is_none() {
        return Err(Error::UnsupportedProblem(format!("{} has no apex-restricted variant", spec.problem)));
    }
    let count = match backend {
        Backend::Engine | Backend::SEngine => {
            let Target::Pattern(p) = red.target else {
                return Err(Error::UnsupportedProblem(format!("no engine detector for {}", spec.problem)));
            };
            let mut config = CounterConfig::patterns(&[p]);
            if pinned {
                config = config.with_s(red.s);
            }
            let mut c = DynamicCounter::<u128>::new(&config)?;
            for e in &red.base {
                c.insert_edge(e.a, e.b)?;
            }
            for up in &red.updates {
                match up {
                    GadgetUpdate::Insert(e) => c.insert_edge(e.a, e.b)?,
                    GadgetUpdate::Delete(e) => c.delete_edge(e.a, e.b)?,
                };
            }
            match red.s {
                Some(s) if pinned => c.s_count(s, p)?,
                _ => c.total(p)?,
            }
        }
        Backend::Oracle | Backend::SOracle => {
            let graph = red.final_graph();
            let oracle = Oracle::new(graph.vertex_count().max(16));
            let through = if pinned { red.s } else { None };
            match red.target {
                Target::Cycle(k) => oracle.count_cycles(&graph, k, through)? as u128,
                Target::Pattern(p) => {
                    let filter = through.map_or(Filter::None, Filter::Vertex);
                    oracle.count(&graph, p, Mode::NonInduced, filter)? as u128
                }
            }
        }
    };
    let observed = red.verdict(count, pinned);
    Ok(ReductionRun { expected: red.expected, observed, agree: observed == red.expected, count })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig_matrix() -> BoolMatrix {
        BoolMatrix::from_rows(&[[1, 0, 1, 0], [0, 1, 1, 0], [0, 1, 1, 1]]).unwrap()
    }

    fn bits(xs: &[u8]) -> Vec<bool> {
        xs.iter().map(|&x| x == 1).collect()
    }

    #[test]
    fn g_sizes() {
        let g = build_g(&fig_matrix(), 0, 0);
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 7);
        let z = build_g(&BoolMatrix::zeros(2, 2), 1, 0);
        assert_eq!(z.vertex_count(), 6);
        assert_eq!(z.edge_count(), 2);
    }

    #[test]
    fn h_sizes_and_split() {
        let h = build_h(&fig_matrix(), 1, 1).unwrap();
        assert_eq!(h.vertex_count(), 20);
        let id = build_h(&BoolMatrix::identity(2), 1, 1).unwrap();
        // t^(0)_i = i, r^(0)_j = 8 + j, bottom copies untouched
        assert!(id.has_edge(VertexId(0), VertexId(8)));
        assert!(id.has_edge(VertexId(1), VertexId(9)));
        for b in 4..8 {
            assert_eq!(id.degree(VertexId(b)), 0);
        }
        assert!(build_h(&fig_matrix(), 0, 1).is_err());
    }

    #[test]
    fn figure_instance_detected() {
        let (u, v) = (bits(&[1, 1, 0]), bits(&[0, 1, 1, 0]));
        let m = fig_matrix();
        assert!(boolean_product(&m, &u, &v));
        let diamond = GadgetSpec::new(m.clone(), Problem::Diamond, UpdateDirection::Decremental).unwrap();
        for backend in [Backend::Engine, Backend::SEngine, Backend::Oracle, Backend::SOracle] {
            let run = run_reduction(&diamond, &u, &v, backend).unwrap();
            assert!(run.observed && run.agree, "{backend:?}");
        }
        let c5 = GadgetSpec::new(m, Problem::OddCycle(5), UpdateDirection::Decremental).unwrap();
        assert!(run_reduction(&c5, &u, &v, Backend::Oracle).unwrap().observed);
        assert!(run_reduction(&c5, &u, &v, Backend::SOracle).unwrap().observed);
    }

    #[test]
    fn zero_vector_is_negative() {
        let spec = GadgetSpec::new(fig_matrix(), Problem::Diamond, UpdateDirection::Decremental).unwrap();
        let run = run_reduction(&spec, &[false; 3], &bits(&[0, 1, 1, 0]), Backend::Engine).unwrap();
        assert!(!run.expected && !run.observed);
    }

    #[test]
    fn unsupported_backends() {
        let m = BoolMatrix::identity(2);
        let c5 = GadgetSpec::new(m.clone(), Problem::OddCycle(5), UpdateDirection::Incremental).unwrap();
        assert!(matches!(run_reduction(&c5, &[true; 2], &[true; 2], Backend::Engine), Err(Error::UnsupportedProblem(_))));
        let c4 = GadgetSpec::new(m, Problem::EvenCycle(4), UpdateDirection::Incremental).unwrap();
        assert!(matches!(run_reduction(&c4, &[true; 2], &[true; 2], Backend::SOracle), Err(Error::UnsupportedProblem(_))));
        assert!(GadgetSpec::new(BoolMatrix::identity(2), Problem::OddCycle(4), UpdateDirection::Incremental).is_err());
    }

    #[test]
    fn update_counts() {
        let m = fig_matrix();
        let u = bits(&[1, 0, 0]);
        let v = bits(&[0, 0, 1, 1]);
        let dec = GadgetSpec::new(m.clone(), Problem::Diamond, UpdateDirection::Decremental).unwrap();
        // two deletions per zero in u, one per zero in v
        assert_eq!(dec.reduction(&u, &v).unwrap().updates.len(), 2 * 2 + 2);
        let inc = GadgetSpec::new(m, Problem::OddCycle(3), UpdateDirection::Incremental).unwrap();
        assert_eq!(inc.reduction(&u, &v).unwrap().updates.len(), 3);
    }

    #[test]
    fn problem_names_round_trip() {
        for p in [Problem::OddCycle(3), Problem::OddCycle(7), Problem::EvenCycle(6), Problem::Paw, Problem::Diamond, Problem::Clique4, Problem::Path3Count] {
            assert_eq!(p.to_string().parse::<Problem>().unwrap(), p);
        }
        assert_eq!("triangle".parse::<Problem>().unwrap(), Problem::OddCycle(3));
        assert_eq!("c4".parse::<Problem>().unwrap(), Problem::EvenCycle(4));
        assert!("hexagon".parse::<Problem>().is_err());
        assert_eq!("dec".parse::<UpdateDirection>().unwrap(), UpdateDirection::Decremental);
    }

    #[test]
    fn static_path_count() {
        let path = Graph::from_edges([(0u32, 1u32), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path3_static(&path), 1);
        let k4 = Graph::from_edges([(0u32, 1u32), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(path3_static(&k4), 12);
    }
}
