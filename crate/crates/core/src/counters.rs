//! Global pattern counts maintained under edge updates.
//!
//! Every maintained total is updated by querying the number of occurrences
//! that contain the updated edge: after the insertion for inserts, before the
//! removal for deletes. The per-edge queries combine the auxiliary tables with
//! a scan over the high-degree vertices.

use crate::aux_store::{triangles_at, AuxStore, Table};
use crate::count::{choose2, choose3, to_count, widen, Count};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::ops::Ops;
use crate::partition::{EpsilonPartition, PartitionEvent};
use crate::s_counters::SCounter;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    Triangle,
    Path3,
    Claw,
    Paw,
    Cycle4,
    Diamond,
    Clique4,
}

impl Pattern {
    pub const ALL: [Pattern; 7] = [
        Pattern::Triangle,
        Pattern::Path3,
        Pattern::Claw,
        Pattern::Paw,
        Pattern::Cycle4,
        Pattern::Diamond,
        Pattern::Clique4,
    ];

    /// The connected four-vertex patterns.
    pub const FOUR_VERTEX: [Pattern; 6] = [
        Pattern::Path3,
        Pattern::Claw,
        Pattern::Paw,
        Pattern::Cycle4,
        Pattern::Diamond,
        Pattern::Clique4,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Pattern::Triangle => "triangle",
            Pattern::Path3 => "path3",
            Pattern::Claw => "claw",
            Pattern::Paw => "paw",
            Pattern::Cycle4 => "c4",
            Pattern::Diamond => "diamond",
            Pattern::Clique4 => "k4",
        }
    }

    pub fn edge_count(self) -> u32 {
        match self {
            Pattern::Triangle | Pattern::Path3 | Pattern::Claw => 3,
            Pattern::Paw | Pattern::Cycle4 => 4,
            Pattern::Diamond => 5,
            Pattern::Clique4 => 6,
        }
    }

    pub fn vertex_count(self) -> u32 {
        if self == Pattern::Triangle {
            3
        } else {
            4
        }
    }

    /// Threshold exponent used when none is configured; `None` for patterns
    /// maintained without auxiliary tables.
    pub fn default_epsilon(self) -> Option<f64> {
        match self {
            Pattern::Triangle | Pattern::Path3 => Some(0.5),
            Pattern::Paw | Pattern::Cycle4 | Pattern::Diamond => Some(1.0 / 3.0),
            Pattern::Claw | Pattern::Clique4 => None,
        }
    }

    /// Tables the global engine for this pattern maintains.
    pub fn required_tables(self) -> &'static [Table] {
        match self {
            Pattern::Triangle => &[Table::LowWedges, Table::HighTriangles],
            Pattern::Path3 => &[Table::LowTwoPaths, Table::LowWedges],
            Pattern::Paw => &[Table::LowWedges, Table::HighTriangles, Table::LowClawPairs],
            Pattern::Cycle4 => &[Table::LowWedges, Table::LowLowPaths, Table::HighWedges],
            Pattern::Diamond => &[Table::LowWedges, Table::LowPaws, Table::HighWedges, Table::LowClawTriples],
            Pattern::Claw | Pattern::Clique4 => &[],
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.token() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown pattern `{s}`")))
    }
}

/// A count per pattern; `None` for patterns that are not available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternCounts<C: Count> {
    values: [Option<C>; 7],
}

impl<C: Count> Default for PatternCounts<C> {
    fn default() -> Self {
        PatternCounts { values: [None; 7] }
    }
}

impl<C: Count> PatternCounts<C> {
    pub fn get(&self, p: Pattern) -> Option<C> {
        self.values[p.index()]
    }

    pub fn set(&mut self, p: Pattern, c: C) {
        self.values[p.index()] = Some(c);
    }

    fn need(&self, p: Pattern) -> Result<i128> {
        self.get(p).map(widen).ok_or(Error::PatternDisabled(p.token()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Pattern, C)> + '_ {
        Pattern::ALL.into_iter().filter_map(|p| self.get(p).map(|c| (p, c)))
    }
}

/// Induced counts of the four-vertex patterns from their non-induced counts.
///
/// The triangle entry, if present, is copied: a triangle is always induced.
pub fn induced_counts<C: Count>(noninduced: &PatternCounts<C>) -> Result<PatternCounts<C>> {
    let path3 = noninduced.need(Pattern::Path3)?;
    let claw = noninduced.need(Pattern::Claw)?;
    let paw = noninduced.need(Pattern::Paw)?;
    let c4 = noninduced.need(Pattern::Cycle4)?;
    let diamond = noninduced.need(Pattern::Diamond)?;
    let k4 = noninduced.need(Pattern::Clique4)?;

    let i_k4 = k4;
    let i_diamond = diamond - 6 * i_k4;
    let i_c4 = c4 - diamond + 3 * i_k4;
    let i_paw = paw - 4 * diamond + 12 * i_k4;
    let i_claw = claw - paw + 2 * diamond - 4 * i_k4;
    let i_path3 = path3 - 2 * paw - 4 * c4 + 6 * diamond - 12 * i_k4;

    let mut out = PatternCounts::default();
    if let Some(t) = noninduced.get(Pattern::Triangle) {
        out.set(Pattern::Triangle, t);
    }
    for (p, x) in [
        (Pattern::Path3, i_path3),
        (Pattern::Claw, i_claw),
        (Pattern::Paw, i_paw),
        (Pattern::Cycle4, i_c4),
        (Pattern::Diamond, i_diamond),
        (Pattern::Clique4, i_k4),
    ] {
        out.set(p, to_count(x)?);
    }
    Ok(out)
}

/// Sum of `C(deg(v), 3)` over all vertices.
pub fn claw_total(graph: &Graph) -> i128 {
    graph
        .vertices()
        .into_iter()
        .map(|v| choose3(graph.degree(v) as i128))
        .sum()
}

/// Claws containing the edge `{u, v}`.
pub fn claw_edge_query(graph: &Graph, u: VertexId, v: VertexId) -> i128 {
    if !graph.has_edge(u, v) {
        return 0;
    }
    choose2(graph.degree(u) as i128 - 1) + choose2(graph.degree(v) as i128 - 1)
}

/// Four-cliques containing the edge `{u, v}`: adjacent pairs among the
/// common neighbors, found by walking the adjacency of each common neighbor.
pub fn clique4_edge_scan(graph: &Graph, u: VertexId, v: VertexId, ops: &Ops) -> i128 {
    if !graph.has_edge(u, v) {
        return 0;
    }
    let (small, large) = if graph.degree(u) <= graph.degree(v) { (u, v) } else { (v, u) };
    let common: Vec<VertexId> = graph.neighbors(small).filter(|&x| x != large && graph.has_edge(x, large)).collect();
    ops.add(graph.degree(small));
    let mut count = 0;
    for &x in &common {
        for y in graph.neighbors(x) {
            ops.tick();
            if y > x && y != u && y != v && graph.has_edge(y, u) && graph.has_edge(y, v) {
                count += 1;
            }
        }
    }
    count
}

/// Read-only access to a graph, a partition and its tables.
pub struct View<'a, C: Count> {
    pub graph: &'a Graph,
    pub part: &'a EpsilonPartition,
    pub aux: &'a AuxStore<C>,
    pub ops: &'a Ops,
}

impl<'a, C: Count> View<'a, C> {
    fn deg(&self, v: VertexId) -> i128 {
        self.graph.degree(v) as i128
    }

    fn adj(&self, a: VertexId, b: VertexId) -> bool {
        self.graph.has_edge(a, b)
    }

    fn high(&self) -> impl Iterator<Item = VertexId> + 'a {
        let ops = self.ops;
        self.part.high_vertices().inspect(move |_| ops.tick())
    }

    fn require(&self, tables: &[Table]) -> Result<()> {
        for &t in tables {
            if !self.aux.is_enabled(t) {
                return Err(Error::TableDisabled(t.symbol()));
            }
        }
        Ok(())
    }

    /// Common neighbors of `a` and `b` (both distinct), using the low-wedge
    /// table plus a high scan.
    pub(crate) fn common(&self, a: VertexId, b: VertexId) -> i128 {
        self.aux.raw_pair(Table::LowWedges, a, b)
            + self.high().filter(|&h| h != a && h != b && self.adj(h, a) && self.adj(h, b)).count() as i128
    }

    /// Common neighbors of three distinct vertices, using the low claw
    /// triples plus a high scan.
    pub(crate) fn common3(&self, a: VertexId, b: VertexId, c: VertexId) -> i128 {
        self.aux.raw_triple(a, b, c)
            + self
                .high()
                .filter(|&h| h != a && h != b && h != c && self.adj(h, a) && self.adj(h, b) && self.adj(h, c))
                .count() as i128
    }

    /// Per-edge count of `pattern` at `{u, v}`; zero when the edge is absent.
    pub fn edge_query(&self, pattern: Pattern, u: VertexId, v: VertexId) -> Result<i128> {
        if u == v {
            return Err(Error::InvalidEdge(u));
        }
        if !self.adj(u, v) {
            return Ok(0);
        }
        Ok(match pattern {
            Pattern::Triangle => {
                self.require(&[Table::LowWedges])?;
                self.common(u, v)
            }
            Pattern::Path3 => {
                self.require(&[Table::LowTwoPaths, Table::LowWedges])?;
                self.path3_edge(u, v)
            }
            Pattern::Claw => claw_edge_query(self.graph, u, v),
            Pattern::Paw => {
                self.require(&[Table::LowWedges, Table::LowClawPairs])?;
                self.paw_edge(u, v)?
            }
            Pattern::Cycle4 => {
                self.require(&[Table::LowWedges, Table::LowLowPaths, Table::HighWedges])?;
                self.cycle4_edge(u, v)
            }
            Pattern::Diamond => {
                self.require(&[Table::LowWedges, Table::LowPaws, Table::HighWedges, Table::LowClawTriples])?;
                self.diamond_edge(u, v)
            }
            Pattern::Clique4 => clique4_edge_scan(self.graph, u, v, self.ops),
        })
    }

    /// Triangles containing `v`: the stored value for high vertices, a scan of
    /// neighbor pairs for low ones.
    pub fn triangle_vertex(&self, v: VertexId) -> Result<i128> {
        if self.part.is_high(v) {
            self.require(&[Table::HighTriangles])?;
            self.ops.tick();
            Ok(self.aux.raw_vertex(Table::HighTriangles, v))
        } else {
            Ok(triangles_at(self.graph, v, self.ops))
        }
    }

    fn path3_edge(&self, u: VertexId, v: VertexId) -> i128 {
        let t_uv = self.common(u, v);
        let centre = (self.deg(u) - 1) * (self.deg(v) - 1) - t_uv;
        // u-v-x-y with x low, and the mirror image
        let low_end = |a: VertexId, b: VertexId| {
            let own = if self.part.is_low(a) { self.deg(a) - 1 } else { 0 };
            self.aux.raw_vertex(Table::LowTwoPaths, b) - own - self.aux.raw_pair(Table::LowWedges, a, b)
        };
        let mut high_ends = 0;
        for h in self.high() {
            if h == u || h == v {
                continue;
            }
            let (hu, hv) = (self.adj(h, u), self.adj(h, v));
            if hu {
                high_ends += self.deg(h) - 1 - hv as i128;
            }
            if hv {
                high_ends += self.deg(h) - 1 - hu as i128;
            }
        }
        centre + low_end(u, v) + low_end(v, u) + high_ends
    }

    fn paw_edge(&self, u: VertexId, v: VertexId) -> Result<i128> {
        let t_uv = self.common(u, v);
        let arm = self.triangle_vertex(u)? + self.triangle_vertex(v)? - 2 * t_uv;
        let central = t_uv * (self.deg(u) - 2 + self.deg(v) - 2);
        let mut opposite = self.aux.raw_pair(Table::LowClawPairs, u, v);
        for h in self.high() {
            if h != u && h != v && self.adj(h, u) && self.adj(h, v) {
                opposite += self.deg(h) - 2;
            }
        }
        Ok(arm + central + opposite)
    }

    fn cycle4_edge(&self, u: VertexId, v: VertexId) -> i128 {
        let mut total = self.aux.raw_pair(Table::LowLowPaths, u, v);
        // one high and one low vertex opposite the edge
        for h in self.high() {
            if h != v && h != u && self.adj(h, u) {
                total += self.aux.raw_pair(Table::LowWedges, v, h) - self.part.is_low(u) as i128;
            }
            if h != u && h != v && self.adj(h, v) {
                total += self.aux.raw_pair(Table::LowWedges, u, h) - self.part.is_low(v) as i128;
            }
        }
        // both opposite vertices high
        if self.part.is_low(u) && self.part.is_low(v) {
            let hu: Vec<VertexId> =
                self.graph.neighbors(u).filter(|&x| x != v && self.part.is_high(x)).collect();
            let hv: Vec<VertexId> =
                self.graph.neighbors(v).filter(|&y| y != u && self.part.is_high(y)).collect();
            self.ops.add(self.graph.degree(u) + self.graph.degree(v));
            for &x in &hu {
                for &y in &hv {
                    self.ops.tick();
                    if x != y && self.adj(x, y) {
                        total += 1;
                    }
                }
            }
        } else {
            let (a, b) = if self.part.is_high(u) { (u, v) } else { (v, u) };
            for h in self.high() {
                if h != a && h != b && self.adj(h, b) {
                    total += self.aux.raw_pair(Table::HighWedges, a, h) - self.part.is_high(b) as i128;
                }
            }
        }
        total
    }

    fn diamond_edge(&self, u: VertexId, v: VertexId) -> i128 {
        // {u, v} as the chord
        let chord = if self.part.is_high(u) && self.part.is_high(v) {
            choose2(self.aux.raw_pair(Table::LowWedges, u, v) + self.aux.raw_pair(Table::HighWedges, u, v))
        } else {
            let (a, b) = if self.part.is_low(u) { (u, v) } else { (v, u) };
            self.ops.add(self.graph.degree(a));
            choose2(self.graph.neighbors(a).filter(|&x| x != b && self.adj(x, b)).count() as i128)
        };
        // {u, v} as a cycle edge: low center and low fourth vertex
        let mut cycle = self.aux.raw_pair(Table::LowPaws, u, v);
        for h in self.high() {
            if h == u || h == v {
                continue;
            }
            let (hu, hv) = (self.adj(h, u), self.adj(h, v));
            // low chord partner, high fourth vertex
            if hu || hv {
                cycle += self.aux.raw_triple(u, v, h) * (hu as i128 + hv as i128);
            }
            // high chord partner h of a high endpoint
            if hu && hv {
                for a in [u, v] {
                    if self.part.is_high(a) {
                        cycle += self.aux.raw_pair(Table::LowWedges, a, h) + self.aux.raw_pair(Table::HighWedges, a, h)
                            - 1;
                    }
                }
            }
        }
        // high chord partner h of a low endpoint a
        for (a, b) in [(u, v), (v, u)] {
            if self.part.is_high(a) {
                continue;
            }
            let na: Vec<VertexId> = self.graph.neighbors(a).filter(|&x| x != b).collect();
            self.ops.add(na.len());
            for &h in na.iter().filter(|&&h| self.part.is_high(h) && self.adj(h, b)) {
                for &x in &na {
                    self.ops.tick();
                    if x != h && self.adj(h, x) {
                        cycle += 1;
                    }
                }
            }
        }
        chord + cycle
    }
}

/// A partition with its tables, maintained for one threshold exponent.
#[derive(Debug, Clone)]
pub struct Tracker<C: Count> {
    part: EpsilonPartition,
    aux: AuxStore<C>,
}

impl<C: Count> Tracker<C> {
    /// Classifies `graph` and fills `aux`, whose enabled set must be final.
    pub fn new(graph: &Graph, epsilon: f64, mut aux: AuxStore<C>, ops: &Ops) -> Result<Self> {
        let part = EpsilonPartition::init(graph, epsilon)?;
        aux.recompute_from_scratch(graph, &part, ops)?;
        Ok(Tracker { part, aux })
    }

    pub fn partition(&self) -> &EpsilonPartition {
        &self.part
    }

    pub fn aux(&self) -> &AuxStore<C> {
        &self.aux
    }

    pub fn view<'a>(&'a self, graph: &'a Graph, ops: &'a Ops) -> View<'a, C> {
        View { graph, part: &self.part, aux: &self.aux, ops }
    }

    pub fn edge_delta(&mut self, graph: &Graph, u: VertexId, v: VertexId, sign: i128, ops: &Ops) -> Result<()> {
        self.aux.apply_edge_delta(graph, &self.part, u, v, sign, ops)
    }

    /// Applies partition moves or a full rebuild after an update of `{u, v}`.
    /// Returns whether a rebuild happened.
    pub fn after_update(&mut self, graph: &Graph, u: VertexId, v: VertexId, ops: &Ops) -> Result<bool> {
        let aux = &mut self.aux;
        let events = self
            .part
            .after_update_with(graph, u, v, |part, x, dir| aux.apply_partition_move(graph, part, x, dir, ops))?;
        if events.contains(&PartitionEvent::RebuildRequired) {
            self.rebuild(graph, ops)?;
            return Ok(true);
        }
        Ok(false)
    }

    /// Reclassifies every vertex and recomputes the tables.
    pub fn rebuild(&mut self, graph: &Graph, ops: &Ops) -> Result<()> {
        self.part.reclassify(graph);
        self.aux.recompute_from_scratch(graph, &self.part, ops)
    }
}

/// Groups patterns by threshold exponent and builds one tracker per group.
///
/// With `anchor = Some(s)` the trackers are anchored at `s` and each table is
/// scoped unless some pattern needs the full key range.
pub(crate) fn build_trackers<C: Count>(
    graph: &Graph,
    patterns: &[Pattern],
    epsilon: &BTreeMap<Pattern, f64>,
    anchor: Option<VertexId>,
    ops: &Ops,
) -> Result<(Vec<Tracker<C>>, [Option<usize>; 7])> {
    let mut groups: Vec<(f64, AuxStore<C>)> = Vec::new();
    let mut engine_of = [None; 7];
    for &p in patterns {
        let Some(default) = p.default_epsilon() else { continue };
        let eps = epsilon.get(&p).copied().unwrap_or(default);
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::InvalidConfig(format!("epsilon {eps} for {p} is outside (0, 1)")));
        }
        let idx = match groups.iter().position(|(e, _)| *e == eps) {
            Some(i) => i,
            None => {
                let aux = match anchor {
                    Some(s) => AuxStore::anchored(s),
                    None => AuxStore::new(),
                };
                groups.push((eps, aux));
                groups.len() - 1
            }
        };
        let aux = &mut groups[idx].1;
        match anchor {
            None => {
                for &t in p.required_tables() {
                    aux.enable(t);
                }
            }
            Some(_) => {
                for &(t, scoped) in crate::s_counters::anchored_tables(p) {
                    if scoped {
                        aux.enable_scoped(t);
                    } else {
                        aux.enable(t);
                    }
                }
            }
        }
        engine_of[p.index()] = Some(idx);
    }
    let trackers = groups
        .into_iter()
        .map(|(eps, aux)| Tracker::new(graph, eps, aux, ops))
        .collect::<Result<Vec<_>>>()?;
    Ok((trackers, engine_of))
}

/// Configuration of a [`DynamicCounter`].
#[derive(Debug, Clone, PartialEq)]
pub struct CounterConfig {
    pub patterns: Vec<Pattern>,
    pub epsilon: BTreeMap<Pattern, f64>,
    pub s_vertices: Vec<VertexId>,
}

impl Default for CounterConfig {
    fn default() -> Self {
        Self::all()
    }
}

impl CounterConfig {
    /// Every pattern with default exponents.
    pub fn all() -> Self {
        CounterConfig { patterns: Pattern::ALL.to_vec(), epsilon: BTreeMap::new(), s_vertices: Vec::new() }
    }

    pub fn patterns(patterns: &[Pattern]) -> Self {
        let mut p = patterns.to_vec();
        p.sort_unstable();
        p.dedup();
        CounterConfig { patterns: p, epsilon: BTreeMap::new(), s_vertices: Vec::new() }
    }

    pub fn with_epsilon(mut self, pattern: Pattern, eps: f64) -> Self {
        self.epsilon.insert(pattern, eps);
        self
    }

    /// Uses `eps` for every pattern, so that all tables share one partition.
    pub fn with_uniform_epsilon(mut self, eps: f64) -> Self {
        for p in Pattern::ALL {
            self.epsilon.insert(p, eps);
        }
        self
    }

    pub fn with_s(mut self, s: impl IntoIterator<Item = VertexId>) -> Self {
        self.s_vertices.extend(s);
        self.s_vertices.sort_unstable();
        self.s_vertices.dedup();
        self
    }

    pub fn is_enabled(&self, p: Pattern) -> bool {
        self.patterns.contains(&p)
    }
}

/// Maintains pattern totals, per-edge queries and s-counts of a dynamic graph.
#[derive(Debug)]
pub struct DynamicCounter<C: Count> {
    graph: Graph,
    ops: Ops,
    enabled: [bool; 7],
    totals: [C; 7],
    trackers: Vec<Tracker<C>>,
    engine_of: [Option<usize>; 7],
    s_engines: Vec<SCounter<C>>,
    rebuilds: u64,
}

impl<C: Count> DynamicCounter<C> {
    pub fn new(config: &CounterConfig) -> Result<Self> {
        let graph = Graph::new();
        let ops = Ops::new();
        let (trackers, engine_of) = build_trackers(&graph, &config.patterns, &config.epsilon, None, &ops)?;
        let mut enabled = [false; 7];
        for &p in &config.patterns {
            enabled[p.index()] = true;
        }
        let mut graph = graph;
        let s_engines = config
            .s_vertices
            .iter()
            .map(|&s| {
                graph.add_vertex(s);
                SCounter::new(&graph, s, &config.patterns, &config.epsilon, &ops)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DynamicCounter {
            graph,
            ops,
            enabled,
            totals: [C::zero(); 7],
            trackers,
            engine_of,
            s_engines,
            rebuilds: 0,
        })
    }

    /// A counter for every pattern with default exponents.
    pub fn with_all_patterns() -> Self {
        Self::new(&CounterConfig::all()).expect("default configuration is valid")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Logical operations performed so far.
    pub fn ops(&self) -> u64 {
        self.ops.get()
    }

    /// Number of partition rebuilds performed by all global trackers.
    pub fn rebuilds(&self) -> u64 {
        self.rebuilds
    }

    pub fn is_enabled(&self, p: Pattern) -> bool {
        self.enabled[p.index()]
    }

    pub fn trackers(&self) -> &[Tracker<C>] {
        &self.trackers
    }

    /// The tracker serving `pattern`, if it uses one.
    pub fn tracker(&self, pattern: Pattern) -> Option<&Tracker<C>> {
        self.engine_of[pattern.index()].map(|i| &self.trackers[i])
    }

    pub fn s_engines(&self) -> &[SCounter<C>] {
        &self.s_engines
    }

    fn check(&self, p: Pattern) -> Result<()> {
        if self.is_enabled(p) {
            Ok(())
        } else {
            Err(Error::PatternDisabled(p.token()))
        }
    }

    fn edge_value(&self, p: Pattern, u: VertexId, v: VertexId) -> Result<i128> {
        match self.engine_of[p.index()] {
            Some(i) => self.trackers[i].view(&self.graph, &self.ops).edge_query(p, u, v),
            None => match p {
                Pattern::Claw => Ok(claw_edge_query(&self.graph, u, v)),
                Pattern::Clique4 => Ok(clique4_edge_scan(&self.graph, u, v, &self.ops)),
                _ => Err(Error::PatternDisabled(p.token())),
            },
        }
    }

    fn adjust_totals(&mut self, u: VertexId, v: VertexId, sign: i128) -> Result<()> {
        for p in Pattern::ALL {
            if !self.enabled[p.index()] {
                continue;
            }
            let delta = self.edge_value(p, u, v)?;
            let next = widen(self.totals[p.index()]) + sign * delta;
            self.totals[p.index()] = to_count(next)?;
        }
        Ok(())
    }

    fn after_update(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        for t in &mut self.trackers {
            if t.after_update(&self.graph, u, v, &self.ops)? {
                self.rebuilds += 1;
            }
        }
        for s in &mut self.s_engines {
            s.after_update(&self.graph, u, v, &self.ops)?;
        }
        Ok(())
    }

    /// Inserts `{u, v}`; returns `false` if it was already present.
    pub fn insert_edge(&mut self, u: impl Into<VertexId>, v: impl Into<VertexId>) -> Result<bool> {
        let (u, v) = (u.into(), v.into());
        if !self.graph.insert_edge(u, v)? {
            return Ok(false);
        }
        for t in &mut self.trackers {
            t.edge_delta(&self.graph, u, v, 1, &self.ops)?;
        }
        self.adjust_totals(u, v, 1)?;
        for s in &mut self.s_engines {
            s.on_update(&self.graph, u, v, 1, &self.ops)?;
        }
        self.after_update(u, v)?;
        Ok(true)
    }

    /// Deletes `{u, v}`; returns `false` if it was absent.
    pub fn delete_edge(&mut self, u: impl Into<VertexId>, v: impl Into<VertexId>) -> Result<bool> {
        let (u, v) = (u.into(), v.into());
        if u == v {
            return Err(Error::InvalidEdge(u));
        }
        if !self.graph.has_edge(u, v) {
            return Ok(false);
        }
        self.adjust_totals(u, v, -1)?;
        for s in &mut self.s_engines {
            s.on_update(&self.graph, u, v, -1, &self.ops)?;
        }
        for t in &mut self.trackers {
            t.edge_delta(&self.graph, u, v, -1, &self.ops)?;
        }
        self.graph.delete_edge(u, v)?;
        self.after_update(u, v)?;
        Ok(true)
    }

    /// Non-induced total of `p`.
    pub fn total(&self, p: Pattern) -> Result<C> {
        self.check(p)?;
        Ok(self.totals[p.index()])
    }

    /// All enabled non-induced totals.
    pub fn totals(&self) -> PatternCounts<C> {
        let mut out = PatternCounts::default();
        for p in Pattern::ALL {
            if self.is_enabled(p) {
                out.set(p, self.totals[p.index()]);
            }
        }
        out
    }

    /// Induced counts; needs all six four-vertex patterns enabled.
    pub fn induced_totals(&self) -> Result<PatternCounts<C>> {
        induced_counts(&self.totals())
    }

    pub fn induced(&self, p: Pattern) -> Result<C> {
        let counts = self.induced_totals()?;
        counts.get(p).ok_or(Error::PatternDisabled(p.token()))
    }

    /// Occurrences of `p` containing the edge `{u, v}`.
    pub fn edge_query(&self, p: Pattern, u: impl Into<VertexId>, v: impl Into<VertexId>) -> Result<C> {
        self.check(p)?;
        to_count(self.edge_value(p, u.into(), v.into())?)
    }

    /// Triangles containing `v`.
    pub fn triangle_vertex_query(&self, v: impl Into<VertexId>) -> Result<C> {
        self.check(Pattern::Triangle)?;
        let i = self.engine_of[Pattern::Triangle.index()].expect("triangle engine");
        to_count(self.trackers[i].view(&self.graph, &self.ops).triangle_vertex(v.into())?)
    }

    /// Occurrences of `p` containing the pinned vertex `s`.
    pub fn s_count(&self, s: impl Into<VertexId>, p: Pattern) -> Result<C> {
        let s = s.into();
        let engine = self
            .s_engines
            .iter()
            .find(|e| e.s() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("vertex {s} is not pinned")))?;
        engine.query(p)
    }

    /// Rebuilds every tracker from scratch without changing any total.
    pub fn rebuild_all(&mut self) -> Result<()> {
        for t in &mut self.trackers {
            t.rebuild(&self.graph, &self.ops)?;
        }
        Ok(())
    }
}
