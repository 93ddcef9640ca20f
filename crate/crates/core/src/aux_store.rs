//! Auxiliary count tables maintained alongside the partition.
//!
//! | table | key | value |
//! |---|---|---|
//! | `LowTwoPaths` (vLV) | v | 2-paths `v-x-w` with `x` low |
//! | `HighTriangles` (t) | v in H | triangles containing `v` |
//! | `LowWedges` (uLv) | {a,b} | low common neighbors of `a` and `b` |
//! | `LowLowPaths` (uLLv) | {a,b} | 3-paths `a-x-y-b` with `x`, `y` low |
//! | `LowClawPairs` (cLV) | {a,b} | claws with low center having `a`, `b` as leaves |
//! | `LowPaws` (pLL) | {a,b} | paws with low center `x` and low `y`, arm at one of `a`, `b` and the triangle `x`-`y`-other |
//! | `HighWedges` (uHv) | {a,b} ⊆ H | high common neighbors of `a` and `b` |
//! | `LowClawTriples` (cL) | {a,b,c} | low common neighbors of `a`, `b` and `c` |
//!
//! A paw counted in `LowPaws[{a,b}]` is a tuple `(e, x, y, f)` of distinct
//! vertices with `{e,f} = {a,b}`, `x` and `y` low and edges `e-x`, `x-f`,
//! `x-y`, `f-y`.
//!
//! Zero entries are never stored. A store may be anchored at a vertex `s`; a
//! scoped pair or triple table then keeps only the keys that contain `s`.

use crate::count::{to_count, widen, Count};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::ops::Ops;
use crate::partition::{Direction, EpsilonPartition};
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Table {
    LowTwoPaths,
    HighTriangles,
    LowWedges,
    LowLowPaths,
    LowClawPairs,
    LowPaws,
    HighWedges,
    LowClawTriples,
}

impl Table {
    pub const ALL: [Table; 8] = [
        Table::LowTwoPaths,
        Table::HighTriangles,
        Table::LowWedges,
        Table::LowLowPaths,
        Table::LowClawPairs,
        Table::LowPaws,
        Table::HighWedges,
        Table::LowClawTriples,
    ];

    /// Short conventional name.
    pub fn symbol(self) -> &'static str {
        match self {
            Table::LowTwoPaths => "vLV",
            Table::HighTriangles => "t",
            Table::LowWedges => "uLv",
            Table::LowLowPaths => "uLLv",
            Table::LowClawPairs => "cLV",
            Table::LowPaws => "pLL",
            Table::HighWedges => "uHv",
            Table::LowClawTriples => "cL",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Unordered vertex pair, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairKey(VertexId, VertexId);

impl PairKey {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        debug_assert_ne!(a, b);
        if a < b {
            PairKey(a, b)
        } else {
            PairKey(b, a)
        }
    }

    pub fn vertices(self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    fn contains(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }
}

/// Unordered vertex triple, stored in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleKey(VertexId, VertexId, VertexId);

impl TripleKey {
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Self {
        let mut k = [a, b, c];
        k.sort_unstable();
        debug_assert!(k[0] != k[1] && k[1] != k[2]);
        TripleKey(k[0], k[1], k[2])
    }

    pub fn vertices(self) -> (VertexId, VertexId, VertexId) {
        (self.0, self.1, self.2)
    }

    fn contains(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v || self.2 == v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AuxKey {
    Vertex(VertexId),
    Pair(PairKey),
    Triple(TripleKey),
}

const VERTEX_TABLES: usize = 2;
const PAIR_TABLES: usize = 5;

fn vertex_slot(t: Table) -> Option<usize> {
    match t {
        Table::LowTwoPaths => Some(0),
        Table::HighTriangles => Some(1),
        _ => None,
    }
}

fn pair_slot(t: Table) -> Option<usize> {
    match t {
        Table::LowWedges => Some(0),
        Table::LowLowPaths => Some(1),
        Table::LowClawPairs => Some(2),
        Table::LowPaws => Some(3),
        Table::HighWedges => Some(4),
        _ => None,
    }
}

const VLV: usize = 0;
const T: usize = 1;
const UHV: usize = 4;

/// The auxiliary tables for one partition.
#[derive(Debug, Clone)]
pub struct AuxStore<C: Count> {
    refs: [u32; 8],
    unscoped_refs: [u32; 8],
    anchor: Option<VertexId>,
    vertex: [HashMap<VertexId, C>; VERTEX_TABLES],
    pair: [HashMap<PairKey, C>; PAIR_TABLES],
    triple: HashMap<TripleKey, C>,
}

impl<C: Count> Default for AuxStore<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Count> AuxStore<C> {
    /// An unanchored store with no tables enabled.
    pub fn new() -> Self {
        AuxStore {
            refs: [0; 8],
            unscoped_refs: [0; 8],
            anchor: None,
            vertex: Default::default(),
            pair: Default::default(),
            triple: HashMap::new(),
        }
    }

    /// A store anchored at `s`. Tables enabled with
    /// [`enable_scoped`](Self::enable_scoped) keep only keys containing `s`.
    pub fn anchored(s: VertexId) -> Self {
        AuxStore { anchor: Some(s), ..Self::new() }
    }

    pub fn anchor(&self) -> Option<VertexId> {
        self.anchor
    }

    /// Enables `table` with full key range. Enabling the per-vertex triangle
    /// table also enables the full low-wedge table it is maintained from.
    ///
    /// Tables enabled on a non-empty graph must be followed by
    /// [`recompute_from_scratch`](Self::recompute_from_scratch).
    pub fn enable(&mut self, table: Table) {
        self.refs[table.index()] += 1;
        self.unscoped_refs[table.index()] += 1;
        if table == Table::HighTriangles {
            self.enable(Table::LowWedges);
        }
    }

    /// Enables `table` restricted to keys containing the anchor. Without an
    /// anchor, and for the vertex-keyed tables, this is the same as
    /// [`enable`](Self::enable).
    pub fn enable_scoped(&mut self, table: Table) {
        if self.anchor.is_none() || vertex_slot(table).is_some() {
            return self.enable(table);
        }
        self.refs[table.index()] += 1;
    }

    /// Drops one reference to `table`; the table is cleared once unused.
    pub fn disable(&mut self, table: Table, scoped: bool) {
        let i = table.index();
        if self.refs[i] == 0 {
            return;
        }
        self.refs[i] -= 1;
        if !scoped || self.anchor.is_none() || vertex_slot(table).is_some() {
            self.unscoped_refs[i] = self.unscoped_refs[i].saturating_sub(1);
        }
        if table == Table::HighTriangles {
            self.disable(Table::LowWedges, false);
        }
        if self.refs[i] == 0 {
            self.clear_table(table);
        }
    }

    pub fn is_enabled(&self, table: Table) -> bool {
        self.refs[table.index()] > 0
    }

    /// Whether `table` keeps only keys containing the anchor.
    pub fn is_scoped(&self, table: Table) -> bool {
        self.anchor.is_some() && self.unscoped_refs[table.index()] == 0
    }

    pub fn enabled_tables(&self) -> Vec<Table> {
        Table::ALL.into_iter().filter(|&t| self.is_enabled(t)).collect()
    }

    fn check(&self, table: Table) -> Result<()> {
        if self.is_enabled(table) {
            Ok(())
        } else {
            Err(Error::TableDisabled(table.symbol()))
        }
    }

    /// Stored value for `key`, zero when absent.
    pub fn get(&self, table: Table, key: AuxKey) -> Result<C> {
        self.check(table)?;
        let found = match (key, vertex_slot(table), pair_slot(table)) {
            (AuxKey::Vertex(v), Some(s), _) => self.vertex[s].get(&v).copied(),
            (AuxKey::Pair(p), _, Some(s)) => self.pair[s].get(&p).copied(),
            (AuxKey::Triple(t), None, None) => self.triple.get(&t).copied(),
            _ => {
                return Err(Error::InvalidConfig(format!("key {key:?} does not match table {table}")));
            }
        };
        Ok(found.unwrap_or_else(C::zero))
    }

    pub fn get_vertex(&self, table: Table, v: VertexId) -> Result<C> {
        self.get(table, AuxKey::Vertex(v))
    }

    pub fn get_pair(&self, table: Table, a: VertexId, b: VertexId) -> Result<C> {
        if a == b {
            return Ok(C::zero());
        }
        self.get(table, AuxKey::Pair(PairKey::new(a, b)))
    }

    pub fn get_triple(&self, table: Table, a: VertexId, b: VertexId, c: VertexId) -> Result<C> {
        if a == b || b == c || a == c {
            return Ok(C::zero());
        }
        self.get(table, AuxKey::Triple(TripleKey::new(a, b, c)))
    }

    /// All stored entries of `table`, sorted by key.
    pub fn entries(&self, table: Table) -> Vec<(AuxKey, C)> {
        let mut out: Vec<(AuxKey, C)> = if let Some(s) = vertex_slot(table) {
            self.vertex[s].iter().map(|(&k, &c)| (AuxKey::Vertex(k), c)).collect()
        } else if let Some(s) = pair_slot(table) {
            self.pair[s].iter().map(|(&k, &c)| (AuxKey::Pair(k), c)).collect()
        } else {
            self.triple.iter().map(|(&k, &c)| (AuxKey::Triple(k), c)).collect()
        };
        out.sort_unstable_by_key(|e| e.0);
        out
    }

    /// Total number of stored entries over all tables.
    pub fn len(&self) -> usize {
        self.vertex.iter().map(HashMap::len).sum::<usize>()
            + self.pair.iter().map(HashMap::len).sum::<usize>()
            + self.triple.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn clear_table(&mut self, table: Table) {
        if let Some(s) = vertex_slot(table) {
            self.vertex[s].clear();
        } else if let Some(s) = pair_slot(table) {
            self.pair[s].clear();
        } else {
            self.triple.clear();
        }
    }

    /// Removes every stored entry, keeping the enabled set.
    pub fn clear(&mut self) {
        for t in Table::ALL {
            self.clear_table(t);
        }
    }

    // ---- internal reads ---------------------------------------------------

    pub(crate) fn raw_vertex(&self, table: Table, v: VertexId) -> i128 {
        let s = vertex_slot(table).expect("vertex table");
        self.vertex[s].get(&v).map_or(0, |&c| widen(c))
    }

    pub(crate) fn raw_pair(&self, table: Table, a: VertexId, b: VertexId) -> i128 {
        if a == b {
            return 0;
        }
        let s = pair_slot(table).expect("pair table");
        self.pair[s].get(&PairKey::new(a, b)).map_or(0, |&c| widen(c))
    }

    pub(crate) fn raw_triple(&self, a: VertexId, b: VertexId, c: VertexId) -> i128 {
        if a == b || b == c || a == c {
            return 0;
        }
        self.triple.get(&TripleKey::new(a, b, c)).map_or(0, |&x| widen(x))
    }

    // ---- internal writes --------------------------------------------------

    fn on(&self, t: Table) -> bool {
        self.refs[t.index()] > 0
    }

    fn bump_vertex(&mut self, slot: usize, v: VertexId, delta: i128, ops: &Ops) -> Result<()> {
        ops.tick();
        bump(&mut self.vertex[slot], v, delta, || format!("{v}"))
    }

    fn bump_pair(&mut self, table: Table, a: VertexId, b: VertexId, delta: i128, ops: &Ops) -> Result<()> {
        ops.tick();
        let key = PairKey::new(a, b);
        if let Some(s) = self.anchor {
            if self.is_scoped(table) && !key.contains(s) {
                return Ok(());
            }
        }
        let slot = pair_slot(table).expect("pair table");
        bump(&mut self.pair[slot], key, delta, || format!("{table}{key:?}"))
    }

    fn bump_triple(&mut self, a: VertexId, b: VertexId, c: VertexId, delta: i128, ops: &Ops) -> Result<()> {
        ops.tick();
        let key = TripleKey::new(a, b, c);
        if let Some(s) = self.anchor {
            if self.is_scoped(Table::LowClawTriples) && !key.contains(s) {
                return Ok(());
            }
        }
        bump(&mut self.triple, key, delta, || format!("cL{key:?}"))
    }

    // ---- edge updates -----------------------------------------------------

    /// Applies the effect of adding (`sign = 1`) or removing (`sign = -1`) the
    /// edge `{u, v}`. The edge must be present in `graph` in both cases.
    pub fn apply_edge_delta(
        &mut self,
        graph: &Graph,
        part: &EpsilonPartition,
        u: VertexId,
        v: VertexId,
        sign: i128,
        ops: &Ops,
    ) -> Result<()> {
        if !graph.has_edge(u, v) {
            return Err(Error::InconsistentState(format!(
                "edge {{{u},{v}}} must be present while its table delta is applied"
            )));
        }
        debug_assert!(sign == 1 || sign == -1);
        for (a, b) in [(u, v), (v, u)] {
            if part.is_low(a) {
                self.low_endpoint_delta(graph, part, a, b, sign, ops)?;
            }
        }
        if part.is_low(u) && part.is_low(v) {
            self.low_low_edge_delta(graph, u, v, sign, ops)?;
        }
        if self.on(Table::HighTriangles) {
            self.high_triangles_edge_delta(graph, part, u, v, sign, ops)?;
        }
        if self.on(Table::HighWedges) && part.is_high(u) && part.is_high(v) {
            for h in part.high_vertices() {
                ops.tick();
                if h == u || h == v {
                    continue;
                }
                if graph.has_edge(h, u) {
                    self.bump_pair(Table::HighWedges, h, v, sign, ops)?;
                }
                if graph.has_edge(h, v) {
                    self.bump_pair(Table::HighWedges, u, h, sign, ops)?;
                }
            }
        }
        Ok(())
    }

    /// Structures in which the low vertex `a` is adjacent to `b` through the
    /// updated edge.
    fn low_endpoint_delta(
        &mut self,
        graph: &Graph,
        part: &EpsilonPartition,
        a: VertexId,
        b: VertexId,
        sign: i128,
        ops: &Ops,
    ) -> Result<()> {
        let others: Vec<VertexId> = graph.neighbors(a).filter(|&w| w != b).collect();
        ops.add(others.len());
        let deg_a = graph.degree(a) as i128;

        if self.on(Table::LowTwoPaths) {
            for &w in &others {
                self.bump_vertex(VLV, w, sign, ops)?;
            }
            self.bump_vertex(VLV, b, sign * (deg_a - 1), ops)?;
        }
        if self.on(Table::LowWedges) {
            for &w in &others {
                self.bump_pair(Table::LowWedges, b, w, sign, ops)?;
            }
        }
        if self.on(Table::LowClawPairs) {
            for (i, &x) in others.iter().enumerate() {
                for &y in &others[i + 1..] {
                    self.bump_pair(Table::LowClawPairs, x, y, sign, ops)?;
                }
                self.bump_pair(Table::LowClawPairs, b, x, sign * (deg_a - 2), ops)?;
            }
        }
        if self.on(Table::LowClawTriples) {
            for (i, &x) in others.iter().enumerate() {
                for &y in &others[i + 1..] {
                    self.bump_triple(b, x, y, sign, ops)?;
                }
            }
        }
        if self.on(Table::LowLowPaths) {
            // b-a-w-x with a, w low
            for &w in others.iter().filter(|&&w| part.is_low(w)) {
                for x in graph.neighbors(w) {
                    ops.tick();
                    if x != a && x != b {
                        self.bump_pair(Table::LowLowPaths, b, x, sign, ops)?;
                    }
                }
            }
        }
        if self.on(Table::LowPaws) {
            // a as center, b as arm end: triangle a-f-y with y low.
            for &f in &others {
                for &y in &others {
                    ops.tick();
                    if y != f && part.is_low(y) && graph.has_edge(y, f) {
                        self.bump_pair(Table::LowPaws, b, f, sign, ops)?;
                    }
                }
            }
            // a as center, b in the triangle with low y, arm end e.
            for &y in others.iter().filter(|&&y| part.is_low(y) && graph.has_edge(y, b)) {
                for &e in &others {
                    ops.tick();
                    if e != y {
                        self.bump_pair(Table::LowPaws, b, e, sign, ops)?;
                    }
                }
            }
            // a as the low triangle vertex opposite b, center x, arm end e.
            for &x in others.iter().filter(|&&x| part.is_low(x) && graph.has_edge(x, b)) {
                for e in graph.neighbors(x) {
                    ops.tick();
                    if e != a && e != b {
                        self.bump_pair(Table::LowPaws, b, e, sign, ops)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Structures in which the updated edge joins two low vertices.
    fn low_low_edge_delta(&mut self, graph: &Graph, u: VertexId, v: VertexId, sign: i128, ops: &Ops) -> Result<()> {
        let on_paths = self.on(Table::LowLowPaths);
        let on_paws = self.on(Table::LowPaws);
        if !on_paths && !on_paws {
            return Ok(());
        }
        let nu: Vec<VertexId> = graph.neighbors(u).filter(|&w| w != v).collect();
        let nv: Vec<VertexId> = graph.neighbors(v).filter(|&w| w != u).collect();
        ops.add(nu.len() + nv.len());
        if on_paths {
            for &x in &nu {
                for &y in &nv {
                    ops.tick();
                    if x != y {
                        self.bump_pair(Table::LowLowPaths, x, y, sign, ops)?;
                    }
                }
            }
        }
        if on_paws {
            // center c, low triangle vertex d, arm end e, triangle vertex f
            for (d, nc) in [(v, &nu), (u, &nv)] {
                let common: Vec<VertexId> = nc.iter().copied().filter(|&f| graph.has_edge(f, d)).collect();
                ops.add(nc.len());
                for &e in nc {
                    for &f in &common {
                        ops.tick();
                        if e != f {
                            self.bump_pair(Table::LowPaws, e, f, sign, ops)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn high_triangles_edge_delta(
        &mut self,
        graph: &Graph,
        part: &EpsilonPartition,
        u: VertexId,
        v: VertexId,
        sign: i128,
        ops: &Ops,
    ) -> Result<()> {
        let mut high_common = 0i128;
        let high: Vec<VertexId> = part.high_vertices().collect();
        for h in high {
            ops.tick();
            if h != u && h != v && graph.has_edge(h, u) && graph.has_edge(h, v) {
                high_common += 1;
                self.bump_vertex(T, h, sign, ops)?;
            }
        }
        let common = self.raw_pair(Table::LowWedges, u, v) + high_common;
        for x in [u, v] {
            if part.is_high(x) {
                self.bump_vertex(T, x, sign * common, ops)?;
            }
        }
        Ok(())
    }

    // ---- partition moves --------------------------------------------------

    /// Updates the tables after `v` moved sides. The partition must already
    /// report the new side of `v`.
    pub fn apply_partition_move(
        &mut self,
        graph: &Graph,
        part: &EpsilonPartition,
        v: VertexId,
        direction: Direction,
        ops: &Ops,
    ) -> Result<()> {
        // Structures with v in a low role appear (+1) or disappear (-1).
        let sign: i128 = match direction {
            Direction::LowToHigh => -1,
            Direction::HighToLow => 1,
        };
        let nv = graph.sorted_neighbors(v);
        ops.add(nv.len());
        let deg = nv.len() as i128;

        if self.on(Table::LowTwoPaths) {
            for &w in &nv {
                self.bump_vertex(VLV, w, sign * (deg - 1), ops)?;
            }
        }
        let pair_tables = [Table::LowWedges, Table::LowClawPairs]
            .into_iter()
            .filter(|&t| self.on(t))
            .collect::<Vec<_>>();
        if !pair_tables.is_empty() || self.on(Table::LowClawTriples) {
            for (i, &x) in nv.iter().enumerate() {
                for (j, &y) in nv.iter().enumerate().skip(i + 1) {
                    for &t in &pair_tables {
                        let d = if t == Table::LowWedges { sign } else { sign * (deg - 2) };
                        self.bump_pair(t, x, y, d, ops)?;
                    }
                    if self.on(Table::LowClawTriples) {
                        for &z in &nv[j + 1..] {
                            self.bump_triple(x, y, z, sign, ops)?;
                        }
                    }
                }
            }
        }
        if self.on(Table::LowLowPaths) {
            for &y in nv.iter().filter(|&&y| part.is_low(y)) {
                for &a in &nv {
                    if a == y {
                        continue;
                    }
                    for b in graph.neighbors(y) {
                        ops.tick();
                        if b != v && b != a {
                            self.bump_pair(Table::LowLowPaths, a, b, sign, ops)?;
                        }
                    }
                }
            }
        }
        if self.on(Table::LowPaws) {
            // v as center: triangle v-f-y with low y, arm v-e.
            let low_nv: Vec<VertexId> = nv.iter().copied().filter(|&y| part.is_low(y)).collect();
            for (i, &e) in nv.iter().enumerate() {
                for &f in &nv[i + 1..] {
                    let mut d = 0i128;
                    for &y in &low_nv {
                        ops.tick();
                        if y == e || y == f {
                            continue;
                        }
                        d += graph.has_edge(y, f) as i128 + graph.has_edge(y, e) as i128;
                    }
                    self.bump_pair(Table::LowPaws, e, f, sign * d, ops)?;
                }
            }
            // v as the low triangle vertex: center x, triangle x-v-f, arm x-e.
            for &x in &low_nv {
                for &f in &nv {
                    ops.tick();
                    if f == x || !graph.has_edge(f, x) {
                        continue;
                    }
                    for e in graph.neighbors(x) {
                        ops.tick();
                        if e != v && e != f {
                            self.bump_pair(Table::LowPaws, e, f, sign, ops)?;
                        }
                    }
                }
            }
        }
        if self.on(Table::HighTriangles) {
            match direction {
                Direction::LowToHigh => {
                    let mut tri = 0i128;
                    for (i, &x) in nv.iter().enumerate() {
                        for &y in &nv[i + 1..] {
                            ops.tick();
                            tri += graph.has_edge(x, y) as i128;
                        }
                    }
                    self.vertex[T].remove(&v);
                    self.bump_vertex(T, v, tri, ops)?;
                }
                Direction::HighToLow => {
                    ops.tick();
                    self.vertex[T].remove(&v);
                }
            }
        }
        if self.on(Table::HighWedges) {
            let high_nv: Vec<VertexId> = nv.iter().copied().filter(|&x| part.is_high(x)).collect();
            let d = -sign;
            for (i, &x) in high_nv.iter().enumerate() {
                for &y in &high_nv[i + 1..] {
                    self.bump_pair(Table::HighWedges, x, y, d, ops)?;
                }
            }
            match direction {
                Direction::LowToHigh => {
                    let high: Vec<VertexId> = part.high_vertices().collect();
                    for &w in &high_nv {
                        for &h in &high {
                            ops.tick();
                            if h != v && h != w && graph.has_edge(w, h) {
                                self.bump_pair(Table::HighWedges, v, h, 1, ops)?;
                            }
                        }
                    }
                }
                Direction::HighToLow => {
                    for h in part.high_vertices() {
                        ops.tick();
                        if h != v {
                            self.pair[UHV].remove(&PairKey::new(v, h));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Clears every table and rebuilds it by replaying the edges of `graph`
    /// in canonical order against the fixed partition.
    pub fn recompute_from_scratch(&mut self, graph: &Graph, part: &EpsilonPartition, ops: &Ops) -> Result<()> {
        self.clear();
        let mut replay = Graph::new();
        for e in graph.edges() {
            replay.insert_edge(e.a, e.b)?;
            self.apply_edge_delta(&replay, part, e.a, e.b, 1, ops)?;
        }
        Ok(())
    }
}

fn bump<K, C, F>(map: &mut HashMap<K, C>, key: K, delta: i128, describe: F) -> Result<()>
where
    K: Hash + Eq,
    C: Count,
    F: FnOnce() -> String,
{
    if delta == 0 {
        return Ok(());
    }
    let cur = map.get(&key).map_or(0, |&c| widen(c));
    let next = cur + delta;
    if next < 0 {
        return Err(Error::InconsistentState(format!("entry {} would become {next}", describe())));
    }
    if next == 0 {
        map.remove(&key);
    } else {
        map.insert(key, to_count(next)?);
    }
    Ok(())
}

/// Number of adjacent neighbor pairs of `v`.
pub(crate) fn triangles_at(graph: &Graph, v: VertexId, ops: &Ops) -> i128 {
    let nv: Vec<VertexId> = graph.neighbors(v).collect();
    let mut tri = 0i128;
    for (i, &x) in nv.iter().enumerate() {
        for &y in &nv[i + 1..] {
            ops.tick();
            tri += graph.has_edge(x, y) as i128;
        }
    }
    tri
}
