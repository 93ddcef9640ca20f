//! Pattern counts restricted to occurrences containing a pinned vertex `s`.
//!
//! Updates incident to `s` change the count by the per-edge query of the
//! updated edge. For an update `{u, v}` with `s` outside the edge the change is
//! computed from the adjacency of `s` to `u` and `v` and a few table reads, all
//! of which involve `s` or one of the endpoints.

use crate::aux_store::Table;
use crate::count::{to_count, widen, Count};
use crate::counters::{build_trackers, claw_edge_query, clique4_edge_scan, Pattern, Tracker, View};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::ops::Ops;
use std::collections::BTreeMap;

/// Tables an s-engine keeps for `p`, with `true` where keys not containing
/// `s` can be dropped.
pub(crate) fn anchored_tables(p: Pattern) -> &'static [(Table, bool)] {
    match p {
        Pattern::Triangle => &[(Table::LowWedges, true)],
        Pattern::Path3 => &[(Table::LowTwoPaths, false), (Table::LowWedges, true)],
        Pattern::Paw => &[
            (Table::LowWedges, false),
            (Table::HighTriangles, false),
            (Table::LowClawPairs, true),
            (Table::LowClawTriples, true),
        ],
        Pattern::Cycle4 => &[(Table::LowWedges, false), (Table::LowLowPaths, true), (Table::HighWedges, false)],
        Pattern::Diamond => &[
            (Table::LowWedges, false),
            (Table::LowPaws, true),
            (Table::HighWedges, false),
            (Table::LowClawTriples, true),
        ],
        Pattern::Claw | Pattern::Clique4 => &[],
    }
}

/// Counts of every enabled pattern over the occurrences containing `s`.
#[derive(Debug)]
pub struct SCounter<C: Count> {
    s: VertexId,
    enabled: [bool; 7],
    totals: [C; 7],
    trackers: Vec<Tracker<C>>,
    engine_of: [Option<usize>; 7],
}

impl<C: Count> SCounter<C> {
    /// Creates an engine for `s` over an edgeless `graph`.
    pub(crate) fn new(
        graph: &Graph,
        s: VertexId,
        patterns: &[Pattern],
        epsilon: &BTreeMap<Pattern, f64>,
        ops: &Ops,
    ) -> Result<Self> {
        if graph.edge_count() != 0 {
            return Err(Error::InvalidConfig("s-engines start on an edgeless graph".into()));
        }
        let (trackers, engine_of) = build_trackers(graph, patterns, epsilon, Some(s), ops)?;
        let mut enabled = [false; 7];
        for &p in patterns {
            enabled[p.index()] = true;
        }
        Ok(SCounter { s, enabled, totals: [C::zero(); 7], trackers, engine_of })
    }

    pub fn s(&self) -> VertexId {
        self.s
    }

    pub fn trackers(&self) -> &[Tracker<C>] {
        &self.trackers
    }

    pub fn tracker(&self, p: Pattern) -> Option<&Tracker<C>> {
        self.engine_of[p.index()].map(|i| &self.trackers[i])
    }

    /// Current count of occurrences of `p` containing `s`.
    pub fn query(&self, p: Pattern) -> Result<C> {
        if !self.enabled[p.index()] {
            return Err(Error::PatternDisabled(p.token()));
        }
        Ok(self.totals[p.index()])
    }

    /// Applies an update of `{u, v}`; the edge must be present in `graph`
    /// (just inserted for `sign = 1`, about to be removed for `sign = -1`).
    pub(crate) fn on_update(&mut self, graph: &Graph, u: VertexId, v: VertexId, sign: i128, ops: &Ops) -> Result<()> {
        if sign > 0 {
            for t in &mut self.trackers {
                t.edge_delta(graph, u, v, 1, ops)?;
            }
        }
        for p in Pattern::ALL {
            if !self.enabled[p.index()] {
                continue;
            }
            let d = self.delta(p, graph, u, v, ops)?;
            self.totals[p.index()] = to_count(widen(self.totals[p.index()]) + sign * d)?;
        }
        if sign < 0 {
            for t in &mut self.trackers {
                t.edge_delta(graph, u, v, -1, ops)?;
            }
        }
        Ok(())
    }

    pub(crate) fn after_update(&mut self, graph: &Graph, u: VertexId, v: VertexId, ops: &Ops) -> Result<()> {
        for t in &mut self.trackers {
            t.after_update(graph, u, v, ops)?;
        }
        Ok(())
    }

    /// Occurrences of `p` containing both `s` and the present edge `{u, v}`.
    fn delta(&self, p: Pattern, graph: &Graph, u: VertexId, v: VertexId, ops: &Ops) -> Result<i128> {
        let s = self.s;
        if p == Pattern::Claw {
            return Ok(if u == s || v == s {
                claw_edge_query(graph, u, v)
            } else {
                let du = graph.degree(u) as i128;
                let dv = graph.degree(v) as i128;
                graph.has_edge(s, u) as i128 * (du - 2) + graph.has_edge(s, v) as i128 * (dv - 2)
            });
        }
        if p == Pattern::Clique4 {
            return Ok(if u == s || v == s {
                clique4_edge_scan(graph, u, v, ops)
            } else if graph.has_edge(s, u) && graph.has_edge(s, v) {
                ops.add(graph.degree(s));
                graph
                    .neighbors(s)
                    .filter(|&y| y != u && y != v && graph.has_edge(y, u) && graph.has_edge(y, v))
                    .count() as i128
            } else {
                0
            });
        }
        let i = self.engine_of[p.index()].expect("tracker for table-backed pattern");
        let view = self.trackers[i].view(graph, ops);
        if u == s || v == s {
            return view.edge_query(p, u, v);
        }
        Ok(non_incident(&view, p, s, u, v))
    }
}

/// Change of the s-count of `p` for an update `{u, v}` not touching `s`.
fn non_incident<C: Count>(view: &View<'_, C>, p: Pattern, s: VertexId, u: VertexId, v: VertexId) -> i128 {
    let g = view.graph;
    let su = g.has_edge(s, u);
    let sv = g.has_edge(s, v);
    let (isu, isv) = (su as i128, sv as i128);
    let deg = |x: VertexId| g.degree(x) as i128;
    match p {
        Pattern::Triangle => (su && sv) as i128,
        Pattern::Path3 => {
            let mut d = 0;
            if su {
                d += deg(v) - 1 - isv + deg(s) - 1 - isv;
            }
            if sv {
                d += deg(u) - 1 - isu + deg(s) - 1 - isu;
            }
            // s-w-u-v and s-w-v-u
            d + view.common(s, u) - isv + view.common(s, v) - isu
        }
        Pattern::Paw => {
            let t_uv = view.common(u, v);
            let mut d = 0;
            if su {
                d += view.common(s, u) - isv + t_uv - isv;
            }
            if sv {
                d += view.common(s, v) - isu + t_uv - isu;
            }
            if su && sv {
                d += deg(s) - 2 + deg(u) - 2 + deg(v) - 2;
            }
            d + view.common3(s, u, v)
        }
        Pattern::Cycle4 => {
            let mut d = 0;
            if su {
                d += view.common(s, v) - 1;
            }
            if sv {
                d += view.common(s, u) - 1;
            }
            d
        }
        Pattern::Diamond => {
            let mut d = 0;
            if su && sv {
                d += view.common(u, v) - 1 + view.common(s, u) - 1 + view.common(s, v) - 1;
            }
            if su || sv {
                d += view.common3(s, u, v) * (isu + isv);
            }
            d
        }
        Pattern::Claw | Pattern::Clique4 => unreachable!("handled without tables"),
    }
}
