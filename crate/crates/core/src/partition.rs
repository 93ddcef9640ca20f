//! Degree-threshold partition of the vertices into high and low degree.
//!
//! At each (re)classification a vertex is high iff `deg >= theta` with
//! `theta = M^epsilon` and `M = 2 * m0`. Between rebuilds a low vertex is
//! promoted once its degree reaches `1.5 * theta` and a high vertex is demoted
//! once its degree drops below `0.5 * theta`. A rebuild is requested when the
//! edge count leaves `[floor(M / 4), M)`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    High,
    Low,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    LowToHigh,
    HighToLow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionEvent {
    Move { vertex: VertexId, direction: Direction },
    RebuildRequired,
}

#[derive(Debug, Clone)]
pub struct EpsilonPartition {
    epsilon: f64,
    m0: usize,
    big_m: usize,
    theta: f64,
    high: HashSet<VertexId>,
    rebuilds: u64,
    updates_since_rebuild: u64,
}

impl EpsilonPartition {
    /// Classifies every vertex of `graph`.
    pub fn init(graph: &Graph, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidConfig(format!("epsilon {epsilon} is outside (0, 1)")));
        }
        let mut p = EpsilonPartition {
            epsilon,
            m0: 0,
            big_m: 2,
            theta: 0.0,
            high: HashSet::new(),
            rebuilds: 0,
            updates_since_rebuild: 0,
        };
        p.reclassify(graph);
        p.rebuilds = 0;
        Ok(p)
    }

    /// Starts a new epoch: resets `M` and `theta` and reclassifies every vertex.
    pub fn reclassify(&mut self, graph: &Graph) {
        self.m0 = graph.edge_count();
        self.big_m = (2 * self.m0).max(2);
        self.theta = (self.big_m as f64).powf(self.epsilon);
        let theta = self.theta;
        self.high = graph
            .vertices()
            .into_iter()
            .filter(|&v| graph.degree(v) as f64 >= theta)
            .collect();
        self.rebuilds += 1;
        self.updates_since_rebuild = 0;
    }

    /// Checks the endpoints of an applied update and moves them across the
    /// hysteresis band, smaller id first.
    pub fn after_update(&mut self, graph: &Graph, u: VertexId, v: VertexId) -> Vec<PartitionEvent> {
        self.after_update_with(graph, u, v, |_, _, _| Ok(()))
            .expect("no-op callback cannot fail")
    }

    /// Like [`after_update`](Self::after_update), invoking `on_move` right
    /// after each individual move so that dependent state can be updated while
    /// the other endpoint still has its previous side.
    pub fn after_update_with<F>(
        &mut self,
        graph: &Graph,
        u: VertexId,
        v: VertexId,
        mut on_move: F,
    ) -> Result<Vec<PartitionEvent>>
    where
        F: FnMut(&Self, VertexId, Direction) -> Result<()>,
    {
        self.updates_since_rebuild += 1;
        let m = graph.edge_count();
        if m < self.big_m / 4 || m >= self.big_m {
            return Ok(vec![PartitionEvent::RebuildRequired]);
        }
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        let mut events = Vec::new();
        for x in [a, b] {
            let deg = graph.degree(x) as f64;
            let direction = if self.is_high(x) {
                (deg < 0.5 * self.theta).then_some(Direction::HighToLow)
            } else {
                (deg >= 1.5 * self.theta).then_some(Direction::LowToHigh)
            };
            if let Some(direction) = direction {
                match direction {
                    Direction::LowToHigh => self.high.insert(x),
                    Direction::HighToLow => self.high.remove(&x),
                };
                on_move(self, x, direction)?;
                events.push(PartitionEvent::Move { vertex: x, direction });
            }
        }
        Ok(events)
    }

    pub fn side(&self, v: VertexId) -> Side {
        if self.high.contains(&v) {
            Side::High
        } else {
            Side::Low
        }
    }

    #[inline]
    pub fn is_high(&self, v: VertexId) -> bool {
        self.high.contains(&v)
    }

    #[inline]
    pub fn is_low(&self, v: VertexId) -> bool {
        !self.high.contains(&v)
    }

    pub fn high_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.high.iter().copied()
    }

    pub fn high_count(&self) -> usize {
        self.high.len()
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn m0(&self) -> usize {
        self.m0
    }

    /// The epoch size `M`.
    pub fn capacity(&self) -> usize {
        self.big_m
    }

    /// Number of classifications performed after the initial one.
    pub fn rebuilds(&self) -> u64 {
        self.rebuilds
    }

    pub fn updates_since_rebuild(&self) -> u64 {
        self.updates_since_rebuild
    }

    /// The high set in ascending order.
    pub fn sorted_high(&self) -> Vec<VertexId> {
        let mut h: Vec<_> = self.high.iter().copied().collect();
        h.sort_unstable();
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn star(k: u32) -> Graph {
        Graph::from_edges((1..=k).map(|i| (0u32, i))).unwrap()
    }

    #[test]
    fn empty_graph_has_minimum_capacity() {
        let p = EpsilonPartition::init(&Graph::new(), 0.5).unwrap();
        assert_eq!(p.capacity(), 2);
        assert_eq!(p.high_count(), 0);
    }

    #[test]
    fn rejects_epsilon_outside_unit_interval() {
        for eps in [0.0, 1.0, -0.5, 2.0, f64::NAN] {
            assert!(matches!(EpsilonPartition::init(&Graph::new(), eps), Err(Error::InvalidConfig(_))));
        }
    }

    #[test]
    fn star_center_is_high() {
        let g = star(8);
        let p = EpsilonPartition::init(&g, 0.5).unwrap();
        assert_eq!(p.capacity(), 16);
        assert!((p.theta() - 4.0).abs() < 1e-12);
        assert_eq!(p.sorted_high(), vec![VertexId(0)]);
    }

    #[test]
    fn promotion_at_one_and_a_half_theta() {
        // Eight disjoint edges give M = 16, theta = 4; vertex 100 then gains
        // neighbors one at a time and is promoted at degree 6.
        let mut g = Graph::from_edges((0..8u32).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let mut p = EpsilonPartition::init(&g, 0.5).unwrap();
        let hub = VertexId(100);
        for i in 0..5u32 {
            g.insert_edge(hub, VertexId(i * 2)).unwrap();
            assert!(p.after_update(&g, hub, VertexId(i * 2)).is_empty());
        }
        g.insert_edge(hub, VertexId(10)).unwrap();
        let ev = p.after_update(&g, hub, VertexId(10));
        assert_eq!(ev, vec![PartitionEvent::Move { vertex: hub, direction: Direction::LowToHigh }]);
        assert!(p.is_high(hub));
    }

    #[test]
    fn demotion_below_half_theta() {
        // K_{1,5} plus three disjoint edges: M = 16, theta = 4, center high.
        let mut g = star(5);
        for i in 0..3u32 {
            g.insert_edge(20 + 2 * i, 21 + 2 * i).unwrap();
        }
        let mut p = EpsilonPartition::init(&g, 0.5).unwrap();
        assert!(p.is_high(VertexId(0)));
        for i in 1..=4u32 {
            g.delete_edge(0, i).unwrap();
            let ev = p.after_update(&g, VertexId(0), VertexId(i));
            if i < 4 {
                assert!(ev.is_empty(), "step {i}: {ev:?}");
            } else {
                assert_eq!(ev, vec![PartitionEvent::Move { vertex: VertexId(0), direction: Direction::HighToLow }]);
            }
        }
    }

    #[test]
    fn growth_to_capacity_requests_rebuild() {
        let mut g = Graph::from_edges((0..8u32).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let mut p = EpsilonPartition::init(&g, 0.5).unwrap();
        for i in 0..8u32 {
            g.insert_edge(100 + 2 * i, 101 + 2 * i).unwrap();
            let ev = p.after_update(&g, VertexId(100 + 2 * i), VertexId(101 + 2 * i));
            if g.edge_count() == 16 {
                assert_eq!(ev, vec![PartitionEvent::RebuildRequired]);
            } else {
                assert!(ev.is_empty());
            }
        }
    }

    #[test]
    fn simultaneous_moves_are_ordered_by_id() {
        let mut g = Graph::new();
        for i in 0..40u32 {
            g.insert_edge(100 + 2 * i, 101 + 2 * i).unwrap();
        }
        g.insert_edge(3, 7).unwrap();
        for i in 0..5u32 {
            g.insert_edge(3, 20 + i).unwrap();
            g.insert_edge(7, 30 + i).unwrap();
        }
        // m0 = 51, M = 102, theta = 102^(1/3) ~ 4.67
        let mut p = EpsilonPartition::init(&g, 1.0 / 3.0).unwrap();
        assert!(p.is_high(VertexId(3)) && p.is_high(VertexId(7)));
        for i in 0..3u32 {
            g.delete_edge(3, 20 + i).unwrap();
            assert!(p.after_update(&g, VertexId(3), VertexId(20 + i)).is_empty());
            g.delete_edge(7, 30 + i).unwrap();
            assert!(p.after_update(&g, VertexId(7), VertexId(30 + i)).is_empty());
        }
        g.delete_edge(7, 3).unwrap();
        let mut seen = Vec::new();
        let ev = p
            .after_update_with(&g, VertexId(7), VertexId(3), |part, v, d| {
                seen.push((v, d, part.is_high(VertexId(7))));
                Ok(())
            })
            .unwrap();
        assert_eq!(ev.len(), 2);
        // 3 moves first, while 7 is still high.
        assert_eq!(
            seen,
            vec![(VertexId(3), Direction::HighToLow, true), (VertexId(7), Direction::HighToLow, false)]
        );
    }

    proptest! {
        #[test]
        fn init_matches_threshold_rule(edges in proptest::collection::vec((0u32..20, 0u32..20), 0..80), eps in prop::sample::select(vec![1.0/3.0, 0.5, 2.0/3.0])) {
            let mut g = Graph::new();
            for (a, b) in edges { if a != b { g.insert_edge(a, b).unwrap(); } }
            let p = EpsilonPartition::init(&g, eps).unwrap();
            let theta = ((2 * g.edge_count()).max(2) as f64).powf(eps);
            for v in g.vertices() {
                prop_assert_eq!(p.is_high(v), g.degree(v) as f64 >= theta);
            }
        }
    }
}
