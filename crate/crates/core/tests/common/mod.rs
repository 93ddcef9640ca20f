#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use subgraph_dyn::aux_store::{AuxKey, PairKey, Table, TripleKey};
use subgraph_dyn::graph::{Graph, VertexId};
use subgraph_dyn::partition::EpsilonPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Update {
    Insert(u32, u32),
    Delete(u32, u32),
}

/// Mixed stream over `n` vertices whose insert probability drifts as
/// `0.5 + 0.4 sin(step / 200)`, so the edge count sweeps up and down.
/// Only effective updates are produced.
pub fn drifting_stream(seed: u64, n: u32, len: usize) -> Vec<Update> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new();
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let p_insert = 0.5 + 0.4 * (out.len() as f64 / 200.0).sin();
        let want_insert = rng.gen_bool(p_insert);
        let edges = g.edges();
        let full = edges.len() == (n * (n - 1) / 2) as usize;
        if (want_insert && !full) || edges.is_empty() {
            loop {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if a != b && !g.has_edge(VertexId(a), VertexId(b)) {
                    g.insert_edge(a, b).unwrap();
                    out.push(Update::Insert(a, b));
                    break;
                }
            }
        } else {
            let e = edges[rng.gen_range(0..edges.len())];
            g.delete_edge(e.a, e.b).unwrap();
            out.push(Update::Delete(e.a.0, e.b.0));
        }
    }
    out
}

pub fn random_graph(rng: &mut impl Rng, n: u32, p: f64) -> Graph {
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(v);
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(a, b).unwrap();
            }
        }
    }
    g
}

pub type TableDump = BTreeMap<AuxKey, u64>;

fn bump(map: &mut TableDump, key: AuxKey, by: u64) {
    if by > 0 {
        *map.entry(key).or_default() += by;
    }
}

/// Every auxiliary table evaluated straight from its definition.
pub fn definitional_tables(g: &Graph, part: &EpsilonPartition) -> BTreeMap<Table, TableDump> {
    let vs = g.vertices();
    let low = |x: VertexId| part.is_low(x);
    let adj = |a: VertexId, b: VertexId| g.has_edge(a, b);
    let mut out: BTreeMap<Table, TableDump> = Table::ALL.iter().map(|&t| (t, TableDump::new())).collect();

    for &v in &vs {
        // vLV: 2-paths v-x-w with x low
        let mut c = 0;
        for x in g.neighbors(v) {
            if low(x) {
                c += g.neighbors(x).filter(|&w| w != v).count() as u64;
            }
        }
        bump(out.get_mut(&Table::LowTwoPaths).unwrap(), AuxKey::Vertex(v), c);
        // t: triangles at high v
        if part.is_high(v) {
            let nb = g.sorted_neighbors(v);
            let mut t = 0;
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    t += adj(nb[i], nb[j]) as u64;
                }
            }
            bump(out.get_mut(&Table::HighTriangles).unwrap(), AuxKey::Vertex(v), t);
        }
    }

    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            let key = AuxKey::Pair(PairKey::new(a, b));
            let common: Vec<VertexId> = vs.iter().copied().filter(|&x| x != a && x != b && adj(a, x) && adj(x, b)).collect();
            let low_common: Vec<VertexId> = common.iter().copied().filter(|&x| low(x)).collect();
            bump(out.get_mut(&Table::LowWedges).unwrap(), key, low_common.len() as u64);
            if part.is_high(a) && part.is_high(b) {
                let hc = common.iter().filter(|&&x| part.is_high(x)).count() as u64;
                bump(out.get_mut(&Table::HighWedges).unwrap(), key, hc);
            }
            // cLV: low center x adjacent to a, b, plus a third leaf
            let claws: u64 = low_common.iter().map(|&x| g.degree(x) as u64 - 2).sum();
            bump(out.get_mut(&Table::LowClawPairs).unwrap(), key, claws);
            // uLLv: a-x-y-b with x, y low and all four distinct
            let mut paths = 0;
            for &x in &vs {
                for &y in &vs {
                    let distinct = x != y && ![a, b].contains(&x) && ![a, b].contains(&y);
                    if distinct && low(x) && low(y) && adj(a, x) && adj(x, y) && adj(y, b) {
                        paths += 1;
                    }
                }
            }
            bump(out.get_mut(&Table::LowLowPaths).unwrap(), key, paths);
            // pLL: (e, x, y, f) with {e, f} = {a, b}, x, y low,
            // edges e-x, x-f, x-y, f-y
            let mut paws = 0;
            for (e, f) in [(a, b), (b, a)] {
                for &x in &vs {
                    for &y in &vs {
                        let distinct = x != y && ![a, b].contains(&x) && ![a, b].contains(&y);
                        if distinct && low(x) && low(y) && adj(e, x) && adj(x, f) && adj(x, y) && adj(f, y) {
                            paws += 1;
                        }
                    }
                }
            }
            bump(out.get_mut(&Table::LowPaws).unwrap(), key, paws);
        }
    }

    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            for &c in &vs[j + 1..] {
                let n = vs
                    .iter()
                    .filter(|&&x| ![a, b, c].contains(&x) && low(x) && adj(x, a) && adj(x, b) && adj(x, c))
                    .count() as u64;
                bump(out.get_mut(&Table::LowClawTriples).unwrap(), AuxKey::Triple(TripleKey::new(a, b, c)), n);
            }
        }
    }
    out
}

/// `dump` restricted to keys containing `s`.
pub fn keys_with(dump: &TableDump, s: VertexId) -> TableDump {
    dump.iter()
        .filter(|(k, _)| match k {
            AuxKey::Vertex(v) => *v == s,
            AuxKey::Pair(p) => {
                let (a, b) = p.vertices();
                a == s || b == s
            }
            AuxKey::Triple(t) => {
                let (a, b, c) = t.vertices();
                a == s || b == s || c == s
            }
        })
        .map(|(k, v)| (*k, *v))
        .collect()
}

pub fn dump<C: subgraph_dyn::count::Count>(store: &subgraph_dyn::aux_store::AuxStore<C>, t: Table) -> TableDump {
    store.entries(t).into_iter().map(|(k, v)| (k, v.to_u64().unwrap())).collect()
}

use subgraph_dyn::counters::Pattern;

/// Pattern edges on vertices `0..k`.
pub fn pattern_edges(p: Pattern) -> &'static [(usize, usize)] {
    match p {
        Pattern::Triangle => &[(0, 1), (1, 2), (0, 2)],
        Pattern::Path3 => &[(0, 1), (1, 2), (2, 3)],
        Pattern::Claw => &[(0, 1), (0, 2), (0, 3)],
        Pattern::Paw => &[(0, 1), (1, 2), (0, 2), (2, 3)],
        Pattern::Cycle4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
        Pattern::Diamond => &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
        Pattern::Clique4 => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    }
}

fn pattern_order(p: Pattern) -> usize {
    if p == Pattern::Triangle {
        3
    } else {
        4
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(k - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, k - 1);
            out.push(p);
        }
    }
    out
}

fn has(edges: &[(usize, usize)], a: usize, b: usize) -> bool {
    edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
}

/// Automorphism count of `p`.
pub fn automorphisms(p: Pattern) -> u64 {
    let e = pattern_edges(p);
    permutations(pattern_order(p))
        .into_iter()
        .filter(|pi| e.iter().all(|&(a, b)| has(e, pi[a], pi[b])))
        .count() as u64
}

/// Which occurrences an embedding count keeps.
#[derive(Debug, Clone, Copy)]
pub enum Within {
    All,
    Vertex(u32),
    Edge(u32, u32),
}

/// Occurrences of `p` in `g` counted as injective edge-preserving maps over
/// automorphisms. `induced` also requires non-edges to map to non-edges.
pub fn embedding_count(g: &Graph, p: Pattern, induced: bool, within: Within) -> u64 {
    let vs = g.vertices();
    let k = pattern_order(p);
    let e = pattern_edges(p);
    let mut maps = 0u64;
    let mut img = vec![0usize; k];
    fn rec(
        depth: usize,
        k: usize,
        n: usize,
        img: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if depth == k {
            f(img);
            return;
        }
        for x in 0..n {
            if !img[..depth].contains(&x) {
                img[depth] = x;
                rec(depth + 1, k, n, img, f);
            }
        }
    }
    let adj = |a: usize, b: usize| g.has_edge(vs[a], vs[b]);
    rec(0, k, vs.len(), &mut img, &mut |m: &[usize]| {
        for a in 0..k {
            for b in a + 1..k {
                let want = has(e, a, b);
                let got = adj(m[a], m[b]);
                if (want && !got) || (induced && !want && got) {
                    return;
                }
            }
        }
        let keep = match within {
            Within::All => true,
            Within::Vertex(v) => m.iter().any(|&x| vs[x].0 == v),
            Within::Edge(x, y) => e.iter().any(|&(a, b)| {
                let (pa, pb) = (vs[m[a]].0, vs[m[b]].0);
                (pa, pb) == (x, y) || (pa, pb) == (y, x)
            }),
        };
        if keep {
            maps += 1;
        }
    });
    maps / automorphisms(p)
}

/// Subgraphs of `p` isomorphic to `q`, by trying every edge subset of `p`
/// against every relabelling of `q`.
pub fn embedding_multiplicity(p: Pattern, q: Pattern) -> u64 {
    if pattern_order(p) != pattern_order(q) {
        return 0;
    }
    let pe = pattern_edges(p);
    let qe = pattern_edges(q);
    let perms = permutations(pattern_order(p));
    let mut count = 0;
    for subset in 0u32..(1 << pe.len()) {
        if subset.count_ones() as usize != qe.len() {
            continue;
        }
        let chosen: Vec<(usize, usize)> = (0..pe.len()).filter(|&i| subset >> i & 1 == 1).map(|i| pe[i]).collect();
        if perms.iter().any(|pi| qe.iter().all(|&(a, b)| has(&chosen, pi[a], pi[b]))) {
            count += 1;
        }
    }
    count
}
