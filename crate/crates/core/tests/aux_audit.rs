mod common;

use common::{definitional_tables, drifting_stream, dump, keys_with, Update};
use subgraph_dyn::aux_store::{AuxStore, Table};
use subgraph_dyn::counters::{CounterConfig, DynamicCounter, Pattern};
use subgraph_dyn::graph::VertexId;
use subgraph_dyn::ops::Ops;

fn apply(c: &mut DynamicCounter<u64>, u: Update) {
    match u {
        Update::Insert(a, b) => c.insert_edge(a, b).unwrap(),
        Update::Delete(a, b) => c.delete_edge(a, b).unwrap(),
    };
}

#[test]
fn tables_match_definitions_every_step() {
    let mut saw_high = false;
    for (seed, eps) in [(1, 0.2), (2, 1.0 / 3.0), (3, 0.5)] {
        let cfg = CounterConfig::all().with_uniform_epsilon(eps);
        let mut c = DynamicCounter::<u64>::new(&cfg).unwrap();
        assert_eq!(c.trackers().len(), 1);
        for (step, u) in drifting_stream(seed, 10, 500).into_iter().enumerate() {
            apply(&mut c, u);
            let tr = &c.trackers()[0];
            saw_high |= tr.partition().high_count() > 0;
            let want = definitional_tables(c.graph(), tr.partition());
            for t in Table::ALL {
                assert!(tr.aux().is_enabled(t));
                assert_eq!(dump(tr.aux(), t), want[&t], "eps {eps} step {step} table {t}");
            }
            let mut fresh: AuxStore<u64> = AuxStore::new();
            for t in Table::ALL {
                fresh.enable(t);
            }
            fresh.recompute_from_scratch(c.graph(), tr.partition(), &Ops::new()).unwrap();
            for t in Table::ALL {
                assert_eq!(dump(&fresh, t), dump(tr.aux(), t), "recompute eps {eps} step {step} table {t}");
            }
        }
    }
    assert!(saw_high);
}

#[test]
fn scoped_tables_hold_only_keys_with_s() {
    let s = VertexId(4);
    let cfg = CounterConfig::patterns(&[Pattern::Path3, Pattern::Paw, Pattern::Cycle4, Pattern::Diamond])
        .with_uniform_epsilon(1.0 / 3.0)
        .with_s([s]);
    let mut c = DynamicCounter::<u64>::new(&cfg).unwrap();
    for (step, u) in drifting_stream(9, 10, 400).into_iter().enumerate() {
        apply(&mut c, u);
        let eng = &c.s_engines()[0];
        for tr in eng.trackers() {
            let want = definitional_tables(c.graph(), tr.partition());
            for t in tr.aux().enabled_tables() {
                let full = &want[&t];
                let expect = if tr.aux().is_scoped(t) { keys_with(full, s) } else { full.clone() };
                assert_eq!(dump(tr.aux(), t), expect, "step {step} table {t}");
            }
        }
    }
}
