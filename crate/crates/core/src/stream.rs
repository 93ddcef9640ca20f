//! Line-oriented update/query streams.
//!
//! One event per line, `#` starts a comment:
//!
//! ```text
//! + u v                 insert
//! - u v                 delete
//! q <pat>               global count
//! qi <pat>              induced global count
//! q <pat> edge u v      occurrences containing the edge
//! q triangle vertex v   triangles containing v
//! qs <pat> s            occurrences containing the pinned vertex s
//! ```
//!
//! Every query produces one output line: the query echoed in canonical form
//! followed by its count.

use crate::counters::{CounterConfig, DynamicCounter, Pattern};
use crate::error::{Error, Result};
use crate::gadgets::{GadgetSpec, GadgetUpdate, Target};
use crate::graph::VertexId;
use crate::oracle::{Filter, Mode, Oracle};
use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryKind {
    Global,
    Induced,
    Edge(VertexId, VertexId),
    Vertex(VertexId),
    SCount(VertexId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpdateEvent {
    Insert(VertexId, VertexId),
    Delete(VertexId, VertexId),
    Query { pattern: Pattern, kind: QueryKind },
}

impl fmt::Display for UpdateEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            UpdateEvent::Insert(u, v) => write!(f, "+ {u} {v}"),
            UpdateEvent::Delete(u, v) => write!(f, "- {u} {v}"),
            UpdateEvent::Query { pattern, kind } => match kind {
                QueryKind::Global => write!(f, "q {pattern}"),
                QueryKind::Induced => write!(f, "qi {pattern}"),
                QueryKind::Edge(u, v) => write!(f, "q {pattern} edge {u} {v}"),
                QueryKind::Vertex(v) => write!(f, "q {pattern} vertex {v}"),
                QueryKind::SCount(s) => write!(f, "qs {pattern} {s}"),
            },
        }
    }
}

fn parse_vertex(tok: Option<&str>, line: usize) -> Result<VertexId> {
    let tok = tok.ok_or_else(|| Error::Parse { line, message: "missing vertex id".into() })?;
    tok.parse::<u32>()
        .map(VertexId)
        .map_err(|_| Error::Parse { line, message: format!("bad vertex id `{tok}`") })
}

fn parse_pattern(tok: Option<&str>, line: usize) -> Result<Pattern> {
    let tok = tok.ok_or_else(|| Error::Parse { line, message: "missing pattern".into() })?;
    tok.parse().map_err(|_| Error::Parse { line, message: format!("unknown pattern `{tok}`") })
}

/// Parses one line; blank and comment lines give `None`.
pub fn parse_line(text: &str, line: usize) -> Result<Option<UpdateEvent>> {
    let body = text.split('#').next().unwrap_or("");
    let mut toks = body.split_whitespace();
    let Some(head) = toks.next() else {
        return Ok(None);
    };
    let event = match head {
        "+" | "-" => {
            let u = parse_vertex(toks.next(), line)?;
            let v = parse_vertex(toks.next(), line)?;
            if u == v {
                return Err(Error::Parse { line, message: format!("self-loop at {u}") });
            }
            if head == "+" {
                UpdateEvent::Insert(u, v)
            } else {
                UpdateEvent::Delete(u, v)
            }
        }
        "q" => {
            let pattern = parse_pattern(toks.next(), line)?;
            let kind = match toks.next() {
                None => QueryKind::Global,
                Some("edge") => {
                    let u = parse_vertex(toks.next(), line)?;
                    let v = parse_vertex(toks.next(), line)?;
                    QueryKind::Edge(u, v)
                }
                Some("vertex") if pattern == Pattern::Triangle => QueryKind::Vertex(parse_vertex(toks.next(), line)?),
                Some("vertex") => {
                    return Err(Error::Parse { line, message: "vertex queries are supported for triangles only".into() })
                }
                Some(other) => return Err(Error::Parse { line, message: format!("unexpected `{other}`") }),
            };
            UpdateEvent::Query { pattern, kind }
        }
        "qi" => UpdateEvent::Query { pattern: parse_pattern(toks.next(), line)?, kind: QueryKind::Induced },
        "qs" => {
            let pattern = parse_pattern(toks.next(), line)?;
            UpdateEvent::Query { pattern, kind: QueryKind::SCount(parse_vertex(toks.next(), line)?) }
        }
        other => return Err(Error::Parse { line, message: format!("unknown command `{other}`") }),
    };
    if let Some(extra) = toks.next() {
        return Err(Error::Parse { line, message: format!("trailing token `{extra}`") });
    }
    Ok(Some(event))
}

/// Parses a whole stream into `(line number, event)` pairs.
pub fn parse_stream(text: &str) -> Result<Vec<(usize, UpdateEvent)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(ev) = parse_line(line, i + 1)? {
            out.push((i + 1, ev));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EngineConfig {
    /// Enabled patterns; empty means all.
    pub patterns: Vec<Pattern>,
    pub epsilon: BTreeMap<Pattern, f64>,
    pub s_vertices: Vec<VertexId>,
    /// Answer plain global queries with induced counts.
    pub induced: bool,
    pub oracle_check: bool,
    /// Where to write the per-update operation counts as CSV.
    pub ops_out: Option<std::path::PathBuf>,
}

impl EngineConfig {
    fn counter_config(&self) -> Result<CounterConfig> {
        let mut c = if self.patterns.is_empty() { CounterConfig::all() } else { CounterConfig::patterns(&self.patterns) };
        for (&p, &eps) in &self.epsilon {
            if !(eps > 0.0 && eps < 1.0) {
                return Err(Error::InvalidConfig(format!("epsilon {eps} for {p} is outside (0, 1)")));
            }
            c = c.with_epsilon(p, eps);
        }
        Ok(c.with_s(self.s_vertices.iter().copied()))
    }
}

/// Per-update operation counts collected while running a stream.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunSummary {
    pub updates: u64,
    pub queries: u64,
    /// `(line, event, ops)` for every update.
    pub ops: Vec<(usize, UpdateEvent, u64)>,
}

impl RunSummary {
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "line,kind,u,v,ops")?;
        for (line, ev, ops) in &self.ops {
            let (kind, u, v) = match ev {
                UpdateEvent::Insert(u, v) => ("insert", u, v),
                UpdateEvent::Delete(u, v) => ("delete", u, v),
                UpdateEvent::Query { .. } => continue,
            };
            writeln!(w, "{line},{kind},{u},{v},{ops}")?;
        }
        Ok(())
    }
}

fn answer(c: &DynamicCounter<u128>, pattern: Pattern, kind: QueryKind, induced: bool) -> Result<u128> {
    match kind {
        QueryKind::Global if induced => c.induced(pattern),
        QueryKind::Global => c.total(pattern),
        QueryKind::Induced => c.induced(pattern),
        QueryKind::Edge(u, v) => c.edge_query(pattern, u, v),
        QueryKind::Vertex(v) => c.triangle_vertex_query(v),
        QueryKind::SCount(s) => c.s_count(s, pattern),
    }
}

fn oracle_answer(c: &DynamicCounter<u128>, pattern: Pattern, kind: QueryKind, induced: bool) -> Result<u128> {
    let oracle = Oracle::default();
    let g = c.graph();
    let (mode, filter) = match kind {
        QueryKind::Global if induced => (Mode::Induced, Filter::None),
        QueryKind::Global => (Mode::NonInduced, Filter::None),
        QueryKind::Induced => (Mode::Induced, Filter::None),
        QueryKind::Edge(u, v) => (Mode::NonInduced, Filter::Edge(u, v)),
        QueryKind::Vertex(v) | QueryKind::SCount(v) => (Mode::NonInduced, Filter::Vertex(v)),
    };
    Ok(oracle.count(g, pattern, mode, filter)? as u128)
}

/// Runs `input` through a fresh engine, writing one line per query to `out`.
pub fn run_stream<R: BufRead, W: Write>(input: R, config: &EngineConfig, mut out: W) -> Result<RunSummary> {
    let mut counter = DynamicCounter::<u128>::new(&config.counter_config()?)?;
    let mut summary = RunSummary::default();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let Some(event) = parse_line(&line?, line_no)? else {
            continue;
        };
        match event {
            UpdateEvent::Insert(u, v) | UpdateEvent::Delete(u, v) => {
                let before = counter.ops();
                if matches!(event, UpdateEvent::Insert(..)) {
                    counter.insert_edge(u, v)?;
                } else {
                    counter.delete_edge(u, v)?;
                }
                summary.updates += 1;
                summary.ops.push((line_no, event, counter.ops() - before));
            }
            UpdateEvent::Query { pattern, kind } => {
                let value = answer(&counter, pattern, kind, config.induced)?;
                if config.oracle_check {
                    let expect = oracle_answer(&counter, pattern, kind, config.induced)?;
                    if expect != value {
                        return Err(Error::OracleMismatch {
                            step: line_no,
                            query: event.to_string(),
                            engine: value,
                            oracle: expect,
                        });
                    }
                }
                summary.queries += 1;
                writeln!(out, "{event} {value}")?;
            }
        }
    }
    out.flush()?;
    if let Some(path) = &config.ops_out {
        let file = std::fs::File::create(path)?;
        summary.write_csv(std::io::BufWriter::new(file))?;
    }
    Ok(summary)
}

/// Serializes a reduction instance: base inserts, the vector-dependent
/// updates, then the detection query. For path counting the threshold the
/// count must exceed is given in a `# path3-threshold N` comment.
pub fn emit_gadget(spec: &GadgetSpec, u: &[bool], v: &[bool]) -> Result<String> {
    let red = spec.reduction(u, v)?;
    let Target::Pattern(pattern) = red.target else {
        return Err(Error::UnsupportedProblem(format!("{} has no stream query", spec.problem)));
    };
    let bits = |xs: &[bool]| xs.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
    let mut s = String::new();
    use fmt::Write as _;
    writeln!(s, "# gadget {} {} M={} u={} v={}", spec.problem, spec.direction, spec.matrix, bits(u), bits(v)).unwrap();
    if let Some(apex) = red.s {
        writeln!(s, "# apex {apex}").unwrap();
    }
    for e in &red.base {
        writeln!(s, "+ {} {}", e.a, e.b).unwrap();
    }
    for up in &red.updates {
        match up {
            GadgetUpdate::Insert(e) => writeln!(s, "+ {} {}", e.a, e.b).unwrap(),
            GadgetUpdate::Delete(e) => writeln!(s, "- {} {}", e.a, e.b).unwrap(),
        }
    }
    if let Some(t) = red.threshold {
        writeln!(s, "# path3-threshold {t}").unwrap();
    }
    writeln!(s, "q {pattern}").unwrap();
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{BoolMatrix, Problem, UpdateDirection};

    fn run(text: &str, config: &EngineConfig) -> Result<String> {
        let mut out = Vec::new();
        run_stream(text.as_bytes(), config, &mut out)?;
        Ok(String::from_utf8(out).unwrap())
    }

    const K4: &str = "+ 0 1\n+ 0 2\n+ 0 3\n+ 1 2\n+ 1 3\n+ 2 3\n";

    #[test]
    fn triangle_stream() {
        assert_eq!(run("+ 0 1\n+ 1 2\n+ 2 0\nq triangle\n", &EngineConfig::default()).unwrap(), "q triangle 1\n");
    }

    #[test]
    fn clique_queries() {
        let text = format!("{K4}q diamond\nqi c4\nqi k4\nq paw edge 0 1\nq triangle vertex 2\n");
        let out = run(&text, &EngineConfig { oracle_check: true, ..Default::default() }).unwrap();
        assert_eq!(out, "q diamond 6\nqi c4 0\nqi k4 1\nq paw edge 0 1 8\nq triangle vertex 2 3\n");
    }

    #[test]
    fn induced_flag_switches_plain_queries() {
        let text = format!("{K4}q c4\n");
        let out = run(&text, &EngineConfig { induced: true, ..Default::default() }).unwrap();
        assert_eq!(out, "q c4 0\n");
    }

    #[test]
    fn s_queries() {
        let cfg = EngineConfig { s_vertices: vec![VertexId(0)], ..Default::default() };
        let out = run(&format!("{K4}- 2 3\nqs triangle 0\n"), &cfg).unwrap();
        assert_eq!(out, "qs triangle 0 2\n");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        for (text, line) in [("+ 0 1\n# note\n+ 0\n", 3), ("q hexagon\n", 1), ("+ 2 2\n", 1), ("* 1 2\n", 1), ("q paw vertex 1\n", 1), ("qi k4 5\n", 1)] {
            match run(text, &EngineConfig::default()) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let events = parse_stream("# header\n\n+ 1 2 # trailing\n  q k4  \n").unwrap();
        assert_eq!(events.len(), 2);
        assert_eq!(events[0], (3, UpdateEvent::Insert(VertexId(1), VertexId(2))));
    }

    #[test]
    fn invalid_epsilon() {
        let mut cfg = EngineConfig::default();
        cfg.epsilon.insert(Pattern::Paw, 1.5);
        assert!(matches!(run("q paw\n", &cfg), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn deterministic_output() {
        let text = format!("{K4}q path3\n- 0 1\nq path3\nq claw edge 0 2\n");
        let a = run(&text, &EngineConfig::default()).unwrap();
        let b = run(&text, &EngineConfig::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn ops_csv() {
        let mut out = Vec::new();
        let summary = run_stream(K4.as_bytes(), &EngineConfig::default(), &mut out).unwrap();
        assert_eq!(summary.updates, 6);
        let mut csv = Vec::new();
        summary.write_csv(&mut csv).unwrap();
        let csv = String::from_utf8(csv).unwrap();
        assert_eq!(csv.lines().count(), 7);
        assert!(csv.starts_with("line,kind,u,v,ops\n1,insert,0,1,"));
    }

    #[test]
    fn figure_gadget_stream() {
        let m = BoolMatrix::from_rows(&[[1, 0, 1, 0], [0, 1, 1, 0], [0, 1, 1, 1]]).unwrap();
        let spec = GadgetSpec::new(m, Problem::Diamond, UpdateDirection::Decremental).unwrap();
        let v = [false, true, true, false];
        let text = emit_gadget(&spec, &[true, true, false], &v).unwrap();
        let last = run(&text, &EngineConfig::default()).unwrap();
        let count: u64 = last.trim().rsplit(' ').next().unwrap().parse().unwrap();
        assert!(count > 0);
        let text = emit_gadget(&spec, &[false; 3], &v).unwrap();
        assert_eq!(run(&text, &EngineConfig::default()).unwrap(), "q diamond 0\n");
    }

    #[test]
    fn cycle_gadgets_without_token_are_rejected() {
        let spec = GadgetSpec::new(BoolMatrix::identity(2), Problem::OddCycle(5), UpdateDirection::Incremental).unwrap();
        assert!(matches!(emit_gadget(&spec, &[true; 2], &[true; 2]), Err(Error::UnsupportedProblem(_))));
    }
}
