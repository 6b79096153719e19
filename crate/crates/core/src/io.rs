//! Text input formats and loading of any serialized structure.
//!
//! A text file starts with a header line `interval <n>` or `circular <n>`,
//! followed by `n` lines holding two numbers each: `<left> <right>` for
//! intervals, clockwise `<start> <end>` for arcs. Blank lines and anything
//! after `#` are ignored.

use std::fmt::Write as _;
use std::io::{Read, Write};

use crate::circular::{self, Anchor, ArcRealization, CircularArcGraph};
use crate::error::{Error, Result};
use crate::interval::{self, IntervalRealization, SuccinctIntervalGraph};
use crate::primitives::{SpaceComponent, SpaceUsage};
use crate::variants::{self, Containment, KProperGraph, ProperIntervalGraph};
use crate::GraphQueries;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Intervals,
    Arcs,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TextInput {
    pub kind: InputKind,
    pub pairs: Vec<(f64, f64)>,
}

pub fn parse_text(text: &str) -> Result<TextInput> {
    let mut header: Option<(InputKind, usize, usize)> = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let err = |message: String| Error::Parse { line, message };
        match header {
            None => {
                let kind = match fields[0] {
                    "interval" => InputKind::Intervals,
                    "circular" => InputKind::Arcs,
                    other => return Err(err(format!("expected `interval <n>` or `circular <n>`, found `{other}`"))),
                };
                let [_, count] = fields[..] else {
                    return Err(err("header needs exactly one count".into()));
                };
                let n = count.parse().map_err(|_| err(format!("bad count `{count}`")))?;
                header = Some((kind, n, line));
            }
            Some((_, n, _)) => {
                if pairs.len() == n {
                    return Err(err(format!("more than the {n} declared lines")));
                }
                let [a, b] = fields[..] else {
                    return Err(err(format!("expected two numbers, found {}", fields.len())));
                };
                let num = |s: &str| s.parse::<f64>().map_err(|_| err(format!("bad number `{s}`")));
                pairs.push((num(a)?, num(b)?));
            }
        }
    }
    let Some((kind, n, line)) = header else {
        return Err(Error::Parse { line: 1, message: "missing header".into() });
    };
    if pairs.len() != n {
        return Err(Error::Parse { line, message: format!("declared {n} lines, found {}", pairs.len()) });
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(TextInput { kind, pairs })
}

pub fn format_intervals(real: &IntervalRealization) -> String {
    let mut out = format!("interval {}\n", real.n());
    for &(l, r) in real.intervals() {
        writeln!(out, "{l} {r}").unwrap();
    }
    out
}

pub fn format_arcs(real: &ArcRealization) -> String {
    let mut out = format!("circular {}\n", real.n());
    for &(l, r) in real.arcs() {
        writeln!(out, "{l} {r}").unwrap();
    }
    out
}

/// The structure to build from a realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphType {
    Interval,
    Proper,
    KProper,
    KImproper,
    Circular,
}

impl GraphType {
    pub const ALL: [GraphType; 5] =
        [GraphType::Interval, GraphType::Proper, GraphType::KProper, GraphType::KImproper, GraphType::Circular];

    pub fn name(self) -> &'static str {
        match self {
            GraphType::Interval => "interval",
            GraphType::Proper => "proper",
            GraphType::KProper => "kproper",
            GraphType::KImproper => "kimproper",
            GraphType::Circular => "circular",
        }
    }

    pub fn input_kind(self) -> InputKind {
        if self == GraphType::Circular {
            InputKind::Arcs
        } else {
            InputKind::Intervals
        }
    }
}

impl std::fmt::Display for GraphType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GraphType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        GraphType::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown graph type `{s}`"))
    }
}

/// A normalized realization of either shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Intervals(IntervalRealization),
    Arcs(ArcRealization),
}

impl Instance {
    pub fn n(&self) -> usize {
        match self {
            Instance::Intervals(r) => r.n(),
            Instance::Arcs(r) => r.n(),
        }
    }

    pub fn to_raw(&self) -> Vec<(f64, f64)> {
        match self {
            Instance::Intervals(r) => r.to_raw(),
            Instance::Arcs(r) => r.to_raw(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Instance::Intervals(r) => format_intervals(r),
            Instance::Arcs(r) => format_arcs(r),
        }
    }

    /// Normalizes parsed text input, anchoring arcs as requested.
    pub fn from_text(input: &TextInput, anchor: Anchor) -> Result<Self> {
        Ok(match input.kind {
            InputKind::Intervals => Instance::Intervals(IntervalRealization::normalize(&input.pairs)?),
            InputKind::Arcs => Instance::Arcs(ArcRealization::normalize(&input.pairs, anchor)?),
        })
    }
}

/// Builds the requested structure; the instance shape must match the type.
pub fn build_graph(ty: GraphType, instance: &Instance, degree_table: bool) -> Result<AnyGraph> {
    Ok(match (ty, instance) {
        (GraphType::Interval, Instance::Intervals(r)) => AnyGraph::Interval(SuccinctIntervalGraph::build(r)),
        (GraphType::Proper, Instance::Intervals(r)) => AnyGraph::Proper(ProperIntervalGraph::build(r)?),
        (GraphType::KProper, Instance::Intervals(r)) => AnyGraph::KProper(KProperGraph::build(r, Containment::Proper)),
        (GraphType::KImproper, Instance::Intervals(r)) => {
            AnyGraph::KProper(KProperGraph::build(r, Containment::Improper))
        }
        (GraphType::Circular, Instance::Arcs(r)) => AnyGraph::Circular(if degree_table {
            CircularArcGraph::with_degree_table(r)
        } else {
            CircularArcGraph::build(r)
        }),
        (ty, _) => {
            return Err(Error::InvalidRealization(format!(
                "type {ty} needs `{}` input",
                if ty == GraphType::Circular { "circular" } else { "interval" }
            )))
        }
    })
}

/// Any of the serializable graph structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Interval(SuccinctIntervalGraph),
    Proper(ProperIntervalGraph),
    KProper(KProperGraph),
    Circular(CircularArcGraph),
}

impl AnyGraph {
    pub fn kind(&self) -> &'static str {
        match self {
            AnyGraph::Interval(_) => "interval",
            AnyGraph::Proper(_) => "proper",
            AnyGraph::KProper(g) if g.mode() == Containment::Proper => "kproper",
            AnyGraph::KProper(_) => "kimproper",
            AnyGraph::Circular(_) => "circular",
        }
    }

    pub fn queries(&self) -> &(dyn GraphQueries + Sync) {
        match self {
            AnyGraph::Interval(g) => g,
            AnyGraph::Proper(g) => g,
            AnyGraph::KProper(g) => g,
            AnyGraph::Circular(g) => g,
        }
    }

    /// The general interval representation, or `None` for circular-arc graphs.
    pub fn to_interval_graph(&self) -> Option<SuccinctIntervalGraph> {
        match self {
            AnyGraph::Interval(g) => Some(g.clone()),
            AnyGraph::Proper(g) => Some(g.to_interval_graph()),
            AnyGraph::KProper(g) => Some(g.to_interval_graph()),
            AnyGraph::Circular(_) => None,
        }
    }

    /// The realization stored in the structure.
    pub fn instance(&self) -> Instance {
        match self {
            AnyGraph::Interval(g) => Instance::Intervals(g.realization()),
            AnyGraph::Proper(g) => Instance::Intervals(g.realization()),
            AnyGraph::KProper(g) => Instance::Intervals(g.realization()),
            AnyGraph::Circular(g) => Instance::Arcs(g.realization()),
        }
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        match self {
            AnyGraph::Interval(g) => g.write_to(w),
            AnyGraph::Proper(g) => g.write_to(w),
            AnyGraph::KProper(g) => g.write_to(w),
            AnyGraph::Circular(g) => g.write_to(w),
        }
    }

    /// Dispatches on the four-byte tag at the start of `bytes`.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = bytes;
        let graph = match bytes.get(..4) {
            Some(tag) if tag == interval::MAGIC => AnyGraph::Interval(SuccinctIntervalGraph::read_from(&mut r)?),
            Some(tag) if tag == variants::PROPER_MAGIC => AnyGraph::Proper(ProperIntervalGraph::read_from(&mut r)?),
            Some(tag) if tag == variants::KPROPER_MAGIC => AnyGraph::KProper(KProperGraph::read_from(&mut r)?),
            Some(tag) if tag == circular::MAGIC => AnyGraph::Circular(CircularArcGraph::read_from(&mut r)?),
            _ => return Err(Error::Format("unrecognized file tag".into())),
        };
        if !r.is_empty() {
            return Err(Error::Format(format!("{} trailing bytes", r.len())));
        }
        Ok(graph)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        let mut bytes = Vec::new();
        r.read_to_end(&mut bytes)?;
        Self::from_bytes(&bytes)
    }

    /// Whether `bytes` starts with one of the graph tags.
    pub fn is_serialized(bytes: &[u8]) -> bool {
        bytes.get(..4).is_some_and(|tag| {
            [interval::MAGIC, variants::PROPER_MAGIC, variants::KPROPER_MAGIC, circular::MAGIC]
                .iter()
                .any(|m| tag == &m[..])
        })
    }
}

impl SpaceUsage for AnyGraph {
    fn space_breakdown(&self) -> Vec<SpaceComponent> {
        match self {
            AnyGraph::Interval(g) => g.space_breakdown(),
            AnyGraph::Proper(g) => g.space_breakdown(),
            AnyGraph::KProper(g) => g.space_breakdown(),
            AnyGraph::Circular(g) => g.space_breakdown(),
        }
    }
}
