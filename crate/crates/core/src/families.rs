//! Generators for the named graph families, each with a fixed vertex numbering.
//!
//! | family       | vertices                                                    |
//! |--------------|-------------------------------------------------------------|
//! | `path`       | `0..=m` in path order (length `m`, so `m + 1` vertices)     |
//! | `cycle`      | `0..n` in cycle order                                       |
//! | `kmn`        | part A `0..m`, part B `m..m+n`                              |
//! | `wheel`      | rim `0..n`, hub `n`                                         |
//! | `helm`       | hub `0`, rim `1..=n`, pendant `n+i` on rim vertex `i`       |
//! | `friendship` | center `0`, triangle `j` on `2j+1, 2j+2`                    |
//! | `fan`        | independent `0..m`, path `m..m+n`                           |
//! | `split`      | clique `0..c`, independent `c..c+s`                         |
//! | `ksplit`     | clique `0..c`, independent `c..c+s`                         |
//! | `sun`/`csun` | `U = 0..n`, `W = n..2n`, `w_j ~ u_j, u_(j+1 mod n)`         |
//! | `sunlet`     | cycle `0..n`, pendant `n+i` on cycle vertex `i`             |

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: parameter {param} = {value} is below the minimum {min}")]
    BelowMinimum {
        family: &'static str,
        param: &'static str,
        value: usize,
        min: usize,
    },
    #[error("split: independent vertex {vertex} has an empty neighbor list")]
    IsolatedIndependentVertex { vertex: usize },
    #[error("split: independent vertex {vertex} lists clique vertex {neighbor}, but the clique is 0..{c}")]
    NeighborOutOfRange { vertex: usize, neighbor: usize, c: usize },
    #[error("split: independent vertex {vertex} lists clique vertex {neighbor} twice")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family} takes {expected} parameter range(s), got {got}")]
    WrongArity {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("empty range for {0}")]
    EmptyRange(&'static str),
}

/// One named graph family together with its parameters.
///
/// JSON form: `{"family": "helm", "params": {"n": 4}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "lowercase")]
pub enum FamilySpec {
    Path { m: usize },
    Cycle { n: usize },
    Complete { n: usize },
    #[serde(rename = "kmn")]
    CompleteBipartite { m: usize, n: usize },
    Wheel { n: usize },
    Helm { n: usize },
    Friendship { n: usize },
    Fan { m: usize, n: usize },
    /// `adj[i]` lists the clique neighbours of independent vertex `c + i`.
    Split { c: usize, adj: Vec<Vec<usize>> },
    #[serde(rename = "ksplit")]
    CompleteSplit { c: usize, s: usize },
    Sun { n: usize },
    #[serde(rename = "csun")]
    CompleteSun { n: usize },
    Sunlet { n: usize },
}

/// Family name without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Wheel,
    Helm,
    Friendship,
    Fan,
    Split,
    CompleteSplit,
    Sun,
    CompleteSun,
    Sunlet,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 13] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::Wheel,
        FamilyKind::Helm,
        FamilyKind::Friendship,
        FamilyKind::Fan,
        FamilyKind::Split,
        FamilyKind::CompleteSplit,
        FamilyKind::Sun,
        FamilyKind::CompleteSun,
        FamilyKind::Sunlet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "kmn",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Helm => "helm",
            FamilyKind::Friendship => "friendship",
            FamilyKind::Fan => "fan",
            FamilyKind::Split => "split",
            FamilyKind::CompleteSplit => "ksplit",
            FamilyKind::Sun => "sun",
            FamilyKind::CompleteSun => "csun",
            FamilyKind::Sunlet => "sunlet",
        }
    }

    /// Names and minimum values of the grid parameters, in grid order.
    ///
    /// For `split` the axes are the clique order `c` and the independent
    /// set size `s`; every multiset of nonempty neighbour lists is enumerated.
    pub fn axes(self) -> &'static [(&'static str, usize)] {
        match self {
            FamilyKind::Path => &[("m", 1)],
            FamilyKind::Complete | FamilyKind::Friendship => &[("n", 1)],
            FamilyKind::Cycle
            | FamilyKind::Wheel
            | FamilyKind::Helm
            | FamilyKind::Sun
            | FamilyKind::CompleteSun
            | FamilyKind::Sunlet => &[("n", 3)],
            FamilyKind::CompleteBipartite | FamilyKind::Fan => &[("m", 1), ("n", 1)],
            FamilyKind::Split => &[("c", 1), ("s", 0)],
            FamilyKind::CompleteSplit => &[("c", 1), ("s", 1)],
        }
    }

    /// Default parameter ranges used by the full reconciliation grid.
    pub fn default_ranges(self) -> Vec<RangeInclusive<usize>> {
        match self {
            FamilyKind::Split => vec![1..=3, 0..=3],
            _ => self.axes().iter().map(|&(_, min)| min..=10).collect(),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_owned()))
    }
}

fn at_least(family: &'static str, param: &'static str, value: usize, min: usize) -> Result<(), FamilyError> {
    if value < min {
        return Err(FamilyError::BelowMinimum { family, param, value, min });
    }
    Ok(())
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::Cycle { .. } => FamilyKind::Cycle,
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::CompleteBipartite { .. } => FamilyKind::CompleteBipartite,
            FamilySpec::Wheel { .. } => FamilyKind::Wheel,
            FamilySpec::Helm { .. } => FamilyKind::Helm,
            FamilySpec::Friendship { .. } => FamilyKind::Friendship,
            FamilySpec::Fan { .. } => FamilyKind::Fan,
            FamilySpec::Split { .. } => FamilyKind::Split,
            FamilySpec::CompleteSplit { .. } => FamilyKind::CompleteSplit,
            FamilySpec::Sun { .. } => FamilyKind::Sun,
            FamilySpec::CompleteSun { .. } => FamilyKind::CompleteSun,
            FamilySpec::Sunlet { .. } => FamilyKind::Sunlet,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let name = self.kind().name();
        match *self {
            FamilySpec::Path { m } => at_least(name, "m", m, 1),
            FamilySpec::Complete { n } | FamilySpec::Friendship { n } => at_least(name, "n", n, 1),
            FamilySpec::Cycle { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Helm { n }
            | FamilySpec::Sun { n }
            | FamilySpec::CompleteSun { n }
            | FamilySpec::Sunlet { n } => at_least(name, "n", n, 3),
            FamilySpec::CompleteBipartite { m, n } | FamilySpec::Fan { m, n } => {
                at_least(name, "m", m, 1)?;
                at_least(name, "n", n, 1)
            }
            FamilySpec::CompleteSplit { c, s } => {
                at_least(name, "c", c, 1)?;
                at_least(name, "s", s, 1)
            }
            FamilySpec::Split { c, ref adj } => {
                at_least(name, "c", c, 1)?;
                for (i, list) in adj.iter().enumerate() {
                    let vertex = c + i;
                    if list.is_empty() {
                        return Err(FamilyError::IsolatedIndependentVertex { vertex });
                    }
                    let mut seen = vec![false; c];
                    for &neighbor in list {
                        if neighbor >= c {
                            return Err(FamilyError::NeighborOutOfRange { vertex, neighbor, c });
                        }
                        if std::mem::replace(&mut seen[neighbor], true) {
                            return Err(FamilyError::RepeatedNeighbor { vertex, neighbor });
                        }
                    }
                }
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Path { m } => m + 1,
            FamilySpec::Cycle { n } | FamilySpec::Complete { n } => n,
            FamilySpec::CompleteBipartite { m, n } | FamilySpec::Fan { m, n } => m + n,
            FamilySpec::Wheel { n } => n + 1,
            FamilySpec::Helm { n } | FamilySpec::Friendship { n } => 2 * n + 1,
            FamilySpec::Split { c, ref adj } => c + adj.len(),
            FamilySpec::CompleteSplit { c, s } => c + s,
            FamilySpec::Sun { n } | FamilySpec::CompleteSun { n } | FamilySpec::Sunlet { n } => 2 * n,
        }
    }

    /// Parameters as `key=value` pairs separated by spaces, e.g. `m=2 n=3`.
    /// Split neighbour lists use the CLI syntax: `c=2 adj=0,1;1`.
    pub fn params_string(&self) -> String {
        match *self {
            FamilySpec::Path { m } => format!("m={m}"),
            FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Helm { n }
            | FamilySpec::Friendship { n }
            | FamilySpec::Sun { n }
            | FamilySpec::CompleteSun { n }
            | FamilySpec::Sunlet { n } => format!("n={n}"),
            FamilySpec::CompleteBipartite { m, n } | FamilySpec::Fan { m, n } => format!("m={m} n={n}"),
            FamilySpec::CompleteSplit { c, s } => format!("c={c} s={s}"),
            FamilySpec::Split { c, ref adj } => format!("c={c} adj={}", format_adjacency(adj)),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind(), self.params_string())
    }
}

/// `[[0, 1], [2]]` -> `"0,1;2"`.
pub fn format_adjacency(adj: &[Vec<usize>]) -> String {
    adj.iter()
        .map(|l| l.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

/// Parses `"0,1;2"` into `[[0, 1], [2]]`. An empty string yields no lists.
pub fn parse_adjacency(text: &str) -> Result<Vec<Vec<usize>>, std::num::ParseIntError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|group| {
            group
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(str::parse)
                .collect()
        })
        .collect()
}

fn cycle_edges(g: &mut Graph, vertices: &[usize]) {
    let k = vertices.len();
    for i in 0..k {
        g.add_edge(vertices[i], vertices[(i + 1) % k]).expect("valid cycle");
    }
}

/// Builds the canonical graph for `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let mut g = Graph::new(spec.vertex_count()).expect("validated specs are nonempty");
    let edge = |g: &mut Graph, u: usize, v: usize| g.add_edge(u, v).expect("generator edge in range");
    match *spec {
        FamilySpec::Path { m } => {
            for i in 0..m {
                edge(&mut g, i, i + 1);
            }
        }
        FamilySpec::Cycle { n } => cycle_edges(&mut g, &(0..n).collect::<Vec<_>>()),
        FamilySpec::Complete { n } => {
            for u in 0..n {
                for v in u + 1..n {
                    edge(&mut g, u, v);
                }
            }
        }
        FamilySpec::CompleteBipartite { m, n } => {
            for u in 0..m {
                for v in m..m + n {
                    edge(&mut g, u, v);
                }
            }
        }
        FamilySpec::Wheel { n } => {
            cycle_edges(&mut g, &(0..n).collect::<Vec<_>>());
            for v in 0..n {
                edge(&mut g, v, n);
            }
        }
        FamilySpec::Helm { n } => {
            cycle_edges(&mut g, &(1..=n).collect::<Vec<_>>());
            for i in 1..=n {
                edge(&mut g, 0, i);
                edge(&mut g, i, n + i);
            }
        }
        FamilySpec::Friendship { n } => {
            for j in 0..n {
                let (a, b) = (2 * j + 1, 2 * j + 2);
                edge(&mut g, 0, a);
                edge(&mut g, 0, b);
                edge(&mut g, a, b);
            }
        }
        FamilySpec::Fan { m, n } => {
            for i in m + 1..m + n {
                edge(&mut g, i - 1, i);
            }
            for u in 0..m {
                for v in m..m + n {
                    edge(&mut g, u, v);
                }
            }
        }
        FamilySpec::Split { c, ref adj } => {
            for u in 0..c {
                for v in u + 1..c {
                    edge(&mut g, u, v);
                }
            }
            for (i, list) in adj.iter().enumerate() {
                for &k in list {
                    edge(&mut g, k, c + i);
                }
            }
        }
        FamilySpec::CompleteSplit { c, s } => {
            for u in 0..c {
                for v in u + 1..c + s {
                    edge(&mut g, u, v);
                }
            }
        }
        FamilySpec::Sun { n } | FamilySpec::CompleteSun { n } => {
            if matches!(spec, FamilySpec::Sun { .. }) {
                cycle_edges(&mut g, &(0..n).collect::<Vec<_>>());
            } else {
                for u in 0..n {
                    for v in u + 1..n {
                        edge(&mut g, u, v);
                    }
                }
            }
            for j in 0..n {
                edge(&mut g, n + j, j);
                edge(&mut g, n + j, (j + 1) % n);
            }
        }
        FamilySpec::Sunlet { n } => {
            cycle_edges(&mut g, &(0..n).collect::<Vec<_>>());
            for i in 0..n {
                edge(&mut g, i, n + i);
            }
        }
    }
    Ok(g)
}

fn spec_from_params(kind: FamilyKind, p: &[usize]) -> FamilySpec {
    match kind {
        FamilyKind::Path => FamilySpec::Path { m: p[0] },
        FamilyKind::Cycle => FamilySpec::Cycle { n: p[0] },
        FamilyKind::Complete => FamilySpec::Complete { n: p[0] },
        FamilyKind::CompleteBipartite => FamilySpec::CompleteBipartite { m: p[0], n: p[1] },
        FamilyKind::Wheel => FamilySpec::Wheel { n: p[0] },
        FamilyKind::Helm => FamilySpec::Helm { n: p[0] },
        FamilyKind::Friendship => FamilySpec::Friendship { n: p[0] },
        FamilyKind::Fan => FamilySpec::Fan { m: p[0], n: p[1] },
        FamilyKind::CompleteSplit => FamilySpec::CompleteSplit { c: p[0], s: p[1] },
        FamilyKind::Sun => FamilySpec::Sun { n: p[0] },
        FamilyKind::CompleteSun => FamilySpec::CompleteSun { n: p[0] },
        FamilyKind::Sunlet => FamilySpec::Sunlet { n: p[0] },
        FamilyKind::Split => unreachable!("split specs are enumerated separately"),
    }
}

/// Every split spec with clique order `c` and `s` independent vertices, up to
/// reordering of the independent vertices: neighbour lists are nonempty subsets
/// of the clique, taken as a non-decreasing sequence of bitmasks.
pub fn split_specs(c: usize, s: usize) -> Vec<FamilySpec> {
    let masks: Vec<u64> = (1..1u64 << c).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(s);
    fn rec(masks: &[u64], start: usize, s: usize, c: usize, chosen: &mut Vec<u64>, out: &mut Vec<FamilySpec>) {
        if chosen.len() == s {
            let adj = chosen
                .iter()
                .map(|&m| (0..c).filter(|&k| m >> k & 1 == 1).collect())
                .collect();
            out.push(FamilySpec::Split { c, adj });
            return;
        }
        for i in start..masks.len() {
            chosen.push(masks[i]);
            rec(masks, i, s, c, chosen, out);
            chosen.pop();
        }
    }
    rec(&masks, 0, s, c, &mut chosen, &mut out);
    out
}

/// Every spec of `kind` over the cartesian product of `ranges`, in
/// lexicographic parameter order.
pub fn family_specs(kind: FamilyKind, ranges: &[RangeInclusive<usize>]) -> Result<Vec<FamilySpec>, FamilyError> {
    let axes = kind.axes();
    if ranges.len() != axes.len() {
        return Err(FamilyError::WrongArity {
            family: kind.name(),
            expected: axes.len(),
            got: ranges.len(),
        });
    }
    for (range, &(param, min)) in ranges.iter().zip(axes) {
        if range.is_empty() {
            return Err(FamilyError::EmptyRange(param));
        }
        at_least(kind.name(), param, *range.start(), min)?;
    }
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for range in ranges {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                range.clone().map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    Ok(match kind {
        FamilyKind::Split => tuples.iter().flat_map(|t| split_specs(t[0], t[1])).collect(),
        _ => tuples.iter().map(|t| spec_from_params(kind, t)).collect(),
    })
}

/// All `(spec, r)` cells for the given parameter ranges and a fixed exponent range.
pub fn family_grid(
    kind: FamilyKind,
    ranges: &[RangeInclusive<usize>],
    r_range: RangeInclusive<usize>,
) -> Result<Vec<(FamilySpec, usize)>, FamilyError> {
    if r_range.is_empty() {
        return Err(FamilyError::EmptyRange("r"));
    }
    at_least(kind.name(), "r", *r_range.start(), 1)?;
    let specs = family_specs(kind, ranges)?;
    Ok(specs
        .into_iter()
        .flat_map(|spec| r_range.clone().map(move |r| (spec.clone(), r)))
        .collect())
}

/// Like [`family_grid`], but each spec gets exponents `1..=diameter + 1`.
pub fn family_grid_to_diameter(
    kind: FamilyKind,
    ranges: &[RangeInclusive<usize>],
) -> Result<Vec<(FamilySpec, usize)>, FamilyError> {
    let specs = family_specs(kind, ranges)?;
    let mut cells = Vec::new();
    for spec in specs {
        let diameter = generate(&spec)?
            .diameter()
            .expect("family graphs are connected");
        cells.extend((1..=diameter + 1).map(|r| (spec.clone(), r)));
    }
    Ok(cells)
}

/// The default grid over every family, in [`FamilyKind::ALL`] order.
pub fn default_grid() -> Vec<(FamilySpec, usize)> {
    FamilyKind::ALL
        .into_iter()
        .flat_map(|kind| {
            family_grid_to_diameter(kind, &kind.default_ranges()).expect("default ranges are valid")
        })
        .collect()
}
