//! Construction and verification of strong integer additive set-indexers.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::setalg::{self, DiffSet, IntSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling has {labels} labels but the graph has {vertices} vertices")]
    MissingLabel { labels: usize, vertices: usize },
    #[error("label size must be >= 1")]
    ZeroLabelSize,
}

/// A set-label for every vertex, indexed by vertex.
///
/// JSON form: `{"s": 2, "labels": [[0, 2], [7, 10], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    #[serde(rename = "s")]
    pub label_size: usize,
    pub labels: Vec<IntSet>,
}

impl Labeling {
    pub fn new(label_size: usize, labels: Vec<IntSet>) -> Self {
        Labeling { label_size, labels }
    }

    pub fn label(&self, v: usize) -> &IntSet {
        &self.labels[v]
    }

    /// Labels of `vertices`, in that order, matching [`Graph::induced_subgraph`].
    pub fn restrict(&self, vertices: &[usize]) -> Labeling {
        Labeling {
            label_size: self.label_size,
            labels: vertices.iter().map(|&v| self.labels[v].clone()).collect(),
        }
    }

    /// Number of distinct difference sets among the labels.
    pub fn distinct_difference_sets(&self) -> usize {
        self.labels
            .iter()
            .map(setalg::difference_set)
            .collect::<BTreeSet<DiffSet>>()
            .len()
    }

    fn check_total(&self, g: &Graph) -> Result<(), LabelingError> {
        if self.labels.len() != g.n() {
            return Err(LabelingError::MissingLabel {
                labels: self.labels.len(),
                vertices: g.n(),
            });
        }
        Ok(())
    }
}

/// Output of [`construct_strong_iasi_with_chain`]: the labeling plus the colour
/// class of every vertex and the base set of every class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub labeling: Labeling,
    pub classes: Vec<usize>,
    pub chain: Vec<IntSet>,
}

impl Construction {
    /// Length of the difference chain, one member per colour class.
    pub fn chain_length(&self) -> usize {
        self.chain.len()
    }
}

/// Proper colouring, visiting vertices by descending degree (ties by index)
/// and giving each the smallest colour unused by its coloured neighbours.
pub fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut color = vec![usize::MAX; g.n()];
    for v in order {
        let used: BTreeSet<usize> = g
            .neighbors(v)
            .map(|u| color[u])
            .filter(|&c| c != usize::MAX)
            .collect();
        color[v] = (0..).find(|c| !used.contains(c)).expect("unbounded range");
    }
    color
}

/// Builds a strong IASI of `g` whose labels all have `s` elements.
pub fn construct_strong_iasi(g: &Graph, s: usize) -> Result<Labeling, LabelingError> {
    construct_strong_iasi_with_chain(g, s).map(|c| c.labeling)
}

/// Colour classes get base sets from a difference chain; vertex `v` in class
/// `i` is labelled `B_i + {M * a_v}` where `a` is the greedy Sidon sequence and
/// `M = 1 + 2 * max(B)`. Distinct offsets separate vertex labels, distinct
/// offset sums separate edge sumsets, and translation keeps each class's
/// difference set, so adjacent (differently coloured) labels stay strong.
pub fn construct_strong_iasi_with_chain(g: &Graph, s: usize) -> Result<Construction, LabelingError> {
    if s == 0 {
        return Err(LabelingError::ZeroLabelSize);
    }
    let classes = greedy_coloring(g);
    let k = classes.iter().max().map_or(1, |&c| c + 1);
    let chain = setalg::make_difference_chain(k, s).expect("k and s are positive");
    let max_base = chain.iter().map(IntSet::max_element).max().expect("nonempty chain");
    let scale = 1 + 2 * max_base;
    let offsets = setalg::sidon_sequence(g.n());
    let labels = classes
        .iter()
        .zip(&offsets)
        .map(|(&c, &a)| chain[c].translate(scale * a))
        .collect();
    Ok(Construction {
        labeling: Labeling::new(s, labels),
        classes,
        chain,
    })
}

/// Edge label `f(u) + f(v)` for every edge, keyed by `(u, v)` with `u < v`.
pub fn induced_edge_labels(g: &Graph, labeling: &Labeling) -> Result<BTreeMap<(usize, usize), IntSet>, LabelingError> {
    labeling.check_total(g)?;
    Ok(g.edges()
        .into_iter()
        .map(|(u, v)| ((u, v), setalg::sumset(labeling.label(u), labeling.label(v))))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    VertexCollision,
    EdgeCollision,
    NonMultiplicativeEdge,
}

/// One violation. Vertex collisions name two vertices, edge collisions name
/// two edges, non-multiplicative edges name one edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub kind: FailureKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub is_iasi: bool,
    pub is_strong: bool,
    pub failures: Vec<Failure>,
}

/// Checks vertex injectivity, edge-sumset injectivity and `|f(u)+f(v)| = |f(u)||f(v)|`.
///
/// Failures are ordered by kind, then by witness: vertex pairs and edge pairs
/// lexicographically, multiplicativity failures by edge.
pub fn verify_strong_iasi(g: &Graph, labeling: &Labeling) -> Result<VerificationReport, LabelingError> {
    labeling.check_total(g)?;
    let mut failures = Vec::new();

    let mut by_label: HashMap<&IntSet, Vec<usize>> = HashMap::new();
    for (v, label) in labeling.labels.iter().enumerate() {
        by_label.entry(label).or_default().push(v);
    }
    let mut vertex_pairs = Vec::new();
    for group in by_label.values() {
        for (i, &u) in group.iter().enumerate() {
            for &v in &group[i + 1..] {
                vertex_pairs.push((u, v));
            }
        }
    }
    vertex_pairs.sort_unstable();
    failures.extend(vertex_pairs.into_iter().map(|(u, v)| Failure {
        kind: FailureKind::VertexCollision,
        vertices: vec![u, v],
        edges: Vec::new(),
    }));

    let edge_labels = induced_edge_labels(g, labeling)?;
    let mut by_sum: HashMap<&IntSet, Vec<(usize, usize)>> = HashMap::new();
    for (&e, sum) in &edge_labels {
        by_sum.entry(sum).or_default().push(e);
    }
    let mut edge_pairs = Vec::new();
    for group in by_sum.values() {
        for (i, &a) in group.iter().enumerate() {
            for &b in &group[i + 1..] {
                edge_pairs.push((a, b));
            }
        }
    }
    edge_pairs.sort_unstable();
    let is_iasi = failures.is_empty() && edge_pairs.is_empty();
    failures.extend(edge_pairs.into_iter().map(|(a, b)| Failure {
        kind: FailureKind::EdgeCollision,
        vertices: Vec::new(),
        edges: vec![[a.0, a.1], [b.0, b.1]],
    }));

    let mut multiplicative = true;
    for (&(u, v), sum) in &edge_labels {
        if sum.len() != labeling.label(u).len() * labeling.label(v).len() {
            multiplicative = false;
            failures.push(Failure {
                kind: FailureKind::NonMultiplicativeEdge,
                vertices: Vec::new(),
                edges: vec![[u, v]],
            });
        }
    }

    Ok(VerificationReport {
        is_iasi,
        is_strong: is_iasi && multiplicative,
        failures,
    })
}
