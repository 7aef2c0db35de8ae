//! Brute-force reference computations shared by the integration tests.
//!
//! Nothing here calls the library's distance, power or clique code: distances
//! come from Floyd-Warshall over the raw edge list and cliques from
//! enumerating every vertex subset.

#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use iasi_core::families::{self, FamilySpec};
use iasi_core::nourish;

/// Adjacency bitmasks of the `r`-th power of the graph on `n` vertices with `edges`.
pub fn power_masks(n: usize, edges: &[(usize, usize)], r: usize) -> Vec<u64> {
    assert!(n <= 64);
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && d[u][v] <= r)
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect()
}

/// Maximum clique by subset enumeration; ties broken towards the
/// lexicographically smallest sorted vertex list.
pub fn brute_clique(adj: &[u64]) -> (usize, Vec<usize>) {
    let n = adj.len();
    assert!(n <= 24, "subset enumeration is limited to 24 vertices");
    let mut best: Option<Vec<usize>> = None;
    for mask in 1u64..1 << n {
        let is_clique = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .all(|v| (adj[v] | 1 << v) & mask == mask);
        if !is_clique {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let better = match &best {
            None => true,
            Some(b) => vs.len() > b.len() || (vs.len() == b.len() && vs < *b),
        };
        if better {
            best = Some(vs);
        }
    }
    let w = best.expect("graphs have at least one vertex");
    (w.len(), w)
}

/// Diameter via the same Floyd-Warshall pass.
pub fn brute_diameter(n: usize, edges: &[(usize, usize)]) -> usize {
    (0..=n)
        .find(|&r| power_masks(n, edges, r).iter().all(|m| m.count_ones() as usize == n - 1))
        .unwrap_or(0)
}

pub fn brute_oracle(spec: &FamilySpec, r: usize) -> (usize, Vec<usize>) {
    let g = families::generate(spec).unwrap();
    brute_clique(&power_masks(g.n(), &g.edges(), r))
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Golden CSV rows for `cells`: published formula next to the brute-force clique order.
pub fn brute_golden_csv(cells: &[(FamilySpec, usize)]) -> String {
    let mut out = String::from("family,params,r,formula,oracle,status,witness\n");
    for (spec, r) in cells {
        let (oracle, witness) = brute_oracle(spec, *r);
        let formula = nourish::formula_kappa(spec, *r);
        let status = match formula {
            None => "formula-undefined",
            Some(f) if f == oracle => "agree",
            Some(_) => "disagree",
        };
        let row = [
            spec.kind().name().to_owned(),
            spec.params_string(),
            r.to_string(),
            formula.map_or_else(|| "undefined".to_owned(), |f| f.to_string()),
            oracle.to_string(),
            status.to_owned(),
            witness.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
        ];
        let row: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Rows of a golden CSV whose status is not `agree`, with the header.
pub fn discrepancies(csv: &str) -> String {
    let mut lines = csv.lines();
    let mut out = format!("{}\n", lines.next().unwrap_or_default());
    for line in lines.filter(|l| !l.contains(",agree,")) {
        out.push_str(line);
        out.push('\n');
    }
    out
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Reads a golden file; with `NOURISH_BLESS=1` rewrites it from `fresh` first.
pub fn golden(name: &str, fresh: &str) -> String {
    let path = golden_dir().join(name);
    if std::env::var_os("NOURISH_BLESS").is_some() {
        std::fs::create_dir_all(golden_dir()).unwrap();
        std::fs::write(&path, fresh).unwrap();
    }
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Same elements, by hash set, for cross-checking the set algebra.
pub fn naive_sumset_len(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x + y))
        .collect::<HashSet<_>>()
        .len()
}

pub fn naive_differences(a: &[u64]) -> HashSet<u64> {
    let mut d = HashSet::new();
    for &x in a {
        for &y in a {
            if x != y {
                d.insert(x.abs_diff(y));
            }
        }
    }
    d
}
