//! Closed-form nourishing numbers for graph-family powers, the clique oracle,
//! and reconciliation between the two.
//!
//! The nourishing number of a set-labelled graph is taken to be the order of
//! a maximum clique. Note that the least number of distinct difference sets
//! in a strong labeling is bounded below by the clique order but can be
//! larger (it is at least the chromatic number when labels have two or more
//! elements); the formulas here target the clique order.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::families::{self, FamilyError, FamilySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Agree,
    Disagree,
    FormulaUndefined,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Agree => "agree",
            Status::Disagree => "disagree",
            Status::FormulaUndefined => "formula-undefined",
        }
    }
}

/// One reconciliation cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NourishingRecord {
    pub spec: FamilySpec,
    pub r: usize,
    pub formula: Option<usize>,
    pub oracle: Option<usize>,
    pub witness: Vec<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn by_threshold(r: usize, below: usize, threshold: usize, at_or_above: usize) -> usize {
    if r < threshold {
        below
    } else {
        at_or_above
    }
}

/// The published closed form for the nourishing number of `spec` raised to
/// the power `r`, transcribed without correction. `None` when no clause applies.
pub fn formula_kappa(spec: &FamilySpec, r: usize) -> Option<usize> {
    if r == 0 || spec.validate().is_err() {
        return None;
    }
    let value = match *spec {
        FamilySpec::CompleteBipartite { m, n } => by_threshold(r, 2, 2, m + n),
        FamilySpec::Path { m } => by_threshold(r, r + 1, m, m + 1),
        FamilySpec::Cycle { n } => by_threshold(r, r + 1, n / 2, n),
        FamilySpec::Complete { n } => n,
        FamilySpec::Wheel { n } => by_threshold(r, 3, 2, n + 1),
        FamilySpec::Helm { n } => match r {
            1 => 3,
            2 => n + 1,
            3 => n + 4,
            _ => 2 * n + 1,
        },
        FamilySpec::Friendship { n } => by_threshold(r, 3, 2, 2 * n + 1),
        FamilySpec::Fan { m, n } => by_threshold(r, 3, 2, m + n),
        FamilySpec::Split { c, ref adj } => match r {
            1 => {
                if adj.iter().any(|list| list.len() == c) {
                    c + 1
                } else {
                    c
                }
            }
            2 => {
                let shared = (0..c)
                    .map(|k| adj.iter().filter(|list| list.contains(&k)).count())
                    .max()
                    .unwrap_or(0);
                c + shared
            }
            _ => c + adj.len(),
        },
        FamilySpec::CompleteSplit { c, s } => by_threshold(r, c + 1, 2, c + s),
        FamilySpec::Sun { n } => {
            let half = n / 2;
            if r < half {
                2 * r + 1
            } else if r == half {
                if n % 2 == 1 {
                    2 * (n - 1)
                } else {
                    2 * n - 1
                }
            } else {
                2 * n
            }
        }
        FamilySpec::CompleteSun { n } => match r {
            1 => n,
            2 => n + 1,
            _ => 2 * n,
        },
        FamilySpec::Sunlet { n } => {
            let edge = n / 2 + 1;
            if r < edge {
                2 * r
            } else if r == edge {
                if n % 2 == 1 {
                    2 * (n - 1)
                } else {
                    2 * n - 1
                }
            } else {
                2 * n
            }
        }
    };
    Some(value)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("power exponent must be >= 1")]
    ZeroPower,
}

/// Maximum clique order of the `r`-th power of the generated graph, with a witness.
pub fn oracle_kappa(spec: &FamilySpec, r: usize) -> Result<(usize, Vec<usize>), OracleError> {
    let g = families::generate(spec)?;
    let powered = g.power(r).map_err(|_| OracleError::ZeroPower)?;
    let clique = powered.clique_number();
    Ok((clique.size, clique.witness))
}

pub fn reconcile_cell(spec: &FamilySpec, r: usize) -> NourishingRecord {
    match oracle_kappa(spec, r) {
        Ok((oracle, witness)) => {
            let formula = formula_kappa(spec, r);
            let status = match formula {
                None => Status::FormulaUndefined,
                Some(f) if f == oracle => Status::Agree,
                Some(_) => Status::Disagree,
            };
            NourishingRecord {
                spec: spec.clone(),
                r,
                formula,
                oracle: Some(oracle),
                witness,
                status,
                error: None,
            }
        }
        Err(e) => NourishingRecord {
            spec: spec.clone(),
            r,
            formula: None,
            oracle: None,
            witness: Vec::new(),
            status: Status::FormulaUndefined,
            error: Some(e.to_string()),
        },
    }
}

/// One record per cell, in input order.
pub fn reconcile(cells: &[(FamilySpec, usize)]) -> Vec<NourishingRecord> {
    cells.iter().map(|(spec, r)| reconcile_cell(spec, *r)).collect()
}

/// [`reconcile`] spread over at most `threads` workers (all cores when `None`).
/// Output order matches input order.
pub fn reconcile_parallel(cells: &[(FamilySpec, usize)], threads: Option<usize>) -> Vec<NourishingRecord> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t.max(1));
    }
    match builder.build() {
        Ok(pool) => pool.install(|| {
            cells
                .par_iter()
                .map(|(spec, r)| reconcile_cell(spec, *r))
                .collect()
        }),
        Err(_) => reconcile(cells),
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "undefined".to_owned(), |x| x.to_string())
}

fn witness_string(w: &[usize]) -> String {
    w.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub const CSV_HEADER: [&str; 7] = ["family", "params", "r", "formula", "oracle", "status", "witness"];

/// CSV with a header row and `\n` line endings. Fields containing commas are
/// double-quoted; the witness is space-separated.
pub fn to_csv(records: &[NourishingRecord]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for rec in records {
        w.write_record([
            rec.spec.kind().name().to_owned(),
            rec.spec.params_string(),
            rec.r.to_string(),
            opt(rec.formula),
            rec.oracle.map_or_else(String::new, |x| x.to_string()),
            rec.status.as_str().to_owned(),
            witness_string(&rec.witness),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

/// Pretty-printed JSON array with a trailing newline.
pub fn to_json(records: &[NourishingRecord]) -> String {
    let mut s = serde_json::to_string_pretty(records).expect("records serialize");
    s.push('\n');
    s
}

/// Whitespace-aligned table for terminals.
pub fn to_table(records: &[NourishingRecord]) -> String {
    let rows: Vec<[String; 7]> = records
        .iter()
        .map(|rec| {
            [
                rec.spec.kind().name().to_owned(),
                rec.spec.params_string(),
                rec.r.to_string(),
                opt(rec.formula),
                rec.oracle.map_or_else(|| "-".to_owned(), |x| x.to_string()),
                rec.status.as_str().to_owned(),
                witness_string(&rec.witness),
            ]
        })
        .collect();
    let mut widths = CSV_HEADER.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let header = CSV_HEADER.map(str::to_owned);
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyKind;

    #[test]
    fn formula_fixtures() {
        assert_eq!(formula_kappa(&FamilySpec::Cycle { n: 6 }, 2), Some(3));
        assert_eq!(formula_kappa(&FamilySpec::Helm { n: 4 }, 3), Some(8));
        assert_eq!(formula_kappa(&FamilySpec::Path { m: 5 }, 9), Some(6));
        assert_eq!(formula_kappa(&FamilySpec::Friendship { n: 2 }, 1), Some(3));
        assert_eq!(formula_kappa(&FamilySpec::Sunlet { n: 5 }, 2), Some(4));
        assert_eq!(formula_kappa(&FamilySpec::Wheel { n: 3 }, 1), Some(3));
    }

    #[test]
    fn formula_branches() {
        let kmn = FamilySpec::CompleteBipartite { m: 2, n: 5 };
        assert_eq!((1..4).map(|r| formula_kappa(&kmn, r)).collect::<Vec<_>>(), [Some(2), Some(7), Some(7)]);
        let p = FamilySpec::Path { m: 3 };
        assert_eq!((1..5).filter_map(|r| formula_kappa(&p, r)).collect::<Vec<_>>(), [2, 3, 4, 4]);
        let c = FamilySpec::Cycle { n: 7 };
        assert_eq!((1..5).filter_map(|r| formula_kappa(&c, r)).collect::<Vec<_>>(), [2, 3, 7, 7]);
        assert_eq!(formula_kappa(&FamilySpec::Complete { n: 5 }, 9), Some(5));
        let h = FamilySpec::Helm { n: 5 };
        assert_eq!((1..6).filter_map(|r| formula_kappa(&h, r)).collect::<Vec<_>>(), [3, 6, 9, 11, 11]);
        let f = FamilySpec::Fan { m: 2, n: 4 };
        assert_eq!((1..3).filter_map(|r| formula_kappa(&f, r)).collect::<Vec<_>>(), [3, 6]);
        let ks = FamilySpec::CompleteSplit { c: 3, s: 4 };
        assert_eq!((1..3).filter_map(|r| formula_kappa(&ks, r)).collect::<Vec<_>>(), [4, 7]);
        let csun = FamilySpec::CompleteSun { n: 4 };
        assert_eq!((1..4).filter_map(|r| formula_kappa(&csun, r)).collect::<Vec<_>>(), [4, 5, 8]);
        // n = 7: floor(n/2) = 3
        let sun = FamilySpec::Sun { n: 7 };
        assert_eq!((1..5).filter_map(|r| formula_kappa(&sun, r)).collect::<Vec<_>>(), [3, 5, 12, 14]);
        let sun = FamilySpec::Sun { n: 6 };
        assert_eq!((1..5).filter_map(|r| formula_kappa(&sun, r)).collect::<Vec<_>>(), [3, 5, 11, 12]);
        // n = 6: floor(n/2) + 1 = 4
        let sunlet = FamilySpec::Sunlet { n: 6 };
        assert_eq!((1..6).filter_map(|r| formula_kappa(&sunlet, r)).collect::<Vec<_>>(), [2, 4, 6, 11, 12]);
        let sunlet = FamilySpec::Sunlet { n: 5 };
        assert_eq!((3..5).filter_map(|r| formula_kappa(&sunlet, r)).collect::<Vec<_>>(), [8, 10]);
    }

    #[test]
    fn split_formula_variables() {
        // clique {0,1,2}; vertex 3 dominates, vertices 4 and 5 share neighbour 0
        let spec = FamilySpec::Split { c: 3, adj: vec![vec![0, 1, 2], vec![0], vec![0, 1]] };
        assert_eq!(formula_kappa(&spec, 1), Some(4));
        assert_eq!(formula_kappa(&spec, 2), Some(6));
        assert_eq!(formula_kappa(&spec, 3), Some(6));
        let spec = FamilySpec::Split { c: 3, adj: vec![vec![0], vec![2]] };
        assert_eq!(formula_kappa(&spec, 1), Some(3));
        assert_eq!(formula_kappa(&spec, 2), Some(4));
        assert_eq!(formula_kappa(&spec, 5), Some(5));
    }

    #[test]
    fn undefined_outside_domain() {
        assert_eq!(formula_kappa(&FamilySpec::Cycle { n: 6 }, 0), None);
        assert_eq!(formula_kappa(&FamilySpec::Cycle { n: 2 }, 1), None);
    }

    #[test]
    fn oracle_fixtures() {
        assert_eq!(oracle_kappa(&FamilySpec::Cycle { n: 6 }, 2).unwrap().0, 3);
        assert_eq!(oracle_kappa(&FamilySpec::Wheel { n: 3 }, 1).unwrap().0, 4);
        assert_eq!(oracle_kappa(&FamilySpec::Helm { n: 4 }, 3).unwrap().0, 7);
        assert!(oracle_kappa(&FamilySpec::Cycle { n: 2 }, 1).is_err());
        assert_eq!(oracle_kappa(&FamilySpec::Cycle { n: 5 }, 0), Err(OracleError::ZeroPower));
    }

    #[test]
    fn reconcile_statuses() {
        let cells = vec![
            (FamilySpec::Wheel { n: 3 }, 1),
            (FamilySpec::Path { m: 4 }, 2),
            (FamilySpec::Cycle { n: 2 }, 1),
        ];
        let recs = reconcile(&cells);
        assert_eq!(recs[0].status, Status::Disagree);
        assert_eq!((recs[0].formula, recs[0].oracle), (Some(3), Some(4)));
        assert_eq!(recs[1].status, Status::Agree);
        assert_eq!(recs[1].oracle, Some(3));
        assert_eq!(recs[2].status, Status::FormulaUndefined);
        assert!(recs[2].error.is_some());
    }

    #[test]
    fn cycles_agree() {
        let cells = families::family_grid(FamilyKind::Cycle, &[3..=10], 1..=5).unwrap();
        assert!(reconcile(&cells).iter().all(|r| r.status == Status::Agree));
    }

    #[test]
    fn parallel_preserves_order() {
        let cells = families::family_grid(FamilyKind::Helm, &[3..=6], 1..=5).unwrap();
        assert_eq!(reconcile_parallel(&cells, Some(3)), reconcile(&cells));
    }

    #[test]
    fn csv_layout() {
        let recs = reconcile(&[
            (FamilySpec::Wheel { n: 3 }, 1),
            (FamilySpec::Split { c: 2, adj: vec![vec![0, 1]] }, 1),
        ]);
        assert_eq!(
            to_csv(&recs),
            "family,params,r,formula,oracle,status,witness\n\
             wheel,n=3,1,3,4,disagree,0 1 2 3\n\
             split,\"c=2 adj=0,1\",1,3,3,agree,0 1 2\n"
        );
    }

    #[test]
    fn table_layout() {
        let recs = reconcile(&[(FamilySpec::Path { m: 4 }, 2)]);
        assert_eq!(
            to_table(&recs),
            "family  params  r  formula  oracle  status  witness\n\
             path    m=4     2  3        3       agree   0 1 2\n"
        );
    }

    #[test]
    fn json_layout() {
        let recs = reconcile(&[(FamilySpec::Path { m: 1 }, 1)]);
        let v: serde_json::Value = serde_json::from_str(&to_json(&recs)).unwrap();
        assert_eq!(
            v,
            serde_json::json!([{
                "spec": {"family": "path", "params": {"m": 1}},
                "r": 1, "formula": 2, "oracle": 2, "witness": [0, 1], "status": "agree"
            }])
        );
    }
}
