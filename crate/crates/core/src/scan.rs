//! Batch evaluation of the family `T(p, q, 10m - 4)` over a range of `m`.
//!
//! Rows are computed in parallel but always emitted in increasing `m`, and
//! the output is a pure function of the inputs. Any failing row aborts the
//! whole scan.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::TwistedTorusKnot;
use crate::burau::alexander_from_braid;
use crate::error::{Error, Result};
use crate::obstruction::{default_mu_excluded, morton_inverse_s, os_lens_form_check};

pub const CSV_HEADER: &str =
    "m,p,q,r,n,braid_length,breadth,coeff_target_exp,coeff_value,lens_form_ok,gamma_primitive_excluded";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub m: i64,
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub n: i64,
    pub braid_length: usize,
    pub breadth: i64,
    /// `ps + 2` in `paper_form` indexing; empty for `m = 0`.
    pub coeff_target_exp: Option<i64>,
    pub coeff_value: Option<i64>,
    pub lens_form_ok: bool,
    pub gamma_primitive_excluded: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct ScanConfig {
    pub p: i64,
    pub q: i64,
    pub m_start: i64,
    pub m_end: i64,
    pub jobs: usize,
    /// Overrides [`default_mu_excluded`] for every row.
    pub mu_excluded: Option<bool>,
}

impl ScanConfig {
    pub fn family(m_start: i64, m_end: i64) -> Self {
        Self { p: 7, q: 17, m_start, m_end, jobs: 1, mu_excluded: None }
    }
}

pub fn scan(cfg: &ScanConfig) -> Result<Vec<ScanRow>> {
    if cfg.m_start > cfg.m_end {
        return Err(Error::InvalidScan(format!("empty range {}..={}", cfg.m_start, cfg.m_end)));
    }
    if cfg.jobs == 0 {
        return Err(Error::InvalidScan("jobs must be at least 1".into()));
    }
    let target = cfg.p * morton_inverse_s(cfg.p, cfg.q)?.s + 2;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidScan(e.to_string()))?;
    pool.install(|| {
        (cfg.m_start..=cfg.m_end)
            .into_par_iter()
            .map(|m| scan_row(cfg, m, target))
            .collect()
    })
}

fn scan_row(cfg: &ScanConfig, m: i64, target: i64) -> Result<ScanRow> {
    let knot = TwistedTorusKnot::new(cfg.p, cfg.q, 10 * m - 4)?;
    let braid = knot.dean_braid();
    let d = alexander_from_braid(&braid)?;
    let (lens_form_ok, _) = os_lens_form_check(&d);
    let mu = cfg.mu_excluded.unwrap_or_else(|| default_mu_excluded(&knot));

    let (coeff_target_exp, coeff_value) = if m == 0 {
        (None, None)
    } else {
        let c = d.paper_form().coefficient(target);
        let c = c.to_i64().ok_or_else(|| Error::CoefficientOverflow(c.to_string()))?;
        (Some(target), Some(c))
    };

    let row = ScanRow {
        m,
        p: knot.p(),
        q: knot.q(),
        r: knot.r(),
        n: 5 * m - 2,
        braid_length: braid.len(),
        breadth: d.genus_breadth(),
        coeff_target_exp,
        coeff_value,
        lens_form_ok,
        gamma_primitive_excluded: !lens_form_ok && mu,
    };
    validate_row(&row)?;
    Ok(row)
}

/// Re-checks the arithmetic a row must satisfy. The breadth formula
/// `q(p-1) + r - p + 1` (twice the genus of a positive braid closure) is only
/// checked for `r >= 0`.
pub fn validate_row(row: &ScanRow) -> Result<()> {
    let length = row.q * (row.p - 1) + row.r.abs();
    if row.braid_length as i64 != length {
        return Err(Error::Consistency(format!(
            "m = {}: braid length {} != {length}",
            row.m, row.braid_length
        )));
    }
    if row.r >= 0 {
        let breadth = row.q * (row.p - 1) + row.r - row.p + 1;
        if row.breadth != breadth {
            return Err(Error::Consistency(format!(
                "m = {}: breadth {} != {breadth}",
                row.m, row.breadth
            )));
        }
    }
    Ok(())
}

pub fn to_csv(rows: &[ScanRow]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::Consistency(e.to_string()))?;
    }
    let body = w.into_inner().map_err(|e| Error::Consistency(e.to_string()))?;
    let body = String::from_utf8(body).map_err(|e| Error::Consistency(e.to_string()))?;
    Ok(format!("{CSV_HEADER}\n{body}"))
}

pub fn to_json(rows: &[ScanRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

/// Human-readable table. Not covered by golden files.
pub fn to_pretty(rows: &[ScanRow]) -> String {
    let cols: Vec<&str> = CSV_HEADER.split(',').collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let opt = |v: Option<i64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
            vec![
                r.m.to_string(),
                r.p.to_string(),
                r.q.to_string(),
                r.r.to_string(),
                r.n.to_string(),
                r.braid_length.to_string(),
                r.breadth.to_string(),
                opt(r.coeff_target_exp),
                opt(r.coeff_value),
                r.lens_form_ok.to_string(),
                r.gamma_primitive_excluded.to_string(),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..cols.len())
        .map(|i| cells.iter().map(|c| c[i].len()).chain([cols[i].len()]).max().unwrap_or(0))
        .collect();

    let mut out = String::new();
    let line = |out: &mut String, items: &[&str]| {
        let padded: Vec<String> =
            items.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&mut out, &cols);
    for c in &cells {
        let refs: Vec<&str> = c.iter().map(String::as_str).collect();
        line(&mut out, &refs);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_family_row_matches_example_knot() {
        let rows = scan(&ScanConfig::family(1, 1)).unwrap();
        assert_eq!(rows.len(), 1);
        let row = &rows[0];
        assert_eq!((row.r, row.n, row.braid_length, row.breadth), (6, 3, 108, 102));
        assert_eq!((row.coeff_target_exp, row.coeff_value), (Some(37), Some(-2)));
        assert!(!row.lens_form_ok);
        assert!(row.gamma_primitive_excluded);
    }

    #[test]
    fn first_three_members() {
        let rows = scan(&ScanConfig { jobs: 3, ..ScanConfig::family(1, 3) }).unwrap();
        assert_eq!(rows.iter().map(|r| r.m).collect::<Vec<_>>(), vec![1, 2, 3]);
        for r in &rows {
            assert!(!r.lens_form_ok);
            assert!(r.coeff_value.unwrap() <= -2);
            assert_eq!(r.breadth, 96 + r.r);
        }
    }

    #[test]
    fn zero_row_skips_morton_columns() {
        let rows = scan(&ScanConfig::family(0, 0)).unwrap();
        assert_eq!(rows[0].r, -4);
        assert_eq!(rows[0].coeff_target_exp, None);
        let csv = to_csv(&rows).unwrap();
        assert!(csv.lines().nth(1).unwrap().contains(",,"), "{csv}");
    }

    #[test]
    fn bad_ranges_are_rejected() {
        assert!(matches!(scan(&ScanConfig::family(3, 1)), Err(Error::InvalidScan(_))));
        assert!(matches!(scan(&ScanConfig { jobs: 0, ..ScanConfig::family(1, 1) }), Err(Error::InvalidScan(_))));
        let bad = ScanConfig { p: 4, q: 6, ..ScanConfig::family(1, 1) };
        assert!(scan(&bad).is_err());
    }

    #[test]
    fn csv_header_and_layout() {
        let rows = scan(&ScanConfig::family(1, 1)).unwrap();
        let csv = to_csv(&rows).unwrap();
        assert_eq!(csv, format!("{CSV_HEADER}\n1,7,17,6,3,108,102,37,-2,false,true\n"));
    }

    #[test]
    fn validate_row_catches_bad_arithmetic() {
        let mut row = scan(&ScanConfig::family(1, 1)).unwrap().remove(0);
        row.breadth += 2;
        assert!(matches!(validate_row(&row), Err(Error::Consistency(_))));
    }

    #[test]
    fn pretty_table_has_header_and_rows() {
        let rows = scan(&ScanConfig::family(1, 2)).unwrap();
        let t = to_pretty(&rows);
        assert_eq!(t.lines().count(), 3);
        assert!(t.lines().next().unwrap().trim_start().starts_with("m"));
    }
}
