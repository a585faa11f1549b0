//! JSON and CSV rendering of result tables.
//!
//! JSON output is a single top-level array whose objects keep the field order
//! of the record types. CSV output has a header row and only integer, boolean
//! or plain-text cells.

use std::str::FromStr;

use serde::Serialize;

use crate::char2::Char2CountRecord;
use crate::classify::ClassRecord;
use crate::error::{Error, Result};
use crate::stats::StatsRecord;
use crate::supersingular::SsTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Invalid(format!("unknown format {other:?}"))),
        }
    }
}

/// A record with a flat CSV projection.
pub trait Tabular: Serialize {
    type Row: Serialize;
    const HEADER: &'static [&'static str];
    fn row(&self) -> Self::Row;
}

pub fn render<T: Tabular>(items: &[T], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(items),
        Format::Csv => to_csv(items),
    }
}

pub fn to_json<T: Serialize>(items: &[T]) -> Result<String> {
    let mut s = serde_json::to_string_pretty(items).map_err(|e| Error::Invalid(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn to_csv<T: Tabular>(items: &[T]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    let err = |e: csv::Error| Error::Invalid(e.to_string());
    w.write_record(T::HEADER).map_err(err)?;
    for item in items {
        w.serialize(item.row()).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Invalid(e.to_string()))
}

#[derive(Serialize)]
pub struct ClassRow {
    pub q: u64,
    pub n: u64,
    pub witness_count: usize,
    pub first_witness: Option<u64>,
    pub legendre_isogenous: bool,
    pub excluded_reason: Option<&'static str>,
}

impl Tabular for ClassRecord {
    type Row = ClassRow;
    const HEADER: &'static [&'static str] = &[
        "q",
        "N",
        "witness_count",
        "first_witness",
        "legendre_isogenous",
        "excluded_reason",
    ];

    fn row(&self) -> ClassRow {
        ClassRow {
            q: self.q,
            n: self.n,
            witness_count: self.witness_values.len(),
            first_witness: self.witness_values.first().copied(),
            legendre_isogenous: self.legendre_isogenous,
            excluded_reason: self.excluded_reason,
        }
    }
}

#[derive(Serialize)]
pub struct SsRow {
    pub p: u64,
    pub s_p: usize,
    pub h: Option<u64>,
    pub three_h: Option<u64>,
    pub ok: bool,
}

/// `s_p` against `0`, `1` or `3h(-p)` by residue of `p`.
pub fn sp_expected(p: u64, h: Option<u64>) -> Option<usize> {
    match (p, p % 4, h) {
        (3, _, _) => Some(1),
        (_, 1, _) => Some(0),
        (_, 3, Some(h)) => Some(3 * h as usize),
        _ => None,
    }
}

impl Tabular for SsTable {
    type Row = SsRow;
    const HEADER: &'static [&'static str] = &["p", "s_p", "h", "3h", "ok"];

    fn row(&self) -> SsRow {
        SsRow {
            p: self.p,
            s_p: self.s_p,
            h: self.h,
            three_h: self.h.map(|h| 3 * h),
            ok: sp_expected(self.p, self.h) == Some(self.s_p),
        }
    }
}

#[derive(Serialize)]
pub struct StatsRow {
    pub q: u64,
    pub s: i64,
    pub s_bar: i64,
    pub delta: i64,
    pub formula_ok: bool,
}

impl Tabular for StatsRecord {
    type Row = StatsRow;
    const HEADER: &'static [&'static str] = &["q", "S", "S_bar", "delta", "formula_ok"];

    fn row(&self) -> StatsRow {
        StatsRow {
            q: self.q,
            s: self.s,
            s_bar: self.s_bar,
            delta: self.delta(),
            formula_ok: self.formula_ok,
        }
    }
}

/// Elements in CSV cells are packed integers.
fn pack(coeffs: &[u64], base: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * base + c)
}

#[derive(Serialize)]
pub struct Char2Row {
    pub n: u32,
    pub lambda: u64,
    pub beta: u64,
    pub count: u64,
}

impl Tabular for Char2CountRecord {
    type Row = Char2Row;
    const HEADER: &'static [&'static str] = &["n", "lambda", "beta", "count"];

    fn row(&self) -> Char2Row {
        Char2Row {
            n: self.n,
            lambda: pack(&self.lambda, 2),
            beta: pack(&self.beta, 2),
            count: self.count,
        }
    }
}

/// Point count of one Legendre curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRecord {
    pub q: u64,
    pub lambda: Vec<u64>,
    pub count: u64,
    #[serde(skip)]
    pub lambda_value: u64,
}

#[derive(Serialize)]
pub struct CountRow {
    pub q: u64,
    pub lambda: u64,
    pub count: u64,
}

impl Tabular for CountRecord {
    type Row = CountRow;
    const HEADER: &'static [&'static str] = &["q", "lambda", "count"];

    fn row(&self) -> CountRow {
        CountRow {
            q: self.q,
            lambda: self.lambda_value,
            count: self.count,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::field::Field;
    use crate::stats::legendre_sum;

    #[test]
    fn class_csv_for_f9() {
        let f = Field::new(3, 2).unwrap();
        let recs: Vec<_> = classify(&f, 199)
            .unwrap()
            .into_iter()
            .filter(|r| r.n % 4 == 0)
            .collect();
        let out = render(&recs, Format::Csv).unwrap();
        let expect = "q,N,witness_count,first_witness,legendre_isogenous,excluded_reason\n\
                      9,4,0,,false,maximal/minimal exception (r+1)²\n\
                      9,8,4,3,true,\n\
                      9,12,2,5,true,\n\
                      9,16,1,2,true,\n";
        assert_eq!(out, expect);
    }

    #[test]
    fn json_is_one_array_with_ordered_keys() {
        let f = Field::prime(5).unwrap();
        let recs = vec![legendre_sum(&f).unwrap()];
        let out = render(&recs, Format::Json).unwrap();
        assert!(out.starts_with('[') && out.ends_with("]\n"));
        let keys = [
            "\"q\"",
            "\"S\"",
            "\"S_bar\"",
            "\"S_tilde\"",
            "\"S_0\"",
            "\"S_1\"",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["S"], 20);
    }

    #[test]
    fn stats_csv_row() {
        let f = Field::prime(7).unwrap();
        let out = render(&[legendre_sum(&f).unwrap()], Format::Csv).unwrap();
        assert_eq!(out, "q,S,S_bar,delta,formula_ok\n7,40,40,0,true\n");
    }

    #[test]
    fn empty_csv_keeps_header() {
        let out = render::<StatsRecord>(&[], Format::Csv).unwrap();
        assert_eq!(out, "q,S,S_bar,delta,formula_ok\n");
        assert_eq!(render::<StatsRecord>(&[], Format::Json).unwrap(), "[]\n");
    }

    #[test]
    fn format_parsing() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn packing() {
        assert_eq!(pack(&[1, 0, 1], 2), 5);
        assert_eq!(pack(&[], 2), 0);
    }
}
