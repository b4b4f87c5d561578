//! JSON and CSV export of triangles, families, sequences and series, plus
//! the parsers that round-trip them.
//!
//! Polynomial cells use the canonical string grammar from `textfmt`. In CSV,
//! polynomial strings are quoted; λ-evaluated rational cells are bare `a/b`.
//! Export is deterministic: identical inputs produce identical bytes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lambda_poly::LambdaPoly;
use crate::rational::Rational;
use crate::textfmt;
use crate::triangle::{Provenance, StirlingKind, StirlingTriangle};
use crate::xpoly::XPoly;

fn json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("export serialization");
    s.push('\n');
    s
}

/// Quotes a CSV cell when it is a polynomial string; bare rationals pass
/// through unquoted.
fn csv_cell(s: &str) -> String {
    if s.parse::<Rational>().is_ok() {
        s.to_string()
    } else {
        format!("\"{s}\"")
    }
}

fn csv_uncell(s: &str) -> Result<String> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('"') {
        let inner = inner
            .strip_suffix('"')
            .ok_or_else(|| Error::Parse(format!("unterminated quote in CSV cell {s:?}")))?;
        Ok(inner.to_string())
    } else {
        Ok(s.to_string())
    }
}

/// Splits a CSV line on commas outside quotes.
fn csv_split(line: &str) -> Vec<String> {
    let mut cells = Vec::new();
    let mut current = String::new();
    let mut quoted = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                current.push(ch);
            }
            ',' if !quoted => {
                cells.push(std::mem::take(&mut current));
            }
            _ => current.push(ch),
        }
    }
    cells.push(current);
    cells
}

// ─── triangles ───

/// Wire form of a Stirling triangle: entries are canonical polynomial
/// strings (or bare rationals when evaluated at a fixed λ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleExport {
    pub kind: String,
    pub r: u32,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
    pub entries: Vec<Vec<String>>,
}

impl TriangleExport {
    pub fn from_triangle(t: &StirlingTriangle, lambda: Option<&Rational>) -> TriangleExport {
        let entries = (0..=t.n_max())
            .map(|n| {
                t.row(n)
                    .iter()
                    .map(|e| match lambda {
                        Some(l) => e.eval(l).to_string(),
                        None => textfmt::format_lambda_poly(e),
                    })
                    .collect()
            })
            .collect();
        TriangleExport {
            kind: t.kind().as_str().to_string(),
            r: t.r(),
            n_max: t.n_max(),
            lambda: lambda.map(Rational::to_string),
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        json_string(self)
    }

    pub fn from_json(s: &str) -> Result<TriangleExport> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("triangle JSON: {e}")))
    }

    /// Rebuilds the in-memory triangle; provenance is marked as imported.
    pub fn to_triangle(&self) -> Result<StirlingTriangle> {
        let kind = StirlingKind::parse(&self.kind)
            .ok_or_else(|| Error::Parse(format!("unknown triangle kind {:?}", self.kind)))?;
        if self.entries.len() != self.n_max + 1 {
            return Err(Error::Parse(format!(
                "triangle has {} rows but n_max = {}",
                self.entries.len(),
                self.n_max
            )));
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for (n, row) in self.entries.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Parse(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
            entries.push(
                row.iter()
                    .map(|s| textfmt::parse_lambda_poly(s))
                    .collect::<Result<Vec<LambdaPoly>>>()?,
            );
        }
        Ok(StirlingTriangle::from_entries(
            kind,
            self.r,
            entries,
            Provenance::Imported,
        ))
    }

    /// One `n,k,value` row per entry, preceded by a metadata comment line.
    pub fn to_csv(&self) -> String {
        let mut out = format!("# kind={} r={} n_max={}", self.kind, self.r, self.n_max);
        if let Some(lambda) = &self.lambda {
            out.push_str(&format!(" lambda={lambda}"));
        }
        out.push_str("\nn,k,value\n");
        for (n, row) in self.entries.iter().enumerate() {
            for (k, cell) in row.iter().enumerate() {
                out.push_str(&format!("{n},{k},{}\n", csv_cell(cell)));
            }
        }
        out
    }

    pub fn from_csv(s: &str) -> Result<TriangleExport> {
        let mut meta = CsvMeta::default();
        let mut cells: Vec<(usize, usize, String)> = Vec::new();
        for line in s.lines() {
            let line = line.trim_end();
            if line.is_empty() || line == "n,k,value" {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                meta.parse_line(rest)?;
                continue;
            }
            let fields = csv_split(line);
            if fields.len() != 3 {
                return Err(Error::Parse(format!(
                    "expected n,k,value row, got {line:?}"
                )));
            }
            let n: usize = fields[0]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad row index in {line:?}")))?;
            let k: usize = fields[1]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad column index in {line:?}")))?;
            cells.push((n, k, csv_uncell(&fields[2])?));
        }
        let kind = meta
            .get("kind")?
            .ok_or_else(|| Error::Parse("missing kind in CSV header".to_string()))?;
        let r: u32 = meta.parse_field("r")?.unwrap_or(0);
        let n_max = cells.iter().map(|&(n, _, _)| n).max().map_or(0, |n| n);
        let mut entries: Vec<Vec<String>> =
            (0..=n_max).map(|n| vec![String::new(); n + 1]).collect();
        for (n, k, value) in cells {
            if k > n || n > n_max {
                return Err(Error::Parse(format!("cell ({n},{k}) outside triangle")));
            }
            entries[n][k] = value;
        }
        Ok(TriangleExport {
            kind,
            r,
            n_max,
            lambda: meta.get("lambda")?,
            entries,
        })
    }
}

#[derive(Default)]
struct CsvMeta {
    fields: Vec<(String, String)>,
}

impl CsvMeta {
    fn parse_line(&mut self, line: &str) -> Result<()> {
        for pair in line.split_whitespace() {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad metadata field {pair:?}")))?;
            self.fields.push((key.to_string(), value.to_string()));
        }
        Ok(())
    }

    fn get(&self, key: &str) -> Result<Option<String>> {
        Ok(self
            .fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.clone()))
    }

    fn parse_field<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.get(key)? {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::Parse(format!("bad value for {key}: {v:?}"))),
        }
    }
}

// ─── families and sequences ───

/// Wire form of a polynomial family or number sequence: values are
/// canonical polynomial strings in x and λ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyExport {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<i64>,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
    pub values: Vec<String>,
}

impl FamilyExport {
    pub fn from_xpoly_values(
        family: &str,
        r: Option<u32>,
        p: Option<i64>,
        values: &[XPoly],
        lambda: Option<&Rational>,
    ) -> FamilyExport {
        FamilyExport {
            family: family.to_string(),
            r,
            p,
            n_max: values.len().saturating_sub(1),
            lambda: lambda.map(Rational::to_string),
            values: values
                .iter()
                .map(|v| match lambda {
                    Some(l) => textfmt::format_xpoly(&v.eval_lambda(l)),
                    None => textfmt::format_xpoly(v),
                })
                .collect(),
        }
    }

    pub fn from_lambda_values(
        family: &str,
        r: Option<u32>,
        p: Option<i64>,
        values: &[LambdaPoly],
        lambda: Option<&Rational>,
    ) -> FamilyExport {
        FamilyExport {
            family: family.to_string(),
            r,
            p,
            n_max: values.len().saturating_sub(1),
            lambda: lambda.map(Rational::to_string),
            values: values
                .iter()
                .map(|v| match lambda {
                    Some(l) => v.eval(l).to_string(),
                    None => textfmt::format_lambda_poly(v),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        json_string(self)
    }

    pub fn from_json(s: &str) -> Result<FamilyExport> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("family JSON: {e}")))
    }

    pub fn parsed_values(&self) -> Result<Vec<XPoly>> {
        self.values
            .iter()
            .map(|s| textfmt::parse_xpoly(s))
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("# family={} n_max={}", self.family, self.n_max);
        if let Some(r) = self.r {
            out.push_str(&format!(" r={r}"));
        }
        if let Some(p) = self.p {
            out.push_str(&format!(" p={p}"));
        }
        if let Some(lambda) = &self.lambda {
            out.push_str(&format!(" lambda={lambda}"));
        }
        out.push_str("\nn,value\n");
        for (n, value) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{}\n", csv_cell(value)));
        }
        out
    }

    pub fn from_csv(s: &str) -> Result<FamilyExport> {
        let mut meta = CsvMeta::default();
        let mut values: Vec<(usize, String)> = Vec::new();
        for line in s.lines() {
            let line = line.trim_end();
            if line.is_empty() || line == "n,value" {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                meta.parse_line(rest)?;
                continue;
            }
            let fields = csv_split(line);
            if fields.len() != 2 {
                return Err(Error::Parse(format!("expected n,value row, got {line:?}")));
            }
            let n: usize = fields[0]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad row index in {line:?}")))?;
            values.push((n, csv_uncell(&fields[1])?));
        }
        values.sort_by_key(|&(n, _)| n);
        for (expect, &(n, _)) in values.iter().enumerate() {
            if n != expect {
                return Err(Error::Parse(format!("missing family row {expect}")));
            }
        }
        let family = meta
            .get("family")?
            .ok_or_else(|| Error::Parse("missing family in CSV header".to_string()))?;
        Ok(FamilyExport {
            family,
            r: meta.parse_field("r")?,
            p: meta.parse_field("p")?,
            n_max: values.len().saturating_sub(1),
            lambda: meta.get("lambda")?,
            values: values.into_iter().map(|(_, v)| v).collect(),
        })
    }
}

// ─── series ───

/// Wire form of a named series: coefficients of t^0 … t^order as canonical
/// polynomial strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesExport {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<String>,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
    pub coeffs: Vec<String>,
}

impl SeriesExport {
    pub fn from_lambda_series(
        name: &str,
        r: Option<u32>,
        k: Option<usize>,
        x: Option<&Rational>,
        series: &crate::series::Series<LambdaPoly>,
        lambda: Option<&Rational>,
    ) -> SeriesExport {
        SeriesExport {
            name: name.to_string(),
            r,
            k,
            x: x.map(Rational::to_string),
            order: series.order(),
            lambda: lambda.map(Rational::to_string),
            coeffs: series
                .coeffs()
                .iter()
                .map(|c| match lambda {
                    Some(l) => c.eval(l).to_string(),
                    None => textfmt::format_lambda_poly(c),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        json_string(self)
    }

    pub fn from_json(s: &str) -> Result<SeriesExport> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("series JSON: {e}")))
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("# name={} order={}", self.name, self.order);
        if let Some(r) = self.r {
            out.push_str(&format!(" r={r}"));
        }
        if let Some(k) = self.k {
            out.push_str(&format!(" k={k}"));
        }
        if let Some(x) = &self.x {
            out.push_str(&format!(" x={x}"));
        }
        if let Some(lambda) = &self.lambda {
            out.push_str(&format!(" lambda={lambda}"));
        }
        out.push_str("\nn,coeff\n");
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{n},{}\n", csv_cell(c)));
        }
        out
    }

    /// Bracketed coefficient list, e.g. `[0, 1, -1/2 + 1/2L]`.
    pub fn to_text(&self) -> String {
        format!("[{}]\n", self.coeffs.join(", "))
    }
}
