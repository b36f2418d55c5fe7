//! Square exact-integer tables with partition labels on both axes, and their
//! pretty, CSV and JSON renderings.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Partition, SymmetricGroupContext};

/// What a table holds. Rows and columns are always in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    /// Compound characters: rows are characters, columns are classes.
    Frobenius,
    /// Rows `λ`, columns `μ`: coefficient of `m_λ` in the determinant for `μ`.
    Kostka,
    /// Matrix inverse of the Kostka table.
    InverseKostka,
    /// Irreducible characters: rows are characters, columns are classes.
    Characters,
}

impl TableKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TableKind::Frobenius => "frobenius",
            TableKind::Kostka => "kostka",
            TableKind::InverseKostka => "inverse-kostka",
            TableKind::Characters => "characters",
        }
    }

    /// Whether the columns are conjugacy classes (and class sizes apply).
    pub fn has_class_columns(self) -> bool {
        matches!(self, TableKind::Frobenius | TableKind::Characters)
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "frobenius" => Ok(TableKind::Frobenius),
            "kostka" => Ok(TableKind::Kostka),
            "inverse-kostka" => Ok(TableKind::InverseKostka),
            "characters" => Ok(TableKind::Characters),
            other => Err(Error::invalid(format!("unknown table kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerTable {
    kind: TableKind,
    n: usize,
    row_labels: Vec<Partition>,
    col_labels: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
}

impl IntegerTable {
    /// Builds a table labelled by the context's partitions on both axes.
    pub fn new(kind: TableKind, ctx: &SymmetricGroupContext, values: Vec<Vec<BigInt>>) -> Result<Self> {
        let labels = ctx.partitions().to_vec();
        Self::with_labels(kind, ctx.n(), labels.clone(), labels, values)
    }

    pub fn with_labels(
        kind: TableKind,
        n: usize,
        row_labels: Vec<Partition>,
        col_labels: Vec<Partition>,
        values: Vec<Vec<BigInt>>,
    ) -> Result<Self> {
        let k = row_labels.len();
        if col_labels.len() != k {
            return Err(Error::invalid(format!("table must be square, got {k} rows and {} columns", col_labels.len())));
        }
        if values.len() != k || values.iter().any(|r| r.len() != k) {
            return Err(Error::invalid(format!("table values are not {k}x{k}")));
        }
        for labels in [&row_labels, &col_labels] {
            if labels.iter().any(|p| p.weight() != n) {
                return Err(Error::invalid(format!("a label is not a partition of {n}")));
            }
            if labels.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::invalid("labels are not in descending lexicographic order"));
            }
        }
        Ok(IntegerTable { kind, n, row_labels, col_labels, values })
    }

    pub fn identity(ctx: &SymmetricGroupContext, kind: TableKind) -> Self {
        let k = ctx.k();
        let values = (0..k)
            .map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        Self::new(kind, ctx, values).expect("identity has consistent shape")
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.row_labels.len()
    }

    pub fn row_labels(&self) -> &[Partition] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Partition] {
        &self.col_labels
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.values[row][col]
    }

    /// Looks a cell up by its labels.
    pub fn at(&self, row: &Partition, col: &Partition) -> Option<&BigInt> {
        let r = self.row_labels.iter().position(|p| p == row)?;
        let c = self.col_labels.iter().position(|p| p == col)?;
        Some(&self.values[r][c])
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.values[i]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.values.iter().map(|r| r[j].clone()).collect()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, v: BigInt) {
        self.values[row][col] = v;
    }

    pub fn with_kind(mut self, kind: TableKind) -> Self {
        self.kind = kind;
        self
    }

    /// Values as `i64`; panics if any cell overflows. Handy in tests.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        self.values
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64().expect("cell fits in i64")).collect())
            .collect()
    }

    /// Matrix product `self * other`, labelled by `self`'s rows and
    /// `other`'s columns.
    pub fn mul(&self, other: &IntegerTable, kind: TableKind) -> Result<IntegerTable> {
        if self.col_labels != other.row_labels {
            return Err(Error::invalid("inner labels of a table product do not match"));
        }
        let k = self.size();
        let mut values = vec![vec![BigInt::zero(); k]; k];
        for (i, out_row) in values.iter_mut().enumerate() {
            for (t, a) in self.values[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, cell) in out_row.iter_mut().enumerate() {
                    *cell += a * &other.values[t][j];
                }
            }
        }
        Ok(IntegerTable {
            kind,
            n: self.n,
            row_labels: self.row_labels.clone(),
            col_labels: other.col_labels.clone(),
            values,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, r)| {
            r.iter().enumerate().all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    /// Ones on the diagonal, zeros above it.
    pub fn is_lower_unitriangular(&self) -> bool {
        self.first_non_unitriangular_cell().is_none()
    }

    pub(crate) fn first_non_unitriangular_cell(&self) -> Option<(usize, usize)> {
        for (i, r) in self.values.iter().enumerate() {
            if !r[i].is_one() {
                return Some((i, i));
            }
            if let Some(j) = (i + 1..r.len()).find(|&j| !r[j].is_zero()) {
                return Some((i, j));
            }
        }
        None
    }

    /// Determinant of a lower-triangular table (product of the diagonal).
    pub fn triangular_determinant(&self) -> Result<BigInt> {
        for (i, r) in self.values.iter().enumerate() {
            if r[i + 1..].iter().any(|v| !v.is_zero()) {
                return Err(Error::invalid("table is not lower triangular"));
            }
        }
        Ok((0..self.size()).map(|i| self.values[i][i].clone()).product())
    }

    /// CSV: a header of the kind name followed by the column labels, then one
    /// line per row with its label and integer cells.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let mut header = vec![self.kind.as_str().to_string()];
        header.extend(self.col_labels.iter().map(|p| p.to_string()));
        w.write_record(&header)?;
        for (label, row) in self.row_labels.iter().zip(&self.values) {
            let mut rec = vec![label.to_string()];
            rec.extend(row.iter().map(|v| v.to_string()));
            w.write_record(&rec)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new().has_headers(false).from_reader(text.as_bytes());
        let mut records = r.records();
        let header = records.next().ok_or_else(|| Error::invalid("empty CSV table"))??;
        let kind: TableKind = header.get(0).unwrap_or_default().parse()?;
        let col_labels = header.iter().skip(1).map(str::parse).collect::<Result<Vec<Partition>>>()?;
        let mut row_labels = Vec::new();
        let mut values = Vec::new();
        for rec in records {
            let rec = rec?;
            row_labels.push(rec.get(0).unwrap_or_default().parse::<Partition>()?);
            values.push(
                rec.iter()
                    .skip(1)
                    .map(|s| s.parse::<BigInt>().map_err(|_| Error::invalid(format!("bad integer cell {s:?}"))))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let n = col_labels.first().map(Partition::weight).unwrap_or(0);
        Self::with_labels(kind, n, row_labels, col_labels, values)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(TableJson::from(self)).expect("table JSON is always serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TableJson::from(self)).expect("table JSON is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: TableJson = serde_json::from_str(text)?;
        raw.try_into()
    }

    /// Right-aligned columns under a label header. With `class_sizes` an
    /// extra header line shows the size of each class column.
    pub fn render_pretty(&self, class_sizes: Option<&[BigUint]>) -> String {
        let mut lines: Vec<Vec<String>> = Vec::new();
        if let Some(sizes) = class_sizes {
            let mut l = vec!["class size".to_string()];
            l.extend(sizes.iter().map(|s| s.to_string()));
            lines.push(l);
        }
        let mut head = vec![self.kind.as_str().to_string()];
        head.extend(self.col_labels.iter().map(|p| p.to_string()));
        lines.push(head);
        for (label, row) in self.row_labels.iter().zip(&self.values) {
            let mut l = vec![label.to_string()];
            l.extend(row.iter().map(|v| v.to_string()));
            lines.push(l);
        }
        let cols = lines[0].len();
        let widths: Vec<usize> = (0..cols).map(|c| lines.iter().map(|l| l[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        for l in &lines {
            for (c, cell) in l.iter().enumerate() {
                if c == 0 {
                    out.push_str(&format!("{cell:<w$}", w = widths[0]));
                } else {
                    out.push_str(&format!("  {cell:>w$}", w = widths[c]));
                }
            }
            out.push('\n');
        }
        out
    }

    /// Number of strictly negative cells.
    pub fn negative_cells(&self) -> usize {
        self.values.iter().flatten().filter(|v| v.is_negative()).count()
    }
}

/// Back-substitution inverse of a lower-unitriangular table. Columns are
/// solved left to right so each pivot is the unit diagonal.
#[allow(clippy::needless_range_loop)]
pub fn invert_unitriangular(t: &IntegerTable, kind: TableKind) -> Result<IntegerTable> {
    if let Some((i, j)) = t.first_non_unitriangular_cell() {
        return Err(Error::verification(format!(
            "{} table is not lower-unitriangular at ({}, {}): {}",
            t.kind,
            t.row_labels[i],
            t.col_labels[j],
            t.values[i][j]
        )));
    }
    let k = t.size();
    let mut inv = vec![vec![BigInt::zero(); k]; k];
    for j in 0..k {
        inv[j][j] = BigInt::one();
        for i in j + 1..k {
            let mut acc = BigInt::zero();
            for s in j..i {
                acc += &t.values[i][s] * &inv[s][j];
            }
            inv[i][j] = -acc;
        }
    }
    Ok(IntegerTable {
        kind,
        n: t.n,
        row_labels: t.col_labels.clone(),
        col_labels: t.row_labels.clone(),
        values: inv,
    })
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    kind: TableKind,
    order: String,
    row_labels: Vec<Partition>,
    col_labels: Vec<Partition>,
    values: Vec<Vec<String>>,
}

const ORDER_NAME: &str = "descending-lex";

impl From<&IntegerTable> for TableJson {
    fn from(t: &IntegerTable) -> Self {
        TableJson {
            n: t.n,
            kind: t.kind,
            order: ORDER_NAME.to_string(),
            row_labels: t.row_labels.clone(),
            col_labels: t.col_labels.clone(),
            values: t.values.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
        }
    }
}

impl TryFrom<TableJson> for IntegerTable {
    type Error = Error;

    fn try_from(raw: TableJson) -> Result<Self> {
        if raw.order != ORDER_NAME {
            return Err(Error::invalid(format!("unsupported label order {:?}", raw.order)));
        }
        let values = raw
            .values
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse::<BigInt>().map_err(|_| Error::invalid(format!("bad integer cell {s:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntegerTable::with_labels(raw.kind, raw.n, raw.row_labels, raw.col_labels, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(kind: TableKind, n: usize, rows: &[&[i64]]) -> IntegerTable {
        let ctx = SymmetricGroupContext::new(n).unwrap();
        let values = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
        IntegerTable::new(kind, &ctx, values).unwrap()
    }

    #[test]
    fn csv_layout() {
        let t = table(TableKind::Characters, 3, &[&[1, 1, 1], &[-1, 0, 2], &[1, -1, 1]]);
        let csv = t.to_csv().unwrap();
        assert_eq!(csv, "characters,3,2+1,1+1+1\n3,1,1,1\n2+1,-1,0,2\n1+1+1,1,-1,1\n");
        assert_eq!(IntegerTable::from_csv(&csv).unwrap(), t);
    }

    #[test]
    fn json_schema() {
        let t = table(TableKind::Kostka, 2, &[&[1, 0], &[1, 1]]);
        let v = t.to_json_value();
        assert_eq!(v["n"], 2);
        assert_eq!(v["kind"], "kostka");
        assert_eq!(v["order"], "descending-lex");
        assert_eq!(v["row_labels"], serde_json::json!([[2], [1, 1]]));
        assert_eq!(v["values"], serde_json::json!([["1", "0"], ["1", "1"]]));
        assert_eq!(IntegerTable::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn shape_checks() {
        let ctx = SymmetricGroupContext::new(3).unwrap();
        assert!(IntegerTable::new(TableKind::Kostka, &ctx, vec![vec![BigInt::one(); 3]; 2]).is_err());
        let swapped = vec!["1+1+1".parse().unwrap(), "2+1".parse().unwrap(), "3".parse().unwrap()];
        let vals = vec![vec![BigInt::zero(); 3]; 3];
        assert!(IntegerTable::with_labels(TableKind::Kostka, 3, swapped.clone(), swapped, vals).is_err());
    }

    #[test]
    fn unitriangular_inverse() {
        let k = table(TableKind::Kostka, 3, &[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]]);
        let inv = invert_unitriangular(&k, TableKind::InverseKostka).unwrap();
        assert_eq!(inv.to_i64_rows(), vec![vec![1, 0, 0], vec![-1, 1, 0], vec![1, -2, 1]]);
        assert!(k.mul(&inv, TableKind::Kostka).unwrap().is_identity());
        assert_eq!(k.triangular_determinant().unwrap(), BigInt::one());

        let bad = table(TableKind::Kostka, 3, &[&[1, 0, 0], &[1, 2, 0], &[1, 2, 1]]);
        assert!(matches!(invert_unitriangular(&bad, TableKind::InverseKostka), Err(Error::Verification(_))));
    }

    #[test]
    fn pretty_output_is_right_aligned() {
        let t = table(TableKind::Frobenius, 3, &[&[1, 1, 1], &[0, 1, 3], &[0, 0, 6]]);
        let ctx = SymmetricGroupContext::new(3).unwrap();
        let s = t.render_pretty(Some(ctx.class_sizes()));
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].starts_with("class size"));
        assert!(lines[0].ends_with('1'));
        assert!(lines[4].ends_with("  6"));
    }
}
