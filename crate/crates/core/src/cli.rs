//! Command implementations behind the `kostka` binary. Each returns the text
//! to print so the binary stays a thin argument parser.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_traits::One;

use crate::bench::run_bench;
use crate::cache::TableCache;
use crate::error::{Error, Result};
use crate::frobenius::{check_frobenius_table, frobenius_table};
use crate::monomial::{monomial_solve, DEFAULT_MONOMIAL_MAX_N};
use crate::partitions::{partitions_of_with_cap, SymmetricGroupContext, DEFAULT_MAX_N};
use crate::table::{IntegerTable, TableKind};
use crate::triangular::triangular_solve;
use crate::verification::{full_report, verify_kostka_shape, verify_orthonormality, VerifyOptions};

/// Largest `n` for the raw monomial identity when `--deep` is not given.
pub const SHALLOW_RAW_CHECK_MAX_N: usize = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Pretty,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pretty" => Ok(OutputFormat::Pretty),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::invalid(format!("unknown format {other:?}"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Pretty => "pretty",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    #[default]
    Triangular,
    Monomial,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Triangular => "triangular",
            Method::Monomial => "monomial",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangular" => Ok(Method::Triangular),
            "monomial" => Ok(Method::Monomial),
            other => Err(Error::invalid(format!("unknown method {other:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub max_n: usize,
    pub monomial_max_n: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_n: DEFAULT_MAX_N, monomial_max_n: DEFAULT_MONOMIAL_MAX_N, cache_dir: None }
    }
}

impl Config {
    fn context(&self, n: usize) -> Result<SymmetricGroupContext> {
        SymmetricGroupContext::with_cap(n, self.max_n)
    }

    fn cache(&self) -> Result<Option<TableCache>> {
        self.cache_dir.as_ref().map(TableCache::new).transpose()
    }
}

pub fn cmd_partitions(n: usize, format: OutputFormat, cfg: &Config) -> Result<String> {
    let parts = partitions_of_with_cap(n, cfg.max_n)?;
    Ok(match format {
        OutputFormat::Pretty | OutputFormat::Csv => {
            parts.iter().map(|p| format!("{p}\n")).collect()
        }
        OutputFormat::Json => serde_json::to_string(&parts)? + "\n",
    })
}

fn cache_method(kind: TableKind, method: Method) -> Option<&'static str> {
    match kind {
        TableKind::Frobenius => None,
        _ => Some(method.as_str()),
    }
}

/// Invariants a cached table of each kind must satisfy before it is used.
fn recheck(table: &IntegerTable, ctx: &SymmetricGroupContext) -> Result<()> {
    if table.row_labels() != ctx.partitions() || table.col_labels() != ctx.partitions() {
        return Err(Error::verification("cached table labels do not match n"));
    }
    let check = match table.kind() {
        TableKind::Frobenius => return check_frobenius_table(table, ctx),
        TableKind::Kostka => verify_kostka_shape(table),
        TableKind::InverseKostka => {
            if table.is_lower_unitriangular() {
                return Ok(());
            }
            return Err(Error::verification("cached inverse-kostka table is not lower-unitriangular"));
        }
        TableKind::Characters => {
            if table.row(0).iter().any(|v| !v.is_one()) {
                return Err(Error::verification("cached character table has a non-trivial first row"));
            }
            verify_orthonormality(table, ctx)
        }
    };
    if check.passed {
        Ok(())
    } else {
        Err(Error::verification(format!("cached {} table: {}", table.kind(), check.detail)))
    }
}

fn frobenius_cached(ctx: &SymmetricGroupContext, cache: Option<&TableCache>) -> Result<IntegerTable> {
    if let Some(c) = cache {
        if let Some(t) = c.load(TableKind::Frobenius, ctx.n(), None)? {
            recheck(&t, ctx)?;
            return Ok(t);
        }
    }
    let t = frobenius_table(ctx)?;
    if let Some(c) = cache {
        c.store(&t, None)?;
    }
    Ok(t)
}

/// Computes (or loads from the cache and re-checks) one table.
pub fn compute_table(kind: TableKind, n: usize, method: Method, cfg: &Config) -> Result<IntegerTable> {
    if kind == TableKind::Frobenius && method == Method::Monomial {
        return Err(Error::invalid("the monomial method does not produce compound characters"));
    }
    let ctx = cfg.context(n)?;
    if method == Method::Monomial && n > cfg.monomial_max_n {
        return Err(Error::invalid(format!(
            "n = {n} exceeds the monomial-method cap of {}",
            cfg.monomial_max_n
        )));
    }
    let cache = cfg.cache()?;
    let key = cache_method(kind, method);
    if let Some(c) = &cache {
        if let Some(t) = c.load(kind, n, key)? {
            recheck(&t, &ctx)?;
            return Ok(t);
        }
    }
    let phi = frobenius_cached(&ctx, cache.as_ref())?;
    let (kostka, inverse, characters) = match method {
        Method::Triangular if kind == TableKind::Frobenius => return Ok(phi),
        Method::Triangular => {
            let r = triangular_solve(&phi, &ctx)?;
            (r.kostka, r.inverse_kostka, r.characters)
        }
        Method::Monomial => {
            let r = monomial_solve(&ctx, cfg.monomial_max_n)?;
            (r.kostka, r.inverse_kostka, r.characters)
        }
    };
    if let Some(c) = &cache {
        for t in [&kostka, &inverse, &characters] {
            c.store(t, key)?;
        }
    }
    Ok(match kind {
        TableKind::Kostka => kostka,
        TableKind::InverseKostka => inverse,
        TableKind::Characters => characters,
        TableKind::Frobenius => unreachable!("handled above"),
    })
}

pub fn render_table(table: &IntegerTable, format: OutputFormat) -> Result<String> {
    Ok(match format {
        OutputFormat::Pretty => {
            let sizes = if table.kind().has_class_columns() {
                Some(SymmetricGroupContext::with_cap(table.n(), usize::MAX)?.class_sizes().to_vec())
            } else {
                None
            };
            table.render_pretty(sizes.as_deref())
        }
        OutputFormat::Csv => table.to_csv()?,
        OutputFormat::Json => table.to_json() + "\n",
    })
}

/// Renders a table, writing it to `out` when given (and returning an empty
/// string) or returning the text otherwise.
pub fn cmd_table(
    kind: TableKind,
    n: usize,
    method: Method,
    format: OutputFormat,
    out: Option<&Path>,
    cfg: &Config,
) -> Result<String> {
    let table = compute_table(kind, n, method, cfg)?;
    let text = render_table(&table, format)?;
    match out {
        Some(path) => {
            fs::write(path, text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

/// Runs the verification report. Returns the rendering and whether every
/// check passed.
pub fn cmd_verify(n: usize, format: OutputFormat, deep: bool, cfg: &Config) -> Result<(String, bool)> {
    let ctx = cfg.context(n)?;
    let cache = cfg.cache()?;
    let phi = frobenius_cached(&ctx, cache.as_ref())?;
    let opts = VerifyOptions {
        raw_check_max_n: if deep { crate::verification::DEFAULT_RAW_CHECK_MAX_N } else { SHALLOW_RAW_CHECK_MAX_N },
        monomial_max_n: cfg.monomial_max_n,
    };
    let report = full_report(&ctx, &phi, opts);
    let text = match format {
        OutputFormat::Pretty => report.to_string(),
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(["name", "passed", "detail"])?;
            for c in &report.checks {
                w.write_record([c.name.as_str(), if c.passed { "true" } else { "false" }, c.detail.as_str()])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.into_error()))?).expect("csv is UTF-8")
        }
    };
    Ok((text, report.all_passed()))
}

pub fn cmd_bench(n: usize, repetitions: usize, format: OutputFormat, cfg: &Config) -> Result<String> {
    cfg.context(n)?;
    let report = run_bench(n, repetitions, cfg.monomial_max_n)?;
    Ok(match format {
        OutputFormat::Pretty => report.render_text(),
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Csv => format!(
            "n,repetitions,triangular_nanos,monomial_nanos,ratio\n{},{},{},{},{}\n",
            report.n, report.repetitions, report.triangular_nanos, report.monomial_nanos, report.ratio
        ),
    })
}
