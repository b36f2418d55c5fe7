//! Wall-clock comparison of the two routes to the character table.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::frobenius_table;
use crate::monomial::monomial_solve;
use crate::partitions::SymmetricGroupContext;
use crate::triangular::triangular_solve;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub n: usize,
    pub repetitions: usize,
    /// Median wall-clock time of the triangular pipeline.
    pub triangular_nanos: u64,
    /// Median wall-clock time of the monomial pipeline.
    pub monomial_nanos: u64,
    /// `monomial_nanos / triangular_nanos`.
    pub ratio: f64,
}

fn median(mut samples: Vec<Duration>) -> u64 {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    let d = if samples.len() % 2 == 1 { samples[mid] } else { (samples[mid - 1] + samples[mid]) / 2 };
    // a zero reading would break the ratio; clamp to the timer's resolution
    (d.as_nanos() as u64).max(1)
}

/// Runs both full pipelines `repetitions` times each. Both start from `n`
/// alone: the triangular side computes the compound characters and solves;
/// the monomial side expands every determinant, inverts, and applies the
/// inverse to the compound characters.
pub fn run_bench(n: usize, repetitions: usize, monomial_cap: usize) -> Result<BenchReport> {
    if repetitions == 0 {
        return Err(Error::invalid("repetitions must be at least 1"));
    }
    if n > monomial_cap {
        return Err(Error::invalid(format!("n = {n} exceeds the monomial-method cap of {monomial_cap}")));
    }
    let ctx = SymmetricGroupContext::new(n)?;
    let mut tri = Vec::with_capacity(repetitions);
    let mut mono = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let t0 = Instant::now();
        let phi = frobenius_table(&ctx)?;
        let solved = triangular_solve(&phi, &ctx)?;
        tri.push(t0.elapsed());

        let t0 = Instant::now();
        let m = monomial_solve(&ctx, monomial_cap)?;
        mono.push(t0.elapsed());

        if m.characters != solved.characters {
            return Err(Error::verification("the two methods disagree on the character table"));
        }
    }
    let triangular_nanos = median(tri);
    let monomial_nanos = median(mono);
    Ok(BenchReport {
        n,
        repetitions,
        triangular_nanos,
        monomial_nanos,
        ratio: monomial_nanos as f64 / triangular_nanos as f64,
    })
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bench report serializes")
    }

    pub fn render_text(&self) -> String {
        format!(
            "n = {}, {} repetitions (medians)\ntriangular  {:>14} ns\nmonomial    {:>14} ns\nratio       {:>14.1}x\n",
            self.n, self.repetitions, self.triangular_nanos, self.monomial_nanos, self.ratio
        )
    }
}
