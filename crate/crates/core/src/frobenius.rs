//! Frobenius compound characters from cycle distributions.
//!
//! The compound character `φ^λ` is the permutation character of `S_n` acting
//! on the cosets of the Young subgroup `S_λ1 × S_λ2 × ...`. Its value on the
//! class with multiplicities `m_j` is obtained by distributing the `m_j`
//! cycles of each length `j` among the factors so that factor `i` receives
//! exactly `λ_i` points, and summing a product of multinomials over all such
//! distributions.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{factorial, CycleType, Partition, SymmetricGroupContext};
use crate::table::{IntegerTable, TableKind};

/// A solution `m[j][i]`: how many `(j+1)`-cycles land in factor `i`.
///
/// Always `n × n`; factors past the partition's length are all-zero columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionMatrix {
    entries: Vec<Vec<usize>>,
}

impl DistributionMatrix {
    /// Entry for cycle length `j >= 1` and factor `i >= 1`.
    pub fn get(&self, j: usize, i: usize) -> usize {
        self.entries[j - 1][i - 1]
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    /// Nonzero entries as `(j, i, m_{j,i})`, both indices 1-based.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (j, row) in self.entries.iter().enumerate() {
            for (i, &m) in row.iter().enumerate() {
                if m > 0 {
                    out.push((j + 1, i + 1, m));
                }
            }
        }
        out
    }
}

fn check_weights(lam: &Partition, l: &CycleType) -> Result<()> {
    if lam.weight() != l.n() {
        return Err(Error::invalid(format!(
            "character label {lam} has weight {} but class {l} has weight {}",
            lam.weight(),
            l.n()
        )));
    }
    Ok(())
}

/// All distributions of the cycles of `l` among the factors of `lam`.
///
/// Factors are filled in order. Within a factor, longer cycles are assigned
/// first, each count tried from zero upwards, so the enumeration order is
/// fixed.
pub fn enumerate_distributions(lam: &Partition, l: &CycleType) -> Result<Vec<DistributionMatrix>> {
    check_weights(lam, l)?;
    let n = l.n();
    let mut remaining: Vec<usize> = (1..=n).map(|j| l.multiplicity(j)).collect();
    let mut current = vec![vec![0usize; n]; n];
    let mut out = Vec::new();
    distribute_factor(lam, 0, &mut remaining, &mut current, &mut out);
    Ok(out)
}

fn distribute_factor(
    lam: &Partition,
    factor: usize,
    remaining: &mut [usize],
    current: &mut [Vec<usize>],
    out: &mut Vec<DistributionMatrix>,
) {
    if factor == lam.len() {
        // every point is placed, so every cycle is too
        debug_assert!(remaining.iter().all(|&m| m == 0));
        out.push(DistributionMatrix { entries: current.to_vec() });
        return;
    }
    let n = remaining.len();
    fill_cycles(lam, factor, n, lam.part(factor), remaining, current, out);
}

#[allow(clippy::too_many_arguments)]
fn fill_cycles(
    lam: &Partition,
    factor: usize,
    cycle_len: usize,
    points_left: usize,
    remaining: &mut [usize],
    current: &mut [Vec<usize>],
    out: &mut Vec<DistributionMatrix>,
) {
    if cycle_len == 0 {
        if points_left == 0 {
            distribute_factor(lam, factor + 1, remaining, current, out);
        }
        return;
    }
    let j = cycle_len;
    let max = remaining[j - 1].min(points_left / j);
    for count in 0..=max {
        remaining[j - 1] -= count;
        current[j - 1][factor] = count;
        fill_cycles(lam, factor, j - 1, points_left - j * count, remaining, current, out);
        current[j - 1][factor] = 0;
        remaining[j - 1] += count;
    }
}

fn exact_div(num: BigUint, den: &BigUint) -> Result<BigUint> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::verification(format!("inexact division {num} / {den}")));
    }
    Ok(q)
}

struct Factorials(Vec<BigUint>);

impl Factorials {
    fn up_to(n: usize) -> Self {
        Factorials((0..=n).map(factorial).collect())
    }

    fn from_context(ctx: &SymmetricGroupContext) -> Self {
        Factorials((0..=ctx.n()).map(|i| ctx.factorial(i).clone()).collect())
    }

    fn get(&self, i: usize) -> &BigUint {
        &self.0[i]
    }
}

fn subgroup_count_with(lam: &Partition, l: &CycleType, fact: &Factorials) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for sol in enumerate_distributions(lam, l)? {
        let mut term = BigUint::one();
        for (i, &size) in lam.parts().iter().enumerate() {
            let mut den = BigUint::one();
            for (jdx, row) in sol.entries.iter().enumerate() {
                let m = row[i];
                den *= BigUint::from(jdx + 1).pow(m as u32) * fact.get(m);
            }
            term *= exact_div(fact.get(size).clone(), &den)?;
        }
        total += term;
    }
    Ok(total)
}

fn character_with(lam: &Partition, l: &CycleType, fact: &Factorials) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for sol in enumerate_distributions(lam, l)? {
        let mut term = BigUint::one();
        for (jdx, row) in sol.entries.iter().enumerate() {
            let m_j = l.multiplicity(jdx + 1);
            if m_j == 0 {
                continue;
            }
            let den: BigUint = row.iter().map(|&m| fact.get(m).clone()).product();
            term *= exact_div(fact.get(m_j).clone(), &den)?;
        }
        total += term;
    }
    Ok(total)
}

/// Number of elements of the Young subgroup `S_λ` that fall in class `l`.
pub fn subgroup_class_count(lam: &Partition, l: &CycleType) -> Result<BigUint> {
    check_weights(lam, l)?;
    subgroup_count_with(lam, l, &Factorials::up_to(l.n()))
}

/// Value of the compound character `φ^λ` on class `l`.
pub fn frobenius_character(lam: &Partition, l: &CycleType) -> Result<BigUint> {
    check_weights(lam, l)?;
    character_with(lam, l, &Factorials::up_to(l.n()))
}

/// Full table of compound characters, rows `λ`, columns classes.
pub fn frobenius_table(ctx: &SymmetricGroupContext) -> Result<IntegerTable> {
    let fact = Factorials::from_context(ctx);
    let classes: Vec<CycleType> = ctx.partitions().iter().map(Partition::cycle_type).collect();
    let mut values = Vec::with_capacity(ctx.k());
    for lam in ctx.partitions() {
        let row = classes
            .iter()
            .map(|l| character_with(lam, l, &fact).map(BigInt::from))
            .collect::<Result<Vec<_>>>()?;
        values.push(row);
    }
    IntegerTable::new(TableKind::Frobenius, ctx, values)
}

/// Structural checks every compound-character table satisfies; used on
/// tables loaded from disk.
pub fn check_frobenius_table(t: &IntegerTable, ctx: &SymmetricGroupContext) -> Result<()> {
    if t.kind() != TableKind::Frobenius || t.n() != ctx.n() || t.row_labels() != ctx.partitions() {
        return Err(Error::verification("table is not a compound-character table for this n"));
    }
    let k = ctx.k();
    for i in 0..k {
        for j in 0..k {
            let v = t.get(i, j);
            if v < &BigInt::zero() {
                return Err(Error::verification(format!(
                    "negative compound character at ({}, {}): {v}",
                    t.row_labels()[i],
                    t.col_labels()[j]
                )));
            }
        }
    }
    if t.row(0).iter().any(|v| !v.is_one()) {
        return Err(Error::verification("top row of the compound-character table is not all ones"));
    }
    if t.get(k - 1, k - 1) != &BigInt::from(ctx.group_order().clone()) {
        return Err(Error::verification("bottom-right compound character is not n!"));
    }
    Ok(())
}
