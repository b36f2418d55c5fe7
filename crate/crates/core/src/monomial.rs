//! Kostka matrices from determinants of complete homogeneous polynomials.
//!
//! For each `μ` the signed determinant of the `n × n` matrix of complete
//! homogeneous polynomials `h_{μ_c + (n - c) - (r - 1)}` expands on the
//! monomial-symmetric basis as `Σ_λ K[λ][μ] m_λ`. No characters are involved.
//! Inverting the resulting unitriangular table writes each `m_ν` back in
//! terms of the determinants.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::frobenius::frobenius_table;
use crate::partitions::{Partition, SymmetricGroupContext};
use crate::symfunc::{complete_homogeneous, sym_add, sym_mul, sym_scale, SymmetricPolynomial};
use crate::table::{invert_unitriangular, IntegerTable, TableKind};

/// Largest `n` the monomial route accepts by default.
pub const DEFAULT_MONOMIAL_MAX_N: usize = 6;

/// Work done while expanding one determinant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DeterminantStats {
    /// Polynomial products actually formed (entries equal to 1 are free).
    pub multiplications: usize,
    /// Minors that were expanded, counting each distinct minor once.
    pub minors: usize,
}

/// Indices `p` of the `h_p` entries: row `r`, column `c` (0-based here)
/// holds `μ_c + (n - 1 - c) - r`.
pub fn q_matrix_indices(n: usize, mu: &Partition) -> Vec<Vec<i64>> {
    (0..n)
        .map(|r| (0..n).map(|c| mu.part(c) as i64 + (n - 1 - c) as i64 - r as i64).collect())
        .collect()
}

/// Number of permutations whose product of entries is not identically zero,
/// i.e. with every index nonnegative.
pub fn nonzero_permutation_terms(indices: &[Vec<i64>]) -> usize {
    fn go(indices: &[Vec<i64>], col: usize, used: &mut Vec<bool>) -> usize {
        if col == indices.len() {
            return 1;
        }
        let mut total = 0;
        for r in 0..indices.len() {
            if !used[r] && indices[r][col] >= 0 {
                used[r] = true;
                total += go(indices, col + 1, used);
                used[r] = false;
            }
        }
        total
    }
    go(indices, 0, &mut vec![false; indices.len()])
}

struct Expander<'a> {
    entries: &'a [Vec<SymmetricPolynomial>],
    memo: HashMap<(u32, u32), SymmetricPolynomial>,
    stats: DeterminantStats,
}

impl Expander<'_> {
    fn minor(&mut self, rows: u32, cols: u32) -> Result<SymmetricPolynomial> {
        let n = self.entries.len();
        if rows == 0 {
            return Ok(SymmetricPolynomial::one(n));
        }
        if let Some(v) = self.memo.get(&(rows, cols)) {
            return Ok(v.clone());
        }
        let row_ids: Vec<usize> = (0..n).filter(|i| rows & (1 << i) != 0).collect();
        let col_ids: Vec<usize> = (0..n).filter(|j| cols & (1 << j) != 0).collect();

        // expand along the line with the most zeros, then the most ones
        let score = |cells: &mut dyn Iterator<Item = &SymmetricPolynomial>| {
            cells.fold((0usize, 0usize), |(z, o), e| (z + e.is_zero() as usize, o + e.is_one() as usize))
        };
        let mut best: Option<(bool, usize, (usize, usize))> = None;
        for (pos, &r) in row_ids.iter().enumerate() {
            let s = score(&mut col_ids.iter().map(|&c| &self.entries[r][c]));
            if best.is_none_or(|b| s > b.2) {
                best = Some((true, pos, s));
            }
        }
        for (pos, &c) in col_ids.iter().enumerate() {
            let s = score(&mut row_ids.iter().map(|&r| &self.entries[r][c]));
            if best.is_none_or(|b| s > b.2) {
                best = Some((false, pos, s));
            }
        }
        let (along_row, pos, _) = best.expect("minor is non-empty");
        self.stats.minors += 1;

        let mut acc: Option<SymmetricPolynomial> = None;
        let others = if along_row { &col_ids } else { &row_ids };
        for (opos, &other) in others.iter().enumerate() {
            let (r, c) = if along_row { (row_ids[pos], other) } else { (other, col_ids[pos]) };
            let entry = &self.entries[r][c];
            if entry.is_zero() {
                continue;
            }
            let sub = self.minor(rows & !(1 << r), cols & !(1 << c))?;
            if sub.is_zero() {
                continue;
            }
            let mut term = if entry.is_one() {
                sub
            } else {
                self.stats.multiplications += 1;
                sym_mul(entry, &sub)?
            };
            if (pos + opos) % 2 == 1 {
                term = sym_scale(&BigInt::from(-1), &term);
            }
            acc = Some(match acc {
                None => term,
                Some(a) => sym_add(&a, &term)?,
            });
        }
        let out = acc.unwrap_or_else(|| SymmetricPolynomial::zero(n, 0));
        self.memo.insert((rows, cols), out.clone());
        Ok(out)
    }
}

/// Signed determinant of complete homogeneous polynomials for `mu`, with the
/// work counters.
pub fn q_determinant_with_stats(
    ctx: &SymmetricGroupContext,
    mu: &Partition,
) -> Result<(SymmetricPolynomial, DeterminantStats)> {
    let n = ctx.n();
    if mu.weight() != n {
        return Err(Error::invalid(format!("{mu} is not a partition of {n}")));
    }
    let entries: Vec<Vec<SymmetricPolynomial>> = q_matrix_indices(n, mu)
        .into_iter()
        .map(|row| row.into_iter().map(|p| complete_homogeneous(n, p)).collect())
        .collect();
    assert!(n < 32, "determinant masks hold at most 31 lines");
    let full = (1u32 << n) - 1;
    let mut ex = Expander { entries: &entries, memo: HashMap::new(), stats: DeterminantStats::default() };
    let det = ex.minor(full, full)?;
    // global sign (-1)^{n(n-1)/2}
    let det = if (n * (n.saturating_sub(1)) / 2) % 2 == 1 { sym_scale(&BigInt::from(-1), &det) } else { det };
    Ok((det, ex.stats))
}

/// The symmetric polynomial whose monomial coefficients form column `μ` of
/// the Kostka table.
pub fn q_determinant(ctx: &SymmetricGroupContext, mu: &Partition) -> Result<SymmetricPolynomial> {
    q_determinant_with_stats(ctx, mu).map(|(q, _)| q)
}

fn check_cap(ctx: &SymmetricGroupContext, cap: usize) -> Result<()> {
    if ctx.n() > cap {
        return Err(Error::invalid(format!(
            "n = {} exceeds the monomial-method cap of {cap}",
            ctx.n()
        )));
    }
    Ok(())
}

/// Kostka table read off the determinant expansions.
pub fn kostka_from_monomials(ctx: &SymmetricGroupContext) -> Result<IntegerTable> {
    kostka_from_monomials_with_cap(ctx, DEFAULT_MONOMIAL_MAX_N)
}

pub fn kostka_from_monomials_with_cap(ctx: &SymmetricGroupContext, cap: usize) -> Result<IntegerTable> {
    check_cap(ctx, cap)?;
    let k = ctx.k();
    let mut values = vec![Vec::with_capacity(k); k];
    for mu in ctx.partitions() {
        let q = q_determinant(ctx, mu)?;
        for (row, lam) in values.iter_mut().zip(ctx.partitions()) {
            row.push(q.coefficient(lam));
        }
    }
    IntegerTable::new(TableKind::Kostka, ctx, values)
}

/// Inverse Kostka table: row `μ`, column `ν` is the coefficient of the
/// determinant for `μ` when `m_ν` is written in the determinant basis.
pub fn inverse_kostka_from_monomials(ctx: &SymmetricGroupContext) -> Result<IntegerTable> {
    inverse_kostka_from_monomials_with_cap(ctx, DEFAULT_MONOMIAL_MAX_N)
}

pub fn inverse_kostka_from_monomials_with_cap(ctx: &SymmetricGroupContext, cap: usize) -> Result<IntegerTable> {
    let kostka = kostka_from_monomials_with_cap(ctx, cap)?;
    invert_unitriangular(&kostka, TableKind::InverseKostka)
}

/// All three tables by the monomial route. Characters are the inverse
/// Kostka table applied to the compound characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialResult {
    pub kostka: IntegerTable,
    pub inverse_kostka: IntegerTable,
    pub characters: IntegerTable,
}

pub fn monomial_solve(ctx: &SymmetricGroupContext, cap: usize) -> Result<MonomialResult> {
    let kostka = kostka_from_monomials_with_cap(ctx, cap)?;
    let inverse_kostka = invert_unitriangular(&kostka, TableKind::InverseKostka)?;
    let phi = frobenius_table(ctx)?;
    let characters = inverse_kostka.mul(&phi, TableKind::Characters)?;
    Ok(MonomialResult { kostka, inverse_kostka, characters })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{expand_to_raw, RawPolynomial};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn coeffs(q: &SymmetricPolynomial) -> Vec<(String, i64)> {
        q.coeffs().map(|(l, c)| (l.to_string(), i64::try_from(c).unwrap())).collect()
    }

    #[test]
    fn s3_determinants() {
        let ctx = SymmetricGroupContext::new(3).unwrap();
        let q111 = q_determinant(&ctx, &p(&[1, 1, 1])).unwrap();
        assert_eq!(expand_to_raw(&q111), RawPolynomial::monomial(vec![1, 1, 1], 1));
        let q21 = q_determinant(&ctx, &p(&[2, 1])).unwrap();
        assert_eq!(coeffs(&q21), vec![("1+1+1".into(), 2), ("2+1".into(), 1)]);
        let q3 = q_determinant(&ctx, &p(&[3])).unwrap();
        assert_eq!(q3, complete_homogeneous(3, 3));
    }

    #[test]
    fn matrix_layout_for_mu_111() {
        // first row h3 h2 h1, second h2 h1 h0, third h1 h0 h_{-1}
        assert_eq!(q_matrix_indices(3, &p(&[1, 1, 1])), vec![vec![3, 2, 1], vec![2, 1, 0], vec![1, 0, -1]]);
        assert_eq!(q_matrix_indices(3, &p(&[3])), vec![vec![5, 1, 0], vec![4, 0, -1], vec![3, -1, -2]]);
    }

    #[test]
    fn sparse_structure_for_311_in_s5() {
        let idx = q_matrix_indices(5, &p(&[3, 1, 1]));
        // last column: a single 1 on top, then negative indices
        assert_eq!(idx.iter().map(|r| r[4]).collect::<Vec<_>>(), vec![0, -1, -2, -3, -4]);
        assert_eq!(idx.iter().map(|r| r[3]).collect::<Vec<_>>(), vec![1, 0, -1, -2, -3]);
        assert_eq!(idx[3][2], 0);
        assert_eq!(idx[4][1], 0);
        assert_eq!(idx[4][2], -1);
        // only four of the 120 permutation products survive
        assert_eq!(nonzero_permutation_terms(&idx), 4);
        let ctx = SymmetricGroupContext::new(5).unwrap();
        let (_, stats) = q_determinant_with_stats(&ctx, &p(&[3, 1, 1])).unwrap();
        // each surviving term needs at most n - 1 products; the dense bound is 120 * 4
        assert!(stats.multiplications <= 4 * 4, "{stats:?}");
    }

    #[test]
    fn s3_tables() {
        let ctx = SymmetricGroupContext::new(3).unwrap();
        assert_eq!(kostka_from_monomials(&ctx).unwrap().to_i64_rows(), vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 2, 1]]);
        let inv = inverse_kostka_from_monomials(&ctx).unwrap();
        assert_eq!(inv.to_i64_rows(), vec![vec![1, 0, 0], vec![-1, 1, 0], vec![1, -2, 1]]);
        // m_(3) = Q(1^3) - Q(2,1) + Q(3): column (3) of the inverse read bottom-up
        assert_eq!(inv.column(0), vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
    }

    #[test]
    fn trivial_group() {
        let ctx = SymmetricGroupContext::new(1).unwrap();
        assert_eq!(kostka_from_monomials(&ctx).unwrap().to_i64_rows(), vec![vec![1]]);
    }

    #[test]
    fn cap_and_weight_errors() {
        let ctx = SymmetricGroupContext::new(7).unwrap();
        assert!(matches!(kostka_from_monomials(&ctx), Err(Error::InvalidInput(_))));
        let ctx3 = SymmetricGroupContext::new(3).unwrap();
        assert!(q_determinant(&ctx3, &p(&[2, 1, 1])).is_err());
    }
}
