//! Row-by-row inversion of the unitriangular coupling between compound and
//! irreducible characters.
//!
//! Row `r` of the compound-character table is a nonnegative combination of
//! the irreducible characters `χ^s` with `s` at or above `r` in canonical
//! order, with coefficient 1 on `χ^r`. Walking the rows from `(n)` down, every
//! earlier `χ^s` is already known, so the coefficients are inner products
//! `⟨φ^r | χ^s⟩` and the residual is the next irreducible character.
//!
//! Each `χ^r` is also carried as an integer combination of the rows of `φ`.
//! Those coefficients are exactly the inverse Kostka matrix.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::SymmetricGroupContext;
use crate::table::{invert_unitriangular, IntegerTable, TableKind};

/// The three tables produced by one solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularSolveResult {
    /// Rows `λ`, columns `μ`: `φ^λ = Σ_μ kostka[λ][μ] χ^μ`.
    pub kostka: IntegerTable,
    /// Rows `λ`, columns `μ`: `χ^λ = Σ_μ inverse_kostka[λ][μ] φ^μ`.
    pub inverse_kostka: IntegerTable,
    /// Irreducible characters, rows `λ`, columns classes.
    pub characters: IntegerTable,
}

/// Class-function inner product `(1/n!) Σ_σ |C_σ| f(σ) g(σ)`.
pub fn bracket(f: &[BigInt], g: &[BigInt], ctx: &SymmetricGroupContext) -> Result<BigRational> {
    if f.len() != ctx.k() || g.len() != ctx.k() {
        return Err(Error::invalid(format!(
            "class functions must have {} values, got {} and {}",
            ctx.k(),
            f.len(),
            g.len()
        )));
    }
    let sum: BigInt = f
        .iter()
        .zip(g)
        .zip(ctx.class_sizes())
        .map(|((a, b), size)| a * b * BigInt::from(size.clone()))
        .sum();
    Ok(BigRational::new(sum, BigInt::from(ctx.group_order().clone())))
}

fn integral_bracket(f: &[BigInt], g: &[BigInt], ctx: &SymmetricGroupContext, what: &str) -> Result<BigInt> {
    let b = bracket(f, g, ctx)?;
    if !b.is_integer() {
        return Err(Error::verification(format!("{what} = {b} is not an integer")));
    }
    Ok(b.to_integer())
}

/// Solves for the Kostka matrix, its inverse and the character table from a
/// compound-character table.
#[allow(clippy::needless_range_loop)]
pub fn triangular_solve(phi: &IntegerTable, ctx: &SymmetricGroupContext) -> Result<TriangularSolveResult> {
    if phi.kind() != TableKind::Frobenius {
        return Err(Error::invalid(format!("expected a frobenius table, got {}", phi.kind())));
    }
    if phi.n() != ctx.n() || phi.row_labels() != ctx.partitions() || phi.col_labels() != ctx.partitions() {
        return Err(Error::invalid("compound-character table does not match the context"));
    }
    let k = ctx.k();
    let labels = ctx.partitions();
    let mut kostka = IntegerTable::identity(ctx, TableKind::Kostka);
    let mut inverse = IntegerTable::identity(ctx, TableKind::InverseKostka);
    let mut chars: Vec<Vec<BigInt>> = Vec::with_capacity(k);

    for r in 0..k {
        let phi_r = phi.row(r);
        let mut residual: Vec<BigInt> = phi_r.to_vec();
        let mut expansion: Vec<BigInt> = (0..k).map(|t| if t == r { BigInt::one() } else { BigInt::zero() }).collect();
        for s in 0..r {
            let a = integral_bracket(phi_r, &chars[s], ctx, &format!("<phi^{} | chi^{}>", labels[r], labels[s]))?;
            if a.is_zero() {
                continue;
            }
            for (x, c) in residual.iter_mut().zip(&chars[s]) {
                *x -= &a * c;
            }
            for t in 0..=s {
                let c = inverse.get(s, t).clone();
                expansion[t] -= &a * c;
            }
            kostka.set(r, s, a);
        }
        let diag = integral_bracket(phi_r, &residual, ctx, &format!("<phi^{} | residual>", labels[r]))?;
        if !diag.is_one() {
            return Err(Error::verification(format!(
                "diagonal coupling for {} is {diag}, expected 1",
                labels[r]
            )));
        }
        for (t, v) in expansion.into_iter().enumerate() {
            inverse.set(r, t, v);
        }
        chars.push(residual);
    }

    let characters = IntegerTable::new(TableKind::Characters, ctx, chars)?;
    Ok(TriangularSolveResult { kostka, inverse_kostka: inverse, characters })
}

/// Re-derives the inverse by back-substitution on the Kostka table and
/// compares it with the tracked expansion coefficients.
pub fn check_inverse_by_back_substitution(result: &TriangularSolveResult) -> Result<()> {
    let direct = invert_unitriangular(&result.kostka, TableKind::InverseKostka)?;
    if direct != result.inverse_kostka {
        return Err(Error::verification(
            "tracked inverse Kostka table differs from the back-substituted inverse",
        ));
    }
    Ok(())
}
