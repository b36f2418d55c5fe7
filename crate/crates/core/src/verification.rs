//! Exact cross-checks between the tables and the polynomial identities that
//! connect them. A failed check is reported, not raised, and its detail names
//! the first offending cell.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::{frobenius_character, frobenius_table, subgroup_class_count};
use crate::monomial::{monomial_solve, DEFAULT_MONOMIAL_MAX_N};
use crate::partitions::{class_size, CycleType, SymmetricGroupContext};
use crate::symfunc::{alternant, expand_to_raw, raw_mul, vandermonde, SymmetricPolynomial};
use crate::table::{invert_unitriangular, IntegerTable, TableKind};
use crate::triangular::{bracket, triangular_solve, TriangularSolveResult};

/// Default largest `n` for checks that expand raw polynomials.
pub const DEFAULT_RAW_CHECK_MAX_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed: true, detail: detail.into() }
    }

    fn fail(name: &str, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed: false, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  {:<width$}  {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

fn first_table_diff(a: &IntegerTable, b: &IntegerTable) -> Option<String> {
    if a.row_labels() != b.row_labels() || a.col_labels() != b.col_labels() {
        return Some(format!("{} tables have different labels", a.kind()));
    }
    for i in 0..a.size() {
        for j in 0..a.size() {
            if a.get(i, j) != b.get(i, j) {
                return Some(format!(
                    "{} differs at ({}, {}): expected {}, got {}",
                    a.kind(),
                    a.row_labels()[i],
                    a.col_labels()[j],
                    a.get(i, j),
                    b.get(i, j)
                ));
            }
        }
    }
    None
}

/// Irreducible characters are orthonormal under the class-function inner
/// product.
pub fn verify_orthonormality(characters: &IntegerTable, ctx: &SymmetricGroupContext) -> Check {
    const NAME: &str = "orthonormality";
    if characters.size() != ctx.k() {
        return Check::fail(NAME, format!("table has {} rows, expected {}", characters.size(), ctx.k()));
    }
    for i in 0..ctx.k() {
        for j in i..ctx.k() {
            let got = match bracket(characters.row(i), characters.row(j), ctx) {
                Ok(b) => b,
                Err(e) => return Check::fail(NAME, e.to_string()),
            };
            let want = if i == j { BigRational::one() } else { BigRational::zero() };
            if got != want {
                return Check::fail(
                    NAME,
                    format!(
                        "<chi^{} | chi^{}> expected {want}, got {got}",
                        characters.row_labels()[i],
                        characters.row_labels()[j]
                    ),
                );
            }
        }
    }
    Check::pass(NAME, format!("{} characters pairwise orthonormal", ctx.k()))
}

/// Checks, on one class, that multiplying the compound-character generating
/// polynomial by the Vandermonde product gives the character-weighted sum of
/// alternants, as raw polynomials.
pub fn verify_frobenius_identity_with(
    ctx: &SymmetricGroupContext,
    l: &CycleType,
    phi: &IntegerTable,
    characters: &IntegerTable,
) -> Result<Check> {
    let name = format!("monomial-identity[{l}]");
    let n = ctx.n();
    let col = ctx
        .index_of(&l.to_partition())
        .ok_or_else(|| Error::invalid(format!("{l} is not a class of S_{n}")))?;
    let generating = SymmetricPolynomial::from_terms(
        n,
        n,
        ctx.partitions().iter().enumerate().map(|(i, lam)| (lam.clone(), phi.get(i, col).clone())),
    )?;
    let lhs = raw_mul(&expand_to_raw(&generating), &vandermonde(n))?;
    let mut rhs = crate::symfunc::RawPolynomial::zero(n);
    for (i, lam) in ctx.partitions().iter().enumerate() {
        let c = characters.get(i, col);
        if c.is_zero() {
            continue;
        }
        let shifted: Vec<usize> = lam.padded(n).iter().enumerate().map(|(t, v)| v + n - 1 - t).collect();
        rhs = rhs.add(&alternant(n, &shifted)?.scale(c))?;
    }
    if lhs == rhs {
        return Ok(Check::pass(&name, format!("{} monomials agree", lhs.len())));
    }
    let diff = lhs.sub(&rhs)?;
    let (e, c) = diff.terms().next().expect("nonzero difference has a term");
    Ok(Check::fail(&name, format!("monomial {e:?} differs by {c}")))
}

/// Same as [`verify_frobenius_identity_with`], computing both tables by the
/// triangular route. Refuses `n` above `cap`.
pub fn verify_frobenius_identity(ctx: &SymmetricGroupContext, l: &CycleType, cap: usize) -> Result<Check> {
    if ctx.n() > cap {
        return Err(Error::invalid(format!("n = {} exceeds the raw-expansion cap of {cap}", ctx.n())));
    }
    let phi = frobenius_table(ctx)?;
    let solved = triangular_solve(&phi, ctx)?;
    verify_frobenius_identity_with(ctx, l, &phi, &solved.characters)
}

/// Both routes give identical Kostka and inverse Kostka tables, and the
/// inverse applied to the compound characters reproduces the triangular
/// characters.
pub fn verify_cross_method(n: usize, cap: usize) -> Result<Check> {
    if n > cap {
        return Err(Error::invalid(format!("n = {n} exceeds the monomial-method cap of {cap}")));
    }
    let ctx = SymmetricGroupContext::new(n)?;
    let phi = frobenius_table(&ctx)?;
    let tri = triangular_solve(&phi, &ctx)?;
    Ok(compare_methods(&ctx, &tri, cap))
}

fn compare_methods(ctx: &SymmetricGroupContext, tri: &TriangularSolveResult, cap: usize) -> Check {
    const NAME: &str = "cross-method";
    let mono = match monomial_solve(ctx, cap) {
        Ok(m) => m,
        Err(e) => return Check::fail(NAME, e.to_string()),
    };
    for (a, b) in [
        (&tri.kostka, &mono.kostka),
        (&tri.inverse_kostka, &mono.inverse_kostka),
        (&tri.characters, &mono.characters),
    ] {
        if let Some(d) = first_table_diff(a, b) {
            return Check::fail(NAME, d);
        }
    }
    Check::pass(NAME, "kostka, inverse-kostka and characters identical")
}

/// For every pair: `φ · |class| · Π λ_i! = n! · (elements of the Young
/// subgroup in the class)`.
pub fn verify_coset_count_consistency(ctx: &SymmetricGroupContext) -> Check {
    const NAME: &str = "coset-count-consistency";
    for lam in ctx.partitions() {
        let young_order: BigUint = lam.parts().iter().map(|&p| ctx.factorial(p).clone()).product();
        for l in ctx.partitions() {
            let ct = l.cycle_type();
            let (phi, h) = match (frobenius_character(lam, &ct), subgroup_class_count(lam, &ct)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return Check::fail(NAME, e.to_string()),
            };
            let lhs = &phi * class_size(&ct) * &young_order;
            let rhs = ctx.group_order() * &h;
            if lhs != rhs {
                return Check::fail(NAME, format!("({lam}, {l}): {lhs} != {rhs}"));
            }
        }
    }
    Check::pass(NAME, format!("{} pairs consistent", ctx.k() * ctx.k()))
}

/// Kostka table is lower-unitriangular with a first column of ones and
/// nonnegative entries.
pub fn verify_kostka_shape(kostka: &IntegerTable) -> Check {
    const NAME: &str = "kostka-unitriangular";
    if let Some((i, j)) = kostka.first_non_unitriangular_cell() {
        return Check::fail(
            NAME,
            format!("cell ({}, {}) = {}", kostka.row_labels()[i], kostka.col_labels()[j], kostka.get(i, j)),
        );
    }
    for i in 0..kostka.size() {
        if !kostka.get(i, 0).is_one() {
            return Check::fail(NAME, format!("first column at {} is {}", kostka.row_labels()[i], kostka.get(i, 0)));
        }
    }
    if kostka.negative_cells() > 0 {
        return Check::fail(NAME, "negative entries present");
    }
    match kostka.triangular_determinant() {
        Ok(d) if d.is_one() => Check::pass(NAME, "unit diagonal, first column of ones, determinant 1"),
        Ok(d) => Check::fail(NAME, format!("determinant {d}")),
        Err(e) => Check::fail(NAME, e.to_string()),
    }
}

/// Kostka times its inverse is the identity both ways, and the inverse
/// matches an independent back-substitution.
pub fn verify_inverse(kostka: &IntegerTable, inverse: &IntegerTable) -> Check {
    const NAME: &str = "kostka-inverse";
    let products = kostka
        .mul(inverse, TableKind::Kostka)
        .and_then(|a| inverse.mul(kostka, TableKind::Kostka).map(|b| (a, b)));
    match products {
        Ok((a, b)) if a.is_identity() && b.is_identity() => {}
        Ok(_) => return Check::fail(NAME, "product with the inverse is not the identity"),
        Err(e) => return Check::fail(NAME, e.to_string()),
    }
    match invert_unitriangular(kostka, TableKind::InverseKostka) {
        Ok(direct) => match first_table_diff(&direct, inverse) {
            None => Check::pass(NAME, "two-sided identity; matches back-substitution"),
            Some(d) => Check::fail(NAME, d),
        },
        Err(e) => Check::fail(NAME, e.to_string()),
    }
}

/// Kostka table times the characters gives back the compound characters.
pub fn verify_reconstruction(kostka: &IntegerTable, characters: &IntegerTable, phi: &IntegerTable) -> Check {
    const NAME: &str = "reconstruction";
    match kostka.mul(characters, TableKind::Frobenius) {
        Ok(rebuilt) => match first_table_diff(phi, &rebuilt) {
            None => Check::pass(NAME, "kostka x characters = frobenius"),
            Some(d) => Check::fail(NAME, d),
        },
        Err(e) => Check::fail(NAME, e.to_string()),
    }
}

/// The last Kostka row equals the identity-class column of the characters,
/// and those degrees square-sum to `n!`.
pub fn verify_degrees(kostka: &IntegerTable, characters: &IntegerTable, ctx: &SymmetricGroupContext) -> Check {
    const NAME: &str = "degrees";
    let k = ctx.k();
    let last_row = kostka.row(k - 1).to_vec();
    let degrees = characters.column(k - 1);
    if last_row != degrees {
        let show = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        return Check::fail(NAME, format!("last kostka row [{}] vs degrees [{}]", show(&last_row), show(&degrees)));
    }
    let sum: BigInt = degrees.iter().map(|d| d * d).sum();
    if sum != BigInt::from(ctx.group_order().clone()) {
        return Check::fail(NAME, format!("sum of squared degrees {sum} != {}", ctx.group_order()));
    }
    Check::pass(NAME, format!("sum of squared degrees = {}", ctx.group_order()))
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest `n` for the raw monomial identity.
    pub raw_check_max_n: usize,
    /// Largest `n` for the monomial route in the cross-method check.
    pub monomial_max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { raw_check_max_n: DEFAULT_RAW_CHECK_MAX_N, monomial_max_n: DEFAULT_MONOMIAL_MAX_N }
    }
}

/// Runs every check that applies to `n` against the given compound-character
/// table. Checks whose size cap is exceeded are left out.
pub fn full_report(ctx: &SymmetricGroupContext, phi: &IntegerTable, opts: VerifyOptions) -> VerificationReport {
    let mut checks = Vec::new();
    match frobenius_table(ctx) {
        Ok(fresh) => checks.push(match first_table_diff(&fresh, phi) {
            None => Check::pass("frobenius-table", "matches the cycle-distribution formula"),
            Some(d) => Check::fail("frobenius-table", d),
        }),
        Err(e) => checks.push(Check::fail("frobenius-table", e.to_string())),
    }
    checks.push(verify_coset_count_consistency(ctx));

    let solved = match triangular_solve(phi, ctx) {
        Ok(s) => {
            checks.push(Check::pass("triangular-solve", "every diagonal coupling is 1"));
            s
        }
        Err(e) => {
            checks.push(Check::fail("triangular-solve", e.to_string()));
            return VerificationReport { checks };
        }
    };
    checks.push(verify_kostka_shape(&solved.kostka));
    checks.push(verify_inverse(&solved.kostka, &solved.inverse_kostka));
    checks.push(verify_orthonormality(&solved.characters, ctx));
    checks.push(verify_reconstruction(&solved.kostka, &solved.characters, phi));
    checks.push(verify_degrees(&solved.kostka, &solved.characters, ctx));
    if ctx.n() <= opts.monomial_max_n {
        checks.push(compare_methods(ctx, &solved, opts.monomial_max_n));
    }
    if ctx.n() <= opts.raw_check_max_n {
        for lam in ctx.partitions() {
            let check = verify_frobenius_identity_with(ctx, &lam.cycle_type(), phi, &solved.characters)
                .unwrap_or_else(|e| Check::fail(&format!("monomial-identity[{lam}]"), e.to_string()));
            checks.push(check);
        }
    }
    VerificationReport { checks }
}
