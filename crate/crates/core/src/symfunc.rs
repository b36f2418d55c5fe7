//! Exact sparse polynomials in `n` variables.
//!
//! [`RawPolynomial`] stores every monomial explicitly. [`SymmetricPolynomial`]
//! stores one integer per monomial-symmetric basis element `m_λ`, keyed by the
//! partition `λ`; its raw form is recovered by summing each orbit.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{partitions_bounded, Partition};

/// Rearranges `v` into the next lexicographically greater permutation.
/// Returns false (leaving `v` sorted ascending) once the last one is passed.
/// Repeated values are handled, so each distinct arrangement is visited once.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every distinct rearrangement of `values`, each exactly once.
pub fn distinct_permutations(values: &[usize]) -> Vec<Vec<usize>> {
    let mut v = values.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

/// Size of the orbit of `λ` padded to `n` entries: `n! / prod(mult!)` over
/// the multiplicities of repeated values, zeros included.
pub fn orbit_size(n: usize, lam: &Partition) -> BigUint {
    if lam.len() > n {
        return BigUint::zero();
    }
    let padded = lam.padded(n);
    let mut counts = BTreeMap::new();
    for v in padded {
        *counts.entry(v).or_insert(0usize) += 1;
    }
    let fact = |k: usize| (1..=k).fold(BigUint::one(), |acc, i| acc * i);
    counts.values().fold(fact(n), |acc, &c| acc / fact(c))
}

/// `binomial(n + r - 1, r)`: how many monomials of degree `r` exist in `n`
/// variables.
pub fn monomial_count(n: usize, r: usize) -> BigUint {
    let mut acc = BigUint::one();
    // running product stays an exact binomial at each step
    for i in 1..=r {
        acc = acc * BigUint::from(n + i - 1) / BigUint::from(i);
    }
    acc
}

/// A polynomial with every monomial stored explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl RawPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        RawPolynomial { num_vars, terms: BTreeMap::new() }
    }

    pub fn constant(num_vars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(vec![0; num_vars], c.into());
        p
    }

    /// `coeff * x^exponents`.
    pub fn monomial(exponents: Vec<usize>, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff.into());
        p
    }

    /// The single variable `x_{i+1}` (0-based `i`).
    pub fn variable(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[usize]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exponents: Vec<usize>, c: BigInt) {
        debug_assert_eq!(exponents.len(), self.num_vars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &RawPolynomial) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::invalid(format!(
                "variable count mismatch: {} vs {}",
                self.num_vars, other.num_vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &RawPolynomial) -> Result<RawPolynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> RawPolynomial {
        let mut out = Self::zero(self.num_vars);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn sub(&self, other: &RawPolynomial) -> Result<RawPolynomial> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    /// True if every monomial's coefficient is shared by its whole orbit.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            distinct_permutations(e).iter().all(|perm| self.terms.get(perm) == Some(c))
        })
    }

    /// Collects a symmetric homogeneous raw polynomial back onto the
    /// monomial-symmetric basis.
    pub fn to_symmetric(&self) -> Result<SymmetricPolynomial> {
        let mut degree = None;
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let d: usize = e.iter().sum();
            if *degree.get_or_insert(d) != d {
                return Err(Error::invalid("polynomial is not homogeneous"));
            }
            let key = Partition::from_unsorted(e.iter().copied());
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.insert(key, c.clone());
            }
        }
        if !self.is_symmetric() {
            return Err(Error::invalid("polynomial is not symmetric"));
        }
        Ok(SymmetricPolynomial { num_vars: self.num_vars, degree: degree.unwrap_or(0), coeffs: out })
    }
}

/// Exact distributive product with like terms collected.
pub fn raw_mul(a: &RawPolynomial, b: &RawPolynomial) -> Result<RawPolynomial> {
    a.check_vars(b)?;
    let mut out = RawPolynomial::zero(a.num_vars);
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            out.add_term(e, ca * cb);
        }
    }
    Ok(out)
}

/// `prod_{i<j} (x_i - x_j)`, expanded by repeated multiplication.
pub fn vandermonde(n: usize) -> RawPolynomial {
    let mut acc = RawPolynomial::constant(n, 1);
    for i in 0..n {
        for j in i + 1..n {
            let factor = RawPolynomial::variable(n, i)
                .sub(&RawPolynomial::variable(n, j))
                .expect("same variable count");
            acc = raw_mul(&acc, &factor).expect("same variable count");
        }
    }
    acc
}

fn inversion_parity(v: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] < v[j] {
                odd = !odd;
            }
        }
    }
    odd
}

/// `sum_{P in S_n} sign(P) * P(x^exponents)`. Zero when two exponents
/// coincide.
pub fn alternant(n: usize, exponents: &[usize]) -> Result<RawPolynomial> {
    if exponents.len() != n {
        return Err(Error::invalid(format!(
            "alternant needs {n} exponents, got {}",
            exponents.len()
        )));
    }
    let mut sorted = exponents.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(RawPolynomial::zero(n));
    }
    // sign of an arrangement relative to `exponents` is the parity of its
    // inversions (against descending order) plus those of `exponents`
    let base = inversion_parity(exponents);
    let mut out = RawPolynomial::zero(n);
    for arrangement in distinct_permutations(exponents) {
        let sign = if base ^ inversion_parity(&arrangement) { -1 } else { 1 };
        out.terms.insert(arrangement, BigInt::from(sign));
    }
    Ok(out)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, exponents: &[usize]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in exponents.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for RawPolynomial {
    /// Terms in descending lexicographic order of exponent vectors, e.g.
    /// `x1^2*x2 + 2*x1*x2*x3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let constant = e.iter().all(|&x| x == 0);
            if constant {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

struct JsonTerm<'a> {
    exponents: &'a [usize],
    coeff: &'a BigInt,
}

impl Serialize for JsonTerm<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("exponents", self.exponents)?;
        st.serialize_field("coeff", &self.coeff.to_string())?;
        st.end()
    }
}

impl Serialize for RawPolynomial {
    /// A list of `{"exponents": [...], "coeff": "<decimal>"}` in the same
    /// order as the text form.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms.iter().rev() {
            seq.serialize_element(&JsonTerm { exponents: e, coeff: c })?;
        }
        seq.end()
    }
}

/// A homogeneous symmetric polynomial on the monomial-symmetric basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPolynomial {
    num_vars: usize,
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymmetricPolynomial {
    pub fn zero(num_vars: usize, degree: usize) -> Self {
        SymmetricPolynomial { num_vars, degree, coeffs: BTreeMap::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Partition::empty(), BigInt::one());
        SymmetricPolynomial { num_vars, degree: 0, coeffs }
    }

    /// Builds from `(λ, coefficient)` pairs. All keys must have weight
    /// `degree` and at most `num_vars` parts.
    pub fn from_terms<I>(num_vars: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut out = Self::zero(num_vars, degree);
        for (lam, c) in terms {
            if lam.weight() != degree || lam.len() > num_vars {
                return Err(Error::invalid(format!(
                    "basis key {lam} does not fit degree {degree} in {num_vars} variables"
                )));
            }
            out.add_coeff(lam, c);
        }
        Ok(out)
    }

    fn add_coeff(&mut self, lam: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(lam) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.coeffs.get(&Partition::empty()).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `m_λ` (zero if absent).
    pub fn coefficient(&self, lam: &Partition) -> BigInt {
        self.coeffs.get(lam).cloned().unwrap_or_default()
    }

    /// Nonzero basis coefficients in ascending partition order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    /// Number of monomials in the raw expansion.
    pub fn raw_term_count(&self) -> BigUint {
        self.coeffs.keys().map(|lam| orbit_size(self.num_vars, lam)).sum()
    }

    fn raw_terms(&self) -> Vec<(Vec<usize>, BigInt)> {
        let mut out = Vec::new();
        for (lam, c) in &self.coeffs {
            for e in distinct_permutations(&lam.padded(self.num_vars)) {
                out.push((e, c.clone()));
            }
        }
        out
    }
}

impl fmt::Display for SymmetricPolynomial {
    /// Basis form, e.g. `m[3] + 2*m[2+1]`, leading key first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (idx, (lam, c)) in self.coeffs.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "m[{lam}]")?;
        }
        Ok(())
    }
}

/// The basis element `m_λ` in `n` variables; zero if `λ` has more than `n`
/// parts.
pub fn monomial_symmetric(n: usize, lam: &Partition) -> SymmetricPolynomial {
    let mut out = SymmetricPolynomial::zero(n, lam.weight());
    if lam.len() <= n {
        out.coeffs.insert(lam.clone(), BigInt::one());
    }
    out
}

/// The complete homogeneous polynomial `h_p` in `n` variables, with `h_0 = 1`
/// and `h_p = 0` for negative `p`.
pub fn complete_homogeneous(n: usize, p: i64) -> SymmetricPolynomial {
    if p < 0 {
        return SymmetricPolynomial::zero(n, 0);
    }
    let p = p as usize;
    let mut out = SymmetricPolynomial::zero(n, p);
    for lam in partitions_bounded(p, p, n) {
        out.coeffs.insert(lam, BigInt::one());
    }
    out
}

fn check_same_vars(a: &SymmetricPolynomial, b: &SymmetricPolynomial) -> Result<()> {
    if a.num_vars != b.num_vars {
        return Err(Error::invalid(format!(
            "variable count mismatch: {} vs {}",
            a.num_vars, b.num_vars
        )));
    }
    Ok(())
}

pub fn sym_add(a: &SymmetricPolynomial, b: &SymmetricPolynomial) -> Result<SymmetricPolynomial> {
    check_same_vars(a, b)?;
    if a.is_zero() {
        return Ok(b.clone());
    }
    if b.is_zero() {
        return Ok(a.clone());
    }
    if a.degree != b.degree {
        return Err(Error::invalid(format!(
            "cannot add homogeneous polynomials of degrees {} and {}",
            a.degree, b.degree
        )));
    }
    let mut out = a.clone();
    for (lam, c) in &b.coeffs {
        out.add_coeff(lam.clone(), c.clone());
    }
    Ok(out)
}

pub fn sym_scale(c: &BigInt, a: &SymmetricPolynomial) -> SymmetricPolynomial {
    let mut out = SymmetricPolynomial::zero(a.num_vars, a.degree);
    if c.is_zero() {
        return out;
    }
    for (lam, v) in &a.coeffs {
        out.coeffs.insert(lam.clone(), v * c);
    }
    out
}

/// Exact product of two symmetric polynomials.
///
/// The factor with fewer raw monomials is expanded to its orbit. For each
/// basis key `ν` of the product, the coefficient of the dominant monomial
/// `x^ν` is gathered by pairing every expanded monomial `x^e` with the other
/// factor's coefficient on the orbit of `ν - e`.
pub fn sym_mul(a: &SymmetricPolynomial, b: &SymmetricPolynomial) -> Result<SymmetricPolynomial> {
    check_same_vars(a, b)?;
    let n = a.num_vars;
    let degree = a.degree + b.degree;
    if a.is_zero() || b.is_zero() {
        return Ok(SymmetricPolynomial::zero(n, degree));
    }
    if a.is_one() {
        return Ok(b.clone());
    }
    if b.is_one() {
        return Ok(a.clone());
    }
    let (small, large) = if a.raw_term_count() <= b.raw_term_count() { (a, b) } else { (b, a) };
    let expanded = small.raw_terms();
    let mut out = SymmetricPolynomial::zero(n, degree);
    let mut diff = vec![0usize; n];
    for target in partitions_bounded(degree, degree, n) {
        let nu = target.padded(n);
        let mut acc = BigInt::zero();
        'terms: for (e, c) in &expanded {
            for i in 0..n {
                if e[i] > nu[i] {
                    continue 'terms;
                }
                diff[i] = nu[i] - e[i];
            }
            let key = Partition::from_unsorted(diff.iter().copied());
            if let Some(other) = large.coeffs.get(&key) {
                acc += c * other;
            }
        }
        out.add_coeff(target, acc);
    }
    Ok(out)
}

/// Replaces each basis key by the explicit sum over its orbit.
pub fn expand_to_raw(a: &SymmetricPolynomial) -> RawPolynomial {
    let mut out = RawPolynomial::zero(a.num_vars);
    for (e, c) in a.raw_terms() {
        out.terms.insert(e, c);
    }
    out
}
