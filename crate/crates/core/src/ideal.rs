//! Ideals at the origin: weighted orders, T-stable rank, linear changes of
//! local parameters and log canonical thresholds of monomial ideals.
//!
//! For a system of local parameters `T = {x_1, …, x_n}` at the origin and
//! `λ ∈ Z^n_{≥0}`, the valuation of a polynomial is the least weighted degree
//! `⟨u, λ⟩` of its terms, and the order of an ideal is the least valuation of
//! its generators. Over a field of characteristic zero the lowest-weight
//! parts of distinct terms never cancel under a diagonal weighting, so the
//! order only sees the union of the generators' term supports and
//!
//! ```text
//!     rk^T(a) = inf_λ Σ_i λ_i / ord_λ(a)
//! ```
//!
//! is a fractional program over those exponent vectors. Generators are
//! polynomials; power series are not represented.
//!
//! For a monomial ideal the rank coincides with the log canonical threshold,
//! the largest `ν` with `(1,…,1) ∈ ν·P(a)` for the Newton polyhedron
//! `P(a) = conv(exponents) + R^n_{≥0}`. [`lct_monomial`] returns the rank;
//! [`newton_membership`] and [`newton_threshold`] decide the polyhedral side
//! with separate linear programs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lp::{lp_feasible, lp_minimize, minimize_slope, LinearProgram, LpOutcome, SlopeResult, SlopeValue};
use crate::{Error, Rational, Result};

/// Polynomial with exact rational coefficients; no zero coefficient is ever
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SparsePolynomial {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; vars], c)
    }

    pub fn monomial(exponent: Vec<u32>, coeff: Rational) -> Self {
        let vars = exponent.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        Self { vars, terms }
    }

    /// The coordinate function `x_i` (0-based `i`).
    pub fn variable(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    /// Sums coefficients of repeated exponents and drops zeros.
    pub fn from_terms<I>(vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut out = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars {
                return Err(Error::DimensionMismatch {
                    expected: vars,
                    found: e.len(),
                });
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.keys().any(|e| e.iter().all(|&x| x == 0))
    }

    pub fn pow(&self, r: u32) -> Self {
        let mut acc = Self::constant(self.vars, Rational::one());
        for _ in 0..r {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }
}

impl std::ops::Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.vars, rhs.vars, "adding polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.vars, rhs.vars, "multiplying polynomials in different rings");
        let mut out = SparsePolynomial::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| match p {
                    1 => format!("x{}", i + 1),
                    _ => format!("x{}^{p}", i + 1),
                })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Least weighted degree `⟨u, λ⟩` over the terms of `f`; `None` encodes `+∞`
/// for the zero polynomial.
pub fn weighted_order(f: &SparsePolynomial, lambda: &[u64]) -> Result<Option<u64>> {
    if lambda.len() != f.vars {
        return Err(Error::DimensionMismatch {
            expected: f.vars,
            found: lambda.len(),
        });
    }
    Ok(f.terms.keys().map(|e| pairing(e, lambda)).min())
}

fn pairing(e: &[u32], lambda: &[u64]) -> u64 {
    e.iter().zip(lambda).map(|(&a, &l)| a as u64 * l).sum()
}

/// Operations shared by polynomial and monomial ideals.
pub trait Ideal: Sized {
    fn vars(&self) -> usize;

    /// Exponent vectors whose least weighted degree is the order of the
    /// ideal: the union of the generators' term supports, without repeats.
    fn order_rows(&self) -> Vec<Vec<u32>>;

    fn power(&self, r: u32) -> Result<Self>;

    fn product(&self, other: &Self) -> Result<Self>;
}

/// Polynomial ideal `(f_1, …, f_r)` with at least one nonzero generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyIdeal {
    vars: usize,
    generators: Vec<SparsePolynomial>,
}

impl PolyIdeal {
    /// Drops zero and repeated generators, keeping first occurrences in order.
    pub fn new(vars: usize, generators: Vec<SparsePolynomial>) -> Result<Self> {
        let mut gens: Vec<SparsePolynomial> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.vars != vars {
                return Err(Error::DimensionMismatch {
                    expected: vars,
                    found: g.vars,
                });
            }
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        Ok(Self {
            vars,
            generators: gens,
        })
    }

    pub fn principal(f: SparsePolynomial) -> Result<Self> {
        Self::new(f.vars, vec![f])
    }

    pub fn generators(&self) -> &[SparsePolynomial] {
        &self.generators
    }

    /// Rewrites every generator in new local parameters.
    pub fn apply_change(&self, change: &LinearChange) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| apply_linear_change(g, change))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.vars, gens)
    }
}

impl Ideal for PolyIdeal {
    fn vars(&self) -> usize {
        self.vars
    }

    fn order_rows(&self) -> Vec<Vec<u32>> {
        let rows: BTreeSet<Vec<u32>> = self
            .generators
            .iter()
            .flat_map(|g| g.terms.keys().cloned())
            .collect();
        rows.into_iter().collect()
    }

    fn power(&self, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("power must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..r {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    fn product(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: other.vars,
            });
        }
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a * b))
            .collect();
        Self::new(self.vars, gens)
    }
}

/// Monomial ideal given by exponent vectors, kept minimal under
/// divisibility.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: usize,
    generators: BTreeSet<Vec<u32>>,
}

impl MonomialIdeal {
    pub fn new<I>(vars: usize, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut all = BTreeSet::new();
        for g in generators {
            if g.len() != vars {
                return Err(Error::DimensionMismatch {
                    expected: vars,
                    found: g.len(),
                });
            }
            all.insert(g);
        }
        if all.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let minimal = all
            .iter()
            .filter(|g| !all.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        Ok(Self {
            vars,
            generators: minimal,
        })
    }

    /// `(x_1^{u_1}, …, x_n^{u_n})`.
    pub fn diagonal(exponents: &[u32]) -> Result<Self> {
        let n = exponents.len();
        Self::new(
            n,
            exponents.iter().enumerate().map(|(i, &u)| {
                let mut e = vec![0; n];
                e[i] = u;
                e
            }),
        )
    }

    pub fn generators(&self) -> &BTreeSet<Vec<u32>> {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.iter().all(|&e| e == 0))
    }

    /// `x^m ∈ a`.
    pub fn contains_monomial(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.vars == other.vars && self.generators.iter().all(|g| other.contains_monomial(g))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: other.vars,
            });
        }
        Self::new(
            self.vars,
            self.generators.iter().chain(&other.generators).cloned(),
        )
    }

    pub fn to_poly_ideal(&self) -> PolyIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| SparsePolynomial::monomial(g.clone(), Rational::one()))
            .collect();
        PolyIdeal::new(self.vars, gens).expect("monomial generators are nonzero")
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl Ideal for MonomialIdeal {
    fn vars(&self) -> usize {
        self.vars
    }

    fn order_rows(&self) -> Vec<Vec<u32>> {
        self.generators.iter().cloned().collect()
    }

    fn power(&self, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("power must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..r {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    fn product(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: other.vars,
            });
        }
        Self::new(
            self.vars,
            self.generators.iter().flat_map(|a| {
                other
                    .generators
                    .iter()
                    .map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect())
            }),
        )
    }
}

/// `ord_λ(a)`: least weighted degree over the generators.
pub fn ideal_order<I: Ideal>(ideal: &I, lambda: &[u64]) -> Result<u64> {
    if lambda.len() != ideal.vars() {
        return Err(Error::DimensionMismatch {
            expected: ideal.vars(),
            found: lambda.len(),
        });
    }
    Ok(ideal
        .order_rows()
        .iter()
        .map(|e| pairing(e, lambda))
        .min()
        .expect("ideal is nonzero"))
}

/// `rk^T(a)` at the origin for the standard local parameters.
///
/// Infinite when a generator has a nonzero constant term: the origin is then
/// not on `V(a)`.
pub fn t_stable_rank<I: Ideal>(ideal: &I) -> Result<SlopeResult> {
    let rows: Vec<Vec<u64>> = ideal
        .order_rows()
        .iter()
        .map(|e| e.iter().map(|&x| x as u64).collect())
        .collect();
    minimize_slope(&vec![Rational::one(); ideal.vars()], &rows)
}

pub fn ideal_power<I: Ideal>(ideal: &I, r: u32) -> Result<I> {
    ideal.power(r)
}

pub fn ideal_product<I: Ideal>(a: &I, b: &I) -> Result<I> {
    a.product(b)
}

/// An element of `GL(n, Q)` acting on local parameters.
///
/// Applying the change substitutes `x_i ↦ Σ_j M[j][i]·y_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearChange {
    matrix: Vec<Vec<Rational>>,
}

impl LinearChange {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty matrix".into()));
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        let change = Self { matrix };
        if change.determinant().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(change)
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Self { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn determinant(&self) -> Rational {
        let n = self.dim();
        let mut a = self.matrix.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            det *= &a[col][col];
            for r in col + 1..n {
                let f = &a[r][col] / &a[col][col];
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Self {
        let n = self.dim();
        let mut a = self.matrix.clone();
        let mut inv = Self::identity(n).matrix;
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .expect("matrix is invertible");
            a.swap(p, col);
            inv.swap(p, col);
            let piv = a[col][col].recip();
            for c in 0..n {
                a[col][c] *= &piv;
                inv[col][c] *= &piv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                    let t = &f * &inv[col][c];
                    inv[r][c] -= t;
                }
            }
        }
        Self { matrix: inv }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let n = self.dim();
        if other.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: other.dim(),
            });
        }
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.matrix[i][k] * &other.matrix[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(Self { matrix })
    }
}

/// Substitutes `x_i ↦ Σ_j M[j][i]·y_j` and expands exactly, so that
/// `apply(f, M·N) = apply(apply(f, N), M)`.
pub fn apply_linear_change(f: &SparsePolynomial, change: &LinearChange) -> Result<SparsePolynomial> {
    let n = f.vars;
    if change.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: change.dim(),
        });
    }
    let images: Vec<SparsePolynomial> = (0..n)
        .map(|i| {
            let terms = (0..n).map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                (e, change.matrix[j][i].clone())
            });
            SparsePolynomial::from_terms(n, terms).expect("lengths match")
        })
        .collect();
    let mut powers: BTreeMap<(usize, u32), SparsePolynomial> = BTreeMap::new();
    let mut out = SparsePolynomial::zero(n);
    for (e, c) in &f.terms {
        let mut term = SparsePolynomial::constant(n, c.clone());
        for (i, &p) in e.iter().enumerate() {
            if p == 0 {
                continue;
            }
            let image = powers
                .entry((i, p))
                .or_insert_with(|| images[i].pow(p));
            term = &term * image;
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Log canonical threshold at the origin of a proper monomial ideal.
pub fn lct_monomial(ideal: &MonomialIdeal) -> Result<Rational> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let rank = t_stable_rank(ideal)?;
    let value = rank
        .value
        .finite()
        .cloned()
        .expect("proper monomial ideals have finite rank");
    debug_assert_eq!(newton_threshold(ideal)?, SlopeValue::Finite(value.clone()));
    Ok(value)
}

/// Whether `(1,…,1) ∈ ν·P(a)`, i.e. whether some convex combination of the
/// generators lies coordinatewise below `(1/ν, …, 1/ν)`.
pub fn newton_membership(ideal: &MonomialIdeal, nu: &Rational) -> Result<bool> {
    if !nu.is_positive() {
        return Err(Error::InvalidArgument("nu must be positive".into()));
    }
    let gens: Vec<&Vec<u32>> = ideal.generators.iter().collect();
    let bound = -nu.recip();
    let ge_rows: Vec<Vec<Rational>> = (0..ideal.vars)
        .map(|j| gens.iter().map(|g| -Rational::from_integer(BigInt::from(g[j]))).collect())
        .collect();
    let ge_rhs = vec![bound; ideal.vars];
    let eq_rows = vec![vec![Rational::one(); gens.len()]];
    let eq_rhs = vec![Rational::one()];
    Ok(lp_feasible(&ge_rows, &ge_rhs, &eq_rows, &eq_rhs)?.is_some())
}

/// Largest `ν` accepted by [`newton_membership`], computed as `1/t*` with
/// `t* = min { t : Σθ_i l_i ≤ t·(1,…,1), Σθ_i = 1, θ ≥ 0 }`.
pub fn newton_threshold(ideal: &MonomialIdeal) -> Result<SlopeValue> {
    let gens: Vec<&Vec<u32>> = ideal.generators.iter().collect();
    let k = gens.len();
    let mut objective = vec![Rational::zero(); k + 1];
    objective[k] = Rational::one();
    let mut prob = LinearProgram::new(objective);
    for j in 0..ideal.vars {
        let mut row: Vec<Rational> = gens
            .iter()
            .map(|g| -Rational::from_integer(BigInt::from(g[j])))
            .collect();
        row.push(Rational::one());
        prob = prob.ge(row, Rational::zero());
    }
    let mut simplex_row = vec![Rational::one(); k];
    simplex_row.push(Rational::zero());
    prob = prob.eq(simplex_row, Rational::one());
    match lp_minimize(&prob)? {
        LpOutcome::Optimal { value, .. } if value.is_zero() => Ok(SlopeValue::Infinite),
        LpOutcome::Optimal { value, .. } => Ok(SlopeValue::Finite(value.recip())),
        other => unreachable!("threshold program cannot be {:?}", other.status()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn poly(vars: usize, terms: &[(i64, i64, &[u32])]) -> SparsePolynomial {
        SparsePolynomial::from_terms(vars, terms.iter().map(|(p, q, e)| (e.to_vec(), rat(*p, *q)))).unwrap()
    }

    fn square_of_sum() -> SparsePolynomial {
        poly(2, &[(1, 1, &[2, 0]), (2, 1, &[1, 1]), (1, 1, &[0, 2])])
    }

    fn finite(r: &SlopeResult) -> Rational {
        r.value.finite().cloned().unwrap()
    }

    #[test]
    fn weighted_order_examples() {
        assert_eq!(weighted_order(&square_of_sum(), &[1, 1]).unwrap(), Some(2));
        assert_eq!(weighted_order(&SparsePolynomial::zero(2), &[1, 1]).unwrap(), None);
        let f = poly(2, &[(1, 1, &[1, 0]), (1, 1, &[0, 2])]);
        assert_eq!(weighted_order(&f, &[3, 1]).unwrap(), Some(2));
        assert!(weighted_order(&f, &[1]).is_err());
    }

    #[test]
    fn ideal_order_examples() {
        let a = MonomialIdeal::new(3, [vec![2, 1, 0], vec![0, 2, 1], vec![1, 0, 2]]).unwrap();
        assert_eq!(ideal_order(&a, &[1, 1, 1]).unwrap(), 3);
        assert_eq!(ideal_order(&a, &[0, 0, 0]).unwrap(), 0);
        let f = PolyIdeal::principal(square_of_sum()).unwrap();
        assert_eq!(ideal_order(&f, &[2, 0]).unwrap(), 0);
    }

    #[test]
    fn zero_ideal_is_rejected() {
        assert_eq!(
            PolyIdeal::new(2, vec![SparsePolynomial::zero(2)]),
            Err(Error::ZeroIdeal)
        );
        assert_eq!(MonomialIdeal::new(2, Vec::<Vec<u32>>::new()), Err(Error::ZeroIdeal));
    }

    #[test]
    fn rank_examples() {
        let f = PolyIdeal::principal(square_of_sum()).unwrap();
        assert_eq!(finite(&t_stable_rank(&f).unwrap()), rat(1, 1));
        let g = PolyIdeal::principal(poly(2, &[(1, 1, &[1, 0]), (1, 1, &[0, 2])])).unwrap();
        assert_eq!(finite(&t_stable_rank(&g).unwrap()), rat(3, 2));
        let a = MonomialIdeal::new(3, [vec![2, 1, 0], vec![0, 2, 1], vec![1, 0, 2]]).unwrap();
        assert_eq!(finite(&t_stable_rank(&a).unwrap()), rat(1, 1));
    }

    #[test]
    fn constant_term_gives_infinite_rank() {
        let f = PolyIdeal::principal(poly(2, &[(1, 1, &[0, 0]), (1, 1, &[1, 0])])).unwrap();
        assert_eq!(t_stable_rank(&f).unwrap().value, SlopeValue::Infinite);
        let unit = MonomialIdeal::new(2, [vec![0, 0], vec![1, 0]]).unwrap();
        assert_eq!(t_stable_rank(&unit).unwrap().value, SlopeValue::Infinite);
        assert_eq!(lct_monomial(&unit), Err(Error::UnitIdeal));
    }

    #[test]
    fn linear_change_examples() {
        // x = (u+v)/2, y = (u-v)/2 turns (x+y)^2 into u^2
        let m = LinearChange::new(vec![vec![rat(1, 2), rat(1, 2)], vec![rat(1, 2), rat(-1, 2)]]).unwrap();
        let g = apply_linear_change(&square_of_sum(), &m).unwrap();
        assert_eq!(g, poly(2, &[(1, 1, &[2, 0])]));
        let rank = t_stable_rank(&PolyIdeal::principal(g).unwrap()).unwrap();
        assert_eq!(finite(&rank), rat(1, 2));

        let f = square_of_sum();
        assert_eq!(apply_linear_change(&f, &LinearChange::identity(2)).unwrap(), f);

        let x = SparsePolynomial::variable(2, 0);
        let d = LinearChange::new(vec![vec![rat(2, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]]).unwrap();
        let two_x = apply_linear_change(&x, &d).unwrap();
        assert_eq!(two_x, poly(2, &[(2, 1, &[1, 0])]));
        assert_eq!(finite(&t_stable_rank(&PolyIdeal::principal(two_x).unwrap()).unwrap()), rat(1, 1));
    }

    #[test]
    fn singular_change_is_rejected() {
        let m = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        assert_eq!(LinearChange::new(m), Err(Error::SingularMatrix));
        assert!(LinearChange::new(vec![vec![rat(1, 1)], vec![rat(1, 1)]]).is_err());
    }

    #[test]
    fn inverse_and_composition() {
        let m = LinearChange::new(vec![
            vec![rat(1, 1), rat(2, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 3), rat(1, 1)],
            vec![rat(-1, 1), rat(0, 1), rat(5, 2)],
        ])
        .unwrap();
        assert_eq!(m.compose(&m.inverse()).unwrap(), LinearChange::identity(3));
        let f = poly(3, &[(1, 1, &[2, 1, 0]), (-3, 4, &[0, 0, 3]), (1, 1, &[1, 0, 0])]);
        let back = apply_linear_change(&apply_linear_change(&f, &m).unwrap(), &m.inverse()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn lct_examples() {
        assert_eq!(lct_monomial(&MonomialIdeal::diagonal(&[3, 4]).unwrap()).unwrap(), rat(7, 12));
        assert_eq!(lct_monomial(&MonomialIdeal::new(1, [vec![1]]).unwrap()).unwrap(), rat(1, 1));
        let a = MonomialIdeal::new(3, [vec![2, 1, 0], vec![0, 2, 1], vec![1, 0, 2]]).unwrap();
        assert_eq!(lct_monomial(&a).unwrap(), rat(1, 1));
    }

    #[test]
    fn newton_membership_examples() {
        let a = MonomialIdeal::diagonal(&[2, 2]).unwrap();
        assert!(newton_membership(&a, &rat(1, 1)).unwrap());
        assert!(!newton_membership(&a, &rat(2, 1)).unwrap());
        assert!(newton_membership(&a, &rat(1, 2)).unwrap());
        assert!(newton_membership(&a, &rat(0, 1)).is_err());
        assert!(newton_membership(&a, &rat(-1, 1)).is_err());
        assert_eq!(newton_threshold(&a).unwrap(), SlopeValue::Finite(rat(1, 1)));
    }

    #[test]
    fn power_and_product_examples() {
        let m = MonomialIdeal::new(2, [vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            ideal_power(&m, 2).unwrap(),
            MonomialIdeal::new(2, [vec![2, 0], vec![1, 1], vec![0, 2]]).unwrap()
        );
        let x2 = MonomialIdeal::new(1, [vec![2]]).unwrap();
        assert_eq!(ideal_power(&x2, 3).unwrap(), MonomialIdeal::new(1, [vec![6]]).unwrap());
        assert!(ideal_power(&x2, 0).is_err());

        assert_eq!(finite(&t_stable_rank(&m).unwrap()), rat(2, 1));
        assert_eq!(finite(&t_stable_rank(&ideal_power(&m, 2).unwrap()).unwrap()), rat(1, 1));

        let x = MonomialIdeal::new(2, [vec![1, 0]]).unwrap();
        let y = MonomialIdeal::new(2, [vec![0, 1]]).unwrap();
        assert_eq!(ideal_product(&x, &y).unwrap(), MonomialIdeal::new(2, [vec![1, 1]]).unwrap());
        let mx = ideal_product(&m, &x).unwrap();
        assert_eq!(mx, MonomialIdeal::new(2, [vec![2, 0], vec![1, 1]]).unwrap());
        assert_eq!(ideal_order(&mx, &[1, 2]).unwrap(), 2);
        assert_eq!(ideal_order(&m, &[1, 2]).unwrap() + ideal_order(&x, &[1, 2]).unwrap(), 2);
        assert!(ideal_product(&m, &MonomialIdeal::new(1, [vec![1]]).unwrap()).is_err());
    }

    #[test]
    fn poly_power_matches_polynomial_power() {
        let f = PolyIdeal::principal(poly(2, &[(1, 1, &[1, 0]), (1, 1, &[0, 1])])).unwrap();
        let f2 = ideal_power(&f, 2).unwrap();
        assert_eq!(f2.generators(), &[square_of_sum()]);
        assert!(f.power(0).is_err());
    }

    #[test]
    fn normalization_removes_multiples() {
        let a = MonomialIdeal::new(2, [vec![1, 0], vec![2, 3], vec![0, 2], vec![1, 0]]).unwrap();
        assert_eq!(a.generators().len(), 2);
        assert!(a.contains_monomial(&[2, 3]));
        let sq = MonomialIdeal::new(2, [vec![2, 0]]).unwrap();
        let x = MonomialIdeal::new(2, [vec![1, 0]]).unwrap();
        assert!(sq.is_contained_in(&x));
        assert!(!x.is_contained_in(&sq));
    }

    #[test]
    fn display() {
        assert_eq!(square_of_sum().to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(poly(2, &[(-1, 2, &[0, 0]), (1, 1, &[0, 1])]).to_string(), "x2 - 1/2");
        assert_eq!(SparsePolynomial::zero(1).to_string(), "0");
    }
}
