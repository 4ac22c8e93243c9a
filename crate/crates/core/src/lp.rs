//! Exact rational linear programming.
//!
//! [`lp_minimize`] is a dense two-phase tableau simplex over [`Rational`]
//! using Bland's least-index rule for both the entering and the leaving
//! variable. The rule rules out cycling and makes every answer, including
//! the returned vertex, a deterministic function of the input.
//!
//! [`minimize_slope`] turns the fractional program
//!
//! ```text
//!     inf { c·λ / min_k a_k·λ  :  λ ∈ Z^m_{≥0}, min_k a_k·λ > 0 }
//! ```
//!
//! into the linear program `min c·x  s.t.  a_k·x ≥ 1, x ≥ 0`. The ratio is
//! invariant under `λ ↦ sλ`, so every feasible rational point scales to an
//! integer point with the same ratio and the two infima agree. The infimum is
//! attained at an optimal vertex, which is cleared of denominators to give an
//! integer witness.
//!
//! [`oracle_minimum_over_vertices`] is an independent brute-force check that
//! enumerates basic solutions directly; it shares no code with the simplex.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Rational, Result};

/// `minimize objective·x` subject to `ge_rows·x ≥ ge_rhs`, `eq_rows·x = eq_rhs`
/// and `x ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub ge_rows: Vec<Vec<Rational>>,
    pub ge_rhs: Vec<Rational>,
    pub eq_rows: Vec<Vec<Rational>>,
    pub eq_rhs: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(objective: Vec<Rational>) -> Self {
        Self {
            objective,
            ge_rows: Vec::new(),
            ge_rhs: Vec::new(),
            eq_rows: Vec::new(),
            eq_rhs: Vec::new(),
        }
    }

    /// Adds the constraint `row·x ≥ rhs`.
    pub fn ge(mut self, row: Vec<Rational>, rhs: Rational) -> Self {
        self.ge_rows.push(row);
        self.ge_rhs.push(rhs);
        self
    }

    /// Adds the constraint `row·x = rhs`.
    pub fn eq(mut self, row: Vec<Rational>, rhs: Rational) -> Self {
        self.eq_rows.push(row);
        self.eq_rhs.push(rhs);
        self
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.num_vars();
        if m == 0 {
            return Err(Error::MalformedProgram("no variables".into()));
        }
        if self.ge_rows.len() != self.ge_rhs.len() {
            return Err(Error::MalformedProgram(format!(
                "{} inequality rows but {} right-hand sides",
                self.ge_rows.len(),
                self.ge_rhs.len()
            )));
        }
        if self.eq_rows.len() != self.eq_rhs.len() {
            return Err(Error::MalformedProgram(format!(
                "{} equality rows but {} right-hand sides",
                self.eq_rows.len(),
                self.eq_rhs.len()
            )));
        }
        for (k, row) in self.ge_rows.iter().chain(&self.eq_rows).enumerate() {
            if row.len() != m {
                return Err(Error::MalformedProgram(format!(
                    "row {k} has length {} but the objective has length {m}",
                    row.len()
                )));
            }
        }
        Ok(())
    }

    pub fn objective_at(&self, x: &[Rational]) -> Rational {
        dot(&self.objective, x)
    }

    /// Exact feasibility test of a point, including `x ≥ 0`.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars()
            && x.iter().all(|v| !v.is_negative())
            && self
                .ge_rows
                .iter()
                .zip(&self.ge_rhs)
                .all(|(row, b)| dot(row, x) >= *b)
            && self
                .eq_rows
                .iter()
                .zip(&self.eq_rhs)
                .all(|(row, b)| dot(row, x) == *b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// `vertex` is a basic feasible solution with `objective·vertex = value`.
    Optimal {
        value: Rational,
        vertex: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn status(&self) -> LpStatus {
        match self {
            LpOutcome::Optimal { .. } => LpStatus::Optimal,
            LpOutcome::Infeasible => LpStatus::Infeasible,
            LpOutcome::Unbounded => LpStatus::Unbounded,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn vertex(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { vertex, .. } => Some(vertex),
            _ => None,
        }
    }
}

/// A rational value or `+∞`. `Infinite` orders above every finite value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlopeValue {
    Finite(Rational),
    Infinite,
}

impl SlopeValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, SlopeValue::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            SlopeValue::Finite(v) => Some(v),
            SlopeValue::Infinite => None,
        }
    }

    /// `1/value`, with `1/∞ = 0`. `None` for a zero value.
    pub fn recip(&self) -> Option<Rational> {
        match self {
            SlopeValue::Finite(v) if v.is_zero() => None,
            SlopeValue::Finite(v) => Some(v.recip()),
            SlopeValue::Infinite => Some(Rational::zero()),
        }
    }
}

impl From<Rational> for SlopeValue {
    fn from(v: Rational) -> Self {
        SlopeValue::Finite(v)
    }
}

impl fmt::Display for SlopeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeValue::Finite(v) => write!(f, "{v}"),
            SlopeValue::Infinite => f.write_str("inf"),
        }
    }
}

/// Infimum of a fractional program together with an integer minimiser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeResult {
    pub value: SlopeValue,
    /// Nonnegative integer weights attaining `value`; `None` iff the value is
    /// infinite.
    pub witness: Option<Vec<u64>>,
}

/// Minimises `prob` exactly.
pub fn lp_minimize(prob: &LinearProgram) -> Result<LpOutcome> {
    prob.validate()?;
    Ok(Simplex::solve(prob))
}

/// Phase one of the simplex: decides whether `ge_rows·x ≥ ge_rhs`,
/// `eq_rows·x = eq_rhs`, `x ≥ 0` has a solution, returning one if so.
pub fn lp_feasible(
    ge_rows: &[Vec<Rational>],
    ge_rhs: &[Rational],
    eq_rows: &[Vec<Rational>],
    eq_rhs: &[Rational],
) -> Result<Option<Vec<Rational>>> {
    let m = ge_rows
        .first()
        .or(eq_rows.first())
        .map(Vec::len)
        .ok_or_else(|| Error::MalformedProgram("no constraints".into()))?;
    let prob = LinearProgram {
        objective: vec![Rational::zero(); m],
        ge_rows: ge_rows.to_vec(),
        ge_rhs: ge_rhs.to_vec(),
        eq_rows: eq_rows.to_vec(),
        eq_rhs: eq_rhs.to_vec(),
    };
    match lp_minimize(&prob)? {
        LpOutcome::Optimal { vertex, .. } => Ok(Some(vertex)),
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => unreachable!("zero objective is bounded"),
    }
}

/// `c·λ / min_k a_k·λ`, or `+∞` when the denominator vanishes.
pub fn fractional_slope(cost: &[Rational], rows: &[Vec<u64>], weights: &[u64]) -> SlopeValue {
    let den = rows
        .iter()
        .map(|row| row.iter().zip(weights).map(|(a, l)| a * l).sum::<u64>())
        .min()
        .unwrap_or(0);
    if den == 0 {
        return SlopeValue::Infinite;
    }
    let num: Rational = cost
        .iter()
        .zip(weights)
        .map(|(c, l)| c * Rational::from_integer(BigInt::from(*l)))
        .sum();
    SlopeValue::Finite(num / Rational::from_integer(BigInt::from(den)))
}

/// Infimum over nonzero `λ ∈ Z^m_{≥0}` with `min_k a_k·λ > 0` of
/// `c·λ / min_k a_k·λ`.
///
/// Returns `+∞` (and no witness) when some row is zero, since then the
/// denominator vanishes for every `λ`.
pub fn minimize_slope(cost: &[Rational], rows: &[Vec<u64>]) -> Result<SlopeResult> {
    if rows.is_empty() {
        return Err(Error::EmptyRows);
    }
    let m = cost.len();
    if m == 0 {
        return Err(Error::MalformedProgram("no variables".into()));
    }
    if let Some(row) = rows.iter().find(|r| r.len() != m) {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: row.len(),
        });
    }
    if cost.iter().any(|c| !c.is_positive()) {
        return Err(Error::NonPositiveCost);
    }
    if rows.iter().any(|r| r.iter().all(|&a| a == 0)) {
        return Ok(SlopeResult {
            value: SlopeValue::Infinite,
            witness: None,
        });
    }

    let mut prob = LinearProgram::new(cost.to_vec());
    for row in rows {
        prob = prob.ge(row.iter().map(|&a| Rational::from_integer(a.into())).collect(), Rational::one());
    }
    let (value, vertex) = match lp_minimize(&prob)? {
        LpOutcome::Optimal { value, vertex } => (value, vertex),
        // every row is nonzero, so a large multiple of (1,…,1) is feasible,
        // and c > 0 on x ≥ 0 bounds the objective below
        other => unreachable!("slope program cannot be {:?}", other.status()),
    };

    let scale = vertex
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let witness = vertex
        .iter()
        .map(|v| (v.numer() * (&scale / v.denom())).to_u64().ok_or(Error::WitnessOverflow))
        .collect::<Result<Vec<u64>>>()?;
    debug_assert_eq!(
        fractional_slope(cost, rows, &witness),
        SlopeValue::Finite(value.clone())
    );
    Ok(SlopeResult {
        value: SlopeValue::Finite(value),
        witness: Some(witness),
    })
}

/// Default cap on the number of candidate bases the oracle will enumerate.
pub const DEFAULT_ORACLE_BOUND: u128 = 250_000;

/// Brute-force minimum over all basic feasible solutions, with the default
/// enumeration bound.
///
/// `None` means no basic feasible solution exists (the program is
/// infeasible). The program must be bounded below; redundant equality rows
/// are reduced away first.
pub fn oracle_minimum_over_vertices(prob: &LinearProgram) -> Result<Option<Rational>> {
    oracle_minimum_with_bound(prob, DEFAULT_ORACLE_BOUND)
}

pub fn oracle_minimum_with_bound(prob: &LinearProgram, bound: u128) -> Result<Option<Rational>> {
    prob.validate()?;
    let m = prob.num_vars();
    let Some((eq_rows, eq_rhs)) = independent_rows(&prob.eq_rows, &prob.eq_rhs) else {
        return Ok(None);
    };
    let e = eq_rows.len();

    // inequality hyperplanes: the ≥ rows followed by x_j = 0
    let mut planes: Vec<(Vec<Rational>, Rational)> = prob
        .ge_rows
        .iter()
        .cloned()
        .zip(prob.ge_rhs.iter().cloned())
        .collect();
    for j in 0..m {
        let mut unit = vec![Rational::zero(); m];
        unit[j] = Rational::one();
        planes.push((unit, Rational::zero()));
    }

    let pick = m - e;
    let candidates = binomial(planes.len() as u128, pick as u128);
    if candidates > bound {
        return Err(Error::OracleBudget { candidates, bound });
    }

    let mut best: Option<Rational> = None;
    let mut subset: Vec<usize> = (0..pick).collect();
    loop {
        if pick <= planes.len() {
            let mut a: Vec<Vec<Rational>> = eq_rows.clone();
            let mut b: Vec<Rational> = eq_rhs.clone();
            for &k in &subset {
                a.push(planes[k].0.clone());
                b.push(planes[k].1.clone());
            }
            if let Some(x) = solve_square(a, b) {
                if prob.is_feasible(&x) {
                    let v = prob.objective_at(&x);
                    if best.as_ref().is_none_or(|b| v < *b) {
                        best = Some(v);
                    }
                }
            }
        }
        if !next_combination(&mut subset, planes.len()) {
            break;
        }
    }
    Ok(best)
}

/// Row-echelon reduction of `rows · x = rhs` to linearly independent rows;
/// `None` if the system is inconsistent.
fn independent_rows(rows: &[Vec<Rational>], rhs: &[Rational]) -> Option<(Vec<Vec<Rational>>, Vec<Rational>)> {
    let mut a = rows.to_vec();
    let mut b = rhs.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        b.swap(rank, p);
        for r in rank + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[rank][col];
            for c in col..cols {
                let delta = &factor * &a[rank][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[rank];
            b[r] -= delta;
        }
        rank += 1;
    }
    if b[rank..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    a.truncate(rank);
    b.truncate(rank);
    Some((a, b))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Advances `idx` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Gauss-Jordan elimination on a square system; `None` if singular.
fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dense tableau. Each row stores its coefficients followed by the
/// right-hand side; `obj` holds reduced costs followed by minus the current
/// objective value.
struct Simplex {
    rows: Vec<Vec<Rational>>,
    obj: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

struct Unbounded;

impl Simplex {
    fn solve(prob: &LinearProgram) -> LpOutcome {
        let n = prob.num_vars();
        let g = prob.ge_rows.len();
        let m = g + prob.eq_rows.len();
        // columns: x (n), surplus per ≥ row (g), artificial per row (m)
        let art0 = n + g;
        let ncols = art0 + m;

        let mut rows = Vec::with_capacity(m);
        let constraints = prob
            .ge_rows
            .iter()
            .zip(&prob.ge_rhs)
            .chain(prob.eq_rows.iter().zip(&prob.eq_rhs))
            .enumerate();
        for (i, (a, b)) in constraints {
            let mut row = vec![Rational::zero(); ncols + 1];
            row[..n].clone_from_slice(a);
            if i < g {
                row[n + i] = -Rational::one();
            }
            row[ncols] = b.clone();
            if b.is_negative() {
                for v in row.iter_mut() {
                    *v = -&*v;
                }
            }
            row[art0 + i] = Rational::one();
            rows.push(row);
        }

        let mut obj = vec![Rational::zero(); ncols + 1];
        for row in &rows {
            for (j, v) in row.iter().enumerate() {
                if j < art0 || j == ncols {
                    obj[j] -= v;
                }
            }
        }
        let mut tab = Simplex {
            rows,
            obj,
            basis: (art0..ncols).collect(),
            ncols,
        };

        if tab.run(ncols).is_err() {
            unreachable!("phase one is bounded below by zero");
        }
        if !tab.obj[ncols].is_zero() {
            return LpOutcome::Infeasible;
        }
        tab.drop_artificials(art0);

        // phase two objective in reduced form
        let width = tab.ncols;
        let mut obj = vec![Rational::zero(); width + 1];
        obj[..n].clone_from_slice(&prob.objective);
        for (row, &b) in tab.rows.iter().zip(&tab.basis) {
            let cb = if b < n {
                prob.objective[b].clone()
            } else {
                continue;
            };
            if cb.is_zero() {
                continue;
            }
            for (o, v) in obj.iter_mut().zip(row) {
                *o -= &cb * v;
            }
        }
        tab.obj = obj;
        if tab.run(width).is_err() {
            return LpOutcome::Unbounded;
        }

        let mut vertex = vec![Rational::zero(); n];
        for (row, &b) in tab.rows.iter().zip(&tab.basis) {
            if b < n {
                vertex[b] = row[width].clone();
            }
        }
        let value = -tab.obj[width].clone();
        debug_assert!(prob.is_feasible(&vertex));
        debug_assert_eq!(prob.objective_at(&vertex), value);
        LpOutcome::Optimal { value, vertex }
    }

    /// Bland's rule iterations over columns `0..allowed`.
    fn run(&mut self, allowed: usize) -> std::result::Result<(), Unbounded> {
        let rhs = self.ncols;
        loop {
            let Some(col) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[col];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return Err(Unbounded);
            };
            self.pivot(row, col);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.basis[r] = c;
    }

    /// After a zero-value phase one: pivots every artificial out of the basis
    /// (dropping rows that are linear combinations of others) and deletes the
    /// artificial columns.
    fn drop_artificials(&mut self, art0: usize) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < art0 {
                i += 1;
                continue;
            }
            match (0..art0).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => {
                    self.pivot(i, j);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
        let rhs = self.ncols;
        for row in self.rows.iter_mut() {
            let b = row[rhs].clone();
            row.truncate(art0);
            row.push(b);
        }
        self.ncols = art0;
    }
}
