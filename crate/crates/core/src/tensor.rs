//! Tensor supports, torus valuations and torus-restricted G-stable ranks.
//!
//! A diagonal 1-parameter subgroup `λ(t) = (diag(t^{λ_1}), …, diag(t^{λ_d}))`
//! of `GL(V)^d` scales the basis tensor `e_{j_1} ⊗ … ⊗ e_{j_d}` by
//! `t^{λ_1[j_1] + … + λ_d[j_d]}`. Distinct basis tensors never interact, so
//! the `t`-valuation of `λ(t)·v` is the minimum of these exponents over the
//! support of `v` and coefficients play no role. Tensors are therefore
//! stored as supports only. Symmetric tensors are identified with forms
//! (characteristic zero) and stored as sets of exponent vectors.
//!
//! [`torus_rank`] infimizes the slope `Σ_i α_i Σ_j λ_i[j] / val(λ(t)·v)` over
//! nonnegative weights of the standard maximal torus only. It is an upper
//! bound on `rk^G_α(v)`; exact for torus-optimal tensors, which includes
//! every tensor whose optimal 1-parameter subgroup is diagonal in the chosen
//! basis.
//!
//! # Semistability and rank `n`
//!
//! With `α = (1,…,1)` the weights `λ_1 = (1,…,1)` and `λ_i = 0` for `i > 1`
//! have slope exactly `n`, so `torus_rank(v) ≤ n`. Equality is equivalent to
//! torus semistability:
//!
//! - If a traceless `λ` (entries of either sign, `Σ_j λ_i[j] = 0` for each
//!   `i`) has `val > 0`, shift factor `i` by `c_i = -min_j λ_i[j] ≥ 0`. The
//!   shifted weights are nonnegative, not all `c_i` vanish, the valuation
//!   grows by `Σ c_i` and the determinant valuation becomes `n Σ c_i`. The
//!   slope `n Σ c_i / (val + Σ c_i)` is below `n`.
//! - Conversely, nonnegative `λ` with slope below `n` gives the traceless
//!   `λ'_i[j] = n λ_i[j] - Σ_k λ_i[k]`, whose valuation is
//!   `n·val(λ) - Σ_{i,k} λ_i[k] > 0`.
//!
//! The same argument with a single weight vector and the factor `d` in the
//! numerator relates [`symm_torus_rank`] and [`is_symm_torus_semistable`].

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lp::{lp_feasible, minimize_slope, SlopeResult};
use crate::{Error, Rational, Result};

/// Support of a tensor in `V^{⊗d}`, `dim V = n`, with 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorSupport {
    order: usize,
    dim: usize,
    tuples: BTreeSet<Vec<usize>>,
}

impl TensorSupport {
    pub fn new<I>(order: usize, dim: usize, tuples: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        if order == 0 || dim == 0 {
            return Err(Error::InvalidSupport("order and dimension must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for t in tuples {
            if t.len() != order {
                return Err(Error::InvalidSupport(format!(
                    "tuple {t:?} has length {} but the order is {order}",
                    t.len()
                )));
            }
            if t.iter().any(|&j| j == 0 || j > dim) {
                return Err(Error::InvalidSupport(format!(
                    "tuple {t:?} has an index outside 1..={dim}"
                )));
            }
            if !set.insert(t.clone()) {
                return Err(Error::InvalidSupport(format!("duplicate tuple {t:?}")));
            }
        }
        if set.is_empty() {
            return Err(Error::InvalidSupport("support is empty".into()));
        }
        Ok(Self {
            order,
            dim,
            tuples: set,
        })
    }

    /// `e_2⊗e_1⊗e_1 + e_1⊗e_2⊗e_1 + e_1⊗e_1⊗e_2`.
    pub fn w_tensor() -> Self {
        Self::new(3, 2, [vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]).unwrap()
    }

    /// `Σ_j e_j ⊗ … ⊗ e_j`.
    pub fn diagonal(order: usize, dim: usize) -> Result<Self> {
        Self::new(order, dim, (1..=dim).map(|j| vec![j; order]))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tuples(&self) -> &BTreeSet<Vec<usize>> {
        &self.tuples
    }

    /// One 0/1 row per tuple over the `order·dim` flattened weights, with a
    /// one at `(i, j_i)` for each factor `i`.
    pub fn lp_rows(&self) -> Vec<Vec<u64>> {
        self.tuples
            .iter()
            .map(|t| {
                let mut row = vec![0u64; self.order * self.dim];
                for (i, &j) in t.iter().enumerate() {
                    row[i * self.dim + j - 1] += 1;
                }
                row
            })
            .collect()
    }

    /// Moves factor `i` to position `perm[i]` in every tuple.
    pub fn permute_factors(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.order)?;
        let tuples = self.tuples.iter().map(|t| {
            let mut out = vec![0; self.order];
            for (i, &j) in t.iter().enumerate() {
                out[perm[i]] = j;
            }
            out
        });
        Self::new(self.order, self.dim, tuples)
    }

    /// Renames basis index `j` (1-based) to `perm[j-1] + 1` in every factor.
    pub fn relabel_basis(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.dim)?;
        let tuples = self
            .tuples
            .iter()
            .map(|t| t.iter().map(|&j| perm[j - 1] + 1).collect());
        Self::new(self.order, self.dim, tuples)
    }
}

fn check_permutation(perm: &[usize], len: usize) -> Result<()> {
    let seen: BTreeSet<usize> = perm.iter().copied().collect();
    if perm.len() != len || seen.len() != len || perm.iter().any(|&p| p >= len) {
        return Err(Error::InvalidArgument(format!(
            "{perm:?} is not a permutation of 0..{len}"
        )));
    }
    Ok(())
}

/// Support of a symmetric tensor in `D^d V`, read as a degree-`d` form in
/// `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricSupport {
    degree: usize,
    vars: usize,
    exponents: BTreeSet<Vec<u32>>,
}

impl SymmetricSupport {
    pub fn new<I>(degree: usize, vars: usize, exponents: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        if degree == 0 || vars == 0 {
            return Err(Error::InvalidSupport("degree and variable count must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for m in exponents {
            if m.len() != vars {
                return Err(Error::InvalidSupport(format!(
                    "exponent vector {m:?} has length {} but there are {vars} variables",
                    m.len()
                )));
            }
            if m.iter().map(|&e| e as usize).sum::<usize>() != degree {
                return Err(Error::InvalidSupport(format!(
                    "exponent vector {m:?} does not sum to {degree}"
                )));
            }
            if !set.insert(m.clone()) {
                return Err(Error::InvalidSupport(format!("duplicate exponent vector {m:?}")));
            }
        }
        if set.is_empty() {
            return Err(Error::InvalidSupport("support is empty".into()));
        }
        Ok(Self {
            degree,
            vars,
            exponents: set,
        })
    }

    /// `x_1^d + … + x_n^d`.
    pub fn fermat(vars: usize, degree: usize) -> Result<Self> {
        Self::new(
            degree,
            vars,
            (0..vars).map(|i| {
                let mut m = vec![0u32; vars];
                m[i] = degree as u32;
                m
            }),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn exponents(&self) -> &BTreeSet<Vec<u32>> {
        &self.exponents
    }

    pub fn lp_rows(&self) -> Vec<Vec<u64>> {
        self.exponents
            .iter()
            .map(|m| m.iter().map(|&e| e as u64).collect())
            .collect()
    }

    /// `t`-valuation of `γ(t)·v` for a single diagonal weight vector `γ`.
    pub fn valuation(&self, gamma: &[u64]) -> Result<u64> {
        if gamma.len() != self.vars {
            return Err(Error::DimensionMismatch {
                expected: self.vars,
                found: gamma.len(),
            });
        }
        Ok(self
            .exponents
            .iter()
            .map(|m| m.iter().zip(gamma).map(|(&e, &g)| e as u64 * g).sum())
            .min()
            .expect("support is nonempty"))
    }
}

/// Nonnegative integer weights `λ_1, …, λ_d ∈ Z^n_{≥0}` of a polynomial
/// 1-parameter subgroup of the diagonal torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightAssignment {
    per_factor: Vec<Vec<u64>>,
}

impl WeightAssignment {
    pub fn new(per_factor: Vec<Vec<u64>>) -> Result<Self> {
        let n = per_factor
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidWeights("no factors".into()))?;
        if per_factor.iter().any(|w| w.len() != n) {
            return Err(Error::InvalidWeights("factors have different lengths".into()));
        }
        Ok(Self { per_factor })
    }

    /// Splits a flat vector of `order·dim` weights factor by factor.
    pub fn from_flat(flat: &[u64], order: usize, dim: usize) -> Result<Self> {
        if flat.len() != order * dim {
            return Err(Error::DimensionMismatch {
                expected: order * dim,
                found: flat.len(),
            });
        }
        Self::new(flat.chunks(dim).map(<[u64]>::to_vec).collect())
    }

    pub fn per_factor(&self) -> &[Vec<u64>] {
        &self.per_factor
    }

    pub fn order(&self) -> usize {
        self.per_factor.len()
    }

    pub fn dim(&self) -> usize {
        self.per_factor[0].len()
    }

    /// `val(det λ_i(t))` summed over factors with weights `α_i`.
    pub fn weighted_det_valuation(&self, alpha: &AlphaWeights) -> Rational {
        self.per_factor
            .iter()
            .zip(alpha.as_slice())
            .map(|(w, a)| a * Rational::from_integer(BigInt::from(w.iter().sum::<u64>())))
            .sum()
    }
}

/// Strictly positive rational weights `α_1, …, α_d` of the slope.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaWeights(Vec<Rational>);

impl AlphaWeights {
    pub fn new(alpha: Vec<Rational>) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::InvalidWeights("alpha is empty".into()));
        }
        if alpha.iter().any(|a| !a.is_positive()) {
            return Err(Error::InvalidWeights("alpha entries must be positive".into()));
        }
        Ok(Self(alpha))
    }

    pub fn ones(d: usize) -> Self {
        Self(vec![Rational::one(); d.max(1)])
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.0.len())?;
        let mut out = self.0.clone();
        for (i, &p) in perm.iter().enumerate() {
            out[p] = self.0[i].clone();
        }
        Ok(Self(out))
    }
}

/// `min over support tuples of Σ_i λ_i[j_i]`.
pub fn torus_valuation(v: &TensorSupport, lambda: &WeightAssignment) -> Result<u64> {
    if lambda.order() != v.order {
        return Err(Error::DimensionMismatch {
            expected: v.order,
            found: lambda.order(),
        });
    }
    if lambda.dim() != v.dim {
        return Err(Error::DimensionMismatch {
            expected: v.dim,
            found: lambda.dim(),
        });
    }
    Ok(v.tuples
        .iter()
        .map(|t| {
            t.iter()
                .zip(&lambda.per_factor)
                .map(|(&j, w)| w[j - 1])
                .sum()
        })
        .min()
        .expect("support is nonempty"))
}

/// Torus-restricted `rk^G_α(v)`: upper bound on `rk^G_α`; exact for
/// torus-optimal tensors.
///
/// The witness is flattened factor by factor; see
/// [`WeightAssignment::from_flat`].
pub fn torus_rank(v: &TensorSupport, alpha: &AlphaWeights) -> Result<SlopeResult> {
    if alpha.0.len() != v.order {
        return Err(Error::DimensionMismatch {
            expected: v.order,
            found: alpha.0.len(),
        });
    }
    let cost: Vec<Rational> = alpha
        .0
        .iter()
        .flat_map(|a| std::iter::repeat_n(a.clone(), v.dim))
        .collect();
    minimize_slope(&cost, &v.lp_rows())
}

/// Torus-restricted `symmrk^G(v)`: infimum of `d·Σ_j λ_j / min_m ⟨m, λ⟩`.
/// Upper bound on `symmrk^G`; exact for torus-optimal forms.
pub fn symm_torus_rank(v: &SymmetricSupport) -> Result<SlopeResult> {
    let d = Rational::from_integer(BigInt::from(v.degree));
    minimize_slope(&vec![d; v.vars], &v.lp_rows())
}

/// All tuples whose index multiset matches some exponent vector; the result
/// is invariant under permuting factors.
pub fn expand_symmetric(v: &SymmetricSupport) -> TensorSupport {
    let mut tuples = BTreeSet::new();
    for m in &v.exponents {
        let mut counts: Vec<u32> = m.clone();
        let mut prefix = Vec::with_capacity(v.degree);
        arrangements(&mut counts, &mut prefix, v.degree, &mut tuples);
    }
    TensorSupport {
        order: v.degree,
        dim: v.vars,
        tuples,
    }
}

fn arrangements(
    counts: &mut [u32],
    prefix: &mut Vec<usize>,
    len: usize,
    out: &mut BTreeSet<Vec<usize>>,
) {
    if prefix.len() == len {
        out.insert(prefix.clone());
        return;
    }
    for j in 0..counts.len() {
        if counts[j] > 0 {
            counts[j] -= 1;
            prefix.push(j + 1);
            arrangements(counts, prefix, len, out);
            prefix.pop();
            counts[j] += 1;
        }
    }
}

/// The product `γ = λ_1 ⋯ λ_d` of commuting diagonal 1-parameter subgroups,
/// i.e. the coordinatewise sum of the weights.
///
/// For a symmetric `v`, `val(γ(t)·v) ≥ d·val(λ(t)·v)`.
pub fn combine_one_ps(lambda: &WeightAssignment) -> Vec<u64> {
    let mut gamma = vec![0u64; lambda.dim()];
    for w in &lambda.per_factor {
        for (g, x) in gamma.iter_mut().zip(w) {
            *g += x;
        }
    }
    gamma
}

/// Traceless integer weights `λ_1, …, λ_d ∈ Z^n` with `a·λ ≥ 1` on every
/// support row, if any exist. Their existence is instability under the
/// diagonal torus of `SL(V)^d`.
pub fn torus_destabilizer(v: &TensorSupport) -> Option<Vec<Vec<BigInt>>> {
    let flat = traceless_solution(&v.lp_rows(), v.order, v.dim)?;
    Some(flat.chunks(v.dim).map(<[BigInt]>::to_vec).collect())
}

/// `true` iff no diagonal 1-parameter subgroup of `SL(V)^d` sends `v` to 0.
pub fn is_torus_semistable(v: &TensorSupport) -> bool {
    torus_destabilizer(v).is_none()
}

/// A traceless `λ ∈ Z^n` with `⟨m, λ⟩ ≥ 1` for every exponent vector, if any.
pub fn symm_torus_destabilizer(v: &SymmetricSupport) -> Option<Vec<BigInt>> {
    traceless_solution(&v.lp_rows(), 1, v.vars)
}

/// `true` iff no diagonal 1-parameter subgroup of `SL(V)` sends `v` to 0.
pub fn is_symm_torus_semistable(v: &SymmetricSupport) -> bool {
    symm_torus_destabilizer(v).is_none()
}

/// Feasibility of `{row·λ ≥ 1, Σ_j λ_i[j] = 0 per block}` with free `λ`,
/// split as `λ = λ⁺ - λ⁻` for the nonnegative solver. The rational solution
/// is scaled to an integer one.
fn traceless_solution(rows: &[Vec<u64>], blocks: usize, width: usize) -> Option<Vec<BigInt>> {
    let m = blocks * width;
    let split = |row: &[Rational]| -> Vec<Rational> {
        row.iter().cloned().chain(row.iter().map(|v| -v)).collect()
    };
    let ge_rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let r: Vec<Rational> = r.iter().map(|&a| Rational::from_integer(a.into())).collect();
            split(&r)
        })
        .collect();
    let ge_rhs = vec![Rational::one(); ge_rows.len()];
    let eq_rows: Vec<Vec<Rational>> = (0..blocks)
        .map(|i| {
            let mut r = vec![Rational::zero(); m];
            for v in &mut r[i * width..(i + 1) * width] {
                *v = Rational::one();
            }
            split(&r)
        })
        .collect();
    let eq_rhs = vec![Rational::zero(); blocks];
    let x = lp_feasible(&ge_rows, &ge_rhs, &eq_rows, &eq_rhs).expect("well-formed system")?;
    let lambda: Vec<Rational> = (0..m).map(|k| &x[k] - &x[m + k]).collect();
    let scale = lambda
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    Some(
        lambda
            .iter()
            .map(|v| v.numer() * (&scale / v.denom()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::SlopeValue;
    use crate::rat;

    fn finite(r: &SlopeResult) -> Rational {
        r.value.finite().cloned().unwrap()
    }

    #[test]
    fn valuation_examples() {
        let w = TensorSupport::w_tensor();
        let lam = WeightAssignment::new(vec![vec![1, 0]; 3]).unwrap();
        assert_eq!(torus_valuation(&w, &lam).unwrap(), 2);

        let zero = WeightAssignment::new(vec![vec![0, 0]; 3]).unwrap();
        assert_eq!(torus_valuation(&w, &zero).unwrap(), 0);

        let v = TensorSupport::new(2, 2, [vec![1, 1], vec![2, 2]]).unwrap();
        let lam = WeightAssignment::new(vec![vec![1, 0], vec![0, 3]]).unwrap();
        assert_eq!(torus_valuation(&v, &lam).unwrap(), 1);
    }

    #[test]
    fn valuation_dimension_mismatch() {
        let w = TensorSupport::w_tensor();
        let lam = WeightAssignment::new(vec![vec![1, 0, 0]; 3]).unwrap();
        assert!(matches!(
            torus_valuation(&w, &lam),
            Err(Error::DimensionMismatch { .. })
        ));
        let lam = WeightAssignment::new(vec![vec![1, 0]; 2]).unwrap();
        assert!(torus_valuation(&w, &lam).is_err());
    }

    #[test]
    fn support_validation() {
        assert!(TensorSupport::new(2, 2, [vec![0, 1]]).is_err());
        assert!(TensorSupport::new(2, 2, [vec![3, 1]]).is_err());
        assert!(TensorSupport::new(2, 2, [vec![1, 1], vec![1, 1]]).is_err());
        assert!(TensorSupport::new(2, 2, Vec::<Vec<usize>>::new()).is_err());
        assert!(SymmetricSupport::new(3, 2, [vec![2, 2]]).is_err());
        assert!(SymmetricSupport::new(3, 2, [vec![2, 1], vec![2, 1]]).is_err());
        assert!(AlphaWeights::new(vec![rat(1, 1), rat(0, 1)]).is_err());
    }

    #[test]
    fn w_tensor_rank() {
        let w = TensorSupport::w_tensor();
        let r = torus_rank(&w, &AlphaWeights::ones(3)).unwrap();
        assert_eq!(finite(&r), rat(3, 2));
        let lam = WeightAssignment::from_flat(r.witness.as_ref().unwrap(), 3, 2).unwrap();
        let val = torus_valuation(&w, &lam).unwrap();
        let det = lam.weighted_det_valuation(&AlphaWeights::ones(3));
        assert_eq!(det / Rational::from_integer(val.into()), rat(3, 2));
    }

    #[test]
    fn rank_one_and_diagonal() {
        for (d, n) in [(2, 2), (3, 3), (4, 2)] {
            let simple = TensorSupport::new(d, n, [vec![1; d]]).unwrap();
            assert_eq!(finite(&torus_rank(&simple, &AlphaWeights::ones(d)).unwrap()), rat(1, 1));
        }
        let diag = TensorSupport::diagonal(3, 2).unwrap();
        assert_eq!(finite(&torus_rank(&diag, &AlphaWeights::ones(3)).unwrap()), rat(2, 1));
    }

    #[test]
    fn alpha_length_must_match_order() {
        let w = TensorSupport::w_tensor();
        assert!(torus_rank(&w, &AlphaWeights::ones(2)).is_err());
    }

    #[test]
    fn symmetric_rank_examples() {
        let wform = SymmetricSupport::new(3, 2, [vec![2, 1]]).unwrap();
        let r = symm_torus_rank(&wform).unwrap();
        assert_eq!(finite(&r), rat(3, 2));
        assert_eq!(r.witness, Some(vec![1, 0]));

        for d in 1..6 {
            let pure = SymmetricSupport::new(d, 1, [vec![d as u32]]).unwrap();
            assert_eq!(finite(&symm_torus_rank(&pure).unwrap()), rat(1, 1));
        }
        // the Fermat form is semistable, so its symmetric rank is n
        for n in 2..5 {
            for d in 2..6 {
                let f = SymmetricSupport::fermat(n, d).unwrap();
                assert_eq!(finite(&symm_torus_rank(&f).unwrap()), rat(n as i64, 1));
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let wform = SymmetricSupport::new(3, 2, [vec![2, 1]]).unwrap();
        let t = expand_symmetric(&wform);
        assert_eq!(t, TensorSupport::new(3, 2, [vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]).unwrap());

        let pure = SymmetricSupport::new(4, 2, [vec![4, 0]]).unwrap();
        assert_eq!(expand_symmetric(&pure).tuples().len(), 1);
        assert!(expand_symmetric(&pure).tuples().contains(&vec![1, 1, 1, 1]));

        let xy = SymmetricSupport::new(2, 2, [vec![1, 1]]).unwrap();
        assert_eq!(expand_symmetric(&xy), TensorSupport::new(2, 2, [vec![1, 2], vec![2, 1]]).unwrap());
    }

    #[test]
    fn combine_examples() {
        let lam = WeightAssignment::new(vec![vec![1, 0]; 3]).unwrap();
        assert_eq!(combine_one_ps(&lam), vec![3, 0]);
        let lam = WeightAssignment::new(vec![vec![1, 0], vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(combine_one_ps(&lam), vec![1, 1]);

        let wform = SymmetricSupport::new(3, 2, [vec![2, 1]]).unwrap();
        let lam = WeightAssignment::new(vec![vec![1, 0]; 3]).unwrap();
        let gamma = combine_one_ps(&lam);
        assert_eq!(wform.valuation(&gamma).unwrap(), 6);
        assert_eq!(torus_valuation(&expand_symmetric(&wform), &lam).unwrap(), 2);
    }

    #[test]
    fn semistability_examples() {
        assert!(!is_torus_semistable(&TensorSupport::w_tensor()));
        assert!(is_torus_semistable(&TensorSupport::diagonal(2, 2).unwrap()));
        assert!(!is_torus_semistable(&TensorSupport::new(2, 2, [vec![1, 1]]).unwrap()));

        assert!(!is_symm_torus_semistable(&SymmetricSupport::new(3, 2, [vec![2, 1]]).unwrap()));
        for d in 1..5 {
            assert!(is_symm_torus_semistable(&SymmetricSupport::fermat(2, d).unwrap()));
            assert!(is_symm_torus_semistable(&SymmetricSupport::new(d, 1, [vec![d as u32]]).unwrap()));
        }
    }

    #[test]
    fn destabilizer_is_traceless_and_positive() {
        let w = TensorSupport::w_tensor();
        let lam = torus_destabilizer(&w).unwrap();
        for block in &lam {
            assert!(block.iter().sum::<BigInt>().is_zero());
        }
        for t in w.tuples() {
            let val: BigInt = t.iter().zip(&lam).map(|(&j, b)| b[j - 1].clone()).sum();
            assert!(val.is_positive());
        }
    }

    #[test]
    fn infinite_rank_is_impossible_for_tensors() {
        // every tuple row has d ones, so the zero-row rule never fires
        let v = TensorSupport::diagonal(1, 3).unwrap();
        assert_ne!(torus_rank(&v, &AlphaWeights::ones(1)).unwrap().value, SlopeValue::Infinite);
    }
}
