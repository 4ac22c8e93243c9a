//! Executable checks of the rank identities and inequalities.
//!
//! Each `check_*` function draws instances from a seeded ChaCha stream and
//! returns one [`CheckReport`] per relation per instance, in generation
//! order. Failures are reported, never raised; every report carries its
//! instance in the input-file format so it can be replayed with the CLI.
//!
//! Instance distributions:
//!
//! - tensor supports: order `d` and dimension `n` uniform in `1..=max_d`,
//!   `1..=max_n`; `1..=max_support` tuples drawn uniformly from `[n]^d`
//!   (repeats collapse);
//! - symmetric supports: `n`, `d` as above, exponent vectors uniform over
//!   the compositions of `d` into `n` parts;
//! - monomial ideals: `1..=max_support` generators with exponents uniform in
//!   `0..=max_exponent`, the zero vector rejected and redrawn.
//!
//! General log canonical thresholds are not computed here. Where a relation
//! needs one (the `lct ≤ rank` anchor) the value is a literature constant
//! and the report says so.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cli::input::{serialize, InputDocument};
use crate::ideal::{
    ideal_order, ideal_power, ideal_product, lct_monomial, newton_membership, newton_threshold,
    t_stable_rank, Ideal, MonomialIdeal, PolyIdeal, SparsePolynomial,
};
use crate::lp::SlopeValue;
use crate::tensor::{
    combine_one_ps, expand_symmetric, is_symm_torus_semistable, is_torus_semistable,
    symm_torus_rank, torus_rank, torus_valuation, AlphaWeights, SymmetricSupport, TensorSupport,
    WeightAssignment,
};
use crate::{Error, Rational, Result};

/// Literature value of `lct_0(x_1^2 + x_2^2 + x_3^2)`; not computed here.
pub const QUADRIC_CONE_LCT: (i64, i64) = (1, 1);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomInstanceConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_n: usize,
    pub max_d: usize,
    pub max_support: usize,
    pub max_exponent: u32,
}

impl Default for RandomInstanceConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            cases: 200,
            max_n: 3,
            max_d: 4,
            max_support: 5,
            max_exponent: 6,
        }
    }
}

impl RandomInstanceConfig {
    pub fn with_seed(seed: u64, cases: usize) -> Self {
        Self {
            seed,
            cases,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_d == 0 || self.max_support == 0 || self.max_exponent == 0 {
            return Err(Error::InvalidArgument("instance bounds must be at least 1".into()));
        }
        Ok(())
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckValue {
    Rank(SlopeValue),
    Flag(bool),
}

impl fmt::Display for CheckValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckValue::Rank(v) => write!(f, "{v}"),
            CheckValue::Flag(b) => write!(f, "{b}"),
        }
    }
}

impl From<SlopeValue> for CheckValue {
    fn from(v: SlopeValue) -> Self {
        CheckValue::Rank(v)
    }
}

impl From<Rational> for CheckValue {
    fn from(v: Rational) -> Self {
        CheckValue::Rank(SlopeValue::Finite(v))
    }
}

impl From<bool> for CheckValue {
    fn from(v: bool) -> Self {
        CheckValue::Flag(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equal,
    AtMost,
    Below,
    Iff,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::AtMost => "<=",
            Relation::Below => "<",
            Relation::Iff => "<=>",
        }
    }

    fn holds(self, lhs: &CheckValue, rhs: &CheckValue) -> bool {
        match (self, lhs, rhs) {
            (Relation::Equal | Relation::Iff, l, r) => l == r,
            (Relation::AtMost, CheckValue::Rank(l), CheckValue::Rank(r)) => l <= r,
            (Relation::Below, CheckValue::Rank(l), CheckValue::Rank(r)) => l < r,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check_name: String,
    /// Random case index; `None` for fixed anchors.
    pub case: Option<usize>,
    pub instance: String,
    pub passed: bool,
    pub lhs: CheckValue,
    pub relation: Relation,
    pub rhs: CheckValue,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl CheckReport {
    fn compare(
        check_name: &str,
        case: Option<usize>,
        instance: String,
        lhs: impl Into<CheckValue>,
        relation: Relation,
        rhs: impl Into<CheckValue>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        Self {
            check_name: check_name.to_string(),
            case,
            passed: relation.holds(&lhs, &rhs),
            instance,
            lhs,
            relation,
            rhs,
            witness: None,
            note: None,
        }
    }

    fn errored(check_name: &str, case: Option<usize>, instance: String, e: Error) -> Self {
        Self {
            check_name: check_name.to_string(),
            case,
            instance,
            passed: false,
            lhs: CheckValue::Flag(false),
            relation: Relation::Equal,
            rhs: CheckValue::Flag(true),
            witness: None,
            note: Some(format!("error: {e}")),
        }
    }

    fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    fn with_note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(n.into());
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let case = self.case.map_or_else(|| "anchor".to_string(), |c| format!("case {c}"));
        write!(
            f,
            "{status} {} [{case}]: {} {} {}",
            self.check_name,
            self.lhs,
            self.relation.symbol(),
            self.rhs
        )?;
        if let Some(w) = &self.witness {
            write!(f, "; witness {w}")?;
        }
        if let Some(n) = &self.note {
            write!(f, "; {n}")?;
        }
        if !self.passed {
            write!(f, "\n  instance:\n")?;
            for line in self.instance.lines() {
                writeln!(f, "    {line}")?;
            }
        }
        Ok(())
    }
}

/// Passed and total counts of random cases (a case passes when all of its
/// reports pass) and of anchors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub cases_passed: usize,
    pub cases_total: usize,
    pub anchors_passed: usize,
    pub anchors_total: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary::default();
        let mut by_case: std::collections::BTreeMap<usize, bool> = Default::default();
        for r in reports {
            match r.case {
                Some(c) => {
                    let ok = by_case.entry(c).or_insert(true);
                    *ok &= r.passed;
                }
                None => {
                    s.anchors_total += 1;
                    s.anchors_passed += r.passed as usize;
                }
            }
        }
        s.cases_total = by_case.len();
        s.cases_passed = by_case.values().filter(|&&ok| ok).count();
        s
    }

    pub fn all_passed(&self) -> bool {
        self.cases_passed == self.cases_total && self.anchors_passed == self.anchors_total
    }
}

pub fn random_tensor_support(rng: &mut impl Rng, cfg: &RandomInstanceConfig) -> TensorSupport {
    let d = rng.gen_range(1..=cfg.max_d);
    let n = rng.gen_range(1..=cfg.max_n);
    let k = rng.gen_range(1..=cfg.max_support);
    let tuples: std::collections::BTreeSet<Vec<usize>> = (0..k)
        .map(|_| (0..d).map(|_| rng.gen_range(1..=n)).collect())
        .collect();
    TensorSupport::new(d, n, tuples).expect("tuples are in range and nonempty")
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .rev()
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

pub fn random_symmetric_support(rng: &mut impl Rng, cfg: &RandomInstanceConfig) -> SymmetricSupport {
    let d = rng.gen_range(1..=cfg.max_d);
    let n = rng.gen_range(1..=cfg.max_n);
    let all = compositions(d as u32, n);
    let k = rng.gen_range(1..=cfg.max_support);
    let exps: std::collections::BTreeSet<Vec<u32>> =
        (0..k).map(|_| all[rng.gen_range(0..all.len())].clone()).collect();
    SymmetricSupport::new(d, n, exps).expect("compositions sum to d")
}

/// A proper monomial ideal in `n` variables.
pub fn random_monomial_ideal(rng: &mut impl Rng, cfg: &RandomInstanceConfig, n: usize) -> MonomialIdeal {
    let k = rng.gen_range(1..=cfg.max_support);
    let gens: Vec<Vec<u32>> = (0..k)
        .map(|_| loop {
            let g: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=cfg.max_exponent)).collect();
            if g.iter().any(|&e| e > 0) {
                break g;
            }
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("generators have length n")
}

fn doc(d: InputDocument) -> String {
    serialize(&d)
}

fn labelled(parts: &[(&str, InputDocument)]) -> String {
    parts
        .iter()
        .map(|(label, d)| format!("# {label}\n{}", serialize(d)))
        .collect()
}

fn weights_text(w: &[Vec<u64>]) -> String {
    format!("{w:?}")
}

/// Symmetric rank equals multilinear rank of the expanded tensor, both at
/// the diagonal torus. Two reports per case: the equality, and the
/// `≤` direction built from the multilinear witness through
/// [`combine_one_ps`].
pub fn check_symm_equals_multi(cfg: &RandomInstanceConfig) -> Vec<CheckReport> {
    let mut rng = cfg.rng(1);
    let mut out = Vec::with_capacity(2 * cfg.cases);
    for case in 0..cfg.cases {
        let v = random_symmetric_support(&mut rng, cfg);
        out.extend(symm_equals_multi_reports(&v, Some(case)));
    }
    out
}

pub fn symm_equals_multi_reports(v: &SymmetricSupport, case: Option<usize>) -> Vec<CheckReport> {
    const NAME: &str = "symm_equals_multi";
    let instance = doc(InputDocument::Symm(v.clone()));
    let t = expand_symmetric(v);
    let d = v.degree();
    let (symm, multi) = match (symm_torus_rank(v), torus_rank(&t, &AlphaWeights::ones(d))) {
        (Ok(s), Ok(m)) => (s, m),
        (Err(e), _) | (_, Err(e)) => return vec![CheckReport::errored(NAME, case, instance, e)],
    };
    let mut reports = vec![CheckReport::compare(
        NAME,
        case,
        instance.clone(),
        symm.value.clone(),
        Relation::Equal,
        multi.value.clone(),
    )
    .with_witness(format!(
        "symm {:?}, multilinear {:?}",
        symm.witness.unwrap_or_default(),
        multi.witness.clone().unwrap_or_default()
    ))];

    // val(γ·v) ≥ d·val(λ·v) for γ = λ_1⋯λ_d, hence symm slope of γ ≤ multilinear slope of λ
    let name = "symm_equals_multi/combine";
    let flat = multi.witness.expect("tensor ranks are finite");
    let lam = WeightAssignment::from_flat(&flat, d, v.vars()).expect("witness has order·dim entries");
    let gamma = combine_one_ps(&lam);
    let val_gamma = v.valuation(&gamma).expect("gamma has n entries");
    let val_lam = torus_valuation(&t, &lam).expect("dimensions agree");
    let gamma_slope = Rational::from_integer(BigInt::from(d as u64 * gamma.iter().sum::<u64>()))
        / Rational::from_integer(BigInt::from(val_gamma));
    let ok = val_gamma >= d as u64 * val_lam;
    let mut r = CheckReport::compare(name, case, instance, gamma_slope, Relation::AtMost, multi.value);
    r.passed &= ok;
    reports.push(r.with_witness(format!(
        "lambda {}, gamma {gamma:?}, val(gamma) {val_gamma} >= {d}*{val_lam}",
        weights_text(lam.per_factor())
    )));
    reports
}

/// Torus semistability is rank `n`, for tensors and for forms, and a form
/// is semistable iff its expanded tensor is. Three reports per case.
pub fn check_semistable_iff_rank(cfg: &RandomInstanceConfig) -> Vec<CheckReport> {
    let mut rng = cfg.rng(2);
    let mut out = Vec::with_capacity(3 * cfg.cases);
    for case in 0..cfg.cases {
        let t = random_tensor_support(&mut rng, cfg);
        let s = random_symmetric_support(&mut rng, cfg);
        out.push(tensor_semistable_report(&t, Some(case)));
        out.extend(symm_semistable_reports(&s, Some(case)));
    }
    out
}

pub fn tensor_semistable_report(t: &TensorSupport, case: Option<usize>) -> CheckReport {
    const NAME: &str = "semistable_iff_rank/tensor";
    let instance = doc(InputDocument::Tensor(t.clone()));
    match torus_rank(t, &AlphaWeights::ones(t.order())) {
        Ok(rank) => {
            let n = Rational::from_integer(BigInt::from(t.dim()));
            let at_n = rank.value == SlopeValue::Finite(n);
            CheckReport::compare(NAME, case, instance, is_torus_semistable(t), Relation::Iff, at_n)
                .with_note(format!("rank {}, n {}", rank.value, t.dim()))
        }
        Err(e) => CheckReport::errored(NAME, case, instance, e),
    }
}

pub fn symm_semistable_reports(s: &SymmetricSupport, case: Option<usize>) -> Vec<CheckReport> {
    const NAME: &str = "semistable_iff_rank/symm";
    let instance = doc(InputDocument::Symm(s.clone()));
    let semistable = is_symm_torus_semistable(s);
    let first = match symm_torus_rank(s) {
        Ok(rank) => {
            let n = Rational::from_integer(BigInt::from(s.vars()));
            let at_n = rank.value == SlopeValue::Finite(n);
            CheckReport::compare(NAME, case, instance.clone(), semistable, Relation::Iff, at_n)
                .with_note(format!("rank {}, n {}", rank.value, s.vars()))
        }
        Err(e) => CheckReport::errored(NAME, case, instance.clone(), e),
    };
    let expanded = is_torus_semistable(&expand_symmetric(s));
    let second = CheckReport::compare(
        "semistable_iff_rank/sl_vs_product",
        case,
        instance,
        semistable,
        Relation::Iff,
        expanded,
    );
    vec![first, second]
}

/// Rank of a monomial ideal equals the Newton polyhedron threshold, which is
/// maximal for membership. Fixed anchors first, then two reports per case.
pub fn check_monomial_lct(cfg: &RandomInstanceConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let anchors: [(&[&[u32]], Rational); 4] = [
        (&[&[3, 0], &[0, 4]], Rational::new(7.into(), 12.into())),
        (&[&[1]], Rational::one()),
        (&[&[2, 1, 0], &[0, 2, 1], &[1, 0, 2]], Rational::one()),
        (&[&[2, 0, 0], &[0, 5, 0], &[0, 0, 7]], Rational::new(59.into(), 70.into())),
    ];
    for (gens, expected) in anchors {
        let n = gens[0].len();
        let a = MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec())).expect("anchor is valid");
        let instance = doc(InputDocument::MonomialIdeal(a.clone()));
        match lct_monomial(&a) {
            Ok(v) => out.push(
                CheckReport::compare("monomial_lct/anchor", None, instance.clone(), v, Relation::Equal, expected)
                    .with_note("expected value from the diagonal-family formula or the cyclic example"),
            ),
            Err(e) => out.push(CheckReport::errored("monomial_lct/anchor", None, instance.clone(), e)),
        }
        out.extend(monomial_lct_reports(&a, None));
    }

    let mut rng = cfg.rng(3);
    for case in 0..cfg.cases {
        let n = rng.gen_range(1..=cfg.max_n);
        let a = random_monomial_ideal(&mut rng, cfg, n);
        out.extend(monomial_lct_reports(&a, Some(case)));
    }
    out
}

pub fn monomial_lct_reports(a: &MonomialIdeal, case: Option<usize>) -> Vec<CheckReport> {
    let instance = doc(InputDocument::MonomialIdeal(a.clone()));
    let (rank, threshold) = match (t_stable_rank(a), newton_threshold(a)) {
        (Ok(r), Ok(t)) => (r, t),
        (Err(e), _) | (_, Err(e)) => return vec![CheckReport::errored("monomial_lct", case, instance, e)],
    };
    let eq = CheckReport::compare(
        "monomial_lct/rank_vs_newton",
        case,
        instance.clone(),
        rank.value.clone(),
        Relation::Equal,
        threshold.clone(),
    )
    .with_witness(format!("{:?}", rank.witness.unwrap_or_default()));

    // ν = threshold is accepted and ν slightly above it is not
    let maximal = match threshold.finite() {
        Some(nu) => {
            let above = nu * Rational::new(1001.into(), 1000.into());
            match (newton_membership(a, nu), newton_membership(a, &above)) {
                (Ok(at), Ok(over)) => CheckReport::compare(
                    "monomial_lct/newton_maximal",
                    case,
                    instance,
                    at && !over,
                    Relation::Equal,
                    true,
                )
                .with_note(format!("member at {nu}: {at}; member at {above}: {over}")),
                (Err(e), _) | (_, Err(e)) => CheckReport::errored("monomial_lct/newton_maximal", case, instance, e),
            }
        }
        None => CheckReport::compare("monomial_lct/newton_maximal", case, instance, false, Relation::Equal, true)
            .with_note("threshold is infinite for a proper ideal"),
    };
    vec![eq, maximal]
}

/// Powers, products, monotonicity, the monomial sum bound and additivity of
/// orders, on random monomial ideals. Five reports per case.
pub fn check_ideal_props(cfg: &RandomInstanceConfig) -> Vec<CheckReport> {
    let mut rng = cfg.rng(4);
    let mut out = Vec::with_capacity(5 * cfg.cases);
    for case in 0..cfg.cases {
        let n = rng.gen_range(1..=cfg.max_n);
        let a = random_monomial_ideal(&mut rng, cfg, n);
        let b = random_monomial_ideal(&mut rng, cfg, n);
        let r = rng.gen_range(1..=3u32);
        let shifts: Vec<Vec<u32>> = a
            .generators()
            .iter()
            .map(|_| (0..n).map(|_| rng.gen_range(0..=2)).collect())
            .collect();
        let lambda: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=5)).collect();
        match ideal_props_reports(&a, &b, r, &shifts, &lambda, Some(case)) {
            Ok(reports) => out.extend(reports),
            Err(e) => out.push(CheckReport::errored(
                "ideal_props",
                Some(case),
                labelled(&[("a", InputDocument::MonomialIdeal(a)), ("b", InputDocument::MonomialIdeal(b))]),
                e,
            )),
        }
    }
    out
}

/// `shifts[k]` multiplies the `k`-th generator of `a` to build an ideal
/// contained in `a`.
pub fn ideal_props_reports(
    a: &MonomialIdeal,
    b: &MonomialIdeal,
    r: u32,
    shifts: &[Vec<u32>],
    lambda: &[u64],
    case: Option<usize>,
) -> Result<Vec<CheckReport>> {
    let n = a.vars();
    let pair = labelled(&[
        ("a", InputDocument::MonomialIdeal(a.clone())),
        ("b", InputDocument::MonomialIdeal(b.clone())),
    ]);
    let rank_a = t_stable_rank(a)?.value;
    let rank_b = t_stable_rank(b)?.value;
    let finite_a = rank_a.finite().cloned().ok_or(Error::UnitIdeal)?;

    let power = ideal_power(a, r)?;
    let rank_power = t_stable_rank(&power)?.value;
    let scaled = finite_a.clone() / Rational::from_integer(BigInt::from(r));
    let powers = CheckReport::compare(
        "ideal_props/power",
        case,
        pair.clone(),
        rank_power,
        Relation::Equal,
        scaled,
    )
    .with_note(format!("r = {r}"));

    let ab = ideal_product(a, b)?;
    let rank_ab = t_stable_rank(&ab)?.value;
    let lhs = rank_ab.recip().ok_or(Error::UnitIdeal)?;
    let rhs = rank_a.recip().ok_or(Error::UnitIdeal)? + rank_b.recip().ok_or(Error::UnitIdeal)?;
    let product = CheckReport::compare("ideal_props/product", case, pair.clone(), lhs, Relation::AtMost, rhs)
        .with_note("1/rank(ab) <= 1/rank(a) + 1/rank(b)");

    let sub = MonomialIdeal::new(
        n,
        a.generators()
            .iter()
            .zip(shifts.iter().cycle())
            .map(|(g, s)| g.iter().zip(s).map(|(x, y)| x + y).collect()),
    )?;
    let contained = sub.is_contained_in(a);
    let mut mono = CheckReport::compare(
        "ideal_props/monotone",
        case,
        labelled(&[("sub", InputDocument::MonomialIdeal(sub.clone())), ("a", InputDocument::MonomialIdeal(a.clone()))]),
        t_stable_rank(&sub)?.value,
        Relation::AtMost,
        rank_a.clone(),
    );
    mono.passed &= contained;

    let sum = a.sum(b)?;
    let rank_sum = t_stable_rank(&sum)?.value;
    let bound = match (&rank_a, &rank_b) {
        (SlopeValue::Finite(x), SlopeValue::Finite(y)) => SlopeValue::Finite(x + y),
        _ => SlopeValue::Infinite,
    };
    let sums = CheckReport::compare("ideal_props/sum", case, pair.clone(), rank_sum, Relation::AtMost, bound)
        .with_note("monomial case, where rank = lct");

    let ord_ab = ideal_order(&ab, lambda)?;
    let ord_sum = ideal_order(a, lambda)? + ideal_order(b, lambda)?;
    let additivity = CheckReport::compare(
        "ideal_props/order_additive",
        case,
        pair,
        Rational::from_integer(BigInt::from(ord_ab)),
        Relation::Equal,
        Rational::from_integer(BigInt::from(ord_sum)),
    )
    .with_witness(format!("{lambda:?}"));

    Ok(vec![powers, product, mono, sums, additivity])
}

/// `lct_0(x_1^2 + x_2^2 + x_3^2) = 1 < rk^T = 3/2`. The rank is computed;
/// the lct is the literature constant [`QUADRIC_CONE_LCT`].
pub fn check_lct_leq_rank_anchor() -> CheckReport {
    let f = (0..3).fold(SparsePolynomial::zero(3), |acc, i| {
        let x = SparsePolynomial::variable(3, i);
        &acc + &(&x * &x)
    });
    let ideal = PolyIdeal::principal(f).expect("nonzero");
    let instance = doc(InputDocument::PolyIdeal(ideal.clone()));
    let name = "lct_leq_rank/quadric_cone";
    let rank = match t_stable_rank(&ideal) {
        Ok(r) => r,
        Err(e) => return CheckReport::errored(name, None, instance, e),
    };
    let lct = Rational::new(QUADRIC_CONE_LCT.0.into(), QUADRIC_CONE_LCT.1.into());
    let expected = SlopeValue::Finite(Rational::new(3.into(), 2.into()));
    let mut r = CheckReport::compare(name, None, instance, lct, Relation::Below, rank.value.clone())
        .with_note(format!(
            "lct is a literature constant, not computed; rank {} (expected 3/2)",
            rank.value
        ));
    r.passed &= rank.value == expected;
    r
}

/// `(x^u)` in one variable: rank and lct are both `1/u`.
pub fn check_lct_leq_rank_monomial(u: u32) -> CheckReport {
    let name = "lct_leq_rank/pure_power";
    let a = match MonomialIdeal::new(1, [vec![u]]) {
        Ok(a) => a,
        Err(e) => return CheckReport::errored(name, None, String::new(), e),
    };
    let instance = doc(InputDocument::MonomialIdeal(a.clone()));
    match (lct_monomial(&a), t_stable_rank(&a)) {
        (Ok(lct), Ok(rank)) => {
            let expected = Rational::new(1.into(), u.into());
            let mut r = CheckReport::compare(name, None, instance, lct.clone(), Relation::AtMost, rank.value.clone());
            r.passed &= lct == expected && rank.value == SlopeValue::Finite(expected);
            r
        }
        (Err(e), _) | (_, Err(e)) => CheckReport::errored(name, None, instance, e),
    }
}

/// Named suites as exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    SymmMulti,
    Semistable,
    MonomialLct,
    IdealProps,
    LctAnchor,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::SymmMulti => "symm-multi",
            Suite::Semistable => "semistable",
            Suite::MonomialLct => "monomial-lct",
            Suite::IdealProps => "ideal-props",
            Suite::LctAnchor => "lct-anchor",
            Suite::All => "all",
        }
    }

    pub fn run(self, cfg: &RandomInstanceConfig) -> Result<Vec<(Suite, Vec<CheckReport>)>> {
        cfg.validate()?;
        let one = |s: Suite| -> Vec<CheckReport> {
            match s {
                Suite::SymmMulti => check_symm_equals_multi(cfg),
                Suite::Semistable => check_semistable_iff_rank(cfg),
                Suite::MonomialLct => check_monomial_lct(cfg),
                Suite::IdealProps => check_ideal_props(cfg),
                Suite::LctAnchor => {
                    let mut v = vec![check_lct_leq_rank_anchor()];
                    v.extend((1..=4).map(check_lct_leq_rank_monomial));
                    v
                }
                Suite::All => unreachable!(),
            }
        };
        let suites = match self {
            Suite::All => vec![
                Suite::SymmMulti,
                Suite::Semistable,
                Suite::MonomialLct,
                Suite::IdealProps,
                Suite::LctAnchor,
            ],
            s => vec![s],
        };
        Ok(suites.into_iter().map(|s| (s, one(s))).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(seed: u64) -> RandomInstanceConfig {
        RandomInstanceConfig::with_seed(seed, 20)
    }

    #[test]
    fn symm_equals_multi_anchors() {
        let wform = SymmetricSupport::new(3, 2, [vec![2, 1]]).unwrap();
        let reports = symm_equals_multi_reports(&wform, None);
        assert!(reports.iter().all(|r| r.passed), "{reports:?}");
        assert_eq!(reports[0].lhs, CheckValue::from(Rational::new(3.into(), 2.into())));

        let pure = SymmetricSupport::new(4, 1, [vec![4]]).unwrap();
        let reports = symm_equals_multi_reports(&pure, None);
        assert!(reports.iter().all(|r| r.passed));
        assert_eq!(reports[0].lhs, CheckValue::from(Rational::one()));
    }

    #[test]
    fn semistable_anchors() {
        let w = tensor_semistable_report(&TensorSupport::w_tensor(), None);
        assert!(w.passed);
        assert_eq!(w.lhs, CheckValue::Flag(false));
        let diag = tensor_semistable_report(&TensorSupport::diagonal(2, 2).unwrap(), None);
        assert!(diag.passed);
        assert_eq!(diag.lhs, CheckValue::Flag(true));
        let simple = tensor_semistable_report(&TensorSupport::new(2, 2, [vec![1, 1]]).unwrap(), None);
        assert!(simple.passed);
        assert_eq!(simple.lhs, CheckValue::Flag(false));
    }

    #[test]
    fn ideal_props_anchors() {
        let xy = MonomialIdeal::new(2, [vec![1, 0], vec![0, 1]]).unwrap();
        let reports = ideal_props_reports(&xy, &xy, 2, &[vec![0, 0]], &[1, 2], None).unwrap();
        assert!(reports.iter().all(|r| r.passed));
        assert_eq!(reports[0].lhs, CheckValue::from(Rational::one()));

        let x = MonomialIdeal::new(2, [vec![1, 0]]).unwrap();
        let y = MonomialIdeal::new(2, [vec![0, 1]]).unwrap();
        let reports = ideal_props_reports(&x, &y, 1, &[vec![1, 0]], &[1, 1], None).unwrap();
        assert!(reports.iter().all(|r| r.passed));
        // 1/rank(xy) = 1 <= 1/1 + 1/1
        assert_eq!(reports[1].lhs, CheckValue::from(Rational::one()));
        assert_eq!(reports[1].rhs, CheckValue::from(Rational::from_integer(2.into())));
        // (x^2) ⊆ (x): 1/2 <= 1
        assert_eq!(reports[2].lhs, CheckValue::from(Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn lct_anchor_reports() {
        let r = check_lct_leq_rank_anchor();
        assert!(r.passed, "{r}");
        assert_eq!(r.rhs, CheckValue::from(Rational::new(3.into(), 2.into())));
        for u in 1..6 {
            assert!(check_lct_leq_rank_monomial(u).passed);
        }
    }

    #[test]
    fn small_random_suites_pass() {
        for seed in [1, 2] {
            let cfg = small(seed);
            for (suite, reports) in Suite::All.run(&cfg).unwrap() {
                let s = Summary::of(&reports);
                assert!(s.all_passed(), "{}: {s:?}", suite.name());
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = small(9);
        assert_eq!(check_ideal_props(&cfg), check_ideal_props(&cfg));
        assert_eq!(check_semistable_iff_rank(&cfg), check_semistable_iff_rank(&cfg));
        assert_ne!(check_ideal_props(&cfg), check_ideal_props(&small(10)));
    }

    #[test]
    fn bad_config_is_rejected() {
        let cfg = RandomInstanceConfig {
            max_n: 0,
            ..RandomInstanceConfig::default()
        };
        assert!(Suite::All.run(&cfg).is_err());
    }

    #[test]
    fn compositions_cover_all() {
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(4, 3).len(), 15);
        assert!(compositions(4, 3).iter().all(|c| c.iter().sum::<u32>() == 4));
    }

    #[test]
    fn failing_report_prints_reproducer() {
        let r = CheckReport::compare("x", Some(3), "mideal 1\n2\n".into(), true, Relation::Iff, false);
        assert!(!r.passed);
        let text = r.to_string();
        assert!(text.starts_with("FAIL x [case 3]"));
        assert!(text.contains("    mideal 1"));
    }
}
