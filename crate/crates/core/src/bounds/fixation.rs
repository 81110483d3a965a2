//! Exact fixation bounds for the edge action of `S_n` on `K_n`.
//!
//! For a permutation of cycle type `(λ_1^{l_1}, ..., λ_t^{l_t})`, the
//! probability that a uniformly random coloring of the edges from identical
//! 2-lists is constant on every edge orbit is `2^-μ`, where `μ` is the orbit
//! deficit of the type (edges minus edge orbits). Everything here is exact:
//! sums of dyadic rationals, and comparisons against irrational thresholds
//! of the form `2^(-x/7)` are made on integers after raising to the 7th
//! power or through certified dyadic brackets.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::decimal::{render_decimal, REPORT_DIGITS};
use super::dyadic::DyadicRational;
use crate::error::{Error, Result};
use crate::perm::{enumerate_cycle_types, enumerate_cycle_types_min, CycleType};

/// Largest `n` accepted by the range-verification commands.
pub const DEFAULT_MAX_N: usize = 40;

/// Bits of precision used when bracketing `2^(-s/7)`.
const BRACKET_BITS: u64 = 96;

/// `floor((λ-1)^2 / 2)`: deficit of a single `λ`-cycle on its own edges.
pub fn g_single(lambda: usize) -> u64 {
    assert!(lambda >= 1, "cycle length must be positive");
    let l = lambda as u64 - 1;
    l * l / 2
}

/// `a·b - gcd(a, b)`: deficit on the edges between an `a`-cycle and a
/// disjoint `b`-cycle.
pub fn g_pair(a: usize, b: usize) -> u64 {
    assert!(a >= 1 && b >= 1, "cycle lengths must be positive");
    (a * b - a.gcd(&b)) as u64
}

/// The fixation exponent of a cycle type.
pub fn mu(lambda: &CycleType) -> u64 {
    let parts = lambda.parts();
    let mut total = 0u64;
    for (i, &(li, mi)) in parts.iter().enumerate() {
        let mi = mi as u64;
        total += g_single(li) * mi;
        total += g_pair(li, li) * (mi * (mi - 1) / 2);
        for &(lj, mj) in &parts[i + 1..] {
            total += g_pair(li, lj) * mi * mj as u64;
        }
    }
    total
}

fn require_nontrivial(lambda: &CycleType) -> Result<()> {
    if lambda.is_identity() {
        Err(Error::IdentityType(lambda.n()))
    } else {
        Ok(())
    }
}

/// `2^-μ(Λ)` for a nontrivial type.
pub fn p_sigma_bound(lambda: &CycleType) -> Result<DyadicRational> {
    require_nontrivial(lambda)?;
    Ok(DyadicRational::pow2_neg(mu(lambda)))
}

/// `N(Λ) · 2^-μ(Λ)`, summed bound over all permutations of type `Λ`.
pub fn p_lambda_bound(lambda: &CycleType) -> Result<DyadicRational> {
    require_nontrivial(lambda)?;
    Ok(DyadicRational::new(BigInt::from(lambda.count_permutations()), mu(lambda)))
}

/// Exponent in the extension ratio: the part of `μ(Λ)` contributed by one
/// shortest cycle.
fn extension_exponent(lambda: &CycleType) -> u64 {
    let parts = lambda.parts();
    let (l1, m1) = parts[0];
    g_single(l1)
        + g_pair(l1, l1) * (m1 as u64 - 1)
        + parts[1..].iter().map(|&(lj, mj)| g_pair(l1, lj) * mj as u64).sum::<u64>()
}

/// `R(Λ) = n(n-1)...(n-λ_1+1) / (λ_1 l_1) · 2^-(...)`, the factor with
/// `P(Λ) = R(Λ) · P(Γ)` where `Γ` drops one shortest cycle. `P` of the empty
/// type is taken to be 1.
pub fn extension_ratio(lambda: &CycleType) -> Result<BigRational> {
    require_nontrivial(lambda)?;
    let (l1, m1) = lambda.parts()[0];
    let n = lambda.n();
    let falling: BigUint = ((n - l1 + 1)..=n).map(BigUint::from).product();
    let denom = BigUint::from(l1 * m1) << extension_exponent(lambda) as usize;
    Ok(BigRational::new(falling.into(), denom.into()))
}

/// `p_lambda_bound` of the extension parent, with the empty type mapped to 1.
pub fn parent_bound(lambda: &CycleType) -> Result<DyadicRational> {
    require_nontrivial(lambda)?;
    match lambda.remove_shortest_cycle() {
        None => Ok(DyadicRational::one()),
        Some(parent) => p_lambda_bound(&parent),
    }
}

/// Which inequality of the extension-ratio sweep was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionInequality {
    /// `R < 2^(-n λ_1 / 7)` when `λ_1 >= 2`.
    LongCycleDecay,
    /// `R <= n / (2(n-2))` when `λ_1 = 1`.
    FixedPointRatio,
    /// Equality in the previous bound holds exactly for `(1^{n-2}, 2)`.
    EqualityCase,
    /// `R <= n / (4(n-3))` when `λ_1 = 1` and `Λ != (1^{n-2}, 2)`.
    FixedPointRatioStrict,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionViolation {
    pub n: usize,
    #[serde(rename = "type")]
    pub cycle_type: CycleType,
    pub inequality: ExtensionInequality,
    #[serde(serialize_with = "serialize_rational")]
    pub ratio: BigRational,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionReport {
    pub n_min: usize,
    pub n_max: usize,
    pub types_checked: usize,
    /// Count of types checked against each inequality.
    pub long_cycle_checked: usize,
    pub fixed_point_checked: usize,
    pub violations: Vec<ExtensionViolation>,
}

impl ExtensionReport {
    pub fn violations_of(&self, which: ExtensionInequality) -> impl Iterator<Item = &ExtensionViolation> {
        self.violations.iter().filter(move |v| v.inequality == which)
    }
}

/// `R^7 < 2^(-n λ_1)` decided on integers: `a^7 · 2^(n λ_1) < b^7`.
pub fn below_long_cycle_threshold(ratio: &BigRational, n: usize, l1: usize) -> bool {
    let a = ratio.numer().pow(7u32);
    let b = ratio.denom().pow(7u32);
    (a << (n * l1)) < b
}

/// Checks the three extension-ratio inequalities for every nontrivial type
/// with `n_min <= n <= n_max` and returns every violation found.
pub fn check_extension_bounds(n_min: usize, n_max: usize) -> Result<ExtensionReport> {
    if n_min < 9 || n_min > n_max || n_max > DEFAULT_MAX_N {
        return Err(Error::OutOfRange(format!(
            "extension sweep needs 9 <= n_min <= n_max <= {DEFAULT_MAX_N}, got {n_min}..={n_max}"
        )));
    }
    let mut report = ExtensionReport {
        n_min,
        n_max,
        types_checked: 0,
        long_cycle_checked: 0,
        fixed_point_checked: 0,
        violations: Vec::new(),
    };
    for n in n_min..=n_max {
        let transposition = CycleType::new(vec![(1, n - 2), (2, 1)])?;
        let half = BigRational::new(n.into(), (2 * (n - 2)).into());
        let quarter = BigRational::new(n.into(), (4 * (n - 3)).into());
        for lambda in enumerate_cycle_types(n)? {
            if lambda.is_identity() {
                continue;
            }
            report.types_checked += 1;
            let ratio = extension_ratio(&lambda)?;
            let l1 = lambda.min_length();
            let mut flag = |inequality| {
                report.violations.push(ExtensionViolation {
                    n,
                    cycle_type: lambda.clone(),
                    inequality,
                    ratio: ratio.clone(),
                })
            };
            if l1 >= 2 {
                report.long_cycle_checked += 1;
                if !below_long_cycle_threshold(&ratio, n, l1) {
                    flag(ExtensionInequality::LongCycleDecay);
                }
            } else {
                report.fixed_point_checked += 1;
                if ratio > half {
                    flag(ExtensionInequality::FixedPointRatio);
                }
                if (ratio == half) != (lambda == transposition) {
                    flag(ExtensionInequality::EqualityCase);
                }
                if lambda != transposition && ratio > quarter {
                    flag(ExtensionInequality::FixedPointRatioStrict);
                }
            }
        }
    }
    Ok(report)
}

/// One row of a [`BoundReport`].
#[derive(Debug, Clone, Serialize)]
pub struct BoundTerm {
    #[serde(rename = "type")]
    pub cycle_type: CycleType,
    #[serde(rename = "N", serialize_with = "serialize_biguint")]
    pub count: BigUint,
    pub mu: u64,
    pub contribution: DyadicRational,
}

/// `Σ N(Λ) 2^-μ(Λ)` over a family of nontrivial cycle types, with the
/// per-type breakdown. The identity type is never included.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub n: usize,
    /// Smallest cycle length admitted (1 for the full sum).
    pub min_cycle: usize,
    pub terms: Vec<BoundTerm>,
    pub total: DyadicRational,
    pub decimal: String,
    pub identity_excluded: bool,
}

impl BoundReport {
    fn from_types(n: usize, min_cycle: usize, types: Vec<CycleType>) -> Self {
        let terms: Vec<BoundTerm> = types
            .into_par_iter()
            .filter(|t| !t.is_identity())
            .map(|t| {
                let count = t.count_permutations();
                let mu = mu(&t);
                let contribution = DyadicRational::new(BigInt::from(count.clone()), mu);
                BoundTerm { cycle_type: t, count, mu, contribution }
            })
            .collect();
        let total: DyadicRational = terms.iter().map(|t| &t.contribution).sum();
        let decimal = total.decimal(REPORT_DIGITS);
        Self { n, min_cycle, terms, total, decimal, identity_excluded: true }
    }

    pub fn term(&self, lambda: &CycleType) -> Option<&BoundTerm> {
        self.terms.iter().find(|t| &t.cycle_type == lambda)
    }
}

/// `f(n)`: the bound summed over every nontrivial cycle type of `S_n`.
pub fn f_sum(n: usize) -> Result<BoundReport> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("f(n) needs n >= 2, got {n}")));
    }
    Ok(BoundReport::from_types(n, 1, enumerate_cycle_types(n)?))
}

/// `f_{>=i}(n)`: the sum restricted to types whose cycles all have length
/// at least `i`.
pub fn f_min_sum(n: usize, i: usize) -> Result<BoundReport> {
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("minimum cycle length {i} must lie in 1..={n}")));
    }
    Ok(BoundReport::from_types(n, i, enumerate_cycle_types_min(n, i, false)?))
}

/// `P(n) = (n-1)! / 2^floor((n-1)^2/2)`, the bound for the full `n`-cycle.
pub fn p_full_cycle(n: usize) -> Result<DyadicRational> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("P(n) needs n >= 2, got {n}")));
    }
    let fact: BigUint = (1..n).map(BigUint::from).product();
    Ok(DyadicRational::new(BigInt::from(fact), g_single(n)))
}

/// Certified dyadic bracket `lo < 2^(-x/7) < hi` (equal when `7 | x`).
pub fn pow2_neg_sevenths(x: u64) -> (DyadicRational, DyadicRational) {
    let (q, s) = (x / 7, x % 7);
    if s == 0 {
        let v = DyadicRational::pow2_neg(q);
        return (v.clone(), v);
    }
    // floor(2^(BITS - s/7)) = floor((2^(7 BITS - s))^(1/7))
    let base = BigUint::one() << (7 * BRACKET_BITS - s) as usize;
    let root = base.nth_root(7);
    let lo = DyadicRational::new(BigInt::from(root.clone()), BRACKET_BITS + q);
    let hi = DyadicRational::new(BigInt::from(root + 1u32), BRACKET_BITS + q);
    (lo, hi)
}

/// Exact interval `[lo, hi]` for an expression involving irrational
/// factors.
#[derive(Debug, Clone, Serialize)]
pub struct Bracket {
    #[serde(serialize_with = "serialize_rational")]
    pub lo: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub hi: BigRational,
    pub decimal: String,
}

impl Bracket {
    fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        let decimal = render_decimal(&hi, REPORT_DIGITS);
        Self { lo, hi, decimal }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RecursionReport {
    pub n: usize,
    pub f_n: DyadicRational,
    pub f_n_decimal: String,
    /// `n/(2(n-2)) · f(n-1)`.
    #[serde(serialize_with = "serialize_rational")]
    pub leading: BigRational,
    /// `Σ_{i=2}^{floor(n/2)} 2^(-ni/7) f_{>=i}(n-i)`.
    pub tail: Bracket,
    pub p_full_cycle: DyadicRational,
    pub rhs: Bracket,
    /// `f(n) < rhs`, certified against the lower end of the bracket.
    pub holds: bool,
}

/// Evaluates the right-hand side of the `f(n)` recursion with exact values
/// of `f(n-1)` and `f_{>=i}(n-i)`, and checks `f(n)` against it.
pub fn recursion_rhs(n: usize) -> Result<RecursionReport> {
    if !(9..=DEFAULT_MAX_N).contains(&n) {
        return Err(Error::OutOfRange(format!("recursion check needs 9 <= n <= {DEFAULT_MAX_N}, got {n}")));
    }
    let f_n = f_sum(n)?.total;
    let f_prev = f_sum(n - 1)?.total.to_rational();
    let leading = BigRational::new(n.into(), (2 * (n - 2)).into()) * f_prev;

    let mut tail_lo = BigRational::zero();
    let mut tail_hi = BigRational::zero();
    for i in 2..=n / 2 {
        let f_i = f_min_sum(n - i, i)?.total;
        let (lo, hi) = pow2_neg_sevenths((n * i) as u64);
        tail_lo += (&lo * &f_i).to_rational();
        tail_hi += (&hi * &f_i).to_rational();
    }
    let p = p_full_cycle(n)?;
    let p_rat = p.to_rational();
    let rhs_lo = &leading + &tail_lo + &p_rat;
    let rhs_hi = &leading + &tail_hi + &p_rat;
    let holds = f_n.to_rational() < rhs_lo;
    Ok(RecursionReport {
        n,
        f_n_decimal: f_n.decimal(REPORT_DIGITS),
        f_n,
        leading,
        tail: Bracket::new(tail_lo, tail_hi),
        p_full_cycle: p,
        rhs: Bracket::new(rhs_lo, rhs_hi),
        holds,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TailReport {
    pub n: usize,
    /// `Σ_{i=2}^{floor(n/2)} 2^(-ni/7)`.
    pub sum: Bracket,
    /// `1 / (2^(n/7) (2^(n/7) - 1))`.
    pub closed_form: Bracket,
    pub sum_below_closed_form: bool,
    pub closed_form_below_three_tenths: bool,
}

/// The geometric tail of the recursion and its closed-form bound.
pub fn geometric_tail(n: usize) -> Result<TailReport> {
    if !(9..=DEFAULT_MAX_N).contains(&n) {
        return Err(Error::OutOfRange(format!("tail check needs 9 <= n <= {DEFAULT_MAX_N}, got {n}")));
    }
    let mut lo = BigRational::zero();
    let mut hi = BigRational::zero();
    for i in 2..=n / 2 {
        let (l, h) = pow2_neg_sevenths((n * i) as u64);
        lo += l.to_rational();
        hi += h.to_rational();
    }
    // t^2 / (1 - t) with t = 2^(-n/7), increasing in t
    let (tl, th) = pow2_neg_sevenths(n as u64);
    let closed = |t: BigRational| &t * &t / (BigRational::one() - t);
    let closed_lo = closed(tl.to_rational());
    let closed_hi = closed(th.to_rational());
    let three_tenths = BigRational::new(3.into(), 10.into());
    Ok(TailReport {
        n,
        sum_below_closed_form: hi < closed_lo,
        closed_form_below_three_tenths: closed_hi < three_tenths,
        sum: Bracket::new(lo, hi),
        closed_form: Bracket::new(closed_lo, closed_hi),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DecayRow {
    pub n: usize,
    pub f_n: DyadicRational,
    pub f_n_decimal: String,
    /// `20 n^2 / 2^n`.
    pub upper: DyadicRational,
    /// `C(n,2) / 2^(n-2)`.
    pub lower: DyadicRational,
    pub below_one: bool,
    pub below_upper: bool,
    pub above_lower: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecayReport {
    pub rows: Vec<DecayRow>,
    pub all_pass: bool,
}

/// Verifies `C(n,2)/2^(n-2) <= f(n) <= 20 n^2 / 2^n` and `f(n) < 1`.
pub fn decay_bound_check(n_min: usize, n_max: usize) -> Result<DecayReport> {
    if n_min < 8 || n_min > n_max || n_max > DEFAULT_MAX_N {
        return Err(Error::OutOfRange(format!(
            "decay check needs 8 <= n_min <= n_max <= {DEFAULT_MAX_N}, got {n_min}..={n_max}"
        )));
    }
    let rows: Vec<DecayRow> = (n_min..=n_max)
        .map(|n| {
            let f_n = f_sum(n)?.total;
            let upper = DyadicRational::new(20 * n * n, n as u64);
            let lower = DyadicRational::new(n * (n - 1) / 2, n as u64 - 2);
            Ok(DecayRow {
                n,
                f_n_decimal: f_n.decimal(REPORT_DIGITS),
                below_one: f_n < DyadicRational::one(),
                below_upper: f_n <= upper,
                above_lower: lower <= f_n,
                f_n,
                upper,
                lower,
            })
        })
        .collect::<Result<_>>()?;
    let all_pass = rows.iter().all(|r| r.below_one && r.below_upper && r.above_lower);
    Ok(DecayReport { rows, all_pass })
}

pub(crate) fn serialize_biguint<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn serialize_rational<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(v))
}

pub fn rational_string(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(parts: &[(usize, usize)]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn g_values() {
        assert_eq!(g_single(1), 0);
        assert_eq!(g_single(5), 8);
        assert_eq!(g_single(7), 18);
        assert_eq!(g_pair(1, 9), 8);
        assert_eq!(g_pair(3, 4), 11);
        assert_eq!(g_pair(2, 5), 9);
        assert_eq!(g_pair(4, 6), 22);
    }

    #[test]
    fn mu_values() {
        for n in 3..=12 {
            assert_eq!(mu(&ct(&[(1, n - 2), (2, 1)])), n as u64 - 2);
            assert_eq!(mu(&ct(&[(n, 1)])), g_single(n));
        }
        assert_eq!(mu(&ct(&[(3, 1), (4, 1)])), 17);
        assert_eq!(mu(&ct(&[(2, 1), (5, 1)])), 17);
        assert_eq!(mu(&ct(&[(3, 2)])), 10);
        // (12)(34)(567): 2 + 10 + 2, the exhaustive orbit deficit
        assert_eq!(mu(&ct(&[(2, 2), (3, 1)])), 14);
    }

    #[test]
    fn bounds_reject_identity() {
        assert!(matches!(p_sigma_bound(&CycleType::identity(4)), Err(Error::IdentityType(4))));
        assert!(p_lambda_bound(&CycleType::identity(4)).is_err());
        assert!(extension_ratio(&CycleType::identity(4)).is_err());
        assert!(CycleType::new(vec![(1, 4), (1, 1)]).is_err());
    }

    #[test]
    fn single_type_bounds() {
        assert_eq!(p_sigma_bound(&ct(&[(1, 4), (2, 1)])).unwrap(), DyadicRational::new(1, 4));
        assert_eq!(p_sigma_bound(&ct(&[(7, 1)])).unwrap(), DyadicRational::pow2_neg(18));
        for n in 3..=10usize {
            let b = p_lambda_bound(&ct(&[(1, n - 2), (2, 1)])).unwrap();
            assert_eq!(b, DyadicRational::new(n * (n - 1), n as u64 - 1));
        }
        assert_eq!(p_lambda_bound(&ct(&[(2, 1), (5, 1)])).unwrap(), DyadicRational::new(504, 17));
        assert_eq!(p_lambda_bound(&ct(&[(3, 1), (4, 1)])).unwrap(), DyadicRational::new(420, 17));
    }

    #[test]
    fn extension_ratio_examples() {
        for n in 4..=12i64 {
            let t = ct(&[(1, n as usize - 2), (2, 1)]);
            assert_eq!(extension_ratio(&t).unwrap(), q(n, 2 * (n - 2)));
            let t = ct(&[(1, n as usize - 3), (3, 1)]);
            assert_eq!(extension_ratio(&t).unwrap(), q(n, 4 * (n - 3)));
        }
    }

    #[test]
    fn extension_ratio_is_multiplicative() {
        for n in 2..=10 {
            for t in enumerate_cycle_types(n).unwrap().iter().filter(|t| !t.is_identity()) {
                let lhs = p_lambda_bound(t).unwrap().to_rational();
                let rhs = extension_ratio(t).unwrap() * parent_bound(t).unwrap().to_rational();
                assert_eq!(lhs, rhs, "{t}");
            }
        }
    }

    #[test]
    fn extension_sweep_small() {
        let r = check_extension_bounds(9, 9).unwrap();
        assert_eq!(r.types_checked, 29);
        assert_eq!(r.violations_of(ExtensionInequality::LongCycleDecay).count(), 0);
        assert_eq!(r.violations_of(ExtensionInequality::FixedPointRatio).count(), 0);
        assert_eq!(r.violations_of(ExtensionInequality::EqualityCase).count(), 0);
        // (1^5, 2^2) and (1, 2^4) exceed n/(4(n-3))
        let strict: Vec<&CycleType> =
            r.violations_of(ExtensionInequality::FixedPointRatioStrict).map(|v| &v.cycle_type).collect();
        assert_eq!(strict, vec![&ct(&[(1, 5), (2, 2)]), &ct(&[(1, 1), (2, 4)])]);
        let full = extension_ratio(&ct(&[(9, 1)])).unwrap();
        assert!(below_long_cycle_threshold(&full, 9, 9));
        assert!(check_extension_bounds(8, 9).is_err());
        assert!(check_extension_bounds(10, 9).is_err());
    }

    #[test]
    fn seventh_power_threshold_is_tight() {
        // 2^-2 vs 2^(-14/7) = 2^-2: not strictly below
        let r = q(1, 4);
        assert!(!below_long_cycle_threshold(&r, 7, 2));
        assert!(below_long_cycle_threshold(&q(1, 5), 7, 2));
    }

    #[test]
    fn small_sums() {
        assert_eq!(f_sum(2).unwrap().total, DyadicRational::one());
        assert_eq!(f_min_sum(5, 4).unwrap().total, DyadicRational::new(3, 5));
        assert_eq!(f_min_sum(6, 3).unwrap().total, DyadicRational::new(40, 10) + DyadicRational::new(120, 12));
        let f7 = f_min_sum(7, 2).unwrap();
        assert_eq!(f7.terms.len(), 4);
        assert_eq!(
            f7.total,
            [
                DyadicRational::new(210, 14),
                DyadicRational::new(420, 17),
                DyadicRational::new(504, 17),
                DyadicRational::new(720, 18)
            ]
            .into_iter()
            .sum()
        );
        assert!(f_sum(1).is_err());
        assert!(f_min_sum(4, 5).is_err());
    }

    #[test]
    fn report_totals_are_exact_sums() {
        for n in 2..=12 {
            let r = f_sum(n).unwrap();
            let sum: DyadicRational = r.terms.iter().map(|t| &t.contribution).sum();
            assert_eq!(sum, r.total);
            for t in &r.terms {
                assert_eq!(t.contribution, DyadicRational::new(BigInt::from(t.count.clone()), t.mu));
            }
            assert!(r.terms.iter().all(|t| !t.cycle_type.is_identity()));
        }
    }

    #[test]
    fn full_cycle_bound() {
        assert_eq!(p_full_cycle(2).unwrap(), DyadicRational::one());
        assert_eq!(p_full_cycle(9).unwrap(), DyadicRational::new(40320, 32));
        for n in 3..30 {
            assert!(p_full_cycle(n + 1).unwrap() < p_full_cycle(n).unwrap());
        }
    }

    #[test]
    fn sevenths_bracket() {
        for x in 1..60u64 {
            let (lo, hi) = pow2_neg_sevenths(x);
            let seven = |d: &DyadicRational| {
                let r = d.to_rational();
                (0..6).fold(r.clone(), |acc, _| acc * &r)
            };
            let target = DyadicRational::pow2_neg(x).to_rational();
            if x % 7 == 0 {
                assert_eq!(seven(&lo), target);
            } else {
                assert!(seven(&lo) < target && target < seven(&hi), "x = {x}");
            }
        }
    }

    #[test]
    fn tail_examples() {
        for n in 9..=20 {
            let t = geometric_tail(n).unwrap();
            assert!(t.sum_below_closed_form && t.closed_form_below_three_tenths, "n = {n}");
        }
    }

    #[test]
    fn recursion_holds() {
        for n in 9..=16 {
            let r = recursion_rhs(n).unwrap();
            assert!(r.holds, "n = {n}");
        }
        let r = recursion_rhs(9).unwrap();
        assert!(r.rhs.hi < BigRational::one());
        assert!(recursion_rhs(8).is_err());
    }

    #[test]
    fn decay_examples() {
        let r = decay_bound_check(8, 12).unwrap();
        assert!(r.all_pass);
        assert_eq!(r.rows[0].upper, DyadicRational::from_integer(5));
        assert_eq!(r.rows[4].upper, DyadicRational::new(20 * 144, 12));
        assert!(decay_bound_check(7, 9).is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = f_sum(3).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["terms"][0]["type"], serde_json::json!([[1, 1], [2, 1]]));
        assert_eq!(v["terms"][0]["N"], 3);
        assert_eq!(v["terms"][0]["mu"], 1);
        assert_eq!(v["terms"][0]["contribution"], "3/2");
        assert_eq!(v["total"], "2");
        assert_eq!(v["decimal"], "2.000000000");
    }
}
