//! Exact closed forms for reconstruction numbers, local parameters and the
//! regular-graph bounds they are compared against.
//!
//! Every value that is only claimed for a range of `n` carries that range:
//! outside it the evaluators return [`Claimed::NoClaim`] rather than a
//! number.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::cycle_type::CycleType;
use crate::error::{Error, Result};
use crate::generators::GeneratorKind;

pub type Rational = Ratio<i64>;

/// A claimed value, or the absence of any claim for these parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claimed<T> {
    Value(T),
    /// The formula is only stated for `n >= min_n`.
    NoClaim {
        min_n: usize,
    },
}

impl<T: Copy> Claimed<T> {
    pub fn value(&self) -> Option<T> {
        match self {
            Claimed::Value(v) => Some(*v),
            Claimed::NoClaim { .. } => None,
        }
    }
}

fn claim_from<T>(n: usize, min_n: usize, value: impl FnOnce() -> T) -> Claimed<T> {
    if n >= min_n {
        Claimed::Value(value())
    } else {
        Claimed::NoClaim { min_n }
    }
}

/// `C(n, k)` by the multiplicative formula, overflow checked.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow("binomial"));
        }
    }
    Ok(acc as u64)
}

/// `N(L_n(q), r) = q Σ_{i<r} C(n-1, i) (q-1)^i`.
pub fn hamming_n(n: u64, q: u64, r: u64) -> Result<u64> {
    if n < 2 || q < 2 || r < 1 {
        return Err(Error::Domain(format!("hamming n={n} q={q} r={r}")));
    }
    let overflow = || Error::Overflow("hamming");
    let mut sum: u64 = 0;
    for i in 0..r.min(n) {
        let pow = (q - 1).checked_pow(i as u32).ok_or_else(overflow)?;
        let term = binomial(n - 1, i)?.checked_mul(pow).ok_or_else(overflow)?;
        sum = sum.checked_add(term).ok_or_else(overflow)?;
    }
    sum.checked_mul(q).ok_or_else(overflow)
}

/// `N(J_e^n, r) = n Σ_{i<r} C(e-1, i) C(n-e-1, i) / (i+1)`.
pub fn johnson_n(n: u64, e: u64, r: u64) -> Result<u64> {
    if n < 2 || e < 1 || e > n - 1 || r < 1 {
        return Err(Error::Domain(format!("johnson n={n} e={e} r={r}")));
    }
    let mut sum = Rational::from_integer(0);
    for i in 0..r.min(e).min(n - e) {
        let num = binomial(e - 1, i)? as i64 * binomial(n - e - 1, i)? as i64;
        sum += Rational::new(num, i as i64 + 1);
    }
    let total = sum * Rational::from_integer(n as i64);
    integral(total, "johnson")
}

fn integral(x: Rational, what: &str) -> Result<u64> {
    if !x.is_integer() || *x.numer() < 0 {
        return Err(Error::Domain(format!("{what} evaluated to non-integer {x}")));
    }
    Ok(x.to_integer() as u64)
}

fn check_r12(r: usize) -> Result<()> {
    if r == 1 || r == 2 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "closed form stated only for r in {{1,2}}, got {r}"
        )))
    }
}

/// `N(Sym_n(T), r)`: 3 for `r = 1`, `3(n-2)(n+1)/2` for `r = 2`.
pub fn transposition_n(n: usize, r: usize) -> Result<u64> {
    check_r12(r)?;
    if n < 3 {
        return Err(Error::Domain(format!("transposition graph needs n >= 3, got {n}")));
    }
    Ok(match r {
        1 => 3,
        _ => integral(Rational::new(3 * (n as i64 - 2) * (n as i64 + 1), 2), "3(n-2)(n+1)/2")?,
    })
}

/// The four claimed `N_s(Sym_n(T), 2)` values with their ranges.
pub fn transposition_ns_table(n: usize) -> BTreeMap<usize, Claimed<u64>> {
    let n64 = n as u64;
    BTreeMap::from([
        (1, claim_from(n, 3, || n64 * (n64 - 1))),
        (2, claim_from(n, 3, || 3 * (n64 - 2) * (n64 + 1) / 2)),
        (3, claim_from(n, 4, || 12)),
        (4, claim_from(n, 5, || 20)),
    ])
}

/// `N(Sym_n(t), r)` and `N(Sym_n(st), r)`: 2 for `r = 1`, `2(n-1)` for `r = 2`.
pub fn bubble_star_n(kind: GeneratorKind, n: usize, r: usize) -> Result<Claimed<u64>> {
    check_r12(r)?;
    let min_n = match kind {
        GeneratorKind::Adjacent => 3,
        GeneratorKind::Prefix => 4,
        _ => return Err(Error::Domain(format!("no bubble/star formula for {kind}"))),
    };
    Ok(claim_from(n, min_n, || if r == 1 { 2 } else { 2 * (n as u64 - 1) }))
}

/// Claimed `N_s(Γ, 2)` values for the bubble-sort and star graphs.
pub fn bubble_star_ns_table(kind: GeneratorKind, n: usize) -> Result<BTreeMap<usize, Claimed<u64>>> {
    let two_k = 2 * (n as u64).saturating_sub(1);
    Ok(match kind {
        GeneratorKind::Adjacent => BTreeMap::from([
            (1, claim_from(n, 3, || two_k)),
            (2, claim_from(n, 3, || two_k)),
            (3, claim_from(n, 4, || 2)),
            (4, claim_from(n, 5, || 4)),
        ]),
        GeneratorKind::Prefix => BTreeMap::from([
            (1, claim_from(n, 4, || two_k)),
            (2, claim_from(n, 5, || two_k)),
            (3, claim_from(n, 4, || 4)),
            (4, claim_from(n, 5, || 4)),
        ]),
        _ => return Err(Error::Domain(format!("no N_s table for {kind}"))),
    })
}

/// Claimed `(λ, μ)` for the three generator families.
pub fn lambda_mu_claim(kind: GeneratorKind, n: usize) -> Result<Claimed<(u64, u64)>> {
    Ok(match kind {
        GeneratorKind::AllTranspositions => claim_from(n, 3, || (0, 3)),
        GeneratorKind::Adjacent => claim_from(n, 3, || (0, 2)),
        GeneratorKind::Prefix => claim_from(n, 4, || (0, 1)),
        GeneratorKind::Explicit => return Err(Error::Domain("no claim for explicit sets".into())),
    })
}

/// Claimed diameters: `n-1`, `C(n,2)` and `⌊3(n-1)/2⌋`.
pub fn diameter_claim(kind: GeneratorKind, n: usize) -> Result<Claimed<u64>> {
    let n64 = n as u64;
    Ok(match kind {
        GeneratorKind::AllTranspositions => claim_from(n, 3, || n64 - 1),
        GeneratorKind::Adjacent => claim_from(n, 3, || n64 * (n64 - 1) / 2),
        GeneratorKind::Prefix => claim_from(n, 3, || 3 * (n64 - 1) / 2),
        GeneratorKind::Explicit => return Err(Error::Domain("no claim for explicit sets".into())),
    })
}

/// `(c, b)` of a vertex of the transposition graph with the given cycle
/// type: `c = (Σ j²h_j - n)/2`, `b = (n² - Σ j²h_j)/2`, and `a = 0`.
pub fn transposition_local_params(ct: &CycleType) -> Result<(u64, u64)> {
    let n = ct.degree() as i64;
    let sq = ct.sum_of_squares() as i64;
    let c = integral(Rational::new(sq - n, 2), "c_i")?;
    let b = integral(Rational::new(n * n - sq, 2), "b_i")?;
    Ok((c, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// measured <= bound
    Upper,
    /// measured >= bound
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactBound(pub Rational);

impl ExactBound {
    /// Smallest integer not below the bound.
    pub fn ceil(&self) -> i64 {
        self.0.ceil().to_integer()
    }

    /// Largest integer not above the bound.
    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }
}

impl fmt::Display for ExactBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for ExactBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub graph: String,
    pub bound: String,
    pub direction: Direction,
    pub bound_value: ExactBound,
    pub measured: u64,
    pub satisfied: bool,
    pub attained: bool,
}

impl BoundReport {
    pub fn new(
        graph: impl Into<String>,
        bound: impl Into<String>,
        direction: Direction,
        bound_value: ExactBound,
        measured: u64,
    ) -> Self {
        let m = Rational::from_integer(measured as i64);
        let satisfied = match direction {
            Direction::Upper => m <= bound_value.0,
            Direction::Lower => m >= bound_value.0,
        };
        Self {
            graph: graph.into(),
            bound: bound.into(),
            direction,
            bound_value,
            measured,
            satisfied,
            attained: m == bound_value.0,
        }
    }
}

/// Upper bound `N(Γ,1) <= (v + λ)/2` for `k`-regular graphs with
/// `2 <= k <= v-2` and `0 <= λ <= k-2`.
pub fn upper_bound_n1(v: u64, k: u64, lambda: u64) -> Result<ExactBound> {
    if k < 2 || k + 2 > v || lambda + 2 > k {
        return Err(Error::Domain(format!(
            "need 2<=k<=v-2, 0<=λ<=k-2; got v={v} k={k} λ={lambda}"
        )));
    }
    Ok(ExactBound(Rational::new(v as i64 + lambda as i64, 2)))
}

/// Whether the `λ + 2` branch of the upper bound can be tight, i.e.
/// `λ = v - 4` and `k = v - 2`.
pub fn upper_bound_lambda_branch_tight(v: u64, k: u64, lambda: u64) -> bool {
    lambda + 4 == v && k + 2 == v
}

/// Lower bound `N_2(Γ,2) >= μ(k - 1 - 3/4 (μ-1)(N(Γ,1) - 2)) + 2`.
pub fn lower_bound_n2(k: u64, mu: u64, n1: u64) -> Result<ExactBound> {
    if mu < 1 || k < 2 {
        return Err(Error::Domain(format!("need μ>=1, k>=2; got k={k} μ={mu}")));
    }
    let (k, mu, n1) = (k as i64, mu as i64, n1 as i64);
    let inner = Rational::from_integer(k - 1) - Rational::new(3 * (mu - 1) * (n1 - 2), 4);
    Ok(ExactBound(
        Rational::from_integer(mu) * inner + Rational::from_integer(2),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct N2Dominance {
    pub applicable: bool,
    /// `Some(N_2 >= N_1)` when applicable.
    pub holds: Option<bool>,
}

/// Premises: no triangles or pentagons, `μ >= 2`, `k >= 1 + 3/4 (μ-1)μ`.
/// Conclusion checked when they hold: `N_2(Γ,2) >= N_1(Γ,2)`.
pub fn n2_dominance_check(
    k: u64,
    mu: u64,
    has_triangle: bool,
    has_pentagon: bool,
    n1_2: u64,
    n2_2: u64,
) -> N2Dominance {
    let threshold = Rational::from_integer(1) + Rational::new(3 * (mu as i64 - 1) * mu as i64, 4);
    let applicable = !has_triangle && !has_pentagon && mu >= 2 && Rational::from_integer(k as i64) >= threshold;
    N2Dominance {
        applicable,
        holds: applicable.then_some(n2_2 >= n1_2),
    }
}
