//! The map `K(x)[y] → Z⊕Z ∪ {∞}` attached to parameters `(m, n, w, α, β)`,
//! parameter validation, lead terms, cancellation scalars and an empirical
//! auditor for the valuation axioms.

use std::fmt;

use num_integer::Integer;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::exactfield::{rat, Degree, ExtInt, Rat, RatFunc, UniPoly};
use crate::valgroup::{commensurable, is_indivisible, ExtValue, ValuePair};
use crate::ypoly::{WExpansion, YPoly, YPolyError};

/// Upper bound on `m` and `n`.
pub const MAX_DEGREE_PARAM: usize = 1 << 12;
/// Upper bound on the absolute value of each component of `α` and `β`.
pub const MAX_BASIS_COMPONENT: i64 = 1 << 20;

/// One failed hypothesis of a parameter bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecViolation {
    /// Parameters too large for exact `i64` values; no other check runs.
    OutOfRange,
    NonPositiveDegree { m: usize, n: usize },
    NotCoprime { m: usize, n: usize },
    WNotMonic,
    WDegreeMismatch { m: usize, deg_y: Degree },
    ZeroBasis,
    AlphaNotNegative(ValuePair),
    AlphaDivisible(ValuePair),
    BetaDivisible(ValuePair),
    Commensurable(ValuePair, ValuePair),
    /// `β > mnα` fails.
    BetaNotAboveMnAlpha { beta: ValuePair, mn_alpha: ValuePair },
    /// `v(w_k) > (m−k)nα` fails for this `k`.
    MiddleCoefficientTooLow { k: usize },
    /// `v(w₀) = mnα` fails, i.e. `v_inf(w₀) ≠ −n`.
    ConstantCoefficient { v_inf: ExtInt, expected: i64 },
}

impl SpecViolation {
    /// Stable short name used by the CLI and in tests.
    pub fn name(&self) -> &'static str {
        match self {
            SpecViolation::OutOfRange => "parameter-range",
            SpecViolation::NonPositiveDegree { .. } => "positive-degrees",
            SpecViolation::NotCoprime { .. } => "coprime",
            SpecViolation::WNotMonic => "w-monic",
            SpecViolation::WDegreeMismatch { .. } => "w-degree",
            SpecViolation::ZeroBasis => "nonzero-basis",
            SpecViolation::AlphaNotNegative(_) => "alpha-negative",
            SpecViolation::AlphaDivisible(_) => "alpha-indivisible",
            SpecViolation::BetaDivisible(_) => "beta-indivisible",
            SpecViolation::Commensurable(..) => "not-commensurable",
            SpecViolation::BetaNotAboveMnAlpha { .. } => "condition-i",
            SpecViolation::MiddleCoefficientTooLow { .. } => "condition-ii",
            SpecViolation::ConstantCoefficient { .. } => "condition-iii",
        }
    }
}

impl fmt::Display for SpecViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecViolation::OutOfRange => write!(
                f,
                "m, n must not exceed {MAX_DEGREE_PARAM} and alpha, beta components must not exceed {MAX_BASIS_COMPONENT} in absolute value"
            ),
            SpecViolation::NonPositiveDegree { m, n } => {
                write!(f, "m and n must be positive (m={m}, n={n})")
            }
            SpecViolation::NotCoprime { m, n } => write!(f, "gcd(m, n) != 1 (m={m}, n={n})"),
            SpecViolation::WNotMonic => f.write_str("w is not monic in y"),
            SpecViolation::WDegreeMismatch { m, deg_y } => {
                write!(f, "deg_y w = {deg_y}, expected m = {m}")
            }
            SpecViolation::ZeroBasis => f.write_str("alpha and beta must be nonzero"),
            SpecViolation::AlphaNotNegative(a) => write!(f, "alpha = {a} is not negative"),
            SpecViolation::AlphaDivisible(a) => write!(f, "alpha = {a} is divisible"),
            SpecViolation::BetaDivisible(b) => write!(f, "beta = {b} is divisible"),
            SpecViolation::Commensurable(a, b) => {
                write!(f, "alpha = {a} and beta = {b} are commensurable")
            }
            SpecViolation::BetaNotAboveMnAlpha { beta, mn_alpha } => {
                write!(f, "(i) beta = {beta} is not above mn*alpha = {mn_alpha}")
            }
            SpecViolation::MiddleCoefficientTooLow { k } => {
                write!(f, "(ii) v(w_{k}) is not above (m-{k})*n*alpha")
            }
            SpecViolation::ConstantCoefficient { v_inf, expected } => {
                write!(f, "(iii) v_inf(w_0) = {v_inf}, expected {expected}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct SpecError {
    pub violations: Vec<SpecViolation>,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid valuation parameters: ")?;
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "[{}] {v}", v.name())?;
        }
        Ok(())
    }
}

impl SpecError {
    pub fn names(&self) -> Vec<&'static str> {
        self.violations.iter().map(SpecViolation::name).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("operation is undefined for the zero element")]
    ZeroInput,
    #[error("values differ: {0} vs {1}")]
    UnequalValues(ExtValue, ExtValue),
    #[error("value is infinite")]
    InfiniteValue,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error(transparent)]
    Expansion(#[from] YPolyError),
}

/// Hypotheses under which the map is defined: coprime positive `m, n`, monic
/// `w` of `y`-degree `m`, `α` negative, `α, β` indivisible and not
/// commensurable.
fn structural_violations(
    m: usize,
    n: usize,
    w: &YPoly,
    alpha: ValuePair,
    beta: ValuePair,
) -> Vec<SpecViolation> {
    let in_range = |p: ValuePair| p.a.unsigned_abs().max(p.b.unsigned_abs()) <= MAX_BASIS_COMPONENT as u64;
    if m > MAX_DEGREE_PARAM || n > MAX_DEGREE_PARAM || !in_range(alpha) || !in_range(beta) {
        return vec![SpecViolation::OutOfRange];
    }
    let mut out = Vec::new();
    if m == 0 || n == 0 {
        out.push(SpecViolation::NonPositiveDegree { m, n });
    } else if m.gcd(&n) != 1 {
        out.push(SpecViolation::NotCoprime { m, n });
    }
    if !w.is_monic() {
        out.push(SpecViolation::WNotMonic);
    }
    if w.deg_y() != Degree::Finite(m) {
        out.push(SpecViolation::WDegreeMismatch { m, deg_y: w.deg_y() });
    }
    if alpha.is_zero() || beta.is_zero() {
        out.push(SpecViolation::ZeroBasis);
        return out;
    }
    if !alpha.is_negative() {
        out.push(SpecViolation::AlphaNotNegative(alpha));
    }
    if !is_indivisible(alpha).expect("nonzero") {
        out.push(SpecViolation::AlphaDivisible(alpha));
    }
    if !is_indivisible(beta).expect("nonzero") {
        out.push(SpecViolation::BetaDivisible(beta));
    }
    if commensurable(alpha, beta).expect("nonzero") {
        out.push(SpecViolation::Commensurable(alpha, beta));
    }
    out
}

/// Sufficient conditions (i)–(iii) for the map to be multiplicative.
fn multiplicativity_violations(
    m: usize,
    n: usize,
    w: &YPoly,
    alpha: ValuePair,
    beta: ValuePair,
) -> Vec<SpecViolation> {
    let (mi, ni) = (m as i64, n as i64);
    let mut out = Vec::new();
    let mn_alpha = (mi * ni) * alpha;
    if beta <= mn_alpha {
        out.push(SpecViolation::BetaNotAboveMnAlpha { beta, mn_alpha });
    }
    // A coefficient h ∈ K(x) has value −v_inf(h)·m·α; w_k = 0 has value ∞.
    for k in 1..m {
        if let ExtInt::Finite(vi) = w.coeff(k).v_inf() {
            let value = (-vi * mi) * alpha;
            if value <= ((mi - k as i64) * ni) * alpha {
                out.push(SpecViolation::MiddleCoefficientTooLow { k });
            }
        }
    }
    let v0 = w.coeff(0).v_inf();
    let ok = match v0 {
        ExtInt::Finite(vi) => (-vi * mi) * alpha == mn_alpha,
        ExtInt::Infinity => false,
    };
    if !ok {
        out.push(SpecViolation::ConstantCoefficient {
            v_inf: v0,
            expected: -ni,
        });
    }
    out
}

/// A cell `f_{i,j}` of a w-expansion together with its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadTerm {
    pub i: usize,
    pub j: usize,
    pub coeff: RatFunc,
    pub value: ValuePair,
}

/// The map associated to `(m, n, w, α, β)`:
/// `v(f) = min { −v_inf(f_{i,j})·m·α + j·n·α + i·β }` over the nonzero
/// cells of the w-expansion of `f`.
///
/// This carries only the hypotheses needed for the map to be well defined;
/// [`ValuationSpec`] adds the conditions that make it a valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedMap {
    m: usize,
    n: usize,
    w: YPoly,
    alpha: ValuePair,
    beta: ValuePair,
}

impl AssociatedMap {
    pub fn new(
        m: usize,
        n: usize,
        w: YPoly,
        alpha: ValuePair,
        beta: ValuePair,
    ) -> Result<Self, SpecError> {
        let violations = structural_violations(m, n, &w, alpha, beta);
        if !violations.is_empty() {
            return Err(SpecError { violations });
        }
        Ok(AssociatedMap { m, n, w, alpha, beta })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> &YPoly {
        &self.w
    }

    pub fn alpha(&self) -> ValuePair {
        self.alpha
    }

    pub fn beta(&self) -> ValuePair {
        self.beta
    }

    /// `v(x) = m·α`.
    pub fn x_value(&self) -> ValuePair {
        (self.m as i64) * self.alpha
    }

    /// Value of the cell `h·y^j·w^i` for nonzero `h ∈ K(x)`.
    pub fn cell_value(&self, i: usize, j: usize, h: &RatFunc) -> ExtValue {
        match h.v_inf() {
            ExtInt::Infinity => ExtValue::Infinity,
            ExtInt::Finite(vi) => {
                let s = -vi * self.m as i64 + (j * self.n) as i64;
                ExtValue::Finite(s * self.alpha + (i as i64) * self.beta)
            }
        }
    }

    pub fn expand(&self, f: &YPoly) -> WExpansion {
        f.w_expand(&self.w).expect("w is monic of positive degree")
    }

    /// All nonzero cells with their values, in row-major order.
    pub fn cell_values(&self, f: &YPoly) -> Vec<LeadTerm> {
        self.expand(f)
            .cells()
            .map(|(i, j, c)| LeadTerm {
                i,
                j,
                coeff: c.clone(),
                value: self.cell_value(i, j, c).finite().expect("nonzero cell"),
            })
            .collect()
    }

    fn minimal_cell(&self, f: &YPoly) -> Option<LeadTerm> {
        let cells = self.cell_values(f);
        let min = cells.iter().map(|c| c.value).min()?;
        let mut attaining = cells.into_iter().filter(|c| c.value == min);
        let lead = attaining.next().expect("minimum is attained");
        // Distinct cells always have distinct values when gcd(m, n) = 1 and
        // α, β are not commensurable; a tie means corrupted state.
        assert!(
            attaining.next().is_none(),
            "internal error: two expansion cells attain the minimum value {min}"
        );
        Some(lead)
    }

    pub fn value(&self, f: &YPoly) -> ExtValue {
        match self.minimal_cell(f) {
            Some(c) => ExtValue::Finite(c.value),
            None => ExtValue::Infinity,
        }
    }

    /// The unique expansion cell that attains `value(f)`.
    pub fn lead_term(&self, f: &YPoly) -> Result<LeadTerm, ValuationError> {
        self.minimal_cell(f).ok_or(ValuationError::ZeroInput)
    }

    /// The unique `λ ∈ K` with `v(f + λg) > v(f)`, for `v(f) = v(g) ≠ ∞`.
    pub fn cancel_lambda(&self, f: &YPoly, g: &YPoly) -> Result<Rat, ValuationError> {
        let (vf, vg) = (self.value(f), self.value(g));
        if vf != vg {
            return Err(ValuationError::UnequalValues(vf, vg));
        }
        if vf.is_infinite() {
            return Err(ValuationError::InfiniteValue);
        }
        let lf = self.lead_term(f)?;
        let lg = self.lead_term(g)?;
        debug_assert_eq!((lf.i, lf.j), (lg.i, lg.j));
        let rf = lf.coeff.residue_at_inf().expect("nonzero");
        let rg = lg.coeff.residue_at_inf().expect("nonzero");
        Ok(-(rf / rg))
    }

    /// `v(f/g) = v(f) − v(g)`.
    pub fn value_fraction(&self, f: &YPoly, g: &YPoly) -> Result<ExtValue, ValuationError> {
        if g.is_zero() {
            return Err(ValuationError::ZeroDenominator);
        }
        let vg = self.value(g).finite().expect("nonzero");
        Ok(match self.value(f) {
            ExtValue::Infinity => ExtValue::Infinity,
            ExtValue::Finite(vf) => ExtValue::Finite(vf - vg),
        })
    }
}

/// Parameters `(m, n, w, α, β)` for which the associated map is a valuation:
/// the structural hypotheses plus (i) `β > mnα`, (ii) `v(w_k) > (m−k)nα`
/// for every nonzero `w_k` with `1 ≤ k ≤ m−1`, (iii) `v(w₀) = mnα`.
///
/// Only validated bundles can be constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationSpec {
    map: AssociatedMap,
}

impl ValuationSpec {
    pub fn new(
        m: usize,
        n: usize,
        w: YPoly,
        alpha: ValuePair,
        beta: ValuePair,
    ) -> Result<Self, SpecError> {
        let mut violations = structural_violations(m, n, &w, alpha, beta);
        if violations != [SpecViolation::OutOfRange] {
            violations.extend(multiplicativity_violations(m, n, &w, alpha, beta));
        }
        if !violations.is_empty() {
            return Err(SpecError { violations });
        }
        Ok(ValuationSpec {
            map: AssociatedMap { m, n, w, alpha, beta },
        })
    }

    pub fn map(&self) -> &AssociatedMap {
        &self.map
    }
}

impl std::ops::Deref for ValuationSpec {
    type Target = AssociatedMap;
    fn deref(&self) -> &AssociatedMap {
        &self.map
    }
}

/// The two parameter bundles used throughout the examples.
pub mod presets {
    use super::*;

    /// `w = y² + x³`, `α = (−1,−1)`, `β = (0,−1)`; image is `Z≥0α + Z≥0β`.
    pub fn ex52() -> ValuationSpec {
        let w = YPoly::from_terms([(2, RatFunc::one()), (0, RatFunc::x_pow(rat(1), 3))]);
        ValuationSpec::new(2, 3, w, ValuePair::new(-1, -1), ValuePair::new(0, -1))
            .expect("preset is valid")
    }

    /// `w = y² + y/x + x³`, `α = (−1,−1)`, `β = (0,1)`; image is not reversely
    /// well ordered.
    pub fn ex55() -> ValuationSpec {
        ValuationSpec::new(2, 3, ex55_w(), ValuePair::new(-1, -1), ValuePair::new(0, 1))
            .expect("preset is valid")
    }

    pub fn ex55_w() -> YPoly {
        YPoly::from_terms([
            (2, RatFunc::one()),
            (1, RatFunc::x_pow(rat(1), -1)),
            (0, RatFunc::x_pow(rat(1), 3)),
        ])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomKind {
    /// `v(fg) = v(f) + v(g)`
    Multiplicativity,
    /// `v(f ± g) ≥ min(v(f), v(g))`
    Triangle,
    /// `v(f + g) = min(v(f), v(g))` when the values differ
    StrictTriangle,
    /// `v(f + λg) > v(f)` for the computed λ
    LambdaRaises,
    /// no other λ′ raises the value
    LambdaUnique,
    /// `v(p(x)·g) = v(p) + v(g)`
    XScaling,
}

impl AxiomKind {
    pub const ALL: [AxiomKind; 6] = [
        AxiomKind::Multiplicativity,
        AxiomKind::Triangle,
        AxiomKind::StrictTriangle,
        AxiomKind::LambdaRaises,
        AxiomKind::LambdaUnique,
        AxiomKind::XScaling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomKind::Multiplicativity => "multiplicativity",
            AxiomKind::Triangle => "triangle",
            AxiomKind::StrictTriangle => "strict-triangle",
            AxiomKind::LambdaRaises => "lambda-raises",
            AxiomKind::LambdaUnique => "lambda-unique",
            AxiomKind::XScaling => "x-scaling",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub kind: AxiomKind,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub pairs_checked: usize,
    pub lambda_checks: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn count(&self, kind: AxiomKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

struct PairJob {
    f: usize,
    g: usize,
    scale: i64,
    x_factor: RatFunc,
}

fn random_x_factor(rng: &mut ChaCha8Rng) -> RatFunc {
    let deg = rng.gen_range(0..=3);
    let mut coeffs: Vec<Rat> = (0..=deg).map(|_| rat(rng.gen_range(-3..=3))).collect();
    coeffs[deg] = rat(*[-3, -2, -1, 1, 2, 3].choose(rng).expect("nonempty"));
    let p = RatFunc::from(UniPoly::from_coeffs(coeffs));
    if rng.gen_bool(0.5) {
        p
    } else {
        p.recip().expect("nonzero")
    }
}

impl AssociatedMap {
    fn audit_pair(&self, f: &YPoly, g: &YPoly, job: &PairJob) -> (usize, Vec<AxiomViolation>) {
        let mut out = Vec::new();
        let mut lambda_checks = 0;
        let mut flag = |kind: AxiomKind, detail: String| out.push(AxiomViolation { kind, detail });
        let (vf, vg) = (self.value(f), self.value(g));

        let vfg = self.value(&(f * g));
        if vfg != vf + vg {
            flag(
                AxiomKind::Multiplicativity,
                format!("v(({f})*({g})) = {vfg}, expected {}", vf + vg),
            );
        }

        let sum = f + g;
        let diff = f - g;
        let (vs, vd) = (self.value(&sum), self.value(&diff));
        let lower = vf.min(vg);
        for (label, v) in [("+", vs), ("-", vd)] {
            if v < lower {
                flag(
                    AxiomKind::Triangle,
                    format!("v(({f}) {label} ({g})) = {v} < {lower}"),
                );
            }
            if vf != vg && v != lower {
                flag(
                    AxiomKind::StrictTriangle,
                    format!("v(({f}) {label} ({g})) = {v}, expected {lower}"),
                );
            }
        }

        // Build G with v(G) = v(f): c·f plus a tail pushed strictly above v(f)
        // by dividing g by a power of x (each division adds −mα > 0).
        let mut candidates = Vec::new();
        if vf == vg {
            candidates.push(g.clone());
        }
        if let ExtValue::Finite(vf_pair) = vf {
            let step = -self.x_value();
            let mut tail_value = vg.finite().expect("nonzero");
            let mut k = 0i64;
            while tail_value <= vf_pair && k < 64 {
                tail_value = tail_value + step;
                k += 1;
            }
            if tail_value > vf_pair {
                let tail = g.scale(&RatFunc::x_pow(Rat::one(), -k));
                candidates.push(&f.scale_rat(&rat(job.scale)) + &tail);
            }
        }
        for big_g in &candidates {
            let v_big = self.value(big_g);
            if v_big != vf {
                flag(
                    AxiomKind::StrictTriangle,
                    format!("constructed partner has value {v_big}, expected {vf}"),
                );
                continue;
            }
            lambda_checks += 1;
            let lambda = self.cancel_lambda(f, big_g).expect("values agree");
            let raised = self.value(&(f + &big_g.scale_rat(&lambda)));
            if raised <= vf {
                flag(
                    AxiomKind::LambdaRaises,
                    format!("lambda = {lambda} leaves v at {raised} for f = {f}"),
                );
            }
            for other in [&lambda + &Rat::one(), &lambda - &Rat::one(), &lambda * &rat(2)] {
                if other == lambda {
                    continue;
                }
                let v_other = self.value(&(f + &big_g.scale_rat(&other)));
                if v_other > vf {
                    flag(
                        AxiomKind::LambdaUnique,
                        format!("lambda' = {other} also raises v for f = {f}"),
                    );
                }
            }
        }

        let p = YPoly::constant(job.x_factor.clone());
        let vp = self.value(&p);
        let vpg = self.value(&(&p * g));
        if vpg != vp + vg {
            flag(
                AxiomKind::XScaling,
                format!("v(({}) * ({g})) = {vpg}, expected {}", job.x_factor, vp + vg),
            );
        }
        (lambda_checks, out)
    }

    /// Audits the valuation axioms on pairs drawn from `corpus`.
    ///
    /// When the corpus has at most `pair_budget` unordered pairs they are all
    /// checked; otherwise `pair_budget` pairs are sampled with `seed`. Zero
    /// elements of the corpus are skipped. Violations are reported, never
    /// raised.
    pub fn check_axioms(&self, corpus: &[YPoly], pair_budget: usize, seed: u64) -> AxiomReport {
        let items: Vec<&YPoly> = corpus.iter().filter(|f| !f.is_zero()).collect();
        let n = items.len();
        if n == 0 || pair_budget == 0 {
            return AxiomReport::default();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all_pairs = n * (n + 1) / 2;
        let index_pairs: Vec<(usize, usize)> = if all_pairs <= pair_budget {
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
        } else {
            (0..pair_budget)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect()
        };
        let jobs: Vec<PairJob> = index_pairs
            .into_iter()
            .map(|(f, g)| PairJob {
                f,
                g,
                scale: *[-3, -2, -1, 1, 2, 3].choose(&mut rng).expect("nonempty"),
                x_factor: random_x_factor(&mut rng),
            })
            .collect();
        let results: Vec<(usize, Vec<AxiomViolation>)> = jobs
            .par_iter()
            .map(|job| self.audit_pair(items[job.f], items[job.g], job))
            .collect();
        let mut report = AxiomReport {
            pairs_checked: jobs.len(),
            ..AxiomReport::default()
        };
        for (checks, violations) in results {
            report.lambda_checks += checks;
            report.violations.extend(violations);
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::presets::{ex52, ex55, ex55_w};
    use super::*;

    fn vp(a: i64, b: i64) -> ValuePair {
        ValuePair::new(a, b)
    }

    fn fin(a: i64, b: i64) -> ExtValue {
        ExtValue::Finite(vp(a, b))
    }

    fn xpow(k: usize) -> YPoly {
        YPoly::monomial(rat(1), k, 0)
    }

    fn ypow(k: usize) -> YPoly {
        YPoly::monomial(rat(1), 0, k)
    }

    fn f0() -> YPoly {
        &ypow(2) + &xpow(3)
    }

    #[test]
    fn presets_construct() {
        assert_eq!(ex55().m(), 2);
        assert_eq!(ex52().beta(), vp(0, -1));
    }

    #[test]
    fn rejects_condition_iii() {
        let w = &ypow(2) + &xpow(2);
        let err = ValuationSpec::new(2, 3, w, vp(-1, -1), vp(0, 1)).unwrap_err();
        assert_eq!(err.names(), vec!["condition-iii"]);
    }

    #[test]
    fn rejection_lists_every_violation() {
        let w = ypow(3).scale_rat(&rat(2));
        let err = ValuationSpec::new(2, 4, w, vp(-2, -2), vp(1, 1)).unwrap_err();
        let names = err.names();
        for expected in [
            "coprime",
            "w-monic",
            "w-degree",
            "alpha-indivisible",
            "not-commensurable",
            "condition-iii",
        ] {
            assert!(names.contains(&expected), "{expected} missing from {names:?}");
        }
    }

    #[test]
    fn rejects_oversized_parameters() {
        let err = ValuationSpec::new(2, 3, f0(), vp(i64::MIN, -1), vp(0, 1)).unwrap_err();
        assert_eq!(err.names(), vec!["parameter-range"]);
        let err = ValuationSpec::new(2, usize::MAX, f0(), vp(-1, -1), vp(0, 1)).unwrap_err();
        assert_eq!(err.names(), vec!["parameter-range"]);
    }

    #[test]
    fn example55_values() {
        let s = ex55();
        assert_eq!(s.value(&YPoly::x()), fin(-2, -2));
        assert_eq!(s.value(&YPoly::y()), fin(-3, -3));
        assert_eq!(s.value(&YPoly::zero()), ExtValue::Infinity);
        assert_eq!(s.value(&f0()), fin(-1, -1));
        assert_eq!(s.value(&ex55_w()), fin(0, 1));
        assert_eq!(s.value(&ypow(4)), fin(-12, -12));
    }

    #[test]
    fn lead_term_examples() {
        let s = ex55();
        let lt = s.lead_term(&ex55_w()).unwrap();
        assert_eq!((lt.i, lt.j, lt.coeff), (1, 0, RatFunc::one()));
        let lt = s.lead_term(&ypow(2)).unwrap();
        assert_eq!((lt.i, lt.j), (0, 0));
        assert_eq!(lt.coeff, RatFunc::x_pow(rat(-1), 3));
        assert_eq!(lt.value, vp(-6, -6));
        let lt = s.lead_term(&ypow(4)).unwrap();
        assert_eq!((lt.i, lt.j), (0, 0));
        assert_eq!(lt.coeff, &RatFunc::x_pow(rat(-1), 1) + &RatFunc::x_pow(rat(1), 6));
        assert_eq!(s.lead_term(&YPoly::zero()), Err(ValuationError::ZeroInput));
    }

    #[test]
    fn cancel_lambda_examples() {
        let s = ex55();
        let minus_x3 = xpow(3).scale_rat(&rat(-1));
        let lambda = s.cancel_lambda(&ypow(2), &minus_x3).unwrap();
        assert_eq!(lambda, rat(-1));
        let raised = &ypow(2) + &minus_x3.scale_rat(&lambda);
        assert_eq!(s.value(&raised), fin(-1, -1));

        assert_eq!(s.cancel_lambda(&f0(), &f0()).unwrap(), rat(-1));
        let two_x = xpow(1).scale_rat(&rat(2));
        assert_eq!(
            s.cancel_lambda(&xpow(1), &two_x).unwrap(),
            crate::exactfield::ratio(-1, 2)
        );
        assert!(matches!(
            s.cancel_lambda(&xpow(1), &ypow(1)),
            Err(ValuationError::UnequalValues(..))
        ));
        assert_eq!(
            s.cancel_lambda(&YPoly::zero(), &YPoly::zero()),
            Err(ValuationError::InfiniteValue)
        );
    }

    #[test]
    fn value_fraction_examples() {
        let s = ex55();
        assert_eq!(s.value_fraction(&ypow(1), &xpow(1)), Ok(fin(-1, -1)));
        assert_eq!(s.value_fraction(&YPoly::one(), &xpow(1)), Ok(fin(2, 2)));
        assert_eq!(s.value_fraction(&YPoly::zero(), &xpow(1)), Ok(ExtValue::Infinity));
        assert_eq!(
            s.value_fraction(&YPoly::one(), &YPoly::zero()),
            Err(ValuationError::ZeroDenominator)
        );
    }

    #[test]
    fn audit_of_unit_corpus_is_clean() {
        let r = ex55().check_axioms(&[YPoly::one()], 10, 1);
        assert_eq!(r.pairs_checked, 1);
        assert!(r.is_clean(), "{:?}", r.violations);
    }

    #[test]
    fn audit_flags_non_multiplicative_map() {
        // Well-defined map, but v(w₀) ≠ mnα so it is not multiplicative:
        // v(y²) = (−4,−4) while 2·v(y) = (−6,−6).
        let bad = AssociatedMap::new(2, 3, &ypow(2) + &xpow(2), vp(-1, -1), vp(0, 1)).unwrap();
        assert_eq!(bad.value(&ypow(2)), fin(-4, -4));
        let corpus = [ypow(1), xpow(1), f0()];
        let r = bad.check_axioms(&corpus, 100, 3);
        assert!(r.count(AxiomKind::Multiplicativity) >= 1);
    }

    #[test]
    #[should_panic(expected = "internal error")]
    fn minimizer_tie_is_an_internal_error() {
        // Bypasses validation: commensurable α, β make cells collide.
        let broken = AssociatedMap {
            m: 1,
            n: 1,
            w: YPoly::y(),
            alpha: vp(-1, 0),
            beta: vp(-1, 0),
        };
        // x + y = x·w⁰ + 1·w¹: both cells are valued (−1,0).
        let f = &YPoly::x() + &YPoly::y();
        broken.value(&f);
    }
}
