//! Lower bounds for `c2` and the slope lower bounds they imply.
//!
//! A [`ScenarioSpec`] fixes the gonality, genus, case and blow-up counts.
//! The `c2` bound for the case is substituted into the matching slope
//! formula with `c1^2` held at several values, and the result, a rational
//! function of `g`, is compared against the closed form quoted for the case.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::grr;
use crate::ratcalc::{Poly, Rat, RatFunc, Scalar};
use crate::slope;

/// Values of `c1^2` at which derived bounds must agree.
pub const C1SQ_PROBES: [i64; 3] = [1, 14, 1000];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    IndexOnly,
    GeneralOdd,
    GeneralEven,
    NonFactorizing,
    /// The gonal map factors through a double cover of a genus-`gamma` curve.
    Factorizing(i64),
}

impl CaseTag {
    /// Accepts `index-only`, `general-odd`, `general-even`, `nonfactorizing`
    /// and `factorizing` (which needs `gamma`); underscores work too.
    pub fn parse(name: &str, gamma: Option<i64>) -> Result<Self> {
        let tag = match name.replace('_', "-").to_ascii_lowercase().as_str() {
            "index-only" | "index" => CaseTag::IndexOnly,
            "general-odd" => CaseTag::GeneralOdd,
            "general-even" => CaseTag::GeneralEven,
            "nonfactorizing" | "non-factorizing" => CaseTag::NonFactorizing,
            "factorizing" => CaseTag::Factorizing(
                gamma.ok_or_else(|| Error::Parse("case factorizing needs gamma".into()))?,
            ),
            other => return Err(Error::Parse(format!("unknown case `{other}`"))),
        };
        if gamma.is_some() && !matches!(tag, CaseTag::Factorizing(_)) {
            return Err(Error::Parse("gamma only applies to the factorizing case".into()));
        }
        Ok(tag)
    }

    /// The general case matching the parity of `g`.
    pub fn general_for(g: i64) -> Self {
        if g % 2 == 0 {
            CaseTag::GeneralEven
        } else {
            CaseTag::GeneralOdd
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::IndexOnly => "index-only",
            CaseTag::GeneralOdd => "general-odd",
            CaseTag::GeneralEven => "general-even",
            CaseTag::NonFactorizing => "nonfactorizing",
            CaseTag::Factorizing(_) => "factorizing",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Factorizing(gamma) => write!(f, "factorizing(gamma={gamma})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScenarioSpec {
    pub degree: u32,
    pub genus: i64,
    pub case: CaseTag,
    /// Blow-ups at total-ramification points (fourgonal only).
    pub s: u64,
    /// Blow-ups at index-three points.
    pub t: u64,
}

impl ScenarioSpec {
    pub fn new(degree: u32, genus: i64, case: CaseTag) -> Self {
        ScenarioSpec { degree, genus, case, s: 0, t: 0 }
    }

    pub fn with_blowups(self, s: u64, t: u64) -> Self {
        ScenarioSpec { s, t, ..self }
    }

    pub fn is_blown_up(&self) -> bool {
        self.s + self.t > 0
    }

    /// Structural consistency: degree, case, parity, `gamma` range.
    /// The genus lower limit is checked separately by [`Self::in_genus_range`].
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InconsistentScenario(msg));
        let g = self.genus;
        if g < 1 {
            return bad(format!("genus {g} must be positive"));
        }
        match self.degree {
            3 => {
                if matches!(self.case, CaseTag::NonFactorizing | CaseTag::Factorizing(_)) {
                    return bad(format!("case {} needs degree 4", self.case));
                }
                if self.s > 0 {
                    return bad("total-ramification blow-ups need degree 4; use t for degree 3".into());
                }
            }
            4 => {}
            n => return bad(format!("degree {n} is not supported (use 3 or 4)")),
        }
        match self.case {
            CaseTag::GeneralOdd if g % 2 == 0 => bad(format!("general-odd needs odd genus, got {g}")),
            CaseTag::GeneralEven if g % 2 != 0 => bad(format!("general-even needs even genus, got {g}")),
            CaseTag::Factorizing(gamma) if gamma < 1 => bad(format!("gamma = {gamma} must be at least 1")),
            CaseTag::Factorizing(gamma) if 6 * gamma >= g - 3 => {
                bad(format!("gamma = {gamma} must satisfy gamma < (g - 3)/6 at g = {g}"))
            }
            _ => Ok(()),
        }
    }

    /// `g >= 5` for degree 3 and `g >= 10` for degree 4.
    pub fn in_genus_range(&self) -> bool {
        grr::min_genus(self.degree).is_some_and(|m| self.genus >= m)
    }

    /// [`Self::validate`] plus the genus lower limit.
    pub fn validate_in_range(&self) -> Result<()> {
        self.validate()?;
        if !self.in_genus_range() {
            let m = grr::min_genus(self.degree).unwrap_or(0);
            return Err(Error::InconsistentScenario(format!(
                "genus {} is below the minimum {m} for degree {}",
                self.genus, self.degree
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ScenarioSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} g={} {}", self.degree, self.genus, self.case)?;
        if self.is_blown_up() {
            write!(f, " s={} t={}", self.s, self.t)?;
        }
        Ok(())
    }
}

/// Splitting type `(alpha, beta)` of a rank-2 bundle on a general fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplittingType {
    alpha: i64,
    beta: i64,
}

impl SplittingType {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if alpha <= 0 || alpha > beta {
            return Err(Error::Precondition(format!(
                "splitting type needs 0 < alpha <= beta, got ({alpha}, {beta})"
            )));
        }
        Ok(SplittingType { alpha, beta })
    }

    /// Also checks `alpha + beta = g + 2` (trigonal) or `g + 3` with
    /// `alpha >= 4` (fourgonal).
    pub fn for_cover(n: u32, g: i64, alpha: i64, beta: i64) -> Result<Self> {
        let st = SplittingType::new(alpha, beta)?;
        let (sum, min_alpha) = match n {
            3 => (g + 2, 1),
            4 => (g + 3, 4),
            _ => return Err(Error::Precondition(format!("no splitting law for degree {n}"))),
        };
        if alpha + beta != sum || alpha < min_alpha {
            return Err(Error::Precondition(format!(
                "({alpha}, {beta}) is not a degree-{n} splitting type at g = {g}"
            )));
        }
        Ok(st)
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    /// `beta - alpha`.
    pub fn maroni(&self) -> i64 {
        self.beta - self.alpha
    }

    /// `(b1, b2) = (beta - 4, alpha - 4)`.
    pub fn schreyer(&self) -> (i64, i64) {
        (self.beta - 4, self.alpha - 4)
    }
}

/// `alpha / (2 (alpha + beta))`, strict exactly when `alpha < beta`.
pub fn brosius_coefficient<T: Scalar>(alpha: &T, beta: &T) -> Result<T> {
    alpha.try_div(&(T::from_int(2) * (alpha.clone() + beta.clone())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C2Bound {
    pub coefficient: Rat,
    /// Added to `c1^2` before scaling: `0`, `4t` or `9s + 4t`.
    pub correction: Rat,
    pub value: Rat,
    pub strict: bool,
}

/// `c2 >= c1^2 / 4` when `alpha = beta`, `c2 > alpha / (2 (alpha + beta)) c1^2` otherwise.
pub fn weak_positivity_bound(st: &SplittingType, c1sq: &Rat) -> C2Bound {
    let coefficient = brosius_coefficient(&Rat::from_int(st.alpha), &Rat::from_int(st.beta))
        .expect("alpha + beta > 0");
    C2Bound {
        value: &coefficient * c1sq,
        coefficient,
        correction: Rat::zero(),
        strict: st.alpha < st.beta,
    }
}

/// Largest admissible `R^2`, namely `4 c1^2 / n`.
pub fn index_bound(n: u32, c1sq: &Rat) -> Result<Rat> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    (Rat::from_int(4) * c1sq).checked_div(&Rat::from_int(n as i64))
}

/// `c2(E) >= (c1^2 + c2(F)) / 4`.
pub fn c2e_bound_fourgonal(c1sq: &Rat, c2f: &Rat) -> Rat {
    slope::c2e_index_floor(c1sq, c2f).expect("division by four")
}

/// The integral splitting type behind the case, `None` for index-only.
///
/// Nonfactorizing uses the smallest integral `alpha` with `3 alpha >= g + 3`.
pub fn splitting_for_scenario(spec: &ScenarioSpec) -> Result<Option<SplittingType>> {
    spec.validate()?;
    let g = spec.genus;
    let (alpha, beta) = match (spec.degree, spec.case) {
        (_, CaseTag::IndexOnly) => return Ok(None),
        (3, CaseTag::GeneralOdd) => ((g + 1) / 2, (g + 3) / 2),
        (3, CaseTag::GeneralEven) => ((g + 2) / 2, (g + 2) / 2),
        (4, CaseTag::GeneralOdd) => ((g + 3) / 2, (g + 3) / 2),
        (4, CaseTag::GeneralEven) => ((g + 2) / 2, (g + 4) / 2),
        (4, CaseTag::NonFactorizing) => {
            let alpha = (g + 3 + 2) / 3;
            (alpha, g + 3 - alpha)
        }
        (4, CaseTag::Factorizing(gamma)) => (2 * gamma + 2, g + 1 - 2 * gamma),
        _ => unreachable!("rejected by validate"),
    };
    SplittingType::for_cover(spec.degree, g, alpha, beta).map(Some)
}

/// A `c2` lower-bound coefficient as a function of `g`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientLaw {
    pub coefficient: RatFunc,
    pub strict: bool,
    /// Which bound produced the coefficient.
    pub source: String,
}

fn lin(c0: i64, c1: i64, den: i64) -> RatFunc {
    RatFunc::from_polys(&[c0, c1], &[den]).expect("nonzero literal")
}

/// `(alpha, beta)` as functions of `g`. Nonfactorizing uses the rational
/// floor `alpha = (g + 3) / 3`; fourgonal index-only uses `alpha = 4`.
pub fn symbolic_splitting(degree: u32, case: CaseTag) -> Option<(RatFunc, RatFunc)> {
    let pair = match (degree, case) {
        (3, CaseTag::GeneralOdd) => (lin(1, 1, 2), lin(3, 1, 2)),
        (3, CaseTag::GeneralEven) => (lin(2, 1, 2), lin(2, 1, 2)),
        (4, CaseTag::GeneralOdd) => (lin(3, 1, 2), lin(3, 1, 2)),
        (4, CaseTag::GeneralEven) => (lin(2, 1, 2), lin(4, 1, 2)),
        (4, CaseTag::NonFactorizing) => (lin(3, 1, 3), lin(6, 2, 3)),
        (4, CaseTag::Factorizing(gamma)) => (RatFunc::int(2 * gamma + 2), lin(1 - 2 * gamma, 1, 1)),
        (4, CaseTag::IndexOnly) => (RatFunc::int(4), lin(-1, 1, 1)),
        _ => return None,
    };
    Some(pair)
}

/// Coefficient `k(g)` in `c2 >= k(g) c1^2` (trigonal) or
/// `c2(F) >= k(g) c1^2` (fourgonal) for the case.
pub fn c2_coefficient_law(degree: u32, case: CaseTag) -> Result<CoefficientLaw> {
    if degree == 3 && case == CaseTag::IndexOnly {
        // 2 c1^2 - 3 c2 = R^2 <= (4/3) c1^2
        let max_rsq = index_bound(3, &Rat::one())?;
        let k = (Rat::from_int(2) - max_rsq).checked_div(&Rat::from_int(3))?;
        return Ok(CoefficientLaw {
            coefficient: RatFunc::constant(k),
            strict: false,
            source: "index bound R^2 <= 4 c1^2 / 3 with R^2 = 2 c1^2 - 3 c2".into(),
        });
    }
    let (alpha, beta) = symbolic_splitting(degree, case).ok_or_else(|| {
        Error::InconsistentScenario(format!("case {case} is not defined for degree {degree}"))
    })?;
    let gap = &beta - &alpha;
    let strict = match gap.as_constant() {
        Some(c) => c.is_positive(),
        None => gap.eventual_sign() == Ordering::Greater,
    };
    let coefficient = brosius_coefficient(&alpha, &beta)?;
    let source = format!(
        "weak positivity with (alpha, beta) = ({}, {})",
        alpha.display_in("g"),
        beta.display_in("g")
    );
    Ok(CoefficientLaw { coefficient, strict, source })
}

/// The `c2` (trigonal) or `c2(F)` (fourgonal) bound on the blown-up model:
/// `coefficient * (c1^2 + correction)` with correction `4t` or `9s + 4t`.
/// Trigonal index-only keeps `(2/9) c1^2` with no correction.
pub fn c2_bounds_blowup(spec: &ScenarioSpec, c1sq: &Rat) -> Result<C2Bound> {
    spec.validate()?;
    let law = c2_coefficient_law(spec.degree, spec.case)?;
    let coefficient = law.coefficient.eval_int(spec.genus)?;
    let (s, t) = (Rat::from_int(spec.s as i64), Rat::from_int(spec.t as i64));
    let correction = match (spec.degree, spec.case) {
        (3, CaseTag::IndexOnly) => Rat::zero(),
        (3, _) => Rat::from_int(4) * t,
        _ => Rat::from_int(9) * s + Rat::from_int(4) * t,
    };
    Ok(C2Bound {
        value: &coefficient * &(c1sq + &correction),
        coefficient,
        correction,
        strict: law.strict,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundSample {
    pub genus: i64,
    pub derived: Rat,
    pub stated: Option<Rat>,
    pub discrepancy: Option<Rat>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub spec: ScenarioSpec,
    /// `c2` (trigonal) or `c2(F)` (fourgonal) coefficient at the scenario genus.
    pub c2_coefficient: Rat,
    pub c2_coefficient_law: RatFunc,
    /// Added to `c1^2` in the blown-up `c2` bound; zero when unblown.
    pub correction: Rat,
    pub strict: bool,
    pub derived_bound: RatFunc,
    pub stated_bound: Option<RatFunc>,
    /// `stated - derived`.
    pub discrepancy: Option<RatFunc>,
    /// Human-readable derivation steps.
    pub chain: Vec<String>,
    pub samples: Vec<BoundSample>,
}

impl BoundResult {
    pub fn derived_at(&self, g: i64) -> Result<Rat> {
        self.derived_bound.eval_int(g)
    }

    pub fn sample(&self, g: i64) -> Result<BoundSample> {
        let stated = self.stated_bound.as_ref().map(|f| f.eval_int(g)).transpose()?;
        let discrepancy = self.discrepancy.as_ref().map(|f| f.eval_int(g)).transpose()?;
        Ok(BoundSample { genus: g, derived: self.derived_at(g)?, stated, discrepancy })
    }

    pub fn agrees_with_stated(&self) -> Option<bool> {
        self.discrepancy.as_ref().map(RatFunc::is_zero)
    }
}

fn substituted_slope(degree: u32, law: &RatFunc, c1sq: &Rat) -> Result<RatFunc> {
    let g = RatFunc::var();
    let c = RatFunc::constant(c1sq.clone());
    let c2 = law * &c;
    match degree {
        3 => Ok(slope::slope_trigonal(&g, &c, &c2)?.slope),
        4 => {
            let c2e = slope::c2e_index_floor(&c, &c2)?;
            let direct = slope::slope_fourgonal(&g, &c, &c2e, &c2)?.slope;
            let rearranged = slope::fourgonal_formulaslope(&g, &c, &c2)?;
            if direct != rearranged {
                return Err(Error::Precondition(
                    "fourgonal slope routes disagree after substitution".into(),
                ));
            }
            Ok(direct)
        }
        n => Err(Error::InconsistentScenario(format!("degree {n} is not supported"))),
    }
}

/// Substitutes the case's `c2` bounds into the slope formula at each of
/// [`C1SQ_PROBES`] and checks that `c1^2` cancels.
///
/// For blown-up scenarios the returned bound is the unblown (`s = t = 0`)
/// one; [`blowup_bound_report`] handles the blown-up comparison.
pub fn derived_slope_bound(spec: &ScenarioSpec) -> Result<BoundResult> {
    spec.validate()?;
    let law = c2_coefficient_law(spec.degree, spec.case)?;
    let mut chain = Vec::new();
    let mut derived: Option<RatFunc> = None;
    for probe in C1SQ_PROBES {
        let f = substituted_slope(spec.degree, &law.coefficient, &Rat::from_int(probe))?;
        match &derived {
            None => derived = Some(f),
            Some(first) if *first != f => {
                return Err(Error::C1sqDependence(format!(
                    "{spec}: c1^2 = {} gives {} but c1^2 = {probe} gives {}",
                    C1SQ_PROBES[0],
                    first.display_in("g"),
                    f.display_in("g")
                )))
            }
            Some(_) => {}
        }
    }
    let derived = derived.expect("probe list is nonempty");
    let rel = if law.strict { ">" } else { ">=" };
    let index_step = match spec.degree {
        3 => "R^2 <= 4 c1^2 / 3 (index bound)".to_string(),
        _ => "c2(E) >= (c1^2 + c2(F)) / 4 (index bound with R^2 = 2 c1^2 - 4 c2(E) + c2(F))".to_string(),
    };
    let bounded = if spec.degree == 3 { "c2" } else { "c2(F)" };
    chain.push(index_step);
    chain.push(format!("{bounded} {rel} ({}) c1^2 from {}", law.coefficient.display_in("g"), law.source));
    chain.push(format!(
        "substituted into the slope formula: c1^2 cancels at c1^2 in {C1SQ_PROBES:?}, bound {}",
        derived.display_in("g")
    ));
    if spec.is_blown_up() {
        chain.push("blow-ups ignored here; see the blow-up report for s, t > 0".into());
    }
    let stated = stated_closed_form(spec);
    let discrepancy = stated.as_ref().map(|s| s - &derived);
    let (s, t) = (Rat::from_int(spec.s as i64), Rat::from_int(spec.t as i64));
    let correction = match (spec.degree, spec.case) {
        (3, CaseTag::IndexOnly) => Rat::zero(),
        (3, _) => Rat::from_int(4) * t,
        _ => Rat::from_int(9) * s + Rat::from_int(4) * t,
    };
    Ok(BoundResult {
        spec: *spec,
        c2_coefficient: law.coefficient.eval_int(spec.genus)?,
        c2_coefficient_law: law.coefficient,
        correction,
        strict: law.strict,
        derived_bound: derived,
        stated_bound: stated,
        discrepancy,
        chain,
        samples: Vec::new(),
    })
}

/// The closed form quoted for the case, transcribed as written.
pub fn stated_closed_form(spec: &ScenarioSpec) -> Option<RatFunc> {
    let c = |r: Rat| RatFunc::constant(r);
    let q = |p, d| Rat::new(p, d).expect("literal");
    let f = match (spec.degree, spec.case) {
        (3, CaseTag::IndexOnly) => RatFunc::from_polys(&[-24, 24], &[1, 5]).ok()?,
        // 5 - 8 / (g + 1)
        (3, CaseTag::GeneralOdd) => &RatFunc::int(5) - &RatFunc::from_polys(&[8], &[1, 1]).ok()?,
        // 5 - 6 / g
        (3, CaseTag::GeneralEven) => &RatFunc::int(5) - &RatFunc::from_polys(&[6], &[0, 1]).ok()?,
        (4, CaseTag::IndexOnly) => RatFunc::int(4),
        // 16/3 - 16 / (3 (3g + 1))
        (4, CaseTag::GeneralOdd) => &c(q(16, 3)) - &RatFunc::from_polys(&[16], &[3, 9]).ok()?,
        // 16/3 - 8 / g
        (4, CaseTag::GeneralEven) => &c(q(16, 3)) - &RatFunc::from_polys(&[8], &[0, 1]).ok()?,
        (4, CaseTag::NonFactorizing) => RatFunc::from_polys(&[-24, 24], &[3, 5]).ok()?,
        // 4 + 4 (gamma - 1) / (g - gamma)
        (4, CaseTag::Factorizing(gamma)) => {
            &RatFunc::int(4) + &RatFunc::from_polys(&[4 * (gamma - 1)], &[-gamma, 1]).ok()?
        }
        _ => return None,
    };
    Some(f)
}

/// [`derived_slope_bound`] with samples at the scenario genus and the given
/// extra genera.
pub fn compare(spec: &ScenarioSpec, extra_genera: &[i64]) -> Result<BoundResult> {
    let mut result = derived_slope_bound(spec)?;
    let mut genera = vec![spec.genus];
    genera.extend_from_slice(extra_genera);
    genera.sort_unstable();
    genera.dedup();
    for g in genera {
        match result.sample(g) {
            Ok(sample) => result.samples.push(sample),
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Below,
    Equal,
    Above,
}

impl Verdict {
    fn of(ord: Ordering) -> Self {
        match ord {
            Ordering::Less => Verdict::Below,
            Ordering::Equal => Verdict::Equal,
            Ordering::Greater => Verdict::Above,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Below => "below",
            Verdict::Equal => "equal",
            Verdict::Above => "above",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridPoint {
    pub c1sq: Rat,
    pub kf2: Rat,
    pub chif: Rat,
    pub admissible: bool,
    /// `None` when `chi_f <= 0`.
    pub slope: Option<Rat>,
    /// Comparison of `slope` against the unblown bound.
    pub verdict: Option<Verdict>,
    /// The fourgonal closed form with `s, t` in the denominator only.
    pub published_form: Option<Rat>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlowupReport {
    pub spec: ScenarioSpec,
    pub c2_bound: C2Bound,
    /// The `s = t = 0` derived bound at the scenario genus.
    pub reference_bound: Rat,
    /// Sorted by `c1sq`, duplicates removed.
    pub points: Vec<GridPoint>,
    /// `(c1sq, slope)` of the smallest admissible slope on the grid.
    pub minimum: (Rat, Rat),
    /// Points with `c1sq > admissibility_threshold` have `chi_f > 0`.
    pub admissibility_threshold: Rat,
    /// Slope as `c1sq -> infinity`.
    pub limit: Rat,
    /// Side from which admissible slopes approach [`Self::limit`].
    pub approach: Verdict,
    pub below_count: usize,
}

/// `(K_f^2, chi_f)` on the blown-up model with the case's `c2` bounds
/// substituted at equality.
pub fn blowup_substituted(spec: &ScenarioSpec, c1sq: &Rat) -> Result<(Rat, Rat)> {
    let bound = c2_bounds_blowup(spec, c1sq)?;
    let g = Rat::from_int(spec.genus);
    let (s, t) = (Rat::from_int(spec.s as i64), Rat::from_int(spec.t as i64));
    match spec.degree {
        3 => slope::trigonal_blowup_raw(&g, c1sq, &bound.value, &t),
        _ => {
            let c2e = c2e_bound_fourgonal(c1sq, &bound.value);
            slope::fourgonal_blowup_raw(&g, c1sq, &c2e, &bound.value, &s, &t)
        }
    }
}

/// Evaluates the blown-up substituted slope at every grid value of `c1^2`
/// and compares it with the unblown bound at the same genus.
pub fn blowup_bound_report(spec: &ScenarioSpec, grid: &[Rat]) -> Result<BlowupReport> {
    spec.validate()?;
    let reference_bound = derived_slope_bound(&ScenarioSpec { s: 0, t: 0, ..*spec })?.derived_at(spec.genus)?;
    let c2_bound = c2_bounds_blowup(spec, &Rat::zero())?;
    let g = Rat::from_int(spec.genus);
    let (s, t) = (Rat::from_int(spec.s as i64), Rat::from_int(spec.t as i64));

    // K_f^2 and chi_f are affine in c1^2.
    let (k0, x0) = blowup_substituted(spec, &Rat::zero())?;
    let (k1, x1) = blowup_substituted(spec, &Rat::one())?;
    let (ka, xa) = (&k1 - &k0, &x1 - &x0);
    if !xa.is_positive() {
        return Err(Error::Precondition(format!("{spec}: chi_f does not grow with c1^2")));
    }
    let admissibility_threshold = (-&x0).checked_div(&xa)?;
    let limit = ka.checked_div(&xa)?;
    let approach = Verdict::of((&k0 - &limit * &x0).signum());

    let mut values = grid.to_vec();
    values.sort();
    values.dedup();
    let mut points = Vec::with_capacity(values.len());
    for c1sq in values {
        let (kf2, chif) = blowup_substituted(spec, &c1sq)?;
        let admissible = chif.is_positive();
        let slope = if admissible { Some(kf2.checked_div(&chif)?) } else { None };
        let verdict = slope.as_ref().map(|v| Verdict::of(v.cmp(&reference_bound)));
        let published_form = if spec.degree == 4 && admissible {
            slope::fourgonal_blowup_lower_form(&g, &c1sq, &c2_bound_at(spec, &c1sq)?, &s, &t).ok()
        } else {
            None
        };
        points.push(GridPoint { c1sq, kf2, chif, admissible, slope, verdict, published_form });
    }
    let minimum = points
        .iter()
        .filter_map(|p| p.slope.as_ref().map(|v| (p.c1sq.clone(), v.clone())))
        .min_by(|a, b| a.1.cmp(&b.1))
        .ok_or(Error::EmptyGrid)?;
    let below_count = points.iter().filter(|p| p.verdict == Some(Verdict::Below)).count();
    Ok(BlowupReport {
        spec: *spec,
        c2_bound,
        reference_bound,
        points,
        minimum,
        admissibility_threshold,
        limit,
        approach,
        below_count,
    })
}

fn c2_bound_at(spec: &ScenarioSpec, c1sq: &Rat) -> Result<Rat> {
    Ok(c2_bounds_blowup(spec, c1sq)?.value)
}

/// `alpha + beta` as a polynomial in `g`, for checking [`symbolic_splitting`].
pub fn splitting_sum_law(degree: u32) -> Option<Poly> {
    match degree {
        3 => Some(Poly::from_ints(&[2, 1])),
        4 => Some(Poly::from_ints(&[3, 1])),
        _ => None,
    }
}
