use std::fmt;

use gonal_slope_core::bounds::{self, BoundResult, CaseTag, ScenarioSpec};
use gonal_slope_core::chow::SurfaceModel;
use gonal_slope_core::chern::BundleData;
use gonal_slope_core::grr::{self, CoverData};
use gonal_slope_core::ratcalc::Rat;
use gonal_slope_core::slope::{self, FibrationInvariants};
use gonal_slope_core::verify::{self, SuiteConfig};
use gonal_slope_core::Error;
use rayon::prelude::*;

use crate::args::{ScenarioArgs, SlopeArgs, VerifyArgs};
use crate::output::{Cell, Format, Report, Table};
use crate::scenario::{parse_grid, GenusRange, ScenarioFile};

pub const EXIT_INPUT: u8 = 1;
pub const EXIT_VERIFY: u8 = 2;
pub const EXIT_ZERO_CHI: u8 = 3;

/// Environment variable capping sweep parallelism.
pub const THREADS_ENV: &str = "GONAL_SLOPE_THREADS";

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
    /// Output produced before the failure, printed to stdout.
    pub output: Option<Report>,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: message.into(), output: None }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e == Error::ZeroChi { EXIT_ZERO_CHI } else { EXIT_INPUT };
        CliError { code, message: e.to_string(), output: None }
    }
}

/// A rendered command result and any format requested by a scenario file.
pub struct Outcome {
    pub report: Report,
    pub format: Option<Format>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, format: None }
    }
}

fn range_label(in_range: bool) -> &'static str {
    if in_range {
        "ok"
    } else {
        "out-of-range"
    }
}

/// Errors below the minimum genus unless overridden; returns whether `g`
/// is in range.
fn check_genus(n: u32, g: i64, allow: bool) -> Result<bool, CliError> {
    let Some(min) = grr::min_genus(n) else { return Ok(true) };
    if g >= min {
        return Ok(true);
    }
    if allow {
        log::warn!("g = {g} is below the minimum {min} for degree {n}; computing anyway");
        return Ok(false);
    }
    Err(CliError::input(format!(
        "g = {g} is below the minimum {min} for degree {n} (pass --allow-out-of-range to compute anyway)"
    )))
}

fn invariants_table(name: &'static str, inv: &FibrationInvariants<Rat>) -> Result<Table, CliError> {
    let m = slope::moduli_conversion(inv)?;
    let mut t = Table::quantities(name);
    t.exact("K_f^2", &inv.kf2);
    t.exact("chi_f", &inv.chif);
    t.exact("slope", &inv.slope);
    t.exact("s_B", &m.s_b);
    t.exact("delta.B", &m.delta_b);
    t.exact("lambda.B", &m.lambda_b);
    Ok(t)
}

pub fn cmd_slope(a: &SlopeArgs) -> Result<Outcome, CliError> {
    let in_range = check_genus(a.n, a.g, a.allow_out_of_range)?;
    if a.n < 2 {
        return Err(CliError::input(format!("--n {} must be at least 2", a.n)));
    }
    let g = Rat::from_int(a.g);
    let (s, t) = (Rat::from_int(a.s as i64), Rat::from_int(a.t as i64));
    let need = |v: &Option<Rat>, flag: &str| {
        v.clone().ok_or_else(|| CliError::input(format!("degree {} needs {flag}", a.n)))
    };
    if a.n != 4 && a.s > 0 {
        return Err(CliError::input("--s applies to degree 4 only"));
    }
    if a.rsq.is_some() && a.s + a.t > 0 {
        return Err(CliError::input("--rsq selects the unblown general formula; drop --s/--t"));
    }
    let (inv, formula) = match (a.n, &a.rsq) {
        (_, Some(rsq)) => {
            let c2 = a.c2.clone().or_else(|| a.c2e.clone());
            let c2 = need(&c2, "--c2 (or --c2e)")?;
            (slope::slope_general(&g, a.n, &a.c1sq, &c2, rsq)?, "general")
        }
        (3, None) => {
            let c2 = need(&a.c2, "--c2")?;
            if a.t > 0 {
                (slope::slope_trigonal_blowup(&g, &a.c1sq, &c2, &t)?, "trigonal blown-up")
            } else {
                (slope::slope_trigonal(&g, &a.c1sq, &c2)?, "trigonal")
            }
        }
        (4, None) => {
            let c2e = need(&a.c2e.clone().or_else(|| a.c2.clone()), "--c2e")?;
            let c2f = need(&a.c2f, "--c2f")?;
            if a.s + a.t > 0 {
                (slope::slope_fourgonal_blowup(&g, &a.c1sq, &c2e, &c2f, &s, &t)?, "fourgonal blown-up")
            } else {
                (slope::slope_fourgonal(&g, &a.c1sq, &c2e, &c2f)?, "fourgonal")
            }
        }
        (n, None) => return Err(CliError::input(format!("degree {n} needs --rsq and --c2"))),
    };
    let mut table = invariants_table("slope", &inv)?;
    table.info("formula", Cell::text(formula));
    table.info("genus", Cell::text(range_label(in_range)));
    if let Some(b) = a.b {
        check_base_genus(a, b, &inv)?;
        table.info("base genus check", Cell::text(format!("b={b} agrees")));
    }
    Ok(Report::single(table).into())
}

/// Recomputes the invariants through intersection numbers on the ruled
/// surface of base genus `b` and compares.
fn check_base_genus(a: &SlopeArgs, b: u64, inv: &FibrationInvariants<Rat>) -> Result<(), CliError> {
    if a.s + a.t > 0 {
        return Err(CliError::input("--b is supported for unblown models only"));
    }
    let two = Rat::from_int(2);
    let (c2, rsq) = match (a.n, &a.rsq) {
        (_, Some(rsq)) => (a.c2.clone().or_else(|| a.c2e.clone()), rsq.clone()),
        (3, None) => {
            let c2 = a.c2.clone().expect("checked by caller");
            (Some(c2.clone()), &two * &a.c1sq - Rat::from_int(3) * c2)
        }
        _ => {
            let c2e = a.c2e.clone().or_else(|| a.c2.clone()).expect("checked by caller");
            let c2f = a.c2f.clone().expect("checked by caller");
            (Some(c2e.clone()), &two * &a.c1sq - Rat::from_int(4) * c2e + c2f)
        }
    };
    let c2 = c2.expect("checked by caller");
    let m = SurfaceModel::ruled(b);
    let c1 = grr::c1_decomposition(a.g, a.n, &a.c1sq, m)?;
    let e = BundleData::new(a.n - 1, c1, c2)?;
    let cd = CoverData::new(a.n, a.g, m, e, Some(rsq))?;
    let via = slope::invariants_via_intersection(&cd)?;
    if &via != inv {
        return Err(CliError {
            code: EXIT_VERIFY,
            message: format!(
                "intersection route at b = {b} gives K_f^2 = {}, chi_f = {}; closed form gives {}, {}",
                via.kf2, via.chif, inv.kf2, inv.chif
            ),
            output: None,
        });
    }
    Ok(())
}

/// Scenario-file values overlaid with command-line flags.
fn resolve(a: &ScenarioArgs) -> Result<ScenarioFile, CliError> {
    let mut f = match &a.scenario {
        Some(path) => ScenarioFile::load(path).map_err(CliError::input)?,
        None => ScenarioFile::default(),
    };
    f.degree = a.n.or(f.degree);
    f.genus = a.g.or(f.genus);
    if let Some(r) = &a.g_range {
        f.genus_range = Some(r.parse::<GenusRange>().map_err(CliError::input)?);
    }
    if a.case.is_some() {
        f.case = a.case.clone();
    }
    f.gamma = a.gamma.or(f.gamma);
    f.s = a.s.or(f.s);
    f.t = a.t.or(f.t);
    if let Some(grid) = &a.c1sq_grid {
        f.c1sq_grid = Some(parse_grid(grid).map_err(CliError::input)?);
    }
    Ok(f)
}

fn need<T: Clone>(v: &Option<T>, what: &str) -> Result<T, CliError> {
    v.clone().ok_or_else(|| CliError::input(format!("missing {what}")))
}

/// Parses the case name; `general` picks the parity of `g`.
fn case_tag(name: &str, gamma: Option<i64>, g: i64) -> Result<CaseTag, CliError> {
    if name.eq_ignore_ascii_case("general") {
        if gamma.is_some() {
            return Err(CliError::input("gamma only applies to the factorizing case"));
        }
        return Ok(CaseTag::general_for(g));
    }
    Ok(CaseTag::parse(name, gamma)?)
}

fn single_spec(f: &ScenarioFile, allow: bool) -> Result<(ScenarioSpec, bool), CliError> {
    let n = need(&f.degree, "--n (or `degree` in the scenario file)")?;
    let g = need(&f.genus, "--g (or `genus` in the scenario file)")?;
    let name = need(&f.case, "--case (or `case` in the scenario file)")?;
    let case = case_tag(&name, f.gamma, g)?;
    let spec = ScenarioSpec::new(n, g, case).with_blowups(f.s.unwrap_or(0), f.t.unwrap_or(0));
    spec.validate()?;
    let in_range = check_genus(n, g, allow)?;
    Ok((spec, in_range))
}

fn formula_cell(f: &Option<gonal_slope_core::ratcalc::RatFunc>) -> Cell {
    f.as_ref().map_or(Cell::Missing, |f| Cell::text(f.display_in("g")))
}

fn exact_or_missing(t: &mut Table, quantity: &str, v: &Option<Rat>) {
    match v {
        Some(r) => t.exact(quantity, r),
        None => t.info(quantity, Cell::Missing),
    }
}

pub fn cmd_bound(a: &ScenarioArgs) -> Result<Outcome, CliError> {
    let f = resolve(a)?;
    let (spec, in_range) = single_spec(&f, a.allow_out_of_range)?;
    let res = bounds::compare(&spec, &[])?;
    let sample = res.samples.first().cloned().ok_or_else(|| CliError::input("bound has a pole at g"))?;
    let g = spec.genus;
    let mut t = Table::quantities("bound");
    t.info("scenario", Cell::text(spec.to_string()));
    t.info("genus", Cell::text(range_label(in_range)));
    let splitting = match bounds::splitting_for_scenario(&spec)? {
        Some(st) => format!("alpha={} beta={}", st.alpha(), st.beta()),
        None => "none (index bound)".into(),
    };
    t.info("splitting type", Cell::text(splitting));
    t.exact("c2 coefficient", &res.c2_coefficient);
    t.info("c2 coefficient law", Cell::text(res.c2_coefficient_law.display_in("g")));
    t.exact("c2 correction", &res.correction);
    t.info("strict", Cell::Bool(res.strict));
    t.info("derived", Cell::text(res.derived_bound.display_in("g")));
    t.exact(&format!("derived at g={g}"), &sample.derived);
    t.info("stated", formula_cell(&res.stated_bound));
    exact_or_missing(&mut t, &format!("stated at g={g}"), &sample.stated);
    t.info("discrepancy", formula_cell(&res.discrepancy));
    exact_or_missing(&mut t, &format!("discrepancy at g={g}"), &sample.discrepancy);
    t.info("agrees", res.agrees_with_stated().map_or(Cell::Missing, Cell::Bool));
    for (i, step) in res.chain.iter().enumerate() {
        t.info(&format!("step {}", i + 1), Cell::text(step.clone()));
    }
    Ok(Outcome { report: Report::single(t), format: f.format })
}

fn sweep_pool() -> Result<rayon::ThreadPool, CliError> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::input(format!("{THREADS_ENV}={v} is not a positive integer")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::input(format!("thread pool: {e}")))
}

pub fn cmd_sweep(a: &ScenarioArgs) -> Result<Outcome, CliError> {
    let f = resolve(a)?;
    let n = need(&f.degree, "--n (or `degree` in the scenario file)")?;
    let range = match (f.genus_range, f.genus) {
        (Some(r), _) => r,
        (None, Some(g)) => GenusRange { lo: g, hi: g },
        (None, None) => return Err(CliError::input("missing --g-range (or `genus-range` in the scenario file)")),
    };
    let name = need(&f.case, "--case (or `case` in the scenario file)")?;
    let (s, t) = (f.s.unwrap_or(0), f.t.unwrap_or(0));

    let mut specs = Vec::new();
    for g in range.iter() {
        let spec = ScenarioSpec::new(n, g, case_tag(&name, f.gamma, g)?).with_blowups(s, t);
        match spec.validate() {
            Ok(()) => {}
            // wrong parity or gamma out of range for this g: not part of the sweep
            Err(Error::InconsistentScenario(msg)) if n == 3 || n == 4 => {
                log::debug!("skipping g = {g}: {msg}");
                continue;
            }
            Err(e) => return Err(e.into()),
        }
        if !spec.in_genus_range() && !a.allow_out_of_range {
            check_genus(n, g, false)?;
        }
        specs.push(spec);
    }
    if specs.is_empty() {
        return Err(CliError::input(format!("no genus in {}..{} fits case {name}", range.lo, range.hi)));
    }

    let mut derived: Vec<(CaseTag, BoundResult)> = Vec::new();
    for spec in &specs {
        if !derived.iter().any(|(c, _)| *c == spec.case) {
            derived.push((spec.case, bounds::derived_slope_bound(spec)?));
        }
    }
    let reference = slope::harris_stankova_reference(n)?;
    let rows: Vec<Result<Vec<Cell>, Error>> = sweep_pool()?.install(|| {
        specs
            .par_iter()
            .map(|spec| {
                let res = &derived.iter().find(|(c, _)| *c == spec.case).expect("derived above").1;
                let sample = res.sample(spec.genus)?;
                let fref = reference.eval_int(spec.genus)?;
                let opt = |v: Option<Rat>| v.map_or(Cell::Missing, Cell::Exact);
                Ok(vec![
                    Cell::Int(spec.genus),
                    Cell::text(spec.case.to_string()),
                    Cell::Exact(sample.derived.clone()),
                    opt(sample.stated),
                    opt(sample.discrepancy),
                    Cell::Exact(fref),
                    Cell::approx(&sample.derived),
                    Cell::text(range_label(spec.in_genus_range())),
                ])
            })
            .collect()
    });
    let mut table = Table::new(
        "sweep",
        &["g", "case", "derived", "stated", "discrepancy", "reference", "derived_approx", "status"],
    );
    for row in rows {
        table.push(row?);
    }
    Ok(Outcome { report: Report::single(table), format: f.format })
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let mut cfg = SuiteConfig::default();
    if let Some(seed) = a.seed {
        cfg.seed = seed;
    }
    let started = std::time::Instant::now();
    // the suite feeds non-geometric random inputs on purpose; their slope
    // range warnings are noise here
    let level = log::max_level();
    log::set_max_level(level.min(log::LevelFilter::Error));
    let outcomes = verify::run_suite(&cfg);
    log::set_max_level(level);
    log::info!("suite finished in {:.2?}", started.elapsed());
    let mut table = Table::new("verify", &["check", "cases", "status", "detail"]);
    for o in &outcomes {
        table.push(vec![
            Cell::text(o.name.clone()),
            Cell::Int(o.cases as i64),
            Cell::text(if o.passed() { "pass" } else { "FAIL" }),
            o.failure.clone().map_or(Cell::Missing, Cell::Text),
        ]);
    }
    let report = Report::single(table);
    match outcomes.iter().find(|o| !o.passed()) {
        None => Ok(report.into()),
        Some(first) => Err(CliError {
            code: EXIT_VERIFY,
            message: format!(
                "verification failed: {}: {}",
                first.name,
                first.failure.as_deref().unwrap_or_default()
            ),
            output: Some(report),
        }),
    }
}

fn default_grid() -> Vec<Rat> {
    (1..=40).chain([100, 1000, 10_000]).map(Rat::from_int).collect()
}

pub fn cmd_report(a: &ScenarioArgs) -> Result<Outcome, CliError> {
    let f = resolve(a)?;
    let (spec, in_range) = single_spec(&f, a.allow_out_of_range)?;
    let grid = f.c1sq_grid.clone().unwrap_or_else(default_grid);
    let rep = bounds::blowup_bound_report(&spec, &grid)?;

    let mut summary = Table::quantities("summary");
    summary.info("scenario", Cell::text(spec.to_string()));
    summary.info("genus", Cell::text(range_label(in_range)));
    summary.exact("unblown bound", &rep.reference_bound);
    summary.exact("c2 coefficient", &rep.c2_bound.coefficient);
    summary.exact("c2 correction", &rep.c2_bound.correction);
    summary.info("strict", Cell::Bool(rep.c2_bound.strict));
    summary.info("admissible", Cell::text(format!("c1sq > {}", rep.admissibility_threshold)));
    summary.exact("minimum at c1sq", &rep.minimum.0);
    summary.exact("minimum slope", &rep.minimum.1);
    summary.exact("limit", &rep.limit);
    summary.info("approach", Cell::text(format!("from {}", rep.approach)));
    summary.info("points below", Cell::Int(rep.below_count as i64));

    let mut points = Table::new(
        "point",
        &["c1sq", "admissible", "kf2", "chif", "slope", "verdict", "published_form", "slope_approx"],
    );
    for p in &rep.points {
        let opt = |v: &Option<Rat>| v.clone().map_or(Cell::Missing, Cell::Exact);
        points.push(vec![
            Cell::Exact(p.c1sq.clone()),
            Cell::Bool(p.admissible),
            Cell::Exact(p.kf2.clone()),
            Cell::Exact(p.chif.clone()),
            opt(&p.slope),
            p.verdict.map_or(Cell::Missing, |v| Cell::text(v.as_str())),
            opt(&p.published_form),
            p.slope.as_ref().map_or(Cell::Missing, Cell::approx),
        ]);
    }
    Ok(Outcome { report: Report { sections: vec![summary, points], primary: 1 }, format: f.format })
}
