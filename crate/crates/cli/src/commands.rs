//! One runner per subcommand. Each returns the verdict, a JSON body and a
//! one-line human summary.

use std::path::Path;

use num_rational::Ratio;
use rayon::prelude::*;
use serde_json::{json, Value};
use tilekit::bricks::{all_separations, construct_separated_tiling, decide_two_bricks, Brick};
use tilekit::cyclic::{
    enumerate_vuza_with, find_complements, is_good_group, is_periodic_subset, CyclicTiling, VuzaOptions,
};
use tilekit::line::{
    decide_tiles_line_cyclotomic, decide_tiles_line_cyclotomic_capped, decide_tiles_line_stategraph,
    period_bound_cyclotomic, CyclotomicOutcome, TilingCertificate1D,
};
use tilekit::planar::{
    covers_exactly_once, decide_tiles_z2_with, generate_aperiodic_tiling, window_periods, LatticeSet2D,
    PlanarConfig, Point,
};
use tilekit::spectral::{
    find_butson, find_spectrum, fuglede_sweep, is_complex_hadamard, is_log_hadamard, power_spectrum_tiling_check,
    spectral_non_tile_z3_5, tiles_group, ButsonMatrix, ComplexMatrix, PhaseMatrix,
};
use tilekit::steinhaus::{positivity_scan, translate_sum, FejerSumFunction};
use tilekit::{cyclotomic_divisors, zero_set_zn, Error, FiniteSetZ, GroupSubset};

use crate::args::*;
use crate::output::{CliError, CliResult, Report, Verdict};

pub const MAX_STATES_ENV: &str = "TILEKIT_MAX_STATES";
/// Window-period search radius for `aperiodic`.
const PERIOD_NORM: i64 = 5;
const MAX_SWEEP_N: u64 = 24;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

pub fn parse_ints(s: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| usage(format!("not an integer: {t:?}"))))
        .collect()
}

pub fn parse_vectors(s: &str) -> CliResult<Vec<Vec<i64>>> {
    s.split(';').map(parse_ints).collect()
}

pub fn parse_points(s: &str) -> CliResult<Vec<Point>> {
    parse_vectors(s)?
        .into_iter()
        .map(|v| match v[..] {
            [x, y] => Ok((x, y)),
            _ => Err(usage(format!("point needs two coordinates: {v:?}"))),
        })
        .collect()
}

pub fn parse_ratio(s: &str) -> CliResult<Ratio<i64>> {
    let bad = || usage(format!("not a rational: {s:?}"));
    let r = match s.trim().split_once('/') {
        Some((p, q)) => {
            let (p, q) = (p.trim().parse::<i64>().map_err(|_| bad())?, q.trim().parse::<i64>().map_err(|_| bad())?);
            if q == 0 {
                return Err(bad());
            }
            Ratio::new(p, q)
        }
        None => Ratio::from_integer(s.trim().parse::<i64>().map_err(|_| bad())?),
    };
    Ok(r)
}

pub fn parse_brick(s: &str) -> CliResult<Brick> {
    let (w, h) = s.split_once(['x', 'X']).ok_or_else(|| usage(format!("brick must look like 1/2x1/3: {s:?}")))?;
    Ok(Brick::new(parse_ratio(w)?, parse_ratio(h)?)?)
}

/// The state cap from `TILEKIT_MAX_STATES`, if set.
pub fn max_states() -> CliResult<Option<u64>> {
    match std::env::var(MAX_STATES_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&s| s >= 1)
            .map(Some)
            .ok_or_else(|| usage(format!("{MAX_STATES_ENV} must be a positive integer"))),
        Err(_) => Ok(None),
    }
}

/// `d` with `Φ_d | A(x)` for `d | n`, `d > 1`, read off the zero set.
fn zn_cyclotomic_divisors(a: &GroupSubset) -> Vec<u64> {
    let n = a.modulus();
    let gcd = |mut x: u64, mut y: u64| {
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x
    };
    let mut d: Vec<u64> = zero_set_zn(a).into_iter().map(|j| n / gcd(j, n)).collect();
    d.sort_unstable();
    d.dedup();
    d
}

pub fn run(command: &Command) -> CliResult<Report> {
    match command {
        Command::TilesZ(a) => tiles_z(a),
        Command::Complements(a) => complements(a),
        Command::Vuza(a) => vuza(a),
        Command::GoodGroup(a) => good_group(a),
        Command::TilesZ2(a) => tiles_z2(a),
        Command::Aperiodic(a) => aperiodic(a),
        Command::Bricks(a) => bricks(a),
        Command::Hadamard(a) => hadamard(a),
        Command::Butson(a) => butson(a),
        Command::Spectral(a) => spectral(a),
        Command::FugledeSweep(a) => fuglede(a),
        Command::Steinhaus(a) => steinhaus(a),
    }
}

fn tiles_z(args: &TilesZArgs) -> CliResult<Report> {
    let tile = FiniteSetZ::new(parse_ints(&args.set)?)?.canonical();
    let d = tile.diameter();
    let cap = match max_states()? {
        Some(s) => args.max_diameter.min(63 - s.leading_zeros() as u64),
        None => args.max_diameter,
    };

    let stategraph = if args.method != Method::Cyclotomic && d <= cap {
        Some(decide_tiles_line_stategraph(&tile, cap)?)
    } else {
        None
    };
    let cyclotomic = if args.method != Method::Stategraph {
        Some(match args.max_period {
            Some(m) => decide_tiles_line_cyclotomic_capped(&tile, m),
            None => match decide_tiles_line_cyclotomic(&tile) {
                Some(c) => CyclotomicOutcome::Tiles(c),
                None => CyclotomicOutcome::DoesNotTile,
            },
        })
    } else {
        None
    };

    let mut unknown_reason = None;
    let answer: Option<Option<TilingCertificate1D>> = match (&stategraph, &cyclotomic) {
        (Some(sg), Some(CyclotomicOutcome::Tiles(c))) if sg.as_ref() != Some(c) => {
            return Err(CliError::Internal(format!("deciders disagree on {tile}")));
        }
        (Some(None), Some(CyclotomicOutcome::Tiles(_))) | (Some(Some(_)), Some(CyclotomicOutcome::DoesNotTile)) => {
            return Err(CliError::Internal(format!("deciders disagree on {tile}")));
        }
        (Some(sg), _) => Some(sg.clone()),
        (None, Some(CyclotomicOutcome::Tiles(c))) => Some(Some(c.clone())),
        (None, Some(CyclotomicOutcome::DoesNotTile)) => Some(None),
        (None, Some(CyclotomicOutcome::Capped { next_candidate })) => {
            unknown_reason = Some(format!("cyclotomic search capped before period {next_candidate}"));
            None
        }
        (None, None) => {
            unknown_reason = Some(format!("diameter {d} exceeds the state-graph cap {cap}"));
            None
        }
    };

    let method = match args.method {
        Method::Stategraph => "stategraph",
        Method::Cyclotomic => "cyclotomic",
        Method::Both => "both",
    };
    let mut body = json!({
        "tile": tile,
        "diameter": d,
        "method": method,
        "stategraph_ran": stategraph.is_some(),
        "cyclotomic_divisors": cyclotomic_divisors(&tile),
        "period_bound_cyclotomic": period_bound_cyclotomic(&tile).to_string(),
        "period_bound_log2_states": d,
        "certificate": Value::Null,
    });
    let (verdict, summary) = match answer {
        Some(Some(cert)) => {
            let s = format!("{tile} tiles Z with period {} and B = {:?}", cert.period, cert.residues.residues());
            body["period"] = json!(cert.period);
            body["certificate"] = to_value(&cert);
            (Verdict::Yes, s)
        }
        Some(None) => (Verdict::No, format!("{tile} does not tile Z")),
        None => {
            let reason = unknown_reason.unwrap_or_default();
            body["reason"] = json!(reason);
            (Verdict::Unknown, format!("{tile}: undecided ({reason})"))
        }
    };
    Ok(Report::new(verdict, body, summary))
}

fn complements(args: &ComplementsArgs) -> CliResult<Report> {
    if args.n == 0 {
        return Err(usage("n must be positive"));
    }
    let a = GroupSubset::cyclic(args.n, &parse_ints(&args.set)?)?;
    let found = match find_complements(&a, args.limit) {
        Ok(f) => f,
        Err(Error::CardinalityMismatch { .. }) => Vec::new(),
        Err(e) => return Err(e.into()),
    };
    let body = json!({
        "n": args.n,
        "a": a,
        "a_cyclotomic_divisors": zn_cyclotomic_divisors(&a),
        "count": found.len(),
        "truncated": args.limit.is_some_and(|l| found.len() == l),
        "complements": found,
    });
    let summary = format!("{} complement(s) of {:?} in Z_{}", found.len(), a.residues(), args.n);
    Ok(Report::new(Verdict::from_bool(!found.is_empty()), body, summary))
}

pub fn canon_json(t: &CyclicTiling) -> Value {
    json!({
        "a": t.a,
        "b": t.b,
        "a_period": is_periodic_subset(&t.a),
        "b_period": is_periodic_subset(&t.b),
        "a_cyclotomic_divisors": zn_cyclotomic_divisors(&t.a),
        "b_cyclotomic_divisors": zn_cyclotomic_divisors(&t.b),
    })
}

fn vuza(args: &VuzaArgs) -> CliResult<Report> {
    if args.n == 0 {
        return Err(usage("n must be positive"));
    }
    let canons = enumerate_vuza_with(args.n, VuzaOptions { limit: args.limit, full: args.full });
    let good = is_good_group(args.n).is_good;
    let body = json!({
        "n": args.n,
        "good_group": good,
        "count": canons.len(),
        "canons": canons.iter().map(canon_json).collect::<Vec<_>>(),
    });
    let summary = format!("{} Vuza canon(s) of Z_{} (good group: {good})", canons.len(), args.n);
    Ok(Report::new(Verdict::from_bool(!canons.is_empty()), body, summary))
}

fn good_group(args: &GoodGroupArgs) -> CliResult<Report> {
    if args.n == 0 {
        return Err(usage("n must be positive"));
    }
    let v = is_good_group(args.n);
    let pattern = v.pattern.map(|p| p.to_string());
    let summary = match &pattern {
        Some(p) => format!("Z_{} is good (pattern {p})", args.n),
        None => format!("Z_{} is not good", args.n),
    };
    Ok(Report::new(Verdict::from_bool(v.is_good), to_value(&v), summary))
}

fn tiles_z2(args: &TilesZ2Args) -> CliResult<Report> {
    let tile = LatticeSet2D::new(parse_points(&args.points)?)?.canonical();
    let config = PlanarConfig { max_n: args.max_n, max_period: args.max_period, node_budget: args.node_budget };
    let decision = to_value(&decide_tiles_z2_with(&tile, &config));
    let verdict = match decision["verdict"].as_str() {
        Some("YES") => Verdict::Yes,
        Some("NO") => Verdict::No,
        _ => Verdict::Unknown,
    };
    let mut body = decision;
    body["tile"] = to_value(&tile);
    body["node_budget"] = json!(args.node_budget);
    let summary = match verdict {
        Verdict::Yes => format!(
            "tiles Z^2 with periods ({}, {})",
            body["certificate"]["a"], body["certificate"]["b"]
        ),
        Verdict::No => format!("no disjoint translates cover the window of radius {}", body["n"]),
        Verdict::Unknown => format!("undecided up to window {} and period {}", args.max_n, args.max_period),
    };
    Ok(Report::new(verdict, body, summary))
}

pub fn aperiodic_checks(tile: &LatticeSet2D, lambda: &[Point], radius: i64) -> (bool, Vec<Point>) {
    (covers_exactly_once(tile, lambda, radius), window_periods(lambda, PERIOD_NORM, radius - PERIOD_NORM))
}

fn aperiodic(args: &AperiodicArgs) -> CliResult<Report> {
    if args.radius < 8 {
        return Err(usage("radius must be at least 8"));
    }
    let tile = LatticeSet2D::spaced_square();
    let lambda = generate_aperiodic_tiling(args.radius);
    let (covered, periods) = aperiodic_checks(&tile, &lambda, args.radius);
    let body = json!({
        "tile": tile,
        "radius": args.radius,
        "covered_exactly_once": covered,
        "period_search_norm": PERIOD_NORM,
        "period_search_core": args.radius - PERIOD_NORM,
        "periods": periods,
        "translations": lambda,
    });
    let ok = covered && periods.is_empty();
    let summary = format!(
        "{} translates; window covered exactly once: {covered}; periods with norm <= {PERIOD_NORM}: {}",
        lambda.len(),
        periods.len()
    );
    Ok(Report::new(Verdict::from_bool(ok), body, summary))
}

fn bricks(args: &BricksArgs) -> CliResult<Report> {
    let (a, b) = (parse_brick(&args.a)?, parse_brick(&args.b)?);
    let decision = decide_two_bricks(a, b);
    let mut body = json!({
        "a": a,
        "b": b,
        "decision": decision,
        "separations": all_separations(a, b),
    });
    if args.construct && decision.tileable {
        let placements = construct_separated_tiling(&decision, a, b)?;
        body["placements"] = to_value(&placements);
    }
    let summary = format!("bricks {} and {}: {:?}", args.a, args.b, decision.mode);
    Ok(Report::new(Verdict::from_bool(decision.tileable), body, summary))
}

fn read_json(path: &Path) -> CliResult<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{} is not JSON: {e}", path.display())))
}

pub fn json_int(v: &Value) -> CliResult<i64> {
    match v {
        Value::Number(n) => n.as_i64(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
    .ok_or_else(|| usage(format!("expected an integer, found {v}")))
}

pub fn json_f64(v: &Value) -> CliResult<f64> {
    match v {
        Value::Number(n) => n.as_f64(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
    .ok_or_else(|| usage(format!("expected a number, found {v}")))
}

pub fn json_array(v: &Value) -> CliResult<&Vec<Value>> {
    v.as_array().ok_or_else(|| usage(format!("expected an array, found {v}")))
}

pub fn json_ints(v: &Value) -> CliResult<Vec<i64>> {
    json_array(v)?.iter().map(json_int).collect()
}

fn json_rows<T>(v: &Value, f: impl Fn(&Value) -> CliResult<T>) -> CliResult<Vec<Vec<T>>> {
    json_array(v)?.iter().map(|r| json_array(r)?.iter().map(&f).collect()).collect()
}

pub fn butson_from_json(v: &Value) -> CliResult<ButsonMatrix> {
    let q = json_int(&v["q"])?;
    let exponents = json_rows(&v["exponents"], |e| {
        let e = json_int(e)?;
        u64::try_from(e).map_err(|_| usage("exponents must be nonnegative"))
    })?;
    if q < 1 {
        return Err(usage("q must be positive"));
    }
    Ok(ButsonMatrix { k: exponents.len(), q: q as u64, exponents })
}

fn hadamard(args: &HadamardArgs) -> CliResult<Report> {
    let doc = read_json(&args.check)?;
    let (format, size, exact, numeric) = if doc.get("exponents").is_some() {
        let m = butson_from_json(&doc)?;
        let phases = PhaseMatrix::from_exponents(m.q, &m.exponents)?;
        let exact = m.verify();
        ("exponents", m.k, Some(exact), is_complex_hadamard(&phases.exp(), args.tol))
    } else if let Some(p) = doc.get("phases") {
        let rows = json_rows(p, |e| match e {
            Value::String(s) => parse_ratio(s),
            other => Ok(Ratio::from_integer(json_int(other)?)),
        })?;
        let phases = PhaseMatrix::from_rows(rows)?;
        let exact = phases.common_denominator().map(|_| is_log_hadamard(&phases));
        ("phases", phases.size(), exact, is_complex_hadamard(&phases.exp(), args.tol))
    } else if let Some(e) = doc.get("entries") {
        let rows = json_rows(e, |z| {
            let z = json_array(z)?;
            match &z[..] {
                [re, im] => Ok(num_complex_from(json_f64(re)?, json_f64(im)?)),
                _ => Err(usage("complex entries are [re, im] pairs")),
            }
        })?;
        let m = ComplexMatrix::from_rows(rows)?;
        ("entries", m.size(), None, is_complex_hadamard(&m, args.tol))
    } else {
        return Err(usage("matrix file needs \"exponents\", \"phases\" or \"entries\""));
    };
    if exact.is_some_and(|e| e != numeric) {
        return Err(CliError::Internal("exact and numeric Hadamard tests disagree".into()));
    }
    let ok = exact.unwrap_or(numeric);
    let body = json!({ "format": format, "size": size, "exact": exact, "numeric": numeric, "tolerance": args.tol });
    Ok(Report::new(Verdict::from_bool(ok), body, format!("{size}x{size} matrix is complex Hadamard: {ok}")))
}

fn num_complex_from(re: f64, im: f64) -> num_complex::Complex64 {
    num_complex::Complex64::new(re, im)
}

fn butson(args: &ButsonArgs) -> CliResult<Report> {
    if args.k == 0 || args.q == 0 {
        return Err(usage("k and q must be positive"));
    }
    let found = find_butson(args.k, args.q, args.limit);
    let body = json!({ "k": args.k, "q": args.q, "count": found.len(), "matrices": found });
    let summary = format!("{} dephased BH({}, {}) matrices", found.len(), args.k, args.q);
    Ok(Report::new(Verdict::from_bool(!found.is_empty()), body, summary))
}

fn spectral(args: &SpectralArgs) -> CliResult<Report> {
    let s = if args.non_tile_z3_5 {
        spectral_non_tile_z3_5()?.s
    } else {
        let n = args.n.filter(|&n| n >= 1).ok_or_else(|| usage("n must be positive"))?;
        let set = args.set.as_deref().unwrap_or_default();
        let elements = if args.d == 1 { parse_ints(set)?.into_iter().map(|x| vec![x]).collect() } else { parse_vectors(set)? };
        GroupSubset::new(n, args.d, elements)?
    };
    let spectrum = find_spectrum(&s);
    let complement = tiles_group(&s);
    let power = match &spectrum {
        Some(q) => Some(power_spectrum_tiling_check(&s, q)?),
        None => None,
    };
    let body = json!({
        "n": s.modulus(),
        "d": s.dim(),
        "s": s,
        "spectrum": spectrum,
        "tiling_complement": complement,
        "power_spectrum": power,
    });
    let summary = format!(
        "|S| = {} in Z_{}^{}: spectral {}, tiles {}",
        s.len(),
        s.modulus(),
        s.dim(),
        spectrum.is_some(),
        complement.is_some()
    );
    Ok(Report::new(Verdict::from_bool(spectrum.is_some()), body, summary))
}

fn fuglede(args: &FugledeArgs) -> CliResult<Report> {
    if args.max_n == 0 || args.max_n > MAX_SWEEP_N {
        return Err(usage(format!("max-n must lie in 1..={MAX_SWEEP_N}")));
    }
    let rep = fuglede_sweep(args.max_n);
    let summary = format!(
        "{} subsets of Z_n, n <= {}: {} tile, {} spectral, {} exceptions",
        rep.sets_checked,
        args.max_n,
        rep.tiles,
        rep.spectral,
        rep.counterexamples.len()
    );
    Ok(Report::new(Verdict::from_bool(rep.counterexamples.is_empty()), to_value(&rep), summary))
}

fn steinhaus(args: &SteinhausArgs) -> CliResult<Report> {
    if !(args.step > 0.0) || !(args.range >= 0.0) || args.samples == 0 {
        return Err(usage("need step > 0, range >= 0 and at least one sample"));
    }
    let f = FejerSumFunction::default();
    let scan = positivity_scan(&f, args.step, (0.0, args.range))?;
    // Sample points from the golden-ratio sequence in [0, 1).
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    let deviations: Vec<f64> = (0..args.samples)
        .into_par_iter()
        .map(|i| (translate_sum(&f, (i as f64 * golden).fract(), args.n) - f.level()).abs())
        .collect();
    let max_dev = deviations.iter().copied().fold(0.0, f64::max);
    let ok = scan.min > 0.0 && max_dev <= args.tol;
    let body = json!({
        "function": f,
        "level": f.level(),
        "scan": scan,
        "range": [0.0, args.range],
        "step": args.step,
        "translates": args.n,
        "samples": args.samples,
        "max_deviation": max_dev,
        "tolerance": args.tol,
    });
    let summary = format!("min f = {:.3e} on [0, {}], max |sum - 2| = {max_dev:.2e}", scan.min, args.range);
    Ok(Report::new(Verdict::from_bool(ok), body, summary))
}
