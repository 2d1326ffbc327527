//! `--verify`: re-check an emitted document. Certificates go back through
//! the library's verify operations; documents without one are re-derived
//! from their arguments and compared.

use std::path::Path;

use clap::Parser;
use num_rational::Ratio;
use serde_json::{json, Value};
use tilekit::bricks::{verify_rect_tiling, BrickType, RectPlacement};
use tilekit::cyclic::{is_periodic_subset, CyclicTiling};
use tilekit::group::FiniteAbelianGroup;
use tilekit::line::TilingCertificate1D;
use tilekit::planar::{no_witness_holds, LatticeSet2D, PeriodicComplement2D, Point};
use tilekit::spectral::spectral_pair_check;
use tilekit::{FiniteSetZ, GroupSubset};

use crate::args::Cli;
use crate::commands::{
    aperiodic_checks, butson_from_json, json_array, json_int, json_ints, parse_brick, parse_ratio, run,
};
use crate::output::{document, CliError, CliResult, Report, Verdict};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn points(v: &Value) -> CliResult<Vec<Point>> {
    json_array(v)?
        .iter()
        .map(|p| match json_ints(p)?[..] {
            [x, y] => Ok((x, y)),
            _ => Err(usage("points are [x, y] pairs")),
        })
        .collect()
}

fn cyclic(n: i64, v: &Value) -> CliResult<GroupSubset> {
    Ok(GroupSubset::cyclic(n as u64, &json_ints(v)?)?)
}

/// `d = 1` subsets are flat arrays, others arrays of vectors.
fn subset(n: i64, d: i64, v: &Value) -> CliResult<GroupSubset> {
    let elems = if d == 1 {
        json_ints(v)?.into_iter().map(|x| vec![x]).collect()
    } else {
        json_array(v)?.iter().map(json_ints).collect::<CliResult<Vec<_>>>()?
    };
    Ok(GroupSubset::new(n as u64, d as usize, elems)?)
}

fn positive(v: &Value) -> CliResult<i64> {
    let x = json_int(v)?;
    if x < 1 {
        return Err(usage(format!("expected a positive integer, found {v}")));
    }
    Ok(x)
}

/// `Some(ok)` when the document carries a certificate to check.
fn check_certificate(command: &str, doc: &Value) -> CliResult<Option<bool>> {
    let yes = doc["verdict"] == "YES";
    let ok = match command {
        "tiles-z" if yes => {
            let c = &doc["certificate"];
            let period = positive(&c["period"])?;
            let cert = TilingCertificate1D {
                tile: FiniteSetZ::new(json_ints(&c["tile"])?)?,
                period: period as u64,
                residues: cyclic(period, &c["residues"])?,
            };
            cert.verify()
        }
        "complements" if yes => {
            let n = positive(&doc["n"])?;
            let a = cyclic(n, &doc["a"])?;
            let mut all = true;
            for b in json_array(&doc["complements"])? {
                all &= tilekit::cyclic::verify_tiling_zn(&a, &cyclic(n, b)?);
            }
            all
        }
        "vuza" if yes => {
            let n = positive(&doc["n"])?;
            let mut all = true;
            for c in json_array(&doc["canons"])? {
                let t = CyclicTiling { n: n as u64, a: cyclic(n, &c["a"])?, b: cyclic(n, &c["b"])? };
                all &= t.verify()
                    && t.a.len() > 1
                    && t.b.len() > 1
                    && is_periodic_subset(&t.a).is_none()
                    && is_periodic_subset(&t.b).is_none();
            }
            all
        }
        "tiles-z2" if yes || doc["verdict"] == "NO" => {
            let tile = LatticeSet2D::new(points(&doc["tile"])?)?;
            if yes {
                let c = &doc["certificate"];
                let cert = PeriodicComplement2D {
                    a: positive(&c["a"])? as u64,
                    b: positive(&c["b"])? as u64,
                    reps: points(&c["reps"])?,
                };
                cert.verify(&tile)
            } else {
                let n = positive(&doc["n"])? as u64;
                let budget = positive(&doc["node_budget"])? as u64;
                no_witness_holds(&tile, n, budget) == Some(true)
            }
        }
        "aperiodic" => {
            let tile = LatticeSet2D::new(points(&doc["tile"])?)?;
            let radius = positive(&doc["radius"])?;
            if radius < 8 {
                return Err(usage("radius must be at least 8"));
            }
            let (covered, periods) = aperiodic_checks(&tile, &points(&doc["translations"])?, radius);
            (covered && periods.is_empty()) == yes
        }
        "bricks" if yes && doc.get("placements").is_some() => {
            let brick = |v: &Value| -> CliResult<_> {
                let s = json_array(v)?;
                let text = |x: &Value| x.as_str().map(str::to_owned).ok_or_else(|| usage("brick sides are strings"));
                parse_brick(&format!("{}x{}", text(&s[0])?, text(&s[1])?))
            };
            let (a, b) = (brick(&doc["a"])?, brick(&doc["b"])?);
            let mut placements = Vec::new();
            for p in json_array(&doc["placements"])? {
                let kind = match p["brick"].as_str() {
                    Some("A") => BrickType::A,
                    Some("B") => BrickType::B,
                    _ => return Err(usage("placement brick must be \"A\" or \"B\"")),
                };
                let corner = json_array(&p["corner"])?;
                let coord = |v: &Value| -> CliResult<Ratio<i64>> {
                    parse_ratio(v.as_str().ok_or_else(|| usage("corners are rational strings"))?)
                };
                placements.push(RectPlacement { brick: kind, x: coord(&corner[0])?, y: coord(&corner[1])? });
            }
            verify_rect_tiling(&placements, a, b)
        }
        "butson" if yes => {
            let mut all = true;
            for m in json_array(&doc["matrices"])? {
                all &= butson_from_json(m)?.verify();
            }
            all
        }
        "spectral" if yes => {
            let (n, d) = (positive(&doc["n"])?, positive(&doc["d"])?);
            let s = subset(n, d, &doc["s"])?;
            let mut ok = spectral_pair_check(&s, &subset(n, d, &doc["spectrum"])?);
            if !doc["tiling_complement"].is_null() {
                let p = subset(n, d, &doc["tiling_complement"])?;
                let group = FiniteAbelianGroup::power(n as u64, d as usize)?;
                ok &= group.is_direct_sum_cover(&s.indices(), &p.indices());
            }
            ok
        }
        _ => return Ok(None),
    };
    Ok(Some(ok))
}

fn rederive(command: &str, doc: &Value) -> CliResult<bool> {
    let argv: Vec<String> = json_array(&doc["argv"])?
        .iter()
        .map(|a| a.as_str().map(str::to_owned).ok_or_else(|| usage("argv entries are strings")))
        .collect::<CliResult<_>>()?;
    let full = ["tilekit".to_owned(), command.to_owned()].into_iter().chain(argv.iter().cloned());
    let cli = Cli::try_parse_from(full).map_err(|e| usage(format!("stored arguments do not parse: {e}")))?;
    let cmd = cli.command.ok_or_else(|| usage("stored arguments name no command"))?;
    let report = run(&cmd)?;
    Ok(document(command, &argv, &report) == *doc)
}

pub fn verify_file(path: &Path) -> CliResult<Report> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{} is not JSON: {e}", path.display())))?;
    let command = doc["command"].as_str().ok_or_else(|| usage("document has no \"command\""))?.to_owned();
    let (method, ok) = match check_certificate(&command, &doc)? {
        Some(ok) => ("certificate", ok),
        None => ("rederivation", rederive(&command, &doc)?),
    };
    let body = json!({ "checked_command": command, "method": method, "file_verdict": doc["verdict"] });
    let summary = format!("{command} document {} by {method}", if ok { "verified" } else { "rejected" });
    Ok(Report::new(Verdict::from_bool(ok), body, summary))
}
