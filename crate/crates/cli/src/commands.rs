//! Execution of the parsed subcommands.

use std::path::Path;

use heptads::clifford7::{self, PlaneClass};
use heptads::grassmann::{four_qubit_to_plane, plane_to_four_qubit, spread_to_clifford9, FourQubitPoint};
use heptads::hexagon::{self, hexagon_lines, verify_generalized_hexagon};
use heptads::mermin::{self, PentagramRecord};
use heptads::polar::{self, context_space, enumerate_spreads, plane_index};
use heptads::spgroup::{self, group_closure, orbit, point_orbit, GroupElement};
use heptads::{pauli, IsotropicPlane};
use serde_json::{json, Value};

use crate::labels::parse_labels;
use crate::report::{Checks, Report};
use crate::{verify, Cli, Command, EnumerateArgs, Format, GroupArgs, HexagonArgs, MapArgs, Output, Suite, Target};

pub enum CliError {
    /// Bad input; exit code 2.
    Usage(String),
    /// A file could not be written; exit code 1.
    Io(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn write_file(path: &Path, contents: &str) -> Result<String, CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    Ok(path.display().to_string())
}

pub fn execute(cli: &Cli, warnings: &mut Vec<String>) -> Result<Output, CliError> {
    let threads = usize::from(cli.threads);
    match &cli.command {
        Command::Verify { suite } => Ok(Output::Report(verify_suite(*suite, threads))),
        Command::Enumerate(args) => enumerate(args, threads),
        Command::Map(args) => map(args, warnings).map(Output::Report),
        Command::Hexagon(args) => hexagon(args).map(Output::Report),
        Command::Group(args) => group(args, warnings).map(Output::Report),
    }
}

fn verify_suite(suite: Suite, threads: usize) -> Report {
    let (name, checks) = match suite {
        Suite::All => ("all", verify::all(threads)),
        Suite::Group => {
            let mut c = verify::group();
            c.extend(verify::clifford());
            ("group", c)
        }
        Suite::Bijection => {
            let mut c = verify::census();
            c.extend(verify::bijection());
            c.extend(verify::plucker());
            ("bijection", c)
        }
        Suite::Pentagrams => ("pentagrams", verify::pentagrams(threads)),
        Suite::Hexagon => ("hexagon", verify::hexagon()),
        Suite::Spreads => ("spreads", verify::spreads()),
    };
    checks.into_report(&format!("verify {name}"))
}

/// Rows of a listing, kept in both shapes.
struct Listing {
    header: &'static [&'static str],
    rows: Vec<Vec<String>>,
    items: Vec<Value>,
}

impl Listing {
    fn csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(self.header).expect("in-memory write");
        for row in &self.rows {
            writer.write_record(row).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("labels are ASCII")
    }
}

fn plane_class(p: &IsotropicPlane) -> &'static str {
    match clifford7::classify_plane(p) {
        PlaneClass::Mixed => "mixed",
        PlaneClass::Steiner => "steiner",
    }
}

fn plane_json(p: &IsotropicPlane) -> Value {
    json!({
        "index": plane_index(p),
        "points": p.labels(),
        "clifford": clifford7::plane_labels(p),
        "four_qubit": plane_to_four_qubit(p),
        "class": plane_class(p),
    })
}

fn list(target: Target, symmetric_only: bool, threads: usize) -> Result<Listing, CliError> {
    if symmetric_only && !matches!(target, Target::Edges | Target::Pentagrams) {
        return Err(usage("--symmetric-only applies to edges and pentagrams"));
    }
    let listing = match target {
        Target::Planes => Listing {
            header: &["index", "points", "clifford", "four_qubit", "class"],
            rows: context_space()
                .iter()
                .map(|p| {
                    let clifford: Vec<String> = clifford7::plane_labels(p).iter().map(ToString::to_string).collect();
                    vec![
                        plane_index(p).to_string(),
                        p.labels().join(" "),
                        clifford.join(" "),
                        plane_to_four_qubit(p).to_string(),
                        plane_class(p).to_owned(),
                    ]
                })
                .collect(),
            items: context_space().iter().map(plane_json).collect(),
        },
        Target::Lines => {
            let lines: Vec<Vec<String>> = polar::enumerate_isotropic(2)
                .iter()
                .map(|s| s.points().iter().map(|v| pauli::label(*v)).collect())
                .collect();
            Listing {
                header: &["index", "points"],
                rows: lines.iter().enumerate().map(|(i, l)| vec![i.to_string(), l.join(" ")]).collect(),
                items: lines.iter().enumerate().map(|(i, l)| json!({"index": i, "points": l})).collect(),
            }
        }
        Target::Edges => {
            let edges: Vec<&mermin::AffineEdge> = mermin::affine_edges()
                .iter()
                .filter(|e| !symmetric_only || e.points().iter().all(|v| !pauli::q0(*v)))
                .collect();
            Listing {
                header: &["index", "points", "heptad", "negative", "real_negative"],
                rows: edges
                    .iter()
                    .enumerate()
                    .map(|(i, e)| {
                        vec![
                            i.to_string(),
                            e.labels().join(" "),
                            plane_to_four_qubit(e.parent()).to_string(),
                            u8::from(e.sign()).to_string(),
                            u8::from(e.real_sign()).to_string(),
                        ]
                    })
                    .collect(),
                items: edges
                    .iter()
                    .enumerate()
                    .map(|(i, e)| {
                        json!({
                            "index": i,
                            "points": e.labels(),
                            "heptad": plane_to_four_qubit(e.parent()),
                            "negative": e.sign(),
                            "real_negative": e.real_sign(),
                        })
                    })
                    .collect(),
            }
        }
        Target::Pentagrams => {
            let census = mermin::enumerate_pentagrams_with(threads);
            let records: Vec<PentagramRecord> = census
                .magic
                .iter()
                .filter(|p| !symmetric_only || p.is_symmetric())
                .map(PentagramRecord::from)
                .collect();
            Listing {
                header: &["index", "edges", "pentad", "negative_edges", "magic"],
                rows: records
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        let edges: Vec<String> = r.edges.iter().map(|e| e.join(" ")).collect();
                        let pentad: Vec<String> = r.pentad.iter().map(ToString::to_string).collect();
                        vec![
                            i.to_string(),
                            edges.join(";"),
                            pentad.join(" "),
                            r.edge_signs.iter().filter(|s| **s).count().to_string(),
                            u8::from(r.magic).to_string(),
                        ]
                    })
                    .collect(),
                items: records
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        let mut v = serde_json::to_value(r).expect("records serialize");
                        v["index"] = json!(i);
                        v
                    })
                    .collect(),
            }
        }
        Target::Spreads => {
            let spreads = enumerate_spreads();
            let ovoids: Vec<Vec<FourQubitPoint>> = spreads.iter().map(spread_to_clifford9).collect();
            Listing {
                header: &["index", "ovoid"],
                rows: ovoids
                    .iter()
                    .enumerate()
                    .map(|(i, o)| {
                        let labels: Vec<String> = o.iter().map(ToString::to_string).collect();
                        vec![i.to_string(), labels.join(" ")]
                    })
                    .collect(),
                items: spreads
                    .iter()
                    .zip(&ovoids)
                    .enumerate()
                    .map(|(i, (s, o))| {
                        let heptads: Vec<Vec<String>> = s.planes().iter().map(IsotropicPlane::labels).collect();
                        json!({"index": i, "ovoid": o, "heptads": heptads})
                    })
                    .collect(),
            }
        }
    };
    Ok(listing)
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Planes => "planes",
        Target::Lines => "lines",
        Target::Edges => "edges",
        Target::Pentagrams => "pentagrams",
        Target::Spreads => "spreads",
    }
}

fn enumerate(args: &EnumerateArgs, threads: usize) -> Result<Output, CliError> {
    let listing = list(args.target, args.symmetric_only, threads)?;
    let name = target_name(args.target);
    let mut report = Report::info(format!("enumerate {name}")).metric("count", listing.rows.len());
    match (&args.export, args.format) {
        (Some(path), Format::Csv) => {
            report.artifacts.push(write_file(path, &listing.csv())?);
            Ok(Output::Report(report))
        }
        (Some(path), Format::Json) => {
            let mut text = serde_json::to_string_pretty(&listing.items).expect("listing serializes");
            text.push('\n');
            report.artifacts.push(write_file(path, &text)?);
            Ok(Output::Report(report))
        }
        (None, Format::Csv) => Ok(Output::Text(listing.csv(), report)),
        (None, Format::Json) => Ok(Output::Report(report.with_details(json!({ name: listing.items })))),
    }
}

fn map(args: &MapArgs, warnings: &mut Vec<String>) -> Result<Report, CliError> {
    if let Some(text) = &args.plane {
        let parsed = parse_labels(text, Some(3)).map_err(usage)?;
        warnings.extend(parsed.warnings);
        let vectors: Vec<_> = parsed.operators.iter().map(|o| o.vector()).collect();
        let plane = IsotropicPlane::span(&vectors).map_err(|e| usage(format!("{text:?} does not span a heptad: {e}")))?;
        let given: Vec<String> = parsed.operators.iter().map(|o| o.letters()).collect();
        let completion: Vec<String> = plane.labels().into_iter().filter(|l| !given.contains(l)).collect();
        let mut details = plane_json(&plane);
        details["completion"] = json!(completion);
        return Ok(Report::info("map --plane")
            .metric("plane_index", plane_index(&plane))
            .with_details(details));
    }
    let text = args.fourqubit.as_deref().expect("clap requires one input");
    let parsed = parse_labels(text, Some(4)).map_err(usage)?;
    warnings.extend(parsed.warnings);
    let [op] = parsed.operators[..] else {
        return Err(usage("--fourqubit takes a single label"));
    };
    let point = FourQubitPoint::from_vector(op.vector());
    let plane = four_qubit_to_plane(&point).map_err(|e| usage(e.to_string()))?;
    Ok(Report::info("map --fourqubit")
        .metric("plane_index", plane_index(&plane))
        .with_details(plane_json(&plane)))
}

fn hexagon(args: &HexagonArgs) -> Result<Report, CliError> {
    let structure = hexagon_lines().map_err(|e| CliError::Io(format!("hexagon construction failed: {e}")))?;
    let mut report = if args.check {
        let r = verify_generalized_hexagon(&structure);
        let mut c = Checks::default();
        c.expect("points", 63, r.points);
        c.expect("lines", 63, r.lines);
        c.expect("points_on_three_lines", 63, r.lines_per_point.get(&3).copied().unwrap_or(0));
        c.expect_true("connected", r.connected);
        c.expect("girth", 12, r.girth.unwrap_or(0));
        c.expect("diameter", 6, r.diameter.unwrap_or(0));
        let mut report = c.into_report("hexagon");
        if let Some(details) = report.details.as_mut() {
            details["axiom_failures"] = json!(r.failures);
        }
        report
    } else {
        Report::info("hexagon")
            .metric("points", structure.points().len())
            .metric("lines", structure.lines().len())
    };
    if let Some(target) = &args.export {
        let export = hexagon::export(&structure).map_err(|e| CliError::Io(e.to_string()))?;
        let value = serde_json::to_value(&export).expect("export serializes");
        match target {
            Some(path) => {
                let mut text = serde_json::to_string_pretty(&value).expect("export serializes");
                text.push('\n');
                report.artifacts.push(write_file(path, &text)?);
            }
            None => {
                let details = report.details.get_or_insert_with(|| json!({}));
                details["hexagon"] = value;
            }
        }
    }
    Ok(report)
}

/// Generator names: a representation letter `D` or `R` followed by `alpha`,
/// `beta` or `gamma` (or `a`, `b`, `g`, or the Greek letter), parentheses
/// optional.
pub fn parse_generators(text: &str) -> Result<Vec<(String, GroupElement)>, String> {
    let gens = spgroup::generators();
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|raw| {
            let key: String = raw.to_lowercase().chars().filter(|c| !"() ".contains(*c)).collect();
            let (rep, name) = key.split_at(key.chars().next().map_or(0, char::len_utf8));
            let which = match name {
                "a" | "alpha" | "α" => 0,
                "b" | "beta" | "β" => 1,
                "g" | "gamma" | "γ" => 2,
                _ => return Err(format!("unknown generator {raw:?}")),
            };
            let g = match (rep, which) {
                ("d", 0) => gens.d_alpha,
                ("d", 1) => gens.d_beta,
                ("d", _) => gens.d_gamma,
                ("r", 0) => gens.r_alpha,
                ("r", 1) => gens.r_beta,
                ("r", _) => gens.r_gamma,
                _ => return Err(format!("unknown generator {raw:?}; use a D or R prefix")),
            };
            let canonical = format!("{}({})", rep.to_uppercase(), ["alpha", "beta", "gamma"][which]);
            Ok((canonical, g))
        })
        .collect()
}

fn group(args: &GroupArgs, warnings: &mut Vec<String>) -> Result<Report, CliError> {
    if let Some(text) = &args.order {
        let gens = parse_generators(text).map_err(usage)?;
        if gens.is_empty() {
            return Err(usage("no generators given"));
        }
        let elements: Vec<GroupElement> = gens.iter().map(|g| g.1).collect();
        let closure = group_closure(&elements).map_err(|e| usage(e.to_string()))?;
        let names: Vec<&String> = gens.iter().map(|g| &g.0).collect();
        return Ok(Report::info("group --order")
            .metric("order", closure.order())
            .metric("dimension", closure.dim())
            .with_details(json!({ "generators": names })));
    }
    let seed = args.orbit.as_deref().expect("clap requires one query");
    let parsed = parse_labels(seed, None).map_err(usage)?;
    warnings.extend(parsed.warnings);
    let width = parsed.operators[0].width();
    if parsed.operators.iter().any(|o| o.width() != width) {
        return Err(usage("seed labels must all have the same width"));
    }
    let default_gens = if width == 4 { "Ra,Rb" } else { "Da,Db" };
    let gens = parse_generators(args.gens.as_deref().unwrap_or(default_gens)).map_err(usage)?;
    let dim = 2 * width;
    if gens.is_empty() || gens.iter().any(|g| g.1.dim() != dim) {
        return Err(usage(format!("a {width}-qubit seed needs {dim}x{dim} generators")));
    }
    let elements: Vec<GroupElement> = gens.iter().map(|g| g.1).collect();
    let names: Vec<&String> = gens.iter().map(|g| &g.0).collect();
    let (kind, members): (&str, Vec<Value>) = match (width, parsed.operators.len()) {
        (3 | 4, 1) => {
            let members = point_orbit(parsed.operators[0].vector(), &elements);
            ("point", members.iter().map(|v| json!(pauli::label(*v))).collect())
        }
        (3, _) => {
            let vectors: Vec<_> = parsed.operators.iter().map(|o| o.vector()).collect();
            let plane = IsotropicPlane::span(&vectors).map_err(|e| usage(format!("seed is not a heptad: {e}")))?;
            let members = orbit(plane, &elements, |p, g| p.transform(g.matrix()).expect("symplectic maps preserve heptads"));
            ("heptad", members.iter().map(|p| json!(plane_to_four_qubit(p))).collect())
        }
        _ => return Err(usage("orbit seeds are one 3- or 4-qubit label, or heptad labels")),
    };
    Ok(Report::info("group --orbit")
        .metric("orbit_size", members.len())
        .with_details(json!({ "seed_kind": kind, "generators": names, "members": members })))
}
