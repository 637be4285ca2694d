//! Command-line front end: classification queries, hypothesis scans, Pell
//! decisions, cone reports, linkage and chamber computations.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 when a criterion's
//! hypotheses fail on mathematically valid input (so scripts can branch on
//! applicability).

mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num::BigInt;
use serde_json::{json, Value};

use moridream::blowup::{self, BlowupError};
use moridream::classify::{self, ClassifyError, Evidence};
use moridream::hilbert;
use moridream::linkage::{self, LinkageComponent, LinkageError, SkewLinkageSpec};
use moridream::pell::{self, PellProblem};
use moridream::CurveNumerics;

use report::Envelope;

#[derive(Parser)]
#[command(
    name = "moridream",
    version,
    about = "Exact Mori-dreamness criteria for blowups of P^3 along space curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a JSON report (all numerics as decimal strings).
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV rows (scan only).
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the blowup along a (g, d) curve under the given evidence.
    Classify {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        /// quartic | aci | ci:N1,N2 | surface:S | linked:G,D,N1,N2[,acm]
        #[arg(long)]
        evidence: Option<String>,
    },
    /// Scan (g, d) pairs against the irrational-ray hypotheses.
    Scan {
        #[arg(long = "d-max")]
        d_max: i64,
        /// Every pair passing the raw hypotheses (default).
        #[arg(long)]
        raw: bool,
        /// The catalogued components of degree below 16.
        #[arg(long, conflicts_with = "raw")]
        catalog: bool,
    },
    /// Decide x^2 - D y^2 = N exactly, with a certificate.
    Pell {
        #[arg(long = "D", allow_hyphen_values = true)]
        d: String,
        #[arg(long = "N", allow_hyphen_values = true)]
        n: String,
    },
    /// Residual genus and degree of an (n1, n2) linkage.
    Linkage {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n1: i64,
        #[arg(long)]
        n2: i64,
    },
    /// Chamber structure of a rigid skew linkage.
    Chambers {
        #[arg(long)]
        n1: i64,
        #[arg(long)]
        n2: i64,
        /// Residual components as "g1,d1;g2,d2;..."
        #[arg(long)]
        components: String,
    },
    /// Effective/movable/nef cones of the blowup for a curve with an
    /// extremal surface of the given degree.
    Cones {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        surface: i64,
    },
    /// One member of the (20n+1, 5n) family with its certificate chain.
    Family {
        #[arg(long)]
        n: i64,
    },
}

enum CliError {
    /// Invalid input: exit code 2.
    Usage(String),
    /// Hypotheses of the requested criterion fail: exit code 3.
    Hypothesis(String),
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::InvalidEvidence(_) | ClassifyError::InvalidInput(_) => {
                CliError::Usage(e.to_string())
            }
            ClassifyError::HypothesisFailure(_) => CliError::Hypothesis(e.to_string()),
        }
    }
}

impl From<LinkageError> for CliError {
    fn from(e: LinkageError) -> Self {
        match e {
            LinkageError::NotRigid { .. } | LinkageError::NegativeResidualGenus { .. } => {
                CliError::Hypothesis(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<BlowupError> for CliError {
    fn from(e: BlowupError) -> Self {
        match e {
            BlowupError::HypothesisFails { .. }
            | BlowupError::NotRigid { .. }
            | BlowupError::DegenerateLinkage => CliError::Hypothesis(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match (cli.json, cli.csv) {
        (true, true) => {
            eprintln!("error: --json and --csv are mutually exclusive");
            return ExitCode::from(2);
        }
        (true, false) => Format::Json,
        (false, true) => Format::Csv,
        (false, false) => Format::Text,
    };
    match run(cli.command, format) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Hypothesis(msg)) => {
            eprintln!("hypothesis failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command, format: Format) -> Result<(), CliError> {
    if format == Format::Csv && !matches!(command, Command::Scan { .. }) {
        return Err(CliError::Usage("--csv is only available for scan".into()));
    }
    match command {
        Command::Classify { g, d, evidence } => cmd_classify(g, d, evidence.as_deref(), format),
        Command::Scan { d_max, raw, catalog } => cmd_scan(d_max, raw, catalog, format),
        Command::Pell { d, n } => cmd_pell(&d, &n, format),
        Command::Linkage { g, d, n1, n2 } => cmd_linkage(g, d, n1, n2, format),
        Command::Chambers { n1, n2, components } => cmd_chambers(n1, n2, &components, format),
        Command::Cones { g, d, surface } => cmd_cones(g, d, surface, format),
        Command::Family { n } => cmd_family(n, format),
    }
}

fn numerics(g: i64, d: i64) -> Result<CurveNumerics, CliError> {
    CurveNumerics::new(g, d).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_evidence(s: Option<&str>) -> Result<Evidence, CliError> {
    let Some(s) = s else {
        return Ok(Evidence::Unspecified);
    };
    let usage = |msg: &str| CliError::Usage(format!("cannot parse evidence `{s}`: {msg}"));
    if s == "quartic" {
        return Ok(Evidence::GeneralOnQuartic);
    }
    if s == "aci" {
        return Ok(Evidence::AlmostCompleteIntersection);
    }
    if let Some(rest) = s.strip_prefix("ci:") {
        let parts: Vec<i64> = rest
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| usage("expected ci:N1,N2"))?;
        if parts.len() != 2 {
            return Err(usage("expected ci:N1,N2"));
        }
        return Ok(Evidence::CompleteIntersection(parts[0], parts[1]));
    }
    if let Some(rest) = s.strip_prefix("surface:") {
        let deg = rest
            .trim()
            .parse()
            .map_err(|_| usage("expected surface:S"))?;
        return Ok(Evidence::OnSurfaceOfDegree(deg));
    }
    if let Some(rest) = s.strip_prefix("linked:") {
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        if parts.len() < 4 || parts.len() > 5 {
            return Err(usage("expected linked:G,D,N1,N2[,acm]"));
        }
        let nums: Vec<i64> = parts[..4]
            .iter()
            .map(|p| p.parse())
            .collect::<Result<_, _>>()
            .map_err(|_| usage("expected integer parameters"))?;
        let acm = match parts.get(4) {
            None => false,
            Some(&"acm") => true,
            Some(other) => return Err(usage(&format!("unknown flag `{other}`"))),
        };
        return Ok(Evidence::GeneralLinked {
            g_res: nums[0],
            d_res: nums[1],
            n1: nums[2],
            n2: nums[3],
            acm,
        });
    }
    Err(usage(
        "expected quartic | aci | ci:N1,N2 | surface:S | linked:G,D,N1,N2[,acm]",
    ))
}

fn evidence_echo(e: &Evidence) -> Value {
    match e {
        Evidence::CompleteIntersection(n1, n2) => json!({
            "kind": "complete-intersection", "n1": report::int(*n1), "n2": report::int(*n2)
        }),
        Evidence::AlmostCompleteIntersection => json!({ "kind": "almost-complete-intersection" }),
        Evidence::OnSurfaceOfDegree(s) => json!({
            "kind": "on-surface-of-degree", "degree": report::int(*s)
        }),
        Evidence::GeneralOnQuartic => json!({ "kind": "general-on-quartic" }),
        Evidence::GeneralLinked { g_res, d_res, n1, n2, acm } => json!({
            "kind": "general-linked",
            "g_res": report::int(*g_res), "d_res": report::int(*d_res),
            "n1": report::int(*n1), "n2": report::int(*n2), "acm": acm,
        }),
        Evidence::Unspecified => json!({ "kind": "unspecified" }),
    }
}

fn cmd_classify(g: i64, d: i64, evidence: Option<&str>, format: Format) -> Result<(), CliError> {
    let n = numerics(g, d)?;
    let evidence = parse_evidence(evidence)?;
    let verdict = classify::classify(&n, &evidence)?;

    let (result, certificates) = report::verdict(&verdict);
    let mut envelope = Envelope::new(
        "classify",
        json!({
            "g": report::int(g),
            "d": report::int(d),
            "evidence": evidence_echo(&evidence),
        }),
        result,
    );
    envelope.certificates = certificates;
    envelope.citations = json!(verdict.citations);

    match format {
        Format::Json => envelope.print_json(),
        _ => {
            println!("curve ({g}, {d})");
            print!("verdict: {}", report::status(verdict.status));
            if let Some(q) = verdict.quantifier {
                print!(" (for a {} element)", report::quantifier(q));
            }
            println!();
            if let Some(o) = verdict.obstruction {
                println!("obstruction: {}", report::obstruction(o));
            }
            for c in &verdict.citations {
                println!("criterion: {c}");
            }
            for note in &verdict.notes {
                println!("note: {note}");
            }
        }
    }
    Ok(())
}

fn cmd_scan(d_max: i64, _raw: bool, catalog: bool, format: Format) -> Result<(), CliError> {
    if catalog {
        let entries: Vec<_> = hilbert::low_degree_quartic_catalog()
            .into_iter()
            .filter(|e| e.record.numerics.d() <= d_max)
            .collect();
        let rows: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "g": report::int(e.record.numerics.g()),
                    "d": report::int(e.record.numerics.d()),
                    "r": report::int(e.r),
                    "dimension": e.record.dimension.map(report::int).unwrap_or(Value::Null),
                    "inequality_64_8d_2g_2": report::int(e.inequality_value),
                    "pell_rational": report::pell_outcome(&e.rational_outcome),
                    "provenance": e.provenance,
                    "linkage_chain": e
                        .linkage_chain
                        .iter()
                        .map(|l| json!({
                            "n1": report::int(l.n1), "n2": report::int(l.n2),
                            "g": report::int(l.to.0), "d": report::int(l.to.1),
                        }))
                        .collect::<Vec<_>>(),
                })
            })
            .collect();
        match format {
            Format::Json => Envelope::new(
                "scan",
                json!({ "d_max": report::int(d_max), "mode": "catalog" }),
                json!({ "rows": rows }),
            )
            .print_json(),
            Format::Csv => {
                println!("g,d,r,dimension,inequality,provenance");
                for e in &entries {
                    println!(
                        "{},{},{},{},{},{}",
                        e.record.numerics.g(),
                        e.record.numerics.d(),
                        e.r,
                        e.record.dimension.unwrap_or(-1),
                        e.inequality_value,
                        e.provenance
                    );
                }
            }
            Format::Text => {
                println!("catalogued quartic components with d <= {d_max}:");
                for e in &entries {
                    println!(
                        "  ({}, {})  r = {}  dim = {}  [{}]",
                        e.record.numerics.g(),
                        e.record.numerics.d(),
                        e.r,
                        e.record.dimension.unwrap_or(-1),
                        e.provenance
                    );
                }
            }
        }
        return Ok(());
    }

    let rows = classify::irrational_ray_scan(d_max)?;
    match format {
        Format::Json => {
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "g": report::int(r.numerics.g()),
                        "d": report::int(r.numerics.d()),
                        "r": report::bigint(&r.r),
                        "inequality_64_8d_2g_2": report::int(r.inequality_value),
                        "d_ge_16": r.d_ge_16,
                        "pell_rational": report::pell_outcome(&r.rational_outcome),
                        "pell_elliptic": report::pell_outcome(&r.elliptic_outcome),
                    })
                })
                .collect();
            Envelope::new(
                "scan",
                json!({ "d_max": report::int(d_max), "mode": "raw" }),
                json!({ "rows": json_rows }),
            )
            .print_json();
        }
        Format::Csv => {
            println!("g,d,r,inequality,d_ge_16");
            for r in &rows {
                println!(
                    "{},{},{},{},{}",
                    r.numerics.g(),
                    r.numerics.d(),
                    r.r,
                    r.inequality_value,
                    r.d_ge_16
                );
            }
        }
        Format::Text => {
            println!("pairs with d <= {d_max} passing the irrational-ray hypotheses:");
            for r in &rows {
                println!(
                    "  ({}, {})  r = {}  64-8d+2g-2 = {}",
                    r.numerics.g(),
                    r.numerics.d(),
                    r.r,
                    r.inequality_value
                );
            }
        }
    }
    Ok(())
}

fn cmd_pell(d: &str, n: &str, format: Format) -> Result<(), CliError> {
    let d: BigInt = d
        .parse()
        .map_err(|_| CliError::Usage(format!("cannot parse D = `{d}` as an integer")))?;
    let n: BigInt = n
        .parse()
        .map_err(|_| CliError::Usage(format!("cannot parse N = `{n}` as an integer")))?;
    let problem = PellProblem::new(d.clone(), n.clone())
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let outcome = pell::decide(&problem);

    match format {
        Format::Json => Envelope::new(
            "pell",
            json!({ "d": report::bigint(&d), "n": report::bigint(&n) }),
            report::pell_outcome(&outcome),
        )
        .print_json(),
        _ => {
            println!("x^2 - {d} y^2 = {n}");
            if let Some((x, y)) = &outcome.witness {
                println!("solvable: witness (x, y) = ({x}, {y})");
            } else {
                println!("unsolvable");
            }
            match &outcome.certificate {
                pell::Certificate::WitnessFound => {}
                pell::Certificate::ModulusSieve { modulus, d, n } => println!(
                    "certificate: no residue solutions of x^2 - {d} y^2 = {n} mod {modulus}"
                ),
                pell::Certificate::SquareTestFailed => {
                    println!("certificate: exact square test")
                }
                pell::Certificate::FundamentalSearchExhausted => {
                    println!("certificate: fundamental-solution classes exhausted")
                }
            }
        }
    }
    Ok(())
}

fn cmd_linkage(g: i64, d: i64, n1: i64, n2: i64, format: Format) -> Result<(), CliError> {
    numerics(g, d)?;
    let residual = linkage::linked_numerics(g, d, n1, n2)?;
    match format {
        Format::Json => Envelope::new(
            "linkage",
            json!({
                "g": report::int(g), "d": report::int(d),
                "n1": report::int(n1), "n2": report::int(n2),
            }),
            json!({ "g": report::int(residual.g()), "d": report::int(residual.d()) }),
        )
        .print_json(),
        _ => println!(
            "({g}, {d}) linked on ({n1}, {n2}) surfaces -> residual ({}, {})",
            residual.g(),
            residual.d()
        ),
    }
    Ok(())
}

fn parse_components(s: &str) -> Result<Vec<(i64, i64)>, CliError> {
    s.split(';')
        .map(|part| {
            let nums: Vec<i64> = part
                .split(',')
                .map(|p| p.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| {
                    CliError::Usage(format!("cannot parse component `{part}`: expected g,d"))
                })?;
            if nums.len() != 2 {
                return Err(CliError::Usage(format!(
                    "cannot parse component `{part}`: expected g,d"
                )));
            }
            Ok((nums[0], nums[1]))
        })
        .collect()
}

fn cmd_chambers(n1: i64, n2: i64, components: &str, format: Format) -> Result<(), CliError> {
    let comps = parse_components(components)?;
    let spec = SkewLinkageSpec::new(
        n1,
        n2,
        comps.iter().map(|&(g, d)| LinkageComponent::new(g, d)).collect(),
    )
    .map_err(CliError::from)?;
    let structure = linkage::chambers(&spec)?;

    // the wall sequence across the effective cone: E, D1..Dk, S2, S1
    let mut sequence = vec!["E".to_string()];
    for i in 1..=structure.walls.len() {
        sequence.push(format!("D{i}"));
    }
    sequence.push("S2".to_string());
    sequence.push("S1".to_string());

    match format {
        Format::Json => {
            let walls: Vec<Value> = structure.walls.iter().map(report::divisor).collect();
            let rays: Vec<Value> = structure
                .rays
                .iter()
                .map(|r| json!({ "l": report::rational(&r.l), "f": report::rational(&r.f) }))
                .collect();
            Envelope::new(
                "chambers",
                json!({
                    "n1": report::int(n1), "n2": report::int(n2),
                    "components": comps.iter().map(|&(g, d)| json!({
                        "g": report::int(g), "d": report::int(d)
                    })).collect::<Vec<_>>(),
                }),
                json!({
                    "rigidity": report::rigidity(structure.rigidity.class),
                    "balanced": structure.rigidity.balanced,
                    "e": structure.rigidity.e.iter().map(|&v| report::int(v)).collect::<Vec<_>>(),
                    "blocks": structure.blocks,
                    "rays": rays,
                    "walls": walls,
                    "sequence": sequence,
                    "end_contraction": report::end_contraction(structure.end_contraction),
                }),
            )
            .print_json();
        }
        _ => {
            println!(
                "linkage ({n1}, {n2}), {} residual component(s): {}",
                comps.len(),
                report::rigidity(structure.rigidity.class)
            );
            println!("e-invariants: {:?}", structure.rigidity.e);
            println!("blocks by increasing e/d: {:?}", structure.blocks);
            for (i, (wall, ray)) in structure.walls.iter().zip(&structure.rays).enumerate() {
                println!(
                    "D{} = {}H {}E  perpendicular to ray {}l {}f",
                    i + 1,
                    wall.h,
                    wall.e,
                    ray.l,
                    ray.f
                );
            }
            println!("wall sequence: {}", sequence.join(", "));
            println!(
                "end contraction: {}",
                report::end_contraction(structure.end_contraction)
            );
        }
    }
    Ok(())
}

fn cmd_cones(g: i64, d: i64, surface: i64, format: Format) -> Result<(), CliError> {
    let n = numerics(g, d)?;
    let ext = blowup::cones_extremal_surface(&n, surface)?;
    match format {
        Format::Json => Envelope::new(
            "cones",
            json!({
                "g": report::int(g), "d": report::int(d),
                "surface": report::int(surface),
            }),
            json!({
                "cones": report::cone_pair(&ext.cones),
                "radicand": report::bigint(&ext.radicand),
                "irrational_boundary": ext.irrational,
                "inequality_64_8d_2g_2": report::int(ext.inequality_value),
                "d_ge_16": ext.d_ge_16,
            }),
        )
        .print_json(),
        _ => {
            println!("blowup of the ({g}, {d}) curve on its degree-{surface} surface:");
            println!("  effective = <E, {surface}H - E>");
            println!("  movable = nef = <H, ({d} + sqrt({}))H - 4E>", ext.radicand);
            println!(
                "  boundary ray is {} (radicand {})",
                if ext.irrational { "irrational" } else { "rational" },
                ext.radicand
            );
        }
    }
    Ok(())
}

fn cmd_family(n: i64, format: Format) -> Result<(), CliError> {
    let rec = hilbert::large_family(n).map_err(|e| CliError::Usage(e.to_string()))?;
    match format {
        Format::Json => Envelope::new(
            "family",
            json!({ "n": report::int(n) }),
            json!({
                "g": report::int(rec.numerics.g()),
                "d": report::int(rec.numerics.d()),
                "r": report::bigint(&rec.r),
                "component_status": match rec.component.status {
                    hilbert::ComponentStatus::Component => "component",
                    hilbert::ComponentStatus::ComponentOfReduction => "component-of-reduction",
                    hilbert::ComponentStatus::OpenSmoothLocus => "open-smooth-locus",
                    hilbert::ComponentStatus::NotEstablished => "not-established",
                },
                "dimension": rec.component.dimension.map(report::int).unwrap_or(Value::Null),
                "rational_certificate": rec
                    .rational_certificate
                    .as_ref()
                    .map(report::certificate)
                    .unwrap_or(Value::Null),
                "square_root_of_r": rec
                    .square_root_of_r
                    .as_ref()
                    .map(report::bigint)
                    .unwrap_or(Value::Null),
                "obstruction_established": rec.obstruction_established,
                "notes": rec.component.notes,
            }),
        )
        .print_json(),
        _ => {
            println!(
                "family member n = {n}: (g, d) = ({}, {}), r = {}",
                rec.numerics.g(),
                rec.numerics.d(),
                rec.r
            );
            println!(
                "  quartic locus: {} of dimension {}",
                match rec.component.status {
                    hilbert::ComponentStatus::Component => "irreducible component",
                    _ => "status not established",
                },
                rec.component
                    .dimension
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "unknown".into())
            );
            match (&rec.rational_certificate, &rec.square_root_of_r) {
                (Some(_), None) => println!(
                    "  certificates: mod-5 sieve + non-square discriminant -> blowup of a \
                     general member is NOT a Mori Dream Space"
                ),
                (Some(_), Some(root)) => println!(
                    "  r = {root}^2 is a perfect square: the irrational-ray obstruction \
                     does not apply to this member"
                ),
                _ => println!("  certificate chain incomplete"),
            }
        }
    }
    Ok(())
}
