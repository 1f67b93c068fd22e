//! Command definitions and their implementations.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use knet_core::families::{self, FamilyError, HypersurfacePoint, Quintic};
use knet_core::io::{
    class_from_json, coords_to_json, field_to_json, latin_to_json, net_from_json, net_to_json, parse,
    point_set_from_json, squares_from_json, FormatError,
};
use knet_core::latin::{self, classify_isotopy_classes, enumerate_reduced, is_group_isotopic, is_orthogonal_pair};
use knet_core::net::{derive_latin_squares, discover_parallel_classes, find_perspectivities, verify_net};
use knet_core::pencil::{net_pencil_certificate, PencilCoord, PencilError};
use knet_core::{KNetConfig, LatinSquare, LineClass, NumberField, Scalar};
use serde_json::{json, Value};
use thiserror::Error;

use crate::params::{parse_field, parse_p1, parse_p2};
use crate::plane::{build_projective_plane, verify_axioms};
use crate::render::{render_svg, ViewBox};

#[derive(Debug, Parser)]
#[command(name = "knet", version, about = "Construct and verify k-nets of lines in the projective plane")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Field for parameters and for input files that declare none:
    /// Q, zetaN, sqrt(D), poly:c0,...,cn or a JSON object.
    #[arg(long, global = true, value_name = "FIELD")]
    pub field: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify a net file and print its Latin squares and pencil certificate.
    Verify { file: PathBuf },
    /// Generate a net from a named family.
    Family(FamilyArgs),
    /// Latin square utilities.
    Latin {
        #[command(subcommand)]
        command: LatinCommand,
    },
    /// Perspectivities between two line classes (FILE or FILE:INDEX, 1-based).
    Persp { a: String, b: String },
    /// Pencil certificate of a net.
    Pencil { file: PathBuf },
    /// All parallel classes of d² points and the largest net they carry.
    Discover {
        file: PathBuf,
        #[arg(short = 'd', long = "degree")]
        degree: usize,
    },
    /// Projective plane from a complete set of orthogonal Latin squares.
    Plane {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Draw a net over Q as SVG in the chart z = 1.
    Render {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// xmin,ymin,xmax,ymax
        #[arg(long, value_parser = parse_viewbox, allow_hyphen_values = true)]
        viewbox: Option<ViewBox>,
    },
    /// Search a rational point of a quintic family's parameter hypersurface.
    SampleParams {
        /// cyclic5 or nongroup5
        which: Quintic,
        #[arg(long, default_value_t = 5)]
        bound: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Conic,
    Fermat,
    Cubic,
    Hesse,
    QuarticCyclic,
    QuarticKlein,
    QuinticCyclic,
    QuinticNongroup,
}

#[derive(Debug, clap::Args)]
pub struct FamilyArgs {
    pub name: FamilyName,
    /// Parameter s: `r` (meaning [r:1]) or `a:b`; `a:b:c` for quintic families.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Parameter t, written like s.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Parameter u of the quartic families.
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<String>,
    /// Degree of the Fermat net.
    #[arg(short = 'd', long = "degree", default_value_t = 3)]
    pub degree: usize,
    /// Pick quintic parameters with sample-params.
    #[arg(long)]
    pub auto_sample: bool,
    /// Height bound for --auto-sample.
    #[arg(long, default_value_t = 5)]
    pub bound: i64,
    /// Re-verify the net before writing it.
    #[arg(long)]
    pub verify: bool,
    /// Write the net here instead of stdout.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum LatinCommand {
    /// Isotopy classes of Latin squares of order d (at most 5).
    Classify {
        #[arg(short = 'd', long = "degree")]
        degree: usize,
    },
    /// Check that the squares in the given files are pairwise orthogonal.
    CheckOrthogonal {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Decide whether each square is isotopic to a group table.
    GroupTest { file: PathBuf },
    /// Print a built-in square set: pair3, triple4, nongroup5, klein or cyclicN.
    Example { name: String },
}

fn parse_viewbox(s: &str) -> Result<ViewBox, String> {
    let v: Vec<f64> = s.split(',').map(|x| x.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    v.try_into().map_err(|_| "expected xmin,ymin,xmax,ymax".to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Format(FormatError),
    #[error("{0}")]
    Usage(String),
    /// A well-formed input that fails a mathematical requirement.
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            _ => 2,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Net(e) => CliError::Math(e.to_string()),
            e => CliError::Format(e),
        }
    }
}

fn math(e: impl std::fmt::Display) -> CliError {
    CliError::Math(e.to_string())
}

/// What a command prints; `passed` decides between exit codes 0 and 1.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl Output {
    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

struct Context {
    field: Option<NumberField>,
}

impl Context {
    fn param_field(&self) -> NumberField {
        self.field.clone().unwrap_or_else(NumberField::rationals)
    }

    fn read(&self, path: &Path) -> Result<Value, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        let mut v = parse(&text)?;
        if let (Some(field), Value::Object(map)) = (&self.field, &mut v) {
            map.entry("field").or_insert_with(|| field_to_json(field));
        }
        Ok(v)
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.into(), source })
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let field = cli.field.as_deref().map(parse_field).transpose().map_err(CliError::Usage)?;
    let ctx = Context { field };
    match &cli.command {
        Command::Verify { file } => cmd_verify(&ctx, file),
        Command::Family(args) => cmd_family(&ctx, args),
        Command::Latin { command } => cmd_latin(&ctx, command),
        Command::Persp { a, b } => cmd_persp(&ctx, a, b),
        Command::Pencil { file } => cmd_pencil(&ctx, file),
        Command::Discover { file, degree } => cmd_discover(&ctx, file, *degree),
        Command::Plane { files } => cmd_plane(&ctx, files),
        Command::Render { file, output, viewbox } => cmd_render(&ctx, file, output, *viewbox),
        Command::SampleParams { which, bound } => cmd_sample(*which, *bound),
    }
}

fn coord_json(c: &PencilCoord) -> Value {
    let n = c.normalized();
    coords_to_json(&[n.lambda, n.mu])
}

fn group_label(sq: &LatinSquare) -> (String, Value) {
    match is_group_isotopic(sq) {
        Ok(Some(g)) => (format!("isotopic to {g}"), json!(g.to_string())),
        Ok(None) => ("not isotopic to a group table".into(), Value::Null),
        Err(_) => (format!("not classified (order {})", sq.order()), Value::Null),
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}\n")).collect()
}

fn cmd_verify(ctx: &Context, file: &Path) -> Result<Output, CliError> {
    let net = net_from_json(&ctx.read(file)?)?;
    let report = verify_net(&net).map_err(math)?;
    let mut text = report.to_string();
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "condition": c.condition.to_string(),
                "passed": c.passed(),
                "witnesses": c.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut out = json!({ "k": net.k(), "d": net.degree(), "field": net.field().to_string(), "checks": checks });
    if !report.passed() {
        text.push_str("net verification FAILED\n");
        out["passed"] = json!(false);
        return Ok(Output { text, json: out, passed: false });
    }

    let squares = derive_latin_squares(&net).map_err(math)?;
    let mut square_json = vec![];
    for (i, sq) in squares.iter().enumerate() {
        let (label, group) = group_label(sq);
        writeln!(text, "M{} ({label}):\n{}", i + 3, indent(&sq.to_string())).unwrap();
        let mut v = latin_to_json(sq);
        v["group"] = group;
        square_json.push(v);
    }
    out["squares"] = Value::Array(square_json);
    let orthogonal = latin::is_orthogonal_set(&squares).map_err(math)?;
    let shape = match (squares.len(), orthogonal) {
        (0 | 1, _) => None,
        (2, true) => Some("orthogonal pair".to_string()),
        (n, true) => Some(format!("orthogonal set of {n}")),
        (_, false) => Some("squares NOT orthogonal".to_string()),
    };
    out["orthogonal"] = json!(orthogonal);

    let cert = net_pencil_certificate(&net).map_err(math)?;
    writeln!(text, "pencil: rank {}, base points {}", cert.rank, if cert.base_points_ok { "ok" } else { "FAIL" }).unwrap();
    for (i, (f, c)) in cert.forms.iter().zip(&cert.coords).enumerate() {
        writeln!(text, "  C{} = {f}\n       [lambda : mu] = {c}", i + 1).unwrap();
    }
    out["pencil"] = json!({
        "rank": cert.rank,
        "base_points_ok": cert.base_points_ok,
        "coords": cert.coords.iter().map(coord_json).collect::<Vec<_>>(),
    });
    let passed = orthogonal && cert.rank == 2 && cert.base_points_ok;
    let d = net.degree().expect("verified");
    let mut summary = vec![];
    summary.extend(shape);
    summary.push(format!("d={d}"));
    summary.push(format!("k={}", net.k()));
    writeln!(text, "{}: {}", if passed { "net verified" } else { "net verification FAILED" }, summary.join(", ")).unwrap();
    out["passed"] = json!(passed);
    Ok(Output { text, json: out, passed })
}

fn require<'a>(v: &'a Option<String>, flag: &str, name: FamilyName) -> Result<&'a str, CliError> {
    v.as_deref().ok_or_else(|| CliError::Usage(format!("{} needs --{flag}", family_label(name))))
}

fn family_label(name: FamilyName) -> String {
    name.to_possible_value().expect("named").get_name().to_string()
}

fn family_err(e: FamilyError) -> CliError {
    math(e)
}

fn scalar_token(s: &Scalar) -> String {
    match s.as_rational() {
        Some(r) => r.to_string(),
        None => format!("({})", s.coeffs().iter().join(",")),
    }
}

fn param_token(p: &[Scalar]) -> String {
    p.iter().map(scalar_token).join(":")
}

fn cmd_family(ctx: &Context, args: &FamilyArgs) -> Result<Output, CliError> {
    let k = ctx.param_field();
    let p1 = |v: &Option<String>, flag: &str| -> Result<_, CliError> {
        parse_p1(&k, require(v, flag, args.name)?).map_err(CliError::Usage)
    };
    let mut extra = serde_json::Map::new();
    let net = match args.name {
        FamilyName::Conic => families::conic_net(),
        FamilyName::Hesse => families::hesse_net(),
        FamilyName::Fermat => families::fermat_net(args.degree).map_err(family_err)?,
        FamilyName::Cubic => families::cubic_net(&p1(&args.s, "s")?, &p1(&args.t, "t")?).map_err(family_err)?,
        FamilyName::QuarticCyclic => {
            families::quartic_net_cyclic(&p1(&args.s, "s")?, &p1(&args.t, "t")?, &p1(&args.u, "u")?)
                .map_err(family_err)?
        }
        FamilyName::QuarticKlein => {
            families::quartic_net_klein(&p1(&args.s, "s")?, &p1(&args.t, "t")?, &p1(&args.u, "u")?)
                .map_err(family_err)?
        }
        FamilyName::QuinticCyclic | FamilyName::QuinticNongroup => {
            let which = if args.name == FamilyName::QuinticCyclic { Quintic::Cyclic } else { Quintic::NonGroup };
            let point = if args.auto_sample {
                families::sample_hypersurface(which, args.bound).map_err(family_err)?
            } else {
                let s = parse_p2(&k, require(&args.s, "s", args.name)?).map_err(CliError::Usage)?;
                let t = parse_p2(&k, require(&args.t, "t", args.name)?).map_err(CliError::Usage)?;
                HypersurfacePoint { which, s, t }
            };
            let built = families::quintic_net(&point).map_err(family_err)?;
            let squares = derive_latin_squares(&built.net).map_err(math)?;
            let (label, group) = group_label(&squares[0]);
            let mut cert = json!({
                "s": param_token(&point.s),
                "t": param_token(&point.t),
                "field": point.field().to_string(),
                "square": latin_to_json(&squares[0]),
                "group": group,
                "summary": label,
                "l24": coords_to_json(built.l24.coords()),
                "l25": coords_to_json(built.l25.coords()),
                "extra_axes": built.extra_axes.len(),
            });
            if let Some(l13) = &built.derived_l13 {
                cert["l13"] = coords_to_json(l13.coords());
            }
            extra.insert("certificate".into(), cert);
            built.net
        }
    };
    if args.verify {
        let report = verify_net(&net).map_err(math)?;
        let cert = net_pencil_certificate(&net).map_err(math)?;
        if !report.passed() || cert.rank != 2 || !cert.base_points_ok {
            return Err(CliError::Math(format!("generated net failed verification:\n{report}")));
        }
        extra.insert("verified".into(), json!(true));
    }
    let mut v = net_to_json(&net);
    let map = v.as_object_mut().expect("object");
    map.insert("family".into(), json!(family_label(args.name)));
    map.extend(extra);
    let mut text = serde_json::to_string_pretty(&v).expect("serializable");
    text.push('\n');
    if let Some(path) = &args.output {
        write_file(path, &text)?;
        let summary = format!("wrote {}: k = {}, {} lines\n", path.display(), net.k(), net.lines().count());
        return Ok(Output { text: summary, json: json!({ "output": path, "net": v }), passed: true });
    }
    Ok(Output { text, json: v, passed: true })
}

fn read_squares(ctx: &Context, files: &[PathBuf]) -> Result<Vec<LatinSquare>, CliError> {
    let mut out = vec![];
    for f in files {
        out.extend(squares_from_json(&ctx.read(f)?)?);
    }
    Ok(out)
}

fn example_squares(name: &str) -> Result<Vec<LatinSquare>, CliError> {
    Ok(match name {
        "pair3" => latin::orthogonal_pair_order3().to_vec(),
        "triple4" => latin::orthogonal_triple_order4().to_vec(),
        "nongroup5" => vec![latin::non_group_order5()],
        "klein" => vec![latin::klein_group_table()],
        _ => match name.strip_prefix("cyclic").and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if (1..=9).contains(&n) => vec![latin::cyclic_group_table(n)],
            _ => return Err(CliError::Usage(format!("unknown example {name:?}"))),
        },
    })
}

fn cmd_latin(ctx: &Context, command: &LatinCommand) -> Result<Output, CliError> {
    match command {
        LatinCommand::Classify { degree } => {
            let reduced = enumerate_reduced(*degree).map_err(math)?;
            let classes = classify_isotopy_classes(*degree).map_err(math)?;
            let mut text = format!("d = {degree}: {} reduced squares, {} isotopy classes\n", reduced.len(), classes.len());
            let mut reps = vec![];
            for (i, sq) in classes.iter().enumerate() {
                let (label, group) = group_label(sq);
                writeln!(text, "class {} ({label}):\n{}", i + 1, indent(&sq.to_string())).unwrap();
                let mut v = latin_to_json(sq);
                v["group"] = group;
                reps.push(v);
            }
            let json = json!({ "order": degree, "reduced": reduced.len(), "classes": reps });
            Ok(Output { text, json, passed: true })
        }
        LatinCommand::CheckOrthogonal { files } => {
            let squares = read_squares(ctx, files)?;
            if squares.len() < 2 {
                return Err(CliError::Usage("need at least two squares".into()));
            }
            let mut text = String::new();
            let mut pairs = vec![];
            let mut passed = true;
            for (a, b) in (0..squares.len()).tuple_combinations() {
                let ok = is_orthogonal_pair(&squares[a], &squares[b]).map_err(math)?;
                passed &= ok;
                writeln!(text, "squares {} and {}: {}", a + 1, b + 1, if ok { "orthogonal" } else { "NOT orthogonal" }).unwrap();
                pairs.push(json!({ "a": a + 1, "b": b + 1, "orthogonal": ok }));
            }
            writeln!(text, "{}", if passed { "orthogonal set" } else { "not an orthogonal set" }).unwrap();
            Ok(Output { text, json: json!({ "orthogonal": passed, "pairs": pairs }), passed })
        }
        LatinCommand::GroupTest { file } => {
            let squares = read_squares(ctx, std::slice::from_ref(file))?;
            let mut text = String::new();
            let mut results = vec![];
            let mut passed = true;
            for (i, sq) in squares.iter().enumerate() {
                let g = is_group_isotopic(sq).map_err(math)?;
                passed &= g.is_some();
                match g {
                    Some(g) => writeln!(text, "square {}: isotopic to {g}", i + 1).unwrap(),
                    None => writeln!(text, "square {}: not a group", i + 1).unwrap(),
                }
                results.push(json!({ "order": sq.order(), "group": g.map(|g| g.to_string()) }));
            }
            Ok(Output { text, json: json!({ "results": results }), passed })
        }
        LatinCommand::Example { name } => {
            let squares = example_squares(name)?;
            let v = json!({ "squares": squares.iter().map(latin_to_json).collect::<Vec<_>>() });
            let mut text = serde_json::to_string_pretty(&v).expect("serializable");
            text.push('\n');
            Ok(Output { text, json: v, passed: true })
        }
    }
}

fn read_class(ctx: &Context, arg: &str) -> Result<LineClass, CliError> {
    let (path, index) = match arg.rsplit_once(':') {
        Some((p, i)) if !p.is_empty() && i.parse::<usize>().is_ok() => {
            let i: usize = i.parse().expect("checked");
            if i == 0 {
                return Err(CliError::Usage("class indices start at 1".into()));
            }
            (p, Some(i - 1))
        }
        _ => (arg, None),
    };
    Ok(class_from_json(&ctx.read(Path::new(path))?, index)?)
}

fn cmd_persp(ctx: &Context, a: &str, b: &str) -> Result<Output, CliError> {
    let (a, b) = (read_class(ctx, a)?, read_class(ctx, b)?);
    if a.field() != b.field() {
        return Err(CliError::Usage(format!("classes over different fields {} and {}", a.field(), b.field())));
    }
    let report = find_perspectivities(&a, &b).map_err(math)?;
    let one_based = |s: &latin::Permutation| s.images().iter().map(|i| i + 1).collect::<Vec<_>>();
    let mut text = format!("{} perspectivities\n", report.count());
    let mut list = vec![];
    for p in &report.perspectivities {
        let sigma = one_based(&p.sigma);
        writeln!(text, "  sigma = {} axis {}", sigma.iter().join(" "), p.axis).unwrap();
        list.push(json!({ "sigma": sigma, "axis": coords_to_json(p.axis.coords()) }));
    }
    if !report.degenerate.is_empty() {
        writeln!(text, "{} permutations with coincident meets (not counted)", report.degenerate.len()).unwrap();
    }
    let degenerate: Vec<_> = report.degenerate.iter().map(one_based).collect();
    let json = json!({ "count": report.count(), "perspectivities": list, "degenerate": degenerate });
    Ok(Output { text, json, passed: true })
}

fn cmd_pencil(ctx: &Context, file: &Path) -> Result<Output, CliError> {
    let net = net_from_json(&ctx.read(file)?)?;
    let cert = match net_pencil_certificate(&net) {
        Ok(c) => c,
        Err(PencilError::NotANet) => return Err(CliError::Math("not a net; run verify for witnesses".into())),
        Err(e) => return Err(math(e)),
    };
    let mut text = format!("rank {} (pencil iff 2)\n", cert.rank);
    for (i, (f, c)) in cert.forms.iter().zip(&cert.coords).enumerate() {
        writeln!(text, "C{} = {f}\n     [lambda : mu] = {c}", i + 1).unwrap();
    }
    writeln!(text, "base points: {}", if cert.base_points_ok { "all points of the net" } else { "FAIL" }).unwrap();
    let passed = cert.rank == 2 && cert.base_points_ok;
    let json = json!({
        "rank": cert.rank,
        "forms": cert.forms.iter().map(|f| coords_to_json(f.coeffs())).collect::<Vec<_>>(),
        "coords": cert.coords.iter().map(coord_json).collect::<Vec<_>>(),
        "base_points_ok": cert.base_points_ok,
    });
    Ok(Output { text, json, passed })
}

fn share_a_line(a: &LineClass, b: &LineClass) -> bool {
    a.lines().iter().any(|l| b.lines().contains(l))
}

/// A largest set of pairwise line-disjoint classes.
fn largest_disjoint(classes: &[LineClass]) -> Vec<usize> {
    fn grow(classes: &[LineClass], chosen: &mut Vec<usize>, next: usize, best: &mut Vec<usize>) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        for i in next..classes.len() {
            if chosen.len() + (classes.len() - i) <= best.len() {
                return;
            }
            if chosen.iter().all(|&c| !share_a_line(&classes[c], &classes[i])) {
                chosen.push(i);
                grow(classes, chosen, i + 1, best);
                chosen.pop();
            }
        }
    }
    let mut best = vec![];
    grow(classes, &mut vec![], 0, &mut best);
    best
}

fn cmd_discover(ctx: &Context, file: &Path, d: usize) -> Result<Output, CliError> {
    let points = point_set_from_json(&ctx.read(file)?)?;
    let classes = discover_parallel_classes(&points, d).map_err(math)?;
    let best = largest_disjoint(&classes);
    let k = if best.len() >= 2 { best.len() } else { 0 };
    let mut text = format!("{} parallel classes\n", classes.len());
    for (i, c) in classes.iter().enumerate() {
        writeln!(text, "  class {}: {}", i + 1, c.lines().iter().join(", ")).unwrap();
    }
    writeln!(text, "maximal k = {k}").unwrap();
    let mut json = json!({
        "classes": classes.iter().map(|c| c.lines().iter().map(|l| coords_to_json(l.coords())).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "k": k,
    });
    if k >= 2 {
        let chosen: Vec<LineClass> = best.iter().map(|&i| classes[i].clone()).collect();
        let net = KNetConfig::new(chosen, points).map_err(math)?;
        json["net"] = net_to_json(&net);
        json["chosen"] = json!(best.iter().map(|i| i + 1).collect::<Vec<_>>());
    }
    Ok(Output { text, json, passed: true })
}

fn cmd_plane(ctx: &Context, files: &[PathBuf]) -> Result<Output, CliError> {
    let squares = read_squares(ctx, files)?;
    let plane = build_projective_plane(&squares).map_err(math)?;
    let report = verify_axioms(&plane, squares[0].order());
    let json = json!({
        "order": report.order,
        "points": plane.points,
        "lines": plane.lines.iter().map(|l| l.iter().map(|&p| plane.points[p].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "axioms": report.checks.iter().map(|c| json!({ "axiom": c.axiom.to_string(), "passed": c.passed(), "witness": c.witness })).collect::<Vec<_>>(),
    });
    Ok(Output { text: report.to_string(), json, passed: report.passed() })
}

fn cmd_render(ctx: &Context, file: &Path, output: &Path, viewbox: Option<ViewBox>) -> Result<Output, CliError> {
    let net = net_from_json(&ctx.read(file)?)?;
    let r = render_svg(&net, viewbox).map_err(math)?;
    write_file(output, &r.svg)?;
    let text = format!(
        "wrote {}: {} lines ({} drawn), {} points ({} drawn)\n",
        output.display(),
        r.lines_drawn + r.lines_listed,
        r.lines_drawn,
        r.points_drawn + r.points_listed,
        r.points_drawn
    );
    let json = json!({
        "output": output,
        "lines": r.lines_drawn + r.lines_listed,
        "lines_drawn": r.lines_drawn,
        "points": r.points_drawn + r.points_listed,
        "points_drawn": r.points_drawn,
    });
    Ok(Output { text, json, passed: true })
}

fn cmd_sample(which: Quintic, bound: i64) -> Result<Output, CliError> {
    let p = families::sample_hypersurface(which, bound).map_err(math)?;
    let (s, t) = (param_token(&p.s), param_token(&p.t));
    let text = format!(
        "{which} over {}: --s {s} --t {t}\n  s = [{}]\n  t = [{}]\n",
        p.field(),
        p.s.iter().join(" : "),
        p.t.iter().join(" : ")
    );
    let mut json = json!({
        "which": which.name(),
        "field": p.field().to_string(),
        "s": coords_to_json(&p.s),
        "t": coords_to_json(&p.t),
        "s_param": s,
        "t_param": t,
    });
    if !p.field().is_rationals() {
        json["field_poly"] = field_to_json(p.field());
    }
    Ok(Output { text, json, passed: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use knet_core::families::conic_net;

    #[test]
    fn disjoint_classes_of_the_conic_points() {
        let classes = discover_parallel_classes(conic_net().points(), 2).unwrap();
        assert_eq!(largest_disjoint(&classes).len(), 3);
    }

    #[test]
    fn viewbox_parsing() {
        assert_eq!(parse_viewbox("-1,-2,3,4").unwrap(), [-1.0, -2.0, 3.0, 4.0]);
        assert!(parse_viewbox("1,2,3").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
