//! Command-line front end: homology reports, hom and ext tables over the
//! generator catalog, seeded verification suites, Burnside arithmetic, and
//! ringoid extraction. Text output is aligned fixed-width; --json switches
//! to the machine format. Exit codes: 0 all checks pass, 1 a check failed,
//! 2 bad input.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use dihedral_algebra::burnside::{idempotent_by_name, BurnsideElement};
use dihedral_algebra::dg::{DgModule, Homology};
use dihedral_algebra::dihedral::{at_infinity, hom_growth, DihedralObject, HomGrowth};
use dihedral_algebra::homotopy::{catalog, catalog_list, ext1, graded_hom};
use dihedral_algebra::json::{burnside_from_str, burnside_to_value, ea_to_value, object_from_str};
use dihedral_algebra::ringoid::{connective_cover, extract_ea, ProductEntry};
use dihedral_algebra::verify::{self, SUITE_NAMES};

#[derive(Parser)]
#[command(name = "dihedral", version, about = "Exact algebra of dihedral equivariant objects")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Componentwise homology of an object given as JSON
    Homology(HomologyArgs),
    /// Degree-0 hom dimensions over the generator catalog
    HomTable(HomTableArgs),
    /// Ext^1 dimensions over the generator catalog
    ExtTable(ExtTableArgs),
    /// Run seeded verification suites
    Verify(VerifyArgs),
    /// Burnside ring arithmetic on named idempotents and JSON elements
    Burnside(BurnsideArgs),
    /// Extract the finite endomorphism category of the catalog
    Ringoid(RingoidArgs),
}

struct CliError(String);

impl CliError {
    fn input(msg: impl Into<String>) -> Self {
        CliError(msg.into())
    }
}

impl From<dihedral_algebra::json::JsonError> for CliError {
    fn from(e: dihedral_algebra::json::JsonError) -> Self {
        CliError(e.to_string())
    }
}

impl From<dihedral_algebra::homotopy::HomotopyError> for CliError {
    fn from(e: dihedral_algebra::homotopy::HomotopyError) -> Self {
        CliError(e.to_string())
    }
}

/// Die silently when the reader goes away (dihedral ... | head), like any
/// other filter; Rust's default turns SIGPIPE into a panic.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    let outcome = match cli.verb {
        Verb::Homology(a) => run_homology(a),
        Verb::HomTable(a) => run_hom_table(a),
        Verb::ExtTable(a) => run_ext_table(a),
        Verb::Verify(a) => run_verify(a),
        Verb::Burnside(a) => run_burnside(a),
        Verb::Ringoid(a) => run_ringoid(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e.0);
            ExitCode::from(2)
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Read JSON from this file
    #[arg(long, value_name = "PATH", conflicts_with = "stdin")]
    file: Option<PathBuf>,
    /// Read JSON from standard input
    #[arg(long)]
    stdin: bool,
}

impl InputArgs {
    fn read(&self) -> Result<String, CliError> {
        if let Some(path) = &self.file {
            std::fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
        } else if self.stdin {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::input(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        } else {
            Err(CliError::input("no input: pass --file PATH or --stdin"))
        }
    }
}

fn parse_degree_range(s: &str) -> Result<(i32, i32), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let lo: i32 = a.trim().parse().map_err(|_| format!("bad lower bound in {s:?}"))?;
    let hi: i32 = b.trim().parse().map_err(|_| format!("bad upper bound in {s:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

/// Aligned table: left-justified row labels, right-justified cells.
fn print_table(corner: &str, col_labels: &[String], rows: &[(String, Vec<String>)]) {
    let label_w = rows
        .iter()
        .map(|(l, _)| l.len())
        .chain([corner.len()])
        .max()
        .unwrap_or(0);
    let col_w: Vec<usize> = col_labels
        .iter()
        .enumerate()
        .map(|(j, l)| {
            rows.iter()
                .map(|(_, cells)| cells[j].len())
                .chain([l.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut header = format!("{corner:<label_w$}");
    for (l, w) in col_labels.iter().zip(&col_w) {
        header.push_str(&format!("  {l:>w$}"));
    }
    println!("{header}");
    for (label, cells) in rows {
        let mut line = format!("{label:<label_w$}");
        for (c, w) in cells.iter().zip(&col_w) {
            line.push_str(&format!("  {c:>w$}"));
        }
        println!("{line}");
    }
}

fn degree_key_map(dims: &BTreeMap<i32, usize>) -> Value {
    let mut m = Map::new();
    for (&n, &dim) in dims {
        m.insert(n.to_string(), Value::from(dim));
    }
    Value::Object(m)
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Restrict reported degrees to this range
    #[arg(long, value_name = "A..B", value_parser = parse_degree_range)]
    degree_range: Option<(i32, i32)>,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

fn run_homology(args: HomologyArgs) -> Result<bool, CliError> {
    let text = args.input.read()?;
    let v = object_from_str(&text)?;
    let mut components: Vec<(String, BTreeMap<i32, usize>)> = Vec::new();
    for k in 1..=v.window() {
        components.push((format!("stalk {k}"), Homology::of(v.stalk_at(k)).dims()));
    }
    components.push(("tail".into(), Homology::of(v.tail()).dims()));
    components.push(("infinity".into(), Homology::of(v.infinity()).dims()));
    if let Some((lo, hi)) = args.degree_range {
        for (_, dims) in &mut components {
            dims.retain(|&n, _| lo <= n && n <= hi);
        }
    }

    if args.json {
        let mut comp = Map::new();
        for (name, dims) in &components {
            comp.insert(name.clone(), degree_key_map(dims));
        }
        let out = json!({ "window": v.window(), "components": comp });
        println!("{out}");
        return Ok(true);
    }

    println!("object window {}", v.window());
    let mut degrees: Vec<i32> = components
        .iter()
        .flat_map(|(_, dims)| dims.keys().copied())
        .collect();
    degrees.sort_unstable();
    degrees.dedup();
    if degrees.is_empty() {
        println!("all components acyclic");
        return Ok(true);
    }
    let col_labels: Vec<String> = degrees.iter().map(|n| format!("H_{n}")).collect();
    let rows: Vec<(String, Vec<String>)> = components
        .iter()
        .map(|(name, dims)| {
            let cells = degrees
                .iter()
                .map(|n| dims.get(n).copied().unwrap_or(0).to_string())
                .collect();
            (name.clone(), cells)
        })
        .collect();
    print_table("component", &col_labels, &rows);
    Ok(true)
}

fn growth_cell(g: &HomGrowth) -> String {
    if g.increment == 0 {
        return g.base_dim.to_string();
    }
    let c0 = g.base_dim as i64 - g.base_window as i64 * g.increment as i64;
    let k_term = if g.increment == 1 {
        "K".to_string()
    } else {
        format!("{}K", g.increment)
    };
    if c0 == 0 {
        format!("{k_term} at window K")
    } else {
        format!("{k_term}+{c0} at window K")
    }
}

#[derive(Args)]
struct HomTableArgs {
    /// Largest tensor power of the stalk generator
    #[arg(long, default_value_t = 3)]
    imax: usize,
    /// Largest stalk position
    #[arg(long, default_value_t = 3)]
    kmax: usize,
    /// Degrees scanned for stray entries outside degree 0
    #[arg(long, value_name = "A..B", value_parser = parse_degree_range, default_value = "-2..2")]
    degree_range: (i32, i32),
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

fn run_hom_table(args: HomTableArgs) -> Result<bool, CliError> {
    if args.imax < 1 || args.kmax < 1 {
        return Err(CliError::input("imax and kmax must be at least 1"));
    }
    let objects: Vec<(String, DihedralObject)> = catalog_list(args.imax, args.kmax)
        .iter()
        .map(|e| (e.label(), catalog(*e)))
        .collect();
    let (lo, hi) = args.degree_range;

    let mut cells: Vec<Vec<HomGrowth>> = Vec::new();
    let mut stray: Vec<(String, String, i32, usize)> = Vec::new();
    for (la, a) in &objects {
        let mut row = Vec::new();
        for (lb, b) in &objects {
            row.push(hom_growth(a, b));
            let window = a.window().max(b.window());
            let h = graded_hom(a, b, window, lo, hi)?;
            for (&n, &dim) in &h {
                if n != 0 && dim > 0 {
                    stray.push((la.clone(), lb.clone(), n, dim));
                }
            }
        }
        cells.push(row);
    }

    if args.json {
        let labels: Vec<&String> = objects.iter().map(|(l, _)| l).collect();
        let rows: Vec<Vec<Value>> = cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|g| {
                        json!({
                            "base_window": g.base_window,
                            "base_dim": g.base_dim,
                            "increment": g.increment,
                        })
                    })
                    .collect()
            })
            .collect();
        let off: Vec<Value> = stray
            .iter()
            .map(|(a, b, n, d)| json!({ "source": a, "target": b, "degree": n, "dim": d }))
            .collect();
        let out = json!({
            "imax": args.imax,
            "kmax": args.kmax,
            "degree_range": [lo, hi],
            "labels": labels,
            "cells": rows,
            "off_degree_nonzero": off,
        });
        println!("{out}");
        return Ok(stray.is_empty());
    }

    println!("degree-0 hom dimensions (imax {}, kmax {})", args.imax, args.kmax);
    let col_labels: Vec<String> = objects.iter().map(|(l, _)| l.clone()).collect();
    let rows: Vec<(String, Vec<String>)> = objects
        .iter()
        .zip(&cells)
        .map(|((label, _), row)| (label.clone(), row.iter().map(growth_cell).collect()))
        .collect();
    print_table("source \\ target", &col_labels, &rows);
    if stray.is_empty() {
        println!("no nonzero entries outside degree 0 in degrees {lo}..{hi}");
    } else {
        for (a, b, n, d) in &stray {
            println!("NONZERO off-degree entry hom({a}, {b}) degree {n} dim {d}");
        }
    }
    Ok(stray.is_empty())
}

#[derive(Args)]
struct ExtTableArgs {
    /// Largest tensor power of the stalk generator
    #[arg(long, default_value_t = 2)]
    imax: usize,
    /// Largest stalk position
    #[arg(long, default_value_t = 2)]
    kmax: usize,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

fn run_ext_table(args: ExtTableArgs) -> Result<bool, CliError> {
    if args.imax < 1 || args.kmax < 1 {
        return Err(CliError::input("imax and kmax must be at least 1"));
    }
    let mut objects: Vec<(String, DihedralObject)> = catalog_list(args.imax, args.kmax)
        .iter()
        .map(|e| (e.label(), catalog(*e)))
        .collect();
    // Two flat objects outside the catalog that carry the interesting
    // extensions: Q at infinity only, and Q in every stalk with nothing at
    // infinity.
    objects.push(("sigma_inf".into(), at_infinity(&DgModule::single(0, 1))));
    objects.push((
        "tail_Q".into(),
        DihedralObject::new(
            vec![],
            DgModule::single(0, 1).with_trivial_involution(),
            DgModule::zero_module(false),
            BTreeMap::new(),
        )
        .expect("constant tail object is valid"),
    ));

    let mut dims: Vec<Vec<usize>> = Vec::new();
    for (_, a) in &objects {
        let mut row = Vec::new();
        for (_, b) in &objects {
            row.push(ext1(a, b)?.dim);
        }
        dims.push(row);
    }

    if args.json {
        let labels: Vec<&String> = objects.iter().map(|(l, _)| l).collect();
        let out = json!({
            "imax": args.imax,
            "kmax": args.kmax,
            "labels": labels,
            "dims": dims,
        });
        println!("{out}");
        return Ok(true);
    }

    println!("ext^1 dimensions (imax {}, kmax {})", args.imax, args.kmax);
    let col_labels: Vec<String> = objects.iter().map(|(l, _)| l.clone()).collect();
    let rows: Vec<(String, Vec<String>)> = objects
        .iter()
        .zip(&dims)
        .map(|((label, _), row)| {
            (label.clone(), row.iter().map(|d| d.to_string()).collect())
        })
        .collect();
    print_table("source \\ target", &col_labels, &rows);
    Ok(true)
}

#[derive(Args)]
struct VerifyArgs {
    /// One of adjunctions, monoidal, model, boxplus, burnside, ringoid, all
    #[arg(long, default_value = "all")]
    suite: String,
    /// Seed for the random instances; echoed in the report
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

fn run_verify(args: VerifyArgs) -> Result<bool, CliError> {
    let Some(reports) = verify::run(&args.suite, args.seed) else {
        return Err(CliError::input(format!(
            "unknown suite {:?}: expected one of {}, or all",
            args.suite,
            SUITE_NAMES.join(", ")
        )));
    };
    let all = reports.iter().all(|r| r.passed());
    if args.json {
        let out = json!({
            "seed": args.seed,
            "passed": all,
            "suites": reports,
        });
        println!("{out}");
    } else {
        for r in &reports {
            print!("{r}");
        }
    }
    Ok(all)
}

#[derive(Args)]
struct BurnsideArgs {
    #[command(subcommand)]
    op: BurnsideOp,
}

#[derive(Subcommand)]
enum BurnsideOp {
    /// Print an element
    Show {
        element: String,
        #[arg(long)]
        json: bool,
    },
    /// Sum of two elements
    Add {
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Product of two elements
    Mul {
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients in the idempotent basis
    Decompose {
        element: String,
        #[arg(long)]
        json: bool,
    },
}

fn parse_element(s: &str) -> Result<BurnsideElement, CliError> {
    if s.trim_start().starts_with('{') {
        Ok(burnside_from_str(s)?)
    } else {
        idempotent_by_name(s.trim()).ok_or_else(|| {
            CliError::input(format!(
                "unknown element {s:?}: use e_C, e_D, e_n, f_n, or inline JSON"
            ))
        })
    }
}

fn emit_element(x: &BurnsideElement, json_out: bool) {
    if json_out {
        println!("{}", burnside_to_value(x));
    } else {
        println!("{x}");
    }
}

fn run_burnside(args: BurnsideArgs) -> Result<bool, CliError> {
    match args.op {
        BurnsideOp::Show { element, json } => {
            emit_element(&parse_element(&element)?, json);
        }
        BurnsideOp::Add { left, right, json } => {
            let x = parse_element(&left)?;
            let y = parse_element(&right)?;
            emit_element(&x.add(&y), json);
        }
        BurnsideOp::Mul { left, right, json } => {
            let x = parse_element(&left)?;
            let y = parse_element(&right)?;
            emit_element(&x.mul(&y), json);
        }
        BurnsideOp::Decompose { element, json } => {
            let x = parse_element(&element)?;
            let (c, d, residuals) = x.decompose();
            if json {
                let mut res = Map::new();
                for (k, coeff) in &residuals {
                    res.insert(k.to_string(), Value::from(coeff.to_string()));
                }
                let out = json!({
                    "e_C": c.to_string(),
                    "e_D": d.to_string(),
                    "residuals": res,
                });
                println!("{out}");
            } else {
                println!("e_C  {c}");
                println!("e_D  {d}");
                for (k, coeff) in &residuals {
                    println!("e_{k}  {coeff}");
                }
            }
        }
    }
    Ok(true)
}

#[derive(Args)]
struct RingoidArgs {
    /// Largest tensor power of the stalk generator
    #[arg(long, default_value_t = 2)]
    imax: usize,
    /// Largest stalk position
    #[arg(long, default_value_t = 2)]
    kmax: usize,
    /// Window at which hom(unit, unit) is truncated
    #[arg(long, default_value_t = 2)]
    cutoff: usize,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

fn run_ringoid(args: RingoidArgs) -> Result<bool, CliError> {
    if args.imax < 1 || args.kmax < 1 || args.cutoff < 1 {
        return Err(CliError::input("imax, kmax, and cutoff must be at least 1"));
    }
    let ea = extract_ea(args.imax, args.kmax, args.cutoff);
    let cat = &ea.category;
    let n = cat.len();
    let degree0 = (0..n)
        .all(|a| (0..n).all(|b| cat.hom(a, b).support().iter().all(|&d| d == 0)));
    let (cover, i, p) = connective_cover(cat);
    let cover_identity = cover == *cat;
    let i_ok = i.is_quasi_equivalence();
    let p_ok = p.is_quasi_equivalence();
    let passed = degree0 && cover_identity && i_ok && p_ok;

    if args.json {
        let out = json!({
            "checks": {
                "homs_in_degree_0": degree0,
                "connective_cover_identity": cover_identity,
                "i_quasi_equivalence": i_ok,
                "p_quasi_equivalence": p_ok,
            },
            "extraction": ea_to_value(&ea),
        });
        println!("{out}");
        return Ok(passed);
    }

    println!(
        "ringoid extraction (imax {}, kmax {}, cutoff {})",
        args.imax, args.kmax, args.cutoff
    );
    let labels = cat.labels();
    println!("objects: {}", labels.join(" "));
    println!("hom dimensions in degree 0:");
    let col_labels: Vec<String> = labels.to_vec();
    let rows: Vec<(String, Vec<String>)> = (0..n)
        .map(|a| {
            let cells = (0..n).map(|b| cat.hom(a, b).dim(0).to_string()).collect();
            (labels[a].clone(), cells)
        })
        .collect();
    print_table("source \\ target", &col_labels, &rows);
    let yes_no = |b: bool| if b { "yes" } else { "NO" };
    println!("homs concentrated in degree 0: {}", yes_no(degree0));
    println!("unit growth: {}", growth_cell(&ea.unit_growth));
    let mut object = 0;
    let mut zero = 0;
    let mut exceeds = 0;
    for entry in ea.products.values() {
        match entry {
            ProductEntry::Object(_) => object += 1,
            ProductEntry::Zero => zero += 1,
            ProductEntry::ExceedsBound { .. } => exceeds += 1,
        }
    }
    println!("products: {object} object, {zero} zero, {exceeds} exceed the power bound");
    println!(
        "connective cover identity: {}; i quasi-equivalence: {}; p quasi-equivalence: {}",
        yes_no(cover_identity),
        yes_no(i_ok),
        yes_no(p_ok)
    );
    Ok(passed)
}
