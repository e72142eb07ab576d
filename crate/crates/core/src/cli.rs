//! Command-line front end, the `.bm` and `.g` file formats, and exit codes.
//!
//! Exit codes: 0 when every check passes, 1 when a verification found a
//! violating witness, 2 on usage or I/O errors, 3 when a budget or scan
//! limit left the run incomplete.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use log::warn;
use serde_json::json;

use crate::drivers::{self, ComputOptions, ComputPart, Report, SearchOptions, ThresholdMode};
use crate::error::{Error, Result};
use crate::extend::{enumerate_extensions, gamma, CatalogLayer, ExtendOptions, ExtensionVector, Filter};
use crate::gf2::BitMatrix;
use crate::iso::{are_isomorphic, canonical_key};
use crate::matroid::{numeric_labels, BinaryMatroid, Label};
use crate::minors::has_minor;
use crate::nsc::report;
use crate::zoo::{self, SimpleGraph};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCOMPLETE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "binmat", version, about = "Non-separating cocircuits and coextension search for binary matroids")]
pub struct Cli {
    /// Print JSON reports instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Non-separating cocircuits with per-element counts.
    Nsc {
        /// `@file.bm`, `name:fano`, `name:spike:5` or `graph:@file.g[:bond]`,
        /// optionally prefixed with `dual:`.
        spec: String,
        /// Use the bond matroid of a graph spec.
        bond: Option<String>,
    },
    /// Y, Ỹ and the corank of Ỹ.
    Yset { spec: String, bond: Option<String> },
    /// Isomorphism test.
    Iso { first: String, second: String },
    /// Minor test against a named matroid or any other spec.
    Minor { spec: String, minor: String },
    /// Prints Γ(A, v).
    Gamma { matrix: PathBuf, vector: String },
    /// One filtered, deduplicated layer of coextensions.
    Layer {
        matrix: PathBuf,
        /// Any of cosimple, simple, 3connected, regular, no-k5,
        /// no-minor:NAME, dual-ytilde>=T.
        filters: Vec<String>,
        #[arg(long)]
        no_prune: bool,
        #[arg(long)]
        full_vectors: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Enumerates the 3-connected rank-4 binary matroids.
    ClassifyRank4,
    /// Runs a lemma check: initial-cases, k33, comput-a, comput-b,
    /// comput-c, comput-d or extremal.
    Verify {
        which: String,
        /// Number of Γ steps in the comput checks.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        no_prune: bool,
        /// Cap on candidate vectors per seed.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Layered search for matroids with r*(Ỹ) >= 3.
    Search {
        #[arg(long, default_value_t = 9)]
        max_rank: usize,
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        resume: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        full_vectors: bool,
        #[arg(long, default_value = "proof")]
        thresholds: String,
        /// Cap on candidate vectors per layer.
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// Parses a `.bm` file: `r n`, then `r` rows of `n` bits, an optional
/// `labels:` line, `#` comments. Returns the raw matrix and labels.
pub fn parse_bm(text: &str) -> Result<(BitMatrix, Vec<Label>)> {
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header {header:?}"))))
        .collect::<Result<_>>()?;
    let [r, n] = dims[..] else {
        return Err(Error::Parse(format!("header must be `r n`, got {header:?}")));
    };
    let mut rows = Vec::with_capacity(r);
    for i in 0..r {
        let row = lines.next().ok_or_else(|| Error::Parse(format!("missing row {}", i + 1)))?;
        let row: String = row.chars().filter(|c| !c.is_whitespace()).collect();
        if row.len() != n || !row.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::Parse(format!("row {} must have {n} bits: {row:?}", i + 1)));
        }
        rows.push(row);
    }
    let mut labels = numeric_labels(n);
    if let Some(line) = lines.next() {
        let rest = line.strip_prefix("labels:").ok_or_else(|| Error::Parse(format!("unexpected line {line:?}")))?;
        labels = rest.split_whitespace().map(Label::from).collect();
        if labels.len() != n {
            return Err(Error::LabelCount { expected: n, got: labels.len() });
        }
    }
    if let Some(line) = lines.next() {
        return Err(Error::Parse(format!("unexpected line {line:?}")));
    }
    let matrix = if r == 0 { BitMatrix::zeros(0, n)? } else { BitMatrix::from_rows(&rows)? };
    Ok((matrix, labels))
}

/// Writes a matrix and labels in `.bm` form.
pub fn emit_bm(matrix: &BitMatrix, labels: &[Label]) -> String {
    let mut out = format!("{} {}\n", matrix.rows(), matrix.cols());
    for row in matrix.to_row_strings() {
        out.push_str(&row);
        out.push('\n');
    }
    out.push_str("labels:");
    for l in labels {
        out.push(' ');
        out.push_str(l.as_str());
    }
    out.push('\n');
    out
}

/// Parses a `.bm` file into a matroid, reporting any column reordering.
pub fn load_bm(text: &str) -> Result<BinaryMatroid> {
    let (matrix, labels) = parse_bm(text)?;
    if matrix.is_standard() {
        return BinaryMatroid::from_matrix(&matrix, labels);
    }
    let m = BinaryMatroid::from_matrix(&matrix, labels.clone())?;
    let perm: Vec<usize> =
        m.labels().iter().map(|l| labels.iter().position(|x| x == l).expect("labels are kept")).collect();
    warn!("input standardized; column order is now {perm:?}");
    Ok(m)
}

/// Parses a `.g` file: `V E`, then `E` lines `u v` with 1-based vertices.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let nums = |line: &str| -> Result<Vec<usize>> {
        line.split_whitespace().map(|t| t.parse().map_err(|_| Error::Parse(format!("bad line {line:?}")))).collect()
    };
    let [v, e] = nums(header)?[..] else {
        return Err(Error::Parse(format!("header must be `V E`, got {header:?}")));
    };
    let mut g = SimpleGraph::with_vertices(v);
    for k in 0..e {
        let line = lines.next().ok_or_else(|| Error::Parse(format!("missing edge {}", k + 1)))?;
        let [a, b] = nums(line)?[..] else {
            return Err(Error::Parse(format!("edge line must be `u v`, got {line:?}")));
        };
        if a == 0 || b == 0 || a > v || b > v {
            return Err(Error::BadGraph(format!("vertex out of range in {line:?}")));
        }
        g.add_edge(a - 1, b - 1)?;
    }
    if let Some(line) = lines.next() {
        return Err(Error::Parse(format!("unexpected line {line:?}")));
    }
    Ok(g)
}

/// Resolves a matroid spec; `bond` applies to graph specs.
pub fn load_spec(spec: &str, bond: bool) -> Result<BinaryMatroid> {
    if let Some(rest) = spec.strip_prefix("dual:") {
        return load_spec(rest, bond)?.try_dual();
    }
    if let Some(path) = spec.strip_prefix('@') {
        return load_bm(&fs::read_to_string(path)?);
    }
    if let Some(name) = spec.strip_prefix("name:") {
        return zoo::parse_named(name);
    }
    if let Some(rest) = spec.strip_prefix("graph:") {
        let rest = rest.trim();
        let (path, bond) = match rest.split_once([' ', ':']) {
            Some((p, "bond")) => (p, true),
            Some((_, other)) => return Err(Error::Parse(format!("unknown graph modifier {other:?}"))),
            None => (rest, bond),
        };
        let path = path.strip_prefix('@').ok_or_else(|| Error::Parse(format!("graph spec needs @file: {spec:?}")))?;
        let g = parse_graph(&fs::read_to_string(path)?)?;
        return if bond { zoo::bond_matroid(&g) } else { zoo::graph_matroid(&g) };
    }
    // bare names are accepted for convenience
    zoo::parse_named(spec)
}

fn bond_flag(bond: &Option<String>) -> Result<bool> {
    match bond.as_deref() {
        None => Ok(false),
        Some("bond") => Ok(true),
        Some(other) => Err(Error::Parse(format!("expected `bond`, got {other:?}"))),
    }
}

fn load_matrix_file(path: &PathBuf) -> Result<BitMatrix> {
    Ok(parse_bm(&fs::read_to_string(path)?)?.0)
}

fn render(rep: &Report, json_out: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json_out {
        return writeln!(out, "{}", rep.to_json());
    }
    writeln!(out, "{}", rep.command)?;
    if let Some(m) = &rep.matroid {
        writeln!(out, "rank {}, {} elements", m.r, m.n)?;
    }
    if let (Some(meets), Some(avoids), Some(dep)) = (&rep.meets, &rep.avoids, &rep.dep) {
        writeln!(out, "{:>8} {:>6} {:>6} {:>4}", "element", "meets", "avoids", "dep")?;
        for (l, m) in meets {
            writeln!(out, "{:>8} {:>6} {:>6} {:>4}", l.as_str(), m, avoids[l], dep[l])?;
        }
    }
    if let Some(nsc) = &rep.nsc {
        writeln!(out, "{} non-separating cocircuits", nsc.len())?;
    }
    let show = |set: &crate::matroid::ElementSet| set.iter().map(|l| l.as_str()).collect::<Vec<_>>().join(" ");
    if let Some(y) = &rep.y {
        writeln!(out, "Y      = {{{}}}", show(y))?;
    }
    if let Some(yt) = &rep.ytilde {
        writeln!(out, "Ytilde = {{{}}}", show(yt))?;
    }
    if let Some(c) = rep.ytilde_corank {
        writeln!(out, "r*(Ytilde) = {c}")?;
    }
    for c in &rep.checks {
        writeln!(out, "[{}] {}", if c.pass { "pass" } else { "FAIL" }, c.name)?;
    }
    if !rep.witnesses.is_empty() {
        writeln!(out, "{} witnesses (use --json for detail)", rep.witnesses.len())?;
    }
    if !rep.details.is_null() && rep.matroid.is_none() && rep.checks.is_empty() {
        writeln!(out, "{}", serde_json::to_string_pretty(&rep.details).expect("json"))?;
    }
    writeln!(out, "verdict: {:?}{}", rep.verdict, if rep.incomplete { " (incomplete)" } else { "" })
}

fn verify(which: &str, k: usize, threads: usize, no_prune: bool, budget: Option<u64>) -> Result<Report> {
    match which {
        "initial-cases" => drivers::verify_initial_cases(),
        "k33" => drivers::verify_k33_family(),
        "extremal" => drivers::verify_extremal(4..=7, 3..=5),
        "classify-rank4" => drivers::classify_rank4(),
        _ => {
            let part = which
                .strip_prefix("comput-")
                .ok_or_else(|| Error::Parse(format!("unknown check {which:?}")))?
                .parse::<ComputPart>()?;
            let opts = ComputOptions { k, orbit_prune: !no_prune, threads, budget };
            drivers::verify_comput(part, &opts)
        }
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Nsc { spec, bond } => {
            let m = load_spec(spec, bond_flag(bond)?)?;
            Ok(Report::for_matroid(format!("nsc {spec}"), &report(&m)?))
        }
        Command::Yset { spec, bond } => {
            let m = load_spec(spec, bond_flag(bond)?)?;
            let nr = report(&m)?;
            let mut rep = Report::for_matroid(format!("yset {spec}"), &nr);
            rep.nsc = None;
            rep.meets = None;
            rep.avoids = None;
            rep.dep = None;
            Ok(rep)
        }
        Command::Iso { first, second } => {
            let a = load_spec(first, false)?;
            let b = load_spec(second, false)?;
            let mut rep = Report::new(format!("iso {first} {second}"));
            let iso = are_isomorphic(&a, &b)?;
            rep.details = json!({
                "isomorphic": iso,
                "keys": [canonical_key(&a)?.to_hex(), canonical_key(&b)?.to_hex()],
            });
            Ok(rep)
        }
        Command::Minor { spec, minor } => {
            let m = load_spec(spec, false)?;
            let n = load_spec(minor, false)?;
            let mut rep = Report::new(format!("minor {spec} {minor}"));
            rep.details = json!({ "has_minor": has_minor(&m, &n)? });
            Ok(rep)
        }
        Command::Gamma { matrix, vector } => {
            let a = load_matrix_file(matrix)?;
            let v: ExtensionVector = vector.parse()?;
            let g = gamma(&a, &v)?;
            let labels = crate::extend::gamma_labels(a.cols(), v.entries());
            let mut rep = Report::new(format!("gamma {} {vector}", matrix.display()));
            rep.details = json!({
                "rows": g.to_row_strings(),
                "labels": labels,
                "bm": emit_bm(&g, &labels),
            });
            Ok(rep)
        }
        Command::Layer { matrix, filters, no_prune, full_vectors, threads } => {
            let a = load_matrix_file(matrix)?;
            let filters: Vec<Filter> = filters.iter().map(|f| f.parse()).collect::<Result<_>>()?;
            let m = BinaryMatroid::with_numeric_labels(&a)?;
            let seeds = CatalogLayer::from_seeds(m.rank(), &[m])?;
            let opts =
                ExtendOptions { orbit_prune: !no_prune, full_vectors: *full_vectors, threads: *threads, ..Default::default() };
            let out = enumerate_extensions(&seeds, &filters, &opts)?;
            let mut rep = Report::new(format!("layer {}", matrix.display()));
            if out.incomplete {
                rep.mark_incomplete();
            }
            rep.details = json!({
                "stats": out.stats,
                "catalog": out.layer.items.iter().map(drivers::catalog_line).collect::<Vec<_>>(),
            });
            Ok(rep)
        }
        Command::ClassifyRank4 => drivers::classify_rank4(),
        Command::Verify { which, k, threads, no_prune, budget } => verify(which, *k, *threads, *no_prune, *budget),
        Command::Search { max_rank, catalog, resume, threads, full_vectors, thresholds, budget } => {
            let opts = SearchOptions {
                max_rank: *max_rank,
                thresholds: thresholds.parse::<ThresholdMode>()?,
                catalog_dir: Some(catalog.clone()),
                resume: *resume,
                threads: *threads,
                full_vectors: *full_vectors,
                orbit_prune: true,
                budget: *budget,
            };
            drivers::conjecture_search(&opts)
        }
    }
}

/// Runs the command line, writing reports to `out` and errors to stderr.
pub fn run_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(rep) => {
            if let Err(e) = render(&rep, cli.json, out) {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
            rep.exit_code()
        }
        Err(e @ (Error::ScanLimitExceeded { .. } | Error::BudgetExceeded(_))) => {
            eprintln!("incomplete: {e}");
            EXIT_INCOMPLETE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bm_round_trip() {
        let m = zoo::fano();
        let text = emit_bm(m.rep(), m.labels());
        let (a, labels) = parse_bm(&text).unwrap();
        assert_eq!(emit_bm(&a, &labels), text);
        let loaded = load_bm(&text).unwrap();
        assert!(loaded.same_matroid(&m));
    }

    #[test]
    fn bm_comments_and_errors() {
        let text = "# a comment\n2 3\n101 # trailing\n011\n";
        let (a, labels) = parse_bm(text).unwrap();
        assert_eq!(a.to_row_strings(), vec!["101", "011"]);
        assert_eq!(labels, numeric_labels(3));
        assert!(parse_bm("2 3\n101\n").is_err());
        assert!(parse_bm("1 3\n1012\n").is_err());
        assert!(parse_bm("1 2\n10\nlabels: a\n").is_err());
        assert!(parse_bm("1 2\n10\nnonsense\n").is_err());
    }

    #[test]
    fn nonstandard_input_is_standardized() {
        let m = load_bm("2 3\n110\n011\nlabels: a b c\n").unwrap();
        assert!(m.rep().is_standard());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn graph_files() {
        let g = parse_graph("4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
        let m = zoo::graph_matroid(&g).unwrap();
        assert!(are_isomorphic(&m, &zoo::graph_matroid(&zoo::complete_graph(4)).unwrap()).unwrap());
        assert!(parse_graph("2 1\n1 3\n").is_err());
        assert!(parse_graph("2 1\n1 1\n").is_err());
    }

    #[test]
    fn exit_codes() {
        let mut sink = Vec::new();
        assert_eq!(run_with(["binmat", "yset", "name:fano"], &mut sink), EXIT_PASS);
        assert_eq!(run_with(["binmat", "bogus"], &mut sink), EXIT_USAGE);
        assert_eq!(run_with(["binmat", "nsc", "@/nonexistent.bm"], &mut sink), EXIT_USAGE);
        assert_eq!(run_with(["binmat", "verify", "initial-cases"], &mut sink), EXIT_PASS);
        assert_eq!(run_with(["binmat", "verify", "comput-a", "--budget", "5"], &mut sink), EXIT_INCOMPLETE);
    }

    #[test]
    fn json_yset() {
        let mut sink = Vec::new();
        assert_eq!(run_with(["binmat", "--json", "yset", "name:fano"], &mut sink), 0);
        let v: serde_json::Value = serde_json::from_slice(&sink).unwrap();
        assert_eq!(v["Y"].as_array().unwrap().len(), 7);
        assert_eq!(v["verdict"], "pass");
    }
}
