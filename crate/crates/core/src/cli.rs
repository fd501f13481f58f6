//! The `eop` command-line tool.
//!
//! Exit codes: 0 success, 1 graph not in a supported (or requested) class,
//! 2 input or usage error, 3 internal failure, 4 crosscheck mismatch.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{GenSpec, Rng};
use crate::graph::{find_violation, EopSolution, Graph, Violation};
use crate::io::{parse_edge_set, parse_graph, write_graph, Format};
use crate::oracle::{brute_force_eop, SearchBudget, MAX_ORACLE_EDGES};
use crate::recognition::classify;
use crate::solver::{
    solve, solve_block_graph, solve_proper_interval, solve_split_graph, ClassChoice,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_IN_CLASS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "eop",
    version,
    about = "Maximum edge open packings of proper interval, block and split graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the packing number and optionally a witness.
    Solve(SolveArgs),
    /// List the supported classes the graph belongs to.
    Classify(InputArgs),
    /// Write a seeded random instance.
    Generate(GenerateArgs),
    /// Check whether an edge set is an edge open packing.
    Verify(VerifyArgs),
    /// Compare a solver against the exhaustive oracle on seeded instances.
    Crosscheck(CrosscheckArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file, or `-` for standard input.
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, default_value = "edgelist")]
    pub format: Format,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// auto, pig, block, split or brute.
    #[arg(long, default_value = "auto")]
    pub class: ClassChoice,
    /// Print the witness edges.
    #[arg(long)]
    pub witness: bool,
    /// Re-check the witness before printing.
    #[arg(long)]
    pub verify: bool,
    /// Largest edge count the exhaustive search accepts.
    #[arg(long, default_value_t = 24)]
    pub oracle_max_edges: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenClass {
    Pig,
    Block,
    Split,
    Tree,
}

impl FromStr for GenClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pig" => Ok(GenClass::Pig),
            "block" => Ok(GenClass::Block),
            "split" => Ok(GenClass::Split),
            "tree" => Ok(GenClass::Tree),
            _ => Err(format!(
                "unknown class '{s}' (expected pig, block, split or tree)"
            )),
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// pig, block, split or tree.
    #[arg(long)]
    pub class: GenClass,
    /// Vertex count (pig, tree).
    #[arg(long)]
    pub n: Option<usize>,
    /// Interval overlap in [0, 1] (pig).
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    /// Number of blocks (block).
    #[arg(long)]
    pub blocks: Option<usize>,
    /// Largest block (block).
    #[arg(long, default_value_t = 3)]
    pub max_block_size: usize,
    /// Clique side size (split).
    #[arg(long)]
    pub k: Option<usize>,
    /// Independent side size (split).
    #[arg(long)]
    pub s: Option<usize>,
    /// Clique-to-independent edge probability (split).
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "edgelist")]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// File of `u v` lines (0-based) naming the edge set.
    #[arg(long)]
    pub edges: PathBuf,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    /// pig, block, split or tree.
    #[arg(long)]
    pub class: GenClass,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Largest vertex count of a generated instance.
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

/// Parses `args` (program name first) and runs; usage errors map to exit 2.
pub fn main_with<I, T>(
    args: I,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, input, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            code
        }
    }
}

/// Runs one command, mapping errors and panics to exit codes.
pub fn run(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = panic::catch_unwind(AssertUnwindSafe(|| dispatch(cli, input, out)));
    let code = match result {
        Ok(Ok(code)) => code,
        Ok(Err(e)) => {
            let _ = writeln!(err, "eop: {e}");
            exit_code(&e)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| payload.downcast_ref::<&str>().copied())
                .unwrap_or("unknown panic");
            let _ = writeln!(err, "eop: internal failure: {msg}");
            EXIT_INTERNAL
        }
    };
    let _ = out.flush();
    code
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotInClass(_) | Error::BudgetExceeded { .. } => EXIT_NOT_IN_CLASS,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

fn dispatch(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Solve(a) => cmd_solve(a, input, out),
        Command::Classify(a) => cmd_classify(a, input, out),
        Command::Generate(a) => cmd_generate(a, out),
        Command::Verify(a) => cmd_verify(a, input, out),
        Command::Crosscheck(a) => cmd_crosscheck(a, out),
    }
}

fn read_graph(a: &InputArgs, stdin: &mut dyn BufRead) -> Result<Graph> {
    if a.input == "-" {
        parse_graph(stdin, a.format)
    } else {
        parse_graph(BufReader::new(File::open(&a.input)?), a.format)
    }
}

fn sorted_pairs(g: &Graph, s: &EopSolution) -> Vec<[usize; 2]> {
    let mut pairs: Vec<[usize; 2]> = s
        .witness
        .pairs(g)
        .into_iter()
        .map(|(u, v)| [u, v])
        .collect();
    pairs.sort_unstable();
    pairs
}

#[derive(Serialize)]
struct SolveReport {
    class: &'static str,
    n: usize,
    m: usize,
    value: usize,
    witness: Option<Vec<[usize; 2]>>,
    verified: Option<bool>,
}

fn cmd_solve(a: &SolveArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.input, stdin)?;
    let budget = SearchBudget::with_max_edges(a.oracle_max_edges.min(MAX_ORACLE_EDGES));
    let (by, s) = solve(&g, a.class, budget)?;
    let verified = if a.verify {
        if let Some(v) = find_violation(&g, s.witness.ids())? {
            return Err(Error::Internal(format!(
                "witness failed verification: {}",
                describe(&g, &v)
            )));
        }
        if s.witness.len() != s.value {
            return Err(Error::Internal(
                "witness size differs from the value".into(),
            ));
        }
        Some(true)
    } else {
        None
    };
    let report = SolveReport {
        class: by.as_str(),
        n: g.vertex_count(),
        m: g.edge_count(),
        value: s.value,
        witness: a.witness.then(|| sorted_pairs(&g, &s)),
        verified,
    };
    if a.input.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string(&report).map_err(json_error)?
        )?;
    } else {
        writeln!(out, "class: {}", report.class)?;
        writeln!(out, "value: {}", report.value)?;
        if let Some(v) = report.verified {
            writeln!(out, "verified: {v}")?;
        }
        if let Some(w) = &report.witness {
            writeln!(out, "witness:")?;
            for [u, v] in w {
                writeln!(out, "{u} {v}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn describe(g: &Graph, v: &Violation) -> String {
    let p = |e| {
        let (x, y) = g.endpoints(e);
        format!("{x}-{y}")
    };
    format!(
        "{} and {} are joined by {}",
        p(v.first),
        p(v.second),
        p(v.common)
    )
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Internal(format!("JSON encoding failed: {e}"))
}

fn cmd_classify(a: &InputArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(a, stdin)?;
    let tags = classify(&g);
    if a.json {
        #[derive(Serialize)]
        struct Report {
            n: usize,
            m: usize,
            classes: Vec<crate::recognition::ClassTag>,
        }
        let r = Report {
            n: g.vertex_count(),
            m: g.edge_count(),
            classes: tags,
        };
        writeln!(out, "{}", serde_json::to_string(&r).map_err(json_error)?)?;
    } else {
        let names: Vec<&str> = tags.iter().map(|t| t.as_str()).collect();
        writeln!(out, "{}", names.join(" "))?;
    }
    Ok(EXIT_OK)
}

fn required(v: Option<usize>, flag: &str, class: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required for class {class}")))
}

fn gen_spec(a: &GenerateArgs) -> Result<GenSpec> {
    Ok(match a.class {
        GenClass::Pig => GenSpec::ProperInterval {
            n: required(a.n, "n", "pig")?,
            density: a.density,
            seed: a.seed,
        },
        GenClass::Block => GenSpec::Block {
            n_blocks: required(a.blocks, "blocks", "block")?,
            max_block_size: a.max_block_size,
            seed: a.seed,
        },
        GenClass::Split => GenSpec::Split {
            k_size: required(a.k, "k", "split")?,
            s_size: required(a.s, "s", "split")?,
            p: a.p,
            seed: a.seed,
        },
        GenClass::Tree => GenSpec::Tree {
            n: required(a.n, "n", "tree")?,
            seed: a.seed,
        },
    })
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<i32> {
    let g = gen_spec(a)?.generate()?;
    match &a.output {
        Some(path) => {
            let mut f = std::io::BufWriter::new(File::create(path)?);
            write_graph(&g, a.format, &mut f)?;
            f.flush()?;
        }
        None => write_graph(&g, a.format, out)?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    let g = read_graph(&a.input, stdin)?;
    let d = parse_edge_set(BufReader::new(File::open(&a.edges)?), &g)?;
    let violation = find_violation(&g, d.ids())?;
    if a.input.json {
        #[derive(Serialize)]
        struct Report {
            size: usize,
            is_eop: bool,
            conflict: Option<[[usize; 2]; 3]>,
        }
        let conflict = violation.map(|v| {
            let p = |e| {
                let (x, y) = g.endpoints(e);
                [x, y]
            };
            [p(v.first), p(v.second), p(v.common)]
        });
        let r = Report {
            size: d.len(),
            is_eop: conflict.is_none(),
            conflict,
        };
        writeln!(out, "{}", serde_json::to_string(&r).map_err(json_error)?)?;
    } else {
        match violation {
            None => writeln!(out, "edge open packing of size {}", d.len())?,
            Some(v) => writeln!(out, "not an edge open packing: {}", describe(&g, &v))?,
        }
    }
    Ok(EXIT_OK)
}

/// Parameters for crosscheck instance `index`, drawn from the run seed.
pub fn crosscheck_spec(class: GenClass, max_n: usize, rng: &mut Rng) -> Result<GenSpec> {
    if max_n == 0 {
        return Err(Error::InvalidParameter("--max-n must be at least 1".into()));
    }
    let seed = rng.next_u64();
    Ok(match class {
        GenClass::Pig => GenSpec::ProperInterval {
            n: 1 + rng.below(max_n),
            density: rng.unit(),
            seed,
        },
        GenClass::Block => {
            if max_n < 2 {
                return Err(Error::InvalidParameter(
                    "block instances need --max-n of at least 2".into(),
                ));
            }
            let max_block_size = 2 + rng.below(3.min(max_n - 1));
            let most = ((max_n - 1) / (max_block_size - 1)).max(1);
            GenSpec::Block {
                n_blocks: 1 + rng.below(most),
                max_block_size,
                seed,
            }
        }
        GenClass::Split => {
            let k_size = rng.below(max_n + 1);
            let s_size = rng.below(max_n - k_size + 1);
            GenSpec::Split {
                k_size,
                s_size,
                p: rng.unit(),
                seed,
            }
        }
        GenClass::Tree => GenSpec::Tree {
            n: 1 + rng.below(max_n),
            seed,
        },
    })
}

#[derive(Serialize)]
struct CrosscheckLine {
    index: usize,
    spec: GenSpec,
    n: usize,
    m: usize,
    value: usize,
    oracle: usize,
    witness: Vec<[usize; 2]>,
    witness_valid: bool,
    agree: bool,
}

fn cmd_crosscheck(a: &CrosscheckArgs, out: &mut dyn Write) -> Result<i32> {
    let mut rng = Rng::new(a.seed);
    let budget = SearchBudget::with_max_edges(MAX_ORACLE_EDGES);
    let mut agree = 0;
    for index in 0..a.count {
        let spec = crosscheck_spec(a.class, a.max_n, &mut rng)?;
        let g = spec.generate()?;
        let s = match a.class {
            GenClass::Pig => solve_proper_interval(&g)?,
            GenClass::Block | GenClass::Tree => solve_block_graph(&g)?,
            GenClass::Split => solve_split_graph(&g)?,
        };
        let oracle = brute_force_eop(&g, budget)?.value;
        let witness_valid =
            s.witness.len() == s.value && find_violation(&g, s.witness.ids())?.is_none();
        let ok = witness_valid && s.value == oracle;
        agree += usize::from(ok);
        let line = CrosscheckLine {
            index,
            spec,
            n: g.vertex_count(),
            m: g.edge_count(),
            value: s.value,
            oracle,
            witness: sorted_pairs(&g, &s),
            witness_valid,
            agree: ok,
        };
        if a.json {
            writeln!(out, "{}", serde_json::to_string(&line).map_err(json_error)?)?;
        } else {
            writeln!(
                out,
                "{index}: n={} m={} value={} oracle={} {}",
                line.n,
                line.m,
                line.value,
                line.oracle,
                if ok { "ok" } else { "MISMATCH" }
            )?;
        }
    }
    writeln!(out, "{agree}/{} agree", a.count)?;
    Ok(if agree == a.count {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with(
            std::iter::once("eop").chain(args.iter().copied()),
            &mut input,
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
    const C4: &str = "4 4\n0 1\n1 2\n2 3\n0 3\n";

    #[test]
    fn solve_path_with_witness() {
        let (code, out, _) = call(
            &[
                "solve",
                "--format",
                "edgelist",
                "--class",
                "auto",
                "--witness",
            ],
            P4,
        );
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "class: proper_interval\nvalue: 2\nwitness:\n0 1\n1 2\n"
        );
    }

    #[test]
    fn solve_json_is_stable() {
        let (code, out, _) = call(&["solve", "--json", "--witness", "--verify"], P4);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"class\":\"proper_interval\",\"n\":4,\"m\":3,\"value\":2,\"witness\":[[0,1],[1,2]],\"verified\":true}\n"
        );
        let (_, out, _) = call(&["solve", "--json"], P4);
        assert!(out.contains("\"witness\":null,\"verified\":null"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            call(&["solve", "--class", "split"], C4).0,
            EXIT_NOT_IN_CLASS
        );
        assert_eq!(call(&["solve"], "4 1\n0 4\n").0, EXIT_INPUT);
        assert_eq!(call(&["solve", "--class", "nope"], P4).0, EXIT_INPUT);
        assert_eq!(
            call(
                &["solve", "--class", "brute", "--oracle-max-edges", "2"],
                P4
            )
            .0,
            EXIT_NOT_IN_CLASS
        );
        let (code, out, _) = call(&["solve"], C4);
        assert_eq!(code, 0);
        assert!(out.starts_with("class: brute\nvalue: 2"));
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn classify_outputs_tags() {
        assert_eq!(call(&["classify"], C4).1, "none\n");
        let (_, out, _) = call(&["classify", "--json"], P4);
        assert_eq!(
            out,
            "{\"n\":4,\"m\":3,\"classes\":[\"proper_interval\",\"block\",\"split\",\"chordal\"]}\n"
        );
    }

    #[test]
    fn generate_is_deterministic() {
        let args = [
            "generate",
            "--class",
            "pig",
            "--n",
            "8",
            "--density",
            "0.4",
            "--seed",
            "42",
        ];
        let (code, a, _) = call(&args, "");
        assert_eq!(code, 0);
        assert_eq!(a, call(&args, "").1);
        assert_eq!(call(&["generate", "--class", "block"], "").0, EXIT_INPUT);
        let (_, k3, _) = call(
            &["generate", "--class", "split", "--k", "3", "--s", "0"],
            "",
        );
        assert_eq!(k3, "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn crosscheck_summary() {
        let (code, out, _) = call(
            &[
                "crosscheck",
                "--class",
                "block",
                "--count",
                "20",
                "--max-n",
                "10",
                "--seed",
                "1",
            ],
            "",
        );
        assert_eq!(code, 0);
        assert!(out.ends_with("20/20 agree\n"));
    }
}
