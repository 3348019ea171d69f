//! `spg`: evaluate placement games represented as simplicial complexes.
//!
//! Exit codes: 0 success, 1 a requested check failed (census assertion,
//! verification suite, sp-check answering "no"), 2 usage or parse error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use spgames::census::{run_census, CensusRequest};
use spgames::complex::LegalComplex;
use spgames::constructions::{
    birthday2_catalog, dyadic_complex, fraction_complex, integer_at_dimension, integer_simplex,
    switch_general, switch_symmetric, tiny_complex,
};
use spgames::engine::EvalContext;
use spgames::impartial::{explain_structural, GrundySolver, ImpartialComplex};
use spgames::rulesets::{
    col_complex, domineering_complex, nim_pile_complex, snort_complex, Board,
};
use spgames::values::{build_value, parse_value, recognize, render_value, Notation};
use spgames::verify;

#[derive(Parser)]
#[command(
    name = "spg",
    version,
    about = "Game values of placement games on simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a complex file to its game value
    Eval(EvalArgs),
    /// Print a witness complex in the standard text format
    #[command(subcommand)]
    Construct(ConstructKind),
    /// Build the legal complex of a ruleset on a board
    Ruleset(RulesetArgs),
    /// Enumerate small complexes and tabulate the values they take
    Census(CensusArgs),
    /// Grundy value of an impartial complex file
    Grundy(GrundyArgs),
    /// Run the built-in verification suite and print its table
    VerifyPaper,
    /// Decide whether a game is the game tree of a placement game
    SpCheck(SpCheckArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Complex file: one facet per line, `()` for the empty facet,
    /// `#` comments, optional leading `vertices:` header
    file: PathBuf,
    /// Read the file as an impartial complex (any vertex names) and
    /// evaluate the game in which both players may fill any vertex
    #[arg(long)]
    impartial: bool,
    /// Also print the outcome class (L, R, N, or P)
    #[arg(long)]
    outcome: bool,
    /// Also print the formal birthday and the canonical-form birthday
    #[arg(long)]
    birthdays: bool,
    /// Spell the switch sign as Unicode ± instead of ASCII +-
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// One facet with m Left and n Right vertices; value m-n
    IntegerSimplex { m: usize, n: usize },
    /// Value n at dimension exactly k
    IntegerAtDim { n: usize, k: usize },
    /// Value 1/2^q
    Fraction { q: u32 },
    /// Value p/2^q (p odd unless q = 0)
    Dyadic { p: i64, q: u32 },
    /// Value {a|-b}: two facets of sizes a+1 and b+1
    SwitchSym {
        a: usize,
        b: usize,
        /// Add a facet joining the two simplices; the value is unchanged
        #[arg(long)]
        connected: bool,
    },
    /// Value {a|b} for a > b >= 0
    Switch { a: usize, b: usize },
    /// Value +_n (tiny n)
    Tiny { n: usize },
    /// A named fixture set; each entry prints as `# value:` plus a complex
    Catalog { set: CatalogSet },
    /// Single nim pile of size n, as an impartial complex
    Nim { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogSet {
    /// All canonical values born by day 2, with label-negated twins
    Birthday2,
}

#[derive(Args)]
struct RulesetArgs {
    /// Which ruleset to play
    game: RulesetName,
    /// Board: path:<n>, cycle:<n>, grid:<r>x<c>[:mask=r,c;...],
    /// graph:<file>; for nim, the pile size
    #[arg(long)]
    board: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum RulesetName {
    Snort,
    Col,
    Domineering,
    Nim,
}

#[derive(Args)]
struct CensusArgs {
    /// Enumerate complexes on up to this many vertices (at most 6)
    #[arg(long)]
    max_vertices: usize,
    /// Keep only complexes of dimension at most this
    #[arg(long)]
    max_dim: i32,
    /// Exit 1 if this rendered value occurs at dimension exactly max-dim
    #[arg(long)]
    assert_absent: Option<String>,
    /// Worker threads for evaluation
    #[arg(long, default_value_t = 4)]
    workers: usize,
}

#[derive(Args)]
struct GrundyArgs {
    /// Impartial complex file (same format as eval, any vertex names)
    file: PathBuf,
    /// Accepted for symmetry with eval; grundy always reads this format
    #[arg(long)]
    impartial: bool,
    /// Also print which structural shortcut predicted the value, if any
    #[arg(long)]
    explain: bool,
}

#[derive(Args)]
struct SpCheckArgs {
    /// A complex file, or a value expression such as `{1|0}`, `-1/2`, `*2`
    input: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Eval(args) => cmd_eval(args),
        Command::Construct(kind) => cmd_construct(kind),
        Command::Ruleset(args) => cmd_ruleset(args),
        Command::Census(args) => cmd_census(args),
        Command::Grundy(args) => cmd_grundy(args),
        Command::VerifyPaper => cmd_verify_paper(),
        Command::SpCheck(args) => cmd_sp_check(args),
    }
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn cmd_eval(args: EvalArgs) -> Result<ExitCode> {
    let text = read_file(&args.file)?;
    let ctx = &mut EvalContext::new();
    let complex = if args.impartial {
        ImpartialComplex::parse(&text)?.doubled_partizan()
    } else {
        LegalComplex::parse(&text)?
    };
    let value = ctx.value_of_complex(&complex);
    let notation = if args.pretty {
        Notation::Pretty
    } else {
        Notation::Ascii
    };
    println!("value: {}", render_value(&recognize(ctx, value), notation));
    println!("canonical: {}", ctx.to_bracket_expanded(value));
    if args.outcome {
        println!("outcome: {}", ctx.outcome(value).letter());
    }
    if args.birthdays {
        let raw = ctx.game_from_complex(&complex);
        println!(
            "birthdays: formal {}, canonical {}",
            ctx.formal_birthday(raw),
            ctx.birthday(value)
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_construct(kind: ConstructKind) -> Result<ExitCode> {
    let text = match kind {
        ConstructKind::IntegerSimplex { m, n } => integer_simplex(m, n).to_text(),
        ConstructKind::IntegerAtDim { n, k } => integer_at_dimension(n, k)?.to_text(),
        ConstructKind::Fraction { q } => fraction_complex(q)?.to_text(),
        ConstructKind::Dyadic { p, q } => dyadic_complex(p, q)?.to_text(),
        ConstructKind::SwitchSym { a, b, connected } => {
            switch_symmetric(a, b, connected)?.to_text()
        }
        ConstructKind::Switch { a, b } => switch_general(a, b)?.to_text(),
        ConstructKind::Tiny { n } => tiny_complex(n)?.to_text(),
        ConstructKind::Catalog {
            set: CatalogSet::Birthday2,
        } => {
            let mut out = String::new();
            for entry in birthday2_catalog() {
                out.push_str(&format!("# value: {}\n", entry.expected));
                out.push_str(&entry.complex.to_text());
                out.push('\n');
            }
            out.pop();
            out
        }
        ConstructKind::Nim { n } => nim_pile_complex(n)?.to_text(),
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn parse_board(spec: &str) -> Result<Board> {
    if let Some(file) = spec.strip_prefix("graph:") {
        let text = read_file(Path::new(file))?;
        return Ok(Board::parse_graph_text(&text)?);
    }
    Ok(Board::parse(spec)?)
}

fn cmd_ruleset(args: RulesetArgs) -> Result<ExitCode> {
    let text = match args.game {
        RulesetName::Snort => snort_complex(&parse_board(&args.board)?).to_text(),
        RulesetName::Col => col_complex(&parse_board(&args.board)?).to_text(),
        RulesetName::Domineering => domineering_complex(&parse_board(&args.board)?)?.to_text(),
        RulesetName::Nim => {
            let n: usize = args
                .board
                .parse()
                .with_context(|| format!("nim takes a pile size, not {:?}", args.board))?;
            nim_pile_complex(n)?.to_text()
        }
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_census(args: CensusArgs) -> Result<ExitCode> {
    let start = std::time::Instant::now();
    let report = run_census(&CensusRequest {
        max_vertices: args.max_vertices,
        max_dimension: args.max_dim,
        workers: args.workers.max(1),
    })?;
    eprintln!("census took {} ms", start.elapsed().as_millis());
    println!("labeled complexes: {}", report.labeled_count);
    for stratum in &report.strata {
        println!(
            "dimension {}: {} classes",
            stratum.dimension, stratum.class_count
        );
        for (value, count) in &stratum.values {
            println!("  {value}: {count}");
        }
    }
    if let Some(value) = &args.assert_absent {
        let hit = report
            .stratum(args.max_dim)
            .and_then(|s| s.values.get(value.as_str()))
            .copied();
        match hit {
            None => {
                println!(
                    "assert-absent {value}: absent at dimension {}",
                    args.max_dim
                );
            }
            Some(count) => {
                println!(
                    "assert-absent {value}: PRESENT in {count} classes at dimension {}",
                    args.max_dim
                );
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_grundy(args: GrundyArgs) -> Result<ExitCode> {
    let text = read_file(&args.file)?;
    let complex = ImpartialComplex::parse(&text)?;
    let grundy = GrundySolver::new().grundy(&complex);
    println!("*{grundy}");
    if args.explain {
        match explain_structural(&complex) {
            Some((rule, predicted)) if predicted == grundy => {
                println!("predicted by: {rule}");
            }
            Some((rule, predicted)) => {
                // A disagreement would be an engine bug; surface it loudly.
                println!("WARNING: {rule} predicted *{predicted}, search found *{grundy}");
            }
            None => println!("no structural shortcut applies; computed recursively"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_paper() -> Result<ExitCode> {
    let checks = verify::run_all();
    print!("{}", verify::format_table(&checks));
    let failed = checks.iter().filter(|c| !c.pass).count();
    if failed == 0 {
        println!("all {} checks pass", checks.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{failed} of {} checks FAILED", checks.len());
        Ok(ExitCode::from(1))
    }
}

fn cmd_sp_check(args: SpCheckArgs) -> Result<ExitCode> {
    let ctx = &mut EvalContext::new();
    let path = Path::new(&args.input);
    let game = if path.exists() {
        let complex = LegalComplex::parse(&read_file(path)?)?;
        ctx.game_from_complex(&complex)
    } else {
        let expr = parse_value(&args.input).map_err(|e| {
            anyhow::anyhow!("{:?} is neither a readable file nor a value expression: {e}", args.input)
        })?;
        let built = build_value(ctx, &expr)?;
        ctx.canonical_form(built)
    };
    if ctx.sp_tree_check(game) {
        println!("sp-tree: yes");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("sp-tree: no");
        Ok(ExitCode::from(1))
    }
}
