use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use metabelian::verify::{self, Suite, VerifyOptions};
use metabelian::{evaluate, parse, Execution, MembershipVerdict, ParseOptions, SubgroupH, Word};

#[derive(Parser, Debug)]
#[command(name = "metabelian", version, about = "Magnus-matrix computations in free metabelian groups")]
struct Cli {
    /// Number of free generators (x, y, z3, ...).
    #[arg(long, default_value_t = 2, global = true)]
    rank: usize,

    /// Extra generators z_j of H, e.g. `3,5`; an empty value means none. Defaults to all of 3..=rank.
    #[arg(long = "J", value_name = "LIST", value_parser = parse_subset, global = true)]
    j: Option<Subset>,

    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,

    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Override the per-suite trial count.
    #[arg(long, global = true)]
    trials: Option<usize>,

    /// Highest nilpotency class for the nonsep suite.
    #[arg(long, default_value_t = 6, global = true)]
    class: usize,

    /// Run verification trials on a single thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Magnus matrix of a word.
    Eval { word: String },
    /// Decide whether a word lies in H (exit 0 member, 1 non-member).
    Member { word: String },
    /// Report whether w^m and w lie in H.
    Root {
        word: String,
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
    /// Run a seeded verification suite, or `all`.
    Verify { suite: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Structured,
}

#[derive(Clone, Debug)]
struct Subset(Vec<usize>);

fn parse_subset(s: &str) -> Result<Subset, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<_, _>>()
        .map(Subset)
}

struct Outcome {
    stdout: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    let h = match &cli.j {
        Some(Subset(j)) => SubgroupH::new(cli.rank, j.iter().copied()),
        None => SubgroupH::full(cli.rank),
    }
    .map_err(|e| e.to_string())?;
    let structured = cli.output == Output::Structured;

    match &cli.command {
        Command::Eval { word } => {
            let m = evaluate(&read_word(word, cli.rank)?, h.ring()).map_err(|e| e.to_string())?;
            let stdout = if structured {
                json_line(&m.to_record())
            } else {
                format!("{m}\n")
            };
            Ok(Outcome { stdout, code: 0 })
        }
        Command::Member { word } => {
            let m = evaluate(&read_word(word, cli.rank)?, h.ring()).map_err(|e| e.to_string())?;
            let verdict = h.contains(&m).map_err(|e| e.to_string())?;
            let stdout = if structured {
                json_line(&verdict.to_json())
            } else {
                match &verdict {
                    MembershipVerdict::Member(c) => format!(
                        "member\n  gamma_1 / (2*s2 - 1) = {}\n  preimage: {}\n",
                        c.quotient,
                        metabelian::MagnusMatrix::from_record(h.ring(), &c.preimage)
                            .map_err(|e| e.to_string())?
                    ),
                    MembershipVerdict::NonMember(f) => {
                        format!("non-member\n  failed check: {} ({})\n", f.check.as_str(), f.datum)
                    }
                }
            };
            Ok(Outcome {
                stdout,
                code: if verdict.member() { 0 } else { 1 },
            })
        }
        Command::Root { word, m } => {
            let w = read_word(word, cli.rank)?;
            let (power, base) = h.check_root_implication(&w, *m).map_err(|e| e.to_string())?;
            let violation = power && !base;
            let stdout = if structured {
                json_line(&serde_json::json!({
                    "m": m,
                    "power_in_h": power,
                    "word_in_h": base,
                    "violation": violation,
                }))
            } else {
                let yes = |b: bool| if b { "yes" } else { "no" };
                let mut s = format!("w^{m} in H: {}\nw in H: {}\n", yes(power), yes(base));
                if violation {
                    s.push_str("VIOLATION: w^m lies in H but w does not\n");
                }
                s
            };
            Ok(Outcome {
                stdout,
                code: u8::from(violation),
            })
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>()?]
            };
            let opts = VerifyOptions {
                seed: cli.seed,
                trials: cli.trials,
                class: cli.class,
                exec: if cli.sequential { Execution::Sequential } else { Execution::Parallel },
            };
            let mut stdout = String::new();
            let mut ok = true;
            for s in suites {
                let report = verify::run(s, &h, &opts);
                ok &= report.passed();
                if structured {
                    stdout.push_str(&json_line(&report));
                } else {
                    stdout.push_str(&format!("{report}\n"));
                }
            }
            Ok(Outcome {
                stdout,
                code: if ok { 0 } else { 1 },
            })
        }
    }
}

fn read_word(text: &str, rank: usize) -> Result<Word, String> {
    parse(text, ParseOptions::with_aliases(rank)).map_err(|e| format!("in word {text:?}: {e}"))
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}
