use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use leafseq::graph::{caterpillar_graph, chain, complete, cycle, fk_tree, star, wheel};
use leafseq::verify::{run_suite, Suite};
use leafseq::{
    delta_leaf_word, hasse_covers, hasse_dot, leaf_equivalent, leaf_function_with,
    realize_caterpillar, BinaryWord, CaterpillarSequence, Graph, LeafFunction, OracleConfig,
    Rejection,
};

#[derive(Parser)]
#[command(name = "leafseq", version, about = "Leaf functions, caterpillars and prefix normal words")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Leaf function of a graph or caterpillar.
    LeafFunction(GraphInput),
    /// Leaf word of a graph, caterpillar or leaf function.
    LeafWord {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated leaf function values instead of a graph.
        #[arg(long, conflicts_with_all = ["graph_file", "caterpillar", "family"])]
        values: Option<String>,
    },
    /// Reading caterpillar of a binary word.
    Rc(WordArg),
    /// Binary word whose reading caterpillar is the given sequence.
    WordOf { sequence: String },
    /// Prefix normal form of a binary word.
    Pnf(WordArg),
    /// Whether a word is prefix normal (or k-prefix normal).
    CheckPn {
        #[command(flatten)]
        word: WordArg,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Caterpillar realizing a leaf function, or the reason none exists.
    Realize {
        /// Comma-separated values, `-inf` allowed.
        values: String,
    },
    /// Cover relations of the caterpillar subsequence order.
    Poset {
        #[arg(long, default_value_t = 7)]
        max_size: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Graph from a named family.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, allow_hyphen_values = true)]
        param: String,
        /// Graphviz output instead of an edge list.
        #[arg(long)]
        dot: bool,
    },
    /// Whether two words have reading caterpillars with equal leaf functions.
    Equiv { first: String, second: String },
    /// Run the exhaustive verification suites.
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list file: `n m` header, then `u v` lines.
    graph_file: Option<String>,
    /// Caterpillar sequence, e.g. `3,1,2`.
    #[arg(long, conflicts_with_all = ["graph_file", "family"])]
    caterpillar: Option<String>,
    #[arg(long, value_enum, conflicts_with = "graph_file", requires = "param")]
    family: Option<Family>,
    #[arg(long, allow_hyphen_values = true)]
    param: Option<String>,
    /// Prune branches that cannot improve the best leaf counts.
    #[arg(long)]
    prune: bool,
    #[arg(long)]
    parallel: bool,
    /// Largest graph accepted by the exhaustive search.
    #[arg(long, default_value_t = 20)]
    max_vertices: usize,
}

#[derive(Args)]
struct WordArg {
    /// Binary word such as `110101`.
    #[arg(required_unless_present = "empty", conflicts_with = "empty")]
    word: Option<String>,
    /// Use the empty word.
    #[arg(long)]
    empty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Wheel,
    Star,
    Chain,
    Cycle,
    Complete,
    Fk,
    Caterpillar,
}

/// A failed command: usage errors exit 2, negative answers exit 1.
enum Failure {
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    text: String,
    success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, success: true }
    }

    fn verdict(text: String, success: bool) -> Self {
        Output { text, success }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if !out.text.is_empty() && !out.text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_word(arg: &WordArg) -> Result<BinaryWord, Failure> {
    match &arg.word {
        Some(w) if !arg.empty => Ok(w.parse()?),
        _ => Ok(BinaryWord::empty()),
    }
}

fn family_graph(family: Family, param: &str) -> Result<Graph, Failure> {
    let number = || -> Result<usize, Failure> {
        param
            .trim()
            .parse()
            .map_err(|e| Failure::Usage(format!("--param {param:?}: {e}")))
    };
    Ok(match family {
        Family::Wheel => wheel(number()?)?,
        Family::Star => star(number()?),
        Family::Chain => chain(number()?)?,
        Family::Cycle => cycle(number()?)?,
        Family::Complete => complete(number()?),
        Family::Fk => fk_tree(number()?)?,
        Family::Caterpillar => caterpillar_graph(&param.parse()?),
    })
}

fn leaf_function_of(input: &GraphInput) -> Result<LeafFunction, Failure> {
    if let Some(seq) = &input.caterpillar {
        return Ok(seq.parse::<CaterpillarSequence>()?.leaf_function());
    }
    let graph = match (&input.family, &input.graph_file) {
        (Some(family), _) => family_graph(*family, input.param.as_deref().unwrap_or_default())?,
        (None, Some(path)) => Graph::from_edge_list(&std::fs::read_to_string(path)?)?,
        (None, None) => {
            return Err(Failure::Usage(
                "give a graph file, --caterpillar or --family".into(),
            ))
        }
    };
    let config = OracleConfig {
        max_vertices: input.max_vertices,
        parallel: input.parallel,
        prune: input.prune,
    };
    Ok(leaf_function_with(&graph, &config)?)
}

fn leaf_function_json(lf: &LeafFunction) -> Value {
    serde_json::to_value(lf).expect("serializable")
}

fn seq_json(s: &CaterpillarSequence) -> Value {
    json!(s.as_slice())
}

fn rejection_json(r: &Rejection) -> Value {
    let mut v = json!({ "realizable": false, "reason": r.to_string() });
    match r {
        Rejection::TooSmall { .. } => v["kind"] = json!("too-small"),
        Rejection::BadPrefix { .. } => v["kind"] = json!("bad-prefix"),
        Rejection::BadAlphabet { position, letter } => {
            v["kind"] = json!("bad-alphabet");
            v["position"] = json!(position);
            v["letter"] = json!(letter.to_string());
        }
        Rejection::NotPrefixNormal { word, violation } => {
            v["kind"] = json!("not-prefix-normal");
            v["word"] = json!(word.to_string());
            v["witness"] = json!([violation.prefix.to_string(), violation.factor.to_string()]);
        }
    }
    v
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::LeafFunction(input) => {
            let lf = leaf_function_of(input)?;
            if json {
                return Ok(Output::ok(lf.to_json()));
            }
            let mut text = String::new();
            for (i, v) in lf.values().iter().enumerate() {
                let _ = writeln!(text, "{i} -> {v}");
            }
            Ok(Output::ok(text))
        }
        Command::LeafWord { input, values } => {
            let lf = match values {
                Some(v) => v.parse::<LeafFunction>()?,
                None => leaf_function_of(input)?,
            };
            let word = delta_leaf_word(&lf)?;
            let rendered = match word.to_binary() {
                Some(b) => b.to_string(),
                None => word.to_string(),
            };
            if json {
                let class = format!("{:?}", word.classify());
                return Ok(Output::ok(
                    json!({ "word": rendered, "class": class }).to_string(),
                ));
            }
            Ok(Output::ok(rendered))
        }
        Command::Rc(arg) => {
            let s = parse_word(arg)?.reading_caterpillar();
            Ok(Output::ok(if json { seq_json(&s).to_string() } else { s.to_string() }))
        }
        Command::WordOf { sequence } => {
            let w = sequence.parse::<CaterpillarSequence>()?.word();
            Ok(Output::ok(if json { json!(w.to_string()).to_string() } else { w.to_string() }))
        }
        Command::Pnf(arg) => {
            let w = parse_word(arg)?;
            let p = w.pnf();
            if json {
                return Ok(Output::ok(
                    json!({ "pnf": p.to_string(), "profile": w.f1_profile() }).to_string(),
                ));
            }
            Ok(Output::ok(p.to_string()))
        }
        Command::CheckPn { word, k } => {
            let w = parse_word(word)?;
            let deficit = w.prefix_normal_deficit();
            let k = k.unwrap_or(0);
            let holds = w.is_k_prefix_normal(k);
            let violation = w.prefix_normal_violation();
            if json {
                let witness = violation
                    .as_ref()
                    .map(|v| json!([v.prefix.to_string(), v.factor.to_string()]));
                return Ok(Output::verdict(
                    json!({ "word": w.to_string(), "k": k, "holds": holds, "deficit": deficit, "witness": witness })
                        .to_string(),
                    holds,
                ));
            }
            let label = if k == 0 { "prefix normal".to_string() } else { format!("{k}-prefix normal") };
            let mut text = if holds {
                format!("word {w:?} is {label}", w = w.to_string())
            } else {
                format!("word {w:?} is not {label} (deficit {deficit})", w = w.to_string())
            };
            if let Some(v) = violation {
                let _ = write!(
                    text,
                    "\nprefix {} has fewer ones than factor {}: witness ({}, {})",
                    v.prefix, v.factor, v.prefix, v.factor
                );
            }
            Ok(Output::verdict(text, holds))
        }
        Command::Realize { values } => {
            let lf: LeafFunction = values.parse()?;
            match realize_caterpillar(&lf) {
                Ok(s) => {
                    if json {
                        let v = json!({
                            "realizable": true,
                            "caterpillar": seq_json(&s),
                            "leaf_function": leaf_function_json(&s.leaf_function()),
                        });
                        return Ok(Output::ok(v.to_string()));
                    }
                    Ok(Output::ok(s.to_string()))
                }
                Err(r) => {
                    let text = if json {
                        rejection_json(&r).to_string()
                    } else {
                        let mut t = format!("not realizable: {r}");
                        if let Rejection::NotPrefixNormal { violation, .. } = &r {
                            let _ = write!(t, "\nwitness ({}, {})", violation.prefix, violation.factor);
                        }
                        t
                    };
                    Ok(Output::verdict(text, false))
                }
            }
        }
        Command::Poset { max_size, dot } => {
            let covers = hasse_covers(*max_size)?;
            if *dot {
                return Ok(Output::ok(hasse_dot(&covers)));
            }
            if json {
                let pairs: Vec<Value> = covers.iter().map(|(a, b)| json!([seq_json(a), seq_json(b)])).collect();
                return Ok(Output::ok(Value::Array(pairs).to_string()));
            }
            let mut text = String::new();
            for (lo, hi) in &covers {
                let _ = writeln!(text, "{lo} < {hi}");
            }
            Ok(Output::ok(text))
        }
        Command::Generate { family, param, dot } => {
            let g = family_graph(*family, param)?;
            if *dot {
                return Ok(Output::ok(g.to_dot(None)));
            }
            if json {
                let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
                return Ok(Output::ok(json!({ "n": g.vertex_count(), "edges": edges }).to_string()));
            }
            Ok(Output::ok(g.to_edge_list()))
        }
        Command::Equiv { first, second } => {
            let (a, b): (BinaryWord, BinaryWord) = (first.parse()?, second.parse()?);
            let same = leaf_equivalent(&a, &b);
            let text = if json { json!({ "equivalent": same }).to_string() } else { same.to_string() };
            Ok(Output::verdict(text, same))
        }
        Command::Verify { suite, max_n } => {
            let reports = run_suite(suite.parse()?, *max_n)?;
            let passed = reports.iter().all(|r| r.passed());
            if json {
                return Ok(Output::verdict(serde_json::to_string(&reports)?, passed));
            }
            let mut text = String::new();
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    text,
                    "{status} {} bound={} instances={} failures={} time={:.2}s",
                    r.claim, r.bound, r.instances, r.failure_count, r.wall_time_secs
                );
                for f in &r.failures {
                    let _ = writeln!(text, "  {f}");
                }
            }
            Ok(Output::verdict(text, passed))
        }
    }
}
