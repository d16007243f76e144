//! `forest-sat`: build constructions, check saturation, search for minimum
//! saturated graphs and run the exhaustive lemma checks.
//!
//! Exit status: 0 when the claim holds or output was produced, 1 when a
//! claim is refuted (the witness is on stdout), 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use forest_sat::constructions::{ConstructionRecipe, RECIPE_NAMES};
use forest_sat::enumerate::{enumerate_graphs, read_graph6_stream, with_jobs, EnumFilter};
use forest_sat::forest::{contains_linear_forest, LinearForestSpec};
use forest_sat::graph::Graph;
use forest_sat::graph6::to_graph6;
use forest_sat::lemmas::{parse_n_range, verify, Lemma, VerifyConfig, LEMMA_IDS};
use forest_sat::names::describe;
use forest_sat::saturation::{is_saturated, min_sat_search, CandidateSource, SearchOptions};

#[derive(Parser, Debug)]
#[command(name = "forest-sat", version, about = "Saturation numbers of linear forests, checked by machine")]
struct Cli {
    /// Worker threads; 0 uses every core. Output does not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a named construction as graph6.
    Construct {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(RECIPE_NAMES))]
        recipe: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Decide saturation for each graph6 line on stdin.
    Check {
        #[arg(long, value_parser = parse_spec)]
        spec: LinearForestSpec,
    },
    /// Decide containment for each graph6 line on stdin.
    Contains {
        #[arg(long, value_parser = parse_spec)]
        spec: LinearForestSpec,
    },
    /// Minimum number of edges in a saturated graph of order n, with every
    /// attainer up to isomorphism.
    Satsearch {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_spec)]
        spec: LinearForestSpec,
        /// Largest edge count to consider.
        #[arg(long)]
        edge_bound: Option<usize>,
        /// Take candidates from graph6 lines on stdin instead of enumerating.
        #[arg(long)]
        stdin: bool,
        /// Print the full report, not just the summary line.
        #[arg(long)]
        details: bool,
    },
    /// Check a structural statement over every graph in its universe.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(LEMMA_IDS))]
        lemma: String,
        /// Inclusive order range, `a..b` or a single order.
        #[arg(long)]
        n_range: String,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_parser = parse_spec)]
        spec: Option<LinearForestSpec>,
    },
    /// List all graphs of order n up to isomorphism, as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long, default_value_t = 0)]
        min_degree: usize,
        #[arg(long)]
        connected: bool,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
    },
}

fn parse_spec(s: &str) -> Result<LinearForestSpec, String> {
    s.parse().map_err(|e: forest_sat::Error| e.to_string())
}

struct Output {
    code: u8,
    text: String,
}

fn json_text(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("serialisable");
    s.push('\n');
    s
}

fn read_graphs(input: &str) -> forest_sat::Result<Vec<Graph>> {
    read_graph6_stream(input.as_bytes()).collect()
}

fn execute(command: Command, json: bool, input: &str) -> forest_sat::Result<Output> {
    let mut text = String::new();
    let mut code = 0;
    match command {
        Command::Construct { recipe, n, t, k } => {
            let recipe = ConstructionRecipe::from_name(&recipe, n, t, k)?;
            let g = recipe.build()?;
            if json {
                text = json_text(json!({
                    "recipe": recipe.to_string(),
                    "graph6": to_graph6(&g),
                    "order": g.order(),
                    "edges": g.size(),
                    "name": describe(&g),
                }));
            } else {
                let _ = writeln!(text, "{}", to_graph6(&g));
            }
        }
        Command::Check { spec } => {
            let mut rows = Vec::new();
            for g in read_graphs(input)? {
                let verdict = is_saturated(&g, &spec);
                if !verdict.is_saturated() {
                    code = 1;
                }
                if json {
                    rows.push(json!({ "graph6": to_graph6(&g), "edges": g.size(), "verdict": verdict }));
                } else {
                    let _ = writeln!(text, "{verdict}, {} edges", g.size());
                }
            }
            if json {
                text = json_text(json!({ "spec": spec, "results": rows }));
            }
        }
        Command::Contains { spec } => {
            let mut rows = Vec::new();
            for g in read_graphs(input)? {
                let found = contains_linear_forest(&g, &spec);
                if found.is_none() {
                    code = 1;
                }
                if json {
                    rows.push(json!({ "graph6": to_graph6(&g), "contains": found.is_some(), "embedding": found }));
                } else {
                    match found {
                        Some(e) => {
                            let _ = writeln!(text, "contains {spec}: {e}");
                        }
                        None => {
                            let _ = writeln!(text, "{spec}-free");
                        }
                    }
                }
            }
            if json {
                text = json_text(json!({ "spec": spec, "results": rows }));
            }
        }
        Command::Satsearch { n, spec, edge_bound, stdin, details } => {
            let source = if stdin {
                CandidateSource::Graphs(read_graphs(input)?)
            } else {
                CandidateSource::Enumeration
            };
            let report = min_sat_search(n, &spec, SearchOptions { edge_bound }, source)?;
            if let (Some(r), Some(m)) = (&report.reference, report.min_edges) {
                if r.in_range && r.value != m {
                    code = 1;
                }
            }
            text = if json {
                json_text(serde_json::to_value(&report).expect("serialisable"))
            } else if details {
                report.to_text()
            } else {
                format!("{}\n", report.summary())
            };
        }
        Command::Verify { lemma, n_range, t, spec } => {
            let lemma = Lemma::from_id(&lemma, spec, t)?;
            let range = parse_n_range(&n_range)?;
            let report = verify(&lemma, range, &VerifyConfig::from_env())?;
            if !report.holds() {
                code = 1;
            }
            text = if json {
                json_text(serde_json::to_value(&report).expect("serialisable"))
            } else {
                report.to_text()
            };
        }
        Command::Enumerate { n, max_edges, min_degree, connected, count } => {
            let filter = EnumFilter {
                max_edges,
                min_degree,
                connected_only: connected,
            };
            let graphs = enumerate_graphs(n, filter)?;
            if json {
                let mut value = json!({ "n": n, "count": graphs.len() });
                if !count {
                    value["graphs"] = graphs.iter().map(to_graph6).collect();
                }
                text = json_text(value);
            } else if count {
                let _ = writeln!(text, "{}", graphs.len());
            } else {
                for g in &graphs {
                    let _ = writeln!(text, "{}", to_graph6(g));
                }
            }
        }
    }
    Ok(Output { code, text })
}

fn needs_stdin(command: &Command) -> bool {
    matches!(
        command,
        Command::Check { .. } | Command::Contains { .. } | Command::Satsearch { stdin: true, .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut input = String::new();
    if needs_stdin(&cli.command) {
        if let Err(e) = io::stdin().read_to_string(&mut input) {
            eprintln!("error: reading stdin: {e}");
            return ExitCode::from(2);
        }
    }
    let (json, command) = (cli.json, cli.command);
    match with_jobs(cli.jobs, move || execute(command, json, &input)) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
