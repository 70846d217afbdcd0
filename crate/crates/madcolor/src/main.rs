//! Command-line front end: batch queries over graphs with JSON reports.
//!
//! Exit codes: 0 success, 1 unsatisfiable / not-found outcomes, 2 usage or
//! input errors, 3 search budget exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use madcolor::configs::{find_config_thm3, find_config_thm4, find_config_thm5};
use madcolor::constructive::{list_color_thm3, list_color_thm4, list_color_thm5};
use madcolor::discharging::{certify_contradiction, verify_discharge, DischargeCheck, RuleSet};
use madcolor::generators::{
    double_petersen_path, fig1_graph, petersen, petersen_minus_edge, random_graph_mad_below,
};
use madcolor::graph::{check_r_dynamic, Coloring, Graph, ViolationKind};
use madcolor::io::{parse_auto, to_edge_list, to_graph6};
use madcolor::mad::mad_exact;
use madcolor::rational::Rat;
use madcolor::solver::{
    chi_r_dynamic, choosability_sample, color_with_lists, is_f_choosable_exact,
    verify_greedy_certificate, CertCheck, Choosability, DemandFunction, GreedyCertificate,
    ListAssignment, SampleOutcome, SolverError,
};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::io::Read;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "madcolor", version, about = "exact r-dynamic list coloring toolkit")]
struct Cli {
    /// Solver threads; only the deterministic single-threaded mode exists.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact maximum average degree with a densest-subgraph witness.
    Mad { file: String },
    /// Exact r-dynamic chromatic number with a witness coloring.
    Chi {
        file: String,
        #[arg(short)]
        r: usize,
        /// Cap on search nodes per candidate color count.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Find an r-dynamic coloring from lists.
    Color {
        file: String,
        #[arg(short)]
        r: usize,
        /// JSON file mapping vertex ids to color lists.
        #[arg(long, conflicts_with = "k")]
        lists: Option<String>,
        /// Identical lists {0..k-1} at every vertex.
        #[arg(long)]
        k: Option<usize>,
        /// Use the constructive procedure for this bound (requires -r 3).
        #[arg(long, conflicts_with = "exact")]
        theorem: Option<u8>,
        /// Use plain exact search (default).
        #[arg(long)]
        exact: bool,
    },
    /// Validate a coloring.
    Check {
        file: String,
        #[arg(long)]
        coloring: String,
        #[arg(short)]
        r: usize,
        #[arg(long)]
        lists: Option<String>,
    },
    /// f-choosability: exact check, random sampling, or certificate audit.
    Choosable {
        file: String,
        /// JSON file mapping vertex ids to demands.
        #[arg(long)]
        f: String,
        #[arg(long)]
        exact: bool,
        /// Number of random list assignments to try.
        #[arg(long, conflicts_with = "exact")]
        sample: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// JSON file with a greedy certificate to verify.
        #[arg(long, conflicts_with_all = ["exact", "sample"])]
        certificate: Option<String>,
    },
    /// First reducible configuration under a rule set.
    FindConfig {
        file: String,
        #[arg(long)]
        theorem: u8,
    },
    /// Discharging ledger, optionally verified against a bound.
    Discharge {
        file: String,
        #[arg(long)]
        theorem: u8,
        #[arg(long)]
        bound: Option<String>,
    },
    /// Emit a named graph.
    Gen {
        name: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Cross-check density, configuration search and discharging.
    Certify {
        file: String,
        #[arg(long)]
        theorem: u8,
    },
}

fn fail(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn read_input(path: &str) -> String {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .unwrap_or_else(|e| fail(&format!("reading stdin: {e}")));
        buf
    } else {
        std::fs::read_to_string(path).unwrap_or_else(|e| fail(&format!("reading {path}: {e}")))
    }
}

fn load_graph(path: &str) -> Graph {
    parse_auto(&read_input(path)).unwrap_or_else(|e| fail(&format!("parsing graph: {e}")))
}

fn ruleset(theorem: u8) -> RuleSet {
    match theorem {
        3 => RuleSet::Thm3,
        4 => RuleSet::Thm4,
        5 => RuleSet::Thm5,
        t => fail(&format!("unknown theorem {t}; expected 3, 4 or 5")),
    }
}

fn coloring_json(phi: &Coloring) -> Value {
    let map: BTreeMap<String, usize> = (0..phi.n())
        .map(|v| (v.to_string(), phi.get(v).unwrap()))
        .collect();
    json!(map)
}

fn parse_coloring(s: &str, n: usize) -> Coloring {
    let map: BTreeMap<String, usize> =
        serde_json::from_str(s).unwrap_or_else(|e| fail(&format!("parsing coloring: {e}")));
    let mut phi = Coloring::empty(n);
    for (k, c) in map {
        let v: usize = k
            .parse()
            .unwrap_or_else(|_| fail(&format!("bad vertex key {k:?} in coloring")));
        if v >= n {
            fail(&format!("coloring vertex {v} out of range"));
        }
        phi.set(v, c);
    }
    phi
}

fn report(command: &str, graph: Option<&Graph>, result: Value, started: Instant, code: i32) -> ! {
    let mut out = json!({
        "command": command,
        "result": result,
        "elapsed_ms": started.elapsed().as_millis() as u64,
    });
    if let Some(g) = graph {
        out["graph"] = json!({"vertices": g.n(), "edges": g.edge_count()});
    }
    println!("{out}");
    std::process::exit(code);
}

fn main() {
    let cli = Cli::parse();
    if cli.threads != 1 {
        fail("only --threads 1 (deterministic) is supported");
    }
    let started = Instant::now();
    match cli.cmd {
        Cmd::Mad { file } => {
            let g = load_graph(&file);
            let (mad, witness) =
                mad_exact(&g).unwrap_or_else(|e| fail(&format!("mad: {e}")));
            report(
                "mad",
                Some(&g),
                json!({"mad": mad.to_string(), "witness": witness}),
                started,
                0,
            );
        }
        Cmd::Chi { file, r, budget } => {
            let g = load_graph(&file);
            match chi_r_dynamic(&g, r, budget) {
                Ok((k, phi)) => report(
                    "chi",
                    Some(&g),
                    json!({"chi_rd": k, "coloring": coloring_json(&phi)}),
                    started,
                    0,
                ),
                Err(SolverError::BudgetExceeded { lower, upper }) => report(
                    "chi",
                    Some(&g),
                    json!({"budget_exceeded": {"lower": lower, "upper": upper}}),
                    started,
                    3,
                ),
                Err(e) => fail(&format!("chi: {e}")),
            }
        }
        Cmd::Color {
            file,
            r,
            lists,
            k,
            theorem,
            exact: _,
        } => {
            let g = load_graph(&file);
            let lists = match (lists, k) {
                (Some(path), None) => ListAssignment::from_json(&read_input(&path))
                    .unwrap_or_else(|e| fail(&format!("parsing lists: {e}"))),
                (None, Some(k)) => {
                    ListAssignment::uniform(g.n(), &(0..k).collect::<Vec<_>>())
                }
                _ => fail("exactly one of --lists and --k is required"),
            };
            if lists.lists.len() != g.n() {
                fail(&format!(
                    "{} lists for {} vertices",
                    lists.lists.len(),
                    g.n()
                ));
            }
            match theorem {
                None => match color_with_lists(&g, r, &lists) {
                    Ok(Some(phi)) => report(
                        "color",
                        Some(&g),
                        json!({"coloring": coloring_json(&phi)}),
                        started,
                        0,
                    ),
                    Ok(None) => report("color", Some(&g), json!("Unsat"), started, 1),
                    Err(e) => fail(&format!("color: {e}")),
                },
                Some(t) => {
                    if r != 3 {
                        fail("--theorem requires -r 3");
                    }
                    let run = match ruleset(t) {
                        RuleSet::Thm3 => list_color_thm3,
                        RuleSet::Thm4 => list_color_thm4,
                        RuleSet::Thm5 => list_color_thm5,
                    };
                    match run(&g, &lists) {
                        Ok(out) => {
                            let trace: Value =
                                serde_json::from_str(&out.trace.to_json()).unwrap();
                            report(
                                "color",
                                Some(&g),
                                json!({"coloring": coloring_json(&out.coloring), "trace": trace}),
                                started,
                                0,
                            )
                        }
                        Err(e) => fail(&format!("color: {e}")),
                    }
                }
            }
        }
        Cmd::Check {
            file,
            coloring,
            r,
            lists,
        } => {
            let g = load_graph(&file);
            let phi = parse_coloring(&read_input(&coloring), g.n());
            let lists = lists.map(|path| {
                ListAssignment::from_json(&read_input(&path))
                    .unwrap_or_else(|e| fail(&format!("parsing lists: {e}")))
            });
            let verdict = check_r_dynamic(&g, r, &phi, lists.as_ref().map(|l| &l.lists[..]))
                .unwrap_or_else(|e| fail(&format!("check: {e}")));
            match verdict {
                Ok(()) => report("check", Some(&g), json!({"valid": true}), started, 0),
                Err(viol) => {
                    let kind = match viol.kind {
                        ViolationKind::NotProper { neighbor } => {
                            json!({"not_proper": {"neighbor": neighbor}})
                        }
                        ViolationKind::TooFewNeighborColors { seen, required } => {
                            json!({"too_few_neighbor_colors": {"seen": seen, "required": required}})
                        }
                        ViolationKind::ColorNotInList { color } => {
                            json!({"color_not_in_list": {"color": color}})
                        }
                    };
                    report(
                        "check",
                        Some(&g),
                        json!({"valid": false, "violation": {"vertex": viol.vertex, "kind": kind}}),
                        started,
                        1,
                    )
                }
            }
        }
        Cmd::Choosable {
            file,
            f,
            exact,
            sample,
            seed,
            certificate,
        } => {
            let g = load_graph(&file);
            let f = DemandFunction::from_json(&read_input(&f))
                .unwrap_or_else(|e| fail(&format!("parsing demands: {e}")));
            if let Some(path) = certificate {
                let cert: GreedyCertificate = serde_json::from_str(&read_input(&path))
                    .unwrap_or_else(|e| fail(&format!("parsing certificate: {e}")));
                match verify_greedy_certificate(&g, &f, &cert) {
                    Ok(CertCheck::Valid) => {
                        report("choosable", Some(&g), json!({"certificate": "Valid"}), started, 0)
                    }
                    Ok(CertCheck::FailsAt { vertex }) => report(
                        "choosable",
                        Some(&g),
                        json!({"certificate": {"FailsAt": vertex}}),
                        started,
                        1,
                    ),
                    Err(e) => fail(&format!("certificate: {e}")),
                }
            } else if let Some(trials) = sample {
                let seed = seed.unwrap_or_else(|| fail("--sample requires --seed"));
                match choosability_sample(&g, &f, trials, seed) {
                    Ok(SampleOutcome::NoCounterexampleFound) => report(
                        "choosable",
                        Some(&g),
                        json!({"sample": {"trials": trials, "counterexample": null}}),
                        started,
                        0,
                    ),
                    Ok(SampleOutcome::Counterexample { lists }) => {
                        let lists: Value = serde_json::from_str(&lists.to_json()).unwrap();
                        report(
                            "choosable",
                            Some(&g),
                            json!({"sample": {"counterexample": lists}}),
                            started,
                            1,
                        )
                    }
                    Err(e) => fail(&format!("sample: {e}")),
                }
            } else {
                let _ = exact; // exact is the default mode
                match is_f_choosable_exact(&g, &f) {
                    Ok(Choosability::Choosable) => {
                        report("choosable", Some(&g), json!({"choosable": true}), started, 0)
                    }
                    Ok(Choosability::NotChoosable { lists }) => {
                        let lists: Value = serde_json::from_str(&lists.to_json()).unwrap();
                        report(
                            "choosable",
                            Some(&g),
                            json!({"choosable": false, "counterexample": lists}),
                            started,
                            1,
                        )
                    }
                    Err(e) => fail(&format!("choosable: {e}")),
                }
            }
        }
        Cmd::FindConfig { file, theorem } => {
            let g = load_graph(&file);
            let found = match ruleset(theorem) {
                RuleSet::Thm3 => find_config_thm3(&g),
                RuleSet::Thm4 => find_config_thm4(&g),
                RuleSet::Thm5 => find_config_thm5(&g),
            };
            match found {
                Some(m) => {
                    let m: Value = serde_json::from_str(&m.to_json()).unwrap();
                    report("find-config", Some(&g), m, started, 0)
                }
                None => report("find-config", Some(&g), json!("NotFound"), started, 1),
            }
        }
        Cmd::Discharge {
            file,
            theorem,
            bound,
        } => {
            let g = load_graph(&file);
            let rules = ruleset(theorem);
            let bound: Rat = match bound {
                Some(s) => s.parse().unwrap_or_else(|e| fail(&format!("bad bound: {e}"))),
                None => rules.bound(),
            };
            let (ledger, check) = verify_discharge(&g, rules, bound);
            let ledger: Value = serde_json::from_str(&ledger.to_json()).unwrap();
            let check = match check {
                DischargeCheck::AllAtLeastBound { minimum } => {
                    json!({"all_at_least_bound": {"minimum": minimum.to_string()}})
                }
                DischargeCheck::Deficient { vertices } => json!({
                    "deficient": vertices
                        .iter()
                        .map(|(v, c)| json!({"vertex": v, "charge": c.to_string()}))
                        .collect::<Vec<_>>()
                }),
            };
            report(
                "discharge",
                Some(&g),
                json!({"ledger": ledger, "check": check}),
                started,
                0,
            );
        }
        Cmd::Gen {
            name,
            params,
            format,
        } => {
            let g = match (name.as_str(), params.as_slice()) {
                ("fig1", []) => fig1_graph(),
                ("petersen", []) => petersen(),
                ("petersen-minus-edge", []) => petersen_minus_edge(),
                ("double-petersen", [ell]) => {
                    let ell: usize = ell
                        .parse()
                        .unwrap_or_else(|_| fail("double-petersen needs a path length"));
                    double_petersen_path(ell).unwrap_or_else(|e| fail(&e.to_string()))
                }
                ("random", [n, bound, seed]) => {
                    let n: usize = n.parse().unwrap_or_else(|_| fail("bad vertex count"));
                    let bound: Rat =
                        bound.parse().unwrap_or_else(|e| fail(&format!("bad bound: {e}")));
                    let seed: u64 = seed.parse().unwrap_or_else(|_| fail("bad seed"));
                    random_graph_mad_below(n, bound, seed)
                }
                _ => fail(
                    "usage: gen fig1 | petersen | petersen-minus-edge | double-petersen L | random N BOUND SEED",
                ),
            };
            match format {
                Format::Graph6 => {
                    println!("{}", to_graph6(&g).unwrap_or_else(|e| fail(&e.to_string())))
                }
                Format::Edges => print!("{}", to_edge_list(&g)),
            }
        }
        Cmd::Certify { file, theorem } => {
            let g = load_graph(&file);
            let rep = certify_contradiction(&g, ruleset(theorem));
            let code = i32::from(rep.internal_inconsistency);
            let rep = serde_json::to_value(&rep).unwrap();
            report("certify", Some(&g), rep, started, code);
        }
    }
}
