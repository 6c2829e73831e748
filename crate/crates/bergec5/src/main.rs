//! Command-line front end. All logic lives in the library; this binary
//! parses arguments, wires files to library calls and prints reports.
//!
//! Exit codes: 0 = pass/free, 1 = check failed/pattern found, 2 = bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde::Serialize;

use bergec5::berge::{contains_berge, BergeWitness, PatternGraph};
use bergec5::extremal::{bollobas_gyori, incidence_c4free_bipartite, random_c5free, search_extremal};
use bergec5::hypergraph::Hypergraph3;
use bergec5::io::ParsedH3;
use bergec5::paths::{
    blakley_roy_check, maximize_bound_with_step, verify_claim12, verify_claim8,
    verify_claims13_14_15, verify_lemma9_all, verify_neighborhood_lemma, InequalityReport,
};
use bergec5::report::{analyze, bound_heatmap_svg, input_digest, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "bergec5", version, about = "Structural analysis of Berge-C5-free 3-uniform hypergraphs")]
struct Cli {
    /// Worker threads (also via BERGE_THREADS); default: all cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Test for a Berge pattern: exit 0 when free, 1 when it is contained.
    Check {
        /// Pattern: c2..c9, k4, or path:<edges>.
        #[arg(long)]
        pattern: String,
        file: PathBuf,
        /// Emit the result (and witness, if any) as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Blocks, cores and thin/fat pair counts as JSON.
    Structure { file: PathBuf },
    /// Edge decomposition, alpha statistics and the exact identity checks.
    Decompose {
        file: PathBuf,
        /// JSON is the only output format; accepted for compatibility.
        #[arg(long)]
        json: bool,
    },
    /// Run inequality verifiers (requires a C5-free input).
    Verify {
        file: PathBuf,
        /// all, or a comma list drawn from 8, 9, 12, 13, 14, 15.
        #[arg(long, default_value = "all")]
        claims: String,
    },
    /// Maximize the bound expression over the simplex.
    Bound {
        #[arg(long, default_value_t = 1e-3)]
        grid: f64,
        /// Also write a heatmap SVG here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Projective-plane construction: 3(q²+q+1) vertices, (q+1)(q²+q+1) hyperedges.
    Construct {
        #[arg(long)]
        q: u32,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Seeded maximal C5-free hypergraph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Exact extremal search at small n.
    Search {
        #[arg(long)]
        n: usize,
        /// Time budget, e.g. 30s, 5m, 1h.
        #[arg(long)]
        budget: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Full pipeline: structure, decomposition and every verifier.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn parse_pattern(s: &str) -> Result<PatternGraph, String> {
    let s = s.to_ascii_lowercase();
    if let Some(rest) = s.strip_prefix("path:") {
        let len: usize = rest.parse().map_err(|_| format!("bad path length {rest:?}"))?;
        return PatternGraph::path(len).map_err(|e| e.to_string());
    }
    if s == "k4" {
        return PatternGraph::complete(4).map_err(|e| e.to_string());
    }
    if let Some(rest) = s.strip_prefix('c') {
        let k: usize = rest.parse().map_err(|_| format!("bad cycle length {rest:?}"))?;
        return PatternGraph::cycle(k).map_err(|e| e.to_string());
    }
    Err(format!("unknown pattern {s:?}; use c<k>, k4 or path:<k>"))
}

fn parse_budget(s: &str) -> Result<Duration, String> {
    let s = s.trim();
    let (num, mult) = if let Some(v) = s.strip_suffix('s') {
        (v, 1u64)
    } else if let Some(v) = s.strip_suffix('m') {
        (v, 60)
    } else if let Some(v) = s.strip_suffix('h') {
        (v, 3600)
    } else {
        (s, 1)
    };
    let v: u64 = num
        .parse()
        .map_err(|_| format!("bad budget {s:?}; use e.g. 30s, 5m, 1h"))?;
    Ok(Duration::from_secs(v * mult))
}

fn load(file: &Path) -> Result<(ParsedH3, String), String> {
    let bytes = std::fs::read(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let digest = input_digest(&bytes);
    let text = String::from_utf8_lossy(&bytes);
    let parsed = bergec5::io::parse_h3(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    Ok((parsed, digest))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("BERGE_THREADS").ok().and_then(|v| v.parse().ok()));
    if let Some(t) = threads {
        if rayon::ThreadPoolBuilder::new().num_threads(t).build_global().is_err() {
            eprintln!("warning: thread pool already initialized");
        }
    }
    match run(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, String> {
    match cmd {
        Cmd::Check { pattern, file, json } => {
            let f = parse_pattern(&pattern)?;
            let (parsed, _) = load(&file)?;
            let witness = contains_berge(&parsed.hypergraph, &f);
            check_output(&parsed.hypergraph, &f, &pattern, witness, json)
        }
        Cmd::Structure { file } => {
            let (parsed, digest) = load(&file)?;
            let rep = analyze(
                &parsed.hypergraph,
                Some(file.display().to_string()),
                Some(digest),
                parsed.labels,
            );
            #[derive(Serialize)]
            struct StructureOut<'a> {
                schema: u32,
                n: usize,
                m: usize,
                thin_pairs: usize,
                fat_pairs: usize,
                blocks: &'a [bergec5::report::BlockReport],
            }
            let out = StructureOut {
                schema: SCHEMA_VERSION,
                n: rep.n,
                m: rep.m,
                thin_pairs: rep.thin_pairs,
                fat_pairs: rep.fat_pairs,
                blocks: &rep.blocks,
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Decompose { file, json: _ } => {
            let (parsed, _) = load(&file)?;
            let h = &parsed.hypergraph;
            match bergec5::decompose::decompose(h) {
                Ok(d) => {
                    let g = h.shadow();
                    let a = bergec5::decompose::alpha_stats(&d, &g);
                    #[derive(Serialize)]
                    struct DecomposeOut {
                        schema: u32,
                        triangles: usize,
                        paths: usize,
                        k4s: usize,
                        alpha1: String,
                        alpha2: String,
                        alpha_k4: String,
                        claim6: bergec5::decompose::IdentityReport,
                        observation7: bergec5::decompose::Obs7Report,
                        elements: Vec<bergec5::decompose::DecompElement>,
                    }
                    let out = DecomposeOut {
                        schema: SCHEMA_VERSION,
                        triangles: a.triangles,
                        paths: a.paths,
                        k4s: a.k4s,
                        alpha1: bergec5::rational::rat_str(&a.alpha1),
                        alpha2: bergec5::rational::rat_str(&a.alpha2),
                        alpha_k4: bergec5::rational::rat_str(&a.alpha_k4),
                        claim6: bergec5::decompose::verify_claim6(h, &d),
                        observation7: bergec5::decompose::verify_observation7(h, &d.elements),
                        elements: d.elements,
                    };
                    let pass = out.claim6.holds && out.observation7.holds;
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
                }
                Err(e) => {
                    eprintln!("decomposition failed: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::Verify { file, claims } => {
            let (parsed, _) = load(&file)?;
            let h = &parsed.hypergraph;
            if let Some(w) = bergec5::berge::contains_berge_cycle(h, 5).expect("5 >= 2") {
                let out = serde_json::json!({
                    "schema": SCHEMA_VERSION,
                    "c5_free": false,
                    "witness": w,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
                return Ok(ExitCode::from(1));
            }
            let wanted: Vec<&str> = claims.split(',').map(|s| s.trim()).collect();
            let all = wanted.contains(&"all");
            let mut reports: Vec<InequalityReport> = Vec::new();
            if all || wanted.contains(&"8") {
                reports.push(verify_claim8(h));
            }
            if all || wanted.contains(&"9") {
                reports.push(verify_lemma9_all(h));
            }
            if all {
                reports.push(verify_neighborhood_lemma(h));
                reports.push(blakley_roy_check(&h.shadow()));
            }
            if all || wanted.contains(&"12") {
                reports.push(verify_claim12(h));
            }
            if all || wanted.iter().any(|w| ["13", "14", "15"].contains(w)) {
                let d = bergec5::decompose::decompose(h).map_err(|e| e.to_string())?;
                for rep in verify_claims13_14_15(h, &d) {
                    if all || wanted.contains(&rep.claim.trim_start_matches("claim")) {
                        reports.push(rep);
                    }
                }
            }
            if reports.is_empty() {
                return Err(format!("no recognized claims in {claims:?}"));
            }
            let pass = reports.iter().all(|r| r.holds);
            let out = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "c5_free": true,
                "claims": reports,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Bound { grid, svg } => {
            if !(grid > 0.0 && grid <= 0.1) {
                return Err(format!("grid step {grid} out of range (0, 0.1]"));
            }
            let curve = maximize_bound_with_step(grid);
            if let Some(path) = svg {
                std::fs::write(&path, bound_heatmap_svg(&curve))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            let out = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "bound": curve,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Construct { q, output } => {
            let g0 = incidence_c4free_bipartite(q).map_err(|e| e.to_string())?;
            let h = bollobas_gyori(&g0).map_err(|e| e.to_string())?;
            let header = format!(
                "# projective-plane construction q={q}: points 0..{}, then split pairs (u1,u2) per line\n",
                g0.left
            );
            write_with_header(&h, &output, &header)?;
            eprintln!(
                "wrote {} ({} vertices, {} hyperedges)",
                output.display(),
                h.n(),
                h.edge_count()
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gen { n, seed, output } => {
            if n > 40 {
                return Err(format!("gen supports n ≤ 40, got {n}"));
            }
            let h = random_c5free(n, seed);
            let header = format!("# random maximal C5-free, n={n} seed={seed}\n");
            write_with_header(&h, &output, &header)?;
            eprintln!("wrote {} ({} hyperedges)", output.display(), h.edge_count());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Search { n, budget, json } => {
            let budget = budget.map(|s| parse_budget(&s)).transpose()?;
            let r = search_extremal(n, budget).map_err(|e| e.to_string())?;
            if json {
                let out = serde_json::json!({
                    "schema": SCHEMA_VERSION,
                    "result": r,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!(
                    "n={} m*={}{} nodes={} elapsed={}ms",
                    r.n,
                    r.m_star,
                    if r.exact { "" } else { " (lower bound; budget exhausted)" },
                    r.nodes_explored,
                    r.elapsed_ms
                );
                for t in r.witness.edges() {
                    println!("{} {} {}", t[0], t[1], t[2]);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Analyze { file, json } => {
            let (parsed, digest) = load(&file)?;
            let rep = analyze(
                &parsed.hypergraph,
                Some(file.display().to_string()),
                Some(digest),
                parsed.labels,
            );
            let pass = rep.passed();
            if json {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                print_analyze_summary(&rep);
            }
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn check_output(
    h: &Hypergraph3,
    f: &PatternGraph,
    pattern: &str,
    witness: Option<BergeWitness>,
    json: bool,
) -> Result<ExitCode, String> {
    if let Some(w) = &witness {
        w.verify(h, f)
            .map_err(|e| format!("internal witness check failed: {e}"))?;
    }
    if json {
        let out = serde_json::json!({
            "schema": SCHEMA_VERSION,
            "pattern": pattern,
            "contains": witness.is_some(),
            "witness": witness,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else if let Some(w) = &witness {
        println!(
            "contains Berge-{pattern}: vertices {:?}, hyperedges {:?}",
            w.vmap, w.emap
        );
    } else {
        println!("Berge-{pattern}-free");
    }
    Ok(if witness.is_some() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn print_analyze_summary(rep: &bergec5::report::AnalyzeReport) {
    println!(
        "n={} m={} shadow_edges={} c5_free={}",
        rep.n, rep.m, rep.shadow_edges, rep.c5_free
    );
    println!(
        "pairs: {} thin / {} fat; blocks: {}",
        rep.thin_pairs,
        rep.fat_pairs,
        rep.blocks.len()
    );
    for b in &rep.blocks {
        println!(
            "  block {}: {} hyperedges, core {:?}",
            b.id,
            b.hyperedges.len(),
            b.shape
        );
    }
    if let Some(d) = &rep.decomposition {
        println!(
            "decomposition: {} triangles, {} paths, {} K4s; alpha1={} alpha2={}",
            d.triangles, d.paths, d.k4s, d.alpha1, d.alpha2
        );
        println!(
            "claim6: {} ({} = {})",
            if d.claim6.holds { "ok" } else { "FAILED" },
            d.claim6.lhs,
            d.claim6.rhs
        );
        println!(
            "observation7: {}",
            if d.observation7.holds { "ok" } else { "FAILED" }
        );
    }
    if let Some(err) = &rep.decompose_error {
        println!("decomposition failed: {err}");
    }
    for c in &rep.checks {
        println!(
            "{}: {}{}",
            c.claim,
            if c.holds { "ok" } else { "FAILED" },
            c.note
                .as_deref()
                .map(|n| format!(" ({n})"))
                .unwrap_or_default()
        );
    }
    println!("result: {}", if rep.passed() { "PASS" } else { "FAIL" });
}

fn write_with_header(h: &Hypergraph3, path: &Path, header: &str) -> Result<(), String> {
    let body = bergec5::io::write_h3(h);
    std::fs::write(path, format!("{header}{body}")).map_err(|e| format!("{}: {e}", path.display()))
}
