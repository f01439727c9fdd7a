use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use treechar_core::algebra::{Field, Fp, Fp2, Place, Prime, QuadExt, RatF};
use treechar_core::hausdorff::{injectivity_suite, PGL2Elt};
use treechar_core::par::{with_jobs, Exec};
use treechar_core::pipeline::{run_pipeline, PipelineConfig};
use treechar_core::residual::{faithfulness_certificate, CertifyOutcome};
use treechar_core::surface::{enumerate_points, solve_for_r, surface_eval, RRoots, SurfacePoint};
use treechar_core::trace::TraceEngine;
use treechar_core::tree::{
    bad_places, discreteness_check, elliptic_witness_search, ideal_points_report, translation_length, GenSet, PlaceSet,
};
use treechar_core::words::{DeltaWord, TildeWord, XiWord};
use treechar_core::Error;

#[derive(Parser)]
#[command(name = "treechar", version, about = "Faithful surface-group representations over F_p(t) and their tree actions")]
struct Cli {
    /// Cap on worker threads for the parallel sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Trace polynomial of a word in A, A', B, C (optional leading Z*).
    Trace {
        #[arg(long)]
        word: String,
        #[arg(short, long, default_value_t = 5)]
        p: u64,
        /// Evaluate at u,v,w in F_p.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        at: Option<Vec<i64>>,
    },
    /// Points of the cubic surface, or the trace condition solved for r.
    Surface {
        #[arg(short, long, default_value_t = 5)]
        p: u64,
        /// CSV of all points over F_p (F_{p^2} with --quadratic).
        #[arg(long, conflicts_with = "solve_r")]
        enumerate: bool,
        #[arg(long)]
        quadratic: bool,
        /// Solve tr ABC = 1 for r at the given q and s in F_{p^2}, written `a` or `a+bw`.
        #[arg(long, requires_all = ["q", "s"])]
        solve_r: bool,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        s: Option<String>,
    },
    /// JSON certificate that a word in a, a', b, c, d, d' is nontrivial.
    Certify {
        #[arg(long)]
        word: String,
        #[arg(short, long, default_value_t = 5)]
        p: u64,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Ping-pong and non-scalarity table for the modular group.
    Pingpong {
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(short, long, default_value_t = 5)]
        p: u64,
    },
    /// Bad places, translation lengths and discreteness for given generators,
    /// or the pole report at a point of the surface.
    Trees {
        /// JSON generators; defaults to Hausdorff's x and y.
        #[arg(long)]
        gens: Option<PathBuf>,
        #[arg(short, long, default_value_t = 5)]
        p: u64,
        /// `auto`, or a comma-separated list such as `t,inf,t^2 + 2`.
        #[arg(long, default_value = "auto")]
        places: String,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// JSON with `words` and a `point` {u, v, w} of RatF strings.
        #[arg(long, conflicts_with = "gens")]
        ideal_points: Option<PathBuf>,
    },
    /// Every stage end to end, with a JSON summary.
    Pipeline {
        #[arg(short, long, default_value_t = 5)]
        p: u64,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "treechar-out")]
        output: PathBuf,
        #[arg(long, default_value_t = 2)]
        place_degree: usize,
    },
}

enum Failure {
    Config(String),
    Stage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Config(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn prime(p: u64) -> Result<Prime, Failure> {
    let pr = Prime::new(p)?;
    if p < 5 {
        return Err(Failure::Config(Error::CharacteristicTooSmall(p).to_string()));
    }
    Ok(pr)
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("plain data"));
}

fn cmd_trace(word: &str, p: u64, at: Option<Vec<i64>>) -> Outcome {
    let w: TildeWord = word.parse()?;
    let poly = TraceEngine::new().trace(&w);
    println!("{poly}");
    if let Some(at) = at {
        let pr = prime(p)?;
        if at.len() != 3 {
            return Err(Failure::Config("--at takes three values u,v,w".into()));
        }
        let [u, v, x] = [at[0], at[1], at[2]].map(|a| Fp::new(pr, a));
        println!("{}", poly.eval(&u, &v, &x));
    }
    Ok(())
}

fn parse_fp2(p: Prime, s: &str) -> Result<QuadExt<Fp>, Failure> {
    let ctx = Fp2::context(p);
    let bad = || Failure::Config(format!("expected `a` or `a+bw`, got {s:?}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (a, b) = match compact.strip_suffix('w') {
        Some(rest) => {
            let (a, b) = rest.rsplit_once('+').ok_or_else(bad)?;
            (a.parse::<i64>().map_err(|_| bad())?, if b.is_empty() { 1 } else { b.parse::<i64>().map_err(|_| bad())? })
        }
        None => (compact.parse::<i64>().map_err(|_| bad())?, 0),
    };
    Ok(QuadExt::new(&ctx, Fp::new(p, a), Fp::new(p, b)))
}

fn csv<F: std::fmt::Display>(points: &[SurfacePoint<F>]) {
    println!("u,v,w");
    for pt in points {
        println!("{},{},{}", pt.u, pt.v, pt.w);
    }
}

fn cmd_surface(p: u64, enumerate: bool, quadratic: bool, q: Option<String>, s: Option<String>, exec: Exec) -> Outcome {
    let pr = prime(p)?;
    if enumerate {
        if quadratic {
            csv(&enumerate_points::<QuadExt<Fp>>(&Fp2::context(pr), exec)?);
        } else {
            csv(&enumerate_points::<Fp>(&pr, exec)?);
        }
        return Ok(());
    }
    let (Some(q), Some(s)) = (q, s) else {
        return Err(Failure::Config("give --enumerate, or --solve-r with --q and --s".into()));
    };
    let (q, s) = (parse_fp2(pr, &q)?, parse_fp2(pr, &s)?);
    let sol = solve_for_r(&q, &s)?;
    // roots in F_p^4 are written [a, b] for a + b W, W^2 the standard non-residue of F_p^2
    let (field, roots): (&str, Vec<serde_json::Value>) = match &sol.roots {
        RRoots::Base(r) => ("F_p^2", r.iter().map(|x| json!(x.to_string())).collect()),
        RRoots::Extension(_, r) => {
            ("F_p^4", r.iter().map(|x| json!([x.parts().0.to_string(), x.parts().1.to_string()])).collect())
        }
    };
    print_json(&json!({
        "q": q.to_string(),
        "s": s.to_string(),
        "i": sol.i.to_string(),
        "discriminant": sol.discriminant.to_string(),
        "field": field,
        "roots": roots,
        "warnings": sol.warnings,
    }));
    Ok(())
}

fn cmd_certify(word: &str, p: u64, max_n: usize) -> Outcome {
    let pr = prime(p)?;
    let w: DeltaWord = word.parse()?;
    match faithfulness_certificate(&w, pr, max_n) {
        CertifyOutcome::Certified(c) => {
            println!("{}", c.to_json());
            if c.p_power_order {
                return Err(Failure::Stage("image has p-power order".into()));
            }
            Ok(())
        }
        CertifyOutcome::TrivialDetected => Err(Failure::Stage(format!("{w} is trivial in the group"))),
        CertifyOutcome::Inconclusive { bound, tried_up_to } => {
            Err(Failure::Stage(format!("psi_n({w}) = 1 for n = {}..={tried_up_to}", bound + 1)))
        }
    }
}

fn cmd_pingpong(max_len: usize, p: u64, exec: Exec) -> Outcome {
    let pr = prime(p)?;
    let r = injectivity_suite(max_len, pr, exec);
    let len_of = |s: &String| s.parse::<XiWord>().map(|w| w.len()).unwrap_or(0);
    let mut rows: BTreeMap<usize, [usize; 4]> = BTreeMap::new();
    for w in treechar_core::words::xi::xi_words_up_to(max_len) {
        rows.entry(w.len()).or_default()[0] += 1;
    }
    for (col, list) in [(1, &r.scalar_failures), (2, &r.pingpong_failures), (3, &r.pingpong_exempt)] {
        for s in list {
            rows.entry(len_of(s)).or_default()[col] += 1;
        }
    }
    println!("{:>6} {:>8} {:>8} {:>9} {:>7}  status", "length", "words", "scalar", "pingpong", "exempt");
    for (len, [n, sc, pp, ex]) in &rows {
        let status = if sc + pp == 0 { "PASS" } else { "FAIL" };
        println!("{len:>6} {n:>8} {sc:>8} {pp:>9} {ex:>7}  {status}");
    }
    println!("deepest entry degree: {}", r.max_entry_degree);
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Stage(format!("{} scalar, {} ping-pong failures", r.scalar_failures.len(), r.pingpong_failures.len())))
    }
}

#[derive(Deserialize)]
struct GenEntry {
    name: Option<String>,
    matrix: [[String; 2]; 2],
}

#[derive(Deserialize)]
struct GensFile {
    generators: Vec<GenEntry>,
}

fn load_gens(path: &PathBuf, p: Prime) -> Result<GenSet, Failure> {
    let file: GensFile = serde_json::from_str(&read(path)?).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    let mut names = Vec::new();
    let mut elts = Vec::new();
    for (k, g) in file.generators.iter().enumerate() {
        names.push(g.name.clone().unwrap_or_else(|| format!("g{k}")));
        elts.push(PGL2Elt::from_strings(p, &g.matrix)?);
    }
    Ok(GenSet::new(names, elts)?)
}

#[derive(Deserialize)]
struct PointIn {
    u: String,
    v: String,
    w: String,
}

#[derive(Deserialize)]
struct IdealFile {
    words: Vec<String>,
    point: PointIn,
}

fn cmd_ideal_points(path: &PathBuf, p: Prime) -> Outcome {
    let file: IdealFile = serde_json::from_str(&read(path)?).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    let point = SurfacePoint { u: RatF::parse(p, &file.point.u)?, v: RatF::parse(p, &file.point.v)?, w: RatF::parse(p, &file.point.w)? };
    let words = file.words.iter().map(|w| w.parse::<TildeWord>()).collect::<Result<Vec<_>, _>>()?;
    let on_surface = surface_eval(&point.u, &point.v, &point.w).is_zero();
    print_json(&json!({
        "schema": 1,
        "on_surface": on_surface,
        "point": { "u": point.u.to_string(), "v": point.v.to_string(), "w": point.w.to_string() },
        "traces": ideal_points_report(&words, &point),
    }));
    Ok(())
}

fn cmd_trees(gens: Option<PathBuf>, p: u64, places: &str, max_len: usize, ideal: Option<PathBuf>, exec: Exec) -> Outcome {
    let pr = prime(p)?;
    if let Some(path) = ideal {
        return cmd_ideal_points(&path, pr);
    }
    let gens = match gens {
        Some(path) => load_gens(&path, pr)?,
        None => GenSet::hausdorff(pr),
    };
    let bad = bad_places(&gens.elts);
    let set = if places.trim() == "auto" {
        bad.clone()
    } else {
        PlaceSet::new(places.split(',').map(|s| Place::parse(pr, s)).collect::<Result<Vec<_>, _>>()?)
    };
    let lengths: Vec<_> = gens
        .names
        .iter()
        .zip(&gens.elts)
        .map(|(n, g)| json!({ "generator": n, "lengths": set.places.iter().map(|pl| (pl.label(), translation_length(g, pl))).collect::<BTreeMap<_, _>>() }))
        .collect();
    let report = discreteness_check(&gens, &set, max_len, exec);
    let witnesses: BTreeMap<String, Vec<String>> = set
        .places
        .iter()
        .map(|pl| (pl.label(), elliptic_witness_search(&gens, pl, max_len.min(6), exec).into_iter().take(10).map(|e| e.word).collect()))
        .collect();
    let missing: Vec<String> = bad.places.iter().filter(|pl| !set.contains(pl)).map(|pl| pl.label()).collect();
    print_json(&json!({
        "schema": 1,
        "p": p,
        "bad_places": bad.labels(),
        "places": set.labels(),
        "bad_places_not_covered": missing,
        "translation_lengths": lengths,
        "discreteness": report,
        "elliptic_witnesses": witnesses,
    }));
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Stage(format!("{} nonidentity elements fix the base vertex", report.failures.len())))
    }
}

fn cmd_pipeline(cfg: PipelineConfig, exec: Exec) -> Outcome {
    cfg.validate()?;
    let summary = run_pipeline(&cfg, exec)?;
    for s in &summary.stages {
        println!("{:<10} {}", s.name, if s.passed { "PASS" } else { "FAIL" });
    }
    println!("summary: {}", cfg.output.join("summary.json").display());
    if summary.passed {
        Ok(())
    } else {
        Err(Failure::Stage("pipeline stage failed".into()))
    }
}

fn run(cli: Cli) -> Outcome {
    let exec = Exec::default();
    match cli.cmd {
        Cmd::Trace { word, p, at } => cmd_trace(&word, p, at),
        Cmd::Surface { p, enumerate, quadratic, solve_r: _, q, s } => cmd_surface(p, enumerate, quadratic, q, s, exec),
        Cmd::Certify { word, p, max_n } => cmd_certify(&word, p, max_n),
        Cmd::Pingpong { max_len, p } => cmd_pingpong(max_len, p, exec),
        Cmd::Trees { gens, p, places, max_len, ideal_points } => cmd_trees(gens, p, &places, max_len, ideal_points, exec),
        Cmd::Pipeline { p, max_len, max_n, seed, output, place_degree } => {
            cmd_pipeline(PipelineConfig { p, max_word_len: max_len, max_n, seed, output, place_degree }, exec)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs;
    match with_jobs(jobs, move || run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Stage(msg)) => {
            eprintln!("treechar: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("treechar: {msg}");
            ExitCode::from(2)
        }
    }
}
