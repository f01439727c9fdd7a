//! The end-to-end run: traces, surface membership, residual certificates on
//! the surface group, the ping-pong suite and the tree stage, in that order.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Field, FiniteField, Fp, Fp2, Prime, QuadExt, INFINITE_VALUATION_CONVENTION};
use crate::error::{Error, Result};
use crate::hausdorff::{injectivity_suite, PGL2Elt};
use crate::par::{self, Exec};
use crate::residual::{faithfulness_certificate, CertifyOutcome, ResidualCertificate};
use crate::surface::{phi, reps_at, surface_eval};
use crate::trace::{eval_trace, RepTriple, TraceEngine};
use crate::tree::{bad_places, discreteness_check, places_up_to_degree, word_ball, GenSet, TreeVertex};
use crate::words::delta::freely_reduced_words;
use crate::words::perm3::kernel_member;
use crate::words::tilde::cyclically_reduced_words;

pub const SUMMARY_SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineConfig {
    pub p: u64,
    /// Bound for the exhaustive word sweeps.
    pub max_word_len: usize,
    /// Largest `n` tried for `psi_n`, raised to `N + 1` when smaller.
    pub max_n: usize,
    pub seed: u64,
    /// Directory receiving `summary.json` and `certificates.json`.
    pub output: PathBuf,
    /// Finite places up to this degree are tested off the bad set.
    pub place_degree: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig { p: 5, max_word_len: 6, max_n: 8, seed: 1, output: PathBuf::from("treechar-out"), place_degree: 2 }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<Prime> {
        let p = Prime::new(self.p).map_err(|e| Error::Config(e.to_string()))?;
        if self.p < 5 {
            return Err(Error::Config(format!("p = {} is not supported, need p >= 5", self.p)));
        }
        for (name, v) in [("max word length", self.max_word_len), ("max n", self.max_n), ("place degree", self.place_degree)] {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be positive")));
            }
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StageResult {
    pub name: String,
    pub passed: bool,
    pub details: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineSummary {
    pub schema: u32,
    pub timestamp: u64,
    pub valuation_convention: String,
    pub config: PipelineConfig,
    pub stages: Vec<StageResult>,
    pub passed: bool,
}

/// Admissible triples over F_{p^2} from random `(q, s)`.
pub fn sample_reps(p: Prime, count: usize, rng: &mut ChaCha8Rng) -> Vec<RepTriple<QuadExt<Fp>>> {
    let ctx = Fp2::context(p);
    let mut out = Vec::new();
    while out.len() < count {
        let q = QuadExt::random(&ctx, rng);
        let s = QuadExt::random(&ctx, rng);
        out.extend(reps_at(&q, &s));
    }
    out.truncate(count);
    out
}

pub fn trace_stage(p: Prime, max_len: usize, reps: &[RepTriple<QuadExt<Fp>>], exec: Exec) -> StageResult {
    let engine = TraceEngine::new();
    let words: Vec<_> = (0..=max_len).flat_map(cyclically_reduced_words).collect();
    let mismatches: Vec<String> = par::map(exec, &words, |w| {
        let t = engine.trace(w);
        reps.iter().any(|rho| {
            let (u, v, x) = rho.uvw();
            t.eval(&u, &v, &x) != eval_trace(w, rho)
        })
    })
    .into_iter()
    .zip(&words)
    .filter(|(bad, _)| *bad)
    .map(|(_, w)| w.to_string())
    .collect();
    StageResult {
        name: "trace".into(),
        passed: mismatches.is_empty(),
        details: json!({ "p": p.get(), "words": words.len(), "representations": reps.len(), "mismatches": mismatches }),
    }
}

pub fn surface_stage(reps: &[RepTriple<QuadExt<Fp>>]) -> StageResult {
    let off: Vec<usize> = reps
        .iter()
        .enumerate()
        .filter(|(_, rho)| {
            let pt = phi(rho);
            !surface_eval(&pt.u, &pt.v, &pt.w).is_zero()
        })
        .map(|(k, _)| k)
        .collect();
    StageResult { name: "surface".into(), passed: off.is_empty(), details: json!({ "representations": reps.len(), "off_surface": off }) }
}

pub struct ResidualStage {
    pub result: StageResult,
    pub certificates: Vec<ResidualCertificate>,
}

/// Certificates for every freely reduced kernel word of length at most
/// `max_len` whose normal form is nontrivial.
pub fn residual_stage(p: Prime, max_len: usize, max_n: usize, exec: Exec) -> ResidualStage {
    let words: Vec<_> = (1..=max_len).flat_map(freely_reduced_words).filter(kernel_member).collect();
    let outcomes = par::map(exec, &words, |w| faithfulness_certificate(w, p, max_n));
    let (mut certificates, mut trivial, mut failures) = (Vec::new(), 0usize, Vec::new());
    for (w, o) in words.iter().zip(outcomes) {
        match o {
            CertifyOutcome::Certified(c) if !c.scalar && !c.p_power_order => certificates.push(c),
            CertifyOutcome::Certified(c) => failures.push(format!("{w}: image {} has p-power order", c.image)),
            CertifyOutcome::TrivialDetected => trivial += 1,
            CertifyOutcome::Inconclusive { bound, tried_up_to } => {
                failures.push(format!("{w}: psi_n vanished for n in {}..={tried_up_to}", bound + 1))
            }
        }
    }
    let max_n_used = certificates.iter().map(|c| c.n).max().unwrap_or(0);
    let over_bound = certificates.iter().filter(|c| c.n > c.bound + 1).count();
    ResidualStage {
        result: StageResult {
            name: "residual".into(),
            passed: failures.is_empty(),
            details: json!({
                "kernel_words": words.len(),
                "certified": certificates.len(),
                "trivial": trivial,
                "needed_n_beyond_bound_plus_one": over_bound,
                "max_n_used": max_n_used,
                "failures": failures,
            }),
        },
        certificates,
    }
}

pub fn hausdorff_stage(p: Prime, max_len: usize, exec: Exec) -> StageResult {
    let r = injectivity_suite(max_len, p, exec);
    StageResult { name: "hausdorff".into(), passed: r.passed(), details: serde_json::to_value(&r).expect("plain data") }
}

/// Smallest `k <= limit` with `g^k` scalar.
pub fn finite_order(g: &PGL2Elt, limit: u64) -> Option<u64> {
    let mut acc = g.clone();
    for k in 1..=limit {
        if acc.is_identity() {
            return Some(k);
        }
        acc = acc.mul(g);
    }
    None
}

/// The image of the modular group on the product of trees at its bad places.
/// Torsion must fix vertices, so the stage passes when every base-stabilizer
/// element found has finite order, the torsion-free commutator subgroup has
/// trivial base-stabilizer, and every generator fixes the base vertex at each
/// tested place off the bad set.
pub fn tree_stage(p: Prime, max_len: usize, place_degree: usize, exec: Exec) -> StageResult {
    let gens = GenSet::hausdorff(p);
    let s = bad_places(&gens.elts);
    let report = discreteness_check(&gens, &s, max_len, exec);
    let elements = word_ball(&gens, max_len);
    let infinite_order: Vec<String> = report
        .failures
        .iter()
        .filter(|w| {
            let e = elements.iter().find(|e| &e.word == *w).expect("failure comes from the ball");
            finite_order(&e.elt, 2 * p.get()).is_none()
        })
        .cloned()
        .collect();
    let comm = discreteness_check(&GenSet::hausdorff_commutators(p), &s, max_len, exec);
    let unsound: Vec<String> = places_up_to_degree(p, place_degree)
        .into_iter()
        .filter(|pl| !s.contains(pl))
        .filter(|pl| gens.elts.iter().any(|g| TreeVertex::base(pl, p).act(g) != TreeVertex::base(pl, p)))
        .map(|pl| pl.label())
        .collect();
    let passed = infinite_order.is_empty() && comm.passed() && unsound.is_empty() && !s.is_empty();
    StageResult {
        name: "trees".into(),
        passed,
        details: json!({
            "bad_places": s.labels(),
            "stabilizer_elements": report.failures,
            "stabilizer_elements_of_infinite_order": infinite_order,
            "checked": report.checked,
            "commutator_subgroup": comm,
            "places_tested_off_bad_set": places_up_to_degree(p, place_degree).len() - s.len(),
            "unsound_places": unsound,
        }),
    }
}

/// Runs every stage in order, writing `summary.json` after each one so a
/// failure leaves the partial results on disk.
pub fn run_pipeline(cfg: &PipelineConfig, exec: Exec) -> Result<PipelineSummary> {
    let p = cfg.validate()?;
    fs::create_dir_all(&cfg.output).map_err(|e| Error::Config(format!("{}: {e}", cfg.output.display())))?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let reps = sample_reps(p, 24, &mut rng);
    let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    let mut summary = PipelineSummary {
        schema: SUMMARY_SCHEMA,
        timestamp,
        valuation_convention: INFINITE_VALUATION_CONVENTION.to_string(),
        config: cfg.clone(),
        stages: Vec::new(),
        passed: true,
    };
    let trace_len = cfg.max_word_len.min(8);
    type Stage<'a> = Box<dyn Fn() -> (StageResult, Option<Vec<ResidualCertificate>>) + 'a>;
    let stages: Vec<Stage> = vec![
        Box::new(|| (trace_stage(p, trace_len, &reps, exec), None)),
        Box::new(|| (surface_stage(&reps), None)),
        Box::new(|| {
            let r = residual_stage(p, cfg.max_word_len, cfg.max_n, exec);
            (r.result, Some(r.certificates))
        }),
        Box::new(|| (hausdorff_stage(p, 2 * cfg.max_word_len, exec), None)),
        Box::new(|| (tree_stage(p, cfg.max_word_len, cfg.place_degree, exec), None)),
    ];
    for stage in stages {
        let (result, certs) = stage();
        if let Some(certs) = certs {
            write_json(&cfg.output.join("certificates.json"), &json!({ "schema": SUMMARY_SCHEMA, "certificates": certs }))?;
        }
        summary.passed &= result.passed;
        summary.stages.push(result);
        write_json(&cfg.output.join("summary.json"), &summary)?;
    }
    Ok(summary)
}

fn write_json<T: Serialize>(path: &Path, v: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(v).expect("plain data");
    fs::write(path, text + "\n").map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

/// Convenience for callers holding raw matrices.
pub fn pgl2_from_entries(p: Prime, e: &[[String; 2]; 2]) -> Result<PGL2Elt> {
    PGL2Elt::from_strings(p, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(PipelineConfig::default().validate().is_ok());
        for p in [2, 3, 4, 9] {
            let cfg = PipelineConfig { p, ..Default::default() };
            assert!(matches!(cfg.validate(), Err(Error::Config(_))), "p = {p}");
        }
        let cfg = PipelineConfig { max_n: 0, ..Default::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn small_stages_pass() {
        let p = Prime::new(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let reps = sample_reps(p, 4, &mut rng);
        assert!(trace_stage(p, 5, &reps, Exec::default()).passed);
        assert!(surface_stage(&reps).passed);
        let r = residual_stage(p, 4, 6, Exec::default());
        assert!(r.result.passed, "{:?}", r.result.details);
        assert!(!r.certificates.is_empty());
        assert!(hausdorff_stage(p, 8, Exec::default()).passed);
        assert!(tree_stage(p, 6, 1, Exec::default()).passed);
    }

    #[test]
    fn torsion_orders() {
        let p = Prime::new(5).unwrap();
        let gens = GenSet::hausdorff(p);
        assert_eq!(finite_order(&gens.elts[0], 10), Some(3));
        assert_eq!(finite_order(&gens.elts[1], 10), Some(2));
        assert_eq!(finite_order(&gens.elts[0].mul(&gens.elts[1]), 10), None);
    }
}
