use std::path::Path;

use homspace::finite::{separation_witness, sl_order_formula, FiniteGroup, IntMatrix, Suite, DEFAULT_ORDER_CAP};
use homspace::literal::{parse_element_list, parse_word_list};
use homspace::spectral::{delta_invariance_check, kesten_profile, reiter_search, GenSet, KestenOptions};
use homspace::{Coset, ParseError};
use serde::Serialize;
use serde_json::json;

use crate::report::{Failure, Report};

/// Largest drift tolerated when a Reiter certificate is recomputed.
const RECHECK_TOL: f64 = 1e-12;

fn parse_failure(src: &str, offset: usize, e: ParseError) -> Failure {
    Failure::usage(format!(
        "parse error at byte {} of {src:?}: {}",
        e.position + offset,
        e.message
    ))
}

/// Strips one pair of enclosing braces, returning the inner text and its
/// byte offset in `src`.
fn unbrace(src: &str) -> (&str, usize) {
    let trimmed = src.trim_end();
    let lead = trimmed.len() - trimmed.trim_start().len();
    let body = trimmed.trim_start();
    match body.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
        Some(inner) => (inner, lead + 1),
        None => (src, 0),
    }
}

#[derive(Serialize)]
struct Deviation {
    word: String,
    minimal_level: Option<i64>,
    deviation: f64,
}

pub fn eymard_verify(src: &str) -> Result<Report, Failure> {
    let (inner, offset) = unbrace(src);
    if inner.trim().is_empty() {
        return Err(Failure::usage("the word set is empty"));
    }
    let words = parse_word_list(inner).map_err(|e| parse_failure(src, offset, e))?;
    let check = delta_invariance_check(&words);
    let deviations: Vec<Deviation> = check
        .deviations
        .iter()
        .map(|(w, d)| Deviation {
            word: w.to_string(),
            minimal_level: w.minimal_level().ok(),
            deviation: *d,
        })
        .collect();
    Report::new(
        "eymard-verify",
        check.all_invariant(),
        json!({
            "level": check.level,
            "coset": Coset::base(check.level).to_string(),
            "all_invariant": check.all_invariant(),
            "deviations": deviations,
        }),
    )
}

/// `a..b` (inclusive), `a..=b`, or `r1,r2,...`.
pub fn parse_radii(src: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::usage(format!("cannot read radii {src:?}; use a..b or a comma list"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let radii: Vec<usize> = if let Some((a, b)) = src.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(bad());
        }
        (a..=b).collect()
    } else {
        src.split(',').map(num).collect::<Result<_, _>>()?
    };
    if radii.is_empty() || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::usage("radii must be a nonempty strictly increasing list"));
    }
    Ok(radii)
}

pub fn kesten(k: usize, radii: &str, cap: Option<usize>, iterations: usize, csv: Option<&Path>) -> Result<Report, Failure> {
    if k == 0 {
        return Err(Failure::usage("k must be at least 1"));
    }
    if iterations == 0 || cap == Some(0) {
        return Err(Failure::usage("iterations and cap must be positive"));
    }
    let radii = parse_radii(radii)?;
    let gens = GenSet::free(k)?;
    let mut opts = KestenOptions {
        iterations,
        ..KestenOptions::default()
    };
    if let Some(cap) = cap {
        opts.cap = cap;
    }
    let profile = kesten_profile(&Coset::base(0), &gens, &radii, opts)?;
    if let Some(path) = csv {
        std::fs::write(path, profile.to_csv())
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let limit = ((2 * k - 1) as f64).sqrt() / k as f64;
    let monotone = profile.estimates.windows(2).all(|w| w[0] <= w[1]);
    let below = profile.estimates.iter().all(|&e| (0.0..=limit + 1e-9).contains(&e));
    Report::new(
        "kesten",
        monotone && below,
        json!({
            "k": k,
            "limit": limit,
            "monotone": monotone,
            "below_limit": below,
            "profile": profile,
        }),
    )
}

pub fn reiter(src: &str, epsilon: f64, window: Option<usize>) -> Result<Report, Failure> {
    if !(epsilon > 0.0 && epsilon < 2.0) {
        return Err(Failure::usage(format!("epsilon must lie in (0, 2), got {epsilon}")));
    }
    if window == Some(0) {
        return Err(Failure::usage("window must be positive"));
    }
    let (inner, offset) = unbrace(src);
    let elems = parse_element_list(inner).map_err(|e| parse_failure(src, offset, e))?;
    let gens = GenSet::symmetric_closure(&elems)?;
    let cert = reiter_search(&gens, epsilon, window.unwrap_or(0))?;
    let drift = cert.recheck();
    let passed = cert.holds() && drift <= RECHECK_TOL;
    Report::new(
        "reiter",
        passed,
        json!({
            "generators": gens.to_string(),
            "max_deviation": cert.max_deviation(),
            "recheck_drift": drift,
            "certificate": cert,
        }),
    )
}

pub fn reciprocity(path: Option<&Path>) -> Result<Report, Failure> {
    let suite = match path {
        None => Suite::bundled(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            let dir = path.parent().unwrap_or(Path::new(".")).to_path_buf();
            let resolve = move |name: &str| std::fs::read_to_string(dir.join(name)).map_err(|e| e.to_string());
            Suite::parse(&text, &resolve)
                .map_err(|errs| Failure::usage(format!("malformed suite {}:\n{errs}", path.display())))?
        }
    };
    let report = suite.run();
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    Report::new("reciprocity", report.passed, &report)
}

fn is_prime(m: u32) -> bool {
    m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| m % d != 0)
}

#[derive(Serialize)]
struct ClassSummary {
    representative: String,
    size: usize,
    element_order: usize,
}

pub fn congruence(n: usize, m: u32, witness: Option<&str>, cap: Option<usize>) -> Result<Report, Failure> {
    if n < 2 || m < 2 {
        return Err(Failure::usage("need n ≥ 2 and m ≥ 2"));
    }
    let witness = witness
        .map(|src| IntMatrix::parse(src).map_err(|e| parse_failure(src, 0, e)))
        .transpose()?;
    let group = FiniteGroup::congruence(n, m, cap.unwrap_or(DEFAULT_ORDER_CAP))?;
    let formula = is_prime(m).then(|| sl_order_formula(n as u32, m as u64));
    let order_ok = formula.map_or(true, |f| f == group.order() as u64);
    let classes: Vec<ClassSummary> = group
        .classes()
        .reps()
        .iter()
        .zip(group.classes().sizes())
        .map(|(&r, &size)| ClassSummary {
            representative: group.element(r).to_string(),
            size,
            element_order: group.element_order(r),
        })
        .collect();
    let mut passed = order_ok;
    let witness_report = match witness {
        None => None,
        Some(a) => {
            let modulus = separation_witness(&a)?;
            let separated = !a.reduce(modulus as u32).is_identity();
            passed &= separated;
            Some(json!({
                "matrix": a.to_string(),
                "modulus": modulus,
                "separated": separated,
                "trivial_mod_m": a.reduce(m).is_identity(),
            }))
        }
    };
    Report::new(
        "congruence",
        passed,
        json!({
            "n": n,
            "m": m,
            "order": group.order(),
            "formula_order": formula,
            "order_matches_formula": formula.map(|_| order_ok),
            "classes": classes,
            "witness": witness_report,
        }),
    )
}
