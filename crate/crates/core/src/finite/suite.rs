//! Reciprocity suites: a line-oriented file declaring finite groups,
//! subgroups and characters, followed by the checks to run on them.
//!
//! ```text
//! group     S3 perm 3 : (1 2) ; (1 2 3)
//! group     G sl 2 3                         # SL(2, Z/3)
//! group     M matrix 3 : 1 1 / 0 1 ; 1 0 / 1 1
//! subgroup  C3 < S3 : (1 2 3)
//! irreps    S3 s3.chars                      # path relative to the suite
//! char      S3 bad = 1,0 0,0 0,0
//! order     S3 6
//! frobenius S3 C3                            # every irreducible pair
//! frobenius S3 C3 irr1 irr2                  # χ on C3, ρ on S3
//! stages    S3 C3 E                          # every irreducible of E
//! shadow    S3 C3
//! invariant S3 bad
//! ```
//!
//! Character references are labels declared with `char`, `1` (trivial),
//! `reg` (regular) or `irr<k>` (the k-th loaded irreducible).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

use super::character::{as_multiplicity, frobenius_check, stages_check, Character};
use super::chardata::{load_irreducibles, parse_rows};
use super::group::{FiniteGroup, GroupElement, DEFAULT_ORDER_CAP};
use super::matrix::IntMatrix;
use super::perm::Permutation;
use super::subgroup::Subgroup;

/// Classwise tolerance for induction-in-stages comparisons.
pub const STAGES_TOL: f64 = 1e-9;

const DEFAULT_SUITE: &str = include_str!("../../suites/default/default.suite");
const DEFAULT_FILES: &[(&str, &str)] = &[
    ("s3.chars", include_str!("../../suites/default/s3.chars")),
    ("s3_c3.chars", include_str!("../../suites/default/s3_c3.chars")),
    ("s3_c2.chars", include_str!("../../suites/default/s3_c2.chars")),
    ("s4.chars", include_str!("../../suites/default/s4.chars")),
    ("s4_s3.chars", include_str!("../../suites/default/s4_s3.chars")),
    ("s4_c2.chars", include_str!("../../suites/default/s4_c2.chars")),
    ("sl23.chars", include_str!("../../suites/default/sl23.chars")),
    ("sl23_borel.chars", include_str!("../../suites/default/sl23_borel.chars")),
    ("gl32.chars", include_str!("../../suites/default/gl32.chars")),
    ("gl32_stab.chars", include_str!("../../suites/default/gl32_stab.chars")),
    ("trivial.chars", include_str!("../../suites/default/trivial.chars")),
];

/// Every malformed entry found while loading a suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteErrors(pub Vec<Error>);

impl fmt::Display for SuiteErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for SuiteErrors {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Perm { degree: usize },
    Mat { n: usize, m: u32 },
}

struct Domain {
    sub: Arc<Subgroup>,
    kind: Kind,
    irreps: Option<Vec<Character>>,
}

#[derive(Debug, Clone)]
enum Check {
    Order { domain: String, expected: usize },
    Frobenius { g: String, h: String, pair: Option<(String, String)> },
    Stages { g: String, h: String, f: String, chi: Option<String> },
    Shadow { g: String, h: String },
    Invariant { domain: String, label: String },
}

/// A loaded suite, ready to run.
pub struct Suite {
    domains: HashMap<String, Domain>,
    chars: HashMap<(String, String), Character>,
    checks: Vec<(usize, Check)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub line: usize,
    pub kind: &'static str,
    pub subject: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub passed: bool,
    pub checks_run: usize,
    pub failures: usize,
    pub warnings: Vec<String>,
    pub checks: Vec<CheckReport>,
}

fn malformed(line: usize, message: impl Into<String>) -> Error {
    Error::Malformed {
        line,
        message: message.into(),
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || "_.-".contains(c))
}

impl Suite {
    /// The suite shipped with the library.
    pub fn bundled() -> Suite {
        Suite::parse(DEFAULT_SUITE, &|name: &str| {
            DEFAULT_FILES
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, text)| text.to_string())
                .ok_or_else(|| format!("no bundled file named {name}"))
        })
        .expect("bundled suite is valid")
    }

    pub fn bundled_source() -> &'static str {
        DEFAULT_SUITE
    }

    /// Parses a suite; `resolve` maps `irreps` paths to file contents.
    pub fn parse(text: &str, resolve: &dyn Fn(&str) -> std::result::Result<String, String>) -> Result<Suite, SuiteErrors> {
        let mut suite = Suite {
            domains: HashMap::new(),
            chars: HashMap::new(),
            checks: Vec::new(),
        };
        let mut errors = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            if let Err(e) = suite.parse_line(line, body, resolve) {
                errors.push(e);
            }
        }
        if errors.is_empty() {
            Ok(suite)
        } else {
            Err(SuiteErrors(errors))
        }
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn domain(&self, name: &str) -> Option<&Arc<Subgroup>> {
        self.domains.get(name).map(|d| &d.sub)
    }

    pub fn irreducibles(&self, name: &str) -> Option<&[Character]> {
        self.domains.get(name)?.irreps.as_deref()
    }

    fn parse_line(
        &mut self,
        line: usize,
        body: &str,
        resolve: &dyn Fn(&str) -> std::result::Result<String, String>,
    ) -> Result<()> {
        let (head, tail) = match body.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (body, None),
        };
        let words: Vec<&str> = head.split_whitespace().collect();
        let Some((&directive, args)) = words.split_first() else {
            return Err(malformed(line, "missing directive"));
        };
        let new_name = |name: &str, this: &Suite| -> Result<()> {
            if !valid_name(name) {
                return Err(malformed(line, format!("invalid name '{name}'")));
            }
            if this.domains.contains_key(name) {
                return Err(malformed(line, format!("'{name}' is already defined")));
            }
            Ok(())
        };
        match directive {
            "group" => {
                let [name, kind, params @ ..] = args else {
                    return Err(malformed(line, "usage: group NAME (perm DEG | sl N M | matrix M) [: gens]"));
                };
                new_name(name, self)?;
                let num = |s: &str| -> Result<usize> {
                    s.parse().map_err(|_| malformed(line, format!("expected a number, found '{s}'")))
                };
                let (group, kind) = match (*kind, params) {
                    ("perm", [deg]) => {
                        let degree = num(deg)?;
                        let gens = split_list(tail, line)?
                            .into_iter()
                            .map(|(s, _)| {
                                Permutation::parse_cycles(s, degree)
                                    .map_err(|e| malformed(line, format!("generator '{s}': {e}")))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        let g = FiniteGroup::from_permutations(gens, DEFAULT_ORDER_CAP)
                            .map_err(|e| malformed(line, e.to_string()))?;
                        (g, Kind::Perm { degree })
                    }
                    ("sl", [n, m]) => {
                        if tail.is_some() {
                            return Err(malformed(line, "sl groups take no generator list"));
                        }
                        let (n, m) = (num(n)?, num(m)?);
                        let m32 = u32::try_from(m).map_err(|_| malformed(line, "modulus too large"))?;
                        let g = FiniteGroup::congruence(n, m32, DEFAULT_ORDER_CAP)
                            .map_err(|e| malformed(line, e.to_string()))?;
                        (g, Kind::Mat { n, m: m32 })
                    }
                    ("matrix", [m]) => {
                        let m32 = u32::try_from(num(m)?).map_err(|_| malformed(line, "modulus too large"))?;
                        let gens = split_list(tail, line)?
                            .into_iter()
                            .map(|(s, _)| {
                                IntMatrix::parse(s).map_err(|e| malformed(line, format!("generator '{s}': {e}")))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        let n = gens.first().map(|a| a.dim()).unwrap_or(0);
                        if gens.iter().any(|a| a.dim() != n) {
                            return Err(malformed(line, "generators differ in dimension"));
                        }
                        let g = FiniteGroup::from_matrices(&gens, m32, DEFAULT_ORDER_CAP)
                            .map_err(|e| malformed(line, e.to_string()))?;
                        (g, Kind::Mat { n, m: m32 })
                    }
                    _ => return Err(malformed(line, format!("unknown group form '{}'", head.trim()))),
                };
                let group = Arc::new(group);
                self.domains.insert(
                    name.to_string(),
                    Domain {
                        sub: Arc::new(Subgroup::whole(&group)),
                        kind,
                        irreps: None,
                    },
                );
            }
            "subgroup" => {
                let [name, "<", parent] = args else {
                    return Err(malformed(line, "usage: subgroup NAME < PARENT : elements"));
                };
                new_name(name, self)?;
                let parent = self.lookup(parent, line)?;
                let (kind, parent_sub) = (parent.kind, Arc::clone(&parent.sub));
                let elems = split_list_allow_empty(tail, line)?
                    .into_iter()
                    .map(|(s, _)| parse_element(kind, s).map_err(|m| malformed(line, format!("element '{s}': {m}"))))
                    .collect::<Result<Vec<_>>>()?;
                let sub = Subgroup::from_elements(parent_sub.parent(), &elems)
                    .map_err(|e| malformed(line, e.to_string()))?;
                if !sub.is_subgroup_of(&parent_sub) {
                    return Err(malformed(line, "generated subgroup is not contained in the parent"));
                }
                self.domains.insert(
                    name.to_string(),
                    Domain {
                        sub: Arc::new(sub),
                        kind,
                        irreps: None,
                    },
                );
            }
            "irreps" => {
                let [name, path] = args else {
                    return Err(malformed(line, "usage: irreps DOMAIN PATH"));
                };
                let sub = Arc::clone(&self.lookup(name, line)?.sub);
                let text = resolve(path).map_err(|e| malformed(line, format!("cannot read {path}: {e}")))?;
                let irreps = load_irreducibles(&sub, &text).map_err(|e| match e {
                    Error::Malformed { line: l, message } => malformed(line, format!("{path}:{l}: {message}")),
                    other => malformed(line, format!("{path}: {other}")),
                })?;
                self.domains.get_mut(*name).expect("looked up above").irreps = Some(irreps);
            }
            "char" => {
                let (lhs, values) = body
                    .split_once('=')
                    .ok_or_else(|| malformed(line, "usage: char DOMAIN LABEL = values"))?;
                let parts: Vec<&str> = lhs.split_whitespace().collect();
                let [_, domain, label] = parts[..] else {
                    return Err(malformed(line, "usage: char DOMAIN LABEL = values"));
                };
                if !valid_name(label) || label == "1" || label == "reg" || label.starts_with("irr") {
                    return Err(malformed(line, format!("invalid or reserved label '{label}'")));
                }
                let sub = Arc::clone(&self.lookup(domain, line)?.sub);
                let rows = parse_rows(values, line)?;
                let [(_, vals)] = &rows[..] else {
                    return Err(malformed(line, "expected one row of class values"));
                };
                let chi = Character::new(&sub, vals.clone()).map_err(|e| malformed(line, e.to_string()))?;
                self.chars.insert((domain.to_string(), label.to_string()), chi);
            }
            "order" => {
                let [domain, n] = args else {
                    return Err(malformed(line, "usage: order DOMAIN N"));
                };
                self.lookup(domain, line)?;
                let expected = n.parse().map_err(|_| malformed(line, format!("bad order '{n}'")))?;
                self.push_check(line, Check::Order {
                    domain: domain.to_string(),
                    expected,
                });
            }
            "frobenius" => {
                let (g, h, pair) = match args {
                    [g, h] => (*g, *h, None),
                    [g, h, chi, rho] => (*g, *h, Some((chi.to_string(), rho.to_string()))),
                    _ => return Err(malformed(line, "usage: frobenius G H [CHI RHO]")),
                };
                self.require_nested(&[h, g], line)?;
                match &pair {
                    Some((chi, rho)) => {
                        self.character(h, chi, line)?;
                        self.character(g, rho, line)?;
                    }
                    None => {
                        self.require_irreps(g, line)?;
                        self.require_irreps(h, line)?;
                    }
                }
                self.push_check(line, Check::Frobenius {
                    g: g.to_string(),
                    h: h.to_string(),
                    pair,
                });
            }
            "stages" => {
                let (g, h, f, chi) = match args {
                    [g, h, f] => (*g, *h, *f, None),
                    [g, h, f, chi] => (*g, *h, *f, Some(chi.to_string())),
                    _ => return Err(malformed(line, "usage: stages G H F [CHI]")),
                };
                self.require_nested(&[f, h, g], line)?;
                if let Some(chi) = &chi {
                    self.character(f, chi, line)?;
                }
                self.push_check(line, Check::Stages {
                    g: g.to_string(),
                    h: h.to_string(),
                    f: f.to_string(),
                    chi,
                });
            }
            "shadow" => {
                let [g, h] = args else {
                    return Err(malformed(line, "usage: shadow G H"));
                };
                self.require_nested(&[h, g], line)?;
                self.require_irreps(h, line)?;
                self.push_check(line, Check::Shadow {
                    g: g.to_string(),
                    h: h.to_string(),
                });
            }
            "invariant" => {
                let [domain, label] = args else {
                    return Err(malformed(line, "usage: invariant DOMAIN LABEL"));
                };
                self.character(domain, label, line)?;
                self.push_check(line, Check::Invariant {
                    domain: domain.to_string(),
                    label: label.to_string(),
                });
            }
            other => return Err(malformed(line, format!("unknown directive '{other}'"))),
        }
        if tail.is_some() && !matches!(directive, "group" | "subgroup" | "char") {
            return Err(malformed(line, format!("unexpected ':' after {directive}")));
        }
        Ok(())
    }

    fn push_check(&mut self, line: usize, check: Check) {
        self.checks.push((line, check));
    }

    fn lookup(&self, name: &str, line: usize) -> Result<&Domain> {
        self.domains
            .get(name)
            .ok_or_else(|| malformed(line, format!("unknown group or subgroup '{name}'")))
    }

    fn require_irreps(&self, name: &str, line: usize) -> Result<()> {
        match self.lookup(name, line)?.irreps {
            Some(_) => Ok(()),
            None => Err(malformed(line, format!("no irreducible characters loaded for '{name}'"))),
        }
    }

    /// `names` listed from smallest to largest.
    fn require_nested(&self, names: &[&str], line: usize) -> Result<()> {
        for pair in names.windows(2) {
            let small = &self.lookup(pair[0], line)?.sub;
            let big = &self.lookup(pair[1], line)?.sub;
            if !small.is_subgroup_of(big) {
                return Err(malformed(line, format!("'{}' is not a subgroup of '{}'", pair[0], pair[1])));
            }
        }
        Ok(())
    }

    fn character(&self, domain: &str, label: &str, line: usize) -> Result<Character> {
        let d = self.lookup(domain, line)?;
        if label == "1" {
            return Ok(Character::trivial(&d.sub));
        }
        if label == "reg" {
            return Ok(Character::regular(&d.sub));
        }
        if let Some(k) = label.strip_prefix("irr") {
            let k: usize = k.parse().map_err(|_| malformed(line, format!("bad label '{label}'")))?;
            return d
                .irreps
                .as_ref()
                .and_then(|v| v.get(k))
                .cloned()
                .ok_or_else(|| malformed(line, format!("'{domain}' has no irreducible number {k}")));
        }
        self.chars
            .get(&(domain.to_string(), label.to_string()))
            .cloned()
            .ok_or_else(|| malformed(line, format!("no character '{label}' on '{domain}'")))
    }

    /// Runs every check in file order.
    pub fn run(&self) -> SuiteReport {
        let mut warnings = Vec::new();
        if self.checks.is_empty() {
            warnings.push("suite contains no checks".to_string());
        }
        let checks: Vec<CheckReport> = self.checks.iter().map(|(line, c)| self.run_check(*line, c)).collect();
        let failures = checks.iter().filter(|c| !c.passed).count();
        SuiteReport {
            passed: failures == 0,
            checks_run: checks.len(),
            failures,
            warnings,
            checks,
        }
    }

    fn run_check(&self, line: usize, check: &Check) -> CheckReport {
        let (kind, subject, outcome) = match check {
            Check::Order { domain, expected } => (
                "order",
                domain.clone(),
                self.run_order(domain, *expected),
            ),
            Check::Frobenius { g, h, pair } => (
                "frobenius",
                format!("{h} ≤ {g}"),
                self.run_frobenius(g, h, pair.as_ref(), line),
            ),
            Check::Stages { g, h, f, chi } => (
                "stages",
                format!("{f} ≤ {h} ≤ {g}"),
                self.run_stages(g, h, f, chi.as_deref(), line),
            ),
            Check::Shadow { g, h } => ("shadow", format!("{h} ≤ {g}"), self.run_shadow(g, h)),
            Check::Invariant { domain, label } => (
                "invariant",
                format!("{label} on {domain}"),
                self.character(domain, label, line)
                    .and_then(|c| c.invariant_dimension())
                    .map(|d| (true, json!({ "invariant_dimension": d }))),
            ),
        };
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, json!({ "error": e.to_string() })));
        CheckReport {
            line,
            kind,
            subject,
            passed,
            detail,
        }
    }

    fn run_order(&self, domain: &str, expected: usize) -> Result<(bool, Value)> {
        let actual = self.domains[domain].sub.order();
        Ok((actual == expected, json!({ "expected": expected, "actual": actual })))
    }

    fn run_frobenius(&self, g: &str, h: &str, pair: Option<&(String, String)>, line: usize) -> Result<(bool, Value)> {
        let mut pairs: Vec<(String, Character, String, Character)> = Vec::new();
        match pair {
            Some((chi, rho)) => pairs.push((
                chi.clone(),
                self.character(h, chi, line)?,
                rho.clone(),
                self.character(g, rho, line)?,
            )),
            None => {
                let hs = self.domains[h].irreps.as_deref().unwrap_or_default();
                let gs = self.domains[g].irreps.as_deref().unwrap_or_default();
                for (i, chi) in hs.iter().enumerate() {
                    for (j, rho) in gs.iter().enumerate() {
                        pairs.push((format!("irr{i}"), chi.clone(), format!("irr{j}"), rho.clone()));
                    }
                }
            }
        }
        let mut all = true;
        let mut rows = Vec::new();
        for (cl, chi, rl, rho) in &pairs {
            match frobenius_check(chi, rho) {
                Ok(r) => {
                    all &= r.holds();
                    rows.push(json!({ "chi": cl, "rho": rl, "mult_up": r.mult_up, "mult_down": r.mult_down }));
                }
                Err(e) => {
                    all = false;
                    rows.push(json!({ "chi": cl, "rho": rl, "error": e.to_string() }));
                }
            }
        }
        Ok((all, json!({ "pairs": rows })))
    }

    fn run_stages(&self, g: &str, h: &str, f: &str, chi: Option<&str>, line: usize) -> Result<(bool, Value)> {
        let (gs, hs) = (&self.domains[g].sub, &self.domains[h].sub);
        let chars: Vec<(String, Character)> = match chi {
            Some(label) => vec![(label.to_string(), self.character(f, label, line)?)],
            None => match &self.domains[f].irreps {
                Some(irreps) => irreps.iter().enumerate().map(|(i, c)| (format!("irr{i}"), c.clone())).collect(),
                None => vec![("1".to_string(), Character::trivial(&self.domains[f].sub))],
            },
        };
        let mut all = true;
        let mut rows = Vec::new();
        for (label, c) in &chars {
            let out = stages_check(gs, hs, c)?;
            all &= out.holds(STAGES_TOL);
            rows.push(json!({
                "chi": label,
                "stages_difference": out.stages_difference,
                "quasi_regular_difference": out.quasi_regular_difference,
            }));
        }
        Ok((all, json!({ "tolerance": STAGES_TOL, "characters": rows })))
    }

    fn run_shadow(&self, g: &str, h: &str) -> Result<(bool, Value)> {
        let gs = &self.domains[g].sub;
        let hd = &self.domains[h];
        let one = Character::trivial(&hd.sub);
        let mut all = true;
        let mut rows = Vec::new();
        for (i, pi) in hd.irreps.as_deref().unwrap_or_default().iter().enumerate() {
            let fixed = as_multiplicity(pi.inner(&one)?)?;
            if fixed != 0 {
                continue;
            }
            let induced = pi.induce(gs)?;
            let dim = induced.invariant_dimension()?;
            all &= dim == 0;
            rows.push(json!({
                "pi": format!("irr{i}"),
                "degree": pi.degree().re,
                "induced_degree": induced.degree().re,
                "invariant_dimension": dim,
            }));
        }
        Ok((all, json!({ "nontrivial": rows })))
    }
}

fn split_list(tail: Option<&str>, line: usize) -> Result<Vec<(&str, usize)>> {
    let items = split_list_allow_empty(tail, line)?;
    if items.is_empty() {
        return Err(malformed(line, "expected ': gen ; gen ...'"));
    }
    Ok(items)
}

fn split_list_allow_empty(tail: Option<&str>, line: usize) -> Result<Vec<(&str, usize)>> {
    let Some(tail) = tail else {
        return Err(malformed(line, "expected ':' followed by a list"));
    };
    if tail.trim().is_empty() {
        return Ok(Vec::new());
    }
    tail.split(';')
        .enumerate()
        .map(|(i, s)| {
            let s = s.trim();
            if s.is_empty() {
                Err(malformed(line, format!("empty list item {}", i + 1)))
            } else {
                Ok((s, i))
            }
        })
        .collect()
}

fn parse_element(kind: Kind, s: &str) -> std::result::Result<GroupElement, String> {
    match kind {
        Kind::Perm { degree } => Permutation::parse_cycles(s, degree)
            .map(GroupElement::Perm)
            .map_err(|e| e.to_string()),
        Kind::Mat { n, m } => {
            let a = IntMatrix::parse(s).map_err(|e| e.to_string())?;
            if a.dim() != n {
                return Err(format!("expected a {n}×{n} matrix"));
            }
            Ok(GroupElement::Mat(a.reduce(m)))
        }
    }
}

/// Class table of a suite domain, in the order character files must use.
#[derive(Debug, Clone, Serialize)]
pub struct ClassRow {
    pub class: usize,
    pub representative: String,
    pub size: usize,
    pub element_order: usize,
}

impl Suite {
    pub fn class_table(&self, name: &str) -> Option<Vec<ClassRow>> {
        let sub = &self.domains.get(name)?.sub;
        let group = sub.parent();
        Some(
            sub.classes()
                .reps()
                .iter()
                .zip(sub.classes().sizes())
                .enumerate()
                .map(|(class, (&rep, &size))| ClassRow {
                    class,
                    representative: group.element(rep).to_string(),
                    size,
                    element_order: group.element_order(rep),
                })
                .collect(),
        )
    }

    pub fn domain_names(&self) -> Vec<String> {
        let ordered: BTreeMap<_, _> = self.domains.keys().map(|k| (k.clone(), ())).collect();
        ordered.into_keys().collect()
    }
}
