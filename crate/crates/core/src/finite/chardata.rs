//! Character data files: one character per line, one value per conjugacy
//! class in the domain's class order, each value written `re,im` (a bare
//! `re` means `im = 0`). `#` starts a comment.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::character::Character;
use super::subgroup::Subgroup;

/// Orthonormality tolerance for curated irreducible characters.
pub const ORTHONORMALITY_TOL: f64 = 1e-9;

fn parse_value(token: &str) -> Option<Complex64> {
    let (re, im) = match token.split_once(',') {
        Some((re, im)) => (re.parse::<f64>().ok()?, im.parse::<f64>().ok()?),
        None => (token.parse::<f64>().ok()?, 0.0),
    };
    (re.is_finite() && im.is_finite()).then(|| Complex64::new(re, im))
}

/// Parses class-value rows without interpreting them. Returns
/// `(line number, values)` for every non-blank line; `first_line` is the
/// number of the first line of `text`.
pub fn parse_rows(text: &str, first_line: usize) -> Result<Vec<(usize, Vec<Complex64>)>> {
    let mut rows = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = first_line + k;
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let values = tokens
            .iter()
            .map(|t| {
                parse_value(t).ok_or_else(|| Error::Malformed {
                    line,
                    message: format!("bad class value '{t}' (expected re,im)"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push((line, values));
    }
    Ok(rows)
}

/// Parses every row as a character of `domain`.
pub fn parse_characters(domain: &Arc<Subgroup>, text: &str) -> Result<Vec<(usize, Character)>> {
    parse_rows(text, 1)?
        .into_iter()
        .map(|(line, values)| {
            Character::new(domain, values)
                .map(|c| (line, c))
                .map_err(|e| Error::Malformed {
                    line,
                    message: e.to_string(),
                })
        })
        .collect()
}

/// Loads a complete list of irreducible characters and validates it:
/// one character per class, and `⟨χ_i, χ_j⟩ = δ_ij`.
pub fn load_irreducibles(domain: &Arc<Subgroup>, text: &str) -> Result<Vec<Character>> {
    let chars = parse_characters(domain, text)?;
    let classes = domain.classes().len();
    if chars.len() != classes {
        return Err(Error::Malformed {
            line: chars.last().map(|(l, _)| *l).unwrap_or(0),
            message: format!("{} characters given, the group has {classes} classes", chars.len()),
        });
    }
    for (i, (line, a)) in chars.iter().enumerate() {
        for (j, (_, b)) in chars.iter().enumerate().take(i + 1) {
            let expect = if i == j { 1.0 } else { 0.0 };
            let got = a.inner(b)?;
            if (got - expect).norm() > ORTHONORMALITY_TOL {
                return Err(Error::Malformed {
                    line: *line,
                    message: format!(
                        "⟨χ{i}, χ{j}⟩ = {:.6}{:+.6}i, expected {expect}",
                        got.re, got.im
                    ),
                });
            }
        }
    }
    Ok(chars.into_iter().map(|(_, c)| c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::group::{FiniteGroup, DEFAULT_ORDER_CAP};
    use crate::finite::perm::Permutation;

    fn s3() -> Arc<Subgroup> {
        let gens = ["(1 2)", "(1 2 3)"]
            .iter()
            .map(|s| Permutation::parse_cycles(s, 3).unwrap())
            .collect();
        let g = Arc::new(FiniteGroup::from_permutations(gens, DEFAULT_ORDER_CAP).unwrap());
        Arc::new(Subgroup::whole(&g))
    }

    /// Irreducibles of S3 written in the BFS class order for generators
    /// (1 2), (1 2 3): classes are e, (1 2)-type, (1 2 3)-type.
    const S3_IRREPS: &str = "\
# trivial, sign, standard
1,0 1,0 1,0
1,0 -1,0 1,0
2 0 -1
";

    #[test]
    fn class_order_for_s3() {
        let g = s3();
        let group = g.parent();
        let orders: Vec<usize> = g.classes().reps().iter().map(|&x| group.element_order(x)).collect();
        assert_eq!(orders, vec![1, 2, 3]);
    }

    #[test]
    fn loads_and_validates() {
        let g = s3();
        let irreps = load_irreducibles(&g, S3_IRREPS).unwrap();
        assert_eq!(irreps.len(), 3);
        assert_eq!(irreps[2].degree(), Complex64::new(2.0, 0.0));
    }

    #[test]
    fn rejects_bad_data() {
        let g = s3();
        let err = load_irreducibles(&g, "1 1 1\n1 -1 1\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 2, .. }), "{err}");
        let err = load_irreducibles(&g, "1 1 1\n1 -1 1\n2 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 3, .. }), "{err}");
        let err = parse_characters(&g, "1 1\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 1, .. }), "{err}");
        let err = parse_characters(&g, "\n1 1 nan\n").unwrap_err();
        assert!(matches!(err, Error::Malformed { line: 2, .. }), "{err}");
        assert!(parse_characters(&g, "1,0,0 1 1").is_err());
    }
}
