use std::fmt;

use crate::error::{Error, ParseError, Result};

/// Largest matrix dimension accepted by the parser and the group builders.
pub const MAX_DIM: usize = 6;
/// Largest modulus for [`ModMatrix`].
pub const MAX_MODULUS: u32 = 1 << 16;

/// A square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<i64>) -> Result<IntMatrix> {
        if n == 0 || n > MAX_DIM || entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "need {n}×{n} entries with 1 ≤ n ≤ {MAX_DIM}, got {}",
                entries.len()
            )));
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        IntMatrix { n, entries }
    }

    /// `I + c·E_{ij}` (0-based indices).
    pub fn elementary(n: usize, i: usize, j: usize, c: i64) -> IntMatrix {
        let mut m = IntMatrix::identity(n);
        m.entries[i * n + j] += c;
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    /// Product, or `None` on overflow.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        let n = self.n;
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc: i64 = 0;
                for k in 0..n {
                    acc = acc.checked_add(self.get(i, k).checked_mul(rhs.get(k, j))?)?;
                }
                entries[i * n + j] = acc;
            }
        }
        Some(IntMatrix { n, entries })
    }

    /// Determinant by fraction-free (Bareiss) elimination, `None` on overflow.
    pub fn determinant(&self) -> Option<i128> {
        let n = self.n;
        let mut a: Vec<i128> = self.entries.iter().map(|&v| i128::from(v)).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k * n + k] == 0 {
                let Some(swap) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                    return Some(0);
                };
                for c in 0..n {
                    a.swap(k * n + c, swap * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i * n + j]
                        .checked_mul(a[k * n + k])?
                        .checked_sub(a[i * n + k].checked_mul(a[k * n + j])?)?;
                    a[i * n + j] = num / prev;
                }
            }
            prev = a[k * n + k];
        }
        Some(sign * a[n * n - 1])
    }

    /// Entrywise reduction modulo `m`.
    pub fn reduce(&self, m: u32) -> ModMatrix {
        ModMatrix {
            n: self.n,
            modulus: m,
            entries: self
                .entries
                .iter()
                .map(|&v| v.rem_euclid(i64::from(m)) as u32)
                .collect(),
        }
    }

    /// Parses rows separated by `/`, entries by whitespace or commas:
    /// `1 6 / 0 1`.
    pub fn parse(src: &str) -> Result<IntMatrix, ParseError> {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        let mut offset = 0;
        for row_src in src.split('/') {
            let mut row = Vec::new();
            let mut pos = offset;
            for token in row_src.split(|c: char| c.is_whitespace() || c == ',') {
                if !token.is_empty() {
                    let at = pos + row_src[pos - offset..].find(token).unwrap_or(0);
                    let v = token
                        .parse::<i64>()
                        .map_err(|_| ParseError::new(at, format!("bad matrix entry '{token}'")))?;
                    row.push(v);
                    pos = at + token.len();
                }
                if row.len() > MAX_DIM {
                    return Err(ParseError::new(pos, format!("rows longer than {MAX_DIM}")));
                }
            }
            rows.push(row);
            offset += row_src.len() + 1;
            if rows.len() > MAX_DIM {
                return Err(ParseError::new(offset.min(src.len()), format!("more than {MAX_DIM} rows")));
            }
        }
        let n = rows.len();
        if let Some((i, _)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(ParseError::new(
                0,
                format!("matrix is not square: row {} has {} entries, expected {n}", i + 1, rows[i].len()),
            ));
        }
        Ok(IntMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                f.write_str(" / ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

/// A square matrix over `Z/m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModMatrix {
    n: usize,
    modulus: u32,
    entries: Vec<u32>,
}

impl ModMatrix {
    pub fn identity(n: usize, modulus: u32) -> ModMatrix {
        IntMatrix::identity(n).reduce(modulus)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, rhs: &ModMatrix) -> ModMatrix {
        debug_assert_eq!((self.n, self.modulus), (rhs.n, rhs.modulus));
        let n = self.n;
        let m = u64::from(self.modulus);
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let acc: u64 = (0..n).map(|k| u64::from(self.get(i, k)) * u64::from(rhs.get(k, j))).sum();
                entries[i * n + j] = (acc % m) as u32;
            }
        }
        ModMatrix {
            n,
            modulus: self.modulus,
            entries,
        }
    }

    pub fn lift(&self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|&v| i64::from(v)).collect(),
        }
    }

    /// Determinant in `Z/m`.
    pub fn determinant(&self) -> u32 {
        let det = self.lift().determinant().expect("lifted entries below 2^16 fit in i128");
        det.rem_euclid(i128::from(self.modulus)) as u32
    }

    pub fn is_identity(&self) -> bool {
        *self == ModMatrix::identity(self.n, self.modulus)
    }
}

impl fmt::Display for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.lift(), self.modulus)
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smallest `m ≥ 2` for which reduction mod `m` does not send `a` to the
/// identity. `a` must have determinant 1 and differ from `I`.
///
/// `a ≡ I (mod m)` exactly when `m` divides every entry of `a − I`, so the
/// answer is the least `m ≥ 2` not dividing their gcd.
pub fn separation_witness(a: &IntMatrix) -> Result<u64> {
    match a.determinant() {
        Some(1) => {}
        Some(d) => return Err(Error::InvalidArgument(format!("determinant is {d}, not 1"))),
        None => return Err(Error::InvalidArgument("determinant overflows".into())),
    }
    if a.is_identity() {
        return Err(Error::InvalidArgument("the identity matrix is not separated from itself".into()));
    }
    let n = a.dim();
    let mut g = 0u128;
    for i in 0..n {
        for j in 0..n {
            let d = i128::from(a.get(i, j)) - i128::from(i == j);
            g = gcd(g, d.unsigned_abs());
        }
    }
    Ok((2u64..).find(|&m| g % u128::from(m) != 0).expect("some modulus does not divide g"))
}
