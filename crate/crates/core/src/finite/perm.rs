use std::fmt;

use crate::error::ParseError;

/// A permutation of `{0, …, degree − 1}`, stored as its image list.
///
/// Products compose right to left: `(a * b)(x) = a(b(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

/// Largest degree accepted by the cycle-notation parser.
pub const MAX_DEGREE: usize = 1 << 16;

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Fails unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Option<Permutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: rhs.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &j)| *i as u32 == j).count()
    }

    /// Parses cycle notation on the points `1..=degree`, e.g. `(1 2)(3 4 5)`
    /// or `()` for the identity. Points may also be separated by commas.
    pub fn parse_cycles(src: &str, degree: usize) -> Result<Permutation, ParseError> {
        if degree > MAX_DEGREE {
            return Err(ParseError::new(0, format!("degree {degree} exceeds {MAX_DEGREE}")));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let bytes = src.as_bytes();
        let mut pos = 0;
        let mut any = false;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && (bytes[*pos].is_ascii_whitespace() || bytes[*pos] == b',') {
                *pos += 1;
            }
        };
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(ParseError::new(pos, "expected '('"));
            }
            any = true;
            pos += 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                skip_ws(&mut pos);
                if pos == bytes.len() {
                    return Err(ParseError::new(pos, "unterminated cycle"));
                }
                if bytes[pos] == b')' {
                    pos += 1;
                    break;
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(ParseError::new(pos, "expected a point"));
                }
                let point: usize = src[start..pos]
                    .parse()
                    .map_err(|_| ParseError::new(start, "point out of range"))?;
                if point == 0 || point > degree {
                    return Err(ParseError::new(start, format!("point {point} outside 1..={degree}")));
                }
                if used[point - 1] {
                    return Err(ParseError::new(start, format!("point {point} appears twice")));
                }
                used[point - 1] = true;
                cycle.push(point - 1);
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        if !any {
            return Err(ParseError::new(0, "expected cycle notation, e.g. (1 2) or ()"));
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            write!(f, "({}", start + 1)?;
            seen[start] = true;
            let mut p = self.images[start] as usize;
            while p != start {
                write!(f, " {}", p + 1)?;
                seen[p] = true;
                p = self.images[p] as usize;
            }
            f.write_str(")")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}
