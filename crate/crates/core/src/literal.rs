//! Text literals for words and elements of `Z ⋉ F∞`.
//!
//! ```text
//! word     := 'e' | factor (ws? factor)*
//! factor   := 'e' | 'x' int ('^' int)?
//! element  := '(' int ';' word ')'
//! item     := element | 't' ('^' int)? | word
//! list     := item (',' item)*
//! ```
//!
//! Exponents other than `±1` expand into runs of letters (`x2^3` is
//! `x2 x2 x2`, `x2^0` is `e`).

use crate::error::ParseError;
use crate::semidirect::GElement;
use crate::word::{Letter, Word};

/// Largest accepted `|exponent|` in a single factor.
pub const MAX_EXPONENT: u32 = 4096;
/// Largest number of raw letters a literal may expand to.
pub const MAX_LITERAL_LETTERS: usize = 1 << 16;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.src.len()
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(c) => ParseError::new(self.pos, format!("expected {wanted}, found '{c}'")),
            None => ParseError::new(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        if matches!(self.peek(), Some('-' | '+')) {
            self.bump();
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == digits_start {
            return Err(self.unexpected("an integer"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::new(start, "integer out of range"))
    }
}

fn parse_factor(cur: &mut Cursor<'_>, out: &mut Vec<Letter>) -> Result<(), ParseError> {
    let start = cur.pos;
    match cur.peek() {
        Some('e') => {
            cur.bump();
            Ok(())
        }
        Some('x') => {
            cur.bump();
            let index = cur.int()?;
            let exponent = if cur.eat('^') { cur.int()? } else { 1 };
            if exponent.unsigned_abs() > u64::from(MAX_EXPONENT) {
                return Err(ParseError::new(start, format!("exponent {exponent} exceeds ±{MAX_EXPONENT}")));
            }
            let count = exponent.unsigned_abs() as usize;
            if out.len() + count > MAX_LITERAL_LETTERS {
                return Err(ParseError::new(start, "word literal too long"));
            }
            let letter = if exponent > 0 {
                Letter::gen(index)
            } else {
                Letter::gen_inv(index)
            };
            out.extend(std::iter::repeat(letter).take(count));
            Ok(())
        }
        _ => Err(cur.unexpected("a generator 'x<index>' or 'e'")),
    }
}

/// Parses factors until end of input or one of `stops`.
fn parse_word_until(cur: &mut Cursor<'_>, stops: &[char]) -> Result<Word, ParseError> {
    let mut raw = Vec::new();
    cur.skip_ws();
    let mut factors = 0usize;
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(c) if stops.contains(&c) => break,
            _ => {
                parse_factor(cur, &mut raw)?;
                factors += 1;
            }
        }
    }
    if factors == 0 {
        return Err(cur.unexpected("a word (use 'e' for the identity)"));
    }
    Ok(Word::reduce(raw))
}

fn parse_element_at(cur: &mut Cursor<'_>) -> Result<GElement, ParseError> {
    cur.skip_ws();
    cur.expect('(')?;
    cur.skip_ws();
    let shift = cur.int()?;
    cur.skip_ws();
    cur.expect(';')?;
    let word = parse_word_until(cur, &[')'])?;
    cur.expect(')')?;
    Ok(GElement::new(shift, word))
}

fn parse_item(cur: &mut Cursor<'_>) -> Result<GElement, ParseError> {
    cur.skip_ws();
    match cur.peek() {
        Some('(') => parse_element_at(cur),
        Some('t') => {
            cur.bump();
            let n = if cur.eat('^') { cur.int()? } else { 1 };
            Ok(GElement::translation(n))
        }
        _ => Ok(GElement::from_word(parse_word_until(cur, &[','])?)),
    }
}

fn finish(cur: &mut Cursor<'_>) -> Result<(), ParseError> {
    cur.skip_ws();
    if cur.at_end() {
        Ok(())
    } else {
        Err(cur.unexpected("end of input"))
    }
}

/// Parses a word literal such as `x3 x-1^-1 x3` or `e`.
pub fn parse_word(src: &str) -> Result<Word, ParseError> {
    let mut cur = Cursor::new(src);
    let word = parse_word_until(&mut cur, &[])?;
    finish(&mut cur)?;
    Ok(word)
}

/// Parses an element literal `(n; <word>)`.
pub fn parse_element(src: &str) -> Result<GElement, ParseError> {
    let mut cur = Cursor::new(src);
    let g = parse_element_at(&mut cur)?;
    finish(&mut cur)?;
    Ok(g)
}

/// Parses a comma-separated list of elements, where `t^k` abbreviates
/// `(k; e)` and a bare word `w` abbreviates `(0; w)`.
pub fn parse_element_list(src: &str) -> Result<Vec<GElement>, ParseError> {
    let mut cur = Cursor::new(src);
    let mut items = Vec::new();
    cur.skip_ws();
    if cur.at_end() {
        return Err(ParseError::new(0, "empty list"));
    }
    loop {
        items.push(parse_item(&mut cur)?);
        cur.skip_ws();
        if !cur.eat(',') {
            break;
        }
    }
    finish(&mut cur)?;
    Ok(items)
}

/// Parses a comma-separated list of words.
pub fn parse_word_list(src: &str) -> Result<Vec<Word>, ParseError> {
    let mut cur = Cursor::new(src);
    let mut words = Vec::new();
    cur.skip_ws();
    if cur.at_end() {
        return Err(ParseError::new(0, "empty list"));
    }
    loop {
        words.push(parse_word_until(&mut cur, &[','])?);
        if !cur.eat(',') {
            break;
        }
    }
    finish(&mut cur)?;
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(parse_word("e").unwrap(), Word::identity());
        assert_eq!(parse_word("  x1 x1^-1 ").unwrap(), Word::identity());
        assert_eq!(parse_word("x2^3").unwrap().len(), 3);
        assert_eq!(parse_word("x2^-2").unwrap(), parse_word("x2^-1 x2^-1").unwrap());
        assert_eq!(parse_word("x2^0").unwrap(), Word::identity());
        assert_eq!(parse_word("x1x2").unwrap(), parse_word("x1 x2").unwrap());
        assert_eq!(parse_word("x-3").unwrap(), Word::gen(-3));
    }

    #[test]
    fn word_errors_carry_position() {
        let err = parse_word("x1 y2").unwrap_err();
        assert_eq!(err.position, 3);
        assert_eq!(parse_word("").unwrap_err().position, 0);
        assert_eq!(parse_word("x").unwrap_err().position, 1);
        assert!(parse_word("x99999999999999999999").is_err());
        assert!(parse_word("x1^5000").is_err());
    }

    #[test]
    fn elements() {
        let g = parse_element("(2; x1 x3)").unwrap();
        assert_eq!(g.shift, 2);
        assert_eq!(g.word, parse_word("x1 x3").unwrap());
        assert_eq!(parse_element("( -1 ;e )").unwrap(), GElement::translation(-1));
        assert!(parse_element("(1 x0)").is_err());
        assert!(parse_element("(1; x0) junk").is_err());
        assert!(parse_element("(1;)").is_err());
    }

    #[test]
    fn lists() {
        let items = parse_element_list("t, x0, x-3^-1, (2; x5), t^-2").unwrap();
        assert_eq!(items.len(), 5);
        assert_eq!(items[0], GElement::translation(1));
        assert_eq!(items[2], GElement::from_word(Word::gen_inv(-3)));
        assert_eq!(items[4], GElement::translation(-2));
        assert!(parse_element_list("").is_err());
        assert!(parse_element_list("x0,").is_err());

        let words = parse_word_list("x5 x3 x5^-1, x1").unwrap();
        assert_eq!(words.len(), 2);
        assert!(parse_word_list(" ").is_err());
    }
}
