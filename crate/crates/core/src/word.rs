//! Group words over indexed generators `x1, x2, ...`.
//!
//! Words are always stored freely reduced. Bracket syntax is expanded at
//! parse time with `[u,v] = u v u^-1 v^-1` and `[u,v,w] = [[u,v],w]`.

use std::fmt;

use crate::error::{Error, Result};

/// Default bound on the number of letter entries a parsed word may expand to.
pub const DEFAULT_MAX_WORD_LEN: usize = 1_000_000;

/// 1-based generator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId(u32);

impl GeneratorId {
    /// Panics on index 0.
    pub fn new(index: u32) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        GeneratorId(index)
    }

    pub fn index(self) -> u32 {
        self.0
    }

    /// 0-based position, for indexing into per-generator tables.
    pub fn slot(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// One syllable `gen^exp` of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: GeneratorId,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: u32, exp: i64) -> Self {
        Letter {
            gen: GeneratorId::new(gen),
            exp,
        }
    }
}

/// A freely reduced word: no zero exponents, no two adjacent syllables on
/// the same generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(index: u32) -> Self {
        Word {
            letters: vec![Letter::new(index, 1)],
        }
    }

    /// Freely reduces an arbitrary syllable sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Self> {
        free_reduce(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Length in letters `x_i^{±1}`, i.e. the sum of absolute exponents.
    pub fn letter_length(&self) -> u128 {
        self.letters.iter().map(|l| l.exp.unsigned_abs() as u128).sum()
    }

    /// Largest generator index occurring in the word (0 for the identity).
    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|l| l.gen.index()).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exp: -l.exp,
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Self> {
        free_reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(u: &Word, v: &Word) -> Result<Self> {
        let (ui, vi) = (u.inverse(), v.inverse());
        free_reduce(
            u.letters
                .iter()
                .chain(&v.letters)
                .chain(&ui.letters)
                .chain(&vi.letters)
                .copied(),
        )
    }

    /// Integer power; negative exponents power the inverse.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if let [single] = self.letters.as_slice() {
            let exp = single.exp.checked_mul(k).ok_or(Error::ExponentOverflow {
                gen: single.gen.index(),
            })?;
            return free_reduce([Letter { gen: single.gen, exp }]);
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        free_reduce(std::iter::repeat_n(base.letters.iter().copied(), reps).flatten())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

/// Free reduction: cancels `x x^-1`, merges adjacent powers, drops zeros.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Word> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if l.exp == 0 {
            continue;
        }
        match out.last_mut() {
            Some(top) if top.gen == l.gen => {
                top.exp = top
                    .exp
                    .checked_add(l.exp)
                    .ok_or(Error::ExponentOverflow { gen: l.gen.index() })?;
                if top.exp == 0 {
                    out.pop();
                }
            }
            _ => out.push(l),
        }
    }
    Ok(Word { letters: out })
}

/// Prints a word in the same grammar `parse_word` accepts; exponent 1 is
/// omitted and the identity prints as the empty string.
pub fn format_word(w: &Word) -> String {
    let mut s = String::new();
    for (i, l) in w.letters.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&l.gen.to_string());
        if l.exp != 1 {
            s.push('^');
            s.push_str(&l.exp.to_string());
        }
    }
    s
}

/// Parses `text` with generators restricted to `x1..x{rank}`.
pub fn parse_word(text: &str, rank: usize) -> Result<Word> {
    parse_word_with_limit(text, rank, DEFAULT_MAX_WORD_LEN)
}

/// As [`parse_word`], failing with [`Error::ResourceCap`] once bracket or
/// power expansion would produce more than `max_len` syllables.
pub fn parse_word_with_limit(text: &str, rank: usize, max_len: usize) -> Result<Word> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        rank,
        max_len,
    };
    let w = p.word()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    rank: usize,
    max_len: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len > self.max_len {
            return Err(Error::ResourceCap {
                what: "word length",
                needed: len as u128,
                limit: self.max_len as u128,
            });
        }
        Ok(())
    }

    fn word(&mut self) -> Result<Word> {
        let mut acc = Word::identity();
        while let Some(b) = self.peek() {
            if !(b == b'x' || b == b'[' || b == b'(') {
                break;
            }
            let t = self.term()?;
            acc = acc.concat(&t)?;
            self.check_len(acc.len())?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.integer()?;
            if atom.len() > 1 {
                let reps = usize::try_from(k.unsigned_abs()).unwrap_or(usize::MAX);
                self.check_len(atom.len().saturating_mul(reps))?;
            }
            return atom.pow(k);
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'x') => self.generator(),
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let mut acc = self.word()?;
                let mut parts = 1;
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    let next = self.word()?;
                    acc = Word::commutator(&acc, &next)?;
                    self.check_len(acc.len())?;
                    parts += 1;
                }
                if parts < 2 {
                    return Err(self.error("commutator needs at least two entries"));
                }
                self.expect(b']')?;
                Ok(acc)
            }
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", b as char)))
        }
    }

    fn generator(&mut self) -> Result<Word> {
        let start = self.pos;
        self.pos += 1; // 'x'
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits_start == self.pos {
            self.pos = start;
            return Err(self.error("expected generator index after 'x'"));
        }
        let digits = std::str::from_utf8(&self.src[digits_start..self.pos]).expect("ascii digits");
        let index: u64 = digits.parse().unwrap_or(u64::MAX);
        if index == 0 || index > self.rank as u64 {
            return Err(Error::GeneratorOutOfRange { index, rank: self.rank });
        }
        Ok(Word::generator(index as u32))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits_start == self.pos {
            self.pos = start;
            return Err(self.error("expected integer exponent"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("exponent {text} out of range"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[(u32, i64)]) -> Word {
        Word::from_letters(letters.iter().map(|&(g, e)| Letter::new(g, e))).unwrap()
    }

    #[test]
    fn parse_cancels_to_identity() {
        assert!(parse_word("x1 x1^-1", 2).unwrap().is_empty());
        assert!(parse_word("", 2).unwrap().is_empty());
        assert!(parse_word("   ", 2).unwrap().is_empty());
    }

    #[test]
    fn parse_commutator_expands() {
        assert_eq!(
            parse_word("[x1,x2]", 2).unwrap(),
            w(&[(1, 1), (2, 1), (1, -1), (2, -1)])
        );
    }

    #[test]
    fn parse_merges_powers() {
        let parsed = parse_word("x1^2 x2 x2 x1", 2).unwrap();
        assert_eq!(
            parsed.letters(),
            &[Letter::new(1, 2), Letter::new(2, 2), Letter::new(1, 1)]
        );
        // reduce-then-compare against the explicitly listed syllables
        let raw = [(1, 1), (1, 1), (2, 1), (2, 1), (1, 1)];
        assert_eq!(parsed, w(&raw));
    }

    #[test]
    fn left_normed_brackets() {
        let a = parse_word("[x2,x1,x1]", 2).unwrap();
        let b = parse_word("[[x2,x1],x1]", 2).unwrap();
        assert_eq!(a, b);
        let inner = parse_word("[x2,x1]", 2).unwrap();
        assert_eq!(a, Word::commutator(&inner, &Word::generator(1)).unwrap());
    }

    #[test]
    fn powers_of_groups_and_brackets() {
        assert_eq!(
            parse_word("(x1 x2)^2", 2).unwrap(),
            w(&[(1, 1), (2, 1), (1, 1), (2, 1)])
        );
        assert_eq!(parse_word("(x1 x2)^-1", 2).unwrap(), w(&[(2, -1), (1, -1)]));
        assert_eq!(parse_word("[x1,x2]^0", 2).unwrap(), Word::identity());
        assert_eq!(parse_word("x2^-7", 2).unwrap(), w(&[(2, -7)]));
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse_word("x1 x", 2) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_word("[x1]", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("x1 )", 2), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_word("x1^", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("(x1", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("y1", 2), Err(Error::Syntax { pos: 0, .. })));
    }

    #[test]
    fn generator_range_checked() {
        assert!(matches!(
            parse_word("x3", 2),
            Err(Error::GeneratorOutOfRange { index: 3, rank: 2 })
        ));
        assert!(matches!(
            parse_word("x0", 2),
            Err(Error::GeneratorOutOfRange { index: 0, .. })
        ));
    }

    #[test]
    fn free_reduce_examples() {
        assert!(free_reduce([Letter::new(1, 1), Letter::new(1, -1)]).unwrap().is_empty());
        assert_eq!(
            free_reduce([Letter::new(1, 1), Letter::new(1, 2)]).unwrap().letters(),
            &[Letter::new(1, 3)]
        );
        let cascaded = [
            Letter::new(2, 1),
            Letter::new(1, 1),
            Letter::new(1, -1),
            Letter::new(2, 1),
        ];
        assert_eq!(free_reduce(cascaded).unwrap().letters(), &[Letter::new(2, 2)]);
    }

    #[test]
    fn merge_overflow_is_an_error() {
        let r = free_reduce([Letter::new(1, i64::MAX), Letter::new(1, 1)]);
        assert_eq!(r, Err(Error::ExponentOverflow { gen: 1 }));
    }

    #[test]
    fn expansion_respects_limit() {
        let r = parse_word_with_limit("[x1,x2]^100", 2, 50);
        assert!(matches!(r, Err(Error::ResourceCap { .. })));
        assert!(parse_word_with_limit("x1^100000000", 2, 50).is_ok());
    }

    #[test]
    fn printer_omits_unit_exponents() {
        assert_eq!(format_word(&w(&[(1, 2), (2, 1), (1, -1)])), "x1^2 x2 x1^-1");
        assert_eq!(format_word(&Word::identity()), "");
    }
}
