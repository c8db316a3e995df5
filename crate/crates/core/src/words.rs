//! Group words over `x = x1, y = x2, z3, ..., zn`, the word parser, evaluation
//! into Magnus matrices, and the homomorphism `tau` onto `S3`.
//!
//! Commutators follow `[u, v] = u^-1 v^-1 u v`; longer brackets are
//! left-normed, `[u1, u2, u3] = [[u1, u2], u3]`.

use std::fmt;

use thiserror::Error;

use crate::laurent::LaurentRing;
use crate::magnus::MagnusMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("parse error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("generator {index} exceeds rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
}

/// A generator letter; `generator` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        assert!(generator >= 1, "generators are 1-based");
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// Letter names used when printing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Alphabet {
    /// `x, y, z3, z4, ...`
    #[default]
    Free,
    /// `a, b, z3, z4, ...` for words over the generators of `H`.
    Subgroup,
}

impl Alphabet {
    pub fn name(self, generator: usize) -> String {
        match (self, generator) {
            (Alphabet::Free, 1) => "x".into(),
            (Alphabet::Free, 2) => "y".into(),
            (Alphabet::Subgroup, 1) => "a".into(),
            (Alphabet::Subgroup, 2) => "b".into(),
            (_, i) => format!("z{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Word(vec![Letter::new(i, false)])
    }

    /// Keeps the letters as given; see [`Word::reduced`].
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.generator).max().unwrap_or(0)
    }

    /// Free reduction: cancels adjacent `g g^-1` pairs to a fixpoint.
    pub fn reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters).reduced()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.0);
        }
        Word(letters).reduced()
    }

    /// `[u, v] = u^-1 v^-1 u v`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.inverse().mul(&v.inverse()).mul(u).mul(v)
    }

    /// `[[...[u1, u2], ...], uk]`.
    pub fn left_normed(parts: &[Word]) -> Word {
        let mut it = parts.iter();
        let first = it.next().cloned().unwrap_or_default();
        it.fold(first, |acc, w| Word::commutator(&acc, w))
    }

    /// Replaces generator `i` by `images[i - 1]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut letters = Vec::new();
        for l in &self.0 {
            let img = &images[l.generator - 1];
            if l.inverse {
                letters.extend(img.inverse().0);
            } else {
                letters.extend_from_slice(&img.0);
            }
        }
        Word(letters).reduced()
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), WordError> {
        match self.max_generator() {
            g if g > rank => Err(WordError::IndexOutOfRange { index: g, rank }),
            _ => Ok(()),
        }
    }

    /// Minimal text form with powers collapsed, e.g. `x^2 y^-1 x`; the empty
    /// word prints as `1`.
    pub fn render(&self, alphabet: Alphabet) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            let e = if l.inverse { -(run as i64) } else { run as i64 };
            let name = alphabet.name(l.generator);
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            i += run;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Alphabet::Free))
    }
}

/// Parser settings: the rank bounds generator indices; with `aliases` on,
/// `a` and `b` expand to `x [y,x]` and `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    pub rank: usize,
    pub aliases: bool,
}

impl ParseOptions {
    pub fn new(rank: usize) -> Self {
        ParseOptions {
            rank,
            aliases: false,
        }
    }

    pub fn with_aliases(rank: usize) -> Self {
        ParseOptions {
            rank,
            aliases: true,
        }
    }
}

/// Parses
///
/// ```text
/// word := term*
/// term := atom ['^' int]
/// atom := 'x' | 'y' | 'z' uint | '1' | '[' word (',' word)+ ']' | '(' word ')'
/// ```
///
/// and returns the freely reduced word.
pub fn parse(text: &str, options: ParseOptions) -> Result<Word, WordError> {
    let mut p = WordParser {
        src: text.as_bytes(),
        pos: 0,
        options,
    };
    let w = p.word()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return p.err(format!("unexpected `{}`", p.src[p.pos] as char));
    }
    Ok(w)
}

struct WordParser<'a> {
    src: &'a [u8],
    pos: usize,
    options: ParseOptions,
}

impl WordParser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, WordError> {
        Err(WordError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn uint(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn word(&mut self) -> Result<Word, WordError> {
        let mut w = Word::empty();
        while let Some(c) = self.peek() {
            if matches!(c, b']' | b')' | b',') {
                break;
            }
            let t = self.term()?;
            w = w.mul(&t);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word, WordError> {
        let atom = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(atom);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let Some(e) = self.uint().and_then(|e| i64::try_from(e).ok()) else {
            return self.err("expected an integer exponent");
        };
        Ok(atom.pow(if negative { -e } else { e }))
    }

    fn generator(&self, index: usize) -> Result<Word, WordError> {
        if index > self.options.rank {
            return Err(WordError::IndexOutOfRange {
                index,
                rank: self.options.rank,
            });
        }
        Ok(Word::generator(index))
    }

    fn atom(&mut self) -> Result<Word, WordError> {
        let Some(c) = self.peek() else {
            return self.err("unexpected end of input");
        };
        let start = self.pos;
        self.pos += 1;
        match c {
            b'x' => self.generator(1),
            b'y' => self.generator(2),
            b'1' => Ok(Word::empty()),
            b'z' => match self.uint() {
                Some(i) if i >= 1 => self.generator(i as usize),
                _ => {
                    self.pos = start + 1;
                    self.err("expected a generator index after `z`")
                }
            },
            b'a' | b'b' if self.options.aliases => {
                let y = self.generator(2)?;
                if c == b'b' {
                    return Ok(y);
                }
                let x = Word::generator(1);
                Ok(x.mul(&Word::commutator(&y, &x)))
            }
            b'(' => {
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            b'[' => {
                let mut parts = vec![self.word()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    parts.push(self.word()?);
                }
                if parts.len() < 2 {
                    return self.err("a commutator needs at least two entries");
                }
                self.expect(b']')?;
                Ok(Word::left_normed(&parts))
            }
            _ => {
                self.pos = start;
                self.err(format!("unexpected `{}`", c as char))
            }
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), WordError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }
}

/// The Magnus image of `w` in the ring of the given rank.
pub fn evaluate(w: &Word, ring: LaurentRing) -> Result<MagnusMatrix, WordError> {
    w.check_rank(ring.rank())?;
    let mut m = MagnusMatrix::identity(ring);
    for l in w.letters() {
        m.mul_generator(l.generator, l.inverse);
    }
    Ok(m)
}

/// A permutation of `{1, 2, 3}` in image notation; products apply the left
/// factor first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([u8; 3]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2]);

    /// The transposition `(i j)`, 1-based.
    pub fn transposition(i: usize, j: usize) -> Self {
        let mut images = [0, 1, 2];
        images.swap(i - 1, j - 1);
        Permutation(images)
    }

    /// Images of `1, 2, 3`.
    pub fn images(&self) -> [usize; 3] {
        self.0.map(|i| i as usize + 1)
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.map(|i| other.0[i as usize]))
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = [0u8; 3];
        for (i, &img) in self.0.iter().enumerate() {
            out[img as usize] = i as u8;
        }
        Permutation(out)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 3];
        let mut wrote = false;
        for start in 0..3 {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.0[i] as usize;
            }
            write!(f, "({})", cycle.join(" "))?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// `x -> (1 2)`, `y -> (2 3)`, `z_i -> 1`.
pub fn tau(w: &Word) -> Permutation {
    w.letters().iter().fold(Permutation::IDENTITY, |acc, l| {
        let g = match l.generator {
            1 => Permutation::transposition(1, 2),
            2 => Permutation::transposition(2, 3),
            _ => Permutation::IDENTITY,
        };
        acc.then(&if l.inverse { g.inverse() } else { g })
    })
}

/// True iff `tau(w)` lies outside the subgroup of `S3` generated by the
/// images of `generators`.
pub fn separate_by_tau(w: &Word, generators: &[Word]) -> bool {
    let gens: Vec<Permutation> = generators.iter().map(tau).collect();
    let mut closure = vec![Permutation::IDENTITY];
    let mut frontier = vec![Permutation::IDENTITY];
    while let Some(p) = frontier.pop() {
        for g in &gens {
            let q = p.then(g);
            if !closure.contains(&q) {
                closure.push(q);
                frontier.push(q);
            }
        }
    }
    !closure.contains(&tau(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        parse(text, ParseOptions::with_aliases(4)).unwrap()
    }

    fn l(g: usize, inv: bool) -> Letter {
        Letter::new(g, inv)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            w("x [y,x]").letters(),
            &[l(1, false), l(2, true), l(1, true), l(2, false), l(1, false)]
        );
        assert!(w("").is_empty());
        assert_eq!(w("x^-2").letters(), &[l(1, true), l(1, true)]);
        assert_eq!(w("x x^-1 y"), w("y"));
        assert_eq!(w("(x y)^2"), w("x y x y"));
        assert_eq!(w("(x y)^-1"), w("y^-1 x^-1"));
        assert_eq!(w("[x,y,z3]"), w("[[x,y],z3]"));
        assert_eq!(w("a"), w("x [y,x]"));
        assert_eq!(w("b"), w("y"));
        assert_eq!(w("1"), Word::empty());
        assert_eq!(w("xy"), w("x y"));
    }

    #[test]
    fn parse_errors() {
        let opts = ParseOptions::new(2);
        assert_eq!(
            parse("z3", opts),
            Err(WordError::IndexOutOfRange { index: 3, rank: 2 })
        );
        assert!(matches!(parse("x ? y", opts), Err(WordError::Syntax { pos: 2, .. })));
        assert!(matches!(parse("[x,y", opts), Err(WordError::Syntax { .. })));
        assert!(matches!(parse("[x]", opts), Err(WordError::Syntax { .. })));
        assert!(matches!(parse("x^", opts), Err(WordError::Syntax { .. })));
        assert!(matches!(parse("a", opts), Err(WordError::Syntax { pos: 0, .. })));
        assert!(matches!(parse("x)", opts), Err(WordError::Syntax { pos: 1, .. })));
    }

    #[test]
    fn render_round_trips() {
        for text in ["x^2 y^-1 x", "1", "z3^-4 x y z4", "y^-1 x^-1 y x"] {
            assert_eq!(w(text).to_string(), text);
            assert_eq!(w(&w(text).to_string()), w(text));
        }
        assert_eq!(w("x y^-1").render(Alphabet::Subgroup), "a b^-1");
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&w("x")), Permutation::transposition(1, 2));
        assert_eq!(tau(&w("a")), Permutation::transposition(2, 3));
        assert_eq!(tau(&w("b")), Permutation::transposition(2, 3));
        assert_eq!(tau(&w("z3^5")), Permutation::IDENTITY);
        assert_eq!(tau(&Word::empty()), Permutation::IDENTITY);
        assert_eq!(tau(&w("x")).to_string(), "(1 2)");
        assert_eq!(Permutation::IDENTITY.to_string(), "()");
    }

    #[test]
    fn permutation_composition_applies_left_first() {
        let a = Permutation::transposition(1, 2);
        let b = Permutation::transposition(2, 3);
        // 1 -(12)-> 2 -(23)-> 3
        assert_eq!(a.then(&b).images()[0], 3);
        assert_eq!(a.then(&b).to_string(), "(1 3 2)");
        assert_eq!(a.then(&b).then(&a.then(&b).inverse()), Permutation::IDENTITY);
    }

    #[test]
    fn separation_examples() {
        let h = [w("a"), w("b")];
        assert!(separate_by_tau(&w("x"), &h));
        assert!(!separate_by_tau(&w("a"), &h));
        assert!(!separate_by_tau(&w("x^2"), &h));
    }

    #[test]
    fn evaluate_examples() {
        let ring = LaurentRing::new(2);
        let a = evaluate(&w("x [y,x]"), ring).unwrap();
        assert_eq!(a.to_string(), r#"c=[1,0], gamma=["2 - s2^-1", "s2^-1 - s1*s2^-1"]"#);
        assert!(evaluate(&Word::empty(), ring).unwrap().is_identity());
        assert!(evaluate(&w("[[x,y],[x^2,y]]"), ring).unwrap().is_identity());
        assert!(evaluate(&w("z3"), ring).is_err());
    }

    #[test]
    fn evaluate_matches_generator_products() {
        let ring = LaurentRing::new(3);
        let g = |i| MagnusMatrix::generator(ring, i).unwrap();
        let expect = &(&(&g(1) * &g(3).inverse()) * &g(2)) * &g(2);
        assert_eq!(evaluate(&w("x z3^-1 y^2"), ring).unwrap(), expect);
    }
}
