//! Finite presentations and their text format.

use crate::error::Error;
use crate::fpres::word::{Letter, Word};
use crate::Result;
use std::collections::HashSet;
use std::fmt;

/// A finitely presented group: a number of generators and a list of
/// relators, stored freely and cyclically reduced with duplicates (and
/// inverse/rotated duplicates) removed.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    n_gens: usize,
    relators: Vec<Word>,
    names: Option<Vec<String>>,
}

impl Presentation {
    pub fn new(n_gens: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(g) = r.max_gen() {
                if g >= n_gens {
                    return Err(Error::GeneratorOutOfRange { index: g, n_gens });
                }
            }
        }
        let mut seen: HashSet<Vec<Letter>> = HashSet::new();
        let mut cleaned = Vec::new();
        for r in relators {
            let reduced = r.cyclically_reduced();
            if reduced.is_empty() {
                continue;
            }
            if seen.insert(reduced.cyclic_canonical()) {
                cleaned.push(reduced);
            }
        }
        Ok(Presentation {
            n_gens,
            relators: cleaned,
            names: None,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n_gens {
            return Err(Error::Parse(format!(
                "expected {} generator names, got {}",
                self.n_gens,
                names.len()
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn total_relator_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    pub fn gen_name(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => default_name(i, self.n_gens),
        }
    }

    pub fn gen_names(&self) -> Vec<String> {
        (0..self.n_gens).map(|i| self.gen_name(i)).collect()
    }

    /// Emit a word in the presentation's generator names.
    pub fn format_word(&self, w: &Word) -> String {
        format_word(w, &self.gen_names())
    }

    /// Parse a word over the presentation's generator names.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word(text, &self.gen_names())
    }
}

fn default_name(i: usize, n_gens: usize) -> String {
    if n_gens <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

/// Emit a word as text: runs of one generator become `name^k`, factors are
/// joined with `*`, and the empty word is `1`.
pub fn format_word(w: &Word, names: &[String]) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1usize;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        let e: i64 = if l.inverse { -(run as i64) } else { run as i64 };
        let name = &names[l.gen];
        if e == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{e}"));
        }
        i += run;
    }
    parts.join("*")
}

/// Parse a word such as `x^3`, `(x*y)^2` or `z*y^-1*z^-1*x^-1`.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word> {
    let mut parser = WordParser {
        input: text.as_bytes(),
        pos: 0,
        names,
    };
    parser.skip_ws();
    if parser.eof() {
        return Ok(Word::identity());
    }
    let w = parser.word()?;
    parser.skip_ws();
    if !parser.eof() {
        return Err(Error::Parse(format!(
            "unexpected trailing input at byte {} of '{text}'",
            parser.pos
        )));
    }
    Ok(w)
}

struct WordParser<'a> {
    input: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl WordParser<'_> {
    fn eof(&self) -> bool {
        self.pos >= self.input.len()
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut out = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                let f = self.factor()?;
                out = out.concat(&f);
            } else {
                return Ok(out);
            }
        }
    }

    fn factor(&mut self) -> Result<Word> {
        self.skip_ws();
        let atom = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(Error::Parse("expected ')'".into()));
                }
                self.pos += 1;
                inner
            }
            Some(b'1') => {
                self.pos += 1;
                Word::identity()
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                let gen = self
                    .names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| Error::Parse(format!("unknown generator '{name}'")))?;
                Word::gen(gen)
            }
            other => {
                return Err(Error::Parse(format!("unexpected input: {other:?}")));
            }
        };
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let mut sign = 1i64;
            if self.peek() == Some(b'-') {
                sign = -1;
                self.pos += 1;
            }
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(Error::Parse("expected exponent after '^'".into()));
            }
            let e: i64 = std::str::from_utf8(&self.input[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| Error::Parse("bad exponent".into()))?;
            Ok(atom.pow(sign * e))
        } else {
            Ok(atom)
        }
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.gen_names().join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.format_word(r))?;
        }
        write!(f, " >")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relators_are_cleaned() {
        // relator x x^-1 vanishes after reduction
        let triv = Word::from_letters([Letter::new(0), Letter::inv(0)]);
        let cube = Word::gen(0).pow(3);
        let p = Presentation::new(1, vec![triv, cube.clone(), cube.inverse()]).unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0], cube);
    }

    #[test]
    fn out_of_range_generator_is_rejected() {
        let w = Word::gen(3);
        assert!(matches!(
            Presentation::new(2, vec![w]),
            Err(Error::GeneratorOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_spec_format() {
        let names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
        let w = parse_word("(x*y)^2", &names).unwrap();
        assert_eq!(format_word(&w, &names), "x*y*x*y");
        let w = parse_word("z*y^-1*z^-1*x^-1", &names).unwrap();
        assert_eq!(format_word(&w, &names), "z*y^-1*z^-1*x^-1");
        let w = parse_word("x^3", &names).unwrap();
        assert_eq!(format_word(&w, &names), "x^3");
        assert!(parse_word("q^2", &names).is_err());
    }

    #[test]
    fn emitted_words_parse_back() {
        let names = vec!["x".to_string(), "y".to_string()];
        let words = [
            Word::identity(),
            Word::gen(0).pow(4),
            Word::gen(0).concat(&Word::gen(1).inverse()).pow(2),
            Word::from_letters([Letter::new(0), Letter::inv(1), Letter::inv(1), Letter::new(0)]),
        ];
        for w in words {
            let text = format_word(&w, &names);
            assert_eq!(parse_word(&text, &names).unwrap(), w, "round trip of {text}");
        }
    }
}
