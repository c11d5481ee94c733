//! Freely reduced words in a free group.

use std::fmt;

/// One letter of a word: a generator index and an exponent of ±1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn inv(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(gen: usize) -> Self {
        Word {
            letters: vec![Letter::new(gen)],
        }
    }

    /// Build from letters, freely reducing.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last().is_some_and(|last| last.cancels(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
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

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Conjugate `self^w = w^-1 self w`.
    pub fn conjugate_by(&self, w: &Word) -> Word {
        w.inverse().concat(self).concat(w)
    }

    /// Cyclically reduced form: strip matching first/last letters.
    pub fn cyclically_reduced(&self) -> Word {
        let mut letters = self.letters.clone();
        while letters.len() >= 2 && letters[0].cancels(*letters.last().unwrap()) {
            letters.pop();
            letters.remove(0);
        }
        Word { letters }
    }

    /// Count occurrences of a generator (any exponent).
    pub fn occurrences(&self, gen: usize) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Substitute a word for one generator, freely reducing.
    pub fn substitute(&self, gen: usize, replacement: &Word) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        let push = |out: &mut Vec<Letter>, l: Letter| {
            if out.last().is_some_and(|last| last.cancels(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        };
        for &l in &self.letters {
            if l.gen == gen {
                if l.inverse {
                    for &r in replacement.inverse().letters() {
                        push(&mut out, r);
                    }
                } else {
                    for &r in replacement.letters() {
                        push(&mut out, r);
                    }
                }
            } else {
                push(&mut out, l);
            }
        }
        Word { letters: out }
    }

    /// Renumber generators through a map.
    pub fn renumber(&self, map: impl Fn(usize) -> usize) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    gen: map(l.gen),
                    inverse: l.inverse,
                })
                .collect(),
        }
    }

    /// Replace each generator by a word and reduce; the general substitution.
    pub fn map_letters(&self, image: impl Fn(usize) -> Word) -> Word {
        let mut out = Word::identity();
        for &l in &self.letters {
            let w = image(l.gen);
            out = out.concat(if l.inverse { &w.inverse() } else { &w });
        }
        out
    }

    /// Canonical form shared by all cyclic rotations of the word and of its
    /// inverse; used to deduplicate relators.
    pub fn cyclic_canonical(&self) -> Vec<Letter> {
        let w = self.cyclically_reduced();
        if w.is_empty() {
            return Vec::new();
        }
        let mut best: Option<Vec<Letter>> = None;
        for candidate in [w.clone(), w.inverse()] {
            let n = candidate.letters.len();
            for shift in 0..n {
                let rotated: Vec<Letter> = (0..n)
                    .map(|i| candidate.letters[(i + shift) % n])
                    .collect();
                if best.as_ref().map_or(true, |b| rotated < *b) {
                    best = Some(rotated);
                }
            }
        }
        best.unwrap()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{}{}", l.gen + 1, if l.inverse { "^-1" } else { "" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[(usize, bool)]) -> Word {
        Word::from_letters(letters.iter().map(|&(g, inv)| Letter { gen: g, inverse: inv }))
    }

    #[test]
    fn free_reduction() {
        assert!(w(&[(0, false), (0, true)]).is_empty());
        assert_eq!(w(&[(0, false), (1, false), (1, true), (0, false)]).len(), 2);
    }

    #[test]
    fn inverse_concat_cancels() {
        let word = w(&[(0, false), (1, true), (2, false)]);
        assert!(word.concat(&word.inverse()).is_empty());
    }

    #[test]
    fn cyclic_reduction() {
        // x y x^-1 reduces cyclically to y
        let word = w(&[(0, false), (1, false), (0, true)]);
        assert_eq!(word.cyclically_reduced(), Word::gen(1));
    }

    #[test]
    fn cyclic_canonical_identifies_rotations_and_inverses() {
        let a = w(&[(0, false), (1, false), (0, false)]);
        let rotated = w(&[(1, false), (0, false), (0, false)]);
        assert_eq!(a.cyclic_canonical(), rotated.cyclic_canonical());
        assert_eq!(a.cyclic_canonical(), a.inverse().cyclic_canonical());
    }

    #[test]
    fn substitution_reduces() {
        // substitute y := x^-1 into x y: result empty
        let word = w(&[(0, false), (1, false)]);
        let repl = Word::from_letters([Letter::inv(0)]);
        assert!(word.substitute(1, &repl).is_empty());
    }
}
