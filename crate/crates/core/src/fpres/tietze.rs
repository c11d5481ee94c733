//! Tietze simplification of presentations, tracking generator images.
//!
//! Only generator eliminations and relator cleanup are performed, so the
//! surviving generators are a subset of the originals. For every original
//! generator the trace records a word in the final generators ("remember"
//! list); the backward map sends each final generator to itself as an
//! original.

use crate::error::Error;
use crate::fpres::word::Word;
use crate::fpres::Presentation;
use crate::Result;
use std::collections::HashSet;

/// Images of generators across a simplification.
#[derive(Clone, Debug)]
pub struct TietzeTrace {
    /// original generator -> word in the final generators
    pub forward: Vec<Word>,
    /// final generator -> word in the original generators
    pub backward: Vec<Word>,
}

struct Engine {
    relators: Vec<Word>,
    /// original generator -> word over original indices (alive letters only)
    forward: Vec<Word>,
    alive: Vec<bool>,
    protected: Vec<bool>,
}

impl Engine {
    fn new(pres: &Presentation, protected: Vec<bool>) -> Self {
        Engine {
            relators: pres.relators().to_vec(),
            forward: (0..pres.n_gens()).map(Word::gen).collect(),
            alive: vec![true; pres.n_gens()],
            protected,
        }
    }

    fn clean(&mut self) {
        let mut seen: HashSet<Vec<crate::fpres::Letter>> = HashSet::new();
        let mut kept = Vec::new();
        for r in &self.relators {
            let reduced = r.cyclically_reduced();
            if reduced.is_empty() {
                continue;
            }
            if seen.insert(reduced.cyclic_canonical()) {
                kept.push(reduced);
            }
        }
        self.relators = kept;
    }

    fn total_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }

    fn occurrence_counts(&self) -> Vec<usize> {
        let mut occ = vec![0usize; self.alive.len()];
        for r in &self.relators {
            for l in r.letters() {
                occ[l.gen] += 1;
            }
        }
        occ
    }

    /// Shortest relator in which `g` occurs exactly once, if any.
    fn defining_relator(&self, g: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, r) in self.relators.iter().enumerate() {
            if r.occurrences(g) == 1
                && best.map_or(true, |b| r.len() < self.relators[b].len())
            {
                best = Some(i);
            }
        }
        best
    }

    /// Solve relator `ri` for `g` and substitute everywhere.
    fn eliminate(&mut self, g: usize, ri: usize) {
        let r = self.relators[ri].clone();
        let letters = r.letters();
        let k = letters
            .iter()
            .position(|l| l.gen == g)
            .expect("defining relator contains the generator");
        let mut rest: Vec<_> = letters[k + 1..].to_vec();
        rest.extend_from_slice(&letters[..k]);
        let rest = Word::from_letters(rest);
        let replacement = if letters[k].inverse { rest } else { rest.inverse() };
        self.relators.swap_remove(ri);
        for r in &mut self.relators {
            *r = r.substitute(g, &replacement).cyclically_reduced();
        }
        for f in &mut self.forward {
            *f = f.substitute(g, &replacement);
        }
        self.alive[g] = false;
        self.clean();
    }

    /// Candidate by the two elimination rules: a generator occurring exactly
    /// once in the whole presentation, else the generator with the shortest
    /// defining relator. Ties by lowest generator index.
    fn candidate(&self) -> Option<(usize, usize, bool)> {
        let occ = self.occurrence_counts();
        for g in 0..self.alive.len() {
            if self.alive[g] && !self.protected[g] && occ[g] == 1 {
                let ri = self.defining_relator(g).expect("single occurrence");
                return Some((g, ri, true));
            }
        }
        let mut best: Option<(usize, usize, usize)> = None; // (len, g, ri)
        for g in 0..self.alive.len() {
            if !self.alive[g] || self.protected[g] {
                continue;
            }
            if let Some(ri) = self.defining_relator(g) {
                let len = self.relators[ri].len();
                if best.map_or(true, |(bl, bg, _)| (len, g) < (bl, bg)) {
                    best = Some((len, g, ri));
                }
            }
        }
        best.map(|(_, g, ri)| (g, ri, false))
    }

    fn into_result(self, names: Option<Vec<String>>) -> Result<(Presentation, TietzeTrace)> {
        let final_of_orig: Vec<Option<usize>> = {
            let mut map = vec![None; self.alive.len()];
            let mut next = 0usize;
            for (g, &alive) in self.alive.iter().enumerate() {
                if alive {
                    map[g] = Some(next);
                    next += 1;
                }
            }
            map
        };
        let n_final = final_of_orig.iter().flatten().count();
        let renumber = |w: &Word| w.renumber(|g| final_of_orig[g].expect("letter is alive"));
        let relators: Vec<Word> = self.relators.iter().map(&renumber).collect();
        let mut pres = Presentation::new(n_final, relators)?;
        if let Some(names) = names {
            let kept: Vec<String> = names
                .into_iter()
                .enumerate()
                .filter(|(g, _)| self.alive[*g])
                .map(|(_, n)| n)
                .collect();
            pres = pres.with_names(kept)?;
        }
        let forward: Vec<Word> = self.forward.iter().map(&renumber).collect();
        let backward: Vec<Word> = (0..self.alive.len())
            .filter(|&g| self.alive[g])
            .map(Word::gen)
            .collect();
        Ok((pres, TietzeTrace { forward, backward }))
    }
}

/// Simplify a presentation by tracked Tietze eliminations: repeatedly drop
/// duplicate relators and eliminate generators while the total relator
/// length decreases.
pub fn tietze_simplify(pres: &Presentation) -> (Presentation, TietzeTrace) {
    let protected = vec![false; pres.n_gens()];
    tietze_simplify_protected(pres, protected).expect("simplification cannot fail")
}

pub(crate) fn tietze_simplify_protected(
    pres: &Presentation,
    protected: Vec<bool>,
) -> Result<(Presentation, TietzeTrace)> {
    let names = (0..pres.n_gens()).map(|i| pres.gen_name(i)).collect::<Vec<_>>();
    let mut engine = Engine::new(pres, protected);
    engine.clean();
    loop {
        let Some((g, ri, always)) = engine.candidate() else { break };
        if always {
            engine.eliminate(g, ri);
            continue;
        }
        let before = engine.total_length();
        let mut trial_relators = engine.relators.clone();
        let mut trial = Engine {
            relators: std::mem::take(&mut trial_relators),
            forward: engine.forward.clone(),
            alive: engine.alive.clone(),
            protected: engine.protected.clone(),
        };
        trial.eliminate(g, ri);
        if trial.total_length() < before {
            engine = trial;
        } else {
            break;
        }
    }
    engine.into_result(Some(names))
}

/// Eliminate every unprotected generator, regardless of length growth.
/// Used to push a redundant generating set down onto a chosen one.
pub(crate) fn tietze_eliminate_all(
    pres: &Presentation,
    protected: Vec<bool>,
) -> Result<(Presentation, TietzeTrace)> {
    let names = (0..pres.n_gens()).map(|i| pres.gen_name(i)).collect::<Vec<_>>();
    let mut engine = Engine::new(pres, protected);
    engine.clean();
    loop {
        let mut target: Option<(usize, usize, usize)> = None; // (len, g, ri)
        for g in 0..engine.alive.len() {
            if !engine.alive[g] || engine.protected[g] {
                continue;
            }
            if let Some(ri) = engine.defining_relator(g) {
                let len = engine.relators[ri].len();
                if target.map_or(true, |(bl, bg, _)| (len, g) < (bl, bg)) {
                    target = Some((len, g, ri));
                }
            }
        }
        match target {
            Some((_, g, ri)) => engine.eliminate(g, ri),
            None => {
                let leftovers = (0..engine.alive.len())
                    .any(|g| engine.alive[g] && !engine.protected[g]);
                if leftovers {
                    return Err(Error::Internal(
                        "generator elimination stalled: no defining relator".into(),
                    ));
                }
                break;
            }
        }
    }
    engine.into_result(Some(names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpres::presentation::parse_word;
    use crate::fpres::todd_coxeter;

    fn pres(names: &[&str], relators: &[&str]) -> Presentation {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let rels = relators
            .iter()
            .map(|r| parse_word(r, &names).unwrap())
            .collect();
        Presentation::new(names.len(), rels)
            .unwrap()
            .with_names(names)
            .unwrap()
    }

    #[test]
    fn minimal_presentation_is_unchanged() {
        let p = pres(&["x"], &["x^3"]);
        let (q, trace) = tietze_simplify(&p);
        assert_eq!(q.n_gens(), 1);
        assert_eq!(q.relators().len(), 1);
        assert_eq!(trace.forward[0], Word::gen(0));
    }

    #[test]
    fn redundant_generator_is_eliminated() {
        // <x, y | y x^-1, x^3> = <x | x^3> with y -> x
        let p = pres(&["x", "y"], &["y*x^-1", "x^3"]);
        let (q, trace) = tietze_simplify(&p);
        assert_eq!(q.n_gens(), 1);
        assert_eq!(q.gen_name(0), "x");
        assert_eq!(trace.forward[1], Word::gen(0));
        let t = todd_coxeter(&q, 100).unwrap();
        assert_eq!(t.n_cosets(), 3);
    }

    #[test]
    fn trace_is_sound_under_coset_enumeration() {
        // S3 with a redundant third generator c = ab
        let p = pres(
            &["a", "b", "c"],
            &["a^2", "b^3", "(a*b)^2", "c*b^-1*a^-1"],
        );
        let (q, trace) = tietze_simplify(&p);
        let orig = todd_coxeter(&p, 100).unwrap();
        let simp = todd_coxeter(&q, 100).unwrap();
        assert_eq!(orig.n_cosets(), simp.n_cosets());
        // evaluating forward(g) after mapping final gens back to originals
        // must reproduce g in the original regular representation
        for g in 0..p.n_gens() {
            let back_to_orig = trace.forward[g].map_letters(|j| trace.backward[j].clone());
            let lhs = orig.evaluate(&back_to_orig).unwrap();
            let rhs = orig.evaluate(&Word::gen(g)).unwrap();
            assert_eq!(lhs, rhs, "trace unsound for generator {g}");
        }
    }

    #[test]
    fn forced_elimination_respects_protection() {
        let p = pres(
            &["a", "b", "c"],
            &["a^2", "b^3", "(a*b)^2", "c*b^-1*a^-1"],
        );
        let (q, trace) = tietze_eliminate_all(&p, vec![true, true, false]).unwrap();
        assert_eq!(q.n_gens(), 2);
        assert_eq!(q.gen_names(), vec!["a".to_string(), "b".to_string()]);
        assert_eq!(trace.forward[2].len(), 2); // c -> a*b
    }
}
