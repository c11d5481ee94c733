//! Todd–Coxeter coset enumeration over the trivial subgroup.
//!
//! HLT-style relator scanning: each coset is scanned against each relator
//! in order, defining new cosets to fill gaps, with a queue-based
//! coincidence routine merging collapsing cosets. When the live-coset count
//! reaches the limit a lookahead pass (deductions and coincidences only) is
//! attempted before giving up. Cosets are numbered in first-definition
//! order, so the resulting table is deterministic.

use crate::error::Error;
use crate::fpres::{Presentation, Word};
use crate::perm::{PermGroup, Permutation};
use crate::Result;

/// Default ceiling on live cosets.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const UNDEF: u32 = u32::MAX;

/// A closed, collapsed coset table for a finite presentation. Since the
/// enumeration runs over the trivial subgroup, the table is the regular
/// permutation representation and `n_cosets` is the group order.
#[derive(Clone, Debug)]
pub struct CosetTable {
    n_cosets: usize,
    gen_perms: Vec<Permutation>,
}

impl CosetTable {
    pub fn n_cosets(&self) -> usize {
        self.n_cosets
    }

    /// Action of each presentation generator on the cosets.
    pub fn gen_perms(&self) -> &[Permutation] {
        &self.gen_perms
    }

    /// Evaluate a word in the regular representation.
    pub fn evaluate(&self, w: &Word) -> Result<Permutation> {
        if self.gen_perms.is_empty() && !w.is_empty() {
            return Err(Error::GeneratorOutOfRange {
                index: w.max_gen().unwrap_or(0),
                n_gens: 0,
            });
        }
        evaluate_word(w, &self.gen_perms, self.n_cosets)
    }

    /// The enumerated group as a permutation group on the cosets.
    pub fn group(&self) -> PermGroup {
        PermGroup::new(self.n_cosets.max(1), self.gen_perms.clone())
            .expect("valid degree")
            .with_claimed_order(self.n_cosets)
    }
}

/// Product of generator images along a word, left to right.
pub fn evaluate_word(w: &Word, images: &[Permutation], degree: usize) -> Result<Permutation> {
    let mut acc = Permutation::identity(degree);
    for l in w.letters() {
        let img = images.get(l.gen).ok_or(Error::GeneratorOutOfRange {
            index: l.gen,
            n_gens: images.len(),
        })?;
        if l.inverse {
            acc = acc.product(&img.inverse());
        } else {
            acc = acc.product(img);
        }
    }
    Ok(acc)
}

/// Enumerate the cosets of the trivial subgroup. Returns a closed table of
/// size equal to the group order, or an error if more than `max_cosets`
/// live cosets would be needed.
pub fn todd_coxeter(pres: &Presentation, max_cosets: usize) -> Result<CosetTable> {
    let mut e = Enumerator::new(pres, max_cosets);
    e.run()?;
    e.into_table()
}

struct Enumerator {
    n_cols: usize,
    relators: Vec<Vec<u32>>,
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    dead: usize,
    max_cosets: usize,
}

impl Enumerator {
    fn new(pres: &Presentation, max_cosets: usize) -> Self {
        let relators = pres
            .relators()
            .iter()
            .map(|r| {
                r.letters()
                    .iter()
                    .map(|l| (2 * l.gen + usize::from(l.inverse)) as u32)
                    .collect()
            })
            .collect();
        Enumerator {
            n_cols: 2 * pres.n_gens(),
            relators,
            table: vec![vec![UNDEF; 2 * pres.n_gens()]],
            parent: vec![0],
            dead: 0,
            max_cosets: max_cosets.max(1),
        }
    }

    fn live(&self) -> usize {
        self.table.len() - self.dead
    }

    fn find(&mut self, mut a: u32) -> u32 {
        while self.parent[a as usize] != a {
            let up = self.parent[self.parent[a as usize] as usize];
            self.parent[a as usize] = up;
            a = up;
        }
        a
    }

    fn is_live(&mut self, a: u32) -> bool {
        self.find(a) == a
    }

    fn define(&mut self, a: u32, col: u32) -> Result<()> {
        if self.live() >= self.max_cosets {
            self.lookahead();
            if self.live() >= self.max_cosets {
                return Err(Error::CosetLimitExceeded {
                    limit: self.max_cosets,
                });
            }
        }
        let a = self.find(a);
        if self.table[a as usize][col as usize] != UNDEF {
            // a lookahead pass closed this entry already
            return Ok(());
        }
        let n = self.table.len() as u32;
        self.table.push(vec![UNDEF; self.n_cols]);
        self.parent.push(n);
        self.table[a as usize][col as usize] = n;
        self.table[n as usize][(col ^ 1) as usize] = a;
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return;
        }
        let (keep, kill) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[kill as usize] = keep;
        self.dead += 1;
        queue.push(kill);
    }

    fn coincide(&mut self, a: u32, b: u32) {
        let mut queue: Vec<u32> = Vec::new();
        self.merge(a, b, &mut queue);
        let mut head = 0;
        while head < queue.len() {
            let e = queue[head];
            head += 1;
            for col in 0..self.n_cols {
                let d = self.table[e as usize][col];
                if d == UNDEF {
                    continue;
                }
                self.table[d as usize][col ^ 1] = UNDEF;
                let mu = self.find(e);
                let nu = self.find(d);
                let mu_entry = self.table[mu as usize][col];
                if mu_entry != UNDEF {
                    self.merge(nu, mu_entry, &mut queue);
                } else {
                    let nu_entry = self.table[nu as usize][col ^ 1];
                    if nu_entry != UNDEF {
                        self.merge(mu, nu_entry, &mut queue);
                    } else {
                        self.table[mu as usize][col] = nu;
                        self.table[nu as usize][col ^ 1] = mu;
                    }
                }
            }
        }
    }

    /// Scan relator `w` at coset `c`, defining cosets to close it.
    fn scan_and_fill(&mut self, c: u32, ri: usize) -> Result<()> {
        loop {
            if !self.is_live(c) {
                return Ok(());
            }
            let w = &self.relators[ri];
            let len = w.len();
            let mut f = c;
            let mut i = 0;
            while i < len && self.table[f as usize][w[i] as usize] != UNDEF {
                f = self.table[f as usize][w[i] as usize];
                i += 1;
            }
            if i == len {
                if f != c {
                    self.coincide(f, c);
                }
                return Ok(());
            }
            let mut b = c;
            let mut j = len;
            while j > i && self.table[b as usize][(w[j - 1] ^ 1) as usize] != UNDEF {
                b = self.table[b as usize][(w[j - 1] ^ 1) as usize];
                j -= 1;
            }
            if j == i {
                if f != b {
                    self.coincide(f, b);
                }
                return Ok(());
            } else if j == i + 1 {
                // deduction closing the single remaining gap
                let col = w[i];
                self.table[f as usize][col as usize] = b;
                self.table[b as usize][(col ^ 1) as usize] = f;
                return Ok(());
            } else {
                let col = w[i];
                self.define(f, col)?;
            }
        }
    }

    /// Deduction-only pass over all live cosets and relators.
    fn lookahead(&mut self) {
        for c in 0..self.table.len() as u32 {
            if !self.is_live(c) {
                continue;
            }
            for ri in 0..self.relators.len() {
                if !self.is_live(c) {
                    break;
                }
                self.scan_no_fill(c, ri);
            }
        }
    }

    fn scan_no_fill(&mut self, c: u32, ri: usize) {
        let w = &self.relators[ri];
        let len = w.len();
        let mut f = c;
        let mut i = 0;
        while i < len && self.table[f as usize][w[i] as usize] != UNDEF {
            f = self.table[f as usize][w[i] as usize];
            i += 1;
        }
        if i == len {
            if f != c {
                self.coincide(f, c);
            }
            return;
        }
        let mut b = c;
        let mut j = len;
        while j > i && self.table[b as usize][(w[j - 1] ^ 1) as usize] != UNDEF {
            b = self.table[b as usize][(w[j - 1] ^ 1) as usize];
            j -= 1;
        }
        if j == i {
            if f != b {
                self.coincide(f, b);
            }
        } else if j == i + 1 {
            let col = w[i];
            self.table[f as usize][col as usize] = b;
            self.table[b as usize][(col ^ 1) as usize] = f;
        }
    }

    fn run(&mut self) -> Result<()> {
        let mut alpha: u32 = 0;
        while (alpha as usize) < self.table.len() {
            if !self.is_live(alpha) {
                alpha += 1;
                continue;
            }
            for ri in 0..self.relators.len() {
                if !self.is_live(alpha) {
                    break;
                }
                self.scan_and_fill(alpha, ri)?;
            }
            let mut col = 0u32;
            while (col as usize) < self.n_cols && self.is_live(alpha) {
                if self.table[alpha as usize][col as usize] == UNDEF {
                    self.define(alpha, col)?;
                }
                col += 1;
            }
            alpha += 1;
        }
        Ok(())
    }

    fn into_table(mut self) -> Result<CosetTable> {
        // renumber live cosets in first-definition order
        let total = self.table.len();
        let mut new_index = vec![UNDEF; total];
        let mut n = 0u32;
        for c in 0..total as u32 {
            if self.find(c) == c {
                new_index[c as usize] = n;
                n += 1;
            }
        }
        let n_cosets = n as usize;
        let n_gens = self.n_cols / 2;
        let mut gen_perms = Vec::with_capacity(n_gens);
        for g in 0..n_gens {
            let mut images = vec![0u32; n_cosets];
            for c in 0..total as u32 {
                if self.find(c) != c {
                    continue;
                }
                let d = self.table[c as usize][2 * g];
                if d == UNDEF {
                    return Err(Error::Internal("coset table is not closed".into()));
                }
                let d = self.find(d);
                images[new_index[c as usize] as usize] = new_index[d as usize];
            }
            gen_perms.push(Permutation::from_images(images)?);
        }
        Ok(CosetTable { n_cosets, gen_perms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpres::presentation::parse_word;

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
    fn cyclic_group_of_order_three() {
        let p = pres(&["x"], &["x^3"]);
        let t = todd_coxeter(&p, 100).unwrap();
        assert_eq!(t.n_cosets(), 3);
        assert_eq!(t.group().order(), 3);
    }

    #[test]
    fn symmetric_group_s4() {
        let p = pres(&["a", "b"], &["a^2", "b^4", "(a*b)^3"]);
        let t = todd_coxeter(&p, 1000).unwrap();
        assert_eq!(t.n_cosets(), 24);
    }

    #[test]
    fn quaternion_group_collapses_properly() {
        // <x,y | x^4, x^2 y^-2, y^-1 x y x> has order 8
        let p = pres(&["x", "y"], &["x^4", "x^2*y^-2", "y^-1*x*y*x"]);
        let t = todd_coxeter(&p, 1000).unwrap();
        assert_eq!(t.n_cosets(), 8);
    }

    #[test]
    fn free_group_exceeds_limit() {
        let p = pres(&["x", "y"], &[]);
        assert!(matches!(
            todd_coxeter(&p, 1000),
            Err(Error::CosetLimitExceeded { .. })
        ));
    }

    #[test]
    fn trivial_presentation() {
        let p = Presentation::new(0, vec![]).unwrap();
        let t = todd_coxeter(&p, 10).unwrap();
        assert_eq!(t.n_cosets(), 1);
        assert_eq!(t.group().order(), 1);
    }

    #[test]
    fn displayed_presentation_of_a4_times_c3() {
        let p = pres(
            &["x", "y", "z"],
            &[
                "x^3",
                "y^3",
                "z^3",
                "(x*y)^2",
                "z*y^-1*z^-1*x^-1",
                "y*z*y*x^-1*z^-1",
                "y^-1*x^2*y^2*x^-1",
            ],
        );
        let t = todd_coxeter(&p, 10000).unwrap();
        assert_eq!(t.n_cosets(), 36);
        // yzx^2 generates the central C3 summand
        let w = p.parse_word("y*z*x^2").unwrap();
        let perm = t.evaluate(&w).unwrap();
        assert_eq!(perm.order(), 3);
        for g in t.gen_perms() {
            assert_eq!(perm.product(g), g.product(&perm));
        }
    }

    #[test]
    fn infinite_cyclic_hits_limit() {
        let p = pres(&["x"], &[]);
        assert!(todd_coxeter(&p, 50).is_err());
    }
}
