//! Right-coset transversals and factorisation through them.

use crate::error::Error;
use crate::perm::{PermGroup, Permutation};
use crate::Result;

/// A transversal for the right cosets `Hg` of a subgroup, with the identity
/// representing the subgroup itself.
#[derive(Clone, Debug)]
pub struct Transversal {
    supergroup: PermGroup,
    subgroup: PermGroup,
    reps: Vec<Permutation>,
}

impl Transversal {
    /// Validate an explicitly chosen list of representatives: the identity
    /// first, pairwise in distinct right cosets, covering all of them.
    pub fn new(supergroup: PermGroup, subgroup: PermGroup, reps: Vec<Permutation>) -> Result<Self> {
        if !supergroup.has_subgroup(&subgroup) {
            return Err(Error::NotASubgroup("transversal subgroup".into()));
        }
        let index = supergroup.order() / subgroup.order();
        if reps.len() != index {
            return Err(Error::Internal(format!(
                "expected {index} coset representatives, got {}",
                reps.len()
            )));
        }
        if !reps[0].is_identity() {
            return Err(Error::Internal("first representative must be the identity".into()));
        }
        for (i, a) in reps.iter().enumerate() {
            if !supergroup.contains(a) {
                return Err(Error::NotASubgroup(format!("representative {a}")));
            }
            for b in &reps[..i] {
                if subgroup.contains(&a.product(&b.inverse())) {
                    return Err(Error::Internal(format!(
                        "representatives {b} and {a} share a right coset"
                    )));
                }
            }
        }
        Ok(Transversal {
            supergroup,
            subgroup,
            reps,
        })
    }

    /// First-found representatives over the deterministic BFS enumeration
    /// of the supergroup; `reps[0]` is the identity.
    pub fn right_transversal(supergroup: &PermGroup, subgroup: &PermGroup) -> Result<Self> {
        if !supergroup.has_subgroup(subgroup) {
            return Err(Error::NotASubgroup("transversal subgroup".into()));
        }
        let mut reps: Vec<Permutation> = Vec::new();
        for x in supergroup.elements() {
            if !reps
                .iter()
                .any(|r| subgroup.contains(&x.product(&r.inverse())))
            {
                reps.push(x.clone());
            }
        }
        debug_assert!(reps[0].is_identity());
        Ok(Transversal {
            supergroup: supergroup.clone(),
            subgroup: subgroup.clone(),
            reps,
        })
    }

    pub fn supergroup(&self) -> &PermGroup {
        &self.supergroup
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the representative of the coset `H x`.
    pub fn coset_of(&self, x: &Permutation) -> usize {
        for (i, r) in self.reps.iter().enumerate() {
            if self.subgroup.contains(&x.product(&r.inverse())) {
                return i;
            }
        }
        panic!("element lies in no coset; not in the supergroup?");
    }

    /// Factor `t * q = p * u` with `p` in the subgroup and `u` a listed
    /// representative. `t` must itself be a listed representative.
    pub fn factor(&self, t: &Permutation, q: &Permutation) -> Result<(Permutation, Permutation)> {
        if !self.reps.contains(t) {
            return Err(Error::Internal(format!("{t} is not a listed representative")));
        }
        let x = t.product(q);
        let u = self.reps[self.coset_of(&x)].clone();
        let p = x.product(&u.inverse());
        debug_assert!(self.subgroup.contains(&p));
        debug_assert_eq!(t.product(q), p.product(&u));
        Ok((p, u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(degree, gens.iter().map(|s| perm(degree, s)).collect()).unwrap()
    }

    #[test]
    fn index_one_transversal() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let tr = Transversal::right_transversal(&s4, &s4).unwrap();
        assert_eq!(tr.len(), 1);
        assert!(tr.reps()[0].is_identity());
    }

    #[test]
    fn a4_in_s4_has_two_cosets() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        let tr = Transversal::right_transversal(&s4, &a4).unwrap();
        assert_eq!(tr.len(), 2);
        assert!(tr.reps()[0].is_identity());
        assert!(!tr.reps()[1].is_even());
    }

    #[test]
    fn c2_in_s4_has_twelve_cosets() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let c2 = group(4, &["(1,2)"]);
        let tr = Transversal::right_transversal(&s4, &c2).unwrap();
        assert_eq!(tr.len(), 12);
    }

    #[test]
    fn factorisation_is_exact() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        let tr = Transversal::right_transversal(&s4, &a4).unwrap();
        for t in tr.reps().to_vec() {
            for q in s4.elements().to_vec() {
                let (p, u) = tr.factor(&t, &q).unwrap();
                assert!(a4.contains(&p));
                assert!(tr.reps().contains(&u));
                assert_eq!(t.product(&q), p.product(&u));
            }
        }
    }

    #[test]
    fn subgroup_elements_factor_trivially() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        let tr = Transversal::right_transversal(&s4, &a4).unwrap();
        let id = s4.identity();
        let q = perm(4, "(1,2,3)");
        let (p, u) = tr.factor(&id, &q).unwrap();
        assert_eq!(p, q);
        assert!(u.is_identity());
    }

    #[test]
    fn explicit_transversal_is_validated() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        let ok = Transversal::new(
            s4.clone(),
            a4.clone(),
            vec![s4.identity(), perm(4, "(3,4)")],
        );
        assert!(ok.is_ok());
        let bad = Transversal::new(
            s4.clone(),
            a4.clone(),
            vec![s4.identity(), perm(4, "(1,2,3)")],
        );
        assert!(bad.is_err());
    }
}
