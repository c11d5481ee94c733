//! Quotient groups realised on right cosets.

use crate::error::Error;
use crate::perm::{GroupHom, PermGroup, Permutation, Transversal};
use crate::Result;

/// Quotient `G/N` as a faithful permutation group on the right cosets of
/// `N`, of degree `[G : N]`, together with the projection homomorphism.
pub fn quotient_group(g: &PermGroup, n: &PermGroup) -> Result<(PermGroup, GroupHom)> {
    if !g.has_subgroup(n) {
        return Err(Error::NotASubgroup("quotient kernel".into()));
    }
    if !g.normalizes(n) {
        return Err(Error::NotNormal("quotient kernel".into()));
    }
    let tr = Transversal::right_transversal(g, n)?;
    let degree = tr.len();
    let gen_images: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|gen| {
            let images: Vec<u32> = tr
                .reps()
                .iter()
                .map(|r| tr.coset_of(&r.product(gen)) as u32)
                .collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        })
        .collect();
    let quotient = PermGroup::new(degree, gen_images.clone())?;
    let projection = GroupHom::new(g.clone(), quotient.clone(), gen_images)?;
    debug_assert_eq!(quotient.order() * n.order(), g.order());
    Ok((quotient, projection))
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
    fn quotient_by_whole_group_is_trivial() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let (q, _) = quotient_group(&s4, &s4).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_by_trivial_subgroup_is_regular() {
        let c3 = group(3, &["(1,2,3)"]);
        let (q, proj) = quotient_group(&c3, &PermGroup::trivial(3)).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(q.degree(), 3);
        assert!(proj.is_bijective());
    }

    #[test]
    fn s4_mod_v4_has_order_six() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let v4 = group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let (q, proj) = quotient_group(&s4, &v4).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.degree(), 6);
        assert!(!q.is_abelian()); // S3, not C6
        assert_eq!(proj.kernel().order(), 4);
    }

    #[test]
    fn non_normal_subgroup_is_rejected() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let c2 = group(4, &["(1,2)"]);
        assert!(matches!(quotient_group(&s4, &c2), Err(Error::NotNormal(_))));
    }
}
