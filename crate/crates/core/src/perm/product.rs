//! Direct and semidirect products, and the displacement subgroup.

use crate::error::Error;
use crate::perm::{GroupAction, GroupHom, PermGroup, Permutation};
use crate::Result;

/// A semidirect product `R ⋉ M` together with the two embeddings and the
/// projection onto `R`.
pub struct SemidirectProduct {
    pub group: PermGroup,
    pub embed_acting: GroupHom,
    pub embed_normal: GroupHom,
    pub projection: GroupHom,
}

/// Semidirect product `R ⋉ M` for a right action of `R` on `M`, realised by
/// the right regular action on the pairs `(r, m)`, so the degree is
/// `|R| * |M|`. Pair multiplication is `(r, m)(s, n) = (rs, m^s n)`.
pub fn semidirect_product(r: &PermGroup, m: &PermGroup, act: &GroupAction) -> Result<SemidirectProduct> {
    if act.acting().order() != r.order() || act.acted().order() != m.order() {
        return Err(Error::InvalidAction(
            "action does not match the factors of the semidirect product".into(),
        ));
    }
    let nr = r.order();
    let nm = m.order();
    let degree = nr * nm;
    let pair = |ri: usize, mi: usize| ri * nm + mi;

    // right multiplication by (s, 1) for each generator s of R
    let mut gens: Vec<Permutation> = Vec::new();
    for s in r.generators() {
        let si = r.element_index(s).expect("generator");
        let mut images = vec![0u32; degree];
        for ri in 0..nr {
            let rs = r.element_index(&r.element(ri).product(s)).expect("closed");
            for mi in 0..nm {
                images[pair(ri, mi)] = pair(rs, act.act_index(si, mi)) as u32;
            }
        }
        gens.push(Permutation::from_images(images)?);
    }
    // right multiplication by (1, n) for each generator n of M
    for n in m.generators() {
        let mut images = vec![0u32; degree];
        for ri in 0..nr {
            for mi in 0..nm {
                let mn = m.element_index(&m.element(mi).product(n)).expect("closed");
                images[pair(ri, mi)] = pair(ri, mn) as u32;
            }
        }
        gens.push(Permutation::from_images(images)?);
    }

    let group = PermGroup::new(degree, gens.clone())?.with_claimed_order(degree);
    let r_gen_count = r.generators().len();
    let embed_acting = GroupHom::new(r.clone(), group.clone(), gens[..r_gen_count].to_vec())?;
    let embed_normal = GroupHom::new(m.clone(), group.clone(), gens[r_gen_count..].to_vec())?;
    let mut proj_images: Vec<Permutation> = r.generators().to_vec();
    proj_images.extend(std::iter::repeat(r.identity()).take(m.generators().len()));
    let projection = GroupHom::new(group.clone(), r.clone(), proj_images)?;
    Ok(SemidirectProduct {
        group,
        embed_acting,
        embed_normal,
        projection,
    })
}

/// Direct product on disjoint point sets, with both embeddings.
pub struct DirectProduct {
    pub group: PermGroup,
    pub embed_left: GroupHom,
    pub embed_right: GroupHom,
}

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> DirectProduct {
    let degree = a.degree() + b.degree();
    let left: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|g| g.extend_degree(degree))
        .collect();
    let right: Vec<Permutation> = b
        .generators()
        .iter()
        .map(|g| g.shift(a.degree(), degree))
        .collect();
    let mut gens = left.clone();
    gens.extend(right.clone());
    let group = PermGroup::new(degree, gens).expect("valid degree");
    let embed_left = GroupHom::new(a.clone(), group.clone(), left).expect("embedding");
    let embed_right = GroupHom::new(b.clone(), group.clone(), right).expect("embedding");
    DirectProduct {
        group,
        embed_left,
        embed_right,
    }
}

/// Displacement subgroup `[M, K]` of `M` under an action of `K`: generated
/// by the elements `m^-1 * m^k`. Verified to be normal in `M`; under the
/// hypotheses arising in induction it always is.
pub fn displacement_subgroup(m: &PermGroup, k: &PermGroup, act: &GroupAction) -> Result<PermGroup> {
    if act.acting().order() != k.order() || act.acted().order() != m.order() {
        return Err(Error::InvalidAction("displacement action mismatch".into()));
    }
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermGroup::trivial(m.degree());
    for (mi, x) in m.elements().iter().enumerate() {
        for ki in 0..k.order() {
            let moved = m.element(act.act_index(ki, mi));
            let d = x.inverse().product(moved);
            if !d.is_identity() && !current.contains(&d) {
                gens.push(d);
                current = PermGroup::new(m.degree(), gens.clone())?;
            }
        }
    }
    if !m.normalizes(&current) {
        return Err(Error::Internal(
            "displacement subgroup is not normal in M".into(),
        ));
    }
    Ok(current)
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
    fn trivial_action_gives_direct_product_order() {
        let c2 = group(2, &["(1,2)"]);
        let c3 = group(3, &["(1,2,3)"]);
        let act = GroupAction::trivial(c2.clone(), c3.clone());
        let sp = semidirect_product(&c2, &c3, &act).unwrap();
        assert_eq!(sp.group.order(), 6);
        assert!(sp.group.is_abelian());
    }

    #[test]
    fn c2_inverting_c3_gives_s3() {
        let c2 = group(2, &["(1,2)"]);
        let c3 = group(3, &["(1,2,3)"]);
        let inv = GroupHom::new(c3.clone(), c3.clone(), vec![perm(3, "(1,3,2)")]).unwrap();
        let act = GroupAction::new(c2.clone(), c3.clone(), vec![inv]).unwrap();
        let sp = semidirect_product(&c2, &c3, &act).unwrap();
        assert_eq!(sp.group.order(), 6);
        assert!(!sp.group.is_abelian());
        // M embeds normally
        assert!(sp.group.normalizes(&sp.embed_normal.image()));
        // t . e = id on R
        let te = sp.embed_acting.compose(&sp.projection).unwrap();
        for g in c2.generators() {
            assert_eq!(te.apply(g), g.clone());
        }
    }

    #[test]
    fn c4_acting_faithfully_on_c5_has_order_20() {
        let c4 = group(4, &["(1,2,3,4)"]);
        let c5 = group(5, &["(1,2,3,4,5)"]);
        // x -> x^2 has order 4 in Aut(C5)
        let square = GroupHom::new(c5.clone(), c5.clone(), vec![perm(5, "(1,3,5,2,4)")]).unwrap();
        let act = GroupAction::new(c4.clone(), c5.clone(), vec![square]).unwrap();
        let sp = semidirect_product(&c4, &c5, &act).unwrap();
        assert_eq!(sp.group.order(), 20);
    }

    #[test]
    fn displacement_examples() {
        let c4 = group(4, &["(1,2,3,4)"]);
        // trivial acting group
        let k = PermGroup::trivial(2);
        let act = GroupAction::trivial(k.clone(), c4.clone());
        assert!(displacement_subgroup(&c4, &k, &act).unwrap().is_trivial());
        // C2 acting trivially
        let c2 = group(2, &["(1,2)"]);
        let act = GroupAction::trivial(c2.clone(), c4.clone());
        assert!(displacement_subgroup(&c4, &c2, &act).unwrap().is_trivial());
        // C2 inverting C4: displacements are squares
        let inv = GroupHom::new(c4.clone(), c4.clone(), vec![perm(4, "(1,4,3,2)")]).unwrap();
        let act = GroupAction::new(c2.clone(), c4.clone(), vec![inv]).unwrap();
        let d = displacement_subgroup(&c4, &c2, &act).unwrap();
        assert_eq!(d.order(), 2);
        assert!(d.contains(&perm(4, "(1,3)(2,4)")));
    }

    #[test]
    fn direct_product_structure() {
        let c2 = group(2, &["(1,2)"]);
        let c3 = group(3, &["(1,2,3)"]);
        let dp = direct_product(&c2, &c3);
        assert_eq!(dp.group.order(), 6);
        assert_eq!(dp.group.degree(), 5);
        assert!(dp.embed_left.is_injective());
        assert!(dp.embed_right.is_injective());
    }
}
