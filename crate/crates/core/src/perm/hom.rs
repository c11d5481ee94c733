//! Group homomorphisms given by generator images, verified at construction.

use crate::error::Error;
use crate::perm::{reduce_generating_set, PermGroup, Permutation};
use crate::Result;
use std::sync::OnceLock;

/// Full pairwise verification is used up to this source order; above it the
/// Schreier relators of the BFS enumeration are checked instead.
pub const PAIRWISE_CHECK_BUDGET: usize = 4096;

/// A verified homomorphism between two permutation groups, defined by one
/// image per source generator.
#[derive(Clone)]
pub struct GroupHom {
    source: PermGroup,
    target: PermGroup,
    gen_images: Vec<Permutation>,
    /// Images of all source elements, in source enumeration order.
    map: OnceLock<Vec<Permutation>>,
}

impl GroupHom {
    /// Build and verify. Verification evaluates `f(xy) = f(x) f(y)` over all
    /// element pairs when the source is small, and otherwise checks the
    /// Schreier relators `f(x) f(g) = f(xg)` of the source enumeration,
    /// which generate all relations of the source.
    pub fn new(source: PermGroup, target: PermGroup, gen_images: Vec<Permutation>) -> Result<Self> {
        if gen_images.len() != source.generators().len() {
            return Err(Error::NotAHomomorphism {
                reason: format!(
                    "expected {} generator images, got {}",
                    source.generators().len(),
                    gen_images.len()
                ),
            });
        }
        for img in &gen_images {
            if img.degree() != target.degree() {
                return Err(Error::DegreeMismatch {
                    expected: target.degree(),
                    got: img.degree(),
                });
            }
            if !target.contains(img) {
                return Err(Error::NotAHomomorphism {
                    reason: format!("image {img} is not in the target group"),
                });
            }
        }
        let hom = GroupHom {
            source,
            target,
            gen_images,
            map: OnceLock::new(),
        };
        hom.verify()?;
        Ok(hom)
    }

    pub fn identity(group: &PermGroup) -> Self {
        GroupHom::new(group.clone(), group.clone(), group.generators().to_vec())
            .expect("identity assignment is a homomorphism")
    }

    /// Inclusion of a subgroup into an ambient group of the same degree.
    pub fn inclusion(sub: &PermGroup, ambient: &PermGroup) -> Result<Self> {
        if !ambient.has_subgroup(sub) {
            return Err(Error::NotASubgroup("inclusion source".into()));
        }
        GroupHom::new(sub.clone(), ambient.clone(), sub.generators().to_vec())
    }

    fn images_of_elements(&self) -> &[Permutation] {
        self.map.get_or_init(|| {
            let n = self.source.order();
            let mut images = Vec::with_capacity(n);
            images.push(self.target.identity());
            for i in 1..n {
                // BFS parents precede their children, so the parent image exists
                let (parent, gen) = self.source.tree_edge(i);
                let img: Permutation = images[parent].product(&self.gen_images[gen]);
                images.push(img);
            }
            images
        })
    }

    fn verify(&self) -> Result<()> {
        let images = self.images_of_elements();
        let elements = self.source.elements();
        let n = elements.len();
        if n <= PAIRWISE_CHECK_BUDGET {
            for (i, x) in elements.iter().enumerate() {
                for (j, y) in elements.iter().enumerate() {
                    let xy = x.product(y);
                    let k = self.source.element_index(&xy).expect("closed group");
                    if images[i].product(&images[j]) != images[k] {
                        return Err(Error::NotAHomomorphism {
                            reason: format!("f({x})f({y}) != f({xy})"),
                        });
                    }
                }
            }
        } else {
            // Schreier relators x * g = (xg) over all elements and generators
            for (i, x) in elements.iter().enumerate() {
                for (gi, g) in self.source.generators().iter().enumerate() {
                    let xg = x.product(g);
                    let k = self.source.element_index(&xg).expect("closed group");
                    if images[i].product(&self.gen_images[gi]) != images[k] {
                        return Err(Error::NotAHomomorphism {
                            reason: format!("f({x})f({g}) != f({xg})"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn gen_images(&self) -> &[Permutation] {
        &self.gen_images
    }

    /// Image of an arbitrary source element.
    pub fn apply(&self, x: &Permutation) -> Permutation {
        let i = self
            .source
            .element_index(x)
            .expect("argument must lie in the source group");
        self.images_of_elements()[i].clone()
    }

    pub fn apply_index(&self, index: usize) -> &Permutation {
        &self.images_of_elements()[index]
    }

    /// Kernel, with a reduced generating set.
    pub fn kernel(&self) -> PermGroup {
        let images = self.images_of_elements();
        let members: Vec<Permutation> = self
            .source
            .elements()
            .iter()
            .zip(images.iter())
            .filter(|(_, img)| img.is_identity())
            .map(|(x, _)| x.clone())
            .collect();
        let gens = reduce_generating_set(self.source.degree(), &members);
        PermGroup::new(self.source.degree(), gens).expect("valid degree")
    }

    /// Image subgroup of the target.
    pub fn image(&self) -> PermGroup {
        let gens = reduce_generating_set(self.target.degree(), &self.gen_images);
        PermGroup::new(self.target.degree(), gens).expect("valid degree")
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective() && self.is_surjective()
    }

    /// First source element mapping to `y`, if any, in enumeration order.
    pub fn preimage(&self, y: &Permutation) -> Option<Permutation> {
        let images = self.images_of_elements();
        self.source
            .elements()
            .iter()
            .zip(images.iter())
            .find(|(_, img)| *img == y)
            .map(|(x, _)| x.clone())
    }

    /// Composition `self` followed by `other`.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom> {
        let gen_images = self
            .gen_images
            .iter()
            .map(|img| other.apply(img))
            .collect();
        GroupHom::new(self.source.clone(), other.target.clone(), gen_images)
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(Error::NotAHomomorphism {
                reason: "inverse requires a bijective homomorphism".into(),
            });
        }
        let gen_images = self
            .target
            .generators()
            .iter()
            .map(|g| self.preimage(g).expect("surjective"))
            .collect();
        GroupHom::new(self.target.clone(), self.source.clone(), gen_images)
    }
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupHom[")?;
        for (g, img) in self.source.generators().iter().zip(&self.gen_images) {
            write!(f, " {g} -> {img}")?;
        }
        write!(f, " ]")
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
    fn identity_hom_on_s4() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let id = GroupHom::identity(&s4);
        assert!(id.is_bijective());
    }

    #[test]
    fn inclusion_c2_in_s4() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let c2 = group(4, &["(1,2)"]);
        let inc = GroupHom::inclusion(&c2, &s4).unwrap();
        assert!(inc.is_injective());
        assert_eq!(inc.image().order(), 2);
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let c2 = group(4, &["(1,2)"]);
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let bad = GroupHom::new(c2, s4, vec![perm(4, "(1,2,3)")]);
        assert!(matches!(bad, Err(Error::NotAHomomorphism { .. })));
    }

    #[test]
    fn sign_hom_kernel_and_image() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let c2 = group(2, &["(1,2)"]);
        let sign = GroupHom::new(s4.clone(), c2, vec![perm(2, "(1,2)"), perm(2, "(1,2)")]).unwrap();
        let kernel = sign.kernel();
        assert_eq!(kernel.order(), 12);
        assert_eq!(sign.image().order(), 2);
        assert_eq!(s4.order(), kernel.order() * sign.image().order());
    }

    #[test]
    fn compose_and_inverse() {
        let c4 = group(4, &["(1,2,3,4)"]);
        let relabeled = group(4, &["(1,3,2,4)"]);
        let f = GroupHom::new(c4.clone(), relabeled.clone(), vec![perm(4, "(1,3,2,4)")]).unwrap();
        let back = f.inverse().unwrap();
        let round = f.compose(&back).unwrap();
        for g in c4.generators() {
            assert_eq!(round.apply(g), g.clone());
        }
    }
}
