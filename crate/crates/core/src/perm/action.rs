//! Group actions `(m, p) -> m^p` of one permutation group on another.
//!
//! An action is given by one automorphism of the acted group per acting
//! generator. Construction extends the assignment to every acting element
//! by BFS over the acting group, checking along the way that alternative
//! factorisations agree; this verifies that the assignment respects every
//! relation of the acting group.

use crate::error::Error;
use crate::perm::{GroupHom, PermGroup, Permutation};
use crate::Result;
use std::sync::Arc;

#[derive(Clone)]
pub struct GroupAction {
    acting: PermGroup,
    acted: PermGroup,
    gen_autos: Vec<GroupHom>,
    /// `table[p][m]` = index of `m^p`, indices in the enumeration orders.
    table: Arc<Vec<Vec<u32>>>,
}

impl GroupAction {
    pub fn new(acting: PermGroup, acted: PermGroup, gen_autos: Vec<GroupHom>) -> Result<Self> {
        if gen_autos.len() != acting.generators().len() {
            return Err(Error::InvalidAction(format!(
                "expected {} generator automorphisms, got {}",
                acting.generators().len(),
                gen_autos.len()
            )));
        }
        let n = acted.order();
        let mut gen_tables: Vec<Vec<u32>> = Vec::with_capacity(gen_autos.len());
        for auto in &gen_autos {
            if !auto.is_bijective() {
                return Err(Error::InvalidAction(
                    "generator image is not an automorphism".into(),
                ));
            }
            let mut t = vec![0u32; n];
            for i in 0..n {
                let img = auto.apply_index(i);
                let j = acted
                    .element_index(img)
                    .ok_or_else(|| Error::InvalidAction("automorphism leaves the group".into()))?;
                t[i] = j as u32;
            }
            gen_tables.push(t);
        }
        // extend over all acting elements, verifying consistency
        let order = acting.order();
        let mut table: Vec<Vec<u32>> = Vec::with_capacity(order);
        table.push((0..n as u32).collect());
        for i in 1..order {
            let (parent, gen) = acting.tree_edge(i);
            let prev = &table[parent];
            let gt = &gen_tables[gen];
            let row: Vec<u32> = prev.iter().map(|&m| gt[m as usize]).collect();
            table.push(row);
        }
        for (i, x) in acting.elements().iter().enumerate() {
            for (gi, g) in acting.generators().iter().enumerate() {
                let xg = x.product(g);
                let k = acting.element_index(&xg).expect("closed group");
                let gt = &gen_tables[gi];
                let composed: Vec<u32> = table[i].iter().map(|&m| gt[m as usize]).collect();
                if composed != table[k] {
                    return Err(Error::InvalidAction(format!(
                        "assignment does not respect the relations of the acting group at {x} * {g}"
                    )));
                }
            }
        }
        Ok(GroupAction {
            acting,
            acted,
            gen_autos,
            table: Arc::new(table),
        })
    }

    /// Trivial action: every acting element fixes everything.
    pub fn trivial(acting: PermGroup, acted: PermGroup) -> Self {
        let id_autos = acting
            .generators()
            .iter()
            .map(|_| GroupHom::identity(&acted))
            .collect();
        GroupAction::new(acting, acted, id_autos).expect("trivial action is valid")
    }

    /// Conjugation action of `p` on a subgroup `m` it normalizes (same degree).
    pub fn by_conjugation(acting: &PermGroup, acted: &PermGroup) -> Result<Self> {
        if !acting.normalizes(acted) {
            return Err(Error::InvalidAction(
                "acting group does not normalize the acted group".into(),
            ));
        }
        let autos = acting
            .generators()
            .iter()
            .map(|g| {
                let images = acted
                    .generators()
                    .iter()
                    .map(|m| m.conjugate_by(g))
                    .collect();
                GroupHom::new(acted.clone(), acted.clone(), images)
            })
            .collect::<Result<_>>()?;
        GroupAction::new(acting.clone(), acted.clone(), autos)
    }

    pub fn acting(&self) -> &PermGroup {
        &self.acting
    }

    pub fn acted(&self) -> &PermGroup {
        &self.acted
    }

    pub fn gen_autos(&self) -> &[GroupHom] {
        &self.gen_autos
    }

    /// `m^p` by element indices.
    #[inline]
    pub fn act_index(&self, p: usize, m: usize) -> usize {
        self.table[p][m] as usize
    }

    /// `m^p` for concrete elements.
    pub fn act(&self, m: &Permutation, p: &Permutation) -> Permutation {
        let pi = self
            .acting
            .element_index(p)
            .expect("acting element must lie in the acting group");
        let mi = self
            .acted
            .element_index(m)
            .expect("acted element must lie in the acted group");
        self.acted.element(self.act_index(pi, mi)).clone()
    }

    /// Restrict the action to a subgroup of the acting group.
    pub fn restrict_acting(&self, sub: &PermGroup) -> Result<GroupAction> {
        if !self.acting.has_subgroup(sub) {
            return Err(Error::NotASubgroup("action restriction".into()));
        }
        let autos = sub
            .generators()
            .iter()
            .map(|g| {
                let pi = self.acting.element_index(g).expect("subgroup element");
                let images = self
                    .acted
                    .generators()
                    .iter()
                    .map(|m| {
                        let mi = self.acted.element_index(m).expect("generator");
                        self.acted.element(self.act_index(pi, mi)).clone()
                    })
                    .collect();
                GroupHom::new(self.acted.clone(), self.acted.clone(), images)
            })
            .collect::<Result<_>>()?;
        GroupAction::new(sub.clone(), self.acted.clone(), autos)
    }

    /// True if every acting element fixes every acted element.
    pub fn is_trivial(&self) -> bool {
        self.table
            .iter()
            .all(|row| row.iter().enumerate().all(|(i, &x)| i as u32 == x))
    }
}

impl std::fmt::Debug for GroupAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupAction(|acting| = {}, |acted| = {})",
            self.acting.order(),
            self.acted.order()
        )
    }
}
