//! Finite permutation groups with full element enumeration.
//!
//! Groups are generated sets of permutations of a fixed degree. The
//! element list is computed once, on first use, by a deterministic
//! breadth-first closure of the generating set; everything downstream
//! (membership, homomorphism verification, coset tables) leans on that
//! enumeration order being reproducible.

use crate::error::Error;
use crate::perm::Permutation;
use crate::Result;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Default cap on the number of elements enumerated for a single group.
pub const DEFAULT_ELEMENT_BUDGET: usize = 1_000_000;

pub(crate) struct Enumeration {
    /// Elements in BFS order; `elements[0]` is the identity.
    pub elements: Vec<Permutation>,
    pub index: HashMap<Permutation, usize>,
    /// For `i > 0`, element `i` was first seen as `elements[parent] * gens[gen]`.
    pub tree: Vec<(usize, usize)>,
}

struct Inner {
    degree: usize,
    gens: Vec<Permutation>,
    enumeration: OnceLock<Enumeration>,
    claimed_order: OnceLock<usize>,
}

/// A finite permutation group, cheap to clone and shareable across threads.
#[derive(Clone)]
pub struct PermGroup(Arc<Inner>);

impl PermGroup {
    /// Group generated by `gens` at the given degree. An empty generating
    /// set gives the trivial group.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::DegreeMismatch { expected: 1, got: 0 });
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        Ok(PermGroup(Arc::new(Inner {
            degree,
            gens,
            enumeration: OnceLock::new(),
            claimed_order: OnceLock::new(),
        })))
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("degree >= 1")
    }

    /// Record an externally known order, checked against enumeration later.
    pub fn with_claimed_order(self, order: usize) -> Self {
        let _ = self.0.claimed_order.set(order);
        self
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.gens
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.0.degree)
    }

    fn enumeration(&self) -> &Enumeration {
        self.enumeration_with_budget(DEFAULT_ELEMENT_BUDGET)
            .expect("element budget exceeded")
    }

    pub(crate) fn enumeration_with_budget(&self, budget: usize) -> Result<&Enumeration> {
        if let Some(e) = self.0.enumeration.get() {
            return Ok(e);
        }
        let computed = self.enumerate(budget)?;
        if let Some(&claimed) = self.0.claimed_order.get() {
            if claimed != computed.elements.len() {
                return Err(Error::Internal(format!(
                    "claimed order {} but enumeration found {}",
                    claimed,
                    computed.elements.len()
                )));
            }
        }
        Ok(self.0.enumeration.get_or_init(|| computed))
    }

    fn enumerate(&self, budget: usize) -> Result<Enumeration> {
        let id = self.identity();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        let mut tree = vec![(0usize, 0usize)];
        let mut head = 0usize;
        while head < elements.len() {
            for (gi, g) in self.0.gens.iter().enumerate() {
                let y = elements[head].product(g);
                if !index.contains_key(&y) {
                    if elements.len() >= budget {
                        return Err(Error::BudgetExceeded {
                            what: "group element enumeration".into(),
                            limit: budget,
                        });
                    }
                    index.insert(y.clone(), elements.len());
                    tree.push((head, gi));
                    elements.push(y);
                }
            }
            head += 1;
        }
        Ok(Enumeration { elements, index, tree })
    }

    /// All elements, in deterministic BFS order.
    pub fn elements(&self) -> &[Permutation] {
        &self.enumeration().elements
    }

    /// Like [`PermGroup::elements`] but with an explicit budget.
    pub fn elements_with_budget(&self, budget: usize) -> Result<&[Permutation]> {
        Ok(&self.enumeration_with_budget(budget)?.elements)
    }

    pub fn order(&self) -> usize {
        self.enumeration().elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.0.degree && self.enumeration().index.contains_key(p)
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.enumeration().index.get(p).copied()
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.enumeration().elements[index]
    }

    /// BFS tree edge of element `i > 0`: `(parent index, generator index)`.
    pub fn tree_edge(&self, index: usize) -> (usize, usize) {
        self.enumeration().tree[index]
    }

    /// Write element `i` as a sequence of generator indices (BFS tree word).
    pub fn generator_word(&self, mut index: usize) -> Vec<usize> {
        let e = self.enumeration();
        let mut word = Vec::new();
        while index != 0 {
            let (parent, gen) = e.tree[index];
            word.push(gen);
            index = parent;
        }
        word.reverse();
        word
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if a.product(b) != b.product(a) {
                    return false;
                }
            }
        }
        true
    }

    /// True if every generator of `sub` lies in `self` (same degree).
    pub fn has_subgroup(&self, sub: &PermGroup) -> bool {
        sub.degree() == self.degree() && sub.generators().iter().all(|g| self.contains(g))
    }

    /// True if `self` normalizes `n`, i.e. `n^g = n` for all generators.
    pub fn normalizes(&self, n: &PermGroup) -> bool {
        if n.degree() != self.degree() {
            return false;
        }
        for g in self.generators() {
            for x in n.generators() {
                if !n.contains(&x.conjugate_by(g)) {
                    return false;
                }
            }
        }
        true
    }

    /// Subgroup of `self` generated by the given elements.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<PermGroup> {
        for g in &gens {
            if !self.contains(g) {
                return Err(Error::NotASubgroup(format!("element {g} is outside the group")));
            }
        }
        PermGroup::new(self.degree(), gens)
    }

    /// Centre of the group.
    pub fn centre(&self) -> PermGroup {
        let gens = self.generators();
        let central: Vec<Permutation> = self
            .elements()
            .iter()
            .filter(|x| gens.iter().all(|g| x.product(g) == g.product(x)))
            .cloned()
            .collect();
        let reduced = reduce_generating_set(self.degree(), &central);
        PermGroup::new(self.degree(), reduced).expect("valid degree")
    }

    /// Greedy small generating set for the whole group: repeatedly add the
    /// element that most increases the generated subgroup, ties broken by
    /// enumeration order.
    pub fn minimal_generating_sequence(&self) -> Vec<Permutation> {
        let target = self.order();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut reached = 1usize;
        while reached < target {
            let mut best: Option<(usize, Permutation)> = None;
            for x in self.elements() {
                if x.is_identity() {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(x.clone());
                let size = PermGroup::new(self.degree(), trial).unwrap().order();
                if size > reached && best.as_ref().map_or(true, |(b, _)| size > *b) {
                    best = Some((size, x.clone()));
                    if size == target {
                        break;
                    }
                }
            }
            let (size, g) = best.expect("group is generated by its elements");
            gens.push(g);
            reached = size;
        }
        gens
    }
}

/// Drop generators already contained in the subgroup generated by the
/// earlier ones. Keeps the result order-deterministic.
pub fn reduce_generating_set(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut kept: Vec<Permutation> = Vec::new();
    for g in gens {
        if g.is_identity() {
            continue;
        }
        let current = PermGroup::new(degree, kept.clone()).expect("valid degree");
        if !current.contains(g) {
            kept.push(g.clone());
        }
    }
    kept
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &PermGroup, s: &PermGroup) -> Result<PermGroup> {
    if !g.has_subgroup(s) {
        return Err(Error::NotASubgroup("normal_closure argument".into()));
    }
    let mut gens: Vec<Permutation> = s
        .generators()
        .iter()
        .filter(|x| !x.is_identity())
        .cloned()
        .collect();
    loop {
        let current = PermGroup::new(g.degree(), gens.clone())?;
        let mut grew = false;
        let snapshot: Vec<Permutation> = gens.clone();
        for x in &snapshot {
            for c in g.generators() {
                let y = x.conjugate_by(c);
                if !current.contains(&y) {
                    gens.push(y);
                    grew = true;
                }
            }
            if grew {
                break;
            }
        }
        if !grew {
            return Ok(current);
        }
    }
}

/// Subgroup `[A, B]` of `g`: generated by commutators of generator pairs,
/// then closed under conjugation by `<A, B>`.
pub fn commutator_subgroup(a: &PermGroup, b: &PermGroup, g: &PermGroup) -> Result<PermGroup> {
    if !g.has_subgroup(a) || !g.has_subgroup(b) {
        return Err(Error::NotASubgroup("commutator_subgroup argument".into()));
    }
    let mut join_gens: Vec<Permutation> = a.generators().to_vec();
    join_gens.extend(b.generators().iter().cloned());
    let join = PermGroup::new(g.degree(), join_gens)?;
    let mut gens: Vec<Permutation> = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            let c = x.commutator(y);
            if !c.is_identity() {
                gens.push(c);
            }
        }
    }
    loop {
        let current = PermGroup::new(g.degree(), gens.clone())?;
        let mut grew = false;
        let snapshot = gens.clone();
        for x in &snapshot {
            for c in join.generators() {
                let y = x.conjugate_by(c);
                if !current.contains(&y) {
                    gens.push(y);
                    grew = true;
                }
            }
            if grew {
                break;
            }
        }
        if !grew {
            return Ok(current);
        }
    }
}

/// Derived subgroup `[G, G]`.
pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    commutator_subgroup(g, g, g).expect("G is a subgroup of itself")
}

/// Orders along the derived series `G > G' > G'' > ...` until it stabilises.
pub fn derived_series_orders(g: &PermGroup) -> Vec<usize> {
    let mut orders = vec![g.order()];
    let mut current = g.clone();
    loop {
        let next = derived_subgroup(&current);
        if next.order() == current.order() {
            break;
        }
        orders.push(next.order());
        if next.order() == 1 {
            break;
        }
        current = next;
    }
    orders
}

/// All subgroups of `g`, as element-set-deduplicated groups in a
/// deterministic order. Intended for desk-scale sweeps.
pub fn all_subgroups(g: &PermGroup) -> Vec<PermGroup> {
    let mut found: Vec<PermGroup> = vec![PermGroup::trivial(g.degree())];
    let mut keys: Vec<Vec<usize>> = vec![element_key(&found[0], g)];
    let mut head = 0usize;
    while head < found.len() {
        let h = found[head].clone();
        for x in g.elements() {
            if x.is_identity() || h.contains(x) {
                continue;
            }
            let mut gens = h.generators().to_vec();
            gens.push(x.clone());
            let k = PermGroup::new(g.degree(), gens).expect("valid degree");
            let key = element_key(&k, g);
            if !keys.contains(&key) {
                keys.push(key);
                found.push(k);
            }
        }
        head += 1;
    }
    found.sort_by_key(|h| (h.order(), element_key(h, g)));
    found
}

fn element_key(h: &PermGroup, ambient: &PermGroup) -> Vec<usize> {
    let mut key: Vec<usize> = h
        .elements()
        .iter()
        .map(|x| ambient.element_index(x).expect("subgroup of ambient"))
        .collect();
    key.sort_unstable();
    key
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, gens [", self.degree())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
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
    fn orders_of_small_groups() {
        assert_eq!(group(4, &["(1,2)", "(1,2,3,4)"]).order(), 24);
        assert_eq!(PermGroup::trivial(1).order(), 1);
        assert_eq!(group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]).order(), 4);
        assert_eq!(group(4, &["(1,2,3)", "(2,3,4)"]).order(), 12);
    }

    #[test]
    fn normal_closure_examples() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let c2p = group(4, &["(1,2)(3,4)"]);
        let v4 = normal_closure(&s4, &c2p).unwrap();
        assert_eq!(v4.order(), 4);
        let c2 = group(4, &["(1,2)"]);
        assert_eq!(normal_closure(&s4, &c2).unwrap().order(), 24);
        let trivial = PermGroup::trivial(4);
        assert_eq!(normal_closure(&s4, &trivial).unwrap().order(), 1);
    }

    #[test]
    fn commutator_subgroup_examples() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let derived = commutator_subgroup(&s4, &s4, &s4).unwrap();
        assert_eq!(derived.order(), 12); // A4
        let v4 = group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert_eq!(commutator_subgroup(&v4, &v4, &s4).unwrap().order(), 1);
        let c3 = group(4, &["(1,2,3)"]);
        assert_eq!(commutator_subgroup(&v4, &c3, &s4).unwrap().order(), 4);
    }

    #[test]
    fn centre_and_series() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        assert_eq!(s4.centre().order(), 1);
        assert_eq!(derived_series_orders(&s4), vec![24, 12, 4, 1]);
        let d8 = group(4, &["(1,2,3,4)", "(1,3)"]);
        assert_eq!(d8.centre().order(), 2);
    }

    #[test]
    fn subgroup_sweep_of_s4() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        assert_eq!(all_subgroups(&s4).len(), 30);
    }

    #[test]
    fn minimal_generating_sequence_is_small() {
        let v4 = group(4, &["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]);
        assert_eq!(v4.minimal_generating_sequence().len(), 2);
        let s4 = group(4, &["(1,2)", "(1,3)", "(1,4)"]);
        assert_eq!(s4.minimal_generating_sequence().len(), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        assert!(matches!(
            s4.elements_with_budget(10),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
