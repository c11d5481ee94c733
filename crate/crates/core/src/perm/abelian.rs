//! Abelianization and invariant factors via Smith normal form.

use crate::error::Error;
use crate::perm::{derived_subgroup, quotient_group, GroupHom, PermGroup};
use crate::Result;

/// Diagonal of the Smith normal form of an integer matrix: non-negative
/// entries with `d1 | d2 | ...`, padded implicitly with zeros.
pub fn smith_diagonal(mut m: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // pick the non-zero entry of least magnitude as pivot
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = m[i][t] / m[t][t];
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                    if m[i][t] != 0 {
                        m.swap(t, i);
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = m[t][j] / m[t][t];
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                    if m[t][j] != 0 {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let p = m[t][t];
            let mut fixed = true;
            'search: for i in t + 1..rows {
                for j in t + 1..cols {
                    if m[i][j] % p != 0 {
                        for col in t..cols {
                            m[t][col] += m[i][col];
                        }
                        fixed = false;
                        break 'search;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// Invariant factors `d1 | d2 | ...` of a finite abelian permutation group.
pub fn abelian_invariants_of_abelian(a: &PermGroup) -> Result<Vec<usize>> {
    if a.order() == 1 {
        return Ok(Vec::new());
    }
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let k = a.generators().len();
    // exponent vectors per element over the generators, built along the BFS
    // tree; every rediscovery of an element yields a relation row
    let n = a.order();
    let mut vecs: Vec<Vec<i64>> = vec![vec![0; k]];
    for i in 1..n {
        let (parent, gen) = a.tree_edge(i);
        let mut v = vecs[parent].clone();
        v[gen] += 1;
        vecs.push(v);
    }
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, x) in a.elements().iter().enumerate() {
        for (gi, g) in a.generators().iter().enumerate() {
            let y = x.product(g);
            let j = a.element_index(&y).expect("closed");
            let mut row = vecs[i].clone();
            row[gi] += 1;
            for (c, w) in row.iter_mut().zip(&vecs[j]) {
                *c -= w;
            }
            if row.iter().any(|&c| c != 0) {
                rows.push(row);
            }
        }
    }
    let diag = smith_diagonal(rows);
    let invariants: Vec<usize> = diag
        .iter()
        .filter(|&&d| d > 1)
        .map(|&d| d as usize)
        .collect();
    let product: usize = invariants.iter().product();
    if product != a.order() || diag.len() != k || diag.iter().any(|&d| d == 0) {
        return Err(Error::Internal(format!(
            "invariant factors {invariants:?} do not match group order {}",
            a.order()
        )));
    }
    Ok(invariants)
}

/// Invariant factors of `G/[G,G]` together with the projection of `G` onto
/// a concrete abelian permutation group realising the quotient.
pub fn abelianization(g: &PermGroup) -> Result<(Vec<usize>, GroupHom)> {
    let derived = derived_subgroup(g);
    let (quotient, projection) = quotient_group(g, &derived)?;
    let invariants = abelian_invariants_of_abelian(&quotient)?;
    Ok((invariants, projection))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::new(degree, gens.iter().map(|s| perm(degree, s)).collect()).unwrap()
    }

    #[test]
    fn snf_of_small_matrices() {
        assert_eq!(smith_diagonal(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_diagonal(vec![vec![2, 0], vec![0, 2]]), vec![2, 2]);
        assert_eq!(
            smith_diagonal(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]),
            vec![2, 2, 156]
        );
    }

    #[test]
    fn invariants_of_named_groups() {
        let a4 = group(4, &["(1,2,3)", "(2,3,4)"]);
        assert_eq!(abelianization(&a4).unwrap().0, vec![3]);
        let v4 = group(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert_eq!(abelianization(&v4).unwrap().0, vec![2, 2]);
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        assert_eq!(abelianization(&s4).unwrap().0, vec![2]);
        let c6 = group(5, &["(1,2)(3,4,5)"]);
        assert_eq!(abelianization(&c6).unwrap().0, vec![6]);
    }

    #[test]
    fn divisibility_chain_holds() {
        let g = group(9, &["(1,2,3)", "(4,5,6)", "(7,8,9)"]);
        let inv = abelianization(&g).unwrap().0;
        assert_eq!(inv, vec![3, 3, 3]);
        for w in inv.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn perfect_or_trivial_abelianization_is_empty() {
        assert_eq!(abelianization(&PermGroup::trivial(1)).unwrap().0, Vec::<usize>::new());
    }
}
