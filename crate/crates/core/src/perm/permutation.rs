//! Permutations of `{1..degree}` in image-list form.
//!
//! Points are 0-based internally; all text I/O (cycle notation, image
//! lists) is 1-based. Products compose left to right: `(a * b)` means
//! "apply `a`, then `b`", so points are acted on from the right, matching
//! the right-action conventions used throughout the crate.

use crate::error::Error;
use crate::Result;
use std::fmt;

/// A permutation of `{0..degree-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Identity permutation of the given degree.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from a 0-based image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::MalformedPermutation(
                    images.iter().map(|&x| x as usize + 1).collect(),
                ));
            }
            seen[i as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from a 1-based image list, as used in serialized form.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let v: Vec<u32> = images
            .iter()
            .map(|&i| {
                if i == 0 {
                    Err(Error::MalformedPermutation(images.to_vec()))
                } else {
                    Ok((i - 1) as u32)
                }
            })
            .collect::<Result<_>>()?;
        Permutation::from_images(v)
    }

    /// Build from disjoint cycles given with 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(Error::MalformedPermutation(cycle.clone()));
                }
                if moved[pt - 1] {
                    return Err(Error::MalformedPermutation(cycle.clone()));
                }
                moved[pt - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(Error::MalformedPermutation(cycle.clone()));
                }
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Permutation::from_images(images)
    }

    /// Parse disjoint-cycle text such as `"(1,2)(3,4)"`. `"()"` is the
    /// identity. Whitespace between cycles and around commas is accepted.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let s = text.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation::identity(degree));
        }
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' in permutation: {text}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in permutation: {text}")))?;
            let inner = &rest[1..close];
            if !inner.trim().is_empty() {
                let cycle: Vec<usize> = inner
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad point '{p}' in {text}")))
                    })
                    .collect::<Result<_>>()?;
                cycles.push(cycle);
            }
            rest = &rest[close + 1..];
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Product `self * other`: apply `self` first, then `other`.
    pub fn product(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Conjugate `self^g = g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().product(self).product(g)
    }

    /// Commutator `[self, other] = self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .product(&other.inverse())
            .product(self)
            .product(other)
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.product(&base);
            }
            base = base.product(&base);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        let mut ord = 1usize;
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            loop {
                seen[p] = true;
                len += 1;
                p = self.apply(p);
                if p == start {
                    break;
                }
            }
            ord = lcm(ord, len);
        }
        ord
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            loop {
                seen[p] = true;
                len += 1;
                p = self.apply(p);
                if p == start {
                    break;
                }
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Disjoint cycles with 1-based points, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            loop {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.apply(p);
                if p == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle-notation string, `"()"` for the identity.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&pt.to_string());
            }
            s.push(')');
        }
        s
    }

    /// 1-based image list.
    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// Extend to a larger degree by fixing the new points.
    pub fn extend_degree(&self, degree: usize) -> Permutation {
        debug_assert!(degree >= self.degree());
        let mut images: Vec<u32> = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Permutation { images }
    }

    /// Shift every point up by `offset` inside a larger degree.
    pub fn shift(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Permutation { images }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["()", "(1,2)", "(1,2)(3,4)", "(1,2,3,4)", "(2,5)(3,4)"] {
            let p = perm(5, s);
            assert_eq!(p.cycle_string(), s.to_string());
        }
    }

    #[test]
    fn product_is_left_to_right() {
        // apply (1,2) then (2,3): 1 -> 2 -> 3
        let a = perm(3, "(1,2)");
        let b = perm(3, "(2,3)");
        let ab = a.product(&b);
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.cycle_string(), "(1,3,2)");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_one_based(&[1, 1, 3]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn orders_and_parity() {
        assert_eq!(perm(4, "(1,2,3,4)").order(), 4);
        assert_eq!(perm(4, "(1,2)(3,4)").order(), 2);
        assert!(perm(4, "(1,2)(3,4)").is_even());
        assert!(!perm(4, "(1,2,3,4)").is_even());
    }

    #[test]
    fn conjugation_convention() {
        // x^g with x=(1,2), g=(2,3) relabels 2 -> 3.
        let x = perm(3, "(1,2)");
        let g = perm(3, "(2,3)");
        assert_eq!(x.conjugate_by(&g).cycle_string(), "(1,3)");
    }
}
