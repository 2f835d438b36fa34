//! Abstract finite groups by multiplication table.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Elements are `0..order`; `table[a * order + b]` is `a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(table: Vec<usize>, labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || table.len() != n * n || table.iter().any(|&x| x >= n) {
            return Err(Error::InvalidStructure("group table has the wrong shape".into()));
        }
        let m = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::InvalidStructure("group table has no identity".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| Error::InvalidStructure(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidStructure("group table is not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            table,
            identity,
            inverse,
            labels,
        })
    }

    /// Cₙ with elements gⁱ at index i.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidStructure("cyclic group of order 0".into()));
        }
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let labels = (0..n)
            .map(|i| match i {
                0 => String::from("e"),
                1 => String::from("g"),
                i => format!("g^{i}"),
            })
            .collect();
        Self::from_table(table, labels)
    }

    /// Sₙ (n ≤ 5) acting on {0, …, n−1}; elements in lexicographic order of
    /// their one-line notation, so index 0 is the identity. Composition is
    /// `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::InvalidStructure("symmetric groups supported for 1 ≤ n ≤ 5".into()));
        }
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q.as_slice() == p).expect("closed");
        let mut table = Vec::with_capacity(perms.len() * perms.len());
        for s in &perms {
            for t in &perms {
                let st: Vec<usize> = (0..n).map(|x| s[t[x]]).collect();
                table.push(index(&st));
            }
        }
        let labels = perms
            .iter()
            .map(|p| {
                let digits: String = p.iter().map(|d| char::from(b'1' + *d as u8)).collect();
                format!("[{digits}]")
            })
            .collect();
        Self::from_table(table, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        !set.is_empty()
            && set.iter().all(|&a| a < self.order)
            && set.contains(&self.identity)
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, self.inv(b)))))
    }

    /// Sorted, deduplicated subgroup, or [`Error::NotASubgroup`].
    pub fn subgroup(&self, elems: &[usize]) -> Result<Vec<usize>> {
        if !self.is_subgroup(elems) {
            return Err(Error::NotASubgroup);
        }
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        Ok(set.into_iter().collect())
    }

    /// The subgroup as a group in its own right; element `i` of the result is `elems[i]`.
    pub fn restrict(&self, elems: &[usize]) -> Result<FiniteGroup> {
        let elems = self.subgroup(elems)?;
        let n = elems.len();
        let pos = |g: usize| elems.iter().position(|&x| x == g).expect("closed");
        let mut table = Vec::with_capacity(n * n);
        for &a in &elems {
            for &b in &elems {
                table.push(pos(self.mul(a, b)));
            }
        }
        let labels = elems.iter().map(|&g| self.labels[g].clone()).collect();
        FiniteGroup::from_table(table, labels)
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        let set: BTreeSet<usize> = sub.iter().copied().collect();
        (0..self.order).all(|g| sub.iter().all(|&h| set.contains(&self.mul(self.mul(g, h), self.inv(g)))))
    }

    pub fn conjugate(&self, sub: &[usize], g: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = sub.iter().map(|&h| self.mul(self.mul(g, h), self.inv(g))).collect();
        set.into_iter().collect()
    }

    /// Left cosets `gH`, each sorted, listed by smallest representative.
    pub fn left_cosets(&self, sub: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = sub.iter().map(|&h| self.mul(g, h)).collect();
            coset.sort_unstable();
            for &x in &coset {
                seen[x] = true;
            }
            out.push(coset);
        }
        out
    }

    /// `G/H` for normal `H`, together with the projection `G → G/H`.
    pub fn quotient(&self, sub: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let sub = self.subgroup(sub)?;
        if !self.is_normal(&sub) {
            return Err(Error::InvalidStructure("quotient by a non-normal subgroup".into()));
        }
        let cosets = self.left_cosets(&sub);
        let mut proj = vec![0; self.order];
        for (i, c) in cosets.iter().enumerate() {
            for &g in c {
                proj[g] = i;
            }
        }
        let m = cosets.len();
        let mut table = Vec::with_capacity(m * m);
        for a in &cosets {
            for b in &cosets {
                table.push(proj[self.mul(a[0], b[0])]);
            }
        }
        let labels = cosets
            .iter()
            .map(|c| format!("{}H", self.labels[c[0]]))
            .collect();
        Ok((FiniteGroup::from_table(table, labels)?, proj))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_of_order_six() {
        let g = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity(), 0);
        assert!(!g.is_abelian());
    }

    #[test]
    fn cyclic_quotient() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert!(c4.is_subgroup(&[0, 2]));
        assert!(!c4.is_subgroup(&[0, 1]));
        let (q, proj) = c4.quotient(&[0, 2]).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj, vec![0, 1, 0, 1]);
    }

    #[test]
    fn bad_table_rejected() {
        // has identity and inverses but (1·2)·2 ≠ 1·(2·2)
        let t = vec![0, 1, 2, 1, 0, 2, 2, 2, 0];
        assert!(FiniteGroup::from_table(t, vec!["a".into(), "b".into(), "c".into()]).is_err());
    }
}
