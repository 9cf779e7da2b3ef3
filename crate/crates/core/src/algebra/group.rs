//! Finite groups as Cayley tables.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

/// Multiplication table of a finite group; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl CayleyTable {
    /// Checks closure, identity at index 0, associativity and inverses.
    pub fn new(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::NotAGroup(format!("{} labels for {n} elements", l.len())));
            }
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {g} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!("closure: entry {bad} in row {g}")));
            }
        }
        for g in 0..n {
            if table[0][g] != g || table[g][0] != g {
                return Err(Error::NotAGroup(format!("identity: element 0 fails at {g}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            match (0..n).find(|&h| table[g][h] == 0 && table[h][g] == 0) {
                Some(h) => inverses.push(h),
                None => return Err(Error::NotAGroup(format!("inverse: element {g}"))),
            }
        }
        Ok(CayleyTable {
            table,
            inverses,
            labels,
        })
    }

    /// Closure of a set of permutations (image lists on `0..degree`), elements
    /// sorted lexicographically so the identity is element 0.
    pub fn from_permutation_generators(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        let identity: Vec<usize> = (0..degree).collect();
        for g in generators {
            let mut seen = g.clone();
            seen.sort_unstable();
            if g.len() != degree || seen != identity {
                return Err(Error::NotAGroup(format!("{g:?} is not a permutation of 0..{degree}")));
            }
        }
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&i| a[i]).collect() };
        let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
        elements.insert(identity.clone());
        let mut frontier = vec![identity];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = compose(g, &x);
                if elements.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let elements: Vec<Vec<usize>> = elements.into_iter().collect();
        let index: HashMap<&Vec<usize>, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        // (a*b)(i) = a(b(i)): apply b first
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        let labels = elements.iter().map(|e| format!("{e:?}")).collect();
        Self::new(table, Some(labels))
    }

    /// Cyclic group of order n with element k = generator^k.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(table, None).expect("cyclic group")
    }

    /// Direct product; element (a, b) has index a * |other| + b.
    pub fn direct_product(&self, other: &CayleyTable) -> Self {
        let m = other.order();
        let n = self.order() * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        Self::new(table, None).expect("direct product of groups")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([0usize]);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        (0..self.order()).fold(1, |acc, g| {
            let o = self.element_order(g);
            acc / gcd(acc, o) * o
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_from_generators() {
        let s3 = CayleyTable::from_permutation_generators(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.center(), vec![0]);
        assert_eq!(s3.exponent(), 6);
    }

    #[test]
    fn rejects_broken_tables() {
        assert!(matches!(
            CayleyTable::new(vec![vec![0, 1], vec![1, 1]], None),
            Err(Error::NotAGroup(_))
        ));
        assert!(CayleyTable::new(vec![vec![1, 0], vec![0, 1]], None).is_err());
        assert!(CayleyTable::new(vec![vec![0, 2], vec![1, 0]], None).is_err());
        // identity and closure hold but 1*1 = 1 leaves 1 without an inverse
        assert!(CayleyTable::new(
            vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]],
            None
        )
        .is_err());
    }

    #[test]
    fn cyclic_and_products() {
        let c2 = CayleyTable::cyclic(2);
        let v4 = c2.direct_product(&c2);
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
        assert_eq!(CayleyTable::cyclic(6).subgroup(&[2]), vec![0, 2, 4]);
    }
}
