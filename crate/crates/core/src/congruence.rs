//! Congruences as canonical partitions and their generation.

use std::fmt;

use crate::algebra::FiniteAlgebra;
use crate::closure::for_each_tuple;
use crate::error::{Error, Result};
use crate::hom::Homomorphism;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn into_congruence(mut self) -> Congruence {
        let n = self.parent.len();
        let mut least = vec![usize::MAX; n];
        let labels = (0..n)
            .map(|x| {
                let r = self.find(x);
                if least[r] == usize::MAX {
                    least[r] = x;
                }
                least[r] as u32
            })
            .collect();
        Congruence { labels }
    }
}

/// A partition of `{0..n}` in canonical form: each element is labelled with
/// the least element of its block, so equal partitions compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    labels: Vec<u32>,
}

impl Congruence {
    pub fn bottom(n: usize) -> Self {
        Congruence {
            labels: (0..n as u32).collect(),
        }
    }

    pub fn top(n: usize) -> Self {
        Congruence { labels: vec![0; n] }
    }

    /// Partition with the given blocks; unlisted elements are singletons.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut uf = UnionFind::new(n);
        for block in blocks {
            for &x in block {
                if x >= n {
                    return Err(Error::ElementOutOfRange {
                        element: x,
                        size: n,
                    });
                }
                if seen[x] {
                    return Err(Error::NotACongruence(format!(
                        "element {x} appears in two blocks"
                    )));
                }
                seen[x] = true;
                uf.union(block[0], x);
            }
        }
        Ok(uf.into_congruence())
    }

    /// Kernel of a labelling: `x ~ y` iff `key[x] == key[y]`.
    pub fn from_keys<K: Eq + std::hash::Hash>(keys: &[K]) -> Self {
        let mut first = std::collections::HashMap::new();
        let labels = keys
            .iter()
            .enumerate()
            .map(|(i, k)| *first.entry(k).or_insert(i as u32))
            .collect();
        Congruence { labels }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn rep(&self, x: usize) -> usize {
        self.labels[x] as usize
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn is_bottom(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, &l)| l as usize == i)
    }

    pub fn is_top(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// Least elements of the blocks, ascending.
    pub fn representatives(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.rep(x) == x).collect()
    }

    pub fn block_count(&self) -> usize {
        self.representatives().len()
    }

    /// Blocks ordered by least element, each ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let reps = self.representatives();
        let mut blocks = vec![Vec::new(); reps.len()];
        for x in 0..self.size() {
            let b = reps.binary_search(&self.rep(x)).expect("representative");
            blocks[b].push(x);
        }
        blocks
    }

    /// Pairs `(x, rep(x))` for non-representatives; they generate the partition.
    pub fn spanning_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size())
            .filter(move |&x| self.rep(x) != x)
            .map(move |x| (x, self.rep(x)))
    }

    pub fn leq(&self, other: &Congruence) -> bool {
        debug_assert_eq!(self.size(), other.size());
        self.spanning_pairs().all(|(x, r)| other.related(x, r))
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let keys: Vec<(u32, u32)> = self
            .labels
            .iter()
            .copied()
            .zip(other.labels.iter().copied())
            .collect();
        Congruence::from_keys(&keys)
    }

    /// Join in the partition lattice; for congruences this is their join in
    /// the congruence lattice as well.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.size());
        for (x, r) in self.spanning_pairs().chain(other.spanning_pairs()) {
            uf.union(x, r);
        }
        uf.into_congruence()
    }

    /// Checks closure under every basic translation.
    pub fn check_compatible(&self, a: &FiniteAlgebra) -> Result<()> {
        if a.size() != self.size() {
            return Err(Error::MismatchedCarriers {
                expected: a.size(),
                found: self.size(),
            });
        }
        let mut args = Vec::new();
        for (x, r) in self.spanning_pairs() {
            let mut failure = None;
            for_each_translation(a, x, r, &mut args, |s, u, v, ctx| {
                if failure.is_none() && !self.related(u, v) {
                    failure = Some(format!(
                        "`{}` maps related {x}, {r} to unrelated {u}, {v} (arguments {ctx:?})",
                        a.signature().name(s)
                    ));
                }
            });
            if let Some(msg) = failure {
                return Err(Error::NotACongruence(msg));
            }
        }
        Ok(())
    }

    pub fn is_compatible(&self, a: &FiniteAlgebra) -> bool {
        self.check_compatible(a).is_ok()
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        if blocks.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, b) in blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Congruence({self})")
    }
}

/// Applies every basic translation `t(z) = f(c_1, .., z, .., c_k)` to the
/// pair `(x, y)`, calling `visit(symbol, t(x), t(y), context)`.
fn for_each_translation(
    a: &FiniteAlgebra,
    x: usize,
    y: usize,
    args: &mut Vec<usize>,
    mut visit: impl FnMut(usize, usize, usize, &[usize]),
) {
    let n = a.size();
    for s in 0..a.signature().len() {
        let k = a.signature().arity(s);
        for pos in 0..k {
            for_each_tuple(n, k - 1, |ctx| {
                args.clear();
                args.extend_from_slice(&ctx[..pos]);
                args.push(x);
                args.extend_from_slice(&ctx[pos..]);
                let u = a.apply(s, args);
                args[pos] = y;
                let v = a.apply(s, args);
                visit(s, u, v, ctx);
            });
        }
    }
}

/// Least congruence of `a` containing `pairs`.
///
/// Worklist form of the Mal'cev closure: a pair is pushed through every
/// basic translation exactly when it merged two classes, which is enough
/// for the resulting equivalence to be compatible.
pub fn cg(
    a: &FiniteAlgebra,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<Congruence> {
    let mut uf = UnionFind::new(a.size());
    let mut work = Vec::new();
    for (x, y) in pairs {
        a.check_element(x)?;
        a.check_element(y)?;
        if uf.union(x, y) {
            work.push((x, y));
        }
    }
    Ok(close_union_find(a, uf, work))
}

fn close_union_find(
    a: &FiniteAlgebra,
    mut uf: UnionFind,
    mut work: Vec<(usize, usize)>,
) -> Congruence {
    let mut args = Vec::new();
    let mut found = Vec::new();
    while let Some((x, y)) = work.pop() {
        found.clear();
        for_each_translation(a, x, y, &mut args, |_, u, v, _| {
            if u != v {
                found.push((u, v));
            }
        });
        for &(u, v) in &found {
            if uf.union(u, v) {
                work.push((u, v));
            }
        }
    }
    uf.into_congruence()
}

/// Congruence of the target generated by the image of `alpha`.
pub fn push_forward(
    f: &Homomorphism,
    target: &FiniteAlgebra,
    alpha: &Congruence,
) -> Result<Congruence> {
    check_size(alpha.size(), f.source_size())?;
    check_size(target.size(), f.target_size())?;
    let pairs: Vec<(usize, usize)> = alpha
        .spanning_pairs()
        .map(|(x, r)| (f.apply(x), f.apply(r)))
        .collect();
    cg(target, pairs)
}

/// Preimage `f^{-1}(beta)`.
pub fn pull_back(f: &Homomorphism, beta: &Congruence) -> Result<Congruence> {
    check_size(beta.size(), f.target_size())?;
    let keys: Vec<u32> = (0..f.source_size())
        .map(|x| beta.labels[f.apply(x)])
        .collect();
    Ok(Congruence::from_keys(&keys))
}

pub(crate) fn check_size(found: usize, expected: usize) -> Result<()> {
    if found != expected {
        Err(Error::MismatchedCarriers { expected, found })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    fn theta2() -> Congruence {
        Congruence::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap()
    }

    #[test]
    fn canonical_form() {
        let c = Congruence::from_blocks(5, &[vec![3, 1], vec![4, 2]]).unwrap();
        assert_eq!(c.labels(), &[0, 1, 2, 1, 2]);
        assert_eq!(c.to_string(), "{0},{1,3},{2,4}");
        assert_eq!(c.blocks().len(), 3);
        assert!(Congruence::from_blocks(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Congruence::from_blocks(3, &[vec![0, 5]]).is_err());
    }

    #[test]
    fn cg_on_z4() {
        let z4 = cyclic_group(4);
        assert_eq!(cg(&z4, [(0, 2)]).unwrap(), theta2());
        assert_eq!(cg(&z4, []).unwrap(), Congruence::bottom(4));
        assert_eq!(cg(&z4, [(0, 1)]).unwrap(), Congruence::top(4));
        assert!(cg(&z4, [(0, 4)]).is_err());
    }

    #[test]
    fn meet_and_join() {
        let a = Congruence::from_blocks(4, &[vec![0, 1]]).unwrap();
        let b = Congruence::from_blocks(4, &[vec![1, 2]]).unwrap();
        assert_eq!(
            a.join(&b),
            Congruence::from_blocks(4, &[vec![0, 1, 2]]).unwrap()
        );
        assert!(a.meet(&b).is_bottom());
        assert!(a.leq(&a.join(&b)));
        assert!(!a.leq(&b));
    }

    #[test]
    fn push_and_pull_along_mod2() {
        let z4 = cyclic_group(4);
        let z2 = cyclic_group(2);
        let f = Homomorphism::new(&z4, &z2, vec![0, 1, 0, 1]).unwrap();
        assert!(push_forward(&f, &z2, &theta2()).unwrap().is_bottom());
        assert!(push_forward(&f, &z2, &Congruence::top(4)).unwrap().is_top());
        assert_eq!(pull_back(&f, &Congruence::bottom(2)).unwrap(), theta2());
        assert!(pull_back(&f, &Congruence::top(2)).unwrap().is_top());
        // Galois connection at one point.
        assert!(push_forward(&f, &z2, &theta2())
            .unwrap()
            .leq(&Congruence::bottom(2)));
        assert!(theta2().leq(&pull_back(&f, &Congruence::bottom(2)).unwrap()));
    }

    #[test]
    fn compatibility_check_reports_failure() {
        let z4 = cyclic_group(4);
        assert!(theta2().is_compatible(&z4));
        let bad = Congruence::from_blocks(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(matches!(
            bad.check_compatible(&z4),
            Err(Error::NotACongruence(_))
        ));
    }
}
