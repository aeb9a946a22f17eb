//! Brute-force reference implementations. Nothing here shares code with
//! the library beyond table accessors and constructors.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use laxcal_core::curated::*;
use laxcal_core::{Congruence, FiniteAlgebra};

/// Every set partition of `{0..n}` as a label vector (restricted growth strings).
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=max + 1 {
            cur[i] = v;
            rec(i + 1, max.max(v), cur, out);
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(1, 0, &mut cur, &mut out);
    out
}

pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &out {
            for x in 0..n {
                let mut t = t.clone();
                t.push(x);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Compatibility by checking every pair of related argument tuples.
pub fn compatible(a: &FiniteAlgebra, labels: &[usize]) -> bool {
    for s in 0..a.signature().len() {
        let k = a.signature().arity(s);
        let ts = tuples(a.size(), k);
        for x in &ts {
            for y in &ts {
                if x.iter().zip(y).all(|(&p, &q)| labels[p] == labels[q])
                    && labels[a.apply(s, x)] != labels[a.apply(s, y)]
                {
                    return false;
                }
            }
        }
    }
    true
}

pub fn to_congruence(labels: &[usize]) -> Congruence {
    Congruence::from_keys(labels)
}

pub fn brute_con(a: &FiniteAlgebra) -> Vec<Congruence> {
    let mut v: Vec<Congruence> = all_partitions(a.size())
        .into_iter()
        .filter(|p| compatible(a, p))
        .map(|p| to_congruence(&p))
        .collect();
    v.sort();
    v
}

/// Least compatible partition containing `pairs`, by filtering all partitions.
pub fn brute_cg(a: &FiniteAlgebra, pairs: &[(usize, usize)]) -> Congruence {
    let cands: Vec<Congruence> = brute_con(a)
        .into_iter()
        .filter(|c| pairs.iter().all(|&(x, y)| c.related(x, y)))
        .collect();
    let least = cands
        .iter()
        .find(|c| cands.iter().all(|d| c.leq(d)))
        .expect("least element exists");
    least.clone()
}

/// Every map `A -> B` that preserves all operations.
pub fn brute_homs(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Vec<Vec<usize>> {
    tuples(b.size(), a.size())
        .into_iter()
        .filter(|m| {
            (0..a.signature().len()).all(|s| {
                let k = a.signature().arity(s);
                tuples(a.size(), k).iter().all(|t| {
                    let img: Vec<usize> = t.iter().map(|&x| m[x]).collect();
                    m[a.apply(s, t)] == b.apply(s, &img)
                })
            })
        })
        .collect()
}

/// Closure of `seed` under the operations, by naive fixpoint.
pub fn brute_subuniverse(a: &FiniteAlgebra, seed: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    loop {
        let before = set.len();
        let cur: Vec<usize> = set.iter().copied().collect();
        for s in 0..a.signature().len() {
            for t in tuples(cur.len(), a.signature().arity(s)) {
                let args: Vec<usize> = t.iter().map(|&i| cur[i]).collect();
                set.insert(a.apply(s, &args));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

/// Coordinatewise product of algebras in one signature; element `i` of
/// the result is the tuple `coords[i]`.
pub fn brute_product(
    sig_of: &FiniteAlgebra,
    factors: &[&FiniteAlgebra],
) -> (Vec<Vec<usize>>, FiniteAlgebra) {
    let mut coords = vec![Vec::new()];
    for f in factors {
        let mut next = Vec::new();
        for c in &coords {
            for x in 0..f.size() {
                let mut c = c.clone();
                c.push(x);
                next.push(c);
            }
        }
        coords = next;
    }
    let index: HashMap<Vec<usize>, usize> = coords
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let cs = coords.clone();
    let a = FiniteAlgebra::from_fn(sig_of.signature().clone(), coords.len(), |s, args| {
        let v: Vec<usize> = (0..factors.len())
            .map(|j| {
                let col: Vec<usize> = args.iter().map(|&x| cs[x][j]).collect();
                factors[j].apply(s, &col)
            })
            .collect();
        index[&v]
    })
    .unwrap();
    (coords, a)
}

/// Whether the subalgebra of `P × B` generated by the pairs
/// `(p_i, g_i)` is the graph of a function onto `B`.
pub fn relation_is_onto_function(
    p: &FiniteAlgebra,
    b: &FiniteAlgebra,
    lift: &[usize],
    gens: &[usize],
) -> bool {
    let mut rel: HashSet<(usize, usize)> = lift.iter().copied().zip(gens.iter().copied()).collect();
    loop {
        let cur: Vec<(usize, usize)> = rel.iter().copied().collect();
        let before = rel.len();
        for s in 0..p.signature().len() {
            for t in tuples(cur.len(), p.signature().arity(s)) {
                let xs: Vec<usize> = t.iter().map(|&i| cur[i].0).collect();
                let ys: Vec<usize> = t.iter().map(|&i| cur[i].1).collect();
                rel.insert((p.apply(s, &xs), b.apply(s, &ys)));
            }
        }
        if rel.len() == before {
            break;
        }
    }
    let mut f: HashMap<usize, usize> = HashMap::new();
    for &(x, y) in &rel {
        if *f.entry(x).or_insert(y) != y {
            return false;
        }
    }
    f.values().copied().collect::<HashSet<_>>().len() == b.size()
}

/// `B ∈ HSP(K)` witnessed inside products of at most two members.
pub fn brute_in_hsp2(b: &FiniteAlgebra, class: &[FiniteAlgebra]) -> bool {
    let mut products: Vec<Vec<&FiniteAlgebra>> = class.iter().map(|a| vec![a]).collect();
    for (i, x) in class.iter().enumerate() {
        for y in &class[i..] {
            products.push(vec![x, y]);
        }
    }
    for factors in products {
        let (_, p) = brute_product(b, &factors);
        let gens = smallest_generating_set(b);
        let r = gens.len();
        for lift in tuples(p.size(), r) {
            if relation_is_onto_function(&p, b, &lift, &gens) {
                return true;
            }
        }
    }
    false
}

/// A generating set of least size, first in lexicographic order.
pub fn smallest_generating_set(b: &FiniteAlgebra) -> Vec<usize> {
    let mut subsets: Vec<Vec<usize>> = (0u32..(1 << b.size()))
        .map(|m| (0..b.size()).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    subsets.sort_by(|x: &Vec<usize>, y| x.len().cmp(&y.len()).then(x.cmp(y)));
    subsets
        .into_iter()
        .find(|s| brute_subuniverse(b, s).len() == b.size())
        .expect("the carrier generates")
}

pub fn named_suite() -> Vec<(&'static str, FiniteAlgebra)> {
    vec![
        ("Z2", cyclic_group(2)),
        ("Z3", cyclic_group(3)),
        ("Z4", cyclic_group(4)),
        ("V4", klein_four()),
        ("S3", symmetric_group_3()),
        ("SL2", semilattice(2)),
        ("SL3", semilattice(3)),
        ("L2", two_element_lattice()),
        ("G3", groupoid_g3()),
    ]
}

pub fn theta2() -> Congruence {
    Congruence::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap()
}

pub fn a3() -> Congruence {
    Congruence::from_blocks(6, &[vec![0, 4, 5], vec![1, 2, 3]]).unwrap()
}

pub fn bell(n: usize) -> usize {
    all_partitions(n).len()
}
