//! Semi-naive closure of a seed set under the operations of a signature.
//!
//! Elements are numbered in discovery order: seeds first, then constants,
//! then one layer per round. Within a round, symbols are visited in
//! signature order. Every argument tuple over the final element list is
//! evaluated exactly once, so derivations are of minimal depth.

use rustc_hash::FxHashMap;
use std::hash::Hash;

use crate::algebra::Signature;
use crate::error::{check_budget, Result};

/// How an element was first reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    Seed(usize),
    Op { symbol: usize, args: Vec<usize> },
}

#[derive(Debug, Clone)]
pub(crate) struct Closure<E> {
    pub elements: Vec<E>,
    pub index: FxHashMap<E, usize>,
    /// Per symbol, flattened `(arguments, result)` rows.
    records: Option<Vec<Vec<u32>>>,
    pub derivations: Vec<Derivation>,
}

impl<E: Clone + Eq + Hash> Closure<E> {
    fn insert(&mut self, e: E, how: Derivation) {
        if !self.index.contains_key(&e) {
            self.index.insert(e.clone(), self.elements.len());
            self.elements.push(e);
            self.derivations.push(how);
        }
    }
}

/// Visits every tuple in `[0, n)^k` in lexicographic order.
pub(crate) fn for_each_tuple(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 {
        f(&[]);
        return;
    }
    if n == 0 {
        return;
    }
    let mut t = vec![0usize; k];
    loop {
        f(&t);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Visits every tuple in `[0, hi)^k` with at least one coordinate in
/// `[lo, hi)`, each exactly once.
fn for_each_new_tuple(lo: usize, hi: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 || lo >= hi {
        return;
    }
    let mut t = vec![0usize; k];
    // The first coordinate landing in [lo, hi) sits at position p.
    for p in 0..k {
        if p > 0 && lo == 0 {
            break;
        }
        let ranges: Vec<(usize, usize)> = (0..k)
            .map(|i| match i.cmp(&p) {
                std::cmp::Ordering::Less => (0, lo),
                std::cmp::Ordering::Equal => (lo, hi),
                std::cmp::Ordering::Greater => (0, hi),
            })
            .collect();
        for (i, r) in ranges.iter().enumerate() {
            t[i] = r.0;
        }
        'odometer: loop {
            f(&t);
            let mut i = k;
            loop {
                if i == 0 {
                    break 'odometer;
                }
                i -= 1;
                t[i] += 1;
                if t[i] < ranges[i].1 {
                    break;
                }
                t[i] = ranges[i].0;
            }
        }
    }
}

/// Closes `seeds` under all operations, failing once more than `limit`
/// elements appear.
pub(crate) fn close<E, F>(
    sig: &Signature,
    seeds: impl IntoIterator<Item = E>,
    limit: usize,
    apply: F,
) -> Result<Closure<E>>
where
    E: Clone + Eq + Hash,
    F: FnMut(usize, &[&E]) -> E,
{
    close_impl(sig, seeds, limit, apply, false)
}

/// Like [`close`], also returning the operation tables of the closure.
pub(crate) fn close_with_tables<E, F>(
    sig: &Signature,
    seeds: impl IntoIterator<Item = E>,
    limit: usize,
    apply: F,
) -> Result<(Closure<E>, Vec<Vec<u32>>)>
where
    E: Clone + Eq + Hash,
    F: FnMut(usize, &[&E]) -> E,
{
    let mut c = close_impl(sig, seeds, limit, apply, true)?;
    let n = c.elements.len();
    let records = c.records.take().expect("recorded");
    let tables = records
        .iter()
        .enumerate()
        .map(|(s, flat)| {
            let k = sig.arity(s);
            let mut table = vec![0u32; n.pow(k as u32)];
            for chunk in flat.chunks(k + 1) {
                let idx = chunk[..k]
                    .iter()
                    .fold(0usize, |acc, &x| acc * n + x as usize);
                table[idx] = chunk[k];
            }
            table
        })
        .collect();
    Ok((c, tables))
}

fn close_impl<E, F>(
    sig: &Signature,
    seeds: impl IntoIterator<Item = E>,
    limit: usize,
    mut apply: F,
    record: bool,
) -> Result<Closure<E>>
where
    E: Clone + Eq + Hash,
    F: FnMut(usize, &[&E]) -> E,
{
    let mut c = Closure {
        elements: Vec::new(),
        index: FxHashMap::default(),
        derivations: Vec::new(),
        records: record.then(|| vec![Vec::new(); sig.len()]),
    };
    for (i, s) in seeds.into_iter().enumerate() {
        c.insert(s, Derivation::Seed(i));
    }
    for s in 0..sig.len() {
        if sig.arity(s) == 0 {
            let e = apply(s, &[]);
            let at = c.index.get(&e).copied().unwrap_or(c.elements.len());
            if let Some(r) = c.records.as_mut() {
                r[s].push(at as u32);
            }
            c.insert(
                e,
                Derivation::Op {
                    symbol: s,
                    args: Vec::new(),
                },
            );
        }
    }
    check_budget(
        "generated subalgebra size",
        c.elements.len() as u128,
        limit as u128,
    )?;
    let mut lo = 0;
    while lo < c.elements.len() {
        let hi = c.elements.len();
        for s in 0..sig.len() {
            let k = sig.arity(s);
            let mut fresh: Vec<(E, Vec<usize>)> = Vec::new();
            let mut fresh_index: FxHashMap<E, usize> = FxHashMap::default();
            let mut overflow = false;
            let base = c.elements.len();
            let mut rec = c.records.as_mut().map(|r| std::mem::take(&mut r[s]));
            for_each_new_tuple(lo, hi, k, |t| {
                if overflow {
                    return;
                }
                let args: Vec<&E> = t.iter().map(|&i| &c.elements[i]).collect();
                let e = apply(s, &args);
                let at = match c.index.get(&e).or_else(|| fresh_index.get(&e)) {
                    Some(&at) => at,
                    None => {
                        let at = base + fresh.len();
                        fresh_index.insert(e.clone(), at);
                        fresh.push((e, t.to_vec()));
                        if at + 1 > limit {
                            overflow = true;
                        }
                        at
                    }
                };
                if let Some(r) = rec.as_mut() {
                    r.extend(t.iter().map(|&x| x as u32));
                    r.push(at as u32);
                }
            });
            if let (Some(r), Some(records)) = (rec, c.records.as_mut()) {
                records[s] = r;
            }
            for (e, args) in fresh {
                c.insert(e, Derivation::Op { symbol: s, args });
            }
            check_budget(
                "generated subalgebra size",
                c.elements.len() as u128,
                limit as u128,
            )?;
        }
        lo = hi;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_lexicographic() {
        let mut seen = Vec::new();
        for_each_tuple(2, 2, |t| seen.push(t.to_vec()));
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let mut count = 0;
        for_each_tuple(0, 0, |_| count += 1);
        assert_eq!(count, 1);
        for_each_tuple(0, 2, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn new_tuples_partition_the_cube() {
        for k in 1..4 {
            let mut all = std::collections::HashSet::new();
            let bounds = [0, 2, 3, 5];
            for w in bounds.windows(2) {
                for_each_new_tuple(w[0], w[1], k, |t| {
                    assert!(t.iter().all(|&x| x < w[1]));
                    assert!(t.iter().any(|&x| x >= w[0]));
                    assert!(all.insert(t.to_vec()), "duplicate {t:?}");
                });
            }
            assert_eq!(all.len(), 5usize.pow(k as u32));
        }
    }
}
