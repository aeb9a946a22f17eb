//! Congruence lattices, modularity, monoliths.

use std::collections::HashMap;

use crate::algebra::FiniteAlgebra;
use crate::budget::Budgets;
use crate::congruence::{cg, Congruence};
use crate::error::{check_budget, Error, Result};

/// A finite lattice presented by element indices.
pub trait Lattice {
    fn len(&self) -> usize;
    fn leq(&self, x: usize, y: usize) -> bool;
    fn meet(&self, x: usize, y: usize) -> usize;
    fn join(&self, x: usize, y: usize) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Checks `x ≤ z ⇒ x ∨ (y ∧ z) = (x ∨ y) ∧ z` over all triples.
pub fn is_modular_lattice<L: Lattice + ?Sized>(l: &L) -> bool {
    let n = l.len();
    for x in 0..n {
        for z in 0..n {
            if x == z || !l.leq(x, z) {
                continue;
            }
            for y in 0..n {
                if l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z) {
                    return false;
                }
            }
        }
    }
    true
}

/// An explicit lattice given by its order relation.
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl FiniteLattice {
    /// Builds the lattice from the covering pairs `(lower, upper)` of a poset
    /// on `{0..n}`; fails if some pair lacks a meet or join.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::ElementOutOfRange {
                    element: a.max(b),
                    size: n,
                });
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    let row = leq[k].clone();
                    for (cell, &up) in leq[i].iter_mut().zip(&row) {
                        *cell |= up;
                    }
                }
            }
        }
        let bound = |upper: bool, x: usize, y: usize| -> Option<usize> {
            let cands: Vec<usize> = (0..n)
                .filter(|&z| {
                    if upper {
                        leq[x][z] && leq[y][z]
                    } else {
                        leq[z][x] && leq[z][y]
                    }
                })
                .collect();
            cands.iter().copied().find(|&z| {
                cands
                    .iter()
                    .all(|&w| if upper { leq[z][w] } else { leq[w][z] })
            })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                meet[x][y] = bound(false, x, y)
                    .ok_or_else(|| Error::InvariantViolated(format!("{x} and {y} have no meet")))?;
                join[x][y] = bound(true, x, y)
                    .ok_or_else(|| Error::InvariantViolated(format!("{x} and {y} have no join")))?;
            }
        }
        Ok(FiniteLattice { leq, meet, join })
    }
}

impl Lattice for FiniteLattice {
    fn len(&self) -> usize {
        self.leq.len()
    }
    fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }
    fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }
    fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }
}

/// All congruences of one algebra, ⊥ first and ⊤ last.
///
/// Sorted by descending number of blocks, then by canonical labels.
#[derive(Debug, Clone)]
pub struct CongruenceLattice {
    carrier: usize,
    elements: Vec<Congruence>,
    index: HashMap<Congruence, usize>,
}

fn lattice_order(a: &Congruence, b: &Congruence) -> std::cmp::Ordering {
    b.block_count().cmp(&a.block_count()).then_with(|| a.cmp(b))
}

/// Principal congruences closed under joins.
pub fn con_lattice(a: &FiniteAlgebra, budgets: &Budgets) -> Result<CongruenceLattice> {
    check_budget(
        "congruence lattice (algebra size)",
        a.size() as u128,
        budgets.max_lattice_size as u128,
    )?;
    con_lattice_unbounded(a)
}

pub(crate) fn con_lattice_unbounded(a: &FiniteAlgebra) -> Result<CongruenceLattice> {
    let n = a.size();
    let mut principal = Vec::new();
    let mut seen: HashMap<Congruence, ()> = HashMap::new();
    for x in 0..n {
        for y in x + 1..n {
            let c = cg(a, [(x, y)])?;
            if seen.insert(c.clone(), ()).is_none() {
                principal.push(c);
            }
        }
    }
    let mut elements = vec![Congruence::bottom(n)];
    let mut index = HashMap::new();
    index.insert(Congruence::bottom(n), 0);
    let mut cursor = 0;
    for p in &principal {
        if !index.contains_key(p) {
            index.insert(p.clone(), elements.len());
            elements.push(p.clone());
        }
    }
    while cursor < elements.len() {
        let current = elements[cursor].clone();
        for p in &principal {
            let j = current.join(p);
            if !index.contains_key(&j) {
                index.insert(j.clone(), elements.len());
                elements.push(j);
            }
        }
        cursor += 1;
    }
    elements.sort_by(lattice_order);
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    Ok(CongruenceLattice {
        carrier: n,
        elements,
        index,
    })
}

impl CongruenceLattice {
    pub fn carrier_size(&self) -> usize {
        self.carrier
    }

    pub fn elements(&self) -> &[Congruence] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Congruence {
        &self.elements[i]
    }

    pub fn index_of(&self, c: &Congruence) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    /// Upper covers of element `i`, ascending by index.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        let x = &self.elements[i];
        let above: Vec<usize> = (0..self.len())
            .filter(|&j| j != i && x.leq(&self.elements[j]))
            .collect();
        above
            .iter()
            .copied()
            .filter(|&j| {
                !above
                    .iter()
                    .any(|&k| k != j && self.elements[k].leq(&self.elements[j]))
            })
            .collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        if self.len() <= 1 {
            return Vec::new();
        }
        self.upper_covers(0)
    }

    pub fn coatoms(&self) -> Vec<usize> {
        let top = self.top();
        (0..top)
            .filter(|&i| self.upper_covers(i) == vec![top])
            .collect()
    }

    /// Covering pairs `(lower, upper)` of the Hasse diagram.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.upper_covers(i).into_iter().map(move |j| (i, j)))
            .collect()
    }
}

impl Lattice for CongruenceLattice {
    fn len(&self) -> usize {
        self.elements.len()
    }
    fn leq(&self, x: usize, y: usize) -> bool {
        self.elements[x].leq(&self.elements[y])
    }
    fn meet(&self, x: usize, y: usize) -> usize {
        self.index[&self.elements[x].meet(&self.elements[y])]
    }
    fn join(&self, x: usize, y: usize) -> usize {
        self.index[&self.elements[x].join(&self.elements[y])]
    }
}

/// Subdirect irreducibility and the monolith.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiStatus {
    pub is_si: bool,
    pub monolith: Option<Congruence>,
}

pub fn monolith_and_si(a: &FiniteAlgebra, budgets: &Budgets) -> Result<SiStatus> {
    let l = con_lattice(a, budgets)?;
    Ok(si_from_lattice(&l))
}

pub fn si_from_lattice(l: &CongruenceLattice) -> SiStatus {
    let atoms = l.atoms();
    if l.carrier_size() < 2 || atoms.len() != 1 {
        return SiStatus {
            is_si: false,
            monolith: None,
        };
    }
    let m = l.get(atoms[0]).clone();
    debug_assert!(l.elements()[1..].iter().all(|c| m.leq(c)));
    SiStatus {
        is_si: true,
        monolith: Some(m),
    }
}
