//! Relatively free algebras of `HSP(K)` for a finite class `K` of finite
//! algebras.
//!
//! `F(n)` is realized inside the product of `A^(A^n)` over `A ∈ K`: one
//! coordinate per assignment of the `n` generators into a member, and the
//! `i`-th generator is the projection onto argument `i`. Elements are
//! hash-consed coordinate vectors generated breadth-first, so every element
//! carries a term of minimal depth.

use std::fmt;

use crate::algebra::FiniteAlgebra;
use crate::budget::Budgets;
use crate::closure::{close_with_tables, for_each_tuple, Derivation};
use crate::error::{check_budget, saturating_pow, Error, Result};
use crate::hom::Homomorphism;
use crate::term::Term;

#[derive(Debug, Clone)]
pub struct FreePresentation {
    generator_names: Vec<String>,
    class: Vec<FiniteAlgebra>,
    algebra: FiniteAlgebra,
    /// Element of `F` for each generator (equal entries when the variety
    /// collapses generators).
    generators: Vec<usize>,
    derivations: Vec<Derivation>,
    coordinates: Vec<Vec<u32>>,
    /// Class member owning each coordinate.
    coordinate_owner: Vec<usize>,
}

/// An identity valid in `F` that fails in the target under the assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    pub lhs: Term,
    pub rhs: Term,
    pub rendered: String,
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rendered)
    }
}

#[derive(Debug, Clone)]
pub enum Extension {
    Homomorphism(Homomorphism),
    Refuted(Refutation),
}

pub fn free_algebra(
    class: &[FiniteAlgebra],
    n: usize,
    budgets: &Budgets,
) -> Result<FreePresentation> {
    let names = (0..n).map(|i| format!("x{i}")).collect();
    free_algebra_named(class, names, budgets)
}

pub fn free_algebra_named(
    class: &[FiniteAlgebra],
    names: Vec<String>,
    budgets: &Budgets,
) -> Result<FreePresentation> {
    let first = class.first().ok_or(Error::EmptyClass)?;
    if class.iter().any(|a| !a.same_signature(first)) {
        return Err(Error::SignatureMismatch);
    }
    let sig = first.signature().clone();
    let n = names.len();
    let coords = class
        .iter()
        .map(|a| saturating_pow(a.size(), n))
        .fold(0u128, |x, y| x.saturating_add(y));
    check_budget(
        "free algebra coordinates",
        coords,
        budgets.max_free_coordinates,
    )?;
    let coords = coords as usize;

    let mut owner = Vec::with_capacity(coords);
    let mut seeds = vec![Vec::with_capacity(coords); n];
    for (m, a) in class.iter().enumerate() {
        for_each_tuple(a.size(), n, |t| {
            owner.push(m);
            for (i, seed) in seeds.iter_mut().enumerate() {
                seed.push(t[i] as u32);
            }
        });
    }
    let memory_cap =
        (budgets.max_table_entries / coords.max(1) as u128).min(usize::MAX as u128) as usize;
    // Largest size whose tables fit both the entry and the work budget.
    let fits = |size: usize| {
        let entries = first.table_entries(size);
        entries <= budgets.max_table_entries
            && entries.saturating_mul(coords as u128) <= budgets.max_free_work
    };
    let (mut lo, mut hi) = (1usize, budgets.max_free_size.min(memory_cap.max(1)));
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let limit = lo;
    // Coordinates of one member are contiguous.
    let mut ranges: Vec<(usize, usize, usize)> = Vec::new();
    let mut start = 0;
    for (m, a) in class.iter().enumerate() {
        let len = a.size().pow(n as u32);
        ranges.push((start, start + len, m));
        start += len;
    }
    let apply = |s: usize, args: &[&Vec<u32>]| -> Vec<u32> {
        let mut out = vec![0u32; coords];
        for &(lo, hi, m) in &ranges {
            let a = &class[m];
            let (table, size) = (a.table(s), a.size());
            let out = &mut out[lo..hi];
            match args {
                [] => out.fill(table[0]),
                [x] => {
                    for (o, &x) in out.iter_mut().zip(&x[lo..hi]) {
                        *o = table[x as usize];
                    }
                }
                [x, y] => {
                    for ((o, &x), &y) in out.iter_mut().zip(&x[lo..hi]).zip(&y[lo..hi]) {
                        *o = table[x as usize * size + y as usize];
                    }
                }
                _ => {
                    for (i, o) in out.iter_mut().enumerate() {
                        let idx = args
                            .iter()
                            .fold(0usize, |acc, v| acc * size + v[lo + i] as usize);
                        *o = table[idx];
                    }
                }
            }
        }
        out
    };
    let (closure, tables) = close_with_tables(&sig, seeds.clone(), limit, apply)?;
    let size = closure.elements.len();
    check_budget(
        "free algebra table entries",
        first.table_entries(size),
        budgets.max_table_entries,
    )?;
    let generators = seeds.iter().map(|s| closure.index[s]).collect();
    Ok(FreePresentation {
        generator_names: names,
        class: class.to_vec(),
        algebra: FiniteAlgebra::from_tables_unchecked(sig, size, tables),
        generators,
        derivations: closure.derivations,
        coordinates: closure.elements,
        coordinate_owner: owner,
    })
}

impl FreePresentation {
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn class(&self) -> &[FiniteAlgebra] {
        &self.class
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator(&self, i: usize) -> usize {
        self.generators[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Coordinate vector of an element inside the product of class members.
    pub fn coordinates(&self, element: usize) -> &[u32] {
        &self.coordinates[element]
    }

    /// Class member index of every coordinate.
    pub fn coordinate_owner(&self) -> &[usize] {
        &self.coordinate_owner
    }

    /// Minimal-depth term naming `element`.
    pub fn term(&self, element: usize) -> Term {
        match &self.derivations[element] {
            Derivation::Seed(i) => Term::Var(*i),
            Derivation::Op { symbol, args } => {
                Term::Op(*symbol, args.iter().map(|&a| self.term(a)).collect())
            }
        }
    }

    pub fn render(&self, t: &Term) -> String {
        t.display(self.algebra.signature(), &self.generator_names)
            .to_string()
    }

    /// Extends a generator assignment into `d` to a map `F -> d`, returning
    /// either the homomorphism or an identity of `F` that `d` violates.
    pub fn extend(&self, d: &FiniteAlgebra, assignment: &[usize]) -> Result<Extension> {
        if !d.same_signature(&self.algebra) {
            return Err(Error::SignatureMismatch);
        }
        if assignment.len() != self.generators.len() {
            return Err(Error::MismatchedCarriers {
                expected: self.generators.len(),
                found: assignment.len(),
            });
        }
        for &v in assignment {
            d.check_element(v)?;
        }
        let mut map = vec![0usize; self.algebra.size()];
        let mut args = Vec::new();
        for (e, how) in self.derivations.iter().enumerate() {
            map[e] = match how {
                Derivation::Seed(j) => assignment[*j],
                Derivation::Op { symbol, args: from } => {
                    args.clear();
                    args.extend(from.iter().map(|&k| map[k]));
                    d.apply(*symbol, &args)
                }
            };
        }
        for (i, &g) in self.generators.iter().enumerate() {
            if map[g] != assignment[i] {
                return Ok(Extension::Refuted(
                    self.refutation(Term::Var(i), self.term(g)),
                ));
            }
        }
        let h = Homomorphism::trusted(self.algebra.size(), d.size(), map);
        match h.validate(&self.algebra, d) {
            Ok(()) => Ok(Extension::Homomorphism(h)),
            Err(Error::NotAHomomorphism { symbol, args }) => {
                let s = self.algebra.signature().position(&symbol).expect("symbol");
                let result = self.algebra.apply(s, &args);
                let lhs = Term::Op(s, args.iter().map(|&a| self.term(a)).collect());
                Ok(Extension::Refuted(self.refutation(lhs, self.term(result))))
            }
            Err(e) => Err(e),
        }
    }

    /// Like [`extend`](Self::extend) but maps a refutation to
    /// [`Error::NotInVariety`].
    pub fn eval(&self, d: &FiniteAlgebra, assignment: &[usize]) -> Result<Homomorphism> {
        match self.extend(d, assignment)? {
            Extension::Homomorphism(h) => Ok(h),
            Extension::Refuted(r) => Err(Error::NotInVariety(format!("identity {r} fails"))),
        }
    }

    fn refutation(&self, lhs: Term, rhs: Term) -> Refutation {
        let rendered = format!("{} = {}", self.render(&lhs), self.render(&rhs));
        Refutation { lhs, rhs, rendered }
    }
}
