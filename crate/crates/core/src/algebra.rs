//! Finite algebras stored as total operation tables over `{0..size}`.

use std::collections::HashSet;
use std::fmt;

use crate::budget::Budgets;
use crate::closure::{close, for_each_tuple};
use crate::congruence::Congruence;
use crate::error::{check_budget, Error, Result};
use crate::hom::Homomorphism;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

/// Ordered operation symbols with arities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    symbols: Vec<Symbol>,
}

impl Signature {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = (S, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (name, arity) in symbols {
            let name = name.into();
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateSymbol(name));
            }
            out.push(Symbol { name, arity });
        }
        Ok(Signature { symbols: out })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn arity(&self, symbol: usize) -> usize {
        self.symbols[symbol].arity
    }

    pub fn name(&self, symbol: usize) -> &str {
        &self.symbols[symbol].name
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn has_constants(&self) -> bool {
        self.symbols.iter().any(|s| s.arity == 0)
    }
}

/// A finite algebra with carrier `{0..size}` and one row-major table per
/// symbol (last argument varies fastest).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    signature: Signature,
    size: usize,
    tables: Vec<Vec<u32>>,
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteAlgebra")
            .field("size", &self.size)
            .field("signature", &self.signature.symbols)
            .finish()
    }
}

/// Validates raw tables and builds an algebra.
pub fn make_algebra(sig: Signature, size: usize, tables: Vec<Vec<usize>>) -> Result<FiniteAlgebra> {
    if tables.len() < sig.len() {
        return Err(Error::MissingTable(sig.name(tables.len()).to_string()));
    }
    if size == 0 {
        if let Some(c) = sig.symbols().iter().find(|s| s.arity == 0) {
            return Err(Error::EmptyWithConstant {
                symbol: c.name.clone(),
            });
        }
    }
    let mut stored = Vec::with_capacity(sig.len());
    for (sym, table) in sig.symbols().iter().zip(tables) {
        let expected = size
            .checked_pow(sym.arity as u32)
            .ok_or(Error::BudgetExceeded {
                what: "operation table entries",
                needed: u128::MAX,
                limit: usize::MAX as u128,
            })?;
        if table.len() != expected {
            return Err(Error::WrongTableLength {
                symbol: sym.name.clone(),
                expected,
                found: table.len(),
            });
        }
        if let Some((position, &value)) = table.iter().enumerate().find(|(_, &v)| v >= size) {
            return Err(Error::OutOfRangeEntry {
                symbol: sym.name.clone(),
                position,
                value,
                size,
            });
        }
        stored.push(table.into_iter().map(|v| v as u32).collect());
    }
    Ok(FiniteAlgebra {
        signature: sig,
        size,
        tables: stored,
    })
}

impl FiniteAlgebra {
    /// Builds tables by evaluating `op` on every argument tuple.
    pub fn from_fn(
        sig: Signature,
        size: usize,
        mut op: impl FnMut(usize, &[usize]) -> usize,
    ) -> Result<FiniteAlgebra> {
        let tables = (0..sig.len())
            .map(|s| {
                let mut table = Vec::new();
                for_each_tuple(size, sig.arity(s), |args| table.push(op(s, args)));
                table
            })
            .collect();
        make_algebra(sig, size, tables)
    }

    /// Trusted constructor for tables produced by closure computations.
    pub(crate) fn from_tables_unchecked(
        sig: Signature,
        size: usize,
        tables: Vec<Vec<u32>>,
    ) -> Self {
        debug_assert_eq!(sig.len(), tables.len());
        FiniteAlgebra {
            signature: sig,
            size,
            tables,
        }
    }

    /// The one-element algebra of a signature.
    pub fn trivial(sig: Signature) -> FiniteAlgebra {
        let tables = vec![vec![0u32]; sig.len()];
        FiniteAlgebra::from_tables_unchecked(sig, 1, tables)
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self, symbol: usize) -> &[u32] {
        &self.tables[symbol]
    }

    pub fn apply(&self, symbol: usize, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.signature.arity(symbol));
        let mut idx = 0usize;
        for &a in args {
            idx = idx * self.size + a;
        }
        self.tables[symbol][idx] as usize
    }

    pub fn same_signature(&self, other: &FiniteAlgebra) -> bool {
        self.signature == other.signature
    }

    pub(crate) fn check_element(&self, element: usize) -> Result<()> {
        if element >= self.size {
            Err(Error::ElementOutOfRange {
                element,
                size: self.size,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn table_entries(&self, size: usize) -> u128 {
        self.signature
            .symbols()
            .iter()
            .map(|s| crate::error::saturating_pow(size, s.arity))
            .fold(0u128, |a, b| a.saturating_add(b))
    }
}

/// A subuniverse together with its induced algebra and the inclusion map.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    /// Sorted elements of the subuniverse.
    pub elements: Vec<usize>,
    pub algebra: FiniteAlgebra,
    pub inclusion: Homomorphism,
}

/// Least subuniverse of `a` containing `seed`.
pub fn subuniverse_generated(a: &FiniteAlgebra, seed: &[usize]) -> Result<Vec<usize>> {
    for &s in seed {
        a.check_element(s)?;
    }
    let closure = close(
        a.signature(),
        seed.iter().copied(),
        usize::MAX,
        |s, args| {
            let args: Vec<usize> = args.iter().map(|&&x| x).collect();
            a.apply(s, &args)
        },
    )?;
    let mut elements = closure.elements;
    elements.sort_unstable();
    Ok(elements)
}

/// Algebra induced on a subuniverse; `elements` must be sorted and closed.
pub(crate) fn induced(a: &FiniteAlgebra, elements: &[usize]) -> FiniteAlgebra {
    let mut pos = vec![u32::MAX; a.size()];
    for (i, &e) in elements.iter().enumerate() {
        pos[e] = i as u32;
    }
    let sig = a.signature().clone();
    let mut tables = Vec::with_capacity(sig.len());
    let mut lifted = Vec::new();
    for s in 0..sig.len() {
        let mut table = Vec::new();
        for_each_tuple(elements.len(), sig.arity(s), |args| {
            lifted.clear();
            lifted.extend(args.iter().map(|&i| elements[i]));
            let r = pos[a.apply(s, &lifted)];
            debug_assert_ne!(r, u32::MAX, "subset is not closed");
            table.push(r);
        });
        tables.push(table);
    }
    FiniteAlgebra::from_tables_unchecked(sig, elements.len(), tables)
}

pub fn subalgebra_generated(a: &FiniteAlgebra, seed: &[usize]) -> Result<Subalgebra> {
    let elements = subuniverse_generated(a, seed)?;
    Ok(subalgebra_on(a, elements))
}

pub(crate) fn subalgebra_on(a: &FiniteAlgebra, elements: Vec<usize>) -> Subalgebra {
    let algebra = induced(a, &elements);
    let inclusion = Homomorphism::trusted(algebra.size(), a.size(), elements.clone());
    Subalgebra {
        elements,
        algebra,
        inclusion,
    }
}

/// Quotient by a congruence: carrier is the blocks ordered by least element.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: FiniteAlgebra,
    /// Natural map onto the quotient.
    pub natural: Homomorphism,
}

pub fn quotient(a: &FiniteAlgebra, theta: &Congruence) -> Result<Quotient> {
    theta.check_compatible(a)?;
    Ok(quotient_unchecked(a, theta))
}

pub(crate) fn quotient_unchecked(a: &FiniteAlgebra, theta: &Congruence) -> Quotient {
    let reps = theta.representatives();
    let block_of: Vec<usize> = (0..a.size())
        .map(|x| reps.binary_search(&theta.rep(x)).expect("representative"))
        .collect();
    let sig = a.signature().clone();
    let mut tables = Vec::with_capacity(sig.len());
    let mut lifted = Vec::new();
    for s in 0..sig.len() {
        let mut table = Vec::new();
        for_each_tuple(reps.len(), sig.arity(s), |args| {
            lifted.clear();
            lifted.extend(args.iter().map(|&i| reps[i]));
            table.push(block_of[a.apply(s, &lifted)] as u32);
        });
        tables.push(table);
    }
    let algebra = FiniteAlgebra::from_tables_unchecked(sig, reps.len(), tables);
    let natural = Homomorphism::trusted(a.size(), algebra.size(), block_of);
    Quotient { algebra, natural }
}

/// All subuniverses, sorted by size and then lexicographically.
pub fn enumerate_subuniverses(a: &FiniteAlgebra, budgets: &Budgets) -> Result<Vec<Vec<usize>>> {
    check_budget(
        "subuniverse enumeration (algebra size)",
        a.size() as u128,
        budgets.max_subuniverse_size as u128,
    )?;
    check_budget(
        "subuniverse enumeration (algebra size)",
        a.size() as u128,
        30,
    )?;
    let n = a.size();
    let mut found: HashSet<Vec<usize>> = HashSet::new();
    for mask in 0u64..(1u64 << n) {
        let seed: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        found.insert(subuniverse_generated(a, &seed)?);
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(out)
}

/// Greedy small generating set: repeatedly adds the least element not yet
/// generated.
pub fn generating_set(a: &FiniteAlgebra) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut covered = subuniverse_generated(a, &gens).expect("in range");
    while covered.len() < a.size() {
        let next = (0..a.size())
            .find(|x| covered.binary_search(x).is_err())
            .expect("missing element");
        gens.push(next);
        covered = subuniverse_generated(a, &gens).expect("in range");
    }
    // Drop generators that later ones made redundant.
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if subuniverse_generated(a, &rest).expect("in range").len() == a.size() {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens
}
