//! Direct products with mixed-radix element encoding.

use crate::algebra::{FiniteAlgebra, Signature};
use crate::budget::Budgets;
use crate::closure::for_each_tuple;
use crate::error::{check_budget, Error, Result};
use crate::hom::Homomorphism;

/// A direct product. Element `i` encodes the tuple whose first coordinate
/// is most significant, so index order is lexicographic tuple order.
#[derive(Debug, Clone)]
pub struct ProductAlgebra {
    factors: Vec<FiniteAlgebra>,
    algebra: FiniteAlgebra,
    projections: Vec<Homomorphism>,
}

impl ProductAlgebra {
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn factors(&self) -> &[FiniteAlgebra] {
        &self.factors
    }

    pub fn projections(&self) -> &[Homomorphism] {
        &self.projections
    }

    pub fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (i, f) in self.factors.iter().enumerate().rev() {
            out[i] = x % f.size();
            x /= f.size();
        }
        out
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        encode(&self.factors, coords)
    }
}

fn encode(factors: &[FiniteAlgebra], coords: &[usize]) -> usize {
    coords
        .iter()
        .zip(factors)
        .fold(0, |acc, (&c, f)| acc * f.size() + c)
}

pub fn direct_product(
    sig: &Signature,
    factors: &[&FiniteAlgebra],
    budgets: &Budgets,
) -> Result<ProductAlgebra> {
    if factors.iter().any(|f| f.signature() != sig) {
        return Err(Error::SignatureMismatch);
    }
    let size = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.size()))
        .ok_or(Error::BudgetExceeded {
            what: "product size",
            needed: u128::MAX,
            limit: usize::MAX as u128,
        })?;
    let owned: Vec<FiniteAlgebra> = factors.iter().map(|&f| f.clone()).collect();
    let probe = FiniteAlgebra::trivial(sig.clone());
    check_budget(
        "product table entries",
        probe.table_entries(size),
        budgets.max_table_entries,
    )?;
    let decoded: Vec<Vec<usize>> = (0..size)
        .map(|mut x| {
            let mut out = vec![0; owned.len()];
            for (i, f) in owned.iter().enumerate().rev() {
                out[i] = x % f.size();
                x /= f.size();
            }
            out
        })
        .collect();
    let mut tables = Vec::with_capacity(sig.len());
    let mut coords = vec![0; owned.len()];
    let mut column = Vec::new();
    for s in 0..sig.len() {
        let mut table = Vec::new();
        for_each_tuple(size, sig.arity(s), |args| {
            for (i, f) in owned.iter().enumerate() {
                column.clear();
                column.extend(args.iter().map(|&a| decoded[a][i]));
                coords[i] = f.apply(s, &column);
            }
            table.push(encode(&owned, &coords) as u32);
        });
        tables.push(table);
    }
    let algebra = FiniteAlgebra::from_tables_unchecked(sig.clone(), size, tables);
    let projections = (0..owned.len())
        .map(|i| {
            Homomorphism::trusted(
                size,
                owned[i].size(),
                decoded.iter().map(|t| t[i]).collect(),
            )
        })
        .collect();
    Ok(ProductAlgebra {
        factors: owned,
        algebra,
        projections,
    })
}
