//! The algebra `B(μ)` of `μ`-related pairs, its projections and diagonal,
//! and the congruence `Δ_{μ,α}` that together make the pushout witness.

use std::collections::HashMap;

use crate::algebra::FiniteAlgebra;
use crate::closure::for_each_tuple;
use crate::congruence::{cg, Congruence};
use crate::error::Result;
use crate::hom::Homomorphism;
use crate::lax::LaxWitness;

#[derive(Debug, Clone)]
pub struct PairAlgebra {
    /// `B(μ)`, elements numbered in lexicographic pair order.
    pub algebra: FiniteAlgebra,
    pub pairs: Vec<(usize, usize)>,
    /// `⟨b, c⟩ ↦ c`.
    pub second: Homomorphism,
    /// `⟨b, c⟩ ↦ b`.
    pub first: Homomorphism,
    /// `b ↦ ⟨b, b⟩`.
    pub diagonal: Homomorphism,
}

impl PairAlgebra {
    pub fn index_of(&self, pair: (usize, usize)) -> Option<usize> {
        self.pairs.binary_search(&pair).ok()
    }
}

pub fn b_mu(b: &FiniteAlgebra, mu: &Congruence) -> Result<PairAlgebra> {
    mu.check_compatible(b)?;
    let n = b.size();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| mu.related(x, y))
        .collect();
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let sig = b.signature().clone();
    let mut tables = Vec::with_capacity(sig.len());
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for s in 0..sig.len() {
        let mut table = Vec::new();
        for_each_tuple(pairs.len(), sig.arity(s), |t| {
            left.clear();
            right.clear();
            left.extend(t.iter().map(|&i| pairs[i].0));
            right.extend(t.iter().map(|&i| pairs[i].1));
            table.push(index[&(b.apply(s, &left), b.apply(s, &right))] as u32);
        });
        tables.push(table);
    }
    let algebra = FiniteAlgebra::from_tables_unchecked(sig, pairs.len(), tables);
    let m = pairs.len();
    let second = Homomorphism::trusted(m, n, pairs.iter().map(|p| p.1).collect());
    let first = Homomorphism::trusted(m, n, pairs.iter().map(|p| p.0).collect());
    let diagonal = Homomorphism::trusted(n, m, (0..n).map(|x| index[&(x, x)]).collect());
    Ok(PairAlgebra {
        algebra,
        pairs,
        second,
        first,
        diagonal,
    })
}

/// `Δ_{μ,α}`: the congruence of `B(μ)` generated by diagonal `α`-pairs.
pub fn delta_congruence(
    b: &FiniteAlgebra,
    mu: &Congruence,
    alpha: &Congruence,
) -> Result<Congruence> {
    let pa = b_mu(b, mu)?;
    delta_on(&pa, b, alpha)
}

pub(crate) fn delta_on(
    pa: &PairAlgebra,
    b: &FiniteAlgebra,
    alpha: &Congruence,
) -> Result<Congruence> {
    alpha.check_compatible(b)?;
    let d = &pa.diagonal;
    cg(
        &pa.algebra,
        alpha
            .spanning_pairs()
            .map(|(x, r)| (d.apply(x), d.apply(r)))
            .collect::<Vec<_>>(),
    )
}

/// The quadruple `(B(μ), second projection, ker first, Δ_{μ,α})`. It is a
/// lax-centrality witness exactly when `ker first ∧ Δ_{μ,α} = ⊥`.
pub fn modular_witness(
    b: &FiniteAlgebra,
    mu: &Congruence,
    alpha: &Congruence,
) -> Result<LaxWitness> {
    let pa = b_mu(b, mu)?;
    let gamma = delta_on(&pa, b, alpha)?;
    let beta = pa.first.kernel();
    Ok(LaxWitness::new(pa.algebra, pa.second, beta, gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::push_forward;
    use crate::testing::*;

    #[test]
    fn sizes_of_pair_algebras() {
        let z4 = cyclic_group(4);
        let theta2 = Congruence::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(b_mu(&z4, &theta2).unwrap().algebra.size(), 8);
        assert_eq!(b_mu(&z4, &Congruence::bottom(4)).unwrap().algebra.size(), 4);
        assert_eq!(b_mu(&z4, &Congruence::top(4)).unwrap().algebra.size(), 16);
    }

    #[test]
    fn projections_and_diagonal() {
        let s3 = symmetric_group_3();
        let a3 = Congruence::from_blocks(6, &[vec![0, 4, 5], vec![1, 2, 3]]).unwrap();
        let pa = b_mu(&s3, &a3).unwrap();
        assert_eq!(pa.algebra.size(), 18);
        pa.second.validate(&pa.algebra, &s3).unwrap();
        pa.first.validate(&pa.algebra, &s3).unwrap();
        pa.diagonal.validate(&s3, &pa.algebra).unwrap();
        assert_eq!(
            pa.diagonal.then(&pa.second).unwrap(),
            Homomorphism::identity(&s3)
        );
        assert_eq!(
            push_forward(&pa.second, &s3, &pa.first.kernel()).unwrap(),
            a3
        );
        let gamma = delta_on(&pa, &s3, &Congruence::top(6)).unwrap();
        assert!(push_forward(&pa.second, &s3, &gamma).unwrap().is_top());
    }

    #[test]
    fn delta_of_bottom_is_bottom() {
        let z4 = cyclic_group(4);
        let theta2 = Congruence::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        assert!(delta_congruence(&z4, &theta2, &Congruence::bottom(4))
            .unwrap()
            .is_bottom());
    }
}
