//! Homomorphisms between finite algebras and their enumeration.

use crate::algebra::{generating_set, FiniteAlgebra};
use crate::budget::Budgets;
use crate::closure::{close, for_each_tuple, Derivation};
use crate::congruence::Congruence;
use crate::error::{check_budget, saturating_pow, Error, Result};

/// A total map between carriers, validated against the operation tables
/// when built with [`Homomorphism::new`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Homomorphism {
    source_size: usize,
    target_size: usize,
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: &FiniteAlgebra, target: &FiniteAlgebra, map: Vec<usize>) -> Result<Self> {
        let h = Homomorphism {
            source_size: source.size(),
            target_size: target.size(),
            map,
        };
        h.validate(source, target)?;
        Ok(h)
    }

    pub(crate) fn trusted(source_size: usize, target_size: usize, map: Vec<usize>) -> Self {
        debug_assert_eq!(map.len(), source_size);
        Homomorphism {
            source_size,
            target_size,
            map,
        }
    }

    pub fn identity(a: &FiniteAlgebra) -> Self {
        Homomorphism::trusted(a.size(), a.size(), (0..a.size()).collect())
    }

    /// Full table scan; reports the first failing symbol and argument tuple.
    pub fn validate(&self, source: &FiniteAlgebra, target: &FiniteAlgebra) -> Result<()> {
        if !source.same_signature(target) {
            return Err(Error::SignatureMismatch);
        }
        if self.map.len() != source.size() || self.source_size != source.size() {
            return Err(Error::MismatchedCarriers {
                expected: source.size(),
                found: self.map.len(),
            });
        }
        if self.target_size != target.size() {
            return Err(Error::MismatchedCarriers {
                expected: target.size(),
                found: self.target_size,
            });
        }
        for &v in &self.map {
            target.check_element(v)?;
        }
        let sig = source.signature();
        let mut image = Vec::new();
        for s in 0..sig.len() {
            let mut failure = None;
            for_each_tuple(source.size(), sig.arity(s), |args| {
                if failure.is_some() {
                    return;
                }
                image.clear();
                image.extend(args.iter().map(|&a| self.map[a]));
                if self.map[source.apply(s, args)] != target.apply(s, &image) {
                    failure = Some(args.to_vec());
                }
            });
            if let Some(args) = failure {
                return Err(Error::NotAHomomorphism {
                    symbol: sig.name(s).to_string(),
                    args,
                });
            }
        }
        Ok(())
    }

    pub fn source_size(&self) -> usize {
        self.source_size
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn kernel(&self) -> Congruence {
        Congruence::from_keys(&self.map)
    }

    pub fn is_onto(&self) -> bool {
        let mut hit = vec![false; self.target_size];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_bottom()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if self.target_size != other.source_size {
            return Err(Error::MismatchedCarriers {
                expected: other.source_size,
                found: self.target_size,
            });
        }
        Ok(Homomorphism::trusted(
            self.source_size,
            other.target_size,
            self.map.iter().map(|&x| other.map[x]).collect(),
        ))
    }
}

/// A generating set of an algebra with, for every element, one derivation
/// from the generators. Lets a generator assignment be extended to a map.
#[derive(Debug, Clone)]
pub(crate) struct GenerationPlan {
    pub generators: Vec<usize>,
    order: Vec<usize>,
    derivations: Vec<Derivation>,
}

impl GenerationPlan {
    pub fn new(a: &FiniteAlgebra) -> Self {
        Self::with_generators(a, generating_set(a))
    }

    pub fn with_generators(a: &FiniteAlgebra, generators: Vec<usize>) -> Self {
        let c = close(
            a.signature(),
            generators.iter().copied(),
            usize::MAX,
            |s, args| {
                let args: Vec<usize> = args.iter().map(|&&x| x).collect();
                a.apply(s, &args)
            },
        )
        .expect("unbounded closure");
        GenerationPlan {
            generators,
            order: c.elements,
            derivations: c.derivations,
        }
    }

    /// Extends `assignment` along the derivations; elements not generated
    /// stay `None`.
    pub fn extend(
        &self,
        a_size: usize,
        target: &FiniteAlgebra,
        assignment: &[usize],
    ) -> Vec<Option<usize>> {
        let mut map = vec![None; a_size];
        let mut args = Vec::new();
        for (i, &e) in self.order.iter().enumerate() {
            let v = match &self.derivations[i] {
                Derivation::Seed(j) => assignment[*j],
                Derivation::Op { symbol, args: from } => {
                    args.clear();
                    args.extend(
                        from.iter()
                            .map(|&k| map[self.order[k]].expect("derived earlier")),
                    );
                    target.apply(*symbol, &args)
                }
            };
            map[e] = Some(v);
        }
        map
    }
}

/// All homomorphisms `a -> b` (onto or not), lexicographic by map.
pub fn enumerate_homomorphisms(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    budgets: &Budgets,
) -> Result<Vec<Homomorphism>> {
    if !a.same_signature(b) {
        return Err(Error::SignatureMismatch);
    }
    let plan = GenerationPlan::new(a);
    check_budget(
        "homomorphism search space",
        saturating_pow(b.size(), plan.generators.len()),
        budgets.max_map_candidates,
    )?;
    let mut out = Vec::new();
    for_each_tuple(b.size(), plan.generators.len(), |assignment| {
        let map: Option<Vec<usize>> = plan.extend(a.size(), b, assignment).into_iter().collect();
        let map = map.expect("generating set covers the carrier");
        let h = Homomorphism::trusted(a.size(), b.size(), map);
        if h.validate(a, b).is_ok() {
            out.push(h);
        }
    });
    out.sort_by(|x, y| x.map.cmp(&y.map));
    Ok(out)
}

/// All onto homomorphisms `a -> b`, lexicographic by map.
pub fn enumerate_onto_maps(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    budgets: &Budgets,
) -> Result<Vec<Homomorphism>> {
    if !a.same_signature(b) {
        return Err(Error::SignatureMismatch);
    }
    if b.size() > a.size() {
        return Ok(Vec::new());
    }
    let mut all = enumerate_homomorphisms(a, b, budgets)?;
    all.retain(Homomorphism::is_onto);
    Ok(all)
}
