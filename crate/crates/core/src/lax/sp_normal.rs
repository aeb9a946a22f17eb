//! Witnesses whose quotients `C/β` and `C/γ` lie in `SP(K)`.
//!
//! Each of `C₀/β₀`, `C₀/γ₀` is covered by an onto map from an algebra with
//! an explicit embedding into a product of class members; the new witness
//! algebra is the pullback of those covers against `C₀`.

use std::collections::HashMap;

use crate::algebra::{generating_set, quotient_unchecked, FiniteAlgebra};
use crate::budget::Budgets;
use crate::closure::for_each_tuple;
use crate::congruence::{push_forward, Congruence};
use crate::error::{check_budget, Error, Result};
use crate::free::free_algebra;
use crate::hom::{enumerate_homomorphisms, Homomorphism};
use crate::lax::LaxWitness;

/// An injective homomorphism into `∏ K[factors[i]]`, given by the coordinate
/// tuple of every source element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductEmbedding {
    pub factors: Vec<usize>,
    pub images: Vec<Vec<usize>>,
}

impl ProductEmbedding {
    /// Table-checks injectivity and the homomorphism property.
    pub fn verify(&self, source: &FiniteAlgebra, class: &[FiniteAlgebra]) -> Result<()> {
        if self.images.len() != source.size() {
            return Err(Error::MismatchedCarriers {
                expected: source.size(),
                found: self.images.len(),
            });
        }
        for &f in &self.factors {
            let member = class.get(f).ok_or(Error::ElementOutOfRange {
                element: f,
                size: class.len(),
            })?;
            if !member.same_signature(source) {
                return Err(Error::SignatureMismatch);
            }
        }
        for img in &self.images {
            if img.len() != self.factors.len() {
                return Err(Error::MismatchedCarriers {
                    expected: self.factors.len(),
                    found: img.len(),
                });
            }
            for (c, &v) in img.iter().enumerate() {
                class[self.factors[c]].check_element(v)?;
            }
        }
        let mut seen = HashMap::new();
        for (x, img) in self.images.iter().enumerate() {
            if let Some(y) = seen.insert(img, x) {
                return Err(Error::InvariantViolated(format!(
                    "embedding identifies {y} and {x}"
                )));
            }
        }
        let sig = source.signature();
        let mut column = Vec::new();
        for s in 0..sig.len() {
            let mut failure = None;
            for_each_tuple(source.size(), sig.arity(s), |args| {
                if failure.is_some() {
                    return;
                }
                let result = &self.images[source.apply(s, args)];
                for (c, &f) in self.factors.iter().enumerate() {
                    column.clear();
                    column.extend(args.iter().map(|&a| self.images[a][c]));
                    if class[f].apply(s, &column) != result[c] {
                        failure = Some(args.to_vec());
                        return;
                    }
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
}

/// Embedding of `a` into a product of class members, if one exists: the
/// homomorphisms into members must separate points. Homomorphisms are
/// taken greedily in enumeration order, keeping those that refine the
/// running kernel.
pub fn sp_embedding(
    a: &FiniteAlgebra,
    class: &[FiniteAlgebra],
    budgets: &Budgets,
) -> Result<Option<ProductEmbedding>> {
    let mut kernel = Congruence::top(a.size());
    let mut factors = Vec::new();
    let mut maps: Vec<Homomorphism> = Vec::new();
    for (m, member) in class.iter().enumerate() {
        if kernel.is_bottom() {
            break;
        }
        for h in enumerate_homomorphisms(a, member, budgets)? {
            let refined = kernel.meet(&h.kernel());
            if refined != kernel {
                kernel = refined;
                factors.push(m);
                maps.push(h);
                if kernel.is_bottom() {
                    break;
                }
            }
        }
    }
    if !kernel.is_bottom() {
        return Ok(None);
    }
    let images = (0..a.size())
        .map(|x| maps.iter().map(|h| h.apply(x)).collect())
        .collect();
    Ok(Some(ProductEmbedding { factors, images }))
}

/// How a quotient of the witness algebra was covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverRoute {
    /// The quotient itself embeds in a product of members.
    Quotient,
    /// The original witness algebra embeds; the cover is the natural map.
    WitnessAlgebra,
    /// Relatively free algebra on this many generators.
    Free(usize),
}

/// `SP(K)` certificates carried by a normalized witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpCertificates {
    pub beta_quotient: FiniteAlgebra,
    pub beta_embedding: ProductEmbedding,
    pub beta_route: CoverRoute,
    pub gamma_quotient: FiniteAlgebra,
    pub gamma_embedding: ProductEmbedding,
    pub gamma_route: CoverRoute,
}

impl SpCertificates {
    pub fn verify(&self, class: &[FiniteAlgebra]) -> Result<()> {
        self.beta_embedding.verify(&self.beta_quotient, class)?;
        self.gamma_embedding.verify(&self.gamma_quotient, class)
    }
}

struct Cover {
    algebra: FiniteAlgebra,
    /// Onto map to the quotient.
    onto: Homomorphism,
    embedding: ProductEmbedding,
    route: CoverRoute,
}

fn cover(
    quotient: &FiniteAlgebra,
    natural: &Homomorphism,
    c0: &FiniteAlgebra,
    class: &[FiniteAlgebra],
    budgets: &Budgets,
) -> Result<Cover> {
    let attempt = |a: &FiniteAlgebra| match sp_embedding(a, class, budgets) {
        Ok(e) => Ok(e),
        Err(Error::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    if let Some(embedding) = attempt(quotient)? {
        return Ok(Cover {
            algebra: quotient.clone(),
            onto: Homomorphism::identity(quotient),
            embedding,
            route: CoverRoute::Quotient,
        });
    }
    if let Some(embedding) = attempt(c0)? {
        return Ok(Cover {
            algebra: c0.clone(),
            onto: natural.clone(),
            embedding,
            route: CoverRoute::WitnessAlgebra,
        });
    }
    let gens = generating_set(quotient);
    let free = free_algebra(class, gens.len(), budgets)?;
    let onto = free.eval(quotient, &gens)?;
    let owner = free.coordinate_owner().to_vec();
    let images = (0..free.algebra().size())
        .map(|e| free.coordinates(e).iter().map(|&v| v as usize).collect())
        .collect();
    Ok(Cover {
        algebra: free.algebra().clone(),
        onto,
        embedding: ProductEmbedding {
            factors: owner,
            images,
        },
        route: CoverRoute::Free(gens.len()),
    })
}

/// Rebuilds a witness so that `C/β` and `C/γ` embed in products of class
/// members, with the embeddings attached as certificates.
///
/// The new algebra is `{⟨c, x, y⟩ : c/β₀ = p(x), c/γ₀ = q(y)}` for covers
/// `p`, `q` of `C₀/β₀`, `C₀/γ₀`; `β`, `γ` are the kernels of the projections
/// to the cover coordinates and `π` factors through `⟨c, x, y⟩ ↦ c`.
pub fn sp_normalize_witness(
    w: &LaxWitness,
    class: &[FiniteAlgebra],
    budgets: &Budgets,
) -> Result<LaxWitness> {
    if class.is_empty() {
        return Err(Error::EmptyClass);
    }
    if class.iter().any(|a| !a.same_signature(&w.algebra)) {
        return Err(Error::SignatureMismatch);
    }
    let c0 = &w.algebra;
    w.beta.check_compatible(c0)?;
    w.gamma.check_compatible(c0)?;
    if !w.beta.meet(&w.gamma).is_bottom() {
        return Err(Error::NotNormalizable);
    }
    let qb = quotient_unchecked(c0, &w.beta);
    let qg = quotient_unchecked(c0, &w.gamma);
    let cb = cover(&qb.algebra, &qb.natural, c0, class, budgets)?;
    let cgm = cover(&qg.algebra, &qg.natural, c0, class, budgets)?;

    let fibers = |c: &Cover, n: usize| {
        let mut f = vec![Vec::new(); n];
        for x in 0..c.algebra.size() {
            f[c.onto.apply(x)].push(x);
        }
        f
    };
    let fb = fibers(&cb, qb.algebra.size());
    let fg = fibers(&cgm, qg.algebra.size());
    let mut triples = Vec::new();
    for c in 0..c0.size() {
        for &x in &fb[qb.natural.apply(c)] {
            for &y in &fg[qg.natural.apply(c)] {
                triples.push((c, x, y));
            }
        }
    }
    check_budget(
        "pullback size",
        triples.len() as u128,
        budgets.max_free_size as u128,
    )?;
    check_budget(
        "pullback table entries",
        c0.table_entries(triples.len()),
        budgets.max_table_entries,
    )?;
    let index: HashMap<(usize, usize, usize), usize> =
        triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let sig = c0.signature().clone();
    let mut tables = Vec::with_capacity(sig.len());
    let (mut a0, mut a1, mut a2) = (Vec::new(), Vec::new(), Vec::new());
    for s in 0..sig.len() {
        let mut table = Vec::new();
        for_each_tuple(triples.len(), sig.arity(s), |t| {
            a0.clear();
            a1.clear();
            a2.clear();
            for &i in t {
                a0.push(triples[i].0);
                a1.push(triples[i].1);
                a2.push(triples[i].2);
            }
            let r = (
                c0.apply(s, &a0),
                cb.algebra.apply(s, &a1),
                cgm.algebra.apply(s, &a2),
            );
            table.push(index[&r] as u32);
        });
        tables.push(table);
    }
    let m = triples.len();
    let c = FiniteAlgebra::from_tables_unchecked(sig, m, tables);
    let pi1 = Homomorphism::trusted(m, c0.size(), triples.iter().map(|t| t.0).collect());
    let nu_b = Homomorphism::trusted(m, cb.algebra.size(), triples.iter().map(|t| t.1).collect());
    let nu_g = Homomorphism::trusted(m, cgm.algebra.size(), triples.iter().map(|t| t.2).collect());
    let beta = nu_b.kernel();
    let gamma = nu_g.kernel();
    if !beta.meet(&gamma).is_bottom() {
        return Err(Error::InvariantViolated(
            "pullback projections do not separate points".into(),
        ));
    }
    if push_forward(&pi1, c0, &beta)? != w.beta || push_forward(&pi1, c0, &gamma)? != w.gamma {
        return Err(Error::InvariantViolated(
            "pullback does not push forward to the original pair".into(),
        ));
    }
    let pi = pi1.then(&w.pi)?;

    let certificate = |theta: &Congruence, nu: &Homomorphism, cov: &Cover| {
        let q = quotient_unchecked(&c, theta);
        let images = theta
            .representatives()
            .iter()
            .map(|&r| cov.embedding.images[nu.apply(r)].clone())
            .collect();
        let emb = ProductEmbedding {
            factors: cov.embedding.factors.clone(),
            images,
        };
        (q.algebra, emb)
    };
    let (beta_quotient, beta_embedding) = certificate(&beta, &nu_b, &cb);
    let (gamma_quotient, gamma_embedding) = certificate(&gamma, &nu_g, &cgm);
    let certs = SpCertificates {
        beta_quotient,
        beta_embedding,
        beta_route: cb.route,
        gamma_quotient,
        gamma_embedding,
        gamma_route: cgm.route,
    };
    certs.verify(class)?;
    Ok(LaxWitness {
        algebra: c,
        pi,
        beta,
        gamma,
        certificates: Some(certs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lax::verify_witness;
    use crate::pushout::modular_witness;
    use crate::testing::*;

    #[test]
    fn z4_embeds_in_itself() {
        let z4 = cyclic_group(4);
        let e = sp_embedding(&z4, std::slice::from_ref(&z4), &Budgets::default())
            .unwrap()
            .unwrap();
        assert_eq!(e.factors, vec![0]);
        assert_eq!(e.images, vec![vec![0], vec![1], vec![2], vec![3]]);
        e.verify(&z4, std::slice::from_ref(&z4)).unwrap();
        assert!(sp_embedding(&z4, &[cyclic_group(2)], &Budgets::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn klein_four_embeds_in_z2_squared() {
        let v = klein_four();
        let e = sp_embedding(&v, &[cyclic_group(2)], &Budgets::default())
            .unwrap()
            .unwrap();
        assert_eq!(e.factors.len(), 2);
        e.verify(&v, &[cyclic_group(2)]).unwrap();
    }

    #[test]
    fn pushout_witness_for_z4() {
        let z4 = cyclic_group(4);
        let mu = Congruence::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let top = Congruence::top(4);
        let w = modular_witness(&z4, &mu, &top).unwrap();
        let class = [z4.clone()];
        let n = sp_normalize_witness(&w, &class, &Budgets::default()).unwrap();
        assert!(verify_witness(&n, &z4, &mu, &top).unwrap().holds());
        let certs = n.certificates.as_ref().unwrap();
        certs.verify(&class).unwrap();
        assert_eq!(certs.beta_route, CoverRoute::Quotient);
        assert_eq!(certs.beta_embedding.factors, vec![0]);
    }

    #[test]
    fn identity_witness_with_lifted_quotient() {
        let z4 = cyclic_group(4);
        let mu = Congruence::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let bot = Congruence::bottom(4);
        let w = LaxWitness::identity(&z4, &mu, &bot);
        let n = sp_normalize_witness(&w, std::slice::from_ref(&z4), &Budgets::default()).unwrap();
        assert!(verify_witness(&n, &z4, &mu, &bot).unwrap().holds());
        n.certificates.unwrap().verify(&[z4]).unwrap();
    }

    #[test]
    fn bad_embedding_rejected() {
        let z2 = cyclic_group(2);
        let e = ProductEmbedding {
            factors: vec![0],
            images: vec![vec![0], vec![0]],
        };
        assert!(e.verify(&z2, std::slice::from_ref(&z2)).is_err());
        let e = ProductEmbedding {
            factors: vec![0],
            images: vec![vec![1], vec![0]],
        };
        assert!(e.verify(&z2, std::slice::from_ref(&z2)).is_err());
    }
}
