//! Lax centrality: `α` laxly centralizes `μ` in `Con B` when some onto
//! `π: C → B` with `C` in the variety carries `β, γ ∈ Con C` such that
//! `β ∧ γ = ⊥`, `π⃗β ≥ μ` and `π⃗γ ≥ α`.

mod decide;
mod sp_normal;

use std::fmt;

use crate::algebra::{quotient_unchecked, FiniteAlgebra};
use crate::congruence::{check_size, push_forward, Congruence};
use crate::error::{Error, Result};
use crate::hom::Homomorphism;

pub use decide::{
    decide_lax_centrality, maximal_lax_centralizers, trivial_commutator, witness_meet_commutator,
    CentralityVerdict, DecideOptions, Kappa, MaximalCentralizers, MeetCommutator, Route,
    SearchReport,
};
pub use sp_normal::{sp_embedding, sp_normalize_witness, ProductEmbedding, SpCertificates};

/// A candidate witness `(C, π, β, γ)`. Validity against a particular
/// `(μ, α)` is checked by [`verify_witness`], never assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxWitness {
    pub algebra: FiniteAlgebra,
    pub pi: Homomorphism,
    pub beta: Congruence,
    pub gamma: Congruence,
    /// Embeddings of `C/β` and `C/γ` into products of class members.
    pub certificates: Option<SpCertificates>,
}

impl LaxWitness {
    pub fn new(
        algebra: FiniteAlgebra,
        pi: Homomorphism,
        beta: Congruence,
        gamma: Congruence,
    ) -> Self {
        LaxWitness {
            algebra,
            pi,
            beta,
            gamma,
            certificates: None,
        }
    }

    /// `(B, id, μ, α)`; valid whenever `μ ∧ α = ⊥`.
    pub fn identity(b: &FiniteAlgebra, mu: &Congruence, alpha: &Congruence) -> Self {
        LaxWitness::new(
            b.clone(),
            Homomorphism::identity(b),
            mu.clone(),
            alpha.clone(),
        )
    }
}

/// The first clause of the definition a witness fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessFailure {
    NotAHomomorphism(String),
    BetaNotCongruence,
    GammaNotCongruence,
    NotOnto,
    MeetNotBottom,
    BetaBelowMu,
    GammaBelowAlpha,
}

impl fmt::Display for WitnessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessFailure::NotAHomomorphism(e) => write!(f, "pi is not a homomorphism: {e}"),
            WitnessFailure::BetaNotCongruence => write!(f, "beta is not a congruence of C"),
            WitnessFailure::GammaNotCongruence => write!(f, "gamma is not a congruence of C"),
            WitnessFailure::NotOnto => write!(f, "pi is not onto"),
            WitnessFailure::MeetNotBottom => write!(f, "beta ∧ gamma ≠ ⊥"),
            WitnessFailure::BetaBelowMu => write!(f, "push(pi, beta) ⊉ mu"),
            WitnessFailure::GammaBelowAlpha => write!(f, "push(pi, gamma) ⊉ alpha"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub failure: Option<WitnessFailure>,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Re-checks every clause of the definition from scratch.
pub fn verify_witness(
    w: &LaxWitness,
    b: &FiniteAlgebra,
    mu: &Congruence,
    alpha: &Congruence,
) -> Result<Verification> {
    check_size(w.pi.target_size(), b.size())?;
    check_size(w.pi.source_size(), w.algebra.size())?;
    check_size(mu.size(), b.size())?;
    check_size(alpha.size(), b.size())?;
    check_size(w.beta.size(), w.algebra.size())?;
    check_size(w.gamma.size(), w.algebra.size())?;
    let fail = |f| Ok(Verification { failure: Some(f) });
    match w.pi.validate(&w.algebra, b) {
        Ok(()) => {}
        Err(e @ Error::NotAHomomorphism { .. }) | Err(e @ Error::SignatureMismatch) => {
            return fail(WitnessFailure::NotAHomomorphism(e.to_string()))
        }
        Err(e) => return Err(e),
    }
    if !w.beta.is_compatible(&w.algebra) {
        return fail(WitnessFailure::BetaNotCongruence);
    }
    if !w.gamma.is_compatible(&w.algebra) {
        return fail(WitnessFailure::GammaNotCongruence);
    }
    if !w.pi.is_onto() {
        return fail(WitnessFailure::NotOnto);
    }
    if !w.beta.meet(&w.gamma).is_bottom() {
        return fail(WitnessFailure::MeetNotBottom);
    }
    if !mu.leq(&push_forward(&w.pi, b, &w.beta)?) {
        return fail(WitnessFailure::BetaBelowMu);
    }
    if !alpha.leq(&push_forward(&w.pi, b, &w.gamma)?) {
        return fail(WitnessFailure::GammaBelowAlpha);
    }
    Ok(Verification { failure: None })
}

/// Replaces `C` by `C/(β ∧ γ)` when `β ∧ γ ≤ ker π`; the images of `β` and
/// `γ` then meet in `⊥` and the push-forwards along `π` are unchanged.
pub fn normalize_witness(w: &LaxWitness) -> Result<LaxWitness> {
    let theta = w.beta.meet(&w.gamma);
    let ker = w.pi.kernel();
    if !theta.leq(&ker) {
        return Err(Error::NotNormalizable);
    }
    theta.check_compatible(&w.algebra)?;
    let q = quotient_unchecked(&w.algebra, &theta);
    let reps = theta.representatives();
    let pi = Homomorphism::trusted(
        q.algebra.size(),
        w.pi.target_size(),
        reps.iter().map(|&r| w.pi.apply(r)).collect(),
    );
    let beta = push_forward(&q.natural, &q.algebra, &w.beta)?;
    let gamma = push_forward(&q.natural, &q.algebra, &w.gamma)?;
    Ok(LaxWitness::new(q.algebra, pi, beta, gamma))
}
