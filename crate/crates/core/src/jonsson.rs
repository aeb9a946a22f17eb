//! Variety membership and the finite-instance check of the Jónsson-type
//! theorem: for `B ∈ HSP(K)` subdirectly irreducible with monolith `μ`,
//! every maximal `α` laxly centralizing `μ` has `B/α ∈ HS(K)`.
//!
//! Ultraproducts of a finite family of finite algebras are isomorphic to
//! members of the family, so `HSP_u(K)` is checked as `HS` over single
//! members.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use crate::algebra::{
    enumerate_subuniverses, generating_set, induced, quotient, subuniverse_generated, FiniteAlgebra,
};
use crate::budget::Budgets;
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::free::{free_algebra, Extension, FreePresentation, Refutation};
use crate::hom::{enumerate_onto_maps, Homomorphism};
use crate::lattice::{con_lattice, si_from_lattice};
use crate::lax::{maximal_lax_centralizers, DecideOptions, MaximalCentralizers};

#[derive(Debug, Clone)]
pub enum Negative {
    /// An identity of `V(K)` that fails in `B`.
    Identity(Refutation),
    /// No subuniverse of the member maps onto `B`.
    Exhausted { subuniverses: usize, maps: usize },
}

#[derive(Debug, Clone)]
pub enum MembershipCertificate {
    /// Onto map from the free algebra on a generating set of `B`.
    Hsp {
        free: Box<FreePresentation>,
        generators: Vec<usize>,
        map: Homomorphism,
    },
    /// Onto map from a subalgebra of the `factor`-th member.
    Hs {
        factor: usize,
        subuniverse: Vec<usize>,
        map: Homomorphism,
    },
    Negative(Negative),
}

impl MembershipCertificate {
    pub fn is_positive(&self) -> bool {
        !matches!(self, MembershipCertificate::Negative(_))
    }

    /// Re-checks a positive certificate by tables. Negative certificates
    /// are checked for the identity only.
    pub fn verify(&self, b: &FiniteAlgebra, class: &[FiniteAlgebra]) -> Result<()> {
        match self {
            MembershipCertificate::Hsp { free, map, .. } => {
                map.validate(free.algebra(), b)?;
                if !map.is_onto() {
                    return Err(Error::InvariantViolated(
                        "membership map is not onto".into(),
                    ));
                }
                Ok(())
            }
            MembershipCertificate::Hs {
                factor,
                subuniverse,
                map,
            } => {
                let a = class.get(*factor).ok_or_else(|| {
                    Error::InvariantViolated(format!(
                        "factor {factor} outside class of size {}",
                        class.len()
                    ))
                })?;
                if &subuniverse_generated(a, subuniverse)? != subuniverse {
                    return Err(Error::InvariantViolated(
                        "certificate set is not a subuniverse".into(),
                    ));
                }
                map.validate(&induced(a, subuniverse), b)?;
                if !map.is_onto() {
                    return Err(Error::InvariantViolated(
                        "membership map is not onto".into(),
                    ));
                }
                Ok(())
            }
            MembershipCertificate::Negative(Negative::Identity(r)) => {
                let vars = r.lhs.variables().max(r.rhs.variables());
                let holds_everywhere = class.iter().all(|a| {
                    let mut ok = true;
                    crate::closure::for_each_tuple(a.size(), vars, |asg| {
                        ok &= r.lhs.eval(a, asg) == r.rhs.eval(a, asg);
                    });
                    ok
                });
                if !holds_everywhere {
                    return Err(Error::InvariantViolated(format!(
                        "identity {r} fails in the class"
                    )));
                }
                let mut fails = false;
                crate::closure::for_each_tuple(b.size(), vars, |asg| {
                    fails |= r.lhs.eval(b, asg) != r.rhs.eval(b, asg);
                });
                if !fails {
                    return Err(Error::InvariantViolated(format!(
                        "identity {r} holds in the algebra"
                    )));
                }
                Ok(())
            }
            MembershipCertificate::Negative(Negative::Exhausted { .. }) => Ok(()),
        }
    }
}

impl fmt::Display for MembershipCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MembershipCertificate::Hsp { free, generators, .. } => write!(
                f,
                "HSP: onto map from free algebra on {} generators ({} elements), generators -> {:?}",
                generators.len(),
                free.algebra().size(),
                generators
            ),
            MembershipCertificate::Hs {
                factor,
                subuniverse,
                map,
            } => write!(
                f,
                "HS: member {factor}, subuniverse {subuniverse:?}, onto map {:?}",
                map.map()
            ),
            MembershipCertificate::Negative(Negative::Identity(r)) => write!(f, "negative: identity {r} fails"),
            MembershipCertificate::Negative(Negative::Exhausted { subuniverses, maps }) => write!(
                f,
                "negative: exhausted {subuniverses} subuniverses and {maps} onto candidates"
            ),
        }
    }
}

/// `B ∈ HSP(K)`, decided through the free algebra of `V(K)` on a
/// generating set of `B`. When that algebra is over budget, falls back to
/// `B ∈ HS(A)` for single members, which can only confirm membership.
pub fn hsp_membership(
    b: &FiniteAlgebra,
    class: &[FiniteAlgebra],
    budgets: &Budgets,
) -> Result<MembershipCertificate> {
    if class.is_empty() {
        return Err(Error::EmptyClass);
    }
    if class.iter().any(|a| !a.same_signature(b)) {
        return Err(Error::SignatureMismatch);
    }
    let gens = generating_set(b);
    let free = match free_algebra(class, gens.len(), budgets) {
        Ok(f) => f,
        Err(e @ Error::BudgetExceeded { .. }) => {
            for (i, a) in class.iter().enumerate() {
                if let Ok(MembershipCertificate::Hs {
                    subuniverse, map, ..
                }) = hs_membership(b, a, budgets)
                {
                    return Ok(MembershipCertificate::Hs {
                        factor: i,
                        subuniverse,
                        map,
                    });
                }
            }
            return Err(e);
        }
        Err(e) => return Err(e),
    };
    Ok(match free.extend(b, &gens)? {
        Extension::Homomorphism(map) => MembershipCertificate::Hsp {
            free: Box::new(free),
            generators: gens,
            map,
        },
        Extension::Refuted(r) => MembershipCertificate::Negative(Negative::Identity(r)),
    })
}

/// `B ∈ HS(A)`: some subalgebra of `A` maps onto `B`. Subuniverses are
/// tried smallest first.
pub fn hs_membership(
    b: &FiniteAlgebra,
    a: &FiniteAlgebra,
    budgets: &Budgets,
) -> Result<MembershipCertificate> {
    if !a.same_signature(b) {
        return Err(Error::SignatureMismatch);
    }
    let subs = enumerate_subuniverses(a, budgets)?;
    let mut maps = 0;
    for s in &subs {
        if s.len() < b.size() {
            continue;
        }
        let sa = induced(a, s);
        let onto = enumerate_onto_maps(&sa, b, budgets)?;
        maps += onto.len();
        if let Some(map) = onto.into_iter().next() {
            return Ok(MembershipCertificate::Hs {
                factor: 0,
                subuniverse: s.clone(),
                map,
            });
        }
    }
    Ok(MembershipCertificate::Negative(Negative::Exhausted {
        subuniverses: subs.len(),
        maps,
    }))
}

/// First member of `class` with `B ∈ HS(A)`.
pub fn hs_class_membership(
    b: &FiniteAlgebra,
    class: &[FiniteAlgebra],
    budgets: &Budgets,
) -> Result<MembershipCertificate> {
    let (mut subuniverses, mut maps) = (0, 0);
    for (i, a) in class.iter().enumerate() {
        match hs_membership(b, a, budgets)? {
            MembershipCertificate::Hs {
                subuniverse, map, ..
            } => {
                return Ok(MembershipCertificate::Hs {
                    factor: i,
                    subuniverse,
                    map,
                })
            }
            MembershipCertificate::Negative(Negative::Exhausted {
                subuniverses: s,
                maps: m,
            }) => {
                subuniverses += s;
                maps += m;
            }
            other => return Ok(other),
        }
    }
    Ok(MembershipCertificate::Negative(Negative::Exhausted {
        subuniverses,
        maps,
    }))
}

/// Quotients by congruences with a unique upper cover; these are exactly
/// the subdirectly irreducible quotients.
pub fn si_quotients(
    a: &FiniteAlgebra,
    budgets: &Budgets,
) -> Result<Vec<(Congruence, FiniteAlgebra)>> {
    let l = con_lattice(a, budgets)?;
    let mut out = Vec::new();
    for i in 0..l.elements().len() {
        if l.upper_covers(i).len() == 1 {
            let theta = l.get(i).clone();
            let q = quotient(a, &theta)?.algebra;
            out.push((theta, q));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    /// No maximal centralizing congruence has a complete proof.
    NoCompleteMaximal,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::NoCompleteMaximal => "NO-COMPLETE-MAXIMAL",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct Conclusion {
    pub alpha: Congruence,
    pub status: Status,
    pub quotient_size: usize,
    /// `B/α ∈ HS(K)` evidence; absent when maximality is not confirmed.
    pub certificate: Option<MembershipCertificate>,
}

#[derive(Debug, Clone)]
pub struct JonssonReport {
    pub algebra_name: String,
    pub class_names: Vec<String>,
    pub modular_assert: bool,
    pub membership: MembershipCertificate,
    pub monolith: Congruence,
    pub centralizers: MaximalCentralizers,
    pub conclusions: Vec<Conclusion>,
    pub outcome: Status,
    /// Wall time; not part of the rendered report.
    pub elapsed: Duration,
}

pub fn jonsson_check(
    b: &FiniteAlgebra,
    class: &[FiniteAlgebra],
    opts: &DecideOptions,
) -> Result<JonssonReport> {
    let started = Instant::now();
    let membership = hsp_membership(b, class, &opts.budgets)?;
    if let MembershipCertificate::Negative(n) = &membership {
        return Err(Error::NotInVariety(match n {
            Negative::Identity(r) => format!("identity {r} fails"),
            Negative::Exhausted { .. } => "no member maps onto it".into(),
        }));
    }
    let lattice = con_lattice(b, &opts.budgets)?;
    let monolith = si_from_lattice(&lattice)
        .monolith
        .ok_or(Error::NotSubdirectlyIrreducible)?;
    let centralizers = maximal_lax_centralizers(b, &monolith, class, opts)?;
    let mut conclusions = Vec::new();
    for (k, &i) in centralizers.maximal.iter().enumerate() {
        let alpha = centralizers.lattice.get(i).clone();
        let q = quotient(b, &alpha)?.algebra;
        let (status, certificate) = if centralizers.confirmed[k] {
            let c = hs_class_membership(&q, class, &opts.budgets)?;
            if c.is_positive() {
                c.verify(&q, class)?;
                (Status::Pass, Some(c))
            } else {
                (Status::Fail, Some(c))
            }
        } else {
            (Status::Inconclusive, None)
        };
        conclusions.push(Conclusion {
            alpha,
            status,
            quotient_size: q.size(),
            certificate,
        });
    }
    let outcome = if conclusions.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if !conclusions.iter().any(|c| c.status == Status::Pass) {
        Status::NoCompleteMaximal
    } else if conclusions.iter().any(|c| c.status == Status::Inconclusive) {
        Status::Inconclusive
    } else {
        Status::Pass
    };
    Ok(JonssonReport {
        algebra_name: "B".into(),
        class_names: (0..class.len()).map(|i| format!("K{i}")).collect(),
        modular_assert: opts.modular_assert,
        membership,
        monolith,
        centralizers,
        conclusions,
        outcome,
        elapsed: started.elapsed(),
    })
}

impl JonssonReport {
    pub fn with_names(mut self, algebra: &str, class: &[String]) -> Self {
        self.algebra_name = algebra.to_string();
        self.class_names = class.to_vec();
        self
    }
}

impl fmt::Display for JonssonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        writeln!(s, "algebra: {}", self.algebra_name)?;
        writeln!(s, "class: {}", self.class_names.join(", "))?;
        writeln!(
            s,
            "modular assertion: {}",
            if self.modular_assert { "on" } else { "off" }
        )?;
        writeln!(s, "membership: {}", self.membership)?;
        writeln!(s, "subdirectly irreducible: yes")?;
        writeln!(s, "monolith: {}", self.monolith)?;
        for w in &self.centralizers.warnings {
            writeln!(s, "warning: {w}")?;
        }
        writeln!(s, "verdicts:")?;
        for (c, v) in self
            .centralizers
            .lattice
            .elements()
            .iter()
            .zip(&self.centralizers.verdicts)
        {
            writeln!(s, "  {c}: {v}")?;
        }
        writeln!(
            s,
            "maximality: {}",
            if self.centralizers.complete {
                "complete"
            } else {
                "incomplete"
            }
        )?;
        for c in &self.conclusions {
            write!(
                s,
                "maximal {}: {} (|B/alpha| = {})",
                c.alpha, c.status, c.quotient_size
            )?;
            if let Some(cert) = &c.certificate {
                write!(s, " {cert}")?;
            }
            writeln!(s)?;
            if c.status == Status::Fail {
                let i = self
                    .centralizers
                    .lattice
                    .index_of(&c.alpha)
                    .expect("lattice member");
                if let Some(w) = self.centralizers.verdicts[i].witness() {
                    writeln!(
                        s,
                        "  probable implementation bug: witness |C| = {}, pi = {:?}, beta = {}, gamma = {}",
                        w.algebra.size(),
                        w.pi.map(),
                        w.beta,
                        w.gamma
                    )?;
                }
            }
        }
        writeln!(s, "outcome: {}", self.outcome)?;
        f.write_str(&s)
    }
}
