//! Staged decision procedure for lax centrality and the derived
//! commutator-like operations.

use std::collections::HashSet;
use std::fmt;
use std::ops::ControlFlow;

use crate::algebra::{generating_set, induced, FiniteAlgebra};
use crate::budget::{Budgets, SearchBudget};
use crate::closure::{close, Derivation};
use crate::commutator::{free_intersection, tc_commutator};
use crate::congruence::{cg, check_size, push_forward, Congruence};
use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::lattice::{
    con_lattice, con_lattice_unbounded, is_modular_lattice, CongruenceLattice, Lattice,
};
use crate::lax::{normalize_witness, verify_witness, LaxWitness};
use crate::product::direct_product;
use crate::pushout::modular_witness;

#[derive(Debug, Clone, Default)]
pub struct DecideOptions {
    /// The caller asserts that `HSP(K)` is congruence-modular. Enables the
    /// commutator test and with it negative verdicts.
    pub modular_assert: bool,
    pub budgets: Budgets,
}

/// Which stage produced a positive verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// `μ ∧ α = ⊥`, witnessed by `(B, id, μ, α)`.
    Trivial,
    /// Free intersection is `⊥`; witness is `F/(ᾱ ∧ β̄)`.
    FreeIntersection,
    /// The `B(μ)` pushout quadruple verifies.
    Pushout,
    /// Found by bounded search over subalgebras of products of members.
    Search,
    /// Reused from a larger centralizing congruence.
    Inherited,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Trivial => "trivial",
            Route::FreeIntersection => "free-intersection",
            Route::Pushout => "pushout",
            Route::Search => "search",
            Route::Inherited => "inherited",
        }
    }
}

/// Counters for the bounded witness search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchReport {
    pub products: usize,
    pub skipped_products: usize,
    pub candidates: usize,
    pub oversized_candidates: usize,
    pub algebras_checked: usize,
    pub pairs: usize,
    /// True when a limit stopped the search before it ran out of candidates.
    pub budget_hit: bool,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone)]
pub enum CentralityVerdict {
    Yes {
        witness: Box<LaxWitness>,
        route: Route,
    },
    No {
        reason: String,
    },
    Unknown(SearchReport),
}

impl CentralityVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, CentralityVerdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, CentralityVerdict::No { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, CentralityVerdict::Unknown(_))
    }

    pub fn witness(&self) -> Option<&LaxWitness> {
        match self {
            CentralityVerdict::Yes { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            CentralityVerdict::Yes { .. } => "yes",
            CentralityVerdict::No { .. } => "no",
            CentralityVerdict::Unknown(_) => "unknown",
        }
    }
}

fn check_inputs(
    b: &FiniteAlgebra,
    mu: &Congruence,
    alpha: &Congruence,
    class: &[FiniteAlgebra],
) -> Result<()> {
    check_size(mu.size(), b.size())?;
    check_size(alpha.size(), b.size())?;
    mu.check_compatible(b)?;
    alpha.check_compatible(b)?;
    if class.is_empty() {
        return Err(Error::EmptyClass);
    }
    if class.iter().any(|a| !a.same_signature(b)) {
        return Err(Error::SignatureMismatch);
    }
    Ok(())
}

fn yes(witness: LaxWitness, route: Route) -> CentralityVerdict {
    CentralityVerdict::Yes {
        witness: Box::new(witness),
        route,
    }
}

/// Decides whether `α` laxly centralizes `μ` in `Con B` with respect to
/// `HSP(K)`.
///
impl fmt::Display for CentralityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralityVerdict::Yes { witness, route } => write!(
                f,
                "yes ({}, |C| = {}, beta = {}, gamma = {})",
                route.as_str(),
                witness.algebra.size(),
                witness.beta,
                witness.gamma
            ),
            CentralityVerdict::No { reason } => write!(f, "no ({reason})"),
            CentralityVerdict::Unknown(r) => write!(
                f,
                "unknown (products {}, candidates {}, algebras {}, pairs {}{})",
                r.products,
                r.candidates,
                r.algebras_checked,
                r.pairs,
                if r.budget_hit { ", budget hit" } else { "" }
            ),
        }
    }
}

/// Stages, in order: `μ ∧ α = ⊥`; free intersection `⊥` (when the free
/// algebra fits the budget); the `B(μ)` pushout quadruple, which under
/// `modular_assert` is decisive in both directions via the term-condition
/// commutator; bounded search. A `No` verdict is only produced under
/// `modular_assert`. If the commutator and the pushout quadruple disagree
/// under that assertion, the assertion is false and an error is returned.
pub fn decide_lax_centrality(
    b: &FiniteAlgebra,
    mu: &Congruence,
    alpha: &Congruence,
    class: &[FiniteAlgebra],
    opts: &DecideOptions,
) -> Result<CentralityVerdict> {
    check_inputs(b, mu, alpha, class)?;
    if mu.meet(alpha).is_bottom() {
        return Ok(yes(LaxWitness::identity(b, mu, alpha), Route::Trivial));
    }
    let mut notes = Vec::new();
    match free_intersection(b, mu, alpha, class, &opts.budgets) {
        Ok(fi) if fi.value.is_bottom() => {
            let raw = LaxWitness::new(
                fi.free.algebra().clone(),
                fi.zeta,
                fi.alpha_bar,
                fi.beta_bar,
            );
            return Ok(yes(normalize_witness(&raw)?, Route::FreeIntersection));
        }
        Ok(fi) => notes.push(format!("free intersection is {}", fi.value)),
        Err(Error::BudgetExceeded { what, .. }) => {
            notes.push(format!("free intersection skipped: {what}"))
        }
        Err(e) => return Err(e),
    }
    let pushout = modular_witness(b, mu, alpha)?;
    let pushout_ok = verify_witness(&pushout, b, mu, alpha)?.holds();
    if opts.modular_assert {
        let comm = tc_commutator(b, mu, alpha, &opts.budgets)?;
        return match (comm.is_bottom(), pushout_ok) {
            (true, true) => Ok(yes(pushout, Route::Pushout)),
            (false, false) => Ok(CentralityVerdict::No {
                reason: format!("commutator [mu,alpha] = {comm} is not bottom"),
            }),
            _ => Err(Error::ModularityRefuted(format!(
                "commutator {comm} but pushout witness {}",
                if pushout_ok { "verifies" } else { "fails" }
            ))),
        };
    }
    if pushout_ok {
        return Ok(yes(pushout, Route::Pushout));
    }
    let mut found = None;
    let mut report = explore(b, class, &opts.budgets, |cand, report| {
        let bs = minimal_reaching(cand.pool, cand.pi, b, mu)?;
        let gs = minimal_reaching(cand.pool, cand.pi, b, alpha)?;
        for beta in &bs {
            for gamma in &gs {
                if report.pairs >= opts.budgets.search.max_pairs {
                    report.budget_hit = true;
                    return Ok(ControlFlow::Break(()));
                }
                report.pairs += 1;
                if beta.meet(gamma).is_bottom() {
                    found = Some(LaxWitness::new(
                        cand.algebra.clone(),
                        cand.pi.clone(),
                        beta.clone(),
                        gamma.clone(),
                    ));
                    return Ok(ControlFlow::Break(()));
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    })?;
    if let Some(w) = found {
        return Ok(yes(w, Route::Search));
    }
    notes.append(&mut report.notes);
    report.notes = notes;
    Ok(CentralityVerdict::Unknown(report))
}

pub(crate) struct Candidate<'a> {
    pub algebra: &'a FiniteAlgebra,
    pub pi: &'a Homomorphism,
    pub pool: &'a [Congruence],
}

fn rank_order(a: &Congruence, b: &Congruence) -> std::cmp::Ordering {
    b.block_count().cmp(&a.block_count()).then_with(|| a.cmp(b))
}

/// Candidate congruences of a search algebra: the whole lattice when small,
/// otherwise principal congruences and joins of two of them.
fn congruence_pool(c: &FiniteAlgebra, budgets: &Budgets) -> Result<Vec<Congruence>> {
    if c.size() <= budgets.max_lattice_size {
        return Ok(con_lattice_unbounded(c)?.elements().to_vec());
    }
    let mut seen = HashSet::new();
    let mut principal = Vec::new();
    for x in 0..c.size() {
        for y in x + 1..c.size() {
            let p = cg(c, [(x, y)])?;
            if seen.insert(p.clone()) {
                principal.push(p);
            }
        }
    }
    let mut pool = principal.clone();
    if principal.len() <= 64 {
        for (i, p) in principal.iter().enumerate() {
            for q in &principal[i + 1..] {
                let j = p.join(q);
                if seen.insert(j.clone()) {
                    pool.push(j);
                }
            }
        }
    }
    pool.push(Congruence::bottom(c.size()));
    pool.sort_by(rank_order);
    pool.dedup();
    Ok(pool)
}

/// Minimal members `θ` of `pool` with `π⃗θ ≥ target`.
fn minimal_reaching(
    pool: &[Congruence],
    pi: &Homomorphism,
    b: &FiniteAlgebra,
    target: &Congruence,
) -> Result<Vec<Congruence>> {
    let mut out: Vec<Congruence> = Vec::new();
    for theta in pool {
        if out.iter().any(|m| m.leq(theta)) {
            continue;
        }
        if target.leq(&push_forward(pi, b, theta)?) {
            out.push(theta.clone());
        }
    }
    Ok(out)
}

/// Nondecreasing index tuples of length `p` over `0..k`, lexicographic.
fn multisets(k: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(k: usize, p: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(k, p, i, cur, out);
            cur.pop();
        }
    }
    rec(k, p, 0, &mut cur, &mut out);
    out
}

/// Enumerates onto maps `π: C → B` with `C` a subalgebra of a product of
/// at most `max_factors` class members, generated by a lift of a fixed
/// generating set of `B`. Order: fewer factors first, factor tuples and
/// generator lifts lexicographic.
pub(crate) fn explore(
    b: &FiniteAlgebra,
    class: &[FiniteAlgebra],
    budgets: &Budgets,
    mut visit: impl FnMut(Candidate<'_>, &mut SearchReport) -> Result<ControlFlow<()>>,
) -> Result<SearchReport> {
    let SearchBudget {
        max_factors,
        max_witness_size,
        max_product_size,
        max_candidates,
        ..
    } = budgets.search;
    let mut report = SearchReport::default();
    let gens = generating_set(b);
    let mut seen: HashSet<(Vec<usize>, Vec<usize>, Vec<usize>)> = HashSet::new();
    for p in 1..=max_factors {
        for tuple in multisets(class.len(), p) {
            let size = tuple
                .iter()
                .try_fold(1usize, |acc, &i| acc.checked_mul(class[i].size()))
                .unwrap_or(usize::MAX);
            if size > max_product_size {
                report.skipped_products += 1;
                continue;
            }
            let factors: Vec<&FiniteAlgebra> = tuple.iter().map(|&i| &class[i]).collect();
            let product = match direct_product(b.signature(), &factors, budgets) {
                Ok(pr) => pr,
                Err(Error::BudgetExceeded { .. }) => {
                    report.skipped_products += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            report.products += 1;
            let pa = product.algebra();
            let mut pools: std::collections::HashMap<Vec<usize>, (FiniteAlgebra, Vec<Congruence>)> =
                std::collections::HashMap::new();
            let mut stop = false;
            let mut outcome = Ok(());
            crate::closure::for_each_tuple(pa.size(), gens.len(), |lift| {
                if stop {
                    return;
                }
                if report.candidates >= max_candidates {
                    report.budget_hit = true;
                    stop = true;
                    return;
                }
                report.candidates += 1;
                let r = (|| -> Result<ControlFlow<()>> {
                    let closure = match close(
                        pa.signature(),
                        lift.iter().copied(),
                        max_witness_size,
                        |s, args| {
                            let args: Vec<usize> = args.iter().map(|&&x| x).collect();
                            pa.apply(s, &args)
                        },
                    ) {
                        Ok(c) => c,
                        Err(Error::BudgetExceeded { .. }) => {
                            report.oversized_candidates += 1;
                            return Ok(ControlFlow::Continue(()));
                        }
                        Err(e) => return Err(e),
                    };
                    // Extend the lift to a map into B along the derivations.
                    let mut image = vec![0usize; closure.elements.len()];
                    let mut args = Vec::new();
                    for (i, d) in closure.derivations.iter().enumerate() {
                        image[i] = match d {
                            Derivation::Seed(j) => gens[*j],
                            Derivation::Op { symbol, args: from } => {
                                args.clear();
                                args.extend(from.iter().map(|&k| image[k]));
                                b.apply(*symbol, &args)
                            }
                        };
                    }
                    // Seeds that coincide must agree in B.
                    for (j, &l) in lift.iter().enumerate() {
                        if image[closure.index[&l]] != gens[j] {
                            return Ok(ControlFlow::Continue(()));
                        }
                    }
                    let mut elements = closure.elements.clone();
                    elements.sort_unstable();
                    let map: Vec<usize> =
                        elements.iter().map(|e| image[closure.index[e]]).collect();
                    if !seen.insert((tuple.clone(), elements.clone(), map.clone())) {
                        return Ok(ControlFlow::Continue(()));
                    }
                    if !pools.contains_key(&elements) {
                        let c = induced(pa, &elements);
                        let pool = congruence_pool(&c, budgets)?;
                        pools.insert(elements.clone(), (c, pool));
                    }
                    let (c, pool) = &pools[&elements];
                    let pi = Homomorphism::trusted(c.size(), b.size(), map);
                    if pi.validate(c, b).is_err() {
                        return Ok(ControlFlow::Continue(()));
                    }
                    report.algebras_checked += 1;
                    visit(
                        Candidate {
                            algebra: c,
                            pi: &pi,
                            pool,
                        },
                        &mut report,
                    )
                })();
                match r {
                    Ok(ControlFlow::Continue(())) => {}
                    Ok(ControlFlow::Break(())) => stop = true,
                    Err(e) => {
                        outcome = Err(e);
                        stop = true;
                    }
                }
            });
            outcome?;
            if stop {
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Per-congruence verdicts and the maximal laxly centralizing congruences.
#[derive(Debug, Clone)]
pub struct MaximalCentralizers {
    pub lattice: CongruenceLattice,
    /// One verdict per lattice element, indexed like the lattice.
    pub verdicts: Vec<CentralityVerdict>,
    /// Lattice indices of the maximal elements of the positive set, ascending.
    pub maximal: Vec<usize>,
    /// Per maximal element: no undecided congruence lies strictly above it.
    pub confirmed: Vec<bool>,
    pub complete: bool,
    pub warnings: Vec<String>,
}

impl MaximalCentralizers {
    pub fn maximal_congruences(&self) -> Vec<&Congruence> {
        self.maximal.iter().map(|&i| self.lattice.get(i)).collect()
    }
}

/// Evaluates every `α ∈ Con B` top-down. Positive verdicts propagate to
/// the down-set of `α` by reusing the witness.
pub fn maximal_lax_centralizers(
    b: &FiniteAlgebra,
    mu: &Congruence,
    class: &[FiniteAlgebra],
    opts: &DecideOptions,
) -> Result<MaximalCentralizers> {
    let lattice = con_lattice(b, &opts.budgets)?;
    let mut warnings = Vec::new();
    if opts.modular_assert && !is_modular_lattice(&lattice) {
        warnings.push("Con B is not modular; the modularity assertion is false".to_string());
    } else if opts.modular_assert && b.size() * b.size() <= opts.budgets.max_lattice_size {
        let square = direct_product(b.signature(), &[b, b], &opts.budgets)?;
        if !is_modular_lattice(&con_lattice(square.algebra(), &opts.budgets)?) {
            warnings.push("Con B² is not modular; the modularity assertion is false".to_string());
        }
    }
    let n = lattice.len();
    let mut verdicts: Vec<Option<CentralityVerdict>> = vec![None; n];
    for i in (0..n).rev() {
        let alpha = lattice.get(i);
        let inherited = (i + 1..n).find_map(|j| match &verdicts[j] {
            Some(CentralityVerdict::Yes { witness, .. }) if alpha.leq(lattice.get(j)) => {
                Some(witness.clone())
            }
            _ => None,
        });
        let verdict = match inherited {
            Some(w) => {
                if !verify_witness(&w, b, mu, alpha)?.holds() {
                    return Err(Error::InvariantViolated(format!(
                        "witness for a larger congruence fails for {alpha}"
                    )));
                }
                CentralityVerdict::Yes {
                    witness: w,
                    route: Route::Inherited,
                }
            }
            None => decide_lax_centrality(b, mu, alpha, class, opts)?,
        };
        verdicts[i] = Some(verdict);
    }
    let verdicts: Vec<CentralityVerdict> =
        verdicts.into_iter().map(|v| v.expect("filled")).collect();
    let above = |i: usize, j: usize| i != j && lattice.leq(i, j);
    let maximal: Vec<usize> = (0..n)
        .filter(|&i| verdicts[i].is_yes() && !(0..n).any(|j| verdicts[j].is_yes() && above(i, j)))
        .collect();
    let confirmed: Vec<bool> = maximal
        .iter()
        .map(|&i| !(0..n).any(|j| verdicts[j].is_unknown() && above(i, j)))
        .collect();
    let complete = confirmed.iter().all(|&c| c);
    Ok(MaximalCentralizers {
        lattice,
        verdicts,
        maximal,
        confirmed,
        complete,
        warnings,
    })
}

/// The two-valued commutator: `⊥` when `α` laxly centralizes `μ`, `⊤`
/// when it provably does not. Undecided cases stay undecided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kappa {
    Bottom,
    Top,
    Unknown,
}

impl Kappa {
    pub fn to_congruence(self, n: usize) -> Option<Congruence> {
        match self {
            Kappa::Bottom => Some(Congruence::bottom(n)),
            Kappa::Top => Some(Congruence::top(n)),
            Kappa::Unknown => None,
        }
    }
}

pub fn trivial_commutator(
    b: &FiniteAlgebra,
    mu: &Congruence,
    alpha: &Congruence,
    class: &[FiniteAlgebra],
    opts: &DecideOptions,
) -> Result<Kappa> {
    Ok(match decide_lax_centrality(b, mu, alpha, class, opts)? {
        CentralityVerdict::Yes { .. } => Kappa::Bottom,
        CentralityVerdict::No { .. } => Kappa::Top,
        CentralityVerdict::Unknown(_) => Kappa::Unknown,
    })
}

#[derive(Debug, Clone)]
pub struct MeetCommutator {
    pub value: Congruence,
    /// Only under the modularity assertion, where the meet is the commutator.
    pub exact: bool,
    pub quadruples: usize,
    pub report: SearchReport,
}

/// Meet of `π⃗(β ∧ γ)` over the quadruples with `π⃗β ≥ μ`, `π⃗γ ≥ α` that
/// the budget reaches. Always includes the `B(μ)` pushout quadruple and
/// `(B, id, μ, α)`.
pub fn witness_meet_commutator(
    b: &FiniteAlgebra,
    mu: &Congruence,
    alpha: &Congruence,
    class: &[FiniteAlgebra],
    opts: &DecideOptions,
) -> Result<MeetCommutator> {
    check_inputs(b, mu, alpha, class)?;
    let w = modular_witness(b, mu, alpha)?;
    let mut value = push_forward(&w.pi, b, &w.beta.meet(&w.gamma))?;
    value = value.meet(&mu.meet(alpha));
    let mut quadruples = 2;
    let mut notes = Vec::new();
    match free_intersection(b, mu, alpha, class, &opts.budgets) {
        Ok(fi) => {
            value = value.meet(&fi.value);
            quadruples += 1;
        }
        Err(Error::BudgetExceeded { what, .. }) => {
            notes.push(format!("free intersection skipped: {what}"))
        }
        Err(e) => return Err(e),
    }
    let mut report = explore(b, class, &opts.budgets, |cand, report| {
        let bs = minimal_reaching(cand.pool, cand.pi, b, mu)?;
        let gs = minimal_reaching(cand.pool, cand.pi, b, alpha)?;
        for beta in &bs {
            for gamma in &gs {
                if report.pairs >= opts.budgets.search.max_pairs {
                    report.budget_hit = true;
                    return Ok(ControlFlow::Break(()));
                }
                report.pairs += 1;
                quadruples += 1;
                value = value.meet(&push_forward(cand.pi, b, &beta.meet(gamma))?);
            }
        }
        Ok(ControlFlow::Continue(()))
    })?;
    notes.append(&mut report.notes);
    report.notes = notes;
    Ok(MeetCommutator {
        value,
        exact: opts.modular_assert,
        quadruples,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    fn modular() -> DecideOptions {
        DecideOptions {
            modular_assert: true,
            budgets: Budgets::default(),
        }
    }

    fn a3() -> Congruence {
        Congruence::from_blocks(6, &[vec![0, 4, 5], vec![1, 2, 3]]).unwrap()
    }

    #[test]
    fn multisets_are_sorted() {
        assert_eq!(multisets(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(multisets(3, 1).len(), 3);
    }

    #[test]
    fn bottom_alpha_is_trivially_yes() {
        let s3 = symmetric_group_3();
        let v = decide_lax_centrality(
            &s3,
            &a3(),
            &Congruence::bottom(6),
            std::slice::from_ref(&s3),
            &DecideOptions::default(),
        )
        .unwrap();
        assert!(matches!(
            v,
            CentralityVerdict::Yes {
                route: Route::Trivial,
                ..
            }
        ));
    }

    #[test]
    fn z4_yes_and_s3_no() {
        let z4 = cyclic_group(4);
        let theta2 = Congruence::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let v = decide_lax_centrality(
            &z4,
            &theta2,
            &Congruence::top(4),
            std::slice::from_ref(&z4),
            &modular(),
        )
        .unwrap();
        assert!(v.is_yes());
        let s3 = symmetric_group_3();
        let v = decide_lax_centrality(
            &s3,
            &a3(),
            &Congruence::top(6),
            std::slice::from_ref(&s3),
            &modular(),
        )
        .unwrap();
        assert!(v.is_no());
        assert_eq!(
            trivial_commutator(
                &s3,
                &a3(),
                &Congruence::top(6),
                std::slice::from_ref(&s3),
                &modular()
            )
            .unwrap(),
            Kappa::Top
        );
    }

    #[test]
    fn semilattice_top_centralizes_top_by_search_or_free_intersection() {
        let sl = semilattice(2);
        let top = Congruence::top(2);
        let v = decide_lax_centrality(
            &sl,
            &top,
            &top,
            std::slice::from_ref(&sl),
            &DecideOptions::default(),
        )
        .unwrap();
        let w = v.witness().expect("positive verdict");
        assert!(verify_witness(w, &sl, &top, &top).unwrap().holds());
    }

    #[test]
    fn s3_maximal_centralizer() {
        let s3 = symmetric_group_3();
        let m =
            maximal_lax_centralizers(&s3, &a3(), std::slice::from_ref(&s3), &modular()).unwrap();
        assert_eq!(m.maximal_congruences(), vec![&a3()]);
        assert!(m.complete);
        assert!(m.warnings.is_empty());
    }

    #[test]
    fn meet_commutator_on_z4() {
        let z4 = cyclic_group(4);
        let theta2 = Congruence::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let m = witness_meet_commutator(
            &z4,
            &theta2,
            &Congruence::top(4),
            std::slice::from_ref(&z4),
            &modular(),
        )
        .unwrap();
        assert!(m.value.is_bottom());
        assert!(m.exact);
    }
}
