//! Term-condition commutator and free intersection.

use crate::algebra::FiniteAlgebra;
use crate::budget::Budgets;
use crate::closure::close;
use crate::congruence::{cg, check_size, push_forward, Congruence};
use crate::error::{check_budget, saturating_pow, Error, Result};
use crate::free::{free_algebra_named, FreePresentation};
use crate::hom::Homomorphism;

/// Term-condition commutator: the least `δ` such that every matrix
/// `(m11 m12 / m21 m22)` of `M(α, β)` with `m11 δ m12` has `m21 δ m22`.
///
/// `M(α, β)` is the subalgebra of `B⁴` generated by `(a, a, a', a')` for
/// `a α a'` and `(b, b', b, b')` for `b β b'`. In congruence-modular
/// varieties this is the modular commutator; elsewhere it is only reported.
pub fn tc_commutator(
    b: &FiniteAlgebra,
    alpha: &Congruence,
    beta: &Congruence,
    budgets: &Budgets,
) -> Result<Congruence> {
    let m = matrices(b, alpha, beta, budgets)?;
    let mut delta = Congruence::bottom(b.size());
    loop {
        let pairs: Vec<(usize, usize)> = m
            .iter()
            .filter(|x| delta.related(x[0], x[1]))
            .map(|x| (x[2], x[3]))
            .collect();
        let next = cg(b, pairs)?;
        if next == delta {
            return Ok(delta);
        }
        delta = next;
    }
}

fn matrices(
    b: &FiniteAlgebra,
    alpha: &Congruence,
    beta: &Congruence,
    budgets: &Budgets,
) -> Result<Vec<[usize; 4]>> {
    check_size(alpha.size(), b.size())?;
    check_size(beta.size(), b.size())?;
    alpha.check_compatible(b)?;
    beta.check_compatible(b)?;
    check_budget(
        "commutator matrices (|B|^4)",
        saturating_pow(b.size(), 4),
        budgets.max_free_size as u128,
    )?;
    let n = b.size();
    let mut seeds = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if alpha.related(x, y) {
                seeds.push([x, x, y, y]);
            }
            if beta.related(x, y) {
                seeds.push([x, y, x, y]);
            }
        }
    }
    let mut column = Vec::new();
    let c = close(b.signature(), seeds, usize::MAX, |s, args| {
        let mut out = [0usize; 4];
        for (i, o) in out.iter_mut().enumerate() {
            column.clear();
            column.extend(args.iter().map(|m| m[i]));
            *o = b.apply(s, &column);
        }
        out
    })?;
    Ok(c.elements)
}

/// Result of the free-intersection construction with its ingredients.
#[derive(Debug, Clone)]
pub struct FreeIntersection {
    /// `ζ⃗(ᾱ ∧ β̄)`.
    pub value: Congruence,
    /// Free algebra on `x_b, y_b` for `b` in `B`.
    pub free: FreePresentation,
    pub alpha_bar: Congruence,
    pub beta_bar: Congruence,
    /// `x_b ↦ b`, `y_b ↦ b`.
    pub zeta: Homomorphism,
}

/// Free intersection of `α` and `β` with respect to `HSP(K)`.
pub fn free_intersection(
    b: &FiniteAlgebra,
    alpha: &Congruence,
    beta: &Congruence,
    class: &[FiniteAlgebra],
    budgets: &Budgets,
) -> Result<FreeIntersection> {
    check_size(alpha.size(), b.size())?;
    check_size(beta.size(), b.size())?;
    alpha.check_compatible(b)?;
    beta.check_compatible(b)?;
    let n = b.size();
    let names = (0..n)
        .map(|i| format!("x{i}"))
        .chain((0..n).map(|i| format!("y{i}")))
        .collect();
    let free = free_algebra_named(class, names, budgets)?;
    let f = free.algebra();
    let assignment: Vec<usize> = (0..n).chain(0..n).collect();
    let zeta = free.eval(b, &assignment)?;
    let alpha_bar = cg(
        f,
        alpha
            .spanning_pairs()
            .map(|(x, r)| (free.generator(x), free.generator(r)))
            .collect::<Vec<_>>(),
    )?;
    let beta_bar = cg(
        f,
        beta.spanning_pairs()
            .map(|(x, r)| (free.generator(n + x), free.generator(n + r)))
            .collect::<Vec<_>>(),
    )?;
    if push_forward(&zeta, b, &alpha_bar)? != *alpha || push_forward(&zeta, b, &beta_bar)? != *beta
    {
        return Err(Error::InvariantViolated(
            "push-forward of a generator congruence differs from the original".into(),
        ));
    }
    let value = push_forward(&zeta, b, &alpha_bar.meet(&beta_bar))?;
    Ok(FreeIntersection {
        value,
        free,
        alpha_bar,
        beta_bar,
        zeta,
    })
}
