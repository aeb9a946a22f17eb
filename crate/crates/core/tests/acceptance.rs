//! Acceptance run: one line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use laxcal_core::curated::*;
use laxcal_core::*;

type Outcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T>(r: laxcal_core::Result<T>, what: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn budgets() -> Budgets {
    Budgets::default()
}

fn modular() -> DecideOptions {
    DecideOptions {
        modular_assert: true,
        ..DecideOptions::default()
    }
}

/// Image partition of `θ` under an onto map, computed directly.
fn image_partition(f: &Homomorphism, theta: &Congruence, m: usize) -> Congruence {
    let mut keys: Vec<usize> = (0..m).collect();
    // Repeatedly merge until stable; an onto map makes every target element an image.
    loop {
        let mut changed = false;
        for x in 0..theta.size() {
            for y in 0..theta.size() {
                if theta.related(x, y) {
                    let (p, q) = (keys[f.apply(x)], keys[f.apply(y)]);
                    if p != q {
                        let (lo, hi) = (p.min(q), p.max(q));
                        keys.iter_mut().filter(|k| **k == hi).for_each(|k| *k = lo);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Congruence::from_keys(&keys);
        }
    }
}

fn criterion_1() -> Outcome {
    let algebras = [
        ("Z2", cyclic_group(2)),
        ("Z4", cyclic_group(4)),
        ("SL2", semilattice(2)),
        ("SL3", semilattice(3)),
    ];
    let mut homs = 0;
    for (na, a) in &algebras {
        for (nb, b) in &algebras {
            if !a.same_signature(b) {
                continue;
            }
            let fs = ok(enumerate_homomorphisms(a, b, &budgets()), "homs")?;
            let (ca, cb) = (brute_con(a), brute_con(b));
            for f in &fs {
                homs += 1;
                for alpha in &ca {
                    let pushed = ok(push_forward(f, b, alpha), "push")?;
                    if f.is_onto() {
                        let want = image_partition(f, &alpha.join(&f.kernel()), b.size());
                        ensure!(
                            pushed == want,
                            "clause 1 fails for {na}->{nb} {:?}",
                            f.map()
                        );
                    }
                    for beta in &cb {
                        let pulled = ok(pull_back(f, beta), "pull")?;
                        ensure!(
                            pushed.leq(beta) == alpha.leq(&pulled),
                            "clause 2 fails for {na}->{nb} {:?}",
                            f.map()
                        );
                    }
                }
                for (nc, c) in &algebras {
                    if !b.same_signature(c) {
                        continue;
                    }
                    for g in ok(enumerate_homomorphisms(b, c, &budgets()), "homs")? {
                        let gf = ok(f.then(&g), "compose")?;
                        for alpha in &ca {
                            let two = ok(
                                push_forward(&g, c, &ok(push_forward(f, b, alpha), "push")?),
                                "push",
                            )?;
                            ensure!(
                                ok(push_forward(&gf, c, alpha), "push")? == two,
                                "clause 3 fails for {na}->{nb}->{nc}"
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{homs} homomorphisms"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for (name, a) in named_suite().into_iter().filter(|(_, a)| a.size() <= 6) {
        let brute = brute_con(&a);
        let mut got = ok(con_lattice(&a, &budgets()), "lattice")?
            .elements()
            .to_vec();
        got.sort();
        ensure!(got == brute, "{name}: lattice differs");
        for x in 0..a.size() {
            for y in x + 1..a.size() {
                ensure!(
                    ok(cg(&a, [(x, y)]), "cg")? == brute_cg(&a, &[(x, y)]),
                    "{name}: cg({x},{y})"
                );
                for z in 0..a.size() {
                    let pairs = [(x, y), (z, (z + 1) % a.size())];
                    ensure!(
                        ok(cg(&a, pairs), "cg")? == brute_cg(&a, &pairs),
                        "{name}: cg{pairs:?}"
                    );
                }
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} algebras"))
}

/// Verified pushout witnesses, with the algebra they witness for.
fn criterion_3(
    witnesses: &mut Vec<(FiniteAlgebra, Congruence, Congruence, LaxWitness)>,
) -> Outcome {
    let mut pairs = 0;
    for (name, b) in [
        ("Z2", cyclic_group(2)),
        ("Z4", cyclic_group(4)),
        ("S3", symmetric_group_3()),
    ] {
        let cons = brute_con(&b);
        for mu in &cons {
            let pa = ok(b_mu(&b, mu), "b_mu")?;
            for alpha in &cons {
                pairs += 1;
                let tc = ok(tc_commutator(&b, mu, alpha, &budgets()), "tc")?;
                let w = ok(modular_witness(&b, mu, alpha), "witness")?;
                let holds = ok(verify_witness(&w, &b, mu, alpha), "verify")?.holds();
                ensure!(
                    holds == tc.is_bottom(),
                    "{name}: verifies={holds} but tc={tc}"
                );
                let delta = ok(delta_congruence(&b, mu, alpha), "delta")?;
                let meet = pa.first.kernel().meet(&delta);
                let m = pa.pairs.len();
                for i in 0..m {
                    for j in 0..m {
                        let ((x, y), (z, w2)) = (pa.pairs[i], pa.pairs[j]);
                        let want = x == z && tc.related(y, w2);
                        ensure!(
                            meet.related(i, j) == want,
                            "{name}: mu={mu} alpha={alpha} at {i},{j}"
                        );
                    }
                }
                if holds {
                    witnesses.push((b.clone(), mu.clone(), alpha.clone(), w));
                }
            }
        }
    }
    Ok(format!(
        "{pairs} pairs, {} verifying witnesses",
        witnesses.len()
    ))
}

fn criterion_4() -> Outcome {
    let z2 = cyclic_group(2);
    let cons = brute_con(&z2);
    for alpha in &cons {
        for beta in &cons {
            let fi = ok(
                free_intersection(&z2, alpha, beta, std::slice::from_ref(&z2), &budgets()),
                "fi",
            )?;
            ensure!(
                fi.free.algebra().size() == 16,
                "free algebra has {} elements",
                fi.free.algebra().size()
            );
            let tc = ok(tc_commutator(&z2, alpha, beta, &budgets()), "tc")?;
            ensure!(fi.value == tc, "Z2: fi={} tc={tc}", fi.value);
        }
    }
    let sl = semilattice(2);
    let cons = brute_con(&sl);
    let fi = |a: &Congruence, b: &Congruence| {
        free_intersection(&sl, a, b, std::slice::from_ref(&sl), &budgets())
            .map_err(|e| e.to_string())
    };
    for a in &cons {
        for b in &cons {
            let v = fi(a, b)?;
            ensure!(
                v.free.algebra().size() == 15,
                "free algebra has {} elements",
                v.free.algebra().size()
            );
            ensure!(v.value == fi(b, a)?.value, "SL2: not symmetric at {a}, {b}");
            for a2 in cons.iter().filter(|c| a.leq(c)) {
                for b2 in cons.iter().filter(|c| b.leq(c)) {
                    ensure!(
                        v.value.leq(&fi(a2, b2)?.value),
                        "SL2: not monotone at {a}, {b}"
                    );
                }
            }
        }
    }
    Ok("Z2 agrees with tc, SL2 symmetric and monotone".into())
}

fn criterion_5(
    witnesses: &mut Vec<(FiniteAlgebra, Congruence, Congruence, LaxWitness)>,
) -> Outcome {
    let (mut bottoms, mut skipped) = (0, 0);
    for (name, b) in named_suite() {
        let class = std::slice::from_ref(&b);
        let cons = brute_con(&b);
        for mu in &cons {
            for alpha in &cons {
                let fi = match free_intersection(&b, mu, alpha, class, &budgets()) {
                    Ok(fi) => fi,
                    Err(Error::BudgetExceeded { .. }) => {
                        skipped += 1;
                        continue;
                    }
                    Err(e) => return Err(format!("{name}: {e}")),
                };
                if !fi.value.is_bottom() {
                    continue;
                }
                bottoms += 1;
                let v = ok(
                    decide_lax_centrality(&b, mu, alpha, class, &DecideOptions::default()),
                    "decide",
                )?;
                let w = v.witness().ok_or(format!(
                    "{name}: verdict {} for mu={mu} alpha={alpha}",
                    v.label()
                ))?;
                ensure!(
                    ok(verify_witness(w, &b, mu, alpha), "verify")?.holds(),
                    "{name}: witness fails"
                );
                witnesses.push((b.clone(), mu.clone(), alpha.clone(), w.clone()));
            }
        }
    }
    ensure!(bottoms > 0, "no bottom free intersections");
    Ok(format!(
        "{bottoms} bottom free intersections, {skipped} over budget"
    ))
}

fn criterion_6(witnesses: &[(FiniteAlgebra, Congruence, Congruence, LaxWitness)]) -> Outcome {
    for (b, mu, alpha, w) in witnesses {
        let class = std::slice::from_ref(b);
        let n = ok(sp_normalize_witness(w, class, &budgets()), "normalize")?;
        ensure!(
            ok(verify_witness(&n, b, mu, alpha), "verify")?.holds(),
            "output does not verify for mu={mu}"
        );
        let certs = n.certificates.as_ref().ok_or("no certificates")?;
        ok(certs.verify(class), "certificates")?;
        let qb = ok(quotient(&n.algebra, &n.beta), "quotient")?.algebra;
        let qg = ok(quotient(&n.algebra, &n.gamma), "quotient")?.algebra;
        ensure!(
            certs.beta_quotient == qb && certs.gamma_quotient == qg,
            "certificate quotients differ"
        );
    }
    Ok(format!("{} witnesses", witnesses.len()))
}

fn jonsson_suite() -> Vec<(&'static str, FiniteAlgebra, &'static str, FiniteAlgebra)> {
    vec![
        ("S3", symmetric_group_3(), "S3", symmetric_group_3()),
        ("Z4", cyclic_group(4), "Z4", cyclic_group(4)),
        ("Z2", cyclic_group(2), "Z4", cyclic_group(4)),
        ("L2", two_element_lattice(), "L2", two_element_lattice()),
    ]
}

fn full_run() -> std::result::Result<String, String> {
    let mut out = String::new();
    for (nb, b, nk, k) in jonsson_suite() {
        let r = ok(jonsson_check(&b, std::slice::from_ref(&k), &modular()), nb)?;
        out.push_str(&r.with_names(nb, &[nk.to_string()]).to_string());
        out.push('\n');
    }
    for (name, b) in named_suite() {
        let l = ok(con_lattice(&b, &budgets()), "lattice")?;
        out.push_str(&lattice_dot(name, &l));
        let top = Congruence::top(b.size());
        let m = ok(
            maximal_lax_centralizers(
                &b,
                &top,
                std::slice::from_ref(&b),
                &DecideOptions::default(),
            ),
            name,
        )?;
        for (c, v) in l.elements().iter().zip(&m.verdicts) {
            out.push_str(&format!("{name} {c} {}\n", v.label()));
        }
    }
    Ok(out)
}

fn criterion_7() -> Outcome {
    let mut lines = Vec::new();
    for (nb, b, nk, k) in jonsson_suite() {
        let r = ok(jonsson_check(&b, std::slice::from_ref(&k), &modular()), nb)?;
        ensure!(
            r.conclusions.iter().all(|c| c.status != Status::Fail),
            "({nb}, {{{nk}}}) has a FAIL:\n{r}"
        );
        ensure!(
            r.outcome == Status::Pass,
            "({nb}, {{{nk}}}) outcome {}",
            r.outcome
        );
        lines.push(format!("({nb},{{{nk}}})"));
    }
    Ok(lines.join(" "))
}

fn criterion_8() -> Outcome {
    let (a, b) = (full_run()?, full_run()?);
    ensure!(a == b, "reports differ between runs");
    Ok(format!("{} bytes identical", a.len()))
}

fn criterion_9() -> Outcome {
    let sig = Signature::new([("f", 2), ("g", 2)]).map_err(|e| e.to_string())?;
    let cases = [
        (
            "Z8 ring",
            FiniteAlgebra::from_fn(sig.clone(), 8, |s, a| {
                if s == 0 {
                    (a[0] + a[1]) % 8
                } else {
                    a[0] * a[1] % 8
                }
            }),
        ),
        (
            "8-chain lattice",
            FiniteAlgebra::from_fn(sig.clone(), 8, |s, a| {
                if s == 0 {
                    a[0].min(a[1])
                } else {
                    a[0].max(a[1])
                }
            }),
        ),
        (
            "projections",
            FiniteAlgebra::from_fn(sig.clone(), 8, |s, a| a[s]),
        ),
    ];
    let mut sizes = Vec::new();
    for (name, a) in cases {
        let a = ok(a, name)?;
        let l = ok(con_lattice(&a, &budgets()), name)?;
        sizes.push(format!("{name}:{}", l.len()));
    }
    ensure!(
        sizes == ["Z8 ring:4", "8-chain lattice:128", "projections:4140"],
        "lattice sizes {sizes:?}"
    );
    Ok(sizes.join(" "))
}

fn run(index: usize, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let (pass, detail) = match (result, limit) {
        (Ok(_), Some(l)) if elapsed > l => (false, format!("over the {}s limit", l.as_secs())),
        (Ok(d), _) => (true, d),
        (Err(e), _) => (false, e),
    };
    println!(
        "criterion {index}: {} ({:.2}s) {detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    pass
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut witnesses = Vec::new();
    let mut all = true;
    all &= run(1, Some(secs(10)), criterion_1);
    all &= run(2, Some(secs(30)), criterion_2);
    all &= run(3, Some(secs(60)), || criterion_3(&mut witnesses));
    all &= run(4, Some(secs(5)), criterion_4);
    all &= run(5, None, || criterion_5(&mut witnesses));
    all &= run(6, Some(secs(60)), || criterion_6(&witnesses));
    all &= run(7, Some(secs(120)), criterion_7);
    all &= run(8, None, criterion_8);
    all &= run(9, Some(secs(10)), criterion_9);
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
