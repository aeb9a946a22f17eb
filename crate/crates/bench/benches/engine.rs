use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use laxcal_core::curated::*;
use laxcal_core::*;

fn two_binary_ops() -> Signature {
    Signature::new([("f", 2), ("g", 2)]).unwrap()
}

fn lattices(c: &mut Criterion) {
    let b = Budgets::default();
    let chain = FiniteAlgebra::from_fn(two_binary_ops(), 8, |s, a| {
        if s == 0 {
            a[0].min(a[1])
        } else {
            a[0].max(a[1])
        }
    })
    .unwrap();
    let proj = FiniteAlgebra::from_fn(two_binary_ops(), 8, |s, a| a[s]).unwrap();
    c.bench_function("con_lattice 8-chain lattice", |x| {
        x.iter(|| con_lattice(black_box(&chain), &b).unwrap())
    });
    c.bench_function("con_lattice 8-element projections", |x| {
        x.iter(|| con_lattice(black_box(&proj), &b).unwrap())
    });
}

fn free(c: &mut Criterion) {
    let b = Budgets::default();
    c.bench_function("free Z3 on 4", |x| {
        x.iter(|| free_algebra(&[cyclic_group(3)], black_box(4), &b).unwrap())
    });
    c.bench_function("free S3 on 2", |x| {
        x.iter(|| free_algebra(&[symmetric_group_3()], black_box(2), &b).unwrap())
    });
    let sl = semilattice(2);
    let top = Congruence::top(2);
    c.bench_function("free intersection SL2", |x| {
        x.iter(|| free_intersection(&sl, &top, &top, std::slice::from_ref(&sl), &b).unwrap())
    });
}

fn centrality(c: &mut Criterion) {
    let b = Budgets::default();
    let s3 = symmetric_group_3();
    let top = Congruence::top(6);
    c.bench_function("tc_commutator S3", |x| {
        x.iter(|| tc_commutator(black_box(&s3), &top, &top, &b).unwrap())
    });
    let opts = DecideOptions {
        modular_assert: true,
        ..DecideOptions::default()
    };
    c.bench_function("jonsson S3", |x| {
        x.iter(|| jonsson_check(&s3, std::slice::from_ref(&s3), &opts).unwrap())
    });
    let g3 = groupoid_g3();
    let top3 = Congruence::top(3);
    c.bench_function("decide G3 search", |x| {
        x.iter(|| {
            decide_lax_centrality(
                &g3,
                &top3,
                &top3,
                std::slice::from_ref(&g3),
                &DecideOptions::default(),
            )
            .unwrap()
        })
    });
}

criterion_group!(benches, lattices, free, centrality);
criterion_main!(benches);
