use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use qtsym_core::bases::{hl_p, inhom_f_all_routes, interp_func, interp_macdonald, macdonald_func};
use qtsym_core::identities::{check_refined_cauchy, check_wzj_equality, CauchyVariant};
use qtsym_core::operators::{apply_ak, apply_an, eigen_ck};
use qtsym_core::{clear_caches, Partition};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Time `f` from cold memo tables.
fn cold<O>(c: &mut Criterion, name: &str, mut f: impl FnMut() -> O) {
    c.bench_function(name, |b| {
        b.iter_batched(clear_caches, |_| black_box(f()), BatchSize::PerIteration)
    });
}

fn bases(c: &mut Criterion) {
    cold(c, "hl_p (3,2,1) N=4", || hl_p(&p(&[3, 2, 1]), 4));
    cold(c, "macdonald_func (2,2)", || macdonald_func(&p(&[2, 2])));
    cold(c, "interp_macdonald (2,1,1) N=3", || {
        interp_macdonald(&p(&[2, 1, 1]), 3).unwrap()
    });
    cold(c, "inhom_f all routes (2,1) N=3", || {
        inhom_f_all_routes(&p(&[2, 1]), 3).unwrap()
    });
}

fn operators(c: &mut Criterion) {
    cold(c, "apply_an on I_(2,1) N=3", || {
        let f = interp_macdonald(&p(&[2, 1]), 3).unwrap();
        apply_an(&f, 3).unwrap()
    });
    cold(c, "apply_ak k=2 on I_(2,2)", || {
        let f = interp_func(&p(&[2, 2])).unwrap();
        apply_ak(2, &f).unwrap()
    });
    cold(c, "eigen_ck (3,1)", || eigen_ck(&p(&[3, 1])).unwrap());
}

fn identities(c: &mut Criterion) {
    cold(c, "refined cauchy N=2 M=2 D=3", || {
        check_refined_cauchy(2, 2, 3, CauchyVariant::Proposition)
    });
    cold(c, "wzj equality N=2", || check_wzj_equality(2));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10).measurement_time(Duration::from_secs(3));
    targets = bases, operators, identities
}
criterion_main!(benches);
