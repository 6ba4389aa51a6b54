use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use gcg::dynamics::{apply_with, check_shift_invariance};
use gcg::exec::Schedule;
use gcg::localrule::{check_local_rule, identity, inflate, CheckMode};
use gcg::pathlang::grid;
use gcg::Signature;

const SCHEDULES: [(&str, Schedule); 2] = [
    ("sequential", Schedule::Sequential),
    ("parallel", Schedule::Parallel),
];

fn global_step(c: &mut Criterion) {
    let rule = inflate(&Signature::unlabeled("abcd")).unwrap();
    let mut group = c.benchmark_group("inflate_step");
    for n in [8, 24] {
        let x = grid(n, n, true).unwrap();
        for (name, s) in SCHEDULES {
            group.bench_with_input(BenchmarkId::new(name, n * n), &x, |b, x| {
                b.iter(|| apply_with(&rule, black_box(x), s).unwrap())
            });
        }
    }
    group.finish();
}

fn shift_invariance(c: &mut Criterion) {
    let rule = inflate(&Signature::unlabeled("abcd")).unwrap();
    let x = grid(6, 6, true).unwrap();
    let mut group = c.benchmark_group("shift_invariance");
    group.sample_size(10);
    for (name, s) in SCHEDULES {
        group.bench_function(name, |b| {
            b.iter(|| check_shift_invariance(&rule, black_box(&x), s).unwrap())
        });
    }
    group.finish();
}

fn rule_check(c: &mut Criterion) {
    let sig = Signature::unlabeled("ab");
    let rule = identity(&sig, 0);
    let mode = CheckMode::Exhaustive { limit: 1_000_000 };
    let mut group = c.benchmark_group("check_local_rule");
    group.sample_size(10);
    for (name, s) in SCHEDULES {
        group.bench_function(name, |b| {
            b.iter(|| check_local_rule(&rule, &mode, s).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, global_step, shift_invariance, rule_check);
criterion_main!(benches);
