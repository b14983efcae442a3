use criterion::{black_box, criterion_group, criterion_main, Criterion};

use cmtensor_bench::{algebra, cyclic, SESSION};
use cmtensor_core::frontend::{execute, parse_session, RunConfig};
use cmtensor_core::groebner::buchberger;
use cmtensor_core::invariants::{grade, is_cohen_macaulay};
use cmtensor_core::polyring::{MonomialOrder, PrimeField};
use cmtensor_core::tensor;
use cmtensor_core::theorems::{check_thm_1_1_b, check_thm_2_1, generate_corpus, CorpusBudget};

fn groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group("buchberger");
    for n in [4, 5] {
        let (_, gens) = cyclic(n);
        for (name, ord) in [("grevlex", MonomialOrder::GrevLex), ("lex", MonomialOrder::Lex)] {
            if n == 5 && name == "lex" {
                continue;
            }
            g.bench_function(format!("cyclic{n}/{name}"), |b| b.iter(|| buchberger(black_box(&gens), &ord).unwrap()));
        }
    }
    g.finish();
}

fn invariants(c: &mut Criterion) {
    let a = algebra(&["x", "y", "z"], &["x^2", "x*y", "x*z"]);
    let b = algebra(&["u", "v"], &["u^2 + v^2"]);
    let t = tensor(&a, &b).unwrap();
    let m = t.irrelevant_ideal();
    c.bench_function("grade/irrelevant_of_tensor", |bch| bch.iter(|| grade(&t, black_box(&m), 0).unwrap()));
    c.bench_function("is_cohen_macaulay/tensor", |bch| bch.iter(|| is_cohen_macaulay(black_box(&t), 0).unwrap()));
}

fn checks(c: &mut Criterion) {
    let corpus = generate_corpus(1, CorpusBudget::small()).unwrap();
    c.bench_function("checks/thm_1_1_b_corpus_small", |bch| {
        bch.iter(|| {
            for (k, inst) in corpus.instances.iter().enumerate() {
                check_thm_1_1_b(&inst.a, &inst.b, &inst.i, &inst.j, k as u64).unwrap();
            }
        })
    });
    c.bench_function("checks/thm_2_1_corpus_small", |bch| {
        bch.iter(|| {
            for (k, inst) in corpus.instances.iter().enumerate() {
                check_thm_2_1(&inst.a, &inst.b, k as u64).unwrap();
            }
        })
    });
    c.bench_function("corpus/generate_medium", |bch| bch.iter(|| generate_corpus(7, CorpusBudget::medium()).unwrap()));
}

fn session(c: &mut Criterion) {
    c.bench_function("session/parse_and_execute", |b| {
        b.iter(|| {
            let ast = parse_session(black_box(SESSION), PrimeField::default()).unwrap();
            execute(&ast, &RunConfig::default()).unwrap()
        })
    });
}

criterion_group!(benches, groebner, invariants, checks, session);
criterion_main!(benches);
