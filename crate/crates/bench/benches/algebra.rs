use criterion::{black_box, criterion_group, criterion_main, Criterion};
use dynsym::jordan::{self, Field};
use dynsym::landau::{self, Presentation};
use dynsym::lie::Rule;
use dynsym::suite::{self, Suite, SuiteConfig};
use dynsym::transforms::{self, KsMode};
use dynsym::weyl;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn weyl_multiply(c: &mut Criterion) {
    let sig = landau::phase_signature();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let a = weyl::random_element(&sig, &mut rng, 6, 2);
    let b = weyl::random_element(&sig, &mut rng, 6, 2);
    c.bench_function("weyl multiply 6x6 terms", |bench| bench.iter(|| black_box(&a) * black_box(&b)));
}

fn so23_closure(c: &mut Criterion) {
    let g = landau::dirac_generators(Presentation::Phase).unwrap();
    c.bench_function("so(2,3) closure, phase", |bench| {
        bench.iter(|| landau::verify_so23(black_box(&g), Rule::DiracCo).unwrap())
    });
}

fn spectrum(c: &mut Criterion) {
    c.bench_function("landau spectrum cutoff 12", |bench| bench.iter(|| landau::landau_spectrum(black_box(12)).unwrap()));
}

fn jordan_constants(c: &mut Criterion) {
    c.bench_function("complex triple constants", |bench| {
        bench.iter(|| jordan::structure_constants(black_box(Field::Complex)).unwrap())
    });
}

fn ks_brackets(c: &mut Criterion) {
    c.bench_function("KS canonical check, 8 samples", |bench| {
        bench.iter(|| transforms::ks_canonical_check(8, 42, KsMode::HopfNormalized).unwrap())
    });
}

fn weyl_suite(c: &mut Criterion) {
    let cfg = SuiteConfig { trials: 8, ..SuiteConfig::default() };
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    g.bench_function("weyl suite, 8 trials", |bench| bench.iter(|| suite::run_suite(Suite::Weyl, &cfg).unwrap()));
    g.finish();
}

criterion_group!(benches, weyl_multiply, so23_closure, spectrum, jordan_constants, ks_brackets, weyl_suite);
criterion_main!(benches);
