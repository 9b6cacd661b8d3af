//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs with its own `main` so the lines always reach the terminal.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dynsym::check::Identity;
use dynsym::hydrogen;
use dynsym::jordan::{self, Field};
use dynsym::landau::{self, Presentation};
use dynsym::lie::{self, Rule};
use dynsym::scalar::rat;
use dynsym::spinor;
use dynsym::suite::{self, OutputFormat, Suite, SuiteConfig};
use dynsym::tkk::{self, ConformalAlgebra};
use dynsym::transforms::{self, KsMode};
use dynsym::Scalar;

type Outcome = Result<String, String>;

fn require(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn holds(ids: &[Identity], what: &str) -> Result<(), String> {
    let bad: Vec<&str> = ids.iter().filter(|i| !i.holds).map(|i| i.id.as_str()).collect();
    require(bad.is_empty(), format!("{what}: {}", bad.join(", ")))
}

fn within(t: Duration, limit: f64) -> Result<(), String> {
    require(t.as_secs_f64() < limit, format!("took {:.2} s, limit {limit} s", t.as_secs_f64()))
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn so23_closure() -> Outcome {
    let t = Instant::now();
    let g = landau::dirac_generators(Presentation::Phase).map_err(e)?;
    let r = landau::verify_so23(&g, Rule::DiracCo).map_err(e)?;
    within(t.elapsed(), 5.0)?;
    require(r.pairs.len() == 45, format!("{} pairs", r.pairs.len()))?;
    require(r.closes() && r.max_residual() == 0.0, format!("{} failing pairs", r.failures().len()))?;
    Ok(format!("45 brackets exact, fitted sign {:+}", r.fitted_sign.unwrap_or(0)))
}

fn cross_presentation() -> Outcome {
    let ids = landau::cross_presentation_check().map_err(e)?;
    require(ids.len() == 30, format!("{} equalities", ids.len()))?;
    holds(&ids, "unequal")?;
    Ok("30 exact equalities".into())
}

fn hamiltonian() -> Outcome {
    let exact = landau::hamiltonian_identities().map_err(e)?;
    holds(&exact, "symbolic")?;
    let numeric = landau::fock_identities(12, 1e-10).map_err(e)?;
    holds(&numeric, "Fock")?;
    let worst = numeric.iter().map(|i| i.residual).fold(0.0, f64::max);
    Ok(format!("{} symbolic, {} numeric at cutoff 12 (max {worst:.1e})", exact.len(), numeric.len()))
}

fn spectrum() -> Outcome {
    let t = Instant::now();
    let s = landau::landau_spectrum(12).map_err(e)?;
    let (dev, degenerate) = s.interior_check();
    within(t.elapsed(), 10.0)?;
    require(s.interior_levels == 10, format!("{} interior levels", s.interior_levels))?;
    require(dev <= 1e-8, format!("deviation {dev:e}"))?;
    require(degenerate, "degeneracy is not cutoff+1")?;
    Ok(format!("n+1/2 for n=0..9 within {dev:.1e}, multiplicity 13"))
}

fn jordan_suite() -> Outcome {
    for f in [Field::Real, Field::Complex] {
        holds(&jordan::verify_jordan_identities(f, 32, 42).map_err(e)?, f.as_str())?;
    }
    let c = jordan::structure_constants(Field::Complex).map_err(e)?;
    let r = jordan::structure_constants(Field::Real).map_err(e)?;
    require((c.matching, c.total) == (256, 256), format!("complex {}/{}", c.matching, c.total))?;
    require((r.matching, r.total) == (81, 81), format!("real {}/{}", r.matching, r.total))?;
    Ok("identities on 32 tuples; 256 + 81 constants exact".into())
}

fn tkk_suite() -> Outcome {
    let mut pairs = Vec::new();
    for field in [Field::Complex, Field::Real] {
        let alg = ConformalAlgebra::build(field).map_err(e)?;
        holds(&tkk::verify_tkk_relations(&alg).map_err(e)?, "TKK")?;
        let (n, rel) = tkk::verify_conformal_relations(&alg).map_err(e)?;
        holds(&rel, "conformal")?;
        holds(&tkk::grading_check(&alg).map_err(e)?, "grading")?;
        let (defs, literal) = tkk::definition_checks(&alg).map_err(e)?;
        holds(&defs, "definitions")?;
        require(!literal.holds, "tabulated S sign unexpectedly holds")?;
        pairs.push(n);
    }
    require(pairs == [105, 45], format!("pair counts {pairs:?}"))?;
    Ok("105 + 45 brackets, grading and S = M - dD exact".into())
}

fn hydrogen_suite() -> Outcome {
    let (ordering, r) = hydrogen::closing_ordering().map_err(e)?;
    require(r.closure.pairs.len() == 105 && r.closure.closes(), "so(2,4) does not close")?;
    let h = hydrogen::build_hydrogen_generators(ordering).map_err(e)?;
    holds(&hydrogen::radial_so12(&h).map_err(e)?, "radial")?;
    let red = hydrogen::reduce_to_2d(&hydrogen::map_to_lab(&h).map_err(e)?).map_err(e)?;
    require(hydrogen::compare_with_landau(&red).map_err(e)?.holds, "planar structure constants differ")?;
    Ok(format!("105 brackets ({ordering:?} ordering), radial triple, planar reduction"))
}

fn spinor_layer() -> Outcome {
    let g = spinor::build_gamma().map_err(e)?;
    require(spinor::clifford_relations(&g).iter().all(|&b| b), "Clifford")?;
    let sigma = spinor::build_sigma(&g).map_err(e)?;
    require(spinor::pseudo_hermitian(&g, &sigma), "pseudo-Hermiticity")?;
    let s = lie::verify_closure(&sigma, Rule::ConformalPlus).map_err(e)?;
    require(s.pairs.len() == 105 && s.closes(), "sigma brackets")?;
    let j = spinor::ladder_representation(&g).map_err(e)?;
    let jr = lie::verify_closure(&j, Rule::ConformalPlus).map_err(e)?;
    require(jr.pairs.len() == 105 && jr.closes(), "J brackets")?;
    holds(&spinor::casimir_checks(&j).map_err(e)?, "Casimir")?;
    Ok("Clifford, beta, 105 sigma and 105 J brackets, C1 central, C1 + 2 = z d - zb db".into())
}

fn majorana() -> Outcome {
    let r = spinor::majorana_reduce(&spinor::build_gamma().map_err(e)?).map_err(e)?;
    require(r.canonical, "[psi, psibar] != 1")?;
    require(r.span_rank == 10 && r.closes, format!("rank {} closes {}", r.span_rank, r.closes))?;
    require(r.isomorphism.as_ref().is_some_and(|i| i.closes()), "no consistent isomorphism")?;
    let expected = [
        ((-1, 0), (-1, 0), -2),
        ((-1, 1), (0, 1), -2),
        ((-1, 2), (0, 2), 2),
        ((-1, 3), (0, 3), -2),
        ((0, 1), (-1, 1), 2),
        ((0, 2), (-1, 2), -2),
        ((0, 3), (-1, 3), 2),
        ((1, 2), (1, 2), 2),
        ((1, 3), (1, 3), -2),
        ((2, 3), (2, 3), 2),
    ];
    let got: Vec<_> = r.correspondence.iter().map(|c| (c.current, c.generator, c.constant.clone())).collect();
    let want: Vec<_> = expected.iter().map(|&(a, b, k)| (a, b, Scalar::from_int(k))).collect();
    require(got == want, format!("constants {got:?}"))?;
    Ok("rank 10, closes, J = +-2 m on all ten".into())
}

fn transforms_suite() -> Outcome {
    require(transforms::hopf_norm_check(32, 42, KsMode::HopfNormalized).map_err(e)?.holds, "|x|^2 != |z|^4")?;
    let can = transforms::ks_canonical_check(32, 42, KsMode::HopfNormalized).map_err(e)?;
    holds(&can.checks, "KS brackets")?;
    require(can.constant == Some(rat(-2, 1)), format!("c = {:?}", can.constant))?;
    let lc = transforms::lc_checks(32, 42).map_err(e)?;
    holds(&lc.checks[..5], "LC")?;
    let (fits, id) = transforms::ks_restrict_to_lc(32, 42, KsMode::HopfNormalized).map_err(e)?;
    require(id.holds, "restriction inconsistent")?;
    let literal = transforms::hopf_norm_check(32, 42, KsMode::PaperLiteral).map_err(e)?;
    require(!literal.holds, "literal norm unexpectedly holds")?;
    let map: Vec<String> = fits.iter().map(|f| format!("{} = {} {}", f.ks, f.factor, f.lc)).collect();
    Ok(format!("c = -2 on K = 0, {}; literal norm expected-fail", map.join(" ")))
}

fn full_suite() -> Outcome {
    let cfg = SuiteConfig::default();
    let t = Instant::now();
    let a = suite::run_suite(Suite::All, &cfg).map_err(e)?;
    let elapsed = t.elapsed();
    within(elapsed, 60.0)?;
    let b = suite::run_suite(Suite::All, &cfg).map_err(e)?;
    let ja = suite::emit_report(&a, OutputFormat::Json).map_err(e)?;
    let jb = suite::emit_report(&b, OutputFormat::Json).map_err(e)?;
    require(ja == jb, "reports differ between runs")?;
    require(a.passed(), format!("{} failing checks", a.summary.fail))?;
    Ok(format!(
        "{} pass, {} expected-fail in {:.1} s, byte-identical",
        a.summary.pass,
        a.summary.expected_fail,
        elapsed.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("so(2,3) closure", so23_closure),
        ("cross-presentation equality", cross_presentation),
        ("Hamiltonian identities", hamiltonian),
        ("Landau spectrum", spectrum),
        ("Jordan suite", jordan_suite),
        ("TKK / conformal", tkk_suite),
        ("hydrogen so(2,4)", hydrogen_suite),
        ("spinor layer", spinor_layer),
        ("Majorana reduction", majorana),
        ("transforms", transforms_suite),
        ("full suite", full_suite),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = f();
        let secs = t.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("PASS  {:>2}  {name}: {msg} [{secs:.2} s]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {msg} [{secs:.2} s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
