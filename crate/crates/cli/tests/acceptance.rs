//! Acceptance suite: one PASS/FAIL line per criterion. Every criterion
//! demands an exact match (zero mismatches); the instance minimums below are
//! pinned and a shortfall is a failure.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use sdfa_core::classify::classify_ring;
use sdfa_core::construct::{make_idealization, ModuleSpec};
use sdfa_core::criteria::{
    all_ideals_sdf_report, nil_zn_classification, AmalgamationParts, IdealizationParts, ProductSplit,
};
use sdfa_core::dsl::{parse_element, parse_ideal, parse_ring};
use sdfa_core::harness::{build_corpus, CorpusSpec, Harness, Status};
use sdfa_core::sdf::{check_sdf_witness, check_weakly_prime_witness};
use sdfa_core::{
    is_sdf_bruteforce, is_weakly_prime, is_weakly_sdf_bruteforce, nilradical, ring_queries, sdf_via_linear_system,
    FiniteRing, Ideal, IdealLattice, TwoKind,
};

const ZN_ZERO_MAX: usize = 500;
const Z_IDEAL_MAX: usize = 200;
const NIL_ZN_MAX: usize = 500;
const MIN_CORPUS_RINGS: usize = 300;
const MIN_PRODUCT_IDEALS: usize = 50;
const MIN_IDEALIZATIONS: usize = 10;
const MIN_AMALGAMATIONS: usize = 5;
const POLY_X_MAX_ORDER: usize = 32;

type Outcome = Result<String, String>;

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn twice_odd_prime(n: usize) -> bool {
    n.is_multiple_of(2) && n / 2 > 2 && is_prime(n / 2)
}

fn ring(spec: &str) -> Result<Arc<FiniteRing>, String> {
    parse_ring(spec).map_err(|e| format!("{spec}: {e}"))
}

fn ideal(r: &Arc<FiniteRing>, gens: &str) -> Result<Ideal, String> {
    parse_ideal(r, gens).map_err(|e| format!("{gens}: {e}"))
}

fn pair(r: &Arc<FiniteRing>, a: &str, b: &str) -> Result<(usize, usize), String> {
    let p = |s| parse_element(r, s).map_err(|e| format!("{s}: {e}"));
    Ok((p(a)?, p(b)?))
}

fn sdf(i: &Ideal) -> Result<bool, String> {
    is_sdf_bruteforce(i).map(|v| v.holds).map_err(|e| e.to_string())
}

fn weakly(i: &Ideal) -> Result<bool, String> {
    is_weakly_sdf_bruteforce(i).map(|v| v.holds).map_err(|e| e.to_string())
}

fn mismatches(found: Vec<String>, checked: usize, what: &str) -> Outcome {
    if found.is_empty() {
        Ok(format!("{checked} {what}, 0 mismatches"))
    } else {
        Err(format!("{} mismatches of {checked}: {}", found.len(), found.iter().take(5).cloned().collect::<Vec<_>>().join("; ")))
    }
}

fn property(h: &Harness, id: &str) -> Result<usize, String> {
    let r = h.run_property(id).map_err(|e| e.to_string())?;
    match r.status {
        Status::Pass => Ok(r.checked_instances),
        Status::Inapplicable => Err(format!("{id}: no applicable instances")),
        Status::Fail => Err(format!("{id}: {:?}", r.counterexample)),
    }
}

fn zn_zero_ideal() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=ZN_ZERO_MAX {
        let r = ring(&format!("zn({n})"))?;
        let want = n == 4 || n == 9 || is_prime(n) || twice_odd_prime(n);
        if sdf(&Ideal::zero(&r))? != want {
            bad.push(format!("n = {n}"));
        }
    }
    mismatches(bad, ZN_ZERO_MAX - 1, "rings Z_n")
}

fn integer_ideals() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=Z_IDEAL_MAX {
        let r = ring(&format!("zn({})", 4 * n))?;
        let want = is_prime(n) || twice_odd_prime(n);
        if sdf(&Ideal::principal(&r, n))? != want {
            bad.push(format!("{n}Z"));
        }
    }
    mismatches(bad, Z_IDEAL_MAX - 1, "ideals nZ via Z_4n")
}

fn linear_system(h: &Harness) -> Outcome {
    if h.corpus.rings.len() < MIN_CORPUS_RINGS {
        return Err(format!("corpus has {} rings", h.corpus.rings.len()));
    }
    let mut bad = Vec::new();
    let mut checked = 0;
    for r in &h.corpus.rings {
        let lattice = IdealLattice::new(r).map_err(|e| e.to_string())?;
        for i in lattice.proper() {
            checked += 1;
            let fast = sdf_via_linear_system(i).map_err(|e| e.to_string())?.holds;
            if fast != sdf(i)? {
                bad.push(format!("{} in {}", i.render(), r.label()));
            }
        }
    }
    mismatches(bad, checked, &format!("ideals over {} rings", h.corpus.rings.len()))
}

fn two_regimes(h: &Harness) -> Outcome {
    let mut total = 0;
    for id in [
        "nonzero-sdf-is-radical",
        "nonzero-hypothesis-fixtures",
        "char-two-radical-is-sdf",
        "two-in-ideal-equivalences",
        "two-unit-sdf-is-prime",
    ] {
        total += property(h, id)?;
    }
    let mut regimes = [0usize; 3];
    for c in h.classified() {
        let k = match c.context.profile.two {
            TwoKind::Unit => 0,
            TwoKind::Zero => 1,
            TwoKind::NonzeroZeroDivisor => 2,
        };
        regimes[k] += 1;
    }
    if regimes.contains(&0) {
        return Err(format!("regimes (unit, zero, zero-divisor) = {regimes:?}"));
    }
    for want in ["zn(4)", "prod(zn(4),zn(6))", "prod(zn(9),gf(2,[1,1,1]))"] {
        let c = h.classified().find(|c| c.ring().label() == want).ok_or(format!("{want} missing"))?;
        if c.context.profile.two != TwoKind::NonzeroZeroDivisor {
            return Err(format!("2 in {want} is not a nonzero zero-divisor"));
        }
    }
    Ok(format!("{total} instances, 0 counterexamples; rings with 2 unit/zero/zero-divisor = {regimes:?}"))
}

fn trichotomy(h: &Harness) -> Outcome {
    let n = property(h, "all-ideals-report-consistent")?;
    let fixtures = [
        ("zn(4)", true, true),
        ("zn(25)", false, true),
        ("prod(zn(2),zn(2))", true, true),
        ("prod(zn(3),zn(3))", false, true),
        ("prod(gf(2,[1,1,1]),gf(2,[1,1,1]))", true, true),
    ];
    for (spec, all, nonzero) in fixtures {
        let r = ring(spec)?;
        let lattice = IdealLattice::new(&r).map_err(|e| e.to_string())?;
        let rep = all_ideals_sdf_report(&lattice, &ring_queries(&lattice)).map_err(|e| e.to_string())?;
        if (rep.all_proper, rep.all_nonzero_proper) != (all, nonzero) {
            return Err(format!("{spec}: got {:?}", (rep.all_proper, rep.all_nonzero_proper)));
        }
    }
    let r = ring("prod(zn(3),zn(3),zn(3))")?;
    let i = ideal(&r, "[(0,0,1)]")?;
    let (a, b) = pair(&r, "(2,1,0)", "(1,1,0)")?;
    if sdf(&i)? || !check_sdf_witness(&i, a, b) {
        return Err("Z_3^3 fixture".into());
    }
    Ok(format!("{n} rings consistent, {} fixtures exact, Z_3^3 witness certified", fixtures.len()))
}

fn constructions(h: &Harness) -> Outcome {
    let products = property(h, "product-rules")?;
    property(h, "product-unified-rule")?;
    property(h, "product-z4-squared-fixture")?;
    let idealization_ideals = property(h, "idealization-rules")?;
    property(h, "idealization-zero-zero")?;
    let amalgamation_ideals = property(h, "amalgamation-rule")?;
    property(h, "amalgamation-zero-ideal-differs")?;
    let labels: Vec<&str> = h.corpus.rings.iter().map(|r| r.label()).collect();
    let idealizations = h.corpus.rings.iter().filter(|r| IdealizationParts::new(r).is_some()).count();
    let amalgamations = h.corpus.rings.iter().filter(|r| AmalgamationParts::new(r).is_some()).count();
    if products < MIN_PRODUCT_IDEALS || idealizations < MIN_IDEALIZATIONS || amalgamations < MIN_AMALGAMATIONS {
        return Err(format!("too few instances: {products} product ideals, {idealizations} idealizations, {amalgamations} amalgamations"));
    }
    for want in ["idealize(zn(3);mod=0)", "idealize(zn(4);mod=0)", "amalg(zn(4),zn(4),hom=id,j=[1])"] {
        if !labels.contains(&want) {
            return Err(format!("{want} missing from corpus"));
        }
    }
    let r = ring("amalg(zn(4),zn(4),hom=id,j=[1])")?;
    let parts = AmalgamationParts::new(&r).ok_or("not an amalgamation")?;
    if sdf(&parts.lift(&Ideal::zero(&parts.source)))? {
        return Err("{0} amalg Z_4 should fail".into());
    }
    Ok(format!(
        "{products} product ideals, {idealizations} idealizations ({idealization_ideals} ideals), {amalgamations} amalgamations ({amalgamation_ideals} ideals), 0 mismatches"
    ))
}

fn weakly_suite(h: &Harness) -> Outcome {
    let r = ring("prod(zn(4),zn(4))")?;
    let i = ideal(&r, "[(0,2)]")?;
    let (a, b) = pair(&r, "(2,2)", "(0,1)")?;
    let wp = is_weakly_prime(&i).map_err(|e| e.to_string())?.holds;
    if !weakly(&i)? || sdf(&i)? || wp || !check_weakly_prime_witness(&i, a, b) {
        return Err("0 x {0,2} in Z_4 x Z_4 verdicts".into());
    }
    let structural = property(h, "weakly-not-sdf-in-nilradical")? + property(h, "weakly-not-sdf-consequences")?;
    let mut bad = Vec::new();
    for n in 2..=NIL_ZN_MAX {
        let r = ring(&format!("zn({n})"))?;
        let nil = nilradical(&r);
        let class = nil_zn_classification(n);
        let s = sdf(&nil)?;
        let weakly_not = nil.is_zero() && weakly(&nil)? && !s;
        if (s, weakly_not) != (class.sdf, class.weakly_not_sdf) {
            bad.push(format!("n = {n}"));
        }
    }
    let big = ring("prod(polyq(2,[0,0,1]),prod(zn(4),zn(4)))")?;
    let split = ProductSplit::new(&big).map_err(|e| e.to_string())?.ok_or("not a product")?;
    let k = split.combine(&Ideal::zero(&split.first), &ideal(&split.rest, "[(0,2)]")?);
    if !weakly(&k)? || sdf(&k)? {
        return Err("{0} x (0 x {0,2}) should be weakly sdf and not sdf".into());
    }
    let mut out = mismatches(bad, NIL_ZN_MAX - 1, "nilradicals nil(Z_n)")?;
    out.push_str(&format!("; {structural} weakly-not-sdf instances hold; both fixtures reproduce"));
    Ok(out)
}

fn square_zero_extension() -> Outcome {
    let mut bad = Vec::new();
    let fields = ["2", "3", "gf(2,[1,1,1])", "5", "7"];
    for k in fields {
        let r = ring(&format!("polyq({k},[0,0,1])"))?;
        if sdf(&Ideal::zero(&r))? != (k == "3") {
            bad.push(format!("K = {k}"));
        }
    }
    mismatches(bad, fields.len(), "fields")
}

fn polynomial_x(h: &Harness) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    let mut rings = 0;
    for r in h.corpus.rings.iter().filter(|r| r.order() <= POLY_X_MAX_ORDER) {
        rings += 1;
        let ext = Arc::new(make_idealization(r, &ModuleSpec::regular(r)).map_err(|e| e.to_string())?);
        let parts = IdealizationParts::new(&ext).ok_or("not an idealization")?;
        let c = classify_ring(r).map_err(|e| e.to_string())?;
        for rec in c.proper() {
            checked += 1;
            let lifted = parts.with_full_module(&rec.ideal);
            let want = if rec.ideal.is_zero() { c.context.profile.is_reduced && rec.is_sdf } else { rec.is_sdf };
            if sdf(&lifted)? != want {
                bad.push(format!("{} in {}", rec.ideal.render(), r.label()));
            }
        }
    }
    mismatches(bad, checked, &format!("ideals over {rings} rings"))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_sdfa"))
            .arg("verify")
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() || !b.status.success() {
        return Err(format!("verify exited {:?} / {:?}", a.status.code(), b.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("reports differ".into());
    }
    Ok(format!("two default runs, {} bytes each, byte-identical", a.stdout.len()))
}

type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() -> ExitCode {
    let spec = CorpusSpec::default();
    let harness = match build_corpus(&spec) {
        Ok(c) => Harness::new(c),
        Err(e) => {
            println!("FAIL corpus: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: [(&str, Check<'_>); 10] = [
        ("zero ideal of Z_n, n <= 500, closed form", Box::new(zn_zero_ideal)),
        ("nZ in Z through Z_4n, n <= 200", Box::new(integer_ideals)),
        ("linear-system oracle equals brute force on the corpus", Box::new(|| linear_system(&harness))),
        ("radical, char 2, 2-in-I, 2-unit suites in all three regimes of 2", Box::new(|| two_regimes(&harness))),
        ("every-ideal trichotomy and fixtures", Box::new(|| trichotomy(&harness))),
        ("product, idealization and amalgamation rules", Box::new(|| constructions(&harness))),
        ("weakly sdf suite and nil(Z_n), n <= 500", Box::new(|| weakly_suite(&harness))),
        ("{0} in K[X]/(X^2) sdf iff K = F_3", Box::new(square_zero_extension)),
        ("(I, X) and (X) through R(+)R, |R| <= 32", Box::new(|| polynomial_x(&harness))),
        ("byte-identical verify reports", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = check();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} ({secs:.1}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail} ({secs:.1}s)", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
