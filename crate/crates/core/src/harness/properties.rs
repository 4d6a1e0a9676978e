//! The property registry. Every property is a pure function of the harness
//! and scans its instances in a fixed order, so results do not depend on
//! scheduling.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ideal_cx, poly, ring_cx, Counterexample, Harness, Tally};
use crate::classify::{ClassificationRecord, RingClassification};
use crate::construct::{make_idealization, make_product, make_quotient, make_zn, localize, ModuleSpec};
use crate::criteria::{self, AmalgamationParts, IdealizationClause, IdealizationParts, ProductSplit};
use crate::dsl::{parse_element, parse_ideal, parse_ring};
use crate::error::Result;
use crate::hom::RingHom;
use crate::ideal::{hom_image_ideal, hom_preimage_ideal, Ideal};
use crate::lattice::{self, DecompositionKind, IdealLattice};
use crate::queries::{ring_queries, units, TwoKind};
use crate::ring::{Construction, Elem, FiniteRing};
use crate::sdf;

pub struct PropertyDef {
    pub id: &'static str,
    pub description: &'static str,
    /// Random sampling; a pass is evidence only.
    pub sampled: bool,
    pub run: fn(&Harness) -> Tally,
}

macro_rules! props {
    ($($id:literal, $run:ident, $sampled:literal, $desc:literal;)*) => {
        static REGISTRY: &[PropertyDef] = &[
            $(PropertyDef { id: $id, description: $desc, sampled: $sampled, run: $run },)*
        ];
    };
}

props! {
    "ring-axioms", ring_axioms, false,
        "every corpus ring satisfies the commutative ring axioms and classifies";
    "fast-criteria-agree", fast_criteria_agree, false,
        "every applicable fast criterion matches brute force";
    "linear-system-oracle-equivalence", linear_system_oracle, false,
        "the linear-system criterion decides sdf-absorption exactly";
    "witnesses-recheck", witnesses_recheck, false,
        "every negative verdict carries a witness that re-verifies";
    "verdict-hierarchy", verdict_hierarchy, false,
        "prime => sdf => weakly sdf and prime => weakly prime => weakly sdf";
    "nonzero-sdf-is-radical", nonzero_sdf_is_radical, false,
        "a nonzero sdf-absorbing ideal is radical";
    "nonzero-hypothesis-fixtures", nonzero_hypothesis_fixtures, false,
        "{0} of Z_4 is sdf but not radical; {0} of Z_9 is sdf but not prime";
    "guards-removable-for-nonzero-ideals", guards_removable, false,
        "for nonzero sdf ideals the a, b != 0 guard can be dropped";
    "char-two-radical-is-sdf", char_two_radical_is_sdf, false,
        "in characteristic 2 every radical ideal is sdf-absorbing";
    "two-in-ideal-equivalences", two_in_ideal, false,
        "for sdf I: both signs absorb <=> 2 in I <=> char(R/I) = 2";
    "two-unit-sdf-is-prime", two_unit_sdf_is_prime, false,
        "with 2 a unit, nonzero sdf-absorbing ideals are prime";
    "integer-ideals-closed-form", integer_ideals, false,
        "nZ is sdf in Z iff n is prime or twice an odd prime, decided in Z_4n";
    "boolean-times-integers", boolean_times_integers, false,
        "ideals of Z_2^k x Z follow the integer rule in the last factor";
    "field-polynomial-principal-ideals", field_polynomial_ideals, false,
        "(f) in K[X]: sdf iff squarefree (char 2) or irreducible (otherwise)";
    "boolean-rings-all-sdf", boolean_rings_all_sdf, false,
        "every proper ideal of a boolean ring is sdf-absorbing";
    "localization-preserves-sdf", localization_sdf, false,
        "I sdf and I disjoint from S => I_S sdf";
    "localization-preserves-weakly-sdf", localization_weakly, false,
        "I weakly sdf and I disjoint from S => I_S weakly sdf";
    "hom-preimage-sdf", hom_preimage_sdf, false,
        "preimages of sdf ideals are sdf for nonzero ideals or injective homs";
    "hom-image-sdf", hom_image_sdf, false,
        "surjective images of sdf ideals containing the kernel are sdf";
    "quotient-correspondence", quotient_correspondence, false,
        "J in I: I sdf => I/J sdf, and equivalence when J is strictly smaller";
    "hom-preimage-weakly-sdf", hom_preimage_weakly, false,
        "injective preimages of weakly sdf ideals are weakly sdf";
    "hom-image-weakly-sdf", hom_image_weakly, false,
        "surjective images of weakly sdf ideals containing the kernel are weakly sdf";
    "quotient-weakly-sdf", quotient_weakly, false,
        "J in I: I weakly sdf => I/J weakly sdf";
    "hom-hypotheses-counterexamples", hom_hypotheses, false,
        "the nonzero and kernel hypotheses on homomorphisms cannot be dropped";
    "all-ideals-report-consistent", all_ideals_report, false,
        "structural predictions for 'every (nonzero) proper ideal is sdf' match exhaustive answers";
    "all-nonzero-sdf-forces-vnr-reduction", all_nonzero_vnr, false,
        "every nonzero proper ideal sdf => R/nil(R) von Neumann regular";
    "all-ideals-fixtures", all_ideals_fixtures, false,
        "Z_4, Z_25, Z_2^2, Z_3^2, F_4^2 and Z_p^2 behave as stated";
    "z3-cubed-counterexample", z3_cubed, false,
        "0 x 0 x Z_3 is not sdf in Z_3^3, witnessed by (2,1,0), (1,1,0)";
    "field-products", field_products, false,
        "products of fields: all proper sdf iff at most one odd characteristic";
    "square-zero-extension-zero-ideal", square_zero_extension, false,
        "{0} is sdf in K[X]/(X^2) iff K = F_3";
    "comaximal-prime-intersection", comaximal_intersection, false,
        "intersection of comaximal primes is sdf iff at most one has char != 2";
    "irredundant-prime-intersection", irredundant_intersection, false,
        "irredundant intersection of primes is sdf iff at most one has char != 2";
    "polynomial-sampled", polynomial_sampled, true,
        "I[X] stays sdf for comaximal prime intersections (random search)";
    "polynomial-x-ideals", polynomial_x_ideals, false,
        "(I, X) and (X) in R[X] through R[X]/(X^2) = R(+)R";
    "zn-zero-ideal-closed-form", zn_zero_ideal, false,
        "{0} is sdf in Z_n iff n is 4, 9, prime or twice an odd prime";
    "product-rules", product_rules, false,
        "I_1 x I_2 follows the case-by-case product rules";
    "product-unified-rule", product_unified, false,
        "I_1 x I_2 is sdf iff both are sdf radical and 2 lies in one factor";
    "product-z4-squared-fixture", product_z4_squared, false,
        "0 x 0, 0 x {0,2}, 0 x Z_4 fail in Z_4 x Z_4 although the factors are sdf";
    "idealization-rules", idealization_rules, false,
        "I(+)N is sdf iff the idealization rules say so";
    "idealization-zero-zero", idealization_zero_zero, false,
        "{(0,0)} is not sdf in R(+)M when |M| != 3; it is in Z_3(+)Z_3";
    "amalgamation-rule", amalgamation_rule, false,
        "for nonzero I, I amalg B is sdf iff I is";
    "amalgamation-zero-ideal-differs", amalgamation_zero, false,
        "{0} amalg Z_4 fails in Z_4 amalg Z_4 although {0} is sdf in Z_4";
    "weakly-two-unit-is-weakly-prime", weakly_two_unit, false,
        "with 2 a unit, weakly sdf ideals are weakly prime";
    "weakly-not-sdf-in-nilradical", weakly_not_sdf_nil, false,
        "weakly sdf but not sdf => I inside nil(R)";
    "weakly-not-sdf-consequences", weakly_not_sdf_consequences, false,
        "weakly sdf but not sdf => 2i^2 = 0, i^2 = 0 when applicable, I = 0 if reduced";
    "weakly-full-factor-product", weakly_full_factor, false,
        "I x R_2 with I nonzero weakly sdf: weakly sdf <=> I sdf <=> I x R_2 sdf";
    "weakly-both-factors-product", weakly_both_factors, false,
        "I x J with both weakly-not-sdf: the four equivalent conditions agree";
    "weakly-fixture-z4-squared", weakly_fixture_z4, false,
        "0 x {0,2} in Z_4 x Z_4 is weakly sdf, not sdf, not weakly prime";
    "weakly-product-fixture", weakly_product_fixture, false,
        "{0} x (0 x {0,2}) is weakly sdf but not sdf in Z_2[X]/(X^2) x Z_4^2";
    "zero-ideal-weakly-absorbing", zero_weakly, false,
        "{0} is always weakly sdf-absorbing and weakly prime";
    "nil-zn-classification", nil_zn, false,
        "nil(Z_n) closed forms for sdf and weakly-not-sdf";
}

pub fn registry() -> &'static [PropertyDef] {
    REGISTRY
}

// ---------------------------------------------------------------- helpers

/// Per-ring tallies computed in parallel and merged in corpus order.
fn per_ring<'a>(
    rings: impl Iterator<Item = &'a RingClassification>,
    f: impl Fn(&RingClassification, &mut Tally) + Sync,
) -> Tally {
    let rings: Vec<&RingClassification> = rings.collect();
    let parts: Vec<Tally> = rings
        .par_iter()
        .map(|c| {
            let mut t = Tally::new();
            f(c, &mut t);
            t
        })
        .collect();
    let mut out = Tally::new();
    for p in parts {
        out.merge(p);
    }
    out
}

/// Every proper ideal of every classified ring.
fn per_record(h: &Harness, f: impl Fn(&RingClassification, &ClassificationRecord, &mut Tally) + Sync) -> Tally {
    per_ring(h.classified(), |c, t| {
        for rec in c.proper() {
            f(c, rec, t);
        }
    })
}

/// Unwrap or record the error as a failure.
fn guard<T>(t: &mut Tally, ring: &FiniteRing, r: Result<T>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            t.fail(ring_cx(ring, format!("error: {e}")));
            None
        }
    }
}

fn sdf_of(i: &Ideal) -> Result<bool> {
    Ok(sdf::is_sdf_bruteforce(i)?.holds)
}

fn weakly_of(i: &Ideal) -> Result<bool> {
    Ok(sdf::is_weakly_sdf_bruteforce(i)?.holds)
}

fn sdf_witness(i: &Ideal) -> Option<(Elem, Elem)> {
    sdf::is_sdf_bruteforce(i).ok().and_then(|v| v.witness)
}

fn record<'a>(c: &'a RingClassification, i: &Ideal) -> Option<&'a ClassificationRecord> {
    c.context.lattice.position(i).map(|k| &c.records[k])
}

fn fixture_ring(t: &mut Tally, spec: &str) -> Option<Arc<FiniteRing>> {
    match parse_ring(spec) {
        Ok(r) => Some(r),
        Err(e) => {
            t.fail(Counterexample::note(spec, format!("fixture does not build: {e}")));
            None
        }
    }
}

fn fixture_ideal(t: &mut Tally, ring: &Arc<FiniteRing>, gens: &str) -> Option<Ideal> {
    let r = parse_ideal(ring, gens);
    guard(t, ring, r)
}

fn fixture_pair(t: &mut Tally, ring: &Arc<FiniteRing>, a: &str, b: &str) -> Option<(Elem, Elem)> {
    let r = parse_element(ring, a).and_then(|x| Ok((x, parse_element(ring, b)?)));
    guard(t, ring, r)
}

/// Check a fixture's expected sdf / weakly verdicts.
fn expect(t: &mut Tally, i: &Ideal, sdf_expected: Option<bool>, weakly_expected: Option<bool>, what: &str) {
    if let Some(want) = sdf_expected {
        if let Some(got) = guard(t, i.ring(), sdf_of(i)) {
            t.check(got == want, || ideal_cx(i, sdf_witness(i), format!("{what}: sdf expected {want}")));
        }
    }
    if let Some(want) = weakly_expected {
        if let Some(got) = guard(t, i.ring(), weakly_of(i)) {
            t.check(got == want, || ideal_cx(i, None, format!("{what}: weakly sdf expected {want}")));
        }
    }
}

fn modulus_of(ring: &FiniteRing) -> Option<usize> {
    match ring.construction() {
        Construction::Integers { modulus } => Some(*modulus),
        _ => None,
    }
}

// ------------------------------------------------------- basic properties

fn ring_axioms(h: &Harness) -> Tally {
    let mut t = Tally::new();
    for e in h.entries() {
        t.check(e.axiom_violation.is_none() && e.error.is_none(), || {
            let detail = match (&e.axiom_violation, &e.error) {
                (Some(v), _) => format!("axiom violated: {v}"),
                (_, Some(err)) => format!("classification failed: {err}"),
                _ => unreachable!(),
            };
            ring_cx(&e.ring, detail)
        });
    }
    t
}

fn fast_criteria_agree(h: &Harness) -> Tally {
    per_record(h, |_, rec, t| {
        let bad = rec.disagreements();
        t.check(bad.is_empty(), || ideal_cx(&rec.ideal, None, format!("disagreeing criteria: {}", bad.join(", "))));
    })
}

fn linear_system_oracle(h: &Harness) -> Tally {
    per_record(h, |_, rec, t| {
        let fast = rec.fast_verdicts.get("linear-system").copied().flatten();
        t.check(fast == Some(rec.is_sdf), || {
            ideal_cx(&rec.ideal, rec.sdf.and_then(|v| v.witness), format!("linear system says {fast:?}"))
        });
    })
}

fn witnesses_recheck(h: &Harness) -> Tally {
    per_record(h, |_, rec, t| {
        for (name, v) in [("sdf", rec.sdf), ("weakly-sdf", rec.weakly_sdf), ("prime", rec.prime), ("weakly-prime", rec.weakly_prime)] {
            let ok = v.is_some_and(|v| v.recheck(&rec.ideal));
            t.check(ok, || ideal_cx(&rec.ideal, v.and_then(|v| v.witness), format!("{name} certificate does not re-verify")));
        }
    })
}

fn verdict_hierarchy(h: &Harness) -> Tally {
    per_record(h, |_, rec, t| {
        t.check(rec.hierarchy_holds(), || ideal_cx(&rec.ideal, None, "hierarchy violated"));
    })
}

fn nonzero_sdf_is_radical(h: &Harness) -> Tally {
    per_record(h, |_, rec, t| {
        if rec.is_sdf && !rec.ideal.is_zero() {
            t.check(rec.is_radical, || ideal_cx(&rec.ideal, None, "sdf but not radical"));
        }
    })
}

fn nonzero_hypothesis_fixtures(_: &Harness) -> Tally {
    let mut t = Tally::new();
    for (spec, fails) in [("zn(4)", "radical"), ("zn(9)", "prime")] {
        let Some(r) = fixture_ring(&mut t, spec) else { continue };
        let zero = Ideal::zero(&r);
        expect(&mut t, &zero, Some(true), None, "zero ideal");
        let other = if fails == "radical" {
            lattice::is_radical(&zero)
        } else {
            sdf::is_prime(&zero).map(|v| v.holds).unwrap_or(true)
        };
        t.check(!other, || ideal_cx(&zero, None, format!("zero ideal should not be {fails}")));
    }
    t
}

fn guards_removable(h: &Harness) -> Tally {
    per_record(h, |c, rec, t| {
        if !rec.is_sdf || rec.ideal.is_zero() {
            return;
        }
        let r = c.ring();
        let i = &rec.ideal;
        let bad = r.elements().flat_map(|a| r.elements().map(move |b| (a, b))).find(|&(a, b)| {
            i.contains(r.sub(r.square(a), r.square(b))) && !i.contains(r.add(a, b)) && !i.contains(r.sub(a, b))
        });
        t.check(bad.is_none(), || ideal_cx(i, bad, "pair with a zero entry escapes"));
    })
}

fn char_two_radical_is_sdf(h: &Harness) -> Tally {
    per_record(h, |c, rec, t| {
        if c.context.profile.characteristic == 2 && rec.is_radical {
            t.check(rec.is_sdf, || ideal_cx(&rec.ideal, rec.sdf.and_then(|v| v.witness), "radical but not sdf"));
        }
    })
}

fn two_in_ideal(h: &Harness) -> Tally {
    per_record(h, |c, rec, t| {
        if !rec.is_sdf {
            return;
        }
        let both = sdf::both_signs_absorb(&rec.ideal);
        let two = rec.ideal.contains(c.ring().two());
        let char2 = rec.quotient_char == 2;
        t.check(both == two && two == char2, || {
            ideal_cx(&rec.ideal, None, format!("both signs {both}, 2 in I {two}, char 2 {char2}"))
        });
    })
}

fn two_unit_sdf_is_prime(h: &Harness) -> Tally {
    per_record(h, |c, rec, t| {
        if c.context.profile.two == TwoKind::Unit && rec.is_sdf && !rec.ideal.is_zero() {
            t.check(rec.is_prime, || ideal_cx(&rec.ideal, rec.prime.and_then(|v| v.witness), "sdf but not prime"));
        }
    })
}

// ------------------------------------------------------ integer families

fn integer_ideals(h: &Harness) -> Tally {
    let ns: Vec<usize> = (2..=h.spec().zn_max).collect();
    let parts: Vec<(usize, Result<bool>)> = ns.par_iter().map(|&n| (n, criteria::sdf_in_z(n))).collect();
    let mut t = Tally::new();
    for (n, r) in parts {
        t.check(r.is_ok(), || Counterexample::note(format!("zn({})", 4 * n), format!("{n}Z: {}", r.as_ref().err().map(|e| e.to_string()).unwrap_or_default())));
    }
    t
}

fn boolean_times_integers(_: &Harness) -> Tally {
    let mut t = Tally::new();
    for k in 1..=2usize {
        for m in 2..=12usize {
            let mut factors: Vec<_> = (0..k).map(|_| Arc::new(make_zn(2).unwrap())).collect();
            factors.push(Arc::new(make_zn(4 * m).unwrap()));
            let ring = match make_product(factors) {
                Ok(r) => Arc::new(r),
                Err(e) => {
                    t.fail(ring_cx(&make_zn(2).unwrap(), e.to_string()));
                    continue;
                }
            };
            // Each Z_2 factor is {0} or Z_2; the last is mZ / 4mZ.
            for mask in 0..(1usize << k) {
                let mut digits: Vec<Elem> = (0..k).map(|j| (mask >> j) & 1).collect();
                digits.push(m);
                let g = ring.product_index(&digits);
                let ideal = Ideal::principal(&ring, g);
                let want = criteria::sdf_in_z_closed_form(m);
                if let Some(got) = guard(&mut t, &ring, sdf_of(&ideal)) {
                    t.check(got == want, || ideal_cx(&ideal, sdf_witness(&ideal), format!("J = {m}Z: expected {want}")));
                }
            }
        }
    }
    t
}

/// Remainder of `f` modulo monic `g` over `Z_p`.
fn poly_rem(p: usize, f: &[usize], g: &[usize]) -> Vec<usize> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg && r.len() >= g.len() {
        let lead = *r.last().unwrap();
        let shift = r.len() - g.len();
        for (i, &c) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn poly_mul_p(p: usize, f: &[usize], g: &[usize]) -> Vec<usize> {
    let mut out = vec![0; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    out
}

fn monic_polys(p: usize, d: usize) -> Vec<Vec<usize>> {
    (0..p.pow(d as u32))
        .map(|mut k| {
            let mut c: Vec<usize> = (0..d)
                .map(|_| {
                    let x = k % p;
                    k /= p;
                    x
                })
                .collect();
            c.push(1);
            c
        })
        .collect()
}

/// Irreducible over `Z_p`: no monic factor of degree 1..=deg/2.
fn irreducible(p: usize, f: &[usize]) -> bool {
    let d = f.len() - 1;
    (1..=d / 2).all(|e| monic_polys(p, e).iter().all(|g| !poly_rem(p, f, g).is_empty()))
}

/// Squarefree over `Z_p`: no square of a monic nonconstant divides `f`.
fn squarefree(p: usize, f: &[usize]) -> bool {
    let d = f.len() - 1;
    (1..=d / 2).all(|e| {
        monic_polys(p, e).iter().all(|g| !poly_rem(p, f, &poly_mul_p(p, g, g)).is_empty())
    })
}

fn field_polynomial_ideals(_: &Harness) -> Tally {
    let mut t = Tally::new();
    for (p, max_d) in [(2usize, 3usize), (3, 2), (5, 2)] {
        for d in 1..=max_d {
            for f in monic_polys(p, d) {
                let f2 = poly_mul_p(p, &f, &f);
                let ring = match crate::construct::make_poly_quotient(p, &f2) {
                    Ok(r) => Arc::new(r),
                    Err(e) => {
                        t.fail(ring_cx(&make_zn(p).unwrap(), format!("K[X]/(f^2) for {f:?}: {e}")));
                        continue;
                    }
                };
                let lit = format!("[{}]", f.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
                let Some(g) = guard(&mut t, &ring, parse_element(&ring, &lit)) else { continue };
                let ideal = Ideal::principal(&ring, g);
                let want = if p == 2 { squarefree(p, &f) } else { irreducible(p, &f) };
                if let Some(got) = guard(&mut t, &ring, sdf_of(&ideal)) {
                    t.check(got == want, || ideal_cx(&ideal, sdf_witness(&ideal), format!("f = {lit}: expected {want}")));
                }
            }
        }
    }
    t
}

fn boolean_rings_all_sdf(h: &Harness) -> Tally {
    per_ring(h.classified(), |c, t| {
        if !c.context.profile.is_boolean {
            return;
        }
        for rec in c.proper() {
            t.check(rec.is_sdf, || ideal_cx(&rec.ideal, rec.sdf.and_then(|v| v.witness), "boolean ring ideal not sdf"));
        }
    })
}

// ------------------------------------------------ localization and homs

const HOM_MAX_ORDER: usize = 32;
const LOCALIZE_MAX_ORDER: usize = 64;

/// Distinct multiplicative sets `{1, t, t^2, ...}` avoiding 0.
fn power_sets(r: &FiniteRing) -> Vec<Vec<Elem>> {
    let mut out: Vec<Vec<Elem>> = Vec::new();
    for t in r.elements() {
        let mut s = FixedBitSet::with_capacity(r.order());
        s.insert(r.one());
        let mut x = t;
        while !s.contains(x) {
            s.insert(x);
            x = r.mul(x, t);
        }
        if s.contains(r.zero()) {
            continue;
        }
        let v: Vec<Elem> = s.ones().collect();
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn localization_check(h: &Harness, weakly: bool) -> Tally {
    per_ring(h.classified_up_to(LOCALIZE_MAX_ORDER), |c, t| {
        let r = c.ring();
        for s in power_sets(r) {
            let Some((_, hom)) = guard(t, r, localize(r, &s)) else { return };
            for rec in c.proper() {
                let holds = if weakly { rec.is_weakly_sdf } else { rec.is_sdf };
                if !holds || s.iter().any(|&x| rec.ideal.contains(x)) {
                    continue;
                }
                let Some(img) = guard(t, r, hom_image_ideal(&hom, &rec.ideal)) else { continue };
                let got = if weakly { weakly_of(&img) } else { sdf_of(&img) };
                if let Some(got) = guard(t, r, got) {
                    t.check(got, || ideal_cx(&rec.ideal, None, format!("localized at {s:?} loses the property")));
                }
            }
        }
    })
}

fn localization_sdf(h: &Harness) -> Tally {
    localization_check(h, false)
}

fn localization_weakly(h: &Harness) -> Tally {
    localization_check(h, true)
}

/// A homomorphism out of a corpus ring together with its target's ideals.
struct HomCase {
    hom: RingHom,
    targets: IdealLattice,
}

/// Quotient projections, product projections, the amalgamation projection
/// and inclusion, and the canonical map from `Z_char`.
fn hom_cases(c: &RingClassification) -> Result<Vec<HomCase>> {
    let r = c.ring();
    let mut homs = Vec::new();
    for k in c.context.lattice.nonzero_proper() {
        homs.push(make_quotient(r, k)?.1);
    }
    if let Construction::Product { factors } = r.construction() {
        for k in 0..factors.len() {
            homs.push(RingHom::projection(r, k)?);
        }
    }
    if let Construction::Amalgamation { hom, pairs, .. } = r.construction() {
        let a = hom.source().clone();
        let b = hom.target().clone();
        homs.push(RingHom::new(r.clone(), a.clone(), pairs.iter().map(|p| p.0).collect(), "amalg-proj")?);
        let ab = Arc::new(make_product(vec![a, b])?);
        let map = pairs.iter().map(|&(x, y)| ab.product_index(&[x, y])).collect();
        homs.push(RingHom::new(r.clone(), ab, map, "amalg-incl")?);
    }
    let ch = r.characteristic();
    if ch >= 2 && modulus_of(r).is_none() {
        let z = Arc::new(make_zn(ch)?);
        homs.push(RingHom::canonical(&z, r)?);
    }
    homs.into_iter()
        .map(|hom| Ok(HomCase { targets: IdealLattice::new(hom.target())?, hom }))
        .collect()
}

/// Source-side view when the canonical map points into the corpus ring.
fn source_sdf(c: &RingClassification, i: &Ideal, weakly: bool) -> Result<bool> {
    if Arc::ptr_eq(i.ring(), c.ring()) {
        if let Some(rec) = record(c, i) {
            return Ok(if weakly { rec.is_weakly_sdf } else { rec.is_sdf });
        }
    }
    if weakly { weakly_of(i) } else { sdf_of(i) }
}

fn preimage_check(h: &Harness, weakly: bool) -> Tally {
    per_ring(h.classified_up_to(HOM_MAX_ORDER), |c, t| {
        let Some(cases) = guard(t, c.ring(), hom_cases(c)) else { return };
        for case in &cases {
            let inj = case.hom.is_injective();
            if weakly && !inj {
                continue;
            }
            for j in case.targets.proper() {
                if !inj && j.is_zero() {
                    continue;
                }
                let Some(true) = guard(t, c.ring(), source_sdf(c, j, weakly)) else { continue };
                let pre = hom_preimage_ideal(&case.hom, j);
                if let Some(got) = guard(t, c.ring(), source_sdf(c, &pre, weakly)) {
                    t.check(got, || ideal_cx(&pre, None, format!("preimage under {} of {} fails", case.hom.name(), j.render())));
                }
            }
        }
    })
}

fn hom_preimage_sdf(h: &Harness) -> Tally {
    preimage_check(h, false)
}

fn hom_preimage_weakly(h: &Harness) -> Tally {
    preimage_check(h, true)
}

fn image_check(h: &Harness, weakly: bool) -> Tally {
    per_ring(h.classified_up_to(HOM_MAX_ORDER), |c, t| {
        let Some(cases) = guard(t, c.ring(), hom_cases(c)) else { return };
        for case in cases.iter().filter(|k| k.hom.is_surjective() && Arc::ptr_eq(k.hom.source(), c.ring())) {
            let ker = case.hom.kernel();
            for rec in c.proper() {
                let holds = if weakly { rec.is_weakly_sdf } else { rec.is_sdf };
                if !holds || !ker.is_subset(&rec.ideal) {
                    continue;
                }
                let Some(img) = guard(t, c.ring(), hom_image_ideal(&case.hom, &rec.ideal)) else { continue };
                if let Some(got) = guard(t, c.ring(), source_sdf(c, &img, weakly)) {
                    t.check(got, || ideal_cx(&rec.ideal, None, format!("image under {} fails", case.hom.name())));
                }
            }
        }
    })
}

fn hom_image_sdf(h: &Harness) -> Tally {
    image_check(h, false)
}

fn hom_image_weakly(h: &Harness) -> Tally {
    image_check(h, true)
}

fn quotient_check(h: &Harness, weakly: bool) -> Tally {
    per_ring(h.classified_up_to(HOM_MAX_ORDER), |c, t| {
        let r = c.ring();
        for j in c.context.lattice.proper() {
            let Some((_, pi)) = guard(t, r, make_quotient(r, j)) else { continue };
            for rec in c.proper().filter(|rec| j.is_subset(&rec.ideal)) {
                let Some(img) = guard(t, r, hom_image_ideal(&pi, &rec.ideal)) else { continue };
                let Some(got) = guard(t, r, if weakly { weakly_of(&img) } else { sdf_of(&img) }) else { continue };
                let ok = if weakly {
                    !rec.is_weakly_sdf || got
                } else if j.len() < rec.ideal.len() {
                    got == rec.is_sdf
                } else {
                    !rec.is_sdf || got
                };
                t.check(ok, || ideal_cx(&rec.ideal, None, format!("quotient by {} gives {got}", j.render())));
            }
        }
    })
}

fn quotient_correspondence(h: &Harness) -> Tally {
    quotient_check(h, false)
}

fn quotient_weakly(h: &Harness) -> Tally {
    quotient_check(h, true)
}

fn hom_hypotheses(_: &Harness) -> Tally {
    let mut t = Tally::new();
    // {0} of Z_4 is sdf, its preimage 4Z is not; in finite form, the
    // preimage (4) under Z_16 -> Z_4.
    if let (Some(z4), Some(z16)) = (fixture_ring(&mut t, "zn(4)"), fixture_ring(&mut t, "zn(16)")) {
        expect(&mut t, &Ideal::zero(&z4), Some(true), None, "zero ideal of Z_4");
        t.check(criteria::sdf_in_z(4) == Ok(false), || ring_cx(&z4, "4Z should not be sdf in Z"));
        if let Some((_, pi)) = guard(&mut t, &z16, make_quotient(&z16, &Ideal::principal(&z16, 4))) {
            let pre = hom_preimage_ideal(&pi, &Ideal::zero(pi.target()));
            expect(&mut t, &pre, Some(false), None, "preimage (4) in Z_16");
            // The weakly analog also fails: 4^2 - 2^2 = 12 is nonzero in (4).
            t.check(sdf::check_weakly_sdf_witness(&pre, 4, 2), || ideal_cx(&pre, Some((4, 2)), "(4, 2) should witness"));
        }
    }
    // 4Z x 2Z in Z x Z with a = (2,2), b = (0,2), in integers.
    let (a, b) = ((2i64, 2i64), (0i64, 2i64));
    let inside = |x: (i64, i64)| x.0 % 4 == 0 && x.1 % 2 == 0;
    let d = (a.0 * a.0 - b.0 * b.0, a.1 * a.1 - b.1 * b.1);
    let integer_witness = inside(d) && d != (0, 0) && !inside((a.0 + b.0, a.1 + b.1)) && !inside((a.0 - b.0, a.1 - b.1));
    t.check(integer_witness, || Counterexample::note("Z x Z", "(2,2), (0,2) should witness 4Z x 2Z"));
    // 4Z with a = 4, b = 2.
    let (a, b) = (4i64, 2i64);
    let ok = (a * a - b * b) % 4 == 0 && a * a != b * b && (a + b) % 4 != 0 && (a - b) % 4 != 0;
    t.check(ok, || Counterexample::note("Z", "(4, 2) should witness 4Z"));
    // Evaluation at 0 maps (X + 4) in Z[X] onto 4Z: the constant term of
    // g (X + 4) is 4 g(0). Kernel (X) is not inside (X + 4).
    let mut values = std::collections::BTreeSet::new();
    for code in 0..7i64.pow(3) {
        let g: Vec<i64> = (0..3).map(|k| (code / 7i64.pow(k)) % 7 - 3).collect();
        let mut prod = [0i64; 4];
        for (k, &c) in g.iter().enumerate() {
            prod[k] += 4 * c;
            prod[k + 1] += c;
        }
        values.insert(prod[0]);
    }
    let image_is_4z = values.iter().all(|v| v % 4 == 0) && values.contains(&4);
    t.check(image_is_4z && criteria::sdf_in_z(4) == Ok(false), || Counterexample::note("Z[X]", "evaluation image of (X + 4) should be the non-sdf ideal 4Z"));
    // Finite form of the product example: Z_16 x Z_8 -> Z_4 x Z_4.
    if let (Some(src), Some(dst)) = (fixture_ring(&mut t, "prod(zn(16),zn(8))"), fixture_ring(&mut t, "prod(zn(4),zn(4))")) {
        let map = src
            .elements()
            .map(|x| {
                let d = src.product_digits(x);
                dst.product_index(&[d[0] % 4, d[1] % 4])
            })
            .collect();
        if let (Some(f), Some(j)) = (
            guard(&mut t, &src, RingHom::new(src.clone(), dst.clone(), map, "reduce")),
            fixture_ideal(&mut t, &dst, "[(0,2)]"),
        ) {
            expect(&mut t, &j, Some(false), Some(true), "0 x {0,2} in Z_4 x Z_4");
            let pre = hom_preimage_ideal(&f, &j);
            if let Some(want) = fixture_ideal(&mut t, &src, "[(4,2)]") {
                t.check(pre.members() == want.members(), || ideal_cx(&pre, None, "preimage should be (4) x (2)"));
            }
            expect(&mut t, &pre, None, Some(false), "(4) x (2) in Z_16 x Z_8");
            if let Some((x, y)) = fixture_pair(&mut t, &src, "(2,2)", "(0,2)") {
                t.check(sdf::check_weakly_sdf_witness(&pre, x, y), || ideal_cx(&pre, Some((x, y)), "(2,2), (0,2) should witness"));
            }
        }
    }
    t
}

// ------------------------------------------------ every ideal sdf

fn all_ideals_report(h: &Harness) -> Tally {
    per_ring(h.classified(), |c, t| {
        let Some(rep) = guard(t, c.ring(), criteria::all_ideals_sdf_report(&c.context.lattice, &c.context.profile)) else {
            return;
        };
        t.check(rep.consistent(), || ring_cx(c.ring(), format!("inconsistent report {rep:?}")));
    })
}

fn all_nonzero_vnr(h: &Harness) -> Tally {
    per_ring(h.classified(), |c, t| {
        if !c.proper().all(|rec| rec.is_sdf || rec.ideal.is_zero()) {
            return;
        }
        let ok = criteria::vnr_reduction_holds(&c.context.lattice, &c.context.profile);
        if let Some(ok) = guard(t, c.ring(), ok) {
            t.check(ok, || ring_cx(c.ring(), "every nonzero proper ideal sdf but R/nil(R) is not vNr"));
        }
    })
}

/// `(all proper sdf, all nonzero proper sdf)` by exhaustion, plus whether
/// the structural report agrees.
fn all_ideals(t: &mut Tally, r: &Arc<FiniteRing>) -> Option<(bool, bool)> {
    let lat = guard(t, r, IdealLattice::new(r))?;
    let rep = guard(t, r, criteria::all_ideals_sdf_report(&lat, &ring_queries(&lat)))?;
    t.check(rep.consistent(), || ring_cx(r, format!("inconsistent report {rep:?}")));
    Some((rep.all_proper, rep.all_nonzero_proper))
}

fn all_ideals_fixtures(_: &Harness) -> Tally {
    let mut t = Tally::new();
    let cases = [
        ("zn(4)", true, true),
        ("zn(25)", false, true),
        ("prod(zn(2),zn(2))", true, true),
        ("prod(zn(3),zn(3))", false, true),
        ("prod(gf(2,[1,1,1]),gf(2,[1,1,1]))", true, true),
        ("zn(9)", true, true),
        ("zn(49)", false, true),
    ];
    for (spec, all, nonzero) in cases {
        let Some(r) = fixture_ring(&mut t, spec) else { continue };
        if let Some(got) = all_ideals(&mut t, &r) {
            t.check(got == (all, nonzero), || ring_cx(&r, format!("expected {:?}, got {got:?}", (all, nonzero))));
        }
    }
    t
}

fn z3_cubed(_: &Harness) -> Tally {
    let mut t = Tally::new();
    let Some(r) = fixture_ring(&mut t, "prod(zn(3),zn(3),zn(3))") else { return t };
    let Some(i) = fixture_ideal(&mut t, &r, "[(0,0,1)]") else { return t };
    expect(&mut t, &i, Some(false), None, "0 x 0 x Z_3");
    if let Some((a, b)) = fixture_pair(&mut t, &r, "(2,1,0)", "(1,1,0)") {
        t.check(sdf::check_sdf_witness(&i, a, b), || ideal_cx(&i, Some((a, b)), "stated witness does not certify"));
    }
    if let Some((_, nonzero)) = all_ideals(&mut t, &r) {
        t.check(!nonzero, || ring_cx(&r, "some nonzero proper ideal should fail"));
    }
    t
}

fn is_field(r: &FiniteRing) -> bool {
    units(r).len() + 1 == r.order()
}

fn field_products(h: &Harness) -> Tally {
    per_ring(h.classified(), |c, t| {
        let Construction::Product { factors } = c.ring().construction() else { return };
        if !factors.iter().all(|f| is_field(f)) {
            return;
        }
        let chars: Vec<usize> = factors.iter().map(|f| f.characteristic()).collect();
        let want = criteria::field_product_prediction(&chars);
        let all = c.proper().all(|rec| rec.is_sdf);
        let nonzero = c.proper().all(|rec| rec.is_sdf || rec.ideal.is_zero());
        t.check((all, nonzero) == want, || ring_cx(c.ring(), format!("expected {want:?}, got {:?}", (all, nonzero))));
    })
}

fn square_zero_extension(_: &Harness) -> Tally {
    let mut t = Tally::new();
    let cases = [
        ("polyq(2,[0,0,1])", false),
        ("polyq(3,[0,0,1])", true),
        ("polyq(gf(2,[1,1,1]),[0,0,1])", false),
        ("polyq(5,[0,0,1])", false),
        ("polyq(7,[0,0,1])", false),
    ];
    for (spec, zero_sdf) in cases {
        let Some(r) = fixture_ring(&mut t, spec) else { continue };
        expect(&mut t, &Ideal::zero(&r), Some(zero_sdf), None, "zero ideal");
        if let Some((_, nonzero)) = all_ideals(&mut t, &r) {
            t.check(nonzero, || ring_cx(&r, "every nonzero proper ideal should be sdf"));
        }
    }
    t
}

// ------------------------------------------- prime intersections, R[X]

fn intersection_check(h: &Harness, kinds: &'static [DecompositionKind]) -> Tally {
    per_record(h, |c, rec, t| {
        let Some(d) = guard(t, c.ring(), lattice::prime_decomposition(&c.context.lattice, &rec.ideal)) else { return };
        if !kinds.contains(&d.kind) {
            return;
        }
        let want = d.chars.iter().filter(|&&ch| ch != 2).count() <= 1;
        t.check(want == rec.is_sdf, || {
            ideal_cx(&rec.ideal, rec.sdf.and_then(|v| v.witness), format!("component chars {:?}", d.chars))
        });
    })
}

fn comaximal_intersection(h: &Harness) -> Tally {
    intersection_check(h, &[DecompositionKind::Comaximal])
}

fn irredundant_intersection(h: &Harness) -> Tally {
    // Distinct primes of a finite ring are maximal, hence comaximal, so
    // every irredundant decomposition here is also a comaximal one.
    intersection_check(h, &[DecompositionKind::Comaximal, DecompositionKind::Irredundant])
}

const POLY_MAX_ORDER: usize = 16;
const POLY_PAIRS: usize = 40;
const POLY_DEGREE: usize = 2;

fn polynomial_sampled(h: &Harness) -> Tally {
    let seed = h.spec().seed;
    let rings: Vec<&RingClassification> = h.classified_up_to(POLY_MAX_ORDER).collect();
    let parts: Vec<Tally> = rings
        .par_iter()
        .enumerate()
        .map(|(k, c)| {
            let mut t = Tally::new();
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ k as u64);
            for rec in c.proper().filter(|rec| rec.is_sdf) {
                let Some(d) = guard(&mut t, c.ring(), lattice::prime_decomposition(&c.context.lattice, &rec.ideal)) else {
                    continue;
                };
                if d.kind != DecompositionKind::Comaximal {
                    continue;
                }
                let (checked, hit) = poly::falsify(&rec.ideal, POLY_PAIRS, POLY_DEGREE, &mut rng);
                t.add_checked(checked);
                if let Some((f, g)) = hit {
                    t.fail(ideal_cx(&rec.ideal, None, format!("I[X] fails at f = {f:?}, g = {g:?}")));
                }
            }
            t
        })
        .collect();
    let mut t = Tally::new();
    for p in parts {
        t.merge(p);
    }
    // {0} of Z_4 is sdf, {0}[X] is not: f = X + 2, g = X.
    if let Some(z4) = fixture_ring(&mut t, "zn(4)") {
        let zero = Ideal::zero(&z4);
        t.check(poly::violates_extension(&zero, &[2, 1], &[0, 1]), || ideal_cx(&zero, None, "X + 2, X should witness"));
    }
    t
}

fn polynomial_x_ideals(h: &Harness) -> Tally {
    per_ring(h.classified_up_to(32), |c, t| {
        let r = c.ring();
        let Some(ext) = guard(t, r, make_idealization(r, &ModuleSpec::regular(r))) else { return };
        let ext = Arc::new(ext);
        let parts = IdealizationParts::new(&ext).expect("built as an idealization");
        let reduced = c.context.profile.is_reduced;
        for rec in c.proper() {
            let lifted = parts.with_full_module(&rec.ideal);
            let want = if rec.ideal.is_zero() { reduced && rec.is_sdf } else { rec.is_sdf };
            if let Some(got) = guard(t, r, sdf_of(&lifted)) {
                t.check(got == want, || ideal_cx(&lifted, sdf_witness(&lifted), format!("lift of {} expected {want}", rec.ideal.render())));
            }
        }
    })
}

fn zn_zero_ideal(h: &Harness) -> Tally {
    per_ring(h.classified(), |c, t| {
        let Some(n) = modulus_of(c.ring()) else { return };
        let zero = &c.records[0];
        debug_assert!(zero.ideal.is_zero());
        let want = criteria::zero_ideal_zn_closed_form(n);
        t.check(zero.is_sdf == want, || ideal_cx(&zero.ideal, zero.sdf.and_then(|v| v.witness), format!("expected {want}")));
    })
}

// ---------------------------------------- products, idealization, amalgamation

fn product_records(h: &Harness, f: impl Fn(&ProductSplit, &ClassificationRecord, &Ideal, &Ideal, &mut Tally) + Sync) -> Tally {
    per_ring(h.classified(), |c, t| {
        let Some(split) = guard(t, c.ring(), ProductSplit::new(c.ring())).flatten() else { return };
        for rec in c.proper() {
            let (i1, i2) = split.split(&rec.ideal);
            f(&split, rec, &i1, &i2, t);
        }
    })
}

fn product_rules(h: &Harness) -> Tally {
    product_records(h, |_, rec, i1, i2, t| {
        if let Some((clause, v)) = guard(t, rec.ideal.ring(), criteria::product_sdf(i1, i2)) {
            t.check(v == rec.is_sdf, || ideal_cx(&rec.ideal, rec.sdf.and_then(|v| v.witness), format!("{clause:?} predicts {v}")));
        }
    })
}

fn product_unified(h: &Harness) -> Tally {
    product_records(h, |_, rec, i1, i2, t| {
        if let Some(v) = guard(t, rec.ideal.ring(), criteria::product_sdf_unified(i1, i2)) {
            t.check(v == rec.is_sdf, || ideal_cx(&rec.ideal, rec.sdf.and_then(|v| v.witness), format!("unified rule predicts {v}")));
        }
    })
}

fn product_z4_squared(_: &Harness) -> Tally {
    let mut t = Tally::new();
    let Some(z4) = fixture_ring(&mut t, "zn(4)") else { return t };
    expect(&mut t, &Ideal::zero(&z4), Some(true), None, "{0} of Z_4");
    expect(&mut t, &Ideal::principal(&z4, 2), Some(true), None, "{0,2} of Z_4");
    let Some(r) = fixture_ring(&mut t, "prod(zn(4),zn(4))") else { return t };
    let Some((a, b)) = fixture_pair(&mut t, &r, "(2,1)", "(0,1)") else { return t };
    for gens in ["[]", "[(0,2)]", "[(0,1)]"] {
        let Some(i) = fixture_ideal(&mut t, &r, gens) else { continue };
        expect(&mut t, &i, Some(false), None, gens);
        t.check(sdf::check_sdf_witness(&i, a, b), || ideal_cx(&i, Some((a, b)), "(2,1), (0,1) should witness"));
    }
    t
}

fn idealization_rules(h: &Harness) -> Tally {
    let mut t = per_record(h, |c, rec, t| {
        if !matches!(c.ring().construction(), Construction::Idealization { .. }) {
            return;
        }
        match guard(t, c.ring(), criteria::idealization_sdf(&rec.ideal)) {
            Some(Some((clause, v))) if clause != IdealizationClause::ZeroZero => {
                t.check(v == rec.is_sdf, || ideal_cx(&rec.ideal, rec.sdf.and_then(|v| v.witness), format!("{clause:?} predicts {v}")));
            }
            _ => {}
        }
    });
    // {0}(+)Z_4 in Z_4(+)Z_4 with x = (2,0), y = (0,2).
    if let Some(r) = fixture_ring(&mut t, "idealize(zn(4);mod=0)") {
        if let (Some(i), Some((x, y))) = (fixture_ideal(&mut t, &r, "[(0,1)]"), fixture_pair(&mut t, &r, "(2,0)", "(0,2)")) {
            expect(&mut t, &i, Some(false), None, "{0}(+)Z_4");
            t.check(sdf::check_sdf_witness(&i, x, y), || ideal_cx(&i, Some((x, y)), "(2,0), (0,2) should witness"));
        }
    }
    t
}

fn idealization_zero_zero(h: &Harness) -> Tally {
    let mut t = per_ring(h.classified(), |c, t| {
        let Some(parts) = IdealizationParts::new(c.ring()) else { return };
        if parts.module.order() == 3 {
            return;
        }
        let zero = &c.records[0];
        t.check(!zero.is_sdf, || ideal_cx(&zero.ideal, None, "{(0,0)} sdf with |M| != 3"));
    });
    if let Some(r) = fixture_ring(&mut t, "idealize(zn(3);mod=0)") {
        expect(&mut t, &Ideal::zero(&r), Some(true), None, "{(0,0)} of Z_3(+)Z_3");
    }
    t
}

fn amalgamation_rule(h: &Harness) -> Tally {
    per_ring(h.classified(), |c, t| {
        let Some(parts) = AmalgamationParts::new(c.ring()) else { return };
        let Some(src) = guard(t, c.ring(), IdealLattice::new(&parts.source)) else { return };
        for i in src.nonzero_proper() {
            let lifted = parts.lift(i);
            let Some(rec) = record(c, &lifted) else {
                t.fail(ideal_cx(&lifted, None, "lift is not an ideal of the lattice"));
                continue;
            };
            if let Some(v) = guard(t, c.ring(), criteria::amalgamation_sdf(i)) {
                t.check(v == rec.is_sdf, || ideal_cx(&lifted, rec.sdf.and_then(|v| v.witness), format!("I = {} predicts {v}", i.render())));
            }
        }
    })
}

fn amalgamation_zero(_: &Harness) -> Tally {
    let mut t = Tally::new();
    let Some(r) = fixture_ring(&mut t, "amalg(zn(4),zn(4),hom=id,j=[1])") else { return t };
    let Some(parts) = AmalgamationParts::new(&r) else { return t };
    expect(&mut t, &Ideal::zero(&parts.source), Some(true), None, "{0} of Z_4");
    let lifted = parts.lift(&Ideal::zero(&parts.source));
    expect(&mut t, &lifted, Some(false), None, "{0} amalg Z_4");
    t.check(!lattice::is_radical(&lifted), || ideal_cx(&lifted, None, "should not be radical"));
    if let Some((x, y)) = fixture_pair(&mut t, &r, "(2,0)", "(0,2)") {
        t.check(sdf::check_sdf_witness(&lifted, x, y), || ideal_cx(&lifted, Some((x, y)), "(2,0), (0,2) should witness"));
    }
    t
}

// ------------------------------------------------------------- weakly

fn weakly_two_unit(h: &Harness) -> Tally {
    per_record(h, |c, rec, t| {
        if c.context.profile.two == TwoKind::Unit && rec.is_weakly_sdf {
            t.check(rec.is_weakly_prime, || ideal_cx(&rec.ideal, rec.weakly_prime.and_then(|v| v.witness), "not weakly prime"));
        }
    })
}

fn weakly_not_sdf_nil(h: &Harness) -> Tally {
    per_record(h, |c, rec, t| {
        if rec.is_weakly_sdf && !rec.is_sdf {
            t.check(rec.ideal.is_subset(&c.context.profile.nilpotents), || ideal_cx(&rec.ideal, None, "not inside nil(R)"));
        }
    })
}

fn weakly_not_sdf_consequences(h: &Harness) -> Tally {
    per_record(h, |c, rec, t| {
        if rec.is_weakly_sdf && !rec.is_sdf {
            if let Some(w) = guard(t, c.ring(), criteria::weakly_structure_checks(&rec.ideal)) {
                t.check(w.all_hold(), || ideal_cx(&rec.ideal, None, format!("{w:?}")));
            }
        }
    })
}

fn weakly_full_factor(h: &Harness) -> Tally {
    product_records(h, |_, rec, i1, i2, t| {
        for (i, other) in [(i1, i2), (i2, i1)] {
            if other.is_proper() || i.is_zero() || !i.is_proper() {
                continue;
            }
            let (Some(true), Some(s)) = (guard(t, i.ring(), weakly_of(i)), guard(t, i.ring(), sdf_of(i))) else {
                continue;
            };
            t.check(rec.is_weakly_sdf == s && rec.is_sdf == s, || {
                ideal_cx(&rec.ideal, None, format!("factor sdf {s}, product weakly {} sdf {}", rec.is_weakly_sdf, rec.is_sdf))
            });
        }
    })
}

/// `x^2 - y^2 ∈ I` for nonzero `x, y` forces `x^2 = y^2`.
fn nonzero_square_differences_vanish(i: &Ideal) -> bool {
    let r = i.ring();
    r.nonzero().all(|a| {
        r.nonzero().all(|b| {
            let d = r.sub(r.square(a), r.square(b));
            d == r.zero() || !i.contains(d)
        })
    })
}

fn weakly_both_factors(h: &Harness) -> Tally {
    product_records(h, |_, rec, i1, i2, t| {
        if !(i1.is_proper() && i2.is_proper()) {
            return;
        }
        let wns = |i: &Ideal| -> Result<bool> { Ok(weakly_of(i)? && !sdf_of(i)?) };
        let (Some(true), Some(true)) = (guard(t, i1.ring(), wns(i1)), guard(t, i2.ring(), wns(i2))) else {
            return;
        };
        let a = rec.is_weakly_sdf && !rec.is_sdf;
        let b = rec.is_weakly_sdf;
        let c = criteria::square_differences_vanish(i1) && criteria::square_differences_vanish(i2);
        let d = nonzero_square_differences_vanish(&rec.ideal);
        t.check(a == b && b == c && c == d, || ideal_cx(&rec.ideal, None, format!("conditions {:?}", [a, b, c, d])));
    })
}

fn weakly_fixture_z4(_: &Harness) -> Tally {
    let mut t = Tally::new();
    let Some(r) = fixture_ring(&mut t, "prod(zn(4),zn(4))") else { return t };
    let Some(i) = fixture_ideal(&mut t, &r, "[(0,2)]") else { return t };
    expect(&mut t, &i, Some(false), Some(true), "0 x {0,2}");
    t.check(!lattice::is_radical(&i), || ideal_cx(&i, None, "should not be radical"));
    if let Some(wp) = guard(&mut t, &r, sdf::is_weakly_prime(&i)) {
        t.check(!wp.holds, || ideal_cx(&i, None, "should not be weakly prime"));
    }
    if let Some((a, b)) = fixture_pair(&mut t, &r, "(2,2)", "(0,1)") {
        t.check(sdf::check_weakly_prime_witness(&i, a, b), || ideal_cx(&i, Some((a, b)), "(2,2), (0,1) should witness"));
    }
    t.check(nonzero_square_differences_vanish(&i), || ideal_cx(&i, None, "square differences in I should vanish"));
    t
}

fn weakly_product_fixture(_: &Harness) -> Tally {
    let mut t = Tally::new();
    let Some(r) = fixture_ring(&mut t, "prod(polyq(2,[0,0,1]),prod(zn(4),zn(4)))") else { return t };
    let Some(Some(split)) = guard(&mut t, &r, ProductSplit::new(&r)) else { return t };
    let zero1 = Ideal::zero(&split.first);
    expect(&mut t, &zero1, Some(false), Some(true), "{0} of Z_2[X]/(X^2)");
    if let Some((a, b)) = fixture_pair(&mut t, &split.first, "[1,1]", "1") {
        t.check(sdf::check_sdf_witness(&zero1, a, b), || ideal_cx(&zero1, Some((a, b)), "(X+1, 1) should witness"));
    }
    let Some(j) = fixture_ideal(&mut t, &split.rest, "[(0,2)]") else { return t };
    expect(&mut t, &j, Some(false), Some(true), "0 x {0,2}");
    let k = split.combine(&zero1, &j);
    expect(&mut t, &k, Some(false), Some(true), "{0} x (0 x {0,2})");
    t.check(nonzero_square_differences_vanish(&k), || ideal_cx(&k, None, "square differences in K should vanish"));
    t
}

fn zero_weakly(h: &Harness) -> Tally {
    per_ring(h.classified(), |c, t| {
        let zero = &c.records[0];
        t.check(zero.is_weakly_sdf && zero.is_weakly_prime, || ideal_cx(&zero.ideal, None, "zero ideal not weakly absorbing"));
    })
}

fn nil_zn(h: &Harness) -> Tally {
    per_ring(h.classified(), |c, t| {
        let Some(n) = modulus_of(c.ring()) else { return };
        let nil = &c.context.profile.nilpotents;
        let Some(rec) = record(c, nil) else { return };
        let class = criteria::nil_zn_classification(n);
        let weakly_not = nil.is_zero() && rec.is_weakly_sdf && !rec.is_sdf;
        t.check(rec.is_sdf == class.sdf && weakly_not == class.weakly_not_sdf, || {
            ideal_cx(nil, rec.sdf.and_then(|v| v.witness), format!("expected {class:?}"))
        });
    })
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::harness::{build_corpus, Corpus, CorpusSpec, Status};

    #[test]
    fn ids_are_unique_and_plentiful() {
        let ids: HashSet<&str> = registry().iter().map(|p| p.id).collect();
        assert_eq!(ids.len(), registry().len());
        assert!(registry().len() >= 25);
    }

    #[test]
    fn polynomial_helpers() {
        assert!(irreducible(2, &[1, 1, 1]));
        assert!(!irreducible(2, &[1, 0, 1]));
        assert!(!squarefree(2, &[1, 0, 1]));
        assert!(squarefree(2, &[0, 1, 1]));
        assert!(irreducible(3, &[1, 0, 1]));
        assert!(!irreducible(3, &[2, 0, 1]));
        assert_eq!(poly_rem(3, &[2, 0, 1], &[1, 1]), Vec::<usize>::new());
    }

    #[test]
    fn small_corpus_passes() {
        let spec = CorpusSpec { zn_max: 16, pair_factor_max_order: 4, triple_factor_max_order: 2, ..CorpusSpec::default() };
        let h = Harness::new(build_corpus(&spec).unwrap());
        for r in h.run_all() {
            assert_ne!(r.status, Status::Fail, "{r:?}");
        }
    }

    #[test]
    fn fields_only_corpus_has_no_failures() {
        let spec = CorpusSpec { zn_max: 16, ..CorpusSpec::default() };
        let rings = ["zn(2)", "zn(3)", "zn(5)", "gf(2,[1,1,1])", "gf(3,[1,0,1])"]
            .iter()
            .map(|s| parse_ring(s).unwrap())
            .collect();
        let h = Harness::new(Corpus::of(spec, rings));
        let results = h.run_all();
        assert!(results.iter().all(|r| r.status != Status::Fail));
        assert!(results.iter().any(|r| r.status == Status::Inapplicable));
    }
}
