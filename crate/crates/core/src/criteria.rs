//! Structural criteria that predict sdf-absorption without the full pair
//! scan. Each one states its own hypotheses; when they fail the criterion
//! returns `None` (or an `Inapplicable` error) rather than a guess.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::construct::{is_prime_number, make_product, make_quotient, make_zn};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::lattice::{self, DecompositionKind, IdealLattice};
use crate::queries::{RingProfile, TwoKind};
use crate::ring::{Construction, Elem, FiniteRing};
use crate::sdf;

/// Prime factorization as `(p, e)` pairs, ascending.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn is_twice_odd_prime(n: usize) -> bool {
    n.is_multiple_of(2) && n / 2 > 2 && is_prime_number(n / 2)
}

/// `{0}` is sdf-absorbing in `Z_n` iff `n` is 4, 9, a prime, or twice an
/// odd prime.
pub fn zero_ideal_zn_closed_form(n: usize) -> bool {
    n == 4 || n == 9 || is_prime_number(n) || is_twice_odd_prime(n)
}

/// `nZ` is sdf-absorbing in `Z` iff `n` is prime or twice an odd prime.
pub fn sdf_in_z_closed_form(n: usize) -> bool {
    is_prime_number(n) || is_twice_odd_prime(n)
}

/// Decide `nZ` through `Z_{4n}`: for `4nZ ⊊ nZ`, `nZ` is sdf-absorbing in
/// `Z` exactly when `nZ/4nZ` is sdf-absorbing in `Z/4nZ`.
pub fn sdf_in_z_bruteforce(n: usize) -> Result<crate::verdict::Verdict> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let r = Arc::new(make_zn(4 * n)?);
    sdf::is_sdf_bruteforce(&Ideal::principal(&r, n))
}

/// Both routes for `nZ`; a mismatch is reported as a disagreement.
pub fn sdf_in_z(n: usize) -> Result<bool> {
    let brute = sdf_in_z_bruteforce(n)?.holds;
    if brute != sdf_in_z_closed_form(n) {
        return Err(Error::Disagreement {
            criterion: "integer-ideal closed form".into(),
            ring: "Z".into(),
            ideal: format!("{n}Z"),
        });
    }
    Ok(brute)
}

/// Closed forms for `nil(Z_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilZnClass {
    /// `nil(Z_n)` is sdf-absorbing.
    pub sdf: bool,
    /// `nil(Z_n) = {0}` and it is weakly sdf-absorbing but not sdf-absorbing.
    pub weakly_not_sdf: bool,
}

pub fn nil_zn_classification(n: usize) -> NilZnClass {
    let f = factorize(n);
    let sdf = f.len() == 1 || (f.len() == 2 && f[0].0 == 2);
    let squarefree = f.iter().all(|&(_, e)| e == 1);
    let weakly_not_sdf = squarefree && (f.len() >= 3 || (f.len() == 2 && f[0].0 != 2));
    NilZnClass { sdf, weakly_not_sdf }
}

/// For `I = P_1 ∩ ... ∩ P_n` with comaximal or irredundant primes:
/// sdf-absorbing iff at most one `char(R/P_i) ≠ 2`.
pub fn fast_sdf_comaximal(lattice: &IdealLattice, ideal: &Ideal) -> Result<Option<bool>> {
    let d = lattice::prime_decomposition(lattice, ideal)?;
    Ok(match d.kind {
        DecompositionKind::Comaximal | DecompositionKind::Irredundant => {
            Some(d.chars.iter().filter(|&&c| c != 2).count() <= 1)
        }
        DecompositionKind::None => None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Zero,
    NonzeroProper,
    Whole,
}

fn shape(i: &Ideal) -> Shape {
    if i.is_zero() {
        Shape::Zero
    } else if i.is_proper() {
        Shape::NonzeroProper
    } else {
        Shape::Whole
    }
}

fn sdf_holds(i: &Ideal) -> Result<bool> {
    Ok(sdf::is_sdf_bruteforce(i)?.holds)
}

fn zero_sdf(r: &Arc<FiniteRing>) -> Result<bool> {
    sdf_holds(&Ideal::zero(r))
}

fn reduced(r: &Arc<FiniteRing>) -> bool {
    lattice::nilradical(r).is_zero()
}

fn contains_two(i: &Ideal) -> bool {
    i.contains(i.ring().two())
}

/// A ring `R_1 × R_2 × ... × R_k` viewed as `R_1 × (R_2 × ... × R_k)`.
#[derive(Debug, Clone)]
pub struct ProductSplit {
    pub ring: Arc<FiniteRing>,
    pub first: Arc<FiniteRing>,
    pub rest: Arc<FiniteRing>,
}

impl ProductSplit {
    pub fn new(ring: &Arc<FiniteRing>) -> Result<Option<Self>> {
        let Construction::Product { factors } = ring.construction() else {
            return Ok(None);
        };
        let rest = if factors.len() == 2 {
            factors[1].clone()
        } else {
            Arc::new(make_product(factors[1..].to_vec())?)
        };
        Ok(Some(ProductSplit { ring: ring.clone(), first: factors[0].clone(), rest }))
    }

    fn binary(&self) -> bool {
        matches!(self.ring.construction(), Construction::Product { factors } if factors.len() == 2)
    }

    fn parts(&self, a: Elem) -> (Elem, Elem) {
        let d = self.ring.product_digits(a);
        let rest = if self.binary() { d[1] } else { self.rest.product_index(&d[1..]) };
        (d[0], rest)
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        let mut d = vec![a];
        if self.binary() {
            d.push(b);
        } else {
            d.extend(self.rest.product_digits(b));
        }
        self.ring.product_index(&d)
    }

    /// `I = I_1 × I_2`; ideals of a product of unital rings always split.
    pub fn split(&self, ideal: &Ideal) -> (Ideal, Ideal) {
        let mut m1 = FixedBitSet::with_capacity(self.first.order());
        let mut m2 = FixedBitSet::with_capacity(self.rest.order());
        for a in ideal.members().ones() {
            let (x, y) = self.parts(a);
            m1.insert(x);
            m2.insert(y);
        }
        debug_assert_eq!(m1.count_ones(..) * m2.count_ones(..), ideal.len());
        (
            Ideal::from_members_unchecked(&self.first, m1).with_minimal_generators(),
            Ideal::from_members_unchecked(&self.rest, m2).with_minimal_generators(),
        )
    }

    /// `I_1 × I_2` as an ideal of the product.
    pub fn combine(&self, i1: &Ideal, i2: &Ideal) -> Ideal {
        let mut m = FixedBitSet::with_capacity(self.ring.order());
        for x in i1.members().ones() {
            for y in i2.members().ones() {
                m.insert(self.join(x, y));
            }
        }
        Ideal::from_members_unchecked(&self.ring, m).with_minimal_generators()
    }
}

/// Which product clause decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductClause {
    BothNonzeroProper,
    ZeroTimesWhole,
    ProperTimesWhole,
    ZeroTimesProper,
    ZeroTimesZero,
}

/// `I_1 × I_2 ⊆ R_1 × R_2`, dispatched on the shape of each factor.
pub fn product_sdf(i1: &Ideal, i2: &Ideal) -> Result<(ProductClause, bool)> {
    use Shape::*;
    let (r1, r2) = (i1.ring(), i2.ring());
    let (s1, s2) = (shape(i1), shape(i2));
    if s1 == Whole && s2 == Whole {
        return Err(Error::domain("product of two whole rings is not a proper ideal"));
    }
    // Put the factors in a canonical order; every clause is symmetric.
    let (a, b, ra, rb, sa, sb) = match (s1, s2) {
        (Whole, _) | (NonzeroProper, Zero) => (i2, i1, r2, r1, s2, s1),
        _ => (i1, i2, r1, r2, s1, s2),
    };
    Ok(match (sa, sb) {
        (NonzeroProper, NonzeroProper) => (
            ProductClause::BothNonzeroProper,
            sdf_holds(a)? && sdf_holds(b)? && (contains_two(a) || contains_two(b)),
        ),
        (Zero, Whole) => (ProductClause::ZeroTimesWhole, reduced(ra) && zero_sdf(ra)?),
        (NonzeroProper, Whole) => (ProductClause::ProperTimesWhole, sdf_holds(a)?),
        (Zero, NonzeroProper) => (
            ProductClause::ZeroTimesProper,
            zero_sdf(ra)? && reduced(ra) && sdf_holds(b)? && (ra.characteristic() == 2 || contains_two(b)),
        ),
        (Zero, Zero) => (
            ProductClause::ZeroTimesZero,
            zero_sdf(ra)?
                && zero_sdf(rb)?
                && reduced(ra)
                && reduced(rb)
                && (ra.characteristic() == 2 || rb.characteristic() == 2),
        ),
        _ => unreachable!("shapes were normalized above"),
    })
}

/// The single rule covering every shape: treat the whole ring as an
/// sdf-absorbing radical ideal; then `I_1 × I_2` is sdf-absorbing iff both
/// factors are sdf-absorbing radical ideals and `2 ∈ I_1` or `2 ∈ I_2`.
pub fn product_sdf_unified(i1: &Ideal, i2: &Ideal) -> Result<bool> {
    if !i1.is_proper() && !i2.is_proper() {
        return Err(Error::domain("product of two whole rings is not a proper ideal"));
    }
    let good = |i: &Ideal| -> Result<bool> {
        Ok(!i.is_proper() || (sdf_holds(i)? && lattice::is_radical(i)))
    };
    Ok(good(i1)? && good(i2)? && (contains_two(i1) || contains_two(i2)))
}

/// Product rules for the weak property. Applies when one factor is a
/// nonzero weakly sdf-absorbing ideal and the other is the whole ring, or
/// when both factors are weakly sdf-absorbing but not sdf-absorbing.
pub fn weakly_sdf_fast(i1: &Ideal, i2: &Ideal) -> Result<Option<bool>> {
    let weakly = |i: &Ideal| -> Result<bool> { Ok(sdf::is_weakly_sdf_bruteforce(i)?.holds) };
    for (i, other) in [(i1, i2), (i2, i1)] {
        if !other.is_proper() && i.is_proper() && !i.is_zero() && weakly(i)? {
            return Ok(Some(sdf_holds(i)?));
        }
    }
    if i1.is_proper() && i2.is_proper() {
        let wns = |i: &Ideal| -> Result<bool> { Ok(weakly(i)? && !sdf_holds(i)?) };
        if wns(i1)? && wns(i2)? {
            return Ok(Some(square_differences_vanish(i1) && square_differences_vanish(i2)));
        }
    }
    Ok(None)
}

/// Every `a^2 - b^2` that lands in `I` is zero.
pub fn square_differences_vanish(ideal: &Ideal) -> bool {
    let r = ideal.ring();
    let sq: Vec<Elem> = r.elements().map(|a| r.square(a)).collect();
    r.elements().all(|a| {
        r.elements().all(|b| {
            let d = r.sub(sq[a], sq[b]);
            d == r.zero() || !ideal.contains(d)
        })
    })
}

/// The pieces of an idealization `R(+)M` with `M = R/J`.
#[derive(Debug, Clone)]
pub struct IdealizationParts {
    pub base: Arc<FiniteRing>,
    pub module: Arc<FiniteRing>,
    pub ring: Arc<FiniteRing>,
}

impl IdealizationParts {
    pub fn new(ring: &Arc<FiniteRing>) -> Option<Self> {
        match ring.construction() {
            Construction::Idealization { base, module, .. } => Some(IdealizationParts {
                base: base.clone(),
                module: module.clone(),
                ring: ring.clone(),
            }),
            _ => None,
        }
    }

    pub fn pair(&self, r: Elem, m: Elem) -> Elem {
        r * self.module.order() + m
    }

    /// `I(+)N` for an ideal `I` of `R` and a subgroup `N` of `M` given as a
    /// member set of the module ring.
    pub fn homogeneous(&self, i: &Ideal, n: &FixedBitSet) -> Ideal {
        let mut m = FixedBitSet::with_capacity(self.ring.order());
        for r in i.members().ones() {
            for x in n.ones() {
                m.insert(self.pair(r, x));
            }
        }
        Ideal::from_members_unchecked(&self.ring, m).with_minimal_generators()
    }

    /// `I(+)M`.
    pub fn with_full_module(&self, i: &Ideal) -> Ideal {
        let mut all = FixedBitSet::with_capacity(self.module.order());
        all.insert_range(..);
        self.homogeneous(i, &all)
    }

    /// `(I, N)` when the ideal is `I(+)N`, `None` when it is not homogeneous.
    pub fn split(&self, ideal: &Ideal) -> Option<(Ideal, FixedBitSet)> {
        let mo = self.module.order();
        let mut proj = FixedBitSet::with_capacity(self.base.order());
        let mut n = FixedBitSet::with_capacity(mo);
        for a in ideal.members().ones() {
            proj.insert(a / mo);
            if a / mo == self.base.zero() {
                n.insert(a % mo);
            }
        }
        if !proj.ones().all(|r| ideal.contains(self.pair(r, self.module.zero()))) {
            return None;
        }
        let i = Ideal::from_members_unchecked(&self.base, proj).with_minimal_generators();
        Some((i, n))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealizationClause {
    /// `I ≠ 0`: sdf-absorbing iff `I` is and `N = M`.
    NonzeroIdeal,
    /// `{0}(+)M`: iff `R` reduced and `{0}` sdf-absorbing in `R`.
    ZeroFullModule,
    /// `{0}(+)N` with `0 ≠ N ⊊ M`: never.
    ZeroProperSubmodule,
    /// `{(0,0)}`: no criterion, decided by brute force.
    ZeroZero,
}

/// Verdict for an ideal of an idealization ring. `None` for ideals that
/// are not of the form `I(+)N`.
pub fn idealization_sdf(ideal: &Ideal) -> Result<Option<(IdealizationClause, bool)>> {
    let parts = IdealizationParts::new(ideal.ring())
        .ok_or_else(|| Error::domain("idealization criterion needs an idealization ring"))?;
    if !ideal.is_proper() {
        return Err(Error::domain("sdf-absorption is only defined for proper ideals"));
    }
    let Some((i, n)) = parts.split(ideal) else {
        return Ok(None);
    };
    let full = n.count_ones(..) == parts.module.order();
    let n_zero = n.count_ones(..) == 1;
    Ok(Some(if !i.is_zero() {
        (IdealizationClause::NonzeroIdeal, full && sdf_holds(&i)?)
    } else if full {
        (IdealizationClause::ZeroFullModule, reduced(&parts.base) && zero_sdf(&parts.base)?)
    } else if !n_zero {
        (IdealizationClause::ZeroProperSubmodule, false)
    } else {
        (IdealizationClause::ZeroZero, sdf_holds(ideal)?)
    }))
}

/// `A ⋈_J B` together with its defining data.
#[derive(Debug, Clone)]
pub struct AmalgamationParts {
    pub ring: Arc<FiniteRing>,
    pub source: Arc<FiniteRing>,
    pub along: Ideal,
    pairs: Vec<(Elem, Elem)>,
}

impl AmalgamationParts {
    pub fn new(ring: &Arc<FiniteRing>) -> Option<Self> {
        match ring.construction() {
            Construction::Amalgamation { hom, along, pairs } => Some(AmalgamationParts {
                ring: ring.clone(),
                source: hom.source().clone(),
                along: along.clone(),
                pairs: pairs.clone(),
            }),
            _ => None,
        }
    }

    /// `I ⋈_J B = {(i, f(i) + j)}` for an ideal `I` of `A`.
    pub fn lift(&self, i: &Ideal) -> Ideal {
        let mut m = FixedBitSet::with_capacity(self.ring.order());
        for (k, &(a, _)) in self.pairs.iter().enumerate() {
            if i.contains(a) {
                m.insert(k);
            }
        }
        Ideal::from_members_unchecked(&self.ring, m).with_minimal_generators()
    }

    /// `I` when the ideal is `I ⋈_J B`.
    pub fn split(&self, ideal: &Ideal) -> Option<Ideal> {
        let mut proj = FixedBitSet::with_capacity(self.source.order());
        for k in ideal.members().ones() {
            proj.insert(self.pairs[k].0);
        }
        let i = Ideal::from_members_unchecked(&self.source, proj).with_minimal_generators();
        (i.len() * self.along.len() == ideal.len()).then_some(i)
    }
}

/// For a nonzero proper ideal `I` of `A`: `I ⋈_J B` is sdf-absorbing iff
/// `I` is. The zero ideal genuinely behaves differently and is refused.
pub fn amalgamation_sdf(i: &Ideal) -> Result<bool> {
    if i.is_zero() {
        return Err(Error::Inapplicable(
            "the amalgamation criterion needs a nonzero ideal; use brute force for I = 0".into(),
        ));
    }
    sdf_holds(i)
}

/// Fast verdict for an ideal of an amalgamation ring, `None` unless it has
/// the form `I ⋈_J B` with `I` nonzero.
pub fn amalgamation_fast(ideal: &Ideal) -> Result<Option<bool>> {
    let Some(parts) = AmalgamationParts::new(ideal.ring()) else {
        return Ok(None);
    };
    match parts.split(ideal) {
        Some(i) if !i.is_zero() && i.is_proper() => Ok(Some(amalgamation_sdf(&i)?)),
        _ => Ok(None),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AllIdealsClause {
    /// Quasilocal: every nonzero proper ideal is sdf iff `M` is principal
    /// with `M^2 = 0` (and is the only prime).
    Quasilocal,
    /// Von Neumann regular, `2` a unit.
    VnrTwoUnit,
    /// Von Neumann regular, characteristic 2.
    VnrCharTwo,
    /// Von Neumann regular, `2` a nonzero zero-divisor.
    VnrTwoZeroDivisor,
    /// Only the necessary condition applies.
    NecessaryOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllIdealsReport {
    pub all_proper: bool,
    pub all_nonzero_proper: bool,
    pub predicted_all_proper: Option<bool>,
    pub predicted_all_nonzero_proper: Option<bool>,
    /// If every nonzero proper ideal is sdf-absorbing then `R/nil(R)` is
    /// von Neumann regular and, for non-reduced `R`, `nil(R)` is the
    /// unique minimal nonzero ideal. Always true unless that fails.
    pub necessary_condition: bool,
    pub clause: AllIdealsClause,
}

impl AllIdealsReport {
    pub fn consistent(&self) -> bool {
        self.necessary_condition
            && self.predicted_all_proper.is_none_or(|p| p == self.all_proper)
            && self.predicted_all_nonzero_proper.is_none_or(|p| p == self.all_nonzero_proper)
    }
}

/// Exhaustive answers for "every (nonzero) proper ideal is sdf-absorbing"
/// next to the prediction of the structural clause that applies.
pub fn all_ideals_sdf_report(lattice: &IdealLattice, profile: &RingProfile) -> Result<AllIdealsReport> {
    let ring = lattice.ring();
    let mut all_proper = true;
    let mut all_nonzero_proper = true;
    for i in lattice.proper() {
        if !sdf_holds(i)? {
            all_proper = false;
            if !i.is_zero() {
                all_nonzero_proper = false;
            }
        }
    }
    let maximal = lattice.maximal_ideals();
    let (clause, predicted_all_proper, predicted_all_nonzero_proper) = if profile.is_von_neumann_regular {
        match profile.two {
            TwoKind::Unit => (
                AllIdealsClause::VnrTwoUnit,
                Some(profile.is_field),
                Some(profile.is_field || maximal.len() == 2),
            ),
            TwoKind::Zero => (AllIdealsClause::VnrCharTwo, Some(true), Some(true)),
            TwoKind::NonzeroZeroDivisor => {
                let odd = maximal.iter().filter(|m| lattice::quotient_char(m) != 2).count();
                (AllIdealsClause::VnrTwoZeroDivisor, Some(odd == 1), Some(odd == 1))
            }
        }
    } else if profile.is_local {
        let m = maximal[0];
        let principal = ring.elements().any(|a| Ideal::principal(ring, a).members() == m.members());
        let square_zero = m.product(m).is_zero();
        let unique_prime = lattice.prime_ideals().len() == 1;
        (AllIdealsClause::Quasilocal, None, Some(unique_prime && principal && square_zero))
    } else {
        (AllIdealsClause::NecessaryOnly, None, None)
    };
    let necessary_condition = !all_nonzero_proper || vnr_reduction_holds(lattice, profile)?;
    Ok(AllIdealsReport {
        all_proper,
        all_nonzero_proper,
        predicted_all_proper,
        predicted_all_nonzero_proper,
        necessary_condition,
        clause,
    })
}

/// `R/nil(R)` is von Neumann regular, and for non-reduced `R`, `nil(R)` is
/// the unique minimal nonzero ideal.
pub fn vnr_reduction_holds(lattice: &IdealLattice, profile: &RingProfile) -> Result<bool> {
    if profile.is_reduced {
        return Ok(profile.is_von_neumann_regular);
    }
    let ring = lattice.ring();
    let (q, _) = make_quotient(ring, &profile.nilpotents)?;
    let q_profile = crate::queries::ring_queries(&IdealLattice::new(&q)?);
    let minimal = lattice.minimal_nonzero();
    Ok(q_profile.is_von_neumann_regular
        && minimal.len() == 1
        && minimal[0].members() == profile.nilpotents.members())
}

/// Prediction for a finite product of fields: every proper ideal is sdf
/// iff at most one field has odd characteristic; every nonzero proper ideal
/// is sdf iff that holds or there are exactly two fields.
pub fn field_product_prediction(field_chars: &[usize]) -> (bool, bool) {
    let odd = field_chars.iter().filter(|&&c| c != 2).count();
    (odd <= 1, odd <= 1 || field_chars.len() == 2)
}

/// Conclusions forced on an ideal that is weakly sdf-absorbing but not
/// sdf-absorbing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeaklyChecks {
    pub subset_nil: bool,
    /// `2 i^2 = 0` for every `i ∈ I`.
    pub two_i_sq_zero: bool,
    /// `i^2 = 0` for every `i ∈ I`; `None` unless `2` is a unit or the
    /// characteristic is 2.
    pub square_zero: Option<bool>,
    /// `I = {0}`; `None` unless `R` is reduced.
    pub reduced_forces_zero: Option<bool>,
}

impl WeaklyChecks {
    pub fn all_hold(&self) -> bool {
        self.subset_nil
            && self.two_i_sq_zero
            && self.square_zero.unwrap_or(true)
            && self.reduced_forces_zero.unwrap_or(true)
    }
}

pub fn weakly_structure_checks(ideal: &Ideal) -> Result<WeaklyChecks> {
    if !(sdf::is_weakly_sdf_bruteforce(ideal)?.holds && !sdf_holds(ideal)?) {
        return Err(Error::domain("ideal is not weakly sdf-absorbing without being sdf-absorbing"));
    }
    let r = ideal.ring();
    let nil = lattice::nilradical(r);
    let two = r.two();
    let char2 = two == r.zero();
    let two_unit = r.elements().any(|b| r.mul(two, b) == r.one());
    let members = ideal.elements();
    Ok(WeaklyChecks {
        subset_nil: ideal.is_subset(&nil),
        two_i_sq_zero: members.iter().all(|&i| r.mul(two, r.square(i)) == r.zero()),
        square_zero: (two_unit || char2).then(|| members.iter().all(|&i| r.square(i) == r.zero())),
        reduced_forces_zero: nil.is_zero().then(|| ideal.is_zero()),
    })
}
