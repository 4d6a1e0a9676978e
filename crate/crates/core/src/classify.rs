//! Per-ideal classification: every decider on every ideal of a ring, with
//! each applicable structural criterion cross-checked against brute force.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::criteria::{self, AmalgamationParts, IdealizationClause, ProductSplit};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::lattice::{self, IdealLattice};
use crate::queries::{ring_queries, RingProfile, TwoKind};
use crate::ring::{Construction, FiniteRing};
use crate::sdf;
use crate::verdict::Verdict;

/// Fast-criterion names starting with this prefix predict weak
/// sdf-absorption; all others predict sdf-absorption.
pub const WEAKLY_PREFIX: &str = "weakly-";

#[derive(Debug, Clone)]
pub struct ClassificationRecord {
    pub ideal: Ideal,
    pub is_proper: bool,
    pub is_prime: bool,
    pub is_maximal: bool,
    pub is_radical: bool,
    pub is_sdf: bool,
    pub is_weakly_sdf: bool,
    pub is_weakly_prime: bool,
    pub quotient_char: usize,
    /// Brute-force verdicts, absent for the whole ring.
    pub sdf: Option<Verdict>,
    pub weakly_sdf: Option<Verdict>,
    pub prime: Option<Verdict>,
    pub weakly_prime: Option<Verdict>,
    /// `None` means the criterion's hypotheses do not hold for this ideal.
    pub fast_verdicts: BTreeMap<String, Option<bool>>,
}

impl ClassificationRecord {
    /// prime ⇒ sdf ⇒ weakly sdf, prime ⇒ weakly prime ⇒ weakly sdf.
    pub fn hierarchy_holds(&self) -> bool {
        (!self.is_prime || self.is_sdf)
            && (!self.is_sdf || self.is_weakly_sdf)
            && (!self.is_prime || self.is_weakly_prime)
            && (!self.is_weakly_prime || self.is_weakly_sdf)
    }

    /// Fast criteria whose verdict contradicts brute force.
    pub fn disagreements(&self) -> Vec<&str> {
        self.fast_verdicts
            .iter()
            .filter(|(name, v)| {
                let target = if name.starts_with(WEAKLY_PREFIX) { self.is_weakly_sdf } else { self.is_sdf };
                v.is_some_and(|v| v != target)
            })
            .map(|(name, _)| name.as_str())
            .collect()
    }
}

/// Structure shared by all ideals of one ring.
#[derive(Debug)]
pub struct RingContext {
    pub lattice: IdealLattice,
    pub profile: RingProfile,
    product: Option<ProductSplit>,
    amalgamation: Option<AmalgamationParts>,
}

impl RingContext {
    pub fn new(ring: &Arc<FiniteRing>) -> Result<Self> {
        let lattice = IdealLattice::new(ring)?;
        let profile = ring_queries(&lattice);
        Ok(RingContext {
            product: ProductSplit::new(ring)?,
            amalgamation: AmalgamationParts::new(ring),
            lattice,
            profile,
        })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.lattice.ring()
    }
}

fn verdict_of(v: &Option<Verdict>) -> bool {
    v.as_ref().is_some_and(|v| v.holds)
}

/// Classify one ideal. Any fast criterion that disagrees with brute force
/// is reported as [`Error::Disagreement`].
pub fn classify_ideal(ctx: &RingContext, ideal: &Ideal) -> Result<ClassificationRecord> {
    let record = classify_ideal_unchecked(ctx, ideal)?;
    match record.disagreements().into_iter().next() {
        Some(name) => Err(Error::Disagreement {
            criterion: name.to_string(),
            ring: ctx.ring().label().to_string(),
            ideal: ideal.render(),
        }),
        None => Ok(record),
    }
}

/// Classify one ideal, recording fast verdicts without judging them.
pub fn classify_ideal_unchecked(ctx: &RingContext, ideal: &Ideal) -> Result<ClassificationRecord> {
    let is_proper = ideal.is_proper();
    let (sdf_v, weakly_v, prime_v, weakly_prime_v) = if is_proper {
        (
            Some(sdf::is_sdf_bruteforce(ideal)?),
            Some(sdf::is_weakly_sdf_bruteforce(ideal)?),
            Some(sdf::is_prime(ideal)?),
            Some(sdf::is_weakly_prime(ideal)?),
        )
    } else {
        (None, None, None, None)
    };
    let mut record = ClassificationRecord {
        ideal: ideal.clone(),
        is_proper,
        is_prime: verdict_of(&prime_v),
        is_maximal: is_proper && lattice::is_maximal(&ctx.lattice, ideal)?,
        is_radical: lattice::is_radical(ideal),
        is_sdf: verdict_of(&sdf_v),
        is_weakly_sdf: verdict_of(&weakly_v),
        is_weakly_prime: verdict_of(&weakly_prime_v),
        quotient_char: lattice::quotient_char(ideal),
        sdf: sdf_v,
        weakly_sdf: weakly_v,
        prime: prime_v,
        weakly_prime: weakly_prime_v,
        fast_verdicts: BTreeMap::new(),
    };
    if is_proper {
        record.fast_verdicts = fast_verdicts(ctx, &record)?;
    }
    Ok(record)
}

fn fast_verdicts(ctx: &RingContext, rec: &ClassificationRecord) -> Result<BTreeMap<String, Option<bool>>> {
    let ideal = &rec.ideal;
    let ring = ctx.ring();
    let profile = &ctx.profile;
    let mut out = BTreeMap::new();
    let mut put = |name: &str, v: Option<bool>| {
        out.insert(name.to_string(), v);
    };

    put("linear-system", Some(sdf::sdf_via_linear_system(ideal)?.holds));
    put("comaximal-decomposition", criteria::fast_sdf_comaximal(&ctx.lattice, ideal)?);
    put(
        "char-two-radical",
        (profile.characteristic == 2 && rec.is_radical).then_some(true),
    );
    put(
        "nonzero-needs-radical",
        (!ideal.is_zero() && !rec.is_radical).then_some(false),
    );
    put(
        "two-unit-prime",
        (profile.two == TwoKind::Unit && !ideal.is_zero()).then_some(rec.is_prime),
    );

    let modulus = match ring.construction() {
        Construction::Integers { modulus } => Some(*modulus),
        _ => None,
    };
    put(
        "zn-zero-closed-form",
        modulus.filter(|_| ideal.is_zero()).map(criteria::zero_ideal_zn_closed_form),
    );
    put(
        "zn-nil-closed-form",
        modulus
            .filter(|_| ideal.members() == profile.nilpotents.members())
            .map(|n| criteria::nil_zn_classification(n).sdf),
    );

    let (product, weakly_product) = match &ctx.product {
        Some(split) => {
            let (i1, i2) = split.split(ideal);
            (Some(criteria::product_sdf(&i1, &i2)?.1), criteria::weakly_sdf_fast(&i1, &i2)?)
        }
        None => (None, None),
    };
    put("product", product);
    put("weakly-product", weakly_product);

    let idealization = match ring.construction() {
        Construction::Idealization { .. } => match criteria::idealization_sdf(ideal)? {
            Some((IdealizationClause::ZeroZero, _)) | None => None,
            Some((_, v)) => Some(v),
        },
        _ => None,
    };
    put("idealization", idealization);
    put(
        "amalgamation",
        match &ctx.amalgamation {
            Some(_) => criteria::amalgamation_fast(ideal)?,
            None => None,
        },
    );
    put(
        "weakly-two-unit",
        (profile.two == TwoKind::Unit).then_some(rec.is_weakly_prime),
    );
    Ok(out)
}

/// A ring together with the classification of every ideal in lattice order.
#[derive(Debug)]
pub struct RingClassification {
    pub context: RingContext,
    pub records: Vec<ClassificationRecord>,
}

impl RingClassification {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.context.ring()
    }

    pub fn proper(&self) -> impl Iterator<Item = &ClassificationRecord> {
        self.records.iter().filter(|r| r.is_proper)
    }
}

/// Classify every ideal of a ring, fanning out across ideals.
pub fn classify_ring(ring: &Arc<FiniteRing>) -> Result<RingClassification> {
    let context = RingContext::new(ring)?;
    let records = context
        .lattice
        .ideals()
        .par_iter()
        .map(|i| classify_ideal(&context, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(RingClassification { context, records })
}

/// As [`classify_ring`], leaving disagreements in the records for the
/// caller to report.
pub fn classify_ring_unchecked(ring: &Arc<FiniteRing>) -> Result<RingClassification> {
    let context = RingContext::new(ring)?;
    let records = context
        .lattice
        .ideals()
        .par_iter()
        .map(|i| classify_ideal_unchecked(&context, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(RingClassification { context, records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_idealization, make_product, make_zn, ModuleSpec};

    fn zn(n: usize) -> Arc<FiniteRing> {
        Arc::new(make_zn(n).unwrap())
    }

    #[test]
    fn z12_classification() {
        let c = classify_ring(&zn(12)).unwrap();
        assert_eq!(c.records.len(), 6);
        let by_gen = |g: usize| {
            let m = Ideal::principal(c.ring(), g);
            c.records.iter().find(|r| r.ideal.members() == m.members()).unwrap()
        };
        assert!(by_gen(2).is_prime && by_gen(3).is_prime);
        assert!(by_gen(6).is_sdf && !by_gen(6).is_prime);
        assert!(!by_gen(4).is_radical && !by_gen(0).is_radical);
        assert!(c.records.iter().all(|r| r.hierarchy_holds()));
        assert_eq!(by_gen(6).fast_verdicts["comaximal-decomposition"], Some(true));
        assert_eq!(by_gen(4).fast_verdicts["comaximal-decomposition"], None);
    }

    #[test]
    fn fast_criteria_agree_on_mixed_rings() {
        let z4 = zn(4);
        let rings = vec![
            Arc::new(make_product(vec![z4.clone(), zn(6)]).unwrap()),
            Arc::new(make_product(vec![zn(2), zn(3), zn(4)]).unwrap()),
            Arc::new(make_idealization(&z4, &ModuleSpec::regular(&z4)).unwrap()),
        ];
        for r in rings {
            let c = classify_ring(&r).unwrap();
            assert!(c.proper().any(|rec| rec.fast_verdicts["product"].is_some()
                || rec.fast_verdicts["idealization"].is_some()));
        }
    }

    #[test]
    fn whole_ring_has_no_fast_verdicts() {
        let c = classify_ring(&zn(5)).unwrap();
        let whole = c.records.last().unwrap();
        assert!(!whole.is_proper && whole.fast_verdicts.is_empty() && !whole.is_sdf);
    }
}
