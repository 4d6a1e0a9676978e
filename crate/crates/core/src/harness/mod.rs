//! Named, individually reportable checks of the structural theorems over a
//! generated ring corpus.

pub mod corpus;
pub mod poly;
pub mod properties;

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_ring_unchecked, RingClassification};
use crate::dsl::parse_ring;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{Elem, FiniteRing};

pub use corpus::{build_corpus, Corpus, CorpusSpec};
pub use properties::{registry, PropertyDef};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub ring: String,
    /// Members in the ring's own encoding, sorted by index; absent when the
    /// failure is not about an ideal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<(String, String)>,
    /// Raw indices of the same ideal and witness; kept out of reports
    /// unless raw output is requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal_indices: Option<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_indices: Option<(Elem, Elem)>,
    pub detail: String,
}

impl Counterexample {
    /// A failure not tied to a ring of the corpus, such as an integer check.
    pub fn note(ring: impl Into<String>, detail: impl Into<String>) -> Self {
        Counterexample {
            ring: ring.into(),
            ideal: None,
            witness: None,
            ideal_indices: None,
            witness_indices: None,
            detail: detail.into(),
        }
    }

    pub fn strip_indices(&mut self) {
        self.ideal_indices = None;
        self.witness_indices = None;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub property_id: String,
    pub status: Status,
    pub checked_instances: usize,
    pub counterexample: Option<Counterexample>,
    /// Random sampling: a pass is evidence, not a proof.
    pub sampled: bool,
}

/// Instance counter that keeps the first counterexample.
#[derive(Debug, Default)]
pub struct Tally {
    checked: usize,
    counterexample: Option<Counterexample>,
}

impl Tally {
    pub fn new() -> Self {
        Tally::default()
    }

    pub fn check(&mut self, ok: bool, cx: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(cx());
        }
    }

    pub fn add_checked(&mut self, n: usize) {
        self.checked += n;
    }

    pub fn fail(&mut self, cx: Counterexample) {
        if self.counterexample.is_none() {
            self.counterexample = Some(cx);
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }

    fn finish(self, id: &str, sampled: bool) -> PropertyResult {
        let status = match (&self.counterexample, self.checked) {
            (Some(_), _) => Status::Fail,
            (None, 0) => Status::Inapplicable,
            (None, _) => Status::Pass,
        };
        PropertyResult {
            property_id: id.to_string(),
            status,
            checked_instances: self.checked,
            counterexample: self.counterexample,
            sampled,
        }
    }
}

/// Counterexample about an ideal, with an optional witness pair.
pub fn ideal_cx(ideal: &Ideal, witness: Option<(Elem, Elem)>, detail: impl Into<String>) -> Counterexample {
    let r = ideal.ring();
    let members = ideal.elements();
    Counterexample {
        ring: r.label().to_string(),
        ideal: Some(members.iter().map(|&a| r.render(a)).collect()),
        witness: witness.map(|(a, b)| (r.render(a), r.render(b))),
        ideal_indices: Some(members),
        witness_indices: witness,
        detail: detail.into(),
    }
}

pub fn ring_cx(ring: &FiniteRing, detail: impl Into<String>) -> Counterexample {
    Counterexample::note(ring.label(), detail)
}

/// One corpus ring and what could be computed about it.
#[derive(Debug)]
pub struct RingEntry {
    pub ring: Arc<FiniteRing>,
    pub axiom_violation: Option<String>,
    /// Absent when the axioms fail or the lattice exceeds its cap.
    pub classification: Option<RingClassification>,
    pub error: Option<Error>,
}

/// A corpus with its classification computed once, on first use.
#[derive(Debug)]
pub struct Harness {
    pub corpus: Corpus,
    entries: OnceLock<Vec<RingEntry>>,
}

impl Harness {
    pub fn new(corpus: Corpus) -> Self {
        Harness { corpus, entries: OnceLock::new() }
    }

    pub fn spec(&self) -> &CorpusSpec {
        &self.corpus.spec
    }

    pub fn entries(&self) -> &[RingEntry] {
        self.entries.get_or_init(|| {
            self.corpus
                .rings
                .par_iter()
                .map(|ring| {
                    if let Err(v) = ring.verify_axioms() {
                        return RingEntry {
                            ring: ring.clone(),
                            axiom_violation: Some(v.to_string()),
                            classification: None,
                            error: None,
                        };
                    }
                    let (classification, error) = match classify_ring_unchecked(ring) {
                        Ok(c) => (Some(c), None),
                        Err(e) => (None, Some(e)),
                    };
                    RingEntry { ring: ring.clone(), axiom_violation: None, classification, error }
                })
                .collect()
        })
    }

    /// Classified rings whose axioms hold.
    pub fn classified(&self) -> impl Iterator<Item = &RingClassification> {
        self.entries().iter().filter_map(|e| e.classification.as_ref())
    }

    /// Classified rings of order at most `max`.
    pub fn classified_up_to(&self, max: usize) -> impl Iterator<Item = &RingClassification> {
        self.classified().filter(move |c| c.ring().order() <= max)
    }

    pub fn run_property(&self, id: &str) -> Result<PropertyResult> {
        let def = registry()
            .iter()
            .find(|p| p.id == id)
            .ok_or_else(|| Error::UnknownProperty(id.to_string()))?;
        Ok(self.run_def(def))
    }

    fn run_def(&self, def: &PropertyDef) -> PropertyResult {
        (def.run)(self).finish(def.id, def.sampled)
    }

    /// Every registered property, in registry order.
    pub fn run_all(&self) -> Vec<PropertyResult> {
        self.entries();
        registry().par_iter().map(|d| self.run_def(d)).collect()
    }

    /// Selected properties in the order given; unknown ids are an error.
    pub fn run_only(&self, ids: &[String]) -> Result<Vec<PropertyResult>> {
        for id in ids {
            if !registry().iter().any(|p| p.id == id) {
                return Err(Error::UnknownProperty(id.clone()));
            }
        }
        Ok(ids.par_iter().map(|id| self.run_property(id).expect("checked above")).collect())
    }

    /// Re-run a failed property on the counterexample's ring alone and report
    /// whether it fails again. The ring is taken from this corpus when a
    /// ring with that label is present, otherwise rebuilt from the label.
    pub fn replay(&self, result: &PropertyResult) -> Result<bool> {
        let Some(cx) = &result.counterexample else {
            return Ok(false);
        };
        let ring = match self.corpus.rings.iter().find(|r| r.label() == cx.ring) {
            Some(r) => r.clone(),
            None => parse_ring(&cx.ring)?,
        };
        let single = Harness::new(Corpus::of(self.corpus.spec.clone(), vec![ring]));
        Ok(single.run_property(&result.property_id)?.status == Status::Fail)
    }
}

/// All properties passed (inapplicable ones do not count against).
pub fn all_passed(results: &[PropertyResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}
