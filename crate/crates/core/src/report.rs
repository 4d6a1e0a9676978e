//! Report documents for classification and verification runs, with JSON,
//! CSV and text encodings.
//!
//! JSON is canonical: it goes through `serde_json::Value`, whose maps are
//! ordered by key, so the same document always serializes to the same bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::{ClassificationRecord, RingClassification};
use crate::error::{Error, Result};
use crate::harness::{CorpusSpec, PropertyResult, Status};
use crate::queries::TwoKind;
use crate::ring::{Elem, FiniteRing};
use crate::verdict::Verdict;

pub const FORMAT_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingInfo {
    pub label: String,
    pub order: usize,
    pub characteristic: usize,
    pub reduced: bool,
    pub von_neumann_regular: bool,
    pub boolean: bool,
    pub local: bool,
    pub field: bool,
    pub two: TwoKind,
}

/// A failing pair in the ring's encoding, with raw indices on request.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub a: String,
    pub b: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_index: Option<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_index: Option<Elem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FastVerdict {
    True,
    False,
    Inapplicable,
}

impl From<Option<bool>> for FastVerdict {
    fn from(v: Option<bool>) -> Self {
        match v {
            Some(true) => FastVerdict::True,
            Some(false) => FastVerdict::False,
            None => FastVerdict::Inapplicable,
        }
    }
}

impl FastVerdict {
    pub fn tag(self) -> &'static str {
        match self {
            FastVerdict::True => "true",
            FastVerdict::False => "false",
            FastVerdict::Inapplicable => "inapplicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    pub generators: Vec<String>,
    pub members: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub member_indices: Option<Vec<Elem>>,
    pub size: usize,
    pub proper: bool,
    pub prime: bool,
    pub maximal: bool,
    pub radical: bool,
    pub sdf: bool,
    pub weakly_sdf: bool,
    pub weakly_prime: bool,
    pub quotient_char: usize,
    /// Failure pairs for the negative verdicts, keyed by property.
    pub witnesses: BTreeMap<String, WitnessReport>,
    pub fast_criteria: BTreeMap<String, FastVerdict>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub inapplicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusInfo {
    pub spec: CorpusSpec,
    pub rings: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format_version: u32,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingInfo>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<IdealReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corpus: Option<CorpusInfo>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub properties: Vec<PropertyResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
}

fn witness(ring: &FiniteRing, v: &Option<Verdict>, raw: bool) -> Option<WitnessReport> {
    let (a, b) = v.as_ref()?.witness?;
    Some(WitnessReport {
        a: ring.render(a),
        b: ring.render(b),
        a_index: raw.then_some(a),
        b_index: raw.then_some(b),
    })
}

pub fn ideal_report(rec: &ClassificationRecord, raw: bool) -> IdealReport {
    let ring = rec.ideal.ring();
    let members = rec.ideal.elements();
    let mut witnesses = BTreeMap::new();
    for (name, v) in [
        ("sdf", &rec.sdf),
        ("weakly-sdf", &rec.weakly_sdf),
        ("prime", &rec.prime),
        ("weakly-prime", &rec.weakly_prime),
    ] {
        if let Some(w) = witness(ring, v, raw) {
            witnesses.insert(name.to_string(), w);
        }
    }
    IdealReport {
        generators: rec.ideal.generators().iter().map(|&g| ring.render(g)).collect(),
        members: members.iter().map(|&a| ring.render(a)).collect(),
        member_indices: raw.then(|| members.clone()),
        size: members.len(),
        proper: rec.is_proper,
        prime: rec.is_prime,
        maximal: rec.is_maximal,
        radical: rec.is_radical,
        sdf: rec.is_sdf,
        weakly_sdf: rec.is_weakly_sdf,
        weakly_prime: rec.is_weakly_prime,
        quotient_char: rec.quotient_char,
        witnesses,
        fast_criteria: rec.fast_verdicts.iter().map(|(k, &v)| (k.clone(), v.into())).collect(),
    }
}

impl ReportDocument {
    fn empty() -> Self {
        ReportDocument {
            format_version: FORMAT_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            ring: None,
            ideals: Vec::new(),
            corpus: None,
            properties: Vec::new(),
            summary: None,
        }
    }

    /// Every ideal of the ring, in lattice order (by size, then members).
    pub fn classification(c: &RingClassification, raw: bool) -> Self {
        let p = &c.context.profile;
        let ring = c.ring();
        ReportDocument {
            ring: Some(RingInfo {
                label: ring.label().to_string(),
                order: ring.order(),
                characteristic: p.characteristic,
                reduced: p.is_reduced,
                von_neumann_regular: p.is_von_neumann_regular,
                boolean: p.is_boolean,
                local: p.is_local,
                field: p.is_field,
                two: p.two,
            }),
            ideals: c.records.iter().map(|r| ideal_report(r, raw)).collect(),
            ..ReportDocument::empty()
        }
    }

    pub fn verification(spec: &CorpusSpec, rings: usize, mut results: Vec<PropertyResult>, raw: bool) -> Self {
        if !raw {
            for r in &mut results {
                if let Some(cx) = &mut r.counterexample {
                    cx.strip_indices();
                }
            }
        }
        let count = |s: Status| results.iter().filter(|r| r.status == s).count();
        let summary = Summary {
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            inapplicable: count(Status::Inapplicable),
        };
        ReportDocument {
            corpus: Some(CorpusInfo { spec: spec.clone(), rings }),
            properties: results,
            summary: Some(summary),
            ..ReportDocument::empty()
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let value = serde_json::to_value(self).map_err(|e| Error::Input(format!("report: {e}")))?;
        let mut s = serde_json::to_string_pretty(&value).map_err(|e| Error::Input(format!("report: {e}")))?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ReportDocument = serde_json::from_str(text).map_err(|e| Error::Input(format!("report: {e}")))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::Input(format!("unsupported report format_version {}", doc.format_version)));
        }
        Ok(doc)
    }

    /// One row per ideal, or one row per property for verification reports.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Input(format!("csv: {e}"));
        if self.properties.is_empty() {
            let criteria: Vec<&String> = self
                .ideals
                .iter()
                .flat_map(|i| i.fast_criteria.keys())
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            let mut header: Vec<String> = [
                "ring", "generators", "size", "proper", "prime", "maximal", "radical", "sdf", "weakly_sdf",
                "weakly_prime", "quotient_char", "sdf_witness",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect();
            header.extend(criteria.iter().map(|c| format!("fast:{c}")));
            w.write_record(&header).map_err(io)?;
            let label = self.ring.as_ref().map(|r| r.label.as_str()).unwrap_or("");
            for i in &self.ideals {
                let mut row = vec![
                    label.to_string(),
                    format!("[{}]", i.generators.join(",")),
                    i.size.to_string(),
                    i.proper.to_string(),
                    i.prime.to_string(),
                    i.maximal.to_string(),
                    i.radical.to_string(),
                    i.sdf.to_string(),
                    i.weakly_sdf.to_string(),
                    i.weakly_prime.to_string(),
                    i.quotient_char.to_string(),
                    i.witnesses.get("sdf").map(|w| format!("{};{}", w.a, w.b)).unwrap_or_default(),
                ];
                row.extend(criteria.iter().map(|c| {
                    i.fast_criteria.get(*c).copied().unwrap_or(FastVerdict::Inapplicable).tag().to_string()
                }));
                w.write_record(&row).map_err(io)?;
            }
        } else {
            w.write_record(["property_id", "status", "checked_instances", "sampled", "counterexample"]).map_err(io)?;
            for p in &self.properties {
                let cx = p
                    .counterexample
                    .as_ref()
                    .map(|c| format!("{}: {}", c.ring, c.detail))
                    .unwrap_or_default();
                w.write_record([
                    p.property_id.clone(),
                    status_tag(p.status).to_string(),
                    p.checked_instances.to_string(),
                    p.sampled.to_string(),
                    cx,
                ])
                .map_err(io)?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Input(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(r) = &self.ring {
            out.push_str(&format!(
                "{}  order {}  char {}  reduced {}  vNr {}  boolean {}  local {}  field {}  2 is {}\n",
                r.label,
                r.order,
                r.characteristic,
                r.reduced,
                r.von_neumann_regular,
                r.boolean,
                r.local,
                r.field,
                two_tag(r.two)
            ));
            for i in &self.ideals {
                let gens = format!("({})", i.generators.join(", "));
                if !i.proper {
                    out.push_str(&format!("  {gens:<24} whole ring\n"));
                    continue;
                }
                let flag = |b: bool, s: &str| if b { s.to_string() } else { format!("!{s}") };
                out.push_str(&format!(
                    "  {gens:<24} size {:<5} {} {} {} {} {} {}  R/I char {}",
                    i.size,
                    flag(i.prime, "prime"),
                    flag(i.maximal, "maximal"),
                    flag(i.radical, "radical"),
                    flag(i.sdf, "sdf"),
                    flag(i.weakly_sdf, "weakly-sdf"),
                    flag(i.weakly_prime, "weakly-prime"),
                    i.quotient_char
                ));
                if let Some(w) = i.witnesses.get("sdf") {
                    out.push_str(&format!("  sdf fails at a={}, b={}", w.a, w.b));
                }
                out.push('\n');
                let (decided, inapplicable): (Vec<_>, Vec<_>) =
                    i.fast_criteria.iter().partition(|(_, v)| **v != FastVerdict::Inapplicable);
                if !decided.is_empty() {
                    let parts: Vec<String> = decided.iter().map(|(k, v)| format!("{k}={}", v.tag())).collect();
                    out.push_str(&format!("      criteria: {}\n", parts.join(" ")));
                }
                if !inapplicable.is_empty() {
                    let names: Vec<&str> = inapplicable.iter().map(|(k, _)| k.as_str()).collect();
                    out.push_str(&format!("      criterion inapplicable: {}\n", names.join(" ")));
                }
            }
        }
        if let Some(c) = &self.corpus {
            out.push_str(&format!("corpus: {} rings, zn_max {}, seed {}\n", c.rings, c.spec.zn_max, c.spec.seed));
        }
        for p in &self.properties {
            let sampled = if p.sampled { " (sampled)" } else { "" };
            out.push_str(&format!(
                "{:<13} {:<40} {:>7} instances{sampled}\n",
                status_tag(p.status).to_uppercase(),
                p.property_id,
                p.checked_instances
            ));
            if let Some(cx) = &p.counterexample {
                out.push_str(&format!("    counterexample in {}: {}\n", cx.ring, cx.detail));
                if let Some(m) = &cx.ideal {
                    out.push_str(&format!("    ideal {{{}}}\n", m.join(", ")));
                }
                if let Some((a, b)) = &cx.witness {
                    out.push_str(&format!("    witness a={a}, b={b}\n"));
                }
            }
        }
        if let Some(s) = &self.summary {
            out.push_str(&format!("{} passed, {} failed, {} inapplicable\n", s.passed, s.failed, s.inapplicable));
        }
        out
    }
}

fn status_tag(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Inapplicable => "inapplicable",
    }
}

fn two_tag(t: TwoKind) -> &'static str {
    match t {
        TwoKind::Zero => "zero",
        TwoKind::Unit => "a unit",
        TwoKind::NonzeroZeroDivisor => "a nonzero zero-divisor",
    }
}
