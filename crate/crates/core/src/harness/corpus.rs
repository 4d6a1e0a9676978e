use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::dsl::parse_ring;
use crate::error::{Error, Result};
use crate::limits::order_cap;
use crate::ring::FiniteRing;

/// What goes into the ring corpus. Missing JSON fields take the defaults.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    /// `Z_2 .. Z_zn_max`.
    pub zn_max: usize,
    /// Factors of pairwise products have order at most this.
    pub pair_factor_max_order: usize,
    /// Factors of triple products have order at most this.
    pub triple_factor_max_order: usize,
    pub include_fields: bool,
    pub include_products: bool,
    pub include_poly_quotients: bool,
    pub include_idealizations: bool,
    pub include_amalgamations: bool,
    /// Seed for the sampled checks only; the ring list never depends on it.
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            zn_max: 120,
            pair_factor_max_order: 12,
            triple_factor_max_order: 5,
            include_fields: true,
            include_products: true,
            include_poly_quotients: true,
            include_idealizations: true,
            include_amalgamations: true,
            seed: 2024,
        }
    }
}

impl CorpusSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("corpus spec: {e}")))
    }
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub spec: CorpusSpec,
    pub rings: Vec<Arc<FiniteRing>>,
}

impl Corpus {
    /// A corpus of exactly these rings, used for replays and ad hoc runs.
    pub fn of(spec: CorpusSpec, rings: Vec<Arc<FiniteRing>>) -> Self {
        Corpus { spec, rings }
    }
}

const FIELDS: [&str; 3] = ["gf(2,[1,1,1])", "gf(2,[1,1,0,1])", "gf(3,[1,0,1])"];

const IDEALIZATIONS: [&str; 17] = [
    "idealize(zn(2);mod=0)",
    "idealize(zn(3);mod=0)",
    "idealize(zn(4);mod=0)",
    "idealize(zn(5);mod=0)",
    "idealize(zn(6);mod=0)",
    "idealize(zn(7);mod=0)",
    "idealize(zn(8);mod=0)",
    "idealize(zn(9);mod=0)",
    "idealize(gf(2,[1,1,1]);mod=0)",
    "idealize(prod(zn(2),zn(2));mod=0)",
    "idealize(polyq(2,[0,0,1]);mod=0)",
    "idealize(zn(4);mod=ideal(zn(4);gens=[2]))",
    "idealize(zn(8);mod=ideal(zn(8);gens=[4]))",
    "idealize(zn(8);mod=ideal(zn(8);gens=[2]))",
    "idealize(zn(9);mod=ideal(zn(9);gens=[3]))",
    "idealize(zn(6);mod=ideal(zn(6);gens=[2]))",
    "idealize(zn(6);mod=ideal(zn(6);gens=[3]))",
];

const AMALGAMATIONS: [&str; 11] = [
    "amalg(zn(4),zn(4),hom=id,j=[1])",
    "amalg(zn(4),zn(4),hom=id,j=[2])",
    "amalg(zn(8),zn(4),hom=canonical,j=[1])",
    "amalg(zn(8),zn(4),hom=canonical,j=[2])",
    "amalg(zn(9),zn(3),hom=canonical,j=[1])",
    "amalg(zn(6),zn(6),hom=id,j=[2])",
    "amalg(zn(6),zn(6),hom=id,j=[3])",
    "amalg(zn(12),zn(4),hom=canonical,j=[2])",
    "amalg(prod(zn(2),zn(3)),zn(3),hom=proj2,j=[1])",
    "amalg(gf(2,[1,1,1]),gf(2,[1,1,1]),hom=id,j=[1])",
    "amalg(zn(3),zn(3),hom=id,j=[1])",
];

const SPECIALS: [&str; 4] = [
    "prod(polyq(2,[0,0,1]),prod(zn(4),zn(4)))",
    "polyq(gf(2,[1,1,1]),[0,0,1])",
    "polyq(zn(4),[0,0,1])",
    "polyq(zn(9),[0,0,1])",
];

/// Monic polynomials of degree `d` over `Z_p`, coefficients low to high.
fn monic(p: usize, d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..p.pow(d as u32)).map(move |mut k| {
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push(k % p);
            k /= p;
        }
        c.push(1);
        c
    })
}

fn int_list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// The corpus as ring specs, in their final order.
pub fn corpus_specs(spec: &CorpusSpec) -> Vec<String> {
    let mut out: Vec<String> = (2..=spec.zn_max).map(|n| format!("zn({n})")).collect();
    if spec.include_fields {
        out.extend(FIELDS.iter().map(|s| s.to_string()));
    }
    if spec.include_poly_quotients {
        for (p, max_d) in [(2, 4), (3, 3), (5, 2)] {
            for d in 2..=max_d {
                out.extend(monic(p, d).map(|c| format!("polyq({p},{})", int_list(&c))));
            }
        }
    }
    if spec.include_products {
        let pool = |max: usize| -> Vec<(usize, String)> {
            let mut v: Vec<(usize, String)> = (2..=max).map(|n| (n, format!("zn({n})"))).collect();
            if spec.include_fields {
                for (q, f) in [4, 8, 9].into_iter().zip(FIELDS) {
                    if q <= max {
                        v.push((q, f.to_string()));
                    }
                }
            }
            v
        };
        let pairs = pool(spec.pair_factor_max_order);
        for i in 0..pairs.len() {
            for j in i..pairs.len() {
                out.push(format!("prod({},{})", pairs[i].1, pairs[j].1));
            }
        }
        let triples = pool(spec.triple_factor_max_order);
        for i in 0..triples.len() {
            for j in i..triples.len() {
                for k in j..triples.len() {
                    out.push(format!("prod({},{},{})", triples[i].1, triples[j].1, triples[k].1));
                }
            }
        }
    }
    if spec.include_idealizations {
        out.extend(IDEALIZATIONS.iter().map(|s| s.to_string()));
    }
    if spec.include_amalgamations {
        out.extend(AMALGAMATIONS.iter().map(|s| s.to_string()));
    }
    if spec.include_products && spec.include_poly_quotients {
        out.extend(SPECIALS.iter().map(|s| s.to_string()));
    }
    let mut seen = HashSet::new();
    out.retain(|s| seen.insert(s.clone()));
    out
}

/// Build every ring of the corpus. Rings above the order cap are a
/// resource error rather than being skipped silently.
pub fn build_corpus(spec: &CorpusSpec) -> Result<Corpus> {
    let specs = corpus_specs(spec);
    let rings = specs
        .iter()
        .map(|s| parse_ring(s))
        .collect::<Result<Vec<_>>>()?;
    debug_assert!(rings.iter().all(|r| r.order() <= order_cap()));
    Ok(Corpus { spec: spec.clone(), rings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_contents() {
        let c = build_corpus(&CorpusSpec::default()).unwrap();
        let labels: HashSet<&str> = c.rings.iter().map(|r| r.label()).collect();
        for want in [
            "zn(4)",
            "zn(9)",
            "prod(zn(3),zn(3))",
            "prod(gf(2,[1,1,1]),gf(2,[1,1,1]))",
            "idealize(zn(3);mod=0)",
            "prod(zn(3),zn(3),zn(3))",
        ] {
            assert!(labels.contains(want), "{want} missing");
        }
        assert!(c.rings.len() >= 300, "only {} rings", c.rings.len());
        assert_eq!(labels.len(), c.rings.len());
    }

    #[test]
    fn small_zn_max() {
        let spec = CorpusSpec { zn_max: 6, ..CorpusSpec::default() };
        let specs = corpus_specs(&spec);
        assert_eq!(&specs[..5], &["zn(2)", "zn(3)", "zn(4)", "zn(5)", "zn(6)"]);
    }

    #[test]
    fn seed_does_not_change_the_rings() {
        let a = corpus_specs(&CorpusSpec::default());
        let b = corpus_specs(&CorpusSpec { seed: 7, ..CorpusSpec::default() });
        assert_eq!(a, b);
    }

    #[test]
    fn malformed_spec_is_an_input_error() {
        assert!(matches!(CorpusSpec::from_json("{\"zn_max\": \"x\"}"), Err(Error::Input(_))));
        assert!(matches!(CorpusSpec::from_json("{\"bogus\": 1}"), Err(Error::Input(_))));
        assert_eq!(CorpusSpec::from_json("{}").unwrap(), CorpusSpec::default());
    }
}
