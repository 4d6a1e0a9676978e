use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{Construction, Elem, FiniteRing};

/// A unital ring homomorphism stored as an index table.
#[derive(Clone)]
pub struct RingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    map: Vec<Elem>,
    name: String,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, self.source.label(), self.target.label())
    }
}

impl RingHom {
    /// Validate `map` exhaustively against the hom axioms.
    pub fn new(
        source: Arc<FiniteRing>,
        target: Arc<FiniteRing>,
        map: Vec<Elem>,
        name: impl Into<String>,
    ) -> Result<Self> {
        let name = name.into();
        if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::construction(format!("hom `{name}`: table has wrong shape")));
        }
        if map[source.one()] != target.one() {
            return Err(Error::construction(format!("hom `{name}` does not send 1 to 1")));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.add(a, b)] != target.add(map[a], map[b]) {
                    return Err(Error::construction(format!(
                        "hom `{name}` is not additive at ({a},{b})"
                    )));
                }
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::construction(format!(
                        "hom `{name}` is not multiplicative at ({a},{b})"
                    )));
                }
            }
        }
        Ok(RingHom { source, target, map, name })
    }

    /// Skip validation; for maps that are homs by construction.
    pub(crate) fn trusted(
        source: Arc<FiniteRing>,
        target: Arc<FiniteRing>,
        map: Vec<Elem>,
        name: impl Into<String>,
    ) -> Self {
        debug_assert_eq!(map.len(), source.order());
        RingHom { source, target, map, name: name.into() }
    }

    pub fn identity(ring: &Arc<FiniteRing>) -> Self {
        RingHom::trusted(ring.clone(), ring.clone(), ring.elements().collect(), "id")
    }

    /// The unique hom out of `Z_m`, `k -> k * 1`.
    pub fn canonical(source: &Arc<FiniteRing>, target: &Arc<FiniteRing>) -> Result<Self> {
        let Construction::Integers { .. } = source.construction() else {
            return Err(Error::construction("canonical hom needs a source of the form zn(m)"));
        };
        let mut map = Vec::with_capacity(source.order());
        let mut acc = target.zero();
        for _ in source.elements() {
            map.push(acc);
            acc = target.add(acc, target.one());
        }
        RingHom::new(source.clone(), target.clone(), map, "canonical")
    }

    /// Projection of a product onto factor `k` (0-based).
    pub fn projection(product: &Arc<FiniteRing>, k: usize) -> Result<Self> {
        let Construction::Product { factors } = product.construction() else {
            return Err(Error::construction("projection needs a product ring"));
        };
        let factor = factors
            .get(k)
            .ok_or_else(|| Error::construction(format!("product has no factor {}", k + 1)))?
            .clone();
        let map = product.elements().map(|a| product.product_digits(a)[k]).collect();
        Ok(RingHom::trusted(product.clone(), factor, map, format!("proj{}", k + 1)))
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn table(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn kernel(&self) -> crate::ideal::Ideal {
        crate::ideal::hom_preimage_ideal(self, &crate::ideal::Ideal::zero(&self.target))
    }
}
