use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::hom::RingHom;
use crate::ring::{Elem, FiniteRing};

/// An ideal stored as a membership bitset over the ring's elements.
///
/// Equality compares the owning ring by pointer and then the member sets;
/// generators are bookkeeping only.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    members: FixedBitSet,
    generators: Vec<Elem>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.members == other.members
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Ideal {
    pub fn zero(ring: &Arc<FiniteRing>) -> Self {
        let mut members = FixedBitSet::with_capacity(ring.order());
        members.insert(ring.zero());
        Ideal { ring: ring.clone(), members, generators: Vec::new() }
    }

    pub fn whole(ring: &Arc<FiniteRing>) -> Self {
        let mut members = FixedBitSet::with_capacity(ring.order());
        members.insert_range(..);
        Ideal { ring: ring.clone(), members, generators: vec![ring.one()] }
    }

    /// `(a) = {r a : r in R}`; already closed under addition since `R` has a 1.
    pub fn principal(ring: &Arc<FiniteRing>, a: Elem) -> Self {
        let mut members = FixedBitSet::with_capacity(ring.order());
        for r in ring.elements() {
            members.insert(ring.mul(r, a));
        }
        let generators = if a == ring.zero() { Vec::new() } else { vec![a] };
        Ideal { ring: ring.clone(), members, generators }
    }

    /// Smallest ideal containing `gens`.
    pub fn generated(ring: &Arc<FiniteRing>, gens: &[Elem]) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&g| g >= ring.order()) {
            return Err(Error::input(format!("element index {bad} is outside {}", ring.label())));
        }
        let mut ideal = Ideal::zero(ring);
        for &g in gens {
            if !ideal.contains(g) {
                ideal = ideal.sum(&Ideal::principal(ring, g));
            }
        }
        ideal.generators = gens.iter().copied().filter(|&g| g != ring.zero()).collect();
        Ok(ideal)
    }

    /// Wrap an explicit member set after checking the ideal axioms.
    pub fn from_members(ring: &Arc<FiniteRing>, members: FixedBitSet) -> Result<Self> {
        let ideal = Ideal { ring: ring.clone(), members, generators: Vec::new() };
        if ideal.members.len() != ring.order() || !ideal.is_ideal_set() {
            return Err(Error::domain("member set is not an ideal"));
        }
        Ok(ideal.with_minimal_generators())
    }

    pub(crate) fn from_members_unchecked(ring: &Arc<FiniteRing>, members: FixedBitSet) -> Self {
        Ideal { ring: ring.clone(), members, generators: Vec::new() }
    }

    fn is_ideal_set(&self) -> bool {
        let r = &self.ring;
        if !self.contains(r.zero()) {
            return false;
        }
        let elems = self.elements();
        elems.iter().all(|&a| {
            self.contains(r.neg(a))
                && elems.iter().all(|&b| self.contains(r.add(a, b)))
                && r.elements().all(|x| self.contains(r.mul(x, a)))
        })
    }

    /// Replace the generator list with a greedy generating set (ascending
    /// element order).
    pub(crate) fn with_minimal_generators(mut self) -> Self {
        let mut span = Ideal::zero(&self.ring);
        let mut gens = Vec::new();
        for a in self.members.ones() {
            if !span.contains(a) {
                span = span.sum(&Ideal::principal(&self.ring, a));
                gens.push(a);
            }
        }
        self.generators = gens;
        self
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    /// Members in ascending index order.
    pub fn elements(&self) -> Vec<Elem> {
        self.members.ones().collect()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(self.ring.one())
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// `I + J`, built as a union of cosets of `I`.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        let r = &self.ring;
        let mut members = self.members.clone();
        let base = self.elements();
        for x in other.members.ones() {
            if !members.contains(x) {
                for &i in &base {
                    members.insert(r.add(x, i));
                }
            }
        }
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().copied().filter(|g| !self.contains(*g)));
        Ideal { ring: r.clone(), members, generators }
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ideal::from_members_unchecked(&self.ring, members).with_minimal_generators()
    }

    /// `IJ`, generated by all products `ij`.
    pub fn product(&self, other: &Ideal) -> Ideal {
        let r = &self.ring;
        let mut acc = Ideal::zero(r);
        for i in self.members.ones() {
            for j in other.members.ones() {
                let p = r.mul(i, j);
                if !acc.contains(p) {
                    acc = acc.sum(&Ideal::principal(r, p));
                }
            }
        }
        acc.with_minimal_generators()
    }

    /// Rendered member list, e.g. `{0,4,8}`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.members.ones().map(|a| self.ring.render(a)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Rendered generator list in DSL literal form, e.g. `[(0,2)]`.
    pub fn render_generators(&self) -> String {
        let parts: Vec<String> = self.generators.iter().map(|&a| self.ring.render(a)).collect();
        format!("[{}]", parts.join(","))
    }

    /// Deterministic lattice order: size, then lexicographic member list.
    pub fn lattice_cmp(&self, other: &Ideal) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

/// `f^{-1}(J)`; always an ideal.
pub fn hom_preimage_ideal(f: &RingHom, j: &Ideal) -> Ideal {
    let src = f.source();
    let mut members = FixedBitSet::with_capacity(src.order());
    for a in src.elements() {
        if j.contains(f.apply(a)) {
            members.insert(a);
        }
    }
    Ideal::from_members_unchecked(src, members).with_minimal_generators()
}

/// `f(I)` for surjective `f`. The result is an ideal whenever `f` is
/// surjective; `ker(f) ⊆ I` is what makes the correspondence bijective.
pub fn hom_image_ideal(f: &RingHom, i: &Ideal) -> Result<Ideal> {
    if !f.is_surjective() {
        return Err(Error::domain(format!(
            "image ideal requested along non-surjective hom `{}`",
            f.name()
        )));
    }
    let tgt = f.target();
    let mut members = FixedBitSet::with_capacity(tgt.order());
    for a in i.members.ones() {
        members.insert(f.apply(a));
    }
    let image = Ideal::from_members_unchecked(tgt, members).with_minimal_generators();
    debug_assert!(image.is_ideal_set());
    Ok(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_poly_quotient, make_product, make_zn};

    fn zn(n: usize) -> Arc<FiniteRing> {
        Arc::new(make_zn(n).unwrap())
    }

    #[test]
    fn generated_by_four_in_z12() {
        let r = zn(12);
        assert_eq!(Ideal::generated(&r, &[4]).unwrap().elements(), vec![0, 4, 8]);
    }

    #[test]
    fn generated_by_nothing_is_zero() {
        let r = zn(9);
        let i = Ideal::generated(&r, &[]).unwrap();
        assert!(i.is_zero());
        assert!(i.generators().is_empty());
    }

    #[test]
    fn generated_in_product_matches_closure_oracle() {
        let r = Arc::new(make_product(vec![zn(4), zn(4)]).unwrap());
        let g = r.product_index(&[2, 0]);
        let i = Ideal::generated(&r, &[g]).unwrap();
        // Closure oracle: repeatedly add r*x and x+y until stable.
        let mut set = std::collections::BTreeSet::from([r.zero(), g]);
        loop {
            let mut next = set.clone();
            for &x in &set {
                for y in r.elements() {
                    next.insert(r.mul(y, x));
                }
                for &y in &set {
                    next.insert(r.add(x, y));
                }
            }
            if next == set {
                break;
            }
            set = next;
        }
        assert_eq!(i.elements(), set.into_iter().collect::<Vec<_>>());
        assert_eq!(i.render(), "{(0,0),(2,0)}");
    }

    #[test]
    fn sums_intersections_products_in_z12() {
        let r = zn(12);
        let a = Ideal::generated(&r, &[4]).unwrap();
        let b = Ideal::generated(&r, &[6]).unwrap();
        assert_eq!(a.sum(&b).elements(), vec![0, 2, 4, 6, 8, 10]);
        assert!(a.intersection(&b).is_zero());
        let two = Ideal::generated(&r, &[2]).unwrap();
        assert_eq!(two.product(&two).elements(), vec![0, 4, 8]);
    }

    #[test]
    fn from_members_rejects_non_ideal() {
        let r = Arc::new(make_product(vec![zn(2), zn(2)]).unwrap());
        let mut diag = FixedBitSet::with_capacity(4);
        diag.insert(0);
        diag.insert(3);
        assert!(Ideal::from_members(&r, diag).is_err());
    }

    #[test]
    fn preimage_and_image_along_reduction() {
        let z12 = zn(12);
        let z4 = zn(4);
        let f = RingHom::canonical(&z12, &z4).unwrap();
        assert_eq!(hom_preimage_ideal(&f, &Ideal::zero(&z4)).elements(), vec![0, 4, 8]);
        let two = Ideal::generated(&z12, &[2]).unwrap();
        assert_eq!(hom_image_ideal(&f, &two).unwrap().elements(), vec![0, 2]);
    }

    #[test]
    fn image_needs_surjective_hom() {
        let z2 = zn(2);
        let f4 = Arc::new(make_poly_quotient(2, &[1, 1, 1]).unwrap());
        let inc = RingHom::canonical(&z2, &f4).unwrap();
        assert!(hom_preimage_ideal(&inc, &Ideal::zero(&f4)).is_zero());
        assert!(matches!(hom_image_ideal(&inc, &Ideal::zero(&z2)), Err(Error::Domain(_))));
    }
}
