//! Dense-table representation of finite commutative rings with identity.
//!
//! Elements are indices `0..order`. Every construction fixes its own
//! encoding of those indices (see [`Construction`]), and the encoding is
//! stable so that fixtures and reports are reproducible:
//!
//! * `Z_n`: index `i` is the residue `i`.
//! * products: mixed radix with the *first* factor most significant, so
//!   index order is the lexicographic order of tuples.
//! * polynomial quotients `B[X]/(f)`: index `sum c_i * |B|^i`, i.e. the
//!   coefficient list read as base-`|B|` digits, constant term least
//!   significant.
//! * idealizations `R(+)M`: `(r, m)` has index `r * |M| + m`.
//! * amalgamations, quotients and localizations: members listed in
//!   ascending order of their parent encoding.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hom::RingHom;
use crate::ideal::Ideal;
use crate::limits;

pub type Elem = usize;

/// How a ring was built. Drives element rendering and lets the structural
/// criteria recover factors, base rings and modules.
#[derive(Debug, Clone)]
pub enum Construction {
    Integers {
        modulus: usize,
    },
    Product {
        factors: Vec<Arc<FiniteRing>>,
    },
    PolyQuotient {
        base: Arc<FiniteRing>,
        /// Monic modulus, coefficients low to high.
        modulus: Vec<Elem>,
    },
    Idealization {
        base: Arc<FiniteRing>,
        /// `R/J` viewed as a ring; the module is its additive group.
        module: Arc<FiniteRing>,
        /// `R -> R/J`, giving the scalar action.
        action: RingHom,
        quotient_by: Ideal,
    },
    Amalgamation {
        hom: RingHom,
        along: Ideal,
        pairs: Vec<(Elem, Elem)>,
    },
    Quotient {
        parent: Arc<FiniteRing>,
        by: Ideal,
        reps: Vec<Elem>,
    },
    Localization {
        parent: Arc<FiniteRing>,
        idempotent: Elem,
        members: Vec<Elem>,
    },
    Tables,
}

pub struct FiniteRing {
    order: usize,
    zero: Elem,
    one: Elem,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    label: String,
    construction: Construction,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

/// A violated ring law together with the elements exhibiting it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub law: &'static str,
    pub elements: Vec<Elem>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.elements)
    }
}

impl FiniteRing {
    /// Tabulate a ring from closures. Callers are constructions that are
    /// correct by construction; the axioms are not re-verified here.
    pub(crate) fn tabulate(
        label: String,
        construction: Construction,
        order: usize,
        zero: Elem,
        one: Elem,
        add: impl Fn(Elem, Elem) -> Elem,
        mul: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self> {
        limits::check_order(order)?;
        let mut add_t = Vec::with_capacity(order * order);
        let mut mul_t = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                add_t.push(add(a, b) as u32);
                mul_t.push(mul(a, b) as u32);
            }
        }
        Self::from_parts(label, construction, order, zero, one, add_t, mul_t)
    }

    fn from_parts(
        label: String,
        construction: Construction,
        order: usize,
        zero: Elem,
        one: Elem,
        add: Vec<u32>,
        mul: Vec<u32>,
    ) -> Result<Self> {
        if order < 2 {
            return Err(Error::construction("a ring with 1 != 0 has at least 2 elements"));
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::construction("operation tables must be order x order"));
        }
        if add.iter().chain(mul.iter()).any(|&x| x as usize >= order) {
            return Err(Error::construction("table entry out of range"));
        }
        if zero >= order || one >= order || zero == one {
            return Err(Error::construction("zero and one must be distinct elements"));
        }
        let mut neg = vec![u32::MAX; order];
        for a in 0..order {
            if let Some(b) = (0..order).find(|&b| add[a * order + b] as usize == zero) {
                neg[a] = b as u32;
            }
        }
        if neg.contains(&u32::MAX) {
            return Err(Error::construction("additive inverses are missing"));
        }
        Ok(FiniteRing {
            order,
            zero,
            one,
            add,
            mul,
            neg,
            label,
            construction,
        })
    }

    /// Build a ring from raw tables and verify every axiom.
    pub fn from_tables(
        label: impl Into<String>,
        zero: Elem,
        one: Elem,
        add: Vec<u32>,
        mul: Vec<u32>,
    ) -> Result<Self> {
        let order = (add.len() as f64).sqrt().round() as usize;
        limits::check_order(order)?;
        let ring = Self::from_parts(label.into(), Construction::Tables, order, zero, one, add, mul)?;
        ring.verify_axioms()
            .map_err(|v| Error::construction(format!("not a commutative ring: {v}")))?;
        Ok(ring)
    }

    /// Build from raw tables without checking the ring axioms. Only the
    /// table shapes and additive inverses are validated. Used for mutation
    /// testing of the axiom checks.
    pub fn from_tables_unchecked(
        label: impl Into<String>,
        zero: Elem,
        one: Elem,
        add: Vec<u32>,
        mul: Vec<u32>,
    ) -> Result<Self> {
        let order = (add.len() as f64).sqrt().round() as usize;
        Self::from_parts(label.into(), Construction::Tables, order, zero, one, add, mul)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    /// The element `1 + 1`.
    pub fn two(&self) -> Elem {
        self.add(self.one, self.one)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub(crate) fn set_label(&mut self, label: String) {
        self.label = label;
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Nonzero elements in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + '_ {
        let z = self.zero;
        (0..self.order).filter(move |&a| a != z)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `k * 1`, the image of the integer `k`.
    pub fn scalar(&self, k: i64) -> Elem {
        let c = self.characteristic() as i64;
        let k = k.rem_euclid(c) as usize;
        (0..k).fold(self.zero, |acc, _| self.add(acc, self.one))
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> usize {
        let mut x = self.one;
        let mut n = 1;
        while x != self.zero {
            x = self.add(x, self.one);
            n += 1;
        }
        n
    }

    pub fn elem(&self, index: Elem) -> Element<'_> {
        assert!(index < self.order, "element index {index} out of range");
        Element { ring: self, index }
    }

    /// Human-readable rendering in the construction's encoding.
    pub fn render(&self, a: Elem) -> String {
        match &self.construction {
            Construction::Integers { .. } | Construction::Tables => a.to_string(),
            Construction::Product { factors } => {
                let parts: Vec<String> = self
                    .product_digits(a)
                    .iter()
                    .zip(factors)
                    .map(|(&d, f)| f.render(d))
                    .collect();
                format!("({})", parts.join(","))
            }
            Construction::PolyQuotient { base, modulus } => {
                let q = base.order();
                let d = modulus.len() - 1;
                let mut rest = a;
                let mut parts = Vec::with_capacity(d);
                for _ in 0..d {
                    parts.push(base.render(rest % q));
                    rest /= q;
                }
                format!("[{}]", parts.join(","))
            }
            Construction::Idealization { base, module, .. } => {
                let m = module.order();
                format!("({},{})", base.render(a / m), module.render(a % m))
            }
            Construction::Amalgamation { hom, pairs, .. } => {
                let (x, y) = pairs[a];
                format!("({},{})", hom.source().render(x), hom.target().render(y))
            }
            Construction::Quotient { parent, reps, .. } => format!("{}+I", parent.render(reps[a])),
            Construction::Localization { parent, members, .. } => parent.render(members[a]),
        }
    }

    /// Mixed-radix digits of a product element, first factor first.
    pub fn product_digits(&self, a: Elem) -> Vec<Elem> {
        match &self.construction {
            Construction::Product { factors } => {
                let mut digits = vec![0; factors.len()];
                let mut rest = a;
                for (slot, f) in digits.iter_mut().zip(factors).rev() {
                    *slot = rest % f.order();
                    rest /= f.order();
                }
                digits
            }
            _ => vec![a],
        }
    }

    /// Inverse of [`product_digits`](Self::product_digits).
    pub fn product_index(&self, digits: &[Elem]) -> Elem {
        match &self.construction {
            Construction::Product { factors } => digits
                .iter()
                .zip(factors)
                .fold(0, |acc, (&d, f)| acc * f.order() + d),
            _ => digits[0],
        }
    }

    /// Check commutative-ring-with-identity axioms. Orders up to 64 are
    /// checked exhaustively; larger rings check all one- and two-variable
    /// laws exhaustively and three-variable laws on 10^4 seeded random
    /// triples.
    pub fn verify_axioms(&self) -> std::result::Result<(), AxiomViolation> {
        let n = self.order;
        let fail = |law, elements: Vec<Elem>| Err(AxiomViolation { law, elements });
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("additive identity", vec![a]);
            }
            if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                return fail("multiplicative identity", vec![a]);
            }
            if self.add(a, self.neg(a)) != self.zero {
                return fail("additive inverse", vec![a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", vec![a, b]);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", vec![a, b]);
                }
            }
        }
        let check = |a: Elem, b: Elem, c: Elem| -> std::result::Result<(), AxiomViolation> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail("additive associativity", vec![a, b, c]);
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail("multiplicative associativity", vec![a, b, c]);
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail("distributivity", vec![a, b, c]);
            }
            Ok(())
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5DFA);
            for _ in 0..10_000 {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Brute-force isomorphism test by matching generators. Intended for
    /// tests on small rings; the search is exponential in the number of
    /// additive generators.
    pub fn is_isomorphic(&self, other: &FiniteRing) -> bool {
        if self.order != other.order || self.characteristic() != other.characteristic() {
            return false;
        }
        let n = self.order;
        // Ring generators: pick greedily until the generated subring is everything.
        let mut gens: Vec<Elem> = Vec::new();
        let mut span = self.subring_generated(&gens);
        for a in 0..n {
            if !span[a] {
                gens.push(a);
                span = self.subring_generated(&gens);
            }
        }
        let mut images = vec![0; gens.len()];
        self.match_generators(other, &gens, 0, &mut images)
    }

    fn subring_generated(&self, gens: &[Elem]) -> Vec<bool> {
        let mut inside = vec![false; self.order];
        let mut frontier = vec![self.zero, self.one];
        frontier.extend_from_slice(gens);
        let mut members = Vec::new();
        for &g in &frontier {
            if !inside[g] {
                inside[g] = true;
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            let mut j = 0;
            while j <= i {
                let y = members[j];
                for z in [self.add(x, y), self.mul(x, y), self.neg(x)] {
                    if !inside[z] {
                        inside[z] = true;
                        members.push(z);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        inside
    }

    fn match_generators(&self, other: &FiniteRing, gens: &[Elem], k: usize, images: &mut Vec<Elem>) -> bool {
        if k == gens.len() {
            return self.extend_to_iso(other, gens, images).is_some();
        }
        for cand in 0..other.order {
            images[k] = cand;
            if self.match_generators(other, gens, k + 1, images) {
                return true;
            }
        }
        false
    }

    fn extend_to_iso(&self, other: &FiniteRing, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
        let n = self.order;
        let mut map = vec![usize::MAX; n];
        let mut members = Vec::new();
        let assign = |x: Elem, y: Elem, map: &mut Vec<Elem>, members: &mut Vec<Elem>| -> bool {
            if map[x] == usize::MAX {
                map[x] = y;
                members.push(x);
                true
            } else {
                map[x] == y
            }
        };
        if !assign(self.zero, other.zero, &mut map, &mut members)
            || !assign(self.one, other.one, &mut map, &mut members)
        {
            return None;
        }
        for (&g, &h) in gens.iter().zip(images) {
            if !assign(g, h, &mut map, &mut members) {
                return None;
            }
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for j in 0..=i {
                let y = members[j];
                let (fx, fy) = (map[x], map[y]);
                if !assign(self.add(x, y), other.add(fx, fy), &mut map, &mut members)
                    || !assign(self.mul(x, y), other.mul(fx, fy), &mut map, &mut members)
                {
                    return None;
                }
            }
            i += 1;
        }
        let mut seen = vec![false; n];
        for &y in &map {
            if y == usize::MAX || seen[y] {
                return None;
            }
            seen[y] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if map[self.add(a, b)] != other.add(map[a], map[b])
                    || map[self.mul(a, b)] != other.mul(map[a], map[b])
                {
                    return None;
                }
            }
        }
        Some(map)
    }
}

/// An element borrowed together with its ring, for arithmetic and display.
#[derive(Clone, Copy)]
pub struct Element<'r> {
    ring: &'r FiniteRing,
    index: Elem,
}

impl<'r> Element<'r> {
    pub fn index(&self) -> Elem {
        self.index
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.index == self.ring.zero
    }

    pub fn square(self) -> Self {
        self * self
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.ring, other.ring) && self.index == other.index
    }
}

impl Eq for Element<'_> {}

impl fmt::Debug for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.render(self.index))
    }
}

impl fmt::Display for Element<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.render(self.index))
    }
}

impl<'r> std::ops::Add for Element<'r> {
    type Output = Element<'r>;
    fn add(self, rhs: Self) -> Self {
        Element { ring: self.ring, index: self.ring.add(self.index, rhs.index) }
    }
}

impl<'r> std::ops::Sub for Element<'r> {
    type Output = Element<'r>;
    fn sub(self, rhs: Self) -> Self {
        Element { ring: self.ring, index: self.ring.sub(self.index, rhs.index) }
    }
}

impl<'r> std::ops::Mul for Element<'r> {
    type Output = Element<'r>;
    fn mul(self, rhs: Self) -> Self {
        Element { ring: self.ring, index: self.ring.mul(self.index, rhs.index) }
    }
}

impl<'r> std::ops::Neg for Element<'r> {
    type Output = Element<'r>;
    fn neg(self) -> Self {
        Element { ring: self.ring, index: self.ring.neg(self.index) }
    }
}
