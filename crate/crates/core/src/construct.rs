//! Ring constructions: `Z_n`, products, polynomial quotients, idealizations,
//! amalgamations, quotients and localizations.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::hom::RingHom;
use crate::ideal::Ideal;
use crate::limits;
use crate::ring::{Construction, Elem, FiniteRing};

pub fn make_zn(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    FiniteRing::tabulate(
        format!("zn({n})"),
        Construction::Integers { modulus: n },
        n,
        0,
        1,
        |a, b| (a + b) % n,
        |a, b| ((a as u64 * b as u64) % n as u64) as usize,
    )
}

pub fn make_product(factors: Vec<Arc<FiniteRing>>) -> Result<FiniteRing> {
    if factors.len() < 2 {
        return Err(Error::Arity(factors.len()));
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
        .unwrap_or(usize::MAX);
    limits::check_order(order)?;
    let label = format!(
        "prod({})",
        factors.iter().map(|f| f.label()).collect::<Vec<_>>().join(",")
    );
    let radices: Vec<usize> = factors.iter().map(|f| f.order()).collect();
    let split = |mut a: Elem| -> Vec<Elem> {
        let mut d = vec![0; radices.len()];
        for (slot, &q) in d.iter_mut().zip(&radices).rev() {
            *slot = a % q;
            a /= q;
        }
        d
    };
    let digits: Vec<Vec<Elem>> = (0..order).map(split).collect();
    let join = |d: &mut dyn Iterator<Item = Elem>| -> Elem {
        d.zip(&radices).fold(0, |acc, (x, &q)| acc * q + x)
    };
    let zero = join(&mut factors.iter().map(|f| f.zero()));
    let one = join(&mut factors.iter().map(|f| f.one()));
    let add = |a: Elem, b: Elem| {
        join(&mut digits[a].iter().zip(&digits[b]).zip(&factors).map(|((&x, &y), f)| f.add(x, y)))
    };
    let mul = |a: Elem, b: Elem| {
        join(&mut digits[a].iter().zip(&digits[b]).zip(&factors).map(|((&x, &y), f)| f.mul(x, y)))
    };
    let construction = Construction::Product { factors: factors.clone() };
    FiniteRing::tabulate(label, construction, order, zero, one, add, mul)
}

pub(crate) fn is_prime_number(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `Z_p[X]/(f)` with `f` monic, coefficients low to high.
pub fn make_poly_quotient(p: usize, modulus: &[usize]) -> Result<FiniteRing> {
    if !is_prime_number(p) {
        return Err(Error::construction(format!("polynomial quotient needs a prime, got {p}")));
    }
    let base = Arc::new(make_zn(p)?);
    let coeffs: Vec<Elem> = modulus.iter().map(|&c| c % p).collect();
    let label = format!("polyq({p},{})", int_list(&coeffs));
    poly_quotient_impl(base, coeffs, label)
}

/// `B[X]/(f)` over an arbitrary finite base ring, `f` monic with
/// coefficients given as base elements, low to high.
pub fn make_poly_quotient_over(base: Arc<FiniteRing>, modulus: Vec<Elem>) -> Result<FiniteRing> {
    let coeffs: Vec<String> = modulus
        .iter()
        .map(|&c| {
            if c < base.order() {
                Ok(base.render(c))
            } else {
                Err(Error::construction("coefficient outside the base ring"))
            }
        })
        .collect::<Result<_>>()?;
    let label = match base.construction() {
        Construction::Integers { modulus: p } if is_prime_number(*p) => {
            format!("polyq({p},[{}])", coeffs.join(","))
        }
        _ => format!("polyq({},[{}])", base.label(), coeffs.join(",")),
    };
    poly_quotient_impl(base, modulus, label)
}

/// `GF(p^d)` as `Z_p[X]/(f)`; fails unless `f` is irreducible.
pub fn make_field(p: usize, modulus: &[usize]) -> Result<FiniteRing> {
    let mut ring = make_poly_quotient(p, modulus)?;
    let is_field = ring.nonzero().all(|a| ring.elements().any(|b| ring.mul(a, b) == ring.one()));
    if !is_field {
        return Err(Error::construction(format!(
            "gf({p},{}): modulus is not irreducible",
            int_list(modulus)
        )));
    }
    let coeffs: Vec<usize> = modulus.iter().map(|&c| c % p).collect();
    ring.set_label(format!("gf({p},{})", int_list(&coeffs)));
    Ok(ring)
}

fn int_list(xs: &[usize]) -> String {
    format!("[{}]", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn poly_quotient_impl(base: Arc<FiniteRing>, modulus: Vec<Elem>, label: String) -> Result<FiniteRing> {
    let d = modulus.len().saturating_sub(1);
    if d < 1 {
        return Err(Error::construction("modulus must have degree at least 1"));
    }
    if modulus[d] != base.one() {
        return Err(Error::construction("modulus must be monic"));
    }
    let q = base.order();
    let order = q
        .checked_pow(d as u32)
        .ok_or(Error::Resource { what: "ring order", actual: usize::MAX, limit: limits::order_cap() })?;
    limits::check_order(order)?;
    let decode = |mut a: Elem| -> Vec<Elem> {
        let mut c = vec![0; d];
        for slot in c.iter_mut() {
            *slot = a % q;
            a /= q;
        }
        c
    };
    let encode = |c: &[Elem]| -> Elem { c.iter().rev().fold(0, |acc, &x| acc * q + x) };
    let digits: Vec<Vec<Elem>> = (0..order).map(decode).collect();
    let add = |a: Elem, b: Elem| {
        let c: Vec<Elem> = digits[a].iter().zip(&digits[b]).map(|(&x, &y)| base.add(x, y)).collect();
        encode(&c)
    };
    let mul = |a: Elem, b: Elem| {
        let mut prod = vec![base.zero(); 2 * d - 1];
        for (i, &x) in digits[a].iter().enumerate() {
            for (j, &y) in digits[b].iter().enumerate() {
                prod[i + j] = base.add(prod[i + j], base.mul(x, y));
            }
        }
        // X^d = -(f_0 + ... + f_{d-1} X^{d-1})
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c == base.zero() {
                continue;
            }
            prod[k] = base.zero();
            for (i, &f) in modulus[..d].iter().enumerate() {
                let slot = k - d + i;
                prod[slot] = base.sub(prod[slot], base.mul(c, f));
            }
        }
        encode(&prod[..d])
    };
    let zero = encode(&vec![base.zero(); d]);
    let mut one_c = vec![base.zero(); d];
    one_c[0] = base.one();
    let one = encode(&one_c);
    let construction = Construction::PolyQuotient { base: base.clone(), modulus: modulus.clone() };
    FiniteRing::tabulate(label, construction, order, zero, one, add, mul)
}

/// The `R`-module `R/J`. `J = {0}` gives `M = R`.
#[derive(Debug, Clone)]
pub struct ModuleSpec {
    pub base: Arc<FiniteRing>,
    pub quotient_by: Ideal,
}

impl ModuleSpec {
    pub fn new(base: Arc<FiniteRing>, quotient_by: Ideal) -> Result<Self> {
        if !Arc::ptr_eq(&base, quotient_by.ring()) {
            return Err(Error::construction("module ideal belongs to a different ring"));
        }
        Ok(ModuleSpec { base, quotient_by })
    }

    /// `M = R` itself.
    pub fn regular(base: &Arc<FiniteRing>) -> Self {
        ModuleSpec { base: base.clone(), quotient_by: Ideal::zero(base) }
    }

    pub fn order(&self) -> usize {
        self.base.order() / self.quotient_by.len()
    }
}

/// `R(+)M` with `(r,m)(s,n) = (rs, rn + sm)`.
pub fn make_idealization(base: &Arc<FiniteRing>, module: &ModuleSpec) -> Result<FiniteRing> {
    if !Arc::ptr_eq(base, &module.base) {
        return Err(Error::construction("module is over a different base ring"));
    }
    let (module_ring, action) = if module.quotient_by.is_zero() {
        (base.clone(), RingHom::identity(base))
    } else {
        if !module.quotient_by.is_proper() {
            return Err(Error::construction("module R/R is zero; idealization needs M nonzero"));
        }
        let (q, pi) = make_quotient(base, &module.quotient_by)?;
        (q, pi)
    };
    let m = module_ring.order();
    let order = base.order().saturating_mul(m);
    limits::check_order(order)?;
    let label = if module.quotient_by.is_zero() {
        format!("idealize({};mod=0)", base.label())
    } else {
        format!(
            "idealize({};mod=ideal({};gens={}))",
            base.label(),
            base.label(),
            module.quotient_by.render_generators()
        )
    };
    let mr = &module_ring;
    let add = |a: Elem, b: Elem| {
        let (r, x) = (a / m, a % m);
        let (s, y) = (b / m, b % m);
        base.add(r, s) * m + mr.add(x, y)
    };
    let mul = |a: Elem, b: Elem| {
        let (r, x) = (a / m, a % m);
        let (s, y) = (b / m, b % m);
        let rn = mr.mul(action.apply(r), y);
        let sm = mr.mul(action.apply(s), x);
        base.mul(r, s) * m + mr.add(rn, sm)
    };
    let zero = base.zero() * m + mr.zero();
    let one = base.one() * m + mr.zero();
    let construction = Construction::Idealization {
        base: base.clone(),
        module: module_ring.clone(),
        action: action.clone(),
        quotient_by: module.quotient_by.clone(),
    };
    FiniteRing::tabulate(label, construction, order, zero, one, add, mul)
}

/// `A ⋈_J B = {(a, f(a) + j)}` as a subring of `A × B`.
pub fn make_amalgamation(hom: &RingHom, along: &Ideal) -> Result<FiniteRing> {
    let (a_ring, b_ring) = (hom.source(), hom.target());
    if !Arc::ptr_eq(b_ring, along.ring()) {
        return Err(Error::construction("amalgamation ideal must live in the hom's target"));
    }
    RingHom::new(a_ring.clone(), b_ring.clone(), hom.table().to_vec(), hom.name())?;
    let order = a_ring.order().saturating_mul(along.len());
    limits::check_order(order)?;
    let nb = b_ring.order();
    let mut pairs = Vec::with_capacity(order);
    for a in a_ring.elements() {
        for j in along.members().ones() {
            pairs.push((a, b_ring.add(hom.apply(a), j)));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    assert_eq!(pairs.len(), order, "(a, j) -> (a, f(a) + j) must be injective");
    let mut index = vec![u32::MAX; a_ring.order() * nb];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        index[x * nb + y] = i as u32;
    }
    let lookup = |x: Elem, y: Elem| index[x * nb + y] as usize;
    let add = |p: Elem, q: Elem| {
        let ((x1, y1), (x2, y2)) = (pairs[p], pairs[q]);
        lookup(a_ring.add(x1, x2), b_ring.add(y1, y2))
    };
    let mul = |p: Elem, q: Elem| {
        let ((x1, y1), (x2, y2)) = (pairs[p], pairs[q]);
        lookup(a_ring.mul(x1, x2), b_ring.mul(y1, y2))
    };
    let zero = lookup(a_ring.zero(), b_ring.zero());
    let one = lookup(a_ring.one(), b_ring.one());
    let label = format!(
        "amalg({},{},hom={},j={})",
        a_ring.label(),
        b_ring.label(),
        hom.name(),
        along.render_generators()
    );
    let construction = Construction::Amalgamation {
        hom: hom.clone(),
        along: along.clone(),
        pairs: pairs.clone(),
    };
    FiniteRing::tabulate(label, construction, order, zero, one, add, mul)
}

/// `R/I` with the canonical projection. Cosets are represented by their
/// smallest member and listed in ascending order of representative.
pub fn make_quotient(ring: &Arc<FiniteRing>, ideal: &Ideal) -> Result<(Arc<FiniteRing>, RingHom)> {
    if !Arc::ptr_eq(ring, ideal.ring()) {
        return Err(Error::construction("ideal belongs to a different ring"));
    }
    if !ideal.is_proper() {
        return Err(Error::ImproperQuotient);
    }
    let n = ring.order();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let members = ideal.elements();
    for x in ring.elements() {
        if class_of[x] == usize::MAX {
            let c = reps.len();
            reps.push(x);
            for &i in &members {
                class_of[ring.add(x, i)] = c;
            }
        }
    }
    let label = format!("quot({};gens={})", ring.label(), ideal.render_generators());
    let construction = Construction::Quotient {
        parent: ring.clone(),
        by: ideal.clone(),
        reps: reps.clone(),
    };
    let quotient = Arc::new(FiniteRing::tabulate(
        label,
        construction,
        reps.len(),
        class_of[ring.zero()],
        class_of[ring.one()],
        |a, b| class_of[ring.add(reps[a], reps[b])],
        |a, b| class_of[ring.mul(reps[a], reps[b])],
    )?);
    let pi = RingHom::trusted(ring.clone(), quotient.clone(), class_of, "projection");
    Ok((quotient, pi))
}

/// Localization of a finite ring at a multiplicatively closed `S`.
///
/// With `t` the product of the elements of `S`, some power `e = t^k` is
/// idempotent and `R_S ≅ eR` with identity `e`. Returns `eR` and
/// `r -> e r`.
pub fn localize(ring: &Arc<FiniteRing>, s: &[Elem]) -> Result<(Arc<FiniteRing>, RingHom)> {
    if let Some(&bad) = s.iter().find(|&&x| x >= ring.order()) {
        return Err(Error::input(format!("element index {bad} outside {}", ring.label())));
    }
    let mut set = FixedBitSet::with_capacity(ring.order());
    for &x in s {
        set.insert(x);
    }
    if set.contains(ring.zero()) {
        return Err(Error::DegenerateLocalization);
    }
    if !set.contains(ring.one()) {
        return Err(Error::input("multiplicative set must contain 1"));
    }
    for x in set.ones() {
        for y in set.ones() {
            if !set.contains(ring.mul(x, y)) {
                return Err(Error::input(format!(
                    "set is not multiplicatively closed: {} * {}",
                    ring.render(x),
                    ring.render(y)
                )));
            }
        }
    }
    let t = set.ones().fold(ring.one(), |acc, x| ring.mul(acc, x));
    let e = idempotent_power(ring, t);
    let mut members: Vec<Elem> = ring.elements().map(|r| ring.mul(e, r)).collect();
    members.sort_unstable();
    members.dedup();
    let mut pos = vec![usize::MAX; ring.order()];
    for (i, &x) in members.iter().enumerate() {
        pos[x] = i;
    }
    let gens: Vec<String> = set.ones().map(|x| ring.render(x)).collect();
    let label = format!("localize({};s=[{}])", ring.label(), gens.join(","));
    let construction = Construction::Localization {
        parent: ring.clone(),
        idempotent: e,
        members: members.clone(),
    };
    let local = Arc::new(FiniteRing::tabulate(
        label,
        construction,
        members.len(),
        pos[ring.zero()],
        pos[e],
        |a, b| pos[ring.add(members[a], members[b])],
        |a, b| pos[ring.mul(members[a], members[b])],
    )?);
    let map: Vec<Elem> = ring.elements().map(|r| pos[ring.mul(e, r)]).collect();
    let hom = RingHom::trusted(ring.clone(), local.clone(), map, "localization");
    for x in set.ones() {
        let y = hom.apply(x);
        assert!(
            local.elements().any(|z| local.mul(y, z) == local.one()),
            "image of a denominator must be a unit"
        );
    }
    Ok((local, hom))
}

/// Smallest power `t^k` (`k >= 1`) that is idempotent.
pub fn idempotent_power(ring: &FiniteRing, t: Elem) -> Elem {
    let mut x = t;
    for _ in 0..=ring.order() {
        if ring.mul(x, x) == x {
            return x;
        }
        x = ring.mul(x, t);
    }
    unreachable!("some power of an element of a finite ring is idempotent")
}
