use serde::{Deserialize, Serialize};

use crate::ideal::Ideal;
use crate::lattice::{self, IdealLattice};
use crate::ring::{Elem, FiniteRing};

/// Where `2 = 1 + 1` sits in the ring. In a finite ring every nonunit is a
/// zero-divisor, so these three cases are exhaustive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwoKind {
    Zero,
    Unit,
    NonzeroZeroDivisor,
}

#[derive(Debug, Clone)]
pub struct RingProfile {
    pub characteristic: usize,
    pub units: Vec<Elem>,
    pub nilpotents: Ideal,
    /// Includes 0.
    pub zero_divisors: Vec<Elem>,
    pub jacobson_radical: Ideal,
    pub maximal_count: usize,
    pub is_reduced: bool,
    pub is_field: bool,
    pub is_local: bool,
    /// Reduced and every prime maximal.
    pub is_von_neumann_regular: bool,
    pub is_boolean: bool,
    pub two: TwoKind,
}

impl RingProfile {
    pub fn is_unit(&self, a: Elem) -> bool {
        self.units.binary_search(&a).is_ok()
    }
}

pub fn units(ring: &FiniteRing) -> Vec<Elem> {
    ring.elements()
        .filter(|&a| ring.elements().any(|b| ring.mul(a, b) == ring.one()))
        .collect()
}

pub fn zero_divisors(ring: &FiniteRing) -> Vec<Elem> {
    ring.elements()
        .filter(|&a| ring.nonzero().any(|b| ring.mul(a, b) == ring.zero()))
        .collect()
}

pub fn ring_queries(lattice: &IdealLattice) -> RingProfile {
    let ring = lattice.ring();
    let units = units(ring);
    let nilpotents = lattice::nilradical(ring);
    let maximal = lattice.maximal_ideals();
    let jacobson_radical = maximal
        .iter()
        .fold(Ideal::whole(ring), |acc, m| acc.intersection(m));
    let primes = lattice.prime_ideals();
    let is_reduced = nilpotents.is_zero();
    let every_prime_maximal = primes.len() == maximal.len();
    let two = ring.two();
    let two_kind = if two == ring.zero() {
        TwoKind::Zero
    } else if units.binary_search(&two).is_ok() {
        TwoKind::Unit
    } else {
        TwoKind::NonzeroZeroDivisor
    };
    RingProfile {
        characteristic: ring.characteristic(),
        zero_divisors: zero_divisors(ring),
        jacobson_radical,
        maximal_count: maximal.len(),
        is_reduced,
        is_field: units.len() == ring.order() - 1,
        is_local: maximal.len() == 1,
        is_von_neumann_regular: is_reduced && every_prime_maximal,
        is_boolean: ring.elements().all(|a| ring.square(a) == a),
        two: two_kind,
        nilpotents,
        units,
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::construct::{make_field, make_product, make_zn};

    fn profile(r: FiniteRing) -> RingProfile {
        ring_queries(&IdealLattice::new(&Arc::new(r)).unwrap())
    }

    #[test]
    fn z4_profile() {
        let p = profile(make_zn(4).unwrap());
        assert_eq!(p.nilpotents.elements(), vec![0, 2]);
        assert_eq!(p.units, vec![1, 3]);
        assert_eq!(p.characteristic, 4);
        assert!(p.is_local && !p.is_reduced && !p.is_field);
        assert_eq!(p.two, TwoKind::NonzeroZeroDivisor);
    }

    #[test]
    fn z6_units() {
        let p = profile(make_zn(6).unwrap());
        let gcd_oracle: Vec<usize> = (0..6usize).filter(|&i| (1..=6).filter(|d| i % d == 0 && 6 % d == 0).max() == Some(1)).collect();
        assert_eq!(p.units, gcd_oracle);
    }

    #[test]
    fn boolean_and_vnr_flags() {
        let z2 = Arc::new(make_zn(2).unwrap());
        let p = profile(make_product(vec![z2.clone(), z2]).unwrap());
        assert!(p.is_boolean && p.is_von_neumann_regular);
        assert_eq!(p.two, TwoKind::Zero);

        let f4 = Arc::new(make_field(2, &[1, 1, 1]).unwrap());
        let p = profile(make_product(vec![f4.clone(), f4]).unwrap());
        assert!(p.is_von_neumann_regular && !p.is_boolean);
        assert_eq!(p.characteristic, 2);
    }

    #[test]
    fn vnr_flag_matches_element_definition() {
        for n in 2..=40 {
            let r = make_zn(n).unwrap();
            let by_elements = r
                .elements()
                .all(|x| r.elements().any(|y| r.mul(r.square(x), y) == x));
            assert_eq!(profile(make_zn(n).unwrap()).is_von_neumann_regular, by_elements, "n = {n}");
        }
    }

    #[test]
    fn jacobson_radical_of_finite_ring_is_nilradical() {
        for n in [8, 12, 36, 45] {
            let p = profile(make_zn(n).unwrap());
            assert_eq!(p.jacobson_radical.members(), p.nilpotents.members());
        }
    }
}
