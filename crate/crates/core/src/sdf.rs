//! Brute-force deciders for the absorbing properties and their
//! certificate checkers.
//!
//! Every scan walks pairs in element-index order and stops at the first
//! failure. All four definitions are symmetric in the pair, so only
//! `a <= b` is visited and the first hit is the lexicographically least
//! witness overall.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::Elem;
use crate::verdict::{Method, Verdict};

fn require_proper(ideal: &Ideal, what: &str) -> Result<()> {
    if ideal.is_proper() {
        Ok(())
    } else {
        Err(Error::domain(format!("{what} is only defined for proper ideals")))
    }
}

fn squares(ideal: &Ideal) -> Vec<Elem> {
    let r = ideal.ring();
    r.elements().map(|a| r.square(a)).collect()
}

fn sdf_scan(ideal: &Ideal, weakly: bool) -> Option<(Elem, Elem)> {
    let r = ideal.ring();
    let sq = squares(ideal);
    let zero = r.zero();
    let n = r.order();
    for a in r.nonzero() {
        for b in a..n {
            if b == zero {
                continue;
            }
            let d = r.sub(sq[a], sq[b]);
            if !ideal.contains(d) || (weakly && d == zero) {
                continue;
            }
            if !ideal.contains(r.add(a, b)) && !ideal.contains(r.sub(a, b)) {
                return Some((a, b));
            }
        }
    }
    None
}

/// `I` is sdf-absorbing: for all nonzero `a, b` with `a^2 - b^2 ∈ I`,
/// `a + b ∈ I` or `a - b ∈ I`.
pub fn is_sdf_bruteforce(ideal: &Ideal) -> Result<Verdict> {
    require_proper(ideal, "sdf-absorption")?;
    Ok(match sdf_scan(ideal, false) {
        None => Verdict::holds(Method::SdfBruteforce),
        Some((a, b)) => Verdict::fails(Method::SdfBruteforce, a, b),
    })
}

/// As [`is_sdf_bruteforce`] but only for `a^2 - b^2 ≠ 0`.
pub fn is_weakly_sdf_bruteforce(ideal: &Ideal) -> Result<Verdict> {
    require_proper(ideal, "weak sdf-absorption")?;
    Ok(match sdf_scan(ideal, true) {
        None => Verdict::holds(Method::WeaklySdfBruteforce),
        Some((a, b)) => Verdict::fails(Method::WeaklySdfBruteforce, a, b),
    })
}

fn product_scan(ideal: &Ideal, weakly: bool) -> Option<(Elem, Elem)> {
    let r = ideal.ring();
    let outside: Vec<Elem> = r.elements().filter(|&a| !ideal.contains(a)).collect();
    for (i, &a) in outside.iter().enumerate() {
        for &b in &outside[i..] {
            let p = r.mul(a, b);
            if ideal.contains(p) && !(weakly && p == r.zero()) {
                return Some((a, b));
            }
        }
    }
    None
}

/// `I` is prime: `ab ∈ I` forces `a ∈ I` or `b ∈ I`.
pub fn is_prime(ideal: &Ideal) -> Result<Verdict> {
    require_proper(ideal, "primality")?;
    Ok(match product_scan(ideal, false) {
        None => Verdict::holds(Method::PrimeScan),
        Some((a, b)) => Verdict::fails(Method::PrimeScan, a, b),
    })
}

/// `I` is weakly prime: `0 ≠ ab ∈ I` forces `a ∈ I` or `b ∈ I`.
pub fn is_weakly_prime(ideal: &Ideal) -> Result<Verdict> {
    require_proper(ideal, "weak primality")?;
    Ok(match product_scan(ideal, true) {
        None => Verdict::holds(Method::WeaklyPrimeScan),
        Some((a, b)) => Verdict::fails(Method::WeaklyPrimeScan, a, b),
    })
}

/// The linear-system criterion: for every `a, b ∉ I` with `ab ∈ I`, the
/// system `X + Y = a`, `X - Y = b` has no solution with `x, y ≠ 0`.
///
/// A solution satisfies `2x = a + b`, so solutions are read off a table of
/// halves rather than searched. The witness is the solution `(x, y)` for
/// the first failing `(a, b)` in index order, smallest `x` first.
pub fn sdf_via_linear_system(ideal: &Ideal) -> Result<Verdict> {
    require_proper(ideal, "sdf-absorption")?;
    let r = ideal.ring();
    let mut halves: Vec<Vec<Elem>> = vec![Vec::new(); r.order()];
    for x in r.elements() {
        halves[r.add(x, x)].push(x);
    }
    let zero = r.zero();
    let outside: Vec<Elem> = r.elements().filter(|&a| !ideal.contains(a)).collect();
    for &a in &outside {
        for &b in &outside {
            if !ideal.contains(r.mul(a, b)) {
                continue;
            }
            for &x in &halves[r.add(a, b)] {
                let y = r.sub(a, x);
                if x != zero && y != zero {
                    debug_assert_eq!(r.sub(x, y), b);
                    return Ok(Verdict::fails(Method::LinearSystem, x, y));
                }
            }
        }
    }
    Ok(Verdict::holds(Method::LinearSystem))
}

/// For every nonzero `a, b` with `a^2 - b^2 ∈ I`, both `a + b` and `a - b`
/// lie in `I`.
pub fn both_signs_absorb(ideal: &Ideal) -> bool {
    let r = ideal.ring();
    let sq = squares(ideal);
    r.nonzero().all(|a| {
        r.nonzero().all(|b| {
            !ideal.contains(r.sub(sq[a], sq[b]))
                || (ideal.contains(r.add(a, b)) && ideal.contains(r.sub(a, b)))
        })
    })
}

/// True when `(a, b)` shows `I` is not sdf-absorbing.
pub fn check_sdf_witness(ideal: &Ideal, a: Elem, b: Elem) -> bool {
    let r = ideal.ring();
    a < r.order()
        && b < r.order()
        && a != r.zero()
        && b != r.zero()
        && ideal.contains(r.sub(r.square(a), r.square(b)))
        && !ideal.contains(r.add(a, b))
        && !ideal.contains(r.sub(a, b))
}

/// True when `(a, b)` shows `I` is not weakly sdf-absorbing.
pub fn check_weakly_sdf_witness(ideal: &Ideal, a: Elem, b: Elem) -> bool {
    let r = ideal.ring();
    check_sdf_witness(ideal, a, b) && r.sub(r.square(a), r.square(b)) != r.zero()
}

/// True when `(a, b)` shows `I` is not prime.
pub fn check_prime_witness(ideal: &Ideal, a: Elem, b: Elem) -> bool {
    let r = ideal.ring();
    a < r.order()
        && b < r.order()
        && !ideal.contains(a)
        && !ideal.contains(b)
        && ideal.contains(r.mul(a, b))
}

/// True when `(a, b)` shows `I` is not weakly prime.
pub fn check_weakly_prime_witness(ideal: &Ideal, a: Elem, b: Elem) -> bool {
    let r = ideal.ring();
    check_prime_witness(ideal, a, b) && r.mul(a, b) != r.zero()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::construct::{make_product, make_zn};
    use crate::ring::FiniteRing;

    fn zn(n: usize) -> Arc<FiniteRing> {
        Arc::new(make_zn(n).unwrap())
    }

    fn z4_squared() -> Arc<FiniteRing> {
        Arc::new(make_product(vec![zn(4), zn(4)]).unwrap())
    }

    #[test]
    fn zero_ideal_of_z4_and_z9() {
        for n in [4, 9] {
            let r = zn(n);
            assert!(is_sdf_bruteforce(&Ideal::zero(&r)).unwrap().holds);
        }
    }

    #[test]
    fn z3_cubed_ideal_fails_with_checkable_pairs() {
        let r = Arc::new(make_product(vec![zn(3), zn(3), zn(3)]).unwrap());
        let i = Ideal::generated(&r, &[r.product_index(&[0, 0, 1])]).unwrap();
        let v = is_sdf_bruteforce(&i).unwrap();
        assert!(!v.holds);
        assert!(v.recheck(&i));
        let (a, b) = (r.product_index(&[2, 1, 0]), r.product_index(&[1, 1, 0]));
        assert!(check_sdf_witness(&i, a, b));
        // Lexicographically least pair in index order.
        let (wa, wb) = v.witness.unwrap();
        assert_eq!((r.render(wa), r.render(wb)), ("(1,1,0)".into(), "(1,2,0)".into()));
    }

    #[test]
    fn weakly_fixture_in_z4_squared() {
        let r = z4_squared();
        let i = Ideal::generated(&r, &[r.product_index(&[0, 2])]).unwrap();
        assert!(is_weakly_sdf_bruteforce(&i).unwrap().holds);
        let sdf = is_sdf_bruteforce(&i).unwrap();
        assert!(!sdf.holds && sdf.recheck(&i));
        let wp = is_weakly_prime(&i).unwrap();
        assert!(!wp.holds && wp.recheck(&i));
        let (a, b) = (r.product_index(&[2, 2]), r.product_index(&[0, 1]));
        assert!(check_weakly_prime_witness(&i, a, b));
    }

    #[test]
    fn weakly_prime_basics() {
        let f = zn(7);
        assert!(is_weakly_prime(&Ideal::zero(&f)).unwrap().holds);
        let z4 = zn(4);
        assert!(is_weakly_prime(&Ideal::zero(&z4)).unwrap().holds);
        assert!(!is_prime(&Ideal::zero(&z4)).unwrap().holds);
    }

    #[test]
    fn linear_system_agrees_on_small_fixtures() {
        let z8 = zn(8);
        let i = Ideal::generated(&z8, &[4]).unwrap();
        assert_eq!(
            sdf_via_linear_system(&i).unwrap().holds,
            is_sdf_bruteforce(&i).unwrap().holds
        );
        let z4 = zn(4);
        assert!(sdf_via_linear_system(&Ideal::zero(&z4)).unwrap().holds);
        let r = Arc::new(make_product(vec![zn(3), zn(3), zn(3)]).unwrap());
        let i = Ideal::generated(&r, &[r.product_index(&[0, 0, 1])]).unwrap();
        let v = sdf_via_linear_system(&i).unwrap();
        assert!(!v.holds && v.recheck(&i));
    }

    #[test]
    fn improper_ideal_is_a_domain_error() {
        let r = zn(5);
        let whole = Ideal::whole(&r);
        assert!(matches!(is_sdf_bruteforce(&whole), Err(Error::Domain(_))));
        assert!(matches!(is_weakly_sdf_bruteforce(&whole), Err(Error::Domain(_))));
        assert!(matches!(is_weakly_prime(&whole), Err(Error::Domain(_))));
        assert!(matches!(sdf_via_linear_system(&whole), Err(Error::Domain(_))));
    }

    #[test]
    fn witness_checkers_reject_non_witnesses() {
        let r = zn(15);
        let zero = Ideal::zero(&r);
        assert!(!check_sdf_witness(&zero, 0, 1));
        assert!(!check_sdf_witness(&zero, 1, 1));
        let v = is_sdf_bruteforce(&zero).unwrap();
        assert!(!v.holds);
        let (a, b) = v.witness.unwrap();
        assert!(check_sdf_witness(&zero, a, b));
        assert!(check_sdf_witness(&zero, b, a));
    }
}
