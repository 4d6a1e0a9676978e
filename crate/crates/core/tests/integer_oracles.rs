//! The integer closed forms checked against plain modular arithmetic that
//! shares no code with the library.

use sdfa_core::criteria::{nil_zn_classification, sdf_in_z, zero_ideal_zn_closed_form};
use sdfa_core::dsl::parse_ring;
use sdfa_core::{is_sdf_bruteforce, is_weakly_sdf_bruteforce, nilradical, Ideal};

/// `I = dZ_n` (with `d | n`) is sdf-absorbing, straight from the definition.
fn oracle_sdf(n: u64, d: u64) -> bool {
    let inside = |x: u64| x.is_multiple_of(d);
    (1..n).all(|a| {
        (1..n).all(|b| {
            let diff = (a * a % n + n - b * b % n) % n;
            !inside(diff) || inside((a + b) % n) || inside((a + n - b) % n)
        })
    })
}

fn oracle_weakly_sdf(n: u64, d: u64) -> bool {
    let inside = |x: u64| x.is_multiple_of(d);
    (1..n).all(|a| {
        (1..n).all(|b| {
            let diff = (a * a % n + n - b * b % n) % n;
            diff == 0 || !inside(diff) || inside((a + b) % n) || inside((a + n - b) % n)
        })
    })
}

fn radical_generator(n: u64) -> u64 {
    let (mut m, mut rad, mut p) = (n, 1, 2);
    while p * p <= m {
        if m % p == 0 {
            rad *= p;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        rad *= m;
    }
    rad
}

#[test]
fn zero_ideal_closed_form_matches_definition() {
    for n in 2..=150u64 {
        assert_eq!(zero_ideal_zn_closed_form(n as usize), oracle_sdf(n, n), "n = {n}");
    }
}

#[test]
fn library_decider_matches_definition_on_every_zn_ideal() {
    for n in 2..=40u64 {
        let r = parse_ring(&format!("zn({n})")).unwrap();
        for d in (2..=n).filter(|d| n % d == 0) {
            let ideal = Ideal::principal(&r, (d % n) as usize);
            assert_eq!(is_sdf_bruteforce(&ideal).unwrap().holds, oracle_sdf(n, d), "{d} in Z_{n}");
            assert_eq!(is_weakly_sdf_bruteforce(&ideal).unwrap().holds, oracle_weakly_sdf(n, d), "{d} in Z_{n}");
        }
    }
}

#[test]
fn integer_ideal_through_z4n_matches_definition() {
    for n in 2..=60u64 {
        assert_eq!(sdf_in_z(n as usize).unwrap(), oracle_sdf(4 * n, n), "n = {n}");
    }
}

#[test]
fn nil_zn_classification_matches_definition() {
    for n in 2..=120u64 {
        let d = radical_generator(n);
        let class = nil_zn_classification(n as usize);
        assert_eq!(class.sdf, oracle_sdf(n, d), "n = {n}");
        let weakly_not = d == n && oracle_weakly_sdf(n, n) && !oracle_sdf(n, n);
        assert_eq!(class.weakly_not_sdf, weakly_not, "n = {n}");
        let r = parse_ring(&format!("zn({n})")).unwrap();
        assert_eq!(nilradical(&r).len() as u64, n / d);
    }
}
