//! Polynomials over a finite ring, just enough to test `I[X]` membership.

use rand::Rng;

use crate::ideal::Ideal;
use crate::ring::{Elem, FiniteRing};

pub type Poly = Vec<Elem>;

pub fn add(r: &FiniteRing, f: &[Elem], g: &[Elem]) -> Poly {
    let n = f.len().max(g.len());
    (0..n)
        .map(|k| r.add(*f.get(k).unwrap_or(&r.zero()), *g.get(k).unwrap_or(&r.zero())))
        .collect()
}

pub fn sub(r: &FiniteRing, f: &[Elem], g: &[Elem]) -> Poly {
    let neg: Poly = g.iter().map(|&c| r.neg(c)).collect();
    add(r, f, &neg)
}

pub fn mul(r: &FiniteRing, f: &[Elem], g: &[Elem]) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![r.zero(); f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = r.add(out[i + j], r.mul(a, b));
        }
    }
    out
}

pub fn scale(r: &FiniteRing, s: Elem, f: &[Elem]) -> Poly {
    f.iter().map(|&c| r.mul(s, c)).collect()
}

/// Coefficientwise membership in `I[X]`.
pub fn in_extension(ideal: &Ideal, f: &[Elem]) -> bool {
    f.iter().all(|&c| ideal.contains(c))
}

pub fn is_zero(r: &FiniteRing, f: &[Elem]) -> bool {
    f.iter().all(|&c| c == r.zero())
}

pub fn random<R: Rng>(r: &FiniteRing, degree: usize, rng: &mut R) -> Poly {
    (0..=degree).map(|_| rng.gen_range(0..r.order())).collect()
}

pub fn random_in<R: Rng>(ideal: &Ideal, degree: usize, rng: &mut R) -> Poly {
    let members = ideal.elements();
    (0..=degree).map(|_| members[rng.gen_range(0..members.len())]).collect()
}

/// `f, g ≠ 0` with `f^2 - g^2 ∈ I[X]` but neither `f + g` nor `f - g` in
/// `I[X]`.
pub fn violates_extension(ideal: &Ideal, f: &[Elem], g: &[Elem]) -> bool {
    let r = ideal.ring();
    if is_zero(r, f) || is_zero(r, g) {
        return false;
    }
    let d = sub(r, &mul(r, f, f), &mul(r, g, g));
    in_extension(ideal, &d) && !in_extension(ideal, &add(r, f, g)) && !in_extension(ideal, &sub(r, f, g))
}

/// Pairs with `f^2 - g^2 ∈ I[X]`, drawn from three families: `g = s f + h`
/// with `s^2 - 1 ∈ I` and `h ∈ I[X]`; `g = f + h`; and uniformly random
/// pairs kept only when they satisfy the hypothesis. Returns the number of
/// qualifying pairs examined and the first violation found.
pub fn falsify<R: Rng>(ideal: &Ideal, pairs: usize, degree: usize, rng: &mut R) -> (usize, Option<(Poly, Poly)>) {
    let r = ideal.ring();
    let signs: Vec<Elem> = r
        .elements()
        .filter(|&s| ideal.contains(r.sub(r.square(s), r.one())))
        .collect();
    let mut checked = 0;
    let mut attempts = 0;
    while checked < pairs && attempts < pairs * 20 {
        attempts += 1;
        let f = random(r, degree, rng);
        let g = match attempts % 3 {
            0 => {
                let s = signs[rng.gen_range(0..signs.len())];
                add(r, &scale(r, s, &f), &random_in(ideal, degree, rng))
            }
            1 => add(r, &f, &random_in(ideal, degree, rng)),
            _ => random(r, degree, rng),
        };
        let d = sub(r, &mul(r, &f, &f), &mul(r, &g, &g));
        if !in_extension(ideal, &d) || is_zero(r, &f) || is_zero(r, &g) {
            continue;
        }
        checked += 1;
        if violates_extension(ideal, &f, &g) {
            return (checked, Some((f, g)));
        }
    }
    (checked, None)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::construct::make_zn;

    #[test]
    fn z4_zero_ideal_fails_in_polynomials() {
        let z4 = Arc::new(make_zn(4).unwrap());
        let zero = Ideal::zero(&z4);
        // f = X + 2, g = X: f^2 - g^2 = 4X + 4 = 0.
        assert!(violates_extension(&zero, &[2, 1], &[0, 1]));
    }

    #[test]
    fn multiplication_matches_hand_expansion() {
        let z5 = make_zn(5).unwrap();
        // (1 + 2X)(3 + X) = 3 + 7X + 2X^2 = 3 + 2X + 2X^2 mod 5
        assert_eq!(mul(&z5, &[1, 2], &[3, 1]), vec![3, 2, 2]);
    }
}
