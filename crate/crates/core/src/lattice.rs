//! The full ideal lattice of a finite ring, and the prime/radical
//! machinery built on it.

use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::limits::LATTICE_CAP;
use crate::ring::FiniteRing;
use crate::sdf;

/// Every ideal of a ring, sorted by size and then by member list.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ring: Arc<FiniteRing>,
    ideals: Vec<Ideal>,
}

impl IdealLattice {
    /// Join-closure of the principal ideals: every ideal of a finite ring
    /// is a finite sum of principal ones.
    pub fn new(ring: &Arc<FiniteRing>) -> Result<Self> {
        let mut principal: Vec<Ideal> = Vec::new();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        for a in ring.elements() {
            let p = Ideal::principal(ring, a);
            if seen.insert(p.members().clone()) {
                principal.push(p);
            }
        }
        let mut ideals = principal.clone();
        let mut frontier = principal.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for i in &frontier {
                for p in &principal {
                    if p.is_subset(i) || i.is_subset(p) {
                        continue;
                    }
                    let s = i.sum(p);
                    if seen.insert(s.members().clone()) {
                        if seen.len() > LATTICE_CAP {
                            return Err(Error::Resource {
                                what: "ideal lattice size",
                                actual: seen.len(),
                                limit: LATTICE_CAP,
                            });
                        }
                        next.push(s.clone());
                        ideals.push(s);
                    }
                }
            }
            frontier = next;
        }
        let mut ideals: Vec<Ideal> = ideals.into_iter().map(Ideal::with_minimal_generators).collect();
        ideals.sort_by(|a, b| a.lattice_cmp(b));
        Ok(IdealLattice { ring: ring.clone(), ideals })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn proper(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals.iter().filter(|i| i.is_proper())
    }

    pub fn nonzero_proper(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals.iter().filter(|i| i.is_proper() && !i.is_zero())
    }

    pub fn position(&self, ideal: &Ideal) -> Option<usize> {
        self.ideals.iter().position(|i| i.members() == ideal.members())
    }

    /// The lattice's own copy of `ideal`, carrying minimal generators.
    pub fn canonical(&self, ideal: &Ideal) -> Option<&Ideal> {
        self.position(ideal).map(|k| &self.ideals[k])
    }

    pub fn maximal_ideals(&self) -> Vec<&Ideal> {
        self.proper()
            .filter(|i| !self.proper().any(|j| j.len() > i.len() && i.is_subset(j)))
            .collect()
    }

    pub fn prime_ideals(&self) -> Vec<&Ideal> {
        self.proper()
            .filter(|i| sdf::is_prime(i).map(|v| v.holds).unwrap_or(false))
            .collect()
    }

    /// Nonzero ideals with no nonzero ideal strictly inside.
    pub fn minimal_nonzero(&self) -> Vec<&Ideal> {
        let nonzero: Vec<&Ideal> = self.ideals.iter().filter(|i| !i.is_zero()).collect();
        nonzero
            .iter()
            .filter(|i| !nonzero.iter().any(|j| j.len() < i.len() && j.is_subset(i)))
            .copied()
            .collect()
    }
}

/// Proper and not strictly contained in another proper ideal of the lattice.
pub fn is_maximal(lattice: &IdealLattice, ideal: &Ideal) -> Result<bool> {
    if !ideal.is_proper() {
        return Err(Error::domain("maximality is only defined for proper ideals"));
    }
    Ok(!lattice
        .proper()
        .any(|j| j.len() > ideal.len() && ideal.is_subset(j)))
}

/// Maximality read off the quotient: every element outside `I` is
/// invertible modulo `I`.
pub fn is_maximal_via_quotient(ideal: &Ideal) -> Result<bool> {
    if !ideal.is_proper() {
        return Err(Error::domain("maximality is only defined for proper ideals"));
    }
    let r = ideal.ring();
    Ok(r.elements()
        .filter(|&a| !ideal.contains(a))
        .all(|a| r.elements().any(|b| ideal.contains(r.sub(r.mul(a, b), r.one())))))
}

/// `{a : a^k ∈ I for some k}`. Powers of `a` modulo `I` stabilize within
/// `|R|` steps, so `a^|R| ∈ I` decides membership.
pub fn radical(ideal: &Ideal) -> Ideal {
    let r = ideal.ring();
    let k = r.order() as u64;
    let mut members = FixedBitSet::with_capacity(r.order());
    for a in r.elements() {
        if ideal.contains(r.pow(a, k)) {
            members.insert(a);
        }
    }
    Ideal::from_members_unchecked(r, members).with_minimal_generators()
}

pub fn is_radical(ideal: &Ideal) -> bool {
    radical(ideal).members() == ideal.members()
}

/// `nil(R)`, the radical of the zero ideal.
pub fn nilradical(ring: &Arc<FiniteRing>) -> Ideal {
    radical(&Ideal::zero(ring))
}

/// Least `n >= 1` with `n * 1 ∈ I` (1 for the whole ring).
pub fn quotient_char(ideal: &Ideal) -> usize {
    let r = ideal.ring();
    let mut x = r.one();
    let mut n = 1;
    while !ideal.contains(x) {
        x = r.add(x, r.one());
        n += 1;
    }
    n
}

/// Primes containing `I` that are minimal among such primes.
pub fn minimal_primes_over(lattice: &IdealLattice, ideal: &Ideal) -> Result<Vec<Ideal>> {
    if !ideal.is_proper() {
        return Err(Error::domain("minimal primes are only defined over proper ideals"));
    }
    let over: Vec<&Ideal> = lattice
        .prime_ideals()
        .into_iter()
        .filter(|p| ideal.is_subset(p))
        .collect();
    Ok(over
        .iter()
        .filter(|p| !over.iter().any(|q| q.len() < p.len() && q.is_subset(p)))
        .map(|p| (*p).clone())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    Comaximal,
    Irredundant,
    None,
}

/// `I` written as the intersection of its minimal primes, when possible.
#[derive(Debug, Clone)]
pub struct PrimeDecomposition {
    pub primes: Vec<Ideal>,
    pub kind: DecompositionKind,
    /// `char(R/P_i)` for each component.
    pub chars: Vec<usize>,
}

pub fn prime_decomposition(lattice: &IdealLattice, ideal: &Ideal) -> Result<PrimeDecomposition> {
    let primes = minimal_primes_over(lattice, ideal)?;
    let chars = primes.iter().map(quotient_char).collect();
    let meet = |skip: Option<usize>| {
        primes
            .iter()
            .enumerate()
            .filter(|(k, _)| Some(*k) != skip)
            .fold(Ideal::whole(lattice.ring()), |acc, (_, p)| acc.intersection(p))
    };
    let kind = if meet(None).members() != ideal.members() {
        DecompositionKind::None
    } else if primes.iter().enumerate().all(|(i, p)| {
        primes[i + 1..].iter().all(|q| !p.sum(q).is_proper())
    }) {
        DecompositionKind::Comaximal
    } else if (0..primes.len()).all(|k| meet(Some(k)).members() != ideal.members()) {
        DecompositionKind::Irredundant
    } else {
        DecompositionKind::None
    };
    Ok(PrimeDecomposition { primes, kind, chars })
}
