use serde::{Deserialize, Serialize};

use crate::ideal::Ideal;
use crate::ring::Elem;
use crate::sdf;

/// The procedure that produced a [`Verdict`]. Determines which definition
/// a failure witness certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    SdfBruteforce,
    WeaklySdfBruteforce,
    PrimeScan,
    WeaklyPrimeScan,
    /// Failure witness is a nonzero solution `(x, y)` of `X + Y = a`,
    /// `X - Y = b`; it is also an sdf failure pair.
    LinearSystem,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::SdfBruteforce => "sdf-bruteforce",
            Method::WeaklySdfBruteforce => "weakly-sdf-bruteforce",
            Method::PrimeScan => "prime-scan",
            Method::WeaklyPrimeScan => "weakly-prime-scan",
            Method::LinearSystem => "linear-system",
        }
    }
}

/// A decision with a certificate: whenever `holds` is false the witness
/// pair violates the definition encoded by `method`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<(Elem, Elem)>,
    pub method: Method,
}

impl Verdict {
    pub(crate) fn holds(method: Method) -> Self {
        Verdict { holds: true, witness: None, method }
    }

    pub(crate) fn fails(method: Method, a: Elem, b: Elem) -> Self {
        Verdict { holds: false, witness: Some((a, b)), method }
    }

    /// Re-check the certificate against the definition. Positive verdicts
    /// carry no certificate and always pass.
    pub fn recheck(&self, ideal: &Ideal) -> bool {
        if self.holds {
            return self.witness.is_none();
        }
        let Some((a, b)) = self.witness else {
            return false;
        };
        match self.method {
            Method::SdfBruteforce | Method::LinearSystem => sdf::check_sdf_witness(ideal, a, b),
            Method::WeaklySdfBruteforce => sdf::check_weakly_sdf_witness(ideal, a, b),
            Method::PrimeScan => sdf::check_prime_witness(ideal, a, b),
            Method::WeaklyPrimeScan => sdf::check_weakly_prime_witness(ideal, a, b),
        }
    }
}
