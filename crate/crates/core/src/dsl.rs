//! The ring-spec language. Every ring label produced by a constructor is a
//! valid spec for an identical ring.
//!
//! ```text
//! ring    := "zn(" int ")"
//!          | "prod(" ring ("," ring)+ ")"
//!          | "gf(" int "," ints ")"
//!          | "polyq(" (int | ring) "," list ")"
//!          | "idealize(" ring ";mod=" ("0" | "ideal(" ring ";gens=" list ")") ")"
//!          | "amalg(" ring "," ring ",hom=" ("id" | "canonical" | "proj" int) ",j=" list ")"
//!          | "quot(" ring ";gens=" list ")"
//!          | "localize(" ring ";s=" list ")"
//! list    := "[" (elem ("," elem)*)? "]"
//! elem    := int | "#" int | "(" elem ("," elem)* ")" | list     optionally followed by "+I"
//! ```
//!
//! Element literals are resolved against the ring they belong to: integers
//! are multiples of 1, tuples address products, idealizations and
//! amalgamations, lists are polynomial coefficients (constant term first),
//! and `#k` is the raw element index.

use std::sync::Arc;

use crate::construct::{
    localize, make_amalgamation, make_field, make_idealization, make_poly_quotient,
    make_poly_quotient_over, make_product, make_quotient, make_zn, ModuleSpec,
};
use crate::error::{Error, Result};
use crate::hom::RingHom;
use crate::ideal::Ideal;
use crate::ring::{Construction, Elem, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    Int(i64),
    Raw(usize),
    Tuple(Vec<Literal>),
    List(Vec<Literal>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected `{tok}`"))
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
            .unwrap_or(self.rest().len());
        let id = &self.rest()[..len];
        self.pos += len;
        id
    }

    fn peek_digit(&mut self) -> bool {
        self.skip_ws();
        self.rest().starts_with(|c: char| c.is_ascii_digit() || c == '-')
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.rest().starts_with('-');
        let start = self.pos + usize::from(neg);
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return self.err("expected an integer");
        }
        let v: i64 = match self.src[start..start + len].parse() {
            Ok(v) => v,
            Err(_) => return self.err("integer out of range"),
        };
        self.pos = start + len;
        Ok(if neg { -v } else { v })
    }

    fn natural(&mut self) -> Result<usize> {
        let at = self.pos;
        let v = self.int()?;
        usize::try_from(v).map_err(|_| Error::Parse { pos: at, msg: "expected a non-negative integer".into() })
    }

    fn literal(&mut self) -> Result<Literal> {
        self.skip_ws();
        let lit = if self.eat("#") {
            Literal::Raw(self.natural()?)
        } else if self.eat("(") {
            let items = self.items(")")?;
            if items.is_empty() {
                return self.err("empty tuple");
            }
            Literal::Tuple(items)
        } else if self.rest().starts_with('[') {
            Literal::List(self.list()?)
        } else {
            Literal::Int(self.int()?)
        };
        self.eat("+I");
        Ok(lit)
    }

    fn items(&mut self, close: &str) -> Result<Vec<Literal>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.literal()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    fn list(&mut self) -> Result<Vec<Literal>> {
        self.expect("[")?;
        self.items("]")
    }

    /// A list that must resolve in `ring`; errors point at the list start.
    fn elements(&mut self, ring: &FiniteRing) -> Result<Vec<Elem>> {
        self.skip_ws();
        let at = self.pos;
        let lits = self.list()?;
        located(lits.iter().map(|l| resolve(ring, l)).collect(), at)
    }

    fn ints(&mut self) -> Result<Vec<i64>> {
        self.skip_ws();
        let at = self.pos;
        self.list()?
            .into_iter()
            .map(|l| match l {
                Literal::Int(v) => Ok(v),
                _ => Err(Error::Parse { pos: at, msg: "expected a list of integers".into() }),
            })
            .collect()
    }

    fn ring(&mut self) -> Result<Arc<FiniteRing>> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident();
        self.expect("(")?;
        let ring = match name {
            "zn" => {
                let n = self.natural()?;
                Arc::new(located(make_zn(n), at)?)
            }
            "prod" => {
                let mut factors = vec![self.ring()?];
                while self.eat(",") {
                    factors.push(self.ring()?);
                }
                Arc::new(located(make_product(factors), at)?)
            }
            "gf" => {
                let p = self.natural()?;
                self.expect(",")?;
                let coeffs = reduce_ints(&self.ints()?, p);
                Arc::new(located(make_field(p, &coeffs), at)?)
            }
            "polyq" => {
                if self.peek_digit() {
                    let p = self.natural()?;
                    self.expect(",")?;
                    let coeffs = reduce_ints(&self.ints()?, p);
                    Arc::new(located(make_poly_quotient(p, &coeffs), at)?)
                } else {
                    let base = self.ring()?;
                    self.expect(",")?;
                    let coeffs = self.elements(&base)?;
                    Arc::new(located(make_poly_quotient_over(base, coeffs), at)?)
                }
            }
            "idealize" => {
                let base = self.ring()?;
                self.expect(";")?;
                self.expect("mod")?;
                self.expect("=")?;
                let module = if self.eat("ideal") {
                    self.expect("(")?;
                    let inner_at = self.pos;
                    let inner = self.ring()?;
                    if inner.label() != base.label() {
                        return Err(Error::Parse {
                            pos: inner_at,
                            msg: format!("module ideal must live in {}", base.label()),
                        });
                    }
                    self.expect(";")?;
                    self.expect("gens")?;
                    self.expect("=")?;
                    let gens = self.elements(&base)?;
                    self.expect(")")?;
                    ModuleSpec::new(base.clone(), Ideal::generated(&base, &gens)?)?
                } else {
                    let zero_at = self.pos;
                    if self.int()? != 0 {
                        return Err(Error::Parse { pos: zero_at, msg: "expected `0` or `ideal(...)`".into() });
                    }
                    ModuleSpec::regular(&base)
                };
                Arc::new(located(make_idealization(&base, &module), at)?)
            }
            "amalg" => {
                let a = self.ring()?;
                self.expect(",")?;
                let b_at = self.pos;
                let b = self.ring()?;
                self.expect(",")?;
                self.expect("hom")?;
                self.expect("=")?;
                let hom_at = self.pos;
                let hom_name = self.ident();
                let hom = match hom_name {
                    "id" => RingHom::identity(&a),
                    "canonical" => located(RingHom::canonical(&a, &b), hom_at)?,
                    _ => match hom_name.strip_prefix("proj").and_then(|k| k.parse::<usize>().ok()) {
                        Some(k) if k >= 1 => located(RingHom::projection(&a, k - 1), hom_at)?,
                        _ => {
                            return Err(Error::Parse {
                                pos: hom_at,
                                msg: "expected `id`, `canonical` or `projK`".into(),
                            })
                        }
                    },
                };
                if hom.target().label() != b.label() {
                    return Err(Error::Parse {
                        pos: b_at,
                        msg: format!("hom `{hom_name}` maps into {}, not {}", hom.target().label(), b.label()),
                    });
                }
                self.expect(",")?;
                self.expect("j")?;
                self.expect("=")?;
                let target = hom.target().clone();
                let gens = self.elements(&target)?;
                let along = Ideal::generated(&target, &gens)?;
                Arc::new(located(make_amalgamation(&hom, &along), at)?)
            }
            "quot" => {
                let parent = self.ring()?;
                self.expect(";")?;
                self.expect("gens")?;
                self.expect("=")?;
                let gens = self.elements(&parent)?;
                let ideal = Ideal::generated(&parent, &gens)?;
                located(make_quotient(&parent, &ideal), at)?.0
            }
            "localize" => {
                let parent = self.ring()?;
                self.expect(";")?;
                self.expect("s")?;
                self.expect("=")?;
                let s = self.elements(&parent)?;
                located(localize(&parent, &s), at)?.0
            }
            "" => return Err(Error::Parse { pos: at, msg: "expected a ring constructor".into() }),
            other => return Err(Error::Parse { pos: at, msg: format!("unknown ring constructor `{other}`") }),
        };
        self.expect(")")?;
        Ok(ring)
    }
}

fn reduce_ints(xs: &[i64], p: usize) -> Vec<usize> {
    if p == 0 {
        return xs.iter().map(|&x| x.max(0) as usize).collect();
    }
    xs.iter().map(|&x| x.rem_euclid(p as i64) as usize).collect()
}

/// Attach a position to resolution errors so the CLI can point at them.
fn located<T>(r: Result<T>, pos: usize) -> Result<T> {
    r.map_err(|e| match e {
        Error::Input(msg) => Error::Parse { pos, msg },
        other => other,
    })
}

/// Resolve a literal to an element index of `ring`.
pub fn resolve(ring: &FiniteRing, lit: &Literal) -> Result<Elem> {
    let bad = |what: &str| Error::input(format!("{what} is not an element of {}", ring.label()));
    match lit {
        Literal::Raw(k) if *k < ring.order() => return Ok(*k),
        Literal::Raw(k) => return Err(bad(&format!("#{k}"))),
        Literal::Int(v) => return Ok(ring.scalar(*v)),
        _ => {}
    }
    match (ring.construction(), lit) {
        (Construction::Product { factors }, Literal::Tuple(items)) if items.len() == factors.len() => {
            let digits = items
                .iter()
                .zip(factors)
                .map(|(l, f)| resolve(f, l))
                .collect::<Result<Vec<_>>>()?;
            Ok(ring.product_index(&digits))
        }
        (Construction::Idealization { base, module, .. }, Literal::Tuple(items)) if items.len() == 2 => {
            Ok(resolve(base, &items[0])? * module.order() + resolve(module, &items[1])?)
        }
        (Construction::Amalgamation { hom, pairs, .. }, Literal::Tuple(items)) if items.len() == 2 => {
            let pair = (resolve(hom.source(), &items[0])?, resolve(hom.target(), &items[1])?);
            pairs.binary_search(&pair).map_err(|_| bad("pair"))
        }
        (Construction::PolyQuotient { base, modulus }, Literal::List(items)) if items.len() < modulus.len() => {
            let q = base.order();
            let mut acc = 0;
            for l in items.iter().rev() {
                acc = acc * q + resolve(base, l)?;
            }
            Ok(acc)
        }
        (Construction::Quotient { parent, by, reps }, _) => {
            let x = resolve(parent, lit)?;
            reps.iter()
                .position(|&r| by.contains(parent.sub(x, r)))
                .ok_or_else(|| bad("coset"))
        }
        (Construction::Localization { parent, idempotent, members }, _) => {
            let x = parent.mul(*idempotent, resolve(parent, lit)?);
            members.binary_search(&x).map_err(|_| bad("element"))
        }
        _ => Err(bad("literal")),
    }
}

pub fn parse_ring(src: &str) -> Result<Arc<FiniteRing>> {
    let mut p = Parser::new(src);
    let ring = p.ring()?;
    p.finish()?;
    Ok(ring)
}

/// A bracketed list of element literals, e.g. `[(0,2),(1,0)]`.
pub fn parse_elements(ring: &FiniteRing, src: &str) -> Result<Vec<Elem>> {
    let mut p = Parser::new(src);
    let elems = p.elements(ring)?;
    p.finish()?;
    Ok(elems)
}

/// A single element literal.
pub fn parse_element(ring: &FiniteRing, src: &str) -> Result<Elem> {
    let mut p = Parser::new(src);
    let lit = p.literal()?;
    p.finish()?;
    located(resolve(ring, &lit), 0)
}

/// The ideal generated by a bracketed list of element literals.
pub fn parse_ideal(ring: &Arc<FiniteRing>, gens: &str) -> Result<Ideal> {
    Ideal::generated(ring, &parse_elements(ring, gens)?)
}
