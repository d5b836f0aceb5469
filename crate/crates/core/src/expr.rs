//! Mixed expressions over scalars, Hecke elements and polynomial-module vectors.
//!
//! `s`, `v` and integers are scalars, `e[λ]`, `T[i]` and `Tw[k]` are Hecke
//! elements and `x1..xm` are vectors. A Hecke element times a vector is the
//! module action. Products associate to the left, so `T[1]*(x1*x2)` needs the
//! parentheses.

use std::fmt;

use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElt};
use crate::polyrep::act;
use crate::rings::{LaurentPoly, Profile, Var};
use crate::syntax::{self, Atom, Semantics};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(LaurentPoly),
    Hecke(HeckeElt),
    Vector(LaurentPoly),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(p) | Value::Vector(p) => write!(f, "{p}"),
            Value::Hecke(h) => write!(f, "{h}"),
        }
    }
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Hecke(_) => "hecke",
            Value::Vector(_) => "vector",
        }
    }
}

/// Evaluate `src` in rank `m`.
pub fn eval(alg: &HeckeAlgebra, src: &str) -> Result<Value> {
    syntax::parse(&Mixed(alg), src)
}

struct Mixed<'a>(&'a HeckeAlgebra);

impl Mixed<'_> {
    fn profile(&self) -> Profile {
        Profile::X(self.0.rank() as u8)
    }

    fn vector(&self, c: &LaurentPoly) -> Result<LaurentPoly> {
        c.embed(self.profile())
    }

    fn hecke(&self, c: LaurentPoly) -> HeckeElt {
        HeckeElt::scalar(self.0.rank(), c)
    }

    fn clash(pos: usize, op: &str, a: &Value, b: &Value) -> Error {
        Error::Parse { pos, msg: format!("cannot {op} {} and {}", a.kind(), b.kind()) }
    }
}

impl Semantics for Mixed<'_> {
    type Value = Value;

    fn atom(&self, atom: Atom<'_>, pos: usize) -> Result<Value> {
        match atom {
            Atom::Int(n) => Ok(Value::Scalar(LaurentPoly::constant(Profile::S, n))),
            Atom::Ident("s", None) => Ok(Value::Scalar(LaurentPoly::s_pow(Profile::S, 1))),
            Atom::Ident("v", None) => Ok(Value::Scalar(LaurentPoly::s_pow(Profile::S, 2))),
            Atom::Ident(name, None) if name.starts_with('x') => {
                let k: u8 = name[1..]
                    .parse()
                    .map_err(|_| Error::Parse { pos, msg: format!("unknown symbol {name}") })?;
                LaurentPoly::var(self.profile(), Var::X(k))
                    .map(Value::Vector)
                    .map_err(|_| Error::Parse { pos, msg: format!("no variable {name} in rank {}", self.0.rank()) })
            }
            other => crate::hecke::HeckeSemantics(self.0).atom(other, pos).map(Value::Hecke),
        }
    }

    fn add(&self, a: Value, b: Value, pos: usize) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.checked_add(&y)?),
            (Value::Hecke(x), Value::Hecke(y)) => Value::Hecke(x.checked_add(&y)?),
            (Value::Vector(x), Value::Vector(y)) => Value::Vector(x.checked_add(&y)?),
            (Value::Scalar(c), Value::Hecke(h)) | (Value::Hecke(h), Value::Scalar(c)) => {
                Value::Hecke(h.checked_add(&self.hecke(c))?)
            }
            (Value::Scalar(c), Value::Vector(u)) | (Value::Vector(u), Value::Scalar(c)) => {
                Value::Vector(u.checked_add(&self.vector(&c)?)?)
            }
            (a, b) => return Err(Self::clash(pos, "add", &a, &b)),
        })
    }

    fn sub(&self, a: Value, b: Value, pos: usize) -> Result<Value> {
        let nb = self.neg(b, pos)?;
        self.add(a, nb, pos)
    }

    fn mul(&self, a: Value, b: Value, pos: usize) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.checked_mul(&y)?),
            (Value::Hecke(x), Value::Hecke(y)) => Value::Hecke(x.checked_mul(&y)?),
            (Value::Vector(x), Value::Vector(y)) => Value::Vector(x.checked_mul(&y)?),
            (Value::Scalar(c), Value::Hecke(h)) | (Value::Hecke(h), Value::Scalar(c)) => Value::Hecke(h.scale(&c)),
            (Value::Scalar(c), Value::Vector(u)) | (Value::Vector(u), Value::Scalar(c)) => {
                Value::Vector(u.checked_mul(&self.vector(&c)?)?)
            }
            (Value::Hecke(h), Value::Vector(u)) => Value::Vector(act(&h, &u)?),
            (a, b) => return Err(Self::clash(pos, "multiply", &a, &b)),
        })
    }

    fn neg(&self, a: Value, _: usize) -> Result<Value> {
        Ok(match a {
            Value::Scalar(x) => Value::Scalar(-&x),
            Value::Hecke(h) => Value::Hecke(h.neg()),
            Value::Vector(u) => Value::Vector(-&u),
        })
    }

    fn pow(&self, a: Value, k: i64, pos: usize) -> Result<Value> {
        let bad = |e: Error| Error::Parse { pos, msg: e.to_string() };
        Ok(match a {
            Value::Scalar(x) => Value::Scalar(x.pow(k).map_err(bad)?),
            Value::Vector(u) => Value::Vector(u.pow(k).map_err(bad)?),
            Value::Hecke(h) => Value::Hecke(crate::hecke::HeckeSemantics(self.0).pow(h, k, pos)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_examples() {
        let alg = HeckeAlgebra::new(2);
        assert_eq!(eval(&alg, "T[1]*x1").unwrap().to_string(), "x2");
        assert_eq!(eval(&alg, "T[2]*(x1^0)").unwrap().to_string(), "s^2*x1*x2^-1 + s^2 - 1");
        assert_eq!(eval(&alg, "(T[1] + 1)*(T[1] - v)").unwrap().to_string(), "0");
        assert_eq!(eval(&alg, "e[1,0]*x1").unwrap().to_string(), "1");
        assert_eq!(eval(&alg, "2*s^-1 + v").unwrap().to_string(), "s^2 + 2*s^-1");
        assert!(eval(&alg, "x1*T[1]").is_err());
        assert!(eval(&alg, "x3").is_err());
        assert!(eval(&alg, "T[1] + x1").is_err());
    }
}
