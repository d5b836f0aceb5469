use std::sync::OnceLock;

use super::{LaurentPoly, Profile, Var};
use crate::error::{Error, Result};
use crate::syntax::{self, Atom, Semantics};

/// Environment variable capping the number of terms any product may produce.
pub const TERM_CAP_ENV: &str = "THETA_HECKE_MAX_TERMS";

pub fn term_cap() -> Option<usize> {
    static CAP: OnceLock<Option<usize>> = OnceLock::new();
    *CAP.get_or_init(|| std::env::var(TERM_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()))
}

pub(crate) fn parse_var(profile: Profile, name: &str) -> Option<Var> {
    let var = match name {
        "g" => Var::G,
        "s" => Var::S,
        _ => {
            let k: u8 = name.strip_prefix('x')?.parse().ok()?;
            Var::X(k)
        }
    };
    profile.slot(var).map(|_| var)
}

pub(crate) struct PolySemantics(pub Profile);

impl Semantics for PolySemantics {
    type Value = LaurentPoly;

    fn atom(&self, atom: Atom<'_>, pos: usize) -> Result<LaurentPoly> {
        match atom {
            Atom::Int(n) => Ok(LaurentPoly::constant(self.0, n)),
            Atom::Ident(name, None) => match parse_var(self.0, name) {
                Some(v) => LaurentPoly::var(self.0, v),
                None => Err(Error::Parse { pos, msg: format!("unknown variable {name}") }),
            },
            Atom::Ident(name, Some(_)) => {
                Err(Error::Parse { pos, msg: format!("{name}[..] is not a polynomial literal") })
            }
        }
    }

    fn add(&self, a: LaurentPoly, b: LaurentPoly, _: usize) -> Result<LaurentPoly> {
        a.checked_add(&b)
    }

    fn sub(&self, a: LaurentPoly, b: LaurentPoly, _: usize) -> Result<LaurentPoly> {
        a.checked_sub(&b)
    }

    fn mul(&self, a: LaurentPoly, b: LaurentPoly, _: usize) -> Result<LaurentPoly> {
        a.checked_mul(&b)
    }

    fn neg(&self, a: LaurentPoly, _: usize) -> Result<LaurentPoly> {
        Ok(-a)
    }

    fn pow(&self, a: LaurentPoly, k: i64, _: usize) -> Result<LaurentPoly> {
        a.pow(k)
    }
}

/// Parse a polynomial literal such as `3*s^-2*x1^2 - x2`.
pub fn parse_poly(profile: Profile, src: &str) -> Result<LaurentPoly> {
    syntax::parse(&PolySemantics(profile), src)
}

impl std::str::FromStr for Profile {
    type Err = Error;

    /// `s`, `gs`, or `x<m>`.
    fn from_str(src: &str) -> Result<Profile> {
        match src {
            "s" => Ok(Profile::S),
            "gs" => Ok(Profile::GS),
            _ => src
                .strip_prefix('x')
                .and_then(|m| m.parse().ok())
                .map(Profile::X)
                .ok_or_else(|| Error::Invalid(format!("unknown profile {src}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for (profile, src) in [
            (Profile::X(2), "3*s^-2*x1^2 - x2"),
            (Profile::GS, "g*s^2 + 7 - g^-1"),
            (Profile::S, "-s^4 + 2*s - 1"),
            (Profile::X(3), "s^4*x1*x3^-1 + s^2 - 1"),
        ] {
            let p = parse_poly(profile, src).unwrap();
            assert_eq!(p.to_string(), src);
            assert_eq!(parse_poly(profile, &p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn parenthesised_powers() {
        let p = parse_poly(Profile::S, "(s + 1)^2 - (s^2 + 2*s)").unwrap();
        assert!(p.is_one());
    }

    #[test]
    fn errors_have_positions() {
        assert!(matches!(parse_poly(Profile::S, "s + x1"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_poly(Profile::S, "s +"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_poly(Profile::S, "s $"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly(Profile::X(2), "x3"), Err(Error::Parse { .. })));
    }
}
