//! Exact linear algebra and simplicial (co)homology.

pub mod chain;
pub mod field;
pub mod homology;
pub mod matrix;
pub mod smith;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use field::{PrimeField, Rationals};

/// Largest prime accepted as a coefficient field.
pub const MAX_PRIME: u64 = 97;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficients {
    Int,
    Rat,
    Prime(u64),
}

impl Coefficients {
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::BadCoefficients(format!("{p} is not a prime <= {MAX_PRIME}")));
        }
        Ok(Coefficients::Prime(p))
    }

    /// Accepts `z`/`int`, `q`/`rat`, and `f<p>`/`gf<p>`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "z" | "int" | "zz" => Ok(Coefficients::Int),
            "q" | "rat" | "qq" => Ok(Coefficients::Rat),
            _ => {
                let digits = t.strip_prefix("gf").or_else(|| t.strip_prefix('f'));
                match digits.and_then(|d| d.parse::<u64>().ok()) {
                    Some(p) => Self::prime(p),
                    None => Err(Error::BadCoefficients(s.to_string())),
                }
            }
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Coefficients::Int)
    }

    pub fn field(self) -> Result<FieldKind> {
        match self {
            Coefficients::Int => Err(Error::NotAField),
            Coefficients::Rat => Ok(FieldKind::Rat(Rationals)),
            Coefficients::Prime(p) => Ok(FieldKind::Prime(PrimeField::new(p))),
        }
    }

    /// `Q, F2, F3, F5, F7`.
    pub fn default_fields() -> Vec<Coefficients> {
        let mut out = vec![Coefficients::Rat];
        out.extend([2, 3, 5, 7].map(Coefficients::Prime));
        out
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Int => write!(f, "Z"),
            Coefficients::Rat => write!(f, "Q"),
            Coefficients::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// A coefficient field chosen at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rat(Rationals),
    Prime(PrimeField),
}

/// Runs `$body` with `$f` bound to the concrete field inside a [`FieldKind`].
#[macro_export]
macro_rules! with_field {
    ($kind:expr, $f:ident => $body:expr) => {
        match $kind {
            $crate::linalg::FieldKind::Rat($f) => $body,
            $crate::linalg::FieldKind::Prime($f) => $body,
        }
    };
}
