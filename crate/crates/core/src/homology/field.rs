use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// A prime below `2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u64) -> Result<Self, Error> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Coefficient field for homology: `ℚ` or `GF(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum FieldSpec {
    #[default]
    Rational,
    Gf(Prime),
}

impl FieldSpec {
    pub fn gf(p: u64) -> Result<Self, Error> {
        Prime::new(p).map(FieldSpec::Gf)
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Gf(p) => p.get(),
        }
    }

    pub(crate) fn is_gf2(self) -> bool {
        self.characteristic() == 2
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("rational"),
            FieldSpec::Gf(p) => write!(f, "gf:{}", p.get()),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `rational` or `gf:P`.
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        let p = s
            .strip_prefix("gf:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::UnknownField(s.to_owned()))?;
        FieldSpec::gf(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
