//! The closed enumeration of monoids handled by the crate.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// One of the eight plactic-like monoids, plus the auxiliary
/// duplicate-free hypoplactic decider used by the join-taiga case.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum MonoidId {
    LSt,
    RSt,
    MSt,
    JSt,
    LTg,
    RTg,
    MTg,
    JTg,
    HypoDistinct,
}

impl MonoidId {
    /// The eight plactic-like monoids, in a fixed order.
    pub const ALL: [MonoidId; 8] = [
        MonoidId::LSt,
        MonoidId::RSt,
        MonoidId::MSt,
        MonoidId::JSt,
        MonoidId::LTg,
        MonoidId::RTg,
        MonoidId::MTg,
        MonoidId::JTg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MonoidId::LSt => "lSt",
            MonoidId::RSt => "rSt",
            MonoidId::MSt => "mSt",
            MonoidId::JSt => "jSt",
            MonoidId::LTg => "lTg",
            MonoidId::RTg => "rTg",
            MonoidId::MTg => "mTg",
            MonoidId::JTg => "jTg",
            MonoidId::HypoDistinct => "hypoDistinct",
        }
    }
}

impl fmt::Display for MonoidId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MonoidId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "lSt" => Ok(MonoidId::LSt),
            "rSt" => Ok(MonoidId::RSt),
            "mSt" => Ok(MonoidId::MSt),
            "jSt" => Ok(MonoidId::JSt),
            "lTg" => Ok(MonoidId::LTg),
            "rTg" => Ok(MonoidId::RTg),
            "mTg" => Ok(MonoidId::MTg),
            "jTg" => Ok(MonoidId::JTg),
            "hypoDistinct" => Ok(MonoidId::HypoDistinct),
            _ => Err(Error::Domain(format!("unknown monoid {s:?}"))),
        }
    }
}

/// Which of the two combinatorial families a meet-monoid object belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Stalactic,
    Taiga,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "stalactic" | "st" => Ok(Family::Stalactic),
            "taiga" | "tg" => Ok(Family::Taiga),
            _ => Err(Error::Domain(format!("unknown family {s:?}"))),
        }
    }
}
