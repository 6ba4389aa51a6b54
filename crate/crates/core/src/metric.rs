//! The ultrametric `d(X, Y) = 2^-r`, `r` the least radius at which disks differ.

use std::cmp::Ordering;
use std::fmt;

use crate::canonical::Gcg;
use crate::error::{Error, Result};

/// Either `0` or `2^-r`, stored exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Distance {
    Zero,
    /// `2^-r`.
    Pow(usize),
}

impl Distance {
    pub fn radius(self) -> Option<usize> {
        match self {
            Distance::Zero => None,
            Distance::Pow(r) => Some(r),
        }
    }

    /// Lossy conversion for display and plotting.
    pub fn as_f64(self) -> f64 {
        match self {
            Distance::Zero => 0.0,
            Distance::Pow(r) => 0.5f64.powi(r as i32),
        }
    }

    /// Whether `self < 2^-k`.
    pub fn below_pow(self, k: usize) -> bool {
        self < Distance::Pow(k)
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Zero, Distance::Zero) => Ordering::Equal,
            (Distance::Zero, _) => Ordering::Less,
            (_, Distance::Zero) => Ordering::Greater,
            // a larger radius is a smaller distance
            (Distance::Pow(a), Distance::Pow(b)) => b.cmp(a),
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Zero => f.write_str("0"),
            Distance::Pow(r) => write!(f, "2^-{r}"),
        }
    }
}

/// The least `r` with `disk(X, r) ≠ disk(Y, r)`, or `None` if `X = Y`.
pub fn min_differing_radius(x: &Gcg, y: &Gcg) -> Result<Option<usize>> {
    if x.signature() != y.signature() {
        return Err(Error::SignatureMismatch);
    }
    if x == y {
        return Ok(None);
    }
    // Past both eccentricities the disks are the graphs themselves, which differ.
    let top = x.eccentricity().max(y.eccentricity());
    for r in 0..=top {
        if x.disk(r) != y.disk(r) {
            return Ok(Some(r));
        }
    }
    Ok(Some(top))
}

pub fn distance(x: &Gcg, y: &Gcg) -> Result<Distance> {
    Ok(match min_differing_radius(x, y)? {
        None => Distance::Zero,
        Some(r) => Distance::Pow(r),
    })
}
