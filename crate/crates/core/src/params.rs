//! Structure constants of the tower and their validation.
//!
//! The quantum parameter `q` is never represented: every combinatorial
//! statement depends on it only through the quantum characteristic `e`.
//! Likewise the primitive `p`-th root of unity only contributes its order.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Largest supported `n`. Column memberships are handled as 64-bit masks.
pub const MAX_N: u32 = 64;

/// Raw, unchecked parameters as they arrive from a config file or flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraParams {
    pub r: u32,
    pub p: u32,
    pub n: u32,
    /// Quantum characteristic. `0` means `q` has infinite order.
    pub e: u32,
    /// One charge `j_l` per charge column `l < d = r/p`.
    pub charges: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("ZeroParameter: {field} must be positive")]
    ZeroParameter { field: &'static str },
    #[error("TooLarge: n={n} exceeds the supported maximum {max}")]
    TooLarge { n: u32, max: u32 },
    #[error("NotDivisible: p={p} does not divide r={r}")]
    NotDivisible { r: u32, p: u32 },
    #[error("BadQuantumChar: e={e} is excluded (need e = 0 or e >= 4)")]
    BadQuantumChar { e: u32 },
    #[error("ChargeCount: expected d={expected} charges, found {found}")]
    ChargeCount { expected: u32, found: usize },
    #[error("ChargeCollision: charges j_{first} and j_{second} violate {reason}")]
    ChargeCollision {
        first: usize,
        second: usize,
        reason: CollisionKind,
    },
}

impl ParamsError {
    /// Stable machine-readable tag (the variant name).
    pub fn kind(&self) -> &'static str {
        match self {
            ParamsError::ZeroParameter { .. } => "ZeroParameter",
            ParamsError::TooLarge { .. } => "TooLarge",
            ParamsError::NotDivisible { .. } => "NotDivisible",
            ParamsError::BadQuantumChar { .. } => "BadQuantumChar",
            ParamsError::ChargeCount { .. } => "ChargeCount",
            ParamsError::ChargeCollision { .. } => "ChargeCollision",
        }
    }
}

/// Which separation condition two charges violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CollisionKind {
    /// `j_l - j_l'` is `0` or `±1`: first-row and second-row residues collide.
    AdjacentResidues,
    /// `p (j_l - j_l')` lies in `{0, 1, 2}` for one of the two orderings.
    ParameterRatio,
}

impl fmt::Display for CollisionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CollisionKind::AdjacentResidues => f.write_str("j_l - j_l' not in {0, 1, -1}"),
            CollisionKind::ParameterRatio => f.write_str("p (j_l - j_l') not in {0, 1, 2}"),
        }
    }
}

/// Parameters that passed [`validate_params`]. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValidatedParams {
    r: u32,
    p: u32,
    n: u32,
    e: u32,
    charges: Vec<i64>,
}

/// Reduce `j` into the canonical representative modulo `e` (identity for `e = 0`).
pub fn reduce_mod(j: i64, e: u32) -> i64 {
    if e == 0 {
        j
    } else {
        j.rem_euclid(e as i64)
    }
}

pub fn validate_params(raw: &AlgebraParams) -> Result<ValidatedParams, ParamsError> {
    for (field, v) in [("r", raw.r), ("p", raw.p), ("n", raw.n)] {
        if v == 0 {
            return Err(ParamsError::ZeroParameter { field });
        }
    }
    if raw.n > MAX_N {
        return Err(ParamsError::TooLarge {
            n: raw.n,
            max: MAX_N,
        });
    }
    if !raw.r.is_multiple_of(raw.p) {
        return Err(ParamsError::NotDivisible { r: raw.r, p: raw.p });
    }
    if (1..=3).contains(&raw.e) {
        return Err(ParamsError::BadQuantumChar { e: raw.e });
    }
    let d = raw.r / raw.p;
    if raw.charges.len() != d as usize {
        return Err(ParamsError::ChargeCount {
            expected: d,
            found: raw.charges.len(),
        });
    }
    let charges: Vec<i64> = raw.charges.iter().map(|&j| reduce_mod(j, raw.e)).collect();
    let hits = |x: i64, forbidden: &[i64]| {
        let x = reduce_mod(x, raw.e);
        forbidden.iter().any(|&f| reduce_mod(f, raw.e) == x)
    };
    for first in 0..charges.len() {
        for second in first + 1..charges.len() {
            let delta = charges[first] - charges[second];
            if hits(delta, &[0, 1, -1]) {
                return Err(ParamsError::ChargeCollision {
                    first,
                    second,
                    reason: CollisionKind::AdjacentResidues,
                });
            }
            let scaled = delta * raw.p as i64;
            if hits(scaled, &[0, 1, 2]) || hits(-scaled, &[0, 1, 2]) {
                return Err(ParamsError::ChargeCollision {
                    first,
                    second,
                    reason: CollisionKind::ParameterRatio,
                });
            }
        }
    }
    Ok(ValidatedParams {
        r: raw.r,
        p: raw.p,
        n: raw.n,
        e: raw.e,
        charges,
    })
}

impl AlgebraParams {
    pub fn validate(&self) -> Result<ValidatedParams, ParamsError> {
        validate_params(self)
    }
}

impl ValidatedParams {
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.r / self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    /// Charge `j_l` of charge column `l`.
    pub fn charge(&self, l: u32) -> i64 {
        self.charges[l as usize]
    }

    pub fn reduce(&self, j: i64) -> i64 {
        reduce_mod(j, self.e)
    }

    /// True when `j` is one of the charges, i.e. `(Lambda, alpha_(i,j)) > 0`
    /// for every layer `i`.
    pub fn is_charged(&self, j: i64) -> bool {
        let j = self.reduce(j);
        self.charges.contains(&j)
    }

    pub fn to_raw(&self) -> AlgebraParams {
        AlgebraParams {
            r: self.r,
            p: self.p,
            n: self.n,
            e: self.e,
            charges: self.charges.clone(),
        }
    }

    /// Same structure constants with a different number of nodes.
    pub fn with_n(&self, n: u32) -> Result<ValidatedParams, ParamsError> {
        let mut raw = self.to_raw();
        raw.n = n;
        validate_params(&raw)
    }

    /// The level-`d` data seen by the layer-0 quotient: `r = d`, `p = 1`,
    /// same charges and `e`.
    ///
    /// Residues of layer-0 nodes are unchanged, so the adjacency separation
    /// still holds. The ratio condition is not re-checked: it is a statement
    /// about the `p`-th powers of the original parameters.
    pub fn layer_zero_restriction(&self) -> ValidatedParams {
        ValidatedParams {
            r: self.d(),
            p: 1,
            n: self.n,
            e: self.e,
            charges: self.charges.clone(),
        }
    }
}

impl fmt::Display for ValidatedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r={} p={} n={} e={} charges={:?}",
            self.r, self.p, self.n, self.e, self.charges
        )
    }
}
