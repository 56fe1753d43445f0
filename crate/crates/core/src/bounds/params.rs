use std::fmt;

use crate::{Error, Result};

/// Which side of the design problem a quantity belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Coverings: every pair in at least λ blocks; lower bounds on C_λ(v,k).
    Cover,
    /// Packings: every pair in at most λ blocks; upper bounds on D_λ(v,k).
    Pack,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Cover => "cover",
            Side::Pack => "pack",
        })
    }
}

/// A non-trivial parameter set `(v, k, λ)` with both replication
/// decompositions precomputed:
///
/// * covering: `λ(v−1) = r_cov(k−1) − d_cov`, `0 ≤ d_cov < k−1`
/// * packing:  `λ(v−1) = r_pack(k−1) + d_pack`, `0 ≤ d_pack < k−1`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParamSet {
    v: i64,
    k: i64,
    lambda: i64,
    r_cov: i64,
    d_cov: i64,
    r_pack: i64,
    d_pack: i64,
}

impl ParamSet {
    pub fn new(v: i64, k: i64, lambda: i64) -> Result<Self> {
        if k < 3 || k >= v || lambda < 1 {
            return Err(Error::TrivialParameters { v, k, lambda });
        }
        let total = lambda
            .checked_mul(v - 1)
            .ok_or_else(|| Error::InvalidArgument("lambda*(v-1) overflows".into()))?;
        let r_pack = total / (k - 1);
        let d_pack = total - r_pack * (k - 1);
        let (r_cov, d_cov) = if d_pack == 0 {
            (r_pack, 0)
        } else {
            (r_pack + 1, (r_pack + 1) * (k - 1) - total)
        };
        Ok(ParamSet {
            v,
            k,
            lambda,
            r_cov,
            d_cov,
            r_pack,
            d_pack,
        })
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    pub fn r_cov(&self) -> i64 {
        self.r_cov
    }

    pub fn d_cov(&self) -> i64 {
        self.d_cov
    }

    pub fn n_cov(&self) -> i64 {
        self.r_cov - self.lambda
    }

    pub fn r_pack(&self) -> i64 {
        self.r_pack
    }

    pub fn d_pack(&self) -> i64 {
        self.d_pack
    }

    pub fn n_pack(&self) -> i64 {
        self.r_pack - self.lambda
    }

    /// `(r, d, n)` under the convention of `side`.
    pub fn rdn(&self, side: Side) -> (i64, i64, i64) {
        match side {
            Side::Cover => (self.r_cov, self.d_cov, self.n_cov()),
            Side::Pack => (self.r_pack, self.d_pack, self.n_pack()),
        }
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.v, self.k, self.lambda)
    }
}
