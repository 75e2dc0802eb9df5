//! The value group `Γ ≅ Z^n` (n ≤ 2) and symbolic fractional ideal classes.
//!
//! Elements of `Γ` are stored as `(i, j)` with `v(t1) = (1,0)` and
//! `v(t2) = (0,1)`. The order is lexicographic with the last coordinate
//! dominant, so `(i, j) ≥ 0` iff `j > 0`, or `j = 0` and `i ≥ 0`.
//!
//! Ideals come in three kinds: the principal ideals `P(i,j) = (t1^i t2^j)`,
//! the infinitely generated `P(j) = ⟨t1^i t2^j : i ∈ Z⟩` (dim 2 only) and the
//! whole field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimension of the local field together with display names of its
/// local parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldConfig {
    pub dim: u8,
    pub params: (String, String),
}

impl FieldConfig {
    pub fn new(dim: u8) -> Result<Self> {
        if dim > 2 {
            return Err(Error::Unsupported { m: 0, dim });
        }
        Ok(FieldConfig {
            dim,
            params: ("t1".to_string(), "t2".to_string()),
        })
    }
}

/// An element of the rank-`dim` value group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Gamma {
    dim: u8,
    c: [i64; 2],
}

impl Gamma {
    pub fn zero(dim: u8) -> Self {
        assert!(dim <= 2, "value group rank is at most 2");
        Gamma { dim, c: [0, 0] }
    }

    /// Rank-one element `i`.
    pub fn d1(i: i64) -> Self {
        Gamma { dim: 1, c: [i, 0] }
    }

    /// Rank-two element `(i, j)`.
    pub fn d2(i: i64, j: i64) -> Self {
        Gamma { dim: 2, c: [i, j] }
    }

    pub fn from_coords(coords: &[i64]) -> Result<Self> {
        match *coords {
            [] => Ok(Gamma::zero(0)),
            [i] => Ok(Gamma::d1(i)),
            [i, j] => Ok(Gamma::d2(i, j)),
            _ => Err(Error::Unsupported {
                m: 0,
                dim: coords.len() as u8,
            }),
        }
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn coords(&self) -> &[i64] {
        &self.c[..self.dim as usize]
    }

    /// The dominant coordinate (`j` in dim 2, the only one in dim 1).
    pub fn outer(&self) -> i64 {
        match self.dim {
            0 => 0,
            d => self.c[d as usize - 1],
        }
    }

    /// The `t1` coordinate in dim 2; zero otherwise.
    pub fn inner(&self) -> i64 {
        if self.dim == 2 {
            self.c[0]
        } else {
            0
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0, 0]
    }

    pub fn scale(self, k: i64) -> Self {
        Gamma {
            dim: self.dim,
            c: [self.c[0] * k, self.c[1] * k],
        }
    }

    /// Keeps only the dominant coordinate: `(i, j) ↦ (0, j)`.
    pub fn outer_part(self) -> Self {
        match self.dim {
            2 => Gamma::d2(0, self.c[1]),
            _ => self,
        }
    }

    pub fn check_dim(&self, other: &Gamma) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }

    /// `t1` in the given dimension; `t` in dim 1.
    pub fn unit_step(dim: u8) -> Self {
        match dim {
            1 => Gamma::d1(1),
            2 => Gamma::d2(1, 0),
            _ => Gamma::zero(dim),
        }
    }

    /// Generator of the dominant coordinate (`t2` in dim 2, `t` in dim 1).
    pub fn outer_step(dim: u8) -> Self {
        match dim {
            1 => Gamma::d1(1),
            2 => Gamma::d2(0, 1),
            _ => Gamma::zero(dim),
        }
    }
}

/// Lexicographic comparison, dominant coordinate first.
pub fn gamma_cmp(a: &Gamma, b: &Gamma) -> Result<Ordering> {
    a.check_dim(b)?;
    Ok(a.cmp(b))
}

impl Ord for Gamma {
    fn cmp(&self, other: &Self) -> Ordering {
        // dim 1 keeps its coordinate in c[0] with c[1] = 0
        self.dim
            .cmp(&other.dim)
            .then(self.c[1].cmp(&other.c[1]))
            .then(self.c[0].cmp(&other.c[0]))
    }
}

impl PartialOrd for Gamma {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Gamma {
    type Output = Gamma;
    fn add(self, rhs: Gamma) -> Gamma {
        debug_assert_eq!(self.dim, rhs.dim);
        Gamma {
            dim: self.dim,
            c: [self.c[0] + rhs.c[0], self.c[1] + rhs.c[1]],
        }
    }
}

impl Sub for Gamma {
    type Output = Gamma;
    fn sub(self, rhs: Gamma) -> Gamma {
        self + (-rhs)
    }
}

impl Neg for Gamma {
    type Output = Gamma;
    fn neg(self) -> Gamma {
        Gamma {
            dim: self.dim,
            c: [-self.c[0], -self.c[1]],
        }
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dim {
            0 => write!(f, "()"),
            1 => write!(f, "{}", self.c[0]),
            _ => write!(f, "({},{})", self.c[0], self.c[1]),
        }
    }
}

/// A symbolic rank-one fractional ideal class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdealClass {
    /// `P(γ) = (t1^i t2^j)`; in dim 1 this is `ℳ_F^i`.
    Principal(Gamma),
    /// `P(j) = ℳ_K^j`, stable under multiplication by `t1`.
    PartialInfinite(i64),
    /// The whole field.
    Full,
}

pub use IdealClass::{Full, PartialInfinite, Principal};

impl IdealClass {
    /// `O = P(0,0)` in dim 2, `O_F` in dim 1.
    pub fn unit(dim: u8) -> Self {
        Principal(Gamma::zero(dim))
    }

    pub fn is_full(&self) -> bool {
        matches!(self, Full)
    }

    /// Checks that this ideal can live over a field of dimension `dim`.
    pub fn check_dim(&self, dim: u8) -> Result<()> {
        match self {
            Principal(g) if g.dim() != dim => Err(Error::DimMismatch {
                expected: dim,
                got: g.dim(),
            }),
            Principal(_) if dim == 0 => Err(Error::Semantic(
                "dim 0 admits only the full field".to_string(),
            )),
            PartialInfinite(_) if dim != 2 => Err(Error::PartialInfiniteDim(dim)),
            _ => Ok(()),
        }
    }

    /// Grade used for vertex types: principal 2, partially infinite 1,
    /// full 0 (dim 2); principal 1, full 0 (dim 1).
    pub fn grade(&self, dim: u8) -> u8 {
        match (self, dim) {
            (Principal(_), 2) => 2,
            (Principal(_), _) => 1,
            (PartialInfinite(_), _) => 1,
            (Full, _) => 0,
        }
    }
}

/// Whether the monomial with valuation `g` lies in `ideal`.
pub fn monomial_member(ideal: &IdealClass, g: &Gamma) -> Result<bool> {
    match ideal {
        Principal(d) => {
            d.check_dim(g)?;
            Ok(*g >= *d)
        }
        PartialInfinite(j) => {
            if g.dim() != 2 {
                return Err(Error::PartialInfiniteDim(g.dim()));
            }
            Ok(g.outer() >= *j)
        }
        Full => Ok(true),
    }
}

/// `I ⊇ J`.
pub fn ideal_includes(i: &IdealClass, j: &IdealClass) -> Result<bool> {
    Ok(match (i, j) {
        (Full, _) => true,
        (_, Full) => false,
        (Principal(d), Principal(e)) => {
            d.check_dim(e)?;
            e >= d
        }
        (PartialInfinite(a), Principal(e)) => {
            if e.dim() != 2 {
                return Err(Error::PartialInfiniteDim(e.dim()));
            }
            e.outer() >= *a
        }
        (Principal(d), PartialInfinite(a)) => {
            if d.dim() != 2 {
                return Err(Error::PartialInfiniteDim(d.dim()));
            }
            *a > d.outer()
        }
        (PartialInfinite(a), PartialInfinite(b)) => b >= a,
    })
}

/// Multiplication by the monomial with valuation `g`.
pub fn ideal_translate(i: &IdealClass, g: &Gamma) -> Result<IdealClass> {
    Ok(match i {
        Principal(d) => {
            d.check_dim(g)?;
            Principal(*d + *g)
        }
        PartialInfinite(j) => {
            if g.dim() != 2 {
                return Err(Error::PartialInfiniteDim(g.dim()));
            }
            PartialInfinite(j + g.outer())
        }
        Full => Full,
    })
}

/// The `𝒪`-module generated by a dim-2 ideal, read over the rank-one
/// field `(K, 𝒪)`.
pub fn oclosure(i: &IdealClass) -> Result<IdealClass> {
    match i {
        Principal(d) if d.dim() == 2 => Ok(Principal(Gamma::d1(d.outer()))),
        Principal(d) => Err(Error::WrongDim {
            required: 2,
            got: d.dim(),
        }),
        PartialInfinite(j) => Ok(Principal(Gamma::d1(*j))),
        Full => Ok(Full),
    }
}
