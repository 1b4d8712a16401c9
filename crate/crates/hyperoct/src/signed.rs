//! Signed permutations: the wreath product `(Z/2)^n ⋊ S_n`.

use std::fmt;

use crate::error::Error;
use crate::perm::{check_degree, Permutation};

/// Iterate the 0-based positions of the set bits of a mask.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    std::iter::successors(
        if mask == 0 { None } else { Some(mask) },
        |&m| {
            let next = m & (m - 1);
            if next == 0 {
                None
            } else {
                Some(next)
            }
        },
    )
    .map(|m| m.trailing_zeros() as usize)
}

/// Permute the coordinates of a sign vector: bit `p(i)` of the result equals
/// bit `i` of `mask`.
pub fn permute_mask(p: &Permutation, mask: u64) -> u64 {
    bits(mask).fold(0u64, |out, i| out | (1u64 << p.apply(i)))
}

/// An element of the wreath product: a sign vector in `(Z/2)^n` plus a
/// permutation of `{1..n}`.
///
/// The product is the semidirect law
/// `(a₁, σ₁)(a₂, σ₂) = (a₁ + σ₁·a₂, σ₁σ₂)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    signs: u64,
    perm: Permutation,
}

impl SignedPerm {
    pub fn new(signs: u64, perm: Permutation) -> Result<Self, Error> {
        let n = perm.degree();
        if n < 64 && (signs >> n) != 0 {
            return Err(Error::SignBitsBeyondDegree(n));
        }
        Ok(SignedPerm { signs, perm })
    }

    pub fn identity(n: usize) -> Result<Self, Error> {
        Ok(SignedPerm {
            signs: 0,
            perm: Permutation::identity(n)?,
        })
    }

    /// Embed a permutation with zero sign vector.
    pub fn from_perm(perm: Permutation) -> Self {
        SignedPerm { signs: 0, perm }
    }

    /// A pure sign vector with identity permutation part.
    pub fn from_signs(n: usize, signs: u64) -> Result<Self, Error> {
        SignedPerm::new(signs, Permutation::identity(n)?)
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn signs(&self) -> u64 {
        self.signs
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.signs == 0 && self.perm.is_identity()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(SignedPerm {
            signs: self.signs ^ permute_mask(&self.perm, other.signs),
            perm: self.perm.compose(&other.perm)?,
        })
    }

    pub fn inverse(&self) -> Self {
        let pinv = self.perm.inverse();
        SignedPerm {
            signs: permute_mask(&pinv, self.signs),
            perm: pinv,
        }
    }

    pub fn is_commuting(&self, other: &Self) -> Result<bool, Error> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    /// Conjugate: `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self, Error> {
        g.mul(self)?.mul(&g.inverse())
    }

    /// All `2ⁿ·n!` elements of degree `n`.
    pub fn enumerate(n: usize) -> Result<impl Iterator<Item = SignedPerm>, Error> {
        check_degree(n)?;
        let max_mask: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Permutation::all(n)?.flat_map(move |perm| {
            (0..=max_mask).map(move |signs| SignedPerm {
                signs,
                perm: perm.clone(),
            })
        }))
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPerm[{}]", self)
    }
}

impl fmt::Display for SignedPerm {
    /// The literal syntax accepted by the parser: `cycles:(1 2); signs:0101`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cycles:{}; signs:", self.perm)?;
        for i in 0..self.degree() {
            write!(f, "{}", (self.signs >> i) & 1)?;
        }
        Ok(())
    }
}
