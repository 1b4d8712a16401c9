//! The central extensions `H_n` of `(Z/2)^n` and `G_n` of the wreath product.
//!
//! `H_n` is the set of pairs `(a, b) ∈ (Z/2)^n × Z/2` with
//! `(a₁,b₁)(a₂,b₂) = (a₁+a₂, b₁+b₂+Σ_{i<j} a_{1,i} a_{2,j})`, generated by
//! `x_i = (e_i, 0)` and the central `ε = (0, 1)`. `G_n = H_n ⋊ S_n` for the
//! action determined on generators by `σ(x_i) = x_{σ(i)}`, `σ(ε) = ε`.
//!
//! On a general pair that action is not just a coordinate permutation: since
//! it must be an automorphism, `σ(a, b) = (σ·a, b + inv_σ(a))` where
//! `inv_σ(a)` counts the pairs `i < j` in the support of `a` that `σ` puts
//! out of order. On generators the correction vanishes, matching the
//! generator formula.

use std::fmt;

use crate::error::Error;
use crate::perm::{check_degree, Permutation};
use crate::signed::{bits, permute_mask, SignedPerm};

/// Parity of `Σ_{i<j} a_{1,i} a_{2,j}`.
pub(crate) fn pair_bit(a1: u64, a2: u64) -> bool {
    let mut parity = 0u32;
    for i in bits(a1) {
        if i < 63 {
            parity ^= (a2 >> (i + 1)).count_ones();
        }
    }
    parity & 1 == 1
}

/// Parity of `#{i < j, both in the support of mask, with p(i) > p(j)}`.
fn inversion_parity(p: &Permutation, mask: u64) -> bool {
    let idx: Vec<usize> = bits(mask).collect();
    let mut inversions = 0usize;
    for s in 0..idx.len() {
        for t in s + 1..idx.len() {
            if p.apply(idx[s]) > p.apply(idx[t]) {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// An element of `G_n`: vector part, central bit, and permutation part.
/// Elements with identity permutation part form `H_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtElement {
    vec: u64,
    central: bool,
    perm: Permutation,
}

impl ExtElement {
    pub fn new(vec: u64, central: bool, perm: Permutation) -> Result<Self, Error> {
        let n = perm.degree();
        if n < 64 && (vec >> n) != 0 {
            return Err(Error::SignBitsBeyondDegree(n));
        }
        Ok(ExtElement { vec, central, perm })
    }

    pub fn unit(n: usize) -> Result<Self, Error> {
        Ok(ExtElement {
            vec: 0,
            central: false,
            perm: Permutation::identity(n)?,
        })
    }

    /// The central generator `ε = (0, 1, id)`.
    pub fn eps(n: usize) -> Result<Self, Error> {
        Ok(ExtElement {
            vec: 0,
            central: true,
            perm: Permutation::identity(n)?,
        })
    }

    /// The generator `x_i = (e_i, 0, id)`, `i` 1-based.
    pub fn x(n: usize, i: usize) -> Result<Self, Error> {
        check_degree(n)?;
        if i == 0 || i > n {
            return Err(Error::TokenOutOfRange(i, n));
        }
        Ok(ExtElement {
            vec: 1u64 << (i - 1),
            central: false,
            perm: Permutation::identity(n)?,
        })
    }

    /// An element of the subgroup `H_n`.
    pub fn from_h(n: usize, vec: u64, central: bool) -> Result<Self, Error> {
        ExtElement::new(vec, central, Permutation::identity(n)?)
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn vec(&self) -> u64 {
        self.vec
    }

    pub fn central(&self) -> bool {
        self.central
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_unit(&self) -> bool {
        self.vec == 0 && !self.central && self.perm.is_identity()
    }

    pub fn is_h_element(&self) -> bool {
        self.perm.is_identity()
    }

    /// Product in `G_n`: `(h₁, σ₁)(h₂, σ₂) = (h₁ ·_H σ₁(h₂), σ₁σ₂)`.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let acted_vec = permute_mask(&self.perm, other.vec);
        let acted_central = other.central ^ inversion_parity(&self.perm, other.vec);
        Ok(ExtElement {
            vec: self.vec ^ acted_vec,
            central: self.central ^ acted_central ^ pair_bit(self.vec, acted_vec),
            perm: self.perm.compose(&other.perm)?,
        })
    }

    /// Product in `H_n`; both operands must have identity permutation part.
    pub fn hn_mul(&self, other: &Self) -> Result<Self, Error> {
        if !self.is_h_element() || !other.is_h_element() {
            return Err(Error::NonIdentityPerm);
        }
        self.mul(other)
    }

    /// Inverse in `H_n`: `(a, b)⁻¹ = (a, b + Σ_{i<j} a_i a_j)`.
    pub fn hn_inv(&self) -> Result<Self, Error> {
        if !self.is_h_element() {
            return Err(Error::NonIdentityPerm);
        }
        Ok(self.inverse())
    }

    pub fn inverse(&self) -> Self {
        let pinv = self.perm.inverse();
        ExtElement {
            vec: permute_mask(&pinv, self.vec),
            central: self.central
                ^ pair_bit(self.vec, self.vec)
                ^ inversion_parity(&pinv, self.vec),
            perm: pinv,
        }
    }

    /// The canonical section of the projection to the wreath product:
    /// `(a, σ) ↦ (a, 0, σ)`. The two lifts of `g` are `lift(g)` and
    /// `ε·lift(g)`.
    pub fn lift(g: &SignedPerm) -> Self {
        ExtElement {
            vec: g.signs(),
            central: false,
            perm: g.perm().clone(),
        }
    }

    /// Project to the wreath product by dropping the central bit.
    pub fn project(&self) -> SignedPerm {
        SignedPerm::new(self.vec, self.perm.clone()).expect("vec within degree")
    }

    /// All `2^{n+1}·n!` elements of `G_n`.
    pub fn enumerate(n: usize) -> Result<impl Iterator<Item = ExtElement>, Error> {
        check_degree(n)?;
        Ok(SignedPerm::enumerate(n)?.flat_map(|g| {
            [false, true].into_iter().map(move |central| ExtElement {
                vec: g.signs(),
                central,
                perm: g.perm().clone(),
            })
        }))
    }

    /// All `2^{n+1}` elements of `H_n`.
    pub fn enumerate_h(n: usize) -> Result<impl Iterator<Item = ExtElement>, Error> {
        check_degree(n)?;
        let max_mask: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok((0..=max_mask).flat_map(move |vec| {
            [false, true]
                .into_iter()
                .map(move |central| ExtElement::from_h(n, vec, central).unwrap())
        }))
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtElement[{}]", self)
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}; eps:{}",
            self.project(),
            if self.central { 1 } else { 0 }
        )
    }
}

/// Cocycle of the canonical section: `c(g, h)` with
/// `lift(g)·lift(h) = ε^{c(g,h)}·lift(gh)`.
pub fn cocycle(g: &SignedPerm, h: &SignedPerm) -> Result<bool, Error> {
    let product = ExtElement::lift(g).mul(&ExtElement::lift(h))?;
    Ok(product.central)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> ExtElement {
        ExtElement::x(n, i).unwrap()
    }

    #[test]
    fn h_law_on_generators() {
        let n = 2;
        // x₁·x₂ = (e₁+e₂, 1), x₂·x₁ = (e₁+e₂, 0)
        let a = x(n, 1).hn_mul(&x(n, 2)).unwrap();
        assert_eq!((a.vec(), a.central()), (0b11, true));
        let b = x(n, 2).hn_mul(&x(n, 1)).unwrap();
        assert_eq!((b.vec(), b.central()), (0b11, false));
    }

    #[test]
    fn h_unit_is_neutral() {
        let unit = ExtElement::unit(4).unwrap();
        for h in ExtElement::enumerate_h(4).unwrap() {
            assert_eq!(unit.hn_mul(&h).unwrap(), h);
            assert_eq!(h.hn_mul(&unit).unwrap(), h);
        }
    }

    #[test]
    fn hn_mul_rejects_permutation_parts() {
        let g = ExtElement::new(0, false, Permutation::from_cycles(2, &[vec![1, 2]]).unwrap())
            .unwrap();
        let h = ExtElement::unit(2).unwrap();
        assert_eq!(g.hn_mul(&h), Err(Error::NonIdentityPerm));
        assert_eq!(h.hn_inv(), Ok(h.clone()));
        assert_eq!(g.hn_inv(), Err(Error::NonIdentityPerm));
    }

    #[test]
    fn generators_are_involutions() {
        for i in 1..=5 {
            let xi = x(5, i);
            assert_eq!(xi.hn_inv().unwrap(), xi);
            assert!(xi.hn_mul(&xi).unwrap().is_unit());
        }
        let eps = ExtElement::eps(5).unwrap();
        assert_eq!(eps.hn_inv().unwrap(), eps);
        assert!(eps.hn_mul(&eps).unwrap().is_unit());
    }

    #[test]
    fn hn_inv_support_pair_example() {
        // inv((e₁+e₂, 0)) = (e₁+e₂, 1)
        let g = ExtElement::from_h(2, 0b11, false).unwrap();
        let inv = g.hn_inv().unwrap();
        assert_eq!((inv.vec(), inv.central()), (0b11, true));
        assert!(g.hn_mul(&inv).unwrap().is_unit());
    }

    #[test]
    fn relations_hold_for_all_indices() {
        let n = 16;
        let eps = ExtElement::eps(n).unwrap();
        for i in 1..=n {
            // (1): x_i² = ε² = 1
            assert!(x(n, i).mul(&x(n, i)).unwrap().is_unit());
            // (3): ε x_i = x_i ε
            assert_eq!(
                eps.mul(&x(n, i)).unwrap(),
                x(n, i).mul(&eps).unwrap()
            );
            for j in 1..=n {
                if i == j {
                    continue;
                }
                // (2): x_i x_j = ε x_j x_i
                let lhs = x(n, i).mul(&x(n, j)).unwrap();
                let rhs = eps.mul(&x(n, j)).unwrap().mul(&x(n, i)).unwrap();
                assert_eq!(lhs, rhs, "i={i}, j={j}");
            }
        }
        assert!(eps.mul(&eps).unwrap().is_unit());
    }

    #[test]
    fn conjugation_permutes_generators() {
        // (1 2)·x₁·(1 2)⁻¹ = x₂
        let s = ExtElement::new(0, false, Permutation::from_cycles(2, &[vec![1, 2]]).unwrap())
            .unwrap();
        let conj = s.mul(&x(2, 1)).unwrap().mul(&s.inverse()).unwrap();
        assert_eq!(conj, x(2, 2));
    }

    #[test]
    fn eps_is_central_in_g2() {
        let eps = ExtElement::eps(2).unwrap();
        for g in ExtElement::enumerate(2).unwrap() {
            assert_eq!(eps.mul(&g).unwrap(), g.mul(&eps).unwrap());
        }
    }

    #[test]
    fn inverse_cancels_in_g3() {
        for g in ExtElement::enumerate(3).unwrap() {
            assert!(g.mul(&g.inverse()).unwrap().is_unit());
            assert!(g.inverse().mul(&g).unwrap().is_unit());
        }
    }

    #[test]
    fn group_orders_by_enumeration() {
        for n in 1..=4 {
            let factorial: usize = (1..=n).product();
            assert_eq!(
                ExtElement::enumerate_h(n).unwrap().count(),
                1 << (n + 1),
                "|H_{n}|"
            );
            assert_eq!(
                ExtElement::enumerate(n).unwrap().count(),
                (1 << (n + 1)) * factorial,
                "|G_{n}|"
            );
        }
    }

    #[test]
    fn lift_projects_back() {
        for g in SignedPerm::enumerate(3).unwrap() {
            assert_eq!(ExtElement::lift(&g).project(), g);
        }
    }

    #[test]
    fn projection_kernel_is_unit_and_eps() {
        let unit = SignedPerm::identity(3).unwrap();
        let kernel: Vec<_> = ExtElement::enumerate(3)
            .unwrap()
            .filter(|g| g.project() == unit)
            .collect();
        assert_eq!(kernel.len(), 2);
        assert!(kernel.contains(&ExtElement::unit(3).unwrap()));
        assert!(kernel.contains(&ExtElement::eps(3).unwrap()));
    }

    #[test]
    fn projection_is_homomorphism_on_g2() {
        let elems: Vec<_> = ExtElement::enumerate(2).unwrap().collect();
        for a in &elems {
            for b in &elems {
                assert_eq!(
                    a.mul(b).unwrap().project(),
                    a.project().mul(&b.project()).unwrap()
                );
            }
        }
    }

    #[test]
    fn cocycle_normalized_and_generator_value() {
        let unit = SignedPerm::identity(2).unwrap();
        let x1 = SignedPerm::from_signs(2, 0b01).unwrap();
        let x2 = SignedPerm::from_signs(2, 0b10).unwrap();
        assert_eq!(cocycle(&unit, &x2), Ok(false));
        assert_eq!(cocycle(&x2, &unit), Ok(false));
        assert_eq!(cocycle(&x1, &x2), Ok(true));
    }

    #[test]
    fn cocycle_identity_over_all_of_b2() {
        let elems: Vec<_> = SignedPerm::enumerate(2).unwrap().collect();
        for g in &elems {
            for h in &elems {
                for k in &elems {
                    let gh = g.mul(h).unwrap();
                    let hk = h.mul(k).unwrap();
                    let lhs = cocycle(g, h).unwrap() ^ cocycle(&gh, k).unwrap();
                    let rhs = cocycle(h, k).unwrap() ^ cocycle(g, &hk).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn cocycle_degree_mismatch() {
        let g = SignedPerm::identity(2).unwrap();
        let h = SignedPerm::identity(3).unwrap();
        assert_eq!(cocycle(&g, &h), Err(Error::DegreeMismatch(2, 3)));
    }
}
