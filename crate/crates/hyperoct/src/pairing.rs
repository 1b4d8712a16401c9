//! The pairing φ on commuting pairs of signed permutations.
//!
//! `φ(σ, τ)` is the ε-exponent of the commutator of lifts in the central
//! extension; it is independent of the choice of lifts, symmetric, and a
//! homomorphism in each slot over the centralizer of the other. For `σ` a
//! permutation it has the closed form `Σ_r λ_r (d_r − 1)` over the cycles of
//! `σ`, where `τ = τ′v` is the unique centralizer decomposition with `v`
//! constant on cycles. The two evaluation routes are kept independent: the
//! direct commutator never consults the decomposition and vice versa.

use crate::error::Error;
use crate::extension::ExtElement;
use crate::perm::{CycleDecomposition, Permutation};
use crate::signed::{permute_mask, SignedPerm};

/// Direct evaluation: the ε-exponent of `[lift(σ), lift(τ)]` in `G_n`.
/// Defined only on commuting pairs; anything else is a caller error.
pub fn phi(sigma: &SignedPerm, tau: &SignedPerm) -> Result<bool, Error> {
    if !sigma.is_commuting(tau)? {
        return Err(Error::NonCommuting);
    }
    let s = ExtElement::lift(sigma);
    let t = ExtElement::lift(tau);
    let commutator = s.mul(&t)?.mul(&s.inverse())?.mul(&t.inverse())?;
    debug_assert!(commutator.project().is_identity());
    Ok(commutator.central())
}

/// The unique decomposition `τ = τ′·v` of a centralizer element of `σ`,
/// with `τ′ ∈ C_{S_n}(σ)` and `v` constant on the cycles of `σ`, recorded as
/// one coefficient `λ_r` per canonical cycle.
#[derive(Clone, Debug)]
pub struct CentralizerDecomposition {
    tau_prime: Permutation,
    lambdas: Vec<bool>,
    sigma_cycles: CycleDecomposition,
}

impl CentralizerDecomposition {
    pub fn tau_prime(&self) -> &Permutation {
        &self.tau_prime
    }

    /// λ coefficients, indexed by the canonical cycle order of `σ`.
    pub fn lambdas(&self) -> &[bool] {
        &self.lambdas
    }

    pub fn sigma_cycles(&self) -> &CycleDecomposition {
        &self.sigma_cycles
    }

    /// The σ-invariant vector `v = Σ_r λ_r (e_{i_{r,1}} + ⋯ + e_{i_{r,d_r}})`.
    pub fn vector(&self) -> u64 {
        self.lambdas
            .iter()
            .enumerate()
            .filter(|(_, &l)| l)
            .fold(0u64, |m, (r, _)| m | self.sigma_cycles.cycle_mask(r))
    }

    /// Rebuild `τ = τ′·v`.
    pub fn reassemble(&self) -> SignedPerm {
        let n = self.sigma_cycles.degree();
        let tp = SignedPerm::from_perm(self.tau_prime.clone());
        let v = SignedPerm::from_signs(n, self.vector()).expect("vector within degree");
        tp.mul(&v).expect("equal degrees")
    }
}

/// Decompose `τ ∈ C_{B_n}(σ)` as `τ′·v`. For `τ = (a, π)` this is
/// `τ′ = π` and `v = π⁻¹·a`; commutation with `σ` makes `v` constant on the
/// cycles of `σ`.
pub fn decompose(
    sigma: &Permutation,
    tau: &SignedPerm,
) -> Result<CentralizerDecomposition, Error> {
    let embedded = SignedPerm::from_perm(sigma.clone());
    if !embedded.is_commuting(tau)? {
        return Err(Error::NonCommuting);
    }
    let tau_prime = tau.perm().clone();
    let v = permute_mask(&tau_prime.inverse(), tau.signs());
    let sigma_cycles = sigma.cycle_decomposition();
    let lambdas: Vec<bool> = sigma_cycles
        .cycles()
        .iter()
        .enumerate()
        .map(|(r, cycle)| {
            let mask = sigma_cycles.cycle_mask(r);
            let on = v & mask;
            debug_assert!(on == 0 || on == mask, "v not constant on cycle {}", r);
            cycle.iter().any(|&i| (v >> i) & 1 == 1)
        })
        .collect();
    Ok(CentralizerDecomposition {
        tau_prime,
        lambdas,
        sigma_cycles,
    })
}

/// Closed-form evaluation `Σ_r λ_r (d_r − 1) mod 2` via the centralizer
/// decomposition; agrees with `phi` everywhere both are defined.
pub fn phi_closed_form(sigma: &Permutation, tau: &SignedPerm) -> Result<bool, Error> {
    let dec = decompose(sigma, tau)?;
    let mut parity = false;
    for (r, cycle) in dec.sigma_cycles().cycles().iter().enumerate() {
        if dec.lambdas()[r] && (cycle.len() - 1) % 2 == 1 {
            parity = !parity;
        }
    }
    Ok(parity)
}

/// The single-cycle evaluation: for `σ` a `k`-cycle and `τ` the indicator
/// vector of its support, `φ = (k−1) mod 2`; for `σ` fixing the support of
/// `τ` pointwise, `φ = 0`.
pub fn phi_acycle(sigma: &Permutation, tau: &SignedPerm) -> Result<bool, Error> {
    if sigma.degree() != tau.degree() {
        return Err(Error::DegreeMismatch(sigma.degree(), tau.degree()));
    }
    if !tau.perm().is_identity() {
        return Err(Error::SupportMismatch);
    }
    let support = tau.signs();
    if support == 0 {
        return Ok(false);
    }
    let fixes_support = (0..sigma.degree())
        .filter(|&i| (support >> i) & 1 == 1)
        .all(|i| sigma.apply(i) == i);
    if fixes_support {
        return Ok(false);
    }
    let cycles = sigma.cycle_decomposition();
    let moving: Vec<usize> = (0..cycles.cycle_count())
        .filter(|&r| cycles.cycles()[r].len() > 1)
        .collect();
    match moving.as_slice() {
        [r] if cycles.cycle_mask(*r) == support => {
            Ok((cycles.cycles()[*r].len() - 1) % 2 == 1)
        }
        _ => Err(Error::SupportMismatch),
    }
}

/// The factorization of a centralizer element along the orbits of its
/// permutation part acting by conjugation on the cycles of `σ`.
#[derive(Clone, Debug)]
pub struct OrbitFactorization {
    orbits: Vec<Vec<usize>>,
    index_sets: Vec<Vec<usize>>,
    factors: Vec<SignedPerm>,
}

impl OrbitFactorization {
    /// Orbits as lists of canonical cycle indices, sorted by the smallest
    /// point they cover.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// The 0-based index set `I_y` covered by each orbit; the sets partition
    /// `{0..n-1}`.
    pub fn index_sets(&self) -> &[Vec<usize>] {
        &self.index_sets
    }

    /// The commuting factors `τ′_y v_y` whose product is `τ`.
    pub fn factors(&self) -> &[SignedPerm] {
        &self.factors
    }
}

/// Compute the ⟨τ′⟩-orbits of the cycles of `σ` and the per-orbit factors.
pub fn orbit_factorization(dec: &CentralizerDecomposition) -> OrbitFactorization {
    let cycles = dec.sigma_cycles();
    let n = cycles.degree();
    let tau_prime = dec.tau_prime();
    // conjugation by τ′ sends the cycle through i to the cycle through τ′(i)
    let image_of = |r: usize| cycles.cycle_of(tau_prime.apply(cycles.cycles()[r][0]));
    let mut orbit_of = vec![usize::MAX; cycles.cycle_count()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..cycles.cycle_count() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let mut orbit = vec![start];
        orbit_of[start] = orbits.len();
        let mut cur = image_of(start);
        while cur != start {
            orbit_of[cur] = orbits.len();
            orbit.push(cur);
            cur = image_of(cur);
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    // label orbits by the smallest covered point; canonical cycle order
    // already sorts cycles by smallest element, so sorting orbits by their
    // smallest cycle index achieves this
    orbits.sort_by_key(|orbit| orbit[0]);
    let mut index_sets = Vec::with_capacity(orbits.len());
    let mut factors = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let mut index_set: Vec<usize> = orbit
            .iter()
            .flat_map(|&r| cycles.cycles()[r].iter().copied())
            .collect();
        index_set.sort_unstable();
        let member = |i: usize| index_set.binary_search(&i).is_ok();
        // τ′_y acts as τ′ on I_y and fixes everything else
        let images: Vec<usize> = (0..n)
            .map(|i| if member(i) { tau_prime.apply(i) } else { i })
            .collect();
        let tp_y = Permutation::from_images(images).expect("orbit is τ′-invariant");
        let v_y = orbit
            .iter()
            .filter(|&&r| dec.lambdas()[r])
            .fold(0u64, |m, &r| m | cycles.cycle_mask(r));
        let factor = SignedPerm::from_perm(tp_y)
            .mul(&SignedPerm::from_signs(n, v_y).expect("mask within degree"))
            .expect("equal degrees");
        index_sets.push(index_set);
        factors.push(factor);
    }
    OrbitFactorization {
        orbits,
        index_sets,
        factors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralizer::centralizer_enumerate;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    #[test]
    fn phi_transposition_with_its_indicator() {
        let sigma = SignedPerm::from_perm(perm(2, &[&[1, 2]]));
        let tau = SignedPerm::from_signs(2, 0b11).unwrap();
        assert_eq!(phi(&sigma, &tau), Ok(true));
    }

    #[test]
    fn phi_three_cycle_with_its_indicator() {
        let sigma = SignedPerm::from_perm(perm(3, &[&[1, 2, 3]]));
        let tau = SignedPerm::from_signs(3, 0b111).unwrap();
        assert_eq!(phi(&sigma, &tau), Ok(false));
    }

    #[test]
    fn phi_with_identity_vanishes() {
        let unit = SignedPerm::identity(4).unwrap();
        for g in SignedPerm::enumerate(4).unwrap() {
            assert_eq!(phi(&g, &unit), Ok(false));
        }
    }

    #[test]
    fn phi_rejects_non_commuting_pairs() {
        let a = SignedPerm::from_perm(perm(3, &[&[1, 2]]));
        let b = SignedPerm::from_perm(perm(3, &[&[1, 2, 3]]));
        assert_eq!(phi(&a, &b), Err(Error::NonCommuting));
        assert_eq!(phi_closed_form(a.perm(), &b), Err(Error::NonCommuting));
    }

    #[test]
    fn decompose_pure_vector() {
        let sigma = perm(2, &[&[1, 2]]);
        let tau = SignedPerm::from_signs(2, 0b11).unwrap();
        let dec = decompose(&sigma, &tau).unwrap();
        assert!(dec.tau_prime().is_identity());
        assert_eq!(dec.lambdas(), &[true]);
        assert_eq!(dec.reassemble(), tau);
    }

    #[test]
    fn decompose_pure_permutation() {
        let sigma = perm(4, &[&[1, 2], &[3, 4]]);
        let tau = SignedPerm::from_perm(perm(4, &[&[1, 3], &[2, 4]]));
        let dec = decompose(&sigma, &tau).unwrap();
        assert_eq!(dec.tau_prime(), tau.perm());
        assert_eq!(dec.lambdas(), &[false, false]);
        assert_eq!(dec.reassemble(), tau);
    }

    #[test]
    fn decompose_mixed() {
        let sigma = perm(2, &[&[1, 2]]);
        let tau = SignedPerm::new(0b11, perm(2, &[&[1, 2]])).unwrap();
        let dec = decompose(&sigma, &tau).unwrap();
        assert_eq!(dec.tau_prime(), &perm(2, &[&[1, 2]]));
        assert_eq!(dec.lambdas(), &[true]);
        assert_eq!(dec.reassemble(), tau);
    }

    #[test]
    fn decompose_round_trips_whole_centralizers() {
        for n in 1..=4 {
            for sigma in Permutation::all(n).unwrap() {
                for tau in centralizer_enumerate(&sigma).unwrap() {
                    let dec = decompose(&sigma, &tau).unwrap();
                    assert_eq!(dec.reassemble(), tau, "σ = {sigma}, τ = {tau}");
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let sigma = perm(2, &[&[1, 2]]);
        let tau = SignedPerm::from_signs(2, 0b11).unwrap();
        assert_eq!(phi_closed_form(&sigma, &tau), Ok(true));

        let id = Permutation::identity(4).unwrap();
        for tau in centralizer_enumerate(&id).unwrap() {
            assert_eq!(phi_closed_form(&id, &tau), Ok(false));
        }
    }

    #[test]
    fn closed_form_equals_direct_phi_exhaustively() {
        for n in 1..=4 {
            for sigma in Permutation::all(n).unwrap() {
                let embedded = SignedPerm::from_perm(sigma.clone());
                for tau in centralizer_enumerate(&sigma).unwrap() {
                    assert_eq!(
                        phi_closed_form(&sigma, &tau).unwrap(),
                        phi(&embedded, &tau).unwrap(),
                        "σ = {sigma}, τ = {tau}"
                    );
                }
            }
        }
    }

    #[test]
    fn phi_acycle_values() {
        let tau2 = SignedPerm::from_signs(2, 0b11).unwrap();
        assert_eq!(phi_acycle(&perm(2, &[&[1, 2]]), &tau2), Ok(true));
        let tau3 = SignedPerm::from_signs(3, 0b111).unwrap();
        assert_eq!(phi_acycle(&perm(3, &[&[1, 2, 3]]), &tau3), Ok(false));
        // α = (4 5) fixes {1,2,3} pointwise
        let tau = SignedPerm::from_signs(5, 0b00111).unwrap();
        assert_eq!(phi_acycle(&perm(5, &[&[4, 5]]), &tau), Ok(false));
        // mismatched support
        let alpha = perm(5, &[&[1, 2, 4]]);
        assert_eq!(phi_acycle(&alpha, &tau), Err(Error::SupportMismatch));
    }

    #[test]
    fn phi_acycle_agrees_with_phi() {
        for k in 2..=5 {
            let cycle: Vec<usize> = (1..=k).collect();
            let sigma = Permutation::from_cycles(6, &[cycle]).unwrap();
            let tau = SignedPerm::from_signs(6, (1u64 << k) - 1).unwrap();
            assert_eq!(
                phi_acycle(&sigma, &tau).unwrap(),
                phi(&SignedPerm::from_perm(sigma.clone()), &tau).unwrap()
            );
        }
    }

    #[test]
    fn orbit_factorization_merges_swapped_cycles() {
        let sigma = perm(4, &[&[1, 2], &[3, 4]]);
        let tau = SignedPerm::from_perm(perm(4, &[&[1, 3], &[2, 4]]));
        let fac = orbit_factorization(&decompose(&sigma, &tau).unwrap());
        assert_eq!(fac.orbits(), &[vec![0, 1]]);
        assert_eq!(fac.index_sets(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn orbit_factorization_trivial_action() {
        let sigma = perm(4, &[&[1, 2], &[3, 4]]);
        let tau = SignedPerm::identity(4).unwrap();
        let fac = orbit_factorization(&decompose(&sigma, &tau).unwrap());
        assert_eq!(fac.orbits().len(), 2);
    }

    #[test]
    fn factors_commute_and_multiply_back() {
        for n in 1..=4 {
            for sigma in Permutation::all(n).unwrap() {
                for tau in centralizer_enumerate(&sigma).unwrap() {
                    let fac = orbit_factorization(&decompose(&sigma, &tau).unwrap());
                    let mut product = SignedPerm::identity(n).unwrap();
                    for f in fac.factors() {
                        product = product.mul(f).unwrap();
                    }
                    assert_eq!(product, tau, "σ = {sigma}, τ = {tau}");
                    for a in fac.factors() {
                        for b in fac.factors() {
                            assert!(a.is_commuting(b).unwrap());
                        }
                    }
                    // index sets partition {0..n-1}
                    let mut all: Vec<usize> = fac
                        .index_sets()
                        .iter()
                        .flat_map(|s| s.iter().copied())
                        .collect();
                    all.sort_unstable();
                    assert_eq!(all, (0..n).collect::<Vec<_>>());
                }
            }
        }
    }
}
