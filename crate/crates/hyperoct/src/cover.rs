//! Branched-cover combinatorics on a boundary torus.
//!
//! A torus carries a commuting pair `(m, ℓ)` of signed permutations with the
//! meridian `m` in `S_n`. The components of the preimage of the branch
//! component correspond to the orbits of `m`'s cycles under conjugation by
//! `⟨ℓ′⟩`; each component carries a ramification index `e` (the common cycle
//! length), a cycle count `t`, the count `d` of λ=1 cycles, and an α-pairing
//! parity read off the entries of `v + ℓ′(v) + ⋯ + ℓ′^{t−1}(v)`. The torus
//! identity equates the integral `φ(m, ℓ)` with `Σ (e−1)·α` over components.

use crate::error::Error;
use crate::pairing::{decompose, orbit_factorization, phi};
use crate::signed::{permute_mask, SignedPerm};

/// A commuting pair `(m, ℓ)` with `m` a permutation (zero sign vector).
#[derive(Clone, Debug)]
pub struct TorusMonodromy {
    m: SignedPerm,
    l: SignedPerm,
}

impl TorusMonodromy {
    /// Accept a pair whose meridian already has zero sign vector.
    pub fn new(m: SignedPerm, l: SignedPerm) -> Result<Self, Error> {
        if m.signs() != 0 {
            return Err(Error::HypothesisViolation);
        }
        if !m.is_commuting(&l)? {
            return Err(Error::NonCommuting);
        }
        Ok(TorusMonodromy { m, l })
    }

    /// Bring the meridian into `S_n` by conjugating the pair by `(u, id)`
    /// with `u + σ·u = w`, then construct. Solvability is decided cycle by
    /// cycle: the signs of `m` must sum to 0 on each cycle of its
    /// permutation part; an odd sum means the two-fold cover is branched
    /// over that component and the pair is rejected. Among the two solutions
    /// per cycle the one vanishing at the cycle's smallest element is taken,
    /// which makes `u` lexicographically least.
    pub fn normalized(m: &SignedPerm, l: &SignedPerm) -> Result<Self, Error> {
        if !m.is_commuting(l)? {
            return Err(Error::NonCommuting);
        }
        if m.signs() == 0 {
            return TorusMonodromy::new(m.clone(), l.clone());
        }
        let w = m.signs();
        let cycles = m.perm().cycle_decomposition();
        let mut u = 0u64;
        for cycle in cycles.cycles() {
            let sum = cycle.iter().filter(|&&i| (w >> i) & 1 == 1).count();
            if sum % 2 == 1 {
                return Err(Error::HypothesisViolation);
            }
            // u_{σ(i)} = u_i + w_{σ(i)}, starting from 0 at the smallest element
            let mut bit = false;
            for &point in cycle.iter().skip(1) {
                bit ^= (w >> point) & 1 == 1;
                if bit {
                    u |= 1u64 << point;
                }
            }
        }
        let g = SignedPerm::from_signs(m.degree(), u)?;
        let m_fixed = m.conjugate_by(&g)?;
        let l_fixed = l.conjugate_by(&g)?;
        debug_assert_eq!(m_fixed.signs(), 0);
        TorusMonodromy::new(m_fixed, l_fixed)
    }

    pub fn degree(&self) -> usize {
        self.m.degree()
    }

    pub fn meridian(&self) -> &SignedPerm {
        &self.m
    }

    pub fn longitude(&self) -> &SignedPerm {
        &self.l
    }

    /// `∫_T γ = φ(m, ℓ)`.
    pub fn torus_integral(&self) -> bool {
        phi(&self.m, &self.l).expect("pair commutes by construction")
    }

    /// One record per ⟨ℓ′⟩-orbit of the meridian's cycles.
    pub fn components(&self) -> Vec<ComponentData> {
        let dec = decompose(self.m.perm(), &self.l).expect("pair commutes by construction");
        let fac = orbit_factorization(&dec);
        let cycles = dec.sigma_cycles();
        let v = dec.vector();
        let l_prime = dec.tau_prime();
        fac.orbits()
            .iter()
            .zip(fac.index_sets())
            .map(|(orbit, index_set)| {
                let e = cycles.cycles()[orbit[0]].len();
                debug_assert!(orbit.iter().all(|&r| cycles.cycles()[r].len() == e));
                let t = orbit.len();
                let d = orbit.iter().filter(|&&r| dec.lambdas()[r]).count();
                // entries of v + ℓ′(v) + ⋯ + ℓ′^{t−1}(v) on the index set
                let mut sum = 0u64;
                let mut power = v;
                for _ in 0..t {
                    sum ^= power;
                    power = permute_mask(l_prime, power);
                }
                let alpha = (sum >> index_set[0]) & 1 == 1;
                debug_assert!(
                    index_set.iter().all(|&k| ((sum >> k) & 1 == 1) == alpha),
                    "α-pairing depends on the representative index"
                );
                ComponentData {
                    orbit_cycles: orbit.clone(),
                    index_set: index_set.clone(),
                    e,
                    t,
                    d,
                    alpha,
                }
            })
            .collect()
    }

    /// Check `∫_T γ = Σ (e−1)·α` with the two sides computed independently.
    pub fn verify_identity(&self) -> TorusReport {
        let components = self.components();
        let lhs = self.torus_integral();
        let rhs = components
            .iter()
            .fold(false, |acc, c| acc ^ (((c.e - 1) % 2 == 1) && c.alpha));
        TorusReport {
            lhs,
            rhs,
            components,
        }
    }
}

/// Per-component record: orbit, ramification index `e`, cycle count `t`,
/// count `d` of λ=1 cycles, and the α-pairing parity.
#[derive(Clone, Debug)]
pub struct ComponentData {
    /// Canonical cycle indices in the orbit.
    pub orbit_cycles: Vec<usize>,
    /// 0-based points covered by the orbit.
    pub index_set: Vec<usize>,
    pub e: usize,
    pub t: usize,
    pub d: usize,
    pub alpha: bool,
}

/// Both sides of the per-torus identity plus the component table.
#[derive(Clone, Debug)]
pub struct TorusReport {
    pub lhs: bool,
    pub rhs: bool,
    pub components: Vec<ComponentData>,
}

impl TorusReport {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The branch-divisor pairing summed over a collection of tori, with the
/// per-torus breakdown. The total vanishes exactly when the tori bound a
/// genuine closed cover; that global constraint comes from the input, so a
/// nonzero total on an arbitrary collection is meaningful, not an error.
#[derive(Clone, Debug)]
pub struct GlobalReport {
    pub per_torus: Vec<TorusReport>,
    /// `Σ (e−1)·α` over all tori and components, mod 2.
    pub total_pairing: bool,
    /// `Σ φ(m, ℓ)` over all tori, mod 2; equals `total_pairing` per torus.
    pub total_integral: bool,
}

pub fn branch_divisor_pairing(tori: &[TorusMonodromy]) -> GlobalReport {
    let per_torus: Vec<TorusReport> = tori.iter().map(TorusMonodromy::verify_identity).collect();
    let total_pairing = per_torus.iter().fold(false, |acc, r| acc ^ r.rhs);
    let total_integral = per_torus.iter().fold(false, |acc, r| acc ^ r.lhs);
    GlobalReport {
        per_torus,
        total_pairing,
        total_integral,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn sp(n: usize, cycles: &[&[usize]], signs: u64) -> SignedPerm {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        SignedPerm::new(signs, Permutation::from_cycles(n, &cycles).unwrap()).unwrap()
    }

    #[test]
    fn trivial_cover_components() {
        let tm = TorusMonodromy::new(
            SignedPerm::identity(3).unwrap(),
            SignedPerm::identity(3).unwrap(),
        )
        .unwrap();
        let comps = tm.components();
        assert_eq!(comps.len(), 3);
        for c in &comps {
            assert_eq!((c.e, c.t, c.d), (1, 1, 0));
            assert!(!c.alpha);
        }
    }

    #[test]
    fn swapped_double_cycles_form_one_component() {
        let tm = TorusMonodromy::new(
            sp(4, &[&[1, 2], &[3, 4]], 0),
            sp(4, &[&[1, 3], &[2, 4]], 0),
        )
        .unwrap();
        let comps = tm.components();
        assert_eq!(comps.len(), 1);
        assert_eq!((comps[0].e, comps[0].t, comps[0].d), (2, 2, 0));
    }

    #[test]
    fn branched_transposition_component() {
        let tm = TorusMonodromy::new(sp(2, &[&[1, 2]], 0), sp(2, &[], 0b11)).unwrap();
        let comps = tm.components();
        assert_eq!(comps.len(), 1);
        assert_eq!((comps[0].e, comps[0].t, comps[0].d), (2, 1, 1));
        assert!(comps[0].alpha);
        assert!(tm.torus_integral());
        let report = tm.verify_identity();
        assert!(report.lhs && report.rhs && report.passed());
    }

    #[test]
    fn component_sizes_sum_to_degree() {
        let tm = TorusMonodromy::new(
            sp(5, &[&[1, 2, 3]], 0),
            sp(5, &[&[4, 5]], 0b00111),
        )
        .unwrap();
        let total: usize = tm.components().iter().map(|c| c.e * c.t).sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn identity_meridian_integral_vanishes() {
        let tm = TorusMonodromy::new(
            SignedPerm::identity(3).unwrap(),
            sp(3, &[&[1, 2, 3]], 0b111),
        )
        .unwrap();
        assert!(!tm.torus_integral());
        assert!(tm.verify_identity().passed());
    }

    #[test]
    fn three_cycle_indicator_integral_vanishes() {
        let tm = TorusMonodromy::new(sp(3, &[&[1, 2, 3]], 0), sp(3, &[], 0b111)).unwrap();
        assert!(!tm.torus_integral());
        assert!(tm.verify_identity().passed());
    }

    #[test]
    fn new_rejects_signed_meridian_and_non_commuting() {
        assert_eq!(
            TorusMonodromy::new(sp(2, &[&[1, 2]], 0b01), sp(2, &[], 0)).err(),
            Some(Error::HypothesisViolation)
        );
        assert_eq!(
            TorusMonodromy::new(sp(3, &[&[1, 2]], 0), sp(3, &[&[1, 2, 3]], 0)).err(),
            Some(Error::NonCommuting)
        );
    }

    #[test]
    fn normalization_repairs_even_sign_patterns() {
        // m = ((1 2), e₁+e₂): signs sum to 0 on the cycle, so conjugation fixes it
        let m = sp(2, &[&[1, 2]], 0b11);
        let l = m.clone();
        let tm = TorusMonodromy::normalized(&m, &l).unwrap();
        assert_eq!(tm.meridian().signs(), 0);
        assert!(tm.meridian().is_commuting(tm.longitude()).unwrap());
        assert!(tm.verify_identity().passed());
    }

    #[test]
    fn normalization_rejects_odd_sign_patterns() {
        let m = sp(2, &[&[1, 2]], 0b01);
        let l = SignedPerm::identity(2).unwrap();
        // m commutes with the identity; the failure is the odd cycle sum
        assert_eq!(
            TorusMonodromy::normalized(&m, &l).err(),
            Some(Error::HypothesisViolation)
        );
    }

    #[test]
    fn empty_collection_has_zero_pairing() {
        let report = branch_divisor_pairing(&[]);
        assert!(!report.total_pairing);
        assert!(!report.total_integral);
    }

    #[test]
    fn doubling_a_torus_kills_the_sum() {
        let tm = TorusMonodromy::new(sp(2, &[&[1, 2]], 0), sp(2, &[], 0b11)).unwrap();
        let single = branch_divisor_pairing(std::slice::from_ref(&tm));
        assert!(single.total_pairing);
        assert!(single.total_integral);
        let double = branch_divisor_pairing(&[tm.clone(), tm]);
        assert!(!double.total_pairing);
        assert!(!double.total_integral);
    }
}
