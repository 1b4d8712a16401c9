//! Centralizers of permutations inside the wreath product.
//!
//! For `σ ∈ S_n` embedded with zero sign vector, an element `(a, π)` commutes
//! with `σ` exactly when `π` commutes with `σ` in `S_n` and `a` is constant on
//! the cycles of `σ`. The permutation part is built from the standard
//! cycle-type structure of `C_{S_n}(σ)`: within each class of equal-length
//! cycles, a permutation of the cycles together with a rotation offset per
//! cycle.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::perm::{CycleDecomposition, Permutation};
use crate::signed::SignedPerm;

/// Degree cap for full enumeration; `|C_{B_n}(σ)|` can reach `2ⁿ·n!`.
pub const ENUMERATION_CAP: usize = 8;

/// One class of equal-length cycles of `σ`, holding indices into the
/// canonical cycle list.
struct CycleClass {
    length: usize,
    members: Vec<usize>,
}

/// The centralizer `C_{B_n}(σ)` of a permutation `σ` (embedded with zero
/// signs), with structured enumeration and uniform sampling.
pub struct Centralizer {
    cycles: CycleDecomposition,
    classes: Vec<CycleClass>,
}

impl Centralizer {
    pub fn new(sigma: &Permutation) -> Self {
        let cycles = sigma.cycle_decomposition();
        let mut classes: Vec<CycleClass> = Vec::new();
        for (r, cycle) in cycles.cycles().iter().enumerate() {
            match classes.iter_mut().find(|c| c.length == cycle.len()) {
                Some(class) => class.members.push(r),
                None => classes.push(CycleClass {
                    length: cycle.len(),
                    members: vec![r],
                }),
            }
        }
        Centralizer { cycles, classes }
    }

    pub fn degree(&self) -> usize {
        self.cycles.degree()
    }

    pub fn sigma_cycles(&self) -> &CycleDecomposition {
        &self.cycles
    }

    /// `|C_{B_n}(σ)| = 2^j · ∏_classes m! · d^m`; `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let mut order: u128 = 1u128 << self.cycles.cycle_count();
        for class in &self.classes {
            for k in 1..=class.members.len() {
                order = order.checked_mul(k as u128)?;
                order = order.checked_mul(class.length as u128)?;
            }
        }
        Some(order)
    }

    pub fn contains(&self, tau: &SignedPerm) -> Result<bool, Error> {
        let sigma = SignedPerm::from_perm(self.cycles.to_permutation());
        sigma.is_commuting(tau)
    }

    /// Assemble the element from per-class data: `target[pos]` is the member
    /// position the `pos`-th cycle maps onto, `offset[pos]` its rotation; the
    /// sign vector takes one bit per cycle.
    fn assemble(
        &self,
        sign_bits: &[bool],
        targets: &[Vec<usize>],
        offsets: &[Vec<usize>],
    ) -> SignedPerm {
        let n = self.degree();
        let mut signs = 0u64;
        for (r, &bit) in sign_bits.iter().enumerate() {
            if bit {
                signs |= self.cycles.cycle_mask(r);
            }
        }
        let mut images: Vec<usize> = (0..n).collect();
        for (class, (target, offset)) in self
            .classes
            .iter()
            .zip(targets.iter().zip(offsets.iter()))
        {
            for (pos, &r) in class.members.iter().enumerate() {
                let src = &self.cycles.cycles()[r];
                let dst = &self.cycles.cycles()[class.members[target[pos]]];
                for (s, &point) in src.iter().enumerate() {
                    images[point] = dst[(s + offset[pos]) % class.length];
                }
            }
        }
        let perm = Permutation::from_images(images).expect("assembly yields a bijection");
        SignedPerm::new(signs, perm).expect("signs within degree")
    }

    fn assignment_tables(&self) -> Vec<Vec<Vec<usize>>> {
        self.classes
            .iter()
            .map(|class| {
                let m = class.members.len();
                Permutation::all(m)
                    .expect("class size within degree cap")
                    .map(|p| (0..m).map(|i| p.apply(i)).collect())
                    .collect()
            })
            .collect()
    }

    fn decode_rank(&self, mut rank: u128, assignments: &[Vec<Vec<usize>>]) -> SignedPerm {
        let mut sign_bits = Vec::with_capacity(self.cycles.cycle_count());
        for _ in 0..self.cycles.cycle_count() {
            sign_bits.push(rank & 1 == 1);
            rank >>= 1;
        }
        let mut targets = Vec::with_capacity(self.classes.len());
        let mut offsets = Vec::with_capacity(self.classes.len());
        for (class, table) in self.classes.iter().zip(assignments) {
            let count = table.len() as u128;
            targets.push(table[(rank % count) as usize].clone());
            rank /= count;
            let mut class_offsets = Vec::with_capacity(class.members.len());
            for _ in 0..class.members.len() {
                class_offsets.push((rank % class.length as u128) as usize);
                rank /= class.length as u128;
            }
            offsets.push(class_offsets);
        }
        self.assemble(&sign_bits, &targets, &offsets)
    }

    /// Emit every element of `C_{B_n}(σ)` exactly once.
    pub fn enumerate(&self) -> Result<impl Iterator<Item = SignedPerm> + '_, Error> {
        let n = self.degree();
        if n > ENUMERATION_CAP {
            return Err(Error::EnumerationCap(n, ENUMERATION_CAP));
        }
        let order = self.order().expect("order fits u128 under the cap");
        let assignments = self.assignment_tables();
        Ok((0..order).map(move |rank| self.decode_rank(rank, &assignments)))
    }

    /// Draw a uniform element: independent uniform digits in each factor of
    /// the product structure.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> SignedPerm {
        let sign_bits: Vec<bool> = (0..self.cycles.cycle_count())
            .map(|_| rng.gen::<bool>())
            .collect();
        let mut targets = Vec::with_capacity(self.classes.len());
        let mut offsets = Vec::with_capacity(self.classes.len());
        for class in &self.classes {
            let m = class.members.len();
            let mut target: Vec<usize> = (0..m).collect();
            target.shuffle(rng);
            targets.push(target);
            offsets.push((0..m).map(|_| rng.gen_range(0..class.length)).collect());
        }
        self.assemble(&sign_bits, &targets, &offsets)
    }
}

/// Seeded uniform draw from `C_{B_n}(σ)`; deterministic for a fixed seed.
pub fn centralizer_sample(sigma: &Permutation, seed: u64) -> SignedPerm {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Centralizer::new(sigma).sample(&mut rng)
}

/// Stream every element of `C_{B_n}(σ)`.
pub fn centralizer_enumerate(
    sigma: &Permutation,
) -> Result<impl Iterator<Item = SignedPerm>, Error> {
    let centralizer = Centralizer::new(sigma);
    if centralizer.degree() > ENUMERATION_CAP {
        return Err(Error::EnumerationCap(centralizer.degree(), ENUMERATION_CAP));
    }
    let order = centralizer.order().expect("order fits u128 under the cap");
    let assignments = centralizer.assignment_tables();
    Ok((0..order).map(move |rank| centralizer.decode_rank(rank, &assignments)))
}
