//! Permutations of `{1..n}` and their canonical cycle decompositions.
//!
//! Indices are 0-based internally; cycle notation in constructors and in
//! `Display` output is 1-based.

use std::fmt;

use crate::error::Error;

/// Largest supported degree; sign vectors elsewhere are single-word bit masks.
pub const MAX_DEGREE: usize = 64;

pub(crate) fn check_degree(n: usize) -> Result<(), Error> {
    if n == 0 || n > MAX_DEGREE {
        Err(Error::DegreeTooLarge(n))
    } else {
        Ok(())
    }
}

/// A permutation of `{1..n}`, stored as a 0-based image table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self, Error> {
        check_degree(n)?;
        Ok(Permutation {
            images: (0..n).collect(),
        })
    }

    /// Build from a 0-based image table.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        check_degree(images.len())?;
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::NotABijection);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint cycles in 1-based notation. Fixed points may be
    /// omitted; the empty list is the identity.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, Error> {
        check_degree(n)?;
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (pos, &entry) in cycle.iter().enumerate() {
                if entry == 0 || entry > n {
                    return Err(Error::CycleEntryOutOfRange(entry, n));
                }
                if seen[entry - 1] {
                    return Err(Error::RepeatedCycleEntry(entry));
                }
                seen[entry - 1] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                if next == 0 || next > n {
                    return Err(Error::CycleEntryOutOfRange(next, n));
                }
                images[entry - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut owner = vec![usize::MAX; n];
        let mut cycles = Vec::new();
        // scanning start points in increasing order yields the canonical
        // decomposition: each cycle starts at its smallest element and the
        // cycles are sorted by smallest element
        for start in 0..n {
            if owner[start] != usize::MAX {
                continue;
            }
            let mut cycle = vec![start];
            owner[start] = cycles.len();
            let mut cur = self.images[start];
            while cur != start {
                owner[cur] = cycles.len();
                cycle.push(cur);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { n, cycles, owner }
    }

    /// All `n!` permutations of degree `n`, in lexicographic order of the
    /// image table.
    pub fn all(n: usize) -> Result<impl Iterator<Item = Permutation>, Error> {
        check_degree(n)?;
        Ok(itertools::Itertools::permutations(0..n, n).map(|images| Permutation { images }))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[n={}]{}", self.degree(), self)
    }
}

impl fmt::Display for Permutation {
    /// 1-based disjoint-cycle notation with fixed points omitted; the
    /// identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dec = self.cycle_decomposition();
        let mut wrote = false;
        for cycle in dec.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (pos, &i) in cycle.iter().enumerate() {
                if pos > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Canonical disjoint-cycle decomposition: cycles sorted by smallest element,
/// each written starting from its smallest element, fixed points kept as
/// 1-cycles so the lengths always sum to `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
    owner: Vec<usize>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// The cycles, 0-based.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// Index of the cycle containing the 0-based point `i`.
    pub fn cycle_of(&self, i: usize) -> usize {
        self.owner[i]
    }

    /// Bit mask of the support of cycle `r`.
    pub fn cycle_mask(&self, r: usize) -> u64 {
        self.cycles[r].iter().fold(0u64, |m, &i| m | (1u64 << i))
    }

    /// Reassemble the permutation the decomposition came from.
    pub fn to_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        for cycle in &self.cycles {
            for (pos, &i) in cycle.iter().enumerate() {
                images[i] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Permutation { images }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    #[test]
    fn compose_involution_is_identity() {
        let t = perm(3, &[&[1, 2]]);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn compose_hand_checked_on_three_points() {
        // (1 2)∘(2 3) maps 1→2, 2→3→... apply (2 3) first: 1→1→2, 2→3→3, 3→2→1
        let a = perm(3, &[&[1, 2]]);
        let b = perm(3, &[&[2, 3]]);
        let c = a.compose(&b).unwrap();
        assert_eq!(c, perm(3, &[&[1, 2, 3]]));
    }

    #[test]
    fn compose_with_identity() {
        let p = perm(4, &[&[1, 3, 2]]);
        let id = Permutation::identity(4).unwrap();
        assert_eq!(id.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&id).unwrap(), p);
    }

    #[test]
    fn compose_degree_mismatch() {
        let p = Permutation::identity(3).unwrap();
        let q = Permutation::identity(4).unwrap();
        assert_eq!(p.compose(&q), Err(Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn degree_cap_enforced() {
        assert_eq!(Permutation::identity(65), Err(Error::DegreeTooLarge(65)));
        assert_eq!(Permutation::identity(0), Err(Error::DegreeTooLarge(0)));
        assert!(Permutation::identity(64).is_ok());
    }

    #[test]
    fn cycle_decomposition_identity() {
        let dec = Permutation::identity(3).unwrap().cycle_decomposition();
        assert_eq!(dec.cycles(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(dec.lengths(), vec![1, 1, 1]);
    }

    #[test]
    fn cycle_decomposition_single_cycle() {
        let dec = perm(3, &[&[1, 2, 3]]).cycle_decomposition();
        assert_eq!(dec.cycles(), &[vec![0, 1, 2]]);
        assert_eq!(dec.lengths(), vec![3]);
    }

    #[test]
    fn cycle_decomposition_canonical_order() {
        // (2 1)(4 3) on 5 points canonicalizes to (1 2)(3 4)(5)
        let dec = perm(5, &[&[2, 1], &[4, 3]]).cycle_decomposition();
        assert_eq!(dec.cycles(), &[vec![0, 1], vec![2, 3], vec![4]]);
        assert_eq!(dec.lengths(), vec![2, 2, 1]);
    }

    #[test]
    fn cycle_decomposition_round_trip() {
        for p in Permutation::all(4).unwrap() {
            let dec = p.cycle_decomposition();
            assert_eq!(dec.lengths().iter().sum::<usize>(), 4);
            assert_eq!(dec.to_permutation(), p);
        }
    }

    #[test]
    fn equal_permutations_equal_decompositions() {
        let a = perm(4, &[&[3, 4], &[1, 2]]);
        let b = perm(4, &[&[2, 1], &[4, 3]]);
        assert_eq!(a, b);
        assert_eq!(a.cycle_decomposition(), b.cycle_decomposition());
    }

    #[test]
    fn display_uses_one_based_cycles() {
        assert_eq!(perm(4, &[&[1, 2], &[3, 4]]).to_string(), "(1 2)(3 4)");
        assert_eq!(Permutation::identity(4).unwrap().to_string(), "()");
    }

    #[test]
    fn all_enumerates_n_factorial() {
        assert_eq!(Permutation::all(4).unwrap().count(), 24);
    }

    #[test]
    fn from_cycles_rejects_bad_entries() {
        assert_eq!(
            Permutation::from_cycles(3, &[vec![1, 4]]),
            Err(Error::CycleEntryOutOfRange(4, 3))
        );
        assert_eq!(
            Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]),
            Err(Error::RepeatedCycleEntry(2))
        );
    }
}
