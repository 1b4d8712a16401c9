//! Words over the generators `x_1..x_n, ε` of `H_n` and their normal forms.
//!
//! Every word rewrites, via the relations `x_i² = ε² = 1`,
//! `x_i x_j = ε x_j x_i` and `ε x_i = x_i ε`, to the canonical shape
//! `x_{i_1}⋯x_{i_k} ε^δ` with strictly ascending indices. The rewrite is
//! computed by counting: δ is the parity of strict inversions among the
//! x-indices (each adjacent swap of distinct generators costs one ε) plus
//! the number of explicit ε tokens; indices of even multiplicity cancel.

use std::fmt;

use crate::error::Error;
use crate::extension::ExtElement;
use crate::perm::check_degree;

/// A single generator token; indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenToken {
    X(usize),
    Eps,
}

/// A word over `{x_1..x_n, ε}`. All generators are involutions, so inverse
/// markers carry no content and are erased at the parser boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenWord {
    n: usize,
    tokens: Vec<GenToken>,
}

impl GenWord {
    pub fn new(n: usize, tokens: Vec<GenToken>) -> Result<Self, Error> {
        check_degree(n)?;
        for token in &tokens {
            if let GenToken::X(i) = token {
                if *i == 0 || *i > n {
                    return Err(Error::TokenOutOfRange(*i, n));
                }
            }
        }
        Ok(GenWord { n, tokens })
    }

    /// Parse whitespace-separated tokens `x3`, `eps`; a trailing `'`
    /// (inverse marker) is accepted and erased.
    pub fn parse(n: usize, text: &str) -> Result<Self, Error> {
        let mut tokens = Vec::new();
        for raw in text.split_whitespace() {
            let body = raw.strip_suffix('\'').unwrap_or(raw);
            if body == "eps" {
                tokens.push(GenToken::Eps);
            } else if let Some(num) = body.strip_prefix('x') {
                let i: usize = num.parse().map_err(|_| Error::TokenOutOfRange(0, n))?;
                tokens.push(GenToken::X(i));
            } else {
                return Err(Error::TokenOutOfRange(0, n));
            }
        }
        GenWord::new(n, tokens)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn tokens(&self) -> &[GenToken] {
        &self.tokens
    }

    /// Evaluate the word in `H_n`.
    pub fn eval(&self) -> ExtElement {
        let mut acc = ExtElement::unit(self.n).unwrap();
        for token in &self.tokens {
            let factor = match token {
                GenToken::X(i) => ExtElement::x(self.n, *i).unwrap(),
                GenToken::Eps => ExtElement::eps(self.n).unwrap(),
            };
            acc = acc.hn_mul(&factor).unwrap();
        }
        acc
    }

    pub fn normal_form(&self) -> NormalForm {
        let mut delta = false;
        let mut indices: Vec<usize> = Vec::new();
        for token in &self.tokens {
            match token {
                GenToken::X(i) => indices.push(*i),
                GenToken::Eps => delta = !delta,
            }
        }
        delta ^= sort_counting_inversions(&mut indices);
        // cancel x_i x_i pairs; equal generators commute at no ε cost
        let mut survivors = Vec::new();
        let mut pos = 0;
        while pos < indices.len() {
            let mut run = 1;
            while pos + run < indices.len() && indices[pos + run] == indices[pos] {
                run += 1;
            }
            if run % 2 == 1 {
                survivors.push(indices[pos]);
            }
            pos += run;
        }
        NormalForm {
            n: self.n,
            indices: survivors,
            delta,
        }
    }
}

/// Merge sort that returns the parity of strict inversions (pairs out of
/// order with distinct values).
fn sort_counting_inversions(values: &mut Vec<usize>) -> bool {
    fn go(values: &mut [usize], scratch: &mut Vec<usize>) -> usize {
        let len = values.len();
        if len < 2 {
            return 0;
        }
        let mid = len / 2;
        let mut count = go(&mut values[..mid], scratch) + go(&mut values[mid..], scratch);
        scratch.clear();
        let (mut left, mut right) = (0, mid);
        while left < mid && right < len {
            if values[left] <= values[right] {
                scratch.push(values[left]);
                left += 1;
            } else {
                scratch.push(values[right]);
                count += mid - left;
                right += 1;
            }
        }
        scratch.extend_from_slice(&values[left..mid]);
        scratch.extend_from_slice(&values[right..]);
        values.copy_from_slice(scratch);
        count
    }
    let mut scratch = Vec::with_capacity(values.len());
    go(values, &mut scratch) % 2 == 1
}

/// The canonical form `x_{i_1}⋯x_{i_k} ε^δ`, indices strictly ascending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    n: usize,
    indices: Vec<usize>,
    delta: bool,
}

impl NormalForm {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// 1-based, strictly ascending.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn delta(&self) -> bool {
        self.delta
    }

    pub fn to_word(&self) -> GenWord {
        let mut tokens: Vec<GenToken> = self.indices.iter().map(|&i| GenToken::X(i)).collect();
        if self.delta {
            tokens.push(GenToken::Eps);
        }
        GenWord::new(self.n, tokens).expect("normal form indices are in range")
    }

    pub fn eval(&self) -> ExtElement {
        self.to_word().eval()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() && !self.delta {
            return write!(f, "1");
        }
        let mut first = true;
        for &i in &self.indices {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "x{i}")?;
            first = false;
        }
        if self.delta {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "eps")?;
        }
        Ok(())
    }
}
