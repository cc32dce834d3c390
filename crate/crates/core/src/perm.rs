//! Symmetric group arithmetic in one-line notation.

use std::fmt;

use crate::{Error, Result};

/// All computations here are desk scale; n! indexing must stay addressable.
pub const MAX_N: usize = 10;

/// A permutation of {1..n} in one-line notation.
///
/// The composition convention is (u*v)(k) = u(v(k)), so right
/// multiplication by the transposition t_{ij} swaps positions i and j
/// of the one-line word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    window: Vec<u8>,
}

impl Permutation {
    pub fn new(window: Vec<u8>) -> Result<Self> {
        let n = window.len();
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidPermutation(format!(
                "window length {n} out of range 1..={MAX_N}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{window:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { window })
    }

    pub fn identity(n: usize) -> Self {
        Permutation::new((1..=n as u8).collect()).expect("identity window")
    }

    /// The longest element w_0 = n (n-1) ... 2 1.
    pub fn longest_element(n: usize) -> Self {
        Permutation::new((1..=n as u8).rev().collect()).expect("w_0 window")
    }

    /// The transposition t_{ij} (1-based, i != j).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= n && j <= n && i != j);
        let mut w: Vec<u8> = (1..=n as u8).collect();
        w.swap(i - 1, j - 1);
        Permutation { window: w }
    }

    /// The adjacent transposition s_i = t_{i,i+1}.
    pub fn adjacent(n: usize, i: usize) -> Self {
        Permutation::transposition(n, i, i + 1)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// w(k), 1-based.
    pub fn at(&self, k: usize) -> usize {
        self.window[k - 1] as usize
    }

    pub fn window(&self) -> &[u8] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Composition (u*v)(k) = u(v(k)).
    pub fn multiply(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::MismatchedSize(self.n(), other.n()));
        }
        let window = (1..=self.n()).map(|k| self.at(other.at(k)) as u8).collect();
        Ok(Permutation { window })
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0u8; self.n()];
        for k in 1..=self.n() {
            window[self.at(k) - 1] = k as u8;
        }
        Permutation { window }
    }

    /// Right multiplication by t_{ij}: swap positions i and j.
    pub fn swap_positions(&self, i: usize, j: usize) -> Permutation {
        let mut window = self.window.clone();
        window.swap(i - 1, j - 1);
        Permutation { window }
    }

    /// Inversion count; equals the minimal number of adjacent
    /// transpositions expressing w.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Positions i with w(i) > w(i+1).
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    /// All reduced words (a_1,...,a_l) with s_{a_1}...s_{a_l} = w.
    ///
    /// Descent-peeling DFS: every reduced word ends in a descent of w,
    /// and distinct branches yield distinct words, so no deduplication
    /// is needed.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut words = Vec::new();
        for i in self.descents() {
            let shorter = self.swap_positions(i, i + 1);
            for mut word in shorter.reduced_words() {
                word.push(i);
                words.push(word);
            }
        }
        words
    }

    /// c_i = #{j > i : w(j) < w(i)}; component i lies in [0, n-i] and
    /// the components sum to length(w).
    pub fn lehmer_code(&self) -> Vec<usize> {
        (1..=self.n())
            .map(|i| (i + 1..=self.n()).filter(|&j| self.at(j) < self.at(i)).count())
            .collect()
    }

    pub fn from_lehmer(code: &[usize]) -> Result<Permutation> {
        let n = code.len();
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        let mut window = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            if c > n - i - 1 {
                return Err(Error::InvalidPermutation(format!(
                    "Lehmer component {c} at position {} exceeds {}",
                    i + 1,
                    n - i - 1
                )));
            }
            window.push(pool.remove(c));
        }
        Permutation::new(window)
    }

    /// Parse one-line notation: digit string for n <= 9, or
    /// comma-separated integers.
    pub fn parse(s: &str) -> Result<Permutation> {
        let window: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidPermutation(s.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::InvalidPermutation(s.to_string()))?
        };
        Permutation::new(window)
    }

    /// All n! permutations of {1..n}, in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        assert!(n >= 1 && n <= MAX_N);
        let mut out = Vec::new();
        let mut window: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation { window: window.clone() });
            // next_permutation
            let Some(i) = (0..n - 1).rev().find(|&i| window[i] < window[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| window[j] > window[i]).unwrap();
            window.swap(i, j);
            window[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
