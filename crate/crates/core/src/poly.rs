//! Sparse multivariate polynomials over exact rationals in the
//! variables x_1..x_n, y_1..y_n, z, a_1..a_{n-1}, with divided
//! differences, y-derivatives, and reduction modulo the ideal of
//! constant-free symmetric polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(k: i64) -> Rat {
    Rat::from_integer(BigInt::from(k))
}

/// Variable universe for a fixed n. Canonical ordering is
/// X(1) < ... < X(n) < Y(1) < ... < Y(n) < Z < Alpha(1) < ... < Alpha(n-1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
    Z,
    Alpha(usize),
}

impl Var {
    fn slot(self, n: usize) -> usize {
        match self {
            Var::X(i) => {
                assert!(i >= 1 && i <= n, "x index {i} out of 1..={n}");
                i - 1
            }
            Var::Y(i) => {
                assert!(i >= 1 && i <= n, "y index {i} out of 1..={n}");
                n + i - 1
            }
            Var::Z => 2 * n,
            Var::Alpha(i) => {
                assert!(i >= 1 && i < n, "alpha index {i} out of 1..{n}");
                2 * n + 1 + i - 1
            }
        }
    }

    fn from_slot(slot: usize, n: usize) -> Var {
        if slot < n {
            Var::X(slot + 1)
        } else if slot < 2 * n {
            Var::Y(slot - n + 1)
        } else if slot == 2 * n {
            Var::Z
        } else {
            Var::Alpha(slot - 2 * n)
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::X(i) => format!("x{i}"),
            Var::Y(i) => format!("y{i}"),
            Var::Z => "z".into(),
            Var::Alpha(i) => format!("a{i}"),
        }
    }
}

type Mono = Vec<i16>;

/// A sparse polynomial; no zero coefficients are stored, and equality
/// is structural equality of the canonical form.
///
/// Exponents are signed so that the staircase-shifted operator on
/// padded elements can pass through Laurent monomials in y; ordinary
/// operations keep exponents nonnegative.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero(n: usize) -> Poly {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Poly {
        Poly::constant(n, Rat::one())
    }

    pub fn constant(n: usize, c: Rat) -> Poly {
        let mut p = Poly::zero(n);
        if !c.is_zero() {
            p.terms.insert(vec![0; 3 * n], c);
        }
        p
    }

    pub fn int(n: usize, k: i64) -> Poly {
        Poly::constant(n, rat(k))
    }

    pub fn var(n: usize, v: Var) -> Poly {
        Poly::monomial(n, &[(v, 1)], Rat::one())
    }

    pub fn monomial(n: usize, powers: &[(Var, i16)], coeff: Rat) -> Poly {
        let mut mono = vec![0i16; 3 * n];
        for &(v, e) in powers {
            mono[v.slot(n)] += e;
        }
        let mut p = Poly::zero(n);
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, mono: Mono, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.n, other.n, "mixed variable universes");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.n, other.n, "mixed variable universes");
        let mut out = Poly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mono: Mono = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(mono, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut out = Poly::one(self.n);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Simultaneous substitution of variables by polynomials.
    pub fn substitute(&self, subs: &[(Var, Poly)]) -> Poly {
        let slots: Vec<(usize, &Poly)> =
            subs.iter().map(|(v, p)| (v.slot(self.n), p)).collect();
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let mut residual = m.clone();
            let mut factor = Poly::constant(self.n, c.clone());
            for &(slot, p) in &slots {
                let e = residual[slot];
                if e != 0 {
                    assert!(e > 0, "cannot substitute into a Laurent exponent");
                    residual[slot] = 0;
                    factor = factor.mul(&p.pow(e as usize));
                }
            }
            let rest = Poly {
                n: self.n,
                terms: BTreeMap::from([(residual, Rat::one())]),
            };
            out = out.add(&factor.mul(&rest));
        }
        out
    }

    /// Value at all variables set to 1.
    pub fn sum_of_coefficients(&self) -> Rat {
        self.terms.values().fold(Rat::zero(), |acc, c| acc + c)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.iter().all(|&e| e == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let c = self.as_constant()?;
        if c.is_integer() {
            Some(c.to_integer())
        } else {
            None
        }
    }

    pub fn coefficient(&self, powers: &[(Var, i16)]) -> Rat {
        let mut mono = vec![0i16; 3 * self.n];
        for &(v, e) in powers {
            mono[v.slot(self.n)] += e;
        }
        self.terms.get(&mono).cloned().unwrap_or_else(Rat::zero)
    }

    fn x_exponents<'a>(&self, mono: &'a Mono) -> &'a [i16] {
        &mono[..self.n]
    }

    pub fn has_y(&self) -> bool {
        self.terms.keys().any(|m| m[self.n..2 * self.n].iter().any(|&e| e != 0))
    }

    pub fn degree_in(&self, v: Var) -> i16 {
        let slot = v.slot(self.n);
        self.terms.keys().map(|m| m[slot]).max().unwrap_or(0)
    }

    /// Total degree in the x variables, per term maximum.
    pub fn x_degree(&self) -> i16 {
        self.terms
            .keys()
            .map(|m| m[..self.n].iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// Split into components homogeneous in total x-degree.
    pub fn x_components(&self) -> BTreeMap<usize, Poly> {
        let mut out: BTreeMap<usize, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d: i16 = m[..self.n].iter().sum();
            out.entry(d as usize)
                .or_insert_with(|| Poly::zero(self.n))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// The part free of x variables.
    pub fn x_constant_part(&self) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            if m[..self.n].iter().all(|&e| e == 0) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Swap x_i and x_{i+1} in every term.
    pub fn x_swap(&self, i: usize) -> Poly {
        assert!(i >= 1 && i < self.n);
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            m2.swap(i - 1, i);
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Newton divided difference N_i: f -> (f - s_i f)/(x_i - x_{i+1}),
    /// computed term by term through the closed form of
    /// (x^a y^b - x^b y^a)/(x - y). The division is always exact.
    pub fn divided_difference(&self, i: usize) -> Poly {
        assert!(i >= 1 && i < self.n, "divided difference index {i} out of range");
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let a = m[i - 1];
            let b = m[i];
            if a == b {
                continue;
            }
            assert!(a >= 0 && b >= 0, "divided difference needs nonnegative x exponents");
            let (lo, hi, coeff) = if a > b { (b, a, c.clone()) } else { (a, b, -c) };
            for t in 0..(hi - lo) {
                let mut m2 = m.clone();
                m2[i - 1] = lo + t;
                m2[i] = hi - 1 - t;
                out.add_term(m2, coeff.clone());
            }
        }
        out
    }

    /// Formal partial derivative with respect to y_i. Laurent y
    /// exponents are differentiated by the same power rule.
    pub fn y_derivative(&self, i: usize) -> Poly {
        assert!(i >= 1 && i <= self.n);
        let slot = self.n + i - 1;
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m[slot];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[slot] = e - 1;
            out.add_term(m2, c * rat(e as i64));
        }
        out
    }

    /// Multiply by the monomial y^shift (componentwise, possibly
    /// negative).
    pub fn y_shift(&self, shift: &[i16]) -> Poly {
        assert_eq!(shift.len(), self.n);
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            for (k, &s) in shift.iter().enumerate() {
                m2[self.n + k] += s;
            }
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Set every y variable to 1 by dropping its exponents; valid for
    /// Laurent y-monomials as well.
    pub fn drop_y(&self) -> Poly {
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            for k in self.n..2 * self.n {
                m2[k] = 0;
            }
            out.add_term(m2, c.clone());
        }
        out
    }

    /// True if every term's x exponents satisfy gamma_i <= n - i.
    pub fn is_sub_staircase(&self) -> bool {
        self.terms.keys().all(|m| {
            self.x_exponents(m)
                .iter()
                .enumerate()
                .all(|(k, &e)| (e as i64) <= (self.n - k - 1) as i64 && e >= 0)
        })
    }

    /// Unique representative modulo the ideal I of constant-free
    /// symmetric polynomials, supported on sub-staircase x-monomials.
    ///
    /// Rewrites x_k^{n-k+1} via h_{n-k+1}(x_1..x_k) in I, choosing the
    /// largest offending k each time; every rewrite strictly decreases
    /// the monomial in the order with x_n most significant, so the
    /// worklist terminates.
    pub fn reduce_mod_i(&self) -> Poly {
        let n = self.n;
        assert!(!self.has_y(), "reduction applies to x-only polynomials");
        let mut work: BTreeMap<Mono, Rat> = self.terms.clone();
        let mut done = Poly::zero(n);
        while let Some((m, c)) = work.pop_first() {
            if c.is_zero() {
                continue;
            }
            let offending = (1..=n).rev().find(|&k| m[k - 1] as usize >= n - k + 1);
            match offending {
                None => done.add_term(m, c),
                Some(k) => {
                    let deg = n - k + 1;
                    let mut base = m.clone();
                    base[k - 1] -= deg as i16;
                    for mu in homogeneous_exponents(k, deg) {
                        if mu[k - 1] as usize == deg {
                            continue; // the rewritten monomial itself
                        }
                        let mut m2 = base.clone();
                        for (t, &e) in mu.iter().enumerate() {
                            m2[t] += e;
                        }
                        let entry = work.entry(m2).or_insert_with(Rat::zero);
                        *entry -= &c;
                    }
                }
            }
        }
        done
    }

    /// Iterate terms as (variable powers, coefficient), in storage
    /// order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (Vec<(Var, i16)>, &Rat)> {
        self.terms.iter().map(move |(m, c)| {
            let powers: Vec<(Var, i16)> = m
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e != 0)
                .map(|(slot, &e)| (Var::from_slot(slot, self.n), e))
                .collect();
            (powers, c)
        })
    }

    /// Terms in display order: descending, comparing the last variable
    /// first.
    fn display_terms(&self) -> Vec<(&Mono, &Rat)> {
        let mut terms: Vec<(&Mono, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(m1, _), (m2, _)| {
            m2.iter().rev().cmp(m1.iter().rev())
        });
        terms
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .display_terms()
            .into_iter()
            .map(|(m, c)| {
                let mut exps = serde_json::Map::new();
                for (slot, &e) in m.iter().enumerate() {
                    if e != 0 {
                        exps.insert(Var::from_slot(slot, self.n).name(), e.into());
                    }
                }
                serde_json::json!({
                    "exponents": exps,
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.display_terms() {
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.iter().all(|&e| e == 0) {
                factors.push(if mag.is_integer() {
                    mag.to_integer().to_string()
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                });
            }
            for (slot, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = Var::from_slot(slot, self.n).name();
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All exponent vectors of length k summing to deg.
fn homogeneous_exponents(k: usize, deg: usize) -> Vec<Vec<i16>> {
    if k == 1 {
        return vec![vec![deg as i16]];
    }
    let mut out = Vec::new();
    for first in 0..=deg {
        for mut rest in homogeneous_exponents(k - 1, deg - first) {
            rest.insert(0, first as i16);
            out.push(rest);
        }
    }
    out
}

/// x_1 + ... + x_m in the n-variable universe.
pub fn sum_x(n: usize, m: usize) -> Poly {
    assert!(m <= n);
    let mut p = Poly::zero(n);
    for i in 1..=m {
        p = p.add(&Poly::var(n, Var::X(i)));
    }
    p
}

/// The Chevalley edge coefficient a_i + ... + a_{j-1}.
pub fn alpha_run(n: usize, i: usize, j: usize) -> Poly {
    assert!(i < j && j <= n);
    let mut p = Poly::zero(n);
    for k in i..j {
        p = p.add(&Poly::var(n, Var::Alpha(k)));
    }
    p
}

/// Elementary symmetric polynomial e_j(x_1..x_n).
pub fn elementary_symmetric(n: usize, j: usize) -> Poly {
    assert!(j >= 1 && j <= n);
    fn rec(n: usize, j: usize, start: usize, prefix: &mut Vec<usize>, out: &mut Poly) {
        if prefix.len() == j {
            let powers: Vec<(Var, i16)> = prefix.iter().map(|&i| (Var::X(i), 1)).collect();
            *out = out.add(&Poly::monomial(n, &powers, Rat::one()));
            return;
        }
        for i in start..=n {
            prefix.push(i);
            rec(n, j, i + 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Poly::zero(n);
    rec(n, j, 1, &mut Vec::new(), &mut out);
    out
}

/// Power sum p_k(x_1..x_n).
pub fn power_sum(n: usize, k: usize) -> Poly {
    assert!(k >= 1);
    let mut p = Poly::zero(n);
    for i in 1..=n {
        p = p.add(&Poly::monomial(n, &[(Var::X(i), k as i16)], Rat::one()));
    }
    p
}

/// Complete homogeneous h_deg(x_1..x_k) in the n-variable universe.
pub fn complete_homogeneous(n: usize, k: usize, deg: usize) -> Poly {
    assert!(k >= 1 && k <= n);
    let mut p = Poly::zero(n);
    for mu in homogeneous_exponents(k, deg) {
        let powers: Vec<(Var, i16)> = mu
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e != 0)
            .map(|(t, &e)| (Var::X(t + 1), e))
            .collect();
        p = p.add(&Poly::monomial(n, &powers, Rat::one()));
    }
    p
}
