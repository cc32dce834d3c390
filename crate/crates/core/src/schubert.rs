//! Schubert polynomials, padded Schubert polynomials, the lowering
//! operator on padded elements, principal specialization, and
//! Schubert-basis expansion with Monk's rule.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num::bigint::BigInt;
use num::{One, Zero};
use once_cell::sync::Lazy;

use crate::bruhat::covers_up;
use crate::perm::Permutation;
use crate::poly::{rat, Poly, Rat, Var};
use crate::{Error, Result};

/// The Schubert polynomials of one S_n, built once by divided
/// differences descending from S_{w_0} = x^rho.
pub struct SchubertTable {
    n: usize,
    polys: HashMap<Permutation, Poly>,
}

impl SchubertTable {
    pub fn build(n: usize) -> SchubertTable {
        let w0 = Permutation::longest_element(n);
        let rho: Vec<(Var, i16)> = (1..n).map(|i| (Var::X(i), (n - i) as i16)).collect();
        let mut polys = HashMap::new();
        polys.insert(w0.clone(), Poly::monomial(n, &rho, Rat::one()));
        // peel descents rank by rank down to the identity
        let mut frontier = vec![w0];
        while let Some(w) = frontier.pop() {
            let sw = polys[&w].clone();
            for i in w.descents() {
                let v = w.swap_positions(i, i + 1);
                if !polys.contains_key(&v) {
                    polys.insert(v.clone(), sw.divided_difference(i));
                    frontier.push(v);
                }
            }
        }
        debug_assert_eq!(polys.len(), (1..=n).product::<usize>());
        SchubertTable { n, polys }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: &Permutation) -> &Poly {
        assert_eq!(w.n(), self.n);
        &self.polys[w]
    }
}

static TABLES: Lazy<Mutex<HashMap<usize, Arc<SchubertTable>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Shared per-n Schubert table; immutable after construction.
pub fn schubert_table(n: usize) -> Arc<SchubertTable> {
    let mut cache = TABLES.lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| Arc::new(SchubertTable::build(n)))
        .clone()
}

pub fn schubert(w: &Permutation) -> Poly {
    schubert_table(w.n()).get(w).clone()
}

/// The staircase exponent vector rho = (n-1, n-2, ..., 1, 0).
pub fn staircase(n: usize) -> Vec<i16> {
    (0..n).map(|i| (n - i - 1) as i16).collect()
}

/// x^gamma -> x^gamma y^{rho-gamma}; every term ends up with total
/// (x,y)-degree n(n-1)/2.
pub fn pad(f: &Poly, n: usize) -> Result<Poly> {
    assert_eq!(f.n(), n);
    let rho = staircase(n);
    let mut out = Poly::zero(n);
    for (powers, c) in f.iter_terms() {
        let mut gamma = vec![0i16; n];
        for &(v, e) in &powers {
            match v {
                Var::X(i) => gamma[i - 1] = e,
                _ => panic!("pad applies to x-only polynomials"),
            }
        }
        for k in 0..n {
            if gamma[k] > rho[k] {
                return Err(Error::NotSubStaircase(format!("{powers:?}")));
            }
        }
        let mut term: Vec<(Var, i16)> = Vec::new();
        for k in 0..n {
            if gamma[k] != 0 {
                term.push((Var::X(k + 1), gamma[k]));
            }
            if rho[k] - gamma[k] != 0 {
                term.push((Var::Y(k + 1), rho[k] - gamma[k]));
            }
        }
        out = out.add(&Poly::monomial(n, &term, c.clone()));
    }
    Ok(out)
}

pub fn padded_schubert(w: &Permutation) -> Poly {
    pad(&schubert(w), w.n()).expect("Schubert monomials are sub-staircase")
}

/// The operator sum_i x_i d/dy_i.
pub fn delta(f: &Poly) -> Poly {
    let n = f.n();
    let mut out = Poly::zero(n);
    for i in 1..=n {
        out = out.add(&Poly::var(n, Var::X(i)).mul(&f.y_derivative(i)));
    }
    out
}

/// The same operator transported to the x-only quotient:
/// x^gamma -> (sum_i (n-i-gamma_i) x_i) x^gamma, then reduced mod I.
pub fn delta_on_quotient(f: &Poly, n: usize) -> Poly {
    assert_eq!(f.n(), n);
    assert!(!f.has_y());
    let mut out = Poly::zero(n);
    for (powers, c) in f.iter_terms() {
        let mut gamma = vec![0i16; n];
        let mut rest: Vec<(Var, i16)> = Vec::new();
        for &(v, e) in &powers {
            match v {
                Var::X(i) => gamma[i - 1] = e,
                _ => rest.push((v, e)),
            }
        }
        for i in 1..=n {
            let coeff = rat(n as i64 - i as i64 - gamma[i - 1] as i64);
            if coeff.is_zero() {
                continue;
            }
            let mut term = rest.clone();
            for k in 0..n {
                let e = gamma[k] + if k + 1 == i { 1 } else { 0 };
                if e != 0 {
                    term.push((Var::X(k + 1), e));
                }
            }
            out = out.add(&Poly::monomial(n, &term, c * coeff));
        }
    }
    out.reduce_mod_i()
}

/// The staircase-conjugated operator y^rho * Delta(f / y^rho) on padded
/// elements, passing through Laurent y-monomials.
pub fn shifted_delta(f: &Poly, n: usize) -> Poly {
    let rho = staircase(n);
    let neg_rho: Vec<i16> = rho.iter().map(|&e| -e).collect();
    delta(&f.y_shift(&neg_rho)).y_shift(&rho)
}

/// S_w(1,...,1): the number of monomials of S_w with multiplicity.
pub fn principal_specialization(w: &Permutation) -> BigInt {
    let total = schubert(w).sum_of_coefficients();
    debug_assert!(total.is_integer());
    total.to_integer()
}

/// (1/l!) * sum over reduced words of the product of letters; equals
/// the principal specialization.
pub fn macdonald_sum(w: &Permutation) -> Rat {
    let l = w.length();
    let mut total = BigInt::zero();
    for word in w.reduced_words() {
        let mut prod = BigInt::one();
        for a in word {
            prod *= BigInt::from(a);
        }
        total += prod;
    }
    let factorial: BigInt = (1..=l as u64).map(BigInt::from).product();
    Rat::new(total, factorial)
}

/// An element of the coinvariant algebra written in the Schubert basis;
/// coefficients are polynomials in z and alpha only.
#[derive(Clone, PartialEq, Eq)]
pub struct SchubertExpansion {
    pub n: usize,
    pub coefficients: BTreeMap<Permutation, Poly>,
}

impl SchubertExpansion {
    pub fn zero(n: usize) -> Self {
        SchubertExpansion { n, coefficients: BTreeMap::new() }
    }

    pub fn add_term(&mut self, w: Permutation, coeff: Poly) {
        assert_eq!(w.n(), self.n);
        if coeff.is_zero() {
            return;
        }
        match self.coefficients.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, w: &Permutation) -> Poly {
        self.coefficients.get(w).cloned().unwrap_or_else(|| Poly::zero(self.n))
    }

    /// Reassemble sum coeff(w) * S_w as a polynomial.
    pub fn to_poly(&self) -> Poly {
        let table = schubert_table(self.n);
        let mut out = Poly::zero(self.n);
        for (w, c) in &self.coefficients {
            out = out.add(&c.mul(table.get(w)));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (w, c) in &self.coefficients {
            map.insert(w.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.coefficients {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match c.as_constant() {
                Some(k) if k.is_one() => write!(f, "S[{w}]")?,
                Some(k) if k.is_integer() => write!(f, "{}*S[{w}]", k.to_integer())?,
                _ => write!(f, "({c})*S[{w}]")?,
            }
        }
        Ok(())
    }
}

/// Expand a polynomial (x variables, z/alpha coefficients) in the
/// Schubert basis of the coinvariant algebra.
///
/// The reduced form is split into x-homogeneous components; the
/// coefficient of S_w is read off by applying divided differences
/// along a reduced word of w, last letter first, and keeping the
/// x-constant part.
pub fn expand_in_schubert_basis(f: &Poly, n: usize) -> SchubertExpansion {
    assert_eq!(f.n(), n);
    let reduced = f.reduce_mod_i();
    let mut by_length: HashMap<usize, Vec<Permutation>> = HashMap::new();
    for w in Permutation::all(n) {
        by_length.entry(w.length()).or_default().push(w);
    }
    let mut out = SchubertExpansion::zero(n);
    for (d, comp) in reduced.x_components() {
        let Some(perms) = by_length.get(&d) else { continue };
        for w in perms {
            let mut word = w.reduced_words().into_iter().next().expect("nonempty");
            word.reverse();
            let mut g = comp.clone();
            for a in word {
                g = g.divided_difference(a);
            }
            out.add_term(w.clone(), g.x_constant_part());
        }
    }
    out
}

/// Monk's rule: the Schubert expansion of (x_1+...+x_m) * S_w, summed
/// over covers w <. w t_{jk} with j <= m < k.
pub fn monk_product(w: &Permutation, m: usize) -> SchubertExpansion {
    let n = w.n();
    assert!(m >= 1 && m < n);
    let mut out = SchubertExpansion::zero(n);
    for c in covers_up(w) {
        if c.i <= m && m < c.j {
            out.add_term(c.upper, Poly::one(n));
        }
    }
    out
}
