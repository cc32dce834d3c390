//! Linear operators on the Schubert basis of the coinvariant algebra,
//! stored as column-sparse matrices with polynomial entries, and the
//! machine checks built from them.

use std::collections::BTreeMap;

use num::Zero;

use crate::bruhat::covers_up;
use crate::perm::Permutation;
use crate::poly::{alpha_run, rat, Poly, Rat, Var};
use crate::report::Report;
use crate::schubert::{
    delta_on_quotient, expand_in_schubert_basis, principal_specialization, schubert_table,
};
use crate::{Error, Result};

/// A linear operator in the Schubert basis: applying it to S_w gives
/// sum_u entries[u][w] * S_u. Stored column-sparse keyed by the source
/// permutation; zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SchubertOperator {
    n: usize,
    cols: BTreeMap<Permutation, BTreeMap<Permutation, Poly>>,
}

pub type SchubertVector = BTreeMap<Permutation, Poly>;

impl SchubertOperator {
    pub fn zero(n: usize) -> Self {
        SchubertOperator { n, cols: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut op = SchubertOperator::zero(n);
        for w in Permutation::all(n) {
            op.add_entry(w.clone(), w, Poly::one(n));
        }
        op
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_entry(&mut self, row: Permutation, col: Permutation, value: Poly) {
        if value.is_zero() {
            return;
        }
        let col_map = self.cols.entry(col.clone()).or_default();
        match col_map.entry(row) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&value);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        if self.cols.get(&col).is_some_and(|m| m.is_empty()) {
            self.cols.remove(&col);
        }
    }

    pub fn entry(&self, row: &Permutation, col: &Permutation) -> Poly {
        self.cols
            .get(col)
            .and_then(|c| c.get(row))
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.n))
    }

    pub fn column(&self, col: &Permutation) -> SchubertVector {
        self.cols.get(col).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &SchubertOperator) -> SchubertOperator {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (col, col_map) in &other.cols {
            for (row, v) in col_map {
                out.add_entry(row.clone(), col.clone(), v.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &SchubertOperator) -> SchubertOperator {
        self.add(&other.scale(&Poly::int(self.n, -1)))
    }

    pub fn scale(&self, f: &Poly) -> SchubertOperator {
        let mut out = SchubertOperator::zero(self.n);
        for (col, col_map) in &self.cols {
            for (row, v) in col_map {
                out.add_entry(row.clone(), col.clone(), v.mul(f));
            }
        }
        out
    }

    /// Matrix product self * other (apply other first).
    pub fn compose(&self, other: &SchubertOperator) -> SchubertOperator {
        assert_eq!(self.n, other.n);
        let mut out = SchubertOperator::zero(self.n);
        for (col, col_map) in &other.cols {
            for (mid, v) in col_map {
                if let Some(self_col) = self.cols.get(mid) {
                    for (row, u) in self_col {
                        out.add_entry(row.clone(), col.clone(), u.mul(v));
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &SchubertOperator) -> SchubertOperator {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn apply(&self, vec: &SchubertVector) -> SchubertVector {
        let mut out = SchubertOperator::zero(self.n);
        let key = Permutation::identity(self.n);
        for (w, c) in vec {
            if let Some(col) = self.cols.get(w) {
                for (row, v) in col {
                    out.add_entry(row.clone(), key.clone(), v.mul(c));
                }
            }
        }
        out.cols.remove(&key).unwrap_or_default()
    }
}

/// M: the Chevalley-weighted cover operator.
pub fn operator_m(n: usize) -> SchubertOperator {
    let mut op = SchubertOperator::zero(n);
    for w in Permutation::all(n) {
        for c in covers_up(&w) {
            op.add_entry(c.upper.clone(), w.clone(), alpha_run(n, c.i, c.j));
        }
    }
    op
}

/// R: covers weighted by b - d.
pub fn operator_r(n: usize) -> SchubertOperator {
    let mut op = SchubertOperator::zero(n);
    for w in Permutation::all(n) {
        for c in covers_up(&w) {
            op.add_entry(
                c.upper.clone(),
                w.clone(),
                Poly::int(n, c.b as i64 - c.d as i64),
            );
        }
    }
    op
}

/// The matrix of Delta in the Schubert basis: covers weighted by 1+2b.
pub fn operator_delta_matrix(n: usize) -> SchubertOperator {
    let mut op = SchubertOperator::zero(n);
    for w in Permutation::all(n) {
        for c in covers_up(&w) {
            op.add_entry(c.upper.clone(), w.clone(), Poly::int(n, 1 + 2 * c.b as i64));
        }
    }
    op
}

/// Matrix of multiplication by g in the coinvariant algebra.
pub fn multiplication_operator(g: &Poly, n: usize) -> SchubertOperator {
    let table = schubert_table(n);
    let mut op = SchubertOperator::zero(n);
    for w in Permutation::all(n) {
        let product = g.mul(table.get(&w));
        for (u, coeff) in expand_in_schubert_basis(&product, n).coefficients {
            op.add_entry(u, w.clone(), coeff);
        }
    }
    op
}

/// M_1 = M, M_{k+1} = [M_k, R].
pub fn operator_mk(n: usize, k: usize) -> SchubertOperator {
    assert!(k >= 1);
    let r = operator_r(n);
    let mut mk = operator_m(n);
    for _ in 1..k {
        mk = mk.commutator(&r);
    }
    mk
}

/// beta_i = a_i + ... + a_{n-1}.
pub fn beta(n: usize, i: usize) -> Poly {
    alpha_run(n, i, n)
}

/// The polynomial (k-1)! (beta_1 x_1^k + ... + beta_{n-1} x_{n-1}^k).
pub fn mk_element(n: usize, k: usize) -> Poly {
    let mut p = Poly::zero(n);
    for i in 1..n {
        let xik = Poly::monomial(n, &[(Var::X(i), k as i16)], Rat::from_integer(crate::chains::factorial(k - 1)));
        p = p.add(&beta(n, i).mul(&xik));
    }
    p
}

/// (n-1)x_1 + (n-2)x_2 + ... + x_{n-1}.
pub fn weighted_x_sum(n: usize) -> Poly {
    let mut p = Poly::zero(n);
    for i in 1..n {
        p = p.add(&Poly::var(n, Var::X(i)).scale(&rat((n - i) as i64)));
    }
    p
}

/// Multisets {p_k} with sum k*p_k = total, excluding the all-ones one
/// (p_1 = total): the qualifying exponent patterns of the nilpotency
/// check.
pub fn qualifying_partitions(total: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(remaining: usize, max_part: usize, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        for k in (1..=max_part.min(remaining)).rev() {
            let max_count = remaining / k;
            for count in (1..=max_count).rev() {
                acc.push((k, count));
                rec(remaining - k * count, k - 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(total, total, &mut Vec::new(), &mut out);
    out.retain(|parts| parts != &vec![(1, total)]);
    out
}

fn unit_vector(n: usize, w: &Permutation) -> SchubertVector {
    BTreeMap::from([(w.clone(), Poly::one(n))])
}

/// Machine check of one of the supporting lemmas.
pub fn verify_lemma(which: &str, n: usize) -> Result<Report> {
    let mut report = Report::new(which, n);
    let choose2 = n * (n - 1) / 2;
    match which {
        "lem31" => {
            // generators p_k times every sub-staircase monomial reduce
            // to zero under the quotient operator
            for k in 1..=4 {
                let pk = crate::poly::power_sum(n, k);
                let mut all_pass = true;
                for w in Permutation::all(n) {
                    let code = w.lehmer_code();
                    let powers: Vec<(Var, i16)> = code
                        .iter()
                        .enumerate()
                        .filter(|&(_, &e)| e != 0)
                        .map(|(i, &e)| (Var::X(i + 1), e as i16))
                        .collect();
                    let mono = Poly::monomial(n, &powers, Rat::from_integer(1.into()));
                    if !delta_on_quotient(&pk.mul(&mono), n).is_zero() {
                        all_pass = false;
                    }
                }
                report.check(
                    format!("p_{k} * x^gamma maps into I"),
                    all_pass,
                    "all sub-staircase gamma",
                );
            }
            // the operator descends to the quotient: adding an ideal
            // element does not change the image
            let f = Poly::monomial(n, &[(Var::X(1), 1)], rat(3))
                .add(&Poly::monomial(n, &[(Var::X(2), 2)], rat(-1)));
            let mut all_pass = true;
            for j in 1..=n {
                let g = f.add(
                    &crate::poly::elementary_symmetric(n, j)
                        .mul(&Poly::var(n, Var::X(1)).add(&Poly::int(n, 2))),
                );
                if delta_on_quotient(&f, n) != delta_on_quotient(&g, n) {
                    all_pass = false;
                }
            }
            report.check(
                "image depends only on the class mod I",
                all_pass,
                "f vs f + e_j * g",
            );
        }
        "lem32" => {
            for k in 1..=choose2 {
                let bracket = operator_mk(n, k);
                let mult = multiplication_operator(&mk_element(n, k), n);
                report.check(
                    format!("k={k}"),
                    bracket == mult,
                    "iterated bracket vs multiplication operator, entrywise",
                );
            }
        }
        "lem33" => {
            for parts in qualifying_partitions(choose2) {
                let mut product = Poly::one(n);
                for &(k, count) in &parts {
                    product = product.mul(&mk_element(n, k).pow(count));
                }
                let reduced = product.reduce_mod_i();
                let id = parts
                    .iter()
                    .map(|&(k, c)| format!("{k}^{c}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                report.check(
                    format!("multiset {id}"),
                    reduced.is_zero(),
                    format!("reduced to {} terms", reduced.num_terms()),
                );
            }
        }
        "lem34" => {
            let m = operator_m(n);
            let r = operator_r(n);
            let m_plus_zr = m.add(&r.scale(&Poly::var(n, Var::Z)));
            let e = Permutation::identity(n);
            let mut with_z = unit_vector(n, &e);
            let mut without = unit_vector(n, &e);
            for _ in 0..choose2 {
                with_z = m_plus_zr.apply(&with_z);
                without = m.apply(&without);
            }
            report.check(
                "(M+zR)^C(n,2) vs M^C(n,2) on S_e",
                with_z == without,
                format!("both land on {} basis vectors", with_z.len()),
            );
            let w0 = Permutation::longest_element(n);
            let coeff = with_z.get(&w0).cloned().unwrap_or_else(|| Poly::zero(n));
            report.check(
                "z absent from the S_w0 coefficient",
                coeff.degree_in(Var::Z) == 0 && with_z.len() == 1,
                format!("coefficient = {coeff}"),
            );
        }
        "lem41" => {
            for w in Permutation::all(n) {
                let total: Rat = covers_up(&w)
                    .iter()
                    .map(|c| {
                        Rat::from_integer(principal_specialization(&c.upper))
                            * rat(c.b as i64 - c.c as i64)
                    })
                    .fold(Rat::zero(), |acc, v| acc + v);
                report.check(
                    format!("w={w}"),
                    total.is_zero(),
                    format!("sum = {total}"),
                );
            }
        }
        _ => return Err(Error::UnknownPreset(which.to_string())),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::WeightSpec;
    use crate::poly::sum_x;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn m_columns() {
        let n = 3;
        let m = operator_m(n);
        let e = Permutation::identity(n);
        assert_eq!(m.entry(&p("213"), &e), Poly::var(n, Var::Alpha(1)));
        assert_eq!(m.entry(&p("132"), &e), Poly::var(n, Var::Alpha(2)));
        assert!(m.column(&p("321")).is_empty());
    }

    #[test]
    fn m_at_alpha_one_is_monk_multiplication() {
        for n in 2..=4 {
            let ones: Vec<(Var, Poly)> = (1..n).map(|i| (Var::Alpha(i), Poly::one(n))).collect();
            let m = operator_m(n);
            let mult = multiplication_operator(&weighted_x_sum(n), n);
            for w in Permutation::all(n) {
                for u in Permutation::all(n) {
                    assert_eq!(m.entry(&u, &w).substitute(&ones), mult.entry(&u, &w));
                }
            }
        }
    }

    #[test]
    fn r_columns() {
        let n = 3;
        let r = operator_r(n);
        assert!(r.column(&Permutation::identity(n)).is_empty());
        let col = r.column(&p("132"));
        assert_eq!(col.len(), 1);
        assert_eq!(col[&p("231")], Poly::one(n));
    }

    #[test]
    fn r_is_delta_minus_weighted_multiplication() {
        for n in 2..=4 {
            let lhs = operator_r(n);
            let rhs = operator_delta_matrix(n)
                .sub(&multiplication_operator(&weighted_x_sum(n), n));
            assert!(lhs == rhs, "n = {n}");
        }
    }

    #[test]
    fn delta_matrix_columns_and_cross_check() {
        let n = 3;
        let d = operator_delta_matrix(n);
        let e = Permutation::identity(n);
        assert_eq!(d.entry(&p("213"), &e), Poly::one(n));
        assert_eq!(d.entry(&p("132"), &e), Poly::one(n));
        assert_eq!(d.entry(&p("231"), &p("132")), Poly::int(n, 3));
        assert_eq!(d.entry(&p("312"), &p("132")), Poly::one(n));

        // independent route through the quotient operator
        for w in Permutation::all(n) {
            let image = delta_on_quotient(&crate::schubert::schubert(&w), n);
            let e = expand_in_schubert_basis(&image, n);
            assert_eq!(e.coefficients, d.column(&w), "w = {w}");
        }
    }

    #[test]
    fn multiplication_operator_basics() {
        let n = 3;
        assert!(multiplication_operator(&Poly::one(n), n) == SchubertOperator::identity(n));
        assert!(
            multiplication_operator(&crate::poly::elementary_symmetric(n, 1), n)
                == SchubertOperator::zero(n)
        );
        // Monk's rule columns
        for m_ix in 1..n {
            let op = multiplication_operator(&sum_x(n, m_ix), n);
            for w in Permutation::all(n) {
                assert_eq!(
                    op.column(&w),
                    crate::schubert::monk_product(&w, m_ix).coefficients
                );
            }
        }
    }

    #[test]
    fn mk_examples() {
        let n = 3;
        assert!(operator_mk(n, 1) == operator_m(n));
        assert!(operator_mk(3, 2) == multiplication_operator(&mk_element(3, 2), 3));
        // multiplications commute
        for k in 1..=3 {
            for k2 in 1..=3 {
                let a = operator_mk(3, k);
                let b = operator_mk(3, k2);
                assert!(a.compose(&b) == b.compose(&a), "k={k}, k'={k2}");
            }
        }
    }

    #[test]
    fn m_plus_zr_columns_are_thm13_weights() {
        for n in 2..=4 {
            let spec = WeightSpec::generalized_chevalley(n);
            let op = operator_m(n).add(&operator_r(n).scale(&Poly::var(n, Var::Z)));
            for w in Permutation::all(n) {
                for c in covers_up(&w) {
                    assert_eq!(op.entry(&c.upper, &w), spec.weight(&c));
                }
            }
        }
    }

    #[test]
    fn iterating_m_plus_zr_counts_chains() {
        let n = 4;
        let spec = WeightSpec::generalized_chevalley(n);
        let interval = crate::bruhat::Interval::new(
            &Permutation::identity(n),
            &Permutation::longest_element(n),
        )
        .unwrap();
        let op = operator_m(n).add(&operator_r(n).scale(&Poly::var(n, Var::Z)));
        let mut vec = unit_vector(n, &Permutation::identity(n));
        for l in 1..=n * (n - 1) / 2 {
            vec = op.apply(&vec);
            for (u, coeff) in &vec {
                assert_eq!(u.length(), l);
                let table = crate::chains::ChainCountTable::build(
                    &spec,
                    &crate::bruhat::Interval::new(&Permutation::identity(n), u).unwrap(),
                );
                assert_eq!(
                    coeff,
                    &table.values[&Permutation::identity(n)],
                    "u = {u}, l = {l}"
                );
            }
        }
        let _ = interval;
    }

    #[test]
    fn qualifying_partitions_of_six() {
        let parts = qualifying_partitions(6);
        // partitions of 6 number 11; the all-ones one is excluded
        assert_eq!(parts.len(), 10);
        assert!(parts.iter().all(|p| p != &vec![(1, 6)]));
        for p in &parts {
            let total: usize = p.iter().map(|&(k, c)| k * c).sum();
            assert_eq!(total, 6);
        }
    }

    #[test]
    fn lemmas_at_n3() {
        for which in ["lem31", "lem32", "lem33", "lem34", "lem41"] {
            let r = verify_lemma(which, 3).unwrap();
            assert!(r.passed(), "{which}: {r}");
        }
    }

    /// The induction step behind the one-parameter Macdonald analogue:
    /// expanding m(w, w_0) over the covers of w splits into a code-weight
    /// term and a z-term that vanishes.
    #[test]
    fn induction_step_term_by_term() {
        use crate::chains::{factorial, ChainCountTable, WeightSpec};
        for n in 2..=4 {
            let choose2 = n * (n - 1) / 2;
            let spec = WeightSpec::generalized_macdonald(n);
            let interval = crate::bruhat::Interval::new(
                &Permutation::identity(n),
                &Permutation::longest_element(n),
            )
            .unwrap();
            let table = ChainCountTable::build(&spec, &interval);
            for w in Permutation::all(n) {
                if w.length() == choose2 {
                    continue;
                }
                let first: Rat = covers_up(&w)
                    .iter()
                    .map(|c| {
                        rat(1 + 2 * c.b as i64)
                            * Rat::from_integer(principal_specialization(&c.upper))
                    })
                    .fold(Rat::zero(), |a, v| a + v);
                let second: Rat = covers_up(&w)
                    .iter()
                    .map(|c| {
                        rat(c.b as i64 - c.c as i64)
                            * Rat::from_integer(principal_specialization(&c.upper))
                    })
                    .fold(Rat::zero(), |a, v| a + v);
                assert_eq!(second, Rat::zero(), "w = {w}");
                let prefactor = Rat::from_integer(factorial(choose2 - w.length() - 1));
                assert_eq!(
                    table.values[&w].as_constant().unwrap(),
                    prefactor * first,
                    "w = {w}"
                );
            }
        }
    }
}
