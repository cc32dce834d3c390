//! Strong Bruhat order: covering relations, the four cover statistics,
//! intervals, and the classical symmetry maps.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::perm::Permutation;
use crate::{Error, Result};

/// A covering relation v <. v*t_{ij} with its four dot-count statistics.
///
/// In the permutation-matrix picture of a cover, a counts dots strictly
/// above-left with value between v_i and v_j, b counts dots between the
/// columns with value above v_j, c counts dots below-right with value in
/// between, and d counts dots between the columns with value below v_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub lower: Permutation,
    pub upper: Permutation,
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

#[derive(Serialize)]
struct CoverJson {
    lower: String,
    upper: String,
    i: usize,
    j: usize,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
}

impl Cover {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CoverJson {
            lower: self.lower.to_string(),
            upper: self.upper.to_string(),
            i: self.i,
            j: self.j,
            a: self.a,
            b: self.b,
            c: self.c,
            d: self.d,
        })
        .expect("cover serialization")
    }
}

/// The statistics (a,b,c,d) of the cover v <. v*t_{ij}.
///
/// Errors with `NotACover` when v*t_{ij} does not cover v.
pub fn cover_stats(v: &Permutation, i: usize, j: usize) -> Result<(usize, usize, usize, usize)> {
    let not_a_cover = || Error::NotACover { lower: v.to_string(), i, j };
    let n = v.n();
    if i >= j || j > n || i < 1 || v.at(i) >= v.at(j) {
        return Err(not_a_cover());
    }
    let upper = v.swap_positions(i, j);
    if upper.length() != v.length() + 1 {
        return Err(not_a_cover());
    }
    let (vi, vj) = (v.at(i), v.at(j));
    let a = (1..i).filter(|&k| vi < v.at(k) && v.at(k) < vj).count();
    let b = (i + 1..j).filter(|&k| v.at(k) > vj).count();
    let c = (j + 1..=n).filter(|&k| vi < v.at(k) && v.at(k) < vj).count();
    let d = (i + 1..j).filter(|&k| v.at(k) < vi).count();
    Ok((a, b, c, d))
}

pub fn cover(v: &Permutation, i: usize, j: usize) -> Result<Cover> {
    let (a, b, c, d) = cover_stats(v, i, j)?;
    Ok(Cover {
        lower: v.clone(),
        upper: v.swap_positions(i, j),
        i,
        j,
        a,
        b,
        c,
        d,
    })
}

/// All covers v <. w, with statistics attached. Empty iff v = w_0.
pub fn covers_up(v: &Permutation) -> Vec<Cover> {
    let n = v.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if let Ok(c) = cover(v, i, j) {
                out.push(c);
            }
        }
    }
    out
}

/// All covers u <. w below a given w.
pub fn covers_down(w: &Permutation) -> Vec<Cover> {
    let n = w.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if w.at(i) > w.at(j) {
                let lower = w.swap_positions(i, j);
                if let Ok(c) = cover(&lower, i, j) {
                    out.push(c);
                }
            }
        }
    }
    out
}

fn bfs(start: &Permutation, step: impl Fn(&Permutation) -> Vec<Permutation>) -> HashSet<Permutation> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(u) = queue.pop_front() {
        for next in step(&u) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Bruhat comparability v <= w, by BFS through the up-set of v.
pub fn bruhat_le(v: &Permutation, w: &Permutation) -> bool {
    if v.n() != w.n() || v.length() > w.length() {
        return false;
    }
    // prune the BFS to elements below w in length
    let cap = w.length();
    bfs(v, |u| {
        if u.length() >= cap {
            return vec![];
        }
        covers_up(u).into_iter().map(|c| c.upper).collect()
    })
    .contains(w)
}

/// The interval [v, w], materialized: vertices grouped by length plus
/// every covering edge between consecutive ranks.
pub struct Interval {
    pub lower: Permutation,
    pub upper: Permutation,
    /// ranks[k] holds the vertices of length lower.length() + k, sorted.
    pub ranks: Vec<Vec<Permutation>>,
    pub edges: Vec<Cover>,
    up_index: HashMap<Permutation, Vec<usize>>,
}

impl Interval {
    pub fn new(v: &Permutation, w: &Permutation) -> Result<Interval> {
        if !bruhat_le(v, w) {
            return Err(Error::NotComparable(v.to_string(), w.to_string()));
        }
        let cap = w.length();
        let up = bfs(v, |u| {
            if u.length() >= cap {
                return vec![];
            }
            covers_up(u).into_iter().map(|c| c.upper).collect()
        });
        let floor = v.length();
        let down = bfs(w, |u| {
            if u.length() <= floor {
                return vec![];
            }
            covers_down(u).into_iter().map(|c| c.lower).collect()
        });
        let vertices: HashSet<&Permutation> = up.intersection(&down).collect();

        let height = w.length() - v.length();
        let mut ranks: Vec<Vec<Permutation>> = vec![Vec::new(); height + 1];
        for &u in &vertices {
            ranks[u.length() - floor].push(u.clone());
        }
        for rank in &mut ranks {
            rank.sort();
        }

        let mut edges = Vec::new();
        let mut up_index: HashMap<Permutation, Vec<usize>> = HashMap::new();
        for rank in &ranks {
            for u in rank {
                for c in covers_up(u) {
                    if vertices.contains(&c.upper) {
                        up_index.entry(u.clone()).or_default().push(edges.len());
                        edges.push(c);
                    }
                }
            }
        }
        Ok(Interval {
            lower: v.clone(),
            upper: w.clone(),
            ranks,
            edges,
            up_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.ranks.iter().map(|r| r.len()).sum()
    }

    pub fn contains(&self, u: &Permutation) -> bool {
        self.up_index.contains_key(u) || *u == self.upper
    }

    /// Covers within the interval going up from u.
    pub fn covers_from(&self, u: &Permutation) -> impl Iterator<Item = &Cover> {
        self.up_index
            .get(u)
            .map(|ix| ix.as_slice())
            .unwrap_or(&[])
            .iter()
            .map(|&k| &self.edges[k])
    }
}

/// The three statistic-permuting symmetries of the Bruhat order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryMap {
    /// v <. w  ->  v^{-1} <. w^{-1}
    Inverse,
    /// v <. w  ->  w_0 w <. w_0 v
    LeftW0,
    /// v <. w  ->  w w_0 <. v w_0
    RightW0,
}

/// Image of a cover under a symmetry map, with freshly computed
/// statistics.
pub fn symmetry_image(c: &Cover, map: SymmetryMap) -> Cover {
    let n = c.lower.n();
    let w0 = Permutation::longest_element(n);
    let (lo, hi) = match map {
        SymmetryMap::Inverse => (c.lower.inverse(), c.upper.inverse()),
        SymmetryMap::LeftW0 => (
            w0.multiply(&c.upper).expect("same n"),
            w0.multiply(&c.lower).expect("same n"),
        ),
        SymmetryMap::RightW0 => (
            c.upper.multiply(&w0).expect("same n"),
            c.lower.multiply(&w0).expect("same n"),
        ),
    };
    // the two windows differ in exactly two positions
    let diff: Vec<usize> = (1..=n).filter(|&k| lo.at(k) != hi.at(k)).collect();
    assert_eq!(diff.len(), 2, "symmetry image must be a transposition step");
    cover(&lo, diff[0], diff[1]).expect("symmetry maps preserve covers")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    /// Oracle: covers of v by testing every transposition against the
    /// length condition only.
    fn covers_up_oracle(v: &Permutation) -> Vec<(Permutation, usize, usize)> {
        let n = v.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let w = v.swap_positions(i, j);
                if w.length() == v.length() + 1 {
                    out.push((w, i, j));
                }
            }
        }
        out
    }

    #[test]
    fn cover_stats_examples() {
        assert_eq!(cover_stats(&p("132"), 1, 3).unwrap(), (0, 1, 0, 0));
        assert_eq!(cover_stats(&p("123"), 1, 2).unwrap(), (0, 0, 0, 0));
        assert_eq!(cover_stats(&p("132"), 1, 2).unwrap(), (0, 0, 1, 0));
    }

    #[test]
    fn cover_stats_rejects_non_covers() {
        // 123 -> t_{13} jumps two ranks
        assert!(matches!(
            cover_stats(&p("123"), 1, 3),
            Err(Error::NotACover { .. })
        ));
        // decreasing pair
        assert!(cover_stats(&p("321"), 1, 2).is_err());
    }

    #[test]
    fn covers_up_examples() {
        let cs = covers_up(&p("123"));
        assert_eq!(cs.len(), 2);
        for c in &cs {
            assert_eq!((c.a, c.b, c.c, c.d), (0, 0, 0, 0));
        }
        let uppers: HashSet<String> = cs.iter().map(|c| c.upper.to_string()).collect();
        assert_eq!(uppers, HashSet::from(["213".into(), "132".into()]));

        assert!(covers_up(&p("321")).is_empty());
        for n in 2..=5 {
            assert_eq!(covers_up(&Permutation::identity(n)).len(), n - 1);
        }
    }

    #[test]
    fn covers_up_matches_length_condition_oracle() {
        for n in 2..=5 {
            for v in Permutation::all(n) {
                let got: Vec<(Permutation, usize, usize)> = covers_up(&v)
                    .into_iter()
                    .map(|c| (c.upper, c.i, c.j))
                    .collect();
                assert_eq!(got, covers_up_oracle(&v), "v = {v}");
            }
        }
    }

    #[test]
    fn stats_linear_relations() {
        for n in 2..=6 {
            for v in Permutation::all(n) {
                for c in covers_up(&v) {
                    assert_eq!(c.b + c.d, c.j - c.i - 1);
                    assert_eq!(c.a + c.c, v.at(c.j) - v.at(c.i) - 1);
                    assert!(v.at(c.i) < v.at(c.j));
                }
            }
        }
    }

    #[test]
    fn interval_examples() {
        let s3 = Interval::new(&p("123"), &p("321")).unwrap();
        assert_eq!(s3.vertex_count(), 6);
        assert_eq!(s3.edges.len(), 8);

        let single = Interval::new(&p("231"), &p("231")).unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert!(single.edges.is_empty());

        let iv = Interval::new(&p("132"), &p("321")).unwrap();
        let mut verts: Vec<String> = iv
            .ranks
            .iter()
            .flatten()
            .map(|u| u.to_string())
            .collect();
        verts.sort();
        assert_eq!(verts, vec!["132", "231", "312", "321"]);
        assert_eq!(iv.edges.len(), 4);
    }

    #[test]
    fn interval_rejects_incomparable() {
        assert!(matches!(
            Interval::new(&p("213"), &p("132")),
            Err(Error::NotComparable(..))
        ));
    }

    /// Exhaustive listing of maximal chains of [e, w_0] in S_3.
    #[test]
    fn s3_has_four_maximal_chains() {
        fn chains(from: &Permutation, to: &Permutation) -> usize {
            if from == to {
                return 1;
            }
            covers_up(from).iter().map(|c| chains(&c.upper, to)).sum()
        }
        assert_eq!(chains(&p("123"), &p("321")), 4);
    }

    #[test]
    fn symmetry_images_small() {
        for n in 2..=4 {
            for v in Permutation::all(n) {
                for c in covers_up(&v) {
                    let inv = symmetry_image(&c, SymmetryMap::Inverse);
                    assert_eq!(inv.lower, c.lower.inverse());
                    assert_eq!(inv.upper, c.upper.inverse());
                    assert_eq!((inv.d, inv.c), (c.a, c.b));

                    let left = symmetry_image(&c, SymmetryMap::LeftW0);
                    assert_eq!(left.d, c.b);

                    let right = symmetry_image(&c, SymmetryMap::RightW0);
                    assert_eq!(right.c, c.a);
                }
            }
        }
    }

    #[test]
    fn cover_json_shape() {
        let c = cover(&p("132"), 1, 3).unwrap();
        let v = c.to_json();
        assert_eq!(v["lower"], "132");
        assert_eq!(v["upper"], "231");
        assert_eq!(v["b"], 1);
    }

    use std::collections::HashSet;
}
