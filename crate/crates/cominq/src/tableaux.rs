//! Decreasing primed tableaux on skew shapes, and the weight multisets of
//! their extensions: powers of the Schubert divisor class in equivariant
//! K-theory, Euler characteristics of negative line bundles on Richardson
//! varieties, and the cohomological triviality test for divisors.

use std::collections::BTreeMap;

use crate::comin::{CominData, Shape};
use crate::halfint::HalfInt;

/// A labeling of the boxes of `outer` minus `inner` by half-integers that
/// strictly decreases up the box order, with integer labels on long boxes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimedTableau {
    pub outer: Shape,
    pub inner: Shape,
    /// One label per skew box, in increasing box order.
    pub labels: Vec<HalfInt>,
}

impl PrimedTableau {
    /// (box, label) pairs in increasing box order.
    pub fn boxed_labels(&self) -> impl Iterator<Item = (usize, HalfInt)> + '_ {
        self.outer
            .minus(self.inner)
            .iter()
            .zip(self.labels.iter().copied())
    }
}

/// `(omega_gamma, alpha^vee)` for a box: 1 on long boxes, 2 on short ones.
fn multiplier(c: &CominData, b: usize) -> i64 {
    if c.long[b] {
        1
    } else {
        2
    }
}

/// All decreasing primed tableaux of shape `outer` minus `inner` with labels
/// in `[a, m)`. Boxes are filled along the fixed linear extension with labels
/// tried in descending order, so the output order is deterministic.
pub fn enumerate_tableaux(
    c: &CominData,
    outer: Shape,
    inner: Shape,
    a: HalfInt,
    m: i64,
) -> Vec<PrimedTableau> {
    fill_tableaux(c, outer, inner, a, m, false)
        .into_iter()
        .map(|labels| PrimedTableau {
            outer,
            inner,
            labels: labels.into_iter().map(HalfInt::from_doubled).collect(),
        })
        .collect()
}

fn exists_tableau(c: &CominData, outer: Shape, inner: Shape, a: HalfInt, m: i64) -> bool {
    !fill_tableaux(c, outer, inner, a, m, true).is_empty()
}

fn fill_tableaux(
    c: &CominData,
    outer: Shape,
    inner: Shape,
    a: HalfInt,
    m: i64,
    stop_at_first: bool,
) -> Vec<Vec<i64>> {
    assert!(inner.is_subset(outer), "inner shape must lie inside outer");
    let skew = outer.minus(inner);
    assert_eq!(skew.ambient, c.id(), "shape from a different space");
    assert!(a.doubled() <= 2 * m, "label range must not be inverted");
    let boxes: Vec<usize> = skew.iter().collect();
    let n = boxes.len();
    // Earlier skew boxes lying below each box; the linear extension makes
    // every order constraint point backwards.
    let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..i {
            if c.down[boxes[i]] >> boxes[j] & 1 == 1 {
                lower[i].push(j);
            }
        }
    }
    let mut dfs = Dfs {
        boxes: &boxes,
        lower: &lower,
        long: &c.long,
        lo: a.doubled(),
        hi: 2 * m - 1,
        stop_at_first,
        labels: vec![0; n],
        found: Vec::new(),
    };
    dfs.go(0);
    dfs.found
}

struct Dfs<'a> {
    boxes: &'a [usize],
    lower: &'a [Vec<usize>],
    long: &'a [bool],
    lo: i64,
    hi: i64,
    stop_at_first: bool,
    labels: Vec<i64>,
    found: Vec<Vec<i64>>,
}

impl Dfs<'_> {
    /// Returns true when enumeration should be aborted.
    fn go(&mut self, i: usize) -> bool {
        if i == self.boxes.len() {
            self.found.push(self.labels.clone());
            return self.stop_at_first;
        }
        let mut top = self.hi;
        for &j in &self.lower[i] {
            top = top.min(self.labels[j] - 1);
        }
        let mut label = top;
        while label >= self.lo {
            if !(self.long[self.boxes[i]] && label % 2 != 0) {
                self.labels[i] = label;
                if self.go(i + 1) {
                    return true;
                }
            }
            label -= 1;
        }
        false
    }
}

/// Oracle enumerator: tries every assignment of in-range labels to boxes and
/// keeps the valid ones. Exponential; for cross-checks on small skews only.
pub fn enumerate_tableaux_naive(
    c: &CominData,
    outer: Shape,
    inner: Shape,
    a: HalfInt,
    m: i64,
) -> Vec<PrimedTableau> {
    assert!(inner.is_subset(outer));
    let skew = outer.minus(inner);
    assert_eq!(skew.ambient, c.id());
    let boxes: Vec<usize> = skew.iter().collect();
    let n = boxes.len();
    let range: Vec<i64> = (a.doubled()..2 * m).rev().collect();
    let mut out = Vec::new();
    let mut stack = vec![0usize; 0];
    let mut labels: Vec<i64> = Vec::new();
    loop {
        if labels.len() == n {
            let ok = (0..n).all(|i| {
                if c.long[boxes[i]] && labels[i] % 2 != 0 {
                    return false;
                }
                (0..n).all(|j| {
                    i == j
                        || c.down[boxes[j]] >> boxes[i] & 1 == 0
                        || boxes[i] == boxes[j]
                        || labels[i] > labels[j]
                })
            });
            if ok {
                out.push(PrimedTableau {
                    outer,
                    inner,
                    labels: labels.iter().map(|&d| HalfInt::from_doubled(d)).collect(),
                });
            }
        }
        if labels.len() < n && !range.is_empty() {
            stack.push(0);
            labels.push(range[0]);
            continue;
        }
        loop {
            match stack.pop() {
                None => return out,
                Some(k) => {
                    labels.pop();
                    if k + 1 < range.len() {
                        stack.push(k + 1);
                        labels.push(range[k + 1]);
                        break;
                    }
                }
            }
        }
    }
}

/// The weight of the extension of `t` by `m` on the inner shape and 0 outside
/// the outer shape: each box contributes its label times
/// `(omega_gamma, alpha^vee)` in the direction of its simple-root label.
/// Returned in the simple-root basis; always integral.
pub fn weight(c: &CominData, t: &PrimedTableau, m: i64) -> Vec<i64> {
    let mut doubled = vec![0i64; c.rs.rank];
    for b in t.inner.iter() {
        doubled[c.delta[b]] += 2 * m * multiplier(c, b);
    }
    for (b, label) in t.boxed_labels() {
        doubled[c.delta[b]] += label.doubled() * multiplier(c, b);
    }
    doubled
        .into_iter()
        .map(|x| {
            assert_eq!(x % 2, 0, "weights must be integral");
            x / 2
        })
        .collect()
}

/// A multiset of integer weight vectors in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    entries: BTreeMap<Vec<i64>, usize>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Vec<i64>) {
        *self.entries.entry(w).or_insert(0) += 1;
    }

    pub fn insert_many(&mut self, w: Vec<i64>, count: usize) {
        if count > 0 {
            *self.entries.entry(w).or_insert(0) += count;
        }
    }

    /// Total size, counting multiplicity.
    pub fn len(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Direct sum: multiplicities add.
    pub fn add_all(&mut self, other: &WeightMultiset) {
        for (w, &k) in &other.entries {
            *self.entries.entry(w.clone()).or_insert(0) += k;
        }
    }

    /// Tensor product: pointwise weight sums over all pairs.
    pub fn tensor(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w1, &k1) in &self.entries {
            for (w2, &k2) in &other.entries {
                let sum: Vec<i64> = w1.iter().zip(w2).map(|(a, b)| a + b).collect();
                *out.entries.entry(sum).or_insert(0) += k1 * k2;
            }
        }
        out
    }

    /// Sorted (weight, multiplicity) pairs, the serialization form.
    pub fn sorted_entries(&self) -> Vec<(Vec<i64>, usize)> {
        self.entries.iter().map(|(w, &k)| (w.clone(), k)).collect()
    }
}

/// The weight multiset of all tableaux on `outer` minus `inner` with labels
/// in `[a, m)`, each weighted as its extension by `m`.
pub fn weight_multiset(
    c: &CominData,
    outer: Shape,
    inner: Shape,
    a: HalfInt,
    m: i64,
) -> WeightMultiset {
    let mut ws = WeightMultiset::new();
    for t in enumerate_tableaux(c, outer, inner, a, m) {
        ws.insert(weight(c, &t, m));
    }
    ws
}

/// One term of a Chevalley power expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyTerm {
    pub u: Shape,
    /// Parity of the skew size: +1 or -1.
    pub sign: i64,
    pub weights: WeightMultiset,
}

fn sign_of(len: usize) -> i64 {
    if len % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Expands the `m`-th power of the Schubert divisor class times the class of
/// `v`: one term per `u` containing `v`, with sign given by the skew size and
/// tableau labels in `[0, m)`. Terms with no tableaux are omitted.
pub fn chevalley_power(c: &CominData, v: Shape, m: i64) -> Vec<ChevalleyTerm> {
    assert!(m >= 0, "negative powers are not expanded");
    let mut terms = Vec::new();
    for &u in &c.all_shapes() {
        if !v.is_subset(u) {
            continue;
        }
        let weights = weight_multiset(c, u, v, HalfInt::ZERO, m);
        if weights.is_empty() {
            continue;
        }
        terms.push(ChevalleyTerm {
            u,
            sign: sign_of(u.minus(v).len()),
            weights,
        });
    }
    terms
}

/// Euler characteristic of the `m`-th power of the Schubert divisor ideal
/// sheaf on the Richardson variety cut out by `v <= u`: a global sign and the
/// weight multiset of the top (and only) cohomology group, from tableaux with
/// labels in `[1/2, m)`.
pub fn euler_characteristic(c: &CominData, u: Shape, v: Shape, m: i64) -> (i64, WeightMultiset) {
    assert!(v.is_subset(u), "classes do not bound a Richardson variety");
    assert!(m >= 1);
    (
        sign_of(u.minus(v).len()),
        weight_multiset(c, u, v, HalfInt::HALF, m),
    )
}

/// Whether a divisor of class `m` times the Schubert divisor, restricted to
/// the Richardson variety cut out by `v <= u`, has the cohomology of a point:
/// true exactly when no tableau with labels in `[1/2, m)` exists.
pub fn is_cohomologically_trivial(c: &CominData, u: Shape, v: Shape, m: i64) -> bool {
    assert!(v.is_subset(u));
    assert!(m >= 1);
    !exists_tableau(c, u, v, HalfInt::HALF, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::LieType;
    use std::collections::BTreeMap;

    fn lg3() -> CominData {
        CominData::new(LieType::C, 3, 2)
    }

    fn grid(c: &CominData, t: &PrimedTableau) -> BTreeMap<(usize, usize), HalfInt> {
        t.boxed_labels().map(|(b, l)| (c.display[b], l)).collect()
    }

    #[test]
    fn example_top_cohomology_lg_3_6() {
        let c = lg3();
        let v = c.shape_from_partition(&[2]).unwrap();
        let u = c.shape_from_partition(&[3, 2]).unwrap();
        let ts = enumerate_tableaux(&c, u, v, HalfInt::HALF, 2);
        assert_eq!(ts.len(), 2);
        let grids: Vec<_> = ts.iter().map(|t| grid(&c, t)).collect();
        let half = HalfInt::HALF;
        let one = HalfInt::ONE;
        let three_halves = HalfInt::from_doubled(3);
        assert!(grids.contains(&BTreeMap::from([
            ((1, 3), one),
            ((2, 2), one),
            ((2, 3), half),
        ])));
        assert!(grids.contains(&BTreeMap::from([
            ((1, 3), three_halves),
            ((2, 2), one),
            ((2, 3), half),
        ])));

        let (sign, ws) = euler_characteristic(&c, u, v, 2);
        assert_eq!(sign, -1);
        assert_eq!(
            ws.sorted_entries(),
            vec![(vec![2, 5, 3], 1), (vec![3, 5, 3], 1)]
        );
        assert!(!is_cohomologically_trivial(&c, u, v, 2));
    }

    #[test]
    fn empty_skew_has_one_tableau() {
        let c = lg3();
        let v = c.shape_from_partition(&[2, 1]).unwrap();
        assert_eq!(enumerate_tableaux(&c, v, v, HalfInt::HALF, 1).len(), 1);
        // Empty label range still admits the empty labeling.
        assert_eq!(enumerate_tableaux(&c, v, v, HalfInt::ZERO, 0).len(), 1);
        let (sign, ws) = euler_characteristic(&c, v, v, 1);
        assert_eq!(sign, 1);
        assert_eq!(ws.len(), 1);
        // chi of a point: the single weight is the all-ones extension of v.
        let t = PrimedTableau {
            outer: v,
            inner: v,
            labels: vec![],
        };
        assert_eq!(ws.sorted_entries()[0].0, weight(&c, &t, 1));
    }

    #[test]
    fn weight_of_zero_extension_vanishes() {
        let c = lg3();
        let t = PrimedTableau {
            outer: c.empty_shape(),
            inner: c.empty_shape(),
            labels: vec![],
        };
        assert_eq!(weight(&c, &t, 7), vec![0, 0, 0]);
    }

    #[test]
    fn minuscule_divisors_are_trivial() {
        let c = CominData::new(LieType::A, 3, 1);
        let shapes = c.all_shapes();
        for &u in &shapes {
            for &v in &shapes {
                if !v.is_subset(u) || u == v {
                    continue;
                }
                assert!(is_cohomologically_trivial(&c, u, v, 1));
                let expect = !c.is_rook_strip(u.minus(v).bits, false);
                assert_eq!(is_cohomologically_trivial(&c, u, v, 2), expect);
            }
        }
    }

    #[test]
    fn chevalley_identity_power() {
        let c = lg3();
        let v = c.shape_from_partition(&[3, 1]).unwrap();
        let terms = chevalley_power(&c, v, 0);
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].u, v);
        assert_eq!(terms[0].sign, 1);
        assert_eq!(terms[0].weights.sorted_entries(), vec![(vec![0, 0, 0], 1)]);
    }

    #[test]
    fn chevalley_first_power_minuscule() {
        let c = CominData::new(LieType::A, 3, 1);
        for &v in &c.all_shapes() {
            let terms = chevalley_power(&c, v, 1);
            for term in &terms {
                let skew = term.u.minus(v);
                assert!(c.is_rook_strip(skew.bits, false));
                assert_eq!(term.sign, if skew.len() % 2 == 0 { 1 } else { -1 });
                // All boxes are long, so the only tableau is the all-zero one
                // and the weight counts the boxes of v on each diagonal.
                let mut expect = vec![0i64; 3];
                for b in v.iter() {
                    expect[c.delta[b]] += 1;
                }
                assert_eq!(term.weights.sorted_entries(), vec![(expect, 1)]);
            }
            // Every rook strip extension occurs.
            let count = c
                .all_shapes()
                .iter()
                .filter(|&&u| v.is_subset(u) && c.is_rook_strip(u.minus(v).bits, false))
                .count();
            assert_eq!(terms.len(), count);
        }
    }

    #[test]
    fn label_splitting_recursion() {
        for c in [lg3(), CominData::new(LieType::B, 4, 0)] {
            let shapes = c.all_shapes();
            for &(a, m, p) in &[
                (HalfInt::ZERO, 1, 1),
                (HalfInt::HALF, 1, 1),
                (HalfInt::ZERO, 1, 2),
                (HalfInt::HALF, 2, 1),
            ] {
                for &u in &shapes {
                    for &v in &shapes {
                        if !v.is_subset(u) {
                            continue;
                        }
                        let lhs = weight_multiset(&c, u, v, a, m + p);
                        let mut rhs = WeightMultiset::new();
                        for &w in &shapes {
                            if v.is_subset(w) && w.is_subset(u) {
                                let low = weight_multiset(&c, w, v, HalfInt::ZERO, p);
                                let high = weight_multiset(&c, u, w, a, m);
                                rhs.add_all(&low.tensor(&high));
                            }
                        }
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn rook_strip_decomposition() {
        let c = lg3();
        let shapes = c.all_shapes();
        for m in 1..=2 {
            for &u in &shapes {
                for &v in &shapes {
                    if !v.is_subset(u) {
                        continue;
                    }
                    let lhs = weight_multiset(&c, u, v, HalfInt::ZERO, m);
                    let mut rhs = WeightMultiset::new();
                    for &w in &shapes {
                        if v.is_subset(w)
                            && w.is_subset(u)
                            && c.is_rook_strip(u.minus(w).bits, false)
                        {
                            rhs.add_all(&weight_multiset(&c, w, v, HalfInt::HALF, m));
                        }
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn naive_enumerator_agrees() {
        for c in [lg3(), CominData::new(LieType::A, 3, 1)] {
            let shapes = c.all_shapes();
            for &u in &shapes {
                for &v in &shapes {
                    if !v.is_subset(u) {
                        continue;
                    }
                    for (a, m) in [(HalfInt::ZERO, 1), (HalfInt::HALF, 2), (HalfInt::ZERO, 2)] {
                        assert_eq!(
                            enumerate_tableaux(&c, u, v, a, m),
                            enumerate_tableaux_naive(&c, u, v, a, m)
                        );
                    }
                }
            }
        }
    }
}
