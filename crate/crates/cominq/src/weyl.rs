//! Weyl group elements, lengths, Bruhat order, and Hecke products.
//!
//! An element is stored by its action on the positive roots: a permutation of
//! indices together with a sign bit per root. Two elements are equal exactly
//! when they act identically, independent of any word used to build them. The
//! length of an element equals its number of inversions, i.e. set sign bits.

use crate::root_system::{RootSystem, RootVector, MAX_POSITIVE_ROOTS};

const SIGN_WORDS: usize = MAX_POSITIVE_ROOTS / 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    perm: Vec<u32>,
    neg: [u64; SIGN_WORDS],
}

#[inline]
fn get_bit(bits: &[u64; SIGN_WORDS], r: usize) -> bool {
    bits[r / 64] >> (r % 64) & 1 == 1
}

#[inline]
fn set_bit(bits: &mut [u64; SIGN_WORDS], r: usize, value: bool) {
    let mask = 1u64 << (r % 64);
    if value {
        bits[r / 64] |= mask;
    } else {
        bits[r / 64] &= !mask;
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> WeylElement {
        WeylElement {
            perm: (0..rs.num_positive() as u32).collect(),
            neg: [0; SIGN_WORDS],
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> WeylElement {
        WeylElement::identity(rs).mul_simple_right(rs, i)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        self.neg.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.length() == 0
    }

    /// Image of the positive root with index `r`, as (index, is_negative).
    pub fn apply_idx(&self, r: usize) -> (usize, bool) {
        (self.perm[r] as usize, get_bit(&self.neg, r))
    }

    /// `w * s_i`.
    pub fn mul_simple_right(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let n = self.perm.len();
        let ai = rs.simple_idx[i];
        let mut out = WeylElement {
            perm: vec![0; n],
            neg: [0; SIGN_WORDS],
        };
        for r in 0..n {
            let (r2, flip) = if r == ai {
                (ai, true)
            } else {
                (rs.simple_reflect_idx(i, r), false)
            };
            out.perm[r] = self.perm[r2];
            set_bit(&mut out.neg, r, get_bit(&self.neg, r2) ^ flip);
        }
        out
    }

    /// `s_i * w`.
    pub fn mul_simple_left(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let n = self.perm.len();
        let ai = rs.simple_idx[i];
        let mut out = WeylElement {
            perm: vec![0; n],
            neg: [0; SIGN_WORDS],
        };
        for r in 0..n {
            let p = self.perm[r] as usize;
            let sign = get_bit(&self.neg, r);
            let (p2, flip) = if p == ai {
                (ai, true)
            } else {
                (rs.simple_reflect_idx(i, p), false)
            };
            out.perm[r] = p2 as u32;
            set_bit(&mut out.neg, r, sign ^ flip);
        }
        out
    }

    /// Group product `self * other` (first apply `other`, then `self`).
    pub fn multiply(&self, other: &WeylElement) -> WeylElement {
        let n = self.perm.len();
        let mut out = WeylElement {
            perm: vec![0; n],
            neg: [0; SIGN_WORDS],
        };
        for r in 0..n {
            let mid = other.perm[r] as usize;
            out.perm[r] = self.perm[mid];
            set_bit(
                &mut out.neg,
                r,
                get_bit(&other.neg, r) ^ get_bit(&self.neg, mid),
            );
        }
        out
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.perm.len();
        let mut out = WeylElement {
            perm: vec![0; n],
            neg: [0; SIGN_WORDS],
        };
        for r in 0..n {
            let p = self.perm[r] as usize;
            out.perm[p] = r as u32;
            set_bit(&mut out.neg, p, get_bit(&self.neg, r));
        }
        out
    }

    /// Image of an arbitrary lattice vector.
    pub fn apply_vec(&self, rs: &RootSystem, v: &RootVector) -> RootVector {
        let mut out = RootVector::zero(rs.rank);
        for i in 0..rs.rank {
            let c = v.coeffs[i];
            if c == 0 {
                continue;
            }
            let (idx, negative) = self.apply_idx(rs.simple_idx[i]);
            let sign = if negative { -1 } else { 1 };
            for j in 0..rs.rank {
                out.coeffs[j] += c * sign * rs.positive[idx].coeffs[j];
            }
        }
        out
    }

    /// Whether `l(w * s_i) < l(w)`, i.e. `w.alpha_i < 0`.
    pub fn has_right_descent(&self, rs: &RootSystem, i: usize) -> bool {
        get_bit(&self.neg, rs.simple_idx[i])
    }

    /// Whether `l(s_i * w) < l(w)`, i.e. `w^{-1}.alpha_i < 0`.
    pub fn has_left_descent(&self, rs: &RootSystem, i: usize) -> bool {
        let ai = rs.simple_idx[i] as u32;
        for r in 0..self.perm.len() {
            if self.perm[r] == ai {
                return get_bit(&self.neg, r);
            }
        }
        unreachable!("permutation is a bijection")
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> WeylElement {
        let mut w = WeylElement::identity(rs);
        for &i in word {
            w = w.mul_simple_right(rs, i);
        }
        w
    }

    /// A reduced word, obtained by greedily stripping the smallest right
    /// descent. Deterministic.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while !w.is_identity() {
            let i = (0..rs.rank)
                .find(|&i| w.has_right_descent(rs, i))
                .expect("non-identity element has a descent");
            rev.push(i);
            w = w.mul_simple_right(rs, i);
        }
        rev.reverse();
        rev
    }

    /// Hecke (Demazure) product `w * s_i`, which fixes `w` when the length
    /// would drop.
    pub fn hecke_mul_simple(&self, rs: &RootSystem, i: usize) -> WeylElement {
        if self.has_right_descent(rs, i) {
            self.clone()
        } else {
            self.mul_simple_right(rs, i)
        }
    }

    /// Hecke product `self * other`, folding a reduced word of `other`.
    pub fn hecke(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let mut w = self.clone();
        for i in other.reduced_word(rs) {
            w = w.hecke_mul_simple(rs, i);
        }
        w
    }
}

/// The reflection in a positive root, as a Weyl element.
pub fn reflection(rs: &RootSystem, root_idx: usize) -> WeylElement {
    let beta = rs.root(root_idx).clone();
    let n = rs.num_positive();
    let mut perm = vec![0u32; n];
    let mut neg = [0u64; SIGN_WORDS];
    for r in 0..n {
        let image = rs.reflect(rs.root(r), &beta);
        if let Some(idx) = rs.root_index(&image) {
            perm[r] = idx as u32;
        } else {
            let idx = rs
                .root_index(&image.negate())
                .expect("reflection image is a root");
            perm[r] = idx as u32;
            set_bit(&mut neg, r, true);
        }
    }
    WeylElement { perm, neg }
}

/// Longest element of the parabolic subgroup generated by the simple
/// reflections `s_i` with `in_subset(i)`.
pub fn longest_element(rs: &RootSystem, in_subset: impl Fn(usize) -> bool) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    loop {
        let mut extended = false;
        for i in 0..rs.rank {
            if in_subset(i) && !w.has_right_descent(rs, i) {
                w = w.mul_simple_right(rs, i);
                extended = true;
            }
        }
        if !extended {
            return w;
        }
    }
}

/// Longest element of the full Weyl group.
pub fn w0(rs: &RootSystem) -> WeylElement {
    longest_element(rs, |_| true)
}

/// Parabolic factorization `w = w^S * w_S` where `w_S` lies in the subgroup
/// generated by the subset and `w^S` has no right descent in the subset.
pub fn parabolic_factor(
    rs: &RootSystem,
    w: &WeylElement,
    in_subset: impl Fn(usize) -> bool,
) -> (WeylElement, WeylElement) {
    let mut up = w.clone();
    loop {
        let descent = (0..rs.rank).find(|&i| in_subset(i) && up.has_right_descent(rs, i));
        match descent {
            Some(i) => up = up.mul_simple_right(rs, i),
            None => break,
        }
    }
    let low = up.inverse().multiply(w);
    debug_assert_eq!(up.length() + low.length(), w.length());
    (up, low)
}

/// Bruhat order, decided with the lifting property along a greedy reduced
/// word of `w`.
pub fn bruhat_leq(rs: &RootSystem, v: &WeylElement, w: &WeylElement) -> bool {
    if v.length() > w.length() {
        return false;
    }
    let mut v = v.clone();
    let mut w = w.clone();
    while !w.is_identity() {
        let i = (0..rs.rank)
            .find(|&i| w.has_left_descent(rs, i))
            .expect("non-identity element has a descent");
        w = w.mul_simple_left(rs, i);
        if v.has_left_descent(rs, i) {
            v = v.mul_simple_left(rs, i);
        }
    }
    v.is_identity()
}

/// Left weak order: `u <=_L w` iff `l(w u^{-1}) + l(u) = l(w)`.
pub fn left_weak_leq(_rs: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    w.multiply(&u.inverse()).length() + u.length() == w.length()
}

/// All elements of the Weyl group, by breadth-first search. Only suitable
/// for small ranks; used by oracles and tests.
pub fn enumerate_group(rs: &RootSystem) -> Vec<WeylElement> {
    enumerate_parabolic(rs, |_| true)
}

/// All elements of the subgroup generated by the selected simple reflections.
pub fn enumerate_parabolic(rs: &RootSystem, in_subset: impl Fn(usize) -> bool) -> Vec<WeylElement> {
    let mut seen = std::collections::HashSet::new();
    let mut out = vec![WeylElement::identity(rs)];
    seen.insert(out[0].clone());
    let mut head = 0;
    while head < out.len() {
        let w = out[head].clone();
        head += 1;
        for i in 0..rs.rank {
            if !in_subset(i) {
                continue;
            }
            let next = w.mul_simple_right(rs, i);
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::LieType;
    use std::collections::HashSet;

    #[test]
    fn longest_element_has_all_inversions() {
        for (t, n) in [
            (LieType::A, 4),
            (LieType::B, 3),
            (LieType::C, 4),
            (LieType::D, 4),
            (LieType::E, 6),
        ] {
            let rs = RootSystem::new(t, n);
            let w = w0(&rs);
            assert_eq!(w.length(), rs.num_positive());
            assert!(w.multiply(&w).is_identity());
        }
    }

    #[test]
    fn group_orders() {
        let rs = RootSystem::new(LieType::A, 3);
        assert_eq!(enumerate_group(&rs).len(), 24);
        let rs = RootSystem::new(LieType::B, 3);
        assert_eq!(enumerate_group(&rs).len(), 48);
        let rs = RootSystem::new(LieType::D, 4);
        assert_eq!(enumerate_group(&rs).len(), 192);
    }

    #[test]
    fn words_round_trip() {
        let rs = RootSystem::new(LieType::B, 3);
        for w in enumerate_group(&rs) {
            let word = w.reduced_word(&rs);
            assert_eq!(word.len(), w.length());
            assert_eq!(WeylElement::from_word(&rs, &word), w);
        }
    }

    #[test]
    fn inverse_and_products() {
        let rs = RootSystem::new(LieType::C, 3);
        let group = enumerate_group(&rs);
        for w in &group {
            assert!(w.multiply(&w.inverse()).is_identity());
            assert_eq!(w.inverse().length(), w.length());
        }
        let a = &group[7];
        let b = &group[23];
        let ab = a.multiply(b);
        let ab_word: Vec<usize> = a
            .reduced_word(&rs)
            .into_iter()
            .chain(b.reduced_word(&rs))
            .collect();
        assert_eq!(WeylElement::from_word(&rs, &ab_word), ab);
    }

    #[test]
    fn action_on_vectors_matches_reflections() {
        let rs = RootSystem::new(LieType::B, 3);
        for w in enumerate_group(&rs).iter().take(30) {
            let word = w.reduced_word(&rs);
            for v in &rs.positive {
                let mut expect = v.clone();
                for &i in word.iter().rev() {
                    expect = rs.reflect(&expect, rs.root(rs.simple_idx[i]));
                }
                assert_eq!(w.apply_vec(&rs, v), expect);
            }
        }
    }

    /// Bruhat order oracle: transitive closure of the reflection covers.
    fn bruhat_oracle(rs: &RootSystem) -> (Vec<WeylElement>, Vec<Vec<bool>>) {
        let group = enumerate_group(rs);
        let pos: std::collections::HashMap<&WeylElement, usize> =
            group.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let n = group.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, w) in group.iter().enumerate() {
            leq[i][i] = true;
            for r in 0..rs.num_positive() {
                let t = reflection(rs, r);
                let up = t.multiply(w);
                if up.length() == w.length() + 1 {
                    leq[i][pos[&up]] = true;
                }
            }
        }
        // Floyd-Warshall style closure over the cover relation.
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        (group, leq)
    }

    #[test]
    fn bruhat_matches_cover_closure() {
        for (t, n) in [(LieType::A, 3), (LieType::B, 3)] {
            let rs = RootSystem::new(t, n);
            let (group, leq) = bruhat_oracle(&rs);
            for (i, v) in group.iter().enumerate() {
                for (j, w) in group.iter().enumerate() {
                    assert_eq!(
                        bruhat_leq(&rs, v, w),
                        leq[i][j],
                        "bruhat mismatch in {t:?}{n}"
                    );
                }
            }
        }
    }

    #[test]
    fn hecke_products() {
        let rs = RootSystem::new(LieType::B, 3);
        let group = enumerate_group(&rs);
        let id = WeylElement::identity(&rs);
        let longest = w0(&rs);
        for w in &group {
            assert_eq!(id.hecke(&rs, w), *w);
            assert_eq!(w.hecke(&rs, &id), *w);
            assert_eq!(longest.hecke(&rs, w), longest);
            assert_eq!(w.hecke(&rs, &longest), longest);
            // The product never shortens and absorbs repeated letters.
            for i in 0..rs.rank {
                let once = w.hecke_mul_simple(&rs, i);
                assert_eq!(once.hecke_mul_simple(&rs, i), once);
                assert!(once.length() >= w.length());
            }
        }
        // Folding an unreduced word agrees with folding its reduced form.
        let u = WeylElement::from_word(&rs, &[0, 1]);
        let direct = u
            .hecke_mul_simple(&rs, 2)
            .hecke_mul_simple(&rs, 2)
            .hecke_mul_simple(&rs, 1);
        let v = WeylElement::from_word(&rs, &[2, 1]);
        assert_eq!(u.hecke(&rs, &v), direct);
    }

    #[test]
    fn hecke_associative_exhaustive_a2() {
        let rs = RootSystem::new(LieType::A, 2);
        let group = enumerate_group(&rs);
        for a in &group {
            for b in &group {
                for c in &group {
                    let left = a.hecke(&rs, b).hecke(&rs, c);
                    let right = a.hecke(&rs, &b.hecke(&rs, c));
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn weak_order_refines_bruhat() {
        let rs = RootSystem::new(LieType::A, 3);
        let group = enumerate_group(&rs);
        let mut count = 0;
        for u in &group {
            for w in &group {
                if left_weak_leq(&rs, u, w) {
                    assert!(bruhat_leq(&rs, u, w));
                    count += 1;
                }
            }
        }
        assert!(count > group.len());
    }

    #[test]
    fn parabolic_factorization() {
        let rs = RootSystem::new(LieType::B, 3);
        let group = enumerate_group(&rs);
        let subset = |i: usize| i != 2;
        let mut reps = HashSet::new();
        for w in &group {
            let (up, low) = parabolic_factor(&rs, w, subset);
            assert_eq!(up.multiply(&low), *w);
            assert!((0..rs.rank).all(|i| !subset(i) || !up.has_right_descent(&rs, i)));
            assert!(low
                .reduced_word(&rs)
                .iter()
                .all(|&i| subset(i)));
            reps.insert(up);
        }
        // The subgroup generated by s1, s2 in B3 is of type A2, so there
        // are |W| / |W_P| = 48 / 6 cosets.
        assert_eq!(reps.len(), 8);
    }
}
