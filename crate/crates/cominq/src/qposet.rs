//! The distributive lattice of `q`-shifted Schubert classes, its cylinder of
//! join-irreducible elements, and the lattice-theoretic test for the powers
//! of `q` occurring in a quantum product.

use crate::comin::{CominData, Shape};
use crate::qdegrees::{dmax_point, shift};

/// A basis element `q^d [X^u]` of the localized quantum cohomology module,
/// recorded as the exponent `d` and the ideal `I(u)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QClass {
    pub d: i64,
    pub u: Shape,
}

/// `q^e [X^v] <= q^d [X^u]` iff `e <= d` and `v` is contained in the shift
/// of `u` by `d - e`.
pub fn qclass_leq(c: &CominData, a: QClass, b: QClass) -> bool {
    a.d <= b.d && a.u.is_subset(shift(c, b.u, b.d - a.d))
}

/// Greatest lower bound: for `e <= d`, the meet of `[d,u]` and `[e,v]` is
/// `[e, u(d-e) & v]`.
pub fn qclass_meet(c: &CominData, a: QClass, b: QClass) -> QClass {
    let (lo, hi) = if a.d <= b.d { (a, b) } else { (b, a) };
    QClass {
        d: lo.d,
        u: shift(c, hi.u, hi.d - lo.d).intersect(lo.u),
    }
}

/// Least upper bound: for `e <= d`, the join of `[d,u]` and `[e,v]` is
/// `[d, v(e-d) | u]`.
pub fn qclass_join(c: &CominData, a: QClass, b: QClass) -> QClass {
    let (lo, hi) = if a.d <= b.d { (a, b) } else { (b, a) };
    QClass {
        d: hi.d,
        u: shift(c, lo.u, lo.d - hi.d).union(hi.u),
    }
}

/// The order-reversing involution `q^d [X^u] -> q^(-d) [X^(u dual)]`.
pub fn qclass_dual(c: &CominData, a: QClass) -> QClass {
    QClass {
        d: -a.d,
        u: c.dual_shape(a.u),
    }
}

/// The product of the point class with `[X^v]`: a single power of `q` times
/// a single Schubert class. The underlying Weyl group element is the minimal
/// coset representative of `w_0^X v`.
pub fn point_product(c: &CominData, v: Shape) -> QClass {
    let w = c.w0_up.multiply(&c.element_of_shape(v));
    let out = QClass {
        d: dmax_point(c, v) as i64,
        u: c.shape_of_element(&w),
    };
    debug_assert!(qclass_leq(c, QClass { d: 0, u: v }, out));
    out
}

/// Whether `q^d` occurs in `[X_u] * [X^v]`, decided inside the lattice:
/// `q^d [X^u]` must lie between `[X^v]` and the product of the point class
/// with `[X^v]`. Independent of the fiber poset test in [`crate::qdegrees`].
pub fn qdeg_via_lattice(c: &CominData, u: Shape, v: Shape, d: i64) -> bool {
    let qd = QClass { d, u };
    qclass_leq(c, QClass { d: 0, u: v }, qd) && qclass_leq(c, qd, point_product(c, v))
}

/// The boxes outside `I(z_1 dual)`, in increasing order. Together with the
/// powers of `q`, their principal ideals generate all join-irreducible
/// elements of the lattice by shifting.
pub fn top_region(c: &CominData) -> Vec<usize> {
    let inside = c.dual_shape(c.z_shape(1));
    (0..c.num_boxes()).filter(|&b| !inside.contains(b)).collect()
}

/// Number of inverse rotations needed to move box `b` outside
/// `I(z_1 dual)`.
pub fn partial_depth(c: &CominData, b: usize) -> usize {
    let inside = c.dual_shape(c.z_shape(1));
    let mut cur = b;
    let mut e = 0;
    while inside.contains(cur) {
        cur = c.rot_inv[cur];
        e += 1;
        assert!(e <= c.num_boxes(), "rotation never leaves the top region");
    }
    e
}

/// The shape generated by box `b`: the principal lower ideal.
pub fn xi(c: &CominData, b: usize) -> Shape {
    c.shape_from_bits(c.down[b])
}

/// The join-irreducible class attached to box `b`: with `e` the depth of `b`
/// and `beta` its `e`-fold inverse rotation, this is `q^(-e) [X^(xi(beta))]`.
/// The map is an order isomorphism from the boxes onto the interval of
/// join-irreducible elements between `tau(gamma)` and the point class.
pub fn tau(c: &CominData, b: usize) -> QClass {
    let CylinderElement::Tau(d, top) = tau_element(c, b) else {
        unreachable!()
    };
    QClass { d, u: xi(c, top) }
}

/// [`tau`] as an element of the cylinder.
pub fn tau_element(c: &CominData, b: usize) -> CylinderElement {
    let e = partial_depth(c, b);
    let mut cur = b;
    for _ in 0..e {
        cur = c.rot_inv[cur];
    }
    CylinderElement::Tau(-(e as i64), cur)
}

/// A join-irreducible element of the lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CylinderElement {
    /// The class `q^d`.
    PureQ(i64),
    /// The class `q^d [X^(xi(b))]` for a box `b` outside `I(z_1 dual)`.
    Tau(i64, usize),
}

pub fn as_qclass(c: &CominData, e: CylinderElement) -> QClass {
    match e {
        CylinderElement::PureQ(d) => QClass {
            d,
            u: c.empty_shape(),
        },
        CylinderElement::Tau(d, b) => QClass { d, u: xi(c, b) },
    }
}

/// All join-irreducible elements with shift exponent in `d_lo..=d_hi`, in a
/// fixed deterministic order: by exponent, the pure power of `q` first, then
/// the shifted principal classes by increasing box.
pub fn cylinder_window(c: &CominData, d_lo: i64, d_hi: i64) -> Vec<CylinderElement> {
    let top = top_region(c);
    let mut out = Vec::new();
    for d in d_lo..=d_hi {
        out.push(CylinderElement::PureQ(d));
        out.extend(top.iter().map(|&b| CylinderElement::Tau(d, b)));
    }
    out
}

/// Covering pairs `(lower, upper)` of the window, as indices into it.
pub fn window_covers(c: &CominData, window: &[CylinderElement]) -> Vec<(usize, usize)> {
    let n = window.len();
    let classes: Vec<QClass> = window.iter().map(|&e| as_qclass(c, e)).collect();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = qclass_leq(c, classes[i], classes[j]);
        }
    }
    let strict = |i: usize, j: usize| leq[i * n + j] && i != j;
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if strict(i, j) && !(0..n).any(|k| strict(i, k) && strict(k, j)) {
                covers.push((i, j));
            }
        }
    }
    covers
}

/// Indices of the window elements lying below `a` in the lattice. For a
/// window spanning the exponents `a.d - diameter ..= a.d`, the ideal
/// determines `a` uniquely.
pub fn ideal_of(c: &CominData, a: QClass, window: &[CylinderElement]) -> Vec<usize> {
    window
        .iter()
        .enumerate()
        .filter(|&(_, &e)| qclass_leq(c, as_qclass(c, e), a))
        .map(|(i, _)| i)
        .collect()
}
