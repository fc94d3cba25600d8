//! Shift operations, fiber posets, and the q-degrees of quantum products.
//!
//! All public operations take the ideal `I(u)` of the B-stable class and the
//! ideal `I(v)` of the opposite class for the product `[X_u] * [X^v]`. Dual
//! shapes are formed internally where needed.

use crate::comin::{self, CominData, Shape, SkewShape};
use crate::root_system::RootVector;
use crate::weyl::WeylElement;

/// Number of `gamma`-labeled boxes in `v`: the only power of `q` in the
/// product of `[X^v]` with the point class.
pub fn dmax_point(c: &CominData, v: Shape) -> usize {
    let d = c.gamma_count(v);
    debug_assert!(c.kappa_shape(d).is_subset(v) && v.is_subset(c.z_shape(d)));
    d
}

fn rot_pow(c: &CominData, steps: i64, bits: u128) -> u128 {
    let mut out = 0u128;
    let mut rest = bits;
    while rest != 0 {
        let mut b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        for _ in 0..steps.unsigned_abs() {
            b = if steps > 0 { c.rot[b] } else { c.rot_inv[b] };
        }
        out |= 1 << b;
    }
    out
}

/// The shifted class `u(d)` for any signed `d`, saturating at the extreme
/// classes beyond the diameter. For `d >= 0` the shape is
/// `I(z_d) | rot^{-d}(I(u) & I(z_d dual))`; for `d <= 0` it is
/// `rot^{|d|}(I(u) \ I(z_|d|))`.
pub fn shift(c: &CominData, u: Shape, d: i64) -> Shape {
    let dia = c.diameter() as i64;
    if d == 0 {
        return u;
    }
    if d > 0 {
        let d = d.min(dia);
        let zd = c.z_shape(d as usize);
        let kept = u.bits() & c.dual_shape(zd).bits();
        c.shape_from_bits(zd.bits() | rot_pow(c, -d, kept))
    } else {
        let e = (-d).min(dia);
        let kept = u.bits() & !c.z_shape(e as usize).bits();
        c.shape_from_bits(rot_pow(c, e, kept))
    }
}

/// The same shift computed from Weyl group products, as an independent check
/// of the box formula.
pub fn shift_oracle(c: &CominData, u: Shape, d: i64) -> Shape {
    let dia = c.diameter() as i64;
    if d >= 0 {
        let d = d.min(dia) as usize;
        let zd = c.element_of_shape(c.z_shape(d));
        let base = c.element_of_shape(u.intersect(c.dual_shape(c.z_shape(d))));
        c.shape_of_element(&base.multiply(&zd))
    } else {
        let e = (-d).min(dia) as usize;
        let zd = c.element_of_shape(c.z_shape(e));
        let joined = c.element_of_shape(u.union(c.z_shape(e)));
        c.shape_of_element(&joined.multiply(&zd.inverse()))
    }
}

/// The box poset of the general fiber of the projection from the degree-d
/// curve neighborhood construction, together with its two embeddings into
/// the ambient box poset.
pub struct FiberPoset {
    pub d: usize,
    /// Indices into `rs.positive`, in (height, coefficients) order.
    pub boxes: Vec<usize>,
    pub down: Vec<u128>,
    pub up: Vec<u128>,
    pub delta_prime: Vec<usize>,
    pub long: Vec<bool>,
    /// Fiber box -> ambient box under the action of `kappa_d`; the image is
    /// `I(z_d) \ I(kappa_d)`.
    pub kside: Vec<usize>,
    /// Fiber box -> ambient box under the action of `z_d`; the image is
    /// `I(kappa_d dual) \ I(z_d dual)`.
    pub zside: Vec<usize>,
    poset_id: u64,
    /// Longest element of the Weyl group of the fiber's stabilizer, used for
    /// dualizing fiber shapes.
    pub w0_z: WeylElement,
}

impl FiberPoset {
    pub fn num_boxes(&self) -> usize {
        self.boxes.len()
    }

    pub fn empty_shape(&self) -> Shape {
        Shape::raw(0, self.poset_id)
    }

    pub fn full_shape(&self) -> Shape {
        let n = self.num_boxes();
        Shape::raw(if n == 128 { !0 } else { (1u128 << n) - 1 }, self.poset_id)
    }

    pub fn is_ideal_bits(&self, bits: u128) -> bool {
        let mut rest = bits;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.down[b] & !bits != 0 {
                return false;
            }
        }
        true
    }

    pub fn shape_from_bits(&self, bits: u128) -> Shape {
        assert!(self.is_ideal_bits(bits), "box set is not a lower ideal");
        Shape::raw(bits, self.poset_id)
    }

    pub fn skew_from_bits(&self, bits: u128) -> SkewShape {
        SkewShape {
            bits,
            ambient: self.poset_id,
        }
    }

    /// Pairwise incomparable boxes; with `require_short`, additionally every
    /// box must be a short root (so in a simply laced system only the empty
    /// strip qualifies).
    pub fn is_rook_strip(&self, bits: u128, require_short: bool) -> bool {
        let mut rest = bits;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.down[b] | self.up[b]) & bits != 1 << b {
                return false;
            }
            if require_short && self.long[b] {
                return false;
            }
        }
        true
    }

    /// Product of the simple reflections labeling the shape, top box first.
    pub fn element_of_shape(&self, c: &CominData, s: Shape) -> WeylElement {
        let mut w = WeylElement::identity(&c.rs);
        for b in s.iter() {
            w = w.mul_simple_left(&c.rs, self.delta_prime[b]);
        }
        debug_assert_eq!(w.length(), s.len());
        w
    }

    /// Inversions of `w` among the fiber boxes.
    pub fn shape_of_element(&self, w: &WeylElement) -> Shape {
        let mut bits = 0u128;
        for (b, &r) in self.boxes.iter().enumerate() {
            if w.apply_idx(r).1 {
                bits |= 1 << b;
            }
        }
        self.shape_from_bits(bits)
    }

    /// Dual shape within the fiber poset.
    pub fn dual_shape(&self, s: Shape) -> Shape {
        let mut image = 0u128;
        for b in s.iter() {
            let (idx, neg) = self.w0_z.apply_idx(self.boxes[b]);
            assert!(!neg);
            let tb = self
                .boxes
                .iter()
                .position(|&r| r == idx)
                .expect("fiber poset closed under its longest element");
            image |= 1 << tb;
        }
        self.shape_from_bits(self.full_shape().bits() & !image)
    }

    /// Embeds a fiber shape into the ambient poset along the kappa side,
    /// adding the boxes of `I(kappa_d)`; this is the shape of the product of
    /// the fiber element with `kappa_d`.
    pub fn embed_kside(&self, c: &CominData, s: Shape) -> Shape {
        let mut bits = c.kappa_shape(self.d).bits();
        for b in s.iter() {
            bits |= 1 << self.kside[b];
        }
        c.shape_from_bits(bits)
    }

    fn region_rows(&self, c: &CominData, side: &[usize]) -> Vec<usize> {
        let mut rows: Vec<usize> = side.iter().map(|&b| c.display[b].0).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }

    fn partition_along(&self, c: &CominData, side: &[usize], s: Shape) -> Vec<usize> {
        let rows = self.region_rows(c, side);
        let mut counts = vec![0usize; rows.len()];
        for b in s.iter() {
            let r = c.display[side[b]].0;
            let slot = rows.binary_search(&r).unwrap();
            counts[slot] += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    /// Row counts of the kappa-side image, the canonical partition readout.
    pub fn partition_kside(&self, c: &CominData, s: Shape) -> Vec<usize> {
        self.partition_along(c, &self.kside, s)
    }

    /// Row counts of the z-side image; a transposed view of the same shape
    /// when the two embeddings are oriented differently.
    pub fn partition_zside(&self, c: &CominData, s: Shape) -> Vec<usize> {
        self.partition_along(c, &self.zside, s)
    }

    /// True when the two embeddings lay the fiber out in transposed
    /// orientations, so that the z-side readout should be labeled as such.
    /// Detected by whether sharing a display row is preserved between the two
    /// embeddings; translations of components preserve it, transpositions do
    /// not.
    pub fn sides_transposed(&self, c: &CominData) -> bool {
        let n = self.num_boxes();
        for i in 0..n {
            for j in i + 1..n {
                let same_k = c.display[self.kside[i]].0 == c.display[self.kside[j]].0;
                let same_z = c.display[self.zside[i]].0 == c.display[self.zside[j]].0;
                if same_k != same_z {
                    return true;
                }
            }
        }
        false
    }
}

/// Builds the fiber poset for degree `d`, checking the embedding and label
/// identities along the way.
pub fn fiber_poset(c: &CominData, d: usize) -> FiberPoset {
    assert!(d >= 1 && d <= c.diameter(), "degree out of range");
    let rs = &c.rs;
    let ek = c.element_of_shape(c.kappa_shape(d));
    let ez = c.element_of_shape(c.z_shape(d));
    let zk = ez.multiply(&ek.inverse());

    let boxes: Vec<usize> = (0..rs.num_positive())
        .filter(|&r| zk.apply_idx(r).1)
        .collect();
    let n = boxes.len();
    assert!(n <= 128);
    for &r in &boxes {
        assert_eq!(
            rs.positive[r].coeffs[c.gamma], 0,
            "fiber boxes lie outside the ambient box poset"
        );
    }

    let leq = |a: &RootVector, b: &RootVector| a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| x <= y);
    let mut down = vec![0u128; n];
    let mut up = vec![0u128; n];
    for i in 0..n {
        for j in 0..n {
            if leq(rs.root(boxes[i]), rs.root(boxes[j])) {
                down[j] |= 1 << i;
                up[i] |= 1 << j;
            }
        }
    }

    let mut delta_prime = Vec::with_capacity(n);
    for b in 0..n {
        let mut w = WeylElement::identity(rs);
        let mut rest = down[b] & !(1u128 << b);
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            w = w.multiply(&crate::weyl::reflection(rs, boxes[a]));
        }
        let image = w.apply_vec(rs, rs.root(boxes[b]));
        let label = (0..rs.rank).find(|&i| image == RootVector::simple(rs.rank, i));
        delta_prime.push(label.expect("fiber label must be a simple root"));
    }
    let long: Vec<bool> = boxes.iter().map(|&r| rs.is_long(rs.root(r))).collect();

    let side_map = |e: &WeylElement| -> Vec<usize> {
        boxes
            .iter()
            .map(|&r| {
                let (idx, neg) = e.apply_idx(r);
                assert!(!neg, "side embedding must send boxes to positive roots");
                c.box_of_root_idx(idx)
                    .expect("side embedding must land in the ambient box poset")
            })
            .collect()
    };
    let kside = side_map(&ek);
    let zside = side_map(&ez);

    let kset: u128 = kside.iter().fold(0, |acc, &b| acc | 1u128 << b);
    let zset: u128 = zside.iter().fold(0, |acc, &b| acc | 1u128 << b);
    assert_eq!(
        kset,
        c.z_shape(d).bits() & !c.kappa_shape(d).bits(),
        "kappa side must fill I(z_d) minus I(kappa_d)"
    );
    assert_eq!(
        zset,
        c.dual_shape(c.kappa_shape(d)).bits() & !c.dual_shape(c.z_shape(d)).bits(),
        "z side must fill the dual region"
    );
    for i in 0..n {
        for j in 0..n {
            let fib = down[j] >> i & 1 == 1;
            assert_eq!(fib, c.box_leq(kside[i], kside[j]));
            assert_eq!(fib, c.box_leq(zside[i], zside[j]));
        }
        assert_eq!(c.delta[kside[i]], delta_prime[i], "kappa side keeps labels");
        let image = c
            .w0_up
            .apply_vec(rs, &RootVector::simple(rs.rank, delta_prime[i]));
        let twisted = (0..rs.rank)
            .find(|&k| image == RootVector::simple(rs.rank, k))
            .expect("twisted label must be simple");
        assert_eq!(c.delta[zside[i]], twisted, "z side twists labels");
        // The two embeddings differ by d rotation steps.
        let mut b = kside[i];
        for _ in 0..d {
            b = c.rot[b];
        }
        assert_eq!(b, zside[i], "z side is the rotated kappa side");
    }

    // w_{0,Z_d} = kappa_d w_{0,X} z_d.
    let w0_z = ek.multiply(&c.w0_par).multiply(&ez);
    debug_assert!(w0_z.multiply(&w0_z).is_identity());

    FiberPoset {
        d,
        boxes,
        down,
        up,
        delta_prime,
        long,
        kside,
        zside,
        poset_id: comin::fresh_poset_id(),
        w0_z,
    }
}

/// Context caching the fiber posets of one space, used by all degree
/// computations.
pub struct QCalc<'a> {
    pub c: &'a CominData,
    fibers: Vec<FiberPoset>,
}

impl<'a> QCalc<'a> {
    pub fn new(c: &'a CominData) -> QCalc<'a> {
        let fibers = (1..=c.diameter()).map(|d| fiber_poset(c, d)).collect();
        QCalc { c, fibers }
    }

    pub fn fiber(&self, d: usize) -> &FiberPoset {
        &self.fibers[d - 1]
    }

    /// The pullbacks `(I(u_d), I(v^d))` as shapes of the degree-d fiber
    /// poset: `u` along the z side, `v` along the kappa side.
    pub fn fiber_elements(&self, u: Shape, v: Shape, d: usize) -> (Shape, Shape) {
        let f = self.fiber(d);
        let mut ub = 0u128;
        let mut vb = 0u128;
        for b in 0..f.num_boxes() {
            if u.contains(f.zside[b]) {
                ub |= 1 << b;
            }
            if v.contains(f.kside[b]) {
                vb |= 1 << b;
            }
        }
        (f.shape_from_bits(ub), f.shape_from_bits(vb))
    }

    /// The same pullbacks computed from the defining Weyl group products.
    pub fn fiber_elements_oracle(&self, u: Shape, v: Shape, d: usize) -> (Shape, Shape) {
        let c = self.c;
        let f = self.fiber(d);
        let zd = c.z_shape(d);
        let kd = c.kappa_shape(d);
        let ucapzv = c.element_of_shape(u.intersect(c.dual_shape(zd)));
        let ucapkv = c.element_of_shape(u.intersect(c.dual_shape(kd)));
        let u_hat = ucapkv.multiply(&ucapzv.inverse());
        let w0x = c.w0_up.clone();
        let ud = w0x.inverse().multiply(&u_hat).multiply(&w0x);
        let vcapz = c.element_of_shape(v.intersect(zd));
        let vcapk = c.element_of_shape(v.intersect(kd));
        let vd = vcapz.multiply(&vcapk.inverse());
        (f.shape_of_element(&ud), f.shape_of_element(&vd))
    }

    /// Smallest degree of `q` in `[X_u] * [X^v]`: the number of shift steps
    /// needed before `I(u)` contains `I(v)`.
    pub fn d_min(&self, u: Shape, v: Shape) -> usize {
        (0..=self.c.diameter())
            .find(|&d| v.is_subset(shift(self.c, u, d as i64)))
            .expect("the full shape contains every ideal")
    }

    /// Whether `q^d` occurs in `[X_u] * [X^v]`.
    pub fn qh_degree_occurs(&self, u: Shape, v: Shape, d: usize) -> bool {
        let bound = dmax_point(self.c, self.c.dual_shape(u)).min(dmax_point(self.c, v));
        if d > bound || d < self.d_min(u, v) {
            return false;
        }
        if d == 0 {
            return true;
        }
        let (ud, vd) = self.fiber_elements(u, v, d);
        ud.is_subset(vd)
    }

    /// Largest degree of `q` in `[X_u] * [X^v]`, computed by the closed
    /// formula and verified against a direct scan.
    pub fn d_max(&self, u: Shape, v: Shape) -> usize {
        let c = self.c;
        let wv = c.w0_up.multiply(&c.element_of_shape(v));
        let wv_shape = c.shape_of_element(&wv);
        let formula = dmax_point(c, v) - self.d_min(wv_shape, u);
        let scan = (0..=c.diameter())
            .rev()
            .find(|&d| self.qh_degree_occurs(u, v, d))
            .expect("every quantum product is non-zero");
        assert_eq!(formula, scan, "maximal degree formulas disagree");
        formula
    }

    /// The set of exceptional degrees (empty or a single degree): degrees d
    /// in the allowed range where `I(u_d) \ I(v^d)` is a non-empty short rook
    /// strip in the fiber poset.
    ///
    /// Presence is not symmetric in `(u, v)`; it is invariant under
    /// `(u, v) -> (dual v, dual u)`, which indexes the same product read from
    /// the other side. The census counts unordered pairs along that pairing.
    pub fn exceptional_degrees(&self, u: Shape, v: Shape) -> Vec<usize> {
        let bound = dmax_point(self.c, self.c.dual_shape(u)).min(dmax_point(self.c, v));
        let mut out = Vec::new();
        for d in 1..=bound {
            let f = self.fiber(d);
            let (ud, vd) = self.fiber_elements(u, v, d);
            let diff = ud.bits() & !vd.bits();
            if diff != 0 && f.is_rook_strip(diff, true) {
                out.push(d);
            }
        }
        assert!(out.len() <= 1, "at most one exceptional degree can occur");
        out
    }

    /// Fast test used by the census.
    pub fn exceptional_nonempty(&self, u: Shape, v: Shape) -> bool {
        let bound = dmax_point(self.c, self.c.dual_shape(u)).min(dmax_point(self.c, v));
        for d in 1..=bound {
            let f = self.fiber(d);
            let mut diff = 0u128;
            for b in 0..f.num_boxes() {
                if u.contains(f.zside[b]) && !v.contains(f.kside[b]) {
                    diff |= 1 << b;
                }
            }
            if diff != 0 && f.is_rook_strip(diff, true) {
                return true;
            }
        }
        false
    }

    pub fn degree_profile(&self, u: Shape, v: Shape) -> DegreeProfile {
        let d_min = self.d_min(u, v);
        let d_max = self.d_max(u, v);
        assert!(d_min <= d_max && d_max <= self.c.diameter());
        let exceptional = self.exceptional_degrees(u, v);
        let (exc, status) = match exceptional.first() {
            None => (None, ExceptionalStatus::Absent),
            Some(&d) => {
                assert_eq!(d, d_max + 1, "exceptional degree must follow the interval");
                (Some(d), self.occurrence_status())
            }
        };
        DegreeProfile {
            d_min,
            d_max,
            qk_max: d_max + exc.map_or(0, |_| 1),
            exceptional: exc,
            status,
        }
    }

    /// Whether exceptional occurrence is a proven statement for this space:
    /// odd quadrics and Lagrangian Grassmannians up to LG(6,12).
    fn occurrence_status(&self) -> ExceptionalStatus {
        use crate::root_system::LieType;
        let rs = &self.c.rs;
        let verified = match rs.lie_type {
            LieType::B => self.c.gamma == 0,
            LieType::C => rs.rank <= 6,
            _ => false,
        };
        if verified {
            ExceptionalStatus::Verified
        } else {
            ExceptionalStatus::Conjectural
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExceptionalStatus {
    Absent,
    Conjectural,
    Verified,
}

/// Degrees of `q` appearing in one quantum (K-theoretic) product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeProfile {
    pub d_min: usize,
    pub d_max: usize,
    /// Top degree in quantum K-theory: `d_max`, or `d_max + 1` when an
    /// exceptional degree is present.
    pub qk_max: usize,
    pub exceptional: Option<usize>,
    pub status: ExceptionalStatus,
}

impl DegreeProfile {
    pub fn qh_degrees(&self) -> std::ops::RangeInclusive<usize> {
        self.d_min..=self.d_max
    }

    pub fn qk_degrees(&self) -> std::ops::RangeInclusive<usize> {
        self.d_min..=self.qk_max
    }
}
