//! Self-contained verification checks: the worked examples and the property
//! suites backing the main computations, runnable as one batch.

use crate::comin::{CominData, Shape};
use crate::qdegrees::{dmax_point, shift, ExceptionalStatus, QCalc};
use crate::root_system::LieType;
use crate::tableaux::{
    chevalley_power, enumerate_tableaux, enumerate_tableaux_naive, euler_characteristic,
    weight_multiset,
};
use crate::halfint::HalfInt;
use crate::{census, qposet, render};
use qposet::QClass;

pub struct Check {
    pub name: &'static str,
    pub run: fn() -> Result<(), String>,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn gr(m: usize, n: usize) -> CominData {
    CominData::new(LieType::A, n - 1, m - 1)
}

fn lg(n: usize) -> CominData {
    CominData::new(LieType::C, n, n - 1)
}

fn og(n: usize) -> CominData {
    CominData::new(LieType::D, n, n - 1)
}

fn quadric(n: usize) -> CominData {
    if n % 2 == 1 {
        CominData::new(LieType::B, (n + 1) / 2, 0)
    } else {
        CominData::new(LieType::D, (n + 2) / 2, 0)
    }
}

fn part(c: &CominData, p: &[usize]) -> Shape {
    c.shape_from_partition(p).unwrap()
}

fn reference_layouts() -> Result<(), String> {
    let want = [
        (gr(3, 7), "[3][4][5][6]\n[2] 3  4  5\n[1] 2  3  4\n"),
        (quadric(11), "[1][2][3][4][5][6][5][4][3][2] 1\n"),
        (
            og(6),
            "[6][4][3][2][1]\n   [5][4][3][2]\n       6  4  3\n          5  4\n             6\n",
        ),
    ];
    for (c, grid) in want {
        ensure!(render::render_poset(&c) == grid, "box grid mismatch for {}", c.rs);
    }
    let counts = [
        (gr(3, 7), 12),
        (lg(3), 6),
        (og(5), 10),
        (quadric(5), 5),
        (quadric(6), 6),
        (CominData::new(LieType::E, 6, 5), 16),
        (CominData::new(LieType::E, 7, 6), 27),
    ];
    for (c, n) in counts {
        ensure!(c.num_boxes() == n, "box count mismatch for {}", c.rs);
    }
    Ok(())
}

fn degree_of_q() -> Result<(), String> {
    let cases: [(CominData, i64); 8] = [
        (gr(3, 7), 7),
        (gr(2, 5), 5),
        (lg(4), 5),
        (og(6), 10),
        (quadric(9), 9),
        (quadric(10), 10),
        (CominData::new(LieType::E, 6, 5), 12),
        (CominData::new(LieType::E, 7, 6), 18),
    ];
    for (c, want) in cases {
        let computed = c.deg_q();
        // Independent oracle: the anticanonical pairing against the curve
        // class, summed box by box.
        let oracle: i64 = c.gamma_pairing.iter().sum();
        ensure!(
            computed == want && oracle == want,
            "degree of q for {}: computed {computed}, oracle {oracle}, expected {want}",
            c.rs
        );
    }
    Ok(())
}

fn euler_characteristic_example() -> Result<(), String> {
    let c = lg(3);
    let (sign, ws) = euler_characteristic(&c, part(&c, &[3, 2]), part(&c, &[2]), 2);
    ensure!(sign == -1, "sign {sign}, expected -1");
    let got = ws.sorted_entries();
    let want = vec![(vec![2, 5, 3], 1), (vec![3, 5, 3], 1)];
    ensure!(got == want, "weights {got:?}, expected {want:?}");
    Ok(())
}

fn chevalley_identity_term() -> Result<(), String> {
    let c = quadric(5);
    let terms = chevalley_power(&c, c.empty_shape(), 0);
    ensure!(terms.len() == 1, "expected a single term, got {}", terms.len());
    let t = &terms[0];
    ensure!(
        t.u.is_empty() && t.sign == 1 && t.weights.sorted_entries() == vec![(vec![0; 3], 1)],
        "expected the identity term"
    );
    Ok(())
}

fn degree_interval_example() -> Result<(), String> {
    let c = lg(4);
    let q = QCalc::new(&c);
    let u = part(&c, &[3]);
    let v = part(&c, &[4, 3, 1]);
    ensure!(q.d_min(u, v) == 2, "d_min {} != 2", q.d_min(u, v));
    ensure!(q.d_max(u, v) == 3, "d_max {} != 3", q.d_max(u, v));
    for d in 0..=4 {
        let lattice = qposet::qdeg_via_lattice(&c, u, v, d);
        let fiber = q.qh_degree_occurs(u, v, d as usize);
        ensure!(lattice == fiber, "tests disagree at degree {d}");
        ensure!(lattice == (d == 2 || d == 3), "wrong occurrence at degree {d}");
    }
    let pp = qposet::point_product(&c, v);
    ensure!(
        pp.d == 3 && c.partition_of_shape(pp.u) == vec![3],
        "point product of (4,3,1) should be the degree 3 shift of (3)"
    );
    Ok(())
}

fn exceptional_example() -> Result<(), String> {
    let c = lg(4);
    let q = QCalc::new(&c);
    let p = q.degree_profile(part(&c, &[4, 2]), part(&c, &[3, 1]));
    ensure!(
        p.d_min == 0 && p.d_max == 1 && p.qk_max == 2,
        "profile interval wrong: {p:?}"
    );
    ensure!(
        p.exceptional == Some(2) && p.status == ExceptionalStatus::Verified,
        "exceptional degree wrong: {p:?}"
    );
    Ok(())
}

fn quadric_middle_box() -> Result<(), String> {
    for n in [3usize, 4] {
        let c = quadric(2 * n - 1);
        let q = QCalc::new(&c);
        let middle = 1u128 << (n - 1);
        let shapes = c.all_shapes();
        for &u in &shapes {
            for &v in &shapes {
                let exc = q.exceptional_degrees(u, v);
                let is_middle = u.bits() & !v.bits() == middle;
                ensure!(
                    exc.is_empty() != is_middle,
                    "Q^{}: wrong exceptional set for bits {:b}/{:b}",
                    2 * n - 1,
                    u.bits(),
                    v.bits()
                );
                if is_middle {
                    ensure!(exc == vec![1], "Q^{}: exceptional degree not 1", 2 * n - 1);
                }
            }
        }
    }
    Ok(())
}

fn census_table() -> Result<(), String> {
    let want: [(usize, u64, u64); 9] = [
        (2, 10, 1),
        (3, 36, 3),
        (4, 136, 17),
        (5, 528, 70),
        (6, 2080, 313),
        (7, 8256, 1317),
        (8, 32896, 5590),
        (9, 131328, 23310),
        (10, 524800, 96932),
    ];
    for (n, total, exceptional) in want {
        let c = lg(n);
        let r = census::census(&c);
        ensure!(
            r.consistent_with(c.all_shapes().len()),
            "LG({n},{}): total fails the pair-count self-check",
            2 * n
        );
        ensure!(
            r.total == total && r.exceptional == exceptional,
            "LG({n},{}): got ({}, {}), expected ({total}, {exceptional})",
            2 * n,
            r.total,
            r.exceptional
        );
    }
    Ok(())
}

fn minuscule_no_exceptional() -> Result<(), String> {
    let spaces = [
        gr(2, 5),
        gr(3, 6),
        og(5),
        quadric(6),
        CominData::new(LieType::E, 6, 5),
    ];
    for c in spaces {
        let q = QCalc::new(&c);
        let shapes = c.all_shapes();
        for &u in &shapes {
            for &v in &shapes {
                let p = q.degree_profile(u, v);
                ensure!(
                    p.exceptional.is_none() && p.qk_max == p.d_max,
                    "{}: exceptional degree found in a minuscule space",
                    c.rs
                );
            }
        }
    }
    Ok(())
}

fn degree_tests_cross_check() -> Result<(), String> {
    for c in [lg(3), quadric(5), gr(2, 5), quadric(6)] {
        let q = QCalc::new(&c);
        let shapes = c.all_shapes();
        let hi = c.diameter() as i64 + 2;
        for &u in &shapes {
            for &v in &shapes {
                // d_max runs the closed formula and asserts it against the
                // scan internally.
                let dm = q.d_max(u, v) as i64;
                ensure!(dm <= c.diameter() as i64, "d_max out of range");
                for d in 0..=hi {
                    let lattice = qposet::qdeg_via_lattice(&c, u, v, d);
                    let fiber = d >= 0 && q.qh_degree_occurs(u, v, d as usize);
                    ensure!(
                        lattice == fiber,
                        "{}: lattice and fiber tests disagree at degree {d}",
                        c.rs
                    );
                }
            }
        }
    }
    Ok(())
}

fn fiber_recursion_identities() -> Result<(), String> {
    for c in [lg(3), quadric(5)] {
        let q = QCalc::new(&c);
        let shapes = c.all_shapes();
        for &u in &shapes {
            for &v in &shapes {
                let bound_u = dmax_point(&c, c.dual_shape(u));
                let bound_v = dmax_point(&c, v);
                for d in 1..=bound_u.max(bound_v) {
                    let (ud, vd) = q.fiber_elements(u, v, d);
                    let embed = |s: Shape| q.fiber(d).embed_kside(&c, s);
                    // The degree 0 fiber is a point, so both boundary shapes
                    // are empty.
                    if d <= bound_u {
                        let lhs = if d == 1 {
                            c.empty_shape()
                        } else {
                            let (ud1, _) = q.fiber_elements(u, v, d - 1);
                            q.fiber(d - 1).embed_kside(&c, ud1)
                        };
                        let rhs = shift(&c, embed(ud), -1);
                        ensure!(
                            lhs == rhs,
                            "{}: shift identity fails for the first fiber element at degree {d}",
                            c.rs
                        );
                    }
                    if d <= bound_v {
                        let lhs = if d == 1 {
                            c.empty_shape()
                        } else {
                            let (_, vd1) = q.fiber_elements(u, v, d - 1);
                            q.fiber(d - 1).embed_kside(&c, vd1)
                        };
                        let rhs = embed(vd).intersect(c.z_shape(d - 1));
                        ensure!(
                            lhs == rhs,
                            "{}: intersection identity fails for the second fiber element at degree {d}",
                            c.rs
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn shift_identities() -> Result<(), String> {
    let c = lg(3);
    let dia = c.diameter() as i64;
    let shapes = c.all_shapes();
    for &u in &shapes {
        for &v in &shapes {
            for d in -dia - 2..=dia + 2 {
                let uv = |s: Shape, t: Shape| s.union(t);
                ensure!(
                    shift(&c, uv(u, v), d) == uv(shift(&c, u, d), shift(&c, v, d)),
                    "union does not commute with shifting"
                );
                ensure!(
                    shift(&c, u.intersect(v), d) == shift(&c, u, d).intersect(shift(&c, v, d)),
                    "intersection does not commute with shifting"
                );
                for e in 0..=dia + 2 {
                    let z = c.z_shape(e.min(dia) as usize);
                    ensure!(
                        shift(&c, u.union(shift(&c, v, d)), e)
                            == shift(&c, u, e).union(shift(&c, v, d + e)),
                        "mixed union shift identity fails"
                    );
                    ensure!(
                        shift(&c, shift(&c, u, d).intersect(v), -e)
                            == shift(&c, u, d - e).intersect(shift(&c, v, -e)),
                        "mixed intersection shift identity fails"
                    );
                    ensure!(
                        shift(&c, shift(&c, u, d), e) == shift(&c, u, d + e).union(z),
                        "iterated shift identity fails"
                    );
                }
            }
        }
    }
    Ok(())
}

fn lattice_laws() -> Result<(), String> {
    let c = quadric(5);
    let shapes = c.all_shapes();
    let dia = c.diameter() as i64;
    let mut elems = Vec::new();
    for d in -dia..=dia {
        for &u in &shapes {
            elems.push(QClass { d, u });
        }
    }
    for &a in &elems {
        for &b in &elems {
            let m = qposet::qclass_meet(&c, a, b);
            let j = qposet::qclass_join(&c, a, b);
            ensure!(
                qposet::qclass_meet(&c, b, a) == m && qposet::qclass_join(&c, b, a) == j,
                "meet or join is not commutative"
            );
            ensure!(
                qposet::qclass_join(&c, a, m) == a && qposet::qclass_meet(&c, a, j) == a,
                "absorption fails"
            );
        }
    }
    let sample: Vec<QClass> = elems.iter().copied().step_by(3).collect();
    for &a in &sample {
        for &b in &sample {
            for &x in &sample {
                let lhs =
                    qposet::qclass_meet(&c, a, qposet::qclass_join(&c, b, x));
                let rhs = qposet::qclass_join(
                    &c,
                    qposet::qclass_meet(&c, a, b),
                    qposet::qclass_meet(&c, a, x),
                );
                ensure!(lhs == rhs, "distributivity fails");
            }
        }
    }
    Ok(())
}

fn tau_values() -> Result<(), String> {
    let spaces = [
        gr(2, 5),
        lg(3),
        og(5),
        quadric(5),
        quadric(6),
        CominData::new(LieType::E, 6, 5),
        CominData::new(LieType::E, 7, 6),
    ];
    for c in spaces {
        let dia = c.diameter();
        let gamma_box = 0;
        let rho_box = c.num_boxes() - 1;
        let tg = qposet::tau(&c, gamma_box);
        ensure!(
            tg == QClass { d: 1 - dia as i64, u: c.kappa_shape(dia) },
            "{}: wrong value at the minimal box",
            c.rs
        );
        let tr = qposet::tau(&c, rho_box);
        ensure!(
            tr == QClass { d: 0, u: c.full_shape() },
            "{}: wrong value at the maximal box",
            c.rs
        );
        for a in 0..c.num_boxes() {
            for b in 0..c.num_boxes() {
                let leq = qposet::qclass_leq(&c, qposet::tau(&c, a), qposet::tau(&c, b));
                ensure!(
                    leq == c.box_leq(a, b),
                    "{}: the box order is not embedded",
                    c.rs
                );
            }
        }
    }
    Ok(())
}

fn join_irreducibles() -> Result<(), String> {
    let c = quadric(5);
    let dia = c.diameter() as i64;
    let shapes = c.all_shapes();
    let top: Vec<usize> = qposet::top_region(&c);
    let mut universe = Vec::new();
    for d in -(2 * dia + 1)..=(2 * dia + 1) {
        for &u in &shapes {
            universe.push(QClass { d, u });
        }
    }
    for &x in &universe {
        if x.d.abs() > dia {
            continue;
        }
        let mut strictly_below: Vec<QClass> = universe
            .iter()
            .copied()
            .filter(|&y| y != x && qposet::qclass_leq(&c, y, x))
            .collect();
        let join_of_below = strictly_below
            .drain(..)
            .reduce(|a, b| qposet::qclass_join(&c, a, b))
            .unwrap();
        let irreducible = join_of_below != x;
        let expected = x.u.is_empty() || top.iter().any(|&b| qposet::xi(&c, b) == x.u);
        ensure!(
            irreducible == expected,
            "misclassified join-irreducible {x:?}"
        );
    }
    Ok(())
}

fn tableau_enumeration_oracle() -> Result<(), String> {
    let c = lg(3);
    let shapes = c.all_shapes();
    for &outer in &shapes {
        for &inner in &shapes {
            if !inner.is_subset(outer) {
                continue;
            }
            for (a, m) in [(HalfInt::HALF, 2), (HalfInt::ZERO, 1), (HalfInt::HALF, 3)] {
                let fast = enumerate_tableaux(&c, outer, inner, a, m);
                let slow = enumerate_tableaux_naive(&c, outer, inner, a, m);
                ensure!(
                    fast.len() == slow.len(),
                    "enumeration counts disagree on a skew of size {}",
                    outer.minus(inner).len()
                );
            }
        }
    }
    Ok(())
}

fn tableau_recursion() -> Result<(), String> {
    let c = lg(3);
    let shapes = c.all_shapes();
    for &u in &shapes {
        for &v in &shapes {
            if !v.is_subset(u) {
                continue;
            }
            for (a, m, p) in [(HalfInt::HALF, 1, 1), (HalfInt::ZERO, 1, 2), (HalfInt::HALF, 2, 1)]
            {
                let lhs = weight_multiset(&c, u, v, a, m + p);
                let mut rhs = crate::tableaux::WeightMultiset::new();
                for &w in &shapes {
                    if v.is_subset(w) && w.is_subset(u) {
                        let inner = weight_multiset(&c, w, v, HalfInt::ZERO, p);
                        let outer = weight_multiset(&c, u, w, a, m);
                        rhs.add_all(&inner.tensor(&outer));
                    }
                }
                ensure!(
                    lhs == rhs,
                    "label-splitting recursion fails at (a, m, p) = ({a:?}, {m}, {p})"
                );
            }
        }
    }
    Ok(())
}

fn hecke_associativity() -> Result<(), String> {
    let c = lg(3);
    let group = crate::weyl::enumerate_group(&c.rs);
    ensure!(group.len() == 48, "wrong group order {}", group.len());
    let mut state = 0x243f6a8885a308d3u64;
    let mut pick = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        &group[(state % group.len() as u64) as usize]
    };
    for _ in 0..2000 {
        let (u, v, w) = (pick(), pick(), pick());
        let lhs = u.hecke(&c.rs, v).hecke(&c.rs, w);
        let rhs = u.hecke(&c.rs, &v.hecke(&c.rs, w));
        ensure!(lhs == rhs, "Hecke product is not associative");
    }
    Ok(())
}

fn semi_transversal_identity() -> Result<(), String> {
    let c = lg(3);
    let shapes = c.all_shapes();
    for &us in &shapes {
        for &zs in &shapes {
            let u = c.element_of_shape(us);
            let z = c.element_of_shape(zs);
            let kappa = u.hecke(&c.rs, &c.w0_par).hecke(&c.rs, &z.inverse());
            let lhs = kappa.multiply(&z).multiply(&c.w0_par);
            let want = us.intersect(c.dual_shape(zs));
            ensure!(
                lhs == c.element_of_shape(want),
                "semi-transversal product identity fails"
            );
        }
    }
    Ok(())
}

fn json_round_trips() -> Result<(), String> {
    let c = lg(3);
    let q = QCalc::new(&c);
    for s in c.all_shapes() {
        let back = render::shape_from_json(&c, &render::shape_json(s))
            .map_err(|e| format!("shape parse: {e}"))?;
        ensure!(back == s, "shape round trip fails");
    }
    let p = q.degree_profile(part(&c, &[3, 2]), part(&c, &[1]));
    let back = render::profile_from_json(&render::profile_json(&p))
        .map_err(|e| format!("profile parse: {e}"))?;
    ensure!(back == p, "profile round trip fails");
    let (_, ws) = euler_characteristic(&c, part(&c, &[3, 2]), part(&c, &[2]), 2);
    let back = render::multiset_from_json(&render::multiset_json(&ws))
        .map_err(|e| format!("multiset parse: {e}"))?;
    ensure!(back == ws, "multiset round trip fails");
    Ok(())
}

fn point_product_formula() -> Result<(), String> {
    for c in [lg(3), quadric(5), gr(2, 5), og(5)] {
        for v in c.all_shapes() {
            let pp = qposet::point_product(&c, v);
            ensure!(
                pp.d == dmax_point(&c, v) as i64,
                "{}: wrong shift in the point product",
                c.rs
            );
            ensure!(
                qposet::qclass_leq(&c, QClass { d: 0, u: v }, pp),
                "{}: point product does not dominate the class",
                c.rs
            );
            // The product class is the element w_0^X v computed in the Weyl
            // group.
            let w = c.w0_up.multiply(&c.element_of_shape(v));
            ensure!(
                pp.u == c.shape_of_element(&w),
                "{}: wrong class in the point product",
                c.rs
            );
        }
    }
    Ok(())
}

pub fn checks() -> Vec<Check> {
    vec![
        Check { name: "reference layouts", run: reference_layouts },
        Check { name: "degree of q", run: degree_of_q },
        Check { name: "euler characteristic example", run: euler_characteristic_example },
        Check { name: "chevalley identity term", run: chevalley_identity_term },
        Check { name: "degree interval example", run: degree_interval_example },
        Check { name: "exceptional degree example", run: exceptional_example },
        Check { name: "odd quadric middle box", run: quadric_middle_box },
        Check { name: "lagrangian census table", run: census_table },
        Check { name: "minuscule spaces have no exceptional degrees", run: minuscule_no_exceptional },
        Check { name: "degree tests cross-check", run: degree_tests_cross_check },
        Check { name: "fiber recursion identities", run: fiber_recursion_identities },
        Check { name: "shift identities", run: shift_identities },
        Check { name: "lattice laws", run: lattice_laws },
        Check { name: "tau special values and embedding", run: tau_values },
        Check { name: "join-irreducible classification", run: join_irreducibles },
        Check { name: "tableau enumeration oracle", run: tableau_enumeration_oracle },
        Check { name: "tableau recursion", run: tableau_recursion },
        Check { name: "hecke associativity", run: hecke_associativity },
        Check { name: "semi-transversal identity", run: semi_transversal_identity },
        Check { name: "json round trips", run: json_round_trips },
        Check { name: "point product formula", run: point_product_formula },
    ]
}

/// Runs every check, printing one line per check; returns whether all passed.
pub fn run_all(out: &mut dyn std::io::Write) -> std::io::Result<bool> {
    let mut ok = true;
    for check in checks() {
        match (check.run)() {
            Ok(()) => writeln!(out, "ok   {}", check.name)?,
            Err(msg) => {
                ok = false;
                writeln!(out, "FAIL {}: {msg}", check.name)?;
            }
        }
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        let mut failures = Vec::new();
        for check in checks() {
            if let Err(msg) = (check.run)() {
                failures.push(format!("{}: {msg}", check.name));
            }
        }
        assert!(failures.is_empty(), "failed checks:\n{}", failures.join("\n"));
    }
}
