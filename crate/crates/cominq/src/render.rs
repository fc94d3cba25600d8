//! Text and JSON rendering: box poset grids, cylinder window tilings, and
//! serialization of shapes, degree profiles, and weight multisets.

use crate::comin::{CominData, Shape};
use crate::qdegrees::{DegreeProfile, ExceptionalStatus};
use crate::qposet::{self, CylinderElement};
use crate::tableaux::WeightMultiset;
use serde_json::{json, Value};

/// Grid of 1-based simple-root labels, one bracketed cell per box of the
/// degree-one shift ideal.
pub fn render_poset(c: &CominData) -> String {
    let hl = c.z_shape(1);
    let width = (0..c.num_boxes())
        .map(|b| (c.delta[b] + 1).to_string().len())
        .max()
        .unwrap_or(1);
    let max_row = (0..c.num_boxes()).map(|b| c.display[b].0).max().unwrap();
    let max_col = (0..c.num_boxes()).map(|b| c.display[b].1).max().unwrap();
    let mut grid = vec![vec![None; max_col]; max_row];
    for b in 0..c.num_boxes() {
        let (r, col) = c.display[b];
        grid[r - 1][col - 1] = Some(b);
    }
    let mut out = String::new();
    for row in &grid {
        let mut line = String::new();
        for cell in row {
            match cell {
                Some(b) => {
                    let label = format!("{:>width$}", c.delta[*b] + 1);
                    if hl.contains(*b) {
                        line.push_str(&format!("[{label}]"));
                    } else {
                        line.push_str(&format!(" {label} "));
                    }
                }
                None => line.push_str(&" ".repeat(width + 2)),
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn poset_json(c: &CominData) -> Value {
    let boxes: Vec<Value> = (0..c.num_boxes())
        .map(|b| {
            json!({
                "coeffs": c.rs.root(c.boxes[b]).coeffs,
                "label": c.delta[b] + 1,
                "long": c.long[b],
            })
        })
        .collect();
    let covers: Vec<[usize; 2]> = c.covers.iter().map(|&(a, b)| [a, b]).collect();
    json!({
        "type": c.rs.lie_type,
        "rank": c.rs.rank,
        "gamma": c.gamma + 1,
        "boxes": boxes,
        "covers": covers,
    })
}

/// Displacement from a box to its rotation preimage, constant over the boxes
/// whose partial depth grows under rotation. When no constant displacement
/// exists (the rank 6 exceptional space, whose rotation twists the grid) the
/// copies are offset by two diagonal steps instead.
pub fn rotation_step(c: &CominData) -> (i64, i64) {
    let mut step: Option<(i64, i64)> = None;
    for b in 0..c.num_boxes() {
        let rb = c.rot[b];
        if qposet::partial_depth(c, rb) != qposet::partial_depth(c, b) + 1 {
            continue;
        }
        let (br, bc) = c.display[b];
        let (rr, rc) = c.display[rb];
        let delta = (br as i64 - rr as i64, bc as i64 - rc as i64);
        match step {
            None => step = Some(delta),
            Some(s) if s != delta => return (2, 2),
            _ => {}
        }
    }
    step.unwrap_or((1, 1))
}

/// Tiling of the cylinder window: one copy of the box grid per shift,
/// offset along the rotation direction, with the unshifted copy shaded.
pub fn render_cylinder(c: &CominData, d_lo: i64, d_hi: i64) -> String {
    assert!(d_lo <= d_hi);
    let (vr, vc) = rotation_step(c);
    let mut cells: std::collections::HashMap<(i64, i64), bool> = Default::default();
    for d in d_lo..=d_hi {
        for b in 0..c.num_boxes() {
            let (r, col) = c.display[b];
            let pos = (r as i64 + d * vr, col as i64 + d * vc);
            let shaded = cells.entry(pos).or_insert(false);
            *shaded |= d == 0;
        }
    }
    let r_lo = cells.keys().map(|p| p.0).min().unwrap();
    let r_hi = cells.keys().map(|p| p.0).max().unwrap();
    let c_lo = cells.keys().map(|p| p.1).min().unwrap();
    let c_hi = cells.keys().map(|p| p.1).max().unwrap();
    let mut out = String::new();
    for r in r_lo..=r_hi {
        let mut line = String::new();
        for col in c_lo..=c_hi {
            line.push_str(match cells.get(&(r, col)) {
                Some(true) => "▓▓",
                Some(false) => "░░",
                None => "  ",
            });
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn cylinder_json(c: &CominData, d_lo: i64, d_hi: i64) -> Value {
    let window = qposet::cylinder_window(c, d_lo, d_hi);
    let elements: Vec<Value> = window
        .iter()
        .map(|e| match *e {
            CylinderElement::PureQ(d) => json!({"kind": "q", "d": d}),
            CylinderElement::Tau(d, b) => json!({"kind": "tau", "d": d, "box": b}),
        })
        .collect();
    let relations: Vec<[usize; 2]> = qposet::window_covers(c, &window)
        .iter()
        .map(|&(a, b)| [a, b])
        .collect();
    json!({"elements": elements, "relations": relations})
}

/// Shapes serialize as their sorted box index list.
pub fn shape_json(s: Shape) -> Value {
    json!(s.iter().collect::<Vec<usize>>())
}

pub fn shape_from_json(c: &CominData, v: &Value) -> Result<Shape, String> {
    let arr = v.as_array().ok_or("shape must be a JSON array")?;
    let mut bits = 0u128;
    for x in arr {
        let b = x
            .as_u64()
            .ok_or_else(|| format!("bad box index {x}"))? as usize;
        if b >= c.num_boxes() {
            return Err(format!("box index {b} out of range"));
        }
        bits |= 1 << b;
    }
    if !c.is_ideal_bits(bits) {
        return Err("box set is not a lower order ideal".into());
    }
    Ok(c.shape_from_bits(bits))
}

fn status_str(s: ExceptionalStatus) -> &'static str {
    match s {
        ExceptionalStatus::Absent => "absent",
        ExceptionalStatus::Conjectural => "conjectural",
        ExceptionalStatus::Verified => "verified",
    }
}

pub fn profile_json(p: &DegreeProfile) -> Value {
    json!({
        "d_min": p.d_min,
        "d_max": p.d_max,
        "qk_max": p.qk_max,
        "exceptional": p.exceptional,
        "status": status_str(p.status),
    })
}

pub fn profile_from_json(v: &Value) -> Result<DegreeProfile, String> {
    let field = |name: &str| v.get(name).ok_or_else(|| format!("missing {name}"));
    let num = |name: &str| {
        field(name)?
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| format!("bad {name}"))
    };
    let status = match field("status")?.as_str() {
        Some("absent") => ExceptionalStatus::Absent,
        Some("conjectural") => ExceptionalStatus::Conjectural,
        Some("verified") => ExceptionalStatus::Verified,
        _ => return Err("bad status".into()),
    };
    let exceptional = match field("exceptional")? {
        Value::Null => None,
        x => Some(x.as_u64().ok_or("bad exceptional")? as usize),
    };
    Ok(DegreeProfile {
        d_min: num("d_min")?,
        d_max: num("d_max")?,
        qk_max: num("qk_max")?,
        exceptional,
        status,
    })
}

pub fn render_profile(p: &DegreeProfile) -> String {
    let mut out = format!(
        "QH degrees: [{}, {}]\nQK degrees: [{}, {}]\n",
        p.d_min, p.d_max, p.d_min, p.qk_max
    );
    match p.exceptional {
        Some(d) => out.push_str(&format!("exceptional degree: {d} ({})\n", status_str(p.status))),
        None => out.push_str("exceptional degree: none\n"),
    }
    out
}

/// Weight multisets serialize as sorted `[weight, multiplicity]` pairs.
pub fn multiset_json(ws: &WeightMultiset) -> Value {
    let entries: Vec<Value> = ws
        .sorted_entries()
        .into_iter()
        .map(|(w, k)| json!([w, k]))
        .collect();
    json!(entries)
}

pub fn multiset_from_json(v: &Value) -> Result<WeightMultiset, String> {
    let arr = v.as_array().ok_or("multiset must be a JSON array")?;
    let mut out = WeightMultiset::new();
    for entry in arr {
        let pair = entry.as_array().filter(|p| p.len() == 2).ok_or("bad entry")?;
        let w: Vec<i64> = pair[0]
            .as_array()
            .ok_or("bad weight")?
            .iter()
            .map(|x| x.as_i64().ok_or("bad coefficient"))
            .collect::<Result<_, _>>()?;
        let k = pair[1].as_u64().ok_or("bad multiplicity")? as usize;
        out.insert_many(w, k);
    }
    Ok(out)
}

/// One line per distinct weight, written in the simple-root basis. Multisets
/// store coefficient magnitudes; the characters they describe are negative,
/// so the displayed combinations are negated.
pub fn render_weights(ws: &WeightMultiset) -> String {
    let mut out = String::new();
    for (w, k) in ws.sorted_entries() {
        let mut terms = String::new();
        for (i, &m) in w.iter().enumerate() {
            let a = -m;
            if a == 0 {
                continue;
            }
            if terms.is_empty() {
                terms.push_str(if a < 0 { "-" } else { "" });
            } else {
                terms.push_str(if a < 0 { " - " } else { " + " });
            }
            if a.abs() == 1 {
                terms.push_str(&format!("b{}", i + 1));
            } else {
                terms.push_str(&format!("{}*b{}", a.abs(), i + 1));
            }
        }
        if terms.is_empty() {
            terms.push('0');
        }
        if k == 1 {
            out.push_str(&format!("  {terms}\n"));
        } else {
            out.push_str(&format!("  {terms}  (x{k})\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comin::CominData;
    use crate::root_system::LieType;

    fn space(t: LieType, rank: usize, node: usize) -> CominData {
        CominData::new(t, rank, node)
    }

    #[test]
    fn poset_grid_matches_reference_layouts() {
        let gr37 = "\
[3][4][5][6]
[2] 3  4  5
[1] 2  3  4
";
        assert_eq!(render_poset(&space(LieType::A, 6, 2)), gr37);

        let q11 = "[1][2][3][4][5][6][5][4][3][2] 1\n";
        assert_eq!(render_poset(&space(LieType::B, 6, 0)), q11);

        let og12 = "\
[6][4][3][2][1]
   [5][4][3][2]
       6  4  3
          5  4
             6
";
        assert_eq!(render_poset(&space(LieType::D, 6, 5)), og12);
    }

    #[test]
    fn highlighted_cells_count_matches_degree() {
        for c in [
            space(LieType::A, 6, 2),
            space(LieType::C, 4, 3),
            space(LieType::E, 6, 5),
            space(LieType::E, 7, 6),
        ] {
            let grid = render_poset(&c);
            let brackets = grid.matches('[').count();
            assert_eq!(brackets, c.deg_q() as usize - 1);
            assert_eq!(grid.matches(']').count(), brackets);
        }
    }

    #[test]
    fn rotation_step_values_and_exact_overlap() {
        let cases = [
            (space(LieType::A, 6, 2), (1, 1)),
            (space(LieType::C, 4, 3), (1, 1)),
            (space(LieType::D, 6, 5), (2, 2)),
            (space(LieType::B, 4, 0), (0, 6)),
            (space(LieType::D, 6, 0), (1, 7)),
            (space(LieType::E, 7, 6), (4, 4)),
        ];
        for (c, want) in cases {
            let step = rotation_step(&c);
            assert_eq!(step, want);
            // Consecutive copies of the grid share exactly the cells of the
            // boxes identified by the rotation.
            let cells: std::collections::HashSet<(i64, i64)> = (0..c.num_boxes())
                .map(|b| (c.display[b].0 as i64, c.display[b].1 as i64))
                .collect();
            let overlap = cells
                .iter()
                .filter(|&&(r, col)| cells.contains(&(r + step.0, col + step.1)))
                .count();
            let deepening = (0..c.num_boxes())
                .filter(|&b| {
                    qposet::partial_depth(&c, c.rot[b]) == qposet::partial_depth(&c, b) + 1
                })
                .count();
            assert_eq!(overlap, deepening);
        }
    }

    #[test]
    fn cylinder_render_shades_fundamental_copy() {
        let c = space(LieType::B, 4, 0);
        let want = "\
░░░░░░░░░░░░░░░░░░░░░░░░▓▓▓▓▓▓▓▓▓▓▓▓▓▓░░░░░░░░░░░░░░░░░░░░░░░░
";
        assert_eq!(render_cylinder(&c, -2, 2), want);

        let lg = space(LieType::C, 3, 2);
        let r = render_cylinder(&lg, -1, 1);
        assert_eq!(r.matches('▓').count(), 2 * lg.num_boxes());
        let cells = r.matches('▓').count() / 2 + r.matches('░').count() / 2;
        // Three copies minus two overlaps of the identified boxes.
        let deepening = (0..lg.num_boxes())
            .filter(|&b| {
                qposet::partial_depth(&lg, lg.rot[b]) == qposet::partial_depth(&lg, b) + 1
            })
            .count();
        assert_eq!(cells, 3 * lg.num_boxes() - 2 * deepening);
    }

    #[test]
    fn poset_json_schema() {
        let c = space(LieType::C, 3, 2);
        let v = poset_json(&c);
        assert_eq!(v["type"], "C");
        assert_eq!(v["rank"], 3);
        assert_eq!(v["gamma"], 3);
        assert_eq!(v["boxes"].as_array().unwrap().len(), 6);
        assert_eq!(v["covers"].as_array().unwrap().len(), c.covers.len());
        let b0 = &v["boxes"][0];
        assert_eq!(b0["label"], 3);
        assert_eq!(b0["coeffs"].as_array().unwrap().len(), 3);
        assert!(b0["long"].is_boolean());
    }

    #[test]
    fn shape_json_round_trip() {
        let c = space(LieType::C, 3, 2);
        for s in c.all_shapes() {
            let v = shape_json(s);
            assert_eq!(shape_from_json(&c, &v).unwrap(), s);
        }
        assert!(shape_from_json(&c, &json!([1])).is_err());
        assert!(shape_from_json(&c, &json!([99])).is_err());
        assert!(shape_from_json(&c, &json!("nope")).is_err());
    }

    #[test]
    fn profile_json_round_trip() {
        let c = space(LieType::C, 4, 3);
        let q = crate::qdegrees::QCalc::new(&c);
        let u = c.shape_from_partition(&[4, 2]).unwrap();
        let v = c.shape_from_partition(&[3, 1]).unwrap();
        let p = q.degree_profile(u, v);
        assert_eq!(profile_from_json(&profile_json(&p)).unwrap(), p);
        let empty = q.degree_profile(c.empty_shape(), c.empty_shape());
        assert_eq!(profile_from_json(&profile_json(&empty)).unwrap(), empty);
    }

    #[test]
    fn multiset_json_round_trip_and_weight_lines() {
        let c = space(LieType::C, 3, 2);
        let u = c.shape_from_partition(&[3, 2]).unwrap();
        let v = c.shape_from_partition(&[2]).unwrap();
        let (sign, ws) = crate::tableaux::euler_characteristic(&c, u, v, 2);
        assert_eq!(sign, -1);
        assert_eq!(multiset_from_json(&multiset_json(&ws)).unwrap(), ws);
        let lines = render_weights(&ws);
        assert_eq!(
            lines,
            "  -2*b1 - 5*b2 - 3*b3\n  -3*b1 - 5*b2 - 3*b3\n"
        );
    }

    #[test]
    fn cylinder_json_matches_window() {
        let c = space(LieType::B, 3, 0);
        let v = cylinder_json(&c, -2, 2);
        let window = qposet::cylinder_window(&c, -2, 2);
        let elements = v["elements"].as_array().unwrap();
        assert_eq!(elements.len(), window.len());
        let qs = elements.iter().filter(|e| e["kind"] == "q").count();
        assert_eq!(qs, 5);
        for e in elements {
            match e["kind"].as_str().unwrap() {
                "q" => assert!(e["box"].is_null()),
                "tau" => assert!(e["box"].is_u64()),
                k => panic!("unexpected kind {k}"),
            }
        }
        let rels = v["relations"].as_array().unwrap();
        assert_eq!(rels.len(), qposet::window_covers(&c, &window).len());
    }

    #[test]
    fn profile_text_mentions_exceptional_degree() {
        let c = space(LieType::C, 4, 3);
        let q = crate::qdegrees::QCalc::new(&c);
        let u = c.shape_from_partition(&[4, 2]).unwrap();
        let v = c.shape_from_partition(&[3, 1]).unwrap();
        let text = render_profile(&q.degree_profile(u, v));
        assert!(text.contains("QH degrees: [0, 1]"));
        assert!(text.contains("QK degrees: [0, 2]"));
        assert!(text.contains("exceptional degree: 2"));
    }
}

