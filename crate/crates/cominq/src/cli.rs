//! Command-line interface. Every computation the library offers is exposed
//! as a subcommand; `verify` runs the whole check suite.

use clap::{Args, Parser, Subcommand};
use std::io::Write;

use crate::comin::{CominData, Shape};
use crate::qdegrees::QCalc;
use crate::space::{parse_shape, SpaceSpec};
use crate::{census, render, tableaux, verify};

#[derive(Parser)]
#[command(
    name = "cominq",
    version,
    about = "Quantum cohomology and quantum K-theory combinatorics of \
             cominuscule flag varieties"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

/// Space selection shared by all subcommands: positional tokens like
/// `grassmannian 3 7`, `lagrangian 4`, `quadric 11`, `cayley`,
/// `freudenthal`, or `raw d 6 6`, or the same words in a single
/// `--space` string.
#[derive(Args)]
struct SpaceArgs {
    /// Family and parameters, e.g. `grassmannian 3 7` or `cayley`
    #[arg(value_name = "SPACE", num_args = 0..)]
    tokens: Vec<String>,
    /// The same as one string, e.g. `--space "lagrangian 4"`
    #[arg(long, value_name = "SPEC")]
    space: Option<String>,
}

impl SpaceArgs {
    fn build(&self) -> Result<CominData, String> {
        let tokens: Vec<String> = match (&self.space, self.tokens.is_empty()) {
            (Some(_), false) => {
                return Err("give the space positionally or via --space, not both".into())
            }
            (Some(s), true) => s
                .split([' ', ',', ':'])
                .filter(|t| !t.is_empty())
                .map(str::to_string)
                .collect(),
            (None, _) => self.tokens.clone(),
        };
        SpaceSpec::parse(&tokens)?.build()
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the box poset, with the degree one region in brackets
    Poset {
        #[command(flatten)]
        space: SpaceArgs,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Degrees of q in the product of two Schubert classes
    Degrees {
        #[command(flatten)]
        space: SpaceArgs,
        /// First class: partition rows like `4,3,1`, or `boxes:i,j,k`
        #[arg(long, default_value = "")]
        u: String,
        /// Second class, same syntax
        #[arg(long, default_value = "")]
        v: String,
        /// Also report whether q^d occurs
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Count pairs of classes whose product has an exceptional degree
    Census {
        #[command(flatten)]
        space: SpaceArgs,
        /// Worker threads for the pair scan (default: all cores)
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Euler characteristic sign and weights for a twisted Richardson class
    Euler {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value = "")]
        u: String,
        #[arg(long, default_value = "")]
        v: String,
        /// Power of the line bundle twist
        #[arg(long, default_value_t = 1)]
        m: i64,
        #[arg(long)]
        json: bool,
    },
    /// Expand a power of the Chevalley-type product on a class
    Chevalley {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, default_value = "")]
        v: String,
        /// Number of factors
        #[arg(long, default_value_t = 1)]
        m: i64,
        #[arg(long)]
        json: bool,
    },
    /// Draw the cylinder of shifted classes over a degree window
    Cylinder {
        #[command(flatten)]
        space: SpaceArgs,
        /// Window radius: degrees -d..=d are drawn
        #[arg(long, default_value_t = 2)]
        d: i64,
        #[arg(long)]
        json: bool,
    },
    /// Run the whole verification suite (worked examples and properties)
    Verify,
}

/// A class printed the way it is entered: as a partition when that is
/// faithful, otherwise as a raw box list.
fn shape_text(c: &CominData, s: Shape) -> String {
    let parts = c.partition_of_shape(s);
    if c.shape_from_partition(&parts) == Ok(s) {
        let rows: Vec<String> = parts.iter().map(usize::to_string).collect();
        format!("({})", rows.join(","))
    } else {
        let boxes: Vec<String> = s.iter().map(|b| b.to_string()).collect();
        format!("boxes:{}", boxes.join(","))
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON rendering cannot fail")
}

fn cmd_poset(out: &mut dyn Write, space: &SpaceArgs, json: bool) -> Result<(), String> {
    let c = space.build()?;
    if json {
        writeln!(out, "{}", pretty(&render::poset_json(&c))).map_err(|e| e.to_string())?;
    } else {
        write!(out, "{}", render::render_poset(&c)).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn cmd_degrees(
    out: &mut dyn Write,
    space: &SpaceArgs,
    u: &str,
    v: &str,
    d: Option<usize>,
    json: bool,
) -> Result<(), String> {
    let c = space.build()?;
    let u = parse_shape(&c, u)?;
    let v = parse_shape(&c, v)?;
    let q = QCalc::new(&c);
    let p = q.degree_profile(u, v);
    let occurs = d.map(|d| (d, p.qh_degrees().contains(&d), p.qk_degrees().contains(&d)));
    if json {
        let mut val = serde_json::json!({
            "space": c.rs.to_string(),
            "u": render::shape_json(u),
            "v": render::shape_json(v),
            "profile": render::profile_json(&p),
        });
        if let Some((d, qh, qk)) = occurs {
            val["query"] = serde_json::json!({ "d": d, "qh": qh, "qk": qk });
        }
        writeln!(out, "{}", pretty(&val)).map_err(|e| e.to_string())?;
    } else {
        writeln!(
            out,
            "{}  u = {}  v = {}",
            c.rs,
            shape_text(&c, u),
            shape_text(&c, v)
        )
        .map_err(|e| e.to_string())?;
        write!(out, "{}", render::render_profile(&p)).map_err(|e| e.to_string())?;
        if let Some((d, qh, qk)) = occurs {
            let word = |b| if b { "occurs" } else { "does not occur" };
            writeln!(out, "q^{d} {} in QH and {} in QK", word(qh), word(qk))
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}

fn cmd_census(
    out: &mut dyn Write,
    space: &SpaceArgs,
    threads: Option<usize>,
    json: bool,
) -> Result<(), String> {
    let c = space.build()?;
    let r = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| e.to_string())?
            .install(|| census::census(&c)),
        None => census::census(&c),
    };
    let n = c.all_shapes().len() as u64;
    let ok = r.consistent_with(n as usize);
    if json {
        let val = serde_json::json!({
            "space": c.rs.to_string(),
            "classes": n,
            "total": r.total,
            "exceptional": r.exceptional,
            "self_check": ok,
        });
        writeln!(out, "{}", pretty(&val)).map_err(|e| e.to_string())?;
    } else {
        writeln!(out, "{}: {} classes, {} unordered pairs", c.rs, n, r.total)
            .map_err(|e| e.to_string())?;
        writeln!(
            out,
            "self-check: {n}*{}/2 = {} {}",
            n + 1,
            n * (n + 1) / 2,
            if ok { "ok" } else { "MISMATCH" }
        )
        .map_err(|e| e.to_string())?;
        writeln!(
            out,
            "pairs with an exceptional degree: {} ({:.2}%)",
            r.exceptional,
            100.0 * r.exceptional as f64 / r.total as f64
        )
        .map_err(|e| e.to_string())?;
    }
    if ok {
        Ok(())
    } else {
        Err("census self-check failed".into())
    }
}

fn cmd_euler(
    out: &mut dyn Write,
    space: &SpaceArgs,
    u: &str,
    v: &str,
    m: i64,
    json: bool,
) -> Result<(), String> {
    let c = space.build()?;
    let u = parse_shape(&c, u)?;
    let v = parse_shape(&c, v)?;
    if !v.is_subset(u) {
        return Err(format!(
            "v = {} must be contained in u = {}",
            shape_text(&c, v),
            shape_text(&c, u)
        ));
    }
    let (sign, ws) = tableaux::euler_characteristic(&c, u, v, m);
    if json {
        let val = serde_json::json!({
            "space": c.rs.to_string(),
            "u": render::shape_json(u),
            "v": render::shape_json(v),
            "m": m,
            "sign": sign,
            "weights": render::multiset_json(&ws),
        });
        writeln!(out, "{}", pretty(&val)).map_err(|e| e.to_string())?;
    } else {
        writeln!(
            out,
            "{}  u = {}  v = {}  m = {m}",
            c.rs,
            shape_text(&c, u),
            shape_text(&c, v)
        )
        .map_err(|e| e.to_string())?;
        writeln!(out, "sign: {sign:+}").map_err(|e| e.to_string())?;
        writeln!(out, "weights ({}):", ws.len()).map_err(|e| e.to_string())?;
        write!(out, "{}", render::render_weights(&ws)).map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn cmd_chevalley(
    out: &mut dyn Write,
    space: &SpaceArgs,
    v: &str,
    m: i64,
    json: bool,
) -> Result<(), String> {
    let c = space.build()?;
    let v = parse_shape(&c, v)?;
    let terms = tableaux::chevalley_power(&c, v, m);
    if json {
        let arr: Vec<serde_json::Value> = terms
            .iter()
            .map(|t| {
                serde_json::json!({
                    "u": render::shape_json(t.u),
                    "sign": t.sign,
                    "weights": render::multiset_json(&t.weights),
                })
            })
            .collect();
        let val = serde_json::json!({
            "space": c.rs.to_string(),
            "v": render::shape_json(v),
            "m": m,
            "terms": arr,
        });
        writeln!(out, "{}", pretty(&val)).map_err(|e| e.to_string())?;
    } else {
        writeln!(
            out,
            "{}  v = {}  m = {m}  ({} terms)",
            c.rs,
            shape_text(&c, v),
            terms.len()
        )
        .map_err(|e| e.to_string())?;
        for t in &terms {
            writeln!(
                out,
                "u = {}  sign {:+}  weights ({}):",
                shape_text(&c, t.u),
                t.sign,
                t.weights.len()
            )
            .map_err(|e| e.to_string())?;
            write!(out, "{}", render::render_weights(&t.weights)).map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}

fn cmd_cylinder(out: &mut dyn Write, space: &SpaceArgs, d: i64, json: bool) -> Result<(), String> {
    if d < 0 {
        return Err("the window radius must be nonnegative".into());
    }
    let c = space.build()?;
    if json {
        writeln!(out, "{}", pretty(&render::cylinder_json(&c, -d, d)))
            .map_err(|e| e.to_string())?;
    } else {
        write!(out, "{}", render::render_cylinder(&c, -d, d)).map_err(|e| e.to_string())?;
    }
    Ok(())
}

/// Runs the parsed command. Returns the process exit code.
fn dispatch(cli: Cli, out: &mut dyn Write) -> i32 {
    let result = match &cli.cmd {
        Cmd::Poset { space, json } => cmd_poset(out, space, *json),
        Cmd::Degrees { space, u, v, d, json } => cmd_degrees(out, space, u, v, *d, *json),
        Cmd::Census { space, threads, json } => cmd_census(out, space, *threads, *json),
        Cmd::Euler { space, u, v, m, json } => cmd_euler(out, space, u, v, *m, *json),
        Cmd::Chevalley { space, v, m, json } => cmd_chevalley(out, space, v, *m, *json),
        Cmd::Cylinder { space, d, json } => cmd_cylinder(out, space, *d, *json),
        Cmd::Verify => {
            return match verify::run_all(out) {
                Ok(true) => 0,
                Ok(false) => 2,
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
    };
    match result {
        Ok(()) => 0,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

/// Entry point on explicit arguments, writing to the given stream.
/// Exit codes: 0 success, 1 usage or input error, 2 verification failure.
pub fn run_args<S: AsRef<str>>(args: &[S], out: &mut dyn Write) -> i32 {
    match Cli::try_parse_from(args.iter().map(AsRef::as_ref)) {
        Ok(cli) => dispatch(cli, out),
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            1
        }
        Err(e) => {
            // Help and version requests print to stdout and succeed.
            let _ = write!(out, "{e}");
            0
        }
    }
}

pub fn run() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    run_args(&args, &mut out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn capture<S: AsRef<str>>(args: &[S]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run_args(args, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn poset_prints_reference_grid() {
        let (code, text) = capture(&["cominq", "poset", "grassmannian", "3", "7"]);
        assert_eq!(code, 0);
        assert_eq!(text, "[3][4][5][6]\n[2] 3  4  5\n[1] 2  3  4\n");
        let (code, text) = capture(&["cominq", "poset", "--space", "quadric 11"]);
        assert_eq!(code, 0);
        assert_eq!(text, "[1][2][3][4][5][6][5][4][3][2] 1\n");
    }

    #[test]
    fn degrees_reports_intervals_and_query() {
        let (code, text) = capture(&[
            "cominq", "degrees", "lagrangian", "4", "--u", "3", "--v", "4,3,1", "--d", "1",
        ]);
        assert_eq!(code, 0);
        assert!(text.contains("QH degrees: [2, 3]"));
        assert!(text.contains("q^1 does not occur in QH and does not occur in QK"));
        let (code, text) = capture(&[
            "cominq", "degrees", "lagrangian", "4", "--u", "4,2", "--v", "3,1", "--json",
        ]);
        assert_eq!(code, 0);
        let val: serde_json::Value = serde_json::from_str(&text).unwrap();
        let p = render::profile_from_json(&val["profile"]).unwrap();
        assert_eq!((p.d_min, p.d_max, p.qk_max), (0, 1, 2));
        assert_eq!(p.exceptional, Some(2));
    }

    #[test]
    fn census_prints_self_check() {
        let (code, text) = capture(&["cominq", "census", "lagrangian", "4", "--threads", "2"]);
        assert_eq!(code, 0);
        assert!(text.contains("136 unordered pairs"));
        assert!(text.contains("self-check: 16*17/2 = 136 ok"));
        assert!(text.contains("exceptional degree: 17"));
    }

    #[test]
    fn euler_matches_worked_example() {
        let (code, text) = capture(&[
            "cominq", "euler", "lagrangian", "3", "--u", "3,2", "--v", "2", "--m", "2",
        ]);
        assert_eq!(code, 0);
        assert!(text.contains("sign: -1"));
        assert!(text.contains("-2*b1 - 5*b2 - 3*b3"));
        assert!(text.contains("-3*b1 - 5*b2 - 3*b3"));
    }

    #[test]
    fn chevalley_identity_on_empty_input() {
        let (code, text) = capture(&[
            "cominq", "chevalley", "quadric", "5", "--v", "", "--m", "0",
        ]);
        assert_eq!(code, 0);
        assert!(text.contains("(1 terms)"));
        assert!(text.contains("u = ()  sign +1"));
    }

    #[test]
    fn cylinder_draws_window() {
        let (code, text) = capture(&["cominq", "cylinder", "quadric", "7", "--d", "2"]);
        assert_eq!(code, 0);
        assert_eq!(text.matches("\u{2593}\u{2593}").count(), 7);
    }

    #[test]
    fn usage_errors_exit_one() {
        let cases: Vec<Vec<&str>> = vec![
            vec!["cominq", "poset", "mystery", "3"],
            vec!["cominq", "poset"],
            vec!["cominq", "degrees", "lagrangian", "4", "--u", "9,9"],
            vec!["cominq", "euler", "lagrangian", "3", "--u", "1", "--v", "2"],
            vec!["cominq", "cylinder", "quadric", "5", "--d", "-1"],
            vec!["cominq", "nonsense"],
            vec!["cominq", "poset", "lagrangian", "4", "--space", "quadric 5"],
        ];
        for args in cases {
            let (code, _) = capture(&args);
            assert_eq!(code, 1, "args {args:?}");
        }
    }

    #[test]
    fn help_exits_zero() {
        let (code, text) = capture(&["cominq", "--help"]);
        assert_eq!(code, 0);
        assert!(text.contains("census"));
    }
}
