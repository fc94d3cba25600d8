//! Named families of cominuscule spaces and parsing of user-facing
//! space and shape arguments.

use crate::comin::{CominData, Shape};
use crate::root_system::LieType;
use std::fmt;

/// A cominuscule space given by family and parameters, or by raw Dynkin
/// data. `Raw` stores the 0-based index of the cominuscule node.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpaceSpec {
    /// Gr(m, n): m-planes in an n-space.
    Grassmannian(usize, usize),
    /// LG(n, 2n): Lagrangian subspaces of a symplectic 2n-space.
    Lagrangian(usize),
    /// OG(n, 2n): one family of maximal isotropic subspaces of a quadric.
    Orthogonal(usize),
    /// The smooth quadric hypersurface of dimension N.
    Quadric(usize),
    /// The Cayley plane E6/P6.
    Cayley,
    /// The Freudenthal variety E7/P7.
    Freudenthal,
    Raw(LieType, usize, usize),
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpaceSpec::Grassmannian(m, n) => write!(f, "Gr({m},{n})"),
            SpaceSpec::Lagrangian(n) => write!(f, "LG({n},{})", 2 * n),
            SpaceSpec::Orthogonal(n) => write!(f, "OG({n},{})", 2 * n),
            SpaceSpec::Quadric(n) => write!(f, "Q^{n}"),
            SpaceSpec::Cayley => write!(f, "E6/P6"),
            SpaceSpec::Freudenthal => write!(f, "E7/P7"),
            SpaceSpec::Raw(t, rank, node) => write!(f, "{t}{rank}/P{}", node + 1),
        }
    }
}

fn parse_num(tok: &str, what: &str) -> Result<usize, String> {
    tok.parse()
        .map_err(|_| format!("expected a number for {what}, got `{tok}`"))
}

impl SpaceSpec {
    /// Parses tokens like `grassmannian 3 7`, `lagrangian 4`, `quadric 11`,
    /// `cayley`, or `raw d 6 6` (with a 1-based node index).
    pub fn parse(tokens: &[String]) -> Result<SpaceSpec, String> {
        let args = |n: usize| -> Result<(), String> {
            if tokens.len() == n + 1 {
                Ok(())
            } else {
                Err(format!(
                    "family `{}` takes {n} parameter(s), got {}",
                    tokens[0],
                    tokens.len() - 1
                ))
            }
        };
        let spec = match tokens.first().map(String::as_str) {
            Some("grassmannian") => {
                args(2)?;
                SpaceSpec::Grassmannian(parse_num(&tokens[1], "m")?, parse_num(&tokens[2], "n")?)
            }
            Some("lagrangian") => {
                args(1)?;
                SpaceSpec::Lagrangian(parse_num(&tokens[1], "n")?)
            }
            Some("orthogonal") => {
                args(1)?;
                SpaceSpec::Orthogonal(parse_num(&tokens[1], "n")?)
            }
            Some("quadric") => {
                args(1)?;
                SpaceSpec::Quadric(parse_num(&tokens[1], "N")?)
            }
            Some("cayley") => {
                args(0)?;
                SpaceSpec::Cayley
            }
            Some("freudenthal") => {
                args(0)?;
                SpaceSpec::Freudenthal
            }
            Some("raw") => {
                args(3)?;
                let t = match tokens[1].to_ascii_uppercase().as_str() {
                    "A" => LieType::A,
                    "B" => LieType::B,
                    "C" => LieType::C,
                    "D" => LieType::D,
                    "E" => LieType::E,
                    other => return Err(format!("unknown Lie type `{other}`")),
                };
                let rank = parse_num(&tokens[2], "rank")?;
                let node = parse_num(&tokens[3], "node")?;
                if node == 0 || node > rank {
                    return Err(format!("node must be between 1 and {rank}"));
                }
                SpaceSpec::Raw(t, rank, node - 1)
            }
            Some(other) => {
                return Err(format!(
                    "unknown family `{other}` (expected grassmannian, lagrangian, \
                     orthogonal, quadric, cayley, freudenthal, or raw)"
                ))
            }
            None => return Err("missing space specification".to_string()),
        };
        spec.dynkin()?;
        Ok(spec)
    }

    /// The Dynkin data `(type, rank, 0-based cominuscule node)`.
    pub fn dynkin(&self) -> Result<(LieType, usize, usize), String> {
        match *self {
            SpaceSpec::Grassmannian(m, n) => {
                if m == 0 || m >= n {
                    Err(format!("Gr({m},{n}) needs 0 < m < n"))
                } else {
                    Ok((LieType::A, n - 1, m - 1))
                }
            }
            SpaceSpec::Lagrangian(n) => {
                if n < 2 {
                    Err("LG(n,2n) needs n >= 2".to_string())
                } else {
                    Ok((LieType::C, n, n - 1))
                }
            }
            SpaceSpec::Orthogonal(n) => {
                if n < 3 {
                    Err("OG(n,2n) needs n >= 3".to_string())
                } else {
                    Ok((LieType::D, n, n - 1))
                }
            }
            SpaceSpec::Quadric(n) => {
                if n < 3 {
                    Err("the quadric dimension must be at least 3".to_string())
                } else if n % 2 == 1 {
                    Ok((LieType::B, (n + 1) / 2, 0))
                } else {
                    Ok((LieType::D, (n + 2) / 2, 0))
                }
            }
            SpaceSpec::Cayley => Ok((LieType::E, 6, 5)),
            SpaceSpec::Freudenthal => Ok((LieType::E, 7, 6)),
            SpaceSpec::Raw(t, rank, node) => {
                let ok = match t {
                    LieType::A => rank >= 1 && node < rank,
                    LieType::B => rank >= 2 && node == 0,
                    LieType::C => rank >= 2 && node == rank - 1,
                    LieType::D => rank >= 3 && (node == 0 || node + 2 >= rank),
                    LieType::E => {
                        (rank == 6 && (node == 0 || node == 5)) || (rank == 7 && node == 6)
                    }
                };
                if ok {
                    Ok((t, rank, node))
                } else {
                    Err(format!("{t}{rank} node {} is not cominuscule", node + 1))
                }
            }
        }
    }

    pub fn build(&self) -> Result<CominData, String> {
        let (t, rank, node) = self.dynkin()?;
        Ok(CominData::new(t, rank, node))
    }
}

/// Parses a shape argument: a comma-separated partition like `4,3,1`, the
/// empty string for the empty shape, or `boxes:i,j,k` with 0-based box
/// indices for the exceptional layouts.
pub fn parse_shape(c: &CominData, text: &str) -> Result<Shape, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(c.empty_shape());
    }
    if let Some(list) = text.strip_prefix("boxes:") {
        let mut bits = 0u128;
        if !list.trim().is_empty() {
            for tok in list.split(',') {
                let b = parse_num(tok.trim(), "box index")?;
                if b >= c.num_boxes() {
                    return Err(format!("box index {b} out of range (0..{})", c.num_boxes()));
                }
                bits |= 1 << b;
            }
        }
        if !c.is_ideal_bits(bits) {
            return Err("box set is not a lower order ideal".to_string());
        }
        return Ok(c.shape_from_bits(bits));
    }
    let mut parts = Vec::new();
    for tok in text.split(',') {
        parts.push(parse_num(tok.trim(), "row length")?);
    }
    c.shape_from_partition(&parts)
}
