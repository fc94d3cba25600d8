//! Root systems of types A, B, C, D, E6, E7 in the simple-root basis.
//!
//! Roots are integer coefficient vectors over the simple roots, with the
//! Bourbaki numbering of Dynkin diagrams. The invariant bilinear form is the
//! symmetrized Cartan matrix, normalized so long roots have squared length 2;
//! all pairings are stored doubled so arithmetic stays in the integers.

use std::collections::HashMap;
use std::fmt;

/// Simple Lie types supported by this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
            LieType::E => 'E',
        };
        write!(f, "{c}")
    }
}

/// A vector in the root lattice, as coefficients over the simple roots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootVector {
    pub coeffs: Vec<i64>,
}

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector {
            coeffs: vec![0; rank],
        }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        RootVector { coeffs }
    }

    /// Sum of coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0) && self.coeffs.iter().any(|&c| c < 0)
    }

    pub fn negate(&self) -> RootVector {
        RootVector {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        RootVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Largest number of positive roots supported by the bitset-based Weyl
/// element representation.
pub const MAX_POSITIVE_ROOTS: usize = 256;

/// An irreducible root system with its positive roots enumerated in a fixed
/// order: by height, then by coefficient vector, ascending.
pub struct RootSystem {
    pub lie_type: LieType,
    pub rank: usize,
    /// Cartan matrix `a[i][j] = <alpha_i, alpha_j^vee>`.
    pub cartan: Vec<Vec<i64>>,
    /// Doubled squared lengths `2(alpha_i, alpha_i)` of the simple roots.
    pub norm2: Vec<i64>,
    /// Doubled Gram matrix `2(alpha_i, alpha_j)`.
    gram: Vec<Vec<i64>>,
    pub positive: Vec<RootVector>,
    index: HashMap<Vec<i64>, usize>,
    /// `simple_perm[i][r]` is the index of `s_i . positive[r]`; when
    /// `positive[r] == alpha_i` the image is `-alpha_i` and the entry is `r`.
    simple_perm: Vec<Vec<u32>>,
    /// Indices of the simple roots inside `positive` (the first `rank`
    /// entries, but kept explicit).
    pub simple_idx: Vec<usize>,
}

fn build_cartan(lie_type: LieType, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edge = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match lie_type {
        LieType::A => {
            for i in 0..rank - 1 {
                edge(&mut a, i, i + 1);
            }
        }
        LieType::B => {
            assert!(rank >= 2, "type B needs rank >= 2");
            for i in 0..rank - 1 {
                edge(&mut a, i, i + 1);
            }
            a[rank - 2][rank - 1] = -2;
            a[rank - 1][rank - 2] = -1;
        }
        LieType::C => {
            assert!(rank >= 2, "type C needs rank >= 2");
            for i in 0..rank - 1 {
                edge(&mut a, i, i + 1);
            }
            a[rank - 2][rank - 1] = -1;
            a[rank - 1][rank - 2] = -2;
        }
        LieType::D => {
            assert!(rank >= 3, "type D needs rank >= 3");
            for i in 0..rank - 2 {
                edge(&mut a, i, i + 1);
            }
            edge(&mut a, rank - 3, rank - 1);
        }
        LieType::E => {
            assert!(
                rank == 6 || rank == 7,
                "type E is supported for rank 6 and 7"
            );
            // Bourbaki: node 2 attaches to node 4; the rest form a chain
            // 1 - 3 - 4 - 5 - 6 (- 7).
            edge(&mut a, 0, 2);
            edge(&mut a, 2, 3);
            edge(&mut a, 3, 4);
            edge(&mut a, 4, 5);
            edge(&mut a, 1, 3);
            if rank == 7 {
                edge(&mut a, 5, 6);
            }
        }
    }
    a
}

fn build_norm2(lie_type: LieType, rank: usize) -> Vec<i64> {
    match lie_type {
        LieType::B => {
            let mut v = vec![4; rank];
            v[rank - 1] = 2;
            v
        }
        LieType::C => {
            let mut v = vec![2; rank];
            v[rank - 1] = 4;
            v
        }
        _ => vec![4; rank],
    }
}

impl RootSystem {
    pub fn new(lie_type: LieType, rank: usize) -> RootSystem {
        assert!(rank >= 1);
        let cartan = build_cartan(lie_type, rank);
        let norm2 = build_norm2(lie_type, rank);
        let mut gram = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                // 2(alpha_i, alpha_j) = a_ij * (alpha_j, alpha_j)
                gram[i][j] = cartan[i][j] * norm2[j] / 2;
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(gram[i][j], gram[j][i], "Gram matrix must be symmetric");
            }
        }

        // Close the set of simple roots under simple reflections, keeping
        // positive vectors. Every root is conjugate to a simple root, so this
        // enumerates all of Phi+.
        let mut positive: Vec<RootVector> = (0..rank).map(|i| RootVector::simple(rank, i)).collect();
        let mut seen: HashMap<Vec<i64>, ()> =
            positive.iter().map(|r| (r.coeffs.clone(), ())).collect();
        let mut frontier = positive.clone();
        while let Some(root) = frontier.pop() {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| root.coeffs[j] * cartan[j][i]).sum();
                let mut image = root.clone();
                image.coeffs[i] -= pairing;
                if image.is_positive() && !seen.contains_key(&image.coeffs) {
                    seen.insert(image.coeffs.clone(), ());
                    positive.push(image.clone());
                    frontier.push(image);
                }
            }
        }
        positive.sort_by(|a, b| (a.height(), &a.coeffs).cmp(&(b.height(), &b.coeffs)));
        assert!(
            positive.len() <= MAX_POSITIVE_ROOTS,
            "root system too large: {} positive roots (max {})",
            positive.len(),
            MAX_POSITIVE_ROOTS
        );

        let index: HashMap<Vec<i64>, usize> = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coeffs.clone(), k))
            .collect();
        let simple_idx: Vec<usize> = (0..rank)
            .map(|i| index[&RootVector::simple(rank, i).coeffs])
            .collect();

        let mut simple_perm = vec![vec![0u32; positive.len()]; rank];
        for i in 0..rank {
            for (r, root) in positive.iter().enumerate() {
                let pairing: i64 = (0..rank).map(|j| root.coeffs[j] * cartan[j][i]).sum();
                let mut image = root.clone();
                image.coeffs[i] -= pairing;
                if image.is_positive() {
                    simple_perm[i][r] = index[&image.coeffs] as u32;
                } else {
                    assert_eq!(r, simple_idx[i], "only alpha_i flips sign under s_i");
                    simple_perm[i][r] = r as u32;
                }
            }
        }

        RootSystem {
            lie_type,
            rank,
            cartan,
            norm2,
            gram,
            positive,
            index,
            simple_perm,
            simple_idx,
        }
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root_index(&self, v: &RootVector) -> Option<usize> {
        self.index.get(&v.coeffs).copied()
    }

    pub fn root(&self, idx: usize) -> &RootVector {
        &self.positive[idx]
    }

    /// Image of `positive[r]` under the simple reflection `s_i`; the result
    /// is `-alpha_i` exactly when `r` is the index of `alpha_i`.
    pub fn simple_reflect_idx(&self, i: usize, r: usize) -> usize {
        self.simple_perm[i][r] as usize
    }

    /// Doubled pairing `2(v, w)`.
    pub fn pair2(&self, v: &RootVector, w: &RootVector) -> i64 {
        let mut acc = 0;
        for i in 0..self.rank {
            if v.coeffs[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                acc += v.coeffs[i] * self.gram[i][j] * w.coeffs[j];
            }
        }
        acc
    }

    /// Doubled squared length `2(v, v)`.
    pub fn norm2_of(&self, v: &RootVector) -> i64 {
        self.pair2(v, v)
    }

    /// `<v, beta^vee> = 2(v, beta)/(beta, beta)` for a root `beta`.
    pub fn pair_with_coroot(&self, v: &RootVector, beta: &RootVector) -> i64 {
        let num = 2 * self.pair2(v, beta);
        let den = self.norm2_of(beta);
        assert_eq!(num % den, 0, "coroot pairing must be an integer");
        num / den
    }

    /// Reflection of `v` in the hyperplane of the root `beta`.
    pub fn reflect(&self, v: &RootVector, beta: &RootVector) -> RootVector {
        let c = self.pair_with_coroot(v, beta);
        let mut out = v.clone();
        for j in 0..self.rank {
            out.coeffs[j] -= c * beta.coeffs[j];
        }
        out
    }

    /// Whether a root is long. In simply laced types every root counts as
    /// long.
    pub fn is_long(&self, v: &RootVector) -> bool {
        self.norm2_of(v) == 4
    }

    /// The highest root.
    pub fn highest_root(&self) -> &RootVector {
        self.positive.last().expect("nonempty root system")
    }

    /// Fundamental weight pairing `(omega_i, alpha^vee)` for a positive root
    /// `alpha`: the coefficient of `alpha_i` in `alpha`, rescaled by root
    /// lengths. Returns the exact integer `coeff_i(alpha) * norm2(alpha_i) /
    /// norm2(alpha)`.
    pub fn weight_coroot_pairing(&self, i: usize, alpha: &RootVector) -> i64 {
        // (omega_i, alpha^vee) = 2(omega_i, alpha)/(alpha,alpha), and
        // (omega_i, alpha) = coeff_i(alpha) * (alpha_i, alpha_i)/2.
        let num = alpha.coeffs[i] * self.norm2[i];
        let den = self.norm2_of(alpha);
        assert_eq!(num % den, 0, "weight pairing must be an integer here");
        num / den
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.lie_type, self.rank)
    }
}
