//! Split root data with exact rational arithmetic.
//!
//! A [`RootDatum`] packages the combinatorial skeleton of a split reductive
//! group: simple roots, positive roots, coroots with their pairing vectors,
//! the half-sum vector rho, and a normalizing coweight `t` with alpha(t) = 1
//! for every simple root alpha.
//!
//! Coordinates are fixed per series:
//! * semisimple series (A..G) use fundamental-weight coordinates, so a weight
//!   is the vector of its values on the simple coroots of the `upper`
//!   orientation;
//! * `GL` uses epsilon coordinates on the diagonal torus, so a weight of
//!   `GL_{d+1}` is a (d+1)-tuple.
//!
//! The `lower` orientation is the same ambient coordinate space with every
//! root negated: positive roots, coroots, rho and t all flip sign, while the
//! Weyl group and its action stay identical.
//!
//! No floating point appears anywhere; weights are `BigRational` vectors and
//! roots are integer vectors.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Series label of a split reductive type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    GL,
}

impl Series {
    pub fn parse(s: &str) -> Result<Series> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            "GL" => Ok(Series::GL),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
            Series::GL => "GL",
        };
        write!(f, "{s}")
    }
}

/// Which of the two opposite root systems is declared positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Upper,
    Lower,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Upper => write!(f, "upper"),
            Orientation::Lower => write!(f, "lower"),
        }
    }
}

/// Identity of a root datum; two values interoperate iff their fingerprints
/// are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub series: Series,
    pub rank: u8,
    pub orientation: Orientation,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}/{}", self.series, self.rank, self.orientation)
    }
}

/// A root together with its coroot's pairing vector.
///
/// `coords` are the coordinates of the root in the datum's ambient weight
/// coordinates. `pairing` encodes the coroot: for a weight with coordinates
/// `v`, the value of `<v, alpha_check>` is the dot product `pairing . v`.
/// `simple_coeffs` expresses the root over the datum's simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub coords: Vec<i64>,
    pub pairing: Vec<i64>,
    pub simple_coeffs: Vec<i64>,
}

/// Immutable root datum. Construct via [`build_root_datum`].
#[derive(Debug, Clone)]
pub struct RootDatum {
    fingerprint: Fingerprint,
    /// Dimension of the ambient coordinate space (rank for fundamental
    /// coordinates, d+1 for GL_{d+1}).
    dim: usize,
    /// Semisimple rank = number of simple roots.
    ss_rank: usize,
    simple_roots: Vec<Root>,
    positive_roots: Vec<Root>,
    rho: Vec<Rat>,
    t_vec: Vec<Rat>,
    weyl_order: u64,
    weyl_cap: u64,
}

/// Default bound on the Weyl group order; keeps every exact computation at
/// desk scale (covers A6 / GL7 and everything smaller).
pub const DEFAULT_WEYL_CAP: u64 = 5040;

/// Hard bound for the brute-force Hecke oracle.
pub const ORACLE_WEYL_BOUND: u64 = 24;

fn weyl_order(series: Series, rank: u8) -> Result<u64> {
    let n = rank as u64;
    let fact = |k: u64| -> Option<u64> { (1..=k).try_fold(1u64, |a, b| a.checked_mul(b)) };
    let overflow = || Error::UnsupportedType(format!("{series}{rank}: Weyl order overflows"));
    match series {
        Series::A => fact(n + 1).ok_or_else(overflow),
        Series::B | Series::C => fact(n)
            .and_then(|f| 2u64.checked_pow(rank as u32).and_then(|p| f.checked_mul(p)))
            .ok_or_else(overflow),
        Series::D => fact(n)
            .and_then(|f| 2u64.checked_pow(rank as u32 - 1).and_then(|p| f.checked_mul(p)))
            .ok_or_else(overflow),
        Series::E => match rank {
            6 => Ok(51_840),
            7 => Ok(2_903_040),
            8 => Ok(696_729_600),
            _ => unreachable!(),
        },
        Series::F => Ok(1152),
        Series::G => Ok(12),
        Series::GL => fact(n).ok_or_else(overflow),
    }
}

fn check_rank(series: Series, rank: u8) -> Result<()> {
    let ok = match series {
        Series::A => rank >= 1,
        Series::B | Series::C => rank >= 2,
        Series::D => rank >= 3,
        Series::E => (6..=8).contains(&rank),
        Series::F => rank == 4,
        Series::G => rank == 2,
        Series::GL => rank >= 1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedType(format!("{series}{rank}")))
    }
}

/// Cartan matrix with entries `c[i][j] = <alpha_j, alpha_i_check>`.
fn cartan_matrix(series: Series, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match series {
        Series::A => {
            for i in 0..n.saturating_sub(1) {
                bond(i, i + 1);
            }
        }
        Series::B => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
            // last simple root is short
            c[n - 1][n - 2] = -2;
        }
        Series::C => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
            // last simple root is long
            c[n - 2][n - 1] = -2;
        }
        Series::D => {
            for i in 0..n - 2 {
                bond(i, i + 1);
            }
            bond(n - 3, n - 1);
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
        }
        Series::E => {
            // Bourbaki numbering: chain 1-3-4-5-..., branch 2-4.
            bond(0, 2);
            for i in 2..n - 1 {
                bond(i, i + 1);
            }
            bond(1, 3);
        }
        Series::F => {
            for i in 0..3 {
                bond(i, i + 1);
            }
            c[2][1] = -2;
        }
        Series::G => {
            bond(0, 1);
            c[1][0] = -3;
        }
        Series::GL => unreachable!("GL roots are built directly"),
    }
    c
}

/// Close the simple roots under reflections, tracking fundamental
/// coordinates, coroot pairing vectors and simple-root coefficients.
fn generate_roots_fundamental(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let simples: Vec<Root> = (0..n)
        .map(|j| {
            let coords: Vec<i64> = (0..n).map(|i| cartan[i][j]).collect();
            let mut pairing = vec![0i64; n];
            pairing[j] = 1;
            let mut simple_coeffs = vec![0i64; n];
            simple_coeffs[j] = 1;
            Root {
                coords,
                pairing,
                simple_coeffs,
            }
        })
        .collect();

    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Root> = simples.clone();
    let mut all: Vec<Root> = Vec::new();
    for r in &queue {
        seen.insert(r.coords.clone());
    }
    while let Some(root) = queue.pop() {
        for i in 0..n {
            // <alpha, alpha_i_check> is coordinate i in fundamental coordinates.
            let p = root.coords[i];
            let mut coords = root.coords.clone();
            for (a, c) in coords.iter_mut().enumerate() {
                *c -= p * cartan[a][i];
            }
            let dot: i64 = (0..n).map(|a| cartan[a][i] * root.pairing[a]).sum();
            let mut pairing = root.pairing.clone();
            pairing[i] -= dot;
            let mut simple_coeffs = root.simple_coeffs.clone();
            simple_coeffs[i] -= p;
            let refl = Root {
                coords,
                pairing,
                simple_coeffs,
            };
            if seen.insert(refl.coords.clone()) {
                queue.push(refl.clone());
            }
        }
        all.push(root);
    }
    all
}

/// Exact Gaussian elimination for the small square system `m x = rhs`.
fn solve_rational(m: &[Vec<i64>], rhs: &[Rat]) -> Vec<Rat> {
    let n = rhs.len();
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = m[i].iter().map(|&x| rat(x)).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, pivot);
        let inv = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= inv.clone();
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                    let sub = f.clone() * pv.clone();
                    row[c] -= sub;
                }
            }
        }
    }
    (0..n).map(|i| a[i][n].clone()).collect()
}

/// Construct the immutable root datum for `(series, rank, orientation)` with
/// the default Weyl-order cap.
pub fn build_root_datum(
    series: Series,
    rank: u8,
    orientation: Orientation,
) -> Result<RootDatum> {
    build_root_datum_with_cap(series, rank, orientation, DEFAULT_WEYL_CAP)
}

/// Same as [`build_root_datum`] with an explicit cap on the Weyl group order.
pub fn build_root_datum_with_cap(
    series: Series,
    rank: u8,
    orientation: Orientation,
    cap: u64,
) -> Result<RootDatum> {
    check_rank(series, rank)?;
    let order = weyl_order(series, rank)?;
    if order > cap {
        return Err(Error::RankTooLarge { size: order, cap });
    }

    let (dim, ss_rank, mut simple_roots, mut positive_roots, mut rho, mut t_vec) = match series {
        Series::GL => {
            let n = rank as usize;
            let d = n - 1;
            let mut simples = Vec::with_capacity(d);
            for i in 0..d {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v[i + 1] = -1;
                let mut coeffs = vec![0i64; d];
                coeffs[i] = 1;
                simples.push(Root {
                    coords: v.clone(),
                    pairing: v,
                    simple_coeffs: coeffs,
                });
            }
            let mut positives = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut v = vec![0i64; n];
                    v[i] = 1;
                    v[j] = -1;
                    let mut coeffs = vec![0i64; d];
                    for c in coeffs.iter_mut().take(j).skip(i) {
                        *c = 1;
                    }
                    positives.push(Root {
                        coords: v.clone(),
                        pairing: v,
                        simple_coeffs: coeffs,
                    });
                }
            }
            let rho: Vec<Rat> = (0..n).map(|i| rat((d - i) as i64)).collect();
            let t: Vec<Rat> = rho.clone();
            (n, d, simples, positives, rho, t)
        }
        _ => {
            let n = rank as usize;
            let cartan = cartan_matrix(series, n);
            let all = generate_roots_fundamental(&cartan);
            let simples: Vec<Root> = (0..n)
                .map(|j| {
                    all.iter()
                        .find(|r| {
                            r.simple_coeffs.iter().enumerate().all(|(k, &c)| {
                                if k == j {
                                    c == 1
                                } else {
                                    c == 0
                                }
                            })
                        })
                        .expect("simple root present")
                        .clone()
                })
                .collect();
            let positives: Vec<Root> = all
                .into_iter()
                .filter(|r| r.simple_coeffs.iter().all(|&c| c >= 0))
                .collect();
            let rho: Vec<Rat> = vec![Rat::one(); n];
            // alpha_i(t) = 1 for every simple root: solve C^T t = (1,..,1)
            // over the simple-coroot basis.
            let ct: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| cartan[j][i]).collect())
                .collect();
            let ones: Vec<Rat> = vec![Rat::one(); n];
            let t = solve_rational(&ct, &ones);
            (n, n, simples, positives, rho, t)
        }
    };

    if orientation == Orientation::Lower {
        let negate_root = |r: &mut Root| {
            for c in r.coords.iter_mut() {
                *c = -*c;
            }
            for p in r.pairing.iter_mut() {
                *p = -*p;
            }
            // coefficients over the datum's own (negated) simple roots are
            // unchanged
        };
        simple_roots.iter_mut().for_each(negate_root);
        positive_roots.iter_mut().for_each(negate_root);
        rho.iter_mut().for_each(|x| *x = -x.clone());
        t_vec.iter_mut().for_each(|x| *x = -x.clone());
    }

    Ok(RootDatum {
        fingerprint: Fingerprint {
            series,
            rank,
            orientation,
        },
        dim,
        ss_rank,
        simple_roots,
        positive_roots,
        rho,
        t_vec,
        weyl_order: order,
        weyl_cap: cap,
    })
}

impl RootDatum {
    pub fn fingerprint(&self) -> Fingerprint {
        self.fingerprint
    }

    pub fn series(&self) -> Series {
        self.fingerprint.series
    }

    pub fn rank(&self) -> u8 {
        self.fingerprint.rank
    }

    pub fn orientation(&self) -> Orientation {
        self.fingerprint.orientation
    }

    /// Dimension of the ambient coordinate space for weights.
    pub fn coord_dim(&self) -> usize {
        self.dim
    }

    /// Number of simple roots.
    pub fn ss_rank(&self) -> usize {
        self.ss_rank
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_pos_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &[Rat] {
        &self.rho
    }

    /// The normalizing coweight `t` (coordinates in the basis dual to the
    /// weight coordinates): alpha(t) = 1 for every simple alpha.
    pub fn t_vec(&self) -> &[Rat] {
        &self.t_vec
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    pub fn weyl_cap(&self) -> u64 {
        self.weyl_cap
    }

    /// Reflection matrix of the i-th simple root, acting on weight
    /// coordinates (row-major `dim x dim`).
    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<i64> {
        let n = self.dim;
        let root = &self.simple_roots[i];
        let mut m = vec![0i64; n * n];
        for a in 0..n {
            for b in 0..n {
                m[a * n + b] = i64::from(a == b) - root.coords[a] * root.pairing[b];
            }
        }
        m
    }

    /// Build a weight from exact rational coordinates.
    pub fn weight(&self, coords: Vec<Rat>) -> Result<Weight> {
        if coords.len() != self.dim {
            return Err(Error::InvalidInput(format!(
                "weight has {} coordinates, datum {} needs {}",
                coords.len(),
                self.fingerprint,
                self.dim
            )));
        }
        Ok(Weight {
            coords,
            fp: self.fingerprint,
        })
    }

    pub fn weight_from_ints(&self, coords: &[i64]) -> Result<Weight> {
        self.weight(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero_weight(&self) -> Weight {
        Weight {
            coords: vec![Rat::zero(); self.dim],
            fp: self.fingerprint,
        }
    }

    pub fn rho_weight(&self) -> Weight {
        Weight {
            coords: self.rho.clone(),
            fp: self.fingerprint,
        }
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.fp != self.fingerprint {
            return Err(Error::DatumMismatch(
                w.fp.to_string(),
                self.fingerprint.to_string(),
            ));
        }
        Ok(())
    }

    /// Exact pairing `<lambda, alpha_check>` of a weight with a coroot of
    /// this datum.
    pub fn pairing(&self, lambda: &Weight, root: &Root) -> Result<Rat> {
        self.check_weight(lambda)?;
        Ok(pairing_vec(&lambda.coords, &root.pairing))
    }

    /// Is `<lambda, alpha_check>` integral for every simple root?
    pub fn is_integral(&self, lambda: &Weight) -> Result<bool> {
        self.check_weight(lambda)?;
        Ok(self
            .simple_roots
            .iter()
            .all(|r| pairing_vec(&lambda.coords, &r.pairing).is_integer()))
    }

    pub(crate) fn require_integral(&self, lambda: &Weight) -> Result<()> {
        self.check_weight(lambda)?;
        for (i, r) in self.simple_roots.iter().enumerate() {
            let p = pairing_vec(&lambda.coords, &r.pairing);
            if !p.is_integer() {
                return Err(Error::NonIntegralWeight {
                    index: i,
                    pairing: p.to_string(),
                });
            }
        }
        Ok(())
    }

    /// rho-shifted dominance: `<lambda + rho, alpha_check> >= 0` for every
    /// simple alpha.
    pub fn dot_dominant(&self, lambda: &Weight) -> Result<bool> {
        self.require_integral(lambda)?;
        Ok(self.simple_roots.iter().all(|r| {
            let shifted = add_vec(&lambda.coords, &self.rho);
            !pairing_vec(&shifted, &r.pairing).is_negative()
        }))
    }

    /// Indices of the simple roots on whose wall `lambda` lies:
    /// `{ i : <lambda + rho, alpha_i_check> = 0 }`.
    pub fn singular_support(&self, lambda: &Weight) -> Result<BTreeSet<usize>> {
        self.require_integral(lambda)?;
        let shifted = add_vec(&lambda.coords, &self.rho);
        Ok(self
            .simple_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| pairing_vec(&shifted, &r.pairing).is_zero())
            .map(|(i, _)| i)
            .collect())
    }

    /// The standard parabolic adapted to `lambda`:
    /// `I = { i : <lambda, alpha_i_check> is a nonnegative integer }`
    /// (unshifted pairing).
    pub fn maximal_parabolic_for(&self, lambda: &Weight) -> Result<BTreeSet<usize>> {
        self.require_integral(lambda)?;
        Ok(self
            .simple_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| !pairing_vec(&lambda.coords, &r.pairing).is_negative())
            .map(|(i, _)| i)
            .collect())
    }

    /// Positive roots lying in the Levi spanned by the simple roots in `I`.
    pub fn levi_pos_roots(&self, parabolic: &BTreeSet<usize>) -> usize {
        self.positive_roots
            .iter()
            .filter(|r| {
                r.simple_coeffs
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || parabolic.contains(&i))
            })
            .count()
    }

    /// `dim g/p_I`: positive roots outside the Levi of the standard
    /// parabolic attached to `I`.
    pub fn dim_g_mod_p(&self, parabolic: &BTreeSet<usize>) -> Result<usize> {
        for &i in parabolic {
            if i >= self.ss_rank {
                return Err(Error::IndexOutOfRange(format!(
                    "simple root index {i} out of range for {}",
                    self.fingerprint
                )));
            }
        }
        Ok(self.num_pos_roots() - self.levi_pos_roots(parabolic))
    }

    /// Dual Coxeter number of the semisimple part (GL_{d+1} has an A_d
    /// factor). `None` for tori.
    pub fn dual_coxeter_number(&self) -> Option<u64> {
        let n = self.fingerprint.rank as u64;
        match self.fingerprint.series {
            Series::A => Some(n + 1),
            Series::B => Some(2 * n - 1),
            Series::C => Some(n + 1),
            Series::D => Some(2 * n - 2),
            Series::E => Some(match self.fingerprint.rank {
                6 => 12,
                7 => 18,
                _ => 30,
            }),
            Series::F => Some(9),
            Series::G => Some(4),
            Series::GL => {
                if n >= 2 {
                    Some(n)
                } else {
                    None
                }
            }
        }
    }
}

/// A weight vector bound to the datum it lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<Rat>,
    fp: Fingerprint,
}

impl Weight {
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn fingerprint(&self) -> Fingerprint {
        self.fp
    }

    pub(crate) fn from_parts(coords: Vec<Rat>, fp: Fingerprint) -> Weight {
        Weight { coords, fp }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub(crate) fn pairing_vec(coords: &[Rat], pairing: &[i64]) -> Rat {
    let mut acc = Rat::zero();
    for (c, &p) in coords.iter().zip(pairing) {
        if p != 0 {
            acc += c * rat(p);
        }
    }
    acc
}

pub(crate) fn add_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(series: Series, rank: u8) -> RootDatum {
        build_root_datum(series, rank, Orientation::Upper).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(datum(Series::A, 1).num_pos_roots(), 1);
        assert_eq!(datum(Series::A, 2).num_pos_roots(), 3);
        assert_eq!(datum(Series::A, 3).num_pos_roots(), 6);
        assert_eq!(datum(Series::B, 2).num_pos_roots(), 4);
        assert_eq!(datum(Series::B, 3).num_pos_roots(), 9);
        assert_eq!(datum(Series::C, 3).num_pos_roots(), 9);
        assert_eq!(datum(Series::D, 4).num_pos_roots(), 12);
        assert_eq!(datum(Series::G, 2).num_pos_roots(), 6);
        assert_eq!(datum(Series::F, 4).num_pos_roots(), 24);
        assert_eq!(datum(Series::GL, 3).num_pos_roots(), 3);
        assert_eq!(datum(Series::GL, 4).num_pos_roots(), 6);
    }

    #[test]
    fn exceptional_root_counts_with_raised_cap() {
        let e6 = build_root_datum_with_cap(Series::E, 6, Orientation::Upper, 60_000).unwrap();
        assert_eq!(e6.num_pos_roots(), 36);
        let e7 =
            build_root_datum_with_cap(Series::E, 7, Orientation::Upper, 3_000_000).unwrap();
        assert_eq!(e7.num_pos_roots(), 63);
        let e8 =
            build_root_datum_with_cap(Series::E, 8, Orientation::Upper, 700_000_000).unwrap();
        assert_eq!(e8.num_pos_roots(), 120);
    }

    #[test]
    fn rho_pairs_to_one_and_t_normalizes() {
        for (series, rank) in [
            (Series::A, 3),
            (Series::B, 2),
            (Series::B, 3),
            (Series::C, 2),
            (Series::D, 4),
            (Series::G, 2),
            (Series::F, 4),
            (Series::GL, 2),
            (Series::GL, 4),
        ] {
            for orientation in [Orientation::Upper, Orientation::Lower] {
                let d = build_root_datum(series, rank, orientation).unwrap();
                let rho = d.rho_weight();
                for r in d.simple_roots() {
                    assert_eq!(d.pairing(&rho, r).unwrap(), Rat::one(), "{series}{rank}");
                    // alpha(t) = sum of root coords times t coords
                    let mut val = Rat::zero();
                    for (c, t) in r.coords.iter().zip(d.t_vec()) {
                        val += rat(*c) * t;
                    }
                    assert_eq!(val, Rat::one(), "{series}{rank} t normalization");
                }
            }
        }
    }

    #[test]
    fn root_addition_closure_is_recorded() {
        for (series, rank) in [
            (Series::A, 3),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
            (Series::G, 2),
            (Series::F, 4),
            (Series::GL, 4),
        ] {
            let d = datum(series, rank);
            let set: BTreeSet<Vec<i64>> = d
                .positive_roots()
                .iter()
                .map(|r| r.coords.clone())
                .collect();
            for a in d.positive_roots() {
                for b in d.positive_roots() {
                    let sum: Vec<i64> =
                        a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
                    // if alpha+beta is a root at all, it is a recorded
                    // positive root (sums of positives stay positive)
                    let coeff_sum: Vec<i64> = a
                        .simple_coeffs
                        .iter()
                        .zip(&b.simple_coeffs)
                        .map(|(x, y)| x + y)
                        .collect();
                    let recorded = d
                        .positive_roots()
                        .iter()
                        .any(|r| r.simple_coeffs == coeff_sum);
                    if recorded {
                        assert!(set.contains(&sum));
                    }
                }
            }
        }
    }

    #[test]
    fn orientation_flip_negates_simple_pairings() {
        for (series, rank) in [(Series::A, 2), (Series::B, 2), (Series::GL, 3)] {
            let up = build_root_datum(series, rank, Orientation::Upper).unwrap();
            let lo = build_root_datum(series, rank, Orientation::Lower).unwrap();
            let coords: Vec<Rat> = (0..up.coord_dim()).map(|i| rat(i as i64 + 1)).collect();
            let wu = up.weight(coords.clone()).unwrap();
            let wl = lo.weight(coords).unwrap();
            for i in 0..up.ss_rank() {
                let pu = up.pairing(&wu, &up.simple_roots()[i]).unwrap();
                let pl = lo.pairing(&wl, &lo.simple_roots()[i]).unwrap();
                assert_eq!(pu, -pl);
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let gl3 = datum(Series::GL, 3);
        let lam = gl3.weight_from_ints(&[1, 0, 0]).unwrap();
        assert_eq!(
            gl3.pairing(&lam, &gl3.simple_roots()[0]).unwrap(),
            Rat::one()
        );
        let zero = gl3.zero_weight();
        assert!(gl3
            .pairing(&zero, &gl3.simple_roots()[1])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn datum_mismatch_is_detected() {
        let a2 = datum(Series::A, 2);
        let b2 = datum(Series::B, 2);
        let w = a2.zero_weight();
        assert!(matches!(
            b2.pairing(&w, &b2.simple_roots()[0]),
            Err(Error::DatumMismatch(_, _))
        ));
    }

    #[test]
    fn dominance_and_singular_support() {
        let a2 = datum(Series::A, 2);
        // -rho lies on every wall
        let neg_rho = a2
            .weight(a2.rho().iter().map(|x| -x.clone()).collect())
            .unwrap();
        assert!(a2.dot_dominant(&neg_rho).unwrap());
        assert_eq!(
            a2.singular_support(&neg_rho).unwrap(),
            BTreeSet::from([0, 1])
        );
        // 0 is regular dominant
        let zero = a2.zero_weight();
        assert!(a2.dot_dominant(&zero).unwrap());
        assert!(a2.singular_support(&zero).unwrap().is_empty());
        // lambda + rho = (0, 2) in fundamental coordinates
        let lam = a2.weight_from_ints(&[-1, 1]).unwrap();
        assert_eq!(a2.singular_support(&lam).unwrap(), BTreeSet::from([0]));
    }

    #[test]
    fn maximal_parabolic_examples() {
        let a2 = datum(Series::A, 2);
        let zero = a2.zero_weight();
        assert_eq!(
            a2.maximal_parabolic_for(&zero).unwrap(),
            BTreeSet::from([0, 1])
        );
        let neg_rho = a2
            .weight(a2.rho().iter().map(|x| -x.clone()).collect())
            .unwrap();
        assert!(a2.maximal_parabolic_for(&neg_rho).unwrap().is_empty());
        let gl3 = datum(Series::GL, 3);
        let lam = gl3.weight_from_ints(&[0, 1, 0]).unwrap();
        assert_eq!(gl3.maximal_parabolic_for(&lam).unwrap(), BTreeSet::from([1]));
    }

    #[test]
    fn non_integral_weight_is_rejected() {
        let a1 = datum(Series::A, 1);
        let half = a1
            .weight(vec![Rat::new(BigInt::from(1), BigInt::from(2))])
            .unwrap();
        assert!(matches!(
            a1.singular_support(&half),
            Err(Error::NonIntegralWeight { .. })
        ));
        // GL weights with integral differences are integral even when the
        // entries are not integers
        let gl2 = datum(Series::GL, 2);
        let halves = gl2
            .weight(vec![
                Rat::new(BigInt::from(1), BigInt::from(2)),
                Rat::new(BigInt::from(-1), BigInt::from(2)),
            ])
            .unwrap();
        assert!(gl2.is_integral(&halves).unwrap());
    }

    #[test]
    fn dim_g_mod_p_examples() {
        let gl4 = datum(Series::GL, 4);
        let all: BTreeSet<usize> = (0..3).collect();
        assert_eq!(gl4.dim_g_mod_p(&all).unwrap(), 0);
        assert_eq!(gl4.dim_g_mod_p(&BTreeSet::new()).unwrap(), 6);
        // Levi GL1 x GL3: simple roots {1, 2} form the A2 factor
        assert_eq!(gl4.dim_g_mod_p(&BTreeSet::from([1, 2])).unwrap(), 3);
    }

    #[test]
    fn dim_g_mod_p_monotone_under_inclusion() {
        let d = datum(Series::B, 3);
        let n = d.ss_rank();
        for mask in 0u32..(1 << n) {
            for extra in 0..n {
                let i: BTreeSet<usize> = (0..n).filter(|&k| mask & (1 << k) != 0).collect();
                let mut j = i.clone();
                j.insert(extra);
                assert!(d.dim_g_mod_p(&j).unwrap() <= d.dim_g_mod_p(&i).unwrap());
            }
        }
    }

    #[test]
    fn rank_cap_is_enforced() {
        assert!(matches!(
            build_root_datum(Series::A, 7, Orientation::Upper),
            Err(Error::RankTooLarge { .. })
        ));
        assert!(matches!(
            build_root_datum(Series::E, 6, Orientation::Upper),
            Err(Error::RankTooLarge { .. })
        ));
        assert!(build_root_datum(Series::A, 6, Orientation::Upper).is_ok());
    }

    #[test]
    fn unsupported_ranks_are_rejected() {
        assert!(matches!(
            build_root_datum(Series::E, 5, Orientation::Upper),
            Err(Error::UnsupportedType(_))
        ));
        assert!(matches!(
            build_root_datum(Series::F, 3, Orientation::Upper),
            Err(Error::UnsupportedType(_))
        ));
        assert!(matches!(
            build_root_datum(Series::D, 2, Orientation::Upper),
            Err(Error::UnsupportedType(_))
        ));
    }
}
