//! Goldie-rank polynomial degrees and dimensions of simple highest weight
//! modules.
//!
//! For a regular dominant orbit, the multiplicity matrix in the dominant
//! convention is the plain evaluation matrix `B[w'][w] = P_{w', w}(1)`
//! (supported on `w' <= w`, unitriangular), and the inversion coefficients
//! are the rows of its inverse: `a(w, w') = (B^{-1})[w][w']`, equivalently
//! `(-1)^{l(w)+l(w')} P_{w0 w', w0 w}(1)` by the classical inversion
//! formula. The convention is validated, not assumed: the identity row must
//! alternate (the resolution of the finite-dimensional module), forcing
//! `m_e = #Phi+`, and the longest row must be `{w0: 1}`, forcing
//! `m_{w0} = 0`; both are asserted in the test suites together with the
//! exact identity `[P(1)] . [a] = I`. The degree `m_w` is the least
//! `m >= 0` such that
//!
//! ```text
//! p_m(xi) = sum_{w'} a(w, w') <xi, w'^{-1}(t)>^m
//! ```
//!
//! is not identically zero, decided by exact multinomial expansion: `p_m`
//! vanishes iff every moment `sum_{w'} a(w, w') prod_i (w'^{-1} t)_i^{b_i}`
//! with `|b| = m` vanishes. The dimension of the simple module with highest
//! weight `w . mu` is then `#Phi+ - m_w`.
//!
//! `m_w` does not depend on the choice of the normalizing coweight `t`;
//! [`goldie_degree_with_t`] exposes alternative choices so that independence
//! is testable.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::kl::{shared_engine, KlEngine};
use crate::rootdata::{rat, Fingerprint, Rat, RootDatum, Weight};
use crate::weyl::{dominant_conjugate, group_table, GroupTable, WeylElement};

/// Row of inversion coefficients `a(w, w')` for fixed `w`.
///
/// Entries are carried on the Bruhat cone `w' >= w`, sorted by
/// (length, enumeration order); the diagonal entry is 1.
#[derive(Debug, Clone)]
pub struct ACoeffRow {
    pub w: WeylElement,
    pub entries: Vec<(WeylElement, BigInt)>,
}

impl ACoeffRow {
    pub fn coefficient(&self, w_prime: &WeylElement) -> BigInt {
        self.entries
            .iter()
            .find(|(v, _)| v == w_prime)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }
}

/// Witness that `p_m` is nonzero: a multi-index of total degree `m` whose
/// monomial coefficient in `p_m` is nonzero.
#[derive(Debug, Clone)]
pub struct GoldieCertificate {
    pub multi_index: Vec<u32>,
    pub coefficient: Rat,
}

/// Result of a Goldie-degree computation.
#[derive(Debug, Clone)]
pub struct GoldieReport {
    pub w: WeylElement,
    pub m: u32,
    pub certificate: GoldieCertificate,
    /// `#Phi+ - m`.
    pub dim: u32,
}

type RowIds = Vec<(u32, BigInt)>;
type RowCache = RwLock<HashMap<(Fingerprint, u32), Arc<RowIds>>>;

static ROWS: LazyLock<RowCache> = LazyLock::new(|| RwLock::new(HashMap::new()));

fn a_coeff_row_ids(datum: &RootDatum, engine: &KlEngine, w: u32) -> Result<Arc<RowIds>> {
    let key = (datum.fingerprint(), w);
    if let Some(r) = ROWS.read().unwrap().get(&key) {
        return Ok(Arc::clone(r));
    }
    let t = group_table(datum);
    let mut cone: Vec<u32> = (0..t.size as u32)
        .filter(|&y| t.bruhat_leq_ids(w, y))
        .collect();
    cone.sort_by_key(|&y| (t.length(y), y));
    // triangular solve of sum_z x[z] B[z][w'] = delta_{w,w'} with
    // B[z][w'] = P_{z, w'}(1)
    let mut values: HashMap<u32, BigInt> = HashMap::new();
    for (i, &wp) in cone.iter().enumerate() {
        if wp == w {
            values.insert(wp, BigInt::one());
            continue;
        }
        let mut acc = BigInt::zero();
        for &z in &cone[..i] {
            if !t.bruhat_leq_ids(z, wp) {
                continue;
            }
            let b = engine.kl_ids(z, wp)?.eval_one();
            acc += &values[&z] * b;
        }
        values.insert(wp, -acc);
    }
    let row: RowIds = cone
        .into_iter()
        .map(|y| (y, values.remove(&y).unwrap()))
        .collect();
    let arc = Arc::new(row);
    let mut map = ROWS.write().unwrap();
    Ok(Arc::clone(map.entry(key).or_insert(arc)))
}

/// Inversion coefficients `a(w, .)` of the dominant-convention multiplicity
/// matrix.
pub fn a_coeffs(datum: &RootDatum, w: &WeylElement) -> Result<ACoeffRow> {
    if w.fingerprint() != datum.fingerprint() {
        return Err(Error::DatumMismatch(
            w.fingerprint().to_string(),
            datum.fingerprint().to_string(),
        ));
    }
    let engine = shared_engine(datum);
    let row = a_coeff_row_ids(datum, &engine, w.id())?;
    let t = group_table(datum);
    Ok(ACoeffRow {
        w: w.clone(),
        entries: row
            .iter()
            .map(|(id, c)| (t.element(*id), c.clone()))
            .collect(),
    })
}

fn multinomial(m: u32, parts: &[u32]) -> BigInt {
    let mut num = BigUint::one();
    for k in 2..=u64::from(m) {
        num *= k;
    }
    let mut den = BigUint::one();
    for &p in parts {
        for k in 2..=u64::from(p) {
            den *= k;
        }
    }
    BigInt::from(num / den)
}

/// Enumerate all multi-indices of total degree `m` over `n` slots, calling
/// `f` on each until it returns true (short-circuit); returns whether any
/// call returned true.
fn visit_compositions(n: usize, m: u32, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
    fn rec(idx: &mut Vec<u32>, pos: usize, left: u32, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
        if pos + 1 == idx.len() {
            idx[pos] = left;
            return f(idx);
        }
        for v in (0..=left).rev() {
            idx[pos] = v;
            if rec(idx, pos + 1, left - v, f) {
                return true;
            }
        }
        false
    }
    if n == 0 {
        // the empty multi-index has total degree 0
        return m == 0 && f(&[]);
    }
    let mut idx = vec![0u32; n];
    rec(&mut idx, 0, m, f)
}

struct MomentData {
    /// Distinct vectors `w'^{-1}(t)` scaled to integers, with merged
    /// coefficients.
    groups: Vec<(Vec<BigInt>, BigInt)>,
    /// Power tables per group: pow[g][i][e] = u_i^e.
    pows: Vec<Vec<Vec<BigInt>>>,
    dim: usize,
}

impl MomentData {
    fn new(table: &GroupTable, row: &RowIds, t_vec: &[Rat]) -> MomentData {
        let mut grouped: BTreeMap<Vec<Rat>, BigInt> = BTreeMap::new();
        for (id, coeff) in row {
            if coeff.is_zero() {
                continue;
            }
            // w'^{-1}(t) on coweight coordinates is the transposed action
            let u = table.apply_transpose_vec(*id, t_vec);
            *grouped.entry(u).or_insert_with(BigInt::zero) += coeff;
        }
        grouped.retain(|_, c| !c.is_zero());

        // clear denominators uniformly; scaling t by a positive constant
        // scales every moment of degree m by the same nonzero factor
        let mut denom = BigInt::one();
        for u in grouped.keys() {
            for x in u {
                let d = x.denom();
                let g = big_gcd(&denom, d);
                denom = &denom / g * d;
            }
        }
        let groups: Vec<(Vec<BigInt>, BigInt)> = grouped
            .into_iter()
            .map(|(u, c)| {
                let scaled: Vec<BigInt> = u
                    .iter()
                    .map(|x| {
                        let v = x * BigRational::from_integer(denom.clone());
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect();
                (scaled, c)
            })
            .collect();
        let dim = table.dim;
        let pows = groups
            .iter()
            .map(|(u, _)| u.iter().map(|x| vec![BigInt::one(), x.clone()]).collect())
            .collect();
        MomentData { groups, pows, dim }
    }

    fn extend_powers(&mut self, m: u32) {
        for (g, (u, _)) in self.groups.iter().enumerate() {
            for (i, x) in u.iter().enumerate() {
                while self.pows[g][i].len() <= m as usize {
                    let last = self.pows[g][i].last().unwrap().clone();
                    self.pows[g][i].push(last * x);
                }
            }
        }
    }

    /// `sum_groups coeff * prod_i u_i^{b_i}` over the scaled integer vectors.
    fn moment(&self, beta: &[u32]) -> BigInt {
        let mut acc = BigInt::zero();
        for (g, (_, coeff)) in self.groups.iter().enumerate() {
            let mut term = coeff.clone();
            for (i, &e) in beta.iter().enumerate() {
                if e > 0 {
                    term *= &self.pows[g][i][e as usize];
                }
            }
            acc += term;
        }
        acc
    }

    /// The same moment over the original rational vectors (for reporting).
    fn rational_moment(
        &self,
        beta: &[u32],
        table: &GroupTable,
        row: &RowIds,
        t_vec: &[Rat],
    ) -> Rat {
        let mut acc = Rat::zero();
        for (id, coeff) in row {
            let u = table.apply_transpose_vec(*id, t_vec);
            let mut term = Rat::from_integer(coeff.clone());
            for (i, &e) in beta.iter().enumerate() {
                for _ in 0..e {
                    term *= &u[i];
                }
            }
            acc += term;
        }
        acc
    }
}

fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut x = a.abs();
    let mut y = b.abs();
    while !y.is_zero() {
        let r = &x % &y;
        x = y;
        y = r;
    }
    x
}

fn goldie_degree_ids(datum: &RootDatum, w: u32, t_vec: &[Rat]) -> Result<GoldieReport> {
    let engine = shared_engine(datum);
    let table = group_table(datum);
    let row = a_coeff_row_ids(datum, &engine, w)?;
    let mut data = MomentData::new(&table, &row, t_vec);
    let bound = datum.num_pos_roots() as u32;
    for m in 0..=bound {
        data.extend_powers(m);
        let mut found: Option<Vec<u32>> = None;
        visit_compositions(data.dim, m, &mut |beta| {
            if !data.moment(beta).is_zero() {
                found = Some(beta.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(beta) = found {
            let moment = data.rational_moment(&beta, &table, &row, t_vec);
            let coefficient = moment * Rat::from_integer(multinomial(m, &beta));
            debug_assert!(!coefficient.is_zero());
            return Ok(GoldieReport {
                w: table.element(w),
                m,
                certificate: GoldieCertificate {
                    multi_index: beta,
                    coefficient,
                },
                dim: bound - m,
            });
        }
    }
    Err(Error::InternalBoundViolation(format!(
        "no nonzero moment up to total degree {bound} for w = {}",
        table.element(w)
    )))
}

fn check_custom_t(datum: &RootDatum, t_vec: &[Rat]) -> Result<()> {
    if t_vec.len() != datum.coord_dim() {
        return Err(Error::InvalidInput(format!(
            "t has {} coordinates, datum needs {}",
            t_vec.len(),
            datum.coord_dim()
        )));
    }
    for (i, root) in datum.simple_roots().iter().enumerate() {
        let mut val = Rat::zero();
        for (c, t) in root.coords.iter().zip(t_vec) {
            val += rat(*c) * t;
        }
        if val != Rat::one() {
            return Err(Error::InvalidInput(format!(
                "alpha_{}(t) = {val}, expected 1",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Degree of the Goldie-rank polynomial of `w` with the datum's `t`.
pub fn goldie_degree(datum: &RootDatum, w: &WeylElement) -> Result<GoldieReport> {
    if w.fingerprint() != datum.fingerprint() {
        return Err(Error::DatumMismatch(
            w.fingerprint().to_string(),
            datum.fingerprint().to_string(),
        ));
    }
    goldie_degree_ids(datum, w.id(), datum.t_vec())
}

/// Same with an explicit normalizing coweight (must satisfy alpha(t) = 1 for
/// every simple alpha); the resulting degree is provably independent of the
/// choice, which this entry point makes testable.
pub fn goldie_degree_with_t(
    datum: &RootDatum,
    w: &WeylElement,
    t_vec: &[Rat],
) -> Result<GoldieReport> {
    if w.fingerprint() != datum.fingerprint() {
        return Err(Error::DatumMismatch(
            w.fingerprint().to_string(),
            datum.fingerprint().to_string(),
        ));
    }
    check_custom_t(datum, t_vec)?;
    goldie_degree_ids(datum, w.id(), t_vec)
}

/// Dimension of the simple highest weight module `L(lambda)`:
/// write `lambda = w . mu` with `mu` dot-dominant and `w` the maximal-length
/// coset representative, then `dim = #Phi+ - m_w`.
pub fn dim_simple_hw(datum: &RootDatum, lambda: &Weight) -> Result<GoldieReport> {
    let (_, w, _) = dominant_conjugate(datum, lambda)?;
    goldie_degree(datum, &w)
}
