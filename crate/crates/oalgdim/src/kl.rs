//! Kazhdan-Lusztig polynomials.
//!
//! Two fully independent computation paths live here:
//!
//! * [`KlEngine::kl_poly`] — the classical descent recursion
//!   `P_{x,w} = P_{sx,v} + q^c P_{x,v} - sum mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}`
//!   (v = sw for a left descent s, c depending on whether s descends x),
//!   memoized on canonical element pairs;
//! * [`KlEngine::hecke_oracle`] — a brute-force canonical-basis computation
//!   in the full Hecke module: triangular solve of the bar-involution
//!   fixed-point equations `h_z - bar(h_z) = sum_{y > z} bar(h_y) R_{z,y}`,
//!   where `R` is the expansion of `bar(H_y) = H_{y^{-1}}^{-1}` in the
//!   standard basis. The oracle never touches the recursion and is capped at
//!   |W| <= 24.
//!
//! Conventions: `H_w = v^{-l(w)} T_w` with `q = v^2`, so
//! `H_s H_x = H_{sx}` for `sx > x` and `H_{sx} + (v - v^{-1}) H_x`
//! otherwise, and the canonical basis element of `w` is
//! `H_w + sum_{x < w} v^{l(x)-l(w)} P_{x,w}(v^2) H_x`.
//!
//! Evaluations at q = 1 feed the multiplicity inversion in `goldie`; the
//! engine also exposes rows of the inverse of the unitriangular matrix
//! `[P_{x,y}(1)]` and a persistent, diffable cache file format.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rootdata::{Fingerprint, RootDatum, ORACLE_WEYL_BOUND};
use crate::weyl::{group_table, GroupTable, WeylElement};

/// Dense polynomial in `q` with nonnegative arbitrary-precision
/// coefficients; index = power of q. The zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KLPolynomial {
    coeffs: Vec<BigUint>,
}

impl KLPolynomial {
    pub fn zero() -> KLPolynomial {
        KLPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> KLPolynomial {
        KLPolynomial {
            coeffs: vec![BigUint::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> KLPolynomial {
        let mut c = coeffs;
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        KLPolynomial { coeffs: c }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in q; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn eval_one(&self) -> BigInt {
        let mut acc = BigUint::zero();
        for c in &self.coeffs {
            acc += c;
        }
        BigInt::from_biguint(Sign::Plus, acc)
    }
}

impl fmt::Display for KLPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match i {
                0 => c.to_string(),
                1 if c.is_one() => "q".to_string(),
                1 => format!("{c}*q"),
                _ if c.is_one() => format!("q^{i}"),
                _ => format!("{c}*q^{i}"),
            };
            parts.push(body);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Signed dense polynomial used only inside the recursion.
type SignedPoly = Vec<BigInt>;

fn sp_trim(p: &mut SignedPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn sp_add_shifted(acc: &mut SignedPoly, p: &[BigInt], shift: usize, scale: &BigInt) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c * scale;
    }
}

fn kl_to_signed(p: &KLPolynomial) -> SignedPoly {
    p.coeffs()
        .iter()
        .map(|c| BigInt::from_biguint(Sign::Plus, c.clone()))
        .collect()
}

fn signed_to_kl(mut p: SignedPoly) -> Result<KLPolynomial> {
    sp_trim(&mut p);
    let mut out = Vec::with_capacity(p.len());
    for c in p {
        match c.to_biguint() {
            Some(u) => out.push(u),
            None => {
                return Err(Error::InternalBoundViolation(format!(
                    "negative Kazhdan-Lusztig coefficient {c}"
                )))
            }
        }
    }
    Ok(KLPolynomial::from_coeffs(out))
}

/// Kazhdan-Lusztig engine for one root datum: memoized polynomials,
/// hit/miss counters and persistent-cache plumbing.
pub struct KlEngine {
    fp: Fingerprint,
    table: Arc<GroupTable>,
    memo: RwLock<HashMap<(u32, u32), Arc<KLPolynomial>>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

static ENGINES: LazyLock<RwLock<HashMap<Fingerprint, Arc<KlEngine>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Shared engine for a datum; memoization persists across calls.
pub fn shared_engine(datum: &RootDatum) -> Arc<KlEngine> {
    let fp = datum.fingerprint();
    if let Some(e) = ENGINES.read().unwrap().get(&fp) {
        return Arc::clone(e);
    }
    let built = Arc::new(KlEngine::new(datum));
    let mut map = ENGINES.write().unwrap();
    Arc::clone(map.entry(fp).or_insert(built))
}

/// `P_{x,w}` through the shared engine.
pub fn kl_poly(datum: &RootDatum, x: &WeylElement, w: &WeylElement) -> Result<KLPolynomial> {
    shared_engine(datum).kl_poly(x, w)
}

/// Independent brute-force value of `P_{x,w}` (|W| <= 24).
pub fn hecke_oracle(datum: &RootDatum, x: &WeylElement, w: &WeylElement) -> Result<KLPolynomial> {
    shared_engine(datum).hecke_oracle(x, w)
}

/// Row `w` of the inverse of `[P_{x,y}(1)]` through the shared engine.
pub fn inverse_kl_row(datum: &RootDatum, w: &WeylElement) -> Result<Vec<(WeylElement, BigInt)>> {
    shared_engine(datum).inverse_kl_row(w)
}

impl KlEngine {
    pub fn new(datum: &RootDatum) -> KlEngine {
        KlEngine {
            fp: datum.fingerprint(),
            table: group_table(datum),
            memo: RwLock::new(HashMap::new()),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    pub fn fingerprint(&self) -> Fingerprint {
        self.fp
    }

    /// (hits, misses) of the in-memory memo.
    pub fn cache_stats(&self) -> (u64, u64) {
        (
            self.hits.load(Ordering::Relaxed),
            self.misses.load(Ordering::Relaxed),
        )
    }

    pub fn cached_records(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    fn check(&self, w: &WeylElement) -> Result<()> {
        if w.fingerprint() != self.fp {
            return Err(Error::DatumMismatch(
                w.fingerprint().to_string(),
                self.fp.to_string(),
            ));
        }
        Ok(())
    }

    pub fn kl_poly(&self, x: &WeylElement, w: &WeylElement) -> Result<KLPolynomial> {
        self.check(x)?;
        self.check(w)?;
        Ok(self.kl_ids(x.id(), w.id())?.as_ref().clone())
    }

    pub fn kl_eval_one(&self, x: &WeylElement, w: &WeylElement) -> Result<BigInt> {
        Ok(self.kl_poly(x, w)?.eval_one())
    }

    pub(crate) fn kl_ids(&self, x: u32, w: u32) -> Result<Arc<KLPolynomial>> {
        let t = &self.table;
        if !t.bruhat_leq_ids(x, w) {
            return Ok(Arc::new(KLPolynomial::zero()));
        }
        if t.length(w) - t.length(x) <= 2 {
            // constant term 1 plus the degree bound force P = 1
            return Ok(Arc::new(KLPolynomial::one()));
        }
        if let Some(p) = self.memo.read().unwrap().get(&(x, w)) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(Arc::clone(p));
        }
        self.misses.fetch_add(1, Ordering::Relaxed);

        let s = self.table.left_descents(w).trailing_zeros() as usize;
        let v = t.left_mul_gen(w, s);
        let sx = t.left_mul_gen(x, s);
        let s_descends_x = t.length(sx) < t.length(x);

        let mut acc: SignedPoly = Vec::new();
        let p_sx_v = self.kl_ids(sx, v)?;
        let p_x_v = self.kl_ids(x, v)?;
        if s_descends_x {
            sp_add_shifted(&mut acc, &kl_to_signed(&p_sx_v), 0, &BigInt::one());
            sp_add_shifted(&mut acc, &kl_to_signed(&p_x_v), 1, &BigInt::one());
        } else {
            sp_add_shifted(&mut acc, &kl_to_signed(&p_sx_v), 1, &BigInt::one());
            sp_add_shifted(&mut acc, &kl_to_signed(&p_x_v), 0, &BigInt::one());
        }

        let lw = t.length(w);
        let lv = t.length(v);
        for z in 0..t.size as u32 {
            if z == v
                || !t.bruhat_leq_ids(x, z)
                || !t.bruhat_leq_ids(z, v)
                || t.length(t.left_mul_gen(z, s)) >= t.length(z)
            {
                continue;
            }
            let diff = lv - t.length(z);
            if diff.is_multiple_of(2) {
                continue;
            }
            let mu = self.kl_ids(z, v)?.coeff((diff as usize - 1) / 2);
            if mu.is_zero() {
                continue;
            }
            let shift = ((lw - t.length(z)) / 2) as usize;
            let scale = -BigInt::from_biguint(Sign::Plus, mu);
            let p_x_z = self.kl_ids(x, z)?;
            sp_add_shifted(&mut acc, &kl_to_signed(&p_x_z), shift, &scale);
        }

        let poly = signed_to_kl(acc)?;
        // degree bound is a theorem; violating it means the recursion broke
        if let Some(d) = poly.degree() {
            if 2 * d + 1 > (t.length(w) - t.length(x)) as usize {
                return Err(Error::InternalBoundViolation(format!(
                    "KL degree bound violated for lengths {} <= {}",
                    t.length(x),
                    t.length(w)
                )));
            }
        }
        let arc = Arc::new(poly);
        self.memo
            .write()
            .unwrap()
            .entry((x, w))
            .or_insert_with(|| Arc::clone(&arc));
        Ok(arc)
    }

    /// All pairs `x <= w`, forcing the whole table into the memo.
    pub fn compute_full_table(&self) -> Result<()> {
        let size = self.table.size as u32;
        for w in 0..size {
            for x in 0..size {
                if self.table.bruhat_leq_ids(x, w) {
                    self.kl_ids(x, w)?;
                }
            }
        }
        Ok(())
    }

    /// Row `w` of the inverse of the unitriangular matrix `[P_{x,y}(1)]`
    /// (rows x, columns y, supported on x <= y). Entries are returned for
    /// the Bruhat cone `w' >= w`, sorted by (length, enumeration order).
    pub fn inverse_kl_row(&self, w: &WeylElement) -> Result<Vec<(WeylElement, BigInt)>> {
        self.check(w)?;
        let t = Arc::clone(&self.table);
        let wid = w.id();
        let mut cone: Vec<u32> = (0..t.size as u32)
            .filter(|&y| t.bruhat_leq_ids(wid, y))
            .collect();
        cone.sort_by_key(|&y| (t.length(y), y));
        let mut values: HashMap<u32, BigInt> = HashMap::new();
        for (i, &y) in cone.iter().enumerate() {
            if y == wid {
                values.insert(y, BigInt::one());
                continue;
            }
            let mut acc = BigInt::zero();
            for &z in &cone[..i] {
                if !t.bruhat_leq_ids(z, y) || z == y {
                    continue;
                }
                let pz = self.kl_ids(z, y)?.eval_one();
                acc += &values[&z] * pz;
            }
            values.insert(y, -acc);
        }
        Ok(cone
            .into_iter()
            .map(|y| (t.element(y), values.remove(&y).unwrap()))
            .collect())
    }

    /// Re-derive a sample of memoized entries with a cold engine and compare.
    pub fn verify_cache_sample<I: Iterator<Item = (u32, u32)>>(&self, sample: I) -> Result<()> {
        let cold = KlEngine {
            fp: self.fp,
            table: Arc::clone(&self.table),
            memo: RwLock::new(HashMap::new()),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        };
        for (x, w) in sample {
            let warm = self.kl_ids(x, w)?;
            let fresh = cold.kl_ids(x, w)?;
            if *warm != *fresh {
                return Err(Error::CorruptCache(format!(
                    "cached P for ids ({x},{w}) disagrees with recomputation"
                )));
            }
        }
        Ok(())
    }

    /// Memoized (x, w) id pairs, sorted; feed these to
    /// [`KlEngine::verify_cache_sample`].
    pub fn memo_keys(&self) -> Vec<(u32, u32)> {
        let mut keys: Vec<(u32, u32)> = self.memo.read().unwrap().keys().copied().collect();
        keys.sort_unstable();
        keys
    }

    // ------------------------------------------------------------------
    // Brute-force Hecke-module oracle
    // ------------------------------------------------------------------

    /// Canonical-basis coefficient `P_{x,w}` computed by bar-involution
    /// Gram-Schmidt in the full Hecke module. Hard-capped at |W| <= 24.
    pub fn hecke_oracle(&self, x: &WeylElement, w: &WeylElement) -> Result<KLPolynomial> {
        self.check(x)?;
        self.check(w)?;
        let t = &self.table;
        if t.size as u64 > ORACLE_WEYL_BOUND {
            return Err(Error::OracleTooLarge {
                size: t.size as u64,
                bound: ORACLE_WEYL_BOUND,
            });
        }
        let col = self.hecke_canonical_column(w.id())?;
        let h = &col[x.id() as usize];
        // P_{x,w}(q) = v^{l(w)-l(x)} h_{x,w}(v) with q = v^2
        let shift = t.length(w.id()) as i64 - t.length(x.id()) as i64;
        laurent_to_q_poly(&h.shifted(shift))
    }

    /// Coefficients of the canonical basis element of `w` over the standard
    /// basis, indexed by element id.
    fn hecke_canonical_column(&self, w: u32) -> Result<Vec<Laurent>> {
        let t = &self.table;
        let size = t.size;
        let bar_matrix = self.hecke_bar_matrix();

        let mut order: Vec<u32> = (0..size as u32).collect();
        order.sort_by_key(|&z| std::cmp::Reverse(t.length(z)));

        let mut h: Vec<Laurent> = vec![Laurent::zero(); size];
        h[w as usize] = Laurent::one();
        for &z in &order {
            if z == w {
                continue;
            }
            if !t.bruhat_leq_ids(z, w) {
                continue;
            }
            // f_z = sum_{y != z} bar(h_y) R_{z,y}
            let mut f = Laurent::zero();
            for y in 0..size as u32 {
                if y == z || h[y as usize].is_zero() {
                    continue;
                }
                let r = &bar_matrix[y as usize][z as usize];
                if r.is_zero() {
                    continue;
                }
                f = f.add(&h[y as usize].bar().mul(r));
            }
            // h_z - bar(h_z) = f_z has a unique solution in v^{-1} Z[v^{-1}]
            if !f.is_antisymmetric() {
                return Err(Error::InternalBoundViolation(
                    "bar fixed-point defect is not antisymmetric".to_string(),
                ));
            }
            h[z as usize] = f.negative_part();
        }
        Ok(h)
    }

    /// `bar(H_y) = H_{y^{-1}}^{-1}` expanded over the standard basis, for
    /// every y.
    fn hecke_bar_matrix(&self) -> Vec<Vec<Laurent>> {
        let t = &self.table;
        let size = t.size;
        let mut order: Vec<u32> = (0..size as u32).collect();
        order.sort_by_key(|&z| t.length(z));

        // inverses of standard basis elements, by increasing length:
        // H_{ys}^{-1} = H_s^{-1} H_y^{-1} = H_s (H_y^{-1}) - (v - v^{-1}) H_y^{-1}
        let vminus = Laurent::v_minus_v_inverse();
        let mut inv: Vec<Vec<Laurent>> = vec![Vec::new(); size];
        let mut unit = vec![Laurent::zero(); size];
        unit[0] = Laurent::one();
        inv[0] = unit;
        for &y in order.iter().skip(1) {
            let g = (0..t.num_gens)
                .find(|&g| t.length(t.right_mul_gen(y, g)) < t.length(y))
                .expect("non-identity element has a right descent");
            let shorter = t.right_mul_gen(y, g);
            let prev = inv[shorter as usize].clone();
            let mut out = vec![Laurent::zero(); size];
            for (xid, c) in prev.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                // left multiplication by H_s
                let sx = t.left_mul_gen(xid as u32, g) as usize;
                if t.length(sx as u32) > t.length(xid as u32) {
                    out[sx] = out[sx].add(c);
                } else {
                    out[sx] = out[sx].add(c);
                    out[xid] = out[xid].add(&c.mul(&vminus));
                }
            }
            // subtract (v - v^{-1}) times the original
            for (xid, c) in prev.iter().enumerate() {
                if !c.is_zero() {
                    out[xid] = out[xid].sub(&c.mul(&vminus));
                }
            }
            inv[y as usize] = out;
        }

        (0..size)
            .map(|y| inv[t.inverse_id(y as u32) as usize].clone())
            .collect()
    }

    // ------------------------------------------------------------------
    // Persistent cache
    // ------------------------------------------------------------------

    /// Serialize the memoized table: versioned header, lexicographically
    /// sorted records `x-word;w-word;c0,c1,...`, and a trailing checksum
    /// line. Byte-stable across runs.
    pub fn save_cache_string(&self) -> String {
        let t = &self.table;
        let word_str = |id: u32| -> String {
            t.word(id)
                .iter()
                .map(|&g| (g + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let memo = self.memo.read().unwrap();
        let mut records: Vec<String> = memo
            .iter()
            .map(|(&(x, w), poly)| {
                let coeffs = poly
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{};{};{}", word_str(x), word_str(w), coeffs)
            })
            .collect();
        drop(memo);
        records.sort_unstable();
        let mut body = format!("KLCACHE 1 {} {}\n", self.fp.series, self.fp.rank);
        for r in &records {
            body.push_str(r);
            body.push('\n');
        }
        let digest = Sha256::digest(body.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        body.push_str(&format!("CHECKSUM sha256:{hex}\n"));
        body
    }

    pub fn save_cache_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.save_cache_string())?;
        Ok(())
    }

    /// Load records produced by [`KlEngine::save_cache_string`]; returns the
    /// number of records inserted.
    pub fn load_cache_str(&self, content: &str) -> Result<usize> {
        let checksum_at = content
            .rfind("CHECKSUM ")
            .ok_or_else(|| Error::CorruptCache("missing checksum line".to_string()))?;
        let (body, tail) = content.split_at(checksum_at);
        let tail = tail.trim_end();
        let expected = tail
            .strip_prefix("CHECKSUM sha256:")
            .ok_or_else(|| Error::CorruptCache("malformed checksum line".to_string()))?;
        let digest = Sha256::digest(body.as_bytes());
        let actual: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        if actual != expected {
            return Err(Error::CorruptCache(format!(
                "checksum mismatch: file says {expected}, content hashes to {actual}"
            )));
        }

        let mut lines = body.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::CorruptCache("empty cache file".to_string()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 4 || parts[0] != "KLCACHE" {
            return Err(Error::CorruptCache(format!("bad header: {header}")));
        }
        if parts[1] != "1" {
            return Err(Error::VersionMismatch(format!(
                "cache format version {} (expected 1)",
                parts[1]
            )));
        }
        if parts[2] != self.fp.series.to_string() || parts[3] != self.fp.rank.to_string() {
            return Err(Error::VersionMismatch(format!(
                "cache is for {}{}, engine datum is {}{}",
                parts[2], parts[3], self.fp.series, self.fp.rank
            )));
        }

        let t = &self.table;
        let parse_word = |s: &str| -> Result<u32> {
            let mut id = 0u32;
            if s.is_empty() {
                return Ok(id);
            }
            for tok in s.split(',') {
                let g: usize = tok
                    .parse()
                    .map_err(|_| Error::CorruptCache(format!("bad word token {tok}")))?;
                if g == 0 || g > t.num_gens {
                    return Err(Error::CorruptCache(format!("generator s{g} out of range")));
                }
                id = t.right_mul_gen(id, g - 1);
            }
            Ok(id)
        };

        let mut inserted = 0usize;
        let mut memo = self.memo.write().unwrap();
        for line in lines {
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split(';');
            let (xs, ws, cs) = match (fields.next(), fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), Some(c), None) => (a, b, c),
                _ => return Err(Error::CorruptCache(format!("bad record: {line}"))),
            };
            let x = parse_word(xs)?;
            let w = parse_word(ws)?;
            let mut coeffs = Vec::new();
            if !cs.is_empty() {
                for tok in cs.split(',') {
                    let c: BigUint = tok
                        .parse()
                        .map_err(|_| Error::CorruptCache(format!("bad coefficient {tok}")))?;
                    coeffs.push(c);
                }
            }
            memo.entry((x, w))
                .or_insert_with(|| Arc::new(KLPolynomial::from_coeffs(coeffs)));
            inserted += 1;
        }
        Ok(inserted)
    }

    pub fn load_cache_file(&self, path: &Path) -> Result<usize> {
        let content = std::fs::read_to_string(path)?;
        self.load_cache_str(&content)
    }
}

fn laurent_to_q_poly(l: &Laurent) -> Result<KLPolynomial> {
    if l.is_zero() {
        return Ok(KLPolynomial::zero());
    }
    let mut coeffs: Vec<BigUint> = Vec::new();
    for (deg, c) in l.terms() {
        if c.is_zero() {
            continue;
        }
        if deg < 0 || deg % 2 != 0 {
            return Err(Error::InternalBoundViolation(format!(
                "oracle produced odd or negative v-power {deg}"
            )));
        }
        let qdeg = (deg / 2) as usize;
        if coeffs.len() <= qdeg {
            coeffs.resize(qdeg + 1, BigUint::zero());
        }
        coeffs[qdeg] = c.to_biguint().ok_or_else(|| {
            Error::InternalBoundViolation(format!("oracle produced negative coefficient {c}"))
        })?;
    }
    Ok(KLPolynomial::from_coeffs(coeffs))
}

/// Laurent polynomial in `v` over the integers; `c[i]` is the coefficient
/// of `v^{lo+i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Laurent {
    lo: i64,
    c: Vec<BigInt>,
}

impl Laurent {
    fn zero() -> Laurent {
        Laurent {
            lo: 0,
            c: Vec::new(),
        }
    }

    fn one() -> Laurent {
        Laurent {
            lo: 0,
            c: vec![BigInt::one()],
        }
    }

    fn v_minus_v_inverse() -> Laurent {
        Laurent {
            lo: -1,
            c: vec![-BigInt::one(), BigInt::zero(), BigInt::one()],
        }
    }

    fn normalize(mut self) -> Laurent {
        while self.c.last().is_some_and(Zero::is_zero) {
            self.c.pop();
        }
        let lead_zeros = self.c.iter().take_while(|x| x.is_zero()).count();
        if lead_zeros > 0 {
            self.c.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.c.is_empty() {
            self.lo = 0;
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.c
            .iter()
            .enumerate()
            .map(|(i, c)| (self.lo + i as i64, c))
    }

    #[cfg(test)]
    fn coeff(&self, deg: i64) -> BigInt {
        if deg < self.lo {
            return BigInt::zero();
        }
        self.c
            .get((deg - self.lo) as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn add(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.c.len() as i64).max(other.lo + other.c.len() as i64);
        let mut c = vec![BigInt::zero(); (hi - lo) as usize];
        for (d, x) in self.terms() {
            c[(d - lo) as usize] += x;
        }
        for (d, x) in other.terms() {
            c[(d - lo) as usize] += x;
        }
        Laurent { lo, c }.normalize()
    }

    fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.neg())
    }

    fn neg(&self) -> Laurent {
        Laurent {
            lo: self.lo,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Laurent {
            lo: self.lo + other.lo,
            c,
        }
        .normalize()
    }

    /// The involution v -> v^{-1}.
    fn bar(&self) -> Laurent {
        let mut c = self.c.clone();
        c.reverse();
        Laurent {
            lo: -(self.lo + self.c.len() as i64 - 1),
            c,
        }
        .normalize()
    }

    fn shifted(&self, by: i64) -> Laurent {
        Laurent {
            lo: self.lo + by,
            c: self.c.clone(),
        }
    }

    /// f(v^{-1}) = -f(v)?
    fn is_antisymmetric(&self) -> bool {
        self.add(&self.bar()).is_zero()
    }

    /// Terms of strictly negative degree.
    fn negative_part(&self) -> Laurent {
        if self.is_zero() || self.lo >= 0 {
            return Laurent::zero();
        }
        let upto = (-self.lo) as usize;
        Laurent {
            lo: self.lo,
            c: self.c.iter().take(upto.min(self.c.len())).cloned().collect(),
        }
        .normalize()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, Orientation, Series};
    use crate::weyl::{element_from_word, enumerate_group, identity, simple_reflection};

    fn datum(series: Series, rank: u8) -> RootDatum {
        build_root_datum(series, rank, Orientation::Upper).unwrap()
    }

    #[test]
    fn laurent_arithmetic() {
        let a = Laurent::v_minus_v_inverse();
        assert!(a.is_antisymmetric());
        let sq = a.mul(&a); // v^2 - 2 + v^-2
        assert_eq!(sq.coeff(2), BigInt::one());
        assert_eq!(sq.coeff(0), BigInt::from(-2));
        assert_eq!(sq.coeff(-2), BigInt::one());
        assert_eq!(sq.bar(), sq);
        assert_eq!(a.negative_part().coeff(-1), BigInt::from(-1));
        assert!(a.negative_part().coeff(1).is_zero());
    }

    #[test]
    fn trivial_values() {
        let a2 = datum(Series::A, 2);
        let s1 = simple_reflection(&a2, 0).unwrap();
        let s2 = simple_reflection(&a2, 1).unwrap();
        assert_eq!(kl_poly(&a2, &s1, &s1).unwrap(), KLPolynomial::one());
        assert_eq!(kl_poly(&a2, &s1, &s2).unwrap(), KLPolynomial::zero());
        assert_eq!(
            kl_poly(&a2, &identity(&a2), &s2).unwrap(),
            KLPolynomial::one()
        );
    }

    #[test]
    fn oracle_agrees_on_a1() {
        let a1 = datum(Series::A, 1);
        for x in enumerate_group(&a1) {
            for w in enumerate_group(&a1) {
                assert_eq!(
                    kl_poly(&a1, &x, &w).unwrap(),
                    hecke_oracle(&a1, &x, &w).unwrap()
                );
            }
        }
    }

    #[test]
    fn oracle_agrees_on_a2_and_values_are_boolean() {
        let a2 = datum(Series::A, 2);
        for x in enumerate_group(&a2) {
            for w in enumerate_group(&a2) {
                let p = kl_poly(&a2, &x, &w).unwrap();
                assert_eq!(p, hecke_oracle(&a2, &x, &w).unwrap());
                assert!(p == KLPolynomial::zero() || p == KLPolynomial::one());
            }
        }
    }

    #[test]
    fn first_nontrivial_polynomial_in_a3() {
        let a3 = datum(Series::A, 3);
        let x = element_from_word(&a3, &[1]).unwrap();
        let w = element_from_word(&a3, &[1, 0, 2, 1]).unwrap();
        assert_eq!(w.length(), 4);
        let p = kl_poly(&a3, &x, &w).unwrap();
        let expected = KLPolynomial::from_coeffs(vec![BigUint::one(), BigUint::one()]); // 1 + q
        assert_eq!(p, expected);
        assert_eq!(hecke_oracle(&a3, &x, &w).unwrap(), expected);
    }

    #[test]
    fn degree_bound_constant_term_and_nonnegativity() {
        use crate::weyl::bruhat_leq;
        for (series, rank) in [(Series::A, 3), (Series::B, 2)] {
            let d = datum(series, rank);
            for x in enumerate_group(&d) {
                for w in enumerate_group(&d) {
                    let p = kl_poly(&d, &x, &w).unwrap();
                    if bruhat_leq(&d, &x, &w).unwrap() {
                        assert!(p.coeff(0).is_one(), "constant term for {x} <= {w}");
                    } else {
                        assert!(p.is_zero());
                    }
                    if let Some(deg) = p.degree() {
                        if x != w && deg > 0 {
                            assert!(
                                2 * deg < (w.length() - x.length()) as usize,
                                "degree bound for {x} <= {w}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_row_a1() {
        let a1 = datum(Series::A, 1);
        let row = inverse_kl_row(&a1, &identity(&a1)).unwrap();
        assert_eq!(row.len(), 2);
        assert_eq!(row[0].1, BigInt::one());
        assert_eq!(row[1].1, BigInt::from(-1));
        let s = simple_reflection(&a1, 0).unwrap();
        let row_s = inverse_kl_row(&a1, &s).unwrap();
        assert_eq!(row_s.len(), 1);
        assert_eq!(row_s[0].1, BigInt::one());
    }

    #[test]
    fn inverse_rows_give_exact_inverse_matrix() {
        for (series, rank) in [(Series::A, 2), (Series::B, 2)] {
            let d = datum(series, rank);
            let elems = enumerate_group(&d);
            let engine = shared_engine(&d);
            for x in &elems {
                let row = engine.inverse_kl_row(x).unwrap();
                for y in &elems {
                    // row x of the inverse times column y of [P(1)]
                    let mut acc = BigInt::zero();
                    for (z, val) in &row {
                        acc += engine.kl_eval_one(z, y).unwrap() * val;
                    }
                    let expected = if x == y { BigInt::one() } else { BigInt::zero() };
                    assert_eq!(acc, expected, "{series}{rank}: x={x} y={y}");
                }
            }
        }
    }

    #[test]
    fn cache_roundtrip_is_byte_identical() {
        let a2 = datum(Series::A, 2);
        let engine = KlEngine::new(&a2);
        engine.compute_full_table().unwrap();
        let saved = engine.save_cache_string();

        let fresh = KlEngine::new(&a2);
        let n = fresh.load_cache_str(&saved).unwrap();
        assert_eq!(n, engine.cached_records());
        assert_eq!(fresh.save_cache_string(), saved);
    }

    #[test]
    fn cache_header_and_corruption_checks() {
        let a2 = datum(Series::A, 2);
        let engine = KlEngine::new(&a2);
        engine.compute_full_table().unwrap();
        let saved = engine.save_cache_string();

        let a3 = datum(Series::A, 3);
        let other = KlEngine::new(&a3);
        assert!(matches!(
            other.load_cache_str(&saved),
            Err(Error::VersionMismatch(_))
        ));

        // truncation drops the checksum line
        let truncated = &saved[..saved.len() / 2];
        assert!(matches!(
            engine.load_cache_str(truncated),
            Err(Error::CorruptCache(_))
        ));

        // a flipped byte breaks the checksum
        let mut broken = saved.clone().into_bytes();
        let pos = saved.find('\n').unwrap() + 1;
        broken[pos] = if broken[pos] == b'1' { b'2' } else { b'1' };
        let broken = String::from_utf8(broken).unwrap();
        assert!(matches!(
            engine.load_cache_str(&broken),
            Err(Error::CorruptCache(_))
        ));
    }

    #[test]
    fn cache_transparency_on_random_sample() {
        use rand::prelude::*;
        let d = datum(Series::A, 3);
        let engine = KlEngine::new(&d);
        engine.compute_full_table().unwrap();
        let keys = engine.memo_keys();
        let mut rng = StdRng::seed_from_u64(0x0a1d);
        let sample: Vec<(u32, u32)> = keys
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.05))
            .collect();
        assert!(!sample.is_empty());
        engine.verify_cache_sample(sample.into_iter()).unwrap();
    }

    #[test]
    fn oracle_rejects_large_groups() {
        let b3 = datum(Series::B, 3); // |W| = 48
        let e = identity(&b3);
        assert!(matches!(
            hecke_oracle(&b3, &e, &e),
            Err(Error::OracleTooLarge { .. })
        ));
    }

    #[test]
    fn hit_miss_counters_move() {
        let d = datum(Series::B, 2);
        let engine = KlEngine::new(&d);
        let elems = enumerate_group(&d);
        let w0 = elems.last().unwrap();
        let e = &elems[0];
        engine.kl_poly(e, w0).unwrap();
        let (_, misses) = engine.cache_stats();
        assert!(misses > 0);
        engine.kl_poly(e, w0).unwrap();
        let (hits, _) = engine.cache_stats();
        assert!(hits > 0);
    }
}
