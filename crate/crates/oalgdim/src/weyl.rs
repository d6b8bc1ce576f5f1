//! Weyl group elements, lengths, Bruhat order, dot action and coset data.
//!
//! Elements are canonicalized by their exact matrix action on the weight
//! lattice, so equality and hashing are independent of the word used to
//! reach an element. Reduced words are the breadth-first words of a
//! deterministic enumeration (layers ordered by matrix, lexicographically),
//! which makes every derived artifact (ids, cache files, reports) stable
//! across runs.
//!
//! The enumeration for a given datum is computed once and shared behind a
//! read-mostly map; duplicate concurrent computation is harmless because the
//! construction is deterministic.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rootdata::{add_vec, pairing_vec, sub_vec, Fingerprint, Rat, RootDatum, Weight};

/// A Weyl group element bound to a datum.
///
/// `word` is a reduced word in simple-reflection indices (0-based);
/// `matrix` is the exact action on weight coordinates (row-major).
#[derive(Debug, Clone)]
pub struct WeylElement {
    fp: Fingerprint,
    id: u32,
    length: u32,
    word: Vec<u8>,
    matrix: Vec<i64>,
}

impl WeylElement {
    pub fn fingerprint(&self) -> Fingerprint {
        self.fp
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn reduced_word(&self) -> &[u8] {
        &self.word
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub(crate) fn id(&self) -> u32 {
        self.id
    }

    /// Render as `e` or `s2*s1` (1-based generator indices).
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word
                .iter()
                .map(|&g| format!("s{}", g + 1))
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.fp == other.fp && self.id == other.id
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.fp.hash(state);
        self.id.hash(state);
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

/// Fully enumerated Weyl group of one datum.
pub(crate) struct GroupTable {
    pub(crate) fp: Fingerprint,
    pub(crate) dim: usize,
    pub(crate) num_gens: usize,
    pub(crate) size: usize,
    matrices: Vec<Vec<i64>>,
    words: Vec<Vec<u8>>,
    pub(crate) lengths: Vec<u32>,
    right_mul: Vec<u32>,
    left_mul: Vec<u32>,
    inverses: Vec<u32>,
    by_matrix: HashMap<Vec<i64>, u32>,
    /// Down-set bitsets: bit `x` of row `w` is set iff `x <= w` in Bruhat
    /// order.
    bruhat: Vec<u64>,
    bruhat_words_per_row: usize,
    /// Coordinates of the positive roots, for descent tests.
    pos_root_coords: HashSet<Vec<i64>>,
    #[allow(dead_code)] // inversion cross-checks in tests
    pos_roots_i64: Vec<Vec<i64>>,
}

static GROUPS: LazyLock<RwLock<HashMap<Fingerprint, Arc<GroupTable>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

pub(crate) fn group_table(datum: &RootDatum) -> Arc<GroupTable> {
    let fp = datum.fingerprint();
    if let Some(t) = GROUPS.read().unwrap().get(&fp) {
        return Arc::clone(t);
    }
    let built = Arc::new(GroupTable::build(datum));
    let mut map = GROUPS.write().unwrap();
    Arc::clone(map.entry(fp).or_insert(built))
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik != 0 {
                for j in 0..n {
                    out[i * n + j] += aik * b[k * n + j];
                }
            }
        }
    }
    out
}

impl GroupTable {
    fn build(datum: &RootDatum) -> GroupTable {
        let n = datum.coord_dim();
        let num_gens = datum.ss_rank();
        let gens: Vec<Vec<i64>> = (0..num_gens)
            .map(|i| datum.simple_reflection_matrix(i))
            .collect();
        let mut identity = vec![0i64; n * n];
        for i in 0..n {
            identity[i * n + i] = 1;
        }

        let mut matrices: Vec<Vec<i64>> = vec![identity.clone()];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut lengths: Vec<u32> = vec![0];
        let mut by_matrix: HashMap<Vec<i64>, u32> = HashMap::new();
        by_matrix.insert(identity, 0);

        // breadth-first layers; each layer sorted by matrix for determinism
        let mut layer: Vec<u32> = vec![0];
        let mut depth = 0u32;
        while !layer.is_empty() {
            depth += 1;
            let mut next: BTreeMap<Vec<i64>, (u32, u8)> = BTreeMap::new();
            for &id in &layer {
                for (g, gm) in gens.iter().enumerate() {
                    let m = mat_mul(&matrices[id as usize], gm, n);
                    if !by_matrix.contains_key(&m) {
                        next.entry(m).or_insert((id, g as u8));
                    }
                }
            }
            layer = Vec::with_capacity(next.len());
            for (m, (parent, g)) in next {
                let id = matrices.len() as u32;
                by_matrix.insert(m.clone(), id);
                matrices.push(m);
                let mut w = words[parent as usize].clone();
                w.push(g);
                words.push(w);
                lengths.push(depth);
                layer.push(id);
            }
        }

        let size = matrices.len();
        debug_assert_eq!(size as u64, datum.weyl_order());

        let mut right_mul = vec![0u32; size * num_gens.max(1)];
        let mut left_mul = vec![0u32; size * num_gens.max(1)];
        for id in 0..size {
            for (g, gm) in gens.iter().enumerate() {
                right_mul[id * num_gens + g] = by_matrix[&mat_mul(&matrices[id], gm, n)];
                left_mul[id * num_gens + g] = by_matrix[&mat_mul(gm, &matrices[id], n)];
            }
        }

        let mut inverses = vec![0u32; size];
        for id in 0..size {
            let mut inv = 0u32;
            for &g in words[id].iter().rev() {
                inv = right_mul[inv as usize * num_gens + g as usize];
            }
            inverses[id] = inv;
        }

        // Bruhat down-sets, one row per element: if s is a left descent of w
        // and v = s w, then {x : x <= w} = {x : x <= v} union s{x : x <= v}.
        let words_per_row = size.div_ceil(64);
        let mut bruhat = vec![0u64; size * words_per_row];
        bruhat[0] |= 1; // e <= e
        for id in 1..size {
            let s = (0..num_gens)
                .find(|&g| lengths[left_mul[id * num_gens + g] as usize] < lengths[id])
                .expect("non-identity element has a left descent");
            let v = left_mul[id * num_gens + s] as usize;
            let (head, tail) = bruhat.split_at_mut(id * words_per_row);
            let src = &head[v * words_per_row..(v + 1) * words_per_row];
            let dst = &mut tail[..words_per_row];
            dst.copy_from_slice(src);
            for (word_idx, &bits) in src.iter().enumerate() {
                let mut b = bits;
                while b != 0 {
                    let bit = b.trailing_zeros() as usize;
                    b &= b - 1;
                    let u = word_idx * 64 + bit;
                    let su = left_mul[u * num_gens + s] as usize;
                    dst[su / 64] |= 1 << (su % 64);
                }
            }
        }

        let pos_roots_i64: Vec<Vec<i64>> = datum
            .positive_roots()
            .iter()
            .map(|r| r.coords.clone())
            .collect();
        let pos_root_coords: HashSet<Vec<i64>> = pos_roots_i64.iter().cloned().collect();

        GroupTable {
            fp: datum.fingerprint(),
            dim: n,
            num_gens,
            size,
            matrices,
            words,
            lengths,
            right_mul,
            left_mul,
            inverses,
            by_matrix,
            bruhat,
            bruhat_words_per_row: words_per_row,
            pos_root_coords,
            pos_roots_i64,
        }
    }

    pub(crate) fn element(&self, id: u32) -> WeylElement {
        WeylElement {
            fp: self.fp,
            id,
            length: self.lengths[id as usize],
            word: self.words[id as usize].clone(),
            matrix: self.matrices[id as usize].clone(),
        }
    }

    pub(crate) fn id_by_matrix(&self, m: &[i64]) -> Option<u32> {
        self.by_matrix.get(m).copied()
    }

    pub(crate) fn right_mul_gen(&self, id: u32, g: usize) -> u32 {
        self.right_mul[id as usize * self.num_gens + g]
    }

    pub(crate) fn left_mul_gen(&self, id: u32, g: usize) -> u32 {
        self.left_mul[id as usize * self.num_gens + g]
    }

    pub(crate) fn inverse_id(&self, id: u32) -> u32 {
        self.inverses[id as usize]
    }

    pub(crate) fn word(&self, id: u32) -> &[u8] {
        &self.words[id as usize]
    }

    pub(crate) fn length(&self, id: u32) -> u32 {
        self.lengths[id as usize]
    }

    /// Product of two elements by walking the word of `b`.
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        let mut id = a;
        for &g in &self.words[b as usize] {
            id = self.right_mul_gen(id, g as usize);
        }
        id
    }

    pub(crate) fn bruhat_leq_ids(&self, x: u32, w: u32) -> bool {
        let row = w as usize * self.bruhat_words_per_row;
        let xi = x as usize;
        self.bruhat[row + xi / 64] & (1 << (xi % 64)) != 0
    }

    /// Left descents of `w` as a generator bitmask.
    pub(crate) fn left_descents(&self, id: u32) -> u64 {
        let mut mask = 0u64;
        for g in 0..self.num_gens {
            if self.lengths[self.left_mul_gen(id, g) as usize] < self.lengths[id as usize] {
                mask |= 1 << g;
            }
        }
        mask
    }

    pub(crate) fn longest_id(&self) -> u32 {
        (self.size - 1) as u32
    }

    /// Apply the element to exact rational weight coordinates.
    pub(crate) fn apply_vec(&self, id: u32, v: &[Rat]) -> Vec<Rat> {
        let n = self.dim;
        let m = &self.matrices[id as usize];
        (0..n)
            .map(|i| {
                let mut acc = Rat::from_integer(0.into());
                for (j, x) in v.iter().enumerate() {
                    let c = m[i * n + j];
                    if c != 0 {
                        acc += x * Rat::from_integer(c.into());
                    }
                }
                acc
            })
            .collect()
    }

    /// Apply the transposed matrix; on coweight coordinates this computes
    /// the action of the INVERSE element.
    pub(crate) fn apply_transpose_vec(&self, id: u32, v: &[Rat]) -> Vec<Rat> {
        let n = self.dim;
        let m = &self.matrices[id as usize];
        (0..n)
            .map(|j| {
                let mut acc = Rat::from_integer(0.into());
                for (i, x) in v.iter().enumerate() {
                    let c = m[i * n + j];
                    if c != 0 {
                        acc += x * Rat::from_integer(c.into());
                    }
                }
                acc
            })
            .collect()
    }

    fn apply_root(&self, id: u32, root: &[i64]) -> Vec<i64> {
        let n = self.dim;
        let m = &self.matrices[id as usize];
        (0..n)
            .map(|i| (0..n).map(|j| m[i * n + j] * root[j]).sum())
            .collect()
    }

    /// Number of positive roots sent to negative roots; equals the Coxeter
    /// length.
    #[cfg(test)]
    pub(crate) fn inversion_count(&self, id: u32) -> usize {
        self.pos_roots_i64
            .iter()
            .filter(|r| !self.pos_root_coords.contains(&self.apply_root(id, r)))
            .count()
    }

    /// True iff `v` is the maximal-length representative of its left coset
    /// `v W_S`: every positive root of the Levi of `S` is sent negative.
    pub(crate) fn is_max_coset_rep(&self, datum: &RootDatum, id: u32, s: &BTreeSet<usize>) -> bool {
        datum
            .positive_roots()
            .iter()
            .filter(|r| {
                r.simple_coeffs
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || s.contains(&i))
            })
            .all(|r| !self.pos_root_coords.contains(&self.apply_root(id, &r.coords)))
    }

    /// Ids of the subgroup generated by the simple reflections in `s`.
    pub(crate) fn subgroup_ids(&self, s: &BTreeSet<usize>) -> Vec<u32> {
        let mut seen: BTreeSet<u32> = BTreeSet::from([0]);
        let mut queue = vec![0u32];
        while let Some(id) = queue.pop() {
            for &g in s {
                let next = self.right_mul_gen(id, g);
                if seen.insert(next) {
                    queue.push(next);
                }
            }
        }
        let mut ids: Vec<u32> = seen.into_iter().collect();
        ids.sort_by_key(|&id| (self.lengths[id as usize], id));
        ids
    }
}

fn check_fp(datum: &RootDatum, fp: Fingerprint) -> Result<()> {
    if datum.fingerprint() != fp {
        return Err(Error::DatumMismatch(
            fp.to_string(),
            datum.fingerprint().to_string(),
        ));
    }
    Ok(())
}

/// All Weyl group elements, ordered by (length, matrix).
pub fn enumerate_group(datum: &RootDatum) -> Vec<WeylElement> {
    let t = group_table(datum);
    (0..t.size as u32).map(|id| t.element(id)).collect()
}

pub fn identity(datum: &RootDatum) -> WeylElement {
    group_table(datum).element(0)
}

pub fn simple_reflection(datum: &RootDatum, i: usize) -> Result<WeylElement> {
    let t = group_table(datum);
    if i >= t.num_gens {
        return Err(Error::IndexOutOfRange(format!(
            "simple reflection index {i} out of range for {}",
            datum.fingerprint()
        )));
    }
    Ok(t.element(t.right_mul_gen(0, i)))
}

/// The longest element `w0`.
pub fn longest_element(datum: &RootDatum) -> WeylElement {
    let t = group_table(datum);
    t.element(t.longest_id())
}

pub fn multiply(datum: &RootDatum, a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    check_fp(datum, a.fp)?;
    check_fp(datum, b.fp)?;
    let t = group_table(datum);
    Ok(t.element(t.mul(a.id, b.id)))
}

pub fn inverse(datum: &RootDatum, a: &WeylElement) -> Result<WeylElement> {
    check_fp(datum, a.fp)?;
    let t = group_table(datum);
    Ok(t.element(t.inverse_id(a.id)))
}

/// Reconstruct an element from an arbitrary word in simple reflections.
pub fn element_from_word(datum: &RootDatum, word: &[u8]) -> Result<WeylElement> {
    let t = group_table(datum);
    let mut id = 0u32;
    for &g in word {
        if g as usize >= t.num_gens {
            return Err(Error::IndexOutOfRange(format!(
                "generator s{} out of range for {}",
                g + 1,
                datum.fingerprint()
            )));
        }
        id = t.right_mul_gen(id, g as usize);
    }
    Ok(t.element(id))
}

/// Plain linear action on a weight.
pub fn apply(datum: &RootDatum, w: &WeylElement, lambda: &Weight) -> Result<Weight> {
    check_fp(datum, w.fp)?;
    check_fp(datum, lambda.fingerprint())?;
    let t = group_table(datum);
    Ok(Weight::from_parts(
        t.apply_vec(w.id, lambda.coords()),
        datum.fingerprint(),
    ))
}

/// Dot action `w . lambda = w(lambda + rho) - rho`.
pub fn dot_apply(datum: &RootDatum, w: &WeylElement, lambda: &Weight) -> Result<Weight> {
    check_fp(datum, w.fp)?;
    check_fp(datum, lambda.fingerprint())?;
    let t = group_table(datum);
    let shifted = add_vec(lambda.coords(), datum.rho());
    let moved = t.apply_vec(w.id, &shifted);
    Ok(Weight::from_parts(
        sub_vec(&moved, datum.rho()),
        datum.fingerprint(),
    ))
}

/// Bruhat order by the subword criterion (computed via lifting on
/// deterministic down-sets).
pub fn bruhat_leq(datum: &RootDatum, x: &WeylElement, w: &WeylElement) -> Result<bool> {
    check_fp(datum, x.fp)?;
    check_fp(datum, w.fp)?;
    Ok(group_table(datum).bruhat_leq_ids(x.id, w.id))
}

/// Maximal-length coset representatives and the stabilizer subgroup for a
/// set `S` of simple roots.
#[derive(Debug, Clone)]
pub struct CosetData {
    pub s: BTreeSet<usize>,
    /// The parabolic subgroup W_S, ordered by (length, id).
    pub subgroup: Vec<WeylElement>,
    /// Maximal-length representatives of the left cosets w W_S.
    pub max_reps: Vec<WeylElement>,
}

impl CosetData {
    pub fn new(datum: &RootDatum, s: &BTreeSet<usize>) -> Result<CosetData> {
        let t = group_table(datum);
        for &i in s {
            if i >= t.num_gens {
                return Err(Error::IndexOutOfRange(format!(
                    "simple root index {i} out of range for {}",
                    datum.fingerprint()
                )));
            }
        }
        let sub_ids = t.subgroup_ids(s);
        let mut visited = vec![false; t.size];
        let mut reps = Vec::new();
        // ids are sorted by length ascending; scan longest-first so the
        // first unvisited element of a coset is its maximal representative
        for id in (0..t.size as u32).rev() {
            if visited[id as usize] {
                continue;
            }
            reps.push(id);
            for &x in &sub_ids {
                visited[t.mul(id, x) as usize] = true;
            }
        }
        reps.sort_by_key(|&id| (t.lengths[id as usize], id));
        Ok(CosetData {
            s: s.clone(),
            subgroup: sub_ids.iter().map(|&id| t.element(id)).collect(),
            max_reps: reps.into_iter().map(|id| t.element(id)).collect(),
        })
    }

    /// The longest element of the parabolic subgroup W_S.
    pub fn longest_in_subgroup(&self) -> &WeylElement {
        self.subgroup.last().expect("subgroup contains identity")
    }

    pub fn contains_rep(&self, w: &WeylElement) -> bool {
        self.max_reps.iter().any(|r| r == w)
    }
}

/// True iff `v` is the maximal-length representative of `v W_S`.
pub fn is_max_coset_rep(datum: &RootDatum, v: &WeylElement, s: &BTreeSet<usize>) -> Result<bool> {
    check_fp(datum, v.fp)?;
    Ok(group_table(datum).is_max_coset_rep(datum, v.id, s))
}

/// Write `lambda = w . mu` with `mu` dot-dominant, `S` the singular support
/// of `mu`, and `w` the maximal-length representative of its coset `w W_S`.
pub fn dominant_conjugate(
    datum: &RootDatum,
    lambda: &Weight,
) -> Result<(Weight, WeylElement, BTreeSet<usize>)> {
    check_fp(datum, lambda.fingerprint())?;
    datum.require_integral(lambda)?;
    let t = group_table(datum);
    let mut shifted = add_vec(lambda.coords(), datum.rho());
    let mut acc = 0u32; // accumulates u with u(lambda + rho) dominant
    loop {
        let mut moved = false;
        for (i, root) in datum.simple_roots().iter().enumerate() {
            if pairing_vec(&shifted, &root.pairing).is_negative() {
                // reflect: s_i(v) = v - <v, alpha_i_check> alpha_i
                let p = pairing_vec(&shifted, &root.pairing);
                for (a, c) in shifted.iter_mut().enumerate() {
                    *c -= p.clone() * Rat::from_integer(root.coords[a].into());
                }
                acc = t.left_mul_gen(acc, i);
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }
    let mu = Weight::from_parts(sub_vec(&shifted, datum.rho()), datum.fingerprint());
    let s = datum.singular_support(&mu)?;
    let witness = t.inverse_id(acc);
    // maximal-length element of the coset (witness W_S)
    let mut best = witness;
    for &x in &t.subgroup_ids(&s) {
        let cand = t.mul(witness, x);
        if t.lengths[cand as usize] > t.lengths[best as usize] {
            best = cand;
        }
    }
    debug_assert!(t.is_max_coset_rep(datum, best, &s));
    Ok((mu, t.element(best), s))
}
