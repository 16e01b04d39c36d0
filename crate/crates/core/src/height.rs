//! Heights of Levi representations and the low-height characteristic gates.
//!
//! `n_L(λ) = Σ_{α ∈ Φ_L^+} ⟨λ, α^∨⟩` and `Ht_L(V)` is the maximum of `n_L`
//! over the Levi-dominant weights of `V`. For a maximal parabolic `t(P)={k}`
//! the shortcut `n_{L_k}(Σ r_i α_i) = 2(Σ r_i − r_k·|ω_k|)` with
//! `|ω_k| = (Σ_j n_kj)/n_kk` avoids summing over the Levi roots; the two
//! routes are kept as independent implementations and cross-checked.
//!
//! Height data for `g/p` pieces is evaluated on the negated (positive) roots
//! so that reported argmax vectors match the positive coordinate tables.

use crate::linalg::{rat, Rat};
use crate::parabolic::{GradedPiece, ParabolicType};
use crate::rootsys::{IndexSet, LieType, RootSystem, RootVec, WeightVec};
use crate::{Error, Family, Result};
use num_traits::Zero;
use serde_json::{json, Value};

/// One row of the maximal-parabolic height table: `t(P) = {k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightRow {
    pub k: usize,
    pub omega_norm: Rat,
    pub argmax_root: RootVec,
    pub ht: Rat,
}

impl HeightRow {
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "omega_norm": crate::linalg::rat_str(&self.omega_norm),
            "argmax_root": self.argmax_root.to_json(),
            "ht": crate::linalg::rat_str(&self.ht),
        })
    }
}

/// Positive roots supported on the given Levi subset.
fn levi_positive_roots<'a>(rs: &'a RootSystem, levi: &IndexSet) -> Vec<&'a RootVec> {
    rs.positive_roots()
        .iter()
        .filter(|v| {
            v.0.iter()
                .enumerate()
                .all(|(j, &k)| k == 0 || levi.contains(&(j + 1)))
        })
        .collect()
}

/// `n_L(λ)` by direct summation over the positive Levi coroots.
pub fn n_levi(rs: &RootSystem, levi: &IndexSet, lam: &WeightVec) -> Result<Rat> {
    rs.check_index_set(levi)?;
    let mut acc = Rat::zero();
    for alpha in levi_positive_roots(rs, levi) {
        acc += rs.coroot_pairing(lam, alpha);
    }
    Ok(acc)
}

/// Integer fast path of [`n_levi`] for root-lattice vectors.
pub fn n_levi_root(rs: &RootSystem, levi: &IndexSet, v: &RootVec) -> i64 {
    levi_positive_roots(rs, levi)
        .into_iter()
        .map(|alpha| rs.coroot_pairing_root(v, alpha))
        .sum()
}

/// `|ω_k| = (Σ_j n_kj) / n_kk`, the row sum of the fundamental-weight matrix
/// divided by its diagonal entry.
pub fn omega_norm(rs: &RootSystem, k: usize) -> Result<Rat> {
    if k == 0 || k > rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: k,
            rank: rs.rank(),
        });
    }
    let row = &rs.fundamental_weights()[k - 1];
    let sum: Rat = row.iter().cloned().sum();
    Ok(sum / row[k - 1].clone())
}

/// Shortcut for the maximal parabolic `t(P) = {k}`:
/// `n_{L_k}(Σ r_i α_i) = 2(Σ r_i − r_k·|ω_k|)`, on root-lattice vectors.
///
/// Contract: equals [`n_levi`] on the complement Levi; the acceptance suite
/// checks this exhaustively.
pub fn n_maximal_shortcut(rs: &RootSystem, k: usize, v: &RootVec) -> Result<Rat> {
    let om = omega_norm(rs, k)?;
    let total = rat(v.height());
    let rk = rat(v.coord(k));
    Ok(rat(2) * (total - rk * om))
}

/// `Ht` of one graded piece: maximum of `n_L` over the Levi-dominant negated
/// weights, with lexicographically maximal argmax on ties.
pub fn ht_piece(rs: &RootSystem, s: &IndexSet, piece: &GradedPiece) -> Result<(Rat, RootVec)> {
    let p = ParabolicType::new(rs, s.iter().copied())?;
    let levi = p.levi();
    let mut best: Option<(i64, RootVec)> = None;
    for w in &piece.weights {
        let v = w.neg();
        if !rs.is_dominant_root(&v, &levi) {
            continue;
        }
        let n = n_levi_root(rs, &levi, &v);
        let better = match &best {
            None => true,
            Some((bn, bv)) => n > *bn || (n == *bn && v > *bv),
        };
        if better {
            best = Some((n, v));
        }
    }
    let (n, v) = best.ok_or(Error::NoDominantWeight)?;
    Ok((rat(n), v))
}

/// The full height table: for each simple index `k`, the maximal `Ht` over
/// the pieces of `g/p` for `t(P) = {k}` and its argmax root. Ties across
/// pieces go to the lowest level.
pub fn ht_table(rs: &RootSystem) -> Result<Vec<HeightRow>> {
    let mut rows = Vec::with_capacity(rs.rank());
    for k in 1..=rs.rank() {
        let p = ParabolicType::new(rs, [k])?;
        let s: IndexSet = [k].into_iter().collect();
        let mut best: Option<(Rat, RootVec)> = None;
        for piece in p.subquotient_partition() {
            let (ht, argmax) = ht_piece(rs, &s, &piece)?;
            let better = match &best {
                None => true,
                Some((bh, _)) => ht > *bh,
            };
            if better {
                best = Some((ht, argmax));
            }
        }
        let (ht, argmax_root) = best.ok_or(Error::NoDominantWeight)?;
        rows.push(HeightRow {
            k,
            omega_norm: omega_norm(rs, k)?,
            argmax_root,
            ht,
        });
    }
    Ok(rows)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Maximal height over the table, and the smallest prime strictly above it:
/// the low-height argument applies for characteristic ≥ that prime.
pub fn min_safe_char(rs: &RootSystem) -> Result<(Rat, u64)> {
    let rows = ht_table(rs)?;
    let ht_max = rows
        .iter()
        .map(|r| r.ht.clone())
        .max()
        .ok_or(Error::NoDominantWeight)?;
    let mut p = 2u64;
    loop {
        if is_prime(p) && rat(p as i64) > ht_max {
            return Ok((ht_max, p));
        }
        p += 1;
    }
}

/// Characteristic bound stated in the literature for the exceptional types
/// (`char > bound`), for side-by-side display with the computed gate.
pub fn literature_bound(t: LieType) -> Option<u64> {
    match (t.family(), t.rank()) {
        (Family::F, 4) | (Family::E, 6) => Some(7),
        (Family::E, 7) => Some(13),
        (Family::E, 8) => Some(31),
        _ => None,
    }
}

/// Pieces of `g/p` whose height meets or exceeds `p`, i.e. where the
/// low-height hypothesis fails in characteristic `p`.
pub fn low_height_failures(rs: &RootSystem, s: &IndexSet, p: u64) -> Result<Vec<GradedPiece>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let par = ParabolicType::new(rs, s.iter().copied())?;
    let mut out = Vec::new();
    for piece in par.subquotient_partition() {
        let (ht, _) = ht_piece(rs, s, &piece)?;
        if ht >= rat(p as i64) {
            out.push(piece);
        }
    }
    Ok(out)
}
