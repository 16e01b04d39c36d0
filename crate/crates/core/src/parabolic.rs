//! Parabolic types, the canonical filtration of the unipotent radical, and the
//! graded Levi subquotients of `g/p`.
//!
//! Sign convention: `g/p` is stored via negative roots; the nilradical
//! filtration via positive roots. A graded piece records the `t(P)`-signature
//! shared by all of its weights and the level `Σ |signature|`.

use crate::rootsys::{IndexSet, RootSystem, RootVec};
use crate::{Error, Family, Result};
use serde_json::{json, Value};
use std::fmt;

/// A standard parabolic, identified by its type `t(P) = S`: the set of simple
/// roots whose negative root spaces are *not* in `P`. The Levi simple set is
/// the complement.
pub struct ParabolicType<'a> {
    rs: &'a RootSystem,
    s: IndexSet,
}

impl fmt::Debug for ParabolicType<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ParabolicType({}, S={:?})",
            self.rs.lie_type().label(),
            self.s
        )
    }
}

/// One Levi subquotient of `g/p`: every weight has the same coefficients on
/// `S`, recorded in `signature` (entries follow sorted `S`; negative for
/// `g/p` pieces). `level` is the sum of their absolute values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub signature: Vec<i64>,
    pub level: i64,
    pub weights: Vec<RootVec>,
}

impl GradedPiece {
    pub fn to_json(&self) -> Value {
        json!({
            "signature": self.signature,
            "level": self.level,
            "weights": self.weights.iter().map(|w| w.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// A connected component of `S` under Dynkin adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component(pub IndexSet);

impl Component {
    pub fn indices(&self) -> &IndexSet {
        &self.0
    }
}

impl<'a> ParabolicType<'a> {
    /// `S` must be a nonempty subset of `1..=rank`.
    pub fn new(rs: &'a RootSystem, s: impl IntoIterator<Item = usize>) -> Result<Self> {
        let s: IndexSet = s.into_iter().collect();
        if s.is_empty() || s.iter().any(|&i| i == 0 || i > rs.rank()) {
            return Err(Error::BadParabolicType {
                rank: rs.rank(),
                got: s.into_iter().collect(),
            });
        }
        Ok(ParabolicType { rs, s })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn s(&self) -> &IndexSet {
        &self.s
    }

    /// Levi simple indices: the complement of `S`.
    pub fn levi(&self) -> IndexSet {
        (1..=self.rs.rank())
            .filter(|i| !self.s.contains(i))
            .collect()
    }

    fn s_sum(&self, v: &RootVec) -> i64 {
        self.s.iter().map(|&i| v.coord(i)).sum()
    }

    fn signature_of(&self, v: &RootVec) -> Vec<i64> {
        self.s.iter().map(|&i| v.coord(i)).collect()
    }

    /// Weights of `g/p`: exactly the negative roots with at least one strictly
    /// negative `S`-coefficient. Ordered by the positive-root enumeration.
    pub fn gp_weights(&self) -> Vec<RootVec> {
        self.rs
            .positive_roots()
            .iter()
            .filter(|v| self.s_sum(v) > 0)
            .map(|v| v.neg())
            .collect()
    }

    /// Descending filtration `U_0 ⊃ U_1 ⊃ …` of the unipotent radical:
    /// `U_i` holds the positive roots whose `S`-coefficient sum exceeds `i`.
    /// The returned list ends with the first empty layer.
    pub fn nil_filtration(&self) -> Vec<Vec<RootVec>> {
        let mut out = Vec::new();
        let mut i = 0;
        loop {
            let layer: Vec<RootVec> = self
                .rs
                .positive_roots()
                .iter()
                .filter(|v| self.s_sum(v) > i)
                .cloned()
                .collect();
            let empty = layer.is_empty();
            out.push(layer);
            if empty {
                return out;
            }
            i += 1;
        }
    }

    /// `g/p` grouped by `S`-signature; pieces ordered by level, then
    /// lexicographically by signature.
    pub fn subquotient_partition(&self) -> Vec<GradedPiece> {
        let mut pieces: Vec<GradedPiece> = Vec::new();
        for w in self.gp_weights() {
            let signature = self.signature_of(&w);
            match pieces.iter_mut().find(|p| p.signature == signature) {
                Some(p) => p.weights.push(w),
                None => {
                    let level = signature.iter().map(|k| k.abs()).sum();
                    pieces.push(GradedPiece {
                        signature,
                        level,
                        weights: vec![w],
                    });
                }
            }
        }
        pieces.sort_by(|a, b| (a.level, &a.signature).cmp(&(b.level, &b.signature)));
        pieces
    }

    /// `Φ_{α_i}`: positive roots with `S`-coefficient 1 on `α_i` and 0 on the
    /// rest of `S` (Levi coefficients are unconstrained). Requires `i ∈ S`.
    pub fn phi_alpha(&self, i: usize) -> Result<Vec<RootVec>> {
        if !self.s.contains(&i) {
            return Err(Error::NotInS {
                index: i,
                s: self.s.iter().copied().collect(),
            });
        }
        Ok(self
            .rs
            .positive_roots()
            .iter()
            .filter(|v| v.coord(i) == 1 && self.s.iter().all(|&j| j == i || v.coord(j) == 0))
            .cloned()
            .collect())
    }

    /// Connected components of `S` under Dynkin adjacency, sorted by least
    /// element.
    pub fn components(&self) -> Vec<Component> {
        let mut remaining: IndexSet = self.s.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = IndexSet::new();
            let mut stack = vec![start];
            remaining.remove(&start);
            while let Some(i) = stack.pop() {
                comp.insert(i);
                let adj: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&j| self.rs.adjacent(i, j))
                    .collect();
                for j in adj {
                    remaining.remove(&j);
                    stack.push(j);
                }
            }
            out.push(Component(comp));
        }
        out.sort_by_key(|c| *c.0.iter().next().unwrap());
        out
    }

    /// Validate that `o` is a nonempty Dynkin-connected subset of `S`.
    ///
    /// Connected components of `S` and single-root enlargements are the two
    /// conventional choices; both are connected subsets, so this is the common
    /// domain for `w_po` and the χ operations.
    pub fn check_enlargement(&self, o: &IndexSet) -> Result<()> {
        let bad = || Error::BadEnlargement {
            o: o.iter().copied().collect(),
            s: self.s.iter().copied().collect(),
        };
        if o.is_empty() || !o.iter().all(|i| self.s.contains(i)) {
            return Err(bad());
        }
        // connectivity by flood fill
        let mut seen = IndexSet::new();
        let mut stack = vec![*o.iter().next().unwrap()];
        while let Some(i) = stack.pop() {
            if !seen.insert(i) {
                continue;
            }
            for &j in o {
                if !seen.contains(&j) && self.rs.adjacent(i, j) {
                    stack.push(j);
                }
            }
        }
        if seen.len() != o.len() {
            return Err(bad());
        }
        Ok(())
    }

    /// `W(P,o) = ⊔_{i ∈ o} Φ_{α_i}` (the unions are disjoint).
    pub fn w_po(&self, o: &IndexSet) -> Result<Vec<RootVec>> {
        self.check_enlargement(o)?;
        let mut out = Vec::new();
        for &i in o {
            out.extend(self.phi_alpha(i)?);
        }
        Ok(out)
    }

    /// Dimension verification of the classical graded pieces against the
    /// isotropic-flag prediction. See [`classical_piece_dims`].
    pub fn classical_piece_dims(&self) -> Result<ClassicalDimReport> {
        classical_piece_dims(self)
    }

    /// JSON shape `{S, pieces: [{signature, level, weights}]}`.
    pub fn partition_json(&self) -> Value {
        json!({
            "S": self.s.iter().copied().collect::<Vec<_>>(),
            "pieces": self
                .subquotient_partition()
                .iter()
                .map(|p| p.to_json())
                .collect::<Vec<_>>(),
        })
    }
}

/// One predicted-vs-actual comparison for a classical graded piece.
#[derive(Clone, Debug)]
pub struct PieceCheck {
    /// Signature in the `g/p` (negative) convention, following sorted `S`.
    pub signature: Vec<i64>,
    pub kind: &'static str,
    pub predicted: usize,
    pub actual: usize,
    pub ok: bool,
}

/// Report of [`classical_piece_dims`]: every piece of `g/p` matched against
/// the flag prediction, plus predictions with no matching piece.
#[derive(Clone, Debug)]
pub struct ClassicalDimReport {
    pub family: Family,
    pub block_dims: Vec<usize>,
    pub middle: usize,
    pub checks: Vec<PieceCheck>,
    pub ok: bool,
}

impl ClassicalDimReport {
    pub fn failures(&self) -> Vec<&PieceCheck> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "block_dims": self.block_dims,
            "middle": self.middle,
            "ok": self.ok,
            "checks": self.checks.iter().map(|c| json!({
                "signature": c.signature,
                "kind": c.kind,
                "predicted": c.predicted,
                "actual": c.actual,
                "ok": c.ok,
            })).collect::<Vec<_>>(),
        })
    }
}

/// For types B/C/D, interpret `S = {s_1 < … < s_t}` as an isotropic flag
/// signature with block dimensions `d_j = s_j − s_{j−1}` and middle block `m`
/// (`2(n−s_t)+1` for B, `2(n−s_t)` for C/D). Each graded piece of `g/p` must
/// then have the cardinality of the corresponding Hom / Sym² / ∧² / mixed
/// piece.
///
/// For D the two fork nodes are only supported as `S = {n}` or `S = {n−1}`
/// (one maximal isotropic block); mixed fork signatures have no flag reading
/// in standard chain coordinates and are rejected.
pub fn classical_piece_dims(p: &ParabolicType<'_>) -> Result<ClassicalDimReport> {
    let rs = p.root_system();
    let family = rs.lie_type().family();
    let n = rs.rank();
    if !matches!(family, Family::B | Family::C | Family::D) {
        return Err(Error::Unsupported(format!(
            "classical_piece_dims requires type B/C/D, got {}",
            rs.lie_type().label()
        )));
    }
    let s_sorted: Vec<usize> = p.s().iter().copied().collect();

    // Block data (d_1, ..., d_t) and middle m.
    let (dims, middle): (Vec<usize>, usize) =
        if family == Family::D && s_sorted.iter().any(|&i| i >= n - 1) {
            if s_sorted == [n] || s_sorted == [n - 1] {
                (vec![n], 0)
            } else {
                return Err(Error::Unsupported(format!(
                    "isotropic-flag signature is ambiguous for D{} with S = {:?} \
                 (fork nodes are only supported alone)",
                    n, s_sorted
                )));
            }
        } else {
            let mut dims = Vec::new();
            let mut prev = 0usize;
            for &s in &s_sorted {
                dims.push(s - prev);
                prev = s;
            }
            let tail = n - prev;
            let m = match family {
                Family::B => 2 * tail + 1,
                _ => 2 * tail,
            };
            (dims, m)
        };
    let t = dims.len();

    // Predicted pieces keyed by positive signature over sorted S.
    let mut predicted: Vec<(Vec<i64>, usize, &'static str)> = Vec::new();
    let special_fork = family == Family::D && (s_sorted == [n] || s_sorted == [n - 1]);
    for q in 0..t {
        for pblk in 0..=q {
            if pblk < q {
                // Hom(E-blocks): roots e_a - e_b crossing blocks p..q
                let mut sig = vec![0i64; t];
                for (j, entry) in sig.iter_mut().enumerate() {
                    if j >= pblk && j < q {
                        *entry = 1;
                    }
                }
                predicted.push((sig, dims[pblk] * dims[q], "hom"));
            }
            // e_a + e_b pieces (dual Hom for p<q, Sym²/∧² for p=q)
            let mut sig = vec![0i64; t];
            for (j, entry) in sig.iter_mut().enumerate() {
                if j >= pblk && j < q {
                    *entry = 1;
                } else if j >= q {
                    // for C the coefficient at alpha_n stays 1; the D fork
                    // blocks likewise carry 1
                    let stays_one = special_fork || (family == Family::C && s_sorted[j] == n);
                    *entry = if stays_one { 1 } else { 2 };
                }
            }
            let (dim, kind) = if pblk < q {
                (dims[pblk] * dims[q], "dual-hom")
            } else {
                match family {
                    Family::C => (dims[pblk] * (dims[pblk] + 1) / 2, "sym2"),
                    _ => (dims[pblk] * (dims[pblk] - 1) / 2, "wedge2"),
                }
            };
            if dim > 0 {
                predicted.push((sig, dim, kind));
            }
        }
        // Mixed pieces against the middle block (for B the odd middle always
        // exists and carries the vector-representation column)
        if middle > 0 {
            let mut sig = vec![0i64; t];
            for (j, entry) in sig.iter_mut().enumerate() {
                if j >= q {
                    *entry = 1;
                }
            }
            predicted.push((sig, dims[q] * middle, "mixed"));
        }
    }

    // Compare against the actual partition (negating predicted signatures).
    let pieces = p.subquotient_partition();
    let mut checks: Vec<PieceCheck> = Vec::new();
    let mut matched = vec![false; pieces.len()];
    for (sig_pos, dim, kind) in predicted {
        let sig_neg: Vec<i64> = sig_pos.iter().map(|k| -k).collect();
        let actual = pieces.iter().position(|piece| piece.signature == sig_neg);
        if let Some(ix) = actual {
            matched[ix] = true;
        }
        let actual_count = actual.map_or(0, |ix| pieces[ix].weights.len());
        checks.push(PieceCheck {
            signature: sig_neg,
            kind,
            predicted: dim,
            actual: actual_count,
            ok: actual_count == dim,
        });
    }
    for (ix, piece) in pieces.iter().enumerate() {
        if !matched[ix] {
            checks.push(PieceCheck {
                signature: piece.signature.clone(),
                kind: "unpredicted",
                predicted: 0,
                actual: piece.weights.len(),
                ok: false,
            });
        }
    }
    let ok = checks.iter().all(|c| c.ok);
    Ok(ClassicalDimReport {
        family,
        block_dims: dims,
        middle,
        checks,
        ok,
    })
}
