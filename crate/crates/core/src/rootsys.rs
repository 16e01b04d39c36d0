//! Simple root systems in Bourbaki numbering, over exact arithmetic.
//!
//! Conventions, fixed once for the whole crate:
//!
//! - Simple-root indices are 1-based (Bourbaki). The E-series branch node is 2.
//! - The Cartan matrix is stored as `C[i][j] = ⟨α_j, α_i^∨⟩`, so that
//!   `pairing(λ, i) = Σ_j λ_j · C[i][j] = ⟨λ, α_i^∨⟩`.
//! - The symmetrizer `d_i = (α_i, α_i)/2` is normalized so short roots have
//!   squared length 2; the invariant form is `(α_i, α_j) = d_i · C[i][j]`.
//! - For G2 this makes `⟨α_2, α_1^∨⟩ = -3` with `α_1` short, so the dominant
//!   weight `2α_1 + α_2` pairs to `(1, 0)` as expected.
//! - Positive roots are enumerated by root-string closure and ordered by
//!   height, then lexicographically on coordinates. The order is part of the
//!   crate's output contract.

use crate::linalg::{self, rat, Rat};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Simple-root index sets (1-based), ordered.
pub type IndexSet = BTreeSet<usize>;

/// Build an [`IndexSet`] from a slice, for tests and call sites.
pub fn idx(indices: &[usize]) -> IndexSet {
    indices.iter().copied().collect()
}

/// The seven Cartan–Killing families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple type: family plus rank, validated on construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    /// Validates the rank constraints: A ≥ 1, B/C ≥ 2, D ≥ 3, E ∈ {6,7,8},
    /// F = 4, G = 2.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let reject = |reason| Error::InvalidRank {
            family: family.letter(),
            rank,
            reason,
        };
        match family {
            Family::A if rank >= 1 => {}
            Family::A => return Err(reject("A requires rank >= 1")),
            Family::B | Family::C if rank >= 2 => {}
            Family::B | Family::C => return Err(reject("B/C require rank >= 2")),
            Family::D if rank >= 3 => {}
            Family::D => return Err(reject("D requires rank >= 3")),
            Family::E if (6..=8).contains(&rank) => {}
            Family::E => return Err(reject("E requires rank in {6,7,8}")),
            Family::F if rank == 4 => {}
            Family::F => return Err(reject("F requires rank 4")),
            Family::G if rank == 2 => {}
            Family::G => return Err(reject("G requires rank 2")),
        }
        Ok(LieType { family, rank })
    }

    /// Parse a label like `E8`, `G2`, `A3`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        LieType::new(fam, rank).map_err(|_| Error::UnknownType(s.to_string()))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the corresponding simple Lie algebra.
    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * n + 2 * n,
            Family::B | Family::C => 2 * n * n + n,
            Family::D => 2 * n * n - n,
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// `(dim - rank) / 2`, the expected number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        (self.dim() - self.rank) / 2
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A root written in the simple-root basis: `α = Σ k_i α_i`, integer `k_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Sum of coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> RootVec {
        RootVec(self.0.iter().map(|k| -k).collect())
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&k| k >= 0)
    }

    pub fn is_nonpos(&self) -> bool {
        self.0.iter().all(|&k| k <= 0)
    }

    /// 1-based coordinate access.
    pub fn coord(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn to_json(&self) -> Value {
        json!(self.0)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A weight in the simple-root basis: `λ = Σ r_i α_i`, exact rational `r_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightVec(pub Vec<Rat>);

impl WeightVec {
    pub fn zero(rank: usize) -> Self {
        WeightVec(vec![Rat::zero(); rank])
    }

    pub fn from_root(v: &RootVec) -> Self {
        WeightVec(v.0.iter().map(|&k| rat(k)).collect())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    /// 1-based coordinate access.
    pub fn coord(&self, i: usize) -> &Rat {
        &self.0[i - 1]
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        WeightVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> WeightVec {
        WeightVec(self.0.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|r| r.is_zero())
    }

    pub fn to_json(&self) -> Value {
        json!(self.0.iter().map(linalg::rat_str).collect::<Vec<_>>())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(linalg::rat_str).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A built root system: Cartan data, enumerated positive roots, fundamental
/// weights and the symmetrized invariant form. Immutable after construction.
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    bilinear: Vec<Vec<i64>>,
    pos_roots: Vec<RootVec>,
    fwm: Vec<Vec<Rat>>,
    pos_index: HashMap<Vec<i64>, usize>,
}

impl RootSystem {
    /// Build the root system for a valid type.
    ///
    /// Positive roots are produced by closure: seed with the simple roots and
    /// add `α + α_i` exactly when the `α_i`-string through `α` continues,
    /// i.e. `p - ⟨α, α_i^∨⟩ > 0` with `p = max { k : α - k·α_i is a root }`.
    pub fn build(lie_type: LieType) -> Result<RootSystem> {
        let n = lie_type.rank();
        let cartan = cartan_matrix(lie_type);
        let sym = symmetrizer(lie_type);
        // Symmetrizability: d_i C[i][j] = d_j C[j][i].
        for i in 0..n {
            for j in 0..n {
                debug_assert_eq!(sym[i] * cartan[i][j], sym[j] * cartan[j][i]);
            }
        }
        let bilinear: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| sym[i] * cartan[i][j]).collect())
            .collect();

        let pos_roots = enumerate_positive(&cartan, n);
        let expected = lie_type.num_positive_roots();
        if pos_roots.len() != expected {
            return Err(Error::Unsupported(format!(
                "enumeration produced {} positive roots for {}, expected {}",
                pos_roots.len(),
                lie_type.label(),
                expected
            )));
        }

        // Fundamental weight matrix: N·P = I with P[i][j] = <alpha_i, alpha_j^vee> = C[j][i].
        let pairing_mat: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| rat(cartan[j][i])).collect())
            .collect();
        let fwm = linalg::invert(&pairing_mat)?;

        let pos_index = pos_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.0.clone(), k))
            .collect();

        Ok(RootSystem {
            lie_type,
            cartan,
            sym,
            bilinear,
            pos_roots,
            fwm,
            pos_index,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    /// `C[i][j] = ⟨α_j, α_i^∨⟩` (0-based storage).
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrizer `d_i = (α_i, α_i)/2`, short roots normalized to length² 2.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    /// Positive roots, ordered by height then lexicographically.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.pos_roots
    }

    /// Is `v` a root (positive or negative)?
    pub fn is_root(&self, v: &RootVec) -> bool {
        self.pos_index.contains_key(&v.0) || self.pos_index.contains_key(&v.neg().0)
    }

    pub fn is_positive_root(&self, v: &RootVec) -> bool {
        self.pos_index.contains_key(&v.0)
    }

    /// The unique root of maximal height.
    pub fn highest_root(&self) -> &RootVec {
        self.pos_roots.last().expect("nonempty root system")
    }

    /// `⟨λ, α_i^∨⟩ = Σ_j λ_j C[i][j]`, `i` 1-based.
    pub fn pairing(&self, lam: &WeightVec, i: usize) -> Result<Rat> {
        self.check_index(i)?;
        let row = &self.cartan[i - 1];
        Ok(lam
            .0
            .iter()
            .zip(row)
            .map(|(l, &c)| l.clone() * rat(c))
            .sum())
    }

    /// Integer fast path of [`pairing`](Self::pairing) for root vectors.
    pub fn pairing_root(&self, v: &RootVec, i: usize) -> i64 {
        let row = &self.cartan[i - 1];
        v.0.iter().zip(row).map(|(&k, &c)| k * c).sum()
    }

    /// Invariant form `(λ, μ) = Σ_{i,j} λ_i μ_j d_i C[i][j]`.
    pub fn inner_product(&self, a: &WeightVec, b: &WeightVec) -> Rat {
        let mut acc = Rat::zero();
        for (i, ai) in a.0.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                if bj.is_zero() || self.bilinear[i][j] == 0 {
                    continue;
                }
                acc += ai.clone() * bj.clone() * rat(self.bilinear[i][j]);
            }
        }
        acc
    }

    /// Integer fast path of the invariant form on root vectors.
    pub fn inner_product_roots(&self, a: &RootVec, b: &RootVec) -> i64 {
        let mut acc = 0;
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                acc += ai * bj * self.bilinear[i][j];
            }
        }
        acc
    }

    /// `(α, α)` for a root vector.
    pub fn root_norm(&self, v: &RootVec) -> i64 {
        self.inner_product_roots(v, v)
    }

    /// `⟨λ, α^∨⟩ = 2(λ,α)/(α,α)` for an arbitrary root `α`.
    pub fn coroot_pairing(&self, lam: &WeightVec, alpha: &RootVec) -> Rat {
        let ip = self.inner_product(lam, &WeightVec::from_root(alpha));
        let norm = rat(self.root_norm(alpha));
        ip * rat(2) / norm
    }

    /// Integer fast path of [`coroot_pairing`](Self::coroot_pairing): exact on
    /// the root lattice, where the pairing is always integral.
    pub fn coroot_pairing_root(&self, lam: &RootVec, alpha: &RootVec) -> i64 {
        let ip = 2 * self.inner_product_roots(lam, alpha);
        let norm = self.root_norm(alpha);
        debug_assert_eq!(ip % norm, 0);
        ip / norm
    }

    /// Fundamental weight matrix `N`: row `i` gives `ω_i = Σ_j N[i][j] α_j`.
    pub fn fundamental_weights(&self) -> &[Vec<Rat>] {
        &self.fwm
    }

    /// `ω_i` as a weight vector, `i` 1-based.
    pub fn fundamental_weight(&self, i: usize) -> Result<WeightVec> {
        self.check_index(i)?;
        Ok(WeightVec(self.fwm[i - 1].clone()))
    }

    /// `⟨λ, α_j^∨⟩ ≥ 0` for all `j` in `levi`.
    pub fn is_dominant(&self, lam: &WeightVec, levi: &IndexSet) -> Result<bool> {
        for &j in levi {
            if self.pairing(lam, j)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Integer fast path of [`is_dominant`](Self::is_dominant).
    pub fn is_dominant_root(&self, v: &RootVec, levi: &IndexSet) -> bool {
        levi.iter().all(|&j| self.pairing_root(v, j) >= 0)
    }

    /// Dynkin adjacency: `i ~ j` iff `C[i][j] ≠ 0`, `i ≠ j` (1-based).
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i - 1][j - 1] != 0
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// Validate a 1-based index set against the rank.
    pub fn check_index_set(&self, s: &IndexSet) -> Result<()> {
        for &i in s {
            self.check_index(i)?;
        }
        Ok(())
    }

    /// Canonical JSON shape:
    /// `{type, rank, cartan, positive_roots, fundamental_weight_matrix}`,
    /// rationals rendered as `p/q` strings.
    pub fn to_json(&self) -> Value {
        json!({
            "type": self.lie_type.label(),
            "rank": self.rank(),
            "cartan": self.cartan,
            "positive_roots": self.pos_roots.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "fundamental_weight_matrix": self.fwm.iter().map(|row| {
                row.iter().map(linalg::rat_str).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootSystem({}, {} positive roots)",
            self.lie_type.label(),
            self.pos_roots.len()
        )
    }
}

fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |c: &mut Vec<Vec<i64>>, edges: &[(usize, usize)]| {
        for &(a, b) in edges {
            c[a - 1][b - 1] = -1;
            c[b - 1][a - 1] = -1;
        }
    };
    match t.family() {
        Family::A => {
            let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            chain(&mut c, &edges);
        }
        Family::B => {
            let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            chain(&mut c, &edges);
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            c[n - 1][n - 2] = -2;
        }
        Family::C => {
            let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
            chain(&mut c, &edges);
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            c[n - 2][n - 1] = -2;
        }
        Family::D => {
            let mut edges: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
            edges.push((n - 2, n));
            chain(&mut c, &edges);
        }
        Family::E => {
            let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if n >= 7 {
                edges.push((6, 7));
            }
            if n == 8 {
                edges.push((7, 8));
            }
            chain(&mut c, &edges);
        }
        Family::F => {
            chain(&mut c, &[(1, 2), (2, 3), (3, 4)]);
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short:
            // <alpha_2, alpha_3^vee> = -2
            c[2][1] = -2;
        }
        Family::G => {
            // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3
            c[0][1] = -3;
            c[1][0] = -1;
        }
    }
    c
}

fn symmetrizer(t: LieType) -> Vec<i64> {
    let n = t.rank();
    match t.family() {
        Family::A | Family::D | Family::E => vec![1; n],
        Family::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        Family::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
    }
}

fn enumerate_positive(cartan: &[Vec<i64>], n: usize) -> Vec<RootVec> {
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        found.insert(e.clone());
        layer.push(e);
    }
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for alpha in &layer {
            for i in 0..n {
                // p = max k with alpha - k*alpha_i a root
                let mut p = 0i64;
                let mut down = alpha.clone();
                loop {
                    down[i] -= 1;
                    if down.iter().all(|&k| k == 0) || !found.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pair: i64 = alpha.iter().zip(&cartan[i]).map(|(&k, &c)| k * c).sum();
                if p - pair > 0 {
                    let mut up = alpha.clone();
                    up[i] += 1;
                    if found.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    let mut roots: Vec<RootVec> = found.into_iter().map(RootVec).collect();
    roots.sort_by_key(|r| (r.height(), r.0.clone()));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{identity, mat_mul, ratio};

    fn rs(label: &str) -> RootSystem {
        RootSystem::build(LieType::parse(label).unwrap()).unwrap()
    }

    fn w(coords: &[i64]) -> WeightVec {
        WeightVec::from_root(&RootVec(coords.to_vec()))
    }

    #[test]
    fn rank_constraints() {
        assert!(LieType::parse("E9").is_err());
        assert!(LieType::parse("F3").is_err());
        assert!(LieType::parse("G3").is_err());
        assert!(LieType::parse("B1").is_err());
        assert!(LieType::parse("C1").is_err());
        assert!(LieType::parse("D2").is_err());
        assert!(LieType::parse("A0").is_err());
        assert!(LieType::parse("X9").is_err());
        assert!(LieType::parse("g2").is_ok());
    }

    #[test]
    fn positive_root_counts() {
        // Oracle: (dim - rank)/2 from the dimension table.
        assert_eq!(rs("G2").positive_roots().len(), 6);
        assert_eq!(rs("E8").positive_roots().len(), 120);
        assert_eq!(rs("E7").positive_roots().len(), 63);
        assert_eq!(rs("E6").positive_roots().len(), 36);
        assert_eq!(rs("F4").positive_roots().len(), 24);
        assert_eq!(rs("A5").positive_roots().len(), 15);
        assert_eq!(rs("B4").positive_roots().len(), 16);
        assert_eq!(rs("C3").positive_roots().len(), 9);
        assert_eq!(rs("D4").positive_roots().len(), 12);
    }

    #[test]
    fn a2_roots_by_hand() {
        let r = rs("A2");
        let got: BTreeSet<Vec<i64>> = r.positive_roots().iter().map(|v| v.0.clone()).collect();
        let want: BTreeSet<Vec<i64>> = [vec![1, 0], vec![0, 1], vec![1, 1]].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn g2_pairings_and_form() {
        let g2 = rs("G2");
        // <alpha, alpha^vee> = 2
        assert_eq!(g2.pairing(&w(&[1, 0]), 1).unwrap(), rat(2));
        // <alpha_2, alpha_1^vee> = -3 pins the orientation
        assert_eq!(g2.pairing(&w(&[0, 1]), 1).unwrap(), rat(-3));
        // (alpha_1,alpha_1)=2, (alpha_2,alpha_2)=6, (alpha_1,alpha_2)=-3
        assert_eq!(g2.inner_product(&w(&[1, 0]), &w(&[1, 0])), rat(2));
        assert_eq!(g2.inner_product(&w(&[0, 1]), &w(&[0, 1])), rat(6));
        assert_eq!(g2.inner_product(&w(&[1, 0]), &w(&[0, 1])), rat(-3));
    }

    #[test]
    fn fundamental_weights_inverse_pairing() {
        for label in ["A1", "A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(label);
            let n = r.rank();
            let pairing_mat: Vec<Vec<Rat>> = (0..n)
                .map(|i| (0..n).map(|j| rat(r.cartan()[j][i])).collect())
                .collect();
            let prod = mat_mul(r.fundamental_weights(), &pairing_mat);
            assert_eq!(prod, identity(n), "N*P != I for {label}");
            // <omega_i, alpha_j^vee> = delta_ij
            for i in 1..=n {
                let om = r.fundamental_weight(i).unwrap();
                for j in 1..=n {
                    let expect = if i == j { rat(1) } else { rat(0) };
                    assert_eq!(r.pairing(&om, j).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn g2_omega1_is_highest_short_root() {
        let g2 = rs("G2");
        let om1 = g2.fundamental_weight(1).unwrap();
        assert_eq!(om1, w(&[2, 1]));
        // (2,1) is a short root: norm 2
        assert_eq!(g2.root_norm(&RootVec(vec![2, 1])), 2);
    }

    #[test]
    fn a1_omega_is_half_alpha() {
        let a1 = rs("A1");
        assert_eq!(
            a1.fundamental_weight(1).unwrap(),
            WeightVec(vec![ratio(1, 2)])
        );
    }

    #[test]
    fn e6_omega1_row_sum() {
        let e6 = rs("E6");
        let row = &e6.fundamental_weights()[0];
        let sum: Rat = row.iter().cloned().sum();
        assert_eq!(sum / row[0].clone(), rat(6));
    }

    #[test]
    fn e6_omega3_pairs_zero_with_alpha5() {
        let e6 = rs("E6");
        let om3 = e6.fundamental_weight(3).unwrap();
        assert_eq!(e6.pairing(&om3, 5).unwrap(), rat(0));
    }

    #[test]
    fn dominance_checks() {
        let g2 = rs("G2");
        assert!(g2.is_dominant(&w(&[2, 1]), &idx(&[1, 2])).unwrap());
        assert!(g2.is_dominant(&w(&[0, -1]), &idx(&[1])).unwrap());
        let a2 = rs("A2");
        assert!(!a2.is_dominant(&w(&[-1, 0]), &idx(&[1, 2])).unwrap());
    }

    #[test]
    fn highest_root_is_dominant() {
        for label in ["A3", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(label);
            let all: IndexSet = (1..=r.rank()).collect();
            let theta = r.highest_root().clone();
            assert!(
                r.is_dominant_root(&theta, &all),
                "theta not dominant in {label}"
            );
            // Unique maximal height
            let h = theta.height();
            let count = r
                .positive_roots()
                .iter()
                .filter(|v| v.height() == h)
                .count();
            assert_eq!(count, 1, "highest root not unique in {label}");
        }
    }

    #[test]
    fn enumeration_deterministic() {
        let a = rs("E7");
        let b = rs("E7");
        assert_eq!(a.positive_roots(), b.positive_roots());
    }

    #[test]
    fn roots_all_nonneg() {
        for label in ["B4", "F4", "E8"] {
            let r = rs(label);
            assert!(r.positive_roots().iter().all(|v| v.is_nonneg()));
        }
    }

    #[test]
    fn root_strings_are_intervals() {
        // {k : alpha + k*alpha_i is a root} is an integer interval containing
        // 0, for alpha not proportional to alpha_i (the string through alpha_i
        // itself is {-alpha_i, alpha_i} with the non-root 0 in between).
        for label in ["A3", "C3", "F4", "G2"] {
            let r = rs(label);
            let n = r.rank();
            for alpha in r.positive_roots() {
                for i in 0..n {
                    let is_alpha_i = alpha
                        .0
                        .iter()
                        .enumerate()
                        .all(|(j, &k)| k == i64::from(j == i));
                    if is_alpha_i {
                        continue;
                    }
                    let member = |k: i64| {
                        let mut v = alpha.0.clone();
                        v[i] += k;
                        let rv = RootVec(v);
                        r.is_root(&rv)
                    };
                    let mut ks: Vec<i64> = Vec::new();
                    for k in -8..=8 {
                        if member(k) {
                            ks.push(k);
                        }
                    }
                    assert!(ks.contains(&0));
                    let lo = *ks.first().unwrap();
                    let hi = *ks.last().unwrap();
                    assert_eq!(
                        ks.len() as i64,
                        hi - lo + 1,
                        "string through {alpha} in direction {} not an interval: {ks:?}",
                        i + 1
                    );
                }
            }
        }
    }

    #[test]
    fn coroot_pairing_consistency() {
        let f4 = rs("F4");
        for alpha in f4.positive_roots() {
            for beta in f4.positive_roots() {
                let fast = f4.coroot_pairing_root(alpha, beta);
                let slow = f4.coroot_pairing(&WeightVec::from_root(alpha), beta);
                assert_eq!(rat(fast), slow);
            }
        }
    }

    #[test]
    fn root_system_is_share_safe() {
        // immutable after construction; concurrent reads are fine
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<RootSystem>();
        assert_send_sync::<RootVec>();
        assert_send_sync::<WeightVec>();
    }

    #[test]
    fn json_shape() {
        let g2 = rs("G2");
        let v = g2.to_json();
        assert_eq!(v["type"], "G2");
        assert_eq!(v["rank"], 2);
        assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
        assert_eq!(v["fundamental_weight_matrix"][0][0], "2");
    }
}
