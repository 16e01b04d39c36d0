//! Property suites shared between the standalone `properties` target and the
//! acceptance gate. Each returns a list of violation messages; empty = pass.

use liecomb_core::linalg::{rat, Rat};
use liecomb_core::parabolic::ParabolicType;
use liecomb_core::rootsys::{Family, IndexSet, LieType, RootSystem, RootVec, WeightVec};
use liecomb_core::sampling::SplitMix64;
use liecomb_core::slopecalc::{check_canonical, degree, SlopeDatum};
use std::collections::BTreeSet;

pub fn build(label: &str) -> RootSystem {
    RootSystem::build(LieType::parse(label).unwrap()).unwrap()
}

/// Root strings `{k : α + k·α_i is a root}` are integer intervals containing
/// zero, for α not proportional to α_i.
pub fn root_string_intervals() -> Vec<String> {
    let mut bad = Vec::new();
    for label in ["A4", "B3", "C4", "D4", "F4", "G2", "E6"] {
        let rs = build(label);
        let n = rs.rank();
        for alpha in rs.positive_roots() {
            for i in 0..n {
                let is_alpha_i = alpha
                    .coords()
                    .iter()
                    .enumerate()
                    .all(|(j, &k)| k == i64::from(j == i));
                if is_alpha_i {
                    continue;
                }
                let mut ks = Vec::new();
                for k in -8i64..=8 {
                    let mut v = alpha.coords().to_vec();
                    v[i] += k;
                    if rs.is_root(&RootVec(v)) {
                        ks.push(k);
                    }
                }
                let lo = *ks.first().unwrap();
                let hi = *ks.last().unwrap();
                if !ks.contains(&0) || ks.len() as i64 != hi - lo + 1 {
                    bad.push(format!(
                        "{label}: string through {alpha} along {} = {ks:?}",
                        i + 1
                    ));
                }
            }
        }
    }
    bad
}

/// `deg(d, λ+μ) = deg(d,λ) + deg(d,μ)` on random integral weights.
pub fn degree_linearity(seed: u64) -> Vec<String> {
    let mut bad = Vec::new();
    let mut rng = SplitMix64::new(seed);
    for label in ["A3", "C4", "E6", "G2"] {
        let rs = build(label);
        let n = rs.rank();
        for _ in 0..50 {
            let d = SlopeDatum((0..n).map(|_| rng.rational(9, 5)).collect());
            let lam = WeightVec((0..n).map(|_| rat(rng.int_in(10))).collect());
            let mu = WeightVec((0..n).map(|_| rat(rng.int_in(10))).collect());
            let lhs = degree(&rs, &d, &lam.add(&mu));
            let rhs = degree(&rs, &d, &lam) + degree(&rs, &d, &mu);
            if lhs != rhs {
                bad.push(format!("{label}: degree not linear at {lam} + {mu}"));
            }
        }
    }
    bad
}

/// `check_canonical` verdicts are invariant under `d ↦ q·d` for `q > 0`.
pub fn canonical_scaling_invariance(seed: u64) -> Vec<String> {
    let mut bad = Vec::new();
    let mut rng = SplitMix64::new(seed);
    for label in ["A3", "C3", "E6", "F4", "G2"] {
        let rs = build(label);
        let n = rs.rank();
        for _ in 0..40 {
            let mask = 1 + rng.below((1 << n) - 1);
            let s: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let p = ParabolicType::new(&rs, s.clone()).unwrap();
            let d = SlopeDatum((0..n).map(|_| rng.rational(6, 4)).collect());
            let v1 = check_canonical(&p, &d).unwrap();
            for _ in 0..3 {
                let mut q: Rat = rng.rational(7, 5);
                if q <= rat(0) {
                    q = rat(1) - q;
                }
                let v2 = check_canonical(&p, &d.scale(&q)).unwrap();
                if v1.is_canonical != v2.is_canonical
                    || v1.gp_all_negative != v2.gp_all_negative
                    || v1.invariants_positive != v2.invariants_positive
                    || v1.levi_degrees_zero != v2.levi_degrees_zero
                {
                    bad.push(format!(
                        "{label} S={s:?}: verdict changed under scaling by {q}"
                    ));
                }
            }
        }
    }
    bad
}

/// `U_0 ∖ U_1 = ⊔_o W(P,o)` over `draws` random (type, S) pairs.
pub fn filtration_partition_consistency(draws: usize, seed: u64) -> Vec<String> {
    let mut bad = Vec::new();
    let mut rng = SplitMix64::new(seed);
    let types: Vec<LieType> = {
        let mut t = Vec::new();
        for n in 1..=6 {
            t.push(LieType::new(Family::A, n).unwrap());
        }
        for n in 2..=6 {
            t.push(LieType::new(Family::B, n).unwrap());
            t.push(LieType::new(Family::C, n).unwrap());
        }
        for n in 3..=6 {
            t.push(LieType::new(Family::D, n).unwrap());
        }
        t.push(LieType::new(Family::E, 6).unwrap());
        t.push(LieType::new(Family::E, 7).unwrap());
        t.push(LieType::new(Family::F, 4).unwrap());
        t.push(LieType::new(Family::G, 2).unwrap());
        t
    };
    let built: Vec<RootSystem> = types
        .iter()
        .map(|&t| RootSystem::build(t).unwrap())
        .collect();
    for _ in 0..draws {
        let rs = &built[rng.below(built.len() as u64) as usize];
        let n = rs.rank();
        let mask = 1 + rng.below((1u64 << n) - 1);
        let s: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let p = ParabolicType::new(rs, s.clone()).unwrap();
        let layers = p.nil_filtration();
        let u0: BTreeSet<RootVec> = layers[0].iter().cloned().collect();
        let u1: BTreeSet<RootVec> = layers
            .get(1)
            .map(|l| l.iter().cloned().collect())
            .unwrap_or_default();
        let level1: BTreeSet<RootVec> = u0.difference(&u1).cloned().collect();
        let mut union: BTreeSet<RootVec> = BTreeSet::new();
        let mut total = 0usize;
        for comp in p.components() {
            let w = p.w_po(comp.indices()).unwrap();
            total += w.len();
            union.extend(w);
        }
        if union.len() != total {
            bad.push(format!("{}, S={s:?}: W(P,o) overlap", rs.lie_type()));
        }
        if union != level1 {
            bad.push(format!(
                "{}, S={s:?}: U_0\\U_1 != union of W(P,o)",
                rs.lie_type()
            ));
        }
    }
    bad
}

/// Convenience used by sweeps: all nonempty subsets of `1..=rank`.
pub fn all_subsets(rank: usize) -> Vec<Vec<usize>> {
    (1u64..(1 << rank))
        .map(|mask| (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// The canonical index-set constructor used in tests.
pub fn iset(v: &[usize]) -> IndexSet {
    v.iter().copied().collect()
}
