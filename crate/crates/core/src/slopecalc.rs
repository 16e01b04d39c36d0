//! Numerical model of reductions: degree pairings, the invariants `n(P,o)`,
//! canonical-reduction verdicts, and the χ-projection identity.
//!
//! A [`SlopeDatum`] assigns an exact rational degree to each simple root; the
//! degree of any weight extends linearly. Levi semistability is modeled
//! numerically as "degree zero on every Levi simple root", the exact shadow
//! used by the degree bookkeeping, since actual bundle semistability has no
//! finite numerical model.

use crate::linalg::{self, rat, Rat};
use crate::parabolic::{Component, ParabolicType};
use crate::rootsys::{IndexSet, RootSystem, RootVec, WeightVec};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

/// Degrees `delta[i] = ⟨α_i, d⟩` of the simple-root line bundles.
#[derive(Clone, Debug, PartialEq)]
pub struct SlopeDatum(pub Vec<Rat>);

impl SlopeDatum {
    pub fn from_ints(v: &[i64]) -> Self {
        SlopeDatum(v.iter().map(|&n| rat(n)).collect())
    }

    /// 1-based access.
    pub fn delta(&self, i: usize) -> &Rat {
        &self.0[i - 1]
    }

    pub fn scale(&self, q: &Rat) -> SlopeDatum {
        SlopeDatum(self.0.iter().map(|d| d.clone() * q.clone()).collect())
    }

    pub fn to_json(&self) -> Value {
        json!(self.0.iter().map(linalg::rat_str).collect::<Vec<_>>())
    }
}

/// `deg(λ) = Σ λ_i · delta[i]`, linear in both arguments.
pub fn degree(rs: &RootSystem, d: &SlopeDatum, lam: &WeightVec) -> Rat {
    debug_assert_eq!(d.0.len(), rs.rank());
    lam.0
        .iter()
        .zip(&d.0)
        .map(|(l, dd)| l.clone() * dd.clone())
        .sum()
}

/// Integer-weight fast path of [`degree`].
pub fn degree_root(rs: &RootSystem, d: &SlopeDatum, v: &RootVec) -> Rat {
    degree(rs, d, &WeightVec::from_root(v))
}

/// The standard parabolic attached to a dominant slope datum:
/// `S = { i : delta[i] > 0 }`. Rejects non-dominant data (naming the offending
/// index) and the identically-zero datum (semistable, nothing to destabilize).
pub fn parabolic_of_slope<'a>(rs: &'a RootSystem, d: &SlopeDatum) -> Result<ParabolicType<'a>> {
    for (ix, delta) in d.0.iter().enumerate() {
        if delta.is_negative() {
            return Err(Error::NonDominantSlope {
                index: ix + 1,
                value: linalg::rat_str(delta),
            });
        }
    }
    let s: Vec<usize> =
        d.0.iter()
            .enumerate()
            .filter(|(_, delta)| delta.is_positive())
            .map(|(ix, _)| ix + 1)
            .collect();
    if s.is_empty() {
        return Err(Error::SemistableSlope);
    }
    ParabolicType::new(rs, s)
}

/// `n(P,o) = Σ_{α ∈ W(P,o)} deg(α)` for every connected component `o` of `S`.
pub fn numerical_invariants(
    p: &ParabolicType<'_>,
    d: &SlopeDatum,
) -> Result<Vec<(Component, Rat)>> {
    let rs = p.root_system();
    p.components()
        .into_iter()
        .map(|comp| {
            let n = p
                .w_po(comp.indices())?
                .iter()
                .map(|alpha| degree_root(rs, d, alpha))
                .sum();
            Ok((comp, n))
        })
        .collect()
}

/// Everything [`check_canonical`] reports.
#[derive(Clone, Debug)]
pub struct CanonicalVerdict {
    pub s: Vec<usize>,
    pub delta: SlopeDatum,
    /// `delta > 0` on every root of `S`.
    pub s_degrees_positive: bool,
    /// `delta = 0` on every Levi simple root (numerical Levi semistability).
    pub levi_degrees_zero: bool,
    pub invariants: Vec<(Vec<usize>, Rat)>,
    pub invariants_positive: bool,
    pub gp_degrees: Vec<(RootVec, Rat)>,
    pub gp_all_negative: bool,
    pub is_canonical: bool,
    pub violations: Vec<String>,
}

impl CanonicalVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "S": self.s,
            "delta": self.delta.to_json(),
            "s_degrees_positive": self.s_degrees_positive,
            "levi_degrees_zero": self.levi_degrees_zero,
            "invariants": self.invariants.iter().map(|(o, n)| json!({
                "component": o,
                "n": linalg::rat_str(n),
            })).collect::<Vec<_>>(),
            "invariants_positive": self.invariants_positive,
            "gp_degrees": self.gp_degrees.iter().map(|(w, deg)| json!({
                "weight": w.to_json(),
                "degree": linalg::rat_str(deg),
            })).collect::<Vec<_>>(),
            "gp_all_negative": self.gp_all_negative,
            "is_canonical": self.is_canonical,
            "violations": self.violations,
        })
    }
}

/// The numerical canonical-reduction test: `delta > 0` on `S`, `delta = 0` on
/// the Levi, all `n(P,o) > 0`, and every `g/p` weight of strictly negative
/// degree. All four facts are reported, not just the conjunction.
pub fn check_canonical(p: &ParabolicType<'_>, d: &SlopeDatum) -> Result<CanonicalVerdict> {
    let rs = p.root_system();
    let mut violations = Vec::new();

    let s_degrees_positive = p.s().iter().all(|&i| d.delta(i).is_positive());
    if !s_degrees_positive {
        violations.push("some delta[i] with i in S is not strictly positive".to_string());
    }
    let levi_degrees_zero = p.levi().iter().all(|&j| d.delta(j).is_zero());
    if !levi_degrees_zero {
        violations.push("some Levi simple root has nonzero degree".to_string());
    }

    let invariants_raw = numerical_invariants(p, d)?;
    let invariants_positive = invariants_raw.iter().all(|(_, n)| n.is_positive());
    if !invariants_positive {
        violations.push("some numerical invariant n(P,o) is not > 0".to_string());
    }
    let invariants: Vec<(Vec<usize>, Rat)> = invariants_raw
        .into_iter()
        .map(|(c, n)| (c.indices().iter().copied().collect(), n))
        .collect();

    let gp_degrees: Vec<(RootVec, Rat)> = p
        .gp_weights()
        .into_iter()
        .map(|w| {
            let deg = degree_root(rs, d, &w);
            (w, deg)
        })
        .collect();
    let gp_all_negative = gp_degrees.iter().all(|(_, deg)| deg.is_negative());
    if !gp_all_negative {
        violations.push("some g/p weight has nonnegative degree".to_string());
    }

    let is_canonical =
        s_degrees_positive && levi_degrees_zero && invariants_positive && gp_all_negative;
    Ok(CanonicalVerdict {
        s: p.s().iter().copied().collect(),
        delta: d.clone(),
        s_degrees_positive,
        levi_degrees_zero,
        invariants,
        invariants_positive,
        gp_degrees,
        gp_all_negative,
        is_canonical,
        violations,
    })
}

/// `χ = det(Lie(Q_o)/Lie(P))` as a weight vector: the sum of the negative
/// roots picked up when enlarging `P` to `Q_o` with `t(Q_o) = S ∖ o`, i.e.
/// those with vanishing `S∖o`-coefficients and a strictly negative
/// `o`-coefficient. `o` may be a connected component of `S` or any connected
/// subset (in particular a single root).
pub fn chi_character(p: &ParabolicType<'_>, o: &IndexSet) -> Result<WeightVec> {
    p.check_enlargement(o)?;
    let rs = p.root_system();
    let mut total = vec![0i64; rs.rank()];
    for beta in rs.positive_roots() {
        let off_o_zero = p
            .s()
            .iter()
            .filter(|i| !o.contains(i))
            .all(|&i| beta.coord(i) == 0);
        let on_o = o.iter().any(|&i| beta.coord(i) > 0);
        if off_o_zero && on_o {
            for (j, &k) in beta.0.iter().enumerate() {
                total[j] -= k;
            }
        }
    }
    Ok(WeightVec(total.into_iter().map(rat).collect()))
}

/// Result of the χ-projection identity check.
#[derive(Clone, Debug)]
pub struct ChiProjection {
    /// The positive constant with `χ = −c·π`, when it exists.
    pub c: Option<Rat>,
    /// Orthogonal projection `π` of `Σ_{i∈o} α_i` away from the Levi span.
    pub projection: Vec<Rat>,
    /// `χ + c·π` when the identity fails (zero vector when it holds).
    pub residual: Option<Vec<Rat>>,
    /// `⟨χ, α_j^∨⟩ = 0` for every Levi `j`.
    pub levi_orthogonal: bool,
    pub ok: bool,
}

impl ChiProjection {
    pub fn to_json(&self) -> Value {
        json!({
            "c": self.c.as_ref().map(linalg::rat_str),
            "projection": self.projection.iter().map(linalg::rat_str).collect::<Vec<_>>(),
            "levi_orthogonal": self.levi_orthogonal,
            "ok": self.ok,
        })
    }
}

/// Verify that `χ` is `−c` times the orthogonal projection (w.r.t. the
/// invariant form) of `Σ_{i∈o} α_i` onto the orthogonal complement of the
/// Levi simple roots, for a single rational `c > 0`, and that `χ` pairs to
/// zero with every Levi coroot.
pub fn chi_projection_check(p: &ParabolicType<'_>, o: &IndexSet) -> Result<ChiProjection> {
    let rs = p.root_system();
    let chi = chi_character(p, o)?;
    let levi: Vec<usize> = p.levi().into_iter().collect();

    // sigma = sum of the o simple roots
    let mut sigma = vec![Rat::zero(); rs.rank()];
    for &i in o {
        sigma[i - 1] += rat(1);
    }
    let sigma = WeightVec(sigma);

    // Project: solve the Levi Gram system (positive definite, hence solvable)
    let m = levi.len();
    let mut projection: Vec<Rat> = sigma.0.clone();
    if m > 0 {
        let gram: Vec<Vec<Rat>> = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| {
                        let ea = RootVec(unit(rs.rank(), levi[a]));
                        let eb = RootVec(unit(rs.rank(), levi[b]));
                        rat(rs.inner_product_roots(&ea, &eb))
                    })
                    .collect()
            })
            .collect();
        let rhs: Vec<Rat> = (0..m)
            .map(|a| {
                let ea = WeightVec::from_root(&RootVec(unit(rs.rank(), levi[a])));
                rs.inner_product(&sigma, &ea)
            })
            .collect();
        let coeffs = linalg::solve(&gram, &rhs)?;
        for (a, x) in coeffs.into_iter().enumerate() {
            projection[levi[a] - 1] -= x;
        }
    }

    // chi should be -c * projection for one positive rational c
    let pivot = projection.iter().position(|x| !x.is_zero());
    let (c, residual_vec) = match pivot {
        None => (None, Some(chi.0.clone())),
        Some(ix) => {
            let c = -chi.0[ix].clone() / projection[ix].clone();
            let residual: Vec<Rat> = chi
                .0
                .iter()
                .zip(&projection)
                .map(|(x, pi)| x.clone() + c.clone() * pi.clone())
                .collect();
            (Some(c), Some(residual))
        }
    };
    let proportional = residual_vec
        .as_ref()
        .map(|r| r.iter().all(|x| x.is_zero()))
        .unwrap_or(false);

    let mut levi_orthogonal = true;
    for &j in &levi {
        if !rs.pairing(&chi, j)?.is_zero() {
            levi_orthogonal = false;
        }
    }

    let ok =
        proportional && levi_orthogonal && c.as_ref().map(|c| c.is_positive()).unwrap_or(false);
    Ok(ChiProjection {
        c,
        projection,
        residual: if proportional { None } else { residual_vec },
        levi_orthogonal,
        ok,
    })
}

fn unit(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; rank];
    v[i - 1] = 1;
    v
}

/// Result of [`n_deg_relation_check`].
#[derive(Clone, Debug)]
pub struct NDegOutcome {
    pub ok: bool,
    /// The fixed constant with `n(P,o) = −c′·deg(χ)` across all samples.
    pub c_prime: Option<Rat>,
    /// Samples carrying no constraint (both functionals zero).
    pub skipped: usize,
    /// On failure: the sample with its `(n, deg χ)` values.
    pub witness: Option<(SlopeDatum, Rat, Rat)>,
}

/// Check that one rational `c′ > 0`, solved from the first informative sample,
/// satisfies `n(P,o)(d) = −c′ · deg_d(χ)` on every sample `d`.
pub fn n_deg_relation_check(
    p: &ParabolicType<'_>,
    o: &IndexSet,
    samples: &[SlopeDatum],
) -> Result<NDegOutcome> {
    let rs = p.root_system();
    let w = p.w_po(o)?;
    let chi = chi_character(p, o)?;
    let mut c_prime: Option<Rat> = None;
    let mut skipped = 0usize;
    for d in samples {
        let n: Rat = w.iter().map(|alpha| degree_root(rs, d, alpha)).sum();
        let chi_deg = degree(rs, d, &chi);
        if chi_deg.is_zero() {
            if n.is_zero() {
                skipped += 1;
                continue;
            }
            return Ok(NDegOutcome {
                ok: false,
                c_prime,
                skipped,
                witness: Some((d.clone(), n, chi_deg)),
            });
        }
        let candidate = -n.clone() / chi_deg.clone();
        match &c_prime {
            None => {
                if !candidate.is_positive() {
                    return Ok(NDegOutcome {
                        ok: false,
                        c_prime: Some(candidate),
                        skipped,
                        witness: Some((d.clone(), n, chi_deg)),
                    });
                }
                c_prime = Some(candidate);
            }
            Some(c) => {
                if candidate != *c {
                    return Ok(NDegOutcome {
                        ok: false,
                        c_prime: c_prime.clone(),
                        skipped,
                        witness: Some((d.clone(), n, chi_deg)),
                    });
                }
            }
        }
    }
    Ok(NDegOutcome {
        ok: true,
        c_prime,
        skipped,
        witness: None,
    })
}
