//! The explicit Chevalley G2 inside GL7 (GL6 in characteristic 2), generated
//! by two embedded copies of SL2, with verification of the torus weights, the
//! adjoint block action, and the one-parameter root subgroup.
//!
//! Basis of the 7-dimensional representation, in order:
//! `(w_2^∨, w_1^∨, w_1², w_1w_2, w_2², w_1, w_2)`; in characteristic 2 the
//! middle vector `w_1w_2` is removed and the symmetric square becomes the
//! Frobenius twist.

use crate::finite::{Field, FieldCtx, Fq, FqMat};
use crate::rootsys::{LieType, RootSystem, RootVec};
use crate::sampling::SplitMix64;
use crate::{Error, Family, Result};
use serde_json::{json, Value};

fn require_2x2(a: &FqMat) -> Result<()> {
    if a.nrows() != 2 || a.ncols() != 2 {
        return Err(Error::Dimension(format!(
            "expected 2x2, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    Ok(())
}

/// `A^c = J · A^{t,-1} · J` with `J` the 2×2 swap. Rejects singular `A`.
pub fn a_conj(a: &FqMat) -> Result<FqMat> {
    require_2x2(a)?;
    let f = a.field();
    let j = {
        let mut m = FqMat::zeros(f, 2, 2);
        m.set(0, 1, f.one());
        m.set(1, 0, f.one());
        m
    };
    let ati = a.transpose().inverse()?;
    Ok(j.mul(&ati).mul(&j))
}

/// Symmetric square of a 2×2 matrix on the basis `(w_1², w_1w_2, w_2²)`.
pub fn sym_square(a: &FqMat) -> FqMat {
    let f = a.field();
    let (va, vb, vc, vd) = (a.get(0, 0), a.get(0, 1), a.get(1, 0), a.get(1, 1));
    let two = f.one().add(&f.one());
    FqMat::from_rows(
        f,
        vec![
            vec![va.mul(va), va.mul(vb), vb.mul(vb)],
            vec![
                two.mul(&va.mul(vc)),
                va.mul(vd).add(&vb.mul(vc)),
                two.mul(&vb.mul(vd)),
            ],
            vec![vc.mul(vc), vc.mul(vd), vd.mul(vd)],
        ],
    )
}

/// Entrywise `p`-th powers: the Frobenius twist `A^{[p]} = F^* A`.
pub fn frobenius_twist(a: &FqMat) -> FqMat {
    a.map(|x| x.frobenius())
}

/// The middle-block representation: Frobenius twist in characteristic 2
/// (2×2), symmetric square otherwise (3×3).
pub fn square_rep(a: &FqMat) -> FqMat {
    if a.field().characteristic() == 2 {
        frobenius_twist(a)
    } else {
        sym_square(a)
    }
}

/// Image of `A ∈ GL2 = Z_1` in GL7 (GL6 for characteristic 2):
/// `diag(A^c, A^{(2)}·det(A)^{-1}, A)`, with `A^{(2)}` replaced by the
/// Frobenius twist `A^{[2]}` in characteristic 2.
pub fn embed_a(a: &FqMat) -> Result<FqMat> {
    require_2x2(a)?;
    let f = a.field();
    let det_inv = a.det().inv().map_err(|_| Error::SingularMatrix)?;
    let conj = a_conj(a)?;
    let mid = square_rep(a).scale(&det_inv);
    Ok(FqMat::block_diag(f, &[&conj, &mid, a]))
}

/// Image of `B ∈ GL2 = Z_2` in GL7 (GL6 for characteristic 2):
/// `diag(det(B)^{-1}, B^c, 1, B, det(B))`, the central 1 dropped in
/// characteristic 2.
pub fn embed_b(b: &FqMat) -> Result<FqMat> {
    require_2x2(b)?;
    let f = b.field();
    let det = b.det();
    let det_inv = det.inv().map_err(|_| Error::SingularMatrix)?;
    let conj = a_conj(b)?;
    let corner = |x: &Fq| {
        let mut m = FqMat::zeros(f, 1, 1);
        m.set(0, 0, x.clone());
        m
    };
    let blocks_det_inv = corner(&det_inv);
    let blocks_det = corner(&det);
    if f.characteristic() == 2 {
        Ok(FqMat::block_diag(
            f,
            &[&blocks_det_inv, &conj, b, &blocks_det],
        ))
    } else {
        let one = corner(&f.one());
        Ok(FqMat::block_diag(
            f,
            &[&blocks_det_inv, &conj, &one, b, &blocks_det],
        ))
    }
}

fn diag2(f: &Field, x: &Fq, y: &Fq) -> FqMat {
    let mut m = FqMat::zeros(f, 2, 2);
    m.set(0, 0, x.clone());
    m.set(1, 1, y.clone());
    m
}

/// Torus weights of the 7- (or 6-) dimensional representation, in basis
/// order. The zero weight sits at the removed `w_1w_2` slot.
pub fn torus_weight_list(char_p: u64) -> Vec<RootVec> {
    let mut w = vec![
        RootVec(vec![2, 1]),
        RootVec(vec![1, 1]),
        RootVec(vec![1, 0]),
        RootVec(vec![0, 0]),
        RootVec(vec![-1, 0]),
        RootVec(vec![-1, -1]),
        RootVec(vec![-2, -1]),
    ];
    if char_p == 2 {
        w.remove(3);
    }
    w
}

/// Outcome of [`verify_torus_weights`].
#[derive(Clone, Debug)]
pub struct TorusWeightReport {
    pub field: String,
    pub ok: bool,
    /// The global sign making the `α_2^∨`-exponents match, when one exists.
    pub eps: Option<i64>,
    pub weights: Vec<RootVec>,
    /// Verified exponent pairs `(⟨λ, α_1^∨⟩, ε·⟨λ, α_2^∨⟩)` per basis vector.
    pub exponents: Vec<(i64, i64)>,
    pub zero_weight_present: bool,
    pub units_checked: usize,
    pub failure: Option<String>,
}

impl TorusWeightReport {
    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "ok": self.ok,
            "eps": self.eps,
            "weights": self.weights.iter().map(|w| w.to_json()).collect::<Vec<_>>(),
            "exponents": self.exponents,
            "zero_weight_present": self.zero_weight_present,
            "units_checked": self.units_checked,
        })
    }
}

/// Check, over every unit of `field`, that the diagonal images of the two
/// torus parameters scale each basis vector by the exponent pair
/// `(⟨λ, α_1^∨⟩, ε·⟨λ, α_2^∨⟩)` of the listed weight `λ`, for one global
/// sign `ε ∈ {±1}`. The zero weight must be present exactly when the
/// characteristic is odd.
pub fn verify_torus_weights(field: &Field) -> Result<TorusWeightReport> {
    let p = field.characteristic();
    let g2 = RootSystem::build(LieType::new(Family::G, 2)?)?;
    let weights = torus_weight_list(p);
    let dim = weights.len();
    let m_exp: Vec<i64> = weights.iter().map(|w| g2.pairing_root(w, 1)).collect();
    let n_raw: Vec<i64> = weights.iter().map(|w| g2.pairing_root(w, 2)).collect();

    let diag_matches =
        |embed: &dyn Fn(&FqMat) -> Result<FqMat>, exps: &[i64]| -> Result<Option<String>> {
            for u in field.units() {
                let t = diag2(field, &u, &u.inv()?);
                let image = embed(&t)?;
                if image.nrows() != dim {
                    return Ok(Some(format!(
                        "image is {}x{}, expected {dim}x{dim}",
                        image.nrows(),
                        image.ncols()
                    )));
                }
                for (j, &e) in exps.iter().enumerate() {
                    for c in 0..dim {
                        let got = image.get(j, c);
                        if c == j {
                            let want = u.powi(e)?;
                            if *got != want {
                                return Ok(Some(format!(
                                    "basis vector {j}: exponent {e} fails at u={u}"
                                )));
                            }
                        } else if !got.is_zero() {
                            return Ok(Some(format!("image not diagonal at ({j},{c})")));
                        }
                    }
                }
            }
            Ok(None)
        };

    let fail_a = diag_matches(&|t| embed_a(t), &m_exp)?;
    if let Some(msg) = fail_a {
        return Ok(TorusWeightReport {
            field: field.name(),
            ok: false,
            eps: None,
            weights,
            exponents: vec![],
            zero_weight_present: p != 2,
            units_checked: field.units().len(),
            failure: Some(format!("Z_1 torus: {msg}")),
        });
    }

    let mut chosen_eps = None;
    let mut last_failure = None;
    for eps in [1i64, -1] {
        let exps: Vec<i64> = n_raw.iter().map(|&n| eps * n).collect();
        match diag_matches(&|t| embed_b(t), &exps)? {
            None => {
                chosen_eps = Some(eps);
                break;
            }
            Some(msg) => last_failure = Some(format!("Z_2 torus (eps={eps}): {msg}")),
        }
    }

    let ok = chosen_eps.is_some();
    let eps = chosen_eps;
    let exponents: Vec<(i64, i64)> = m_exp
        .iter()
        .zip(&n_raw)
        .map(|(&m, &n)| (m, eps.unwrap_or(1) * n))
        .collect();
    Ok(TorusWeightReport {
        field: field.name(),
        ok,
        eps,
        weights,
        exponents,
        zero_weight_present: p != 2,
        units_checked: field.units().len(),
        failure: if ok { None } else { last_failure },
    })
}

/// Outcome of [`homomorphism_check`].
#[derive(Clone, Debug)]
pub struct HomReport {
    pub field: String,
    pub pairs: usize,
    pub ok: bool,
    pub dets_one: bool,
    pub failure: Option<String>,
}

impl HomReport {
    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "pairs": self.pairs,
            "ok": self.ok,
            "dets_one": self.dets_one,
        })
    }
}

/// Random invertible 2×2 matrix.
pub fn random_gl2(field: &Field, rng: &mut SplitMix64) -> FqMat {
    loop {
        let entries: Vec<Fq> = (0..4)
            .map(|_| field.from_u64(rng.below(field.order())))
            .collect();
        let m = FqMat::from_rows(field, vec![entries[0..2].to_vec(), entries[2..4].to_vec()]);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// `embed(X·Y) = embed(X)·embed(Y)` for both embeddings on random invertible
/// pairs, plus `det = 1` of every image.
pub fn homomorphism_check(field: &Field, pairs: usize, seed: u64) -> Result<HomReport> {
    let mut rng = SplitMix64::new(seed);
    let one = field.one();
    let mut dets_one = true;
    for k in 0..pairs {
        let x = random_gl2(field, &mut rng);
        let y = random_gl2(field, &mut rng);
        for (name, embed) in [
            ("embed_a", &embed_a as &dyn Fn(&FqMat) -> Result<FqMat>),
            ("embed_b", &embed_b),
        ] {
            let lhs = embed(&x.mul(&y))?;
            let rhs = embed(&x)?.mul(&embed(&y)?);
            if lhs != rhs {
                return Ok(HomReport {
                    field: field.name(),
                    pairs: k + 1,
                    ok: false,
                    dets_one,
                    failure: Some(format!("{name} not multiplicative at pair {k}")),
                });
            }
            if embed(&x)?.det() != one {
                dets_one = false;
            }
        }
    }
    Ok(HomReport {
        field: field.name(),
        pairs,
        ok: true,
        dets_one,
        failure: None,
    })
}

/// Outcome of [`adjoint_block_check`].
#[derive(Clone, Debug)]
pub struct AdjointBlockReport {
    pub fields: Vec<String>,
    pub samples_checked: usize,
    /// Torus scaling exponents on the `Hom(W^{[2]}⊗det^{-1}, W)` block,
    /// sorted descending.
    pub exponents: Vec<i64>,
    pub ok: bool,
    pub failure: Option<String>,
}

impl AdjointBlockReport {
    pub fn to_json(&self) -> Value {
        json!({
            "fields": self.fields,
            "samples_checked": self.samples_checked,
            "exponents": self.exponents,
            "ok": self.ok,
        })
    }
}

/// In characteristic 2, conjugation by `embed_a(A)` on the three lower-left
/// 2×2 blocks of `gl_6` must act by the block-twisted formulas
/// `X ↦ g_r · X · g_c^{-1}`; on the `Hom(W^{[2]}⊗det^{-1}, W)` block the
/// torus `diag(u, u^{-1})` scales the entries by `u^{-1}, u^3, u^{-3}, u`.
pub fn adjoint_block_check(
    fields: &[Field],
    samples_per_field: usize,
    seed: u64,
) -> Result<AdjointBlockReport> {
    let mut names = Vec::new();
    let mut samples_checked = 0usize;
    // lower-left blocks: (row block, col block) in {W^vee=0, W^[2]=1, W=2}
    let block_pairs = [(1usize, 0usize), (2, 0), (2, 1)];
    for field in fields {
        if field.characteristic() != 2 {
            return Err(Error::Unsupported(
                "adjoint_block_check is the characteristic-2 form".into(),
            ));
        }
        names.push(field.name());
        let mut rng = SplitMix64::new(seed);
        let mut samples: Vec<FqMat> = vec![
            FqMat::identity(field, 2),
            FqMat::from_indices(field, &[&[1, 1], &[0, 1]]),
        ];
        for _ in 0..samples_per_field {
            samples.push(random_gl2(field, &mut rng));
        }
        for a in &samples {
            let g = embed_a(a)?;
            let ginv = g.inverse()?;
            let det_inv = a.det().inv()?;
            let gblocks = [a_conj(a)?, frobenius_twist(a).scale(&det_inv), a.clone()];
            for &(rb, cb) in &block_pairs {
                for ei in 0..2 {
                    for ej in 0..2 {
                        let mut m = FqMat::zeros(field, 6, 6);
                        m.set(2 * rb + ei, 2 * cb + ej, field.one());
                        let conj = g.mul(&m).mul(&ginv);
                        // predicted: g_rb * X * g_cb^{-1} in the same block
                        let mut x = FqMat::zeros(field, 2, 2);
                        x.set(ei, ej, field.one());
                        let predicted = gblocks[rb].mul(&x).mul(&gblocks[cb].inverse()?);
                        let got = conj.block(2 * rb, 2 * cb, 2, 2);
                        if got != predicted {
                            return Ok(AdjointBlockReport {
                                fields: names,
                                samples_checked,
                                exponents: vec![],
                                ok: false,
                                failure: Some(format!(
                                    "block ({rb},{cb}) basis ({ei},{ej}) over {}",
                                    field.name()
                                )),
                            });
                        }
                        // conjugation is block-diagonal: everything else zero
                        for r in 0..6 {
                            for c in 0..6 {
                                let inside = (2 * rb..2 * rb + 2).contains(&r)
                                    && (2 * cb..2 * cb + 2).contains(&c);
                                if !inside && !conj.get(r, c).is_zero() {
                                    return Ok(AdjointBlockReport {
                                        fields: names,
                                        samples_checked,
                                        exponents: vec![],
                                        ok: false,
                                        failure: Some(format!(
                                            "spill outside block ({rb},{cb}) over {}",
                                            field.name()
                                        )),
                                    });
                                }
                            }
                        }
                    }
                }
            }
            samples_checked += 1;
        }
        // torus scaling on the Hom(W^[2] ⊗ det^{-1}, W) block: exponent
        // matrix [[-1, 3], [-3, 1]] from (±1) - (±2)
        let exp_mat = [[-1i64, 3], [-3, 1]];
        for u in field.units() {
            let t = diag2(field, &u, &u.inv()?);
            let g = embed_a(&t)?;
            let ginv = g.inverse()?;
            for ei in 0..2 {
                for ej in 0..2 {
                    let mut m = FqMat::zeros(field, 6, 6);
                    m.set(4 + ei, 2 + ej, field.one());
                    let conj = g.mul(&m).mul(&ginv);
                    let want = u.powi(exp_mat[ei][ej])?;
                    if *conj.get(4 + ei, 2 + ej) != want {
                        return Ok(AdjointBlockReport {
                            fields: names,
                            samples_checked,
                            exponents: vec![],
                            ok: false,
                            failure: Some(format!(
                                "torus exponent at ({ei},{ej}) over {} (u={u})",
                                field.name()
                            )),
                        });
                    }
                }
            }
        }
    }
    let mut exponents = vec![-1i64, 3, -3, 1];
    exponents.sort_unstable_by(|a, b| b.cmp(a));
    Ok(AdjointBlockReport {
        fields: names,
        samples_checked,
        exponents,
        ok: true,
        failure: None,
    })
}

/// Outcome of [`one_param_check`].
#[derive(Clone, Debug)]
pub struct OneParamReport {
    pub field: String,
    pub pairs_checked: usize,
    pub exhaustive: bool,
    pub ok: bool,
    pub failure: Option<String>,
}

impl OneParamReport {
    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "pairs_checked": self.pairs_checked,
            "exhaustive": self.exhaustive,
            "ok": self.ok,
        })
    }
}

/// The characteristic-2 root subgroup `U_{(-2,-1)}`: `M(a)` is the identity
/// plus `a` at positions (4,2) and (5,3) and `a²` at (6,1), 1-based.
pub fn one_param_matrix(field: &Field, a: &Fq) -> Result<FqMat> {
    if field.characteristic() != 2 {
        return Err(Error::Unsupported(
            "the displayed one-parameter matrix is the characteristic-2 form".into(),
        ));
    }
    let mut m = FqMat::identity(field, 6);
    m.set(3, 1, a.clone());
    m.set(4, 2, a.clone());
    m.set(5, 0, a.mul(a));
    Ok(m)
}

/// `M(a)·M(a') = M(a + a')` for sampled (or, by default, all) pairs; the
/// square entry works because `(a+a')² = a² + a'²` in characteristic 2.
pub fn one_param_check(field: &Field, trials: Option<usize>, seed: u64) -> Result<OneParamReport> {
    let elements = field.elements();
    let pairs: Vec<(Fq, Fq)> = match trials {
        None => elements
            .iter()
            .flat_map(|a| elements.iter().map(move |b| (a.clone(), b.clone())))
            .collect(),
        Some(t) => {
            let mut rng = SplitMix64::new(seed);
            (0..t)
                .map(|_| {
                    (
                        field.from_u64(rng.below(field.order())),
                        field.from_u64(rng.below(field.order())),
                    )
                })
                .collect()
        }
    };
    let exhaustive = trials.is_none();
    for (a, b) in &pairs {
        let lhs = one_param_matrix(field, a)?.mul(&one_param_matrix(field, b)?);
        let rhs = one_param_matrix(field, &a.add(b))?;
        if lhs != rhs {
            return Ok(OneParamReport {
                field: field.name(),
                pairs_checked: pairs.len(),
                exhaustive,
                ok: false,
                failure: Some(format!("M({a})·M({b}) != M({a}+{b})")),
            });
        }
    }
    // M(0) is the identity
    if !one_param_matrix(field, &field.zero())?.is_identity() {
        return Ok(OneParamReport {
            field: field.name(),
            pairs_checked: pairs.len(),
            exhaustive,
            ok: false,
            failure: Some("M(0) != identity".into()),
        });
    }
    Ok(OneParamReport {
        field: field.name(),
        pairs_checked: pairs.len(),
        exhaustive,
        ok: true,
        failure: None,
    })
}

/// Convenience: the fields used by the standard matrix suite in
/// characteristic `p`.
pub fn suite_fields(char_p: u64) -> Result<Vec<Field>> {
    match char_p {
        2 => Ok(vec![
            FieldCtx::new(2, 1)?,
            FieldCtx::new(2, 2)?,
            FieldCtx::new(2, 4)?,
        ]),
        p => Ok(vec![FieldCtx::new(p, 1)?, FieldCtx::new(p, 2)?]),
    }
}
