//! The explicit G2 case: Chevalley matrices over small finite fields, weight
//! and block verification, and the characteristic-2 counterexample ledger.

pub mod chevalley;
pub mod ledger;

pub use chevalley::{
    a_conj, adjoint_block_check, embed_a, embed_b, frobenius_twist, homomorphism_check,
    one_param_check, one_param_matrix, random_gl2, square_rep, suite_fields, sym_square,
    torus_weight_list, verify_torus_weights, AdjointBlockReport, HomReport, OneParamReport,
    TorusWeightReport,
};
pub use ledger::{
    counterexample_report, det_bundle, dual, frob_pull, frob_push_line, instabil_ledger, tensor,
    ClaimStatus, CounterexampleReport, CounterexampleStatus, FormalBundle, GenusPoly, LedgerEval,
    LedgerReport, Slope, Verdict,
};

use crate::finite::FieldCtx;
use crate::height::{ht_piece, is_prime, low_height_failures};
use crate::linalg::{self, Rat};
use crate::parabolic::{GradedPiece, ParabolicType};
use crate::rootsys::{IndexSet, LieType, RootSystem};
use crate::{Error, Family, Result};
use serde_json::{json, Value};

/// Decomposition summary used by the analysis report: the `g/p` pieces for
/// one parabolic type with their heights and low-height flags.
#[derive(Clone, Debug)]
pub struct DecompositionSummary {
    pub s: Vec<usize>,
    pub pieces: Vec<(GradedPiece, Rat)>,
    pub max_height: Rat,
    pub flagged_levels: Vec<i64>,
}

impl DecompositionSummary {
    fn build(rs: &RootSystem, s: &IndexSet, char_p: u64) -> Result<Self> {
        let p = ParabolicType::new(rs, s.iter().copied())?;
        let mut pieces = Vec::new();
        let mut max_height = linalg::rat(0);
        for piece in p.subquotient_partition() {
            let (ht, _) = ht_piece(rs, s, &piece)?;
            if ht > max_height {
                max_height = ht.clone();
            }
            pieces.push((piece, ht));
        }
        let flagged_levels = low_height_failures(rs, s, char_p)?
            .into_iter()
            .map(|piece| piece.level)
            .collect();
        Ok(DecompositionSummary {
            s: s.iter().copied().collect(),
            pieces,
            max_height,
            flagged_levels,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "S": self.s,
            "pieces": self.pieces.iter().map(|(piece, ht)| {
                let mut v = piece.to_json();
                v["ht"] = json!(linalg::rat_str(ht));
                v
            }).collect::<Vec<_>>(),
            "max_height": linalg::rat_str(&self.max_height),
            "flagged_levels": self.flagged_levels,
        })
    }
}

/// The full matrix-level analysis for one characteristic.
#[derive(Clone, Debug)]
pub struct G2Analysis {
    pub char_p: u64,
    pub torus: TorusWeightReport,
    pub homomorphisms: Vec<HomReport>,
    pub adjoint: Option<AdjointBlockReport>,
    pub one_param: Option<OneParamReport>,
    pub p1_decomposition: DecompositionSummary,
    pub p2_decomposition: DecompositionSummary,
    pub ok: bool,
}

impl G2Analysis {
    pub fn to_json(&self) -> Value {
        json!({
            "char": self.char_p,
            "torus_weights": self.torus.to_json(),
            "homomorphisms": self.homomorphisms.iter().map(|h| h.to_json()).collect::<Vec<_>>(),
            "adjoint_blocks": self.adjoint.as_ref().map(|a| a.to_json()),
            "one_param": self.one_param.as_ref().map(|o| o.to_json()),
            "decomposition_t_p_2": self.p2_decomposition.to_json(),
            "decomposition_t_p_1": self.p1_decomposition.to_json(),
            "ok": self.ok,
        })
    }
}

/// Run the whole matrix suite for characteristic `p ∈ {2,3,5,7}`: torus
/// weights over `F_{p²}` (and `F_{p⁴}` checks in characteristic 2),
/// homomorphism spot checks, and in characteristic 2 the adjoint-block and
/// one-parameter verifications; plus the `g/p` decomposition summaries for
/// both maximal parabolic types.
pub fn analyze(char_p: u64, hom_pairs: usize, seed: u64) -> Result<G2Analysis> {
    if !is_prime(char_p) {
        return Err(Error::NotPrime(char_p));
    }
    let fields = suite_fields(char_p)?;
    // largest field gives the most discriminating torus check
    let torus_field = fields.last().expect("nonempty").clone();
    let torus = verify_torus_weights(&torus_field)?;

    let mut homomorphisms = Vec::new();
    for field in &fields {
        homomorphisms.push(homomorphism_check(field, hom_pairs, seed)?);
    }

    let (adjoint, one_param) = if char_p == 2 {
        let adjoint = adjoint_block_check(&fields, 10, seed)?;
        let f4 = FieldCtx::new(2, 2)?;
        let one_param = one_param_check(&f4, None, seed)?;
        (Some(adjoint), Some(one_param))
    } else {
        (None, None)
    };

    let rs = RootSystem::build(LieType::new(Family::G, 2)?)?;
    let s1: IndexSet = [1usize].into_iter().collect();
    let s2: IndexSet = [2usize].into_iter().collect();
    let p1_decomposition = DecompositionSummary::build(&rs, &s1, char_p)?;
    let p2_decomposition = DecompositionSummary::build(&rs, &s2, char_p)?;

    let ok = torus.ok
        && homomorphisms.iter().all(|h| h.ok && h.dets_one)
        && adjoint.as_ref().map(|a| a.ok).unwrap_or(true)
        && one_param.as_ref().map(|o| o.ok).unwrap_or(true);

    Ok(G2Analysis {
        char_p,
        torus,
        homomorphisms,
        adjoint,
        one_param,
        p1_decomposition,
        p2_decomposition,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn analyze_char2() {
        let a = analyze(2, 25, 0).unwrap();
        assert!(a.ok);
        assert_eq!(a.torus.weights.len(), 6);
        assert!(a.adjoint.is_some());
        assert!(a.one_param.as_ref().unwrap().exhaustive);
        assert_eq!(a.p2_decomposition.flagged_levels, vec![1]);
        assert!(a.p1_decomposition.flagged_levels.is_empty());
        assert_eq!(a.p1_decomposition.max_height, rat(1));
        assert_eq!(a.p2_decomposition.max_height, rat(3));
    }

    #[test]
    fn analyze_char3() {
        let a = analyze(3, 10, 0).unwrap();
        assert!(a.ok);
        assert_eq!(a.torus.weights.len(), 7);
        assert!(a.adjoint.is_none());
        // p = 3 still trips the level-1 piece (height 3 >= 3)
        assert_eq!(a.p2_decomposition.flagged_levels, vec![1]);
    }

    #[test]
    fn analyze_char5_clean() {
        let a = analyze(5, 5, 0).unwrap();
        assert!(a.ok);
        assert!(a.p2_decomposition.flagged_levels.is_empty());
        assert!(analyze(4, 5, 0).is_err());
    }
}
