//! Standalone property suites: run with `cargo test --test properties`.

mod common;

#[test]
fn root_string_interval_property() {
    let bad = common::root_string_intervals();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn degree_linearity_property() {
    let bad = common::degree_linearity(0);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn canonical_scaling_invariance_property() {
    let bad = common::canonical_scaling_invariance(0);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn filtration_partition_consistency_property() {
    let bad = common::filtration_partition_consistency(200, 0);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn chi_projection_single_root_sweep_e7_e8() {
    // The single-root projection identity across every parabolic type of the
    // two largest exceptional systems (the smaller ones are swept in the
    // acceptance gate).
    use liecomb_core::parabolic::ParabolicType;
    use liecomb_core::slopecalc::chi_projection_check;
    use num_traits::Signed;
    let mut bad = Vec::new();
    for label in ["E7", "E8"] {
        let rs = common::build(label);
        for s in common::all_subsets(rs.rank()) {
            let p = ParabolicType::new(&rs, s.clone()).unwrap();
            for &i in &s {
                let proj = chi_projection_check(&p, &common::iset(&[i])).unwrap();
                let c_ok = proj.c.as_ref().map(|c| c.is_positive()).unwrap_or(false);
                if !proj.ok || !c_ok {
                    bad.push(format!("{label} S={s:?} o={{{i}}}"));
                }
            }
        }
    }
    assert!(bad.is_empty(), "{bad:?}");
}
