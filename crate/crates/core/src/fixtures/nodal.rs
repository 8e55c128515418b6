//! The nodal cubic and its double Kummer cover, and the cubic with inflectional tangents.

use super::{parse_list, Run, Severity};
use crate::braid::BraidWord;
use crate::error::Result;
use crate::factorization::{Factorization, HurwitzMove};
use crate::kummer::{self, DiagramSystem, Letters, LiftSpec};
use crate::zvk::{abelianize, presentation_fully_horizontal};

fn b(d: usize, s: &str) -> Result<BraidWord> {
    BraidWord::parse(d, s)
}

/// Extended monodromy of the nodal cubic with the axis strand last.
fn nodal_base(run: &mut Run) -> Result<Factorization> {
    let raw = Factorization::parse(4, false, &["s1^2", "(s2 s3)^(s1^-1 s2)", "s2^6"])?;
    run.step("nodal cubic in lexicographic order: (s1^2, (s2 s3)^(s1^-1 s2), s2^6)");
    let f = raw
        .conjugate_all(&b(4, "s3^-1")?)?
        .conjugate_all(&b(4, "s2^-1")?)?
        .apply_moves(&HurwitzMove::parse_list("h2^-1")?)?
        .conjugate_all(&b(4, "s1^-1")?)?;
    run.step("conjugate by s3^-1 and s2^-1, apply h2^-1, conjugate by s1^-1");
    let marked = Factorization::parse(4, true, &["s2^2", "s2 * s3^6", "(s1 s2)^(s3^2)"])?;
    run.expect_list("marked nodal cubic", Severity::Hard, &f, &marked)?;
    // continue with the printed words, which keep the marked strand visibly fixed
    let f = marked;
    run.expect_braid("braid at infinity", &kummer::infinity_braid(&f), &b(4, "(s1 s2)^(s3^2 s2)")?)?;
    Ok(f)
}

pub(crate) fn nodal_cubic(run: &mut Run) -> Result<()> {
    let f = nodal_base(run)?;
    run.output("marked", &f);
    Ok(())
}

/// Replace every entry of `f` by the matching group, checking products by the oracle.
fn decompose(run: &mut Run, f: &Factorization, table: &[&[&str]]) -> Result<Factorization> {
    let d = f.strands();
    let mut out = f.clone();
    for (row, parts) in table.iter().enumerate().rev() {
        let parts = parts.iter().map(|s| b(d, s)).collect::<Result<Vec<_>>>()?;
        let left = f.entry(row + 1)?;
        let prod = BraidWord::pseudo_coxeter(d, &parts)?;
        run.expect_braid(&format!("row {} decomposition", row + 1), &prod, left)?;
        out = out.replace_entry(row + 1, parts)?;
    }
    Ok(out)
}

pub(crate) fn dual_nodal_quartic(run: &mut Run) -> Result<()> {
    let base = nodal_base(run)?;
    let spec = LiftSpec::new(2, 3, DiagramSystem::Straight2)?;
    let fixed = spec.native_fixed_strand(Letters::Native);
    let lifted = spec.lift_forgetful(&base, Letters::Native)?;
    run.step("straight lift of degree 2 in native letters, forget the middle strand");
    let printed = parse_list(
        6,
        &[
            "s2^2 s4^2",
            "(s2 s4) * s3^3",
            "(s2 s4 s3 s5 s1) * (s2^2 s4^2)",
            "(s3^3)^(s2^-1 s4^-1 s5 s1)",
            "((s1 s2)^2 (s5 s4)^2)^(s3)",
        ],
    )?;
    run.expect_list("lifted list", Severity::Hard, &lifted, &printed)?;
    let at_infinity = spec.infinity_braid(&base, Letters::Native)?.forget_strand(fixed)?;
    run.expect_braid("braid at infinity", &at_infinity, &b(6, "((s1 s2)^2 (s5 s4)^2)^(s3 s2 s4)")?)?;
    let mut f = lifted;
    f.push(at_infinity.free_reduced(), Some("infinity".into()))?;
    run.expect_generic("generic at infinity", &f)?;
    run.output("generic at infinity", &f);

    let out = decompose(run, &f, QUARTIC_TABLE)?;
    run.step("replace each fiber by its generic decomposition");
    run.output("generic", &out);
    run.expect_generic("generic", &out)
}

pub const QUARTIC_TABLE: &[&[&str]] = &[
    &["s2^2", "s4^2"],
    &["(s2 s4) * s3^3"],
    &["(s2 s4 s3 s1) * s2^2", "(s2 s4 s3 s5) * s4^2"],
    &["(s3^3)^(s2^-1 s4^-1 s5 s1)"],
    &["s2^(s1 s3)", "s1^3", "s4^(s5 s3)", "s5^3"],
    &["s2^(s1 s3 s2 s4)", "(s1^3)^(s2)", "s4^(s5 s3 s2 s4)", "(s5^3)^(s4)"],
];

pub(crate) fn cubic_tangents(run: &mut Run) -> Result<()> {
    let base = Factorization::parse(4, true, &["s3^6", "s3^2 * (s1 s2)", "s1 s2"])?;
    run.step("smooth cubic with three inflectional tangents: (s3^6, s3^2 * (s1 s2), s1 s2)");
    run.expect_braid("braid at infinity", &kummer::infinity_braid(&base), &b(4, "(s1 s2)^(s3^2)")?)?;
    let spec = LiftSpec::new(2, 3, DiagramSystem::Straight2)?;
    let fixed = spec.native_fixed_strand(Letters::Native);
    let lifted = spec.lift_forgetful(&base, Letters::Native)?;
    let at_infinity = spec.infinity_braid(&base, Letters::Native)?.forget_strand(fixed)?;
    let mut f = lifted;
    f.push(at_infinity.free_reduced(), Some("infinity".into()))?;
    run.step("straight lift of degree 2 in native letters, forget the middle strand, append infinity");
    run.expect_generic("generic at infinity", &f)?;
    run.output("generic at infinity", &f);

    let cover = Factorization::parse(
        4,
        false,
        &[
            "s3^6",
            "s3^2 * (s1 s2)",
            "(s3^6)^(s2)",
            "(s2^-1 s3^2) * (s1 s2)",
            "(s1 s2)^2",
            "((s1 s2)^2)^(s3^2)",
        ],
    )?;
    let around = base.entry(3)?.clone();
    let mut own = Factorization::new(4, Vec::new(), false)?;
    for e in &base.entries()[..2] {
        own.push(e.clone(), None)?;
    }
    for e in &base.entries()[..2] {
        own.push(e.conj(&around)?, None)?;
    }
    own.push(around.pow(2), None)?;
    own.push(kummer::infinity_braid(&base).pow(2), None)?;
    run.expect_list("double cover of the base as printed", Severity::Soft, &own, &cover)?;

    let out = decompose(run, &f, TANGENTS_TABLE)?;
    run.step("replace each fiber by its generic decomposition");
    run.output("generic", &out);
    run.expect_generic("generic", &out)?;

    // complement of the curve alone: no vertical line is kept, and no relation at infinity
    let group = abelianize(&presentation_fully_horizontal(&out, &[])?);
    run.expect(
        "affine abelianization is infinite cyclic",
        Severity::Hard,
        group == [0],
        format!("invariant factors {group:?}"),
    )?;

    // the printed second group lists its two tangencies before the two nodes; in that order
    // the product is not the lifted fiber, so the list cannot multiply to the full twist
    let printed: Vec<&str> = TANGENTS_PRINTED.iter().flat_map(|r| r.iter().copied()).collect();
    run.expect_list("printed generic list", Severity::Hard, &out, &parse_list(6, &printed)?)
}

pub const TANGENTS_TABLE: &[&[&str]] = &[
    &["s3^3"],
    &["s3^(s2)", "s3^(s4)", "s1", "s5"],
    &["(s3^3)^(s2 s4)"],
    &["s1^(s2)", "s5^(s4)", "s3^(s2^2 s4)", "s3^(s2 s4^2)"],
    &["s2^(s1)", "s1^3", "s4^(s5)", "s5^3"],
    &["s2^(s1 s3)", "s1^3", "s4^(s5 s3)", "s5^3"],
];

pub const TANGENTS_PRINTED: &[&[&str]] = &[
    &["s3^3"],
    &["s1", "s5", "s3^(s2)", "s3^(s4)"],
    &["(s3^3)^(s2 s4)"],
    &["s1^(s2)", "s5^(s4)", "s3^(s2^2 s4)", "s3^(s2 s4^2)"],
    &["s2^(s1)", "s1^3", "s4^(s5)", "s5^3"],
    &["s2^(s1 s3)", "s1^3", "s4^(s5 s3)", "s5^3"],
];
