//! Line arrangements obtained as Kummer covers, made generic by deforming the projection point.

use super::{parse_list, Run, Severity};
use crate::braid::{BraidWord, MarkedBraidWord};
use crate::error::Result;
use crate::factorization::{Factorization, HurwitzMove};
use crate::generify::{arrangement_generify, ArrangementEntry, ArrangementInput};
use crate::kummer::{self, DiagramSystem, Letters, LiftSpec};

fn b(d: usize, s: &str) -> Result<BraidWord> {
    BraidWord::parse(d, s)
}

fn entry(tau: &BraidWord, beta: BraidWord, partition: Vec<usize>) -> ArrangementEntry {
    ArrangementEntry { tau: tau.clone(), beta, partition }
}

pub(crate) fn ceva9(run: &mut Run) -> Result<()> {
    let base = Factorization::parse(3, true, &["s1^2", "s2^2"])?;
    run.step("three concurrent lines with the axes: (s1^2, s2^2)");
    let spec = LiftSpec::new(3, 2, DiagramSystem::Radial)?;
    let g = b(6, "s5 s3")?;
    let lifted = spec.lift_forgetful(&base, Letters::Native)?.conjugate_all(&g)?;
    run.step("radial lift of degree 3 in native letters, forget the axis strand, conjugate by s5 s3");
    let printed = parse_list(
        6,
        &[
            "s1^2 s3^2 s5^2",
            "(s1^2 s3^2 s5^2)^(s4 s3 s2)",
            "(s1^2 s3^2 s5^2)^(s4^2 s3 s2^2)",
            "s4 * (s3 s2)^3",
        ],
    )?;
    run.expect_list("lifted table as printed", Severity::Soft, &lifted, &printed)?;
    let rotate = b(6, "s4 * (s3 s2)")?;
    let own = parse_list(6, &["s1^2 s3^2 s5^2"])?;
    let a = &own.entries()[0];
    let corrected = Factorization::new(
        6,
        vec![a.clone(), a.conj(&rotate)?, a.conj(&rotate.pow(2))?, rotate.pow(3)],
        false,
    )?;
    run.expect_list("lifted table", Severity::Hard, &lifted, &corrected)?;

    let at_infinity = spec.infinity_braid(&base, Letters::Native)?.forget_strand(7)?.conj(&g)?;
    run.expect_braid("braid at infinity", &at_infinity, &b(6, "((s3 s2)^3)^(s4^-1 s1 s3 s5)")?)?;
    let mut f = lifted;
    f.push(at_infinity.free_reduced(), Some("infinity".into()))?;
    run.expect_generic("generic at infinity", &f)?;

    let e = f.entries();
    let triple = vec![1, 3, 5, 7];
    let centre = vec![1, 2, 5, 6, 7];
    let input = ArrangementInput {
        n: 6,
        entries: vec![
            entry(&e[0], BraidWord::identity(6), triple.clone()),
            entry(&e[1], b(6, "s4 s3 s2")?.invert(), triple.clone()),
            entry(&e[2], rotate.pow(-2), triple),
            entry(&e[3], b(6, "s4")?, centre.clone()),
            entry(&e[4], b(6, "s4^-1 s1 s3 s5")?.invert(), centre),
        ],
        vertical: vec![1, 2, 3],
    };
    let out = arrangement_generify(&input)?;
    run.step("deform the projection point: three vertical lines at entries 1, 2, 3");
    run.output("generic", &out);
    run.expect_generic("generic", &out)?;
    let printed = parse_list(9, CEVA_PRINTED)?;
    run.expect_list("printed list", Severity::Soft, &out, &printed)?;
    run.expect_list(
        "printed list against output without the vertical-lines twist",
        Severity::Soft,
        &out.slice(0..out.len() - 1),
        &printed,
    )?;

    let maclane = out.forget_strand_all(9)?.drop_trivial_entries()?;
    run.step("MacLane: forget strand 9, drop trivial entries");
    run.output("maclane", &maclane);
    run.expect_generic("maclane", &maclane)?;
    run.expect_list("printed MacLane list", Severity::Soft, &maclane, &parse_list(8, MACLANE_PRINTED)?)
}

pub const CEVA_PRINTED: &[&str] = &[
    "D(5,7)^2",
    "(D(3,5)^2)^(D(5,7)^-1)",
    "(D(1,3)^2)^(D(3,5)^-1 D(5,7)^-1)",
    "(D(5,7)^2)^(s4 s3 s2 s7)",
    "(D(3,5)^2)^(D(5,7)^-1 s4 s3 s2 s7)",
    "(D(1,3)^2)^(D(3,5)^-1 D(5,7)^-1 s4 s3 s2 s7)",
    "(D(5,7)^2)^(s4^2 s3 s2^2 s7 s8)",
    "(D(3,5)^2)^(D(5,7)^-1 s4^2 s3 s2^2 s7 s8)",
    "(D(1,3)^2)^(D(3,5)^-1 D(5,7)^-1 s4^2 s3 s2^2 s7 s8)",
    "s4 * (s3 s2)^3",
    "((s3 s2)^3)^(s4^-1 s1 s3 s5)",
];

pub const MACLANE_PRINTED: &[&str] = &[
    "D(5,7)^2",
    "(D(3,5)^2)^(D(5,7)^-1)",
    "(D(1,3)^2)^(D(3,5)^-1 D(5,7)^-1)",
    "(D(5,7)^2)^(s4 s3 s2 s7)",
    "(D(3,5)^2)^(D(5,7)^-1 s4 s3 s2 s7)",
    "(D(1,3)^2)^(D(3,5)^-1 D(5,7)^-1 s4 s3 s2 s7)",
    "(s5^2)^(s4^2 s3 s2^2)",
    "(s3^2)^(s4^2 s3 s2^2)",
    "(s1^2)^(s4^2 s3 s2^2)",
    "s4 * (s3 s2)^3",
    "((s3 s2)^3)^(s4^-1 s1 s3 s5)",
];

pub(crate) fn hesse(run: &mut Run) -> Result<()> {
    let cubic = Factorization::parse(4, true, &["s2^2", "s2 * s3^6", "(s1 s2)^(s3^2)"])?;
    run.step("nodal cubic: (s2^2, s2 * s3^6, (s1 s2)^(s3^2))");
    run.expect_braid(
        "nodal cubic braid at infinity",
        &kummer::infinity_braid(&cubic),
        &b(4, "(s1 s2)^(s3^2 s2)")?,
    )?;
    let cubic = cubic.conjugate_all(&b(4, "s3^-2 s2^-1")?)?;
    run.step("conjugate by s3^-2 s2^-1");
    run.expect_list(
        "conjugated cubic",
        Severity::Hard,
        &cubic,
        &Factorization::parse(4, true, &["(s2^2)^(s3^2)", "s3^6", "s2 s1"])?,
    )?;
    run.expect_braid(
        "conjugated braid at infinity",
        &kummer::infinity_braid(&cubic),
        &b(4, "(s2 s3^2 s2^-1 s3^-2) * (s1 s2)")?,
    )?;

    let spec = LiftSpec::new(3, 3, DiagramSystem::Radial)?;
    let images = ["s1", "s2", "s3^2"]
        .iter()
        .map(|s| spec.lift_word(&MarkedBraidWord::new(b(4, s)?)?, Letters::Native))
        .collect::<Result<Vec<_>>>()?;
    run.expect_list(
        "generator images",
        Severity::Hard,
        &Factorization::new(10, images, false)?,
        &parse_list(10, &["s1 s4 s7", "s2 s5 s8", "(s9^2 s8 s7)^(s6 s5 s4 s3 s7 s6)"])?,
    )?;
    let lifted = spec.lift_factorization(&cubic, Letters::Native)?;
    let lifted = lifted.apply_moves(&HurwitzMove::parse_list("h6 h5")?)?;
    run.step("radial lift of degree 3 in native letters keeping the axis strand, then h6 h5");
    run.output("lifted", &lifted);
    let twist = "(s9^2 s8 s7)^(s6 s5 s4 s3 s7 s6)";
    let c = "s6 s5 s4 s3 s7 s6";
    let slide = "s2 s1 s5 s4 s8 s7";
    let nodes = "s2^2 s5^2 s8^2";
    let axis = "D(1,3)^2 D(4,6)^2 D(7,9)^2";
    let printed = [
        format!("({nodes})^({twist})"),
        format!("(D(7,10)^2)^({c})"),
        format!("({nodes})^({twist} {slide})"),
        format!("(D(7,10)^2)^({c} {slide})"),
        axis.to_string(),
        format!("({slide} ({twist})^-1) * ({nodes})"),
        format!("(s2 s5 s8 ({c})^-1) * D(7,10)^2"),
    ];
    let printed: Vec<&str> = printed.iter().map(String::as_str).collect();
    run.expect_list("lifted list", Severity::Hard, &lifted, &parse_list(10, &printed)?)?;

    let eta = b(10, &format!("s2 s5 s8 ({twist}) s8^-1 s5^-1 s2^-1 ({twist})^-1"))?;
    let at_infinity = spec.infinity_braid(&cubic, Letters::Native)?;
    let axis_braid = b(10, axis)?;
    run.expect_braid("braid at infinity", &at_infinity, &axis_braid.star(&eta)?)?;
    let mut f = lifted;
    f.push(at_infinity.free_reduced(), Some("infinity".into()))?;
    run.expect_generic("generic at infinity", &f)?;

    let e = f.entries();
    let tw = b(10, twist)?;
    let cw = b(10, c)?;
    let sw = b(10, slide)?;
    let node_partition = vec![1, 2, 4, 5, 7, 8, 10, 11];
    let quad_partition = vec![1, 2, 3, 4, 5, 6, 7, 11];
    let axis_partition = vec![1, 4, 7, 10, 11];
    let input = ArrangementInput {
        n: 10,
        entries: vec![
            entry(&e[0], tw.invert(), node_partition.clone()),
            entry(&e[1], cw.invert(), quad_partition.clone()),
            entry(&e[2], tw.compose(&sw)?.invert(), node_partition.clone()),
            entry(&e[3], cw.compose(&sw)?.invert(), quad_partition.clone()),
            entry(&e[4], BraidWord::identity(10), axis_partition.clone()),
            entry(&e[5], sw.compose(&tw.invert())?, node_partition),
            entry(&e[6], b(10, "s2 s5 s8")?.compose(&cw.invert())?, quad_partition),
            entry(&e[7], eta, axis_partition),
        ],
        vertical: vec![5, 8],
    };
    let out = arrangement_generify(&input)?;
    run.step("deform the projection point: vertical lines at entries 5 and 8");
    let out = out.apply_moves(&HurwitzMove::parse_list(HESSE_REORDER)?)?;
    run.step(format!("reorder commuting node triples with {HESSE_REORDER}"));
    run.output("generic", &out);
    run.expect_list("generic list", Severity::Hard, &out, &hesse_printed()?)?;
    run.expect_generic("generic", &out)
}

/// Reverses the three commuting node entries of each non-vertical fiber.
const HESSE_REORDER: &str = "h1 h2 h1 h5 h6 h5 h13 h14 h13";

fn hesse_printed() -> Result<Factorization> {
    let twist = "(s9^2 s8 s7)^(s6 s5 s4 s3 s7 s6)";
    let c = "s6 s5 s4 s3 s7 s6";
    let slide = "s2 s1 s5 s4 s8 s7";
    let eta = format!("s2 s5 s8 ({twist}) s8^-1 s5^-1 s2^-1 ({twist})^-1");
    let mut list = Vec::new();
    for s in ["s2^2", "s5^2", "s8^2"] {
        list.push(format!("({s})^({twist})"));
    }
    list.push(format!("(D(7,10)^2)^({c})"));
    for s in ["s2^2", "s5^2", "s8^2"] {
        list.push(format!("({s})^({twist} {slide})"));
    }
    list.push(format!("(D(7,10)^2)^({c} {slide})"));
    list.push("s10^2".into());
    list.push("s10 * D(7,10)^2".into());
    list.push("(s10 D(7,10)) * D(4,7)^2".into());
    list.push("(s10 D(7,10) D(4,7)) * D(1,4)^2".into());
    for s in ["s2^2", "s5^2", "s8^2"] {
        list.push(format!("({slide} ({twist})^-1) * {s}"));
    }
    list.push(format!("(s2 s5 s8 ({c})^-1) * D(7,10)^2"));
    list.push(format!("(s11^-1 {eta}) * s10^2"));
    list.push(format!("(s11^-1 {eta} s10) * D(7,10)^2"));
    list.push(format!("(s11^-1 {eta} s10 D(7,10)) * D(4,7)^2"));
    list.push(format!("(s11^-1 {eta} s10 D(7,10) D(4,7)) * D(1,4)^2"));
    list.push("s11^2".into());
    let refs: Vec<&str> = list.iter().map(String::as_str).collect();
    parse_list(12, &refs)
}
