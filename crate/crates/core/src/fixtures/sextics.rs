//! Sextics obtained as cubic Kummer covers of conics.

use super::{parse_list, Run, Severity};
use crate::braid::BraidWord;
use crate::error::Result;
use crate::factorization::{Factorization, HurwitzMove};
use crate::generify::{replace_tangency, split_locally_generic, TangencyKind, TangencyModel};
use crate::kummer::{DiagramSystem, Letters, LiftSpec};

fn b(d: usize, s: &str) -> Result<BraidWord> {
    BraidWord::parse(d, s)
}

fn moves(text: &str) -> Result<Vec<HurwitzMove>> {
    HurwitzMove::parse_list(text)
}

/// Radial cubic lift of a marked factorization on 3 strands, forgetting the axis strand and
/// conjugating by `s5 s3` so that the second generator's image reads `s4 * (s3 s2)`.
fn cubic_lift(run: &mut Run, base: &Factorization) -> Result<Factorization> {
    let spec = LiftSpec::new(3, 2, DiagramSystem::Radial)?;
    let g = b(6, "s5 s3")?;
    let images = Factorization::new(
        7,
        [b(3, "s1")?, b(3, "s2^2")?]
            .iter()
            .map(|w| spec.lift_word(&crate::braid::MarkedBraidWord::new(w.clone())?, Letters::Native))
            .collect::<Result<Vec<_>>>()?,
        false,
    )?
    .forget_strand_all(7)?
    .conjugate_all(&g)?;
    run.expect_list(
        "generator images of the cubic lift",
        Severity::Hard,
        &images,
        &parse_list(6, &["s1 s3 s5", "s4 * (s3 s2)"])?,
    )?;
    let lifted = spec.lift_forgetful(base, Letters::Native)?.conjugate_all(&g)?;
    run.step("radial lift of degree 3 in native letters, forget the axis strand, conjugate by s5 s3");
    Ok(lifted)
}

pub(crate) fn zariski(run: &mut Run) -> Result<()> {
    let conic = Factorization::parse(3, true, &["s1", "s1 * s2^4", "(s1 s2^2) * s1"])?;
    run.step("conic tangent to two axes: (s1, s1 * s2^4, (s1 s2^2) * s1)");
    let conic = conic.conjugate_all(&b(3, "s1 s2^2")?)?;
    run.step("conjugate by s1 s2^2");
    run.expect_list(
        "conjugated conic",
        Severity::Hard,
        &conic,
        &Factorization::parse(3, true, &["s1^(s2^2)", "s2^4", "s1"])?,
    )?;

    let lifted = cubic_lift(run, &conic)?;
    run.output("lifted", &lifted);
    let table = parse_list(
        6,
        &[
            "(s1 s3 s5)^(s4 s3 s2)",
            "s4 * (s3 s2)^2",
            "(s1 s3 s5)^(s4 s3 s2 s1 s3 s5)",
            "((s3 s2)^2)^(s4^-1 s1 s3 s5)",
            "(s1 s3 s5)^(s4 s3 s2 s1^2 s3^2 s5^2)",
            "((s3 s2)^2)^(s4^-1 s1^2 s3^2 s5^2)",
            "s1^3 s3^3 s5^3",
        ],
    )?;
    run.expect_list("lifted table", Severity::Hard, &lifted, &table)?;

    let rot = b(6, "s1 s3 s5")?;
    for j in 1..3 {
        let shifted = lifted.slice(0..2).conjugate_all(&rot.pow(j))?;
        run.expect_list(
            &format!("block {} is block 1 conjugated by (s1 s3 s5)^{j}", j + 1),
            Severity::Hard,
            &lifted.slice(2 * j as usize..2 * j as usize + 2),
            &shifted,
        )?;
    }

    let first = lifted.slice(0..2);
    let cusp = TangencyModel::new(TangencyKind::Cusp, 2, b(6, "s4")?)?;
    let first = replace_tangency(&first, 2, &cusp)?;
    run.step("cusp replacement on entry 2 with band 2 and conjugator s4");
    run.expect_list(
        "cusp replacement",
        Severity::Hard,
        &first.slice(1..3),
        &parse_list(6, &["s2^(s3 s4^-1)", "(s3^3)^(s4^-1)"])?,
    )?;
    let parts = vec![b(6, "s1^(s2)")?, b(6, "s4")?, b(6, "s5^(s4 s3 s2)")?];
    let first = split_locally_generic(&first, 1, parts)?;
    run.step("split entry 1 into three commuting simple tangencies");

    let seq = moves("h2^-1 h3^-1 h4^-1 h2 h3")?;
    let block1 = first.apply_moves(&seq)?;
    run.step("Hurwitz moves h2^-1 h3^-1 h4^-1 h2 h3");
    let expected1 = parse_list(6, &["s1^(s2)", "s2^(s3)", "s3^3", "s4^(s5^-1 s3^-1)", "s4"])?;
    run.expect_list("block 1", Severity::Hard, &block1, &expected1)?;

    let block2 = block1.conjugate_all(&rot)?.apply_moves(&moves("h2")?)?;
    run.step("block 2: conjugate block 1 by s1 s3 s5, then h2");
    let expected2 = parse_list(6, &["s2^(s3)", "s3^3", "s2^(s3^-1 s1)", "s4", "s4^(s3 s5)"])?;
    run.expect_list("block 2", Severity::Hard, &block2, &expected2)?;

    let block3 = block2.conjugate_all(&rot)?.apply_moves(&moves("h1 h4^-1")?)?;
    run.step("block 3: conjugate block 2 by s1 s3 s5, then h1 h4^-1");
    let expected3 = parse_list(6, &["s3^3", "s2^(s3^-1 s1)", "s2^(s1^2)", "s4", "s4^(s3 s5)"])?;
    run.expect_list("block 3", Severity::Hard, &block3, &expected3)?;

    let last = parse_list(6, &["s1^3", "s3^3", "s5^3"])?;
    let assembled = block1.concat(&block2)?.concat(&block3)?.concat(&last)?;
    let out = assembled.apply_moves(&moves("h15 h14 h13")?)?;
    run.step("append (s1^3, s3^3, s5^3), then move s1^3 left with h15 h14 h13");
    run.output("generic", &out);
    let expected = parse_list(6, ZARISKI_GENERIC)?;
    run.expect_list("generic list", Severity::Hard, &out, &expected)?;
    run.expect_generic("generic", &out)
}

pub const ZARISKI_GENERIC: &[&str] = &[
    "s1^(s2)",
    "s2^(s3)",
    "s3^3",
    "s4^(s5^-1 s3^-1)",
    "s4",
    "s2^(s3)",
    "s3^3",
    "s2^(s3^-1 s1)",
    "s4",
    "s4^(s3 s5)",
    "s3^3",
    "s2^(s3^-1 s1)",
    "s1^3",
    "s1^(s2)",
    "s4",
    "s4^(s3 s5)",
    "s3^3",
    "s5^3",
];

pub(crate) fn nine_cusp(run: &mut Run) -> Result<()> {
    let conic = Factorization::parse(3, true, &["s2^4", "s1"])?;
    run.step("tritangent conic: (s2^4, s1)");
    let lifted = cubic_lift(run, &conic)?;
    let table = parse_list(
        6,
        &[
            "((s3 s2)^2)^(s4^-1)",
            "((s3 s2)^2)^(s4^-1 s1 s3 s5)",
            "((s3 s2)^2)^(s4^-1 s1^2 s3^2 s5^2)",
            "s1^3 s3^3 s5^3",
        ],
    )?;
    run.expect_list("lifted table", Severity::Hard, &lifted, &table)?;

    let spec = LiftSpec::new(3, 2, DiagramSystem::Radial)?;
    let at_infinity = spec
        .infinity_braid(&conic, Letters::Native)?
        .forget_strand(7)?
        .conj(&b(6, "s5 s3")?)?;
    let turn = b(6, "s4 s3 s2 s4^-1")?;
    run.expect_braid("braid at infinity", &at_infinity, &b(6, "s1^3 s3^3 s5^3")?.conj(&turn)?)?;
    let mut f = lifted;
    f.push(at_infinity.free_reduced(), Some("infinity".into()))?;
    run.step("append the lifted braid at infinity");
    run.expect_generic("generic at infinity", &f)?;

    let cubes = ["s1^3", "s3^3", "s5^3"]
        .iter()
        .map(|s| b(6, s))
        .collect::<Result<Vec<_>>>()?;
    let turned = cubes.iter().map(|c| c.conj(&turn)).collect::<Result<Vec<_>>>()?;
    f = split_locally_generic(&f, 5, turned)?;
    f = split_locally_generic(&f, 4, cubes)?;
    run.step("split both triple-cusp fibers into commuting cusps");
    let rot = b(6, "s1 s3 s5")?;
    for j in (0..3).rev() {
        let eta = rot.pow(-(j as i64)).compose(&b(6, "s4")?)?;
        f = replace_tangency(&f, j + 1, &TangencyModel::new(TangencyKind::Cusp, 2, eta)?)?;
    }
    run.step("cusp replacement on the three cusp fibers");
    run.output("locally generic", &f);

    let out = f.apply_moves(&moves(NINE_CUSP_MOVES)?)?;
    run.step(format!("Hurwitz moves {NINE_CUSP_MOVES}"));
    run.output("generic", &out);
    run.expect_list("generic list", Severity::Hard, &out, &parse_list(6, NINE_CUSP_GENERIC)?)?;
    run.expect_generic("generic", &out)
}

/// Found once by a bounded search over left-moving Hurwitz sequences and kept as data.
const NINE_CUSP_MOVES: &str = "h1^-1 h7 h6 h5 h4 h8 h7 h6";

pub const NINE_CUSP_GENERIC: &[&str] = &[
    "s2^3",
    "s2^(s3 s4^-1)",
    "s2^(s3 s4^-1 s1 s3 s5)",
    "s3^3",
    "(s3^3)^(s4 s5)",
    "s5^3",
    "s2^(s3^-1 s4 s1^2 s5^-1)",
    "(s5^3)^(s4)",
    "s1^3",
    "(s1^3)^(s2)",
    "s4^3",
    "(s5^3)^(s4 s3 s2)",
];
