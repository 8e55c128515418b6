//! Smooth curve of degree n as the n-th Kummer cover of a generic line.

use super::{Run, Severity};
use crate::braid::BraidWord;
use crate::error::Result;
use crate::factorization::Factorization;
use crate::generify::{replace_tangency, TangencyKind, TangencyModel};
use crate::kummer::{DiagramSystem, Letters, LiftSpec};

pub(crate) fn smooth(run: &mut Run, n: usize) -> Result<()> {
    // the line meets the marked axis once; the fiber over 0 is transversal
    let base = Factorization::parse(2, true, &["s1^2", "1"])?;
    run.step("line: (s1^2, 1) marked on 2 strands");
    let spec = LiftSpec::new(n, 1, DiagramSystem::Circular)?;
    let lifted = spec.lift_forgetful(&base, Letters::Artin)?.drop_trivial_entries()?;
    run.step(format!("circular lift of degree {n}, forget the axis strand, drop trivial entries"));
    run.output("lifted", &lifted);

    let rotation = BraidWord::new(n, (1..n as i32).rev().collect())?;
    let expected = Factorization::new(n, vec![rotation; n], false)?;
    run.expect_list("lift is n rotations", Severity::Hard, &lifted, &expected)?;

    let model = TangencyModel::new(TangencyKind::Inflection(n), 1, BraidWord::identity(n))?;
    let mut out = lifted;
    for p in (0..n).rev() {
        out = replace_tangency(&out, p + 1, &model)?;
    }
    run.step(format!("resolve each order-{n} tangency into {} simple ones", n - 1));
    run.output("generic", &out);

    let package: Vec<BraidWord> = (1..n).map(|i| BraidWord::generator(n, i, 1)).collect::<Result<_>>()?;
    let expected = Factorization::new(n, package.iter().cycle().take(n * (n - 1)).cloned().collect(), false)?;
    run.expect_list("packages", Severity::Hard, &out, &expected)?;
    run.expect_generic("generic", &out)
}
