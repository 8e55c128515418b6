mod common;

use braidmon::fixtures::run_pipeline;
use braidmon::par::Exec;
use braidmon::zvk::{
    abelianize, count_homs_to_symmetric, presentation_affine, presentation_fully_horizontal, presentation_generic,
    presentation_projective, tietze_simplify, FiberData, GroupPresentation,
};
use braidmon::{BraidWord, Factorization, FreeWord};

fn pres(gens: usize, rels: &[&[i32]]) -> GroupPresentation {
    GroupPresentation::new(
        (1..=gens).map(|i| format!("x{i}")).collect(),
        rels.iter().map(|r| FreeWord::from_letters(r.iter().copied())).collect(),
    )
    .unwrap()
}

#[test]
fn homs_separate_the_free_product_from_the_cyclic_group() {
    let free_product = pres(2, &[&[1, 1], &[2, 2, 2]]);
    let cyclic = pres(2, &[&[1, 1], &[2, 2, 2], &[1, 2, -1, -2]]);
    assert_eq!(abelianize(&free_product), abelianize(&cyclic));
    assert!(count_homs_to_symmetric(&free_product, 3, Exec::Parallel).unwrap().surjective > 0);
    assert_eq!(count_homs_to_symmetric(&cyclic, 3, Exec::Parallel).unwrap().surjective, 0);
    let seq = count_homs_to_symmetric(&free_product, 3, Exec::Sequential).unwrap();
    assert_eq!(seq, count_homs_to_symmetric(&free_product, 3, Exec::Parallel).unwrap());
}

#[test]
fn sextic_groups() {
    let zariski = run_pipeline("zariski-sextic").unwrap();
    let nine = run_pipeline("nine-cusp").unwrap();
    for r in [&zariski, &nine] {
        let f = r.output("generic").unwrap();
        let p = presentation_projective(f).unwrap();
        assert_eq!(abelianize(&p), [6], "{}", r.name);
        assert_eq!(abelianize(&tietze_simplify(&p, 50)), [6]);
        assert_eq!(abelianize(&presentation_fully_horizontal(f, &[]).unwrap()), [0]);
    }
}

#[test]
fn affine_presentation_adds_one_loop_per_fiber() {
    let f = Factorization::parse(3, false, &["s1", "s2", "s1", "s2", "s1", "s2"]).unwrap();
    let p = presentation_affine(&f).unwrap();
    assert_eq!(p.generators.len(), 3 + 6);
    // curve plus six vertical lines: one free factor for the curve and one per line
    assert_eq!(abelianize(&p), vec![0; 7]);
}

#[test]
fn generic_presentation_of_the_smooth_cubic() {
    let f = Factorization::parse(3, false, &["s1", "s2", "s1", "s2", "s1", "s2"]).unwrap();
    let data: Vec<FiberData> = f
        .entries()
        .iter()
        .map(|e| FiberData {
            conjugator: BraidWord::identity(3),
            local: e.clone(),
            indices: vec![e.letters()[0] as usize],
        })
        .collect();
    let p = presentation_generic(&f, &data).unwrap();
    assert_eq!(abelianize(&p), [3]);
    assert_eq!(tietze_simplify(&p, 10).generators.len(), 1);
}

#[test]
fn presentations_are_deterministic() {
    let r = run_pipeline("smooth-4").unwrap();
    let f = r.output("generic").unwrap();
    assert_eq!(presentation_projective(f).unwrap(), presentation_projective(f).unwrap());
    let p = presentation_projective(f).unwrap();
    assert_eq!(tietze_simplify(&p, 20), tietze_simplify(&p, 20));
}
