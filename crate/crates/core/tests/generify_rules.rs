mod common;

use braidmon::generify::{
    arrangement_generify, replace_tangency, split_locally_generic, ArrangementEntry, ArrangementInput, TangencyKind,
    TangencyModel,
};
use braidmon::{BraidWord, Error, Factorization};
use common::{full_twist, naive_equal, naive_generic, reversed_product};

fn b(d: usize, s: &str) -> BraidWord {
    BraidWord::parse(d, s).unwrap()
}

#[test]
fn replacements_keep_the_product() {
    let f = Factorization::parse(5, false, &["s2 s1", "(s3 s2)^2", "s4 s3 s4", "s1^2"]).unwrap();
    let g = b(5, "s1 s4^-1");
    let cusp = TangencyModel::new(TangencyKind::Cusp, 2, g.clone()).unwrap();
    let f2 = Factorization::new(5, vec![b(5, "(s3 s2)^2").star(&g).unwrap()], false).unwrap();
    let out = replace_tangency(&f2, 1, &cusp).unwrap();
    assert_eq!(out.len(), 2);
    assert!(naive_equal(&reversed_product(5, out.entries()), &f2.entries()[0]));

    let node = TangencyModel::new(TangencyKind::Node, 3, BraidWord::identity(5)).unwrap();
    let out = replace_tangency(&f, 3, &node).unwrap();
    assert!(naive_equal(&reversed_product(5, out.entries()), &reversed_product(5, f.entries())));

    let inflection = TangencyModel::new(TangencyKind::Inflection(3), 1, BraidWord::identity(5)).unwrap();
    let out = replace_tangency(&f, 1, &inflection).unwrap();
    assert_eq!(out.len(), f.len() + 1);
    assert!(naive_equal(&reversed_product(5, out.entries()), &reversed_product(5, f.entries())));
}

#[test]
fn wrong_model_is_a_mismatch() {
    let f = Factorization::parse(4, false, &["s1 s2"]).unwrap();
    let node = TangencyModel::new(TangencyKind::Node, 1, BraidWord::identity(4)).unwrap();
    assert!(matches!(replace_tangency(&f, 1, &node), Err(Error::Mismatch(_))));
    assert!(matches!(replace_tangency(&f, 2, &node), Err(Error::Invalid(_))));
}

#[test]
fn split_needs_the_right_product() {
    let f = Factorization::parse(5, false, &["s1^3 s3^3"]).unwrap();
    let ok = split_locally_generic(&f, 1, vec![b(5, "s1^3"), b(5, "s3^3")]).unwrap();
    assert_eq!(ok.len(), 2);
    assert!(split_locally_generic(&f, 1, vec![b(5, "s1^3"), b(5, "s4^3")]).is_err());
}

fn entry(n: usize, tau: &str, beta: &str, partition: &[usize]) -> ArrangementEntry {
    ArrangementEntry { tau: b(n, tau), beta: b(n, beta), partition: partition.to_vec() }
}

#[test]
fn pencil_with_a_vertical_line() {
    // three concurrent lines, and a vertical line through their common point
    let input = ArrangementInput { n: 3, entries: vec![entry(3, "(s2 s1)^3", "1", &[1, 4])], vertical: vec![1] };
    let out = arrangement_generify(&input).unwrap();
    assert_eq!(out.strands(), 4);
    assert!(naive_generic(&out));
    assert!(naive_equal(&reversed_product(4, out.entries()), &full_twist(4)));
}

#[test]
fn pencil_with_two_vertical_lines_adds_their_twist() {
    let input = ArrangementInput {
        n: 2,
        entries: vec![entry(2, "s1^2", "1", &[1, 3]), entry(2, "1", "1", &[1, 2, 3])],
        vertical: vec![1, 2],
    };
    let out = arrangement_generify(&input).unwrap();
    assert_eq!(out.strands(), 4);
    assert!(naive_generic(&out));
}
