use pantsbound::hyptrig::pentagon_opposite;
use pantsbound::surfaces::{
    build_square_grid, gluing_bound, scheme_end_modification, scheme_mixed, scheme_qch, scheme_reflection, EndKind,
    GluingBound, Label, Window,
};

fn l(i: i64, j: i64) -> Label {
    Label::new(i, j)
}

#[test]
fn qch_pairs_neighbours_in_each_row() {
    let s = scheme_qch();
    assert_eq!(s.partner(l(0, 0)), Some(l(1, 0)));
    assert_eq!(s.partner(l(3, 5)), Some(l(2, 5)));
    assert_eq!(s.partner(l(-1, 2)), Some(l(-2, 2)));
    assert_eq!(s.max_offset_in(&Window::centered(6)), 1);
    assert_eq!(gluing_bound(&s), GluingBound::Bounded(1));
}

#[test]
fn reflection_offsets_grow_with_the_window() {
    let s = scheme_reflection();
    assert_eq!(s.partner(l(0, 4)), Some(l(-1, 4)));
    assert_eq!(s.partner(l(4, -2)), Some(l(-5, -2)));
    // squares are indexed by their lower-left corner, so the widest pair
    // in [-5, 5] is 4 <-> -5
    assert_eq!(s.max_offset_in(&Window::centered(5)), 9);
    assert!(s.max_offset_in(&Window::centered(50)) > s.max_offset_in(&Window::centered(5)));
    assert_eq!(gluing_bound(&s), GluingBound::Unbounded);
}

#[test]
fn mixed_scheme_switches_rule_at_the_axis() {
    let s = scheme_mixed();
    assert_eq!(s.partner(l(3, -1)), Some(l(-3, -1)));
    assert_eq!(s.partner(l(0, -1)), None);
    assert_eq!(s.partner(l(4, 0)), Some(l(5, 0)));
    assert!(s.is_involution_on(&Window::centered(9)));
    assert_eq!(gluing_bound(&s), GluingBound::Unbounded);
}

#[test]
fn end_modifications_act_on_the_upper_half() {
    let b = 1.0_f64;
    let nonplanar = scheme_end_modification(EndKind::Nonplanar);
    assert_eq!(nonplanar.partner(l(2, 1)), Some(l(3, 1)));
    assert_eq!(nonplanar.partner(l(2, 0)), None);
    let accumulated = scheme_end_modification(EndKind::BoundaryAccumulated);
    assert!(accumulated.pairs_in(&Window::centered(4)).is_empty());
    let cusps = scheme_end_modification(EndKind::CuspPants);
    let hole = 4.0 * pentagon_opposite(b, b).unwrap().side().unwrap();
    let a = cusps.attachment(l(0, 1), b).unwrap();
    assert!((a.boundary_length - hole).abs() < 1e-12);
    assert!(cusps.attachment(l(0, -1), b).is_none());
}

#[test]
fn block_width_example() {
    let b = 2.0_f64.sqrt().asinh();
    assert_eq!(build_square_grid(b, 3).unwrap().width, 6.0 * b);
    assert!(build_square_grid(0.5, 3).is_err());
}
