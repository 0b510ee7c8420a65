use super::*;
use crate::builtin::{rp2, simplex_boundary, t_s_sphere, torus};

fn half_cube(a: &Cochain<Z2>) -> Cochain<Qz> {
    a.cup(a).cup(a).half()
}

#[test]
fn sphere2_structure() {
    let e = simplex_boundary(3).unwrap();
    let r = structure_report(&e.complex).unwrap();
    assert_eq!((r.h1, r.sh2, r.h2), (0, 1, 1));
    assert!(r.h3.is_trivial());
    assert_eq!(r.order(), Some(2.into()));
}

#[test]
fn point_is_trivial() {
    let e = crate::builtin::point();
    let r = structure_report(&e.complex).unwrap();
    assert_eq!((r.h1, r.sh2), (0, 0));
    assert_eq!(r.order(), Some(1.into()));
}

#[test]
fn tss2_structure_and_order() {
    let e = t_s_sphere();
    let ctx = GroupContext::new(&e.complex);
    let r = ctx.structure_report().unwrap();
    assert_eq!((r.h1, r.sh2), (1, 1));
    assert_eq!((r.h3.circle_rank, r.h3.torsion.len()), (1, 0));
    let g = Triple::from_a(e.z2("c"));
    assert_eq!(ctx.order(&g, 64).unwrap(), Some(8));
}

#[test]
fn tss2_evaluation_is_a_quarter() {
    let e = t_s_sphere();
    let ctx = GroupContext::new(&e.complex);
    let (c, p, t) = (e.z2("c"), e.z2("p"), e.z2("t"));
    let m = e.fundamental.as_ref().unwrap();
    let cl = c.lift();
    let w = half_cube(&c) + cl.cup(&cl).cup(&cl).nth(4);
    let g = Triple::new(w.clone(), p.clone(), Cochain::zero(&e.complex, 1)).unwrap();
    let zero_t = Cochain::zero(&e.complex, 1);
    assert_eq!(evaluate_g1(&g, m, &zero_t, Qz::ZERO, None).unwrap(), Qz::new(1, 4));
    // the extension cocycle z(c, c) = (w, c², 0) is the same element of G
    let z = extension_cocycle(&c, &c).unwrap();
    assert_eq!(z.w, w);
    assert!(ctx.g_equal(&z, &g).unwrap());
    assert_eq!(evaluate_g1(&z, m, &t, Qz::ZERO, None).unwrap(), Qz::new(1, 4));
    // (0, p, 0) ≡ (0, c², 0)
    let x = &e.complex;
    let lhs = Triple { w: Cochain::zero(x, 3), p: p.clone(), a: Cochain::zero(x, 1) };
    let rhs = Triple { w: Cochain::zero(x, 3), p: c.sq(), a: Cochain::zero(x, 1) };
    assert!(ctx.g_equal(&lhs, &rhs).unwrap());
}

#[test]
fn order_criteria() {
    let t = torus();
    let a = t.z2("a");
    assert!(lifts_to_order2(&a).unwrap());
    assert_eq!(lifts_to_order4(&a), Err(Error::SquareVanishes));
    let r = rp2();
    let a = r.z2("a");
    assert!(!lifts_to_order2(&a).unwrap());
    assert!(lifts_to_order4(&a).unwrap());
    assert_eq!(order(&Triple::from_a(a), 64).unwrap(), Some(4));
}

#[test]
fn fourth_and_eighth_powers() {
    let e = t_s_sphere();
    let ctx = GroupContext::new(&e.complex);
    let a = e.z2("c");
    let g = Triple::from_a(a.clone());
    assert!(ctx.cbar_equal(&power(&g, 4), &Triple::from_w(half_cube(&a))));
    assert!(ctx.is_identity(&power(&g, 8)).unwrap());
}

#[test]
fn is_identity_rejects_non_cocycles() {
    let x =
        Arc::new(OrderedComplex::from_ids("D4", &["0", "1", "2", "3", "4"], &[&["0", "1", "2", "3", "4"]]).unwrap());
    let mut w = Cochain::<Qz>::zero(&x, 3);
    w.set(0, Qz::new(1, 3));
    let bad = Triple::from_w(w);
    assert_eq!(is_identity(&bad), Err(Error::NotDCocycle));
    assert_eq!(order(&bad, 8), Err(Error::NotDCocycle));
    assert!(is_identity(&Triple::identity(&x)).unwrap());
}

#[test]
fn nonzero_h3_class_is_not_identity() {
    let s = simplex_boundary(4).unwrap();
    let x = &s.complex;
    let mut w = Cochain::<Qz>::zero(x, 3);
    w.set(0, Qz::new(1, 3));
    let g = Triple::from_w(w.clone());
    assert!(!is_identity(&g).unwrap());
    assert_eq!(order(&g, 64).unwrap(), Some(3));
    let fc = filtration_class(&g).unwrap();
    assert_eq!(fc.level, FiltrationLevel::G2);
    let mut t = Cochain::<Qz>::zero(x, 2);
    t.set(3, Qz::new(2, 7));
    assert!(is_identity(&Triple::from_w(t.d())).unwrap());
}

#[test]
fn d_prime_images_are_identity() {
    let e = torus();
    let x = &e.complex;
    let t = Cochain::<Z2>::from_fn(x, 1, |s| Z2::new((s[0] + 2 * s[1]) as i64 % 3 % 2));
    let v = Cochain::<Z2>::from_fn(x, 0, |s| Z2::new(s[0] as i64 % 2));
    let g = big_d_prime(&t, &v);
    assert!(big_d(&g).is_zero());
    assert!(is_identity(&g).unwrap());
}

#[test]
fn triple_file_round_trip() {
    let e = rp2();
    let g = Triple::from_a(e.z2("a"));
    let text = write_triple("g", &g, true);
    let (name, h) = parse_triple(&text, None).unwrap();
    assert_eq!(name, "g");
    assert_eq!(h.p, g.p);
    assert_eq!(h.a.values(), g.a.values());
    let bare = write_triple("g", &g, false);
    let (_, h) = parse_triple(&bare, Some(&e.complex)).unwrap();
    assert_eq!(h, g);
    assert!(parse_triple(&bare, None).is_err());
}
