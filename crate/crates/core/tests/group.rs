use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gx_core::builtin::{rp2, simplex_boundary, t_s_sphere};
use gx_core::cochain::{Cochain, Z2};
use gx_core::group::{product, spin_quadratic_basis, validate_spin_quadratic, GroupContext, Triple};
use gx_core::homology::z2_cohomology_basis;
use gx_core::laws::random::random_complex;
use gx_core::linalg::{BitMatrix, BitVec, Gf2Solver, Qz, QzImage};
use gx_core::simplicial::{OrderedComplex, SignedChain};
use gx_core::Error;

fn combos(basis: &[Cochain<Z2>], x: &Arc<OrderedComplex>, k: usize) -> Vec<Cochain<Z2>> {
    (0u32..1 << basis.len())
        .map(|m| {
            basis.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).fold(Cochain::zero(x, k), |acc, (_, z)| acc + z)
        })
        .collect()
}

fn bits(c: &Cochain<Z2>) -> BitVec {
    BitVec::from_bools(&c.values().iter().map(|v| v.value() == 1).collect::<Vec<_>>())
}

/// Solves dt = b over ℤ/2.
fn solve_d(x: &Arc<OrderedComplex>, k: usize, b: &Cochain<Z2>) -> Option<Cochain<Z2>> {
    let sol = Gf2Solver::new(&x.coboundary_matrix_gf2(k)).solve(&bits(b))?;
    let mut t = Cochain::zero(x, k);
    for i in sol.ones() {
        t.set(i, Z2::ONE);
    }
    Some(t)
}

#[test]
fn sh2_matches_brute_force_on_random_4_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let mut checked = 0;
    for i in 0..40 {
        let x = random_complex(&mut rng, &format!("r{i}"), 6, 4);
        let h2 = z2_cohomology_basis(&x, 2);
        if h2.len() > 10 {
            continue;
        }
        let img = QzImage::new(&x.coboundary_matrix_any(3));
        let exact = |p: &Cochain<Z2>| img.contains(p.cup(p).half().values());
        let ctx = GroupContext::new(&x);
        let sh2 = ctx.sh2_basis();
        assert!(sh2.iter().all(exact), "{i}: SH^2 basis element with non-exact square");
        let count = combos(&h2, &x, 2).iter().filter(|p| exact(p)).count();
        assert_eq!(count, 1 << sh2.len(), "{i}: |SH^2| disagrees with brute force");
        // the basis is independent in cohomology: its span has the full size
        let mut cols: Vec<BitVec> = sh2.iter().map(bits).collect();
        cols.extend((0..x.count(1)).map(|j| {
            let mut e = Cochain::<Z2>::zero(&x, 1);
            e.set(j, Z2::ONE);
            bits(&e.d())
        }));
        let with = Gf2Solver::new(&BitMatrix::from_columns(x.count(2), &cols)).rank();
        let without = Gf2Solver::new(&BitMatrix::from_columns(x.count(2), &cols[sh2.len()..])).rank();
        assert_eq!(with - without, sh2.len());
        checked += 1;
    }
    assert!(checked >= 20, "only {checked} complexes checked");
}

/// ℝP² with 1–3 cones glued on: each is a face of one of its triangles
/// joined with one or both of two new vertices, so up to dimension 4.
fn glued_rp2(rng: &mut ChaCha8Rng, name: &str) -> Arc<OrderedComplex> {
    let base = rp2().complex;
    let mut gens: Vec<Vec<u32>> = base.maximal_simplices();
    for _ in 0..rng.gen_range(1..=3) {
        let t = &gens[rng.gen_range(0..10)];
        let mut s: Vec<u32> = t.iter().copied().filter(|_| rng.gen_bool(0.7)).collect();
        match rng.gen_range(0..3) {
            0 => s.push(6),
            1 => s.push(7),
            _ => s.extend([6, 7]),
        }
        gens.push(s);
    }
    let mut ids: Vec<String> = base.vertices().to_vec();
    ids.extend(["7".to_string(), "8".to_string()]);
    Arc::new(OrderedComplex::new(name, ids, gens).unwrap())
}

#[test]
fn order4_criterion_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut nontrivial = 0;
    let mut four_dim = 0;
    for i in 0..60 {
        let x = if i % 2 == 0 {
            random_complex(&mut rng, &format!("r{i}"), 6, 4)
        } else {
            glued_rp2(&mut rng, &format!("g{i}"))
        };
        let ctx = GroupContext::new(&x);
        if !ctx.structure_report().unwrap().h3.is_trivial() || ctx.sh2_basis().len() > 6 {
            continue;
        }
        // with H³(ℚ/ℤ) = 0, the lifts of [a] are (0,0,a) times lifts of SH²
        let lifts: Vec<Triple> = combos(ctx.sh2_basis(), &x, 2).iter().map(|p| ctx.lift_to_g1(p).unwrap()).collect();
        for a in combos(ctx.h1_basis(), &x, 1).into_iter().skip(1) {
            let orders: Vec<Option<u32>> =
                lifts.iter().map(|l| ctx.order(&product(&Triple::from_a(a.clone()), l).unwrap(), 8).unwrap()).collect();
            let o2 = ctx.lifts_to_order2(&a).unwrap();
            assert_eq!(o2, orders.contains(&Some(2)), "{i}: order-2 criterion");
            match ctx.lifts_to_order4(&a) {
                Ok(o4) => {
                    assert!(!o2);
                    assert_eq!(o4, orders.contains(&Some(4)), "{i}: order-4 criterion, orders {orders:?}");
                    assert!(orders.iter().all(|o| matches!(o, Some(4) | Some(8))));
                    nontrivial += 1;
                    four_dim += (x.top_dim() == 4) as usize;
                }
                Err(Error::SquareVanishes) => assert!(o2),
                Err(e) => panic!("{i}: {e}"),
            }
        }
    }
    assert!(nontrivial >= 10 && four_dim > 0, "{nontrivial} classes with [a]^2 != 0, {four_dim} on 4-complexes");
}

fn half_integral(c: &Cochain<Z2>, m: &SignedChain) -> Qz {
    c.half().integrate(m).unwrap()
}

/// The values of a valid Q on the computed basis, with Q(h) = `qh` on a
/// chosen representative h of H²(ℤ/2) (if any).
fn valid_q(x: &Arc<OrderedComplex>, m: &SignedChain, qh: Option<Qz>) -> Vec<Qz> {
    let h = z2_cohomology_basis(x, 2);
    assert!(h.len() <= 1);
    let b = |p: &Cochain<Z2>, q: &Cochain<Z2>| half_integral(&p.cup1(q), m);
    spin_quadratic_basis(x)
        .iter()
        .map(|z| {
            // z = εh + dt
            if let Some(t) = solve_d(x, 1, z) {
                return half_integral(&t.cup(&t.d()), m);
            }
            let h = &h[0];
            let t = solve_d(x, 1, &(z + h)).expect("H^2 has dimension 1");
            let dt = t.d();
            qh.unwrap() + half_integral(&t.cup(&dt), m) + b(h, &dt)
        })
        .collect()
}

#[test]
fn spin_quadratic_on_the_3_sphere() {
    let e = simplex_boundary(4).unwrap();
    let (x, m) = (&e.complex, e.fundamental.as_ref().unwrap());
    let q = valid_q(x, m, None);
    assert!(validate_spin_quadratic(x, m, &q).unwrap());
    // on S³ every 2-cocycle is exact, so Q is forced
    for i in 0..q.len() {
        for bump in [Qz::HALF, Qz::new(1, 4)] {
            let mut bad = q.clone();
            bad[i] = bad[i] + bump;
            assert!(!validate_spin_quadratic(x, m, &bad).unwrap(), "basis {i}, bump {bump}");
        }
    }
    assert!(matches!(validate_spin_quadratic(x, m, &q[1..]), Err(Error::DimensionMismatch(_))));
}

#[test]
fn spin_quadratic_on_tss2() {
    let e = t_s_sphere();
    let (x, m) = (&e.complex, e.fundamental.as_ref().unwrap());
    let h = &z2_cohomology_basis(x, 2)[0];
    let bhh = half_integral(&h.cup1(h), m);
    // 2Q(h) + B(h,h) = 0 leaves two choices
    let choices: Vec<Qz> = (0..8).map(|k| Qz::new(k, 8)).filter(|&v| v.times(2) + bhh == Qz::ZERO).collect();
    assert_eq!(choices.len(), 2);
    let qs: Vec<Vec<Qz>> = choices.iter().map(|&c| valid_q(x, m, Some(c))).collect();
    for q in &qs {
        assert!(validate_spin_quadratic(x, m, q).unwrap());
    }
    // the two differ by ⟨b ∪ ·, M⟩ for the generator b of H¹(ℤ/2)
    let c = e.z2("c");
    let basis = spin_quadratic_basis(x);
    let linear: Vec<Qz> = basis.iter().map(|z| half_integral(&c.cup(z), m)).collect();
    let diff: Vec<Qz> = qs[1].iter().zip(&qs[0]).map(|(a, b)| *a - *b).collect();
    assert_eq!(diff, linear);
    // a value off by 1/4 breaks the diagonal identity
    let mut bad = qs[0].clone();
    bad[0] = bad[0] + Qz::new(1, 4);
    assert!(!validate_spin_quadratic(x, m, &bad).unwrap());
}
