use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gx_core::cochain::{Cochain, Ring, Z2};
use gx_core::homology::{cohomology, homology, AbelianGroupPresentation};
use gx_core::laws::random::{random_complex, random_int, random_qz, random_z2};
use gx_core::simplicial::OrderedComplex;

fn complex(seed: u64, max_dim: usize) -> (ChaCha8Rng, Arc<OrderedComplex>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_complex(&mut rng, "r", 6, max_dim);
    (rng, x)
}

/// Steenrod's ∪ᵢ over ℤ/2, straight from the definition: sum over
/// 0 ≤ j₀ < … < jᵢ ≤ n of u on [0,j₀] ∪ [j₁,j₂] ∪ … and v on the
/// complementary intervals [j₀,j₁] ∪ [j₂,j₃] ∪ …
fn steenrod(u: &Cochain<Z2>, v: &Cochain<Z2>, i: usize) -> Cochain<Z2> {
    let x = u.complex();
    let (p, q) = (u.degree(), v.degree());
    let n = (p + q).checked_sub(i).expect("i <= p + q");
    Cochain::from_fn(x, n, |s| {
        let mut total = 0u8;
        for js in subsets(n + 1, i + 1) {
            let mut bounds = vec![0];
            bounds.extend(&js);
            bounds.push(n);
            let (mut us, mut vs) = (Vec::new(), Vec::new());
            for (k, w) in bounds.windows(2).enumerate() {
                let side = if k % 2 == 0 { &mut us } else { &mut vs };
                side.extend(w[0]..=w[1]);
            }
            us.dedup();
            vs.dedup();
            if us.len() != p + 1 || vs.len() != q + 1 {
                continue;
            }
            let face = |vs: &[usize]| vs.iter().map(|&k| s[k]).collect::<Vec<u32>>();
            let a = u.value_on(&face(&us)).unwrap().value();
            let b = v.value_on(&face(&vs)).unwrap().value();
            total ^= a & b;
        }
        Z2::new(total as i64)
    })
}

/// Strictly increasing k-tuples from 0..m.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for last in k - 1..m {
        for mut s in subsets(last, k - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squared_vanishes(seed in any::<u64>()) {
        let (mut rng, x) = complex(seed, 4);
        for k in 0..x.top_dim() {
            prop_assert!(random_int(&mut rng, &x, k, 5).d().d().is_zero());
            prop_assert!(random_z2(&mut rng, &x, k).d().d().is_zero());
            prop_assert!(random_qz(&mut rng, &x, k).d().d().is_zero());
            prop_assert!(random_int(&mut rng, &x, k, 5).mod4().d().d().is_zero());
        }
    }

    #[test]
    fn leibniz(seed in any::<u64>()) {
        let (mut rng, x) = complex(seed, 4);
        let top = x.top_dim();
        for p in 0..top {
            for q in 0..top - p {
                let (u, v) = (random_int(&mut rng, &x, p, 3), random_int(&mut rng, &x, q, 3));
                let sign = if p % 2 == 0 { 1 } else { -1 };
                let rhs = u.d().cup(&v) + u.cup(&v.d()).scale(sign);
                prop_assert_eq!(u.cup(&v).d(), rhs, "bidegree ({}, {})", p, q);
            }
        }
    }

    #[test]
    fn cup_products_agree_with_steenrod_mod_2(seed in any::<u64>()) {
        let (mut rng, x) = complex(seed, 4);
        let top = x.top_dim();
        for p in 0..=top {
            for q in 0..=top - p {
                let (u, v) = (random_z2(&mut rng, &x, p), random_z2(&mut rng, &x, q));
                prop_assert_eq!(u.cup(&v), steenrod(&u, &v, 0));
            }
        }
        for (p, q) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            if p + q - 1 > top {
                continue;
            }
            let (u, v) = (random_z2(&mut rng, &x, p), random_z2(&mut rng, &x, q));
            prop_assert_eq!(u.cup1(&v), steenrod(&u, &v, 1), "cup1 ({}, {})", p, q);
            // the integral formulas reduce to the same thing
            let (ui, vi) = (u.lift(), v.lift());
            prop_assert_eq!(ui.cup1(&vi).mod2(), steenrod(&u, &v, 1));
        }
        if top >= 2 {
            let (u, v) = (random_z2(&mut rng, &x, 2), random_z2(&mut rng, &x, 2));
            prop_assert_eq!(u.cup2(&v), steenrod(&u, &v, 2));
            prop_assert_eq!(u.lift().cup2(&v.lift()).mod2(), steenrod(&u, &v, 2));
        }
    }

    /// d(u ∪ᵢ v) = u ∪ᵢ₋₁ v + v ∪ᵢ₋₁ u + du ∪ᵢ v + u ∪ᵢ dv mod 2, checked on
    /// the oracle itself so that the comparison above means something.
    #[test]
    fn steenrod_oracle_coboundary_formula(seed in any::<u64>()) {
        let (mut rng, x) = complex(seed, 4);
        let top = x.top_dim();
        for i in 1..=2 {
            for p in 0..=top {
                for q in 0..=top - p {
                    if p + q < i || p + q - i + 1 > top {
                        continue;
                    }
                    let (u, v) = (random_z2(&mut rng, &x, p), random_z2(&mut rng, &x, q));
                    let lhs = steenrod(&u, &v, i).d();
                    let mut rhs = steenrod(&u, &v, i - 1) + steenrod(&v, &u, i - 1);
                    if p < top {
                        rhs = rhs + steenrod(&u.d(), &v, i);
                    }
                    if q < top {
                        rhs = rhs + steenrod(&u, &v.d(), i);
                    }
                    prop_assert_eq!(lhs, rhs, "i = {}, ({}, {})", i, p, q);
                }
            }
        }
    }

    #[test]
    fn universal_coefficients(seed in any::<u64>()) {
        let (_, x) = complex(seed, 3);
        let top = x.top_dim();
        let zero = AbelianGroupPresentation { free_rank: 0, circle_rank: 0, torsion: vec![], basis_cocycles: vec![] };
        let h: Vec<AbelianGroupPresentation> = (0..=top).map(|k| homology(&x, k).unwrap()).collect();
        for k in 0..=top {
            let prev = if k == 0 { &zero } else { &h[k - 1] };
            let hz = cohomology(&x, Ring::Z, k).unwrap();
            prop_assert_eq!(hz.free_rank, h[k].free_rank);
            prop_assert_eq!(&hz.torsion, &prev.torsion);

            let z2 = cohomology(&x, Ring::Z2, k).unwrap();
            prop_assert_eq!(z2.torsion.len(), h[k].free_rank + h[k].even_torsion() + prev.even_torsion());

            let z4 = cohomology(&x, Ring::Z4, k).unwrap();
            let mut want: Vec<BigInt> = vec![BigInt::from(4); h[k].free_rank];
            for d in h[k].torsion.iter().chain(&prev.torsion) {
                let g = num_integer::Integer::gcd(d, &BigInt::from(4));
                if g > BigInt::from(1) {
                    want.push(g);
                }
            }
            let mut got = z4.torsion.clone();
            want.sort();
            got.sort();
            prop_assert_eq!(got, want);

            let qz = cohomology(&x, Ring::Qz, k).unwrap();
            prop_assert_eq!(qz.circle_rank, h[k].free_rank);
            prop_assert_eq!(&qz.torsion, &h[k].torsion);
        }
    }
}

#[test]
fn oracle_pins() {
    let x = Arc::new(OrderedComplex::from_ids("D2", &["0", "1", "2"], &[&["0", "1", "2"]]).unwrap());
    let a = Cochain::from_id_support(&x, 1, &[&["0", "2"]], Z2::ONE).unwrap();
    let p = Cochain::from_id_support(&x, 2, &[&["0", "1", "2"]], Z2::ONE).unwrap();
    assert_eq!(steenrod(&a, &p, 1), a.cup1(&p));
    assert!(!a.cup1(&p).is_zero());
    assert_eq!(subsets(4, 2).len(), 6);
}
