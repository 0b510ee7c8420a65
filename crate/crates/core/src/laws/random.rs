//! Seeded random complexes, cochains, triples and D-cocycle fixtures.

use std::sync::Arc;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::cochain::{Cochain, Z2};
use crate::group::{big_d_prime, product, GroupContext, Triple};
use crate::linalg::{BitVec, Gf2Solver, Qz};
use crate::simplicial::OrderedComplex;

const DENOMINATORS: [i64; 6] = [1, 2, 3, 4, 6, 8];

/// A random ordered complex on 3..=`max_vertices` vertices with 1..=5
/// generating simplices of dimension ≤ `max_dim`; the first generator has
/// dimension ≥ 3 whenever the vertex count allows it.
pub fn random_complex<G: Rng>(rng: &mut G, name: &str, max_vertices: usize, max_dim: usize) -> Arc<OrderedComplex> {
    let n = rng.gen_range(3..=max_vertices.max(3));
    let top = (max_dim + 1).min(n);
    let gens = rng.gen_range(1..=5);
    let mut out = Vec::with_capacity(gens);
    for i in 0..gens {
        let lo = if i == 0 { 4.min(top) } else { 2.min(top) };
        let size = rng.gen_range(lo..=top);
        out.push(sample(rng, n, size).into_iter().map(|v| v as u32).collect::<Vec<u32>>());
    }
    let vertices = (0..n).map(|i| format!("v{i}")).collect();
    Arc::new(OrderedComplex::new(name, vertices, out).expect("random generators are valid"))
}

pub fn random_z2<G: Rng>(rng: &mut G, x: &Arc<OrderedComplex>, k: usize) -> Cochain<Z2> {
    Cochain::from_fn(x, k, |_| Z2::new(rng.gen_range(0..2)))
}

/// Integer cochain with entries in −`r`..=`r`.
pub fn random_int<G: Rng>(rng: &mut G, x: &Arc<OrderedComplex>, k: usize, r: i64) -> Cochain<i64> {
    Cochain::from_fn(x, k, |_| rng.gen_range(-r..=r))
}

pub fn random_qz<G: Rng>(rng: &mut G, x: &Arc<OrderedComplex>, k: usize) -> Cochain<Qz> {
    Cochain::from_fn(x, k, |_| {
        let d = DENOMINATORS[rng.gen_range(0..DENOMINATORS.len())];
        Qz::new(rng.gen_range(0..d), d)
    })
}

/// Uniform sampling of ℤ/2 cocycles from cached kernel bases of d.
pub struct Sampler {
    x: Arc<OrderedComplex>,
    cocycles: Vec<Vec<Cochain<Z2>>>,
}

impl Sampler {
    pub fn new(x: &Arc<OrderedComplex>) -> Self {
        let cocycles = (0..=3)
            .map(|k| Gf2Solver::new(&x.coboundary_matrix_gf2(k)).kernel().iter().map(|v| from_bits(x, k, v)).collect())
            .collect();
        Sampler { x: x.clone(), cocycles }
    }

    pub fn complex(&self) -> &Arc<OrderedComplex> {
        &self.x
    }

    /// A uniformly random element of Z^k(X; ℤ/2), k ≤ 3.
    pub fn z2_cocycle<G: Rng>(&self, rng: &mut G, k: usize) -> Cochain<Z2> {
        self.cocycles[k].iter().fold(Cochain::zero(&self.x, k), |acc, z| if rng.gen_bool(0.5) { acc + z } else { acc })
    }

    /// A random triple of **C**: arbitrary w, cocycles p and a.
    pub fn triple<G: Rng>(&self, rng: &mut G) -> Triple {
        Triple { w: random_qz(rng, &self.x, 3), p: self.z2_cocycle(rng, 2), a: self.z2_cocycle(rng, 1) }
    }

    /// A random ℚ/ℤ 3-cocycle: a coboundary plus half a ℤ/2 cocycle.
    pub fn qz_cocycle3<G: Rng>(&self, rng: &mut G) -> Cochain<Qz> {
        random_qz(rng, &self.x, 2).d() + self.z2_cocycle(rng, 3).half()
    }

    /// **D′**(t, x) for random t, x.
    pub fn d_prime_image<G: Rng>(&self, rng: &mut G) -> Triple {
        big_d_prime(&random_z2(rng, &self.x, 1), &random_z2(rng, &self.x, 0))
    }

    /// A random D-cocycle: a product, in random order, of a **D′** image,
    /// (w,0,0) with dw = 0, the G¹ lift of a random SH² cocycle, and (0,0,a).
    pub fn d_cocycle<G: Rng>(&self, rng: &mut G, ctx: &GroupContext) -> Triple {
        let mut factors = vec![self.d_prime_image(rng), Triple::from_w(self.qz_cocycle3(rng))];
        let sh2 = ctx.sh2_basis();
        let p = sh2.iter().fold(random_z2(rng, &self.x, 1).d(), |acc, z| if rng.gen_bool(0.5) { acc + z } else { acc });
        factors.push(ctx.lift_to_g1(&p).expect("SH^2 cocycles lift"));
        factors.push(Triple::from_a(self.z2_cocycle(rng, 1)));
        factors.shuffle(rng);
        factors.iter().fold(Triple::identity(&self.x), |acc, f| product(&acc, f).expect("same complex"))
    }
}

fn from_bits(x: &Arc<OrderedComplex>, k: usize, v: &BitVec) -> Cochain<Z2> {
    let mut c = Cochain::zero(x, k);
    for i in v.ones() {
        c.set(i, Z2::ONE);
    }
    c
}
