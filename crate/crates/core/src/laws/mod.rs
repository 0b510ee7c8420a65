//! Randomized property suites: the special-lift and coboundary identities,
//! the group laws of **C** and G, Kapustin's relation, χ_b, element orders,
//! functoriality under subdivision, and the Arf engine.
//!
//! Every suite draws from its own ChaCha stream derived from the seed, so
//! equal options give byte-identical reports.

pub mod random;

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arf::{ArfValue, QuadraticForm, Zeta8Integer};
use crate::cochain::{pontrjagin_square_sq, Cochain, Ring, Z2};
use crate::error::Result;
use crate::group::{
    big_d, big_d_prime, chi, commutator, cprime_product, inverse, kapustin_defect, kapustin_form, power, product,
    pullback_triple, GroupContext, Triple,
};
use crate::homology::cohomology;
use crate::linalg::Qz;
use crate::simplicial::{barycentric_subdivision, OrderedComplex};
use random::{random_complex, random_int, random_z2, Sampler};

/// Complexes have at most this many vertices.
pub const MAX_VERTICES: usize = 6;
/// and at most this dimension.
pub const MAX_DIM: usize = 4;

/// How many failures each suite keeps verbatim.
const KEEP: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOptions {
    pub seed: u64,
    /// Random complexes per suite.
    pub complexes: usize,
    /// Trials per complex.
    pub trials: usize,
}

impl Default for LawOptions {
    fn default() -> Self {
        LawOptions { seed: 0, complexes: 20, trials: 10 }
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    /// What `cases` counts.
    pub unit: &'static str,
    pub cases: usize,
    /// Individual identity checks performed.
    pub checks: usize,
    pub failed: usize,
    pub examples: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str, unit: &'static str) -> Self {
        SuiteResult { name, unit, cases: 0, checks: 0, failed: 0, examples: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < KEEP {
                self.examples.push(what());
            }
        }
    }

    /// Records an unexpected error as a failed check.
    fn check_ok<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => {
                self.checks += 1;
                Some(v)
            }
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "[{tag}] {}: {} {}, {} checks", self.name, self.cases, self.unit, self.checks)?;
        if !self.passed() {
            write!(f, ", {} failed", self.failed)?;
            for e in &self.examples {
                write!(f, "\n    {e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub options: LawOptions,
    pub suites: Vec<SuiteResult>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.options;
        writeln!(f, "seed {}, {} complexes x {} trials", o.seed, o.complexes, o.trials)?;
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        let bad = self.suites.iter().filter(|s| !s.passed()).count();
        if bad == 0 {
            write!(f, "all {} suites passed", self.suites.len())
        } else {
            write!(f, "{bad} of {} suites failed", self.suites.len())
        }
    }
}

/// Runs every suite.
pub fn run_laws(opts: &LawOptions) -> LawReport {
    let suites = vec![
        cochain_identities(opts),
        group_laws(opts),
        commutator_law(opts),
        kapustin_law(opts),
        chi_law(opts),
        power_law(opts),
        functoriality(opts),
        arf_laws(opts),
    ];
    LawReport { options: opts.clone(), suites }
}

fn stream(opts: &LawOptions, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
}

fn each_complex(
    opts: &LawOptions,
    salt: u64,
    max_dim: usize,
    mut f: impl FnMut(&mut ChaCha8Rng, &Arc<OrderedComplex>, usize),
) {
    let mut rng = stream(opts, salt);
    for i in 0..opts.complexes {
        let x = random_complex(&mut rng, &format!("r{i}"), MAX_VERTICES, max_dim);
        for t in 0..opts.trials {
            f(&mut rng, &x, t);
        }
    }
}

fn tag(x: &OrderedComplex, t: usize) -> String {
    let d: Vec<String> = x.maximal_simplices().iter().map(|s| x.label(s)).collect();
    format!("{} trial {t} [{}]", x.name(), d.join(" "))
}

/// The right side of d(X ∪ᵢ Y) with the dX / dY terms omitted when they
/// vanish: (−1)^i dX∪ᵢY + (−1)^{i+m} X∪ᵢdY − (−1)^i X∪_{i−1}Y − (−1)^{mn} Y∪_{i−1}X.
fn coboundary_rhs(i: usize, x: &Cochain<i64>, y: &Cochain<i64>) -> Result<Cochain<i64>> {
    let (m, n) = (x.degree(), y.degree());
    let sign = |e: usize| if e % 2 == 0 { 1 } else { -1 };
    let cup_i = |i: usize, u: &Cochain<i64>, v: &Cochain<i64>| match i {
        0 => crate::cochain::cup(u, v),
        1 => crate::cochain::cup1(u, v),
        _ => crate::cochain::cup2(u, v),
    };
    let mut out = cup_i(i - 1, x, y)?.scale(-sign(i)) - cup_i(i - 1, y, x)?.scale(sign(m * n));
    let (dx, dy) = (x.d(), y.d());
    if !dx.is_zero() {
        out = out + cup_i(i, &dx, y)?.scale(sign(i));
    }
    if !dy.is_zero() {
        out = out + cup_i(i, x, &dy)?.scale(sign(i + m));
    }
    Ok(out)
}

/// The special-lift identities and the coboundary formula for ∪₁, ∪₂ over ℤ
/// (and ℤ/2) in every bidegree where both sides are defined.
pub fn cochain_identities(opts: &LawOptions) -> SuiteResult {
    let mut r = SuiteResult::new("cochain identities (special lifts, coboundary formula)", "random cochains");
    each_complex(opts, 0x5111, MAX_DIM, |rng, x, t| {
        let s = Sampler::new(x);
        let (a, b, p, q) = (s.z2_cocycle(rng, 1), s.z2_cocycle(rng, 1), s.z2_cocycle(rng, 2), s.z2_cocycle(rng, 2));
        let x0 = random_z2(rng, x, 0);
        let (u, v) = (random_int(rng, x, 1, 2), random_int(rng, x, 1, 2));
        let (z, z2) = (random_int(rng, x, 1, 2), random_int(rng, x, 1, 2));
        r.cases += 9;
        let at = || tag(x, t);

        let (la, lb, lp) = (a.lift(), b.lift(), p.lift());
        r.check(la.d() == la.sq().scale(2), || format!("dA = 2A^2 fails on {}", at()));
        let lc = (&a + &b).lift();
        r.check(lc == &la + &lb + la.cup1(&lb).scale(2), || format!("C = A+B+2(A cup1 B) fails on {}", at()));
        r.check(lc.sq() == la.sq() + lb.sq() + la.cup1(&lb).d(), || {
            format!("C^2 = A^2 + B^2 + d(A cup1 B) fails on {}", at())
        });
        r.check(lp.d() == lp.cup1(&lp).scale(2), || format!("dP = 2(P cup1 P) fails on {}", at()));
        r.check(lp.nth(4).d() == p.cup1(&p).half(), || format!("d(P/4) = (1/2)p cup1 p fails on {}", at()));
        let a2 = la.sq();
        r.check(a2.cup1(&a2).is_zero(), || format!("A^2 cup1 A^2 = 0 fails on {}", at()));
        let (dx, lx) = (x0.d().lift(), x0.lift());
        r.check(&dx + &lx.d() == dx.cup(&lx).scale(2), || format!("Dx + dX = 2(Dx)X fails on {}", at()));
        r.check(&dx - &lx.d() == lx.cup(&dx).scale(2), || format!("Dx - dX = 2X(Dx) fails on {}", at()));

        // integral 2-cocycles: coboundaries plus A²
        let zc = z.d() + &a2;
        let wc = z2.d() + lb.sq();
        let cases: [(usize, &Cochain<i64>, &Cochain<i64>, &str); 4] = [
            (1, &u, &v, "cup1 (1,1)"),
            (1, &u, &wc, "cup1 (1,2), Y closed"),
            (1, &zc, &v, "cup1 (2,1), X closed"),
            (1, &zc, &wc, "cup1 (2,2), X, Y closed"),
        ];
        for (i, lhs_x, lhs_y, what) in cases {
            let lhs = if i == 1 { lhs_x.cup1(lhs_y) } else { lhs_x.cup2(lhs_y) };
            if let Some(rhs) = r.check_ok(coboundary_rhs(i, lhs_x, lhs_y), || format!("coboundary formula {what}")) {
                r.check(lhs.d() == rhs, || format!("coboundary formula {what} fails on {}", at()));
            }
        }
        r.check(p.cup1(&q).d() == p.cup(&q) + q.cup(&p), || format!("d(p cup1 q) = pq + qp fails on {}", at()));
        r.check(p.cup2(&q).d() == p.cup1(&q) + q.cup1(&p), || {
            format!("coboundary formula for cup2 (2,2) mod 2 fails on {}", at())
        });
        // With (X∪₂Y)(012) = −X(012)Y(012) the integral instance carries a
        // plus sign: the alternating sum of X·Y over the faces of a 3-simplex
        // cancels against the ∪₁ terms only this way round.
        r.check(zc.cup2(&wc).d() == zc.cup1(&wc) + wc.cup1(&zc), || {
            format!("d(X cup2 Y) = X cup1 Y + Y cup1 X fails on {}", at())
        });
    });
    r
}

/// **D** additivity, **D**∘**D′** = 0, **D′** multiplicativity,
/// associativity, inverses, squares and fourth powers, and centrality of
/// (w,p,0) — all under C̄-equality on random triples.
pub fn group_laws(opts: &LawOptions) -> SuiteResult {
    let mut r = SuiteResult::new("group laws", "random triples");
    let mut last: Option<(Arc<OrderedComplex>, GroupContext)> = None;
    each_complex(opts, 0x6a01, MAX_DIM, |rng, x, t| {
        if last.as_ref().is_none_or(|(y, _)| !Arc::ptr_eq(x, y)) {
            last = Some((x.clone(), GroupContext::new(x)));
        }
        let ctx = &last.as_ref().unwrap().1;
        let s = Sampler::new(x);
        let (g, h, k) = (s.triple(rng), s.triple(rng), s.triple(rng));
        r.cases += 3;
        let at = || tag(x, t);
        let mul = |u: &Triple, v: &Triple| product(u, v).expect("same complex");

        r.check(big_d(&mul(&g, &h)) == big_d(&g) + big_d(&h), || format!("D(gh) = Dg + Dh fails on {}", at()));

        let (t1, x1, t2, x2) = (random_z2(rng, x, 1), random_z2(rng, x, 0), random_z2(rng, x, 1), random_z2(rng, x, 0));
        let (e1, e2) = (big_d_prime(&t1, &x1), big_d_prime(&t2, &x2));
        r.check(big_d(&e1).is_zero(), || format!("D(D'(t,x)) = 0 fails on {}", at()));
        let (ts, xy) = cprime_product((&t1, &x1), (&t2, &x2));
        r.check(ctx.cbar_equal(&big_d_prime(&ts, &xy), &mul(&e1, &e2)), || {
            format!("D' multiplicativity fails on {}", at())
        });

        r.check(ctx.cbar_equal(&mul(&mul(&g, &h), &k), &mul(&g, &mul(&h, &k))), || {
            format!("associativity fails on {}", at())
        });
        let id = Triple::identity(x);
        r.check(ctx.cbar_equal(&mul(&g, &inverse(&g)), &id), || format!("g g^-1 = 1 fails on {}", at()));
        r.check(ctx.cbar_equal(&mul(&inverse(&g), &g), &id), || format!("g^-1 g = 1 fails on {}", at()));

        let la = g.a.lift();
        let a3 = la.cup(&la).cup(&la);
        let sq = Triple { w: g.w.scale(2) - a3.nth(4), p: g.a.sq(), a: Cochain::zero(x, 1) };
        r.check(ctx.cbar_equal(&power(&g, 2), &sq), || format!("g^2 = (2w - A^3/4, a^2, 0) fails on {}", at()));
        let fourth = Triple::from_w(g.w.scale(4) + g.a.sq().cup(&g.a).half());
        r.check(ctx.cbar_equal(&power(&g, 4), &fourth), || format!("g^4 = (4w + a^3/2, 0, 0) fails on {}", at()));

        // (w,p,0)(v,q,b) = (v,q,b)(w,p,0)(d(½ p∪₂q), 0, 0), exactly
        let g1 = Triple { w: g.w.clone(), p: g.p.clone(), a: Cochain::zero(x, 1) };
        let f = g.p.cup2(&h.p).half().d();
        r.check(mul(&g1, &h) == mul(&mul(&h, &g1), &Triple::from_w(f)), || {
            format!("centrality of (w,p,0) fails on {}", at())
        });
    });
    r
}

/// g₁g₂g₁⁻¹g₂⁻¹ ≡ **D′**(a∪₁b, 0) in G, and the commutator is trivial when
/// the a-components agree.
pub fn commutator_law(opts: &LawOptions) -> SuiteResult {
    let mut r = SuiteResult::new("commutator law", "D-cocycle pairs");
    with_contexts(opts, 0xc033, MAX_DIM, |rng, x, ctx, s, t| {
        let (g1, g2) = (s.d_cocycle(rng, ctx), s.d_cocycle(rng, ctx));
        r.cases += 1;
        let at = || tag(x, t);
        let c = commutator(&g1, &g2).expect("same complex");
        let expect = big_d_prime(&g1.a.cup1(&g2.a), &Cochain::zero(x, 0));
        if let Some(eq) = r.check_ok(ctx.g_equal(&c, &expect), at) {
            r.check(eq, || format!("[g1, g2] != D'(a cup1 b, 0) on {}", at()));
        }
        let same_a = product(&Triple::from_w(s.qz_cocycle3(rng)), &Triple::from_a(g1.a.clone())).unwrap();
        let c = commutator(&g1, &same_a).expect("same complex");
        if let Some(id) = r.check_ok(ctx.is_identity(&c), at) {
            r.check(id, || format!("commutator with equal a is not the identity on {}", at()));
        }
    });
    r
}

fn with_contexts(
    opts: &LawOptions,
    salt: u64,
    max_dim: usize,
    mut f: impl FnMut(&mut ChaCha8Rng, &Arc<OrderedComplex>, &GroupContext, &Sampler, usize),
) {
    let mut rng = stream(opts, salt);
    for i in 0..opts.complexes {
        let x = random_complex(&mut rng, &format!("r{i}"), MAX_VERTICES, max_dim);
        let ctx = GroupContext::new(&x);
        let s = Sampler::new(&x);
        for t in 0..opts.trials {
            f(&mut rng, &x, &ctx, &s, t);
        }
    }
}

/// dw′ + ½p² + ¼A⁴ = 0 for the Kapustin form of random D-cocycles, with
/// d(A³/8) = A⁴/4 and d(A⁴ mod 4) = 0 for random 1-cocycles.
pub fn kapustin_law(opts: &LawOptions) -> SuiteResult {
    let mut r = SuiteResult::new("Kapustin relation", "D-cocycles");
    with_contexts(opts, 0x4a90, MAX_DIM, |rng, x, ctx, s, t| {
        let g = s.d_cocycle(rng, ctx);
        r.cases += 1;
        let at = || tag(x, t);
        r.check(big_d(&g).is_zero(), || format!("fixture is not a D-cocycle on {}", at()));
        r.check(kapustin_defect(&kapustin_form(&g)).is_zero(), || format!("Kapustin defect nonzero on {}", at()));
        let la = g.a.lift();
        let (a2, a3) = (la.sq(), la.sq().cup(&la));
        r.check(a3.nth(8).d() == a2.cup(&a2).nth(4), || format!("d(A^3/8) != A^4/4 on {}", at()));
        if let Some(p4) = r.check_ok(pontrjagin_square_sq(&g.a), at) {
            r.check(p4.is_cocycle(), || format!("A^4 mod 4 is not a cocycle on {}", at()));
        }
    });
    r
}

/// χ_b∘χ_b = id and χ₀ = id in G.
pub fn chi_law(opts: &LawOptions) -> SuiteResult {
    let mut r = SuiteResult::new("chi_b involution", "inputs");
    with_contexts(opts, 0xc41b, MAX_DIM, |rng, x, ctx, s, t| {
        let g = s.d_cocycle(rng, ctx);
        let b = s.z2_cocycle(rng, 1);
        r.cases += 1;
        let at = || tag(x, t);
        let once = chi(&b, &g).expect("valid input");
        r.check(big_d(&once).is_zero(), || format!("chi_b(g) is not a D-cocycle on {}", at()));
        if let Some(eq) = r.check_ok(ctx.g_equal(&chi(&b, &once).unwrap(), &g), at) {
            r.check(eq, || format!("chi_b(chi_b(g)) != g on {}", at()));
        }
        let zero = chi(&Cochain::zero(x, 1), &g).unwrap();
        if let Some(eq) = r.check_ok(ctx.g_equal(&zero, &g), at) {
            r.check(eq, || format!("chi_0(g) != g on {}", at()));
        }
    });
    r
}

/// (0,0,a)⁸ is the identity and the order of (0,0,a) divides 8.
pub fn power_law(opts: &LawOptions) -> SuiteResult {
    let mut r = SuiteResult::new("orders of (0,0,a)", "cocycles");
    with_contexts(opts, 0x0d8e, MAX_DIM, |rng, x, ctx, s, t| {
        let a = s.z2_cocycle(rng, 1);
        r.cases += 1;
        let at = || tag(x, t);
        let g = Triple::from_a(a);
        if let Some(id) = r.check_ok(ctx.is_identity(&power(&g, 8)), at) {
            r.check(id, || format!("(0,0,a)^8 != 1 on {}", at()));
        }
        if let Some(o) = r.check_ok(ctx.order(&g, 8), at) {
            r.check(matches!(o, Some(1 | 2 | 4 | 8)), || format!("order {o:?} does not divide 8 on {}", at()));
        }
    });
    r
}

/// Barycentric subdivision preserves H^k with all coefficients; pullback
/// along the projection commutes with ∪ and ∪₁ and preserves is_identity.
pub fn functoriality(opts: &LawOptions) -> SuiteResult {
    let mut r = SuiteResult::new("subdivision functoriality", "random cases");
    let mut rng = stream(opts, 0xf00d);
    for i in 0..opts.complexes {
        let x = random_complex(&mut rng, &format!("r{i}"), MAX_VERTICES, 3);
        let (sd, pi) = barycentric_subdivision(&x);
        let at = |t: usize| tag(&x, t);
        for ring in [Ring::Z, Ring::Z2, Ring::Z4, Ring::Qz] {
            for k in 0..=x.top_dim() {
                let (Ok(h), Ok(hs)) = (cohomology(&x, ring, k), cohomology(&sd, ring, k)) else {
                    r.check(false, || format!("cohomology failed on {}", at(0)));
                    continue;
                };
                r.check(
                    (h.free_rank, h.circle_rank, &h.torsion) == (hs.free_rank, hs.circle_rank, &hs.torsion),
                    || format!("H^{k}({ring}) changes under subdivision on {}", at(0)),
                );
            }
        }
        let ctx = GroupContext::new(&x);
        let sd_ctx = GroupContext::new(&sd);
        let s = Sampler::new(&x);
        for t in 0..opts.trials {
            r.cases += 1;
            let (u, v, p, q) = (
                random_z2(&mut rng, &x, 1),
                random_z2(&mut rng, &x, 1),
                random_z2(&mut rng, &x, 2),
                random_z2(&mut rng, &x, 2),
            );
            let pull = |c: &Cochain<Z2>| c.pullback(&pi).expect("pullback along the projection");
            r.check(pull(&u.cup(&v)) == pull(&u).cup(&pull(&v)), || format!("pullback of a cup b on {}", at(t)));
            r.check(pull(&u.cup1(&v)) == pull(&u).cup1(&pull(&v)), || format!("pullback of a cup1 b on {}", at(t)));
            // degree-3 products only exist below the top dimension
            if x.top_dim() >= 3 {
                r.check(pull(&u.cup(&p)) == pull(&u).cup(&pull(&p)), || format!("pullback of a cup p on {}", at(t)));
                r.check(pull(&p.cup1(&q)) == pull(&p).cup1(&pull(&q)), || format!("pullback of p cup1 q on {}", at(t)));
            }
            let (iu, iv) = (random_int(&mut rng, &x, 1, 2), random_int(&mut rng, &x, 1, 2));
            let ipull = |c: &Cochain<i64>| c.pullback(&pi).expect("pullback along the projection");
            r.check(ipull(&iu.cup(&iv)) == ipull(&iu).cup(&ipull(&iv)), || {
                format!("integral pullback of a cup b on {}", at(t))
            });
            r.check(ipull(&iu.d()) == ipull(&iu).d(), || format!("pullback does not commute with d on {}", at(t)));

            let g = if t % 2 == 0 { s.d_cocycle(&mut rng, &ctx) } else { s.d_prime_image(&mut rng) };
            let pg = pullback_triple(&pi, &g).expect("projection pullback");
            r.check(big_d(&pg).is_zero(), || format!("pulled-back triple is not a D-cocycle on {}", at(t)));
            match (ctx.is_identity(&g), sd_ctx.is_identity(&pg)) {
                (Ok(a), Ok(b)) => r.check(a == b, || format!("is_identity verdict {a} becomes {b} on {}", at(t))),
                (a, b) => r.check(false, || format!("is_identity errors {a:?} / {b:?} on {}", at(t))),
            }
        }
    }
    r
}

fn random_form<G: Rng>(rng: &mut G, n: usize) -> QuadraticForm {
    let mut b = vec![vec![0u8; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(0..2);
            b[i][j] = v;
            b[j][i] = v;
        }
    }
    let q: Vec<u8> = (0..n).map(|i| b[i][i] + 2 * rng.gen_range(0..2u8)).collect();
    QuadraticForm::new(&b, &q).expect("constructed consistently")
}

fn random_nondegenerate<G: Rng>(rng: &mut G, n: usize) -> QuadraticForm {
    loop {
        let f = random_form(rng, n);
        if f.radical_dim() == 0 {
            return f;
        }
    }
}

/// Gauss sum by direct evaluation of Q on every vector.
fn brute_gauss_sum(f: &QuadraticForm) -> Zeta8Integer {
    let n = f.dim();
    let mut counts = [0i64; 4];
    for m in 0u64..1 << n {
        let v: Vec<u8> = (0..n).map(|i| (m >> i & 1) as u8).collect();
        counts[f.evaluate_q(&v).unwrap() as usize] += 1;
    }
    Zeta8Integer::from_int(counts[0] - counts[2])
        + Zeta8Integer::from_int(counts[1] - counts[3]) * Zeta8Integer::zeta_pow(2)
}

/// Additivity and negation on nondegenerate forms; |S|² ∈ {0, 2ⁿ} where B
/// is nondegenerate or Q is nonzero on its radical, |S|² = 2^{n + dim rad}
/// otherwise; the Gray-code sum agrees with brute force.
pub fn arf_laws(opts: &LawOptions) -> SuiteResult {
    let mut r = SuiteResult::new("Arf invariant", "random forms");
    let mut rng = stream(opts, 0xa4f0);
    for t in 0..opts.complexes * opts.trials {
        let (nf, ng, nh) = (rng.gen_range(0..=8), rng.gen_range(0..=8), rng.gen_range(0..=16));
        let (f, g, h) =
            (random_nondegenerate(&mut rng, nf), random_nondegenerate(&mut rng, ng), random_form(&mut rng, nh));
        r.cases += 3;
        let (Ok(af), Ok(ag), Ok(afg), Ok(an)) = (f.arf(), g.arf(), f.direct_sum(&g).arf(), f.negate().arf()) else {
            r.check(false, || format!("arf failed on trial {t}"));
            continue;
        };
        match (af, ag, afg, an) {
            (ArfValue::Value(a), ArfValue::Value(b), ArfValue::Value(c), ArfValue::Value(n)) => {
                r.check((a + b) % 8 == c, || format!("arf({a}) + arf({b}) != arf(sum) = {c} on trial {t}"));
                r.check((8 - a) % 8 == n, || format!("arf(-Q) = {n} != -{a} on trial {t}"));
            }
            _ => r.check(false, || format!("nondegenerate form reported degenerate on trial {t}")),
        }

        let Ok(s) = h.gauss_sum() else {
            r.check(false, || format!("gauss sum failed on trial {t}"));
            continue;
        };
        let norm = s.norm_sq();
        let n = h.dim();
        let rad = h.radical_dim();
        if rad == 0 || !h.q_vanishes_on_radical() {
            let full = Zeta8Integer::from_int(num_bigint::BigInt::from(1u32) << n);
            r.check(norm.is_zero() || norm == full, || format!("|S|^2 = {norm} not in {{0, 2^{n}}} on trial {t}"));
            r.check(norm.is_zero() == (rad > 0), || format!("S = 0 iff Q nonzero on rad fails on trial {t}"));
        } else {
            let full = Zeta8Integer::from_int(num_bigint::BigInt::from(1u32) << (n + rad));
            r.check(norm == full, || format!("|S|^2 = {norm} != 2^({n}+{rad}) on trial {t}"));
        }
        if n <= 10 {
            r.check(brute_gauss_sum(&h) == s, || {
                format!("Gray-code Gauss sum disagrees with brute force on trial {t}")
            });
        }
    }
    r.check(
        QuadraticForm::new(&[vec![1]], &[1]).unwrap().arf().map(ArfValue::as_qz) == Ok(Some(Qz::new(1, 8))),
        || "Q(e) = 1 does not give 1/8".into(),
    );
    r
}
