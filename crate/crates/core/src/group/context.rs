//! Identity and equality in G(X), the filtration G ⊃ G¹ ⊃ G², and the
//! structure invariants built from it.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use super::{big_d, big_d_prime, extension_cocycle, product, require_cocycle, Triple};
use crate::cochain::{pontrjagin_square_sq, same_complex, Cochain, Ring, Z2};
use crate::error::{Error, Result};
use crate::homology::{cohomology, homology_basis, pair_qz, z2_cohomology_basis, AbelianGroupPresentation};
use crate::linalg::{BitMatrix, BitVec, Gf2Solver, Qz, QzImage};
use crate::simplicial::OrderedComplex;

/// Bound used by `order` when the caller does not choose one.
pub const DEFAULT_ORDER_BOUND: u32 = 64;

/// Largest SH² dimension searched exhaustively by `lifts_to_order4`.
const SH2_SEARCH_CAP: usize = 16;

pub(crate) fn bits(c: &Cochain<Z2>) -> BitVec {
    let b: Vec<bool> = c.values().iter().map(|v| v.value() == 1).collect();
    BitVec::from_bools(&b)
}

pub(crate) fn from_bits(x: &Arc<OrderedComplex>, k: usize, v: &BitVec) -> Cochain<Z2> {
    Cochain::from_values(x, k, v.to_bools().into_iter().map(|b| Z2::new(b as i64)).collect()).unwrap()
}

/// Coordinates of a ℤ/2 cocycle class in a fixed basis of cocycles modulo
/// coboundaries.
#[derive(Clone, Debug)]
struct ClassSolver {
    gens: usize,
    solver: Gf2Solver,
}

impl ClassSolver {
    fn new(x: &OrderedComplex, k: usize, basis: &[Cochain<Z2>]) -> Self {
        let mut cols: Vec<BitVec> = basis.iter().map(bits).collect();
        if k > 0 {
            let prev = x.coboundary_matrix_gf2(k - 1).transpose();
            cols.extend((0..prev.nrows()).map(|j| prev.row(j).clone()));
        }
        ClassSolver { gens: basis.len(), solver: Gf2Solver::new(&BitMatrix::from_columns(x.count(k), &cols)) }
    }

    fn coords(&self, c: &Cochain<Z2>) -> Option<Vec<u8>> {
        let s = self.solver.solve(&bits(c))?;
        Some((0..self.gens).map(|i| s.get(i) as u8).collect())
    }
}

/// Level of the filtration G ⊃ G¹ ⊃ G² ⊃ 0 at which a class first becomes
/// nonzero in the associated graded group.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiltrationLevel {
    /// Nonzero image in G/G¹ ≅ H¹(ℤ/2).
    Top,
    /// In G¹, nonzero in G¹/G² ≅ SH².
    G1,
    /// In G² ≅ H³(ℚ/ℤ), nonzero.
    G2,
    Identity,
}

impl fmt::Display for FiltrationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiltrationLevel::Top => "G/G1",
            FiltrationLevel::G1 => "G1/G2",
            FiltrationLevel::G2 => "G2",
            FiltrationLevel::Identity => "identity",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassCoordinates {
    None,
    /// Coordinates over ℤ/2 (for [a] ∈ H¹ or [p] ∈ SH²).
    Z2(Vec<u8>),
    /// Pairings of [w] with the H₃ basis cycles (free, then torsion).
    Qz(Vec<Qz>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationClass {
    pub level: FiltrationLevel,
    pub coordinates: ClassCoordinates,
}

impl FiltrationClass {
    pub fn is_identity(&self) -> bool {
        self.level == FiltrationLevel::Identity
    }
}

impl fmt::Display for FiltrationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.level)?;
        match &self.coordinates {
            ClassCoordinates::None => Ok(()),
            ClassCoordinates::Z2(v) => {
                let s: Vec<String> = v.iter().map(u8::to_string).collect();
                write!(f, " [{}]", s.join(" "))
            }
            ClassCoordinates::Qz(v) => {
                let s: Vec<String> = v.iter().map(Qz::to_string).collect();
                write!(f, " [{}]", s.join(" "))
            }
        }
    }
}

/// The linear algebra of one complex needed to decide equality in G(X).
///
/// Building a context costs a few Smith normal forms; every query after that
/// is cheap (GF(2) solves and one lattice membership test).
#[derive(Clone, Debug)]
pub struct GroupContext {
    complex: Arc<OrderedComplex>,
    d0: Gf2Solver,
    d1: Gf2Solver,
    d2: QzImage,
    d3: QzImage,
    h1: Vec<Cochain<Z2>>,
    h1_classes: ClassSolver,
    h2_dim: usize,
    sh2: Vec<Cochain<Z2>>,
    sh2_classes: ClassSolver,
    /// H₃ basis cycles: free (order `None`) then torsion.
    h3_cycles: Vec<(Option<BigInt>, Vec<BigInt>)>,
}

impl GroupContext {
    pub fn new(x: &Arc<OrderedComplex>) -> Self {
        let h1 = z2_cohomology_basis(x, 1);
        let h2 = z2_cohomology_basis(x, 2);
        let sh2 = sh2_from(x, &h2);
        let hb = homology_basis(x, 3);
        let mut h3_cycles: Vec<(Option<BigInt>, Vec<BigInt>)> = hb.free.into_iter().map(|z| (None, z)).collect();
        h3_cycles.extend(hb.torsion.into_iter().map(|(d, z)| (Some(d), z)));
        GroupContext {
            complex: x.clone(),
            d0: Gf2Solver::new(&x.coboundary_matrix_gf2(0)),
            d1: Gf2Solver::new(&x.coboundary_matrix_gf2(1)),
            d2: QzImage::new(&x.coboundary_matrix_any(2)),
            d3: QzImage::new(&x.coboundary_matrix_any(3)),
            h1_classes: ClassSolver::new(x, 1, &h1),
            h1,
            h2_dim: h2.len(),
            sh2_classes: ClassSolver::new(x, 2, &sh2),
            sh2,
            h3_cycles,
        }
    }

    pub fn complex(&self) -> &Arc<OrderedComplex> {
        &self.complex
    }

    /// Cocycles representing a basis of H¹(ℤ/2).
    pub fn h1_basis(&self) -> &[Cochain<Z2>] {
        &self.h1
    }

    /// Cocycles representing a basis of SH² ⊂ H²(ℤ/2).
    pub fn sh2_basis(&self) -> &[Cochain<Z2>] {
        &self.sh2
    }

    fn check(&self, g: &Triple) -> Result<()> {
        if !same_complex(g.complex(), &self.complex) {
            return Err(Error::ComplexMismatch);
        }
        if !big_d(g).is_zero() {
            return Err(Error::NotDCocycle);
        }
        Ok(())
    }

    /// Equality in C̄: same p and a, and w₁ − w₂ ∈ dC²(ℚ/ℤ).
    pub fn cbar_equal(&self, g1: &Triple, g2: &Triple) -> bool {
        same_complex(g1.complex(), &self.complex)
            && same_complex(g2.complex(), &self.complex)
            && g1.p == g2.p
            && g1.a == g2.a
            && self.d2.contains((&g1.w - &g2.w).values())
    }

    /// Whether a D-cocycle lies in Im **D′**.
    ///
    /// Im **D′** = {(½t dt + dC², dt, dx)}. With a = dx and p = dt₀ the
    /// admissible t form t₀ + Z¹; since ½(dy)p = d(½yp), only the H¹ part of
    /// Z¹ matters, and the test becomes
    /// w − ½t₀p ∈ dC²(ℚ/ℤ) + span{½hᵢp : hᵢ a basis of H¹(ℤ/2)}.
    pub fn is_identity(&self, g: &Triple) -> Result<bool> {
        self.check(g)?;
        if !self.d0.is_consistent(&bits(&g.a)) {
            return Ok(false);
        }
        let Some(t0) = self.d1.solve(&bits(&g.p)) else {
            return Ok(false);
        };
        let t0 = from_bits(&self.complex, 1, &t0);
        let residual = &g.w - t0.cup(&g.p).half();
        let gens: Vec<Vec<Qz>> = self.h1.iter().map(|h| h.cup(&g.p).half().values().to_vec()).collect();
        self.d2.contains_affine(residual.values(), &gens)
    }

    /// g₁ = g₂ in G, i.e. g₁·g₂⁻¹ ∈ Im **D′**.
    pub fn g_equal(&self, g1: &Triple, g2: &Triple) -> Result<bool> {
        self.check(g1)?;
        self.check(g2)?;
        self.is_identity(&product(g1, &super::inverse(g2))?)
    }

    /// Least n ≤ bound with gⁿ = 1 in G.
    pub fn order(&self, g: &Triple, bound: u32) -> Result<Option<u32>> {
        self.check(g)?;
        if bound == 0 {
            return Err(Error::Invalid("order bound must be at least 1".into()));
        }
        let mut h = g.clone();
        for n in 1..=bound {
            if self.is_identity(&h)? {
                return Ok(Some(n));
            }
            h = product(&h, g)?;
        }
        Ok(None)
    }

    /// Deepest filtration level of g and its coordinates there.
    pub fn filtration_class(&self, g: &Triple) -> Result<FiltrationClass> {
        self.check(g)?;
        let x = &self.complex;
        let a = self.h1_classes.coords(&g.a).expect("cocycle classes span");
        if a.contains(&1) {
            return Ok(FiltrationClass { level: FiltrationLevel::Top, coordinates: ClassCoordinates::Z2(a) });
        }
        // kill a, then p, with D′-moves
        let x0 = from_bits(x, 0, &self.d0.solve(&bits(&g.a)).expect("a is exact"));
        let g1 = product(g, &big_d_prime(&Cochain::zero(x, 1), &x0))?;
        debug_assert!(g1.a.is_zero());
        let p =
            self.sh2_classes.coords(&g1.p).ok_or_else(|| Error::Invalid("[p] of a D-cocycle outside SH^2".into()))?;
        if p.contains(&1) {
            return Ok(FiltrationClass { level: FiltrationLevel::G1, coordinates: ClassCoordinates::Z2(p) });
        }
        let t0 = from_bits(x, 1, &self.d1.solve(&bits(&g1.p)).expect("p is exact"));
        let g2 = product(&g1, &big_d_prime(&t0, &Cochain::zero(x, 0)))?;
        debug_assert!(g2.p.is_zero() && g2.a.is_zero());
        let w: Vec<Qz> = self.h3_cycles.iter().map(|(_, z)| pair_qz(&g2.w, z)).collect();
        if w.iter().all(|v| v.is_zero()) {
            return Ok(FiltrationClass { level: FiltrationLevel::Identity, coordinates: ClassCoordinates::None });
        }
        Ok(FiltrationClass { level: FiltrationLevel::G2, coordinates: ClassCoordinates::Qz(w) })
    }

    /// (w, p, 0) with dw = −½p², for [p] ∈ SH².
    pub fn lift_to_g1(&self, p: &Cochain<Z2>) -> Result<Triple> {
        if !same_complex(p.complex(), &self.complex) {
            return Err(Error::ComplexMismatch);
        }
        if p.degree() != 2 {
            return Err(Error::DegreeMismatch { expected: 2, found: p.degree() });
        }
        if !p.is_cocycle() {
            return Err(Error::NotCocycle("p"));
        }
        let target = -p.sq().half();
        let w = self.d3.preimage(target.values())?.ok_or(Error::NotInSh2)?;
        Ok(Triple { w: Cochain::from_values(&self.complex, 3, w)?, p: p.clone(), a: Cochain::zero(&self.complex, 1) })
    }

    /// [a] lifts to an element of order 2 iff [a]² = 0.
    pub fn lifts_to_order2(&self, a: &Cochain<Z2>) -> Result<bool> {
        require_cocycle(a, "a")?;
        Ok(self.d1.is_consistent(&bits(&a.sq())))
    }

    /// For [a]² ≠ 0: [a] lifts to an element of order 4 iff 𝒫([a]²) = 2[p]²
    /// in H⁴(ℤ/4) for some [p] ∈ SH² (searched exhaustively).
    pub fn lifts_to_order4(&self, a: &Cochain<Z2>) -> Result<bool> {
        if self.lifts_to_order2(a)? {
            return Err(Error::SquareVanishes);
        }
        let cap = crate::dim_cap(SH2_SEARCH_CAP);
        if self.sh2.len() > cap {
            return Err(Error::TooLarge { what: "SH^2", dim: self.sh2.len(), cap });
        }
        let target = pontrjagin_square_sq(a)?;
        let snf = self.d3.snf();
        for mask in 0u64..(1u64 << self.sh2.len()) {
            let mut p = Cochain::<Z2>::zero(&self.complex, 2);
            for (i, s) in self.sh2.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    p = p + s;
                }
            }
            let diff = &target - p.sq().double();
            let rhs: Vec<BigInt> = diff.values().iter().map(|v| BigInt::from(v.value())).collect();
            if crate::linalg::solve_mod_n_with(snf, &rhs, 4).is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn structure_report(&self) -> Result<GStructureReport> {
        let x = &self.complex;
        let h3 = if x.top_dim() >= 3 {
            cohomology(x, Ring::Qz, 3)?
        } else {
            AbelianGroupPresentation { free_rank: 0, circle_rank: 0, torsion: vec![], basis_cocycles: vec![] }
        };
        let even: Vec<(BigInt, &Vec<BigInt>)> = self
            .h3_cycles
            .iter()
            .filter_map(|(d, z)| d.as_ref().filter(|d| d.is_even()).map(|d| (d.clone(), z)))
            .collect();
        let mut alpha = Vec::with_capacity(self.sh2.len());
        for s in &self.sh2 {
            let g = self.lift_to_g1(s)?;
            let sq = product(&g, &g)?;
            let row = even
                .iter()
                .map(|(d, z)| {
                    // ⟨u, z⟩ = k/d; the class in ℤ/d ⊗ ℤ/2 is k mod 2
                    let v = pair_qz(&sq.w, z);
                    let k = BigInt::from(v.num()) * (d / BigInt::from(v.den()));
                    k.is_odd() as u8
                })
                .collect();
            alpha.push(row);
        }
        let mut z_table = Vec::with_capacity(self.h1.len());
        for a in &self.h1 {
            let mut row = Vec::with_capacity(self.h1.len());
            for b in &self.h1 {
                row.push(self.filtration_class(&extension_cocycle(a, b)?)?);
            }
            z_table.push(row);
        }
        Ok(GStructureReport {
            h1: self.h1.len(),
            h1_basis: self.h1.clone(),
            h2: self.h2_dim,
            sh2: self.sh2.len(),
            sh2_basis: self.sh2.clone(),
            h3,
            alpha,
            z_table,
        })
    }
}

/// Basis of SH² = ker([p] ↦ ½[p]² ∈ H⁴(ℚ/ℤ)) inside the span of `h2`.
fn sh2_from(x: &Arc<OrderedComplex>, h2: &[Cochain<Z2>]) -> Vec<Cochain<Z2>> {
    let hb = homology_basis(x, 4);
    let cycles: Vec<&Vec<BigInt>> = hb.free.iter().chain(hb.torsion.iter().map(|(_, z)| z)).collect();
    let mut m = BitMatrix::zeros(cycles.len(), h2.len());
    for (i, e) in h2.iter().enumerate() {
        let hsq = e.sq().half();
        for (j, z) in cycles.iter().enumerate() {
            // pairings of ½e² with cycles lie in {0, ½}
            m.set(j, i, !pair_qz(&hsq, z).is_zero());
        }
    }
    Gf2Solver::new(&m).kernel().iter().map(|v| v.ones().fold(Cochain::zero(x, 2), |acc, i| acc + &h2[i])).collect()
}

/// The invariants of G(X) read off its filtration.
#[derive(Clone, Debug)]
pub struct GStructureReport {
    /// dim H¹(ℤ/2) ≅ G/G¹.
    pub h1: usize,
    pub h1_basis: Vec<Cochain<Z2>>,
    /// dim H²(ℤ/2), an upper bound for `sh2`.
    pub h2: usize,
    /// dim SH² ≅ G¹/G².
    pub sh2: usize,
    pub sh2_basis: Vec<Cochain<Z2>>,
    /// H³(ℚ/ℤ) ≅ G².
    pub h3: AbelianGroupPresentation,
    /// α: SH² → H³/2H³, one row per SH² basis element, one column per even
    /// invariant factor of H³.
    pub alpha: Vec<Vec<u8>>,
    /// Classes of z(αᵢ, αⱼ) for the H¹ basis.
    pub z_table: Vec<Vec<FiltrationClass>>,
}

impl GStructureReport {
    /// |G| = 2^{h1 + sh2}·|H³(ℚ/ℤ)| when finite.
    pub fn order(&self) -> Option<BigInt> {
        let h3 = self.h3.order()?;
        Some(h3 << (self.h1 + self.sh2))
    }
}

impl fmt::Display for GStructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z2 = |k: usize| {
            if k == 0 {
                "0".to_string()
            } else {
                format!("(Z/2)^{k}")
            }
        };
        writeln!(f, "H^1(Z/2) = G/G1: {}", z2(self.h1))?;
        writeln!(f, "SH^2 = G1/G2: {} (H^2(Z/2) = {})", z2(self.sh2), z2(self.h2))?;
        writeln!(f, "H^3(Q/Z) = G2: {}", self.h3)?;
        match self.order() {
            Some(n) => writeln!(f, "|G| = {n}")?,
            None => writeln!(f, "|G| = infinite")?,
        }
        if !self.alpha.is_empty() && !self.alpha[0].is_empty() {
            writeln!(f, "alpha:")?;
            for row in &self.alpha {
                let s: Vec<String> = row.iter().map(u8::to_string).collect();
                writeln!(f, "  [{}]", s.join(" "))?;
            }
        } else {
            writeln!(f, "alpha: 0")?;
        }
        for (i, row) in self.z_table.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                writeln!(f, "z({i},{j}) = {c}")?;
            }
        }
        Ok(())
    }
}

/// Equality in C̄ without a cached context.
pub fn cbar_equal(g1: &Triple, g2: &Triple) -> bool {
    same_complex(g1.complex(), g2.complex())
        && g1.p == g2.p
        && g1.a == g2.a
        && QzImage::new(&g1.complex().coboundary_matrix_any(2)).contains((&g1.w - &g2.w).values())
}

pub fn is_identity(g: &Triple) -> Result<bool> {
    GroupContext::new(g.complex()).is_identity(g)
}

pub fn g_equal(g1: &Triple, g2: &Triple) -> Result<bool> {
    GroupContext::new(g1.complex()).g_equal(g1, g2)
}

pub fn order(g: &Triple, bound: u32) -> Result<Option<u32>> {
    GroupContext::new(g.complex()).order(g, bound)
}

pub fn filtration_class(g: &Triple) -> Result<FiltrationClass> {
    GroupContext::new(g.complex()).filtration_class(g)
}

pub fn structure_report(x: &Arc<OrderedComplex>) -> Result<GStructureReport> {
    GroupContext::new(x).structure_report()
}

pub fn sh2_basis(x: &Arc<OrderedComplex>) -> Vec<Cochain<Z2>> {
    sh2_from(x, &z2_cohomology_basis(x, 2))
}

pub fn lift_to_g1(p: &Cochain<Z2>) -> Result<Triple> {
    GroupContext::new(p.complex()).lift_to_g1(p)
}

pub fn lifts_to_order2(a: &Cochain<Z2>) -> Result<bool> {
    GroupContext::new(a.complex()).lifts_to_order2(a)
}

pub fn lifts_to_order4(a: &Cochain<Z2>) -> Result<bool> {
    GroupContext::new(a.complex()).lifts_to_order4(a)
}
