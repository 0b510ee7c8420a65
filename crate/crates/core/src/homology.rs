//! Integral homology and cohomology with coefficients in ℤ, ℤ/2, ℤ/4, ℚ/ℤ.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cochain::{AnyCochain, Cochain, Ring, Z2, Z4};
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, solve_integer, Gf2Solver, Gf2Span, IntMatrix, Qz};
use crate::simplicial::OrderedComplex;

/// A finitely generated abelian group ℤ^r ⊕ (ℚ/ℤ)^c ⊕ ⊕ ℤ/dᵢ with
/// representatives for each summand (free first, then circles, then torsion).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupPresentation {
    pub free_rank: usize,
    /// Number of ℚ/ℤ summands, each the rational model of a circle.
    pub circle_rank: usize,
    /// Invariant factors d₁ | d₂ | …, all ≥ 2.
    pub torsion: Vec<BigInt>,
    /// Representative cocycles (for homology: cycles, stored as integral
    /// cochains in the same simplex basis).
    pub basis_cocycles: Vec<AnyCochain>,
}

impl AbelianGroupPresentation {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.circle_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 || self.circle_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().fold(BigInt::one(), |a, d| a * d))
    }

    /// Number of even invariant factors.
    pub fn even_torsion(&self) -> usize {
        self.torsion.iter().filter(|d| d.is_even()).count()
    }
}

impl fmt::Display for AbelianGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if self.circle_rank > 0 {
            let k = self.circle_rank;
            parts.push(format!("(Q/Z)^{k} (rational model of (R/Z)^{k})"));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// Generators of ker A / im B for integer matrices with A·B = 0.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub free: Vec<Vec<BigInt>>,
    /// (order, generator) pairs in divisibility order.
    pub torsion: Vec<(BigInt, Vec<BigInt>)>,
}

fn column(m: &IntMatrix, j: usize) -> Vec<BigInt> {
    (0..m.nrows()).map(|i| m.get(i, j).clone()).collect()
}

/// ker A / im B, with A: ℤⁿ → ℤᵐ and B: ℤᵖ → ℤⁿ.
pub fn subquotient(a: &IntMatrix, b: &IntMatrix) -> Subquotient {
    let n = a.ncols();
    assert_eq!(b.nrows(), n, "composable matrices");
    let sb = smith_normal_form(b);
    let rb = sb.rank();
    let mut torsion = Vec::new();
    for j in 0..rb {
        let s = sb.s.get(j, j);
        if !s.is_one() {
            torsion.push((s.clone(), column(&sb.u, j)));
        }
    }
    let sa = smith_normal_form(a);
    let kernel: Vec<Vec<BigInt>> = (sa.rank()..n).map(|j| column(&sa.v_inv, j)).collect();
    let mut free = Vec::new();
    if !kernel.is_empty() && n > rb {
        // project the kernel onto the coordinates transverse to im B
        let mut proj = IntMatrix::zeros(n - rb, kernel.len());
        for (c, kv) in kernel.iter().enumerate() {
            let y = sb.u_inv.mul_vec(kv);
            for i in rb..n {
                proj.set(i - rb, c, y[i].clone());
            }
        }
        let sp = smith_normal_form(&proj);
        for j in 0..sp.rank() {
            let mut g = vec![BigInt::zero(); n];
            for (c, kv) in kernel.iter().enumerate() {
                let coef = sp.v_inv.get(c, j);
                if coef.is_zero() {
                    continue;
                }
                for (gi, ki) in g.iter_mut().zip(kv) {
                    *gi += coef * ki;
                }
            }
            free.push(g);
        }
    }
    Subquotient { free, torsion }
}

fn check_degree(x: &OrderedComplex, k: usize) -> Result<()> {
    if k > x.top_dim() {
        return Err(Error::DegreeOutOfRange { degree: k, top_dim: x.top_dim() });
    }
    Ok(())
}

fn to_i64_cochain(x: &Arc<OrderedComplex>, k: usize, v: &[BigInt]) -> Cochain<i64> {
    use num_traits::ToPrimitive;
    let vals = v.iter().map(|c| c.to_i64().expect("basis coefficient overflow")).collect();
    Cochain::from_values(x, k, vals).unwrap()
}

/// Cycle representatives of H_k(X; ℤ): free generators, then torsion.
pub fn homology_basis(x: &OrderedComplex, k: usize) -> Subquotient {
    subquotient(&x.boundary_matrix(k), &x.boundary_matrix(k + 1))
}

/// H_k(X; ℤ).
pub fn homology(x: &Arc<OrderedComplex>, k: usize) -> Result<AbelianGroupPresentation> {
    check_degree(x, k)?;
    Ok(homology_unchecked(x, k))
}

pub(crate) fn homology_unchecked(x: &Arc<OrderedComplex>, k: usize) -> AbelianGroupPresentation {
    let sq = homology_basis(x, k);
    let mut basis: Vec<AnyCochain> = sq.free.iter().map(|v| to_i64_cochain(x, k, v).into()).collect();
    basis.extend(sq.torsion.iter().map(|(_, v)| to_i64_cochain(x, k, v).into()));
    AbelianGroupPresentation {
        free_rank: sq.free.len(),
        circle_rank: 0,
        torsion: sq.torsion.into_iter().map(|(d, _)| d).collect(),
        basis_cocycles: basis,
    }
}

/// H^k(X; M) for M ∈ {ℤ, ℤ/2, ℤ/4, ℚ/ℤ}.
pub fn cohomology(x: &Arc<OrderedComplex>, ring: Ring, k: usize) -> Result<AbelianGroupPresentation> {
    check_degree(x, k)?;
    Ok(match ring {
        Ring::Z => cohomology_z(x, k),
        Ring::Z2 => {
            let basis = z2_cohomology_basis(x, k);
            AbelianGroupPresentation {
                free_rank: 0,
                circle_rank: 0,
                torsion: vec![BigInt::from(2); basis.len()],
                basis_cocycles: basis.into_iter().map(AnyCochain::Z2).collect(),
            }
        }
        Ring::Z4 => cohomology_z4(x, k),
        Ring::Qz => cohomology_qz(x, k),
    })
}

fn coboundary_before(x: &OrderedComplex, k: usize) -> IntMatrix {
    if k == 0 {
        IntMatrix::zeros(x.count(0), 0)
    } else {
        x.coboundary_matrix_any(k - 1)
    }
}

fn cohomology_z(x: &Arc<OrderedComplex>, k: usize) -> AbelianGroupPresentation {
    let sq = subquotient(&x.coboundary_matrix_any(k), &coboundary_before(x, k));
    let mut basis: Vec<AnyCochain> = sq.free.iter().map(|v| to_i64_cochain(x, k, v).into()).collect();
    basis.extend(sq.torsion.iter().map(|(_, v)| to_i64_cochain(x, k, v).into()));
    AbelianGroupPresentation {
        free_rank: sq.free.len(),
        circle_rank: 0,
        torsion: sq.torsion.into_iter().map(|(d, _)| d).collect(),
        basis_cocycles: basis,
    }
}

/// Cocycles whose classes form a basis of H^k(X; ℤ/2).
pub fn z2_cohomology_basis(x: &Arc<OrderedComplex>, k: usize) -> Vec<Cochain<Z2>> {
    let dk = x.coboundary_matrix_gf2(k);
    let mut span = Gf2Span::new();
    if k > 0 {
        let prev = x.coboundary_matrix_gf2(k - 1).transpose();
        for j in 0..prev.nrows() {
            span.insert(prev.row(j));
        }
    }
    let mut out = Vec::new();
    for z in Gf2Solver::new(&dk).kernel() {
        if span.insert(z) {
            let vals = z.to_bools().into_iter().map(|b| Z2::new(b as i64)).collect();
            out.push(Cochain::from_values(x, k, vals).unwrap());
        }
    }
    out
}

/// ker(d mod 4) / im(d mod 4), computed as a quotient of integer lattices.
fn cohomology_z4(x: &Arc<OrderedComplex>, k: usize) -> AbelianGroupPresentation {
    let n = x.count(k);
    let four = BigInt::from(4);
    // L1 = {v : d v ≡ 0 mod 4} has basis V⁻¹ diag(c) with c_j = 4/gcd(s_j, 4)
    let s = smith_normal_form(&x.coboundary_matrix_any(k));
    let scale: Vec<BigInt> =
        (0..n).map(|j| if j < s.rank() { &four / s.s.get(j, j).gcd(&four) } else { BigInt::one() }).collect();
    // L2 = im d^{k-1} + 4ℤⁿ, expressed in the L1 basis
    let prev = coboundary_before(x, k);
    let gens: Vec<Vec<BigInt>> = (0..prev.ncols())
        .map(|j| column(&prev, j))
        .chain((0..n).map(|i| {
            let mut e = vec![BigInt::zero(); n];
            e[i] = four.clone();
            e
        }))
        .collect();
    let mut m = IntMatrix::zeros(n, gens.len());
    for (c, g) in gens.iter().enumerate() {
        let y = s.v.mul_vec(g);
        for i in 0..n {
            debug_assert!(y[i].is_multiple_of(&scale[i]));
            m.set(i, c, &y[i] / &scale[i]);
        }
    }
    let q = smith_normal_form(&m);
    let mut torsion = Vec::new();
    let mut basis = Vec::new();
    for j in 0..q.rank() {
        let d = q.s.get(j, j);
        if d.is_one() {
            continue;
        }
        // generator: L1-basis vector (U_q)_j mapped back to cochain coordinates
        let uj = column(&q.u, j);
        let coords: Vec<BigInt> = uj.iter().zip(&scale).map(|(a, c)| a * c).collect();
        let v = s.v_inv.mul_vec(&coords);
        let vals = v.iter().map(|c| Z4::new(c.mod_floor(&four).try_into().unwrap())).collect();
        torsion.push(d.clone());
        basis.push(AnyCochain::Z4(Cochain::from_values(x, k, vals).unwrap()));
    }
    AbelianGroupPresentation { free_rank: 0, circle_rank: 0, torsion, basis_cocycles: basis }
}

/// H^k(X; ℚ/ℤ) ≅ Hom(H_k(X; ℤ), ℚ/ℤ).
fn cohomology_qz(x: &Arc<OrderedComplex>, k: usize) -> AbelianGroupPresentation {
    let hb = homology_basis(x, k);
    let mut basis = Vec::new();
    // circle directions: integral cocycles dual to the free cycles
    if !hb.free.is_empty() {
        let dk = x.coboundary_matrix_any(k);
        let n = x.count(k);
        let rows = dk.nrows();
        let mut m = IntMatrix::zeros(rows + hb.free.len(), n);
        for i in 0..rows {
            for j in 0..n {
                m.set(i, j, dk.get(i, j).clone());
            }
        }
        for (r, z) in hb.free.iter().enumerate() {
            for j in 0..n {
                m.set(rows + r, j, z[j].clone());
            }
        }
        for r in 0..hb.free.len() {
            let mut rhs = vec![BigInt::zero(); rows + hb.free.len()];
            rhs[rows + r] = BigInt::one();
            let f = solve_integer(&m, &rhs).expect("free cycles admit dual integral cocycles");
            // stored integrally: a circle element is θ·f for θ ∈ ℚ/ℤ
            basis.push(to_i64_cochain(x, k, &f).into());
        }
    }
    // torsion: rows of U⁻¹ from the SNF of ∂_{k+1}, divided by the factor
    let sb = smith_normal_form(&x.boundary_matrix(k + 1));
    for j in 0..sb.rank() {
        let d = sb.s.get(j, j);
        if d.is_one() {
            continue;
        }
        let vals = sb.u_inv.row(j).iter().map(|c| Qz::from_big(c, d).unwrap()).collect();
        basis.push(AnyCochain::Qz(Cochain::from_values(x, k, vals).unwrap()));
    }
    AbelianGroupPresentation {
        free_rank: 0,
        circle_rank: hb.free.len(),
        torsion: hb.torsion.into_iter().map(|(d, _)| d).collect(),
        basis_cocycles: basis,
    }
}

/// ⟨f, z⟩ for a ℚ/ℤ cochain and an integral chain in the same basis.
pub fn pair_qz(f: &Cochain<Qz>, z: &[BigInt]) -> Qz {
    let mut acc = Qz::ZERO;
    for (v, c) in f.values().iter().zip(z) {
        if !v.is_zero() && !c.is_zero() {
            acc += v.times_big(c);
        }
    }
    acc
}

/// ⟨f, z⟩ mod 2 for a ℤ/2 cochain and an integral chain.
pub fn pair_z2(f: &Cochain<Z2>, z: &[BigInt]) -> Z2 {
    let mut acc = Z2::ZERO;
    for (v, c) in f.values().iter().zip(z) {
        if v.value() == 1 && c.is_odd() {
            acc += Z2::ONE;
        }
    }
    acc
}
