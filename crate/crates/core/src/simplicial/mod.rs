//! Ordered simplicial complexes, signed chains and ordered simplicial maps.
//!
//! Vertices are identified by strings in the file formats and by their
//! position in the vertex order everywhere else. A simplex is the strictly
//! increasing list of its vertex positions.

pub(crate) mod io;
mod subdivision;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{BitMatrix, IntMatrix};

pub use io::{parse_complex, write_complex};
pub use subdivision::barycentric_subdivision;

/// Strictly increasing vertex positions.
pub type Simplex = Vec<u32>;

/// A finite simplicial complex whose vertex listing order is a total order.
#[derive(Clone)]
pub struct OrderedComplex {
    name: String,
    vertices: Vec<String>,
    vertex_index: HashMap<String, u32>,
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    // faces[k][j][i]: index of the i-th face of the j-th k-simplex
    faces: Vec<Vec<Vec<usize>>>,
    declared_cycle: Option<SignedChain>,
}

impl PartialEq for OrderedComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.simplices == other.simplices
    }
}

impl Eq for OrderedComplex {}

impl fmt::Debug for OrderedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderedComplex").field("name", &self.name).field("f_vector", &self.f_vector()).finish()
    }
}

impl OrderedComplex {
    /// Builds the closure of `generators` (each a set of vertex positions; order
    /// within a generator is irrelevant, it gets sorted).
    pub fn new<I>(name: impl Into<String>, vertices: Vec<String>, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i as u32).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let n = vertices.len() as u32;
        let mut sets: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new()];
        for v in 0..n {
            sets[0].insert(vec![v]);
        }
        for mut g in generators {
            g.sort_unstable();
            g.dedup();
            if g.is_empty() {
                continue;
            }
            if let Some(&bad) = g.iter().find(|&&v| v >= n) {
                return Err(Error::UnknownVertex(format!("#{bad}")));
            }
            add_closure(&mut sets, &g);
        }
        let simplices: Vec<Vec<Simplex>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Self::from_sorted(name.into(), vertices, vertex_index, simplices))
    }

    fn from_sorted(
        name: String,
        vertices: Vec<String>,
        vertex_index: HashMap<String, u32>,
        simplices: Vec<Vec<Simplex>>,
    ) -> Self {
        let index: Vec<HashMap<Simplex, usize>> =
            simplices.iter().map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        let mut faces = vec![Vec::new()];
        for k in 1..simplices.len() {
            let f = simplices[k]
                .iter()
                .map(|s| {
                    (0..s.len())
                        .map(|i| {
                            let mut t = s.clone();
                            t.remove(i);
                            index[k - 1][&t]
                        })
                        .collect()
                })
                .collect();
            faces.push(f);
        }
        OrderedComplex { name, vertices, vertex_index, simplices, index, faces, declared_cycle: None }
    }

    /// Same as [`OrderedComplex::new`] but with simplices given by vertex ids.
    pub fn from_ids(name: &str, vertices: &[&str], generators: &[&[&str]]) -> Result<Self> {
        let verts: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let pos: HashMap<&str, u32> = vertices.iter().enumerate().map(|(i, v)| (*v, i as u32)).collect();
        let mut gens = Vec::new();
        for g in generators {
            let mut s = Vec::new();
            for v in *g {
                s.push(*pos.get(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))?);
            }
            gens.push(s);
        }
        Self::new(name, verts, gens)
    }

    /// Attaches an explicit fundamental cycle (validated by [`fundamental_cycle`]).
    pub fn with_cycle(mut self, cycle: SignedChain) -> Self {
        self.declared_cycle = Some(cycle);
        self
    }

    pub fn declared_cycle(&self) -> Option<&SignedChain> {
        self.declared_cycle.as_ref()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_id(&self, pos: u32) -> &str {
        &self.vertices[pos as usize]
    }

    pub fn vertex_position(&self, id: &str) -> Option<u32> {
        self.vertex_index.get(id).copied()
    }

    pub fn top_dim(&self) -> usize {
        self.simplices.len() - 1
    }

    /// Number of k-simplices (0 above the top dimension).
    pub fn count(&self, k: usize) -> usize {
        self.simplices.get(k).map_or(0, |l| l.len())
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(|l| l.len()).collect()
    }

    /// The k-simplices in storage order (lexicographic); empty above top_dim.
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map_or(&[], |l| l.as_slice())
    }

    pub fn simplex(&self, k: usize, i: usize) -> &Simplex {
        &self.simplices[k][i]
    }

    /// Index of a simplex within its dimension.
    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        self.index.get(s.len() - 1)?.get(s).copied()
    }

    /// Indices of the faces of the j-th k-simplex, ordered by omitted vertex.
    pub fn faces(&self, k: usize, j: usize) -> &[usize] {
        &self.faces[k][j]
    }

    /// Maximal simplices (those that are not faces of another simplex).
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: Vec<Vec<bool>> = self.simplices.iter().map(|l| vec![false; l.len()]).collect();
        for k in 1..self.simplices.len() {
            for j in 0..self.simplices[k].len() {
                for &f in &self.faces[k][j] {
                    covered[k - 1][f] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (k, l) in self.simplices.iter().enumerate() {
            for (j, s) in l.iter().enumerate() {
                if !covered[k][j] {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Human-readable label `(a,b,c)` using vertex ids.
    pub fn label(&self, s: &[u32]) -> String {
        let ids: Vec<&str> = s.iter().map(|&v| self.vertex_id(v)).collect();
        format!("({})", ids.join(","))
    }

    /// Simplex from vertex ids (must be present and listed increasingly).
    pub fn simplex_from_ids(&self, ids: &[&str]) -> Result<Simplex> {
        let mut s = Vec::with_capacity(ids.len());
        for id in ids {
            s.push(self.vertex_position(id).ok_or_else(|| Error::UnknownVertex(id.to_string()))?);
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasing(ids.join(" ")));
        }
        if self.index_of(&s).is_none() {
            return Err(Error::UnknownSimplex(ids.join(",")));
        }
        Ok(s)
    }

    /// Matrix of d: C^k -> C^{k+1}; rows are (k+1)-simplices, columns k-simplices.
    pub fn coboundary_matrix(&self, k: usize) -> Result<IntMatrix> {
        if k >= self.top_dim() {
            return Err(Error::DegreeOutOfRange { degree: k, top_dim: self.top_dim() });
        }
        Ok(self.coboundary_matrix_any(k))
    }

    /// Like [`coboundary_matrix`](Self::coboundary_matrix) but defined in every
    /// degree; above the top dimension the matrix has zero rows or columns.
    pub fn coboundary_matrix_any(&self, k: usize) -> IntMatrix {
        let rows = self.count(k + 1);
        let cols = self.count(k);
        let mut m = IntMatrix::zeros(rows, cols);
        for j in 0..rows {
            for (i, &f) in self.faces[k + 1][j].iter().enumerate() {
                m.set(j, f, if i % 2 == 0 { BigInt::one() } else { -BigInt::one() });
            }
        }
        m
    }

    /// The coboundary d: C^k -> C^{k+1} reduced mod 2.
    pub fn coboundary_matrix_gf2(&self, k: usize) -> BitMatrix {
        let rows = self.count(k + 1);
        let cols = self.count(k);
        let mut m = BitMatrix::zeros(rows, cols);
        for j in 0..rows {
            for &f in &self.faces[k + 1][j] {
                m.set(j, f, true);
            }
        }
        m
    }

    /// Boundary matrix of d_k: C_k -> C_{k-1} (the transpose of d^{k-1}).
    pub fn boundary_matrix(&self, k: usize) -> IntMatrix {
        if k == 0 {
            return IntMatrix::zeros(0, self.count(0));
        }
        self.coboundary_matrix_any(k - 1).transpose()
    }

    /// Simplicial boundary of a chain.
    pub fn boundary(&self, z: &SignedChain) -> Result<SignedChain> {
        let mut out = SignedChain::zero(z.degree.saturating_sub(1));
        if z.degree == 0 {
            return Ok(out);
        }
        for (s, c) in &z.terms {
            let j = self.index_of(s).ok_or_else(|| Error::UnknownSimplex(self.label(s)))?;
            if s.len() != z.degree + 1 {
                return Err(Error::DegreeMismatch { expected: z.degree, found: s.len() - 1 });
            }
            for (i, &f) in self.faces[z.degree][j].iter().enumerate() {
                let face = self.simplices[z.degree - 1][f].clone();
                let coef = if i % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, coef);
            }
        }
        Ok(out)
    }
}

fn add_closure(sets: &mut Vec<BTreeSet<Simplex>>, g: &[u32]) {
    let k = g.len() - 1;
    while sets.len() <= k {
        sets.push(BTreeSet::new());
    }
    if sets[k].contains(g) {
        return;
    }
    sets[k].insert(g.to_vec());
    if k == 0 {
        return;
    }
    for i in 0..g.len() {
        let mut t = g.to_vec();
        t.remove(i);
        add_closure(sets, &t);
    }
}

/// Integer chain of a fixed degree; simplices absent from `terms` have
/// coefficient zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedChain {
    pub degree: usize,
    pub terms: BTreeMap<Simplex, BigInt>,
}

impl SignedChain {
    pub fn zero(degree: usize) -> Self {
        SignedChain { degree, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, s: Simplex, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(s) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn negate(&self) -> Self {
        SignedChain { degree: self.degree, terms: self.terms.iter().map(|(s, c)| (s.clone(), -c)).collect() }
    }

    pub fn coefficient(&self, s: &[u32]) -> BigInt {
        self.terms.get(s).cloned().unwrap_or_default()
    }
}

/// Returns the fundamental cycle of a closed pseudo-manifold: the declared one
/// (after validation) or one computed by orientation propagation.
pub fn fundamental_cycle(x: &OrderedComplex) -> Result<SignedChain> {
    match x.declared_cycle() {
        Some(z) => {
            validate_fundamental_cycle(x, z)?;
            Ok(z.clone())
        }
        None => propagate_orientation(x, 0),
    }
}

/// Checks that `z` has a ±1 coefficient on every top simplex and no boundary.
pub fn validate_fundamental_cycle(x: &OrderedComplex, z: &SignedChain) -> Result<()> {
    let n = x.top_dim();
    if z.degree != n {
        return Err(Error::InvalidCycle(format!("degree {} but top dimension {n}", z.degree)));
    }
    for s in x.simplices(n) {
        let c = z.coefficient(s);
        if c.abs() != BigInt::one() {
            return Err(Error::InvalidCycle(format!("coefficient {c} on {}", x.label(s))));
        }
    }
    if z.terms.len() != x.count(n) {
        return Err(Error::InvalidCycle("terms outside the complex".into()));
    }
    let b = x.boundary(z)?;
    if let Some((s, c)) = b.terms.iter().next() {
        return Err(Error::InvalidCycle(format!("boundary has coefficient {c} on {}", x.label(s))));
    }
    Ok(())
}

/// Orientation propagation from the `seed`-th top simplex (given +1).
pub fn propagate_orientation(x: &OrderedComplex, seed: usize) -> Result<SignedChain> {
    let n = x.top_dim();
    if n == 0 {
        if x.count(0) != 1 {
            return Err(Error::NotPseudoManifold("disconnected 0-complex".into()));
        }
        let mut z = SignedChain::zero(0);
        z.add_term(vec![0], BigInt::one());
        return Ok(z);
    }
    // (n-1)-face -> list of (top simplex, position of the face)
    let mut incidence: Vec<Vec<(usize, usize)>> = vec![Vec::new(); x.count(n - 1)];
    for j in 0..x.count(n) {
        for (i, &f) in x.faces(n, j).iter().enumerate() {
            incidence[f].push((j, i));
        }
    }
    for (f, inc) in incidence.iter().enumerate() {
        if inc.len() != 2 {
            return Err(Error::NotPseudoManifold(format!(
                "{} lies in {} top simplices",
                x.label(x.simplex(n - 1, f)),
                inc.len()
            )));
        }
    }
    let mut sign: Vec<i8> = vec![0; x.count(n)];
    sign[seed] = 1;
    let mut queue = VecDeque::from([seed]);
    while let Some(j) = queue.pop_front() {
        for (i, &f) in x.faces(n, j).iter().enumerate() {
            let &(other, oi) = incidence[f].iter().find(|&&(o, oi)| (o, oi) != (j, i)).unwrap();
            // boundary contributions must cancel: s_j (-1)^i + s_o (-1)^oi = 0
            let want = if (i + oi) % 2 == 0 { -sign[j] } else { sign[j] };
            if sign[other] == 0 {
                sign[other] = want;
                queue.push_back(other);
            } else if sign[other] != want {
                return Err(Error::NonOrientable);
            }
        }
    }
    if sign.contains(&0) {
        return Err(Error::NotPseudoManifold("top-dimensional adjacency graph is disconnected".into()));
    }
    let mut z = SignedChain::zero(n);
    for (j, s) in x.simplices(n).iter().enumerate() {
        z.terms.insert(s.clone(), BigInt::from(sign[j]));
    }
    Ok(z)
}

/// An order-preserving simplicial map between ordered complexes.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: Arc<OrderedComplex>,
    target: Arc<OrderedComplex>,
    vertex_map: Vec<u32>,
}

impl SimplicialMap {
    pub fn new(source: Arc<OrderedComplex>, target: Arc<OrderedComplex>, vertex_map: Vec<u32>) -> Result<Self> {
        if vertex_map.len() != source.num_vertices() {
            return Err(Error::InvalidMap("vertex map has the wrong length".into()));
        }
        if vertex_map.iter().any(|&v| v as usize >= target.num_vertices()) {
            return Err(Error::InvalidMap("vertex image outside the target".into()));
        }
        for k in 1..=source.top_dim() {
            for s in source.simplices(k) {
                let img: Vec<u32> = s.iter().map(|&v| vertex_map[v as usize]).collect();
                if img.windows(2).any(|w| w[0] > w[1]) {
                    return Err(Error::InvalidMap(format!("not order preserving on {}", source.label(s))));
                }
                let mut img = img;
                img.dedup();
                if target.index_of(&img).is_none() {
                    return Err(Error::InvalidMap(format!("image of {} is not a simplex", source.label(s))));
                }
            }
        }
        Ok(SimplicialMap { source, target, vertex_map })
    }

    pub fn identity(x: Arc<OrderedComplex>) -> Self {
        let n = x.num_vertices() as u32;
        SimplicialMap { source: x.clone(), target: x, vertex_map: (0..n).collect() }
    }

    pub fn source(&self) -> &Arc<OrderedComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<OrderedComplex> {
        &self.target
    }

    pub fn vertex_image(&self, v: u32) -> u32 {
        self.vertex_map[v as usize]
    }

    /// Image of a simplex, or `None` when it degenerates.
    pub fn image(&self, s: &[u32]) -> Option<Simplex> {
        let img: Vec<u32> = s.iter().map(|&v| self.vertex_map[v as usize]).collect();
        if img.windows(2).any(|w| w[0] == w[1]) {
            None
        } else {
            Some(img)
        }
    }
}
