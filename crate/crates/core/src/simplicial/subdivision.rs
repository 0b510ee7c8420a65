use std::collections::HashMap;
use std::sync::Arc;

use super::{OrderedComplex, Simplex, SimplicialMap};

/// First barycentric subdivision together with the canonical projection
/// sending each barycenter to the greatest vertex of its simplex.
///
/// Vertices of X' are the simplices of X ordered by dimension, then
/// lexicographically; a simplex with vertices `a`, `b` gets the id `a|b`.
pub fn barycentric_subdivision(x: &Arc<OrderedComplex>) -> (Arc<OrderedComplex>, SimplicialMap) {
    let mut ids = Vec::new();
    let mut position: HashMap<Simplex, u32> = HashMap::new();
    let mut proj = Vec::new();
    for k in 0..=x.top_dim() {
        for s in x.simplices(k) {
            position.insert(s.clone(), ids.len() as u32);
            let names: Vec<&str> = s.iter().map(|&v| x.vertex_id(v)).collect();
            ids.push(names.join("|"));
            proj.push(*s.last().unwrap());
        }
    }

    // every full flag of every simplex; closure supplies the shorter flags
    let mut gens = Vec::new();
    for k in 1..=x.top_dim() {
        for s in x.simplices(k) {
            let mut perm: Vec<u32> = s.clone();
            for_each_permutation(&mut perm, 0, &mut |p| {
                let flag: Vec<u32> = (1..=p.len())
                    .map(|m| {
                        let mut f = p[..m].to_vec();
                        f.sort_unstable();
                        position[&f]
                    })
                    .collect();
                gens.push(flag);
            });
        }
    }
    let name = format!("{}'", x.name());
    let sub = Arc::new(OrderedComplex::new(name, ids, gens).expect("subdivision ids are unique"));
    let map = SimplicialMap::new(sub.clone(), x.clone(), proj).expect("canonical projection is ordered");
    (sub, map)
}

fn for_each_permutation(v: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        for_each_permutation(v, k + 1, f);
        v.swap(k, i);
    }
}
