use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::abelian::unimodular_inverse;
use crate::affine_weyl::IwahoriWeyl;
use crate::error::{Error, Result};
use crate::rational::{self, q, Q};

/// Component of each simple affine reflection.
fn node_components(iw: &IwahoriWeyl) -> Vec<usize> {
    let g = iw.geometry();
    let mut comp = vec![0; g.simple_affine.len()];
    for (c, nodes) in g.components.iter().enumerate() {
        for &i in nodes {
            comp[i] = c;
        }
        comp[g.finite_count + c] = c;
    }
    comp
}

fn orbit_count(items: &[usize], perm: impl Fn(usize) -> usize) -> usize {
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for &x in items {
        if seen.contains(&x) {
            continue;
        }
        count += 1;
        let mut y = x;
        while seen.insert(y) {
            y = perm(y);
        }
    }
    count
}

/// The type `J` (indices into the simple affine reflections) of a σ-stable
/// special maximal parahoric containing the base alcove. For quasi-split
/// groups this is the set of finite simple reflections.
pub fn special_subset(iw: &IwahoriWeyl) -> Result<Vec<usize>> {
    let g = iw.geometry();
    let s = g.simple_affine.len();
    let perm = iw.sigma_action().affine_perm();
    let comp = node_components(iw);
    let ncomp = g.components.len();
    let comps: Vec<usize> = (0..ncomp).collect();
    let comp_orbits = orbit_count(&comps, |c| comp[perm[g.finite_count + c]]);

    let finite: Vec<usize> = (0..g.finite_count).collect();
    let mut candidates: Vec<Vec<usize>> = vec![finite.clone()];
    let mut rest: Vec<Vec<usize>> =
        (0u32..1 << s).map(|mask| (0..s).filter(|&k| mask >> k & 1 == 1).collect()).collect();
    rest.sort_by(|a: &Vec<usize>, b: &Vec<usize>| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    candidates.extend(rest.into_iter().filter(|j| *j != finite));

    for j in candidates {
        let set: BTreeSet<usize> = j.iter().copied().collect();
        if j.iter().any(|&k| !set.contains(&perm[k])) {
            continue;
        }
        let complement: Vec<usize> = (0..s).filter(|k| !set.contains(k)).collect();
        if (0..ncomp).any(|c| complement.iter().all(|&k| comp[k] != c)) {
            continue; // W_J would be infinite
        }
        if orbit_count(&complement, |k| perm[k]) != comp_orbits {
            continue;
        }
        if is_special(iw, &complement, &comp)? {
            return Ok(j);
        }
    }
    Err(Error::InvalidInput("no sigma-stable special vertex in the base alcove".into()))
}

/// Whether the barycenter of the facet spanned by the vertices `complement`
/// is a special point of the σ-fixed apartment.
fn is_special(iw: &IwahoriWeyl, complement: &[usize], comp: &[usize]) -> Result<bool> {
    let g = iw.geometry();
    let sys = iw.sigma_roots();
    let r = sys.semisimple_rank();
    if r == 0 {
        return Ok(true);
    }
    // the point, as values of the simple roots
    let mut y = vec![Q::zero(); r];
    for c in 0..g.components.len() {
        let verts: Vec<usize> = complement.iter().copied().filter(|&k| comp[k] == c).collect();
        let weight = Q::one() / q(verts.len() as i64);
        let theta = sys.coords(g.highest[c]);
        for &k in &verts {
            if k < g.finite_count {
                y[k] += weight.clone() / q(theta[k]);
            }
        }
    }
    // linear part of σ on the root span, in base coordinates
    let inv = unimodular_inverse(iw.sigma_action().ambient_matrix()).expect("unimodular");
    let mut a_minus_one = vec![vec![Q::zero(); r]; r];
    for (i, &b) in sys.simple().iter().enumerate() {
        let img = sys
            .index_of(&inv.vec_mul(sys.root(b)))
            .ok_or_else(|| Error::NonPinnedFrobenius("frobenius does not permute the affine root directions".into()))?;
        for (k, &c) in sys.coords(img).iter().enumerate() {
            a_minus_one[i][k] = q(c);
        }
        a_minus_one[i][i] -= Q::one();
    }
    let fixed = rational::nullspace(&a_minus_one, r);

    let mut classes: Vec<(Vec<Q>, bool)> = Vec::new();
    for b in sys.positive_roots() {
        let coords: Vec<Q> = sys.coords(b).iter().map(|&c| q(c)).collect();
        let restricted: Vec<Q> = fixed.iter().map(|d| rational::dot(&coords, d)).collect();
        if restricted.iter().all(|v| v.is_zero()) {
            continue;
        }
        let integral = rational::dot(&coords, &y).is_integer();
        match classes.iter_mut().find(|(dir, _)| rational::proportional(dir, &restricted)) {
            Some(entry) => entry.1 |= integral,
            None => classes.push((restricted, integral)),
        }
    }
    Ok(classes.iter().all(|(_, ok)| *ok))
}
