use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, q, Q};

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A finite reduced root system with chosen base, realized inside an ambient
/// lattice `Z^n`: roots are integer covectors, coroots integer vectors.
#[derive(Clone, Debug)]
pub struct RootSystem {
    rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    simple: Vec<usize>,
    coords: Vec<Vec<i64>>,
    negative_of: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    components: Vec<Vec<usize>>,
    highest: Vec<usize>,
    reflections: Vec<Vec<usize>>,
}

impl RootSystem {
    pub fn new(rank: usize, roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>>, simple: Vec<usize>) -> Result<Self> {
        if roots.len() != coroots.len() {
            return Err(Error::InvalidInput("roots and coroots differ in number".into()));
        }
        for v in roots.iter().chain(&coroots) {
            if v.len() != rank {
                return Err(Error::InvalidInput(format!("vector {v:?} does not have length {rank}")));
            }
        }
        let index: HashMap<&Vec<i64>, usize> = roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
        if index.len() != roots.len() {
            return Err(Error::InvalidInput("duplicate root".into()));
        }
        for (i, (a, c)) in roots.iter().zip(&coroots).enumerate() {
            if dot(a, c) != 2 {
                return Err(Error::NonCrystallographic(format!("root {i} pairs with its coroot to {}", dot(a, c))));
            }
        }
        for (i, a) in roots.iter().enumerate() {
            let double: Vec<i64> = a.iter().map(|x| 2 * x).collect();
            if index.contains_key(&double) {
                return Err(Error::NonCrystallographic(format!("root system is not reduced at root {i}")));
            }
        }

        let mut reflections = Vec::with_capacity(roots.len());
        for (i, (a, ac)) in roots.iter().zip(&coroots).enumerate() {
            let mut perm = Vec::with_capacity(roots.len());
            for (b, bc) in roots.iter().zip(&coroots) {
                let k = dot(b, ac);
                let img: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - k * y).collect();
                let Some(&j) = index.get(&img) else {
                    return Err(Error::NonCrystallographic(format!("reflection in root {i} does not permute the roots")));
                };
                let m = dot(a, bc);
                let cimg: Vec<i64> = bc.iter().zip(ac).map(|(x, y)| x - m * y).collect();
                if cimg != coroots[j] {
                    return Err(Error::NonCrystallographic(format!("reflection in root {i} does not permute the coroots")));
                }
                perm.push(j);
            }
            reflections.push(perm);
        }

        let negative_of = roots
            .iter()
            .map(|a| {
                let neg: Vec<i64> = a.iter().map(|x| -x).collect();
                index.get(&neg).copied().ok_or_else(|| Error::NonCrystallographic("root set is not symmetric".into()))
            })
            .collect::<Result<Vec<_>>>()?;

        let coords = simple_coordinates(&roots, &simple)?;
        let r = simple.len();
        let cartan: Vec<Vec<i64>> =
            (0..r).map(|i| (0..r).map(|j| dot(&roots[simple[i]], &coroots[simple[j]])).collect()).collect();

        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; r];
        for start in 0..r {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for j in 0..r {
                    if !seen[j] && cartan[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            components.push(comp);
        }

        let highest = components
            .iter()
            .map(|comp| {
                (0..roots.len())
                    .filter(|&a| {
                        coords[a].iter().all(|&c| c >= 0)
                            && coords[a].iter().enumerate().all(|(i, &c)| c == 0 || comp.contains(&i))
                    })
                    .max_by_key(|&a| coords[a].iter().sum::<i64>())
                    .expect("a component contains its simple roots")
            })
            .collect();

        Ok(RootSystem { rank, roots, coroots, simple, coords, negative_of, cartan, components, highest, reflections })
    }

    pub fn empty(rank: usize) -> Self {
        RootSystem::new(rank, vec![], vec![], vec![]).expect("empty system is valid")
    }

    /// The closed subsystem on `indices`, with positive system induced from
    /// this one. Returns the subsystem and the map from its root indices to
    /// ours.
    pub fn subsystem(&self, indices: &[usize]) -> Result<(RootSystem, Vec<usize>)> {
        let mut map: Vec<usize> = indices.to_vec();
        map.sort_unstable();
        map.dedup();
        let set: std::collections::HashSet<usize> = map.iter().copied().collect();
        for &a in &map {
            if !set.contains(&self.negative_of[a]) {
                return Err(Error::InvalidInput(format!("root subset is not symmetric at root {a}")));
            }
            for &b in &map {
                if !set.contains(&self.reflections[a][b]) {
                    return Err(Error::InvalidInput(format!("root subset is not closed under reflection in root {a}")));
                }
            }
        }
        let pos: Vec<usize> = map.iter().copied().filter(|&a| self.is_positive(a)).collect();
        let simple_parent: Vec<usize> = pos
            .iter()
            .copied()
            .filter(|&a| {
                !pos.iter().any(|&b| {
                    pos.iter().any(|&c| {
                        self.roots[b].iter().zip(&self.roots[c]).map(|(x, y)| x + y).eq(self.roots[a].iter().copied())
                    })
                })
            })
            .collect();
        let local = |p: usize| map.iter().position(|&m| m == p).expect("root lies in subset");
        let sub = RootSystem::new(
            self.rank,
            map.iter().map(|&a| self.roots[a].clone()).collect(),
            map.iter().map(|&a| self.coroots[a].clone()).collect(),
            simple_parent.iter().map(|&a| local(a)).collect(),
        )?;
        Ok((sub, map))
    }

    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// Root indices of the base, in order.
    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    /// Coordinates of root `i` in the base.
    pub fn coords(&self, i: usize) -> &[i64] {
        &self.coords[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.coords[i].iter().all(|&c| c >= 0)
    }

    pub fn positive_roots(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_positive(i)).collect()
    }

    pub fn height(&self, i: usize) -> i64 {
        self.coords[i].iter().sum()
    }

    pub fn negative_of(&self, i: usize) -> usize {
        self.negative_of[i]
    }

    /// `cartan[i][j] = <b_i, b_j^vee>` on the base.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Irreducible components, as lists of positions in [`RootSystem::simple`].
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Highest root (root index) of each component.
    pub fn highest_roots(&self) -> &[usize] {
        &self.highest
    }

    /// Permutation of the root list induced by the reflection in root `i`.
    pub fn reflection_perm(&self, i: usize) -> &[usize] {
        &self.reflections[i]
    }

    pub fn index_of(&self, covector: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == covector)
    }

    pub fn pairing(&self, i: usize, x: &[i64]) -> i64 {
        dot(&self.roots[i], x)
    }

    /// True iff every component has a simply laced path as Dynkin diagram.
    pub fn is_type_a(&self) -> bool {
        let r = self.simple.len();
        (0..r).all(|i| {
            let nbrs = (0..r).filter(|&j| j != i && self.cartan[i][j] != 0).count();
            nbrs <= 2 && (0..r).all(|j| j == i || self.cartan[i][j] == 0 || self.cartan[i][j] == -1)
        }) && self.components.iter().all(|c| {
            // a tree on |c| vertices has |c| - 1 edges
            let edges = c
                .iter()
                .flat_map(|&i| c.iter().map(move |&j| (i, j)))
                .filter(|&(i, j)| i < j && self.cartan[i][j] != 0)
                .count();
            edges + 1 == c.len()
        })
    }

    /// Matrix (rows) of a root permutation acting on the span of the roots,
    /// in base coordinates: column `j` is the image of the `j`-th simple root.
    pub fn base_matrix(&self, perm: &[usize]) -> Vec<Vec<Q>> {
        let r = self.simple.len();
        let mut m = vec![vec![Q::zero(); r]; r];
        for (j, &s) in self.simple.iter().enumerate() {
            for (i, &c) in self.coords[perm[s]].iter().enumerate() {
                m[i][j] = q(c);
            }
        }
        m
    }
}

fn simple_coordinates(roots: &[Vec<i64>], simple: &[usize]) -> Result<Vec<Vec<i64>>> {
    if let Some(&bad) = simple.iter().find(|&&s| s >= roots.len()) {
        return Err(Error::InvalidInput(format!("simple index {bad} out of range")));
    }
    let n = roots.first().map_or(0, |r| r.len());
    // rows: ambient coordinates; columns: simple roots
    let a: Vec<Vec<Q>> = (0..n).map(|k| simple.iter().map(|&s| q(roots[s][k])).collect()).collect();
    if rational::rank(&a) != simple.len() {
        return Err(Error::InvalidInput("simple roots are linearly dependent".into()));
    }
    roots
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let b: Vec<Q> = r.iter().map(|&x| q(x)).collect();
            let x = rational::solve(&a, simple.len(), &b)
                .ok_or_else(|| Error::InvalidInput(format!("root {i} is not in the span of the simple roots")))?;
            if x.iter().any(|v| !v.is_integer()) {
                return Err(Error::InvalidInput(format!("root {i} is not an integral combination of simple roots")));
            }
            let pos = x.iter().all(|v| !v.is_negative());
            let neg = x.iter().all(|v| !v.is_positive());
            if !(pos || neg) {
                return Err(Error::InvalidInput(format!("simple_indices do not form a base (root {i} has mixed signs)")));
            }
            Ok(x.iter().map(|v| i64::try_from(v.to_integer()).expect("small coordinate")).collect())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::new(
            2,
            vec![vec![2, -1], vec![-1, 2], vec![-2, 1], vec![-1, -1], vec![1, -2], vec![1, 1]],
            vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![-1, -1], vec![0, -1], vec![1, 1]],
            vec![0, 1],
        )
        .unwrap()
    }

    #[test]
    fn a2_structure() {
        let s = a2();
        assert_eq!(s.positive_roots(), vec![0, 1, 5]);
        assert_eq!(s.highest_roots(), &[5]);
        assert_eq!(s.components().len(), 1);
        assert!(s.is_type_a());
        assert_eq!(s.cartan(), &[vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn subsystem_of_a2() {
        let s = a2();
        let (sub, map) = s.subsystem(&[0, 2]).unwrap();
        assert_eq!(sub.len(), 2);
        assert_eq!(map, vec![0, 2]);
        assert_eq!(sub.simple(), &[0]);
        assert!(s.subsystem(&[0]).is_err());
    }

    #[test]
    fn rejects_bad_pairing_and_non_base() {
        assert!(matches!(
            RootSystem::new(1, vec![vec![1], vec![-1]], vec![vec![1], vec![-1]], vec![0]),
            Err(Error::NonCrystallographic(_))
        ));
        let s = RootSystem::new(
            2,
            vec![vec![2, -1], vec![-1, 2], vec![-2, 1], vec![-1, -1], vec![1, -2], vec![1, 1]],
            vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![-1, -1], vec![0, -1], vec![1, 1]],
            vec![0, 2],
        );
        assert!(s.is_err());
    }
}
