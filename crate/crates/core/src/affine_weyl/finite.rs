use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::abelian::{unimodular_inverse, Matrix};
use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::root_datum::{reflection_matrix, RootSystem};

/// The Weyl group of a root system, enumerated as permutations of the root
/// list. Element 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteWeylGroup {
    system: RootSystem,
    perms: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    mats: Vec<Matrix<i64>>,
    words: Vec<Vec<usize>>,
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
    lengths: Vec<usize>,
    reflections: Vec<usize>,
}

/// A reflection subgroup `W(Ψ)` for a closed subsystem `Ψ`, with `Ψ`'s own
/// base (positive roots induced from the ambient system).
#[derive(Clone, Debug)]
pub struct SubWeyl {
    pub system: RootSystem,
    /// Root `k` of `system` is root `map[k]` of the ambient system.
    pub map: Vec<usize>,
    /// Elements, as indices into the ambient group, sorted.
    pub elements: Vec<usize>,
}

impl SubWeyl {
    pub fn contains(&self, w: usize) -> bool {
        self.elements.binary_search(&w).is_ok()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

impl FiniteWeylGroup {
    pub fn new(system: &RootSystem) -> Self {
        let n = system.ambient_rank();
        let m = system.len();
        let simple: Vec<usize> = system.simple().to_vec();
        let id: Vec<usize> = (0..m).collect();
        let mut perms = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut mats = vec![Matrix::identity(n)];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let simple_mats: Vec<Matrix<i64>> = simple.iter().map(|&s| reflection_matrix(system, s)).collect();
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for (i, &s) in simple.iter().enumerate() {
                // w s_i: apply s_i first
                let sp = system.reflection_perm(s);
                let p: Vec<usize> = (0..m).map(|k| perms[w][sp[k]]).collect();
                if index.contains_key(&p) {
                    continue;
                }
                let k = perms.len();
                index.insert(p.clone(), k);
                perms.push(p);
                mats.push(mats[w].mul(&simple_mats[i]));
                let mut word = words[w].clone();
                word.push(i);
                words.push(word);
                queue.push_back(k);
            }
        }
        let size = perms.len();
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { (0..m).map(|k| a[b[k]]).collect() };
        let mult: Vec<Vec<usize>> =
            (0..size).map(|a| (0..size).map(|b| index[&compose(&perms[a], &perms[b])]).collect()).collect();
        let inv: Vec<usize> = (0..size).map(|a| (0..size).find(|&b| mult[a][b] == 0).expect("group")).collect();
        let lengths: Vec<usize> = perms
            .iter()
            .map(|p| (0..m).filter(|&a| system.is_positive(a) && !system.is_positive(p[a])).count())
            .collect();
        let reflections = (0..m).map(|a| index[system.reflection_perm(a)]).collect();
        FiniteWeylGroup { system: system.clone(), perms, index, mats, words, mult, inv, lengths, reflections }
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn perm(&self, w: usize) -> &[usize] {
        &self.perms[w]
    }

    /// Action of `w` on the ambient lattice `Z^n`.
    pub fn matrix(&self, w: usize) -> &Matrix<i64> {
        &self.mats[w]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inv[w]
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    /// A reduced word, as positions in the base.
    pub fn reduced_word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    /// Reflection in root `a`.
    pub fn reflection(&self, a: usize) -> usize {
        self.reflections[a]
    }

    /// Simple reflection at base position `i`.
    pub fn simple_reflection(&self, i: usize) -> usize {
        self.reflections[self.system.simple()[i]]
    }

    pub fn element_of_perm(&self, perm: &[usize]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// The element acting on roots as `g` does on `X_*` (covectors go to `b ∘ g^{-1}`).
    pub fn element_of_matrix(&self, g: &Matrix<i64>) -> Option<usize> {
        let g_inv = unimodular_inverse(g)?;
        let perm: Option<Vec<usize>> =
            (0..self.system.len()).map(|a| self.system.index_of(&g_inv.vec_mul(self.system.root(a)))).collect();
        self.element_of_perm(&perm?)
    }

    /// `f w f^{-1}` for a permutation `f` of the roots normalizing the group.
    pub fn conjugate_by_perm(&self, f: &[usize], w: usize) -> usize {
        let m = self.system.len();
        let mut f_inv = vec![0; m];
        for (i, &j) in f.iter().enumerate() {
            f_inv[j] = i;
        }
        let p: Vec<usize> = (0..m).map(|k| f[self.perms[w][f_inv[k]]]).collect();
        self.element_of_perm(&p).expect("permutation normalizes the Weyl group")
    }

    /// True iff `w^{-1}(a)` is a negative root.
    pub fn inverts(&self, w: usize, a: usize) -> bool {
        !self.system.is_positive(self.perms[self.inv[w]][a])
    }

    /// The subgroup generated by reflections in the closed subsystem on `roots`.
    pub fn subgroup(&self, roots: &[usize]) -> Result<SubWeyl> {
        let (system, map) = self.system.subsystem(roots)?;
        let gens: Vec<usize> = system.simple().iter().map(|&k| self.reflections[map[k]]).collect();
        let mut elements = BTreeSet::from([0usize]);
        let mut frontier = vec![0usize];
        while let Some(w) = frontier.pop() {
            for &g in &gens {
                let x = self.mult[w][g];
                if elements.insert(x) {
                    frontier.push(x);
                }
            }
        }
        Ok(SubWeyl { system, map, elements: elements.into_iter().collect() })
    }

    pub fn whole(&self) -> SubWeyl {
        let all: Vec<usize> = (0..self.system.len()).collect();
        self.subgroup(&all).expect("the full system is closed")
    }

    /// Matrix of `w` on the span of `sub`'s roots, in `sub`'s base coordinates.
    fn sub_matrix(&self, w: usize, sub: &SubWeyl) -> Vec<Vec<Q>> {
        let local: HashMap<usize, usize> = sub.map.iter().enumerate().map(|(k, &a)| (a, k)).collect();
        let perm: Vec<usize> = (0..sub.system.len()).map(|k| local[&self.perms[w][sub.map[k]]]).collect();
        sub.system.base_matrix(&perm)
    }

    /// No nonzero fixed vector on the reflection representation of `sub`.
    pub fn is_elliptic_in(&self, w: usize, sub: &SubWeyl) -> Result<bool> {
        if !sub.contains(w) {
            return Err(Error::InvalidInput("element does not lie in the reflection subgroup".into()));
        }
        let mut m = self.sub_matrix(w, sub);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= Q::from_integer(1.into());
        }
        Ok(rational::rank(&m) == sub.system.semisimple_rank())
    }

    pub fn conjugacy_class_in(&self, w: usize, sub: &SubWeyl) -> BTreeSet<usize> {
        sub.elements.iter().map(|&g| self.mul(self.mul(g, w), self.inv[g])).collect()
    }

    /// Every conjugate (within `sub`) is elliptic.
    pub fn is_cuspidal_in(&self, w: usize, sub: &SubWeyl) -> Result<bool> {
        for c in self.conjugacy_class_in(w, sub) {
            if !self.is_elliptic_in(c, sub)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Conjugate (within `sub`) to a product of all simple reflections of `sub` in some order.
    pub fn is_coxeter_in(&self, w: usize, sub: &SubWeyl) -> Result<bool> {
        if !sub.contains(w) {
            return Err(Error::InvalidInput("element does not lie in the reflection subgroup".into()));
        }
        let gens: Vec<usize> = sub.system.simple().iter().map(|&k| self.reflections[sub.map[k]]).collect();
        let class = self.conjugacy_class_in(w, sub);
        let mut found = false;
        permutations(gens.len(), &mut |order| {
            let c = order.iter().fold(0, |acc, &i| self.mul(acc, gens[i]));
            if class.contains(&c) {
                found = true;
            }
        });
        Ok(found)
    }
}

fn permutations(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], f: &mut dyn FnMut(&[usize])) {
        if cur.len() == used.len() {
            f(cur);
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, f);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], f);
}
