//! Seeded generators of functors, profunctors, presheaves and cells over
//! small categories, for randomized property suites.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{FinCategory, Mor, Obj};
use crate::cell::{Cell, CellFrame};
use crate::enumerate::enumerate_cells;
use crate::finset::FinSet;
use crate::functor::{enumerate_functors, FinFunctor};
use crate::profunctor::Profunctor;
use crate::yoneda::Presheaf;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly chosen functor, if any exists.
pub fn random_functor(rng: &mut SeededRng, a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> Option<FinFunctor> {
    enumerate_functors(a, b).choose(rng).cloned()
}

#[derive(Clone, Copy)]
enum Var {
    Left(Mor, Obj, usize),
    Right(Obj, usize, Mor),
}

/// Action tables under construction; `None` marks an unassigned entry.
struct Tables<'a> {
    a: &'a FinCategory,
    b: &'a FinCategory,
    sizes: &'a [usize],
    lact: Vec<Vec<Option<usize>>>,
    ract: Vec<Vec<Option<usize>>>,
}

impl Tables<'_> {
    fn size(&self, x: Obj, y: Obj) -> usize {
        self.sizes[x * self.b.num_objects() + y]
    }

    fn lam(&self, f: Mor, y: Obj, u: usize) -> Option<usize> {
        if self.a.is_identity(f) {
            Some(u)
        } else {
            self.lact[f * self.b.num_objects() + y][u]
        }
    }

    fn rho(&self, x: Obj, u: usize, g: Mor) -> Option<usize> {
        if self.b.is_identity(g) {
            Some(u)
        } else {
            self.ract[g * self.a.num_objects() + x][u]
        }
    }

    fn set(&mut self, v: Var, val: Option<usize>) {
        let (na, nb) = (self.a.num_objects(), self.b.num_objects());
        match v {
            Var::Left(f, y, u) => self.lact[f * nb + y][u] = val,
            Var::Right(x, u, g) => self.ract[g * na + x][u] = val,
        }
    }

    fn range(&self, v: Var) -> usize {
        match v {
            Var::Left(f, y, _) => self.size(self.a.dom(f), y),
            Var::Right(x, _, g) => self.size(x, self.b.cod(g)),
        }
    }

    /// No fully determined instance of functoriality or of the
    /// commutation of the two actions fails.
    fn consistent(&self) -> bool {
        let (a, b) = (self.a, self.b);
        let eq = |l: Option<usize>, r: Option<usize>| !matches!((l, r), (Some(l), Some(r)) if l != r);
        for f1 in 0..a.num_morphisms() {
            for f2 in a.into_object(a.dom(f1)) {
                let f = a.compose(f1, f2);
                for y in 0..b.num_objects() {
                    for u in 0..self.size(a.cod(f1), y) {
                        if !eq(self.lam(f, y, u), self.lam(f1, y, u).and_then(|v| self.lam(f2, y, v))) {
                            return false;
                        }
                    }
                }
            }
        }
        for g1 in 0..b.num_morphisms() {
            for g2 in b.out_of_object(b.cod(g1)) {
                let g = b.compose(g2, g1);
                for x in 0..a.num_objects() {
                    for u in 0..self.size(x, b.dom(g1)) {
                        if !eq(self.rho(x, u, g), self.rho(x, u, g1).and_then(|v| self.rho(x, v, g2))) {
                            return false;
                        }
                    }
                }
            }
        }
        for f in 0..a.num_morphisms() {
            for g in 0..b.num_morphisms() {
                let (x, y) = (a.cod(f), b.dom(g));
                for u in 0..self.size(x, y) {
                    let l = self.rho(x, u, g).and_then(|v| self.lam(f, b.cod(g), v));
                    let r = self.lam(f, y, u).and_then(|v| self.rho(a.dom(f), v, g));
                    if !eq(l, r) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn solve(t: &mut Tables, vars: &[Var], i: usize, rng: &mut SeededRng, budget: &mut usize) -> bool {
    if i == vars.len() {
        return true;
    }
    let mut vals: Vec<usize> = (0..t.range(vars[i])).collect();
    vals.shuffle(rng);
    for v in vals {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        t.set(vars[i], Some(v));
        if t.consistent() && solve(t, vars, i + 1, rng, budget) {
            return true;
        }
    }
    t.set(vars[i], None);
    false
}

/// A random profunctor with at most `max_size` elements per pair, found by a
/// randomized backtracking search over the action tables. When repeated
/// attempts fail, falls back to constant sets with trivial actions.
pub fn random_profunctor(rng: &mut SeededRng, a: &Arc<FinCategory>, b: &Arc<FinCategory>, max_size: usize) -> Profunctor {
    let (na, nb) = (a.num_objects(), b.num_objects());
    for _ in 0..50 {
        let sizes: Vec<usize> = (0..na * nb).map(|_| rng.gen_range(0..=max_size)).collect();
        let mut t = Tables {
            a,
            b,
            sizes: &sizes,
            lact: (0..a.num_morphisms() * nb).map(|i| vec![None; sizes[a.cod(i / nb) * nb + i % nb]]).collect(),
            ract: (0..b.num_morphisms() * na).map(|i| vec![None; sizes[(i % na) * nb + b.dom(i / na)]]).collect(),
        };
        let mut vars = Vec::new();
        for f in (0..a.num_morphisms()).filter(|&f| !a.is_identity(f)) {
            for y in 0..nb {
                vars.extend((0..t.size(a.cod(f), y)).map(|u| Var::Left(f, y, u)));
            }
        }
        for g in (0..b.num_morphisms()).filter(|&g| !b.is_identity(g)) {
            for x in 0..na {
                vars.extend((0..t.size(x, b.dom(g))).map(|u| Var::Right(x, u, g)));
            }
        }
        let mut budget = 5000;
        if solve(&mut t, &vars, 0, rng, &mut budget) {
            let elems = sizes.iter().map(|&k| FinSet::numbered("e", k)).collect();
            let j = Profunctor::from_fn(
                a.clone(),
                b.clone(),
                elems,
                |f, y, u| t.lam(f, y, u).expect("solved"),
                |x, u, g| t.rho(x, u, g).expect("solved"),
            );
            debug_assert!(j.is_valid());
            return j;
        }
    }
    let k = rng.gen_range(0..=max_size);
    Profunctor::from_fn(a.clone(), b.clone(), vec![FinSet::numbered("e", k); na * nb], |_, _, u| u, |_, u, _| u)
}

/// A random presheaf with at most `max_size` elements per object.
pub fn random_presheaf(rng: &mut SeededRng, a: &Arc<FinCategory>, max_size: usize) -> Presheaf {
    let one = Arc::new(crate::category::terminal());
    Presheaf::from_profunctor(random_profunctor(rng, a, &one, max_size)).expect("profunctor into the terminal category")
}

/// A uniformly chosen cell in the frame, if the frame has any cells and
/// they can be enumerated within the enumeration limit.
pub fn random_cell(rng: &mut SeededRng, frame: &Arc<CellFrame>) -> Option<Cell> {
    enumerate_cells(frame).ok()?.choose(rng).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::categories;

    #[test]
    fn profunctors_are_valid() {
        let mut rng = seeded(7);
        let cs = categories();
        for _ in 0..40 {
            let (_, a) = cs.choose(&mut rng).unwrap();
            let (_, b) = cs.choose(&mut rng).unwrap();
            let j = random_profunctor(&mut rng, a, b, 2);
            assert!(j.validate().is_empty());
        }
    }

    #[test]
    fn presheaves_are_valid_and_varied() {
        let mut rng = seeded(11);
        let a = crate::corpus::category("chain3").unwrap();
        let ps: Vec<Presheaf> = (0..20).map(|_| random_presheaf(&mut rng, &a, 3)).collect();
        assert!(ps.iter().all(Presheaf::is_valid));
        let sizes: std::collections::BTreeSet<Vec<usize>> = ps.iter().map(|p| (0..3).map(|x| p.size(x)).collect()).collect();
        assert!(sizes.len() > 3);
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = crate::corpus::category("span").unwrap();
        let j1 = random_profunctor(&mut seeded(3), &a, &a, 2);
        let j2 = random_profunctor(&mut seeded(3), &a, &a, 2);
        assert_eq!(j1, j2);
    }
}
