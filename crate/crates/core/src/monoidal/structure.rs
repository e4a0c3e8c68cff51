use std::collections::BTreeMap;
use std::sync::Arc;

use crate::category::{FinCategory, Mor, Obj, ProductCategory};
use crate::error::{Error, Result, Violation};
use crate::functor::FinFunctor;
use crate::util::{encode, tuples};

pub const DEFAULT_ARITY: usize = 3;

/// A two-level shape `(m_1, ..., m_n)`: the `n`-ary tensor of tensors of arities `m_i`.
pub type Shape = Vec<usize>;

/// All two-level shapes whose tensors have arity at most `bound`.
pub fn shapes(bound: usize) -> Vec<Shape> {
    (0..=bound)
        .flat_map(|n| tuples(&vec![bound + 1; n]))
        .filter(|m| m.iter().sum::<usize>() <= bound)
        .collect()
}

/// All three-level shapes `((k_11, ..), .., (k_n1, ..))` whose tensors, and
/// the tensors met while flattening them in either order, have arity at most `bound`.
pub fn three_level_shapes(bound: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for m in shapes(bound) {
        let width: usize = m.iter().sum();
        for ks in tuples(&vec![bound + 1; width]) {
            if ks.iter().sum::<usize>() > bound {
                continue;
            }
            let mut groups = Vec::with_capacity(m.len());
            let mut at = 0;
            for &mi in &m {
                groups.push(ks[at..at + mi].to_vec());
                at += mi;
            }
            if groups.iter().all(|g| g.iter().sum::<usize>() <= bound) {
                out.push(groups);
            }
        }
    }
    out
}

/// Renders `(2,1)` for a shape.
pub fn shape_name(shape: &[usize]) -> String {
    format!("({})", shape.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","))
}

fn nested_name(groups: &[Vec<usize>]) -> String {
    format!("({})", groups.iter().map(|g| shape_name(g)).collect::<Vec<_>>().join(","))
}

/// Splits a flat tuple into consecutive chunks of the given lengths.
pub(crate) fn chunks<'a, T>(shape: &[usize], flat: &'a [T]) -> Vec<&'a [T]> {
    let mut out = Vec::with_capacity(shape.len());
    let mut at = 0;
    for &m in shape {
        out.push(&flat[at..at + m]);
        at += m;
    }
    out
}

#[derive(Debug)]
struct Data {
    base: Arc<FinCategory>,
    bound: usize,
    tensor_obj: Vec<Vec<Obj>>,
    tensor_mor: Vec<Vec<Mor>>,
    assoc: BTreeMap<Shape, Vec<Mor>>,
    unitor: Vec<Mor>,
}

/// A lax monoidal structure on a finite category, unbiased and bounded in
/// arity: tensors `⊗_n: A^n → A` for `n ≤ N` (`⊗_0` picks the unit `e`),
/// associators `⊗_n(⊗x̲_1, .., ⊗x̲_n) → ⊗(x̲_1 .. x̲_n)` for every shape and
/// unitors `x → ⊗_1(x)`.
#[derive(Debug, Clone)]
pub struct MonoidalStructure(Arc<Data>);

impl PartialEq for MonoidalStructure {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base
                && self.0.bound == other.0.bound
                && self.0.tensor_obj == other.0.tensor_obj
                && self.0.tensor_mor == other.0.tensor_mor
                && self.0.assoc == other.0.assoc
                && self.0.unitor == other.0.unitor)
    }
}

impl Eq for MonoidalStructure {}

impl MonoidalStructure {
    /// Tabulates a structure from functions. Only index ranges are checked
    /// here; typing, functoriality, naturality and coherence are reported by
    /// [`validate`](Self::validate).
    pub fn new<T, M, A, U>(
        base: &Arc<FinCategory>,
        bound: usize,
        mut tensor: T,
        mut tensor_mor: M,
        mut assoc: A,
        mut unitor: U,
    ) -> Result<MonoidalStructure>
    where
        T: FnMut(&[Obj]) -> Obj,
        M: FnMut(&[Mor]) -> Mor,
        A: FnMut(&[usize], &[Obj]) -> Mor,
        U: FnMut(Obj) -> Mor,
    {
        let (no, nm) = (base.num_objects(), base.num_morphisms());
        if no == 0 {
            return Err(Error::Precondition("a monoidal category has a unit object".into()));
        }
        let obj_ok = |x: Obj| if x < no { Ok(x) } else { Err(Error::UnknownObject(format!("#{x}"))) };
        let mor_ok = |f: Mor| if f < nm { Ok(f) } else { Err(Error::UnknownMorphism(format!("#{f}"))) };
        let mut tensor_obj = Vec::with_capacity(bound + 1);
        let mut tmor = Vec::with_capacity(bound + 1);
        for n in 0..=bound {
            tensor_obj.push(tuples(&vec![no; n]).iter().map(|t| obj_ok(tensor(t))).collect::<Result<Vec<_>>>()?);
            tmor.push(tuples(&vec![nm; n]).iter().map(|t| mor_ok(tensor_mor(t))).collect::<Result<Vec<_>>>()?);
        }
        let mut table = BTreeMap::new();
        for s in shapes(bound) {
            let width: usize = s.iter().sum();
            let comps = tuples(&vec![no; width]).iter().map(|t| mor_ok(assoc(&s, t))).collect::<Result<Vec<_>>>()?;
            table.insert(s, comps);
        }
        let unitor = (0..no).map(|x| mor_ok(unitor(x))).collect::<Result<Vec<_>>>()?;
        Ok(MonoidalStructure(Arc::new(Data {
            base: base.clone(),
            bound,
            tensor_obj,
            tensor_mor: tmor,
            assoc: table,
            unitor,
        })))
    }

    /// The strict structure generated by a strictly associative and unital
    /// binary tensor: `⊗_n` is the iterated binary tensor, associators and
    /// unitors are identities.
    pub fn strict<T, M>(base: &Arc<FinCategory>, bound: usize, unit: Obj, tensor2: T, tensor2_mor: M) -> Result<MonoidalStructure>
    where
        T: Fn(Obj, Obj) -> Obj,
        M: Fn(Mor, Mor) -> Mor,
    {
        let fold_obj = |t: &[Obj]| t.iter().copied().reduce(&tensor2).unwrap_or(unit);
        let fold_mor = |t: &[Mor]| t.iter().copied().reduce(&tensor2_mor).unwrap_or_else(|| base.id(unit));
        MonoidalStructure::new(
            base,
            bound,
            fold_obj,
            fold_mor,
            |s, t| {
                let inner: Vec<Obj> = chunks(s, t).into_iter().map(fold_obj).collect();
                base.id(fold_obj(&inner))
            },
            |x| base.id(x),
        )
    }

    /// A discrete strict monoidal category from a monoid table on its objects.
    pub fn discrete_monoid(base: &Arc<FinCategory>, bound: usize, unit: Obj, mult: &[Vec<Obj>]) -> Result<MonoidalStructure> {
        if !base.is_discrete() {
            return Err(Error::Precondition("the base must be discrete".into()));
        }
        let obj = |f: Mor| base.dom(f);
        MonoidalStructure::strict(base, bound, unit, |x, y| mult[x][y], |f, g| base.id(mult[obj(f)][obj(g)]))
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.0.base
    }

    /// The arity bound `N`.
    pub fn bound(&self) -> usize {
        self.0.bound
    }

    pub fn unit(&self) -> Obj {
        self.0.tensor_obj[0][0]
    }

    fn check_arity(&self, n: usize) {
        assert!(n <= self.0.bound, "arity {n} exceeds the bound {}", self.0.bound);
    }

    pub fn tensor(&self, xs: &[Obj]) -> Obj {
        self.check_arity(xs.len());
        self.0.tensor_obj[xs.len()][encode(xs, &vec![self.0.base.num_objects(); xs.len()])]
    }

    pub fn tensor_mor(&self, fs: &[Mor]) -> Mor {
        self.check_arity(fs.len());
        self.0.tensor_mor[fs.len()][encode(fs, &vec![self.0.base.num_morphisms(); fs.len()])]
    }

    /// `⊗_n(⊗x̲_1, .., ⊗x̲_n)` for the chunks of `flat` given by `shape`.
    pub fn nested(&self, shape: &[usize], flat: &[Obj]) -> Obj {
        let inner: Vec<Obj> = chunks(shape, flat).into_iter().map(|c| self.tensor(c)).collect();
        self.tensor(&inner)
    }

    pub fn nested_mor(&self, shape: &[usize], flat: &[Mor]) -> Mor {
        let inner: Vec<Mor> = chunks(shape, flat).into_iter().map(|c| self.tensor_mor(c)).collect();
        self.tensor_mor(&inner)
    }

    /// The associator component `nested(shape, flat) → ⊗(flat)`.
    pub fn associator(&self, shape: &[usize], flat: &[Obj]) -> Mor {
        let comps = self.0.assoc.get(shape).unwrap_or_else(|| panic!("shape {} exceeds the bound", shape_name(shape)));
        comps[encode(flat, &vec![self.0.base.num_objects(); flat.len()])]
    }

    /// The unitor component `x → ⊗_1(x)`.
    pub fn unitor(&self, x: Obj) -> Mor {
        self.0.unitor[x]
    }

    /// Whether all associators and unitors are identities.
    pub fn is_strict(&self) -> bool {
        let c = &self.0.base;
        self.0.unitor.iter().all(|&f| c.is_identity(f)) && self.0.assoc.values().flatten().all(|&f| c.is_identity(f))
    }

    /// Whether all associators and unitors are invertible.
    pub fn is_pseudo(&self) -> bool {
        let c = &self.0.base;
        let inv = |f: &Mor| crate::functor::inverse_morphism(c, *f).is_some();
        self.0.unitor.iter().all(inv) && self.0.assoc.values().flatten().all(inv)
    }

    /// `⊗_n` as a functor out of the `n`-fold product.
    pub fn tensor_functor(&self, n: usize) -> Result<(ProductCategory, FinFunctor)> {
        if n > self.0.bound {
            return Err(Error::ArityExceeded { arity: n, bound: self.0.bound });
        }
        let p = ProductCategory::power(&self.0.base, n);
        let obj_map = (0..p.category.num_objects()).map(|x| self.tensor(p.object_tuple(x))).collect();
        let mor_map = (0..p.category.num_morphisms()).map(|f| self.tensor_mor(p.morphism_tuple(f))).collect();
        let f = FinFunctor::new(p.category.clone(), self.0.base.clone(), obj_map, mor_map)?;
        Ok((p, f))
    }

    fn name_objs(&self, xs: &[Obj]) -> String {
        format!("({})", xs.iter().map(|&x| self.0.base.object_name(x)).collect::<Vec<_>>().join(","))
    }

    /// Every failed instance of typing, functoriality of the tensors,
    /// naturality of associators and unitors, and the associativity and unit
    /// coherence axioms at every shape within the arity bound.
    pub fn validate(&self) -> Vec<Violation> {
        let c = &*self.0.base;
        let (no, nm, bound) = (c.num_objects(), c.num_morphisms(), self.0.bound);
        let mut out = Vec::new();
        for n in 0..=bound {
            for fs in tuples(&vec![nm; n]) {
                let t = self.tensor_mor(&fs);
                let d: Vec<Obj> = fs.iter().map(|&f| c.dom(f)).collect();
                let e: Vec<Obj> = fs.iter().map(|&f| c.cod(f)).collect();
                if c.dom(t) != self.tensor(&d) || c.cod(t) != self.tensor(&e) {
                    out.push(Violation::new("tensor typing", format!("⊗{} has the wrong boundary", self.name_mors(&fs))));
                }
            }
        }
        for (s, _) in self.0.assoc.iter() {
            let width: usize = s.iter().sum();
            for xs in tuples(&vec![no; width]) {
                let a = self.associator(s, &xs);
                if c.dom(a) != self.nested(s, &xs) || c.cod(a) != self.tensor(&xs) {
                    out.push(Violation::new(
                        "associator typing",
                        format!("shape {} at {} has the wrong boundary", shape_name(s), self.name_objs(&xs)),
                    ));
                }
            }
        }
        for x in 0..no {
            let i = self.unitor(x);
            if c.dom(i) != x || c.cod(i) != self.tensor(&[x]) {
                out.push(Violation::new("unitor typing", format!("at {} the unitor has the wrong boundary", c.object_name(x))));
            }
        }
        if !out.is_empty() {
            return out;
        }
        // functoriality of each ⊗_n
        let pairs: Vec<(Mor, Mor)> = (0..nm).flat_map(|g| c.into_object(c.dom(g)).map(move |f| (g, f))).collect();
        for n in 0..=bound {
            for xs in tuples(&vec![no; n]) {
                let ids: Vec<Mor> = xs.iter().map(|&x| c.id(x)).collect();
                if !c.is_identity(self.tensor_mor(&ids)) {
                    out.push(Violation::new("tensor identities", format!("⊗ of identities at {}", self.name_objs(&xs))));
                }
            }
            for idx in tuples(&vec![pairs.len(); n]) {
                let gs: Vec<Mor> = idx.iter().map(|&i| pairs[i].0).collect();
                let fs: Vec<Mor> = idx.iter().map(|&i| pairs[i].1).collect();
                let gf: Vec<Mor> = idx.iter().map(|&i| c.compose(pairs[i].0, pairs[i].1)).collect();
                if self.tensor_mor(&gf) != c.compose(self.tensor_mor(&gs), self.tensor_mor(&fs)) {
                    out.push(Violation::new(
                        "tensor composition",
                        format!("⊗{} ∘ ⊗{} ≠ ⊗ of the composites", self.name_mors(&gs), self.name_mors(&fs)),
                    ));
                }
            }
        }
        // naturality
        for (s, _) in self.0.assoc.iter() {
            let width: usize = s.iter().sum();
            for fs in tuples(&vec![nm; width]) {
                let d: Vec<Obj> = fs.iter().map(|&f| c.dom(f)).collect();
                let e: Vec<Obj> = fs.iter().map(|&f| c.cod(f)).collect();
                let lhs = c.compose(self.tensor_mor(&fs), self.associator(s, &d));
                let rhs = c.compose(self.associator(s, &e), self.nested_mor(s, &fs));
                if lhs != rhs {
                    out.push(Violation::new(
                        "associator naturality",
                        format!("shape {} at {}", shape_name(s), self.name_mors(&fs)),
                    ));
                }
            }
        }
        for f in 0..nm {
            let lhs = c.compose(self.tensor_mor(&[f]), self.unitor(c.dom(f)));
            let rhs = c.compose(self.unitor(c.cod(f)), f);
            if lhs != rhs {
                out.push(Violation::new("unitor naturality", format!("at {}", c.mor_name(f))));
            }
        }
        // associativity coherence
        for groups in three_level_shapes(bound) {
            let outer: Vec<usize> = groups.iter().map(|g| g.iter().sum()).collect();
            let middle: Vec<usize> = groups.iter().map(|g| g.len()).collect();
            let flat_k: Vec<usize> = groups.iter().flatten().copied().collect();
            let total: usize = flat_k.iter().sum();
            for xs in tuples(&vec![no; total]) {
                let per_i = chunks(&outer, &xs);
                let firsts: Vec<Mor> = groups.iter().zip(&per_i).map(|(g, xi)| self.associator(g, xi)).collect();
                let path_a = c.compose(self.associator(&outer, &xs), self.tensor_mor(&firsts));
                let ys: Vec<Obj> = chunks(&flat_k, &xs).into_iter().map(|t| self.tensor(t)).collect();
                let path_b = c.compose(self.associator(&flat_k, &xs), self.associator(&middle, &ys));
                if path_a != path_b {
                    out.push(Violation::new(
                        "associativity",
                        format!("shape {} at {}", nested_name(&groups), self.name_objs(&xs)),
                    ));
                }
            }
        }
        // unit coherence
        for n in 0..=bound {
            for xs in tuples(&vec![no; n]) {
                let id = c.id(self.tensor(&xs));
                let units: Vec<Mor> = xs.iter().map(|&x| self.unitor(x)).collect();
                let ones = vec![1; n];
                if c.compose(self.associator(&ones, &xs), self.tensor_mor(&units)) != id {
                    out.push(Violation::new("inner unit", format!("at {}", self.name_objs(&xs))));
                }
                if c.compose(self.associator(&[n], &xs), self.unitor(self.tensor(&xs))) != id {
                    out.push(Violation::new("outer unit", format!("at {}", self.name_objs(&xs))));
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn name_mors(&self, fs: &[Mor]) -> String {
        format!("({})", fs.iter().map(|&f| self.0.base.mor_name(f)).collect::<Vec<_>>().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{discrete, monoid, preorder, walking_arrow};

    pub(crate) fn z2() -> MonoidalStructure {
        let c = Arc::new(discrete(["0", "1"]));
        MonoidalStructure::discrete_monoid(&c, 3, 0, &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn shape_counts() {
        // shapes with n ≤ 1: (), (0), (1)
        assert_eq!(shapes(1), vec![vec![], vec![0], vec![1]]);
        assert!(shapes(3).contains(&vec![2, 1]));
        assert!(shapes(3).iter().all(|s| s.len() <= 3 && s.iter().sum::<usize>() <= 3));
        assert!(!three_level_shapes(3).contains(&vec![vec![2], vec![1, 1]]));
        assert!(three_level_shapes(3).contains(&vec![vec![2], vec![1]]));
        assert_eq!(shape_name(&[2, 1]), "(2,1)");
    }

    #[test]
    fn z2_is_strict_and_valid() {
        let m = z2();
        assert!(m.validate().is_empty());
        assert!(m.is_strict());
        assert_eq!(m.tensor(&[1, 1]), 0);
        assert_eq!(m.tensor(&[1, 1, 1]), 1);
        assert_eq!(m.unit(), 0);
        let (p, f) = m.tensor_functor(2).unwrap();
        assert!(f.is_valid());
        assert_eq!(f.on_obj(p.object(&[0, 1])), 1);
    }

    #[test]
    fn max_on_the_arrow_is_strict() {
        let c = Arc::new(walking_arrow());
        let join = |f: Mor, g: Mor| {
            let (d, e) = (c.dom(f).max(c.dom(g)), c.cod(f).max(c.cod(g)));
            c.hom(d, e).start
        };
        let m = MonoidalStructure::strict(&c, 3, 0, |x, y| x.max(y), join).unwrap();
        assert!(m.validate().is_empty());
    }

    #[test]
    fn non_natural_unitor_is_named() {
        // left-zero monoid {1, a, b}: a∘b = a and b∘a = b, so no non-identity endomorphism is central
        let c = Arc::new(monoid(&["1", "a", "b"], &[vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]]).unwrap());
        let a = c.mor_index("a").unwrap();
        let one = c.id(0);
        let m = MonoidalStructure::new(&c, 2, |_| 0, |fs| if fs.len() == 1 { fs[0] } else { one }, |_, _| one, |_| a).unwrap();
        let v = m.validate();
        assert!(v.iter().any(|v| v.rule == "unitor naturality"));
        let m = MonoidalStructure::new(&c, 2, |_| 0, |fs| if fs.len() == 1 { fs[0] } else { one }, |s, _| if s == [1] { a } else { one }, |_| one).unwrap();
        let v = m.validate();
        assert!(v.iter().any(|v| v.rule == "associator naturality" && v.detail.starts_with("shape (1)")));
    }

    #[test]
    fn non_associative_tensor_is_rejected() {
        // truncated subtraction is not associative
        let c = Arc::new(discrete(["0", "1", "2"]));
        let m = MonoidalStructure::strict(&c, 3, 0, |x, y| x.saturating_sub(y), |f, g| c.id(c.dom(f).saturating_sub(c.dom(g)))).unwrap();
        assert!(m.validate().iter().any(|v| v.rule == "associator typing"));
    }

    #[test]
    fn lax_constant_structure_on_the_arrow() {
        // every tensor is the top object; unitors 0 → 1 are not invertible
        let c = Arc::new(preorder(["0", "1"], &[("0", "1")]).unwrap());
        let top = 1;
        let to_top = |x: Obj| c.hom(x, top).start;
        let m = MonoidalStructure::new(&c, 3, |_| top, |_| c.id(top), |_, _| c.id(top), to_top).unwrap();
        assert!(m.validate().is_empty());
        assert!(!m.is_pseudo());
    }
}
