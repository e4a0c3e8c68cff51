//! Functors and natural transformations between finite categories.

use std::sync::Arc;

use crate::category::{same_category, terminal, FinCategory, Mor, Obj};
use crate::error::{Error, Result, Violation};

/// A functor between finite categories given by its object and morphism maps.
#[derive(Debug, Clone)]
pub struct FinFunctor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    obj_map: Vec<Obj>,
    mor_map: Vec<Mor>,
}

impl PartialEq for FinFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
            && same_category(&self.source, &other.source)
            && same_category(&self.target, &other.target)
    }
}

impl Eq for FinFunctor {}

impl FinFunctor {
    /// Builds a functor from index tables. Only table shapes are checked;
    /// the functor laws are checked by [`FinFunctor::validate`].
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        obj_map: Vec<Obj>,
        mor_map: Vec<Mor>,
    ) -> Result<Self> {
        if obj_map.len() != source.num_objects() || mor_map.len() != source.num_morphisms() {
            return Err(Error::IncompleteTable("functor tables do not cover the source".into()));
        }
        if obj_map.iter().any(|&x| x >= target.num_objects())
            || mor_map.iter().any(|&f| f >= target.num_morphisms())
        {
            return Err(Error::Invalid("functor image outside the target".into()));
        }
        Ok(FinFunctor {
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    /// Builds a functor from name tables.
    pub fn from_names(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        objects: &[(&str, &str)],
        morphisms: &[(&str, &str)],
    ) -> Result<Self> {
        let mut obj_map = vec![usize::MAX; source.num_objects()];
        for &(x, y) in objects {
            let i = source
                .object_index(x)
                .ok_or_else(|| Error::UnknownObject(x.into()))?;
            obj_map[i] = target
                .object_index(y)
                .ok_or_else(|| Error::UnknownObject(y.into()))?;
        }
        let mut mor_map = vec![usize::MAX; source.num_morphisms()];
        for &(f, g) in morphisms {
            let i = source
                .mor_index(f)
                .ok_or_else(|| Error::UnknownMorphism(f.into()))?;
            mor_map[i] = target
                .mor_index(g)
                .ok_or_else(|| Error::UnknownMorphism(g.into()))?;
        }
        if obj_map.contains(&usize::MAX) || mor_map.contains(&usize::MAX) {
            return Err(Error::IncompleteTable("functor tables do not cover the source".into()));
        }
        Self::new(source, target, obj_map, mor_map)
    }

    pub fn identity(c: &Arc<FinCategory>) -> Self {
        FinFunctor {
            source: c.clone(),
            target: c.clone(),
            obj_map: (0..c.num_objects()).collect(),
            mor_map: (0..c.num_morphisms()).collect(),
        }
    }

    /// The functor sending everything to `x` and its identity.
    pub fn constant(source: &Arc<FinCategory>, target: &Arc<FinCategory>, x: Obj) -> Self {
        FinFunctor {
            source: source.clone(),
            target: target.clone(),
            obj_map: vec![x; source.num_objects()],
            mor_map: vec![target.id(x); source.num_morphisms()],
        }
    }

    /// The functor `𝟙 → target` picking `x`.
    pub fn pick(target: &Arc<FinCategory>, x: Obj) -> Self {
        Self::constant(&Arc::new(terminal()), target, x)
    }

    /// The unique functor into the terminal category.
    pub fn to_terminal(source: &Arc<FinCategory>, terminal_cat: &Arc<FinCategory>) -> Self {
        Self::constant(source, terminal_cat, 0)
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn obj_map(&self) -> &[Obj] {
        &self.obj_map
    }

    pub fn mor_map(&self) -> &[Mor] {
        &self.mor_map
    }

    pub fn on_obj(&self, x: Obj) -> Obj {
        self.obj_map[x]
    }

    pub fn on_mor(&self, f: Mor) -> Mor {
        self.mor_map[f]
    }

    pub fn is_identity(&self) -> bool {
        same_category(&self.source, &self.target)
            && self.obj_map.iter().enumerate().all(|(i, &x)| i == x)
            && self.mor_map.iter().enumerate().all(|(i, &f)| i == f)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FinFunctor) -> Result<FinFunctor> {
        if !same_category(&self.target, &next.source) {
            return Err(Error::BoundaryMismatch(
                "functor target differs from the next source".into(),
            ));
        }
        Ok(FinFunctor {
            source: self.source.clone(),
            target: next.target.clone(),
            obj_map: self.obj_map.iter().map(|&x| next.obj_map[x]).collect(),
            mor_map: self.mor_map.iter().map(|&f| next.mor_map[f]).collect(),
        })
    }

    /// Checks typing, identities and composition.
    pub fn validate(&self) -> Vec<Violation> {
        let (a, b) = (&*self.source, &*self.target);
        let mut out = Vec::new();
        for f in 0..a.num_morphisms() {
            let g = self.mor_map[f];
            if b.dom(g) != self.obj_map[a.dom(f)] || b.cod(g) != self.obj_map[a.cod(f)] {
                out.push(Violation::new(
                    "functor typing",
                    format!("`{}` is sent to `{}` with the wrong boundary", a.mor_name(f), b.mor_name(g)),
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in 0..a.num_objects() {
            if self.mor_map[a.id(x)] != b.id(self.obj_map[x]) {
                out.push(Violation::new(
                    "functor identity",
                    format!("identity of `{}` is not preserved", a.object_name(x)),
                ));
            }
        }
        for f in 0..a.num_morphisms() {
            for g in a.out_of_object(a.cod(f)) {
                let lhs = self.mor_map[a.compose(g, f)];
                let rhs = b.compose(self.mor_map[g], self.mor_map[f]);
                if lhs != rhs {
                    out.push(Violation::new(
                        "functor composition",
                        format!("({}, {}) is not preserved", a.mor_name(g), a.mor_name(f)),
                    ));
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Whether the functor is an isomorphism of categories.
    pub fn is_isomorphism(&self) -> bool {
        let mut objs = self.obj_map.clone();
        objs.sort_unstable();
        objs.dedup();
        let mut mors = self.mor_map.clone();
        mors.sort_unstable();
        mors.dedup();
        objs.len() == self.target.num_objects()
            && objs.len() == self.obj_map.len()
            && mors.len() == self.target.num_morphisms()
            && mors.len() == self.mor_map.len()
    }

    /// The opposite functor `A^op → B^op`.
    pub fn opposite(&self, source_op: &Arc<FinCategory>, target_op: &Arc<FinCategory>) -> FinFunctor {
        let obj_map = (0..source_op.num_objects())
            .map(|x| {
                let y = self.obj_map[self.source.object_index(source_op.object_name(x)).unwrap()];
                target_op.object_index(self.target.object_name(y)).unwrap()
            })
            .collect();
        let mor_map = (0..source_op.num_morphisms())
            .map(|f| {
                let g = self.mor_map[self.source.mor_index(source_op.mor_name(f)).unwrap()];
                target_op.mor_index(self.target.mor_name(g)).unwrap()
            })
            .collect();
        FinFunctor {
            source: source_op.clone(),
            target: target_op.clone(),
            obj_map,
            mor_map,
        }
    }
}

/// All functors `a → b`, in lexicographic order of `(obj_map, mor_map)`.
pub fn enumerate_functors(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> Vec<FinFunctor> {
    let mut out = Vec::new();
    let n = a.num_objects();
    let mut obj_map = vec![0; n];
    if n > 0 && b.num_objects() == 0 {
        return out;
    }
    loop {
        let mut mor_map = vec![usize::MAX; a.num_morphisms()];
        assign_morphisms(a, b, &obj_map, &mut mor_map, 0, &mut out);
        if !crate::util::advance(&mut obj_map, &vec![b.num_objects(); n]) {
            break;
        }
    }
    out
}

fn assign_morphisms(
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
    obj_map: &[Obj],
    mor_map: &mut Vec<Mor>,
    k: usize,
    out: &mut Vec<FinFunctor>,
) {
    if k == a.num_morphisms() {
        out.push(FinFunctor {
            source: a.clone(),
            target: b.clone(),
            obj_map: obj_map.to_vec(),
            mor_map: mor_map.clone(),
        });
        return;
    }
    let (d, c) = (obj_map[a.dom(k)], obj_map[a.cod(k)]);
    let candidates: Vec<Mor> = if a.is_identity(k) {
        vec![b.id(d)]
    } else {
        b.hom(d, c).collect()
    };
    for cand in candidates {
        mor_map[k] = cand;
        if composition_ok_upto(a, b, mor_map, k) {
            assign_morphisms(a, b, obj_map, mor_map, k + 1, out);
        }
    }
    mor_map[k] = usize::MAX;
}

fn composition_ok_upto(a: &FinCategory, b: &FinCategory, mor_map: &[Mor], k: usize) -> bool {
    for f in 0..=k {
        for g in a.out_of_object(a.cod(f)) {
            if g > k {
                continue;
            }
            let h = a.compose(g, f);
            if h > k || (f != k && g != k && h != k) {
                continue;
            }
            if b.compose(mor_map[g], mor_map[f]) != mor_map[h] {
                return false;
            }
        }
    }
    true
}

/// A natural transformation between parallel functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransformation {
    source: FinFunctor,
    target: FinFunctor,
    components: Vec<Mor>,
}

impl NatTransformation {
    pub fn new(source: FinFunctor, target: FinFunctor, components: Vec<Mor>) -> Result<Self> {
        check_parallel(&source, &target)?;
        if components.len() != source.source.num_objects() {
            return Err(Error::IncompleteTable("one component per object is required".into()));
        }
        Ok(NatTransformation {
            source,
            target,
            components,
        })
    }

    pub fn identity(f: &FinFunctor) -> Self {
        let c = &f.target;
        NatTransformation {
            source: f.clone(),
            target: f.clone(),
            components: f.obj_map.iter().map(|&y| c.id(y)).collect(),
        }
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn components(&self) -> &[Mor] {
        &self.components
    }

    pub fn component(&self, x: Obj) -> Mor {
        self.components[x]
    }

    /// Checks component typing and every naturality square.
    pub fn validate(&self) -> Vec<Violation> {
        let a = &*self.source.source;
        let c = &*self.source.target;
        let mut out = Vec::new();
        for x in 0..a.num_objects() {
            let t = self.components[x];
            if c.dom(t) != self.source.on_obj(x) || c.cod(t) != self.target.on_obj(x) {
                out.push(Violation::new(
                    "component typing",
                    format!("component at `{}` has the wrong boundary", a.object_name(x)),
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in 0..a.num_morphisms() {
            if !square_commutes(&self.source, &self.target, &self.components, f) {
                out.push(Violation::new(
                    "naturality",
                    format!("square at `{}` does not commute", a.mor_name(f)),
                ));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &NatTransformation) -> Result<NatTransformation> {
        if self.target != other.source {
            return Err(Error::BoundaryMismatch("transformations are not composable".into()));
        }
        let c = &self.source.target;
        Ok(NatTransformation {
            source: self.source.clone(),
            target: other.target.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(&s, &t)| c.compose(t, s))
                .collect(),
        })
    }

    /// The inverse, when every component is invertible.
    pub fn inverse(&self) -> Option<NatTransformation> {
        let c = &self.source.target;
        let components = self
            .components
            .iter()
            .map(|&t| inverse_morphism(c, t))
            .collect::<Option<Vec<_>>>()?;
        Some(NatTransformation {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }

    /// Whiskering `h ∘ self` by a functor on the codomain side.
    pub fn whisker_after(&self, h: &FinFunctor) -> Result<NatTransformation> {
        Ok(NatTransformation {
            source: self.source.then(h)?,
            target: self.target.then(h)?,
            components: self.components.iter().map(|&t| h.on_mor(t)).collect(),
        })
    }

    /// Whiskering `self ∘ k` by a functor on the domain side.
    pub fn whisker_before(&self, k: &FinFunctor) -> Result<NatTransformation> {
        Ok(NatTransformation {
            source: k.then(&self.source)?,
            target: k.then(&self.target)?,
            components: k.obj_map.iter().map(|&x| self.components[x]).collect(),
        })
    }
}

/// The inverse of a morphism, if it has one.
pub fn inverse_morphism(c: &FinCategory, f: Mor) -> Option<Mor> {
    let (d, e) = (c.dom(f), c.cod(f));
    c.hom(e, d)
        .find(|&g| c.compose(g, f) == c.id(d) && c.compose(f, g) == c.id(e))
}

fn square_commutes(f: &FinFunctor, g: &FinFunctor, comps: &[Mor], m: Mor) -> bool {
    let a = &f.source;
    let c = &f.target;
    let (x, y) = (a.dom(m), a.cod(m));
    c.compose(g.on_mor(m), comps[x]) == c.compose(comps[y], f.on_mor(m))
}

fn check_parallel(f: &FinFunctor, g: &FinFunctor) -> Result<()> {
    if same_category(&f.source, &g.source) && same_category(&f.target, &g.target) {
        Ok(())
    } else {
        Err(Error::NotParallel)
    }
}

/// All natural transformations `f ⇒ g`, in lexicographic order of components.
pub fn enumerate_nat_transformations(
    f: &FinFunctor,
    g: &FinFunctor,
) -> Result<Vec<NatTransformation>> {
    check_parallel(f, g)?;
    let a = f.source.clone();
    let c = f.target.clone();
    let n = a.num_objects();
    // naturality squares are checked as soon as both ends of a morphism are assigned
    let mut ready: Vec<Vec<Mor>> = vec![Vec::new(); n];
    for m in 0..a.num_morphisms() {
        ready[a.dom(m).max(a.cod(m))].push(m);
    }
    let mut out = Vec::new();
    let mut comps = vec![0; n];
    fn go(
        x: usize,
        f: &FinFunctor,
        g: &FinFunctor,
        c: &FinCategory,
        ready: &[Vec<Mor>],
        comps: &mut Vec<Mor>,
        out: &mut Vec<NatTransformation>,
    ) {
        if x == comps.len() {
            out.push(NatTransformation {
                source: f.clone(),
                target: g.clone(),
                components: comps.clone(),
            });
            return;
        }
        for t in c.hom(f.on_obj(x), g.on_obj(x)) {
            comps[x] = t;
            if ready[x].iter().all(|&m| square_commutes(f, g, comps, m)) {
                go(x + 1, f, g, c, ready, comps, out);
            }
        }
    }
    go(0, f, g, &c, &ready, &mut comps, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{cyclic_group, preorder, walking_arrow};

    fn two() -> Arc<FinCategory> {
        Arc::new(walking_arrow())
    }

    #[test]
    fn identity_on_terminal_has_one_transformation() {
        let one = Arc::new(terminal());
        let id = FinFunctor::identity(&one);
        assert_eq!(enumerate_nat_transformations(&id, &id).unwrap().len(), 1);
    }

    #[test]
    fn constant_functors_into_arrow() {
        let c = two();
        let one = Arc::new(terminal());
        let at0 = FinFunctor::constant(&one, &c, 0);
        let at1 = FinFunctor::constant(&one, &c, 1);
        let ts = enumerate_nat_transformations(&at0, &at1).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(c.mor_name(ts[0].component(0)), "a");
        assert!(enumerate_nat_transformations(&at1, &at0).unwrap().is_empty());
    }

    #[test]
    fn non_parallel_is_an_error() {
        let c = two();
        let one = Arc::new(terminal());
        let f = FinFunctor::identity(&c);
        let g = FinFunctor::pick(&c, 0);
        assert_eq!(enumerate_nat_transformations(&f, &g), Err(Error::NotParallel));
        let _ = one;
    }

    #[test]
    fn enumerated_functors_are_valid() {
        let c = two();
        let fs = enumerate_functors(&c, &c);
        // identity, const 0, const 1
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(FinFunctor::is_valid));
        let z3 = Arc::new(cyclic_group(3));
        assert_eq!(enumerate_functors(&z3, &z3).len(), 3);
        let chain = Arc::new(preorder(["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap());
        // monotone maps of a 3-chain into itself
        assert_eq!(enumerate_functors(&chain, &chain).len(), 10);
    }

    #[test]
    fn broken_functor_is_reported() {
        let c = two();
        let f = FinFunctor::new(c.clone(), c.clone(), vec![0, 1], vec![0, 0, 0]).unwrap();
        assert!(!f.is_valid());
    }

    #[test]
    fn nat_transformations_compose_and_invert() {
        let c = two();
        let id = FinFunctor::identity(&c);
        let t = NatTransformation::identity(&id);
        assert!(t.is_valid());
        assert_eq!(t.then(&t).unwrap(), t);
        assert_eq!(t.inverse().unwrap(), t);
    }
}
