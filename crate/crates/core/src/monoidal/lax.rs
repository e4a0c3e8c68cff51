use crate::category::{same_category, Mor, Obj};
use crate::error::{Error, Result, Violation};
use crate::functor::{inverse_morphism, FinFunctor, NatTransformation};
use crate::util::{encode, tuples};

use super::structure::{chunks, shape_name, shapes, MonoidalStructure};

/// Direction of the compositors of a monoidal functor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `⊗(f x̲) → f(⊗x̲)`.
    Lax,
    /// `f(⊗x̲) → ⊗(f x̲)`.
    Colax,
    /// Lax with invertible compositors.
    Pseudo,
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Flavor::Lax => "lax",
            Flavor::Colax => "colax",
            Flavor::Pseudo => "pseudo",
        })
    }
}

/// A functor between monoidal categories with compositors at every arity
/// `n ≤ N`, stored per object tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxMonoidalFunctor {
    functor: FinFunctor,
    source: MonoidalStructure,
    target: MonoidalStructure,
    flavor: Flavor,
    compositors: Vec<Vec<Mor>>,
}

impl LaxMonoidalFunctor {
    /// Tabulates compositors; `comp(x̲)` is a morphism of the target in the
    /// direction given by `flavor`.
    pub fn new<F>(
        functor: FinFunctor,
        source: MonoidalStructure,
        target: MonoidalStructure,
        flavor: Flavor,
        mut comp: F,
    ) -> Result<LaxMonoidalFunctor>
    where
        F: FnMut(&[Obj]) -> Mor,
    {
        if !same_category(functor.source(), source.base()) || !same_category(functor.target(), target.base()) {
            return Err(Error::BoundaryMismatch("functor and monoidal structures live on different categories".into()));
        }
        if source.bound() != target.bound() {
            return Err(Error::Precondition("source and target have different arity bounds".into()));
        }
        let no = source.base().num_objects();
        let nm = target.base().num_morphisms();
        let mut compositors = Vec::with_capacity(source.bound() + 1);
        for n in 0..=source.bound() {
            let row = tuples(&vec![no; n])
                .iter()
                .map(|t| {
                    let f = comp(t);
                    if f < nm {
                        Ok(f)
                    } else {
                        Err(Error::UnknownMorphism(format!("#{f}")))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            compositors.push(row);
        }
        Ok(LaxMonoidalFunctor {
            functor,
            source,
            target,
            flavor,
            compositors,
        })
    }

    /// A functor that commutes with the tensors on the nose, with identity compositors.
    pub fn strict(functor: FinFunctor, source: MonoidalStructure, target: MonoidalStructure) -> Result<LaxMonoidalFunctor> {
        let c = target.base().clone();
        let f = functor.clone();
        let s = source.clone();
        LaxMonoidalFunctor::new(functor, source, target, Flavor::Pseudo, move |xs| c.id(f.on_obj(s.tensor(xs))))
    }

    pub fn identity(m: &MonoidalStructure) -> LaxMonoidalFunctor {
        LaxMonoidalFunctor::strict(FinFunctor::identity(m.base()), m.clone(), m.clone()).expect("identity is strict")
    }

    pub fn functor(&self) -> &FinFunctor {
        &self.functor
    }

    pub fn source(&self) -> &MonoidalStructure {
        &self.source
    }

    pub fn target(&self) -> &MonoidalStructure {
        &self.target
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// The compositor at `x̲`, in the direction of the flavor.
    pub fn compositor(&self, xs: &[Obj]) -> Mor {
        self.compositors[xs.len()][encode(xs, &vec![self.source.base().num_objects(); xs.len()])]
    }

    /// For lax and pseudo functors, the inverse of the compositor, `f(⊗x̲) → ⊗(f x̲)`.
    pub fn inverse_compositor(&self, xs: &[Obj]) -> Option<Mor> {
        inverse_morphism(self.target.base(), self.compositor(xs))
    }

    /// Whether every compositor is invertible.
    pub fn compositors_invertible(&self) -> bool {
        let no = self.source.base().num_objects();
        (0..=self.source.bound()).all(|n| tuples(&vec![no; n]).iter().all(|t| self.inverse_compositor(t).is_some()))
    }

    /// The same data with another flavor label; validation decides whether it fits.
    pub fn with_flavor(&self, flavor: Flavor) -> LaxMonoidalFunctor {
        LaxMonoidalFunctor {
            flavor,
            ..self.clone()
        }
    }

    /// A pseudo functor viewed as colax, with inverted compositors.
    pub fn to_colax(&self) -> Result<LaxMonoidalFunctor> {
        match self.flavor {
            Flavor::Colax => Ok(self.clone()),
            Flavor::Lax => Err(Error::Precondition("a lax functor is colax only when its compositors are invertible".into())),
            Flavor::Pseudo => {
                let inv = |t: &[Obj]| self.inverse_compositor(t).ok_or_else(|| Error::Precondition("pseudo compositor is not invertible".into()));
                let mut compositors = Vec::with_capacity(self.compositors.len());
                for n in 0..=self.source.bound() {
                    compositors.push(tuples(&vec![self.source.base().num_objects(); n]).iter().map(|t| inv(t)).collect::<Result<Vec<_>>>()?);
                }
                Ok(LaxMonoidalFunctor {
                    flavor: Flavor::Colax,
                    compositors,
                    ..self.clone()
                })
            }
        }
    }

    /// `next ∘ self`, with compositors `next(f_⊘) ∘ next_⊘(f x̲)` in the lax
    /// case and `next_⊘(f x̲) ∘ next(f_⊘)` in the colax case.
    pub fn then(&self, next: &LaxMonoidalFunctor) -> Result<LaxMonoidalFunctor> {
        if self.target != next.source {
            return Err(Error::BoundaryMismatch("monoidal functors are not composable".into()));
        }
        let colax = |fl: Flavor| fl == Flavor::Colax;
        if colax(self.flavor) != colax(next.flavor) {
            return Err(Error::Precondition("cannot compose lax and colax functors".into()));
        }
        let flavor = match (self.flavor, next.flavor) {
            (Flavor::Pseudo, Flavor::Pseudo) => Flavor::Pseudo,
            (Flavor::Colax, _) => Flavor::Colax,
            _ => Flavor::Lax,
        };
        let e = next.target.base().clone();
        let fx = |xs: &[Obj]| -> Vec<Obj> { xs.iter().map(|&x| self.functor.on_obj(x)).collect() };
        LaxMonoidalFunctor::new(self.functor.then(&next.functor)?, self.source.clone(), next.target.clone(), flavor, |xs| {
            let outer = next.compositor(&fx(xs));
            let inner = next.functor.on_mor(self.compositor(xs));
            if flavor == Flavor::Colax {
                e.compose(outer, inner)
            } else {
                e.compose(inner, outer)
            }
        })
    }

    fn name_objs(&self, xs: &[Obj]) -> String {
        let a = self.source.base();
        format!("({})", xs.iter().map(|&x| a.object_name(x)).collect::<Vec<_>>().join(","))
    }

    /// Every failed typing, naturality, associativity and unit instance at
    /// arity at most `N`; pseudo functors also need invertible compositors.
    pub fn validate(&self) -> Vec<Violation> {
        let (a, c) = (self.source.base(), self.target.base());
        let f = &self.functor;
        let (ms, mt) = (&self.source, &self.target);
        let colax = self.flavor == Flavor::Colax;
        let fo = |xs: &[Obj]| -> Vec<Obj> { xs.iter().map(|&x| f.on_obj(x)).collect() };
        let mut out = Vec::new();
        for n in 0..=ms.bound() {
            for xs in tuples(&vec![a.num_objects(); n]) {
                let t = self.compositor(&xs);
                let (lo, hi) = (mt.tensor(&fo(&xs)), f.on_obj(ms.tensor(&xs)));
                let (d, e) = if colax { (hi, lo) } else { (lo, hi) };
                if c.dom(t) != d || c.cod(t) != e {
                    out.push(Violation::new("compositor typing", format!("at {}", self.name_objs(&xs))));
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for n in 0..=ms.bound() {
            for fs in tuples(&vec![a.num_morphisms(); n]) {
                let d: Vec<Obj> = fs.iter().map(|&g| a.dom(g)).collect();
                let e: Vec<Obj> = fs.iter().map(|&g| a.cod(g)).collect();
                let image: Vec<Mor> = fs.iter().map(|&g| f.on_mor(g)).collect();
                let (top, bottom) = (mt.tensor_mor(&image), f.on_mor(ms.tensor_mor(&fs)));
                let ok = if colax {
                    c.compose(top, self.compositor(&d)) == c.compose(self.compositor(&e), bottom)
                } else {
                    c.compose(bottom, self.compositor(&d)) == c.compose(self.compositor(&e), top)
                };
                if !ok {
                    let names: Vec<&str> = fs.iter().map(|&g| a.mor_name(g)).collect();
                    out.push(Violation::new("compositor naturality", format!("at ({})", names.join(","))));
                }
            }
        }
        for s in shapes(ms.bound()) {
            let width: usize = s.iter().sum();
            for xs in tuples(&vec![a.num_objects(); width]) {
                let parts = chunks(&s, &xs);
                let inner: Vec<Mor> = parts.iter().map(|p| self.compositor(p)).collect();
                let tensored: Vec<Obj> = parts.iter().map(|p| ms.tensor(p)).collect();
                let ok = if colax {
                    let lhs = c.compose(mt.associator(&s, &fo(&xs)), c.compose(mt.tensor_mor(&inner), self.compositor(&tensored)));
                    lhs == c.compose(self.compositor(&xs), f.on_mor(ms.associator(&s, &xs)))
                } else {
                    let lhs = c.compose(f.on_mor(ms.associator(&s, &xs)), c.compose(self.compositor(&tensored), mt.tensor_mor(&inner)));
                    lhs == c.compose(self.compositor(&xs), mt.associator(&s, &fo(&xs)))
                };
                if !ok {
                    out.push(Violation::new("compositor associativity", format!("shape {} at {}", shape_name(&s), self.name_objs(&xs))));
                }
            }
        }
        for x in 0..a.num_objects() {
            let ok = if colax {
                c.compose(self.compositor(&[x]), f.on_mor(ms.unitor(x))) == mt.unitor(f.on_obj(x))
            } else {
                f.on_mor(ms.unitor(x)) == c.compose(self.compositor(&[x]), mt.unitor(f.on_obj(x)))
            };
            if !ok {
                out.push(Violation::new("compositor unit", format!("at {}", a.object_name(x))));
            }
        }
        if self.flavor == Flavor::Pseudo {
            for n in 0..=ms.bound() {
                for xs in tuples(&vec![a.num_objects(); n]) {
                    if self.inverse_compositor(&xs).is_none() {
                        out.push(Violation::new("pseudo", format!("compositor at {} is not invertible", self.name_objs(&xs))));
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

/// The axiom making `ξ: f ⇒ g` a monoidal transformation: for lax functors
/// `g_⊘ ∘ ⊗(ξ_x̲) = ξ_{⊗x̲} ∘ f_⊘`, for colax ones `⊗(ξ_x̲) ∘ f_⊘ = g_⊘ ∘ ξ_{⊗x̲}`.
pub fn validate_monoidal_transformation(xi: &NatTransformation, f: &LaxMonoidalFunctor, g: &LaxMonoidalFunctor) -> Vec<Violation> {
    if xi.source() != f.functor() || xi.target() != g.functor() {
        return vec![Violation::new("transformation typing", "the transformation does not go between the underlying functors")];
    }
    if f.source() != g.source() || f.target() != g.target() || (f.flavor() == Flavor::Colax) != (g.flavor() == Flavor::Colax) {
        return vec![Violation::new("transformation typing", "the monoidal functors are not parallel")];
    }
    let mut out = xi.validate();
    if !out.is_empty() {
        return out;
    }
    let (a, c) = (f.source().base(), f.target().base());
    let (ms, mt) = (f.source(), f.target());
    for n in 0..=ms.bound() {
        for xs in tuples(&vec![a.num_objects(); n]) {
            let comps: Vec<Mor> = xs.iter().map(|&x| xi.component(x)).collect();
            let whole = xi.component(ms.tensor(&xs));
            let ok = if f.flavor() == Flavor::Colax {
                c.compose(mt.tensor_mor(&comps), f.compositor(&xs)) == c.compose(g.compositor(&xs), whole)
            } else {
                c.compose(g.compositor(&xs), mt.tensor_mor(&comps)) == c.compose(whole, f.compositor(&xs))
            };
            if !ok {
                let names: Vec<&str> = xs.iter().map(|&x| a.object_name(x)).collect();
                out.push(Violation::new("monoidal transformation", format!("at ({})", names.join(","))));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{discrete, preorder, terminal};
    use std::sync::Arc;

    fn arc<T>(t: T) -> Arc<T> {
        Arc::new(t)
    }

    fn z2() -> MonoidalStructure {
        let c = arc(discrete(["0", "1"]));
        MonoidalStructure::discrete_monoid(&c, 3, 0, &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    /// `(2, max, 0)` on the walking arrow.
    fn arrow_max() -> MonoidalStructure {
        let c = arc(preorder(["0", "1"], &[("0", "1")]).unwrap());
        let cc = c.clone();
        MonoidalStructure::strict(&c, 3, 0, |x, y| x.max(y), move |f, g| {
            cc.hom(cc.dom(f).max(cc.dom(g)), cc.cod(f).max(cc.cod(g))).start
        })
        .unwrap()
    }

    #[test]
    fn identity_is_valid() {
        for m in [z2(), arrow_max()] {
            let id = LaxMonoidalFunctor::identity(&m);
            assert!(id.validate().is_empty());
            assert!(id.compositors_invertible());
            let twice = id.then(&id).unwrap();
            assert!(twice.validate().is_empty());
        }
    }

    #[test]
    fn constant_top_is_lax_not_pseudo() {
        let m = arrow_max();
        let c = m.base().clone();
        let top = FinFunctor::constant(&c, &c, 1);
        let f = LaxMonoidalFunctor::new(top, m.clone(), m.clone(), Flavor::Lax, |xs| c.hom(m.tensor(&vec![1; xs.len()]), 1).start).unwrap();
        assert!(f.validate().is_empty());
        assert!(!f.compositors_invertible());
        assert!(f.with_flavor(Flavor::Pseudo).validate().iter().any(|v| v.rule == "pseudo"));
        assert!(f.to_colax().is_err());
    }

    #[test]
    fn wrong_direction_is_typing_violation() {
        let m = arrow_max();
        let c = m.base().clone();
        let top = FinFunctor::constant(&c, &c, 1);
        let f = LaxMonoidalFunctor::new(top, m.clone(), m.clone(), Flavor::Lax, |_| c.id(1)).unwrap();
        assert!(f.validate().iter().any(|v| v.rule == "compositor typing"));
    }

    #[test]
    fn terminal_functor_is_strict() {
        let m = arrow_max();
        let one = arc(terminal());
        let t = MonoidalStructure::strict(&one, 3, 0, |_, _| 0, |_, _| 0).unwrap();
        let bang = FinFunctor::constant(m.base(), &one, 0);
        let f = LaxMonoidalFunctor::strict(bang, m.clone(), t).unwrap();
        assert!(f.validate().is_empty());
        let colax = f.to_colax().unwrap();
        assert!(colax.validate().is_empty());
    }

    #[test]
    fn monoidal_transformations() {
        let m = arrow_max();
        let id = LaxMonoidalFunctor::identity(&m);
        let xi = NatTransformation::identity(id.functor());
        assert!(validate_monoidal_transformation(&xi, &id, &id).is_empty());
        // 0 → 1 into the constant-top lax functor
        let c = m.base().clone();
        let top = LaxMonoidalFunctor::new(FinFunctor::constant(&c, &c, 1), m.clone(), m.clone(), Flavor::Lax, |xs| {
            c.hom(m.tensor(&vec![1; xs.len()]), 1).start
        })
        .unwrap();
        let up = NatTransformation::new(id.functor().clone(), top.functor().clone(), (0..2).map(|x| c.hom(x, 1).start).collect()).unwrap();
        assert!(validate_monoidal_transformation(&up, &id, &top).is_empty());
    }
}
