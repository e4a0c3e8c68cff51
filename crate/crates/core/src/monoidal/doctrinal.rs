use crate::error::{Error, Result, Violation};
use crate::functor::{FinFunctor, NatTransformation};
use crate::universal::CheckResult;

use super::lax::{validate_monoidal_transformation, Flavor, LaxMonoidalFunctor};

/// The failures of `εf ∘ fη = id_f` and `gε ∘ ηg = id_g` for `f ⊣ g` with
/// unit `η: id ⇒ gf` and counit `ε: fg ⇒ id`.
pub fn triangle_identities(f: &FinFunctor, g: &FinFunctor, unit: &NatTransformation, counit: &NatTransformation) -> Vec<Violation> {
    let (a, b) = (f.source(), f.target());
    let mut out = Vec::new();
    if g.source() != b || g.target() != a {
        return vec![Violation::new("adjunction typing", "the functors do not go back and forth")];
    }
    let gf = match f.then(g) {
        Ok(h) => h,
        Err(e) => return vec![Violation::new("adjunction typing", e.to_string())],
    };
    let fg = match g.then(f) {
        Ok(h) => h,
        Err(e) => return vec![Violation::new("adjunction typing", e.to_string())],
    };
    if *unit.source() != FinFunctor::identity(a) || *unit.target() != gf {
        out.push(Violation::new("adjunction typing", "the unit is not id ⇒ gf"));
    }
    if *counit.source() != fg || *counit.target() != FinFunctor::identity(b) {
        out.push(Violation::new("adjunction typing", "the counit is not fg ⇒ id"));
    }
    if !out.is_empty() {
        return out;
    }
    for x in 0..a.num_objects() {
        let fx = f.on_obj(x);
        if b.compose(counit.component(fx), f.on_mor(unit.component(x))) != b.id(fx) {
            out.push(Violation::new("left triangle", format!("at {}", a.object_name(x))));
        }
    }
    for y in 0..b.num_objects() {
        let gy = g.on_obj(y);
        if a.compose(g.on_mor(counit.component(y)), unit.component(gy)) != a.id(gy) {
            out.push(Violation::new("right triangle", format!("at {}", b.object_name(y))));
        }
    }
    out
}

/// The lax structure created on the right adjoint `g` of a pseudo monoidal
/// `f`: `g_⊘(y̲) = g(⊗ε̲) ∘ g(f_⊘⁻¹(g y̲)) ∘ η(⊗ g y̲)`.
pub fn doctrinal_right_adjoint(
    f: &LaxMonoidalFunctor,
    g: &FinFunctor,
    unit: &NatTransformation,
    counit: &NatTransformation,
) -> Result<LaxMonoidalFunctor> {
    if f.flavor() == Flavor::Colax || !f.compositors_invertible() {
        return Err(Error::Precondition("the left adjoint must be pseudo monoidal".into()));
    }
    if let Some(v) = triangle_identities(f.functor(), g, unit, counit).first() {
        return Err(Error::Precondition(format!("not an adjunction: {v}")));
    }
    let (ma, mb) = (f.source(), f.target());
    let a = ma.base().clone();
    LaxMonoidalFunctor::new(g.clone(), mb.clone(), ma.clone(), Flavor::Lax, |ys| {
        let gys: Vec<usize> = ys.iter().map(|&y| g.on_obj(y)).collect();
        let eps: Vec<usize> = ys.iter().map(|&y| counit.component(y)).collect();
        let inv = f.inverse_compositor(&gys).expect("checked invertible");
        let eta = unit.component(ma.tensor(&gys));
        a.compose(g.on_mor(mb.tensor_mor(&eps)), a.compose(g.on_mor(inv), eta))
    })
}

/// Everything the doctrinal adjunction promises for `f ⊣ g`.
#[derive(Debug, Clone)]
pub struct DoctrinalReport {
    pub right: LaxMonoidalFunctor,
    /// Failures of the lax functor axioms for the created structure on `g`.
    pub functor: Vec<Violation>,
    /// Failures of the unit `id ⇒ gf` as a monoidal transformation.
    pub unit: Vec<Violation>,
    /// Failures of the counit `fg ⇒ id` as a monoidal transformation.
    pub counit: Vec<Violation>,
}

impl DoctrinalReport {
    pub fn holds(&self) -> bool {
        self.functor.is_empty() && self.unit.is_empty() && self.counit.is_empty()
    }

    pub fn to_check(&self) -> CheckResult {
        match self.functor.iter().chain(&self.unit).chain(&self.counit).next() {
            None => CheckResult::exact("created lax structure is valid and the adjunction cells are monoidal"),
            Some(v) => CheckResult::fails(None, None, v.to_string()),
        }
    }
}

/// Creates the lax structure on `g` and checks it, together with the
/// monoidality of the unit and counit against the composites `gf` and `fg`.
pub fn check_doctrinal_adjunction(
    f: &LaxMonoidalFunctor,
    g: &FinFunctor,
    unit: &NatTransformation,
    counit: &NatTransformation,
) -> Result<DoctrinalReport> {
    let right = doctrinal_right_adjoint(f, g, unit, counit)?;
    let f_lax = f.with_flavor(Flavor::Lax);
    let gf = f_lax.then(&right)?;
    let fg = right.then(&f_lax)?;
    Ok(DoctrinalReport {
        functor: right.validate(),
        unit: validate_monoidal_transformation(unit, &LaxMonoidalFunctor::identity(f.source()), &gf),
        counit: validate_monoidal_transformation(counit, &fg, &LaxMonoidalFunctor::identity(f.target())),
        right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{cyclic_group, indiscrete, preorder, terminal};
    use crate::monoidal::MonoidalStructure;
    use std::sync::Arc;

    fn arrow_max() -> MonoidalStructure {
        let c = Arc::new(preorder(["0", "1"], &[("0", "1")]).unwrap());
        let cc = c.clone();
        MonoidalStructure::strict(&c, 3, 0, |x, y| x.max(y), move |f, g| cc.hom(cc.dom(f).max(cc.dom(g)), cc.cod(f).max(cc.cod(g))).start)
            .unwrap()
    }

    fn trivial() -> MonoidalStructure {
        let c = Arc::new(terminal());
        MonoidalStructure::strict(&c, 3, 0, |_, _| 0, |_, _| 0).unwrap()
    }

    #[test]
    fn identity_adjunction_gives_identity_compositors() {
        let m = arrow_max();
        let id = LaxMonoidalFunctor::identity(&m);
        let t = NatTransformation::identity(id.functor());
        let rep = check_doctrinal_adjunction(&id, id.functor(), &t, &t).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.right, id.with_flavor(Flavor::Lax));
    }

    #[test]
    fn equivalence_on_indiscrete_pair() {
        let c = Arc::new(indiscrete(["p", "q"]));
        let cc = c.clone();
        let m = MonoidalStructure::strict(&c, 3, 0, |x, y| x.max(y), move |f, g| {
            cc.hom(cc.dom(f).max(cc.dom(g)), cc.cod(f).max(cc.cod(g))).start
        })
        .unwrap();
        assert!(m.validate().is_empty());
        // f sends everything to p, with the unique compositors
        let f = FinFunctor::constant(&c, &c, 0);
        let cf = c.clone();
        let lf = LaxMonoidalFunctor::new(f.clone(), m.clone(), m.clone(), Flavor::Pseudo, |xs| {
            cf.hom(m.tensor(&vec![0; xs.len()]), 0).start
        })
        .unwrap();
        assert!(lf.validate().is_empty());
        let g = f.clone();
        let unit = NatTransformation::new(FinFunctor::identity(&c), f.clone(), (0..2).map(|x| c.hom(x, 0).start).collect()).unwrap();
        let counit = NatTransformation::new(f.clone(), FinFunctor::identity(&c), (0..2).map(|y| c.hom(0, y).start).collect()).unwrap();
        let rep = check_doctrinal_adjunction(&lf, &g, &unit, &counit).unwrap();
        assert!(rep.holds(), "{:?}", rep.to_check());
        assert!(rep.right.compositors_invertible());
    }

    #[test]
    fn right_adjoint_into_arrow_is_genuinely_lax() {
        // ! : 𝟚 → 𝟙 has right adjoint picking 1
        let m = arrow_max();
        let one = trivial();
        let a = m.base().clone();
        let bang = FinFunctor::constant(&a, one.base(), 0);
        let f = LaxMonoidalFunctor::strict(bang.clone(), m.clone(), one.clone()).unwrap();
        let g = FinFunctor::constant(one.base(), &a, 1);
        let unit = NatTransformation::new(FinFunctor::identity(&a), bang.then(&g).unwrap(), vec![a.hom(0, 1).start, a.id(1)]).unwrap();
        let counit = NatTransformation::identity(&FinFunctor::identity(one.base()));
        let rep = check_doctrinal_adjunction(&f, &g, &unit, &counit).unwrap();
        assert!(rep.holds(), "{:?}", rep.to_check());
        // the nullary compositor 0 → 1 is not invertible
        assert!(!rep.right.compositors_invertible());
    }

    #[test]
    fn non_pseudo_left_adjoint_is_rejected() {
        let m = arrow_max();
        let one = trivial();
        let a = m.base().clone();
        // g ⊣ ! with g picking 1 is lax but not pseudo as a functor 𝟙 → 𝟚
        let g = FinFunctor::constant(one.base(), &a, 1);
        let ag = a.clone();
        let lg = LaxMonoidalFunctor::new(g.clone(), one.clone(), m.clone(), Flavor::Lax, |xs| ag.hom(if xs.is_empty() { 0 } else { 1 }, 1).start)
            .unwrap();
        assert!(lg.validate().is_empty());
        let bang = FinFunctor::constant(&a, one.base(), 0);
        let unit = NatTransformation::identity(&FinFunctor::identity(one.base()));
        let counit = NatTransformation::new(bang.then(&g).unwrap(), FinFunctor::identity(&a), vec![a.id(1), a.id(1)]);
        // whatever the cells, the precondition on the left adjoint comes first
        if let Ok(counit) = counit {
            assert!(matches!(doctrinal_right_adjoint(&lg, &bang, &unit, &counit), Err(Error::Precondition(_))));
        }
        let unit2 = NatTransformation::identity(&FinFunctor::identity(one.base()));
        let any = NatTransformation::identity(&FinFunctor::identity(&a));
        assert!(matches!(doctrinal_right_adjoint(&lg, &bang, &unit2, &any), Err(Error::Precondition(_))));
    }

    #[test]
    fn triangle_failure_is_named() {
        let a = Arc::new(cyclic_group(2));
        let id = FinFunctor::identity(&a);
        let t = NatTransformation::identity(&id);
        assert!(triangle_identities(&id, &id, &t, &t).is_empty());
        let flip = (0..a.num_morphisms()).find(|&m| !a.is_identity(m)).unwrap();
        let counit = NatTransformation::new(id.clone(), id.clone(), vec![flip]).unwrap();
        let v = triangle_identities(&id, &id, &t, &counit);
        assert!(v.iter().any(|v| v.rule == "left triangle"));
        assert!(v.iter().any(|v| v.rule == "right triangle"));
    }
}
