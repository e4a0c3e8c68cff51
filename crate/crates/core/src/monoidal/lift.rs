use std::collections::HashMap;

use crate::category::{same_category, Mor, Obj, ProductCategory};
use crate::cell::{Cell, CellFrame, Target};
use crate::error::{Error, Result, Violation};
use crate::finset::FinSet;
use crate::functor::FinFunctor;
use crate::kan::KanWitness;
use crate::profunctor::Profunctor;
use crate::universal::{defines_left_kan, CheckResult, Context, KanMode};
use crate::util::tuples;

use super::lax::{Flavor, LaxMonoidalFunctor};
use super::profunctor::MonoidalProfunctor;

/// `J^n: A^n ⇸ B^n` with `J^n(x̲, y̲) = Π J(x_i, y_i)`, with the object
/// products and, per object pair, the element tuple at each index.
struct PowerProfunctor {
    pa: ProductCategory,
    pb: ProductCategory,
    prof: Profunctor,
    elems: Vec<Vec<Vec<usize>>>,
}

fn power_profunctor(j: &Profunctor, n: usize) -> Result<PowerProfunctor> {
    let pa = ProductCategory::power(j.source(), n);
    let pb = ProductCategory::power(j.target(), n);
    let (na, nb) = (pa.category.num_objects(), pb.category.num_objects());
    let mut sets = Vec::with_capacity(na * nb);
    let mut elems = Vec::with_capacity(na * nb);
    let mut index: Vec<HashMap<Vec<usize>, usize>> = Vec::with_capacity(na * nb);
    for xo in 0..na {
        for yo in 0..nb {
            let (xs, ys) = (pa.object_tuple(xo), pb.object_tuple(yo));
            let sizes: Vec<usize> = xs.iter().zip(ys).map(|(&x, &y)| j.size(x, y)).collect();
            let all = tuples(&sizes);
            let name = |us: &[usize]| {
                let parts: Vec<&str> = us.iter().enumerate().map(|(i, &u)| j.elems(xs[i], ys[i]).atom(u)).collect();
                format!("({})", parts.join(","))
            };
            let set = FinSet::new(all.iter().map(|us| name(us)))?;
            let mut ordered = vec![Vec::new(); all.len()];
            let mut idx = HashMap::new();
            for us in all {
                let k = set.index_of(&name(&us)).expect("named above");
                idx.insert(us.clone(), k);
                ordered[k] = us;
            }
            sets.push(set);
            elems.push(ordered);
            index.push(idx);
        }
    }
    let prof = Profunctor::from_fn(
        pa.category.clone(),
        pb.category.clone(),
        sets,
        |a, yo, k| {
            let xo = pa.category.cod(a);
            let x2 = pa.category.dom(a);
            let at = pa.morphism_tuple(a);
            let ys = pb.object_tuple(yo);
            let moved: Vec<usize> = elems[xo * nb + yo].get(k).expect("element in range").iter().enumerate().map(|(i, &u)| j.lact(at[i], ys[i], u)).collect();
            index[x2 * nb + yo][&moved]
        },
        |xo, k, b| {
            let (yo, y2) = (pb.category.dom(b), pb.category.cod(b));
            let bt = pb.morphism_tuple(b);
            let xs = pa.object_tuple(xo);
            let moved: Vec<usize> = elems[xo * nb + yo][k].iter().enumerate().map(|(i, &u)| j.ract(xs[i], u, bt[i])).collect();
            index[xo * nb + y2][&moved]
        },
    );
    Ok(PowerProfunctor { pa, pb, prof, elems })
}

/// `⊗_M ∘ h^n: C^n → M` for `h: C → M`.
fn tensored_functor(h: &FinFunctor, pc: &ProductCategory, m: &super::MonoidalStructure) -> Result<FinFunctor> {
    let c = &pc.category;
    let obj_map = (0..c.num_objects())
        .map(|x| m.tensor(&pc.object_tuple(x).iter().map(|&x| h.on_obj(x)).collect::<Vec<_>>()))
        .collect();
    let mor_map = (0..c.num_morphisms())
        .map(|f| m.tensor_mor(&pc.morphism_tuple(f).iter().map(|&f| h.on_mor(f)).collect::<Vec<_>>()))
        .collect();
    FinFunctor::new(c.clone(), m.base().clone(), obj_map, mor_map)
}

/// The cell `⊗_n ∘ (η, .., η): J^n ⇒ M` over `(⊗ ∘ d^n, ⊗ ∘ l^n)`.
pub fn tensored_cell(w: &KanWitness, m: &super::MonoidalStructure, n: usize) -> Result<Cell> {
    if n > m.bound() {
        return Err(Error::ArityExceeded { arity: n, bound: m.bound() });
    }
    let fr = w.cell.frame();
    if fr.arity() != 1 {
        return Err(Error::Precondition("the Kan cell must have a single source profunctor".into()));
    }
    let mc = m.base().clone();
    if !same_category(fr.left().target(), &mc) {
        return Err(Error::BoundaryMismatch("the Kan cell does not land in the monoidal category".into()));
    }
    let pw = power_profunctor(&fr.src()[0], n)?;
    let left = tensored_functor(fr.left(), &pw.pa, m)?;
    let right = tensored_functor(&w.extension, &pw.pb, m)?;
    let frame = CellFrame::new(vec![pw.prof.clone()], left, right, Target::Nullary(mc.clone()))?;
    let nb = pw.pb.category.num_objects();
    Cell::from_fn(frame, |o, e| {
        let (xs, ys) = (pw.pa.object_tuple(o[0]), pw.pb.object_tuple(o[1]));
        let us = &pw.elems[o[0] * nb + o[1]][e[0]];
        let legs: Vec<Mor> = (0..n).map(|i| w.cell.get_morphism(&[xs[i], ys[i]], &[us[i]])).collect();
        mc.local_index(m.tensor_mor(&legs))
    })
}

/// A lax structure created on a Kan extension, with the tensored cells that
/// verified the preservation hypothesis.
#[derive(Debug, Clone)]
pub struct KanLift {
    pub functor: LaxMonoidalFunctor,
    pub tensored: Vec<Cell>,
    /// Failures of the lax functor axioms for the created structure.
    pub violations: Vec<Violation>,
    /// Failures of `η(J_⊘ u̲) ∘ d_⊘ = l_⊘ ∘ ⊗η(u̲)`, making the Kan cell monoidal.
    pub cell_axiom: Vec<Violation>,
}

impl KanLift {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.cell_axiom.is_empty()
    }
}

#[derive(Debug, Clone)]
pub enum LiftOutcome {
    Lifted(Box<KanLift>),
    /// The tensor does not preserve the extension at this arity.
    Declined { arity: usize, reason: CheckResult },
}

impl LiftOutcome {
    pub fn lifted(&self) -> Option<&KanLift> {
        match self {
            LiftOutcome::Lifted(k) => Some(k),
            LiftOutcome::Declined { .. } => None,
        }
    }
}

/// The lax structure on `l = lan_J d` whose compositor at `y̲` is the unique
/// factorization of `η(J_⊘ u̲) ∘ d_⊘(x̲)` through the tensored cell
/// `⊗(η(u_1), .., η(u_n))`. The tensored cells must define pointwise left
/// Kan extensions at each arity; otherwise the lift is declined.
pub fn lift_lax_structure_on_kan(d: &LaxMonoidalFunctor, w: &KanWitness, j: &MonoidalProfunctor) -> Result<LiftOutcome> {
    if d.flavor() == Flavor::Colax {
        return Err(Error::Precondition("the functor must be lax".into()));
    }
    let fr = w.cell.frame();
    if fr.arity() != 1 || fr.src()[0] != *j.profunctor() || fr.left() != d.functor() || *fr.right() != w.extension {
        return Err(Error::BoundaryMismatch("the Kan witness is not for this functor and profunctor".into()));
    }
    if j.source() != d.source() {
        return Err(Error::BoundaryMismatch("the profunctor and the functor have different monoidal sources".into()));
    }
    let ctx = Context::new(vec![], vec![], 1);
    let pointwise = defines_left_kan(&w.cell, &ctx, KanMode::Pointwise)?;
    if !pointwise.holds() {
        return Err(Error::Precondition(format!("the witness is not a pointwise Kan extension: {}", pointwise.detail)));
    }
    let m = d.target();
    let mut tensored = Vec::with_capacity(m.bound() + 1);
    for n in 0..=m.bound() {
        let cell = tensored_cell(w, m, n)?;
        let res = defines_left_kan(&cell, &ctx, KanMode::Pointwise)?;
        if !res.holds() {
            return Ok(LiftOutcome::Declined { arity: n, reason: res });
        }
        tensored.push(cell);
    }
    let jp = j.profunctor();
    let (a, b, mc) = (jp.source().clone(), jp.target().clone(), m.base().clone());
    let l = &w.extension;
    let mb = j.target();
    let leg = |x: Obj, y: Obj, u: usize| w.cell.get_morphism(&[x, y], &[u]);
    // all (x̲, u̲) over a fixed y̲, with the two legs to compare
    let cocone = |ys: &[Obj]| -> Vec<(Mor, Mor)> {
        let n = ys.len();
        let mut out = Vec::new();
        for xs in tuples(&vec![a.num_objects(); n]) {
            let sizes: Vec<usize> = xs.iter().zip(ys).map(|(&x, &y)| jp.size(x, y)).collect();
            for us in tuples(&sizes) {
                let tens = m.tensor_mor(&(0..n).map(|i| leg(xs[i], ys[i], us[i])).collect::<Vec<_>>());
                let other = mc.compose(leg(j.source().tensor(&xs), mb.tensor(ys), j.structure(&xs, ys, &us)), d.compositor(&xs));
                out.push((tens, other));
            }
        }
        out
    };
    let mut failure = None;
    let functor = LaxMonoidalFunctor::new(l.clone(), mb.clone(), m.clone(), Flavor::Lax, |ys| {
        let pairs = cocone(ys);
        let lys: Vec<Obj> = ys.iter().map(|&y| l.on_obj(y)).collect();
        let mut fits = mc.hom(m.tensor(&lys), l.on_obj(mb.tensor(ys))).filter(|&t| pairs.iter().all(|&(s, o)| mc.compose(t, s) == o));
        match (fits.next(), fits.next()) {
            (Some(t), None) => t,
            _ => {
                let names: Vec<&str> = ys.iter().map(|&y| b.object_name(y)).collect();
                failure.get_or_insert(format!("no unique factorization at ({})", names.join(",")));
                mc.id(m.tensor(&lys))
            }
        }
    })?;
    if let Some(f) = failure {
        return Err(Error::Invalid(f));
    }
    let mut cell_axiom = Vec::new();
    for n in 0..=m.bound() {
        for ys in tuples(&vec![b.num_objects(); n]) {
            let c = functor.compositor(&ys);
            if cocone(&ys).iter().any(|&(s, o)| mc.compose(c, s) != o) {
                let names: Vec<&str> = ys.iter().map(|&y| b.object_name(y)).collect();
                cell_axiom.push(Violation::new("monoidal Kan cell", format!("at ({})", names.join(","))));
            }
        }
    }
    Ok(LiftOutcome::Lifted(Box::new(KanLift {
        violations: functor.validate(),
        functor,
        tensored,
        cell_axiom,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{preorder, terminal};
    use crate::kan::pointwise_lan;
    use crate::monoidal::MonoidalStructure;
    use std::collections::BTreeMap;
    use std::sync::Arc;

    fn poset_monoid(leq: &[(&str, &str)], unit: Obj, op: fn(Obj, Obj) -> Obj) -> MonoidalStructure {
        let c = Arc::new(preorder(["0", "1"], leq).unwrap());
        let cc = c.clone();
        MonoidalStructure::strict(&c, 3, unit, op, move |f, g| cc.hom(op(cc.dom(f), cc.dom(g)), op(cc.cod(f), cc.cod(g))).start).unwrap()
    }

    fn arrow_max() -> MonoidalStructure {
        poset_monoid(&[("0", "1")], 0, |x, y| x.max(y))
    }

    #[test]
    fn along_the_hom_the_lift_is_the_original_structure() {
        let m = arrow_max();
        let d = LaxMonoidalFunctor::identity(&m);
        let j = MonoidalProfunctor::hom(&m);
        let w = pointwise_lan(d.functor(), j.profunctor()).unwrap().unwrap();
        assert_eq!(w.extension, *d.functor());
        let out = lift_lax_structure_on_kan(&d, &w, &j).unwrap();
        let lift = out.lifted().unwrap();
        assert!(lift.holds());
        assert_eq!(lift.functor, d.with_flavor(Flavor::Lax));
        assert!(lift.functor.compositors_invertible());
    }

    #[test]
    fn lax_constant_functor_lifts_along_hom() {
        let m = arrow_max();
        let c = m.base().clone();
        let top = FinFunctor::constant(&c, &c, 1);
        let cc = c.clone();
        let d = LaxMonoidalFunctor::new(top, m.clone(), m.clone(), Flavor::Lax, |xs| cc.hom(if xs.is_empty() { 0 } else { 1 }, 1).start).unwrap();
        assert!(d.validate().is_empty());
        let j = MonoidalProfunctor::hom(&m);
        let w = pointwise_lan(d.functor(), j.profunctor()).unwrap().unwrap();
        let lift = lift_lax_structure_on_kan(&d, &w, &j).unwrap();
        let lift = lift.lifted().unwrap();
        assert!(lift.holds());
        assert!(!lift.functor.compositors_invertible());
    }

    #[test]
    fn tensor_not_preserving_the_initial_object_declines() {
        // J: 𝟙 ⇸ (0 ≤ 1, min, unit 1) with J(*, 0) empty; l(0) is initial in
        // (0 ≤ 1, max), and 0 ⊗ l(1) = 1 is not
        let one = Arc::new(terminal());
        let ma = MonoidalStructure::strict(&one, 3, 0, |_, _| 0, |_, _| 0).unwrap();
        let mb = poset_monoid(&[("0", "1")], 1, |x, y| x.min(y));
        let m = arrow_max();
        let mut elems = BTreeMap::new();
        elems.insert(("*".to_string(), "1".to_string()), vec!["u".to_string()]);
        let jp = Profunctor::from_names(one.clone(), mb.base().clone(), &elems, &BTreeMap::new(), &BTreeMap::new()).unwrap();
        let j = MonoidalProfunctor::new(jp, ma.clone(), mb, |_, _, _| 0).unwrap();
        assert!(j.validate().is_empty());
        let mc = m.base().clone();
        let d = LaxMonoidalFunctor::new(FinFunctor::constant(&one, &mc, 1), ma, m, Flavor::Lax, |xs| {
            mc.hom(if xs.is_empty() { 0 } else { 1 }, 1).start
        })
        .unwrap();
        assert!(d.validate().is_empty());
        let w = pointwise_lan(d.functor(), j.profunctor()).unwrap().unwrap();
        match lift_lax_structure_on_kan(&d, &w, &j).unwrap() {
            LiftOutcome::Declined { arity, reason } => {
                assert_eq!(arity, 2);
                assert!(!reason.holds());
            }
            LiftOutcome::Lifted(_) => panic!("the lift should be declined"),
        }
    }

    #[test]
    fn tensored_cell_at_arity_one_is_the_kan_cell() {
        let m = arrow_max();
        let d = LaxMonoidalFunctor::identity(&m);
        let j = MonoidalProfunctor::hom(&m);
        let w = pointwise_lan(d.functor(), j.profunctor()).unwrap().unwrap();
        let t = tensored_cell(&w, &m, 1).unwrap();
        assert_eq!(t.values(), w.cell.values());
        assert!(matches!(tensored_cell(&w, &m, 4), Err(Error::ArityExceeded { .. })));
    }
}
