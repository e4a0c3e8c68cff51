//! Weighted colimits, pointwise left Kan extensions, density, left exactness
//! and the left Beck-Chevalley condition.

use std::sync::Arc;

use crate::category::{FinCategory, Mor, Obj};
use crate::cell::{vertical_compose, Cell, CellFrame, Target};
use crate::construct::{companion, conjoint, horizontal_composite, iso_from_map};
use crate::enumerate::for_each_cell;
use crate::error::{Error, Result};
use crate::functor::FinFunctor;
use crate::profunctor::Profunctor;
use crate::universal::{
    defines_left_kan, is_pointwise_cocartesian, is_weighted_colimit, CheckResult, Context, KanMode, Verdict,
};

/// A profunctor `A ⇸ 1` into the terminal category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    profunctor: Profunctor,
}

impl Weight {
    pub fn new(profunctor: Profunctor) -> Result<Self> {
        let t = profunctor.target();
        if t.num_objects() != 1 || t.num_morphisms() != 1 {
            return Err(Error::Precondition("a weight must end at the terminal category".into()));
        }
        Ok(Weight { profunctor })
    }

    /// The column `J(−, y)` of a profunctor, as a weight.
    pub fn column(j: &Profunctor, y: Obj) -> Result<Self> {
        let pick = FinFunctor::pick(j.target(), y);
        Weight::new(j.restricted(&FinFunctor::identity(j.source()), &pick)?)
    }

    pub fn profunctor(&self) -> &Profunctor {
        &self.profunctor
    }
}

/// The least apex `l` with a cell `(J) ⇒ M` over `(d, l)` exhibiting the
/// `J`-weighted colimit of `d`, or `None` when no apex and cocone is universal.
pub fn weighted_colimit(w: &Weight, d: &FinFunctor) -> Result<Option<(Obj, Cell)>> {
    let j = w.profunctor();
    if !crate::category::same_category(j.source(), d.source()) {
        return Err(Error::BoundaryMismatch("weight and diagram have different domains".into()));
    }
    let m = d.target().clone();
    let one = j.target().clone();
    for apex in 0..m.num_objects() {
        let frame = CellFrame::new(
            vec![j.clone()],
            d.clone(),
            FinFunctor::constant(&one, &m, apex),
            Target::Nullary(m.clone()),
        )?;
        let mut found = None;
        let mut err = None;
        for_each_cell(&frame, |eta| match is_weighted_colimit(&eta) {
            Ok(r) if r.holds() => {
                found = Some(eta);
                false
            }
            Ok(_) => true,
            Err(e) => {
                err = Some(e);
                false
            }
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        if let Some(eta) = found {
            return Ok(Some((apex, eta)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone)]
pub struct KanWitness {
    pub extension: FinFunctor,
    pub cell: Cell,
    pub mode: KanMode,
}

/// The pointwise left Kan extension of `d: A → M` along `J: A ⇸ B`, assembled
/// from the `J(−, y)`-weighted colimits: `l` on a morphism `b: y → y'` is the
/// unique factorization of the cocone at `y'` precomposed with `ρ(−, b)`.
pub fn pointwise_lan(d: &FinFunctor, j: &Profunctor) -> Result<Option<KanWitness>> {
    if !crate::category::same_category(j.source(), d.source()) {
        return Err(Error::BoundaryMismatch("profunctor and functor have different domains".into()));
    }
    let (a, b, m) = (j.source().clone(), j.target().clone(), d.target().clone());
    let mut apex = Vec::with_capacity(b.num_objects());
    let mut cocone: Vec<Cell> = Vec::with_capacity(b.num_objects());
    for y in 0..b.num_objects() {
        match weighted_colimit(&Weight::column(j, y)?, d)? {
            Some((l, eta)) => {
                apex.push(l);
                cocone.push(eta);
            }
            None => return Ok(None),
        }
    }
    // component of the cocone at y on (x, u ∈ J(x, y)), as a morphism of M
    let leg = |y: Obj, x: Obj, u: usize| -> Mor { cocone[y].get_morphism(&[x, 0], &[u]) };
    let mut mor_map = Vec::with_capacity(b.num_morphisms());
    for bm in 0..b.num_morphisms() {
        let (y, y2) = (b.dom(bm), b.cod(bm));
        let fits = |t: Mor| {
            (0..a.num_objects()).all(|x| {
                (0..j.size(x, y)).all(|u| m.compose(t, leg(y, x, u)) == leg(y2, x, j.ract(x, u, bm)))
            })
        };
        let mut cands = m.hom(apex[y], apex[y2]).filter(|&t| fits(t));
        match (cands.next(), cands.next()) {
            (Some(t), None) => mor_map.push(t),
            _ => return Err(Error::Invalid("cocone comparison does not factor uniquely".into())),
        }
    }
    let l = FinFunctor::new(b.clone(), m.clone(), apex, mor_map)?;
    let frame = CellFrame::new(vec![j.clone()], d.clone(), l.clone(), Target::Nullary(m.clone()))?;
    let cell = Cell::from_fn(frame, |o, e| cocone[o[1]].get(&[o[0], 0], e))?;
    Ok(Some(KanWitness {
        extension: l,
        cell,
        mode: KanMode::Pointwise,
    }))
}

/// Verifies a Kan witness: the cell's verticals match the witness, and the
/// cell defines a pointwise left Kan extension (exact per object, context bounded).
pub fn check_pointwise_lan(w: &KanWitness, ctx: &Context) -> Result<CheckResult> {
    if *w.cell.frame().right() != w.extension {
        return Ok(CheckResult::fails(
            Some(w.cell.clone()),
            None,
            "the cell's right vertical is not the claimed extension",
        ));
    }
    if !w.cell.is_valid() {
        return Ok(CheckResult::fails(Some(w.cell.clone()), None, "the cell is not equivariant"));
    }
    defines_left_kan(&w.cell, ctx, KanMode::Pointwise)
}

/// Whether `f: A → M` is dense: the cartesian cell `f_* ⇒ M` defines `id_M`
/// as the pointwise left Kan extension of `f` along `f_*`.
pub fn is_dense(f: &FinFunctor, ctx: &Context) -> Result<CheckResult> {
    let comp = companion(f)?;
    defines_left_kan(comp.cartesian_cell(), ctx, KanMode::Pointwise)
}

/// The comparison `f^* ⊙ J1 ⊙ ... ⊙ Jn → K(id, g)`, `[s | u] ↦ λ(s, φ u)`, for
/// `φ: (J1, ..., Jn) ⇒ K` over `(f, g)`, and whether it is invertible.
pub fn beck_chevalley_comparison(phi: &Cell) -> Result<(Cell, bool)> {
    let fr = phi.frame();
    let Target::Unary(k) = fr.target() else {
        return Err(Error::Precondition("the Beck-Chevalley condition concerns unary cells".into()));
    };
    if fr.arity() == 0 {
        return Err(Error::Precondition("the Beck-Chevalley condition needs a non-empty source".into()));
    }
    let (f, g) = (fr.left(), fr.right());
    let fstar = conjoint(f)?;
    let path: Vec<Profunctor> = std::iter::once(fstar.profunctor().clone()).chain(fr.src().iter().cloned()).collect();
    let comp = horizontal_composite(&path)?;
    let kg = k.restricted(&FinFunctor::identity(k.source()), g)?;
    let c = k.source();
    let n = fr.arity();
    // every class has a raw representative; map through the least one
    let frame = CellFrame::new(
        vec![comp.profunctor.clone()],
        FinFunctor::identity(c),
        FinFunctor::identity(g.source()),
        Target::Unary(kg.clone()),
    )?;
    let mut reps: Vec<Vec<Option<(Vec<Obj>, Vec<usize>)>>> = (0..c.num_objects() * g.source().num_objects())
        .map(|i| vec![None; comp.profunctor.size(i / g.source().num_objects(), i % g.source().num_objects())])
        .collect();
    let nb = g.source().num_objects();
    for_each_tuple(&path, |objs, elems| {
        let slot = &mut reps[objs[0] * nb + objs[n + 1]][comp.class_of(objs, elems)];
        if slot.is_none() {
            *slot = Some((objs.to_vec(), elems.to_vec()));
        }
    });
    let cell = Cell::from_fn(frame, |o, e| {
        let (objs, elems) = reps[o[0] * nb + o[1]][e[0]].as_ref().expect("classes are inhabited");
        let s = c.hom(objs[0], f.on_obj(objs[1])).start + elems[0];
        let v = phi.get(&objs[1..], &elems[1..]);
        k.lact(s, g.on_obj(objs[n + 1]), v)
    })?;
    let inv = iso_from_map(&comp.profunctor, &kg, |x, y, u| cell.get(&[x, y], &[u]))?.is_some();
    Ok((cell, inv))
}

/// Visits every raw tuple of a path: object tuples and element tuples over them.
fn for_each_tuple<F: FnMut(&[Obj], &[usize])>(path: &[Profunctor], mut visit: F) {
    let cats: Vec<Arc<FinCategory>> =
        std::iter::once(path[0].source().clone()).chain(path.iter().map(|j| j.target().clone())).collect();
    let sizes: Vec<usize> = cats.iter().map(|c| c.num_objects()).collect();
    for objs in crate::util::tuples(&sizes) {
        let es: Vec<usize> = (0..path.len()).map(|i| path[i].size(objs[i], objs[i + 1])).collect();
        for e in crate::util::tuples(&es) {
            visit(&objs, &e);
        }
    }
}

/// The factorization `φ': (J1, ..., Jn) ⇒ K(id, g)` of `φ` through the
/// cartesian cell defining `K(id, g)`.
pub fn factor_through_restriction(phi: &Cell) -> Result<Cell> {
    let fr = phi.frame();
    let Target::Unary(k) = fr.target() else {
        return Err(Error::Precondition("unary target required".into()));
    };
    let g = fr.right();
    let kg = k.restricted(&FinFunctor::identity(k.source()), g)?;
    let frame = CellFrame::new(
        fr.src().to_vec(),
        fr.left().clone(),
        FinFunctor::identity(g.source()),
        Target::Unary(kg),
    )?;
    Cell::from_fn(frame, |o, e| phi.get(o, e))
}

/// The left Beck-Chevalley condition for a cell `φ` over `(f, g)`: decided
/// exactly by invertibility of [`beck_chevalley_comparison`], and cross-checked
/// by the bounded right pointwise cocartesianness of the factorization through
/// `K(id, g)`.
pub fn satisfies_left_beck_chevalley(phi: &Cell, ctx: &Context) -> Result<CheckResult> {
    let (comparison, invertible) = beck_chevalley_comparison(phi)?;
    let bounded = is_pointwise_cocartesian(&factor_through_restriction(phi)?, ctx)?;
    match (invertible, bounded.holds()) {
        (true, true) => Ok(CheckResult::exact(format!("comparison invertible; {}", bounded.detail))),
        (false, false) => Ok(bounded),
        (false, true) => Ok(CheckResult::fails(
            Some(comparison),
            None,
            "comparison from the composite with the conjoint is not invertible",
        )),
        (true, false) => Ok(CheckResult {
            detail: format!("comparison invertible but bounded check failed: {}", bounded.detail),
            ..bounded
        }),
    }
}

/// Pointwise left `d`-exactness of `φ: (J) ⇒ K` over `(f, g)`, with `d: C → M`:
/// the pointwise Kan extension `η` of `d` along `K` is computed, and `η ∘ (φ)`
/// must define `l ∘ g` as the pointwise Kan extension of `d ∘ f`. Vacuous when
/// `d` has no pointwise Kan extension along `K`.
pub fn is_left_exact(phi: &Cell, d: &FinFunctor, ctx: &Context) -> Result<CheckResult> {
    let Target::Unary(k) = phi.frame().target() else {
        return Err(Error::Precondition("unary target required".into()));
    };
    if k.target().num_objects() > 0 && k.source().num_objects() == 0 {
        return Err(Error::Precondition("empty source category".into()));
    }
    let Some(w) = pointwise_lan(d, k)? else {
        return Ok(CheckResult::exact("no pointwise Kan extension along the target; vacuous"));
    };
    let theta = vertical_compose(&w.cell, std::slice::from_ref(phi))?;
    let res = defines_left_kan(&theta, ctx, KanMode::Pointwise)?;
    Ok(match res.verdict {
        Verdict::Fails => CheckResult {
            detail: format!("composite with the Kan cell: {}", res.detail),
            ..res
        },
        _ => res,
    })
}
