//! Restrictions, companions, conjoints, units, coend composites,
//! tabulations and cotabulations.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::category::{FinCategory, Mor, Obj};
use crate::cell::{horizontal_compose, vertical_compose, Cell, CellFrame, Target};
use crate::error::{Error, Result};
use crate::finset::{quotient_indices, FinFunction, FinSet};
use crate::enumerate::enumerate_cells;
use crate::functor::{enumerate_functors, FinFunctor};
use crate::profunctor::{is_composable, Profunctor};
use crate::universal::{CheckResult, Context, Verdict};
use crate::util::tuples;

/// A restriction `K(f, g)` with its cartesian cell.
#[derive(Debug, Clone)]
pub struct RestrictionResult {
    pub profunctor: Profunctor,
    pub cartesian_cell: Cell,
    /// Cartesianness of the cell is guaranteed by construction.
    pub verdict: Verdict,
}

/// The restriction `K(f, g)(x, y) = K(f x, g y)` and the cartesian cell
/// `K(f, g) ⇒ K` whose components are identities.
pub fn restrict(k: &Profunctor, f: &FinFunctor, g: &FinFunctor) -> Result<RestrictionResult> {
    let r = k.restricted(f, g)?;
    let frame = CellFrame::new(vec![r.clone()], f.clone(), g.clone(), Target::Unary(k.clone()))?;
    Ok(RestrictionResult {
        profunctor: r,
        cartesian_cell: Cell::from_fn(frame, |_, e| e[0])?,
        verdict: Verdict::HoldsExact,
    })
}

/// The nullary restriction `C(f, g)` and the cartesian cell `C(f, g) ⇒ C`.
pub fn nullary_restrict(c: &Arc<FinCategory>, f: &FinFunctor, g: &FinFunctor) -> Result<RestrictionResult> {
    let r = Profunctor::hom(c).restricted(f, g)?;
    let frame = CellFrame::new(vec![r.clone()], f.clone(), g.clone(), Target::Nullary(c.clone()))?;
    Ok(RestrictionResult {
        profunctor: r,
        cartesian_cell: Cell::from_fn(frame, |_, e| e[0])?,
        verdict: Verdict::HoldsExact,
    })
}

/// A companion or conjoint together with the cells of its defining identities.
#[derive(Debug, Clone)]
pub struct Representable {
    pub restriction: RestrictionResult,
    /// The cell `(A) ⇒ f_*` (companion) or `(A) ⇒ f^*` (conjoint).
    pub cocartesian_cell: Cell,
}

impl Representable {
    pub fn profunctor(&self) -> &Profunctor {
        &self.restriction.profunctor
    }

    pub fn cartesian_cell(&self) -> &Cell {
        &self.restriction.cartesian_cell
    }
}

fn identity_components(f: &FinFunctor, frame: Arc<CellFrame>) -> Result<Cell> {
    let c = f.target().clone();
    Cell::from_fn(frame, |x, _| c.local_index(c.id(f.on_obj(x[0]))))
}

/// The companion `f_* = C(f, id): A ⇸ C` of `f: A → C`.
pub fn companion(f: &FinFunctor) -> Result<Representable> {
    let c = f.target().clone();
    let restriction = nullary_restrict(&c, f, &FinFunctor::identity(&c))?;
    let frame = CellFrame::new(
        vec![],
        FinFunctor::identity(f.source()),
        f.clone(),
        Target::Unary(restriction.profunctor.clone()),
    )?;
    Ok(Representable {
        cocartesian_cell: identity_components(f, frame)?,
        restriction,
    })
}

/// The conjoint `f^* = C(id, f): C ⇸ A` of `f: A → C`.
pub fn conjoint(f: &FinFunctor) -> Result<Representable> {
    let c = f.target().clone();
    let restriction = nullary_restrict(&c, &FinFunctor::identity(&c), f)?;
    let frame = CellFrame::new(
        vec![],
        f.clone(),
        FinFunctor::identity(f.source()),
        Target::Unary(restriction.profunctor.clone()),
    )?;
    Ok(Representable {
        cocartesian_cell: identity_components(f, frame)?,
        restriction,
    })
}

/// Checks both companion identities: `cart ∘ cocart = id_f` and `cocart ⋆ cart = id_{f_*}`.
pub fn companion_identities_hold(f: &FinFunctor, r: &Representable) -> Result<bool> {
    let vertical = vertical_compose(r.cartesian_cell(), &[r.cocartesian_cell.clone()])?;
    let horizontal = horizontal_compose(&r.cocartesian_cell, r.cartesian_cell())?;
    Ok(vertical == Cell::vertical_identity(f) && horizontal == Cell::identity(r.profunctor()))
}

/// Checks both conjoint identities: `cart ∘ cocart = id_f` and `cart ⋆ cocart = id_{f^*}`.
pub fn conjoint_identities_hold(f: &FinFunctor, r: &Representable) -> Result<bool> {
    let vertical = vertical_compose(r.cartesian_cell(), &[r.cocartesian_cell.clone()])?;
    let horizontal = horizontal_compose(r.cartesian_cell(), &r.cocartesian_cell)?;
    Ok(vertical == Cell::vertical_identity(f) && horizontal == Cell::identity(r.profunctor()))
}

/// The horizontal unit `I_A` with its cocartesian cell `(A) ⇒ I_A` and cartesian cell `I_A ⇒ A`.
#[derive(Debug, Clone)]
pub struct UnitResult {
    pub profunctor: Profunctor,
    pub cocartesian_cell: Cell,
    pub cartesian_cell: Cell,
}

pub fn unit_profunctor(a: &Arc<FinCategory>) -> Result<UnitResult> {
    let id = FinFunctor::identity(a);
    let r = companion(&id)?;
    Ok(UnitResult {
        profunctor: r.restriction.profunctor,
        cocartesian_cell: r.cocartesian_cell,
        cartesian_cell: r.restriction.cartesian_cell,
    })
}

/// A coend composite `J1 ⊙ ... ⊙ Jn` with its cocartesian cell.
#[derive(Debug, Clone)]
pub struct CompositeResult {
    pub profunctor: Profunctor,
    pub cocartesian_cell: Cell,
    /// Raw element tuples per outer pair `(x, y)`, indexed `x * |An| + y`.
    pub raw: Vec<FinSet>,
    /// Projection of raw tuples onto coend classes, per outer pair.
    pub class_map: Vec<FinFunction>,
    pub verdict: Verdict,
}

impl CompositeResult {
    /// The coend class of the element tuple `elems` over the object tuple `objs`.
    pub fn class_of(&self, objs: &[Obj], elems: &[usize]) -> usize {
        self.cocartesian_cell.get(objs, elems)
    }
}

/// Name of a raw coend tuple: elements interleaved with middle objects, e.g. `[u|1|v]`.
fn raw_name(path: &[Profunctor], objs: &[Obj], elems: &[usize]) -> String {
    let mut s = String::from("[");
    for (i, j) in path.iter().enumerate() {
        if i > 0 {
            s.push('|');
            s.push_str(j.source().object_name(objs[i]));
            s.push('|');
        }
        s.push_str(j.elems(objs[i], objs[i + 1]).atom(elems[i]));
    }
    s.push(']');
    s
}

/// The horizontal composite of a path via the coend: raw tuples over all
/// middle objects, quotiented by `(…, ρ(u, b), v, …) ~ (…, u, λ(b, v), …)`.
/// Classes are named by their least raw representative.
pub fn horizontal_composite(path: &[Profunctor]) -> Result<CompositeResult> {
    if path.is_empty() {
        return Err(Error::Precondition("empty path; use the unit profunctor".into()));
    }
    if !is_composable(path) {
        return Err(Error::NotComposable(
            path.windows(2)
                .position(|w| !crate::category::same_category(w[0].target(), w[1].source()))
                .unwrap_or(0)
                + 1,
        ));
    }
    let n = path.len();
    if n == 1 {
        let j = &path[0];
        let (na, nb) = (j.source().num_objects(), j.target().num_objects());
        let raw: Vec<FinSet> = (0..na * nb).map(|i| j.elems(i / nb, i % nb).clone()).collect();
        return Ok(CompositeResult {
            profunctor: j.clone(),
            cocartesian_cell: Cell::identity(j),
            class_map: raw.iter().map(FinFunction::identity).collect(),
            raw,
            verdict: Verdict::HoldsExact,
        });
    }
    let a0 = path[0].source().clone();
    let an = path[n - 1].target().clone();
    let cats: Vec<Arc<FinCategory>> = std::iter::once(a0.clone())
        .chain(path.iter().map(|j| j.target().clone()))
        .collect();
    let mid_sizes: Vec<usize> = cats[1..n].iter().map(|c| c.num_objects()).collect();
    let mids = tuples(&mid_sizes);
    let nb = an.num_objects();

    let mut sets = Vec::with_capacity(a0.num_objects() * nb);
    let mut raw_sets = Vec::with_capacity(sets.capacity());
    let mut class_maps = Vec::with_capacity(sets.capacity());
    // (x, y) -> raw tuple (objs, elems) -> class index
    let mut lookup: Vec<HashMap<(Vec<Obj>, Vec<usize>), usize>> = Vec::new();
    for x in 0..a0.num_objects() {
        for y in 0..nb {
            let mut raw: Vec<(Vec<Obj>, Vec<usize>)> = Vec::new();
            for mid in &mids {
                let objs: Vec<Obj> = std::iter::once(x).chain(mid.iter().copied()).chain([y]).collect();
                let sizes: Vec<usize> = (0..n).map(|i| path[i].size(objs[i], objs[i + 1])).collect();
                for e in tuples(&sizes) {
                    raw.push((objs.clone(), e));
                }
            }
            let names: Vec<String> = raw.iter().map(|(o, e)| raw_name(path, o, e)).collect();
            let set = FinSet::new(names.iter().cloned())?;
            let index_of: HashMap<(Vec<Obj>, Vec<usize>), usize> = raw
                .iter()
                .zip(&names)
                .map(|(t, name)| (t.clone(), set.index_of(name).unwrap()))
                .collect();
            let mut pairs = Vec::new();
            // (…, ρ(u, b), v, …) at cod b  ~  (…, u, λ(b, v), …) at dom b
            for (objs, e) in &raw {
                for i in 1..n {
                    let ci = &cats[i];
                    for b in ci.out_of_object(objs[i]) {
                        if ci.is_identity(b) {
                            continue;
                        }
                        let mut o2 = objs.clone();
                        o2[i] = ci.cod(b);
                        // u = e[i-1] ∈ J_i(objs[i-1], dom b), v ranges over J_{i+1}(cod b, objs[i+1])
                        for v in 0..path[i].size(ci.cod(b), objs[i + 1]) {
                            let mut lhs = e.clone();
                            lhs[i - 1] = path[i - 1].ract(objs[i - 1], e[i - 1], b);
                            lhs[i] = v;
                            let mut rhs = e.clone();
                            rhs[i] = path[i].lact(b, objs[i + 1], v);
                            pairs.push((index_of[&(o2.clone(), lhs)], index_of[&(objs.clone(), rhs)]));
                        }
                    }
                }
            }
            let (classes, proj) = quotient_indices(&set, &pairs);
            let mut by_tuple = HashMap::with_capacity(index_of.len());
            for (t, i) in index_of {
                by_tuple.insert(t, proj.apply_index(i));
            }
            lookup.push(by_tuple);
            sets.push(classes);
            raw_sets.push(set);
            class_maps.push(proj);
        }
    }
    // representative raw tuple of every class, to act on
    let mut reps: Vec<Vec<(Vec<Obj>, Vec<usize>)>> = sets
        .iter()
        .map(|s| vec![(Vec::new(), Vec::new()); s.len()])
        .collect();
    let mut rep_set: Vec<Vec<bool>> = sets.iter().map(|s| vec![false; s.len()]).collect();
    for (xy, map) in lookup.iter().enumerate() {
        let mut entries: Vec<_> = map.iter().collect();
        entries.sort();
        for (t, &c) in entries {
            if !rep_set[xy][c] {
                rep_set[xy][c] = true;
                reps[xy][c] = t.clone();
            }
        }
    }
    let first = path[0].clone();
    let last = path[n - 1].clone();
    let profunctor = Profunctor::from_fn(
        a0.clone(),
        an.clone(),
        sets,
        |a, y, u| {
            let x = a0.cod(a);
            let (objs, e) = &reps[x * nb + y][u];
            let mut o2 = objs.clone();
            o2[0] = a0.dom(a);
            let mut e2 = e.clone();
            e2[0] = first.lact(a, objs[1], e[0]);
            lookup[a0.dom(a) * nb + y][&(o2, e2)]
        },
        |x, u, b| {
            let y = an.dom(b);
            let (objs, e) = &reps[x * nb + y][u];
            let mut o2 = objs.clone();
            o2[n] = an.cod(b);
            let mut e2 = e.clone();
            e2[n - 1] = last.ract(objs[n - 1], e[n - 1], b);
            lookup[x * nb + an.cod(b)][&(o2, e2)]
        },
    );
    let frame = CellFrame::new(
        path.to_vec(),
        FinFunctor::identity(&a0),
        FinFunctor::identity(&an),
        Target::Unary(profunctor.clone()),
    )?;
    let cell = Cell::from_fn(frame, |objs, e| {
        lookup[objs[0] * nb + objs[n]][&(objs.to_vec(), e.to_vec())]
    })?;
    Ok(CompositeResult {
        profunctor,
        cocartesian_cell: cell,
        raw: raw_sets,
        class_map: class_maps,
        verdict: Verdict::HoldsExact,
    })
}

/// An isomorphism of profunctors witnessed by mutually inverse horizontal cells.
#[derive(Debug, Clone)]
pub struct ProfunctorIso {
    pub forward: Cell,
    pub backward: Cell,
}

impl ProfunctorIso {
    /// Checks validity of both cells and that they compose to identities both ways.
    pub fn verify(&self) -> bool {
        let (Target::Unary(k), Target::Unary(j)) =
            (self.forward.frame().target(), self.backward.frame().target())
        else {
            return false;
        };
        self.forward.is_valid()
            && self.backward.is_valid()
            && vertical_compose(&self.backward, &[self.forward.clone()]).ok() == Some(Cell::identity(j))
            && vertical_compose(&self.forward, &[self.backward.clone()]).ok() == Some(Cell::identity(k))
    }
}

fn horizontal_frame(j: &Profunctor, k: &Profunctor) -> Result<Arc<CellFrame>> {
    if !crate::category::same_category(j.source(), k.source())
        || !crate::category::same_category(j.target(), k.target())
    {
        return Err(Error::BoundaryMismatch("profunctors are not parallel".into()));
    }
    CellFrame::new(
        vec![j.clone()],
        FinFunctor::identity(j.source()),
        FinFunctor::identity(j.target()),
        Target::Unary(k.clone()),
    )
}

/// Builds the inverse pair from a forward map `(x, y, u) ↦ index in K(x, y)`.
/// Returns `None` when some component is not a bijection or the cells are not equivariant.
pub fn iso_from_map<F>(j: &Profunctor, k: &Profunctor, mut forward: F) -> Result<Option<ProfunctorIso>>
where
    F: FnMut(Obj, Obj, usize) -> usize,
{
    let fwd = Cell::from_fn(horizontal_frame(j, k)?, |o, e| forward(o[0], o[1], e[0]))?;
    let (na, nb) = (j.source().num_objects(), j.target().num_objects());
    let mut inv: Vec<Vec<usize>> = Vec::with_capacity(na * nb);
    for x in 0..na {
        for y in 0..nb {
            if j.size(x, y) != k.size(x, y) {
                return Ok(None);
            }
            let mut t = vec![usize::MAX; k.size(x, y)];
            for u in 0..j.size(x, y) {
                let v = fwd.get(&[x, y], &[u]);
                if t[v] != usize::MAX {
                    return Ok(None);
                }
                t[v] = u;
            }
            inv.push(t);
        }
    }
    let bwd = Cell::from_fn(horizontal_frame(k, j)?, |o, e| inv[o[0] * nb + o[1]][e[0]])?;
    let iso = ProfunctorIso {
        forward: fwd,
        backward: bwd,
    };
    Ok(iso.verify().then_some(iso))
}

/// Searches for an isomorphism `J ≅ K` among all horizontal cells `J ⇒ K`.
pub fn find_iso(j: &Profunctor, k: &Profunctor) -> Result<Option<ProfunctorIso>> {
    let frame = horizontal_frame(j, k)?;
    let (na, nb) = (j.source().num_objects(), j.target().num_objects());
    for x in 0..na {
        for y in 0..nb {
            if j.size(x, y) != k.size(x, y) {
                return Ok(None);
            }
        }
    }
    let mut found = None;
    crate::enumerate::for_each_cell(&frame, |cell| {
        let bijective = (0..na).all(|x| {
            (0..nb).all(|y| {
                let mut seen = vec![false; k.size(x, y)];
                (0..j.size(x, y)).all(|u| !std::mem::replace(&mut seen[cell.get(&[x, y], &[u])], true))
            })
        });
        if bijective {
            found = Some(cell);
            false
        } else {
            true
        }
    })?;
    match found {
        None => Ok(None),
        Some(cell) => iso_from_map(j, k, |x, y, u| cell.get(&[x, y], &[u])),
    }
}

/// The canonical isomorphism `K(f, g) ≅ f_* ⊙ K ⊙ g^*`, `k ↦ [id | k | id]`,
/// with inverse `[c | k | d] ↦ λ(c, ρ(k, d))`.
pub fn restriction_as_composite(k: &Profunctor, f: &FinFunctor, g: &FinFunctor) -> Result<(RestrictionResult, CompositeResult, ProfunctorIso)> {
    let r = restrict(k, f, g)?;
    let fs = companion(f)?;
    let gs = conjoint(g)?;
    let comp = horizontal_composite(&[fs.profunctor().clone(), k.clone(), gs.profunctor().clone()])?;
    let (c, d) = (k.source(), k.target());
    let iso = iso_from_map(&r.profunctor, &comp.profunctor, |x, y, u| {
        let (fx, gy) = (f.on_obj(x), g.on_obj(y));
        let objs = [x, fx, gy, y];
        let elems = [c.local_index(c.id(fx)), u, d.local_index(d.id(gy))];
        comp.class_of(&objs, &elems)
    })?
    .ok_or_else(|| Error::Invalid("canonical comparison is not invertible".into()))?;
    Ok((r, comp, iso))
}

/// The canonical isomorphism `I_A ⊙ J ≅ J`, `[a | u] ↦ λ(a, u)`.
pub fn left_unitor(j: &Profunctor) -> Result<ProfunctorIso> {
    let a = j.source().clone();
    let comp = horizontal_composite(&[Profunctor::hom(&a), j.clone()])?;
    iso_from_map(j, &comp.profunctor, |x, y, u| {
        comp.class_of(&[x, x, y], &[a.local_index(a.id(x)), u])
    })?
    .ok_or_else(|| Error::Invalid("left unit comparison is not invertible".into()))
}

/// The canonical isomorphism `J ⊙ I_B ≅ J`, `[u | b] ↦ ρ(u, b)`.
pub fn right_unitor(j: &Profunctor) -> Result<ProfunctorIso> {
    let b = j.target().clone();
    let comp = horizontal_composite(&[j.clone(), Profunctor::hom(&b)])?;
    iso_from_map(j, &comp.profunctor, |x, y, u| {
        comp.class_of(&[x, y, y], &[u, b.local_index(b.id(y))])
    })?
    .ok_or_else(|| Error::Invalid("right unit comparison is not invertible".into()))
}

/// Canonical isomorphisms `(J ⊙ H) ⊙ M ≅ J ⊙ H ⊙ M ≅ J ⊙ (H ⊙ M)`, from
/// the ternary composite to each nested one.
pub fn associators(j: &Profunctor, h: &Profunctor, m: &Profunctor) -> Result<(ProfunctorIso, ProfunctorIso)> {
    let ternary = horizontal_composite(&[j.clone(), h.clone(), m.clone()])?;
    let jh = horizontal_composite(&[j.clone(), h.clone()])?;
    let left = horizontal_composite(&[jh.profunctor.clone(), m.clone()])?;
    let hm = horizontal_composite(&[h.clone(), m.clone()])?;
    let right = horizontal_composite(&[j.clone(), hm.profunctor.clone()])?;
    let t = &ternary.profunctor;
    // choose the least raw representative of each ternary class and map it across
    let rep = |x: Obj, y: Obj, c: usize| -> (Vec<Obj>, Vec<usize>) {
        let mut best: Option<(String, Vec<Obj>, Vec<usize>)> = None;
        let b1 = j.target();
        let b2 = h.target();
        for u in 0..b1.num_objects() {
            for v in 0..b2.num_objects() {
                for e in tuples(&[j.size(x, u), h.size(u, v), m.size(v, y)]) {
                    let objs = vec![x, u, v, y];
                    if ternary.class_of(&objs, &e) == c {
                        let name = raw_name(&[j.clone(), h.clone(), m.clone()], &objs, &e);
                        if best.as_ref().map_or(true, |(b, _, _)| name < *b) {
                            best = Some((name, objs, e));
                        }
                    }
                }
            }
        }
        let (_, o, e) = best.expect("every class has a representative");
        (o, e)
    };
    let to_left = iso_from_map(t, &left.profunctor, |x, y, c| {
        let (o, e) = rep(x, y, c);
        let inner = jh.class_of(&[o[0], o[1], o[2]], &[e[0], e[1]]);
        left.class_of(&[o[0], o[2], o[3]], &[inner, e[2]])
    })?
    .ok_or_else(|| Error::Invalid("left associator is not invertible".into()))?;
    let to_right = iso_from_map(t, &right.profunctor, |x, y, c| {
        let (o, e) = rep(x, y, c);
        let inner = hm.class_of(&[o[1], o[2], o[3]], &[e[1], e[2]]);
        right.class_of(&[o[0], o[1], o[3]], &[e[0], inner])
    })?
    .ok_or_else(|| Error::Invalid("right associator is not invertible".into()))?;
    Ok((to_left, to_right))
}

/// The tabulation (graph) of a profunctor `J: A ⇸ B`.
#[derive(Debug, Clone)]
pub struct Tabulation {
    pub category: Arc<FinCategory>,
    pub proj_a: FinFunctor,
    pub proj_b: FinFunctor,
    /// The cell `π: (T) ⇒ J` with `(x, u, y) ↦ u`.
    pub pi: Cell,
    /// Object triples `(x, u, y)` by object index of the tabulation.
    pub triples: Vec<(Obj, usize, Obj)>,
}

/// Objects `(x, u, y)` with `u ∈ J(x, y)`; morphisms `(s, t): (x, u, y) → (x', u', y')`
/// with `λ(s, u') = ρ(u, t)`.
pub fn tabulation(j: &Profunctor) -> Result<Tabulation> {
    let (a, b) = (j.source().clone(), j.target().clone());
    let mut triples = Vec::new();
    for x in 0..a.num_objects() {
        for y in 0..b.num_objects() {
            for u in 0..j.size(x, y) {
                triples.push((x, u, y));
            }
        }
    }
    let obj_name = |&(x, u, y): &(Obj, usize, Obj)| {
        format!("({},{},{})", a.object_name(x), j.elems(x, y).atom(u), b.object_name(y))
    };
    let names: Vec<String> = triples.iter().map(obj_name).collect();
    let objects = FinSet::new(names.iter().cloned())?;
    let mut morphisms = Vec::new();
    let mut ends: HashMap<String, (Mor, Mor)> = HashMap::new();
    for (i, &(x, u, y)) in triples.iter().enumerate() {
        for (k, &(x2, u2, y2)) in triples.iter().enumerate() {
            for s in a.hom(x, x2) {
                for t in b.hom(y, y2) {
                    if j.lact(s, y2, u2) == j.ract(x, u, t) {
                        let name = format!("({},{}):{}→{}", a.mor_name(s), b.mor_name(t), names[i], names[k]);
                        ends.insert(name.clone(), (s, t));
                        morphisms.push((name, names[i].clone(), names[k].clone()));
                    }
                }
            }
        }
    }
    let triple_of: HashMap<&str, (Obj, usize, Obj)> =
        names.iter().map(String::as_str).zip(triples.iter().copied()).collect();
    let mor_by_parts: HashMap<(Mor, Mor, String, String), String> = morphisms
        .iter()
        .map(|(n, d, c)| {
            let (s, t) = ends[n];
            ((s, t, d.clone(), c.clone()), n.clone())
        })
        .collect();
    let identity: BTreeMap<String, String> = names
        .iter()
        .map(|n| {
            let (x, _, y) = triple_of[n.as_str()];
            (n.clone(), mor_by_parts[&(a.id(x), b.id(y), n.clone(), n.clone())].clone())
        })
        .collect();
    let dom_cod: HashMap<&str, (&str, &str)> = morphisms
        .iter()
        .map(|(n, d, c)| (n.as_str(), (d.as_str(), c.as_str())))
        .collect();
    let category = FinCategory::from_fn(objects, morphisms.clone(), &identity, |g, f| {
        let (fs, ft) = ends[f];
        let (gs, gt) = ends[g];
        let (d, _) = dom_cod[f];
        let (_, c) = dom_cod[g];
        mor_by_parts[&(a.compose(gs, fs), b.compose(gt, ft), d.to_string(), c.to_string())].clone()
    })?;
    let category = Arc::new(category);
    let tri_idx: Vec<(Obj, usize, Obj)> = (0..category.num_objects())
        .map(|i| triple_of[category.object_name(i)])
        .collect();
    let mor_parts: Vec<(Mor, Mor)> = (0..category.num_morphisms())
        .map(|m| ends[category.mor_name(m)])
        .collect();
    let proj_a = FinFunctor::new(
        category.clone(),
        a.clone(),
        tri_idx.iter().map(|t| t.0).collect(),
        mor_parts.iter().map(|p| p.0).collect(),
    )?;
    let proj_b = FinFunctor::new(
        category.clone(),
        b.clone(),
        tri_idx.iter().map(|t| t.2).collect(),
        mor_parts.iter().map(|p| p.1).collect(),
    )?;
    let frame = CellFrame::new(vec![], proj_a.clone(), proj_b.clone(), Target::Unary(j.clone()))?;
    let pi = Cell::from_fn(frame, |o, _| tri_idx[o[0]].1)?;
    Ok(Tabulation {
        category,
        proj_a,
        proj_b,
        pi,
        triples: tri_idx,
    })
}

impl Tabulation {
    /// The unique functor `φ': X → T` with `π ∘ id_{φ'} = φ`, for a cell
    /// `φ: (X) ⇒ J` with empty source.
    pub fn factor(&self, phi: &Cell) -> Result<FinFunctor> {
        let fr = phi.frame();
        if fr.arity() != 0 || fr.target() != self.pi.frame().target() {
            return Err(Error::FrameMismatch("expected a cell (X) ⇒ J with empty source".into()));
        }
        let x = fr.objects()[0].clone();
        let (fa, fb) = (fr.left(), fr.right());
        let t = &self.category;
        let obj_map: Vec<Obj> = (0..x.num_objects())
            .map(|o| {
                let want = (fa.on_obj(o), phi.get(&[o], &[]), fb.on_obj(o));
                self.triples.iter().position(|&tr| tr == want).unwrap()
            })
            .collect();
        let mor_map: Vec<Mor> = (0..x.num_morphisms())
            .map(|m| {
                let (d, c) = (obj_map[x.dom(m)], obj_map[x.cod(m)]);
                t.hom(d, c)
                    .find(|&tm| {
                        self.proj_a.on_mor(tm) == fa.on_mor(m) && self.proj_b.on_mor(tm) == fb.on_mor(m)
                    })
                    .ok_or_else(|| Error::Invalid("cell is not equivariant".into()))
            })
            .collect::<Result<_>>()?;
        FinFunctor::new(x, t.clone(), obj_map, mor_map)
    }
}

fn functor_key(f: &FinFunctor) -> (Vec<Obj>, Vec<Mor>) {
    (f.obj_map().to_vec(), f.mor_map().to_vec())
}

/// The unit cell `π ∘ (id_{φ'})` of a functor `φ': X → T` into the tabulation.
pub fn tabulation_cone(tab: &Tabulation, phi: &FinFunctor) -> Result<Cell> {
    vertical_compose(&tab.pi, &[Cell::vertical_identity(phi)])
}

/// The 1-dimensional property: for each test category `X`, the assignment
/// `φ' ↦ π ∘ id_{φ'}` from functors `X → T` to cells `(X) ⇒ J` with empty
/// source is a bijection. Exact for the given test categories.
pub fn check_tabulation_one_dim(tab: &Tabulation, tests: &[Arc<FinCategory>]) -> Result<CheckResult> {
    let Target::Unary(j) = tab.pi.frame().target() else {
        unreachable!("π is unary")
    };
    let mut cones = 0usize;
    for x in tests {
        let mut image = HashMap::new();
        for phi in enumerate_functors(x, &tab.category) {
            let c = tabulation_cone(tab, &phi)?;
            if let Some(prev) = image.insert((functor_key(c.frame().left()), functor_key(c.frame().right()), c.values().to_vec()), phi.clone()) {
                return Ok(CheckResult::fails(Some(c), Some((prev, phi)), "two functors induce the same cone"));
            }
        }
        for f in enumerate_functors(x, j.source()) {
            for g in enumerate_functors(x, j.target()) {
                let frame = CellFrame::new(vec![], f.clone(), g.clone(), Target::Unary(j.clone()))?;
                for c in enumerate_cells(&frame)? {
                    cones += 1;
                    if !image.contains_key(&(functor_key(&f), functor_key(&g), c.values().to_vec())) {
                        return Ok(CheckResult::fails(Some(c), Some((f, g)), "a cone with no factorization"));
                    }
                }
            }
        }
    }
    Ok(CheckResult::exact(format!("{cones} cones over {} test categories factor uniquely", tests.len())))
}

/// The 2-dimensional property over context paths `H: X0 ⇸ … ⇸ Xn` of length up
/// to the bound and all functors `φ': X0 → T`, `ψ': Xn → T`: pairs of nullary
/// cells `ξ_A`, `ξ_B` with `ξ_A ⋆ ψ = φ ⋆ ξ_B` correspond uniquely to cells
/// `ξ': H ⇒ T` via `ξ' ↦ (π_A ∘ ξ', π_B ∘ ξ')`.
pub fn check_tabulation_two_dim(tab: &Tabulation, tests: &[Arc<FinCategory>], ctx: &Context) -> Result<CheckResult> {
    let (a, b) = (tab.proj_a.target().clone(), tab.proj_b.target().clone());
    let id_a = Cell::vertical_identity(&tab.proj_a);
    let id_b = Cell::vertical_identity(&tab.proj_b);
    let mut frames = 0usize;
    for x0 in tests {
        for path in ctx.paths_from(x0, 0, ctx.max_path_len) {
            let xn = path.last().map(|j| j.target().clone()).unwrap_or_else(|| x0.clone());
            for phi in enumerate_functors(x0, &tab.category) {
                let cone_phi = tabulation_cone(tab, &phi)?;
                for psi in enumerate_functors(&xn, &tab.category) {
                    let cone_psi = tabulation_cone(tab, &psi)?;
                    frames += 1;
                    let fr = CellFrame::new(path.clone(), phi.clone(), psi.clone(), Target::Nullary(tab.category.clone()))?;
                    let mut image = HashMap::new();
                    for xi in enumerate_cells(&fr)? {
                        let pa = vertical_compose(&id_a, &[xi.clone()])?;
                        let pb = vertical_compose(&id_b, &[xi.clone()])?;
                        if image.insert((pa.values().to_vec(), pb.values().to_vec()), ()).is_some() {
                            return Ok(CheckResult::fails(Some(xi), Some((phi, psi)), "two cells into the tabulation with the same projections"));
                        }
                    }
                    let fa = CellFrame::new(path.clone(), phi.then(&tab.proj_a)?, psi.then(&tab.proj_a)?, Target::Nullary(a.clone()))?;
                    let fb = CellFrame::new(path.clone(), phi.then(&tab.proj_b)?, psi.then(&tab.proj_b)?, Target::Nullary(b.clone()))?;
                    let xbs = enumerate_cells(&fb)?;
                    for xa in enumerate_cells(&fa)? {
                        let lhs = horizontal_compose(&xa, &cone_psi)?;
                        for xb in &xbs {
                            if lhs == horizontal_compose(&cone_phi, xb)?
                                && !image.contains_key(&(xa.values().to_vec(), xb.values().to_vec()))
                            {
                                return Ok(CheckResult::fails(Some(xa), Some((phi, psi)), "a compatible pair with no lift"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(CheckResult::bounded(ctx.max_path_len, format!("{frames} frames with unique lifts")))
}

/// The cotabulation (cograph) of `J: A ⇸ B`.
#[derive(Debug, Clone)]
pub struct Cotabulation {
    pub category: Arc<FinCategory>,
    pub inl: FinFunctor,
    pub inr: FinFunctor,
    /// The nullary cell `σ: (J) ⇒ cograph` with identity components.
    pub sigma: Cell,
    pub verdict: Verdict,
}

/// Objects `inl(x)`, `inr(y)`; homs `A(x, x')`, `J(x, y)`, `B(y, y')` and empty otherwise.
pub fn cotabulation(j: &Profunctor) -> Result<Cotabulation> {
    let (a, b) = (j.source().clone(), j.target().clone());
    let l = |x: Obj| format!("inl({})", a.object_name(x));
    let r = |y: Obj| format!("inr({})", b.object_name(y));
    let ml = |m: Mor| format!("inl({})", a.mor_name(m));
    let mr = |m: Mor| format!("inr({})", b.mor_name(m));
    let mj = |x: Obj, u: usize, y: Obj| {
        format!("j({},{},{})", a.object_name(x), j.elems(x, y).atom(u), b.object_name(y))
    };
    #[derive(Clone, Copy)]
    enum Part {
        L(Mor),
        R(Mor),
        J(Obj, usize, Obj),
    }
    let objects = FinSet::new((0..a.num_objects()).map(l).chain((0..b.num_objects()).map(r)))?;
    let mut morphisms = Vec::new();
    let mut parts = HashMap::new();
    for m in 0..a.num_morphisms() {
        parts.insert(ml(m), Part::L(m));
        morphisms.push((ml(m), l(a.dom(m)), l(a.cod(m))));
    }
    for m in 0..b.num_morphisms() {
        parts.insert(mr(m), Part::R(m));
        morphisms.push((mr(m), r(b.dom(m)), r(b.cod(m))));
    }
    for x in 0..a.num_objects() {
        for y in 0..b.num_objects() {
            for u in 0..j.size(x, y) {
                parts.insert(mj(x, u, y), Part::J(x, u, y));
                morphisms.push((mj(x, u, y), l(x), r(y)));
            }
        }
    }
    let identity: BTreeMap<String, String> = (0..a.num_objects())
        .map(|x| (l(x), ml(a.id(x))))
        .chain((0..b.num_objects()).map(|y| (r(y), mr(b.id(y)))))
        .collect();
    let category = FinCategory::from_fn(objects, morphisms, &identity, |g, f| match (parts[g], parts[f]) {
        (Part::L(g), Part::L(f)) => ml(a.compose(g, f)),
        (Part::R(g), Part::R(f)) => mr(b.compose(g, f)),
        (Part::J(_, u, y), Part::L(f)) => mj(a.dom(f), j.lact(f, y, u), y),
        (Part::R(g), Part::J(x, u, _)) => mj(x, j.ract(x, u, g), b.cod(g)),
        _ => unreachable!("non-composable pair in cograph"),
    })?;
    let category = Arc::new(category);
    let inl = FinFunctor::new(
        a.clone(),
        category.clone(),
        (0..a.num_objects()).map(|x| category.object_index(&l(x)).unwrap()).collect(),
        (0..a.num_morphisms()).map(|m| category.mor_index(&ml(m)).unwrap()).collect(),
    )?;
    let inr = FinFunctor::new(
        b.clone(),
        category.clone(),
        (0..b.num_objects()).map(|y| category.object_index(&r(y)).unwrap()).collect(),
        (0..b.num_morphisms()).map(|m| category.mor_index(&mr(m)).unwrap()).collect(),
    )?;
    let frame = CellFrame::new(vec![j.clone()], inl.clone(), inr.clone(), Target::Nullary(category.clone()))?;
    let sigma = Cell::from_fn(frame, |o, e| {
        category.local_index(category.mor_index(&mj(o[0], e[0], o[1])).unwrap())
    })?;
    Ok(Cotabulation {
        category,
        inl,
        inr,
        sigma,
        verdict: Verdict::HoldsExact,
    })
}

/// Whether every hom-action `A(x, y) → C(f x, f y)` is a bijection.
pub fn is_full_and_faithful(f: &FinFunctor) -> bool {
    let (a, c) = (f.source(), f.target());
    (0..a.num_objects()).all(|x| {
        (0..a.num_objects()).all(|y| {
            let mut image: Vec<Mor> = a.hom(x, y).map(|m| f.on_mor(m)).collect();
            image.sort_unstable();
            image.dedup();
            image.len() == a.hom_len(x, y) && image.len() == c.hom_len(f.on_obj(x), f.on_obj(y))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{terminal, walking_arrow};

    fn over_one(atoms: &[&str]) -> Profunctor {
        let one = Arc::new(terminal());
        let set = FinSet::new(atoms.iter().copied()).unwrap();
        Profunctor::from_fn(one.clone(), one, vec![set], |_, _, u| u, |_, u, _| u)
    }

    #[test]
    fn restriction_of_hom_along_constant() {
        let c = Arc::new(walking_arrow());
        let one = Arc::new(terminal());
        let at0 = FinFunctor::constant(&one, &c, 0);
        let r = restrict(&Profunctor::hom(&c), &at0, &at0).unwrap();
        assert_eq!(r.profunctor.elems(0, 0).atoms(), ["id0"]);
        assert!(r.cartesian_cell.is_valid());
    }

    #[test]
    fn restriction_along_identities_is_the_same_table() {
        let c = Arc::new(walking_arrow());
        let h = Profunctor::hom(&c);
        let id = FinFunctor::identity(&c);
        assert_eq!(restrict(&h, &id, &id).unwrap().profunctor, h);
    }

    #[test]
    fn companion_and_conjoint_of_pick_zero() {
        let c = Arc::new(walking_arrow());
        let f = FinFunctor::pick(&c, 0);
        let comp = companion(&f).unwrap();
        assert_eq!(comp.profunctor().elems(0, 0).atoms(), ["id0"]);
        assert_eq!(comp.profunctor().elems(0, 1).atoms(), ["a"]);
        assert!(companion_identities_hold(&f, &comp).unwrap());
        let conj = conjoint(&f).unwrap();
        assert_eq!(conj.profunctor().elems(0, 0).atoms(), ["id0"]);
        assert!(conj.profunctor().elems(1, 0).is_empty());
        assert!(conjoint_identities_hold(&f, &conj).unwrap());
    }

    #[test]
    fn unit_is_companion_of_identity() {
        let c = Arc::new(walking_arrow());
        let u = unit_profunctor(&c).unwrap();
        assert_eq!(u.profunctor, Profunctor::hom(&c));
        let one = Arc::new(terminal());
        assert_eq!(unit_profunctor(&one).unwrap().profunctor.elems(0, 0).atoms(), ["id"]);
    }

    #[test]
    fn composite_without_identifications() {
        let comp = horizontal_composite(&[over_one(&["u", "v"]), over_one(&["w"])]).unwrap();
        assert_eq!(comp.profunctor.size(0, 0), 2);
        assert!(comp.cocartesian_cell.is_valid());
    }

    #[test]
    fn hom_composite_collapses() {
        let c = Arc::new(walking_arrow());
        let h = Profunctor::hom(&c);
        let comp = horizontal_composite(&[h.clone(), h.clone()]).unwrap();
        assert_eq!(comp.raw[1].len(), 2);
        assert_eq!(comp.profunctor.size(0, 1), 1);
        assert_eq!(comp.profunctor.elems(0, 1).atoms(), ["[a|1|id1]"]);
        assert!(comp.profunctor.is_valid());
        assert!(find_iso(&comp.profunctor, &h).unwrap().is_some());
        assert!(left_unitor(&h).unwrap().verify());
        assert!(right_unitor(&h).unwrap().verify());
        let (l, r) = associators(&h, &h, &h).unwrap();
        assert!(l.verify() && r.verify());
    }

    #[test]
    fn restriction_matches_composite() {
        let c = Arc::new(walking_arrow());
        let h = Profunctor::hom(&c);
        let f = FinFunctor::pick(&c, 0);
        let g = FinFunctor::identity(&c);
        let (_, _, iso) = restriction_as_composite(&h, &f, &g).unwrap();
        assert!(iso.verify());
    }

    #[test]
    fn tabulation_of_two_element_set_is_discrete() {
        let t = tabulation(&over_one(&["u", "v"])).unwrap();
        assert_eq!(t.category.num_objects(), 2);
        assert!(t.category.is_discrete());
        assert!(t.pi.is_valid());
        assert!(t.category.is_valid());
    }

    #[test]
    fn tabulation_of_hom_is_arrow_category() {
        let c = Arc::new(walking_arrow());
        let t = tabulation(&Profunctor::hom(&c)).unwrap();
        // arrow category of 𝟚: objects id0, a, id1; morphisms 3 identities + id0→a, a→id1, id0→id1
        assert_eq!(t.category.num_objects(), 3);
        assert_eq!(t.category.num_morphisms(), 6);
        assert!(t.category.is_valid());
    }

    #[test]
    fn tabulation_universal_properties() {
        let c = Arc::new(walking_arrow());
        let one = Arc::new(terminal());
        let h = Profunctor::hom(&c);
        let t = tabulation(&h).unwrap();
        let tests = vec![one.clone(), c.clone()];
        assert_eq!(check_tabulation_one_dim(&t, &tests).unwrap().verdict, Verdict::HoldsExact);
        let ctx = Context::new(vec![over_one(&["u", "v"])], vec![], 1);
        assert!(check_tabulation_two_dim(&t, &[one.clone()], &ctx).unwrap().holds());
        let ctx = Context::new(vec![h.clone()], vec![], 1);
        assert!(crate::universal::is_cocartesian_path(&[t.pi.clone()], &ctx).unwrap().holds());
        // factoring a cone recovers its functor
        let phi = FinFunctor::pick(&t.category, 1);
        let cone = tabulation_cone(&t, &phi).unwrap();
        assert_eq!(t.factor(&cone).unwrap().obj_map(), phi.obj_map());
    }

    #[test]
    fn cotabulations() {
        let empty = Profunctor::empty(&Arc::new(terminal()), &Arc::new(terminal()));
        let e = cotabulation(&empty).unwrap();
        assert!(e.category.is_discrete() && e.category.num_objects() == 2);
        let one = cotabulation(&over_one(&["u"])).unwrap();
        assert_eq!(one.category.num_morphisms(), 3);
        assert!(one.category.is_valid());
        assert!(one.sigma.is_valid());
        let c = Arc::new(walking_arrow());
        let h = Profunctor::hom(&c);
        let co = cotabulation(&h).unwrap();
        assert_eq!(co.category.num_morphisms(), 3 + 3 + 3);
        assert!(co.category.is_valid());
    }

    #[test]
    fn full_and_faithful_examples() {
        let c = Arc::new(walking_arrow());
        let one = Arc::new(terminal());
        assert!(is_full_and_faithful(&FinFunctor::identity(&c)));
        assert!(is_full_and_faithful(&FinFunctor::pick(&c, 0)));
        assert!(!is_full_and_faithful(&FinFunctor::to_terminal(&c, &one)));
    }
}
