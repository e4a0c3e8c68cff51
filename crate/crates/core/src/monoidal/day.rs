use std::collections::{BTreeMap, HashMap};

use crate::category::{same_category, Mor, Obj};
use crate::cell::Cell;
use crate::construct::ProfunctorIso;
use crate::error::{Error, Result, Violation};
use crate::finset::{quotient_by, FinSet, UnionFind};
use crate::functor::inverse_morphism;
use crate::universal::CheckResult;
use crate::util::tuples;
use crate::yoneda::{curry, presheaf_iso, transformation, yoneda_map, yoneda_object, Curry, Presheaf};

use super::profunctor::MonoidalProfunctor;
use super::structure::{chunks, shape_name, shapes, MonoidalStructure};

type Raw = (Vec<Obj>, Mor, Vec<usize>);

/// The Day convolution `⊛(p_1, .., p_n)(x) = ∫^{u̲} A(x, ⊗u̲) × p_1 u_1 × .. × p_n u_n`,
/// computed per object as the quotient of the tuples `(u̲, s, q̲)` by
/// `(u̲', ⊗t̲ ∘ s, q̲') ~ (u̲, s, t̲^* q̲')` for `t̲: u̲ → u̲'`.
#[derive(Debug, Clone)]
pub struct DayConvolution {
    pub presheaf: Presheaf,
    pub factors: Vec<Presheaf>,
    raw: Vec<Vec<Raw>>,
    index: Vec<HashMap<Raw, usize>>,
    class: Vec<Vec<usize>>,
    reps: Vec<Vec<usize>>,
}

impl DayConvolution {
    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    /// The class of `[u̲, s, q̲]` at `x`.
    pub fn class_of(&self, x: Obj, us: &[Obj], s: Mor, qs: &[usize]) -> usize {
        let key = (us.to_vec(), s, qs.to_vec());
        self.class[x][self.index[x][&key]]
    }

    /// The least representative `(u̲, s, q̲)` of a class at `x`.
    pub fn representative(&self, x: Obj, c: usize) -> (&[Obj], Mor, &[usize]) {
        let (us, s, qs) = &self.raw[x][self.reps[x][c]];
        (us, *s, qs)
    }

    /// All tuples at `x` with their classes.
    pub fn raw_elements(&self, x: Obj) -> impl Iterator<Item = (&[Obj], Mor, &[usize], usize)> + '_ {
        self.raw[x].iter().zip(&self.class[x]).map(|((us, s, qs), &c)| (us.as_slice(), *s, qs.as_slice(), c))
    }
}

/// The `n`-ary Day convolution of presheaves on the base of `m`; `n = 0` gives `y(e)`.
pub fn day_convolution(m: &MonoidalStructure, ps: &[Presheaf]) -> Result<DayConvolution> {
    let n = ps.len();
    if n > m.bound() {
        return Err(Error::ArityExceeded { arity: n, bound: m.bound() });
    }
    let a = m.base().clone();
    if ps.iter().any(|p| !same_category(p.base(), &a)) {
        return Err(Error::BoundaryMismatch("presheaves must live on the monoidal category".into()));
    }
    let no = a.num_objects();
    let obj_tuples = tuples(&vec![no; n]);
    let mor_tuples: Vec<Vec<Mor>> =
        tuples(&vec![a.num_morphisms(); n]).into_iter().filter(|ts| !ts.iter().all(|&t| a.is_identity(t))).collect();
    let (mut raw_all, mut index_all, mut class_all, mut reps_all, mut values) = (vec![], vec![], vec![], vec![], vec![]);
    for x in 0..no {
        let mut raw: Vec<(String, Raw)> = Vec::new();
        for us in &obj_tuples {
            let sizes: Vec<usize> = us.iter().zip(ps).map(|(&u, p)| p.size(u)).collect();
            for s in a.hom(x, m.tensor(us)) {
                for qs in tuples(&sizes) {
                    let parts: Vec<String> = us
                        .iter()
                        .zip(&qs)
                        .zip(ps)
                        .map(|((&u, &q), p)| format!("{}:{}", a.object_name(u), p.value(u).atom(q)))
                        .collect();
                    let name = if parts.is_empty() {
                        format!("[{}]", a.mor_name(s))
                    } else {
                        format!("[{}|{}]", a.mor_name(s), parts.join("|"))
                    };
                    raw.push((name, (us.clone(), s, qs)));
                }
            }
        }
        raw.sort_by(|l, r| l.0.cmp(&r.0));
        let set = FinSet::new(raw.iter().map(|r| r.0.clone()))?;
        let raw: Vec<Raw> = raw.into_iter().map(|r| r.1).collect();
        let index: HashMap<Raw, usize> = raw.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let mut uf = UnionFind::new(raw.len());
        for ts in &mor_tuples {
            let d: Vec<Obj> = ts.iter().map(|&t| a.dom(t)).collect();
            let e: Vec<Obj> = ts.iter().map(|&t| a.cod(t)).collect();
            let sizes: Vec<usize> = e.iter().zip(ps).map(|(&u, p)| p.size(u)).collect();
            let tt = m.tensor_mor(ts);
            for s in a.hom(x, m.tensor(&d)) {
                for qs in tuples(&sizes) {
                    let pulled: Vec<usize> = ts.iter().zip(&qs).zip(ps).map(|((&t, &q), p)| p.act(t, q)).collect();
                    let l = index[&(e.clone(), a.compose(tt, s), qs)];
                    let r = index[&(d.clone(), s, pulled)];
                    uf.union(l, r);
                }
            }
        }
        let (quot, proj) = quotient_by(&set, &mut uf);
        let class = proj.table().to_vec();
        let mut reps = vec![usize::MAX; quot.len()];
        for (i, &c) in class.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = i;
            }
        }
        values.push(quot);
        raw_all.push(raw);
        index_all.push(index);
        class_all.push(class);
        reps_all.push(reps);
    }
    let presheaf = Presheaf::from_fn(&a, values, |f, c| {
        let (x, x2) = (a.cod(f), a.dom(f));
        let (us, s, qs) = &raw_all[x][reps_all[x][c]];
        class_all[x2][index_all[x2][&(us.clone(), a.compose(*s, f), qs.clone())]]
    });
    Ok(DayConvolution {
        presheaf,
        factors: ps.to_vec(),
        raw: raw_all,
        index: index_all,
        class: class_all,
        reps: reps_all,
    })
}

/// `⊛(θ_1, .., θ_n): ⊛(p̲) ⇒ ⊛(q̲)` for transformations `θ_i: p_i ⇒ q_i`.
pub fn day_map(src: &DayConvolution, tgt: &DayConvolution, thetas: &[Cell]) -> Result<Cell> {
    if thetas.len() != src.arity() || tgt.arity() != src.arity() {
        return Err(Error::FrameMismatch("one transformation per factor".into()));
    }
    transformation(&src.presheaf, &tgt.presheaf, |x, c| {
        let (us, s, qs) = src.representative(x, c);
        let moved: Vec<usize> = thetas.iter().zip(us).zip(qs).map(|((t, &u), &q)| t.get(&[u, 0], &[q])).collect();
        tgt.class_of(x, us, s, &moved)
    })?
    .ok_or_else(|| Error::Invalid("induced map on Day convolutions is not natural".into()))
}

/// The unitor `p ⇒ ⊛_1(p)`, `u ↦ [x, 𝔦_x, u]`.
pub fn day_unitor(m: &MonoidalStructure, p: &Presheaf) -> Result<(DayConvolution, Cell)> {
    let d = day_convolution(m, std::slice::from_ref(p))?;
    let cell = transformation(p, &d.presheaf, |x, u| d.class_of(x, &[x], m.unitor(x), &[u]))?
        .ok_or_else(|| Error::Invalid("Day unitor is not natural".into()))?;
    Ok((d, cell))
}

/// The associator of Day convolution for a grouping of presheaves, with its
/// source `⊛_n(⊛(group_1), .., ⊛(group_n))` and target `⊛(all factors)`.
#[derive(Debug, Clone)]
pub struct DayAssociator {
    pub shape: Vec<usize>,
    pub inner: Vec<DayConvolution>,
    pub outer: DayConvolution,
    pub flat: DayConvolution,
    pub cell: Cell,
}

impl DayAssociator {
    /// Whether every component is a bijection.
    pub fn is_invertible(&self) -> bool {
        invert_components(&self.cell, &self.outer.presheaf, &self.flat.presheaf).is_some()
    }
}

/// The element of `⊛(flat)` at `x` that `[w̲, s, c̲]` of the nested convolution is sent to:
/// `[u̲, 𝔞 ∘ ⊗(s̲) ∘ s, q̲]` where `c_i = [u̲_i, s_i, q̲_i]`.
fn associate(m: &MonoidalStructure, inner: &[DayConvolution], flat: &DayConvolution, x: Obj, ws: &[Obj], s: Mor, cs: &[usize]) -> usize {
    let a = m.base();
    let mut us = Vec::new();
    let mut qs = Vec::new();
    let mut ss = Vec::new();
    let mut shape = Vec::new();
    for ((d, &w), &c) in inner.iter().zip(ws).zip(cs) {
        let (u, si, q) = d.representative(w, c);
        us.extend_from_slice(u);
        qs.extend_from_slice(q);
        ss.push(si);
        shape.push(u.len());
    }
    let to_flat = a.compose(m.associator(&shape, &us), a.compose(m.tensor_mor(&ss), s));
    flat.class_of(x, &us, to_flat, &qs)
}

/// The Day associator `⊛_n(⊛(group_1), .., ⊛(group_n)) ⇒ ⊛(group_1 .. group_n)`.
pub fn day_associator(m: &MonoidalStructure, groups: &[Vec<Presheaf>]) -> Result<DayAssociator> {
    let inner: Vec<DayConvolution> = groups.iter().map(|g| day_convolution(m, g)).collect::<Result<_>>()?;
    let outer = day_convolution(m, &inner.iter().map(|d| d.presheaf.clone()).collect::<Vec<_>>())?;
    let all: Vec<Presheaf> = groups.iter().flatten().cloned().collect();
    let flat = day_convolution(m, &all)?;
    let cell = transformation(&outer.presheaf, &flat.presheaf, |x, c| {
        let (ws, s, cs) = outer.representative(x, c);
        associate(m, &inner, &flat, x, ws, s, cs)
    })?
    .ok_or_else(|| Error::Invalid("Day associator is not natural".into()))?;
    Ok(DayAssociator {
        shape: groups.iter().map(|g| g.len()).collect(),
        inner,
        outer,
        flat,
        cell,
    })
}

/// `[u̲, s, q̲] ↦ p(𝔦⁻¹ ∘ 𝔞 ∘ ⊗(..) ∘ s)(q)` collapsing the unit factor of
/// `y(e) ⊛ p` (`left`) or `p ⊛ y(e)`; needs invertible unitors.
pub fn day_unit_law(m: &MonoidalStructure, p: &Presheaf, left: bool) -> Result<Option<ProfunctorIso>> {
    let a = m.base().clone();
    let ye = yoneda_object(&a, m.unit())?;
    let ps = if left { vec![ye, p.clone()] } else { vec![p.clone(), ye] };
    let d = day_convolution(m, &ps)?;
    let (pi, ei) = if left { (1, 0) } else { (0, 1) };
    let mut bad = false;
    let map = |x: Obj, c: usize| -> Option<usize> {
        let (us, s, qs) = d.representative(x, c);
        let (u, e) = (us[pi], us[ei]);
        let t = a.hom(e, m.unit()).start + qs[ei];
        let mut collapse = [a.id(u), a.id(u)];
        collapse[ei] = t;
        let widen = {
            let mut w = [a.id(m.unit()), a.id(m.unit())];
            w[pi] = m.unitor(u);
            m.tensor_mor(&w)
        };
        let shape: &[usize] = if left { &[0, 1] } else { &[1, 0] };
        let inv = inverse_morphism(&a, m.unitor(u))?;
        let path = a.compose(inv, a.compose(m.associator(shape, &[u]), a.compose(widen, a.compose(m.tensor_mor(&collapse), s))));
        Some(p.act(path, qs[pi]))
    };
    let table: Vec<Vec<usize>> = (0..a.num_objects())
        .map(|x| {
            (0..d.presheaf.size(x))
                .map(|c| {
                    map(x, c).unwrap_or_else(|| {
                        bad = true;
                        0
                    })
                })
                .collect()
        })
        .collect();
    if bad {
        return Err(Error::Precondition("unit collapse needs invertible unitors".into()));
    }
    presheaf_iso(&d.presheaf, p, |x, _, c| table[x][c])
}

fn invert_components(cell: &Cell, p: &Presheaf, q: &Presheaf) -> Option<Vec<Vec<usize>>> {
    let a = p.base();
    let mut inv = Vec::with_capacity(a.num_objects());
    for x in 0..a.num_objects() {
        if p.size(x) != q.size(x) {
            return None;
        }
        let mut row = vec![usize::MAX; q.size(x)];
        for u in 0..p.size(x) {
            let v = cell.get(&[x, 0], &[u]);
            if row[v] != usize::MAX {
                return None;
            }
            row[v] = u;
        }
        inv.push(row);
    }
    Some(inv)
}

/// A compositor `⊛(F y_1, .., F y_n) ⇒ F(⊗y̲)` of a family of presheaves.
#[derive(Debug, Clone)]
pub struct Compositor {
    pub ys: Vec<Obj>,
    pub day: DayConvolution,
    pub cell: Cell,
    /// The inverse transformation, when every component is bijective.
    pub inverse: Option<Cell>,
}

impl Compositor {
    pub fn is_invertible(&self) -> bool {
        self.inverse.is_some()
    }
}

/// A family `y ↦ F y` of presheaves on the base of `ma`, indexed by objects
/// of `mb`, with `F b` given on elements and compositors given on coend tuples.
struct Family<'a> {
    ma: &'a MonoidalStructure,
    mb: &'a MonoidalStructure,
    values: Vec<Presheaf>,
    fmap: Box<dyn Fn(Mor, Obj, usize) -> usize + 'a>,
    comp: Box<dyn Fn(&[Obj], Obj, &[Obj], Mor, &[usize]) -> usize + 'a>,
}

impl Family<'_> {
    fn compositor(&self, ys: &[Obj]) -> Result<Compositor> {
        let ps: Vec<Presheaf> = ys.iter().map(|&y| self.values[y].clone()).collect();
        let day = day_convolution(self.ma, &ps)?;
        let target = &self.values[self.mb.tensor(ys)];
        for x in 0..self.ma.base().num_objects() {
            for (us, s, qs, c) in day.raw_elements(x) {
                let (ru, rs, rq) = day.representative(x, c);
                if (self.comp)(ys, x, us, s, qs) != (self.comp)(ys, x, ru, rs, rq) {
                    return Err(Error::Invalid("compositor is not constant on coend classes".into()));
                }
            }
        }
        let cell = transformation(&day.presheaf, target, |x, c| {
            let (us, s, qs) = day.representative(x, c);
            (self.comp)(ys, x, us, s, qs)
        })?
        .ok_or_else(|| Error::Invalid("compositor is not natural".into()))?;
        let inverse = match invert_components(&cell, &day.presheaf, target) {
            Some(inv) => transformation(target, &day.presheaf, |x, v| inv[x][v])?,
            None => None,
        };
        Ok(Compositor {
            ys: ys.to_vec(),
            day,
            cell,
            inverse,
        })
    }

    fn all_compositors(&self) -> Result<BTreeMap<Vec<Obj>, Compositor>> {
        let nb = self.mb.base().num_objects();
        let mut out = BTreeMap::new();
        for n in 0..=self.mb.bound() {
            for ys in tuples(&vec![nb; n]) {
                let c = self.compositor(&ys)?;
                out.insert(ys, c);
            }
        }
        Ok(out)
    }

    /// Associativity against the Day associator and `F(𝔞)`, and the unit
    /// axiom against the Day unitor and `F(𝔦)`, at every shape.
    fn coherence(&self, comps: &BTreeMap<Vec<Obj>, Compositor>) -> Result<Vec<Violation>> {
        let (ma, mb) = (self.ma, self.mb);
        let (a, b) = (ma.base(), mb.base());
        let mut out = Vec::new();
        for s in shapes(mb.bound()) {
            let width: usize = s.iter().sum();
            for ys in tuples(&vec![b.num_objects(); width]) {
                let parts = chunks(&s, &ys);
                let inner: Vec<DayConvolution> = parts.iter().map(|p| comps[*p].day.clone()).collect();
                let outer = day_convolution(ma, &inner.iter().map(|d| d.presheaf.clone()).collect::<Vec<_>>())?;
                let yt: Vec<Obj> = parts.iter().map(|p| mb.tensor(p)).collect();
                let (flat, mid) = (&comps[&ys], &comps[&yt]);
                let assoc = mb.associator(&s, &ys);
                'elems: for x in 0..a.num_objects() {
                    for c in 0..outer.presheaf.size(x) {
                        let (ws, sx, cs) = outer.representative(x, c);
                        let lhs = flat.cell.get(&[x, 0], &[associate(ma, &inner, &flat.day, x, ws, sx, cs)]);
                        let moved: Vec<usize> =
                            parts.iter().zip(ws).zip(cs).map(|((p, &w), &ci)| comps[*p].cell.get(&[w, 0], &[ci])).collect();
                        let m = mid.day.class_of(x, ws, sx, &moved);
                        let rhs = (self.fmap)(assoc, x, mid.cell.get(&[x, 0], &[m]));
                        if lhs != rhs {
                            let names: Vec<&str> = ys.iter().map(|&y| b.object_name(y)).collect();
                            out.push(Violation::new(
                                "compositor associativity",
                                format!("shape {} at ({}), component {}", shape_name(&s), names.join(","), a.object_name(x)),
                            ));
                            break 'elems;
                        }
                    }
                }
            }
        }
        for y in 0..b.num_objects() {
            let one = &comps[&vec![y]];
            for x in 0..a.num_objects() {
                for u in 0..self.values[y].size(x) {
                    let lhs = one.cell.get(&[x, 0], &[one.day.class_of(x, &[x], ma.unitor(x), &[u])]);
                    let rhs = (self.fmap)(mb.unitor(y), x, u);
                    if lhs != rhs {
                        out.push(Violation::new("compositor unit", format!("at {}, component {}", b.object_name(y), a.object_name(x))));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The isomorphisms `ȳ: y x_1 ⊛ .. ⊛ y x_n ≅ y(⊗x̲)`, `[u̲, s, q̲] ↦ ⊗(q̲) ∘ s`,
/// for all tuples of arity at most `N`, with their coherence.
#[derive(Debug, Clone)]
pub struct YonedaStructure {
    pub compositors: BTreeMap<Vec<Obj>, Compositor>,
    pub coherence: Vec<Violation>,
}

impl YonedaStructure {
    pub fn all_invertible(&self) -> bool {
        self.compositors.values().all(Compositor::is_invertible)
    }

    pub fn holds(&self) -> bool {
        self.all_invertible() && self.coherence.is_empty()
    }
}

pub fn yoneda_monoidal_structure(m: &MonoidalStructure) -> Result<YonedaStructure> {
    let a = m.base().clone();
    let values: Vec<Presheaf> = (0..a.num_objects()).map(|x| yoneda_object(&a, x)).collect::<Result<_>>()?;
    let (a1, a2) = (a.clone(), a.clone());
    let fam = Family {
        ma: m,
        mb: m,
        values,
        fmap: Box::new(move |b, x, t| {
            let f = a1.hom(x, a1.dom(b)).start + t;
            a1.local_index(a1.compose(b, f))
        }),
        comp: Box::new(move |xs, _x, us, s, qs| {
            let fs: Vec<Mor> = us.iter().zip(xs).zip(qs).map(|((&u, &y), &q)| a2.hom(u, y).start + q).collect();
            a2.local_index(a2.compose(m.tensor_mor(&fs), s))
        }),
    };
    let compositors = fam.all_compositors()?;
    let coherence = fam.coherence(&compositors)?;
    Ok(YonedaStructure { compositors, coherence })
}

/// `cur J` with its compositors `⊛(J(−, y_1), ..) ⇒ J(−, ⊗y̲)`, `[u̲, s, q̲] ↦ λ(s, J_⊘(q̲))`.
#[derive(Debug, Clone)]
pub struct MonoidalCurry {
    pub curry: Curry,
    pub compositors: BTreeMap<Vec<Obj>, Compositor>,
    pub coherence: Vec<Violation>,
}

impl MonoidalCurry {
    pub fn all_invertible(&self) -> bool {
        self.compositors.values().all(Compositor::is_invertible)
    }

    /// The tuples whose compositor is not invertible.
    pub fn non_invertible(&self) -> Vec<Vec<Obj>> {
        self.compositors.iter().filter(|(_, c)| !c.is_invertible()).map(|(k, _)| k.clone()).collect()
    }
}

pub fn monoidal_curry(j: &MonoidalProfunctor) -> Result<MonoidalCurry> {
    let c = curry(j.profunctor())?;
    let jp = j.profunctor().clone();
    let jp2 = jp.clone();
    let fam = Family {
        ma: j.source(),
        mb: j.target(),
        values: c.presheaves.clone(),
        fmap: Box::new(move |b, x, u| jp.ract(x, u, b)),
        comp: Box::new(move |ys, _x, us, s, qs| jp2.lact(s, j.target().tensor(ys), j.structure(us, ys, qs))),
    };
    let compositors = fam.all_compositors()?;
    let coherence = fam.coherence(&compositors)?;
    Ok(MonoidalCurry {
        curry: c,
        compositors,
        coherence,
    })
}

/// The monoidal Yoneda lemma for `J`: the Yoneda bijections
/// `J(x, y) ≅ hom(y x, cur J y)` hold, the compositors of `cur J` are
/// coherent, and the bijections intertwine `J_⊘` with the structure
/// `θ̲ ↦ comp ∘ ⊛(θ̲) ∘ ȳ⁻¹` on the hom-sets.
pub fn monoidal_yoneda_check(j: &MonoidalProfunctor) -> Result<CheckResult> {
    let cur = monoidal_curry(j)?;
    if !cur.curry.verified {
        return Ok(CheckResult::fails(None, None, "a Yoneda bijection for cur J fails"));
    }
    if let Some(v) = cur.coherence.first() {
        return Ok(CheckResult::fails(None, None, format!("cur J is not lax monoidal: {v}")));
    }
    let ys_struct = yoneda_monoidal_structure(j.source())?;
    if !ys_struct.holds() {
        return Ok(CheckResult::fails(None, None, "the yoneda embedding is not pseudo monoidal"));
    }
    let jp = j.profunctor();
    let (a, b) = (jp.source().clone(), jp.target().clone());
    let (ma, mb) = (j.source(), j.target());
    let mut checked = 0usize;
    for n in 0..=j.bound() {
        for xs in tuples(&vec![a.num_objects(); n]) {
            let ybar = &ys_struct.compositors[&xs];
            let inv = ybar.inverse.as_ref().expect("checked invertible");
            let top = ma.tensor(&xs);
            let start = inv.get(&[top, 0], &[a.local_index(a.id(top))]);
            for ys in tuples(&vec![b.num_objects(); n]) {
                let comp = &cur.compositors[&ys];
                let sizes: Vec<usize> = xs.iter().zip(&ys).map(|(&x, &y)| jp.size(x, y)).collect();
                for us in tuples(&sizes) {
                    let thetas: Vec<Cell> = (0..n)
                        .map(|i| yoneda_map(&a, &cur.curry.presheaves[ys[i]], xs[i], us[i]))
                        .collect::<Result<_>>()?;
                    let mapped = day_map(&ybar.day, &comp.day, &thetas)?;
                    let via = comp.cell.get(&[top, 0], &[mapped.get(&[top, 0], &[start])]);
                    checked += 1;
                    if via != j.structure(&xs, &ys, &us) {
                        let yn: Vec<&str> = ys.iter().map(|&y| b.object_name(y)).collect();
                        let _ = mb;
                        return Ok(CheckResult::fails(
                            None,
                            None,
                            format!("structure maps are not intertwined at y̲ = ({})", yn.join(",")),
                        ));
                    }
                }
            }
        }
    }
    Ok(CheckResult::exact(format!("{checked} structure instances intertwined")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{discrete, preorder};
    use crate::monoidal::{search_non_bc, monoidal_beck_chevalley, LaxMonoidalFunctor};
    use crate::yoneda::find_presheaf_iso;
    use std::sync::Arc;

    fn z2() -> MonoidalStructure {
        let c = Arc::new(discrete(["0", "1"]));
        MonoidalStructure::discrete_monoid(&c, 3, 0, &[vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn arrow_max() -> MonoidalStructure {
        let c = Arc::new(preorder(["0", "1"], &[("0", "1")]).unwrap());
        let cc = c.clone();
        MonoidalStructure::strict(&c, 3, 0, |x, y| x.max(y), move |f, g| cc.hom(cc.dom(f).max(cc.dom(g)), cc.cod(f).max(cc.cod(g))).start)
            .unwrap()
    }

    #[test]
    fn y0_times_y1_on_z2() {
        let m = z2();
        let a = m.base().clone();
        let y0 = yoneda_object(&a, 0).unwrap();
        let y1 = yoneda_object(&a, 1).unwrap();
        let d = day_convolution(&m, &[y0, y1.clone()]).unwrap();
        assert_eq!(d.presheaf.size(0), 0);
        assert_eq!(d.presheaf.size(1), 1);
        assert!(find_presheaf_iso(&d.presheaf, &y1).unwrap().is_some());
        // only (u, v) = (0, 1) contributes
        let (us, _, _) = d.representative(1, 0);
        assert_eq!(us, [0, 1]);
    }

    #[test]
    fn nullary_convolution_is_yoneda_of_unit() {
        for m in [z2(), arrow_max()] {
            let a = m.base().clone();
            let d = day_convolution(&m, &[]).unwrap();
            let ye = yoneda_object(&a, m.unit()).unwrap();
            for x in 0..a.num_objects() {
                assert_eq!(d.presheaf.size(x), ye.size(x));
            }
            assert!(find_presheaf_iso(&d.presheaf, &ye).unwrap().is_some());
        }
    }

    #[test]
    fn arity_is_bounded() {
        let m = z2();
        let y0 = yoneda_object(m.base(), 0).unwrap();
        assert!(matches!(day_convolution(&m, &vec![y0; 4]), Err(Error::ArityExceeded { .. })));
    }

    #[test]
    fn unit_laws() {
        for m in [z2(), arrow_max()] {
            let a = m.base().clone();
            for x in 0..a.num_objects() {
                let p = yoneda_object(&a, x).unwrap();
                for left in [true, false] {
                    let iso = day_unit_law(&m, &p, left).unwrap().unwrap();
                    assert!(iso.verify());
                }
            }
            let t = Presheaf::terminal(&a);
            assert!(day_unit_law(&m, &t, true).unwrap().is_some());
        }
    }

    #[test]
    fn associators_are_invertible() {
        let m = arrow_max();
        let a = m.base().clone();
        let ps: Vec<Presheaf> = (0..2).map(|x| yoneda_object(&a, x).unwrap()).collect();
        let t = Presheaf::terminal(&a);
        for groups in [vec![vec![ps[0].clone(), ps[1].clone()], vec![t.clone()]], vec![vec![t.clone()], vec![ps[1].clone(), t.clone()]]] {
            let assoc = day_associator(&m, &groups).unwrap();
            assert!(assoc.is_invertible());
        }
    }

    #[test]
    fn yoneda_is_pseudo_monoidal() {
        for m in [z2(), arrow_max()] {
            let y = yoneda_monoidal_structure(&m).unwrap();
            assert!(y.coherence.is_empty(), "{:?}", y.coherence);
            assert!(y.all_invertible());
        }
        // (1, 1) on Z/2 goes to y0
        let y = yoneda_monoidal_structure(&z2()).unwrap();
        let c = &y.compositors[&vec![1, 1]];
        assert_eq!(c.day.presheaf.size(0), 1);
        assert_eq!(c.day.presheaf.size(1), 0);
    }

    #[test]
    fn ybar_one_is_identity_for_strict() {
        let m = arrow_max();
        let a = m.base().clone();
        let y = yoneda_monoidal_structure(&m).unwrap();
        for x in 0..2 {
            let c = &y.compositors[&vec![x]];
            for z in 0..2 {
                for t in 0..a.hom_len(z, x) {
                    // [z, id_z, t] ↦ t
                    let e = c.day.class_of(z, &[x], a.hom(z, x).start + t, &[a.local_index(a.id(x))]);
                    assert_eq!(c.cell.get(&[z, 0], &[e]), t);
                }
            }
        }
    }

    #[test]
    fn curry_of_hom_is_ybar() {
        let m = arrow_max();
        let cur = monoidal_curry(&MonoidalProfunctor::hom(&m)).unwrap();
        assert!(cur.coherence.is_empty());
        assert!(cur.all_invertible());
        assert!(monoidal_yoneda_check(&MonoidalProfunctor::hom(&m)).unwrap().holds());
    }

    #[test]
    fn companion_of_strict_functor() {
        let m = arrow_max();
        let id = LaxMonoidalFunctor::identity(&m);
        let j = MonoidalProfunctor::companion(&id).unwrap();
        let cur = monoidal_curry(&j).unwrap();
        assert!(cur.all_invertible());
        assert!(monoidal_beck_chevalley(&j).unwrap().holds());
        assert!(monoidal_yoneda_check(&j).unwrap().holds());
    }

    #[test]
    fn non_bc_has_non_invertible_compositor() {
        let found = search_non_bc(&z2(), 2).unwrap().example.unwrap();
        let cur = monoidal_curry(&found).unwrap();
        assert!(!cur.all_invertible());
        assert!(cur.coherence.is_empty());
        assert!(monoidal_yoneda_check(&found).unwrap().holds());
    }
}
