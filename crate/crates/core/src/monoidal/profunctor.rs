use std::collections::HashMap;

use crate::category::{same_category, Mor, Obj};
use crate::error::{Error, Result, Violation};
use crate::finset::{FinSet, UnionFind};
use crate::functor::FinFunctor;
use crate::profunctor::Profunctor;
use crate::universal::CheckResult;
use crate::util::{encode, tuples};

use super::lax::{Flavor, LaxMonoidalFunctor};
use super::structure::{chunks, shape_name, shapes, MonoidalStructure};

/// A profunctor `J: A ⇸ B` between monoidal categories with structure maps
/// `J_⊘: J(x_1, y_1) × .. × J(x_n, y_n) → J(⊗x̲, ⊗y̲)` for `n ≤ N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalProfunctor {
    profunctor: Profunctor,
    source: MonoidalStructure,
    target: MonoidalStructure,
    /// `[n][encode(x̲ ++ y̲)][encode(u̲)]`.
    structure: Vec<Vec<Vec<usize>>>,
}

impl MonoidalProfunctor {
    /// Tabulates `J_⊘`; `map(x̲, y̲, u̲)` is an index into `J(⊗x̲, ⊗y̲)`.
    pub fn new<F>(profunctor: Profunctor, source: MonoidalStructure, target: MonoidalStructure, mut map: F) -> Result<MonoidalProfunctor>
    where
        F: FnMut(&[Obj], &[Obj], &[usize]) -> usize,
    {
        if !same_category(profunctor.source(), source.base()) || !same_category(profunctor.target(), target.base()) {
            return Err(Error::BoundaryMismatch("profunctor and monoidal structures live on different categories".into()));
        }
        if source.bound() != target.bound() {
            return Err(Error::Precondition("source and target have different arity bounds".into()));
        }
        let (na, nb) = (source.base().num_objects(), target.base().num_objects());
        let mut structure = Vec::with_capacity(source.bound() + 1);
        for n in 0..=source.bound() {
            let mut row = Vec::new();
            let sizes: Vec<usize> = std::iter::repeat(na).take(n).chain(std::iter::repeat(nb).take(n)).collect();
            for xy in tuples(&sizes) {
                let (xs, ys) = xy.split_at(n);
                let elem_sizes: Vec<usize> = xs.iter().zip(ys).map(|(&x, &y)| profunctor.size(x, y)).collect();
                let top = profunctor.size(source.tensor(xs), target.tensor(ys));
                let mut cell = Vec::new();
                for us in tuples(&elem_sizes) {
                    let v = map(xs, ys, &us);
                    if v >= top {
                        return Err(Error::Invalid(format!(
                            "structure map at {} lands outside J(⊗x̲, ⊗y̲)",
                            describe(&profunctor, xs, ys)
                        )));
                    }
                    cell.push(v);
                }
                row.push(cell);
            }
            structure.push(row);
        }
        Ok(MonoidalProfunctor {
            profunctor,
            source,
            target,
            structure,
        })
    }

    /// The hom-profunctor of `M` with `J_⊘ = ⊗` on morphisms.
    pub fn hom(m: &MonoidalStructure) -> MonoidalProfunctor {
        let c = m.base().clone();
        MonoidalProfunctor::new(Profunctor::hom(&c), m.clone(), m.clone(), |xs, ys, us| {
            let fs: Vec<Mor> = xs.iter().zip(ys).zip(us).map(|((&x, &y), &u)| c.hom(x, y).start + u).collect();
            c.local_index(m.tensor_mor(&fs))
        })
        .expect("the tensor of morphisms lands in the right hom-set")
    }

    /// The companion `C(f −, −)` of a colax (or pseudo) monoidal functor, with
    /// `J_⊘(u̲) = ⊗(u̲) ∘ f_⊘`.
    pub fn companion(f: &LaxMonoidalFunctor) -> Result<MonoidalProfunctor> {
        let f = f.to_colax()?;
        let c = f.target().base().clone();
        let j = Profunctor::hom(&c).restricted(f.functor(), &FinFunctor::identity(&c))?;
        let mc = f.target().clone();
        MonoidalProfunctor::new(j, f.source().clone(), mc.clone(), |xs, ys, us| {
            let fs: Vec<Mor> = xs.iter().zip(ys).zip(us).map(|((&x, &y), &u)| c.hom(f.functor().on_obj(x), y).start + u).collect();
            c.local_index(c.compose(mc.tensor_mor(&fs), f.compositor(xs)))
        })
    }

    /// The conjoint `C(−, f −)` of a lax (or pseudo) monoidal functor, with
    /// `J_⊘(u̲) = f_⊘ ∘ ⊗(u̲)`.
    pub fn conjoint(f: &LaxMonoidalFunctor) -> Result<MonoidalProfunctor> {
        if f.flavor() == Flavor::Colax {
            return Err(Error::Precondition("conjoints are monoidal for lax functors".into()));
        }
        let c = f.target().base().clone();
        let j = Profunctor::hom(&c).restricted(&FinFunctor::identity(&c), f.functor())?;
        let mc = f.target().clone();
        MonoidalProfunctor::new(j, mc.clone(), f.source().clone(), |zs, xs, us| {
            let fs: Vec<Mor> = zs.iter().zip(xs).zip(us).map(|((&z, &x), &u)| c.hom(z, f.functor().on_obj(x)).start + u).collect();
            c.local_index(c.compose(f.compositor(xs), mc.tensor_mor(&fs)))
        })
    }

    pub fn profunctor(&self) -> &Profunctor {
        &self.profunctor
    }

    pub fn source(&self) -> &MonoidalStructure {
        &self.source
    }

    pub fn target(&self) -> &MonoidalStructure {
        &self.target
    }

    pub fn bound(&self) -> usize {
        self.source.bound()
    }

    /// `J_⊘(u̲)` for `u_i ∈ J(x_i, y_i)`, as an index into `J(⊗x̲, ⊗y̲)`.
    pub fn structure(&self, xs: &[Obj], ys: &[Obj], us: &[usize]) -> usize {
        let n = xs.len();
        let (na, nb) = (self.source.base().num_objects(), self.target.base().num_objects());
        let sizes: Vec<usize> = std::iter::repeat(na).take(n).chain(std::iter::repeat(nb).take(n)).collect();
        let key: Vec<Obj> = xs.iter().chain(ys).copied().collect();
        let elem_sizes: Vec<usize> = xs.iter().zip(ys).map(|(&x, &y)| self.profunctor.size(x, y)).collect();
        self.structure[n][encode(&key, &sizes)][encode(us, &elem_sizes)]
    }

    /// Every failed equivariance, associativity and unit instance at arity at most `N`.
    pub fn validate(&self) -> Vec<Violation> {
        let j = &self.profunctor;
        let mut out = j.validate();
        if !out.is_empty() {
            return out;
        }
        let (a, b) = (j.source().clone(), j.target().clone());
        let (ma, mb) = (&self.source, &self.target);
        for n in 0..=self.bound() {
            for ss in tuples(&vec![a.num_morphisms(); n]) {
                let (d, e): (Vec<Obj>, Vec<Obj>) = ss.iter().map(|&s| (a.dom(s), a.cod(s))).unzip();
                for ys in tuples(&vec![b.num_objects(); n]) {
                    let sizes: Vec<usize> = e.iter().zip(&ys).map(|(&x, &y)| j.size(x, y)).collect();
                    for us in tuples(&sizes) {
                        let moved: Vec<usize> = ss.iter().zip(&ys).zip(&us).map(|((&s, &y), &u)| j.lact(s, y, u)).collect();
                        let lhs = self.structure(&d, &ys, &moved);
                        let rhs = j.lact(ma.tensor_mor(&ss), mb.tensor(&ys), self.structure(&e, &ys, &us));
                        if lhs != rhs {
                            out.push(Violation::new("left equivariance", describe(j, &e, &ys)));
                        }
                    }
                }
            }
            for ts in tuples(&vec![b.num_morphisms(); n]) {
                let (d, e): (Vec<Obj>, Vec<Obj>) = ts.iter().map(|&t| (b.dom(t), b.cod(t))).unzip();
                for xs in tuples(&vec![a.num_objects(); n]) {
                    let sizes: Vec<usize> = xs.iter().zip(&d).map(|(&x, &y)| j.size(x, y)).collect();
                    for us in tuples(&sizes) {
                        let moved: Vec<usize> = xs.iter().zip(&us).zip(&ts).map(|((&x, &u), &t)| j.ract(x, u, t)).collect();
                        let lhs = self.structure(&xs, &e, &moved);
                        let rhs = j.ract(ma.tensor(&xs), self.structure(&xs, &d, &us), mb.tensor_mor(&ts));
                        if lhs != rhs {
                            out.push(Violation::new("right equivariance", describe(j, &xs, &d)));
                        }
                    }
                }
            }
        }
        for s in shapes(self.bound()) {
            let width: usize = s.iter().sum();
            for xs in tuples(&vec![a.num_objects(); width]) {
                for ys in tuples(&vec![b.num_objects(); width]) {
                    let sizes: Vec<usize> = xs.iter().zip(&ys).map(|(&x, &y)| j.size(x, y)).collect();
                    let (xp, yp) = (chunks(&s, &xs), chunks(&s, &ys));
                    let xt: Vec<Obj> = xp.iter().map(|p| ma.tensor(p)).collect();
                    let yt: Vec<Obj> = yp.iter().map(|p| mb.tensor(p)).collect();
                    for us in tuples(&sizes) {
                        let up = chunks(&s, &us);
                        let inner: Vec<usize> = (0..s.len()).map(|i| self.structure(xp[i], yp[i], up[i])).collect();
                        let lhs = j.ract(ma.tensor(&xt), self.structure(&xt, &yt, &inner), mb.associator(&s, &ys));
                        let rhs = j.lact(ma.associator(&s, &xs), mb.tensor(&ys), self.structure(&xs, &ys, &us));
                        if lhs != rhs {
                            out.push(Violation::new("associativity", format!("shape {} at {}", shape_name(&s), describe(j, &xs, &ys))));
                        }
                    }
                }
            }
        }
        for x in 0..a.num_objects() {
            for y in 0..b.num_objects() {
                for u in 0..j.size(x, y) {
                    let lhs = j.ract(x, u, mb.unitor(y));
                    let rhs = j.lact(ma.unitor(x), mb.tensor(&[y]), self.structure(&[x], &[y], &[u]));
                    if lhs != rhs {
                        out.push(Violation::new("unit", describe(j, &[x], &[y])));
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

fn describe(j: &Profunctor, xs: &[Obj], ys: &[Obj]) -> String {
    let (a, b) = (j.source(), j.target());
    let xn: Vec<&str> = xs.iter().map(|&x| a.object_name(x)).collect();
    let yn: Vec<&str> = ys.iter().map(|&y| b.object_name(y)).collect();
    format!("x̲ = ({}), y̲ = ({})", xn.join(","), yn.join(","))
}

/// The left Beck-Chevalley condition for a monoidal profunctor: for every
/// `x` and `y̲` with `n ≤ N`, each `p ∈ J(x, ⊗y̲)` factors as
/// `λ(s, J_⊘(q̲))` with `s: x → ⊗u̲` and `q_i ∈ J(u_i, y_i)`, and any two
/// factorizations are connected by the zigzags generated by
/// `(⊗t̲ ∘ s, q̲') ~ (s, λ(t̲, q̲'))`.
///
/// Decided per element: the factorizations of `p` must form exactly one
/// connected component.
pub fn monoidal_beck_chevalley(j: &MonoidalProfunctor) -> Result<CheckResult> {
    let jp = j.profunctor();
    let (a, b) = (jp.source().clone(), jp.target().clone());
    let (ma, mb) = (j.source(), j.target());
    let mut instances = 0usize;
    for n in 0..=j.bound() {
        for ys in tuples(&vec![b.num_objects(); n]) {
            let top = mb.tensor(&ys);
            for x in 0..a.num_objects() {
                // factorizations (u̲, s, q̲)
                let mut facts: Vec<(Vec<Obj>, Mor, Vec<usize>)> = Vec::new();
                let mut index: HashMap<(Vec<Obj>, Mor, Vec<usize>), usize> = HashMap::new();
                for us in tuples(&vec![a.num_objects(); n]) {
                    let sizes: Vec<usize> = us.iter().zip(&ys).map(|(&u, &y)| jp.size(u, y)).collect();
                    for s in a.hom(x, ma.tensor(&us)) {
                        for qs in tuples(&sizes) {
                            index.insert((us.clone(), s, qs.clone()), facts.len());
                            facts.push((us.clone(), s, qs));
                        }
                    }
                }
                let mut uf = UnionFind::new(facts.len());
                for ts in tuples(&vec![a.num_morphisms(); n]) {
                    if ts.iter().all(|&t| a.is_identity(t)) {
                        continue;
                    }
                    let (d, e): (Vec<Obj>, Vec<Obj>) = ts.iter().map(|&t| (a.dom(t), a.cod(t))).unzip();
                    let sizes: Vec<usize> = e.iter().zip(&ys).map(|(&u, &y)| jp.size(u, y)).collect();
                    let tt = ma.tensor_mor(&ts);
                    for s in a.hom(x, ma.tensor(&d)) {
                        for qs in tuples(&sizes) {
                            let pulled: Vec<usize> = ts.iter().zip(&ys).zip(&qs).map(|((&t, &y), &q)| jp.lact(t, y, q)).collect();
                            let l = index[&(e.clone(), a.compose(tt, s), qs.clone())];
                            let r = index[&(d.clone(), s, pulled)];
                            uf.union(l, r);
                        }
                    }
                }
                let mut classes_over: Vec<Vec<usize>> = vec![Vec::new(); jp.size(x, top)];
                for (i, (us, s, qs)) in facts.iter().enumerate() {
                    let p = jp.lact(*s, top, j.structure(us, &ys, qs));
                    let root = uf.find(i);
                    if !classes_over[p].contains(&root) {
                        classes_over[p].push(root);
                    }
                }
                instances += 1;
                for (p, cl) in classes_over.iter().enumerate() {
                    if cl.len() != 1 {
                        let yn: Vec<&str> = ys.iter().map(|&y| b.object_name(y)).collect();
                        return Ok(CheckResult::fails(
                            None,
                            None,
                            format!(
                                "element {} of J({}, ⊗({})) has {} factorization classes",
                                jp.elems(x, top).atom(p),
                                a.object_name(x),
                                yn.join(","),
                                cl.len()
                            ),
                        ));
                    }
                }
            }
        }
    }
    Ok(CheckResult::exact(format!("{instances} comparison maps are bijective")))
}

/// Outcome of the exhaustive search for monoidal profunctors failing the
/// Beck-Chevalley condition.
#[derive(Debug, Clone)]
pub struct NonBcSearch {
    /// Candidate structures examined.
    pub examined: usize,
    /// Candidates passing all monoidal-profunctor axioms.
    pub valid: usize,
    /// Valid candidates failing the Beck-Chevalley condition.
    pub failing: usize,
    /// Least total number of elements among failing instances.
    pub smallest_failing_size: Option<usize>,
    /// A failing instance of least size.
    pub example: Option<MonoidalProfunctor>,
}

/// Every monoidal profunctor `J: M ⇸ M` over a discrete strict `M` with
/// trivial actions and at most `max_elements` elements in total, by
/// increasing size, with the number of candidates examined. Structure maps
/// of arity `n ≥ 3` are the iterated binary ones and unary ones are
/// identities, as the associativity and unit axioms force over a strict
/// base; every candidate is validated in full.
pub fn small_monoidal_profunctors(m: &MonoidalStructure, max_elements: usize) -> Result<(usize, Vec<MonoidalProfunctor>)> {
    let a = m.base().clone();
    if !a.is_discrete() || !m.is_strict() {
        return Err(Error::Precondition("the search runs over discrete strict monoidal categories".into()));
    }
    let no = a.num_objects();
    let pairs = no * no;
    let mut examined = 0;
    let mut found = Vec::new();
    for total in 0..=max_elements {
        for sizes in tuples(&vec![total + 1; pairs]) {
            if sizes.iter().sum::<usize>() != total {
                continue;
            }
            let e = m.unit();
            if sizes[e * no + e] == 0 {
                continue;
            }
            let elems: Vec<FinSet> = sizes.iter().map(|&k| FinSet::numbered("u", k)).collect();
            let j = Profunctor::from_fn(a.clone(), a.clone(), elems, |_, _, u| u, |_, u, _| u);
            // binary entries: ((x1, y1, u1), (x2, y2, u2))
            let elements: Vec<(Obj, Obj, usize)> =
                (0..pairs).flat_map(|p| (0..sizes[p]).map(move |u| (p / no, p % no, u))).collect();
            let domain: Vec<(usize, usize)> = (0..elements.len()).flat_map(|i| (0..elements.len()).map(move |k| (i, k))).collect();
            let codomain: Vec<usize> = domain
                .iter()
                .map(|&(i, k)| {
                    let (x1, y1, _) = elements[i];
                    let (x2, y2, _) = elements[k];
                    j.size(m.tensor(&[x1, x2]), m.tensor(&[y1, y2]))
                })
                .collect();
            if codomain.contains(&0) {
                continue;
            }
            let pos: HashMap<(Obj, Obj, usize), usize> = elements.iter().enumerate().map(|(i, &t)| (t, i)).collect();
            for zero in 0..sizes[e * no + e] {
                for table in tuples(&codomain) {
                    examined += 1;
                    let binary = |x1: Obj, y1: Obj, u1: usize, x2: Obj, y2: Obj, u2: usize| {
                        table[pos[&(x1, y1, u1)] * elements.len() + pos[&(x2, y2, u2)]]
                    };
                    let cand = MonoidalProfunctor::new(j.clone(), m.clone(), m.clone(), |xs, ys, us| {
                        if xs.is_empty() {
                            return zero;
                        }
                        let (mut x, mut y, mut u) = (xs[0], ys[0], us[0]);
                        for i in 1..xs.len() {
                            u = binary(x, y, u, xs[i], ys[i], us[i]);
                            x = m.tensor(&[x, xs[i]]);
                            y = m.tensor(&[y, ys[i]]);
                        }
                        u
                    })?;
                    if cand.is_valid() {
                        found.push(cand);
                    }
                }
            }
        }
    }
    Ok((examined, found))
}

/// Searches the monoidal profunctors of [`small_monoidal_profunctors`] for
/// ones failing the Beck-Chevalley condition.
pub fn search_non_bc(m: &MonoidalStructure, max_elements: usize) -> Result<NonBcSearch> {
    let (examined, found) = small_monoidal_profunctors(m, max_elements)?;
    let mut out = NonBcSearch {
        examined,
        valid: found.len(),
        failing: 0,
        smallest_failing_size: None,
        example: None,
    };
    for cand in found {
        if !monoidal_beck_chevalley(&cand)?.holds() {
            out.failing += 1;
            if out.example.is_none() {
                out.smallest_failing_size = Some(cand.profunctor().total_size());
                out.example = Some(cand);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{discrete, preorder};
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
    fn hom_is_monoidal_and_bc() {
        for m in [z2(), arrow_max()] {
            let h = MonoidalProfunctor::hom(&m);
            assert!(h.validate().is_empty());
            assert!(monoidal_beck_chevalley(&h).unwrap().holds());
        }
    }

    #[test]
    fn companion_of_strict_functor_is_bc() {
        let m = arrow_max();
        let id = LaxMonoidalFunctor::identity(&m);
        let c = MonoidalProfunctor::companion(&id).unwrap();
        assert!(c.validate().is_empty());
        assert!(monoidal_beck_chevalley(&c).unwrap().holds());
        let cj = MonoidalProfunctor::conjoint(&id).unwrap();
        assert!(cj.validate().is_empty());
    }

    #[test]
    fn doubled_unit_fails_bc() {
        // J(0,0) = {u0, u1} with u1 ⊘ u1 = u1, other pairs empty
        let m = z2();
        let a = m.base().clone();
        let elems = vec![FinSet::numbered("u", 2), FinSet::empty(), FinSet::empty(), FinSet::empty()];
        let j = Profunctor::from_fn(a.clone(), a.clone(), elems, |_, _, u| u, |_, u, _| u);
        let mj = MonoidalProfunctor::new(j, m.clone(), m.clone(), |_, _, us| us.iter().copied().max().unwrap_or(0)).unwrap();
        assert!(mj.validate().is_empty());
        let bc = monoidal_beck_chevalley(&mj).unwrap();
        assert!(!bc.holds());
        assert!(bc.detail.contains("u1"));
    }

    #[test]
    fn broken_unit_structure_is_named() {
        let m = z2();
        let a = m.base().clone();
        let elems = vec![FinSet::numbered("u", 2), FinSet::empty(), FinSet::empty(), FinSet::empty()];
        let j = Profunctor::from_fn(a.clone(), a.clone(), elems, |_, _, u| u, |_, u, _| u);
        // unary structure swaps the two elements
        let mj = MonoidalProfunctor::new(j, m.clone(), m.clone(), |_, _, us| if us.len() == 1 { 1 - us[0] } else { 0 }).unwrap();
        assert!(mj.validate().iter().any(|v| v.rule == "unit"));
    }

    #[test]
    fn search_over_z2_finds_a_failure() {
        let res = search_non_bc(&z2(), 2).unwrap();
        assert!(res.valid > 0);
        // J(0,0) = {u} alone: u ∈ J(0, 1⊗1) has no factorization through J(−,1) × J(−,1)
        assert_eq!(res.smallest_failing_size, Some(1));
        let ex = res.example.unwrap();
        assert_eq!(ex.profunctor().total_size(), 1);
        assert!(!monoidal_beck_chevalley(&ex).unwrap().holds());
        // the hom-profunctor has two elements and is among the valid BC candidates
        assert!(res.valid > res.failing);
    }
}
