//! Finite presheaves, their hom-sets, the yoneda embedding, curry of a
//! profunctor and exact checks of the Yoneda lemma.
//!
//! Presheaves on `A` are profunctors `A ⇸ 1`; a natural transformation
//! `p ⇒ q` is a horizontal cell `(p) ⇒ q`. The presheaf category itself is
//! never materialized: statements about it are made relative to explicitly
//! supplied families.

use std::sync::Arc;

use crate::category::{same_category, terminal, FinCategory, Mor, Obj};
use crate::cell::{Cell, CellFrame, Target};
use crate::construct::{horizontal_composite, iso_from_map, ProfunctorIso};
use crate::enumerate::enumerate_cells;
use crate::error::{Error, Result, Violation};
use crate::finset::FinSet;
use crate::functor::FinFunctor;
use crate::kan::Weight;
use crate::profunctor::Profunctor;
use crate::universal::CheckResult;

/// A presheaf `p: A^op → FinSet`, stored as a profunctor `A ⇸ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presheaf {
    prof: Profunctor,
}

impl Presheaf {
    /// Builds a presheaf from values and the action `act(a, u) = p(a)(u)` for
    /// `a: x' → x` and `u ∈ p x`.
    pub fn from_fn<F>(base: &Arc<FinCategory>, values: Vec<FinSet>, mut act: F) -> Presheaf
    where
        F: FnMut(Mor, usize) -> usize,
    {
        let one = Arc::new(terminal());
        Presheaf {
            prof: Profunctor::from_fn(base.clone(), one, values, |a, _, u| act(a, u), |_, u, _| u),
        }
    }

    /// Views a profunctor `A ⇸ 1` as a presheaf on `A`.
    pub fn from_profunctor(p: Profunctor) -> Result<Presheaf> {
        Weight::new(p.clone())?;
        Ok(Presheaf { prof: p })
    }

    pub fn empty(base: &Arc<FinCategory>) -> Presheaf {
        Presheaf::from_fn(base, vec![FinSet::empty(); base.num_objects()], |_, _| unreachable!())
    }

    /// The terminal presheaf: a singleton at every object.
    pub fn terminal(base: &Arc<FinCategory>) -> Presheaf {
        let one = FinSet::new(["*"]).unwrap();
        Presheaf::from_fn(base, vec![one; base.num_objects()], |_, _| 0)
    }

    pub fn as_profunctor(&self) -> &Profunctor {
        &self.prof
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        self.prof.source()
    }

    pub fn value(&self, x: Obj) -> &FinSet {
        self.prof.elems(x, 0)
    }

    pub fn size(&self, x: Obj) -> usize {
        self.prof.size(x, 0)
    }

    /// `p(a)(u)` for `a: x' → x`, `u ∈ p x`.
    pub fn act(&self, a: Mor, u: usize) -> usize {
        self.prof.lact(a, 0, u)
    }

    /// Functoriality violations of the action.
    pub fn validate(&self) -> Vec<Violation> {
        self.prof.validate()
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

/// `yon x = A(−, x)` with action by precomposition.
pub fn yoneda_object(a: &Arc<FinCategory>, x: Obj) -> Result<Presheaf> {
    if x >= a.num_objects() {
        return Err(Error::UnknownObject(format!("#{x}")));
    }
    let values = (0..a.num_objects()).map(|s| a.hom_set(s, x)).collect();
    Ok(Presheaf::from_fn(a, values, |m, u| {
        let f = a.hom(a.cod(m), x).start + u;
        a.local_index(a.compose(f, m))
    }))
}

/// The exhaustive list of natural transformations `p ⇒ q`.
#[derive(Debug, Clone)]
pub struct PresheafHomSet {
    pub source: Presheaf,
    pub target: Presheaf,
    /// Each transformation as a horizontal cell `(p) ⇒ q`, in canonical order.
    pub transformations: Vec<Cell>,
}

impl PresheafHomSet {
    pub fn len(&self) -> usize {
        self.transformations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transformations.is_empty()
    }

    /// Position of a transformation given by its components.
    pub fn index_of(&self, t: &Cell) -> Option<usize> {
        self.transformations.iter().position(|s| s.values() == t.values())
    }
}

fn nat_frame(p: &Presheaf, q: &Presheaf) -> Result<Arc<CellFrame>> {
    if !same_category(p.base(), q.base()) {
        return Err(Error::BoundaryMismatch("presheaves on different bases".into()));
    }
    CellFrame::new(
        vec![p.prof.clone()],
        FinFunctor::identity(p.base()),
        FinFunctor::identity(p.prof.target()),
        Target::Unary(q.prof.clone()),
    )
}

/// A family of functions `p x → q x` as a transformation cell; `None` when not natural.
pub fn transformation<F>(p: &Presheaf, q: &Presheaf, mut component: F) -> Result<Option<Cell>>
where
    F: FnMut(Obj, usize) -> usize,
{
    let c = Cell::from_fn(nat_frame(p, q)?, |o, e| component(o[0], e[0]))?;
    Ok(c.is_valid().then_some(c))
}

/// All natural transformations `p ⇒ q`.
pub fn hom_presheaves(p: &Presheaf, q: &Presheaf) -> Result<PresheafHomSet> {
    Ok(PresheafHomSet {
        source: p.clone(),
        target: q.clone(),
        transformations: enumerate_cells(&nat_frame(p, q)?)?,
    })
}

/// `θ ∘ yon(f)`: precomposition of `θ: yon x' ⇒ p` with `yon f: yon x ⇒ yon x'`.
fn precompose_yon(a: &Arc<FinCategory>, theta: &Cell, f: Mor, p: &Presheaf) -> Result<Cell> {
    let x = a.dom(f);
    let yx = yoneda_object(a, x)?;
    let x2 = a.cod(f);
    let c = Cell::from_fn(nat_frame(&yx, p)?, |o, e| {
        let s = o[0];
        let m = a.hom(s, x).start + e[0];
        let fm = a.compose(f, m);
        debug_assert_eq!(a.cod(fm), x2);
        theta.get(&[s, 0], &[a.local_index(fm)])
    })?;
    Ok(c)
}

/// The canonical map `u ↦ (m ↦ p(m)(u))` from `p x` to `hom(yon x, p)`.
pub fn yoneda_map(a: &Arc<FinCategory>, p: &Presheaf, x: Obj, u: usize) -> Result<Cell> {
    let yx = yoneda_object(a, x)?;
    let c = Cell::from_fn(nat_frame(&yx, p)?, |o, e| {
        let m = a.hom(o[0], x).start + e[0];
        p.act(m, u)
    })?;
    Ok(c)
}

/// Outcome of the Yoneda lemma check at one object.
#[derive(Debug, Clone)]
pub struct YonedaCheck {
    /// `bijection[u]` is the index in `hom` of the transformation induced by `u ∈ p x`.
    pub bijection: Vec<usize>,
    pub hom: PresheafHomSet,
    pub injective: bool,
    pub surjective: bool,
}

impl YonedaCheck {
    pub fn holds(&self) -> bool {
        self.injective && self.surjective
    }
}

/// The canonical map `p x → hom(yon x, p)` checked against the enumerated hom-set.
pub fn yoneda_lemma_check(a: &Arc<FinCategory>, p: &Presheaf, x: Obj) -> Result<YonedaCheck> {
    let hom = hom_presheaves(&yoneda_object(a, x)?, p)?;
    let mut bijection = Vec::with_capacity(p.size(x));
    let mut hit = vec![false; hom.len()];
    let mut injective = true;
    for u in 0..p.size(x) {
        let t = yoneda_map(a, p, x, u)?;
        match hom.index_of(&t) {
            Some(i) => {
                injective &= !std::mem::replace(&mut hit[i], true);
                bijection.push(i);
            }
            None => {
                return Err(Error::Invalid("canonical family is not natural".into()));
            }
        }
    }
    let surjective = hit.iter().all(|&h| h);
    Ok(YonedaCheck {
        bijection,
        hom,
        injective,
        surjective,
    })
}

/// Naturality of the Yoneda bijection in `x`: for `f: x → x'` and `u ∈ p x'`,
/// `Φ_x(p(f)(u)) = Φ_{x'}(u) ∘ yon(f)`.
pub fn yoneda_naturality(a: &Arc<FinCategory>, p: &Presheaf) -> Result<bool> {
    for f in 0..a.num_morphisms() {
        let x2 = a.cod(f);
        for u in 0..p.size(x2) {
            let lhs = yoneda_map(a, p, a.dom(f), p.act(f, u))?;
            let rhs = precompose_yon(a, &yoneda_map(a, p, x2, u)?, f, p)?;
            if lhs.values() != rhs.values() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Full Yoneda check over every object of `a`.
pub fn yoneda_lemma_all(a: &Arc<FinCategory>, p: &Presheaf) -> Result<CheckResult> {
    for x in 0..a.num_objects() {
        let c = yoneda_lemma_check(a, p, x)?;
        if !c.holds() {
            return Ok(CheckResult::fails(
                None,
                None,
                format!("at {}: |p x| = {}, |hom| = {}", a.object_name(x), p.size(x), c.hom.len()),
            ));
        }
    }
    if !yoneda_naturality(a, p)? {
        return Ok(CheckResult::fails(None, None, "the bijection is not natural in x"));
    }
    Ok(CheckResult::exact(format!("bijective at all {} objects and natural", a.num_objects())))
}

/// `cur J`: `y ↦ J(−, y)` on objects, `b ↦ ρ(−, b)` on morphisms, with the
/// Yoneda bijections `J(x, y) ≅ hom(yon x, J(−, y))`.
#[derive(Debug, Clone)]
pub struct Curry {
    pub presheaves: Vec<Presheaf>,
    /// For each morphism `b: y → y'` of the target, the transformation `J(−, y) ⇒ J(−, y')`.
    pub morphisms: Vec<Cell>,
    /// For each `(x, y)`, indexed `x * |B| + y`, the Yoneda check.
    pub yoneda: Vec<YonedaCheck>,
    pub verified: bool,
}

pub fn curry(j: &Profunctor) -> Result<Curry> {
    let (a, b) = (j.source().clone(), j.target().clone());
    let presheaves: Vec<Presheaf> = (0..b.num_objects())
        .map(|y| {
            Presheaf::from_profunctor(j.restricted(&FinFunctor::identity(&a), &FinFunctor::pick(&b, y))?)
        })
        .collect::<Result<_>>()?;
    let mut morphisms = Vec::with_capacity(b.num_morphisms());
    for m in 0..b.num_morphisms() {
        let (y, y2) = (b.dom(m), b.cod(m));
        let t = transformation(&presheaves[y], &presheaves[y2], |x, u| j.ract(x, u, m))?
            .ok_or_else(|| Error::Invalid("right action is not natural".into()))?;
        morphisms.push(t);
    }
    let mut yoneda = Vec::new();
    let mut verified = true;
    for x in 0..a.num_objects() {
        for p in &presheaves {
            let c = yoneda_lemma_check(&a, p, x)?;
            verified &= c.holds();
            yoneda.push(c);
        }
    }
    Ok(Curry {
        presheaves,
        morphisms,
        yoneda,
        verified,
    })
}

/// `p(f −)` for `f: A → C` and `p` a presheaf on `C`.
pub fn presheaf_restriction(f: &FinFunctor, p: &Presheaf) -> Result<Presheaf> {
    if !same_category(f.target(), p.base()) {
        return Err(Error::BoundaryMismatch("presheaf lives on another category".into()));
    }
    let one = p.prof.target().clone();
    Presheaf::from_profunctor(p.prof.restricted(f, &FinFunctor::identity(&one))?)
}

/// Mutually inverse transformations between two presheaves.
pub fn presheaf_iso<F>(p: &Presheaf, q: &Presheaf, forward: F) -> Result<Option<ProfunctorIso>>
where
    F: FnMut(Obj, Obj, usize) -> usize,
{
    iso_from_map(&p.prof, &q.prof, forward)
}

/// Searches for an isomorphism of presheaves.
pub fn find_presheaf_iso(p: &Presheaf, q: &Presheaf) -> Result<Option<ProfunctorIso>> {
    crate::construct::find_iso(&p.prof, &q.prof)
}

/// A diagram `d: A → ps M` given by presheaves on `M` per object of `A` and a
/// transformation `d x ⇒ d x'` per morphism `x → x'`, as the profunctor
/// `D: M ⇸ A` with `D(m, x) = d(x)(m)`.
pub fn diagram_profunctor(a: &Arc<FinCategory>, objects: &[Presheaf], morphisms: &[Cell]) -> Result<Profunctor> {
    if objects.len() != a.num_objects() || morphisms.len() != a.num_morphisms() {
        return Err(Error::IncompleteTable("one presheaf per object and one transformation per morphism".into()));
    }
    let m = objects.first().map(|p| p.base().clone()).unwrap_or_else(|| Arc::new(terminal()));
    if objects.iter().any(|p| !same_category(p.base(), &m)) {
        return Err(Error::BoundaryMismatch("presheaves on different bases".into()));
    }
    for (f, t) in morphisms.iter().enumerate() {
        let ok = t.frame().src()[0] == objects[a.dom(f)].prof
            && *t.frame().target() == Target::Unary(objects[a.cod(f)].prof.clone());
        if !ok {
            return Err(Error::FrameMismatch(format!("transformation for {} has the wrong boundary", a.mor_name(f))));
        }
    }
    let na = a.num_objects();
    let elems = (0..m.num_objects() * na).map(|i| objects[i % na].value(i / na).clone()).collect();
    let d = Profunctor::from_fn(
        m.clone(),
        a.clone(),
        elems,
        |s, x, u| objects[x].act(s, u),
        |mo, u, f| morphisms[f].get(&[mo, 0], &[u]),
    );
    if !d.is_valid() {
        return Err(Error::Invalid("the diagram is not functorial".into()));
    }
    Ok(d)
}

/// The `J`-weighted colimit of a diagram of presheaves, pointwise
/// `∫^a J(a) × d(a)(m)`: the coend composite `D ⊙ J`.
pub fn presheaf_weighted_colimit(w: &Weight, objects: &[Presheaf], morphisms: &[Cell]) -> Result<(Presheaf, Cell)> {
    let d = diagram_profunctor(w.profunctor().source(), objects, morphisms)?;
    let comp = horizontal_composite(&[d, w.profunctor().clone()])?;
    Ok((Presheaf::from_profunctor(comp.profunctor)?, comp.cocartesian_cell))
}

/// The universal property of a weighted colimit of presheaves, against test
/// presheaves `q`: transformations `colim ⇒ q` correspond, through the
/// colimit cocone, to families `J(a) → hom(d a, q)` natural in `a`, which are
/// counted independently.
pub fn check_presheaf_colimit(
    w: &Weight,
    objects: &[Presheaf],
    morphisms: &[Cell],
    tests: &[Presheaf],
) -> Result<CheckResult> {
    let (colim, cocone) = presheaf_weighted_colimit(w, objects, morphisms)?;
    let a = w.profunctor().source().clone();
    let j = w.profunctor();
    for q in tests {
        // families: for every (x, u ∈ J x) a transformation d x ⇒ q, natural in x
        let homs: Vec<PresheafHomSet> = objects.iter().map(|p| hom_presheaves(p, q)).collect::<Result<_>>()?;
        let slots: Vec<(Obj, usize)> = (0..a.num_objects()).flat_map(|x| (0..j.size(x, 0)).map(move |u| (x, u))).collect();
        let sizes: Vec<usize> = slots.iter().map(|&(x, _)| homs[x].len()).collect();
        let slot_of = |x: Obj, u: usize| slots.iter().position(|&s| s == (x, u)).unwrap();
        let mut families = Vec::new();
        for choice in crate::util::tuples(&sizes) {
            let natural = (0..a.num_morphisms()).all(|f| {
                let (x, x2) = (a.dom(f), a.cod(f));
                (0..j.size(x2, 0)).all(|u| {
                    // θ_x(λ(f, u)) = θ_{x2}(u) ∘ d(f)
                    let lhs = &homs[x].transformations[choice[slot_of(x, j.lact(f, 0, u))]];
                    let rhs = &homs[x2].transformations[choice[slot_of(x2, u)]];
                    let m = q.base();
                    (0..m.num_objects()).all(|mo| {
                        (0..objects[x].size(mo)).all(|v| {
                            lhs.get(&[mo, 0], &[v]) == rhs.get(&[mo, 0], &[morphisms[f].get(&[mo, 0], &[v])])
                        })
                    })
                })
            });
            if natural {
                families.push(choice);
            }
        }
        let out = hom_presheaves(&colim, q)?;
        if out.len() != families.len() {
            return Ok(CheckResult::fails(
                None,
                None,
                format!("{} transformations out of the colimit but {} natural families", out.len(), families.len()),
            ));
        }
        // the cocone induces the correspondence: τ ↦ (τ ∘ cocone at (x, u))
        let mut seen = std::collections::HashSet::new();
        for t in &out.transformations {
            let fam: Vec<usize> = slots
                .iter()
                .map(|&(x, u)| {
                    let c = transformation(&objects[x], q, |mo, v| t.get(&[mo, 0], &[cocone.get(&[mo, x, 0], &[v, u])]))?
                        .ok_or_else(|| Error::Invalid("restricted cocone leg is not natural".into()))?;
                    homs[x].index_of(&c).ok_or_else(|| Error::Invalid("leg missing from hom-set".into()))
                })
                .collect::<Result<_>>()?;
            if !families.contains(&fam) || !seen.insert(fam) {
                return Ok(CheckResult::fails(None, None, "cocone composition is not a bijection onto families"));
            }
        }
    }
    Ok(CheckResult::exact(format!("universal against {} test presheaves", tests.len())))
}
