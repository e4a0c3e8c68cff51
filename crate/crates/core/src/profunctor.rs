//! Finite-set-valued profunctors `J: A ⇸ B` as element tables with actions.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::category::{same_category, FinCategory, Mor, Obj};
use crate::error::{Error, Result, Violation};
use crate::finset::FinSet;
use crate::functor::FinFunctor;

#[derive(Debug, PartialEq, Eq)]
struct ProfData {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    /// `elems[x * |B| + y] = J(x, y)`.
    elems: Vec<FinSet>,
    /// `lact[a * |B| + y][u] = λ(a, u)` for `u ∈ J(cod a, y)`.
    lact: Vec<Vec<usize>>,
    /// `ract[b * |A| + x][u] = ρ(u, b)` for `u ∈ J(x, dom b)`.
    ract: Vec<Vec<usize>>,
}

/// A profunctor `J: A ⇸ B`: sets `J(x, y)` with a left action
/// `λ: A(x', x) × J(x, y) → J(x', y)` and a right action
/// `ρ: J(x, y) × B(y, y') → J(x, y')`.
///
/// Cheap to clone; the tables are shared.
#[derive(Debug, Clone)]
pub struct Profunctor(Arc<ProfData>);

impl PartialEq for Profunctor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (same_category(&self.0.source, &other.0.source)
                && same_category(&self.0.target, &other.0.target)
                && self.0.elems == other.0.elems
                && self.0.lact == other.0.lact
                && self.0.ract == other.0.ract)
    }
}

impl Eq for Profunctor {}

impl Profunctor {
    /// Builds a profunctor from element sets and action functions on indices.
    ///
    /// `lact(a, y, u)` is `λ(a, u)` for `u ∈ J(cod a, y)` and `ract(x, u, b)`
    /// is `ρ(u, b)` for `u ∈ J(x, dom b)`; results are indices into the
    /// corresponding element sets.
    pub fn from_fn<L, R>(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        elems: Vec<FinSet>,
        mut lact: L,
        mut ract: R,
    ) -> Profunctor
    where
        L: FnMut(Mor, Obj, usize) -> usize,
        R: FnMut(Obj, usize, Mor) -> usize,
    {
        let (na, nb) = (source.num_objects(), target.num_objects());
        assert_eq!(elems.len(), na * nb, "one element set per object pair");
        let lact = (0..source.num_morphisms() * nb)
            .map(|i| {
                let (a, y) = (i / nb, i % nb);
                let x = source.cod(a);
                (0..elems[x * nb + y].len()).map(|u| lact(a, y, u)).collect()
            })
            .collect();
        let ract = (0..target.num_morphisms() * na)
            .map(|i| {
                let (b, x) = (i / na, i % na);
                let y = target.dom(b);
                (0..elems[x * nb + y].len()).map(|u| ract(x, u, b)).collect()
            })
            .collect();
        Profunctor(Arc::new(ProfData {
            source,
            target,
            elems,
            lact,
            ract,
        }))
    }

    /// Builds a profunctor from named tables.
    ///
    /// `elems` maps `(x, y)` to the atoms of `J(x, y)` (missing pairs are empty);
    /// `lact` maps `(a, y, u)` to `λ(a, u)`; `ract` maps `(x, u, b)` to `ρ(u, b)`.
    /// Entries for identity morphisms may be omitted and default to the identity.
    pub fn from_names(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        elems: &BTreeMap<(String, String), Vec<String>>,
        lact: &BTreeMap<(String, String, String), String>,
        ract: &BTreeMap<(String, String, String), String>,
    ) -> Result<Profunctor> {
        let (na, nb) = (source.num_objects(), target.num_objects());
        let mut sets = vec![FinSet::empty(); na * nb];
        for ((x, y), atoms) in elems {
            let i = source
                .object_index(x)
                .ok_or_else(|| Error::UnknownObject(x.clone()))?;
            let j = target
                .object_index(y)
                .ok_or_else(|| Error::UnknownObject(y.clone()))?;
            sets[i * nb + j] = FinSet::new(atoms.iter().cloned())?;
        }
        for key in lact.keys() {
            source
                .mor_index(&key.0)
                .ok_or_else(|| Error::UnknownMorphism(key.0.clone()))?;
            target
                .object_index(&key.1)
                .ok_or_else(|| Error::UnknownObject(key.1.clone()))?;
        }
        for key in ract.keys() {
            source
                .object_index(&key.0)
                .ok_or_else(|| Error::UnknownObject(key.0.clone()))?;
            target
                .mor_index(&key.2)
                .ok_or_else(|| Error::UnknownMorphism(key.2.clone()))?;
        }
        let err = std::cell::RefCell::new(None);
        let p = Profunctor::from_fn(
            source.clone(),
            target.clone(),
            sets.clone(),
            |a, y, u| {
                let x = source.cod(a);
                let from = &sets[x * nb + y];
                let to = &sets[source.dom(a) * nb + y];
                let key = (
                    source.mor_name(a).to_string(),
                    target.object_name(y).to_string(),
                    from.atom(u).to_string(),
                );
                lookup_action(lact, &key, source.is_identity(a), from.atom(u), to, &mut err.borrow_mut())
            },
            |x, u, b| {
                let y = target.dom(b);
                let from = &sets[x * nb + y];
                let to = &sets[x * nb + target.cod(b)];
                let key = (
                    source.object_name(x).to_string(),
                    from.atom(u).to_string(),
                    target.mor_name(b).to_string(),
                );
                lookup_action(ract, &key, target.is_identity(b), from.atom(u), to, &mut err.borrow_mut())
            },
        );
        match err.into_inner() {
            Some(e) => Err(e),
            None => Ok(p),
        }
    }

    /// The hom-profunctor `C(−, −): C ⇸ C` with composition as both actions.
    /// Elements of `C(x, y)` are the morphism names.
    pub fn hom(c: &Arc<FinCategory>) -> Profunctor {
        let n = c.num_objects();
        let elems = (0..n * n).map(|i| c.hom_set(i / n, i % n)).collect();
        // morphism names inside one hom-set are sorted, so local indices match
        Profunctor::from_fn(
            c.clone(),
            c.clone(),
            elems,
            |a, y, u| {
                let f = c.hom(c.cod(a), y).start + u;
                c.local_index(c.compose(f, a))
            },
            |x, u, b| {
                let f = c.hom(x, c.dom(b)).start + u;
                c.local_index(c.compose(b, f))
            },
        )
    }

    /// The profunctor with all element sets empty.
    pub fn empty(source: &Arc<FinCategory>, target: &Arc<FinCategory>) -> Profunctor {
        let n = source.num_objects() * target.num_objects();
        Profunctor::from_fn(
            source.clone(),
            target.clone(),
            vec![FinSet::empty(); n],
            |_, _, _| unreachable!(),
            |_, _, _| unreachable!(),
        )
    }

    /// The restriction `K(f, g)(x, y) = K(f x, g y)` with induced actions.
    pub fn restricted(&self, f: &FinFunctor, g: &FinFunctor) -> Result<Profunctor> {
        if !same_category(f.target(), self.source()) || !same_category(g.target(), self.target()) {
            return Err(Error::BoundaryMismatch(
                "restriction functors do not land in the profunctor's categories".into(),
            ));
        }
        let (a, b) = (f.source().clone(), g.source().clone());
        let nb = b.num_objects();
        let elems = (0..a.num_objects() * nb)
            .map(|i| self.elems(f.on_obj(i / nb), g.on_obj(i % nb)).clone())
            .collect();
        Ok(Profunctor::from_fn(
            a,
            b,
            elems,
            |m, y, u| self.lact(f.on_mor(m), g.on_obj(y), u),
            |x, u, m| self.ract(f.on_obj(x), u, g.on_mor(m)),
        ))
    }

    /// The horizontal dual `J^co: B^op ⇸ A^op`, `J^co(y, x) = J(x, y)`.
    pub fn dual(&self, source_op: &Arc<FinCategory>, target_op: &Arc<FinCategory>) -> Profunctor {
        // source_op = B^op, target_op = A^op
        let (a, b) = (self.source(), self.target());
        let bo = |y: Obj| b.object_index(source_op.object_name(y)).unwrap();
        let ao = |x: Obj| a.object_index(target_op.object_name(x)).unwrap();
        let na = target_op.num_objects();
        let elems = (0..source_op.num_objects() * na)
            .map(|i| self.elems(ao(i % na), bo(i / na)).clone())
            .collect();
        Profunctor::from_fn(
            source_op.clone(),
            target_op.clone(),
            elems,
            |m, x, u| {
                // m: y' → y in B^op is m: y → y' in B; acts on the right
                let bm = b.mor_index(source_op.mor_name(m)).unwrap();
                self.ract(ao(x), u, bm)
            },
            |y, u, m| {
                let am = a.mor_index(target_op.mor_name(m)).unwrap();
                self.lact(am, bo(y), u)
            },
        )
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.0.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.0.target
    }

    /// The set `J(x, y)`.
    pub fn elems(&self, x: Obj, y: Obj) -> &FinSet {
        &self.0.elems[x * self.0.target.num_objects() + y]
    }

    pub fn size(&self, x: Obj, y: Obj) -> usize {
        self.elems(x, y).len()
    }

    /// Total number of elements over all object pairs.
    pub fn total_size(&self) -> usize {
        self.0.elems.iter().map(FinSet::len).sum()
    }

    /// `λ(a, u)` for `u ∈ J(cod a, y)`.
    pub fn lact(&self, a: Mor, y: Obj, u: usize) -> usize {
        self.0.lact[a * self.0.target.num_objects() + y][u]
    }

    /// `ρ(u, b)` for `u ∈ J(x, dom b)`.
    pub fn ract(&self, x: Obj, u: usize, b: Mor) -> usize {
        self.0.ract[b * self.0.source.num_objects() + x][u]
    }

    /// Whether `other` is the same table (pointer or structural equality).
    pub fn ptr_eq(&self, other: &Profunctor) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Checks the unit, associativity and compatibility laws of both actions.
    pub fn validate(&self) -> Vec<Violation> {
        let (a, b) = (&*self.0.source, &*self.0.target);
        let mut out = Vec::new();
        let el = |x: Obj, y: Obj, u: usize| self.elems(x, y).atom(u).to_string();
        for x in 0..a.num_objects() {
            for y in 0..b.num_objects() {
                for u in 0..self.size(x, y) {
                    if self.lact(a.id(x), y, u) != u {
                        out.push(Violation::new(
                            "left unit",
                            format!("λ({}, {}) ≠ {}", a.mor_name(a.id(x)), el(x, y, u), el(x, y, u)),
                        ));
                    }
                    if self.ract(x, u, b.id(y)) != u {
                        out.push(Violation::new(
                            "right unit",
                            format!("ρ({}, {}) ≠ {}", el(x, y, u), b.mor_name(b.id(y)), el(x, y, u)),
                        ));
                    }
                }
            }
        }
        for m in 0..a.num_morphisms() {
            for m2 in a.into_object(a.dom(m)) {
                let mm = a.compose(m, m2);
                for y in 0..b.num_objects() {
                    for u in 0..self.size(a.cod(m), y) {
                        if self.lact(m2, y, self.lact(m, y, u)) != self.lact(mm, y, u) {
                            out.push(Violation::new(
                                "left associativity",
                                format!(
                                    "λ({}, λ({}, {})) ≠ λ({}, {})",
                                    a.mor_name(m2),
                                    a.mor_name(m),
                                    el(a.cod(m), y, u),
                                    a.mor_name(mm),
                                    el(a.cod(m), y, u)
                                ),
                            ));
                        }
                    }
                }
            }
        }
        for m in 0..b.num_morphisms() {
            for m2 in b.out_of_object(b.cod(m)) {
                let mm = b.compose(m2, m);
                for x in 0..a.num_objects() {
                    for u in 0..self.size(x, b.dom(m)) {
                        if self.ract(x, self.ract(x, u, m), m2) != self.ract(x, u, mm) {
                            out.push(Violation::new(
                                "right associativity",
                                format!(
                                    "ρ(ρ({}, {}), {}) ≠ ρ({}, {})",
                                    el(x, b.dom(m), u),
                                    b.mor_name(m),
                                    b.mor_name(m2),
                                    el(x, b.dom(m), u),
                                    b.mor_name(mm)
                                ),
                            ));
                        }
                    }
                }
            }
        }
        for ma in 0..a.num_morphisms() {
            for mb in 0..b.num_morphisms() {
                let (x, y) = (a.cod(ma), b.dom(mb));
                for u in 0..self.size(x, y) {
                    let lhs = self.lact(ma, b.cod(mb), self.ract(x, u, mb));
                    let rhs = self.ract(a.dom(ma), self.lact(ma, y, u), mb);
                    if lhs != rhs {
                        out.push(Violation::new(
                            "compatibility",
                            format!(
                                "λ({}, ρ({}, {})) ≠ ρ(λ({}, {}), {})",
                                a.mor_name(ma),
                                el(x, y, u),
                                b.mor_name(mb),
                                a.mor_name(ma),
                                el(x, y, u),
                                b.mor_name(mb)
                            ),
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Named element tables, suitable for serialization.
    pub fn named_elems(&self) -> BTreeMap<(String, String), Vec<String>> {
        let (a, b) = (self.source(), self.target());
        let mut out = BTreeMap::new();
        for x in 0..a.num_objects() {
            for y in 0..b.num_objects() {
                out.insert(
                    (a.object_name(x).to_string(), b.object_name(y).to_string()),
                    self.elems(x, y).atoms().to_vec(),
                );
            }
        }
        out
    }

    /// Named left action `(a, y, u) ↦ λ(a, u)`.
    pub fn named_lact(&self) -> BTreeMap<(String, String, String), String> {
        let (a, b) = (self.source(), self.target());
        let mut out = BTreeMap::new();
        for m in 0..a.num_morphisms() {
            for y in 0..b.num_objects() {
                for u in 0..self.size(a.cod(m), y) {
                    let v = self.lact(m, y, u);
                    out.insert(
                        (
                            a.mor_name(m).to_string(),
                            b.object_name(y).to_string(),
                            self.elems(a.cod(m), y).atom(u).to_string(),
                        ),
                        self.elems(a.dom(m), y).atom(v).to_string(),
                    );
                }
            }
        }
        out
    }

    /// Named right action `(x, u, b) ↦ ρ(u, b)`.
    pub fn named_ract(&self) -> BTreeMap<(String, String, String), String> {
        let (a, b) = (self.source(), self.target());
        let mut out = BTreeMap::new();
        for m in 0..b.num_morphisms() {
            for x in 0..a.num_objects() {
                for u in 0..self.size(x, b.dom(m)) {
                    let v = self.ract(x, u, m);
                    out.insert(
                        (
                            a.object_name(x).to_string(),
                            self.elems(x, b.dom(m)).atom(u).to_string(),
                            b.mor_name(m).to_string(),
                        ),
                        self.elems(x, b.cod(m)).atom(v).to_string(),
                    );
                }
            }
        }
        out
    }
}

fn lookup_action(
    table: &BTreeMap<(String, String, String), String>,
    key: &(String, String, String),
    is_identity: bool,
    from_atom: &str,
    to: &FinSet,
    err: &mut Option<Error>,
) -> usize {
    let name = match table.get(key) {
        Some(v) => v.as_str(),
        None if is_identity => from_atom,
        None => {
            err.get_or_insert_with(|| {
                Error::IncompleteTable(format!("missing action entry {key:?}"))
            });
            return 0;
        }
    };
    match to.index_of(name) {
        Some(i) => i,
        None => {
            err.get_or_insert_with(|| Error::UnknownAtom(name.to_string()));
            0
        }
    }
}

/// Whether consecutive profunctors share their middle categories.
pub fn is_composable(path: &[Profunctor]) -> bool {
    path.windows(2)
        .all(|w| same_category(w[0].target(), w[1].source()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{terminal, walking_arrow};

    fn on_terminal(atoms: &[&str]) -> Profunctor {
        let one = Arc::new(terminal());
        let set = FinSet::new(atoms.iter().copied()).unwrap();
        Profunctor::from_fn(one.clone(), one, vec![set], |_, _, u| u, |_, u, _| u)
    }

    #[test]
    fn hom_of_arrow_is_valid() {
        let c = Arc::new(walking_arrow());
        let h = Profunctor::hom(&c);
        assert!(h.validate().is_empty());
        assert_eq!(h.size(0, 1), 1);
        assert_eq!(h.size(1, 0), 0);
        assert_eq!(h.total_size(), 3);
    }

    #[test]
    fn trivial_actions_are_valid() {
        assert!(on_terminal(&["u", "v"]).validate().is_empty());
    }

    #[test]
    fn broken_unit_is_reported() {
        let one = Arc::new(terminal());
        let mut lact = BTreeMap::new();
        lact.insert(("id".into(), "*".into(), "u".into()), "v".to_string());
        let elems = [(("*".to_string(), "*".to_string()), vec!["u".to_string(), "v".to_string()])]
            .into_iter()
            .collect();
        let j = Profunctor::from_names(one.clone(), one, &elems, &lact, &BTreeMap::new()).unwrap();
        let v = j.validate();
        assert!(v.iter().any(|v| v.rule == "left unit"), "{v:?}");
    }

    #[test]
    fn missing_non_identity_action_is_an_error() {
        let c = Arc::new(walking_arrow());
        let elems = [(("1".to_string(), "1".to_string()), vec!["u".to_string()])]
            .into_iter()
            .collect();
        // λ(a, u) with u ∈ J(1, 1) must land in J(0, 1), which is empty
        let err = Profunctor::from_names(c.clone(), c, &elems, &BTreeMap::new(), &BTreeMap::new());
        assert!(err.is_err());
    }

    #[test]
    fn named_round_trip() {
        let c = Arc::new(walking_arrow());
        let h = Profunctor::hom(&c);
        let back = Profunctor::from_names(
            c.clone(),
            c.clone(),
            &h.named_elems(),
            &h.named_lact(),
            &h.named_ract(),
        )
        .unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn dual_of_hom_is_hom_of_opposite() {
        let c = Arc::new(walking_arrow());
        let op = Arc::new(c.opposite());
        let d = Profunctor::hom(&c).dual(&op, &op);
        assert!(d.is_valid());
        assert_eq!(d, Profunctor::hom(&op));
    }
}
