//! Finite categories given by complete composition tables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::error::{Error, Result, Violation};
use crate::finset::FinSet;

/// Index of an object in [`FinCategory::objects`].
pub type Obj = usize;
/// Index of a morphism in [`FinCategory::morphisms`].
pub type Mor = usize;

pub(crate) const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub dom: Obj,
    pub cod: Obj,
}

/// A finite category.
///
/// Objects are kept in lexicographic order and morphisms are sorted by
/// `(dom, cod, name)`, so every hom-set is a contiguous range of morphism
/// indices and structural equality is table equality. Morphism names are
/// unique within a category; the namespaced atom of a morphism is
/// `hom:dom→cod:name` (see [`FinCategory::qualified_name`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinCategory {
    objects: FinSet,
    morphisms: Vec<Morphism>,
    hom_start: Vec<usize>,
    identity: Vec<Mor>,
    /// `comp[g * m + f] = g ∘ f`, or `NONE` when `cod f ≠ dom g`.
    comp: Vec<Mor>,
}

impl FinCategory {
    /// Builds a category from named tables.
    ///
    /// `comp` maps `(g, f)` to `g ∘ f` and must cover every composable pair.
    /// Only structural totality is checked here; the category axioms are
    /// checked by [`FinCategory::validate`].
    pub fn from_tables<O, S>(
        objects: O,
        morphisms: &[(&str, &str, &str)],
        identity: &[(&str, &str)],
        comp: &[((&str, &str), &str)],
    ) -> Result<Self>
    where
        O: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let objects = FinSet::new(objects)?;
        let owned: Vec<(String, String, String)> = morphisms
            .iter()
            .map(|&(n, d, c)| (n.to_string(), d.to_string(), c.to_string()))
            .collect();
        let identity: BTreeMap<String, String> = identity
            .iter()
            .map(|&(o, m)| (o.to_string(), m.to_string()))
            .collect();
        let comp: BTreeMap<(String, String), String> = comp
            .iter()
            .map(|&((g, f), h)| ((g.to_string(), f.to_string()), h.to_string()))
            .collect();
        Self::from_owned_tables(objects, owned, &identity, &comp)
    }

    /// Same as [`FinCategory::from_tables`] with owned names.
    pub fn from_owned_tables(
        objects: FinSet,
        morphisms: Vec<(String, String, String)>,
        identity: &BTreeMap<String, String>,
        comp: &BTreeMap<(String, String), String>,
    ) -> Result<Self> {
        let n = objects.len();
        let mut mors = Vec::with_capacity(morphisms.len());
        for (name, d, c) in morphisms {
            let dom = objects
                .index_of(&d)
                .ok_or_else(|| Error::UnknownObject(d.clone()))?;
            let cod = objects
                .index_of(&c)
                .ok_or_else(|| Error::UnknownObject(c.clone()))?;
            mors.push(Morphism { name, dom, cod });
        }
        mors.sort_by(|a, b| (a.dom, a.cod, &a.name).cmp(&(b.dom, b.cod, &b.name)));
        let mut by_name: HashMap<&str, Mor> = HashMap::new();
        for (i, m) in mors.iter().enumerate() {
            if by_name.insert(m.name.as_str(), i).is_some() {
                return Err(Error::DuplicateAtom(m.name.clone()));
            }
        }
        let lookup = |name: &str| -> Result<Mor> {
            by_name
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
        };

        let mut hom_start = vec![0; n * n + 1];
        for m in &mors {
            hom_start[m.dom * n + m.cod + 1] += 1;
        }
        for i in 0..n * n {
            hom_start[i + 1] += hom_start[i];
        }

        let mut id = vec![NONE; n];
        for (o, m) in identity {
            let x = objects
                .index_of(o)
                .ok_or_else(|| Error::UnknownObject(o.clone()))?;
            id[x] = lookup(m)?;
        }
        if let Some(x) = id.iter().position(|&m| m == NONE) {
            return Err(Error::IncompleteTable(format!(
                "no identity for object `{}`",
                objects.atom(x)
            )));
        }

        let m = mors.len();
        let mut table = vec![NONE; m * m];
        for ((g, f), h) in comp {
            let (gi, fi, hi) = (lookup(g)?, lookup(f)?, lookup(h)?);
            if mors[fi].cod != mors[gi].dom {
                return Err(Error::Invalid(format!(
                    "composite `{g}∘{f}` given for a non-composable pair"
                )));
            }
            table[gi * m + fi] = hi;
        }
        for f in 0..m {
            for g in 0..m {
                if mors[f].cod == mors[g].dom && table[g * m + f] == NONE {
                    return Err(Error::IncompleteTable(format!(
                        "missing composite `{}∘{}`",
                        mors[g].name, mors[f].name
                    )));
                }
            }
        }
        Ok(FinCategory {
            objects,
            morphisms: mors,
            hom_start,
            identity: id,
            comp: table,
        })
    }

    /// Builds a category from a set of objects, a list of morphisms and a
    /// composition closure computed by `compose(g, f)` on morphism names.
    pub(crate) fn from_fn<F>(
        objects: FinSet,
        morphisms: Vec<(String, String, String)>,
        identity: &BTreeMap<String, String>,
        mut compose: F,
    ) -> Result<Self>
    where
        F: FnMut(&str, &str) -> String,
    {
        let mut comp = BTreeMap::new();
        for (f, _, fc) in &morphisms {
            for (g, gd, _) in &morphisms {
                if fc == gd {
                    comp.insert((g.clone(), f.clone()), compose(g, f));
                }
            }
        }
        Self::from_owned_tables(objects, morphisms, identity, &comp)
    }

    pub fn objects(&self) -> &FinSet {
        &self.objects
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn object_name(&self, x: Obj) -> &str {
        self.objects.atom(x)
    }

    pub fn object_index(&self, name: &str) -> Option<Obj> {
        self.objects.index_of(name)
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism(&self, f: Mor) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn mor_name(&self, f: Mor) -> &str {
        &self.morphisms[f].name
    }

    pub fn mor_index(&self, name: &str) -> Option<Mor> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    /// `hom:dom→cod:name`.
    pub fn qualified_name(&self, f: Mor) -> String {
        let m = &self.morphisms[f];
        format!(
            "hom:{}→{}:{}",
            self.object_name(m.dom),
            self.object_name(m.cod),
            m.name
        )
    }

    pub fn dom(&self, f: Mor) -> Obj {
        self.morphisms[f].dom
    }

    pub fn cod(&self, f: Mor) -> Obj {
        self.morphisms[f].cod
    }

    pub fn hom(&self, a: Obj, b: Obj) -> Range<Mor> {
        let n = self.num_objects();
        self.hom_start[a * n + b]..self.hom_start[a * n + b + 1]
    }

    pub fn hom_len(&self, a: Obj, b: Obj) -> usize {
        self.hom(a, b).len()
    }

    /// Position of `f` inside its hom-set.
    pub fn local_index(&self, f: Mor) -> usize {
        f - self.hom(self.dom(f), self.cod(f)).start
    }

    /// The hom-set `C(a, b)` as a set of morphism names.
    pub fn hom_set(&self, a: Obj, b: Obj) -> FinSet {
        FinSet::from_iter_dedup(self.hom(a, b).map(|f| self.morphisms[f].name.clone()))
    }

    pub fn id(&self, x: Obj) -> Mor {
        self.identity[x]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identity[self.dom(f)] == f
    }

    /// `g ∘ f`, if the table has an entry for the pair.
    pub fn try_compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        let h = self.comp[g * self.num_morphisms() + f];
        (h != NONE).then_some(h)
    }

    /// `g ∘ f`. Panics when `cod f ≠ dom g`.
    pub fn compose(&self, g: Mor, f: Mor) -> Mor {
        self.try_compose(g, f).unwrap_or_else(|| {
            panic!(
                "morphisms `{}` and `{}` are not composable",
                self.mor_name(g),
                self.mor_name(f)
            )
        })
    }

    /// Composes a sequence `f1, f2, ..., fk` in diagrammatic order (`fk ∘ ... ∘ f1`).
    pub fn compose_path(&self, start: Obj, path: &[Mor]) -> Mor {
        path.iter()
            .fold(self.id(start), |acc, &f| self.compose(f, acc))
    }

    /// Morphisms with the given codomain.
    pub fn into_object(&self, x: Obj) -> impl Iterator<Item = Mor> + '_ {
        (0..self.num_morphisms()).filter(move |&f| self.cod(f) == x)
    }

    /// Morphisms with the given domain.
    pub fn out_of_object(&self, x: Obj) -> impl Iterator<Item = Mor> + '_ {
        (0..self.num_morphisms()).filter(move |&f| self.dom(f) == x)
    }

    pub fn is_discrete(&self) -> bool {
        self.num_morphisms() == self.num_objects()
    }

    /// Checks identity, typing and associativity laws.
    ///
    /// Each ill-typed composition entry is reported once, and instances of
    /// the unit and associativity laws that go through such an entry are
    /// not reported again.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let m = self.num_morphisms();
        let name = |f: Mor| self.mor_name(f).to_string();
        for x in 0..self.num_objects() {
            let i = self.identity[x];
            if self.dom(i) != x || self.cod(i) != x {
                out.push(Violation::new(
                    "identity typing",
                    format!("identity of `{}` is `{}`", self.object_name(x), name(i)),
                ));
            }
        }
        let mut bad = vec![false; m * m];
        for f in 0..m {
            for g in 0..m {
                if let Some(h) = self.try_compose(g, f) {
                    if self.dom(h) != self.dom(f) || self.cod(h) != self.cod(g) {
                        bad[g * m + f] = true;
                        out.push(Violation::new(
                            "composition typing",
                            format!(
                                "({}, {}) composes to `{}` outside hom({}, {})",
                                name(g),
                                name(f),
                                name(h),
                                self.object_name(self.dom(f)),
                                self.object_name(self.cod(g))
                            ),
                        ));
                    }
                }
            }
        }
        for f in 0..m {
            let (d, c) = (self.dom(f), self.cod(f));
            let (id_d, id_c) = (self.identity[d], self.identity[c]);
            if !bad[f * m + id_d] && self.try_compose(f, id_d) != Some(f) {
                out.push(Violation::new(
                    "right unit",
                    format!("({}, {}) does not compose to `{}`", name(f), name(id_d), name(f)),
                ));
            }
            if !bad[id_c * m + f] && self.try_compose(id_c, f) != Some(f) {
                out.push(Violation::new(
                    "left unit",
                    format!("({}, {}) does not compose to `{}`", name(id_c), name(f), name(f)),
                ));
            }
        }
        for f in 0..m {
            for g in self.out_of_object(self.cod(f)) {
                if bad[g * m + f] {
                    continue;
                }
                let gf = self.compose(g, f);
                for h in self.out_of_object(self.cod(g)) {
                    if bad[h * m + g] {
                        continue;
                    }
                    let hg = self.compose(h, g);
                    if bad[h * m + gf] || bad[hg * m + f] {
                        continue;
                    }
                    let lhs = self.try_compose(h, gf);
                    let rhs = self.try_compose(hg, f);
                    if lhs != rhs {
                        out.push(Violation::new(
                            "associativity",
                            format!("({}, {}, {})", name(h), name(g), name(f)),
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

    /// The opposite category: `op(a, b) = C(b, a)` with composition reversed.
    pub fn opposite(&self) -> FinCategory {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| {
                (
                    m.name.clone(),
                    self.object_name(m.cod).to_string(),
                    self.object_name(m.dom).to_string(),
                )
            })
            .collect();
        let identity = self.named_identities();
        let mut comp = BTreeMap::new();
        let m = self.num_morphisms();
        for f in 0..m {
            for g in 0..m {
                if let Some(h) = self.try_compose(g, f) {
                    comp.insert((name_of(self, f), name_of(self, g)), name_of(self, h));
                }
            }
        }
        FinCategory::from_owned_tables(self.objects.clone(), morphisms, &identity, &comp)
            .expect("opposite of a well-formed table is well-formed")
    }

    /// The identity table `x ↦ id_x` by name.
    pub fn named_identities(&self) -> BTreeMap<String, String> {
        (0..self.num_objects())
            .map(|x| (self.object_name(x).to_string(), name_of(self, self.identity[x])))
            .collect()
    }

    /// Triples `(name, dom, cod)` for every morphism.
    pub fn named_morphisms(&self) -> Vec<(String, String, String)> {
        self.morphisms
            .iter()
            .map(|m| {
                (
                    m.name.clone(),
                    self.object_name(m.dom).to_string(),
                    self.object_name(m.cod).to_string(),
                )
            })
            .collect()
    }

    /// The composition table keyed by names `(g, f) ↦ g∘f`.
    pub fn named_composition(&self) -> BTreeMap<(String, String), String> {
        let mut comp = BTreeMap::new();
        let m = self.num_morphisms();
        for f in 0..m {
            for g in 0..m {
                if let Some(h) = self.try_compose(g, f) {
                    comp.insert((name_of(self, g), name_of(self, f)), name_of(self, h));
                }
            }
        }
        comp
    }
}

fn name_of(c: &FinCategory, f: Mor) -> String {
    c.mor_name(f).to_string()
}

impl fmt::Display for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "category with {} objects and {} morphisms",
            self.num_objects(),
            self.num_morphisms()
        )
    }
}

/// Compares two shared categories, taking the pointer shortcut first.
pub fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// The terminal category `𝟙` with object `*` and morphism `id`.
pub fn terminal() -> FinCategory {
    FinCategory::from_tables(["*"], &[("id", "*", "*")], &[("*", "id")], &[(("id", "id"), "id")])
        .unwrap()
}

/// The empty category.
pub fn empty_category() -> FinCategory {
    FinCategory::from_tables(Vec::<String>::new(), &[], &[], &[]).unwrap()
}

/// The walking arrow `𝟚`: objects `0, 1`, morphisms `id0, id1, a: 0 → 1`.
pub fn walking_arrow() -> FinCategory {
    FinCategory::from_tables(
        ["0", "1"],
        &[("id0", "0", "0"), ("id1", "1", "1"), ("a", "0", "1")],
        &[("0", "id0"), ("1", "id1")],
        &[
            (("id0", "id0"), "id0"),
            (("id1", "id1"), "id1"),
            (("a", "id0"), "a"),
            (("id1", "a"), "a"),
        ],
    )
    .unwrap()
}

/// Identity morphism name used by the generated categories below.
pub fn id_name(x: &str) -> String {
    format!("id_{x}")
}

/// A discrete category on the given objects; identities are named `id_x`.
pub fn discrete<I, S>(objects: I) -> FinCategory
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let objects = FinSet::from_iter_dedup(objects);
    let morphisms = objects
        .iter()
        .map(|x| (id_name(x), x.to_string(), x.to_string()))
        .collect();
    let identity = objects.iter().map(|x| (x.to_string(), id_name(x))).collect();
    FinCategory::from_fn(objects, morphisms, &identity, |g, _| g.to_string()).unwrap()
}

/// The thin category of a preorder; `leq` lists generating relations and is
/// closed reflexively and transitively. Non-identity morphisms are named `x≤y`.
pub fn preorder<I, S>(objects: I, leq: &[(&str, &str)]) -> Result<FinCategory>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let objects = FinSet::new(objects)?;
    let n = objects.len();
    let mut rel = vec![false; n * n];
    for x in 0..n {
        rel[x * n + x] = true;
    }
    for &(a, b) in leq {
        let i = objects
            .index_of(a)
            .ok_or_else(|| Error::UnknownObject(a.to_string()))?;
        let j = objects
            .index_of(b)
            .ok_or_else(|| Error::UnknownObject(b.to_string()))?;
        rel[i * n + j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if rel[i * n + k] && rel[k * n + j] {
                    rel[i * n + j] = true;
                }
            }
        }
    }
    let mor_name = |i: usize, j: usize| {
        if i == j {
            id_name(objects.atom(i))
        } else {
            format!("{}≤{}", objects.atom(i), objects.atom(j))
        }
    };
    let mut morphisms = Vec::new();
    let mut ends = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if rel[i * n + j] {
                let name = mor_name(i, j);
                ends.insert(name.clone(), (i, j));
                morphisms.push((name, objects.atom(i).to_string(), objects.atom(j).to_string()));
            }
        }
    }
    let identity = objects.iter().map(|x| (x.to_string(), id_name(x))).collect();
    FinCategory::from_fn(objects.clone(), morphisms, &identity, |g, f| {
        let (i, _) = ends[f];
        let (_, j) = ends[g];
        mor_name(i, j)
    })
}

/// A one-object category `*` from a monoid multiplication table.
///
/// `elements[0]` is the unit; `mult[i][j]` is the index of `elements[i] ∘ elements[j]`.
pub fn monoid(elements: &[&str], mult: &[Vec<usize>]) -> Result<FinCategory> {
    let morphisms = elements
        .iter()
        .map(|e| (e.to_string(), "*".to_string(), "*".to_string()))
        .collect();
    let index: HashMap<&str, usize> = elements.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let identity = [("*".to_string(), elements[0].to_string())].into_iter().collect();
    FinCategory::from_fn(FinSet::new(["*"])?, morphisms, &identity, |g, f| {
        elements[mult[index[g]][index[f]]].to_string()
    })
}

/// The cyclic group `ℤ/n` as a one-object category with elements `g0 .. g{n-1}`.
pub fn cyclic_group(n: usize) -> FinCategory {
    let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mult: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    monoid(&refs, &mult).unwrap()
}

/// A category where every hom-set is a singleton (all objects uniquely isomorphic).
pub fn indiscrete<I, S>(objects: I) -> FinCategory
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let objects = FinSet::from_iter_dedup(objects);
    let all: Vec<(&str, &str)> = objects
        .iter()
        .flat_map(|a| objects.iter().map(move |b| (a, b)))
        .collect();
    let mut morphisms = Vec::new();
    let name = |a: &str, b: &str| {
        if a == b {
            id_name(a)
        } else {
            format!("{a}≅{b}")
        }
    };
    let mut ends = HashMap::new();
    for &(a, b) in &all {
        ends.insert(name(a, b), (a.to_string(), b.to_string()));
        morphisms.push((name(a, b), a.to_string(), b.to_string()));
    }
    let identity = objects.iter().map(|x| (x.to_string(), id_name(x))).collect();
    FinCategory::from_fn(objects.clone(), morphisms, &identity, |g, f| {
        name(&ends[f].0, &ends[g].1)
    })
    .unwrap()
}

/// The `n`-fold product of categories with tuple bookkeeping.
///
/// Objects and morphisms are named `(a,b,...)`; the tuple tables map between
/// indices of the product and index tuples of the factors.
#[derive(Debug, Clone)]
pub struct ProductCategory {
    pub category: Arc<FinCategory>,
    pub factors: Vec<Arc<FinCategory>>,
    obj_tuples: Vec<Vec<Obj>>,
    mor_tuples: Vec<Vec<Mor>>,
    obj_index: HashMap<Vec<Obj>, Obj>,
    mor_index: HashMap<Vec<Mor>, Mor>,
}

impl ProductCategory {
    pub fn new(factors: &[Arc<FinCategory>]) -> ProductCategory {
        let tuple_name = |parts: Vec<&str>| format!("({})", parts.join(","));
        let obj_tuples = crate::util::tuples(&factors.iter().map(|c| c.num_objects()).collect::<Vec<_>>());
        let mor_tuples = crate::util::tuples(&factors.iter().map(|c| c.num_morphisms()).collect::<Vec<_>>());
        let obj_name = |t: &[Obj]| {
            tuple_name(t.iter().zip(factors).map(|(&x, c)| c.object_name(x)).collect())
        };
        let mor_name = |t: &[Mor]| tuple_name(t.iter().zip(factors).map(|(&f, c)| c.mor_name(f)).collect());
        let objects = FinSet::new(obj_tuples.iter().map(|t| obj_name(t))).expect("distinct tuple names");
        let morphisms: Vec<(String, String, String)> = mor_tuples
            .iter()
            .map(|t| {
                let d: Vec<Obj> = t.iter().zip(factors).map(|(&f, c)| c.dom(f)).collect();
                let e: Vec<Obj> = t.iter().zip(factors).map(|(&f, c)| c.cod(f)).collect();
                (mor_name(t), obj_name(&d), obj_name(&e))
            })
            .collect();
        let identity: BTreeMap<String, String> = obj_tuples
            .iter()
            .map(|t| {
                let ids: Vec<Mor> = t.iter().zip(factors).map(|(&x, c)| c.id(x)).collect();
                (obj_name(t), mor_name(&ids))
            })
            .collect();
        let by_name: HashMap<String, Vec<Mor>> = mor_tuples.iter().map(|t| (mor_name(t), t.clone())).collect();
        let category = FinCategory::from_fn(objects, morphisms, &identity, |g, f| {
            let (gt, ft) = (&by_name[g], &by_name[f]);
            let h: Vec<Mor> = gt
                .iter()
                .zip(ft)
                .zip(factors)
                .map(|((&g, &f), c)| c.compose(g, f))
                .collect();
            mor_name(&h)
        })
        .expect("product tables are total");
        let obj_index = obj_tuples
            .iter()
            .map(|t| (t.clone(), category.object_index(&obj_name(t)).unwrap()))
            .collect();
        let names: HashMap<&str, Mor> = category
            .morphisms()
            .iter()
            .enumerate()
            .map(|(i, m)| (m.name.as_str(), i))
            .collect();
        let mor_index = mor_tuples
            .iter()
            .map(|t| (t.clone(), names[mor_name(t).as_str()]))
            .collect();
        let mut obj_by_index = vec![Vec::new(); category.num_objects()];
        for t in &obj_tuples {
            obj_by_index[category.object_index(&obj_name(t)).unwrap()] = t.clone();
        }
        let mut mor_by_index = vec![Vec::new(); category.num_morphisms()];
        for t in &mor_tuples {
            mor_by_index[names[mor_name(t).as_str()]] = t.clone();
        }
        ProductCategory {
            category: Arc::new(category),
            factors: factors.to_vec(),
            obj_tuples: obj_by_index,
            mor_tuples: mor_by_index,
            obj_index,
            mor_index,
        }
    }

    /// `base^n`.
    pub fn power(base: &Arc<FinCategory>, n: usize) -> ProductCategory {
        ProductCategory::new(&vec![base.clone(); n])
    }

    pub fn object(&self, tuple: &[Obj]) -> Obj {
        self.obj_index[tuple]
    }

    pub fn morphism(&self, tuple: &[Mor]) -> Mor {
        self.mor_index[tuple]
    }

    pub fn object_tuple(&self, x: Obj) -> &[Obj] {
        &self.obj_tuples[x]
    }

    pub fn morphism_tuple(&self, f: Mor) -> &[Mor] {
        &self.mor_tuples[f]
    }
}
