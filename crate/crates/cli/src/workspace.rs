//! Resolving documents into validated workspaces, and exporting core objects
//! back into canonical documents.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use hvdc_core::category::same_category;
use hvdc_core::corpus;
use hvdc_core::monoidal::{Flavor, LaxMonoidalFunctor, MonoidalProfunctor, MonoidalStructure};
use hvdc_core::yoneda::{yoneda_object, Presheaf};
use hvdc_core::{Cell, CellFrame, Context, FinCategory, FinFunctor, FinSet, NatTransformation, Obj, Profunctor, Target};

use crate::doc::*;
use crate::error::CliError;

pub const HOM_SEP: &str = "→";
pub const COMP_SEP: &str = "∘";

/// A named context before the command-line overrides are applied.
#[derive(Debug, Clone)]
pub struct NamedContext {
    pub profunctors: Vec<Profunctor>,
    pub functors: Vec<FinFunctor>,
    pub path_len: Option<usize>,
}

/// Every entry of a document, resolved against the core types and validated.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub categories: BTreeMap<String, Arc<FinCategory>>,
    pub functors: BTreeMap<String, FinFunctor>,
    pub transformations: BTreeMap<String, NatTransformation>,
    pub profunctors: BTreeMap<String, Profunctor>,
    pub presheaves: BTreeMap<String, Presheaf>,
    pub monoidal: BTreeMap<String, MonoidalStructure>,
    pub monoidal_functors: BTreeMap<String, LaxMonoidalFunctor>,
    pub monoidal_profunctors: BTreeMap<String, MonoidalProfunctor>,
    pub cells: BTreeMap<String, Cell>,
    pub contexts: BTreeMap<String, NamedContext>,
    /// Source of each entry, keyed by `(kind, name)`.
    pub provenance: BTreeMap<(String, String), String>,
    /// The canonical form of every entry.
    pub doc: Document,
}

/// One reason a document was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub entry: String,
    pub message: String,
    pub dangling: bool,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dangling {
            write!(f, "{}: dangling reference: {}", self.entry, self.message)
        } else {
            write!(f, "{}: {}", self.entry, self.message)
        }
    }
}

enum RefError {
    Dangling(String),
    Invalid(String),
}

type Resolve<T> = std::result::Result<T, RefError>;

fn split_key<'a>(key: &'a str, sep: &str) -> Option<(&'a str, &'a str)> {
    let mut it = key.split(sep);
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Some((a, b)),
        _ => None,
    }
}

/// The category named by `id(C)`, if the reference has that form.
fn identity_ref(name: &str) -> Option<&str> {
    name.strip_prefix("id(").and_then(|s| s.strip_suffix(')'))
}

/// Bundled workspace names, in lookup order.
pub const BUNDLED: [&str; 3] = ["walking_arrow", "z2", "corpus"];

struct Loader {
    ws: Workspace,
    problems: Vec<Problem>,
    /// Entries that failed to load, by `(kind, name)`.
    broken: std::collections::BTreeSet<(&'static str, String)>,
    source: String,
    arity: usize,
}

impl Loader {
    fn problem(&mut self, kind: &str, name: &str, message: impl Into<String>) {
        self.problems.push(Problem {
            entry: format!("{kind} `{name}`"),
            message: message.into(),
            dangling: false,
        });
    }

    fn fail(&mut self, kind: &'static str, name: &str, e: RefError) {
        let (message, dangling) = match e {
            RefError::Dangling(m) => (m, true),
            RefError::Invalid(m) => (m, false),
        };
        self.problems.push(Problem {
            entry: format!("{kind} `{name}`"),
            message,
            dangling,
        });
        self.broken.insert((kind, name.to_string()));
    }

    fn lookup<'a, T: Clone>(&self, table: &'a BTreeMap<String, T>, kind: &'static str, name: &str) -> Resolve<T> {
        match table.get(name) {
            Some(t) => Ok(t.clone()),
            None if self.broken.contains(&(kind, name.to_string())) => {
                Err(RefError::Invalid(format!("refers to invalid {kind} `{name}`")))
            }
            None => Err(RefError::Dangling(format!("unknown {kind} `{name}`"))),
        }
    }

    fn category(&self, name: &str) -> Resolve<Arc<FinCategory>> {
        self.lookup(&self.ws.categories, "category", name)
    }

    fn functor(&self, name: &str) -> Resolve<FinFunctor> {
        match identity_ref(name) {
            Some(c) => Ok(FinFunctor::identity(&self.category(c)?)),
            None => self.lookup(&self.ws.functors, "functor", name),
        }
    }

    fn profunctor(&self, name: &str) -> Resolve<Profunctor> {
        self.lookup(&self.ws.profunctors, "profunctor", name)
    }

    fn monoidal(&self, name: &str) -> Resolve<MonoidalStructure> {
        self.lookup(&self.ws.monoidal, "monoidal", name)
    }

    fn record(&mut self, kind: &str, name: &str) {
        self.ws.provenance.insert((kind.to_string(), name.to_string()), self.source.clone());
    }

    fn run(mut self, doc: &Document) -> Result<Workspace, Vec<Problem>> {
        if doc.hvdc != VERSION {
            self.problems.push(Problem {
                entry: "document".into(),
                message: format!("unsupported version {} (expected {VERSION})", doc.hvdc),
                dangling: false,
            });
            return Err(self.problems);
        }
        for (name, d) in &doc.categories {
            match load_category(d) {
                Ok(c) => {
                    self.ws.doc.categories.insert(name.clone(), export_category(&c));
                    self.ws.categories.insert(name.clone(), Arc::new(c));
                    self.record("category", name);
                }
                Err(msgs) => {
                    for m in msgs {
                        self.problem("category", name, m);
                    }
                    self.broken.insert(("category", name.clone()));
                }
            }
        }
        for (name, d) in &doc.functors {
            match self.load_functor(d) {
                Ok(f) => {
                    self.ws.doc.functors.insert(name.clone(), export_functor(&f, &d.source, &d.target));
                    self.ws.functors.insert(name.clone(), f);
                    self.record("functor", name);
                }
                Err(e) => self.fail("functor", name, e),
            }
        }
        for (name, d) in &doc.transformations {
            match self.load_transformation(d) {
                Ok(t) => {
                    self.ws.doc.transformations.insert(name.clone(), export_transformation(&t, &d.source, &d.target));
                    self.ws.transformations.insert(name.clone(), t);
                    self.record("transformation", name);
                }
                Err(e) => self.fail("transformation", name, e),
            }
        }
        for (name, d) in &doc.profunctors {
            match self.load_profunctor(d) {
                Ok(j) => {
                    self.ws.doc.profunctors.insert(name.clone(), export_profunctor(&j, &d.source, &d.target));
                    self.ws.profunctors.insert(name.clone(), j);
                    self.record("profunctor", name);
                }
                Err(e) => self.fail("profunctor", name, e),
            }
        }
        for (name, d) in &doc.presheaves {
            match self.load_presheaf(d) {
                Ok(p) => {
                    self.ws.doc.presheaves.insert(name.clone(), export_presheaf(&p, &d.base));
                    self.ws.presheaves.insert(name.clone(), p);
                    self.record("presheaf", name);
                }
                Err(e) => self.fail("presheaf", name, e),
            }
        }
        for (name, d) in &doc.monoidal {
            match self.load_monoidal(d) {
                Ok(m) => {
                    let exported = export_monoidal(&m, &d.base).expect("loaded structures are strict");
                    self.ws.doc.monoidal.insert(name.clone(), exported);
                    self.ws.monoidal.insert(name.clone(), m);
                    self.record("monoidal", name);
                }
                Err(e) => self.fail("monoidal", name, e),
            }
        }
        for (name, d) in &doc.monoidal_functors {
            match self.load_monoidal_functor(d) {
                Ok(f) => {
                    let exported = export_monoidal_functor(&f, &d.functor, &d.source, &d.target);
                    self.ws.doc.monoidal_functors.insert(name.clone(), exported);
                    self.ws.monoidal_functors.insert(name.clone(), f);
                    self.record("monoidal functor", name);
                }
                Err(e) => self.fail("monoidal functor", name, e),
            }
        }
        for (name, d) in &doc.monoidal_profunctors {
            match self.load_monoidal_profunctor(d) {
                Ok(j) => {
                    let exported = export_monoidal_profunctor(&j, &d.profunctor, &d.source, &d.target);
                    self.ws.doc.monoidal_profunctors.insert(name.clone(), exported);
                    self.ws.monoidal_profunctors.insert(name.clone(), j);
                    self.record("monoidal profunctor", name);
                }
                Err(e) => self.fail("monoidal profunctor", name, e),
            }
        }
        for (name, d) in &doc.cells {
            match self.load_cell(d) {
                Ok(c) => {
                    self.ws.doc.cells.insert(name.clone(), export_cell(&c, &d.source, &d.left, &d.right, &d.target));
                    self.ws.cells.insert(name.clone(), c);
                    self.record("cell", name);
                }
                Err(e) => self.fail("cell", name, e),
            }
        }
        for (name, d) in &doc.contexts {
            match self.load_context(d) {
                Ok(c) => {
                    self.ws.doc.contexts.insert(name.clone(), d.clone());
                    self.ws.contexts.insert(name.clone(), c);
                    self.record("context", name);
                }
                Err(e) => self.fail("context", name, e),
            }
        }
        if self.problems.is_empty() {
            Ok(self.ws)
        } else {
            Err(self.problems)
        }
    }

    fn load_functor(&self, d: &FunctorDoc) -> Resolve<FinFunctor> {
        let (a, b) = (self.category(&d.source)?, self.category(&d.target)?);
        let objs: Vec<(&str, &str)> = d.objects.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
        let mors: Vec<(&str, &str)> = d.morphisms.iter().map(|(x, y)| (x.as_str(), y.as_str())).collect();
        let f = FinFunctor::from_names(a, b, &objs, &mors).map_err(|e| RefError::Invalid(e.to_string()))?;
        violations(f.validate())?;
        Ok(f)
    }

    fn load_transformation(&self, d: &TransformationDoc) -> Resolve<NatTransformation> {
        let (f, g) = (self.functor(&d.source)?, self.functor(&d.target)?);
        let (a, c) = (f.source().clone(), f.target().clone());
        let mut comps = vec![usize::MAX; a.num_objects()];
        for (x, m) in &d.components {
            let xi = a.object_index(x).ok_or_else(|| RefError::Invalid(format!("unknown object `{x}`")))?;
            comps[xi] = c.mor_index(m).ok_or_else(|| RefError::Invalid(format!("unknown morphism `{m}`")))?;
        }
        if let Some(x) = comps.iter().position(|&m| m == usize::MAX) {
            return Err(RefError::Invalid(format!("no component at `{}`", a.object_name(x))));
        }
        let t = NatTransformation::new(f, g, comps).map_err(|e| RefError::Invalid(e.to_string()))?;
        violations(t.validate())?;
        Ok(t)
    }

    fn load_profunctor(&self, d: &ProfunctorDoc) -> Resolve<Profunctor> {
        let (a, b) = (self.category(&d.source)?, self.category(&d.target)?);
        let mut elems = BTreeMap::new();
        for (x, row) in &d.elements {
            for (y, atoms) in row {
                elems.insert((x.clone(), y.clone()), atoms.clone());
            }
        }
        let mut lact = BTreeMap::new();
        for (f, rows) in &d.left {
            for (y, row) in rows {
                for (u, v) in row {
                    lact.insert((f.clone(), y.clone(), u.clone()), v.clone());
                }
            }
        }
        let mut ract = BTreeMap::new();
        for (x, rows) in &d.right {
            for (u, row) in rows {
                for (g, v) in row {
                    ract.insert((x.clone(), u.clone(), g.clone()), v.clone());
                }
            }
        }
        let j = Profunctor::from_names(a, b, &elems, &lact, &ract).map_err(|e| RefError::Invalid(e.to_string()))?;
        violations(j.validate())?;
        Ok(j)
    }

    fn load_presheaf(&self, d: &PresheafDoc) -> Resolve<Presheaf> {
        let a = self.category(&d.base)?;
        let one = Arc::new(hvdc_core::category::terminal());
        let star = one.object_name(0).to_string();
        let elems = d.elements.iter().map(|(x, atoms)| ((x.clone(), star.clone()), atoms.clone())).collect();
        let mut lact = BTreeMap::new();
        for (f, row) in &d.action {
            for (u, v) in row {
                lact.insert((f.clone(), star.clone(), u.clone()), v.clone());
            }
        }
        let j = Profunctor::from_names(a, one, &elems, &lact, &BTreeMap::new())
            .map_err(|e| RefError::Invalid(e.to_string()))?;
        let p = Presheaf::from_profunctor(j).map_err(|e| RefError::Invalid(e.to_string()))?;
        violations(p.validate())?;
        Ok(p)
    }

    fn load_monoidal(&self, d: &MonoidalDoc) -> Resolve<MonoidalStructure> {
        let c = self.category(&d.base)?;
        let obj = |x: &str| c.object_index(x).ok_or_else(|| RefError::Invalid(format!("unknown object `{x}`")));
        let mor = |f: &str| c.mor_index(f).ok_or_else(|| RefError::Invalid(format!("unknown morphism `{f}`")));
        let unit = obj(&d.unit)?;
        let (no, nm) = (c.num_objects(), c.num_morphisms());
        let mut t = vec![usize::MAX; no * no];
        for (x, row) in &d.tensor {
            for (y, z) in row {
                t[obj(x)? * no + obj(y)?] = obj(z)?;
            }
        }
        if let Some(i) = t.iter().position(|&z| z == usize::MAX) {
            return Err(RefError::Invalid(format!(
                "no tensor for ({}, {})",
                c.object_name(i / no),
                c.object_name(i % no)
            )));
        }
        let mut tm = vec![usize::MAX; nm * nm];
        for (f, row) in &d.tensor_mor {
            for (g, h) in row {
                tm[mor(f)? * nm + mor(g)?] = mor(h)?;
            }
        }
        if let Some(i) = tm.iter().position(|&h| h == usize::MAX) {
            return Err(RefError::Invalid(format!(
                "no tensor for ({}, {})",
                c.mor_name(i / nm),
                c.mor_name(i % nm)
            )));
        }
        let m = MonoidalStructure::strict(&c, self.arity, unit, |x, y| t[x * no + y], |f, g| tm[f * nm + g])
            .map_err(|e| RefError::Invalid(e.to_string()))?;
        violations(m.validate())?;
        Ok(m)
    }

    fn load_monoidal_functor(&self, d: &MonoidalFunctorDoc) -> Resolve<LaxMonoidalFunctor> {
        let f = self.functor(&d.functor)?;
        let (ma, mb) = (self.monoidal(&d.source)?, self.monoidal(&d.target)?);
        let flavor = match d.flavor.as_str() {
            "strict" => None,
            "lax" => Some(Flavor::Lax),
            "pseudo" => Some(Flavor::Pseudo),
            "colax" => Some(Flavor::Colax),
            other => return Err(RefError::Invalid(format!("unknown flavor `{other}`"))),
        };
        let invalid = |e: hvdc_core::Error| RefError::Invalid(e.to_string());
        let lf = match flavor {
            None => {
                if d.unit.is_some() || !d.binary.is_empty() {
                    return Err(RefError::Invalid("strict functors carry no compositors".into()));
                }
                LaxMonoidalFunctor::strict(f, ma, mb).map_err(invalid)?
            }
            Some(flavor) => {
                let (a, c) = (f.source().clone(), f.target().clone());
                let no = a.num_objects();
                let mor = |g: &str| c.mor_index(g).ok_or_else(|| RefError::Invalid(format!("unknown morphism `{g}`")));
                let unit = mor(d.unit.as_deref().ok_or_else(|| RefError::Invalid("missing unit compositor".into()))?)?;
                let mut bin = vec![usize::MAX; no * no];
                for (x1, row) in &d.binary {
                    let i = a.object_index(x1).ok_or_else(|| RefError::Invalid(format!("unknown object `{x1}`")))?;
                    for (x2, g) in row {
                        let j = a.object_index(x2).ok_or_else(|| RefError::Invalid(format!("unknown object `{x2}`")))?;
                        bin[i * no + j] = mor(g)?;
                    }
                }
                if let Some(i) = bin.iter().position(|&g| g == usize::MAX) {
                    return Err(RefError::Invalid(format!(
                        "no binary compositor at ({}, {})",
                        a.object_name(i / no),
                        a.object_name(i % no)
                    )));
                }
                let colax = flavor == Flavor::Colax;
                let (fc, mac, mbc) = (f.clone(), ma.clone(), mb.clone());
                // higher compositors iterate the binary one on the left
                let comp = move |xs: &[Obj]| -> usize {
                    match xs.len() {
                        0 => unit,
                        1 => c.id(fc.on_obj(xs[0])),
                        n => {
                            let mut acc = bin[xs[0] * no + xs[1]];
                            for k in 2..n {
                                let prefix = mac.tensor(&xs[..k]);
                                let step = bin[prefix * no + xs[k]];
                                let widened = mbc.tensor_mor(&[acc, c.id(fc.on_obj(xs[k]))]);
                                acc = if colax { c.compose(widened, step) } else { c.compose(step, widened) };
                            }
                            acc
                        }
                    }
                };
                LaxMonoidalFunctor::new(f, ma, mb, flavor, comp).map_err(invalid)?
            }
        };
        violations(lf.validate())?;
        Ok(lf)
    }

    fn load_monoidal_profunctor(&self, d: &MonoidalProfunctorDoc) -> Resolve<MonoidalProfunctor> {
        let j = self.profunctor(&d.profunctor)?;
        let (ma, mb) = (self.monoidal(&d.source)?, self.monoidal(&d.target)?);
        if !same_category(j.source(), ma.base()) || !same_category(j.target(), mb.base()) {
            return Err(RefError::Invalid("profunctor and monoidal structures live on different categories".into()));
        }
        let (a, b) = (ma.base().clone(), mb.base().clone());
        let elem = |x: Obj, y: Obj, u: &str| {
            j.elems(x, y)
                .index_of(u)
                .ok_or_else(|| RefError::Invalid(format!("`{u}` is not an element of J({}, {})", a.object_name(x), b.object_name(y))))
        };
        let obj_a = |x: &str| a.object_index(x).ok_or_else(|| RefError::Invalid(format!("unknown object `{x}`")));
        let obj_b = |y: &str| b.object_index(y).ok_or_else(|| RefError::Invalid(format!("unknown object `{y}`")));
        let unit = elem(ma.unit(), mb.unit(), &d.unit)?;
        let mut bin: HashMap<[usize; 6], usize> = HashMap::new();
        for ((x1, y1, u1), (x2, y2, u2), v) in &d.binary {
            let (x1, y1, x2, y2) = (obj_a(x1)?, obj_b(y1)?, obj_a(x2)?, obj_b(y2)?);
            let (u1, u2) = (elem(x1, y1, u1)?, elem(x2, y2, u2)?);
            let v = elem(ma.tensor(&[x1, x2]), mb.tensor(&[y1, y2]), v)?;
            if bin.insert([x1, y1, u1, x2, y2, u2], v).is_some() {
                return Err(RefError::Invalid("duplicate binary structure entry".into()));
            }
        }
        for (x1, y1, x2, y2) in quad(a.num_objects(), b.num_objects()) {
            for u1 in 0..j.size(x1, y1) {
                for u2 in 0..j.size(x2, y2) {
                    if !bin.contains_key(&[x1, y1, u1, x2, y2, u2]) {
                        return Err(RefError::Invalid(format!(
                            "no binary structure entry for ({}, {}, {}) and ({}, {}, {})",
                            a.object_name(x1),
                            b.object_name(y1),
                            j.elems(x1, y1).atom(u1),
                            a.object_name(x2),
                            b.object_name(y2),
                            j.elems(x2, y2).atom(u2)
                        )));
                    }
                }
            }
        }
        let (mac, mbc) = (ma.clone(), mb.clone());
        let mp = MonoidalProfunctor::new(j.clone(), ma, mb, |xs, ys, us| match xs.len() {
            0 => unit,
            1 => us[0],
            n => {
                let (mut x, mut y, mut u) = (xs[0], ys[0], us[0]);
                for k in 1..n {
                    u = bin[&[x, y, u, xs[k], ys[k], us[k]]];
                    x = mac.tensor(&[x, xs[k]]);
                    y = mbc.tensor(&[y, ys[k]]);
                }
                u
            }
        })
        .map_err(|e| RefError::Invalid(e.to_string()))?;
        violations(mp.validate())?;
        Ok(mp)
    }

    fn load_cell(&self, d: &CellDoc) -> Resolve<Cell> {
        let src = d.source.iter().map(|n| self.profunctor(n)).collect::<Resolve<Vec<_>>>()?;
        let (f, g) = (self.functor(&d.left)?, self.functor(&d.right)?);
        let target = match &d.target {
            TargetDoc::Profunctor(k) => Target::Unary(self.profunctor(k)?),
            TargetDoc::Category(c) => Target::Nullary(self.category(c)?),
        };
        let frame = CellFrame::new(src, f, g, target).map_err(|e| RefError::Invalid(e.to_string()))?;
        let mut values = vec![usize::MAX; frame.positions()];
        for (objs, elems, v) in &d.components {
            let (p, dom) = locate(&frame, objs, elems).map_err(RefError::Invalid)?;
            let vi = dom
                .index_of(v)
                .ok_or_else(|| RefError::Invalid(format!("`{v}` is not a value at {}", frame.describe_position(p))))?;
            if values[p] != usize::MAX {
                return Err(RefError::Invalid(format!("component at {} given twice", frame.describe_position(p))));
            }
            values[p] = vi;
        }
        if let Some(p) = values.iter().position(|&v| v == usize::MAX) {
            return Err(RefError::Invalid(format!("no component at {}", frame.describe_position(p))));
        }
        let cell = Cell::new(frame, values).map_err(|e| RefError::Invalid(e.to_string()))?;
        violations(cell.validate())?;
        Ok(cell)
    }

    fn load_context(&self, d: &ContextDoc) -> Resolve<NamedContext> {
        Ok(NamedContext {
            profunctors: d.profunctors.iter().map(|n| self.profunctor(n)).collect::<Resolve<_>>()?,
            functors: d.functors.iter().map(|n| self.functor(n)).collect::<Resolve<_>>()?,
            path_len: d.path_len,
        })
    }
}

fn violations(vs: Vec<hvdc_core::Violation>) -> Resolve<()> {
    if vs.is_empty() {
        Ok(())
    } else {
        let shown: Vec<String> = vs.iter().take(8).map(|v| v.to_string()).collect();
        let more = if vs.len() > 8 { format!(" (and {} more)", vs.len() - 8) } else { String::new() };
        Err(RefError::Invalid(format!("{}{more}", shown.join("; "))))
    }
}

fn quad(na: usize, nb: usize) -> impl Iterator<Item = (Obj, Obj, Obj, Obj)> {
    (0..na).flat_map(move |x1| {
        (0..nb).flat_map(move |y1| (0..na).flat_map(move |x2| (0..nb).map(move |y2| (x1, y1, x2, y2))))
    })
}

/// The flat position of a named component and the set its value lives in.
fn locate<'a>(frame: &'a CellFrame, objs: &[String], elems: &[String]) -> Result<(usize, &'a FinSet), String> {
    let cats = frame.objects();
    if objs.len() != cats.len() || elems.len() != frame.arity() {
        return Err(format!("component ({}) has the wrong shape", objs.join(",")));
    }
    let xs = objs
        .iter()
        .zip(cats)
        .map(|(x, c)| c.object_index(x).ok_or_else(|| format!("unknown object `{x}`")))
        .collect::<Result<Vec<_>, _>>()?;
    let us = elems
        .iter()
        .enumerate()
        .map(|(i, u)| {
            frame.src()[i]
                .elems(xs[i], xs[i + 1])
                .index_of(u)
                .ok_or_else(|| format!("`{u}` is not an element at ({})", objs.join(",")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let dom = frame
        .target_profunctor()
        .elems(frame.left().on_obj(xs[0]), frame.right().on_obj(*xs.last().unwrap()));
    Ok((frame.position(&xs, &us), dom))
}

/// Loads a category, collecting every problem with its tables.
fn load_category(d: &CategoryDoc) -> Result<FinCategory, Vec<String>> {
    let mut msgs = Vec::new();
    let objects = match FinSet::new(d.objects.iter().cloned()) {
        Ok(s) => s,
        Err(e) => return Err(vec![e.to_string()]),
    };
    let mut morphisms = Vec::new();
    for (key, names) in &d.hom {
        match split_key(key, HOM_SEP) {
            Some((a, b)) => {
                for x in [a, b] {
                    if !objects.contains(x) {
                        msgs.push(format!("hom key `{key}` names unknown object `{x}`"));
                    }
                }
                morphisms.extend(names.iter().map(|n| (n.clone(), a.to_string(), b.to_string())));
            }
            None => msgs.push(format!("hom key `{key}` is not of the form `a{HOM_SEP}b`")),
        }
    }
    let mut comp = BTreeMap::new();
    for (key, h) in &d.comp {
        match split_key(key, COMP_SEP) {
            Some((g, f)) => {
                comp.insert((g.to_string(), f.to_string()), h.clone());
            }
            None => msgs.push(format!("composition key `{key}` is not of the form `g{COMP_SEP}f`")),
        }
    }
    if !msgs.is_empty() {
        return Err(msgs);
    }
    let c = FinCategory::from_owned_tables(objects, morphisms, &d.id, &comp).map_err(|e| vec![e.to_string()])?;
    let vs = c.validate();
    if vs.is_empty() {
        Ok(c)
    } else {
        Err(vs.into_iter().map(|v| v.to_string()).collect())
    }
}

pub fn export_category(c: &FinCategory) -> CategoryDoc {
    let mut hom: Map<Vec<String>> = BTreeMap::new();
    for (name, a, b) in c.named_morphisms() {
        hom.entry(format!("{a}{HOM_SEP}{b}")).or_default().push(name);
    }
    CategoryDoc {
        objects: c.objects().atoms().to_vec(),
        hom,
        comp: c
            .named_composition()
            .into_iter()
            .map(|((g, f), h)| (format!("{g}{COMP_SEP}{f}"), h))
            .collect(),
        id: c.named_identities(),
    }
}

pub fn export_functor(f: &FinFunctor, source: &str, target: &str) -> FunctorDoc {
    let (a, b) = (f.source(), f.target());
    FunctorDoc {
        source: source.into(),
        target: target.into(),
        objects: (0..a.num_objects())
            .map(|x| (a.object_name(x).to_string(), b.object_name(f.on_obj(x)).to_string()))
            .collect(),
        morphisms: (0..a.num_morphisms())
            .map(|m| (a.mor_name(m).to_string(), b.mor_name(f.on_mor(m)).to_string()))
            .collect(),
    }
}

pub fn export_transformation(t: &NatTransformation, source: &str, target: &str) -> TransformationDoc {
    let (a, c) = (t.source().source(), t.source().target());
    TransformationDoc {
        source: source.into(),
        target: target.into(),
        components: (0..a.num_objects())
            .map(|x| (a.object_name(x).to_string(), c.mor_name(t.component(x)).to_string()))
            .collect(),
    }
}

/// Element tables without empty sets and actions without identity entries.
pub fn export_profunctor(j: &Profunctor, source: &str, target: &str) -> ProfunctorDoc {
    let (a, b) = (j.source(), j.target());
    let mut elements: Map<Map<Vec<String>>> = BTreeMap::new();
    for ((x, y), atoms) in j.named_elems() {
        if !atoms.is_empty() {
            elements.entry(x).or_default().insert(y, atoms);
        }
    }
    let mut left: Map<Map<Map<String>>> = BTreeMap::new();
    for ((f, y, u), v) in j.named_lact() {
        if !a.is_identity(a.mor_index(&f).expect("own morphism")) {
            left.entry(f).or_default().entry(y).or_default().insert(u, v);
        }
    }
    let mut right: Map<Map<Map<String>>> = BTreeMap::new();
    for ((x, u, g), v) in j.named_ract() {
        if !b.is_identity(b.mor_index(&g).expect("own morphism")) {
            right.entry(x).or_default().entry(u).or_default().insert(g, v);
        }
    }
    ProfunctorDoc {
        source: source.into(),
        target: target.into(),
        elements,
        left,
        right,
    }
}

pub fn export_presheaf(p: &Presheaf, base: &str) -> PresheafDoc {
    let a = p.base();
    let mut elements = BTreeMap::new();
    let mut action: Map<Map<String>> = BTreeMap::new();
    for x in 0..a.num_objects() {
        if p.size(x) > 0 {
            elements.insert(a.object_name(x).to_string(), p.value(x).atoms().to_vec());
        }
    }
    for m in (0..a.num_morphisms()).filter(|&m| !a.is_identity(m)) {
        let (d, c) = (a.dom(m), a.cod(m));
        for u in 0..p.size(c) {
            let v = p.act(m, u);
            action
                .entry(a.mor_name(m).to_string())
                .or_default()
                .insert(p.value(c).atom(u).to_string(), p.value(d).atom(v).to_string());
        }
    }
    PresheafDoc {
        base: base.into(),
        elements,
        action,
    }
}

/// Only strict structures have a binary presentation.
pub fn export_monoidal(m: &MonoidalStructure, base: &str) -> Option<MonoidalDoc> {
    if !m.is_strict() || m.bound() < 2 {
        return None;
    }
    let c = m.base();
    let mut tensor: Map<Map<String>> = BTreeMap::new();
    for x in 0..c.num_objects() {
        for y in 0..c.num_objects() {
            tensor
                .entry(c.object_name(x).to_string())
                .or_default()
                .insert(c.object_name(y).to_string(), c.object_name(m.tensor(&[x, y])).to_string());
        }
    }
    let mut tensor_mor: Map<Map<String>> = BTreeMap::new();
    for f in 0..c.num_morphisms() {
        for g in 0..c.num_morphisms() {
            tensor_mor
                .entry(c.mor_name(f).to_string())
                .or_default()
                .insert(c.mor_name(g).to_string(), c.mor_name(m.tensor_mor(&[f, g])).to_string());
        }
    }
    Some(MonoidalDoc {
        base: base.into(),
        unit: c.object_name(m.unit()).to_string(),
        tensor,
        tensor_mor,
    })
}

pub fn export_monoidal_functor(f: &LaxMonoidalFunctor, functor: &str, source: &str, target: &str) -> MonoidalFunctorDoc {
    let (a, c) = (f.source().base(), f.target().base());
    let no = a.num_objects();
    let pairs: Vec<(Obj, Obj)> = (0..no).flat_map(|x| (0..no).map(move |y| (x, y))).collect();
    let strict = f.flavor() == Flavor::Pseudo
        && c.is_identity(f.compositor(&[]))
        && pairs.iter().all(|&(x, y)| c.is_identity(f.compositor(&[x, y])));
    let mut binary: Map<Map<String>> = BTreeMap::new();
    if !strict {
        for &(x, y) in &pairs {
            binary
                .entry(a.object_name(x).to_string())
                .or_default()
                .insert(a.object_name(y).to_string(), c.mor_name(f.compositor(&[x, y])).to_string());
        }
    }
    MonoidalFunctorDoc {
        functor: functor.into(),
        source: source.into(),
        target: target.into(),
        flavor: if strict { "strict".into() } else { f.flavor().to_string() },
        unit: (!strict).then(|| c.mor_name(f.compositor(&[])).to_string()),
        binary,
    }
}

pub fn export_monoidal_profunctor(j: &MonoidalProfunctor, profunctor: &str, source: &str, target: &str) -> MonoidalProfunctorDoc {
    let p = j.profunctor();
    let (a, b) = (p.source(), p.target());
    let (ma, mb) = (j.source(), j.target());
    let unit = p.elems(ma.unit(), mb.unit()).atom(j.structure(&[], &[], &[])).to_string();
    let mut binary = Vec::new();
    let name = |x: Obj, y: Obj, u: usize| -> Triple {
        (a.object_name(x).to_string(), b.object_name(y).to_string(), p.elems(x, y).atom(u).to_string())
    };
    for (x1, y1, x2, y2) in quad(a.num_objects(), b.num_objects()) {
        for u1 in 0..p.size(x1, y1) {
            for u2 in 0..p.size(x2, y2) {
                let v = j.structure(&[x1, x2], &[y1, y2], &[u1, u2]);
                let (x, y) = (ma.tensor(&[x1, x2]), mb.tensor(&[y1, y2]));
                binary.push((name(x1, y1, u1), name(x2, y2, u2), p.elems(x, y).atom(v).to_string()));
            }
        }
    }
    binary.sort();
    MonoidalProfunctorDoc {
        profunctor: profunctor.into(),
        source: source.into(),
        target: target.into(),
        unit,
        binary,
    }
}

/// Every component `[objects, elements, value]` in canonical order.
pub fn export_cell(c: &Cell, source: &[String], left: &str, right: &str, target: &TargetDoc) -> CellDoc {
    let fr = c.frame();
    let cats = fr.objects();
    let mut components = Vec::new();
    for xs in odometer(&cats.iter().map(|c| c.num_objects()).collect::<Vec<_>>()) {
        let sizes: Vec<usize> = fr.src().iter().enumerate().map(|(i, j)| j.size(xs[i], xs[i + 1])).collect();
        let dom = fr.target_profunctor().elems(fr.left().on_obj(xs[0]), fr.right().on_obj(*xs.last().unwrap()));
        for us in odometer(&sizes) {
            let objs = xs.iter().zip(cats).map(|(&x, c)| c.object_name(x).to_string()).collect();
            let elems = us
                .iter()
                .enumerate()
                .map(|(i, &u)| fr.src()[i].elems(xs[i], xs[i + 1]).atom(u).to_string())
                .collect();
            components.push((objs, elems, dom.atom(c.get(&xs, &us)).to_string()));
        }
    }
    CellDoc {
        source: source.to_vec(),
        left: left.into(),
        right: right.into(),
        target: target.clone(),
        components,
    }
}

/// All tuples below `sizes` in lexicographic order.
pub fn odometer(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if sizes.contains(&0) {
        return out;
    }
    let mut t = vec![0; sizes.len()];
    loop {
        out.push(t.clone());
        let mut i = sizes.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < sizes[i] {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Names core objects after the workspace entries they equal, adding fresh
/// entries to a self-contained document for the rest.
pub struct Exporter<'a> {
    ws: &'a Workspace,
    pub doc: Document,
    cats: Vec<(Arc<FinCategory>, String)>,
    profs: Vec<(Profunctor, String)>,
    functors: Vec<(FinFunctor, String)>,
}

impl<'a> Exporter<'a> {
    pub fn new(ws: &'a Workspace) -> Self {
        Exporter {
            ws,
            doc: Document::new(),
            cats: Vec::new(),
            profs: Vec::new(),
            functors: Vec::new(),
        }
    }

    fn fresh(taken: impl Fn(&str) -> bool, prefix: &str) -> String {
        (0..).map(|i| format!("{prefix}{i}")).find(|n| !taken(n)).expect("unbounded")
    }

    pub fn category(&mut self, c: &Arc<FinCategory>) -> String {
        if let Some((_, n)) = self.cats.iter().find(|(d, _)| same_category(c, d)) {
            return n.clone();
        }
        let name = match self.ws.categories.iter().find(|(_, d)| same_category(c, d)) {
            Some((n, _)) => n.clone(),
            None => Self::fresh(|n| self.ws.categories.contains_key(n) || self.doc.categories.contains_key(n), "category"),
        };
        self.doc.categories.insert(name.clone(), export_category(c));
        self.cats.push((c.clone(), name.clone()));
        name
    }

    pub fn profunctor(&mut self, j: &Profunctor) -> String {
        if let Some((_, n)) = self.profs.iter().find(|(k, _)| k == j) {
            return n.clone();
        }
        let name = match self.ws.profunctors.iter().find(|(_, k)| *k == j) {
            Some((n, _)) => n.clone(),
            None => Self::fresh(|n| self.ws.profunctors.contains_key(n) || self.doc.profunctors.contains_key(n), "profunctor"),
        };
        let (a, b) = (self.category(j.source()), self.category(j.target()));
        self.doc.profunctors.insert(name.clone(), export_profunctor(j, &a, &b));
        self.profs.push((j.clone(), name.clone()));
        name
    }

    pub fn functor(&mut self, f: &FinFunctor) -> String {
        if f.is_identity() {
            return format!("id({})", self.category(f.source()));
        }
        if let Some((_, n)) = self.functors.iter().find(|(g, _)| g == f) {
            return n.clone();
        }
        let name = match self.ws.functors.iter().find(|(_, g)| *g == f) {
            Some((n, _)) => n.clone(),
            None => Self::fresh(|n| self.ws.functors.contains_key(n) || self.doc.functors.contains_key(n), "functor"),
        };
        let (a, b) = (self.category(f.source()), self.category(f.target()));
        self.doc.functors.insert(name.clone(), export_functor(f, &a, &b));
        self.functors.push((f.clone(), name.clone()));
        name
    }

    pub fn presheaf(&mut self, name: &str, p: &Presheaf) {
        let base = self.category(p.base());
        self.doc.presheaves.insert(name.into(), export_presheaf(p, &base));
    }

    pub fn cell(&mut self, name: &str, c: &Cell) {
        let fr = c.frame();
        let src: Vec<String> = fr.src().iter().map(|j| self.profunctor(j)).collect();
        let (l, r) = (self.functor(fr.left()), self.functor(fr.right()));
        let target = match fr.target() {
            Target::Unary(k) => TargetDoc::Profunctor(self.profunctor(k)),
            Target::Nullary(cat) => TargetDoc::Category(self.category(cat)),
        };
        let d = export_cell(c, &src, &l, &r, &target);
        self.doc.cells.insert(name.into(), d);
    }

    /// A context entry listing the given verticals.
    pub fn verticals(&mut self, name: &str, fs: &[&FinFunctor]) {
        let functors = fs.iter().map(|f| self.functor(f)).collect();
        self.doc.contexts.insert(
            name.into(),
            ContextDoc {
                profunctors: Vec::new(),
                functors,
                path_len: None,
            },
        );
    }
}

impl Workspace {
    /// Resolves and validates every entry of a document.
    pub fn from_document(doc: &Document, source: &str, arity: usize) -> Result<Workspace, CliError> {
        let loader = Loader {
            ws: Workspace {
                doc: Document::new(),
                ..Default::default()
            },
            problems: Vec::new(),
            broken: Default::default(),
            source: source.into(),
            arity,
        };
        loader.run(doc).map_err(CliError::Invalid)
    }

    pub fn parse(text: &str, source: &str, arity: usize) -> Result<Workspace, CliError> {
        Workspace::from_document(&parse_document(text, source)?, source, arity)
    }

    pub fn load(path: &Path, arity: usize) -> Result<Workspace, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Workspace::parse(&text, &path.display().to_string(), arity)
    }

    /// The canonical serialization; loading it yields the same workspace.
    pub fn save(&self) -> String {
        self.doc.to_json()
    }

    pub fn len(&self) -> usize {
        self.provenance.len()
    }

    pub fn is_empty(&self) -> bool {
        self.provenance.is_empty()
    }

    pub fn category(&self, name: &str) -> Result<&Arc<FinCategory>, CliError> {
        self.categories.get(name).ok_or_else(|| unknown("category", name))
    }

    pub fn functor(&self, name: &str) -> Result<FinFunctor, CliError> {
        match identity_ref(name) {
            Some(c) => Ok(FinFunctor::identity(self.category(c)?)),
            None => self.functors.get(name).cloned().ok_or_else(|| unknown("functor", name)),
        }
    }

    pub fn profunctor(&self, name: &str) -> Result<&Profunctor, CliError> {
        self.profunctors.get(name).ok_or_else(|| unknown("profunctor", name))
    }

    pub fn presheaf(&self, name: &str) -> Result<&Presheaf, CliError> {
        self.presheaves.get(name).ok_or_else(|| unknown("presheaf", name))
    }

    pub fn monoidal(&self, name: &str) -> Result<&MonoidalStructure, CliError> {
        self.monoidal.get(name).ok_or_else(|| unknown("monoidal structure", name))
    }

    pub fn monoidal_functor(&self, name: &str) -> Result<&LaxMonoidalFunctor, CliError> {
        self.monoidal_functors.get(name).ok_or_else(|| unknown("monoidal functor", name))
    }

    pub fn monoidal_profunctor(&self, name: &str) -> Result<&MonoidalProfunctor, CliError> {
        self.monoidal_profunctors.get(name).ok_or_else(|| unknown("monoidal profunctor", name))
    }

    pub fn cell(&self, name: &str) -> Result<&Cell, CliError> {
        self.cells.get(name).ok_or_else(|| unknown("cell", name))
    }

    /// Whether any entry of any kind carries this name.
    pub fn has_entry(&self, name: &str) -> bool {
        self.provenance.keys().any(|(_, n)| n == name)
    }

    /// The default context: every profunctor and non-identity functor.
    pub fn default_context(&self, path_len: usize) -> Context {
        Context::new(
            self.profunctors.values().cloned().collect(),
            self.functors.values().cloned().collect(),
            path_len,
        )
    }
}

fn unknown(kind: &str, name: &str) -> CliError {
    CliError::Usage(format!("unknown {kind} `{name}`"))
}

/// Parses a document, reporting syntax and schema errors with their position.
pub fn parse_document(text: &str, source: &str) -> Result<Document, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        file: source.into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

struct Builder {
    doc: Document,
}

impl Builder {
    fn new() -> Self {
        Builder { doc: Document::new() }
    }

    fn category(&mut self, name: &str, c: &FinCategory) {
        self.doc.categories.insert(name.into(), export_category(c));
    }

    fn profunctor(&mut self, name: &str, j: &Profunctor, a: &str, b: &str) {
        self.doc.profunctors.insert(name.into(), export_profunctor(j, a, b));
    }

    fn yoneda(&mut self, c: &Arc<FinCategory>, base: &str) {
        for x in 0..c.num_objects() {
            let p = yoneda_object(c, x).expect("object in range");
            self.doc.presheaves.insert(format!("y{}", c.object_name(x)), export_presheaf(&p, base));
        }
    }
}

impl Builder {
    /// Strict monoidal functors between the small bundled structures, with
    /// their companions and conjoints as monoidal profunctors.
    fn strict_functors(&mut self, bases: &BTreeMap<&str, String>, arity: usize) {
        let small = ["trivial", "z2", "arrow_max", "arrow_min"];
        for na in small {
            for nb in small {
                if na == nb && na != "arrow_max" {
                    continue;
                }
                let (ma, mb) = (corpus::monoidal_structure(na, arity).expect("bundled"), corpus::monoidal_structure(nb, arity).expect("bundled"));
                let (ba, bb) = (&bases[na], &bases[nb]);
                for (i, f) in corpus::strict_monoidal_functors(&ma, &mb).into_iter().take(2).enumerate() {
                    let name = format!("{na}→{nb}#{i}");
                    self.doc.functors.insert(name.clone(), export_functor(f.functor(), ba, bb));
                    self.doc.monoidal_functors.insert(name.clone(), export_monoidal_functor(&f, &name, na, nb));
                    let reps = [
                        (format!("companion({name})"), MonoidalProfunctor::companion(&f), (ba, na), (bb, nb)),
                        (format!("conjoint({name})"), MonoidalProfunctor::conjoint(&f), (bb, nb), (ba, na)),
                    ];
                    for (rn, rep, (s, ms), (t, mt)) in reps {
                        let Ok(rep) = rep else { continue };
                        self.profunctor(&rn, rep.profunctor(), s, t);
                        let doc = export_monoidal_profunctor(&rep, &rn, ms, mt);
                        self.doc.monoidal_profunctors.insert(rn, doc);
                    }
                }
            }
        }
    }

    /// `top_only: 𝟙 ⇸ (0 ≤ 1, min)` is empty over 0, and `top` picks 1 in
    /// `(0 ≤ 1, max)` with unit compositor `0 → 1`. The binary tensor does not
    /// preserve the extension, so lifting along them is declined.
    fn declining_lift(&mut self, arity: usize) {
        let one = Arc::new(hvdc_core::category::terminal());
        let arrow = corpus::category("walking_arrow").expect("bundled");
        let trivial = corpus::monoidal_structure("trivial", arity).expect("bundled");
        let (min, max) = (
            corpus::monoidal_structure("arrow_min", arity).expect("bundled"),
            corpus::monoidal_structure("arrow_max", arity).expect("bundled"),
        );
        let jp = Profunctor::from_fn(
            trivial.base().clone(),
            min.base().clone(),
            vec![FinSet::numbered("u", 0), FinSet::numbered("u", 1)],
            |_, _, u| u,
            |_, u, _| u,
        );
        let j = MonoidalProfunctor::new(jp, trivial.clone(), min, |_, _, _| 0).expect("single-valued structure");
        self.profunctor("top_only", j.profunctor(), "terminal", "walking_arrow");
        let doc = export_monoidal_profunctor(&j, "top_only", "trivial", "arrow_min");
        self.doc.monoidal_profunctors.insert("top_only".into(), doc);
        let top = FinFunctor::constant(&one, &arrow, 1);
        let mb = max.base().clone();
        let d = LaxMonoidalFunctor::new(FinFunctor::constant(trivial.base(), max.base(), 1), trivial, max, Flavor::Lax, |xs| {
            mb.hom(if xs.is_empty() { 0 } else { 1 }, 1).start
        })
        .expect("tabulated compositors");
        self.doc.functors.insert("top".into(), export_functor(&top, "terminal", "walking_arrow"));
        self.doc.monoidal_functors.insert("top".into(), export_monoidal_functor(&d, "top", "trivial", "arrow_max"));
    }
}

/// The document of a bundled workspace.
pub fn bundled_document(name: &str, arity: usize) -> Option<Document> {
    let mut b = Builder::new();
    match name {
        "walking_arrow" => {
            let c = corpus::category("walking_arrow").expect("bundled");
            b.category("walking_arrow", &c);
            b.profunctor("hom", &Profunctor::hom(&c), "walking_arrow", "walking_arrow");
            b.yoneda(&c, "walking_arrow");
            let one = c.object_index("1").expect("object 1");
            let k = FinFunctor::constant(&c, &c, one);
            b.doc.functors.insert("const1".into(), export_functor(&k, "walking_arrow", "walking_arrow"));
            // every arrow goes to id_1: a cell that forgets the hom-sets, hence not cartesian
            let frame = CellFrame::new(vec![Profunctor::hom(&c)], k.clone(), k, Target::Unary(Profunctor::hom(&c)))
                .expect("well-formed frame");
            let cell = Cell::from_fn(frame, |_, _| 0).expect("single-valued cell");
            let hom = vec!["hom".to_string()];
            let target = TargetDoc::Profunctor("hom".into());
            b.doc.cells.insert("id_cell_of_noniso".into(), export_cell(&cell, &hom, "const1", "const1", &target));
        }
        "z2" => {
            let m = corpus::monoidal_structure("z2", arity)?;
            b.category("z2", m.base());
            b.doc.monoidal.insert("z2".into(), export_monoidal(&m, "z2")?);
            b.yoneda(m.base(), "z2");
            let hom = MonoidalProfunctor::hom(&m);
            b.profunctor("hom", hom.profunctor(), "z2", "z2");
            b.doc.monoidal_profunctors.insert("hom".into(), export_monoidal_profunctor(&hom, "hom", "z2", "z2"));
        }
        "corpus" => {
            let cats = corpus::categories();
            let mut bases = BTreeMap::new();
            for (n, c) in &cats {
                b.category(n, c);
                b.profunctor(&format!("hom({n})"), &Profunctor::hom(c), n, n);
            }
            for (n, m) in corpus::monoidal_structures(arity) {
                let base = match cats.iter().find(|(_, c)| same_category(c, m.base())) {
                    Some((cn, _)) => cn.to_string(),
                    None => {
                        let cn = format!("{n}.base");
                        b.category(&cn, m.base());
                        b.profunctor(&format!("hom({cn})"), &Profunctor::hom(m.base()), &cn, &cn);
                        cn
                    }
                };
                b.doc.monoidal.insert(n.into(), export_monoidal(&m, &base)?);
                let hom = MonoidalProfunctor::hom(&m);
                let doc = export_monoidal_profunctor(&hom, &format!("hom({base})"), n, n);
                b.doc.monoidal_profunctors.insert(format!("hom({n})"), doc);
                bases.insert(n, base);
            }
            b.strict_functors(&bases, arity);
            b.declining_lift(arity);
        }
        _ => return None,
    }
    Some(b.doc)
}

pub fn bundled(name: &str, arity: usize) -> Option<Result<Workspace, CliError>> {
    bundled_document(name, arity).map(|d| Workspace::from_document(&d, &format!("bundled:{name}"), arity))
}
