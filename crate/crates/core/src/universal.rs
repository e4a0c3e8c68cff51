//! Decision procedures for universal properties of cells: cartesian cells,
//! (weakly) cocartesian paths, pointwise cocartesian cells, cells defining
//! left Kan extensions and weighted colimits.
//!
//! Properties quantified over all test frames are checked against a
//! [`Context`]: its profunctors (paths of length up to `max_path_len`) and its
//! verticals (plus identities). Such verdicts are [`Verdict::HoldsBounded`].
//! Where the quantified data is finite the verdict is [`Verdict::HoldsExact`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::category::{same_category, terminal, FinCategory};
use crate::cell::{horizontal_compose, vertical_compose, Cell, CellFrame, Target};
use crate::enumerate::for_each_cell;
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::functor::{enumerate_functors, FinFunctor};
use crate::profunctor::Profunctor;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    HoldsExact,
    HoldsBounded { path_len: usize },
    Fails,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::Fails)
    }

    /// The weaker of two holding verdicts; `Fails` dominates.
    pub fn meet(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fails, _) | (_, Verdict::Fails) => Verdict::Fails,
            (Verdict::HoldsBounded { path_len: a }, Verdict::HoldsBounded { path_len: b }) => {
                Verdict::HoldsBounded { path_len: a.min(b) }
            }
            (b @ Verdict::HoldsBounded { .. }, _) | (_, b @ Verdict::HoldsBounded { .. }) => b,
            _ => Verdict::HoldsExact,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::HoldsExact => write!(f, "holds_exact"),
            Verdict::HoldsBounded { path_len } => write!(f, "holds_bounded({path_len})"),
            Verdict::Fails => write!(f, "fails"),
        }
    }
}

/// Outcome of a check. A failing result carries a counterexample cell with
/// zero or at least two factorizations, and the verticals it was built over.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub verdict: Verdict,
    pub witness: Option<Cell>,
    pub witness_verticals: Option<(FinFunctor, FinFunctor)>,
    pub detail: String,
}

impl CheckResult {
    pub fn exact(detail: impl Into<String>) -> Self {
        CheckResult {
            verdict: Verdict::HoldsExact,
            witness: None,
            witness_verticals: None,
            detail: detail.into(),
        }
    }

    pub fn bounded(path_len: usize, detail: impl Into<String>) -> Self {
        CheckResult {
            verdict: Verdict::HoldsBounded { path_len },
            witness: None,
            witness_verticals: None,
            detail: detail.into(),
        }
    }

    pub fn fails(witness: Option<Cell>, verticals: Option<(FinFunctor, FinFunctor)>, detail: impl Into<String>) -> Self {
        CheckResult {
            verdict: Verdict::Fails,
            witness,
            witness_verticals: verticals,
            detail: detail.into(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }

    fn with_verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = verdict;
        self
    }
}

/// Ambient data bounding the universally quantified test frames.
#[derive(Debug, Clone)]
pub struct Context {
    pub profunctors: Vec<Profunctor>,
    pub verticals: Vec<FinFunctor>,
    pub max_path_len: usize,
}

pub const DEFAULT_PATH_LEN: usize = 2;

impl Context {
    pub fn new(profunctors: Vec<Profunctor>, verticals: Vec<FinFunctor>, max_path_len: usize) -> Self {
        let mut ctx = Context {
            profunctors: Vec::new(),
            verticals: Vec::new(),
            max_path_len,
        };
        for j in profunctors {
            ctx.add_profunctor(j);
        }
        for f in verticals {
            ctx.add_vertical(f);
        }
        ctx
    }

    /// The context spanned by the boundaries of the given cells.
    pub fn ambient(cells: &[&Cell], max_path_len: usize) -> Self {
        let mut ctx = Context::new(Vec::new(), Vec::new(), max_path_len);
        for c in cells {
            let fr = c.frame();
            for j in fr.src() {
                ctx.add_profunctor(j.clone());
            }
            if let Target::Unary(k) = fr.target() {
                ctx.add_profunctor(k.clone());
            }
            ctx.add_vertical(fr.left().clone());
            ctx.add_vertical(fr.right().clone());
        }
        ctx
    }

    pub fn add_profunctor(&mut self, j: Profunctor) {
        if !self.profunctors.contains(&j) {
            self.profunctors.push(j);
        }
    }

    /// Adds a vertical; identities are always implicit and are skipped.
    pub fn add_vertical(&mut self, f: FinFunctor) {
        if !f.is_identity() && !self.verticals.contains(&f) {
            self.verticals.push(f);
        }
    }

    /// `id_c` followed by the context verticals landing in `c`.
    pub fn verticals_into(&self, c: &Arc<FinCategory>) -> Vec<FinFunctor> {
        std::iter::once(FinFunctor::identity(c))
            .chain(self.verticals.iter().filter(|f| same_category(f.target(), c)).cloned())
            .collect()
    }

    /// `id_c` followed by the context verticals leaving `c`.
    pub fn verticals_out_of(&self, c: &Arc<FinCategory>) -> Vec<FinFunctor> {
        std::iter::once(FinFunctor::identity(c))
            .chain(self.verticals.iter().filter(|f| same_category(f.source(), c)).cloned())
            .collect()
    }

    /// Composable paths of context profunctors starting at `x`, of length `min..=max`.
    pub fn paths_from(&self, x: &Arc<FinCategory>, min: usize, max: usize) -> Vec<Vec<Profunctor>> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<Profunctor>> = vec![Vec::new()];
        while let Some(p) = stack.pop() {
            if p.len() >= min {
                out.push(p.clone());
            }
            if p.len() == max {
                continue;
            }
            let end = p.last().map(|j| j.target().clone()).unwrap_or_else(|| x.clone());
            for j in self.profunctors.iter().rev() {
                if same_category(j.source(), &end) {
                    let mut q = p.clone();
                    q.push(j.clone());
                    stack.push(q);
                }
            }
        }
        out.sort_by_key(|p| p.len());
        out
    }

    /// Unary targets from context profunctors `e ⇸ f`, plus the nullary target when `e = f`.
    fn targets(&self, e: &Arc<FinCategory>, f: &Arc<FinCategory>) -> Vec<Target> {
        let mut out: Vec<Target> = self
            .profunctors
            .iter()
            .filter(|k| same_category(k.source(), e) && same_category(k.target(), f))
            .map(|k| Target::Unary(k.clone()))
            .collect();
        if same_category(e, f) {
            out.push(Target::Nullary(e.clone()));
        }
        out
    }
}

impl Default for Context {
    fn default() -> Self {
        Context::new(Vec::new(), Vec::new(), DEFAULT_PATH_LEN)
    }
}

/// How a map between two sets of cells fails to be bijective.
enum Defect {
    Collision(Cell),
    Missed(Cell),
}

/// Checks that `map` is a bijection from the cells on `domain` to the cells on
/// `codomain`: injective on the enumerated domain and hitting every codomain cell.
fn bijection_defect<F>(domain: &Arc<CellFrame>, codomain: &Arc<CellFrame>, mut map: F) -> Result<Option<Defect>>
where
    F: FnMut(&Cell) -> Result<Cell>,
{
    let mut image: HashMap<Vec<usize>, ()> = HashMap::new();
    let mut err = None;
    let mut collision = None;
    for_each_cell(domain, |phi| match map(&phi) {
        Ok(chi) => {
            if image.insert(chi.values().to_vec(), ()).is_some() {
                collision = Some(chi);
                false
            } else {
                true
            }
        }
        Err(e) => {
            err = Some(e);
            false
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    if let Some(c) = collision {
        return Ok(Some(Defect::Collision(c)));
    }
    let mut missed = None;
    for_each_cell(codomain, |chi| {
        if image.contains_key(chi.values()) {
            true
        } else {
            missed = Some(chi);
            false
        }
    })?;
    Ok(missed.map(Defect::Missed))
}

fn defect_result(d: Defect, verticals: (FinFunctor, FinFunctor), what: &str) -> CheckResult {
    match d {
        Defect::Collision(c) => CheckResult::fails(Some(c), Some(verticals), format!("{what}: a cell with two factorizations")),
        Defect::Missed(c) => CheckResult::fails(Some(c), Some(verticals), format!("{what}: a cell with no factorization")),
    }
}

/// The target a factorization through `psi` lands in: the source profunctor of
/// `psi`, or its source category when `psi` has an empty source.
fn source_as_target(psi: &Cell) -> Result<Target> {
    let fr = psi.frame();
    match fr.arity() {
        0 => Ok(Target::Nullary(fr.objects()[0].clone())),
        1 => Ok(Target::Unary(fr.src()[0].clone())),
        n => Err(Error::Precondition(format!("cartesian cells have at most one source profunctor, got {n}"))),
    }
}

/// All cells `φ` over `(χ's source, h, k)` with `ψ ∘ (φ) = χ`.
pub fn factor_through(chi: &Cell, psi: &Cell, h: &FinFunctor, k: &FinFunctor) -> Result<Vec<Cell>> {
    let cf = chi.frame();
    let pf = psi.frame();
    if h.then(pf.left())? != *cf.left() || k.then(pf.right())? != *cf.right() || cf.target() != pf.target() {
        return Err(Error::FrameMismatch("χ does not lie over ψ along (h, k)".into()));
    }
    let frame = CellFrame::new(cf.src().to_vec(), h.clone(), k.clone(), source_as_target(psi)?)?;
    let mut out = Vec::new();
    let mut err = None;
    for_each_cell(&frame, |phi| {
        match vertical_compose(psi, &[phi.clone()]) {
            Ok(c) if c == *chi => out.push(phi),
            Ok(_) => {}
            Err(e) => {
                err = Some(e);
                return false;
            }
        }
        true
    })?;
    err.map_or(Ok(out), Err)
}

/// All cells `ψ'` over `(targets of φs, h, k)` with `ψ' ∘ φs = χ`.
pub fn factor_after(chi: &Cell, phis: &[Cell], h: &FinFunctor, k: &FinFunctor) -> Result<Vec<Cell>> {
    let src = unary_targets(phis)?;
    let frame = CellFrame::new(src, h.clone(), k.clone(), chi.frame().target().clone())?;
    let mut out = Vec::new();
    let mut err = None;
    for_each_cell(&frame, |psi| {
        match vertical_compose(&psi, phis) {
            Ok(c) if c == *chi => out.push(psi),
            Ok(_) => {}
            Err(e) => {
                err = Some(e);
                return false;
            }
        }
        true
    })?;
    err.map_or(Ok(out), Err)
}

fn unary_targets(phis: &[Cell]) -> Result<Vec<Profunctor>> {
    phis.iter()
        .map(|p| match p.frame().target() {
            Target::Unary(k) => Ok(k.clone()),
            Target::Nullary(_) => Err(Error::Precondition("paths of unary cells only".into())),
        })
        .collect()
}

/// Whether every cell `χ: H ⇒ K` over `(f ∘ h, g ∘ k)` factors uniquely
/// through `ψ: J ⇒ K`, for `h`, `k` from the context and paths `H` of length
/// up to the bound.
pub fn is_cartesian(psi: &Cell, ctx: &Context) -> Result<CheckResult> {
    let pf = psi.frame();
    let tgt = source_as_target(psi)?;
    let (a0, an) = (pf.objects()[0].clone(), pf.objects().last().unwrap().clone());
    let mut frames = 0usize;
    for h in ctx.verticals_into(&a0) {
        for path in ctx.paths_from(h.source(), 0, ctx.max_path_len) {
            let end = path.last().map(|j| j.target().clone()).unwrap_or_else(|| h.source().clone());
            for k in ctx.verticals_into(&an) {
                if !same_category(k.source(), &end) {
                    continue;
                }
                let dom = CellFrame::new(path.clone(), h.clone(), k.clone(), tgt.clone())?;
                let cod = CellFrame::new(path.clone(), h.then(pf.left())?, k.then(pf.right())?, pf.target().clone())?;
                frames += 1;
                if let Some(d) = bijection_defect(&dom, &cod, |phi| vertical_compose(psi, &[phi.clone()]))? {
                    return Ok(defect_result(d, (h, k), &format!("path of length {}", path.len())));
                }
            }
        }
    }
    Ok(CheckResult::bounded(ctx.max_path_len, format!("{frames} test frames factor uniquely")))
}

fn check_path_shape(phis: &[Cell]) -> Result<()> {
    if phis.is_empty() {
        return Err(Error::Precondition("empty path of cells".into()));
    }
    let ks = unary_targets(phis)?;
    for w in phis.windows(2) {
        if w[0].frame().right() != w[1].frame().left() {
            return Err(Error::BoundaryMismatch("adjacent cells do not share their vertical".into()));
        }
    }
    if !crate::profunctor::is_composable(&ks) {
        return Err(Error::BoundaryMismatch("targets do not form a path".into()));
    }
    Ok(())
}

/// Whether every cell out of the concatenated source path over `(h ∘ f0, k ∘ fn)`
/// factors uniquely through the path `φs`, for context `h`, `k` and targets.
pub fn is_weakly_cocartesian_path(phis: &[Cell], ctx: &Context) -> Result<CheckResult> {
    check_path_shape(phis)?;
    let ks = unary_targets(phis)?;
    let src: Vec<Profunctor> = phis.iter().flat_map(|p| p.frame().src().iter().cloned()).collect();
    let f0 = phis[0].frame().left().clone();
    let fnn = phis.last().unwrap().frame().right().clone();
    let (c0, cn) = (ks[0].source().clone(), ks.last().unwrap().target().clone());
    let mut frames = 0usize;
    for h in ctx.verticals_out_of(&c0) {
        for k in ctx.verticals_out_of(&cn) {
            for l in ctx.targets(h.target(), k.target()) {
                let dom = CellFrame::new(ks.clone(), h.clone(), k.clone(), l.clone())?;
                let cod = CellFrame::new(src.clone(), f0.then(&h)?, fnn.then(&k)?, l)?;
                frames += 1;
                if let Some(d) = bijection_defect(&dom, &cod, |psi| vertical_compose(psi, phis))? {
                    return Ok(defect_result(d, (h, k), "weak cocartesianness"));
                }
            }
        }
    }
    Ok(CheckResult::bounded(ctx.max_path_len, format!("{frames} test frames factor uniquely")))
}

pub fn is_weakly_cocartesian(phi: &Cell, ctx: &Context) -> Result<CheckResult> {
    is_weakly_cocartesian_path(std::slice::from_ref(phi), ctx)
}

/// Weak cocartesianness plus the padded paths `(cart, φs)`, `(φs, cart)` and
/// `(cart, φs, cart)`, where the cartesian cells define `J'(id, f0)` and
/// `J''(fn, id)` for context profunctors `J'`, `J''`. The restrictions always
/// exist for profunctors between finite categories.
pub fn is_cocartesian_path(phis: &[Cell], ctx: &Context) -> Result<CheckResult> {
    let weak = is_weakly_cocartesian_path(phis, ctx)?;
    if !weak.holds() {
        return Ok(weak);
    }
    let ks = unary_targets(phis)?;
    let f0 = phis[0].frame().left().clone();
    let fnn = phis.last().unwrap().frame().right().clone();
    let (c0, cn) = (ks[0].source().clone(), ks.last().unwrap().target().clone());
    let left_pads: Vec<Option<Cell>> = std::iter::once(Ok(None))
        .chain(ctx.profunctors.iter().filter(|j| same_category(j.target(), &c0)).map(|j| {
            crate::construct::restrict(j, &FinFunctor::identity(j.source()), &f0).map(|r| Some(r.cartesian_cell))
        }))
        .collect::<Result<_>>()?;
    let right_pads: Vec<Option<Cell>> = std::iter::once(Ok(None))
        .chain(ctx.profunctors.iter().filter(|j| same_category(j.source(), &cn)).map(|j| {
            crate::construct::restrict(j, &fnn, &FinFunctor::identity(j.target())).map(|r| Some(r.cartesian_cell))
        }))
        .collect::<Result<_>>()?;
    let mut padded = 0usize;
    for l in &left_pads {
        for r in &right_pads {
            if l.is_none() && r.is_none() {
                continue;
            }
            let path: Vec<Cell> = l.iter().cloned().chain(phis.iter().cloned()).chain(r.iter().cloned()).collect();
            padded += 1;
            let res = is_weakly_cocartesian_path(&path, ctx)?;
            if !res.holds() {
                return Ok(CheckResult {
                    detail: format!("padded path: {}", res.detail),
                    ..res
                });
            }
        }
    }
    Ok(CheckResult::bounded(
        ctx.max_path_len,
        format!("{}; {padded} padded paths weakly cocartesian", weak.detail),
    ))
}

/// The restriction of a cell `φ: (J1, ..., Jn) ⇒ K` with identity right
/// vertical along `f: B → An`: the factorization
/// `φ': (J1, ..., Jn(id, f)) ⇒ K(id, f)` with components `φ(…, f b)`.
pub fn restrict_right(phi: &Cell, f: &FinFunctor) -> Result<Cell> {
    let fr = phi.frame();
    let n = fr.arity();
    let Target::Unary(k) = fr.target() else {
        return Err(Error::Precondition("unary target required".into()));
    };
    if n == 0 || !fr.right().is_identity() {
        return Err(Error::Precondition("non-empty source and identity right vertical required".into()));
    }
    let mut src = fr.src().to_vec();
    src[n - 1] = src[n - 1].restricted(&FinFunctor::identity(src[n - 1].source()), f)?;
    let kf = k.restricted(&FinFunctor::identity(k.source()), f)?;
    let frame = CellFrame::new(src, fr.left().clone(), FinFunctor::identity(f.source()), Target::Unary(kf))?;
    let mut objs = Vec::new();
    Cell::from_fn(frame, |o, e| {
        objs.clear();
        objs.extend_from_slice(o);
        objs[n] = f.on_obj(o[n]);
        phi.get(&objs, e)
    })
}

/// Mirror of [`restrict_right`] along `f: B → A0` on the left, for identity left vertical.
pub fn restrict_left(phi: &Cell, f: &FinFunctor) -> Result<Cell> {
    let fr = phi.frame();
    let n = fr.arity();
    let Target::Unary(k) = fr.target() else {
        return Err(Error::Precondition("unary target required".into()));
    };
    if n == 0 || !fr.left().is_identity() {
        return Err(Error::Precondition("non-empty source and identity left vertical required".into()));
    }
    let mut src = fr.src().to_vec();
    src[0] = src[0].restricted(f, &FinFunctor::identity(src[0].target()))?;
    let kf = k.restricted(f, &FinFunctor::identity(k.target()))?;
    let frame = CellFrame::new(src, FinFunctor::identity(f.source()), fr.right().clone(), Target::Unary(kf))?;
    let mut objs = Vec::new();
    Cell::from_fn(frame, |o, e| {
        objs.clear();
        objs.extend_from_slice(o);
        objs[0] = f.on_obj(o[0]);
        phi.get(&objs, e)
    })
}

/// Object picks `1 → c`, one per object.
pub fn object_picks(c: &Arc<FinCategory>) -> Vec<FinFunctor> {
    let one = Arc::new(terminal());
    (0..c.num_objects()).map(|x| FinFunctor::constant(&one, c, x)).collect()
}

/// Right pointwise cocartesianness: for every context vertical and object pick
/// `f` into the last object of the source path, the restricted cell along
/// `Jn(id, f)` is cocartesian. When the left vertical is an identity as well,
/// the mirror condition is checked too.
pub fn is_pointwise_cocartesian(phi: &Cell, ctx: &Context) -> Result<CheckResult> {
    let fr = phi.frame();
    if fr.arity() == 0 || fr.is_nullary() || !fr.right().is_identity() {
        return Err(Error::Precondition(
            "pointwise cocartesianness needs a unary cell with non-empty source and identity right vertical".into(),
        ));
    }
    let an = fr.objects().last().unwrap().clone();
    let mut fs = ctx.verticals_into(&an);
    fs.extend(object_picks(&an));
    let mut count = 0usize;
    for f in &fs {
        count += 1;
        let res = is_cocartesian_path(&[restrict_right(phi, f)?], ctx)?;
        if !res.holds() {
            return Ok(CheckResult {
                detail: format!("restriction along a functor into the right end: {}", res.detail),
                ..res
            });
        }
    }
    if fr.left().is_identity() {
        let a0 = fr.objects()[0].clone();
        let mut gs = ctx.verticals_into(&a0);
        gs.extend(object_picks(&a0));
        for g in &gs {
            count += 1;
            let res = is_cocartesian_path(&[restrict_left(phi, g)?], ctx)?;
            if !res.holds() {
                return Ok(CheckResult {
                    detail: format!("restriction along a functor into the left end: {}", res.detail),
                    ..res
                });
            }
        }
    }
    Ok(CheckResult::bounded(ctx.max_path_len, format!("{count} restrictions cocartesian")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KanMode {
    Weak,
    Full,
    Pointwise,
}

fn kan_shape(eta: &Cell) -> Result<Arc<FinCategory>> {
    match eta.frame().target() {
        Target::Nullary(m) => Ok(m.clone()),
        Target::Unary(_) => Err(Error::Precondition("Kan extension cells are nullary".into())),
    }
}

/// Weak universality: every nullary `χ: J ⇒ M` over `(d, k)` equals `η ⋆ φ'`
/// for exactly one vertical cell `φ': l ⇒ k`, for all functors `k`.
fn weak_kan(eta: &Cell, m: &Arc<FinCategory>) -> Result<CheckResult> {
    let fr = eta.frame();
    let an = fr.objects().last().unwrap().clone();
    let l = fr.right().clone();
    let ks = enumerate_functors(&an, m);
    for k in &ks {
        let dom = CellFrame::new(vec![], l.clone(), k.clone(), Target::Nullary(m.clone()))?;
        let cod = CellFrame::new(fr.src().to_vec(), fr.left().clone(), k.clone(), Target::Nullary(m.clone()))?;
        if let Some(d) = bijection_defect(&dom, &cod, |v| horizontal_compose(eta, v))? {
            return Ok(defect_result(d, (fr.left().clone(), k.clone()), "weak left Kan extension"));
        }
    }
    Ok(CheckResult::exact(format!("all {} functors into the target factor uniquely", ks.len())))
}

/// Universality against extension paths `H` of length `1..=L` from the context.
fn full_kan(eta: &Cell, m: &Arc<FinCategory>, ctx: &Context) -> Result<CheckResult> {
    let weak = weak_kan(eta, m)?;
    if !weak.holds() {
        return Ok(weak);
    }
    let fr = eta.frame();
    let an = fr.objects().last().unwrap().clone();
    let l = fr.right().clone();
    let mut frames = 0usize;
    for path in ctx.paths_from(&an, 1, ctx.max_path_len) {
        let bm = path.last().unwrap().target().clone();
        let src: Vec<Profunctor> = fr.src().iter().cloned().chain(path.iter().cloned()).collect();
        for k in enumerate_functors(&bm, m) {
            let dom = CellFrame::new(path.clone(), l.clone(), k.clone(), Target::Nullary(m.clone()))?;
            let cod = CellFrame::new(src.clone(), fr.left().clone(), k.clone(), Target::Nullary(m.clone()))?;
            frames += 1;
            if let Some(d) = bijection_defect(&dom, &cod, |v| horizontal_compose(eta, v))? {
                return Ok(defect_result(d, (fr.left().clone(), k), &format!("extension path of length {}", path.len())));
            }
        }
    }
    Ok(CheckResult::bounded(ctx.max_path_len, format!("weak property exact; {frames} extension frames factor uniquely")))
}

/// The composite `η ∘ (id, ..., id, cart)` restricting `η` along `Jn(id, f)`.
pub fn restrict_kan_cell(eta: &Cell, f: &FinFunctor) -> Result<Cell> {
    let fr = eta.frame();
    let n = fr.arity();
    if n == 0 {
        return Err(Error::Precondition("restriction needs a non-empty source path".into()));
    }
    let jn = &fr.src()[n - 1];
    let cart = crate::construct::restrict(jn, &FinFunctor::identity(jn.source()), f)?.cartesian_cell;
    let mut phis: Vec<Cell> = fr.src()[..n - 1].iter().map(Cell::identity).collect();
    phis.push(cart);
    vertical_compose(eta, &phis)
}

/// Whether `η` (nullary, right vertical `l`) defines `l` as the weak, full or
/// pointwise left Kan extension of its left vertical along its source path.
///
/// The weak property quantifies over finitely many functors and is exact. The
/// pointwise property reduces, per object `y`, to `η` restricted along
/// `Jn(id, y)` being a weighted colimit, which is decided exactly; context
/// functors into the last object are checked in addition, bounded.
pub fn defines_left_kan(eta: &Cell, ctx: &Context, mode: KanMode) -> Result<CheckResult> {
    let m = kan_shape(eta)?;
    match mode {
        KanMode::Weak => weak_kan(eta, &m),
        KanMode::Full => full_kan(eta, &m, ctx),
        KanMode::Pointwise => {
            let fr = eta.frame();
            if fr.arity() == 0 {
                return Err(Error::Precondition("pointwise Kan extensions need a non-empty source path".into()));
            }
            let an = fr.objects().last().unwrap().clone();
            for (y, pick) in object_picks(&an).iter().enumerate() {
                let res = is_weighted_colimit(&restrict_kan_cell(eta, pick)?)?;
                if !res.holds() {
                    return Ok(CheckResult {
                        detail: format!("at object {}: {}", an.object_name(y), res.detail),
                        ..res
                    });
                }
            }
            let mut checked = 0usize;
            for f in ctx.verticals_into(&an) {
                checked += 1;
                let res = full_kan(&restrict_kan_cell(eta, &f)?, &m, ctx)?;
                if !res.holds() {
                    return Ok(CheckResult {
                        detail: format!("restriction along a context functor: {}", res.detail),
                        ..res
                    });
                }
            }
            Ok(CheckResult::exact(format!(
                "weighted colimit at each of {} objects; {checked} context restrictions agree",
                an.num_objects()
            )))
        }
    }
}

/// A profunctor `1 ⇸ 1` with `n` elements and trivial actions.
pub fn set_profunctor(one: &Arc<FinCategory>, n: usize) -> Profunctor {
    Profunctor::from_fn(one.clone(), one.clone(), vec![FinSet::numbered("h", n)], |_, _, u| u, |_, u, _| u)
}

/// Whether `η: (J1, ..., Jn) ⇒ M`, with `Jn` ending at the terminal category
/// and right vertical picking `l`, defines `l` as the weighted colimit of its
/// left vertical: every `χ: (J, H) ⇒ M` into any object factors uniquely as
/// `η ⋆ φ'` with `φ': H ⇒ M`. `H` ranges over sets of size up to
/// `max(1, largest hom-set of M)`; the property for a set of size `s` is the
/// `s`-th power of the property for a singleton, so this is exact.
pub fn is_weighted_colimit(eta: &Cell) -> Result<CheckResult> {
    let m = kan_shape(eta)?;
    let fr = eta.frame();
    let one = fr.objects().last().unwrap().clone();
    if one.num_objects() != 1 || one.num_morphisms() != 1 {
        return Err(Error::Precondition("weights end at the terminal category".into()));
    }
    let bound = weight_bound(&m);
    let l = fr.right().clone();
    for s in 0..=bound {
        let h = set_profunctor(&one, s);
        let src: Vec<Profunctor> = fr.src().iter().cloned().chain([h.clone()]).collect();
        for x in 0..m.num_objects() {
            let k = FinFunctor::constant(&one, &m, x);
            let dom = CellFrame::new(vec![h.clone()], l.clone(), k.clone(), Target::Nullary(m.clone()))?;
            let cod = CellFrame::new(src.clone(), fr.left().clone(), k.clone(), Target::Nullary(m.clone()))?;
            if let Some(d) = bijection_defect(&dom, &cod, |v| horizontal_compose(eta, v))? {
                return Ok(defect_result(
                    d,
                    (fr.left().clone(), k),
                    &format!("test set of size {s} into object {}", m.object_name(x)),
                ));
            }
        }
    }
    Ok(CheckResult::exact(format!("test sets of size 0..={bound} factor uniquely")))
}

/// Largest size of the auxiliary sets tested by [`is_weighted_colimit`].
pub fn weight_bound(m: &FinCategory) -> usize {
    let mut b = 1;
    for x in 0..m.num_objects() {
        for y in 0..m.num_objects() {
            b = b.max(m.hom_len(x, y));
        }
    }
    b
}

/// Adjusts a holding verdict to exact when a construction guarantees the property.
pub fn guaranteed(res: CheckResult) -> CheckResult {
    if res.holds() {
        res.with_verdict(Verdict::HoldsExact)
    } else {
        res
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{discrete, walking_arrow};
    use crate::construct::{conjoint, horizontal_composite, restrict, unit_profunctor};

    fn over_one(atoms: &[&str]) -> Profunctor {
        let one = Arc::new(terminal());
        let set = FinSet::new(atoms.iter().copied()).unwrap();
        Profunctor::from_fn(one.clone(), one, vec![set], |_, _, u| u, |_, u, _| u)
    }

    fn between(j: &Profunctor, k: &Profunctor, f: impl FnMut(&[usize], &[usize]) -> usize) -> Cell {
        let frame = CellFrame::new(
            vec![j.clone()],
            FinFunctor::identity(j.source()),
            FinFunctor::identity(j.target()),
            Target::Unary(k.clone()),
        )
        .unwrap();
        Cell::from_fn(frame, f).unwrap()
    }

    #[test]
    fn identity_factors_through_itself_once() {
        let j = over_one(&["u", "v"]);
        let id = Cell::identity(&j);
        let one = j.source().clone();
        let i = FinFunctor::identity(&one);
        assert_eq!(factor_through(&id, &id, &i, &i).unwrap(), vec![id.clone()]);
    }

    #[test]
    fn restriction_cells_factor_uniquely() {
        let c = Arc::new(walking_arrow());
        let h = Profunctor::hom(&c);
        let f = FinFunctor::pick(&c, 0);
        let r = restrict(&h, &f, &FinFunctor::identity(&c)).unwrap();
        let ctx = Context::new(vec![h.clone(), r.profunctor.clone()], vec![f.clone()], 1);
        assert!(is_cartesian(&r.cartesian_cell, &ctx).unwrap().holds());
        // χ = cart itself factors once, through the identity
        let ids = (FinFunctor::identity(f.source()), FinFunctor::identity(&c));
        assert_eq!(factor_through(&r.cartesian_cell, &r.cartesian_cell, &ids.0, &ids.1).unwrap().len(), 1);
    }

    #[test]
    fn factorization_misses_outside_the_image() {
        let j = over_one(&["u", "v"]);
        let k = over_one(&["w", "z"]);
        let psi = between(&j, &k, |_, _| 0);
        let chi = between(&j, &k, |_, e| e[0]);
        let one = j.source().clone();
        let i = FinFunctor::identity(&one);
        assert!(factor_through(&chi, &psi, &i, &i).unwrap().is_empty());
    }

    #[test]
    fn non_injective_cell_is_not_cartesian() {
        let j = over_one(&["u", "v"]);
        let k = over_one(&["w"]);
        let psi = between(&j, &k, |_, _| 0);
        let ctx = Context::new(vec![k.clone()], vec![], 2);
        let res = is_cartesian(&psi, &ctx).unwrap();
        assert_eq!(res.verdict, Verdict::Fails);
        let w = res.witness.unwrap();
        let (h, kk) = res.witness_verticals.unwrap();
        assert_ne!(factor_through(&w, &psi, &h, &kk).unwrap().len(), 1);
    }

    #[test]
    fn isomorphism_identity_is_cartesian() {
        let c = Arc::new(walking_arrow());
        let id = Cell::vertical_identity(&FinFunctor::identity(&c));
        let ctx = Context::new(vec![Profunctor::hom(&c)], vec![], 1);
        assert!(is_cartesian(&id, &ctx).unwrap().holds());
    }

    #[test]
    fn composite_and_unit_cells_are_cocartesian() {
        let c = Arc::new(walking_arrow());
        let h = Profunctor::hom(&c);
        let comp = horizontal_composite(&[h.clone(), h.clone()]).unwrap();
        let ctx = Context::new(vec![h.clone()], vec![FinFunctor::pick(&c, 1)], 1);
        assert!(is_cocartesian_path(&[comp.cocartesian_cell.clone()], &ctx).unwrap().holds());
        assert!(is_pointwise_cocartesian(&comp.cocartesian_cell, &ctx).unwrap().holds());
        let u = unit_profunctor(&c).unwrap();
        assert!(is_cocartesian_path(&[u.cocartesian_cell.clone()], &ctx).unwrap().holds());
        assert!(is_cartesian(&u.cartesian_cell, &ctx).unwrap().holds());
    }

    #[test]
    fn non_surjective_cell_is_not_weakly_cocartesian() {
        let j = over_one(&["u"]);
        let k = over_one(&["w", "z"]);
        let phi = between(&j, &k, |_, _| 0);
        let ctx = Context::new(vec![k.clone()], vec![], 1);
        let res = is_weakly_cocartesian(&phi, &ctx).unwrap();
        assert_eq!(res.verdict, Verdict::Fails);
        let (h, kk) = res.witness_verticals.clone().unwrap();
        assert_ne!(factor_after(&res.witness.unwrap(), &[phi], &h, &kk).unwrap().len(), 1);
    }

    #[test]
    fn invertible_vertical_cell_defines_weak_lan() {
        let c = Arc::new(walking_arrow());
        let id = Cell::vertical_identity(&FinFunctor::identity(&c));
        assert_eq!(defines_left_kan(&id, &Context::default(), KanMode::Weak).unwrap().verdict, Verdict::HoldsExact);
    }

    #[test]
    fn conjoint_cart_is_absolute_pointwise_lan() {
        let c = Arc::new(walking_arrow());
        let j = FinFunctor::pick(&c, 1);
        let conj = conjoint(&j).unwrap();
        // cart: (j^*) ⇒ C with left id, right j, defines j as lan of id along j^*
        let eta = conj.cartesian_cell().clone();
        let ctx = Context::new(vec![conj.profunctor().clone()], vec![], 1);
        for mode in [KanMode::Weak, KanMode::Full, KanMode::Pointwise] {
            assert!(defines_left_kan(&eta, &ctx, mode).unwrap().holds(), "{mode:?}");
        }
    }

    #[test]
    fn wrong_apex_fails() {
        // the empty weight on 1 with apex 0 in a discrete 2-object category
        let m = Arc::new(discrete(["p", "q"]));
        let one = Arc::new(terminal());
        let empty = Profunctor::empty(&one, &one);
        let d = FinFunctor::constant(&one, &m, 0);
        let frame = CellFrame::new(vec![empty], d.clone(), d, Target::Nullary(m.clone())).unwrap();
        let eta = Cell::from_fn(frame, |_, _| 0).unwrap();
        let res = defines_left_kan(&eta, &Context::default(), KanMode::Pointwise).unwrap();
        assert_eq!(res.verdict, Verdict::Fails);
    }
}
