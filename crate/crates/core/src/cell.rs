//! Cells of arity `(n, ≤1)` between paths of profunctors, with vertical and
//! horizontal composition and identities.
//!
//! A cell with source path `J1, ..., Jn` (objects `A0, ..., An`), left vertical
//! `f: A0 → C`, right vertical `g: An → D` and target `K: C ⇸ D` has, for every
//! object tuple `(x0, ..., xn)`, a function `J1(x0, x1) × ... × Jn(x(n-1), xn) → K(f x0, g xn)`.
//! A nullary cell targets a category `C` instead and lands in `C(f x0, g xn)`.
//! For `n = 0` there is one value per object of `A0`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::category::{same_category, FinCategory, Mor, Obj};
use crate::error::{Error, Result, Violation};
use crate::functor::FinFunctor;
use crate::profunctor::{is_composable, Profunctor};
use crate::util::{encode, tuples};

/// Target of a cell: a single profunctor or a category (nullary target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Unary(Profunctor),
    Nullary(Arc<FinCategory>),
}

impl Target {
    pub fn is_nullary(&self) -> bool {
        matches!(self, Target::Nullary(_))
    }

    /// The source and target categories of the target.
    pub fn categories(&self) -> (&Arc<FinCategory>, &Arc<FinCategory>) {
        match self {
            Target::Unary(k) => (k.source(), k.target()),
            Target::Nullary(c) => (c, c),
        }
    }
}

#[derive(Debug)]
pub(crate) struct Block {
    pub objs: Vec<Obj>,
    pub elem_sizes: Vec<usize>,
    pub offset: usize,
    pub len: usize,
    /// Size of the target set `K(f x0, g xn)`.
    pub domain: usize,
}

/// How a constraint transforms a component value before comparing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Act {
    Id,
    /// `v ↦ λ_K(a, v)` with `v ∈ K(cod a, y)`.
    Left(Mor, Obj),
    /// `v ↦ ρ_K(v, b)` with `v ∈ K(x, dom b)`.
    Right(Obj, Mor),
}

/// One instance of an equivariance axiom: `fp(φ[p]) = fq(φ[q])`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Constraint {
    pub rule: &'static str,
    pub p: usize,
    pub fp: Act,
    pub q: usize,
    pub fq: Act,
}

/// Boundary of a cell.
pub struct CellFrame {
    src: Vec<Profunctor>,
    left: FinFunctor,
    right: FinFunctor,
    target: Target,
    objects: Vec<Arc<FinCategory>>,
    tgt: Profunctor,
    blocks: Vec<Block>,
    obj_sizes: Vec<usize>,
    positions: usize,
    constraints: OnceLock<Vec<Constraint>>,
}

impl fmt::Debug for CellFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CellFrame")
            .field("arity", &self.src.len())
            .field("nullary", &self.target.is_nullary())
            .field("positions", &self.positions)
            .finish()
    }
}

impl PartialEq for CellFrame {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src
            && self.left == other.left
            && self.right == other.right
            && self.target == other.target
    }
}

impl Eq for CellFrame {}

impl CellFrame {
    /// Checks that the boundary is well formed and precomputes the component layout.
    pub fn new(
        src: Vec<Profunctor>,
        left: FinFunctor,
        right: FinFunctor,
        target: Target,
    ) -> Result<Arc<CellFrame>> {
        if !is_composable(&src) {
            return Err(Error::FrameMismatch("source path is not composable".into()));
        }
        let objects: Vec<Arc<FinCategory>> = if src.is_empty() {
            vec![left.source().clone()]
        } else {
            std::iter::once(src[0].source().clone())
                .chain(src.iter().map(|j| j.target().clone()))
                .collect()
        };
        if !same_category(left.source(), &objects[0]) {
            return Err(Error::FrameMismatch("left vertical does not start at the source path".into()));
        }
        if !same_category(right.source(), objects.last().unwrap()) {
            return Err(Error::FrameMismatch("right vertical does not start at the end of the source path".into()));
        }
        let (c, d) = target.categories();
        if !same_category(left.target(), c) || !same_category(right.target(), d) {
            return Err(Error::FrameMismatch("verticals do not land in the target's categories".into()));
        }
        let tgt = match &target {
            Target::Unary(k) => k.clone(),
            Target::Nullary(c) => Profunctor::hom(c),
        };
        let obj_sizes: Vec<usize> = objects.iter().map(|c| c.num_objects()).collect();
        let mut blocks = Vec::new();
        let mut offset = 0;
        for objs in tuples(&obj_sizes) {
            let elem_sizes: Vec<usize> = src
                .iter()
                .enumerate()
                .map(|(i, j)| j.size(objs[i], objs[i + 1]))
                .collect();
            let len = elem_sizes.iter().product();
            let domain = tgt.size(left.on_obj(objs[0]), right.on_obj(*objs.last().unwrap()));
            blocks.push(Block {
                objs,
                elem_sizes,
                offset,
                len,
                domain,
            });
            offset += len;
        }
        Ok(Arc::new(CellFrame {
            src,
            left,
            right,
            target,
            objects,
            tgt,
            blocks,
            obj_sizes,
            positions: offset,
            constraints: OnceLock::new(),
        }))
    }

    pub fn src(&self) -> &[Profunctor] {
        &self.src
    }

    pub fn arity(&self) -> usize {
        self.src.len()
    }

    pub fn left(&self) -> &FinFunctor {
        &self.left
    }

    pub fn right(&self) -> &FinFunctor {
        &self.right
    }

    pub fn target(&self) -> &Target {
        &self.target
    }

    pub fn is_nullary(&self) -> bool {
        self.target.is_nullary()
    }

    /// The categories `A0, ..., An` of the source path.
    pub fn objects(&self) -> &[Arc<FinCategory>] {
        &self.objects
    }

    /// The target as a profunctor (the hom-profunctor for nullary targets).
    pub fn target_profunctor(&self) -> &Profunctor {
        &self.tgt
    }

    /// Number of component values.
    pub fn positions(&self) -> usize {
        self.positions
    }

    pub(crate) fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub(crate) fn block_index(&self, objs: &[Obj]) -> usize {
        encode(objs, &self.obj_sizes)
    }

    /// Flat position of the component at `objs` applied to `elems`.
    pub fn position(&self, objs: &[Obj], elems: &[usize]) -> usize {
        let b = &self.blocks[self.block_index(objs)];
        b.offset + encode(elems, &b.elem_sizes)
    }

    /// Size of the set the value at a position lives in.
    pub(crate) fn domain_of_block(&self, block: usize) -> usize {
        self.blocks[block].domain
    }

    pub(crate) fn block_of_position(&self, p: usize) -> usize {
        self.blocks.partition_point(|b| b.offset + b.len <= p)
    }

    /// Human-readable name of a position, e.g. `(0,1)[u]`.
    pub fn describe_position(&self, p: usize) -> String {
        let bi = self.block_of_position(p);
        let b = &self.blocks[bi];
        let elems = crate::util::decode(p - b.offset, &b.elem_sizes);
        let objs: Vec<&str> = b
            .objs
            .iter()
            .zip(&self.objects)
            .map(|(&x, c)| c.object_name(x))
            .collect();
        let names: Vec<&str> = elems
            .iter()
            .enumerate()
            .map(|(i, &e)| self.src[i].elems(b.objs[i], b.objs[i + 1]).atom(e))
            .collect();
        format!("({})[{}]", objs.join(","), names.join(","))
    }

    pub(crate) fn apply(&self, act: Act, v: usize) -> usize {
        match act {
            Act::Id => v,
            Act::Left(a, y) => self.tgt.lact(a, y, v),
            Act::Right(x, b) => self.tgt.ract(x, v, b),
        }
    }

    /// Every instance of the equivariance axioms for this frame.
    pub(crate) fn constraints(&self) -> &[Constraint] {
        self.constraints.get_or_init(|| self.build_constraints())
    }

    fn build_constraints(&self) -> Vec<Constraint> {
        let mut out = Vec::new();
        let n = self.arity();
        let (f, g) = (&self.left, &self.right);
        if n == 0 {
            let a0 = &self.objects[0];
            for m in 0..a0.num_morphisms() {
                if a0.is_identity(m) {
                    continue;
                }
                let (x, x2) = (a0.dom(m), a0.cod(m));
                out.push(Constraint {
                    rule: "nullary equivariance",
                    p: self.blocks[x].offset,
                    fp: Act::Right(f.on_obj(x), g.on_mor(m)),
                    q: self.blocks[x2].offset,
                    fq: Act::Left(f.on_mor(m), g.on_obj(x2)),
                });
            }
            return out;
        }
        for block in &self.blocks {
            let objs = &block.objs;
            let a0 = &self.objects[0];
            for m in a0.into_object(objs[0]) {
                if a0.is_identity(m) {
                    continue;
                }
                let mut objs2 = objs.clone();
                objs2[0] = a0.dom(m);
                for e in tuples(&block.elem_sizes) {
                    let mut e2 = e.clone();
                    e2[0] = self.src[0].lact(m, objs[1], e[0]);
                    out.push(Constraint {
                        rule: "external left equivariance",
                        p: self.position(objs, &e),
                        fp: Act::Left(f.on_mor(m), g.on_obj(objs[n])),
                        q: self.position(&objs2, &e2),
                        fq: Act::Id,
                    });
                }
            }
            let an = &self.objects[n];
            for m in an.out_of_object(objs[n]) {
                if an.is_identity(m) {
                    continue;
                }
                let mut objs2 = objs.clone();
                objs2[n] = an.cod(m);
                for e in tuples(&block.elem_sizes) {
                    let mut e2 = e.clone();
                    e2[n - 1] = self.src[n - 1].ract(objs[n - 1], e[n - 1], m);
                    out.push(Constraint {
                        rule: "external right equivariance",
                        p: self.position(objs, &e),
                        fp: Act::Right(f.on_obj(objs[0]), g.on_mor(m)),
                        q: self.position(&objs2, &e2),
                        fq: Act::Id,
                    });
                }
            }
            for i in 1..n {
                let ai = &self.objects[i];
                let (ji, jn) = (&self.src[i - 1], &self.src[i]);
                for m in ai.out_of_object(objs[i]) {
                    if ai.is_identity(m) {
                        continue;
                    }
                    let mut objs2 = objs.clone();
                    objs2[i] = ai.cod(m);
                    let mut sizes = block.elem_sizes.clone();
                    sizes[i] = jn.size(ai.cod(m), objs[i + 1]);
                    for e in tuples(&sizes) {
                        let mut lhs = e.clone();
                        lhs[i - 1] = ji.ract(objs[i - 1], e[i - 1], m);
                        let mut rhs = e.clone();
                        rhs[i] = jn.lact(m, objs[i + 1], e[i]);
                        out.push(Constraint {
                            rule: "internal equivariance",
                            p: self.position(&objs2, &lhs),
                            fp: Act::Id,
                            q: self.position(objs, &rhs),
                            fq: Act::Id,
                        });
                    }
                }
            }
        }
        out
    }
}

/// A cell: a frame together with its component values.
///
/// Values are indices into the target sets, laid out block by block (one
/// block per object tuple, element tuples in row-major order).
#[derive(Debug, Clone)]
pub struct Cell {
    frame: Arc<CellFrame>,
    values: Vec<usize>,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
            && (Arc::ptr_eq(&self.frame, &other.frame) || *self.frame == *other.frame)
    }
}

impl Eq for Cell {}

impl Cell {
    pub fn new(frame: Arc<CellFrame>, values: Vec<usize>) -> Result<Cell> {
        if values.len() != frame.positions {
            return Err(Error::FrameMismatch(format!(
                "{} component values for {} positions",
                values.len(),
                frame.positions
            )));
        }
        for b in &frame.blocks {
            if values[b.offset..b.offset + b.len].iter().any(|&v| v >= b.domain) {
                return Err(Error::FrameMismatch("component value outside its target set".into()));
            }
        }
        Ok(Cell { frame, values })
    }

    pub(crate) fn from_raw(frame: Arc<CellFrame>, values: Vec<usize>) -> Cell {
        Cell { frame, values }
    }

    /// Builds a cell from a function of `(object tuple, element tuple)`.
    pub fn from_fn<F>(frame: Arc<CellFrame>, mut f: F) -> Result<Cell>
    where
        F: FnMut(&[Obj], &[usize]) -> usize,
    {
        let mut values = Vec::with_capacity(frame.positions);
        for b in &frame.blocks {
            for e in tuples(&b.elem_sizes) {
                values.push(f(&b.objs, &e));
            }
        }
        Cell::new(frame, values)
    }

    pub fn frame(&self) -> &Arc<CellFrame> {
        &self.frame
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The component at `objs` applied to `elems`.
    pub fn get(&self, objs: &[Obj], elems: &[usize]) -> usize {
        self.values[self.frame.position(objs, elems)]
    }

    /// For nullary cells: the component at `objs`/`elems` as a morphism of the target category.
    pub fn get_morphism(&self, objs: &[Obj], elems: &[usize]) -> Mor {
        let Target::Nullary(c) = &self.frame.target else {
            panic!("get_morphism on a unary cell");
        };
        let x = self.frame.left.on_obj(objs[0]);
        let y = self.frame.right.on_obj(*objs.last().unwrap());
        c.hom(x, y).start + self.get(objs, elems)
    }

    /// Reports every failed equivariance instance.
    pub fn validate(&self) -> Vec<Violation> {
        let fr = &*self.frame;
        fr.constraints()
            .iter()
            .filter(|c| fr.apply(c.fp, self.values[c.p]) != fr.apply(c.fq, self.values[c.q]))
            .map(|c| {
                Violation::new(
                    c.rule,
                    format!(
                        "components at {} and {}",
                        fr.describe_position(c.p),
                        fr.describe_position(c.q)
                    ),
                )
            })
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// The horizontal identity cell `id_J: (J) ⇒ J`.
    pub fn identity(j: &Profunctor) -> Cell {
        let frame = CellFrame::new(
            vec![j.clone()],
            FinFunctor::identity(j.source()),
            FinFunctor::identity(j.target()),
            Target::Unary(j.clone()),
        )
        .expect("identity frame is well formed");
        Cell::from_fn(frame, |_, e| e[0]).unwrap()
    }

    /// The vertical identity cell `id_f: (A) ⇒ C` with components `id_{f x}`.
    pub fn vertical_identity(f: &FinFunctor) -> Cell {
        let c = f.target().clone();
        let frame = CellFrame::new(vec![], f.clone(), f.clone(), Target::Nullary(c.clone()))
            .expect("vertical identity frame is well formed");
        Cell::from_fn(frame, |x, _| {
            let y = f.on_obj(x[0]);
            c.local_index(c.id(y))
        })
        .unwrap()
    }

    /// Whether this is a nullary cell with empty source whose components are
    /// all invertible (an invertible vertical cell).
    pub fn is_invertible_vertical(&self) -> bool {
        let Target::Nullary(c) = &self.frame.target else {
            return false;
        };
        self.frame.arity() == 0
            && (0..self.frame.objects[0].num_objects())
                .all(|x| crate::functor::inverse_morphism(c, self.get_morphism(&[x], &[])).is_some())
    }

    /// The same components over another frame with identical layout.
    pub fn with_frame(&self, frame: Arc<CellFrame>) -> Result<Cell> {
        Cell::new(frame, self.values.clone())
    }
}

/// The vertical composite `ψ ∘ (φ1, ..., φk)`.
///
/// The targets of the `φj` (each of length ≤ 1) must concatenate to the
/// source path of `ψ`. Nullary `φj` feed morphisms of the categories between
/// the profunctors of that path; they are absorbed through the actions.
pub fn vertical_compose(psi: &Cell, phis: &[Cell]) -> Result<Cell> {
    if phis.is_empty() {
        return Err(Error::FrameMismatch("vertical composite needs at least one cell".into()));
    }
    let pf = &*psi.frame;
    for w in phis.windows(2) {
        if w[0].frame.right != w[1].frame.left {
            return Err(Error::FrameMismatch("adjacent cells do not share their vertical".into()));
        }
    }
    let mut slot = 0;
    for (j, phi) in phis.iter().enumerate() {
        match &phi.frame.target {
            Target::Unary(k) => {
                if slot >= pf.arity() || pf.src[slot] != *k {
                    return Err(Error::FrameMismatch(format!(
                        "target of cell {j} does not match source slot {slot}"
                    )));
                }
                slot += 1;
            }
            Target::Nullary(c) => {
                if !same_category(c, &pf.objects[slot]) {
                    return Err(Error::FrameMismatch(format!(
                        "nullary cell {j} lands outside the category at gap {slot}"
                    )));
                }
            }
        }
    }
    if slot != pf.arity() {
        return Err(Error::FrameMismatch("targets do not cover the source path".into()));
    }
    if !same_category(phis[0].frame.left.target(), &pf.objects[0])
        || !same_category(phis.last().unwrap().frame.right.target(), pf.objects.last().unwrap())
    {
        return Err(Error::FrameMismatch("outer verticals do not meet the composite".into()));
    }
    let src: Vec<Profunctor> = phis.iter().flat_map(|p| p.frame.src.iter().cloned()).collect();
    let left = phis[0].frame.left.then(&pf.left)?;
    let right = phis.last().unwrap().frame.right.then(&pf.right)?;
    let frame = CellFrame::new(src, left, right, pf.target.clone())?;
    let mut bounds = Vec::with_capacity(phis.len());
    let mut o = 0;
    for p in phis {
        bounds.push(o);
        o += p.frame.arity();
    }
    let m = pf.arity();
    let mut gaps = vec![0; m + 1];
    let mut gap_start = vec![0; m + 1];
    let mut vals = vec![0; m];
    let mut val_right = vec![0; m];
    Cell::from_fn(frame, |objs, elems| {
        let mut t = 0;
        let c0 = &pf.objects[0];
        gap_start[0] = phis[0].frame.left.on_obj(objs[0]);
        gaps[0] = c0.id(gap_start[0]);
        for (j, phi) in phis.iter().enumerate() {
            let (s, nj) = (bounds[j], phi.frame.arity());
            let po = &objs[s..=s + nj];
            let pe = &elems[s..s + nj];
            match &phi.frame.target {
                Target::Nullary(c) => {
                    gaps[t] = c.compose(phi.get_morphism(po, pe), gaps[t]);
                }
                Target::Unary(_) => {
                    vals[t] = phi.get(po, pe);
                    val_right[t] = phi.frame.right.on_obj(po[nj]);
                    t += 1;
                    gap_start[t] = val_right[t - 1];
                    gaps[t] = pf.objects[t].id(gap_start[t]);
                }
            }
        }
        if m == 0 {
            let y = c0.dom(gaps[0]);
            let w = psi.get(&[y], &[]);
            return pf.tgt.ract(pf.left.on_obj(y), w, pf.right.on_mor(gaps[0]));
        }
        let mut pobjs = vec![0; m + 1];
        pobjs[0] = c0.dom(gaps[0]);
        vals[0] = pf.src[0].lact(gaps[0], val_right[0], vals[0]);
        for t in 1..=m {
            let k = &pf.src[t - 1];
            vals[t - 1] = k.ract(pobjs[t - 1], vals[t - 1], gaps[t]);
            pobjs[t] = pf.objects[t].cod(gaps[t]);
        }
        psi.get(&pobjs, &vals)
    })
}

/// The horizontal composite `φ ⋆ ψ`, defined as `id ∘ (φ, ψ)` where `id` is
/// the identity cell of the concatenated target path.
pub fn horizontal_compose(phi: &Cell, psi: &Cell) -> Result<Cell> {
    if phi.frame.right != psi.frame.left {
        return Err(Error::BoundaryMismatch(
            "right vertical of the first cell differs from the left vertical of the second".into(),
        ));
    }
    let id = match (&phi.frame.target, &psi.frame.target) {
        (Target::Unary(_), Target::Unary(_)) => {
            return Err(Error::ArityExceeded { arity: 2, bound: 1 })
        }
        (Target::Unary(k), _) | (_, Target::Unary(k)) => Cell::identity(k),
        (Target::Nullary(c), Target::Nullary(_)) => {
            Cell::vertical_identity(&FinFunctor::identity(c))
        }
    };
    vertical_compose(&id, &[phi.clone(), psi.clone()])
}
