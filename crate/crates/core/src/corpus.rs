//! Small bundled categories, monoidal structures and monoidal profunctors
//! used by the tests, the acceptance suite, the benches and the CLI.

use std::sync::Arc;

use crate::category::{cyclic_group, discrete, indiscrete, monoid, preorder, terminal, walking_arrow, FinCategory, Obj};
use crate::error::Result;
use crate::functor::enumerate_functors;
use crate::monoidal::{small_monoidal_profunctors, LaxMonoidalFunctor, MonoidalProfunctor, MonoidalStructure};

/// Two parallel arrows `f, g: a → b`.
pub fn parallel_pair() -> FinCategory {
    FinCategory::from_tables(
        ["a", "b"],
        &[("id_a", "a", "a"), ("id_b", "b", "b"), ("f", "a", "b"), ("g", "a", "b")],
        &[("a", "id_a"), ("b", "id_b")],
        &[
            (("id_a", "id_a"), "id_a"),
            (("id_b", "id_b"), "id_b"),
            (("f", "id_a"), "f"),
            (("g", "id_a"), "g"),
            (("id_b", "f"), "f"),
            (("id_b", "g"), "g"),
        ],
    )
    .expect("parallel pair tables are total")
}

/// The monoid `{1, e}` with `e ∘ e = e`.
pub fn walking_idempotent() -> FinCategory {
    monoid(&["1", "e"], &[vec![0, 1], vec![1, 1]]).expect("idempotent monoid")
}

/// The monoid `{1, a, b}` with `x ∘ y = x` for `x ≠ 1`.
pub fn left_zero_monoid() -> FinCategory {
    monoid(&["1", "a", "b"], &[vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]]).expect("left-zero monoid")
}

/// The chain `0 < 1 < .. < n-1`.
pub fn chain(n: usize) -> FinCategory {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let pairs: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0].as_str(), w[1].as_str())).collect();
    preorder(names.iter().cloned(), &pairs).expect("chain")
}

/// The product order on `{0, 1}²`, objects `00, 01, 10, 11`.
pub fn square() -> FinCategory {
    preorder(["00", "01", "10", "11"], &[("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")]).expect("square")
}

/// The span `l ← c → r`.
pub fn span() -> FinCategory {
    preorder(["c", "l", "r"], &[("c", "l"), ("c", "r")]).expect("span")
}

/// The cospan `l → c ← r`.
pub fn cospan() -> FinCategory {
    preorder(["c", "l", "r"], &[("l", "c"), ("r", "c")]).expect("cospan")
}

/// The bundled categories: at most 4 objects and 12 morphisms each.
pub fn categories() -> Vec<(&'static str, Arc<FinCategory>)> {
    vec![
        ("terminal", terminal()),
        ("walking_arrow", walking_arrow()),
        ("discrete2", discrete(["0", "1"])),
        ("z2", cyclic_group(2)),
        ("z3", cyclic_group(3)),
        ("chain3", chain(3)),
        ("chain4", chain(4)),
        ("span", span()),
        ("cospan", cospan()),
        ("parallel_pair", parallel_pair()),
        ("indiscrete2", indiscrete(["p", "q"])),
        ("square", square()),
        ("idempotent", walking_idempotent()),
        ("left_zero", left_zero_monoid()),
    ]
    .into_iter()
    .map(|(n, c)| (n, Arc::new(c)))
    .collect()
}

/// Looks up a bundled category by name.
pub fn category(name: &str) -> Option<Arc<FinCategory>> {
    categories().into_iter().find(|(n, _)| *n == name).map(|(_, c)| c)
}

/// A strict structure on a thin category from a monotone binary operation.
pub fn thin_monoidal(c: &Arc<FinCategory>, bound: usize, unit: Obj, op: fn(Obj, Obj) -> Obj) -> Result<MonoidalStructure> {
    let cc = c.clone();
    MonoidalStructure::strict(c, bound, unit, op, move |f, g| {
        cc.hom(op(cc.dom(f), cc.dom(g)), op(cc.cod(f), cc.cod(g))).start
    })
}

/// Discrete `ℤ/n` with addition.
pub fn discrete_cyclic(n: usize, bound: usize) -> MonoidalStructure {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let c = Arc::new(discrete(names));
    let mult: Vec<Vec<Obj>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    MonoidalStructure::discrete_monoid(&c, bound, 0, &mult).expect("cyclic group")
}

/// The bundled strict monoidal categories, all valid and pseudo, at arity bound `bound`.
pub fn monoidal_structures(bound: usize) -> Vec<(&'static str, MonoidalStructure)> {
    let arrow = Arc::new(walking_arrow());
    let one = Arc::new(terminal());
    let chain3 = Arc::new(chain(3));
    let sq = Arc::new(square());
    let ind = Arc::new(indiscrete(["p", "q"]));
    vec![
        ("trivial", thin_monoidal(&one, bound, 0, |_, _| 0).expect("trivial")),
        ("z2", discrete_cyclic(2, bound)),
        ("z3", discrete_cyclic(3, bound)),
        ("arrow_max", thin_monoidal(&arrow, bound, 0, |x, y| x.max(y)).expect("max")),
        ("arrow_min", thin_monoidal(&arrow, bound, 1, |x, y| x.min(y)).expect("min")),
        ("chain3_max", thin_monoidal(&chain3, bound, 0, |x, y| x.max(y)).expect("max")),
        // objects 00, 01, 10, 11 are indexed as bit pairs, so componentwise max is `|`
        ("square_max", thin_monoidal(&sq, bound, 0, |x, y| x | y).expect("max")),
        ("indiscrete_max", thin_monoidal(&ind, bound, 0, |x, y| x.max(y)).expect("max")),
    ]
}

/// Looks up a bundled monoidal structure by name.
pub fn monoidal_structure(name: &str, bound: usize) -> Option<MonoidalStructure> {
    monoidal_structures(bound).into_iter().find(|(n, _)| *n == name).map(|(_, m)| m)
}

/// Every functor commuting with the tensors on the nose, as a strict monoidal functor.
pub fn strict_monoidal_functors(ma: &MonoidalStructure, mb: &MonoidalStructure) -> Vec<LaxMonoidalFunctor> {
    enumerate_functors(ma.base(), mb.base())
        .into_iter()
        .filter_map(|f| LaxMonoidalFunctor::strict(f, ma.clone(), mb.clone()).ok())
        .filter(|f| f.is_valid())
        .collect()
}

/// The bundled monoidal profunctors: homs, companions and conjoints of strict
/// monoidal functors between bundled structures, and every monoidal
/// profunctor on discrete `ℤ/2` with trivial actions and at most two elements.
pub fn monoidal_profunctors(bound: usize) -> Result<Vec<(String, MonoidalProfunctor)>> {
    let structures = monoidal_structures(bound);
    let mut out = Vec::new();
    for (name, m) in &structures {
        out.push((format!("hom({name})"), MonoidalProfunctor::hom(m)));
    }
    let small = ["trivial", "z2", "arrow_max", "arrow_min", "indiscrete_max", "square_max"];
    for (na, ma) in structures.iter().filter(|(n, _)| small.contains(n)) {
        for (nb, mb) in structures.iter().filter(|(n, _)| small.contains(n)) {
            if na == nb && *na != "arrow_max" {
                continue;
            }
            for (i, f) in strict_monoidal_functors(ma, mb).into_iter().take(2).enumerate() {
                out.push((format!("companion({na}→{nb}#{i})"), MonoidalProfunctor::companion(&f)?));
                out.push((format!("conjoint({na}→{nb}#{i})"), MonoidalProfunctor::conjoint(&f)?));
            }
        }
    }
    let z2 = discrete_cyclic(2, bound);
    for (i, j) in small_monoidal_profunctors(&z2, 2)?.1.into_iter().enumerate() {
        out.push((format!("small(z2)#{i}"), j));
    }
    Ok(out)
}
