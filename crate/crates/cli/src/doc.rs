//! The versioned JSON document format. All tables are keyed by canonical
//! atom names and stored in ordered maps, so serialization is deterministic.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const VERSION: u32 = 1;

pub type Map<V> = BTreeMap<String, V>;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub hvdc: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub categories: Map<CategoryDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functors: Map<FunctorDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub transformations: Map<TransformationDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub profunctors: Map<ProfunctorDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub presheaves: Map<PresheafDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub monoidal: Map<MonoidalDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub monoidal_functors: Map<MonoidalFunctorDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub monoidal_profunctors: Map<MonoidalProfunctorDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cells: Map<CellDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub contexts: Map<ContextDoc>,
}

/// `hom` is keyed `"a→b"`, `comp` is keyed `"g∘f"`, `id` maps objects to identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub hom: Map<Vec<String>>,
    pub comp: Map<String>,
    pub id: Map<String>,
}

/// Functor references name a workspace functor or `id(C)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub source: String,
    pub target: String,
    pub objects: Map<String>,
    pub morphisms: Map<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformationDoc {
    pub source: String,
    pub target: String,
    pub components: Map<String>,
}

/// `elements[x][y]` lists `J(x, y)`; `left[a][y][u] = λ(a, u)` and
/// `right[x][u][b] = ρ(u, b)`. Identity entries may be omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfunctorDoc {
    pub source: String,
    pub target: String,
    pub elements: Map<Map<Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub left: Map<Map<Map<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub right: Map<Map<Map<String>>>,
}

/// `elements[x]` lists `p x`; `action[a][u] = p(a)(u)` for `u ∈ p(cod a)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresheafDoc {
    pub base: String,
    pub elements: Map<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub action: Map<Map<String>>,
}

/// A strict monoidal structure from its binary tensor on objects and morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalDoc {
    pub base: String,
    pub unit: String,
    pub tensor: Map<Map<String>>,
    pub tensor_mor: Map<Map<String>>,
}

/// Compositors over strict structures are determined by the nullary and
/// binary ones; `strict` functors carry neither.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalFunctorDoc {
    pub functor: String,
    pub source: String,
    pub target: String,
    pub flavor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub binary: Map<Map<String>>,
}

/// Structure maps over strict structures: the nullary element and the binary
/// table `[[x1, y1, u1], [x2, y2, u2], v]`; higher arities iterate the binary map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalProfunctorDoc {
    pub profunctor: String,
    pub source: String,
    pub target: String,
    pub unit: String,
    pub binary: Vec<(Triple, Triple, String)>,
}

pub type Triple = (String, String, String);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "lowercase")]
pub enum TargetDoc {
    Profunctor(String),
    Category(String),
}

/// Components `[objects, elements, value]`; the value is an element of the
/// target profunctor or, for nullary cells, a morphism of the target category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDoc {
    pub source: Vec<String>,
    pub left: String,
    pub right: String,
    pub target: TargetDoc,
    pub components: Vec<(Vec<String>, Vec<String>, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextDoc {
    #[serde(default)]
    pub profunctors: Vec<String>,
    #[serde(default)]
    pub functors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path_len: Option<usize>,
}

impl Document {
    pub fn new() -> Self {
        Document {
            hvdc: VERSION,
            ..Default::default()
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}
