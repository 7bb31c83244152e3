//! Serialized forms of shapes, tableaux and classes.

use celltower_core::{Multipartition, OrbitClass, ResidueSequence, Tableau, ValidatedParams};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ShapeJson {
    pub kind: &'static str,
    pub n: u32,
    pub boxes: Vec<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<i32>,
}

impl From<&Multipartition> for ShapeJson {
    fn from(lam: &Multipartition) -> Self {
        let mut boxes = vec![[lam.first_box().i, lam.first_box().l]];
        if let Some(b) = lam.second_box() {
            boxes.push([b.i, b.l]);
        }
        ShapeJson {
            kind: if lam.is_pair() { "pair" } else { "single" },
            n: lam.n(),
            boxes,
            a: lam.is_pair().then(|| lam.diff()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableauJson {
    pub shape: ShapeJson,
    pub columns: Vec<Vec<u32>>,
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        TableauJson {
            shape: t.shape().into(),
            columns: t.columns().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamsJson {
    pub r: u32,
    pub p: u32,
    pub d: u32,
    pub n: u32,
    pub e: u32,
    pub charges: Vec<i64>,
}

impl From<&ValidatedParams> for ParamsJson {
    fn from(v: &ValidatedParams) -> Self {
        ParamsJson {
            r: v.r(),
            p: v.p(),
            d: v.d(),
            n: v.n(),
            e: v.e(),
            charges: v.charges().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassJson {
    pub label: String,
    pub representatives: Vec<ShapeJson>,
    pub size: u32,
    pub reducible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub original: Option<ShapeJson>,
}

impl From<&OrbitClass> for ClassJson {
    fn from(c: &OrbitClass) -> Self {
        ClassJson {
            label: class_label(c),
            representatives: c.representatives().iter().map(Into::into).collect(),
            size: c.size(),
            reducible: c.is_reducible(),
            original: c.original().map(Into::into),
        }
    }
}

pub fn class_label(c: &OrbitClass) -> String {
    format!("[{}]", c.canonical())
}

pub fn residues_json(seq: &ResidueSequence) -> Vec<(u32, i64)> {
    seq.iter().map(|r| (r.i, r.j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use celltower_core::FloorIndex;
    use serde_json::json;

    #[test]
    fn shape_schema() {
        let lam = Multipartition::pair(4, FloorIndex::new(0, 0), FloorIndex::new(1, 1), 2).unwrap();
        let v = serde_json::to_value(ShapeJson::from(&lam)).unwrap();
        assert_eq!(
            v,
            json!({"kind": "pair", "n": 4, "boxes": [[0, 0], [1, 1]], "a": 2})
        );
        let s = Multipartition::single(3, FloorIndex::new(2, 0)).unwrap();
        let v = serde_json::to_value(ShapeJson::from(&s)).unwrap();
        assert_eq!(v, json!({"kind": "single", "n": 3, "boxes": [[2, 0]]}));
    }
}
