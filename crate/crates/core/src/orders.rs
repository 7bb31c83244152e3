//! Orders on floor boxes, shapes and orbit classes, with a finite poset
//! checker.

use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::{FloorIndex, Multipartition, Node};
use crate::orbits::OrbitClass;

/// Every order relation implemented here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrderKind {
    FloorTotal,
    FloorPrime,
    Dominance,
    Shape,
    ShapePrime,
    OrbitP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FloorOrder {
    Total,
    Prime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeOrder {
    Shape,
    ShapePrime,
}

impl ShapeOrder {
    pub fn floor(self) -> FloorOrder {
        match self {
            ShapeOrder::Shape => FloorOrder::Total,
            ShapeOrder::ShapePrime => FloorOrder::Prime,
        }
    }
}

pub fn leq_floor(kind: FloorOrder, x: FloorIndex, y: FloorIndex) -> bool {
    match kind {
        FloorOrder::Total => x <= y,
        FloorOrder::Prime => x.l < y.l || x == y,
    }
}

/// Number of nodes of `shape` that are `<= gamma` in the node order.
fn nodes_below(shape: &Multipartition, gamma: &Node) -> u32 {
    shape
        .columns()
        .map(|c| {
            let full_rows = c.len.min(gamma.row - 1);
            let on_row = (c.len >= gamma.row && c.at <= gamma.floor) as u32;
            full_rows + on_row
        })
        .sum()
}

/// `lam` dominates below `mu`: every node-order down-set holds at least as
/// many nodes of `lam` as of `mu`.
pub fn dominance_leq(lam: &Multipartition, mu: &Multipartition) -> bool {
    // counts only change at nodes of either shape
    lam.nodes_in_order()
        .iter()
        .chain(mu.nodes_in_order().iter())
        .all(|gamma| nodes_below(lam, gamma) >= nodes_below(mu, gamma))
}

/// The shape orders built on the total or the prime floor order.
pub fn shape_leq(kind: ShapeOrder, lam: &Multipartition, mu: &Multipartition) -> bool {
    let le = |x, y| leq_floor(kind.floor(), x, y);
    match (*lam, *mu) {
        (Multipartition::Single { at: x, .. }, Multipartition::Single { at: y, .. }) => le(x, y),
        (Multipartition::Pair { first, .. }, Multipartition::Single { at, .. }) => le(first, at),
        (Multipartition::Single { .. }, Multipartition::Pair { .. }) => false,
        (
            Multipartition::Pair {
                first: b1,
                second: b2,
                diff: a,
                ..
            },
            Multipartition::Pair {
                first: b3,
                second: b4,
                diff: b,
                ..
            },
        ) => {
            le(b1, b3)
                && le(b2, b4)
                && (a.abs() < b.abs()
                    || (a.abs() == b.abs() && a >= b)
                    || (a.abs() == b.abs() && a < b && le(b2, b3)))
        }
    }
}

/// `[lam] <=_p [mu]`: some representatives compare under the prime shape order.
pub fn orbit_leq_p(cls1: &OrbitClass, cls2: &OrbitClass) -> bool {
    cls1 == cls2
        || cls1.representatives().iter().any(|x| {
            cls2.representatives()
                .iter()
                .any(|y| shape_leq(ShapeOrder::ShapePrime, x, y))
        })
}

/// A dense boolean matrix of a relation on an indexed element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTable {
    size: usize,
    words: usize,
    bits: Vec<u64>,
}

impl RelationTable {
    pub fn build<T>(elements: &[T], relation: impl Fn(&T, &T) -> bool) -> Self {
        let size = elements.len();
        let mut table = RelationTable::empty(size);
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                if relation(x, y) {
                    table.set(i, j);
                }
            }
        }
        table
    }

    pub fn empty(size: usize) -> Self {
        let words = size.div_ceil(64);
        RelationTable {
            size,
            words,
            bits: vec![0; size * words],
        }
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn strictly_below(&self, i: usize, j: usize) -> bool {
        i != j && self.get(i, j)
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }
}

const WITNESS_CAP: usize = 16;

/// Axiom violations of a finite relation, with at most a few witnesses each.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PosetReport {
    pub elements: usize,
    pub reflexivity: Vec<usize>,
    pub antisymmetry: Vec<(usize, usize)>,
    pub transitivity: Vec<(usize, usize, usize)>,
    pub reflexivity_count: usize,
    pub antisymmetry_count: usize,
    pub transitivity_count: usize,
}

impl PosetReport {
    pub fn is_poset(&self) -> bool {
        self.reflexivity_count == 0 && self.antisymmetry_count == 0 && self.transitivity_count == 0
    }
}

pub fn verify_poset_axioms<T>(elements: &[T], relation: impl Fn(&T, &T) -> bool) -> PosetReport {
    verify_table(&RelationTable::build(elements, relation))
}

pub fn verify_table(table: &RelationTable) -> PosetReport {
    let n = table.len();
    let mut report = PosetReport {
        elements: n,
        ..PosetReport::default()
    };
    for i in 0..n {
        if !table.get(i, i) {
            report.reflexivity_count += 1;
            if report.reflexivity.len() < WITNESS_CAP {
                report.reflexivity.push(i);
            }
        }
        for j in i + 1..n {
            if table.get(i, j) && table.get(j, i) {
                report.antisymmetry_count += 1;
                if report.antisymmetry.len() < WITNESS_CAP {
                    report.antisymmetry.push((i, j));
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j || !table.get(i, j) {
                continue;
            }
            // everything above j must be above i
            for (w, (&above_j, &above_i)) in table.row(j).iter().zip(table.row(i)).enumerate() {
                let mut missing = above_j & !above_i;
                while missing != 0 {
                    let k = w * 64 + missing.trailing_zeros() as usize;
                    missing &= missing - 1;
                    report.transitivity_count += 1;
                    if report.transitivity.len() < WITNESS_CAP {
                        report.transitivity.push((i, j, k));
                    }
                }
            }
        }
    }
    report
}
