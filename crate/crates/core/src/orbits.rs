//! The cyclic layer shift `sigma` on shapes and tableaux, and the orbit
//! classes it cuts out of `P_n`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::combinatorics::{
    degree_of_tableau, enumerate_multipartitions, enumerate_standard_tableaux, initial_tableau,
    permutation_of_tableau, residue_sequence, Column, Multipartition, Tableau,
};
use crate::orders::{shape_leq, ShapeOrder};
use crate::params::ValidatedParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("NotReducible: the class of {0} has no original representative")]
    NotReducible(Multipartition),
    #[error("NotStandard: the shift is only defined on standard tableaux")]
    NotStandard,
}

/// Move every column `k` layers up, modulo `p`, re-sorting the boxes.
pub fn translate_shape(lam: &Multipartition, k: i64, p: u32) -> Multipartition {
    let cols: Vec<Column> = lam
        .columns()
        .map(|c| Column {
            at: c.at.translated(k, p),
            len: c.len,
        })
        .collect();
    Multipartition::from_columns(&cols).expect("translation is a bijection of the floor")
}

/// `sigma_P`: every layer index drops by one, modulo `p`.
pub fn sigma_shape(lam: &Multipartition, p: u32) -> Multipartition {
    translate_shape(lam, -1, p)
}

/// Move a filling `k` layers up; each column keeps its entries.
pub fn translate_tableau(t: &Tableau, k: i64, p: u32) -> Tableau {
    t.relocated(|b| b.translated(k, p))
}

/// `sigma_T`: the filling follows its columns one layer down.
pub fn sigma_tableau(t: &Tableau, p: u32) -> Result<Tableau, OrbitError> {
    if !t.is_standard() {
        return Err(OrbitError::NotStandard);
    }
    Ok(translate_tableau(t, -1, p))
}

/// A pair is irreducible when its two columns stand in different layers.
pub fn is_reducible(lam: &Multipartition) -> bool {
    match lam.second_box() {
        None => true,
        Some(second) => second.i == lam.first_box().i,
    }
}

/// Orbit size predicted from the shape alone: `p / 2` for pairs in one
/// charge column with equal lengths half a turn apart, `p` otherwise.
pub fn predicted_orbit_size(lam: &Multipartition, p: u32) -> u32 {
    match *lam {
        Multipartition::Pair {
            first,
            second,
            diff: 0,
            ..
        } if p.is_multiple_of(2) && first.l == second.l && second.i - first.i == p / 2 => p / 2,
        _ => p,
    }
}

/// One `<sigma_P>`-orbit in `P_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitClass {
    representatives: Vec<Multipartition>,
    reducible: bool,
    original: Option<Multipartition>,
}

impl OrbitClass {
    pub fn of(lam: &Multipartition, p: u32) -> OrbitClass {
        let mut reps = alloc::vec![*lam];
        let mut cur = sigma_shape(lam, p);
        while cur != *lam {
            reps.push(cur);
            cur = sigma_shape(&cur, p);
        }
        reps.sort();
        let reducible = is_reducible(lam);
        let original = if reducible {
            reps.iter().copied().find(|s| s.layers().all(|i| i == 0))
        } else {
            None
        };
        OrbitClass {
            representatives: reps,
            reducible,
            original,
        }
    }

    /// Orbit members in sorted order.
    pub fn representatives(&self) -> &[Multipartition] {
        &self.representatives
    }

    /// The smallest member; used as the class label.
    pub fn canonical(&self) -> &Multipartition {
        &self.representatives[0]
    }

    pub fn size(&self) -> u32 {
        self.representatives.len() as u32
    }

    pub fn is_reducible(&self) -> bool {
        self.reducible
    }

    pub fn original(&self) -> Option<&Multipartition> {
        self.original.as_ref()
    }

    pub fn contains(&self, lam: &Multipartition) -> bool {
        self.representatives.binary_search(lam).is_ok()
    }

    /// Smallest `k >= 0` with `sigma^k(canonical) = lam`.
    pub fn shift_to(&self, lam: &Multipartition, p: u32) -> Option<u32> {
        let mut cur = *self.canonical();
        for k in 0..p {
            if cur == *lam {
                return Some(k);
            }
            cur = sigma_shape(&cur, p);
        }
        None
    }
}

pub fn canonical_representative(cls: &OrbitClass) -> Multipartition {
    *cls.canonical()
}

/// The member with every column in layer 0, defined for reducible classes.
pub fn original_representative(cls: &OrbitClass) -> Result<Multipartition, OrbitError> {
    cls.original
        .ok_or(OrbitError::NotReducible(*cls.canonical()))
}

/// All classes of `P_n`, sorted by canonical member.
pub fn orbit_classes(params: &ValidatedParams) -> Vec<OrbitClass> {
    let p = params.p();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for lam in enumerate_multipartitions(params) {
        if seen.contains(&lam) {
            continue;
        }
        let cls = OrbitClass::of(&lam, p);
        seen.extend(cls.representatives.iter().copied());
        out.push(cls);
    }
    out
}

/// Outcome of one checked condition.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConditionResult {
    pub checked: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
}

impl ConditionResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < 8 {
                self.witnesses.push(witness());
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DeviationKind {
    /// An orbit strictly smaller than `p`.
    OrbitSizeBelowP,
    /// `d(sigma_T t) != d(t)`, so `sigma_T(t^lambda) != t^{sigma lambda}`.
    PermutationNotPreserved,
    /// `sigma_P` breaks a comparison of the prime shape order.
    PosetAutomorphismFails,
}

/// A computed fact that contradicts a blanket claim about the shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deviation {
    pub kind: DeviationKind,
    pub count: usize,
    pub witnesses: Vec<String>,
}

/// Checks of the shift-automorphism conditions for `(sigma_TL, sigma_P, sigma_T)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShiftReport {
    /// `sigma_P` is an automorphism of the prime shape order. Failures are
    /// also listed under `deviations` and do not affect `passed`.
    pub poset_automorphism: ConditionResult,
    /// `sigma_T` maps `Std(lambda)` onto `Std(sigma_P lambda)` preserving degree.
    pub condition_a: ConditionResult,
    /// Basis labels go to basis labels of the shifted cell, and residue
    /// sequences shift layer-wise along with them.
    pub condition_b: ConditionResult,
    /// `sigma_T^k` fixes one tableau of a shape iff it fixes all of them.
    pub condition_c: ConditionResult,
    pub deviations: Vec<Deviation>,
}

impl ShiftReport {
    pub fn passed(&self) -> bool {
        self.condition_a.passed() && self.condition_b.passed() && self.condition_c.passed()
    }
}

pub fn verify_shift_conditions(params: &ValidatedParams) -> ShiftReport {
    let p = params.p();
    let shapes = enumerate_multipartitions(params);
    let mut report = ShiftReport::default();

    let shifted: Vec<Multipartition> = shapes.iter().map(|s| sigma_shape(s, p)).collect();
    for (x, sx) in shapes.iter().zip(&shifted) {
        for (y, sy) in shapes.iter().zip(&shifted) {
            let before = shape_leq(ShapeOrder::ShapePrime, x, y);
            let after = shape_leq(ShapeOrder::ShapePrime, sx, sy);
            report
                .poset_automorphism
                .record(before == after, || format!("{x} vs {y}"));
        }
    }

    let mut orbit_dev = Deviation {
        kind: DeviationKind::OrbitSizeBelowP,
        count: 0,
        witnesses: Vec::new(),
    };
    let mut perm_dev = Deviation {
        kind: DeviationKind::PermutationNotPreserved,
        count: 0,
        witnesses: Vec::new(),
    };

    let shift_residues = |seq: &mut Vec<crate::combinatorics::Residue>| {
        for res in seq.iter_mut() {
            res.i = (res.i + p - 1) % p;
        }
    };

    for (lam, slam) in shapes.iter().zip(&shifted) {
        let std = enumerate_standard_tableaux(lam);
        let target: BTreeMap<Tableau, i64> = enumerate_standard_tableaux(slam)
            .into_iter()
            .map(|t| {
                let d = degree_of_tableau(&t, params).expect("standard");
                (t, d)
            })
            .collect();
        let mut images = BTreeSet::new();
        for t in &std {
            let st = sigma_tableau(t, p).expect("standard");
            let deg = degree_of_tableau(t, params).expect("standard");
            let ok = target.get(&st) == Some(&deg);
            report.condition_a.record(ok, || format!("{t} -> {st}"));
            images.insert(st.clone());

            let mut expected = residue_sequence(t, params);
            shift_residues(&mut expected);
            let labels_ok = st.shape() == slam && residue_sequence(&st, params) == expected;
            report
                .condition_b
                .record(labels_ok, || format!("{t} -> {st}"));

            let (w, _) = permutation_of_tableau(t).expect("standard");
            let (sw, _) = permutation_of_tableau(&st).expect("standard");
            if w != sw {
                perm_dev.count += 1;
                if perm_dev.witnesses.len() < 8 {
                    perm_dev
                        .witnesses
                        .push(format!("d({t}) = {w} but d({st}) = {sw}"));
                }
            }
        }
        report.condition_a.record(images.len() == target.len(), || {
            format!("sigma_T is not onto Std({slam})")
        });

        for k in 1..p as i64 {
            let fixed = std
                .iter()
                .filter(|t| translate_tableau(t, -k, p) == **t)
                .count();
            report
                .condition_c
                .record(fixed == 0 || fixed == std.len(), || {
                    format!(
                        "sigma_T^{k} fixes {fixed} of {} tableaux of {lam}",
                        std.len()
                    )
                });
        }
    }

    for cls in orbit_classes(params) {
        if cls.size() < p {
            orbit_dev.count += 1;
            if orbit_dev.witnesses.len() < 8 {
                orbit_dev.witnesses.push(format!(
                    "[{}] has size {} < p = {p}",
                    cls.canonical(),
                    cls.size()
                ));
            }
        }
    }

    let poset_dev = Deviation {
        kind: DeviationKind::PosetAutomorphismFails,
        count: report.poset_automorphism.failures,
        witnesses: report.poset_automorphism.witnesses.clone(),
    };
    for dev in [orbit_dev, perm_dev, poset_dev] {
        if dev.count > 0 {
            report.deviations.push(dev);
        }
    }
    report
}

/// Pairs `(x, y)` of `P_n` on which `relation` and its `sigma_P` transport
/// disagree, in enumeration order.
pub fn shift_order_violations(
    params: &ValidatedParams,
    relation: impl Fn(&Multipartition, &Multipartition) -> bool,
) -> Vec<(Multipartition, Multipartition)> {
    let p = params.p();
    let shapes = enumerate_multipartitions(params);
    let shifted: Vec<Multipartition> = shapes.iter().map(|s| sigma_shape(s, p)).collect();
    let mut out = Vec::new();
    for (x, sx) in shapes.iter().zip(&shifted) {
        for (y, sy) in shapes.iter().zip(&shifted) {
            if relation(x, y) != relation(sx, sy) {
                out.push((*x, *y));
            }
        }
    }
    out
}

/// Whether `sigma_T(t^lambda)` is `t^{sigma_P lambda}`.
pub fn shift_preserves_initial_tableau(lam: &Multipartition, p: u32) -> bool {
    translate_tableau(&initial_tableau(lam), -1, p) == initial_tableau(&sigma_shape(lam, p))
}
