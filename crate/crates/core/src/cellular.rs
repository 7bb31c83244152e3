//! Symbolic cell data.
//!
//! Basis elements are labels `C^lambda_{s,t}`; data obtained by a quotient
//! carry formal sums of such labels with coefficients in `Z[zeta_p]`. The
//! small algebra `R[x]/(x^m) + R[y]/(y^m)` is the one place where the axioms
//! are checked by actual multiplication.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::combinatorics::{
    degree_of_tableau, enumerate_multipartitions, enumerate_standard_tableaux, Multipartition,
    Tableau,
};
use crate::orbits::{orbit_classes, translate_tableau, ConditionResult, OrbitClass};
use crate::orders::{orbit_leq_p, shape_leq, verify_table, PosetReport, RelationTable, ShapeOrder};
use crate::params::ValidatedParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellularError {
    #[error("NotPlain: the input datum must have one unit-coefficient label per basis element")]
    NotPlain,
    #[error("ShiftConditionViolated: condition ({condition}) fails at {witness}")]
    ShiftConditionViolated { condition: char, witness: String },
    #[error("OrderMismatch: the shift has order {shift} but coefficients live in Z[zeta_{datum}]")]
    OrderMismatch { shift: u32, datum: u32 },
}

/// `Phi_n` as coefficients from the constant term up.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = divide_monic(&num, &cyclotomic_polynomial(d)).0;
        }
    }
    num
}

/// Quotient and remainder by a monic divisor.
fn divide_monic(a: &[i64], b: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() <= db {
        rem.resize(db, 0);
        return (Vec::new(), rem);
    }
    let mut quot = vec![0i64; rem.len() - db];
    for k in (db..rem.len()).rev() {
        let c = rem[k];
        if c != 0 {
            quot[k - db] = c;
            for (j, &bj) in b.iter().enumerate() {
                rem[k - db + j] -= c * bj;
            }
        }
    }
    rem.truncate(db);
    (quot, rem)
}

/// An element of `Z[zeta]` for a primitive `order`-th root of unity `zeta`,
/// stored in the power basis `1, zeta, ..., zeta^(phi(order) - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycInt {
    order: u32,
    coeffs: Vec<i64>,
}

impl CycInt {
    pub fn from_poly(order: u32, poly: &[i64]) -> Self {
        let phi = cyclotomic_polynomial(order);
        let (_, coeffs) = divide_monic(poly, &phi);
        CycInt { order, coeffs }
    }

    pub fn from_int(order: u32, c: i64) -> Self {
        CycInt::from_poly(order, &[c])
    }

    pub fn zero(order: u32) -> Self {
        CycInt::from_int(order, 0)
    }

    pub fn one(order: u32) -> Self {
        CycInt::from_int(order, 1)
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![0; e + 1];
        poly[e] = 1;
        CycInt::from_poly(order, &poly)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        *self == CycInt::one(self.order)
    }

    fn zip(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
        CycInt {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for CycInt {
    type Output = CycInt;
    fn add(self, rhs: CycInt) -> CycInt {
        self.zip(&rhs, |a, b| a + b)
    }
}

impl Sub for CycInt {
    type Output = CycInt;
    fn sub(self, rhs: CycInt) -> CycInt {
        self.zip(&rhs, |a, b| a - b)
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for CycInt {
    type Output = CycInt;
    fn mul(self, rhs: CycInt) -> CycInt {
        assert_eq!(self.order, rhs.order, "cyclotomic orders differ");
        let mut poly = vec![0i64; self.coeffs.len() + rhs.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                poly[i + j] += a * b;
            }
        }
        CycInt::from_poly(self.order, &poly)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => f.write_str("z")?,
                _ => write!(f, "{a}*z")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The label of `C^shape_{s,t}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisLabel {
    pub shape: Multipartition,
    pub s: Tableau,
    pub t: Tableau,
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C[{}]({} ; {})", self.shape, self.s, self.t)
    }
}

/// A `Z[zeta]`-linear combination of basis labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalSum {
    order: u32,
    terms: BTreeMap<BasisLabel, CycInt>,
}

impl FormalSum {
    pub fn new(order: u32) -> Self {
        FormalSum {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(order: u32, label: BasisLabel) -> Self {
        let mut sum = FormalSum::new(order);
        sum.add_term(label, CycInt::one(order));
        sum
    }

    pub fn add_term(&mut self, label: BasisLabel, coeff: CycInt) {
        let slot = self
            .terms
            .entry(label)
            .or_insert_with(|| CycInt::zero(coeff.order()));
        *slot = slot.clone() + coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisLabel, &CycInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, label: &BasisLabel) -> Option<&CycInt> {
        self.terms.get(label)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (label, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "({c}) {label}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DatumKind {
    /// `TL(r,1,n)` with the prime shape order.
    R1n,
    /// The specialised datum on orbit classes.
    Rpn,
    /// Output of the generic shift-automorphism quotient.
    SkewQuotient,
}

/// A cell: a shape (the orbit representative for quotient data) and, for
/// skew quotients, the character index `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellLabel {
    pub shape: Multipartition,
    pub k: Option<u32>,
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            None => write!(f, "{}", self.shape),
            Some(k) => write!(f, "{}#{k}", self.shape),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub label: CellLabel,
    /// Shapes merged into this cell (a single shape for `R1n`).
    pub members: Vec<Multipartition>,
    pub tableaux: Vec<Tableau>,
    pub degrees: Vec<i64>,
}

/// `C^{cell}_{tableaux[s], tableaux[t]}` and what it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub cell: usize,
    pub s: usize,
    pub t: usize,
    pub sum: FormalSum,
}

#[derive(Debug, Clone)]
pub struct CellDatum {
    pub kind: DatumKind,
    pub params: ValidatedParams,
    pub cells: Vec<Cell>,
    /// `order.get(i, j)` iff `cells[i] <= cells[j]`.
    pub order: RelationTable,
    pub basis: Vec<BasisElement>,
    /// Poset involution on cell indices; tableau bijections are identities.
    pub involution: Vec<usize>,
    pub diagnostics: Vec<String>,
}

impl CellDatum {
    pub fn basis_count(&self) -> usize {
        self.basis.len()
    }

    pub fn cell_index(&self, label: &CellLabel) -> Option<usize> {
        self.cells.iter().position(|c| c.label == *label)
    }

    pub fn involution_is_trivial(&self) -> bool {
        self.involution.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn poset_report(&self) -> PosetReport {
        verify_table(&self.order)
    }

    /// Violations of the counting and involution invariants.
    pub fn structural_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let squares: usize = self.cells.iter().map(|c| c.tableaux.len().pow(2)).sum();
        if squares != self.basis.len() {
            out.push(format!(
                "basis has {} elements but the tableau squares sum to {squares}",
                self.basis.len()
            ));
        }
        for (i, &j) in self.involution.iter().enumerate() {
            if self.involution.get(j) != Some(&i) {
                out.push(format!(
                    "involution is not an involution at {}",
                    self.cells[i].label
                ));
            } else if self.cells[i].tableaux.len() != self.cells[j].tableaux.len() {
                out.push(format!("no tableau bijection at {}", self.cells[i].label));
            }
        }
        for (i, c) in self.cells.iter().enumerate() {
            if c.degrees.len() != c.tableaux.len() {
                out.push(format!("degree table incomplete at {}", c.label));
            }
            for j in 0..self.cells.len() {
                if self.order.get(i, j) && !self.order.get(self.involution[i], self.involution[j]) {
                    out.push(format!(
                        "involution does not preserve {} <= {}",
                        c.label, self.cells[j].label
                    ));
                }
            }
        }
        out
    }
}

fn plain_basis(
    order: u32,
    cell: usize,
    shape: &Multipartition,
    std: &[Tableau],
) -> Vec<BasisElement> {
    let mut out = Vec::with_capacity(std.len() * std.len());
    for (si, s) in std.iter().enumerate() {
        for (ti, t) in std.iter().enumerate() {
            out.push(BasisElement {
                cell,
                s: si,
                t: ti,
                sum: FormalSum::single(
                    order,
                    BasisLabel {
                        shape: *shape,
                        s: s.clone(),
                        t: t.clone(),
                    },
                ),
            });
        }
    }
    out
}

/// The graded cellular datum of `TL(r,1,n)` on `(P_n, prime shape order)`.
/// Coefficients are taken in `Z[zeta_p]` so the datum can be fed to the
/// layer-shift quotient.
pub fn build_datum_r1n(params: &ValidatedParams) -> CellDatum {
    let order = params.p();
    let shapes = enumerate_multipartitions(params);
    let mut cells = Vec::with_capacity(shapes.len());
    let mut basis = Vec::new();
    for (idx, shape) in shapes.iter().enumerate() {
        let std = enumerate_standard_tableaux(shape);
        let degrees = std
            .iter()
            .map(|t| degree_of_tableau(t, params).expect("standard"))
            .collect();
        basis.extend(plain_basis(order, idx, shape, &std));
        cells.push(Cell {
            label: CellLabel {
                shape: *shape,
                k: None,
            },
            members: vec![*shape],
            tableaux: std,
            degrees,
        });
    }
    let table = RelationTable::build(&shapes, |x, y| shape_leq(ShapeOrder::ShapePrime, x, y));
    CellDatum {
        kind: DatumKind::R1n,
        params: params.clone(),
        involution: (0..cells.len()).collect(),
        cells,
        order: table,
        basis,
        diagnostics: Vec::new(),
    }
}

/// A shift automorphism, given by its action on cell labels and tableaux.
pub trait ShiftAutomorphism {
    /// Order of the algebra automorphism.
    fn order(&self) -> u32;
    fn shift_shape(&self, lam: &Multipartition) -> Multipartition;
    fn shift_tableau(&self, t: &Tableau) -> Tableau;

    /// Action on basis labels: `C^lam_{s,t} -> C^{sigma lam}_{sigma s, sigma t}`.
    fn shift_label(&self, label: &BasisLabel) -> BasisLabel {
        BasisLabel {
            shape: self.shift_shape(&label.shape),
            s: self.shift_tableau(&label.s),
            t: self.shift_tableau(&label.t),
        }
    }
}

/// The layer shift of `TL(r,1,n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayerShift {
    pub p: u32,
}

impl ShiftAutomorphism for LayerShift {
    fn order(&self) -> u32 {
        self.p
    }

    fn shift_shape(&self, lam: &Multipartition) -> Multipartition {
        crate::orbits::sigma_shape(lam, self.p)
    }

    fn shift_tableau(&self, t: &Tableau) -> Tableau {
        translate_tableau(t, -1, self.p)
    }
}

fn power<T: Clone>(x: &T, k: u32, f: impl Fn(&T) -> T) -> T {
    let mut cur = x.clone();
    for _ in 0..k {
        cur = f(&cur);
    }
    cur
}

/// The skew cellular datum of the fixed-point subalgebra under a shift
/// automorphism of a plain cellular datum.
pub fn quotient_skew_datum(
    datum: &CellDatum,
    shift: &impl ShiftAutomorphism,
) -> Result<CellDatum, CellularError> {
    let p = shift.order();
    let coeff_order = datum.basis.first().map_or(p, |b| b.sum.order());
    if coeff_order != p {
        return Err(CellularError::OrderMismatch {
            shift: p,
            datum: coeff_order,
        });
    }
    if datum
        .basis
        .iter()
        .any(|b| b.sum.len() != 1 || !b.sum.terms().all(|(_, c)| c.is_one()))
    {
        return Err(CellularError::NotPlain);
    }
    let index: BTreeMap<Multipartition, usize> = datum
        .cells
        .iter()
        .enumerate()
        .map(|(i, c)| (c.label.shape, i))
        .collect();
    let tableau_index: Vec<BTreeMap<&Tableau, usize>> = datum
        .cells
        .iter()
        .map(|c| c.tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect())
        .collect();
    let violated = |condition, witness: String| {
        Err(CellularError::ShiftConditionViolated { condition, witness })
    };

    // (a) and the label part of (b)
    let mut shifted_cell = vec![0usize; datum.cells.len()];
    for (ci, cell) in datum.cells.iter().enumerate() {
        let target = shift.shift_shape(&cell.label.shape);
        let Some(&ti) = index.get(&target) else {
            return violated('a', format!("{} has no image cell", cell.label));
        };
        shifted_cell[ci] = ti;
        for (k, t) in cell.tableaux.iter().enumerate() {
            let st = shift.shift_tableau(t);
            match tableau_index[ti].get(&st) {
                Some(&j) if datum.cells[ti].degrees[j] == cell.degrees[k] => {}
                Some(_) => return violated('a', format!("degree changes at {t}")),
                None => return violated('a', format!("{t} leaves Std({target})")),
            }
        }
        if cell.tableaux.len() != datum.cells[ti].tableaux.len() {
            return violated('b', format!("{} and its image differ in size", cell.label));
        }
    }
    // (c)
    for cell in &datum.cells {
        for k in 1..p {
            let fixed = cell
                .tableaux
                .iter()
                .filter(|t| power(*t, k, |x| shift.shift_tableau(x)) == **t)
                .count();
            if fixed != 0 && fixed != cell.tableaux.len() {
                return violated('c', format!("sigma_T^{k} on Std({})", cell.label));
            }
        }
    }

    let mut diagnostics = Vec::new();
    let mut seen = vec![false; datum.cells.len()];
    let mut cells = Vec::new();
    let mut basis = Vec::new();
    let mut rep_cells = Vec::new();
    let mut involution = Vec::new();
    let zetas: Vec<CycInt> = (0..p as i64).map(|e| CycInt::zeta_pow(p, e)).collect();

    for start in 0..datum.cells.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut cur = shifted_cell[start];
        while cur != start {
            seen[cur] = true;
            orbit.push(cur);
            cur = shifted_cell[cur];
        }
        let o_lam = orbit.len() as u32;
        let cell = &datum.cells[start];
        let sigma_lam = |t: &Tableau| power(t, o_lam, |x| shift.shift_tableau(x));

        // orbits of sigma_lambda on T(lambda), represented by first occurrence
        let mut covered = vec![false; cell.tableaux.len()];
        let mut reps = Vec::new();
        let mut o_t = 0u32;
        for (i, t) in cell.tableaux.iter().enumerate() {
            if covered[i] {
                continue;
            }
            reps.push(i);
            let mut size = 0;
            let mut x = t.clone();
            loop {
                covered[tableau_index[start][&x]] = true;
                size += 1;
                x = sigma_lam(&x);
                if x == *t {
                    break;
                }
            }
            if o_t == 0 {
                o_t = size;
            } else if o_t != size {
                return violated('c', format!("unequal tableau orbits in {}", cell.label));
            }
        }
        if o_lam < p {
            diagnostics.push(format!(
                "PAPER-CLAIM-DEVIATION: orbit of {} has size {o_lam} < p = {p} (o_T = {o_t})",
                cell.label
            ));
        }
        let step = p / o_t;
        let rep_tableaux: Vec<Tableau> = reps.iter().map(|&i| cell.tableaux[i].clone()).collect();
        let rep_degrees: Vec<i64> = reps.iter().map(|&i| cell.degrees[i]).collect();
        let first_new = cells.len();
        for k in 0..o_t {
            let cell_idx = cells.len();
            for (si, s) in rep_tableaux.iter().enumerate() {
                for (ti, t) in rep_tableaux.iter().enumerate() {
                    let mut sum = FormalSum::new(p);
                    let mut tj = t.clone();
                    for j in 0..o_t {
                        let coeff = zetas[((step * k * j) % p) as usize].clone();
                        let mut label = BasisLabel {
                            shape: cell.label.shape,
                            s: s.clone(),
                            t: tj.clone(),
                        };
                        for _ in 0..p {
                            sum.add_term(label.clone(), coeff.clone());
                            label = shift.shift_label(&label);
                        }
                        tj = sigma_lam(&tj);
                    }
                    basis.push(BasisElement {
                        cell: cell_idx,
                        s: si,
                        t: ti,
                        sum,
                    });
                }
            }
            cells.push(Cell {
                label: CellLabel {
                    shape: cell.label.shape,
                    k: Some(k),
                },
                members: orbit.iter().map(|&c| datum.cells[c].label.shape).collect(),
                tableaux: rep_tableaux.clone(),
                degrees: rep_degrees.clone(),
            });
            rep_cells.push(orbit.clone());
            involution.push(first_new + ((o_t - k) % o_t) as usize);
        }
    }

    // (lam, k) <= (mu, l) iff equal, or sigma^j(lam) < mu for some j
    let mut order = RelationTable::empty(cells.len());
    for (a, orbit_a) in rep_cells.iter().enumerate() {
        for (b, orbit_b) in rep_cells.iter().enumerate() {
            let mu = orbit_b[0];
            let below = orbit_a.iter().any(|&x| datum.order.strictly_below(x, mu));
            if a == b || below {
                order.set(a, b);
            }
        }
    }

    let nontrivial: Vec<String> = involution
        .iter()
        .enumerate()
        .filter(|(i, j)| i != *j)
        .map(|(i, _)| format!("{}", cells[i].label))
        .collect();
    if !nontrivial.is_empty() {
        diagnostics.push(format!(
            "PAPER-CLAIM-DEVIATION: nontrivial poset involution on {}",
            nontrivial.join(", ")
        ));
    }

    Ok(CellDatum {
        kind: DatumKind::SkewQuotient,
        params: datum.params.clone(),
        cells,
        order,
        basis,
        involution,
        diagnostics,
    })
}

/// Tableau classes of a class representative: orbits of the stabiliser
/// `sigma_T^{o_lambda}` on `Std(lambda)`, each represented by its first
/// member in enumeration order.
pub fn tableau_class_representatives(cls: &OrbitClass, p: u32) -> Vec<Tableau> {
    let lam = cls.canonical();
    let o = cls.size() as i64;
    let std = enumerate_standard_tableaux(lam);
    let mut covered = BTreeSet::new();
    let mut reps = Vec::new();
    for t in std {
        if covered.contains(&t) {
            continue;
        }
        let mut x = t.clone();
        loop {
            covered.insert(x.clone());
            x = translate_tableau(&x, -o, p);
            if x == t {
                break;
            }
        }
        reps.push(t);
    }
    reps
}

/// The cellular datum of `TL(r,p,n)` on orbit classes, with basis elements
/// `sum over distinct mu in [lambda]` of `C^mu` on the translated tableaux.
pub fn build_datum_rpn(params: &ValidatedParams) -> CellDatum {
    let p = params.p();
    let classes = orbit_classes(params);
    let mut cells = Vec::with_capacity(classes.len());
    let mut basis = Vec::new();
    for (idx, cls) in classes.iter().enumerate() {
        let lam = *cls.canonical();
        let reps = tableau_class_representatives(cls, p);
        let degrees = reps
            .iter()
            .map(|t| degree_of_tableau(t, params).expect("standard"))
            .collect();
        let shifts: Vec<i64> = (0..cls.size() as i64).collect();
        for (si, s) in reps.iter().enumerate() {
            for (ti, t) in reps.iter().enumerate() {
                let mut sum = FormalSum::new(p);
                for &k in &shifts {
                    let ss = translate_tableau(s, -k, p);
                    sum.add_term(
                        BasisLabel {
                            shape: *ss.shape(),
                            t: translate_tableau(t, -k, p),
                            s: ss,
                        },
                        CycInt::one(p),
                    );
                }
                basis.push(BasisElement {
                    cell: idx,
                    s: si,
                    t: ti,
                    sum,
                });
            }
        }
        cells.push(Cell {
            label: CellLabel {
                shape: lam,
                k: None,
            },
            members: cls.representatives().to_vec(),
            tableaux: reps,
            degrees,
        });
    }
    let mut diagnostics = Vec::new();
    for (cls, cell) in classes.iter().zip(&cells) {
        let full = enumerate_standard_tableaux(cls.canonical()).len();
        if cell.tableaux.len() != full {
            diagnostics.push(format!(
                "class [{}] of size {} has {} tableau classes for {} standard tableaux",
                cls.canonical(),
                cls.size(),
                cell.tableaux.len(),
                full
            ));
        }
    }
    CellDatum {
        kind: DatumKind::Rpn,
        params: params.clone(),
        involution: (0..cells.len()).collect(),
        order: RelationTable::build(&classes, orbit_leq_p),
        cells,
        basis,
        diagnostics,
    }
}

/// Structural comparison of two data. Cells are matched by representative
/// shape and character index (absent index = 0).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DatumComparison {
    pub labels_equal: bool,
    pub tableau_counts_equal: bool,
    pub bases_equal: bool,
    pub orders_equal: bool,
    pub differences: Vec<String>,
}

impl DatumComparison {
    pub fn identical(&self) -> bool {
        self.same_cells_and_bases() && self.orders_equal
    }

    pub fn same_cells_and_bases(&self) -> bool {
        self.labels_equal && self.tableau_counts_equal && self.bases_equal
    }
}

fn basis_sums(d: &CellDatum) -> Vec<BTreeSet<&FormalSum>> {
    let mut v = vec![BTreeSet::new(); d.cells.len()];
    for e in &d.basis {
        v[e.cell].insert(&e.sum);
    }
    v
}

pub fn compare_data(a: &CellDatum, b: &CellDatum) -> DatumComparison {
    let key = |c: &Cell| (c.label.shape, c.label.k.unwrap_or(0));
    let map = |d: &CellDatum| -> BTreeMap<(Multipartition, u32), usize> {
        d.cells
            .iter()
            .enumerate()
            .map(|(i, c)| (key(c), i))
            .collect()
    };
    let (ma, mb) = (map(a), map(b));
    let mut out = DatumComparison {
        labels_equal: true,
        tableau_counts_equal: true,
        bases_equal: true,
        orders_equal: true,
        differences: Vec::new(),
    };
    let note = |out: &mut DatumComparison, msg: String| {
        if out.differences.len() < 32 {
            out.differences.push(msg);
        }
    };
    for k in ma.keys().filter(|k| !mb.contains_key(k)) {
        out.labels_equal = false;
        note(
            &mut out,
            format!("cell {}#{} only in the first datum", k.0, k.1),
        );
    }
    for k in mb.keys().filter(|k| !ma.contains_key(k)) {
        out.labels_equal = false;
        note(
            &mut out,
            format!("cell {}#{} only in the second datum", k.0, k.1),
        );
    }
    let (sa, sb) = (basis_sums(a), basis_sums(b));
    let common: Vec<(usize, usize)> = ma
        .iter()
        .filter_map(|(k, &i)| mb.get(k).map(|&j| (i, j)))
        .collect();
    for &(i, j) in &common {
        let (ca, cb) = (&a.cells[i], &b.cells[j]);
        if ca.tableaux.len() != cb.tableaux.len() {
            out.tableau_counts_equal = false;
            note(
                &mut out,
                format!(
                    "cell {}: {} vs {} tableaux",
                    ca.label,
                    ca.tableaux.len(),
                    cb.tableaux.len()
                ),
            );
        }
        if sa[i] != sb[j] {
            out.bases_equal = false;
            note(&mut out, format!("cell {}: basis sums differ", ca.label));
        }
    }
    for &(i1, j1) in &common {
        for &(i2, j2) in &common {
            if a.order.get(i1, i2) != b.order.get(j1, j2) {
                out.orders_equal = false;
                note(
                    &mut out,
                    format!(
                        "order differs on {} vs {}",
                        a.cells[i1].label, a.cells[i2].label
                    ),
                );
            }
        }
    }
    out
}

/// Orientation of the order on `Z_2 x {0..m-1}` in the baby example.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BabyOrder {
    /// `(i, k1) <= (i, k2)` iff `k1 <= k2`, as printed.
    Printed,
    /// `(i, k1) <= (i, k2)` iff `k1 >= k2`: higher powers sit lower.
    Reversed,
}

/// Axiom checks for `A = R[x]/(x^m) + R[y]/(y^m)` with `C^{(i,k)}_{kk}`
/// equal to `x^k` or `y^k`, graded by `deg x = deg y = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BabyReport {
    pub m: usize,
    pub orientation: BabyOrder,
    pub c1: ConditionResult,
    pub c2: ConditionResult,
    pub c3: ConditionResult,
    pub c4: ConditionResult,
    pub involution: ConditionResult,
}

impl BabyReport {
    pub fn passed(&self) -> bool {
        self.c1.passed()
            && self.c2.passed()
            && self.c3.passed()
            && self.c4.passed()
            && self.involution.passed()
    }
}

struct Baby {
    m: usize,
}

impl Baby {
    fn dim(&self) -> usize {
        2 * self.m
    }

    /// Coordinates: `x^k` at `k`, `y^k` at `m + k`.
    fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let m = self.m;
        let mut out = vec![0; 2 * m];
        for half in 0..2 {
            for i in 0..m {
                for j in 0..m - i {
                    out[half * m + i + j] += a[half * m + i] * b[half * m + j];
                }
            }
        }
        out
    }

    /// Anti-automorphism exchanging `x` and `y`.
    fn star(&self, a: &[i64]) -> Vec<i64> {
        let m = self.m;
        let mut out = a[m..].to_vec();
        out.extend_from_slice(&a[..m]);
        out
    }

    /// Degree of a vector if homogeneous.
    fn degree(&self, a: &[i64]) -> Option<Option<usize>> {
        let degs: BTreeSet<usize> = a
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(idx, _)| 2 * (idx % self.m))
            .collect();
        match degs.len() {
            0 => Some(None),
            1 => Some(degs.into_iter().next()),
            _ => None,
        }
    }
}

pub fn baby_example_check(m: usize, orientation: BabyOrder) -> BabyReport {
    assert!(m >= 1, "m must be positive");
    let alg = Baby { m };
    let dim = alg.dim();
    // cells (i, k) indexed i * m + k, one tableau `k` each
    let cell = |c: usize| (c / m, c % m);
    let leq = |a: usize, b: usize| {
        let ((i1, k1), (i2, k2)) = (cell(a), cell(b));
        i1 == i2
            && match orientation {
                BabyOrder::Printed => k1 <= k2,
                BabyOrder::Reversed => k1 >= k2,
            }
    };
    let iota = |c: usize| {
        let (i, k) = cell(c);
        ((i + 1) % 2) * m + k
    };
    let basis: Vec<Vec<i64>> = (0..dim)
        .map(|c| {
            let mut v = vec![0; dim];
            v[c] = 1;
            v
        })
        .collect();
    let tableau_degree = |c: usize| cell(c).1;

    let mut report = BabyReport {
        m,
        orientation,
        c1: ConditionResult::default(),
        c2: ConditionResult::default(),
        c3: ConditionResult::default(),
        c4: ConditionResult::default(),
        involution: ConditionResult::default(),
    };

    for (c, v) in basis.iter().enumerate() {
        let want = 2 * tableau_degree(c);
        report.c1.record(alg.degree(v) == Some(Some(want)), || {
            format!("C{:?} is not homogeneous of degree {want}", cell(c))
        });
    }

    // the basis matrix must be invertible over Z
    let det = integer_determinant(&basis);
    report
        .c2
        .record(det.abs() == 1, || format!("basis determinant {det}"));

    // coordinates in the basis: the basis is the monomial basis, checked above
    let coords = |v: &[i64]| v.to_vec();
    for a in &basis {
        for (c, bc) in basis.iter().enumerate() {
            // left action: a C = r C + lower, r independent of T (T(c) = {k})
            for (side, prod) in [
                ("left", alg.mul(a, bc)),
                ("right", alg.mul(bc, a)),
            ] {
                let x = coords(&prod);
                for (d, &coef) in x.iter().enumerate() {
                    if d == c || coef == 0 {
                        continue;
                    }
                    let lower = leq(d, c);
                    report.c3.record(lower, || {
                        format!(
                            "{side} product with C{:?} has a term in C{:?} outside the lower cells",
                            cell(c),
                            cell(d)
                        )
                    });
                }
                report.c3.record(true, String::new);
            }
        }
    }

    for (ca, a) in basis.iter().enumerate() {
        let img = alg.star(a);
        let want = &basis[iota(ca)];
        report.c4.record(img == *want, || {
            format!("*(C{:?}) is not C{:?}", cell(ca), cell(iota(ca)))
        });
        for b in &basis {
            let lhs = alg.star(&alg.mul(a, b));
            let rhs = alg.mul(&alg.star(b), &alg.star(a));
            report
                .c4
                .record(lhs == rhs, || "star is not anti-multiplicative".into());
        }
    }
    let unit: Vec<i64> = (0..dim).map(|i| (i % m == 0) as i64).collect();
    report
        .c4
        .record(alg.star(&unit) == unit, || "star moves the unit".into());

    for a in 0..dim {
        report
            .involution
            .record(iota(iota(a)) == a, || format!("iota^2 moves {:?}", cell(a)));
        for b in 0..dim {
            report
                .involution
                .record(leq(a, b) == leq(iota(a), iota(b)), || {
                    format!("iota breaks {:?} <= {:?}", cell(a), cell(b))
                });
        }
    }
    report
}

/// Bareiss fraction-free determinant.
fn integer_determinant(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

/// `n!`-free count of basis elements without building the datum.
pub fn r1n_basis_count(params: &ValidatedParams) -> u128 {
    enumerate_multipartitions(params)
        .iter()
        .map(|s| crate::combinatorics::standard_tableau_count(s).pow(2))
        .sum()
}
