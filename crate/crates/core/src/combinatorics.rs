//! 3D multipartitions with at most two non-empty single-column components,
//! their nodes, residues and tableaux.
//!
//! A floor box is addressed by `(i, l)`: `i` is the layer (`0..p`) and `l`
//! the charge column (`0..d`). Every component is a single column, so a node
//! is determined by its row `a >= 1` and its floor box.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

use crate::params::ValidatedParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("NotStandard: tableau entries must increase up every column")]
    NotStandard,
    #[error("SequenceTooShort: residue sequence of length {len} (need at least 2)")]
    SequenceTooShort { len: usize },
    #[error("InvalidShape: {0}")]
    InvalidShape(&'static str),
    #[error("InvalidFilling: {0}")]
    InvalidFilling(&'static str),
}

/// A box `(i, l)` on the `p x d` floor.
///
/// `Ord` is the total floor order: charge column first, then layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FloorIndex {
    pub i: u32,
    pub l: u32,
}

impl FloorIndex {
    pub const fn new(i: u32, l: u32) -> Self {
        FloorIndex { i, l }
    }

    pub fn in_bounds(&self, params: &ValidatedParams) -> bool {
        self.i < params.p() && self.l < params.d()
    }

    /// Move `k` layers up (negative `k` moves down), wrapping modulo `p`.
    pub fn translated(&self, k: i64, p: u32) -> FloorIndex {
        FloorIndex {
            i: (self.i as i64 + k).rem_euclid(p as i64) as u32,
            l: self.l,
        }
    }

    /// All floor boxes in total floor order.
    pub fn all(params: &ValidatedParams) -> Vec<FloorIndex> {
        let mut out = Vec::with_capacity(params.r() as usize);
        for l in 0..params.d() {
            for i in 0..params.p() {
                out.push(FloorIndex { i, l });
            }
        }
        out
    }
}

impl Ord for FloorIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.l, self.i).cmp(&(other.l, other.i))
    }
}

impl PartialOrd for FloorIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FloorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.l)
    }
}

/// The node in row `row` of the column standing on `floor`.
///
/// `Ord` is the node order: row, then charge column, then layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub row: u32,
    pub floor: FloorIndex,
}

impl Node {
    pub const fn new(row: u32, floor: FloorIndex) -> Self {
        Node { row, floor }
    }
}

pub fn node_order_cmp(x: &Node, y: &Node) -> Ordering {
    x.cmp(y)
}

/// A vertex `(i, j)` of the quiver. `j` is reduced modulo `e`, or a plain
/// integer when `e = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue {
    pub i: u32,
    pub j: i64,
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

pub type ResidueSequence = Vec<Residue>;

pub fn residue_of_node(node: &Node, params: &ValidatedParams) -> Residue {
    let j = 1 - node.row as i64 + params.charge(node.floor.l);
    Residue {
        i: node.floor.i,
        j: params.reduce(j),
    }
}

/// A non-empty column of a multipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Column {
    pub at: FloorIndex,
    pub len: u32,
}

/// A multipartition of `n` in `P_n`: one column, or two columns on distinct
/// boxes. For a pair, `first < second` in the floor order and
/// `diff = len(first) - len(second)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Multipartition {
    Single {
        n: u32,
        at: FloorIndex,
    },
    Pair {
        n: u32,
        first: FloorIndex,
        second: FloorIndex,
        diff: i32,
    },
}

impl Multipartition {
    pub fn single(n: u32, at: FloorIndex) -> Result<Self, CombinatoricsError> {
        if n == 0 {
            return Err(CombinatoricsError::InvalidShape("n must be positive"));
        }
        Ok(Multipartition::Single { n, at })
    }

    pub fn pair(
        n: u32,
        first: FloorIndex,
        second: FloorIndex,
        diff: i32,
    ) -> Result<Self, CombinatoricsError> {
        if first >= second {
            return Err(CombinatoricsError::InvalidShape(
                "pair boxes must be strictly increasing in floor order",
            ));
        }
        if n < 2 || diff.unsigned_abs() > n - 2 {
            return Err(CombinatoricsError::InvalidShape(
                "both columns of a pair must be non-empty",
            ));
        }
        if (n as i64 - diff as i64).rem_euclid(2) != 0 {
            return Err(CombinatoricsError::InvalidShape(
                "diff must have the parity of n",
            ));
        }
        Ok(Multipartition::Pair {
            n,
            first,
            second,
            diff,
        })
    }

    /// Build from up to two columns in any order; empty columns are dropped.
    pub fn from_columns(cols: &[Column]) -> Result<Self, CombinatoricsError> {
        let mut live: Vec<Column> = cols.iter().copied().filter(|c| c.len > 0).collect();
        live.sort_by_key(|a| a.at);
        match live.as_slice() {
            [c] => Multipartition::single(c.len, c.at),
            [a, b] => Multipartition::pair(a.len + b.len, a.at, b.at, a.len as i32 - b.len as i32),
            _ => Err(CombinatoricsError::InvalidShape(
                "a shape in P_n has one or two non-empty columns",
            )),
        }
    }

    pub fn n(&self) -> u32 {
        match *self {
            Multipartition::Single { n, .. } | Multipartition::Pair { n, .. } => n,
        }
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, Multipartition::Pair { .. })
    }

    /// `#first - #second` for pairs; `n` for a single column.
    pub fn diff(&self) -> i32 {
        match *self {
            Multipartition::Single { n, .. } => n as i32,
            Multipartition::Pair { diff, .. } => diff,
        }
    }

    pub fn first_box(&self) -> FloorIndex {
        match *self {
            Multipartition::Single { at, .. } => at,
            Multipartition::Pair { first, .. } => first,
        }
    }

    pub fn second_box(&self) -> Option<FloorIndex> {
        match *self {
            Multipartition::Single { .. } => None,
            Multipartition::Pair { second, .. } => Some(second),
        }
    }

    /// Non-empty columns in floor order.
    pub fn columns(&self) -> impl Iterator<Item = Column> {
        let (a, b) = match *self {
            Multipartition::Single { n, at } => (Column { at, len: n }, None),
            Multipartition::Pair {
                n,
                first,
                second,
                diff,
            } => {
                let len1 = ((n as i32 + diff) / 2) as u32;
                (
                    Column {
                        at: first,
                        len: len1,
                    },
                    Some(Column {
                        at: second,
                        len: n - len1,
                    }),
                )
            }
        };
        core::iter::once(a).chain(b)
    }

    pub fn column_count(&self) -> usize {
        if self.is_pair() {
            2
        } else {
            1
        }
    }

    /// Number of nodes standing on `at` (zero if that box is empty).
    pub fn column_len(&self, at: FloorIndex) -> u32 {
        self.columns().find(|c| c.at == at).map_or(0, |c| c.len)
    }

    pub fn contains_node(&self, node: &Node) -> bool {
        node.row >= 1 && node.row <= self.column_len(node.floor)
    }

    /// All nodes sorted by the node order; position `k` holds `t^lambda(k+1)`.
    pub fn nodes_in_order(&self) -> Vec<Node> {
        let mut nodes: Vec<Node> = self
            .columns()
            .flat_map(|c| (1..=c.len).map(move |row| Node::new(row, c.at)))
            .collect();
        nodes.sort();
        nodes
    }

    pub fn in_bounds(&self, params: &ValidatedParams) -> bool {
        self.n() == params.n() && self.columns().all(|c| c.at.in_bounds(params))
    }

    /// Distinct layers occupied by the shape.
    pub fn layers(&self) -> impl Iterator<Item = u32> {
        let first = self.first_box().i;
        let second = self.second_box().map(|b| b.i).filter(|&i| i != first);
        core::iter::once(first).chain(second)
    }

    fn sort_key(&self) -> (FloorIndex, u8, FloorIndex, i32, u32) {
        match *self {
            Multipartition::Single { n, at } => (at, 0, at, 0, n),
            Multipartition::Pair {
                n,
                first,
                second,
                diff,
            } => (first, 1, second, diff, n),
        }
    }
}

impl Ord for Multipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multipartition::Single { at, .. } => write!(f, "S{at}"),
            Multipartition::Pair {
                first,
                second,
                diff,
                ..
            } => write!(f, "P{first}{second}[{diff}]"),
        }
    }
}

/// Every shape of `P_n`, sorted by first box, singles before pairs, then
/// second box, then `diff`.
pub fn enumerate_multipartitions(params: &ValidatedParams) -> Vec<Multipartition> {
    let n = params.n();
    let boxes = FloorIndex::all(params);
    let mut out = Vec::new();
    for (k, &first) in boxes.iter().enumerate() {
        out.push(Multipartition::Single { n, at: first });
        if n < 2 {
            continue;
        }
        for &second in &boxes[k + 1..] {
            let bound = n as i32 - 2;
            for diff in (-bound..=bound).step_by(2) {
                out.push(Multipartition::Pair {
                    n,
                    first,
                    second,
                    diff,
                });
            }
        }
    }
    out.sort();
    out
}

/// A filling of a shape with `1..=n`. `columns[c]` lists the entries of the
/// `c`-th non-empty column (floor order) from the floor upwards.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shape: Multipartition,
    columns: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn from_columns(
        shape: Multipartition,
        columns: Vec<Vec<u32>>,
    ) -> Result<Self, CombinatoricsError> {
        let n = shape.n();
        if columns.len() != shape.column_count() {
            return Err(CombinatoricsError::InvalidFilling(
                "wrong number of columns",
            ));
        }
        for (col, slot) in columns.iter().zip(shape.columns()) {
            if col.len() as u32 != slot.len {
                return Err(CombinatoricsError::InvalidFilling("column length mismatch"));
            }
        }
        let mut seen = 0u128;
        for &m in columns.iter().flatten() {
            if m == 0 || m > n || seen & (1 << m) != 0 {
                return Err(CombinatoricsError::InvalidFilling(
                    "entries must be a permutation of 1..=n",
                ));
            }
            seen |= 1 << m;
        }
        Ok(Tableau { shape, columns })
    }

    /// Standard filling whose first column holds exactly the entries whose
    /// bits are set in `mask` (bit `m-1` for entry `m`).
    pub(crate) fn from_first_column_mask(shape: Multipartition, mask: u64) -> Tableau {
        let n = shape.n();
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for m in 1..=n {
            if mask >> (m - 1) & 1 == 1 {
                a.push(m);
            } else {
                b.push(m);
            }
        }
        let columns = if shape.is_pair() { vec![a, b] } else { vec![a] };
        Tableau { shape, columns }
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn n(&self) -> u32 {
        self.shape.n()
    }

    pub fn is_standard(&self) -> bool {
        self.columns
            .iter()
            .all(|col| col.windows(2).all(|w| w[0] < w[1]))
    }

    /// `positions()[m-1]` is the node holding `m`.
    pub fn positions(&self) -> Vec<Node> {
        let mut out = vec![Node::new(0, FloorIndex::new(0, 0)); self.n() as usize];
        for (col, slot) in self.columns.iter().zip(self.shape.columns()) {
            for (k, &m) in col.iter().enumerate() {
                out[(m - 1) as usize] = Node::new(k as u32 + 1, slot.at);
            }
        }
        out
    }

    pub fn node_of(&self, m: u32) -> Option<Node> {
        for (col, slot) in self.columns.iter().zip(self.shape.columns()) {
            if let Some(k) = col.iter().position(|&x| x == m) {
                return Some(Node::new(k as u32 + 1, slot.at));
            }
        }
        None
    }

    /// Entries of the column on `at`, bottom-up (empty if the box is empty).
    pub fn column_at(&self, at: FloorIndex) -> &[u32] {
        self.shape
            .columns()
            .position(|c| c.at == at)
            .map_or(&[], |k| self.columns[k].as_slice())
    }

    /// `s_k o t`: exchange the entries `k` and `k + 1`.
    pub fn swap_entries(&self, k: u32) -> Tableau {
        let mut out = self.clone();
        for m in out.columns.iter_mut().flatten() {
            if *m == k {
                *m = k + 1;
            } else if *m == k + 1 {
                *m = k;
            }
        }
        out
    }

    /// Relocate every column with its content onto a new floor box.
    /// `relocate` must be injective on the occupied boxes.
    pub(crate) fn relocated(&self, relocate: impl Fn(FloorIndex) -> FloorIndex) -> Tableau {
        let mut moved: Vec<(Column, &Vec<u32>)> = self
            .shape
            .columns()
            .zip(self.columns.iter())
            .map(|(c, col)| {
                (
                    Column {
                        at: relocate(c.at),
                        len: c.len,
                    },
                    col,
                )
            })
            .collect();
        moved.sort_by_key(|a| a.0.at);
        let cols: Vec<Column> = moved.iter().map(|m| m.0).collect();
        let shape = Multipartition::from_columns(&cols).expect("relocation keeps a valid shape");
        Tableau {
            shape,
            columns: moved.into_iter().map(|m| m.1.clone()).collect(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape)?;
        for col in &self.columns {
            f.write_str("|")?;
            for (k, m) in col.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

/// `t^lambda`: entries placed along the node order.
pub fn initial_tableau(shape: &Multipartition) -> Tableau {
    tableau_from_permutation(shape, &Permutation::identity(shape.n() as usize))
}

/// All standard tableaux of `shape`, sorted by the one-line notation of their
/// permutation `d(t)`; `t^lambda` comes first.
pub fn enumerate_standard_tableaux(shape: &Multipartition) -> Vec<Tableau> {
    let n = shape.n();
    let mut out: Vec<(Vec<u32>, Tableau)> = match shape.columns().next() {
        Some(first) if shape.is_pair() => subsets_of_size(n, first.len)
            .into_iter()
            .map(|mask| {
                let t = Tableau::from_first_column_mask(*shape, mask);
                (permutation_images(&t), t)
            })
            .collect(),
        _ => {
            let t = Tableau::from_first_column_mask(*shape, mask_of_size(n));
            vec![(permutation_images(&t), t)]
        }
    };
    out.sort();
    out.into_iter().map(|(_, t)| t).collect()
}

/// Number of standard tableaux, without enumerating them.
pub fn standard_tableau_count(shape: &Multipartition) -> u128 {
    match shape.columns().next() {
        Some(first) if shape.is_pair() => binomial(shape.n() as u64, first.len as u64),
        _ => 1,
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for x in 0..k {
        acc = acc * (n - x) as u128 / (x + 1) as u128;
    }
    acc
}

fn mask_of_size(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All `k`-subsets of `{1..=n}` as bit masks, in increasing numeric order.
pub(crate) fn subsets_of_size(n: u32, k: u32) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    // Gosper's hack
    let mut x = mask_of_size(k);
    let limit_bit = n;
    loop {
        if limit_bit < 64 && x >> limit_bit != 0 {
            break;
        }
        out.push(x);
        let c = x & x.wrapping_neg();
        let r = x.wrapping_add(c);
        if r == 0 {
            break;
        }
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

pub fn residue_sequence(t: &Tableau, params: &ValidatedParams) -> ResidueSequence {
    t.positions()
        .iter()
        .map(|node| residue_of_node(node, params))
        .collect()
}

/// A permutation of `{0..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Permutation(images))
    }

    /// Product `s_{w_1} s_{w_2} ... s_{w_k}` (composition of functions,
    /// rightmost applied first); `s_i` exchanges `i - 1` and `i`.
    pub fn from_word(n: usize, word: &[u32]) -> Self {
        let mut w = Permutation::identity(n);
        for &i in word.iter().rev() {
            w = Permutation::simple(n, i).compose(&w);
        }
        w
    }

    fn simple(n: usize, i: u32) -> Self {
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.swap(i as usize - 1, i as usize);
        Permutation(images)
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    /// `self o other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for a in 0..self.0.len() {
            for b in a + 1..self.0.len() {
                if self.0[a] > self.0[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Lexicographically smallest reduced word, built greedily from the
    /// smallest left descent at each step.
    pub fn reduced_word(&self) -> Vec<u32> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(w.length());
        // position of each value
        let mut pos = w.inverse().0;
        'outer: loop {
            for i in 0..pos.len().saturating_sub(1) {
                if pos[i + 1] < pos[i] {
                    // s_{i+1} o w: exchange values i and i + 1
                    let (a, b) = (pos[i] as usize, pos[i + 1] as usize);
                    w.0.swap(a, b);
                    pos.swap(i, i + 1);
                    word.push(i as u32 + 1);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str("]")
    }
}

fn permutation_images(t: &Tableau) -> Vec<u32> {
    let order = t.shape.nodes_in_order();
    t.positions()
        .iter()
        .map(|node| {
            order
                .binary_search(node)
                .expect("every position is a node of the shape") as u32
        })
        .collect()
}

/// The permutation `w` with `t = t^lambda o w` (so `w(m)` is the node-order
/// index of the node holding `m`), with its canonical reduced word.
pub fn permutation_of_tableau(t: &Tableau) -> Result<(Permutation, Vec<u32>), CombinatoricsError> {
    if !t.is_standard() {
        return Err(CombinatoricsError::NotStandard);
    }
    let w = Permutation(permutation_images(t));
    let word = w.reduced_word();
    Ok((w, word))
}

/// Inverse of [`permutation_of_tableau`]: the filling `t^lambda o w`.
pub fn tableau_from_permutation(shape: &Multipartition, w: &Permutation) -> Tableau {
    let order = shape.nodes_in_order();
    let mut columns: Vec<Vec<u32>> = shape.columns().map(|c| vec![0; c.len as usize]).collect();
    let boxes: Vec<FloorIndex> = shape.columns().map(|c| c.at).collect();
    for m in 0..w.len() {
        let node = order[w.apply(m as u32) as usize];
        let c = boxes
            .iter()
            .position(|&b| b == node.floor)
            .expect("node on shape");
        columns[c][(node.row - 1) as usize] = m as u32 + 1;
    }
    Tableau {
        shape: *shape,
        columns,
    }
}

/// Graded degree of a standard tableau.
///
/// Adding the node `A` holding `m` to the shape formed by `1..m` contributes
/// the number of addable nodes minus the number of removable nodes of that
/// partial shape which share the residue of `A` and come after `A` in the
/// node order. Every box of the floor can receive an addable node.
pub fn degree_of_tableau(t: &Tableau, params: &ValidatedParams) -> Result<i64, CombinatoricsError> {
    if !t.is_standard() {
        return Err(CombinatoricsError::NotStandard);
    }
    let floor = FloorIndex::all(params);
    let slot = |b: FloorIndex| (b.l * params.p() + b.i) as usize;
    let mut heights = vec![0u32; floor.len()];
    let mut degree = 0i64;
    for node in t.positions() {
        let res = residue_of_node(&node, params);
        for &b in &floor {
            let h = heights[slot(b)];
            let addable = Node::new(h + 1, b);
            if addable > node && residue_of_node(&addable, params) == res {
                degree += 1;
            }
            if h > 0 {
                let removable = Node::new(h, b);
                if removable > node && residue_of_node(&removable, params) == res {
                    degree -= 1;
                }
            }
        }
        heights[slot(node.floor)] += 1;
    }
    Ok(degree)
}

/// Non-standard fillings `g` such that `s_k o g` is standard for some `k`,
/// in sorted order.
pub fn garnir_tableaux(shape: &Multipartition) -> Vec<Tableau> {
    let n = shape.n();
    let mut found = BTreeSet::new();
    for t in enumerate_standard_tableaux(shape) {
        for k in 1..n {
            let g = t.swap_entries(k);
            if !g.is_standard() {
                found.insert(g);
            }
        }
    }
    found.into_iter().collect()
}

/// Whether `e(seq)` is one of the generators of the ideal cutting the
/// Temperley-Lieb quotient out of the KLR algebra: the first two residues
/// are `(i, j), (i, j + 1)`, or the first three residues are all charged.
pub fn killed_idempotent_pattern(
    seq: &[Residue],
    params: &ValidatedParams,
) -> Result<bool, CombinatoricsError> {
    if seq.len() < 2 {
        return Err(CombinatoricsError::SequenceTooShort { len: seq.len() });
    }
    let (x, y) = (seq[0], seq[1]);
    if x.i == y.i && params.reduce(x.j + 1) == params.reduce(y.j) {
        return Ok(true);
    }
    Ok(seq.len() >= 3 && seq[..3].iter().all(|res| params.is_charged(res.j)))
}
