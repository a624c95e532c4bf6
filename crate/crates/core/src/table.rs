//! Cayley-table primitives shared by every structure in the crate.
//!
//! Elements of a carrier of size `n` are the dense indices `0..n`. Every
//! predicate here is a finite loop over the table; checks that can fail
//! report the lexicographically first counterexample.

use std::collections::BTreeSet;

use crate::error::{AlgebraError, Result};

pub type Element = usize;
pub type ElementSet = BTreeSet<Element>;

/// Counterexample elements, in the order the failing identity names them.
pub type Witness = Vec<Element>;

/// Outcome of a universally quantified check: `Err` carries the first witness.
pub type Verdict = std::result::Result<(), Witness>;

/// An `n x n` binary operation table over `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinOpTable {
    n: usize,
    cells: Vec<Element>,
}

impl BinOpTable {
    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(AlgebraError::InvalidTable("empty table".into()));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(AlgebraError::InvalidTable(format!(
                    "row {a} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(AlgebraError::InvalidTable(format!(
                        "entry [{a}][{b}] = {v} out of range"
                    )));
                }
                cells.push(v);
            }
        }
        Ok(BinOpTable { n, cells })
    }

    /// Row-major cells; fails on a bad length or an out-of-range entry.
    pub fn from_cells(n: usize, cells: Vec<Element>) -> Result<Self> {
        if n == 0 || cells.len() != n * n {
            return Err(AlgebraError::InvalidTable(format!(
                "expected {} cells for order {n}, found {}",
                n * n,
                cells.len()
            )));
        }
        if let Some(pos) = cells.iter().position(|&v| v >= n) {
            return Err(AlgebraError::InvalidTable(format!(
                "entry [{}][{}] = {} out of range",
                pos / n,
                pos % n,
                cells[pos]
            )));
        }
        Ok(BinOpTable { n, cells })
    }

    /// Panics if `f` returns an element outside `0..n` or `n == 0`.
    pub fn from_fn(n: usize, mut f: impl FnMut(Element, Element) -> Element) -> Self {
        assert!(n > 0, "carrier must be nonempty");
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let v = f(a, b);
                assert!(v < n, "table entry {v} out of range for order {n}");
                cells.push(v);
            }
        }
        BinOpTable { n, cells }
    }

    /// `x + y = x`
    pub fn left_zero(n: usize) -> Self {
        Self::from_fn(n, |a, _| a)
    }

    /// `x + y = y`
    pub fn right_zero(n: usize) -> Self {
        Self::from_fn(n, |_, b| b)
    }

    /// Addition modulo `n`.
    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    /// `min(x, y)` on a chain of length `n`.
    pub fn chain_min(n: usize) -> Self {
        Self::from_fn(n, |a, b| a.min(b))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: Element, b: Element) -> Element {
        self.cells[a * self.n + b]
    }

    pub fn cells(&self) -> &[Element] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.cells.chunks(self.n).map(<[_]>::to_vec).collect()
    }

    /// The opposite operation `a *op b = b * a`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |a, b| self.op(b, a))
    }

    /// Image of the table under the relabeling `a -> perm[a]`.
    pub fn relabel(&self, perm: &[Element]) -> Self {
        let n = self.n;
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = perm[self.op(a, b)];
            }
        }
        BinOpTable { n, cells }
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }
}

/// Full carrier `{0, .., n-1}`.
pub fn full_set(n: usize) -> ElementSet {
    (0..n).collect()
}

/// A map `B -> B` given by its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SelfMap {
    image: Vec<Element>,
}

impl SelfMap {
    pub fn new(image: Vec<Element>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(AlgebraError::InvalidTable("empty map".into()));
        }
        if let Some(pos) = image.iter().position(|&v| v >= n) {
            return Err(AlgebraError::InvalidTable(format!(
                "map entry [{pos}] = {} out of range",
                image[pos]
            )));
        }
        Ok(SelfMap { image })
    }

    pub fn from_fn(n: usize, f: impl FnMut(Element) -> Element) -> Self {
        let image: Vec<_> = (0..n).map(f).collect();
        assert!(image.iter().all(|&v| v < n), "map entry out of range");
        SelfMap { image }
    }

    pub fn identity(n: usize) -> Self {
        SelfMap { image: (0..n).collect() }
    }

    pub fn constant(n: usize, value: Element) -> Self {
        assert!(value < n);
        SelfMap { image: vec![value; n] }
    }

    #[inline]
    pub fn apply(&self, a: Element) -> Element {
        self.image[a]
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[Element] {
        &self.image
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &SelfMap) -> SelfMap {
        SelfMap {
            image: inner.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        for &v in &self.image {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        true
    }

    pub fn inverse(&self) -> Option<SelfMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.image.len()];
        for (a, &v) in self.image.iter().enumerate() {
            inv[v] = a;
        }
        Some(SelfMap { image: inv })
    }

    pub fn relabel(&self, perm: &[Element]) -> SelfMap {
        let mut image = vec![0; self.image.len()];
        for (a, &v) in self.image.iter().enumerate() {
            image[perm[a]] = perm[v];
        }
        SelfMap { image }
    }
}

fn check_size(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(AlgebraError::SizeMismatch { expected, found })
    }
}

pub(crate) fn same_order(a: &BinOpTable, b: &BinOpTable) -> Result<()> {
    check_size(a.order(), b.order())
}

pub(crate) fn map_order(table: &BinOpTable, map: &SelfMap) -> Result<()> {
    check_size(table.order(), map.len())
}

/// First `(a, b, c)` with `(a*b)*c != a*(b*c)`.
pub fn check_associative(op: &BinOpTable) -> Verdict {
    for a in op.elements() {
        for b in op.elements() {
            let ab = op.op(a, b);
            for c in op.elements() {
                if op.op(ab, c) != op.op(a, op.op(b, c)) {
                    return Err(vec![a, b, c]);
                }
            }
        }
    }
    Ok(())
}

pub fn is_associative(op: &BinOpTable) -> bool {
    check_associative(op).is_ok()
}

/// A table known to be associative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSemigroup {
    table: BinOpTable,
}

impl FiniteSemigroup {
    /// Image under the relabeling `a -> perm[a]`.
    pub fn relabel(&self, perm: &[Element]) -> Self {
        FiniteSemigroup {
            table: self.table.relabel(perm),
        }
    }

    pub fn new(table: BinOpTable) -> Result<Self> {
        match check_associative(&table) {
            Ok(()) => Ok(FiniteSemigroup { table }),
            Err(w) => Err(AlgebraError::NotAssociative(w[0], w[1], w[2])),
        }
    }

    pub(crate) fn new_unchecked(table: BinOpTable) -> Self {
        debug_assert!(is_associative(&table));
        FiniteSemigroup { table }
    }

    pub fn table(&self) -> &BinOpTable {
        &self.table
    }

    pub fn into_table(self) -> BinOpTable {
        self.table
    }

    #[inline]
    pub fn op(&self, a: Element, b: Element) -> Element {
        self.table.op(a, b)
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }
}

/// A group table with its identity and inverse array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteGroup {
    table: BinOpTable,
    identity: Element,
    inverse: Vec<Element>,
}

impl FiniteGroup {
    pub fn relabel(&self, perm: &[Element]) -> Self {
        let mut inverse = vec![0; self.inverse.len()];
        for (a, &b) in self.inverse.iter().enumerate() {
            inverse[perm[a]] = perm[b];
        }
        FiniteGroup {
            table: self.table.relabel(perm),
            identity: perm[self.identity],
            inverse,
        }
    }

    pub fn table(&self) -> &BinOpTable {
        &self.table
    }

    #[inline]
    pub fn op(&self, a: Element, b: Element) -> Element {
        self.table.op(a, b)
    }

    #[inline]
    pub fn identity(&self) -> Element {
        self.identity
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a]
    }

    pub fn inverses(&self) -> &[Element] {
        &self.inverse
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// `a^k` with `a^1 = a` and `a^(k+1) = a ∘ a^k`; `a^0` is the identity.
    pub fn pow(&self, a: Element, k: usize) -> Element {
        (0..k).fold(self.identity, |acc, _| self.op(a, acc))
    }

    /// Least `k >= 1` with `a^k = 1`.
    pub fn element_order(&self, a: Element) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.identity {
            acc = self.op(a, acc);
            k += 1;
        }
        k
    }

    /// Inversion `a -> ā` as a self-map.
    pub fn inversion_map(&self) -> SelfMap {
        SelfMap {
            image: self.inverse.clone(),
        }
    }

    /// The opposite group `a ∘op b = b ∘ a`.
    pub fn opposite(&self) -> FiniteGroup {
        FiniteGroup {
            table: self.table.transpose(),
            identity: self.identity,
            inverse: self.inverse.clone(),
        }
    }

    pub fn as_semigroup(&self) -> FiniteSemigroup {
        FiniteSemigroup {
            table: self.table.clone(),
        }
    }
}

/// Group structure of `op`, or the first missing group axiom.
pub fn as_group(op: &BinOpTable) -> Result<FiniteGroup> {
    if let Err(w) = check_associative(op) {
        return Err(AlgebraError::NotAssociative(w[0], w[1], w[2]));
    }
    let identity = op
        .elements()
        .find(|&e| op.elements().all(|a| op.op(e, a) == a && op.op(a, e) == a))
        .ok_or(AlgebraError::NoIdentity)?;
    let mut inverse = Vec::with_capacity(op.order());
    for a in op.elements() {
        let inv = op
            .elements()
            .find(|&b| op.op(a, b) == identity && op.op(b, a) == identity)
            .ok_or(AlgebraError::MissingInverse(a))?;
        inverse.push(inv);
    }
    Ok(FiniteGroup {
        table: op.clone(),
        identity,
        inverse,
    })
}

/// `E = { e : e*e = e }`.
pub fn idempotents(op: &BinOpTable) -> ElementSet {
    op.elements().filter(|&e| op.op(e, e) == e).collect()
}

/// The element `θ` with `θx = xθ = θ` for all `x`, if any.
pub fn has_zero_element(op: &BinOpTable) -> Option<Element> {
    op.elements()
        .find(|&t| op.elements().all(|x| op.op(t, x) == t && op.op(x, t) == t))
}

/// `{ x*y : x ∈ X, y ∈ Y }`.
pub fn product_set(op: &BinOpTable, xs: &ElementSet, ys: &ElementSet) -> ElementSet {
    let mut out = ElementSet::new();
    for &x in xs {
        for &y in ys {
            out.insert(op.op(x, y));
        }
    }
    out
}

/// `X * Y * Z`, grouped as `(X*Y)*Z`.
pub fn triple_product(
    op: &BinOpTable,
    xs: &ElementSet,
    ys: &ElementSet,
    zs: &ElementSet,
) -> ElementSet {
    product_set(op, &product_set(op, xs, ys), zs)
}

pub fn is_subgroup(subset: &ElementSet, g: &FiniteGroup) -> Result<bool> {
    if subset.is_empty() {
        return Err(AlgebraError::EmptySubset);
    }
    if !subset.contains(&g.identity()) {
        return Ok(false);
    }
    let closed = subset
        .iter()
        .all(|&a| subset.contains(&g.inv(a)) && subset.iter().all(|&b| subset.contains(&g.op(a, b))));
    Ok(closed)
}

/// Whether `subset` is a group under `op` with identity `e`.
///
/// Associativity is inherited from the ambient table; `e` need not be the
/// identity of any larger structure.
pub fn is_group_with_identity(subset: &ElementSet, op: &BinOpTable, e: Element) -> bool {
    if !subset.contains(&e) {
        return false;
    }
    subset.iter().all(|&a| {
        op.op(e, a) == a
            && op.op(a, e) == a
            && subset.iter().all(|&b| subset.contains(&op.op(a, b)))
            && subset
                .iter()
                .any(|&b| op.op(a, b) == e && op.op(b, a) == e)
    })
}

fn require_associative(op: &BinOpTable) -> Result<()> {
    check_associative(op).map_err(|w| AlgebraError::NotAssociative(w[0], w[1], w[2]))
}

/// First `b` with `B*b*B != B`, if any.
pub fn simplicity_witness(op: &BinOpTable) -> Result<Option<Element>> {
    require_associative(op)?;
    let all = full_set(op.order());
    Ok(op.elements().find(|&b| {
        let single = ElementSet::from([b]);
        triple_product(op, &all, &single, &all) != all
    }))
}

/// `B*b*B = B` for every `b`; the one-element table is simple.
pub fn is_simple(op: &BinOpTable) -> Result<bool> {
    Ok(simplicity_witness(op)?.is_none())
}

/// Minimality of `e` in the order `f <= e  iff  ef = fe = f` on idempotents.
pub fn is_primitive_idempotent(e: Element, op: &BinOpTable) -> Result<bool> {
    if op.op(e, e) != e {
        return Err(AlgebraError::NotIdempotent(e));
    }
    Ok(idempotents(op)
        .into_iter()
        .all(|f| !(op.op(e, f) == f && op.op(f, e) == f) || f == e))
}

pub fn primitive_idempotents(op: &BinOpTable) -> ElementSet {
    idempotents(op)
        .into_iter()
        .filter(|&e| is_primitive_idempotent(e, op).unwrap_or(false))
        .collect()
}

/// Simple with at least one primitive idempotent.
pub fn is_completely_simple(op: &BinOpTable) -> Result<bool> {
    Ok(is_simple(op)? && !primitive_idempotents(op).is_empty())
}

/// First `(a, b)` with `f(a*b) != f(a)*f(b)`.
pub fn endomorphism_witness(f: &SelfMap, op: &BinOpTable) -> Option<(Element, Element)> {
    for a in op.elements() {
        for b in op.elements() {
            if f.apply(op.op(a, b)) != op.op(f.apply(a), f.apply(b)) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_endomorphism(f: &SelfMap, op: &BinOpTable) -> bool {
    endomorphism_witness(f, op).is_none()
}

/// All endomorphisms of `op`, in lexicographic order of their image arrays.
pub fn endomorphisms(op: &BinOpTable) -> Vec<SelfMap> {
    let n = op.order();
    let mut out = Vec::new();
    let mut image = vec![0; n];
    // odometer over n^n maps
    loop {
        let f = SelfMap { image: image.clone() };
        if is_endomorphism(&f, op) {
            out.push(f);
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            image[pos] += 1;
            if image[pos] < n {
                break;
            }
            image[pos] = 0;
        }
    }
}
