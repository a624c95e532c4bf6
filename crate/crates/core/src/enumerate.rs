//! Exhaustive generation of every structure of a given small order.
//!
//! Tables are filled cell by cell in row-major order and a branch is cut as
//! soon as an associativity triple with all four products known fails. Every
//! yielded structure is rebuilt through its verifying constructor, so the
//! pruning never has to be trusted. Output is sorted, so the same options
//! always produce the same sequence.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::semibrace::{almost_law, iota_law, semi_brace_law, AlmostLeftSemiBrace, LeftSemiBrace};
use crate::table::{endomorphisms, BinOpTable, Element, FiniteGroup, FiniteSemigroup, SelfMap};
use crate::truss::{semi_truss_law, BraceLikeSemiTruss, LambdaFamily};

const UNSET: Element = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Semigroup,
    Group,
    BraceLike,
    LeftSemiBrace,
    Almost,
}

impl Kind {
    pub const ALL: [Kind; 5] = [
        Kind::Semigroup,
        Kind::Group,
        Kind::BraceLike,
        Kind::LeftSemiBrace,
        Kind::Almost,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Semigroup => "semigroup",
            Kind::Group => "group",
            Kind::BraceLike => "brace-like",
            Kind::LeftSemiBrace => "left-semi-brace",
            Kind::Almost => "almost",
        }
    }

    /// Largest order enumerated without an explicit override.
    pub fn default_max_order(self, allow_slow: bool) -> usize {
        match self {
            Kind::Semigroup => 4,
            Kind::Group => 5,
            Kind::BraceLike if allow_slow => 4,
            Kind::BraceLike => 3,
            Kind::LeftSemiBrace => 4,
            Kind::Almost => 4,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kind `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub max_instances: Option<usize>,
    pub time_budget: Option<Duration>,
}

impl Limits {
    pub fn unlimited(&self) -> bool {
        self.max_instances.is_none() && self.time_budget.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub order: usize,
    pub kind: Kind,
    pub modulo_iso: bool,
    pub limits: Limits,
    /// Raises the brace-like cap from 3 to 4.
    pub allow_slow: bool,
    /// Replaces the per-kind cap entirely.
    pub max_order: Option<usize>,
}

impl EnumSpec {
    pub fn new(order: usize, kind: Kind) -> Self {
        EnumSpec {
            order,
            kind,
            modulo_iso: false,
            limits: Limits::default(),
            allow_slow: false,
            max_order: None,
        }
    }

    pub fn modulo_iso(mut self, yes: bool) -> Self {
        self.modulo_iso = yes;
        self
    }

    pub fn cap(&self) -> usize {
        self.max_order
            .unwrap_or_else(|| self.kind.default_max_order(self.allow_slow))
    }

    fn check(&self) -> Result<()> {
        if self.order == 0 {
            return Err(AlgebraError::InvalidTable("order must be at least 1".into()));
        }
        if self.order > self.cap() {
            return Err(AlgebraError::OrderTooLarge {
                kind: self.kind.name().into(),
                order: self.order,
                max: self.cap(),
            });
        }
        Ok(())
    }
}

/// Enumerated structures; `complete` is false when a limit cut the run short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration<T> {
    pub items: Vec<T>,
    pub complete: bool,
}

impl<T> Enumeration<T> {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    fn map<U>(self, f: impl FnMut(T) -> U) -> Enumeration<U> {
        Enumeration {
            items: self.items.into_iter().map(f).collect(),
            complete: self.complete,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Instance {
    Semigroup(FiniteSemigroup),
    Group(FiniteGroup),
    BraceLike(BraceLikeSemiTruss),
    LeftSemiBrace(LeftSemiBrace),
    Almost(AlmostLeftSemiBrace),
}

struct Budget {
    limits: Limits,
    start: Instant,
}

impl Budget {
    fn new(limits: Limits) -> Self {
        Budget {
            limits,
            start: Instant::now(),
        }
    }

    fn exhausted(&self, count: usize) -> bool {
        self.limits.max_instances.is_some_and(|m| count >= m)
            || self.limits.time_budget.is_some_and(|t| self.start.elapsed() >= t)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<Element>> {
    let mut out = Vec::new();
    let mut p: Vec<Element> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Keeps the smallest relabeling of each isomorphism class, sorted.
fn canonical_classes<T: Ord + Clone>(items: &[T], relabel: impl Fn(&T, &[Element]) -> T, n: usize) -> Vec<T> {
    let perms = permutations(n);
    let classes: BTreeSet<T> = items
        .iter()
        .map(|x| perms.iter().map(|p| relabel(x, p)).min().unwrap())
        .collect();
    classes.into_iter().collect()
}

/// Whether every associativity triple touching cell `k`, with all four
/// products already filled, holds.
fn consistent_at(cells: &[Element], n: usize, k: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = cells[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = cells[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let (left, right) = (xy * n + z, x * n + yz);
                if cells[left] == UNSET || cells[right] == UNSET {
                    continue;
                }
                let touches = [x * n + y, y * n + z, left, right].contains(&k);
                if touches && cells[left] != cells[right] {
                    return false;
                }
            }
        }
    }
    true
}

/// Latin-square constraint for group tables: `v` not yet used in row or column.
fn latin_ok(cells: &[Element], n: usize, k: usize, v: Element) -> bool {
    let (a, b) = (k / n, k % n);
    (0..b).all(|c| cells[a * n + c] != v) && (0..a).all(|r| cells[r * n + b] != v)
}

fn associative_tables(n: usize, latin: bool, budget: &Budget, out: &mut Vec<BinOpTable>) -> bool {
    let mut cells = vec![UNSET; n * n];
    fill(&mut cells, n, 0, latin, budget, out)
}

/// Returns false when the budget ran out.
fn fill(
    cells: &mut Vec<Element>,
    n: usize,
    k: usize,
    latin: bool,
    budget: &Budget,
    out: &mut Vec<BinOpTable>,
) -> bool {
    if k == n * n {
        if budget.exhausted(out.len()) {
            return false;
        }
        out.push(BinOpTable::from_cells(n, cells.clone()).expect("filled table is in range"));
        return true;
    }
    for v in 0..n {
        if latin && !latin_ok(cells, n, k, v) {
            continue;
        }
        cells[k] = v;
        if consistent_at(cells, n, k) && !fill(cells, n, k + 1, latin, budget, out) {
            cells[k] = UNSET;
            return false;
        }
    }
    cells[k] = UNSET;
    true
}

fn semigroups_raw(n: usize, budget: &Budget) -> Enumeration<FiniteSemigroup> {
    let mut tables = Vec::new();
    let complete = associative_tables(n, false, budget, &mut tables);
    Enumeration {
        items: tables.into_iter().map(|t| FiniteSemigroup::new(t).expect("associative by construction")).collect(),
        complete,
    }
}

fn groups_raw(n: usize, budget: &Budget) -> Enumeration<FiniteGroup> {
    let mut tables = Vec::new();
    let complete = associative_tables(n, true, budget, &mut tables);
    Enumeration {
        items: tables
            .into_iter()
            .map(|t| crate::table::as_group(&t).expect("associative Latin square is a group"))
            .collect(),
        complete,
    }
}

fn finish<T: Ord + Clone + Send>(
    mut e: Enumeration<T>,
    spec: &EnumSpec,
    relabel: impl Fn(&T, &[Element]) -> T,
) -> Enumeration<T> {
    if spec.modulo_iso {
        e.items = canonical_classes(&e.items, relabel, spec.order);
    } else {
        e.items.sort();
    }
    e
}

pub fn enum_semigroups(spec: &EnumSpec) -> Result<Enumeration<FiniteSemigroup>> {
    spec.check()?;
    let e = semigroups_raw(spec.order, &Budget::new(spec.limits));
    Ok(finish(e, spec, FiniteSemigroup::relabel))
}

pub fn enum_groups(spec: &EnumSpec) -> Result<Enumeration<FiniteGroup>> {
    spec.check()?;
    let e = groups_raw(spec.order, &Budget::new(spec.limits));
    Ok(finish(e, spec, FiniteGroup::relabel))
}

/// Runs `per_add` over every additive semigroup, in parallel when no limit is set.
fn over_additions<T: Send>(
    n: usize,
    limits: Limits,
    per_add: impl Fn(&BinOpTable, &[FiniteGroup]) -> Vec<T> + Sync,
) -> Enumeration<T> {
    let unbounded = Budget::new(Limits::default());
    let adds = semigroups_raw(n, &unbounded).items;
    let groups = groups_raw(n, &unbounded).items;
    if limits.unlimited() {
        let items = adds
            .par_iter()
            .flat_map_iter(|add| per_add(add.table(), &groups))
            .collect();
        return Enumeration {
            items,
            complete: true,
        };
    }
    let budget = Budget::new(limits);
    let mut items = Vec::new();
    for add in &adds {
        if budget.exhausted(items.len()) {
            return Enumeration {
                items,
                complete: false,
            };
        }
        items.extend(per_add(add.table(), &groups));
        if let Some(m) = limits.max_instances.filter(|&m| items.len() > m) {
            items.truncate(m);
            return Enumeration {
                items,
                complete: false,
            };
        }
    }
    Enumeration {
        items,
        complete: true,
    }
}

/// Maps `f ∈ End(+)` with `a∘(b+c) = a∘b + f(c)` for all `b, c`.
fn law_candidates(add: &BinOpTable, mul: &BinOpTable, a: Element, ends: &[SelfMap]) -> Vec<usize> {
    (0..ends.len())
        .filter(|&i| {
            let f = &ends[i];
            add.elements().all(|b| {
                let ab = mul.op(a, b);
                add.elements()
                    .all(|c| mul.op(a, add.op(b, c)) == add.op(ab, f.apply(c)))
            })
        })
        .collect()
}

/// λ-families built from `End(+)` with `λ_{x∘y} = λ_x λ_y`, assigning the
/// identity of `∘` first.
fn lambda_families(add: &BinOpTable, mul: &FiniteGroup, ends: &[SelfMap]) -> Vec<LambdaFamily> {
    let n = add.order();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|a| law_candidates(add, mul.table(), a, ends))
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    // compose[i][j] = index of ends[i] ∘ ends[j]
    let compose: Vec<Vec<Option<usize>>> = ends
        .iter()
        .map(|f| {
            ends.iter()
                .map(|g| {
                    let fg = f.compose(g);
                    ends.iter().position(|h| *h == fg)
                })
                .collect()
        })
        .collect();
    let mut order: Vec<Element> = vec![mul.identity()];
    order.extend((0..n).filter(|&a| a != mul.identity()));
    let mut chosen = vec![usize::MAX; n];
    let mut out = Vec::new();
    assign_lambda(0, &order, &candidates, &compose, mul, &mut chosen, ends, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn assign_lambda(
    depth: usize,
    order: &[Element],
    candidates: &[Vec<usize>],
    compose: &[Vec<Option<usize>>],
    mul: &FiniteGroup,
    chosen: &mut [usize],
    ends: &[SelfMap],
    out: &mut Vec<LambdaFamily>,
) {
    if depth == order.len() {
        out.push(LambdaFamily::new(chosen.iter().map(|&i| ends[i].clone()).collect()).expect("shapes agree"));
        return;
    }
    let a = order[depth];
    for &i in &candidates[a] {
        chosen[a] = i;
        let ok = order[..=depth].iter().all(|&x| {
            order[..=depth].iter().all(|&y| {
                let xy = chosen[mul.op(x, y)];
                xy == usize::MAX || compose[chosen[x]][chosen[y]] == Some(xy)
            })
        });
        if ok {
            assign_lambda(depth + 1, order, candidates, compose, mul, chosen, ends, out);
        }
    }
    chosen[a] = usize::MAX;
}

pub fn enum_brace_like(spec: &EnumSpec) -> Result<Enumeration<BraceLikeSemiTruss>> {
    spec.check()?;
    let e = over_additions(spec.order, spec.limits, |add, groups| {
        let ends = endomorphisms(add);
        let mut found = Vec::new();
        for mul in groups {
            for lambda in lambda_families(add, mul, &ends) {
                debug_assert!(semi_truss_law(add, mul.table(), &lambda).is_ok());
                let t = BraceLikeSemiTruss::new(add.clone(), mul.table().clone(), lambda)
                    .expect("search only yields brace-like triples");
                found.push(t);
            }
        }
        found
    });
    Ok(finish(e, spec, BraceLikeSemiTruss::relabel))
}

pub fn enum_left_semi_braces(spec: &EnumSpec) -> Result<Enumeration<LeftSemiBrace>> {
    spec.check()?;
    let e = over_additions(spec.order, spec.limits, |add, groups| {
        groups
            .iter()
            .filter(|mul| semi_brace_law(add, mul).is_ok())
            .map(|mul| {
                LeftSemiBrace::new(add.clone(), mul.table().clone())
                    .expect("law holds and both operations are verified")
            })
            .collect()
    });
    Ok(finish(e, spec, LeftSemiBrace::relabel))
}

/// Candidates `ι(a) = ā∘t`, one per `t`, each verified in full.
pub fn enum_almost(spec: &EnumSpec) -> Result<Enumeration<AlmostLeftSemiBrace>> {
    spec.check()?;
    let n = spec.order;
    let e = over_additions(n, spec.limits, |add, groups| {
        let mut found = Vec::new();
        for mul in groups {
            for t in 0..n {
                let iota = SelfMap::from_fn(n, |a| mul.op(mul.inv(a), t));
                if iota_law(mul, &iota).is_err() || almost_law(add, mul.table(), &iota).is_err() {
                    continue;
                }
                let a = AlmostLeftSemiBrace::new(add.clone(), mul.table().clone(), iota)
                    .expect("both almost axioms hold");
                found.push(a);
            }
        }
        found
    });
    Ok(finish(e, spec, AlmostLeftSemiBrace::relabel))
}

pub fn run(spec: &EnumSpec) -> Result<Enumeration<Instance>> {
    Ok(match spec.kind {
        Kind::Semigroup => enum_semigroups(spec)?.map(Instance::Semigroup),
        Kind::Group => enum_groups(spec)?.map(Instance::Group),
        Kind::BraceLike => enum_brace_like(spec)?.map(Instance::BraceLike),
        Kind::LeftSemiBrace => enum_left_semi_braces(spec)?.map(Instance::LeftSemiBrace),
        Kind::Almost => enum_almost(spec)?.map(Instance::Almost),
    })
}
