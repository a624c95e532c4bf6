//! Left semi-trusses, brace-like left semi-trusses and skew left trusses.
//!
//! The verifiers take raw tables and return a [`VerificationReport`]; the
//! structure types can only be built from tables that pass their verifier.
//! The lemma checks recompute everything from the tables and never assume
//! the statement they are checking.

use crate::error::{AlgebraError, Operation, Result};
use crate::report::VerificationReport;
use crate::table::{
    as_group, check_associative, full_set, has_zero_element, idempotents, is_completely_simple,
    is_group_with_identity, is_primitive_idempotent, is_simple, is_subgroup, map_order,
    product_set, same_order, triple_product, BinOpTable, Element, ElementSet, FiniteGroup,
    FiniteSemigroup, SelfMap, Verdict,
};

/// One self-map per element: `maps[a] = λ_a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaFamily {
    maps: Vec<SelfMap>,
}

impl LambdaFamily {
    pub fn new(maps: Vec<SelfMap>) -> Result<Self> {
        let n = maps.len();
        if n == 0 {
            return Err(AlgebraError::InvalidTable("empty lambda family".into()));
        }
        if let Some(bad) = maps.iter().find(|m| m.len() != n) {
            return Err(AlgebraError::SizeMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(LambdaFamily { maps })
    }

    /// `rows[a][b] = λ_a(b)`.
    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self> {
        let maps = rows
            .iter()
            .map(|r| SelfMap::new(r.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(maps)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Element, Element) -> Element) -> Self {
        LambdaFamily {
            maps: (0..n).map(|a| SelfMap::from_fn(n, |b| f(a, b))).collect(),
        }
    }

    /// `λ_a = f` for every `a`.
    pub fn constant(n: usize, f: SelfMap) -> Self {
        assert_eq!(f.len(), n);
        LambdaFamily { maps: vec![f; n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::constant(n, SelfMap::identity(n))
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn map(&self, a: Element) -> &SelfMap {
        &self.maps[a]
    }

    #[inline]
    pub fn apply(&self, a: Element, b: Element) -> Element {
        self.maps[a].apply(b)
    }

    pub fn maps(&self) -> &[SelfMap] {
        &self.maps
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.maps.iter().map(|m| m.image().to_vec()).collect()
    }

    pub fn relabel(&self, perm: &[Element]) -> LambdaFamily {
        let n = self.maps.len();
        let mut rows = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                rows[perm[a]][perm[b]] = perm[self.apply(a, b)];
            }
        }
        LambdaFamily::from_rows(&rows).expect("relabeling preserves shape")
    }
}

/// `a∘(b+c) = a∘b + λ_a(c)`; witness `(a, b, c)`.
pub fn semi_truss_law(add: &BinOpTable, mul: &BinOpTable, lambda: &LambdaFamily) -> Verdict {
    for a in add.elements() {
        for b in add.elements() {
            let ab = mul.op(a, b);
            for c in add.elements() {
                if mul.op(a, add.op(b, c)) != add.op(ab, lambda.apply(a, c)) {
                    return Err(vec![a, b, c]);
                }
            }
        }
    }
    Ok(())
}

/// Each `λ_a` is an endomorphism of `+`; witness `(a, x, y)`.
pub fn lambda_endomorphisms(add: &BinOpTable, lambda: &LambdaFamily) -> Verdict {
    for a in add.elements() {
        let f = lambda.map(a);
        for x in add.elements() {
            for y in add.elements() {
                if f.apply(add.op(x, y)) != add.op(f.apply(x), f.apply(y)) {
                    return Err(vec![a, x, y]);
                }
            }
        }
    }
    Ok(())
}

/// `λ_{a∘b} = λ_a λ_b`; witness `(a, b, x)`.
pub fn lambda_morphism(mul: &BinOpTable, lambda: &LambdaFamily) -> Verdict {
    for a in mul.elements() {
        for b in mul.elements() {
            let ab = mul.op(a, b);
            for x in mul.elements() {
                if lambda.apply(ab, x) != lambda.apply(a, lambda.apply(b, x)) {
                    return Err(vec![a, b, x]);
                }
            }
        }
    }
    Ok(())
}

fn group_verdict(op: &BinOpTable) -> (Verdict, Option<String>) {
    match as_group(op) {
        Ok(_) => (Ok(()), None),
        Err(AlgebraError::NotAssociative(a, b, c)) => (Err(vec![a, b, c]), Some("not associative".into())),
        Err(AlgebraError::MissingInverse(a)) => (Err(vec![a]), Some("missing inverse".into())),
        Err(e) => (Err(Vec::new()), Some(e.to_string())),
    }
}

pub(crate) fn record_group(report: &mut VerificationReport, name: &str, op: &BinOpTable) -> bool {
    let (verdict, detail) = group_verdict(op);
    let ok = report.record(name, verdict);
    if let Some(d) = detail {
        report.with_detail(d);
    }
    ok
}

fn check_lambda_order(add: &BinOpTable, lambda: &LambdaFamily) -> Result<()> {
    if lambda.order() != add.order() {
        return Err(AlgebraError::SizeMismatch {
            expected: add.order(),
            found: lambda.order(),
        });
    }
    Ok(())
}

pub fn verify_left_semi_truss(
    add: &BinOpTable,
    mul: &BinOpTable,
    lambda: &LambdaFamily,
) -> Result<VerificationReport> {
    same_order(add, mul)?;
    check_lambda_order(add, lambda)?;
    let mut report = VerificationReport::new("left semi-truss");
    report.run("add-associative", || check_associative(add));
    report.run("mul-associative", || check_associative(mul));
    report.run("semi-truss-law", || semi_truss_law(add, mul, lambda));
    Ok(report)
}

pub fn verify_brace_like(
    add: &BinOpTable,
    mul: &BinOpTable,
    lambda: &LambdaFamily,
) -> Result<VerificationReport> {
    let mut report = verify_left_semi_truss(add, mul, lambda)?;
    report.subject = "brace-like left semi-truss".into();
    record_group(&mut report, "mul-group", mul);
    report.run("lambda-endomorphisms", || lambda_endomorphisms(add, lambda));
    report.run("lambda-morphism", || lambda_morphism(mul, lambda));
    Ok(report)
}

/// `a∘(b+c) = a∘b - σ(a) + a∘c`; witness `(a, b, c)`.
pub fn skew_truss_law(add: &FiniteGroup, mul: &BinOpTable, sigma: &SelfMap) -> Verdict {
    for a in add.table().elements() {
        let neg = add.inv(sigma.apply(a));
        for b in add.table().elements() {
            let left = add.op(mul.op(a, b), neg);
            for c in add.table().elements() {
                if mul.op(a, add.op(b, c)) != add.op(left, mul.op(a, c)) {
                    return Err(vec![a, b, c]);
                }
            }
        }
    }
    Ok(())
}

/// Fails with `NotAGroup(Add)` when `+` has no inverses to evaluate the law with;
/// a non-group `∘` is reported as a failed check instead.
pub fn verify_skew_truss(
    add: &BinOpTable,
    mul: &BinOpTable,
    sigma: &SelfMap,
) -> Result<VerificationReport> {
    same_order(add, mul)?;
    map_order(add, sigma)?;
    let add_group = as_group(add).map_err(|_| AlgebraError::NotAGroup(Operation::Add))?;
    let mut report = VerificationReport::new("skew left truss");
    report.record("add-group", Ok(()));
    record_group(&mut report, "mul-group", mul);
    report.run("skew-truss-law", || skew_truss_law(&add_group, mul, sigma));
    Ok(report)
}

pub(crate) fn not_verified(report: &VerificationReport) -> AlgebraError {
    let failed: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
    AlgebraError::NotVerified(format!("{}: {}", report.subject, failed.join(", ")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftSemiTruss {
    add: FiniteSemigroup,
    mul: FiniteSemigroup,
    lambda: LambdaFamily,
}

impl LeftSemiTruss {
    pub fn new(add: BinOpTable, mul: BinOpTable, lambda: LambdaFamily) -> Result<Self> {
        let report = verify_left_semi_truss(&add, &mul, &lambda)?;
        if !report.passed() {
            return Err(not_verified(&report));
        }
        Ok(LeftSemiTruss {
            add: FiniteSemigroup::new_unchecked(add),
            mul: FiniteSemigroup::new_unchecked(mul),
            lambda,
        })
    }

    pub fn add(&self) -> &FiniteSemigroup {
        &self.add
    }

    pub fn mul(&self) -> &FiniteSemigroup {
        &self.mul
    }

    pub fn lambda(&self) -> &LambdaFamily {
        &self.lambda
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraceLikeSemiTruss {
    add: FiniteSemigroup,
    mul: FiniteGroup,
    lambda: LambdaFamily,
}

impl BraceLikeSemiTruss {
    pub fn relabel(&self, perm: &[Element]) -> Self {
        BraceLikeSemiTruss {
            add: self.add.relabel(perm),
            mul: self.mul.relabel(perm),
            lambda: self.lambda.relabel(perm),
        }
    }

    pub fn new(add: BinOpTable, mul: BinOpTable, lambda: LambdaFamily) -> Result<Self> {
        let report = verify_brace_like(&add, &mul, &lambda)?;
        if !report.passed() {
            return Err(not_verified(&report));
        }
        let mul = as_group(&mul)?;
        Ok(BraceLikeSemiTruss {
            add: FiniteSemigroup::new_unchecked(add),
            mul,
            lambda,
        })
    }

    pub fn add(&self) -> &FiniteSemigroup {
        &self.add
    }

    pub fn mul(&self) -> &FiniteGroup {
        &self.mul
    }

    pub fn lambda(&self) -> &LambdaFamily {
        &self.lambda
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    /// `1`, the identity of `(B,∘)`.
    pub fn one(&self) -> Element {
        self.mul.identity()
    }

    pub fn to_left_semi_truss(&self) -> LeftSemiTruss {
        LeftSemiTruss {
            add: self.add.clone(),
            mul: self.mul.as_semigroup(),
            lambda: self.lambda.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewLeftTruss {
    add: FiniteGroup,
    mul: FiniteGroup,
    sigma: SelfMap,
}

impl SkewLeftTruss {
    pub fn new(add: BinOpTable, mul: BinOpTable, sigma: SelfMap) -> Result<Self> {
        let report = verify_skew_truss(&add, &mul, &sigma)?;
        if !report.passed() {
            return Err(not_verified(&report));
        }
        Ok(SkewLeftTruss {
            add: as_group(&add)?,
            mul: as_group(&mul)?,
            sigma,
        })
    }

    pub fn add(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn mul(&self) -> &FiniteGroup {
        &self.mul
    }

    pub fn sigma(&self) -> &SelfMap {
        &self.sigma
    }
}

/// The four statements about `λ_1` and `1+B`.
pub fn lemma_one_suite(t: &BraceLikeSemiTruss) -> VerificationReport {
    let add = t.add().table();
    let mul = t.mul().table();
    let lambda = t.lambda();
    let one = t.one();
    let l1 = lambda.map(one);
    let mut report = VerificationReport::new("lambda_1 and 1+B");

    report.run("lambda1-idempotent", || {
        match add.elements().find(|&x| l1.apply(l1.apply(x)) != l1.apply(x)) {
            Some(x) => Err(vec![x]),
            None => Ok(()),
        }
    });
    report.run("lambda1-absorbs", || {
        for a in add.elements() {
            let la = lambda.map(a);
            for x in add.elements() {
                if l1.apply(la.apply(x)) != la.apply(x) || la.apply(l1.apply(x)) != la.apply(x) {
                    return Err(vec![a, x]);
                }
            }
        }
        Ok(())
    });
    report.run("add-ignores-lambda1", || {
        for a in add.elements() {
            for b in add.elements() {
                if add.op(a, b) != add.op(a, l1.apply(b)) {
                    return Err(vec![a, b]);
                }
            }
        }
        Ok(())
    });
    let one_plus_b = product_set(add, &ElementSet::from([one]), &full_set(add.order()));
    report.run("one-plus-b-mul-closed", || {
        for &x in &one_plus_b {
            for &y in &one_plus_b {
                if !one_plus_b.contains(&mul.op(x, y)) {
                    return Err(vec![x, y]);
                }
            }
        }
        Ok(())
    });
    report.with_detail(format!("1+B = {one_plus_b:?}"));
    report
}

/// No additive zero element once `|B| >= 2`; witness `(θ)`.
pub fn lemma_no_zero(t: &BraceLikeSemiTruss) -> Verdict {
    match has_zero_element(t.add().table()) {
        Some(theta) if t.order() >= 2 => Err(vec![theta]),
        _ => Ok(()),
    }
}

/// The statements about the sumset `B+B` and its complement.
pub fn lemma_bb_suite(t: &BraceLikeSemiTruss) -> VerificationReport {
    let add = t.add().table();
    let g = t.mul();
    let all = full_set(t.order());
    let sums = product_set(add, &all, &all);
    let mut complement: ElementSet = all.difference(&sums).copied().collect();
    complement.insert(t.one());
    let mut report = VerificationReport::new("B+B");

    report.record_bool(
        "one-in-sumset",
        sums.contains(&t.one()),
        Some(format!("B+B = {sums:?}")),
    );
    report.record_bool(
        "sumset-subgroup",
        is_subgroup(&sums, g).unwrap_or(false),
        None,
    );
    report.record_bool(
        "complement-subgroup",
        is_subgroup(&complement, g).unwrap_or(false),
        Some(format!("(B\\(B+B)) ∪ {{1}} = {complement:?}")),
    );
    report.record_bool("sumset-is-carrier", sums == all, None);
    report
}

/// How [`find_subgroup_idempotent`] produced its idempotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdempotentSource {
    /// `1+b = 1` for every `b`, so `z = 1`.
    Absorbing,
    /// `z = b + Σ_{i=1}^{k-1} λ_{(1+b)^i}(b)` where `k` is the order of `1+b`.
    Accumulated { b: Element, order: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupIdempotent {
    pub z: Element,
    /// `z+B+z`, a group under `+` with identity `z`.
    pub group: ElementSet,
    pub source: IdempotentSource,
}

/// The three conditions `z+z = z`, `z+B+z = 1+B+z`, and `(z+B+z, +)` a group
/// with identity `z`. Returns the first one that fails.
pub fn subgroup_idempotent_conditions(
    t: &BraceLikeSemiTruss,
    z: Element,
) -> std::result::Result<ElementSet, &'static str> {
    let add = t.add().table();
    let all = full_set(t.order());
    let zs = ElementSet::from([z]);
    if add.op(z, z) != z {
        return Err("z+z = z");
    }
    let zbz = triple_product(add, &zs, &all, &zs);
    let obz = triple_product(add, &ElementSet::from([t.one()]), &all, &zs);
    if zbz != obz {
        return Err("z+B+z = 1+B+z");
    }
    if !is_group_with_identity(&zbz, add, z) {
        return Err("z+B+z is a group with identity z");
    }
    Ok(zbz)
}

/// Constructs an idempotent `z` of `(B,+)` for which `z+B+z = 1+B+z` is a
/// group, following the accumulation `z_b = b + λ_{(1+b)}(b) + ... +
/// λ_{(1+b)^{k-1}}(b)` (left to right) over candidates `b ∈ 1+B` with
/// `1+b ≠ 1`, then over the remaining `b`. The first candidate that passes
/// [`subgroup_idempotent_conditions`] is returned.
pub fn find_subgroup_idempotent(t: &BraceLikeSemiTruss) -> Result<SubgroupIdempotent> {
    let add = t.add().table();
    let g = t.mul();
    let one = t.one();
    let all = full_set(t.order());

    if add.elements().all(|b| add.op(one, b) == one) {
        return match subgroup_idempotent_conditions(t, one) {
            Ok(group) => Ok(SubgroupIdempotent {
                z: one,
                group,
                source: IdempotentSource::Absorbing,
            }),
            Err(what) => Err(AlgebraError::PostconditionViolated(format!(
                "z = 1 (1+B = {{1}}) fails {what}"
            ))),
        };
    }

    let one_plus = product_set(add, &ElementSet::from([one]), &all);
    let candidates = one_plus
        .iter()
        .copied()
        .chain(all.difference(&one_plus).copied())
        .filter(|&b| add.op(one, b) != one);

    let mut tried = Vec::new();
    for b in candidates {
        let u = add.op(one, b);
        let order = g.element_order(u);
        let mut z = b;
        let mut power = u;
        for _ in 1..order {
            z = add.op(z, t.lambda().apply(power, b));
            power = g.op(u, power);
        }
        match subgroup_idempotent_conditions(t, z) {
            Ok(group) => {
                return Ok(SubgroupIdempotent {
                    z,
                    group,
                    source: IdempotentSource::Accumulated { b, order },
                })
            }
            Err(what) => tried.push(format!("b={b} gives z={z}, fails {what}")),
        }
    }
    Err(AlgebraError::PostconditionViolated(tried.join("; ")))
}

/// `c ∈ c+z+B` for every `c`, and `B+z+B = B`.
///
/// Requires `z` idempotent with `z+B+z` a group under `+` with identity `z`.
pub fn lemma_bzb_check(t: &BraceLikeSemiTruss, z: Element) -> Result<bool> {
    let add = t.add().table();
    let all = full_set(t.order());
    let zs = ElementSet::from([z]);
    if z >= t.order() || add.op(z, z) != z {
        return Err(AlgebraError::PreconditionViolated(format!("{z} is not idempotent")));
    }
    let zbz = triple_product(add, &zs, &all, &zs);
    if !is_group_with_identity(&zbz, add, z) {
        return Err(AlgebraError::PreconditionViolated(format!(
            "z+B+z is not a group with identity {z}"
        )));
    }
    let each = add
        .elements()
        .all(|c| add.elements().any(|b| add.op(add.op(c, z), b) == c));
    Ok(each && triple_product(add, &all, &zs, &all) == all)
}

/// Runs the idempotent construction, then checks that `z` is primitive and
/// `(B,+)` is completely simple.
pub fn theorem_completely_simple(t: &BraceLikeSemiTruss) -> Result<VerificationReport> {
    let add = t.add().table();
    let found = find_subgroup_idempotent(t)?;
    let z = found.z;
    let mut report = VerificationReport::new("completely simple additive semigroup");
    report.record_bool(
        "subgroup-idempotent",
        true,
        Some(format!("z = {z}, z+B+z = {:?}, via {:?}", found.group, found.source)),
    );
    let recheck = subgroup_idempotent_conditions(t, z);
    report.record_bool(
        "subgroup-idempotent-recheck",
        recheck.is_ok(),
        recheck.err().map(str::to_string),
    );
    report.record_bool("z-primitive", is_primitive_idempotent(z, add)?, None);
    report.record_bool("add-simple", is_simple(add)?, None);
    report.record_bool("add-completely-simple", is_completely_simple(add)?, None);
    Ok(report)
}

/// `λ_a(e)` is idempotent for all `a` and idempotent `e`; witness `(a, e)`.
pub fn lemma_lambda_idempotents(t: &LeftSemiTruss) -> Verdict {
    let add = t.add().table();
    let es = idempotents(add);
    for a in add.elements() {
        for &e in &es {
            let v = t.lambda().apply(a, e);
            if add.op(v, v) != v {
                return Err(vec![a, e]);
            }
        }
    }
    Ok(())
}

/// `E(B)` closed under `∘`; witness `(e, f)` with `e∘f ∉ E(B)`.
pub fn idempotents_closed_under_mul(t: &LeftSemiTruss) -> Verdict {
    let es = idempotents(t.add().table());
    for &e in &es {
        for &f in &es {
            if !es.contains(&t.mul().op(e, f)) {
                return Err(vec![e, f]);
            }
        }
    }
    Ok(())
}

/// Every structural statement about a brace-like left semi-truss, in one report.
pub fn brace_like_suite(t: &BraceLikeSemiTruss) -> VerificationReport {
    let mut report = VerificationReport::new("brace-like analysis");
    report.absorb("", lemma_one_suite(t));
    report.record("no-additive-zero", lemma_no_zero(t));
    report.absorb("", lemma_bb_suite(t));
    match theorem_completely_simple(t) {
        Ok(r) => report.absorb("", r),
        Err(e) => {
            report.record_bool("subgroup-idempotent", false, Some(e.to_string()));
        }
    }
    match find_subgroup_idempotent(t) {
        Ok(found) => {
            let ok = lemma_bzb_check(t, found.z);
            report.record_bool(
                "b-plus-z-plus-b",
                matches!(ok, Ok(true)),
                ok.err().map(|e| e.to_string()),
            );
        }
        Err(_) => {
            report.record_bool("b-plus-z-plus-b", false, Some("no subgroup idempotent".into()));
        }
    }
    let lst = t.to_left_semi_truss();
    report.record("lambda-preserves-idempotents", lemma_lambda_idempotents(&lst));
    report
}
