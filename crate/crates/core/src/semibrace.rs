//! Left semi-braces and almost left semi-braces.

use crate::error::{AlgebraError, Result};
use crate::report::VerificationReport;
use crate::table::{
    as_group, check_associative, full_set, idempotents, map_order,
    product_set, same_order, BinOpTable, Element, ElementSet, FiniteGroup, FiniteSemigroup,
    SelfMap, Verdict,
};
use crate::truss::{
    lambda_endomorphisms, lambda_morphism, not_verified, record_group, BraceLikeSemiTruss,
    LambdaFamily,
};

/// `a∘(b+c) = a∘b + a∘(ā+c)`; witness `(a, b, c)`.
pub fn semi_brace_law(add: &BinOpTable, mul: &FiniteGroup) -> Verdict {
    for a in add.elements() {
        let abar = mul.inv(a);
        for b in add.elements() {
            let ab = mul.op(a, b);
            for c in add.elements() {
                if mul.op(a, add.op(b, c)) != add.op(ab, mul.op(a, add.op(abar, c))) {
                    return Err(vec![a, b, c]);
                }
            }
        }
    }
    Ok(())
}

pub fn verify_left_semi_brace(add: &BinOpTable, mul: &BinOpTable) -> Result<VerificationReport> {
    same_order(add, mul)?;
    let mut report = VerificationReport::new("left semi-brace");
    report.run("add-associative", || check_associative(add));
    record_group(&mut report, "mul-group", mul);
    match as_group(mul) {
        Ok(g) => {
            report.run("semi-brace-law", || semi_brace_law(add, &g));
        }
        Err(_) => {
            report.record_bool("semi-brace-law", false, Some("requires (B,∘) to be a group".into()));
        }
    }
    Ok(report)
}

/// `ι(a∘b) = b̄∘ι(a)`; witness `(a, b)`.
pub fn iota_law(mul: &FiniteGroup, iota: &SelfMap) -> Verdict {
    for a in mul.table().elements() {
        for b in mul.table().elements() {
            if iota.apply(mul.op(a, b)) != mul.op(mul.inv(b), iota.apply(a)) {
                return Err(vec![a, b]);
            }
        }
    }
    Ok(())
}

/// `a∘(b+c) = a∘b + a∘(ι(a)+c)`; witness `(a, b, c)`.
pub fn almost_law(add: &BinOpTable, mul: &BinOpTable, iota: &SelfMap) -> Verdict {
    for a in add.elements() {
        let ia = iota.apply(a);
        for b in add.elements() {
            let ab = mul.op(a, b);
            for c in add.elements() {
                if mul.op(a, add.op(b, c)) != add.op(ab, mul.op(a, add.op(ia, c))) {
                    return Err(vec![a, b, c]);
                }
            }
        }
    }
    Ok(())
}

/// `(ι(a)+b)∘ι(1) = ι(a) + b∘ι(1)`; witness `(a, b)`.
pub fn compat_law(add: &BinOpTable, mul: &FiniteGroup, iota: &SelfMap) -> Verdict {
    let i1 = iota.apply(mul.identity());
    for a in add.elements() {
        let ia = iota.apply(a);
        for b in add.elements() {
            if mul.op(add.op(ia, b), i1) != add.op(ia, mul.op(b, i1)) {
                return Err(vec![a, b]);
            }
        }
    }
    Ok(())
}

/// `a+b = a+c` implies `b = c`; witness `(a, b, c)`.
pub fn left_cancellative(add: &BinOpTable) -> Verdict {
    for a in add.elements() {
        for b in add.elements() {
            for c in (b + 1)..add.order() {
                if add.op(a, b) == add.op(a, c) {
                    return Err(vec![a, b, c]);
                }
            }
        }
    }
    Ok(())
}

/// Which definition of almost left semi-brace to verify against.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AlmostProfile {
    /// Semigroup `+`, group `∘`, the `ι` law and the distributive law.
    #[default]
    Standard,
    /// Additionally: `+` left cancellative and the compatibility condition.
    Miccoli,
}

pub fn verify_almost(
    add: &BinOpTable,
    mul: &BinOpTable,
    iota: &SelfMap,
    profile: AlmostProfile,
) -> Result<VerificationReport> {
    same_order(add, mul)?;
    map_order(add, iota)?;
    let mut report = VerificationReport::new("almost left semi-brace");
    report.run("add-associative", || check_associative(add));
    record_group(&mut report, "mul-group", mul);
    let group = as_group(mul).ok();
    match &group {
        Some(g) => report.run("iota-law", || iota_law(g, iota)),
        None => report.record_bool("iota-law", false, Some("requires (B,∘) to be a group".into())),
    };
    report.run("almost-law", || almost_law(add, mul, iota));
    if profile == AlmostProfile::Miccoli {
        report.run("add-left-cancellative", || left_cancellative(add));
        match &group {
            Some(g) => report.run("compat", || compat_law(add, g, iota)),
            None => report.record_bool("compat", false, None),
        };
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftSemiBrace {
    add: FiniteSemigroup,
    mul: FiniteGroup,
}

impl LeftSemiBrace {
    pub fn relabel(&self, perm: &[Element]) -> Self {
        LeftSemiBrace {
            add: self.add.relabel(perm),
            mul: self.mul.relabel(perm),
        }
    }

    pub fn new(add: BinOpTable, mul: BinOpTable) -> Result<Self> {
        let report = verify_left_semi_brace(&add, &mul)?;
        if !report.passed() {
            return Err(not_verified(&report));
        }
        Ok(LeftSemiBrace {
            add: FiniteSemigroup::new_unchecked(add),
            mul: as_group(&mul)?,
        })
    }

    pub fn add(&self) -> &FiniteSemigroup {
        &self.add
    }

    pub fn mul(&self) -> &FiniteGroup {
        &self.mul
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    /// `λ_a(b) = a∘(ā+b)`.
    pub fn lambda(&self) -> LambdaFamily {
        let (add, mul) = (self.add.table(), &self.mul);
        LambdaFamily::from_fn(self.order(), |a, b| mul.op(a, add.op(mul.inv(a), b)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlmostLeftSemiBrace {
    add: FiniteSemigroup,
    mul: FiniteGroup,
    iota: SelfMap,
    iota_inv: SelfMap,
}

impl AlmostLeftSemiBrace {
    pub fn relabel(&self, perm: &[Element]) -> Self {
        AlmostLeftSemiBrace {
            add: self.add.relabel(perm),
            mul: self.mul.relabel(perm),
            iota: self.iota.relabel(perm),
            iota_inv: self.iota_inv.relabel(perm),
        }
    }

    pub fn new(add: BinOpTable, mul: BinOpTable, iota: SelfMap) -> Result<Self> {
        Self::with_profile(add, mul, iota, AlmostProfile::Standard)
    }

    pub fn with_profile(
        add: BinOpTable,
        mul: BinOpTable,
        iota: SelfMap,
        profile: AlmostProfile,
    ) -> Result<Self> {
        let report = verify_almost(&add, &mul, &iota, profile)?;
        if !report.passed() {
            return Err(not_verified(&report));
        }
        let iota_inv = iota.inverse().ok_or(AlgebraError::IotaNotBijective)?;
        Ok(AlmostLeftSemiBrace {
            add: FiniteSemigroup::new_unchecked(add),
            mul: as_group(&mul)?,
            iota,
            iota_inv,
        })
    }

    /// A left semi-brace viewed as an almost left semi-brace with `ι(a) = ā`.
    pub fn from_semi_brace(s: &LeftSemiBrace) -> Self {
        let iota = s.mul().inversion_map();
        AlmostLeftSemiBrace {
            add: s.add().clone(),
            mul: s.mul().clone(),
            iota_inv: iota.clone(),
            iota,
        }
    }

    pub fn add(&self) -> &FiniteSemigroup {
        &self.add
    }

    pub fn mul(&self) -> &FiniteGroup {
        &self.mul
    }

    pub fn iota(&self) -> &SelfMap {
        &self.iota
    }

    pub fn iota_inv(&self) -> &SelfMap {
        &self.iota_inv
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn one(&self) -> Element {
        self.mul.identity()
    }

    /// Whether `ι(a) = ā` for all `a`, i.e. `(B,+,∘)` is a left semi-brace.
    pub fn iota_is_inversion(&self) -> bool {
        self.iota.image() == self.mul.inverses()
    }

    pub fn as_semi_brace(&self) -> Option<LeftSemiBrace> {
        self.iota_is_inversion().then(|| LeftSemiBrace {
            add: self.add.clone(),
            mul: self.mul.clone(),
        })
    }
}

/// `λ_a(b) = a∘(ι(a)+b)`.
pub fn derived_lambda(a: &AlmostLeftSemiBrace) -> LambdaFamily {
    let (add, mul, iota) = (a.add().table(), a.mul(), a.iota());
    LambdaFamily::from_fn(a.order(), |x, y| mul.op(x, add.op(iota.apply(x), y)))
}

/// `(B, +, ∘, λ)` with the derived `λ`; fails only if that bundle does not verify.
pub fn almost_to_bracelike(a: &AlmostLeftSemiBrace) -> Result<BraceLikeSemiTruss> {
    BraceLikeSemiTruss::new(
        a.add().table().clone(),
        a.mul().table().clone(),
        derived_lambda(a),
    )
}

/// Properties of the derived `λ`: endomorphisms of `+`, a homomorphism from
/// `(B,∘)`, and `λ_a(e) ∈ E(B) ∩ (ι(1)+B)` with `ι(1)+λ_a(e) = λ_a(e)`.
pub fn derived_lambda_properties(a: &AlmostLeftSemiBrace) -> VerificationReport {
    let add = a.add().table();
    let lambda = derived_lambda(a);
    let i1 = a.iota().apply(a.one());
    let es = idempotents(add);
    let shifted = product_set(add, &ElementSet::from([i1]), &full_set(a.order()));
    let mut report = VerificationReport::new("derived lambda");
    report.run("lambda-endomorphisms", || lambda_endomorphisms(add, &lambda));
    report.run("lambda-morphism", || lambda_morphism(a.mul().table(), &lambda));
    report.run("lambda-idempotents", || {
        for x in add.elements() {
            for &e in &es {
                let v = lambda.apply(x, e);
                if !es.contains(&v) || !shifted.contains(&v) || add.op(i1, v) != v {
                    return Err(vec![x, e]);
                }
            }
        }
        Ok(())
    });
    report
}

/// The four properties of `ι`.
pub fn iota_properties(a: &AlmostLeftSemiBrace) -> VerificationReport {
    let add = a.add().table();
    let mul = a.mul();
    let iota = a.iota();
    let i1 = iota.apply(a.one());
    let mut report = VerificationReport::new("iota");
    report.run("add-absorbs-iota1", || {
        for x in add.elements() {
            for y in add.elements() {
                if add.op(x, y) != add.op(add.op(x, i1), y) {
                    return Err(vec![x, y]);
                }
            }
        }
        Ok(())
    });
    report.record_bool("iota-bijective", iota.is_bijective(), None);
    report.run("iota-closed-form", || {
        match add.elements().find(|&x| iota.apply(x) != mul.op(mul.inv(x), i1)) {
            Some(x) => Err(vec![x]),
            None => Ok(()),
        }
    });
    report.run("iota-inverse-law", || {
        let inv = match iota.inverse() {
            Some(inv) => inv,
            None => return Err(Vec::new()),
        };
        for x in add.elements() {
            for y in add.elements() {
                if inv.apply(mul.op(x, y)) != mul.op(inv.apply(y), mul.inv(x)) {
                    return Err(vec![x, y]);
                }
            }
        }
        Ok(())
    });
    report
}

/// `(ι(a)+b)∘ι(1) = ι(a) + b∘ι(1)` for all `a, b`.
pub fn check_compat(a: &AlmostLeftSemiBrace) -> Verdict {
    compat_law(a.add().table(), a.mul(), a.iota())
}

/// `(B, ⊕, ∘op)` with `a⊕b = ι⁻¹(ι(a)+ι(b))`.
pub fn associated_semi_brace(a: &AlmostLeftSemiBrace) -> Result<LeftSemiBrace> {
    let iota_inv = a.iota().inverse().ok_or(AlgebraError::IotaNotBijective)?;
    let (add, iota) = (a.add().table(), a.iota());
    let oplus = BinOpTable::from_fn(a.order(), |x, y| {
        iota_inv.apply(add.op(iota.apply(x), iota.apply(y)))
    });
    let report = verify_left_semi_brace(&oplus, &a.mul().table().transpose())?;
    if !report.passed() {
        return Err(not_verified(&report));
    }
    Ok(LeftSemiBrace {
        add: FiniteSemigroup::new_unchecked(oplus),
        mul: a.mul().opposite(),
    })
}

/// `f` is a homomorphism of `+`, of `∘`, and `f ι₁ = ι₂ f`.
pub fn is_almost_homomorphism(
    f: &SelfMap,
    from: &AlmostLeftSemiBrace,
    to: &AlmostLeftSemiBrace,
) -> bool {
    if f.len() != from.order() || from.order() != to.order() {
        return false;
    }
    let n = from.order();
    (0..n).all(|x| {
        f.apply(from.iota().apply(x)) == to.iota().apply(f.apply(x))
            && (0..n).all(|y| {
                f.apply(from.add().op(x, y)) == to.add().op(f.apply(x), f.apply(y))
                    && f.apply(from.mul().op(x, y)) == to.mul().op(f.apply(x), f.apply(y))
            })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::truss::verify_brace_like;

    fn lift(add: BinOpTable, mul: BinOpTable) -> AlmostLeftSemiBrace {
        AlmostLeftSemiBrace::from_semi_brace(&LeftSemiBrace::new(add, mul).unwrap())
    }

    #[test]
    fn semi_brace_examples() {
        let (add, mul) = fixtures::rz_z3();
        assert!(verify_left_semi_brace(&add, &mul).unwrap().passed());
        let lz = BinOpTable::left_zero(3);
        assert!(verify_left_semi_brace(&lz, &BinOpTable::cyclic(3)).unwrap().passed());
        let (add, mul) = fixtures::trivial_z2();
        assert!(verify_left_semi_brace(&add, &mul).unwrap().passed());
        // Z3 addition with a left-zero "group" is rejected
        let r = verify_left_semi_brace(&BinOpTable::cyclic(3), &BinOpTable::left_zero(3)).unwrap();
        assert_eq!(r.check_passed("mul-group"), Some(false));
        assert_eq!(r.check_passed("semi-brace-law"), Some(false));
    }

    #[test]
    fn almost_examples() {
        let (add, mul) = fixtures::rz_z3();
        let g = as_group(&mul).unwrap();
        let inv = g.inversion_map();
        assert!(verify_almost(&add, &mul, &inv, AlmostProfile::Standard).unwrap().passed());
        let r = verify_almost(&add, &mul, &SelfMap::identity(3), AlmostProfile::Standard).unwrap();
        let w = r.get("iota-law").unwrap().witness.clone().unwrap();
        assert_eq!(w, vec![0, 1]);
        let (a, b) = (w[0], w[1]);
        assert_ne!(mul.op(a, b), mul.op(g.inv(b), a));
    }

    #[test]
    fn miccoli_profile_requires_cancellation() {
        let (add, mul) = fixtures::rz_z3();
        let inv = as_group(&mul).unwrap().inversion_map();
        let r = verify_almost(&add, &mul, &inv, AlmostProfile::Miccoli).unwrap();
        assert_eq!(r.check_passed("add-left-cancellative"), Some(true));
        assert_eq!(r.check_passed("compat"), Some(true));
        let lz = BinOpTable::left_zero(3);
        let r = verify_almost(&lz, &mul, &inv, AlmostProfile::Miccoli).unwrap();
        assert_eq!(r.check_passed("add-left-cancellative"), Some(false));
        assert!(verify_almost(&lz, &mul, &inv, AlmostProfile::Standard).unwrap().passed());
    }

    #[test]
    fn derived_lambda_examples() {
        // right-zero: λ_a(b) = a∘b
        let (add, mul) = fixtures::rz_z3();
        let a = lift(add, mul.clone());
        let lambda = derived_lambda(&a);
        assert_eq!(lambda, LambdaFamily::from_fn(3, |x, y| mul.op(x, y)));
        assert!(derived_lambda_properties(&a).passed());
        // left-zero over Z2: λ_a(b) = a∘ā = 1
        let a = lift(BinOpTable::left_zero(2), BinOpTable::cyclic(2));
        let lambda = derived_lambda(&a);
        assert_eq!(lambda, LambdaFamily::constant(2, SelfMap::constant(2, 0)));
        assert_eq!(lambda_morphism(a.mul().table(), &lambda), Ok(()));
        // matches the semi-brace λ when ι(a) = ā
        let s = a.as_semi_brace().unwrap();
        assert_eq!(s.lambda(), lambda);
    }

    #[test]
    fn bracelike_from_almost() {
        let (add, mul) = fixtures::rz_z3();
        let t = almost_to_bracelike(&lift(add, mul)).unwrap();
        assert!(verify_brace_like(t.add().table(), t.mul().table(), t.lambda()).unwrap().passed());
        let (add, mul) = fixtures::trivial_z2();
        let t = almost_to_bracelike(&lift(add, mul)).unwrap();
        assert_eq!(t.lambda(), &LambdaFamily::identity(2));
        let t = almost_to_bracelike(&lift(BinOpTable::left_zero(2), BinOpTable::cyclic(2))).unwrap();
        assert_eq!(t.lambda(), &LambdaFamily::constant(2, SelfMap::constant(2, 0)));
    }

    #[test]
    fn iota_properties_for_inversion() {
        for (add, mul) in [fixtures::rz_z3(), fixtures::trivial_z2()] {
            let a = lift(add, mul);
            let r = iota_properties(&a);
            assert!(r.passed(), "{r}");
            assert_eq!(check_compat(&a), Ok(()));
        }
    }

    #[test]
    fn iota_with_nontrivial_unit() {
        // right-zero over Z3 with ι(1) = 1 (index 1): ι(a) = ā∘1
        let (add, mul) = fixtures::rz_z3();
        let g = as_group(&mul).unwrap();
        let iota = SelfMap::from_fn(3, |x| g.op(g.inv(x), 1));
        let a = AlmostLeftSemiBrace::new(add, mul, iota).unwrap();
        assert!(!a.iota_is_inversion());
        assert!(iota_properties(&a).passed());
        assert!(derived_lambda_properties(&a).passed());
        let s = associated_semi_brace(&a).unwrap();
        assert!(verify_left_semi_brace(s.add().table(), s.mul().table()).unwrap().passed());
    }

    #[test]
    fn associated_semi_brace_examples() {
        let (add, mul) = fixtures::rz_z3();
        let a = lift(add, mul.clone());
        let s = associated_semi_brace(&a).unwrap();
        assert_eq!(s.add().table(), &BinOpTable::right_zero(3));
        assert_eq!(s.mul().table(), &mul.transpose());
        let (add, mul) = fixtures::trivial_z2();
        let s = associated_semi_brace(&lift(add.clone(), mul.clone())).unwrap();
        assert_eq!(s.add().table(), &add);
        assert_eq!(s.mul().table(), &mul);
    }

    #[test]
    fn homomorphism_predicate() {
        let (add, mul) = fixtures::rz_z3();
        let a = lift(add, mul);
        assert!(is_almost_homomorphism(&SelfMap::identity(3), &a, &a));
        // negation is an automorphism of Z3 and of right-zero, commuting with inversion
        assert!(is_almost_homomorphism(&SelfMap::new(vec![0, 2, 1]).unwrap(), &a, &a));
        assert!(!is_almost_homomorphism(&SelfMap::new(vec![1, 2, 0]).unwrap(), &a, &a));
    }
}
