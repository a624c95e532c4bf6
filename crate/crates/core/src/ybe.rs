//! Set-theoretic solutions of the Yang-Baxter equation on finite carriers.
//!
//! A map `r(x, y) = (λ_x(y), ρ_y(x))` is stored as two tables:
//! `out1[x][y] = λ_x(y)` and `out2[x][y] = ρ_y(x)`.

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::report::VerificationReport;
use crate::semibrace::{associated_semi_brace, check_compat, AlmostLeftSemiBrace, LeftSemiBrace};
use crate::table::{BinOpTable, Element, FiniteGroup, SelfMap, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SolutionMap {
    order: usize,
    out1: Vec<Vec<Element>>,
    out2: Vec<Vec<Element>>,
}

impl SolutionMap {
    pub fn from_tables(out1: &BinOpTable, out2: &BinOpTable) -> Result<Self> {
        if out1.order() != out2.order() {
            return Err(AlgebraError::SizeMismatch {
                expected: out1.order(),
                found: out2.order(),
            });
        }
        Ok(SolutionMap {
            order: out1.order(),
            out1: out1.rows(),
            out2: out2.rows(),
        })
    }

    /// Validating constructor for deserialized data.
    pub fn from_rows(out1: Vec<Vec<Element>>, out2: Vec<Vec<Element>>) -> Result<Self> {
        let a = BinOpTable::from_rows(&out1)?;
        let b = BinOpTable::from_rows(&out2)?;
        Self::from_tables(&a, &b)
    }

    pub fn from_fn(n: usize, mut r: impl FnMut(Element, Element) -> (Element, Element)) -> Self {
        let mut out1 = vec![vec![0; n]; n];
        let mut out2 = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = r(x, y);
                assert!(u < n && v < n, "solution entry out of range");
                out1[x][y] = u;
                out2[x][y] = v;
            }
        }
        SolutionMap { order: n, out1, out2 }
    }

    /// `r(x, y) = (y, x)`
    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, |x, y| (y, x))
    }

    /// `r(x, y) = (x, y)`
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |x, y| (x, y))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn apply(&self, x: Element, y: Element) -> (Element, Element) {
        (self.out1[x][y], self.out2[x][y])
    }

    /// `λ_x(y)`
    #[inline]
    pub fn lambda(&self, x: Element, y: Element) -> Element {
        self.out1[x][y]
    }

    /// `ρ_y(x)`
    #[inline]
    pub fn rho(&self, y: Element, x: Element) -> Element {
        self.out2[x][y]
    }

    pub fn out1(&self) -> &[Vec<Element>] {
        &self.out1
    }

    pub fn out2(&self) -> &[Vec<Element>] {
        &self.out2
    }
}

/// `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on every triple; witness `(x, y, z)`.
pub fn check_ybe(r: &SolutionMap) -> Verdict {
    let n = r.order();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // left side: r12, then r23, then r12
                let (a1, b1) = r.apply(x, y);
                let (b2, c2) = r.apply(b1, z);
                let (a3, b3) = r.apply(a1, b2);
                let lhs = (a3, b3, c2);
                // right side: r23, then r12, then r23
                let (b1, c1) = r.apply(y, z);
                let (a2, b2) = r.apply(x, b1);
                let (b3, c3) = r.apply(b2, c1);
                let rhs = (a2, b3, c3);
                if lhs != rhs {
                    return Err(vec![x, y, z]);
                }
            }
        }
    }
    Ok(())
}

/// `(left, right)`: every `λ_x` bijective, every `ρ_y` bijective.
pub fn nondegeneracy(r: &SolutionMap) -> (bool, bool) {
    let n = r.order();
    let bijective = |f: &dyn Fn(Element) -> Element| SelfMap::from_fn(n, f).is_bijective();
    let left = (0..n).all(|x| bijective(&|y| r.lambda(x, y)));
    let right = (0..n).all(|y| bijective(&|x| r.rho(y, x)));
    (left, right)
}

/// `λ_x(y) ∘ ρ_y(x) = x ∘ y`; witness `(x, y)`.
pub fn check_lambda_rho(r: &SolutionMap, mul: &FiniteGroup) -> Verdict {
    let n = r.order();
    for x in 0..n {
        for y in 0..n {
            if mul.op(r.lambda(x, y), r.rho(y, x)) != mul.op(x, y) {
                return Err(vec![x, y]);
            }
        }
    }
    Ok(())
}

/// `ρ_{x∘y} = ρ_y ρ_x` (apply `ρ_x` first); witness `(x, y, a)`.
pub fn rho_anti_homomorphism(r: &SolutionMap, mul: &FiniteGroup) -> Verdict {
    let n = r.order();
    for x in 0..n {
        for y in 0..n {
            let xy = mul.op(x, y);
            for a in 0..n {
                if r.rho(xy, a) != r.rho(y, r.rho(x, a)) {
                    return Err(vec![x, y, a]);
                }
            }
        }
    }
    Ok(())
}

fn solution_from(mul: &FiniteGroup, add: &BinOpTable, twist: &SelfMap) -> Result<SolutionMap> {
    let r = SolutionMap::from_fn(mul.order(), |a, b| {
        let s = add.op(twist.apply(a), b);
        (mul.op(a, s), mul.op(mul.inv(s), b))
    });
    if let Err(w) = check_lambda_rho(&r, mul) {
        return Err(AlgebraError::PostconditionViolated(format!(
            "λ_x(y)∘ρ_y(x) = x∘y fails at {w:?}"
        )));
    }
    Ok(r)
}

/// `r_B(a, b) = (a∘(ι(a)+b), (ι(a)+b)⁻¹∘b)`.
pub fn build_r_almost(a: &AlmostLeftSemiBrace) -> Result<SolutionMap> {
    solution_from(a.mul(), a.add().table(), a.iota())
}

/// `r_B(a, b) = (a∘(ā+b), (ā+b)⁻¹∘b)`.
pub fn build_r_semibrace(s: &LeftSemiBrace) -> Result<SolutionMap> {
    solution_from(s.mul(), s.add().table(), &s.mul().inversion_map())
}

/// `a + λ_b(c)∘(ι(1)+ρ_c(b)) = a + b∘(ι(1)+c)` with `λ, ρ` read off `r_B`;
/// witness `(a, b, c)`.
pub fn check_cond_solution(a: &AlmostLeftSemiBrace) -> Result<Verdict> {
    let r = build_r_almost(a)?;
    let i1 = a.iota().apply(a.one());
    Ok(cond_solution(a.add().table(), a.mul(), i1, &r))
}

/// `a + λ_b(c)∘(1+ρ_c(b)) = a + b∘(1+c)`; witness `(a, b, c)`.
pub fn check_cond_solution_semi(s: &LeftSemiBrace) -> Result<Verdict> {
    let r = build_r_semibrace(s)?;
    Ok(cond_solution(s.add().table(), s.mul(), s.mul().identity(), &r))
}

fn cond_solution(add: &BinOpTable, mul: &FiniteGroup, unit: Element, r: &SolutionMap) -> Verdict {
    let n = add.order();
    let tails: Vec<(Element, Element)> = (0..n * n)
        .map(|k| {
            let (b, c) = (k / n, k % n);
            (
                mul.op(r.lambda(b, c), add.op(unit, r.rho(c, b))),
                mul.op(b, add.op(unit, c)),
            )
        })
        .collect();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (lhs, rhs) = tails[b * n + c];
                if add.op(a, lhs) != add.op(a, rhs) {
                    return Err(vec![a, b, c]);
                }
            }
        }
    }
    Ok(())
}

/// `(f(λ_a(b)), f(ρ_b(a))) = (λ'_{f(a)}(f(b)), ρ'_{f(b)}(f(a)))` for all `a, b`.
pub fn solution_hom_check(f: &SelfMap, r: &SolutionMap, r2: &SolutionMap) -> Result<bool> {
    if r.order() != r2.order() {
        return Err(AlgebraError::SizeMismatch {
            expected: r.order(),
            found: r2.order(),
        });
    }
    if f.len() != r.order() {
        return Err(AlgebraError::SizeMismatch {
            expected: r.order(),
            found: f.len(),
        });
    }
    let n = r.order();
    Ok((0..n).all(|a| {
        (0..n).all(|b| {
            let (u, v) = r.apply(a, b);
            (f.apply(u), f.apply(v)) == r2.apply(f.apply(a), f.apply(b))
        })
    }))
}

/// A bijective homomorphism of solutions.
pub fn is_solution_isomorphism(f: &SelfMap, r: &SolutionMap, r2: &SolutionMap) -> Result<bool> {
    Ok(f.is_bijective() && solution_hom_check(f, r, r2)?)
}

pub const ISOMORPHISM_SEARCH_MAX_ORDER: usize = 7;

/// Brute-force search over bijections, extending partial maps only while the
/// defined part commutes with both solutions.
pub fn find_solution_isomorphism(r: &SolutionMap, r2: &SolutionMap) -> Result<Option<SelfMap>> {
    let n = r.order();
    if n != r2.order() {
        return Err(AlgebraError::SizeMismatch {
            expected: n,
            found: r2.order(),
        });
    }
    if n > ISOMORPHISM_SEARCH_MAX_ORDER {
        return Err(AlgebraError::OrderTooLarge {
            kind: "solution isomorphism".into(),
            order: n,
            max: ISOMORPHISM_SEARCH_MAX_ORDER,
        });
    }
    fn consistent(r: &SolutionMap, r2: &SolutionMap, f: &[Option<Element>], k: usize) -> bool {
        for a in 0..=k {
            for b in 0..=k {
                if a != k && b != k {
                    continue;
                }
                let (fa, fb) = (f[a].unwrap(), f[b].unwrap());
                let (u, v) = r.apply(a, b);
                let (u2, v2) = r2.apply(fa, fb);
                if f[u].is_some_and(|x| x != u2) || f[v].is_some_and(|x| x != v2) {
                    return false;
                }
            }
        }
        true
    }
    fn extend(
        r: &SolutionMap,
        r2: &SolutionMap,
        f: &mut Vec<Option<Element>>,
        used: &mut Vec<bool>,
        k: usize,
    ) -> bool {
        let n = r.order();
        if k == n {
            return true;
        }
        for t in 0..n {
            if used[t] {
                continue;
            }
            f[k] = Some(t);
            used[t] = true;
            if consistent(r, r2, f, k) && extend(r, r2, f, used, k + 1) {
                return true;
            }
            used[t] = false;
            f[k] = None;
        }
        false
    }
    let mut f = vec![None; n];
    let mut used = vec![false; n];
    if extend(r, r2, &mut f, &mut used, 0) {
        let map = SelfMap::from_fn(n, |a| f[a].unwrap());
        debug_assert!(is_solution_isomorphism(&map, r, r2).unwrap());
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// For an almost left semi-brace satisfying the compatibility condition and
/// the solution condition: the associated left semi-brace satisfies its own
/// solution condition, `λ'_a(b) = (λ_ā(b̄))⁻¹`, `ρ'_b(a) = (ρ_b̄(ā))⁻¹`, and
/// `a -> ā` is an isomorphism from `r_B` to `r'_B`.
pub fn theorem_iso_check(a: &AlmostLeftSemiBrace) -> Result<VerificationReport> {
    if let Err(w) = check_compat(a) {
        return Err(AlgebraError::PreconditionViolated(format!(
            "compatibility condition fails at {w:?}"
        )));
    }
    if let Err(w) = check_cond_solution(a)? {
        return Err(AlgebraError::PreconditionViolated(format!(
            "solution condition fails at {w:?}"
        )));
    }
    let r = build_r_almost(a)?;
    let s = associated_semi_brace(a)?;
    let r2 = build_r_semibrace(&s)?;
    let g = a.mul();
    let n = a.order();
    let mut report = VerificationReport::new("associated solution isomorphism");
    report.record("associated-cond-solution", check_cond_solution_semi(&s)?);
    report.run("lambda-prime-closed-form", || {
        for x in 0..n {
            for y in 0..n {
                if r2.lambda(x, y) != g.inv(r.lambda(g.inv(x), g.inv(y))) {
                    return Err(vec![x, y]);
                }
            }
        }
        Ok(())
    });
    report.run("rho-prime-closed-form", || {
        for x in 0..n {
            for y in 0..n {
                if r2.rho(y, x) != g.inv(r.rho(g.inv(y), g.inv(x))) {
                    return Err(vec![x, y]);
                }
            }
        }
        Ok(())
    });
    let f = g.inversion_map();
    report.record_bool("inversion-isomorphism", is_solution_isomorphism(&f, &r, &r2)?, None);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::semibrace::LeftSemiBrace;
    use crate::table::as_group;

    fn lift(add: BinOpTable, mul: BinOpTable) -> AlmostLeftSemiBrace {
        AlmostLeftSemiBrace::from_semi_brace(&LeftSemiBrace::new(add, mul).unwrap())
    }

    #[test]
    fn flip_and_identity_are_solutions() {
        for n in 1..=6 {
            assert_eq!(check_ybe(&SolutionMap::flip(n)), Ok(()));
            assert_eq!(check_ybe(&SolutionMap::identity(n)), Ok(()));
            assert_eq!(nondegeneracy(&SolutionMap::flip(n)), (true, true));
            // λ_x(y) = x is constant in y
            let expected = n == 1;
            assert_eq!(nondegeneracy(&SolutionMap::identity(n)), (expected, expected));
        }
    }

    #[test]
    fn nondegeneracy_of_left_zero_solution() {
        // r(a,b) = (1, a∘b) on Z2
        let r = SolutionMap::from_fn(2, |a, b| (0, (a + b) % 2));
        assert_eq!(nondegeneracy(&r), (false, true));
    }

    #[test]
    fn trivial_brace_gives_flip() {
        let (add, mul) = fixtures::trivial_z2();
        let a = lift(add, mul);
        assert_eq!(build_r_almost(&a).unwrap(), SolutionMap::flip(2));
        assert_eq!(build_r_semibrace(&a.as_semi_brace().unwrap()).unwrap(), SolutionMap::flip(2));
    }

    #[test]
    fn left_zero_semi_brace_solution() {
        let mul = BinOpTable::cyclic(3);
        let a = lift(BinOpTable::left_zero(3), mul.clone());
        let r = build_r_almost(&a).unwrap();
        assert_eq!(r, SolutionMap::from_fn(3, |x, y| (0, mul.op(x, y))));
        assert_eq!(check_cond_solution(&a).unwrap(), Ok(()));
        assert_eq!(check_cond_solution_semi(&a.as_semi_brace().unwrap()).unwrap(), Ok(()));
        assert_eq!(check_ybe(&r), Ok(()));
    }

    #[test]
    fn right_zero_semi_brace_solution() {
        let (add, mul) = fixtures::rz_z3();
        let a = lift(add, mul.clone());
        let r = build_r_almost(&a).unwrap();
        // ā+b = b: λ_a(b) = a∘b, ρ_b(a) = b̄∘b = 1
        assert_eq!(r, SolutionMap::from_fn(3, |x, y| (mul.op(x, y), 0)));
        let s = a.as_semi_brace().unwrap();
        assert_eq!(build_r_semibrace(&s).unwrap(), r);
        assert_eq!(check_lambda_rho(&r, a.mul()), Ok(()));
    }

    #[test]
    fn homomorphism_checks() {
        let r = SolutionMap::flip(3);
        assert!(solution_hom_check(&SelfMap::identity(3), &r, &r).unwrap());
        assert!(!solution_hom_check(&SelfMap::identity(3), &r, &SolutionMap::identity(3)).unwrap());
        assert!(solution_hom_check(&SelfMap::identity(2), &r, &SolutionMap::flip(2)).is_err());
        // constant maps are homomorphisms between flips but not isomorphisms
        let c = SelfMap::constant(3, 1);
        assert!(solution_hom_check(&c, &r, &r).unwrap());
        assert!(!is_solution_isomorphism(&c, &r, &r).unwrap());
    }

    #[test]
    fn isomorphism_search() {
        let mul = as_group(&BinOpTable::cyclic(3)).unwrap();
        let r = SolutionMap::from_fn(3, |x, y| (mul.op(x, y), 0));
        let perm = SelfMap::new(vec![0, 2, 1]).unwrap();
        let r2 = SolutionMap::from_fn(3, |x, y| {
            let (u, v) = r.apply(perm.apply(x), perm.apply(y));
            (perm.apply(u), perm.apply(v))
        });
        let f = find_solution_isomorphism(&r, &r2).unwrap().unwrap();
        assert!(is_solution_isomorphism(&f, &r, &r2).unwrap());
        assert_eq!(find_solution_isomorphism(&SolutionMap::flip(3), &SolutionMap::identity(3)).unwrap(), None);
        assert!(find_solution_isomorphism(&SolutionMap::flip(8), &SolutionMap::flip(8)).is_err());
    }

    #[test]
    fn iso_theorem_on_fixtures() {
        for (add, mul) in [fixtures::trivial_z2(), fixtures::rz_z3()] {
            let a = lift(add, mul);
            let r = theorem_iso_check(&a).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
