//! Per-instance check suites used when sweeping over enumerated structures.
//!
//! Conditional statements are only recorded when their hypothesis holds, so
//! the count of a check name is the number of instances it applied to.

use crate::enumerate::Instance;
use crate::report::VerificationReport;
use crate::semibrace::{
    associated_semi_brace, check_compat, derived_lambda_properties, iota_properties,
    verify_almost, verify_left_semi_brace, AlmostLeftSemiBrace, AlmostProfile,
};
use crate::table::{as_group, check_associative};
use crate::truss::{brace_like_suite, verify_brace_like};
use crate::ybe::{
    build_r_almost, check_cond_solution, check_ybe, rho_anti_homomorphism, theorem_iso_check,
};

/// Everything stated about an almost left semi-brace and its solution.
pub fn almost_suite(a: &AlmostLeftSemiBrace) -> VerificationReport {
    let mut report = VerificationReport::new("almost left semi-brace analysis");
    report.absorb("", derived_lambda_properties(a));
    report.absorb("", iota_properties(a));
    match associated_semi_brace(a) {
        Ok(_) => report.record_bool("associated-semi-brace", true, None),
        Err(e) => report.record_bool("associated-semi-brace", false, Some(e.to_string())),
    };
    if check_compat(a).is_err() {
        return report;
    }
    let (r, cond) = match (build_r_almost(a), check_cond_solution(a)) {
        (Ok(r), Ok(cond)) => (r, cond.is_ok()),
        (Err(e), _) | (_, Err(e)) => {
            report.record_bool("solution-built", false, Some(e.to_string()));
            return report;
        }
    };
    let ybe = check_ybe(&r).is_ok();
    report.record_bool(
        "ybe-iff-cond-solution",
        ybe == cond,
        Some(format!("ybe {ybe}, condition {cond}")),
    );
    if rho_anti_homomorphism(&r, a.mul()).is_ok() {
        report.record_bool("rho-antihom-implies-cond", cond, None);
    }
    if cond {
        match theorem_iso_check(a) {
            Ok(r) => report.absorb("", r),
            Err(e) => {
                report.record_bool("associated-isomorphism", false, Some(e.to_string()));
            }
        }
    }
    report
}

/// The verifier plus every theorem-level statement that applies to the instance.
pub fn instance_report(instance: &Instance) -> VerificationReport {
    match instance {
        Instance::Semigroup(s) => {
            let mut report = VerificationReport::new("semigroup");
            report.run("associative", || check_associative(s.table()));
            report
        }
        Instance::Group(g) => {
            let mut report = VerificationReport::new("group");
            report.record_bool("group", as_group(g.table()).is_ok(), None);
            report
        }
        Instance::BraceLike(t) => {
            let mut report = verify_brace_like(t.add().table(), t.mul().table(), t.lambda())
                .expect("enumerated tables share one order");
            report.absorb("", brace_like_suite(t));
            report
        }
        Instance::LeftSemiBrace(s) => {
            let mut report = verify_left_semi_brace(s.add().table(), s.mul().table())
                .expect("enumerated tables share one order");
            report.absorb("", almost_suite(&AlmostLeftSemiBrace::from_semi_brace(s)));
            report
        }
        Instance::Almost(a) => {
            let mut report = verify_almost(
                a.add().table(),
                a.mul().table(),
                a.iota(),
                AlmostProfile::Standard,
            )
            .expect("enumerated tables share one order");
            report.absorb("", almost_suite(a));
            report
        }
    }
}
