use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use serde_json::{json, Value};
use trusslab::enumerate::{self, EnumSpec, Instance, Kind, Limits};
use trusslab::format::{self, parse_structure, StructureFile, StructureKind};
use trusslab::semibrace::{
    associated_semi_brace, check_compat, verify_almost, verify_left_semi_brace,
    AlmostLeftSemiBrace, AlmostProfile, LeftSemiBrace,
};
use trusslab::suite::instance_report;
use trusslab::table::{
    full_set, has_zero_element, idempotents, is_completely_simple, is_simple,
    primitive_idempotents, product_set,
};
use trusslab::truss::{
    brace_like_suite, find_subgroup_idempotent, idempotents_closed_under_mul,
    lemma_lambda_idempotents, verify_brace_like, verify_left_semi_truss, verify_skew_truss,
    BraceLikeSemiTruss, LeftSemiTruss,
};
use trusslab::ybe::{
    build_r_almost, build_r_semibrace, check_cond_solution, check_cond_solution_semi, check_ybe,
    nondegeneracy, theorem_iso_check, SolutionMap,
};
use trusslab::{AlgebraError, Operation, VerificationReport};

use crate::output::{self, Output};
use crate::{EnumKindArg, KindArg};

fn load(path: &Path) -> Result<StructureFile> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_structure(&text).with_context(|| format!("cannot parse {}", path.display()))
}

fn print_report(out: &Output, report: &VerificationReport) {
    for line in report.to_string().lines() {
        out.line(line);
    }
}

fn has_fields(file: &StructureFile, kind: StructureKind) -> bool {
    match kind {
        StructureKind::SemiTruss | StructureKind::BraceLike => file.lambda.is_some(),
        StructureKind::SkewTruss => file.sigma.is_some(),
        StructureKind::Almost => file.iota.is_some(),
        StructureKind::SemiBrace => true,
    }
}

fn explicit_kind(kind: KindArg) -> Option<StructureKind> {
    match kind {
        KindArg::Auto => None,
        KindArg::SemiTruss => Some(StructureKind::SemiTruss),
        KindArg::BraceLike => Some(StructureKind::BraceLike),
        KindArg::SkewTruss => Some(StructureKind::SkewTruss),
        KindArg::SemiBrace => Some(StructureKind::SemiBrace),
        KindArg::Almost => Some(StructureKind::Almost),
    }
}

fn run_verifier(file: &StructureFile, kind: StructureKind) -> Result<VerificationReport> {
    let (add, mul) = (file.add_table(), file.mul_table());
    let report = match kind {
        StructureKind::SemiTruss => verify_left_semi_truss(&add, &mul, &file.lambda_family().unwrap())?,
        StructureKind::BraceLike => verify_brace_like(&add, &mul, &file.lambda_family().unwrap())?,
        StructureKind::SkewTruss => match verify_skew_truss(&add, &mul, &file.sigma_map().unwrap()) {
            Err(AlgebraError::NotAGroup(Operation::Add)) => {
                let mut r = VerificationReport::new("skew left truss");
                r.record_bool("add-group", false, Some("addition is not a group".into()));
                r
            }
            other => other?,
        },
        StructureKind::SemiBrace => verify_left_semi_brace(&add, &mul)?,
        StructureKind::Almost => {
            verify_almost(&add, &mul, &file.iota_map().unwrap(), AlmostProfile::Standard)?
        }
    };
    Ok(report)
}

pub fn verify(out: &Output, path: &Path, kind: KindArg) -> Result<bool> {
    let file = load(path)?;
    let (kind, report) = match explicit_kind(kind) {
        Some(kind) => {
            if !has_fields(&file, kind) {
                bail!(format::FormatError::KindFieldMismatch(format!(
                    "file of kind `{}` lacks the fields needed for `{kind}`",
                    file.kind
                )));
            }
            (kind, run_verifier(&file, kind)?)
        }
        None if file.iota.is_some() => (StructureKind::Almost, run_verifier(&file, StructureKind::Almost)?),
        None if file.sigma.is_some() => (StructureKind::SkewTruss, run_verifier(&file, StructureKind::SkewTruss)?),
        None if file.lambda.is_some() => {
            let strong = run_verifier(&file, StructureKind::BraceLike)?;
            if strong.passed() {
                (StructureKind::BraceLike, strong)
            } else {
                (StructureKind::SemiTruss, run_verifier(&file, StructureKind::SemiTruss)?)
            }
        }
        None => (StructureKind::SemiBrace, run_verifier(&file, StructureKind::SemiBrace)?),
    };
    out.line(format!("{}: {kind}", path.display()));
    print_report(out, &report);
    out.document(&json!({
        "path": path.display().to_string(),
        "kind": kind.name(),
        "passed": report.passed(),
        "report": report,
    }));
    Ok(report.passed())
}

pub fn analyze(out: &Output, path: &Path) -> Result<bool> {
    let file = load(path)?;
    let Some(lambda) = file.lambda_family() else {
        bail!(format::FormatError::KindFieldMismatch(format!(
            "analyze needs a semi-truss or brace-like file, found `{}`",
            file.kind
        )));
    };
    let (add, mul) = (file.add_table(), file.mul_table());
    let truss = match LeftSemiTruss::new(add.clone(), mul.clone(), lambda.clone()) {
        Ok(t) => t,
        Err(_) => {
            let report = verify_left_semi_truss(&add, &mul, &lambda)?;
            out.line(format!("{}: not a left semi-truss", path.display()));
            print_report(out, &report);
            out.document(&json!({ "path": path.display().to_string(), "passed": false, "report": report }));
            return Ok(false);
        }
    };
    let brace_like = BraceLikeSemiTruss::new(add.clone(), mul, lambda).ok();
    let all = full_set(file.order);
    let es = idempotents(&add);
    let sums = product_set(&add, &all, &all);
    let zero = has_zero_element(&add);
    let simple = is_simple(&add)?;
    let completely_simple = is_completely_simple(&add)?;
    let primitive = primitive_idempotents(&add);
    let closure = idempotents_closed_under_mul(&truss);

    let mut report = VerificationReport::new("analysis");
    if brace_like.is_none() {
        report.record("lambda-preserves-idempotents", lemma_lambda_idempotents(&truss));
    }
    let mut facts = json!({
        "idempotents": es,
        "sumset": sums,
        "zero_element": zero,
        "simple": simple,
        "completely_simple": completely_simple,
        "primitive_idempotents": primitive,
        "idempotents_closed_under_mul": closure.is_ok(),
        "closure_witness": closure.as_ref().err(),
        "brace_like": brace_like.is_some(),
    });

    let kind = if brace_like.is_some() { "brace-like left semi-truss" } else { "left semi-truss" };
    out.line(format!("{}: {kind}", path.display()));
    out.line(format!("  E(B) = {}", output::set(&file, &es)));
    out.line(format!("  B+B = {}", output::set(&file, &sums)));
    out.line(format!(
        "  zero element: {}",
        zero.map_or("none".to_string(), |z| file.label(z))
    ));
    out.line(format!("  simple: {simple}"));
    out.line(format!("  completely simple: {completely_simple}"));
    out.line(format!("  primitive idempotents: {}", output::set(&file, &primitive)));
    match &closure {
        Ok(()) => out.line("  E(B) closed under mul: yes"),
        Err(w) => {
            let prod = truss.mul().op(w[0], w[1]);
            out.line(format!(
                "  E(B) closed under mul: no, {}∘{} = {} is not idempotent",
                file.label(w[0]),
                file.label(w[1]),
                file.label(prod)
            ));
        }
    }
    if let Some(t) = &brace_like {
        match find_subgroup_idempotent(t) {
            Ok(found) => {
                out.line(format!(
                    "  subgroup idempotent: z = {}, z+B+z = {}",
                    file.label(found.z),
                    output::set(&file, &found.group)
                ));
                facts["z"] = json!(found.z);
                facts["z_group"] = json!(found.group);
            }
            Err(e) => out.line(format!("  subgroup idempotent: {e}")),
        }
        report.absorb("", brace_like_suite(t));
    }
    print_report(out, &report);
    out.document(&json!({
        "path": path.display().to_string(),
        "kind": kind,
        "facts": facts,
        "passed": report.passed(),
        "report": report,
    }));
    Ok(report.passed())
}

pub struct SolutionFlags {
    pub check_ybe: bool,
    pub check_nondegenerate: bool,
    pub associate: bool,
    pub isocheck: bool,
    pub dir: Option<PathBuf>,
}

fn write_file(dir: &Path, name: &str, text: &str) -> Result<()> {
    let path = dir.join(name);
    fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn print_solution(out: &Output, title: &str, r: &SolutionMap) {
    out.line(format!("{title} out1 (λ_x(y) at row x, column y):"));
    out.line(output::matrix(r.out1()));
    out.line(format!("{title} out2 (ρ_y(x) at row x, column y):"));
    out.line(output::matrix(r.out2()));
}

pub fn solution(out: &Output, path: &Path, flags: SolutionFlags) -> Result<bool> {
    let file = load(path)?;
    let (add, mul) = (file.add_table(), file.mul_table());
    let almost = match file.kind {
        StructureKind::SemiBrace => {
            let report = verify_left_semi_brace(&add, &mul)?;
            if !report.passed() {
                out.line(format!("{}: not a left semi-brace", path.display()));
                print_report(out, &report);
                out.document(&json!({ "passed": false, "report": report }));
                return Ok(false);
            }
            AlmostLeftSemiBrace::from_semi_brace(&LeftSemiBrace::new(add, mul)?)
        }
        StructureKind::Almost => {
            let iota = file.iota_map().expect("almost files carry iota");
            let report = verify_almost(&add, &mul, &iota, AlmostProfile::Standard)?;
            if !report.passed() {
                out.line(format!("{}: not an almost left semi-brace", path.display()));
                print_report(out, &report);
                out.document(&json!({ "passed": false, "report": report }));
                return Ok(false);
            }
            AlmostLeftSemiBrace::new(add, mul, iota)?
        }
        other => bail!(format::FormatError::KindFieldMismatch(format!(
            "solution needs a semi-brace or almost file, found `{other}`"
        ))),
    };

    let r = build_r_almost(&almost)?;
    let mut report = VerificationReport::new("solution");
    report.record("compat", check_compat(&almost));
    report.record("cond-solution", check_cond_solution(&almost)?);
    if flags.check_ybe {
        report.run("ybe", || check_ybe(&r));
    }
    if flags.check_nondegenerate {
        let (left, right) = nondegeneracy(&r);
        report.record_bool("left-nondegenerate", left, None);
        report.record_bool("right-nondegenerate", right, None);
    }
    let mut doc = json!({ "path": path.display().to_string(), "solution": r });
    let mut files = vec![("solution.json".to_string(), format::solution_to_json(&r))];
    if flags.associate {
        match associated_semi_brace(&almost) {
            Ok(s) => {
                report.record_bool("associated-semi-brace", true, None);
                let r2 = build_r_semibrace(&s)?;
                let cond = check_cond_solution_semi(&s)?;
                if !flags.isocheck {
                    // the isomorphism check records it as well
                    report.record("associated-cond-solution", cond);
                }
                if flags.check_ybe {
                    report.run("associated-ybe", || check_ybe(&r2));
                }
                let sf = StructureFile::from_semi_brace(&s);
                doc["associated"] = structure_value(&sf)?;
                doc["associated_solution"] = json!(r2);
                files.push(("associated.json".into(), sf.to_json()));
                files.push(("associated-solution.json".into(), format::solution_to_json(&r2)));
            }
            Err(e) => {
                report.record_bool("associated-semi-brace", false, Some(e.to_string()));
            }
        }
    }
    if flags.isocheck {
        match theorem_iso_check(&almost) {
            Ok(iso) => report.absorb("", iso),
            Err(AlgebraError::PreconditionViolated(msg)) => {
                report.record_bool("iso-preconditions", false, Some(msg));
            }
            Err(e) => return Err(e.into()),
        }
    }

    out.line(format!("{}: {}", path.display(), file.kind));
    print_solution(out, "r", &r);
    if let Some(r2) = doc.get("associated_solution") {
        let r2: SolutionMap = serde_json::from_value(r2.clone())?;
        print_solution(out, "r'", &r2);
    }
    print_report(out, &report);
    if let Some(dir) = &flags.dir {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        for (name, text) in &files {
            write_file(dir, name, text)?;
        }
        out.line(format!("wrote {} files to {}", files.len(), dir.display()));
    }
    doc["passed"] = json!(report.passed());
    doc["report"] = json!(report);
    out.document(&doc);
    Ok(report.passed())
}

fn structure_value(file: &StructureFile) -> Result<Value> {
    Ok(serde_json::from_str(&file.to_json())?)
}

pub struct EnumerateArgs {
    pub order: usize,
    pub kind: EnumKindArg,
    pub modulo_iso: bool,
    pub dir: Option<PathBuf>,
    pub check_all: bool,
    pub slow: bool,
    pub limit: Option<usize>,
    pub time_budget: Option<f64>,
}

fn enum_kind(kind: EnumKindArg) -> Kind {
    match kind {
        EnumKindArg::Semigroup => Kind::Semigroup,
        EnumKindArg::Group => Kind::Group,
        EnumKindArg::BraceLike => Kind::BraceLike,
        EnumKindArg::LeftSemiBrace => Kind::LeftSemiBrace,
        EnumKindArg::Almost => Kind::Almost,
    }
}

fn max_order_from_env() -> Result<Option<usize>> {
    match std::env::var("TRUSSLAB_MAX_ORDER") {
        Ok(v) => Ok(Some(
            v.trim()
                .parse()
                .with_context(|| format!("TRUSSLAB_MAX_ORDER={v:?} is not an order"))?,
        )),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn instance_json(instance: &Instance) -> String {
    match instance {
        Instance::Semigroup(s) => format::table_to_json("semigroup", s.table()),
        Instance::Group(g) => format::table_to_json("group", g.table()),
        Instance::BraceLike(t) => StructureFile::from_brace_like(t).to_json(),
        Instance::LeftSemiBrace(s) => StructureFile::from_semi_brace(s).to_json(),
        Instance::Almost(a) => StructureFile::from_almost(a).to_json(),
    }
}

pub fn enumerate(out: &Output, args: EnumerateArgs) -> Result<bool> {
    let kind = enum_kind(args.kind);
    let mut spec = EnumSpec::new(args.order, kind).modulo_iso(args.modulo_iso);
    spec.allow_slow = args.slow;
    spec.max_order = max_order_from_env()?;
    spec.limits = Limits {
        max_instances: args.limit,
        time_budget: args
            .time_budget
            .map(|s| Duration::try_from_secs_f64(s).context("invalid time budget"))
            .transpose()?,
    };
    let result = enumerate::run(&spec)?;
    let status = if result.complete { "complete" } else { "partial" };
    out.line(format!(
        "{kind} order {}{}: {} instances ({status})",
        args.order,
        if args.modulo_iso { " up to isomorphism" } else { "" },
        result.len()
    ));

    if let Some(dir) = &args.dir {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        for (i, inst) in result.items.iter().enumerate() {
            write_file(dir, &format!("{kind}-{}-{i:05}.json", args.order), &instance_json(inst))?;
        }
        out.line(format!("wrote {} files to {}", result.len(), dir.display()));
    }

    let mut doc = json!({
        "kind": kind.name(),
        "order": args.order,
        "modulo_iso": args.modulo_iso,
        "count": result.len(),
        "complete": result.complete,
    });
    let mut passed = true;
    if args.check_all {
        let reports: Vec<_> = result.items.par_iter().map(instance_report).collect();
        let mut tally: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for report in &reports {
            for check in &report.checks {
                let entry = tally.entry(check.name.clone()).or_default();
                entry.0 += 1;
                entry.1 += usize::from(check.passed);
            }
        }
        if let Some((i, report)) = reports.iter().enumerate().find(|(_, r)| !r.passed()) {
            passed = false;
            out.line(format!("first failing instance: #{i}"));
            print_report(out, report);
        }
        out.line(format!("{:<32} {:>8} {:>8}", "check", "applied", "passed"));
        for (name, (applied, ok)) in &tally {
            out.line(format!("{name:<32} {applied:>8} {ok:>8}"));
        }
        doc["checks"] = json!(tally
            .iter()
            .map(|(k, (a, p))| (k.clone(), json!({ "applied": a, "passed": p })))
            .collect::<serde_json::Map<_, _>>());
        doc["passed"] = json!(passed);
    }
    out.document(&doc);
    Ok(passed)
}
