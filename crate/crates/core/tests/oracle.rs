mod common;

use std::collections::BTreeSet;

use common::{all_vectors, brute_brace_like_factored, brute_groups, brute_semigroups, op, Cells};
use trusslab::enumerate::{
    enum_almost, enum_brace_like, enum_groups, enum_left_semi_braces, enum_semigroups, permutations, EnumSpec, Kind,
};
use trusslab::semibrace::verify_left_semi_brace;
use trusslab::table::BinOpTable;
use trusslab::truss::{find_subgroup_idempotent, lambda_endomorphisms, lemma_lambda_idempotents, subgroup_idempotent_conditions, LambdaFamily, LeftSemiTruss};

fn cells<'a>(tables: impl Iterator<Item = &'a BinOpTable>) -> BTreeSet<Cells> {
    tables.map(|t| t.cells().to_vec()).collect()
}

/// Number of isomorphism classes, by brute-force relabeling.
fn classes(tables: &BTreeSet<Cells>, n: usize) -> usize {
    let perms = permutations(n);
    let relabel = |t: &Cells, p: &[usize]| {
        let mut out = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                out[p[a] * n + p[b]] = p[op(t, n, a, b)];
            }
        }
        out
    };
    tables
        .iter()
        .map(|t| perms.iter().map(|p| relabel(t, p)).min().unwrap())
        .collect::<BTreeSet<_>>()
        .len()
}

#[test]
fn semigroups_match_brute_force_up_to_three() {
    for n in 1..=3 {
        let brute = brute_semigroups(n);
        let e = enum_semigroups(&EnumSpec::new(n, Kind::Semigroup)).unwrap();
        assert!(e.complete);
        assert_eq!(cells(e.items.iter().map(|s| s.table())), brute, "order {n}");
        let iso = enum_semigroups(&EnumSpec::new(n, Kind::Semigroup).modulo_iso(true)).unwrap();
        assert_eq!(iso.len(), classes(&brute, n), "order {n} up to isomorphism");
    }
}

#[test]
fn pinned_semigroup_counts() {
    let raw: Vec<_> = (1..=4)
        .map(|n| enum_semigroups(&EnumSpec::new(n, Kind::Semigroup)).unwrap().len())
        .collect();
    assert_eq!(raw, vec![1, 8, 113, 3492]);
    let iso: Vec<_> = (1..=4)
        .map(|n| {
            enum_semigroups(&EnumSpec::new(n, Kind::Semigroup).modulo_iso(true))
                .unwrap()
                .len()
        })
        .collect();
    assert_eq!(iso, vec![1, 5, 24, 188]);
}

#[test]
fn groups_match_brute_force_up_to_three() {
    for n in 1..=3 {
        let e = enum_groups(&EnumSpec::new(n, Kind::Group)).unwrap();
        assert_eq!(cells(e.items.iter().map(|g| g.table())), brute_groups(n));
    }
}

#[test]
fn groups_of_order_four_and_five() {
    // the group tables are the associative tables among the Latin squares
    for n in [4, 5] {
        let e = enum_groups(&EnumSpec::new(n, Kind::Group)).unwrap();
        let expected = if n == 4 { 16 } else { 30 };
        assert_eq!(e.len(), expected);
        let iso = enum_groups(&EnumSpec::new(n, Kind::Group).modulo_iso(true)).unwrap();
        assert_eq!(iso.len(), if n == 4 { 2 } else { 1 });
    }
}

#[test]
fn brace_like_matches_product_search_up_to_three() {
    for n in 1..=3 {
        let e = enum_brace_like(&EnumSpec::new(n, Kind::BraceLike)).unwrap();
        let got: BTreeSet<_> = e
            .items
            .iter()
            .map(|t| (t.add().table().cells().to_vec(), t.mul().table().cells().to_vec(), t.lambda().rows()))
            .collect();
        assert_eq!(got, brute_brace_like_factored(n), "order {n}");
    }
}

#[test]
fn pinned_brace_like_counts() {
    let raw: Vec<_> = (1..=3)
        .map(|n| enum_brace_like(&EnumSpec::new(n, Kind::BraceLike)).unwrap().len())
        .collect();
    assert_eq!(raw, vec![1, 14, 48]);
    let iso: Vec<_> = (1..=3)
        .map(|n| {
            enum_brace_like(&EnumSpec::new(n, Kind::BraceLike).modulo_iso(true))
                .unwrap()
                .len()
        })
        .collect();
    assert_eq!(iso, vec![1, 7, 11]);
}

#[test]
fn subgroup_idempotent_at_order_four() {
    let mut spec = EnumSpec::new(4, Kind::BraceLike);
    spec.allow_slow = true;
    let e = enum_brace_like(&spec).unwrap();
    assert_eq!(e.len(), 3328);
    for t in &e.items {
        let found = find_subgroup_idempotent(t).unwrap();
        assert_eq!(subgroup_idempotent_conditions(t, found.z), Ok(found.group.clone()));
    }
}

#[test]
fn left_semi_braces_are_almost_with_inverse_iota() {
    for n in 1..=4 {
        let sb = enum_left_semi_braces(&EnumSpec::new(n, Kind::LeftSemiBrace)).unwrap();
        let almost = enum_almost(&EnumSpec::new(n, Kind::Almost)).unwrap();
        let from_almost: BTreeSet<_> = almost
            .items
            .iter()
            .filter_map(|a| a.as_semi_brace())
            .collect();
        let direct: BTreeSet<_> = sb.items.iter().cloned().collect();
        assert_eq!(direct, from_almost, "order {n}");
        for s in &sb.items {
            assert!(verify_left_semi_brace(s.add().table(), s.mul().table()).unwrap().passed());
        }
    }
}

#[test]
fn pinned_almost_counts() {
    let raw: Vec<_> = (1..=4)
        .map(|n| enum_almost(&EnumSpec::new(n, Kind::Almost)).unwrap().len())
        .collect();
    assert_eq!(raw, vec![1, 12, 27, 672]);
    let sb: Vec<_> = (1..=4)
        .map(|n| enum_left_semi_braces(&EnumSpec::new(n, Kind::LeftSemiBrace)).unwrap().len())
        .collect();
    assert_eq!(sb, vec![1, 6, 9, 168]);
}

/// Over every left semi-truss of order 2 (full product of tables and
/// λ-families), λ maps idempotents to idempotents whenever each λ_a is an
/// endomorphism of `+`. Without that hypothesis it can fail.
#[test]
fn lambda_preserves_idempotents_on_order_two_semi_trusses() {
    let n = 2;
    let sg: Vec<_> = brute_semigroups(n).into_iter().collect();
    let maps = all_vectors(n, n);
    let families = all_vectors(maps.len(), n);
    let (mut with_endo, mut failures) = (0, 0);
    for add in &sg {
        for mul in &sg {
            for fam in &families {
                let rows: Vec<Vec<usize>> = fam.iter().map(|&i| maps[i].clone()).collect();
                let lambda = LambdaFamily::from_rows(&rows).unwrap();
                let add_t = BinOpTable::from_cells(n, add.clone()).unwrap();
                let mul_t = BinOpTable::from_cells(n, mul.clone()).unwrap();
                let endo = lambda_endomorphisms(&add_t, &lambda).is_ok();
                if let Ok(t) = LeftSemiTruss::new(add_t, mul_t, lambda) {
                    match (endo, lemma_lambda_idempotents(&t)) {
                        (true, verdict) => {
                            with_endo += 1;
                            assert_eq!(verdict, Ok(()));
                        }
                        (false, Err(_)) => failures += 1,
                        (false, Ok(())) => {}
                    }
                }
            }
        }
    }
    assert!(with_endo > 0);
    assert!(failures > 0);
}

#[test]
fn lambda_can_move_idempotents_without_endomorphisms() {
    // null semigroup for both operations: the law holds for any λ
    let zero = BinOpTable::from_fn(2, |_, _| 0);
    let lambda = LambdaFamily::from_rows(&[vec![0, 0], vec![1, 0]]).unwrap();
    let t = LeftSemiTruss::new(zero.clone(), zero, lambda).unwrap();
    // 0 is idempotent, λ_1(0) = 1 and 1+1 = 0
    assert_eq!(lemma_lambda_idempotents(&t), Err(vec![1, 0]));
}
