//! Brute-force reference implementations. Nothing here calls the library's
//! checkers or enumerators; tables are plain row-major vectors.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Cells = Vec<usize>;

/// Every map `0..len -> 0..n`, as image vectors, in lexicographic order.
pub fn all_vectors(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut v = vec![0; len];
    loop {
        out.push(v.clone());
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            v[pos] += 1;
            if v[pos] < n {
                break;
            }
            v[pos] = 0;
        }
    }
}

pub fn all_tables(n: usize) -> Vec<Cells> {
    all_vectors(n, n * n)
}

pub fn op(t: &[usize], n: usize, a: usize, b: usize) -> usize {
    t[a * n + b]
}

pub fn is_assoc(t: &[usize], n: usize) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| op(t, n, op(t, n, a, b), c) == op(t, n, a, op(t, n, b, c))))
    })
}

/// Identity and inverse table if `t` is a group.
pub fn group(t: &[usize], n: usize) -> Option<(usize, Vec<usize>)> {
    if !is_assoc(t, n) {
        return None;
    }
    let e = (0..n).find(|&e| (0..n).all(|a| op(t, n, e, a) == a && op(t, n, a, e) == a))?;
    let inv: Option<Vec<usize>> = (0..n)
        .map(|a| (0..n).find(|&b| op(t, n, a, b) == e && op(t, n, b, a) == e))
        .collect();
    Some((e, inv?))
}

pub fn brute_semigroups(n: usize) -> BTreeSet<Cells> {
    all_tables(n).into_iter().filter(|t| is_assoc(t, n)).collect()
}

pub fn brute_groups(n: usize) -> BTreeSet<Cells> {
    all_tables(n).into_iter().filter(|t| group(t, n).is_some()).collect()
}

/// `a∘(b+c) = a∘b + f(c)` for all `b, c` and `f` an endomorphism of `+`.
fn lambda_ok_at(add: &[usize], mul: &[usize], n: usize, a: usize, f: &[usize]) -> bool {
    let law = (0..n).all(|b| {
        (0..n).all(|c| op(mul, n, a, op(add, n, b, c)) == op(add, n, op(mul, n, a, b), f[c]))
    });
    let endo = (0..n).all(|x| (0..n).all(|y| f[op(add, n, x, y)] == op(add, n, f[x], f[y])));
    law && endo
}

fn lambda_morphism(mul: &[usize], n: usize, lambda: &[Vec<usize>]) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|x| lambda[op(mul, n, a, b)][x] == lambda[a][lambda[b][x]]))
    })
}

pub type BraceLikeCells = (Cells, Cells, Vec<Vec<usize>>);

/// The full product `semigroups × groups × (maps)^n`, every triple checked
/// against all brace-like axioms.
pub fn brute_brace_like_full(n: usize) -> BTreeSet<BraceLikeCells> {
    let maps = all_vectors(n, n);
    let families = all_vectors(maps.len(), n);
    let groups = brute_groups(n);
    let mut out = BTreeSet::new();
    for add in brute_semigroups(n) {
        for mul in &groups {
            for fam in &families {
                let lambda: Vec<Vec<usize>> = fam.iter().map(|&i| maps[i].clone()).collect();
                let ok = (0..n).all(|a| lambda_ok_at(&add, mul, n, a, &lambda[a]))
                    && lambda_morphism(mul, n, &lambda);
                if ok {
                    out.insert((add.clone(), mul.clone(), lambda));
                }
            }
        }
    }
    out
}

/// Same set as [`brute_brace_like_full`], but the per-element axioms are
/// applied to each `λ_a` separately before forming the product.
pub fn brute_brace_like_factored(n: usize) -> BTreeSet<BraceLikeCells> {
    let maps = all_vectors(n, n);
    let groups = brute_groups(n);
    let mut out = BTreeSet::new();
    for add in brute_semigroups(n) {
        for mul in &groups {
            let per: Vec<Vec<&Vec<usize>>> = (0..n)
                .map(|a| maps.iter().filter(|f| lambda_ok_at(&add, mul, n, a, f)).collect())
                .collect();
            let sizes: Vec<usize> = per.iter().map(Vec::len).collect();
            if sizes.contains(&0) {
                continue;
            }
            let mut idx = vec![0; n];
            loop {
                let lambda: Vec<Vec<usize>> = (0..n).map(|a| per[a][idx[a]].clone()).collect();
                if lambda_morphism(mul, n, &lambda) {
                    out.insert((add.clone(), mul.clone(), lambda));
                }
                let mut pos = n;
                let mut carry = true;
                while carry && pos > 0 {
                    pos -= 1;
                    idx[pos] += 1;
                    carry = idx[pos] == sizes[pos];
                    if carry {
                        idx[pos] = 0;
                    }
                }
                if carry {
                    break;
                }
            }
        }
    }
    out
}

pub type AlmostCells = (Cells, Cells, Vec<usize>);

/// `ι(a∘b) = b̄∘ι(a)` and `a∘(b+c) = a∘b + a∘(ι(a)+c)`; `inv` is the inverse
/// table of the group `mul`.
pub fn almost_laws(add: &[usize], mul: &[usize], inv: &[usize], n: usize, iota: &[usize]) -> bool {
    let iota_law = (0..n).all(|a| (0..n).all(|b| iota[op(mul, n, a, b)] == op(mul, n, inv[b], iota[a])));
    iota_law
        && (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    op(mul, n, a, op(add, n, b, c))
                        == op(add, n, op(mul, n, a, b), op(mul, n, a, op(add, n, iota[a], c)))
                })
            })
        })
}

/// Every `(add, mul, ι)` over the given semigroups and groups and all `n^n` maps `ι`.
pub fn brute_almost(n: usize, adds: &[Cells], groups: &[Cells]) -> BTreeSet<AlmostCells> {
    let maps = all_vectors(n, n);
    let mut out = BTreeSet::new();
    for mul in groups {
        let (_, inv) = group(mul, n).expect("groups only");
        for add in adds {
            assert!(is_assoc(add, n));
            for iota in &maps {
                if almost_laws(add, mul, &inv, n, iota) {
                    out.insert((add.clone(), mul.clone(), iota.clone()));
                }
            }
        }
    }
    out
}

/// `r12 r23 r12 = r23 r12 r23` for `r` given by two tables.
pub fn is_ybe(out1: &[usize], out2: &[usize], n: usize) -> bool {
    let r = |x: usize, y: usize| (out1[x * n + y], out2[x * n + y]);
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let (a, b) = r(x, y);
                let (b, c) = r(b, z);
                let (a, b) = r(a, b);
                let left = (a, b, c);
                let (b, c) = r(y, z);
                let (a, b) = r(x, b);
                let (b, c) = r(b, c);
                left == (a, b, c)
            })
        })
    })
}
