//! The reference structures shipped under `fixtures/`, built in code.

use crate::table::{BinOpTable, Element, SelfMap};
use crate::truss::LambdaFamily;

/// Klein group elements `a^i b^j` are indexed as `2i + j`.
pub const KLEIN_ONE: Element = 0;
pub const KLEIN_B: Element = 1;
pub const KLEIN_A: Element = 2;
pub const KLEIN_AB: Element = 3;
pub const KLEIN_LABELS: [&str; 4] = ["1", "b", "a", "ab"];

/// Left-zero addition, `Z2` multiplication, `λ_a = id`.
pub fn lz2() -> (BinOpTable, BinOpTable, LambdaFamily) {
    (
        BinOpTable::left_zero(2),
        BinOpTable::cyclic(2),
        LambdaFamily::identity(2),
    )
}

/// Klein group `∘`, `a^i b^j + a^h b^k = a^(1+i+h) b^j`, and `λ_x = f` with
/// `f(a^h b^k) = a^h`.
pub fn klein() -> (BinOpTable, BinOpTable, LambdaFamily) {
    let split = |x: Element| (x >> 1, x & 1);
    let join = |i: usize, j: usize| 2 * (i % 2) + j % 2;
    let mul = BinOpTable::from_fn(4, |x, y| x ^ y);
    let add = BinOpTable::from_fn(4, |x, y| {
        let ((i, j), (h, _)) = (split(x), split(y));
        join(1 + i + h, j)
    });
    let f = SelfMap::from_fn(4, |x| join(split(x).0, 0));
    (add, mul, LambdaFamily::constant(4, f))
}

/// The six permutations of `{0,1,2}` in lexicographic order; index 0 is the identity.
pub fn s3_permutations() -> Vec<[usize; 3]> {
    vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
}

/// `S3` under composition (`(p+q)(x) = p(q(x))`).
pub fn s3() -> BinOpTable {
    let perms = s3_permutations();
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    BinOpTable::from_fn(6, |a, b| {
        let (p, q) = (perms[a], perms[b]);
        index([p[q[0]], p[q[1]], p[q[2]]])
    })
}

/// `S3` addition with `a∘b = a+b-a`.
pub fn conj_s3() -> (BinOpTable, BinOpTable) {
    let add = s3();
    let inv = |a: Element| (0..6).find(|&b| add.op(a, b) == 0).unwrap();
    let mul = BinOpTable::from_fn(6, |a, b| add.op(add.op(a, b), inv(a)));
    (add, mul)
}

/// Right-zero addition over `Z3`.
pub fn rz_z3() -> (BinOpTable, BinOpTable) {
    (BinOpTable::right_zero(3), BinOpTable::cyclic(3))
}

/// The trivial brace on `Z2`: both operations are addition mod 2.
pub fn trivial_z2() -> (BinOpTable, BinOpTable) {
    (BinOpTable::cyclic(2), BinOpTable::cyclic(2))
}
