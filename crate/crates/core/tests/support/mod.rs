#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qfa_core::braiding::{all_permutations, matsumoto_lift, BraidingTensor, PermWord, ReductionStrategy};
use qfa_core::cli::spec::{parse_spec, BuiltSpec, SpecDocument};
use qfa_core::exactla::{image, kernel, rref, Matrix};
use qfa_core::frt::{Hayashi, RForm};
use qfa_core::gbasis::{Membership, TruncatedGB};
use qfa_core::ncpoly::{coproduct, coproduct_word, NCPoly, Word};
use qfa_core::nichols::{GradedNichols, WgfData, DEFAULT_TENSOR_CAP};
use qfa_core::scalars::Scalar;
use qfa_core::settheoretic::{closed_form_j, closed_form_rd, Cocycle, SetSolution};

pub fn spec_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs")
}

pub fn spec_text(name: &str) -> String {
    let path = spec_dir().join(format!("{name}.toml"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn spec_doc(name: &str) -> SpecDocument {
    parse_spec(&spec_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn spec(name: &str) -> BuiltSpec {
    spec_doc(name).build().unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn member(gb: &TruncatedGB, p: &NCPoly) -> bool {
    gb.membership(p) == Membership::Member
}

/// Every reduced word produced by the two strategies lifts to the same
/// matrix, for every permutation of `d` points.
pub fn matsumoto_well_defined(c: &BraidingTensor, d: usize) -> bool {
    all_permutations(d).into_iter().all(|perm| {
        let right = PermWord::new(perm.clone(), ReductionStrategy::RightDescent);
        let left = PermWord::new(perm, ReductionStrategy::LeftDescent);
        matsumoto_lift(c, &right, d) == matsumoto_lift(c, &left, d)
    })
}

pub fn rank_nullity(m: &Matrix) -> bool {
    let r = rref(m);
    r.rank + kernel(m).dim() == m.cols() && image(m).dim() == r.rank && r.pivots.len() == r.rank
}

pub fn inverse_round_trip(x: &Scalar) -> bool {
    match x.inverse() {
        Ok(inv) => (x * &inv).is_one() && inv.inverse().as_ref() == Ok(x),
        Err(_) => x.is_zero(),
    }
}

type Triple = BTreeMap<(Word, Word, Word), Scalar>;

fn add3(m: &mut Triple, k: (Word, Word, Word), c: Scalar) {
    let e = m.entry(k).or_insert_with(Scalar::zero);
    *e += &c;
}

/// `(Δ ⊗ id)Δ(w) = (id ⊗ Δ)Δ(w)`.
pub fn coassociative(w: &Word, n: usize) -> bool {
    let mut lhs = Triple::new();
    let mut rhs = Triple::new();
    for (l, r) in coproduct_word(w, n) {
        for (ll, lr) in coproduct_word(&l, n) {
            add3(&mut lhs, (ll, lr, r.clone()), Scalar::one());
        }
        for (rl, rr) in coproduct_word(&r, n) {
            add3(&mut rhs, (l.clone(), rl, rr), Scalar::one());
        }
    }
    lhs.retain(|_, v| !v.is_zero());
    rhs.retain(|_, v| !v.is_zero());
    lhs == rhs
}

/// `Δ(pq) = Δ(p)Δ(q)`.
pub fn multiplicative(p: &NCPoly, q: &NCPoly, n: usize) -> bool {
    let mut prod: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
    let dq = coproduct(q, n);
    for ((pl, pr), pc) in coproduct(p, n).terms() {
        for ((ql, qr), qc) in dq.terms() {
            let e = prod.entry((pl.concat(ql), pr.concat(qr))).or_insert_with(Scalar::zero);
            *e += &(pc * qc);
        }
    }
    prod.retain(|_, v| !v.is_zero());
    let direct: BTreeMap<(Word, Word), Scalar> =
        coproduct(&(p * q), n).terms().map(|(k, v)| (k.clone(), v.clone())).collect();
    prod == direct
}

/// Random reduction schedules reach the canonical normal form.
pub fn confluent(gb: &TruncatedGB, p: &NCPoly, seed: u64, rounds: usize) -> bool {
    let expected = gb.normal_form(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..rounds).all(|_| {
        let mut choose = |k: usize| rng.gen_range(0..k.max(1));
        gb.normal_form_scheduled(p, &mut choose) == expected
    })
}

pub fn binomials(n: usize) -> Vec<usize> {
    let mut row = vec![1usize];
    for k in 1..=n {
        let prev = row[k - 1];
        row.push(prev * (n + 1 - k) / k);
    }
    row
}

/// For involutive `s`, the Nichols algebra of `-s` has the Hilbert function
/// of the exterior algebra.
pub fn exterior_law(sol: &SetSolution) -> bool {
    let c = sol.to_braiding(&Cocycle::Constant(Scalar::from_int(-1)));
    let g = GradedNichols::compute(&c, sol.n + 1, DEFAULT_TENSOR_CAP);
    let mut expected = binomials(sol.n);
    expected.push(0);
    g.hilbert() == expected
}

/// The closed forms agree with the generic `r` and `𝔍` on every defined
/// entry.
pub fn closed_forms_agree(sol: &SetSolution, q: &Cocycle, c: &BraidingTensor, wgf: &WgfData, d_raw: &NCPoly) -> bool {
    let n = sol.n;
    let rform = RForm::new(c);
    let generic = rform.right_generator_matrix(d_raw);
    let closed = closed_form_rd(sol, q, wgf);
    if Matrix::from_rows(closed) != generic {
        return false;
    }
    let Ok(hayashi) = Hayashi::new(&rform, d_raw) else {
        return false;
    };
    match closed_form_j(sol, q, wgf) {
        Ok(images) => images
            .iter()
            .enumerate()
            .all(|(k, img)| img.as_ref().is_none_or(|p| p == hayashi.image_of(k / n, k % n))),
        Err(_) => false,
    }
}
