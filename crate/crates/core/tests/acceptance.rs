//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines are always printed; exits nonzero if any criterion
//! fails.

mod support;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qfa_core::braiding::{all_permutations, check_braid_equation, BraidingTensor};
use qfa_core::cli;
use qfa_core::exactla::Matrix;
use qfa_core::frt::RForm;
use qfa_core::gbasis::{in_linear_span, Membership, TruncatedGB, DEFAULT_BUDGET};
use qfa_core::ncpoly::{format_poly, parse_poly, Gen, Letter, NCPoly, Word};
use qfa_core::nichols::{qs_matrix, TopError};
use qfa_core::qdet::{
    assemble, comatrix_word, presented_determinant, presented_top, Options, QDetError, QDetReport, Verdict,
};
use qfa_core::scalars::{Rational, Scalar};

use support::*;

/// Collects named sub-checks of one criterion.
#[derive(Default)]
struct Checks {
    failed: Vec<String>,
    notes: Vec<String>,
    total: usize,
}

impl Checks {
    fn check(&mut self, label: impl Into<String>, ok: bool) -> bool {
        self.total += 1;
        if !ok {
            self.failed.push(label.into());
        }
        ok
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn poly(s: &str, n: usize) -> NCPoly {
    parse_poly(s, n).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn pipeline(name: &str) -> (QDetReport, TruncatedGB) {
    let b = spec(name);
    let opts = Options {
        volume: b.volume.clone(),
        companion: b.companion.clone(),
        ..Options::default()
    };
    let r = assemble(&b.braiding, &opts).unwrap_or_else(|e| panic!("{name}: {e}"));
    let gb = TruncatedGB::complete(&r.frt.relations, r.gb_degree, DEFAULT_BUDGET).expect("homogeneous");
    (r, gb)
}

fn congruent(gb: &TruncatedGB, p: &NCPoly, q: &NCPoly) -> bool {
    member(gb, &(p - q))
}

fn matrix_matches(gb: &TruncatedGB, got: &[Vec<NCPoly>], want: &[&[&str]], n: usize) -> bool {
    got.iter()
        .zip(want)
        .all(|(g, w)| g.iter().zip(w.iter()).all(|(p, s)| congruent(gb, p, &poly(s, n))))
}

fn criterion_1(c: &mut Checks) {
    let (r, gb) = pipeline("involutive_2x2");
    let n = 2;
    c.check("D = a^2 - b^2", congruent(&gb, &r.d, &poly("a^2 - b^2", n)));
    c.check("J = id", r.hayashi.is_identity());
    c.check("hypothesis holds", r.main_hypothesis.verdict == Verdict::Holds);
    let antipode_ok = match &r.antipode {
        Ok(t) => matrix_matches(&gb, t, &[&["a", "-c"], &["-b", "d"]], n),
        Err(_) => false,
    };
    c.check("antipode S(a)=aD^-1, S(b)=-cD^-1, S(c)=-bD^-1, S(d)=dD^-1", antipode_ok);
    let target = poly("a^2 - b^2", n);
    let sl_ok = r.presentation.sl_relations.as_ref().is_some_and(|rels| {
        rels.iter().any(|rel| {
            rel.strip_suffix(" = 1")
                .and_then(|lhs| parse_poly(lhs, n).ok())
                .is_some_and(|p| congruent(&gb, &p, &target))
        })
    });
    c.check("SL presentation contains a^2 - b^2 = 1", sl_ok);
}

fn criterion_2(c: &mut Checks) {
    let (r, gb) = pipeline("involutive_noncentral_3x3");
    let n = 3;
    let g = |s: &str| poly(s, n);
    let d = &r.d;
    let literal = c.check(
        "D = ae^2 - af^2 + bdf - bed - cde + cfd",
        congruent(&gb, d, &g("ae^2 - af^2 + bdf - bed - cde + cfd")),
    );
    let expansion = sum_of(vec![
        &g("a") * &g("-fh + ei"),
        &g("b") * &g("-fg + dh"),
        &g("c") * &g("eg - di"),
    ]);
    if !literal && congruent(&gb, d, &expansion) {
        c.note(format!(
            "D = {}, the first-row expansion a S1 + b S2 + c S3 of the displayed antipode numerators",
            format_poly(d, n)
        ));
    }
    c.check("D not central", !r.normality.central);
    c.check("bD = -Dc", member(&gb, &(&(&g("b") * d) + &(d * &g("c")))));
    c.check("cD = -Db", member(&gb, &(&(&g("c") * d) + &(d * &g("b")))));
    c.check("dD = -Dg", member(&gb, &(&(&g("d") * d) + &(d * &g("g")))));
    c.check("Df = hD", member(&gb, &(&(d * &g("f")) - &(&g("h") * d))));
    c.check("aD = Da", member(&gb, &(&(&g("a") * d) - &(d * &g("a")))));
    c.check("gD = -Dd", member(&gb, &(&(&g("g") * d) + &(d * &g("d")))));
    c.check("De = iD", member(&gb, &(&(d * &g("e")) - &(&g("i") * d))));
    c.check("Di = eD", member(&gb, &(&(d * &g("i")) - &(&g("e") * d))));
    c.check("fD = Dh", member(&gb, &(&(&g("f") * d) - &(d * &g("h")))));
    let involution = (0..n).all(|i| {
        (0..n).all(|j| r.hayashi.apply(r.hayashi.image_of(i, j)) == NCPoly::generator(n, i, j))
    });
    c.check("J^2 = id", involution);
    let want: [&[&str]; 3] = [
        &["-fh + ei", "-ce + bf", "ch - bi"],
        &["-fg + dh", "-cd + ae", "cg - ah"],
        &["eg - di", "bd - af", "-bg + ai"],
    ];
    let ok = r.antipode.as_ref().is_ok_and(|t| matrix_matches(&gb, t, &want, n));
    c.check("antipode numerator matrix", ok);
}

/// The class of each listed degree-4 word as a multiple of the volume.
const FK3_CLASSES: [(&str, i64); 23] = [
    ("1212", 0),
    ("1213", -1),
    ("1231", 0),
    ("1312", -1),
    ("1313", 0),
    ("1321", 0),
    ("1323", 1),
    ("2121", 0),
    ("2123", -1),
    ("2131", 1),
    ("2132", 0),
    ("2312", 0),
    ("2313", 1),
    ("2321", -1),
    ("2323", 0),
    ("3121", 1),
    ("3123", 0),
    ("3131", 0),
    ("3132", -1),
    ("3212", 1),
    ("3213", 0),
    ("3231", -1),
    ("3232", 0),
];

fn criterion_3(c: &mut Checks) {
    let start = Instant::now();
    let b = spec("fomin_kirillov_3");
    let (r, gb) = pipeline("fomin_kirillov_3");
    let elapsed = start.elapsed();
    let n = 3;
    c.check("Hilbert total 12", r.hilbert.iter().sum::<usize>() == 12);
    c.check("top degree 4", r.wgf.top == 4);
    c.check("h(5) = 0", r.hilbert.get(5) == Some(&0));
    let table_ok = FK3_CLASSES.iter().all(|(w, v)| {
        let word: Vec<usize> = w.bytes().map(|ch| (ch - b'1') as usize).collect();
        *r.wgf.alpha_of(&word) == Scalar::from_int(*v)
    });
    c.check("degree-4 class table", table_ok);
    c.check(
        "D matches the 8-term expression",
        congruent(
            &gb,
            &r.d,
            &poly("c^2e^2 + c^2d^2 + b^2f^2 + b^2d^2 - 3abgi - 3abdf + a^2f^2 + a^2e^2", n),
        ),
    );
    c.check("D central", r.normality.central);
    let rd = RForm::new(&b.braiding).right_generator_matrix(&r.d_raw);
    c.check("r(D, t_i^j) = delta_ij", rd == Matrix::identity(n));
    let s_a = r
        .antipode
        .as_ref()
        .is_ok_and(|t| congruent(&gb, &t[0][0], &poly("-fbi + fah - ech + eai", n)));
    c.check("S(a) = (-fbi + fah - ech + eai)D^-1", s_a);
    c.check("runtime within 60 s", elapsed <= Duration::from_secs(60));
    c.note(format!(
        "degree-5 basis at 9 letters: {:.2?}, work {}",
        elapsed, r.gb_work
    ));
}

fn criterion_4(c: &mut Checks) {
    let (r, gb) = pipeline("quantum_plane_r22");
    let n = 2;
    // k = z4, p = 2, q = 1/2: kp = 2*z4, kq = 1/2*z4, q^2 = 1/4.
    let listed = [
        ("ab = kp ba", "ab - (2*z4^1)ba"),
        ("ac = kq ca", "ac - (1/2*z4^1)ca"),
        ("bc = q^2 cb", "bc - 1/4cb"),
        ("ad - da = kp bc", "ad - da - (2*z4^1)bc"),
        ("cd = kp dc", "cd - (2*z4^1)dc"),
        ("bd = kq db", "bd - (1/2*z4^1)db"),
    ];
    let mut all_in = true;
    for (label, rel) in listed {
        let ok = in_linear_span(&poly(rel, n), &r.frt.relations);
        if !ok {
            c.note(format!("listed relation {label} is not in the FRT span"));
        }
        all_in &= ok;
    }
    c.check("the 6 listed relations span the FRT relations", all_in && r.frt.relations.len() == 6);
    if in_linear_span(&poly("ad - da - (4*z4^1)bc", n), &r.frt.relations) {
        c.note("ad - da = 2kp bc is in the span; the displayed braiding forces the factor 2");
    }
    c.check("D = ad - kp bc", congruent(&gb, &r.d, &poly("ad - (2*z4^1)bc", n)));
    c.check("Db = p^2 bD", member(&gb, &(&(&r.d * &poly("b", n)) - &(&poly("4b", n) * &r.d))));
    c.check("Dc = q^2 cD", member(&gb, &(&(&r.d * &poly("c", n)) - &(&poly("1/4c", n) * &r.d))));
    c.check(
        "T = [[d, kq b], [-kp c, a]]",
        matrix_matches(&gb, &r.t, &[&["d", "(1/2*z4^1)b"], &["(-2*z4^1)c", "a"]], n),
    );
    c.check(
        "J(T) = [[d, kp b], [-kq c, a]]",
        matrix_matches(&gb, &r.j_of_t, &[&["d", "(2*z4^1)b"], &["(-1/2*z4^1)c", "a"]], n),
    );
    c.check(
        "t.T = D.id",
        r.prop_fila.verdict == Verdict::Holds && r.prop_fila.is_zero(),
    );
    c.check(
        "J(T).t = D.id",
        r.main_hypothesis.verdict == Verdict::Holds && r.main_hypothesis.is_zero(),
    );
}

fn sum_of(terms: Vec<NCPoly>) -> NCPoly {
    terms.into_iter().fold(NCPoly::zero(), |acc, p| &acc + &p)
}

fn xy_monomial(w: &[Letter]) -> NCPoly {
    NCPoly::monomial(Word::from_slice(w), Scalar::one())
}

/// The four listed relations in `x = 0`, `y = 1`, with `ξ` and `ξ^5` given.
fn non_quadratic_relations(xi: &Scalar, xi5: &Scalar) -> Vec<NCPoly> {
    let m = xy_monomial;
    let (x, y) = (0, 1);
    vec![
        m(&[x, x, x]),
        sum_of(vec![m(&[y, y, y]), -&m(&[x, x, y]), -&m(&[y, x, x]), m(&[x, y, x])]),
        sum_of(vec![m(&[y, y, x]), m(&[x, y, y]), -&m(&[y, x, y])]),
        sum_of(vec![m(&[x, x, y]).scale(xi), m(&[y, x, x]).scale(xi5), m(&[x, y, x])]),
    ]
}

const NON_QUADRATIC_D: &str = "(-z3^1 + z3^2)b^2dbdc + (-2*z3^1 - z3^2)b^2dbcd + (-z3^1 - 2*z3^2)b^2dad^2 \
    + (z3^1 - z3^2)b^2cbd^2 + (z3^1)b^2cbc^2 + (z3^2)b^2cadc + (2*z3^1 + z3^2)badbd^2 + (z3^1)badbc^2 \
    - badacd - (z3^1)bacbdc - (z3^1)bacbcd + (z3^1 + 2*z3^2)abdbd^2 - (z3^2)abdadc - abdacd \
    - (z3^2)abcbdc + (z3^2)abcad^2 + a^2dbcd + a^2dad^2";

fn criterion_5(c: &mut Checks) {
    // No braiding is stated for this Nichols algebra, so A(c), its ideal and
    // the derivation of the new relations from c are unavailable. The top
    // degree, volume and D only depend on the algebra and are checked from
    // its presentation.
    c.check("braiding on V available", false);
    let omega = Scalar::root_of_unity(3, 1);
    let omega2 = &omega * &omega;
    let volume = [0usize, 0, 1, 0, 1, 1];
    let displayed_d = poly(NON_QUADRATIC_D, 2);
    let stated = non_quadratic_relations(&-&omega, &-&omega2);
    match presented_top(&stated, 2, 8, Some(&volume), DEFAULT_BUDGET) {
        Ok(p) => {
            c.check("no quadratic relations (h(2) = 4)", p.hilbert.get(2) == Some(&4));
            c.check("top degree 6", p.top == 6);
            c.check("volume x^2yxy^2 has nonzero class", true);
            let d = presented_determinant(&p, 2);
            let literal = d == displayed_d;
            c.check("D matches the displayed expression with xi = -omega", literal);
            c.note(format!("h = {:?}, D has {} terms", p.hilbert, d.len()));
        }
        Err(e) => {
            c.check(format!("top degree from the presentation ({e})"), false);
        }
    }
    let conjugate = non_quadratic_relations(&-&omega2, &-&omega);
    if let Ok(p) = presented_top(&conjugate, 2, 8, Some(&volume), DEFAULT_BUDGET) {
        if presented_determinant(&p, 2) == displayed_d {
            c.note("with xi = -omega^2 the computed D equals the displayed expression exactly");
        }
    }
}

fn criterion_6(c: &mut Checks) {
    let (r, gb) = pipeline("commutative_companion");
    let n = 2;
    let listed: Vec<NCPoly> = [
        "ba - ab", "b^2", "bd", "ca - ac", "cb - bc", "c^2", "cd", "da - ad", "db - 2bd", "dc - 2cd",
    ]
    .iter()
    .map(|s| poly(s, n))
    .collect();
    let same_span = listed.iter().all(|p| in_linear_span(p, &r.frt.relations))
        && r.frt.relations.iter().all(|p| in_linear_span(p, &listed));
    c.check("FRT relations span the listed commutative presentation", same_span);
    c.check("D = ad - bc", congruent(&gb, &r.d, &poly("ad - bc", n)));
    let b = poly("b", n);
    let cc = poly("c", n);
    c.check("normal_form(bD) = 0", gb.normal_form(&(&b * &r.d)).is_zero());
    c.check("normal_form(cD) = 0", gb.normal_form(&(&cc * &r.d)).is_zero());
    let flagged = |i, j| r.zero_divisors.iter().any(|z| (z.row, z.col) == (i, j));
    c.check("zero divisors b and c reported", flagged(0, 1) && flagged(1, 0));
    c.check("H(c) is the group algebra of Z x Z", r.torus.as_ref().is_some_and(|t| t.rank == 2));
    c.check("hypothesis holds", r.main_hypothesis.verdict == Verdict::Holds);
}

fn criterion_7(c: &mut Checks) {
    let (r, gb) = pipeline("quantum_linear_space_equal");
    let n = 2;
    c.check("dim B = 9", r.hilbert.iter().sum::<usize>() == 9);
    let d_ok = congruent(&gb, &r.d, &poly("a^2d^2", n));
    c.check("D = (t_1^1)^2 (t_2^2)^2", d_ok);
    if !d_ok {
        c.note(format!("D reduces to {}", format_poly(&r.d, n)));
    }
    for l in r.lemma.iter().flatten() {
        let ok = l.membership == Membership::Member;
        c.check(l.label.to_string(), ok);
        if !ok && !l.premise {
            c.note(format!("{} fails and its premise does not hold for q11 = q22", l.label));
        }
    }
    let (s, sgb) = pipeline("quantum_linear_space_distinct");
    let holds = congruent(&sgb, &s.d, &poly("a^2d", n))
        && s.lemma.iter().flatten().all(|l| l.membership == Membership::Member)
        && s.torus.is_some();
    if holds {
        c.note("the instance q11 = z3, q22 = z3^2 satisfies every claim, with D = (t_1^1)^2 t_2^2 and H(c) = k[Z^2]");
    }
}

fn alternating_determinant(n: usize) -> NCPoly {
    let mut d = NCPoly::zero();
    for perm in all_permutations(n) {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let rows: Vec<usize> = (0..n).collect();
        d.add_term(comatrix_word(n, &rows, &perm), Scalar::from_int(sign));
    }
    d
}

fn criterion_8(c: &mut Checks) {
    for (name, n) in [("minus_flip_2", 2), ("minus_flip_3", 3)] {
        let (r, gb) = pipeline(name);
        c.check(
            format!("{name}: D is the alternating determinant"),
            congruent(&gb, &r.d, &alternating_determinant(n)),
        );
        c.check(
            format!("{name}: cofactor identity residuals vanish"),
            r.prop_fila.verdict == Verdict::Holds && r.prop_fila.is_zero(),
        );
    }
    let flip = spec("flip_2").braiding;
    let opts = Options {
        max_degree: 6,
        ..Options::default()
    };
    let inconclusive = matches!(assemble(&flip, &opts), Err(QDetError::Top(TopError::Inconclusive { .. })));
    c.check("flip: no top within degree 6", inconclusive);
    let path = spec_dir().join("flip_2.toml");
    let args = ["qfa", "qdet", path.to_str().unwrap(), "--max-degree", "6"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(args, &mut out, &mut err);
    c.check("flip: CLI exits 4", code == cli::EXIT_INCONCLUSIVE);
}

fn random_scalar(rng: &mut ChaCha8Rng, conductor: u32) -> Scalar {
    let phi = Scalar::one().embed(conductor).coeffs().len();
    let coeffs = (0..phi)
        .map(|_| Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into()))
        .collect();
    Scalar::new(conductor, coeffs)
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_rows(
        (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        if rng.gen_bool(0.5) {
                            Scalar::zero()
                        } else {
                            Scalar::from_int(rng.gen_range(-3..=3))
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize, degree: usize, terms: usize) -> NCPoly {
    let mut p = NCPoly::zero();
    for _ in 0..terms {
        let gens: Vec<Gen> = (0..degree).map(|_| Gen::new(rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        p.add_term(Word::from_gens(n, &gens), Scalar::from_int(rng.gen_range(-3..=3)));
    }
    p
}

const CORPUS: [&str; 15] = [
    "commutative_companion",
    "degenerate_set_map",
    "flip_2",
    "flip_3",
    "fomin_kirillov_3",
    "fomin_kirillov_4",
    "fomin_kirillov_5",
    "involutive_2x2",
    "involutive_noncentral_3x3",
    "minus_flip_2",
    "minus_flip_3",
    "non_braided",
    "quantum_linear_space_distinct",
    "quantum_linear_space_equal",
    "quantum_plane_r22",
];

fn criterion_9(c: &mut Checks) {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let braided: Vec<(&str, BraidingTensor)> = CORPUS
        .iter()
        .map(|name| (*name, spec(name).braiding))
        .filter(|(_, b)| check_braid_equation(b).is_ok())
        .collect();

    let mut matsumoto = true;
    for (name, b) in &braided {
        for d in 2..=4 {
            if b.dim().pow(d as u32) <= 256 && !matsumoto_well_defined(b, d) {
                matsumoto = false;
                c.note(format!("Matsumoto lifts differ for {name} at degree {d}"));
            }
        }
    }
    c.check("Matsumoto well-definedness", matsumoto);

    let mut rn = true;
    for (_, b) in braided.iter().filter(|(_, b)| b.dim() <= 3) {
        rn &= rank_nullity(&qs_matrix(b, 2)) && rank_nullity(&qs_matrix(b, 3));
    }
    for _ in 0..40 {
        let (r, k) = (rng.gen_range(1..7), rng.gen_range(1..7));
        rn &= rank_nullity(&random_matrix(&mut rng, r, k));
    }
    c.check("rank-nullity on every rref", rn);

    let inverses = [1, 3, 4, 5, 12]
        .iter()
        .all(|&m| (0..20).all(|_| inverse_round_trip(&random_scalar(&mut rng, m))));
    c.check("field-inverse round-trips", inverses);

    let mut coassoc = true;
    for _ in 0..20 {
        let len = rng.gen_range(0..4);
        let gens: Vec<Gen> = (0..len).map(|_| Gen::new(rng.gen_range(0..3), rng.gen_range(0..3))).collect();
        coassoc &= coassociative(&Word::from_gens(3, &gens), 3);
    }
    c.check("coassociativity of the coproduct", coassoc);
    let mult = (0..15).all(|_| {
        let p = random_poly(&mut rng, 2, 2, 3);
        let q = random_poly(&mut rng, 2, 1, 3);
        multiplicative(&p, &q, 2)
    });
    c.check("multiplicativity of the coproduct", mult);

    let (fk, fk_gb) = pipeline("fomin_kirillov_3");
    let mut confl = true;
    for seed in 0..20 {
        let rel = &fk.frt.relations[rng.gen_range(0..fk.frt.relations.len())];
        let left = random_poly(&mut rng, 3, 1, 2);
        let element = &(&left * rel) + &random_poly(&mut rng, 3, 3, 4);
        confl &= confluent(&fk_gb, &element, seed, 4);
    }
    c.check("reduction confluence on the FK3 ideal", confl);

    let s41 = spec("involutive_2x2").set_theoretic.expect("set-theoretic").0;
    let s42 = spec("involutive_noncentral_3x3").set_theoretic.expect("set-theoretic").0;
    c.check("involutive exterior-dimension law", exterior_law(&s41) && exterior_law(&s42));

    let mut oracle = true;
    for name in CORPUS {
        let b = spec(name);
        let Some((sol, q)) = b.set_theoretic.clone() else {
            continue;
        };
        let opts = Options {
            volume: b.volume.clone(),
            ..Options::default()
        };
        match assemble(&b.braiding, &opts) {
            Ok(r) => {
                let ok = closed_forms_agree(&sol, &q, &b.braiding, &r.wgf, &r.d_raw);
                oracle &= ok;
                c.note(format!("closed forms on {name}: {}", if ok { "agree" } else { "DISAGREE" }));
            }
            Err(e) => c.note(format!("closed forms on {name}: not reached ({e})")),
        }
    }
    c.check("closed-form vs generic r and J", oracle);
}

type Criterion = (&'static str, fn(&mut Checks));

fn main() {
    let criteria: [Criterion; 9] = [
        ("involutive 2x2 solution: D = a^2 - b^2, J = id, antipode, SL", criterion_1),
        ("involutive non-central solution: D, commutation rules, J^2 = id, antipode", criterion_2),
        ("Fomin-Kirillov E3: Hilbert data, class table, D, centrality, r(D,t), S(a)", criterion_3),
        ("quantum plane R_{2,2}: FRT span, D, T, J(T), residuals", criterion_4),
        ("non-quadratic Nichols algebra: relations, top 6, volume, D", criterion_5),
        ("commutative example: FRT span, D, zero divisors, H(c) = k[Z x Z]", criterion_6),
        ("quantum linear space q11 = q22 = z3: dim 9, D, lemma certificates", criterion_7),
        ("classical oracles: -flip determinants, cofactor identity, flip inconclusive", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failures = Vec::new();
    for (k, (title, run)) in criteria.iter().enumerate() {
        let mut checks = Checks::default();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&mut checks)));
        if outcome.is_err() {
            checks.failed.push("panicked".into());
        }
        let verdict = if checks.failed.is_empty() { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {}: {title} ({}/{} checks)", k + 1, checks.total - checks.failed.len(), checks.total);
        for f in &checks.failed {
            println!("    failed: {f}");
        }
        for n in &checks.notes {
            println!("    note: {n}");
        }
        if !checks.failed.is_empty() {
            failures.push(k + 1);
        }
    }
    if !failures.is_empty() {
        println!("failing criteria: {failures:?}");
        std::process::exit(1);
    }
}
