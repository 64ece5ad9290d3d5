//! Quantum determinant, cofactor matrix, the localization hypothesis and
//! the resulting Hopf algebra `H(c) = A(c)[D⁻¹]`.
//!
//! Every identity in `A(c)` is decided by reducing against a truncated
//! Gröbner basis of the FRT relations. The antipode is kept formal: it is a
//! numerator in `A(c)` together with a right factor `D⁻¹`.

use std::collections::HashMap;

use crate::braiding::{check_braid_equation, check_rigid, word_index, BraidViolation, BraidingTensor, RigidityWitness};
use crate::frt::{frt_candidate, frt_relations, FrtPresentation, Hayashi, HayashiError, RForm};
use crate::gbasis::{in_linear_span, GbError, Membership, TruncatedGB, DEFAULT_BUDGET};
use crate::ncpoly::{coproduct, counit, format_poly, Gen, Letter, NCPoly, Word};
use crate::nichols::{detect_top, GradedNichols, Stop, TopError, WgfData, DEFAULT_MAX_DEGREE, DEFAULT_TENSOR_CAP};
use crate::scalars::Scalar;

/// `λ(v) = Σ_K P_K ⊗ x_K` for `v ∈ V^{⊗m}`; entry `K` (in word-index order)
/// holds `P_K = Σ_J v_J t_J^K`.
pub fn coaction_expand(v: &[Scalar], n: usize, m: usize) -> Vec<NCPoly> {
    let dim = n.pow(m as u32);
    assert_eq!(v.len(), dim, "vector length does not match V^(⊗{m})");
    let mut out = vec![NCPoly::zero(); dim];
    for (jdx, vj) in v.iter().enumerate() {
        if vj.is_zero() {
            continue;
        }
        let jw = crate::braiding::index_word(n, m, jdx);
        for (kdx, slot) in out.iter_mut().enumerate() {
            let kw = crate::braiding::index_word(n, m, kdx);
            slot.add_term(comatrix_word(n, &jw, &kw), vj.clone());
        }
    }
    out
}

/// `t_J^K = t_{j_1}^{k_1} ⋯ t_{j_m}^{k_m}`.
pub fn comatrix_word(n: usize, rows: &[usize], cols: &[usize]) -> Word {
    let gens: Vec<Gen> = rows.iter().zip(cols).map(|(&r, &c)| Gen::new(r, c)).collect();
    Word::from_gens(n, &gens)
}

/// `D = Σ_K α_K t_𝔟^K` for the volume monomial `𝔟`.
pub fn quantum_determinant(wgf: &WgfData) -> NCPoly {
    let mut e = vec![Scalar::zero(); wgf.alpha.len()];
    e[word_index(wgf.n, &wgf.volume)] = Scalar::one();
    quantum_determinant_from(wgf, &e).expect("the volume monomial has class 𝔟")
}

/// `D` computed from an arbitrary representative `v ∈ V^{⊗top}`; `None` if
/// the class of `v` is zero.
pub fn quantum_determinant_from(wgf: &WgfData, v: &[Scalar]) -> Option<NCPoly> {
    let mut weight = Scalar::zero();
    for (b, a) in v.iter().zip(&wgf.alpha) {
        weight += &(b * a);
    }
    let inv = weight.inverse().ok()?;
    let expanded = coaction_expand(v, wgf.n, wgf.top);
    let mut d = NCPoly::zero();
    for (p, a) in expanded.iter().zip(&wgf.alpha) {
        if !a.is_zero() {
            d = &d + &p.scale(a);
        }
    }
    Some(d.scale(&inv))
}

/// Top-degree data of a graded algebra `𝕜⟨x_1, …, x_n⟩/(relations)`, read
/// off a Gröbner basis of homogeneous relations in the letters `0..n`.
#[derive(Debug, Clone)]
pub struct PresentedTop {
    pub hilbert: Vec<usize>,
    pub top: usize,
    pub volume: Vec<usize>,
    /// `α_K` for every word `K` of length `top`, indexed like `V^{⊗top}`.
    pub alpha: Vec<Scalar>,
}

/// Finds the top degree of a presented algebra, completing through
/// `max_degree`. The volume defaults to the unique standard word of the
/// top degree.
pub fn presented_top(
    relations: &[NCPoly],
    n: usize,
    max_degree: usize,
    volume: Option<&[usize]>,
    budget: u64,
) -> Result<PresentedTop, QDetError> {
    let gb = TruncatedGB::complete(relations, max_degree, budget)?;
    let reached = gb.complete_through();
    let mut hilbert = Vec::new();
    for k in 0..=reached {
        let h = gb.standard_words(n, k).len();
        hilbert.push(h);
        if h == 0 {
            break;
        }
    }
    if hilbert.last() != Some(&0) {
        return Err(TopError::Inconclusive {
            computed_through: reached,
            reason: if reached < max_degree {
                "Groebner budget exhausted".into()
            } else {
                "degree bound reached".into()
            },
        }
        .into());
    }
    let top = hilbert.len() - 2;
    if hilbert[top] != 1 {
        return Err(TopError::TopNotOneDimensional { degree: top, h: hilbert[top] }.into());
    }
    let word = |w: &[usize]| {
        let ls: Vec<Letter> = w.iter().map(|&i| i as Letter).collect();
        NCPoly::monomial(Word::from_slice(&ls), Scalar::one())
    };
    let standard = gb.standard_words(n, top).remove(0);
    let volume: Vec<usize> = match volume {
        Some(v) if v.len() != top => {
            return Err(TopError::VolumeLength {
                word: crate::ncpoly::format_monomial(v),
                len: v.len(),
                top,
            }
            .into())
        }
        Some(v) => v.to_vec(),
        None => standard.letters().iter().map(|&l| l as usize).collect(),
    };
    let scale = gb.normal_form(&word(&volume)).coefficient(&standard);
    let inv = scale.inverse().map_err(|_| TopError::VolumeZero {
        word: crate::ncpoly::format_monomial(&volume),
    })?;
    let alpha = (0..n.pow(top as u32))
        .map(|k| {
            let kw = crate::braiding::index_word(n, top, k);
            &gb.normal_form(&word(&kw)).coefficient(&standard) * &inv
        })
        .collect();
    Ok(PresentedTop {
        hilbert,
        top,
        volume,
        alpha,
    })
}

/// `D = Σ_K α_K t_𝔟^K` for the data of a presented algebra.
pub fn presented_determinant(p: &PresentedTop, n: usize) -> NCPoly {
    let mut d = NCPoly::zero();
    for (k, a) in p.alpha.iter().enumerate() {
        if !a.is_zero() {
            let kw = crate::braiding::index_word(n, p.top, k);
            d.add_term(comatrix_word(n, &p.volume, &kw), a.clone());
        }
    }
    d
}

/// `T[i][j] = T_i^j`, the coefficient of `ω^i` in `λ(ω^j)`:
/// `T_i^j = Σ_s W[s][j] Σ_L α(x_i x_L) t_{b_s}^L`.
pub fn cofactor_matrix(wgf: &WgfData) -> Vec<Vec<NCPoly>> {
    let n = wgf.n;
    let m = wgf.top - 1;
    let dim = n.pow(m as u32);
    let mut t = vec![vec![NCPoly::zero(); n]; n];
    for (s, b) in wgf.basis_prev.iter().enumerate() {
        for lidx in 0..dim {
            let l = crate::braiding::index_word(n, m, lidx);
            let word = comatrix_word(n, b, &l);
            for (i, row) in t.iter_mut().enumerate() {
                let a = &wgf.alpha[i * dim + lidx];
                if a.is_zero() {
                    continue;
                }
                for (j, entry) in row.iter_mut().enumerate() {
                    let w = wgf.left_duals.get(s, j);
                    if !w.is_zero() {
                        entry.add_term(word.clone(), a * w);
                    }
                }
            }
        }
    }
    t
}

/// Outcome of a family of identities checked by reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// Some normal form is nonzero but the basis is not complete at that
    /// degree.
    Inconclusive,
}

/// Normal forms of an `n × n` family of expressions that should vanish.
#[derive(Debug, Clone)]
pub struct Residuals {
    pub entries: Vec<Vec<NCPoly>>,
    pub verdict: Verdict,
}

impl Residuals {
    fn from_raw(raw: Vec<Vec<NCPoly>>, gb: &TruncatedGB) -> Self {
        let mut verdict = Verdict::Holds;
        let entries: Vec<Vec<NCPoly>> = raw
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|p| {
                        match gb.membership(&p) {
                            Membership::Member => {}
                            Membership::NotMember => verdict = Verdict::Fails,
                            Membership::Inconclusive => {
                                if verdict == Verdict::Holds {
                                    verdict = Verdict::Inconclusive;
                                }
                            }
                        }
                        gb.normal_form(&p)
                    })
                    .collect()
            })
            .collect();
        Residuals { entries, verdict }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(NCPoly::is_zero)
    }
}

fn delta_d(i: usize, j: usize, d: &NCPoly) -> NCPoly {
    if i == j {
        d.clone()
    } else {
        NCPoly::zero()
    }
}

/// `Σ_k t_i^k T_k^j − δ_i^j D`, reduced.
pub fn verify_prop_fila(n: usize, t: &[Vec<NCPoly>], d: &NCPoly, gb: &TruncatedGB) -> Residuals {
    let raw = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = NCPoly::zero();
                    for (k, row) in t.iter().enumerate() {
                        acc = &acc + &(&NCPoly::generator(n, i, k) * &row[j]);
                    }
                    &acc - &delta_d(i, j, d)
                })
                .collect()
        })
        .collect();
    Residuals::from_raw(raw, gb)
}

/// `Σ_k 𝔍(T_i^k) t_k^j − δ_i^j D`, reduced.
pub fn verify_main_hypothesis(n: usize, j_of_t: &[Vec<NCPoly>], d: &NCPoly, gb: &TruncatedGB) -> Residuals {
    let raw = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = NCPoly::zero();
                    for k in 0..n {
                        acc = &acc + &(&j_of_t[i][k] * &NCPoly::generator(n, k, j));
                    }
                    &acc - &delta_d(i, j, d)
                })
                .collect()
        })
        .collect();
    Residuals::from_raw(raw, gb)
}

/// `D·t = 𝔍(t)·D` for one generator.
#[derive(Debug, Clone)]
pub struct CommutationRule {
    pub row: usize,
    pub col: usize,
    pub image: NCPoly,
    /// Membership of `D·t − 𝔍(t)·D`, when certified.
    pub certificate: Option<Membership>,
}

#[derive(Debug, Clone)]
pub struct Normality {
    /// `D` commutes with every generator. This holds when `𝔍` is the
    /// identity, and is otherwise decided by reducing `D·t − t·D`.
    pub central: bool,
    pub rules: Vec<CommutationRule>,
}

/// Whether `D·t − t·D` reduces to zero for every generator.
pub fn commutes_with_generators(d: &NCPoly, n: usize, gb: &TruncatedGB) -> Verdict {
    let mut verdict = Verdict::Holds;
    for l in 0..(n * n) {
        let g = NCPoly::generator(n, l / n, l % n);
        match gb.membership(&(&(d * &g) - &(&g * d))) {
            Membership::Member => {}
            Membership::NotMember => return Verdict::Fails,
            Membership::Inconclusive => verdict = Verdict::Inconclusive,
        }
    }
    verdict
}

/// The rules `D·t = 𝔍(t)·D`, optionally certified by reduction, and
/// whether `D` is central.
pub fn centrality_normality(hayashi: &Hayashi, d: &NCPoly, gb: &TruncatedGB, certify: bool) -> Normality {
    let n = hayashi.n;
    let mut rules = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let g = NCPoly::generator(n, i, j);
            let image = hayashi.image_of(i, j).clone();
            let certificate = certify.then(|| gb.membership(&(&(d * &g) - &(&image * d))));
            rules.push(CommutationRule {
                row: i,
                col: j,
                image,
                certificate,
            });
        }
    }
    Normality {
        central: hayashi.is_identity() || commutes_with_generators(d, n, gb) == Verdict::Holds,
        rules,
    }
}

/// The automorphism used in the localization hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Automorphism {
    /// `𝔍` computed from `r` against `D`.
    Hayashi,
    /// `D` is central, so the identity also satisfies `D·a = 𝔍(a)·D`.
    /// Used when `D` is a zero divisor and the Hayashi automorphism differs
    /// from the identity on its annihilator.
    Identity,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AntipodeError {
    #[error("the localization hypothesis does not hold, so no antipode is emitted")]
    HypothesisFailed,
    #[error("the localization hypothesis could not be decided within the degree bound")]
    HypothesisUndecided,
}

/// `S(t_i^j) = T_i^j D⁻¹`: returns the numerators. `S(D) = D⁻¹` and
/// `S(D⁻¹) = D` are implicit.
pub fn antipode_table(t: &[Vec<NCPoly>], hypothesis: Verdict) -> Result<Vec<Vec<NCPoly>>, AntipodeError> {
    match hypothesis {
        Verdict::Holds => Ok(t.to_vec()),
        Verdict::Fails => Err(AntipodeError::HypothesisFailed),
        Verdict::Inconclusive => Err(AntipodeError::HypothesisUndecided),
    }
}

/// `ε(D) = 1` and `Δ(D) ≡ D ⊗ D` modulo `I ⊗ A + A ⊗ I`.
pub fn is_group_like(d: &NCPoly, n: usize, gb: &TruncatedGB) -> bool {
    if !counit(d, n).is_one() {
        return false;
    }
    let mut cache: HashMap<Word, NCPoly> = HashMap::new();
    let mut nf = |w: &Word| -> NCPoly {
        cache
            .entry(w.clone())
            .or_insert_with(|| gb.normal_form(&NCPoly::monomial(w.clone(), Scalar::one())))
            .clone()
    };
    let mut diff: HashMap<(Word, Word), Scalar> = HashMap::new();
    let push = |l: &NCPoly, r: &NCPoly, c: &Scalar, diff: &mut HashMap<(Word, Word), Scalar>| {
        for (lw, lc) in l.terms() {
            for (rw, rc) in r.terms() {
                *diff.entry((lw.clone(), rw.clone())).or_insert_with(Scalar::zero) += &(&(lc * rc) * c);
            }
        }
    };
    for ((l, r), c) in coproduct(d, n).terms() {
        let (a, b) = (nf(l), nf(r));
        push(&a, &b, c, &mut diff);
    }
    let dn = gb.normal_form(d);
    let minus = Scalar::from_int(-1);
    push(&dn, &dn, &minus, &mut diff);
    diff.values().all(Scalar::is_zero)
}

/// A generator killed by multiplication with `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisor {
    pub row: usize,
    pub col: usize,
    /// `t·D ≡ 0`.
    pub left: bool,
    /// `D·t ≡ 0`.
    pub right: bool,
}

/// Generators `g` with `g·D ≡ 0` or `D·g ≡ 0`; each maps to zero in any
/// algebra where `D` is invertible.
pub fn zero_divisors(d: &NCPoly, n: usize, gb: &TruncatedGB) -> Vec<ZeroDivisor> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let g = NCPoly::generator(n, i, j);
            let left = gb.reduces_to_zero(&(&g * d));
            let right = gb.reduces_to_zero(&(d * &g));
            if left || right {
                out.push(ZeroDivisor { row: i, col: j, left, right });
            }
        }
    }
    out
}

/// Evidence that `H(c) ≅ 𝕜[ℤⁿ]`: every off-diagonal generator is a zero
/// divisor against `D`, the remaining quotient is the commutative
/// polynomial ring on the diagonal generators, and `D` becomes a monomial
/// involving all of them.
#[derive(Debug, Clone)]
pub struct TorusCertificate {
    pub rank: usize,
    /// Image of `D` once the off-diagonal generators are set to zero.
    pub d_image: NCPoly,
}

pub fn detect_torus(
    relations: &[NCPoly],
    d: &NCPoly,
    n: usize,
    killed: &[ZeroDivisor],
    budget: u64,
) -> Option<TorusCertificate> {
    let off_diagonal = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)));
    let killed_set: Vec<(usize, usize)> = killed.iter().map(|z| (z.row, z.col)).collect();
    let mut rels: Vec<NCPoly> = relations.to_vec();
    for (i, j) in off_diagonal {
        if !killed_set.contains(&(i, j)) {
            return None;
        }
        rels.push(NCPoly::generator(n, i, j));
    }
    let degree = d.degree()?.max(2);
    let gb = TruncatedGB::complete(&rels, degree, budget).ok()?;
    if gb.complete_through() < degree {
        return None;
    }
    if gb.standard_words(n * n, 2).len() != n * (n + 1) / 2 {
        return None;
    }
    let image = gb.normal_form(d);
    let (word, _) = image.leading()?;
    if image.len() != 1 {
        return None;
    }
    let all_diagonal_present = (0..n).all(|k| word.letters().contains(&Gen::new(k, k).letter(n)));
    all_diagonal_present.then_some(TorusCertificate { rank: n, d_image: image })
}

/// One claim of the diagonal-braiding lemma.
#[derive(Debug, Clone)]
pub struct LemmaCertificate {
    pub claim: NCPoly,
    pub label: String,
    /// Whether the lemma's hypothesis is satisfied for this claim.
    pub premise: bool,
    pub membership: Membership,
}

/// `q_{ij}` if `c` is diagonal, i.e. `c(x_i ⊗ x_j) = q_{ij} x_j ⊗ x_i`.
pub fn diagonal_entries(c: &BraidingTensor) -> Option<Vec<Vec<Scalar>>> {
    let n = c.dim();
    let mut q = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for (k, l, v) in c.image(i, j) {
                if (*k, *l) != (j, i) {
                    return None;
                }
                q[i][j] = v.clone();
            }
        }
    }
    Some(q)
}

/// Multiplicative order of a root of unity, if `q` is one.
pub fn root_order(q: &Scalar) -> Option<u32> {
    let bound = 2 * q.conductor().max(1);
    let mut p = q.clone();
    for m in 1..=bound {
        if p.is_one() {
            return Some(m);
        }
        p = &p * q;
    }
    None
}

/// For `i ≠ j`: `(t_i^j)² ≡ 0` when `q_{jj}^{-2} q_{ii}^2 ≠ 1`, and
/// `t_i^k t_j^k ≡ 0 ≡ t_k^i t_k^j` when `q_{kk}^2 ≠ 1` and `q_{ij} q_{ji} = 1`
/// (for a primitive `N_k`-th root `q_{kk}` with `N_k > 1`, the first
/// condition is `N_k ≠ 2`). Every claim is checked, with its premise
/// recorded alongside.
pub fn diagonal_lemma_certificates(q: &[Vec<Scalar>], gb: &TruncatedGB) -> Vec<LemmaCertificate> {
    let n = q.len();
    let name = |i: usize, j: usize| format!("t_{}^{}", i + 1, j + 1);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let ratio = &q[i][i] * &q[i][i] * (&q[j][j] * &q[j][j]).inverse().expect("nonzero diagonal");
            let g = NCPoly::generator(n, i, j);
            let claim = &g * &g;
            out.push(LemmaCertificate {
                membership: gb.membership(&claim),
                claim,
                label: format!("({})^2 = 0", name(i, j)),
                premise: !ratio.is_one(),
            });
        }
    }
    for k in 0..n {
        let square_not_one = !(&q[k][k] * &q[k][k]).is_one();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let premise = square_not_one && (&q[i][j] * &q[j][i]).is_one();
                let col = &NCPoly::generator(n, i, k) * &NCPoly::generator(n, j, k);
                out.push(LemmaCertificate {
                    membership: gb.membership(&col),
                    claim: col,
                    label: format!("{} {} = 0", name(i, k), name(j, k)),
                    premise,
                });
                let row = &NCPoly::generator(n, k, i) * &NCPoly::generator(n, k, j);
                out.push(LemmaCertificate {
                    membership: gb.membership(&row),
                    claim: row,
                    label: format!("{} {} = 0", name(k, i), name(k, j)),
                    premise,
                });
            }
        }
    }
    out
}

/// `(t_1^1)^{N_1-1} ⋯ (t_n^n)^{N_n-1}` for a diagonal braiding whose
/// diagonal entries are roots of unity.
pub fn diagonal_determinant(q: &[Vec<Scalar>]) -> Option<NCPoly> {
    let n = q.len();
    let mut p = NCPoly::one();
    for (k, row) in q.iter().enumerate() {
        let order = root_order(&row[k])?;
        for _ in 1..order {
            p = &p * &NCPoly::generator(n, k, k);
        }
    }
    Some(p)
}

/// Textual presentations of `H(c)` and, when `D` is central, of
/// `SL = A(c)/(D − 1)`.
#[derive(Debug, Clone)]
pub struct HopfPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub sl_relations: Option<Vec<String>>,
    pub notes: Vec<String>,
}

/// Pipeline knobs.
#[derive(Debug, Clone)]
pub struct Options {
    pub max_degree: usize,
    pub tensor_cap: usize,
    pub budget: u64,
    pub volume: Option<Vec<usize>>,
    pub certify_normality: bool,
    /// A second braiding whose Nichols algebra serves as the graded
    /// comodule algebra; it must be `A(c)`-colinear.
    pub companion: Option<BraidingTensor>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_degree: DEFAULT_MAX_DEGREE,
            tensor_cap: DEFAULT_TENSOR_CAP,
            budget: DEFAULT_BUDGET,
            volume: None,
            certify_normality: false,
            companion: None,
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum QDetError {
    #[error("{0}")]
    Braid(BraidViolation),
    #[error("the braiding is not rigid")]
    Rigidity(RigidityWitness),
    #[error("the companion braiding has dimension {companion}, expected {n}")]
    CompanionDimension { n: usize, companion: usize },
    #[error("the companion braiding fails the braid equation: {0}")]
    CompanionBraid(BraidViolation),
    #[error("the companion braiding is not A(c)-colinear (i={i}, j={j}, r={r}, s={s})")]
    CompanionNotColinear { i: usize, j: usize, r: usize, s: usize },
    #[error(transparent)]
    Top(#[from] TopError),
    #[error(transparent)]
    Hayashi(#[from] HayashiError),
    #[error(transparent)]
    Gb(#[from] GbError),
}

/// Everything computed by [`assemble`].
#[derive(Debug, Clone)]
pub struct QDetReport {
    pub n: usize,
    pub frt: FrtPresentation,
    pub hilbert: Vec<usize>,
    pub wgf: WgfData,
    /// `D` as produced by the coaction, before reduction.
    pub d_raw: NCPoly,
    pub d: NCPoly,
    pub group_like: bool,
    /// `T[i][j] = T_i^j`, reduced.
    pub t: Vec<Vec<NCPoly>>,
    pub hayashi: Hayashi,
    pub j_of_t: Vec<Vec<NCPoly>>,
    pub prop_fila: Residuals,
    pub main_hypothesis: Residuals,
    pub automorphism: Automorphism,
    pub normality: Normality,
    pub antipode: Result<Vec<Vec<NCPoly>>, AntipodeError>,
    pub zero_divisors: Vec<ZeroDivisor>,
    pub torus: Option<TorusCertificate>,
    pub lemma: Option<Vec<LemmaCertificate>>,
    pub presentation: HopfPresentation,
    pub gb_degree: usize,
    pub gb_complete_through: usize,
    pub gb_work: u64,
    pub gb_budget: u64,
    pub gb_exhausted: bool,
    pub gb_fingerprint: String,
}

/// Checks that `companion` is colinear for the comodule structure of `V`
/// over `A(c)`: each of its FRT expressions lies in the degree-2 relations.
pub fn check_companion(frt: &FrtPresentation, companion: &BraidingTensor) -> Result<(), QDetError> {
    let n = frt.n;
    if companion.dim() != n {
        return Err(QDetError::CompanionDimension {
            n,
            companion: companion.dim(),
        });
    }
    check_braid_equation(companion).map_err(QDetError::CompanionBraid)?;
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                for s in 0..n {
                    let p = frt_candidate(companion, i, j, r, s);
                    if !p.is_zero() && !in_linear_span(&p, &frt.relations) {
                        return Err(QDetError::CompanionNotColinear { i, j, r, s });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Runs the full pipeline: braid and rigidity checks, `A(c)`, the Nichols
/// algebra and its top degree, `D`, `T`, `𝔍`, both residual families,
/// normality, zero divisors and the presentations.
pub fn assemble(c: &BraidingTensor, opts: &Options) -> Result<QDetReport, QDetError> {
    let n = c.dim();
    check_braid_equation(c).map_err(QDetError::Braid)?;
    check_rigid(c).map_err(QDetError::Rigidity)?;
    let frt = frt_relations(c);
    let graded_source = match &opts.companion {
        Some(comp) => {
            check_companion(&frt, comp)?;
            comp
        }
        None => c,
    };
    let nichols = GradedNichols::compute(graded_source, opts.max_degree, opts.tensor_cap);
    let wgf = detect_top(&nichols, opts.volume.as_deref())?;
    let top = wgf.top;

    let gb = TruncatedGB::complete(&frt.relations, top + 1, opts.budget)?;
    let d_raw = quantum_determinant(&wgf);
    let d = gb.normal_form(&d_raw);
    let group_like = is_group_like(&d_raw, n, &gb);
    let t_raw = cofactor_matrix(&wgf);
    let t: Vec<Vec<NCPoly>> = t_raw.iter().map(|r| r.iter().map(|p| gb.normal_form(p)).collect()).collect();

    let rform = RForm::new(c);
    let hayashi = Hayashi::new(&rform, &d_raw)?;
    let j_of_t: Vec<Vec<NCPoly>> = t
        .iter()
        .map(|r| r.iter().map(|p| gb.normal_form(&hayashi.apply(p))).collect())
        .collect();

    let prop_fila = verify_prop_fila(n, &t, &d, &gb);
    let normality = centrality_normality(&hayashi, &d, &gb, opts.certify_normality);
    let mut main_hypothesis = verify_main_hypothesis(n, &j_of_t, &d, &gb);
    let mut automorphism = Automorphism::Hayashi;
    if main_hypothesis.verdict != Verdict::Holds && normality.central && !hayashi.is_identity() {
        let retry = verify_main_hypothesis(n, &t, &d, &gb);
        if retry.verdict == Verdict::Holds {
            main_hypothesis = retry;
            automorphism = Automorphism::Identity;
        }
    }
    let antipode = antipode_table(&t, main_hypothesis.verdict);
    let zero_divisors = zero_divisors(&d, n, &gb);
    let torus = detect_torus(&frt.relations, &d, n, &zero_divisors, opts.budget);
    let lemma = diagonal_entries(c).map(|q| diagonal_lemma_certificates(&q, &gb));
    let presentation = hopf_presentation(&frt, &d, &hayashi, automorphism, &normality, &zero_divisors, torus.as_ref());

    Ok(QDetReport {
        n,
        hilbert: nichols.hilbert(),
        wgf,
        d_raw,
        d,
        group_like,
        t,
        j_of_t,
        prop_fila,
        main_hypothesis,
        automorphism,
        normality,
        antipode,
        zero_divisors,
        torus,
        lemma,
        presentation,
        gb_degree: top + 1,
        gb_complete_through: gb.complete_through(),
        gb_work: gb.work(),
        gb_budget: gb.budget(),
        gb_exhausted: gb.is_exhausted(),
        gb_fingerprint: gb.fingerprint().to_string(),
        hayashi,
        frt,
    })
}

/// Whether the Nichols stage stopped because of a budget rather than a
/// mathematical answer.
pub fn stopped_on_budget(stop: &Stop) -> bool {
    matches!(stop, Stop::TensorCap { .. })
}

fn gen_name(n: usize, i: usize, j: usize) -> String {
    format_poly(&NCPoly::generator(n, i, j), n)
}

pub fn hopf_presentation(
    frt: &FrtPresentation,
    d: &NCPoly,
    hayashi: &Hayashi,
    automorphism: Automorphism,
    normality: &Normality,
    zero_divisors: &[ZeroDivisor],
    torus: Option<&TorusCertificate>,
) -> HopfPresentation {
    let n = frt.n;
    let mut generators: Vec<String> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| gen_name(n, i, j))
        .collect();
    generators.push("D^-1".into());
    let ds = format_poly(d, n);
    let mut relations: Vec<String> = frt.relations.iter().map(|r| format!("{} = 0", format_poly(r, n))).collect();
    relations.push(format!("({ds})*D^-1 = 1 = D^-1*({ds})"));
    for i in 0..n {
        for j in 0..n {
            let g = gen_name(n, i, j);
            let img = match automorphism {
                Automorphism::Hayashi => format_poly(hayashi.image_of(i, j), n),
                Automorphism::Identity => g.clone(),
            };
            relations.push(format!("{g}*D^-1 = D^-1*({img})"));
        }
    }
    let sl_relations = normality.central.then(|| {
        let mut r: Vec<String> = frt.relations.iter().map(|r| format!("{} = 0", format_poly(r, n))).collect();
        r.push(format!("{ds} = 1"));
        r
    });
    let mut notes = Vec::new();
    for z in zero_divisors {
        let side = match (z.left, z.right) {
            (true, true) => "both sides",
            (true, false) => "the left",
            _ => "the right",
        };
        notes.push(format!(
            "{} annihilates D from {side}, so it maps to 0 in H(c)",
            gen_name(n, z.row, z.col)
        ));
    }
    if let Some(t) = torus {
        notes.push(format!(
            "off-diagonal generators vanish and D maps to {}; H(c) is the group algebra of Z^{}",
            format_poly(&t.d_image, n),
            t.rank
        ));
    }
    HopfPresentation {
        generators,
        relations,
        sl_relations,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::parse_poly;

    fn member(gb: &TruncatedGB, p: &NCPoly) -> bool {
        gb.membership(p) == Membership::Member
    }

    #[test]
    fn presented_exterior_algebra() {
        let w = |ls: &[Letter]| NCPoly::monomial(Word::from_slice(ls), Scalar::one());
        let rels = vec![w(&[0, 0]), w(&[1, 1]), &w(&[0, 1]) + &w(&[1, 0])];
        let p = presented_top(&rels, 2, 4, None, DEFAULT_BUDGET).unwrap();
        assert_eq!(p.hilbert, vec![1, 2, 1, 0]);
        assert_eq!(p.top, 2);
        let d = presented_determinant(&p, 2);
        assert_eq!(d, parse_poly("ad - bc", 2).unwrap());
        let q = presented_top(&rels, 2, 2, None, DEFAULT_BUDGET);
        assert!(matches!(q, Err(QDetError::Top(TopError::Inconclusive { .. }))));
    }

    #[test]
    fn coaction_on_generators_and_unit() {
        let mut e = vec![Scalar::zero(); 2];
        e[1] = Scalar::one();
        let l = coaction_expand(&e, 2, 1);
        assert_eq!(l[0], NCPoly::generator(2, 1, 0));
        assert_eq!(l[1], NCPoly::generator(2, 1, 1));
        let unit = coaction_expand(&[Scalar::one()], 2, 0);
        assert_eq!(unit, vec![NCPoly::one()]);
    }

    #[test]
    fn minus_flip_gives_the_determinant() {
        let c = BraidingTensor::flip(2).negated();
        let r = assemble(&c, &Options::default()).unwrap();
        let gb = TruncatedGB::complete(&r.frt.relations, 3, DEFAULT_BUDGET).unwrap();
        assert!(member(&gb, &(&r.d - &parse_poly("ad - bc", 2).unwrap())));
        assert!(r.prop_fila.is_zero());
        assert_eq!(r.main_hypothesis.verdict, Verdict::Holds);
        assert!(r.normality.central);
        assert!(r.group_like);
        let expected = [["d", "-b"], ["-c", "a"]];
        for i in 0..2 {
            for j in 0..2 {
                let e = parse_poly(expected[i][j], 2).unwrap();
                assert!(member(&gb, &(&r.t[i][j] - &e)), "T[{i}][{j}]");
            }
        }
        assert!(r.zero_divisors.is_empty());
        assert!(r.torus.is_none());
    }

    #[test]
    fn truncated_line() {
        // c = ζ₃ on a line: 𝔅 = k[x]/(x³), D = (t₁¹)², T = t₁¹.
        let c = BraidingTensor::diagonal(&[vec![Scalar::root_of_unity(3, 1)]]).unwrap();
        let r = assemble(&c, &Options::default()).unwrap();
        assert_eq!(r.wgf.top, 2);
        let a = NCPoly::generator(1, 0, 0);
        assert_eq!(r.t[0][0], a);
        assert_eq!(r.d, &a * &a);
    }

    #[test]
    fn root_orders() {
        assert_eq!(root_order(&Scalar::root_of_unity(3, 1)), Some(3));
        assert_eq!(root_order(&Scalar::from_int(-1)), Some(2));
        assert_eq!(root_order(&Scalar::root_of_unity(6, 1)), Some(6));
        assert_eq!(root_order(&Scalar::from_int(2)), None);
    }

    #[test]
    fn hypothesis_gates_the_antipode() {
        assert_eq!(antipode_table(&[], Verdict::Fails), Err(AntipodeError::HypothesisFailed));
        assert!(antipode_table(&[], Verdict::Holds).is_ok());
    }
}
