//! Degree-by-degree data of the Nichols algebra `𝔅(V, c) = T(V)/⊕ Ker QS_d`.
//!
//! The symmetrizer is never summed over all of `𝕊_d`. Writing
//! `QS_d = (QS_{d-1} ⊗ id)·G_d` with
//! `G_d = id + c_{d-1} + c_{d-1}c_{d-2} + … + c_{d-1}⋯c_1` (the lifts of the
//! minimal coset representatives), the row space of `QS_d` is the row space
//! of `(R_{d-1} ⊗ id)·G_d`, where `R_{d-1}` is the reduced echelon form of
//! `QS_{d-1}`. Only these `h(d-1)·n` rows are ever formed.
//!
//! The class of `v ∈ V^{⊗d}` in `𝔅^d` is `R_d v`. Its coordinates refer to
//! the quotient basis given by the pivot words of `R_d` (the lexicographically
//! smallest words with linearly independent classes).

use crate::braiding::{
    all_permutations, apply_generator_right, index_word, matsumoto_lift, word_index,
    BraidingTensor, PermWord, ReductionStrategy,
};
use crate::exactla::{invert, rref_rows, LinAlgError, Matrix, Subspace};
use crate::ncpoly::format_monomial;
use crate::scalars::Scalar;

/// Default cap on `n^d` for the tensor powers that are materialized.
pub const DEFAULT_TENSOR_CAP: usize = 4096;
pub const DEFAULT_MAX_DEGREE: usize = 8;

/// The brute-force symmetrizer `Σ_{σ ∈ 𝕊_d} ρ_d(M(σ))`.
pub fn qs_matrix(c: &BraidingTensor, d: usize) -> Matrix {
    let dim = c.dim().pow(d as u32);
    let mut acc = Matrix::zeros(dim, dim);
    for perm in all_permutations(d) {
        let pw = PermWord::new(perm, ReductionStrategy::RightDescent);
        acc = acc.add(&matsumoto_lift(c, &pw, d));
    }
    acc
}

/// Row vector `v·G_d`.
fn times_coset_sum(c: &BraidingTensor, d: usize, v: &[Scalar]) -> Vec<Scalar> {
    let mut acc = v.to_vec();
    let mut cur = v.to_vec();
    for k in (1..d).rev() {
        cur = apply_generator_right(c, d, k, &cur);
        for (a, b) in acc.iter_mut().zip(&cur) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
    acc
}

/// Echelon data of `QS_d`.
#[derive(Debug, Clone)]
pub struct DegreeData {
    pub degree: usize,
    /// Nonzero rows of the reduced echelon form of `QS_d`.
    pub rows: Vec<Vec<Scalar>>,
    /// Pivot columns (word indices) of `rows`.
    pub pivots: Vec<usize>,
}

impl DegreeData {
    pub fn h(&self) -> usize {
        self.rows.len()
    }
}

/// Why the degree-by-degree computation stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stop {
    /// `h(d) = 0` for the last computed degree.
    Vanished { degree: usize },
    /// The degree bound was reached with `h > 0`.
    MaxDegree { max_degree: usize },
    /// `n^d` would exceed the tensor cap.
    TensorCap { degree: usize, dim: usize, cap: usize },
}

#[derive(Debug, Clone)]
pub struct GradedNichols {
    pub n: usize,
    pub braiding: BraidingTensor,
    pub degrees: Vec<DegreeData>,
    pub stop: Stop,
}

impl GradedNichols {
    /// Computes degrees `0, 1, …` until `h` vanishes, `max_degree` is
    /// reached, or `n^d` would exceed `tensor_cap`.
    pub fn compute(c: &BraidingTensor, max_degree: usize, tensor_cap: usize) -> Self {
        let n = c.dim();
        let unit = |dim: usize| -> Vec<Vec<Scalar>> {
            (0..dim)
                .map(|i| {
                    let mut r = vec![Scalar::zero(); dim];
                    r[i] = Scalar::one();
                    r
                })
                .collect()
        };
        let mut degrees = vec![DegreeData {
            degree: 0,
            rows: unit(1),
            pivots: vec![0],
        }];
        let mut stop = Stop::MaxDegree { max_degree };
        for d in 1..=max_degree {
            let dim = match n.checked_pow(d as u32) {
                Some(x) if x <= tensor_cap => x,
                other => {
                    stop = Stop::TensorCap {
                        degree: d,
                        dim: other.unwrap_or(usize::MAX),
                        cap: tensor_cap,
                    };
                    break;
                }
            };
            let data = if d == 1 {
                DegreeData {
                    degree: 1,
                    rows: unit(n),
                    pivots: (0..n).collect(),
                }
            } else {
                let prev = &degrees[d - 1];
                let mut gens = Vec::with_capacity(prev.h() * n);
                for row in &prev.rows {
                    for x in 0..n {
                        let mut v = vec![Scalar::zero(); dim];
                        for (w, a) in row.iter().enumerate() {
                            if !a.is_zero() {
                                v[w * n + x] = a.clone();
                            }
                        }
                        gens.push(times_coset_sum(c, d, &v));
                    }
                }
                let (rows, pivots) = rref_rows(gens, dim);
                DegreeData {
                    degree: d,
                    rows,
                    pivots,
                }
            };
            let vanished = data.h() == 0;
            degrees.push(data);
            if vanished {
                stop = Stop::Vanished { degree: d };
                break;
            }
        }
        GradedNichols {
            n,
            braiding: c.clone(),
            degrees,
            stop,
        }
    }

    pub fn max_computed(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.degrees.iter().map(DegreeData::h).collect()
    }

    pub fn degree(&self, d: usize) -> &DegreeData {
        &self.degrees[d]
    }

    /// `R_d v`: coordinates of the class of `v ∈ V^{⊗d}` in the pivot-word basis.
    pub fn class(&self, d: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.degrees[d]
            .rows
            .iter()
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in r.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Class of the basis word `x_{w_1} ⋯ x_{w_d}`.
    pub fn class_of_word(&self, w: &[usize]) -> Vec<Scalar> {
        let idx = word_index(self.n, w);
        self.degrees[w.len()]
            .rows
            .iter()
            .map(|r| r[idx].clone())
            .collect()
    }

    /// The pivot words of degree `d` (quotient basis), 0-based letters.
    pub fn basis_words(&self, d: usize) -> Vec<Vec<usize>> {
        self.degrees[d]
            .pivots
            .iter()
            .map(|&p| index_word(self.n, d, p))
            .collect()
    }

    /// Product of classes given in pivot-word coordinates.
    pub fn class_product(&self, a: usize, u: &[Scalar], b: usize, v: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let dim_b = n.pow(b as u32);
        let mut t = vec![Scalar::zero(); n.pow((a + b) as u32)];
        for (x, &p) in u.iter().zip(&self.degrees[a].pivots) {
            if x.is_zero() {
                continue;
            }
            for (y, &q) in v.iter().zip(&self.degrees[b].pivots) {
                if !y.is_zero() {
                    t[p * dim_b + q] += &(x * y);
                }
            }
        }
        self.class(a + b, &t)
    }

    /// Basis of `Ker QS_d`.
    pub fn kernel(&self, d: usize) -> Subspace {
        let dim = self.n.pow(d as u32);
        let m = if self.degrees[d].rows.is_empty() {
            Matrix::zeros(0, dim)
        } else {
            Matrix::from_rows(self.degrees[d].rows.clone())
        };
        crate::exactla::kernel(&m)
    }

    /// Dimension of the relations newly appearing in degree `d ≥ 2`, i.e. of
    /// `K_d / (K_{d-1} ⊗ V + V ⊗ K_{d-1})`.
    pub fn new_relation_count(&self, d: usize) -> usize {
        assert!(d >= 2);
        let n = self.n;
        let dim = n.pow(d as u32);
        let k_d = dim - self.degrees[d].h();
        if d == 2 {
            return k_d;
        }
        // dim(K⊗V + V⊗K) = n^d − dim(rowspace(R⊗id) ∩ rowspace(id⊗R))
        let prev = &self.degrees[d - 1];
        let dim_prev = n.pow((d - 1) as u32);
        let mut stacked = Vec::with_capacity(2 * prev.h() * n);
        for row in &prev.rows {
            for x in 0..n {
                let mut a = vec![Scalar::zero(); dim];
                let mut b = vec![Scalar::zero(); dim];
                for (w, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        a[w * n + x] = v.clone();
                        b[x * dim_prev + w] = v.clone();
                    }
                }
                stacked.push(a);
                stacked.push(b);
            }
        }
        let rank = rref_rows(stacked, dim).0.len();
        let inter = 2 * prev.h() * n - rank;
        let lower = dim - inter;
        k_d - lower
    }

    /// The lower part `K_{d-1} ⊗ V + V ⊗ K_{d-1}` as a subspace.
    pub fn lower_relations(&self, d: usize) -> Subspace {
        let n = self.n;
        let dim = n.pow(d as u32);
        if d <= 2 {
            return Subspace::zero(dim);
        }
        let dim_prev = n.pow((d - 1) as u32);
        let k = self.kernel(d - 1);
        let mut vecs = Vec::new();
        for v in &k.basis {
            for x in 0..n {
                let mut a = vec![Scalar::zero(); dim];
                let mut b = vec![Scalar::zero(); dim];
                for (w, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        a[w * n + x] = c.clone();
                        b[x * dim_prev + w] = c.clone();
                    }
                }
                vecs.push(a);
                vecs.push(b);
            }
        }
        Subspace::span(dim, vecs)
    }

    /// Representatives of the relations new in degree `d`: kernel vectors
    /// independent modulo the lower part.
    pub fn new_relations(&self, d: usize) -> Vec<Vec<Scalar>> {
        let lower = self.lower_relations(d);
        let mut acc = lower.clone();
        let mut out = Vec::new();
        for v in self.kernel(d).basis {
            if !acc.contains(&v) {
                let mut vecs = acc.basis.clone();
                vecs.push(v.clone());
                acc = Subspace::span(acc.ambient_dim, vecs);
                out.push(v);
            }
        }
        out
    }
}

/// Formats a vector of `V^{⊗d}` as a sum of words `x1x2…`.
pub fn format_tensor(v: &[Scalar], n: usize, d: usize) -> String {
    let mut out = String::new();
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let w = format_monomial(&index_word(n, d, idx));
        let (neg, coef) = match c.as_rational() {
            Some(q) if num_traits::One::is_one(q) => (false, String::new()),
            Some(q) if num_traits::One::is_one(&-q) => (true, String::new()),
            Some(q) if num_traits::Signed::is_negative(q) => (true, format!("{}*", -c)),
            _ if c.is_simple() => (false, format!("{c}*")),
            _ => (false, format!("({c})*")),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&coef);
        out.push_str(&w);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopError {
    #[error("no top degree found through degree {computed_through} ({reason})")]
    Inconclusive {
        computed_through: usize,
        reason: String,
    },
    #[error("degree {degree} is the last nonzero degree but has dimension {h}, not 1")]
    TopNotOneDimensional { degree: usize, h: usize },
    #[error("dim B^(top-1) = {h}, expected n = {n}")]
    CodegreeOne { h: usize, n: usize },
    #[error("the {side} pairing between degree 1 and degree top-1 is singular")]
    SingularPairing {
        side: &'static str,
        kernel_witness: Vec<Scalar>,
    },
    #[error("volume override {word} has length {len}, expected {top}")]
    VolumeLength { word: String, len: usize, top: usize },
    #[error("volume override {word} has zero class in the top degree")]
    VolumeZero { word: String },
}

/// Top degree, volume element and dual bases.
#[derive(Debug, Clone)]
pub struct WgfData {
    pub n: usize,
    pub top: usize,
    /// The chosen volume monomial (0-based letters).
    pub volume: Vec<usize>,
    /// `α_K`: coefficient of the volume class in `class(x_K)`, for every
    /// word `K` of length `top` (indexed like `V^{⊗top}`).
    pub alpha: Vec<Scalar>,
    /// Quotient basis `b_s` of `𝔅^{top-1}`.
    pub basis_prev: Vec<Vec<usize>>,
    /// Echelon rows `R_{top-1}`.
    pub rows_prev: Vec<Vec<Scalar>>,
    /// `P[i][s] = α(x_i b_s)`.
    pub left_pairing: Matrix,
    /// `Q[s][i] = α(b_s x_i)`.
    pub right_pairing: Matrix,
    /// `ω^j = Σ_s W[s][j] b_s`, with `class(x_i ω^j) = δ_{ij} 𝔟`.
    pub left_duals: Matrix,
    /// `w_r^j = Σ_s U[s][j] b_s`, with `class(w_r^j x_i) = δ_{ij} 𝔟`.
    pub right_duals: Matrix,
}

impl WgfData {
    pub fn alpha_of(&self, word: &[usize]) -> &Scalar {
        &self.alpha[word_index(self.n, word)]
    }

    /// `ω^j` as a vector in `V^{⊗top-1}`.
    pub fn left_dual_vector(&self, j: usize) -> Vec<Scalar> {
        self.dual_vector(&self.left_duals, j)
    }

    pub fn right_dual_vector(&self, j: usize) -> Vec<Scalar> {
        self.dual_vector(&self.right_duals, j)
    }

    fn dual_vector(&self, m: &Matrix, j: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.n.pow((self.top - 1) as u32)];
        for (s, b) in self.basis_prev.iter().enumerate() {
            v[word_index(self.n, b)] = m.get(s, j).clone();
        }
        v
    }
}

/// Finds the top degree and builds [`WgfData`].
pub fn detect_top(g: &GradedNichols, volume: Option<&[usize]>) -> Result<WgfData, TopError> {
    let n = g.n;
    let top = match &g.stop {
        Stop::Vanished { degree } => degree - 1,
        Stop::MaxDegree { max_degree } => {
            return Err(TopError::Inconclusive {
                computed_through: g.max_computed(),
                reason: format!("h is still nonzero at the degree bound {max_degree}"),
            })
        }
        Stop::TensorCap { degree, dim, cap } => {
            return Err(TopError::Inconclusive {
                computed_through: g.max_computed(),
                reason: format!("budget: degree {degree} needs dimension {dim} > cap {cap}"),
            })
        }
    };
    let h_top = g.degree(top).h();
    if h_top != 1 {
        return Err(TopError::TopNotOneDimensional {
            degree: top,
            h: h_top,
        });
    }
    if top == 0 {
        return Err(TopError::CodegreeOne { h: 0, n });
    }
    let h_prev = g.degree(top - 1).h();
    if h_prev != n {
        return Err(TopError::CodegreeOne { h: h_prev, n });
    }
    let row = &g.degree(top).rows[0];
    let vol: Vec<usize> = match volume {
        Some(w) => {
            if w.len() != top {
                return Err(TopError::VolumeLength {
                    word: format_monomial(w),
                    len: w.len(),
                    top,
                });
            }
            w.to_vec()
        }
        None => index_word(n, top, g.degree(top).pivots[0]),
    };
    let pivot = &row[word_index(n, &vol)];
    if pivot.is_zero() {
        return Err(TopError::VolumeZero {
            word: format_monomial(&vol),
        });
    }
    let inv = pivot.inverse().expect("nonzero");
    let alpha: Vec<Scalar> = row.iter().map(|x| x * &inv).collect();

    let basis_prev = g.basis_words(top - 1);
    let dim_prev = n.pow((top - 1) as u32);
    let mut p = Matrix::zeros(n, n);
    let mut q = Matrix::zeros(n, n);
    for i in 0..n {
        for (s, b) in basis_prev.iter().enumerate() {
            let bi = word_index(n, b);
            p.set(i, s, alpha[i * dim_prev + bi].clone());
            q.set(s, i, alpha[bi * n + i].clone());
        }
    }
    let w = invert(&p).map_err(|e| singular("left", e))?;
    let u = invert(&q).map_err(|e| singular("right", e))?.transpose();
    Ok(WgfData {
        n,
        top,
        volume: vol,
        alpha,
        basis_prev,
        rows_prev: g.degree(top - 1).rows.clone(),
        left_pairing: p,
        right_pairing: q,
        left_duals: w,
        right_duals: u,
    })
}

fn singular(side: &'static str, e: LinAlgError) -> TopError {
    match e {
        LinAlgError::Singular { kernel_witness } => TopError::SingularPairing {
            side,
            kernel_witness,
        },
        other => unreachable!("square pairing: {other}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus_flip(n: usize) -> BraidingTensor {
        BraidingTensor::flip(n).negated()
    }

    #[test]
    fn qs2_is_id_plus_c() {
        let c = minus_flip(2);
        assert_eq!(qs_matrix(&c, 2), Matrix::identity(4).add(&c.matrix()));
    }

    #[test]
    fn factored_rows_match_brute_force() {
        // Transposition rack of S3 with cocycle -1.
        let tri = |i: usize, j: usize| if i == j { i } else { 3 - i - j };
        let c = BraidingTensor::from_set_map(3, |i, j| (tri(i, j), i), |_, _| Scalar::from_int(-1));
        let g = GradedNichols::compute(&c, 4, DEFAULT_TENSOR_CAP);
        for d in 2..=4 {
            let (rows, pivots) = rref_rows(qs_matrix(&c, d).to_rows(), 3usize.pow(d as u32));
            assert_eq!(g.degree(d).rows, rows, "degree {d}");
            assert_eq!(g.degree(d).pivots, pivots);
        }
        assert_eq!(g.hilbert(), vec![1, 3, 4, 3, 1]);
    }

    #[test]
    fn exterior_algebra() {
        let g = GradedNichols::compute(&minus_flip(2), 8, DEFAULT_TENSOR_CAP);
        assert_eq!(g.hilbert(), vec![1, 2, 1, 0]);
        let w = detect_top(&g, None).unwrap();
        assert_eq!(w.top, 2);
        assert_eq!(w.volume, vec![0, 1]);
        assert_eq!(*w.alpha_of(&[1, 0]), Scalar::from_int(-1));
    }

    #[test]
    fn symmetric_algebra_is_inconclusive() {
        let g = GradedNichols::compute(&BraidingTensor::flip(2), 6, DEFAULT_TENSOR_CAP);
        assert_eq!(g.hilbert(), vec![1, 2, 3, 4, 5, 6, 7]);
        assert!(matches!(detect_top(&g, None), Err(TopError::Inconclusive { .. })));
        let capped = GradedNichols::compute(&BraidingTensor::flip(2), 20, 100);
        assert!(matches!(capped.stop, Stop::TensorCap { degree: 7, .. }));
    }

    #[test]
    fn flip_symmetric_cube_rank() {
        assert_eq!(qs_matrix(&BraidingTensor::flip(2), 3).rank(), 4);
    }

    #[test]
    fn format_tensor_examples() {
        let mut v = vec![Scalar::zero(); 4];
        v[0] = Scalar::one();
        v[3] = Scalar::one();
        assert_eq!(format_tensor(&v, 2, 2), "x1x1 + x2x2");
        v[3] = Scalar::from_int(-2);
        assert_eq!(format_tensor(&v, 2, 2), "x1x1 - 2*x2x2");
    }
}
