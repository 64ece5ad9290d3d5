//! Braided vector spaces `(V, c)` and the braid group action on `V^{⊗d}`.
//!
//! Basis words of `V^{⊗d}` are index sequences `(i_1, …, i_d)` with
//! `0 ≤ i_p < n`, ordered lexicographically; the word `(i_1, …, i_d)` has
//! index `Σ i_p n^{d-p}`. Indices are 0-based in code and 1-based in every
//! user-facing string.

use std::fmt;

use crate::exactla::{invert, LinAlgError, Matrix};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("index {index} out of range 1..={n} in {context}")]
    IndexOutOfRange {
        index: usize,
        n: usize,
        context: String,
    },
    #[error("{0}")]
    Malformed(String),
}

/// `c(x_i ⊗ x_j) = Σ c_{ij}^{kl} x_k ⊗ x_l`, stored densely plus a sparse view.
#[derive(Clone, PartialEq, Eq)]
pub struct BraidingTensor {
    n: usize,
    data: Vec<Scalar>,
    // images[i*n+j] = nonzero (k, l, c_{ij}^{kl})
    images: Vec<Vec<(usize, usize, Scalar)>>,
    // preimages[k*n+l] = nonzero (i, j, c_{ij}^{kl})
    preimages: Vec<Vec<(usize, usize, Scalar)>>,
}

impl fmt::Debug for BraidingTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BraidingTensor(n = {}) {{", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                let terms: Vec<String> = self.images[i * self.n + j]
                    .iter()
                    .map(|(k, l, c)| format!("({c}) x{}x{}", k + 1, l + 1))
                    .collect();
                writeln!(f, "  x{}x{} -> {}", i + 1, j + 1, terms.join(" + "))?;
            }
        }
        write!(f, "}}")
    }
}

impl BraidingTensor {
    /// Builds the tensor from `c(i, j, k, l) = c_{ij}^{kl}` (0-based).
    pub fn from_fn(n: usize, mut c: impl FnMut(usize, usize, usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(n.pow(4));
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        data.push(c(i, j, k, l));
                    }
                }
            }
        }
        Self::from_dense(n, data)
    }

    fn from_dense(n: usize, data: Vec<Scalar>) -> Self {
        assert!(n >= 1, "dimension must be positive");
        assert_eq!(data.len(), n.pow(4));
        let mut images = vec![Vec::new(); n * n];
        let mut preimages = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = &data[((i * n + j) * n + k) * n + l];
                        if !v.is_zero() {
                            images[i * n + j].push((k, l, v.clone()));
                            preimages[k * n + l].push((i, j, v.clone()));
                        }
                    }
                }
            }
        }
        BraidingTensor {
            n,
            data,
            images,
            preimages,
        }
    }

    /// Builds from a list of `((i, j), (k, l), value)` with 1-based indices.
    /// Repeated entries are summed.
    pub fn from_entries(
        n: usize,
        entries: &[((usize, usize), (usize, usize), Scalar)],
    ) -> Result<Self, BuildError> {
        if n == 0 {
            return Err(BuildError::Malformed("dimension must be positive".into()));
        }
        let mut data = vec![Scalar::zero(); n.pow(4)];
        for (pos, ((i, j), (k, l), v)) in entries.iter().enumerate() {
            for &idx in &[*i, *j, *k, *l] {
                if idx == 0 || idx > n {
                    return Err(BuildError::IndexOutOfRange {
                        index: idx,
                        n,
                        context: format!("entry #{}", pos + 1),
                    });
                }
            }
            data[(((i - 1) * n + j - 1) * n + k - 1) * n + l - 1] += v;
        }
        Ok(Self::from_dense(n, data))
    }

    /// The flip `τ(x_i ⊗ x_j) = x_j ⊗ x_i`.
    pub fn flip(n: usize) -> Self {
        Self::from_fn(n, |i, j, k, l| {
            if k == j && l == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    /// Diagonal type: `c(x_i ⊗ x_j) = q_{ij} x_j ⊗ x_i`.
    pub fn diagonal(q: &[Vec<Scalar>]) -> Result<Self, BuildError> {
        let n = q.len();
        if n == 0 || q.iter().any(|r| r.len() != n) {
            return Err(BuildError::Malformed(
                "diagonal braiding needs a square n x n matrix".into(),
            ));
        }
        Ok(Self::from_fn(n, |i, j, k, l| {
            if k == j && l == i {
                q[i][j].clone()
            } else {
                Scalar::zero()
            }
        }))
    }

    /// `c(x_i ⊗ x_j) = q(i, j) x_k ⊗ x_l` where `(k, l) = s(i, j)` (all 0-based).
    pub fn from_set_map(
        n: usize,
        s: impl Fn(usize, usize) -> (usize, usize),
        q: impl Fn(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = vec![Scalar::zero(); n.pow(4)];
        for i in 0..n {
            for j in 0..n {
                let (k, l) = s(i, j);
                data[((i * n + j) * n + k) * n + l] = q(i, j);
            }
        }
        Self::from_dense(n, data)
    }

    pub fn scaled(&self, q: &Scalar) -> Self {
        Self::from_dense(self.n, self.data.iter().map(|v| v * q).collect())
    }

    pub fn negated(&self) -> Self {
        self.scaled(&Scalar::from_int(-1))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `c_{ij}^{kl}`, 0-based.
    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        let n = self.n;
        &self.data[((i * n + j) * n + k) * n + l]
    }

    /// Nonzero terms `(k, l, c_{ij}^{kl})` of `c(x_i ⊗ x_j)`.
    pub fn image(&self, i: usize, j: usize) -> &[(usize, usize, Scalar)] {
        &self.images[i * self.n + j]
    }

    /// Nonzero terms `(i, j, c_{ij}^{kl})` hitting `x_k ⊗ x_l`.
    pub fn preimage(&self, k: usize, l: usize) -> &[(usize, usize, Scalar)] {
        &self.preimages[k * self.n + l]
    }

    /// The least common multiple of the conductors of all entries.
    pub fn conductor(&self) -> u32 {
        self.data.iter().fold(1u32, |m, v| {
            num_integer::Integer::lcm(&m, &v.conductor())
        })
    }

    /// The `n² × n²` matrix of `c` on `V ⊗ V`.
    pub fn matrix(&self) -> Matrix {
        braid_generator_action(self, 2, 1)
    }

    pub fn is_involutive(&self) -> bool {
        let m = self.matrix();
        m.mul_mat(&m) == Matrix::identity(self.n * self.n)
    }

    /// The matrix of `c♭`, with `c♭(x_j^* ⊗ x_k) = Σ_{i,b} c_{ki}^{jb} x_b ⊗ x_i^*`.
    /// Rows are indexed by `(b, i)`, columns by `(j, k)`.
    pub fn c_flat(&self) -> Matrix {
        let n = self.n;
        let mut m = Matrix::zeros(n * n, n * n);
        for j in 0..n {
            for k in 0..n {
                for i in 0..n {
                    for b in 0..n {
                        let v = self.coeff(k, i, j, b);
                        if !v.is_zero() {
                            m.set(b * n + i, j * n + k, v.clone());
                        }
                    }
                }
            }
        }
        m
    }
}

/// A basis triple `x_i ⊗ x_j ⊗ x_k` (1-based) where the braid equation fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidViolation {
    pub input: [usize; 3],
    pub difference: Vec<Scalar>,
}

impl fmt::Display for BraidViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "braid equation fails on x{} x{} x{}",
            self.input[0], self.input[1], self.input[2]
        )
    }
}

/// Evaluates `c₁c₂c₁ − c₂c₁c₂` on every basis tensor of `V^{⊗3}`.
pub fn check_braid_equation(c: &BraidingTensor) -> Result<(), BraidViolation> {
    let n = c.dim();
    let dim = n.pow(3);
    for w in 0..dim {
        let mut e = vec![Scalar::zero(); dim];
        e[w] = Scalar::one();
        let lhs = apply_generator(c, 3, 1, &apply_generator(c, 3, 2, &apply_generator(c, 3, 1, &e)));
        let rhs = apply_generator(c, 3, 2, &apply_generator(c, 3, 1, &apply_generator(c, 3, 2, &e)));
        if lhs != rhs {
            let word = index_word(n, 3, w);
            return Err(BraidViolation {
                input: [word[0] + 1, word[1] + 1, word[2] + 1],
                difference: lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect(),
            });
        }
    }
    Ok(())
}

/// A nonzero vector in the kernel of `c♭`, indexed like its columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityWitness {
    pub kernel_vector: Vec<Scalar>,
}

pub fn check_rigid(c: &BraidingTensor) -> Result<(), RigidityWitness> {
    match invert(&c.c_flat()) {
        Ok(_) => Ok(()),
        Err(LinAlgError::Singular { kernel_witness }) => Err(RigidityWitness {
            kernel_vector: kernel_witness,
        }),
        Err(e) => unreachable!("c-flat is square: {e}"),
    }
}

/// Index of a word in the lexicographic basis of `V^{⊗len}`.
pub fn word_index(n: usize, word: &[usize]) -> usize {
    word.iter().fold(0, |acc, &i| acc * n + i)
}

/// Inverse of [`word_index`].
pub fn index_word(n: usize, d: usize, mut idx: usize) -> Vec<usize> {
    let mut w = vec![0; d];
    for p in (0..d).rev() {
        w[p] = idx % n;
        idx /= n;
    }
    w
}

fn slot_weights(n: usize, d: usize, k: usize) -> (usize, usize) {
    assert!(k >= 1 && k < d, "generator position {k} out of range for degree {d}");
    (n.pow((d - k) as u32), n.pow((d - k - 1) as u32))
}

/// `c_k v` for `c_k = id^{⊗k-1} ⊗ c ⊗ id^{⊗d-k-1}` (`1 ≤ k ≤ d-1`).
pub fn apply_generator(c: &BraidingTensor, d: usize, k: usize, v: &[Scalar]) -> Vec<Scalar> {
    let n = c.dim();
    let (w1, w2) = slot_weights(n, d, k);
    let mut out = vec![Scalar::zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let i = (idx / w1) % n;
        let j = (idx / w2) % n;
        let base = idx - i * w1 - j * w2;
        for (a, b, cf) in c.image(i, j) {
            out[base + a * w1 + b * w2] += &(x * cf);
        }
    }
    out
}

/// The row action `v c_k` (equivalently `c_kᵀ v`).
pub fn apply_generator_right(c: &BraidingTensor, d: usize, k: usize, v: &[Scalar]) -> Vec<Scalar> {
    let n = c.dim();
    let (w1, w2) = slot_weights(n, d, k);
    let mut out = vec![Scalar::zero(); v.len()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let a = (idx / w1) % n;
        let b = (idx / w2) % n;
        let base = idx - a * w1 - b * w2;
        for (i, j, cf) in c.preimage(a, b) {
            out[base + i * w1 + j * w2] += &(x * cf);
        }
    }
    out
}

/// Matrix of `c_k` on `V^{⊗d}`.
pub fn braid_generator_action(c: &BraidingTensor, d: usize, k: usize) -> Matrix {
    let n = c.dim();
    let dim = n.pow(d as u32);
    let (w1, w2) = slot_weights(n, d, k);
    let mut m = Matrix::zeros(dim, dim);
    for idx in 0..dim {
        let i = (idx / w1) % n;
        let j = (idx / w2) % n;
        let base = idx - i * w1 - j * w2;
        for (a, b, cf) in c.image(i, j) {
            m.set(base + a * w1 + b * w2, idx, cf.clone());
        }
    }
    m
}

/// How a reduced word is extracted from a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionStrategy {
    /// Peel off the first right descent: `σ = (σ s_i) s_i`.
    RightDescent,
    /// Peel off the first left descent: `σ = s_i (s_i σ)`.
    LeftDescent,
}

/// A permutation `σ` of `{0, …, d-1}` (`perm[p] = σ(p)`) with a reduced word
/// `σ = s_{a_1} ∘ … ∘ s_{a_m}`, where `s_a` swaps `a-1` and `a` (so `a` is
/// 1-based, matching `c_a`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermWord {
    pub perm: Vec<usize>,
    pub reduced_word: Vec<usize>,
}

impl PermWord {
    pub fn new(perm: Vec<usize>, strategy: ReductionStrategy) -> Self {
        let d = perm.len();
        let mut seen = vec![false; d];
        for &p in &perm {
            assert!(p < d && !seen[p], "not a permutation: {perm:?}");
            seen[p] = true;
        }
        let mut cur = perm.clone();
        let mut front = Vec::new();
        let mut back = Vec::new();
        loop {
            match strategy {
                ReductionStrategy::RightDescent => {
                    let Some(i) = (0..d.saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) else {
                        break;
                    };
                    cur.swap(i, i + 1);
                    back.push(i + 1);
                }
                ReductionStrategy::LeftDescent => {
                    let mut pos = vec![0; d];
                    for (p, &v) in cur.iter().enumerate() {
                        pos[v] = p;
                    }
                    let Some(i) = (0..d.saturating_sub(1)).find(|&i| pos[i] > pos[i + 1]) else {
                        break;
                    };
                    cur.swap(pos[i], pos[i + 1]);
                    front.push(i + 1);
                }
            }
        }
        back.reverse();
        front.extend(back);
        PermWord {
            perm,
            reduced_word: front,
        }
    }

    pub fn identity(d: usize) -> Self {
        Self::new((0..d).collect(), ReductionStrategy::RightDescent)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.perm;
        (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count()
    }

    /// Composes the reduced word back into a permutation.
    pub fn compose_word(d: usize, word: &[usize]) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..d).collect();
        // σ = s_{a_1} ∘ … ∘ s_{a_m}; right-multiplying by s_a swaps array slots.
        for &a in word {
            perm.swap(a - 1, a);
        }
        perm
    }
}

/// All permutations of `{0, …, d-1}` in lexicographic order.
pub fn all_permutations(d: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

/// Applies the lift of `word = (a_1, …, a_m)`, i.e. `c_{a_1} ⋯ c_{a_m}`, to `v`.
pub fn apply_word(c: &BraidingTensor, d: usize, word: &[usize], v: &[Scalar]) -> Vec<Scalar> {
    let mut v = v.to_vec();
    for &a in word.iter().rev() {
        v = apply_generator(c, d, a, &v);
    }
    v
}

/// `ρ_d(M(σ))` along the stored reduced word.
pub fn matsumoto_lift(c: &BraidingTensor, sigma: &PermWord, d: usize) -> Matrix {
    assert_eq!(sigma.perm.len(), d);
    let n = c.dim();
    let dim = n.pow(d as u32);
    let mut m = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let mut e = vec![Scalar::zero(); dim];
        e[col] = Scalar::one();
        for (row, v) in apply_word(c, d, &sigma.reduced_word, &e).into_iter().enumerate() {
            if !v.is_zero() {
                m.set(row, col, v);
            }
        }
    }
    m
}

/// `P_σ(x_{i_1} ⊗ … ⊗ x_{i_d}) = x_{i_{σ⁻¹(1)}} ⊗ … ⊗ x_{i_{σ⁻¹(d)}}`.
pub fn place_permutation_matrix(n: usize, perm: &[usize]) -> Matrix {
    let d = perm.len();
    let dim = n.pow(d as u32);
    let mut m = Matrix::zeros(dim, dim);
    for col in 0..dim {
        let w = index_word(n, d, col);
        let mut out = vec![0; d];
        for p in 0..d {
            out[perm[p]] = w[p];
        }
        m.set(word_index(n, &out), col, Scalar::one());
    }
    m
}
