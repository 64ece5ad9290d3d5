//! Set-theoretic solutions, racks and cocycles, plus closed-form
//! evaluations of `r(D, t)` and `𝔍` for their linearizations.
//!
//! Indices are 0-based in memory. Spec documents use 1-based tables and are
//! shifted on parse.

use crate::braiding::BraidingTensor;
use crate::ncpoly::{Gen, NCPoly, Word};
use crate::nichols::WgfData;
use crate::scalars::Scalar;

/// `s(i, j) = (g_i(j), f_j(i))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSolution {
    pub n: usize,
    /// `g[i][j] = g_i(j)`.
    pub g: Vec<Vec<usize>>,
    /// `f[j][i] = f_j(i)`.
    pub f: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetError {
    #[error("entry ({i}, {j}) = {value} is out of range for a set of size {n}")]
    OutOfRange {
        i: usize,
        j: usize,
        value: usize,
        n: usize,
    },
    #[error("table has the wrong shape (expected {n}x{n})")]
    Shape { n: usize },
    #[error("braid equation fails at ({}, {}, {})", .0[0] + 1, .0[1] + 1, .0[2] + 1)]
    Braid([usize; 3]),
    #[error("self-distributivity fails at ({}, {}, {})", .0[0] + 1, .0[1] + 1, .0[2] + 1)]
    SelfDistributivity([usize; 3]),
    #[error("left translation by {} is not bijective", .0 + 1)]
    NotBijective(usize),
    #[error("cocycle vanishes at ({}, {})", .0 + 1, .1 + 1)]
    ZeroCocycle(usize, usize),
    #[error("cocycle identity fails at ({}, {}, {})", .0[0] + 1, .0[1] + 1, .0[2] + 1)]
    CocycleIdentity([usize; 3]),
    #[error("linearized braiding fails the braid equation at ({}, {}, {})", .0[0] + 1, .0[1] + 1, .0[2] + 1)]
    LinearBraid([usize; 3]),
}

/// Structural flags reported by [`SetSolution::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validation {
    pub involutive: bool,
    pub nondegenerate: bool,
}

impl SetSolution {
    /// Builds the tables from `s` (0-based).
    pub fn new(n: usize, s: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self, SetError> {
        let mut g = vec![vec![0; n]; n];
        let mut f = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let (a, b) = s(i, j);
                for value in [a, b] {
                    if value >= n {
                        return Err(SetError::OutOfRange { i, j, value, n });
                    }
                }
                g[i][j] = a;
                f[j][i] = b;
            }
        }
        Ok(SetSolution { n, g, f })
    }

    /// From a table whose entry `(i, j)` is `s(i, j)`.
    pub fn from_table(table: &[Vec<(usize, usize)>]) -> Result<Self, SetError> {
        let n = table.len();
        if table.iter().any(|r| r.len() != n) {
            return Err(SetError::Shape { n });
        }
        Self::new(n, |i, j| table[i][j])
    }

    pub fn from_rack(rack: &Rack) -> Self {
        Self::new(rack.n, |i, j| (rack.op[i][j], i)).expect("rack table is in range")
    }

    pub fn apply(&self, i: usize, j: usize) -> (usize, usize) {
        (self.g[i][j], self.f[j][i])
    }

    /// Exhaustive braid check plus involutivity and non-degeneracy flags.
    pub fn validate(&self) -> Result<Validation, SetError> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // s1 s2 s1 versus s2 s1 s2
                    let (a, b) = self.apply(x, y);
                    let (b, c) = self.apply(b, z);
                    let (a, b) = self.apply(a, b);
                    let (p, q) = self.apply(y, z);
                    let (o, p) = self.apply(x, p);
                    let (p, q) = self.apply(p, q);
                    if (a, b, c) != (o, p, q) {
                        return Err(SetError::Braid([x, y, z]));
                    }
                }
            }
        }
        let involutive = (0..n).all(|i| {
            (0..n).all(|j| {
                let (a, b) = self.apply(i, j);
                self.apply(a, b) == (i, j)
            })
        });
        let nondegenerate = (0..n).all(|i| is_bijection(&self.g[i]) && is_bijection(&self.f[i]));
        Ok(Validation {
            involutive,
            nondegenerate,
        })
    }

    /// `c^q(x_i ⊗ x_j) = q_{ij} x_{g_i(j)} ⊗ x_{f_j(i)}`.
    pub fn to_braiding(&self, q: &Cocycle) -> BraidingTensor {
        BraidingTensor::from_set_map(self.n, |i, j| self.apply(i, j), |i, j| q.get(i, j))
    }
}

fn is_bijection(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    for &v in map {
        if v >= map.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// `op[i][j] = i ▷ j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rack {
    pub n: usize,
    pub op: Vec<Vec<usize>>,
}

impl Rack {
    pub fn new(op: Vec<Vec<usize>>) -> Result<Self, SetError> {
        let n = op.len();
        for (i, row) in op.iter().enumerate() {
            if row.len() != n {
                return Err(SetError::Shape { n });
            }
            for (j, &value) in row.iter().enumerate() {
                if value >= n {
                    return Err(SetError::OutOfRange { i, j, value, n });
                }
            }
        }
        Ok(Rack { n, op })
    }

    /// Conjugation rack on the transpositions of `S_m`, ordered
    /// lexicographically: `(12), (13), …, (m-1 m)`.
    pub fn transpositions(m: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .collect();
        let index = |p: (usize, usize)| {
            let p = (p.0.min(p.1), p.0.max(p.1));
            pairs.iter().position(|&x| x == p).expect("transposition")
        };
        let op = pairs
            .iter()
            .map(|&(a, b)| {
                let conj = |x: usize| if x == a { b } else if x == b { a } else { x };
                pairs.iter().map(|&(c, d)| index((conj(c), conj(d)))).collect()
            })
            .collect();
        Rack { n: pairs.len(), op }
    }

    /// Self-distributivity and bijectivity of every left translation.
    pub fn validate(&self) -> Result<(), SetError> {
        let n = self.n;
        for x in 0..n {
            if !is_bijection(&self.op[x]) {
                return Err(SetError::NotBijective(x));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.op[x][self.op[y][z]];
                    let rhs = self.op[self.op[x][y]][self.op[x][z]];
                    if lhs != rhs {
                        return Err(SetError::SelfDistributivity([x, y, z]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Values `q_{ij}` attached to pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cocycle {
    Constant(Scalar),
    Table(Vec<Vec<Scalar>>),
}

impl Cocycle {
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self {
            Cocycle::Constant(q) => q.clone(),
            Cocycle::Table(t) => t[i][j].clone(),
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Cocycle::Constant(_))
    }

    fn check_nonzero(&self, n: usize) -> Result<(), SetError> {
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j).is_zero() {
                    return Err(SetError::ZeroCocycle(i, j));
                }
            }
        }
        Ok(())
    }

    /// `q_{i, j▷k} q_{j,k} = q_{i▷j, i▷k} q_{i,k}` for every triple.
    pub fn validate_rack(&self, rack: &Rack) -> Result<(), SetError> {
        let n = rack.n;
        self.check_nonzero(n)?;
        let op = &rack.op;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.get(i, op[j][k]) * self.get(j, k);
                    let rhs = self.get(op[i][j], op[i][k]) * self.get(i, k);
                    if lhs != rhs {
                        return Err(SetError::CocycleIdentity([i, j, k]));
                    }
                }
            }
        }
        Ok(())
    }

    /// For a general solution the cocycle condition is the braid equation of
    /// the linearization, checked on basis triples.
    pub fn validate_solution(&self, sol: &SetSolution) -> Result<(), SetError> {
        self.check_nonzero(sol.n)?;
        crate::braiding::check_braid_equation(&sol.to_braiding(self))
            .map_err(|v| SetError::LinearBraid([v.input[0] - 1, v.input[1] - 1, v.input[2] - 1]))
    }
}

/// `α_K` for every word `K` of length `top` whose class is nonzero.
pub fn alpha_coefficients(wgf: &WgfData) -> Vec<(Vec<usize>, Scalar)> {
    wgf.alpha
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| (crate::braiding::index_word(wgf.n, wgf.top, k), a.clone()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClosedFormError {
    #[error("the solution is degenerate, so the path map a ↦ a_N is not invertible")]
    Degenerate,
}

/// The orbit `a_0 = a, a_k = f_{j_k}(a_{k-1})` along the volume monomial,
/// together with the index word `g_{a_{k-1}}(j_k)` and `Π q_{a_{k-1}, j_k}`.
fn walk(sol: &SetSolution, q: &Cocycle, volume: &[usize], a: usize) -> (usize, Vec<usize>, Scalar) {
    let mut cur = a;
    let mut word = Vec::with_capacity(volume.len());
    let mut weight = Scalar::one();
    for &j in volume {
        word.push(sol.g[cur][j]);
        weight *= &q.get(cur, j);
        cur = sol.f[j][cur];
    }
    (cur, word, weight)
}

/// `r(D, t_a^b)` as an `n × n` table, from the path formula.
pub fn closed_form_rd(sol: &SetSolution, q: &Cocycle, wgf: &WgfData) -> Vec<Vec<Scalar>> {
    let n = sol.n;
    let mut m = vec![vec![Scalar::zero(); n]; n];
    for (a, row) in m.iter_mut().enumerate() {
        let (end, word, weight) = walk(sol, q, &wgf.volume, a);
        row[end] = wgf.alpha_of(&word) * &weight;
    }
    m
}

/// `𝔍` on generators from the commutation `r(D,t_a^{a_N}) D t_{a_N}^b =
/// r(D, t_{b_0}^b) t_a^{b_0} D`. Entry `i*n + j` holds `𝔍(t_i^j)`, or
/// `None` when `r(D, t_a^{a_N})` vanishes for the unique `a` with `a_N = i`.
pub fn closed_form_j(
    sol: &SetSolution,
    q: &Cocycle,
    wgf: &WgfData,
) -> Result<Vec<Option<NCPoly>>, ClosedFormError> {
    let n = sol.n;
    let rd = closed_form_rd(sol, q, wgf);
    let ends: Vec<usize> = (0..n).map(|a| walk(sol, q, &wgf.volume, a).0).collect();
    if !is_bijection(&ends) {
        return Err(ClosedFormError::Degenerate);
    }
    let mut start = vec![0; n];
    for (a, &e) in ends.iter().enumerate() {
        start[e] = a;
    }
    let mut out = vec![None; n * n];
    for a in 0..n {
        let an = ends[a];
        let Ok(lead) = rd[a][an].inverse() else {
            continue;
        };
        for b in 0..n {
            let b0 = start[b];
            let coeff = &lead * &rd[b0][b];
            out[an * n + b] = Some(NCPoly::monomial(Word::from_gens(n, &[Gen::new(a, b0)]), coeff));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_element() -> SetSolution {
        SetSolution::new(2, |i, j| if i == j { (1 - i, 1 - j) } else { (i, j) }).unwrap()
    }

    #[test]
    fn two_element_solution_is_involutive() {
        let v = two_element().validate().unwrap();
        assert!(v.involutive);
        assert!(v.nondegenerate);
    }

    #[test]
    fn transposition_rack() {
        let r = Rack::transpositions(3);
        r.validate().unwrap();
        // (12) ▷ (13) = (23)
        assert_eq!(r.op[0][1], 2);
        assert_eq!(r.op[1][1], 1);
        Cocycle::Constant(Scalar::from_int(-1)).validate_rack(&r).unwrap();
        assert_eq!(Rack::transpositions(4).n, 6);
        Rack::transpositions(4).validate().unwrap();
    }

    #[test]
    fn broken_rack_is_reported() {
        let r = Rack::new(vec![vec![1, 0, 2], vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert!(matches!(r.validate(), Err(SetError::SelfDistributivity(_))));
        let not_bij = Rack::new(vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(not_bij.validate(), Err(SetError::NotBijective(0)));
    }

    #[test]
    fn non_braided_map_is_reported() {
        let s = SetSolution::new(3, |i, j| ((i + 1) % 3, j)).unwrap();
        assert!(matches!(s.validate(), Err(SetError::Braid(_))));
    }

    #[test]
    fn degenerate_solution_flag() {
        let s = SetSolution::new(2, |_, _| (0, 0)).unwrap();
        let v = s.validate().unwrap();
        assert!(!v.nondegenerate);
    }

    #[test]
    fn zero_cocycle_rejected() {
        let r = Rack::transpositions(3);
        let q = Cocycle::Table(vec![vec![Scalar::one(); 3], vec![Scalar::one(); 3], vec![Scalar::zero(); 3]]);
        assert!(matches!(q.validate_rack(&r), Err(SetError::ZeroCocycle(2, 0))));
    }
}
