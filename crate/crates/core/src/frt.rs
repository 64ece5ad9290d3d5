//! The FRT bialgebra `A(c)`: its quadratic relations, the
//! coquasitriangular form `r`, and the Hayashi automorphism attached to a
//! group-like element.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::braiding::BraidingTensor;
use crate::exactla::{invert, LinAlgError, Matrix};
use crate::gbasis::{in_linear_span, linear_echelon};
use crate::ncpoly::{coproduct_word, counit_word, Gen, Letter, NCPoly, Word};
use crate::scalars::Scalar;

/// `A(c)` presented by generators `t_i^j` and degree-2 relations.
#[derive(Debug, Clone)]
pub struct FrtPresentation {
    pub n: usize,
    pub braiding: BraidingTensor,
    /// Linearly independent, monic in their leading words, sorted.
    pub relations: Vec<NCPoly>,
}

fn word2(n: usize, a: (usize, usize), b: (usize, usize)) -> Word {
    Word::from_gens(n, &[Gen::new(a.0, a.1), Gen::new(b.0, b.1)])
}

/// `Σ_{k,l} c_{ij}^{kl} t_k^r t_l^s − Σ_{k,l} t_i^k t_j^l c_{kl}^{rs}`.
pub fn frt_candidate(c: &BraidingTensor, i: usize, j: usize, r: usize, s: usize) -> NCPoly {
    let n = c.dim();
    let mut p = NCPoly::zero();
    for (k, l, v) in c.image(i, j) {
        p.add_term(word2(n, (*k, r), (*l, s)), v.clone());
    }
    for (k, l, v) in c.preimage(r, s) {
        p.add_term(word2(n, (i, *k), (j, *l)), -v);
    }
    p
}

pub fn frt_relations(c: &BraidingTensor) -> FrtPresentation {
    let n = c.dim();
    let mut cands = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                for s in 0..n {
                    let p = frt_candidate(c, i, j, r, s);
                    if !p.is_zero() {
                        cands.push(p);
                    }
                }
            }
        }
    }
    FrtPresentation {
        n,
        braiding: c.clone(),
        relations: linear_echelon(&cands),
    }
}

impl FrtPresentation {
    /// `Σ r(t_j^k, t_i^l) t_k^r t_l^s − Σ t_i^l t_j^k r(t_k^r, t_l^s)` lies in
    /// the relation span for all `(i, j, r, s)`, with `r` evaluated from its
    /// values on generators.
    pub fn check_cqt3(&self) -> bool {
        let n = self.n;
        let rf = RForm::new(&self.braiding);
        let t = |a: usize, b: usize| Word::from_gens(n, &[Gen::new(a, b)]);
        for i in 0..n {
            for j in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        let mut p = NCPoly::zero();
                        for k in 0..n {
                            for l in 0..n {
                                let x = rf.eval(&t(j, k), &t(i, l));
                                p.add_term(word2(n, (k, r), (l, s)), x);
                                let y = rf.eval(&t(k, r), &t(l, s));
                                p.add_term(word2(n, (i, l), (j, k)), -y);
                            }
                        }
                        if !in_linear_span(&p, &self.relations) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// The bilinear form `r` determined by `r(t_i^k, t_j^l) = c_{ji}^{kl}`.
pub struct RForm<'a> {
    c: &'a BraidingTensor,
    memo: Mutex<HashMap<(Word, Word), Scalar>>,
}

impl<'a> RForm<'a> {
    pub fn new(c: &'a BraidingTensor) -> Self {
        RForm {
            c,
            memo: Mutex::new(HashMap::new()),
        }
    }

    fn n(&self) -> usize {
        self.c.dim()
    }

    /// `r(u, v)` on words.
    pub fn eval(&self, u: &Word, v: &Word) -> Scalar {
        let n = self.n();
        if u.is_empty() {
            return bool_scalar(counit_word(v, n));
        }
        if v.is_empty() {
            return bool_scalar(counit_word(u, n));
        }
        if u.len() == 1 && v.len() == 1 {
            let a = Gen::from_letter(u.letters()[0], n);
            let b = Gen::from_letter(v.letters()[0], n);
            // r(t_i^k, t_j^l) = c_{ji}^{kl}
            return self.c.coeff(b.row, a.row, a.col, b.col).clone();
        }
        let key = (u.clone(), v.clone());
        if let Some(x) = self.memo.lock().unwrap().get(&key) {
            return x.clone();
        }
        let mut acc = Scalar::zero();
        if v.len() >= 2 {
            // r(a, bc) = r(a_(2), b) r(a_(1), c)
            let v1 = Word::from_slice(&v.letters()[..1]);
            let rest = Word::from_slice(&v.letters()[1..]);
            for (a1, a2) in coproduct_word(u, n) {
                let x = self.eval(&a2, &v1);
                if x.is_zero() {
                    continue;
                }
                let y = self.eval(&a1, &rest);
                if !y.is_zero() {
                    acc += &(&x * &y);
                }
            }
        } else {
            // r(ab, t_c^d) = Σ_e r(a, t_c^e) r(b, t_e^d)
            let g = Gen::from_letter(v.letters()[0], n);
            let u1 = Word::from_slice(&u.letters()[..1]);
            let rest = Word::from_slice(&u.letters()[1..]);
            for e in 0..n {
                let x = self.eval(&u1, &Word::from_gens(n, &[Gen::new(g.row, e)]));
                if x.is_zero() {
                    continue;
                }
                let y = self.eval(&rest, &Word::from_gens(n, &[Gen::new(e, g.col)]));
                if !y.is_zero() {
                    acc += &(&x * &y);
                }
            }
        }
        self.memo.lock().unwrap().insert(key, acc.clone());
        acc
    }

    /// Bilinear extension to polynomials.
    pub fn eval_poly(&self, p: &NCPoly, q: &NCPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (u, a) in p.terms() {
            for (v, b) in q.terms() {
                let x = self.eval(u, v);
                if !x.is_zero() {
                    acc += &(&(a * b) * &x);
                }
            }
        }
        acc
    }

    /// The matrix `M_{ia} = r(t_i^a, q)`.
    pub fn left_generator_matrix(&self, q: &NCPoly) -> Matrix {
        let n = self.n();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for a in 0..n {
                let g = NCPoly::generator(n, i, a);
                m.set(i, a, self.eval_poly(&g, q));
            }
        }
        m
    }

    /// The matrix `M_{ab} = r(q, t_a^b)`.
    pub fn right_generator_matrix(&self, q: &NCPoly) -> Matrix {
        let n = self.n();
        let mut m = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                let g = NCPoly::generator(n, a, b);
                m.set(a, b, self.eval_poly(q, &g));
            }
        }
        m
    }
}

fn bool_scalar(b: bool) -> Scalar {
    if b {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HayashiError {
    #[error("r(t, D) is singular, so r is not convolution-invertible at D")]
    Singular { kernel_witness: Vec<Scalar> },
}

/// The automorphism `𝔍` with `D·a = 𝔍(a)·D`, on the generator span.
#[derive(Debug, Clone)]
pub struct Hayashi {
    pub n: usize,
    /// `R_{ia} = r(t_i^a, D)`.
    pub r: Matrix,
    pub r_inv: Matrix,
    images: Vec<NCPoly>,
}

impl Hayashi {
    /// `𝔍(t_i^j) = Σ_{a,b} R_{ia} (R⁻¹)_{bj} t_a^b`.
    pub fn new(rform: &RForm<'_>, d: &NCPoly) -> Result<Self, HayashiError> {
        let n = rform.n();
        let r = rform.left_generator_matrix(d);
        let r_inv = invert(&r).map_err(|e| match e {
            LinAlgError::Singular { kernel_witness } => HayashiError::Singular { kernel_witness },
            other => unreachable!("square matrix: {other}"),
        })?;
        let mut images = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut p = NCPoly::zero();
                for a in 0..n {
                    if r.get(i, a).is_zero() {
                        continue;
                    }
                    for b in 0..n {
                        let v = r.get(i, a) * r_inv.get(b, j);
                        p.add_term(Word::from_gens(n, &[Gen::new(a, b)]), v);
                    }
                }
                images.push(p);
            }
        }
        Ok(Hayashi {
            n,
            r,
            r_inv,
            images,
        })
    }

    pub fn image_of(&self, i: usize, j: usize) -> &NCPoly {
        &self.images[i * self.n + j]
    }

    pub fn image_of_letter(&self, l: Letter) -> &NCPoly {
        &self.images[l as usize]
    }

    /// Applies `𝔍` as an algebra map.
    pub fn apply(&self, p: &NCPoly) -> NCPoly {
        p.substitute(|l| self.images[l as usize].clone())
    }

    /// `n² × n²` matrix: column `t_i^j` holds the coordinates of `𝔍(t_i^j)`.
    pub fn matrix(&self) -> Matrix {
        let n2 = self.n * self.n;
        let mut m = Matrix::zeros(n2, n2);
        for (col, p) in self.images.iter().enumerate() {
            for (w, c) in p.terms() {
                m.set(w.letters()[0] as usize, col, c.clone());
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.matrix() == Matrix::identity(self.n * self.n)
    }

    /// `Δ∘𝔍 = (𝔍⊗𝔍)∘Δ` on every generator.
    pub fn is_coalgebra_map(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let lhs = crate::ncpoly::coproduct(self.image_of(i, j), n);
                let mut rhs = crate::ncpoly::TensorPoly::default();
                for k in 0..n {
                    for (u, a) in self.image_of(i, k).terms() {
                        for (v, b) in self.image_of(k, j).terms() {
                            rhs.add_term(u.clone(), v.clone(), a * b);
                        }
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::parse_poly;

    fn span_eq(a: &[NCPoly], b: &[NCPoly]) -> bool {
        a.iter().all(|p| in_linear_span(p, b)) && b.iter().all(|p| in_linear_span(p, a))
    }

    #[test]
    fn flip_gives_commutative_matrix_coordinates() {
        let pres = frt_relations(&BraidingTensor::flip(2));
        let expected: Vec<NCPoly> = ["ba - ab", "ca - ac", "da - ad", "cb - bc", "db - bd", "dc - cd"]
            .iter()
            .map(|s| parse_poly(s, 2).unwrap())
            .collect();
        assert!(span_eq(&pres.relations, &expected));
        assert!(pres.check_cqt3());
    }

    #[test]
    fn diagonal_relations_are_q_commutations() {
        let q = vec![
            vec![Scalar::from_int(2), Scalar::from_int(3)],
            vec![Scalar::from_int(5), Scalar::from_int(7)],
        ];
        let c = BraidingTensor::diagonal(&q).unwrap();
        let pres = frt_relations(&c);
        // q_{kl} t_i^k t_j^l − q_{ij} t_j^l t_i^k
        let mut expected = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let mut p = NCPoly::zero();
                        p.add_term(word2(2, (i, k), (j, l)), q[k][l].clone());
                        p.add_term(word2(2, (j, l), (i, k)), -&q[i][j]);
                        if !p.is_zero() {
                            expected.push(p);
                        }
                    }
                }
            }
        }
        assert!(span_eq(&pres.relations, &expected));
    }

    #[test]
    fn r_on_generators_and_unit() {
        let c = BraidingTensor::flip(2).negated();
        let r = RForm::new(&c);
        let t = |i, j| Word::from_gens(2, &[Gen::new(i, j)]);
        for (i, k, j, l) in [(0, 0, 0, 0), (0, 1, 1, 0), (1, 0, 0, 1)] {
            assert_eq!(r.eval(&t(i, k), &t(j, l)), c.coeff(j, i, k, l).clone());
        }
        assert!(r.eval(&Word::empty(), &t(0, 1)).is_zero());
        assert!(r.eval(&Word::empty(), &t(0, 0)).is_one());
    }

    #[test]
    fn hayashi_of_identity_determinant_is_identity() {
        // For −flip and D = ad − bc, D is central.
        let c = BraidingTensor::flip(2).negated();
        let r = RForm::new(&c);
        let d = parse_poly("ad - bc", 2).unwrap();
        let j = Hayashi::new(&r, &d).unwrap();
        assert!(j.is_identity());
        assert!(j.is_coalgebra_map());
    }
}
