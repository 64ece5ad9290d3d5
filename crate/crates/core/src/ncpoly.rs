//! Noncommutative polynomials in the comatrix generators `t_i^j`.
//!
//! A generator `t_i^j` of an `n`-dimensional comatrix coalgebra is encoded as
//! the letter `i*n + j` (0-based), so the row-major order `t_1^1 < t_1^2 < …`
//! is the numeric order of letters. Words compare by degree first and then
//! lexicographically, which is an admissible order on the free monoid.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::scalars::{Scalar, ScalarError};

pub type Letter = u8;

/// Largest supported `n`: letters must fit in a byte.
pub const MAX_DIM: usize = 15;

/// A generator `t_row^col` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub row: usize,
    pub col: usize,
}

impl Gen {
    pub fn new(row: usize, col: usize) -> Self {
        Gen { row, col }
    }

    pub fn letter(self, n: usize) -> Letter {
        debug_assert!(self.row < n && self.col < n);
        (self.row * n + self.col) as Letter
    }

    pub fn from_letter(l: Letter, n: usize) -> Self {
        Gen {
            row: l as usize / n,
            col: l as usize % n,
        }
    }
}

/// A monomial in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Letter; 12]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_slice(letters: &[Letter]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn from_gens(n: usize, gens: &[Gen]) -> Self {
        Word(gens.iter().map(|g| g.letter(n)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    /// `left · self · right`.
    pub fn sandwich(left: &[Letter], mid: &[Letter], right: &[Letter]) -> Word {
        let mut w = SmallVec::with_capacity(left.len() + mid.len() + right.len());
        w.extend_from_slice(left);
        w.extend_from_slice(mid);
        w.extend_from_slice(right);
        Word(w)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0.as_slice())
    }
}

/// Degree-lexicographic comparison.
pub fn order_compare(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        order_compare(&self.0, &other.0)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite linear combination of words with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c}){:?}", w.0.as_slice()))
            .collect();
        write!(f, "NCPoly[{}]", parts.join(" + "))
    }
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn generator(n: usize, row: usize, col: usize) -> Self {
        Self::monomial(Word::from_gens(n, &[Gen::new(row, col)]), Scalar::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c·w`, dropping the term if the coefficient cancels.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(w, _)| w.len())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            None => true,
            Some(d) => lens.all(|l| l == d),
        }
    }

    pub fn scale(&self, s: &Scalar) -> NCPoly {
        if s.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> NCPoly {
        match self.leading() {
            None => NCPoly::zero(),
            Some((_, c)) => self.scale(&c.inverse().expect("leading coefficient is nonzero")),
        }
    }

    /// Applies an algebra map given on letters.
    pub fn substitute(&self, image: impl Fn(Letter) -> NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut acc = NCPoly::constant(c.clone());
            for &l in w.letters() {
                acc = &acc * &image(l);
            }
            out = &out + &acc;
        }
        out
    }

    /// Maps every word through `f`, summing coefficients.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    pub fn conductor(&self) -> u32 {
        self.terms
            .values()
            .fold(1, |m, c| num_integer::Integer::lcm(&m, &c.conductor()))
    }
}

impl<'a> Add<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &'a NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &'a NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &'a NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_poly_op {
    ($tr:ident, $f:ident) => {
        impl $tr<NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $f(self, rhs: NCPoly) -> NCPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_poly_op!(Add, add);
owned_poly_op!(Sub, sub);
owned_poly_op!(Mul, mul);

/// An element of `A ⊗ A`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorPoly {
    pub fn add_term(&mut self, l: Word, r: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        let e = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `Δ(t_{a_1}^{b_1} ⋯ t_{a_m}^{b_m}) = Σ_K t_{a_1}^{k_1} ⋯ ⊗ t_{k_1}^{b_1} ⋯`,
/// as a list of `(left, right)` word pairs with coefficient 1.
pub fn coproduct_word(w: &Word, n: usize) -> Vec<(Word, Word)> {
    let mut acc = vec![(Word::empty(), Word::empty())];
    for &l in w.letters() {
        let g = Gen::from_letter(l, n);
        let mut next = Vec::with_capacity(acc.len() * n);
        for (left, right) in &acc {
            for k in 0..n {
                let mut a = left.clone();
                a.0.push(Gen::new(g.row, k).letter(n));
                let mut b = right.clone();
                b.0.push(Gen::new(k, g.col).letter(n));
                next.push((a, b));
            }
        }
        acc = next;
    }
    acc
}

pub fn coproduct(p: &NCPoly, n: usize) -> TensorPoly {
    let mut out = TensorPoly::default();
    for (w, c) in p.terms() {
        for (l, r) in coproduct_word(w, n) {
            out.add_term(l, r, c.clone());
        }
    }
    out
}

/// `ε(t_i^j) = δ_{ij}`, extended multiplicatively.
pub fn counit_word(w: &Word, n: usize) -> bool {
    w.letters().iter().all(|&l| {
        let g = Gen::from_letter(l, n);
        g.row == g.col
    })
}

pub fn counit(p: &NCPoly, n: usize) -> Scalar {
    let mut acc = Scalar::zero();
    for (w, c) in p.terms() {
        if counit_word(w, n) {
            acc += c;
        }
    }
    acc
}

/// Human-readable letter names: `a, b, c, …` row-major for `n ≤ 5`,
/// otherwise `t[i,j]` (1-based).
pub fn letter_name(l: Letter, n: usize) -> String {
    if n <= 5 {
        ((b'a' + l) as char).to_string()
    } else {
        let g = Gen::from_letter(l, n);
        format!("t[{},{}]", g.row + 1, g.col + 1)
    }
}

/// Formats a word with exponents for repeated letters, e.g. `a^2bd`.
pub fn format_word(w: &Word, n: usize) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let ls = w.letters();
    let mut i = 0;
    while i < ls.len() {
        let mut j = i;
        while j < ls.len() && ls[j] == ls[i] {
            j += 1;
        }
        out.push_str(&letter_name(ls[i], n));
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

/// Formats a polynomial, largest words first.
pub fn format_poly(p: &NCPoly, n: usize) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (w, c)) in p.terms().rev().enumerate() {
        let (neg, body) = format_term(w, c, n);
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn format_term(w: &Word, c: &Scalar, n: usize) -> (bool, String) {
    let word = if w.is_empty() {
        String::new()
    } else {
        format_word(w, n)
    };
    if let Some(q) = c.as_rational() {
        let neg = num_traits::Signed::is_negative(q);
        let abs = num_traits::Signed::abs(q);
        let coef = if num_traits::One::is_one(&abs) && !word.is_empty() {
            String::new()
        } else if abs.is_integer() {
            abs.numer().to_string()
        } else {
            format!("{}/{}", abs.numer(), abs.denom())
        };
        (neg, format!("{coef}{word}"))
    } else {
        (false, format!("({c}){word}"))
    }
}

/// A displayable wrapper carrying the dimension needed for letter names.
pub struct Pretty<'a>(pub &'a NCPoly, pub usize);

impl fmt::Display for Pretty<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self.0, self.1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("cannot parse {input:?} at offset {offset}: {reason}")]
    Syntax {
        input: String,
        offset: usize,
        reason: String,
    },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

struct Cursor<'s> {
    src: &'s str,
    b: &'s [u8],
    pos: usize,
}

impl<'s> Cursor<'s> {
    fn new(src: &'s str) -> Self {
        Cursor {
            src,
            b: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, reason: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            input: self.src.to_string(),
            offset: self.pos,
            reason: reason.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.b.len() && self.b[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.b.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.b.len() && self.b[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        self.src[start..self.pos]
            .parse::<usize>()
            .ok()
            .filter(|&v| v <= 1 << 16)
            .ok_or_else(|| self.err("number out of range"))
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        if self.eat(b'^') {
            self.number()
        } else {
            Ok(1)
        }
    }
}

fn parse_gen(cur: &mut Cursor<'_>, n: usize) -> Result<Option<Letter>, ParseError> {
    match cur.peek() {
        Some(b't') if cur.b.get(cur.pos + 1) == Some(&b'[') => {
            cur.pos += 2;
            let i = cur.number()?;
            if !cur.eat(b',') {
                return Err(cur.err("expected ','"));
            }
            let j = cur.number()?;
            if !cur.eat(b']') {
                return Err(cur.err("expected ']'"));
            }
            if i == 0 || j == 0 || i > n || j > n {
                return Err(cur.err(format!("generator t[{i},{j}] out of range for n = {n}")));
            }
            Ok(Some(Gen::new(i - 1, j - 1).letter(n)))
        }
        Some(c) if n <= 5 && c.is_ascii_lowercase() && ((c - b'a') as usize) < n * n => {
            cur.pos += 1;
            Ok(Some(c - b'a'))
        }
        _ => Ok(None),
    }
}

/// Parses a polynomial in the generators of an `n × n` comatrix.
///
/// Terms are an optional coefficient (an integer, a fraction, or a
/// parenthesized scalar literal such as `(1 - z3^2)`) followed by a word of
/// letters (`a`–`y` for `n ≤ 5`) or `t[i,j]`, each with an optional `^k`.
pub fn parse_poly(s: &str, n: usize) -> Result<NCPoly, ParseError> {
    let mut cur = Cursor::new(s);
    let mut out = NCPoly::zero();
    let mut first = true;
    loop {
        let neg = match cur.peek() {
            None if first => return Err(cur.err("empty polynomial")),
            None => break,
            Some(b'+') if !first => {
                cur.pos += 1;
                false
            }
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            Some(_) if !first => return Err(cur.err("expected '+' or '-'")),
            Some(_) => false,
        };
        first = false;
        let mut coef = Scalar::one();
        let mut saw_coef = false;
        match cur.peek() {
            Some(b'(') => {
                cur.pos += 1;
                let start = cur.pos;
                let end = s[start..]
                    .find(')')
                    .map(|e| start + e)
                    .ok_or_else(|| cur.err("unclosed '('"))?;
                coef = s[start..end].parse()?;
                cur.pos = end + 1;
                saw_coef = true;
            }
            Some(c) if c.is_ascii_digit() => {
                let num = cur.number()? as i64;
                let mut den = 1;
                if cur.eat(b'/') {
                    den = cur.number()? as i64;
                    if den == 0 {
                        return Err(cur.err("zero denominator"));
                    }
                }
                coef = Scalar::from_ratio(num, den);
                saw_coef = true;
            }
            _ => {}
        }
        if saw_coef {
            cur.eat(b'*');
        }
        let mut word = Word::empty();
        while let Some(l) = parse_gen(&mut cur, n)? {
            let e = cur.exponent()?;
            for _ in 0..e {
                word.0.push(l);
            }
            cur.eat(b'*');
        }
        if !saw_coef && word.is_empty() {
            return Err(cur.err("expected a coefficient or a generator"));
        }
        if neg {
            coef = -coef;
        }
        out.add_term(word, coef);
    }
    Ok(out)
}

/// Parses a word in the basis vectors `x_1, …, x_n` of `V`, returning
/// 0-based indices.
///
/// Accepted forms: `x1x2x3x2`, `x1 x2 x3 x2`, `1,2,3,2`, and for `n ≤ 3`
/// the letters `x, y, z` with exponents (`x^2yxy^2`). `x1^2` also works.
pub fn parse_monomial(s: &str, n: usize) -> Result<Vec<usize>, ParseError> {
    let mut cur = Cursor::new(s);
    let mut out = Vec::new();
    let check = |cur: &Cursor<'_>, i: usize| {
        if i == 0 || i > n {
            Err(cur.err(format!("index {i} out of range 1..={n}")))
        } else {
            Ok(i - 1)
        }
    };
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        loop {
            let i = cur.number()?;
            out.push(check(&cur, i)?);
            match cur.peek() {
                None => break,
                Some(b',') => cur.pos += 1,
                Some(c) if c.is_ascii_digit() => {}
                Some(_) => return Err(cur.err("expected ',' or a digit")),
            }
        }
        return Ok(out);
    }
    while let Some(c) = cur.peek() {
        cur.pos += 1;
        let idx = match c {
            b'x' if cur.b.get(cur.pos).is_some_and(u8::is_ascii_digit) => {
                let i = cur.number()?;
                check(&cur, i)?
            }
            b'x' | b'y' | b'z' if n <= 3 => check(&cur, (c - b'x') as usize + 1)?,
            _ => {
                cur.pos -= 1;
                return Err(cur.err(format!("unexpected {:?}", c as char)));
            }
        };
        let e = cur.exponent()?;
        out.extend(std::iter::repeat_n(idx, e));
        cur.eat(b'*');
    }
    if out.is_empty() {
        return Err(cur.err("empty monomial"));
    }
    Ok(out)
}

/// Formats a word in `x_1, …, x_n` as `x1x2…` (1-based).
pub fn format_monomial(w: &[usize]) -> String {
    w.iter().map(|i| format!("x{}", i + 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NCPoly {
        parse_poly(s, 2).unwrap()
    }

    #[test]
    fn order_examples() {
        let n = 2;
        let t11 = Word::from_gens(n, &[Gen::new(0, 0)]);
        let t11t22 = Word::from_gens(n, &[Gen::new(0, 0), Gen::new(1, 1)]);
        let t12t11 = Word::from_gens(n, &[Gen::new(0, 1), Gen::new(0, 0)]);
        let t21t11 = Word::from_gens(n, &[Gen::new(1, 0), Gen::new(0, 0)]);
        assert!(Word::empty() < t11);
        assert!(t11t22 < t12t11);
        assert!(t11 < t21t11);
    }

    #[test]
    fn free_product() {
        let lhs = &p("a + b") * &p("a - b");
        assert_eq!(lhs, p("a^2 - ab + ba - b^2"));
        assert_eq!(&lhs * &NCPoly::one(), lhs);
    }

    #[test]
    fn format_round_trip() {
        for s in ["a^2 - b^2", "ad - (z4^1)bc", "-3/2abba + 1", "0 + 2", "(1/2 - 1/2*z3^1)a^3"] {
            let q = p(s);
            let printed = format_poly(&q, 2);
            assert_eq!(p(&printed), q, "{s} -> {printed}");
        }
        assert_eq!(format_poly(&p("b^2a + a"), 2), "b^2a + a");
    }

    #[test]
    fn big_n_uses_bracket_names() {
        let q = parse_poly("t[1,2]t[6,6]^2 - 3t[1,1]", 6).unwrap();
        assert_eq!(format_poly(&q, 6), "t[1,2]t[6,6]^2 - 3t[1,1]");
    }

    #[test]
    fn poly_parse_errors() {
        for bad in ["", "a +", "q", "(1", "1/0", "t[3,1]", "a b c d e"] {
            assert!(parse_poly(bad, 2).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn coproduct_of_generator() {
        let d = coproduct(&p("b"), 2);
        let mut expected = TensorPoly::default();
        for k in 0..2 {
            expected.add_term(
                Word::from_gens(2, &[Gen::new(0, k)]),
                Word::from_gens(2, &[Gen::new(k, 1)]),
                Scalar::one(),
            );
        }
        assert_eq!(d, expected);
    }

    #[test]
    fn counit_values() {
        assert_eq!(counit(&p("a^2 - b^2"), 2), Scalar::one());
        assert_eq!(counit(&p("ad - bc"), 2), Scalar::one());
        assert_eq!(counit(&p("b"), 2), Scalar::zero());
    }

    #[test]
    fn monomial_forms() {
        let expected = vec![0, 1, 2, 1];
        assert_eq!(parse_monomial("x1x2x3x2", 3).unwrap(), expected);
        assert_eq!(parse_monomial("x1 x2 x3 x2", 3).unwrap(), expected);
        assert_eq!(parse_monomial("1,2,3,2", 3).unwrap(), expected);
        assert_eq!(parse_monomial("x^2yxy^2", 2).unwrap(), vec![0, 0, 1, 0, 1, 1]);
        assert!(parse_monomial("x4", 3).is_err());
        assert!(parse_monomial("", 3).is_err());
        assert_eq!(format_monomial(&expected), "x1x2x3x2");
    }
}
