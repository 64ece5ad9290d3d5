//! Degree-truncated Gröbner bases for homogeneous two-sided ideals of the
//! free algebra, under the degree-lexicographic order of [`crate::ncpoly`].
//!
//! Completion proceeds one degree at a time. At degree `k` the only
//! obstructions are proper overlaps of two leading words with combined
//! length `k`; since all generators are homogeneous, nothing produced later
//! can change the degree-`≤ k` part of the basis. A basis completed through
//! degree `d` therefore decides membership for every homogeneous element of
//! degree `≤ d`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use sha2::{Digest, Sha256};

use crate::ncpoly::{format_poly, Letter, NCPoly, Word};
use crate::scalars::Scalar;

/// Default work cap, counted in monomials produced during reductions.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GbError {
    #[error("relation #{index} is not homogeneous")]
    NotHomogeneous { index: usize },
}

/// A monic basis element `lead + Σ tail`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbElement {
    pub lead: Word,
    pub tail: Vec<(Word, Scalar)>,
}

impl GbElement {
    pub fn to_poly(&self) -> NCPoly {
        let mut p = NCPoly::monomial(self.lead.clone(), Scalar::one());
        for (w, c) in &self.tail {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    fn from_map(mut m: BTreeMap<Word, Scalar>) -> Self {
        let (lead, lc) = m.pop_last().expect("nonzero polynomial");
        let inv = lc.inverse().expect("leading coefficient is nonzero");
        let tail = m.into_iter().rev().map(|(w, c)| (w, &c * &inv)).collect();
        GbElement { lead, tail }
    }
}

/// Outcome of an ideal-membership query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Member,
    NotMember,
    /// The normal form is nonzero but the basis is not complete through the
    /// element's degree.
    Inconclusive,
}

#[derive(Clone)]
pub struct TruncatedGB {
    relations: Vec<NCPoly>,
    elements: Vec<GbElement>,
    index: HashMap<Vec<Letter>, usize>,
    lead_lengths: Vec<usize>,
    complete_through: usize,
    budget: u64,
    work: u64,
    exhausted: bool,
    fingerprint: String,
}

impl fmt::Debug for TruncatedGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedGB")
            .field("elements", &self.elements.len())
            .field("complete_through", &self.complete_through)
            .field("work", &self.work)
            .field("exhausted", &self.exhausted)
            .finish()
    }
}

fn add_to(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    use std::collections::btree_map::Entry;
    match map.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl TruncatedGB {
    /// Completes `relations` through degree `d`, stopping early if more than
    /// `budget` monomials are produced.
    pub fn complete(relations: &[NCPoly], d: usize, budget: u64) -> Result<Self, GbError> {
        for (i, r) in relations.iter().enumerate() {
            if !r.is_homogeneous() {
                return Err(GbError::NotHomogeneous { index: i + 1 });
            }
        }
        let mut hasher = Sha256::new();
        for r in relations {
            for (w, c) in r.terms() {
                hasher.update(w.letters());
                hasher.update([0xff]);
                hasher.update(c.to_string().as_bytes());
                hasher.update([0xfe]);
            }
            hasher.update([0xfd]);
        }
        let mut gb = TruncatedGB {
            relations: relations.iter().filter(|r| !r.is_zero()).cloned().collect(),
            elements: Vec::new(),
            index: HashMap::new(),
            lead_lengths: Vec::new(),
            complete_through: 0,
            budget,
            work: 0,
            exhausted: false,
            fingerprint: hex::encode(hasher.finalize()),
        };
        gb.extend_to(d);
        Ok(gb)
    }

    /// Continues completion up to degree `d` (no-op if already there or if
    /// the budget has run out).
    pub fn extend_to(&mut self, d: usize) {
        while self.complete_through < d && !self.exhausted {
            let k = self.complete_through + 1;
            if self.complete_degree(k) {
                self.complete_through = k;
            } else {
                self.exhausted = true;
            }
        }
    }

    fn complete_degree(&mut self, k: usize) -> bool {
        let mut pending: Vec<BTreeMap<Word, Scalar>> = self
            .relations
            .iter()
            .filter(|r| r.degree() == Some(k))
            .map(|r| r.clone().into_terms())
            .collect();
        pending.extend(self.overlaps(k));
        let first_new = self.elements.len();
        for s in pending {
            let r = self.reduce_counted(s);
            if self.work > self.budget {
                return false;
            }
            if !r.is_empty() {
                self.push(GbElement::from_map(r));
            }
        }
        // Tails of early degree-k elements may contain later leading words.
        for i in first_new..self.elements.len() {
            let tail: BTreeMap<Word, Scalar> = self.elements[i].tail.iter().cloned().collect();
            let reduced = self.reduce_counted(tail);
            self.elements[i].tail = reduced.into_iter().rev().collect();
        }
        self.work <= self.budget
    }

    fn push(&mut self, e: GbElement) {
        let len = e.lead.len();
        if let Err(pos) = self.lead_lengths.binary_search(&len) {
            self.lead_lengths.insert(pos, len);
        }
        self.index.insert(e.lead.letters().to_vec(), self.elements.len());
        self.elements.push(e);
    }

    /// S-polynomials of all proper overlaps with combined length `k`.
    fn overlaps(&self, k: usize) -> Vec<BTreeMap<Word, Scalar>> {
        let mut by_len: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, e) in self.elements.iter().enumerate() {
            by_len.entry(e.lead.len()).or_default().push(i);
        }
        let mut out = Vec::new();
        for a in &self.elements {
            let la = a.lead.len();
            if la >= k {
                continue;
            }
            for o in 1..la {
                let lb = k + o - la;
                let Some(bs) = by_len.get(&lb) else { continue };
                let suffix = &a.lead.letters()[la - o..];
                for &bi in bs {
                    let b = &self.elements[bi];
                    if &b.lead.letters()[..o] != suffix {
                        continue;
                    }
                    // A·v − u·B where A = u·s and B = s·v; the leading words cancel.
                    let v = &b.lead.letters()[o..];
                    let u = &a.lead.letters()[..la - o];
                    let mut s = BTreeMap::new();
                    for (w, c) in &a.tail {
                        add_to(&mut s, Word::sandwich(&[], w.letters(), v), c.clone());
                    }
                    for (w, c) in &b.tail {
                        add_to(&mut s, Word::sandwich(u, w.letters(), &[]), -c);
                    }
                    out.push(s);
                }
            }
        }
        out
    }

    /// The first leading-word occurrence in `w`: shortest leading words
    /// first, then leftmost position.
    fn find_divisor(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for &l in &self.lead_lengths {
            if l > w.len() {
                break;
            }
            for s in 0..=w.len() - l {
                if let Some(&i) = self.index.get(&w[s..s + l]) {
                    return Some((i, s));
                }
            }
        }
        None
    }

    fn all_divisors(&self, w: &[Letter]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &l in &self.lead_lengths {
            if l > w.len() {
                break;
            }
            for s in 0..=w.len() - l {
                if let Some(&i) = self.index.get(&w[s..s + l]) {
                    out.push((i, s));
                }
            }
        }
        out
    }

    fn rewrite(
        &self,
        work: &mut BTreeMap<Word, Scalar>,
        w: &Word,
        c: &Scalar,
        (gi, s): (usize, usize),
    ) -> u64 {
        let g = &self.elements[gi];
        let u = &w.letters()[..s];
        let v = &w.letters()[s + g.lead.len()..];
        for (t, a) in &g.tail {
            add_to(work, Word::sandwich(u, t.letters(), v), -(c * a));
        }
        g.tail.len() as u64
    }

    fn reduce_counted(&mut self, mut work: BTreeMap<Word, Scalar>) -> BTreeMap<Word, Scalar> {
        let mut result = BTreeMap::new();
        let mut touched = 0;
        while let Some((w, c)) = work.pop_last() {
            match self.find_divisor(w.letters()) {
                Some(hit) => touched += self.rewrite(&mut work, &w, &c, hit),
                None => {
                    result.insert(w, c);
                }
            }
        }
        self.work += touched;
        result
    }

    /// Fully reduced remainder of `p`.
    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        let mut work = p.clone().into_terms();
        let mut result = NCPoly::zero();
        while let Some((w, c)) = work.pop_last() {
            match self.find_divisor(w.letters()) {
                Some(hit) => {
                    self.rewrite(&mut work, &w, &c, hit);
                }
                None => result.add_term(w, c),
            }
        }
        result
    }

    /// Normal form under an arbitrary reduction schedule: `choose(k)` picks
    /// one of `k` options, both for the term to rewrite next and for the
    /// leading-word occurrence used.
    pub fn normal_form_scheduled(
        &self,
        p: &NCPoly,
        choose: &mut dyn FnMut(usize) -> usize,
    ) -> NCPoly {
        let mut work = p.clone().into_terms();
        let mut result = NCPoly::zero();
        while !work.is_empty() {
            let pick = choose(work.len()) % work.len();
            let w = work.keys().nth(pick).cloned().expect("index in range");
            let c = work.remove(&w).expect("present");
            let hits = self.all_divisors(w.letters());
            if hits.is_empty() {
                result.add_term(w, c);
            } else {
                let h = hits[choose(hits.len()) % hits.len()];
                self.rewrite(&mut work, &w, &c, h);
            }
        }
        result
    }

    pub fn membership(&self, p: &NCPoly) -> Membership {
        if self.normal_form(p).is_zero() {
            Membership::Member
        } else if p.degree().unwrap_or(0) <= self.complete_through {
            Membership::NotMember
        } else {
            Membership::Inconclusive
        }
    }

    /// True when `p` reduces to zero (sound at any degree).
    pub fn reduces_to_zero(&self, p: &NCPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Number of standard (irreducible) words of degree `k`, i.e. the
    /// dimension of the degree-`k` part of the quotient, over `letters`
    /// generators. Only meaningful for `k ≤ complete_through`.
    pub fn standard_words(&self, letters: usize, k: usize) -> Vec<Word> {
        let mut cur = vec![Word::empty()];
        for _ in 0..k {
            let mut next = Vec::new();
            for w in &cur {
                for l in 0..letters as Letter {
                    let mut x = w.clone();
                    x.0.push(l);
                    // Only suffixes can introduce new occurrences.
                    let hit = self
                        .lead_lengths
                        .iter()
                        .take_while(|&&len| len <= x.len())
                        .any(|&len| self.index.contains_key(&x.letters()[x.len() - len..]));
                    if !hit {
                        next.push(x);
                    }
                }
            }
            cur = next;
        }
        cur
    }

    pub fn elements(&self) -> &[GbElement] {
        &self.elements
    }

    pub fn complete_through(&self) -> usize {
        self.complete_through
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn work(&self) -> u64 {
        self.work
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    /// Text dump, one element per line.
    pub fn dump(&self, n: usize) -> String {
        let mut out = format!(
            "# complete through degree {}; {} elements; fingerprint {}\n",
            self.complete_through,
            self.elements.len(),
            self.fingerprint
        );
        for e in &self.elements {
            out.push_str(&format_poly(&e.to_poly(), n));
            out.push('\n');
        }
        out
    }
}

/// Reduced echelon basis of the linear span of `polys`: each result is monic
/// and its leading word appears in no other result. Sorted by leading word.
pub fn linear_echelon(polys: &[NCPoly]) -> Vec<NCPoly> {
    let mut basis: BTreeMap<Word, NCPoly> = BTreeMap::new();
    for p in polys {
        let r = linear_reduce(p, &basis);
        let Some((lead, _)) = r.leading() else { continue };
        let lead = lead.clone();
        let r = r.monic();
        for q in basis.values_mut() {
            let c = q.coefficient(&lead);
            if !c.is_zero() {
                *q = &*q - &r.scale(&c);
            }
        }
        basis.insert(lead, r);
    }
    basis.into_values().collect()
}

/// Reduces `p` modulo the span of an echelon basis keyed by leading word.
pub fn linear_reduce(p: &NCPoly, basis: &BTreeMap<Word, NCPoly>) -> NCPoly {
    let mut r = p.clone();
    // No basis element contains another's leading word, so one pass suffices.
    for (lead, q) in basis {
        let c = r.coefficient(lead);
        if !c.is_zero() {
            r = &r - &q.scale(&c);
        }
    }
    r
}

/// True when `p` lies in the linear span of `polys`.
pub fn in_linear_span(p: &NCPoly, polys: &[NCPoly]) -> bool {
    let basis: BTreeMap<Word, NCPoly> = linear_echelon(polys)
        .into_iter()
        .map(|q| (q.leading().expect("nonzero").0.clone(), q))
        .collect();
    linear_reduce(p, &basis).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::parse_poly;

    fn p(s: &str) -> NCPoly {
        parse_poly(s, 2).unwrap()
    }

    #[test]
    fn commutative_collapse() {
        let gb = TruncatedGB::complete(&[p("ba - ab")], 4, DEFAULT_BUDGET).unwrap();
        assert!(gb.normal_form(&p("abab - a^2b^2")).is_zero());
        assert_eq!(gb.standard_words(2, 3).len(), 4);
        assert_eq!(gb.complete_through(), 4);
    }

    #[test]
    fn inputs_reduce_to_zero() {
        let rels = [p("a^2 - d^2"), p("ab - cd"), p("b^2 - c^2")];
        let gb = TruncatedGB::complete(&rels, 3, DEFAULT_BUDGET).unwrap();
        for r in &rels {
            assert!(gb.normal_form(r).is_zero());
        }
        assert!(gb.normal_form(&NCPoly::zero()).is_zero());
        assert_eq!(gb.membership(&p("ab")), Membership::NotMember);
        assert_eq!(gb.membership(&p("abab")), Membership::Inconclusive);
    }

    #[test]
    fn inhomogeneous_rejected() {
        assert_eq!(
            TruncatedGB::complete(&[p("a^2 - b")], 3, DEFAULT_BUDGET).unwrap_err(),
            GbError::NotHomogeneous { index: 1 }
        );
    }

    #[test]
    fn overlap_is_resolved() {
        // b^2 - ab overlaps itself in b^3.
        let gb = TruncatedGB::complete(&[p("b^2 - ab")], 4, DEFAULT_BUDGET).unwrap();
        let z = p("b^3 - ab^2");
        assert!(gb.normal_form(&z).is_zero());
        assert!(gb.normal_form(&p("bab^2 - ab^3")).is_zero());
    }

    #[test]
    fn tiny_budget_flags_exhaustion() {
        let rels = [p("ba - ab - c^2"), p("ca - ac"), p("db - bd")];
        let gb = TruncatedGB::complete(&rels, 6, 5).unwrap();
        assert!(gb.is_exhausted());
        assert!(gb.complete_through() < 6);
    }
}
