//! Report documents and their JSON, text and LaTeX renderings.
//!
//! Polynomials are stored in the notation accepted by
//! [`crate::ncpoly::parse_poly`], so every string in a report can be read
//! back. Reports carry no paths or timestamps.

use serde::Serialize;

use crate::braiding::{BraidViolation, RigidityWitness};
use crate::frt::FrtPresentation;
use crate::gbasis::Membership;
use crate::ncpoly::{format_monomial, format_poly, letter_name, parse_poly, NCPoly};
use crate::nichols::{format_tensor, GradedNichols, Stop, WgfData};
use crate::qdet::{Automorphism, QDetReport, Residuals, Verdict};
use crate::scalars::Scalar;
use crate::settheoretic::Validation;

pub const SCHEMA_VERSION: u32 = 1;

/// New relations are listed explicitly up to this many per degree.
const MAX_LISTED_RELATIONS: usize = 32;

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub command: String,
    pub input: InputInfo,
    pub options: OptionsInfo,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frt: Option<FrtSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nichols: Option<NicholsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qdet: Option<QDetSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: "qfa".into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: String,
    pub n: usize,
    pub conductor: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct OptionsInfo {
    pub max_degree: usize,
    pub tensor_cap: usize,
    pub budget: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume: Option<String>,
    pub certify_normality: bool,
    pub companion: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub exit_code: i32,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckSection {
    pub braid_equation: bool,
    /// 1-based basis triple where the braid equation fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub braid_witness: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rigid: Option<bool>,
    /// Kernel vector of `c♭`, indexed by `x_a ⊗ x^b` in lexicographic order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rigidity_witness: Option<Vec<String>>,
    pub involutive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set_theoretic: Option<SetSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SetSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub involutive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nondegenerate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CheckSection {
    pub fn new(
        braid: &Result<(), BraidViolation>,
        rigid: Option<&Result<(), RigidityWitness>>,
        involutive: bool,
        set_theoretic: Option<SetSection>,
    ) -> Self {
        CheckSection {
            braid_equation: braid.is_ok(),
            braid_witness: braid.as_ref().err().map(|v| v.input),
            rigid: rigid.map(Result::is_ok),
            rigidity_witness: rigid
                .and_then(|r| r.as_ref().err())
                .map(|w| w.kernel_vector.iter().map(Scalar::to_string).collect()),
            involutive,
            set_theoretic,
        }
    }
}

impl SetSection {
    pub fn new(v: Result<Validation, String>) -> Self {
        match v {
            Ok(v) => SetSection {
                involutive: Some(v.involutive),
                nondegenerate: Some(v.nondegenerate),
                error: None,
            },
            Err(e) => SetSection {
                involutive: None,
                nondegenerate: None,
                error: Some(e),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FrtSection {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
}

impl FrtSection {
    pub fn new(frt: &FrtPresentation) -> Self {
        let n = frt.n;
        FrtSection {
            generators: (0..n * n).map(|l| letter_name(l as u8, n)).collect(),
            relations: frt.relations.iter().map(|r| format_poly(r, n)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeRelations {
    pub degree: usize,
    pub count: usize,
    /// Listed only when there are few.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NicholsSection {
    pub hilbert: Vec<usize>,
    pub computed_through: usize,
    pub stop: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub new_relations: Vec<DegreeRelations>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub top: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub volume: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
}

pub fn stop_description(stop: &Stop) -> String {
    match stop {
        Stop::Vanished { degree } => format!("vanished at degree {degree}"),
        Stop::MaxDegree { max_degree } => format!("degree bound {max_degree} reached"),
        Stop::TensorCap { degree, dim, cap } => {
            format!("tensor cap: degree {degree} needs dimension {dim} > {cap}")
        }
    }
}

impl NicholsSection {
    pub fn new(g: &GradedNichols, wgf: Option<&WgfData>) -> Self {
        let n = g.n;
        let new_relations = (2..=g.max_computed())
            .map(|d| {
                let count = g.new_relation_count(d);
                let relations = (count <= MAX_LISTED_RELATIONS)
                    .then(|| g.new_relations(d).iter().map(|v| format_tensor(v, n, d)).collect());
                DegreeRelations { degree: d, count, relations }
            })
            .filter(|r| r.count > 0)
            .collect();
        let hilbert = g.hilbert();
        NicholsSection {
            computed_through: g.max_computed(),
            stop: stop_description(&g.stop),
            new_relations,
            top: wgf.map(|w| w.top),
            volume: wgf.map(|w| format_monomial(&w.volume)),
            dimension: wgf.map(|_| hilbert.iter().sum()),
            hilbert,
        }
    }

    /// The part of the section that survives without the graded data.
    pub fn from_report(r: &QDetReport) -> Self {
        NicholsSection {
            computed_through: r.hilbert.len() - 1,
            stop: format!("vanished at degree {}", r.wgf.top + 1),
            new_relations: Vec::new(),
            top: Some(r.wgf.top),
            volume: Some(format_monomial(&r.wgf.volume)),
            dimension: Some(r.hilbert.iter().sum()),
            hilbert: r.hilbert.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidualEntry {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidualSection {
    pub verdict: String,
    /// Nonzero normal forms, 1-based positions.
    pub nonzero: Vec<ResidualEntry>,
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn membership_name(m: Membership) -> &'static str {
    match m {
        Membership::Member => "member",
        Membership::NotMember => "not_member",
        Membership::Inconclusive => "inconclusive",
    }
}

impl ResidualSection {
    fn new(r: &Residuals, n: usize) -> Self {
        let mut nonzero = Vec::new();
        for (i, row) in r.entries.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if !p.is_zero() {
                    nonzero.push(ResidualEntry {
                        row: i + 1,
                        col: j + 1,
                        value: format_poly(p, n),
                    });
                }
            }
        }
        ResidualSection {
            verdict: verdict_name(r.verdict).into(),
            nonzero,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RuleEntry {
    pub generator: String,
    /// `𝔍(t)`, so that `D·t = 𝔍(t)·D`.
    pub image: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalitySection {
    pub central: bool,
    pub rules: Vec<RuleEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AntipodeSection {
    pub available: bool,
    /// `S(t_i^j) = numerators[i][j] · D⁻¹`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerators: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroDivisorEntry {
    pub generator: String,
    pub left: bool,
    pub right: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TorusSection {
    pub rank: usize,
    pub d_image: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaEntry {
    pub label: String,
    pub claim: String,
    pub premise: bool,
    pub membership: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationSection {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sl_relations: Option<Vec<String>>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroebnerSection {
    pub degree: usize,
    pub complete_through: usize,
    pub work: u64,
    pub budget: u64,
    pub exhausted: bool,
    pub fingerprint: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct QDetSection {
    pub d: String,
    pub group_like: bool,
    /// `cofactor[i][j] = T_i^j`.
    pub cofactor: Vec<Vec<String>>,
    /// `r(t_i^j, D)`.
    pub r_against_d: Vec<Vec<String>>,
    pub hayashi_is_identity: bool,
    /// `hayashi_cofactor[i][j] = 𝔍(T_i^j)`.
    pub hayashi_cofactor: Vec<Vec<String>>,
    pub cofactor_identity: ResidualSection,
    pub main_hypothesis: ResidualSection,
    pub automorphism: String,
    pub normality: NormalitySection,
    pub antipode: AntipodeSection,
    pub zero_divisors: Vec<ZeroDivisorEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torus: Option<TorusSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagonal_lemma: Option<Vec<LemmaEntry>>,
    pub presentation: PresentationSection,
    pub groebner: GroebnerSection,
}

fn poly_table(t: &[Vec<NCPoly>], n: usize) -> Vec<Vec<String>> {
    t.iter().map(|r| r.iter().map(|p| format_poly(p, n)).collect()).collect()
}

impl QDetSection {
    pub fn new(r: &QDetReport) -> Self {
        let n = r.n;
        let gen = |i: usize, j: usize| letter_name((i * n + j) as u8, n);
        let identity = r.automorphism == Automorphism::Identity;
        let rules = r
            .normality
            .rules
            .iter()
            .map(|rule| RuleEntry {
                generator: gen(rule.row, rule.col),
                image: if identity {
                    gen(rule.row, rule.col)
                } else {
                    format_poly(&rule.image, n)
                },
                certificate: rule.certificate.map(|m| membership_name(m).into()),
            })
            .collect();
        let antipode = match &r.antipode {
            Ok(t) => AntipodeSection {
                available: true,
                numerators: Some(poly_table(t, n)),
                reason: None,
            },
            Err(e) => AntipodeSection {
                available: false,
                numerators: None,
                reason: Some(e.to_string()),
            },
        };
        QDetSection {
            d: format_poly(&r.d, n),
            group_like: r.group_like,
            cofactor: poly_table(&r.t, n),
            r_against_d: r.hayashi.r.to_rows().iter().map(|row| row.iter().map(Scalar::to_string).collect()).collect(),
            hayashi_is_identity: r.hayashi.is_identity(),
            hayashi_cofactor: poly_table(&r.j_of_t, n),
            cofactor_identity: ResidualSection::new(&r.prop_fila, n),
            main_hypothesis: ResidualSection::new(&r.main_hypothesis, n),
            automorphism: match r.automorphism {
                Automorphism::Hayashi => "hayashi".into(),
                Automorphism::Identity => "identity".into(),
            },
            normality: NormalitySection {
                central: r.normality.central,
                rules,
            },
            antipode,
            zero_divisors: r
                .zero_divisors
                .iter()
                .map(|z| ZeroDivisorEntry {
                    generator: gen(z.row, z.col),
                    left: z.left,
                    right: z.right,
                })
                .collect(),
            torus: r.torus.as_ref().map(|t| TorusSection {
                rank: t.rank,
                d_image: format_poly(&t.d_image, n),
            }),
            diagonal_lemma: r.lemma.as_ref().map(|ls| {
                ls.iter()
                    .map(|l| LemmaEntry {
                        label: l.label.clone(),
                        claim: format_poly(&l.claim, n),
                        premise: l.premise,
                        membership: membership_name(l.membership).into(),
                    })
                    .collect()
            }),
            presentation: PresentationSection {
                generators: r.presentation.generators.clone(),
                relations: r.presentation.relations.clone(),
                sl_relations: r.presentation.sl_relations.clone(),
                notes: r.presentation.notes.clone(),
            },
            groebner: GroebnerSection {
                degree: r.gb_degree,
                complete_through: r.gb_complete_through,
                work: r.gb_work,
                budget: r.gb_budget,
                exhausted: r.gb_exhausted,
                fingerprint: r.gb_fingerprint.clone(),
            },
        }
    }
}

pub fn to_json(doc: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("reports serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn sub_sup(i: usize, j: usize) -> String {
    format!("t_{}^{}", i + 1, j + 1)
}

pub fn to_text(doc: &ReportDocument) -> String {
    let mut o = String::new();
    let mut line = |s: String| {
        o.push_str(&s);
        o.push('\n');
    };
    let inp = &doc.input;
    line(format!("{} {} {}", doc.tool.name, doc.tool.version, doc.command));
    if let Some(name) = &inp.name {
        line(format!("input: {name}"));
    }
    line(format!("kind {}, n = {}, field Q(z{})", inp.kind, inp.n, inp.conductor));
    line(format!("sha256 {}", inp.sha256));
    if let Some(c) = &doc.check {
        match c.braid_witness {
            None => line("braid equation: holds".into()),
            Some([a, b, d]) => line(format!("braid equation: fails on x{a} x{b} x{d}")),
        }
        match (c.rigid, &c.rigidity_witness) {
            (Some(true), _) => line("rigidity: holds".into()),
            (Some(false), Some(w)) => line(format!("rigidity: fails, kernel vector of c-flat ({})", w.join(", "))),
            _ => {}
        }
        line(format!("involutive: {}", yes_no(c.involutive)));
        if let Some(s) = &c.set_theoretic {
            match (&s.error, s.involutive, s.nondegenerate) {
                (Some(e), _, _) => line(format!("set-theoretic solution: {e}")),
                (None, Some(i), Some(nd)) => line(format!(
                    "set-theoretic solution: involutive {}, nondegenerate {}",
                    yes_no(i),
                    yes_no(nd)
                )),
                _ => {}
            }
        }
    }
    if let Some(f) = &doc.frt {
        line(format!("FRT relations ({}):", f.relations.len()));
        for r in &f.relations {
            line(format!("  {r} = 0"));
        }
    }
    if let Some(nc) = &doc.nichols {
        let h: Vec<String> = nc.hilbert.iter().map(usize::to_string).collect();
        line(format!("Nichols algebra: h = ({}); {}", h.join(", "), nc.stop));
        for d in &nc.new_relations {
            line(format!("  degree {}: {} new relation(s)", d.degree, d.count));
            for r in d.relations.iter().flatten() {
                line(format!("    {r}"));
            }
        }
        if let (Some(top), Some(vol), Some(dim)) = (nc.top, &nc.volume, nc.dimension) {
            line(format!("  dimension {dim}, top degree {top}, volume {vol}"));
        }
    }
    if let Some(q) = &doc.qdet {
        line(format!("D = {}", q.d));
        line(format!("group-like: {}", yes_no(q.group_like)));
        line("cofactor matrix:".into());
        for (i, row) in q.cofactor.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                line(format!("  T_{}^{} = {p}", i + 1, j + 1));
            }
        }
        if q.hayashi_is_identity {
            line("Hayashi automorphism: identity".into());
        } else {
            line("automorphism on generators (D*t = J(t)*D):".into());
            for r in &q.normality.rules {
                line(format!("  J({}) = {}", r.generator, r.image));
            }
        }
        line(format!("cofactor identity t*T = D*id: {}", q.cofactor_identity.verdict));
        for e in &q.cofactor_identity.nonzero {
            line(format!("  residual ({}, {}): {}", e.row, e.col, e.value));
        }
        line(format!(
            "localization hypothesis J(T)*t = D*id: {} (automorphism: {})",
            q.main_hypothesis.verdict, q.automorphism
        ));
        for e in &q.main_hypothesis.nonzero {
            line(format!("  residual ({}, {}): {}", e.row, e.col, e.value));
        }
        line(format!("D central: {}", yes_no(q.normality.central)));
        for r in q.normality.rules.iter().filter(|r| r.certificate.is_some()) {
            line(format!(
                "  D*{g} - ({})*D: {}",
                r.image,
                r.certificate.as_deref().unwrap_or(""),
                g = r.generator
            ));
        }
        match &q.antipode.numerators {
            Some(t) => {
                line("antipode:".into());
                for (i, row) in t.iter().enumerate() {
                    for (j, p) in row.iter().enumerate() {
                        line(format!("  S({}) = ({p})*D^-1", sub_sup(i, j)));
                    }
                }
            }
            None => line(format!("antipode: {}", q.antipode.reason.as_deref().unwrap_or("unavailable"))),
        }
        for z in &q.zero_divisors {
            line(format!(
                "zero divisor: {} (left {}, right {})",
                z.generator,
                yes_no(z.left),
                yes_no(z.right)
            ));
        }
        if let Some(t) = &q.torus {
            line(format!("H(c) is the group algebra of Z^{} (D maps to {})", t.rank, t.d_image));
        }
        if let Some(ls) = &q.diagonal_lemma {
            line("diagonal lemma:".into());
            for l in ls {
                line(format!(
                    "  {}: {} (premise {})",
                    l.label,
                    l.membership,
                    if l.premise { "satisfied" } else { "not satisfied" }
                ));
            }
        }
        line(format!("H(c) generators: {}", q.presentation.generators.join(", ")));
        line("H(c) relations:".into());
        for r in &q.presentation.relations {
            line(format!("  {r}"));
        }
        if let Some(sl) = &q.presentation.sl_relations {
            line("SL(c) relations:".into());
            for r in sl {
                line(format!("  {r}"));
            }
        }
        for note in &q.presentation.notes {
            line(format!("note: {note}"));
        }
        let g = &q.groebner;
        line(format!(
            "Groebner basis: needed through degree {}, complete through {}, work {} of {}{}",
            g.degree,
            g.complete_through,
            g.work,
            g.budget,
            if g.exhausted { " (budget exhausted)" } else { "" }
        ));
        line(format!("  fingerprint {}", g.fingerprint));
    }
    line(format!("status: {} (exit {})", doc.outcome.status, doc.outcome.exit_code));
    if let Some(m) = &doc.outcome.message {
        line(format!("  {m}"));
    }
    o
}

/// `z{m}^{k}` becomes `\zeta_{m}^{k}`.
pub fn latex_scalar(s: &Scalar) -> String {
    let text = s.to_string();
    let mut out = String::new();
    let b = text.as_bytes();
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'z' {
            let start = i + 1;
            let mut j = start;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            out.push_str(&format!("\\zeta_{{{}}}", &text[start..j]));
            if j < b.len() && b[j] == b'^' {
                let ks = j + 1;
                let mut k = ks;
                while k < b.len() && b[k].is_ascii_digit() {
                    k += 1;
                }
                if &text[ks..k] != "1" {
                    out.push_str(&format!("^{{{}}}", &text[ks..k]));
                }
                j = k;
            }
            i = j;
        } else if b[i] == b'*' {
            i += 1;
        } else if b[i] == b'/' {
            // a/b becomes \tfrac{a}{b}; numerator already emitted.
            let mut num_start = out.len();
            while num_start > 0 && out.as_bytes()[num_start - 1].is_ascii_digit() {
                num_start -= 1;
            }
            let num = out.split_off(num_start);
            let mut j = i + 1;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            out.push_str(&format!("\\tfrac{{{num}}}{{{}}}", &text[i + 1..j]));
            i = j;
        } else {
            out.push(b[i] as char);
            i += 1;
        }
    }
    out
}

fn latex_letter(l: u8, n: usize) -> String {
    if n <= 5 {
        ((b'a' + l) as char).to_string()
    } else {
        let (i, j) = (l as usize / n, l as usize % n);
        format!("t_{{{}}}^{{{}}}", i + 1, j + 1)
    }
}

pub fn latex_poly(p: &NCPoly, n: usize) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (w, c)) in p.terms().rev().enumerate() {
        let mut word = String::new();
        let ls = w.letters();
        let mut i = 0;
        while i < ls.len() {
            let mut j = i;
            while j < ls.len() && ls[j] == ls[i] {
                j += 1;
            }
            let name = latex_letter(ls[i], n);
            if j - i > 1 {
                if n <= 5 {
                    word.push_str(&format!("{name}^{{{}}}", j - i));
                } else {
                    word.push_str(&format!("({name})^{{{}}}", j - i));
                }
            } else {
                word.push_str(&name);
            }
            i = j;
        }
        let (neg, coef) = match c.as_rational() {
            Some(q) => {
                let neg = num_traits::Signed::is_negative(q);
                let abs = Scalar::from_rational(num_traits::Signed::abs(q));
                let s = if abs.is_one() && !word.is_empty() {
                    String::new()
                } else {
                    latex_scalar(&abs)
                };
                (neg, s)
            }
            None => (false, format!("\\left({}\\right)", latex_scalar(c))),
        };
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&coef);
        out.push_str(&word);
    }
    out
}

fn latex_of(s: &str, n: usize) -> String {
    match parse_poly(s, n) {
        Ok(p) => latex_poly(&p, n),
        Err(_) => format!("\\text{{{s}}}"),
    }
}

fn latex_gen(i: usize, j: usize, n: usize) -> String {
    latex_letter((i * n + j) as u8, n)
}

pub fn to_latex(doc: &ReportDocument) -> String {
    let n = doc.input.n;
    let mut o = String::new();
    let mut line = |s: String| {
        o.push_str(&s);
        o.push('\n');
    };
    line(format!("% {} {} {}", doc.tool.name, doc.tool.version, doc.command));
    line(format!("% input sha256 {}", doc.input.sha256));
    if let Some(f) = &doc.frt {
        line("\\begin{align*}".into());
        let rels: Vec<String> = f.relations.iter().map(|r| format!("  {} &= 0", latex_of(r, n))).collect();
        line(rels.join(", \\\\\n"));
        line("\\end{align*}".into());
    }
    if let Some(nc) = &doc.nichols {
        let h: Vec<String> = nc.hilbert.iter().map(usize::to_string).collect();
        line(format!("% Hilbert function ({})", h.join(", ")));
        if let (Some(top), Some(vol)) = (nc.top, &nc.volume) {
            line(format!("% top degree {top}, volume {vol}"));
        }
    }
    if let Some(q) = &doc.qdet {
        line(format!("\\[\n  \\boxed{{D = {}}}\n\\]", latex_of(&q.d, n)));
        line("\\[".into());
        line("  T = \\begin{pmatrix}".into());
        let rows: Vec<String> = q
            .cofactor
            .iter()
            .map(|r| format!("    {}", r.iter().map(|p| latex_of(p, n)).collect::<Vec<_>>().join(" & ")))
            .collect();
        line(rows.join(" \\\\\n"));
        line("  \\end{pmatrix}".into());
        line("\\]".into());
        if !q.hayashi_is_identity {
            line("\\begin{align*}".into());
            let rules: Vec<String> = q
                .normality
                .rules
                .iter()
                .enumerate()
                .map(|(k, r)| {
                    let g = latex_gen(k / n, k % n, n);
                    format!("  D{g} &= \\left({}\\right) D", latex_of(&r.image, n))
                })
                .collect();
            line(rules.join(", \\\\\n"));
            line("\\end{align*}".into());
        }
        if let Some(t) = &q.antipode.numerators {
            line("\\begin{align*}".into());
            let mut rows = Vec::new();
            for (i, row) in t.iter().enumerate() {
                for (j, p) in row.iter().enumerate() {
                    rows.push(format!(
                        "  \\mathcal{{S}}({}) &= \\left({}\\right) D^{{-1}}",
                        latex_gen(i, j, n),
                        latex_of(p, n)
                    ));
                }
            }
            line(rows.join(", \\\\\n"));
            line("\\end{align*}".into());
        }
        if let Some(t) = &q.torus {
            line(format!(
                "\\[\n  H(c) \\cong \\Bbbk[\\mathbb{{Z}}^{{{}}}], \\quad D \\mapsto {}\n\\]",
                t.rank,
                latex_of(&t.d_image, n)
            ));
        }
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_scalars() {
        let z: Scalar = "z3".parse().unwrap();
        assert_eq!(latex_scalar(&z), "\\zeta_{3}");
        let q: Scalar = "-1/2".parse().unwrap();
        assert_eq!(latex_scalar(&q), "-\\tfrac{1}{2}");
    }

    #[test]
    fn latex_polys() {
        let p = parse_poly("a^2 - 1/2bc + (z4)d", 2).unwrap();
        let s = latex_poly(&p, 2);
        assert!(s.contains("a^{2}"), "{s}");
        assert!(s.contains("\\tfrac{1}{2}bc"), "{s}");
        assert!(s.contains("\\left(\\zeta_{4}\\right)d"), "{s}");
        let q = NCPoly::generator(6, 0, 1);
        assert_eq!(latex_poly(&q, 6), "t_{1}^{2}");
    }
}
