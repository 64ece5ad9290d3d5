//! Braiding spec documents (TOML).
//!
//! ```toml
//! name = "transpositions of S3, constant cocycle -1"
//! kind = "rack"
//! n = 3
//! rack = [[1, 3, 2], [3, 2, 1], [2, 1, 3]]
//! cocycle = "-1"
//! volume = "x1x2x3x2"
//! ```
//!
//! Indices are 1-based. Scalars use the literal grammar of
//! [`crate::scalars`]; every literal is embedded into a single field
//! `Q(ζ_m)` fixed at parse time, `m` being the declared `conductor` or the
//! lcm of the conductors of all literals.

use serde::{Deserialize, Serialize};

use crate::braiding::{BraidingTensor, BuildError};
use crate::ncpoly::{parse_monomial, ParseError, MAX_DIM};
use crate::scalars::{Scalar, ScalarError};
use crate::settheoretic::{Cocycle, Rack, SetError, SetSolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// Explicit coefficients `c_{ij}^{kl}` in `entries`.
    Matrix,
    /// `c(x_i ⊗ x_j) = x_j ⊗ x_i`.
    Flip,
    /// `c(x_i ⊗ x_j) = q_{ij} x_j ⊗ x_i`, with `q` given.
    Diagonal,
    /// `s(i, j)` listed in `table`, with an optional `cocycle`.
    SetSolution,
    /// `i ▷ j` listed in `rack`; `s(i, j) = (i ▷ j, i)`.
    Rack,
}

/// One coefficient `c_{ij}^{kl}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CocycleDoc {
    Constant(String),
    Table(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: Kind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conductor: Option<u32>,
    /// Multiplies the whole braiding.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<Vec<String>>>,
    /// `table[i][j] = [g_i(j), f_j(i)]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<[usize; 2]>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rack: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<CocycleDoc>,
    /// Volume monomial override, e.g. `"x1x2x3x2"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub volume: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    /// A second braiding on the same space whose Nichols algebra is used as
    /// the graded comodule algebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub companion: Option<Box<SpecDocument>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("invalid spec document: {0}")]
    Toml(String),
    #[error("n = {n} is outside 1..={MAX_DIM}")]
    Dimension { n: usize },
    #[error("kind `{kind}` requires the field `{field}`")]
    Missing { kind: &'static str, field: &'static str },
    #[error("field `{field}` is not used by kind `{kind}`")]
    Unexpected { kind: &'static str, field: &'static str },
    #[error("field `{field}`: {reason}")]
    Shape { field: &'static str, reason: String },
    #[error("field `{field}`: {source}")]
    Scalar {
        field: &'static str,
        #[source]
        source: ScalarError,
    },
    #[error("declared conductor {declared} does not contain ζ_{needed}")]
    Conductor { declared: u32, needed: u32 },
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error("field `volume`: {0}")]
    Volume(ParseError),
    #[error("companion: {0}")]
    Companion(Box<SpecError>),
}

/// A spec turned into mathematical objects.
#[derive(Debug, Clone)]
pub struct BuiltSpec {
    pub braiding: BraidingTensor,
    pub companion: Option<BraidingTensor>,
    /// 0-based volume override.
    pub volume: Option<Vec<usize>>,
    pub max_degree: Option<usize>,
    /// The underlying solution and cocycle for set-theoretic kinds (the
    /// `scale` is folded into the cocycle).
    pub set_theoretic: Option<(SetSolution, Cocycle)>,
    pub rack: Option<Rack>,
    pub conductor: u32,
}

pub fn parse_spec(text: &str) -> Result<SpecDocument, SpecError> {
    toml::from_str(text).map_err(|e| SpecError::Toml(e.to_string()))
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Matrix => "matrix",
        Kind::Flip => "flip",
        Kind::Diagonal => "diagonal",
        Kind::SetSolution => "set_solution",
        Kind::Rack => "rack",
    }
}

impl SpecDocument {
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec documents serialize")
    }

    fn literals(&self, out: &mut Vec<(&'static str, String)>) {
        if let Some(s) = &self.scale {
            out.push(("scale", s.clone()));
        }
        for e in self.entries.iter().flatten() {
            out.push(("entries", e.value.clone()));
        }
        for v in self.q.iter().flatten().flatten() {
            out.push(("q", v.clone()));
        }
        match &self.cocycle {
            Some(CocycleDoc::Constant(s)) => out.push(("cocycle", s.clone())),
            Some(CocycleDoc::Table(t)) => out.extend(t.iter().flatten().map(|s| ("cocycle", s.clone()))),
            None => {}
        }
        if let Some(c) = &self.companion {
            c.literals(out);
        }
    }

    /// The field fixed for this document.
    pub fn field_conductor(&self) -> Result<u32, SpecError> {
        let mut lits = Vec::new();
        self.literals(&mut lits);
        let mut m = 1u32;
        for (field, lit) in &lits {
            let v: Scalar = lit.parse().map_err(|source| SpecError::Scalar { field, source })?;
            m = num_integer::Integer::lcm(&m, &v.conductor());
        }
        match self.conductor {
            Some(d) if d == 0 || d % m != 0 => Err(SpecError::Conductor { declared: d, needed: m }),
            Some(d) => Ok(d),
            None => Ok(m),
        }
    }

    pub fn build(&self) -> Result<BuiltSpec, SpecError> {
        let conductor = self.field_conductor()?;
        let mut built = self.build_in(conductor)?;
        if let Some(c) = &self.companion {
            if c.companion.is_some() || c.volume.is_some() || c.max_degree.is_some() {
                return Err(SpecError::Companion(Box::new(SpecError::Shape {
                    field: "companion",
                    reason: "a companion carries only a braiding".into(),
                })));
            }
            if c.n != self.n {
                return Err(SpecError::Companion(Box::new(SpecError::Shape {
                    field: "n",
                    reason: format!("companion has n = {}, expected {}", c.n, self.n),
                })));
            }
            let inner = c.build_in(conductor).map_err(|e| SpecError::Companion(Box::new(e)))?;
            built.companion = Some(inner.braiding);
        }
        Ok(built)
    }

    fn build_in(&self, conductor: u32) -> Result<BuiltSpec, SpecError> {
        let n = self.n;
        if n == 0 || n > MAX_DIM {
            return Err(SpecError::Dimension { n });
        }
        let kind = kind_name(self.kind);
        let scalar = |field: &'static str, s: &str| {
            Scalar::parse_in(s, conductor).map_err(|source| SpecError::Scalar { field, source })
        };
        let allowed: &[&str] = match self.kind {
            Kind::Matrix => &["entries"],
            Kind::Flip => &[],
            Kind::Diagonal => &["q"],
            Kind::SetSolution => &["table", "cocycle"],
            Kind::Rack => &["rack", "cocycle"],
        };
        let present = [
            ("entries", self.entries.is_some()),
            ("q", self.q.is_some()),
            ("table", self.table.is_some()),
            ("rack", self.rack.is_some()),
            ("cocycle", self.cocycle.is_some()),
        ];
        for (field, is_set) in present {
            if is_set && !allowed.contains(&field) {
                return Err(SpecError::Unexpected { kind, field });
            }
        }
        let scale = match &self.scale {
            Some(s) => Some(scalar("scale", s)?),
            None => None,
        };
        let square = |field: &'static str, rows: usize, ok: bool| {
            if rows != n || !ok {
                Err(SpecError::Shape {
                    field,
                    reason: format!("expected a {n}x{n} table"),
                })
            } else {
                Ok(())
            }
        };
        let mut set_theoretic = None;
        let mut rack_out = None;
        let braiding = match self.kind {
            Kind::Matrix => {
                let entries = self.entries.as_ref().ok_or(SpecError::Missing { kind, field: "entries" })?;
                let mut list = Vec::with_capacity(entries.len());
                for e in entries {
                    list.push(((e.i, e.j), (e.k, e.l), scalar("entries", &e.value)?));
                }
                BraidingTensor::from_entries(n, &list)?
            }
            Kind::Flip => BraidingTensor::flip(n),
            Kind::Diagonal => {
                let q = self.q.as_ref().ok_or(SpecError::Missing { kind, field: "q" })?;
                square("q", q.len(), q.iter().all(|r| r.len() == n))?;
                let mut vals = Vec::with_capacity(n);
                for row in q {
                    let mut r = Vec::with_capacity(n);
                    for v in row {
                        r.push(scalar("q", v)?);
                    }
                    vals.push(r);
                }
                BraidingTensor::diagonal(&vals)?
            }
            Kind::SetSolution | Kind::Rack => {
                let sol = if self.kind == Kind::SetSolution {
                    let t = self.table.as_ref().ok_or(SpecError::Missing { kind, field: "table" })?;
                    square("table", t.len(), t.iter().all(|r| r.len() == n))?;
                    let mut shifted = Vec::with_capacity(n);
                    for row in t {
                        let mut r = Vec::with_capacity(n);
                        for &[a, b] in row {
                            if a == 0 || b == 0 || a > n || b > n {
                                return Err(SpecError::Shape {
                                    field: "table",
                                    reason: format!("entry [{a}, {b}] is outside 1..={n}"),
                                });
                            }
                            r.push((a - 1, b - 1));
                        }
                        shifted.push(r);
                    }
                    SetSolution::from_table(&shifted)?
                } else {
                    let t = self.rack.as_ref().ok_or(SpecError::Missing { kind, field: "rack" })?;
                    square("rack", t.len(), t.iter().all(|r| r.len() == n))?;
                    let mut op = Vec::with_capacity(n);
                    for row in t {
                        let mut r = Vec::with_capacity(n);
                        for &v in row {
                            if v == 0 || v > n {
                                return Err(SpecError::Shape {
                                    field: "rack",
                                    reason: format!("entry {v} is outside 1..={n}"),
                                });
                            }
                            r.push(v - 1);
                        }
                        op.push(r);
                    }
                    let rack = Rack::new(op)?;
                    let sol = SetSolution::from_rack(&rack);
                    rack_out = Some(rack);
                    sol
                };
                let mut cocycle = match &self.cocycle {
                    None => Cocycle::Constant(Scalar::one().embed(conductor)),
                    Some(CocycleDoc::Constant(s)) => Cocycle::Constant(scalar("cocycle", s)?),
                    Some(CocycleDoc::Table(t)) => {
                        square("cocycle", t.len(), t.iter().all(|r| r.len() == n))?;
                        let mut vals = Vec::with_capacity(n);
                        for row in t {
                            let mut r = Vec::with_capacity(n);
                            for v in row {
                                r.push(scalar("cocycle", v)?);
                            }
                            vals.push(r);
                        }
                        Cocycle::Table(vals)
                    }
                };
                if let Some(s) = &scale {
                    cocycle = match cocycle {
                        Cocycle::Constant(q) => Cocycle::Constant(&q * s),
                        Cocycle::Table(t) => {
                            Cocycle::Table(t.into_iter().map(|r| r.into_iter().map(|q| &q * s).collect()).collect())
                        }
                    };
                }
                let c = sol.to_braiding(&cocycle);
                set_theoretic = Some((sol, cocycle));
                c
            }
        };
        let braiding = match (&scale, self.kind) {
            (Some(s), Kind::Matrix | Kind::Flip | Kind::Diagonal) => braiding.scaled(s),
            _ => braiding,
        };
        let volume = match &self.volume {
            Some(v) => {
                let w = parse_monomial(v, n).map_err(SpecError::Volume)?;
                Some(w)
            }
            None => None,
        };
        Ok(BuiltSpec {
            braiding,
            companion: None,
            volume,
            max_degree: self.max_degree,
            set_theoretic,
            rack: rack_out,
            conductor,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rack_document() {
        let doc = parse_spec(
            r#"
kind = "rack"
n = 3
rack = [[1, 3, 2], [3, 2, 1], [2, 1, 3]]
cocycle = "-1"
volume = "x1x2x3x2"
"#,
        )
        .unwrap();
        let b = doc.build().unwrap();
        assert_eq!(b.volume, Some(vec![0, 1, 2, 1]));
        assert_eq!(*b.braiding.coeff(0, 1, 2, 0), Scalar::from_int(-1));
        let again = parse_spec(&doc.to_toml()).unwrap();
        assert_eq!(again, doc);
    }

    #[test]
    fn conductor_is_the_lcm() {
        let doc = parse_spec(
            r#"
kind = "diagonal"
n = 2
q = [["z3^1", "2"], ["1/2", "z4^1"]]
"#,
        )
        .unwrap();
        assert_eq!(doc.field_conductor().unwrap(), 12);
        let bad = SpecDocument {
            conductor: Some(3),
            ..doc
        };
        assert_eq!(bad.field_conductor(), Err(SpecError::Conductor { declared: 3, needed: 12 }));
    }

    #[test]
    fn rejects_stray_fields() {
        let doc = parse_spec("kind = \"flip\"\nn = 2\nq = [[\"1\"]]\n").unwrap();
        assert!(matches!(doc.build(), Err(SpecError::Unexpected { field: "q", .. })));
        assert!(parse_spec("kind = \"flip\"\nn = 2\nbogus = 1\n").is_err());
    }

    #[test]
    fn scale_applies() {
        let doc = parse_spec("kind = \"flip\"\nn = 2\nscale = \"-1\"\n").unwrap();
        let b = doc.build().unwrap();
        assert_eq!(b.braiding, BraidingTensor::flip(2).negated());
    }

    #[test]
    fn index_errors() {
        let doc = parse_spec("kind = \"matrix\"\nn = 2\nentries = [{ i = 3, j = 1, k = 1, l = 1, value = \"1\" }]\n").unwrap();
        assert!(matches!(doc.build(), Err(SpecError::Build(_))));
        let doc = parse_spec("kind = \"rack\"\nn = 2\nrack = [[1, 2], [1, 0]]\n").unwrap();
        assert!(matches!(doc.build(), Err(SpecError::Shape { field: "rack", .. })));
    }
}
