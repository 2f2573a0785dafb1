//! Scenario files: a geometry, a list of barbells in application order, and
//! the attaching spheres and disks whose pairings form the presentation.
//!
//! ```json
//! {
//!   "geometry": "torusComplement",
//!   "barbells": [
//!     { "cuff1": "S_h", "cuff2": "S_h", "holonomy": "t^2" },
//!     { "cuff1": "S_v", "cuff2": "S_v", "holonomy": "t^3" }
//!   ],
//!   "expected": { "f2_dim": 12 }
//! }
//! ```
//!
//! The geometry is either a built-in name (configured by `params`) or an
//! inline table of labels and pairings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::deckgroup::DeckGroup;
use crate::equivariant::{action_sequence, BarbellSpec, GeneratorLabel, Geometry, Symmetry};
use crate::error::{Error, Result};
use crate::groupring::{Coefficients, RingElement};
use crate::presentations::{antidiagonal_cokernel, f2_quotient_dim, present_from_scenario, render_factored};

use super::{builtin_geometry, Check, Params, Report, Source};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub geometry: GeometryRef,
    #[serde(default)]
    pub barbells: Vec<BarbellEntry>,
    /// Defaults to the geometry's own attaching spheres.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attaching: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disks: Option<Vec<String>>,
    /// Coefficient ring for built-in geometries that offer a choice.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Coefficients>,
    #[serde(default)]
    pub params: Params,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeometryRef {
    Builtin(String),
    Inline(Box<InlineGeometry>),
}

/// A geometry spelled out: labels, pairing entries as `(element, coefficient)`
/// term lists, and the kernel as a list of labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineGeometry {
    pub name: String,
    pub group: DeckGroup,
    pub coefficients: Coefficients,
    #[serde(default)]
    pub symmetry: Symmetry,
    pub labels: Vec<GeneratorLabel>,
    #[serde(default)]
    pub pairings: Vec<PairingEntry>,
    #[serde(default)]
    pub attaching: Vec<String>,
    #[serde(default)]
    pub disks: Vec<String>,
    #[serde(default)]
    pub kernel: Vec<String>,
    #[serde(default)]
    pub aliases: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingEntry {
    pub a: String,
    pub b: String,
    pub terms: Vec<(String, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BarbellEntry {
    pub cuff1: String,
    pub cuff2: String,
    #[serde(default = "identity_token")]
    pub holonomy: String,
    #[serde(default = "one")]
    pub iterate: u32,
    #[serde(default = "unit_signs")]
    pub signs: (i8, i8),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<String>,
}

fn identity_token() -> String {
    "1".into()
}

fn one() -> u32 {
    1
}

fn unit_signs() -> (i8, i8) {
    (1, 1)
}

/// Golden values; each one present becomes a comparing check.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<String>,
    /// `"infinite"` or a number.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f2_dim: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cokernel: Option<Vec<String>>,
    /// Image class of each attaching sphere, keyed by label.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<BTreeMap<String, String>>,
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Scenario(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }

    pub fn geometry(&self) -> Result<Geometry> {
        match &self.geometry {
            GeometryRef::Builtin(name) => {
                let mut params = self.params.clone();
                if self.field.is_some() {
                    params.field = self.field;
                }
                builtin_geometry(name, &params)
            }
            GeometryRef::Inline(g) => g.build(),
        }
    }

    pub fn barbell_specs(&self, geom: &Geometry) -> Result<Vec<BarbellSpec>> {
        self.barbells.iter().map(|b| b.spec(geom)).collect()
    }
}

impl BarbellEntry {
    pub fn spec(&self, geom: &Geometry) -> Result<BarbellSpec> {
        let hol = geom.group.parse_element(&self.holonomy)?;
        let mut spec = BarbellSpec::new(&self.cuff1, &self.cuff2, hol).iterate(self.iterate).signs(self.signs.0, self.signs.1);
        if let Some(o) = &self.offset {
            spec = spec.offset(geom.group.parse_element(o)?);
        }
        Ok(spec)
    }
}

impl InlineGeometry {
    pub fn build(&self) -> Result<Geometry> {
        let group = self.group.validate()?;
        let mut g = Geometry::new(&self.name, group, self.coefficients, self.symmetry).with_labels(self.labels.iter().cloned())?;
        for p in &self.pairings {
            let terms = p
                .terms
                .iter()
                .map(|(tok, c)| Ok((group.parse_element(tok)?, *c)))
                .collect::<Result<Vec<_>>>()?;
            g.set_pairing(&p.a, &p.b, terms)?;
        }
        g.attaching = self.attaching.clone();
        g.disks = self.disks.clone();
        g.kernel = self.kernel.iter().map(|l| g.basis(l)).collect::<Result<_>>()?;
        g.aliases = self.aliases.clone();
        g.validate()?;
        Ok(g)
    }

    /// The inline form of an existing geometry. Kernel classes that are not
    /// single basis labels cannot be written this way.
    pub fn from_geometry(g: &Geometry) -> Result<Self> {
        let kernel = g
            .kernel
            .iter()
            .map(|k| {
                let label = k.terms().next().map(|(l, _, _)| l.to_string()).unwrap_or_default();
                match g.basis(&label) {
                    Ok(b) if &b == k => Ok(label),
                    _ => Err(Error::Unsupported(format!("single-label kernel classes, got {k}"))),
                }
            })
            .collect::<Result<_>>()?;
        Ok(InlineGeometry {
            name: g.name.clone(),
            group: g.group,
            coefficients: g.coeffs,
            symmetry: g.pairings.symmetry(),
            labels: g.labels().to_vec(),
            pairings: g
                .pairings
                .entries()
                .map(|((a, b), p)| PairingEntry { a: a.clone(), b: b.clone(), terms: wire_terms(p) })
                .collect(),
            attaching: g.attaching.clone(),
            disks: g.disks.clone(),
            kernel,
            aliases: g.aliases.clone(),
        })
    }
}

fn wire_terms(p: &RingElement) -> Vec<(String, i64)> {
    p.terms()
        .map(|(g, c)| (g.token(), i64::try_from(c).expect("pairing coefficients fit in i64")))
        .collect()
}

/// Builds the presentation, derives what invariants apply to its shape, and
/// compares against `expected` where given.
pub fn run_scenario(file: &ScenarioFile) -> Result<Report> {
    let geom = file.geometry()?;
    let specs = file.barbell_specs(&geom)?;
    let attaching = file.attaching.clone().unwrap_or_else(|| geom.attaching.clone());
    let disks = file.disks.clone().unwrap_or_else(|| geom.disks.clone());
    let mut r = Report::new(Source::Scenario { file: Box::new(file.clone()) }, format!("scenario {}", geom.name));
    let want = file.expected.clone().unwrap_or_default();

    let mut classes = BTreeMap::new();
    for a in &attaching {
        let x = action_sequence(&geom, &geom.basis(a)?, &specs)?;
        classes.insert(a.clone(), x.render());
    }
    for (label, class) in &classes {
        let name = format!("class of {label}");
        match want.classes.as_ref().and_then(|c| c.get(label)) {
            Some(e) => r.check(Check::compare(&name, class, e)),
            None => r.check(Check::record(&name, class)),
        }
    }

    let m = present_from_scenario(&geom, &specs, &attaching, &disks)?;
    match &want.matrix {
        Some(e) => r.check(Check::compare("presentation", &m, e)),
        None => r.check(Check::record("presentation", &m)),
    }

    let laurent = geom.group == DeckGroup::FreeAbelian { rank: 1 };
    if laurent && geom.coeffs == Coefficients::F2 && m.rows() == 1 && m.cols() == 1 {
        let dim = match f2_quotient_dim(&m)? {
            Some(d) => d.to_string(),
            None => "infinite".into(),
        };
        match &want.f2_dim {
            Some(serde_json::Value::String(s)) => r.check(Check::compare("dim_F2", &dim, s)),
            Some(v) => r.check(Check::compare("dim_F2", &dim, v)),
            None => r.check(Check::record("dim_F2", &dim)),
        }
        r.check(Check::record("f", m.get(0, 0).render()));
    } else if want.f2_dim.is_some() {
        return Err(Error::Scenario("dim_F2 needs a 1x1 presentation over F2[t^±1]".into()));
    }

    if laurent && m.rows() == 2 && m.cols() == 2 {
        if let Ok(factors) = antidiagonal_cokernel(&m) {
            let shown: Vec<String> = factors.iter().map(render_factored).collect();
            match &want.cokernel {
                Some(e) => r.check(Check::compare("cokernel", shown.join(", "), e.join(", "))),
                None => r.check(Check::record("cokernel", shown.join(", "))),
            }
        }
    }
    if want.cokernel.is_some() && !r.checks.iter().any(|c| c.name == "cokernel") {
        return Err(Error::Scenario("cokernel needs an antidiagonal 2x2 presentation over a Laurent ring".into()));
    }

    r.artifact("matrix", &m);
    r.artifact("classes", &classes);
    Ok(r)
}
