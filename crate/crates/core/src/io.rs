//! JSON interchange formats. Every document is emitted with sorted keys and
//! canonical subset order, so equal objects produce equal bytes.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::bits::ElemSet;
use crate::covec::{Covector, SignVector};
use crate::error::{Error, Result};
use crate::flats::FlatLattice;
use crate::geom::{PointConfiguration, RationalArrangement, Q};
use crate::orient::{validate_oig, OgAxiom, OmAxiom, OmReport, OrientationReport, OrientedSystem, Witness};
use crate::setsys::{AxiomReport, GroundSet, SetSystem};

/// Serializes with sorted object keys and two-space indentation.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Malformed(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Malformed(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetSystemDoc {
    pub ground: Vec<String>,
    pub feasible: Vec<Vec<String>>,
}

impl SetSystemDoc {
    pub fn from_system(sys: &SetSystem) -> Self {
        SetSystemDoc {
            ground: sys.ground().labels().to_vec(),
            feasible: sys.feasible().iter().map(|&s| sys.ground().labels_of(s)).collect(),
        }
    }

    pub fn to_system(&self) -> Result<SetSystem> {
        let ground = GroundSet::new(&self.ground)?;
        let sets = self.feasible.iter().map(|m| ground.parse_subset(m)).collect::<Result<Vec<_>>>()?;
        SetSystem::new(ground, sets)
    }
}

/// A greedoid with a candidate covector set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDoc {
    pub system: SetSystemDoc,
    pub covectors: Vec<String>,
    /// Set on restrictions: whether each member restricts to its plain
    /// restriction, which is what makes the result a full orientation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restriction_hypothesis: Option<bool>,
}

impl BundleDoc {
    pub fn from_oig(oig: &OrientedSystem) -> Self {
        BundleDoc { system: SetSystemDoc::from_system(oig.system()), covectors: oig.sign_strings(), restriction_hypothesis: None }
    }

    pub fn from_parts(sys: &SetSystem, vectors: &[SignVector]) -> Self {
        let mut covectors: Vec<String> = vectors.iter().map(|v| v.to_string()).collect();
        covectors.sort();
        covectors.dedup();
        BundleDoc { system: SetSystemDoc::from_system(sys), covectors, restriction_hypothesis: None }
    }

    pub fn sign_vectors(&self) -> Result<Vec<SignVector>> {
        let n = self.system.ground.len();
        self.covectors
            .iter()
            .map(|s| {
                let v: SignVector = s.parse()?;
                if v.len() != n {
                    return Err(Error::Malformed(format!("sign string `{s}` has length {}, expected {n}", v.len())));
                }
                Ok(v)
            })
            .collect()
    }

    /// Parses and validates; the result carries the report whether or not
    /// validation passed.
    pub fn to_oig(&self) -> Result<OrientedSystem> {
        validate_oig(&self.system.to_system()?, &self.sign_vectors()?)
    }
}

/// A rational written as an integer or a `[num, den]` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalDoc {
    Int(i64),
    Pair([i64; 2]),
}

impl RationalDoc {
    pub fn to_q(&self) -> Result<Q> {
        match *self {
            RationalDoc::Int(n) => Ok(Q::from_integer(BigInt::from(n))),
            RationalDoc::Pair([_, 0]) => Err(Error::Malformed("zero denominator".into())),
            RationalDoc::Pair([n, d]) => Ok(Q::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    /// Always the pair form, reduced with positive denominator.
    pub fn from_q(q: &Q) -> Result<Self> {
        let part = |b: &BigInt| b.to_i64().ok_or_else(|| Error::Malformed(format!("{q} does not fit in 64 bits")));
        Ok(RationalDoc::Pair([part(q.numer())?, part(q.denom())?]))
    }
}

fn rows_to_q(rows: &[Vec<RationalDoc>]) -> Result<Vec<Vec<Q>>> {
    rows.iter().map(|r| r.iter().map(RationalDoc::to_q).collect()).collect()
}

fn rows_from_q(rows: &[Vec<Q>]) -> Result<Vec<Vec<RationalDoc>>> {
    rows.iter().map(|r| r.iter().map(RationalDoc::from_q).collect()).collect()
}

/// Linear forms on `Q^d`, one per hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDoc {
    pub d: usize,
    pub forms: Vec<Vec<RationalDoc>>,
}

impl ArrangementDoc {
    pub fn from_arrangement(arr: &RationalArrangement) -> Result<Self> {
        Ok(ArrangementDoc { d: arr.dim(), forms: rows_from_q(arr.forms())? })
    }

    pub fn to_arrangement(&self) -> Result<RationalArrangement> {
        RationalArrangement::new(self.d, rows_to_q(&self.forms)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsDoc {
    pub d: usize,
    pub points: Vec<Vec<RationalDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PointsDoc {
    pub fn from_configuration(p: &PointConfiguration) -> Result<Self> {
        Ok(PointsDoc { d: p.dim(), points: rows_from_q(p.points())?, labels: Some(p.labels().to_vec()) })
    }

    pub fn to_configuration(&self) -> Result<PointConfiguration> {
        let pts = rows_to_q(&self.points)?;
        match &self.labels {
            Some(l) => PointConfiguration::new(self.d, l.clone(), pts),
            None => PointConfiguration::unlabeled(self.d, pts),
        }
    }
}

/// Vectors spanning an oriented matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorsDoc {
    pub d: usize,
    pub vectors: Vec<Vec<RationalDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl VectorsDoc {
    pub fn rows(&self) -> Result<Vec<Vec<Q>>> {
        let rows = rows_to_q(&self.vectors)?;
        if let Some(r) = rows.iter().find(|r| r.len() != self.d) {
            return Err(Error::Dimension(format!("vector of length {} in dimension {}", r.len(), self.d)));
        }
        Ok(rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatDoc {
    pub id: usize,
    pub xi: Vec<String>,
    pub gamma: Vec<String>,
    pub corank: usize,
    pub members: Vec<Vec<String>>,
    /// Ids of the flats covering this one.
    pub covered_by: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub ground: Vec<String>,
    pub bottom: usize,
    pub top: usize,
    pub flats: Vec<FlatDoc>,
}

impl LatticeDoc {
    pub fn from_lattice(lat: &FlatLattice) -> Self {
        let g = lat.system().ground();
        let flats = lat
            .flats()
            .iter()
            .map(|f| FlatDoc {
                id: f.id,
                xi: g.labels_of(f.xi),
                gamma: g.labels_of(f.gamma),
                corank: f.corank,
                members: f.members.iter().map(|&m| g.labels_of(m)).collect(),
                covered_by: lat.upper_covers(f.id).to_vec(),
            })
            .collect();
        LatticeDoc { ground: g.labels().to_vec(), bottom: lat.bottom(), top: lat.top(), flats }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CovectorDoc {
    pub signs: String,
    pub support_xi: Vec<String>,
}

impl CovectorDoc {
    pub fn new(lat: &FlatLattice, c: &Covector) -> Self {
        CovectorDoc { signs: c.to_string(), support_xi: lat.system().ground().labels_of(lat.xi(c.support)) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessDoc {
    MissingSupport { flat_xi: Vec<String> },
    MissingNegation { covector: String },
    MissingProduct { a: String, b: String, product: String },
    NoElimination { a: String, b: String, element: String },
    MissingZero,
}

impl WitnessDoc {
    /// Element labels come from `ground`; flats are named by their `ξ`.
    pub fn new(w: &Witness, ground: &GroundSet, lat: Option<&FlatLattice>) -> Self {
        match w {
            Witness::MissingSupport { flat } => WitnessDoc::MissingSupport {
                flat_xi: lat.map(|l| ground.labels_of(l.xi(*flat))).unwrap_or_default(),
            },
            Witness::MissingNegation { covector } => WitnessDoc::MissingNegation { covector: covector.to_string() },
            Witness::MissingProduct { a, b, product } => {
                WitnessDoc::MissingProduct { a: a.to_string(), b: b.to_string(), product: product.to_string() }
            }
            Witness::NoElimination { a, b, x } => {
                WitnessDoc::NoElimination { a: a.to_string(), b: b.to_string(), element: ground.label(*x).to_string() }
            }
            Witness::MissingZero => WitnessDoc::MissingZero,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            WitnessDoc::MissingSupport { flat_xi } => format!("no covector has support with xi = {{{}}}", flat_xi.join(",")),
            WitnessDoc::MissingNegation { covector } => format!("{covector} is present but its negation is not"),
            WitnessDoc::MissingProduct { a, b, product } => format!("{a} ∘ {b} = {product} is absent"),
            WitnessDoc::NoElimination { a, b, element } => format!("no eliminator for {a}, {b} at {element}"),
            WitnessDoc::MissingZero => "the zero vector is absent".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomOutcomeDoc {
    pub axiom: String,
    pub passed: bool,
    pub witnesses: Vec<WitnessDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationDoc {
    pub passed: bool,
    pub axioms: Vec<AxiomOutcomeDoc>,
    pub non_covectors: Vec<String>,
}

impl ValidationDoc {
    pub fn from_oig(oig: &OrientedSystem) -> Self {
        Self::from_report(oig.report(), oig.system().ground(), Some(oig.lattice()))
    }

    pub fn from_report(r: &OrientationReport, ground: &GroundSet, lat: Option<&FlatLattice>) -> Self {
        let axioms = r
            .axioms
            .iter()
            .map(|o| AxiomOutcomeDoc {
                axiom: og_name(o.axiom).into(),
                passed: o.passed,
                witnesses: o.witnesses.iter().map(|w| WitnessDoc::new(w, ground, lat)).collect(),
            })
            .collect();
        ValidationDoc { passed: r.passed, axioms, non_covectors: r.non_covectors.iter().map(|v| v.to_string()).collect() }
    }

    pub fn from_om_report(r: &OmReport, ground: &GroundSet) -> Self {
        let axioms = r
            .axioms
            .iter()
            .map(|o| AxiomOutcomeDoc {
                axiom: om_name(o.axiom).into(),
                passed: o.passed,
                witnesses: o.witnesses.iter().map(|w| WitnessDoc::new(w, ground, None)).collect(),
            })
            .collect();
        ValidationDoc { passed: r.passed, axioms, non_covectors: r.invalid.iter().map(|v| v.to_string()).collect() }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from(if self.passed { "passed\n" } else { "failed\n" });
        for a in &self.axioms {
            s.push_str(&format!("{}: {}\n", a.axiom, if a.passed { "ok" } else { "violated" }));
            for w in &a.witnesses {
                s.push_str(&format!("  {}\n", w.describe()));
            }
        }
        for v in &self.non_covectors {
            s.push_str(&format!("not a covector: {v}\n"));
        }
        s
    }
}

fn og_name(a: OgAxiom) -> &'static str {
    match a {
        OgAxiom::OG1 => "OG1",
        OgAxiom::OG2 => "OG2",
        OgAxiom::OG3 => "OG3",
        OgAxiom::OG4 => "OG4",
    }
}

fn om_name(a: OmAxiom) -> &'static str {
    match a {
        OmAxiom::OM1 => "OM1",
        OmAxiom::OM2 => "OM2",
        OmAxiom::OM3 => "OM3",
        OmAxiom::OM4 => "OM4",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheckDoc {
    pub class: String,
    pub passed: bool,
    pub violations: Vec<String>,
    pub loops: Vec<String>,
}

impl AxiomCheckDoc {
    pub fn new(r: &AxiomReport, ground: &GroundSet) -> Self {
        AxiomCheckDoc {
            class: r.class_checked.name().into(),
            passed: r.passed,
            violations: r.violations.iter().map(|v| v.describe(ground)).collect(),
            loops: ground.labels_of(r.loops),
        }
    }
}

/// Parses a comma-separated label list against `ground`.
pub fn parse_label_list(ground: &GroundSet, list: &str) -> Result<ElemSet> {
    let labels: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    ground.parse_subset(&labels)
}
