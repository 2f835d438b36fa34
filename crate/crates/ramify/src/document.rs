//! The action document: a field, a Hopf algebra, an algebra with a coaction,
//! optional points, battery additions and the checks to run.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use ramify_core::algebra::Algebra;
use ramify_core::comodule::{Comodule, ComoduleAlgebra};
use ramify_core::constant::{coaction_from_group_action, GammaAction, LocalFactor};
use ramify_core::geometry::Point;
use ramify_core::group::FiniteGroup;
use ramify_core::hopf::{make_standard, HopfAlgebra, StandardHopf};
use ramify_core::tameness::BatteryAddition;
use ramify_core::FieldSpec;
use serde::{Deserialize, Serialize};

use crate::error::RunError;
use crate::scalar::{parse_matrix, parse_vector, FieldDoc, MatrixDoc, VectorDoc};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDocument {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub field: FieldDoc,
    pub hopf: HopfDoc,
    pub algebra: AlgebraDoc,
    pub coaction: CoactionDoc,
    /// Maximal ideals of `B`; taken from the factors for group actions.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<PointDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub battery: Vec<BatteryDoc>,
    /// Defaults to every check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<Check>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupDoc {
    Cyclic(usize),
    Symmetric(usize),
    /// Multiplication table, `rows[a][b] = a·b`.
    Table { rows: Vec<Vec<usize>>, labels: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum HopfDoc {
    FunctionAlgebra(GroupDoc),
    GroupAlgebra(GroupDoc),
    MuN(usize),
    AlphaP,
    Raw(RawHopfDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawHopfDoc {
    pub labels: Vec<String>,
    pub mult: MatrixDoc,
    pub unit: VectorDoc,
    pub comult: MatrixDoc,
    pub counit: VectorDoc,
    pub antipode: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum AlgebraDoc {
    /// The algebra underlying the Hopf algebra.
    HopfAlgebra,
    /// The base field.
    Ground,
    FunctionsOn(Vec<String>),
    /// `k[var]/(modulus)`, monic, constant term first.
    Polynomial { modulus: VectorDoc, var: String },
    Product(Vec<AlgebraDoc>),
    Raw { labels: Vec<String>, mult: MatrixDoc, unit: VectorDoc },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum CoactionDoc {
    Trivial,
    /// The comultiplication; needs `"algebra": "hopf-algebra"`.
    Regular,
    /// `(dim B · dim A) × dim B`, row `k·dim A + l` for `eₖ ⊗ aₗ`.
    Matrix(MatrixDoc),
    /// A finite group acting by automorphisms; needs a function-algebra Hopf algebra.
    GroupAction {
        generators: Vec<GeneratorDoc>,
        factors: Vec<FactorDoc>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    /// Group element by label.
    pub element: String,
    /// `b ↦ γ·b`.
    pub matrix: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorDoc {
    pub label: String,
    pub idempotent: VectorDoc,
    pub residue: FieldDoc,
    pub quotient: VectorDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    pub label: String,
    pub residue: FieldDoc,
    /// Images of the basis of `B` in the residue field.
    pub quotient: VectorDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatteryDoc {
    pub label: String,
    pub source: ComoduleDoc,
    pub target: ComoduleDoc,
    /// A comodule surjection `source → target`.
    pub map: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum ComoduleDoc {
    Trivial(usize),
    Regular,
    Coaction { dim: usize, matrix: MatrixDoc },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    TotalIntegral,
    Torsor,
    Inertia,
    Slice,
    Equivalence,
    Rebase,
}

impl Check {
    /// In execution order.
    pub const ALL: [Check; 6] = [
        Check::TotalIntegral,
        Check::Torsor,
        Check::Inertia,
        Check::Slice,
        Check::Equivalence,
        Check::Rebase,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::TotalIntegral => "total-integral",
            Check::Torsor => "torsor",
            Check::Inertia => "inertia",
            Check::Slice => "slice",
            Check::Equivalence => "equivalence",
            Check::Rebase => "rebase",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// A document turned into validated core objects.
#[derive(Clone, Debug)]
pub struct Built {
    pub field: FieldSpec,
    pub hopf: Arc<HopfAlgebra>,
    pub action: Arc<ComoduleAlgebra>,
    pub gamma: Option<GammaAction>,
    pub points: Vec<Point>,
    pub additions: Vec<BatteryAddition>,
    pub checks: Vec<Check>,
}

pub fn parse_document(text: &str) -> Result<ActionDocument, RunError> {
    Ok(serde_json::from_str(text)?)
}

fn group(g: &GroupDoc) -> Result<FiniteGroup, RunError> {
    Ok(match g {
        GroupDoc::Cyclic(n) => FiniteGroup::cyclic(*n)?,
        GroupDoc::Symmetric(n) => FiniteGroup::symmetric(*n)?,
        GroupDoc::Table { rows, labels } => {
            let n = labels.len();
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(RunError::Schema(format!("group table must be {n} × {n}")));
            }
            FiniteGroup::from_table(rows.concat(), labels.clone())?
        }
    })
}

fn hopf(f: FieldSpec, h: &HopfDoc) -> Result<HopfAlgebra, RunError> {
    Ok(match h {
        HopfDoc::FunctionAlgebra(g) => make_standard(&StandardHopf::FunctionAlgebra(group(g)?), f)?,
        HopfDoc::GroupAlgebra(g) => make_standard(&StandardHopf::GroupAlgebra(group(g)?), f)?,
        HopfDoc::MuN(n) => make_standard(&StandardHopf::MuN(*n), f)?,
        HopfDoc::AlphaP => make_standard(&StandardHopf::AlphaP, f)?,
        HopfDoc::Raw(r) => {
            let n = r.labels.len();
            HopfAlgebra::new(
                f,
                parse_matrix(f, &r.mult, n, n * n, "hopf.mult")?,
                parse_vector(f, &r.unit, n, "hopf.unit")?,
                parse_matrix(f, &r.comult, n * n, n, "hopf.comult")?,
                parse_vector(f, &r.counit, n, "hopf.counit")?,
                parse_matrix(f, &r.antipode, n, n, "hopf.antipode")?,
                r.labels.clone(),
            )
            .map_err(|e| RunError::from(e).at("hopf"))?
        }
    })
}

fn algebra(f: FieldSpec, a: &AlgebraDoc, h: &HopfAlgebra) -> Result<Algebra, RunError> {
    Ok(match a {
        AlgebraDoc::HopfAlgebra => h.algebra(),
        AlgebraDoc::Ground => Algebra::functions_on(f, vec![String::from("1")]),
        AlgebraDoc::FunctionsOn(labels) => {
            if labels.is_empty() {
                return Err(RunError::Schema("functions-on needs at least one point".into()));
            }
            Algebra::functions_on(f, labels.clone())
        }
        AlgebraDoc::Polynomial { modulus, var } => {
            let m = parse_vector(f, modulus, modulus.len(), "algebra.polynomial.modulus")?;
            Algebra::polynomial_quotient(f, &m, var)?
        }
        AlgebraDoc::Product(parts) => {
            let parts = parts.iter().map(|p| algebra(f, p, h)).collect::<Result<Vec<_>, _>>()?;
            Algebra::product(&parts)?
        }
        AlgebraDoc::Raw { labels, mult, unit } => {
            let n = labels.len();
            Algebra::new(
                f,
                parse_matrix(f, mult, n, n * n, "algebra.mult")?,
                parse_vector(f, unit, n, "algebra.unit")?,
                labels.clone(),
            )
            .map_err(|e| RunError::from(e).at("algebra"))?
        }
    })
}

fn point(b: &Algebra, p: &PointDoc) -> Result<Point, RunError> {
    let k = p.residue.spec()?;
    let what = format!("point {}", p.label);
    let q = parse_vector(k, &p.quotient, b.dim, &what)?;
    Point::new(b, p.label.clone(), k, q).map_err(|e| RunError::from(e).at(&what))
}

fn comodule(f: FieldSpec, h: &Arc<HopfAlgebra>, c: &ComoduleDoc, what: &str) -> Result<Comodule, RunError> {
    Ok(match c {
        ComoduleDoc::Trivial(n) => Comodule::trivial(h.clone(), *n),
        ComoduleDoc::Regular => Comodule::regular(h.clone()),
        ComoduleDoc::Coaction { dim, matrix } => {
            let m = parse_matrix(f, matrix, dim * h.dim, *dim, what)?;
            Comodule::new(h.clone(), m).map_err(|e| RunError::from(e).at(what))?
        }
    })
}

impl ActionDocument {
    /// Validates every structure and assembles the core objects.
    pub fn build(&self) -> Result<Built, RunError> {
        let f = self.field.spec()?;
        let h = hopf(f, &self.hopf)?;
        let b = algebra(f, &self.algebra, &h)?;
        let (action, gamma) = match &self.coaction {
            CoactionDoc::Trivial => (ComoduleAlgebra::trivial(Arc::new(h), b)?, None),
            CoactionDoc::Regular => {
                if self.algebra != AlgebraDoc::HopfAlgebra {
                    return Err(RunError::Schema("regular coaction needs \"algebra\": \"hopf-algebra\"".into()));
                }
                (ComoduleAlgebra::regular(Arc::new(h))?, None)
            }
            CoactionDoc::Matrix(m) => {
                let rho = parse_matrix(f, m, b.dim * h.dim, b.dim, "coaction")?;
                let c = Comodule::new(Arc::new(h), rho).map_err(|e| RunError::from(e).at("coaction"))?;
                (ComoduleAlgebra::new(b, c).map_err(|e| RunError::from(e).at("coaction"))?, None)
            }
            CoactionDoc::GroupAction { generators, factors } => {
                let HopfDoc::FunctionAlgebra(gd) = &self.hopf else {
                    return Err(RunError::Schema("group-action needs a function-algebra Hopf algebra".into()));
                };
                if !self.points.is_empty() {
                    return Err(RunError::Schema("group-action documents take their points from the factors".into()));
                }
                let g = group(gd)?;
                let mut gens = Vec::with_capacity(generators.len());
                for gen in generators {
                    let idx = g
                        .labels()
                        .iter()
                        .position(|l| *l == gen.element)
                        .ok_or_else(|| RunError::Schema(format!("unknown group element {:?}", gen.element)))?;
                    let what = format!("generator {}", gen.element);
                    gens.push((idx, parse_matrix(f, &gen.matrix, b.dim, b.dim, &what)?));
                }
                let mut local = Vec::with_capacity(factors.len());
                for fa in factors {
                    let what = format!("factor {}", fa.label);
                    let e = parse_vector(f, &fa.idempotent, b.dim, &what)?;
                    let p = point(
                        &b,
                        &PointDoc {
                            label: fa.label.clone(),
                            residue: fa.residue.clone(),
                            quotient: fa.quotient.clone(),
                        },
                    )?;
                    local.push(LocalFactor { idempotent: e, point: p });
                }
                let ga = GammaAction::from_generators(g, b, &gens, local).map_err(|e| RunError::from(e).at("group-action"))?;
                (coaction_from_group_action(&ga)?, Some(ga))
            }
        };
        let points = match &gamma {
            Some(ga) => ga.factors().iter().map(|fa| fa.point.clone()).collect(),
            None => self
                .points
                .iter()
                .map(|p| point(action.algebra(), p))
                .collect::<Result<Vec<_>, _>>()?,
        };
        let hopf = action.hopf().clone();
        let mut additions = Vec::with_capacity(self.battery.len());
        for add in &self.battery {
            let what = format!("battery {}", add.label);
            let source = comodule(f, &hopf, &add.source, &what)?;
            let target = comodule(f, &hopf, &add.target, &what)?;
            let map = parse_matrix(f, &add.map, target.dim(), source.dim(), &what)?;
            additions.push(BatteryAddition {
                label: add.label.clone(),
                source,
                target,
                map,
            });
        }
        let mut checks = match &self.checks {
            Some(c) => c.clone(),
            None => Check::ALL.to_vec(),
        };
        checks.sort();
        checks.dedup();
        Ok(Built {
            field: f,
            hopf,
            action: Arc::new(action),
            gamma,
            points,
            additions,
            checks,
        })
    }
}
