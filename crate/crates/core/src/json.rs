//! JSON descriptors for fields, twisted specs and codes given by generators.
//!
//! ```json
//! {"field": {"p": 2, "m": 4}, "S": ["1", "w", "w^12"], "v": "ones",
//!  "eta": "w^6", "k": 5, "extended": true}
//! ```
//!
//! Elements are strings in the field grammar or plain integers below p.
//! `"v"` may also be `"ones"` or `"w"`, the latter meaning v = w(S).

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::FMatrix;
use crate::twisted::{w_vector, TwistedSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u64,
    #[serde(default = "one")]
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

fn one() -> u32 {
    1
}

impl FieldJson {
    pub fn build(&self) -> Result<Field> {
        Field::new(self.p, self.m, self.modulus.as_deref())
    }

    /// Descriptor naming the modulus explicitly only for extension fields.
    pub fn describe(f: &Field) -> FieldJson {
        FieldJson {
            p: f.characteristic() as u64,
            m: f.degree(),
            modulus: (f.degree() > 1).then(|| f.modulus().iter().map(|&c| c as u64).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemJson {
    Int(i64),
    Text(String),
}

impl ElemJson {
    pub fn resolve(&self, f: &Field) -> Result<Elem> {
        match self {
            ElemJson::Int(v) if *v < 0 => Err(Error::ValueOutOfField(v.to_string())),
            ElemJson::Int(v) => f.parse(&v.to_string()),
            ElemJson::Text(s) => f.parse(s),
        }
    }
}

fn resolve_all(f: &Field, xs: &[ElemJson]) -> Result<Vec<Elem>> {
    xs.iter().map(|x| x.resolve(f)).collect()
}

fn texts(f: &Field, xs: &[Elem]) -> Vec<ElemJson> {
    xs.iter().map(|&a| ElemJson::Text(f.format(a))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultipliersJson {
    List(Vec<ElemJson>),
    Named(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub field: FieldJson,
    #[serde(rename = "S")]
    pub points: Vec<ElemJson>,
    #[serde(default = "unit_multipliers")]
    pub v: MultipliersJson,
    pub eta: ElemJson,
    pub k: usize,
    #[serde(default)]
    pub extended: bool,
}

fn unit_multipliers() -> MultipliersJson {
    MultipliersJson::Named("ones".into())
}

impl SpecJson {
    pub fn build(&self) -> Result<TwistedSpec> {
        let f = self.field.build()?;
        let points = resolve_all(&f, &self.points)?;
        let v = match &self.v {
            MultipliersJson::List(xs) => resolve_all(&f, xs)?,
            MultipliersJson::Named(s) if s == "ones" => vec![Elem::ONE; points.len()],
            MultipliersJson::Named(s) if s == "w" => w_vector(&f, &points)?,
            MultipliersJson::Named(s) => {
                return Err(Error::InvalidSpec(format!(
                    "v must be a list, \"ones\" or \"w\", got {s:?}"
                )))
            }
        };
        let eta = self.eta.resolve(&f)?;
        TwistedSpec::new(&f, points, v, eta, self.k, self.extended)
    }

    /// Canonical descriptor with every element written out.
    pub fn describe(spec: &TwistedSpec) -> SpecJson {
        let f = &spec.field;
        SpecJson {
            field: FieldJson::describe(f),
            points: texts(f, &spec.points),
            v: MultipliersJson::List(texts(f, &spec.v)),
            eta: ElemJson::Text(f.format(spec.eta)),
            k: spec.k,
            extended: spec.extended,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldJson,
    pub generator: Vec<Vec<ElemJson>>,
}

impl CodeJson {
    pub fn build(&self) -> Result<LinearCode> {
        let f = self.field.build()?;
        let rows = self
            .generator
            .iter()
            .map(|r| resolve_all(&f, r))
            .collect::<Result<Vec<_>>>()?;
        LinearCode::from_rows(&f, &rows)
    }

    pub fn describe(c: &LinearCode) -> CodeJson {
        let f = c.field();
        CodeJson {
            field: FieldJson::describe(f),
            generator: c.generator().row_iter().map(|r| texts(f, r)).collect(),
        }
    }
}

/// What a descriptor file holds.
#[derive(Clone, Debug)]
pub enum Input {
    Spec(TwistedSpec),
    Code(LinearCode),
}

impl Input {
    pub fn code(&self) -> Result<LinearCode> {
        match self {
            Input::Spec(s) => crate::twisted::twisted_code(s),
            Input::Code(c) => Ok(c.clone()),
        }
    }
}

/// Parses either kind of descriptor; a `"generator"` key marks a code.
pub fn parse_input(text: &str) -> Result<Input> {
    let value: Value = serde_json::from_str(text).map_err(json_err)?;
    if value.get("generator").is_some() {
        let c: CodeJson = serde_json::from_value(value).map_err(json_err)?;
        Ok(Input::Code(c.build()?))
    } else {
        let s: SpecJson = serde_json::from_value(value).map_err(json_err)?;
        Ok(Input::Spec(s.build()?))
    }
}

pub fn parse_spec(text: &str) -> Result<TwistedSpec> {
    serde_json::from_str::<SpecJson>(text).map_err(json_err)?.build()
}

pub fn parse_code(text: &str) -> Result<LinearCode> {
    serde_json::from_str::<CodeJson>(text).map_err(json_err)?.build()
}

pub fn spec_to_json(spec: &TwistedSpec) -> String {
    serde_json::to_string(&SpecJson::describe(spec)).expect("plain data")
}

pub fn code_to_json(c: &LinearCode) -> String {
    serde_json::to_string(&CodeJson::describe(c)).expect("plain data")
}

/// Rows of element strings.
pub fn matrix_strings(m: &FMatrix) -> Vec<Vec<String>> {
    m.to_strings()
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Json(e.to_string())
}
