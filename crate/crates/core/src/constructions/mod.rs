//! Factories for the shipped representations, each with a membership test for
//! the zero set of `μ` and, where the set is nonempty, a sampler for it.

use std::fmt;
use std::str::FromStr;

use rand::RngCore;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{BaseField, Field};
use crate::linalg::Matrix;
use crate::ssr::SsrData;

pub mod binary_cubics;
pub mod common;
pub mod exterior;
pub mod hom_ef;
pub mod j_commutant;
pub mod spinor;
pub mod tautological;
pub mod three_forms;

pub use binary_cubics::{binary_cubics, BinaryCubics};
pub use hom_ef::{hom_ef, HomEF};
pub use j_commutant::{j_commutant, JCommutant};
pub use spinor::HalfSpinor;
pub use tautological::{tautological, Tautological};
pub use three_forms::{PrimitiveThreeForms, ThreeForms};

/// A representation together with its zero-set test.
pub trait Model<K: Field> {
    fn ssr(&self) -> &SsrData<K>;

    /// Membership in `{A ≠ 0 : μ(A) = 0}` by a test that does not evaluate `μ`.
    fn zero_set_oracle(&self, v: &[K::Elem]) -> bool;

    /// A random member of the zero set, or `None` when none is available.
    fn sample_zero_set(&self, rng: &mut dyn RngCore) -> Option<Vec<K::Elem>>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionId {
    BinaryCubics,
    Tautological { n: usize },
    JCommutant { n: usize, lambda: i64 },
    HomEF { m: usize },
    ThreeForms6,
    PrimitiveThreeForms6,
    HalfSpinor12,
}

impl ConstructionId {
    /// One instance of every family, with small parameters.
    pub fn all_default() -> Vec<ConstructionId> {
        vec![
            ConstructionId::BinaryCubics,
            ConstructionId::Tautological { n: 2 },
            ConstructionId::JCommutant { n: 2, lambda: 1 },
            ConstructionId::HomEF { m: 3 },
            ConstructionId::ThreeForms6,
            ConstructionId::PrimitiveThreeForms6,
            ConstructionId::HalfSpinor12,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            ConstructionId::BinaryCubics => binary_cubics::ID,
            ConstructionId::Tautological { .. } => tautological::ID,
            ConstructionId::JCommutant { .. } => j_commutant::ID,
            ConstructionId::HomEF { .. } => hom_ef::ID,
            ConstructionId::ThreeForms6 => three_forms::ID,
            ConstructionId::PrimitiveThreeForms6 => three_forms::PRIMITIVE_ID,
            ConstructionId::HalfSpinor12 => spinor::ID,
        }
    }

    /// Parses a name and fills parameters from `params`, falling back to defaults.
    pub fn from_name(name: &str, params: &Value) -> Result<Self> {
        let key: String = name
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        let uint = |field: &str, default: usize| -> Result<usize> {
            match params.get(field) {
                None | Some(Value::Null) => Ok(default),
                Some(v) => v
                    .as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Parse(format!("parameter {field} must be a nonnegative integer"))),
            }
        };
        let id = match key.as_str() {
            "binarycubics" | "cubics" => ConstructionId::BinaryCubics,
            "tautological" | "sp" => ConstructionId::Tautological { n: uint("n", 2)? },
            "jcommutant" => {
                let lambda = match params.get("lambda_j").or_else(|| params.get("lambda")) {
                    None | Some(Value::Null) => 1,
                    Some(v) => v
                        .as_i64()
                        .ok_or_else(|| Error::Parse("lambda_j must be an integer".into()))?,
                };
                ConstructionId::JCommutant { n: uint("n", 2)?, lambda }
            }
            "homef" => ConstructionId::HomEF { m: uint("m", 3)? },
            "threeforms6" | "threeforms" => ConstructionId::ThreeForms6,
            "primitivethreeforms6" | "primitivethreeforms" => ConstructionId::PrimitiveThreeForms6,
            "halfspinor12" | "halfspinor" | "spinor" => ConstructionId::HalfSpinor12,
            _ => return Err(Error::Parse(format!("unknown construction {name}"))),
        };
        id.validate()?;
        Ok(id)
    }

    fn validate(&self) -> Result<()> {
        match self {
            ConstructionId::Tautological { n: 0 } | ConstructionId::JCommutant { n: 0, .. } => {
                Err(Error::DimensionMismatch("n must be positive".into()))
            }
            ConstructionId::JCommutant { lambda: 0, .. } => Err(Error::InvalidJ("λ must be nonzero".into())),
            ConstructionId::HomEF { m: 0 } => Err(Error::DimensionMismatch("m must be positive".into())),
            _ => Ok(()),
        }
    }

    pub fn params(&self) -> Value {
        match self {
            ConstructionId::Tautological { n } => json!({"n": n}),
            ConstructionId::JCommutant { n, lambda } => json!({"n": n, "lambda_j": lambda}),
            ConstructionId::HomEF { m } => json!({"m": m}),
            _ => json!({}),
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionId::Tautological { n } => write!(f, "{}(n={n})", self.name()),
            ConstructionId::JCommutant { n, lambda } => write!(f, "{}(n={n}, λ={lambda})", self.name()),
            ConstructionId::HomEF { m } => write!(f, "{}(m={m})", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

impl FromStr for ConstructionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionId::from_name(s, &Value::Null)
    }
}

/// Optional matrix parameters: `J` for the commutant family, `g` for `Hom(E, F)`,
/// `Ω` for primitive forms.
#[derive(Clone, Debug)]
pub struct ExtraParams<E> {
    pub matrix: Option<Matrix<E>>,
}

impl<E> Default for ExtraParams<E> {
    fn default() -> Self {
        ExtraParams { matrix: None }
    }
}

pub fn build<K: BaseField + 'static>(id: &ConstructionId, k: &K) -> Result<Box<dyn Model<K>>> {
    build_with(id, k, ExtraParams::default())
}

pub fn build_with<K: BaseField + 'static>(
    id: &ConstructionId,
    k: &K,
    extra: ExtraParams<K::Elem>,
) -> Result<Box<dyn Model<K>>> {
    id.validate()?;
    Ok(match id {
        ConstructionId::BinaryCubics => Box::new(BinaryCubics::new(k)?),
        ConstructionId::Tautological { n } => Box::new(Tautological::new(k, *n)?),
        ConstructionId::JCommutant { n, lambda } => {
            Box::new(JCommutant::new(k, *n, &k.from_i64(*lambda), extra.matrix)?)
        }
        ConstructionId::HomEF { m } => Box::new(HomEF::new(k, *m, extra.matrix)?),
        ConstructionId::ThreeForms6 => Box::new(ThreeForms::new(k)?),
        ConstructionId::PrimitiveThreeForms6 => Box::new(PrimitiveThreeForms::new(k, extra.matrix)?),
        ConstructionId::HalfSpinor12 => Box::new(HalfSpinor::new(k)?),
    })
}

/// Just the data of a construction.
pub fn construct<K: BaseField + 'static>(id: &ConstructionId, k: &K) -> Result<SsrData<K>> {
    Ok(build(id, k)?.ssr().clone())
}
