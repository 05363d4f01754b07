//! JSON configuration.
//!
//! ```json
//! {
//!   "cartan": { "family": "A", "rank": 2 },
//!   "q": { "num": 2, "den": 1 },
//!   "lambda": [[1, 2, 3, 1]]
//! }
//! ```
//!
//! `cartan` may instead give `"matrix"` and `"d"`. Numbers may be JSON
//! integers or decimal strings (for values beyond 64 bits). `λ` indices are
//! 1-based with `i < j`; omitted pairs default to 1.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cartan::{preset, CartanDatum, Family};
use crate::coeffs::{make_params, ParamSet, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn big(&self) -> Result<BigInt> {
        match self {
            Num::Int(n) => Ok(BigInt::from(*n)),
            Num::Text(s) => BigInt::from_str(s.trim()).map_err(|_| Error::Config(format!("not an integer: '{s}'"))),
        }
    }

    fn small(&self) -> Result<i64> {
        match self {
            Num::Int(n) => Ok(*n),
            Num::Text(s) => s.trim().parse().map_err(|_| Error::Config(format!("not a small integer: '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: Num,
    #[serde(default = "one")]
    pub den: Num,
}

fn one() -> Num {
    Num::Int(1)
}

impl Rational {
    fn scalar(&self) -> Result<Scalar> {
        Scalar::from_big(self.num.big()?, self.den.big()?).map_err(|_| Error::Config("zero denominator".into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartanConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub cartan: CartanConfig,
    pub q: Rational,
    #[serde(default)]
    pub lambda: Vec<Vec<Num>>,
}

impl Default for Config {
    /// `A_2`, `q = 2`, `λ_12 = 3`.
    fn default() -> Self {
        Config {
            cartan: CartanConfig {
                family: Some("A".into()),
                rank: Some(2),
                matrix: None,
                d: None,
            },
            q: Rational {
                num: Num::Int(2),
                den: Num::Int(1),
            },
            lambda: vec![vec![Num::Int(1), Num::Int(2), Num::Int(3), Num::Int(1)]],
        }
    }
}

impl Config {
    pub fn from_json(text: &str) -> Result<Config> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Config::from_json(&text)
    }

    pub fn cartan(&self) -> Result<CartanDatum> {
        let c = &self.cartan;
        match (&c.family, c.rank, &c.matrix, &c.d) {
            (Some(f), Some(r), None, None) => preset(Family::from_str(f)?, r),
            (None, None, Some(m), Some(d)) => CartanDatum::new(m.clone(), d.clone()),
            _ => Err(Error::Config(
                "cartan needs either {family, rank} or {matrix, d}".into(),
            )),
        }
    }

    pub fn params(&self, cartan: &CartanDatum) -> Result<ParamSet> {
        let q = self.q.scalar()?;
        let mut lambda = Vec::new();
        for entry in &self.lambda {
            let [i, j, num, den] = entry.as_slice() else {
                return Err(Error::Config("lambda entries are [i, j, num, den]".into()));
            };
            let (i, j) = (i.small()?, j.small()?);
            if i < 1 || j < 1 {
                return Err(Error::Config("lambda indices are 1-based".into()));
            }
            let value = Rational {
                num: num.clone(),
                den: den.clone(),
            }
            .scalar()?;
            lambda.push((((i - 1) as usize, (j - 1) as usize), value));
        }
        make_params(q, &lambda, cartan)
    }

    /// Cartan datum and parameters together.
    pub fn resolve(&self) -> Result<(CartanDatum, ParamSet)> {
        let c = self.cartan()?;
        let p = self.params(&c)?;
        Ok((c, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_round_trips() {
        let c = Config::default();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(Config::from_json(&text).unwrap(), c);
        let (cartan, p) = c.resolve().unwrap();
        assert_eq!(cartan.rank(), 2);
        assert_eq!(p.lambda(0, 1), &Scalar::from_int(3));
    }

    #[test]
    fn explicit_matrix_and_strings() {
        let text = r#"{
            "cartan": {"matrix": [[2, -3], [-1, 2]], "d": [1, 3]},
            "q": {"num": "123456789012345678901234567890", "den": 7},
            "lambda": [[1, 2, "-5", 2]]
        }"#;
        let (c, p) = Config::from_json(text).unwrap().resolve().unwrap();
        assert_eq!(c.d(), &[1, 3]);
        assert_eq!(p.lambda(1, 0), &Scalar::new(-2, 5).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Config::from_json("{}").is_err());
        let text = r#"{"cartan": {"family": "A", "rank": 2}, "q": {"num": 1}}"#;
        assert!(matches!(
            Config::from_json(text).unwrap().resolve(),
            Err(Error::RootOfUnityViolation { .. })
        ));
        let text = r#"{"cartan": {"family": "A", "rank": 2}, "q": {"num": 2}, "lambda": [[2, 1, 3, 1]]}"#;
        assert!(Config::from_json(text).unwrap().resolve().is_err());
        let text = r#"{"cartan": {"family": "A"}, "q": {"num": 2}}"#;
        assert!(matches!(Config::from_json(text).unwrap().resolve(), Err(Error::Config(_))));
    }
}
