//! Named pairs of laws with their neutrals and sampling domains.

use crate::error::{Error, Result};
use crate::law::BinaryLaw;
use crate::value::ExtendedReal;

/// The interval coefficients are drawn from when sampling a spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `{0, 1}`.
    Boolean,
    /// `[0, 1]`.
    UnitInterval,
    /// `[0, +inf]`, sampled on `[0, 100]`.
    NonNegative,
    /// All reals, sampled on `[0, 100]`.
    AllReals,
}

/// An addition/multiplication law pair. `zero` and `one` are the laws'
/// own neutrals; multiplication is expected to distribute over addition
/// on the declared domain.
#[derive(Debug, Clone)]
pub struct SemiringSpec {
    name: String,
    add: BinaryLaw,
    mul: BinaryLaw,
    domain: Domain,
}

impl SemiringSpec {
    /// Packages two laws. The addition law must declare commutativity.
    pub fn new(
        name: impl Into<String>,
        add: BinaryLaw,
        mul: BinaryLaw,
        domain: Domain,
    ) -> Result<Self> {
        if !add.flags().commutative {
            return Err(Error::InvalidParameter {
                law: "semiring",
                reason: format!("addition law `{}` must be commutative", add.name()),
            });
        }
        Ok(SemiringSpec {
            name: name.into(),
            add,
            mul,
            domain,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn add(&self) -> &BinaryLaw {
        &self.add
    }

    pub fn mul(&self) -> &BinaryLaw {
        &self.mul
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// The addition neutral, when the addition law has one.
    pub fn zero(&self) -> Option<ExtendedReal> {
        self.add.neutral()
    }

    /// The multiplication neutral, when the multiplication law has one.
    pub fn one(&self) -> Option<ExtendedReal> {
        self.mul.neutral()
    }

    /// `(min, +)` on `[0,+inf]`: zero `+inf`, one 0.
    pub fn tropical() -> Self {
        Self::new("tropical", BinaryLaw::min(), BinaryLaw::sum(), Domain::NonNegative).unwrap()
    }

    /// `(+, *)`: zero 0, one 1.
    pub fn counting() -> Self {
        Self::new(
            "counting",
            BinaryLaw::sum(),
            BinaryLaw::product(),
            Domain::NonNegative,
        )
        .unwrap()
    }

    /// `(max, min)` on `[0,1]`: zero 0, one 1.
    pub fn fuzzy() -> Self {
        Self::new("fuzzy", BinaryLaw::max(), BinaryLaw::min(), Domain::UnitInterval).unwrap()
    }

    /// `(or, and)` on `{0,1}`.
    pub fn boolean() -> Self {
        Self::new(
            "boolean",
            BinaryLaw::boolean_or(),
            BinaryLaw::boolean_and(),
            Domain::Boolean,
        )
        .unwrap()
    }

    /// `(shifted sum, complemented product)` on probabilities: zero 1,
    /// one 0.
    pub fn probcomp() -> Self {
        Self::new(
            "probcomp",
            BinaryLaw::shifted_sum(),
            BinaryLaw::complemented_product(),
            Domain::UnitInterval,
        )
        .unwrap()
    }

    /// `(log-sum base a, +)`: one 0, zero at the vanishing infinity.
    pub fn log_sum(a: f64) -> Result<Self> {
        Self::new(
            format!("log:a={a}"),
            BinaryLaw::log_sum(a)?,
            BinaryLaw::sum(),
            Domain::AllReals,
        )
    }

    /// `(norm-sum exponent n, *)` on nonnegatives: zero 0, one 1.
    pub fn holder(n: f64) -> Result<Self> {
        Self::new(
            format!("holder:n={n}"),
            BinaryLaw::holder(n)?,
            BinaryLaw::product(),
            Domain::NonNegative,
        )
    }

    /// Looks a spec up by name, with an optional numeric parameter for the
    /// `log_a` and `holder_n` families.
    pub fn named(name: &str, param: Option<f64>) -> Result<Self> {
        match name {
            "tropical" => Ok(Self::tropical()),
            "counting" => Ok(Self::counting()),
            "fuzzy" => Ok(Self::fuzzy()),
            "boolean" => Ok(Self::boolean()),
            "probcomp" => Ok(Self::probcomp()),
            "log" | "log_a" => match param {
                Some(a) => Self::log_sum(a),
                None => Err(Error::MissingParameter {
                    name: name.into(),
                    param: "a",
                }),
            },
            "holder" | "holder_n" => match param {
                Some(n) => Self::holder(n),
                None => Err(Error::MissingParameter {
                    name: name.into(),
                    param: "n",
                }),
            },
            _ => Err(Error::UnknownName(name.to_string())),
        }
    }

    /// Parses a CLI token: `tropical`, `counting`, `fuzzy`, `boolean`,
    /// `probcomp`, `log:a=<real>`, or `holder:n=<real>`.
    pub fn from_token(token: &str) -> Result<Self> {
        let (name, param) = split_token(token)?;
        match param {
            None => Self::named(name, None),
            Some(("a", v)) if name == "log" => Self::named(name, Some(v)),
            Some(("n", v)) if name == "holder" => Self::named(name, Some(v)),
            Some(_) => Err(Error::UnknownName(token.to_string())),
        }
    }
}

/// Splits `name[:key=value]`, parsing the value as a float.
pub(crate) fn split_token(token: &str) -> Result<(&str, Option<(&str, f64)>)> {
    let Some((name, rest)) = token.split_once(':') else {
        return Ok((token, None));
    };
    let Some((key, value)) = rest.split_once('=') else {
        return Err(Error::UnknownName(token.to_string()));
    };
    let value: f64 = value
        .parse()
        .map_err(|_| Error::InvalidValue(value.to_string()))?;
    Ok((name, Some((key, value))))
}
