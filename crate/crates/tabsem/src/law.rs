//! The scalar laws and their packaging as named binary operations.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::value::{ExtendedReal, NEG_INF, POS_INF};

/// Declared algebraic behaviour of a law. The flags are promises made by
/// the constructor; `check_semiring_axioms` can falsify them on samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawFlags {
    pub commutative: bool,
    pub associative: bool,
    pub idempotent: bool,
}

type ApplyFn = dyn Fn(ExtendedReal, ExtendedReal) -> Result<ExtendedReal> + Send + Sync;

/// A named binary operation on coefficients, with an optional neutral
/// element and declared flags.
#[derive(Clone)]
pub struct BinaryLaw {
    name: String,
    neutral: Option<ExtendedReal>,
    flags: LawFlags,
    apply: Arc<ApplyFn>,
}

impl BinaryLaw {
    pub fn custom(
        name: impl Into<String>,
        neutral: Option<ExtendedReal>,
        flags: LawFlags,
        apply: impl Fn(ExtendedReal, ExtendedReal) -> Result<ExtendedReal> + Send + Sync + 'static,
    ) -> Self {
        BinaryLaw {
            name: name.into(),
            neutral,
            flags,
            apply: Arc::new(apply),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn neutral(&self) -> Option<ExtendedReal> {
        self.neutral
    }

    pub fn flags(&self) -> LawFlags {
        self.flags
    }

    pub fn apply(&self, x: ExtendedReal, y: ExtendedReal) -> Result<ExtendedReal> {
        (self.apply)(x, y)
    }

    /// min over `[0,+inf]`; neutral `+inf`.
    pub fn min() -> Self {
        Self::custom(
            "min",
            Some(POS_INF),
            ALL_FLAGS,
            |x, y| Ok(x.min(y)),
        )
    }

    /// max over `[0,+inf]`; neutral 0.
    pub fn max() -> Self {
        Self::custom(
            "max",
            Some(ExtendedReal::new(0.0)),
            ALL_FLAGS,
            |x, y| Ok(x.max(y)),
        )
    }

    /// Ordinary sum; neutral 0.
    pub fn sum() -> Self {
        Self::custom("sum", Some(ExtendedReal::new(0.0)), COMM_ASSOC, law_sum)
    }

    /// Ordinary product; neutral 1.
    pub fn product() -> Self {
        Self::custom("prod", Some(ExtendedReal::new(1.0)), COMM_ASSOC, law_prod)
    }

    /// The base-`a` exponential sum `log_a(a^x + a^y)`.
    ///
    /// Neutral is `-inf` for `a > 1` and `+inf` for `a < 1` (the argument
    /// whose power vanishes).
    pub fn log_sum(a: f64) -> Result<Self> {
        check_log_base(a)?;
        let neutral = if a > 1.0 { NEG_INF } else { POS_INF };
        Ok(Self::custom(
            format!("log:a={a}"),
            Some(neutral),
            COMM_ASSOC,
            move |x, y| law_log_sum(x, y, a),
        ))
    }

    /// The exponent-`n` norm sum `(x^n + y^n)^(1/n)` on nonnegatives;
    /// neutral 0.
    pub fn holder(n: f64) -> Result<Self> {
        if n.is_nan() || n < 1.0 {
            return Err(Error::InvalidParameter {
                law: "holder",
                reason: format!("exponent n must be >= 1, got {n}"),
            });
        }
        Ok(Self::custom(
            format!("holder:n={n}"),
            Some(ExtendedReal::new(0.0)),
            COMM_ASSOC,
            move |x, y| law_holder(x, y, n),
        ))
    }

    /// The shifted sum `x + y - 1`; neutral 1.
    pub fn shifted_sum() -> Self {
        Self::custom(
            "shifted_sum",
            Some(ExtendedReal::new(1.0)),
            COMM_ASSOC,
            law_shifted_sum,
        )
    }

    /// The complemented product `x + y - xy`; neutral 0, and 1 absorbing.
    pub fn complemented_product() -> Self {
        Self::custom(
            "comp_prod",
            Some(ExtendedReal::new(0.0)),
            COMM_ASSOC,
            law_comp_prod,
        )
    }

    /// Boolean or on `{0,1}` (nonzero counts as true); neutral 0.
    pub fn boolean_or() -> Self {
        Self::custom("or", Some(ExtendedReal::new(0.0)), ALL_FLAGS, |x, y| {
            Ok(bit(x.get() != 0.0 || y.get() != 0.0))
        })
    }

    /// Boolean and on `{0,1}`; neutral 1.
    pub fn boolean_and() -> Self {
        Self::custom("and", Some(ExtendedReal::new(1.0)), ALL_FLAGS, |x, y| {
            Ok(bit(x.get() != 0.0 && y.get() != 0.0))
        })
    }

    /// Looks a law up by CLI token: one of `min`, `max`, `sum`, `prod`,
    /// `shifted_sum`, `comp_prod`, `or`, `and`, `log:a=<real>`,
    /// `holder:n=<real>`.
    pub fn from_token(token: &str) -> Result<Self> {
        match token {
            "min" => return Ok(Self::min()),
            "max" => return Ok(Self::max()),
            "sum" => return Ok(Self::sum()),
            "prod" => return Ok(Self::product()),
            "shifted_sum" => return Ok(Self::shifted_sum()),
            "comp_prod" => return Ok(Self::complemented_product()),
            "or" => return Ok(Self::boolean_or()),
            "and" => return Ok(Self::boolean_and()),
            _ => {}
        }
        match crate::semiring::split_token(token)? {
            ("log", Some(("a", a))) => Self::log_sum(a),
            ("holder", Some(("n", n))) => Self::holder(n),
            ("log", _) => Err(Error::MissingParameter {
                name: "log".into(),
                param: "a",
            }),
            ("holder", _) => Err(Error::MissingParameter {
                name: "holder".into(),
                param: "n",
            }),
            _ => Err(Error::UnknownName(token.to_string())),
        }
    }
}

impl fmt::Debug for BinaryLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryLaw")
            .field("name", &self.name)
            .field("neutral", &self.neutral)
            .field("flags", &self.flags)
            .finish()
    }
}

pub(crate) const ALL_FLAGS: LawFlags = LawFlags {
    commutative: true,
    associative: true,
    idempotent: true,
};

pub(crate) const COMM_ASSOC: LawFlags = LawFlags {
    commutative: true,
    associative: true,
    idempotent: false,
};

fn bit(b: bool) -> ExtendedReal {
    ExtendedReal::new(if b { 1.0 } else { 0.0 })
}

fn check_log_base(a: f64) -> Result<()> {
    if a.is_nan() || a <= 0.0 || a == 1.0 || a.is_infinite() {
        return Err(Error::InvalidParameter {
            law: "log",
            reason: format!("base a must be positive, finite, and not 1, got {a}"),
        });
    }
    Ok(())
}

pub fn law_sum(x: ExtendedReal, y: ExtendedReal) -> Result<ExtendedReal> {
    x.checked_add(y)
}

pub fn law_prod(x: ExtendedReal, y: ExtendedReal) -> Result<ExtendedReal> {
    x.checked_mul(y)
}

/// `log_a(a^x + a^y)`, evaluated as a correction to the dominant argument
/// so huge exponents never overflow.
pub fn law_log_sum(x: ExtendedReal, y: ExtendedReal, a: f64) -> Result<ExtendedReal> {
    check_log_base(a)?;
    // The argument whose power vanishes is neutral; the one whose power
    // blows up is absorbing.
    let (vanishing, blowing) = if a > 1.0 { (NEG_INF, POS_INF) } else { (POS_INF, NEG_INF) };
    if x == vanishing {
        return Ok(y);
    }
    if y == vanishing {
        return Ok(x);
    }
    if x == blowing || y == blowing {
        return Ok(blowing);
    }
    let ln_a = a.ln();
    let dominant = if a > 1.0 { x.max(y) } else { x.min(y) };
    let gap = (x.get() - y.get()).abs();
    // a^(-gap) for a > 1, a^(+gap) for a < 1: always in (0, 1].
    let small = (-gap * ln_a.abs()).exp();
    Ok(ExtendedReal::new(dominant.get() + small.ln_1p() / ln_a))
}

/// `(x^n + y^n)^(1/n)` on nonnegatives, scaled by the larger argument so
/// `x (+) 0 = x` holds exactly and large inputs cannot overflow.
pub fn law_holder(x: ExtendedReal, y: ExtendedReal, n: f64) -> Result<ExtendedReal> {
    for v in [x, y] {
        if v.get() < 0.0 {
            return Err(Error::NegativeOperand {
                law: "holder",
                value: v.get(),
            });
        }
    }
    let m = x.max(y);
    if m.get() == 0.0 || !m.is_finite() {
        return Ok(m);
    }
    let lo = x.min(y).get() / m.get();
    Ok(ExtendedReal::new(
        m.get() * (1.0 + lo.powf(n)).powf(1.0 / n),
    ))
}

pub fn law_shifted_sum(x: ExtendedReal, y: ExtendedReal) -> Result<ExtendedReal> {
    x.checked_add(y)?.checked_sub(ExtendedReal::new(1.0))
}

pub fn law_comp_prod(x: ExtendedReal, y: ExtendedReal) -> Result<ExtendedReal> {
    let sum = x.checked_add(y)?;
    let prod = x.checked_mul(y)?;
    sum.checked_sub(prod)
}
