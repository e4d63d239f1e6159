//! Randomized falsification of the semiring identities.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::semiring::{Domain, SemiringSpec};
use crate::value::ExtendedReal;

/// The identities a weighted-path calculus forces on its coefficients,
/// plus commutativity of multiplication for laws that declare it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    MulAssociative,
    RightDistributive,
    LeftDistributive,
    MulCommutative,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::AddAssociative => "add-associative",
            Axiom::AddCommutative => "add-commutative",
            Axiom::MulAssociative => "mul-associative",
            Axiom::RightDistributive => "right-distributive",
            Axiom::LeftDistributive => "left-distributive",
            Axiom::MulCommutative => "mul-commutative",
        }
    }
}

/// A sampled triple on which an identity failed, with the two sides (or
/// the arithmetic error) that witnessed the failure.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub x: ExtendedReal,
    pub y: ExtendedReal,
    pub z: ExtendedReal,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={} y={} z={}: {}", self.x, self.y, self.z, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    /// First sampled triple that broke the identity, if any.
    pub counterexample: Option<Counterexample>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub spec_name: String,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn result(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }
}

/// Evaluates the identities on `samples` seeded pseudo-random triples from
/// the spec's domain. An identity fails on a triple when the two sides
/// differ by more than `tol` (or either side errors); the first failing
/// triple per identity is kept as the witness. Failures are data, not
/// errors.
///
/// Samples are multiples of 2⁻¹⁰, so laws built from exact float
/// operations (min, max, +, *) satisfy their identities bit-for-bit and
/// `tol = 0` is meaningful for them.
pub fn check_semiring_axioms(
    spec: &SemiringSpec,
    samples: usize,
    seed: u64,
    tol: f64,
) -> AxiomReport {
    let mut axioms = vec![
        Axiom::AddAssociative,
        Axiom::AddCommutative,
        Axiom::MulAssociative,
        Axiom::RightDistributive,
        Axiom::LeftDistributive,
    ];
    if spec.mul().flags().commutative {
        axioms.push(Axiom::MulCommutative);
    }

    let mut results: Vec<AxiomResult> = axioms
        .iter()
        .map(|&axiom| AxiomResult {
            axiom,
            counterexample: None,
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = sample(spec.domain(), &mut rng);
        let y = sample(spec.domain(), &mut rng);
        let z = sample(spec.domain(), &mut rng);
        for result in results.iter_mut() {
            if result.counterexample.is_some() {
                continue;
            }
            if let Err(detail) = holds(result.axiom, spec, x, y, z, tol) {
                result.counterexample = Some(Counterexample { x, y, z, detail });
            }
        }
    }

    AxiomReport {
        spec_name: spec.name().to_string(),
        samples,
        seed,
        tol,
        results,
    }
}

fn sample(domain: Domain, rng: &mut ChaCha8Rng) -> ExtendedReal {
    let grid = 1024.0;
    let k = match domain {
        Domain::Boolean => rng.random_range(0..=1u32) * 1024,
        Domain::UnitInterval => rng.random_range(0..=1024u32),
        Domain::NonNegative | Domain::AllReals => rng.random_range(0..=102_400u32),
    };
    ExtendedReal::new(f64::from(k) / grid)
}

fn holds(
    axiom: Axiom,
    spec: &SemiringSpec,
    x: ExtendedReal,
    y: ExtendedReal,
    z: ExtendedReal,
    tol: f64,
) -> std::result::Result<(), String> {
    match both_sides(axiom, spec, x, y, z) {
        Ok((l, r)) if l.approx_eq(r, tol) => Ok(()),
        Ok((l, r)) => Err(format!("lhs={l} rhs={r}")),
        Err(e) => Err(e.to_string()),
    }
}

fn both_sides(
    axiom: Axiom,
    spec: &SemiringSpec,
    x: ExtendedReal,
    y: ExtendedReal,
    z: ExtendedReal,
) -> crate::error::Result<(ExtendedReal, ExtendedReal)> {
    let add = |a, b| spec.add().apply(a, b);
    let mul = |a, b| spec.mul().apply(a, b);
    Ok(match axiom {
        Axiom::AddAssociative => (add(x, add(y, z)?)?, add(add(x, y)?, z)?),
        Axiom::AddCommutative => (add(x, y)?, add(y, x)?),
        Axiom::MulAssociative => (mul(x, mul(y, z)?)?, mul(mul(x, y)?, z)?),
        Axiom::RightDistributive => (mul(add(x, y)?, z)?, add(mul(x, z)?, mul(y, z)?)?),
        Axiom::LeftDistributive => (mul(x, add(y, z)?)?, add(mul(x, y)?, mul(x, z)?)?),
        Axiom::MulCommutative => (mul(x, y)?, mul(y, x)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::law::{BinaryLaw, LawFlags};

    #[test]
    fn tropical_passes_exactly() {
        let report = check_semiring_axioms(&SemiringSpec::tropical(), 1000, 42, 0.0);
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.results.len(), 6);
    }

    #[test]
    fn probcomp_distributes_within_tiny_tolerance() {
        let report = check_semiring_axioms(&SemiringSpec::probcomp(), 1000, 42, 1e-12);
        assert!(report.result(Axiom::LeftDistributive).unwrap().passed());
        assert!(report.result(Axiom::RightDistributive).unwrap().passed());
        assert!(report.all_passed());
    }

    #[test]
    fn arithmetic_mean_fails_associativity_with_witness() {
        let mean = BinaryLaw::custom(
            "mean",
            None,
            LawFlags {
                commutative: true,
                associative: false,
                idempotent: true,
            },
            |x, y| Ok(ExtendedReal::new((x.get() + y.get()) / 2.0)),
        );
        let spec = SemiringSpec::new(
            "mean-mul",
            mean,
            BinaryLaw::product(),
            crate::semiring::Domain::NonNegative,
        )
        .unwrap();
        let report = check_semiring_axioms(&spec, 1000, 42, 0.0);
        let assoc = report.result(Axiom::AddAssociative).unwrap();
        assert!(!assoc.passed());
        let witness = assoc.counterexample.as_ref().unwrap();
        // Re-check the witness by hand.
        let m = |a: f64, b: f64| (a + b) / 2.0;
        let lhs = m(witness.x.get(), m(witness.y.get(), witness.z.get()));
        let rhs = m(m(witness.x.get(), witness.y.get()), witness.z.get());
        assert_ne!(lhs, rhs);
        assert!(!report.all_passed());
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let a = check_semiring_axioms(&SemiringSpec::counting(), 200, 7, 0.0);
        let b = check_semiring_axioms(&SemiringSpec::counting(), 200, 7, 0.0);
        assert_eq!(a, b);
    }
}
