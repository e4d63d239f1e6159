//! Square matrices over a semiring-like carrier, with product and
//! transitive closure by repeated squaring.

use crate::error::{Error, Result};
use crate::memorized::MemorizedValue;
use crate::semiring::SemiringSpec;
use crate::table::DEFAULT_COLUMN_BUDGET;
use crate::value::ExtendedReal;

/// The element operations a matrix computation needs: the two laws, their
/// neutrals, and equality (used to detect the closure fixed point).
pub trait Carrier {
    type Value: Clone;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn eq(&self, a: &Self::Value, b: &Self::Value) -> bool;
    /// Whether `add` is idempotent, a precondition of the closure.
    fn idempotent_add(&self) -> bool;
    fn name(&self) -> &str;
}

/// Scalar coefficients under a spec that has both neutrals.
pub struct ScalarCarrier<'a> {
    spec: &'a SemiringSpec,
    zero: ExtendedReal,
    one: ExtendedReal,
}

impl<'a> ScalarCarrier<'a> {
    pub fn new(spec: &'a SemiringSpec) -> Result<Self> {
        let zero = spec.zero().ok_or_else(|| Error::MissingNeutral(spec.add().name().into()))?;
        let one = spec.one().ok_or_else(|| Error::MissingNeutral(spec.mul().name().into()))?;
        Ok(ScalarCarrier { spec, zero, one })
    }
}

impl Carrier for ScalarCarrier<'_> {
    type Value = ExtendedReal;

    fn zero(&self) -> ExtendedReal {
        self.zero
    }

    fn one(&self) -> ExtendedReal {
        self.one
    }

    fn add(&self, a: &ExtendedReal, b: &ExtendedReal) -> Result<ExtendedReal> {
        self.spec.add().apply(*a, *b)
    }

    fn mul(&self, a: &ExtendedReal, b: &ExtendedReal) -> Result<ExtendedReal> {
        self.spec.mul().apply(*a, *b)
    }

    fn eq(&self, a: &ExtendedReal, b: &ExtendedReal) -> bool {
        a == b
    }

    fn idempotent_add(&self) -> bool {
        self.spec.add().flags().idempotent
    }

    fn name(&self) -> &str {
        self.spec.name()
    }
}

/// Memorized values, with an optional tie epsilon and the address-set
/// budget.
pub struct MemorizedCarrier {
    pub tie_epsilon: f64,
    pub budget: usize,
}

impl Default for MemorizedCarrier {
    fn default() -> Self {
        MemorizedCarrier {
            tie_epsilon: 0.0,
            budget: DEFAULT_COLUMN_BUDGET,
        }
    }
}

impl Carrier for MemorizedCarrier {
    type Value = MemorizedValue;

    fn zero(&self) -> MemorizedValue {
        MemorizedValue::zero()
    }

    fn one(&self) -> MemorizedValue {
        MemorizedValue::one()
    }

    fn add(&self, a: &MemorizedValue, b: &MemorizedValue) -> Result<MemorizedValue> {
        Ok(a.plus_with_epsilon(b, self.tie_epsilon))
    }

    fn mul(&self, a: &MemorizedValue, b: &MemorizedValue) -> Result<MemorizedValue> {
        a.times_budgeted(b, self.budget)
    }

    fn eq(&self, a: &MemorizedValue, b: &MemorizedValue) -> bool {
        a == b
    }

    fn idempotent_add(&self) -> bool {
        true
    }

    fn name(&self) -> &str {
        "memorized"
    }
}

/// A dense n-by-n matrix of carrier values, row major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<V> {
    n: usize,
    entries: Vec<V>,
}

impl<V: Clone> SquareMatrix<V> {
    /// A matrix with every entry `fill`.
    pub fn filled(n: usize, fill: V) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        SquareMatrix {
            n,
            entries: vec![fill; n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> V) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &V {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: V) {
        self.entries[i * self.n + j] = value;
    }

    /// Diagonal of ones, zeros elsewhere.
    pub fn identity<C: Carrier<Value = V>>(n: usize, carrier: &C) -> Self {
        let mut m = SquareMatrix::filled(n, carrier.zero());
        for i in 0..n {
            m.set(i, i, carrier.one());
        }
        m
    }

    /// Entry-wise sum.
    pub fn add<C: Carrier<Value = V>>(&self, other: &Self, carrier: &C) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for (a, b) in self.entries.iter().zip(&other.entries) {
            entries.push(carrier.add(a, b)?);
        }
        Ok(SquareMatrix { n: self.n, entries })
    }

    /// Row-by-column product: entry (i,j) folds `a(i,k) (*) b(k,j)` over k
    /// with the carrier's addition.
    pub fn mul<C: Carrier<Value = V>>(&self, other: &Self, carrier: &C) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = carrier.zero();
                for k in 0..n {
                    let term = carrier.mul(self.get(i, k), other.get(k, j))?;
                    acc = carrier.add(&acc, &term)?;
                }
                entries.push(acc);
            }
        }
        Ok(SquareMatrix { n, entries })
    }

    fn matrix_eq<C: Carrier<Value = V>>(&self, other: &Self, carrier: &C) -> bool {
        self.n == other.n
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| carrier.eq(a, b))
    }
}

/// A stabilized closure and the number of squarings its value needed.
#[derive(Debug, Clone, PartialEq)]
pub struct Closure<V> {
    pub matrix: SquareMatrix<V>,
    /// Index of the first iterate equal to its successor; paths of length
    /// up to 2^squarings are already folded in.
    pub squarings: usize,
}

/// Squarings after which `(I + A)^(2^k)` must have reached every path of
/// length up to n-1.
pub fn closure_bound(n: usize) -> usize {
    usize::BITS as usize - (n.saturating_sub(1)).max(1).next_power_of_two().leading_zeros() as usize - 1
}

/// Computes the reachability closure of `a`: starting from `I + a`, square
/// until a fixed point. Entry (i,j) then folds the weights of all paths
/// from i to j (the diagonal includes the trivial path). Requires an
/// idempotent addition; fails with [`Error::NoConvergence`] if no fixed
/// point appears within `max(closure_bound(n), max_squarings)` squarings,
/// which happens exactly when ever-longer paths keep improving or tying.
pub fn closure<V: Clone, C: Carrier<Value = V>>(
    a: &SquareMatrix<V>,
    carrier: &C,
    max_squarings: usize,
) -> Result<Closure<V>> {
    if !carrier.idempotent_add() {
        return Err(Error::NotIdempotent(carrier.name().to_string()));
    }
    let cap = closure_bound(a.dim()).max(max_squarings);
    let mut current = SquareMatrix::identity(a.dim(), carrier).add(a, carrier)?;
    for squarings in 0..=cap {
        let next = current.mul(&current, carrier)?;
        if next.matrix_eq(&current, carrier) {
            return Ok(Closure {
                matrix: current,
                squarings,
            });
        }
        current = next;
    }
    Err(Error::NoConvergence(cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::POS_INF;
    use crate::word::Word;

    fn er(v: f64) -> ExtendedReal {
        ExtendedReal::new(v)
    }

    fn tropical_matrix(rows: &[&[f64]]) -> SquareMatrix<ExtendedReal> {
        SquareMatrix::from_fn(rows.len(), |i, j| er(rows[i][j]))
    }

    #[test]
    fn closure_bound_values() {
        assert_eq!(closure_bound(1), 0);
        assert_eq!(closure_bound(2), 0);
        assert_eq!(closure_bound(3), 1);
        assert_eq!(closure_bound(4), 2);
        assert_eq!(closure_bound(5), 2);
        assert_eq!(closure_bound(9), 3);
        assert_eq!(closure_bound(12), 4);
    }

    #[test]
    fn identity_is_mul_neutral() {
        let spec = SemiringSpec::tropical();
        let carrier = ScalarCarrier::new(&spec).unwrap();
        let a = tropical_matrix(&[&[0.0, 2.0], &[5.0, 1.0]]);
        let id = SquareMatrix::identity(2, &carrier);
        assert_eq!(id.mul(&a, &carrier).unwrap(), a);
        assert_eq!(a.mul(&id, &carrier).unwrap(), a);
    }

    #[test]
    fn two_by_two_tropical_product() {
        let spec = SemiringSpec::tropical();
        let carrier = ScalarCarrier::new(&spec).unwrap();
        let inf = f64::INFINITY;
        let a = tropical_matrix(&[&[0.0, 2.0], &[inf, 0.0]]);
        let b = tropical_matrix(&[&[0.0, 3.0], &[inf, 0.0]]);
        let expect = tropical_matrix(&[&[0.0, 2.0], &[inf, 0.0]]);
        assert_eq!(a.mul(&b, &carrier).unwrap(), expect);
    }

    #[test]
    fn one_by_one_memorized_product() {
        let carrier = MemorizedCarrier::default();
        let a = SquareMatrix::filled(
            1,
            MemorizedValue::single(Word::parse("a").unwrap(), er(1.0)).unwrap(),
        );
        let b = SquareMatrix::filled(
            1,
            MemorizedValue::single(Word::parse("b").unwrap(), er(2.0)).unwrap(),
        );
        let out = a.mul(&b, &carrier).unwrap();
        assert_eq!(
            out.get(0, 0),
            &MemorizedValue::single(Word::parse("ab").unwrap(), er(3.0)).unwrap()
        );
    }

    #[test]
    fn dimension_mismatch_is_detected() {
        let spec = SemiringSpec::tropical();
        let carrier = ScalarCarrier::new(&spec).unwrap();
        let a = tropical_matrix(&[&[0.0]]);
        let b = tropical_matrix(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_eq!(a.mul(&b, &carrier), Err(Error::DimensionMismatch(1, 2)));
    }

    #[test]
    fn closure_of_no_arrows_is_identity() {
        let spec = SemiringSpec::tropical();
        let carrier = ScalarCarrier::new(&spec).unwrap();
        let a = SquareMatrix::filled(3, POS_INF);
        let closed = closure(&a, &carrier, 16).unwrap();
        assert_eq!(closed.matrix, SquareMatrix::identity(3, &carrier));
        assert_eq!(closed.squarings, 0);
    }

    #[test]
    fn closure_chains_distances() {
        let spec = SemiringSpec::tropical();
        let carrier = ScalarCarrier::new(&spec).unwrap();
        let inf = f64::INFINITY;
        // p -> q at 2, q -> r at 3.
        let a = tropical_matrix(&[&[inf, 2.0, inf], &[inf, inf, 3.0], &[inf, inf, inf]]);
        let closed = closure(&a, &carrier, 16).unwrap();
        assert_eq!(closed.matrix.get(0, 2), &er(5.0));
        assert_eq!(closed.matrix.get(0, 0), &er(0.0));
        assert_eq!(closed.matrix.get(2, 0), &POS_INF);
        assert!(closed.squarings <= closure_bound(3));
    }

    #[test]
    fn closure_requires_idempotent_add() {
        let spec = SemiringSpec::counting();
        let carrier = ScalarCarrier::new(&spec).unwrap();
        let a = SquareMatrix::filled(2, er(1.0));
        assert_eq!(
            closure(&a, &carrier, 4),
            Err(Error::NotIdempotent("counting".into()))
        );
    }

    #[test]
    fn closure_reports_divergence() {
        // min with a strictly decreasing "multiplication" never settles.
        let add = crate::law::BinaryLaw::min();
        let mul = crate::law::BinaryLaw::custom(
            "decrement",
            Some(er(0.0)),
            crate::law::COMM_ASSOC,
            |x, y| Ok(er(x.get() + y.get() - 1.0)),
        );
        let spec = SemiringSpec::new("sinking", add, mul, crate::semiring::Domain::AllReals).unwrap();
        let carrier = ScalarCarrier::new(&spec).unwrap();
        let a = SquareMatrix::filled(2, er(0.0));
        assert!(matches!(
            closure(&a, &carrier, 8),
            Err(Error::NoConvergence(_))
        ));
    }
}
