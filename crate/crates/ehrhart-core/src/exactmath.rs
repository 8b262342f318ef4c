//! Exact rational scalars, dense univariate rational polynomials, binomial
//! coefficients, and exact interpolation.
//!
//! This is the numeric substrate for every other module. There is no
//! floating point anywhere: all results are exact equalities.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// `num_rational::BigRational` maintains exactly those invariants, so it is
/// used directly. Its `Display`/`FromStr` give the canonical `"p/q"` (or
/// `"p"` when q = 1) serialization.
pub type Rational = BigRational;

/// Build `num/den` as an exact rational. Fails on a zero denominator.
pub fn rat(num: i64, den: i64) -> Result<Rational> {
    if den == 0 {
        return Err(Error::InvalidArgument(
            "rational with zero denominator".into(),
        ));
    }
    Ok(BigRational::new(num.into(), den.into()))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(n.into())
}

pub(crate) fn rat_big(n: BigInt) -> Rational {
    BigRational::from_integer(n)
}

/// Parse the canonical `"p/q"` / `"p"` form.
pub fn rat_from_str(s: &str) -> Result<Rational> {
    s.parse::<BigRational>()
        .map_err(|e| Error::InvalidArgument(format!("bad rational {s:?}: {e}")))
}

/// Binomial coefficient C(n, k).
///
/// Returns 0 when k < 0, and follows the falling-factorial definition
/// otherwise, so C(n, k) = 0 whenever 0 <= n < k.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k {
        num *= BigInt::from(n - t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

/// Dense univariate polynomial over Q, coefficients ascending by power.
///
/// The coefficient of n^i sits at index i; the last stored coefficient is
/// nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct QPolynomial {
    coeffs: Vec<Rational>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial {
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        QPolynomial {
            coeffs: vec![Rational::one()],
        }
    }

    /// Normalizing constructor: trims trailing zero coefficients.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Rational::zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Index of the last nonzero coefficient (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of n^i, zero beyond the stored degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().expect("coeffs never empty")
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Exact evaluation at x (Horner).
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rat_int(x))
    }

    pub fn derivative(&self) -> QPolynomial {
        if self.degree() == 0 {
            return QPolynomial::zero();
        }
        QPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> QPolynomial {
        QPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> QPolynomial {
        let mut acc = QPolynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Ascending `"p/q"` strings, the canonical serialized form.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings(strings: &[String]) -> Result<Self> {
        let coeffs = strings
            .iter()
            .map(|s| rat_from_str(s))
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("empty coefficient list".into()));
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// LaTeX rendering, descending powers, `\frac{p}{q}` for non-integers.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                if abs.is_integer() {
                    out.push_str(&abs.to_string());
                } else {
                    out.push_str(&format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom()));
                }
            }
            match i {
                0 => {}
                1 => out.push('n'),
                _ => out.push_str(&format!("n^{{{i}}}")),
            }
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    /// Human form, descending powers: `13/6 n^3 + n^2 - 1/6 n + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}n", if show_coeff { " " } else { "" })?,
                _ => write!(f, "{}n^{i}", if show_coeff { " " } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        QPolynomial::from_strings(&strings).map_err(serde::de::Error::custom)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        QPolynomial::from_coeffs(out)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    /// Exact convolution product.
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

/// The polynomial C(n + shift, d) in n, i.e. the product
/// (n + shift)(n + shift - 1) ... (n + shift - d + 1) / d!.
pub fn binomial_poly(shift: i64, d: usize) -> QPolynomial {
    let mut p = QPolynomial::one();
    let mut factorial = BigInt::one();
    for t in 0..d {
        p = &p * &QPolynomial::from_coeffs(vec![rat_int(shift - t as i64), Rational::one()]);
        factorial *= BigInt::from(t as i64 + 1);
    }
    p.scale(&Rational::new(BigInt::one(), factorial))
}

/// Interpolate the unique polynomial of degree <= samples-1 through
/// rational sample points with pairwise distinct abscissae.
pub fn interpolate_points(samples: &[(Rational, Rational)]) -> Result<QPolynomial> {
    if samples.is_empty() {
        return Err(Error::InvalidArgument("no samples to interpolate".into()));
    }
    for (i, (xi, _)) in samples.iter().enumerate() {
        for (xj, _) in samples.iter().skip(i + 1) {
            if xi == xj {
                return Err(Error::InvalidArgument(format!(
                    "duplicate interpolation abscissa {xi}"
                )));
            }
        }
    }
    // Vandermonde system, solved by exact Gaussian elimination.
    let k = samples.len();
    let matrix: Vec<Vec<Rational>> = samples
        .iter()
        .map(|(x, _)| {
            let mut row = Vec::with_capacity(k);
            let mut p = Rational::one();
            for _ in 0..k {
                row.push(p.clone());
                p *= x;
            }
            row
        })
        .collect();
    let rhs: Vec<Rational> = samples.iter().map(|(_, y)| y.clone()).collect();
    let coeffs = linalg::solve(&matrix, &rhs)
        .expect("Vandermonde matrix with distinct abscissae is nonsingular");
    Ok(QPolynomial::from_coeffs(coeffs))
}

/// Interpolate integer lattice-count samples (n, count).
pub fn interpolate(samples: &[(i64, BigInt)]) -> Result<QPolynomial> {
    let pts: Vec<(Rational, Rational)> = samples
        .iter()
        .map(|(n, c)| (rat_int(*n), rat_big(c.clone())))
        .collect();
    interpolate_points(&pts)
}

/// Delta-vector (h*-vector) of a degree-d Ehrhart polynomial: integer
/// entries delta_0..delta_d with delta_0 = 1.
///
/// Nonnegativity holds for every genuine integral polytope and is asserted
/// by the validation suites, not by this type: transforms of arbitrary
/// polynomials may legitimately produce negative entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaVector {
    entries: Vec<BigInt>,
}

impl DeltaVector {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("empty delta-vector".into()));
        }
        if !entries[0].is_one() {
            return Err(Error::InvalidArgument(format!(
                "delta_0 must be 1, got {}",
                entries[0]
            )));
        }
        Ok(DeltaVector { entries })
    }

    pub fn from_integers(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Sum of all entries: the normalized volume d! * leading coefficient.
    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }
}

impl fmt::Display for DeltaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for DeltaVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let ints: Vec<i128> = self
            .entries
            .iter()
            .map(|e| {
                i128::try_from(e)
                    .map_err(|_| serde::ser::Error::custom(format!("delta entry {e} exceeds i128")))
            })
            .collect::<std::result::Result<_, S::Error>>()?;
        ints.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DeltaVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let ints = Vec::<i128>::deserialize(deserializer)?;
        DeltaVector::new(ints.into_iter().map(BigInt::from).collect())
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        rat(n, d).unwrap()
    }

    #[test]
    fn rat_normalizes_sign_and_gcd() {
        assert_eq!(q(26, -12), q(-13, 6));
        assert_eq!(q(0, 5), q(0, 1));
        assert_eq!(q(12, 6) + q(1, 6), q(13, 6));
        assert!(rat(1, 0).is_err());
    }

    #[test]
    fn rational_serialization_is_canonical() {
        assert_eq!(q(-13, 6).to_string(), "-13/6");
        assert_eq!(q(4, 2).to_string(), "2");
        assert_eq!(rat_from_str("-13/6").unwrap(), q(-13, 6));
        assert_eq!(rat_from_str("7").unwrap(), q(7, 1));
        assert!(rat_from_str("x").is_err());
    }

    #[test]
    fn binomial_values_and_out_of_range() {
        assert_eq!(binomial(3, 2), BigInt::from(3));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, -1), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 1..=40i64 {
            for k in 0..=n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k) + binomial(n - 1, k - 1),
                    "Pascal fails at ({n},{k})"
                );
            }
        }
    }

    /// 7n+1 times the m=13 tetrahedron polynomial, convolved by hand.
    #[test]
    fn poly_mul_matches_hand_convolution() {
        let seg7 = QPolynomial::from_integers(&[1, 7]);
        let q13 = QPolynomial::from_coeffs(vec![q(1, 1), q(-1, 6), q(1, 1), q(13, 6)]);
        let prod = &seg7 * &q13;
        let expected =
            QPolynomial::from_coeffs(vec![q(1, 1), q(41, 6), q(-1, 6), q(55, 6), q(91, 6)]);
        assert_eq!(prod, expected);
    }

    #[test]
    fn poly_mul_identity_and_large_product() {
        let q13 = QPolynomial::from_coeffs(vec![q(1, 1), q(-1, 6), q(1, 1), q(13, 6)]);
        assert_eq!(&q13 * &QPolynomial::one(), q13);

        // (10n+1)^2 * i(Q_100, n)
        let seg10 = QPolynomial::from_integers(&[1, 10]);
        let q100 = QPolynomial::from_coeffs(vec![q(1, 1), q(-44, 3), q(1, 1), q(50, 3)]);
        let prod = &(&seg10 * &seg10) * &q100;
        let expected = QPolynomial::from_coeffs(vec![
            q(1, 1),
            q(16, 3),
            q(-577, 3),
            q(-1430, 1),
            q(1300, 3),
            q(5000, 3),
        ]);
        assert_eq!(prod, expected);
    }

    #[test]
    fn poly_eval_exact() {
        let q13 = QPolynomial::from_coeffs(vec![q(1, 1), q(-1, 6), q(1, 1), q(13, 6)]);
        assert_eq!(q13.eval_int(1), q(4, 1));
        assert_eq!(q13.eval_int(0), q(1, 1));
        let q100 = QPolynomial::from_coeffs(vec![q(1, 1), q(-44, 3), q(1, 1), q(50, 3)]);
        assert_eq!(q100.eval(&q(1, 2)), q(-4, 1));
    }

    #[test]
    fn interpolation_recovers_printed_polynomials() {
        let samples: Vec<(i64, BigInt)> = [(0, 1), (1, 4), (2, 22), (3, 68)]
            .iter()
            .map(|&(n, c)| (n, BigInt::from(c)))
            .collect();
        let p = interpolate(&samples).unwrap();
        let expected = QPolynomial::from_coeffs(vec![q(1, 1), q(-1, 6), q(1, 1), q(13, 6)]);
        assert_eq!(p, expected);

        let m = 9;
        let seg = interpolate(&[(0, BigInt::from(1)), (1, BigInt::from(m + 1))]).unwrap();
        assert_eq!(seg, QPolynomial::from_integers(&[1, m]));

        let constant = interpolate(&[
            (0, BigInt::from(1)),
            (1, BigInt::from(1)),
            (2, BigInt::from(1)),
        ])
        .unwrap();
        assert_eq!(constant, QPolynomial::one());
    }

    #[test]
    fn interpolation_rejects_duplicate_abscissae() {
        let res = interpolate(&[(1, BigInt::from(2)), (1, BigInt::from(3))]);
        assert!(matches!(res, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn display_matches_printed_style() {
        let q13 = QPolynomial::from_coeffs(vec![q(1, 1), q(-1, 6), q(1, 1), q(13, 6)]);
        assert_eq!(q13.to_string(), "13/6 n^3 + n^2 - 1/6 n + 1");
        let q12 = QPolynomial::from_integers(&[1, 0, 1, 2]);
        assert_eq!(q12.to_string(), "2 n^3 + n^2 + 1");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(QPolynomial::from_integers(&[1, 1]).to_string(), "n + 1");
        assert_eq!(q13.to_latex(), "\\frac{13}{6}n^{3}+n^{2}-\\frac{1}{6}n+1");
    }

    #[test]
    fn binomial_poly_expands_correctly() {
        // C(n+3, 3) = (n+3)(n+2)(n+1)/6
        let p = binomial_poly(3, 3);
        assert_eq!(p.eval_int(0), q(1, 1));
        assert_eq!(p.eval_int(1), q(4, 1));
        assert_eq!(p.eval_int(2), q(10, 1));
        assert_eq!(p.eval_int(-1), q(0, 1));
    }

    #[test]
    fn delta_vector_validation() {
        assert!(DeltaVector::from_integers(&[1, 0, 12, 0]).is_ok());
        assert!(DeltaVector::from_integers(&[2, 0]).is_err());
        assert!(DeltaVector::new(vec![]).is_err());
        let d = DeltaVector::from_integers(&[1, 0, 12, 0]).unwrap();
        assert_eq!(d.dim(), 3);
        assert_eq!(d.sum(), BigInt::from(13));
    }

    #[test]
    fn qpolynomial_json_round_trip() {
        let q13 = QPolynomial::from_coeffs(vec![q(1, 1), q(-1, 6), q(1, 1), q(13, 6)]);
        let json = serde_json::to_string(&q13).unwrap();
        assert_eq!(json, r#"["1","-1/6","1","13/6"]"#);
        let back: QPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q13);
    }
}
