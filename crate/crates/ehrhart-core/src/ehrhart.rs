//! Ehrhart polynomial recovery, delta-vector transforms, coefficient sign
//! patterns, and exact positive-real-root counting.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::counting::{self, CountResult, CountStrategy};
use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, binomial_poly, interpolate, rat_int, DeltaVector, QPolynomial, Rational,
};
use crate::polytope::VPolytope;

/// Sign of one polynomial coefficient. Zero is its own symbol: a vanishing
/// coefficient is neither negative nor positive for the strict sign
/// contracts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
    #[serde(rename = "0")]
    Zero,
}

/// Signs of the coefficients of n^1 .. n^{d-2}, the only indices of an
/// Ehrhart polynomial that can be nonpositive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignPattern {
    pub dim: usize,
    /// coefficient index (1..=d-2) to sign
    pub signs: BTreeMap<usize, Sign>,
    /// strictly negative indices, ascending
    pub negatives: Vec<usize>,
}

impl SignPattern {
    pub fn negatives_set(&self) -> std::collections::BTreeSet<usize> {
        self.negatives.iter().copied().collect()
    }

    /// Strict positivity at every index in 1..=d-2 outside `negatives`.
    pub fn strictly_positive_elsewhere(&self) -> bool {
        self.signs
            .iter()
            .all(|(i, s)| *s == Sign::Positive || self.negatives.contains(i))
    }
}

/// Extract the sign pattern of an Ehrhart polynomial over indices 1..=d-2.
pub fn sign_pattern(p: &QPolynomial) -> Result<SignPattern> {
    let d = p.degree();
    if !p.leading().is_positive() {
        return Err(Error::InvalidEhrhartData(format!(
            "leading coefficient {} is not positive",
            p.leading()
        )));
    }
    if !p.constant_term().is_one() {
        return Err(Error::InvalidEhrhartData(format!(
            "constant term {} is not 1",
            p.constant_term()
        )));
    }
    let mut signs = BTreeMap::new();
    let mut negatives = Vec::new();
    for i in 1..=d.saturating_sub(2) {
        let c = p.coeff(i);
        let s = if c.is_negative() {
            negatives.push(i);
            Sign::Negative
        } else if c.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        };
        signs.insert(i, s);
    }
    Ok(SignPattern {
        dim: d,
        signs,
        negatives,
    })
}

/// delta_j = sum_{i=0}^{j} (-1)^i C(d+1, i) p(j - i); fails when any entry
/// is not an integer, which means p is not the Ehrhart polynomial of an
/// integral polytope.
pub fn delta_from_poly(p: &QPolynomial, d: usize) -> Result<DeltaVector> {
    if p.degree() != d {
        return Err(Error::InvalidArgument(format!(
            "polynomial degree {} but dimension {d}",
            p.degree()
        )));
    }
    if !p.constant_term().is_one() {
        return Err(Error::InvalidEhrhartData(format!(
            "constant term {} is not 1",
            p.constant_term()
        )));
    }
    let values: Vec<Rational> = (0..=d as i64).map(|n| p.eval_int(n)).collect();
    let mut entries = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut s = Rational::zero();
        for i in 0..=j {
            let term = Rational::from_integer(binomial(d as i64 + 1, i as i64)) * &values[j - i];
            if i % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        if !s.is_integer() {
            return Err(Error::InvalidEhrhartData(format!(
                "delta_{j} = {s} is not an integer"
            )));
        }
        entries.push(s.to_integer());
    }
    DeltaVector::new(entries)
}

/// Exact inverse transform: i(P, n) = sum_j delta_j C(n + d - j, d).
pub fn poly_from_delta(delta: &DeltaVector) -> QPolynomial {
    let d = delta.dim();
    let mut acc = QPolynomial::zero();
    for (j, dj) in delta.entries().iter().enumerate() {
        if dj.is_zero() {
            continue;
        }
        let term = binomial_poly((d - j) as i64, d).scale(&Rational::from_integer(dj.clone()));
        acc = &acc + &term;
    }
    acc
}

/// How a polynomial was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolynomialRoute {
    DeltaVector,
    ProductOfFactors,
    Interpolation,
}

/// All routes that apply to this polytope, each with its polynomial.
/// Disagreement between routes is a hard error carrying both polynomials.
pub fn ehrhart_routes(p: &VPolytope) -> Result<Vec<(PolynomialRoute, QPolynomial)>> {
    if p.dim() == 0 {
        return Err(Error::InvalidArgument(
            "ehrhart polynomial needs dimension >= 1".into(),
        ));
    }
    let mut routes = Vec::new();
    if p.is_simplex() && p.dim() == p.ambient_dim() {
        if let Ok(delta) = counting::simplex_delta(p) {
            routes.push((PolynomialRoute::DeltaVector, poly_from_delta(&delta)));
        }
    }
    if let Some((a, b)) = p.product_factors() {
        let pa = factor_polynomial(a)?;
        let pb = factor_polynomial(b)?;
        routes.push((PolynomialRoute::ProductOfFactors, &pa * &pb));
    }
    if routes.is_empty() {
        let counts = counting::counts_for_interpolation(p)?;
        let samples: Vec<(i64, BigInt)> = counts.iter().map(|c| (c.n, c.count.clone())).collect();
        routes.push((PolynomialRoute::Interpolation, interpolate(&samples)?));
    }
    for window in routes.windows(2) {
        if window[0].1 != window[1].1 {
            return Err(Error::RouteDisagreement {
                context: format!("{:?} vs {:?}", window[0].0, window[1].0),
                left: window[0].1.to_string(),
                right: window[1].1.to_string(),
            });
        }
    }
    Ok(routes)
}

/// Factor of a product: dimension 0 contributes the constant 1.
fn factor_polynomial(p: &VPolytope) -> Result<QPolynomial> {
    if p.dim() == 0 {
        return Ok(QPolynomial::one());
    }
    ehrhart_polynomial(p)
}

/// The Ehrhart polynomial of P: exact degree-dim(P) polynomial with
/// constant term 1. Routes through the delta-vector for full-dimensional
/// simplices, factor multiplication for declared products, and exact
/// interpolation of counted dilates otherwise; all applicable routes must
/// agree.
pub fn ehrhart_polynomial(p: &VPolytope) -> Result<QPolynomial> {
    let routes = ehrhart_routes(p)?;
    let poly = routes[0].1.clone();
    validate_ehrhart_shape(&poly, p.dim())?;
    Ok(poly)
}

fn validate_ehrhart_shape(poly: &QPolynomial, d: usize) -> Result<()> {
    if poly.degree() != d {
        return Err(Error::InvalidEhrhartData(format!(
            "computed degree {} for a dimension-{d} polytope",
            poly.degree()
        )));
    }
    if !poly.constant_term().is_one() {
        return Err(Error::InvalidEhrhartData(format!(
            "computed constant term {}",
            poly.constant_term()
        )));
    }
    if !poly.leading().is_positive() {
        return Err(Error::InvalidEhrhartData(format!(
            "computed leading coefficient {}",
            poly.leading()
        )));
    }
    // the n^{d-1} coefficient is half the normalized boundary measure
    if d >= 2 && !poly.coeff(d - 1).is_positive() {
        return Err(Error::InvalidEhrhartData(format!(
            "computed subleading coefficient {}",
            poly.coeff(d - 1)
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Sturm sequences
// ---------------------------------------------------------------------------

fn poly_divrem(num: &QPolynomial, den: &QPolynomial) -> (QPolynomial, QPolynomial) {
    assert!(!den.is_zero(), "division by zero polynomial");
    let mut rem = num.clone();
    let mut quo = vec![Rational::zero(); num.degree().saturating_sub(den.degree()) + 1];
    while !rem.is_zero() && rem.degree() >= den.degree() {
        let shift = rem.degree() - den.degree();
        let factor = rem.leading() / den.leading();
        quo[shift] = factor.clone();
        let mut sub = vec![Rational::zero(); shift];
        sub.extend(den.coeffs().iter().map(|c| c * &factor));
        let next = &rem - &QPolynomial::from_coeffs(sub);
        // exact arithmetic cancels the leading term, so the degree drops
        debug_assert!(next.is_zero() || next.degree() < rem.degree() || rem.degree() == 0);
        rem = next;
        if shift == 0 {
            break;
        }
    }
    (QPolynomial::from_coeffs(quo), rem)
}

fn poly_gcd(a: &QPolynomial, b: &QPolynomial) -> QPolynomial {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_zero() {
        return x;
    }
    // monic normalization
    let lead = x.leading().clone();
    x.scale(&(Rational::one() / lead))
}

fn squarefree_part(p: &QPolynomial) -> QPolynomial {
    if p.degree() == 0 {
        return p.clone();
    }
    let g = poly_gcd(p, &p.derivative());
    if g.degree() == 0 {
        return p.clone();
    }
    let (q, r) = poly_divrem(p, &g);
    debug_assert!(r.is_zero());
    q
}

fn sign_of(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots in (0, infinity), by a Sturm-sequence sign
/// variation count over exact rationals: V(0) - V(+inf) on the squarefree
/// part, with any root at 0 stripped first.
pub fn count_positive_real_roots(p: &QPolynomial) -> usize {
    if p.is_zero() {
        return 0;
    }
    // strip n^k so the chain starts with a nonzero constant term
    let low_zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let stripped = QPolynomial::from_coeffs(p.coeffs()[low_zeros..].to_vec());
    let f = squarefree_part(&stripped);
    if f.degree() == 0 {
        return 0;
    }
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = poly_divrem(&chain[k - 2], &chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    let at_zero = variations(chain.iter().map(|q| sign_of(q.constant_term())));
    let at_infinity = variations(chain.iter().map(|q| sign_of(q.leading())));
    at_zero - at_infinity
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Everything the suite knows about one polytope: polynomial, delta-vector,
/// sign pattern, the counts that fed interpolation, strategy provenance,
/// and the exact positive-real-root count.
#[derive(Clone, Debug, Serialize)]
pub struct EhrhartReport {
    pub description: String,
    pub dimension: usize,
    pub polynomial: QPolynomial,
    pub polynomial_pretty: String,
    pub delta: DeltaVector,
    pub signs: BTreeMap<usize, Sign>,
    pub negatives: Vec<usize>,
    pub counts: Vec<CountResult>,
    pub strategy: CountStrategy,
    pub positive_real_roots: usize,
    pub has_positive_real_root: bool,
}

/// Compute the full report. The delta-vector is obtained from the
/// polynomial transform and cross-checked against the parallelepiped
/// enumeration whenever the latter applies; a mismatch is a hard error.
pub fn analyze(p: &VPolytope, description: &str) -> Result<EhrhartReport> {
    let polynomial = ehrhart_polynomial(p)?;
    let d = p.dim();
    let delta = delta_from_poly(&polynomial, d)?;
    if p.is_simplex() && d == p.ambient_dim() {
        if let Ok(direct) = counting::simplex_delta(p) {
            if direct != delta {
                return Err(Error::RouteDisagreement {
                    context: "delta transform vs parallelepiped".into(),
                    left: delta.to_string(),
                    right: direct.to_string(),
                });
            }
        }
    }
    let pattern = sign_pattern(&polynomial)?;
    let counts = counting::counts_for_interpolation(p)?;
    let strategy = counts[0].strategy;
    let positive_real_roots = count_positive_real_roots(&polynomial);
    Ok(EhrhartReport {
        description: description.to_string(),
        dimension: d,
        polynomial_pretty: polynomial.to_string(),
        polynomial,
        delta,
        signs: pattern.signs,
        negatives: pattern.negatives,
        counts,
        strategy,
        positive_real_roots,
        has_positive_real_root: positive_real_roots > 0,
    })
}

/// Evaluate i(P, -n): with reciprocity, (-1)^d i(P, -n) counts the interior
/// points of nP. Used as a validation oracle.
pub fn eval_at_negative(p: &QPolynomial, n: i64) -> Rational {
    p.eval(&rat_int(-n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::polytope::{make_polytope, product};

    fn q(n: i64, d: i64) -> Rational {
        rat(n, d).unwrap()
    }

    fn reeve_formula(m: i64) -> QPolynomial {
        QPolynomial::from_coeffs(vec![q(1, 1), q(12 - m, 6), q(1, 1), q(m, 6)])
    }

    fn pts(rows: &[&[i128]]) -> Vec<Vec<i128>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    fn reeve(m: i128) -> VPolytope {
        make_polytope(3, pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, m]])).unwrap()
    }

    #[test]
    fn reeve_13_tetrahedron_polynomial() {
        let p = ehrhart_polynomial(&reeve(13)).unwrap();
        assert_eq!(p, reeve_formula(13));
    }

    #[test]
    fn segment_polynomial() {
        for m in [1i128, 7, 40] {
            let seg = make_polytope(1, pts(&[&[0], &[m]])).unwrap();
            let p = ehrhart_polynomial(&seg).unwrap();
            assert_eq!(p, QPolynomial::from_integers(&[1, m as i64]));
        }
    }

    #[test]
    fn product_route_agrees_with_interpolation() {
        let seg7 = make_polytope(1, pts(&[&[0], &[7]])).unwrap();
        let prod = product(&seg7, &reeve(13));
        let via_product = ehrhart_polynomial(&prod).unwrap();
        // independent route: interpolate scanned counts
        let samples: Vec<(i64, BigInt)> = (0..=4)
            .map(|n| {
                let c = if n == 0 {
                    BigInt::one()
                } else {
                    counting::count_scan(&prod, n).unwrap()
                };
                (n, c)
            })
            .collect();
        let via_interp = interpolate(&samples).unwrap();
        assert_eq!(via_product, via_interp);
        assert_eq!(
            via_product,
            &QPolynomial::from_integers(&[1, 7]) * &reeve_formula(13)
        );
    }

    #[test]
    fn delta_transforms_round_trip() {
        let p13 = reeve_formula(13);
        let delta = delta_from_poly(&p13, 3).unwrap();
        assert_eq!(delta, DeltaVector::from_integers(&[1, 0, 12, 0]).unwrap());
        assert_eq!(poly_from_delta(&delta), p13);

        let unit_seg = QPolynomial::from_integers(&[1, 1]);
        let d = delta_from_poly(&unit_seg, 1).unwrap();
        assert_eq!(d, DeltaVector::from_integers(&[1, 0]).unwrap());
        assert_eq!(poly_from_delta(&d), unit_seg);

        // (n+1)^2 has delta (1, 1, 0)
        let sq = QPolynomial::from_integers(&[1, 2, 1]);
        let d = delta_from_poly(&sq, 2).unwrap();
        assert_eq!(d, DeltaVector::from_integers(&[1, 1, 0]).unwrap());
        assert_eq!(poly_from_delta(&d), sq);
    }

    #[test]
    fn delta_rejects_non_ehrhart_data() {
        // n^2/2 + 1 takes non-integer values, so its delta is non-integral
        let p = QPolynomial::from_coeffs(vec![q(1, 1), q(0, 1), q(1, 2)]);
        assert!(matches!(
            delta_from_poly(&p, 2),
            Err(Error::InvalidEhrhartData(_))
        ));
        // n^2 + 1 counts nothing: its delta has a negative entry, which the
        // transform reports rather than rejects
        let p = QPolynomial::from_integers(&[1, 0, 1]);
        assert!(!delta_from_poly(&p, 2).unwrap().is_nonnegative());
        let wrong_deg = QPolynomial::from_integers(&[1, 1]);
        assert!(matches!(
            delta_from_poly(&wrong_deg, 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn sign_patterns() {
        // p4: negative only at index 1
        let p4 = QPolynomial::from_coeffs(vec![q(1, 1), q(-1, 12), q(3, 8), q(31, 12), q(9, 8)]);
        let s = sign_pattern(&p4).unwrap();
        assert_eq!(s.negatives, vec![1]);
        assert!(s.strictly_positive_elsewhere());

        // Q_12: the n-coefficient is exactly zero, not positive
        let q12 = reeve_formula(12);
        let s = sign_pattern(&q12).unwrap();
        assert!(s.negatives.is_empty());
        assert_eq!(s.signs[&1], Sign::Zero);
        assert!(!s.strictly_positive_elsewhere());

        let bad = QPolynomial::from_integers(&[2, 1]);
        assert!(matches!(
            sign_pattern(&bad),
            Err(Error::InvalidEhrhartData(_))
        ));
    }

    #[test]
    fn positive_real_roots_of_reeve_polynomials() {
        assert_eq!(count_positive_real_roots(&reeve_formula(100)), 2);
        assert_eq!(count_positive_real_roots(&reeve_formula(13)), 0);
        assert_eq!(
            count_positive_real_roots(&QPolynomial::from_integers(&[1, 1])),
            0
        );
        // (n-1)(n-2) = n^2 - 3n + 2
        assert_eq!(
            count_positive_real_roots(&QPolynomial::from_integers(&[2, -3, 1])),
            2
        );
        // double root at 1 counts once
        assert_eq!(
            count_positive_real_roots(&QPolynomial::from_integers(&[1, -2, 1])),
            1
        );
        // root at 0 is excluded
        assert_eq!(
            count_positive_real_roots(&QPolynomial::from_integers(&[0, 1])),
            0
        );
        assert_eq!(
            count_positive_real_roots(&QPolynomial::from_integers(&[0, -1, 1])),
            1
        );
    }

    #[test]
    fn sign_change_certificate_for_reeve_100() {
        let p = reeve_formula(100);
        assert_eq!(p.eval(&q(1, 2)), q(-4, 1));
        assert_eq!(p.eval_int(0), q(1, 1));
    }

    #[test]
    fn analyze_produces_consistent_report() {
        let report = analyze(&reeve(13), "reeve tetrahedron m=13").unwrap();
        assert_eq!(report.dimension, 3);
        assert_eq!(report.polynomial_pretty, "13/6 n^3 + n^2 - 1/6 n + 1");
        assert_eq!(
            report.delta,
            DeltaVector::from_integers(&[1, 0, 12, 0]).unwrap()
        );
        assert_eq!(report.negatives, vec![1]);
        assert_eq!(report.positive_real_roots, 0);
        assert_eq!(report.strategy, CountStrategy::SimplexParallelepiped);
    }

    #[test]
    fn reciprocity_evaluation() {
        // segment: interior of n*seg(m) has mn - 1 points
        let seg5 = QPolynomial::from_integers(&[1, 5]);
        assert_eq!(eval_at_negative(&seg5, 2) * q(-1, 1), q(9, 1));
    }
}
