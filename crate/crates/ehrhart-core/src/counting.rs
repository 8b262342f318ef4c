//! Exact lattice-point counts of dilates nP by three independent strategies:
//! naive bounding-box iteration, a projected coordinate scan, and (for
//! full-dimensional simplices) the half-open parallelepiped of the cone
//! over P. The strategies cross-check each other in the test suites.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{binomial, DeltaVector};
use crate::linalg;
use crate::polytope::{satisfies, Containment, VPolytope};

/// Default cap on bounding-box candidates for the naive strategy.
pub const DEFAULT_GUARD: u128 = 100_000_000;

/// Parallelepiped enumeration walks one residue class per unit of
/// normalized volume; beyond this cap the scan strategy is cheaper.
const MAX_PARALLELEPIPED_VOLUME: u128 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountStrategy {
    NaiveBox,
    ProjectedScan,
    SimplexParallelepiped,
    ProductMultiply,
}

impl std::fmt::Display for CountStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CountStrategy::NaiveBox => "naive-box",
            CountStrategy::ProjectedScan => "projected-scan",
            CountStrategy::SimplexParallelepiped => "simplex-parallelepiped",
            CountStrategy::ProductMultiply => "product-multiply",
        };
        write!(f, "{s}")
    }
}

/// One exact count of |nP meet Z^N| with its provenance.
#[derive(Clone, Debug, Serialize)]
pub struct CountResult {
    pub n: i64,
    #[serde(serialize_with = "crate::report::serialize_bigint")]
    pub count: BigInt,
    pub strategy: CountStrategy,
}

fn check_dilation(n: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("dilation {n} must be >= 1")));
    }
    Ok(())
}

/// Exact count by iterating the integer bounding box of nP and testing
/// membership. The oracle for the faster strategies.
pub fn count_naive(p: &VPolytope, n: i64) -> Result<BigInt> {
    count_naive_guarded(p, n, DEFAULT_GUARD)
}

pub fn count_naive_guarded(p: &VPolytope, n: i64, guard: u128) -> Result<BigInt> {
    count_box(p, n, guard, Containment::Closed)
}

/// Strictly interior lattice points of nP, by the same box iteration with
/// strict facet inequalities.
pub fn count_interior_naive(p: &VPolytope, n: i64, guard: u128) -> Result<BigInt> {
    count_box(p, n, guard, Containment::Interior)
}

fn count_box(p: &VPolytope, n: i64, guard: u128, mode: Containment) -> Result<BigInt> {
    check_dilation(n)?;
    if p.dim() == 0 {
        return Ok(match mode {
            Containment::Closed => BigInt::one(),
            // a point is its own relative interior
            Containment::Interior => BigInt::one(),
        });
    }
    let nn = n as i128;
    let dims = p.ambient_dim();
    let mut lo = vec![i128::MAX; dims];
    let mut hi = vec![i128::MIN; dims];
    for v in p.points() {
        for j in 0..dims {
            lo[j] = lo[j].min(v[j]);
            hi[j] = hi[j].max(v[j]);
        }
    }
    let mut size: u128 = 1;
    for j in 0..dims {
        lo[j] = lo[j]
            .checked_mul(nn)
            .ok_or_else(|| box_too_big(u128::MAX, guard))?;
        hi[j] = hi[j]
            .checked_mul(nn)
            .ok_or_else(|| box_too_big(u128::MAX, guard))?;
        let width = hi[j]
            .checked_sub(lo[j])
            .and_then(|w| w.checked_add(1))
            .ok_or_else(|| box_too_big(u128::MAX, guard))? as u128;
        size = size
            .checked_mul(width)
            .ok_or_else(|| box_too_big(u128::MAX, guard))?;
    }
    if size > guard {
        return Err(box_too_big(size, guard));
    }

    let hrep = p.hrep();
    let mut z = lo.clone();
    let mut count = BigInt::zero();
    loop {
        if satisfies(hrep, &z, n, mode) {
            count += 1;
        }
        // odometer increment
        let mut j = 0;
        loop {
            if j == dims {
                return Ok(count);
            }
            z[j] += 1;
            if z[j] <= hi[j] {
                break;
            }
            z[j] = lo[j];
            j += 1;
        }
    }
}

fn box_too_big(size: u128, guard: u128) -> Error {
    let size = if size == u128::MAX {
        "more than u128".to_string()
    } else {
        size.to_string()
    };
    Error::ResourceLimit(format!(
        "naive bounding box has {size} candidate points (guard {guard})"
    ))
}

// ---------------------------------------------------------------------------
// Projected scan
// ---------------------------------------------------------------------------

/// Inequality row over permuted coordinates: a . x <= b * n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct ScanRow {
    a: Vec<BigInt>,
    b: BigInt,
}

impl ScanRow {
    fn top(&self) -> Option<usize> {
        self.a.iter().rposition(|x| !x.is_zero())
    }

    fn primitive(mut self) -> Self {
        let mut g = BigInt::zero();
        for x in self.a.iter().chain(std::iter::once(&self.b)) {
            g = g.gcd(x);
        }
        if !g.is_zero() && !g.is_one() {
            for x in self.a.iter_mut() {
                *x = &*x / &g;
            }
            self.b = &self.b / &g;
        }
        self
    }
}

/// Per-polytope scan preprocessing: a coordinate order (widest box axis
/// last) and, per coordinate k, the exact inequality rows bounding x_k given
/// x_0..x_{k-1}, obtained by Fourier-Motzkin elimination of the trailing
/// coordinates. Right-hand sides are unscaled; dilation multiplies b by n.
#[derive(Debug)]
struct ScanPlan {
    levels: Vec<Vec<ScanRow>>,
    feasible: bool,
}

fn build_scan_plan(p: &VPolytope) -> Result<ScanPlan> {
    let dims = p.ambient_dim();
    // ascending box width so the widest coordinate is counted, not iterated
    let mut widths: Vec<(i128, usize)> = (0..dims)
        .map(|j| {
            let lo = p.points().iter().map(|v| v[j]).min().unwrap();
            let hi = p.points().iter().map(|v| v[j]).max().unwrap();
            (hi.checked_sub(lo).unwrap_or(i128::MAX), j)
        })
        .collect();
    widths.sort();
    let perm: Vec<usize> = widths.into_iter().map(|(_, j)| j).collect();

    let hrep = p.hrep();
    let mut system: Vec<ScanRow> = Vec::new();
    let mut push_row = |a: &[i128], b: i128, negate: bool| {
        let mut row = ScanRow {
            a: perm
                .iter()
                .map(|&j| {
                    let v = BigInt::from(a[j]);
                    if negate {
                        -v
                    } else {
                        v
                    }
                })
                .collect(),
            b: if negate {
                -BigInt::from(b)
            } else {
                BigInt::from(b)
            },
        };
        row = row.primitive();
        system.push(row);
    };
    for c in &hrep.inequalities {
        push_row(&c.a, c.b, false);
    }
    for c in &hrep.equalities {
        push_row(&c.a, c.b, false);
        push_row(&c.a, c.b, true);
    }

    let mut levels: Vec<Vec<ScanRow>> = vec![Vec::new(); dims];
    for k in (0..dims).rev() {
        let mut lower: Vec<ScanRow> = Vec::new(); // a[k] < 0
        let mut upper: Vec<ScanRow> = Vec::new(); // a[k] > 0
        let mut rest: Vec<ScanRow> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for row in system.drain(..) {
            match row.top() {
                Some(t) if t == k => {
                    if !seen.insert(row.clone()) {
                        continue;
                    }
                    if row.a[k].is_positive() {
                        upper.push(row);
                    } else {
                        lower.push(row);
                    }
                }
                Some(_) => rest.push(row),
                None => {
                    if row.b.is_negative() {
                        return Ok(ScanPlan {
                            levels,
                            feasible: false,
                        });
                    }
                }
            }
        }
        if upper.is_empty() || lower.is_empty() {
            return Err(Error::InvalidArgument(
                "scan requires a bounded polytope".into(),
            ));
        }
        if k > 0 {
            // eliminate x_k: positive combinations cancelling the k coefficient
            let mut seen_rest = std::collections::HashSet::new();
            for row in rest {
                if seen_rest.insert(row.clone()) {
                    system.push(row);
                }
            }
            for up in &upper {
                for lo in &lower {
                    let cu = up.a[k].clone();
                    let cl = -lo.a[k].clone();
                    let a: Vec<BigInt> =
                        up.a.iter()
                            .zip(&lo.a)
                            .map(|(u, l)| &cl * u + &cu * l)
                            .collect();
                    let b = &cl * &up.b + &cu * &lo.b;
                    let row = ScanRow { a, b }.primitive();
                    match row.top() {
                        None => {
                            if row.b.is_negative() {
                                return Ok(ScanPlan {
                                    levels,
                                    feasible: false,
                                });
                            }
                        }
                        Some(_) => {
                            if seen_rest.insert(row.clone()) {
                                system.push(row);
                            }
                        }
                    }
                }
            }
        }
        let mut level = lower;
        level.append(&mut upper);
        levels[k] = level;
    }
    Ok(ScanPlan {
        levels,
        feasible: true,
    })
}

/// Scan arithmetic abstraction: i128 fast path with overflow detection,
/// arbitrary-precision fallback. Method names avoid the inherent and
/// num-traits names so calls stay unambiguous.
trait ScanInt: Clone + Ord + Send + Sync {
    fn from_big(b: &BigInt) -> Option<Self>
    where
        Self: Sized;
    fn to_big(&self) -> BigInt;
    fn add_checked(&self, o: &Self) -> Option<Self>
    where
        Self: Sized;
    fn sub_checked(&self, o: &Self) -> Option<Self>
    where
        Self: Sized;
    fn mul_checked(&self, o: &Self) -> Option<Self>
    where
        Self: Sized;
    fn floor_div(&self, o: &Self) -> Self;
    fn ceil_div(&self, o: &Self) -> Self;
    fn signum_i8(&self) -> i8;
    fn incr(&mut self);
}

impl ScanInt for i128 {
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn add_checked(&self, o: &Self) -> Option<Self> {
        i128::checked_add(*self, *o)
    }
    fn sub_checked(&self, o: &Self) -> Option<Self> {
        i128::checked_sub(*self, *o)
    }
    fn mul_checked(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn floor_div(&self, o: &Self) -> Self {
        Integer::div_floor(self, o)
    }
    fn ceil_div(&self, o: &Self) -> Self {
        Integer::div_ceil(self, o)
    }
    fn signum_i8(&self) -> i8 {
        self.signum() as i8
    }
    fn incr(&mut self) {
        *self += 1;
    }
}

impl ScanInt for BigInt {
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn add_checked(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub_checked(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul_checked(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn floor_div(&self, o: &Self) -> Self {
        Integer::div_floor(self, o)
    }
    fn ceil_div(&self, o: &Self) -> Self {
        Integer::div_ceil(self, o)
    }
    fn signum_i8(&self) -> i8 {
        if Signed::is_positive(self) {
            1
        } else if Signed::is_negative(self) {
            -1
        } else {
            0
        }
    }
    fn incr(&mut self) {
        *self += 1;
    }
}

#[derive(Clone)]
struct ScanLevels<T> {
    /// per coordinate: (coefficient on that coordinate, full row, scaled rhs)
    levels: Vec<Vec<(T, Vec<T>, T)>>,
}

fn convert_levels<T: ScanInt>(plan: &ScanPlan, n: i64) -> Option<ScanLevels<T>> {
    let big_n = BigInt::from(n);
    let mut levels = Vec::with_capacity(plan.levels.len());
    for (k, rows) in plan.levels.iter().enumerate() {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let coeff = T::from_big(&row.a[k])?;
            let a = row
                .a
                .iter()
                .take(k)
                .map(T::from_big)
                .collect::<Option<Vec<_>>>()?;
            let b = T::from_big(&(&row.b * &big_n))?;
            out.push((coeff, a, b));
        }
        levels.push(out);
    }
    Some(ScanLevels { levels })
}

/// Residuals hold b*n - sum_{j<depth} a_j x_j per row; bounds for x_k follow
/// by one division per row.
fn scan_bounds<T: ScanInt>(level: &[(T, Vec<T>, T)], residuals: &[T]) -> Option<(T, T)> {
    let mut lo: Option<T> = None;
    let mut hi: Option<T> = None;
    for ((coeff, _, _), res) in level.iter().zip(residuals) {
        if coeff.signum_i8() > 0 {
            let bound = res.floor_div(coeff);
            hi = Some(match hi {
                Some(h) => h.min(bound),
                None => bound,
            });
        } else {
            let bound = res.ceil_div(coeff);
            lo = Some(match lo {
                Some(l) => l.max(bound),
                None => bound,
            });
        }
    }
    let lo = lo.expect("every level has a lower-bound row");
    let hi = hi.expect("every level has an upper-bound row");
    if hi < lo {
        return None;
    }
    Some((lo, hi))
}

/// Add or subtract a_j * v on every residual of the levels below `depth`.
fn shift_residuals<T: ScanInt>(
    lv: &ScanLevels<T>,
    residuals: &mut [Vec<T>],
    depth: usize,
    v: &T,
    subtract: bool,
) -> Option<()> {
    for (rows, res_row) in lv.levels.iter().zip(residuals.iter_mut()).skip(depth + 1) {
        for ((_, a, _), res) in rows.iter().zip(res_row.iter_mut()) {
            if a[depth].signum_i8() != 0 {
                let delta = a[depth].mul_checked(v)?;
                *res = if subtract {
                    res.sub_checked(&delta)?
                } else {
                    res.add_checked(&delta)?
                };
            }
        }
    }
    Some(())
}

fn scan_rec<T: ScanInt>(
    lv: &ScanLevels<T>,
    depth: usize,
    residuals: &mut Vec<Vec<T>>,
    count: &mut BigInt,
) -> Option<()> {
    let Some((lo, hi)) = scan_bounds(&lv.levels[depth], &residuals[depth]) else {
        return Some(());
    };
    if depth + 1 == lv.levels.len() {
        let width = hi.sub_checked(&lo)?;
        *count += width.to_big() + 1;
        return Some(());
    }
    let mut v = lo;
    loop {
        // fix x_depth = v on all deeper rows
        shift_residuals(lv, residuals, depth, &v, true)?;
        scan_rec(lv, depth + 1, residuals, count)?;
        shift_residuals(lv, residuals, depth, &v, false)?;
        if v == hi {
            return Some(());
        }
        v.incr();
    }
}

fn fresh_residuals<T: ScanInt>(lv: &ScanLevels<T>) -> Vec<Vec<T>> {
    lv.levels
        .iter()
        .map(|rows| rows.iter().map(|(_, _, b)| b.clone()).collect())
        .collect()
}

fn scan_run<T: ScanInt>(lv: &ScanLevels<T>) -> Option<BigInt> {
    let dims = lv.levels.len();
    let mut residuals = fresh_residuals(lv);
    if dims == 1 {
        let mut count = BigInt::zero();
        scan_rec(lv, 0, &mut residuals, &mut count)?;
        return Some(count);
    }
    let Some((lo, hi)) = scan_bounds(&lv.levels[0], &residuals[0]) else {
        return Some(BigInt::zero());
    };
    let width: BigInt = hi.sub_checked(&lo)?.to_big() + 1;
    let threads = rayon::current_num_threads();
    let chunks = if threads <= 1 {
        BigInt::one()
    } else {
        BigInt::from(threads as u64 * 4).min(width.clone())
    };
    if chunks <= BigInt::one() {
        let mut count = BigInt::zero();
        scan_top_range(lv, &lo, &hi, &mut residuals, &mut count)?;
        return Some(count);
    }
    // deterministic split of the first coordinate range; exact integer sums
    // are order-independent, so the parallel total equals the sequential one
    let bounds: Vec<(T, T)> = split_range(&lo, &hi, &width, &chunks);
    let parts: Vec<Option<BigInt>> = bounds
        .into_par_iter()
        .map(|(a, b)| {
            let mut res = fresh_residuals(lv);
            let mut count = BigInt::zero();
            scan_top_range(lv, &a, &b, &mut res, &mut count)?;
            Some(count)
        })
        .collect();
    let mut total = BigInt::zero();
    for p in parts {
        total += p?;
    }
    Some(total)
}

fn split_range<T: ScanInt>(lo: &T, _hi: &T, width: &BigInt, chunks: &BigInt) -> Vec<(T, T)> {
    let base = width / chunks;
    let extra = width % chunks;
    let mut out = Vec::new();
    let mut start = lo.to_big();
    let mut i = BigInt::zero();
    while &i < chunks {
        let len = if i < extra { &base + 1 } else { base.clone() };
        let end = &start + &len - 1;
        out.push((
            T::from_big(&start).expect("chunk bound fits"),
            T::from_big(&end).expect("chunk bound fits"),
        ));
        start = end + 1;
        i += 1;
    }
    out
}

fn scan_top_range<T: ScanInt>(
    lv: &ScanLevels<T>,
    lo: &T,
    hi: &T,
    residuals: &mut Vec<Vec<T>>,
    count: &mut BigInt,
) -> Option<()> {
    let mut v = lo.clone();
    loop {
        shift_residuals(lv, residuals, 0, &v, true)?;
        scan_rec(lv, 1, residuals, count)?;
        shift_residuals(lv, residuals, 0, &v, false)?;
        if &v == hi {
            return Some(());
        }
        v.incr();
    }
}

/// Exact count equal to count_naive, without iterating the widest
/// coordinate: prefix coordinates run over exact projected intervals and
/// the final coordinate contributes its interval length.
pub fn count_scan(p: &VPolytope, n: i64) -> Result<BigInt> {
    check_dilation(n)?;
    if p.dim() == 0 {
        return Ok(BigInt::one());
    }
    let plan = build_scan_plan(p)?;
    if !plan.feasible {
        return Ok(BigInt::zero());
    }
    if let Some(lv) = convert_levels::<i128>(&plan, n) {
        if let Some(count) = scan_run(&lv) {
            return Ok(count);
        }
    }
    // overflow anywhere: redo with arbitrary precision
    let lv = convert_levels::<BigInt>(&plan, n).expect("BigInt conversion is total");
    Ok(scan_run(&lv).expect("BigInt scan cannot overflow"))
}

// ---------------------------------------------------------------------------
// Simplex parallelepiped
// ---------------------------------------------------------------------------

/// Delta-vector of a full-dimensional simplex by enumerating the lattice
/// points of the half-open fundamental parallelepiped of the cone over P.
///
/// Generators are w_i = (v_i, 1); the residue classes of the generator
/// lattice are walked via the Hermite normal form box, each representative
/// is reduced into the parallelepiped by fractional coordinates, and its
/// last coordinate (the height j) increments delta_j.
pub fn simplex_delta(p: &VPolytope) -> Result<DeltaVector> {
    if !p.is_simplex() || p.dim() != p.ambient_dim() {
        return Err(Error::UnsupportedInput(format!(
            "parallelepiped route needs a full-dimensional simplex (dim {} in R^{}, {} vertices)",
            p.dim(),
            p.ambient_dim(),
            p.vertex_count()
        )));
    }
    let d = p.dim();
    let verts = p.vertices();
    // W columns are (v_i, 1)
    let w: Vec<Vec<BigInt>> = (0..=d)
        .map(|row| {
            verts
                .iter()
                .map(|v| {
                    if row < d {
                        BigInt::from(v[row])
                    } else {
                        BigInt::one()
                    }
                })
                .collect()
        })
        .collect();
    let h = linalg::hnf_lower(w.clone());
    let det: BigInt = (0..=d).map(|i| h[i][i].clone()).product();
    let volume = det
        .to_u128()
        .filter(|&v| v <= MAX_PARALLELEPIPED_VOLUME)
        .ok_or_else(|| {
            Error::ResourceLimit(format!(
                "normalized volume {det} exceeds the parallelepiped cap {MAX_PARALLELEPIPED_VOLUME}"
            ))
        })?;
    debug_assert!(volume > 0);

    let w_rat: Vec<Vec<BigRational>> = w
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let w_inv = linalg::invert(&w_rat).expect("simplex generator matrix is nonsingular");

    let diag: Vec<BigInt> = (0..=d).map(|i| h[i][i].clone()).collect();
    let mut delta = vec![BigInt::zero(); d + 1];
    let mut rep = vec![BigInt::zero(); d + 1];
    loop {
        // t = W^{-1} rep; height = sum of fractional parts (the last row of
        // W is all ones, so this is the last coordinate of the reduced point)
        let mut height = BigRational::zero();
        for row in &w_inv {
            let t: BigRational = row
                .iter()
                .zip(&rep)
                .map(|(c, z)| c * BigRational::from_integer(z.clone()))
                .sum();
            height += &t - BigRational::from_integer(t.floor().to_integer());
        }
        debug_assert!(height.is_integer());
        let j = height.to_integer().to_usize().expect("height in 0..=d");
        delta[j] += 1;

        let mut i = 0;
        loop {
            if i > d {
                let delta = DeltaVector::new(delta).expect("origin residue gives delta_0 = 1");
                debug_assert_eq!(delta.sum().to_u128(), Some(volume));
                return Ok(delta);
            }
            rep[i] += 1;
            if rep[i] < diag[i] {
                break;
            }
            rep[i] = BigInt::zero();
            i += 1;
        }
    }
}

/// Count via the delta-vector: i(P, n) = sum_j delta_j C(n + d - j, d).
pub fn count_from_delta(delta: &DeltaVector, n: i64) -> BigInt {
    let d = delta.dim();
    delta
        .entries()
        .iter()
        .enumerate()
        .map(|(j, dj)| dj * binomial(n + d as i64 - j as i64, d as i64))
        .sum()
}

// ---------------------------------------------------------------------------
// Strategy dispatch
// ---------------------------------------------------------------------------

fn best_strategy(p: &VPolytope) -> CountStrategy {
    if p.is_simplex() && p.dim() == p.ambient_dim() && p.dim() > 0 {
        // only when the parallelepiped is small enough to enumerate
        if simplex_volume_within_cap(p) {
            return CountStrategy::SimplexParallelepiped;
        }
    }
    if p.product_factors().is_some() {
        return CountStrategy::ProductMultiply;
    }
    CountStrategy::ProjectedScan
}

fn simplex_volume_within_cap(p: &VPolytope) -> bool {
    let d = p.dim();
    let verts = p.vertices();
    let w: Vec<Vec<BigInt>> = (0..=d)
        .map(|row| {
            verts
                .iter()
                .map(|v| {
                    if row < d {
                        BigInt::from(v[row])
                    } else {
                        BigInt::one()
                    }
                })
                .collect()
        })
        .collect();
    let h = linalg::hnf_lower(w);
    let det: BigInt = (0..=d).map(|i| h[i][i].clone()).product();
    det.to_u128()
        .is_some_and(|v| v <= MAX_PARALLELEPIPED_VOLUME)
}

/// Count one dilate with the cheapest valid strategy.
pub fn count_auto(p: &VPolytope, n: i64) -> Result<CountResult> {
    check_dilation(n)?;
    if p.dim() == 0 {
        return Ok(CountResult {
            n,
            count: BigInt::one(),
            strategy: CountStrategy::ProjectedScan,
        });
    }
    let strategy = best_strategy(p);
    let count = match strategy {
        CountStrategy::SimplexParallelepiped => {
            let delta = simplex_delta(p)?;
            count_from_delta(&delta, n)
        }
        CountStrategy::ProductMultiply => {
            let (a, b) = p.product_factors().expect("strategy implies factors");
            count_auto(a, n)?.count * count_auto(b, n)?.count
        }
        _ => count_scan(p, n)?,
    };
    Ok(CountResult { n, count, strategy })
}

/// (0, 1) plus exact counts at n = 1..dim(P) using the cheapest valid
/// strategy, with provenance recorded. These are exactly the samples an
/// interpolation of the Ehrhart polynomial needs.
pub fn counts_for_interpolation(p: &VPolytope) -> Result<Vec<CountResult>> {
    let d = p.dim();
    let strategy = if d == 0 {
        CountStrategy::ProjectedScan
    } else {
        best_strategy(p)
    };
    let mut out = vec![CountResult {
        n: 0,
        count: BigInt::one(),
        strategy,
    }];
    match strategy {
        CountStrategy::SimplexParallelepiped => {
            let delta = simplex_delta(p)?;
            for n in 1..=d as i64 {
                out.push(CountResult {
                    n,
                    count: count_from_delta(&delta, n),
                    strategy,
                });
            }
        }
        CountStrategy::ProductMultiply => {
            let (a, b) = p.product_factors().expect("strategy implies factors");
            let ca = counts_for_interpolation(a)?;
            let cb = counts_for_interpolation(b)?;
            for n in 1..=d as i64 {
                let va = count_at(a, &ca, n)?;
                let vb = count_at(b, &cb, n)?;
                out.push(CountResult {
                    n,
                    count: va * vb,
                    strategy,
                });
            }
        }
        _ => {
            for n in 1..=d as i64 {
                out.push(CountResult {
                    n,
                    count: count_scan(p, n)?,
                    strategy,
                });
            }
        }
    }
    Ok(out)
}

fn count_at(p: &VPolytope, cached: &[CountResult], n: i64) -> Result<BigInt> {
    if let Some(c) = cached.iter().find(|c| c.n == n) {
        return Ok(c.count.clone());
    }
    Ok(count_auto(p, n)?.count)
}
