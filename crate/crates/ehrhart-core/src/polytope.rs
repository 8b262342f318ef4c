//! Integral V-polytopes: validation, dimension, affine hull, exact facet
//! enumeration, membership tests, and direct products.
//!
//! Facets are found by brute force over hyperplanes spanned by affinely
//! independent d-subsets of the generating points. The catalogue inputs
//! have at most a handful of vertices, so exactness beats asymptotics;
//! anything beyond the declared limits is rejected up front rather than
//! silently crawling.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;

/// Brute-force enumeration limits: C(16, 8) hyperplane candidates is the
/// largest search make_polytope will attempt.
pub const MAX_BRUTE_FORCE_POINTS: usize = 16;
pub const MAX_BRUTE_FORCE_DIM: usize = 8;

/// One H-representation row: `a . x = b` (equality) or `a . x <= b`
/// (inequality), with `(a, b)` primitive integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraint {
    pub a: Vec<i128>,
    pub b: i128,
}

impl Constraint {
    fn from_bigints(a: Vec<BigInt>, b: BigInt) -> Result<Self> {
        let a = a
            .into_iter()
            .map(|x| i128::try_from(&x).map_err(|_| overflow_err(&x)))
            .collect::<Result<Vec<_>>>()?;
        let b = i128::try_from(&b).map_err(|_| overflow_err(&b))?;
        Ok(Constraint { a, b })
    }
}

fn overflow_err(x: &BigInt) -> Error {
    Error::UnsupportedInput(format!("constraint coefficient {x} exceeds i128"))
}

/// Facet inequalities plus affine-hull equalities of one polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRep {
    pub equalities: Vec<Constraint>,
    pub inequalities: Vec<Constraint>,
}

/// Integral polytope given by generating points in Z^N.
///
/// Construction validates the points, computes the intrinsic dimension,
/// the facet H-representation, and which generating points are actual
/// vertices. Values are immutable afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    ambient_dim: usize,
    points: Vec<Vec<i128>>,
    dim: usize,
    vertex_indices: Vec<usize>,
    hrep: HRep,
    factors: Option<Box<(VPolytope, VPolytope)>>,
}

/// Build a polytope from integer generating points.
///
/// Points are deduplicated; non-vertex generating points are tolerated and
/// excluded from the vertex count by the facet-tightness test.
pub fn make_polytope(ambient_dim: usize, points: Vec<Vec<i128>>) -> Result<VPolytope> {
    if points.is_empty() {
        return Err(Error::InvalidArgument("empty point list".into()));
    }
    for p in &points {
        if p.len() != ambient_dim {
            return Err(Error::InvalidArgument(format!(
                "point of length {} in ambient dimension {ambient_dim}",
                p.len()
            )));
        }
    }
    let mut dedup: Vec<Vec<i128>> = Vec::new();
    for p in points {
        if !dedup.contains(&p) {
            dedup.push(p);
        }
    }
    if dedup.len() > MAX_BRUTE_FORCE_POINTS {
        return Err(Error::UnsupportedInput(format!(
            "{} distinct points exceed the brute-force limit of {MAX_BRUTE_FORCE_POINTS}",
            dedup.len()
        )));
    }
    let points = dedup;

    let diffs: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(&points[0])
                .map(|(x, y)| BigInt::from(*x) - BigInt::from(*y))
                .collect()
        })
        .collect();
    let dim = linalg::rank_int(&diffs);
    if dim > MAX_BRUTE_FORCE_DIM {
        return Err(Error::UnsupportedInput(format!(
            "dimension {dim} exceeds the brute-force limit of {MAX_BRUTE_FORCE_DIM}"
        )));
    }

    let equalities = affine_hull_equalities(&points, &diffs, ambient_dim)?;

    if dim == 0 {
        return Ok(VPolytope {
            ambient_dim,
            points,
            dim,
            vertex_indices: vec![0],
            hrep: HRep {
                equalities,
                inequalities: Vec::new(),
            },
            factors: None,
        });
    }

    let inequalities = enumerate_facets(&points, dim, &equalities, ambient_dim)?;
    let vertex_indices = classify_vertices(&points, &equalities, &inequalities, ambient_dim);
    Ok(VPolytope {
        ambient_dim,
        points,
        dim,
        vertex_indices,
        hrep: HRep {
            equalities,
            inequalities,
        },
        factors: None,
    })
}

/// Affine-hull equality rows: primitive integer nullspace vectors of the
/// difference set, sign-fixed by the first nonzero entry.
fn affine_hull_equalities(
    points: &[Vec<i128>],
    diffs: &[Vec<BigInt>],
    ambient_dim: usize,
) -> Result<Vec<Constraint>> {
    let normals = linalg::nullspace_int(diffs, ambient_dim);
    normals
        .into_iter()
        .map(|mut a| {
            if a.iter()
                .find(|x| !x.is_zero())
                .is_some_and(|x| x.is_negative())
            {
                a = a.into_iter().map(|x| -x).collect();
            }
            let b: BigInt = a
                .iter()
                .zip(&points[0])
                .map(|(ai, xi)| ai * BigInt::from(*xi))
                .sum();
            Constraint::from_bigints(a, b)
        })
        .collect()
}

/// Supporting-hyperplane enumeration over affinely independent d-subsets.
///
/// Hyperplanes are encoded as vectors (a, -b) in Q^{N+1}; the equality rows
/// span the subspace E of vectors vanishing on every point, and candidate
/// normals are canonicalized by reduction modulo E before dedup.
fn enumerate_facets(
    points: &[Vec<i128>],
    dim: usize,
    equalities: &[Constraint],
    ambient_dim: usize,
) -> Result<Vec<Constraint>> {
    let mut eq_rows: Vec<Vec<BigRational>> = equalities
        .iter()
        .map(|c| {
            c.a.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .chain(std::iter::once(BigRational::from_integer(BigInt::from(
                    -c.b,
                ))))
                .collect()
        })
        .collect();
    let eq_pivots = linalg::rref(&mut eq_rows);

    let reduce_mod_eq = |v: &[BigRational]| -> Vec<BigRational> {
        let mut v = v.to_vec();
        for (ri, &pc) in eq_pivots.iter().enumerate() {
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for j in 0..v.len() {
                    let sub = &f * &eq_rows[ri][j];
                    v[j] -= sub;
                }
            }
        }
        v
    };

    let mut found: Vec<Constraint> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for subset in combinations(points.len(), dim) {
        let rows: Vec<Vec<BigInt>> = subset
            .iter()
            .map(|&i| {
                points[i]
                    .iter()
                    .map(|&x| BigInt::from(x))
                    .chain(std::iter::once(BigInt::from(1)))
                    .collect()
            })
            .collect();
        if linalg::rank_int(&rows) != dim {
            continue; // affinely dependent subset
        }
        let nullspace = linalg::nullspace_int(&rows, ambient_dim + 1);
        let Some(candidate) = nullspace
            .iter()
            .map(|v| {
                reduce_mod_eq(
                    &v.iter()
                        .map(|x| BigRational::from_integer(x.clone()))
                        .collect::<Vec<_>>(),
                )
            })
            .find(|w| w.iter().any(|x| !x.is_zero()))
        else {
            continue;
        };
        let w = linalg::primitive(&candidate);
        let mut a = w[..ambient_dim].to_vec();
        let mut b = -w[ambient_dim].clone();

        // side values of all points; the polytope must end up on a.x <= b
        let mut pos = false;
        let mut neg = false;
        for p in points {
            let s: BigInt = a
                .iter()
                .zip(p)
                .map(|(ai, xi)| ai * BigInt::from(*xi))
                .sum::<BigInt>()
                - &b;
            if s.is_positive() {
                pos = true;
            } else if s.is_negative() {
                neg = true;
            }
        }
        if pos && neg {
            continue; // cuts through the polytope, not supporting
        }
        if pos {
            a = a.into_iter().map(|x| -x).collect();
            b = -b;
        }
        let row = Constraint::from_bigints(a, b)?;
        if seen.insert(row.clone()) {
            found.push(row);
        }
    }
    Ok(found)
}

/// A generating point is a vertex iff the normals of its tight constraints
/// span the full ambient space.
fn classify_vertices(
    points: &[Vec<i128>],
    equalities: &[Constraint],
    inequalities: &[Constraint],
    ambient_dim: usize,
) -> Vec<usize> {
    let mut vertex_indices = Vec::new();
    for (idx, p) in points.iter().enumerate() {
        let mut rows: Vec<Vec<BigInt>> = equalities
            .iter()
            .map(|c| c.a.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        for c in inequalities {
            let s: BigInt =
                c.a.iter()
                    .zip(p)
                    .map(|(ai, xi)| BigInt::from(*ai) * BigInt::from(*xi))
                    .sum();
            if s == BigInt::from(c.b) {
                rows.push(c.a.iter().map(|&x| BigInt::from(x)).collect());
            }
        }
        if linalg::rank_int(&rows) == ambient_dim {
            vertex_indices.push(idx);
        }
    }
    vertex_indices
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut state: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let current = state.clone()?;
        let next = {
            let mut c = current.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < n - (k - i) {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        state = next;
        Some(current)
    })
}

impl VPolytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Rank over Q of the difference set: the intrinsic dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Deduplicated generating points.
    pub fn points(&self) -> &[Vec<i128>] {
        &self.points
    }

    /// The generating points that are actual vertices.
    pub fn vertices(&self) -> Vec<&Vec<i128>> {
        self.vertex_indices
            .iter()
            .map(|&i| &self.points[i])
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_indices.len()
    }

    pub fn is_simplex(&self) -> bool {
        self.vertex_indices.len() == self.dim + 1
    }

    /// Complete irredundant facet list plus affine-hull equalities.
    pub fn facets(&self) -> Result<&HRep> {
        if self.dim == 0 {
            return Err(Error::UnsupportedInput(
                "facet enumeration needs dimension >= 1".into(),
            ));
        }
        Ok(&self.hrep)
    }

    /// H-representation including the degenerate dim-0 case (equalities only).
    pub(crate) fn hrep(&self) -> &HRep {
        &self.hrep
    }

    /// Product decomposition, when this polytope was built by `product`.
    pub fn product_factors(&self) -> Option<(&VPolytope, &VPolytope)> {
        self.factors.as_deref().map(|(p, q)| (p, q))
    }

    fn strip_factors(&self) -> VPolytope {
        let mut p = self.clone();
        p.factors = None;
        p
    }
}

/// Membership comparison mode: the closure includes facet boundaries, the
/// interior uses strict facet inequalities (equalities unchanged).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Closed,
    Interior,
}

/// Does `z` lie in the dilate nP described by `hrep`?
pub fn contains(hrep: &HRep, z: &[i128], n: i64) -> bool {
    satisfies(hrep, z, n, Containment::Closed)
}

pub fn satisfies(hrep: &HRep, z: &[i128], n: i64, mode: Containment) -> bool {
    use std::cmp::Ordering;
    hrep.equalities
        .iter()
        .all(|c| row_cmp(c, z, n) == Ordering::Equal)
        && hrep.inequalities.iter().all(|c| {
            matches!(
                (row_cmp(c, z, n), mode),
                (Ordering::Less, _) | (Ordering::Equal, Containment::Closed)
            )
        })
}

/// Compare a.z against n*b, exactly; i128 fast path with BigInt fallback.
fn row_cmp(c: &Constraint, z: &[i128], n: i64) -> std::cmp::Ordering {
    let fast = || -> Option<std::cmp::Ordering> {
        let mut lhs: i128 = 0;
        for (ai, zi) in c.a.iter().zip(z) {
            lhs = lhs.checked_add(ai.checked_mul(*zi)?)?;
        }
        let rhs = c.b.checked_mul(n as i128)?;
        Some(lhs.cmp(&rhs))
    };
    fast().unwrap_or_else(|| {
        let lhs: BigInt =
            c.a.iter()
                .zip(z)
                .map(|(ai, zi)| BigInt::from(*ai) * BigInt::from(*zi))
                .sum();
        lhs.cmp(&(BigInt::from(c.b) * BigInt::from(n)))
    })
}

/// Direct product P x Q: points concatenate, dimensions add, and the
/// H-representation is composed from the factors without any brute force,
/// so products may exceed the make_polytope point limit.
pub fn product(p: &VPolytope, q: &VPolytope) -> VPolytope {
    let ambient_dim = p.ambient_dim + q.ambient_dim;
    let mut points = Vec::with_capacity(p.points.len() * q.points.len());
    for pp in &p.points {
        for qq in &q.points {
            let mut v = Vec::with_capacity(ambient_dim);
            v.extend_from_slice(pp);
            v.extend_from_slice(qq);
            points.push(v);
        }
    }
    let qlen = q.points.len();
    let mut vertex_indices = Vec::new();
    for &i in &p.vertex_indices {
        for &j in &q.vertex_indices {
            vertex_indices.push(i * qlen + j);
        }
    }
    vertex_indices.sort_unstable();

    let extend_left = |c: &Constraint| Constraint {
        a: c.a
            .iter()
            .copied()
            .chain(std::iter::repeat_n(0, q.ambient_dim))
            .collect(),
        b: c.b,
    };
    let extend_right = |c: &Constraint| Constraint {
        a: std::iter::repeat_n(0, p.ambient_dim)
            .chain(c.a.iter().copied())
            .collect(),
        b: c.b,
    };
    let hrep = HRep {
        equalities: p
            .hrep
            .equalities
            .iter()
            .map(extend_left)
            .chain(q.hrep.equalities.iter().map(extend_right))
            .collect(),
        inequalities: p
            .hrep
            .inequalities
            .iter()
            .map(extend_left)
            .chain(q.hrep.inequalities.iter().map(extend_right))
            .collect(),
    };

    VPolytope {
        ambient_dim,
        points,
        dim: p.dim + q.dim,
        vertex_indices,
        hrep,
        factors: Some(Box::new((p.strip_factors(), q.strip_factors()))),
    }
}

#[derive(Serialize, Deserialize)]
struct RawPolytope {
    ambient_dim: usize,
    points: Vec<Vec<i128>>,
}

impl Serialize for VPolytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawPolytope {
            ambient_dim: self.ambient_dim,
            points: self.points.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VPolytope {
    /// Deserialization re-runs full validation, so parsed polytopes are
    /// subject to the brute-force limits.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPolytope::deserialize(deserializer)?;
        make_polytope(raw.ambient_dim, raw.points).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(rows: &[&[i128]]) -> Vec<Vec<i128>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    fn reeve13() -> VPolytope {
        make_polytope(3, pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 13]])).unwrap()
    }

    #[test]
    fn reeve_13_tetrahedron_shape() {
        let p = reeve13();
        assert_eq!(p.dim(), 3);
        assert!(p.is_simplex());
        assert_eq!(p.vertex_count(), 4);
    }

    #[test]
    fn segment_and_p5_shapes() {
        let seg = make_polytope(1, pts(&[&[0], &[5]])).unwrap();
        assert_eq!(seg.dim(), 1);
        assert!(seg.is_simplex());

        // 7 points of the dimension-5 example: 7 vertices, so not a simplex
        let p5 = make_polytope(
            5,
            pts(&[
                &[0, 0, 0, 0, 0],
                &[1, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0],
                &[0, 0, 1, 0, 0],
                &[0, 0, 0, 1, 0],
                &[0, 0, 0, 1, 1],
                &[1, 0, 0, 50, 51],
            ]),
        )
        .unwrap();
        assert_eq!(p5.dim(), 5);
        assert_eq!(p5.vertex_count(), 7);
        assert!(!p5.is_simplex());
    }

    #[test]
    fn make_polytope_validation_errors() {
        assert!(matches!(
            make_polytope(2, vec![]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            make_polytope(2, pts(&[&[0, 0, 0]])),
            Err(Error::InvalidArgument(_))
        ));
        let too_many: Vec<Vec<i128>> = (0..17).map(|i| vec![i, i * i]).collect();
        assert!(matches!(
            make_polytope(2, too_many),
            Err(Error::UnsupportedInput(_))
        ));
    }

    #[test]
    fn dedup_and_non_vertex_points() {
        // midpoint (1,1) of the square is generating but not a vertex
        let p = make_polytope(
            2,
            pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1], &[0, 0]]),
        )
        .unwrap();
        assert_eq!(p.points().len(), 5);
        assert_eq!(p.vertex_count(), 4);
        assert!(!p.is_simplex());
        assert_eq!(p.dim(), 2);
    }

    #[test]
    fn single_point_polytope() {
        let p = make_polytope(3, pts(&[&[2, 3, 4]])).unwrap();
        assert_eq!(p.dim(), 0);
        assert!(p.is_simplex());
        assert!(p.facets().is_err());
        assert_eq!(p.hrep().equalities.len(), 3);
    }

    #[test]
    fn reeve_facets_match_expected() {
        let p = reeve13();
        let h = p.facets().unwrap();
        assert!(h.equalities.is_empty());
        let mut rows: Vec<(Vec<i128>, i128)> =
            h.inequalities.iter().map(|c| (c.a.clone(), c.b)).collect();
        rows.sort();
        let mut expected = vec![
            (vec![0, 0, -1], 0),
            (vec![-13, 0, 1], 0),
            (vec![0, -13, 1], 0),
            (vec![13, 13, -1], 13),
        ];
        expected.sort();
        assert_eq!(rows, expected);
    }

    #[test]
    fn unit_square_and_segment_facets() {
        let sq = make_polytope(2, pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let h = sq.facets().unwrap();
        assert_eq!(h.inequalities.len(), 4);
        for v in sq.points() {
            assert!(contains(h, v, 1));
        }

        let seg = make_polytope(1, pts(&[&[0], &[7]])).unwrap();
        let mut rows: Vec<(Vec<i128>, i128)> = seg
            .facets()
            .unwrap()
            .inequalities
            .iter()
            .map(|c| (c.a.clone(), c.b))
            .collect();
        rows.sort();
        assert_eq!(rows, vec![(vec![-1], 0), (vec![1], 7)]);
    }

    #[test]
    fn contains_dilates() {
        let p = reeve13();
        let h = p.facets().unwrap();
        assert!(contains(h, &[1, 1, 13], 1));
        assert!(!contains(h, &[1, 1, 14], 1));

        let seg2 = make_polytope(1, pts(&[&[0], &[2]])).unwrap();
        let h2 = seg2.facets().unwrap();
        assert!(contains(h2, &[5], 3));
        assert!(!contains(h2, &[7], 3));
    }

    #[test]
    fn interior_mode_is_strict() {
        let seg2 = make_polytope(1, pts(&[&[0], &[2]])).unwrap();
        let h = seg2.facets().unwrap();
        assert!(satisfies(h, &[1], 1, Containment::Interior));
        assert!(!satisfies(h, &[0], 1, Containment::Interior));
        assert!(!satisfies(h, &[2], 1, Containment::Interior));
    }

    #[test]
    fn product_dimensions_and_vertices() {
        let s2 = make_polytope(1, pts(&[&[0], &[2]])).unwrap();
        let s3 = make_polytope(1, pts(&[&[0], &[3]])).unwrap();
        let rect = product(&s2, &s3);
        assert_eq!(rect.dim(), 2);
        assert_eq!(rect.ambient_dim(), 2);
        assert_eq!(rect.vertex_count(), 4);
        let mut vs: Vec<Vec<i128>> = rect.vertices().into_iter().cloned().collect();
        vs.sort();
        assert_eq!(vs, pts(&[&[0, 0], &[0, 3], &[2, 0], &[2, 3]]));

        let point = make_polytope(2, pts(&[&[5, 6]])).unwrap();
        let embedded = product(&reeve13(), &point);
        assert_eq!(embedded.dim(), 3);
        assert_eq!(embedded.ambient_dim(), 5);
        assert!(embedded.is_simplex());
        assert_eq!(embedded.hrep().equalities.len(), 2);
    }

    #[test]
    fn product_facets_support_all_points() {
        let s10 = make_polytope(1, pts(&[&[0], &[10]])).unwrap();
        let q100 =
            make_polytope(3, pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 100]])).unwrap();
        let p = product(&product(&s10, &s10), &q100);
        assert_eq!(p.dim(), 5);
        assert_eq!(p.vertex_count(), 16);
        let h = p.facets().unwrap();
        assert_eq!(h.inequalities.len(), 8);
        for v in p.points() {
            assert!(contains(h, v, 1));
        }
    }

    #[test]
    fn lower_dimensional_polytope_has_equalities() {
        // square embedded in z = 1
        let p = make_polytope(3, pts(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]])).unwrap();
        assert_eq!(p.dim(), 2);
        let h = p.facets().unwrap();
        assert_eq!(h.equalities.len(), 1);
        assert_eq!(h.inequalities.len(), 4);
        assert!(contains(h, &[1, 1, 1], 1));
        assert!(!contains(h, &[1, 1, 0], 1));
        // dilate: z = n on the hull
        assert!(contains(h, &[1, 1, 2], 2));
    }

    #[test]
    fn facet_tightness_rank() {
        // every facet of the reeve tetrahedron touches >= 3 affinely
        // independent vertices
        let p = reeve13();
        let h = p.facets().unwrap();
        for c in &h.inequalities {
            let tight: Vec<&Vec<i128>> = p
                .points()
                .iter()
                .filter(|v| {
                    let s: i128 = c.a.iter().zip(v.iter()).map(|(a, x)| a * x).sum();
                    s == c.b
                })
                .collect();
            assert!(tight.len() >= 3);
        }
    }

    #[test]
    fn json_round_trip() {
        let p = reeve13();
        let json = serde_json::to_string(&p).unwrap();
        let back: VPolytope = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(json.contains("\"ambient_dim\":3"));

        let bad: std::result::Result<VPolytope, _> =
            serde_json::from_str(r#"{"ambient_dim":2,"points":[[1,2,3]]}"#);
        assert!(bad.is_err());
    }
}
