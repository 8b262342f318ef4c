//! Geometric invariants over every catalogue polytope: facet support,
//! facet tightness rank, dilation consistency of membership, and vertex
//! counts of products.

use num_bigint::BigInt;
use num_traits::Zero;

use ehrhart_core::exactmath::rat_int;
use ehrhart_core::families::{catalogue, catalogue_patterns, p4, p5, reeve, segment};
use ehrhart_core::polytope::{contains, Constraint, VPolytope};

fn row_value(c: &Constraint, p: &[i128]) -> BigInt {
    c.a.iter()
        .zip(p)
        .map(|(a, x)| BigInt::from(*a) * BigInt::from(*x))
        .sum()
}

fn all_targets() -> Vec<(String, VPolytope)> {
    let mut out: Vec<(String, VPolytope)> = vec![
        ("segment(7)".into(), segment(7).unwrap()),
        ("reeve(13)".into(), reeve(13).unwrap()),
        ("reeve(100)".into(), reeve(100).unwrap()),
        ("p4".into(), p4()),
        ("p5".into(), p5()),
    ];
    for (d, negs) in catalogue_patterns() {
        out.push((
            format!("catalogue d={d} negatives {negs:?}"),
            catalogue(d, &negs).unwrap().polytope,
        ));
    }
    out
}

#[test]
fn every_generating_point_satisfies_the_facets() {
    for (name, p) in all_targets() {
        let h = p.facets().unwrap_or_else(|_| panic!("{name} has dim >= 1"));
        for point in p.points() {
            assert!(
                contains(h, point, 1),
                "{name}: point {point:?} escapes its own facets"
            );
            for c in &h.equalities {
                assert_eq!(row_value(c, point), BigInt::from(c.b), "{name} equality");
            }
        }
    }
}

/// Each facet touches at least dim(P) affinely independent vertices, i.e.
/// its contact set spans a (dim-1)-dimensional affine subspace.
#[test]
fn facets_are_tight_at_enough_independent_vertices() {
    for (name, p) in all_targets() {
        let d = p.dim();
        let h = p.facets().unwrap();
        for c in &h.inequalities {
            let contact: Vec<&Vec<i128>> = p
                .vertices()
                .into_iter()
                .filter(|v| row_value(c, v) == BigInt::from(c.b))
                .collect();
            assert!(
                contact.len() >= d,
                "{name}: facet {c:?} touches only {} vertices",
                contact.len()
            );
            let base = contact[0];
            let diffs: Vec<Vec<Rat>> = contact[1..]
                .iter()
                .map(|v| {
                    v.iter()
                        .zip(base)
                        .map(|(a, b)| Rat::from_integer(BigInt::from(a - b)))
                        .collect()
                })
                .collect();
            assert_eq!(
                rank(&diffs),
                d - 1,
                "{name}: contact set of {c:?} is degenerate"
            );
        }
    }
}

type Rat = ehrhart_core::exactmath::Rational;

/// Rank over Q by plain elimination; test-local so the check does not lean
/// on the library's own linear algebra.
#[allow(clippy::needless_range_loop)]
fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut rank = 0;
    let ncols = m.first().map_or(0, |r| r.len());
    for c in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pv = m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x /= &pv;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let sub = &f * &m[rank][j];
                    m[i][j] -= sub;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// z in nP under the integer membership test iff z/n satisfies every row
/// as a rational point of P.
#[test]
fn membership_is_dilation_consistent() {
    for (name, p) in all_targets().into_iter().take(12) {
        let h = p.facets().unwrap();
        let dims = p.ambient_dim();
        let n = 3i64;
        // probe the dilated vertices and a few perturbations
        let mut probes: Vec<Vec<i128>> = Vec::new();
        for v in p.vertices() {
            let scaled: Vec<i128> = v.iter().map(|x| x * n as i128).collect();
            probes.push(scaled.clone());
            for j in 0..dims {
                let mut q = scaled.clone();
                q[j] += 1;
                probes.push(q);
                let mut q = scaled.clone();
                q[j] -= 1;
                probes.push(q);
            }
        }
        for z in probes {
            let direct = contains(h, &z, n);
            let rational = h.equalities.iter().all(|c| {
                Rat::from_integer(row_value(c, &z))
                    == Rat::from_integer(BigInt::from(c.b)) * rat_int(n)
            }) && h.inequalities.iter().all(|c| {
                Rat::from_integer(row_value(c, &z))
                    <= Rat::from_integer(BigInt::from(c.b)) * rat_int(n)
            });
            assert_eq!(direct, rational, "{name}: probe {z:?}");
        }
    }
}

#[test]
fn product_vertex_counts_multiply_across_catalogue() {
    for (d, negs) in catalogue_patterns() {
        let c = catalogue(d, &negs).unwrap();
        if let Some((a, b)) = c.polytope.product_factors() {
            assert_eq!(
                c.polytope.vertex_count(),
                a.vertex_count() * b.vertex_count(),
                "d={d} negatives {negs:?}"
            );
            assert_eq!(c.polytope.dim(), a.dim() + b.dim());
        }
    }
}
