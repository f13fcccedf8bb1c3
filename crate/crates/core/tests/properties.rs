//! Property tests for the invariants of the geometry.

mod common;

use std::f64::consts::PI;

use proptest::prelude::*;

use hypack::horoball::{
    horosphere_through_point, quadrilateral_area, tangency_point, triangle_area,
};
use hypack::lorentz::{
    bilinear_form, perpendicular_foot, point_distance, LorentzIsometry, LorentzVector,
};
use hypack::orthoscheme::{build_orthoscheme, lobachevsky, TilingParams};

use common::heron;

/// A proper point with Klein coordinates in the ball of radius 0.9.
fn proper_point() -> impl Strategy<Value = LorentzVector> {
    (-0.9f64..0.9, -0.9f64..0.9, -0.9f64..0.9).prop_filter_map("inside", |(x, y, z)| {
        (x * x + y * y + z * z < 0.81).then(|| LorentzVector::point(1.0, x, y, z))
    })
}

fn nonzero_scale() -> impl Strategy<Value = f64> {
    prop_oneof![0.01f64..100.0, -100.0f64..-0.01]
}

fn isometry() -> impl Strategy<Value = LorentzIsometry> {
    (-1.5f64..1.5, -1.5f64..1.5, 0.0f64..6.3, 0.0f64..6.3).prop_map(|(b1, b3, r1, r2)| {
        LorentzIsometry::boost(1, b1)
            .compose(&LorentzIsometry::rotation(1, 2, r1))
            .compose(&LorentzIsometry::boost(3, b3))
            .compose(&LorentzIsometry::rotation(2, 3, r2))
    })
}

/// Plane through a proper point with a spacelike unit normal direction.
fn plane() -> impl Strategy<Value = LorentzVector> {
    (proper_point(), 0.0f64..PI, 0.0f64..2.0 * PI).prop_map(|(c, th, ph)| {
        // Spatial direction rotated into the tangent space at c.
        let d = LorentzVector::form(0.0, th.sin() * ph.cos(), th.sin() * ph.sin(), th.cos());
        let cn = c * (1.0 / (-c.self_product()).sqrt());
        d + cn.as_form() * bilinear_form(&d, &cn)
    })
}

fn triangle() -> impl Strategy<Value = (f64, f64, f64)> {
    (0.1f64..10.0, 0.1f64..10.0, 0.05f64..0.95).prop_map(|(a, b, f)| {
        // third side strictly between |a-b| and a+b
        let lo = (a - b).abs();
        (a, b, lo + f * (a + b - lo))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distance_is_scale_invariant(x in proper_point(), y in proper_point(),
                                   c in nonzero_scale(), d in nonzero_scale()) {
        let base = point_distance(&x, &y).unwrap();
        let scaled = point_distance(&(x * c), &(y * d)).unwrap();
        prop_assert!((base - scaled).abs() < 1e-12 * base.max(1.0));
    }

    #[test]
    fn triangle_inequality(x in proper_point(), y in proper_point(), z in proper_point()) {
        let (xy, yz, xz) = (
            point_distance(&x, &y).unwrap(),
            point_distance(&y, &z).unwrap(),
            point_distance(&x, &z).unwrap(),
        );
        prop_assert!(xz <= xy + yz + 1e-10);
    }

    #[test]
    fn distance_is_isometry_invariant(x in proper_point(), y in proper_point(), m in isometry()) {
        let d = point_distance(&x, &y).unwrap();
        let dm = point_distance(&m.apply(&x), &m.apply(&y)).unwrap();
        prop_assert!((d - dm).abs() < 1e-11 * d.max(1.0) * 10.0_f64.max(m.matrix().norm()));
    }

    #[test]
    fn foot_minimises_distance(a in proper_point(), u in plane(),
                               samples in prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 100)) {
        let foot = perpendicular_foot(&a, &u).unwrap();
        prop_assert!(bilinear_form(&foot, &u).abs() < 1e-12 * u.euclidean_norm_sq().sqrt().max(1.0));
        let d = point_distance(&a, &foot).unwrap();
        // Points of u: move from the foot along two orthonormal directions in u.
        let fh = foot * (1.0 / (-foot.self_product()).sqrt());
        let un = u * (1.0 / u.self_product().sqrt());
        let mut basis = Vec::new();
        for e in [[0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]] {
            let mut w = LorentzVector::point(e[0], e[1], e[2], e[3]);
            w = w + fh * bilinear_form(&w, &fh) - un.as_point() * bilinear_form(&w, &un);
            for b in &basis {
                let b: &LorentzVector = b;
                w = w - *b * bilinear_form(&w, b);
            }
            let n = w.self_product();
            if n > 1e-8 {
                basis.push(w * (1.0 / n.sqrt()));
            }
        }
        prop_assume!(basis.len() >= 2);
        for (s, t) in samples {
            let r = (s * s + t * t).sqrt();
            if r == 0.0 {
                continue;
            }
            let dir = (basis[0] * s + basis[1] * t) * (1.0 / r);
            let q = fh * r.cosh() + dir * r.sinh();
            prop_assert!(bilinear_form(&q, &u).abs() < 1e-9 * q.euclidean_norm_sq().sqrt());
            prop_assert!(d <= point_distance(&a, &q).unwrap() + 1e-10);
        }
    }

    #[test]
    fn lobachevsky_reflection(x in -10.0f64..10.0) {
        prop_assert!((lobachevsky(PI - x) + lobachevsky(x)).abs() < 1e-11);
    }

    #[test]
    fn lobachevsky_odd_and_periodic(x in -10.0f64..10.0) {
        prop_assert!((lobachevsky(-x) + lobachevsky(x)).abs() < 1e-11);
        prop_assert!((lobachevsky(x + PI) - lobachevsky(x)).abs() < 1e-11);
    }

    #[test]
    fn heron_equals_cayley_menger((a, b, c) in triangle()) {
        let cm = triangle_area(a, b, c).unwrap();
        prop_assert!((cm - heron(a, b, c)).abs() < 1e-12 * (a + b + c).powi(2));
    }

    #[test]
    fn quadrilateral_area_is_diagonal_independent(
        pts in prop::collection::vec((0.0f64..1.0, 0.2f64..1.0), 4)
    ) {
        // Convex quadrilateral from four points on circles at increasing angles.
        let verts: Vec<(f64, f64)> = pts
            .iter()
            .enumerate()
            .map(|(k, (jitter, rad))| {
                let ang = (k as f64 + 0.8 * jitter) * PI / 2.0;
                (rad * ang.cos(), rad * ang.sin())
            })
            .collect();
        let d = |i: usize, j: usize| {
            let (a, b) = (verts[i], verts[j]);
            ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt()
        };
        let cross = |o: usize, a: usize, b: usize| {
            let (o, a, b) = (verts[o], verts[a], verts[b]);
            (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
        };
        prop_assume!((0..4).all(|k| cross(k, (k + 1) % 4, (k + 2) % 4) > 1e-3));
        let sides = [d(0, 1), d(1, 2), d(2, 3), d(3, 0)];
        let first = quadrilateral_area(sides, d(0, 2)).unwrap();
        let second = quadrilateral_area([sides[1], sides[2], sides[3], sides[0]], d(1, 3)).unwrap();
        prop_assert!((first - second).abs() < 1e-10);
    }

    #[test]
    fn horosphere_parameter_is_isometry_invariant(t in 0.05f64..0.95, m in isometry()) {
        let o = build_orthoscheme(TilingParams::new(4, 4).unwrap()).unwrap();
        let pt = tangency_point(&o, t);
        let h = horosphere_through_point(&o.point(0), &pt, &o).unwrap();
        let om = o.transformed(&m);
        let hm = horosphere_through_point(&m.apply(&o.point(0)), &m.apply(&pt), &om).unwrap();
        prop_assert!((h.s() - hm.s()).abs() < 1e-8);
    }
}
