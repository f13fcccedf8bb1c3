//! Horospheres centred at the ideal vertices, horospheric measurement and
//! the optimal one- and two-type horoball packings.
//!
//! A horosphere is stored in the canonical frame of its centre, where the
//! centre is `(1,0,0,1)` and the surface is the ellipsoid
//! `2(x²+y²)/(1-s) + 4(z-(s+1)/2)²/(1-s)² = 1` through the apex `(0,0,s)`.
//! Projectively this is `<x,x> + κ<x,e>² = 0` with `κ = (1+s)/(1-s)`, and the
//! horoball is the side where that expression is negative.

use crate::error::{Error, Result};
use crate::lorentz::{
    bilinear_form, classify, ideal_to_canonical, perpendicular_foot, point_distance,
    LorentzIsometry, LorentzVector, PointClass, IDEAL_TOL,
};
use crate::optimize::{bisect_root, golden_section_max, Maximum};
use crate::orthoscheme::{build_orthoscheme, TilingParams, TruncatedOrthoscheme, FACE_COUNT};

/// Allowed protrusion of a horoball through a face.
pub const CLEARANCE_TOL: f64 = 1e-9;

/// Golden-section tolerance in `t`.
pub const T_TOL: f64 = 1e-10;

const CANONICAL_CENTRE: LorentzVector = LorentzVector::point(1.0, 0.0, 0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Horosphere {
    center: LorentzVector,
    s: f64,
    to_canonical: LorentzIsometry,
}

impl Horosphere {
    pub fn new(center: LorentzVector, s: f64, to_canonical: LorentzIsometry) -> Result<Self> {
        if classify(&center, IDEAL_TOL)? != PointClass::Ideal {
            return Err(Error::Domain(format!(
                "horosphere centre {center:?} is not ideal"
            )));
        }
        if !(s > -1.0 && s < 1.0) {
            return Err(Error::GeometricInconsistency(format!(
                "horosphere parameter {s} outside (-1, 1)"
            )));
        }
        Ok(Self {
            center: center.normalized(),
            s,
            to_canonical,
        })
    }

    pub fn center(&self) -> LorentzVector {
        self.center
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn to_canonical(&self) -> &LorentzIsometry {
        &self.to_canonical
    }

    /// `κ = (1+s)/(1-s)`.
    pub fn kappa(&self) -> f64 {
        (1.0 + self.s) / (1.0 - self.s)
    }

    /// Representative `e` of the centre for which `<x,x> + κ<x,e>² = 0`.
    pub fn center_representative(&self) -> LorentzVector {
        self.to_canonical.inverse().apply(&CANONICAL_CENTRE)
    }

    /// Apex `(1,0,0,s)` mapped back to the model frame.
    pub fn apex(&self) -> LorentzVector {
        let apex = LorentzVector::point(1.0, 0.0, 0.0, self.s);
        self.to_canonical.inverse().apply(&apex).normalized()
    }

    /// Canonical-frame value of the defining quadric, negative inside.
    pub fn equation(&self, x: &LorentzVector) -> f64 {
        let y = self.to_canonical.apply(x).normalized();
        let [_, a, b, z] = y.coords();
        2.0 * (a * a + b * b) / (1.0 - self.s)
            + 4.0 * (z - 0.5 * (self.s + 1.0)).powi(2) / (1.0 - self.s).powi(2)
            - 1.0
    }

    pub fn contains(&self, x: &LorentzVector) -> bool {
        let e = self.center_representative();
        x.self_product() + self.kappa() * bilinear_form(x, &e).powi(2) < 0.0
    }

    /// Hyperbolic gap between the horosphere and the plane `u`; negative
    /// when the horoball crosses it, `+∞` when the plane passes through the
    /// centre.
    pub fn signed_clearance(&self, u: &LorentzVector) -> Result<f64> {
        let e = self.center;
        let un = u.euclidean_norm_sq().sqrt();
        if bilinear_form(&e, u).abs() <= 1e-9 * un * e.euclidean_norm_sq().sqrt() {
            return Ok(f64::INFINITY);
        }
        let foot = perpendicular_foot(&e, u)?;
        let s_star = canonical_s(&self.to_canonical, &foot)?;
        Ok(self.s.atanh() - s_star.atanh())
    }
}

/// `s` of the horosphere centred at `(1,0,0,1)` through the mapped point.
fn canonical_s(m: &LorentzIsometry, pt: &LorentzVector) -> Result<f64> {
    let y = m.apply(pt).normalized();
    let [_, x, yy, z] = y.coords();
    let rho2 = x * x + yy * yy;
    // The s² terms cancel after clearing denominators.
    let den = rho2 + 2.0 * (z - 1.0);
    let s = (rho2 + 2.0 * z * (z - 1.0)) / den;
    if !(s > -1.0 && s < 1.0) {
        return Err(Error::GeometricInconsistency(format!(
            "no horosphere parameter in (-1, 1) through {pt:?} (s = {s})"
        )));
    }
    Ok(s)
}

/// Isometry fixing the coordinates around the ideal vertex `center`.
pub fn canonical_map(center: &LorentzVector, o: &TruncatedOrthoscheme) -> Result<LorentzIsometry> {
    ideal_to_canonical(center, &o.canonical_frame())
}

pub fn horosphere_through_point(
    center: &LorentzVector,
    pt: &LorentzVector,
    o: &TruncatedOrthoscheme,
) -> Result<Horosphere> {
    match classify(pt, IDEAL_TOL)? {
        PointClass::Proper => {}
        other => return Err(Error::Domain(format!("{pt:?} is {other:?}, not proper"))),
    }
    let m = canonical_map(center, o)?;
    let s = canonical_s(&m, pt)?;
    Horosphere::new(*center, s, m)
}

fn ideal_vertex(o: &TruncatedOrthoscheme, vertex: usize) -> Result<LorentzVector> {
    if !o.is_ideal(vertex) {
        return Err(Error::Domain(format!(
            "A{vertex} is not an ideal vertex of {}",
            o.params
        )));
    }
    Ok(o.point(vertex))
}

/// Faces of `o` that do not pass through `vertex`.
pub fn constraining_faces(o: &TruncatedOrthoscheme, vertex: usize) -> Vec<usize> {
    (0..FACE_COUNT)
        .filter(|f| !o.lattice.vertex_faces[vertex].contains(f))
        .collect()
}

/// Largest horoball at `vertex` inside every face of `o`; it touches the
/// face whose perpendicular foot gives the smallest horoball.
pub fn max_horoball(o: &TruncatedOrthoscheme, vertex: usize) -> Result<Horosphere> {
    let e = ideal_vertex(o, vertex)?;
    let m = canonical_map(&e, o)?;
    let mut best = f64::NEG_INFINITY;
    for f in constraining_faces(o, vertex) {
        let foot = perpendicular_foot(&e, &o.face(f))?;
        best = best.max(canonical_s(&m, &foot)?);
    }
    Horosphere::new(e, best, m)
}

/// Faces with clearance at most `tol`.
pub fn active_faces(h: &Horosphere, o: &TruncatedOrthoscheme, tol: f64) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for f in 0..FACE_COUNT {
        if h.signed_clearance(&o.face(f))? <= tol {
            out.push(f);
        }
    }
    Ok(out)
}

/// Smallest clearance against the faces not through the centre, with the
/// face that attains it.
pub fn min_clearance(h: &Horosphere, o: &TruncatedOrthoscheme) -> Result<(usize, f64)> {
    let mut best = (usize::MAX, f64::INFINITY);
    for f in 0..FACE_COUNT {
        let c = h.signed_clearance(&o.face(f))?;
        if c < best.1 {
            best = (f, c);
        }
    }
    Ok(best)
}

/// Roots of `a μ² + b μ = 0` for the line `E + μ (P - E)` from the
/// canonical centre towards `other`, ascending.
pub fn edge_roots(h: &Horosphere, other: &LorentzVector) -> [f64; 2] {
    let p = h.to_canonical.apply(other).normalized().coords();
    let (dx, dy, dz) = (p[1], p[2], p[3] - 1.0);
    let w = 1.0 - h.s;
    let a = 2.0 * (dx * dx + dy * dy) / w + 4.0 * dz * dz / (w * w);
    let b = 4.0 * dz / w;
    let mu = if a == 0.0 { 0.0 } else { -b / a };
    if mu < 0.0 {
        [mu, 0.0]
    } else {
        [0.0, mu]
    }
}

/// Point where the edge from the centre to `other` leaves the horoball.
pub fn edge_point(h: &Horosphere, other: &LorentzVector) -> Result<LorentzVector> {
    let p = h.to_canonical.apply(other).normalized().coords();
    let mu = edge_roots(h, other)[1];
    if !(mu > 0.0 && mu <= 1.0 + 1e-12) {
        return Err(Error::HoroballTooLarge(format!(
            "edge towards {other:?} does not cross the horosphere inside the cell (μ = {mu})"
        )));
    }
    let x = LorentzVector::point(1.0, mu * p[1], mu * p[2], 1.0 + mu * (p[3] - 1.0));
    Ok(h.to_canonical.inverse().apply(&x).normalized())
}

/// The horospheric polygon cut out by the edges at the centre, ordered
/// around the vertex figure, as `(label, point)` pairs.
pub fn edge_intersections(
    h: &Horosphere,
    o: &TruncatedOrthoscheme,
) -> Result<Vec<(usize, LorentzVector)>> {
    let v = o
        .label_of(&h.center)
        .ok_or_else(|| Error::Domain(format!("{:?} is not a vertex of {}", h.center, o.params)))?;
    o.lattice
        .vertex_figure(v)
        .into_iter()
        .map(|w| Ok((w, edge_point(h, &o.point(w))?)))
        .collect()
}

/// `L = 2 sinh(l/2)`: horocyclic distance for the hyperbolic distance `l`.
pub fn horospheric_arc_length(l: f64) -> Result<f64> {
    if l.is_nan() || l < 0.0 {
        return Err(Error::Domain(format!("negative length {l}")));
    }
    Ok(2.0 * (0.5 * l).sinh())
}

/// Euclidean triangle area from side lengths via the Cayley–Menger
/// determinant, `16 A² = -det CM`.
pub fn triangle_area(a: f64, b: f64, c: f64) -> Result<f64> {
    let (a2, b2, c2) = (a * a, b * b, c * c);
    #[rustfmt::skip]
    let cm = nalgebra::Matrix4::new(
        0.0, 1.0, 1.0, 1.0,
        1.0, 0.0, a2, b2,
        1.0, a2, 0.0, c2,
        1.0, b2, c2, 0.0,
    );
    let v = -cm.determinant() / 16.0;
    let scale = (a2 + b2 + c2).powi(2).max(f64::MIN_POSITIVE);
    if v < -1e-12 * scale {
        return Err(Error::InvalidMetric(format!(
            "lengths ({a}, {b}, {c}) violate the triangle inequality"
        )));
    }
    Ok(v.max(0.0).sqrt())
}

/// Area of a quadrilateral `P0P1P2P3` from its sides `P0P1, P1P2, P2P3,
/// P3P0` and the diagonal `P0P2`.
pub fn quadrilateral_area(sides: [f64; 4], diagonal: f64) -> Result<f64> {
    Ok(triangle_area(sides[0], sides[1], diagonal)? + triangle_area(diagonal, sides[2], sides[3])?)
}

/// Horocyclic distance between two points of one horosphere.
pub fn horospheric_distance(x: &LorentzVector, y: &LorentzVector) -> Result<f64> {
    horospheric_arc_length(point_distance(x, y)?)
}

/// Area of a convex horospheric polygon, fanned from its first vertex.
pub fn horospheric_polygon_area(points: &[LorentzVector]) -> Result<f64> {
    let mut area = 0.0;
    for k in 1..points.len().saturating_sub(1) {
        let a = horospheric_distance(&points[0], &points[k])?;
        let b = horospheric_distance(&points[k], &points[k + 1])?;
        let c = horospheric_distance(&points[0], &points[k + 1])?;
        area += triangle_area(a, b, c)?;
    }
    Ok(area)
}

/// Volume of a horoball sector over a horospheric domain of the given area.
pub fn sector_volume(area: f64) -> f64 {
    0.5 * area
}

#[derive(Clone, Debug, PartialEq)]
pub struct HoroballSector {
    pub horosphere: Horosphere,
    /// Labelled polygon vertices `H_i` on the horosphere.
    pub polygon: Vec<(usize, LorentzVector)>,
    pub area: f64,
    pub volume: f64,
}

pub fn horoball_sector(h: &Horosphere, o: &TruncatedOrthoscheme) -> Result<HoroballSector> {
    let polygon = edge_intersections(h, o)?;
    let pts: Vec<LorentzVector> = polygon.iter().map(|(_, p)| *p).collect();
    let area = horospheric_polygon_area(&pts)?;
    Ok(HoroballSector {
        horosphere: *h,
        polygon,
        area,
        volume: sector_volume(area),
    })
}

/// One horoball of a packing.
#[derive(Clone, Debug, PartialEq)]
pub struct PackingPiece {
    pub vertex: usize,
    pub sector: HoroballSector,
    /// Faces the horoball touches.
    pub active_faces: Vec<usize>,
    pub min_clearance: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoHoroballDiagnostics {
    pub t1: f64,
    pub t2: f64,
    pub endpoint_densities: [f64; 2],
    pub golden: Option<Maximum>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PackingResult {
    pub params: TilingParams,
    /// Tangency parameter on `A2A0`, for two-horoball packings.
    pub t: Option<f64>,
    pub pieces: Vec<PackingPiece>,
    pub cell_volume: f64,
    pub density: f64,
    pub diagnostics: Option<TwoHoroballDiagnostics>,
}

impl PackingResult {
    pub fn horoball_volume(&self) -> f64 {
        self.pieces.iter().map(|p| p.sector.volume).sum()
    }

    pub fn piece(&self, vertex: usize) -> Option<&PackingPiece> {
        self.pieces.iter().find(|p| p.vertex == vertex)
    }
}

fn piece(o: &TruncatedOrthoscheme, vertex: usize, h: &Horosphere) -> Result<PackingPiece> {
    let (face, clearance) = min_clearance(h, o)?;
    if clearance < -CLEARANCE_TOL {
        return Err(Error::ConstraintViolation {
            vertex,
            face,
            clearance,
        });
    }
    Ok(PackingPiece {
        vertex,
        sector: horoball_sector(h, o)?,
        active_faces: active_faces(h, o, CLEARANCE_TOL)?,
        min_clearance: clearance,
    })
}

/// Density of the maximal horoball at one ideal vertex.
pub fn one_horoball_density(params: TilingParams, vertex: usize) -> Result<PackingResult> {
    let o = build_orthoscheme(params)?;
    let h = max_horoball(&o, vertex)?;
    let p = piece(&o, vertex, &h)?;
    let cell_volume = o.volume()?;
    Ok(PackingResult {
        params,
        t: None,
        density: p.sector.volume / cell_volume,
        pieces: vec![p],
        cell_volume,
        diagnostics: None,
    })
}

fn two_vertex_cell(params: TilingParams) -> Result<TruncatedOrthoscheme> {
    if !params.has_two_ideal_vertices() {
        return Err(Error::InvalidInput(format!(
            "{params} has a single ideal vertex"
        )));
    }
    build_orthoscheme(params)
}

/// `P(t) = (1-t) A2 + t A0` with `x0 = 1` representatives.
pub fn tangency_point(o: &TruncatedOrthoscheme, t: f64) -> LorentzVector {
    o.point(2).normalized() * (1.0 - t) + o.point(0).normalized() * t
}

/// The tangent pair `(B0, B2)` through `P(t)`.
pub fn tangent_pair(o: &TruncatedOrthoscheme, t: f64) -> Result<(Horosphere, Horosphere)> {
    let p = tangency_point(o, t);
    Ok((
        horosphere_through_point(&o.point(0), &p, o)?,
        horosphere_through_point(&o.point(2), &p, o)?,
    ))
}

fn clearance_at(o: &TruncatedOrthoscheme, t: f64, vertex: usize) -> Result<f64> {
    let (b0, b2) = tangent_pair(o, t)?;
    let h = if vertex == 0 { b0 } else { b2 };
    Ok(min_clearance(&h, o)?.1)
}

const T_EDGE: f64 = 1e-6;

/// `[t1, t2]`: `B0` fits for `t >= t1` and `B2` fits for `t <= t2`.
pub fn feasible_t_interval(params: TilingParams) -> Result<(f64, f64)> {
    let o = two_vertex_cell(params)?;
    feasible_interval(&o)
}

fn feasible_interval(o: &TruncatedOrthoscheme) -> Result<(f64, f64)> {
    let (lo, hi) = (T_EDGE, 1.0 - T_EDGE);
    let t1 = bisect_root(|t| clearance_at(o, t, 0), lo, hi, 1e-15)?;
    let t2 = bisect_root(|t| clearance_at(o, t, 2), lo, hi, 1e-15)?;
    if t1 > t2 + 1e-12 {
        return Err(Error::NoValidPacking(format!(
            "{}: t1 = {t1} exceeds t2 = {t2}",
            o.params
        )));
    }
    if t1 > t2 {
        let m = 0.5 * (t1 + t2);
        return Ok((m, m));
    }
    Ok((t1, t2))
}

fn two_horoball_in(o: &TruncatedOrthoscheme, t: f64) -> Result<PackingResult> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::InvalidInput(format!("t = {t} outside (0, 1)")));
    }
    let (b0, b2) = tangent_pair(o, t)?;
    let p0 = piece(o, 0, &b0)?;
    let p2 = piece(o, 2, &b2)?;
    let cell_volume = o.volume()?;
    Ok(PackingResult {
        params: o.params,
        t: Some(t),
        density: (p0.sector.volume + p2.sector.volume) / cell_volume,
        pieces: vec![p0, p2],
        cell_volume,
        diagnostics: None,
    })
}

/// Density of the tangent pair of horoballs at `A0` and `A2` meeting at `P(t)`.
pub fn two_horoball_density(params: TilingParams, t: f64) -> Result<PackingResult> {
    let o = two_vertex_cell(params)?;
    two_horoball_in(&o, t)
}

/// Best tangent pair over `[t1, t2]`: both endpoints plus a golden-section
/// search; ties go to the larger `t`.
pub fn optimize_two_horoball(params: TilingParams) -> Result<PackingResult> {
    let o = two_vertex_cell(params)?;
    let (t1, t2) = feasible_interval(&o)?;
    let r1 = two_horoball_in(&o, t1)?;
    if t1 == t2 {
        let d = r1.density;
        return Ok(PackingResult {
            diagnostics: Some(TwoHoroballDiagnostics {
                t1,
                t2,
                endpoint_densities: [d, d],
                golden: None,
            }),
            ..r1
        });
    }
    let r2 = two_horoball_in(&o, t2)?;
    let golden = golden_section_max(|t| Ok(two_horoball_in(&o, t)?.density), t1, t2, T_TOL)?;
    let endpoint_densities = [r1.density, r2.density];
    let mut best = r2;
    for r in [two_horoball_in(&o, golden.x)?, r1] {
        if r.density > best.density + 1e-12 {
            best = r;
        }
    }
    best.diagnostics = Some(TwoHoroballDiagnostics {
        t1,
        t2,
        endpoint_densities,
        golden: Some(golden),
    });
    Ok(best)
}

/// The `t` at which both horoball sectors have the same volume.
pub fn equal_volume_t(params: TilingParams) -> Result<f64> {
    let o = two_vertex_cell(params)?;
    let (t1, t2) = feasible_interval(&o)?;
    bisect_root(
        |t| {
            let r = two_horoball_in(&o, t)?;
            Ok(r.pieces[0].sector.volume - r.pieces[1].sector.volume)
        },
        t1,
        t2,
        1e-15,
    )
}

/// Signed hyperbolic distance from `P(t0)` to `P(t)`, positive towards `A0`.
pub fn tangency_displacement(o: &TruncatedOrthoscheme, t0: f64, t: f64) -> Result<f64> {
    let d = point_distance(&tangency_point(o, t0), &tangency_point(o, t))?;
    Ok(if t < t0 { -d } else { d })
}

/// One sample of the two-horoball density curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvePoint {
    pub t: f64,
    pub density: f64,
    pub vol_b0: f64,
    pub vol_b2: f64,
    /// Touching constraints such as `B2:u2`.
    pub active: Vec<String>,
}

/// `samples` uniform values of `t` on `[t1, t2]`; a degenerate interval
/// yields one point.
pub fn density_curve(params: TilingParams, samples: usize) -> Result<Vec<CurvePoint>> {
    if samples < 2 {
        return Err(Error::InvalidInput(format!("samples = {samples} < 2")));
    }
    let o = two_vertex_cell(params)?;
    let (t1, t2) = feasible_interval(&o)?;
    let ts: Vec<f64> = if t1 == t2 {
        vec![t1]
    } else {
        (0..samples)
            .map(|k| t1 + (t2 - t1) * k as f64 / (samples - 1) as f64)
            .collect()
    };
    ts.into_iter()
        .map(|t| {
            let r = two_horoball_in(&o, t)?;
            let mut active = Vec::new();
            for p in &r.pieces {
                for f in &p.active_faces {
                    if !o.lattice.vertex_faces[p.vertex].contains(f) {
                        active.push(format!("B{}:u{}", p.vertex, f));
                    }
                }
            }
            Ok(CurvePoint {
                t,
                density: r.density,
                vol_b0: r.pieces[0].sector.volume,
                vol_b2: r.pieces[1].sector.volume,
                active,
            })
        })
        .collect()
}
