//! Optimal inscribed ball of the truncated orthoscheme and its packing
//! density.
//!
//! A ball of radius `ρ` centred at `c` touches the (unit) face `û` when
//! `<ĉ,û> = sinh ρ` for the hyperboloid representative `ĉ`. Tangency to four
//! faces is therefore the linear system `W v = 1` with `ĉ = v / sqrt(-<v,v>)`
//! and `sinh ρ = 1 / sqrt(-<v,v>)`.

use nalgebra::{Matrix4, Vector4};

use crate::error::{Error, Result};
use crate::lorentz::{bilinear_form, LorentzVector, Role};
use crate::orthoscheme::{
    build_orthoscheme, orthoscheme_volume, SchlafliMatrices, TilingParams, TruncatedOrthoscheme,
    FACE_COUNT,
};

/// Slack allowed on face distances when testing feasibility and tangency.
pub const DISTANCE_TOL: f64 = 1e-9;

const SINGULAR_TOL: f64 = 1e-10;
const TIE_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InballKind {
    /// The inball of the complete orthoscheme survives the truncation.
    Type1,
    /// The truncating face `u4` constrains the ball.
    Type2,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InballResult {
    pub params: TilingParams,
    pub center: LorentzVector,
    pub radius: f64,
    pub kind: InballKind,
    pub tangent_faces: Vec<usize>,
    pub ball_volume: f64,
    pub cell_volume: f64,
    pub density: f64,
}

/// A centre equidistant from four faces.
#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub faces: [usize; 4],
    pub center: LorentzVector,
    pub radius: f64,
    /// Smallest signed distance from the centre to any of the five faces.
    pub min_distance: f64,
    pub feasible: bool,
}

/// Distance from a proper point to a plane.
pub fn face_distance(c: &LorentzVector, u: &LorentzVector) -> Result<f64> {
    let cc = c.self_product();
    let uu = u.self_product();
    if cc >= 0.0 {
        return Err(Error::Domain(format!("{c:?} is not a proper point")));
    }
    if uu <= 0.0 {
        return Err(Error::DegeneratePlane(uu));
    }
    Ok((bilinear_form(c, u).abs() / (-cc * uu).sqrt()).asinh())
}

/// Distance to the plane, negative on the exterior side of an oriented face.
pub fn signed_face_distance(c: &LorentzVector, u: &LorentzVector) -> f64 {
    let sign = if c.coords()[0] < 0.0 { -1.0 } else { 1.0 };
    let s = sign * bilinear_form(c, u) / (-c.self_product() * u.self_product()).sqrt();
    s.asinh()
}

/// `Σ det(b) h_ij > 0`.
pub fn inball_exists(m: &SchlafliMatrices) -> bool {
    m.det_b * m.h_sum() > 0.0
}

/// `Σ det(b) h_ij` in closed form:
/// `4 + 4a + 4ac - 2a² - 4c²` with `a = cos(π/q)`, `c = cos(π/r)`.
pub fn cofactor_sum_closed_form(params: TilingParams) -> f64 {
    let (a, c) = (params.cos_q(), params.cos_r());
    4.0 + 4.0 * a + 4.0 * a * c - 2.0 * a * a - 4.0 * c * c
}

/// `4 + 2a² + 4ac - 4c²`, a lower bound of [`cofactor_sum_closed_form`]
/// that is itself above `4 - 4c² > 0`.
pub fn cofactor_sum_lower_bound(params: TilingParams) -> f64 {
    let (a, c) = (params.cos_q(), params.cos_r());
    4.0 + 2.0 * a * a + 4.0 * a * c - 4.0 * c * c
}

/// `cos(π/r) >= cos(π/q)`: the inball of the complete orthoscheme does not
/// reach the truncating plane.
pub fn truncation_preserves_inradius(params: TilingParams) -> bool {
    params.q() <= params.r()
}

/// `arcsinh(sqrt(-1 / Σ h_ij))`.
pub fn inradius_type1(m: &SchlafliMatrices) -> Result<f64> {
    let s = m.h_sum();
    if s >= 0.0 {
        return Err(Error::InconsistentInput(format!(
            "Σ h_ij = {s} is not negative for {}",
            m.params
        )));
    }
    Ok((-1.0 / s).sqrt().asinh())
}

/// Solve for the centre equidistant from the four given faces.
fn candidate(o: &TruncatedOrthoscheme, faces: [usize; 4]) -> Option<Candidate> {
    let units: Vec<LorentzVector> = (0..FACE_COUNT).map(|i| o.unit_face(i)).collect();
    let mut w = Matrix4::zeros();
    for (row, &i) in faces.iter().enumerate() {
        let u = units[i].coords();
        w[(row, 0)] = -u[0];
        w[(row, 1)] = u[1];
        w[(row, 2)] = u[2];
        w[(row, 3)] = u[3];
    }
    if w.determinant().abs() < SINGULAR_TOL {
        return None;
    }
    let v = w.lu().solve(&Vector4::repeat(1.0))?;
    let v = LorentzVector::from_vector(&v, Role::Point);
    let n = v.self_product();
    if n >= 0.0 {
        return None;
    }
    let center = v * (1.0 / (-n).sqrt());
    let radius = (1.0 / (-n).sqrt()).asinh();
    let min_distance = units
        .iter()
        .map(|u| signed_face_distance(&center, u))
        .fold(f64::INFINITY, f64::min);
    let feasible = center.coords()[0] > 0.0 && min_distance >= radius - DISTANCE_TOL;
    Some(Candidate {
        faces,
        center: center.normalized(),
        radius,
        min_distance,
        feasible,
    })
}

/// All non-singular four-face candidates among `subsets`, in the given order.
pub fn incenter_candidates(o: &TruncatedOrthoscheme, subsets: &[[usize; 4]]) -> Vec<Candidate> {
    subsets.iter().filter_map(|&s| candidate(o, s)).collect()
}

/// Four-element subsets of the five faces in lexicographic order.
pub fn face_subsets() -> Vec<[usize; 4]> {
    (0..FACE_COUNT)
        .rev()
        .map(|skip| {
            let mut s = [0; 4];
            for (slot, i) in s.iter_mut().zip((0..FACE_COUNT).filter(|&i| i != skip)) {
                *slot = i;
            }
            s
        })
        .collect()
}

fn best_candidate(o: &TruncatedOrthoscheme, subsets: &[[usize; 4]]) -> Result<Candidate> {
    let mut best: Option<Candidate> = None;
    for c in incenter_candidates(o, subsets) {
        if !c.feasible {
            continue;
        }
        match &best {
            Some(b) if c.radius <= b.radius + TIE_TOL => {}
            _ => best = Some(c),
        }
    }
    best.ok_or_else(|| {
        Error::GeometricDegeneracy(format!("no feasible incentre candidate for {}", o.params))
    })
}

fn result(o: &TruncatedOrthoscheme, c: Candidate, kind: InballKind) -> Result<InballResult> {
    let tangent_faces = (0..FACE_COUNT)
        .filter(|&i| {
            (signed_face_distance(&c.center, &o.unit_face(i)) - c.radius).abs() <= DISTANCE_TOL
        })
        .collect();
    let ball_volume = ball_volume(c.radius)?;
    let cell_volume = orthoscheme_volume(o.params)?;
    Ok(InballResult {
        params: o.params,
        center: c.center,
        radius: c.radius,
        kind,
        tangent_faces,
        ball_volume,
        cell_volume,
        density: ball_volume / cell_volume,
    })
}

/// Largest ball touching `u4` and three of `u0..u3`.
pub fn incenter_type2(o: &TruncatedOrthoscheme) -> Result<InballResult> {
    let subsets: Vec<[usize; 4]> = face_subsets()
        .into_iter()
        .filter(|s| s.contains(&4))
        .collect();
    let c = best_candidate(o, &subsets)?;
    result(o, c, InballKind::Type2)
}

/// Largest inscribed ball over all five four-face candidates.
pub fn incenter_search(o: &TruncatedOrthoscheme) -> Result<InballResult> {
    let c = best_candidate(o, &face_subsets())?;
    let kind = if c.faces == [0, 1, 2, 3] {
        InballKind::Type1
    } else {
        InballKind::Type2
    };
    result(o, c, kind)
}

/// `π (sinh 2r - 2r)`.
pub fn ball_volume(r: f64) -> Result<f64> {
    if r.is_nan() || r < 0.0 {
        return Err(Error::Domain(format!("negative radius {r}")));
    }
    let x = 2.0 * r;
    if x < 0.1 {
        // sinh x - x = Σ_{k≥1} x^{2k+1} / (2k+1)!
        let mut term = x * x * x / 6.0;
        let mut sum: f64 = 0.0;
        let mut k = 1.0;
        while term > 1e-17 * sum.max(f64::MIN_POSITIVE) && k < 30.0 {
            sum += term;
            term *= x * x / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            k += 1.0;
        }
        return Ok(std::f64::consts::PI * sum);
    }
    Ok(std::f64::consts::PI * (x.sinh() - x))
}

/// Optimal inball of `Ŝ(q, r)` and its density.
pub fn inball_density(params: TilingParams) -> Result<InballResult> {
    let o = build_orthoscheme(params)?;
    if !inball_exists(&o.matrices) {
        return Err(Error::InconsistentInput(format!("{params} has no inball")));
    }
    if truncation_preserves_inradius(params) {
        let c = candidate(&o, [0, 1, 2, 3])
            .filter(|c| c.feasible)
            .ok_or_else(|| {
                Error::GeometricDegeneracy(format!("{params}: type 1 centre infeasible"))
            })?;
        let r = inradius_type1(&o.matrices)?;
        let mut res = result(&o, c, InballKind::Type1)?;
        res.radius = r;
        res.ball_volume = ball_volume(r)?;
        res.density = res.ball_volume / res.cell_volume;
        Ok(res)
    } else {
        incenter_type2(&o)
    }
}
