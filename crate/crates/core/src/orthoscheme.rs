//! Coxeter–Schläfli matrices, vertex coordinates and volume of the simply
//! truncated orthoscheme generating `{∞, q, r, ∞}`.
//!
//! Faces `u0..u3` bound the complete orthoscheme with vertices `A0..A3`
//! (`A_i` opposite `u_i`). `A3` is ultra-ideal and is cut off by its polar
//! plane `u4`, which meets the edges `A1A3` and `A0A3` in `A4` and `A5`.
//! `A2` is always ideal; `A0` is ideal exactly when `1/q + 1/r = 1/2`.
//!
//! The embedding is normalised so that `A1` is the model centre and `A2` is
//! `(1,0,0,1)`.

mod lobachevsky;

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use nalgebra::{Matrix4, SMatrix, SymmetricEigen, Vector4};

use crate::error::{Error, Result};
use crate::lorentz::{
    bilinear_form, classify, ideal_to_canonical, LorentzIsometry, LorentzVector, PointClass, Role,
    IDEAL_TOL,
};

pub use lobachevsky::lobachevsky;

/// Labels of the vertices of the truncated polyhedron (`A3` is cut off).
pub const VERTEX_LABELS: [usize; 5] = [0, 1, 2, 4, 5];

/// Number of bounding faces `u0..u4`.
pub const FACE_COUNT: usize = 5;

/// A validated `(q, r)` pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TilingParams {
    q: u32,
    r: u32,
}

impl TilingParams {
    /// The eight admissible tilings in table order.
    pub const ALL: [TilingParams; 8] = [
        TilingParams { q: 3, r: 3 },
        TilingParams { q: 3, r: 4 },
        TilingParams { q: 3, r: 5 },
        TilingParams { q: 3, r: 6 },
        TilingParams { q: 4, r: 3 },
        TilingParams { q: 4, r: 4 },
        TilingParams { q: 5, r: 3 },
        TilingParams { q: 6, r: 3 },
    ];

    pub fn new(q: u32, r: u32) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidParams {
            q,
            r,
            reason: reason.to_string(),
        };
        if q < 3 || r < 3 {
            return Err(invalid("q and r must be at least 3"));
        }
        // 1/q + 1/r >= 1/2  <=>  2(q + r) >= qr
        if 2 * (q + r) < q * r {
            return Err(invalid("1/q + 1/r must be at least 1/2"));
        }
        let p = Self { q, r };
        if !Self::ALL.contains(&p) {
            return Err(invalid("not one of the admissible tilings"));
        }
        Ok(p)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `1/q + 1/r = 1/2`, i.e. `A0` is ideal as well as `A2`.
    pub fn has_two_ideal_vertices(&self) -> bool {
        self.q * self.r == 2 * (self.q + self.r)
    }

    pub fn cos_q(&self) -> f64 {
        (PI / f64::from(self.q)).cos()
    }

    pub fn cos_r(&self) -> f64 {
        (PI / f64::from(self.r)).cos()
    }
}

impl fmt::Display for TilingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.q, self.r)
    }
}

/// The Coxeter–Schläfli matrix `b` of the complete orthoscheme, its inverse,
/// and the singular 5×5 matrix `B` including the truncating face.
#[derive(Clone, Debug, PartialEq)]
pub struct SchlafliMatrices {
    pub params: TilingParams,
    pub b: Matrix4<f64>,
    pub h: Matrix4<f64>,
    pub big_b: SMatrix<f64, 5, 5>,
    pub det_b: f64,
    pub c4: f64,
}

impl SchlafliMatrices {
    /// `Σ_ij h_ij`.
    pub fn h_sum(&self) -> f64 {
        self.h.sum()
    }
}

/// `c4` from the Napier-cycle closed form with `cos(π/p) = 1`.
fn c4_closed_form(cq: f64, cr: f64) -> f64 {
    let cp: f64 = 1.0;
    let num = 1.0 + cp * cp * cr * cr - cp * cp - cq * cq - cr * cr;
    let den = 1.0 - cp * cp - cq * cq;
    -(num / den).sqrt()
}

pub fn build_matrices(params: TilingParams) -> Result<SchlafliMatrices> {
    let params = TilingParams::new(params.q, params.r)?;
    let (cq, cr) = (params.cos_q(), params.cos_r());
    #[rustfmt::skip]
    let b = Matrix4::new(
        1.0, -1.0, 0.0, 0.0,
        -1.0, 1.0, -cq, 0.0,
        0.0, -cq, 1.0, -cr,
        0.0, 0.0, -cr, 1.0,
    );
    let h = b
        .try_inverse()
        .ok_or_else(|| Error::GeometricDegeneracy(format!("b is singular for {params}")))?;
    let c4 = c4_closed_form(cq, cr);
    let mut big_b = SMatrix::<f64, 5, 5>::identity();
    big_b.fixed_view_mut::<4, 4>(0, 0).copy_from(&b);
    big_b[(3, 4)] = c4;
    big_b[(4, 3)] = c4;
    Ok(SchlafliMatrices {
        params,
        det_b: b.determinant(),
        b,
        h,
        big_b,
        c4,
    })
}

/// Combinatorics of the truncated polyhedron, derived from incidences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    /// Faces through each vertex label (index 3 is empty).
    pub vertex_faces: [Vec<usize>; 6],
    /// Vertex labels on each face.
    pub face_vertices: [Vec<usize>; FACE_COUNT],
    /// Edges as ordered label pairs `(v, w)` with `v < w`.
    pub edges: Vec<(usize, usize)>,
}

impl FaceLattice {
    pub fn euler_characteristic(&self) -> i64 {
        let v = VERTEX_LABELS.len() as i64;
        let e = self.edges.len() as i64;
        let f = self.face_vertices.iter().filter(|f| !f.is_empty()).count() as i64;
        v - e + f
    }

    /// Faces containing both vertices.
    pub fn common_faces(&self, v: usize, w: usize) -> Vec<usize> {
        self.vertex_faces[v]
            .iter()
            .copied()
            .filter(|f| self.vertex_faces[w].contains(f))
            .collect()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Neighbours of `v` ordered around the vertex figure: consecutive edges
    /// share a face. Starts at the smallest label and steps to the smaller
    /// of its two candidates.
    pub fn vertex_figure(&self, v: usize) -> Vec<usize> {
        let nb = self.neighbours(v);
        if nb.len() < 3 {
            return nb;
        }
        let mut order = vec![nb[0]];
        while order.len() < nb.len() {
            let cur = *order.last().unwrap();
            let cur_faces = self.common_faces(v, cur);
            let next = nb.iter().copied().find(|w| {
                !order.contains(w)
                    && self
                        .common_faces(v, *w)
                        .iter()
                        .any(|f| cur_faces.contains(f))
            });
            match next {
                Some(w) => order.push(w),
                None => break,
            }
        }
        order
    }
}

/// The fundamental polyhedron `Ŝ(q, r)` embedded in the projective model.
#[derive(Clone, Debug)]
pub struct TruncatedOrthoscheme {
    pub params: TilingParams,
    pub matrices: SchlafliMatrices,
    /// Face forms `u0..u4`, oriented so the interior is `<x, u_i> > 0` for
    /// future representatives `x`.
    pub faces: [LorentzVector; FACE_COUNT],
    /// `A0..A3` of the complete orthoscheme.
    pub vertices: [LorentzVector; 4],
    /// `A4 ∈ A1A3` and `A5 ∈ A0A3` on the truncating face `u4`.
    pub truncation: [LorentzVector; 2],
    pub lattice: FaceLattice,
    /// Labels of the ideal vertices, ascending.
    pub ideal: Vec<usize>,
}

impl TruncatedOrthoscheme {
    /// Point with label `0..=5` (`3` is the cut-off ultra-ideal vertex).
    pub fn point(&self, label: usize) -> LorentzVector {
        match label {
            0..=3 => self.vertices[label],
            4 | 5 => self.truncation[label - 4],
            _ => panic!("vertex label {label} out of range"),
        }
    }

    pub fn face(&self, i: usize) -> LorentzVector {
        self.faces[i]
    }

    /// Face `i` scaled to `<u,u> = 1`.
    pub fn unit_face(&self, i: usize) -> LorentzVector {
        let u = self.faces[i];
        u * (1.0 / u.self_product().sqrt())
    }

    pub fn is_ideal(&self, label: usize) -> bool {
        self.ideal.contains(&label)
    }

    /// Frame used to fix coordinates around an ideal vertex.
    pub fn canonical_frame(&self) -> [LorentzVector; 5] {
        [
            self.vertices[1],
            self.vertices[0],
            self.truncation[0],
            self.truncation[1],
            self.vertices[2],
        ]
    }

    /// Whether `x` lies in the closed polyhedron, with slack `tol` on each
    /// normalised face inequality.
    pub fn contains(&self, x: &LorentzVector, tol: f64) -> bool {
        let norm = x.euclidean_norm_sq();
        if x.self_product() > IDEAL_TOL * norm {
            return false;
        }
        let sign = if x.coords()[0] < 0.0 { -1.0 } else { 1.0 };
        let xs = *x * (sign / norm.sqrt());
        (0..FACE_COUNT).all(|i| bilinear_form(&xs, &self.unit_face(i)) >= -tol)
    }

    /// Label of the polyhedron vertex projectively equal to `x`.
    pub fn label_of(&self, x: &LorentzVector) -> Option<usize> {
        VERTEX_LABELS.iter().copied().find(|&v| {
            let p = self.point(v).to_vector();
            let y = x.to_vector();
            let cross = p * y.transpose() - y * p.transpose();
            cross.abs().max() <= 1e-9 * p.norm() * y.norm()
        })
    }

    /// The same polyhedron moved by an isometry.
    pub fn transformed(&self, iso: &LorentzIsometry) -> Self {
        Self {
            faces: self.faces.map(|u| iso.apply(&u)),
            vertices: self.vertices.map(|v| iso.apply(&v).normalized()),
            truncation: self.truncation.map(|v| iso.apply(&v).normalized()),
            ..self.clone()
        }
    }

    pub fn volume(&self) -> Result<f64> {
        orthoscheme_volume(self.params)
    }
}

/// Face forms `u0..u3` from `b = U^T J U` and their dual vertices `U h`.
fn embed(m: &SchlafliMatrices) -> Result<([LorentzVector; 4], [LorentzVector; 4])> {
    let eig = SymmetricEigen::new(m.b);
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let negatives = order.iter().filter(|&&i| eig.eigenvalues[i] < 0.0).count();
    if negatives != 1 {
        return Err(Error::GeometricDegeneracy(format!(
            "b has {negatives} negative eigenvalues, expected 1"
        )));
    }
    let mut u = Matrix4::zeros();
    for (row, &k) in order.iter().enumerate() {
        let scale = eig.eigenvalues[k].abs().sqrt();
        let col = eig.eigenvectors.column(k);
        for j in 0..4 {
            u[(row, j)] = scale * col[j];
        }
    }
    let a = u * m.h;
    let col = |mat: &Matrix4<f64>, i: usize, role| {
        LorentzVector::from_vector(&Vector4::from(mat.column(i)), role)
    };
    let mut faces = [0, 1, 2, 3].map(|i| col(&u, i, Role::Form));
    let mut verts = [0, 1, 2, 3].map(|i| col(&a, i, Role::Point));
    if verts[1].coords()[0] < 0.0 {
        faces = faces.map(|f| -f);
        verts = verts.map(|v| -v);
    }
    Ok((faces, verts))
}

fn derive_lattice(faces: &[LorentzVector; FACE_COUNT], pts: &[LorentzVector; 6]) -> FaceLattice {
    let mut vertex_faces: [Vec<usize>; 6] = Default::default();
    let mut face_vertices: [Vec<usize>; FACE_COUNT] = Default::default();
    for &v in &VERTEX_LABELS {
        let p = pts[v];
        let pn = p.euclidean_norm_sq().sqrt();
        for (i, u) in faces.iter().enumerate() {
            let un = u.euclidean_norm_sq().sqrt();
            if bilinear_form(&p, u).abs() <= 1e-9 * pn * un {
                vertex_faces[v].push(i);
                face_vertices[i].push(v);
            }
        }
    }
    let mut edges = Vec::new();
    for (k, &v) in VERTEX_LABELS.iter().enumerate() {
        for &w in &VERTEX_LABELS[k + 1..] {
            let shared = vertex_faces[v]
                .iter()
                .filter(|f| vertex_faces[w].contains(f))
                .count();
            if shared >= 2 {
                edges.push((v, w));
            }
        }
    }
    FaceLattice {
        vertex_faces,
        face_vertices,
        edges,
    }
}

pub fn build_orthoscheme(params: TilingParams) -> Result<TruncatedOrthoscheme> {
    let matrices = build_matrices(params)?;
    let (f, a) = embed(&matrices)?;

    let a3 = a[3];
    let mut u4 = -a3.as_form();
    if bilinear_form(&a[0], &u4) < 0.0 {
        u4 = -u4;
    }
    let a33 = a3.self_product();
    let cut = |p: LorentzVector| p - a3 * (bilinear_form(&p, &a3) / a33);
    let (a4, a5) = (cut(a[1]), cut(a[0]));

    let iso = ideal_to_canonical(&a[2], &[a[1], a[0], a4, a5])?;
    let faces = [f[0], f[1], f[2], f[3], u4].map(|x| iso.apply(&x));
    let vertices = [a[0], a[1], a[2], a3].map(|x| iso.apply(&x).normalized());
    let truncation = [a4, a5].map(|x| iso.apply(&x).normalized());

    let pts = [
        vertices[0],
        vertices[1],
        vertices[2],
        vertices[3],
        truncation[0],
        truncation[1],
    ];
    let lattice = derive_lattice(&faces, &pts);
    if lattice.euler_characteristic() != 2 {
        return Err(Error::GeometricDegeneracy(format!(
            "face lattice of {params} has Euler characteristic {}",
            lattice.euler_characteristic()
        )));
    }
    let ideal = VERTEX_LABELS
        .iter()
        .copied()
        .filter(|&v| classify(&pts[v], IDEAL_TOL) == Ok(PointClass::Ideal))
        .collect();

    Ok(TruncatedOrthoscheme {
        params,
        matrices,
        faces,
        vertices,
        truncation,
        lattice,
        ideal,
    })
}

/// Volume of `Ŝ(q, r)` from the Kellerhals formula with essential angles
/// `α01 = 0`, `α12 = π/q`, `α23 = π/r`.
pub fn orthoscheme_volume(params: TilingParams) -> Result<f64> {
    let a01 = 0.0_f64;
    let a12 = PI / f64::from(params.q());
    let a23 = PI / f64::from(params.r());
    let radicand = a12.cos().powi(2) - a01.sin().powi(2) * a23.sin().powi(2);
    if radicand < 0.0 {
        return Err(Error::InadmissibleParameter(format!(
            "{params}: negative radicand {radicand:e}"
        )));
    }
    let theta = (radicand.sqrt() / (a01.cos() * a23.cos())).atan();
    let l = lobachevsky;
    Ok(0.25
        * (l(a01 + theta) - l(a01 - theta)
            + l(FRAC_PI_2 + a12 - theta)
            + l(FRAC_PI_2 - a12 - theta)
            + l(a23 + theta)
            - l(a23 - theta)
            + 2.0 * l(FRAC_PI_2 - theta)))
}
