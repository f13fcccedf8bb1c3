//! Recomputation of the result tables, text rendering and the verification
//! report.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::horoball::{
    edge_intersections, horoball_sector, horospheric_arc_length, max_horoball,
    one_horoball_density, optimize_two_horoball, PackingResult,
};
use crate::inball::{inball_density, InballResult};
use crate::lorentz::point_distance;
use crate::orthoscheme::{build_orthoscheme, TilingParams};
use crate::reference::{self, Key, Quantity, ReferenceRecord};

/// One row of the `(3,3)` horospheric distance table.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceRow {
    pub a: usize,
    pub b: usize,
    pub hyperbolic: f64,
    pub horospheric: f64,
}

/// Horospheric measurements of the maximal horoball at `A2` of `(3,3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceTable {
    pub rows: Vec<DistanceRow>,
    pub area: f64,
    pub sector_volume: f64,
}

pub fn distance_table() -> Result<DistanceTable> {
    let o = build_orthoscheme(TilingParams::new(3, 3)?)?;
    let h = max_horoball(&o, 2)?;
    let poly = edge_intersections(&h, &o)?;
    let point = |l: usize| {
        poly.iter()
            .find(|(k, _)| *k == l)
            .map(|(_, p)| *p)
            .ok_or_else(|| Error::GeometricInconsistency(format!("H{l} missing from the polygon")))
    };
    let mut rows = Vec::new();
    for (a, b, _, _) in reference::TABLE2 {
        let l = point_distance(&point(a)?, &point(b)?)?;
        rows.push(DistanceRow {
            a,
            b,
            hyperbolic: l,
            horospheric: horospheric_arc_length(l)?,
        });
    }
    let sector = horoball_sector(&h, &o)?;
    Ok(DistanceTable {
        rows,
        area: sector.area,
        sector_volume: sector.volume,
    })
}

/// Everything needed to render the tables and check the reference values.
#[derive(Clone, Debug)]
pub struct Tables {
    pub inball: Vec<InballResult>,
    pub distances: DistanceTable,
    /// One-horoball packings in reference row order.
    pub one_horoball: Vec<(usize, PackingResult)>,
    pub two_horoball: Vec<PackingResult>,
}

impl Tables {
    pub fn compute() -> Result<Self> {
        let inball = TilingParams::ALL
            .iter()
            .map(|&p| inball_density(p))
            .collect::<Result<_>>()?;
        let one_horoball = reference::TABLE3
            .iter()
            .map(|&(q, r, i, ..)| Ok((i, one_horoball_density(TilingParams::new(q, r)?, i)?)))
            .collect::<Result<_>>()?;
        let two_horoball = reference::TABLE4
            .iter()
            .map(|&(q, r, ..)| optimize_two_horoball(TilingParams::new(q, r)?))
            .collect::<Result<_>>()?;
        Ok(Self {
            inball,
            distances: distance_table()?,
            one_horoball,
            two_horoball,
        })
    }

    fn inball_for(&self, q: u32, r: u32) -> Option<&InballResult> {
        self.inball
            .iter()
            .find(|x| x.params.q() == q && x.params.r() == r)
    }

    fn two_for(&self, q: u32, r: u32) -> Option<&PackingResult> {
        self.two_horoball
            .iter()
            .find(|x| x.params.q() == q && x.params.r() == r)
    }

    /// The recomputed value a record refers to.
    pub fn value(&self, rec: &ReferenceRecord) -> Option<f64> {
        match (rec.table, rec.key, rec.quantity) {
            (1, Key::Tiling { q, r }, qty) => {
                let x = self.inball_for(q, r)?;
                match qty {
                    Quantity::Inradius => Some(x.radius),
                    Quantity::BallVolume => Some(x.ball_volume),
                    Quantity::CellVolume => Some(x.cell_volume),
                    Quantity::Density => Some(x.density),
                    _ => None,
                }
            }
            (2, Key::Edge { a, b }, qty) => {
                let row = self.distances.rows.iter().find(|x| x.a == a && x.b == b)?;
                match qty {
                    Quantity::HyperbolicDistance => Some(row.hyperbolic),
                    Quantity::HorosphericDistance => Some(row.horospheric),
                    _ => None,
                }
            }
            (2, Key::Quadrilateral, Quantity::Area) => Some(self.distances.area),
            (2, Key::Quadrilateral, Quantity::SectorVolume) => Some(self.distances.sector_volume),
            (3, Key::Vertex { q, r, vertex }, qty) => {
                let (_, x) = self
                    .one_horoball
                    .iter()
                    .find(|(i, x)| *i == vertex && x.params.q() == q && x.params.r() == r)?;
                match qty {
                    Quantity::SectorVolume => Some(x.horoball_volume()),
                    Quantity::CellVolume => Some(x.cell_volume),
                    Quantity::Density => Some(x.density),
                    _ => None,
                }
            }
            (4, Key::Tiling { q, r }, qty) => {
                let x = self.two_for(q, r)?;
                let d = x.diagnostics.as_ref()?;
                match qty {
                    Quantity::CombinedVolume => Some(x.horoball_volume()),
                    Quantity::CellVolume => Some(x.cell_volume),
                    Quantity::Density => Some(x.density),
                    Quantity::T => x.t,
                    Quantity::T1 => Some(d.t1),
                    Quantity::T2 => Some(d.t2),
                    _ => None,
                }
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEntry {
    pub table: u8,
    pub key: String,
    pub quantity: Quantity,
    pub reference: f64,
    pub computed: f64,
    pub abs_error: f64,
    pub pass: bool,
    #[serde(skip)]
    pub tolerance: f64,
    #[serde(skip)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub tolerance: f64,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(&self.entries)
            .map_err(|e| Error::InvalidInput(format!("cannot serialise report: {e}")))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let _ = write!(
                s,
                "T{}  {:<12} {:<21} ref {:.7}  got {:.7}  err {:.1e}  {}",
                e.table,
                e.key,
                e.quantity.as_str(),
                e.reference,
                e.computed,
                e.abs_error,
                if e.pass { "PASS" } else { "FAIL" }
            );
            if let Some(n) = &e.note {
                let _ = write!(s, "  ({n})");
            }
            s.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(
            s,
            "overall: {}  ({} of {} records within tolerance {:e})",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.entries.len() - failed,
            self.entries.len(),
            self.tolerance
        );
        s
    }
}

/// Compare every reference record against `tables` at the given absolute
/// tolerance.
pub fn verify(tables: &Tables, tolerance: f64) -> Result<Report> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "tolerance {tolerance} must be positive"
        )));
    }
    let mut entries = Vec::new();
    for rec in reference::records() {
        let computed = tables.value(&rec).ok_or_else(|| {
            Error::InvalidInput(format!(
                "no computed value for {} {}",
                rec.key, rec.quantity
            ))
        })?;
        let tol = tolerance * rec.tolerance_scale;
        let abs_error = (computed - rec.value).abs();
        entries.push(ReportEntry {
            table: rec.table,
            key: rec.key.to_string(),
            quantity: rec.quantity,
            reference: rec.value,
            computed,
            abs_error,
            pass: abs_error <= tol,
            tolerance: tol,
            note: rec.note(),
        });
    }
    Ok(Report { tolerance, entries })
}

pub fn render_inball(tables: &Tables) -> String {
    let mut s = String::from("(q,r)  inradius   ball_volume  cell_volume  density\n");
    for x in &tables.inball {
        let _ = writeln!(
            s,
            "{:<6} {:.7}  {:.7}    {:.7}    {:.7}",
            x.params.to_string(),
            x.radius,
            x.ball_volume,
            x.cell_volume,
            x.density
        );
    }
    s
}

pub fn render_distances(tables: &Tables) -> String {
    let mut s = String::from("edge  hyperbolic  horospheric\n");
    for r in &tables.distances.rows {
        let _ = writeln!(
            s,
            "H{}H{}  {:.7}   {:.7}",
            r.a, r.b, r.hyperbolic, r.horospheric
        );
    }
    s
}

pub fn render_horoball_one(tables: &Tables) -> String {
    let mut s = String::from("(q,r)  i  sector_volume  cell_volume  density\n");
    for (i, x) in &tables.one_horoball {
        let _ = writeln!(
            s,
            "{:<6} {}  {:.7}      {:.7}    {:.7}",
            x.params.to_string(),
            i,
            x.horoball_volume(),
            x.cell_volume,
            x.density
        );
    }
    s
}

pub fn render_horoball_two(tables: &Tables) -> String {
    let mut s = String::from("(q,r)  t          combined_volume  cell_volume  density\n");
    for x in &tables.two_horoball {
        let _ = writeln!(
            s,
            "{:<6} {:.7}  {:.7}        {:.7}    {:.7}",
            x.params.to_string(),
            x.t.unwrap_or(f64::NAN),
            x.horoball_volume(),
            x.cell_volume,
            x.density
        );
    }
    s
}
