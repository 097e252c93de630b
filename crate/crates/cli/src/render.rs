//! ASCII and SVG drawings of a Newton diagram with the support of an
//! equation. The exponent of `x` runs rightward, the exponent of `y` upward.

use std::collections::BTreeSet;
use std::fmt::Write;

use ngerm_core::classify::{model_diagram, ngerm_check_with};
use ngerm_core::poly::{diagram_of, parse, PolyError};
use ngerm_core::{GermData, NewtonDiagram, Semantics};

use crate::CliError;

const UNIT: u64 = 24;
const MARGIN: u64 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Vertex,
    SupportOnBoundary,
    SupportAbove,
    FacePoint,
    VerticalRay,
    HorizontalRay,
    Empty,
}

impl Cell {
    fn glyph(self) -> char {
        match self {
            Cell::Vertex => 'V',
            Cell::SupportOnBoundary => 'o',
            Cell::SupportAbove => '*',
            Cell::FacePoint => '+',
            Cell::VerticalRay => '|',
            Cell::HorizontalRay => '-',
            Cell::Empty => '.',
        }
    }
}

#[derive(Debug, Clone)]
pub struct Figure {
    pub diagram: NewtonDiagram,
    pub support: BTreeSet<(u64, u64)>,
}

impl Figure {
    pub fn from_polynomial(text: &str) -> Result<Figure, CliError> {
        let f = parse(text.trim()).map_err(PolyError::from)?;
        Ok(Figure {
            diagram: diagram_of(&f)?,
            support: f
                .support()
                .into_iter()
                .map(|(a, b)| (u64::from(a), u64::from(b)))
                .collect(),
        })
    }

    /// The model diagram of an N-germ; there is no support to mark.
    pub fn from_germ(g: &GermData, semantics: Semantics) -> Result<Figure, CliError> {
        let res = ngerm_check_with(g, semantics);
        let w = match (res.witness, res.refutation) {
            (Some(w), _) => w,
            (None, Some(o)) => return Err(CliError::Input(format!("no model diagram, not an N-germ: {o}"))),
            (None, None) => return Err(CliError::Internal("N-germ check returned no outcome".into())),
        };
        let diagram = model_diagram(g, &w).map_err(|e| CliError::Internal(e.to_string()))?;
        Ok(Figure {
            diagram,
            support: BTreeSet::new(),
        })
    }

    pub fn from_diagram_text(text: &str) -> Result<Figure, CliError> {
        let diagram = text
            .parse()
            .map_err(|e| CliError::Input(format!("diagram {text:?}: {e}")))?;
        Ok(Figure {
            diagram,
            support: BTreeSet::new(),
        })
    }

    fn vertices(&self) -> Vec<(u64, u64)> {
        self.diagram.vertices()
    }

    /// Lattice points shown: one column and row past the furthest vertex or
    /// support point.
    fn extent(&self) -> (u64, u64) {
        let pts = self.vertices().into_iter().chain(self.support.iter().copied());
        let (w, h) = pts.fold((0, 0), |(w, h), (a, b)| (w.max(a), h.max(b)));
        (w + 1, h + 1)
    }

    /// Position of a lattice point relative to the diagram boundary: below,
    /// on it, or strictly above. The region above is the convex hull of the
    /// vertices plus the positive quadrant.
    fn side(&self, p: (u64, u64)) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let v = self.vertices();
        let (first, last) = (v[0], v[v.len() - 1]);
        if p.0 < first.0 || p.1 < last.1 {
            return Less;
        }
        let mut best = Greater;
        for w in v.windows(2) {
            let (a, b) = (w[0], w[1]);
            if p.0 < a.0 || p.0 > b.0 {
                continue;
            }
            // Sign of the cross product (b - a) x (p - a); positive is above.
            let lhs = (b.0 as i128 - a.0 as i128) * (p.1 as i128 - a.1 as i128);
            let rhs = (b.1 as i128 - a.1 as i128) * (p.0 as i128 - a.0 as i128);
            best = best.min(lhs.cmp(&rhs));
        }
        if p.0 == first.0 && p.1 >= first.1 || p.1 == last.1 && p.0 >= last.0 {
            best = best.min(Equal);
        }
        if v.len() == 1 && (p.0 > first.0 && p.1 > first.1) {
            best = Greater;
        }
        best
    }

    pub fn cell(&self, p: (u64, u64)) -> Cell {
        use std::cmp::Ordering::*;
        let v = self.vertices();
        let (first, last) = (v[0], v[v.len() - 1]);
        if v.contains(&p) {
            return Cell::Vertex;
        }
        let in_support = self.support.contains(&p);
        match (self.side(p), in_support) {
            (Greater, true) => Cell::SupportAbove,
            (Equal, true) => Cell::SupportOnBoundary,
            (Equal, false) if p.0 == first.0 && p.1 > first.1 => Cell::VerticalRay,
            (Equal, false) if p.1 == last.1 && p.0 > last.0 => Cell::HorizontalRay,
            (Equal, false) => Cell::FacePoint,
            _ => Cell::Empty,
        }
    }

    pub fn ascii(&self) -> String {
        let (w, h) = self.extent();
        let mut out = String::new();
        let label = h.to_string().len();
        for b in (0..=h).rev() {
            let row: Vec<String> = (0..=w).map(|a| self.cell((a, b)).glyph().to_string()).collect();
            let _ = writeln!(out, "{b:>label$} | {}", row.join(" "));
        }
        let axis: Vec<String> = (0..=w).map(|a| (a % 10).to_string()).collect();
        let _ = writeln!(out, "{:>label$}   {}", "", axis.join(" "));
        let _ = writeln!(out, "diagram: {}", self.diagram);
        let _ = writeln!(out, "vertices: {}", fmt_points(&self.vertices()));
        out.push_str("legend: V vertex, o support on the boundary, * support above, + face lattice point, | - rays\n");
        out
    }

    pub fn svg(&self) -> String {
        let (w, h) = self.extent();
        let (width, height) = (w * UNIT + 2 * MARGIN, h * UNIT + 2 * MARGIN);
        let px = |a: u64| MARGIN + a * UNIT;
        let py = |b: u64| height - MARGIN - b * UNIT;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let _ = writeln!(s, r#"  <title>{}</title>"#, self.diagram);
        let _ = writeln!(
            s,
            r#"  <g class="axes" stroke="black" stroke-width="1"><line x1="{}" y1="{}" x2="{}" y2="{}"/><line x1="{}" y1="{}" x2="{}" y2="{}"/></g>"#,
            px(0),
            py(0),
            px(w),
            py(0),
            px(0),
            py(0),
            px(0),
            py(h)
        );
        let _ = writeln!(s, r##"  <g class="grid" fill="#bbb">"##);
        for a in 0..=w {
            for b in 0..=h {
                let _ = writeln!(s, r#"    <circle cx="{}" cy="{}" r="1.5"/>"#, px(a), py(b));
            }
        }
        s.push_str("  </g>\n");
        let v = self.vertices();
        let (first, last) = (v[0], v[v.len() - 1]);
        let mut chain = vec![(first.0, h)];
        chain.extend(v.iter().copied());
        chain.push((w, last.1));
        let points: Vec<String> = chain.iter().map(|&(a, b)| format!("{},{}", px(a), py(b))).collect();
        let _ = writeln!(
            s,
            r#"  <polyline class="staircase" fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#,
            points.join(" ")
        );
        let _ = writeln!(s, r#"  <g class="vertices" fill="steelblue">"#);
        for &(a, b) in &v {
            let _ = writeln!(
                s,
                r#"    <rect x="{}" y="{}" width="8" height="8"/>"#,
                px(a) - 4,
                py(b) - 4
            );
        }
        s.push_str("  </g>\n");
        let _ = writeln!(
            s,
            r#"  <g class="support" fill="none" stroke="crimson" stroke-width="1.5">"#
        );
        for &(a, b) in &self.support {
            let _ = writeln!(s, r#"    <circle cx="{}" cy="{}" r="5"/>"#, px(a), py(b));
        }
        s.push_str("  </g>\n</svg>\n");
        s
    }
}

fn fmt_points(points: &[(u64, u64)]) -> String {
    points
        .iter()
        .map(|(a, b)| format!("({a},{b})"))
        .collect::<Vec<_>>()
        .join(" ")
}
