//! SVG drawings of a shape with one or two paths on the grid.

use std::fmt::Write;

use staircase_core::{Path, Point, Shape};

const COLORS: [&str; 4] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd"];

#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub shape: Shape,
    pub paths: Vec<Path>,
    pub marks: Vec<Point>,
    /// Pixels per grid unit.
    pub scale: u32,
}

impl RenderSpec {
    /// Marks must lie on at least one of the paths.
    pub fn new(shape: Shape, paths: Vec<Path>, marks: Vec<Point>, scale: u32) -> Result<Self, String> {
        if paths.is_empty() {
            return Err("at least one path is required".into());
        }
        if scale == 0 {
            return Err("scale must be positive".into());
        }
        if let Some(m) = marks.iter().find(|&&m| paths.iter().all(|p| p.index_of(m).is_none())) {
            return Err(format!("mark {m} is not on any path"));
        }
        Ok(RenderSpec {
            shape,
            paths,
            marks,
            scale,
        })
    }

    /// `(rows, cols)` of the drawn grid.
    fn extent(&self) -> (usize, usize) {
        let mut rows = self.shape.len();
        let mut cols = self.shape.width();
        for v in self.paths.iter().flat_map(|p| p.vertices()) {
            rows = rows.max(v.row);
            cols = cols.max(v.col);
        }
        (rows.max(1), cols.max(1))
    }

    fn x(&self, col: usize) -> u64 {
        (col as u64 + 1) * self.scale as u64
    }

    fn y(&self, row: usize) -> u64 {
        (row as u64 + 1) * self.scale as u64
    }

    pub fn to_svg(&self) -> String {
        let (rows, cols) = self.extent();
        let s = self.scale as u64;
        let width = (cols as u64 + 2) * s;
        let height = (rows as u64 + 2) * s;
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let _ = writeln!(out, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#);

        let _ = writeln!(out, r##"<g class="shape" fill="#bbbbbb" stroke="none">"##);
        for (r, c) in self.shape.cells() {
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{}" width="{s}" height="{s}"/>"#,
                self.x(c - 1),
                self.y(r - 1)
            );
        }
        let _ = writeln!(out, "</g>");

        let _ = writeln!(out, r##"<g class="grid" stroke="#999999" stroke-width="1">"##);
        for r in 0..=rows {
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}"/>"#,
                self.x(0),
                self.x(cols),
                y = self.y(r)
            );
        }
        for c in 0..=cols {
            let _ = writeln!(
                out,
                r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#,
                self.y(0),
                self.y(rows),
                x = self.x(c)
            );
        }
        let _ = writeln!(out, "</g>");

        let width_px = (s / 10).max(2);
        for (k, p) in self.paths.iter().enumerate() {
            let points: Vec<String> = p
                .vertices()
                .iter()
                .map(|v| format!("{},{}", self.x(v.col), self.y(v.row)))
                .collect();
            let _ = writeln!(
                out,
                r#"<polyline class="path" data-path="{p}" points="{}" fill="none" stroke="{}" stroke-width="{width_px}" stroke-linejoin="round"/>"#,
                points.join(" "),
                COLORS[k % COLORS.len()]
            );
        }

        let radius = (s / 6).max(3);
        for m in &self.marks {
            let _ = writeln!(
                out,
                r#"<circle class="mark" cx="{}" cy="{}" r="{radius}" fill="black"/>"#,
                self.x(m.col),
                self.y(m.row)
            );
        }
        let _ = writeln!(out, "</svg>");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marks_must_be_on_a_path() {
        let p: Path = "(2,0):ENNE".parse().unwrap();
        let shape: Shape = "1".parse().unwrap();
        assert!(RenderSpec::new(shape.clone(), vec![p.clone()], vec![Point::new(1, 1)], 40).is_ok());
        assert!(RenderSpec::new(shape.clone(), vec![p.clone()], vec![Point::new(0, 0)], 40).is_err());
        assert!(RenderSpec::new(shape, vec![], vec![], 40).is_err());
    }

    #[test]
    fn svg_contains_one_polyline_per_path() {
        let p: Path = "(2,0):ENNE".parse().unwrap();
        let q: Path = "(2,0):EENN".parse().unwrap();
        let spec = RenderSpec::new("1".parse().unwrap(), vec![p, q], vec![Point::new(2, 1)], 20).unwrap();
        let svg = spec.to_svg();
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.contains(r#"points="20,60 40,60 40,40 40,20 60,20""#));
        // one shaded cell for the shape (1)
        assert!(svg.contains(r#"<rect x="20" y="20" width="20" height="20"/>"#));
    }
}
