//! Ferrers shapes placed in the northwest corner of the grid.
//!
//! Grid vertices are addressed as `(row, col)` with rows counted southward
//! from the top boundary line and columns eastward from the left one. Cell
//! `(r, c)` of the shape (1-indexed, English notation) is the unit square
//! whose corners are the vertices `(r-1, c-1)` through `(r, c)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A grid vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub row: usize,
    pub col: usize,
}

impl Point {
    pub const fn new(row: usize, col: usize) -> Self {
        Point { row, col }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition `λ₁ ≥ λ₂ ≥ … ≥ λ_k ≥ 1`, possibly empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn empty() -> Self {
        Shape { parts: Vec::new() }
    }

    /// Validates raw parts. Trailing zeros are dropped; indices in
    /// diagnostics are 1-based.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if let Some(pos) = raw.iter().position(|&x| x < 0) {
            return Err(Error::NegativePart { index: pos + 1 });
        }
        let mut parts: Vec<usize> = raw.iter().map(|&x| x as usize).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(pos) = parts.windows(2).position(|w| w[1] > w[0]) {
            return Err(Error::NotDecreasing { index: pos + 2 });
        }
        Ok(Shape { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Shape { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_t` for `t ≥ 1`; zero past the last part.
    pub fn part(&self, t: usize) -> usize {
        assert!(t >= 1, "parts are 1-indexed");
        self.parts.get(t - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts `k`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ₁`, or zero for the empty shape.
    pub fn width(&self) -> usize {
        self.part(1)
    }

    pub fn cell_count(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Shape {
        let parts = (1..=self.width())
            .map(|t| self.parts.iter().take_while(|&&p| p >= t).count())
            .collect();
        Shape { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Whether a path may visit `v`: true exactly when `v` lies weakly
    /// southeast of the staircase boundary.
    pub fn vertex_allowed(&self, v: Point) -> bool {
        v.col >= self.part(v.row + 1)
    }

    /// Iterator over the cells `(r, c)` (1-indexed) of the diagram.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Shape {
    /// Comma-separated parts, the same syntax `FromStr` accepts. The empty
    /// shape renders as the empty string.
    pub fn to_syntax(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromStr for Shape {
    type Err = Error;

    /// Parses `"a,b,c"`. The empty string and `"0"` give the empty shape.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let trimmed = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        if trimmed.trim().is_empty() {
            return Ok(Shape::empty());
        }
        let raw = trimmed
            .split(',')
            .map(|tok| {
                tok.trim().parse::<i64>().map_err(|e| Error::ParseShape {
                    input: s.to_string(),
                    reason: format!("{:?}: {e}", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Shape::new(&raw)
    }
}

impl Serialize for Shape {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Shape {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(deserializer)?;
        Shape::new(&raw).map_err(serde::de::Error::custom)
    }
}

/// All shapes with at most `max_rows` parts, each at most `max_cols`,
/// ordered by cell count and then lexicographically by parts.
pub fn shapes_in_box(max_rows: usize, max_cols: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_box(max_rows, max_cols, &mut current, &mut out);
    out.sort_by(|a, b| {
        a.cell_count()
            .cmp(&b.cell_count())
            .then_with(|| a.parts.cmp(&b.parts))
    });
    out
}

fn fill_box(rows_left: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Shape>) {
    out.push(Shape::from_parts_unchecked(current.clone()));
    if rows_left == 0 {
        return;
    }
    for p in 1..=cap {
        current.push(p);
        fill_box(rows_left - 1, p, current, out);
        current.pop();
    }
}

/// Every partition of `n`, lexicographically by parts.
pub fn partitions_of(n: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_sum(n, n, &mut current, &mut out);
    out.sort();
    out
}

fn fill_sum(remaining: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Shape>) {
    if remaining == 0 {
        out.push(Shape::from_parts_unchecked(current.clone()));
        return;
    }
    for p in 1..=cap.min(remaining) {
        current.push(p);
        fill_sum(remaining - p, p, current, out);
        current.pop();
    }
}

/// Every shape with at most `max_cells` cells, by cell count then parts.
pub fn shapes_up_to_cells(max_cells: usize) -> Vec<Shape> {
    (0..=max_cells).flat_map(partitions_of).collect()
}
