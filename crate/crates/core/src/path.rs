//! Northeastern lattice paths, validity against a shape, and the two
//! independent ways of counting them.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, ORACLE_MAX_TOTAL};
use crate::shape::{Point, Shape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// East: column + 1. Sorts before `N`.
    E,
    /// North: row - 1.
    N,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'E' | 'e' => Some(Step::E),
            'N' | 'n' => Some(Step::N),
            _ => None,
        }
    }
}

/// A monotone path: a start vertex plus a string of north/east steps.
///
/// Vertices and per-column / per-row index ranges are computed once on
/// construction, so splitting at a vertex index is cheap.
#[derive(Clone)]
pub struct Path {
    start: Point,
    steps: Vec<Step>,
    vertices: Vec<Point>,
    // vertices in column start.col + c occupy col_bounds[c]..col_bounds[c + 1]
    col_bounds: Vec<usize>,
    // vertices in row start.row - r occupy row_bounds[r]..row_bounds[r + 1]
    row_bounds: Vec<usize>,
}

impl Path {
    pub fn new(start: Point, steps: Vec<Step>) -> Result<Path> {
        let mut vertices = Vec::with_capacity(steps.len() + 1);
        vertices.push(start);
        let mut at = start;
        for (t, step) in steps.iter().enumerate() {
            at = match step {
                Step::E => Point::new(at.row, at.col + 1),
                Step::N => {
                    let row = at
                        .row
                        .checked_sub(1)
                        .ok_or(Error::NegativeCoordinate { step: t + 1 })?;
                    Point::new(row, at.col)
                }
            };
            vertices.push(at);
        }

        let mut col_bounds = vec![0];
        let mut row_bounds = vec![0];
        for (t, step) in steps.iter().enumerate() {
            match step {
                Step::E => col_bounds.push(t + 1),
                Step::N => row_bounds.push(t + 1),
            }
        }
        col_bounds.push(vertices.len());
        row_bounds.push(vertices.len());

        Ok(Path {
            start,
            steps,
            vertices,
            col_bounds,
            row_bounds,
        })
    }

    pub fn from_letters(start: Point, letters: &str) -> Result<Path> {
        let steps = letters
            .chars()
            .map(|c| {
                Step::from_letter(c).ok_or_else(|| Error::ParsePath {
                    input: letters.to_string(),
                    reason: format!("unknown step letter {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Path::new(start, steps)
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn end(&self) -> Point {
        *self.vertices.last().expect("a path has at least one vertex")
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn step_letters(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn vertex(&self, t: usize) -> Point {
        self.vertices[t]
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Index range of the vertices lying in column `j`, if any.
    pub fn column_range(&self, j: usize) -> Option<Range<usize>> {
        let c = j.checked_sub(self.start.col)?;
        if c + 1 >= self.col_bounds.len() {
            return None;
        }
        Some(self.col_bounds[c]..self.col_bounds[c + 1])
    }

    /// Index range of the vertices lying in row `i`, if any.
    pub fn row_range(&self, i: usize) -> Option<Range<usize>> {
        let r = self.start.row.checked_sub(i)?;
        if r + 1 >= self.row_bounds.len() {
            return None;
        }
        Some(self.row_bounds[r]..self.row_bounds[r + 1])
    }

    /// `(exit_row, entry_row)` at column `j`: the northmost row, where the
    /// path leaves east or ends, and the southmost row, where it arrives.
    pub fn column_interval(&self, j: usize) -> Result<(usize, usize)> {
        let range = self
            .column_range(j)
            .ok_or(Error::OutOfSpan { axis: "column", index: j })?;
        Ok((self.vertices[range.end - 1].row, self.vertices[range.start].row))
    }

    /// `(enter_col, leave_col)` at row `i`.
    pub fn row_interval(&self, i: usize) -> Result<(usize, usize)> {
        let range = self
            .row_range(i)
            .ok_or(Error::OutOfSpan { axis: "row", index: i })?;
        Ok((self.vertices[range.start].col, self.vertices[range.end - 1].col))
    }

    /// Index of `v` on the path, if the path visits it.
    pub fn index_of(&self, v: Point) -> Option<usize> {
        let range = self.column_range(v.col)?;
        let entry = self.vertices[range.start].row;
        let offset = entry.checked_sub(v.row)?;
        let idx = range.start + offset;
        (idx < range.end).then_some(idx)
    }

    /// The subpath through vertices `0..=idx`.
    pub fn prefix(&self, idx: usize) -> Path {
        Path::new(self.start, self.steps[..idx].to_vec()).expect("subpath of a valid path")
    }

    /// The subpath through vertices `idx..`.
    pub fn suffix(&self, idx: usize) -> Path {
        Path::new(self.vertices[idx], self.steps[idx..].to_vec()).expect("subpath of a valid path")
    }

    /// The subpath through vertices `from..=to`.
    pub fn segment(&self, from: usize, to: usize) -> Path {
        Path::new(self.vertices[from], self.steps[from..to].to_vec()).expect("subpath of a valid path")
    }

    /// The step arriving at vertex `idx`; `None` at the start.
    pub fn step_into(&self, idx: usize) -> Option<Step> {
        idx.checked_sub(1).map(|t| self.steps[t])
    }

    /// `self` followed by `other`; the junction vertices must coincide.
    pub fn concat(&self, other: &Path) -> Result<Path> {
        let (a, b) = (self.end(), other.start);
        if a != b {
            return Err(Error::Junction(a.row, a.col, b.row, b.col));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Path::new(self.start, steps)
    }

    /// Same steps from a translated start.
    pub fn translated(&self, d_row: isize, d_col: isize) -> Result<Path> {
        let row = self.start.row as isize + d_row;
        let col = self.start.col as isize + d_col;
        if row < 0 || col < 0 {
            return Err(Error::ShiftUnderflow);
        }
        Path::new(Point::new(row as usize, col as usize), self.steps.clone())
            .map_err(|_| Error::ShiftUnderflow)
    }
}

impl PartialEq for Path {
    fn eq(&self, other: &Self) -> bool {
        self.start == other.start && self.steps == other.steps
    }
}

impl Eq for Path {}

impl Hash for Path {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.start.hash(state);
        self.steps.hash(state);
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.start, &self.steps).cmp(&(other.start, &other.steps))
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path({self})")
    }
}

/// Canonical text form `(r,c):NENE`.
impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.step_letters())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Path> {
        let bad = |reason: &str| Error::ParsePath {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (head, letters) = s.trim().split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let inner = head
            .trim()
            .strip_prefix('(')
            .and_then(|h| h.strip_suffix(')'))
            .ok_or_else(|| bad("start vertex must be written (row,col)"))?;
        let (r, c) = inner.split_once(',').ok_or_else(|| bad("start vertex must be written (row,col)"))?;
        let row = r.trim().parse().map_err(|_| bad("bad start row"))?;
        let col = c.trim().parse().map_err(|_| bad("bad start col"))?;
        Path::from_letters(Point::new(row, col), letters.trim()).map_err(|e| match e {
            Error::ParsePath { reason, .. } => bad(&reason),
            other => other,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct PathRepr {
    start: [usize; 2],
    steps: String,
}

impl Serialize for Path {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PathRepr {
            start: [self.start.row, self.start.col],
            steps: self.step_letters(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Path {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PathRepr::deserialize(deserializer)?;
        Path::from_letters(Point::new(repr.start[0], repr.start[1]), &repr.steps)
            .map_err(serde::de::Error::custom)
    }
}

/// Whether `p` stays weakly southeast of the shape's staircase boundary.
pub fn is_valid_path(shape: &Shape, p: &Path) -> bool {
    p.vertices().iter().all(|&v| shape.vertex_allowed(v))
}

/// Whether `p` is a member of the family counted by `N(m, n)`.
pub fn is_member(shape: &Shape, p: &Path, m: usize, n: usize) -> bool {
    p.start() == Point::new(m, 0) && p.end() == Point::new(0, n) && is_valid_path(shape, p)
}

/// Every valid path from `(m,0)` to `(0,n)`, by naive depth-first search,
/// in lexicographic step order (`E` before `N`).
///
/// This is the reference oracle for [`count_paths`] and shares no code with
/// it. Refuses `m + n > 30`.
pub fn enumerate_paths(shape: &Shape, m: usize, n: usize) -> Result<Vec<Path>> {
    if m + n > ORACLE_MAX_TOTAL {
        return Err(Error::OracleScale { total: m + n });
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(m + n);
    walk(shape, (m, 0), (0, n), &mut steps, &mut out);
    Ok(out
        .into_iter()
        .map(|s| Path::new(Point::new(m, 0), s).expect("enumerated path stays on grid"))
        .collect())
}

fn walk(
    shape: &Shape,
    (row, col): (usize, usize),
    target: (usize, usize),
    steps: &mut Vec<Step>,
    out: &mut Vec<Vec<Step>>,
) {
    if !shape.vertex_allowed(Point::new(row, col)) {
        return;
    }
    if (row, col) == target {
        out.push(steps.clone());
        return;
    }
    if col < target.1 {
        steps.push(Step::E);
        walk(shape, (row, col + 1), target, steps, out);
        steps.pop();
    }
    if row > target.0 {
        steps.push(Step::N);
        walk(shape, (row - 1, col), target, steps, out);
        steps.pop();
    }
}

/// `N(m, n)` by dynamic programming over the `(m+1) × (n+1)` rectangle.
///
/// Columns are swept from `n` down to `0` with rows ascending; one column
/// vector is updated in place, so a cell receives its north neighbour
/// (already in the current column) plus its east neighbour (still holding
/// the previous column).
pub fn count_paths(shape: &Shape, m: usize, n: usize) -> BigUint {
    let mut column = vec![BigUint::zero(); m + 1];
    for j in (0..=n).rev() {
        for i in 0..=m {
            if !shape.vertex_allowed(Point::new(i, j)) {
                column[i] = BigUint::zero();
            } else if i == 0 && j == n {
                column[i] = BigUint::one();
            } else if i > 0 {
                let north = column[i - 1].clone();
                column[i] += north;
            }
        }
    }
    column.swap_remove(m)
}

/// Memoized `N(m, n)` for one shape. Confined to a single owner; share
/// across threads by giving each worker its own table.
#[derive(Debug, Clone)]
pub struct CountTable {
    shape: Shape,
    memo: HashMap<(usize, usize), BigUint>,
}

impl CountTable {
    pub fn new(shape: Shape) -> Self {
        CountTable {
            shape,
            memo: HashMap::new(),
        }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn count(&mut self, m: usize, n: usize) -> BigUint {
        let shape = &self.shape;
        self.memo
            .entry((m, n))
            .or_insert_with(|| count_paths(shape, m, n))
            .clone()
    }
}

/// Shared vertices of two paths as `(index into p, index into q)`, in
/// traversal order.
pub fn common_vertices(p: &Path, q: &Path) -> Vec<(usize, usize)> {
    p.vertices()
        .iter()
        .enumerate()
        .filter_map(|(i, &v)| q.index_of(v).map(|j| (i, j)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[i64]) -> Shape {
        Shape::new(parts).unwrap()
    }

    fn path(s: &str) -> Path {
        s.parse().unwrap()
    }

    #[test]
    fn make_path_examples() {
        let p = Path::from_letters(Point::new(1, 0), "NE").unwrap();
        assert_eq!(p.vertices(), &[Point::new(1, 0), Point::new(0, 0), Point::new(0, 1)]);
        assert_eq!(
            Path::from_letters(Point::new(0, 0), "N").unwrap_err(),
            Error::NegativeCoordinate { step: 1 }
        );
        assert_eq!(
            Path::from_letters(Point::new(2, 0), "NNE").unwrap().end(),
            Point::new(0, 1)
        );
        assert_eq!(
            Path::from_letters(Point::new(1, 0), "NEN").unwrap_err(),
            Error::NegativeCoordinate { step: 3 }
        );
    }

    #[test]
    fn text_and_json_forms() {
        let p = path("(2,0):NENE");
        assert_eq!(p.to_string(), "(2,0):NENE");
        assert_eq!(path(" ( 3 , 1 ) : ee ").to_string(), "(3,1):EE");
        assert_eq!(path("(0,0):").len(), 0);
        assert!(matches!("2,0:NE".parse::<Path>(), Err(Error::ParsePath { .. })));
        assert!(matches!("(2,0):NX".parse::<Path>(), Err(Error::ParsePath { .. })));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"start":[2,0],"steps":"NENE"}"#);
        let back: Path = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn validity_examples() {
        let one = shape(&[1]);
        assert!(!is_valid_path(&one, &path("(2,0):NNEE")));
        assert!(is_valid_path(&one, &path("(2,0):ENNE")));
        assert!(is_valid_path(&Shape::empty(), &path("(2,0):NNEE")));
    }

    #[test]
    fn enumerate_examples() {
        let one = shape(&[1]);
        assert_eq!(enumerate_paths(&one, 1, 3).unwrap().len(), 3);
        assert_eq!(enumerate_paths(&Shape::empty(), 2, 2).unwrap().len(), 6);
        assert!(enumerate_paths(&one, 4, 0).unwrap().is_empty());
        assert_eq!(
            enumerate_paths(&Shape::empty(), 20, 11).unwrap_err(),
            Error::OracleScale { total: 31 }
        );
        let letters: Vec<_> = enumerate_paths(&Shape::empty(), 1, 2)
            .unwrap()
            .iter()
            .map(Path::step_letters)
            .collect();
        assert_eq!(letters, ["EEN", "ENE", "NEE"]);
    }

    #[test]
    fn count_examples() {
        let one = shape(&[1]);
        assert_eq!(count_paths(&one, 2, 2), BigUint::from(5u32));
        assert_eq!(count_paths(&Shape::empty(), 3, 2), BigUint::from(10u32));
        let s = shape(&[2, 1]);
        assert_eq!(
            count_paths(&s, 2, 2),
            BigUint::from(enumerate_paths(&s, 2, 2).unwrap().len())
        );
        assert_eq!(count_paths(&Shape::empty(), 0, 0), BigUint::one());
        assert_eq!(count_paths(&one, 0, 0), BigUint::zero());
        let mut table = CountTable::new(one);
        assert_eq!(table.count(1, 3), BigUint::from(3u32));
        assert_eq!(table.count(1, 3), BigUint::from(3u32));
    }

    #[test]
    fn common_vertex_examples() {
        let p = path("(1,0):NEE");
        let q = path("(2,0):ENN");
        // q: (2,0) (2,1) (1,1) (0,1); p: (1,0) (0,0) (0,1) (0,2)
        assert_eq!(common_vertices(&p, &q), vec![(2, 3)]);
        assert!(common_vertices(&p, &path("(2,0):ENE")).is_empty());
        let all: Vec<_> = (0..=p.len()).map(|i| (i, i)).collect();
        assert_eq!(common_vertices(&p, &p), all);
        assert!(common_vertices(&path("(0,0):EE"), &path("(2,0):EE")).is_empty());
    }

    #[test]
    fn interval_examples() {
        let p = path("(2,0):NNE");
        assert_eq!(p.column_interval(0).unwrap(), (0, 2));
        assert_eq!(p.column_interval(1).unwrap(), (0, 0));
        assert_eq!(p.column_interval(2), Err(Error::OutOfSpan { axis: "column", index: 2 }));
        let east = path("(0,0):EEE");
        assert_eq!(east.row_interval(0).unwrap(), (0, 3));
        assert!(east.row_interval(1).is_err());
        assert_eq!(path("(2,0):ENE").column_interval(1).unwrap(), (1, 2));
        assert_eq!(path("(2,0):ENE").row_interval(2).unwrap(), (0, 1));
    }

    #[test]
    fn split_and_join() {
        let p = path("(2,0):ENEN");
        let mid = 2;
        assert_eq!(p.prefix(mid).concat(&p.suffix(mid)).unwrap(), p);
        assert_eq!(p.prefix(0).len(), 0);
        assert_eq!(p.suffix(p.len()).start(), p.end());
        assert!(matches!(p.suffix(1).concat(&p), Err(Error::Junction(..))));
        for (t, &v) in p.vertices().iter().enumerate() {
            assert_eq!(p.index_of(v), Some(t));
        }
        assert_eq!(p.index_of(Point::new(0, 0)), None);
    }
}
