//! Injective transformations on pairs of paths.
//!
//! * [`psi_forward`] swaps tails at the first common vertex.
//! * [`phi_forward`] cuts at the first same-column pair at vertical
//!   distance one and swaps, moving the prefixes one unit toward each other.
//! * [`phibar_forward`] additionally cuts at the last same-row pair at
//!   horizontal distance one and swaps the suffixes the same way.
//!
//! Each comes with an inverse that returns `None` for pairs outside the
//! image. Sign conventions: the vertical distance from `p` to `q` in a
//! column is `q.row - p.row`; the horizontal distance in a row is
//! `p.col - q.col`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{common_vertices, is_valid_path, Path};
use crate::shape::{Point, Shape};

/// A matched vertex pair found by a distance scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutPair {
    pub p_index: usize,
    pub q_index: usize,
    pub p_vertex: Point,
    pub q_vertex: Point,
    pub distance: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathPair {
    pub first: Path,
    pub second: Path,
}

impl PathPair {
    pub fn new(first: Path, second: Path) -> Self {
        PathPair { first, second }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    North,
    South,
    East,
    West,
}

/// Translates a path; the steps are unchanged.
pub fn shift(p: &Path, direction: Direction, amount: usize) -> Result<Path> {
    let a = amount as isize;
    match direction {
        Direction::North => p.translated(-a, 0),
        Direction::South => p.translated(a, 0),
        Direction::East => p.translated(0, a),
        Direction::West => p.translated(0, -a),
    }
}

/// First (least column, then southmost) pair `P` on `p`, `Q` on `q` sharing
/// a column with `Q.row - P.row == d`.
pub fn first_vertical_pair(p: &Path, q: &Path, d: i64) -> Option<CutPair> {
    let lo_col = p.start().col.max(q.start().col);
    let hi_col = p.end().col.min(q.end().col);
    (lo_col..=hi_col).find_map(|j| {
        let (exit_p, entry_p) = p.column_interval(j).ok()?;
        let (exit_q, entry_q) = q.column_interval(j).ok()?;
        let hi = (entry_p as i64).min(entry_q as i64 - d);
        let lo = (exit_p as i64).max(exit_q as i64 - d);
        if lo > hi {
            return None;
        }
        let p_vertex = Point::new(hi as usize, j);
        let q_vertex = Point::new((hi + d) as usize, j);
        Some(CutPair {
            p_index: p.index_of(p_vertex)?,
            q_index: q.index_of(q_vertex)?,
            p_vertex,
            q_vertex,
            distance: d,
        })
    })
}

/// Last pair in traversal order (least row, then eastmost) with `P` on `p`,
/// `Q` on `q` sharing a row and `P.col - Q.col == h`.
pub fn last_horizontal_pair(p: &Path, q: &Path, h: i64) -> Option<CutPair> {
    let lo_row = p.end().row.max(q.end().row);
    let hi_row = p.start().row.min(q.start().row);
    (lo_row..=hi_row).find_map(|i| {
        let (enter_p, leave_p) = p.row_interval(i).ok()?;
        let (enter_q, leave_q) = q.row_interval(i).ok()?;
        let hi = (leave_p as i64).min(leave_q as i64 + h);
        let lo = (enter_p as i64).max(enter_q as i64 + h);
        if lo > hi {
            return None;
        }
        let p_vertex = Point::new(i, hi as usize);
        let q_vertex = Point::new(i, (hi - h) as usize);
        Some(CutPair {
            p_index: p.index_of(p_vertex)?,
            q_index: q.index_of(q_vertex)?,
            p_vertex,
            q_vertex,
            distance: h,
        })
    })
}

/// `(m, n)` when `p` runs from `(m,0)` to `(0,n)`.
pub fn family_of(p: &Path) -> Option<(usize, usize)> {
    (p.start().col == 0 && p.end().row == 0).then(|| (p.start().row, p.end().col))
}

fn require(shape: &Shape, p: &Path, m: usize, n: usize, what: &str) -> Result<()> {
    if family_of(p) != Some((m, n)) {
        return Err(Error::Domain(format!("{what} {p} does not run from ({m},0) to (0,{n})")));
    }
    if !is_valid_path(shape, p) {
        return Err(Error::Domain(format!("{what} {p} enters the shape")));
    }
    Ok(())
}

fn member(shape: &Shape, p: &Path, m: usize, n: usize) -> bool {
    family_of(p) == Some((m, n)) && is_valid_path(shape, p)
}

fn tail_swap(p: &Path, q: &Path) -> Result<PathPair> {
    let &(i, j) = common_vertices(p, q).first().ok_or(Error::DisjointPair)?;
    Ok(PathPair::new(
        p.prefix(i).concat(&q.suffix(j))?,
        q.prefix(j).concat(&p.suffix(i))?,
    ))
}

/// Maps `(p, q)` in `N(m,n+1) × N(m+1,n)` to `N(m,n) × N(m+1,n+1)` by
/// exchanging tails at the first common vertex.
pub fn psi_forward(shape: &Shape, p: &Path, q: &Path) -> Result<PathPair> {
    let (m, n1) = family_of(p).ok_or_else(|| Error::Domain(format!("{p} is not a corner-to-corner path")))?;
    if n1 == 0 {
        return Err(Error::Domain(format!("{p} must end at (0,n+1) with n >= 0")));
    }
    require(shape, p, m, n1, "p")?;
    require(shape, q, m + 1, n1 - 1, "q")?;
    tail_swap(p, q)
}

/// Inverse of [`psi_forward`]: the same tail exchange. `None` when the pair
/// is not in `N(m,n) × N(m+1,n+1)` or the paths never meet.
pub fn psi_inverse(shape: &Shape, pair: &PathPair) -> Option<PathPair> {
    let (m, n) = family_of(&pair.first)?;
    if !member(shape, &pair.first, m, n) || !member(shape, &pair.second, m + 1, n + 1) {
        return None;
    }
    tail_swap(&pair.first, &pair.second).ok()
}

/// Maps `(p, q)` in `N(a,b) × N(a+2,b)` into `N(a+1,b)²`.
pub fn phi_forward(shape: &Shape, p: &Path, q: &Path) -> Result<PathPair> {
    let (a, b) = family_of(p).ok_or_else(|| Error::Domain(format!("{p} is not a corner-to-corner path")))?;
    require(shape, p, a, b, "p")?;
    require(shape, q, a + 2, b, "q")?;
    let cut = first_vertical_pair(p, q, 1).ok_or(Error::NoCut)?;
    let first = shift(&p.prefix(cut.p_index), Direction::South, 1)?.concat(&q.suffix(cut.q_index))?;
    let second = shift(&q.prefix(cut.q_index), Direction::North, 1)?.concat(&p.suffix(cut.p_index))?;
    Ok(PathPair::new(first, second))
}

/// Inverse of [`phi_forward`]; `None` for pairs outside its image.
pub fn phi_inverse(shape: &Shape, pair: &PathPair) -> Option<PathPair> {
    let (f, g) = (&pair.first, &pair.second);
    let (a1, b) = family_of(f)?;
    if a1 == 0 || !member(shape, f, a1, b) || !member(shape, g, a1, b) {
        return None;
    }
    let cut = first_vertical_pair(f, g, -1)?;
    let p = shift(&f.prefix(cut.p_index), Direction::North, 1)
        .ok()?
        .concat(&g.suffix(cut.q_index))
        .ok()?;
    let q = shift(&g.prefix(cut.q_index), Direction::South, 1)
        .ok()?
        .concat(&f.suffix(cut.p_index))
        .ok()?;
    (member(shape, &p, a1 - 1, b) && member(shape, &q, a1 + 1, b)).then(|| PathPair::new(p, q))
}

/// Splits `p` at two vertex indices into three subpaths.
fn split3(p: &Path, first: usize, second: usize) -> (Path, Path, Path) {
    (p.prefix(first), p.segment(first, second), p.suffix(second))
}

/// The vertical (`P`, `Q`) and horizontal (`P̄`, `Q̄`) cuts used by
/// [`phibar_forward`] (`sign = 1`) and [`phibar_inverse`] (`sign = -1`).
pub fn phibar_cuts(p: &Path, q: &Path, sign: i64) -> Result<(CutPair, CutPair)> {
    let vertical = first_vertical_pair(p, q, sign).ok_or(Error::NoCut)?;
    let horizontal = last_horizontal_pair(p, q, sign).ok_or(Error::NoCut)?;
    if vertical.p_index > horizontal.p_index || vertical.q_index > horizontal.q_index {
        return Err(Error::CutOrdering);
    }
    Ok((vertical, horizontal))
}

/// Maps `(p, q)` in `N(m-1,n+1) × N(m+1,n-1)` into `N(m,n)²`.
pub fn phibar_forward(shape: &Shape, p: &Path, q: &Path) -> Result<PathPair> {
    let (m1, n1) = family_of(p).ok_or_else(|| Error::Domain(format!("{p} is not a corner-to-corner path")))?;
    if n1 < 2 {
        return Err(Error::Domain(format!("{p} must end at (0,n+1) with n >= 1")));
    }
    require(shape, p, m1, n1, "p")?;
    require(shape, q, m1 + 2, n1 - 2, "q")?;
    let (v, h) = phibar_cuts(p, q, 1)?;
    let (p1, p2, p3) = split3(p, v.p_index, h.p_index);
    let (q1, q2, q3) = split3(q, v.q_index, h.q_index);
    let first = shift(&p1, Direction::South, 1)?
        .concat(&q2)?
        .concat(&shift(&p3, Direction::West, 1)?)?;
    let second = shift(&q1, Direction::North, 1)?
        .concat(&p2)?
        .concat(&shift(&q3, Direction::East, 1)?)?;
    Ok(PathPair::new(first, second))
}

/// Inverse of [`phibar_forward`]; `None` for pairs outside its image.
pub fn phibar_inverse(shape: &Shape, pair: &PathPair) -> Option<PathPair> {
    let (f, g) = (&pair.first, &pair.second);
    let (m, n) = family_of(f)?;
    if m == 0 || n == 0 || !member(shape, f, m, n) || !member(shape, g, m, n) {
        return None;
    }
    let (v, h) = phibar_cuts(f, g, -1).ok()?;
    let (f1, f2, f3) = split3(f, v.p_index, h.p_index);
    let (g1, g2, g3) = split3(g, v.q_index, h.q_index);
    let p = shift(&f1, Direction::North, 1)
        .ok()?
        .concat(&g2)
        .ok()?
        .concat(&shift(&f3, Direction::East, 1).ok()?)
        .ok()?;
    let q = shift(&g1, Direction::South, 1)
        .ok()?
        .concat(&f2)
        .ok()?
        .concat(&shift(&g3, Direction::West, 1).ok()?)
        .ok()?;
    (member(shape, &p, m - 1, n + 1) && member(shape, &q, m + 1, n - 1)).then(|| PathPair::new(p, q))
}
