//! Diagonal sequences `N(0,s), N(1,s-1), …, N(s,0)` and their properties.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::path::{count_paths, CountTable};
use crate::poly::IntPolynomial;
use crate::shape::{shapes_up_to_cells, Shape};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequence {
    pub shape: Shape,
    pub total: usize,
    /// `values[i] = N(i, total - i)`.
    pub values: Vec<BigUint>,
}

pub fn diagonal_sequence(shape: &Shape, total: usize) -> CountSequence {
    CountSequence {
        shape: shape.clone(),
        total,
        values: (0..=total).map(|i| count_paths(shape, i, total - i)).collect(),
    }
}

/// First interior index `i` with `v_i² < v_{i-1}·v_{i+1}`.
pub fn log_concavity_witness(values: &[BigUint]) -> Option<usize> {
    (1..values.len().saturating_sub(1)).find(|&i| &values[i] * &values[i] < &values[i - 1] * &values[i + 1])
}

pub fn is_log_concave(values: &[BigUint]) -> bool {
    log_concavity_witness(values).is_none()
}

/// Weakly increasing, then weakly decreasing.
pub fn is_unimodal(values: &[BigUint]) -> bool {
    let mut i = 1;
    while i < values.len() && values[i - 1] <= values[i] {
        i += 1;
    }
    while i < values.len() && values[i - 1] >= values[i] {
        i += 1;
    }
    i >= values.len()
}

pub fn is_palindromic(values: &[BigUint]) -> bool {
    values.iter().eq(values.iter().rev())
}

/// Whether zeros appear strictly between two nonzero entries.
pub fn has_internal_zeros(values: &[BigUint]) -> bool {
    let first = values.iter().position(|v| !v.is_zero());
    let last = values.iter().rposition(|v| !v.is_zero());
    match (first, last) {
        (Some(a), Some(b)) => values[a..=b].iter().any(Zero::is_zero),
        _ => false,
    }
}

impl CountSequence {
    pub fn log_concavity_witness(&self) -> Option<usize> {
        log_concavity_witness(&self.values)
    }

    pub fn is_log_concave(&self) -> bool {
        is_log_concave(&self.values)
    }

    pub fn is_unimodal(&self) -> bool {
        is_unimodal(&self.values)
    }

    pub fn is_palindromic(&self) -> bool {
        is_palindromic(&self.values)
    }

    pub fn polynomial(&self) -> IntPolynomial {
        sequence_polynomial(&self.values)
    }

    pub fn sum(&self) -> BigUint {
        self.values.iter().sum()
    }
}

impl fmt::Display for CountSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn sequence_polynomial(values: &[BigUint]) -> IntPolynomial {
    IntPolynomial::new(values.iter().map(|v| BigInt::from(v.clone())).collect())
}

/// One side-by-side comparison `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub m: usize,
    pub n: usize,
    pub checks: Vec<InequalityCheck>,
}

impl InequalityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Evaluates the inequality chain behind log-concavity at `(m, n)`,
/// `m, n ≥ 1`:
///
/// * `crossing`: `N(m,n+1)·N(m+1,n) ≤ N(m,n)·N(m+1,n+1)`
/// * `shifted`: `N(m-1,n+1)·N(m+1,n+1) ≤ N(m,n+1)²`
/// * `mixed`: `N(m-1,n+1)·N(m+1,n) ≤ N(m,n)·N(m,n+1)`
/// * `mixed_mirror`: `N(m+1,n-1)·N(m,n+1) ≤ N(m,n)·N(m+1,n)`
/// * `master`: `N(m-1,n+1)·N(m+1,n-1) ≤ N(m,n)²`
pub fn verify_inequalities(table: &mut CountTable, m: usize, n: usize) -> InequalityReport {
    assert!(m >= 1 && n >= 1, "inequalities are stated for m, n >= 1");
    let mut c = |a: usize, b: usize| table.count(a, b);
    let check = |name, statement, lhs: BigUint, rhs: BigUint| InequalityCheck {
        name,
        statement,
        holds: lhs <= rhs,
        lhs,
        rhs,
    };
    let checks = vec![
        check(
            "crossing",
            "N(m,n+1)N(m+1,n) <= N(m,n)N(m+1,n+1)",
            c(m, n + 1) * c(m + 1, n),
            c(m, n) * c(m + 1, n + 1),
        ),
        check(
            "shifted",
            "N(m-1,n+1)N(m+1,n+1) <= N(m,n+1)^2",
            c(m - 1, n + 1) * c(m + 1, n + 1),
            c(m, n + 1).pow(2),
        ),
        check(
            "mixed",
            "N(m-1,n+1)N(m+1,n) <= N(m,n)N(m,n+1)",
            c(m - 1, n + 1) * c(m + 1, n),
            c(m, n) * c(m, n + 1),
        ),
        check(
            "mixed_mirror",
            "N(m+1,n-1)N(m,n+1) <= N(m,n)N(m+1,n)",
            c(m + 1, n - 1) * c(m, n + 1),
            c(m, n) * c(m + 1, n),
        ),
        check(
            "master",
            "N(m-1,n+1)N(m+1,n-1) <= N(m,n)^2",
            c(m - 1, n + 1) * c(m + 1, n - 1),
            c(m, n).pow(2),
        ),
    ];
    InequalityReport { m, n, checks }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootVerdict {
    RealRooted,
    NotRealRooted,
    /// The diagonal is identically zero.
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchEntry {
    pub shape: Shape,
    pub total: usize,
    pub polynomial: IntPolynomial,
    pub verdict: RootVerdict,
}

pub fn root_verdict(poly: &IntPolynomial) -> RootVerdict {
    match poly.all_roots_real() {
        Ok(true) => RootVerdict::RealRooted,
        Ok(false) => RootVerdict::NotRealRooted,
        Err(_) => RootVerdict::Empty,
    }
}

/// Streams a real-rootedness verdict for every shape with at most
/// `max_cells` cells and every total up to `max_total`, skipping identically
/// zero diagonals. Order: cell count, parts, total.
pub fn real_root_sweep(max_cells: usize, max_total: usize) -> impl Iterator<Item = SearchEntry> {
    shapes_up_to_cells(max_cells).into_iter().flat_map(move |shape| {
        (0..=max_total).filter_map(move |total| {
            let polynomial = diagonal_sequence(&shape, total).polynomial();
            match root_verdict(&polynomial) {
                RootVerdict::Empty => None,
                verdict => Some(SearchEntry {
                    shape: shape.clone(),
                    total,
                    polynomial,
                    verdict,
                }),
            }
        })
    })
}

/// Collected form of [`real_root_sweep`].
pub fn search_real_root_failures(max_cells: usize, max_total: usize) -> Vec<SearchEntry> {
    real_root_sweep(max_cells, max_total).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> Shape {
        s.parse().unwrap()
    }

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(diagonal_sequence(&shape("1"), 4).values, big(&[0, 3, 5, 3, 0]));
        assert_eq!(diagonal_sequence(&Shape::empty(), 4).values, big(&[1, 4, 6, 4, 1]));
        assert_eq!(diagonal_sequence(&shape("1"), 4).to_string(), "0,3,5,3,0");
    }

    #[test]
    fn predicates() {
        assert!(is_log_concave(&big(&[0, 3, 5, 3, 0])));
        assert!(is_log_concave(&big(&[1, 4, 6, 4, 1])));
        assert_eq!(log_concavity_witness(&big(&[1, 1, 2])), Some(1));
        assert!(is_unimodal(&big(&[0, 3, 5, 3, 0])));
        assert!(!is_unimodal(&big(&[1, 2, 1, 2])));
        assert!(is_unimodal(&big(&[])));
        assert!(is_unimodal(&big(&[2, 2, 1])));
        assert!(is_palindromic(&big(&[0, 3, 5, 3, 0])));
        assert!(!is_palindromic(&big(&[1, 2])));
        assert!(has_internal_zeros(&big(&[0, 1, 0, 1, 0])));
        assert!(!has_internal_zeros(&big(&[0, 1, 1, 0])));
        // log-concave with an internal zero need not be unimodal
        let gap = big(&[1, 0, 0, 1]);
        assert!(is_log_concave(&gap) && !is_unimodal(&gap));
    }

    #[test]
    fn palindrome_examples() {
        assert!(diagonal_sequence(&shape("1"), 4).is_palindromic());
        let two = diagonal_sequence(&shape("2"), 4);
        let mut column = diagonal_sequence(&shape("1,1"), 4).values;
        column.reverse();
        assert_eq!(two.values, column);
        assert!(!two.is_palindromic());
        assert!(diagonal_sequence(&shape("2,1"), 6).is_palindromic());
    }

    #[test]
    fn polynomial_examples() {
        let p = sequence_polynomial(&big(&[0, 3, 5, 3, 0]));
        assert_eq!(p.to_string(), "3x^3+5x^2+3x");
        assert_eq!(sequence_polynomial(&big(&[1, 1])).to_string(), "x+1");
        let zero = sequence_polynomial(&big(&[0, 0, 0]));
        assert!(zero.is_zero());
        assert_eq!(root_verdict(&zero), RootVerdict::Empty);
    }

    #[test]
    fn inequality_examples() {
        let mut table = CountTable::new(shape("1"));
        assert!(verify_inequalities(&mut table, 2, 2).all_hold());
        let mut table = CountTable::new(Shape::empty());
        let report = verify_inequalities(&mut table, 3, 2);
        assert!(report.all_hold());
        // N(2,3)·N(4,1) = 10·5 <= N(3,2)² = 100
        let master = report.checks.iter().find(|c| c.name == "master").unwrap();
        assert_eq!((master.lhs.clone(), master.rhs.clone()), (BigUint::from(50u32), BigUint::from(100u32)));
    }

    #[test]
    fn search_examples() {
        let found = search_real_root_failures(1, 4);
        assert!(found
            .iter()
            .any(|e| e.shape == shape("1") && e.total == 4 && e.verdict == RootVerdict::NotRealRooted));
        let rows = search_real_root_failures(0, 3);
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|e| e.verdict == RootVerdict::RealRooted));
    }
}
