//! Exhaustive checks of the three injections over small domains.
//!
//! For every admissible `(m, n)` with `m + n ≤ max_total` the domain and the
//! codomain are enumerated with the brute-force oracle, and each check is
//! run pair by pair:
//!
//! * every output lies in the codomain and avoids the shape,
//! * the inverse undoes the forward map,
//! * no two inputs share an output,
//! * the inverse succeeds exactly on the image, where forward undoes it
//!   (for Ψ the image must also be exactly the intersecting codomain pairs),
//! * for Φ, every column west of the cut keeps the paths at vertical
//!   distance at least two.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result, ORACLE_MAX_TOTAL};
use crate::injections::{
    first_vertical_pair, phi_forward, phi_inverse, phibar_cuts, phibar_forward, phibar_inverse,
    psi_forward, psi_inverse, PathPair,
};
use crate::path::{common_vertices, enumerate_paths, is_member, Path, Step};
use crate::shape::Shape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Injection {
    Psi,
    Phi,
    Phibar,
}

impl Injection {
    pub const ALL: [Injection; 3] = [Injection::Psi, Injection::Phi, Injection::Phibar];

    pub fn name(self) -> &'static str {
        match self {
            Injection::Psi => "psi",
            Injection::Phi => "phi",
            Injection::Phibar => "phibar",
        }
    }

    /// `(domain first, domain second, codomain first, codomain second)`
    /// families at parameters `(m, n)`, or `None` when undefined there.
    #[allow(clippy::type_complexity)]
    pub fn families(
        self,
        m: usize,
        n: usize,
    ) -> Option<((usize, usize), (usize, usize), (usize, usize), (usize, usize))> {
        match self {
            Injection::Psi => Some(((m, n + 1), (m + 1, n), (m, n), (m + 1, n + 1))),
            Injection::Phi if m >= 1 => Some(((m - 1, n), (m + 1, n), (m, n), (m, n))),
            Injection::Phibar if m >= 1 && n >= 1 => {
                Some(((m - 1, n + 1), (m + 1, n - 1), (m, n), (m, n)))
            }
            _ => None,
        }
    }

    /// Largest `m + n` of any family touched when sweeping up to `max_total`.
    pub fn largest_family(self, max_total: usize) -> usize {
        match self {
            Injection::Psi => max_total + 2,
            Injection::Phi => max_total + 1,
            Injection::Phibar => max_total,
        }
    }

    pub fn forward(self, shape: &Shape, p: &Path, q: &Path) -> Result<PathPair> {
        match self {
            Injection::Psi => psi_forward(shape, p, q),
            Injection::Phi => phi_forward(shape, p, q),
            Injection::Phibar => phibar_forward(shape, p, q),
        }
    }

    pub fn inverse(self, shape: &Shape, pair: &PathPair) -> Option<PathPair> {
        match self {
            Injection::Psi => psi_inverse(shape, pair),
            Injection::Phi => phi_inverse(shape, pair),
            Injection::Phibar => phibar_inverse(shape, pair),
        }
    }
}

impl fmt::Display for Injection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Injection {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "psi" => Ok(Injection::Psi),
            "phi" => Ok(Injection::Phi),
            "phibar" => Ok(Injection::Phibar),
            other => Err(format!("unknown injection {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub shape: Shape,
    pub injection: Injection,
    pub m: usize,
    pub n: usize,
    pub input_pair: Option<PathPair>,
    pub output_pair: Option<PathPair>,
    pub violation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub injection: Injection,
    pub m: usize,
    pub n: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub image_size: usize,
    /// Cuts where the first path is not entered by an east step or the
    /// second is not entered by a north step. Informational only.
    pub unusual_entries: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub shape: Shape,
    pub max_total: usize,
    pub cells: Vec<CellReport>,
}

impl VerifyReport {
    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.cells.iter().flat_map(|c| c.violations.iter())
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn pairs_checked(&self) -> usize {
        self.cells.iter().map(|c| c.domain_size).sum()
    }
}

/// Runs the suite for each injection in `injections` over every admissible
/// `(m, n)` with `m + n ≤ max_total`. Cells are processed in parallel; the
/// report is ordered by injection, then `m + n`, then `m`.
pub fn verify_injections(shape: &Shape, injections: &[Injection], max_total: usize) -> Result<VerifyReport> {
    for inj in injections {
        let largest = inj.largest_family(max_total);
        if largest > ORACLE_MAX_TOTAL {
            return Err(Error::OracleScale { total: largest });
        }
    }
    let mut jobs = Vec::new();
    for &inj in injections {
        for total in 0..=max_total {
            for m in 0..=total {
                if inj.families(m, total - m).is_some() {
                    jobs.push((inj, m, total - m));
                }
            }
        }
    }
    let cells = jobs
        .into_par_iter()
        .map(|(inj, m, n)| verify_cell(shape, inj, m, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        shape: shape.clone(),
        max_total,
        cells,
    })
}

pub fn verify_cell(shape: &Shape, inj: Injection, m: usize, n: usize) -> Result<CellReport> {
    let (dp, dq, cp, cq) = inj
        .families(m, n)
        .ok_or_else(|| Error::Domain(format!("{inj} undefined at ({m},{n})")))?;
    let dom_p = enumerate_paths(shape, dp.0, dp.1)?;
    let dom_q = enumerate_paths(shape, dq.0, dq.1)?;
    let cod_p = enumerate_paths(shape, cp.0, cp.1)?;
    let cod_q = enumerate_paths(shape, cq.0, cq.1)?;

    let mut violations = Vec::new();
    let mut flag = |input: Option<&PathPair>, output: Option<&PathPair>, what: String| {
        violations.push(Violation {
            shape: shape.clone(),
            injection: inj,
            m,
            n,
            input_pair: input.cloned(),
            output_pair: output.cloned(),
            violation: what,
        })
    };

    let mut image: HashMap<PathPair, PathPair> = HashMap::new();
    let mut unusual_entries = 0;
    for p in &dom_p {
        for q in &dom_q {
            let input = PathPair::new(p.clone(), q.clone());
            let output = match inj.forward(shape, p, q) {
                Ok(out) => out,
                Err(e) => {
                    flag(Some(&input), None, format!("forward failed: {e}"));
                    continue;
                }
            };
            if !is_member(shape, &output.first, cp.0, cp.1) {
                flag(Some(&input), Some(&output), format!("first output not in N{cp:?}"));
            }
            if !is_member(shape, &output.second, cq.0, cq.1) {
                flag(Some(&input), Some(&output), format!("second output not in N{cq:?}"));
            }
            match inj.inverse(shape, &output) {
                Some(back) if back == input => {}
                Some(_) => flag(Some(&input), Some(&output), "inverse returned a different pair".into()),
                None => flag(Some(&input), Some(&output), "inverse rejected a forward output".into()),
            }
            if let Some(earlier) = image.insert(output.clone(), input.clone()) {
                flag(
                    Some(&input),
                    Some(&output),
                    format!("collision with input {} / {}", earlier.first, earlier.second),
                );
            }
            match inj {
                Injection::Psi => {}
                Injection::Phi => {
                    if !phi_scan_is_safe(p, q) {
                        flag(Some(&input), Some(&output), "distance below 2 west of the cut".into());
                    }
                    unusual_entries += usize::from(unusual_phi_entry(p, q));
                }
                Injection::Phibar => {
                    unusual_entries += usize::from(unusual_phi_entry(p, q));
                    if phibar_cuts(p, q, 1).is_err() {
                        flag(Some(&input), Some(&output), "cut ordering violated".into());
                    }
                }
            }
        }
    }

    for f in &cod_p {
        for g in &cod_q {
            let pair = PathPair::new(f.clone(), g.clone());
            let in_image = image.contains_key(&pair);
            if inj == Injection::Psi && in_image == common_vertices(f, g).is_empty() {
                flag(
                    None,
                    Some(&pair),
                    if in_image {
                        "image pair does not intersect".into()
                    } else {
                        "intersecting codomain pair missing from the image".into()
                    },
                );
            }
            match (inj.inverse(shape, &pair), in_image) {
                (None, false) => {}
                (Some(pre), true) if inj.forward(shape, &pre.first, &pre.second).as_ref() == Ok(&pair) => {}
                (Some(pre), _) => flag(
                    Some(&pre),
                    Some(&pair),
                    "inverse accepted a pair that forward does not reproduce".into(),
                ),
                (None, true) => flag(None, Some(&pair), "inverse rejected an image pair".into()),
            }
        }
    }

    Ok(CellReport {
        injection: inj,
        m,
        n,
        domain_size: dom_p.len() * dom_q.len(),
        codomain_size: cod_p.len() * cod_q.len(),
        image_size: image.len(),
        unusual_entries,
        violations,
    })
}

/// Every same-column pair strictly west of the `+1` cut is at vertical
/// distance at least two.
pub fn phi_scan_is_safe(p: &Path, q: &Path) -> bool {
    let Some(cut) = first_vertical_pair(p, q, 1) else {
        return false;
    };
    (0..cut.p_vertex.col).all(|j| match (p.column_interval(j), q.column_interval(j)) {
        (Ok((_, entry_p)), Ok((exit_q, _))) => exit_q as i64 - entry_p as i64 >= 2,
        _ => true,
    })
}

/// True when the `+1` cut vertex on `p` is not entered by an east step or
/// the one on `q` is not entered by a north step (including cuts at a start
/// vertex).
pub fn unusual_phi_entry(p: &Path, q: &Path) -> bool {
    match first_vertical_pair(p, q, 1) {
        Some(cut) => p.step_into(cut.p_index) != Some(Step::E) || q.step_into(cut.q_index) != Some(Step::N),
        None => false,
    }
}
