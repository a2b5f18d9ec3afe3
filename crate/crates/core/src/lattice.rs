//! Rank-2 Picard lattice arithmetic: class searches with prescribed degree
//! and self-intersection, the quartic determinantal quantum-number scan, and
//! the Diophantine non-existence check (2q+5) y^2 = 2q̂+5.

use crate::error::{Error, Result};
use serde::Serialize;

/// Rank-2 integral intersection form with a distinguished polarization
/// class: gram = [[h·h, h·C0], [C0·h, C0·C0]].
#[derive(Clone, Debug, Serialize)]
pub struct Lattice2 {
    pub gram: [[i64; 2]; 2],
    pub basis_names: (String, String),
}

impl Lattice2 {
    pub fn new(a: i64, b: i64, c: i64, names: (&str, &str)) -> Lattice2 {
        Lattice2 {
            gram: [[a, b], [b, c]],
            basis_names: (names.0.to_string(), names.1.to_string()),
        }
    }

    /// The lattice Z h + Z C0 of the determinantal quartic: h^2 = 4,
    /// h·C0 = 6, C0^2 = 4.
    pub fn determinantal_quartic() -> Lattice2 {
        Lattice2::new(4, 6, 4, ("h", "C0"))
    }

    pub fn is_even(&self) -> bool {
        self.gram[0][0] % 2 == 0 && self.gram[1][1] % 2 == 0
    }

    /// (x h + y C0) · h under the Gram form.
    pub fn degree(&self, x: i64, y: i64) -> i64 {
        x * self.gram[0][0] + y * self.gram[0][1]
    }

    /// (x h + y C0)^2 under the Gram form.
    pub fn self_intersection(&self, x: i64, y: i64) -> i64 {
        x * x * self.gram[0][0] + 2 * x * y * self.gram[0][1] + y * y * self.gram[1][1]
    }
}

/// All integer pairs |x|, |y| <= bound with prescribed degree and
/// self-intersection; exhaustive within the bound.
pub fn class_search(
    lattice: &Lattice2,
    deg_target: i64,
    selfint_target: i64,
    bound: i64,
) -> Result<Vec<(i64, i64)>> {
    if bound < 1 {
        return Err(Error::domain("search bound must be at least 1"));
    }
    let mut hits = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            if lattice.degree(x, y) == deg_target
                && lattice.self_intersection(x, y) == selfint_target
            {
                hits.push((x, y));
            }
        }
    }
    Ok(hits)
}

/// Classes on the determinantal-quartic lattice realizing a size 4 + 2q
/// representation: degree 4q + 6 and self-intersection 4q^2 + 10q + 4. The
/// degree equation pins x once y is fixed, so the scan over odd |y| <= 2q+3
/// is exact rather than heuristically bounded.
fn quartic_classes(q: i64) -> Vec<(i64, i64)> {
    let lattice = Lattice2::determinantal_quartic();
    let deg = 4 * q + 6;
    let selfint = 4 * q * q + 10 * q + 4;
    let mut hits = Vec::new();
    let y_bound = 2 * q + 3;
    for y in -y_bound..=y_bound {
        // 4x = deg - 6y requires divisibility.
        let num = deg - 6 * y;
        if num % 4 != 0 {
            continue;
        }
        let x = num / 4;
        if lattice.self_intersection(x, y) == selfint {
            hits.push((x, y));
        }
    }
    hits
}

/// The set of q <= q_max admitting a determinantal representation of size
/// 4 + 2q on the very general determinantal quartic; equals
/// {10λ(λ+1) : λ >= 0} ∩ [0, q_max], and that equality is asserted.
pub fn determinantal_q_scan(q_max: i64) -> Result<Vec<i64>> {
    if q_max < 0 {
        return Err(Error::domain("q_max must be non-negative"));
    }
    let mut admissible = Vec::new();
    for q in 0..=q_max {
        if !quartic_classes(q).is_empty() {
            admissible.push(q);
        }
    }
    let mut closed_form = Vec::new();
    let mut lambda = 0;
    loop {
        let q = 10 * lambda * (lambda + 1);
        if q > q_max {
            break;
        }
        closed_form.push(q);
        lambda += 1;
    }
    if admissible != closed_form {
        return Err(Error::domain(format!(
            "lattice scan {admissible:?} disagrees with the closed form {closed_form:?}"
        )));
    }
    Ok(admissible)
}

/// Whether a representation of size 4 + 2q̂ is possible on the q-surface:
/// true iff (2q+5) y^2 = 2q̂+5 has an integer solution. False whenever
/// q > q̂.
pub fn existence_obstruction(q: i64, q_hat: i64) -> Result<bool> {
    if q < 0 || q_hat < 0 {
        return Err(Error::domain("quantum numbers must be non-negative"));
    }
    let lhs = 2 * q + 5;
    let rhs = 2 * q_hat + 5;
    if rhs % lhs != 0 {
        return Ok(false);
    }
    let quotient = rhs / lhs;
    let root = (quotient as f64).sqrt() as i64;
    Ok((root - 1..=root + 1).any(|y| y >= 0 && y * y == quotient))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_is_even() {
        assert!(Lattice2::determinantal_quartic().is_even());
    }

    #[test]
    fn class_search_hits_lambda_one() {
        // λ = 1: x = 17, y = 3, degree 86, self-intersection 1804.
        let l = Lattice2::determinantal_quartic();
        assert_eq!(l.degree(17, 3), 86);
        assert_eq!(l.self_intersection(17, 3), 1804);
        let hits = class_search(&l, 86, 1804, 40).unwrap();
        assert!(hits.contains(&(17, 3)));
        for (x, y) in hits {
            assert_eq!(l.degree(x, y), 86);
            assert_eq!(l.self_intersection(x, y), 1804);
        }
    }

    #[test]
    fn class_search_finds_the_base_curve() {
        let l = Lattice2::determinantal_quartic();
        let hits = class_search(&l, 6, 4, 10).unwrap();
        assert!(hits.contains(&(0, 1)));
    }

    #[test]
    fn q_five_is_excluded() {
        // q = 5 is not of the form 10λ(λ+1): no class exists.
        let l = Lattice2::determinantal_quartic();
        let hits = class_search(&l, 26, 154, 200).unwrap();
        assert!(hits.is_empty());
    }

    #[test]
    fn scan_small_windows() {
        assert_eq!(determinantal_q_scan(25).unwrap(), vec![0, 20]);
        assert_eq!(determinantal_q_scan(19).unwrap(), vec![0]);
        assert_eq!(
            determinantal_q_scan(200).unwrap(),
            vec![0, 20, 60, 120, 200]
        );
    }

    #[test]
    fn obstruction_examples() {
        for q in 0..10 {
            assert!(existence_obstruction(q, q).unwrap());
        }
        assert!(!existence_obstruction(1, 0).unwrap());
        assert!(!existence_obstruction(0, 10).unwrap());
        // q̂ = 20 on the q = 0 surface: 5 y^2 = 45 gives y = 3.
        assert!(existence_obstruction(0, 20).unwrap());
    }

    #[test]
    fn obstruction_false_above_diagonal() {
        for q in 0..=20 {
            for q_hat in 0..q {
                assert!(!existence_obstruction(q, q_hat).unwrap());
            }
        }
    }
}
