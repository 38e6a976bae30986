//! Partial geometry axioms and parameter arithmetic.
//!
//! A partial geometry of order (s, t, α) is a uniform, point-regular incidence
//! structure in which every point pair lies on at most one line and the number
//! of lines through an external point meeting a fixed line is the constant α.
//! Structures with α = 0 have pairwise disjoint lines; those are rejected as
//! trivial rather than parameterised.

use num_rational::Rational64;

use crate::incidence::{IncidenceError, IncidenceStructure};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PgError {
    #[error(transparent)]
    Shape(#[from] IncidenceError),
    #[error("points {a} and {b} lie on lines {first_line} and {second_line}")]
    PairOnTwoLines {
        a: usize,
        b: usize,
        first_line: usize,
        second_line: usize,
    },
    #[error("alpha is not constant: point {point} off line {line} sees {got} meeting lines, elsewhere {expected}")]
    AlphaNotConstant {
        point: usize,
        line: usize,
        got: usize,
        expected: usize,
    },
    #[error("trivial geometry: lines are pairwise disjoint (alpha = 0)")]
    TrivialGeometry,
    #[error("alpha {alpha} exceeds min(s+1, t+1) = {limit}")]
    AlphaTooLarge { alpha: usize, limit: usize },
    #[error("alpha must be positive")]
    AlphaZero,
    #[error("derived count {numerator}/{alpha} is not an integer")]
    NonIntegralCount { numerator: usize, alpha: usize },
    #[error("point count {point_count} must exceed line size {line_size}")]
    TooFewPoints {
        point_count: usize,
        line_size: usize,
    },
}

/// The order (s, t, α) of a partial geometry: lines have s+1 points, points
/// lie on t+1 lines, and α is the incidence constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PgParams {
    s: usize,
    t: usize,
    alpha: usize,
}

impl PgParams {
    pub fn new(s: usize, t: usize, alpha: usize) -> Result<PgParams, PgError> {
        if alpha == 0 {
            return Err(PgError::AlphaZero);
        }
        let limit = (s + 1).min(t + 1);
        if alpha > limit {
            return Err(PgError::AlphaTooLarge { alpha, limit });
        }
        let params = PgParams { s, t, alpha };
        params.checked_counts()?;
        Ok(params)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn line_size(&self) -> usize {
        self.s + 1
    }

    /// Star size, i.e. the replication number t+1.
    pub fn star_size(&self) -> usize {
        self.t + 1
    }

    fn checked_counts(&self) -> Result<(usize, usize), PgError> {
        let core = self.s * self.t + self.alpha;
        for numerator in [core * (self.s + 1), core * (self.t + 1)] {
            if numerator % self.alpha != 0 {
                return Err(PgError::NonIntegralCount {
                    numerator,
                    alpha: self.alpha,
                });
            }
        }
        Ok((
            core * (self.s + 1) / self.alpha,
            core * (self.t + 1) / self.alpha,
        ))
    }

    /// Point and line counts ((st+α)(s+1)/α, (st+α)(t+1)/α).
    pub fn counts(&self) -> (usize, usize) {
        self.checked_counts()
            .expect("integrality was checked at construction")
    }
}

/// Point and line counts for a raw parameter triple, checking integrality.
pub fn pg_counts(s: usize, t: usize, alpha: usize) -> Result<(usize, usize), PgError> {
    Ok(PgParams::new(s, t, alpha)?.counts())
}

/// Solve the point-count identity for α: ts(s+1)/(n-s-1), as an exact rational.
pub fn alpha_from(point_count: usize, s: usize, t: usize) -> Result<Rational64, PgError> {
    if point_count <= s + 1 {
        return Err(PgError::TooFewPoints {
            point_count,
            line_size: s + 1,
        });
    }
    Ok(Rational64::new(
        (t * s * (s + 1)) as i64,
        (point_count - s - 1) as i64,
    ))
}

/// Common neighbours of a line pair in the line graph: (s+1)α for a
/// non-adjacent pair, s(α-1) + (t-1) for an adjacent one.
pub fn common_line_neighbours(params: &PgParams, adjacent: bool) -> i64 {
    let (s, t, alpha) = (
        params.s as i64,
        params.t as i64,
        params.alpha as i64,
    );
    if adjacent {
        s * (alpha - 1) + (t - 1)
    } else {
        (s + 1) * alpha
    }
}

/// Check all four partial-geometry axioms and return the order (s, t, α).
pub fn validate_partial_geometry(is: &IncidenceStructure) -> Result<PgParams, PgError> {
    let (line_size, replication) = is.validate_regular_uniform()?;
    let s = line_size - 1;
    let t = replication - 1;

    // Every point pair on at most one line.
    let n = is.point_count();
    let mut pair_line = vec![usize::MAX; n * n];
    for (li, line) in is.lines().iter().enumerate() {
        for (i, &a) in line.iter().enumerate() {
            for &b in &line[i + 1..] {
                let slot = &mut pair_line[a * n + b];
                if *slot != usize::MAX {
                    return Err(PgError::PairOnTwoLines {
                        a,
                        b,
                        first_line: *slot,
                        second_line: li,
                    });
                }
                *slot = li;
            }
        }
    }

    // α constant over all non-incident (point, line) pairs.
    let mut alpha: Option<usize> = None;
    for (li, line) in is.lines().iter().enumerate() {
        let mut on_line = vec![false; n];
        for &p in line {
            on_line[p] = true;
        }
        for p in 0..n {
            if on_line[p] {
                continue;
            }
            let meeting = is
                .star_of(p)
                .iter()
                .filter(|&&other| is.lines_adjacent(other, li))
                .count();
            match alpha {
                None => alpha = Some(meeting),
                Some(expected) if expected != meeting => {
                    return Err(PgError::AlphaNotConstant {
                        point: p,
                        line: li,
                        got: meeting,
                        expected,
                    });
                }
                Some(_) => {}
            }
        }
    }

    match alpha {
        Some(0) | None => Err(PgError::TrivialGeometry),
        Some(a) => {
            let params = PgParams::new(s, t, a)?;
            debug_assert_eq!(params.counts(), (is.point_count(), is.line_count()));
            Ok(params)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{build_incidence, fano_lines};

    #[test]
    fn fano_is_a_partial_geometry() {
        let fano = build_incidence(7, fano_lines()).unwrap();
        let params = validate_partial_geometry(&fano).unwrap();
        assert_eq!(
            (params.s(), params.t(), params.alpha()),
            (2, 2, 3),
            "2-(7,3,1) has order (k-1, (v-1)/(k-1)-1, k)"
        );
        assert_eq!(params.counts(), (7, 7));
    }

    #[test]
    fn count_formulas() {
        assert_eq!(pg_counts(5, 5, 2).unwrap(), (81, 81));
        assert_eq!(pg_counts(2, 2, 3).unwrap(), (7, 7));
        assert_eq!(pg_counts(2, 2, 1).unwrap(), (15, 15));
        assert!(matches!(
            pg_counts(4, 2, 3),
            Err(PgError::NonIntegralCount { .. })
        ));
    }

    #[test]
    fn alpha_round_trips_through_counts() {
        for (s, t, alpha) in [(2, 2, 3), (2, 2, 1), (5, 5, 2), (2, 3, 2), (1, 1, 1)] {
            let params = PgParams::new(s, t, alpha).unwrap();
            let (n, _) = params.counts();
            assert_eq!(
                alpha_from(n, s, t).unwrap(),
                Rational64::from_integer(alpha as i64)
            );
        }
    }

    #[test]
    fn alpha_from_examples() {
        assert_eq!(alpha_from(81, 5, 5).unwrap(), Rational64::from_integer(2));
        assert_eq!(alpha_from(12, 2, 3).unwrap(), Rational64::from_integer(2));
        assert_eq!(alpha_from(10, 2, 0).unwrap(), Rational64::from_integer(0));
        assert!(matches!(
            alpha_from(3, 2, 1),
            Err(PgError::TooFewPoints { .. })
        ));
    }

    #[test]
    fn alpha_bound_enforced() {
        assert!(matches!(
            PgParams::new(2, 2, 4),
            Err(PgError::AlphaTooLarge { limit: 3, .. })
        ));
        assert!(matches!(PgParams::new(2, 2, 0), Err(PgError::AlphaZero)));
    }

    #[test]
    fn common_neighbour_formulas() {
        let params = PgParams::new(2, 3, 2).unwrap();
        assert_eq!(common_line_neighbours(&params, false), 6);
        assert_eq!(common_line_neighbours(&params, true), 4);
    }

    #[test]
    fn disjoint_lines_are_trivial() {
        let is = build_incidence(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(
            validate_partial_geometry(&is).unwrap_err(),
            PgError::TrivialGeometry
        );
    }

    #[test]
    fn inconsistent_alpha_detected() {
        // Two disjoint copies of the Fano plane: uniform, regular, pair-safe,
        // but cross pairs see 0 meeting lines while inner pairs see 3.
        let mut lines = fano_lines();
        lines.extend(fano_lines().into_iter().map(|l| {
            l.into_iter().map(|p| p + 7).collect::<Vec<_>>()
        }));
        let is = build_incidence(14, lines).unwrap();
        assert!(matches!(
            validate_partial_geometry(&is),
            Err(PgError::AlphaNotConstant { .. })
        ));
    }

    #[test]
    fn pair_on_two_lines_detected() {
        let is = build_incidence(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert!(matches!(
            validate_partial_geometry(&is),
            Err(PgError::PairOnTwoLines { a: 0, b: 1, .. })
        ));
    }
}
