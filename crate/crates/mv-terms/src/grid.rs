//! Grid sampling of multivariate terms. This is a counterexample search
//! aid only: values are exact at every sampled point, but a grid never
//! decides a universally quantified statement.

use crate::error::TermError;
use crate::rational::{q, Q};
use crate::term::{eval, Term, Valuation};

const CELL_CAP: u128 = 1_000_000;

/// Exact values of a term at every point of the grid
/// `{0, 1/d, …, 1}^n`, in lexicographic order of the coordinate tuples.
#[derive(Debug, Clone)]
pub struct GridTable {
    pub denominator: u32,
    pub dimension: u32,
    pub entries: Vec<(Vec<Q>, Q)>,
}

/// Variables `x1, …, xn` are bound to the coordinates; plain `x` is an
/// alias for the first coordinate.
pub fn grid_eval_n(t: &Term, denominator: u32, dimension: u32) -> Result<GridTable, TermError> {
    if denominator == 0 {
        return Err(TermError::InvalidParameter("grid denominator must be >= 1".into()));
    }
    if dimension == 0 {
        return Err(TermError::InvalidParameter("grid dimension must be >= 1".into()));
    }
    let cells = ((denominator as u128) + 1).pow(dimension);
    if cells > CELL_CAP {
        return Err(TermError::GridTooLarge { cells, cap: CELL_CAP });
    }
    let allowed: Vec<String> = (1..=dimension).map(|i| format!("x{i}")).collect();
    for v in t.vars() {
        if v != "x" && !allowed.contains(&v) {
            return Err(TermError::MissingBinding { var: v });
        }
    }

    let d = denominator as i64;
    let mut entries = Vec::with_capacity(cells as usize);
    let mut idx = vec![0i64; dimension as usize];
    loop {
        let point: Vec<Q> = idx.iter().map(|&i| q(i, d)).collect();
        let mut val = Valuation::new();
        val.insert("x".into(), point[0].clone());
        for (i, p) in point.iter().enumerate() {
            val.insert(format!("x{}", i + 1), p.clone());
        }
        entries.push((point, eval(t, &val)?));

        // odometer increment, last coordinate fastest
        let mut pos = dimension as usize;
        loop {
            if pos == 0 {
                return Ok(GridTable { denominator, dimension, entries });
            }
            pos -= 1;
            if idx[pos] < d {
                idx[pos] += 1;
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;
    use num_traits::Zero;

    #[test]
    fn difference_vanishes_on_the_diagonal() {
        let t = parse_term("x1 - x2").unwrap();
        let g = grid_eval_n(&t, 2, 2).unwrap();
        assert_eq!(g.entries.len(), 9);
        for (p, v) in &g.entries {
            if p[0] == p[1] {
                assert!(v.is_zero());
            }
        }
    }

    #[test]
    fn corner_values_of_truncated_sum() {
        let t = parse_term("x1 + x2").unwrap();
        let g = grid_eval_n(&t, 1, 2).unwrap();
        let vals: Vec<String> = g.entries.iter().map(|(_, v)| v.to_string()).collect();
        assert_eq!(vals, ["0", "1", "1", "1"]);
    }

    #[test]
    fn zero_term_is_zero_everywhere() {
        let t = parse_term("0").unwrap();
        for (d, n) in [(1, 1), (3, 2), (2, 3)] {
            let g = grid_eval_n(&t, d, n).unwrap();
            assert!(g.entries.iter().all(|(_, v)| v.is_zero()));
        }
    }

    #[test]
    fn guards() {
        let t = parse_term("x1").unwrap();
        assert!(grid_eval_n(&t, 0, 1).is_err());
        assert!(matches!(
            grid_eval_n(&t, 1000, 3),
            Err(TermError::GridTooLarge { .. })
        ));
        let t = parse_term("x5").unwrap();
        assert!(grid_eval_n(&t, 1, 2).is_err());
    }
}
