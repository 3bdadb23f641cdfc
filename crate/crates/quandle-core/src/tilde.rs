use crate::table::QuandleTable;
use serde::{Deserialize, Serialize};

/// The relation `a ~ b  <=>  a*b = a`. Reflexivity is axiom 1; symmetry
/// and transitivity are checked exhaustively. When the relation is an
/// equivalence, `classes` holds its partition (each class sorted, classes
/// ordered by smallest member).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TildeReport {
    pub is_equivalence: bool,
    pub classes: Option<Vec<Vec<usize>>>,
    pub failure_witness: Option<TildeFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TildeFailure {
    /// a ~ b but not b ~ a.
    Symmetry(usize, usize),
    /// a ~ b and b ~ c but not a ~ c.
    Transitivity(usize, usize, usize),
}

pub fn tilde_related(q: &QuandleTable, a: usize, b: usize) -> bool {
    q.mul(a, b) == a
}

pub fn tilde_report(q: &QuandleTable) -> TildeReport {
    let n = q.order();
    for a in 0..n {
        for b in 0..n {
            if tilde_related(q, a, b) && !tilde_related(q, b, a) {
                return TildeReport {
                    is_equivalence: false,
                    classes: None,
                    failure_witness: Some(TildeFailure::Symmetry(a, b)),
                };
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !tilde_related(q, a, b) {
                continue;
            }
            for c in 0..n {
                if tilde_related(q, b, c) && !tilde_related(q, a, c) {
                    return TildeReport {
                        is_equivalence: false,
                        classes: None,
                        failure_witness: Some(TildeFailure::Transitivity(a, b, c)),
                    };
                }
            }
        }
    }
    let mut assigned = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if assigned[a] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = Vec::new();
        for b in 0..n {
            if assigned[b] == usize::MAX && tilde_related(q, a, b) {
                assigned[b] = id;
                class.push(b);
            }
        }
        classes.push(class);
    }
    TildeReport {
        is_equivalence: true,
        classes: Some(classes),
        failure_witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::alexander_quandle;
    use crate::table::QuandleTable;

    #[test]
    fn z4_t3_has_parity_classes() {
        // (t-1)(a-b) = 0 mod 4 with t=3 means a,b share parity; scan agrees.
        let q = alexander_quandle(4, &[-3, 1]).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(tilde_related(&q, a, b), (a + b) % 2 == 0);
            }
        }
        let rep = tilde_report(&q);
        assert!(rep.is_equivalence);
        assert_eq!(rep.classes.unwrap(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn z3_t2_has_singleton_classes() {
        let q = alexander_quandle(3, &[-2, 1]).unwrap();
        let rep = tilde_report(&q);
        assert!(rep.is_equivalence);
        assert_eq!(rep.classes.unwrap(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn projection_quandle_has_one_class() {
        // op[x][y] = x makes a~b hold for every pair.
        let n = 4;
        let table = (0..n).map(|x| vec![x; n]).collect();
        let q = QuandleTable::build(n, table).unwrap();
        let rep = tilde_report(&q);
        assert!(rep.is_equivalence);
        assert_eq!(rep.classes.unwrap(), vec![vec![0, 1, 2, 3]]);
    }
}
