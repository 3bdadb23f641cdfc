use crate::table::QuandleTable;
use serde::{Deserialize, Serialize};

/// Outcome of the medial check: the 4-variable medial law
/// `(a*b)*(c*d) = (a*c)*(b*d)` over all quadruples, plus a self-test of
/// the nine derived identities when the law holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MedialReport {
    pub is_medial: bool,
    /// First quadruple breaking the medial law, if any.
    pub medial_failure: Option<[usize; 4]>,
    /// Failures of the derived identities (identity id 1..=9, witness).
    /// Expected to stay empty on a medial quandle.
    pub identity_failures: Vec<(u8, Vec<usize>)>,
}

/// Checks one of the nine medial-quandle identities at a tuple.
/// Identities 2 and 4 take four variables; the rest take three.
pub fn identity_holds(q: &QuandleTable, id: u8, vars: &[usize]) -> bool {
    let m = |a, b| q.mul(a, b);
    let i = |a, b| q.mul_inv(a, b);
    match id {
        1 => {
            let (x, y, z) = (vars[0], vars[1], vars[2]);
            m(x, m(y, z)) == m(m(x, y), m(x, z))
        }
        2 => {
            let (x1, y1, x2, y2) = (vars[0], vars[1], vars[2], vars[3]);
            m(i(x1, y1), i(x2, y2)) == i(m(x1, x2), m(y1, y2))
        }
        3 => {
            let (x, y, z) = (vars[0], vars[1], vars[2]);
            i(x, m(y, z)) == m(i(x, y), i(x, z))
        }
        4 => {
            let (x1, y1, x2, y2) = (vars[0], vars[1], vars[2], vars[3]);
            i(i(x1, y1), i(x2, y2)) == i(i(x1, x2), i(y1, y2))
        }
        5 => {
            let (x, y, z) = (vars[0], vars[1], vars[2]);
            i(i(x, y), z) == i(i(x, z), i(y, z))
        }
        6 => {
            let (x, y, z) = (vars[0], vars[1], vars[2]);
            i(x, i(y, z)) == i(i(x, y), i(x, z))
        }
        7 => {
            let (x, y, z) = (vars[0], vars[1], vars[2]);
            m(i(x, y), z) == i(m(x, z), m(y, z))
        }
        8 => {
            let (x, y, z) = (vars[0], vars[1], vars[2]);
            m(x, i(y, z)) == i(m(x, y), m(x, z))
        }
        9 => {
            let (x, y, z) = (vars[0], vars[1], vars[2]);
            i(m(x, y), z) == m(i(x, z), i(y, z))
        }
        _ => panic!("identity id must be 1..=9"),
    }
}

pub fn identity_arity(id: u8) -> usize {
    match id {
        2 | 4 => 4,
        _ => 3,
    }
}

pub fn medial_report(q: &QuandleTable) -> MedialReport {
    let n = q.order();
    let mut medial_failure = None;
    'outer: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if q.mul(q.mul(a, b), q.mul(c, d)) != q.mul(q.mul(a, c), q.mul(b, d)) {
                        medial_failure = Some([a, b, c, d]);
                        break 'outer;
                    }
                }
            }
        }
    }
    let is_medial = medial_failure.is_none();
    let mut identity_failures = Vec::new();
    if is_medial {
        for id in 1..=9u8 {
            let arity = identity_arity(id);
            let mut vars = vec![0usize; arity];
            loop {
                if !identity_holds(q, id, &vars) {
                    identity_failures.push((id, vars.clone()));
                }
                // odometer over n^arity tuples
                let mut pos = 0;
                loop {
                    if pos == arity {
                        break;
                    }
                    vars[pos] += 1;
                    if vars[pos] < n {
                        break;
                    }
                    vars[pos] = 0;
                    pos += 1;
                }
                if pos == arity {
                    break;
                }
            }
        }
    }
    MedialReport {
        is_medial,
        medial_failure,
        identity_failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alexander_quandle, dihedral_quandle};

    #[test]
    fn alexander_quandles_are_medial() {
        for (n, h) in [(3, vec![-2, 1]), (4, vec![-3, 1]), (2, vec![1, 1, 1])] {
            let q = alexander_quandle(n, &h).unwrap();
            let rep = medial_report(&q);
            assert!(rep.is_medial, "Z_{n} with h={h:?} must be medial");
            assert!(rep.identity_failures.is_empty());
        }
    }

    #[test]
    fn trivial_quandle_is_medial() {
        let q = QuandleTable::build(1, vec![vec![0]]).unwrap();
        assert!(medial_report(&q).is_medial);
    }

    #[test]
    fn conjugation_quandle_on_s3_is_not_medial() {
        // Elements are the 6 permutations of 3 symbols, x*y = y^-1 x y.
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let compose = |f: [usize; 3], g: [usize; 3]| [g[f[0]], g[f[1]], g[f[2]]];
        let invert = |f: [usize; 3]| {
            let mut r = [0usize; 3];
            for (i, &fi) in f.iter().enumerate() {
                r[fi] = i;
            }
            r
        };
        let index = |f: [usize; 3]| perms.iter().position(|&p| p == f).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|&x| {
                perms
                    .iter()
                    .map(|&y| index(compose(compose(invert(y), x), y)))
                    .collect()
            })
            .collect();
        let q = QuandleTable::build(6, table).unwrap();
        let rep = medial_report(&q);
        assert!(!rep.is_medial);
        let [a, b, c, d] = rep.medial_failure.unwrap();
        assert_ne!(
            q.mul(q.mul(a, b), q.mul(c, d)),
            q.mul(q.mul(a, c), q.mul(b, d))
        );
    }

    #[test]
    fn identity_nine_holds_on_every_quandle() {
        // (x*y) *^-1 z = (x *^-1 z)*(y *^-1 z) needs no mediality.
        let q = dihedral_quandle(5).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                for z in 0..5 {
                    assert!(identity_holds(&q, 9, &[x, y, z]));
                }
            }
        }
    }
}
