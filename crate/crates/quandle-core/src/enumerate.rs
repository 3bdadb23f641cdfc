use crate::error::QuandleError;
use crate::medial::medial_report;
use crate::table::QuandleTable;
use crate::tilde::tilde_report;

/// Guard for exhaustive enumeration; the column search is (n-1)!^n before
/// pruning and n = 6 is out of scope.
pub const MAX_ENUM_ORDER: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumFilter {
    All,
    Medial,
    MedialWithTildeEquivalence,
}

impl EnumFilter {
    fn admits(self, q: &QuandleTable) -> bool {
        match self {
            EnumFilter::All => true,
            EnumFilter::Medial => medial_report(q).is_medial,
            EnumFilter::MedialWithTildeEquivalence => {
                medial_report(q).is_medial && tilde_report(q).is_equivalence
            }
        }
    }
}

/// Enumerates every quandle table on 0..n, column by column. Column y must
/// be a permutation fixing y (axioms 1 and 2); axiom 3 is pruned
/// incrementally as columns fill in. With `up_to_iso` only tables equal to
/// their canonical form (minimum over relabelings) are emitted, in
/// deterministic search order.
pub fn enumerate_quandles(
    n: usize,
    filter: EnumFilter,
    up_to_iso: bool,
) -> Result<Vec<QuandleTable>, QuandleError> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(QuandleError::SizeLimitExceeded(format!(
            "enumeration supports 1..={MAX_ENUM_ORDER}, got {n}"
        )));
    }
    let column_choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|y| permutations_fixing(n, y))
        .collect();
    let mut cols: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut out = Vec::new();
    search(n, &column_choices, &mut cols, &mut out);
    let mut result = Vec::new();
    for table in out {
        let q = QuandleTable::build(n, table).expect("search output satisfies the axioms");
        if !filter.admits(&q) {
            continue;
        }
        if up_to_iso && q.canonical_form() != q {
            continue;
        }
        result.push(q);
    }
    Ok(result)
}

fn search(
    n: usize,
    choices: &[Vec<Vec<usize>>],
    cols: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if cols.len() == n {
        let table = (0..n)
            .map(|x| (0..n).map(|y| cols[y][x]).collect())
            .collect();
        out.push(table);
        return;
    }
    let y = cols.len();
    for cand in &choices[y] {
        cols.push(cand.clone());
        if axiom3_consistent(n, cols) {
            search(n, choices, cols, out);
        }
        cols.pop();
    }
}

/// Checks every axiom-3 instance whose three lookups all land in the
/// columns assigned so far: (x*y)*z = (x*z)*(y*z) needs columns y, z and
/// op[y][z].
fn axiom3_consistent(n: usize, cols: &[Vec<usize>]) -> bool {
    let filled = cols.len();
    for y in 0..filled {
        for z in 0..filled {
            let yz = cols[z][y];
            if yz >= filled {
                continue;
            }
            for x in 0..n {
                let xy = cols[y][x];
                let xz = cols[z][x];
                if cols[z][xy] != cols[yz][xz] {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations_fixing(n: usize, fixed: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = (0..n).filter(|&v| v != fixed).collect();
    let mut out = Vec::new();
    let mut current = rest.clone();
    heap_permute(&mut current, 0, &mut |p| {
        let mut col = vec![0usize; n];
        col[fixed] = fixed;
        let mut it = p.iter();
        for x in 0..n {
            if x != fixed {
                col[x] = *it.next().unwrap();
            }
        }
        out.push(col);
    });
    out.sort();
    out
}

fn heap_permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, k: usize, visit: &mut F) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        heap_permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alexander_quandle, dihedral_quandle};

    #[test]
    fn order_one_is_just_the_trivial_quandle() {
        let qs = enumerate_quandles(1, EnumFilter::All, true).unwrap();
        assert_eq!(qs.len(), 1);
        assert_eq!(qs[0].rows(), &[vec![0]]);
    }

    #[test]
    fn order_three_has_three_iso_classes() {
        let qs = enumerate_quandles(3, EnumFilter::All, true).unwrap();
        assert_eq!(qs.len(), 3);
    }

    #[test]
    fn order_four_has_seven_iso_classes() {
        let qs = enumerate_quandles(4, EnumFilter::All, true).unwrap();
        assert_eq!(qs.len(), 7);
    }

    #[test]
    fn order_six_is_rejected() {
        assert!(matches!(
            enumerate_quandles(6, EnumFilter::All, false),
            Err(QuandleError::SizeLimitExceeded(_))
        ));
    }

    #[test]
    fn alexander_tables_appear_and_report_medial() {
        let targets = [
            alexander_quandle(3, &[-2, 1]).unwrap(),
            alexander_quandle(4, &[-3, 1]).unwrap(),
            dihedral_quandle(4).unwrap(),
        ];
        for t in &targets {
            let qs = enumerate_quandles(t.order(), EnumFilter::All, true).unwrap();
            let hit = qs.iter().find(|q| q.is_isomorphic(t)).expect("present");
            assert!(medial_report(hit).is_medial);
        }
    }
}
