use crate::poly::EnhancedPoly;
use link_diagram::LinkDiagram;
use quandle_core::QuandleTable;
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

/// Assignment cap for the brute-force oracle.
pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("size limit exceeded: {0} assignments")]
    SizeLimitExceeded(u64),
}

/// An arc-to-element assignment satisfying every crossing relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: BTreeMap<String, usize>,
}

impl Coloring {
    pub fn get(&self, arc: &str) -> Option<usize> {
        self.assignment.get(arc).copied()
    }

    pub fn image_size(&self) -> usize {
        let mut values: Vec<usize> = self.assignment.values().copied().collect();
        values.sort_unstable();
        values.dedup();
        values.len()
    }

    pub fn is_constant(&self) -> bool {
        self.image_size() <= 1
    }
}

struct Instance {
    arcs: Vec<String>,
    /// (under_in, over, under_out, positive) as arc indices.
    crossings: Vec<(usize, usize, usize, bool)>,
}

impl Instance {
    fn new(d: &LinkDiagram) -> Self {
        let index = d.arc_index();
        let crossings = d
            .crossings
            .iter()
            .map(|c| {
                (
                    index[c.under_in.as_str()],
                    index[c.over.as_str()],
                    index[c.under_out.as_str()],
                    c.sign > 0,
                )
            })
            .collect();
        Instance {
            arcs: d.arcs.clone(),
            crossings,
        }
    }
}

/// Forward/backward propagation to a fixpoint. Returns false on conflict;
/// assigned indices are pushed onto `trail` for undo.
fn propagate(
    inst: &Instance,
    q: &QuandleTable,
    values: &mut [Option<usize>],
    trail: &mut Vec<usize>,
) -> bool {
    let mut changed = true;
    while changed {
        changed = false;
        for &(inp, over, out, positive) in &inst.crossings {
            if let Some(o) = values[over] {
                match (values[inp], values[out]) {
                    (Some(i), Some(u)) => {
                        let expect = if positive { q.mul(i, o) } else { q.mul_inv(i, o) };
                        if expect != u {
                            return false;
                        }
                    }
                    (Some(i), None) => {
                        let u = if positive { q.mul(i, o) } else { q.mul_inv(i, o) };
                        values[out] = Some(u);
                        trail.push(out);
                        changed = true;
                    }
                    (None, Some(u)) => {
                        let i = if positive { q.mul_inv(u, o) } else { q.mul(u, o) };
                        values[inp] = Some(i);
                        trail.push(inp);
                        changed = true;
                    }
                    (None, None) => {}
                }
            }
        }
    }
    true
}

/// Next arc to branch on: an unknown arc sharing a crossing with a known
/// arc if one exists (keeps propagation local), else the first unknown.
fn choose_branch(inst: &Instance, values: &[Option<usize>]) -> Option<usize> {
    let mut fallback = None;
    for (i, v) in values.iter().enumerate() {
        if v.is_none() {
            fallback = Some(i);
            break;
        }
    }
    fallback?;
    for &(inp, over, out, _) in &inst.crossings {
        let known = [inp, over, out]
            .iter()
            .any(|&a| values[a].is_some());
        if known {
            for a in [inp, over, out] {
                if values[a].is_none() {
                    return Some(a);
                }
            }
        }
    }
    fallback
}

fn search(
    inst: &Instance,
    q: &QuandleTable,
    values: &mut Vec<Option<usize>>,
    out: &mut Vec<Vec<usize>>,
) {
    match choose_branch(inst, values) {
        None => {
            out.push(values.iter().map(|v| v.unwrap()).collect());
        }
        Some(arc) => {
            for v in 0..q.order() {
                let mut trail = vec![arc];
                values[arc] = Some(v);
                if propagate(inst, q, values, &mut trail) {
                    search(inst, q, values, out);
                }
                for t in trail {
                    values[t] = None;
                }
            }
        }
    }
}

fn solve_raw(d: &LinkDiagram, q: &QuandleTable) -> Vec<Vec<usize>> {
    let inst = Instance::new(d);
    let n = inst.arcs.len();
    if n == 0 {
        // The 0-arc diagram has exactly one (empty) coloring.
        return vec![Vec::new()];
    }
    let seed = choose_branch(&inst, &vec![None; n]).expect("nonempty");
    // Partition the search over the first seed value; merge in value
    // order so the result is independent of the worker count.
    let mut branches: Vec<(usize, Vec<Vec<usize>>)> = (0..q.order())
        .into_par_iter()
        .map(|v| {
            let mut values = vec![None; n];
            let mut found = Vec::new();
            let mut trail = vec![seed];
            values[seed] = Some(v);
            if propagate(&inst, q, &mut values, &mut trail) {
                search(&inst, q, &mut values, &mut found);
            }
            (v, found)
        })
        .collect();
    branches.sort_by_key(|(v, _)| *v);
    branches.into_iter().flat_map(|(_, f)| f).collect()
}

fn to_colorings(d: &LinkDiagram, raw: Vec<Vec<usize>>) -> Vec<Coloring> {
    raw.into_iter()
        .map(|values| Coloring {
            assignment: d
                .arcs
                .iter()
                .cloned()
                .zip(values)
                .collect(),
        })
        .collect()
}

/// All colorings of the diagram by X, exact and in deterministic order.
pub fn enumerate_colorings(d: &LinkDiagram, q: &QuandleTable) -> Vec<Coloring> {
    to_colorings(d, solve_raw(d, q))
}

/// Colorings of an open diagram; endpoint arcs are constrained only by
/// the internal crossing relations.
pub fn solve_open(d: &LinkDiagram, q: &QuandleTable) -> Vec<Coloring> {
    enumerate_colorings(d, q)
}

pub fn count_colorings(d: &LinkDiagram, q: &QuandleTable) -> u64 {
    solve_raw(d, q).len() as u64
}

pub fn enhanced_polynomial(d: &LinkDiagram, q: &QuandleTable) -> EnhancedPoly {
    let mut poly = EnhancedPoly::default();
    for values in solve_raw(d, q) {
        let mut seen = vec![false; q.order()];
        let mut size = 0;
        for v in values {
            if !seen[v] {
                seen[v] = true;
                size += 1;
            }
        }
        poly.add_coloring(size);
    }
    poly
}

/// Reference oracle: filters every assignment by every relation.
pub fn brute_force_colorings(
    d: &LinkDiagram,
    q: &QuandleTable,
) -> Result<Vec<Coloring>, SolverError> {
    let inst = Instance::new(d);
    let n = inst.arcs.len();
    let total = (q.order() as u64)
        .checked_pow(n as u32)
        .unwrap_or(u64::MAX);
    if total > BRUTE_FORCE_LIMIT {
        return Err(SolverError::SizeLimitExceeded(total));
    }
    let mut out = Vec::new();
    let mut values = vec![0usize; n];
    loop {
        let ok = inst.crossings.iter().all(|&(inp, over, outp, positive)| {
            let expect = if positive {
                q.mul(values[inp], values[over])
            } else {
                q.mul_inv(values[inp], values[over])
            };
            expect == values[outp]
        });
        if ok {
            out.push(values.clone());
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(to_colorings(d, out));
            }
            values[pos] += 1;
            if values[pos] < q.order() {
                break;
            }
            values[pos] = 0;
            pos += 1;
        }
        if n == 0 {
            return Ok(to_colorings(d, out));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use link_diagram::{gen_hopf, gen_l2h, gen_trefoil, gen_unknot, trivial_open_diagram};
    use quandle_core::{alexander_quandle, dihedral_quandle};

    fn set_of(colorings: &[Coloring]) -> std::collections::BTreeSet<Vec<(String, usize)>> {
        colorings
            .iter()
            .map(|c| c.assignment.iter().map(|(k, v)| (k.clone(), *v)).collect())
            .collect()
    }

    #[test]
    fn unknot_has_only_constant_colorings() {
        let u = gen_unknot();
        for q in [dihedral_quandle(3).unwrap(), dihedral_quandle(5).unwrap()] {
            let cs = enumerate_colorings(&u, &q);
            assert_eq!(cs.len(), q.order());
            assert!(cs.iter().all(|c| c.is_constant()));
        }
    }

    #[test]
    fn trefoil_z3_has_nine_colorings() {
        // Brute force over all 27 assignments is the oracle here; the
        // worked example's claimed 3 is the known discrepancy.
        let t = gen_trefoil();
        let q = alexander_quandle(3, &[-2, 1]).unwrap();
        let brute = brute_force_colorings(&t, &q).unwrap();
        assert_eq!(brute.len(), 9);
        let fast = enumerate_colorings(&t, &q);
        assert_eq!(fast.len(), 9);
        assert_eq!(set_of(&fast), set_of(&brute));
        let constants = fast.iter().filter(|c| c.is_constant()).count();
        assert_eq!(constants, 3);
        let all_distinct = fast.iter().filter(|c| c.image_size() == 3).count();
        assert_eq!(all_distinct, 6);
    }

    #[test]
    fn trefoil_z3_phi() {
        let t = gen_trefoil();
        let q = alexander_quandle(3, &[-2, 1]).unwrap();
        assert_eq!(
            enhanced_polynomial(&t, &q),
            EnhancedPoly::from_pairs(&[(1, 3), (3, 6)])
        );
    }

    #[test]
    fn l2h_z4_t3_counts_and_structure() {
        let d = gen_l2h();
        let q = alexander_quandle(4, &[-3, 1]).unwrap();
        let cs = enumerate_colorings(&d, &q);
        // Sum over ~classes of |C|^3 = 2*8; brute force agrees.
        assert_eq!(cs.len(), 16);
        let brute = brute_force_colorings(&d, &q).unwrap();
        assert_eq!(set_of(&cs), set_of(&brute));
        for c in &cs {
            let (x, y1, y2, z) = (
                c.get("x").unwrap(),
                c.get("y1").unwrap(),
                c.get("y2").unwrap(),
                c.get("z").unwrap(),
            );
            assert_eq!(y1, y2);
            assert_eq!(x % 2, y1 % 2);
            assert_eq!(y1 % 2, z % 2);
        }
        assert_eq!(
            enhanced_polynomial(&d, &q),
            EnhancedPoly::from_pairs(&[(1, 4), (2, 12)])
        );
    }

    #[test]
    fn hopf_counts() {
        let h = gen_hopf();
        let z4 = alexander_quandle(4, &[-3, 1]).unwrap();
        assert_eq!(count_colorings(&h, &z4), 8);
        assert_eq!(
            enhanced_polynomial(&h, &z4),
            EnhancedPoly::from_pairs(&[(1, 4), (2, 4)])
        );
        let z3 = alexander_quandle(3, &[-2, 1]).unwrap();
        assert_eq!(count_colorings(&h, &z3), 3);
    }

    #[test]
    fn one_element_quandle_gives_one_coloring() {
        let q = dihedral_quandle(1).unwrap();
        for d in [gen_unknot(), gen_trefoil(), gen_l2h()] {
            assert_eq!(count_colorings(&d, &q), 1);
        }
    }

    #[test]
    fn open_trivial_strand_has_square_count() {
        let s = trivial_open_diagram();
        let q = dihedral_quandle(3).unwrap();
        assert_eq!(solve_open(&s, &q).len(), 9);
        let z4 = alexander_quandle(4, &[-3, 1]).unwrap();
        assert_eq!(solve_open(&s, &z4).len(), 16);
    }

    #[test]
    fn count_equals_phi_total() {
        let d = gen_l2h();
        let q = dihedral_quandle(4).unwrap();
        assert_eq!(count_colorings(&d, &q), enhanced_polynomial(&d, &q).total());
    }

    #[test]
    fn constant_colorings_always_present() {
        for d in [gen_trefoil(), gen_hopf(), gen_l2h()] {
            for q in [dihedral_quandle(4).unwrap(), dihedral_quandle(5).unwrap()] {
                let phi = enhanced_polynomial(&d, &q);
                assert_eq!(phi.coeffs.get(&1).copied(), Some(q.order() as u64));
                assert!(count_colorings(&d, &q) >= q.order() as u64);
            }
        }
    }

    #[test]
    fn brute_force_guard() {
        let d = gen_l2h();
        let q = dihedral_quandle(100).unwrap();
        assert!(matches!(
            brute_force_colorings(&d, &q),
            Err(SolverError::SizeLimitExceeded(_))
        ));
    }

    #[test]
    fn determinism_across_runs() {
        let d = gen_l2h();
        let q = alexander_quandle(4, &[-3, 1]).unwrap();
        let a = enumerate_colorings(&d, &q);
        let b = enumerate_colorings(&d, &q);
        assert_eq!(a, b);
    }
}
