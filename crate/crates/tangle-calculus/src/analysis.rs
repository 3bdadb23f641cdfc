//! Recomputing paths from the crossing structure, verifying the pair
//! bookkeeping, the endpoint theorem check, and the forced pair-step
//! maps of the connecting structures.

use crate::strand::{LinkRole, OpenStrand, PairLink, StructureKind, TangleError};
use coloring_solver::{solve_open, Coloring};
use link_diagram::LinkDiagram;
use quandle_core::{medial_report, FMap, QuandleTable};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Walks the path from a free-end arc: repeatedly step to the other arc
/// sharing an over-strand connection (the under_in/under_out partner).
fn walk_path(d: &LinkDiagram, start: &str) -> Result<Vec<String>, TangleError> {
    let mut neighbors: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for c in &d.crossings {
        neighbors
            .entry(c.under_in.as_str())
            .or_default()
            .push(c.under_out.as_str());
        neighbors
            .entry(c.under_out.as_str())
            .or_default()
            .push(c.under_in.as_str());
    }
    let mut path = vec![start.to_string()];
    let mut prev: Option<&str> = None;
    let mut here = start;
    loop {
        let next: Vec<&str> = neighbors
            .get(here)
            .map(|v| {
                v.iter()
                    .copied()
                    .filter(|&n| Some(n) != prev)
                    .collect()
            })
            .unwrap_or_default();
        match next.len() {
            0 => return Ok(path),
            1 => {
                prev = Some(here);
                here = next[0];
                path.push(here.to_string());
                if path.len() > d.arcs.len() {
                    return Err(TangleError::StructureViolation(
                        "path does not terminate".into(),
                    ));
                }
            }
            _ => {
                return Err(TangleError::StructureViolation(format!(
                    "arc {here} has more than two strand neighbors"
                )))
            }
        }
    }
}

/// Recomputes both paths from the crossings alone (the trivial strand is
/// special-cased) and checks they cover the arc set disjointly.
pub fn compute_paths(s: &OpenStrand) -> Result<(Vec<String>, Vec<String>), TangleError> {
    if s.is_trivial() {
        return Ok((s.path_a.clone(), s.path_b.clone()));
    }
    let [a0, b0, _, _] = s.endpoint_arcs();
    let pa = walk_path(&s.diagram, a0)?;
    let pb = walk_path(&s.diagram, b0)?;
    let sa: BTreeSet<&String> = pa.iter().collect();
    let sb: BTreeSet<&String> = pb.iter().collect();
    if sa.len() != pa.len() || sb.len() != pb.len() {
        return Err(TangleError::StructureViolation(
            "a path repeats an arc".into(),
        ));
    }
    if !sa.is_disjoint(&sb) {
        return Err(TangleError::StructureViolation(
            "paths are not disjoint".into(),
        ));
    }
    if sa.len() + sb.len() != s.diagram.arcs.len() {
        return Err(TangleError::StructureViolation(
            "paths do not cover the arc set".into(),
        ));
    }
    Ok((pa, pb))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub ok: bool,
    pub violations: Vec<String>,
}

/// Checks the pair bookkeeping against the recomputed paths: coverage
/// and disjointness, equal path lengths, end pairs first and last,
/// index-aligned pairs, direction tags consistent with each link, and a
/// structure link between each consecutive pair.
pub fn verify_structure(s: &OpenStrand) -> StructureReport {
    let mut violations = Vec::new();
    if let Err(e) = s.diagram.validate() {
        violations.push(format!("diagram: {e}"));
    }
    match compute_paths(s) {
        Err(e) => violations.push(e.to_string()),
        Ok((pa, pb)) => {
            if pa != s.path_a {
                violations.push("stored path_a differs from recomputed path".into());
            }
            if pb != s.path_b {
                violations.push("stored path_b differs from recomputed path".into());
            }
        }
    }
    if s.path_a.len() != s.path_b.len() {
        violations.push(format!(
            "path lengths differ: {} vs {}",
            s.path_a.len(),
            s.path_b.len()
        ));
    }
    let len = s.path_a.len();
    if s.pairs.is_empty() {
        violations.push("no parallel pairs".into());
    } else {
        if s.pairs[0].pos != 0 {
            violations.push("first pair is not the starting pair".into());
        }
        if s.pairs.last().unwrap().pos != len - 1 {
            violations.push("last pair is not the ending pair".into());
        }
        for w in s.pairs.windows(2) {
            if w[0].pos >= w[1].pos {
                violations.push(format!(
                    "pair positions not increasing: {} then {}",
                    w[0].pos, w[1].pos
                ));
            }
        }
        for p in &s.pairs {
            if p.pos >= len {
                violations.push(format!("pair position {} out of range", p.pos));
            }
        }
    }
    if s.links.len() + 1 != s.pairs.len() {
        violations.push(format!(
            "{} links for {} pairs",
            s.links.len(),
            s.pairs.len()
        ));
    }
    for (i, l) in s.links.iter().enumerate() {
        if i + 1 < s.pairs.len() {
            // Direction relations fixed by the construction: a horizontal
            // link joins two pieces of one pair (same direction), a ①
            // vertical link doubles the end back (flipped), a ② vertical
            // link passes straight through (same). Reversal flips both
            // sides, so the relation is reversal-invariant.
            let same = s.pairs[i].dir == s.pairs[i + 1].dir;
            let expect_same = match (l.kind.is_family_one(), l.role) {
                (true, LinkRole::Horizontal) => true,
                (true, LinkRole::Vertical) => false,
                (false, _) => true,
            };
            if same != expect_same {
                violations.push(format!("link {i}: pair directions inconsistent"));
            }
        }
        for arc in [&l.x_arc, &l.y_arc] {
            if !s.diagram.has_arc(arc) {
                violations.push(format!("link {i}: arc {arc} missing from diagram"));
            }
        }
        let (in_a, in_b) = (s.path_a.contains(&l.x_arc), s.path_b.contains(&l.y_arc));
        let expected = !l.inverted;
        if in_a != expected || in_b != expected {
            violations.push(format!("link {i}: slot arcs on unexpected paths"));
        }
    }
    StructureReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// Values of pair `idx` under a coloring.
pub fn pair_values(s: &OpenStrand, idx: usize, c: &Coloring) -> (usize, usize) {
    let (a, b) = s.pair_arcs(idx);
    (c.get(a).unwrap(), c.get(b).unwrap())
}

/// The forced map carrying pair `idx` to pair `idx+1` under a fixed
/// coloring: the ① family contributes f of its vertical pair (mutually
/// inverse in the horizontal and vertical roles), the ② family the
/// identity.
pub fn fmap_of_pair_step(
    s: &OpenStrand,
    idx: usize,
    coloring: &Coloring,
) -> Result<FMap, TangleError> {
    let link = s
        .links
        .get(idx)
        .ok_or_else(|| TangleError::BadPairIndex(format!("link {idx} of {}", s.links.len())))?;
    Ok(link_fmap(link, coloring))
}

pub fn link_fmap(link: &PairLink, coloring: &Coloring) -> FMap {
    match link.kind {
        StructureKind::S2 | StructureKind::S2Prime => FMap::identity(),
        s1 => {
            let cx = coloring.get(&link.x_arc).expect("slot arc colored");
            let cy = coloring.get(&link.y_arc).expect("slot arc colored");
            // S1: horizontal f_xy, vertical f_yx. S1': the mirror.
            let forward = match (s1, link.role) {
                (StructureKind::S1, LinkRole::Horizontal) => (cx, cy),
                (StructureKind::S1, LinkRole::Vertical) => (cy, cx),
                (StructureKind::S1Prime, LinkRole::Horizontal) => (cy, cx),
                (StructureKind::S1Prime, LinkRole::Vertical) => (cx, cy),
                _ => unreachable!(),
            };
            let (x, y) = if link.inverted {
                (forward.1, forward.0)
            } else {
                forward
            };
            FMap::single(x, y)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm51Report {
    pub colorings: u64,
    pub violations: Vec<BTreeMap<String, usize>>,
    pub pass: bool,
}

/// Solves the open strand and asserts f(a0)=f(ae), f(b0)=f(be) for every
/// coloring. Refuses non-medial quandles unless `exploratory`.
pub fn check_theorem_5_1(
    s: &OpenStrand,
    q: &QuandleTable,
    exploratory: bool,
) -> Result<Thm51Report, TangleError> {
    if !exploratory && !medial_report(q).is_medial {
        return Err(TangleError::NotMedial);
    }
    let colorings = solve_open(&s.diagram, q);
    let [a0, b0, ae, be] = s.endpoint_arcs();
    let mut violations = Vec::new();
    for c in &colorings {
        if c.get(a0) != c.get(ae) || c.get(b0) != c.get(be) {
            violations.push(c.assignment.clone());
        }
    }
    Ok(Thm51Report {
        colorings: colorings.len() as u64,
        pass: violations.is_empty(),
        violations,
    })
}

/// Asserts, coloring by coloring, that every stored link's forced map
/// carries its pair's values to the next pair's values.
pub fn verify_pair_steps(s: &OpenStrand, q: &QuandleTable) -> Result<(), TangleError> {
    for c in solve_open(&s.diagram, q) {
        for i in 0..s.links.len() {
            let f = fmap_of_pair_step(s, i, &c)?;
            let (pa, pb) = pair_values(s, i, &c);
            let (na, nb) = pair_values(s, i + 1, &c);
            let fa = f.apply(q, pa).expect("in range");
            let fb = f.apply(q, pb).expect("in range");
            if (fa, fb) != (na, nb) {
                return Err(TangleError::StructureViolation(format!(
                    "link {i}: step maps ({pa},{pb}) to ({fa},{fb}), diagram has ({na},{nb})"
                )));
            }
        }
    }
    Ok(())
}

/// Closes the strand into a knot by joining a0-b0 and ae-be directly.
pub fn glue_closure(s: &OpenStrand) -> LinkDiagram {
    let mut d = s.diagram.clone();
    let [a0, b0, ae, be] = {
        let e = s.endpoint_arcs();
        [
            e[0].to_string(),
            e[1].to_string(),
            e[2].to_string(),
            e[3].to_string(),
        ]
    };
    let rename = |d: &mut LinkDiagram, from: &str, to: &str| {
        if from == to {
            return;
        }
        d.arcs.retain(|a| a != from);
        for c in &mut d.crossings {
            for slot in [&mut c.under_in, &mut c.over, &mut c.under_out] {
                if slot == from {
                    *slot = to.to_string();
                }
            }
        }
    };
    rename(&mut d, &b0, &a0);
    // The b0 arc may have been the same as be; track the surviving name.
    let ae_now = if ae == b0 { a0.clone() } else { ae.clone() };
    let be_now = if be == b0 { a0.clone() } else { be.clone() };
    rename(&mut d, &be_now, &ae_now);
    d.endpoints.clear();
    d.name = format!("closure({})", s.diagram.name);
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::{apply_move, default_tangle, random_lom};
    use crate::strand::{AppliedMove, MoveKind, MoverEnd, OpenStrand};
    use coloring_solver::{count_colorings, enhanced_polynomial, EnhancedPoly};
    use quandle_core::{alexander_quandle, dihedral_quandle, enumerate_quandles, EnumFilter};

    fn base_one() -> OpenStrand {
        apply_move(
            &OpenStrand::trivial(),
            AppliedMove {
                kind: MoveKind::M11,
                mover_end: MoverEnd::Finish,
                over_pair_index: 0,
            },
        )
        .unwrap()
    }

    fn base_two() -> OpenStrand {
        apply_move(
            &OpenStrand::trivial(),
            AppliedMove {
                kind: MoveKind::M21,
                mover_end: MoverEnd::Finish,
                over_pair_index: 0,
            },
        )
        .unwrap()
    }

    #[test]
    fn base_case_one_matches_the_induction_shape() {
        let s = base_one();
        assert_eq!(s.path_a.len(), 4);
        assert_eq!(s.path_b.len(), 4);
        let positions: Vec<usize> = s.pairs.iter().map(|p| p.pos).collect();
        assert_eq!(positions, vec![0, 2, 3]);
        assert!(verify_structure(&s).ok);
    }

    #[test]
    fn base_case_two_matches_the_induction_shape() {
        let s = base_two();
        let positions: Vec<usize> = s.pairs.iter().map(|p| p.pos).collect();
        assert_eq!(positions, vec![0, 3]);
        assert!(verify_structure(&s).ok);
    }

    #[test]
    fn trivial_strand_passes_vacuously() {
        let s = OpenStrand::trivial();
        assert!(verify_structure(&s).ok);
        let q = dihedral_quandle(4).unwrap();
        assert_eq!(solve_open(&s.diagram, &q).len(), 16);
    }

    #[test]
    fn corrupted_pair_list_is_caught() {
        let mut s = default_tangle();
        assert!(verify_structure(&s).ok);
        s.pairs.swap(0, 1);
        let rep = verify_structure(&s);
        assert!(!rep.ok);
        assert!(!rep.violations.is_empty());
    }

    #[test]
    fn base_cases_force_the_endpoint_identities() {
        // Z5 with t=2 is medial but not involutory, which is what makes
        // this a real test of the structure transcriptions.
        let q = alexander_quandle(5, &[-2, 1]).unwrap();
        for s in [base_one(), base_two()] {
            let rep = check_theorem_5_1(&s, &q, false).unwrap();
            assert!(rep.pass, "violations: {:?}", rep.violations);
            assert_eq!(rep.colorings, 25); // free choice of the start pair
        }
    }

    #[test]
    fn default_tangle_obeys_theorem_and_pair_steps() {
        let t = default_tangle();
        assert!(verify_structure(&t).ok);
        for q in [
            alexander_quandle(4, &[-3, 1]).unwrap(),
            alexander_quandle(5, &[-2, 1]).unwrap(),
            dihedral_quandle(5).unwrap(),
        ] {
            let rep = check_theorem_5_1(&t, &q, false).unwrap();
            assert!(rep.pass);
            verify_pair_steps(&t, &q).unwrap();
        }
    }

    #[test]
    fn every_single_move_strand_telescopes() {
        // All eight kinds from the trivial strand (whichever direction
        // precondition they need, the trivial pair can be the target).
        let q = alexander_quandle(5, &[-2, 1]).unwrap();
        let mut tested = 0;
        for kind in MoveKind::ALL {
            for mover_end in [MoverEnd::Start, MoverEnd::Finish] {
                let mv = AppliedMove {
                    kind,
                    mover_end,
                    over_pair_index: 0,
                };
                match apply_move(&OpenStrand::trivial(), mv) {
                    Ok(s) => {
                        assert!(verify_structure(&s).ok, "{kind:?} {mover_end:?}");
                        let rep = check_theorem_5_1(&s, &q, false).unwrap();
                        assert!(rep.pass, "{kind:?} {mover_end:?}: {:?}", rep.violations);
                        verify_pair_steps(&s, &q).unwrap();
                        tested += 1;
                    }
                    Err(TangleError::DirectionViolation(_)) => {}
                    Err(e) => panic!("unexpected error: {e}"),
                }
            }
        }
        // Same-direction kinds apply to the trivial strand (its single
        // pair is its own mover), from either end.
        assert_eq!(tested, 8);
    }

    #[test]
    fn random_strands_verify_and_obey_theorem() {
        let quandles: Vec<_> = (1..=4)
            .flat_map(|n| enumerate_quandles(n, EnumFilter::Medial, true).unwrap())
            .collect();
        for seed in 1..=6 {
            let s = random_lom(5, seed);
            assert!(verify_structure(&s).ok, "seed {seed}");
            for q in &quandles {
                let rep = check_theorem_5_1(&s, q, false).unwrap();
                assert!(rep.pass, "seed {seed}");
            }
        }
    }

    #[test]
    fn random_lom_is_reproducible() {
        let a = random_lom(4, 7);
        let b = random_lom(4, 7);
        assert_eq!(a, b);
        assert!(verify_structure(&a).ok);
        assert_eq!(random_lom(0, 3), OpenStrand::trivial());
    }

    #[test]
    fn closure_of_trivial_strand_is_the_unknot() {
        let d = glue_closure(&OpenStrand::trivial());
        assert_eq!(d.crossings.len(), 0);
        assert_eq!(d.arcs.len(), 1);
    }

    #[test]
    fn closures_color_like_the_unknot() {
        // Property 8 surrogate: count = |X| and Phi = |X| q for every
        // quandle, medial or not.
        let mut quandles: Vec<_> = (1..=4)
            .flat_map(|n| enumerate_quandles(n, EnumFilter::All, true).unwrap())
            .collect();
        quandles.push(dihedral_quandle(5).unwrap());
        let mut strands = vec![default_tangle(), base_one(), base_two()];
        strands.push(random_lom(5, 3));
        for s in &strands {
            let d = glue_closure(s);
            for q in &quandles {
                let n = q.order() as u64;
                assert_eq!(count_colorings(&d, q), n);
                assert_eq!(
                    enhanced_polynomial(&d, q),
                    EnhancedPoly::from_pairs(&[(1, n)])
                );
            }
        }
    }

    #[test]
    fn exploratory_mode_runs_non_medial_quandles() {
        // The conjugation-style order-4 quandles may or may not violate
        // the endpoint identities; the point is the call succeeds and
        // reports rather than refusing.
        let non_medial: Vec<_> = enumerate_quandles(4, EnumFilter::All, true)
            .unwrap()
            .into_iter()
            .filter(|q| !medial_report(q).is_medial)
            .collect();
        let t = default_tangle();
        for q in &non_medial {
            assert!(matches!(
                check_theorem_5_1(&t, q, false),
                Err(TangleError::NotMedial)
            ));
            let rep = check_theorem_5_1(&t, q, true).unwrap();
            let _ = rep.pass; // recorded, not asserted
        }
    }
}
