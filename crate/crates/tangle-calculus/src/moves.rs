//! Applying directional moves to an open strand.
//!
//! A move threads the strand's end pair (the mover) against an exterior
//! parallel pair (the target). The ① family cuts the target arcs twice
//! and the mover arcs once, adding six crossings and two parallel pairs;
//! the ② family weaves the mover under the target without cutting it,
//! adding six crossings and one pair. Each structure's forced pair-step
//! maps come in mutually inverse horizontal/vertical roles, which is what
//! makes the endpoint theorem hold on everything built here.

use crate::strand::{
    AppliedMove, Dir, LinkRole, MoveKind, MoverEnd, OpenStrand, PairEntry, PairLink,
    StructureKind, TangleError,
};
use link_diagram::Crossing;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn apply_move(strand: &OpenStrand, mv: AppliedMove) -> Result<OpenStrand, TangleError> {
    if mv.over_pair_index >= strand.pairs.len() {
        return Err(TangleError::BadPairIndex(format!(
            "pair {} of {}",
            mv.over_pair_index,
            strand.pairs.len()
        )));
    }
    let mut out = match mv.mover_end {
        MoverEnd::Finish => apply_finish(strand, mv)?,
        MoverEnd::Start => {
            let flipped = AppliedMove {
                over_pair_index: strand.pairs.len() - 1 - mv.over_pair_index,
                ..mv
            };
            apply_finish(&strand.reversed(), flipped)?.reversed()
        }
    };
    out.moves = strand.moves.clone();
    out.moves.push(mv);
    out.diagram
        .validate()
        .map_err(|e| TangleError::StructureViolation(e.to_string()))?;
    Ok(out)
}

fn apply_finish(strand: &OpenStrand, mv: AppliedMove) -> Result<OpenStrand, TangleError> {
    let t_idx = mv.over_pair_index;
    let end_idx = strand.pairs.len() - 1;
    let base_case = strand.is_trivial();
    if t_idx == end_idx && !base_case {
        return Err(TangleError::BadPairIndex(
            "target cannot be the mover pair".into(),
        ));
    }
    let target = strand.pairs[t_idx];
    if !target.exterior {
        return Err(TangleError::BadPairIndex(format!(
            "pair {t_idx} is interior"
        )));
    }
    let mover = strand.pairs[end_idx];
    let same = mover.dir == target.dir;
    if same != mv.kind.requires_same_direction() {
        return Err(TangleError::DirectionViolation(mv.kind));
    }
    let structure = mv.kind.structure();
    let k = strand.moves.len() + 1;
    match structure {
        StructureKind::S1 | StructureKind::S1Prime => {
            apply_family_one(strand, t_idx, structure, target, mover, k)
        }
        StructureKind::S2 | StructureKind::S2Prime => {
            apply_family_two(strand, t_idx, structure, target, mover, k)
        }
    }
}

/// Points the crossing that consumes `arc` (its under_in role) at `piece`
/// instead; falls back to the arc's movable entry in the endpoint list
/// (the end-pair slots come last). Must run before the move's own
/// crossings are added. Used when cutting a path-a arc, whose pieces
/// chain forward.
fn repoint_consumer(s: &mut OpenStrand, arc: &str, piece: &str) {
    if let Some(c) = s.diagram.crossings.iter_mut().find(|c| c.under_in == arc) {
        c.under_in = piece.to_string();
    } else if let Some(e) = s.diagram.endpoints.iter_mut().rev().find(|e| *e == arc) {
        *e = piece.to_string();
    }
}

/// The path-b counterpart: strand b runs against its path order, so a cut
/// hands the arc's producer (under_out role) to the last piece.
fn repoint_producer(s: &mut OpenStrand, arc: &str, piece: &str) {
    if let Some(c) = s.diagram.crossings.iter_mut().find(|c| c.under_out == arc) {
        c.under_out = piece.to_string();
    } else if let Some(e) = s.diagram.endpoints.iter_mut().rev().find(|e| *e == arc) {
        *e = piece.to_string();
    }
}

fn push_crossing(s: &mut OpenStrand, id: String, sign: i8, under_in: &str, over: &str, under_out: &str) {
    for arc in [under_in, over, under_out] {
        if !s.diagram.has_arc(arc) {
            s.diagram.arcs.push(arc.to_string());
        }
    }
    s.diagram.crossings.push(Crossing {
        id,
        sign,
        under_in: under_in.into(),
        over: over.into(),
        under_out: under_out.into(),
    });
}

fn set_end_endpoints(s: &mut OpenStrand, new_ae: &str, new_be: &str) {
    let n = s.diagram.endpoints.len();
    s.diagram.endpoints[n - 2] = new_ae.to_string();
    s.diagram.endpoints[n - 1] = new_be.to_string();
}

fn apply_family_one(
    strand: &OpenStrand,
    t_idx: usize,
    structure: StructureKind,
    target: PairEntry,
    mover: PairEntry,
    k: usize,
) -> Result<OpenStrand, TangleError> {
    let mut s = strand.clone();
    let base_case = strand.is_trivial();
    let tp = target.pos;
    let ta = strand.path_a[tp].clone();
    let tb = strand.path_b[tp].clone();
    let am = format!("a{k}m");
    let ar = format!("a{k}r");
    let bm = format!("b{k}m");
    let br = format!("b{k}r");
    let nx = format!("a{k}");
    let ny = format!("b{k}");
    // Cutting the target arcs: the leading piece keeps the old name, the
    // connection on the far side moves to the last piece.
    repoint_consumer(&mut s, &ta, &ar);
    repoint_producer(&mut s, &tb, &br);
    // A starting pair has nothing below it, so every existing attachment
    // sits on the far side: over-strand references move with the cut.
    if tp == 0 {
        for c in &mut s.diagram.crossings {
            if c.over == ta {
                c.over = ar.clone();
            } else if c.over == tb {
                c.over = br.clone();
            }
        }
    }
    // The mover pieces. In the base case the mover end piece is the
    // target's own third piece.
    let (ea, eb) = if base_case {
        (ar.clone(), br.clone())
    } else {
        (
            strand.path_a.last().unwrap().clone(),
            strand.path_b.last().unwrap().clone(),
        )
    };
    let id = |i: usize| format!("s{k}c{i}");
    match structure {
        StructureKind::S1 => {
            // y'=f_yx(y), x'=f_yx(x); n'=f_xy(n), m'=f_xy(m).
            // Path-b crossings run against the list order (strand b is
            // antiparallel), so they consume the later piece.
            push_crossing(&mut s, id(1), -1, &ny, &ea, &eb);
            push_crossing(&mut s, id(2), -1, &ea, &ny, &nx);
            push_crossing(&mut s, id(3), 1, &ta, &ny, &am);
            push_crossing(&mut s, id(4), -1, &am, &ea, &ar);
            push_crossing(&mut s, id(5), 1, &bm, &nx, &tb);
            push_crossing(&mut s, id(6), -1, &br, &ny, &bm);
        }
        StructureKind::S1Prime => {
            // x'=f_xy(x), y'=f_xy(y); n'=f_yx(n), m'=f_yx(m).
            push_crossing(&mut s, id(1), 1, &ea, &eb, &nx);
            push_crossing(&mut s, id(2), 1, &ny, &nx, &eb);
            push_crossing(&mut s, id(3), -1, &ta, &eb, &am);
            push_crossing(&mut s, id(4), 1, &am, &ea, &ar);
            push_crossing(&mut s, id(5), 1, &bm, &eb, &tb);
            push_crossing(&mut s, id(6), -1, &br, &ea, &bm);
        }
        _ => unreachable!(),
    }
    // Paths: the target position expands to three, the end gains one.
    s.path_a.splice(tp + 1..tp + 1, [am.clone(), ar.clone()]);
    s.path_b.splice(tp + 1..tp + 1, [bm.clone(), br.clone()]);
    s.path_a.push(nx.clone());
    s.path_b.push(ny.clone());
    set_end_endpoints(&mut s, &nx, &ny);
    // Pairs: shift positions past the cut, mark the swept region
    // interior, insert the (n',m') pair, append the new end pair.
    let end_idx = strand.pairs.len() - 1;
    for (i, p) in s.pairs.iter_mut().enumerate() {
        if p.pos > tp {
            p.pos += 2;
        }
        if !base_case && i > t_idx && i <= end_idx {
            p.exterior = false;
        }
    }
    s.pairs.insert(
        t_idx + 1,
        PairEntry {
            pos: tp + 2,
            dir: target.dir,
            exterior: target.exterior,
        },
    );
    s.pairs.push(PairEntry {
        pos: s.path_a.len() - 1,
        dir: mover.dir.flip(),
        exterior: true,
    });
    // Links: horizontal at the cut, vertical at the end. Slot x/y are the
    // mover pieces.
    s.links.insert(
        t_idx,
        PairLink {
            kind: structure,
            role: LinkRole::Horizontal,
            x_arc: ea.clone(),
            y_arc: eb.clone(),
            inverted: false,
        },
    );
    s.links.push(PairLink {
        kind: structure,
        role: LinkRole::Vertical,
        x_arc: ea,
        y_arc: eb,
        inverted: false,
    });
    Ok(s)
}

fn apply_family_two(
    strand: &OpenStrand,
    t_idx: usize,
    structure: StructureKind,
    target: PairEntry,
    mover: PairEntry,
    k: usize,
) -> Result<OpenStrand, TangleError> {
    let mut s = strand.clone();
    let tp = target.pos;
    let ta = strand.path_a[tp].clone();
    let tb = strand.path_b[tp].clone();
    let ea = strand.path_a.last().unwrap().clone();
    let eb = strand.path_b.last().unwrap().clone();
    let a1 = format!("a{k}w");
    let a2 = format!("a{k}v");
    let b1 = format!("b{k}w");
    let b2 = format!("b{k}v");
    let nx = format!("a{k}");
    let ny = format!("b{k}");
    let id = |i: usize| format!("s{k}c{i}");
    match structure {
        StructureKind::S2 => {
            // x'=f_mn∘f_xy(x), y'=f_mn∘f_xy(y) with n on the a side.
            push_crossing(&mut s, id(1), 1, &ea, &eb, &a1);
            push_crossing(&mut s, id(2), 1, &b1, &tb, &eb);
            push_crossing(&mut s, id(3), -1, &a1, &tb, &a2);
            push_crossing(&mut s, id(4), 1, &b2, &a2, &b1);
            push_crossing(&mut s, id(5), 1, &a2, &ta, &nx);
            push_crossing(&mut s, id(6), -1, &ny, &ta, &b2);
        }
        StructureKind::S2Prime => {
            // The x<->y mirror, with m on the a side.
            push_crossing(&mut s, id(1), -1, &b1, &ea, &eb);
            push_crossing(&mut s, id(2), -1, &ea, &ta, &a1);
            push_crossing(&mut s, id(3), 1, &b2, &ta, &b1);
            push_crossing(&mut s, id(4), -1, &a1, &b2, &a2);
            push_crossing(&mut s, id(5), -1, &ny, &tb, &b2);
            push_crossing(&mut s, id(6), 1, &a2, &tb, &nx);
        }
        _ => unreachable!(),
    }
    s.path_a.extend([a1, a2, nx.clone()]);
    s.path_b.extend([b1, b2, ny.clone()]);
    set_end_endpoints(&mut s, &nx, &ny);
    let end_idx = strand.pairs.len() - 1;
    let base_case = strand.is_trivial();
    for (i, p) in s.pairs.iter_mut().enumerate() {
        if !base_case && i > t_idx && i <= end_idx {
            p.exterior = false;
        }
    }
    // The weave leaves over-strand references into the target arcs whose
    // exact attachment spot is only determined for a starting pair, so a
    // mid-strand ② target is retired from further targeting.
    if target.pos != 0 {
        s.pairs[t_idx].exterior = false;
    }
    s.pairs.push(PairEntry {
        pos: s.path_a.len() - 1,
        dir: mover.dir,
        exterior: true,
    });
    s.links.push(PairLink {
        kind: structure,
        role: LinkRole::Vertical,
        x_arc: ea,
        y_arc: eb,
        inverted: false,
    });
    Ok(s)
}

/// Applies `count` seeded random legal moves starting from the trivial
/// strand. Kinds are sampled uniformly and rejected while their direction
/// precondition fails; targets are sampled among exterior pairs.
pub fn random_lom(count: usize, seed: u64) -> OpenStrand {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = OpenStrand::trivial();
    for _ in 0..count {
        let mover_end = if rng.gen_bool(0.5) {
            MoverEnd::Start
        } else {
            MoverEnd::Finish
        };
        let end_idx = match mover_end {
            MoverEnd::Start => 0,
            MoverEnd::Finish => s.pairs.len() - 1,
        };
        let candidates: Vec<usize> = (0..s.pairs.len())
            .filter(|&i| s.pairs[i].exterior && (s.is_trivial() || i != end_idx))
            .collect();
        let target = candidates[rng.gen_range(0..candidates.len())];
        let kind = loop {
            let kind = MoveKind::ALL[rng.gen_range(0..8)];
            let same = s.pairs[end_idx].dir == s.pairs[target].dir;
            if same == kind.requires_same_direction() {
                break kind;
            }
        };
        let mv = AppliedMove {
            kind,
            mover_end,
            over_pair_index: target,
        };
        s = apply_move(&s, mv).expect("sampled move is legal");
    }
    s
}

/// The tangle fixture used as the default Allen-Swenberg middle piece:
/// two ①-family structures around one ②-family structure, like the
/// tangle the middle component of the Allen-Swenberg links repeats.
pub fn default_tangle() -> OpenStrand {
    let mut s = OpenStrand::trivial();
    for mv in default_tangle_moves() {
        s = apply_move(&s, mv).expect("fixture moves are legal");
    }
    s
}

pub fn default_tangle_moves() -> Vec<AppliedMove> {
    // After the base ① move the end pair direction flips, so the later
    // moves take the opposite-direction kinds.
    vec![
        AppliedMove {
            kind: MoveKind::M11,
            mover_end: MoverEnd::Finish,
            over_pair_index: 0,
        },
        AppliedMove {
            kind: MoveKind::M22,
            mover_end: MoverEnd::Finish,
            over_pair_index: 1,
        },
        AppliedMove {
            kind: MoveKind::M12Prime,
            mover_end: MoverEnd::Finish,
            over_pair_index: 0,
        },
    ]
}
