use crate::diagram::{Crossing, DiagramError, LinkDiagram};

/// A Reidemeister move site. Add-moves name arcs; remove-moves name the
/// crossings to delete. R3 is a slide: the strand under both others moves
/// across the crossing the other two form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RMove {
    /// Insert a kink on `arc`. `style` 0..=3 picks over-piece and sign:
    /// bit 0 = the new piece passes over (else the old), bit 1 = negative.
    R1Add { arc: String, style: u8 },
    /// Remove the kink crossing with this id.
    R1Remove { crossing: String },
    /// Poke `under` beneath `over`: two cancelling crossings, the first
    /// with `sign`, the second with `-sign`.
    R2Add { under: String, over: String, sign: i8 },
    /// Remove a cancelling pair of crossings.
    R2Remove { first: String, second: String },
    /// Slide: `mid` is the crossing formed by the two upper strands,
    /// `low_first` and `low_second` are the moving strand's consecutive
    /// crossings (in under-chain order) beneath them.
    R3Slide {
        mid: String,
        low_first: String,
        low_second: String,
    },
}

fn fresh_arc(d: &LinkDiagram, base: &str) -> String {
    let mut i = 1;
    loop {
        let cand = format!("{base}.{i}");
        if !d.has_arc(&cand) {
            return cand;
        }
        i += 1;
    }
}

fn fresh_crossing(d: &LinkDiagram, base: &str) -> String {
    let mut i = 1;
    loop {
        let cand = format!("{base}{i}");
        if !d.crossings.iter().any(|c| c.id == cand) {
            return cand;
        }
        i += 1;
    }
}

/// Renames `from` to `to` everywhere (arc merge after a remove-move).
fn merge_arcs(d: &mut LinkDiagram, from: &str, to: &str) {
    if from == to {
        return;
    }
    d.arcs.retain(|a| a != from);
    for e in &mut d.endpoints {
        if e == from {
            *e = to.to_string();
        }
    }
    for c in &mut d.crossings {
        for slot in [&mut c.under_in, &mut c.over, &mut c.under_out] {
            if slot == from {
                *slot = to.to_string();
            }
        }
    }
}

/// An arc with no under-roles and no free ends is a closed circle passing
/// over everything; cutting it once yields a single self-returning arc,
/// so such arcs are not split.
fn is_free_circle(d: &LinkDiagram, arc: &str) -> bool {
    !d.crossings
        .iter()
        .any(|c| c.under_in == arc || c.under_out == arc)
        && !d.endpoints.iter().any(|e| e == arc)
}

/// Splits `arc` at a point: `arc` keeps its producer (under_out role),
/// the new piece takes over the consumer role (or a free-end entry).
fn split_arc_after(d: &mut LinkDiagram, arc: &str) -> String {
    let new = fresh_arc(d, arc);
    d.arcs.push(new.clone());
    if let Some(c) = d.crossings.iter_mut().find(|c| c.under_in == arc) {
        c.under_in = new.clone();
    } else if let Some(e) = d.endpoints.iter_mut().find(|e| *e == arc) {
        // Arbitrary but deterministic: the first endpoint entry moves.
        *e = new.clone();
    }
    new
}

pub fn apply_reidemeister(d: &LinkDiagram, mv: &RMove) -> Result<LinkDiagram, DiagramError> {
    let mut out = d.clone();
    match mv {
        RMove::R1Add { arc, style } => {
            if !d.has_arc(arc) {
                return Err(DiagramError::IllegalSite(format!("no arc {arc}")));
            }
            if *style > 3 {
                return Err(DiagramError::IllegalSite("style must be 0..=3".into()));
            }
            let sign = if style & 2 == 2 { -1 } else { 1 };
            let id = fresh_crossing(&out, "k");
            if is_free_circle(&out, arc) {
                // One under-pass on a bare circle: the arc returns to itself.
                out.crossings.push(Crossing {
                    id,
                    sign,
                    under_in: arc.clone(),
                    over: arc.clone(),
                    under_out: arc.clone(),
                });
            } else {
                let new = split_arc_after(&mut out, arc);
                let over = if style & 1 == 1 { new.clone() } else { arc.clone() };
                out.crossings.push(Crossing {
                    id,
                    sign,
                    under_in: arc.clone(),
                    over,
                    under_out: new,
                });
            }
        }
        RMove::R1Remove { crossing } => {
            let pos = out
                .crossings
                .iter()
                .position(|c| &c.id == crossing)
                .ok_or_else(|| DiagramError::IllegalSite(format!("no crossing {crossing}")))?;
            let c = out.crossings[pos].clone();
            if c.over != c.under_in && c.over != c.under_out {
                return Err(DiagramError::IllegalSite(format!(
                    "crossing {crossing} is not a kink"
                )));
            }
            out.crossings.remove(pos);
            let keep = c.under_in.clone().min(c.under_out.clone());
            let gone = if keep == c.under_in {
                c.under_out.clone()
            } else {
                c.under_in.clone()
            };
            merge_arcs(&mut out, &gone, &keep);
        }
        RMove::R2Add { under, over, sign } => {
            if !d.has_arc(under) || !d.has_arc(over) {
                return Err(DiagramError::IllegalSite("unknown arc".into()));
            }
            if under == over {
                return Err(DiagramError::IllegalSite(
                    "R2 needs two distinct arcs (use R1 for kinks)".into(),
                ));
            }
            if *sign != 1 && *sign != -1 {
                return Err(DiagramError::IllegalSite("sign must be +1 or -1".into()));
            }
            let far = if is_free_circle(&out, under) {
                under.clone() // the circle wraps back to itself
            } else {
                split_arc_after(&mut out, under)
            };
            let mid = fresh_arc(&out, under);
            out.arcs.push(mid.clone());
            let id1 = fresh_crossing(&out, "p");
            out.crossings.push(Crossing {
                id: id1,
                sign: *sign,
                under_in: under.clone(),
                over: over.clone(),
                under_out: mid.clone(),
            });
            let id2 = fresh_crossing(&out, "p");
            out.crossings.push(Crossing {
                id: id2,
                sign: -sign,
                under_in: mid,
                over: over.clone(),
                under_out: far,
            });
        }
        RMove::R2Remove { first, second } => {
            let i1 = out
                .crossings
                .iter()
                .position(|c| &c.id == first)
                .ok_or_else(|| DiagramError::IllegalSite(format!("no crossing {first}")))?;
            let i2 = out
                .crossings
                .iter()
                .position(|c| &c.id == second)
                .ok_or_else(|| DiagramError::IllegalSite(format!("no crossing {second}")))?;
            let c1 = out.crossings[i1].clone();
            let c2 = out.crossings[i2].clone();
            if c1.over != c2.over || c1.sign != -c2.sign || c1.under_out != c2.under_in {
                return Err(DiagramError::IllegalSite(
                    "crossings do not form a cancelling pair".into(),
                ));
            }
            let mid = c1.under_out.clone();
            if mid == c1.under_in || mid == c2.under_out || mid == c1.over {
                return Err(DiagramError::IllegalSite(
                    "middle piece is shared; not a clean R2 pair".into(),
                ));
            }
            out.crossings.retain(|c| c.id != c1.id && c.id != c2.id);
            let keep = c1.under_in.clone().min(c2.under_out.clone());
            let gone = if keep == c1.under_in {
                c2.under_out.clone()
            } else {
                c1.under_in.clone()
            };
            merge_arcs(&mut out, &mid, &keep);
            merge_arcs(&mut out, &gone, &keep);
        }
        RMove::R3Slide {
            mid,
            low_first,
            low_second,
        } => {
            let get = |id: &str| {
                d.crossings
                    .iter()
                    .find(|c| c.id == id)
                    .cloned()
                    .ok_or_else(|| DiagramError::IllegalSite(format!("no crossing {id}")))
            };
            let cm = get(mid)?;
            let c1 = get(low_first)?;
            let c2 = get(low_second)?;
            if c1.under_out != c2.under_in {
                return Err(DiagramError::IllegalSite(
                    "low crossings are not chained".into(),
                ));
            }
            // The +-oriented side chain of the mid crossing: start * over = end.
            let (pstart, pend) = if cm.sign > 0 {
                (cm.under_in.clone(), cm.under_out.clone())
            } else {
                (cm.under_out.clone(), cm.under_in.clone())
            };
            let a = cm.over.clone();
            // Two shapes: under B then under A, or under A then under B.
            let (b_cross, a_cross, b_first) = if c2.over == a {
                (c1.clone(), c2.clone(), true)
            } else if c1.over == a {
                (c2.clone(), c1.clone(), false)
            } else {
                return Err(DiagramError::IllegalSite(
                    "neither low crossing passes under the mid over-strand".into(),
                ));
            };
            // Which side of B the moving strand must currently cross,
            // and the side it lands on.
            let (want, other) = if b_first {
                if a_cross.sign > 0 {
                    (pstart.clone(), pend.clone())
                } else {
                    (pend.clone(), pstart.clone())
                }
            } else {
                // Inverse slide: sides swap.
                if a_cross.sign > 0 {
                    (pend.clone(), pstart.clone())
                } else {
                    (pstart.clone(), pend.clone())
                }
            };
            if b_cross.over != want {
                return Err(DiagramError::IllegalSite(format!(
                    "moving strand crosses {} but this slide needs {}",
                    b_cross.over, want
                )));
            }
            for c in &mut out.crossings {
                if c.id == b_cross.id {
                    c.over = a.clone();
                    c.sign = a_cross.sign;
                } else if c.id == a_cross.id {
                    c.over = other.clone();
                    c.sign = b_cross.sign;
                }
            }
        }
    }
    out.validate_fragment()?;
    Ok(out)
}
