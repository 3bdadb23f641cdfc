use crate::moves::apply_move;
use crate::strand::{AppliedMove, MoveKind, MoverEnd, OpenStrand, TangleError};
use link_diagram::to_text as diagram_to_text;

/// Strand files are the diagram text plus a `move` trailer; loading
/// replays the moves from the trivial strand and cross-checks the stored
/// diagram.
pub fn to_text(s: &OpenStrand) -> String {
    let mut out = diagram_to_text(&s.diagram);
    for m in &s.moves {
        out.push_str(&format!(
            "move {} {} {}\n",
            m.kind.label(),
            m.mover_end.label(),
            m.over_pair_index
        ));
    }
    out
}

pub fn from_text(text: &str) -> Result<OpenStrand, TangleError> {
    let mut diagram_lines = Vec::new();
    let mut moves = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("move ") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(TangleError::Parse {
                    line: i + 1,
                    message: "move needs: kind end pair-index".into(),
                });
            }
            let kind = MoveKind::from_label(parts[0]).ok_or(TangleError::Parse {
                line: i + 1,
                message: format!("unknown move kind {:?}", parts[0]),
            })?;
            let mover_end = MoverEnd::from_label(parts[1]).ok_or(TangleError::Parse {
                line: i + 1,
                message: format!("unknown mover end {:?}", parts[1]),
            })?;
            let over_pair_index = parts[2].parse().map_err(|_| TangleError::Parse {
                line: i + 1,
                message: format!("bad pair index {:?}", parts[2]),
            })?;
            moves.push(AppliedMove {
                kind,
                mover_end,
                over_pair_index,
            });
        } else {
            diagram_lines.push(raw);
        }
    }
    let mut strand = OpenStrand::trivial();
    for m in moves {
        strand = apply_move(&strand, m)?;
    }
    let stored = link_diagram::parse_text(&diagram_lines.join("\n")).map_err(|e| {
        TangleError::Parse {
            line: 0,
            message: e.to_string(),
        }
    })?;
    if stored != strand.diagram {
        return Err(TangleError::StructureViolation(
            "stored diagram does not match the replayed moves".into(),
        ));
    }
    Ok(strand)
}
