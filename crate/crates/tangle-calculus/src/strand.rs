use link_diagram::{trivial_open_diagram, LinkDiagram};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The four local structures a move can create.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureKind {
    S1,
    S1Prime,
    S2,
    S2Prime,
}

impl StructureKind {
    pub fn is_family_one(self) -> bool {
        matches!(self, StructureKind::S1 | StructureKind::S1Prime)
    }
}

/// The eight directional moves. The unprimed/primed pairs create the
/// plain/mirrored structure; the .1 forms require the mover and target
/// pair directions to agree, the .2 forms require them to differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveKind {
    M11,
    M12,
    M11Prime,
    M12Prime,
    M21,
    M22,
    M21Prime,
    M22Prime,
}

impl MoveKind {
    pub const ALL: [MoveKind; 8] = [
        MoveKind::M11,
        MoveKind::M12,
        MoveKind::M11Prime,
        MoveKind::M12Prime,
        MoveKind::M21,
        MoveKind::M22,
        MoveKind::M21Prime,
        MoveKind::M22Prime,
    ];

    pub fn structure(self) -> StructureKind {
        match self {
            MoveKind::M11 | MoveKind::M12 => StructureKind::S1,
            MoveKind::M11Prime | MoveKind::M12Prime => StructureKind::S1Prime,
            MoveKind::M21 | MoveKind::M22 => StructureKind::S2,
            MoveKind::M21Prime | MoveKind::M22Prime => StructureKind::S2Prime,
        }
    }

    /// Direction precondition: true means mover and target pair
    /// directions must be equal, false means opposite.
    pub fn requires_same_direction(self) -> bool {
        matches!(
            self,
            MoveKind::M11 | MoveKind::M11Prime | MoveKind::M21 | MoveKind::M21Prime
        )
    }

    pub fn label(self) -> &'static str {
        match self {
            MoveKind::M11 => "1.1",
            MoveKind::M12 => "1.2",
            MoveKind::M11Prime => "1.1'",
            MoveKind::M12Prime => "1.2'",
            MoveKind::M21 => "2.1",
            MoveKind::M22 => "2.2",
            MoveKind::M21Prime => "2.1'",
            MoveKind::M22Prime => "2.2'",
        }
    }

    pub fn from_label(s: &str) -> Option<MoveKind> {
        MoveKind::ALL.iter().copied().find(|k| k.label() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoverEnd {
    Start,
    Finish,
}

impl MoverEnd {
    pub fn label(self) -> &'static str {
        match self {
            MoverEnd::Start => "start",
            MoverEnd::Finish => "finish",
        }
    }

    pub fn from_label(s: &str) -> Option<MoverEnd> {
        match s {
            "start" => Some(MoverEnd::Start),
            "finish" => Some(MoverEnd::Finish),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppliedMove {
    pub kind: MoveKind,
    pub mover_end: MoverEnd,
    pub over_pair_index: usize,
}

/// Path direction marker for a parallel pair (the green arrow).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dir {
    Forward,
    Backward,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Forward => Dir::Backward,
            Dir::Backward => Dir::Forward,
        }
    }
}

/// A parallel pair: the arcs at the same index of both paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    /// Index into path_a and path_b (property 5: the indices agree).
    pub pos: usize,
    pub dir: Dir,
    /// Still available as a move target (outside the knotted interior).
    pub exterior: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinkRole {
    Horizontal,
    Vertical,
}

/// The ~c connection between consecutive parallel pairs. For the ①
/// family the forced pair-step map is f_{xy} or f_{yx} of the structure's
/// vertical arcs; for the ② family it is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairLink {
    pub kind: StructureKind,
    pub role: LinkRole,
    pub x_arc: String,
    pub y_arc: String,
    /// Chain orientation flipped by strand reversal.
    pub inverted: bool,
}

/// An open-strand diagram built by directional moves, with the
/// bookkeeping the §5-style analysis needs: the two paths, the parallel
/// pair list, and the structure links between consecutive pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenStrand {
    pub diagram: LinkDiagram,
    pub path_a: Vec<String>,
    pub path_b: Vec<String>,
    pub pairs: Vec<PairEntry>,
    pub links: Vec<PairLink>,
    pub moves: Vec<AppliedMove>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("move {kind} needs {expected} pair directions at the site", kind = .0.label(), expected = if .0.requires_same_direction() { "matching" } else { "opposite" })]
    DirectionViolation(MoveKind),

    #[error("bad pair index: {0}")]
    BadPairIndex(String),

    #[error("quandle is not medial; pass exploratory=true to run anyway")]
    NotMedial,

    #[error("structure violation: {0}")]
    StructureViolation(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl OpenStrand {
    /// Two separated, oppositely oriented segments.
    pub fn trivial() -> OpenStrand {
        OpenStrand {
            diagram: trivial_open_diagram(),
            path_a: vec!["a".into()],
            path_b: vec!["b".into()],
            pairs: vec![PairEntry {
                pos: 0,
                dir: Dir::Forward,
                exterior: true,
            }],
            links: Vec::new(),
            moves: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.diagram.crossings.is_empty()
    }

    pub fn endpoint_arcs(&self) -> [&str; 4] {
        [
            self.path_a.first().unwrap(),
            self.path_b.first().unwrap(),
            self.path_a.last().unwrap(),
            self.path_b.last().unwrap(),
        ]
    }

    pub fn pair_arcs(&self, idx: usize) -> (&str, &str) {
        let pos = self.pairs[idx].pos;
        (&self.path_a[pos], &self.path_b[pos])
    }

    /// Swaps the roles of the starting and ending pairs. The strand `a`
    /// is by convention the one oriented start -> end, so the two paths
    /// swap as well as reverse.
    pub fn reversed(&self) -> OpenStrand {
        let len = self.path_a.len();
        let mut path_a: Vec<String> = self.path_b.clone();
        path_a.reverse();
        let mut path_b: Vec<String> = self.path_a.clone();
        path_b.reverse();
        let mut pairs: Vec<PairEntry> = self
            .pairs
            .iter()
            .map(|p| PairEntry {
                pos: len - 1 - p.pos,
                dir: p.dir.flip(),
                exterior: p.exterior,
            })
            .collect();
        pairs.reverse();
        let mut links: Vec<PairLink> = self
            .links
            .iter()
            .map(|l| PairLink {
                inverted: !l.inverted,
                ..l.clone()
            })
            .collect();
        links.reverse();
        let mut diagram = self.diagram.clone();
        diagram.endpoints = vec![
            path_a[0].clone(),
            path_b[0].clone(),
            path_a[len - 1].clone(),
            path_b[len - 1].clone(),
        ];
        OpenStrand {
            diagram,
            path_a,
            path_b,
            pairs,
            links,
            moves: self.moves.clone(),
        }
    }
}
