use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use thiserror::Error;

/// One crossing of an oriented diagram. The under-strand enters as
/// `under_in` and leaves as `under_out`; `over` is the arc passing above.
/// At a positive crossing the relation is `under_out = under_in * over`,
/// at a negative one `under_out = under_in *⁻¹ over`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub id: String,
    pub sign: i8,
    pub under_in: String,
    pub over: String,
    pub under_out: String,
}

/// The crossing relation in solved form: `lhs = rhs_base * rhs_operand`
/// (or `*⁻¹` when `use_inverse`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingRelation {
    pub lhs: String,
    pub rhs_base: String,
    pub rhs_operand: String,
    pub use_inverse: bool,
}

/// An oriented link diagram or open-strand fragment over named arcs.
///
/// `endpoints` lists free arc ends in order; it is empty for closed
/// diagrams. For open-strand diagrams it has exactly four entries,
/// conventionally `[a0, b0, ae, be]`. An arc with two free ends (a bare
/// segment) appears twice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkDiagram {
    pub name: String,
    pub arcs: Vec<String>,
    pub endpoints: Vec<String>,
    pub crossings: Vec<Crossing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("illegal move site: {0}")]
    IllegalSite(String),

    #[error("invalid tangle: {0}")]
    InvalidTangle(String),

    #[error("middle tangle count must be even (got {0})")]
    OddCount(usize),
}

impl LinkDiagram {
    pub fn new(name: impl Into<String>) -> Self {
        LinkDiagram {
            name: name.into(),
            arcs: Vec::new(),
            endpoints: Vec::new(),
            crossings: Vec::new(),
        }
    }

    pub fn arc_index(&self) -> HashMap<&str, usize> {
        self.arcs
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_str(), i))
            .collect()
    }

    pub fn has_arc(&self, arc: &str) -> bool {
        self.arcs.iter().any(|a| a == arc)
    }

    pub fn is_closed(&self) -> bool {
        self.endpoints.is_empty()
    }

    /// Role-count validation.
    ///
    /// Every arc may appear at most once as `under_in` and once as
    /// `under_out`. A missing role is a free end and must be accounted for
    /// by `endpoints`, except that an arc missing both roles and absent
    /// from `endpoints` is a closed over-circle (e.g. the unknot arc).
    pub fn validate(&self) -> Result<(), DiagramError> {
        let known: HashSet<&str> = self.arcs.iter().map(String::as_str).collect();
        if known.len() != self.arcs.len() {
            return Err(DiagramError::Validation("duplicate arc id".into()));
        }
        let mut ids = HashSet::new();
        for c in &self.crossings {
            if !ids.insert(c.id.as_str()) {
                return Err(DiagramError::Validation(format!(
                    "duplicate crossing id {}",
                    c.id
                )));
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(DiagramError::Validation(format!(
                    "crossing {} has sign {}, expected +1 or -1",
                    c.id, c.sign
                )));
            }
            for arc in [&c.under_in, &c.over, &c.under_out] {
                if !known.contains(arc.as_str()) {
                    return Err(DiagramError::Validation(format!(
                        "crossing {} references undeclared arc {arc}",
                        c.id
                    )));
                }
            }
        }
        for e in &self.endpoints {
            if !known.contains(e.as_str()) {
                return Err(DiagramError::Validation(format!(
                    "endpoint references undeclared arc {e}"
                )));
            }
        }
        let mut in_count: BTreeMap<&str, usize> = BTreeMap::new();
        let mut out_count: BTreeMap<&str, usize> = BTreeMap::new();
        for c in &self.crossings {
            *in_count.entry(c.under_in.as_str()).or_default() += 1;
            *out_count.entry(c.under_out.as_str()).or_default() += 1;
        }
        for (map, role) in [(&in_count, "under_in"), (&out_count, "under_out")] {
            if let Some((arc, n)) = map.iter().find(|(_, &n)| n > 1) {
                return Err(DiagramError::Validation(format!(
                    "arc {arc} appears {n} times as {role}"
                )));
            }
        }
        let mut free: BTreeMap<&str, usize> = BTreeMap::new();
        for e in &self.endpoints {
            *free.entry(e.as_str()).or_default() += 1;
        }
        for arc in &self.arcs {
            let a = arc.as_str();
            let missing = (1 - in_count.get(a).copied().unwrap_or(0))
                + (1 - out_count.get(a).copied().unwrap_or(0));
            let declared = free.get(a).copied().unwrap_or(0);
            let ok = match missing {
                0 => declared == 0,
                1 => declared == 1,
                2 => declared == 0 || declared == 2, // circle or bare segment
                _ => false,
            };
            if !ok {
                return Err(DiagramError::Validation(format!(
                    "arc {a}: {missing} missing under-role(s) but {declared} declared endpoint(s)"
                )));
            }
        }
        if !self.endpoints.is_empty() && self.endpoints.len() != 4 {
            return Err(DiagramError::Validation(format!(
                "open diagram must have 4 endpoint entries, got {}",
                self.endpoints.len()
            )));
        }
        Ok(())
    }

    /// Like `validate`, but permits any even number of endpoint entries
    /// (used for bare structure fragments that are not open strands).
    pub fn validate_fragment(&self) -> Result<(), DiagramError> {
        match self.validate() {
            Err(DiagramError::Validation(msg)) if msg.starts_with("open diagram") => {
                if self.endpoints.len() % 2 == 0 {
                    Ok(())
                } else {
                    Err(DiagramError::Validation(msg))
                }
            }
            other => other,
        }
    }

    /// One relation per crossing, in crossing order.
    pub fn crossing_relations(&self) -> Vec<CrossingRelation> {
        self.crossings
            .iter()
            .map(|c| CrossingRelation {
                lhs: c.under_out.clone(),
                rhs_base: c.under_in.clone(),
                rhs_operand: c.over.clone(),
                use_inverse: c.sign < 0,
            })
            .collect()
    }

    /// Connected components: arcs joined by under_in -> under_out chaining.
    /// Arcs not under any crossing form their own component each.
    pub fn components(&self) -> Vec<Vec<String>> {
        let idx = self.arc_index();
        let n = self.arcs.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for c in &self.crossings {
            let a = idx[c.under_in.as_str()];
            let b = idx[c.under_out.as_str()];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(self.arcs[i].clone());
        }
        groups.into_values().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_under_out_rejected() {
        let d = LinkDiagram {
            name: "bad".into(),
            arcs: vec!["a".into(), "b".into(), "c".into()],
            endpoints: vec![],
            crossings: vec![
                Crossing {
                    id: "c1".into(),
                    sign: 1,
                    under_in: "a".into(),
                    over: "b".into(),
                    under_out: "c".into(),
                },
                Crossing {
                    id: "c2".into(),
                    sign: 1,
                    under_in: "b".into(),
                    over: "a".into(),
                    under_out: "c".into(),
                },
            ],
        };
        let err = d.validate().unwrap_err();
        assert!(matches!(err, DiagramError::Validation(msg) if msg.contains("under_out")));
    }

    #[test]
    fn dangling_arc_reference_rejected() {
        let d = LinkDiagram {
            name: "bad".into(),
            arcs: vec!["a".into()],
            endpoints: vec![],
            crossings: vec![Crossing {
                id: "c1".into(),
                sign: 1,
                under_in: "a".into(),
                over: "ghost".into(),
                under_out: "a".into(),
            }],
        };
        assert!(d.validate().is_err());
    }
}
