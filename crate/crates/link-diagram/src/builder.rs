use crate::diagram::{Crossing, DiagramError, LinkDiagram};
use std::collections::HashMap;

/// Assembles diagrams from pieces, with arc unification for splicing
/// open-strand fragments into a larger diagram. `unify(keep, gone)` makes
/// two names refer to one arc; `keep`'s root survives.
pub struct DiagramBuilder {
    name: String,
    arcs: Vec<String>,
    parent: HashMap<String, String>,
    endpoints: Vec<String>,
    crossings: Vec<Crossing>,
}

impl DiagramBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        DiagramBuilder {
            name: name.into(),
            arcs: Vec::new(),
            parent: HashMap::new(),
            endpoints: Vec::new(),
            crossings: Vec::new(),
        }
    }

    pub fn arc(&mut self, id: impl Into<String>) -> String {
        let id = id.into();
        if !self.parent.contains_key(&id) {
            self.parent.insert(id.clone(), id.clone());
            self.arcs.push(id.clone());
        }
        id
    }

    pub fn endpoint(&mut self, id: &str) {
        self.endpoints.push(id.to_string());
    }

    pub fn crossing(&mut self, id: &str, sign: i8, under_in: &str, over: &str, under_out: &str) {
        for arc in [under_in, over, under_out] {
            self.arc(arc);
        }
        self.crossings.push(Crossing {
            id: id.to_string(),
            sign,
            under_in: under_in.to_string(),
            over: over.to_string(),
            under_out: under_out.to_string(),
        });
    }

    fn find(&mut self, id: &str) -> String {
        let p = self.parent.get(id).cloned().unwrap_or_else(|| {
            self.arc(id);
            id.to_string()
        });
        if p == id {
            return p;
        }
        let root = self.find(&p);
        self.parent.insert(id.to_string(), root.clone());
        root
    }

    pub fn unify(&mut self, keep: &str, gone: &str) {
        self.arc(keep);
        self.arc(gone);
        let rk = self.find(keep);
        let rg = self.find(gone);
        if rk != rg {
            self.parent.insert(rg, rk);
        }
    }

    /// Copies all crossings of an open fragment under a namespace tag.
    /// Returns the tagged names of its four endpoints `[a0, b0, ae, be]`.
    pub fn splice(
        &mut self,
        tag: &str,
        fragment: &LinkDiagram,
    ) -> Result<[String; 4], DiagramError> {
        if fragment.endpoints.len() != 4 {
            return Err(DiagramError::InvalidTangle(format!(
                "fragment {} has {} endpoint entries, need 4",
                fragment.name,
                fragment.endpoints.len()
            )));
        }
        fragment.validate()?;
        let rename = |arc: &str| format!("{tag}.{arc}");
        for a in &fragment.arcs {
            self.arc(rename(a));
        }
        for c in &fragment.crossings {
            self.crossings.push(Crossing {
                id: format!("{tag}.{}", c.id),
                sign: c.sign,
                under_in: rename(&c.under_in),
                over: rename(&c.over),
                under_out: rename(&c.under_out),
            });
        }
        let e = &fragment.endpoints;
        Ok([rename(&e[0]), rename(&e[1]), rename(&e[2]), rename(&e[3])])
    }

    pub fn finish(mut self) -> Result<LinkDiagram, DiagramError> {
        let order = self.arcs.clone();
        let mut resolved_arcs = Vec::new();
        for a in &order {
            let root = self.find(a);
            if !resolved_arcs.contains(&root) {
                resolved_arcs.push(root);
            }
        }
        let endpoints = self
            .endpoints
            .clone()
            .iter()
            .map(|e| self.find(e))
            .collect();
        let crossings = self
            .crossings
            .clone()
            .into_iter()
            .map(|c| Crossing {
                id: c.id,
                sign: c.sign,
                under_in: self.find(&c.under_in),
                over: self.find(&c.over),
                under_out: self.find(&c.under_out),
            })
            .collect();
        let d = LinkDiagram {
            name: self.name,
            arcs: resolved_arcs,
            endpoints,
            crossings,
        };
        d.validate()?;
        Ok(d)
    }
}
