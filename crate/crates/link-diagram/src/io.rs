use crate::diagram::{Crossing, DiagramError, LinkDiagram};
use serde::{Deserialize, Serialize};

/// Text format, one record per line:
///
/// ```text
/// link <name>
/// arc <id>
/// endpoint <arc>
/// crossing <id> <+|-> under_in=<arc> over=<arc> under_out=<arc>
/// ```
///
/// Every arc is written explicitly so that parse -> serialize -> parse is
/// the identity (a 0-crossing unknot would otherwise vanish).
pub fn to_text(d: &LinkDiagram) -> String {
    let mut out = format!("link {}\n", d.name);
    for a in &d.arcs {
        out.push_str(&format!("arc {a}\n"));
    }
    for e in &d.endpoints {
        out.push_str(&format!("endpoint {e}\n"));
    }
    for c in &d.crossings {
        out.push_str(&format!(
            "crossing {} {} under_in={} over={} under_out={}\n",
            c.id,
            if c.sign >= 0 { '+' } else { '-' },
            c.under_in,
            c.over,
            c.under_out
        ));
    }
    out
}

pub fn parse_text(text: &str) -> Result<LinkDiagram, DiagramError> {
    let mut diagram: Option<LinkDiagram> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let kind = words.next().unwrap();
        match kind {
            "link" => {
                let name = words.next().ok_or_else(|| DiagramError::Parse {
                    line: line_no,
                    message: "link header needs a name".into(),
                })?;
                diagram = Some(LinkDiagram::new(name));
            }
            "arc" | "endpoint" | "crossing" => {
                let d = diagram.as_mut().ok_or_else(|| DiagramError::Parse {
                    line: line_no,
                    message: "record before link header".into(),
                })?;
                match kind {
                    "arc" => {
                        let id = words.next().ok_or_else(|| DiagramError::Parse {
                            line: line_no,
                            message: "arc needs an id".into(),
                        })?;
                        if !d.has_arc(id) {
                            d.arcs.push(id.to_string());
                        }
                    }
                    "endpoint" => {
                        let id = words.next().ok_or_else(|| DiagramError::Parse {
                            line: line_no,
                            message: "endpoint needs an arc".into(),
                        })?;
                        if !d.has_arc(id) {
                            d.arcs.push(id.to_string());
                        }
                        d.endpoints.push(id.to_string());
                    }
                    _ => {
                        let id = words.next().ok_or_else(|| DiagramError::Parse {
                            line: line_no,
                            message: "crossing needs an id".into(),
                        })?;
                        let sign = match words.next() {
                            Some("+") => 1i8,
                            Some("-") => -1i8,
                            other => {
                                return Err(DiagramError::Parse {
                                    line: line_no,
                                    message: format!("bad sign {other:?}"),
                                })
                            }
                        };
                        let mut under_in = None;
                        let mut over = None;
                        let mut under_out = None;
                        for w in words {
                            let (key, value) = w.split_once('=').ok_or_else(|| {
                                DiagramError::Parse {
                                    line: line_no,
                                    message: format!("expected key=value, got {w:?}"),
                                }
                            })?;
                            match key {
                                "under_in" => under_in = Some(value.to_string()),
                                "over" => over = Some(value.to_string()),
                                "under_out" => under_out = Some(value.to_string()),
                                _ => {
                                    return Err(DiagramError::Parse {
                                        line: line_no,
                                        message: format!("unknown field {key}"),
                                    })
                                }
                            }
                        }
                        let (under_in, over, under_out) = match (under_in, over, under_out) {
                            (Some(a), Some(b), Some(c)) => (a, b, c),
                            _ => {
                                return Err(DiagramError::Parse {
                                    line: line_no,
                                    message: "crossing needs under_in, over, under_out".into(),
                                })
                            }
                        };
                        for arc in [&under_in, &over, &under_out] {
                            if !d.has_arc(arc) {
                                d.arcs.push(arc.clone());
                            }
                        }
                        d.crossings.push(Crossing {
                            id: id.to_string(),
                            sign,
                            under_in,
                            over,
                            under_out,
                        });
                    }
                }
            }
            other => {
                return Err(DiagramError::Parse {
                    line: line_no,
                    message: format!("unknown record {other:?}"),
                })
            }
        }
    }
    let d = diagram.ok_or(DiagramError::Parse {
        line: 1,
        message: "missing link header".into(),
    })?;
    d.validate_fragment()?;
    Ok(d)
}

#[derive(Serialize, Deserialize)]
struct CrossingJson {
    id: String,
    sign: String,
    under_in: String,
    over: String,
    under_out: String,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    name: String,
    arcs: Vec<String>,
    endpoints: Vec<String>,
    crossings: Vec<CrossingJson>,
}

pub fn to_json(d: &LinkDiagram) -> String {
    let j = DiagramJson {
        name: d.name.clone(),
        arcs: d.arcs.clone(),
        endpoints: d.endpoints.clone(),
        crossings: d
            .crossings
            .iter()
            .map(|c| CrossingJson {
                id: c.id.clone(),
                sign: if c.sign >= 0 { "+".into() } else { "-".into() },
                under_in: c.under_in.clone(),
                over: c.over.clone(),
                under_out: c.under_out.clone(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&j).expect("serializable")
}

pub fn parse_json(text: &str) -> Result<LinkDiagram, DiagramError> {
    let j: DiagramJson = serde_json::from_str(text).map_err(|e| DiagramError::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let mut d = LinkDiagram::new(j.name);
    d.arcs = j.arcs;
    d.endpoints = j.endpoints;
    for c in j.crossings {
        let sign = match c.sign.as_str() {
            "+" => 1,
            "-" => -1,
            other => {
                return Err(DiagramError::Parse {
                    line: 0,
                    message: format!("bad sign {other:?}"),
                })
            }
        };
        d.crossings.push(Crossing {
            id: c.id,
            sign,
            under_in: c.under_in,
            over: c.over,
            under_out: c.under_out,
        });
    }
    d.validate_fragment()?;
    Ok(d)
}
