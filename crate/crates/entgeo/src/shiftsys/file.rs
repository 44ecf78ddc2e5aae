//! The system file format.
//!
//! A file describes a principal system, or a product of principal systems
//! through `component` blocks. Lines are `key = value` pairs; `#` starts a
//! comment; relation polynomials are quoted.
//!
//! ```text
//! # the three-dot system
//! dim = 2
//! modulus = 2
//! relation = "1 + u1 + u2"
//! ```
//!
//! ```text
//! dim = 2
//! component = 1
//! modulus = 2
//! relation = "1 + u1 + u2"
//! component = 2
//! modulus = 2
//! relation = "1 + u1 + u2^-1"
//! ```

use super::{Presentation, Provenance, SystemError};
use crate::laurent::parse_poly;

struct ComponentSpec {
    line: usize,
    modulus: Option<u64>,
    relation: Option<String>,
}

/// Parse a system file into a presentation.
pub fn parse_system_file(text: &str) -> Result<Presentation, SystemError> {
    let mut dim: Option<usize> = None;
    let mut components: Vec<ComponentSpec> = Vec::new();
    let mut toplevel = ComponentSpec {
        line: 0,
        modulus: None,
        relation: None,
    };
    let mut in_components = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| SystemError::File {
            line: line_no,
            message: "expected `key = value`".into(),
        })?;
        let key = key.trim();
        let value = value.trim().trim_matches('"');
        match key {
            "dim" => {
                let d: usize = value.parse().map_err(|_| SystemError::File {
                    line: line_no,
                    message: format!("bad dimension {value:?}"),
                })?;
                if dim.replace(d).is_some() {
                    return Err(SystemError::File {
                        line: line_no,
                        message: "dim given twice".into(),
                    });
                }
            }
            "component" => {
                in_components = true;
                let expect = components.len() + 1;
                let i: usize = value.parse().map_err(|_| SystemError::File {
                    line: line_no,
                    message: format!("bad component index {value:?}"),
                })?;
                if i != expect {
                    return Err(SystemError::File {
                        line: line_no,
                        message: format!("component {i} out of order, expected {expect}"),
                    });
                }
                components.push(ComponentSpec {
                    line: line_no,
                    modulus: None,
                    relation: None,
                });
            }
            "modulus" => {
                let m: u64 = value.parse().map_err(|_| SystemError::File {
                    line: line_no,
                    message: format!("bad modulus {value:?}"),
                })?;
                let target = if in_components {
                    components.last_mut().ok_or(SystemError::File {
                        line: line_no,
                        message: "modulus before any component".into(),
                    })?
                } else {
                    &mut toplevel
                };
                if target.modulus.replace(m).is_some() {
                    return Err(SystemError::File {
                        line: line_no,
                        message: "modulus given twice".into(),
                    });
                }
            }
            "relation" => {
                let target = if in_components {
                    components.last_mut().ok_or(SystemError::File {
                        line: line_no,
                        message: "relation before any component".into(),
                    })?
                } else {
                    &mut toplevel
                };
                if target.relation.replace(value.to_string()).is_some() {
                    return Err(SystemError::File {
                        line: line_no,
                        message: "relation given twice in one component".into(),
                    });
                }
                if !in_components {
                    toplevel.line = line_no;
                }
            }
            other => {
                return Err(SystemError::File {
                    line: line_no,
                    message: format!("unknown key {other:?}"),
                });
            }
        }
    }

    let dim = dim.ok_or(SystemError::File {
        line: 0,
        message: "missing `dim`".into(),
    })?;
    let specs = if in_components {
        if toplevel.modulus.is_some() || toplevel.relation.is_some() {
            return Err(SystemError::File {
                line: toplevel.line,
                message: "top-level modulus/relation mixed with components".into(),
            });
        }
        components
    } else {
        vec![toplevel]
    };

    let mut factors = Vec::new();
    for spec in &specs {
        let modulus = spec.modulus.ok_or(SystemError::File {
            line: spec.line,
            message: "missing `modulus`".into(),
        })?;
        let relation = spec.relation.as_ref().ok_or(SystemError::File {
            line: spec.line,
            message: "missing `relation`".into(),
        })?;
        let poly = parse_poly(relation, dim, modulus).map_err(|e| SystemError::File {
            line: spec.line,
            message: format!("relation {relation:?}: {e}"),
        })?;
        factors.push(Presentation::principal(modulus, poly)?);
    }
    Presentation::product(factors)
}

/// Render a principal system or product of principal systems back into the
/// file format. Returns `None` for presentations the format cannot carry
/// (recodings, non-principal components).
pub fn render_system_file(pres: &Presentation) -> Option<String> {
    match pres.provenance() {
        Provenance::Principal { prime } => {
            let f = &pres.relations()[0][0];
            Some(format!(
                "dim = {}\nmodulus = {}\nrelation = \"{}\"\n",
                pres.dim(),
                prime,
                f
            ))
        }
        Provenance::Product(factors) => {
            let mut out = format!("dim = {}\n", pres.dim());
            for (i, factor) in factors.iter().enumerate() {
                let Provenance::Principal { prime } = factor.provenance() else {
                    return None;
                };
                let f = &factor.relations()[0][0];
                out.push_str(&format!(
                    "component = {}\nmodulus = {}\nrelation = \"{}\"\n",
                    i + 1,
                    prime,
                    f
                ));
            }
            Some(out)
        }
        Provenance::Recoded { .. } => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_round_trip() {
        let text = "# three-dot\ndim = 2\nmodulus = 2\nrelation = \"1 + u1 + u2\"\n";
        let pres = parse_system_file(text).unwrap();
        assert_eq!(pres.rank(), 1);
        assert_eq!(pres.modulus(), 2);
        let rendered = render_system_file(&pres).unwrap();
        let back = parse_system_file(&rendered).unwrap();
        assert_eq!(pres, back);
    }

    #[test]
    fn product_file() {
        let text = "dim = 2\n\
                    component = 1\nmodulus = 2\nrelation = \"1 + u1 + u2\"\n\
                    component = 2\nmodulus = 2\nrelation = \"1 + u1 + u2^-1\"\n";
        let pres = parse_system_file(text).unwrap();
        assert_eq!(pres.rank(), 2);
        let rendered = render_system_file(&pres).unwrap();
        assert_eq!(parse_system_file(&rendered).unwrap(), pres);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_system_file("dim = 2\nmodulus = 2\nrelation = \"1 + u9\"\n").unwrap_err();
        match err {
            SystemError::File { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("exceeds dimension"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = parse_system_file("dim = 2\nmodulus=2\n").unwrap_err();
        assert!(matches!(err, SystemError::File { .. }));
    }

    #[test]
    fn out_of_order_component_rejected() {
        let text = "dim = 2\ncomponent = 2\nmodulus = 2\nrelation = \"u1\"\n";
        assert!(parse_system_file(text).is_err());
    }
}
