//! Text format for simplicial complexes: a `vertices: v` header followed by
//! one facet per line.

use crate::cohomology::SimplicialComplex;
use crate::error::{AlgebraError, Result};

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut v: Option<usize> = None;
    let mut facets = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices:") {
            v = Some(rest.trim().parse().map_err(|_| AlgebraError::Parse {
                line,
                column: 10,
                message: "bad vertex count".into(),
            })?);
            continue;
        }
        let mut facet = Vec::new();
        let mut col = 1;
        for tok in content.split_whitespace() {
            let x: usize = tok.parse().map_err(|_| AlgebraError::Parse {
                line,
                column: col,
                message: format!("bad vertex {tok:?}"),
            })?;
            facet.push(x);
            col += tok.len() + 1;
        }
        facets.push(facet);
    }
    let v = match v {
        Some(v) => v,
        None => facets.iter().flatten().copied().max().unwrap_or(0),
    };
    SimplicialComplex::new(v, facets)
}

pub fn print_complex(c: &SimplicialComplex) -> String {
    let mut out = format!("vertices: {}\n", c.vertices());
    for f in c.facets() {
        let s: Vec<String> = f.iter().map(|x| x.to_string()).collect();
        out.push_str(&s.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let c = parse_complex("vertices: 7\n1 2 3\n4 5 6\n5 6 7\n").unwrap();
        assert_eq!(c.facets().len(), 3);
        assert_eq!(parse_complex(&print_complex(&c)).unwrap(), c);
        assert!(parse_complex("vertices: 3\n1 2\n1 2 3\n").is_err());
        assert!(parse_complex("vertices: 3\n1 x\n").is_err());
    }
}
