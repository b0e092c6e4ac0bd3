//! Named complex expressions for the CLI: a tiny recursive grammar over the
//! generator families.
//!
//! ```text
//! expr := cycle:N | cross:N | simplex:N | simplex-boundary:N | points:N
//!       | point | empty | edge | triangle | edge+point
//!       | suspension(expr) | join(expr,expr)
//! ```

use flagcomb::complex::{
    cross_polytope_boundary, cycle, points, simplex, simplex_boundary, suspension,
    SimplicialComplex,
};
use flagcomb::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("unrecognized complex expression {0:?}")]
    Unrecognized(String),
    #[error("bad parameter in {0:?}: {1}")]
    BadParameter(String, String),
}

pub fn parse_complex(spec: &str) -> Result<SimplicialComplex, SpecError> {
    let s = spec.trim();
    let bad = |msg: &str| SpecError::BadParameter(s.to_string(), msg.to_string());
    if let Some(inner) = s.strip_prefix("suspension(").and_then(|r| r.strip_suffix(')')) {
        let c = parse_complex(inner)?;
        return suspension(&c).map_err(|e| bad(&e.to_string()));
    }
    if let Some(inner) = s.strip_prefix("join(").and_then(|r| r.strip_suffix(')')) {
        let split = split_top_level(inner).ok_or_else(|| bad("join needs two arguments"))?;
        let a = parse_complex(split.0)?;
        let b = parse_complex(split.1)?;
        return a.join(&b).map_err(|e| bad(&e.to_string()));
    }
    if let Some((name, arg)) = s.split_once(':') {
        let n: u32 = arg
            .parse()
            .map_err(|_| bad("parameter must be a nonnegative integer"))?;
        let made = match name {
            "cycle" => cycle(n),
            "cross" => cross_polytope_boundary(n),
            "simplex" => simplex(n),
            "simplex-boundary" => simplex_boundary(n),
            "points" => points(n),
            _ => return Err(SpecError::Unrecognized(s.to_string())),
        };
        return made.map_err(|e| bad(&e.to_string()));
    }
    match s {
        "point" => Ok(points(1).expect("point")),
        "empty" => Ok(SimplicialComplex::empty(0)),
        "edge" => Ok(simplex(2).expect("edge")),
        "triangle" => Ok(simplex(3).expect("triangle")),
        "edge+point" => Ok(SimplicialComplex::from_faces(
            3,
            [VertexSet::from_slice(&[0, 1]), VertexSet::singleton(2)],
        )
        .expect("edge plus point")),
        _ => Err(SpecError::Unrecognized(s.to_string())),
    }
}

/// Splits `"a,b"` at the top-level comma, respecting parentheses.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_generators() {
        assert_eq!(parse_complex("cycle:5").unwrap().f_vector().0, vec![1, 5, 5]);
        assert_eq!(parse_complex("cross:3").unwrap().f_vector().0, vec![1, 6, 12, 8]);
        assert_eq!(parse_complex("edge+point").unwrap().f_vector().0, vec![1, 3, 1]);
        assert_eq!(
            parse_complex("join(cycle:5,cycle:5)").unwrap().f_vector().0,
            vec![1, 10, 35, 50, 25]
        );
        assert_eq!(
            parse_complex("suspension(cycle:4)").unwrap().f_vector().0,
            vec![1, 6, 12, 8]
        );
        assert!(parse_complex("dodecahedron").is_err());
    }
}
