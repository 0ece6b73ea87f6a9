use super::path::{Arrow, FreeElement, Path, Quiver};
use super::presentation::QuiverPresentation;
use crate::error::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the line-oriented presentation format:
///
/// ```text
/// vertices: 1 2
/// arrow: alpha: 1 -> 2
/// relation: alpha*beta*alpha*beta - eps*eps
/// ```
///
/// Words are `*`-joined arrow names read left to right, `name^k` abbreviates a
/// repeated arrow and `e(v)` (or `ev`) is the trivial path at `v`. `#` starts a comment.
pub fn parse_presentation(text: &str) -> Result<QuiverPresentation> {
    let mut quiver = Quiver::default();
    let mut seen_vertices = false;
    let mut relations = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| err(line_no, format!("expected 'key: value', got '{line}'")))?;
        let rest = rest.trim();
        match key.trim() {
            "vertices" => {
                if seen_vertices {
                    return Err(err(line_no, "vertices declared twice"));
                }
                seen_vertices = true;
                for name in rest.split_whitespace() {
                    if quiver.vertex_id(name).is_some() {
                        return Err(err(line_no, format!("duplicate vertex {name}")));
                    }
                    quiver.vertices.push(name.to_string());
                }
                if quiver.vertices.is_empty() {
                    return Err(err(line_no, "no vertices declared"));
                }
            }
            "arrow" => {
                let (name, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line_no, "expected 'arrow: name: src -> tgt'"))?;
                let name = name.trim();
                if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(err(line_no, format!("invalid arrow name '{name}'")));
                }
                if quiver.arrow_id(name).is_some() {
                    return Err(err(line_no, format!("duplicate arrow {name}")));
                }
                let (src, tgt) = ends
                    .split_once("->")
                    .ok_or_else(|| err(line_no, "expected 'src -> tgt'"))?;
                let vertex = |v: &str| {
                    quiver
                        .vertex_id(v.trim())
                        .ok_or_else(|| err(line_no, format!("unknown vertex {}", v.trim())))
                };
                let arrow = Arrow {
                    name: name.to_string(),
                    source: vertex(src)?,
                    target: vertex(tgt)?,
                };
                quiver.arrows.push(arrow);
            }
            "relation" => {
                let rel = parse_element(&quiver, rest, line_no)?;
                if rel.is_zero() {
                    return Err(err(line_no, "relation is zero"));
                }
                if rel.uniform_endpoints().is_none() {
                    return Err(err(line_no, "relation is not uniform"));
                }
                relations.push(rel);
            }
            other => return Err(err(line_no, format!("unknown directive '{other}'"))),
        }
    }
    if !seen_vertices {
        return Err(err(1, "missing 'vertices:' line"));
    }
    QuiverPresentation::new(quiver, relations)
}

/// Parses `c1*w1 + c2*w2 - ...` into an element of the free path algebra.
pub fn parse_element(quiver: &Quiver, text: &str, line_no: usize) -> Result<FreeElement> {
    let mut out = FreeElement::zero();
    let mut sign = 1i64;
    let mut current = String::new();
    let flush = |term: &mut String, sign: &mut i64, out: &mut FreeElement| -> Result<()> {
        let t = term.trim();
        if !t.is_empty() {
            let (c, p) = parse_term(quiver, t, line_no)?;
            out.add_term(p, *sign * c);
            *sign = 1;
        }
        term.clear();
        Ok(())
    };
    for ch in text.chars() {
        match ch {
            '+' => flush(&mut current, &mut sign, &mut out)?,
            '-' | '\u{2212}' => {
                if current.trim().is_empty() {
                    sign = -sign;
                } else {
                    flush(&mut current, &mut sign, &mut out)?;
                    sign = -1;
                }
            }
            c => current.push(c),
        }
    }
    if current.trim().is_empty() {
        if text.trim_end().ends_with(['+', '-', '\u{2212}']) {
            return Err(err(line_no, "dangling operator"));
        }
    } else {
        flush(&mut current, &mut sign, &mut out)?;
    }
    Ok(out)
}

fn parse_term(quiver: &Quiver, term: &str, line_no: usize) -> Result<(i64, Path)> {
    let mut coeff = 1i64;
    let mut path: Option<Path> = None;
    for (k, factor) in term.split('*').map(str::trim).enumerate() {
        if factor.is_empty() {
            return Err(err(line_no, format!("empty factor in '{term}'")));
        }
        if let Ok(c) = factor.parse::<i64>() {
            if k != 0 {
                return Err(err(line_no, format!("coefficient must lead the term '{term}'")));
            }
            coeff = c;
            continue;
        }
        let piece = parse_factor(quiver, factor, line_no)?;
        path = Some(match path {
            None => piece,
            Some(p) => p
                .concat(&piece)
                .ok_or_else(|| err(line_no, format!("word '{term}' is not composable")))?,
        });
    }
    let path = path.ok_or_else(|| err(line_no, format!("term '{term}' has no path")))?;
    Ok((coeff, path))
}

fn parse_factor(quiver: &Quiver, factor: &str, line_no: usize) -> Result<Path> {
    if let Some(inner) = factor.strip_prefix("e(").and_then(|f| f.strip_suffix(')')) {
        let v = quiver
            .vertex_id(inner.trim())
            .ok_or_else(|| err(line_no, format!("unknown vertex {inner}")))?;
        return Ok(Path::trivial(v));
    }
    // `e1` as printed, unless an arrow has that name.
    if quiver.arrow_id(factor).is_none() {
        if let Some(v) = factor.strip_prefix('e').and_then(|rest| quiver.vertex_id(rest)) {
            return Ok(Path::trivial(v));
        }
    }
    let (name, power) = match factor.split_once('^') {
        Some((n, k)) => {
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| err(line_no, format!("bad exponent in '{factor}'")))?;
            (n.trim(), k)
        }
        None => (factor, 1),
    };
    let id = quiver
        .arrow_id(name)
        .ok_or_else(|| err(line_no, format!("unknown arrow {name}")))?;
    let single = Path::arrow(quiver, id);
    if power == 0 {
        return Ok(Path::trivial(single.source));
    }
    let mut p = single.clone();
    for _ in 1..power {
        p = p
            .concat(&single)
            .ok_or_else(|| err(line_no, format!("'{factor}' is not composable")))?;
    }
    Ok(p)
}
