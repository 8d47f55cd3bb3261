//! Text formats.
//!
//! * `.h3`: `n m`, then `m` lines `a b c` (0-indexed).
//! * `.cg`: `n`, a color string of length `n` over `{1,2,3}`, `m`, then `m`
//!   lines `a b`.
//! * `.p3`: one line, a color string over `{1,2,3}`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use turanl2_core::colored::ColoredGraph;
use turanl2_core::rational::Rational;
use turanl2_core::{Graph, Partition3, ThreeGraph};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: duplicate edge")]
    Duplicate { line: usize },
    #[error(transparent)]
    Core(#[from] turanl2_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

type Result<T> = std::result::Result<T, FormatError>;

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<const K: usize>(line: usize, s: &str) -> Result<[usize; K]> {
    let mut out = [0usize; K];
    let mut it = s.split_whitespace();
    for slot in out.iter_mut() {
        let tok = it.next().ok_or_else(|| syntax(line, format!("expected {K} integers")))?;
        *slot = tok.parse().map_err(|_| syntax(line, format!("not an integer: {tok:?}")))?;
    }
    if it.next().is_some() {
        return Err(syntax(line, format!("expected {K} integers")));
    }
    Ok(out)
}

pub fn parse_h3(text: &str) -> Result<ThreeGraph> {
    let mut lines = content_lines(text);
    let (l, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let [n, m] = numbers::<2>(l, header)?;
    let mut seen = BTreeSet::new();
    let mut triples = Vec::with_capacity(m);
    for (l, s) in lines {
        let mut t = numbers::<3>(l, s)?;
        t.sort_unstable();
        if !seen.insert(t) {
            return Err(FormatError::Duplicate { line: l });
        }
        triples.push(t);
    }
    if triples.len() != m {
        return Err(FormatError::EdgeCount {
            expected: m,
            found: triples.len(),
        });
    }
    Ok(ThreeGraph::new(n, triples)?)
}

pub fn write_h3(h: &ThreeGraph) -> String {
    let mut s = format!("{} {}\n", h.n(), h.len());
    for [a, b, c] in h.edges() {
        let _ = writeln!(s, "{a} {b} {c}");
    }
    s
}

pub fn parse_p3(text: &str) -> Result<Partition3> {
    let mut lines = content_lines(text);
    let (_, s) = lines.next().ok_or_else(|| syntax(1, "missing color string"))?;
    if let Some((l, _)) = lines.next() {
        return Err(syntax(l, "trailing content"));
    }
    Ok(Partition3::parse(s)?)
}

pub fn write_p3(p: &Partition3) -> String {
    format!("{}\n", p.to_label_string())
}

pub fn parse_cg(text: &str) -> Result<ColoredGraph> {
    let mut lines = content_lines(text);
    let (l, s) = lines.next().ok_or_else(|| syntax(1, "missing vertex count"))?;
    let [n] = numbers::<1>(l, s)?;
    let (l, colors) = lines.next().ok_or_else(|| syntax(l + 1, "missing color string"))?;
    let p = Partition3::parse(colors)?;
    if p.n() != n {
        return Err(syntax(l, format!("color string has length {} but n = {n}", p.n())));
    }
    let (l, s) = lines.next().ok_or_else(|| syntax(l + 1, "missing edge count"))?;
    let [m] = numbers::<1>(l, s)?;
    let mut seen = BTreeSet::new();
    let mut pairs = Vec::with_capacity(m);
    for (l, s) in lines {
        let [a, b] = numbers::<2>(l, s)?;
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(FormatError::Duplicate { line: l });
        }
        pairs.push([a, b]);
    }
    if pairs.len() != m {
        return Err(FormatError::EdgeCount {
            expected: m,
            found: pairs.len(),
        });
    }
    Ok(ColoredGraph::new(Graph::new(n, pairs)?, p)?)
}

pub fn write_cg(g: &ColoredGraph) -> String {
    let mut s = format!("{}\n{}\n{}\n", g.n(), g.partition().to_label_string(), g.len());
    for [a, b] in g.graph().edges() {
        let _ = writeln!(s, "{a} {b}");
    }
    s
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: i128 = p.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let q: i128 = q.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if q == 0 {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(p, q))
}

/// Parses a comma-separated list of integers.
pub fn parse_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("not an integer: {t:?}")))
        .collect()
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_h3(path: &Path) -> Result<ThreeGraph> {
    parse_h3(&read(path)?)
}

pub fn read_cg(path: &Path) -> Result<ColoredGraph> {
    parse_cg(&read(path)?)
}

pub fn read_p3(path: &Path) -> Result<Partition3> {
    parse_p3(&read(path)?)
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|source| FormatError::Io {
            path: dir.display().to_string(),
            source,
        })?;
    }
    fs::write(path, contents).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use turanl2_core::colored::build_lambda;
    use turanl2_core::constructions::{build_c, Composition3};

    #[test]
    fn h3_round_trip() {
        let (h, p) = build_c(Composition3::new(2, 2, 2));
        let text = write_h3(&h);
        assert!(text.starts_with("6 "));
        assert_eq!(parse_h3(&text).unwrap(), h);
        assert_eq!(parse_p3(&write_p3(&p)).unwrap(), p);
    }

    #[test]
    fn h3_normalizes_order() {
        let h = parse_h3("4 2\n2 0 1\n# comment\n3 1 0\n").unwrap();
        assert_eq!(h.edges(), &[[0, 1, 2], [0, 1, 3]]);
        assert_eq!(write_h3(&h), "4 2\n0 1 2\n0 1 3\n");
    }

    #[test]
    fn h3_errors() {
        assert!(matches!(parse_h3("4 2\n0 1 2\n"), Err(FormatError::EdgeCount { expected: 2, found: 1 })));
        assert!(matches!(parse_h3("4 2\n0 1 2\n2 1 0\n"), Err(FormatError::Duplicate { line: 3 })));
        assert!(matches!(parse_h3("4 1\n0 1\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_h3("4 1\n0 1 1\n"), Err(FormatError::Core(_))));
        assert!(matches!(parse_h3("4 1\n0 1 4\n"), Err(FormatError::Core(_))));
        assert!(parse_h3("").is_err());
    }

    #[test]
    fn cg_round_trip() {
        let g = build_lambda(2, 2, 2);
        let text = write_cg(&g);
        assert_eq!(parse_cg(&text).unwrap(), g);
        assert!(parse_cg("3\n12\n0\n").is_err());
        assert!(parse_cg("3\n124\n0\n").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/40").unwrap(), Rational::new(1, 40));
        assert_eq!(parse_rational("3").unwrap(), Rational::new(3, 1));
        assert_eq!(parse_rational("2/4").unwrap(), Rational::new(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_list("2, 2,3").unwrap(), [2, 2, 3]);
    }
}
