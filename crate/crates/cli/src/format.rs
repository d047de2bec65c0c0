//! The line-oriented `.alg` and `.rep` formats and their canonical printers.
//!
//! ```text
//! field Q
//! quiver
//!   vertex 1
//!   arrow alpha: 1 -> 2
//! relations
//!   relation alpha*beta - 2 gamma*delta
//! ```
//!
//! A `.rep` file holds one or more modules, each a `module <name>` header
//! followed by `dim <vertex>=<n> ...` and `map <arrow> = [[..],[..]]` lines.
//! Missing vertices have dimension zero and missing maps are zero. A comment
//! on the `module` line (conventionally the stacked composition-series name,
//! e.g. `# 4/2/1`) is kept as the module's note.

use std::sync::Arc;

use tauslice::algebra::{parse_relation, parse_scalar, PresentedAlgebra, Quiver, DEFAULT_LENGTH_CAP};
use tauslice::exactlin::{Field, Matrix, Scalar};
use tauslice::modrep::Representation;
use tauslice::{Error, Result};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

/// Column (1-based) of `needle` inside `raw`, for error positions.
fn column_of(raw: &str, needle: &str) -> usize {
    raw.find(needle).map_or(1, |i| i + 1)
}

/// Lines with comments stripped, paired with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, raw, body))
    })
}

pub fn parse_field(tok: &str) -> Result<Field> {
    let tok = tok.trim();
    if tok == "Q" {
        return Ok(Field::Rationals);
    }
    let digits = tok
        .strip_prefix("Fp:")
        .or_else(|| tok.strip_prefix("GF(").and_then(|t| t.strip_suffix(')')))
        .or_else(|| tok.strip_prefix('F'))
        .ok_or_else(|| Error::InvalidField(format!("unknown field {tok}")))?;
    let p: u64 = digits.parse().map_err(|_| Error::InvalidField(format!("unknown field {tok}")))?;
    Field::prime(p)
}

/// Parses an `.alg` file. `field_override` replaces the declared field.
pub fn parse_algebra(text: &str, field_override: Option<Field>) -> Result<Arc<PresentedAlgebra>> {
    let mut field = None;
    let mut quiver = Quiver::new();
    let mut relations: Vec<(usize, usize, String)> = vec![];
    let mut length_cap = DEFAULT_LENGTH_CAP;
    for (n, raw, body) in lines(text) {
        let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match kw {
            "field" => field = Some(parse_field(rest).map_err(|e| syntax(n, column_of(raw, rest), e.to_string()))?),
            "quiver" | "relations" if rest.is_empty() => {}
            "vertex" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(syntax(n, column_of(raw, "vertex"), "expected `vertex <label>`"));
                }
                quiver.add_vertex(rest).map_err(|e| syntax(n, column_of(raw, rest), e.to_string()))?;
            }
            "arrow" => {
                let bad = || syntax(n, column_of(raw, "arrow"), "expected `arrow <name>: <src> -> <tgt>`");
                let (name, ends) = rest.split_once(':').ok_or_else(bad)?;
                let (s, t) = ends.split_once("->").ok_or_else(bad)?;
                let (name, s, t) = (name.trim(), s.trim(), t.trim());
                let vs = quiver
                    .vertex_index(s)
                    .ok_or_else(|| syntax(n, column_of(raw, s), format!("unknown vertex {s}")))?;
                let vt = quiver
                    .vertex_index(t)
                    .ok_or_else(|| syntax(n, column_of(raw, t), format!("unknown vertex {t}")))?;
                quiver.add_arrow(name, vs, vt).map_err(|e| syntax(n, column_of(raw, name), e.to_string()))?;
            }
            "relation" => {
                if rest.is_empty() {
                    return Err(syntax(n, column_of(raw, "relation"), "empty relation"));
                }
                relations.push((n, column_of(raw, rest), rest.to_string()));
            }
            "option" => {
                let mut it = rest.split_whitespace();
                match (it.next(), it.next(), it.next()) {
                    (Some("length_cap"), Some(v), None) => {
                        length_cap = v.parse().map_err(|_| syntax(n, column_of(raw, v), "bad length_cap"))?;
                    }
                    _ => return Err(syntax(n, column_of(raw, rest), format!("unknown option {rest}"))),
                }
            }
            _ => return Err(syntax(n, column_of(raw, kw), format!("unexpected `{kw}`"))),
        }
    }
    let field = field_override.or(field).ok_or_else(|| syntax(1, 1, "missing `field` declaration"))?;
    if quiver.num_vertices() == 0 {
        return Err(syntax(1, 1, "quiver has no vertices"));
    }
    let rels = relations
        .iter()
        .map(|(n, c, r)| {
            parse_relation(field, &quiver, r).map_err(|e| match e {
                Error::UnknownLabel(_) | Error::Parse(_) => syntax(*n, *c, e.to_string()),
                e => e,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    PresentedAlgebra::build(field, quiver, rels, length_cap)
}

/// Canonical text of an algebra: declared vertices, arrows and generating
/// relations in order.
pub fn print_algebra(a: &PresentedAlgebra) -> String {
    let q = a.quiver();
    let mut s = format!("field {}\nquiver\n", a.field());
    for v in q.vertices() {
        s.push_str(&format!("  vertex {v}\n"));
    }
    for ar in q.arrows() {
        s.push_str(&format!(
            "  arrow {}: {} -> {}\n",
            ar.label,
            q.vertex_label(ar.source),
            q.vertex_label(ar.target)
        ));
    }
    if !a.relations().is_empty() {
        s.push_str("relations\n");
        for r in a.relations() {
            s.push_str(&format!("  relation {}\n", r.display(q)));
        }
    }
    if a.length_cap() != DEFAULT_LENGTH_CAP {
        s.push_str(&format!("option length_cap {}\n", a.length_cap()));
    }
    s
}

/// A named module from a `.rep` file.
#[derive(Clone, Debug)]
pub struct NamedModule {
    pub name: String,
    pub note: Option<String>,
    pub module: Representation,
}

fn parse_matrix(field: Field, text: &str, n: usize, col: usize) -> Result<Vec<Vec<Scalar>>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| syntax(n, col, "matrix must look like [[..],[..]]"))?
        .trim();
    if inner.is_empty() {
        return Ok(vec![]);
    }
    let mut rows = vec![];
    for chunk in inner.split(']') {
        let chunk = chunk.trim().trim_start_matches(',').trim();
        if chunk.is_empty() {
            continue;
        }
        let body = chunk.strip_prefix('[').ok_or_else(|| syntax(n, col, "row must start with ["))?;
        let row = body
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| parse_scalar(field, x).map_err(|e| syntax(n, col, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// Parses every module of a `.rep` file over `a`.
pub fn parse_modules(text: &str, a: &Arc<PresentedAlgebra>) -> Result<Vec<NamedModule>> {
    struct Pending {
        name: String,
        note: Option<String>,
        line: usize,
        dims: Option<Vec<usize>>,
        maps: Vec<Option<Vec<Vec<Scalar>>>>,
    }
    let q = a.quiver();
    let field = a.field();
    let mut done = vec![];
    let mut cur: Option<Pending> = None;
    let finish = |p: Pending| -> Result<NamedModule> {
        let dims = p.dims.ok_or_else(|| syntax(p.line, 1, format!("module {} has no `dim` line", p.name)))?;
        let maps = q
            .arrows()
            .iter()
            .zip(p.maps)
            .map(|(ar, m)| {
                let (r, c) = (dims[ar.target], dims[ar.source]);
                match m {
                    None => Ok(Matrix::zeros(field, r, c)),
                    Some(rows) if r == 0 || c == 0 => {
                        if rows.iter().all(Vec::is_empty) && (rows.is_empty() || rows.len() == r) {
                            Ok(Matrix::zeros(field, r, c))
                        } else {
                            Err(syntax(p.line, 1, format!("map {} has the wrong shape", ar.label)))
                        }
                    }
                    Some(rows) => {
                        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                            return Err(syntax(
                                p.line,
                                1,
                                format!("map {} must be {r}x{c} in module {}", ar.label, p.name),
                            ));
                        }
                        Ok(Matrix::from_rows(field, rows))
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let module = Representation::new(a.clone(), dims, maps)?;
        Ok(NamedModule { name: p.name, note: p.note, module })
    };
    for (n, raw, body) in lines(text) {
        let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match kw {
            "module" => {
                if let Some(p) = cur.take() {
                    done.push(finish(p)?);
                }
                let name = if rest.is_empty() { format!("M{}", done.len() + 1) } else { rest.to_string() };
                let note = raw.split_once('#').map(|(_, c)| c.trim().to_string()).filter(|c| !c.is_empty());
                cur = Some(Pending { name, note, line: n, dims: None, maps: vec![None; q.num_arrows()] });
            }
            "dim" | "map" => {
                if cur.is_none() {
                    cur = Some(Pending {
                        name: format!("M{}", done.len() + 1),
                        note: None,
                        line: n,
                        dims: None,
                        maps: vec![None; q.num_arrows()],
                    });
                }
                let p = cur.as_mut().unwrap();
                if kw == "dim" {
                    let mut dims = vec![0; q.num_vertices()];
                    for tok in rest.split_whitespace() {
                        let (v, d) = tok
                            .split_once('=')
                            .ok_or_else(|| syntax(n, column_of(raw, tok), "expected <vertex>=<dim>"))?;
                        let vi = q
                            .vertex_index(v)
                            .ok_or_else(|| syntax(n, column_of(raw, tok), format!("unknown vertex {v}")))?;
                        dims[vi] = d.parse().map_err(|_| syntax(n, column_of(raw, tok), "bad dimension"))?;
                    }
                    p.dims = Some(dims);
                } else {
                    let (name, m) = rest
                        .split_once('=')
                        .ok_or_else(|| syntax(n, column_of(raw, "map"), "expected `map <arrow> = [[..]]`"))?;
                    let name = name.trim();
                    let ai = q
                        .arrow_index(name)
                        .ok_or_else(|| syntax(n, column_of(raw, name), format!("unknown arrow {name}")))?;
                    p.maps[ai] = Some(parse_matrix(field, m, n, column_of(raw, m.trim()))?);
                }
            }
            _ => return Err(syntax(n, column_of(raw, kw), format!("unexpected `{kw}`"))),
        }
    }
    if let Some(p) = cur.take() {
        done.push(finish(p)?);
    }
    if done.is_empty() {
        return Err(syntax(1, 1, "no module in file"));
    }
    Ok(done)
}

fn print_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| format!("[{}]", m.row(i).iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

/// Canonical text of a `.rep` file.
pub fn print_modules(ms: &[NamedModule]) -> String {
    ms.iter().map(|m| print_module(&m.name, m.note.as_deref(), &m.module)).collect::<Vec<_>>().join("\n")
}

/// Canonical text of one module block.
pub fn print_module(name: &str, note: Option<&str>, m: &Representation) -> String {
    let q = m.algebra().quiver();
    let dims: Vec<String> = q
        .vertices()
        .iter()
        .zip(m.dims())
        .filter(|(_, &d)| d > 0)
        .map(|(v, d)| format!("{v}={d}"))
        .collect();
    let header = match note {
        Some(n) => format!("module {name}  # {n}"),
        None => format!("module {name}"),
    };
    let mut s = format!("{header}\ndim {}\n", dims.join(" "));
    for (a, ar) in q.arrows().iter().enumerate() {
        let mat = m.map(a);
        if mat.rows() > 0 && mat.cols() > 0 && !mat.is_zero() {
            s.push_str(&format!("map {} = {}\n", ar.label, print_matrix(mat)));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_tokens() {
        assert_eq!(parse_field("Q").unwrap(), Field::Rationals);
        for tok in ["Fp:7", "GF(7)", "F7"] {
            assert_eq!(parse_field(tok).unwrap(), Field::Prime(7));
        }
        assert!(parse_field("Fp:8").is_err());
        assert!(parse_field("R").is_err());
    }

    #[test]
    fn missing_maps_are_zero_and_comments_are_ignored() {
        let a = parse_algebra("field Q\nvertex 1\nvertex 2  # sink\narrow a: 1 -> 2\n", None).unwrap();
        let ms = parse_modules("module s  # 1 2\ndim 1=1 2=1\n", &a).unwrap();
        assert_eq!(ms[0].note.as_deref(), Some("1 2"));
        assert!(ms[0].module.map(0).is_zero());
    }

    #[test]
    fn map_shape_is_checked() {
        let a = parse_algebra("field Q\nvertex 1\nvertex 2\narrow a: 1 -> 2\n", None).unwrap();
        assert!(parse_modules("module m\ndim 1=1 2=1\nmap a = [[1,2]]\n", &a).is_err());
    }
}
