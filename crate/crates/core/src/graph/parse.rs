use super::{GraphBuilder, GraphError, LabelledGraph};

/// Parses the line-based `artin-graph v1` format.
///
/// ```text
/// # comment
/// v NAME
/// e NAME1 NAME2 LABEL
/// ```
///
/// Edge endpoints are declared implicitly; redeclaring a vertex is harmless.
/// Errors carry the 1-based line number.
pub fn parse_graph(input: &[u8]) -> Result<LabelledGraph, GraphError> {
    let mut builder = GraphBuilder::default();
    for (i, raw) in input.split(|&b| b == b'\n').enumerate() {
        let line_no = i + 1;
        parse_line(&mut builder, raw).map_err(|e| e.at_line(line_no))?;
    }
    Ok(builder.build())
}

fn parse_line(builder: &mut GraphBuilder, raw: &[u8]) -> Result<(), GraphError> {
    let line = std::str::from_utf8(raw).map_err(|_| GraphError::Syntax("invalid UTF-8".into()))?;
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(());
    }
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.as_slice() {
        ["v", name] => builder.add_vertex(*name),
        ["e", u, v, label] => {
            let label = parse_label(label)?;
            builder.add_vertex(*u)?;
            builder.add_vertex(*v)?;
            builder.add_edge(u, v, label)
        }
        ["v", ..] => Err(GraphError::Syntax("expected `v NAME`".into())),
        ["e", ..] => Err(GraphError::Syntax("expected `e NAME1 NAME2 LABEL`".into())),
        [other, ..] => Err(GraphError::Syntax(format!("unknown directive `{other}`"))),
        [] => Ok(()),
    }
}

fn parse_label(token: &str) -> Result<i64, GraphError> {
    let digits = token.strip_prefix(['-', '+']).unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(GraphError::Syntax(format!("label `{token}` is not a base-10 integer")));
    }
    token.parse::<i64>().map_err(|_| GraphError::Syntax(format!("label `{token}` out of range")))
}
