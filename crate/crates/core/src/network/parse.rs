use super::{valid_id, NetworkError, NetworkTopology, VertexKind};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> NetworkError {
    NetworkError::Syntax { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter().map(|(s, t)| (line[..s].chars().count() + 1, t)).collect()
}

/// Parses the line-oriented network format:
///
/// ```text
/// # comment
/// vertex <id> <bulk|surface|surface_special|surface_mixed|bridge>
/// chain  <id> <id>
/// ```
pub fn parse_network(text: &str) -> Result<NetworkTopology, NetworkError> {
    let mut builder = NetworkTopology::builder();
    let mut pending: Vec<(usize, String, String)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim_start().starts_with('#') {
            continue;
        }
        let toks = tokens(raw);
        let Some(&(col, keyword)) = toks.first() else { continue };
        let check_id = |(c, t): (usize, &str)| {
            if valid_id(t) {
                Ok(t.to_string())
            } else {
                Err(syntax(line, c, format!("invalid vertex id {t:?}")))
            }
        };
        match keyword {
            "vertex" => {
                if toks.len() != 3 {
                    return Err(syntax(line, col, "expected `vertex <id> <kind>`"));
                }
                let id = check_id(toks[1])?;
                let (kcol, ktok) = toks[2];
                let kind: VertexKind = ktok.parse().map_err(|e: String| syntax(line, kcol, e))?;
                builder.vertex(id, kind)?;
            }
            "chain" => {
                if toks.len() != 3 {
                    return Err(syntax(line, col, "expected `chain <id> <id>`"));
                }
                pending.push((line, check_id(toks[1])?, check_id(toks[2])?));
            }
            other => return Err(syntax(line, col, format!("unknown keyword {other:?}"))),
        }
    }

    for (line, a, b) in pending {
        let resolve = |id: String| {
            builder.lookup(&id).ok_or(NetworkError::UnknownVertexReference { id, line })
        };
        let (a, b) = (resolve(a)?, resolve(b)?);
        builder.chain(a, b);
    }
    builder.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::census;

    #[test]
    fn minimal_chain() {
        let net = parse_network("vertex a bulk\nvertex b bulk\nchain a b").unwrap();
        assert_eq!(net.vertex_count(), 2);
        assert_eq!(net.chain_count(), 1);
    }

    #[test]
    fn self_loop_arch() {
        let net = parse_network("vertex a surface\nchain a a\n").unwrap();
        assert_eq!(net.degree(0), 2);
        assert_eq!(census(&net).loops, 1);
    }

    #[test]
    fn chains_may_precede_vertices_and_comments_are_skipped() {
        let text = "# an arch\n  # indented comment\nchain s t\n\nvertex s surface\nvertex t surface\n";
        let net = parse_network(text).unwrap();
        assert_eq!(net.chain_count(), 1);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_network("vertex a bulk\n  edge a a\n"),
            Err(NetworkError::Syntax { line: 2, column: 3, message: "unknown keyword \"edge\"".into() })
        );
        assert!(matches!(
            parse_network("vertex a blob"),
            Err(NetworkError::Syntax { line: 1, column: 10, .. })
        ));
        assert!(matches!(parse_network("vertex a-b bulk"), Err(NetworkError::Syntax { column: 8, .. })));
        assert!(matches!(parse_network("vertex a bulk extra"), Err(NetworkError::Syntax { .. })));
        assert!(matches!(parse_network("chain a"), Err(NetworkError::Syntax { .. })));
    }

    #[test]
    fn reference_errors() {
        assert_eq!(
            parse_network("vertex a bulk\nchain a b\n"),
            Err(NetworkError::UnknownVertexReference { id: "b".into(), line: 2 })
        );
        assert_eq!(
            parse_network("vertex a bulk\nvertex b bulk\nvertex c bulk\nchain a b\n"),
            Err(NetworkError::IsolatedVertex("c".into()))
        );
        assert_eq!(
            parse_network("vertex a bulk\nvertex b bulk\nvertex c bulk\nvertex d bulk\nchain a b\nchain c d\n"),
            Err(NetworkError::DisconnectedNetwork)
        );
    }

    #[test]
    fn parallel_chains() {
        let net = parse_network("vertex a bulk\nvertex b bulk\nchain a b\nchain b a\n").unwrap();
        assert_eq!(net.chain_count(), 2);
        assert_eq!(census(&net).loops, 1);
    }
}
