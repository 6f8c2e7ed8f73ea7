use std::fmt::Write as _;

/// One line of `key=value` fields. Values may be double-quoted; inside
/// quotes `\"` and `\\` are escapes.
pub(crate) fn tokenize(line: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut in_token = false;
    let mut chars = line.chars();
    while let Some(c) = chars.next() {
        match c {
            '"' => {
                in_token = true;
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(e) => cur.push(e),
                            None => return Err("unterminated escape".into()),
                        },
                        Some(x) => cur.push(x),
                        None => return Err("unterminated quote".into()),
                    }
                }
            }
            c if c.is_whitespace() => {
                if in_token {
                    out.push(std::mem::take(&mut cur));
                    in_token = false;
                }
            }
            c => {
                in_token = true;
                cur.push(c);
            }
        }
    }
    if in_token {
        out.push(cur);
    }
    Ok(out)
}

/// Strips a `#` comment that is not inside quotes.
pub(crate) fn strip_comment(line: &str) -> &str {
    let mut quoted = false;
    let mut escaped = false;
    for (i, c) in line.char_indices() {
        match c {
            _ if escaped => escaped = false,
            '\\' if quoted => escaped = true,
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

pub(crate) fn quote(value: &str) -> String {
    let plain = !value.is_empty()
        && !value
            .chars()
            .any(|c| c.is_whitespace() || c == '"' || c == '#' || c == '\\');
    if plain {
        return value.to_string();
    }
    let mut out = String::from("\"");
    for c in value.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// `key=value` pairs in order; `key` must be nonempty and unique.
pub(crate) fn fields(tokens: &[String]) -> Result<Vec<(String, String)>, String> {
    let mut out: Vec<(String, String)> = Vec::new();
    for t in tokens {
        let (k, v) = t
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, found {t:?}"))?;
        if k.is_empty() {
            return Err(format!("empty key in {t:?}"));
        }
        if out.iter().any(|(x, _)| x == k) {
            return Err(format!("duplicate key {k:?}"));
        }
        out.push((k.to_string(), v.to_string()));
    }
    Ok(out)
}

pub(crate) fn render(fields: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (i, (k, v)) in fields.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{k}={}", quote(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_with_quotes() {
        let t = tokenize(r#"id=1 label="X_6 ⊂ P^4" note="a \"b\"""#).unwrap();
        assert_eq!(t, vec!["id=1", "label=X_6 ⊂ P^4", r#"note=a "b""#]);
        assert!(tokenize("label=\"open").is_err());
    }

    #[test]
    fn comments() {
        assert_eq!(strip_comment("id=1 # x"), "id=1 ");
        assert_eq!(strip_comment("note=\"#\" # x"), "note=\"#\" ");
    }

    #[test]
    fn quoting_round_trips() {
        for v in ["plain", "two words", "†", "a\"b", "", "x#y"] {
            let line = render(&[("k", v.to_string())]);
            let f = fields(&tokenize(strip_comment(&line)).unwrap()).unwrap();
            assert_eq!(f, vec![("k".to_string(), v.to_string())]);
        }
    }
}
