//! Forgiving parsing of observable labels typed on the command line.

use heptads::{pauli, PauliOperator};

/// Parsed labels plus warnings about input that was accepted but altered.
pub struct Parsed {
    pub operators: Vec<PauliOperator>,
    pub warnings: Vec<String>,
}

/// Comma- or space-separated labels, case-insensitive. A leading `-` or `+`
/// is dropped with a warning since classes are taken up to sign.
pub fn parse_labels(text: &str, width: Option<usize>) -> Result<Parsed, String> {
    let mut operators = Vec::new();
    let mut warnings = Vec::new();
    for raw in text.split([',', ' ']).map(str::trim).filter(|s| !s.is_empty()) {
        let mut body = raw.to_ascii_uppercase();
        if let Some(rest) = body.strip_prefix(['-', '+']) {
            warnings.push(format!("ignoring the sign of {raw}; labels are taken up to sign"));
            body = rest.to_owned();
        }
        let op = pauli::parse_pauli(&body, width).map_err(|e| format!("bad label {raw:?}: {e}"))?;
        operators.push(op.unsigned());
    }
    if operators.is_empty() {
        return Err("no labels given".into());
    }
    Ok(Parsed { operators, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_and_sign() {
        let parsed = parse_labels("yxz, -IYX,yii", Some(3)).unwrap();
        let letters: Vec<String> = parsed.operators.iter().map(|o| o.letters()).collect();
        assert_eq!(letters, ["YXZ", "IYX", "YII"]);
        assert_eq!(parsed.warnings.len(), 1);
        assert!(parse_labels("XX", Some(3)).is_err());
        assert!(parse_labels(" , ", None).is_err());
        assert!(parse_labels("XQZ", None).is_err());
    }
}
