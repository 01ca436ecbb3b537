//! Presentation files: the first line holds `n`, each of the next `n` lines
//! the 1-indexed elements of one set, separated by whitespace.
//!
//! ```text
//! 3
//! 1 2 3
//! 2 3
//! 1 2 3
//! ```

use std::fs;
use std::path::Path;

use transpoly_core::presentation::MAX_N;
use transpoly_core::Presentation;

pub fn parse_presentation(text: &str) -> Result<Presentation, String> {
    let mut lines: Vec<&str> = text.lines().collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    let (first, rest) = lines.split_first().ok_or("presentation file is empty")?;
    let n: usize = first.trim().parse().map_err(|_| format!("line 1: expected n, found {:?}", first.trim()))?;
    if n == 0 || n > MAX_N {
        return Err(format!("line 1: n = {n} must lie in 1..={MAX_N}"));
    }
    if rest.len() != n {
        return Err(format!("expected {n} set lines after the first line, found {}", rest.len()));
    }
    let mut sets = Vec::with_capacity(n);
    for (k, line) in rest.iter().enumerate() {
        let lineno = k + 2;
        let mut set = Vec::new();
        for token in line.split_whitespace() {
            let e: usize = token.parse().map_err(|_| format!("line {lineno}: {token:?} is not an element"))?;
            if e < 1 || e > n {
                return Err(format!("line {lineno}: element {e} is outside 1..={n}"));
            }
            set.push(e);
        }
        if set.is_empty() {
            return Err(format!("line {lineno}: set A{} is empty", k + 1));
        }
        sets.push(set);
    }
    Presentation::from_sets(n, &sets).map_err(|e| e.to_string())
}

pub fn read_presentation(path: &Path) -> Result<Presentation, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_presentation(&text).map_err(|e| format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_small_family_layout() {
        let pres = parse_presentation("3\n1 2 3\n2 3\n1 2 3\n").unwrap();
        assert_eq!(pres.masks(), &[0b111, 0b110, 0b111]);
        // trailing blank lines and extra spaces are fine
        assert!(parse_presentation("3\n 1  2 3 \n2 3\n3\n\n\n").is_ok());
    }

    #[test]
    fn rejects_bad_files() {
        assert!(parse_presentation("").unwrap_err().contains("empty"));
        assert!(parse_presentation("x\n1").unwrap_err().contains("expected n"));
        assert!(parse_presentation("3\n1\n2\n").unwrap_err().contains("found 2"));
        assert!(parse_presentation("3\n1\n\n3\n").unwrap_err().contains("A2 is empty"));
        assert!(parse_presentation("3\n1\n4\n3\n").unwrap_err().contains("outside"));
        assert!(parse_presentation("3\n1\n0\n3\n").unwrap_err().contains("outside"));
        assert!(parse_presentation("3\n1\na\n3\n").unwrap_err().contains("not an element"));
        assert!(parse_presentation("0\n").is_err());
    }
}
