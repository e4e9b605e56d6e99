//! Plain `key = value` configuration files.
//!
//! Blank lines and lines starting with `#` are ignored. Keys are trimmed and
//! `-` is folded to `_`, so `n-slabs` and `n_slabs` name the same setting.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub fn normalize_key(key: &str) -> String {
    key.trim().replace('-', "_")
}

pub fn parse_config(text: &str, path: &Path) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| Error::Config {
            path: path.to_path_buf(),
            line: i + 1,
            reason,
        };
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
        let key = normalize_key(key);
        if key.is_empty() {
            return Err(err("empty key".into()));
        }
        if out.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(err(format!("`{key}` given twice")));
        }
    }
    Ok(out)
}

pub fn load_config(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let text = "# scan\nfamily = scarf2\n\n n-slabs=4000 \nrange = -0.5:3\n";
        let m = parse_config(text, Path::new("c.cfg")).unwrap();
        assert_eq!(m["family"], "scarf2");
        assert_eq!(m["n_slabs"], "4000");
        assert_eq!(m["range"], "-0.5:3");
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_config("a = 1\nbogus\n", Path::new("c.cfg")).unwrap_err();
        assert!(matches!(err, Error::Config { line: 2, .. }));
        let err = parse_config("a = 1\na = 2\n", Path::new("c.cfg")).unwrap_err();
        assert!(matches!(err, Error::Config { line: 2, .. }));
    }
}
