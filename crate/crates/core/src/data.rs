//! Embedded data files carrying the hand-curated tables, each protected by
//! a SHA-256 checksum over its canonicalized body. An environment variable
//! can point at a directory of replacement files, which are validated the
//! same way.

use crate::error::{Error, Result};
use sha2::{Digest, Sha256};

/// Directory override: files are read as `<dir>/<kind>/<type>.txt`.
pub const DATA_DIR_ENV: &str = "WEYLPSI_DATA_DIR";

/// A validated data file: relative name, verified checksum, and the
/// canonicalized body (checksum line removed).
pub struct DataFile {
    pub name: String,
    pub checksum: String,
    pub body: String,
}

const FAMILY_FILES: &[(&str, &str)] = &[
    ("A1", include_str!("../../../data/families/A1.txt")),
    ("A2", include_str!("../../../data/families/A2.txt")),
    ("A3", include_str!("../../../data/families/A3.txt")),
    ("B2", include_str!("../../../data/families/B2.txt")),
    ("B3", include_str!("../../../data/families/B3.txt")),
    ("G2", include_str!("../../../data/families/G2.txt")),
];

const SPRINGER_FILES: &[(&str, &str)] = &[
    ("B2", include_str!("../../../data/springer/B2.txt")),
    ("B3", include_str!("../../../data/springer/B3.txt")),
    ("G2", include_str!("../../../data/springer/G2.txt")),
];

/// Lowercase hex SHA-256 of a canonical body.
pub fn checksum_of(body: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(body.as_bytes());
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{:02x}", b))
        .collect()
}

/// Canonicalization: right-trim every line, require the last nonempty line
/// to declare the checksum, and hash the remaining lines joined by
/// newlines with trailing blank lines dropped.
fn parse_and_check(name: String, content: &str) -> Result<DataFile> {
    let lines: Vec<&str> = content.split('\n').map(str::trim_end).collect();
    let last = lines
        .iter()
        .rposition(|l| !l.is_empty())
        .ok_or_else(|| Error::Data(format!("{}: file is empty", name)))?;
    let declared = lines[last]
        .strip_prefix("checksum =")
        .map(str::trim)
        .ok_or_else(|| Error::Data(format!("{}: missing checksum line", name)))?;
    let body = lines[..last].join("\n").trim_end().to_string();
    let actual = checksum_of(&body);
    if actual != declared {
        return Err(Error::Data(format!(
            "{}: checksum mismatch (declared {}, computed {})",
            name, declared, actual
        )));
    }
    Ok(DataFile { name, checksum: actual, body })
}

fn load(kind: &str, typename: &str, embedded: &[(&str, &str)]) -> Result<DataFile> {
    let name = format!("{}/{}.txt", kind, typename);
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        let path = std::path::Path::new(&dir).join(&name);
        let content = std::fs::read_to_string(&path)
            .map_err(|e| Error::Data(format!("cannot read {}: {}", path.display(), e)))?;
        return parse_and_check(name, &content);
    }
    let content = embedded
        .iter()
        .find(|(t, _)| *t == typename)
        .map(|(_, c)| *c)
        .ok_or_else(|| Error::Data(format!("no embedded data file {}", name)))?;
    parse_and_check(name, content)
}

pub fn family_file(typename: &str) -> Result<DataFile> {
    load("families", typename, FAMILY_FILES)
}

pub fn springer_file(typename: &str) -> Result<DataFile> {
    load("springer", typename, SPRINGER_FILES)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_files_validate() {
        for (t, _) in FAMILY_FILES {
            family_file(t).unwrap();
        }
        for (t, _) in SPRINGER_FILES {
            springer_file(t).unwrap();
        }
    }

    #[test]
    fn tampering_is_detected() {
        let content = FAMILY_FILES[0].1;
        let doctored = content.replace("gamma = 1", "gamma = Z2");
        assert!(matches!(
            parse_and_check("families/A1.txt".into(), &doctored),
            Err(Error::Data(_))
        ));
    }

    #[test]
    fn missing_checksum_line_is_rejected() {
        assert!(matches!(
            parse_and_check("x".into(), "[family 1]\ngamma = 1\n"),
            Err(Error::Data(_))
        ));
        assert!(matches!(parse_and_check("x".into(), "\n\n"), Err(Error::Data(_))));
    }

    #[test]
    fn unknown_type_has_no_file() {
        assert!(matches!(family_file("F4"), Err(Error::Data(_))));
        assert!(matches!(springer_file("A2"), Err(Error::Data(_))));
    }
}
