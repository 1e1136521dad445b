//! OEIS b-file reader: one `index value` pair per line, `#` comments and
//! blank lines ignored, indices strictly increasing.

use std::collections::BTreeMap;

use scatalan::Natural;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: expected `index value`, got `{text}`")]
    Malformed { line: usize, text: String },

    #[error("line {line}: index {index} does not increase on {previous}")]
    NonMonotone {
        line: usize,
        index: i64,
        previous: i64,
    },
}

/// A parsed b-file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BFile {
    /// A-number taken from the first comment that mentions one, if any.
    pub id: Option<String>,
    pub entries: BTreeMap<i64, Natural>,
}

impl BFile {
    pub fn first_index(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Values at consecutive indices from the first one, stopping at the first gap.
    pub fn prefix(&self) -> Vec<&Natural> {
        let Some(start) = self.first_index() else {
            return Vec::new();
        };
        self.entries
            .iter()
            .enumerate()
            .take_while(|(i, (&idx, _))| idx == start + *i as i64)
            .map(|(_, (_, v))| v)
            .collect()
    }
}

fn a_number(comment: &str) -> Option<String> {
    comment
        .split(|c: char| !c.is_ascii_alphanumeric())
        .find(|w| w.len() == 7 && w.starts_with('A') && w[1..].bytes().all(|b| b.is_ascii_digit()))
        .map(str::to_string)
}

pub fn parse_bfile(text: &str) -> Result<BFile, BFileError> {
    let mut out = BFile::default();
    let mut previous: Option<i64> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if out.id.is_none() {
                out.id = a_number(comment);
            }
            continue;
        }
        let malformed = || BFileError::Malformed {
            line,
            text: trimmed.to_string(),
        };
        let mut fields = trimmed.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let index: i64 = idx.parse().map_err(|_| malformed())?;
        let value: Natural = val.parse().map_err(|_| malformed())?;
        if let Some(prev) = previous {
            if index <= prev {
                return Err(BFileError::NonMonotone {
                    line,
                    index,
                    previous: prev,
                });
            }
        }
        previous = Some(index);
        out.entries.insert(index, value);
    }
    Ok(out)
}

/// Writes `values` as a b-file starting at `offset`.
pub fn write_bfile(id: &str, offset: i64, values: &[Natural]) -> String {
    let mut out = format!("# {id}\n");
    for (i, v) in values.iter().enumerate() {
        out.push_str(&format!("{} {v}\n", offset + i as i64));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs() {
        let b = parse_bfile("0 1\n1 1\n2 1").unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.entries[&2], Natural::from(1u32));
    }

    #[test]
    fn skips_comments_and_blanks() {
        let b = parse_bfile("# A008287 quadrinomials\n\n0 1\n").unwrap();
        assert_eq!(b.id.as_deref(), Some("A008287"));
        assert_eq!(
            b.entries.into_iter().collect::<Vec<_>>(),
            vec![(0, Natural::from(1u32))]
        );
    }

    #[test]
    fn rejects_repeated_index() {
        assert_eq!(
            parse_bfile("0 1\n0 2"),
            Err(BFileError::NonMonotone {
                line: 2,
                index: 0,
                previous: 0
            })
        );
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            parse_bfile("0 1\n1"),
            Err(BFileError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("0 -4"),
            Err(BFileError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("0 1 2"),
            Err(BFileError::Malformed { .. })
        ));
    }

    #[test]
    fn large_values_survive() {
        let big = "123456789012345678901234567890";
        let b = parse_bfile(&format!("5 {big}")).unwrap();
        assert_eq!(b.entries[&5].to_string(), big);
        assert_eq!(b.first_index(), Some(5));
    }

    #[test]
    fn prefix_stops_at_gap() {
        let b = parse_bfile("3 1\n4 2\n6 3").unwrap();
        assert_eq!(b.prefix().len(), 2);
    }

    #[test]
    fn written_files_parse_back() {
        let vals: Vec<Natural> = [1u32, 4, 10].into_iter().map(Natural::from).collect();
        let b = parse_bfile(&write_bfile("A000000", 0, &vals)).unwrap();
        assert_eq!(b.entries.values().cloned().collect::<Vec<_>>(), vals);
    }
}
