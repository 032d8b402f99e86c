//! Reference data shipped with the crate and the small text format it uses.
//!
//! A fixture file is a sequence of blocks. Each block starts with a `[name]`
//! header and holds three kinds of lines: permutations in cycle notation
//! (starting with `(`), `key = value` fields, and plain comma-separated
//! records. Lines starting with `#` and blank lines are ignored.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::Perm;

pub const APPENDIX_5_2: &str = include_str!("../fixtures/appendix_5_2.txt");
pub const CENTRALIZERS: &str = include_str!("../fixtures/centralizers.txt");
pub const CURVE_POINTS: &str = include_str!("../fixtures/curve_points.txt");
pub const FACTOR_DEGREES: &str = include_str!("../fixtures/factor_degrees.txt");

/// File names of the embedded fixtures, paired with their contents.
pub const EMBEDDED: [(&str, &str); 4] = [
    ("appendix_5_2.txt", APPENDIX_5_2),
    ("centralizers.txt", CENTRALIZERS),
    ("curve_points.txt", CURVE_POINTS),
    ("factor_degrees.txt", FACTOR_DEGREES),
];

pub fn embedded(file_name: &str) -> Option<&'static str> {
    EMBEDDED
        .iter()
        .find(|(n, _)| *n == file_name)
        .map(|(_, text)| *text)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub permutations: Vec<String>,
    pub fields: Vec<(String, String)>,
    pub records: Vec<String>,
}

impl Block {
    pub fn field(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn required(&self, key: &str) -> Result<&str> {
        self.field(key).ok_or_else(|| {
            Error::InvalidArgument(format!("block [{}] lacks field `{key}`", self.name))
        })
    }

    pub fn parse_permutations(&self, degree: usize) -> Result<Vec<Perm>> {
        self.permutations
            .iter()
            .map(|s| Perm::parse(s, degree))
            .collect()
    }

    /// Degree from the `degree` field, else the largest point mentioned.
    pub fn degree(&self) -> Result<usize> {
        if let Some(d) = self.field("degree") {
            return d
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad degree `{d}`")));
        }
        let mut max = 0usize;
        for line in &self.permutations {
            for tok in line.split(|c: char| !c.is_ascii_digit()) {
                if let Ok(v) = tok.parse::<usize>() {
                    max = max.max(v);
                }
            }
        }
        Ok(max)
    }
}

pub fn parse_blocks(text: &str) -> Result<Vec<Block>> {
    let mut blocks: Vec<Block> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            blocks.push(Block {
                name: name.trim().to_string(),
                ..Block::default()
            });
            continue;
        }
        let Some(block) = blocks.last_mut() else {
            return Err(Error::Parse {
                offset: lineno + 1,
                message: "content before the first [block] header".into(),
            });
        };
        if line.starts_with('(') {
            block.permutations.push(line.to_string());
        } else if let Some((k, v)) = line.split_once('=') {
            block.fields.push((k.trim().to_string(), v.trim().to_string()));
        } else {
            block.records.push(line.to_string());
        }
    }
    Ok(blocks)
}

pub fn find_block<'a>(blocks: &'a [Block], name: &str) -> Result<&'a Block> {
    blocks
        .iter()
        .find(|b| b.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("no fixture block [{name}]")))
}

/// Parses `{2,3,5}`.
pub fn parse_index_set(s: &str) -> Result<BTreeSet<usize>> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Error::InvalidArgument(format!("expected {{...}}, got `{s}`")))?;
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::InvalidArgument(format!("bad set element `{t}`")))
        })
        .collect()
}

pub fn format_index_set(set: &BTreeSet<usize>) -> String {
    let items: Vec<String> = set.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}
