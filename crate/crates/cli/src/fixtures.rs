//! Fixture text, either embedded in the core crate or read from a directory.

use std::fs;
use std::path::Path;

use lgp_core::fixtures::{APPENDIX_5_2, CENTRALIZERS, CURVE_POINTS};

/// Environment variable naming a fixture directory.
pub const FIXTURES_ENV: &str = "LGP_FIXTURES";

#[derive(Clone, Debug)]
pub struct Fixtures {
    /// `embedded` or the directory the files came from.
    pub source: String,
    pub appendix_5_2: String,
    pub centralizers: String,
    pub curve_points: String,
}

impl Fixtures {
    pub fn embedded() -> Self {
        Self {
            source: "embedded".into(),
            appendix_5_2: APPENDIX_5_2.into(),
            centralizers: CENTRALIZERS.into(),
            curve_points: CURVE_POINTS.into(),
        }
    }

    /// Reads each known file from `dir`; files absent there fall back to the embedded copy.
    pub fn from_dir(dir: &Path) -> Result<Self, String> {
        if !dir.is_dir() {
            return Err(format!("fixture directory {} does not exist", dir.display()));
        }
        let read = |name: &str, fallback: &str| -> Result<String, String> {
            let path = dir.join(name);
            if path.exists() {
                fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))
            } else {
                Ok(fallback.to_string())
            }
        };
        Ok(Self {
            source: dir.display().to_string(),
            appendix_5_2: read("appendix_5_2.txt", APPENDIX_5_2)?,
            centralizers: read("centralizers.txt", CENTRALIZERS)?,
            curve_points: read("curve_points.txt", CURVE_POINTS)?,
        })
    }

    pub fn resolve(dir: Option<&Path>) -> Result<Self, String> {
        match dir {
            Some(d) => Self::from_dir(d),
            None => Ok(Self::embedded()),
        }
    }
}
