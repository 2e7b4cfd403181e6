//! Named real forms, stored as JSON Lines with 1-based Bourbaki indices.
//!
//! ```text
//! {"name": "su(2,1)", "series": "A", "rank": 2, "black": [], "arrows": [[1, 2]]}
//! ```
//!
//! Every entry is validated when the catalog is loaded.

use std::path::Path;

use cartan_pi0_core::realform::{derive_sigma, SatakeDatum, SigmaAction};
use cartan_pi0_core::rootsys::{RootSystem, RootType, Series};
use serde::{Deserialize, Serialize};

use crate::error::AppError;

const BUILTIN: &str = include_str!("../data/real_forms.jsonl");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<String>,
    pub series: String,
    pub rank: usize,
    #[serde(default)]
    pub black: Vec<usize>,
    #[serde(default)]
    pub arrows: Vec<[usize; 2]>,
}

impl CatalogEntry {
    pub fn root_type(&self) -> Result<RootType, AppError> {
        parse_root_type(&self.series, self.rank)
    }

    pub fn datum(&self) -> Result<SatakeDatum, AppError> {
        datum_from_one_based(self.root_type()?, &self.black, &self.arrows)
    }

    /// Root system and validated conjugation.
    pub fn instantiate(&self) -> Result<(RootSystem, SigmaAction), AppError> {
        let rs = RootSystem::new(self.root_type()?);
        let sa = derive_sigma(&self.datum()?, &rs)?;
        Ok((rs, sa))
    }

    pub fn matches(&self, name: &str) -> bool {
        self.name == name || self.aliases.iter().any(|a| a == name)
    }

    /// One-line summary such as `su(2,1)  A2  black=[]  arrows=[1<->2]`.
    pub fn summary(&self) -> String {
        let arrows: Vec<String> = self.arrows.iter().map(|[a, b]| format!("{}<->{}", a, b)).collect();
        format!(
            "{:<22} {}{:<3} black={:?} arrows=[{}]",
            self.name,
            self.series,
            self.rank,
            self.black,
            arrows.join(",")
        )
    }
}

pub fn parse_root_type(series: &str, rank: usize) -> Result<RootType, AppError> {
    let mut chars = series.chars();
    let (Some(c), None) = (chars.next(), chars.next()) else {
        return Err(AppError::Invalid(format!("series must be one letter A-G, got {:?}", series)));
    };
    let s = Series::from_letter(c).ok_or_else(|| AppError::Invalid(format!("unknown series {:?}", series)))?;
    Ok(RootType::new(s, rank)?)
}

pub fn datum_from_one_based(t: RootType, black: &[usize], arrows: &[[usize; 2]]) -> Result<SatakeDatum, AppError> {
    let zero = |i: usize| {
        if i == 0 || i > t.rank {
            Err(AppError::Invalid(format!("node index {} out of range 1..={}", i, t.rank)))
        } else {
            Ok(i - 1)
        }
    };
    let black: Vec<usize> = black.iter().map(|&i| zero(i)).collect::<Result<_, _>>()?;
    let pairs: Vec<(usize, usize)> =
        arrows.iter().map(|&[a, b]| Ok((zero(a)?, zero(b)?))).collect::<Result<_, AppError>>()?;
    Ok(SatakeDatum::new(t, &black, &pairs)?)
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Result<Self, AppError> {
        Self::parse(BUILTIN)
    }

    pub fn from_path(path: &Path) -> Result<Self, AppError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| AppError::Usage(format!("cannot read catalog {}: {}", path.display(), e)))?;
        Self::parse(&text)
    }

    /// Parses and validates every line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, AppError> {
        let mut entries: Vec<CatalogEntry> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let entry: CatalogEntry =
                serde_json::from_str(line).map_err(|e| AppError::Invalid(format!("catalog line {}: {}", n + 1, e)))?;
            entry
                .instantiate()
                .map_err(|e| AppError::Invalid(format!("catalog line {} ({}): {}", n + 1, entry.name, e)))?;
            if entries.iter().any(|x| x.matches(&entry.name) || entry.aliases.iter().any(|a| x.matches(a))) {
                return Err(AppError::Invalid(format!("catalog line {}: duplicate name {}", n + 1, entry.name)));
            }
            entries.push(entry);
        }
        Ok(Catalog { entries })
    }

    /// Entries in file order.
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup(&self, name: &str) -> Result<&CatalogEntry, AppError> {
        self.entries.iter().find(|e| e.matches(name)).ok_or_else(|| {
            let names: Vec<&str> = self.entries.iter().map(|e| e.name.as_str()).collect();
            AppError::Invalid(format!("unknown real form {:?}; available: {}", name, names.join(", ")))
        })
    }

    /// Entries sorted by (series, rank, name).
    pub fn listing(&self) -> Vec<&CatalogEntry> {
        let mut v: Vec<&CatalogEntry> = self.entries.iter().collect();
        v.sort_by(|a, b| (&a.series, a.rank, &a.name).cmp(&(&b.series, b.rank, &b.name)));
        v
    }
}
