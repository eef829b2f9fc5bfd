//! Lists of group descriptors to run the theorem checks over.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::family::CatalogSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub spec: CatalogSpec,
    /// Per-entry order cap, applied on top of the global one.
    pub max_order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSource {
    BuiltIn,
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub source: CatalogSource,
}

/// Products that exercise hypotheses the plain families miss: non-nilpotent
/// groups with centers, p-groups without abelian maximal subgroups, and
/// groups with trivial Fitting subgroup.
const CURATED_PRODUCTS: &[&str] = &[
    "product(symmetric:3,cyclic:2)",
    "product(symmetric:3,cyclic:3)",
    "product(dihedral:4,cyclic:2)",
    "product(dicyclic:2,cyclic:2)",
    "product(dihedral:4,cyclic:4)",
    "product(dicyclic:2,cyclic:4)",
    "product(dihedral:4,elementary_abelian:2:2)",
    "product(dihedral:4,dihedral:4)",
    "product(dihedral:4,dicyclic:2)",
    "product(dicyclic:2,dicyclic:2)",
    "product(dihedral:8,cyclic:2)",
    "product(symmetric:3,symmetric:3)",
    "product(symmetric:3,dihedral:4)",
    "product(alternating:4,cyclic:2)",
    "product(alternating:4,cyclic:3)",
    "product(symmetric:4,cyclic:2)",
    "product(dicyclic:3,cyclic:2)",
    "product(heisenberg:3,cyclic:3)",
    "product(extraspecial_exp_p2:3,cyclic:3)",
    "product(heisenberg:3,cyclic:2)",
    "product(heisenberg:3,symmetric:3)",
    "product(alternating:5,cyclic:2)",
    "product(dihedral:5,cyclic:3)",
];

impl CatalogSpec {
    /// Group order computed from the descriptor alone; `None` for files.
    pub fn expected_order(&self) -> Option<usize> {
        let factorial = |n: usize| (1..=n).try_fold(1usize, |a, k| a.checked_mul(k));
        match self {
            CatalogSpec::Cyclic(n) => Some(*n),
            CatalogSpec::Dihedral(n) => n.checked_mul(2),
            CatalogSpec::Dicyclic(n) => n.checked_mul(4),
            CatalogSpec::Symmetric(n) => factorial(*n),
            CatalogSpec::Alternating(n) => factorial(*n).map(|f| f.div_ceil(2)),
            CatalogSpec::ElementaryAbelian(p, k) => p.checked_pow(*k),
            CatalogSpec::Heisenberg(p) | CatalogSpec::ExtraspecialExpP2(p) => p.checked_pow(3),
            CatalogSpec::Corpus(name) if name == "sl2_5" => Some(120),
            CatalogSpec::Corpus(_) | CatalogSpec::File(_) => None,
            CatalogSpec::Product(a, b) => a.expected_order()?.checked_mul(b.expected_order()?),
        }
    }
}

impl Catalog {
    pub fn from_entries(entries: Vec<CatalogEntry>, source: CatalogSource) -> Result<Catalog> {
        let mut seen = HashSet::new();
        for e in &entries {
            if !seen.insert(e.spec.to_string()) {
                return Err(Error::DuplicateEntry(e.spec.to_string()));
            }
        }
        Ok(Catalog { entries, source })
    }

    /// One descriptor per line, optionally followed by `max-order=<N>`.
    pub fn parse(text: &str, source: CatalogSource) -> Result<Catalog> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let spec_text = parts.next().unwrap_or_default();
            let spec = CatalogSpec::parse(spec_text).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
            let mut max_order = None;
            for extra in parts {
                let cap = extra
                    .strip_prefix("max-order=")
                    .and_then(|v| v.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse {
                        line: i + 1,
                        message: format!("unexpected `{extra}` (expected max-order=<N>)"),
                    })?;
                max_order = Some(cap);
            }
            entries.push(CatalogEntry { spec, max_order });
        }
        Catalog::from_entries(entries, source)
    }

    pub fn load(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Catalog::parse(&text, CatalogSource::File(path.to_path_buf()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn specs(&self) -> impl Iterator<Item = &CatalogSpec> {
        self.entries.iter().map(|e| &e.spec)
    }

    pub fn contains(&self, spec: &str) -> bool {
        self.specs().any(|s| s.to_string() == spec)
    }
}

/// Built-in catalog of every family instance with order at most
/// `max_order`.
pub fn default_catalog(max_order: usize) -> Catalog {
    let mut specs: Vec<CatalogSpec> = Vec::new();
    specs.extend((1..=max_order).map(CatalogSpec::Cyclic));
    specs.extend((2..=max_order / 2).map(CatalogSpec::Dihedral));
    specs.extend((2..=max_order / 4).map(CatalogSpec::Dicyclic));
    for p in (2..=max_order).filter(|&p| is_prime(p)) {
        let mut k = 2;
        while p.checked_pow(k).is_some_and(|o| o <= max_order) {
            specs.push(CatalogSpec::ElementaryAbelian(p, k));
            k += 1;
        }
    }
    specs.extend((3..=5).map(CatalogSpec::Symmetric));
    specs.extend((4..=5).map(CatalogSpec::Alternating));
    for p in [3, 5, 7] {
        specs.push(CatalogSpec::Heisenberg(p));
        specs.push(CatalogSpec::ExtraspecialExpP2(p));
    }
    specs.extend(
        CURATED_PRODUCTS
            .iter()
            .map(|s| CatalogSpec::parse(s).expect("curated spec parses")),
    );
    specs.push(CatalogSpec::Corpus("sl2_5".into()));

    let entries = specs
        .into_iter()
        .filter(|s| s.expected_order().is_some_and(|o| o <= max_order))
        .map(|spec| CatalogEntry {
            spec,
            max_order: None,
        })
        .collect();
    Catalog::from_entries(entries, CatalogSource::BuiltIn).expect("built-in catalog has no duplicates")
}
