//! Labelled diagram collections described by a `manifest.toml`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::diagram::{parse_pd, Diagram, DiagramClass};
use crate::error::{Error, Result};

pub const CORPUS_ENV: &str = "PSYKNOT_CORPUS";

#[derive(Deserialize)]
struct Manifest {
    #[serde(default)]
    entry: Vec<ManifestEntry>,
}

#[derive(Deserialize)]
struct ManifestEntry {
    label: String,
    file: String,
    class: String,
    #[serde(default)]
    source: String,
    #[serde(default)]
    orientation: String,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: String,
    pub file: String,
    pub class: DiagramClass,
    pub source: String,
    pub orientation: String,
    /// `None` when the file is listed but absent.
    pub diagram: Option<Diagram>,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub dir: PathBuf,
    pub entries: Vec<CorpusEntry>,
}

fn parse_class(s: &str) -> Result<DiagramClass> {
    match s {
        "classical" => Ok(DiagramClass::Classical),
        "singular" => Ok(DiagramClass::Singular),
        "pseudo" => Ok(DiagramClass::Pseudo),
        _ => Err(Error::Corpus(format!("unknown class `{s}`"))),
    }
}

impl Corpus {
    pub fn load(dir: impl AsRef<Path>) -> Result<Corpus> {
        let dir = dir.as_ref().to_path_buf();
        let path = dir.join("manifest.toml");
        let text = fs::read_to_string(&path)
            .map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
        let manifest: Manifest =
            toml::from_str(&text).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
        let mut entries: Vec<CorpusEntry> = Vec::new();
        for m in manifest.entry {
            if entries.iter().any(|e| e.label == m.label) {
                return Err(Error::Corpus(format!("duplicate label `{}`", m.label)));
            }
            let class = parse_class(&m.class)?;
            let file = dir.join(&m.file);
            let diagram = match fs::read_to_string(&file) {
                Ok(text) => {
                    let d = parse_pd(&text)
                        .map_err(|e| Error::Corpus(format!("{}: {e}", file.display())))?;
                    if d.class() != class {
                        return Err(Error::Corpus(format!(
                            "{}: manifest says {}, diagram is {}",
                            m.file,
                            class,
                            d.class()
                        )));
                    }
                    Some(d)
                }
                Err(_) => None,
            };
            entries.push(CorpusEntry {
                label: m.label,
                file: m.file,
                class,
                source: m.source,
                orientation: m.orientation,
                diagram,
            });
        }
        Ok(Corpus { dir, entries })
    }

    /// The corpus shipped with the crate.
    pub fn builtin() -> Result<Corpus> {
        Corpus::load(builtin_corpus_dir())
    }

    /// `$PSYKNOT_CORPUS` if set, else the shipped corpus.
    pub fn default_dir() -> PathBuf {
        std::env::var_os(CORPUS_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(builtin_corpus_dir)
    }

    pub fn get(&self, label: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn diagram(&self, label: &str) -> Result<&Diagram> {
        self.get(label)
            .and_then(|e| e.diagram.as_ref())
            .ok_or_else(|| Error::Corpus(format!("no diagram `{label}` in corpus")))
    }

    /// Entries whose file is present.
    pub fn diagrams(&self) -> impl Iterator<Item = (&str, &Diagram)> {
        self.entries
            .iter()
            .filter_map(|e| e.diagram.as_ref().map(|d| (e.label.as_str(), d)))
    }
}

pub fn builtin_corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Directory of the shipped `.psy` tables.
pub fn builtin_psy_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("psy")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads() {
        let c = Corpus::builtin().unwrap();
        assert!(c.entries.len() >= 10);
        assert!(c.entries.iter().all(|e| e.diagram.is_some()));
        assert_eq!(c.diagram("0_1").unwrap().component_count(), 1);
    }

    #[test]
    fn missing_files_are_gaps() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(
            dir.path().join("manifest.toml"),
            "[[entry]]\nlabel = \"x\"\nfile = \"x.pd\"\nclass = \"classical\"\n",
        )
        .unwrap();
        let c = Corpus::load(dir.path()).unwrap();
        assert!(c.entries[0].diagram.is_none());
        fs::write(dir.path().join("x.pd"), "S 1 2 1 2\n").unwrap();
        assert!(Corpus::load(dir.path()).is_err());
    }
}
