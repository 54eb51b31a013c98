//! Persistent repository of derived target views: one JSON file per view
//! plus an index, so views stay available for later analysis passes.
//!
//! Writes take an advisory lock file (single-writer discipline); readers
//! never lock.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::normalize::normalize;
use crate::view::{load_view, TargetView};

const INDEX_FILE: &str = "index.json";
const VIEWS_DIR: &str = "views";
const LOCK_FILE: &str = ".lock";

/// One line of the repository index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub name: String,
    pub concern: String,
    pub graph_hash: String,
    pub derived_at: String,
    pub file: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
struct Index {
    views: Vec<IndexEntry>,
}

#[derive(Debug, Error)]
pub enum RepoError {
    #[error("view `{name}` already stored (pass overwrite to replace it)")]
    NameCollision { name: String },
    #[error("view `{name}` not found in repository")]
    NotFound { name: String },
    #[error("view name `{name}` normalizes to an empty file name")]
    UnusableName { name: String },
    #[error("repository is locked by another writer ({path})")]
    Locked { path: PathBuf },
    #[error("corrupt repository file {path}: {message}")]
    Corrupt { path: PathBuf, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Removes the lock file when the store operation ends, error or not.
struct LockGuard {
    path: PathBuf,
}

impl Drop for LockGuard {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.path);
    }
}

/// A view repository rooted at a directory.
#[derive(Debug, Clone)]
pub struct ViewRepository {
    root: PathBuf,
}

impl ViewRepository {
    pub fn open(root: impl Into<PathBuf>) -> Self {
        ViewRepository { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn index_path(&self) -> PathBuf {
        self.root.join(INDEX_FILE)
    }

    fn view_path(&self, file: &str) -> PathBuf {
        self.root.join(VIEWS_DIR).join(file)
    }

    fn lock(&self) -> Result<LockGuard, RepoError> {
        let path = self.root.join(LOCK_FILE);
        match fs::OpenOptions::new().write(true).create_new(true).open(&path) {
            Ok(_) => Ok(LockGuard { path }),
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => {
                Err(RepoError::Locked { path })
            }
            Err(e) => Err(e.into()),
        }
    }

    fn read_index(&self) -> Result<Index, RepoError> {
        let path = self.index_path();
        if !path.exists() {
            return Ok(Index::default());
        }
        let text = fs::read_to_string(&path)?;
        serde_json::from_str(&text).map_err(|e| RepoError::Corrupt {
            path,
            message: e.to_string(),
        })
    }

    fn write_index(&self, index: &Index) -> Result<(), RepoError> {
        let mut index = index.clone();
        index.views.sort_by(|a, b| a.name.cmp(&b.name));
        let mut text = serde_json::to_string_pretty(&index).expect("index serializes");
        text.push('\n');
        fs::write(self.index_path(), text)?;
        Ok(())
    }

    /// Stores a view under its name and updates the index. Returns the
    /// stored name. Fails on a name collision unless `overwrite` is set.
    pub fn store(&self, view: &TargetView, overwrite: bool) -> Result<String, RepoError> {
        let file_stem = normalize(&view.name);
        if file_stem.is_empty() {
            return Err(RepoError::UnusableName {
                name: view.name.clone(),
            });
        }
        fs::create_dir_all(self.root.join(VIEWS_DIR))?;
        let _guard = self.lock()?;

        let mut index = self.read_index()?;
        let existing = index.views.iter().position(|e| e.name == view.name);
        if existing.is_some() && !overwrite {
            return Err(RepoError::NameCollision {
                name: view.name.clone(),
            });
        }

        let file = format!("{file_stem}.json");
        fs::write(self.view_path(&file), view.to_json())?;

        let entry = IndexEntry {
            name: view.name.clone(),
            concern: view.spec.concern.clone(),
            graph_hash: view.graph.graph_hash.clone(),
            derived_at: view.derived_at.clone(),
            file,
        };
        match existing {
            Some(i) => index.views[i] = entry,
            None => index.views.push(entry),
        }
        self.write_index(&index)?;
        Ok(view.name.clone())
    }

    /// Loads a stored view by name.
    pub fn load(&self, name: &str) -> Result<TargetView, RepoError> {
        let index = self.read_index()?;
        let entry = index
            .views
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| RepoError::NotFound {
                name: name.to_string(),
            })?;
        let path = self.view_path(&entry.file);
        let text = fs::read_to_string(&path)?;
        load_view(&text).map_err(|e| RepoError::Corrupt {
            path,
            message: e.to_string(),
        })
    }

    /// The index, sorted by view name. An absent repository lists empty.
    pub fn list(&self) -> Result<Vec<IndexEntry>, RepoError> {
        let mut views = self.read_index()?.views;
        views.sort_by(|a, b| a.name.cmp(&b.name));
        Ok(views)
    }
}
