//! Persisted, independently re-verified (graph, coloring) pairs.
//!
//! A certificate names its graph by family parameters plus content hash;
//! loading one regenerates the graph, checks the hash, and re-runs the
//! interval verifier before the coloring is used anywhere. The store is
//! content-addressed over (graph hash, t, colors), so adding the same
//! certificate twice is a no-op and metadata differences don't fork ids.

use crate::coloring::{verify_interval, ColoringError, EdgeColoring};
use crate::construct::DoublingTrace;
use crate::graph::{Family, Graph, GraphError};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};
use thiserror::Error;

/// Version tag written into every certificate file.
pub const CERT_FORMAT: &str = "ic-cert/1";

/// Identifies the verifier semantics a certificate was sealed under.
pub const VERIFIER_VERSION: &str = "ic-core/0.1 interval-verifier/1";

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("certificate family must identify a complete graph or hypercube")]
    UnreproducibleFamily,
    #[error("stored graph hash does not match the regenerated graph")]
    HashMismatch,
    #[error("certificate coloring failed re-verification: {0}")]
    ReverifyFailed(String),
    #[error("target t={t} is infeasible for this graph")]
    TargetInfeasible { t: u32 },
    #[error("search budget exhausted before t={t} was decided")]
    BudgetExhausted { t: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("unsupported certificate format `{0}`, expected `{CERT_FORMAT}`")]
    UnsupportedFormat(String),
    #[error("malformed certificate file: {0}")]
    Malformed(String),
    #[error("certificate store io error: {0}")]
    Io(#[from] std::io::Error),
}

/// How a certificate's coloring came to exist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Construction { trace: Vec<DoublingTrace> },
    Oracle { nodes: u64, elapsed_ms: u64 },
    Imported,
}

impl Provenance {
    pub fn kind(&self) -> &'static str {
        match self {
            Provenance::Construction { .. } => "construction",
            Provenance::Oracle { .. } => "oracle",
            Provenance::Imported => "imported",
        }
    }
}

/// A sealed (graph, coloring) pair with provenance metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub format: String,
    pub family: Family,
    pub graph_hash: String,
    pub t: u32,
    pub colors: Vec<u32>,
    pub provenance: Provenance,
    pub created_at_unix: u64,
    pub verifier_version: String,
}

impl Certificate {
    /// Wraps a verified coloring of a generator-built graph. Re-runs the
    /// verifier before sealing; an invalid coloring never becomes a
    /// certificate.
    pub fn seal(
        graph: &Graph,
        coloring: &EdgeColoring,
        provenance: Provenance,
    ) -> Result<Self, CertificateError> {
        if matches!(graph.family(), Family::Generic) {
            return Err(CertificateError::UnreproducibleFamily);
        }
        let verdict = verify_interval(graph, coloring)?;
        if !verdict.is_ok() {
            return Err(CertificateError::ReverifyFailed(verdict.to_string()));
        }
        let created_at_unix = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .unwrap_or_default()
            .as_secs();
        Ok(Certificate {
            format: CERT_FORMAT.to_string(),
            family: graph.family(),
            graph_hash: graph.content_hash(),
            t: coloring.t(),
            colors: coloring.colors().to_vec(),
            provenance,
            created_at_unix,
            verifier_version: VERIFIER_VERSION.to_string(),
        })
    }

    /// Content address over the payload (graph hash, t, colors); the
    /// provenance and timestamp are metadata and do not change identity.
    pub fn content_id(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(b"ic-cert-id/1");
        hasher.update(self.graph_hash.as_bytes());
        hasher.update(self.t.to_le_bytes());
        for &c in &self.colors {
            hasher.update(c.to_le_bytes());
        }
        let digest = hasher.finalize();
        let mut out = String::with_capacity(64);
        for byte in digest {
            out.push_str(&format!("{byte:02x}"));
        }
        out
    }

    /// Regenerates the graph from the family tag, checks the stored hash
    /// against it, and re-runs the interval verifier. Every load path
    /// goes through here.
    pub fn reverify(&self) -> Result<(Graph, EdgeColoring), CertificateError> {
        let graph = match self.family {
            Family::Complete { vertices } => Graph::complete(vertices)?,
            Family::Hypercube { dimension } => Graph::hypercube(dimension)?,
            Family::Generic => return Err(CertificateError::UnreproducibleFamily),
        };
        if graph.content_hash() != self.graph_hash {
            return Err(CertificateError::HashMismatch);
        }
        let coloring = EdgeColoring::new(&graph, self.t, self.colors.clone())?;
        let verdict = verify_interval(&graph, &coloring)?;
        if !verdict.is_ok() {
            return Err(CertificateError::ReverifyFailed(verdict.to_string()));
        }
        Ok((graph, coloring))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialization cannot fail")
    }

    /// Parses a certificate file. Does not verify; call [`reverify`]
    /// before using the coloring.
    ///
    /// [`reverify`]: Certificate::reverify
    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        let cert: Certificate =
            serde_json::from_str(text).map_err(|e| CertificateError::Malformed(e.to_string()))?;
        if cert.format != CERT_FORMAT {
            return Err(CertificateError::UnsupportedFormat(cert.format));
        }
        Ok(cert)
    }
}

/// A certificate together with how loading it went.
#[derive(Debug)]
pub struct QuarantineRecord {
    pub path: PathBuf,
    pub reason: String,
}

/// Directory-backed certificate store. Files are named by content id;
/// certificates that fail re-verification on load are moved into a
/// `quarantine/` subdirectory and reported, never used.
#[derive(Debug, Clone)]
pub struct CertificateStore {
    dir: PathBuf,
}

impl CertificateStore {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self, CertificateError> {
        let dir = dir.as_ref().to_path_buf();
        std::fs::create_dir_all(&dir)?;
        Ok(CertificateStore { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn quarantine_dir(&self) -> PathBuf {
        self.dir.join("quarantine")
    }

    /// Re-verifies and writes a certificate. Returns the path and whether
    /// a new file was created (`false` means the same payload was already
    /// stored).
    pub fn add(&self, cert: &Certificate) -> Result<(PathBuf, bool), CertificateError> {
        cert.reverify()?;
        let path = self.dir.join(format!("{}.json", cert.content_id()));
        if path.exists() {
            return Ok((path, false));
        }
        std::fs::write(&path, cert.to_json())?;
        Ok((path, true))
    }

    /// Loads every certificate in the store, re-verifying each. Invalid
    /// files are moved to quarantine and returned separately. Output is
    /// sorted by content id for deterministic listings.
    pub fn list(&self) -> Result<(Vec<Certificate>, Vec<QuarantineRecord>), CertificateError> {
        let mut valid = Vec::new();
        let mut quarantined = Vec::new();
        let mut paths: Vec<PathBuf> = std::fs::read_dir(&self.dir)?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "json"))
            .collect();
        paths.sort();
        for path in paths {
            let outcome = std::fs::read_to_string(&path)
                .map_err(CertificateError::from)
                .and_then(|text| Certificate::from_json(&text))
                .and_then(|cert| cert.reverify().map(|_| cert));
            match outcome {
                Ok(cert) => valid.push(cert),
                Err(err) => {
                    let reason = err.to_string();
                    let qdir = self.quarantine_dir();
                    std::fs::create_dir_all(&qdir)?;
                    let target = qdir.join(path.file_name().expect("listed file has a name"));
                    std::fs::rename(&path, &target)?;
                    quarantined.push(QuarantineRecord {
                        path: target,
                        reason,
                    });
                }
            }
        }
        Ok((valid, quarantined))
    }

    /// The best stored base for a complete tower with odd part `p`: a
    /// verified certificate of K_{2p}, preferring the largest palette and
    /// breaking ties by content id.
    pub fn find_complete_base(&self, odd_part: usize) -> Result<Option<Certificate>, CertificateError> {
        let (valid, _) = self.list()?;
        let mut best: Option<Certificate> = None;
        for cert in valid {
            if cert.family != (Family::Complete { vertices: 2 * odd_part }) {
                continue;
            }
            let better = match &best {
                None => true,
                Some(current) => {
                    cert.t > current.t || (cert.t == current.t && cert.content_id() < current.content_id())
                }
            };
            if better {
                best = Some(cert);
            }
        }
        Ok(best)
    }
}
