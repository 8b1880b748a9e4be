//! JSON certificates: a tree, a burning sequence, the round labels it
//! induces and the bounds it is claimed to meet. [`verify`] recomputes
//! everything from the embedded tree and sequence alone.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{ceil_sqrt, prior_bounds, BoundTable};
use crate::burning::{validate_sequence, BurningSequence};
use crate::construct::{BoundCertificate, TraceEvent};
use crate::graph::{Tree, Vertex};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedTree {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl From<&Tree> for EmbeddedTree {
    fn from(t: &Tree) -> Self {
        Self {
            n: t.vertex_count(),
            edges: t.edges(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema_version: u32,
    pub tree: EmbeddedTree,
    pub n: u64,
    pub n2: u64,
    pub m: u64,
    pub target: u64,
    pub sequence: Vec<Vertex>,
    pub labels: BTreeMap<Vertex, usize>,
    pub bound_table: BoundTable,
    pub trace: Vec<TraceEvent>,
    pub tool_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CertificateDocument {
    pub fn new(cert: &BoundCertificate, seed: Option<u64>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tree: EmbeddedTree::from(&cert.tree),
            n: cert.n,
            n2: cert.n2,
            m: cert.m,
            target: cert.target,
            sequence: cert.sequence.sources().to_vec(),
            labels: cert.labeling.labels().iter().copied().enumerate().collect(),
            bound_table: prior_bounds(cert.n, cert.n2),
            trace: cert.trace.clone(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes") + "\n"
    }
}

/// Why a certificate was rejected. `kind` is a stable machine-readable tag.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind}: {detail}")]
pub struct VerifyFailure {
    pub kind: &'static str,
    pub detail: String,
}

fn fail<T>(kind: &'static str, detail: impl Into<String>) -> Result<T, VerifyFailure> {
    Err(VerifyFailure {
        kind,
        detail: detail.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verified {
    pub n: u64,
    pub n2: u64,
    pub length: usize,
    pub target: u64,
}

pub fn parse_and_verify(json: &str) -> Result<Verified, VerifyFailure> {
    match serde_json::from_str::<CertificateDocument>(json) {
        Ok(doc) => verify(&doc),
        Err(e) => fail("malformed document", e.to_string()),
    }
}

/// Rechecks a certificate from its tree and sequence only; stored labels,
/// parameters and bounds are compared against recomputed values.
pub fn verify(doc: &CertificateDocument) -> Result<Verified, VerifyFailure> {
    if doc.schema_version != SCHEMA_VERSION {
        return fail("unsupported schema", format!("version {}", doc.schema_version));
    }
    let tree = match Tree::new(doc.tree.n, doc.tree.edges.iter().copied()) {
        Ok(t) => t,
        Err(e) => return fail("invalid tree", e.to_string()),
    };
    let n = tree.vertex_count() as u64;
    let n2 = tree.degree2_census().0 as u64;
    if doc.n != n || doc.n2 != n2 {
        return fail(
            "parameter mismatch",
            format!("stated n = {}, n2 = {}; tree has n = {n}, n2 = {n2}", doc.n, doc.n2),
        );
    }
    let total = n + n2;
    if total < doc.m * (doc.m + 1) + 1 || doc.target != ceil_sqrt(total - doc.m) {
        return fail(
            "parameter mismatch",
            format!("m = {} and target = {} are inconsistent with n + n2 = {total}", doc.m, doc.target),
        );
    }
    if doc.bound_table != prior_bounds(n, n2) {
        return fail("bound table mismatch", "stored bounds differ from recomputed bounds");
    }
    let seq = match BurningSequence::new(doc.sequence.clone()) {
        Ok(s) => s,
        Err(e) => return fail("invalid sequence", e.to_string()),
    };
    if let Some(&v) = seq.sources().iter().find(|&&v| v >= doc.tree.n) {
        return fail("invalid sequence", format!("source {v} is not a vertex"));
    }
    let labeling = match validate_sequence(&tree, &seq) {
        Ok(l) => l,
        Err(e) => return fail("invalid sequence", e.to_string()),
    };
    let recomputed: BTreeMap<Vertex, usize> = labeling.labels().iter().copied().enumerate().collect();
    if recomputed != doc.labels {
        let first = recomputed
            .iter()
            .find(|&(v, r)| doc.labels.get(v) != Some(r))
            .map(|(v, r)| format!("vertex {v} burns in round {r}, stated {:?}", doc.labels.get(v)))
            .unwrap_or_else(|| "extra labels for non-vertices".into());
        return fail("labels mismatch", first);
    }
    if seq.len() as u64 > doc.target {
        return fail(
            "bound exceeded",
            format!("sequence length {} exceeds target {}", seq.len(), doc.target),
        );
    }
    Ok(Verified {
        n,
        n2,
        length: seq.len(),
        target: doc.target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::construct_general;
    use crate::graph::{gen_path, gen_random_tree};

    fn doc_for(t: &Tree) -> CertificateDocument {
        CertificateDocument::new(&construct_general(t).unwrap(), Some(3))
    }

    #[test]
    fn roundtrip_verifies() {
        for seed in 0..20 {
            let t = gen_random_tree(40, seed).unwrap();
            let doc = doc_for(&t);
            let json = doc.to_json();
            let back: CertificateDocument = serde_json::from_str(&json).unwrap();
            assert_eq!(back, doc);
            let ok = parse_and_verify(&json).unwrap();
            assert!(ok.length as u64 <= ok.target);
        }
    }

    #[test]
    fn stable_key_order() {
        let json = doc_for(&gen_path(4).unwrap()).to_json();
        let keys: Vec<usize> = [
            "\"schema_version\"", "\"tree\"", "\"n\"", "\"n2\"", "\"m\"", "\"target\"", "\"sequence\"",
            "\"labels\"", "\"bound_table\"", "\"trace\"", "\"tool_version\"", "\"seed\"",
        ]
        .iter()
        .map(|k| json.find(k).unwrap())
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn tampering_is_caught() {
        let p4 = gen_path(4).unwrap();
        let doc = doc_for(&p4);

        // Another valid sequence with different labels.
        let mut swapped = doc.clone();
        swapped.sequence = [vec![1, 3], vec![2, 0]]
            .into_iter()
            .find(|s| *s != doc.sequence)
            .unwrap();
        assert_eq!(verify(&swapped).unwrap_err().kind, "labels mismatch");

        let mut invalid = doc.clone();
        invalid.sequence = vec![0];
        assert_eq!(verify(&invalid).unwrap_err().kind, "invalid sequence");

        let mut labels = doc.clone();
        labels.labels.insert(0, doc.labels[&0] + 1);
        assert_eq!(verify(&labels).unwrap_err().kind, "labels mismatch");

        let mut target = doc.clone();
        target.target = 1;
        assert_eq!(verify(&target).unwrap_err().kind, "parameter mismatch");

        let mut tree = doc.clone();
        tree.tree.edges.push((0, 3));
        assert_eq!(verify(&tree).unwrap_err().kind, "invalid tree");

        let mut table = doc.clone();
        table.bound_table.main1 += 1;
        assert_eq!(verify(&table).unwrap_err().kind, "bound table mismatch");

        assert_eq!(parse_and_verify("{").unwrap_err().kind, "malformed document");
    }

    #[test]
    fn long_valid_sequence_exceeds_bound() {
        let t = gen_path(10).unwrap();
        let mut doc = doc_for(&t);
        let seq = BurningSequence::new(vec![1, 4, 6, 8, 9]).unwrap();
        let l = validate_sequence(&t, &seq).unwrap();
        doc.sequence = seq.sources().to_vec();
        doc.labels = l.labels().iter().copied().enumerate().collect();
        assert!(doc.target < 5);
        assert_eq!(verify(&doc).unwrap_err().kind, "bound exceeded");
    }
}
