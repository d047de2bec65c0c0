//! Machine-readable reports. Field order is fixed by the struct layout and
//! `details` uses sorted maps, so equal inputs give byte-identical output.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use tauslice::algebra::PresentedAlgebra;
use tauslice::artheory::ArQuiver;
use tauslice::modrep::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Inconclusive,
    Success,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::True | Verdict::Success => 0,
            Verdict::False => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub role: String,
    pub dim_vector: Vec<usize>,
    /// Discovery index in the AR quiver, when one was built.
    pub index: Option<usize>,
}

impl Witness {
    pub fn new(role: &str, m: &Representation, q: Option<&ArQuiver>) -> Witness {
        Witness { role: role.to_string(), dim_vector: m.dims().to_vec(), index: q.and_then(|q| q.find(m)) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub algebra_hash: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub details: Value,
}

impl Report {
    pub fn new(command: &str, a: &PresentedAlgebra, verdict: Verdict) -> Report {
        Report {
            command: command.to_string(),
            algebra_hash: algebra_hash(a),
            verdict,
            witnesses: vec![],
            details: Value::Object(Default::default()),
        }
    }

    pub fn with_details(mut self, details: Value) -> Report {
        self.details = details;
        self
    }

    pub fn witness(mut self, role: &str, m: &Representation, q: Option<&ArQuiver>) -> Report {
        self.witnesses.push(Witness::new(role, m, q));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn algebra_hash(a: &PresentedAlgebra) -> String {
    let digest = Sha256::digest(a.canonical().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts_map_to_exit_codes() {
        assert_eq!(Verdict::from(true).exit_code(), 0);
        assert_eq!(Verdict::from(false).exit_code(), 1);
        assert_eq!(Verdict::Inconclusive.exit_code(), 2);
        assert_eq!(Verdict::Success.exit_code(), 0);
        assert_eq!(serde_json::to_string(&Verdict::Inconclusive).unwrap(), "\"inconclusive\"");
    }
}
