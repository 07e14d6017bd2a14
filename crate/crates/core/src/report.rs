//! Structured verdicts. Every checker answers with a [`ClassReport`]: a
//! boolean plus, whenever the answer is constructive or refutable, a witness
//! that can be re-validated independently of the checker that produced it.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A function table keyed by domain element name. Witness maps carry only
/// their table; the ambient objects are known from the report's context.
pub type Table = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl ClassReport {
    pub fn pass() -> Self {
        ClassReport {
            verdict: true,
            witness: None,
        }
    }

    pub fn pass_with(witness: Witness) -> Self {
        ClassReport {
            verdict: true,
            witness: Some(witness),
        }
    }

    pub fn fail(witness: Witness) -> Self {
        ClassReport {
            verdict: false,
            witness: Some(witness),
        }
    }

    pub fn fail_bare() -> Self {
        ClassReport {
            verdict: false,
            witness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A violated axiom together with the elements realizing the violation.
    Axiom {
        axiom: String,
        elements: Vec<String>,
    },
    /// A subset of a poset lacking a bound; `missing` is "sup" or "inf".
    Subset {
        elements: Vec<String>,
        missing: String,
    },
    /// A map witnessing a positive verdict; `role` names what it is
    /// (section, retraction, diagonal, extension, ...).
    Map { role: String, table: Table },
    /// A pair of maps, e.g. the (alpha, beta) of a retract situation.
    MapPair {
        role: String,
        first: Table,
        second: Table,
    },
    /// A commutative square (u, v) on a fixed (l, r) that admits no diagonal.
    UnliftableSquare { u: Table, v: Table },
    /// A lifting problem (h into the object, u out of it) with no extension.
    UnsolvableExtension { h_dom: String, u: Table },
    /// A failing pair for fibration-style conditions: element and fibre base.
    FibreAt {
        element: String,
        base: String,
        reason: String,
    },
    /// A structured source (base element, family) with no initial lift.
    Source { base: String, family: Vec<String> },
    /// Free-form named facts for composite checks.
    Note { text: String },
}

impl Witness {
    pub fn axiom(axiom: &str, elements: &[&str]) -> Self {
        Witness::Axiom {
            axiom: axiom.to_string(),
            elements: elements.iter().map(|s| s.to_string()).collect(),
        }
    }
}
