// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

use serde::{Deserialize, Serialize};

use crate::runtime;

/// Airport
pub trait Airport {
    fn id(&self) -> &str;
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AirportRecord {
    pub id: String,
    #[serde(rename = "type")]
    pub type_iri: String,
}

impl AirportRecord {
    pub const TYPE_IRI: &'static str = "https://know.dev/Airport";

    pub fn new(id: String) -> Self {
        Self {
            id,
            type_iri: Self::TYPE_IRI.to_string(),
        }
    }

    pub fn to_json_text(&self) -> serde_json::Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json_text(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_ntriples(&self) -> String {
        let lines = vec![format!(
            "<{}> <{}> <{}> .",
            self.id, runtime::RDF_TYPE, Self::TYPE_IRI
        )];
        runtime::finish_triples(lines)
    }
}

impl Airport for AirportRecord {
    fn id(&self) -> &str {
        &self.id
    }
}
