// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

use serde::{Deserialize, Serialize};

use crate::runtime;

/// A person, real or fictional.
pub trait Person {
    fn id(&self) -> &str;
    fn age(&self) -> Option<i64>;
    fn aunt(&self) -> &[String];
    fn brother(&self) -> &[String];
    fn child(&self) -> &[String];
    fn father(&self) -> Option<&String>;
    fn mother(&self) -> Option<&String>;
    fn name(&self) -> Option<&String>;
    fn nephew(&self) -> &[String];
    fn niece(&self) -> &[String];
    fn parent(&self) -> &[String];
    fn sibling(&self) -> &[String];
    fn sister(&self) -> &[String];
    fn uncle(&self) -> &[String];
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PersonRecord {
    pub id: String,
    #[serde(rename = "type")]
    pub type_iri: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub age: Option<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub aunt: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub brother: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub child: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub father: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mother: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub nephew: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub niece: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub parent: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub sibling: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub sister: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub uncle: Vec<String>,
}

impl PersonRecord {
    pub const TYPE_IRI: &'static str = "https://know.dev/Person";

    pub fn new(id: String) -> Self {
        Self {
            id,
            type_iri: Self::TYPE_IRI.to_string(),
            age: None,
            aunt: Vec::new(),
            brother: Vec::new(),
            child: Vec::new(),
            father: None,
            mother: None,
            name: None,
            nephew: Vec::new(),
            niece: Vec::new(),
            parent: Vec::new(),
            sibling: Vec::new(),
            sister: Vec::new(),
            uncle: Vec::new(),
        }
    }

    pub fn to_json_text(&self) -> serde_json::Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn from_json_text(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_ntriples(&self) -> String {
        let mut lines = vec![format!(
            "<{}> <{}> <{}> .",
            self.id, runtime::RDF_TYPE, Self::TYPE_IRI
        )];
        if let Some(value) = &self.age {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/age", runtime::format_literal(&value.to_string(), "integer")));
        }
        for value in &self.aunt {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/aunt", runtime::format_ref(value)));
        }
        for value in &self.brother {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/brother", runtime::format_ref(value)));
        }
        for value in &self.child {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/child", runtime::format_ref(value)));
        }
        if let Some(value) = &self.father {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/father", runtime::format_ref(value)));
        }
        if let Some(value) = &self.mother {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/mother", runtime::format_ref(value)));
        }
        if let Some(value) = &self.name {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/name", runtime::format_literal(value, "text")));
        }
        for value in &self.nephew {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/nephew", runtime::format_ref(value)));
        }
        for value in &self.niece {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/niece", runtime::format_ref(value)));
        }
        for value in &self.parent {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/parent", runtime::format_ref(value)));
        }
        for value in &self.sibling {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/sibling", runtime::format_ref(value)));
        }
        for value in &self.sister {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/sister", runtime::format_ref(value)));
        }
        for value in &self.uncle {
            lines.push(format!("<{}> <{}> {} .", self.id, "https://know.dev/uncle", runtime::format_ref(value)));
        }
        runtime::finish_triples(lines)
    }
}

impl Person for PersonRecord {
    fn id(&self) -> &str {
        &self.id
    }
    fn age(&self) -> Option<i64> {
        self.age
    }
    fn aunt(&self) -> &[String] {
        &self.aunt
    }
    fn brother(&self) -> &[String] {
        &self.brother
    }
    fn child(&self) -> &[String] {
        &self.child
    }
    fn father(&self) -> Option<&String> {
        self.father.as_ref()
    }
    fn mother(&self) -> Option<&String> {
        self.mother.as_ref()
    }
    fn name(&self) -> Option<&String> {
        self.name.as_ref()
    }
    fn nephew(&self) -> &[String] {
        &self.nephew
    }
    fn niece(&self) -> &[String] {
        &self.niece
    }
    fn parent(&self) -> &[String] {
        &self.parent
    }
    fn sibling(&self) -> &[String] {
        &self.sibling
    }
    fn sister(&self) -> &[String] {
        &self.sister
    }
    fn uncle(&self) -> &[String] {
        &self.uncle
    }
}
