//! Small pass/fail report structures shared by the verification entry points.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub title: String,
    pub checks: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> Self {
        CheckReport {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(CheckItem {
            name: name.into(),
            pass,
            detail: None,
        });
    }

    pub fn push_detail(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckItem {
            name: name.into(),
            pass,
            detail: Some(detail.into()),
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckItem> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
