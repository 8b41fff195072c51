//! Pass/fail reporting shared by the verification suites.

#[derive(Debug, Clone)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, name: impl Into<String>, pass: bool, details: impl Into<String>) {
        self.items.push(CheckItem { name: name.into(), pass, details: details.into() });
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| !i.pass).collect()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "pass": self.all_pass(),
            "checks": self.items.iter().map(|i| serde_json::json!({
                "name": i.name,
                "pass": i.pass,
                "details": i.details,
            })).collect::<Vec<_>>(),
        })
    }
}
