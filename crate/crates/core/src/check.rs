use serde::Serialize;

/// One named identity and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub holds: bool,
}

impl Check {
    pub fn new(label: impl Into<String>, holds: bool) -> Self {
        Check { label: label.into(), holds }
    }
}

pub fn all_hold(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.holds)
}
