//! Named pass/fail checks with their witness values, shared by the report,
//! the section module, and the sweep driver.

use std::collections::BTreeMap;

use serde::Serialize;

/// One named theorem or consistency check.
///
/// `values` holds the integers both sides of the statement evaluated to;
/// booleans are recorded as 0/1. A `BTreeMap` keeps JSON output ordered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub values: BTreeMap<String, i64>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            values: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: i64) -> Self {
        self.values.insert(key.into(), value);
        self
    }

    pub fn record(&mut self, key: impl Into<String>, value: i64) {
        self.values.insert(key.into(), value);
    }
}
