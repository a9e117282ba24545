use repstab::verify::Check;
use repstab::Error;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Rows and columns for `--csv`.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: impl IntoIterator<Item = String>) -> Self {
        Table {
            header: header.into_iter().collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: impl IntoIterator<Item = String>) {
        self.rows.push(row.into_iter().collect());
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            writer.write_record(row).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}

/// What a command computed.
pub struct Outcome {
    pub result: Value,
    pub table: Table,
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
pub struct Verification {
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
pub struct Report {
    pub command: Value,
    pub input_digest: String,
    pub result: Value,
    pub verification: Verification,
}

impl Report {
    pub fn new(command: Value, outcome: Outcome) -> Self {
        let canonical = serde_json::to_string(&command).expect("json values serialize");
        Report {
            input_digest: hex::encode(Sha256::digest(canonical.as_bytes())),
            command,
            result: outcome.result,
            verification: Verification {
                passed: outcome.checks.iter().all(|c| c.passed),
                checks: outcome.checks,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    VerificationFailure = 1,
    InputError = 2,
    CutoffExceeded = 3,
}

impl Exit {
    pub fn of_error(error: &Error) -> Self {
        match error {
            Error::CutoffExceeded { .. } => Exit::CutoffExceeded,
            Error::VerificationFailed(_) | Error::Inconsistent(_) | Error::RankDeficient { .. } => {
                Exit::VerificationFailure
            }
            _ => Exit::InputError,
        }
    }
}

fn error_kind(error: &Error) -> &'static str {
    match error {
        Error::SizeMismatch { .. } => "size_mismatch",
        Error::ArityMismatch { .. } => "arity_mismatch",
        Error::GroupMismatch { .. } => "group_mismatch",
        Error::CutoffExceeded { .. } => "cutoff_exceeded",
        Error::InvalidPartition(_) => "invalid_partition",
        Error::InvalidPermutation(_) => "invalid_permutation",
        Error::InvalidInjection { .. } => "invalid_injection",
        Error::NotComposable(_) => "not_composable",
        Error::NotAGroupAction(_) => "not_a_group_action",
        Error::BelowStableRange { .. } => "below_stable_range",
        Error::Inconsistent(_) => "inconsistent",
        Error::RankDeficient { .. } => "rank_deficient",
        Error::VerificationFailed(_) => "verification_failed",
        Error::Parse(_) => "parse",
    }
}

/// The JSON written to stderr on failure.
pub fn error_json(error: &Error) -> String {
    json!({
        "error": {
            "kind": error_kind(error),
            "message": error.to_string(),
            "exit_code": Exit::of_error(error) as i32,
        }
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_kinds() {
        let cutoff = Error::CutoffExceeded {
            what: "injection enumeration",
            value: 9,
            limit: 8,
        };
        assert_eq!(Exit::of_error(&cutoff), Exit::CutoffExceeded);
        assert_eq!(
            Exit::of_error(&Error::VerificationFailed("x".into())),
            Exit::VerificationFailure
        );
        assert_eq!(Exit::of_error(&Error::Parse("x".into())), Exit::InputError);
        assert_eq!(Exit::of_error(&Error::InvalidPartition(vec![1, 2])), Exit::InputError);
        let doc: Value = serde_json::from_str(&error_json(&cutoff)).unwrap();
        assert_eq!(doc["error"]["exit_code"], 3);
        assert_eq!(doc["error"]["kind"], "cutoff_exceeded");
    }

    #[test]
    fn failed_checks_fail_the_report() {
        let check = |passed| Check {
            name: "c".into(),
            sizes: "(2)".into(),
            comparisons: 1,
            passed,
            failure: (!passed).then(|| "mismatch".into()),
        };
        let outcome = |checks| Outcome {
            result: Value::Null,
            table: Table::default(),
            checks,
        };
        assert!(Report::new(json!({}), outcome(vec![check(true)])).verification.passed);
        assert!(
            !Report::new(json!({}), outcome(vec![check(true), check(false)]))
                .verification
                .passed
        );
        let a = Report::new(json!({"name": "x"}), outcome(vec![])).to_json();
        let b = Report::new(json!({"name": "x"}), outcome(vec![])).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn csv_quotes_commas() {
        let mut t = Table::new(["class".to_string(), "(3)".to_string()]);
        t.push(["(2,1)".to_string(), "0/1".to_string()]);
        assert_eq!(t.to_csv(), "class,(3)\n\"(2,1)\",0/1\n");
    }
}
