use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// Outcome of one claim. Serialized field order is the declaration order.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub paper_ref: String,
    pub status: Status,
    pub witness: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

pub fn render(reports: &[ClaimReport], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            for r in reports {
                out.push_str(&serde_json::to_string(r).expect("reports serialize"));
                out.push('\n');
            }
        }
        OutputFormat::Text => {
            let width = reports.iter().map(|r| r.claim.len()).max().unwrap_or(0);
            for r in reports {
                let _ = write!(out, "{:<width$}  {:<7}", r.claim, r.status.as_str());
                if let Some(ms) = r.ms {
                    let _ = write!(out, "  {ms:>6} ms");
                }
                let _ = writeln!(out, "  {}", r.witness);
                let _ = writeln!(out, "{:<width$}  {}", "", r.paper_ref);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(ms: Option<u64>) -> ClaimReport {
        ClaimReport {
            claim: "indices_g3".into(),
            paper_ref: "orbit sizes".into(),
            status: Status::Pass,
            witness: "(28, 36)".into(),
            ms,
        }
    }

    #[test]
    fn json_field_order() {
        let line = render(&[sample(Some(3))], OutputFormat::Json);
        assert_eq!(
            line,
            "{\"claim\":\"indices_g3\",\"paper_ref\":\"orbit sizes\",\"status\":\"pass\",\"witness\":\"(28, 36)\",\"ms\":3}\n"
        );
        assert!(!render(&[sample(None)], OutputFormat::Json).contains("ms"));
    }

    #[test]
    fn text_is_aligned() {
        let text = render(&[sample(None)], OutputFormat::Text);
        assert_eq!(text, "indices_g3  pass     (28, 36)\n            orbit sizes\n");
    }
}
