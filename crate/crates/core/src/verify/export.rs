use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::VerificationReport;
use crate::error::{Error, Result};
use crate::ideal::RankVector;
use crate::lattice::HasseDiagram;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    #[default]
    Json,
    Csv,
    Dot,
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Json => "json",
            ExportFormat::Csv => "csv",
            ExportFormat::Dot => "dot",
        })
    }
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "csv" => Ok(ExportFormat::Csv),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(Error::UnsupportedFormat(format!("unknown format {other:?}"))),
        }
    }
}

/// Things that can be written out.
#[derive(Clone, Copy, Debug)]
pub enum Payload<'a> {
    Diagram(&'a HasseDiagram),
    Reports(&'a [VerificationReport]),
    Ranks(&'a RankVector),
}

/// Text for a payload in a format. Diagrams take json or dot; reports and
/// rank vectors take json or csv.
pub fn render(payload: Payload<'_>, format: ExportFormat) -> Result<String> {
    let text = match (payload, format) {
        (Payload::Diagram(d), ExportFormat::Json) => d.to_json(),
        (Payload::Diagram(d), ExportFormat::Dot) => d.to_dot(),
        (Payload::Reports(r), ExportFormat::Json) => serde_json::to_string_pretty(r)?,
        (Payload::Reports(r), ExportFormat::Csv) => {
            let mut out = String::from("check,kind,grid,pass,fail,skip\n");
            for report in r {
                out.push_str(&report.csv_row());
                out.push('\n');
            }
            out
        }
        (Payload::Ranks(r), ExportFormat::Json) => serde_json::to_string(&r.coefficients)?,
        (Payload::Ranks(r), ExportFormat::Csv) => r.to_csv(),
        (p, f) => {
            let what = match p {
                Payload::Diagram(_) => "diagram",
                Payload::Reports(_) => "report",
                Payload::Ranks(_) => "rank vector",
            };
            return Err(Error::UnsupportedFormat(format!("a {what} cannot be written as {f}")));
        }
    };
    Ok(if text.ends_with('\n') { text } else { text + "\n" })
}

pub fn export(payload: Payload<'_>, format: ExportFormat, path: &Path) -> Result<()> {
    let text = render(payload, format)?;
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{enumerate, rank_vector, IdealSpec};
    use crate::lattice::build_ideal;
    use crate::partition::Partition;
    use crate::verify::verify_sieved;

    #[test]
    fn chain_dot_has_ten_nodes() {
        let d = build_ideal(&Partition::rectangle(3, 3), 3).unwrap();
        let dot = render(Payload::Diagram(&d), ExportFormat::Dot).unwrap();
        assert_eq!(dot.matches("[label=").count(), 10);
        assert_eq!(dot.matches(" -> ").count(), 9);
        assert!(render(Payload::Diagram(&d), ExportFormat::Csv).is_err());
    }

    #[test]
    fn rank_csv_rows() {
        let spec = IdealSpec::new(3, 3, 4).unwrap();
        let rv = rank_vector(&enumerate(&spec), spec.top_rank()).unwrap();
        let csv = render(Payload::Ranks(&rv), ExportFormat::Csv).unwrap();
        assert_eq!(csv.lines().count(), 1 + 10);
        assert_eq!(csv.lines().next(), Some("i,count"));
        assert_eq!(render(Payload::Ranks(&rv), ExportFormat::Json).unwrap(), "[1,1,2,2,2,2,2,2,1,1]\n");
        assert!(render(Payload::Ranks(&rv), ExportFormat::Dot).is_err());
    }

    #[test]
    fn files_are_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        let reports = [verify_sieved(3, 3, 4).unwrap().without_timing()];
        let a = dir.path().join("a.json");
        let b = dir.path().join("b.json");
        export(Payload::Reports(&reports), ExportFormat::Json, &a).unwrap();
        export(Payload::Reports(&[verify_sieved(3, 3, 4).unwrap().without_timing()]), ExportFormat::Json, &b).unwrap();
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
        let back: Vec<VerificationReport> = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
        assert_eq!(back, reports);
    }

    #[test]
    fn unwritable_path_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("missing").join("out.csv");
        let reports = [verify_sieved(2, 2, 4).unwrap()];
        assert!(matches!(export(Payload::Reports(&reports), ExportFormat::Csv, &path), Err(Error::Io(_))));
    }

    #[test]
    fn format_names() {
        for f in [ExportFormat::Json, ExportFormat::Csv, ExportFormat::Dot] {
            assert_eq!(f.to_string().parse::<ExportFormat>().unwrap(), f);
        }
        assert!("xml".parse::<ExportFormat>().is_err());
    }
}
