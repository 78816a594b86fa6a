//! JSON state files.
//!
//! Two layouts are accepted, with exactly one top-level key:
//!
//! ```json
//! {"matrix": [[[re, im], [re, im], [re, im], [re, im]], ...]}
//! {"fano": {"x": [x1, x2, x3], "y": [y1, y2, y3], "T": [[..], [..], [..]]}}
//! ```

use std::path::Path;

use lazyq::fano::{FanoParams, StateError, TwoQubitState};
use lazyq::matcore::{ComplexMatrix, RealMatrix3, C64};
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub enum LoadError {
    /// Unreadable file, malformed JSON or wrong layout.
    Parse(String),
    /// Well-formed file whose matrix is not a valid density matrix.
    Invalid(StateError),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStateFile {
    matrix: Option<Vec<Vec<[f64; 2]>>>,
    fano: Option<RawFano>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawFano {
    x: [f64; 3],
    y: [f64; 3],
    #[serde(rename = "T")]
    t: [[f64; 3]; 3],
}

#[derive(Serialize)]
struct MatrixFile {
    matrix: Vec<Vec<[f64; 2]>>,
}

pub fn parse(text: &str) -> Result<TwoQubitState, LoadError> {
    let raw: RawStateFile = serde_json::from_str(text).map_err(|e| LoadError::Parse(e.to_string()))?;
    let m = match (raw.matrix, raw.fano) {
        (Some(rows), None) => matrix_from_rows(&rows)?,
        (None, Some(f)) => FanoParams { x: f.x, y: f.y, t: RealMatrix3(f.t) }.compose().into_matrix(),
        (Some(_), Some(_)) => return Err(LoadError::Parse("state file has both \"matrix\" and \"fano\"".into())),
        (None, None) => return Err(LoadError::Parse("state file needs a \"matrix\" or \"fano\" key".into())),
    };
    TwoQubitState::new(m).map_err(LoadError::Invalid)
}

fn matrix_from_rows(rows: &[Vec<[f64; 2]>]) -> Result<ComplexMatrix, LoadError> {
    if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
        return Err(LoadError::Parse("\"matrix\" must be a 4x4 array of [re, im] pairs".into()));
    }
    let data = rows.iter().flatten().map(|&[re, im]| C64::new(re, im)).collect();
    Ok(ComplexMatrix::from_vec(4, 4, data).expect("16 entries"))
}

pub fn load(path: &Path) -> Result<TwoQubitState, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Parse(format!("{}: {e}", path.display())))?;
    parse(&text)
}

/// Matrix-form state file, pretty-printed.
pub fn to_json(rho: &TwoQubitState) -> String {
    let m = rho.matrix();
    let matrix = (0..4).map(|i| (0..4).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect();
    let mut s = serde_json::to_string_pretty(&MatrixFile { matrix }).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_layouts() {
        let m = r#"{"matrix": [[[0.25,0],[0,0],[0,0],[0,0]],[[0,0],[0.25,0],[0,0],[0,0]],[[0,0],[0,0],[0.25,0],[0,0]],[[0,0],[0,0],[0,0],[0.25,0]]]}"#;
        let a = parse(m).unwrap();
        let f = r#"{"fano": {"x": [0,0,0], "y": [0,0,0], "T": [[0,0,0],[0,0,0],[0,0,0]]}}"#;
        let b = parse(f).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn round_trips_through_text() {
        let rho = TwoQubitState::bell_phi_plus();
        assert_eq!(parse(&to_json(&rho)).unwrap(), rho);
    }

    #[test]
    fn rejects_bad_layouts() {
        assert!(matches!(parse("{}"), Err(LoadError::Parse(_))));
        assert!(matches!(parse("not json"), Err(LoadError::Parse(_))));
        assert!(matches!(parse(r#"{"matrix": [[[1,0]]]}"#), Err(LoadError::Parse(_))));
        let both = r#"{"matrix": [], "fano": {"x": [0,0,0], "y": [0,0,0], "T": [[0,0,0],[0,0,0],[0,0,0]]}}"#;
        assert!(matches!(parse(both), Err(LoadError::Parse(_))));
        assert!(matches!(parse(r#"{"fano": {"x": [0,0,0], "y": [0,0,0]}}"#), Err(LoadError::Parse(_))));
    }

    #[test]
    fn rejects_wrong_trace() {
        let m = r#"{"matrix": [[[0.225,0],[0,0],[0,0],[0,0]],[[0,0],[0.225,0],[0,0],[0,0]],[[0,0],[0,0],[0.225,0],[0,0]],[[0,0],[0,0],[0,0],[0.225,0]]]}"#;
        assert!(matches!(parse(m), Err(LoadError::Invalid(StateError::Trace(_)))));
    }
}
