//! The algebra file format:
//!
//! ```json
//! {"name": "H(1,0)", "even_basis": ["x1","x2","z"], "odd_basis": [],
//!  "brackets": [{"x": "x1", "y": "x2", "value": [["z", "1"]]}]}
//! ```
//!
//! Omitted pairs have zero bracket. Scalars are `"p"` or `"p/q"`.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraBuilder, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub even_basis: Vec<String>,
    pub odd_basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub x: String,
    pub y: String,
    pub value: Vec<(String, String)>,
}

impl AlgebraFile {
    pub fn from_algebra(l: &LieSuperalgebra) -> AlgebraFile {
        let names = |p: crate::Parity| -> Vec<String> {
            l.basis().iter().filter(|b| b.parity == p).map(|b| b.name.clone()).collect()
        };
        AlgebraFile {
            name: l.name().unwrap_or_default().to_string(),
            even_basis: names(crate::Parity::Even),
            odd_basis: names(crate::Parity::Odd),
            brackets: l
                .canonical_brackets()
                .into_iter()
                .map(|((i, j), v)| BracketEntry {
                    x: l.basis_name(i).to_string(),
                    y: l.basis_name(j).to_string(),
                    value: v.iter().map(|(k, c)| (l.basis_name(*k).to_string(), scalar::format(c))).collect(),
                })
                .collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<LieSuperalgebra> {
        let mut b = AlgebraBuilder::new(self.name.clone());
        for n in &self.even_basis {
            b = b.even(n.clone());
        }
        for n in &self.odd_basis {
            b = b.odd(n.clone());
        }
        for (idx, entry) in self.brackets.iter().enumerate() {
            let mut value = Vec::new();
            for (name, c) in &entry.value {
                let q = scalar::parse(c)
                    .map_err(|_| Error::Json(format!("brackets[{idx}].value: invalid scalar `{c}`")))?;
                value.push((name.as_str(), q));
            }
            b = b.bracket(&entry.x, &entry.y, &value);
        }
        b.build().map_err(|e| Error::Json(e.to_string()))
    }
}

/// Parses the JSON schema into an algebra (axioms are not checked here).
pub fn from_json(text: &str) -> Result<LieSuperalgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    file.to_algebra()
}

/// Pretty-printed, byte-stable JSON.
pub fn to_json(l: &LieSuperalgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(l)).expect("serialisable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{heisenberg_even, heisenberg_odd};

    #[test]
    fn exact_format() {
        let h = heisenberg_even(1, 0).unwrap();
        let compact = serde_json::to_string(&AlgebraFile::from_algebra(&h)).unwrap();
        assert_eq!(
            compact,
            r#"{"name":"H(1,0)","even_basis":["x1","x2","z"],"odd_basis":[],"brackets":[{"x":"x1","y":"x2","value":[["z","1"]]}]}"#
        );
    }

    #[test]
    fn reparse_preserves_structure() {
        for l in [heisenberg_even(1, 2).unwrap(), heisenberg_odd(2).unwrap()] {
            let back = from_json(&to_json(&l)).unwrap();
            assert_eq!(to_json(&back), to_json(&l));
            assert!(back.check_axioms().is_empty());
        }
    }

    #[test]
    fn diagnostics() {
        let err = from_json("{\"name\": 1}").unwrap_err();
        assert!(matches!(err, Error::Json(m) if m.contains("line 1")));
        let bad_name = r#"{"name":"","even_basis":["x"],"odd_basis":[],"brackets":[{"x":"x","y":"q","value":[]}]}"#;
        assert!(from_json(bad_name).unwrap_err().to_string().contains("unknown basis name `q`"));
        let bad_scalar = r#"{"name":"","even_basis":["x"],"odd_basis":[],"brackets":[{"x":"x","y":"x","value":[["x","0.5"]]}]}"#;
        assert!(from_json(bad_scalar).unwrap_err().to_string().contains("brackets[0]"));
    }
}
