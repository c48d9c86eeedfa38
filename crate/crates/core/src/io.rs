//! JSON form of complexes and representations.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homalg::{ElemMat, ProjComplex, QuiverRep};
use crate::pathalg::Algebra;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("degree {degree}: entry ({row}, {col}) is outside the matrix")]
    OutOfRange { degree: i64, row: usize, col: usize },
    #[error("degree {degree}: `{word}` is not a path of the algebra")]
    BadWord { degree: i64, word: String },
    #[error("degree {degree}: `{word}` does not run from {from} to {to}")]
    WrongEnds { degree: i64, word: String, from: String, to: String },
    #[error("bad coefficient `{0}`")]
    BadCoefficient(String),
    #[error("degrees must be consecutive")]
    Gap,
}

/// One differential entry: a path word with a coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub row: usize,
    pub col: usize,
    pub word: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffJson {
    /// Source degree of the differential.
    pub degree: i64,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub low: i64,
    pub terms: Vec<Vec<String>>,
    pub diffs: Vec<DiffJson>,
}

pub fn complex_to_json(alg: &Algebra, c: &ProjComplex) -> ComplexJson {
    let terms = c
        .terms
        .iter()
        .map(|t| t.iter().map(|&v| alg.pres.vertices[v].clone()).collect())
        .collect();
    let diffs = c
        .diffs
        .iter()
        .enumerate()
        .map(|(k, m)| {
            let mut entries = Vec::new();
            for row in 0..m.rows {
                for col in 0..m.cols {
                    for (b, s) in m.get(row, col) {
                        entries.push(EntryJson {
                            row,
                            col,
                            word: alg.class_word(*b),
                            coeff: s.to_string(),
                        });
                    }
                }
            }
            DiffJson {
                degree: c.low + k as i64,
                entries,
            }
        })
        .collect();
    ComplexJson { low: c.low, terms, diffs }
}

pub fn complex_from_json(alg: &Algebra, j: &ComplexJson) -> Result<ProjComplex, IoError> {
    let pres = &alg.pres;
    let terms: Vec<Vec<usize>> = j
        .terms
        .iter()
        .map(|t| {
            t.iter()
                .map(|v| pres.vertex_index(v).ok_or_else(|| IoError::UnknownVertex(v.clone())))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let mut diffs: Vec<ElemMat> = (0..terms.len().saturating_sub(1))
        .map(|k| ElemMat::zeros(terms[k].len(), terms[k + 1].len()))
        .collect();
    for d in &j.diffs {
        let k = d.degree - j.low;
        if k < 0 || k as usize >= diffs.len() {
            if d.entries.is_empty() {
                continue;
            }
            return Err(IoError::Gap);
        }
        let k = k as usize;
        for e in &d.entries {
            if e.row >= terms[k].len() || e.col >= terms[k + 1].len() {
                return Err(IoError::OutOfRange {
                    degree: d.degree,
                    row: e.row,
                    col: e.col,
                });
            }
            let (from, to) = (terms[k][e.row], terms[k + 1][e.col]);
            let x = parse_word(alg, &e.word).ok_or_else(|| IoError::BadWord {
                degree: d.degree,
                word: e.word.clone(),
            })?;
            if x.iter().any(|(b, _)| alg.basis[*b].source != from || alg.basis[*b].target != to) {
                return Err(IoError::WrongEnds {
                    degree: d.degree,
                    word: e.word.clone(),
                    from: pres.vertices[from].clone(),
                    to: pres.vertices[to].clone(),
                });
            }
            let c = alg
                .field
                .parse_scalar(&e.coeff)
                .ok_or_else(|| IoError::BadCoefficient(e.coeff.clone()))?;
            let cur = diffs[k].get(e.row, e.col).clone();
            diffs[k].set(e.row, e.col, alg.add(&cur, &alg.scale(&x, &c)));
        }
    }
    Ok(ProjComplex::new(j.low, terms, diffs))
}

fn parse_word(alg: &Algebra, word: &str) -> Option<crate::pathalg::Elem> {
    let w = word.trim();
    if let Some(v) = w.strip_prefix("1_") {
        return alg.pres.vertex_index(v).map(|v| alg.unit(v));
    }
    let labels: Vec<&str> = w.split('*').map(str::trim).collect();
    if labels.iter().any(|l| alg.pres.arrow_index(l).is_none()) {
        return None;
    }
    alg.reduce_word(&labels)
}

pub fn parse_complex(alg: &Algebra, text: &str) -> Result<ProjComplex, IoError> {
    let j: ComplexJson = serde_json::from_str(text)?;
    complex_from_json(alg, &j)
}

pub fn write_complex(alg: &Algebra, c: &ProjComplex) -> String {
    serde_json::to_string_pretty(&complex_to_json(alg, c)).expect("serializable")
}

#[derive(Clone, Debug, Serialize)]
pub struct RepJson {
    pub dims: Vec<usize>,
    /// Per arrow, rows of the matrix as strings.
    pub maps: Vec<Vec<Vec<String>>>,
}

pub fn rep_to_json(r: &QuiverRep) -> RepJson {
    RepJson {
        dims: r.dims.clone(),
        maps: r
            .maps
            .iter()
            .map(|m| (0..m.rows).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn roundtrip_example_complex() {
        let alg = Algebra::build(&fixtures::lambda3()).unwrap();
        let text = r#"{"low": 0, "terms": [["0"], ["1"]],
            "diffs": [{"degree": 0, "entries": [{"row": 0, "col": 0, "word": "t0", "coeff": "2"}]}]}"#;
        let c = parse_complex(&alg, text).unwrap();
        assert_eq!(parse_complex(&alg, &write_complex(&alg, &c)).unwrap(), c);
    }

    #[test]
    fn rejects_wrong_ends() {
        let alg = Algebra::build(&fixtures::lambda3()).unwrap();
        let text = r#"{"low": 0, "terms": [["1"], ["0"]],
            "diffs": [{"degree": 0, "entries": [{"row": 0, "col": 0, "word": "t0", "coeff": "1"}]}]}"#;
        assert!(matches!(parse_complex(&alg, text), Err(IoError::WrongEnds { .. })));
    }
}
