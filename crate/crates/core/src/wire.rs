//! Canonical JSON documents for character polynomials, free modules, class
//! functions and stable decompositions.
//!
//! Rationals are strings `"p/q"` in lowest terms with `q > 0`; lists are in
//! canonical order and output is compact, so a canonical document survives
//! a parse/serialize round trip byte for byte.
//!
//! ```
//! use repstab::charpoly::CharacterPolynomial;
//! use repstab::wire;
//!
//! let text = r#"{"m":1,"terms":[{"coeff":"-1/1","mu":[[]]},{"coeff":"1/1","mu":[[1]]}]}"#;
//! let p: CharacterPolynomial = wire::from_json(text)?;
//! assert_eq!(wire::to_json(&p), text);
//! # Ok::<(), repstab::Error>(())
//! ```

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::charpoly::CharacterPolynomial;
use crate::error::{Error, Result};
use crate::modcalc::VirtualFreeModule;
use crate::rational::{format_q, parse_q, Q};
use crate::stability::StableDecomposition;
use crate::symcore::{class_table, ClassFunction, MultiClass, SizeVector};

/// A value with a canonical JSON document.
pub trait Document: Sized {
    type Doc: Serialize + DeserializeOwned;

    fn to_doc(&self) -> Self::Doc;
    fn from_doc(doc: Self::Doc) -> Result<Self>;
}

pub fn to_json<T: Document>(value: &T) -> String {
    serde_json::to_string(&value.to_doc()).expect("documents serialize")
}

pub fn to_value<T: Document>(value: &T) -> serde_json::Value {
    serde_json::to_value(value.to_doc()).expect("documents serialize")
}

pub fn from_json<T: Document>(text: &str) -> Result<T> {
    let doc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    T::from_doc(doc)
}

pub fn from_value<T: Document>(value: serde_json::Value) -> Result<T> {
    let doc = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
    T::from_doc(doc)
}

fn class_from_parts(parts: Vec<Vec<usize>>, arity: usize) -> Result<MultiClass> {
    let class = MultiClass::from_parts(parts)?;
    if class.arity() != arity {
        return Err(Error::ArityMismatch {
            left: arity,
            right: class.arity(),
        });
    }
    Ok(class)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: String,
    pub mu: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CharPolyDoc {
    pub m: usize,
    pub terms: Vec<TermDoc>,
}

impl Document for CharacterPolynomial {
    type Doc = CharPolyDoc;

    fn to_doc(&self) -> CharPolyDoc {
        CharPolyDoc {
            m: self.arity(),
            terms: self
                .terms()
                .iter()
                .map(|(mu, c)| TermDoc {
                    coeff: format_q(c),
                    mu: mu.to_parts(),
                })
                .collect(),
        }
    }

    fn from_doc(doc: CharPolyDoc) -> Result<Self> {
        let terms = doc
            .terms
            .into_iter()
            .map(|t| Ok((class_from_parts(t.mu, doc.m)?, parse_q(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        CharacterPolynomial::from_terms(doc.m, terms)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ClassValueDoc {
    pub class: Vec<Vec<usize>>,
    pub value: String,
}

/// A class function as the list of its values on every class of one group.
/// On input, classes may be omitted (value 0) but not repeated.
fn rep_doc(f: &ClassFunction) -> Vec<ClassValueDoc> {
    f.entries()
        .into_iter()
        .map(|(class, value)| ClassValueDoc {
            class: class.to_parts(),
            value: format_q(&value),
        })
        .collect()
}

fn rep_from_doc(group: &SizeVector, rep: Vec<ClassValueDoc>) -> Result<ClassFunction> {
    let table = class_table(group);
    let mut values = vec![Q::zero(); table.len()];
    let mut seen = HashSet::new();
    for entry in rep {
        let class = class_from_parts(entry.class, group.arity())?;
        let index = table.index_of(&class).ok_or_else(|| Error::SizeMismatch {
            expected: format!("a class of S_{group}"),
            found: class.to_string(),
        })?;
        if !seen.insert(index) {
            return Err(Error::Parse(format!("class {class} listed twice")));
        }
        values[index] = parse_q(&entry.value)?;
    }
    ClassFunction::new(group.clone(), values)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ClassFunctionDoc {
    pub group: Vec<usize>,
    pub values: Vec<ClassValueDoc>,
}

impl Document for ClassFunction {
    type Doc = ClassFunctionDoc;

    fn to_doc(&self) -> ClassFunctionDoc {
        ClassFunctionDoc {
            group: self.group().coords().to_vec(),
            values: rep_doc(self),
        }
    }

    fn from_doc(doc: ClassFunctionDoc) -> Result<Self> {
        rep_from_doc(&SizeVector::new(doc.group), doc.values)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SummandDoc {
    pub coeff: String,
    pub degree: Vec<usize>,
    pub rep: Vec<ClassValueDoc>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub m: usize,
    pub summands: Vec<SummandDoc>,
}

impl Document for VirtualFreeModule {
    type Doc = ModuleDoc;

    fn to_doc(&self) -> ModuleDoc {
        ModuleDoc {
            m: self.arity(),
            summands: self
                .summands()
                .iter()
                .map(|s| SummandDoc {
                    coeff: format_q(&s.coeff),
                    degree: s.degree().coords().to_vec(),
                    rep: rep_doc(&s.rep),
                })
                .collect(),
        }
    }

    fn from_doc(doc: ModuleDoc) -> Result<Self> {
        let summands = doc
            .summands
            .into_iter()
            .map(|s| {
                let degree = SizeVector::new(s.degree);
                degree.check_arity(doc.m)?;
                Ok((parse_q(&s.coeff)?, rep_from_doc(&degree, s.rep)?))
            })
            .collect::<Result<Vec<_>>>()?;
        VirtualFreeModule::from_summands(doc.m, summands)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub lambda: Vec<Vec<usize>>,
    pub mult: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct StableDecompositionDoc {
    pub valid_from: Vec<usize>,
    pub entries: Vec<EntryDoc>,
}

impl Document for StableDecomposition {
    type Doc = StableDecompositionDoc;

    fn to_doc(&self) -> StableDecompositionDoc {
        StableDecompositionDoc {
            valid_from: self.valid_from.coords().to_vec(),
            entries: self
                .entries
                .iter()
                .map(|(lambda, mult)| EntryDoc {
                    lambda: lambda.to_parts(),
                    mult: format_q(mult),
                })
                .collect(),
        }
    }

    fn from_doc(doc: StableDecompositionDoc) -> Result<Self> {
        let valid_from = SizeVector::new(doc.valid_from);
        let mut entries = BTreeMap::new();
        for e in doc.entries {
            let lambda = class_from_parts(e.lambda, valid_from.arity())?;
            let mult = parse_q(&e.mult)?;
            if mult.is_zero() {
                continue;
            }
            if entries.insert(lambda.clone(), mult).is_some() {
                return Err(Error::Parse(format!("lambda {lambda} listed twice")));
            }
        }
        Ok(StableDecomposition { entries, valid_from })
    }
}
