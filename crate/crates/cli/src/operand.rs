use std::fs;

use num_traits::One;
use repstab::charpoly::CharacterPolynomial;
use repstab::modcalc::VirtualFreeModule;
use repstab::rational::{parse_q, Q};
use repstab::symcore::{ClassFunction, MultiClass, Partition, SizeVector};
use repstab::wire::{self, Document};
use repstab::{Error, Result};
use serde_json::Value;

/// Reads `@path` operands from disk; anything else is taken literally.
pub fn load(text: &str) -> Result<String> {
    match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

/// A JSON document, unwrapping the `result` of a full report.
fn document(text: &str) -> Result<Value> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(match value {
        Value::Object(mut map) if map.contains_key("input_digest") => map.remove("result").unwrap_or(Value::Null),
        other => other,
    })
}

fn parse_partition(text: &str) -> Result<Partition> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected a partition like (2,1), got {text:?}")))?;
    let parts = inner
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {p:?} in {text:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// `(2,1)` for one coordinate, `[(1),()]` for several, or JSON `[[2,1]]`.
pub fn parse_class(text: &str) -> Result<MultiClass> {
    let text = load(text)?;
    let t = text.trim();
    if t.starts_with('(') {
        return Ok(MultiClass::single(parse_partition(t)?));
    }
    if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        if inner.trim_start().starts_with('(') {
            let coords = inner
                .split(')')
                .map(|s| s.trim().trim_start_matches(',').trim())
                .filter(|s| !s.is_empty())
                .map(|s| parse_partition(&format!("{s})")))
                .collect::<Result<Vec<_>>>()?;
            return Ok(MultiClass::new(coords));
        }
    }
    let parts: Vec<Vec<usize>> = serde_json::from_str(t).map_err(|e| Error::Parse(format!("bad class {t:?}: {e}")))?;
    MultiClass::from_parts(parts)
}

/// `4`, `(2,3)`, `2,3` or JSON `[2,3]`.
pub fn parse_sizes(text: &str) -> Result<SizeVector> {
    let t = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    let coords = t
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size vector {text:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SizeVector::new(coords))
}

/// `[coeff*]atom`, splitting a leading coefficient off.
fn split_coeff(term: &str) -> Result<(Q, &str)> {
    match term.split_once('*') {
        Some((c, rest)) => Ok((parse_q(c)?, rest.trim())),
        None => Ok((Q::one(), term.trim())),
    }
}

/// A character polynomial: a JSON document, or terms joined by `+`, each
/// `[coeff*]ATOM` with ATOM a class literal (its indicator), `Xk` (the
/// cycle counter, one coordinate) or `1`.
pub fn parse_poly(text: &str) -> Result<CharacterPolynomial> {
    let text = load(text)?;
    if text.trim_start().starts_with('{') {
        return wire::from_value(document(&text)?);
    }
    let mut terms = Vec::new();
    let mut constant = Q::from_integer(0.into());
    for raw in text.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (coeff, atom) = split_coeff(raw)?;
        if atom == "1" {
            constant += coeff;
        } else if let Some(k) = atom.strip_prefix('X') {
            let k: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad cycle counter {atom:?}")))?;
            terms.push((MultiClass::single(Partition::row(k)), coeff));
        } else if atom.starts_with('(') || atom.starts_with('[') {
            terms.push((parse_class(atom)?, coeff));
        } else {
            // A bare rational is a constant.
            constant += parse_q(atom)? * coeff;
        }
    }
    let arity = terms.first().map_or(1, |(mu, _)| mu.arity());
    terms.push((MultiClass::empty(arity), constant));
    CharacterPolynomial::from_terms(arity, terms)
}

/// `DEG:REP` with REP one of `triv`, `sign`, `reg` or `irr<class>`.
pub fn parse_rep(text: &str) -> Result<ClassFunction> {
    let text = load(text)?;
    if text.trim_start().starts_with('{') {
        return wire::from_value(document(&text)?);
    }
    let (deg, rep) = text
        .trim()
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected DEG:REP such as 2:sign, got {text:?}")))?;
    let group = parse_sizes(deg)?;
    match rep.trim() {
        "triv" => Ok(ClassFunction::trivial(&group)),
        "sign" => Ok(ClassFunction::sign(&group)),
        "reg" => Ok(ClassFunction::regular(&group)),
        other => {
            let lambda = other.strip_prefix("irr").ok_or_else(|| {
                Error::Parse(format!(
                    "unknown representation {other:?}; use triv, sign, reg or irr(...)"
                ))
            })?;
            let lambda = parse_class(lambda)?;
            if lambda.sizes() != group {
                return Err(Error::SizeMismatch {
                    expected: group.to_string(),
                    found: lambda.sizes().to_string(),
                });
            }
            Ok(ClassFunction::irreducible(&lambda))
        }
    }
}

/// A virtual free module: a JSON document, or `+`-joined terms
/// `[coeff*]DEG:REP`.
pub fn parse_module(text: &str) -> Result<VirtualFreeModule> {
    let text = load(text)?;
    if text.trim_start().starts_with('{') {
        return wire::from_value(document(&text)?);
    }
    let summands = text
        .split('+')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|raw| {
            let (coeff, rest) = if raw.contains('*') {
                split_coeff(raw)?
            } else {
                (Q::one(), raw)
            };
            Ok((coeff, parse_rep(rest)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let arity = summands.first().map_or(1, |(_, r)| r.group().arity());
    VirtualFreeModule::from_summands(arity, summands)
}

/// Any canonical document, recognised by its fields.
pub enum AnyDocument {
    Poly(CharacterPolynomial),
    Module(VirtualFreeModule),
    Decomposition(repstab::stability::StableDecomposition),
    ClassFunction(ClassFunction),
}

impl AnyDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let value = document(&load(text)?)?;
        let has = |k: &str| value.get(k).is_some();
        if has("terms") {
            Ok(AnyDocument::Poly(wire::from_value(value)?))
        } else if has("summands") {
            Ok(AnyDocument::Module(wire::from_value(value)?))
        } else if has("entries") {
            Ok(AnyDocument::Decomposition(wire::from_value(value)?))
        } else if has("values") {
            Ok(AnyDocument::ClassFunction(wire::from_value(value)?))
        } else {
            Err(Error::Parse("unrecognised document".into()))
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            AnyDocument::Poly(p) => p.to_doc_value(),
            AnyDocument::Module(m) => m.to_doc_value(),
            AnyDocument::Decomposition(d) => d.to_doc_value(),
            AnyDocument::ClassFunction(f) => f.to_doc_value(),
        }
    }
}

/// `wire::to_value` as a method.
pub trait DocValue {
    fn to_doc_value(&self) -> Value;
}

impl<T: Document> DocValue for T {
    fn to_doc_value(&self) -> Value {
        wire::to_value(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use repstab::rational::q;

    #[test]
    fn class_literals() {
        assert_eq!(
            parse_class("(2,1)").unwrap(),
            MultiClass::from_parts(vec![vec![2, 1]]).unwrap()
        );
        assert_eq!(parse_class("()").unwrap(), MultiClass::empty(1));
        assert_eq!(
            parse_class("[(1),()]").unwrap(),
            MultiClass::from_parts(vec![vec![1], vec![]]).unwrap()
        );
        assert_eq!(
            parse_class("[[2],[1,1]]").unwrap(),
            MultiClass::from_parts(vec![vec![2], vec![1, 1]]).unwrap()
        );
        assert!(parse_class("(1,2)").is_err());
    }

    #[test]
    fn poly_shorthand() {
        let p = parse_poly("X1 + -1*1").unwrap();
        assert_eq!(
            p,
            &CharacterPolynomial::cycle_count(1, 0, 1) - &CharacterPolynomial::one(1)
        );
        let p = parse_poly("3*(3) + 2*(2)").unwrap();
        assert_eq!(p.terms().len(), 2);
        let p = parse_poly("1/2*[(1),(1)]").unwrap();
        assert_eq!(p.arity(), 2);
        assert_eq!(
            p.coefficient(&MultiClass::from_parts(vec![vec![1], vec![1]]).unwrap()),
            repstab::rational::q_frac(1, 2)
        );
    }

    #[test]
    fn module_shorthand() {
        let m = parse_module("1:triv + 2*2:sign").unwrap();
        assert_eq!(m.summands().len(), 2);
        assert_eq!(m.summands()[1].coeff, q(2));
        let m = parse_module("(1,1):triv").unwrap();
        assert_eq!(m.arity(), 2);
        let m = parse_module("3:irr(2,1)").unwrap();
        assert_eq!(m.degree(), SizeVector::new(vec![3]));
        assert!(parse_module("2:irr(2,1)").is_err());
        assert!(parse_module("2:spin").is_err());
    }
}
