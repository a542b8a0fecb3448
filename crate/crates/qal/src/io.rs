//! JSON formats for free-algebra elements and presentations.
//!
//! A free-algebra element is
//! `{"terms":[{"word":["r1_2","r3_4"],"coeff":"3/2"}]}`; the empty word is
//! the unit. A presentation is either a named family,
//! `{"family":"pvb","n":4}`, or explicit data,
//! `{"n":3,"generators":["r1_2",…],"relations":[<element>,…]}`.

use std::str::FromStr;

use qal_core::family::{AlgebraFamily, FamilyTag};
use qal_core::{Error, FreeElement, Generator, QuadraticPresentation, Rational, Word};
use serde_json::{json, Value as Json};

pub fn free_element_to_json(x: &FreeElement) -> Json {
    let terms: Vec<Json> = x
        .terms()
        .map(|(w, c)| json!({"word": w.tokens(), "coeff": c.to_string()}))
        .collect();
    json!({ "terms": terms })
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn parse_coeff(v: &Json) -> Result<Rational, Error> {
    match v {
        Json::String(s) => Rational::from_str(s.trim()).map_err(|_| invalid(format!("bad coefficient {s:?}"))),
        Json::Number(n) => n
            .as_i64()
            .map(|x| Rational::from_integer(x.into()))
            .ok_or_else(|| invalid(format!("coefficient {n} must be an integer or a string such as \"3/2\""))),
        other => Err(invalid(format!("bad coefficient {other}"))),
    }
}

fn parse_generator(v: &Json) -> Result<Generator, Error> {
    v.as_str().ok_or_else(|| invalid(format!("generator must be a string, found {v}")))?.parse()
}

/// Parses an element; every generator must be valid for `n`.
pub fn free_element_from_json(n: usize, v: &Json) -> Result<FreeElement, Error> {
    let terms = v
        .get("terms")
        .and_then(Json::as_array)
        .ok_or_else(|| invalid("an element needs a \"terms\" array"))?;
    let mut out = FreeElement::zero(n);
    for t in terms {
        let word = t.get("word").and_then(Json::as_array).ok_or_else(|| invalid("a term needs a \"word\" array"))?;
        let letters = word.iter().map(parse_generator).collect::<Result<Vec<_>, _>>()?;
        let coeff = parse_coeff(t.get("coeff").ok_or_else(|| invalid("a term needs a \"coeff\""))?)?;
        out.add_term(Word::from(letters), coeff);
    }
    out.check_generators()?;
    Ok(out)
}

/// A presentation read from a file.
#[derive(Clone, Debug, PartialEq)]
pub enum PresentationSource {
    Family(AlgebraFamily),
    Custom { n: usize, generators: Vec<Generator>, relations: Vec<FreeElement> },
}

impl PresentationSource {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let v: Json = serde_json::from_str(text).map_err(|e| invalid(format!("presentation is not valid JSON: {e}")))?;
        let n = v
            .get("n")
            .and_then(Json::as_u64)
            .ok_or_else(|| invalid("a presentation needs a positive integer \"n\""))? as usize;
        if n == 0 || n > u8::MAX as usize {
            return Err(invalid(format!("n = {n} is out of range")));
        }
        if let Some(f) = v.get("family") {
            let tag: FamilyTag =
                f.as_str().ok_or_else(|| invalid("\"family\" must be a string"))?.parse()?;
            return Ok(PresentationSource::Family(AlgebraFamily::new(tag, n)));
        }
        let generators = v
            .get("generators")
            .and_then(Json::as_array)
            .ok_or_else(|| invalid("a presentation needs \"family\" or \"generators\""))?
            .iter()
            .map(parse_generator)
            .collect::<Result<Vec<_>, _>>()?;
        let relations = v
            .get("relations")
            .and_then(Json::as_array)
            .ok_or_else(|| invalid("a presentation needs a \"relations\" array"))?
            .iter()
            .map(|r| free_element_from_json(n, r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PresentationSource::Custom { n, generators, relations })
    }

    /// A validated presentation; custom relations must be independent.
    pub fn presentation(&self) -> Result<QuadraticPresentation, Error> {
        match self {
            PresentationSource::Family(f) => Ok(f.presentation()),
            PresentationSource::Custom { n, generators, relations } => {
                QuadraticPresentation::new(*n, generators.clone(), relations.clone())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trip() {
        let text = r#"{"terms":[{"word":["r1_2","r3_4"],"coeff":"3/2"},{"word":[],"coeff":-1}]}"#;
        let x = free_element_from_json(4, &serde_json::from_str(text).unwrap()).unwrap();
        assert_eq!(x.len(), 2);
        let back = free_element_to_json(&x);
        assert_eq!(back, json!({"terms":[{"word":[],"coeff":"-1"},{"word":["r1_2","r3_4"],"coeff":"3/2"}]}));
        assert_eq!(free_element_from_json(4, &back).unwrap(), x);
    }

    #[test]
    fn element_errors() {
        let bad_gen = json!({"terms":[{"word":["r1_5"],"coeff":"1"}]});
        assert!(free_element_from_json(4, &bad_gen).is_err());
        let bad_coeff = json!({"terms":[{"word":["r1_2"],"coeff":"x"}]});
        assert!(free_element_from_json(4, &bad_coeff).is_err());
    }

    #[test]
    fn presentations() {
        let f = PresentationSource::parse(r#"{"n":4,"family":"pvb"}"#).unwrap();
        assert_eq!(f, PresentationSource::Family(AlgebraFamily::pvb(4)));
        let c = PresentationSource::parse(
            r#"{"n":2,"generators":["r1_2","r2_1"],
                "relations":[{"terms":[{"word":["r1_2","r2_1"],"coeff":"1"},{"word":["r2_1","r1_2"],"coeff":"-1"}]}]}"#,
        )
        .unwrap();
        let p = c.presentation().unwrap();
        assert_eq!(p.graded_dim(2, 1000).unwrap(), 3);
        assert!(PresentationSource::parse(r#"{"n":2}"#).is_err());
        assert!(PresentationSource::parse(r#"{"n":2,"family":"xyz"}"#).is_err());
    }
}
