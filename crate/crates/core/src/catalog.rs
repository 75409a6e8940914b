//! Calculi and finite models shipped with the crate.

use crate::calculus::CalculusSpec;
use crate::error::CatalogError;
use crate::io::{parse_calculus, parse_model};
use crate::model::FiniteModel;

struct Entry {
    name: &'static str,
    calculus: &'static str,
    model: Option<&'static str>,
}

const ENTRIES: &[Entry] = &[
    Entry {
        name: "point-calculus",
        calculus: include_str!("../data/point-calculus.qcalc"),
        model: Some(include_str!("../data/pc-0-3.qmodel")),
    },
    Entry {
        name: "allen",
        calculus: include_str!("../data/allen.qcalc"),
        model: Some(include_str!("../data/allen-0-5.qmodel")),
    },
    Entry {
        name: "rcc5",
        calculus: include_str!("../data/rcc5.qcalc"),
        model: None,
    },
    Entry {
        name: "rcc8",
        calculus: include_str!("../data/rcc8.qcalc"),
        model: None,
    },
    Entry {
        name: "toy-t1",
        calculus: include_str!("../data/toy-t1.qcalc"),
        model: Some(include_str!("../data/toy-t1.qmodel")),
    },
    Entry {
        name: "toy-t2",
        calculus: include_str!("../data/toy-t2.qcalc"),
        model: Some(include_str!("../data/toy-t2.qmodel")),
    },
    Entry {
        name: "toy-remark",
        calculus: include_str!("../data/toy-remark.qcalc"),
        model: Some(include_str!("../data/toy-remark.qmodel")),
    },
];

/// Names of all bundled calculi, in catalog order.
pub fn builtin_names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

fn entry(name: &str) -> Result<&'static Entry, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::Unknown {
            name: name.to_string(),
            available: builtin_names().join(", "),
        })
}

fn corrupt(name: &str) -> impl FnOnce(crate::error::ParseError) -> CatalogError + '_ {
    move |source| CatalogError::Corrupt {
        name: name.to_string(),
        source,
    }
}

pub fn builtin_calculus(name: &str) -> Result<CalculusSpec, CatalogError> {
    parse_calculus(entry(name)?.calculus).map_err(corrupt(name))
}

/// A bundled calculus together with its finite model, if one ships.
pub fn builtin(name: &str) -> Result<(CalculusSpec, Option<FiniteModel>), CatalogError> {
    let e = entry(name)?;
    let calc = parse_calculus(e.calculus).map_err(corrupt(name))?;
    let model = e
        .model
        .map(|text| parse_model(text, &calc))
        .transpose()
        .map_err(corrupt(name))?;
    Ok((calc, model))
}

/// The bundled model of `name`; fails when the calculus ships without one.
pub fn builtin_model(name: &str) -> Result<(CalculusSpec, FiniteModel), CatalogError> {
    match builtin(name)? {
        (calc, Some(model)) => Ok((calc, model)),
        (_, None) => Err(CatalogError::NoModel(name.to_string())),
    }
}

/// Names of bundled calculi that come with a model.
pub fn builtin_names_with_model() -> Vec<&'static str> {
    ENTRIES
        .iter()
        .filter(|e| e.model.is_some())
        .map(|e| e.name)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let expect = [
            ("point-calculus", 3),
            ("allen", 13),
            ("rcc5", 5),
            ("rcc8", 8),
            ("toy-t1", 2),
            ("toy-t2", 4),
            ("toy-remark", 2),
        ];
        for (name, n) in expect {
            assert_eq!(builtin_calculus(name).unwrap().len(), n, "{name}");
        }
    }

    #[test]
    fn every_entry_parses() {
        for name in builtin_names() {
            builtin(name).unwrap();
        }
    }

    #[test]
    fn unknown_lists_available() {
        let e = builtin("rcc9").unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("rcc9") && msg.contains("rcc8") && msg.contains("toy-remark"));
        assert!(matches!(builtin_model("rcc8"), Err(CatalogError::NoModel(_))));
    }

    #[test]
    fn toy_t2_model() {
        let (calc, model) = builtin_model("toy-t2").unwrap();
        let r1 = calc.index_of("r1").unwrap();
        assert_eq!(model.image_of_base(r1).iter().collect::<Vec<_>>(), vec![(0, 0)]);
    }

    #[test]
    fn rcc8_repaired_cell() {
        let rcc8 = builtin_calculus("rcc8").unwrap();
        let ntppi = rcc8.index_of("NTPPi").unwrap();
        let ntpp = rcc8.index_of("NTPP").unwrap();
        let ec = rcc8.index_of("EC").unwrap();
        assert!(!rcc8.compose_base(ntppi, ntpp).contains(ec));
    }
}
