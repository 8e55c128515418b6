//! Sidecar schemas for `generify` and `zvk --variant generic`.

use braidmon::generify::{ArrangementEntry, ArrangementInput, TangencyKind, TangencyModel};
use braidmon::zvk::FiberData;
use braidmon::{BraidWord, Error};
use serde::Deserialize;

use crate::io::{BraidSpec, CliResult};

/// One local model replacement: `{"entry": 2, "band": 2, "conjugator": "s4", "order": 3}`.
/// `order` is only read for inflections.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Replacement {
    pub entry: usize,
    pub band: usize,
    #[serde(default)]
    pub conjugator: Option<BraidSpec>,
    #[serde(default)]
    pub order: Option<usize>,
}

impl Replacement {
    pub fn model(&self, kind: TangencyKind, strands: usize) -> CliResult<TangencyModel> {
        let conjugator = match &self.conjugator {
            Some(c) => c.resolve(strands)?,
            None => BraidWord::identity(strands),
        };
        Ok(TangencyModel::new(kind, self.band, conjugator)?)
    }

    pub fn inflection_order(&self) -> CliResult<usize> {
        self.order
            .ok_or_else(|| Error::invalid(format!("entry {}: inflection needs an order", self.entry)).into())
    }
}

/// `{"entry": 1, "parts": ["s1^(s2)", "s4"]}`
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Split {
    pub entry: usize,
    pub parts: Vec<BraidSpec>,
}

impl Split {
    pub fn parts(&self, strands: usize) -> CliResult<Vec<BraidWord>> {
        self.parts.iter().map(|p| p.resolve(strands)).collect()
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementEntrySpec {
    pub tau: BraidSpec,
    pub beta: BraidSpec,
    pub partition: Vec<usize>,
}

/// Line arrangement data; braids live on `n` strands.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementSpec {
    pub n: usize,
    pub entries: Vec<ArrangementEntrySpec>,
    #[serde(default)]
    pub vertical: Vec<usize>,
}

impl ArrangementSpec {
    pub fn resolve(&self) -> CliResult<ArrangementInput> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                Ok(ArrangementEntry {
                    tau: e.tau.resolve(self.n)?,
                    beta: e.beta.resolve(self.n)?,
                    partition: e.partition.clone(),
                })
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(ArrangementInput { n: self.n, entries, vertical: self.vertical.clone() })
    }
}

/// `{"conjugator": "s2", "local": "s1 s1", "indices": [1]}` per entry.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberSpec {
    pub conjugator: BraidSpec,
    pub local: BraidSpec,
    pub indices: Vec<usize>,
}

impl FiberSpec {
    pub fn resolve(&self, strands: usize) -> CliResult<FiberData> {
        Ok(FiberData {
            conjugator: self.conjugator.resolve(strands)?,
            local: self.local.resolve(strands)?,
            indices: self.indices.clone(),
        })
    }
}
