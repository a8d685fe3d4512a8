//! The self-describing instance file: one JSON document holding a problem
//! instance, how it was generated, and — for reduction outputs — the decode
//! formula plus the embedded source instance so verification can recompute
//! both sides of every identity.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use strred::rps::{RpsInstance, RpsQuery};
use strred::{DmInstance, SnInstance, Symbol, Text};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct InstanceFile {
    pub kind: Kind,
    pub sigma: Symbol,
    pub payload: Payload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduction: Option<Box<ReductionRecord>>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Dm,
    Sn,
    Rps,
    Cci,
    Ci,
    Text,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Kind::Dm => "dm",
            Kind::Sn => "sn",
            Kind::Rps => "rps",
            Kind::Cci => "cci",
            Kind::Ci => "ci",
            Kind::Text => "text",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Dm {
        text: Vec<Symbol>,
        patterns: Vec<Vec<Symbol>>,
    },
    Sn {
        m: usize,
        pairs_p: Vec<(Vec<Symbol>, Vec<Symbol>)>,
        pairs_q: Vec<(Vec<Symbol>, Vec<Symbol>)>,
    },
    Rps {
        strings: Vec<Vec<Symbol>>,
        queries: Vec<(usize, usize, Vec<Symbol>)>,
    },
    Cci {
        colors: Vec<u8>,
        values: Vec<u64>,
        /// Second value array of a difference pair sharing `colors`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        values_sub: Option<Vec<u64>>,
    },
    /// A batch of inversion-count queries with a linear decode:
    /// the instance value is `sum_i coeffs[i] * Inv(arrays[i])`.
    Ci {
        coeffs: Vec<i64>,
        arrays: Vec<Vec<u64>>,
    },
    /// One or more raw texts (reduction outputs measured by z / r / ISA / LPF).
    Texts {
        texts: Vec<Vec<Symbol>>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Provenance {
    /// Identity of the deterministic generator, e.g. "chacha12".
    pub generator: String,
    pub seed: u64,
    pub params: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReductionRecord {
    pub edge: String,
    pub decode: Decode,
    /// The instance this file was reduced from, embedded so verification can
    /// recompute the oracle answer independently.
    pub source: InstanceFile,
}

/// The identity a reduction output is decoded with.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Decode {
    /// texts = \[S\]: `z(S) - z(S[1..=delta])` is `2k` iff YES, else `2k+1`,
    /// for both factorization variants.
    LzDifference { k: usize, delta: usize },
    /// texts = \[T1, T2, T3, T4\]: YES iff `((x1-x2)-(x3-x4)) mod 2 = 0`
    /// where `x_p = z(T_p) mod 2`, for both variants.
    LzParity { k: usize },
    /// texts = \[S1, S2\]: `r(S2) - r(S1) = scale * #non-occurring`;
    /// YES iff the difference is below `scale * k`.
    RlbwtDifference { k: usize, scale: usize },
    /// texts = \[S\]: pattern i occurs iff
    /// `ISA[alpha+(i-1)beta+1] + 1 < ISA[alpha+(i-1)beta+gamma+1]`.
    IsaPredicates { k: usize, alpha: usize, beta: usize, gamma: usize },
    /// texts = \[S1, S2\]: YES iff `floor((lcf(S1,S2) - alpha)/beta) = m`.
    LcfThreshold { m: usize, alpha: usize, beta: usize },
    /// texts = \[S\]: pattern i occurs iff
    /// `floor(LPF[alpha+(i-1)beta+1]/gamma) = m` (and with LPnF).
    LpfPredicates { k: usize, m: usize, alpha: usize, beta: usize, gamma: usize },
    /// The output instance has the same yes/no answer as the source.
    AnswerEquivalent,
    /// cci payload with `values_sub`:
    /// `CCI(C, values) - CCI(C, values_sub) = 2 * sum of source range counts`;
    /// YES iff positive.
    CciDifference,
    /// ci payload: the linear combination equals the source's colored count
    /// (or colored difference when the source is a pair).
    InversionCombination,
    /// cci payload: colored count is twice the source's inversion count.
    DoubledInversions,
}

#[derive(Debug)]
pub enum FileError {
    Io(std::io::Error),
    Json(serde_json::Error),
    Core(strred::Error),
    Malformed(String),
}

impl std::fmt::Display for FileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FileError::Io(e) => write!(f, "io error: {e}"),
            FileError::Json(e) => write!(f, "malformed instance file: {e}"),
            FileError::Core(e) => write!(f, "invalid instance: {e}"),
            FileError::Malformed(m) => write!(f, "malformed instance file: {m}"),
        }
    }
}

impl std::error::Error for FileError {}

impl From<std::io::Error> for FileError {
    fn from(e: std::io::Error) -> Self {
        FileError::Io(e)
    }
}
impl From<serde_json::Error> for FileError {
    fn from(e: serde_json::Error) -> Self {
        FileError::Json(e)
    }
}
impl From<strred::Error> for FileError {
    fn from(e: strred::Error) -> Self {
        FileError::Core(e)
    }
}

impl InstanceFile {
    pub fn save(&self, path: &std::path::Path) -> Result<(), FileError> {
        let mut body = serde_json::to_string_pretty(self)?;
        body.push('\n');
        std::fs::write(path, body)?;
        Ok(())
    }

    pub fn load(path: &std::path::Path) -> Result<Self, FileError> {
        let body = std::fs::read_to_string(path)?;
        let file: InstanceFile = serde_json::from_str(&body)?;
        file.validate()?;
        Ok(file)
    }

    /// Checks that the payload matches the declared kind and satisfies the
    /// kind's instance invariants.
    pub fn validate(&self) -> Result<(), FileError> {
        match (&self.kind, &self.payload) {
            (Kind::Dm, Payload::Dm { .. }) => {
                self.to_dm()?;
            }
            (Kind::Sn, Payload::Sn { .. }) => {
                self.to_sn()?;
            }
            (Kind::Rps, Payload::Rps { .. }) => {
                self.to_rps()?;
            }
            (Kind::Cci, Payload::Cci { colors, values, values_sub }) => {
                if colors.len() != values.len() {
                    return Err(FileError::Malformed(
                        "color and value arrays differ in length".into(),
                    ));
                }
                if colors.iter().any(|&c| c > 1) {
                    return Err(FileError::Malformed("colors must be 0/1".into()));
                }
                if let Some(sub) = values_sub {
                    if sub.len() != colors.len() {
                        return Err(FileError::Malformed(
                            "second value array differs in length".into(),
                        ));
                    }
                }
            }
            (Kind::Ci, Payload::Ci { coeffs, arrays }) => {
                if coeffs.len() != arrays.len() {
                    return Err(FileError::Malformed(
                        "one coefficient per array is required".into(),
                    ));
                }
            }
            (Kind::Text, Payload::Texts { texts }) => {
                for t in texts {
                    Text::new(t.clone(), self.sigma)?;
                }
            }
            _ => {
                return Err(FileError::Malformed(format!(
                    "payload does not match declared kind {}",
                    self.kind
                )));
            }
        }
        if let Some(record) = &self.reduction {
            record.source.validate()?;
        }
        Ok(())
    }

    pub fn to_dm(&self) -> Result<DmInstance, FileError> {
        match &self.payload {
            Payload::Dm { text, patterns } => Ok(DmInstance::new(
                Text::new(text.clone(), self.sigma)?,
                patterns.clone(),
            )?),
            _ => Err(FileError::Malformed("expected a dm payload".into())),
        }
    }

    pub fn to_sn(&self) -> Result<SnInstance, FileError> {
        match &self.payload {
            Payload::Sn { m, pairs_p, pairs_q } => {
                Ok(SnInstance::new(*m, self.sigma, pairs_p.clone(), pairs_q.clone())?)
            }
            _ => Err(FileError::Malformed("expected an sn payload".into())),
        }
    }

    pub fn to_rps(&self) -> Result<RpsInstance, FileError> {
        match &self.payload {
            Payload::Rps { strings, queries } => Ok(RpsInstance::new(
                strings.clone(),
                queries
                    .iter()
                    .map(|(b, e, q)| RpsQuery { b: *b, e: *e, pattern: q.clone() })
                    .collect(),
            )?),
            _ => Err(FileError::Malformed("expected an rps payload".into())),
        }
    }

    pub fn texts(&self) -> Result<Vec<Text>, FileError> {
        match &self.payload {
            Payload::Texts { texts } => texts
                .iter()
                .map(|t| Text::new(t.clone(), self.sigma).map_err(FileError::from))
                .collect(),
            _ => Err(FileError::Malformed("expected a text payload".into())),
        }
    }

    /// Short human summary used in reports.
    pub fn summary(&self) -> String {
        match &self.payload {
            Payload::Dm { text, patterns } => format!(
                "dm n={} k={} m={} sigma={}",
                text.len(),
                patterns.len(),
                patterns.first().map_or(0, |p| p.len()),
                self.sigma
            ),
            Payload::Sn { m, pairs_p, pairs_q } => {
                format!("sn m={} |P|={} |Q|={}", m, pairs_p.len(), pairs_q.len())
            }
            Payload::Rps { strings, queries } => format!(
                "rps m={} len={} q={}",
                strings.len(),
                strings.first().map_or(0, |s| s.len()),
                queries.len()
            ),
            Payload::Cci { colors, values_sub, .. } => format!(
                "cci n={}{}",
                colors.len(),
                if values_sub.is_some() { " (difference pair)" } else { "" }
            ),
            Payload::Ci { arrays, .. } => format!(
                "ci arrays={} n={}",
                arrays.len(),
                arrays.first().map_or(0, |a| a.len())
            ),
            Payload::Texts { texts } => format!(
                "text count={} lens={:?}",
                texts.len(),
                texts.iter().map(|t| t.len()).collect::<Vec<_>>()
            ),
        }
    }
}
