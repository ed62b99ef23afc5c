//! Claim identifiers and verification reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Margin threshold for strict and non-strict inequalities (relative).
pub const STRICT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    Thm1a,
    Thm1b,
    Thm1c,
    Thm1d,
    Thm1e,
    Thm1f,
    Thm2,
    Cor21,
    Thm3,
    Thm4Id1,
    Thm4Id2,
    Thm4Id3,
    Thm5,
    Thm6,
    Cor61,
    Thm7a,
    Thm7b,
    Thm7c,
    Thm7d,
    Thm8,
    Lemma2,
    Redheffer56,
    Thm9,
    Thm10,
    Thm11,
    DiniOde,
    LimitEq,
    WprimeProduct,
}

impl ClaimId {
    pub const ALL: [ClaimId; 28] = [
        ClaimId::Thm1a,
        ClaimId::Thm1b,
        ClaimId::Thm1c,
        ClaimId::Thm1d,
        ClaimId::Thm1e,
        ClaimId::Thm1f,
        ClaimId::Thm2,
        ClaimId::Cor21,
        ClaimId::Thm3,
        ClaimId::Thm4Id1,
        ClaimId::Thm4Id2,
        ClaimId::Thm4Id3,
        ClaimId::Thm5,
        ClaimId::Thm6,
        ClaimId::Cor61,
        ClaimId::Thm7a,
        ClaimId::Thm7b,
        ClaimId::Thm7c,
        ClaimId::Thm7d,
        ClaimId::Thm8,
        ClaimId::Lemma2,
        ClaimId::Redheffer56,
        ClaimId::Thm9,
        ClaimId::Thm10,
        ClaimId::Thm11,
        ClaimId::DiniOde,
        ClaimId::LimitEq,
        ClaimId::WprimeProduct,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ClaimId::Thm1a => "thm1a",
            ClaimId::Thm1b => "thm1b",
            ClaimId::Thm1c => "thm1c",
            ClaimId::Thm1d => "thm1d",
            ClaimId::Thm1e => "thm1e",
            ClaimId::Thm1f => "thm1f",
            ClaimId::Thm2 => "thm2",
            ClaimId::Cor21 => "cor21",
            ClaimId::Thm3 => "thm3",
            ClaimId::Thm4Id1 => "thm4_id1",
            ClaimId::Thm4Id2 => "thm4_id2",
            ClaimId::Thm4Id3 => "thm4_id3",
            ClaimId::Thm5 => "thm5",
            ClaimId::Thm6 => "thm6",
            ClaimId::Cor61 => "cor61",
            ClaimId::Thm7a => "thm7a",
            ClaimId::Thm7b => "thm7b",
            ClaimId::Thm7c => "thm7c",
            ClaimId::Thm7d => "thm7d",
            ClaimId::Thm8 => "thm8",
            ClaimId::Lemma2 => "lemma2",
            ClaimId::Redheffer56 => "redheffer56",
            ClaimId::Thm9 => "thm9",
            ClaimId::Thm10 => "thm10",
            ClaimId::Thm11 => "thm11",
            ClaimId::DiniOde => "dini_ode",
            ClaimId::LimitEq => "limit_eq",
            ClaimId::WprimeProduct => "wprime_product",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ClaimId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| Error::Domain(format!("unknown claim '{s}'")))
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for ClaimId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub params: BTreeMap<String, f64>,
    pub margin: f64,
}

/// Outcome of checking one claim over a parameter grid. Margins are signed,
/// positive when the claim holds with slack.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: ClaimId,
    pub points_checked: usize,
    pub violations: Vec<Violation>,
    pub min_margin: Option<f64>,
    pub pass: bool,
    pub notes: String,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn summary_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.claim,
            self.points_checked,
            self.violations.len(),
            self.min_margin.map(crate::fmt::num).unwrap_or_default(),
            if self.pass { "pass" } else { "fail" }
        )
    }
}

pub const SUMMARY_HEADER: &str = "claim,points_checked,violations,min_margin,pass";

/// Accumulates margins for one claim.
#[derive(Debug)]
pub struct Checker {
    claim: ClaimId,
    points: usize,
    violations: Vec<Violation>,
    min_margin: Option<f64>,
    notes: Vec<String>,
}

impl Checker {
    pub fn new(claim: ClaimId) -> Self {
        Checker { claim, points: 0, violations: Vec::new(), min_margin: None, notes: Vec::new() }
    }

    /// Records a margin with an explicit verdict.
    pub fn check(&mut self, params: &[(&str, f64)], margin: f64, ok: bool) {
        self.points += 1;
        self.min_margin = Some(match self.min_margin {
            Some(m) if !(margin < m) => m,
            _ => margin,
        });
        if !ok || margin.is_nan() {
            self.violations.push(Violation {
                params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                margin,
            });
        }
    }

    pub fn strict(&mut self, params: &[(&str, f64)], margin: f64) {
        self.check(params, margin, margin > STRICT_TOL);
    }

    pub fn non_strict(&mut self, params: &[(&str, f64)], margin: f64) {
        self.check(params, margin, margin >= -STRICT_TOL);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        let t = text.into();
        if !self.notes.contains(&t) {
            self.notes.push(t);
        }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            claim: self.claim,
            points_checked: self.points,
            pass: self.violations.is_empty(),
            violations: self.violations,
            min_margin: self.min_margin,
            notes: self.notes.join("; "),
        }
    }
}

/// (rhs - lhs) / scale, with scale floored away from zero.
pub fn rel_margin(lhs: f64, rhs: f64, scale: f64) -> f64 {
    (rhs - lhs) / scale.abs().max(f64::MIN_POSITIVE)
}
