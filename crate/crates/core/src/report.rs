//! Theorem reports and their structured-record serialization.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::subgroup::Subgroup;

/// Version of the structured record layout.
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    T1,
    C2,
    C3,
    T4,
    T5,
    #[serde(rename = "T5COR")]
    T5Cor,
    T6,
    #[serde(rename = "PCONV")]
    PConv,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::T1,
        TheoremId::C2,
        TheoremId::C3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T5Cor,
        TheoremId::T6,
        TheoremId::PConv,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1 => "t1",
            TheoremId::C2 => "c2",
            TheoremId::C3 => "c3",
            TheoremId::T4 => "t4",
            TheoremId::T5 => "t5",
            TheoremId::T5Cor => "t5cor",
            TheoremId::T6 => "t6",
            TheoremId::PConv => "pconv",
        }
    }

    /// Parses a comma-separated list such as `t1,c2,t5cor`.
    pub fn parse_list(text: &str) -> Result<Vec<TheoremId>, Error> {
        let mut out: Vec<TheoremId> = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let id: TheoremId = part.parse()?;
            if !out.contains(&id) {
                out.push(id);
            }
        }
        out.sort();
        Ok(out)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not_applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessValue {
    Integer(u64),
    Flag(bool),
    /// Sorted element indices.
    Subgroup(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub name: String,
    pub value: WitnessValue,
}

/// Evidence for one theorem check on one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    #[serde(rename = "group")]
    pub group_label: String,
    pub order: usize,
    #[serde(rename = "theorem")]
    pub theorem_id: TheoremId,
    pub applicable: bool,
    pub verdict: Verdict,
    /// Set when only a restricted candidate family could be checked.
    pub restricted: bool,
    pub witnesses: Vec<Witness>,
    pub detail: String,
}

#[derive(Serialize)]
struct Record<'a> {
    schema: u32,
    #[serde(flatten)]
    report: &'a TheoremReport,
}

impl TheoremReport {
    pub fn new(group_label: impl Into<String>, order: usize, theorem_id: TheoremId) -> Self {
        TheoremReport {
            group_label: group_label.into(),
            order,
            theorem_id,
            applicable: true,
            verdict: Verdict::Pass,
            restricted: false,
            witnesses: Vec::new(),
            detail: String::new(),
        }
    }

    pub fn not_applicable(mut self, why: impl Into<String>) -> Self {
        self.applicable = false;
        self.verdict = Verdict::NotApplicable;
        self.detail = why.into();
        self
    }

    pub fn integer(&mut self, name: impl Into<String>, value: u64) -> &mut Self {
        self.witnesses.push(Witness {
            name: name.into(),
            value: WitnessValue::Integer(value),
        });
        self
    }

    pub fn flag(&mut self, name: impl Into<String>, value: bool) -> &mut Self {
        self.witnesses.push(Witness {
            name: name.into(),
            value: WitnessValue::Flag(value),
        });
        self
    }

    pub fn subgroup(&mut self, name: impl Into<String>, h: &Subgroup) -> &mut Self {
        self.witnesses.push(Witness {
            name: name.into(),
            value: WitnessValue::Subgroup(h.elements()),
        });
        self
    }

    /// Marks the report failed and appends `why` to the detail.
    pub fn fail(&mut self, why: impl AsRef<str>) -> &mut Self {
        self.verdict = Verdict::Fail;
        if !self.detail.is_empty() {
            self.detail.push_str("; ");
        }
        self.detail.push_str(why.as_ref());
        self
    }

    pub fn note(&mut self, text: impl AsRef<str>) -> &mut Self {
        if !self.detail.is_empty() {
            self.detail.push_str("; ");
        }
        self.detail.push_str(text.as_ref());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn witness(&self, name: &str) -> Option<&WitnessValue> {
        self.witnesses.iter().find(|w| w.name == name).map(|w| &w.value)
    }

    /// One structured record: a single JSON object with `schema` first.
    pub fn to_record(&self) -> String {
        serde_json::to_string(&Record {
            schema: REPORT_SCHEMA,
            report: self,
        })
        .expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_list_parsing() {
        assert_eq!(
            TheoremId::parse_list("t5cor, T1,c2,t1").unwrap(),
            vec![TheoremId::T1, TheoremId::C2, TheoremId::T5Cor]
        );
        assert!(TheoremId::parse_list("t7").is_err());
    }

    #[test]
    fn record_layout() {
        let mut r = TheoremReport::new("cyclic:2", 2, TheoremId::T5);
        r.integer("beta", 1).flag("ok", true);
        let r = r.not_applicable("abelian");
        assert_eq!(
            r.to_record(),
            r#"{"schema":1,"group":"cyclic:2","order":2,"theorem":"T5","applicable":false,"verdict":"not_applicable","restricted":false,"witnesses":[{"name":"beta","value":1},{"name":"ok","value":true}],"detail":"abelian"}"#
        );
    }
}
