//! Machine-readable reports and their text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::factorization::FactorizationSet;
use crate::families::{FamilyInstance, SurveyReport};
use crate::poly::IntPoly;
use crate::realroots::Interval;
use crate::valuation::{
    fmt_alpha, AtomSet, Certificate, GroupCheck, Property, SearchCaps, SigmaResult, Tri,
    UnknownReason, Verdict,
};

/// Output of `classify` and `atoms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub canonical_min_poly: IntPoly,
    pub root_interval: Interval,
    pub rank: usize,
    pub verdicts: BTreeMap<Property, Tri>,
    pub atoms: AtomSet,
    pub sigma: SigmaResult,
    pub certificates: BTreeMap<Property, Certificate>,
    pub unknown: BTreeMap<Property, UnknownReason>,
    pub caps: SearchCaps,
    pub complete_flags: BTreeMap<String, bool>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(
        input: &str,
        min_poly: &IntPoly,
        root: &Interval,
        v: &Verdict,
        caps: &SearchCaps,
        ms: u64,
    ) -> Self {
        let verdicts = Property::ALL.iter().map(|&p| (p, v.get(p))).collect();
        let mut flags = BTreeMap::new();
        flags.insert("verdicts".to_string(), v.is_fully_determined());
        flags.insert("atoms".to_string(), v.atoms != AtomSet::Unknown);
        flags.insert(
            "sigma".to_string(),
            !matches!(v.sigma, SigmaResult::NotFoundUpToCap { .. }),
        );
        Report {
            input: input.to_string(),
            canonical_min_poly: min_poly.clone(),
            root_interval: root.clone(),
            rank: v.rank,
            verdicts,
            atoms: v.atoms,
            sigma: v.sigma.clone(),
            certificates: v.certificates.clone(),
            unknown: v.unknown.clone(),
            caps: caps.clone(),
            complete_flags: flags,
            timing_ms: ms,
        }
    }

    pub fn has_unknown(&self) -> bool {
        self.verdicts.values().any(|t| *t == Tri::Unknown)
    }

    fn header(&self, out: &mut String) {
        let _ = writeln!(out, "input: {}", self.input);
        let _ = writeln!(out, "minimal polynomial: {}", self.canonical_min_poly);
        let _ = writeln!(out, "root in {}", self.root_interval);
        let _ = writeln!(out, "rank: {}", self.rank);
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.header(&mut out);
        if self.verdicts.get(&Property::Atomic) == Some(&Tri::No) {
            let cert = self
                .certificates
                .get(&Property::Atomic)
                .map(|c| c.to_string())
                .unwrap_or_default();
            let _ = writeln!(out, "ANTIMATTER (certificate: {cert})");
        }
        for (p, t) in &self.verdicts {
            let detail = match (self.certificates.get(p), self.unknown.get(p)) {
                (Some(c), _) => c.to_string(),
                (None, Some(r)) => r.to_string(),
                _ => String::new(),
            };
            let _ = writeln!(out, "{:<7} {:<8} {detail}", p.name(), t.to_string());
        }
        self.render_atoms(&mut out);
        out
    }

    fn render_atoms(&self, out: &mut String) {
        let _ = writeln!(out, "atoms: {}", self.atoms);
        let _ = writeln!(out, "σ: {}", sigma_text(&self.sigma));
    }

    pub fn render_atoms_text(&self) -> String {
        let mut out = String::new();
        self.header(&mut out);
        self.render_atoms(&mut out);
        out
    }
}

pub fn sigma_text(s: &SigmaResult) -> String {
    match s {
        SigmaResult::Finite { sigma, witness } => format!(
            "{sigma} ({} = {})",
            fmt_alpha(&IntPoly::x_pow(*sigma)),
            fmt_alpha(witness)
        ),
        SigmaResult::Infinite { reason } => format!("∞ ({})", reason.describe()),
        SigmaResult::NotFoundUpToCap {
            cap,
            checked_through,
        } => {
            format!("unknown (no witness for n ≤ {checked_through}, cap {cap})")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub input: String,
    pub element: IntPoly,
    pub canonical_min_poly: IntPoly,
    pub root_interval: Interval,
    pub atoms: AtomSet,
    pub factorizations: FactorizationSet,
    pub lengths: Vec<u64>,
    pub arithmetic_progression: Option<bool>,
    pub caps: SearchCaps,
}

impl FactorReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "element: {}", fmt_alpha(&self.element));
        let _ = writeln!(
            out,
            "minimal polynomial: {} (root in {})",
            self.canonical_min_poly, self.root_interval
        );
        let _ = writeln!(out, "atoms: {}", self.atoms);
        for f in &self.factorizations.items {
            let _ = writeln!(out, "  {}  (length {})", fmt_alpha(&f.z), f.length);
        }
        let _ = writeln!(
            out,
            "{} factorization(s), lengths {:?}, {}",
            self.factorizations.items.len(),
            self.lengths,
            if self.factorizations.complete {
                "complete".to_string()
            } else {
                match self.factorizations.exponent_cap_used {
                    Some(c) => format!("incomplete (exponents ≤ {c})"),
                    None => "incomplete (node budget)".to_string(),
                }
            }
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub left: IntPoly,
    pub right: IntPoly,
    pub isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub instance: FamilyInstance,
    pub report: Report,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub input: String,
    pub min_poly: IntPoly,
    pub result: GroupCheck,
}

impl GroupReport {
    pub fn render_text(&self) -> String {
        match &self.result {
            GroupCheck::IsGroup { phi, product } => {
                format!("GROUP: N₀[β] = Z[β], multiplier φ = {phi}\nφ·m = {product}\n")
            }
            GroupCheck::HasPositiveRoot => {
                format!("NOT A GROUP: {} has a positive root\n", self.min_poly)
            }
        }
    }
}

pub fn render_survey(r: &SurveyReport) -> String {
    let mut out = String::new();
    for o in &r.observations {
        let gap = o.gap.map_or("?".to_string(), |g| g.to_string());
        let _ = writeln!(out, "{:<28} {:<40} gap {gap}", o.source, o.poly.to_string());
    }
    let _ = writeln!(out, "achieved gaps: {:?}", r.achieved_gaps);
    out
}
