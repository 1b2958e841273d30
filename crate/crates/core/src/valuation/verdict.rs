//! Tri-valued verdicts and the implication checks tying the eight properties together.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, Hypothesis};
use crate::algebraic::AlgebraicNumber;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn is_known(self) -> bool {
        self != Tri::Unknown
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Atomic,
    Accp,
    Bfm,
    Ffm,
    Fgm,
    Ufm,
    Hfm,
    Ohfm,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::Atomic,
        Property::Accp,
        Property::Bfm,
        Property::Ffm,
        Property::Fgm,
        Property::Ufm,
        Property::Hfm,
        Property::Ohfm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Atomic => "atomic",
            Property::Accp => "accp",
            Property::Bfm => "bfm",
            Property::Ffm => "ffm",
            Property::Fgm => "fgm",
            Property::Ufm => "ufm",
            Property::Hfm => "hfm",
            Property::Ohfm => "ohfm",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether `premise = value` forces `conclusion = implied`.
pub fn implication_holds(
    premise: Property,
    value: Tri,
    conclusion: Property,
    implied: Tri,
) -> bool {
    use Property::*;
    match (value, implied) {
        (Tri::No, Tri::No) => matches!(
            (premise, conclusion),
            (Atomic, _)
                | (Accp, Bfm | Ffm | Fgm | Ufm | Hfm | Ohfm)
                | (Bfm, Accp | Ffm | Fgm | Ufm | Hfm | Ohfm)
                | (Ffm, Accp | Bfm | Fgm | Ufm | Hfm | Ohfm)
                | (Fgm, Ohfm | Ufm | Hfm)
                | (Ohfm, Ufm | Hfm)
                | (Ufm, Hfm)
                | (Hfm, Ufm)
        ),
        (Tri::Yes, Tri::Yes) => matches!(
            (premise, conclusion),
            (Ufm, Hfm | Ohfm | Fgm | Ffm | Bfm | Accp | Atomic)
                | (Hfm, Ufm | Ohfm | Fgm | Ffm | Bfm | Accp | Atomic)
                | (Ohfm, Fgm | Ffm | Bfm | Accp | Atomic)
                | (Fgm, Ffm | Bfm | Accp | Atomic)
                | (Ffm, Bfm | Accp | Atomic)
                | (Bfm, Ffm | Accp | Atomic)
                | (Accp, Ffm | Bfm | Atomic)
        ),
        _ => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SigmaResult {
    Finite {
        sigma: usize,
        witness: IntPoly,
    },
    /// Forced analytically; the hypothesis names the reason.
    Infinite {
        reason: Hypothesis,
    },
    /// No witness for `n <= checked_through`; the search stopped at the cap or budget.
    NotFoundUpToCap {
        cap: usize,
        checked_through: usize,
    },
}

impl SigmaResult {
    pub fn finite(&self) -> Option<usize> {
        match self {
            SigmaResult::Finite { sigma, .. } => Some(*sigma),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AtomSet {
    /// `{α^j : j <= up_to}`
    FinitePowers {
        up_to: usize,
    },
    AllPowers,
    Empty,
    Unknown,
}

impl fmt::Display for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomSet::FinitePowers { up_to: 0 } => f.write_str("{1}"),
            AtomSet::FinitePowers { up_to: 1 } => f.write_str("{1, α}"),
            AtomSet::FinitePowers { up_to } => write!(f, "{{1, α, …, α^{up_to}}}"),
            AtomSet::AllPowers => f.write_str("{α^n : n ≥ 0}"),
            AtomSet::Empty => f.write_str("∅"),
            AtomSet::Unknown => f.write_str("unknown"),
        }
    }
}

/// Why a field was left undetermined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UnknownReason {
    /// A search limit ran out; `cap` names the limit.
    CapExhausted { cap: String, value: u64 },
    /// No decision rule applies to this region.
    Undecided { region: String },
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnknownReason::CapExhausted { cap, value } => write!(f, "{cap} = {value} exhausted"),
            UnknownReason::Undecided { region } => write!(f, "undecided: {region}"),
        }
    }
}

/// Result of scanning `k ∈ 0..=range` for `p − x^k q ∈ N0[x]` (α < 1 only).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessaryScan {
    pub range: usize,
    pub k: Option<usize>,
}

/// One property's outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub value: Tri,
    pub certificate: Option<Certificate>,
    pub reason: Option<UnknownReason>,
}

impl Decision {
    pub fn yes(c: Certificate) -> Self {
        Decision {
            value: Tri::Yes,
            certificate: Some(c),
            reason: None,
        }
    }

    pub fn no(c: Certificate) -> Self {
        Decision {
            value: Tri::No,
            certificate: Some(c),
            reason: None,
        }
    }

    pub fn unknown(r: UnknownReason) -> Self {
        Decision {
            value: Tri::Unknown,
            certificate: None,
            reason: Some(r),
        }
    }

    pub(crate) fn implied(premise: Property, value: Tri) -> Self {
        let c = Certificate::Implied { premise, value };
        match value {
            Tri::Yes => Decision::yes(c),
            Tri::No => Decision::no(c),
            Tri::Unknown => unreachable!("only determined values imply"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub rank: usize,
    pub atomic: Tri,
    pub accp: Tri,
    pub bfm: Tri,
    pub ffm: Tri,
    pub fgm: Tri,
    pub ufm: Tri,
    pub hfm: Tri,
    pub ohfm: Tri,
    pub atoms: AtomSet,
    pub sigma: SigmaResult,
    pub certificates: BTreeMap<Property, Certificate>,
    pub unknown: BTreeMap<Property, UnknownReason>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub necessary_condition: Option<NecessaryScan>,
}

impl Verdict {
    pub(crate) fn assemble(
        rank: usize,
        decisions: [(Property, Decision); 8],
        atoms: AtomSet,
        sigma: SigmaResult,
        necessary_condition: Option<NecessaryScan>,
    ) -> Result<Self> {
        let mut v = Verdict {
            rank,
            atomic: Tri::Unknown,
            accp: Tri::Unknown,
            bfm: Tri::Unknown,
            ffm: Tri::Unknown,
            fgm: Tri::Unknown,
            ufm: Tri::Unknown,
            hfm: Tri::Unknown,
            ohfm: Tri::Unknown,
            atoms,
            sigma,
            certificates: BTreeMap::new(),
            unknown: BTreeMap::new(),
            necessary_condition,
        };
        for (prop, d) in decisions {
            *v.slot(prop) = d.value;
            if let Some(c) = d.certificate {
                v.certificates.insert(prop, c);
            }
            if let Some(r) = d.reason {
                v.unknown.insert(prop, r);
            }
        }
        v.check_consistency()?;
        Ok(v)
    }

    fn slot(&mut self, p: Property) -> &mut Tri {
        match p {
            Property::Atomic => &mut self.atomic,
            Property::Accp => &mut self.accp,
            Property::Bfm => &mut self.bfm,
            Property::Ffm => &mut self.ffm,
            Property::Fgm => &mut self.fgm,
            Property::Ufm => &mut self.ufm,
            Property::Hfm => &mut self.hfm,
            Property::Ohfm => &mut self.ohfm,
        }
    }

    pub fn get(&self, p: Property) -> Tri {
        match p {
            Property::Atomic => self.atomic,
            Property::Accp => self.accp,
            Property::Bfm => self.bfm,
            Property::Ffm => self.ffm,
            Property::Fgm => self.fgm,
            Property::Ufm => self.ufm,
            Property::Hfm => self.hfm,
            Property::Ohfm => self.ohfm,
        }
    }

    pub fn is_fully_determined(&self) -> bool {
        Property::ALL.iter().all(|&p| self.get(p).is_known())
    }

    /// Structural checks: every determined field has a certificate, every unknown a reason,
    /// and the implication diagram holds wherever both ends are determined.
    pub fn check_consistency(&self) -> Result<()> {
        use Property::*;
        let bad = |msg: String| Err(Error::InconsistentVerdict(msg));
        for p in Property::ALL {
            match self.get(p) {
                Tri::Unknown if !self.unknown.contains_key(&p) => {
                    return bad(format!("{p} is unknown without a reason"))
                }
                Tri::Yes | Tri::No if !self.certificates.contains_key(&p) => {
                    return bad(format!("{p} is determined without a certificate"))
                }
                _ => {}
            }
        }
        let chain = [Ufm, Ohfm, Fgm, Ffm, Accp, Atomic];
        for (i, &a) in chain.iter().enumerate() {
            for &b in &chain[i + 1..] {
                if self.get(a) == Tri::Yes && self.get(b) == Tri::No {
                    return bad(format!("{a} = yes but {b} = no"));
                }
            }
        }
        let eq_pairs = [(Ufm, Hfm), (Ffm, Bfm), (Bfm, Accp)];
        for (a, b) in eq_pairs {
            let (x, y) = (self.get(a), self.get(b));
            if x.is_known() && y.is_known() && x != y {
                return bad(format!("{a} = {x} but {b} = {y}"));
            }
        }
        if self.atomic == Tri::No {
            for p in Property::ALL {
                if self.get(p) == Tri::Yes {
                    return bad(format!("antimatter monoid marked {p} = yes"));
                }
            }
        }
        match (&self.atoms, self.atomic) {
            (AtomSet::Empty, a) if a != Tri::No => {
                return bad("empty atom set on a non-antimatter monoid".into())
            }
            (AtomSet::FinitePowers { .. } | AtomSet::AllPowers, a) if a != Tri::Yes => {
                return bad("atom set reported for a monoid not known to be atomic".into())
            }
            _ => {}
        }
        if let (Some(s), AtomSet::FinitePowers { up_to }) = (self.sigma.finite(), &self.atoms) {
            if s != up_to + 1 {
                return bad(format!("σ = {s} disagrees with atoms up to α^{up_to}"));
            }
        }
        for (p, c) in &self.certificates {
            if let Certificate::Implied { premise, value } = c {
                if self.get(*premise) != *value {
                    return bad(format!(
                        "{p} cites {premise} = {value}, which does not hold"
                    ));
                }
                if !implication_holds(*premise, *value, *p, self.get(*p)) {
                    return bad(format!(
                        "{premise} = {value} does not force {p} = {}",
                        self.get(*p)
                    ));
                }
            }
        }
        Ok(())
    }

    /// Re-verifies every certificate with exact arithmetic at the largest conjugate of α,
    /// where verdicts are computed.
    pub fn replay(&self, alpha: &Arc<AlgebraicNumber>) -> Result<()> {
        self.check_consistency()?;
        let canonical;
        let alpha = if alpha.is_largest_root() {
            alpha
        } else {
            canonical = Arc::new(alpha.canonical());
            &canonical
        };
        if alpha.degree() != self.rank {
            return Err(Error::Replay(format!(
                "rank {} differs from degree {}",
                self.rank,
                alpha.degree()
            )));
        }
        for (p, c) in &self.certificates {
            c.replay(alpha)
                .map_err(|e| Error::Replay(format!("{p}: {e}")))?;
        }
        if let SigmaResult::Finite { sigma, witness } = &self.sigma {
            Certificate::Sigma {
                sigma: *sigma,
                witness: witness.clone(),
            }
            .replay(alpha)?;
        }
        if let SigmaResult::Infinite { reason } = &self.sigma {
            if !reason.holds(alpha) {
                return Err(Error::Replay(format!(
                    "σ = ∞ rests on {}",
                    reason.describe()
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implication_table() {
        assert!(implication_holds(
            Property::Atomic,
            Tri::No,
            Property::Ufm,
            Tri::No
        ));
        assert!(implication_holds(
            Property::Ufm,
            Tri::Yes,
            Property::Hfm,
            Tri::Yes
        ));
        assert!(implication_holds(
            Property::Accp,
            Tri::No,
            Property::Ffm,
            Tri::No
        ));
        assert!(!implication_holds(
            Property::Ffm,
            Tri::Yes,
            Property::Fgm,
            Tri::Yes
        ));
        assert!(!implication_holds(
            Property::Atomic,
            Tri::Yes,
            Property::Accp,
            Tri::Yes
        ));
        assert!(!implication_holds(
            Property::Fgm,
            Tri::No,
            Property::Ffm,
            Tri::No
        ));
    }

    #[test]
    fn tri_serializes_lowercase() {
        assert_eq!(serde_json::to_string(&Tri::Unknown).unwrap(), "\"unknown\"");
        let m: BTreeMap<Property, Tri> = [(Property::Ohfm, Tri::Yes)].into();
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"ohfm":"yes"}"#);
    }

    #[test]
    fn atom_set_json_shape() {
        let s = serde_json::to_string(&AtomSet::FinitePowers { up_to: 1 }).unwrap();
        assert_eq!(s, r#"{"kind":"finite_powers","up_to":1}"#);
    }
}
