//! Predicate checks for ideals: prime-like conditions, absolute and
//! relative to a multiplicative set.
//!
//! Every check reduces to one scan shape. For a fixed ideal I, precompute
//! rows[a] = { b : ab in I }. A predicate of the form
//! "ab in I and a not in A implies b in B" fails exactly when some a
//! outside A has rows[a] not contained in B; the least such (a, b) is the
//! reported counterexample. The relative predicates instantiate A and B
//! with colon sets (X : s) per candidate witness s.

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MultSet};
use crate::ring::{Elem, FiniteRing};

/// Absolute predicates: quantify over element pairs only.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AbsolutePredicate {
    Prime,
    Primary,
    NIdeal,
    RIdeal,
}

impl AbsolutePredicate {
    pub const ALL: [AbsolutePredicate; 4] = [
        AbsolutePredicate::Prime,
        AbsolutePredicate::Primary,
        AbsolutePredicate::NIdeal,
        AbsolutePredicate::RIdeal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AbsolutePredicate::Prime => "prime",
            AbsolutePredicate::Primary => "primary",
            AbsolutePredicate::NIdeal => "n-ideal",
            AbsolutePredicate::RIdeal => "r-ideal",
        }
    }
}

/// Predicates relative to a multiplicative set S: one witness s must work
/// for all pairs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelativePredicate {
    SPrime,
    SPrimary,
    SNIdeal,
}

impl RelativePredicate {
    pub const ALL: [RelativePredicate; 3] =
        [RelativePredicate::SPrime, RelativePredicate::SPrimary, RelativePredicate::SNIdeal];

    pub fn name(self) -> &'static str {
        match self {
            RelativePredicate::SPrime => "s-prime",
            RelativePredicate::SPrimary => "s-primary",
            RelativePredicate::SNIdeal => "s-n-ideal",
        }
    }
}

/// Outcome of one predicate check.
///
/// For relative predicates, `witnesses` lists every s in S that works
/// (ascending), so `holds` iff the list is nonempty; `counterexample` is
/// the least pair defeating every s at once, which may not exist even
/// when the predicate fails. For absolute predicates `witnesses` is empty
/// and `holds` iff `counterexample` is absent.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witnesses: Vec<Elem>,
    pub counterexample: Option<(Elem, Elem)>,
}

/// rows[a] = { b : ab in I } for a fixed ideal, shared across all
/// predicate checks on that ideal.
pub struct RowTable {
    rows: Vec<ElemSet>,
}

impl RowTable {
    pub fn build(ideal: &Ideal) -> RowTable {
        let ring = ideal.ring();
        if ring.zn_modulus().is_some() {
            // in Z_n the ideal is the multiples of d (its least nonzero
            // member, or n itself for <0>), and ab in <d> iff b is a
            // multiple of d / gcd(a, d); stepping through those multiples
            // beats scanning the whole row
            let n = ring.order();
            let d = ideal.elements().iter().nth(1).unwrap_or(n);
            let mut rows = Vec::with_capacity(n);
            for a in 0..n {
                let step = d / crate::ring::gcd(a as u64, d as u64) as usize;
                let mut row = ElemSet::new(n);
                let mut b = 0;
                while b < n {
                    row.insert(b);
                    b += step;
                }
                rows.push(row);
            }
            return RowTable { rows };
        }
        Self::build_generic(ideal)
    }

    fn build_generic(ideal: &Ideal) -> RowTable {
        let ring = ideal.ring();
        let n = ring.order();
        let mut rows = Vec::with_capacity(n);
        for a in 0..n {
            let mut row = ElemSet::new(n);
            ring.for_row(a, |b, prod| {
                if ideal.contains(prod) {
                    row.insert(b);
                }
                true
            });
            rows.push(row);
        }
        RowTable { rows }
    }

    pub fn row(&self, a: Elem) -> &ElemSet {
        &self.rows[a]
    }

    /// Least (a, b) with ab in I, a outside `exempt`, b outside `ok`.
    pub fn least_violation(&self, exempt: &ElemSet, ok: &ElemSet) -> Option<(Elem, Elem)> {
        for (a, row) in self.rows.iter().enumerate() {
            if exempt.contains(a) {
                continue;
            }
            if let Some(b) = row.first_not_in(ok) {
                return Some((a, b));
            }
        }
        None
    }
}

/// (X : s) = { b : sb in X } for an arbitrary element set X.
pub fn colon_set(ring: &FiniteRing, x: &ElemSet, s: Elem) -> ElemSet {
    let mut out = ElemSet::new(ring.order());
    ring.for_row(s, |b, prod| {
        if x.contains(prod) {
            out.insert(b);
        }
        true
    });
    out
}

fn absolute_masks<'a>(
    which: AbsolutePredicate,
    ideal: &'a Ideal,
    radical: &'a ElemSet,
) -> (&'a ElemSet, &'a ElemSet) {
    let ring = ideal.ring();
    match which {
        AbsolutePredicate::Prime => (ideal.elements(), ideal.elements()),
        AbsolutePredicate::Primary => (ideal.elements(), radical),
        AbsolutePredicate::NIdeal => (ring.nilpotents(), ideal.elements()),
        AbsolutePredicate::RIdeal => (ring.zero_divisors(), ideal.elements()),
    }
}

fn relative_masks<'a>(
    which: RelativePredicate,
    ideal: &'a Ideal,
    radical: &'a ElemSet,
) -> (&'a ElemSet, &'a ElemSet) {
    let ring = ideal.ring();
    match which {
        RelativePredicate::SPrime => (ideal.elements(), ideal.elements()),
        RelativePredicate::SPrimary => (ideal.elements(), radical),
        RelativePredicate::SNIdeal => (ring.nilpotents(), ideal.elements()),
    }
}

/// Memoizes the per-ideal scan state (row table, radical) behind the
/// predicate entry points.
pub struct Classifier {
    ideal: Ideal,
    rows: RowTable,
    radical: std::sync::OnceLock<ElemSet>,
}

impl Classifier {
    pub fn new(ideal: Ideal) -> Classifier {
        let rows = RowTable::build(&ideal);
        Classifier { ideal, rows, radical: std::sync::OnceLock::new() }
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn rows(&self) -> &RowTable {
        &self.rows
    }

    pub fn radical_set(&self) -> &ElemSet {
        self.radical.get_or_init(|| self.ideal.radical().elements().clone())
    }

    /// Checks an absolute predicate. The ideal must be proper.
    pub fn absolute(&self, which: AbsolutePredicate) -> Result<Verdict> {
        if !self.ideal.is_proper() {
            return Err(Error::NotProper);
        }
        let (exempt, ok) = absolute_masks(which, &self.ideal, self.radical_set());
        let counterexample = self.rows.least_violation(exempt, ok);
        Ok(Verdict { holds: counterexample.is_none(), witnesses: Vec::new(), counterexample })
    }

    fn relative_pre(&self, s: &MultSet) -> Result<()> {
        if s.ring().id() != self.ideal.ring().id() {
            return Err(Error::RingMismatch);
        }
        if !s.is_disjoint_from(&self.ideal) {
            return Err(Error::NotDisjoint);
        }
        Ok(())
    }

    fn relative_srcs(&self, which: RelativePredicate) -> (&ElemSet, &ElemSet) {
        // force the radical only when the predicate needs it
        let radical: &ElemSet = match which {
            RelativePredicate::SPrimary => self.radical_set(),
            _ => self.ideal.elements(),
        };
        relative_masks(which, &self.ideal, radical)
    }

    /// Checks a relative predicate against S, which must avoid the ideal.
    /// Collects every working witness and, when none exists, the least
    /// pair defeating all of S at once.
    pub fn relative(&self, s: &MultSet, which: RelativePredicate) -> Result<Verdict> {
        self.relative_pre(s)?;
        let ring = self.ideal.ring();
        let (exempt_src, ok_src) = self.relative_srcs(which);
        let mut witnesses = Vec::new();
        let mut union_exempt = ElemSet::new(ring.order());
        let mut union_ok = ElemSet::new(ring.order());
        for cand in s.elements().iter() {
            let exempt = colon_set(ring, exempt_src, cand);
            let ok = colon_set(ring, ok_src, cand);
            if self.rows.least_violation(&exempt, &ok).is_none() {
                witnesses.push(cand);
            }
            union_exempt.union_with(&exempt);
            union_ok.union_with(&ok);
        }
        let counterexample = if witnesses.is_empty() {
            self.rows.least_violation(&union_exempt, &union_ok)
        } else {
            None
        };
        Ok(Verdict { holds: !witnesses.is_empty(), witnesses, counterexample })
    }

    /// Like [`Classifier::relative`] but stops at the first witness;
    /// used by bulk enumeration where only the boolean matters.
    pub fn relative_holds(&self, s: &MultSet, which: RelativePredicate) -> Result<bool> {
        Ok(self.first_witness(s, which)?.is_some())
    }

    /// Least witness in S, without collecting the rest.
    pub fn first_witness(&self, s: &MultSet, which: RelativePredicate) -> Result<Option<Elem>> {
        self.relative_pre(s)?;
        let ring = self.ideal.ring();
        let (exempt_src, ok_src) = self.relative_srcs(which);
        for cand in s.elements().iter() {
            let exempt = colon_set(ring, exempt_src, cand);
            let ok = colon_set(ring, ok_src, cand);
            if self.rows.least_violation(&exempt, &ok).is_none() {
                return Ok(Some(cand));
            }
        }
        Ok(None)
    }

    /// Least pair defeating one particular candidate s.
    pub fn violation_for(&self, cand: Elem, which: RelativePredicate) -> Option<(Elem, Elem)> {
        let ring = self.ideal.ring();
        let (exempt_src, ok_src) = self.relative_srcs(which);
        let exempt = colon_set(ring, exempt_src, cand);
        let ok = colon_set(ring, ok_src, cand);
        self.rows.least_violation(&exempt, &ok)
    }
}

/// One-off absolute check without keeping the classifier around.
pub fn absolute_verdict(ideal: &Ideal, which: AbsolutePredicate) -> Result<Verdict> {
    Classifier::new(ideal.clone()).absolute(which)
}

/// One-off relative check.
pub fn relative_verdict(ideal: &Ideal, s: &MultSet, which: RelativePredicate) -> Result<Verdict> {
    Classifier::new(ideal.clone()).relative(s, which)
}

/// All ideals disjoint from S on which the relative nil-based predicate
/// holds, in canonical (size, elements) order.
pub fn all_s_n_ideals(
    ring: &std::sync::Arc<FiniteRing>,
    s: &MultSet,
    caps: &crate::ring::Caps,
) -> Result<Vec<Ideal>> {
    let mut out = Vec::new();
    for ideal in crate::ideal::all_ideals(ring, caps)? {
        if !s.is_disjoint_from(&ideal) {
            continue;
        }
        if Classifier::new(ideal.clone()).relative_holds(s, RelativePredicate::SNIdeal)? {
            out.push(ideal);
        }
    }
    Ok(out)
}

/// The inclusion-maximal members of [`all_s_n_ideals`].
pub fn maximal_s_n_ideals(
    ring: &std::sync::Arc<FiniteRing>,
    s: &MultSet,
    caps: &crate::ring::Caps,
) -> Result<Vec<Ideal>> {
    let all = all_s_n_ideals(ring, s, caps)?;
    Ok(all
        .iter()
        .filter(|i| {
            !all.iter().any(|j| j.len() > i.len() && i.elements().is_subset(j.elements()))
        })
        .cloned()
        .collect())
}

/// One predicate line of a classification report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PredicateOutcome {
    pub predicate: String,
    pub holds: bool,
    pub witnesses: Vec<Elem>,
    pub witness_labels: Vec<String>,
    pub counterexample: Option<(Elem, Elem)>,
    pub counterexample_labels: Option<(String, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MultSetSummary {
    pub elements: Vec<Elem>,
    pub labels: Vec<String>,
    pub disjoint_from_ideal: bool,
    pub within_units: bool,
}

/// (I : s) for one witness s.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColonSummary {
    pub s: Elem,
    pub s_label: String,
    pub elements: Vec<Elem>,
    pub display: String,
}

/// Everything the classifier can say about one (ideal, multiplicative
/// set) instance: all predicate verdicts plus the derived facts reports
/// lean on (radical, the least s scaling I into the nilradical, and the
/// colon ideals at the nil-based witnesses).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealReport {
    pub ring: String,
    pub order: usize,
    pub ideal: String,
    pub ideal_elements: Vec<Elem>,
    pub radical: String,
    pub radical_elements: Vec<Elem>,
    pub nilradical_elements: Vec<Elem>,
    pub multset: Option<MultSetSummary>,
    pub predicates: Vec<PredicateOutcome>,
    /// Least s in S with sI inside the nilradical, when one exists.
    pub least_s_scaling_into_nilradical: Option<Elem>,
    pub colon_by_witness: Vec<ColonSummary>,
}

fn outcome(ring: &FiniteRing, name: &str, v: &Verdict) -> PredicateOutcome {
    PredicateOutcome {
        predicate: name.to_string(),
        holds: v.holds,
        witnesses: v.witnesses.clone(),
        witness_labels: v.witnesses.iter().map(|&w| ring.label(w)).collect(),
        counterexample: v.counterexample,
        counterexample_labels: v
            .counterexample
            .map(|(a, b)| (ring.label(a), ring.label(b))),
    }
}

/// Builds the full report for one proper ideal, including the relative
/// predicates when a multiplicative set is supplied. Fails when the set
/// meets the ideal, mirroring the underlying checks.
pub fn classify_ideal(ideal: &Ideal, s: Option<&MultSet>) -> Result<IdealReport> {
    if !ideal.is_proper() {
        return Err(Error::NotProper);
    }
    let ring = ideal.ring().clone();
    let c = Classifier::new(ideal.clone());
    let radical = ideal.radical();
    let mut predicates = Vec::new();
    for which in AbsolutePredicate::ALL {
        predicates.push(outcome(&ring, which.name(), &c.absolute(which)?));
    }
    let mut multset = None;
    let mut least_scaler = None;
    let mut colons = Vec::new();
    if let Some(s) = s {
        let disjoint = s.is_disjoint_from(ideal);
        multset = Some(MultSetSummary {
            elements: s.elements().elements(),
            labels: s.elements().iter().map(|e| ring.label(e)).collect(),
            disjoint_from_ideal: disjoint,
            within_units: s.in_units(),
        });
        for which in RelativePredicate::ALL {
            let v = c.relative(s, which)?;
            predicates.push(outcome(&ring, which.name(), &v));
            if which == RelativePredicate::SNIdeal {
                for &w in &v.witnesses {
                    let colon = ideal.colon_elem(w)?;
                    colons.push(ColonSummary {
                        s: w,
                        s_label: ring.label(w),
                        elements: colon.elements().elements(),
                        display: colon.display(),
                    });
                }
            }
        }
        least_scaler = s.elements().iter().find(|&cand| {
            ideal.elements().iter().all(|x| ring.is_nilpotent(ring.mul(cand, x)))
        });
    }
    Ok(IdealReport {
        ring: ring.display_name(),
        order: ring.order(),
        ideal: ideal.display(),
        ideal_elements: ideal.elements().elements(),
        radical: radical.display(),
        radical_elements: radical.elements().elements(),
        nilradical_elements: ring.nilpotents().elements(),
        multset,
        predicates,
        least_s_scaling_into_nilradical: least_scaler,
        colon_by_witness: colons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{all_ideals, MultSet};
    use crate::ring::{Caps, FiniteRing};
    use std::sync::Arc;

    fn zn(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n, &Caps::default()).unwrap()
    }

    /// Definitional re-check of a relative verdict, one triple loop per s.
    fn naive_relative(ideal: &Ideal, s: &MultSet, which: RelativePredicate) -> Vec<Elem> {
        let ring = ideal.ring();
        let n = ring.order();
        let radical = ideal.radical();
        let mut witnesses = Vec::new();
        for cand in s.elements().iter() {
            let mut good = true;
            'pairs: for a in 0..n {
                for b in 0..n {
                    if !ideal.contains(ring.mul(a, b)) {
                        continue;
                    }
                    let sa = ring.mul(cand, a);
                    let sb = ring.mul(cand, b);
                    let violated = match which {
                        RelativePredicate::SPrime => !ideal.contains(sa) && !ideal.contains(sb),
                        RelativePredicate::SPrimary => !ideal.contains(sa) && !radical.contains(sb),
                        RelativePredicate::SNIdeal => {
                            !ring.is_nilpotent(sa) && !ideal.contains(sb)
                        }
                    };
                    if violated {
                        good = false;
                        break 'pairs;
                    }
                }
            }
            if good {
                witnesses.push(cand);
            }
        }
        witnesses
    }

    #[test]
    fn z12_ideal4_relative_to_closure_of_3() {
        let r = zn(12);
        let i = Ideal::generate(&r, &[4]).unwrap();
        let s = MultSet::close(&r, &[3]).unwrap();
        let c = Classifier::new(i.clone());

        let sn = c.relative(&s, RelativePredicate::SNIdeal).unwrap();
        assert!(sn.holds);
        assert_eq!(sn.witnesses, vec![3, 9]);
        assert_eq!(sn.counterexample, None);

        let sp = c.relative(&s, RelativePredicate::SPrime).unwrap();
        assert!(!sp.holds);
        assert!(sp.witnesses.is_empty());
        assert_eq!(sp.counterexample, Some((2, 2)));

        let sq = c.relative(&s, RelativePredicate::SPrimary).unwrap();
        assert!(sq.holds);
        assert_eq!(sq.witnesses, vec![1, 3, 9]);
    }

    #[test]
    fn z12_ideal4_absolute() {
        let r = zn(12);
        let i = Ideal::generate(&r, &[4]).unwrap();
        let c = Classifier::new(i);
        let n = c.absolute(AbsolutePredicate::NIdeal).unwrap();
        assert!(!n.holds);
        assert_eq!(n.counterexample, Some((2, 2)));
        let p = c.absolute(AbsolutePredicate::Prime).unwrap();
        assert!(!p.holds);
        assert_eq!(p.counterexample, Some((2, 2)));
        assert!(c.absolute(AbsolutePredicate::Primary).unwrap().holds);
        // every regular element of a finite ring is a unit, so r-ideal
        // never sees a violating pair
        assert!(c.absolute(AbsolutePredicate::RIdeal).unwrap().holds);
    }

    #[test]
    fn z8_n_ideals_are_all_proper_ideals() {
        let r = zn(8);
        let caps = Caps::default();
        let mut names = Vec::new();
        for i in all_ideals(&r, &caps).unwrap() {
            if !i.is_proper() {
                continue;
            }
            if absolute_verdict(&i, AbsolutePredicate::NIdeal).unwrap().holds {
                names.push(i.display());
            }
        }
        assert_eq!(names, ["\u{27e8}0\u{27e9}", "\u{27e8}4\u{27e9}", "\u{27e8}2\u{27e9}"]);
        // while Z_12 has none at all
        let r12 = zn(12);
        for i in all_ideals(&r12, &caps).unwrap() {
            if i.is_proper() {
                assert!(!absolute_verdict(&i, AbsolutePredicate::NIdeal).unwrap().holds);
            }
        }
    }

    #[test]
    fn z6_relative_to_1_3() {
        let r = zn(6);
        let s = MultSet::close(&r, &[3]).unwrap();
        assert_eq!(s.elements().elements(), vec![1, 3]);
        let caps = Caps::default();
        let mut holders = Vec::new();
        for i in all_ideals(&r, &caps).unwrap() {
            if !s.is_disjoint_from(&i) {
                continue;
            }
            let v = Classifier::new(i.clone()).relative(&s, RelativePredicate::SNIdeal).unwrap();
            if v.holds {
                assert_eq!(v.witnesses, vec![3]);
                holders.push(i.display());
            }
        }
        assert_eq!(holders, ["\u{27e8}0\u{27e9}", "\u{27e8}2\u{27e9}"]);
    }

    #[test]
    fn disjointness_is_enforced() {
        let r = zn(12);
        let i3 = Ideal::generate(&r, &[3]).unwrap();
        let s = MultSet::close(&r, &[3]).unwrap();
        let c = Classifier::new(i3);
        assert!(matches!(
            c.relative(&s, RelativePredicate::SNIdeal),
            Err(Error::NotDisjoint)
        ));
        let whole = Ideal::generate(&r, &[1]).unwrap();
        assert!(matches!(
            Classifier::new(whole).absolute(AbsolutePredicate::Prime),
            Err(Error::NotProper)
        ));
    }

    #[test]
    fn witness_sets_match_naive_definition() {
        let caps = Caps::default();
        for n in [6u64, 8, 12, 18, 20] {
            let r = zn(n);
            for seed in 0..r.order() {
                let s = MultSet::close(&r, &[seed]).unwrap();
                for i in all_ideals(&r, &caps).unwrap() {
                    if !s.is_disjoint_from(&i) {
                        continue;
                    }
                    let c = Classifier::new(i.clone());
                    for which in RelativePredicate::ALL {
                        let v = c.relative(&s, which).unwrap();
                        assert_eq!(
                            v.witnesses,
                            naive_relative(&i, &s, which),
                            "Z_{n} {} S=closure({seed}) {:?}",
                            i.display(),
                            which
                        );
                        if let Some((a, b)) = v.counterexample {
                            // the uniform pair defeats every s
                            assert!(i.contains(r.mul(a, b)));
                            for cand in s.elements().iter() {
                                let sa = r.mul(cand, a);
                                let sb = r.mul(cand, b);
                                let violated = match which {
                                    RelativePredicate::SPrime => {
                                        !i.contains(sa) && !i.contains(sb)
                                    }
                                    RelativePredicate::SPrimary => {
                                        !i.contains(sa) && !i.radical().contains(sb)
                                    }
                                    RelativePredicate::SNIdeal => {
                                        !r.is_nilpotent(sa) && !i.contains(sb)
                                    }
                                };
                                assert!(violated);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn absolute_checks_match_naive_definition() {
        let caps = Caps::default();
        for n in [6u64, 8, 9, 12, 16, 30] {
            let r = zn(n);
            for i in all_ideals(&r, &caps).unwrap() {
                if !i.is_proper() {
                    continue;
                }
                let c = Classifier::new(i.clone());
                let radical = i.radical();
                for which in AbsolutePredicate::ALL {
                    let v = c.absolute(which).unwrap();
                    let mut naive = true;
                    'out: for a in 0..r.order() {
                        for b in 0..r.order() {
                            if !i.contains(r.mul(a, b)) {
                                continue;
                            }
                            let bad = match which {
                                AbsolutePredicate::Prime => !i.contains(a) && !i.contains(b),
                                AbsolutePredicate::Primary => {
                                    !i.contains(a) && !radical.contains(b)
                                }
                                AbsolutePredicate::NIdeal => {
                                    !r.is_nilpotent(a) && !i.contains(b)
                                }
                                AbsolutePredicate::RIdeal => {
                                    r.is_regular(a) && !i.contains(b)
                                }
                            };
                            if bad {
                                naive = false;
                                break 'out;
                            }
                        }
                    }
                    assert_eq!(v.holds, naive, "Z_{n} {} {:?}", i.display(), which);
                }
            }
        }
    }

    #[test]
    fn prime_matches_quotient_by_maximal_structure_in_zn() {
        // in Z_n the prime ideals are exactly <p> for primes p dividing n
        let caps = Caps::default();
        for n in [12u64, 30, 36, 49, 60] {
            let r = zn(n);
            for i in all_ideals(&r, &caps).unwrap() {
                if !i.is_proper() {
                    continue;
                }
                let d = i.elements().elements().get(1).copied().unwrap_or(n as usize) as u64;
                let is_prime_divisor = d > 1 && (2..d).all(|k| d % k != 0) && d != n as u64 || {
                    // <0> is prime iff n is prime
                    i.is_zero() && (2..n).all(|k| n % k != 0)
                };
                let v = absolute_verdict(&i, AbsolutePredicate::Prime).unwrap();
                assert_eq!(v.holds, is_prime_divisor, "Z_{n} {}", i.display());
            }
        }
    }

    #[test]
    fn zn_row_shortcut_matches_generic_rows() {
        let caps = Caps::default();
        for n in [6u64, 12, 16, 30, 49] {
            let r = zn(n);
            for i in all_ideals(&r, &caps).unwrap() {
                let fast = RowTable::build(&i);
                let generic = RowTable::build_generic(&i);
                for a in 0..r.order() {
                    assert_eq!(fast.row(a), generic.row(a), "Z_{n} {} row {a}", i.display());
                }
            }
        }
    }

    #[test]
    fn enumeration_frozen_values() {
        let caps = Caps::default();
        let r12 = zn(12);
        let s = MultSet::close(&r12, &[3]).unwrap();
        let found: Vec<String> =
            all_s_n_ideals(&r12, &s, &caps).unwrap().iter().map(|i| i.display()).collect();
        assert_eq!(
            found,
            ["\u{27e8}0\u{27e9}", "\u{27e8}6\u{27e9}", "\u{27e8}4\u{27e9}", "\u{27e8}2\u{27e9}"]
        );
        let maximal: Vec<String> =
            maximal_s_n_ideals(&r12, &s, &caps).unwrap().iter().map(|i| i.display()).collect();
        assert_eq!(maximal, ["\u{27e8}2\u{27e9}"]);

        let r6 = zn(6);
        let s6 = MultSet::close(&r6, &[3]).unwrap();
        let maximal6: Vec<String> =
            maximal_s_n_ideals(&r6, &s6, &caps).unwrap().iter().map(|i| i.display()).collect();
        assert_eq!(maximal6, ["\u{27e8}2\u{27e9}"]);

        let r30 = zn(30);
        let s30 = MultSet::close(&r30, &[2]).unwrap();
        assert!(all_s_n_ideals(&r30, &s30, &caps).unwrap().is_empty());
        assert!(maximal_s_n_ideals(&r30, &s30, &caps).unwrap().is_empty());

        // the closure of {2} in Z_8 swallows 0, so nothing is disjoint
        let r8 = zn(8);
        let s8 = MultSet::close(&r8, &[2]).unwrap();
        assert!(s8.contains(0));
        assert!(all_s_n_ideals(&r8, &s8, &caps).unwrap().is_empty());
    }

    #[test]
    fn report_bundle_for_z12() {
        let r = zn(12);
        let i = Ideal::generate(&r, &[4]).unwrap();
        let s = MultSet::close(&r, &[3]).unwrap();
        let rep = classify_ideal(&i, Some(&s)).unwrap();
        assert_eq!(rep.ring, "Z_12");
        assert_eq!(rep.ideal, "\u{27e8}4\u{27e9}");
        assert_eq!(rep.radical, "\u{27e8}2\u{27e9}");
        assert_eq!(rep.nilradical_elements, vec![0, 6]);
        let by_name = |n: &str| rep.predicates.iter().find(|p| p.predicate == n).unwrap();
        assert!(!by_name("prime").holds);
        assert!(by_name("primary").holds);
        assert!(!by_name("n-ideal").holds);
        assert!(by_name("s-n-ideal").holds);
        assert_eq!(by_name("s-n-ideal").witnesses, vec![3, 9]);
        assert!(!by_name("s-prime").holds);
        assert_eq!(by_name("s-prime").counterexample, Some((2, 2)));
        // 3 * <4> = {0, 4*3=0, 8*3=0} = {0}, inside the nilradical
        assert_eq!(rep.least_s_scaling_into_nilradical, Some(3));
        assert_eq!(rep.colon_by_witness.len(), 2);
        assert_eq!(rep.colon_by_witness[0].s, 3);
        assert_eq!(rep.colon_by_witness[0].elements, vec![0, 4, 8]);
        // reports refuse non-disjoint sets and the whole ring
        let i3 = Ideal::generate(&r, &[3]).unwrap();
        assert!(matches!(classify_ideal(&i3, Some(&s)), Err(Error::NotDisjoint)));
        let whole = Ideal::generate(&r, &[1]).unwrap();
        assert!(matches!(classify_ideal(&whole, None), Err(Error::NotProper)));
        // absolute-only report works without S
        let rep2 = classify_ideal(&i, None).unwrap();
        assert_eq!(rep2.predicates.len(), 4);
        assert!(rep2.multset.is_none());
    }

    #[test]
    fn witness_of_one_means_absolute_holds() {
        let caps = Caps::default();
        let r = zn(24);
        for i in all_ideals(&r, &caps).unwrap() {
            for seed in [1usize, 5, 7, 13] {
                let s = MultSet::close(&r, &[seed]).unwrap();
                if !s.is_disjoint_from(&i) {
                    continue;
                }
                let c = Classifier::new(i.clone());
                let v = c.relative(&s, RelativePredicate::SNIdeal).unwrap();
                let abs = c.absolute(AbsolutePredicate::NIdeal).unwrap();
                assert_eq!(v.witnesses.contains(&1), abs.holds);
            }
        }
    }
}
