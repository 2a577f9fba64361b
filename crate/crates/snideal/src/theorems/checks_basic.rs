//! Single-ring checks: witness structure, colon behavior, families of
//! ideals, and the collapsed regime where S sits inside the units.
//!
//! A finite ring leaves no gap between regular elements and units, so
//! every claim that hypothesizes S among the regular elements runs with
//! S inside U(R) and is tagged `collapsed-regime`. Instances whose
//! hypothesis fails pass with the `vacuous` tag; instances that cannot
//! exercise a claim at all are skipped with a reason.

use std::collections::BTreeSet;

use crate::classify::{colon_set, AbsolutePredicate, RelativePredicate};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{is_superfluous, Ideal};
use crate::ring::{Elem, RingSpec};

use super::corpus::{each_disjoint_ideal, each_lab, elems_u64, CorpusSpec};
use super::lab::{Lab, LabStore};
use super::{CheckDef, Eval, Instance, Sink, TAG_COLLAPSED, TAG_VACUOUS};

pub(super) const SKIP_NOT_UNITS: &str =
    "hypothesis S \u{2286} U(R) fails; on a finite ring the regular elements are the units";
const SKIP_NIL_MEET: &str = "S meets the nilradical";

pub(super) fn is_n_ideal(lab: &Lab, ideal: &Ideal) -> Result<bool> {
    Ok(lab.classifier(ideal).absolute(AbsolutePredicate::NIdeal)?.holds)
}

pub(super) fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what.to_string()))
    }
}

fn zero_ideal(lab: &Lab) -> Result<Ideal> {
    let ring = lab.ring();
    lab.ideal_for(&ElemSet::from_iter(ring.order(), [ring.zero()]))
}

// ---------------------------------------------------------------------
// T-P1

pub(super) const T_P1: CheckDef = CheckDef {
    id: "T-P1",
    summary: "witnesses scale the ideal into the nilradical; the nilradical is s-n exactly when s-prime",
    gen: gen_p1,
    eval: eval_p1,
};

fn gen_p1(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            let sv = elems_u64(s.elements());
            sink(Instance::new("T-P1", spec.clone()).put("part", vec![2]).put("s", sv.clone()))?;
            sink(Instance::new("T-P1", spec.clone()).put("part", vec![3]).put("s", sv.clone()))?;
            each_disjoint_ideal(lab, s, |ideal| {
                sink(
                    Instance::new("T-P1", spec.clone())
                        .put("part", vec![1])
                        .put("s", sv.clone())
                        .put("ideal", elems_u64(ideal.elements())),
                )
            })?;
        }
        Ok(())
    })
}

fn eval_p1(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    match inst.one("part")? {
        1 => {
            let ideal = inst.ideal("ideal", &lab)?;
            require(s.is_disjoint_from(&ideal), "instance ideal meets its mult set")?;
            let verdict = lab.classifier(&ideal).relative(&s, RelativePredicate::SNIdeal)?;
            if !verdict.holds {
                return Ok(Eval::pass().tagged(TAG_VACUOUS));
            }
            for &w in &verdict.witnesses {
                for x in ideal.elements().iter() {
                    if !ring.is_nilpotent(ring.mul(w, x)) {
                        return Ok(Eval::violation(format!(
                            "{}: witness {} fails to scale {} of {} into the nilradical",
                            ring.display_name(),
                            ring.label(w),
                            ring.label(x),
                            ideal.display(),
                        )));
                    }
                }
            }
            if s.in_units() {
                if !ideal.elements().is_subset(ring.nilpotents()) {
                    return Ok(Eval::violation(format!(
                        "{}: {} is s-n for S inside the units yet escapes the nilradical",
                        ring.display_name(),
                        ideal.display(),
                    )));
                }
                return Ok(Eval::pass().tagged(TAG_COLLAPSED));
            }
            Ok(Eval::pass())
        }
        2 => {
            let nil = lab.nilradical().clone();
            if !s.is_disjoint_from(&nil) {
                return Ok(Eval::skip(SKIP_NIL_MEET));
            }
            let cls = lab.classifier(&nil);
            let sn = cls.relative_holds(&s, RelativePredicate::SNIdeal)?;
            let sp = cls.relative_holds(&s, RelativePredicate::SPrime)?;
            if sn != sp {
                return Ok(Eval::violation(format!(
                    "{}: the nilradical is s-n ({sn}) but s-prime ({sp})",
                    ring.display_name(),
                )));
            }
            Ok(Eval::pass())
        }
        3 => {
            if !s.in_units() {
                return Ok(Eval::skip(SKIP_NOT_UNITS));
            }
            let zero = zero_ideal(&lab)?;
            let sn = lab.is_sn(&zero, &s)?;
            let n = is_n_ideal(&lab, &zero)?;
            if sn != n {
                return Ok(Eval::violation(format!(
                    "{}: zero ideal is s-n ({sn}) but n-ideal ({n}) although S lies in the units",
                    ring.display_name(),
                )));
            }
            Ok(Eval::pass().tagged(TAG_COLLAPSED))
        }
        p => Err(Error::Precondition(format!("T-P1 has no part {p}"))),
    }
}

// ---------------------------------------------------------------------
// T-CHAR

pub(super) const T_CHAR: CheckDef = CheckDef {
    id: "T-CHAR",
    summary: "the per-witness pair condition matches the ideal-pair condition",
    gen: gen_char,
    eval: eval_char,
};

fn gen_char(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            let sv = elems_u64(s.elements());
            each_disjoint_ideal(lab, s, |ideal| {
                sink(
                    Instance::new("T-CHAR", spec.clone())
                        .put("s", sv.clone())
                        .put("ideal", elems_u64(ideal.elements())),
                )
            })?;
        }
        Ok(())
    })
}

fn eval_char(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    let ideal = inst.ideal("ideal", &lab)?;
    require(s.is_disjoint_from(&ideal), "instance ideal meets its mult set")?;
    let cls = lab.classifier(&ideal);
    let ideals = lab.ideals()?;
    let nil = ring.nilpotents();
    let mut any_works = false;
    for cand in s.elements().iter() {
        let element_works = cls.violation_for(cand, RelativePredicate::SNIdeal).is_none();
        let ok = colon_set(&ring, ideal.elements(), cand);
        let exempt = colon_set(&ring, nil, cand);
        let mut ideal_works = true;
        for k in ideals {
            if k.elements().is_subset(&ok) {
                continue;
            }
            if !lab.colon_pair(&ideal, k)?.is_subset(&exempt) {
                ideal_works = false;
                break;
            }
        }
        if element_works != ideal_works {
            return Ok(Eval::violation(format!(
                "{}: s = {} splits the element form ({element_works}) from the ideal form ({ideal_works}) on {}",
                ring.display_name(),
                ring.label(cand),
                ideal.display(),
            )));
        }
        any_works |= ideal_works;
    }
    if lab.is_sn(&ideal, &s)? != any_works {
        return Ok(Eval::violation(format!(
            "{}: witness bookkeeping disagrees with the ideal form on {}",
            ring.display_name(),
            ideal.display(),
        )));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-CHAR2

pub(super) const T_CHAR2: CheckDef = CheckDef {
    id: "T-CHAR2",
    summary: "a combined witness settles ideal triples and element triples",
    gen: gen_char2,
    eval: eval_char2,
};

fn gen_char2(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        if lab.ring().order() > c.char2_order_max {
            return Ok(());
        }
        for s in lab.multsets() {
            let sv = elems_u64(s.elements());
            each_disjoint_ideal(lab, s, |ideal| {
                sink(
                    Instance::new("T-CHAR2", spec.clone())
                        .put("s", sv.clone())
                        .put("ideal", elems_u64(ideal.elements())),
                )
            })?;
        }
        Ok(())
    })
}

/// No triple of ideals outside both exempt sets multiplies into the ideal.
fn triple_ideal_form(lab: &Lab, ideal: &Ideal, s: Elem) -> Result<bool> {
    let ring = lab.ring();
    let ok = colon_set(ring, ideal.elements(), s);
    let exempt = colon_set(ring, lab.nilradical().elements(), s);
    let busy: Vec<&Ideal> = lab
        .ideals()?
        .iter()
        .filter(|k| !k.elements().is_subset(&exempt) && !k.elements().is_subset(&ok))
        .collect();
    for k3 in &busy {
        let c3 = lab.ideal_for(&lab.colon_pair(ideal, k3)?)?;
        for k2 in &busy {
            let c32 = lab.colon_pair(&c3, k2)?;
            for k1 in &busy {
                if k1.elements().is_subset(&c32) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// No element triple outside the union of the exempt sets multiplies into
/// the ideal.
fn triple_element_form(lab: &Lab, ideal: &Ideal, s: Elem) -> Result<bool> {
    let ring = lab.ring();
    let n = ring.order();
    let mut e = colon_set(ring, ideal.elements(), s);
    e.union_with(&colon_set(ring, lab.nilradical().elements(), s));
    let cls = lab.classifier(ideal);
    for a1 in 0..n {
        if e.contains(a1) {
            continue;
        }
        for a2 in a1..n {
            if e.contains(a2) {
                continue;
            }
            if cls.rows().row(ring.mul(a1, a2)).first_not_in(&e).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn eval_char2(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    let ideal = inst.ideal("ideal", &lab)?;
    require(s.is_disjoint_from(&ideal), "instance ideal meets its mult set")?;
    let nil = lab.nilradical().clone();
    if !s.is_disjoint_from(&nil) {
        return Ok(Eval::skip(SKIP_NIL_MEET));
    }
    let Some(w_rad) = lab.sn_witness(&nil, &s)? else {
        return Ok(Eval::pass().tagged(TAG_VACUOUS));
    };
    for cand in s.elements().iter() {
        if triple_ideal_form(&lab, &ideal, cand)? && !triple_element_form(&lab, &ideal, cand)? {
            return Ok(Eval::violation(format!(
                "{}: s = {} satisfies the ideal-triple form but not the element-triple form on {}",
                ring.display_name(),
                ring.label(cand),
                ideal.display(),
            )));
        }
    }
    let Some(w_ideal) = lab.sn_witness(&ideal, &s)? else {
        return Ok(Eval::pass().tagged(TAG_VACUOUS));
    };
    let star = ring.mul(w_ideal, w_rad);
    require(s.contains(star), "mult set is not closed under products")?;
    if !triple_ideal_form(&lab, &ideal, star)? {
        return Ok(Eval::violation(format!(
            "{}: combined witness {} fails the ideal-triple form on {}",
            ring.display_name(),
            ring.label(star),
            ideal.display(),
        )));
    }
    if !triple_element_form(&lab, &ideal, star)? {
        return Ok(Eval::violation(format!(
            "{}: combined witness {} fails the element-triple form on {}",
            ring.display_name(),
            ring.label(star),
            ideal.display(),
        )));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-COLON

pub(super) const T_COLON: CheckDef = CheckDef {
    id: "T-COLON",
    summary: "colon ideals by witnesses inherit and force the n-ideal property",
    gen: gen_colon,
    eval: eval_colon,
};

fn gen_colon(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            let sv = elems_u64(s.elements());
            each_disjoint_ideal(lab, s, |ideal| {
                sink(
                    Instance::new("T-COLON", spec.clone())
                        .put("s", sv.clone())
                        .put("ideal", elems_u64(ideal.elements())),
                )
            })?;
        }
        Ok(())
    })
}

fn eval_colon(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    let ideal = inst.ideal("ideal", &lab)?;
    require(s.is_disjoint_from(&ideal), "instance ideal meets its mult set")?;
    let verdict = lab.classifier(&ideal).relative(&s, RelativePredicate::SNIdeal)?;
    for cand in s.elements().iter() {
        let colon = ideal.colon_elem(cand)?;
        if is_n_ideal(&lab, &colon)? && !verdict.witnesses.contains(&cand) {
            return Ok(Eval::violation(format!(
                "{}: ({} : {}) is an n-ideal yet {} is no witness",
                ring.display_name(),
                ideal.display(),
                ring.label(cand),
                ring.label(cand),
            )));
        }
    }
    let nil = lab.nilradical().clone();
    for &w in &verdict.witnesses {
        let nw = nil.colon_elem(w)?;
        if nw.is_whole_ring() || !is_n_ideal(&lab, &nw)? {
            continue;
        }
        let iw = ideal.colon_elem(w)?;
        if !is_n_ideal(&lab, &iw)? {
            return Ok(Eval::violation(format!(
                "{}: nilradical colon by witness {} is an n-ideal but ({} : {}) is not",
                ring.display_name(),
                ring.label(w),
                ideal.display(),
                ring.label(w),
            )));
        }
    }
    if s.in_units() {
        for &w in &verdict.witnesses {
            if !is_n_ideal(&lab, &ideal.colon_elem(w)?)? {
                return Ok(Eval::violation(format!(
                    "{}: S lies in the units but ({} : {}) is not an n-ideal",
                    ring.display_name(),
                    ideal.display(),
                    ring.label(w),
                )));
            }
        }
        return Ok(Eval::pass().tagged(TAG_COLLAPSED));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-REG

pub(super) const T_REG: CheckDef = CheckDef {
    id: "T-REG",
    summary: "for S inside the units, an s-prime ideal is s-n exactly when some colon equals the nilradical",
    gen: gen_reg,
    eval: eval_reg,
};

fn gen_reg(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            let sv = elems_u64(s.elements());
            each_disjoint_ideal(lab, s, |ideal| {
                sink(
                    Instance::new("T-REG", spec.clone())
                        .put("s", sv.clone())
                        .put("ideal", elems_u64(ideal.elements())),
                )
            })?;
        }
        Ok(())
    })
}

fn eval_reg(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    if !s.in_units() {
        return Ok(Eval::skip(SKIP_NOT_UNITS));
    }
    let ideal = inst.ideal("ideal", &lab)?;
    require(s.is_disjoint_from(&ideal), "instance ideal meets its mult set")?;
    if !lab.classifier(&ideal).relative_holds(&s, RelativePredicate::SPrime)? {
        return Ok(Eval::pass().tagged(TAG_VACUOUS).tagged(TAG_COLLAPSED));
    }
    let lhs = lab.is_sn(&ideal, &s)?;
    let mut rhs = false;
    for cand in s.elements().iter() {
        if ideal.colon_elem(cand)?.elements() == ring.nilpotents() {
            rhs = true;
            break;
        }
    }
    if lhs != rhs {
        return Ok(Eval::violation(format!(
            "{}: s-prime {} is s-n ({lhs}) but a nilradical colon exists ({rhs})",
            ring.display_name(),
            ideal.display(),
        )));
    }
    Ok(Eval::pass().tagged(TAG_COLLAPSED))
}

// ---------------------------------------------------------------------
// T-UN

pub(super) const T_UN: CheckDef = CheckDef {
    id: "T-UN",
    summary: "with S inside the units, all proper ideals s-n matches all proper ideals n-ideals matches the UN property",
    gen: gen_un,
    eval: eval_un,
};

fn gen_un(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    sink(Instance::new("T-UN", RingSpec::Zn(6)).put("part", vec![2]).put("s", vec![1, 3]))?;
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            sink(
                Instance::new("T-UN", spec.clone())
                    .put("part", vec![1])
                    .put("s", elems_u64(s.elements())),
            )?;
        }
        Ok(())
    })
}

fn eval_un(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    match inst.one("part")? {
        1 => {
            if !s.in_units() {
                return Ok(Eval::skip(SKIP_NOT_UNITS));
            }
            let mut all_sn = true;
            let mut all_n = true;
            for ideal in lab.ideals()? {
                if !ideal.is_proper() {
                    continue;
                }
                all_sn &= lab.is_sn(ideal, &s)?;
                all_n &= is_n_ideal(&lab, ideal)?;
            }
            let un = ring.predicates().is_un_ring;
            if all_sn != un || all_n != un {
                return Ok(Eval::violation(format!(
                    "{}: all-s-n {all_sn}, all-n {all_n}, un-ring {un} disagree",
                    ring.display_name(),
                )));
            }
            Ok(Eval::pass().tagged(TAG_COLLAPSED))
        }
        2 => {
            let sn = lab.sn_indices(&s)?;
            let ideals = lab.ideals()?;
            let mut got: Vec<Vec<u64>> =
                sn.iter().map(|&i| elems_u64(ideals[i].elements())).collect();
            got.sort();
            let want = vec![vec![0u64], vec![0, 2, 4]];
            if got != want {
                return Ok(Eval::violation(format!(
                    "{}: s-n ideals for S = {} came out as {:?}",
                    ring.display_name(),
                    s.display(),
                    got,
                )));
            }
            for ideal in ideals {
                if ideal.is_proper() && is_n_ideal(&lab, ideal)? {
                    return Ok(Eval::violation(format!(
                        "{}: unexpected proper n-ideal {}",
                        ring.display_name(),
                        ideal.display(),
                    )));
                }
            }
            Ok(Eval::pass())
        }
        p => Err(Error::Precondition(format!("T-UN has no part {p}"))),
    }
}

// ---------------------------------------------------------------------
// T-INTEG

pub(super) const T_INTEG: CheckDef = CheckDef {
    id: "T-INTEG",
    summary: "reduced: domain iff some proper ideal is s-prime and s-n; field iff von Neumann regular with s-n zero ideal",
    gen: gen_integ,
    eval: eval_integ,
};

fn gen_integ(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            sink(Instance::new("T-INTEG", spec.clone()).put("s", elems_u64(s.elements())))?;
        }
        Ok(())
    })
}

fn eval_integ(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    if !s.in_units() {
        return Ok(Eval::skip(SKIP_NOT_UNITS));
    }
    let preds = ring.predicates();
    if ring.is_reduced() {
        let mut exists = false;
        for ideal in lab.ideals()? {
            if !ideal.is_proper() {
                continue;
            }
            if lab.classifier(ideal).relative_holds(&s, RelativePredicate::SPrime)?
                && lab.is_sn(ideal, &s)?
            {
                exists = true;
                break;
            }
        }
        if ring.is_domain() != exists {
            return Ok(Eval::violation(format!(
                "{}: domain {} but s-prime-and-s-n proper ideal exists {}",
                ring.display_name(),
                ring.is_domain(),
                exists,
            )));
        }
    }
    let zero = zero_ideal(&lab)?;
    let rhs = preds.is_von_neumann_regular && lab.is_sn(&zero, &s)?;
    if preds.is_field != rhs {
        return Ok(Eval::violation(format!(
            "{}: field {} but von-neumann-regular-with-s-n-zero {}",
            ring.display_name(),
            preds.is_field,
            rhs,
        )));
    }
    Ok(Eval::pass().tagged(TAG_COLLAPSED))
}

// ---------------------------------------------------------------------
// T-MAX

pub(super) const T_MAX: CheckDef = CheckDef {
    id: "T-MAX",
    summary: "maximal s-n ideals are s-prime and colon down to the nilradical",
    gen: gen_max,
    eval: eval_max,
};

fn gen_max(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            sink(Instance::new("T-MAX", spec.clone()).put("s", elems_u64(s.elements())))?;
        }
        Ok(())
    })
}

fn eval_max(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    if !s.in_units() {
        return Ok(Eval::skip(SKIP_NOT_UNITS));
    }
    let sn = lab.sn_indices(&s)?;
    if sn.is_empty() {
        return Ok(Eval::pass().tagged(TAG_VACUOUS).tagged(TAG_COLLAPSED));
    }
    let ideals = lab.ideals()?;
    for &i in sn.iter() {
        let dominated = sn
            .iter()
            .any(|&j| j != i && ideals[i].elements().is_subset(ideals[j].elements()));
        if dominated {
            continue;
        }
        let m = &ideals[i];
        if !lab.classifier(m).relative_holds(&s, RelativePredicate::SPrime)? {
            return Ok(Eval::violation(format!(
                "{}: maximal s-n ideal {} is not s-prime",
                ring.display_name(),
                m.display(),
            )));
        }
        let mut good = false;
        for cand in s.elements().iter() {
            if m.colon_elem(cand)?.elements() == ring.nilpotents() {
                good = true;
                break;
            }
        }
        if !good {
            return Ok(Eval::violation(format!(
                "{}: no colon of maximal s-n ideal {} equals the nilradical",
                ring.display_name(),
                m.display(),
            )));
        }
    }
    Ok(Eval::pass().tagged(TAG_COLLAPSED))
}

// ---------------------------------------------------------------------
// T-PROD

pub(super) const T_PROD: CheckDef = CheckDef {
    id: "T-PROD",
    summary: "an s-n ideal absorbs products and intersections with ideals meeting S",
    gen: gen_prod,
    eval: eval_prod,
};

fn gen_prod(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            let sv = elems_u64(s.elements());
            each_disjoint_ideal(lab, s, |ideal| {
                sink(
                    Instance::new("T-PROD", spec.clone())
                        .put("s", sv.clone())
                        .put("ideal", elems_u64(ideal.elements())),
                )
            })?;
        }
        Ok(())
    })
}

fn eval_prod(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    let ideal = inst.ideal("ideal", &lab)?;
    require(s.is_disjoint_from(&ideal), "instance ideal meets its mult set")?;
    if !lab.is_sn(&ideal, &s)? {
        return Ok(Eval::pass().tagged(TAG_VACUOUS));
    }
    for j in lab.ideals()? {
        if s.is_disjoint_from(j) {
            continue;
        }
        let prod = lab.product_pair(&ideal, j)?;
        if !lab.is_sn(&prod, &s)? {
            return Ok(Eval::violation(format!(
                "{}: {} times {} is not s-n",
                ring.display_name(),
                ideal.display(),
                j.display(),
            )));
        }
        let mut inter = ideal.elements().clone();
        inter.intersect_with(j.elements());
        let cap = lab.ideal_for(&inter)?;
        if !lab.is_sn(&cap, &s)? {
            return Ok(Eval::violation(format!(
                "{}: {} meet {} is not s-n",
                ring.display_name(),
                ideal.display(),
                j.display(),
            )));
        }
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-FAM

pub(super) const T_FAM: CheckDef = CheckDef {
    id: "T-FAM",
    summary: "finite intersections of s-n ideals stay s-n, tolerating members that meet S",
    gen: gen_fam,
    eval: eval_fam,
};

fn gen_fam(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            let sv = elems_u64(s.elements());
            sink(Instance::new("T-FAM", spec.clone()).put("part", vec![1]).put("s", sv.clone()))?;
            sink(Instance::new("T-FAM", spec.clone()).put("part", vec![2]).put("s", sv))?;
        }
        Ok(())
    })
}

/// Distinct pairwise intersections of the listed ideals.
fn pair_intersections(ideals: &[Ideal], picks: &[usize]) -> Vec<ElemSet> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (k, &a) in picks.iter().enumerate() {
        for &b in &picks[k + 1..] {
            let mut x = ideals[a].elements().clone();
            x.intersect_with(ideals[b].elements());
            if seen.insert(x.elements()) {
                out.push(x);
            }
        }
    }
    out
}

fn eval_fam(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    let sn = lab.sn_indices(&s)?;
    let ideals = lab.ideals()?;
    match inst.one("part")? {
        1 => {
            if sn.len() < 2 {
                return Ok(Eval::pass().tagged(TAG_VACUOUS));
            }
            let depth2 = pair_intersections(ideals, &sn);
            for x in &depth2 {
                if !lab.is_sn(&lab.ideal_for(x)?, &s)? {
                    return Ok(Eval::violation(format!(
                        "{}: a pairwise intersection of s-n ideals is not s-n",
                        ring.display_name(),
                    )));
                }
            }
            let mut seen3 = BTreeSet::new();
            for x in &depth2 {
                for &ci in sn.iter() {
                    let mut y = x.clone();
                    y.intersect_with(ideals[ci].elements());
                    if seen3.insert(y.elements()) && !lab.is_sn(&lab.ideal_for(&y)?, &s)? {
                        return Ok(Eval::violation(format!(
                            "{}: a triple intersection of s-n ideals is not s-n",
                            ring.display_name(),
                        )));
                    }
                }
            }
            Ok(Eval::pass())
        }
        2 => {
            if sn.is_empty() {
                return Ok(Eval::pass().tagged(TAG_VACUOUS));
            }
            let meets: Vec<usize> = (0..ideals.len())
                .filter(|&i| !s.is_disjoint_from(&ideals[i]))
                .collect();
            let mut seen = BTreeSet::new();
            for &m in &meets {
                for &w in sn.iter() {
                    let mut x = ideals[m].elements().clone();
                    x.intersect_with(ideals[w].elements());
                    if seen.insert(x.elements()) && !lab.is_sn(&lab.ideal_for(&x)?, &s)? {
                        return Ok(Eval::violation(format!(
                            "{}: {} meet s-n {} is not s-n although {} meets S",
                            ring.display_name(),
                            ideals[m].display(),
                            ideals[w].display(),
                            ideals[m].display(),
                        )));
                    }
                }
            }
            let depth2 = pair_intersections(ideals, &sn);
            let mut seen3 = BTreeSet::new();
            for &m in &meets {
                for x in &depth2 {
                    let mut y = ideals[m].elements().clone();
                    y.intersect_with(x);
                    if seen3.insert(y.elements()) && !lab.is_sn(&lab.ideal_for(&y)?, &s)? {
                        return Ok(Eval::violation(format!(
                            "{}: a meeting ideal joined to two s-n ideals is not s-n",
                            ring.display_name(),
                        )));
                    }
                }
            }
            for (k, &m1) in meets.iter().enumerate() {
                for &m2 in &meets[k..] {
                    let mut mm = ideals[m1].elements().clone();
                    mm.intersect_with(ideals[m2].elements());
                    if s.elements().is_disjoint(&mm) {
                        continue;
                    }
                    for &w in sn.iter() {
                        let mut y = mm.clone();
                        y.intersect_with(ideals[w].elements());
                        if seen3.insert(y.elements()) && !lab.is_sn(&lab.ideal_for(&y)?, &s)? {
                            return Ok(Eval::violation(format!(
                                "{}: two meeting ideals joined to an s-n ideal are not s-n",
                                ring.display_name(),
                            )));
                        }
                    }
                }
            }
            Ok(Eval::pass())
        }
        p => Err(Error::Precondition(format!("T-FAM has no part {p}"))),
    }
}

// ---------------------------------------------------------------------
// T-SUBSET

pub(super) const T_SUBSET: CheckDef = CheckDef {
    id: "T-SUBSET",
    summary: "growing the multiplicative set preserves s-n; cofactors give the converse",
    gen: gen_subset,
    eval: eval_subset,
};

fn gen_subset(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    sink(
        Instance::new("T-SUBSET", RingSpec::Zn(12))
            .put("part", vec![2])
            .put("s", vec![1, 3, 9])
            .put("t", vec![1])
            .put("ideal", vec![0, 4, 8]),
    )?;
    each_lab(c, store, |spec, lab| {
        let msets = lab.multsets();
        for (i, s) in msets.iter().enumerate() {
            for (j, t) in msets.iter().enumerate() {
                if i == j || !s.elements().is_subset(t.elements()) {
                    continue;
                }
                sink(
                    Instance::new("T-SUBSET", spec.clone())
                        .put("s", elems_u64(s.elements()))
                        .put("t", elems_u64(t.elements())),
                )?;
            }
        }
        Ok(())
    })
}

fn eval_subset(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    let t = inst.multset("t", &lab)?;
    if inst.data.contains_key("part") {
        require(inst.one("part")? == 2, "T-SUBSET has parts 2 only")?;
        let ideal = inst.ideal("ideal", &lab)?;
        require(t.elements().is_subset(s.elements()), "expected T inside S")?;
        let big = lab.is_sn(&ideal, &s)?;
        let small = lab.is_sn(&ideal, &t)?;
        if !big || small {
            return Ok(Eval::violation(format!(
                "{}: expected {} s-n for {} (got {big}) and not for {} (got {small})",
                ring.display_name(),
                ideal.display(),
                s.display(),
                t.display(),
            )));
        }
        return Ok(Eval::pass());
    }
    require(s.elements().is_subset(t.elements()), "expected S inside T")?;
    let telems: Vec<Elem> = t.elements().iter().collect();
    let cofactor = telems
        .iter()
        .all(|&x| telems.iter().any(|&y| s.contains(ring.mul(x, y))));
    for ideal in lab.ideals()? {
        if !ideal.is_proper() || !t.is_disjoint_from(ideal) {
            continue;
        }
        let a = lab.is_sn(ideal, &s)?;
        let b = lab.is_sn(ideal, &t)?;
        if a && !b {
            return Ok(Eval::violation(format!(
                "{}: {} is s-n for {} but not for the larger {}",
                ring.display_name(),
                ideal.display(),
                s.display(),
                t.display(),
            )));
        }
        if cofactor && b && !a {
            return Ok(Eval::violation(format!(
                "{}: cofactors land in {} yet {} is s-n only for {}",
                ring.display_name(),
                s.display(),
                ideal.display(),
                t.display(),
            )));
        }
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-SAT

pub(super) const T_SAT: CheckDef = CheckDef {
    id: "T-SAT",
    summary: "saturating the multiplicative set changes nothing",
    gen: gen_sat,
    eval: eval_sat,
};

fn gen_sat(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            sink(Instance::new("T-SAT", spec.clone()).put("s", elems_u64(s.elements())))?;
        }
        Ok(())
    })
}

fn eval_sat(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    if s.contains(ring.zero()) {
        return Ok(Eval::skip("S contains 0, so no ideal is disjoint from it"));
    }
    let sat = s.saturation();
    if !s.elements().is_subset(sat.elements()) {
        return Ok(Eval::violation(format!(
            "{}: saturation of {} lost members",
            ring.display_name(),
            s.display(),
        )));
    }
    for ideal in lab.ideals()? {
        if !ideal.is_proper() || !s.is_disjoint_from(ideal) {
            continue;
        }
        if !sat.is_disjoint_from(ideal) {
            return Ok(Eval::violation(format!(
                "{}: saturation of {} meets the disjoint ideal {}",
                ring.display_name(),
                s.display(),
                ideal.display(),
            )));
        }
        let plain = lab.is_sn(ideal, &s)?;
        let saturated = lab.is_sn(ideal, &sat)?;
        if plain != saturated {
            return Ok(Eval::violation(format!(
                "{}: {} is s-n for {} ({plain}) but for its saturation ({saturated})",
                ring.display_name(),
                ideal.display(),
                s.display(),
            )));
        }
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-SUM

pub(super) const T_SUM: CheckDef = CheckDef {
    id: "T-SUM",
    summary: "with S inside the units, s-n ideals are superfluous and closed under sums",
    gen: gen_sum,
    eval: eval_sum,
};

fn gen_sum(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        for s in lab.multsets() {
            sink(Instance::new("T-SUM", spec.clone()).put("s", elems_u64(s.elements())))?;
        }
        Ok(())
    })
}

fn eval_sum(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring().clone();
    let s = inst.multset("s", &lab)?;
    if !s.in_units() {
        return Ok(Eval::skip(SKIP_NOT_UNITS));
    }
    let sn = lab.sn_indices(&s)?;
    if sn.is_empty() {
        return Ok(Eval::pass().tagged(TAG_VACUOUS).tagged(TAG_COLLAPSED));
    }
    let ideals = lab.ideals()?;
    for &i in sn.iter() {
        let (superfluous, _) = is_superfluous(&ideals[i], lab.caps())?;
        if !superfluous {
            return Ok(Eval::violation(format!(
                "{}: s-n ideal {} is not superfluous",
                ring.display_name(),
                ideals[i].display(),
            )));
        }
    }
    let mut seen = BTreeSet::new();
    for (k, &a) in sn.iter().enumerate() {
        for &b in &sn[k..] {
            let sum = ideals[a].sum(&ideals[b])?;
            if !seen.insert(sum.elements().elements()) {
                continue;
            }
            if !sum.is_proper() {
                return Ok(Eval::violation(format!(
                    "{}: sum of s-n ideals {} and {} covers the ring",
                    ring.display_name(),
                    ideals[a].display(),
                    ideals[b].display(),
                )));
            }
            if !lab.is_sn(&lab.ideal_for(sum.elements())?, &s)? {
                return Ok(Eval::violation(format!(
                    "{}: sum of s-n ideals {} and {} is not s-n",
                    ring.display_name(),
                    ideals[a].display(),
                    ideals[b].display(),
                )));
            }
        }
    }
    Ok(Eval::pass().tagged(TAG_COLLAPSED))
}
