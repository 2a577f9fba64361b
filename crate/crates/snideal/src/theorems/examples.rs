//! Pinned worked examples and searches for behavior that separates the
//! relative notion from its absolute and subset variants.

use crate::classify::{AbsolutePredicate, RelativePredicate};
use crate::construct::Construction;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MultSet};
use crate::ring::RingSpec;

use super::checks_basic::{is_n_ideal, require};
use super::corpus::{each_lab, elems_u64, CorpusSpec};
use super::lab::LabStore;
use super::{CheckDef, Eval, Instance, Sink};

// ---------------------------------------------------------------------
// EXAMPLES

pub(super) const EXAMPLES: CheckDef = CheckDef {
    id: "EXAMPLES",
    summary: "pinned worked classifications on Z_12 and Z_6",
    gen: gen_examples,
    eval: eval_examples,
};

fn gen_examples(_c: &CorpusSpec, _store: &LabStore, sink: &mut Sink) -> Result<()> {
    sink(
        Instance::new("EXAMPLES", RingSpec::Zn(12))
            .put("part", vec![1])
            .put("s", vec![1, 3, 9])
            .put("ideal", vec![0, 4, 8]),
    )?;
    sink(
        Instance::new("EXAMPLES", RingSpec::Zn(12))
            .put("part", vec![2])
            .put("s", vec![1, 3, 9])
            .put("ideal", vec![0, 2, 4, 6, 8, 10]),
    )?;
    sink(Instance::new("EXAMPLES", RingSpec::Zn(6)).put("part", vec![3]).put("s", vec![1, 3]))?;
    Ok(())
}

fn eval_examples(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let s = inst.multset("s", &lab)?;
    match inst.one("part")? {
        1 => {
            let ideal = inst.ideal("ideal", &lab)?;
            let cls = lab.classifier(&ideal);
            let rel = cls.relative(&s, RelativePredicate::SNIdeal)?;
            if !rel.holds || !rel.witnesses.contains(&3) {
                return Ok(Eval::violation(format!(
                    "Z_12: <4> should be s-n for {} with witness 3, got {:?}",
                    s.display(),
                    rel.witnesses,
                )));
            }
            let abs = cls.absolute(AbsolutePredicate::NIdeal)?;
            if abs.holds || abs.counterexample != Some((2, 2)) {
                return Ok(Eval::violation(format!(
                    "Z_12: <4> should miss the absolute property at (2, 2), got {:?}",
                    abs.counterexample,
                )));
            }
            Ok(Eval::pass())
        }
        2 => {
            let ideal = inst.ideal("ideal", &lab)?;
            let cls = lab.classifier(&ideal);
            if !cls.absolute(AbsolutePredicate::Prime)?.holds {
                return Ok(Eval::violation("Z_12: <2> should be prime".to_string()));
            }
            for which in [RelativePredicate::SPrime, RelativePredicate::SNIdeal] {
                if !cls.relative(&s, which)?.holds {
                    return Ok(Eval::violation(format!(
                        "Z_12: <2> should satisfy {} for {}",
                        which.name(),
                        s.display(),
                    )));
                }
            }
            for cand in s.elements().iter() {
                if ideal.colon_elem(cand)?.elements() != ideal.elements() {
                    return Ok(Eval::violation(format!(
                        "Z_12: the colon of <2> by {cand} should be <2> itself",
                    )));
                }
            }
            if elems_u64(lab.nilradical().elements()) != vec![0, 6] {
                return Ok(Eval::violation("Z_12: nilradical should be {0, 6}".to_string()));
            }
            Ok(Eval::pass())
        }
        3 => {
            let ideals = lab.ideals()?;
            let mut got: Vec<Vec<u64>> = Vec::new();
            for &i in lab.sn_indices(&s)?.iter() {
                got.push(elems_u64(ideals[i].elements()));
            }
            got.sort();
            if got != vec![vec![0], vec![0, 2, 4]] {
                return Ok(Eval::violation(format!(
                    "Z_6: the s-n ideals for {} should be <0> and <2>, got {got:?}",
                    s.display(),
                )));
            }
            for ideal in ideals {
                if ideal.is_proper() && is_n_ideal(&lab, ideal)? {
                    return Ok(Eval::violation(format!(
                        "Z_6: {} should not satisfy the absolute property",
                        ideal.display(),
                    )));
                }
            }
            let two = lab.ideal_for(&ElemSet::from_iter(6, [0, 2, 4]))?;
            if !lab.is_sn(&two, &s)? {
                return Ok(Eval::violation("Z_6: <2> should be s-n for {1, 3}".to_string()));
            }
            Ok(Eval::pass())
        }
        p => Err(Error::Precondition(format!("EXAMPLES has no part {p}"))),
    }
}

// ---------------------------------------------------------------------
// SUBSET-CONVERSE

pub(super) const SUBSET_CONVERSE: CheckDef = CheckDef {
    id: "SUBSET-CONVERSE",
    summary: "searches for ideals that are s-n for a set but not for a subset",
    gen: gen_subset_converse,
    eval: eval_subset_converse,
};

fn gen_subset_converse(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    sink(
        Instance::new("SUBSET-CONVERSE", RingSpec::Zn(12))
            .put("s", vec![1, 3, 9])
            .put("t", vec![1])
            .put("expect", vec![1]),
    )?;
    each_lab(c, store, |spec, lab| {
        if lab.ring().order() > c.derived_base_max {
            return Ok(());
        }
        let msets = lab.multsets();
        for s in msets {
            for t in msets {
                if t.elements() == s.elements() || !t.elements().is_subset(s.elements()) {
                    continue;
                }
                let sv = elems_u64(s.elements());
                let tv = elems_u64(t.elements());
                if matches!(spec, RingSpec::Zn(12)) && sv == [1, 3, 9] && tv == [1] {
                    continue;
                }
                sink(
                    Instance::new("SUBSET-CONVERSE", spec.clone()).put("s", sv).put("t", tv),
                )?;
            }
        }
        Ok(())
    })
}

fn eval_subset_converse(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let s = inst.multset("s", &lab)?;
    let t = inst.multset("t", &lab)?;
    require(t.elements().is_subset(s.elements()), "expected T inside S")?;
    for ideal in lab.ideals()? {
        if !ideal.is_proper() || !s.is_disjoint_from(ideal) {
            continue;
        }
        if lab.is_sn(ideal, &s)? && !lab.is_sn(ideal, &t)? {
            return Ok(Eval::found(format!(
                "{}: {} is s-n for {} but not for the subset {}",
                lab.ring().display_name(),
                ideal.display(),
                s.display(),
                t.display(),
            )));
        }
    }
    if inst.data.contains_key("expect") {
        return Ok(Eval::violation("the pinned separation on Z_12 vanished".to_string()));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// AMA-NONEQUIV

pub(super) const AMA_NONEQUIV: CheckDef = CheckDef {
    id: "AMA-NONEQUIV",
    summary: "searches for glued ideals that are s-n for the glued set but not the wide set",
    gen: gen_ama_nonequiv,
    eval: eval_ama_nonequiv,
};

fn gen_ama_nonequiv(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    let pinned = RingSpec::Amalgamation {
        of: Box::new(RingSpec::Zn(6)),
        with: Box::new(RingSpec::Zn(6)),
        hom: crate::ring::HomSpec::Identity,
        ideal_gens: vec![3],
    };
    each_lab(c, store, |spec, lab| {
        let RingSpec::Amalgamation { of, .. } = spec else {
            return Ok(());
        };
        let Construction::Amalgamation(data) = lab.construction() else {
            return Ok(());
        };
        if data.j.elements().is_subset(data.target().nilpotents()) {
            return Ok(());
        }
        let base_lab = store.lab(of)?;
        for s in base_lab.multsets() {
            let sv = elems_u64(s.elements());
            let mut inst = Instance::new("AMA-NONEQUIV", spec.clone()).put("s", sv.clone());
            if *spec == pinned && sv == [1, 3] {
                inst = inst.put("expect", vec![1]);
            }
            sink(inst)?;
        }
        Ok(())
    })
}

fn eval_ama_nonequiv(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let (RingSpec::Amalgamation { of, .. }, Construction::Amalgamation(data)) =
        (&inst.ring, lab.construction())
    else {
        return Err(Error::Precondition("instance ring is not an amalgamation".into()));
    };
    require(
        !data.j.elements().is_subset(data.target().nilpotents()),
        "a nilpotent glue makes the two sets agree",
    )?;
    let base_lab = store.lab(of)?;
    let s = inst.multset("s", &base_lab)?;
    let s_src = MultSet::from_elements(data.source(), s.elements())?;
    let wide = data.w_multset(&s_src)?;
    let glued = data.lift_multset(&s_src)?;
    for ideal in base_lab.ideals()? {
        if !ideal.is_proper() || !s.is_disjoint_from(ideal) {
            continue;
        }
        let i_src = Ideal::from_elements(data.source(), ideal.elements())?;
        let lifted = data.lift_ideal(&i_src)?;
        if !wide.is_disjoint_from(&lifted) || !glued.is_disjoint_from(&lifted) {
            continue;
        }
        let glued_sn = lab.is_sn(&lifted, &glued)?;
        if base_lab.is_sn(ideal, &s)? && !glued_sn {
            return Ok(Eval::found(format!(
                "{}: {} is s-n at the base but its lift is not s-n for the glued set",
                lab.ring().display_name(),
                ideal.display(),
            )));
        }
        if glued_sn && !lab.is_sn(&lifted, &wide)? {
            return Ok(Eval::found(format!(
                "{}: lift of {} is s-n for the glued set but not for the wide set",
                lab.ring().display_name(),
                ideal.display(),
            )));
        }
    }
    if inst.data.contains_key("expect") {
        return Ok(Eval::violation(
            "the pinned wide/glued separation on the Z_6 duplication vanished".to_string(),
        ));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// IDEALIZ-CONVERSE

pub(super) const IDEALIZ_CONVERSE: CheckDef = CheckDef {
    id: "IDEALIZ-CONVERSE",
    summary: "searches for s-n ring parts whose idealization lifts are not s-n",
    gen: gen_idealiz_converse,
    eval: eval_idealiz_converse,
};

fn gen_idealiz_converse(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        let RingSpec::Idealization { of, .. } = spec else {
            return Ok(());
        };
        if !matches!(lab.construction(), Construction::Idealization(_)) {
            return Ok(());
        }
        let base_lab = store.lab(of)?;
        for s in base_lab.multsets() {
            let sv = elems_u64(s.elements());
            for ideal in base_lab.ideals()? {
                if !ideal.is_proper() || !s.is_disjoint_from(ideal) {
                    continue;
                }
                sink(
                    Instance::new("IDEALIZ-CONVERSE", spec.clone())
                        .put("s", sv.clone())
                        .put("ideal", elems_u64(ideal.elements())),
                )?;
            }
        }
        Ok(())
    })
}

fn eval_idealiz_converse(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let (RingSpec::Idealization { of, .. }, Construction::Idealization(data)) =
        (&inst.ring, lab.construction())
    else {
        return Err(Error::Precondition("instance ring is not an idealization".into()));
    };
    let base_lab = store.lab(of)?;
    let s = inst.multset("s", &base_lab)?;
    let ideal = inst.ideal("ideal", &base_lab)?;
    require(ideal.is_proper() && s.is_disjoint_from(&ideal), "need a proper disjoint ideal")?;
    if !base_lab.is_sn(&ideal, &s)? {
        return Ok(Eval::pass());
    }
    let i_src = Ideal::from_elements(&data.source, ideal.elements())?;
    let s_src = MultSet::from_elements(&data.source, s.elements())?;
    let smult = data.multset_plus_module(&s_src)?;
    for nset in data.module.all_submodules() {
        let mut scaled = true;
        'outer: for r in i_src.elements().iter() {
            for m in 0..data.module.size() {
                if !nset.contains(data.module.act(r, m)) {
                    scaled = false;
                    break 'outer;
                }
            }
        }
        if !scaled {
            continue;
        }
        let lifted = data.ideal_plus(&i_src, &nset)?;
        if !smult.is_disjoint_from(&lifted) {
            continue;
        }
        if !lab.is_sn(&lifted, &smult)? {
            return Ok(Eval::found(format!(
                "{}: {} is s-n at the base but its lift along a submodule of size {} is not",
                lab.ring().display_name(),
                ideal.display(),
                nset.len(),
            )));
        }
    }
    Ok(Eval::pass())
}
