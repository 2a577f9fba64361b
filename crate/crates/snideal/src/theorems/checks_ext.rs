//! Checks on the two extension constructions, idealizations and
//! amalgamations, plus a structural audit of every built corpus ring.
//!
//! Instances carry element sets of the base (or target) ring; evals rebuild
//! them both on the spec lab used for classification and on the construction's
//! own copy of that ring, which indexes elements identically.

use crate::construct::{Construction, IdealizationData};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{nilradical_ideal, Ideal, MultSet};
use crate::ring::{HomSpec, RingSpec};

use super::checks_basic::{is_n_ideal, require};
use super::corpus::{each_lab, elems_u64, CorpusSpec};
use super::lab::LabStore;
use super::{CheckDef, Eval, Instance, Sink, TAG_VACUOUS};

fn module_scaled_into(data: &IdealizationData, ideal: &Ideal, nset: &ElemSet) -> bool {
    for r in ideal.elements().iter() {
        for m in 0..data.module.size() {
            if !nset.contains(data.module.act(r, m)) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------
// T-IDL

pub(super) const T_IDL: CheckDef = CheckDef {
    id: "T-IDL",
    summary: "an s-n idealization ideal forces its ring part to be s-n",
    gen: gen_idl,
    eval: eval_idl,
};

fn gen_idl(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        let (RingSpec::Idealization { of, .. }, Construction::Idealization(data)) =
            (spec, lab.construction())
        else {
            return Ok(());
        };
        let base_lab = store.lab(of)?;
        let subs = data.module.all_submodules();
        for s in base_lab.multsets() {
            let sv = elems_u64(s.elements());
            for ideal in base_lab.ideals()? {
                if !ideal.is_proper() || !s.is_disjoint_from(ideal) {
                    continue;
                }
                for nset in &subs {
                    if !module_scaled_into(data, ideal, nset) {
                        continue;
                    }
                    sink(
                        Instance::new("T-IDL", spec.clone())
                            .put("s", sv.clone())
                            .put("ideal", elems_u64(ideal.elements()))
                            .put("submodule", nset.iter().map(|m| m as u64).collect()),
                    )?;
                }
            }
        }
        Ok(())
    })
}

fn eval_idl(inst: &Instance, store: &LabStore) -> Result<Eval> {
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
    let nset = inst.elemset("submodule", data.module.size())?;
    require(data.module.is_submodule(&nset), "instance carries a non-submodule")?;
    require(module_scaled_into(data, &ideal, &nset), "the ideal does not scale M into N")?;
    let i_src = Ideal::from_elements(&data.source, ideal.elements())?;
    let s_src = MultSet::from_elements(&data.source, s.elements())?;
    let lifted = data.ideal_plus(&i_src, &nset)?;
    let smult = data.multset_plus_module(&s_src)?;
    if !smult.is_disjoint_from(&lifted) {
        return Ok(Eval::violation(format!(
            "{}: the lifted set meets the lifted ideal",
            lab.ring().display_name(),
        )));
    }
    if !lab.is_sn(&lifted, &smult)? {
        return Ok(Eval::pass().tagged(TAG_VACUOUS));
    }
    if !base_lab.is_sn(&ideal, &s)? {
        return Ok(Eval::violation(format!(
            "{}: {} is not s-n although its idealization lift is",
            base_lab.ring().display_name(),
            ideal.display(),
        )));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-ID

pub(super) const T_ID: CheckDef = CheckDef {
    id: "T-ID",
    summary: "crossing with the full module keeps s-n in step for both carried sets",
    gen: gen_id,
    eval: eval_id,
};

fn gen_id(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
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
                    Instance::new("T-ID", spec.clone())
                        .put("s", sv.clone())
                        .put("ideal", elems_u64(ideal.elements())),
                )?;
            }
        }
        Ok(())
    })
}

fn eval_id(inst: &Instance, store: &LabStore) -> Result<Eval> {
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
    let i_src = Ideal::from_elements(&data.source, ideal.elements())?;
    let s_src = MultSet::from_elements(&data.source, s.elements())?;
    let lifted = data.ideal_plus(&i_src, &ElemSet::full(data.module.size()))?;
    let s_zero = data.multset_plus_zero(&s_src)?;
    let s_full = data.multset_plus_module(&s_src)?;
    for (what, m) in [("S(+)0", &s_zero), ("S(+)M", &s_full)] {
        if !m.is_disjoint_from(&lifted) {
            return Ok(Eval::violation(format!(
                "{}: {what} meets the lifted ideal",
                lab.ring().display_name(),
            )));
        }
    }
    let b0 = base_lab.is_sn(&ideal, &s)?;
    let b1 = lab.is_sn(&lifted, &s_zero)?;
    let b2 = lab.is_sn(&lifted, &s_full)?;
    if b0 != b1 || b1 != b2 {
        return Ok(Eval::violation(format!(
            "{}: base s-n ({b0}), lift for S(+)0 ({b1}), lift for S(+)M ({b2}) disagree for {}",
            lab.ring().display_name(),
            ideal.display(),
        )));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-AMA

pub(super) const T_AMA: CheckDef = CheckDef {
    id: "T-AMA",
    summary: "glued lifts of an ideal step down from the wide set to the glued set to the base",
    gen: gen_ama,
    eval: eval_ama,
};

fn gen_ama(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        let RingSpec::Amalgamation { of, .. } = spec else {
            return Ok(());
        };
        if !matches!(lab.construction(), Construction::Amalgamation(_)) {
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
                    Instance::new("T-AMA", spec.clone())
                        .put("s", sv.clone())
                        .put("ideal", elems_u64(ideal.elements())),
                )?;
            }
        }
        Ok(())
    })
}

fn eval_ama(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let (RingSpec::Amalgamation { of, .. }, Construction::Amalgamation(data)) =
        (&inst.ring, lab.construction())
    else {
        return Err(Error::Precondition("instance ring is not an amalgamation".into()));
    };
    let base_lab = store.lab(of)?;
    let s = inst.multset("s", &base_lab)?;
    let ideal = inst.ideal("ideal", &base_lab)?;
    require(ideal.is_proper() && s.is_disjoint_from(&ideal), "need a proper disjoint ideal")?;
    let s_src = MultSet::from_elements(data.source(), s.elements())?;
    let i_src = Ideal::from_elements(data.source(), ideal.elements())?;
    let lifted = data.lift_ideal(&i_src)?;
    let wide = data.w_multset(&s_src)?;
    let glued = data.lift_multset(&s_src)?;
    for (what, m) in [("the wide set", &wide), ("the glued set", &glued)] {
        if !m.is_disjoint_from(&lifted) {
            return Ok(Eval::violation(format!(
                "{}: {what} meets the lifted ideal",
                lab.ring().display_name(),
            )));
        }
    }
    let b1 = lab.is_sn(&lifted, &wide)?;
    let b2 = lab.is_sn(&lifted, &glued)?;
    let b3 = base_lab.is_sn(&ideal, &s)?;
    if b1 && !b2 {
        return Ok(Eval::violation(format!(
            "{}: s-n for the wide set but not for the glued set on {}",
            lab.ring().display_name(),
            ideal.display(),
        )));
    }
    if b2 && !b3 {
        return Ok(Eval::violation(format!(
            "{}: lift of {} is s-n for the glued set but the base ideal is not s-n",
            lab.ring().display_name(),
            ideal.display(),
        )));
    }
    if data.j.elements().is_subset(data.target().nilpotents()) && b3 && !b1 {
        return Ok(Eval::violation(format!(
            "{}: base s-n does not climb back up although the glued ideal is nilpotent",
            lab.ring().display_name(),
        )));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-AMA2

pub(super) const T_AMA2: CheckDef = CheckDef {
    id: "T-AMA2",
    summary: "target-side glued ideals step down to the target, and back up for nilpotent glue",
    gen: gen_ama2,
    eval: eval_ama2,
};

fn gen_ama2(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        let RingSpec::Amalgamation { with, .. } = spec else {
            return Ok(());
        };
        if !matches!(lab.construction(), Construction::Amalgamation(_)) {
            return Ok(());
        }
        let tgt_lab = store.lab(with)?;
        for t in tgt_lab.multsets() {
            let tv = elems_u64(t.elements());
            for k in tgt_lab.ideals()? {
                if !k.is_proper() || !t.is_disjoint_from(k) {
                    continue;
                }
                sink(
                    Instance::new("T-AMA2", spec.clone())
                        .put("t", tv.clone())
                        .put("ideal", elems_u64(k.elements())),
                )?;
            }
        }
        Ok(())
    })
}

fn eval_ama2(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let (RingSpec::Amalgamation { with, .. }, Construction::Amalgamation(data)) =
        (&inst.ring, lab.construction())
    else {
        return Err(Error::Precondition("instance ring is not an amalgamation".into()));
    };
    if !data.hom.is_surjective() {
        return Ok(Eval::skip("the glueing map is not onto"));
    }
    let tgt_lab = store.lab(with)?;
    let t = inst.multset("t", &tgt_lab)?;
    let k = inst.ideal("ideal", &tgt_lab)?;
    require(k.is_proper() && t.is_disjoint_from(&k), "need a proper disjoint ideal")?;
    let t_dat = MultSet::from_elements(data.target(), t.elements())?;
    let k_dat = Ideal::from_elements(data.target(), k.elements())?;
    let kb = data.kbar(&k_dat)?;
    let tb = data.tbar(&t_dat)?;
    if !tb.is_disjoint_from(&kb) {
        return Ok(Eval::violation(format!(
            "{}: the carried set meets the glued target ideal",
            lab.ring().display_name(),
        )));
    }
    let up = lab.is_sn(&kb, &tb)?;
    let down = tgt_lab.is_sn(&k, &t)?;
    if up && !down {
        return Ok(Eval::violation(format!(
            "{}: glued lift of {} is s-n but the target ideal is not",
            lab.ring().display_name(),
            k.display(),
        )));
    }
    let nil_glue = data.j.elements().is_subset(data.target().nilpotents());
    let nil_ker = data.hom.kernel().elements().is_subset(data.source().nilpotents());
    if nil_glue && nil_ker && down && !up {
        return Ok(Eval::violation(format!(
            "{}: target s-n does not climb back up despite a nilpotent glue and kernel",
            lab.ring().display_name(),
        )));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-AMA-CORS

pub(super) const T_AMA_CORS: CheckDef = CheckDef {
    id: "T-AMA-CORS",
    summary: "glued-shape classification, carried target sets, n-ideal facets, duplications",
    gen: gen_ama_cors,
    eval: eval_ama_cors,
};

fn gen_ama_cors(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        let RingSpec::Amalgamation { of, hom, .. } = spec else {
            return Ok(());
        };
        let Construction::Amalgamation(data) = lab.construction() else {
            return Ok(());
        };
        let base_lab = store.lab(of)?;
        let nil_glue = data.j.elements().is_subset(data.target().nilpotents());
        for s in base_lab.multsets() {
            let sv = elems_u64(s.elements());
            if nil_glue {
                sink(
                    Instance::new("T-AMA-CORS", spec.clone())
                        .put("part", vec![1])
                        .put("s", sv.clone()),
                )?;
            }
            sink(
                Instance::new("T-AMA-CORS", spec.clone())
                    .put("part", vec![2])
                    .put("s", sv.clone()),
            )?;
            if matches!(hom, HomSpec::Identity) {
                sink(
                    Instance::new("T-AMA-CORS", spec.clone())
                        .put("part", vec![4])
                        .put("s", sv.clone()),
                )?;
            }
        }
        sink(Instance::new("T-AMA-CORS", spec.clone()).put("part", vec![3]))?;
        Ok(())
    })
}

fn eval_ama_cors(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let (RingSpec::Amalgamation { of, with, .. }, Construction::Amalgamation(data)) =
        (&inst.ring, lab.construction())
    else {
        return Err(Error::Precondition("instance ring is not an amalgamation".into()));
    };
    let base_lab = store.lab(of)?;
    let tgt_lab = store.lab(with)?;
    let nil_glue = data.j.elements().is_subset(data.target().nilpotents());
    let nil_ker = data.hom.kernel().elements().is_subset(data.source().nilpotents());
    match inst.one("part")? {
        1 => {
            require(nil_glue, "the glued-shape claim needs a nilpotent glue")?;
            let s = inst.multset("s", &base_lab)?;
            let s_src = MultSet::from_elements(data.source(), s.elements())?;
            let glued_set = data.lift_multset(&s_src)?;
            let zero_src = Ideal::generate(data.source(), &[data.source().zero()])?;
            let zero_lift = data.lift_ideal(&zero_src)?;
            for k in lab.ideals()? {
                if !k.is_proper() || !zero_lift.elements().is_subset(k.elements()) {
                    continue;
                }
                let mut proj = ElemSet::new(data.source().order());
                for x in k.elements().iter() {
                    proj.insert(data.pair(x).0);
                }
                let Ok(i_src) = Ideal::from_elements(data.source(), &proj) else {
                    return Ok(Eval::violation(format!(
                        "{}: the ring part of {} is not an ideal",
                        lab.ring().display_name(),
                        k.display(),
                    )));
                };
                if data.lift_ideal(&i_src)?.elements() != k.elements() {
                    return Ok(Eval::violation(format!(
                        "{}: {} contains the glue but is not of glued shape",
                        lab.ring().display_name(),
                        k.display(),
                    )));
                }
                let i_base = Ideal::from_elements(base_lab.ring(), &proj)?;
                let lhs = glued_set.is_disjoint_from(k) && lab.is_sn(k, &glued_set)?;
                let rhs = s.is_disjoint_from(&i_base)
                    && i_base.is_proper()
                    && base_lab.is_sn(&i_base, &s)?;
                if lhs != rhs {
                    return Ok(Eval::violation(format!(
                        "{}: {} s-n for the glued set ({lhs}) vs its ring part at the base ({rhs})",
                        lab.ring().display_name(),
                        k.display(),
                    )));
                }
            }
            Ok(Eval::pass())
        }
        2 => {
            let s = inst.multset("s", &base_lab)?;
            let s_src = MultSet::from_elements(data.source(), s.elements())?;
            let crossed = data.s_cross_fs(&s_src)?;
            let fs_dat = data.hom.image_multset(&s_src)?;
            let carried = data.tbar(&fs_dat)?;
            let fs_tgt = MultSet::from_elements(tgt_lab.ring(), fs_dat.elements())?;
            for k in tgt_lab.ideals()? {
                if !k.is_proper() || !fs_tgt.is_disjoint_from(k) {
                    continue;
                }
                let kb = data.kbar(&Ideal::from_elements(data.target(), k.elements())?)?;
                for (what, m) in [("the crossed set", &crossed), ("the carried set", &carried)] {
                    if !m.is_disjoint_from(&kb) {
                        return Ok(Eval::violation(format!(
                            "{}: {what} meets the glued lift of {}",
                            lab.ring().display_name(),
                            k.display(),
                        )));
                    }
                }
                let b1 = lab.is_sn(&kb, &crossed)?;
                let b2 = lab.is_sn(&kb, &carried)?;
                let b3 = tgt_lab.is_sn(k, &fs_tgt)?;
                if (b1 && !b2) || (b2 && !b3) {
                    return Ok(Eval::violation(format!(
                        "{}: chain breaks on {}: crossed ({b1}), carried ({b2}), target ({b3})",
                        lab.ring().display_name(),
                        k.display(),
                    )));
                }
                if nil_glue && nil_ker && b3 && !b1 {
                    return Ok(Eval::violation(format!(
                        "{}: target s-n does not climb back up to the crossed set on {}",
                        lab.ring().display_name(),
                        k.display(),
                    )));
                }
            }
            Ok(Eval::pass())
        }
        3 => {
            for ideal in base_lab.ideals()? {
                if !ideal.is_proper() {
                    continue;
                }
                let i_src = Ideal::from_elements(data.source(), ideal.elements())?;
                let up = is_n_ideal(&lab, &data.lift_ideal(&i_src)?)?;
                let down = is_n_ideal(&base_lab, ideal)?;
                if up && !down {
                    return Ok(Eval::violation(format!(
                        "{}: lift of {} is an n-ideal but the base ideal is not",
                        lab.ring().display_name(),
                        ideal.display(),
                    )));
                }
                if nil_glue && down && !up {
                    return Ok(Eval::violation(format!(
                        "{}: n-ideal {} does not lift despite a nilpotent glue",
                        base_lab.ring().display_name(),
                        ideal.display(),
                    )));
                }
            }
            for k in tgt_lab.ideals()? {
                if !k.is_proper() {
                    continue;
                }
                let k_dat = Ideal::from_elements(data.target(), k.elements())?;
                let up = is_n_ideal(&lab, &data.kbar(&k_dat)?)?;
                let down = is_n_ideal(&tgt_lab, k)?;
                if up && !down {
                    return Ok(Eval::violation(format!(
                        "{}: glued lift of {} is an n-ideal but the target ideal is not",
                        lab.ring().display_name(),
                        k.display(),
                    )));
                }
                if nil_glue && nil_ker && down && !up {
                    return Ok(Eval::violation(format!(
                        "{}: n-ideal {} does not glue up despite nilpotent glue and kernel",
                        tgt_lab.ring().display_name(),
                        k.display(),
                    )));
                }
            }
            Ok(Eval::pass())
        }
        4 => {
            let s = inst.multset("s", &base_lab)?;
            let s_src = MultSet::from_elements(data.source(), s.elements())?;
            let glued_set = data.lift_multset(&s_src)?;
            let carried = data.tbar(&MultSet::from_elements(data.target(), s.elements())?)?;
            for ideal in base_lab.ideals()? {
                if !ideal.is_proper() || !s.is_disjoint_from(ideal) {
                    continue;
                }
                let i_src = Ideal::from_elements(data.source(), ideal.elements())?;
                let lifted = data.lift_ideal(&i_src)?;
                if !glued_set.is_disjoint_from(&lifted) {
                    return Ok(Eval::violation(format!(
                        "{}: the glued set meets the duplicated lift of {}",
                        lab.ring().display_name(),
                        ideal.display(),
                    )));
                }
                let up = lab.is_sn(&lifted, &glued_set)?;
                let down = base_lab.is_sn(ideal, &s)?;
                if up && !down {
                    return Ok(Eval::violation(format!(
                        "{}: duplicated lift of {} is s-n but the base ideal is not",
                        lab.ring().display_name(),
                        ideal.display(),
                    )));
                }
                if nil_glue && down && !up {
                    return Ok(Eval::violation(format!(
                        "{}: s-n does not duplicate up for {} despite a nilpotent glue",
                        base_lab.ring().display_name(),
                        ideal.display(),
                    )));
                }
                let k_dat = Ideal::from_elements(data.target(), ideal.elements())?;
                let kb = data.kbar(&k_dat)?;
                if !carried.is_disjoint_from(&kb) {
                    return Ok(Eval::violation(format!(
                        "{}: the carried set meets the glued copy of {}",
                        lab.ring().display_name(),
                        ideal.display(),
                    )));
                }
                let up2 = lab.is_sn(&kb, &carried)?;
                if up2 && !down {
                    return Ok(Eval::violation(format!(
                        "{}: glued copy of {} is s-n but the ideal itself is not",
                        lab.ring().display_name(),
                        ideal.display(),
                    )));
                }
                if nil_glue && down && !up2 {
                    return Ok(Eval::violation(format!(
                        "{}: s-n does not carry to the glued copy of {} despite a nilpotent glue",
                        base_lab.ring().display_name(),
                        ideal.display(),
                    )));
                }
            }
            Ok(Eval::pass())
        }
        p => Err(Error::Precondition(format!("T-AMA-CORS has no part {p}"))),
    }
}

// ---------------------------------------------------------------------
// T-CONSTRUCT

pub(super) const T_CONSTRUCT: CheckDef = CheckDef {
    id: "T-CONSTRUCT",
    summary: "every built ring passes the axiom audit and its construction invariants",
    gen: gen_construct,
    eval: eval_construct,
};

fn gen_construct(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, _lab| sink(Instance::new("T-CONSTRUCT", spec.clone())))
}

fn eval_construct(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    let ring = lab.ring();
    if let Err(e) = ring.verify_axioms() {
        return Ok(Eval::violation(format!("{}: axiom audit: {e}", ring.display_name())));
    }
    match lab.construction() {
        Construction::Base | Construction::Product(_) => {}
        Construction::Quotient(qd) => {
            if !qd.projection.is_surjective() {
                return Ok(Eval::violation(format!(
                    "{}: the projection is not onto",
                    ring.display_name(),
                )));
            }
        }
        Construction::Localization(data) => {
            let zero_loc = Ideal::generate(ring, &[ring.zero()])?;
            if data.contract_ideal(&zero_loc)?.elements() != data.kernel.elements() {
                return Ok(Eval::violation(format!(
                    "{}: contracting the zero ideal misses the kernel",
                    ring.display_name(),
                )));
            }
        }
        Construction::Idealization(data) => {
            if data.lifted_nilradical() != *ring.nilpotents() {
                return Ok(Eval::violation(format!(
                    "{}: the predicted nilradical is off",
                    ring.display_name(),
                )));
            }
            let full = ElemSet::full(data.module.size());
            let sample = data.ideal_plus(&nilradical_ideal(&data.source), &full)?;
            if Ideal::from_elements(ring, sample.elements()).is_err() {
                return Ok(Eval::violation(format!(
                    "{}: a lifted ideal fails re-validation",
                    ring.display_name(),
                )));
            }
            let ones = MultSet::from_elements(
                &data.source,
                &ElemSet::from_iter(data.source.order(), [data.source.one()]),
            )?;
            if MultSet::from_elements(ring, data.multset_plus_module(&ones)?.elements()).is_err()
            {
                return Ok(Eval::violation(format!(
                    "{}: a lifted set fails re-validation",
                    ring.display_name(),
                )));
            }
        }
        Construction::Amalgamation(data) => {
            if data.j.elements().is_subset(data.target().nilpotents())
                && data.lifted_nilradical() != *ring.nilpotents()
            {
                return Ok(Eval::violation(format!(
                    "{}: the predicted nilradical is off",
                    ring.display_name(),
                )));
            }
            if data.source().order() * data.target().order() <= 1024 {
                let (pring, emb) = data.product_embedding(lab.caps())?;
                if pring.order() != data.source().order() * data.target().order() {
                    return Ok(Eval::violation(format!(
                        "{}: the ambient product has the wrong order",
                        ring.display_name(),
                    )));
                }
                if !emb.kernel().is_zero() {
                    return Ok(Eval::violation(format!(
                        "{}: the product embedding is not one-to-one",
                        ring.display_name(),
                    )));
                }
            }
        }
    }
    Ok(Eval::pass())
}
