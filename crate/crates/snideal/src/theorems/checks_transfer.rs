//! Transport checks: localizations, ring maps, quotients, and two-factor
//! products.
//!
//! Derived rings are rebuilt from specs through the store, so every lab is
//! cached and every element index matches the deterministic construction
//! order of its spec. Maps are handled as raw index tables; images and
//! preimages are re-validated as ideals or closed sets on arrival.

use std::rc::Rc;

use crate::construct::{product_ideal, product_multset, whole_ideal, Construction};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{nilradical_ideal, Ideal, MultSet};
use crate::ring::{Elem, RingSpec};

use super::checks_basic::{is_n_ideal, require};
use super::corpus::{each_lab, elems_u64, CorpusSpec};
use super::lab::{Lab, LabStore};
use super::{CheckDef, Eval, Instance, Sink, TAG_VACUOUS};

fn image_set(map: &[Elem], set: &ElemSet, out_order: usize) -> ElemSet {
    let mut out = ElemSet::new(out_order);
    for x in set.iter() {
        out.insert(map[x]);
    }
    out
}

fn preimage_set(map: &[Elem], set: &ElemSet) -> ElemSet {
    let mut out = ElemSet::new(map.len());
    for (x, &fx) in map.iter().enumerate() {
        if set.contains(fx) {
            out.insert(x);
        }
    }
    out
}

/// Pushes S and every s-n ideal containing the kernel through an onto map;
/// the image must be s-n for the image set.
fn epi_forward(
    src: &Lab,
    dst: &Lab,
    map: &[Elem],
    s: &MultSet,
    kernel: &Ideal,
) -> Result<Option<Eval>> {
    let order = dst.ring().order();
    let fs = MultSet::from_elements(dst.ring(), &image_set(map, s.elements(), order))?;
    for i in src.ideals()? {
        if !i.is_proper() || !kernel.elements().is_subset(i.elements()) || !s.is_disjoint_from(i)
        {
            continue;
        }
        if !src.is_sn(i, s)? {
            continue;
        }
        let img = dst.ideal_for(&image_set(map, i.elements(), order))?;
        if !fs.is_disjoint_from(&img) {
            return Ok(Some(Eval::violation(format!(
                "{}: image of {} meets the image of {}",
                dst.ring().display_name(),
                i.display(),
                s.display(),
            ))));
        }
        if !dst.is_sn(&img, &fs)? {
            return Ok(Some(Eval::violation(format!(
                "{}: image of the s-n ideal {} is not s-n for the image set",
                dst.ring().display_name(),
                i.display(),
            ))));
        }
    }
    Ok(None)
}

/// Pulls every s-n ideal of the target back along a map whose kernel sits
/// inside the nilradical; the preimage must be s-n at the source.
fn preimage_back(src: &Lab, dst: &Lab, map: &[Elem], s: &MultSet) -> Result<Option<Eval>> {
    let order = dst.ring().order();
    let fs = MultSet::from_elements(dst.ring(), &image_set(map, s.elements(), order))?;
    for j in dst.ideals()? {
        if !j.is_proper() || !fs.is_disjoint_from(j) {
            continue;
        }
        if !dst.is_sn(j, &fs)? {
            continue;
        }
        let pre = src.ideal_for(&preimage_set(map, j.elements()))?;
        if !s.is_disjoint_from(&pre) {
            return Ok(Some(Eval::violation(format!(
                "{}: preimage of {} meets S",
                src.ring().display_name(),
                j.display(),
            ))));
        }
        if !src.is_sn(&pre, s)? {
            return Ok(Some(Eval::violation(format!(
                "{}: preimage of the s-n ideal {} is not s-n",
                src.ring().display_name(),
                j.display(),
            ))));
        }
    }
    Ok(None)
}

/// The quotient lab by a kernel, along with the raw projection table.
fn quotient_map(store: &LabStore, base: &RingSpec, kernel: &Ideal) -> Result<(Rc<Lab>, Vec<Elem>)> {
    let qspec = RingSpec::Quotient {
        of: Box::new(base.clone()),
        gens: elems_u64(kernel.elements()),
    };
    let qlab = store.lab(&qspec)?;
    let Construction::Quotient(qd) = qlab.construction() else {
        return Err(Error::Precondition("expected a quotient construction".into()));
    };
    let map = qd.projection.map().to_vec();
    require(map.len() == kernel.ring().order(), "projection source order mismatch")?;
    for x in kernel.elements().iter() {
        require(map[x] == qlab.ring().zero(), "projection does not kill its kernel")?;
    }
    Ok((qlab, map))
}

/// One-to-one maps used by the subring-style claims: an amalgamation into
/// the plain product, or a ring diagonally into its square.
fn embed_preimage(inst: &Instance, store: &LabStore, lab: &Rc<Lab>) -> Result<Eval> {
    let s = inst.multset("s", lab)?;
    let (dst, map) = match inst.one("hom")? {
        2 => {
            let Construction::Amalgamation(data) = lab.construction() else {
                return Err(Error::Precondition("instance ring is not an amalgamation".into()));
            };
            let RingSpec::Amalgamation { of, with, .. } = &inst.ring else {
                return Err(Error::Precondition("instance ring is not an amalgamation".into()));
            };
            let dst =
                store.lab(&RingSpec::Product(vec![of.as_ref().clone(), with.as_ref().clone()]))?;
            let map: Vec<Elem> = {
                let (factors, strides) = dst
                    .ring()
                    .product_parts()
                    .ok_or_else(|| Error::Precondition("expected a product ring".into()))?;
                require(factors[0].order() == data.hom.source().order(), "first factor order")?;
                require(factors[1].order() == data.hom.target().order(), "second factor order")?;
                (0..lab.ring().order())
                    .map(|x| {
                        let (a, y) = data.pair(x);
                        a * strides[0] + y * strides[1]
                    })
                    .collect()
            };
            (dst, map)
        }
        3 => {
            let dst = store.lab(&RingSpec::Product(vec![inst.ring.clone(), inst.ring.clone()]))?;
            let map: Vec<Elem> = {
                let (_, strides) = dst
                    .ring()
                    .product_parts()
                    .ok_or_else(|| Error::Precondition("expected a product ring".into()))?;
                (0..lab.ring().order()).map(|x| x * strides[0] + x * strides[1]).collect()
            };
            (dst, map)
        }
        h => return Err(Error::Precondition(format!("no embedding of kind {h}"))),
    };
    require(map[lab.ring().one()] == dst.ring().one(), "embedding misses the identity")?;
    require(map[lab.ring().zero()] == dst.ring().zero(), "embedding misses zero")?;
    if let Some(v) = preimage_back(lab, &dst, &map, &s)? {
        return Ok(v);
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-LOC

pub(super) const T_LOC: CheckDef = CheckDef {
    id: "T-LOC",
    summary: "s-n ideals extend to localizations and contract to witness colons",
    gen: gen_loc,
    eval: eval_loc,
};

fn gen_loc(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        if !matches!(spec, RingSpec::Zn(_)) || lab.ring().order() > c.derived_base_max {
            return Ok(());
        }
        let msets = lab.multsets();
        for t in msets {
            let tv = elems_u64(t.elements());
            if t.contains(lab.ring().zero()) {
                sink(
                    Instance::new("T-LOC", spec.clone())
                        .put("s", tv.clone())
                        .put("t", tv.clone()),
                )?;
                continue;
            }
            for s in msets {
                if !s.elements().is_subset(t.elements()) {
                    continue;
                }
                let sv = elems_u64(s.elements());
                for ideal in lab.ideals()? {
                    if !ideal.is_proper() || !t.is_disjoint_from(ideal) {
                        continue;
                    }
                    sink(
                        Instance::new("T-LOC", spec.clone())
                            .put("s", sv.clone())
                            .put("t", tv.clone())
                            .put("ideal", elems_u64(ideal.elements())),
                    )?;
                }
            }
        }
        Ok(())
    })
}

/// The localization lab at the saturation of `t`, so all subsets of one
/// saturation class share a single derived ring.
fn localization_at(store: &LabStore, base: &RingSpec, t: &MultSet) -> Result<Rc<Lab>> {
    let seed = elems_u64(t.saturation().elements());
    store.lab(&RingSpec::Localization { of: Box::new(base.clone()), seed })
}

fn eval_loc(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let base_lab = store.lab(&inst.ring)?;
    let t = inst.multset("t", &base_lab)?;
    if t.contains(base_lab.ring().zero()) {
        return Ok(Eval::skip("localizing at a set containing 0 collapses the ring"));
    }
    let s = inst.multset("s", &base_lab)?;
    require(s.elements().is_subset(t.elements()), "expected S inside T")?;
    let ideal = inst.ideal("ideal", &base_lab)?;
    require(t.is_disjoint_from(&ideal), "instance ideal meets T")?;
    let loc_lab = localization_at(store, &inst.ring, &t)?;
    let Construction::Localization(data) = loc_lab.construction() else {
        return Err(Error::Precondition("expected a localization construction".into()));
    };
    let src = data.hom.source();
    let i_src = Ideal::from_elements(src, ideal.elements())?;
    let ext = data.extend_ideal(&i_src)?;
    let mut ts = ElemSet::new(loc_lab.ring().order());
    for s_el in s.elements().iter() {
        for t_el in t.elements().iter() {
            ts.insert(data.class_of(s_el, t_el)?);
        }
    }
    let tinv_s = MultSet::from_elements(loc_lab.ring(), &ts)?;
    if !base_lab.is_sn(&ideal, &s)? {
        return Ok(Eval::pass().tagged(TAG_VACUOUS));
    }
    if !tinv_s.is_disjoint_from(&ext) {
        return Ok(Eval::violation(format!(
            "{}: the extension of {} meets the carried set",
            loc_lab.ring().display_name(),
            ideal.display(),
        )));
    }
    if !loc_lab.is_sn(&ext, &tinv_s)? {
        return Ok(Eval::violation(format!(
            "{}: the extension of the s-n ideal {} is not s-n for the carried set",
            loc_lab.ring().display_name(),
            ideal.display(),
        )));
    }
    if s.elements() == t.elements() && !is_n_ideal(&loc_lab, &ext)? {
        return Ok(Eval::violation(format!(
            "{}: extending along S itself should give an n-ideal from {}",
            loc_lab.ring().display_name(),
            ideal.display(),
        )));
    }
    let contr = data.contract_ideal(&ext)?;
    let mut matched = false;
    for u in s.elements().iter() {
        if ideal.colon_elem(u)?.elements() == contr.elements() {
            matched = true;
            break;
        }
    }
    if !matched {
        return Ok(Eval::violation(format!(
            "{}: the contraction of the extension of {} is no colon by a member of S",
            base_lab.ring().display_name(),
            ideal.display(),
        )));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-LOC-IFF

pub(super) const T_LOC_IFF: CheckDef = CheckDef {
    id: "T-LOC-IFF",
    summary: "s-n at the base matches an n-ideal extension plus colon contractions",
    gen: gen_loc_iff,
    eval: eval_loc_iff,
};

fn gen_loc_iff(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        if !matches!(spec, RingSpec::Zn(_)) || lab.ring().order() > c.derived_base_max {
            return Ok(());
        }
        for s in lab.multsets() {
            if s.contains(lab.ring().zero()) {
                continue;
            }
            let sv = elems_u64(s.elements());
            for ideal in lab.ideals()? {
                if !ideal.is_proper() || !s.is_disjoint_from(ideal) {
                    continue;
                }
                sink(
                    Instance::new("T-LOC-IFF", spec.clone())
                        .put("s", sv.clone())
                        .put("ideal", elems_u64(ideal.elements())),
                )?;
            }
        }
        Ok(())
    })
}

fn eval_loc_iff(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let base_lab = store.lab(&inst.ring)?;
    let s = inst.multset("s", &base_lab)?;
    if s.contains(base_lab.ring().zero()) {
        return Ok(Eval::skip("localizing at a set containing 0 collapses the ring"));
    }
    let ideal = inst.ideal("ideal", &base_lab)?;
    require(s.is_disjoint_from(&ideal), "instance ideal meets its mult set")?;
    let loc_lab = localization_at(store, &inst.ring, &s)?;
    let Construction::Localization(data) = loc_lab.construction() else {
        return Err(Error::Precondition("expected a localization construction".into()));
    };
    let src = data.hom.source();
    let ext = data.extend_ideal(&Ideal::from_elements(src, ideal.elements())?)?;
    let ext_nil = data.extend_ideal(&nilradical_ideal(src))?;
    let lhs = base_lab.is_sn(&ideal, &s)?;
    let c1 = is_n_ideal(&loc_lab, &ext)?;
    let contr = data.contract_ideal(&ext)?;
    let mut c2 = false;
    for u in s.elements().iter() {
        if ideal.colon_elem(u)?.elements() == contr.elements() {
            c2 = true;
            break;
        }
    }
    let contr_nil = data.contract_ideal(&ext_nil)?;
    let base_nil = base_lab.nilradical().clone();
    let mut c3 = false;
    for u in s.elements().iter() {
        if base_nil.colon_elem(u)?.elements() == contr_nil.elements() {
            c3 = true;
            break;
        }
    }
    let rhs = c1 && c2 && c3;
    if lhs != rhs {
        return Ok(Eval::violation(format!(
            "{}: {} s-n ({lhs}) vs extension n-ideal ({c1}), colon contraction ({c2}), nilradical colon contraction ({c3})",
            base_lab.ring().display_name(),
            ideal.display(),
        )));
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-HOM

pub(super) const T_HOM: CheckDef = CheckDef {
    id: "T-HOM",
    summary: "onto maps push s-n ideals forward; kernels inside the nilradical pull them back",
    gen: gen_hom,
    eval: eval_hom,
};

fn gen_hom(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        match lab.construction() {
            Construction::Base | Construction::Product(_) => {
                if lab.ring().order() > c.derived_base_max {
                    return Ok(());
                }
                for kernel in lab.ideals()? {
                    if !kernel.is_proper() || kernel.is_zero() {
                        continue;
                    }
                    let kv = elems_u64(kernel.elements());
                    for s in lab.multsets() {
                        sink(
                            Instance::new("T-HOM", spec.clone())
                                .put("hom", vec![0])
                                .put("kernel", kv.clone())
                                .put("s", elems_u64(s.elements())),
                        )?;
                    }
                }
                if lab.ring().order() * lab.ring().order() <= c.embedding_max {
                    for s in lab.multsets() {
                        sink(
                            Instance::new("T-HOM", spec.clone())
                                .put("hom", vec![3])
                                .put("s", elems_u64(s.elements())),
                        )?;
                    }
                }
            }
            Construction::Amalgamation(data) => {
                let small = data.hom.source().order() * data.hom.target().order()
                    <= c.embedding_max;
                for s in lab.multsets() {
                    sink(
                        Instance::new("T-HOM", spec.clone())
                            .put("hom", vec![1])
                            .put("s", elems_u64(s.elements())),
                    )?;
                    if small {
                        sink(
                            Instance::new("T-HOM", spec.clone())
                                .put("hom", vec![2])
                                .put("s", elems_u64(s.elements())),
                        )?;
                    }
                }
            }
            _ => {}
        }
        Ok(())
    })
}

fn eval_hom(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    match inst.one("hom")? {
        0 => {
            let s = inst.multset("s", &lab)?;
            let kernel = inst.ideal("kernel", &lab)?;
            require(
                kernel.is_proper() && !kernel.is_zero(),
                "projection kernel must be a proper nonzero ideal",
            )?;
            let (qlab, map) = quotient_map(store, &inst.ring, &kernel)?;
            if let Some(v) = epi_forward(&lab, &qlab, &map, &s, &kernel)? {
                return Ok(v);
            }
            if kernel.elements().is_subset(lab.ring().nilpotents()) {
                if let Some(v) = preimage_back(&lab, &qlab, &map, &s)? {
                    return Ok(v);
                }
            }
            Ok(Eval::pass())
        }
        1 => {
            let s = inst.multset("s", &lab)?;
            let Construction::Amalgamation(data) = lab.construction() else {
                return Err(Error::Precondition("instance ring is not an amalgamation".into()));
            };
            let RingSpec::Amalgamation { of, .. } = &inst.ring else {
                return Err(Error::Precondition("instance ring is not an amalgamation".into()));
            };
            let base_lab = store.lab(of)?;
            require(
                base_lab.ring().order() == data.hom.source().order(),
                "amalgamation base order mismatch",
            )?;
            let map: Vec<Elem> = (0..lab.ring().order()).map(|x| data.pair(x).0).collect();
            require(map[lab.ring().one()] == base_lab.ring().one(), "map misses the identity")?;
            let zero_only =
                ElemSet::from_iter(base_lab.ring().order(), [base_lab.ring().zero()]);
            let kernel = Ideal::from_elements(lab.ring(), &preimage_set(&map, &zero_only))?;
            if let Some(v) = epi_forward(&lab, &base_lab, &map, &s, &kernel)? {
                return Ok(v);
            }
            if kernel.elements().is_subset(lab.ring().nilpotents()) {
                if let Some(v) = preimage_back(&lab, &base_lab, &map, &s)? {
                    return Ok(v);
                }
            }
            Ok(Eval::pass())
        }
        2 | 3 => embed_preimage(inst, store, &lab),
        h => Err(Error::Precondition(format!("T-HOM has no map kind {h}"))),
    }
}

// ---------------------------------------------------------------------
// T-QUOT

pub(super) const T_QUOT: CheckDef = CheckDef {
    id: "T-QUOT",
    summary: "quotients transport s-n both ways once the kernel sits inside the nilradical",
    gen: gen_quot,
    eval: eval_quot,
};

fn gen_quot(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        match lab.construction() {
            Construction::Base | Construction::Product(_) => {
                if lab.ring().order() > c.derived_base_max {
                    return Ok(());
                }
                for kernel in lab.ideals()? {
                    if !kernel.is_proper() || kernel.is_zero() {
                        continue;
                    }
                    let kv = elems_u64(kernel.elements());
                    for s in lab.multsets() {
                        if !s.is_disjoint_from(kernel) {
                            continue;
                        }
                        sink(
                            Instance::new("T-QUOT", spec.clone())
                                .put("kernel", kv.clone())
                                .put("s", elems_u64(s.elements())),
                        )?;
                    }
                }
                if lab.ring().order() * lab.ring().order() <= c.embedding_max {
                    for s in lab.multsets() {
                        sink(
                            Instance::new("T-QUOT", spec.clone())
                                .put("part", vec![2])
                                .put("hom", vec![3])
                                .put("s", elems_u64(s.elements())),
                        )?;
                    }
                }
            }
            Construction::Amalgamation(data) => {
                if data.hom.source().order() * data.hom.target().order() <= c.embedding_max {
                    for s in lab.multsets() {
                        sink(
                            Instance::new("T-QUOT", spec.clone())
                                .put("part", vec![2])
                                .put("hom", vec![2])
                                .put("s", elems_u64(s.elements())),
                        )?;
                    }
                }
            }
            _ => {}
        }
        Ok(())
    })
}

fn eval_quot(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let lab = store.lab(&inst.ring)?;
    if inst.data.contains_key("part") {
        require(inst.one("part")? == 2, "T-QUOT has parts 2 only")?;
        return embed_preimage(inst, store, &lab);
    }
    let s = inst.multset("s", &lab)?;
    let kernel = inst.ideal("kernel", &lab)?;
    require(
        kernel.is_proper() && !kernel.is_zero(),
        "quotient kernel must be a proper nonzero ideal",
    )?;
    require(s.is_disjoint_from(&kernel), "instance kernel meets its mult set")?;
    let (qlab, map) = quotient_map(store, &inst.ring, &kernel)?;
    let sb = MultSet::from_elements(
        qlab.ring(),
        &image_set(&map, s.elements(), qlab.ring().order()),
    )?;
    let conv = kernel.elements().is_subset(lab.ring().nilpotents());
    for j in lab.ideals()? {
        if !j.is_proper()
            || !kernel.elements().is_subset(j.elements())
            || !s.is_disjoint_from(j)
        {
            continue;
        }
        let jb = qlab.ideal_for(&image_set(&map, j.elements(), qlab.ring().order()))?;
        if !sb.is_disjoint_from(&jb) {
            return Ok(Eval::violation(format!(
                "{}: image of {} meets the image mult set",
                qlab.ring().display_name(),
                j.display(),
            )));
        }
        let lhs = lab.is_sn(j, &s)?;
        let rhs = qlab.is_sn(&jb, &sb)?;
        if lhs && !rhs {
            return Ok(Eval::violation(format!(
                "{}: image of the s-n ideal {} is not s-n in the quotient",
                qlab.ring().display_name(),
                j.display(),
            )));
        }
        if conv && rhs && !lhs {
            return Ok(Eval::violation(format!(
                "{}: {} is not s-n although its image is and the kernel is nilpotent",
                lab.ring().display_name(),
                j.display(),
            )));
        }
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-CART

pub(super) const T_CART: CheckDef = CheckDef {
    id: "T-CART",
    summary: "a factor ideal crossed with the whole ring is s-n exactly when the other factor set meets its nilradical",
    gen: gen_cart,
    eval: eval_cart,
};

fn gen_cart(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    sink(
        Instance::new("T-CART", RingSpec::Product(vec![RingSpec::Zn(12), RingSpec::Zn(12)]))
            .put("part", vec![2])
            .put("s", vec![1, 3, 9])
            .put("s2", vec![1, 3, 9])
            .put("ideal", vec![0, 4, 8])
            .put("defeat", vec![14]),
    )?;
    each_product(c, store, sink, "T-CART")
}

/// Every two-factor product paired with every seed pair of factor sets.
fn each_product(c: &CorpusSpec, store: &LabStore, sink: &mut Sink, id: &str) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        let RingSpec::Product(parts) = spec else {
            return Ok(());
        };
        if parts.len() != 2 || !matches!(lab.construction(), Construction::Product(_)) {
            return Ok(());
        }
        let la = store.lab(&parts[0])?;
        let lb = store.lab(&parts[1])?;
        for sa in la.multsets() {
            for sb in lb.multsets() {
                sink(
                    Instance::new(id, spec.clone())
                        .put("s", elems_u64(sa.elements()))
                        .put("s2", elems_u64(sb.elements())),
                )?;
            }
        }
        Ok(())
    })
}

struct ProductCtx {
    plab: Rc<Lab>,
    la: Rc<Lab>,
    lb: Rc<Lab>,
}

fn product_ctx(inst: &Instance, store: &LabStore) -> Result<ProductCtx> {
    let RingSpec::Product(parts) = &inst.ring else {
        return Err(Error::Precondition("instance ring is not a product".into()));
    };
    require(parts.len() == 2, "expected exactly two factors")?;
    Ok(ProductCtx {
        plab: store.lab(&inst.ring)?,
        la: store.lab(&parts[0])?,
        lb: store.lab(&parts[1])?,
    })
}

fn eval_cart(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let cx = product_ctx(inst, store)?;
    let ring = cx.plab.ring().clone();
    let sa = inst.multset("s", &cx.la)?;
    let sb = inst.multset("s2", &cx.lb)?;
    let (fa, fb) = {
        let (factors, _) = ring
            .product_parts()
            .ok_or_else(|| Error::Precondition("expected a product ring".into()))?;
        (factors[0].clone(), factors[1].clone())
    };
    let sa_f = MultSet::from_elements(&fa, sa.elements())?;
    let sb_f = MultSet::from_elements(&fb, sb.elements())?;
    let sxs = product_multset(&ring, &[&sa_f, &sb_f])?;
    if inst.data.contains_key("part") {
        require(inst.one("part")? == 2, "T-CART has parts 2 only")?;
        let ia = inst.elemset("ideal", fa.order())?;
        let lifted = product_ideal(&ring, &[&Ideal::from_elements(&fa, &ia)?, &whole_ideal(&fb)])?;
        if cx.plab.is_sn(&lifted, &sxs)? {
            return Ok(Eval::violation(format!(
                "{}: the pinned crossed ideal is s-n after all",
                ring.display_name(),
            )));
        }
        let e = inst.one("defeat")? as Elem;
        require(e < ring.order(), "defeating element out of range")?;
        if !lifted.contains(ring.mul(e, e)) {
            return Ok(Eval::violation(format!(
                "{}: the defeating square is outside the crossed ideal",
                ring.display_name(),
            )));
        }
        for t in sxs.elements().iter() {
            let te = ring.mul(t, e);
            if ring.is_nilpotent(te) || lifted.contains(te) {
                return Ok(Eval::violation(format!(
                    "{}: candidate {} is not defeated by the pinned pair",
                    ring.display_name(),
                    ring.label(t),
                )));
            }
        }
        return Ok(Eval::pass());
    }
    let nil_meet_a = !sa.is_disjoint_from(cx.la.nilradical());
    let nil_meet_b = !sb.is_disjoint_from(cx.lb.nilradical());
    for ia in cx.la.ideals()? {
        if !ia.is_proper() || !sa.is_disjoint_from(ia) {
            continue;
        }
        let lifted =
            product_ideal(&ring, &[&Ideal::from_elements(&fa, ia.elements())?, &whole_ideal(&fb)])?;
        let lhs = cx.plab.is_sn(&lifted, &sxs)?;
        let rhs = cx.la.is_sn(ia, &sa)? && nil_meet_b;
        if lhs != rhs {
            return Ok(Eval::violation(format!(
                "{}: {} x R' s-n ({lhs}) vs factor s-n with co-factor nilpotent meet ({rhs})",
                ring.display_name(),
                ia.display(),
            )));
        }
    }
    for ib in cx.lb.ideals()? {
        if !ib.is_proper() || !sb.is_disjoint_from(ib) {
            continue;
        }
        let lifted =
            product_ideal(&ring, &[&whole_ideal(&fa), &Ideal::from_elements(&fb, ib.elements())?])?;
        let lhs = cx.plab.is_sn(&lifted, &sxs)?;
        let rhs = cx.lb.is_sn(ib, &sb)? && nil_meet_a;
        if lhs != rhs {
            return Ok(Eval::violation(format!(
                "{}: R x {} s-n ({lhs}) vs factor s-n with co-factor nilpotent meet ({rhs})",
                ring.display_name(),
                ib.display(),
            )));
        }
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-CROSS-NEG

pub(super) const T_CROSS_NEG: CheckDef = CheckDef {
    id: "T-CROSS-NEG",
    summary: "a full product of proper disjoint factor ideals is never s-n for a product set",
    gen: gen_cross_neg,
    eval: eval_cross_neg,
};

fn gen_cross_neg(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, lab| {
        let RingSpec::Product(parts) = spec else {
            return Ok(());
        };
        if parts.len() != 2 {
            return Ok(());
        }
        let la = store.lab(&parts[0])?;
        let lb = store.lab(&parts[1])?;
        let full = u64::from(lab.ring().order() <= c.cross_full_max);
        for sa in la.multsets() {
            for sb in lb.multsets() {
                sink(
                    Instance::new("T-CROSS-NEG", spec.clone())
                        .put("s", elems_u64(sa.elements()))
                        .put("s2", elems_u64(sb.elements()))
                        .put("full", vec![full]),
                )?;
            }
        }
        Ok(())
    })
}

fn eval_cross_neg(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let cx = product_ctx(inst, store)?;
    let ring = cx.plab.ring().clone();
    let sa = inst.multset("s", &cx.la)?;
    let sb = inst.multset("s2", &cx.lb)?;
    let full = inst.one("full")? == 1;
    let (fa, fb, e10, e01) = {
        let (factors, strides) = ring
            .product_parts()
            .ok_or_else(|| Error::Precondition("expected a product ring".into()))?;
        (
            factors[0].clone(),
            factors[1].clone(),
            factors[0].one() * strides[0],
            factors[1].one() * strides[1],
        )
    };
    require(ring.mul(e10, e01) == ring.zero(), "orthogonal identities do not annihilate")?;
    let sa_f = MultSet::from_elements(&fa, sa.elements())?;
    let sb_f = MultSet::from_elements(&fb, sb.elements())?;
    let sxs = product_multset(&ring, &[&sa_f, &sb_f])?;
    let a_ideals: Vec<&Ideal> = cx
        .la
        .ideals()?
        .iter()
        .filter(|i| i.is_proper() && sa.is_disjoint_from(i))
        .collect();
    let b_ideals: Vec<&Ideal> = cx
        .lb
        .ideals()?
        .iter()
        .filter(|i| i.is_proper() && sb.is_disjoint_from(i))
        .collect();
    if a_ideals.is_empty() || b_ideals.is_empty() {
        return Ok(Eval::pass().tagged(TAG_VACUOUS));
    }
    if !sa.is_disjoint_from(cx.la.nilradical()) || !sb.is_disjoint_from(cx.lb.nilradical()) {
        return Ok(Eval::violation(format!(
            "{}: a set disjoint from some ideal still meets the nilradical",
            ring.display_name(),
        )));
    }
    let spot = product_ideal(
        &ring,
        &[
            &Ideal::from_elements(&fa, a_ideals[0].elements())?,
            &Ideal::from_elements(&fb, b_ideals[0].elements())?,
        ],
    )?;
    for t in sxs.elements().iter() {
        if ring.is_nilpotent(ring.mul(t, e10)) || spot.contains(ring.mul(t, e01)) {
            return Ok(Eval::violation(format!(
                "{}: candidate {} survives the defeating pair",
                ring.display_name(),
                ring.label(t),
            )));
        }
    }
    if full {
        for ia in &a_ideals {
            let ia_f = Ideal::from_elements(&fa, ia.elements())?;
            for ib in &b_ideals {
                let lifted =
                    product_ideal(&ring, &[&ia_f, &Ideal::from_elements(&fb, ib.elements())?])?;
                if cx.plab.is_sn(&lifted, &sxs)? {
                    return Ok(Eval::violation(format!(
                        "{}: {} x {} is s-n for the product set",
                        ring.display_name(),
                        ia.display(),
                        ib.display(),
                    )));
                }
            }
        }
    }
    Ok(Eval::pass())
}

// ---------------------------------------------------------------------
// T-CROSS-POS

pub(super) const T_CROSS_POS: CheckDef = CheckDef {
    id: "T-CROSS-POS",
    summary: "crossing with a co-factor set that meets its nilradical keeps ideal products s-n",
    gen: gen_cross_pos,
    eval: eval_cross_pos,
};

fn gen_cross_pos(c: &CorpusSpec, store: &LabStore, sink: &mut Sink) -> Result<()> {
    each_lab(c, store, |spec, _lab| {
        let RingSpec::Product(parts) = spec else {
            return Ok(());
        };
        if parts.len() != 2 {
            return Ok(());
        }
        let la = store.lab(&parts[0])?;
        let lb = store.lab(&parts[1])?;
        for sa in la.multsets() {
            let ca = !sa.is_disjoint_from(la.nilradical());
            for sb in lb.multsets() {
                let cb = !sb.is_disjoint_from(lb.nilradical());
                if !ca && !cb {
                    continue;
                }
                sink(
                    Instance::new("T-CROSS-POS", spec.clone())
                        .put("s", elems_u64(sa.elements()))
                        .put("s2", elems_u64(sb.elements())),
                )?;
            }
        }
        Ok(())
    })
}

fn eval_cross_pos(inst: &Instance, store: &LabStore) -> Result<Eval> {
    let cx = product_ctx(inst, store)?;
    let ring = cx.plab.ring().clone();
    let sa = inst.multset("s", &cx.la)?;
    let sb = inst.multset("s2", &cx.lb)?;
    let (fa, fb) = {
        let (factors, _) = ring
            .product_parts()
            .ok_or_else(|| Error::Precondition("expected a product ring".into()))?;
        (factors[0].clone(), factors[1].clone())
    };
    let sa_f = MultSet::from_elements(&fa, sa.elements())?;
    let sb_f = MultSet::from_elements(&fb, sb.elements())?;
    let sxs = product_multset(&ring, &[&sa_f, &sb_f])?;
    let ca = !sa.is_disjoint_from(cx.la.nilradical());
    let cb = !sb.is_disjoint_from(cx.lb.nilradical());
    let mut engaged = false;
    for ia in cx.la.ideals()? {
        if !ia.is_proper() {
            continue;
        }
        let da = sa.is_disjoint_from(ia);
        let sn_a = if da { cx.la.is_sn(ia, &sa)? } else { false };
        for ib in cx.lb.ideals()? {
            if !ib.is_proper() {
                continue;
            }
            let db = sb.is_disjoint_from(ib);
            let cond1 = sn_a && cb;
            let cond2 = db && ca && cx.lb.is_sn(ib, &sb)?;
            if !cond1 && !cond2 {
                continue;
            }
            engaged = true;
            let lifted = product_ideal(
                &ring,
                &[
                    &Ideal::from_elements(&fa, ia.elements())?,
                    &Ideal::from_elements(&fb, ib.elements())?,
                ],
            )?;
            if !cx.plab.is_sn(&lifted, &sxs)? {
                return Ok(Eval::violation(format!(
                    "{}: {} x {} lost s-n despite a nilpotent-meeting co-factor set",
                    ring.display_name(),
                    ia.display(),
                    ib.display(),
                )));
            }
        }
    }
    if engaged {
        Ok(Eval::pass())
    } else {
        Ok(Eval::pass().tagged(TAG_VACUOUS))
    }
}
