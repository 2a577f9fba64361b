//! Localization S^{-1}R by formal fractions over a finite ring.
//!
//! Fractions (r, s) with s in S are identified by r/s ~ r'/s' iff
//! rs' - r's lies in K = { x : ux = 0 for some u in S }; K is exactly the
//! kernel of the canonical map, so the equivalence test is one membership
//! check. Classes are numbered by first appearance when scanning pairs in
//! (numerator, denominator) order, making representatives and indices
//! deterministic.

use std::collections::HashMap;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MultSet};
use crate::ring::{Caps, Elem, FiniteRing, RingSpec};

use super::hom::RingHom;
use super::multset_seed_u64;

pub struct LocalizationData {
    pub ring: Arc<FiniteRing>,
    /// r maps to the class of r/1.
    pub hom: RingHom,
    /// { r : ur = 0 for some u in S }, an ideal of the source.
    pub kernel: Ideal,
    pub multset: MultSet,
    reps: Vec<(Elem, Elem)>,
    lookup: HashMap<(Elem, Elem), Elem>,
}

pub fn localization(
    source: &Arc<FiniteRing>,
    s: &MultSet,
    caps: &Caps,
) -> Result<LocalizationData> {
    if s.ring().id() != source.id() {
        return Err(Error::RingMismatch);
    }
    if s.contains(source.zero()) {
        return Err(Error::DegenerateLocalization);
    }
    let n = source.order();
    if n as u64 > caps.table_cap {
        return Err(Error::OrderCap {
            order: n as u64,
            cap: caps.table_cap,
            kind: "localization source",
        });
    }
    let s_list: Vec<Elem> = s.elements().elements();
    let mut kset = ElemSet::new(n);
    for r in 0..n {
        if s_list.iter().any(|&u| source.mul(u, r) == source.zero()) {
            kset.insert(r);
        }
    }
    let mut reps: Vec<(Elem, Elem)> = Vec::new();
    let mut lookup: HashMap<(Elem, Elem), Elem> = HashMap::new();
    for num in 0..n {
        for &den in &s_list {
            let mut class = None;
            for (c, &(rn, rd)) in reps.iter().enumerate() {
                let diff = source.sub(source.mul(num, rd), source.mul(rn, den));
                if kset.contains(diff) {
                    class = Some(c);
                    break;
                }
            }
            let class = class.unwrap_or_else(|| {
                reps.push((num, den));
                reps.len() - 1
            });
            lookup.insert((num, den), class);
        }
    }
    let k = reps.len();
    let mut add = vec![0u32; k * k];
    let mut mul = vec![0u32; k * k];
    for (ci, &(a, b)) in reps.iter().enumerate() {
        for (cj, &(c, d)) in reps.iter().enumerate() {
            let num = source.add(source.mul(a, d), source.mul(c, b));
            let den = source.mul(b, d);
            add[ci * k + cj] = lookup[&(num, den)] as u32;
            mul[ci * k + cj] = lookup[&(source.mul(a, c), den)] as u32;
        }
    }
    let spec = RingSpec::Localization {
        of: Box::new(source.spec().clone()),
        seed: multset_seed_u64(s),
    };
    let ring = FiniteRing::from_tables(spec, k, add, mul, caps)?;
    let hom_map: Vec<Elem> = (0..n).map(|r| lookup[&(r, source.one())]).collect();
    let hom = RingHom::new(Arc::clone(source), Arc::clone(&ring), hom_map)?;
    debug_assert_eq!(hom.kernel().elements(), &kset);
    let kernel = Ideal::from_set_unchecked(source, kset);
    Ok(LocalizationData { ring, hom, kernel, multset: s.clone(), reps, lookup })
}

impl LocalizationData {
    pub fn source(&self) -> &Arc<FiniteRing> {
        self.hom.source()
    }

    /// Class representative (least numerator/denominator pair).
    pub fn rep(&self, class: Elem) -> (Elem, Elem) {
        self.reps[class]
    }

    pub fn class_of(&self, num: Elem, den: Elem) -> Result<Elem> {
        self.lookup
            .get(&(num, den))
            .copied()
            .ok_or_else(|| Error::Precondition(format!("{den} is not in the multiplicative set")))
    }

    /// S^{-1}I, the extension of I; requires I disjoint from S.
    pub fn extend_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.ring().id() != self.source().id() {
            return Err(Error::RingMismatch);
        }
        if !self.multset.is_disjoint_from(ideal) {
            return Err(Error::NotDisjoint);
        }
        let mut out = ElemSet::new(self.ring.order());
        for num in ideal.elements().iter() {
            for den in self.multset.elements().iter() {
                out.insert(self.lookup[&(num, den)]);
            }
        }
        Ideal::from_elements(&self.ring, &out)
    }

    /// The contraction (preimage under the canonical map) of an ideal of
    /// the localized ring.
    pub fn contract_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        self.hom.preimage_ideal(ideal)
    }

    /// Extension followed by contraction, the saturation of I seen in R.
    pub fn extend_contract(&self, ideal: &Ideal) -> Result<(Ideal, Ideal)> {
        let extended = self.extend_ideal(ideal)?;
        let contracted = self.contract_ideal(&extended)?;
        Ok((extended, contracted))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n, &Caps::default()).unwrap()
    }

    #[test]
    fn z12_at_powers_of_3() {
        let caps = Caps::default();
        let r = zn(12);
        let s = MultSet::close(&r, &[3]).unwrap();
        let loc = localization(&r, &s, &caps).unwrap();
        assert_eq!(loc.ring.order(), 4);
        assert_eq!(loc.kernel.elements().elements(), vec![0, 4, 8]);
        assert!(loc.hom.is_surjective());
        loc.ring.verify_axioms().unwrap();
        // images of S are units
        for u in s.elements().iter() {
            assert!(loc.ring.is_unit(loc.hom.apply(u)));
        }
        let i4 = Ideal::generate(&r, &[4]).unwrap();
        let (ext, con) = loc.extend_contract(&i4).unwrap();
        assert!(ext.is_zero());
        assert_eq!(con.elements().elements(), vec![0, 4, 8]);
        assert_eq!(con, i4.colon_elem(3).unwrap());
        let i2 = Ideal::generate(&r, &[2]).unwrap();
        let (_, con2) = loc.extend_contract(&i2).unwrap();
        assert_eq!(con2, i2);
        assert_eq!(con2, i2.colon_elem(3).unwrap());
    }

    #[test]
    fn z6_at_1_3_collapses_to_order_2() {
        let caps = Caps::default();
        let r = zn(6);
        let s = MultSet::close(&r, &[3]).unwrap();
        let loc = localization(&r, &s, &caps).unwrap();
        assert_eq!(loc.ring.order(), 2);
        assert_eq!(loc.kernel.elements().elements(), vec![0, 2, 4]);
    }

    #[test]
    fn trivial_multset_gives_isomorphic_copy() {
        let caps = Caps::default();
        for n in [5u64, 12, 16] {
            let r = zn(n);
            let s = MultSet::close(&r, &[]).unwrap();
            let loc = localization(&r, &s, &caps).unwrap();
            assert_eq!(loc.ring.order(), r.order());
            for a in 0..r.order() {
                for b in 0..r.order() {
                    assert_eq!(
                        loc.hom.apply(r.mul(a, b)),
                        loc.ring.mul(loc.hom.apply(a), loc.hom.apply(b))
                    );
                }
            }
        }
    }

    #[test]
    fn zero_in_s_is_degenerate() {
        let caps = Caps::default();
        let r = zn(8);
        let s = MultSet::close(&r, &[2]).unwrap(); // closure reaches 0
        assert!(matches!(localization(&r, &s, &caps), Err(Error::DegenerateLocalization)));
    }

    #[test]
    fn order_equals_source_over_kernel() {
        let caps = Caps::default();
        for (n, seed) in [(12u64, 3usize), (12, 5), (30, 3), (36, 6), (24, 7)] {
            let r = zn(n);
            let s = MultSet::close(&r, &[seed]).unwrap();
            if s.contains(0) {
                continue;
            }
            let loc = localization(&r, &s, &caps).unwrap();
            assert_eq!(loc.ring.order() * loc.kernel.len(), r.order(), "Z_{n} seed {seed}");
            assert!(loc.hom.is_surjective());
        }
    }
}
