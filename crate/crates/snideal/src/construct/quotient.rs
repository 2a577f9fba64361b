//! Quotient rings R/I with the canonical projection.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, MultSet};
use crate::ring::{Caps, FiniteRing, RingSpec};

use super::hom::RingHom;
use super::ideal_gens_u64;

pub struct QuotientData {
    pub ring: Arc<FiniteRing>,
    pub projection: RingHom,
}

/// Builds R/I with cosets indexed by first appearance of their least
/// member, so coset 0 is I itself.
pub fn quotient_ring(source: &Arc<FiniteRing>, ideal: &Ideal, caps: &Caps) -> Result<QuotientData> {
    if ideal.ring().id() != source.id() {
        return Err(Error::RingMismatch);
    }
    if !ideal.is_proper() {
        return Err(Error::NotProper);
    }
    let n = source.order();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        for i in ideal.elements().iter() {
            class_of[source.add(x, i)] = c;
        }
        reps.push(x);
    }
    let k = reps.len();
    let mut add = vec![0u32; k * k];
    let mut mul = vec![0u32; k * k];
    for (ci, &ri) in reps.iter().enumerate() {
        for (cj, &rj) in reps.iter().enumerate() {
            add[ci * k + cj] = class_of[source.add(ri, rj)] as u32;
            mul[ci * k + cj] = class_of[source.mul(ri, rj)] as u32;
        }
    }
    let spec = RingSpec::Quotient {
        of: Box::new(source.spec().clone()),
        gens: ideal_gens_u64(ideal),
    };
    let ring = FiniteRing::from_tables(spec, k, add, mul, caps)?;
    let projection = RingHom::new(Arc::clone(source), Arc::clone(&ring), class_of)?;
    Ok(QuotientData { ring, projection })
}

impl QuotientData {
    /// S-bar, the image of S under the projection.
    pub fn push_multset(&self, s: &MultSet) -> Result<MultSet> {
        self.projection.image_multset(s)
    }

    /// J/I for an ideal J containing I.
    pub fn push_ideal(&self, j: &Ideal) -> Result<Ideal> {
        if !self.projection.kernel().elements().is_subset(j.elements()) {
            return Err(Error::Precondition("pushed ideal must contain the modulus".into()));
        }
        self.projection.image_ideal(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::all_ideals;

    fn zn(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n, &Caps::default()).unwrap()
    }

    #[test]
    fn z12_mod_4_and_pushforwards() {
        let caps = Caps::default();
        let r = zn(12);
        let i4 = Ideal::generate(&r, &[4]).unwrap();
        let q = quotient_ring(&r, &i4, &caps).unwrap();
        assert_eq!(q.ring.order(), 4);
        // cosets keyed by least member: 0={0,4,8}, 1={1,5,9}, 2, 3
        assert_eq!(q.projection.apply(9), 1);
        assert_eq!(q.projection.apply(11), 3);
        assert_eq!(q.projection.kernel().elements().elements(), vec![0, 4, 8]);
        let s = MultSet::close(&r, &[3]).unwrap();
        let sbar = q.push_multset(&s).unwrap();
        assert_eq!(sbar.elements().elements(), vec![1, 3]); // 9 folds onto 1
        let j = Ideal::generate(&r, &[2]).unwrap();
        assert_eq!(q.push_ideal(&j).unwrap().elements().elements(), vec![0, 2]);
        let small = Ideal::generate(&r, &[6]).unwrap();
        assert!(q.push_ideal(&small).is_err()); // does not contain <4>
        q.ring.verify_axioms().unwrap();
    }

    #[test]
    fn quotient_by_zero_and_six() {
        let caps = Caps::default();
        let r = zn(12);
        let q0 = quotient_ring(&r, &Ideal::generate(&r, &[]).unwrap(), &caps).unwrap();
        assert_eq!(q0.ring.order(), 12);
        let q6 = quotient_ring(&r, &Ideal::generate(&r, &[6]).unwrap(), &caps).unwrap();
        assert_eq!(q6.ring.order(), 6);
        let whole = Ideal::generate(&r, &[1]).unwrap();
        assert!(matches!(quotient_ring(&r, &whole, &caps), Err(Error::NotProper)));
    }

    #[test]
    fn quotient_arithmetic_matches_modular_arithmetic() {
        // Z_n / <d> behaves as Z_d elementwise
        let caps = Caps::default();
        for (n, d) in [(12u64, 4usize), (30, 6), (16, 8)] {
            let r = zn(n);
            let q = quotient_ring(&r, &Ideal::generate(&r, &[d]).unwrap(), &caps).unwrap();
            assert_eq!(q.ring.order(), d);
            for a in 0..d {
                for b in 0..d {
                    assert_eq!(q.ring.add(a, b), (a + b) % d);
                    assert_eq!(q.ring.mul(a, b), (a * b) % d);
                }
            }
        }
    }

    #[test]
    fn ideals_of_quotient_correspond_to_ideals_over_modulus() {
        let caps = Caps::default();
        let r = zn(36);
        let i = Ideal::generate(&r, &[12]).unwrap();
        let q = quotient_ring(&r, &i, &caps).unwrap();
        let over: usize = all_ideals(&r, &caps)
            .unwrap()
            .iter()
            .filter(|j| i.elements().is_subset(j.elements()))
            .count();
        assert_eq!(all_ideals(&q.ring, &caps).unwrap().len(), over);
    }
}
