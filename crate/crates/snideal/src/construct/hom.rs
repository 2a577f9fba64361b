//! Validated ring homomorphisms with element transport.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MultSet};
use crate::ring::{Elem, FiniteRing, HomSpec};

/// A unital ring homomorphism, exhaustively validated at construction.
pub struct RingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    map: Vec<Elem>,
    kernel: Ideal,
}

impl RingHom {
    pub fn new(
        source: Arc<FiniteRing>,
        target: Arc<FiniteRing>,
        map: Vec<Elem>,
    ) -> Result<RingHom> {
        if map.len() != source.order() {
            return Err(Error::InvalidHom(format!(
                "map covers {} elements, source has {}",
                map.len(),
                source.order()
            )));
        }
        for (a, &fa) in map.iter().enumerate() {
            if fa >= target.order() {
                return Err(Error::InvalidHom(format!("image of {a} is out of range")));
            }
        }
        if map[source.one()] != target.one() {
            return Err(Error::InvalidHom("1 does not map to 1".into()));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.add(a, b)] != target.add(map[a], map[b]) {
                    return Err(Error::InvalidHom(format!("not additive at ({a}, {b})")));
                }
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::InvalidHom(format!("not multiplicative at ({a}, {b})")));
                }
            }
        }
        let mut kset = ElemSet::new(source.order());
        for (a, &fa) in map.iter().enumerate() {
            if fa == target.zero() {
                kset.insert(a);
            }
        }
        let kernel = Ideal::from_set_unchecked(&source, kset);
        Ok(RingHom { source, target, map, kernel })
    }

    /// Realizes a [`HomSpec`] between two already-built rings.
    pub fn from_spec(
        source: &Arc<FiniteRing>,
        target: &Arc<FiniteRing>,
        spec: &HomSpec,
    ) -> Result<RingHom> {
        let map: Vec<Elem> = match spec {
            HomSpec::Identity => {
                if source.order() != target.order() {
                    return Err(Error::InvalidHom(
                        "identity between rings of different orders".into(),
                    ));
                }
                (0..source.order()).collect()
            }
            HomSpec::CanonicalMod => {
                let n = source
                    .zn_modulus()
                    .ok_or_else(|| Error::InvalidHom("canonical mod needs Z_n source".into()))?;
                let m = target
                    .zn_modulus()
                    .ok_or_else(|| Error::InvalidHom("canonical mod needs Z_m target".into()))?;
                if m == 0 || n % m != 0 {
                    return Err(Error::InvalidHom(format!("{m} does not divide {n}")));
                }
                (0..source.order()).map(|x| x % m as usize).collect()
            }
            HomSpec::Table(t) => t.iter().map(|&x| x as Elem).collect(),
        };
        RingHom::new(Arc::clone(source), Arc::clone(target), map)
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    pub fn image_set(&self) -> ElemSet {
        let mut out = ElemSet::new(self.target.order());
        for &fa in &self.map {
            out.insert(fa);
        }
        out
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().len() == self.target.order()
    }

    /// f(I); only an ideal when f is surjective, so that is required.
    pub fn image_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.ring().id() != self.source.id() {
            return Err(Error::RingMismatch);
        }
        if !self.is_surjective() {
            return Err(Error::Precondition(
                "image of an ideal needs a surjective homomorphism".into(),
            ));
        }
        let mut out = ElemSet::new(self.target.order());
        for a in ideal.elements().iter() {
            out.insert(self.map[a]);
        }
        Ideal::from_elements(&self.target, &out)
    }

    /// f^{-1}(J); an ideal of the source containing the kernel.
    pub fn preimage_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.ring().id() != self.target.id() {
            return Err(Error::RingMismatch);
        }
        let mut out = ElemSet::new(self.source.order());
        for (a, &fa) in self.map.iter().enumerate() {
            if ideal.contains(fa) {
                out.insert(a);
            }
        }
        Ideal::from_elements(&self.source, &out)
    }

    /// f(S), a multiplicative set of the target.
    pub fn image_multset(&self, s: &MultSet) -> Result<MultSet> {
        if s.ring().id() != self.source.id() {
            return Err(Error::RingMismatch);
        }
        let mut out = ElemSet::new(self.target.order());
        for a in s.elements().iter() {
            out.insert(self.map[a]);
        }
        MultSet::from_elements(&self.target, &out)
    }
}

impl std::fmt::Debug for RingHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RingHom({} -> {}, kernel {})",
            self.source.display_name(),
            self.target.display_name(),
            self.kernel.display()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Caps;

    fn zn(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n, &Caps::default()).unwrap()
    }

    #[test]
    fn canonical_mod_z8_to_z4() {
        let f = RingHom::from_spec(&zn(8), &zn(4), &HomSpec::CanonicalMod).unwrap();
        assert_eq!(f.kernel().elements().elements(), vec![0, 4]);
        assert!(f.is_surjective());
        assert_eq!(f.apply(7), 3);
    }

    #[test]
    fn identity_and_rejections() {
        let r = zn(12);
        let f = RingHom::from_spec(&r, &zn(12), &HomSpec::Identity).unwrap();
        assert_eq!(f.kernel().elements().elements(), vec![0]);
        // 1 -> 1 from Z_4 into Z_8 breaks additivity (4*1 = 0 only mod 4)
        assert!(matches!(
            RingHom::from_spec(&zn(4), &zn(8), &HomSpec::Identity),
            Err(Error::InvalidHom(_))
        ));
        let table: Vec<u64> = vec![0, 1, 2, 3];
        assert!(RingHom::from_spec(&zn(4), &zn(8), &HomSpec::Table(table)).is_err());
        assert!(RingHom::from_spec(&zn(12), &zn(4), &HomSpec::CanonicalMod).is_ok());
        assert!(RingHom::from_spec(&zn(12), &zn(5), &HomSpec::CanonicalMod).is_err());
    }

    #[test]
    fn transports() {
        let r8 = zn(8);
        let r4 = zn(4);
        let f = RingHom::from_spec(&r8, &r4, &HomSpec::CanonicalMod).unwrap();
        let i = Ideal::generate(&r8, &[2]).unwrap();
        assert_eq!(f.image_ideal(&i).unwrap().elements().elements(), vec![0, 2]);
        let j = Ideal::generate(&r4, &[2]).unwrap();
        assert_eq!(f.preimage_ideal(&j).unwrap().elements().elements(), vec![0, 2, 4, 6]);
        let s = MultSet::close(&r8, &[3]).unwrap();
        assert_eq!(f.image_multset(&s).unwrap().elements().elements(), vec![1, 3]);
        // kernel containment and image/preimage round trip
        for d in [1usize, 2, 4] {
            let j = Ideal::generate(&r4, &[d % 4]).unwrap();
            let back = f.image_ideal(&f.preimage_ideal(&j).unwrap()).unwrap();
            assert_eq!(back, j);
            assert!(f.kernel().elements().is_subset(f.preimage_ideal(&j).unwrap().elements()));
        }
    }
}
