//! Amalgamation of R with an ideal J of R' along f: R -> R', realized as
//! the subring { (a, f(a)+j) } of R x R' with its own element indexing
//! (lexicographic in (a, second coordinate)).

use std::collections::HashMap;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MultSet};
use crate::ring::{Caps, Elem, FiniteRing, HomSpec, RingSpec};

use super::hom::RingHom;
use super::ideal_gens_u64;

pub struct AmalgData {
    pub ring: Arc<FiniteRing>,
    pub hom: RingHom,
    pub j: Ideal,
    pairs: Vec<(Elem, Elem)>,
    lookup: HashMap<(Elem, Elem), Elem>,
}

pub fn amalgamation(hom: RingHom, j: &Ideal, caps: &Caps) -> Result<AmalgData> {
    if j.ring().id() != hom.target().id() {
        return Err(Error::RingMismatch);
    }
    let source = Arc::clone(hom.source());
    let target = Arc::clone(hom.target());
    let order = source
        .order()
        .checked_mul(j.len())
        .filter(|&o| o as u64 <= caps.table_cap)
        .ok_or(Error::OrderCap {
            order: source.order().saturating_mul(j.len()) as u64,
            cap: caps.table_cap,
            kind: "amalgamation",
        })?;
    let mut pairs = Vec::with_capacity(order);
    let mut lookup = HashMap::with_capacity(order);
    for a in 0..source.order() {
        let fa = hom.apply(a);
        let mut ys: Vec<Elem> = j.elements().iter().map(|jj| target.add(fa, jj)).collect();
        ys.sort_unstable();
        for y in ys {
            lookup.insert((a, y), pairs.len());
            pairs.push((a, y));
        }
    }
    let mut add = vec![0u32; order * order];
    let mut mul = vec![0u32; order * order];
    for (x, &(a, y)) in pairs.iter().enumerate() {
        for (x2, &(a2, y2)) in pairs.iter().enumerate() {
            add[x * order + x2] = lookup[&(source.add(a, a2), target.add(y, y2))] as u32;
            mul[x * order + x2] = lookup[&(source.mul(a, a2), target.mul(y, y2))] as u32;
        }
    }
    let spec = RingSpec::Amalgamation {
        of: Box::new(source.spec().clone()),
        with: Box::new(target.spec().clone()),
        hom: HomSpec::Table(hom.map().iter().map(|&x| x as u64).collect()),
        ideal_gens: ideal_gens_u64(j),
    };
    let ring = FiniteRing::from_tables(spec, order, add, mul, caps)?;
    Ok(AmalgData { ring, hom, j: j.clone(), pairs, lookup })
}

impl AmalgData {
    pub fn source(&self) -> &Arc<FiniteRing> {
        self.hom.source()
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        self.hom.target()
    }

    pub fn pair(&self, x: Elem) -> (Elem, Elem) {
        self.pairs[x]
    }

    pub fn index_of(&self, a: Elem, y: Elem) -> Option<Elem> {
        self.lookup.get(&(a, y)).copied()
    }

    /// I join J = { (i, f(i)+j) }, for an ideal I of the source.
    pub fn lift_ideal(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.ring().id() != self.source().id() {
            return Err(Error::RingMismatch);
        }
        let mut out = ElemSet::new(self.ring.order());
        for (x, &(a, _)) in self.pairs.iter().enumerate() {
            if ideal.contains(a) {
                out.insert(x);
            }
        }
        Ideal::from_elements(&self.ring, &out)
    }

    /// K-bar: the members of the amalgamation whose second coordinate
    /// falls in K, for an ideal K of the target.
    pub fn kbar(&self, k: &Ideal) -> Result<Ideal> {
        if k.ring().id() != self.target().id() {
            return Err(Error::RingMismatch);
        }
        let mut out = ElemSet::new(self.ring.order());
        for (x, &(_, y)) in self.pairs.iter().enumerate() {
            if k.contains(y) {
                out.insert(x);
            }
        }
        Ideal::from_elements(&self.ring, &out)
    }

    /// S join J = { (s, f(s)+j) }.
    pub fn lift_multset(&self, s: &MultSet) -> Result<MultSet> {
        if s.ring().id() != self.source().id() {
            return Err(Error::RingMismatch);
        }
        let mut out = ElemSet::new(self.ring.order());
        for (x, &(a, _)) in self.pairs.iter().enumerate() {
            if s.contains(a) {
                out.insert(x);
            }
        }
        MultSet::from_elements(&self.ring, &out)
    }

    /// W = { (s, f(s)) }, the diagonal copy of S.
    pub fn w_multset(&self, s: &MultSet) -> Result<MultSet> {
        if s.ring().id() != self.source().id() {
            return Err(Error::RingMismatch);
        }
        let mut out = ElemSet::new(self.ring.order());
        for a in s.elements().iter() {
            let x = self
                .index_of(a, self.hom.apply(a))
                .expect("diagonal pair always present (j = 0)");
            out.insert(x);
        }
        MultSet::from_elements(&self.ring, &out)
    }

    /// T-bar: members whose second coordinate falls in T, for a
    /// multiplicative set T of the target.
    pub fn tbar(&self, t: &MultSet) -> Result<MultSet> {
        if t.ring().id() != self.target().id() {
            return Err(Error::RingMismatch);
        }
        let mut out = ElemSet::new(self.ring.order());
        for (x, &(_, y)) in self.pairs.iter().enumerate() {
            if t.contains(y) {
                out.insert(x);
            }
        }
        MultSet::from_elements(&self.ring, &out)
    }

    /// (S x f(S)) intersected with the amalgamation.
    pub fn s_cross_fs(&self, s: &MultSet) -> Result<MultSet> {
        if s.ring().id() != self.source().id() {
            return Err(Error::RingMismatch);
        }
        let fs = self.hom.image_multset(s)?;
        let mut out = ElemSet::new(self.ring.order());
        for (x, &(a, y)) in self.pairs.iter().enumerate() {
            if s.contains(a) && fs.contains(y) {
                out.insert(x);
            }
        }
        MultSet::from_elements(&self.ring, &out)
    }

    /// The expected nilradical sqrt(0)_R join J, valid when J is inside
    /// the target's nilradical.
    pub fn lifted_nilradical(&self) -> ElemSet {
        let mut out = ElemSet::new(self.ring.order());
        for (x, &(a, _)) in self.pairs.iter().enumerate() {
            if self.source().is_nilpotent(a) {
                out.insert(x);
            }
        }
        out
    }

    /// The product R x R' with the inclusion homomorphism, for checks
    /// that view the amalgamation as a subring.
    pub fn product_embedding(&self, caps: &Caps) -> Result<(Arc<FiniteRing>, RingHom)> {
        let product = FiniteRing::product(
            vec![Arc::clone(self.source()), Arc::clone(self.target())],
            caps,
        )?;
        let stride = self.source().order();
        let map: Vec<Elem> = self.pairs.iter().map(|&(a, y)| a + y * stride).collect();
        let hom = RingHom::new(Arc::clone(&self.ring), Arc::clone(&product), map)?;
        Ok((product, hom))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{absolute_verdict, AbsolutePredicate};

    fn zn(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n, &Caps::default()).unwrap()
    }

    #[test]
    fn z8_amalgamated_with_2_in_z4() {
        let caps = Caps::default();
        let r8 = zn(8);
        let r4 = zn(4);
        let f = RingHom::from_spec(&r8, &r4, &HomSpec::CanonicalMod).unwrap();
        let j = Ideal::generate(&r4, &[2]).unwrap();
        let data = amalgamation(f, &j, &caps).unwrap();
        assert_eq!(data.ring.order(), 16);
        data.ring.verify_axioms().unwrap();
        // J inside sqrt0 of Z_4, so the nilradical lifts
        assert!(j.elements().is_subset(r4.nilpotents()));
        assert_eq!(data.ring.nilpotents(), &data.lifted_nilradical());
        // <2> is a nil-based ideal of Z_8 and so is its lift
        let i2 = Ideal::generate(&r8, &[2]).unwrap();
        assert!(absolute_verdict(&i2, AbsolutePredicate::NIdeal).unwrap().holds);
        let lifted = data.lift_ideal(&i2).unwrap();
        assert_eq!(lifted.len(), 8);
        assert!(absolute_verdict(&lifted, AbsolutePredicate::NIdeal).unwrap().holds);
    }

    #[test]
    fn duplication_along_zero_is_isomorphic() {
        let caps = Caps::default();
        let r = zn(6);
        let target = zn(6);
        let f = RingHom::from_spec(&r, &target, &HomSpec::Identity).unwrap();
        let j = Ideal::generate(&target, &[]).unwrap();
        let data = amalgamation(f, &j, &caps).unwrap();
        assert_eq!(data.ring.order(), 6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(data.ring.add(a, b), r.add(a, b));
                assert_eq!(data.ring.mul(a, b), r.mul(a, b));
            }
        }
    }

    #[test]
    fn z6_duplicated_along_3() {
        let caps = Caps::default();
        let r = zn(6);
        let target = zn(6);
        let f = RingHom::from_spec(&r, &target, &HomSpec::Identity).unwrap();
        let j = Ideal::generate(&target, &[3]).unwrap();
        let data = amalgamation(f, &j, &caps).unwrap();
        assert_eq!(data.ring.order(), 12);
        data.ring.verify_axioms().unwrap();
        // J = {0,3} is not inside sqrt0 = {0}; the lift formula fails here
        assert_ne!(data.ring.nilpotents(), &data.lifted_nilradical());
        assert_eq!(data.ring.nilpotents().len(), 1);

        // lifted sets around S = closure{4} = {1,4}
        let s = MultSet::close(&r, &[4]).unwrap();
        assert_eq!(data.w_multset(&s).unwrap().len(), 2);
        assert_eq!(data.lift_multset(&s).unwrap().len(), 4);
        let t = MultSet::close(&target, &[4]).unwrap();
        assert_eq!(data.tbar(&t).unwrap().len(), 4);
        assert_eq!(data.s_cross_fs(&s).unwrap().len(), 4);
        let k = Ideal::generate(&target, &[2]).unwrap();
        assert_eq!(data.kbar(&k).unwrap().len(), 6);
    }

    #[test]
    fn embeds_into_the_product() {
        let caps = Caps::default();
        let r8 = zn(8);
        let r4 = zn(4);
        let f = RingHom::from_spec(&r8, &r4, &HomSpec::CanonicalMod).unwrap();
        let j = Ideal::generate(&r4, &[2]).unwrap();
        let data = amalgamation(f, &j, &caps).unwrap();
        let (product, incl) = data.product_embedding(&caps).unwrap();
        assert_eq!(product.order(), 32);
        assert_eq!(incl.kernel().len(), 1); // injective
        // image is exactly the set of amalgamation pairs
        assert_eq!(incl.image_set().len(), 16);
    }
}
