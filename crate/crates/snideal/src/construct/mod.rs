//! Derived rings (quotients, localizations, idealizations, amalgamations,
//! products) with transported ideals and multiplicative sets, plus the
//! recursive builder that realizes a [`RingSpec`].

pub mod amalgam;
pub mod hom;
pub mod idealize;
pub mod localize;
pub mod quotient;

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MultSet};
use crate::ring::{Caps, Elem, FiniteRing, RingSpec};

pub use amalgam::{amalgamation, AmalgData};
pub use hom::RingHom;
pub use idealize::{idealization, IdealizationData, Module};
pub use localize::{localization, LocalizationData};
pub use quotient::{quotient_ring, QuotientData};

/// Generators if recorded, else all elements, as spec integers.
pub(crate) fn ideal_gens_u64(ideal: &Ideal) -> Vec<u64> {
    match ideal.generators() {
        Some(g) => g.iter().map(|&x| x as u64).collect(),
        None => ideal.elements().iter().map(|x| x as u64).collect(),
    }
}

/// Seed if recorded, else all elements.
pub(crate) fn multset_seed_u64(s: &MultSet) -> Vec<u64> {
    match s.seed() {
        Some(g) => g.iter().map(|&x| x as u64).collect(),
        None => s.elements().iter().map(|x| x as u64).collect(),
    }
}

/// How a ring came to be, with enough data to transport ideals and
/// multiplicative sets into it.
pub enum Construction {
    Base,
    Product(Vec<BuiltRing>),
    Quotient(QuotientData),
    Localization(LocalizationData),
    Idealization(IdealizationData),
    Amalgamation(AmalgData),
}

impl Construction {
    pub fn kind(&self) -> &'static str {
        match self {
            Construction::Base => "base",
            Construction::Product(_) => "product",
            Construction::Quotient(_) => "quotient",
            Construction::Localization(_) => "localization",
            Construction::Idealization(_) => "idealization",
            Construction::Amalgamation(_) => "amalgamation",
        }
    }
}

pub struct BuiltRing {
    pub ring: Arc<FiniteRing>,
    pub construction: Construction,
}

/// Realizes a spec, recursively building whatever it derives from.
pub fn build_ring(spec: &RingSpec, caps: &Caps) -> Result<BuiltRing> {
    match spec {
        RingSpec::Zn(n) => Ok(BuiltRing {
            ring: FiniteRing::zn(*n, caps)?,
            construction: Construction::Base,
        }),
        RingSpec::Product(specs) => {
            let parts: Vec<BuiltRing> =
                specs.iter().map(|s| build_ring(s, caps)).collect::<Result<_>>()?;
            let ring =
                FiniteRing::product(parts.iter().map(|b| Arc::clone(&b.ring)).collect(), caps)?;
            Ok(BuiltRing { ring, construction: Construction::Product(parts) })
        }
        RingSpec::Quotient { of, gens } => {
            let base = build_ring(of, caps)?;
            let gens: Vec<Elem> = gens.iter().map(|&g| g as Elem).collect();
            let ideal = Ideal::generate(&base.ring, &gens)?;
            let data = quotient_ring(&base.ring, &ideal, caps)?;
            Ok(BuiltRing {
                ring: Arc::clone(&data.ring),
                construction: Construction::Quotient(data),
            })
        }
        RingSpec::Localization { of, seed } => {
            let base = build_ring(of, caps)?;
            let seed: Vec<Elem> = seed.iter().map(|&g| g as Elem).collect();
            let s = MultSet::close(&base.ring, &seed)?;
            let data = localization(&base.ring, &s, caps)?;
            Ok(BuiltRing {
                ring: Arc::clone(&data.ring),
                construction: Construction::Localization(data),
            })
        }
        RingSpec::Idealization { of, module } => {
            let base = build_ring(of, caps)?;
            let data = idealization(&base.ring, module, caps)?;
            Ok(BuiltRing {
                ring: Arc::clone(&data.ring),
                construction: Construction::Idealization(data),
            })
        }
        RingSpec::Amalgamation { of, with, hom, ideal_gens } => {
            let base = build_ring(of, caps)?;
            let other = build_ring(with, caps)?;
            let f = RingHom::from_spec(&base.ring, &other.ring, hom)?;
            let gens: Vec<Elem> = ideal_gens.iter().map(|&g| g as Elem).collect();
            let j = Ideal::generate(&other.ring, &gens)?;
            let data = amalgamation(f, &j, caps)?;
            Ok(BuiltRing {
                ring: Arc::clone(&data.ring),
                construction: Construction::Amalgamation(data),
            })
        }
    }
}

/// The ideal I_1 x ... x I_k of a product ring, one factor ideal each.
pub fn product_ideal(product: &Arc<FiniteRing>, parts: &[&Ideal]) -> Result<Ideal> {
    let (factors, strides) = product
        .product_parts()
        .ok_or_else(|| Error::InvalidSpec("not a product ring".into()))?;
    if factors.len() != parts.len() {
        return Err(Error::InvalidSpec(format!(
            "{} factor ideals supplied for {} factors",
            parts.len(),
            factors.len()
        )));
    }
    for (f, p) in factors.iter().zip(parts) {
        if f.id() != p.ring().id() {
            return Err(Error::RingMismatch);
        }
    }
    let mut out = ElemSet::new(product.order());
    let strides = strides.to_vec();
    cross_product(parts.iter().map(|p| p.elements().elements()).collect(), &strides, &mut out);
    Ideal::from_elements(product, &out)
}

/// S_1 x ... x S_k as a multiplicative subset of the product.
pub fn product_multset(product: &Arc<FiniteRing>, parts: &[&MultSet]) -> Result<MultSet> {
    let (factors, strides) = product
        .product_parts()
        .ok_or_else(|| Error::InvalidSpec("not a product ring".into()))?;
    if factors.len() != parts.len() {
        return Err(Error::InvalidSpec(format!(
            "{} factor sets supplied for {} factors",
            parts.len(),
            factors.len()
        )));
    }
    for (f, p) in factors.iter().zip(parts) {
        if f.id() != p.ring().id() {
            return Err(Error::RingMismatch);
        }
    }
    let mut out = ElemSet::new(product.order());
    let strides = strides.to_vec();
    cross_product(parts.iter().map(|p| p.elements().elements()).collect(), &strides, &mut out);
    MultSet::from_elements(product, &out)
}

fn cross_product(lists: Vec<Vec<Elem>>, strides: &[usize], out: &mut ElemSet) {
    let mut idx = vec![0usize; lists.len()];
    loop {
        let code: usize =
            idx.iter().enumerate().map(|(k, &i)| lists[k][i] * strides[k]).sum();
        out.insert(code);
        let mut k = 0;
        loop {
            if k == lists.len() {
                return;
            }
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// The improper ideal R, handy as a product-lift component.
pub fn whole_ideal(ring: &Arc<FiniteRing>) -> Ideal {
    Ideal::from_set_unchecked(ring, ElemSet::full(ring.order()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{Classifier, RelativePredicate};
    use crate::ring::ModuleSpec;

    fn zn(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n, &Caps::default()).unwrap()
    }

    #[test]
    fn builder_handles_every_variant() {
        let caps = Caps::default();
        let specs = [
            r#"{"zn": 12}"#,
            r#"{"product": [{"zn": 3}, {"zn": 4}]}"#,
            r#"{"quotient": {"of": {"zn": 12}, "gens": [4]}}"#,
            r#"{"localization": {"of": {"zn": 12}, "seed": [3]}}"#,
            r#"{"idealization": {"of": {"zn": 4}, "module": "self"}}"#,
            r#"{"amalgamation": {"of": {"zn": 8}, "with": {"zn": 4}, "hom": "canonical_mod", "ideal_gens": [2]}}"#,
        ];
        let orders = [12usize, 12, 4, 4, 16, 16];
        for (txt, want) in specs.iter().zip(orders) {
            let spec: RingSpec = serde_json::from_str(txt).unwrap();
            let built = build_ring(&spec, &caps).unwrap();
            assert_eq!(built.ring.order(), want, "{txt}");
            built.ring.verify_axioms().unwrap();
        }
        // nested: quotient of a product
        let nested: RingSpec = serde_json::from_str(
            r#"{"quotient": {"of": {"product": [{"zn": 2}, {"zn": 4}]}, "gens": [6]}}"#,
        )
        .unwrap();
        // 6 encodes (0,3) in Z_2 x Z_4: <(0,3)> = 0 x Z_4, quotient has order 2
        let built = build_ring(&nested, &caps).unwrap();
        assert_eq!(built.ring.order(), 2);
    }

    #[test]
    fn product_lifts() {
        let caps = Caps::default();
        let r12 = zn(12);
        let r4 = zn(4);
        let p = FiniteRing::product(vec![Arc::clone(&r12), Arc::clone(&r4)], &caps).unwrap();
        let i = Ideal::generate(&r12, &[4]).unwrap();
        let lifted = product_ideal(&p, &[&i, &whole_ideal(&r4)]).unwrap();
        assert_eq!(lifted.len(), 3 * 4);
        let s1 = MultSet::close(&r12, &[3]).unwrap();
        let s2 = MultSet::close(&r4, &[0]).unwrap();
        let s = product_multset(&p, &[&s1, &s2]).unwrap();
        assert_eq!(s.len(), 3 * 2);
        // S' touches the nilradical of Z_4, which is what makes I x R'
        // a relative nil ideal of the product
        let v = Classifier::new(lifted).relative(&s, RelativePredicate::SNIdeal).unwrap();
        assert!(v.holds);
        // while I x I' with nilpotent-free sets never is
        let i2 = Ideal::generate(&r4, &[2]).unwrap();
        let both = product_ideal(&p, &[&i, &i2]).unwrap();
        let s2u = MultSet::close(&r4, &[1]).unwrap();
        let su = product_multset(&p, &[&s1, &s2u]).unwrap();
        let v2 = Classifier::new(both).relative(&su, RelativePredicate::SNIdeal).unwrap();
        assert!(!v2.holds);
    }

    #[test]
    fn module_spec_roundtrip_through_builder() {
        let caps = Caps::default();
        let spec = RingSpec::Idealization {
            of: Box::new(RingSpec::Zn(12)),
            module: ModuleSpec::Quotient { gens: vec![4] },
        };
        let built = build_ring(&spec, &caps).unwrap();
        assert_eq!(built.ring.order(), 48);
        let json = serde_json::to_string(&spec).unwrap();
        let back: RingSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(build_ring(&back, &caps).unwrap().ring.order(), 48);
    }
}
