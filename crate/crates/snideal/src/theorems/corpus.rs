//! Default corpus: which rings the registry sweeps and in what order.

use std::rc::Rc;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideal::{Ideal, MultSet};
use crate::ring::{Caps, FiniteRing, HomSpec, ModuleSpec, RingSpec};

use super::lab::{Lab, LabStore};

/// Which rings get generated, plus the per-check size throttles. The
/// defaults keep a full registry run in the minutes range while still
/// covering every hypothesis shape the checks exercise.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct CorpusSpec {
    /// Z_n for every n up to this bound.
    pub zn_max: u64,
    /// Z_a x Z_b for every a <= b with a*b up to this bound.
    pub product_max: u64,
    /// Quotients of each Z_n by every nonzero proper ideal.
    pub include_quotients: bool,
    /// Localizations of each Z_n at saturation-distinct singleton seeds.
    pub include_localizations: bool,
    /// R(+)M idealizations up to this order.
    pub idealization_max: u64,
    /// Amalgamations (duplications and along canonical projections) up to
    /// this order.
    pub amalgamation_max: u64,
    /// Order bound on base rings for checks that build a derived ring per
    /// instance (localizations, quotient transport, projection images).
    pub derived_base_max: usize,
    /// Order bound for the triple-form check, whose scan is cubic in the
    /// ideal count.
    pub char2_order_max: usize,
    /// Order bound on R x R' for subring-embedding instances.
    pub embedding_max: usize,
    /// Order bound under which the product cross checks also re-verify
    /// their conclusion with the full classifier.
    pub cross_full_max: usize,
}

impl Default for CorpusSpec {
    fn default() -> CorpusSpec {
        CorpusSpec {
            zn_max: 60,
            product_max: 144,
            include_quotients: true,
            include_localizations: true,
            idealization_max: 256,
            amalgamation_max: 256,
            derived_base_max: 60,
            char2_order_max: 60,
            embedding_max: 256,
            cross_full_max: 60,
        }
    }
}

pub(super) fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// The full ring list, family by family, in deterministic order.
pub fn corpus_rings(c: &CorpusSpec) -> Vec<RingSpec> {
    let mut out = Vec::new();
    for n in 2..=c.zn_max {
        out.push(RingSpec::Zn(n));
    }
    for a in 2..=c.product_max {
        for b in a..=c.product_max {
            if a * b <= c.product_max {
                out.push(RingSpec::Product(vec![RingSpec::Zn(a), RingSpec::Zn(b)]));
            }
        }
    }
    if c.include_quotients {
        for n in 2..=c.zn_max {
            for d in divisors(n) {
                if d > 1 && d < n {
                    out.push(RingSpec::Quotient { of: Box::new(RingSpec::Zn(n)), gens: vec![d] });
                }
            }
        }
    }
    if c.include_localizations {
        let caps = Caps::default();
        for n in 2..=c.zn_max {
            let ring = FiniteRing::zn(n, &caps).expect("corpus Z_n");
            let mut seen_saturations = Vec::new();
            for g in 0..ring.order() {
                if ring.is_nilpotent(g) || ring.is_unit(g) {
                    continue;
                }
                let s = MultSet::close(&ring, &[g]).expect("singleton closure");
                let sat = s.saturation().elements().clone();
                if seen_saturations.contains(&sat) {
                    continue;
                }
                seen_saturations.push(sat);
                out.push(RingSpec::Localization {
                    of: Box::new(RingSpec::Zn(n)),
                    seed: vec![g as u64],
                });
            }
        }
    }
    for n in 2..=c.zn_max {
        if n * n <= c.idealization_max {
            out.push(RingSpec::Idealization {
                of: Box::new(RingSpec::Zn(n)),
                module: ModuleSpec::SelfModule,
            });
        }
        for d in divisors(n) {
            // the module Z_n/<d> has d elements
            if d > 1 && d < n && n * d <= c.idealization_max {
                out.push(RingSpec::Idealization {
                    of: Box::new(RingSpec::Zn(n)),
                    module: ModuleSpec::Quotient { gens: vec![d] },
                });
            }
        }
    }
    for n in 2..=c.zn_max {
        for d in divisors(n) {
            // duplication along J = <d>, which has n/d elements
            if d > 1 && d < n && n * (n / d) <= c.amalgamation_max {
                out.push(RingSpec::Amalgamation {
                    of: Box::new(RingSpec::Zn(n)),
                    with: Box::new(RingSpec::Zn(n)),
                    hom: HomSpec::Identity,
                    ideal_gens: vec![d],
                });
            }
        }
        for m in divisors(n) {
            if m < 2 || m == n {
                continue;
            }
            for e in divisors(m) {
                // J = <e> in Z_m has m/e elements
                if e > 1 && e < m && n * (m / e) <= c.amalgamation_max {
                    out.push(RingSpec::Amalgamation {
                        of: Box::new(RingSpec::Zn(n)),
                        with: Box::new(RingSpec::Zn(m)),
                        hom: HomSpec::CanonicalMod,
                        ideal_gens: vec![e],
                    });
                }
            }
        }
    }
    out
}

/// Runs `f` over every corpus ring's lab, in corpus order.
pub(super) fn each_lab(
    c: &CorpusSpec,
    store: &LabStore,
    mut f: impl FnMut(&RingSpec, &Rc<Lab>) -> Result<()>,
) -> Result<()> {
    for spec in corpus_rings(c) {
        let lab = store.lab(&spec)?;
        f(&spec, &lab)?;
    }
    Ok(())
}

/// Proper ideals disjoint from the given set, by lattice index.
pub(super) fn each_disjoint_ideal(
    lab: &Lab,
    s: &MultSet,
    mut f: impl FnMut(&Ideal) -> Result<()>,
) -> Result<()> {
    for ideal in lab.ideals()? {
        if ideal.is_proper() && s.is_disjoint_from(ideal) {
            f(ideal)?;
        }
    }
    Ok(())
}

pub(super) fn elems_u64(set: &crate::elemset::ElemSet) -> Vec<u64> {
    set.iter().map(|x| x as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_is_deterministic_and_sized() {
        let c = CorpusSpec::default();
        let a = corpus_rings(&c);
        let b = corpus_rings(&c);
        assert_eq!(a, b);
        let zn = a.iter().filter(|s| matches!(s, RingSpec::Zn(_))).count();
        assert_eq!(zn, 59);
        let products = a.iter().filter(|s| matches!(s, RingSpec::Product(_))).count();
        assert!(products > 100, "got {products}");
        assert!(a.iter().any(|s| matches!(s, RingSpec::Quotient { .. })));
        assert!(a.iter().any(|s| matches!(s, RingSpec::Localization { .. })));
        assert!(a.iter().any(|s| matches!(s, RingSpec::Idealization { .. })));
        assert!(a.iter().any(|s| matches!(s, RingSpec::Amalgamation { .. })));
        // the duplication used by the nonequivalence search is present
        assert!(a.contains(&RingSpec::Amalgamation {
            of: Box::new(RingSpec::Zn(6)),
            with: Box::new(RingSpec::Zn(6)),
            hom: HomSpec::Identity,
            ideal_gens: vec![3],
        }));
    }

    #[test]
    fn corpus_orders_respect_caps() {
        let c = CorpusSpec::default();
        let caps = Caps::default();
        let store = LabStore::new(caps);
        for spec in corpus_rings(&c) {
            let order = match &spec {
                RingSpec::Zn(n) => *n,
                RingSpec::Product(fs) => fs
                    .iter()
                    .map(|f| if let RingSpec::Zn(n) = f { *n } else { 0 })
                    .product(),
                RingSpec::Idealization { .. } | RingSpec::Amalgamation { .. } => {
                    store.lab(&spec).unwrap().ring().order() as u64
                }
                _ => continue,
            };
            let cap = match &spec {
                RingSpec::Zn(_) => c.zn_max,
                RingSpec::Product(_) => c.product_max,
                RingSpec::Idealization { .. } => c.idealization_max,
                RingSpec::Amalgamation { .. } => c.amalgamation_max,
                _ => unreachable!(),
            };
            assert!(order <= cap, "{spec} has order {order} over cap {cap}");
        }
    }
}
