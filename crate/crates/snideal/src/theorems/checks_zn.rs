//! Z_n sweeps: the arithmetic shortcut for prime-cofactor sets against the
//! brute-force scan, with the expected answers pinned inside each instance.

use crate::error::{Error, Result};
use crate::ring::RingSpec;
use crate::zn::{factorize, zn_brute_force_sn, zn_fast_classify, ZnRegime};

use super::corpus::CorpusSpec;
use super::lab::LabStore;
use super::{CheckDef, Eval, Instance, Sink};

fn regime_code(r: ZnRegime) -> u64 {
    match r {
        ZnRegime::None => 0,
        ZnRegime::AllDisjoint => 1,
    }
}

// ---------------------------------------------------------------------
// T-ZN

pub(super) const T_ZN: CheckDef = CheckDef {
    id: "T-ZN",
    summary: "single-prime Z_n classification: shortcut agrees with brute force",
    gen: gen_zn,
    eval: eval_zn,
};

fn gen_zn(c: &CorpusSpec, _store: &LabStore, sink: &mut Sink) -> Result<()> {
    for n in 2..=c.zn_max {
        for (p, _) in factorize(n) {
            let cls = zn_fast_classify(n, &[p])?;
            sink(
                Instance::new("T-ZN", RingSpec::Zn(n))
                    .put("p", vec![p])
                    .put("expect_regime", vec![regime_code(cls.regime)])
                    .put("expect_gens", cls.generators),
            )?;
        }
    }
    Ok(())
}

fn eval_zn(inst: &Instance, _store: &LabStore) -> Result<Eval> {
    let RingSpec::Zn(n) = inst.ring else {
        return Err(Error::Precondition("expected a Z_n ring".into()));
    };
    let p = inst.one("p")?;
    check_instance(inst, n, &[p])
}

// ---------------------------------------------------------------------
// T-ZNGEN

pub(super) const T_ZNGEN: CheckDef = CheckDef {
    id: "T-ZNGEN",
    summary: "multi-prime Z_n classification: shortcut agrees with brute force",
    gen: gen_zngen,
    eval: eval_zngen,
};

fn gen_zngen(c: &CorpusSpec, _store: &LabStore, sink: &mut Sink) -> Result<()> {
    for n in 2..=c.zn_max {
        let primes: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
        for mask in 1u32..(1 << primes.len()) {
            let ps: Vec<u64> = primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            let cls = zn_fast_classify(n, &ps)?;
            sink(
                Instance::new("T-ZNGEN", RingSpec::Zn(n))
                    .put("ps", ps)
                    .put("expect_regime", vec![regime_code(cls.regime)])
                    .put("expect_gens", cls.generators),
            )?;
        }
    }
    Ok(())
}

fn eval_zngen(inst: &Instance, _store: &LabStore) -> Result<Eval> {
    let RingSpec::Zn(n) = inst.ring else {
        return Err(Error::Precondition("expected a Z_n ring".into()));
    };
    let ps = inst.field("ps")?.clone();
    check_instance(inst, n, &ps)
}

fn check_instance(inst: &Instance, n: u64, primes: &[u64]) -> Result<Eval> {
    let cls = zn_fast_classify(n, primes)?;
    let brute = zn_brute_force_sn(n, primes)?;
    if brute != cls.generators {
        return Ok(Eval::violation(format!(
            "Z_{n} with P = {primes:?}: shortcut generators {:?} but brute force found {:?}",
            cls.generators, brute,
        )));
    }
    let expect_all_disjoint = cls.missing_primes.len() == 1;
    let is_all_disjoint = cls.regime == ZnRegime::AllDisjoint;
    if expect_all_disjoint != is_all_disjoint {
        return Ok(Eval::violation(format!(
            "Z_{n} with P = {primes:?}: regime {} does not match {} missing primes",
            cls.regime,
            cls.missing_primes.len(),
        )));
    }
    if inst.one("expect_regime")? != regime_code(cls.regime) {
        return Ok(Eval::violation(format!(
            "Z_{n} with P = {primes:?}: pinned regime differs from the recomputed {}",
            cls.regime,
        )));
    }
    if inst.field("expect_gens")? != &cls.generators {
        return Ok(Eval::violation(format!(
            "Z_{n} with P = {primes:?}: pinned generators differ from the recomputed {:?}",
            cls.generators,
        )));
    }
    Ok(Eval::pass())
}
