//! Finite commutative rings with a classification laboratory for ideals
//! relative to multiplicative sets.
//!
//! The crate builds concrete finite rings (residue rings, products,
//! quotients, localizations, idealizations, amalgamations), enumerates
//! their ideals and multiplicative sets, and decides a family of
//! prime-like predicates with explicit witnesses and counterexamples.

pub mod classify;
pub mod cli;
pub mod construct;
pub mod elemset;
pub mod error;
pub mod ideal;
pub mod ring;
pub mod theorems;
pub mod zn;

pub use classify::{
    absolute_verdict, all_s_n_ideals, classify_ideal, maximal_s_n_ideals, relative_verdict,
    AbsolutePredicate, Classifier, IdealReport, RelativePredicate, RowTable, Verdict,
};
pub use construct::{
    amalgamation, build_ring, idealization, localization, product_ideal, product_multset,
    quotient_ring, whole_ideal, AmalgData, BuiltRing, Construction, IdealizationData,
    LocalizationData, Module, QuotientData, RingHom,
};
pub use theorems::{
    all_checks, find_check, render_json, render_text, replay, run_all, run_check,
    total_violations, CheckDef, CheckReport, CorpusSpec, Eval, Instance, InstanceRecord, Lab,
    LabStore, Status,
};
pub use zn::{factorize, zn_fast_classify, ZnClassification, ZnRegime};
pub use elemset::ElemSet;
pub use error::{Error, Result};
pub use ideal::{all_ideals, is_superfluous, nilradical_ideal, Ideal, MultSet};
pub use ring::{Caps, Elem, FiniteRing, HomSpec, ModuleSpec, RingSpec};
