//! Per-ring workspace shared by all registry checks.
//!
//! A check sweep touches the same (ideal, multiplicative set) pairs from
//! many directions, so the lab memoizes everything derived from one ring:
//! the ideal lattice, the enumerated multiplicative sets, classifiers,
//! witness lookups, colon ideals and ideal products. Labs are stored per
//! ring spec, so derived rings (quotients, localizations, lifts) built by
//! one check are reused by the next. Everything is single-threaded.

use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

use crate::classify::{Classifier, RelativePredicate};
use crate::construct::{build_ring, BuiltRing, Construction};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{all_ideals, nilradical_ideal, Ideal, MultSet};
use crate::ring::{Caps, Elem, FiniteRing, RingSpec};

/// Interns element sets so memo keys are a pair of small integers instead
/// of two bitset clones.
#[derive(Default)]
struct Interner {
    by_set: HashMap<ElemSet, usize>,
    count: usize,
}

impl Interner {
    fn intern(&mut self, set: &ElemSet) -> usize {
        if let Some(&idx) = self.by_set.get(set) {
            return idx;
        }
        let idx = self.count;
        self.count += 1;
        self.by_set.insert(set.clone(), idx);
        idx
    }
}

pub struct Lab {
    built: BuiltRing,
    caps: Caps,
    ideals: OnceCell<Vec<Ideal>>,
    by_elements: OnceCell<HashMap<ElemSet, usize>>,
    multsets: OnceCell<Vec<MultSet>>,
    nilradical: OnceCell<Ideal>,
    interner: RefCell<Interner>,
    classifiers: RefCell<HashMap<usize, Rc<Classifier>>>,
    sn_first: RefCell<HashMap<(usize, usize), Option<Elem>>>,
    sn_lists: RefCell<HashMap<usize, Rc<Vec<usize>>>>,
    colons: RefCell<HashMap<(usize, usize), ElemSet>>,
    products: RefCell<HashMap<(usize, usize), Ideal>>,
}

impl Lab {
    pub fn new(built: BuiltRing, caps: Caps) -> Lab {
        Lab {
            built,
            caps,
            ideals: OnceCell::new(),
            by_elements: OnceCell::new(),
            multsets: OnceCell::new(),
            nilradical: OnceCell::new(),
            interner: RefCell::new(Interner::default()),
            classifiers: RefCell::new(HashMap::new()),
            sn_first: RefCell::new(HashMap::new()),
            sn_lists: RefCell::new(HashMap::new()),
            colons: RefCell::new(HashMap::new()),
            products: RefCell::new(HashMap::new()),
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.built.ring
    }

    pub fn built(&self) -> &BuiltRing {
        &self.built
    }

    pub fn construction(&self) -> &Construction {
        &self.built.construction
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    /// Every ideal of the ring, in canonical (size, elements) order.
    pub fn ideals(&self) -> Result<&[Ideal]> {
        if self.ideals.get().is_none() {
            let list = all_ideals(self.ring(), &self.caps)?;
            let _ = self.ideals.set(list);
        }
        Ok(self.ideals.get().expect("just initialized"))
    }

    /// Looks a set up in the ideal lattice. Sums, products, intersections
    /// and colons of ideals always land back in the lattice, so this is
    /// how derived sets become `Ideal` values without re-validation.
    pub fn ideal_for(&self, set: &ElemSet) -> Result<Ideal> {
        if self.by_elements.get().is_none() {
            let map = self
                .ideals()?
                .iter()
                .enumerate()
                .map(|(i, ideal)| (ideal.elements().clone(), i))
                .collect();
            let _ = self.by_elements.set(map);
        }
        let map = self.by_elements.get().expect("just initialized");
        match map.get(set) {
            Some(&i) => Ok(self.ideals()?[i].clone()),
            None => Err(Error::NotAnIdeal(format!(
                "set of {} elements is not in the ideal lattice of {}",
                set.len(),
                self.ring().display_name()
            ))),
        }
    }

    pub fn nilradical(&self) -> &Ideal {
        self.nilradical.get_or_init(|| nilradical_ideal(self.ring()))
    }

    /// The corpus policy for multiplicative sets: the closure of every
    /// non-nilpotent singleton, the unit set, and one nilpotent-containing
    /// closure, deduplicated and canonically ordered.
    pub fn multsets(&self) -> &[MultSet] {
        self.multsets.get_or_init(|| {
            let ring = self.ring();
            let n = ring.order();
            let mut sets: Vec<MultSet> = Vec::new();
            let mut seen: HashMap<ElemSet, ()> = HashMap::new();
            let push = |s: MultSet, seen: &mut HashMap<ElemSet, ()>, sets: &mut Vec<MultSet>| {
                if seen.insert(s.elements().clone(), ()).is_none() {
                    sets.push(s);
                }
            };
            for g in 0..n {
                if ring.is_nilpotent(g) {
                    continue;
                }
                push(MultSet::close(ring, &[g]).expect("singleton closure"), &mut seen, &mut sets);
            }
            push(
                MultSet::from_elements(ring, ring.units()).expect("units are closed"),
                &mut seen,
                &mut sets,
            );
            let nil_seed =
                ring.nilpotents().iter().find(|&x| x != 0).unwrap_or(0);
            push(
                MultSet::close(ring, &[nil_seed]).expect("singleton closure"),
                &mut seen,
                &mut sets,
            );
            sets.sort_by(|a, b| a.elements().cmp_canonical(b.elements()));
            sets
        })
    }

    fn intern(&self, set: &ElemSet) -> usize {
        self.interner.borrow_mut().intern(set)
    }

    /// Classifier for an arbitrary ideal of this ring, cached by element set.
    pub fn classifier(&self, ideal: &Ideal) -> Rc<Classifier> {
        let idx = self.intern(ideal.elements());
        if let Some(c) = self.classifiers.borrow().get(&idx) {
            return Rc::clone(c);
        }
        let c = Rc::new(Classifier::new(ideal.clone()));
        self.classifiers.borrow_mut().insert(idx, Rc::clone(&c));
        c
    }

    /// Least witness making the ideal S-n, cached; `None` means not S-n.
    pub fn sn_witness(&self, ideal: &Ideal, s: &MultSet) -> Result<Option<Elem>> {
        let key = (self.intern(ideal.elements()), self.intern(s.elements()));
        if let Some(&w) = self.sn_first.borrow().get(&key) {
            return Ok(w);
        }
        let w = self.classifier(ideal).first_witness(s, RelativePredicate::SNIdeal)?;
        self.sn_first.borrow_mut().insert(key, w);
        Ok(w)
    }

    pub fn is_sn(&self, ideal: &Ideal, s: &MultSet) -> Result<bool> {
        Ok(self.sn_witness(ideal, s)?.is_some())
    }

    /// Indices (into [`Lab::ideals`]) of the proper ideals disjoint from S
    /// on which the S-n predicate holds.
    pub fn sn_indices(&self, s: &MultSet) -> Result<Rc<Vec<usize>>> {
        let key = self.intern(s.elements());
        if let Some(list) = self.sn_lists.borrow().get(&key) {
            return Ok(Rc::clone(list));
        }
        let mut out = Vec::new();
        for (i, ideal) in self.ideals()?.iter().enumerate() {
            if s.is_disjoint_from(ideal) && self.is_sn(ideal, s)? {
                out.push(i);
            }
        }
        let list = Rc::new(out);
        self.sn_lists.borrow_mut().insert(key, Rc::clone(&list));
        Ok(list)
    }

    /// (I : K) as an element set, cached per ordered pair.
    pub fn colon_pair(&self, i: &Ideal, k: &Ideal) -> Result<ElemSet> {
        let key = (self.intern(i.elements()), self.intern(k.elements()));
        if let Some(c) = self.colons.borrow().get(&key) {
            return Ok(c.clone());
        }
        let c = i.colon_ideal(k)?.elements().clone();
        self.colons.borrow_mut().insert(key, c.clone());
        Ok(c)
    }

    /// I*K, cached per unordered pair.
    pub fn product_pair(&self, i: &Ideal, k: &Ideal) -> Result<Ideal> {
        let (a, b) = {
            let ia = self.intern(i.elements());
            let ik = self.intern(k.elements());
            (ia.min(ik), ia.max(ik))
        };
        if let Some(p) = self.products.borrow().get(&(a, b)) {
            return Ok(p.clone());
        }
        let p = i.product(k)?;
        self.products.borrow_mut().insert((a, b), p.clone());
        Ok(p)
    }
}

/// Lab cache keyed by serialized ring spec; shared by every check in a run
/// so derived rings are built once.
pub struct LabStore {
    caps: Caps,
    labs: RefCell<HashMap<String, Rc<Lab>>>,
}

impl LabStore {
    pub fn new(caps: Caps) -> LabStore {
        LabStore { caps, labs: RefCell::new(HashMap::new()) }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn lab(&self, spec: &RingSpec) -> Result<Rc<Lab>> {
        let key = serde_json::to_string(spec).expect("ring specs serialize");
        if let Some(lab) = self.labs.borrow().get(&key) {
            return Ok(Rc::clone(lab));
        }
        let built = build_ring(spec, &self.caps)?;
        let lab = Rc::new(Lab::new(built, self.caps.clone()));
        self.labs.borrow_mut().insert(key, Rc::clone(&lab));
        Ok(lab)
    }

    pub fn lab_count(&self) -> usize {
        self.labs.borrow().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multset_policy_on_z12() {
        let store = LabStore::new(Caps::default());
        let lab = store.lab(&RingSpec::Zn(12)).unwrap();
        let sets: Vec<Vec<Elem>> =
            lab.multsets().iter().map(|s| s.elements().elements()).collect();
        // singleton closures, dedup'd, plus U(R) and closure of the least
        // nonzero nilpotent (6)
        assert!(sets.contains(&vec![1]));
        assert!(sets.contains(&vec![1, 3, 9]));
        assert!(sets.contains(&vec![1, 5, 7, 11]));
        assert!(sets.contains(&vec![0, 1, 6]));
        assert!(sets.iter().filter(|s| s.contains(&0)).count() == 1);
        for w in sets.windows(2) {
            assert!(w[0] != w[1]);
        }
    }

    #[test]
    fn memoized_lookups_agree_with_direct_computation() {
        let store = LabStore::new(Caps::default());
        let lab = store.lab(&RingSpec::Zn(12)).unwrap();
        let i4 = lab.ideal_for(&Ideal::generate(lab.ring(), &[4]).unwrap().elements().clone());
        let i4 = i4.unwrap();
        let s = MultSet::close(lab.ring(), &[3]).unwrap();
        assert_eq!(lab.sn_witness(&i4, &s).unwrap(), Some(3));
        assert_eq!(lab.sn_witness(&i4, &s).unwrap(), Some(3));
        let i2 = Ideal::generate(lab.ring(), &[2]).unwrap();
        assert_eq!(lab.colon_pair(&i4, &i2).unwrap().elements(), vec![0, 2, 4, 6, 8, 10]);
        let p = lab.product_pair(&i4, &i2).unwrap();
        assert_eq!(p.elements().elements(), vec![0, 4, 8]);
        let sn = lab.sn_indices(&s).unwrap();
        let displayed: Vec<String> =
            sn.iter().map(|&i| lab.ideals().unwrap()[i].display()).collect();
        assert_eq!(displayed, ["\u{27e8}0\u{27e9}", "\u{27e8}6\u{27e9}", "\u{27e8}4\u{27e9}", "\u{27e8}2\u{27e9}"]);
        // labs are cached by spec
        let again = store.lab(&RingSpec::Zn(12)).unwrap();
        assert!(Rc::ptr_eq(&lab, &again));
        assert_eq!(store.lab_count(), 1);
    }
}
