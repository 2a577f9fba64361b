//! Ideals and multiplicative sets, stored as explicit element sets.

use std::collections::HashSet;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::{gcd, Caps, Elem, FiniteRing};

/// An ideal of a [`FiniteRing`], stored as a dense element set.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    elements: ElemSet,
    generators: Option<Vec<Elem>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.elements == other.elements
    }
}
impl Eq for Ideal {}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Ideal {
    /// The ideal generated by `gens`: all multiples of the generators,
    /// closed under addition to a fixpoint. `Z_n` takes the gcd shortcut,
    /// which the tests cross-check against the generic closure.
    pub fn generate(ring: &Arc<FiniteRing>, gens: &[Elem]) -> Result<Ideal> {
        for &g in gens {
            ring.check_elem(g)?;
        }
        let elements = if let Some(n) = ring.zn_modulus() {
            let d = gens.iter().fold(n, |acc, &g| gcd(acc, g as u64)) as usize;
            ElemSet::from_iter(ring.order(), (0..ring.order()).step_by(d.max(1)))
        } else {
            let mut set = ElemSet::new(ring.order());
            set.insert(ring.zero());
            for &g in gens {
                ring.for_row(g, |_, prod| {
                    set.insert(prod);
                    true
                });
            }
            additive_closure(ring, &mut set);
            set
        };
        Ok(Ideal { ring: Arc::clone(ring), elements, generators: Some(gens.to_vec()) })
    }

    /// Wraps an explicit element set after verifying it really is an ideal
    /// (contains 0, closed under addition and under ring multiplication).
    pub fn from_elements(ring: &Arc<FiniteRing>, elems: &ElemSet) -> Result<Ideal> {
        if !elems.contains(ring.zero()) {
            return Err(Error::NotAnIdeal("0 is missing".into()));
        }
        let list = elems.elements();
        for &a in &list {
            for &b in &list {
                if !elems.contains(ring.add(a, b)) {
                    return Err(Error::NotAnIdeal(format!("{a} + {b} escapes the set")));
                }
            }
        }
        for r in 0..ring.order() {
            for &a in &list {
                if !elems.contains(ring.mul(r, a)) {
                    return Err(Error::NotAnIdeal(format!("{r} * {a} escapes the set")));
                }
            }
        }
        Ok(Ideal { ring: Arc::clone(ring), elements: elems.clone(), generators: None })
    }

    /// Internal constructor for sets that are ideals by construction.
    pub(crate) fn from_set_unchecked(ring: &Arc<FiniteRing>, elements: ElemSet) -> Ideal {
        Ideal { ring: Arc::clone(ring), elements, generators: None }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn generators(&self) -> Option<&[Elem]> {
        self.generators.as_deref()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an ideal always contains 0
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.contains(x)
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    /// Proper means I != R, equivalently 1 is not in I.
    pub fn is_proper(&self) -> bool {
        !self.elements.contains(self.ring.one())
    }

    pub fn is_whole_ring(&self) -> bool {
        self.elements.len() == self.ring.order()
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring.id() == other.ring.id() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// I + J: union closed under addition.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut set = self.elements.clone();
        set.union_with(&other.elements);
        additive_closure(&self.ring, &mut set);
        Ok(Ideal::from_set_unchecked(&self.ring, set))
    }

    /// I * J: additive closure of all pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut set = ElemSet::new(self.ring.order());
        set.insert(self.ring.zero());
        for a in self.elements.iter() {
            for b in other.elements.iter() {
                set.insert(self.ring.mul(a, b));
            }
        }
        additive_closure(&self.ring, &mut set);
        Ok(Ideal::from_set_unchecked(&self.ring, set))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut set = self.elements.clone();
        set.intersect_with(&other.elements);
        Ok(Ideal::from_set_unchecked(&self.ring, set))
    }

    /// (I : s) = { x : s*x in I }.
    pub fn colon_elem(&self, s: Elem) -> Result<Ideal> {
        self.ring.check_elem(s)?;
        let mut set = ElemSet::new(self.ring.order());
        self.ring.for_row(s, |b, prod| {
            if self.elements.contains(prod) {
                set.insert(b);
            }
            true
        });
        Ok(Ideal::from_set_unchecked(&self.ring, set))
    }

    /// (I : J) = { x : xJ \u{2286} I }, the intersection of (I : j) over
    /// generators of J (or all elements when no generators are recorded).
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut set = ElemSet::full(self.ring.order());
        match other.generators() {
            Some(gens) => {
                for &g in gens {
                    set.intersect_with(self.colon_elem(g)?.elements());
                }
            }
            None => {
                for g in other.elements.iter() {
                    set.intersect_with(self.colon_elem(g)?.elements());
                }
            }
        }
        Ok(Ideal::from_set_unchecked(&self.ring, set))
    }

    /// The radical { a : a^k in I for some k >= 1 }, computed by repeated
    /// squaring: a^(2^ceil(lg N)) lands past the pre-period of a's power
    /// sequence modulo I.
    pub fn radical(&self) -> Ideal {
        let n = self.ring.order();
        let squarings = usize::BITS - (n - 1).leading_zeros();
        let mut set = ElemSet::new(n);
        for a in 0..n {
            let mut y = a;
            for _ in 0..squarings {
                if self.elements.contains(y) {
                    break;
                }
                y = self.ring.mul(y, y);
            }
            if self.elements.contains(y) {
                set.insert(a);
            }
        }
        Ideal::from_set_unchecked(&self.ring, set)
    }

    /// Pretty form: principal ideals print as \u{27e8}g\u{27e9} with the
    /// least working generator, others as an element set.
    pub fn display(&self) -> String {
        for g in self.elements.iter() {
            let mut multiples = ElemSet::new(self.ring.order());
            self.ring.for_row(g, |_, prod| {
                multiples.insert(prod);
                true
            });
            if multiples == self.elements {
                return format!("\u{27e8}{}\u{27e9}", self.ring.label(g));
            }
        }
        let labels: Vec<String> = self.elements.iter().map(|e| self.ring.label(e)).collect();
        format!("{{{}}}", labels.join(","))
    }
}

/// The nilradical as an [`Ideal`].
pub fn nilradical_ideal(ring: &Arc<FiniteRing>) -> Ideal {
    Ideal::from_set_unchecked(ring, ring.nilpotents().clone())
}

/// Every ideal of the ring, each exactly once, sorted by (size, elements).
///
/// `Z_n` enumerates divisors directly; the generic path seeds with all
/// principal ideals and closes under pairwise sums, which reaches every
/// ideal since each is a finite sum of principal ones. The two routes are
/// cross-checked for n <= 200 in the tests.
pub fn all_ideals(ring: &Arc<FiniteRing>, caps: &Caps) -> Result<Vec<Ideal>> {
    if let Some(n) = ring.zn_modulus() {
        let mut divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        divisors.sort_unstable_by(|a, b| b.cmp(a)); // big divisor = small ideal
        return divisors
            .into_iter()
            .map(|d| Ideal::generate(ring, &[(d % n) as usize]))
            .collect();
    }
    if let Some((factors, strides)) = ring.product_parts() {
        // ideals of a finite product of unital rings are exactly the
        // products of factor ideals
        let factors = factors.to_vec();
        let strides = strides.to_vec();
        let per: Vec<Vec<Ideal>> =
            factors.iter().map(|f| all_ideals(f, caps)).collect::<Result<_>>()?;
        let mut sets: Vec<ElemSet> = vec![ElemSet::from_iter(ring.order(), [0])];
        for (k, list) in per.iter().enumerate() {
            let mut next = Vec::with_capacity(sets.len() * list.len());
            for base in &sets {
                for ideal in list {
                    let mut s = ElemSet::new(ring.order());
                    for e in base.iter() {
                        for x in ideal.elements().iter() {
                            s.insert(e + x * strides[k]);
                        }
                    }
                    next.push(s);
                }
            }
            sets = next;
        }
        sets.sort_unstable_by(|a, b| a.cmp_canonical(b));
        return Ok(sets.into_iter().map(|s| Ideal::from_set_unchecked(ring, s)).collect());
    }
    if ring.order() > caps.enumeration_cap {
        return Err(Error::EnumerationCap { order: ring.order(), cap: caps.enumeration_cap });
    }
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut principals: Vec<ElemSet> = Vec::new();
    for g in 0..ring.order() {
        let mut set = ElemSet::new(ring.order());
        ring.for_row(g, |_, prod| {
            set.insert(prod);
            true
        });
        if seen.insert(set.clone()) {
            principals.push(set);
        }
    }
    let mut stack: Vec<ElemSet> = principals.clone();
    while let Some(a) = stack.pop() {
        for p in &principals {
            if p.is_subset(&a) {
                continue;
            }
            let mut s = a.clone();
            s.union_with(p);
            additive_closure(ring, &mut s);
            if seen.insert(s.clone()) {
                stack.push(s);
            }
        }
    }
    let mut sets: Vec<ElemSet> = seen.into_iter().collect();
    sets.sort_unstable_by(|a, b| a.cmp_canonical(b));
    Ok(sets.into_iter().map(|s| Ideal::from_set_unchecked(ring, s)).collect())
}

/// I is superfluous if I + J = R forces J = R. Returns the first proper J
/// (in canonical ideal order) defeating it, if any.
pub fn is_superfluous(ideal: &Ideal, caps: &Caps) -> Result<(bool, Option<Ideal>)> {
    for j in all_ideals(ideal.ring(), caps)? {
        if j.is_whole_ring() {
            continue;
        }
        if ideal.sum(&j)?.is_whole_ring() {
            return Ok((false, Some(j)));
        }
    }
    Ok((true, None))
}

/// A multiplicatively closed subset containing 1. Zero and nilpotents are
/// allowed; 1 is inserted unconditionally by the closure.
#[derive(Clone)]
pub struct MultSet {
    ring: Arc<FiniteRing>,
    elements: ElemSet,
    seed: Option<Vec<Elem>>,
}

impl PartialEq for MultSet {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.elements == other.elements
    }
}
impl Eq for MultSet {}

impl std::fmt::Debug for MultSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl MultSet {
    /// Smallest multiplicatively closed set containing `seed` and 1: the
    /// monoid generated by the seed.
    pub fn close(ring: &Arc<FiniteRing>, seed: &[Elem]) -> Result<MultSet> {
        for &s in seed {
            ring.check_elem(s)?;
        }
        let mut set = ElemSet::new(ring.order());
        set.insert(ring.one());
        let mut stack: Vec<Elem> = vec![ring.one()];
        for &s in seed {
            if set.insert(s) {
                stack.push(s);
            }
        }
        while let Some(x) = stack.pop() {
            for &s in seed {
                let y = ring.mul(x, s);
                if set.insert(y) {
                    stack.push(y);
                }
            }
        }
        Ok(MultSet { ring: Arc::clone(ring), elements: set, seed: Some(seed.to_vec()) })
    }

    /// Wraps an explicit element set after verifying closure and 1 \u{2208} S.
    pub fn from_elements(ring: &Arc<FiniteRing>, elems: &ElemSet) -> Result<MultSet> {
        if !elems.contains(ring.one()) {
            return Err(Error::NotMultClosed("1 is missing".into()));
        }
        let list = elems.elements();
        for &a in &list {
            for &b in &list {
                if !elems.contains(ring.mul(a, b)) {
                    return Err(Error::NotMultClosed(format!("{a} * {b} escapes the set")));
                }
            }
        }
        Ok(MultSet { ring: Arc::clone(ring), elements: elems.clone(), seed: None })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn seed(&self) -> Option<&[Elem]> {
        self.seed.as_deref()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains 1
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.contains(x)
    }

    pub fn is_disjoint_from(&self, ideal: &Ideal) -> bool {
        self.elements.is_disjoint(ideal.elements())
    }

    /// All elements of S are units.
    pub fn in_units(&self) -> bool {
        self.elements.is_subset(self.ring.units())
    }

    /// The saturation S* = { x : xy in S for some y }, by brute force over y.
    pub fn saturation(&self) -> MultSet {
        let n = self.ring.order();
        let mut set = ElemSet::new(n);
        for x in 0..n {
            let mut hit = false;
            self.ring.for_row(x, |_, prod| {
                if self.elements.contains(prod) {
                    hit = true;
                    return false;
                }
                true
            });
            if hit {
                set.insert(x);
            }
        }
        MultSet { ring: Arc::clone(&self.ring), elements: set, seed: None }
    }

    pub fn display(&self) -> String {
        let labels: Vec<String> = self.elements.iter().map(|e| self.ring.label(e)).collect();
        format!("{{{}}}", labels.join(","))
    }
}

/// Closes `set` under addition by its own initial elements; since negation
/// is iterated addition in a finite group, this yields the generated
/// subgroup.
fn additive_closure(ring: &FiniteRing, set: &mut ElemSet) {
    let base: Vec<Elem> = set.elements();
    let mut stack: Vec<Elem> = base.clone();
    while let Some(x) = stack.pop() {
        for &u in &base {
            let y = ring.add(x, u);
            if set.insert(y) {
                stack.push(y);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Caps;

    fn zn(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n, &Caps::default()).unwrap()
    }

    /// Closure computed without the gcd shortcut, for cross-checking.
    fn generic_generate(ring: &Arc<FiniteRing>, gens: &[Elem]) -> ElemSet {
        let mut set = ElemSet::new(ring.order());
        set.insert(ring.zero());
        for &g in gens {
            for r in 0..ring.order() {
                set.insert(ring.mul(r, g));
            }
        }
        additive_closure(ring, &mut set);
        set
    }

    #[test]
    fn generate_z12() {
        let r = zn(12);
        let i4 = Ideal::generate(&r, &[4]).unwrap();
        assert_eq!(i4.elements().elements(), vec![0, 4, 8]);
        assert!(i4.is_proper());
        assert_eq!(i4.display(), "\u{27e8}4\u{27e9}");
        let zero = Ideal::generate(&r, &[]).unwrap();
        assert_eq!(zero.elements().elements(), vec![0]);
        let mixed = Ideal::generate(&r, &[4, 6]).unwrap();
        assert_eq!(mixed.elements().elements(), vec![0, 2, 4, 6, 8, 10]);
    }

    #[test]
    fn zn_gcd_shortcut_matches_generic_closure() {
        for n in [2u64, 6, 12, 30, 36, 60] {
            let r = zn(n);
            for g1 in 0..r.order() {
                for g2 in (0..r.order()).step_by(3) {
                    let fast = Ideal::generate(&r, &[g1, g2]).unwrap();
                    assert_eq!(fast.elements(), &generic_generate(&r, &[g1, g2]), "Z_{n} <{g1},{g2}>");
                }
            }
        }
    }

    #[test]
    fn all_ideals_z12_sorted() {
        let r = zn(12);
        let ideals = all_ideals(&r, &Caps::default()).unwrap();
        let sizes: Vec<usize> = ideals.iter().map(|i| i.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4, 6, 12]);
        let shown: Vec<String> = ideals.iter().map(|i| i.display()).collect();
        assert_eq!(
            shown,
            ["\u{27e8}0\u{27e9}", "\u{27e8}6\u{27e9}", "\u{27e8}4\u{27e9}", "\u{27e8}3\u{27e9}", "\u{27e8}2\u{27e9}", "\u{27e8}1\u{27e9}"]
        );
    }

    #[test]
    fn all_ideals_divisor_path_matches_generic_closure() {
        // The generic path must agree with the divisor shortcut; this is the
        // n <= 200 cross-check, sampled more densely at small n.
        let caps = Caps::default();
        for n in (2u64..=60).chain((61..=200).step_by(7)) {
            let r = zn(n);
            let fast: Vec<ElemSet> =
                all_ideals(&r, &caps).unwrap().into_iter().map(|i| i.elements().clone()).collect();
            // rebuild generically by forcing the non-Zn path
            let mut seen: HashSet<ElemSet> = HashSet::new();
            let mut principals: Vec<ElemSet> = Vec::new();
            for g in 0..r.order() {
                let mut set = ElemSet::new(r.order());
                for x in 0..r.order() {
                    set.insert(r.mul(g, x));
                }
                if seen.insert(set.clone()) {
                    principals.push(set);
                }
            }
            let mut stack = principals.clone();
            while let Some(a) = stack.pop() {
                for p in &principals {
                    if p.is_subset(&a) {
                        continue;
                    }
                    let mut s = a.clone();
                    s.union_with(p);
                    additive_closure(&r, &mut s);
                    if seen.insert(s.clone()) {
                        stack.push(s);
                    }
                }
            }
            let mut generic: Vec<ElemSet> = seen.into_iter().collect();
            generic.sort_unstable_by(|a, b| a.cmp_canonical(b));
            assert_eq!(fast, generic, "Z_{n}");
        }
    }

    #[test]
    fn all_ideals_product_ring() {
        let caps = Caps::default();
        let r = FiniteRing::product(vec![zn(2), zn(2)], &caps).unwrap();
        let ideals = all_ideals(&r, &caps).unwrap();
        // lattice of Z_2 x Z_2: 0, 0xZ_2, Z_2x0, whole
        assert_eq!(ideals.len(), 4);
        assert_eq!(ideals[0].len(), 1);
        assert_eq!(ideals[3].len(), 4);
    }

    #[test]
    fn all_ideals_product_path_matches_generic_closure() {
        let caps = Caps::default();
        for (a, b) in [(2u64, 8u64), (4, 9), (6, 6), (12, 4)] {
            let r = FiniteRing::product(vec![zn(a), zn(b)], &caps).unwrap();
            let n = r.order();
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for x in 0..n {
                for y in 0..n {
                    add[x * n + y] = r.add(x, y) as u32;
                    mul[x * n + y] = r.mul(x, y) as u32;
                }
            }
            // same arithmetic behind Backing::Tables takes the BFS path
            let t = FiniteRing::from_tables(r.spec().clone(), n, add, mul, &caps).unwrap();
            let fast: Vec<ElemSet> =
                all_ideals(&r, &caps).unwrap().into_iter().map(|i| i.elements().clone()).collect();
            let slow: Vec<ElemSet> =
                all_ideals(&t, &caps).unwrap().into_iter().map(|i| i.elements().clone()).collect();
            assert_eq!(fast, slow, "Z_{a} x Z_{b}");
        }
    }

    #[test]
    fn radical_and_colon_frozen_values() {
        let r = zn(12);
        let i4 = Ideal::generate(&r, &[4]).unwrap();
        assert_eq!(i4.radical().elements().elements(), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(i4.colon_elem(3).unwrap().elements().elements(), vec![0, 4, 8]);
        let nil = nilradical_ideal(&r);
        assert_eq!(nil.elements().elements(), vec![0, 6]);
        assert_eq!(nil.colon_elem(3).unwrap().elements().elements(), vec![0, 2, 4, 6, 8, 10]);
        // radical via naive scan of all powers
        for n in [6u64, 8, 12, 16, 24] {
            let r = zn(n);
            for d in 1..=r.order() {
                if r.order() % d != 0 {
                    continue;
                }
                let i = Ideal::generate(&r, &[d % r.order()]).unwrap();
                let rad = i.radical();
                for a in 0..r.order() {
                    let mut hit = false;
                    let mut y = a;
                    for _ in 0..r.order() {
                        y = r.mul(y, a);
                        if i.contains(y) {
                            hit = true;
                            break;
                        }
                    }
                    hit |= i.contains(a);
                    assert_eq!(rad.contains(a), hit, "Z_{n} rad<{d}> at {a}");
                }
            }
        }
    }

    #[test]
    fn colon_ideal_via_generators_matches_elements() {
        let r = zn(36);
        let i = Ideal::generate(&r, &[12]).unwrap();
        let j = Ideal::generate(&r, &[6]).unwrap();
        let by_gens = i.colon_ideal(&j).unwrap();
        let no_gens = Ideal::from_elements(&r, j.elements()).unwrap();
        assert_eq!(by_gens, i.colon_ideal(&no_gens).unwrap());
        // definitional check
        for x in 0..r.order() {
            let ok = j.elements().iter().all(|jj| i.contains(r.mul(x, jj)));
            assert_eq!(by_gens.contains(x), ok);
        }
    }

    #[test]
    fn sum_product_intersect() {
        let r = zn(12);
        let i4 = Ideal::generate(&r, &[4]).unwrap();
        let i6 = Ideal::generate(&r, &[6]).unwrap();
        assert_eq!(i4.sum(&i6).unwrap().elements().elements(), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(i4.product(&i6).unwrap().elements().elements(), vec![0]);
        assert_eq!(i4.intersect(&i6).unwrap().elements().elements(), vec![0]);
    }

    #[test]
    fn superfluous_frozen() {
        let r = zn(12);
        let caps = Caps::default();
        let i6 = Ideal::generate(&r, &[6]).unwrap();
        assert_eq!(is_superfluous(&i6, &caps).unwrap(), (true, None));
        let i2 = Ideal::generate(&r, &[2]).unwrap();
        let (flag, witness) = is_superfluous(&i2, &caps).unwrap();
        assert!(!flag);
        assert_eq!(witness.unwrap().elements().elements(), vec![0, 3, 6, 9]);
    }

    #[test]
    fn from_elements_validates() {
        let r = zn(12);
        assert!(Ideal::from_elements(&r, &ElemSet::from_iter(12, [0, 4])).is_err());
        assert!(Ideal::from_elements(&r, &ElemSet::from_iter(12, [0, 6])).is_ok());
        assert!(Ideal::from_elements(&r, &ElemSet::from_iter(12, [4, 8])).is_err());
    }

    #[test]
    fn multset_closures_frozen() {
        let r12 = zn(12);
        let s = MultSet::close(&r12, &[3]).unwrap();
        assert_eq!(s.elements().elements(), vec![1, 3, 9]);
        let r8 = zn(8);
        let s2 = MultSet::close(&r8, &[2]).unwrap();
        assert_eq!(s2.elements().elements(), vec![0, 1, 2, 4]); // 2^3 = 0 joins the closure
        let r30 = zn(30);
        let s3 = MultSet::close(&r30, &[2]).unwrap();
        assert_eq!(s3.elements().elements(), vec![1, 2, 4, 8, 16]);
        assert!(MultSet::from_elements(&r12, &ElemSet::from_iter(12, [1, 3])).is_err()); // 9 missing
        assert!(MultSet::from_elements(&r12, &ElemSet::from_iter(12, [1, 3, 9])).is_ok());
        assert!(MultSet::from_elements(&r12, &ElemSet::from_iter(12, [3, 9])).is_err()); // 1 missing
    }

    #[test]
    fn saturation_frozen() {
        let r12 = zn(12);
        let s = MultSet::close(&r12, &[3]).unwrap();
        assert_eq!(s.saturation().elements().elements(), vec![1, 3, 5, 7, 9, 11]);
        let r5 = zn(5);
        let trivial = MultSet::close(&r5, &[]).unwrap();
        assert_eq!(trivial.saturation().elements().elements(), vec![1, 2, 3, 4]);
        // saturation is idempotent and contains S
        let sat = s.saturation();
        assert!(s.elements().is_subset(sat.elements()));
        assert_eq!(sat.saturation().elements(), sat.elements());
    }

    #[test]
    fn disjointness() {
        let r = zn(12);
        let s = MultSet::close(&r, &[3]).unwrap();
        assert!(s.is_disjoint_from(&Ideal::generate(&r, &[4]).unwrap()));
        assert!(!s.is_disjoint_from(&Ideal::generate(&r, &[3]).unwrap()));
        assert!(s.in_units() == false);
        assert!(MultSet::close(&r, &[5]).unwrap().in_units());
    }
}
