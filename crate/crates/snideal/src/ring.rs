//! Finite commutative rings with identity.
//!
//! Elements are indices `0..order`. Two backing strategies exist: formula
//! rings (`Z_n` and products of formula rings) compute arithmetic on the fly,
//! while every derived construction (quotient, localization, idealization,
//! amalgamation) materializes full addition and multiplication tables.
//!
//! Index conventions:
//! * `Z_n`: index = residue.
//! * products: mixed-radix, little-endian (the first factor varies fastest).
//! * table rings: elements sorted by their canonical underlying
//!   representation; see the individual constructions.

use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

pub type Elem = usize;

/// Size limits for ring construction and ideal enumeration.
///
/// `SNIDEAL_MAX_ORDER` overrides both order caps at once.
#[derive(Clone, Debug)]
pub struct Caps {
    /// Largest order for formula-backed rings (no tables are stored).
    pub formula_cap: u64,
    /// Largest order for table-backed rings (tables are O(order^2)).
    pub table_cap: u64,
    /// Largest order for which `all_ideals` will enumerate generically.
    pub enumeration_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { formula_cap: 1_000_000, table_cap: 65_536, enumeration_cap: 4096 }
    }
}

impl Caps {
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(n) = std::env::var("SNIDEAL_MAX_ORDER").ok().and_then(|v| v.parse().ok()) {
            caps.formula_cap = n;
            caps.table_cap = n;
        }
        caps
    }
}

/// Serializable recipe for building a ring. See `docs/schemas.md` for the
/// JSON grammar.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingSpec {
    Zn(u64),
    Product(Vec<RingSpec>),
    /// Quotient by the ideal generated by `gens` (element indices).
    Quotient { of: Box<RingSpec>, gens: Vec<u64> },
    /// Localization at the multiplicative closure of `seed`.
    Localization { of: Box<RingSpec>, seed: Vec<u64> },
    /// Idealization R(+)M of the module described by `module`.
    Idealization { of: Box<RingSpec>, module: ModuleSpec },
    /// Amalgamation of `of` with `with` along `hom`, glued over the ideal of
    /// `with` generated by `ideal_gens`.
    Amalgamation { of: Box<RingSpec>, with: Box<RingSpec>, hom: HomSpec, ideal_gens: Vec<u64> },
}

/// Module over the base ring, for idealization.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleSpec {
    /// The ring acting on itself by multiplication.
    #[serde(rename = "self")]
    SelfModule,
    /// R/I as an R-module, I generated by `gens`.
    Quotient { gens: Vec<u64> },
    /// Direct sum of cyclic groups Z_{m1} x ... x Z_{mt} with an explicit
    /// action table: `action[r][m]` is the module index of r.m.
    Cyclic { orders: Vec<u64>, action: Vec<Vec<u64>> },
}

/// How to realize the homomorphism of an amalgamation spec.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HomSpec {
    /// Identity map; requires source = target.
    Identity,
    /// x mod m from Z_n onto Z_m; requires m | n.
    CanonicalMod,
    /// Explicit image table indexed by source element.
    Table(Vec<u64>),
}

impl std::fmt::Display for RingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Z_{n}"),
            RingSpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|s| s.to_string()).collect();
                write!(f, "{}", parts.join("\u{d7}"))
            }
            RingSpec::Quotient { of, gens } => {
                write!(f, "{of}/\u{27e8}{}\u{27e9}", join_u64(gens))
            }
            RingSpec::Localization { of, seed } => {
                write!(f, "S\u{207b}\u{b9}{of} at {{{}}}", join_u64(seed))
            }
            RingSpec::Idealization { of, module } => {
                let m = match module {
                    ModuleSpec::SelfModule => "M=R".to_string(),
                    ModuleSpec::Quotient { gens } => {
                        format!("M=R/\u{27e8}{}\u{27e9}", join_u64(gens))
                    }
                    ModuleSpec::Cyclic { orders, .. } => format!("M=Z{orders:?}"),
                };
                write!(f, "{of}(+)[{m}]")
            }
            RingSpec::Amalgamation { of, with, ideal_gens, .. } => {
                write!(f, "{of}\u{22c8}J (J=\u{27e8}{}\u{27e9} in {with})", join_u64(ideal_gens))
            }
        }
    }
}

fn join_u64(xs: &[u64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

enum Backing {
    Zn { n: u64 },
    Product { factors: Vec<Arc<FiniteRing>>, strides: Vec<usize> },
    Table { add: Vec<u32>, mul: Vec<u32>, neg: Vec<u32> },
}

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

pub struct FiniteRing {
    id: u64,
    order: usize,
    spec: RingSpec,
    backing: Backing,
    zero: Elem,
    one: Elem,
    nilpotents: OnceLock<ElemSet>,
    units: OnceLock<ElemSet>,
    zero_divisors: OnceLock<ElemSet>,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.spec, self.order)
    }
}

impl FiniteRing {
    /// The ring Z_n of integers modulo n (n >= 2), formula-backed.
    pub fn zn(n: u64, caps: &Caps) -> Result<Arc<FiniteRing>> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!("Z_{n} is not supported; need n >= 2")));
        }
        if n > caps.formula_cap {
            return Err(Error::OrderCap { order: n, cap: caps.formula_cap, kind: "formula" });
        }
        Ok(Arc::new(FiniteRing {
            id: NEXT_RING_ID.fetch_add(1, AtomicOrdering::Relaxed),
            order: n as usize,
            spec: RingSpec::Zn(n),
            backing: Backing::Zn { n },
            zero: 0,
            one: 1,
            nilpotents: OnceLock::new(),
            units: OnceLock::new(),
            zero_divisors: OnceLock::new(),
        }))
    }

    /// Direct product, mixed-radix little-endian indexing. Arithmetic
    /// delegates to the factors, so no tables are stored.
    pub fn product(factors: Vec<Arc<FiniteRing>>, caps: &Caps) -> Result<Arc<FiniteRing>> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec("empty product".into()));
        }
        let mut order: u64 = 1;
        let mut strides = Vec::with_capacity(factors.len());
        for f in &factors {
            strides.push(order as usize);
            order = order
                .checked_mul(f.order as u64)
                .filter(|&o| o <= caps.formula_cap)
                .ok_or(Error::OrderCap { order: u64::MAX, cap: caps.formula_cap, kind: "formula" })?;
        }
        let spec = RingSpec::Product(factors.iter().map(|f| f.spec.clone()).collect());
        let one = factors
            .iter()
            .zip(&strides)
            .map(|(f, s)| f.one * s)
            .sum();
        Ok(Arc::new(FiniteRing {
            id: NEXT_RING_ID.fetch_add(1, AtomicOrdering::Relaxed),
            order: order as usize,
            spec,
            backing: Backing::Product { factors, strides },
            zero: 0,
            one,
            nilpotents: OnceLock::new(),
            units: OnceLock::new(),
            zero_divisors: OnceLock::new(),
        }))
    }

    /// Table-backed ring from explicit addition/multiplication tables
    /// (row-major, `t[a*order + b]`). Zero and one are located by scanning;
    /// commutativity, identities and additive inverses are validated here,
    /// while full associativity/distributivity checking is left to
    /// [`FiniteRing::verify_axioms`].
    pub(crate) fn from_tables(
        spec: RingSpec,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        caps: &Caps,
    ) -> Result<Arc<FiniteRing>> {
        if order == 0 {
            return Err(Error::InvalidSpec(format!("{spec}: empty ring")));
        }
        if order as u64 > caps.table_cap {
            return Err(Error::OrderCap { order: order as u64, cap: caps.table_cap, kind: "table" });
        }
        assert_eq!(add.len(), order * order);
        assert_eq!(mul.len(), order * order);
        let in_range = |t: &[u32]| t.iter().all(|&x| (x as usize) < order);
        if !in_range(&add) || !in_range(&mul) {
            return Err(Error::AxiomViolation(format!("{spec}: table entry out of range")));
        }
        for a in 0..order {
            for b in 0..a {
                if add[a * order + b] != add[b * order + a] {
                    return Err(Error::AxiomViolation(format!("{spec}: addition not commutative")));
                }
                if mul[a * order + b] != mul[b * order + a] {
                    return Err(Error::AxiomViolation(format!(
                        "{spec}: multiplication not commutative"
                    )));
                }
            }
        }
        let zero = (0..order)
            .find(|&z| (0..order).all(|a| add[z * order + a] == a as u32))
            .ok_or_else(|| Error::AxiomViolation(format!("{spec}: no additive identity")))?;
        let one = (0..order)
            .find(|&o| (0..order).all(|a| mul[o * order + a] == a as u32))
            .ok_or_else(|| Error::AxiomViolation(format!("{spec}: no multiplicative identity")))?;
        if order > 1 && one == zero {
            return Err(Error::AxiomViolation(format!("{spec}: 1 = 0 in a nontrivial ring")));
        }
        let mut neg = vec![u32::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| add[a * order + b] == zero as u32) {
                Some(b) => neg[a] = b as u32,
                None => {
                    return Err(Error::AxiomViolation(format!(
                        "{spec}: element {a} has no additive inverse"
                    )))
                }
            }
        }
        Ok(Arc::new(FiniteRing {
            id: NEXT_RING_ID.fetch_add(1, AtomicOrdering::Relaxed),
            order,
            spec,
            backing: Backing::Table { add, mul, neg },
            zero,
            one,
            nilpotents: OnceLock::new(),
            units: OnceLock::new(),
            zero_divisors: OnceLock::new(),
        }))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn display_name(&self) -> String {
        self.spec.to_string()
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn is_formula_backed(&self) -> bool {
        !matches!(self.backing, Backing::Table { .. })
    }

    pub fn check_elem(&self, x: Elem) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::IndexRange { index: x, order: self.order })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.backing {
            Backing::Zn { n } => {
                let s = a as u64 + b as u64;
                (if s >= *n { s - n } else { s }) as Elem
            }
            Backing::Product { factors, strides } => {
                let mut out = 0;
                for (f, &s) in factors.iter().zip(strides) {
                    out += f.add(a / s % f.order, b / s % f.order) * s;
                }
                out
            }
            Backing::Table { add, .. } => add[a * self.order + b] as Elem,
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.backing {
            Backing::Zn { n } => (a as u64 * b as u64 % n) as Elem,
            Backing::Product { factors, strides } => {
                let mut out = 0;
                for (f, &s) in factors.iter().zip(strides) {
                    out += f.mul(a / s % f.order, b / s % f.order) * s;
                }
                out
            }
            Backing::Table { mul, .. } => mul[a * self.order + b] as Elem,
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.backing {
            Backing::Zn { n } => ((*n - a as u64) % n) as Elem,
            Backing::Product { factors, strides } => {
                let mut out = 0;
                for (f, &s) in factors.iter().zip(strides) {
                    out += f.neg(a / s % f.order) * s;
                }
                out
            }
            Backing::Table { neg, .. } => neg[a] as Elem,
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// a^k by binary exponentiation; a^0 = 1.
    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Visits `(b, a*b)` for every `b` in ascending order. The Z_n backing
    /// walks the row by repeated addition, which matters in the n <= 2000
    /// agreement sweeps.
    #[inline]
    pub fn for_row(&self, a: Elem, mut visit: impl FnMut(Elem, Elem) -> bool) {
        match &self.backing {
            Backing::Zn { n } => {
                let n = *n;
                let mut v = 0u64;
                for b in 0..self.order {
                    if !visit(b, v as Elem) {
                        return;
                    }
                    v += a as u64;
                    if v >= n {
                        v -= n;
                    }
                }
            }
            Backing::Table { mul, .. } => {
                let row = &mul[a * self.order..(a + 1) * self.order];
                for (b, &ab) in row.iter().enumerate() {
                    if !visit(b, ab as Elem) {
                        return;
                    }
                }
            }
            Backing::Product { .. } => {
                for b in 0..self.order {
                    if !visit(b, self.mul(a, b)) {
                        return;
                    }
                }
            }
        }
    }

    /// x is nilpotent iff x^(2^k) = 0 for 2^k >= order: squaring past the
    /// pre-period of the power sequence either hits 0 or never will.
    pub fn is_nilpotent(&self, x: Elem) -> bool {
        let mut y = x;
        let mut span = 1usize;
        loop {
            if y == self.zero {
                return true;
            }
            if span >= self.order {
                return false;
            }
            y = self.mul(y, y);
            span <<= 1;
        }
    }

    /// Least k >= 1 with x^k = 0, if x is nilpotent.
    pub fn nilpotency_index(&self, x: Elem) -> Option<u32> {
        let mut y = x;
        for k in 1..=self.order as u32 {
            if y == self.zero {
                return Some(k);
            }
            y = self.mul(y, x);
        }
        None
    }

    /// The nilradical as an element set (cached).
    pub fn nilpotents(&self) -> &ElemSet {
        self.nilpotents.get_or_init(|| {
            ElemSet::from_iter(self.order, (0..self.order).filter(|&x| self.is_nilpotent(x)))
        })
    }

    pub fn units(&self) -> &ElemSet {
        self.units.get_or_init(|| match &self.backing {
            Backing::Zn { n } => {
                ElemSet::from_iter(self.order, (0..self.order).filter(|&x| gcd(x as u64, *n) == 1))
            }
            Backing::Product { factors, strides } => ElemSet::from_iter(
                self.order,
                (0..self.order).filter(|&x| {
                    factors.iter().zip(strides).all(|(f, &s)| f.units().contains(x / s % f.order))
                }),
            ),
            Backing::Table { .. } => ElemSet::from_iter(
                self.order,
                (0..self.order).filter(|&a| (0..self.order).any(|b| self.mul(a, b) == self.one)),
            ),
        })
    }

    /// Zero divisors, following the convention that 0 is a zero divisor in
    /// any ring of order > 1. Regular = not a zero divisor, and in a finite
    /// ring regular elements are exactly the units.
    pub fn zero_divisors(&self) -> &ElemSet {
        self.zero_divisors.get_or_init(|| match &self.backing {
            Backing::Zn { n } => {
                ElemSet::from_iter(self.order, (0..self.order).filter(|&x| gcd(x as u64, *n) != 1))
            }
            Backing::Product { factors, strides } => ElemSet::from_iter(
                self.order,
                (0..self.order).filter(|&x| {
                    factors
                        .iter()
                        .zip(strides)
                        .any(|(f, &s)| f.zero_divisors().contains(x / s % f.order))
                }),
            ),
            Backing::Table { .. } => ElemSet::from_iter(
                self.order,
                (0..self.order).filter(|&a| {
                    (0..self.order).any(|b| b != self.zero && self.mul(a, b) == self.zero)
                }),
            ),
        })
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.units().contains(x)
    }

    pub fn is_regular(&self, x: Elem) -> bool {
        !self.zero_divisors().contains(x)
    }

    pub fn element_class(&self, x: Elem) -> Result<ElementClass> {
        self.check_elem(x)?;
        Ok(ElementClass {
            index: x,
            is_unit: self.is_unit(x),
            is_nilpotent: self.is_nilpotent(x),
            is_zero_divisor: self.zero_divisors().contains(x),
            is_regular: self.is_regular(x),
            nilpotency_index: self.nilpotency_index(x),
        })
    }

    pub fn is_reduced(&self) -> bool {
        self.nilpotents().len() == 1
    }

    pub fn is_domain(&self) -> bool {
        self.zero_divisors().len() <= 1
    }

    pub fn predicates(&self) -> RingPredicates {
        let n = self.order;
        let is_field = self.units().len() == n - 1;
        let is_vnr = (0..n).all(|a| {
            let aa = self.mul(a, a);
            (0..n).any(|b| self.mul(aa, b) == a)
        });
        let units = self.units();
        let nil = self.nilpotents();
        let is_un = (0..n)
            .filter(|&x| !units.contains(x))
            .all(|x| units.iter().any(|u| nil.contains(self.mul(u, x))));
        RingPredicates { is_field, is_von_neumann_regular: is_vnr, is_un_ring: is_un }
    }

    /// Full ring-axiom verification: exhaustive for order <= 4096, otherwise
    /// a fixed-seed random sample of at least 10^5 triples.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order;
        let fail = |msg: String| Err(Error::AxiomViolation(format!("{}: {msg}", self.spec)));
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail(format!("{a} + 0 != {a}"));
            }
            if self.mul(a, self.one) != a {
                return fail(format!("{a} * 1 != {a}"));
            }
            if self.add(a, self.neg(a)) != self.zero {
                return fail(format!("{a} + (-{a}) != 0"));
            }
        }
        for a in 0..n {
            for b in 0..=a {
                if self.add(a, b) != self.add(b, a) {
                    return fail(format!("addition not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail(format!("multiplication not commutative at ({a},{b})"));
                }
            }
        }
        let check = |a: Elem, b: Elem, c: Elem| -> Result<()> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail(format!("addition not associative at ({a},{b},{c})"));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail(format!("multiplication not associative at ({a},{b},{c})"));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail(format!("distributivity fails at ({a},{b},{c})"));
            }
            Ok(())
        };
        if n <= 4096 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..100_000 {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Human-readable element label: product elements print componentwise.
    pub fn label(&self, x: Elem) -> String {
        match &self.backing {
            Backing::Product { factors, strides } => {
                let parts: Vec<String> =
                    factors.iter().zip(strides).map(|(f, &s)| f.label(x / s % f.order)).collect();
                format!("({})", parts.join(","))
            }
            _ => x.to_string(),
        }
    }

    /// Product decomposition, if this is a product ring: (factors, strides).
    pub fn product_parts(&self) -> Option<(&[Arc<FiniteRing>], &[usize])> {
        match &self.backing {
            Backing::Product { factors, strides } => Some((factors, strides)),
            _ => None,
        }
    }

    /// Modulus, if this is a Z_n ring.
    pub fn zn_modulus(&self) -> Option<u64> {
        match &self.backing {
            Backing::Zn { n } => Some(*n),
            _ => None,
        }
    }
}

/// Classification of a single element.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ElementClass {
    pub index: Elem,
    pub is_unit: bool,
    pub is_nilpotent: bool,
    pub is_zero_divisor: bool,
    pub is_regular: bool,
    pub nilpotency_index: Option<u32>,
}

/// Ring-level predicates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RingPredicates {
    pub is_field: bool,
    pub is_von_neumann_regular: bool,
    /// Every non-unit is a product of a unit and a nilpotent.
    pub is_un_ring: bool,
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n, &Caps::default()).unwrap()
    }

    /// Definitional nilpotence: scan powers x, x^2, ..., x^order.
    fn naive_nilpotent(r: &FiniteRing, x: Elem) -> bool {
        let mut y = x;
        for _ in 0..r.order() {
            if y == r.zero() {
                return true;
            }
            y = r.mul(y, x);
        }
        false
    }

    #[test]
    fn z12_arithmetic_and_masks() {
        let r = zn(12);
        assert_eq!(r.order(), 12);
        assert_eq!(r.add(7, 8), 3);
        assert_eq!(r.mul(7, 8), 8);
        assert_eq!(r.neg(5), 7);
        assert_eq!(r.pow(5, 0), 1);
        assert_eq!(r.pow(2, 4), 4);
        assert_eq!(r.units().elements(), vec![1, 5, 7, 11]);
        assert_eq!(r.nilpotents().elements(), vec![0, 6]);
        assert_eq!(
            r.zero_divisors().elements(),
            vec![0, 2, 3, 4, 6, 8, 9, 10],
        );
        r.verify_axioms().unwrap();
    }

    #[test]
    fn z8_nilradical() {
        let r = zn(8);
        assert_eq!(r.nilpotents().elements(), vec![0, 2, 4, 6]);
        assert_eq!(r.nilpotency_index(2), Some(3));
        assert_eq!(r.nilpotency_index(4), Some(2));
        assert_eq!(r.nilpotency_index(3), None);
    }

    #[test]
    fn nilpotence_matches_naive_power_scan() {
        for n in [2u64, 6, 8, 12, 16, 36, 60] {
            let r = zn(n);
            for x in 0..r.order() {
                assert_eq!(r.is_nilpotent(x), naive_nilpotent(&r, x), "Z_{n}, x={x}");
            }
        }
    }

    #[test]
    fn element_class_z6_by_brute_force() {
        let r = zn(6);
        // Cross-checked against direct products/powers in Z_6: 3 is a
        // zero divisor (3*2=0), not nilpotent, not a unit.
        let c = r.element_class(3).unwrap();
        assert!(c.is_zero_divisor && !c.is_nilpotent && !c.is_unit && !c.is_regular);
        for x in 0..6 {
            let c = r.element_class(x).unwrap();
            assert_eq!(c.is_unit, (0..6).any(|y| r.mul(x, y) == 1));
            assert_eq!(c.is_zero_divisor, (0..6).any(|y| y != 0 && r.mul(x, y) == 0));
            assert_eq!(c.is_regular, !c.is_zero_divisor);
            assert_eq!(c.is_nilpotent, naive_nilpotent(&r, x));
            // finite ring: regular iff unit
            assert_eq!(c.is_regular, c.is_unit);
        }
    }

    #[test]
    fn predicates_z5_z6_z8() {
        let p5 = zn(5).predicates();
        assert_eq!((p5.is_field, p5.is_von_neumann_regular, p5.is_un_ring), (true, true, true));
        let p6 = zn(6).predicates();
        assert_eq!((p6.is_field, p6.is_von_neumann_regular, p6.is_un_ring), (false, true, false));
        let p8 = zn(8).predicates();
        assert_eq!((p8.is_field, p8.is_von_neumann_regular, p8.is_un_ring), (false, false, true));
    }

    #[test]
    fn product_mixed_radix_little_endian() {
        let caps = Caps::default();
        let r = FiniteRing::product(vec![zn(3), zn(4)], &caps).unwrap();
        assert_eq!(r.order(), 12);
        // index = x0 + 3*x1 for (x0, x1) in Z_3 x Z_4
        let enc = |x0: usize, x1: usize| x0 + 3 * x1;
        assert_eq!(r.one(), enc(1, 1));
        assert_eq!(r.add(enc(2, 3), enc(2, 2)), enc(1, 1));
        assert_eq!(r.mul(enc(2, 3), enc(2, 2)), enc(1, 2));
        assert_eq!(r.label(enc(2, 3)), "(2,3)");
        r.verify_axioms().unwrap();
        // nilpotents are (0,0) and (0,2); units = (unit, unit)
        assert!(!r.is_reduced());
        assert_eq!(r.nilpotents().elements(), vec![enc(0, 0), enc(0, 2)]);
        assert_eq!(r.units().len(), 2 * 2);
    }

    #[test]
    fn product_masks_match_bruteforce() {
        let caps = Caps::default();
        let r = FiniteRing::product(vec![zn(2), zn(2), zn(3)], &caps).unwrap();
        for x in 0..r.order() {
            let unit = (0..r.order()).any(|y| r.mul(x, y) == r.one());
            let zd = (0..r.order()).any(|y| y != 0 && r.mul(x, y) == 0);
            assert_eq!(r.units().contains(x), unit);
            assert_eq!(r.zero_divisors().contains(x), zd);
            assert_eq!(r.is_nilpotent(x), naive_nilpotent(&r, x));
        }
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps { formula_cap: 100, table_cap: 50, enumeration_cap: 4096 };
        assert!(matches!(FiniteRing::zn(101, &caps), Err(Error::OrderCap { .. })));
        assert!(FiniteRing::zn(100, &caps).is_ok());
        assert!(matches!(FiniteRing::zn(1, &caps), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn ring_spec_json_grammar() {
        let spec = RingSpec::Quotient { of: Box::new(RingSpec::Zn(12)), gens: vec![4] };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"quotient":{"of":{"zn":12},"gens":[4]}}"#);
        let back: RingSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        let loc: RingSpec = serde_json::from_str(
            r#"{"localization":{"of":{"zn":12},"seed":[3]}}"#,
        )
        .unwrap();
        assert_eq!(loc, RingSpec::Localization { of: Box::new(RingSpec::Zn(12)), seed: vec![3] });
        let idl: RingSpec = serde_json::from_str(
            r#"{"idealization":{"of":{"zn":4},"module":"self"}}"#,
        )
        .unwrap();
        assert!(matches!(idl, RingSpec::Idealization { .. }));
    }

    #[test]
    fn for_row_agrees_with_mul() {
        for r in [zn(12), FiniteRing::product(vec![zn(2), zn(6)], &Caps::default()).unwrap()] {
            for a in 0..r.order() {
                let mut seen = Vec::new();
                r.for_row(a, |b, ab| {
                    seen.push((b, ab));
                    true
                });
                let expect: Vec<_> = (0..r.order()).map(|b| (b, r.mul(a, b))).collect();
                assert_eq!(seen, expect);
            }
        }
    }
}
