//! Graded vector spaces with pure Hodge pieces.
//!
//! A [`HodgeTable`] records, for one cohomology theory (ordinary or compactly
//! supported), the multiplicity of each `(degree, p, q)` triple. The weight of
//! a class is always `p + q` and is never stored separately. Tables are kept
//! in canonical form: at most one entry per triple, no zero multiplicities.
//!
//! All stored examples in this crate use the standard Deligne weights, so the
//! compactly supported cohomology of the punctured line is
//! `{(1,(0,0)), (2,(1,1))}`.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Which cohomology theory a table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Ordinary,
    Compact,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Ordinary => write!(f, "ordinary"),
            Flavor::Compact => write!(f, "compact"),
        }
    }
}

/// One graded piece: cohomological degree, Hodge bidegree and multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HodgeClass {
    pub degree: u32,
    #[serde(rename = "p")]
    pub hp: i32,
    #[serde(rename = "q")]
    pub hq: i32,
    pub mult: u64,
}

impl HodgeClass {
    pub fn new(degree: u32, hp: i32, hq: i32, mult: u64) -> Self {
        HodgeClass { degree, hp, hq, mult }
    }

    /// Weight is derived, never stored.
    pub fn weight(&self) -> i32 {
        self.hp + self.hq
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HodgeError {
    #[error("flavor mismatch in {op}: {left} vs {right}")]
    FlavorMismatch {
        op: &'static str,
        left: Flavor,
        right: Flavor,
    },
    #[error("dual of a class in degree {degree} lands outside [0, {max}]")]
    DegreeOutOfRange { degree: u32, max: u32 },
}

/// A finite multiset of Hodge classes with a flavor tag.
///
/// Canonical form is maintained eagerly: inserting a class merges its
/// multiplicity into any existing entry with the same `(degree, p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TableRepr", try_from = "TableRepr")]
pub struct HodgeTable {
    flavor: Flavor,
    classes: BTreeMap<(u32, i32, i32), u64>,
}

/// Wire form: a flavor plus a plain array of class records.
#[derive(Serialize, Deserialize)]
struct TableRepr {
    flavor: Flavor,
    classes: Vec<HodgeClass>,
}

impl From<HodgeTable> for TableRepr {
    fn from(t: HodgeTable) -> Self {
        TableRepr {
            flavor: t.flavor,
            classes: t.classes().collect(),
        }
    }
}

impl TryFrom<TableRepr> for HodgeTable {
    type Error = String;

    fn try_from(r: TableRepr) -> Result<Self, String> {
        for c in &r.classes {
            if c.mult == 0 {
                return Err("zero-multiplicity class in serialized table".into());
            }
        }
        Ok(HodgeTable::from_classes(r.flavor, r.classes))
    }
}

impl HodgeTable {
    pub fn empty(flavor: Flavor) -> Self {
        HodgeTable {
            flavor,
            classes: BTreeMap::new(),
        }
    }

    /// The tensor unit: one class in degree 0 of type (0,0).
    pub fn unit(flavor: Flavor) -> Self {
        let mut t = Self::empty(flavor);
        t.add_class(HodgeClass::new(0, 0, 0, 1));
        t
    }

    pub fn from_classes(flavor: Flavor, classes: impl IntoIterator<Item = HodgeClass>) -> Self {
        let mut t = Self::empty(flavor);
        for c in classes {
            t.add_class(c);
        }
        t
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Classes in canonical `(degree, p, q)` order.
    pub fn classes(&self) -> impl Iterator<Item = HodgeClass> + '_ {
        self.classes
            .iter()
            .map(|(&(degree, hp, hq), &mult)| HodgeClass { degree, hp, hq, mult })
    }

    /// Merge a class in, keeping canonical form. Zero multiplicities are dropped.
    pub fn add_class(&mut self, c: HodgeClass) {
        if c.mult == 0 {
            return;
        }
        *self.classes.entry((c.degree, c.hp, c.hq)).or_insert(0) += c.mult;
    }

    pub fn mult_at(&self, degree: u32, hp: i32, hq: i32) -> u64 {
        self.classes.get(&(degree, hp, hq)).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> u64 {
        self.classes.values().sum()
    }

    pub fn dim_in_degree(&self, degree: u32) -> u64 {
        self.classes
            .iter()
            .filter(|(&(d, _, _), _)| d == degree)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.classes.keys().map(|&(d, _, _)| d).max()
    }

    /// Restriction to the classes of one cohomological degree.
    pub fn degree_slice(&self, degree: u32) -> HodgeTable {
        HodgeTable {
            flavor: self.flavor,
            classes: self
                .classes
                .iter()
                .filter(|(&(d, _, _), _)| d == degree)
                .map(|(&k, &m)| (k, m))
                .collect(),
        }
    }

    /// The odd-degree part of the table.
    pub fn odd_part(&self) -> HodgeTable {
        self.parity_part(1)
    }

    /// The even-degree part of the table.
    pub fn even_part(&self) -> HodgeTable {
        self.parity_part(0)
    }

    fn parity_part(&self, parity: u32) -> HodgeTable {
        HodgeTable {
            flavor: self.flavor,
            classes: self
                .classes
                .iter()
                .filter(|(&(d, _, _), _)| d % 2 == parity)
                .map(|(&k, &m)| (k, m))
                .collect(),
        }
    }

    /// Remove `mult` from the entry at `(degree, hp, hq)`. Returns how much
    /// was actually removed.
    pub(crate) fn remove_mult(&mut self, degree: u32, hp: i32, hq: i32, mult: u64) -> u64 {
        match self.classes.get_mut(&(degree, hp, hq)) {
            None => 0,
            Some(m) => {
                let taken = mult.min(*m);
                *m -= taken;
                if *m == 0 {
                    self.classes.remove(&(degree, hp, hq));
                }
                taken
            }
        }
    }

    pub fn direct_sum(&self, other: &HodgeTable) -> Result<HodgeTable, HodgeError> {
        self.check_flavor(other, "direct_sum")?;
        let mut out = self.clone();
        for c in other.classes() {
            out.add_class(c);
        }
        Ok(out)
    }

    /// Graded tensor product: degrees and Hodge bidegrees add, multiplicities
    /// multiply. Bilinear over `direct_sum`.
    pub fn tensor(&self, other: &HodgeTable) -> Result<HodgeTable, HodgeError> {
        self.check_flavor(other, "tensor")?;
        let mut out = HodgeTable::empty(self.flavor);
        for a in self.classes() {
            for b in other.classes() {
                out.add_class(HodgeClass::new(
                    a.degree + b.degree,
                    a.hp + b.hp,
                    a.hq + b.hq,
                    a.mult * b.mult,
                ));
            }
        }
        Ok(out)
    }

    /// Twist by the `k`-th power of the Tate structure: `(p, q)` becomes
    /// `(p - k, q - k)`; degrees are unchanged and the weight shifts by `-2k`.
    pub fn tate_twist(&self, k: i32) -> HodgeTable {
        HodgeTable {
            flavor: self.flavor,
            classes: self
                .classes
                .iter()
                .map(|(&(d, p, q), &m)| ((d, p - k, q - k), m))
                .collect(),
        }
    }

    /// Poincaré duality for a smooth connected variety of complex dimension
    /// `d`: `(i, p, q)` maps to `(2d-i, d-p, d-q)` and the flavor flips.
    /// Involutive when applied twice at the same `d`.
    pub fn poincare_dual(&self, d: u32) -> Result<HodgeTable, HodgeError> {
        let mut out = HodgeTable::empty(match self.flavor {
            Flavor::Ordinary => Flavor::Compact,
            Flavor::Compact => Flavor::Ordinary,
        });
        for c in self.classes() {
            if c.degree > 2 * d {
                return Err(HodgeError::DegreeOutOfRange {
                    degree: c.degree,
                    max: 2 * d,
                });
            }
            out.add_class(HodgeClass::new(
                2 * d - c.degree,
                d as i32 - c.hp,
                d as i32 - c.hq,
                c.mult,
            ));
        }
        Ok(out)
    }

    /// The Hodge–Deligne polynomial `Σ (-1)^degree · mult · u^p v^q` of a
    /// compactly supported table.
    pub fn epoly(&self) -> EPoly {
        assert_eq!(
            self.flavor,
            Flavor::Compact,
            "epoly is defined on compactly supported tables"
        );
        let mut e = EPoly::zero();
        for c in self.classes() {
            let sign = if c.degree % 2 == 0 { 1 } else { -1 };
            e.add_term(c.hp, c.hq, sign * c.mult as i64);
        }
        e
    }

    /// Dimensions per cohomological degree, trailing zeros trimmed.
    pub fn betti(&self) -> Vec<u64> {
        let Some(max) = self.max_degree() else {
            return Vec::new();
        };
        (0..=max).map(|d| self.dim_in_degree(d)).collect()
    }

    /// Alternating sum of dimensions.
    pub fn euler_characteristic(&self) -> i64 {
        self.classes()
            .map(|c| if c.degree % 2 == 0 { c.mult as i64 } else { -(c.mult as i64) })
            .sum()
    }

    /// Check the standard weight bounds for a smooth `d`-fold: in ordinary
    /// cohomology `degree ≤ weight ≤ 2·degree`, in compactly supported
    /// cohomology `2·degree - 2d ≤ weight ≤ degree`. Violations are report
    /// content, not errors.
    pub fn weight_window_check(&self, d: u32) -> WeightWindowReport {
        let mut violations = Vec::new();
        for c in self.classes() {
            let deg = c.degree as i32;
            let (lo, hi) = match self.flavor {
                Flavor::Ordinary => (deg, 2 * deg),
                Flavor::Compact => (2 * deg - 2 * d as i32, deg),
            };
            let w = c.weight();
            if w < lo || w > hi {
                violations.push(WeightViolation {
                    class: c,
                    weight: w,
                    window: (lo, hi),
                });
            }
        }
        WeightWindowReport {
            flavor: self.flavor,
            dimension: d,
            pass: violations.is_empty(),
            violations,
        }
    }

    fn check_flavor(&self, other: &HodgeTable, op: &'static str) -> Result<(), HodgeError> {
        if self.flavor != other.flavor {
            return Err(HodgeError::FlavorMismatch {
                op,
                left: self.flavor,
                right: other.flavor,
            });
        }
        Ok(())
    }
}

/// A class outside its weight window, with the window that excluded it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightViolation {
    pub class: HodgeClass,
    pub weight: i32,
    pub window: (i32, i32),
}

impl fmt::Display for WeightViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree {} class of type ({},{}) has weight {} outside {}..={}",
            self.class.degree, self.class.hp, self.class.hq, self.weight, self.window.0, self.window.1
        )
    }
}

/// Outcome of [`HodgeTable::weight_window_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightWindowReport {
    pub flavor: Flavor,
    pub dimension: u32,
    pub pass: bool,
    pub violations: Vec<WeightViolation>,
}

/// A two-variable integer polynomial in `u, v`, the E-polynomial realization
/// of a class. Exact coefficients, finitely supported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EPoly {
    coeffs: BTreeMap<(i32, i32), i64>,
}

impl EPoly {
    pub fn zero() -> Self {
        EPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(p: i32, q: i32, coeff: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(p, q, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, p: i32, q: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry((p, q)).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&(p, q));
        }
    }

    /// Terms in ascending `(p, q)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.coeffs.iter().map(|(&(p, q), &c)| (p, q, c))
    }

    pub fn add(&self, other: &EPoly) -> EPoly {
        let mut out = self.clone();
        for (p, q, c) in other.terms() {
            out.add_term(p, q, c);
        }
        out
    }

    pub fn neg(&self) -> EPoly {
        EPoly {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &EPoly) -> EPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &EPoly) -> EPoly {
        let mut out = EPoly::zero();
        for (p1, q1, c1) in self.terms() {
            for (p2, q2, c2) in other.terms() {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }

    /// True when every monomial has `p = q`.
    pub fn is_tate(&self) -> bool {
        self.terms().all(|(p, q, _)| p == q)
    }

    /// Specialize `uv → q` for Tate polynomials: the monomial `c·u^k v^k`
    /// contributes `c·q^k`. Returns `None` when a non-Tate monomial is
    /// present or an exponent is negative.
    pub fn eval_uv(&self, q: i64) -> Option<i64> {
        let mut total: i64 = 0;
        for (p, pq, c) in self.terms() {
            if p != pq || p < 0 {
                return None;
            }
            total += c * q.pow(p as u32);
        }
        Some(total)
    }

    /// The diagonal exponents `k → coefficient of (uv)^k`, when Tate.
    pub fn diagonal_coeffs(&self) -> Option<BTreeMap<i32, i64>> {
        if !self.is_tate() {
            return None;
        }
        Some(self.terms().map(|(p, _, c)| (p, c)).collect())
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<_> = self.coeffs.iter().rev().collect();
        for (i, (&(p, q), &c)) in terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if mag != 1 || (p == 0 && q == 0) {
                factors.push(mag.to_string());
            }
            match p {
                0 => {}
                1 => factors.push("u".into()),
                _ => factors.push(format!("u^{p}")),
            }
            match q {
                0 => {}
                1 => factors.push("v".into()),
                _ => factors.push(format!("v^{q}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Serialize for EPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            p: i32,
            q: i32,
            coeff: i64,
        }
        serializer.collect_seq(self.terms().map(|(p, q, coeff)| Term { p, q, coeff }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn hc_gm() -> HodgeTable {
        HodgeTable::from_classes(
            Flavor::Compact,
            [HodgeClass::new(1, 0, 0, 1), HodgeClass::new(2, 1, 1, 1)],
        )
    }

    pub(crate) fn hc_p1() -> HodgeTable {
        HodgeTable::from_classes(
            Flavor::Compact,
            [HodgeClass::new(0, 0, 0, 1), HodgeClass::new(2, 1, 1, 1)],
        )
    }

    #[test]
    fn direct_sum_identity_and_merge() {
        let v = hc_gm();
        let empty = HodgeTable::empty(Flavor::Compact);
        assert_eq!(empty.direct_sum(&v).unwrap(), v);

        let single = HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(1, 0, 0, 1)]);
        let doubled = single.direct_sum(&single).unwrap();
        assert_eq!(doubled.mult_at(1, 0, 0), 2);

        let two_gm = v.direct_sum(&v).unwrap();
        assert_eq!(two_gm.mult_at(1, 0, 0), 2);
        assert_eq!(two_gm.mult_at(2, 1, 1), 2);
    }

    #[test]
    fn direct_sum_flavor_mismatch() {
        let v = hc_gm();
        let w = HodgeTable::unit(Flavor::Ordinary);
        assert!(matches!(
            v.direct_sum(&w),
            Err(HodgeError::FlavorMismatch { op: "direct_sum", .. })
        ));
    }

    #[test]
    fn tensor_unit_and_gradings() {
        let v = hc_gm();
        let unit = HodgeTable::unit(Flavor::Compact);
        assert_eq!(v.tensor(&unit).unwrap(), v);

        let a = HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(1, 0, 0, 1)]);
        let b = HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(2, 1, 1, 1)]);
        let ab = a.tensor(&b).unwrap();
        assert_eq!(ab, HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(3, 1, 1, 1)]));

        let c = HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(1, 0, 0, 2)]);
        let cc = c.tensor(&c).unwrap();
        assert_eq!(cc, HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(2, 0, 0, 4)]));
    }

    #[test]
    fn tate_twist_definition() {
        let v = hc_gm();
        assert_eq!(v.tate_twist(0), v);

        let point = HodgeTable::unit(Flavor::Compact);
        let twisted = point.tate_twist(-1);
        assert_eq!(twisted, HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(0, 1, 1, 1)]));
        assert_eq!(twisted.classes().next().unwrap().weight(), 2);

        assert_eq!(v.tate_twist(3).tate_twist(-3), v);
    }

    #[test]
    fn poincare_dual_tables() {
        let dual_gm = hc_gm().poincare_dual(1).unwrap();
        assert_eq!(dual_gm.flavor(), Flavor::Ordinary);
        assert_eq!(
            dual_gm,
            HodgeTable::from_classes(
                Flavor::Ordinary,
                [HodgeClass::new(0, 0, 0, 1), HodgeClass::new(1, 1, 1, 1)],
            )
        );

        let uconf2 = HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(4, 2, 2, 1)]);
        assert_eq!(uconf2.poincare_dual(2).unwrap(), HodgeTable::unit(Flavor::Ordinary));

        assert_eq!(hc_gm().poincare_dual(1).unwrap().poincare_dual(1).unwrap(), hc_gm());
    }

    #[test]
    fn poincare_dual_degree_out_of_range() {
        let v = HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(4, 2, 2, 1)]);
        assert!(matches!(
            v.poincare_dual(1),
            Err(HodgeError::DegreeOutOfRange { degree: 4, max: 2 })
        ));
    }

    #[test]
    fn epoly_fixtures() {
        let mut expected = EPoly::monomial(1, 1, 1);
        expected.add_term(0, 0, -1);
        assert_eq!(hc_gm().epoly(), expected);
        assert_eq!(hc_gm().epoly().to_string(), "u*v - 1");

        let mut p1 = EPoly::one();
        p1.add_term(1, 1, 1);
        assert_eq!(hc_p1().epoly(), p1);

        let uconf2 = HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(4, 2, 2, 1)]);
        assert_eq!(uconf2.epoly(), EPoly::monomial(2, 2, 1));
        assert_eq!(uconf2.epoly().to_string(), "u^2*v^2");
    }

    #[test]
    fn betti_sequences() {
        assert_eq!(HodgeTable::empty(Flavor::Compact).betti(), Vec::<u64>::new());
        assert_eq!(hc_p1().betti(), vec![1, 0, 1]);

        // Stratum with n = 3 simple points and two double points, ordinary side.
        let w = HodgeTable::from_classes(
            Flavor::Ordinary,
            [
                HodgeClass::new(0, 0, 0, 1),
                HodgeClass::new(1, 1, 1, 2),
                HodgeClass::new(2, 2, 2, 2),
                HodgeClass::new(3, 3, 3, 1),
            ],
        );
        assert_eq!(w.betti(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn weight_window_examples() {
        let ok = HodgeTable::from_classes(Flavor::Ordinary, [HodgeClass::new(1, 1, 1, 1)]);
        assert!(ok.weight_window_check(1).pass);

        let bad = HodgeTable::from_classes(Flavor::Ordinary, [HodgeClass::new(1, 2, 2, 1)]);
        let report = bad.weight_window_check(4);
        assert!(!report.pass);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].weight, 4);
        assert_eq!(report.violations[0].window, (1, 2));

        let compact = HodgeTable::from_classes(Flavor::Compact, [HodgeClass::new(4, 2, 2, 1)]);
        assert!(compact.weight_window_check(2).pass);
    }

    #[test]
    fn epoly_signs_with_odd_classes() {
        // Two-class fixture: epoly is a ring map up to the sign bookkeeping.
        let a = hc_gm();
        let b = hc_gm();
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(sum.epoly(), a.epoly().add(&b.epoly()));
        let prod = a.tensor(&b).unwrap();
        assert_eq!(prod.epoly(), a.epoly().mul(&b.epoly()));
    }

    #[test]
    fn serde_wire_format() {
        let v = hc_gm();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(
            json,
            r#"{"flavor":"compact","classes":[{"degree":1,"p":0,"q":0,"mult":1},{"degree":2,"p":1,"q":1,"mult":1}]}"#
        );
        let back: HodgeTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    prop_compose! {
        fn arb_table(max_classes: usize)
            (classes in prop::collection::vec(
                (0u32..5, -3i32..4, -3i32..4, 1u64..4).prop_map(|(d, p, q, m)| HodgeClass::new(d, p, q, m)),
                0..max_classes,
            )) -> HodgeTable
        {
            HodgeTable::from_classes(Flavor::Compact, classes)
        }
    }

    proptest! {
        #[test]
        fn tensor_distributes_over_direct_sum(a in arb_table(4), b in arb_table(4), c in arb_table(4)) {
            let lhs = a.tensor(&b.direct_sum(&c).unwrap()).unwrap();
            let rhs = a.tensor(&b).unwrap().direct_sum(&a.tensor(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn epoly_is_additive_and_multiplicative(a in arb_table(4), b in arb_table(4)) {
            prop_assert_eq!(a.direct_sum(&b).unwrap().epoly(), a.epoly().add(&b.epoly()));
            prop_assert_eq!(a.tensor(&b).unwrap().epoly(), a.epoly().mul(&b.epoly()));
        }

        #[test]
        fn dual_is_involutive_and_twists_invert(v in arb_table(4), k in -3i32..4) {
            let d = 6u32; // all generated degrees are ≤ 8 ≤ 2d
            prop_assert_eq!(v.poincare_dual(d).unwrap().poincare_dual(d).unwrap(), v.clone());
            prop_assert_eq!(v.tate_twist(k).tate_twist(-k), v.clone());
        }

        #[test]
        fn betti_flips_under_duality(v in arb_table(4)) {
            let d = 6u32;
            let dual = v.poincare_dual(d).unwrap();
            for i in 0..=2 * d {
                prop_assert_eq!(v.dim_in_degree(i), dual.dim_in_degree(2 * d - i));
            }
        }
    }
}
