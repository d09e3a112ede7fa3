//! Symmetric and exterior powers of Hodge tables.
//!
//! Two conventions coexist and must not be conflated. The plain functors
//! ([`sym_plain`], [`ext_plain`]) treat every class as even: `Sym^k` of a
//! `D`-dimensional slot has dimension `C(D+k-1, k)` and `Λ^k` has dimension
//! `C(D, k)`, regardless of cohomological degree. The graded symmetric power
//! ([`graded_sym`]) applies the Koszul rule instead: exterior on odd-degree
//! classes, symmetric on even-degree classes. Only the Koszul version
//! computes compactly supported cohomology of symmetric products; the page
//! construction in [`crate::spectral`] needs the plain ones with the roles
//! of odd and even swapped. Fixed tables below pin both behaviours apart.

use crate::hodge::{HodgeClass, HodgeTable};

/// Exact binomial coefficient. Panics on overflow; inputs in this crate are
/// small enough that overflow indicates a logic error, not a size problem.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// `Sym^j` of a single isotypic slot: dimension `C(mult+j-1, j)`, gradings
/// scaled by `j`.
fn sym_slot(c: &HodgeClass, j: u64) -> Option<HodgeClass> {
    let dim = binomial(c.mult + j - 1, j);
    if dim == 0 {
        return None;
    }
    Some(scaled_class(c, j, dim))
}

/// `Λ^j` of a single isotypic slot: dimension `C(mult, j)`, zero for j > mult.
fn ext_slot(c: &HodgeClass, j: u64) -> Option<HodgeClass> {
    let dim = binomial(c.mult, j);
    if dim == 0 {
        return None;
    }
    Some(scaled_class(c, j, dim))
}

fn scaled_class(c: &HodgeClass, j: u64, dim: u64) -> HodgeClass {
    let j32 = u32::try_from(j).expect("power too large");
    HodgeClass::new(
        c.degree.checked_mul(j32).expect("degree overflow"),
        c.hp * j32 as i32,
        c.hq * j32 as i32,
        dim,
    )
}

/// Distribute a total power `k` over the isotypic slots of `v`, applying
/// `slot` to each and tensoring the pieces.
fn distribute(
    v: &HodgeTable,
    k: u64,
    slot: &dyn Fn(&HodgeClass, u64) -> Option<HodgeClass>,
) -> HodgeTable {
    let classes: Vec<HodgeClass> = v.classes().collect();
    fn rec(
        classes: &[HodgeClass],
        k: u64,
        flavor: crate::hodge::Flavor,
        slot: &dyn Fn(&HodgeClass, u64) -> Option<HodgeClass>,
    ) -> HodgeTable {
        let Some((head, tail)) = classes.split_first() else {
            return if k == 0 {
                HodgeTable::unit(flavor)
            } else {
                HodgeTable::empty(flavor)
            };
        };
        let mut out = HodgeTable::empty(flavor);
        for j in 0..=k {
            let Some(piece) = slot(head, j) else { continue };
            let rest = rec(tail, k - j, flavor, slot);
            if rest.is_empty() {
                continue;
            }
            let piece_table = HodgeTable::from_classes(flavor, [piece]);
            let term = piece_table.tensor(&rest).expect("single flavor");
            out = out.direct_sum(&term).expect("single flavor");
        }
        out
    }
    rec(&classes, k, v.flavor(), slot)
}

/// Plain `k`-th symmetric power: every class treated as even. Negative `k`
/// gives the zero table so that summation formulas vanish gracefully.
pub fn sym_plain(v: &HodgeTable, k: i64) -> HodgeTable {
    if k < 0 {
        return HodgeTable::empty(v.flavor());
    }
    distribute(v, k as u64, &sym_slot)
}

/// Plain `k`-th exterior power: every class treated as even. Negative `k`
/// gives the zero table.
pub fn ext_plain(v: &HodgeTable, k: i64) -> HodgeTable {
    if k < 0 {
        return HodgeTable::empty(v.flavor());
    }
    distribute(v, k as u64, &ext_slot)
}

/// Koszul-signed `k`-th symmetric power: exterior on the odd-degree part,
/// symmetric on the even-degree part. For `v = H_c(X)` this is
/// `H_c(Sym^k X)`.
pub fn graded_sym(v: &HodgeTable, k: i64) -> HodgeTable {
    if k < 0 {
        return HodgeTable::empty(v.flavor());
    }
    let odd = v.odd_part();
    let even = v.even_part();
    let mut out = HodgeTable::empty(v.flavor());
    for a in 0..=k {
        let left = ext_plain(&odd, a);
        if left.is_empty() {
            continue;
        }
        let right = sym_plain(&even, k - a);
        if right.is_empty() {
            continue;
        }
        let term = left.tensor(&right).expect("single flavor");
        out = out.direct_sum(&term).expect("single flavor");
    }
    out
}

/// Restriction of `v` to cohomological degree exactly `l`; empty for l < 0.
pub fn graded_summand(v: &HodgeTable, l: i64) -> HodgeTable {
    match u32::try_from(l) {
        Ok(l) => v.degree_slice(l),
        Err(_) => HodgeTable::empty(v.flavor()),
    }
}
