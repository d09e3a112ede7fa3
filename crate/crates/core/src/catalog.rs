//! Named spaces with known cohomology: the base curves, symmetric powers,
//! configuration spaces, and the multiplicity strata whose tables this
//! engine both stores in closed form and re-derives spectrally. Also hosts
//! the plane-conic model of the diagonal and its line-intersection probes.

use crate::hodge::{Flavor, HodgeClass, HodgeTable};
use crate::spectral::RankAssignment;
use num::{BigRational, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("only Betti bounds are known for this stratum; ask for bounds instead of a table")]
    BoundsOnly,
    #[error("unsupported parameter for {space}: {reason}")]
    UnsupportedParameter { space: String, reason: String },
    #[error("projective point must have a nonzero coordinate")]
    ZeroVector,
    #[error("projective point has {got} coordinates, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the conic degenerates in characteristic 2")]
    CharacteristicTwo,
    #[error("could not sample a nondegenerate line after {0} attempts")]
    DegenerateSampling(u32),
}

/// Identifier of a space with a stored cohomology table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SpaceId {
    P1,
    P2,
    A1,
    Gm,
    /// Symmetric power Sym^k of the line, k ≥ 0.
    SymP1(u32),
    /// Unordered pairs of distinct points of the line.
    UConf2P1,
    /// Unordered n-tuples of distinct points of the punctured line, n ≥ 1.
    UConfGm(u32),
    /// Stratum of divisors with n simple points and two double points, n ≥ 1.
    W1n22(u32),
    /// Stratum with n simple points, one double and one triple point, n ≥ 1.
    W1n23(u32),
    /// Complement of a single degree-2 closed point of the line.
    P1MinusDeg2Point,
}

impl SpaceId {
    fn check(self) -> Result<Self, CatalogError> {
        let bad = |reason: &str| CatalogError::UnsupportedParameter {
            space: self.to_string(),
            reason: reason.to_string(),
        };
        match self {
            SpaceId::UConfGm(n) | SpaceId::W1n22(n) | SpaceId::W1n23(n) if n < 1 => {
                Err(bad("n must be at least 1"))
            }
            _ => Ok(self),
        }
    }

    /// Complex dimension.
    pub fn dimension(self) -> u32 {
        match self {
            SpaceId::P1 | SpaceId::A1 | SpaceId::Gm | SpaceId::P1MinusDeg2Point => 1,
            SpaceId::P2 | SpaceId::UConf2P1 => 2,
            SpaceId::SymP1(k) => k,
            SpaceId::UConfGm(n) => n,
            SpaceId::W1n22(n) | SpaceId::W1n23(n) => n + 2,
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceId::P1 => write!(f, "p1"),
            SpaceId::P2 => write!(f, "p2"),
            SpaceId::A1 => write!(f, "a1"),
            SpaceId::Gm => write!(f, "gm"),
            SpaceId::SymP1(k) => write!(f, "sym:p1:{k}"),
            SpaceId::UConf2P1 => write!(f, "uconf:p1:2"),
            SpaceId::UConfGm(n) => write!(f, "uconf:gm:{n}"),
            SpaceId::W1n22(n) => {
                write!(f, "w:")?;
                for _ in 0..*n {
                    write!(f, "1,")?;
                }
                write!(f, "2,2")
            }
            SpaceId::W1n23(n) => {
                write!(f, "w:")?;
                for _ in 0..*n {
                    write!(f, "1,")?;
                }
                write!(f, "2,3")
            }
            SpaceId::P1MinusDeg2Point => write!(f, "p1-deg2pt"),
        }
    }
}

impl FromStr for SpaceId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parsed = match s {
            "p1" => SpaceId::P1,
            "p2" => SpaceId::P2,
            "a1" => SpaceId::A1,
            "gm" => SpaceId::Gm,
            "uconf:p1:2" => SpaceId::UConf2P1,
            "p1-deg2pt" => SpaceId::P1MinusDeg2Point,
            _ => {
                if let Some(k) = s.strip_prefix("sym:p1:") {
                    let k: u32 = k.parse().map_err(|e| format!("bad symmetric power: {e}"))?;
                    SpaceId::SymP1(k)
                } else if let Some(n) = s.strip_prefix("uconf:gm:") {
                    let n: u32 = n.parse().map_err(|e| format!("bad configuration size: {e}"))?;
                    SpaceId::UConfGm(n)
                } else if let Some(csv) = s.strip_prefix("w:") {
                    let lambda: crate::arith::Partition = csv.parse()?;
                    let parts = lambda.parts();
                    let ones = parts.iter().take_while(|&&p| p == 1).count();
                    let tail = &parts[ones..];
                    match tail {
                        [] if ones == 2 => SpaceId::UConf2P1,
                        [2, 2] if ones >= 1 => SpaceId::W1n22(ones as u32),
                        [2, 3] if ones >= 1 => SpaceId::W1n23(ones as u32),
                        _ => {
                            return Err(format!(
                                "no stored space for the stratum w:{lambda}; supported: w:1,1 and w:1^n,2,2 and w:1^n,2,3"
                            ));
                        }
                    }
                } else {
                    return Err(format!("unknown space {s:?}"));
                }
            }
        };
        parsed.check().map_err(|e| e.to_string())
    }
}

fn tate_classes(flavor: Flavor, classes: &[(u32, i32, u64)]) -> HodgeTable {
    HodgeTable::from_classes(
        flavor,
        classes
            .iter()
            .map(|&(degree, i, mult)| HodgeClass::new(degree, i, i, mult)),
    )
}

/// Betti number of the two-double-point stratum in degree i: 1 at the ends
/// of 0..=n, 2 between, 0 outside.
fn theorem_a_dim(n: u32, i: i64) -> u64 {
    if i == 0 || i == n as i64 {
        1
    } else if i > 0 && i < n as i64 {
        2
    } else {
        0
    }
}

/// Compactly supported cohomology table of a cataloged space, in the
/// standard positive weight convention.
pub fn hc_table(space: SpaceId) -> Result<HodgeTable, CatalogError> {
    space.check()?;
    let table = match space {
        SpaceId::P1 => tate_classes(Flavor::Compact, &[(0, 0, 1), (2, 1, 1)]),
        SpaceId::P2 => tate_classes(Flavor::Compact, &[(0, 0, 1), (2, 1, 1), (4, 2, 1)]),
        SpaceId::A1 => tate_classes(Flavor::Compact, &[(2, 1, 1)]),
        SpaceId::Gm | SpaceId::P1MinusDeg2Point => {
            tate_classes(Flavor::Compact, &[(1, 0, 1), (2, 1, 1)])
        }
        SpaceId::SymP1(k) => tate_classes(
            Flavor::Compact,
            &(0..=k).map(|i| (2 * i, i as i32, 1)).collect::<Vec<_>>(),
        ),
        SpaceId::UConf2P1 => tate_classes(Flavor::Compact, &[(4, 2, 1)]),
        SpaceId::UConfGm(n) => tate_classes(
            Flavor::Compact,
            &(0..=n)
                .map(|i| (n + i, i as i32, theorem_a_dim(n, i as i64)))
                .collect::<Vec<_>>(),
        ),
        SpaceId::W1n22(n) => {
            let d = n + 2;
            tate_classes(
                Flavor::Compact,
                &(0..=n)
                    .map(|i| (2 * d - i, (d - i) as i32, theorem_a_dim(n, i as i64)))
                    .collect::<Vec<_>>(),
            )
        }
        SpaceId::W1n23(_) => return Err(CatalogError::BoundsOnly),
    };
    Ok(table)
}

/// Lower and upper bounds on the Betti numbers of the double-and-triple
/// stratum, indexed by cohomological degree 0..=n+2. The lower bounds are
/// the Betti numbers of an invariant subspace; the upper bounds total a
/// two-column second page along antidiagonals.
pub fn bounds_w1n23(n: u32) -> Result<Vec<(u64, u64)>, CatalogError> {
    if n < 2 {
        return Err(CatalogError::UnsupportedParameter {
            space: SpaceId::W1n23(n).to_string(),
            reason: "bounds need n at least 2".to_string(),
        });
    }
    Ok((0..=(n as i64 + 2))
        .map(|i| {
            let lower = theorem_a_dim(n, i);
            let upper = theorem_a_dim(n, i) + theorem_a_dim(n, i - 2);
            (lower, upper)
        })
        .collect())
}

/// Differential ranks resolving the symmetric-square page of the line: both
/// admissible first differentials have full rank 1.
pub fn rank_fixture_uconf2p1() -> RankAssignment {
    [((0, 0), 1), ((0, 2), 1)].into_iter().collect()
}

/// Differential ranks for the punctured-line configuration pages: every page
/// degenerates, so no ranks are needed.
pub fn rank_fixture_uconf_gm() -> RankAssignment {
    RankAssignment::empty()
}

/// A point of projective space with exact rational homogeneous coordinates,
/// stored with the first nonzero coordinate scaled to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    coords: Vec<BigRational>,
}

impl ProjPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self, CatalogError> {
        if !(coords.len() == 2 || coords.len() == 3) {
            return Err(CatalogError::BadLength {
                expected: 2,
                got: coords.len(),
            });
        }
        let pivot = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(CatalogError::ZeroVector)?;
        let coords = coords.into_iter().map(|c| c / pivot.clone()).collect();
        Ok(ProjPoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, CatalogError> {
        ProjPoint::new(
            coords
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    fn expect_len(&self, expected: usize) -> Result<(), CatalogError> {
        if self.coords.len() == expected {
            Ok(())
        } else {
            Err(CatalogError::BadLength {
                expected,
                got: self.coords.len(),
            })
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", rendered.join(" : "))
    }
}

/// Image of a doubled point of the line inside the plane:
/// [a : b] goes to [a² : −2ab : b²].
pub fn diagonal_coords(pt: &ProjPoint) -> Result<ProjPoint, CatalogError> {
    pt.expect_len(2)?;
    let (a, b) = (&pt.coords[0], &pt.coords[1]);
    let two = BigRational::from_integer(2.into());
    ProjPoint::new(vec![a * a, -(two * a * b), b * b])
}

/// Whether a plane point lies on the conic y² − 4xz = 0, the exact image of
/// [`diagonal_coords`].
pub fn conic_membership(pt: &ProjPoint) -> Result<bool, CatalogError> {
    pt.expect_len(3)?;
    let (x, y, z) = (&pt.coords[0], &pt.coords[1], &pt.coords[2]);
    let four = BigRational::from_integer(4.into());
    Ok((y * y - four * x * z).is_zero())
}

/// Outcome of intersecting sampled lines with the conic over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConicLineReport {
    pub field_order: u64,
    pub trials: u32,
    /// Restricted form had two distinct roots over the algebraic closure.
    pub transverse: u32,
    /// Restricted form had a double root: the line is tangent.
    pub tangent: u32,
    /// Restricted form vanished identically. A smooth conic contains no
    /// line, so this stays 0.
    pub contained: u32,
}

impl ConicLineReport {
    pub fn all_degree_two(&self) -> bool {
        self.contained == 0 && self.transverse + self.tangent == self.trials
    }
}

/// Restrict the conic form y² − 4xz to the line through two plane points,
/// parametrized as s·u + t·w over F_p. Returns the coefficients of
/// (s², st, t²); the line meets the conic in a length-2 scheme exactly when
/// these are not all zero.
pub fn conic_restriction(u: [u64; 3], w: [u64; 3], p: u64) -> [u64; 3] {
    let m = |x: i128| x.rem_euclid(p as i128) as u64;
    let [ux, uy, uz] = u.map(|c| c as i128);
    let [wx, wy, wz] = w.map(|c| c as i128);
    let q_u = m(uy * uy - 4 * ux * uz);
    let polar = m(2 * uy * wy - 4 * (ux * wz + uz * wx));
    let q_w = m(wy * wy - 4 * wx * wz);
    [q_u, polar, q_w]
}

/// Sample `trials` random lines over F_p and classify each intersection with
/// the conic via the degree of its restricted binary form. Deterministic:
/// the generator is seeded per (field, trials).
pub fn conic_line_degree(field_order: u64, trials: u32) -> Result<ConicLineReport, CatalogError> {
    if !crate::arith::is_prime(field_order) {
        return Err(CatalogError::NotPrime(field_order));
    }
    if field_order == 2 {
        return Err(CatalogError::CharacteristicTwo);
    }
    let p = field_order;
    let mut rng = ChaCha8Rng::seed_from_u64(0x636f6e6963 ^ (p << 8) ^ trials as u64);
    let mut report = ConicLineReport {
        field_order,
        trials,
        transverse: 0,
        tangent: 0,
        contained: 0,
    };
    const ATTEMPTS: u32 = 256;
    for _ in 0..trials {
        let mut found = None;
        for _ in 0..ATTEMPTS {
            let sample = |rng: &mut ChaCha8Rng| {
                [rng.gen_range(0..p), rng.gen_range(0..p), rng.gen_range(0..p)]
            };
            let u = sample(&mut rng);
            let w = sample(&mut rng);
            if u == [0, 0, 0] || w == [0, 0, 0] {
                continue;
            }
            let m = |x: i128| x.rem_euclid(p as i128) as u64;
            let cross = [
                m(u[1] as i128 * w[2] as i128 - u[2] as i128 * w[1] as i128),
                m(u[2] as i128 * w[0] as i128 - u[0] as i128 * w[2] as i128),
                m(u[0] as i128 * w[1] as i128 - u[1] as i128 * w[0] as i128),
            ];
            if cross == [0, 0, 0] {
                continue;
            }
            found = Some((u, w));
            break;
        }
        let (u, w) = found.ok_or(CatalogError::DegenerateSampling(ATTEMPTS))?;
        let form = conic_restriction(u, w, p);
        if form == [0, 0, 0] {
            report.contained += 1;
            continue;
        }
        let disc = (form[1] as i128 * form[1] as i128 - 4 * form[0] as i128 * form[2] as i128)
            .rem_euclid(p as i128);
        if disc == 0 {
            report.tangent += 1;
        } else {
            report.transverse += 1;
        }
    }
    assert!(
        report.contained == 0,
        "a smooth conic cannot contain a line"
    );
    Ok(report)
}
