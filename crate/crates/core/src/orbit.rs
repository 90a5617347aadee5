//! Special roots, the dual Coxeter number, and the two formulas for the
//! dimension of the minimal nilpotent orbit.
//!
//! The root-count formula `1 + #{α ∈ Δ₊ : (α, θ) ≠ 0}` is taken as the
//! definition of the dimension; `2h∨ - 2` is the identity being checked.
//! [`verify`] evaluates every identity tying these quantities together and
//! records raw values alongside the pass/fail flags.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cartan::LieType;
use crate::error::{Error, Result};
use crate::rational::{format_vec, Rational};
use crate::roots::{Root, RootSystem};
use crate::weyl::{self, Reflection};

/// Positive roots `α` with `θ - α` also a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialRoots {
    members: BTreeSet<Root>,
}

impl SpecialRoots {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.members.contains(root)
    }

    /// In root order (height, then coordinates).
    pub fn iter(&self) -> impl Iterator<Item = &Root> {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<Root> {
        &self.members
    }
}

pub fn special_roots(rs: &RootSystem) -> SpecialRoots {
    let theta = rs.theta();
    let members = rs
        .positives()
        .iter()
        .filter(|alpha| rs.is_root(&theta.minus(alpha)))
        .cloned()
        .collect();
    SpecialRoots { members }
}

/// `(ρ, θ)` as an exact rational; `h∨ - 1` when the system is consistent.
pub fn rho_theta(rs: &RootSystem) -> Rational {
    rs.form()
        .inner(rs.rho(), &rs.theta().to_rational())
        .expect("rho and theta share the system's rank")
}

/// `h∨ = (ρ, θ) + 1`, with the form normalized so `(θ, θ) = 2`.
pub fn dual_coxeter(rs: &RootSystem) -> Result<i64> {
    let value = rho_theta(rs);
    match value.to_integer() {
        Some(v) if v > 0 => Ok(v + 1),
        _ => Err(Error::NonIntegralDualCoxeter(value)),
    }
}

/// Positive roots with `(α, θ) ≠ 0`.
pub fn nonorthogonal_positives(rs: &RootSystem) -> BTreeSet<Root> {
    let theta_dual = rs
        .form()
        .covector(rs.theta().coords())
        .expect("theta has the system's rank");
    rs.positives()
        .iter()
        .filter(|alpha| {
            !alpha
                .coords()
                .iter()
                .zip(&theta_dual)
                .map(|(&a, &t)| t * a)
                .sum::<Rational>()
                .is_zero()
        })
        .cloned()
        .collect()
}

/// `1 + #{α ∈ Δ₊ : (α, θ) ≠ 0}`.
pub fn min_orbit_dim_by_roots(rs: &RootSystem) -> i64 {
    1 + nonorthogonal_positives(rs).len() as i64
}

/// `2h∨ - 2`.
pub fn min_orbit_dim_by_dual_coxeter(rs: &RootSystem) -> Result<i64> {
    Ok(2 * dual_coxeter(rs)? - 2)
}

/// `#𝕊 = 2(h∨ - 2)`, evaluated with `h∨` as an exact rational.
pub fn special_count_holds(rs: &RootSystem) -> bool {
    let h_dual = rho_theta(rs) + 1;
    Rational::from_int(special_roots(rs).len() as i64) == (h_dual - 2) * 2
}

/// `r_θ(ρ)` computed three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectedRho {
    /// Applying the reflection formula to `ρ`.
    pub direct: Vec<Rational>,
    /// `ρ - (h∨ - 1) θ`.
    pub via_dual_coxeter: Vec<Rational>,
    /// `ρ - ½(#𝕊 + 2) θ`.
    pub via_special_count: Vec<Rational>,
}

impl ReflectedRho {
    pub fn agree(&self) -> bool {
        self.direct == self.via_dual_coxeter && self.direct == self.via_special_count
    }
}

pub fn reflected_rho(rs: &RootSystem) -> ReflectedRho {
    let theta = rs.theta().to_rational();
    let rho = rs.rho();
    let shift = |k: Rational| -> Vec<Rational> {
        rho.iter().zip(&theta).map(|(&r, &t)| r - k * t).collect()
    };
    let direct = weyl::reflect(rs, rs.theta(), rho).expect("theta is a root of its own system");
    let via_dual_coxeter = shift(rho_theta(rs));
    let special = Rational::from_int(special_roots(rs).len() as i64);
    let via_special_count = shift((special + 2) / 2);
    ReflectedRho {
        direct,
        via_dual_coxeter,
        via_special_count,
    }
}

/// True iff the three computations of `r_θ(ρ)` coincide.
pub fn reflected_rho_agrees(rs: &RootSystem) -> bool {
    reflected_rho(rs).agree()
}

/// Named pass/fail flags of a [`VerificationReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    /// `r_θ` splits `Δ₊` into `{θ}`, `𝕊` (sent to `α - θ`) and the fixed roots.
    pub reflection_partition: bool,
    /// `#𝕊 = 2(h∨ - 2)`.
    pub special_count: bool,
    /// `r_θ(ρ) = ρ - (h∨ - 1)θ = ρ - ½(#𝕊 + 2)θ`.
    pub reflected_rho: bool,
    /// `1 + #{α : (α, θ) ≠ 0} = 2h∨ - 2`.
    pub dims_equal: bool,
    /// `l(r_θ) = 2h∨ - 3 = #𝕊 + 1`.
    pub reflection_length: bool,
    /// `α ∈ 𝕊 ⟺ θ - α ∈ 𝕊`.
    pub special_pairing: bool,
    /// `𝕊 ∪ {θ} = {α ∈ Δ₊ : (α, θ) ≠ 0}`.
    pub nonorthogonal_set: bool,
}

impl Checks {
    pub const NAMES: [&'static str; 7] = [
        "reflection_partition",
        "special_count",
        "reflected_rho",
        "dims_equal",
        "reflection_length",
        "special_pairing",
        "nonorthogonal_set",
    ];

    /// Flags in [`Checks::NAMES`] order.
    pub fn values(&self) -> [bool; 7] {
        [
            self.reflection_partition,
            self.special_count,
            self.reflected_rho,
            self.dims_equal,
            self.reflection_length,
            self.special_pairing,
            self.nonorthogonal_set,
        ]
    }

    pub fn named(&self) -> impl Iterator<Item = (&'static str, bool)> {
        Self::NAMES.into_iter().zip(self.values())
    }

    pub fn all(&self) -> bool {
        self.values().iter().all(|&v| v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub num_roots: usize,
    pub num_positive: usize,
    pub h_dual: i64,
    pub num_special: usize,
    /// `1 + #{α ∈ Δ₊ : (α, θ) ≠ 0}`.
    pub dim_root_count: i64,
    /// `2h∨ - 2`.
    pub dim_dual_coxeter: i64,
    /// `l(r_θ)`.
    pub l_theta: usize,
    pub checks: Checks,
    /// One line per failed check with the offending root data.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.all()
    }
}

/// Builds the root system of `t` and evaluates every identity.
pub fn verify(t: LieType) -> Result<VerificationReport> {
    verify_system(&RootSystem::for_type(t)?)
}

/// Like [`verify`], for an already built root system that knows its type.
pub fn verify_system(rs: &RootSystem) -> Result<VerificationReport> {
    let lie_type = rs.lie_type().ok_or(Error::MissingType)?;
    let (num_roots, num_positive) = rs.root_count();
    let h_dual = dual_coxeter(rs)?;
    let special = special_roots(rs);
    let theta = rs.theta();
    let mut failures = Vec::new();

    let reflection_partition = match weyl::classify_positives(rs) {
        Ok(parts) => {
            let special_part: BTreeSet<Root> = parts.special_part.iter().cloned().collect();
            let ok = parts.theta_part == [theta.clone()] && special_part == *special.members();
            if !ok {
                let stray: Vec<String> = special_part
                    .symmetric_difference(special.members())
                    .map(ToString::to_string)
                    .collect();
                failures.push(format!(
                    "reflection_partition: theta part {:?}, special part differs from special roots at {}",
                    parts.theta_part.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    stray.join(" ")
                ));
            }
            ok
        }
        Err(err) => {
            failures.push(format!("reflection_partition: {err}"));
            false
        }
    };

    let special_count = special_count_holds(rs);
    if !special_count {
        failures.push(format!(
            "special_count: #S = {} but 2(h_dual - 2) = {}",
            special.len(),
            2 * (h_dual - 2)
        ));
    }

    let rho_images = reflected_rho(rs);
    let reflected_rho = rho_images.agree();
    if !reflected_rho {
        failures.push(format!(
            "reflected_rho: direct {}, via h_dual {}, via #S {}",
            format_vec(&rho_images.direct),
            format_vec(&rho_images.via_dual_coxeter),
            format_vec(&rho_images.via_special_count)
        ));
    }

    let dim_root_count = min_orbit_dim_by_roots(rs);
    let dim_dual_coxeter = 2 * h_dual - 2;
    let dims_equal = dim_root_count == dim_dual_coxeter;
    if !dims_equal {
        failures.push(format!(
            "dims_equal: 1 + #nonorthogonal = {dim_root_count} but 2h_dual - 2 = {dim_dual_coxeter}"
        ));
    }

    let l_theta = weyl::reflection_length(rs, theta)?;
    let reflection_length = l_theta as i64 == 2 * h_dual - 3 && l_theta == special.len() + 1;
    if !reflection_length {
        let r_theta = Reflection::new(rs, theta)?;
        let inversions: Vec<String> = rs
            .positives()
            .iter()
            .filter(|b| r_theta.image(b).is_some_and(Root::is_negative))
            .map(ToString::to_string)
            .collect();
        failures.push(format!(
            "reflection_length: l(r_theta) = {l_theta}, 2h_dual - 3 = {}, #S + 1 = {}; inversions {}",
            2 * h_dual - 3,
            special.len() + 1,
            inversions.join(" ")
        ));
    }

    let unpaired: Vec<String> = special
        .iter()
        .filter(|alpha| !special.contains(&Root::new(theta.minus(alpha))))
        .map(ToString::to_string)
        .collect();
    let special_pairing = unpaired.is_empty();
    if !special_pairing {
        failures.push(format!(
            "special_pairing: theta - alpha is not special for {}",
            unpaired.join(" ")
        ));
    }

    let mut with_theta = special.members().clone();
    with_theta.insert(theta.clone());
    let nonorthogonal = nonorthogonal_positives(rs);
    let nonorthogonal_set = with_theta == nonorthogonal;
    if !nonorthogonal_set {
        let diff: Vec<String> = with_theta
            .symmetric_difference(&nonorthogonal)
            .map(ToString::to_string)
            .collect();
        failures.push(format!(
            "nonorthogonal_set: sets differ at {}",
            diff.join(" ")
        ));
    }

    Ok(VerificationReport {
        lie_type,
        num_roots,
        num_positive,
        h_dual,
        num_special: special.len(),
        dim_root_count,
        dim_dual_coxeter,
        l_theta,
        checks: Checks {
            reflection_partition,
            special_count,
            reflected_rho,
            dims_equal,
            reflection_length,
            special_pairing,
            nonorthogonal_set,
        },
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::parse_lie_type;
    use crate::rational::to_rational_vec;

    fn system(s: &str) -> RootSystem {
        RootSystem::for_type(parse_lie_type(s).unwrap()).unwrap()
    }

    fn report(s: &str) -> VerificationReport {
        verify(parse_lie_type(s).unwrap()).unwrap()
    }

    #[test]
    fn special_root_examples() {
        assert!(special_roots(&system("A1")).is_empty());
        let a2: Vec<Root> = special_roots(&system("A2")).iter().cloned().collect();
        assert_eq!(a2, vec![Root::new(vec![0, 1]), Root::new(vec![1, 0])]);
        assert_eq!(special_roots(&system("G2")).len(), 4);
    }

    #[test]
    fn dual_coxeter_examples() {
        assert_eq!(dual_coxeter(&system("A1")).unwrap(), 2);
        assert_eq!(dual_coxeter(&system("A2")).unwrap(), 3);
        assert_eq!(dual_coxeter(&system("G2")).unwrap(), 4);
        assert_eq!(dual_coxeter(&system("E8")).unwrap(), 30);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(min_orbit_dim_by_roots(&system("A1")), 2);
        assert_eq!(min_orbit_dim_by_roots(&system("A2")), 4);
        assert_eq!(min_orbit_dim_by_roots(&system("G2")), 6);
        assert_eq!(min_orbit_dim_by_dual_coxeter(&system("A1")).unwrap(), 2);
        assert_eq!(min_orbit_dim_by_dual_coxeter(&system("E8")).unwrap(), 58);
        assert_eq!(min_orbit_dim_by_dual_coxeter(&system("F4")).unwrap(), 16);
    }

    #[test]
    fn special_count_examples() {
        for name in ["A1", "A2", "G2"] {
            assert!(special_count_holds(&system(name)), "{name}");
        }
    }

    #[test]
    fn reflected_rho_examples() {
        let a1 = reflected_rho(&system("A1"));
        assert!(a1.agree());
        assert_eq!(a1.direct, vec![Rational::new(-1, 2)]);
        let a2 = reflected_rho(&system("A2"));
        assert!(a2.agree());
        assert_eq!(a2.direct, to_rational_vec(&[-1, -1]));
        assert!(reflected_rho_agrees(&system("G2")));
    }

    #[test]
    fn reports() {
        let a1 = report("A1");
        assert_eq!(
            (
                a1.h_dual,
                a1.num_special,
                a1.dim_root_count,
                a1.dim_dual_coxeter,
                a1.l_theta
            ),
            (2, 0, 2, 2, 1)
        );
        assert!(a1.passed() && a1.failures.is_empty());

        let g2 = report("G2");
        assert_eq!(
            (
                g2.h_dual,
                g2.num_special,
                g2.dim_root_count,
                g2.dim_dual_coxeter,
                g2.l_theta
            ),
            (4, 4, 6, 6, 5)
        );
        assert!(g2.passed());

        let d4 = report("D4");
        assert_eq!(
            (
                d4.h_dual,
                d4.num_special,
                d4.dim_root_count,
                d4.dim_dual_coxeter,
                d4.l_theta
            ),
            (6, 8, 10, 10, 9)
        );
        assert!(d4.passed());
    }

    #[test]
    fn bare_cartan_system_has_no_type() {
        let c = crate::cartan::cartan_matrix(parse_lie_type("A2").unwrap());
        let rs = crate::roots::generate_roots(&c).unwrap();
        assert_eq!(verify_system(&rs), Err(Error::MissingType));
    }

    #[test]
    fn damaged_root_set_is_reported() {
        // Drop the special root α1 + α2 from G2; its partner α1 + 2α2 loses its pair.
        let rs = system("G2");
        let kept: Vec<Root> = rs
            .positives()
            .iter()
            .filter(|r| r.coords() != [1, 1])
            .cloned()
            .collect();
        let damaged = rs.with_positives_for_test(kept);
        let report = verify_system(&damaged).unwrap();
        assert!(!report.passed());
        assert!(!report.checks.special_pairing || !report.checks.nonorthogonal_set);
        assert!(!report.failures.is_empty());
        assert!(
            report.failures.iter().any(|f| f.contains("[1, 2]")),
            "{:?}",
            report.failures
        );
    }
}
