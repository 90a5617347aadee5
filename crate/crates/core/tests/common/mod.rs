#![allow(dead_code)]

use std::collections::BTreeSet;

use minorbit::cartan::{Family, LieType};
use minorbit::rational::Rational;
use minorbit::roots::{oracle_roots, RootSystem};

/// A1-A12, B2-B12, C2-C12, D4-D12, E6-E8, F4, G2.
pub fn battery() -> Vec<LieType> {
    Family::ALL
        .iter()
        .flat_map(|&f| (1..=12).filter_map(move |r| LieType::new(f, r).ok()))
        .collect()
}

pub fn ty(s: &str) -> LieType {
    s.parse().unwrap()
}

/// `|Δ|` from the closed forms for each family.
pub fn expected_root_count(t: LieType) -> usize {
    let n = t.rank();
    match t.family() {
        Family::A => n * (n + 1),
        Family::B | Family::C => 2 * n * n,
        Family::D => 2 * n * (n - 1),
        Family::E => match n {
            6 => 72,
            7 => 126,
            _ => 240,
        },
        Family::F => 48,
        Family::G => 12,
    }
}

fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(&a, &b)| a * b).sum()
}

/// `h∨ = 2(ρ, θ)/(θ, θ) + 1` computed entirely in orthonormal coordinates from
/// the oracle root set; the ratio is independent of how the form is scaled.
pub fn orthonormal_h_dual(t: LieType) -> Rational {
    let oracle = oracle_roots(t);
    let coords = oracle.roots_in_simple_coords();
    let positive: Vec<(&Vec<Rational>, &Vec<i64>)> = oracle
        .roots()
        .iter()
        .zip(&coords)
        .filter(|(_, c)| c.iter().all(|&x| x >= 0))
        .collect();
    let (theta, _) = positive
        .iter()
        .max_by_key(|(_, c)| c.iter().sum::<i64>())
        .copied()
        .unwrap();
    let dim = oracle.ambient_dim();
    let mut rho = vec![Rational::ZERO; dim];
    for (v, _) in &positive {
        for (r, &x) in rho.iter_mut().zip(v.iter()) {
            *r += x / 2;
        }
    }
    dot(&rho, theta) * 2 / dot(theta, theta) + 1
}

/// `1 + Σ c_i (α_i, α_i)/2` where `θ = Σ c_i α_i`: the dual Kac labels of
/// `θ∨ = θ` summed. Uses `(ρ, α_i∨) = 1` rather than `ρ` itself.
pub fn dual_kac_h_dual(rs: &RootSystem) -> Rational {
    let form = rs.form();
    rs.theta()
        .coords()
        .iter()
        .enumerate()
        .map(|(i, &c)| form.entry(i, i) * c / 2)
        .sum::<Rational>()
        + 1
}

/// Roots of the oracle in simple-root coordinates.
pub fn oracle_set(t: LieType) -> BTreeSet<Vec<i64>> {
    oracle_roots(t)
        .roots_in_simple_coords()
        .into_iter()
        .collect()
}

pub fn generated_set(rs: &RootSystem) -> BTreeSet<Vec<i64>> {
    rs.roots().map(|r| r.coords().to_vec()).collect()
}
