//! Root enumeration by height layers, plus the highest root and the Weyl
//! vector.
//!
//! Positive roots are generated from the simple roots with the root-string
//! rule: for a root `β` and simple root `α_i`, let `p` be the largest `k` with
//! `β - kα_i` a root. Then `β + α_i` is a root iff `p - ⟨β, α_i^∨⟩ > 0`.
//! The [`oracle`] submodule builds the same sets a second, independent way.

pub mod oracle;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{self, BilinearForm, CartanMatrix, LieType};
use crate::error::{Error, Result};
use crate::rational::{to_rational_vec, Rational};

pub use oracle::{oracle_roots, OracleRoots};

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Root { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coords.iter().all(|&c| c <= 0) && self.coords.iter().any(|&c| c < 0)
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        to_rational_vec(&self.coords)
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// `self - other`, which need not be a root.
    pub fn minus(&self, other: &Root) -> Vec<i64> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect()
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", items.join(", "))
    }
}

/// A fully enumerated finite root system with its normalized form.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: Option<LieType>,
    cartan: CartanMatrix,
    form: BilinearForm,
    positives: Vec<Root>,
    theta: Root,
    rho: Vec<Rational>,
    members: HashSet<Vec<i64>>,
}

impl RootSystem {
    /// Builds the root system of a named type.
    pub fn for_type(t: LieType) -> Result<Self> {
        let mut rs = generate_roots(&cartan::cartan_matrix(t))?;
        rs.lie_type = Some(t);
        Ok(rs)
    }

    pub fn lie_type(&self) -> Option<LieType> {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Normalized so that `(θ, θ) = 2`.
    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    /// Sorted by height, then lexicographically by coordinates.
    pub fn positives(&self) -> &[Root] {
        &self.positives
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    /// Half the sum of the positive roots, in simple-root coordinates.
    pub fn rho(&self) -> &[Rational] {
        &self.rho
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.members.contains(coords)
    }

    pub fn is_positive_root(&self, coords: &[i64]) -> bool {
        self.is_root(coords) && coords.iter().all(|&c| c >= 0)
    }

    /// Positive roots followed by their negatives.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positives
            .iter()
            .cloned()
            .chain(self.positives.iter().map(Root::negated))
    }

    /// `(α, β)` for roots given in simple-root coordinates.
    pub fn pairing(&self, a: &Root, b: &Root) -> Rational {
        self.form
            .inner_int(a.coords(), b.coords())
            .expect("roots of one system share its rank")
    }

    pub fn root_count(&self) -> (usize, usize) {
        root_count(self)
    }

    #[cfg(test)]
    pub(crate) fn with_positives_for_test(mut self, positives: Vec<Root>) -> Self {
        self.members = positives
            .iter()
            .flat_map(|r| [r.coords.clone(), r.negated().coords])
            .collect();
        self.positives = positives;
        self
    }
}

/// Enumerates the root system of a finite-type Cartan matrix.
pub fn generate_roots(c: &CartanMatrix) -> Result<RootSystem> {
    let n = c.rank();
    let raw_form = cartan::unnormalized_form(c)?;

    // Heights of finite root systems stay below 2n + 2 (E8 reaches 29 with
    // n = 8), so this bound only trips on non-finite input.
    let layer_bound = 4 * n + 8;

    let simple: Vec<Vec<i64>> = (0..n).map(|i| Root::simple(n, i).coords).collect();
    let mut known: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut positives: Vec<Vec<i64>> = simple.clone();
    let mut layer = simple;
    let mut height = 1;
    while !layer.is_empty() {
        if height > layer_bound {
            return Err(Error::NonFinite(layer_bound));
        }
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let down = string_depth(&known, beta, i);
                let up = down - c.coroot_pairing(beta, i);
                if up > 0 {
                    let mut raised = beta.clone();
                    raised[i] += 1;
                    next.insert(raised);
                }
            }
        }
        layer = next.into_iter().collect();
        known.extend(layer.iter().cloned());
        positives.extend(layer.iter().cloned());
        height += 1;
    }

    let mut positives: Vec<Root> = positives.into_iter().map(Root::new).collect();
    positives.sort();

    let max_height = positives.last().map(Root::height).unwrap_or(0);
    let top = positives
        .iter()
        .filter(|r| r.height() == max_height)
        .count();
    if top != 1 {
        return Err(Error::AmbiguousHighestRoot(top));
    }
    let theta = positives.last().cloned().expect("at least one simple root");

    let form = raw_form.normalize(theta.coords())?;

    let mut sum = vec![0i64; n];
    for r in &positives {
        for (s, c) in sum.iter_mut().zip(r.coords()) {
            *s += c;
        }
    }
    let rho = sum.iter().map(|&s| Rational::new(s, 2)).collect();

    let members = positives
        .iter()
        .flat_map(|r| [r.coords.clone(), r.negated().coords])
        .collect();

    Ok(RootSystem {
        lie_type: None,
        cartan: c.clone(),
        form,
        positives,
        theta,
        rho,
        members,
    })
}

/// Largest `p` with `beta - k·α_i` a positive root for every `1 ≤ k ≤ p`.
/// Reaching zero ends the string.
fn string_depth(known: &HashSet<Vec<i64>>, beta: &[i64], i: usize) -> i64 {
    let mut probe = beta.to_vec();
    let mut depth = 0;
    loop {
        probe[i] -= 1;
        if probe[i] < 0 || probe.iter().all(|&x| x == 0) || !known.contains(&probe) {
            return depth;
        }
        depth += 1;
    }
}

/// `(|Δ|, |Δ₊|)`.
pub fn root_count(rs: &RootSystem) -> (usize, usize) {
    let positive = rs.positives.len();
    (2 * positive, positive)
}
