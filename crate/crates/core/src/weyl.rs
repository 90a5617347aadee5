//! Reflections in roots and the Coxeter length of a reflection.
//!
//! Length is the size of the inversion set, `l(w) = #{β ∈ Δ₊ : w(β) ∈ Δ₋}`,
//! which equals the length of a reduced word for `w`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rational::{to_integer_vec, Rational};
use crate::roots::{Root, RootSystem};

/// The reflection `r_α` of one root system, with the images of all roots
/// precomputed.
#[derive(Debug, Clone)]
pub struct Reflection {
    axis: Root,
    /// `x ↦ 2(x, α)/(α, α)` as a row vector over simple-root coordinates.
    coroot: Vec<Rational>,
    images: HashMap<Root, Root>,
}

impl Reflection {
    pub fn new(rs: &RootSystem, axis: &Root) -> Result<Self> {
        if axis.coords().len() != rs.rank() || !rs.is_root(axis.coords()) {
            return Err(Error::NotARoot(axis.coords().to_vec()));
        }
        let form = rs.form();
        let norm = rs.pairing(axis, axis);
        let coroot: Vec<Rational> = (0..rs.rank())
            .map(|j| {
                let cross: Rational = (0..rs.rank())
                    .map(|k| form.entry(j, k) * axis.coords()[k])
                    .sum();
                cross * 2 / norm
            })
            .collect();
        let mut reflection = Reflection {
            axis: axis.clone(),
            coroot,
            images: HashMap::new(),
        };
        let images = rs
            .roots()
            .map(|r| {
                let image = reflection.apply_int(r.coords());
                (r, Root::new(image))
            })
            .collect();
        reflection.images = images;
        Ok(reflection)
    }

    pub fn axis(&self) -> &Root {
        &self.axis
    }

    /// `x - (2(x, α)/(α, α)) α`.
    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.coroot.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coroot.len(),
                actual: x.len(),
            });
        }
        let k: Rational = x.iter().zip(&self.coroot).map(|(&a, &b)| a * b).sum();
        Ok(x.iter()
            .zip(self.axis.coords())
            .map(|(&xi, &ai)| xi - k * ai)
            .collect())
    }

    /// Image of a root; `None` if `root` is not a root of the system.
    pub fn image(&self, root: &Root) -> Option<&Root> {
        self.images.get(root)
    }

    fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        let k: Rational = x.iter().zip(&self.coroot).map(|(&a, &b)| b * a).sum();
        let k = k.to_integer().expect("Cartan integers are integral");
        x.iter()
            .zip(self.axis.coords())
            .map(|(xi, ai)| xi - k * ai)
            .collect()
    }
}

/// Reflects `x` in the hyperplane orthogonal to `axis`.
pub fn reflect(rs: &RootSystem, axis: &Root, x: &[Rational]) -> Result<Vec<Rational>> {
    Reflection::new(rs, axis)?.apply(x)
}

/// Positive roots grouped by what `r_θ` does to them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PositivePartition {
    /// Sent to `-θ`: just `θ`.
    pub theta_part: Vec<Root>,
    /// Sent to `α - θ`, a negative root other than `-θ`.
    pub special_part: Vec<Root>,
    /// Fixed.
    pub orthogonal_part: Vec<Root>,
}

/// Sorts every positive root into exactly one part of [`PositivePartition`].
pub fn classify_positives(rs: &RootSystem) -> Result<PositivePartition> {
    let theta = rs.theta();
    let r_theta = Reflection::new(rs, theta)?;
    let minus_theta = theta.negated();
    let mut parts = PositivePartition::default();
    for alpha in rs.positives() {
        let image = r_theta
            .image(alpha)
            .expect("every root has an image")
            .clone();
        let shifted = Root::new(alpha.minus(theta));
        if image == minus_theta {
            parts.theta_part.push(alpha.clone());
        } else if image == *alpha {
            parts.orthogonal_part.push(alpha.clone());
        } else if image == shifted && rs.is_root(image.coords()) && image.is_negative() {
            parts.special_part.push(alpha.clone());
        } else {
            return Err(Error::Unclassified {
                root: alpha.coords().to_vec(),
                image: image.to_rational(),
            });
        }
    }
    Ok(parts)
}

/// Number of positive roots that `r_axis` sends to negative roots.
pub fn reflection_length(rs: &RootSystem, axis: &Root) -> Result<usize> {
    if !rs.is_positive_root(axis.coords()) || axis.coords().len() != rs.rank() {
        return Err(Error::NotAPositiveRoot(axis.coords().to_vec()));
    }
    let r = Reflection::new(rs, axis)?;
    Ok(rs
        .positives()
        .iter()
        .filter(|beta| r.image(beta).is_some_and(Root::is_negative))
        .count())
}

/// Exact-integer image of a rational vector, if integral.
pub fn reflect_root(rs: &RootSystem, axis: &Root, root: &Root) -> Result<Option<Root>> {
    let image = reflect(rs, axis, &root.to_rational())?;
    Ok(to_integer_vec(&image).map(Root::new))
}
