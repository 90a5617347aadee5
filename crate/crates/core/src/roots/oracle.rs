//! Independent root-system construction in orthonormal coordinates.
//!
//! Classical families are written down directly; exceptional families are the
//! closure of their simple roots under the simple reflections. Nothing here
//! reads a Cartan matrix, so agreement with [`generate_roots`] is a genuine
//! cross-check.
//!
//! [`generate_roots`]: super::generate_roots

use std::collections::{BTreeSet, VecDeque};

use crate::cartan::{Family, LieType};
use crate::linalg::{self, Matrix};
use crate::rational::{to_integer_vec, Rational};

/// Roots and simple roots of one type in orthonormal coordinates.
#[derive(Debug, Clone)]
pub struct OracleRoots {
    simple: Vec<Vec<Rational>>,
    roots: Vec<Vec<Rational>>,
    gram_inverse: Matrix,
}

impl OracleRoots {
    fn new(simple: Vec<Vec<Rational>>, roots: BTreeSet<Vec<Rational>>) -> Self {
        let gram: Matrix = simple
            .iter()
            .map(|a| simple.iter().map(|b| linalg::dot(a, b)).collect())
            .collect();
        let gram_inverse = linalg::inverse(&gram).expect("simple roots are linearly independent");
        OracleRoots {
            simple,
            roots: roots.into_iter().collect(),
            gram_inverse,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.simple[0].len()
    }

    /// Every root, sorted.
    pub fn roots(&self) -> &[Vec<Rational>] {
        &self.roots
    }

    /// Simple roots in Bourbaki order (G₂: long root first).
    pub fn simple_roots(&self) -> &[Vec<Rational>] {
        &self.simple
    }

    /// Coefficients of `v` over the simple roots, or `None` if `v` is outside
    /// their span.
    pub fn to_simple_coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let rhs: Vec<Rational> = self.simple.iter().map(|a| linalg::dot(a, v)).collect();
        let coeffs = linalg::mat_vec(&self.gram_inverse, &rhs);
        let mut rebuilt = vec![Rational::ZERO; v.len()];
        for (c, a) in coeffs.iter().zip(&self.simple) {
            for (x, &ai) in rebuilt.iter_mut().zip(a) {
                *x += *c * ai;
            }
        }
        (rebuilt == v).then_some(coeffs)
    }

    /// All roots in simple-root coordinates.
    ///
    /// Panics if some root is not an integral combination of simple roots,
    /// which would mean the tables are wrong.
    pub fn roots_in_simple_coords(&self) -> Vec<Vec<i64>> {
        self.roots
            .iter()
            .map(|v| {
                let coeffs = self
                    .to_simple_coords(v)
                    .expect("root lies in the span of the simple roots");
                to_integer_vec(&coeffs).expect("root has integral simple-root coordinates")
            })
            .collect()
    }

    /// `2(α_i, α_j) / (α_i, α_i)` from the orthonormal simple roots.
    pub fn cartan_entries(&self) -> Vec<Vec<i64>> {
        self.simple
            .iter()
            .map(|a| {
                let norm = linalg::dot(a, a);
                self.simple
                    .iter()
                    .map(|b| {
                        (linalg::dot(a, b) * 2 / norm)
                            .to_integer()
                            .expect("crystallographic")
                    })
                    .collect()
            })
            .collect()
    }
}

fn unit(dim: usize, i: usize, scale: i64) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; dim];
    v[i] = Rational::from_int(scale);
    v
}

fn combo(dim: usize, terms: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; dim];
    for &(i, s) in terms {
        v[i] += Rational::from_int(s);
    }
    v
}

fn halves(signs: [i64; 8]) -> Vec<Rational> {
    signs.iter().map(|&s| Rational::new(s, 2)).collect()
}

/// `±e_i ± e_j` for `i < j`, optionally only the `e_i - e_j` pattern.
fn pair_roots(dim: usize, out: &mut BTreeSet<Vec<Rational>>, difference_only: bool) {
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            out.insert(combo(dim, &[(i, 1), (j, -1)]));
            if !difference_only && i < j {
                out.insert(combo(dim, &[(i, 1), (j, 1)]));
                out.insert(combo(dim, &[(i, -1), (j, -1)]));
            }
        }
    }
}

/// Closure of the simple roots under the reflections they define.
fn reflection_closure(simple: &[Vec<Rational>]) -> BTreeSet<Vec<Rational>> {
    let mut seen: BTreeSet<Vec<Rational>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<Rational>> = simple.iter().cloned().collect();
    let norms: Vec<Rational> = simple.iter().map(|a| linalg::dot(a, a)).collect();
    while let Some(v) = queue.pop_front() {
        for (a, &norm) in simple.iter().zip(&norms) {
            let k = linalg::dot(&v, a) * 2 / norm;
            let image: Vec<Rational> = v.iter().zip(a).map(|(&x, &ai)| x - k * ai).collect();
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen
}

fn e8_simple_roots() -> Vec<Vec<Rational>> {
    let d = 8;
    vec![
        halves([1, -1, -1, -1, -1, -1, -1, 1]),
        combo(d, &[(0, 1), (1, 1)]),
        combo(d, &[(1, 1), (0, -1)]),
        combo(d, &[(2, 1), (1, -1)]),
        combo(d, &[(3, 1), (2, -1)]),
        combo(d, &[(4, 1), (3, -1)]),
        combo(d, &[(5, 1), (4, -1)]),
        combo(d, &[(6, 1), (5, -1)]),
    ]
}

/// Builds the root system of `t` in orthonormal coordinates.
pub fn oracle_roots(t: LieType) -> OracleRoots {
    let n = t.rank();
    match t.family() {
        Family::A => {
            let dim = n + 1;
            let simple = (0..n).map(|i| combo(dim, &[(i, 1), (i + 1, -1)])).collect();
            let mut roots = BTreeSet::new();
            pair_roots(dim, &mut roots, true);
            OracleRoots::new(simple, roots)
        }
        Family::B | Family::C | Family::D => {
            let dim = n;
            let mut simple: Vec<Vec<Rational>> = (0..n - 1)
                .map(|i| combo(dim, &[(i, 1), (i + 1, -1)]))
                .collect();
            simple.push(match t.family() {
                Family::B => unit(dim, n - 1, 1),
                Family::C => unit(dim, n - 1, 2),
                _ => combo(dim, &[(n - 2, 1), (n - 1, 1)]),
            });
            let mut roots = BTreeSet::new();
            pair_roots(dim, &mut roots, false);
            let short_scale = match t.family() {
                Family::B => Some(1),
                Family::C => Some(2),
                _ => None,
            };
            if let Some(s) = short_scale {
                for i in 0..dim {
                    roots.insert(unit(dim, i, s));
                    roots.insert(unit(dim, i, -s));
                }
            }
            OracleRoots::new(simple, roots)
        }
        Family::E => {
            let simple: Vec<Vec<Rational>> = e8_simple_roots().into_iter().take(n).collect();
            let roots = reflection_closure(&simple);
            OracleRoots::new(simple, roots)
        }
        Family::F => {
            let d = 4;
            let simple = vec![
                combo(d, &[(1, 1), (2, -1)]),
                combo(d, &[(2, 1), (3, -1)]),
                unit(d, 3, 1),
                vec![
                    Rational::new(1, 2),
                    Rational::new(-1, 2),
                    Rational::new(-1, 2),
                    Rational::new(-1, 2),
                ],
            ];
            let roots = reflection_closure(&simple);
            OracleRoots::new(simple, roots)
        }
        Family::G => {
            let d = 3;
            // long -2e1 + e2 + e3 first, short e1 - e2 second
            let simple = vec![
                combo(d, &[(0, -2), (1, 1), (2, 1)]),
                combo(d, &[(0, 1), (1, -1)]),
            ];
            let roots = reflection_closure(&simple);
            OracleRoots::new(simple, roots)
        }
    }
}
