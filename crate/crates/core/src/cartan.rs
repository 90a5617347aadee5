//! Lie types, Cartan matrices and the invariant bilinear form on the root
//! lattice.
//!
//! Conventions (see `conventions.md` at the repository root):
//! `a[i][j] = 2(α_i, α_j) / (α_i, α_i)`, Bourbaki node numbering, except that
//! G₂ numbers its long simple root first.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rational;

/// Family letter of a simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    fn rank_rule(self) -> &'static str {
        match self {
            Family::A => "≥ 1",
            Family::B | Family::C => "≥ 2",
            Family::D => "≥ 4",
            Family::E => "one of 6, 7, 8",
            Family::F => "4",
            Family::G => "2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple Lie type such as `E8`; always satisfies the family's rank range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.is_valid_rank(rank) {
            return Ok(LieType { family, rank });
        }
        let mut msg = format!("rank for {family} must be {}", family.rank_rule());
        let isomorph = match (family, rank) {
            (Family::B | Family::C, 1) => Some("A1"),
            (Family::D, 2) => Some("A1 × A1, which is not simple"),
            (Family::D, 3) => Some("A3"),
            _ => None,
        };
        if let Some(iso) = isomorph {
            msg.push_str(&format!(" ({family}{rank} is isomorphic to {iso})"));
        }
        Err(Error::InvalidRank(msg))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_lie_type(s)
    }
}

impl Serialize for LieType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_lie_type(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses `<letter><digits>` case-insensitively, e.g. `"e8"` or `"A12"`.
pub fn parse_lie_type(text: &str) -> Result<LieType> {
    let malformed = || Error::MalformedType(text.to_string());
    let trimmed = text.trim();
    let mut chars = trimmed.chars();
    let family = chars
        .next()
        .and_then(Family::from_letter)
        .ok_or_else(malformed)?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let rank: usize = digits.parse().map_err(|_| malformed())?;
    LieType::new(family, rank)
}

/// Integer Cartan matrix of a finite-type root system.
///
/// Construction checks every finite-type axiom, so a value of this type is
/// always symmetrizable and positive definite after symmetrization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidCartan("matrix is empty".into()));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry ({i}, {i}) is not 2"
                )));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if a > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({i}, {j}) is positive"
                    )));
                }
                if (a == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({i}, {j}) and ({j}, {i}) disagree on being zero"
                    )));
                }
            }
        }
        let matrix = CartanMatrix { entries };
        let d = symmetrizer(&matrix)?;
        if !linalg::is_positive_definite(&symmetrized(&matrix, &d)) {
            return Err(Error::InvalidCartan(
                "symmetrized matrix is not positive definite (not of finite type)".into(),
            ));
        }
        Ok(matrix)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `⟨β, α_i^∨⟩ = Σ_j β_j a[i][j]` for `β` in simple-root coordinates.
    pub fn coroot_pairing(&self, beta: &[i64], i: usize) -> i64 {
        self.entries[i].iter().zip(beta).map(|(a, b)| a * b).sum()
    }
}

/// Positive `d` with `d_i a[i][j] = d_j a[j][i]`, scaled so the first node of
/// each connected component has `d = 1`.
fn symmetrizer(c: &CartanMatrix) -> Result<Vec<Rational>> {
    let n = c.rank();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::ONE);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].expect("visited node has a scale");
            for (j, &a) in c.rows()[i].iter().enumerate() {
                if i == j || a == 0 {
                    continue;
                }
                let dj = di * a / c.entry(j, i);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::InvalidCartan(format!(
                            "not symmetrizable: node {j} needs scales {existing} and {dj}"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(d.into_iter()
        .map(|x| x.expect("every node visited"))
        .collect())
}

fn symmetrized(c: &CartanMatrix, d: &[Rational]) -> Vec<Vec<Rational>> {
    (0..c.rank())
        .map(|i| (0..c.rank()).map(|j| d[i] * c.entry(i, j)).collect())
        .collect()
}

/// Cartan matrix of `t`.
pub fn cartan_matrix(t: LieType) -> CartanMatrix {
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family() {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            // 1-3-4-5-...-n with 2 hanging off 4 (1-based)
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match t.family() {
        // short α_n
        Family::B => a[n - 1][n - 2] = -2,
        // long α_n
        Family::C => a[n - 2][n - 1] = -2,
        // α_1, α_2 long; α_3, α_4 short
        Family::F => a[2][1] = -2,
        // α_1 long, α_2 short
        Family::G => a[1][0] = -3,
        _ => {}
    }
    CartanMatrix::new(a).expect("built-in Cartan data is of finite type")
}

/// Symmetric rational Gram matrix `B[i][j] = (α_i, α_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    gram: Vec<Vec<Rational>>,
}

impl BilinearForm {
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.gram[i][j]
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// `xᵀ B y`.
    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        Ok(self.inner_unchecked(x, y))
    }

    /// Integer-coordinate variant of [`inner`](Self::inner) for roots.
    pub fn inner_int(&self, x: &[i64], y: &[i64]) -> Result<Rational> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let mut acc = Rational::ZERO;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let row: Rational = self.gram[i].iter().zip(y).map(|(&b, &yj)| b * yj).sum();
            acc += row * xi;
        }
        Ok(acc)
    }

    /// `B y`, the linear functional `x ↦ (x, y)` in simple-root coordinates.
    pub fn covector(&self, y: &[i64]) -> Result<Vec<Rational>> {
        self.check_len(y.len())?;
        Ok(self
            .gram
            .iter()
            .map(|row| row.iter().zip(y).map(|(&b, &yj)| b * yj).sum())
            .collect())
    }

    pub(crate) fn inner_unchecked(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::ZERO;
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            acc += *xi * linalg::dot(&self.gram[i], y);
        }
        acc
    }

    /// Rescales so that `(theta, theta) = 2`.
    pub fn normalize(&self, theta: &[i64]) -> Result<BilinearForm> {
        let norm = self.inner_int(theta, theta)?;
        if !norm.is_positive() {
            return Err(Error::InvalidCartan(format!(
                "highest root has non-positive norm {norm}"
            )));
        }
        let scale = Rational::from_int(2) / norm;
        Ok(self.scaled(scale))
    }

    fn scaled(&self, scale: Rational) -> BilinearForm {
        BilinearForm {
            gram: self
                .gram
                .iter()
                .map(|row| row.iter().map(|&x| x * scale).collect())
                .collect(),
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: len,
            })
        }
    }
}

/// The symmetrized form `B[i][j] = d_i a[i][j]` before normalization.
pub fn unnormalized_form(c: &CartanMatrix) -> Result<BilinearForm> {
    let d = symmetrizer(c)?;
    let gram = symmetrized(c, &d);
    if !linalg::is_positive_definite(&gram) {
        return Err(Error::InvalidCartan(
            "symmetrized matrix is not positive definite".into(),
        ));
    }
    Ok(BilinearForm { gram })
}

/// The form normalized so the highest root has squared length 2.
pub fn bilinear_form(c: &CartanMatrix) -> Result<BilinearForm> {
    Ok(crate::roots::generate_roots(c)?.form().clone())
}

/// `xᵀ B y`, exact.
pub fn inner(form: &BilinearForm, x: &[Rational], y: &[Rational]) -> Result<Rational> {
    form.inner(x, y)
}
