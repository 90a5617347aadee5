//! Structural invariants of root systems, reflections and special roots,
//! checked exhaustively over the battery, plus randomized checks.

mod common;

use std::collections::BTreeSet;

use common::{battery, ty};
use minorbit::orbit::{nonorthogonal_positives, special_roots};
use minorbit::rational::Rational;
use minorbit::roots::{Root, RootSystem};
use minorbit::weyl::{classify_positives, reflect, Reflection};
use proptest::prelude::*;

fn systems() -> Vec<RootSystem> {
    battery()
        .into_iter()
        .map(|t| RootSystem::for_type(t).unwrap())
        .collect()
}

#[test]
fn reflections_are_involutions_permuting_roots() {
    for rs in systems() {
        let all: BTreeSet<Root> = rs.roots().collect();
        // every positive axis; negative axes give the same reflections
        for axis in rs.positives() {
            let r = Reflection::new(&rs, axis).unwrap();
            let mut images = BTreeSet::new();
            for root in &all {
                let image = r.image(root).unwrap();
                assert!(
                    all.contains(image),
                    "{:?}: image of {root} is not a root",
                    rs.lie_type()
                );
                assert_eq!(r.image(image), Some(root));
                images.insert(image.clone());
            }
            assert_eq!(images, all);
        }
    }
}

#[test]
fn reflections_are_isometries_on_roots() {
    for name in ["B3", "C4", "F4", "G2", "E6"] {
        let rs = RootSystem::for_type(ty(name)).unwrap();
        let r = Reflection::new(&rs, rs.theta()).unwrap();
        for a in rs.positives() {
            for b in rs.positives() {
                let (ra, rb) = (r.image(a).unwrap(), r.image(b).unwrap());
                assert_eq!(rs.pairing(ra, rb), rs.pairing(a, b), "{name}");
            }
        }
    }
}

#[test]
fn rho_pairs_to_one_with_every_simple_coroot() {
    for rs in systems() {
        let form = rs.form();
        for i in 0..rs.rank() {
            let alpha = rs.simple_root(i).to_rational();
            let value =
                form.inner(rs.rho(), &alpha).unwrap() * 2 / form.inner(&alpha, &alpha).unwrap();
            assert_eq!(value, Rational::ONE, "{:?} node {i}", rs.lie_type());
        }
    }
}

#[test]
fn theta_is_unique_dominant_and_normalized() {
    for rs in systems() {
        let top = rs.positives().iter().map(Root::height).max().unwrap();
        let at_top: Vec<&Root> = rs
            .positives()
            .iter()
            .filter(|r| r.height() == top)
            .collect();
        assert_eq!(at_top, vec![rs.theta()]);
        assert_eq!(rs.pairing(rs.theta(), rs.theta()), Rational::from_int(2));
        for i in 0..rs.rank() {
            let mut up = rs.theta().coords().to_vec();
            up[i] += 1;
            assert!(!rs.is_root(&up));
        }
    }
}

#[test]
fn form_reproduces_cartan_entries() {
    for rs in systems() {
        let (form, c) = (rs.form(), rs.cartan());
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                assert_eq!(form.entry(i, j), form.entry(j, i));
                assert_eq!(
                    form.entry(i, j) * 2 / form.entry(i, i),
                    Rational::from_int(c.entry(i, j))
                );
            }
        }
        // simply-laced: the form is the Cartan matrix itself
        if rs.cartan().rows().iter().flatten().all(|&a| a >= -1) {
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    assert_eq!(form.entry(i, j), Rational::from_int(c.entry(i, j)));
                }
            }
        }
    }
}

#[test]
fn root_system_is_reduced_with_unbroken_strings() {
    for rs in systems() {
        for root in rs.roots() {
            assert!(root.is_positive() || root.is_negative());
            for k in [-3i64, -2, 0, 2, 3] {
                let scaled: Vec<i64> = root.coords().iter().map(|c| c * k).collect();
                assert!(!rs.is_root(&scaled));
            }
            for i in 0..rs.rank() {
                // the α_i-string through root: collect k with root + kα_i ∈ Δ
                let ks: Vec<i64> = (-4..=4)
                    .filter(|&k| {
                        let mut v = root.coords().to_vec();
                        v[i] += k;
                        rs.is_root(&v)
                    })
                    .collect();
                if root
                    .coords()
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| j == i || c == 0)
                {
                    continue; // ±α_i: the string passes through 0
                }
                let (lo, hi) = (ks[0], *ks.last().unwrap());
                assert_eq!(
                    ks.len() as i64,
                    hi - lo + 1,
                    "{:?}: broken string",
                    rs.lie_type()
                );
            }
        }
    }
}

#[test]
fn special_roots_pair_up() {
    for rs in systems() {
        let special = special_roots(&rs);
        assert!(special.len().is_multiple_of(2));
        assert!(!special.contains(rs.theta()));
        for alpha in special.iter() {
            let partner = Root::new(rs.theta().minus(alpha));
            assert!(special.contains(&partner));
            assert_ne!(&partner, alpha);
        }
    }
}

#[test]
fn reflection_partition_case_analysis() {
    for rs in systems() {
        let special = special_roots(&rs);
        let parts = classify_positives(&rs).unwrap();
        let r = Reflection::new(&rs, rs.theta()).unwrap();
        assert_eq!(parts.theta_part, vec![rs.theta().clone()]);
        for alpha in rs.positives() {
            let image = r.image(alpha).unwrap();
            if alpha == rs.theta() {
                assert_eq!(*image, alpha.negated());
            } else if special.contains(alpha) {
                assert_eq!(image.coords(), alpha.minus(rs.theta()).as_slice());
            } else {
                assert_eq!(image, alpha);
            }
        }
        let mut with_theta: BTreeSet<Root> = special.members().clone();
        with_theta.insert(rs.theta().clone());
        assert_eq!(with_theta, nonorthogonal_positives(&rs));
    }
}

fn vector(rank: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(
        (-20i64..20, 1i64..6).prop_map(|(n, d)| Rational::new(n, d)),
        rank,
    )
}

fn type_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A3", "B4", "C3", "D5", "E6", "F4", "G2"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection_is_isometric_involution(name in type_name(), seed in any::<prop::sample::Index>(),
                                         xs in vector(8), ys in vector(8)) {
        let rs = RootSystem::for_type(ty(name)).unwrap();
        let n = rs.rank();
        let (x, y) = (&xs[..n], &ys[..n]);
        let axis = &rs.positives()[seed.index(rs.positives().len())];
        let rx = reflect(&rs, axis, x).unwrap();
        let ry = reflect(&rs, axis, y).unwrap();
        prop_assert_eq!(reflect(&rs, axis, &rx).unwrap(), x.to_vec());
        let form = rs.form();
        prop_assert_eq!(form.inner(&rx, &ry).unwrap(), form.inner(x, y).unwrap());
    }
}
