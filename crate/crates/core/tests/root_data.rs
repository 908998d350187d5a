use std::collections::{HashMap, VecDeque};

use steinberg_lab::rootsys::{build_root_system, pairing, Family, RootSystem, RootSystemSpec, Weight};
use steinberg_lab::weyl::{
    dot_action, longest_element, to_dominant, IntMatrix, WeylElement, WeylGroup, DEFAULT_SIZE_GUARD,
};

fn all_specs() -> Vec<RootSystemSpec> {
    let mut out = Vec::new();
    for (family, lo, hi) in [
        (Family::A, 1, 8),
        (Family::B, 2, 6),
        (Family::C, 2, 6),
        (Family::D, 4, 6),
        (Family::F, 4, 4),
        (Family::G, 2, 2),
    ] {
        for rank in lo..=hi {
            out.push(RootSystemSpec::new(family, rank).unwrap());
        }
    }
    out
}

fn classical_positive_count(spec: RootSystemSpec) -> usize {
    let n = spec.rank();
    match spec.family() {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::F => 24,
        Family::G => 6,
    }
}

#[test]
fn positive_root_counts_and_sign_coherence() {
    for spec in all_specs() {
        let rs = build_root_system(spec);
        assert_eq!(rs.num_positive(), classical_positive_count(spec), "{spec}");
        for root in rs.positive_roots() {
            assert!(
                root.simple_coords.iter().all(|&c| c >= 0),
                "{spec} {:?}",
                root.simple_coords
            );
            assert!(root.height() >= 1);
        }
    }
}

#[test]
fn rho_pairs_to_one_with_simple_coroots() {
    for spec in all_specs() {
        let rs = RootSystem::new(spec);
        for i in 0..rs.rank() {
            assert_eq!(pairing(rs.rho(), &rs.simple_coroot(i)).unwrap(), 1, "{spec} i={i}");
        }
    }
}

#[test]
fn construction_is_deterministic() {
    for spec in all_specs() {
        assert_eq!(build_root_system(spec), build_root_system(spec), "{spec}");
    }
}

#[test]
fn rejected_labels() {
    for label in ["E6", "E8", "A0", "A9", "B1", "C7", "D3", "F3", "G3", "X2", "", "A"] {
        assert!(label.parse::<RootSystemSpec>().is_err(), "{label}");
    }
}

fn rs(label: &str) -> RootSystem {
    RootSystem::new(label.parse().unwrap())
}

/// Word lengths by BFS on matrices, independent of `WeylGroup`.
fn bfs_lengths(rs: &RootSystem) -> HashMap<IntMatrix, usize> {
    let gens: Vec<IntMatrix> = (0..rs.rank()).map(|i| IntMatrix::simple_reflection(rs, i)).collect();
    let mut seen = HashMap::new();
    let id = IntMatrix::identity(rs.rank());
    seen.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        let len = seen[&m];
        for g in &gens {
            let next = m.mul(g);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), len + 1);
                queue.push_back(next);
            }
        }
    }
    seen
}

#[test]
fn group_orders() {
    for (label, order) in [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12), ("F4", 1152)] {
        let g = WeylGroup::enumerate(&rs(label), DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(g.order(), order, "{label}");
    }
}

#[test]
fn to_dominant_steps_match_bfs_lengths() {
    for label in ["A1", "A2", "A3", "B2", "G2"] {
        let rs = rs(label);
        let lengths = bfs_lengths(&rs);
        let r = 4;
        let mut checked = 0;
        for coords in coord_box(rs.rank(), r) {
            let lambda = Weight::new(coords);
            match to_dominant(&rs, &lambda) {
                Ok(partner) => {
                    assert_eq!(partner.steps, lengths[partner.element.matrix()], "{label} {lambda}");
                    assert_eq!(partner.steps, partner.element.length());
                    assert!(rs.is_dominant(&partner.dominant));
                    assert_eq!(dot_action(&rs, &partner.element, &lambda), partner.dominant);
                    checked += 1;
                }
                Err(_) => assert!(!rs.is_regular_after_rho_shift(&lambda)),
            }
        }
        assert!(checked > 0);
    }
}

fn coord_box(rank: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-r..=r).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn dot_action_is_a_group_action() {
    for label in ["A1", "A2", "B2", "G2"] {
        let rs = rs(label);
        let g = WeylGroup::enumerate(&rs, DEFAULT_SIZE_GUARD).unwrap();
        for coords in coord_box(rs.rank(), 2) {
            let lambda = Weight::new(coords);
            for (a, u) in g.elements().iter().enumerate() {
                for (b, v) in g.elements().iter().enumerate() {
                    let uv = g.element(g.multiply(a, b));
                    assert_eq!(
                        dot_action(&rs, u, &dot_action(&rs, v, &lambda)),
                        dot_action(&rs, uv, &lambda),
                        "{label} {u} {v} {lambda}"
                    );
                }
            }
        }
    }
}

#[test]
fn longest_element_reverses_rho() {
    for spec in all_specs() {
        let rs = RootSystem::new(spec);
        let w0 = longest_element(&rs);
        assert_eq!(w0.apply(rs.rho()), -rs.rho(), "{spec}");
        assert_eq!(w0.length(), rs.num_positive(), "{spec}");
    }
}

#[test]
fn stored_words_multiply_out() {
    for label in ["A3", "B3", "C3", "G2", "F4"] {
        let rs = rs(label);
        let g = WeylGroup::enumerate(&rs, DEFAULT_SIZE_GUARD).unwrap();
        for w in g.elements() {
            let rebuilt = WeylElement::from_word(&rs, w.word()).unwrap();
            assert_eq!(rebuilt.matrix(), w.matrix(), "{label} {w}");
        }
    }
}

#[test]
fn group_lengths_match_bfs() {
    for label in ["A3", "B3", "G2"] {
        let rs = rs(label);
        let lengths = bfs_lengths(&rs);
        let g = WeylGroup::enumerate(&rs, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(lengths.len(), g.order());
        for w in g.elements() {
            assert_eq!(lengths[w.matrix()], w.length(), "{label} {w}");
        }
    }
}

#[test]
fn size_guard_rejects_large_groups() {
    assert!(WeylGroup::enumerate(&rs("A8"), DEFAULT_SIZE_GUARD).is_err());
    assert!(WeylGroup::enumerate(&rs("B6"), 10_000).is_err());
    assert!(WeylGroup::enumerate(&rs("D5"), DEFAULT_SIZE_GUARD).is_ok());
}
