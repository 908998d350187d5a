use steinberg_lab::charring::PrimePower;
use steinberg_lab::frobp1::{closed_formula, iterated_splitting, split_frobenius_pushforward, verify_steinberg_p1};

fn grid() -> impl Iterator<Item = (u64, u32, i64)> {
    [2u64, 3, 5]
        .into_iter()
        .flat_map(|p| (1..=3u32).flat_map(move |n| (-20..=20).map(move |d| (p, n, d))))
}

#[test]
fn splitting_matches_closed_formula() {
    for (p, n, d) in grid() {
        let pp = PrimePower::new(p, n).unwrap();
        let q = pp.q_i64().unwrap();
        assert_eq!(
            split_frobenius_pushforward(d, &pp).unwrap(),
            closed_formula(d, q).unwrap(),
            "p={p} n={n} d={d}"
        );
    }
}

#[test]
fn rank_and_euler_characteristic() {
    for (p, n, d) in grid() {
        let pp = PrimePower::new(p, n).unwrap();
        let s = split_frobenius_pushforward(d, &pp).unwrap();
        assert_eq!(s.rank() as i64, pp.q_i64().unwrap());
        assert_eq!(s.euler_characteristic(), d + 1, "p={p} n={n} d={d}");
    }
}

#[test]
fn iterated_pushforward_is_coherent() {
    for (p, n, d) in grid() {
        let pp = PrimePower::new(p, n).unwrap();
        assert_eq!(
            iterated_splitting(d, p, n).unwrap(),
            split_frobenius_pushforward(d, &pp).unwrap()
        );
    }
}

#[test]
fn steinberg_identities() {
    for p in [2, 3, 5, 7] {
        for n in [1, 2] {
            assert!(
                verify_steinberg_p1(&PrimePower::new(p, n).unwrap()).unwrap(),
                "p={p} n={n}"
            );
        }
    }
}

#[test]
fn fixtures() {
    let two = PrimePower::new(2, 1).unwrap();
    assert_eq!(split_frobenius_pushforward(-1, &two).unwrap().degrees(), &[-1, -1]);
    assert_eq!(split_frobenius_pushforward(0, &two).unwrap().degrees(), &[0, -1]);
    assert_eq!(split_frobenius_pushforward(1, &two).unwrap().degrees(), &[0, 0]);
    let nine = PrimePower::new(3, 2).unwrap();
    assert!(split_frobenius_pushforward(8, &nine).unwrap().is_uniform(0));
}
