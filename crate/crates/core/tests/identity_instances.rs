use higher_composition::alt::verify_quaternary_composition;
use higher_composition::cubes::{identity_cube, triple_to_cube, verify_cube_composition, BalancedTriple};
use higher_composition::quadratic::QuadraticRing;
use higher_composition::sym::{cubic_identity, pair_identity, verify_cubic_composition, verify_pair_composition};
use num_bigint::BigInt;

const DISCS: [i64; 6] = [-47, -31, -4, 5, 8, 13];

fn unit_cube(d: i64) -> higher_composition::cubes::Cube {
    let ring = QuadraticRing::from_i64(d).unwrap();
    triple_to_cube(&BalancedTriple::unit(&ring)).unwrap()
}

#[test]
fn unit_triple_gives_identity_cube() {
    for d in DISCS {
        assert_eq!(unit_cube(d), identity_cube(&BigInt::from(d)).unwrap(), "D = {d}");
    }
}

#[test]
fn identity_cubes_compose() {
    for d in DISCS {
        let a = identity_cube(&BigInt::from(d)).unwrap();
        let r = unit_cube(d);
        let v = verify_cube_composition(&a, &a, &a, &r, &r, &r);
        assert!(v.holds(), "D = {d}: {v}");
    }
}

#[test]
fn identity_cubics_compose() {
    for d in DISCS {
        let f = cubic_identity(&BigInt::from(d)).unwrap();
        let v = verify_cubic_composition(&f, &f, &f, &unit_cube(d));
        assert!(v.holds(), "D = {d}: {v}");
    }
}

#[test]
fn identity_pairs_compose() {
    for d in DISCS {
        let f = pair_identity(&BigInt::from(d)).unwrap();
        let r = unit_cube(d);
        let v = verify_pair_composition(&f, &f, &f, &r, &r);
        assert!(v.holds(), "D = {d}: {v}");
    }
}

#[test]
fn identity_quaternary_pairs_compose() {
    for d in DISCS {
        let a = identity_cube(&BigInt::from(d)).unwrap();
        let r = unit_cube(d);
        let v = verify_quaternary_composition(&a, &a, &a, &r, &r, &r).unwrap();
        assert!(v.holds(), "D = {d}: {v}");
    }
}
