use mft_algebra::{rat, MomentPolynomial, Rational};
use mft_kontsevich::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_poly(rng: &mut StdRng, budget: usize) -> MomentPolynomial {
    let mut p = MomentPolynomial::zero(budget);
    for _ in 0..4 {
        let mut e = vec![rng.gen_range(-3..2)];
        for _ in 1..=4 {
            e.push(rng.gen_range(0..3));
        }
        let c = rat(rng.gen_range(-9..10), rng.gen_range(1..7));
        p = &p + &MomentPolynomial::monomial(&e, c, budget).unwrap();
    }
    p
}

fn apply(n: usize, f: &MomentPolynomial, a: &Rational) -> MomentPolynomial {
    let (free, ap) = virasoro_parts(n, f, false).unwrap();
    &free + &ap.scale(a)
}

#[test]
fn constraints_vanish_through_second_order() {
    let fs = free_energies_laplacian(3).unwrap();
    let stable: Vec<_> = fs[1..].iter().map(|f| f.poly().unwrap().clone().with_budget(16).unwrap()).collect();
    let z = TruncatedZ::from_free_energies(&stable, true);
    assert_eq!(z.order(), 2);
    for n in 0..=3 {
        let r = z.virasoro(n).unwrap();
        assert_eq!(r.residuals.len(), 3);
        assert!(r.all_vanish(), "L{n}: {:?}", r.residuals);
        assert_eq!(r.insufficient, vec![3]);
    }
}

#[test]
fn stable_convention_breaks_the_constraints() {
    let fs = free_energies_laplacian(2).unwrap();
    let stable = vec![fs[1].poly().unwrap().clone().with_budget(12).unwrap()];
    let z = TruncatedZ::from_free_energies(&stable, false);
    assert!(!z.virasoro(0).unwrap().all_vanish());
}

#[test]
fn l0_on_genus_one_factor() {
    // 1/16 r0^(-1/24) + (3/2) r0 d/dr0 r0^(-1/24) = 0
    let (free, _) = virasoro_parts(0, &MomentPolynomial::one(4), true).unwrap();
    assert!(free.is_zero());
}

#[test]
fn l1_without_deformation_kills_constants() {
    let (free, _) = virasoro_parts(1, &MomentPolynomial::constant(rat(3, 7), 4), false).unwrap();
    assert!(free.is_zero());
}

#[test]
fn commutator_with_l0() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..10 {
        let f = random_poly(&mut rng, 14);
        let a = rat(rng.gen_range(-5..6), rng.gen_range(1..5));
        for n in 1..=4 {
            let lhs = &apply(0, &apply(n, &f, &a), &a) - &apply(n, &apply(0, &f, &a), &a);
            let rhs = apply(n, &f, &a).scale(&rat(-(n as i64), 1));
            assert_eq!(lhs, rhs, "n={n}");
        }
    }
}
