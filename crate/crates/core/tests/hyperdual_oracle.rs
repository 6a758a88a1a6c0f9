//! Hyper-dual derivatives against an independent symbolic oracle: random
//! rational functions `P/Q` differentiated by the quotient rule on their
//! coefficient vectors.

use harmonic_identities::exact::{Axis, HyperDual, Rational};
use harmonic_identities::special::binom_shifted;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Dense polynomial, lowest degree first.
#[derive(Clone, Debug)]
struct Poly(Vec<i64>);

impl Poly {
    fn random(rng: &mut StdRng) -> Self {
        let deg = rng.gen_range(0..=4);
        Poly((0..=deg).map(|_| rng.gen_range(-6..=6)).collect())
    }

    fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, &c| acc * x + c)
    }

    fn derivative(&self) -> Poly {
        Poly(self.0.iter().enumerate().skip(1).map(|(i, &c)| c * i as i64).collect())
    }

    fn eval_hd(&self, x: &HyperDual) -> HyperDual {
        self.0.iter().rev().fold(HyperDual::constant(Rational::zero()), |acc, &c| acc * x.clone() + HyperDual::from(c))
    }
}

fn random_point(rng: &mut StdRng) -> Rational {
    Rational::frac(rng.gen_range(-20..=20), rng.gen_range(1..=9))
}

#[test]
fn first_derivative_matches_quotient_rule() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut cases = 0;
    while cases < 150 {
        let (p, q) = (Poly::random(&mut rng), Poly::random(&mut rng));
        let x0 = random_point(&mut rng);
        let qv = q.eval(&x0);
        if qv.is_zero() {
            continue;
        }
        let x = HyperDual::seed(x0.clone(), Axis::X);
        let f = p.eval_hd(&x) * q.eval_hd(&x).inv().unwrap();
        let num = p.derivative().eval(&x0) * &qv - p.eval(&x0) * q.derivative().eval(&x0);
        let expected = num.checked_div(&qv.square()).unwrap();
        assert_eq!(f.a, p.eval(&x0).checked_div(&qv).unwrap());
        assert_eq!(f.b, expected, "P={p:?} Q={q:?} x={x0}");
        assert!(f.c.is_zero() && f.d.is_zero());
        cases += 1;
    }
}

#[test]
fn mixed_derivative_of_separable_quotient() {
    // d2/dxdy P(x)/Q(y) = P'(x) * (-Q'(y)/Q(y)^2)
    let mut rng = StdRng::seed_from_u64(0xd0a1);
    let mut cases = 0;
    while cases < 150 {
        let (p, q) = (Poly::random(&mut rng), Poly::random(&mut rng));
        let (x0, y0) = (random_point(&mut rng), random_point(&mut rng));
        let qv = q.eval(&y0);
        if qv.is_zero() {
            continue;
        }
        let x = HyperDual::seed(x0.clone(), Axis::X);
        let y = HyperDual::seed(y0.clone(), Axis::Y);
        let f = p.eval_hd(&x) * q.eval_hd(&y).inv().unwrap();
        let dq = -q.derivative().eval(&y0).checked_div(&qv.square()).unwrap();
        assert_eq!(f.d, p.derivative().eval(&x0) * dq, "P={p:?} Q={q:?}");
        cases += 1;
    }
}

#[test]
fn mixed_derivative_of_joint_polynomial() {
    // (x y)^2 + 3x - y: d2/dxdy = 4xy
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let (x0, y0) = (random_point(&mut rng), random_point(&mut rng));
        let x = HyperDual::seed(x0.clone(), Axis::X);
        let y = HyperDual::seed(y0.clone(), Axis::Y);
        let xy = x.clone() * y.clone();
        let f = xy.clone() * xy + HyperDual::from(3) * x - y;
        assert_eq!(f.d, Rational::from(4) * &x0 * &y0);
        assert_eq!(f.b, Rational::from(2) * &x0 * y0.square() + 3);
        assert_eq!(f.c, Rational::from(2) * x0.square() * &y0 - 1);
    }
}

#[test]
fn shifted_binomial_log_derivative() {
    // d/dx C(x+k,k) = C(x+k,k) * sum_{j=1..k} 1/(x+j)
    let mut rng = StdRng::seed_from_u64(99);
    let mut cases = 0;
    while cases < 120 {
        let x0 = random_point(&mut rng);
        let k = rng.gen_range(0..=12);
        if (1..=k).any(|j| (&x0 + j).is_zero()) {
            continue;
        }
        let value = binom_shifted(&x0, k).unwrap();
        let log_d: Rational = (1..=k).map(|j| (&x0 + j).recip().unwrap()).sum();
        let hd = binom_shifted(&HyperDual::seed(x0.clone(), Axis::X), k).unwrap();
        assert_eq!(hd.a, value);
        assert_eq!(hd.b, &value * log_d);
        cases += 1;
    }
}
