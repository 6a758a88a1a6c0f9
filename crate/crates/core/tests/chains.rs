//! The linear relations linking neighbouring identities (shifting `x` or `p`
//! by one and splitting the summand weight) hold exactly, both for the
//! brute-force sums and for the closed forms.

use harmonic_identities::catalogue::{catalogue, ParamAssignment};
use harmonic_identities::exact::Rational;

fn samples() -> Vec<Rational> {
    [(7, 1), (5, 2), (-9, 4), (1, 3), (-1, 3), (11, 1), (-7, 2), (4, 5)]
        .into_iter()
        .map(|(n, d)| Rational::frac(n, d))
        .collect()
}

/// Both sides of `id` at `a`, or `None` if `a` is inadmissible.
fn sides(id: &str, a: &ParamAssignment) -> Option<[Rational; 2]> {
    let r = catalogue().get(id).unwrap();
    r.admissible(a).is_admissible().then(|| [r.eval_lhs(a).unwrap(), r.eval_rhs(a).unwrap()])
}

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

fn inv(v: Rational) -> Rational {
    v.recip().unwrap()
}

/// Checks `target = sum coeff_i * term_i` on the lhs and on the rhs.
fn relation(target: (&str, ParamAssignment), terms: Vec<(Rational, &str, ParamAssignment)>) -> bool {
    let Some(t) = sides(target.0, &target.1) else { return false };
    let mut parts = Vec::new();
    for (c, id, a) in &terms {
        let Some(s) = sides(id, a) else { return false };
        parts.push((c.clone(), s));
    }
    for side in 0..2 {
        let combo: Rational = parts.iter().map(|(c, s)| c * &s[side]).sum();
        assert_eq!(t[side], combo, "{} at {} (side {side})", target.0, target.1);
    }
    true
}

fn pn(p: u32, n: u32) -> ParamAssignment {
    ParamAssignment::new(n).with_p(p)
}

fn xpn(x: Rational, p: u32, n: u32) -> ParamAssignment {
    ParamAssignment::new(n).with_p(p).with_x(x)
}

fn xn(x: Rational, n: u32) -> ParamAssignment {
    ParamAssignment::new(n).with_x(x)
}

#[test]
fn thm_a_at_p_plus_one_and_two() {
    let mut hits = 0;
    for p in 0..6u32 {
        for n in 0..12u32 {
            let pi = i64::from(p);
            let one = Rational::one();
            hits += relation(
                ("thm-a", xpn(Rational::from(pi + 1), p, n)),
                vec![(one.clone(), "corl-a", pn(p, n)), (q(1, pi + 1), "corl-b", pn(p, n))],
            ) as u32;
            let d = (pi + 1) * (pi + 2);
            hits += relation(
                ("thm-a", xpn(Rational::from(pi + 2), p, n)),
                vec![
                    (one, "corl-a", pn(p, n)),
                    (q(2 * pi + 3, d), "corl-b", pn(p, n)),
                    (q(1, d), "corl-c", pn(p, n)),
                ],
            ) as u32;
        }
    }
    assert_eq!(hits, 2 * 6 * 12);
}

#[test]
fn thm_a_at_negative_integers() {
    let mut hits = 0;
    for p in 0..6u32 {
        for n in 2..12u32 {
            let ni = i64::from(n);
            hits += relation(
                ("thm-a", xpn(Rational::from(-ni), p, n)),
                vec![(Rational::one(), "eq-sofo-a", pn(p, n)), (q(-1, ni), "eq-sofo-b", pn(p, n))],
            ) as u32;
            let d = ni * (ni - 1);
            hits += relation(
                ("thm-a", xpn(Rational::from(1 - ni), p, n)),
                vec![
                    (Rational::one(), "eq-sofo-a", pn(p, n)),
                    (q(-(2 * ni - 1), d), "eq-sofo-b", pn(p, n)),
                    (q(1, d), "eq-chu", pn(p, n)),
                ],
            ) as u32;
        }
    }
    assert!(hits > 100, "{hits}");
}

#[test]
fn x_shifts_of_alternating_sums() {
    let mut hits = 0;
    for x in samples() {
        for n in 1..12u32 {
            let xn_ = &x + i64::from(n);
            let x1n = &xn_ + 1;
            hits += relation(
                ("corl-d", xn(&x - 1, n)),
                vec![(Rational::one(), "corl-d", xn(x.clone(), n)), (-inv(xn_.clone()), "corl-e", xn(x.clone(), n))],
            ) as u32;
            hits += relation(
                ("corl-e", xn(&x - 1, n)),
                vec![(Rational::one(), "corl-e", xn(x.clone(), n)), (-inv(xn_.clone()), "corl-f", xn(x.clone(), n))],
            ) as u32;
            hits += relation(
                ("corl-g", xn(&x + 1, n)),
                vec![(Rational::one(), "corl-g", xn(x.clone(), n)), (-inv(x1n.clone()), "corl-h", xn(x.clone(), n))],
            ) as u32;
            hits += relation(
                ("corl-h", xn(&x + 1, n)),
                vec![(Rational::one(), "corl-h", xn(x.clone(), n)), (-inv(x1n), "corl-i", xn(x.clone(), n))],
            ) as u32;
        }
    }
    assert!(hits > 250, "{hits}");
}

#[test]
fn thm_c_below_the_diagonal() {
    let mut hits = 0;
    for p in 1..7u32 {
        for n in 0..12u32 {
            let pi = i64::from(p);
            let pq = |qq: u32| ParamAssignment::new(n).with_p(p).with_q(qq);
            hits += relation(
                ("thm-c", pq(p - 1)),
                vec![
                    (Rational::from(pi), "corl-j", pn(p, n)),
                    (Rational::one(), "corl-k", pn(p, n)),
                    (Rational::from(-1), "corl-a", pn(p, n)),
                ],
            ) as u32;
            if p >= 2 {
                hits += relation(
                    ("thm-c", pq(p - 2)),
                    vec![
                        (Rational::from(pi * (pi - 1)), "corl-j", pn(p, n)),
                        (Rational::from(2 * pi - 1), "corl-k", pn(p, n)),
                        (Rational::one(), "corl-l", pn(p, n)),
                        (Rational::from(1 - 2 * pi), "corl-a", pn(p, n)),
                        (Rational::from(-2), "corl-b", pn(p, n)),
                    ],
                ) as u32;
            }
        }
    }
    assert_eq!(hits, 6 * 12 + 5 * 12);
}

#[test]
fn p_shifts_of_harmonic_products() {
    let mut hits = 0;
    for p in 0..7u32 {
        for n in 1..12u32 {
            let s = i64::from(p + n);
            let xp = Rational::from(i64::from(p));
            if p >= 2 {
                hits += relation(
                    ("corl-m", pn(p - 1, n)),
                    vec![
                        (Rational::one(), "corl-m", pn(p, n)),
                        (q(-1, s), "corl-n", pn(p, n)),
                        (q(-1, s), "corl-d", xn(xp.clone(), n)),
                    ],
                ) as u32;
                hits += relation(
                    ("corl-n", pn(p - 1, n)),
                    vec![
                        (Rational::one(), "corl-n", pn(p, n)),
                        (q(-1, s), "corl-o", pn(p, n)),
                        (q(-1, s), "corl-e", xn(xp.clone(), n)),
                    ],
                ) as u32;
            }
            hits += relation(
                ("corl-p", pn(p + 1, n)),
                vec![
                    (Rational::one(), "corl-p", pn(p, n)),
                    (q(-1, s + 1), "corl-q", pn(p, n)),
                    (q(1, s + 1), "corl-g", xn(xp.clone(), n)),
                ],
            ) as u32;
            hits += relation(
                ("corl-q", pn(p + 1, n)),
                vec![
                    (Rational::one(), "corl-q", pn(p, n)),
                    (q(-1, s + 1), "corl-r", pn(p, n)),
                    (q(1, s + 1), "corl-h", xn(xp, n)),
                ],
            ) as u32;
        }
    }
    assert!(hits > 200, "{hits}");
}
