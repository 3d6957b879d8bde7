//! Reducibility types computed independently with a computer algebra
//! system, compared with the library's classifier.

use trinomial_core::families::{self, FamilyId};
use trinomial_core::{factor_over_q, Poly, Rational, Trinomial};

fn ty(n: u32, m: u32, a: &str, b: &str) -> String {
    Trinomial::new(n, m, a.parse().unwrap(), b.parse().unwrap())
        .unwrap()
        .reducibility_type()
        .unwrap()
        .to_string()
}

#[test]
fn displayed_trinomials() {
    let cases = [
        (5, 1, "-341", "780", "(1,2,2)"),
        (6, 1, "-19656", "82655", "(1,2,3)"),
        (7, 1, "-232", "336", "(1,2,4)"),
        (7, 1, "1247", "-5928", "(1,2,4)"),
        (7, 1, "-9073", "-32760", "(1,2,4)"),
        (7, 1, "-204214984", "2804299680", "(1,2,4)"),
        (10, 2, "11", "-12", "(1,1,2,2,4)"),
        (10, 2, "-2005", "-9996", "(3,3,4)"),
        (12, 3, "128", "256", "(3,3,6)"),
        (12, 3, "-5616", "-3888", "(3,3,6)"),
        (7, 2, "-2", "1", "(1,3,3)"),
    ];
    for (n, m, a, b, want) in cases {
        assert_eq!(ty(n, m, a, b), want, "x^{n} + ({a})x^{m} + ({b})");
    }
}

#[test]
fn sporadic_rows() {
    let cases = [
        (9, 4, "27", "-108", "(3,6)"),
        (10, 3, "297", "648", "(5,5)"),
        (11, 1, "12", "8", "(5,6)"),
        (11, 3, "-6184976", "4216540160", "(3,8)"),
        (13, 1, "-340224", "732160", "(3,10)"),
        (16, 1, "3486328125", "9277343750", "(3,13)"),
        (16, 3, "34816", "-552960", "(4,12)"),
    ];
    for (n, m, a, b, want) in cases {
        assert_eq!(ty(n, m, a, b), want, "x^{n} + ({a})x^{m} + ({b})");
    }
}

#[test]
fn listed_cases_have_the_stated_types() {
    for (id, want) in [(FamilyId::F15M3, "(5,10)"), (FamilyId::F10M4_33, "(3,3,4)")] {
        for s in families::fixed_cases(id) {
            assert_eq!(s.trinomial.reducibility_type().unwrap().to_string(), want, "{}", s.trinomial);
        }
    }
}

#[test]
fn degree_sixteen_quotients_split_as_two_sextics() {
    for (v, a, b) in families::F16M4_TRIPLES {
        let (v, a, b): (Rational, Rational, Rational) = (v.parse().unwrap(), a.parse().unwrap(), b.parse().unwrap());
        assert_eq!(b, -(&(&a * &v) + &v.pow(4)));
        let t = Trinomial::new(16, 4, a, b).unwrap();
        let div = &Poly::monomial(Rational::one(), 4) - &Poly::constant(v);
        let quot = t.poly().exact_div(&div).unwrap();
        assert_eq!(factor_over_q(&quot).unwrap().degrees(), vec![6, 6]);
    }
}

#[test]
fn degree_nine_and_ten_curve_trinomials() {
    for (a, b) in [("32", "-64"), ("-32", "64"), ("81", "-54"), ("729", "-1458")] {
        assert_eq!(ty(9, 2, a, b), "(3,6)");
    }
    for (a, b) in [("297", "-243"), ("8019", "13122"), ("261312546880", "2485545010816")] {
        assert_eq!(ty(10, 1, a, b), "(3,7)");
    }
}
