use altruns::closed_forms::*;
use altruns::enumerate::{build_t, t_contribution, Parity, PolyFamily, SignStat, SignedDistributionRequest};
use altruns::series::{egf_alt, egf_coeff, egf_snakes, AltFamily, Series, SnakeFamily};
use altruns::{BiPoly, ClassA, Engine, EndClass, Group, Step, UniPoly};
use num_bigint::BigInt;
use num_rational::BigRational;

fn engine() -> Engine {
    Engine::new(4)
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn series_kernels() {
    let cos = Series::cos(5);
    let expect: Vec<BigRational> = [(1, 1), (0, 1), (-1, 2), (0, 1), (1, 24)]
        .iter()
        .map(|&(a, b)| BigRational::new(big(a), big(b)))
        .collect();
    assert_eq!(cos.coeffs(), expect.as_slice());
    let sec = Series::from_int(1, 8).div(&Series::cos(8)).unwrap();
    assert_eq!(sec.coeff(0), BigRational::from_integer(big(1)));
    assert_eq!(Series::sin(6).scale_arg(2).coeff(1), BigRational::from_integer(big(2)));
    assert!(Series::from_int(1, 4).div(&Series::sin(4)).is_err());
}

#[test]
fn generating_function_values() {
    let a = egf_alt(AltFamily::A, 16);
    let euler: Vec<BigInt> = (0..5).map(|n| egf_coeff(&a, n).unwrap()).collect();
    assert_eq!(euler, [1, 1, 1, 2, 5].map(big));
    assert_eq!(egf_coeff(&egf_alt(AltFamily::APlus, 16), 4).unwrap(), big(3));
    assert_eq!(egf_coeff(&egf_alt(AltFamily::AMinus, 16), 4).unwrap(), big(2));
    assert_eq!(egf_coeff(&egf_alt(AltFamily::B, 16), 1).unwrap(), big(2));
    assert_eq!(egf_coeff(&egf_alt(AltFamily::DPlus, 16), 0).unwrap(), big(1));
    let s = egf_snakes(SnakeFamily::B, 16);
    assert_eq!((0..4).map(|n| egf_coeff(&s, n).unwrap()).collect::<Vec<_>>(), [1, 1, 3, 11].map(big));
    let diff = egf_coeff(&egf_snakes(SnakeFamily::BPlus, 16), 2).unwrap()
        - egf_coeff(&egf_snakes(SnakeFamily::BMinus, 16), 2).unwrap();
    assert_eq!(diff, big(-1));
    assert_eq!(egf_coeff(&egf_snakes(SnakeFamily::D, 16), 2).unwrap(), big(1));
}

#[test]
fn distributions() {
    let e = engine();
    assert_eq!(e.family(PolyFamily::R, 4).unwrap(), UniPoly::from_ints(&[0, 2, 12, 10]));
    let (plus, minus) = e.parity_split(Group::A, 4).unwrap();
    assert_eq!(plus, UniPoly::from_ints(&[0, 2, 4, 6]));
    assert_eq!(minus, UniPoly::from_ints(&[0, 0, 8, 4]));
    assert_eq!(e.parity_split(Group::A, 5).unwrap().1, UniPoly::from_ints(&[0, 0, 16, 28, 16]));
    assert_eq!(e.parity_split(Group::A, 8).unwrap().0.one_plus_t_multiplicity().unwrap(), 2);
    let signed = |n| e.dist_biv(&SignedDistributionRequest::new(Group::A, n).signed(SignStat::InvA)).unwrap();
    assert_eq!(signed(4), BiPoly::from_terms(&[(0, 0, 2), (1, 0, -2), (0, 1, -2), (1, 1, 2)]));
    assert!(signed(2).is_zero());
    assert_eq!(e.class_poly_a(4, ClassA::AD, true).unwrap(), BiPoly::from_terms(&[(1, 0, -2)]));
    assert_eq!(e.class_poly_a(4, ClassA::AA, true).unwrap(), BiPoly::from_terms(&[(0, 0, 1), (1, 1, 1)]));
    assert!(e.class_poly_a(1, ClassA::AA, true).is_err());
}

#[test]
fn subsets_and_t_sets() {
    let e = engine();
    for n in 4..=6 {
        for k in 1..=7 {
            assert!(e.subset_contribution_b(n, k, Step::Ascent).unwrap().is_zero(), "n={n} k={k}");
        }
        assert!(e.subset_contribution_d(n, 9, Step::Ascent).unwrap().is_zero());
        let total = e
            .dist_biv(&SignedDistributionRequest::new(Group::B, n).signed(SignStat::InvB).end(EndClass::B(Step::Ascent)))
            .unwrap();
        assert_eq!(t_contribution(n, Step::Ascent, Group::B).unwrap(), total);
    }
    let t2: Vec<Vec<i8>> = build_t(2, Step::Ascent).into_iter().map(|w| w.into_word()).collect();
    assert_eq!(t2, vec![vec![1, 2], vec![-2, -1]]);
}

#[test]
fn counts() {
    let e = engine();
    assert_eq!(e.count_alternating(Group::A, 4, Parity::All).unwrap(), 5);
    let diff = |n| {
        e.count_alternating(Group::A, n, Parity::Plus).unwrap() as i64
            - e.count_alternating(Group::A, n, Parity::Minus).unwrap() as i64
    };
    assert_eq!([diff(4), diff(5), diff(6), diff(7)], [1, 0, -1, 0]);
    // The alternating split of D_2 is balanced; only the snake split is not.
    assert_eq!(e.count_alternating(Group::D, 2, Parity::Plus).unwrap(), 1);
    assert_eq!(e.count_alternating(Group::D, 2, Parity::Minus).unwrap(), 1);
    assert_eq!(e.count_snakes(SnakeFamily::B, 3).unwrap(), 11);
    assert_eq!(e.count_snakes(SnakeFamily::DPlus, 1).unwrap(), 1);
    assert_eq!(e.count_snakes(SnakeFamily::DMinus, 2).unwrap(), 1);
    for n in 3..=6 {
        for k in 1..=3 {
            assert_eq!(
                e.snake_subset_contribution(n, k, Parity::Plus).unwrap(),
                e.snake_subset_contribution(n, k, Parity::Minus).unwrap()
            );
        }
    }
}

#[test]
fn closed_form_values() {
    assert_eq!(cor_sgn_altrun_uni(8).unwrap(), &(&UniPoly::from_ints(&[0, 2]) * &UniPoly::from_ints(&[1, -1]).pow(4)) * &UniPoly::from_ints(&[1, 1]).pow(2));
    assert_eq!(g_coeff(8, 2).unwrap(), big(-4));
    assert_eq!(r_pm_coeff(&big(2766), 8, 3, true).unwrap(), big(1382));
    assert_eq!(thm_b_formulas(2).unwrap().2, BiPoly::from_terms(&[(0, 0, 2), (1, 0, -1), (0, 1, -1)]));
    assert_eq!(thm_d_formulas(2).unwrap().1, BiPoly::from_terms(&[(0, 0, 1), (1, 0, -1)]));
    assert_eq!(gao_sun_differences(3).unwrap().0, UniPoly::from_ints(&[0, 1, 0, -1]));
    assert_eq!(divisibility_claim(PolyFamily::RBPlus, 7).unwrap(), 3);
}

#[test]
fn recurrence_matches_enumeration() {
    let e = engine();
    for n in 3..=9 {
        for class in ClassA::ALL {
            assert_eq!(recurrence_class_biv(n, class).unwrap(), e.class_poly_a(n, class, true).unwrap());
        }
    }
}

#[test]
fn diagonal_of_bivariate_is_univariate() {
    let e = engine();
    for n in 1..=9 {
        let req = SignedDistributionRequest::new(Group::A, n).signed(SignStat::InvA);
        let biv = e.dist_biv(&req).unwrap();
        assert_eq!(&UniPoly::t() * &biv.substitute_diag(), e.dist_uni(&req).unwrap());
    }
}
