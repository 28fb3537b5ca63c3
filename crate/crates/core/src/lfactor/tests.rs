use super::*;

#[test]
fn monomial_algebra() {
    let m = SymMonomial::new(1, -1, 3, true);
    assert_eq!(m * m.inv(), SymMonomial::ONE);
    assert_eq!(SymMonomial::chi() * SymMonomial::chi(), SymMonomial::ONE);
    assert_eq!(m.pow(2), SymMonomial::new(2, -2, 6, false));
    assert_eq!(m.to_string(), "chi*a^1*b^-1*p^(3/2)");
    assert_eq!(SymMonomial::ONE.to_string(), "1");
}

#[test]
fn euler_factor_expansion() {
    // (1 - a t)(1 - a^-1 t) = 1 - (a + a^-1) t + t^2
    let ms = SatakeMultiset::new(vec![SymMonomial::alpha(1), SymMonomial::alpha(-1)]);
    let f = EulerFactor::from_multiset(&ms);
    assert_eq!(f.degree(), 2);
    let expected_t1 = SymPoly::monomial(SymMonomial::alpha(1), -1).add(&SymPoly::monomial(SymMonomial::alpha(-1), -1));
    assert_eq!(f.coeffs()[1], expected_t1);
    assert!(f.coeffs()[2].is_one());
    assert!(ms.is_self_dual());
    assert!(!SatakeMultiset::new(vec![SymMonomial::alpha(1)]).is_self_dual());
}

#[test]
fn sp4_example() {
    let ms = standard_satake(Group::Sp, 1).unwrap();
    let expected = SatakeMultiset::new(vec![
        SymMonomial::ONE,
        SymMonomial::alpha(1) * SymMonomial::p_half(1),
        SymMonomial::alpha(-1) * SymMonomial::p_half(1),
        SymMonomial::alpha(1) * SymMonomial::p_half(-1),
        SymMonomial::alpha(-1) * SymMonomial::p_half(-1),
    ]);
    assert_eq!(ms, expected);
}

#[test]
fn standard_identities_hold() {
    for g in [Group::Sp, Group::Su, Group::SuH] {
        for n in 1..=3 {
            let r = identity_check(g, n).unwrap();
            assert!(r.passed, "{}", r.line());
            assert_eq!(r.degree, g.degree(n));
        }
    }
    let r = identity_check(Group::E73, 0).unwrap();
    assert!(r.passed, "{}", r.line());
    assert_eq!(r.degree, 56);
}

#[test]
fn identity_detects_wrong_shift() {
    // dropping one shift changes the product
    let ms = standard_satake(Group::Sp, 2).unwrap();
    let rhs = factored_rhs(Group::Sp, 1).unwrap();
    assert_ne!(EulerFactor::from_multiset(&ms), rhs);
    let bad = l_f_shifted(1, false).mul(&l_f_shifted(1, false)).mul(&zeta_shifted(0));
    assert!(!compare("bad".into(), &standard_satake(Group::Sp, 1).unwrap(), &bad, 5).passed);
}

#[test]
fn cap_and_negative_control() {
    for n in 1..=3 {
        assert!(cap_check(n).unwrap().passed);
        let bad = cap_check_with_shift(n, 1).unwrap();
        assert!(!bad.passed);
        assert!(bad.mismatch.is_some());
    }
}

#[test]
fn arthur_and_miyawaki() {
    for r in arthur_check().unwrap() {
        assert!(r.passed, "{}", r.line());
    }
    for r in miyawaki_check() {
        assert!(r.passed, "{}", r.line());
    }
    assert_eq!(SelfDualRep::sym(16).kind, Duality::Orthogonal);
    assert_eq!(SelfDualRep::sym(1).tensor(&SelfDualRep::sym(8)).kind, Duality::Symplectic);
    assert_eq!(miyawaki_satake().len(), 12);
}

#[test]
fn degeneration_shapes() {
    for n in 1..=3 {
        assert!(degeneration_check(Group::Sp, n).unwrap().passed);
    }
    let r = degeneration_check(Group::E73, 0).unwrap();
    assert!(r.passed, "{}", r.line());
    assert!(degeneration_check(Group::Su, 1).is_err());
}

#[test]
fn tags_and_report() {
    assert_eq!("sp".parse::<Group>().unwrap(), Group::Sp);
    assert_eq!("E73".parse::<Group>().unwrap(), Group::E73);
    assert!(matches!("G2".parse::<Group>(), Err(Error::UnknownGroup(_))));
    let checks = checks_for_tag("Sp", 1).unwrap();
    let text = report_text("Sp n=1", &checks);
    assert!(text.starts_with("# format: lfactor-report v1\n"));
    assert!(text.ends_with("overall=PASS\n"));
    assert!(checks_for_tag("Miyawaki", 0).unwrap().iter().all(|c| c.passed));
}
