use ikeda_core::elliptic::eigenform;
use ikeda_core::jacobi::{dual_cosets, fj_component, reconstruct_fj, JacobiIndex, ThetaComponent};
use ikeda_core::lift::{lift_expand, maass_check};
use ikeda_core::siegel::{eigen_ratio, hecke_tp_degree2, phi_operator, SiegelExpansion};

#[test]
fn eigenform_to_lift_to_jacobi() {
    let f = eigenform(26, 120).unwrap();
    let lift = lift_expand(&f, 8).unwrap();
    let exp = &lift.expansion;
    assert_eq!(exp.weight, 14);
    assert!(!exp.is_zero());
    assert!(phi_operator(exp).is_zero());
    assert_eq!(maass_check(exp, 13).unwrap().consistent(), Some(13));
    let image = hecke_tp_degree2(exp, 2).unwrap();
    assert!(eigen_ratio(exp, &image).unwrap().is_constant());

    // artifacts survive a text round trip
    let back = SiegelExpansion::from_text(&exp.to_text()).unwrap();
    assert_eq!(&back, exp);

    let s = JacobiIndex::new(1).unwrap();
    for xi in dual_cosets(s) {
        let comp = fj_component(&back, s, xi).unwrap();
        assert_eq!(comp.constant_term(), ikeda_core::arith::q_int(0));
        assert_eq!(ThetaComponent::from_text(&comp.to_text()).unwrap(), comp);
    }
    assert!(reconstruct_fj(&back, s).unwrap().passed());
}
