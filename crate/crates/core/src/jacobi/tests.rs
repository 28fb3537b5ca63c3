use num_traits::Zero;

use super::*;
use crate::arith::{q_frac, q_int};
use crate::elliptic::eigenform;
use crate::lift::Lift;
use crate::siegel::{cohen_h, eisenstein_expansion, eisenstein_normalizer, FourierIndex, SiegelExpansion};

fn idx(m: i64) -> JacobiIndex {
    JacobiIndex::new(m).unwrap()
}

#[test]
fn coset_counts_and_examples() {
    for m in 1..=20 {
        let c = dual_cosets(idx(m));
        assert_eq!(c.len() as i64, 2 * m);
        assert_eq!(c[0].value(), q_int(0));
        assert_eq!(dual_cosets_with(idx(m), CosetConvention::DualLattice).len() as i64, m);
    }
    let vals: Vec<Q> = dual_cosets(idx(2)).iter().map(Coset::value).collect();
    assert_eq!(vals, vec![q_int(0), q_frac(1, 4), q_frac(1, 2), q_frac(3, 4)]);
    assert_eq!(Coset::parse(idx(2), "3/4").unwrap(), Coset { j: 3, m: 2 });
    assert_eq!(Coset::parse(idx(2), "-1/4").unwrap(), Coset { j: 3, m: 2 });
    assert!(Coset::parse(idx(2), "1/3").is_err());
    assert!(JacobiIndex::new(0).is_err());
}

#[test]
fn theta_series_examples() {
    let s = idx(1);
    let [zero, half] = dual_cosets(s)[..] else { panic!() };
    let t0 = theta_series(s, zero, 9);
    assert_eq!(t0.lowest_exponent(), Some(q_int(0)));
    assert_eq!(t0.terms.get(&(0, 0)), Some(&q_int(1)));
    assert!(t0.terms.values().all(|c| *c == q_int(1)));
    // r in {-6,...,6} even
    assert_eq!(t0.terms.len(), 7);
    let t1 = theta_series(s, half, 9);
    assert_eq!(t1.lowest_exponent(), Some(q_frac(1, 4)));
    assert_eq!(half.sigma(), q_frac(1, 4));
    assert_eq!(t1.at_u_zero().get(&1), Some(&q_int(2)));
}

#[test]
fn eisenstein_components_match_cohen_pattern() {
    let s = idx(1);
    let rep = eisenstein_fj_check(11, s, 40).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.component_weight, q_frac(23, 2));
    let c = eisenstein_normalizer(12).unwrap();
    for comp in &rep.components {
        assert_eq!(comp.scalar.as_ref(), Some(&c));
        assert_eq!(comp.checked, if comp.xi.j == 0 { 41 } else { 40 });
    }
    assert!(matches!(eisenstein_fj_check(11, idx(3), 10), Err(Error::UnsupportedIndex(3))));
}

#[test]
fn eisenstein_component_values() {
    let e = eisenstein_expansion(12, 12).unwrap();
    let s = idx(1);
    let comp = fj_component(&e, s, dual_cosets(s)[0]).unwrap();
    assert_eq!(comp.n_max, 11);
    let c = eisenstein_normalizer(12).unwrap();
    for n in 0..=11i64 {
        assert_eq!(*comp.coefficient_at_n(n).unwrap(), &c * cohen_h(11, 4 * n as u64));
    }
    let text = comp.to_text();
    assert!(text.starts_with("# format: fj-component v1\nS=1\nxi=0/1\noffset_denominator=4\n"));
    assert_eq!(ThetaComponent::from_text(&text).unwrap(), comp);
}

#[test]
fn reconstruction_is_exact() {
    let e = eisenstein_expansion(10, 20).unwrap();
    for m in 1..=3 {
        let rep = reconstruct_fj(&e, idx(m)).unwrap();
        assert!(rep.passed(), "m={m}: {rep:?}");
        assert!(rep.checked > 0);
        if m == 1 {
            assert_eq!(rep.uncovered, 0);
        }
    }
    // the literal dual lattice misses the odd classes entirely
    let rep = reconstruct_fj_with(&e, idx(1), CosetConvention::DualLattice).unwrap();
    assert!(rep.first_mismatch.is_some());
    assert!(!rep.passed());
    let empty = SiegelExpansion::empty(10, 0);
    let rep = reconstruct_fj(&empty, idx(1)).unwrap();
    assert_eq!(rep.checked, 0);
    assert!(rep.passed());
    let zero = SiegelExpansion::empty(10, 6);
    let comp = fj_component(&zero, idx(1), dual_cosets(idx(1))[0]).unwrap();
    assert!(comp.is_zero());
}

#[test]
fn lift_components() {
    let f = eigenform(18, 120).unwrap();
    let lift = Lift::new(&f).unwrap();
    let exp = lift.expand(10).unwrap().expansion;
    let s = idx(1);
    let rep = reconstruct_fj(&exp, s).unwrap();
    assert!(rep.passed(), "{rep:?}");
    for xi in dual_cosets(s) {
        let comp = fj_component(&exp, s, xi).unwrap();
        assert!(comp.constant_term().is_zero());
        assert!(!comp.is_zero());
    }
    let half = fj_component(&exp, s, dual_cosets(s)[1]).unwrap();
    for n in 1..=9 {
        assert_eq!(*half.coefficient_at_n(n).unwrap(), lift.coeff(&FourierIndex::new(1, 1, n)).unwrap());
    }
}
