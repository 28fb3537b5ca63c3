//! Symbolic local L-factors: standard Satake multisets of the lifted forms,
//! the factored products of shifted L-factors of f, and structural
//! bookkeeping for the Arthur, CAP and Miyawaki-type parameters.

mod algebra;

pub use algebra::{EulerFactor, SatakeMultiset, SymMonomial, SymPoly};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Target groups of the lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    /// Sp_{4n}.
    Sp,
    /// SU_{2n+1}, carrying the quadratic character chi.
    Su,
    /// SU(2n) over the quaternions.
    SuH,
    /// The exceptional group of type E_{7,3}; n is ignored.
    E73,
}

impl Group {
    pub fn tag(&self) -> &'static str {
        match self {
            Group::Sp => "Sp",
            Group::Su => "SU",
            Group::SuH => "SUH",
            Group::E73 => "E73",
        }
    }

    /// Degree of the standard L-function.
    pub fn degree(&self, n: usize) -> usize {
        match self {
            Group::Sp => 4 * n + 1,
            Group::Su => 4 * (2 * n + 1),
            Group::SuH => 4 * n,
            Group::E73 => 56,
        }
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sp" | "sp4n" => Ok(Group::Sp),
            "su" | "su2n+1" => Ok(Group::Su),
            "suh" | "su2nh" | "su(2n,h)" => Ok(Group::SuH),
            "e73" | "e7,3" | "e7" => Ok(Group::E73),
            _ => Err(Error::UnknownGroup(s.to_string())),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Weights of Sym^m of the principal SL_2 at p, in half units:
/// p^(w/2) for w = m, m-2, ..., -m.
fn sym_weights(m: i32) -> impl Iterator<Item = i32> {
    (0..=m).map(move |i| m - 2 * i)
}

/// {alpha, alpha^-1} times each p-power of Sym^m.
fn rho_f_tensor_sym(m: i32) -> Vec<SymMonomial> {
    let mut out = Vec::new();
    for w in sym_weights(m) {
        for a in [1, -1] {
            out.push(SymMonomial::alpha(a) * SymMonomial::p_half(w));
        }
    }
    out
}

fn check_n(g: Group, n: usize) -> Result<()> {
    if n == 0 && g != Group::E73 {
        return Err(Error::Structural(format!("{g} needs n >= 1")));
    }
    Ok(())
}

/// Standard Satake multiset of the lift of f to the given group, in terms of
/// the Satake parameter alpha of f at an unramified p.
pub fn standard_satake(g: Group, n: usize) -> Result<SatakeMultiset> {
    check_n(g, n)?;
    let n = n as i32;
    let entries = match g {
        Group::Sp => {
            let mut v = vec![SymMonomial::ONE];
            v.extend(rho_f_tensor_sym(2 * n - 1));
            v
        }
        Group::Su => {
            // rho_f (x) (1 + chi) (x) Sym^{2n}
            let mut v = Vec::new();
            for w in sym_weights(2 * n) {
                for a in [1, -1] {
                    let m = SymMonomial::alpha(a) * SymMonomial::p_half(w);
                    v.push(m);
                    v.push(m * SymMonomial::chi());
                }
            }
            v
        }
        Group::SuH => rho_f_tensor_sym(2 * n - 1),
        Group::E73 => {
            let mut v = vec![SymMonomial::alpha(3), SymMonomial::alpha(1), SymMonomial::alpha(-1), SymMonomial::alpha(-3)];
            for i in 1..=8 {
                let mult = if i <= 4 { 2 } else { 1 };
                for _ in 0..mult {
                    for a in [1, -1] {
                        for s in [1, -1] {
                            v.push(SymMonomial::alpha(a) * SymMonomial::p_half(2 * s * i));
                        }
                    }
                }
            }
            for _ in 0..2 {
                v.push(SymMonomial::alpha(1));
                v.push(SymMonomial::alpha(-1));
            }
            v
        }
    };
    Ok(SatakeMultiset::new(entries))
}

/// Local factor of L(s + c, f) with c = shift_half / 2, inverted:
/// (1 - alpha p^-c t)(1 - alpha^-1 p^-c t).
fn l_f_shifted(shift_half: i32, chi: bool) -> EulerFactor {
    let twist = if chi { SymMonomial::chi() } else { SymMonomial::ONE };
    let pc = SymMonomial::p_half(-shift_half);
    EulerFactor::linear(SymMonomial::alpha(1) * pc * twist).mul(&EulerFactor::linear(SymMonomial::alpha(-1) * pc * twist))
}

/// Inverse local factor of zeta(s + c), c = shift_half / 2.
fn zeta_shifted(shift_half: i32) -> EulerFactor {
    EulerFactor::linear(SymMonomial::p_half(-shift_half))
}

/// Inverse local factor of L(s, Sym^3 f).
fn sym3_factor() -> EulerFactor {
    EulerFactor::product(&[3, 1, -1, -3].map(|a| EulerFactor::linear(SymMonomial::alpha(a))))
}

/// Product of shifted L-factors of f predicted for the standard L-function,
/// assembled factor by factor.
pub fn factored_rhs(g: Group, n: usize) -> Result<EulerFactor> {
    check_n(g, n)?;
    let n = n as i32;
    let mut factors = Vec::new();
    match g {
        Group::Sp => {
            factors.push(zeta_shifted(0));
            for i in 1..=2 * n {
                factors.push(l_f_shifted(2 * n + 1 - 2 * i, false));
            }
        }
        Group::Su => {
            for i in 1..=2 * n + 1 {
                factors.push(l_f_shifted(2 * (n + 1 - i), false));
                factors.push(l_f_shifted(2 * (n + 1 - i), true));
            }
        }
        Group::SuH => {
            for i in 1..=2 * n {
                factors.push(l_f_shifted(2 * n + 1 - 2 * i, false));
            }
        }
        Group::E73 => {
            factors.push(sym3_factor());
            factors.push(l_f_shifted(0, false));
            factors.push(l_f_shifted(0, false));
            for i in 1..=8 {
                let mult = if i <= 4 { 2 } else { 1 };
                for _ in 0..mult {
                    factors.push(l_f_shifted(2 * i, false));
                    factors.push(l_f_shifted(-2 * i, false));
                }
            }
        }
    }
    Ok(EulerFactor::product(&factors))
}

/// Outcome of one structural identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub degree: usize,
    pub expected_degree: usize,
    pub mismatch: Option<String>,
}

impl CheckReport {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("check={} status={} degree={} expected_degree={}", self.name, status, self.degree, self.expected_degree);
        if let Some(m) = &self.mismatch {
            s.push_str(&format!(" mismatch={m}"));
        }
        s
    }
}

/// Versioned text report of a batch of checks.
pub fn report_text(title: &str, checks: &[CheckReport]) -> String {
    let mut s = format!("# format: lfactor-report v1\nsubject={title}\n");
    for c in checks {
        s.push_str(&c.line());
        s.push('\n');
    }
    let all = checks.iter().all(|c| c.passed);
    s.push_str(&format!("overall={}\n", if all { "PASS" } else { "FAIL" }));
    s
}

fn describe_difference(a: &SatakeMultiset, b: &SatakeMultiset) -> Option<String> {
    let (left, right) = a.difference(b);
    if left.is_empty() && right.is_empty() {
        return None;
    }
    let show = |v: &[SymMonomial]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",");
    Some(format!("[{}]vs[{}]", show(&left), show(&right)))
}

/// Compares a multiset with a factored product: equal Euler factors, correct
/// degree and self-duality.
fn compare(name: String, ms: &SatakeMultiset, rhs: &EulerFactor, expected_degree: usize) -> CheckReport {
    let lhs = EulerFactor::from_multiset(ms);
    let mut mismatch = None;
    if !ms.is_self_dual() {
        mismatch = Some("multiset not self-dual".to_string());
    } else if !rhs.constant_term_is_one() {
        mismatch = Some("constant term of the product is not 1".to_string());
    } else if let Some(i) = lhs.first_difference(rhs) {
        mismatch = Some(format!("t^{i}"));
    } else if ms.len() != expected_degree {
        mismatch = Some(format!("multiset size {}", ms.len()));
    }
    CheckReport { name, passed: mismatch.is_none(), degree: lhs.degree(), expected_degree, mismatch }
}

/// Standard L-function identity for the lift to `g`.
pub fn identity_check(g: Group, n: usize) -> Result<CheckReport> {
    let ms = standard_satake(g, n)?;
    let rhs = factored_rhs(g, n)?;
    Ok(compare(format!("standard-{}-n{}", g, n), &ms, &rhs, g.degree(n)))
}

/// Multiset of the representation induced from the GL_2 blocks
/// pi_f |det|^e with e = e_1 > e_2 > ... > e_n, e_j in half units, on Sp_{4n}.
pub fn cap_multiset(half_exponents: &[i32]) -> SatakeMultiset {
    let mut v = vec![SymMonomial::ONE];
    for &e in half_exponents {
        let levi = [SymMonomial::alpha(1) * SymMonomial::p_half(-e), SymMonomial::alpha(-1) * SymMonomial::p_half(-e)];
        for m in levi {
            v.push(m);
            v.push(m.inv());
        }
    }
    SatakeMultiset::new(v)
}

/// CAP exponents n - 1/2, ..., 1/2 shifted by offset_half / 2.
pub fn cap_exponents(n: usize, offset_half: i32) -> Vec<i32> {
    (0..n as i32).map(|j| 2 * n as i32 - 1 - 2 * j + offset_half).collect()
}

/// The CAP induced representation has the lift's standard Satake multiset.
pub fn cap_check_with_shift(n: usize, offset_half: i32) -> Result<CheckReport> {
    let ms = cap_multiset(&cap_exponents(n, offset_half));
    let expected = standard_satake(Group::Sp, n)?;
    let mut report = compare(format!("cap-n{n}-offset{offset_half}"), &ms, &EulerFactor::from_multiset(&expected), Group::Sp.degree(n));
    if report.passed {
        report.mismatch = describe_difference(&ms, &expected);
        report.passed = report.mismatch.is_none();
    } else if let Some(d) = describe_difference(&ms, &expected) {
        report.mismatch = Some(d);
    }
    Ok(report)
}

pub fn cap_check(n: usize) -> Result<CheckReport> {
    cap_check_with_shift(n, 0)
}

/// Self-duality type of a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Duality {
    Symplectic,
    Orthogonal,
}

/// Finite dimensional self-dual representation with its duality type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfDualRep {
    pub dim: usize,
    pub kind: Duality,
}

impl SelfDualRep {
    /// Sym^m of the standard representation of SL_2.
    pub fn sym(m: usize) -> Self {
        let kind = if m % 2 == 1 { Duality::Symplectic } else { Duality::Orthogonal };
        SelfDualRep { dim: m + 1, kind }
    }

    pub fn tensor(&self, o: &SelfDualRep) -> SelfDualRep {
        let kind = if self.kind == o.kind { Duality::Orthogonal } else { Duality::Symplectic };
        SelfDualRep { dim: self.dim * o.dim, kind }
    }
}

/// Arthur parameter of the exceptional lift:
/// Sym^3 rho_f + rho_f (x) Sym^16 + rho_f (x) Sym^8.
pub fn arthur_parameter() -> Vec<(&'static str, SelfDualRep)> {
    let rho_f = SelfDualRep::sym(1);
    vec![
        ("Sym3(rho_f)", SelfDualRep::sym(3)),
        ("rho_f(x)Sym16", rho_f.tensor(&SelfDualRep::sym(16))),
        ("rho_f(x)Sym8", rho_f.tensor(&SelfDualRep::sym(8))),
    ]
}

/// Dimensions add to 56, all summands are symplectic, and the Satake
/// multiset read off the parameter equals the standard multiset.
pub fn arthur_check() -> Result<Vec<CheckReport>> {
    let parts = arthur_parameter();
    let total: usize = parts.iter().map(|(_, r)| r.dim).sum();
    let dims = parts.iter().map(|(n, r)| format!("{n}:{}", r.dim)).collect::<Vec<_>>().join("+");
    let all_symplectic = parts.iter().all(|(_, r)| r.kind == Duality::Symplectic);
    let dim_report = CheckReport {
        name: "arthur-dimensions".into(),
        passed: total == 56 && all_symplectic && parts.iter().map(|(_, r)| r.dim).collect::<Vec<_>>() == [4, 34, 18],
        degree: total,
        expected_degree: 56,
        mismatch: (!all_symplectic || total != 56).then(|| format!("{dims} symplectic={all_symplectic}")),
    };
    let mut v = vec![SymMonomial::alpha(3), SymMonomial::alpha(1), SymMonomial::alpha(-1), SymMonomial::alpha(-3)];
    v.extend(rho_f_tensor_sym(16));
    v.extend(rho_f_tensor_sym(8));
    let from_param = SatakeMultiset::new(v);
    let expected = standard_satake(Group::E73, 0)?;
    let mut sat = compare("arthur-satake".into(), &from_param, &factored_rhs(Group::E73, 0)?, 56);
    if let Some(d) = describe_difference(&from_param, &expected) {
        sat.passed = false;
        sat.mismatch = Some(d);
    }
    Ok(vec![dim_report, sat])
}

/// The 12-element multiset of the Miyawaki-type lift attached to f and a
/// second eigenform h with Satake parameter beta.
pub fn miyawaki_satake() -> SatakeMultiset {
    let ab = SymMonomial::alpha(1) * SymMonomial::beta(1);
    let b_over_a = SymMonomial::alpha(-1) * SymMonomial::beta(1);
    let mut v = vec![ab, ab.inv(), b_over_a, b_over_a.inv(), SymMonomial::ONE, SymMonomial::ONE];
    for i in 1..=3 {
        v.push(SymMonomial::p_half(2 * i));
        v.push(SymMonomial::p_half(-2 * i));
    }
    SatakeMultiset::new(v)
}

/// Exponents of the unipotent orbit (7,1) of SO_8 through the principal
/// SL_2: Sym^6 + Sym^0.
pub fn unipotent_71_exponents() -> Vec<i32> {
    let mut e: Vec<i32> = sym_weights(6).map(|w| w / 2).chain(std::iter::once(0)).collect();
    e.sort_unstable();
    e
}

/// Rankin-Selberg factor times zeta(s)^2 zeta(s+-1) zeta(s+-2) zeta(s+-3),
/// the embedding SO_4 x SO_8 into SO_12 and the unipotent exponents.
pub fn miyawaki_check() -> Vec<CheckReport> {
    let ms = miyawaki_satake();
    let mut factors = Vec::new();
    for a in [1, -1] {
        for b in [1, -1] {
            factors.push(EulerFactor::linear(SymMonomial::alpha(a) * SymMonomial::beta(b)));
        }
    }
    factors.push(zeta_shifted(0));
    factors.push(zeta_shifted(0));
    for i in 1..=3 {
        factors.push(zeta_shifted(2 * i));
        factors.push(zeta_shifted(-2 * i));
    }
    let rhs = EulerFactor::product(&factors);
    let identity = compare("miyawaki-identity".into(), &ms, &rhs, 12);

    // parameter: phi_h (x) phi_f on SO_4 plus the unipotent part on SO_8
    let mut v = Vec::new();
    for a in [1, -1] {
        for b in [1, -1] {
            v.push(SymMonomial::alpha(a) * SymMonomial::beta(b));
        }
    }
    let so4 = v.len();
    let exps = unipotent_71_exponents();
    let so8 = exps.len();
    v.extend(exps.iter().map(|&e| SymMonomial::p_half(2 * e)));
    let from_param = SatakeMultiset::new(v);
    let diff = describe_difference(&from_param, &ms);
    let embedding = CheckReport {
        name: "miyawaki-parameter".into(),
        passed: so4 == 4 && so8 == 8 && diff.is_none(),
        degree: so4 + so8,
        expected_degree: 12,
        mismatch: diff,
    };
    let exps_ok = exps == [-3, -2, -1, 0, 0, 1, 2, 3];
    let unipotent = CheckReport {
        name: "unipotent-7-1".into(),
        passed: exps_ok,
        degree: so8,
        expected_degree: 8,
        mismatch: (!exps_ok).then(|| format!("{exps:?}")),
    };
    vec![identity, embedding, unipotent]
}

/// Substitution alpha -> P^power p^(half_shift/2), with P = p^k stored in
/// the alpha slot.
pub fn substitute_alpha(ms: &SatakeMultiset, power: i32, half_shift: i32) -> SatakeMultiset {
    ms.map(|m| SymMonomial { alpha: m.alpha * power, beta: m.beta, half_p: m.half_p + m.alpha * half_shift, chi: m.chi })
}

/// Multiset of the degenerate principal series attached to the holomorphic
/// Eisenstein series, in terms of P = p^k.
///
/// Sp_{4n}: Siegel parabolic with Levi GL_{2n}, inducing parameter
/// q = p^(k - 1/2); the trivial representation of GL_{2n} contributes
/// q p^((2n-1)/2 - j).
///
/// E73: parabolic with Levi E_6 x GL_1, inducing parameter q = p^(2k-1);
/// the 56 splits as 1 + 27 + 27* + 1 with GL_1 weights 3, 1, -1, -3, and the
/// principal SL_2 of E_6 acts on the 27 as Sym^16 + Sym^8 + Sym^0.
pub fn degenerate_principal_series(g: Group, n: usize) -> Result<SatakeMultiset> {
    check_n(g, n)?;
    let q = |power: i32, half: i32| SymMonomial::new(power, 0, half, false);
    match g {
        Group::Sp => {
            let q = q(1, -1);
            let mut v = vec![SymMonomial::ONE];
            for w in sym_weights(2 * n as i32 - 1) {
                let m = q * SymMonomial::p_half(w);
                v.push(m);
                v.push(m.inv());
            }
            Ok(SatakeMultiset::new(v))
        }
        Group::E73 => {
            let q = q(2, -2);
            let mut v = vec![q.pow(3), q.pow(-3)];
            for m in [16, 8, 0] {
                for w in sym_weights(m) {
                    v.push(q * SymMonomial::p_half(w));
                    v.push(q.inv() * SymMonomial::p_half(w));
                }
            }
            Ok(SatakeMultiset::new(v))
        }
        _ => Err(Error::Structural(format!("no degenerate Eisenstein model for {g}"))),
    }
}

/// The Eisenstein substitution for `g` reproduces the degenerate principal
/// series while the other candidate does not. Candidates are
/// alpha -> p^(k-1/2) and alpha -> p^(2k-1).
pub fn degeneration_check(g: Group, n: usize) -> Result<CheckReport> {
    let ms = standard_satake(g, n)?;
    let target = degenerate_principal_series(g, n)?;
    let half = substitute_alpha(&ms, 1, -1);
    let full = substitute_alpha(&ms, 2, -2);
    let (correct, wrong, label) = match g {
        Group::E73 => (full, half, "p^(2k-1)"),
        _ => (half, full, "p^(k-1/2)"),
    };
    let mut mismatch = describe_difference(&correct, &target);
    if mismatch.is_none() && wrong == target {
        mismatch = Some("alternative substitution also matches".into());
    }
    Ok(CheckReport {
        name: format!("degeneration-{g}-n{n}-alpha={label}"),
        passed: mismatch.is_none(),
        degree: correct.len(),
        expected_degree: g.degree(n),
        mismatch,
    })
}

/// Every check for one group tag; Miyawaki, CAP and Arthur are accepted as
/// extra tags.
pub fn checks_for_tag(tag: &str, n: usize) -> Result<Vec<CheckReport>> {
    match tag.trim().to_ascii_lowercase().as_str() {
        "miyawaki" => Ok(miyawaki_check()),
        "cap" => Ok(vec![cap_check(n)?]),
        "arthur" => arthur_check(),
        _ => {
            let g: Group = tag.parse()?;
            let mut v = vec![identity_check(g, n)?];
            if matches!(g, Group::Sp | Group::E73) {
                v.push(degeneration_check(g, n)?);
            }
            if g == Group::Sp {
                v.push(cap_check(n)?);
            }
            if g == Group::E73 {
                v.extend(arthur_check()?);
            }
            Ok(v)
        }
    }
}

#[cfg(test)]
mod tests;
