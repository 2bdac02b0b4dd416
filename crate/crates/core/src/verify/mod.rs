//! The acceptance checks, each returning a one-line report.
//!
//! Reference values that are not published constants are supplied through
//! [`Oracles`], so that callers can plug in their own independent
//! implementations.

pub mod oracles;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bezoutian::{bezoutian, parameter_assignment, PolySystem};
use crate::combinat::{binomial, DegreeSystem};
use crate::linalg::{bareiss_det, Label};
use crate::macaulay::{
    bezout_matrix, build_assembly, complex_profile, dixon_resultant, exactness_check, gcp, jacobian_variant,
    resultant_generic, resultant_specialized, ternary_quadric_sylvester, univariate_formulas, MacaulayError,
    ResultantOptions,
};
use crate::ring::{Exponent, MPoly, Param, ParamPoly, Scalar, UniPoly};

/// Independent reference computations used by the checks.
#[derive(Clone, Copy)]
pub struct Oracles {
    /// The resultant of generic forms of degrees `(1, 1, 2)`, up to sign.
    pub elimination_112: fn(&PolySystem<ParamPoly>) -> ParamPoly,
    /// Normalized resultant of two binary forms given by the coefficients of
    /// `X_1^j X_2^{d-j}` for `j = 0..=d`.
    pub binary_resultant: fn(&[BigRational], &[BigRational]) -> BigRational,
    /// Normalized resultant of three linear forms.
    pub linear_resultant: fn(&PolySystem<BigInt>) -> BigInt,
    pub interpolate: fn(&[(BigRational, BigRational)]) -> UniPoly<BigRational>,
    /// `H_d(t)` counted directly.
    pub hilbert: fn(&[u32], i64) -> u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} [{}] {}: {}", self.id, status, self.title, self.detail)
    }
}

type Check = Result<(bool, String), MacaulayError>;

fn report(id: u32, title: &'static str, check: impl FnOnce() -> Check) -> CriterionReport {
    match check() {
        Ok((passed, detail)) => CriterionReport { id, title, passed, detail },
        Err(e) => CriterionReport { id, title, passed: false, detail: format!("error: {}", e) },
    }
}

fn plus_minus<R: Scalar>(a: &R, b: &R) -> bool {
    *a == *b || *a == b.neg()
}

fn random_system(rng: &mut ChaCha8Rng, degrees: &[u32], bound: i64) -> PolySystem<BigInt> {
    let g = PolySystem::generic(degrees.to_vec()).expect("valid degrees");
    let mut a = HashMap::new();
    for f in g.polys() {
        for (_, c) in f.terms() {
            for p in c.params() {
                a.insert(p, BigInt::from(rng.gen_range(-bound..=bound)));
            }
        }
    }
    g.specialize(&a).expect("all parameters assigned")
}

/// Normalized resultant of a pair of binary forms through the oracle.
fn binary_oracle(o: &Oracles, sys: &PolySystem<BigRational>) -> BigRational {
    let coeffs = |i: usize| -> Vec<BigRational> {
        let d = sys.degrees()[i - 1];
        (0..=d).map(|j| sys.coefficient(i, &Exponent::new(vec![j, d - j]))).collect()
    };
    (o.binary_resultant)(&coeffs(1), &coeffs(2))
}

pub const TITLES: [&str; 10] = [
    "worked example (1,1,2)",
    "worked example (1,1,2,3)",
    "Bezoutian slices of (1,1,2)",
    "size table",
    "quotient theorem for n <= 3, d_i <= 3",
    "degree law",
    "cross-formula agreement",
    "generalized characteristic polynomial",
    "complex exactness",
    "combinatorial properties",
];

pub fn criterion_1(o: &Oracles) -> CriterionReport {
    report(1, TITLES[0], || {
        let opts = ResultantOptions::default();
        let sys = PolySystem::generic(vec![1, 1, 2])?;
        let oracle = (o.elimination_112)(&sys);
        let a1 = sys.coefficient(1, &Exponent::unit(3, 0, 1));
        let d2 = build_assembly(&sys, 2)?.determinants()?;
        let d0 = build_assembly(&sys, 0)?.determinants()?;
        let r2 = resultant_generic(&sys, 2, &opts)?;
        let r0 = resultant_generic(&sys, 0, &opts)?;
        let m2_sign = if d2.det_m == a1.mul(&r2.value).neg() { "-" } else { "+" };
        let checks = [
            plus_minus(&d2.det_e_t, &a1),
            plus_minus(&d2.det_m, &a1.mul(&oracle)),
            plus_minus(&d0.det_m, &oracle),
            d0.det_ext.is_one(),
            r2.value == r0.value,
            plus_minus(&r2.value, &oracle),
        ];
        Ok((
            checks.iter().all(|&c| c),
            format!(
                "det(M_2) = {}a_1*Res, det(E_2) = {}, det(M_0) = {}Res, Res has {} terms; checks {:?}",
                m2_sign,
                d2.det_e_t,
                if d0.det_m == r0.value { "" } else { "-" },
                r2.value.num_terms(),
                checks
            ),
        ))
    })
}

pub fn criterion_2() -> CriterionReport {
    report(2, TITLES[1], || {
        let degrees = [1, 1, 2, 3];
        let generic = PolySystem::generic(degrees.to_vec())?;
        let m2 = build_assembly(&generic, 2)?;
        let m = &m2.matrix;
        let mut pattern = m.rows() == 12 && m.blocks.top_rows == 10 && m.blocks.left_cols == 4;
        // Lower rows: f_1 and f_2 against the dual columns, zero elsewhere.
        for r in m.blocks.top_rows..m.rows() {
            let Label::DualMultiple(j, g) = &m.row_labels[r] else {
                pattern = false;
                continue;
            };
            for c in 0..m.cols() {
                let expected = match &m.col_labels[c] {
                    Label::Dual(h) if g.divides(h) => {
                        let rest: Vec<u32> = h.as_slice().iter().zip(g.as_slice()).map(|(a, b)| a - b).collect();
                        generic.coefficient(*j, &Exponent::new(rest))
                    }
                    _ => ParamPoly::zero(),
                };
                pattern &= *m.matrix.get(r, c) == expected;
            }
        }
        let classical = build_assembly(&generic, 4)?;
        let classical_ok = classical.size() == 35 && classical.e_rows.len() == 18;

        let mut rng = ChaCha8Rng::seed_from_u64(1123);
        let opts = ResultantOptions::default();
        let mut agree = 0;
        let mut nonzero = 0;
        let samples = 20;
        for _ in 0..samples {
            let sys = random_system(&mut rng, &degrees, 9);
            let det_m2 = bareiss_det(&build_assembly(&sys, 2)?.matrix.matrix)?;
            let res = resultant_specialized(&sys, Some(4), &opts)?.value;
            let a1 = sys.coefficient(1, &Exponent::unit(4, 0, 1));
            if plus_minus(&det_m2, &(a1 * &res)) {
                agree += 1;
            }
            if !res.is_zero() {
                nonzero += 1;
            }
        }
        Ok((
            pattern && classical_ok && agree == samples,
            format!(
                "M_2 12x12 block pattern {}, classical 35x35 with 18 extraneous rows {}, det(M_2) = +-a_1*Res(t=4) at {}/{} points ({} with Res != 0)",
                pattern, classical_ok, agree, samples, nonzero
            ),
        ))
    })
}

pub fn criterion_3() -> CriterionReport {
    report(3, TITLES[2], || {
        let sys = PolySystem::generic(vec![1, 1, 2])?;
        let slices = bezoutian(&sys)?.slices(0)?;
        let v = |i: u32, k: u32| ParamPoly::var(Param::new(i, k));
        let ab = |i: u32, j: u32| v(1, i).mul(&v(2, j)).sub(&v(1, j).mul(&v(2, i)));
        // The published c_1, ..., c_6 are the coefficients of X1^2, X2^2, X3^2,
        // X1X2, X1X3, X2X3, which are a_3_1, a_3_4, a_3_6, a_3_2, a_3_3, a_3_5 here.
        let (c1, c2, c3, c4, c5, c6) = (v(3, 1), v(3, 4), v(3, 6), v(3, 2), v(3, 3), v(3, 5));
        let expected = [
            c1.mul(&ab(2, 3)).sub(&c4.mul(&ab(1, 3))).add(&c5.mul(&ab(1, 2))),
            c6.mul(&ab(1, 2)).sub(&c2.mul(&ab(1, 3))),
            c3.mul(&ab(1, 2)),
        ];
        let names = ["(1,0,0)", "(0,1,0)", "(0,0,1)"];
        let mut ok = slices.len() == 3;
        let mut detail = Vec::new();
        for (k, (g, slice)) in slices.iter().enumerate().take(3) {
            let value = slice.coeff(&Exponent::zero(3));
            let matches = slice.num_terms() <= 1 && value == expected[k];
            let label = format!("({})", g.as_slice().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            ok &= matches && label == names[k];
            detail.push(format!("Delta_{} {}", names[k], if matches { "matches" } else { "differs" }));
        }
        Ok((ok, detail.join(", ")))
    })
}

/// Rows of the size table: degrees, minimal size, classical size.
pub fn size_table() -> Vec<(Vec<u32>, u64, u64)> {
    vec![
        (vec![10, 70], 70, 80),
        (vec![150, 200], 200, 350),
        (vec![1, 1, 2], 3, 6),
        (vec![1, 2, 5], 14, 28),
        (vec![2, 2, 6], 21, 45),
        (vec![1, 1, 2, 3], 12, 35),
        (vec![2, 2, 5, 5], 94, 364),
        (vec![2, 3, 4, 5], 90, 364),
        (vec![4; 5], 670, 4845),
        (vec![2, 3, 3, 3, 3, 3, 3], 2373, 38760),
        (vec![3; 10], 175803, 14307150),
        (vec![2; 20], 39875264, 131282408400),
    ]
}

pub fn criterion_4() -> CriterionReport {
    report(4, TITLES[3], || {
        let mut bad = Vec::new();
        let rows = size_table();
        for (degrees, min, classical) in &rows {
            let s = DegreeSystem::new(degrees.clone())?.size_summary()?;
            if (s.min_size, s.classical_size) != (*min, *classical) {
                bad.push(format!("{:?}: got ({}, {})", degrees, s.min_size, s.classical_size));
            }
        }
        let mut detail = format!("{}/{} rows reproduced", rows.len() - bad.len(), rows.len());
        if !bad.is_empty() {
            detail += &format!("; mismatches: {}", bad.join("; "));
        }
        Ok((bad.is_empty(), detail))
    })
}

/// Ordered degree systems with `n <= max_n` and `d_i <= max_d`.
pub fn degree_systems(max_n: usize, max_d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut cur = vec![1u32; n];
        loop {
            out.push(cur.clone());
            let Some(k) = (0..n).rev().find(|&k| cur[k] < max_d) else { break };
            cur[k] += 1;
            for x in cur.iter_mut().skip(k + 1) {
                *x = 1;
            }
        }
    }
    out
}

/// Total coefficient degree of the resultant, `sum_i prod_{j != i} d_j`.
pub fn resultant_degree(degrees: &[u32]) -> u64 {
    (0..degrees.len())
        .map(|i| degrees.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, &d)| u64::from(d)).product::<u64>())
        .sum()
}

/// Largest resultant degree verified symbolically by [`criterion_5`].
pub const SYMBOLIC_DEGREE_BUDGET: u64 = 11;

pub fn criterion_5() -> CriterionReport {
    report(5, TITLES[4], || {
        let opts = ResultantOptions { normalize_sign: true, max_symbolic_size: 64 };
        let mut symbolic = 0;
        let mut failures = Vec::new();
        let mut skipped = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let systems = degree_systems(3, 3);
        for degrees in &systems {
            let ds = DegreeSystem::new(degrees.clone())?;
            let top = ds.critical_degree() + 1;
            if resultant_degree(degrees) <= SYMBOLIC_DEGREE_BUDGET {
                let sys = PolySystem::generic(degrees.clone())?;
                let mut values = Vec::new();
                for t in 0..=top {
                    // Errors here include a vanishing or non-dividing extraneous factor.
                    match resultant_generic(&sys, t, &opts) {
                        Ok(v) => values.push(v.value),
                        Err(e) => failures.push(format!("{:?} t={}: {}", degrees, t, e)),
                    }
                }
                if values.windows(2).any(|w| w[0] != w[1]) {
                    failures.push(format!("{:?}: quotient depends on t", degrees));
                }
                symbolic += 1;
            } else {
                let mut consistent = true;
                let mut points = 0;
                let mut attempts = 0;
                while points < 3 && attempts < 30 {
                    attempts += 1;
                    let sys = random_system(&mut rng, degrees, 9);
                    let bez = bezoutian(&sys)?;
                    let mut values = Vec::new();
                    let mut singular = false;
                    for t in 0..=top {
                        let asm = crate::macaulay::build_assembly_with(&sys, Some(&bez), t)?;
                        let d = asm.determinants()?;
                        if d.det_ext.is_zero() {
                            singular = true;
                            break;
                        }
                        let sign = crate::macaulay::reference_sign(degrees, t)?;
                        match d.det_m.exact_div(&d.det_ext) {
                            Some(q) => values.push(if sign < 0 { -q } else { q }),
                            None => consistent = false,
                        }
                    }
                    // The quotient is undefined where the extraneous factor vanishes.
                    if singular {
                        continue;
                    }
                    points += 1;
                    consistent &= values.windows(2).all(|w| w[0] == w[1]);
                }
                consistent &= points == 3;
                skipped.push(format!("{:?}{}", degrees, if consistent { "" } else { "(!)" }));
            }
        }
        let passed = failures.is_empty() && skipped.is_empty();
        let mut detail = format!(
            "{}/{} ordered systems verified symbolically for every t in 0..=t_n+1",
            symbolic,
            systems.len()
        );
        if !failures.is_empty() {
            detail += &format!("; failures: {}", failures.join("; "));
        }
        if !skipped.is_empty() {
            detail += &format!(
                "; not verified symbolically (resultant degree > {}, beyond the runtime budget), consistent at 3 random integer points: {}",
                SYMBOLIC_DEGREE_BUDGET,
                skipped.join(" ")
            );
        }
        Ok((passed, detail))
    })
}

pub fn criterion_6() -> CriterionReport {
    report(6, TITLES[5], || {
        let opts = ResultantOptions::default();
        let mut ok = true;
        let mut detail = Vec::new();
        for degrees in [vec![1, 2], vec![2, 2], vec![1, 1, 2]] {
            let sys = PolySystem::generic(degrees.clone())?;
            let res = resultant_generic(&sys, sys.degree_system().minimal_t(), &opts)?.value;
            let mut got = Vec::new();
            for i in 0..degrees.len() {
                let expected: u32 = degrees.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, d)| d).product();
                let range = res.degree_range_in_poly(i as u32 + 1);
                ok &= range == Some((expected, expected));
                got.push(range.map_or("-".to_string(), |(lo, hi)| if lo == hi { lo.to_string() } else { format!("{}..{}", lo, hi) }));
            }
            detail.push(format!("{:?}: ({})", degrees, got.join(",")));
        }
        Ok((ok, detail.join(" ")))
    })
}

pub fn criterion_7(o: &Oracles) -> CriterionReport {
    report(7, TITLES[6], || {
        let opts = ResultantOptions::default();
        let samples = 50;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let q = |v: &BigInt| BigRational::from_integer(v.clone());

        let mut bezout = 0;
        for k in 0..samples {
            let d = 1 + k % 4;
            let a: Vec<BigInt> = (0..=d).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
            let b: Vec<BigInt> = (0..=d).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
            let mut ea = vec![BigInt::zero(); d + 1];
            ea[d] = BigInt::from(1);
            let mut eb = vec![BigInt::zero(); d + 1];
            eb[0] = BigInt::from(1);
            let reference = bareiss_det(&bezout_matrix(&ea, &eb))?;
            let det = bareiss_det(&bezout_matrix(&a, &b))?;
            let normalized = if reference == BigInt::from(1) { det } else { -det };
            let aq: Vec<BigRational> = a.iter().map(q).collect();
            let bq: Vec<BigRational> = b.iter().map(q).collect();
            let sylvester = (o.binary_resultant)(&aq, &bq);
            let via_family = univariate_formulas(&a, &b, d as u32 - 1, &opts)?.value;
            if q(&normalized) == sylvester && q(&via_family) == sylvester {
                bezout += 1;
            }
        }

        let mut dixon = 0;
        for _ in 0..samples {
            let sys = random_system(&mut rng, &[2, 2, 2], 9);
            if dixon_resultant(&sys)? == resultant_specialized(&sys, None, &opts)?.value {
                dixon += 1;
            }
        }

        let mut quadrics = 0;
        for _ in 0..samples {
            let sys = random_system(&mut rng, &[2, 2, 2], 9);
            if ternary_quadric_sylvester(&sys)? == resultant_specialized(&sys, Some(1), &opts)?.value {
                quadrics += 1;
            }
        }

        let mut jacobian = 0;
        let families = [vec![1, 1, 2], vec![2, 2], vec![1, 2, 2], vec![1, 1, 1], vec![2, 3]];
        let mut k = 0;
        let mut attempts = 0;
        while k < samples && attempts < 4 * samples {
            attempts += 1;
            let sys = random_system(&mut rng, &families[k % families.len()], 9);
            match jacobian_variant(&sys) {
                Ok(j) => {
                    if j.resultant == resultant_specialized(&sys, None, &opts)?.value {
                        jacobian += 1;
                    }
                    k += 1;
                }
                Err(MacaulayError::Degenerate) => continue,
                Err(e) => return Err(e),
            }
        }
        let passed = bezout == samples && dixon == samples && quadrics == samples && jacobian == samples;
        Ok((
            passed,
            format!(
                "Bezout/Sylvester {}/{}, Dixon {}/{}, ternary quadrics {}/{}, Jacobian {}/{}",
                bezout, samples, dixon, samples, quadrics, samples, jacobian, samples
            ),
        ))
    })
}

pub fn criterion_8(o: &Oracles) -> CriterionReport {
    report(8, TITLES[7], || {
        let x = |e: [u32; 2]| MPoly::monomial(Exponent::new(e.to_vec()), BigRational::from_integer(1.into()));
        let sys = PolySystem::new(vec![2, 2], vec![x([1, 1]), x([2, 0])])?;
        let points: Vec<(BigRational, BigRational)> = (0..5)
            .map(|s| {
                let s = BigRational::from_integer(s.into());
                let perturbed: Vec<MPoly<BigRational>> = (1..=2)
                    .map(|i| sys.poly(i).try_sub(&MPoly::monomial(Exponent::unit(2, i - 1, 2), s.clone())))
                    .collect::<Result<_, _>>()?;
                Ok((s.clone(), binary_oracle(o, &PolySystem::new(vec![2, 2], perturbed)?)))
            })
            .collect::<Result<_, MacaulayError>>()?;
        let oracle = (o.interpolate)(&points);
        let Some((k, c)) = oracle.lowest_nonzero().map(|(k, c)| (k, c.clone())) else {
            return Ok((false, "oracle polynomial vanishes".into()));
        };
        let t = sys.degree_system().critical_degree() + 1;
        let g = gcp(&sys, t)?;
        let lowest = g.lowest();
        let passed = g.normalized.coeff(0).is_zero() && lowest == Some((k, c.clone()));
        let others: Vec<String> = (0..t)
            .map(|t| match gcp(&sys, t) {
                Ok(g) => match g.lowest() {
                    Some((gk, gc)) if (gk, &gc) == (k, &c) => format!("t={} matches", t),
                    Some((gk, gc)) => format!("t={} gives {}*s^{}", t, gc, gk),
                    None => format!("t={} vanishes", t),
                },
                Err(e) => format!("t={} error {}", t, e),
            })
            .collect();
        Ok((
            passed,
            format!(
                "t={}: C_t(0) = {}, lowest coefficient {}, oracle {}*s^{}; {}",
                t,
                g.normalized.coeff(0),
                lowest.map_or("none".to_string(), |(k, c)| format!("{}*s^{}", c, k)),
                c,
                k,
                others.join(", ")
            ),
        ))
    })
}

/// A system of the given degrees vanishing at `p`: each random form `f` is
/// replaced by `p_k^d f - f(p) X_k^d` for a coordinate with `p_k != 0`.
fn system_with_root(rng: &mut ChaCha8Rng, degrees: &[u32], p: &[i64]) -> PolySystem<BigInt> {
    let n = degrees.len();
    let sys = random_system(rng, degrees, 6);
    let k = p.iter().position(|&x| x != 0).expect("nonzero point");
    let point: Vec<BigInt> = p.iter().map(|&x| BigInt::from(x)).collect();
    let polys = (1..=n)
        .map(|i| {
            let d = degrees[i - 1];
            let f = sys.poly(i);
            let value = f.eval(&point);
            let pk = point[k].pow(d);
            f.scale(&pk).try_sub(&MPoly::monomial(Exponent::unit(n, k, d), value)).expect("same variables")
        })
        .collect();
    PolySystem::new(degrees.to_vec(), polys).expect("valid system")
}

pub fn criterion_9(o: &Oracles) -> CriterionReport {
    report(9, TITLES[8], || {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut exact_ok = 0;
        let mut exact_total = 0;
        let mut root_ok = 0;
        let mut root_total = 0;
        let generic_112 = PolySystem::generic(vec![1, 1, 2])?;
        let res_112 = (o.elimination_112)(&generic_112);
        for degrees in [vec![1, 1, 2], vec![1, 1, 1]] {
            let tn = DegreeSystem::new(degrees.clone())?.critical_degree();
            let mut found = 0;
            while found < 5 {
                let sys = random_system(&mut rng, &degrees, 6);
                let res = if degrees == [1, 1, 1] {
                    (o.linear_resultant)(&sys)
                } else {
                    res_112.specialize(&parameter_assignment(&sys))?
                };
                if res.is_zero() {
                    continue;
                }
                found += 1;
                for t in 0..=tn {
                    let r = exactness_check(&sys, t)?;
                    exact_total += 1;
                    if r.is_complex && r.is_exact() {
                        exact_ok += 1;
                    }
                }
            }
            for _ in 0..5 {
                let p: Vec<i64> = loop {
                    let p: Vec<i64> = (0..3).map(|_| rng.gen_range(-3i64..=3)).collect();
                    if p.iter().any(|&x| x != 0) {
                        break p;
                    }
                };
                let sys = system_with_root(&mut rng, &degrees, &p);
                for t in 0..=tn {
                    let r = exactness_check(&sys, t)?;
                    root_total += 1;
                    if r.is_complex && !r.is_exact() {
                        root_ok += 1;
                    }
                }
            }
        }
        Ok((
            exact_ok == exact_total && root_ok == root_total,
            format!(
                "Res != 0: {}/{} complexes exact; common root: {}/{} complexes not exact",
                exact_ok, exact_total, root_ok, root_total
            ),
        ))
    })
}

pub fn criterion_10(o: &Oracles) -> CriterionReport {
    report(10, TITLES[9], || {
        let systems = degree_systems(5, 4);
        let mut counts = [0usize; 6];
        let mut corrected = 0usize;
        let names = ["H_d symmetry", "monotonicity", "rho symmetry", "rho(t_n) = C(n+t_n-1,n-1)-1", "|Lambda_t| = H_d(t)", "H_d oracle"];
        for degrees in &systems {
            let ds = DegreeSystem::new(degrees.clone())?;
            let n = degrees.len() as u64;
            let tn = i64::from(ds.critical_degree());
            let h: Vec<u64> = (0..=tn).map(|t| ds.hilbert_function(t)).collect();
            let mut ok = [true; 6];
            for t in 0..=tn {
                ok[0] &= h[t as usize] == h[(tn - t) as usize];
                ok[2] &= ds.rho_size(t)? == ds.rho_size(tn - t)?;
                ok[4] &= ds.reduced_basis(t).len() as u64 == h[t as usize];
                ok[5] &= (o.hilbert)(degrees, t) == h[t as usize];
            }
            for t in 0..tn / 2 {
                ok[1] &= h[t as usize] <= h[t as usize + 1];
            }
            let c = binomial(n + tn as u64 - 1, n - 1);
            ok[3] = ds.rho_size(tn)? + 1 == c;
            if ds.rho_size(tn)? == c {
                corrected += 1;
            }
            for (k, v) in ok.iter().enumerate() {
                counts[k] += usize::from(*v);
            }
        }
        let total = systems.len();
        let passed = counts.iter().all(|&c| c == total);
        let parts: Vec<String> = names.iter().zip(counts).map(|(name, c)| format!("{} {}/{}", name, c, total)).collect();
        Ok((
            passed,
            format!("{}; rho(t_n) = C(n+t_n-1,n-1) without the -1 holds for {}/{}", parts.join(", "), corrected, total),
        ))
    })
}

/// Runs every criterion in order.
pub fn run_all(o: &Oracles) -> Vec<CriterionReport> {
    vec![
        criterion_1(o),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(o),
        criterion_8(o),
        criterion_9(o),
        criterion_10(o),
    ]
}

/// Runs a single criterion by number.
pub fn run_one(id: u32, o: &Oracles) -> Option<CriterionReport> {
    Some(match id {
        1 => criterion_1(o),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(o),
        8 => criterion_8(o),
        9 => criterion_9(o),
        10 => criterion_10(o),
        _ => return None,
    })
}

/// Complex profile shape used by the sizes report.
pub fn determinantal_profile(ds: &DegreeSystem, t: u32) -> Option<bool> {
    complex_profile(ds, t).ok().map(|p| p.is_determinantal_shape())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_ordered_degree_systems() {
        let systems = degree_systems(3, 3);
        assert_eq!(systems.len(), 3 + 9 + 27);
        assert_eq!(systems[0], vec![1]);
        assert_eq!(systems.last().unwrap(), &vec![3, 3, 3]);
        assert_eq!(degree_systems(5, 4).len(), 4 + 16 + 64 + 256 + 1024);
    }

    #[test]
    fn resultant_degrees() {
        assert_eq!(resultant_degree(&[1, 1, 2]), 5);
        assert_eq!(resultant_degree(&[2, 2, 2]), 12);
        assert_eq!(resultant_degree(&[5]), 1);
        let symbolic = degree_systems(3, 3).iter().filter(|d| resultant_degree(d) <= SYMBOLIC_DEGREE_BUDGET).count();
        assert_eq!(symbolic, 28);
    }

    #[test]
    fn common_root_construction_vanishes_at_the_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = [2i64, -1, 3];
        let sys = system_with_root(&mut rng, &[1, 2, 2], &p);
        let point: Vec<BigInt> = p.iter().map(|&x| BigInt::from(x)).collect();
        assert!(sys.polys().iter().all(|f| f.eval(&point).is_zero()));
    }

    #[test]
    fn report_line_format() {
        let r = CriterionReport { id: 3, title: "t", passed: true, detail: "d".into() };
        assert_eq!(r.to_string(), "criterion  3 [PASS] t: d");
        assert!(run_one(11, &oracles::default_oracles()).is_none());
    }
}
