use std::collections::BTreeSet;

use fockvir::modes::{
    lambda_central_charge, mode_identity_check, virasoro_bracket_holds, ModeIdentity,
};
use fockvir::rep::{
    case_of, decomposition_report, degenerate_form, discrete_series_match, discrete_series_targets,
    explicit_singular, hw_weight, singular_level, singular_vector_search, trace_character,
};
use fockvir::series::{jacobi_check, product_form, sum_form, Discrepancy, JacobiOutcome};
use fockvir::{
    enumerate_basis, vacuum_like, CharSeries, DecompositionCase, Error, ModeEngine, OperatorSpec,
    Parity, ProductForm, Result, SectorSpec, Selector, State, SumForm, Surd,
};
use serde_json::{json, Value};

use crate::report::Check;
use crate::{Options, Weight};

pub type SuiteOutput = (Vec<Check>, Option<Value>);

const CLIFFORD: &str = "{phi_a, phi_b} = delta_{a,-b}";
const VACUUM: &str = "phi_n |0> = 0 for n > 0";
const HEISENBERG: &str = "[h_m, h_n] = m delta_{m+n,0}";
const CHARGE: &str = "h_0 = dg";
const CENTRAL: &str = "c = -12 lambda^2 + 12 lambda - 2";
const BRACKET: &str = "[L_m, L_n] = (m-n) L_{m+n} + (m^3-m)/12 c delta_{m+n,0}";
const HW_ANNIHILATE: &str = "L_j v_n = 0 for j > 0";
const HW_WEIGHT: &str = "L_0 v_n = ((b + (1-2 lambda)/4 - n)^2/2 - 2((1-2 lambda)/4)^2) v_n";
const B_LINEAR: &str = "L^{lambda,b}_n - L^{lambda,b'}_n = (b' - b) h_n for n != 0";
const HALF_SUGAWARA: &str = "L^{1/2}_0 = 2 L^1_0 + h_0/2";
const SHIFTED: &str = "L^{1/2,-1/4}_n = L^{1/2}_{2n}/2 + delta_{n,0}/32";
const JACOBI: &str =
    "prod (1 + z q^{2i-1/2})(1 + z^-1 q^{2i-3/2})(1 - q^{2i}) = sum_n z^n q^{n^2 + n/2}";
const TRACE_PRODUCT: &str =
    "tr q^{L^{1/2}_0} z^{h_0} = prod (1 + z q^{2i-1/2})(1 + z^-1 q^{2i-3/2})";
const TRACE_SUM: &str = "tr q^{L^{1/2}_0} z^{h_0} = sum_n z^n q^{n^2 + n/2} / prod (1 - q^{2i})";
const TRACE_PARITY: &str =
    "tr q^{L^{1/2}_0} over a parity sector = sum_{n in parity} q^{n^2 + n/2} / prod (1 - q^{2i})";
const TRACE_DIAGONAL: &str = "L_0 is diagonal on each charge sector";
const KERNEL: &str = "L_j v = 0 for 1 <= j <= j_max";
const KERNEL_LEVELS: &str = "singular vectors of F_(n1) at b = n1 + m/sqrt2 sit at levels k(k+m)";
const MONOMIAL: &str = "singular vector at level k(k+m) is the explicit fermion monomial";
const SECTOR: &str = "ch F_(n) = q^{(b-n)^2/2} / prod (1 - q^i) or the telescoping sum of degenerate c = 1 characters";
const DICHOTOMY: &str = "(b-n)^2 = m^2/2 for at most one charge n";
const TELESCOPE: &str = "sum_k ch_{q^2} M(1, (m+2k)^2/4) = q^{m^2/2} / prod (1 - q^{2i})";
const REASSEMBLY: &str = "tr q^{L^{1/2}_0} = sum_n ch_{q^2}(F_(n)) q^{n/2 + n^2}";
const DISCRETE: &str = "c = 1 - 6/((m+2)(m+3)), h = (((m+3)r - (m+2)s)^2 - 1)/(4(m+2)(m+3))";

fn describe(d: &Discrepancy) -> String {
    format!("z^{} q^({}/4): {} vs {}", d.z, d.q4, d.left, d.right)
}

fn series_check(name: &str, anchor: &'static str, left: &CharSeries, right: &CharSeries) -> Check {
    Check::new(
        name,
        anchor,
        left.first_discrepancy(right).as_ref().map(describe),
    )
}

/// Odd `2m` mode labels with `|m| <= window + 1/2`.
fn clifford_modes(window: i64) -> Vec<i32> {
    let w = 2 * window as i32 + 1;
    (-w..=w).step_by(2).collect()
}

fn basis_states(o: &Options) -> Vec<State> {
    enumerate_basis(o.energy_cutoff, None)
        .into_iter()
        .map(State::basis)
        .collect()
}

pub fn verify_clifford(o: &Options) -> Result<SuiteOutput> {
    let modes = clifford_modes(o.mode_window);
    let states = basis_states(o);
    let mut failure = None;
    'outer: for st in &states {
        for &a in &modes {
            for &b in &modes {
                let lhs = st
                    .apply_mode(b)
                    .apply_mode(a)
                    .try_add(&st.apply_mode(a).apply_mode(b))?;
                let rhs = if a == -b { st.clone() } else { State::zero() };
                if lhs != rhs {
                    failure = Some(format!("a = {a}/2, b = {b}/2 on {st}: {lhs}"));
                    break 'outer;
                }
            }
        }
    }
    let vacuum = modes
        .iter()
        .find(|&&m| m > 0 && !State::vacuum().apply_mode(m).is_zero())
        .map(|m| format!("phi[{m}/2]|0> != 0"));
    let count = format!(
        "{} vectors x {} mode pairs",
        states.len(),
        modes.len() * modes.len()
    );
    Ok((
        vec![
            Check::new("anticommutator", CLIFFORD, failure).with_value(count),
            Check::new("vacuum-annihilation", VACUUM, vacuum),
        ],
        None,
    ))
}

pub fn verify_heisenberg(o: &Options) -> Result<SuiteOutput> {
    let engine = ModeEngine::new();
    let states = basis_states(o);
    let w = o.mode_window;
    let mut failure = None;
    'outer: for st in &states {
        for m in -w..=w {
            for n in -w..=w {
                if !engine.heisenberg_bracket_holds(m, n, st)? {
                    failure = Some(format!("[h_{m}, h_{n}] on {st}"));
                    break 'outer;
                }
            }
        }
    }
    let mut charge = None;
    for st in &states {
        let (v, _) = st.terms().next().expect("basis state");
        let image = engine.apply(&OperatorSpec::Heisenberg(0), st)?;
        if image != st.try_scale(&Surd::from_integer(v.dg()))? {
            charge = Some(format!("h_0 on {v}: {image}"));
            break;
        }
    }
    Ok((
        vec![
            Check::new("bracket", HEISENBERG, failure)
                .with_value(format!("{} vectors, |m|,|n| <= {w}", states.len())),
            Check::new("zero-mode-is-charge", CHARGE, charge),
        ],
        None,
    ))
}

fn bracket_check(
    engine: &ModeEngine,
    family: &OperatorSpec,
    states: &[State],
    w: i64,
) -> Result<Option<String>> {
    for st in states {
        for m in -w..=w {
            for n in -w..=w {
                if !virasoro_bracket_holds(engine, family, m, n, st)? {
                    return Ok(Some(format!("[L_{m}, L_{n}] on {st}")));
                }
            }
        }
    }
    Ok(None)
}

pub fn verify_virasoro(o: &Options) -> Result<SuiteOutput> {
    let (lambda, b) = o.lambda_b()?;
    let fixture = &Surd::sqrt(2) * &Surd::ratio(1, 2);
    if o.with_fixtures {
        b.common_radicand(&fixture)?;
        lambda.common_radicand(&fixture)?;
    }
    let engine = ModeEngine::new();
    let states = basis_states(o);
    let w = o.mode_window;
    let family = OperatorSpec::vir_lambda(0, &lambda, &b);
    let c = lambda_central_charge(&lambda);
    // 1 - 3 (1 - 2 lambda)^2
    let two_lambda = lambda.try_add(&lambda)?;
    let alt = Surd::one()
        .try_sub(&Surd::from_integer(3).try_mul(&Surd::one().try_sub(&two_lambda)?.square())?)?;
    let mut checks = vec![Check::new(
        "central-charge",
        CENTRAL,
        (alt != c).then(|| format!("{c} vs {alt}")),
    )
    .with_value(c.to_string())];
    for (name, fam) in [
        ("bracket-half", OperatorSpec::VirHalf(0)),
        ("bracket-one", OperatorSpec::VirOne(0)),
        ("bracket-lambda-b", family.clone()),
    ] {
        checks.push(Check::new(
            name,
            BRACKET,
            bracket_check(&engine, &fam, &states, w)?,
        ));
    }

    let mut annihilate = None;
    let mut weight = None;
    for n in -w..=w {
        let v = State::basis(vacuum_like(n));
        for j in 1..=w {
            let image = engine.apply(&family.with_index(j), &v)?;
            if annihilate.is_none() && !image.is_zero() {
                annihilate = Some(format!("L_{j} v_{n} = {image}"));
            }
        }
        let h = hw_weight(&lambda, &b, n)?;
        let image = engine.apply(&family, &v)?;
        if weight.is_none() && image != v.try_scale(&h)? {
            weight = Some(format!("L_0 v_{n} = {image}, expected {h}"));
        }
    }
    checks.push(Check::new(
        "highest-weight-annihilation",
        HW_ANNIHILATE,
        annihilate,
    ));
    checks.push(Check::new("highest-weight-value", HW_WEIGHT, weight));

    if o.with_fixtures {
        let other = OperatorSpec::vir_lambda(0, &lambda, &fixture);
        let mut failure = None;
        'outer: for st in &states {
            for n in (-w..=w).filter(|&n| n != 0) {
                let diff = engine
                    .apply(&family.with_index(n), st)?
                    .try_sub(&engine.apply(&other.with_index(n), st)?)?;
                let expected = engine
                    .apply(&OperatorSpec::Heisenberg(n), st)?
                    .try_scale(&fixture.try_sub(&b)?)?;
                if diff != expected {
                    failure = Some(format!("n = {n} on {st}"));
                    break 'outer;
                }
            }
        }
        checks.push(
            Check::new("fixture-b-linearity", B_LINEAR, failure)
                .with_value(format!("b' = {fixture}")),
        );
    }
    Ok((checks, None))
}

pub fn verify_identities(o: &Options) -> Result<SuiteOutput> {
    let basis = enumerate_basis(o.energy_cutoff, None);
    let checks = [
        (
            "half-equals-sugawara",
            ModeIdentity::HalfEqualsSugawara,
            HALF_SUGAWARA,
        ),
        ("shifted-b-quarter", ModeIdentity::ShiftedBQuarter, SHIFTED),
    ]
    .into_iter()
    .map(|(name, id, anchor)| {
        let report = mode_identity_check(id, &basis, o.mode_window);
        let failure = report
            .first_failure
            .as_ref()
            .map(|f| format!("n = {} on {}: defect {}", f.index, f.vector, f.defect));
        Check::new(name, anchor, failure).with_value(format!("{} vectors", report.vectors_checked))
    })
    .collect();
    Ok((checks, None))
}

pub fn jacobi(o: &Options) -> Result<SuiteOutput> {
    let failure = match jacobi_check(o.q_order, o.z_window) {
        JacobiOutcome::Ok => None,
        JacobiOutcome::FirstDiscrepancy(d) => Some(describe(&d)),
    };
    let verdict = if failure.is_none() {
        "ok"
    } else {
        "first-discrepancy"
    };
    Ok((
        vec![Check::new("jacobi-triple-product", JACOBI, failure).with_value(verdict)],
        None,
    ))
}

pub fn character(o: &Options) -> Result<SuiteOutput> {
    let selector = o.selector()?;
    let weight = match o.weight {
        Weight::Half => OperatorSpec::VirHalf(0),
        Weight::One => OperatorSpec::VirOne(0),
        Weight::Lambda => {
            let (lambda, b) = o.lambda_b()?;
            OperatorSpec::vir_lambda(0, &lambda, &b)
        }
    };
    let mut spec = SectorSpec::new(selector, weight.clone());
    if o.charge_variable {
        spec = spec.with_charge_variable();
    }
    if o.relative {
        let Selector::Charge(n) = selector else {
            return Err(Error::UnsupportedSector(
                "--relative needs a charge sector".into(),
            ));
        };
        let offset = match &weight {
            OperatorSpec::VirLambda { lambda, b, .. } => hw_weight(lambda, b, n)?,
            _ => {
                let engine = ModeEngine::new();
                let v = vacuum_like(n);
                engine
                    .apply(&weight, &State::basis(v.clone()))?
                    .eigenvalue_on(&v)
                    .ok_or_else(|| Error::NonDiagonal(v.to_string()))?
            }
        };
        spec = spec.relative_to(offset);
    }
    let engine = ModeEngine::new();
    let zw = if o.charge_variable { o.z_window } else { 0 };
    let trace = trace_character(&engine, &spec, o.q_order, zw)?;
    let mut checks = vec![Check::new("trace-diagonal", TRACE_DIAGONAL, None)
        .with_value(format!("{} terms", trace.len()))];
    if o.weight == Weight::Half && !o.relative {
        match (selector, o.charge_variable) {
            (Selector::Full, true) => {
                let product = product_form(ProductForm::Jac1TwoVariable, o.q_order, zw);
                let sum = sum_form(SumForm::Jac2TwoVariable, o.q_order, zw);
                checks.push(series_check(
                    "trace-equals-product",
                    TRACE_PRODUCT,
                    &trace,
                    &product,
                ));
                checks.push(series_check("trace-equals-sum", TRACE_SUM, &trace, &sum));
            }
            (Selector::Parity(p), false) => {
                let form = match p {
                    Parity::Even => SumForm::CharHalfEven,
                    Parity::Odd => SumForm::CharHalfOdd,
                };
                checks.push(series_check(
                    "parity-trace",
                    TRACE_PARITY,
                    &trace,
                    &sum_form(form, o.q_order, 0),
                ));
            }
            _ => {}
        }
    }
    let data = json!({ "leading_q4": trace.min_q4(), "series": trace.to_terms() });
    Ok((checks, Some(data)))
}

pub fn singular(o: &Options) -> Result<SuiteOutput> {
    let (lambda, b) = o.lambda_b()?;
    let n = match o.selector()? {
        Selector::Full => 0,
        Selector::Charge(n) => n,
        Selector::Parity(_) => {
            return Err(Error::UnsupportedSector(
                "singular vectors need a charge sector".into(),
            ));
        }
    };
    let engine = ModeEngine::new();
    let mut checks = Vec::new();
    let mut kernels = Vec::new();
    let mut found = BTreeSet::new();
    let mut found_vectors = Vec::new();
    for level in 1..=o.max_level {
        let kernel = singular_vector_search(&engine, &lambda, &b, n, level, o.j_max)?;
        let mut failure = None;
        for v in &kernel {
            for j in 1..=o.j_max + 2 {
                let image = engine.apply(&OperatorSpec::vir_lambda(j, &lambda, &b), v)?;
                if failure.is_none() && !image.is_zero() {
                    failure = Some(format!("L_{j} on {v} = {image}"));
                }
            }
        }
        checks.push(
            Check::new(format!("kernel-level-{level}"), KERNEL, failure)
                .with_value(format!("dimension {}", kernel.len())),
        );
        if !kernel.is_empty() {
            found.insert(level as i64);
        }
        if kernel.len() == 1 {
            found_vectors.push((level as i64, kernel[0].clone()));
        }
        kernels.push(json!({
            "level": level,
            "dimension": kernel.len(),
            "vectors": kernel.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }));
    }

    let degenerate = degenerate_form(&b).filter(|&(n1, _)| n1 == n && lambda == Surd::ratio(1, 2));
    if let Some((_, m)) = degenerate {
        let ks: Vec<i64> = (0.max(-m)..)
            .take_while(|&k| singular_level(m, k) <= o.max_level as i64)
            .filter(|&k| singular_level(m, k) >= 1)
            .collect();
        let expected: BTreeSet<i64> = ks.iter().map(|&k| singular_level(m, k)).collect();
        let failure =
            (expected != found).then(|| format!("expected levels {expected:?}, found {found:?}"));
        checks.push(
            Check::new("kernel-levels", KERNEL_LEVELS, failure).with_value(format!("m = {m}")),
        );
        for k in ks {
            let level = singular_level(m, k);
            let monomial = explicit_singular(m, k)?;
            let failure = match found_vectors.iter().find(|(l, _)| *l == level) {
                Some((_, v)) if *v == State::basis(monomial.clone()) => None,
                Some((_, v)) => Some(format!(
                    "kernel vector has {} terms, coefficient {} on {monomial}",
                    v.len(),
                    v.coefficient(&monomial)
                )),
                None => Some(format!("no one-dimensional kernel at level {level}")),
            };
            checks.push(
                Check::new(format!("explicit-monomial-k{k}"), MONOMIAL, failure)
                    .with_value(monomial.to_string()),
            );
        }
    }
    Ok((checks, Some(json!({ "charge": n, "kernels": kernels }))))
}

pub fn decompose(o: &Options) -> Result<SuiteOutput> {
    let (_, b) = o.lambda_b()?;
    let case = match &o.case {
        Some(text) => text.parse::<DecompositionCase>()?,
        None => case_of(&b),
    };
    let engine = ModeEngine::new();
    let report = decomposition_report(&engine, case, &b, o.q_order, o.window)?;
    let mut checks = Vec::new();
    for s in &report.sectors {
        let failure = (!s.matches).then(|| format!("agrees through {} quarters", s.agree_to_q4));
        checks.push(
            Check::new(format!("sector[{}]", s.charge), SECTOR, failure)
                .with_value(format!("hw = {}", s.hw)),
        );
    }
    let odd_one_out: Vec<i64> = report
        .sectors
        .iter()
        .filter(|s| s.degenerate_weight != s.reducible)
        .map(|s| s.charge)
        .collect();
    checks.push(Check::new(
        "reducibility-dichotomy",
        DICHOTOMY,
        (!odd_one_out.is_empty()).then(|| format!("charges {odd_one_out:?}")),
    ));
    if let Some(t) = &report.telescoping {
        let failure = (!t.holds).then(|| format!("agrees through {} quarters", t.agree_to_q4));
        checks
            .push(Check::new("telescoping", TELESCOPE, failure).with_value(format!("m = {}", t.m)));
    }
    for r in &report.reassembly {
        let failure = (!r.holds).then(|| {
            format!(
                "trace agrees through {}, closed form through {} quarters",
                r.trace_agree_to_q4, r.closed_form_agree_to_q4
            )
        });
        let parity = match r.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        checks.push(Check::new(
            format!("reassembly-{parity}"),
            REASSEMBLY,
            failure,
        ));
    }
    let data = serde_json::to_value(&report).expect("report is plain data");
    Ok((checks, Some(data)))
}

pub fn discrete(o: &Options) -> Result<SuiteOutput> {
    let ms: Vec<u32> = match o.m {
        Some(m) => vec![m],
        None => (0..=4).collect(),
    };
    let mut checks = Vec::new();
    let mut solutions = Vec::new();
    for m in ms {
        for r in 1..=(m as i64 + 1) {
            for s in 1..=r {
                let (c, h) = discrete_series_targets(m, r, s)?;
                let name = format!("m{m}-r{r}-s{s}");
                match discrete_series_match(m, r, s)? {
                    Some((signs, sol)) => {
                        checks.push(
                            Check::new(name, DISCRETE, None)
                                .with_value(format!("c = {}, h = {}", sol.c, sol.h)),
                        );
                        solutions.push(json!({
                            "m": m, "r": r, "s": s,
                            "signs": signs.iter().map(ToString::to_string).collect::<String>(),
                            "solution": sol,
                        }));
                    }
                    None => checks.push(Check::new(
                        name,
                        DISCRETE,
                        Some(format!("no sign choice gives c = {c}, h = {h}")),
                    )),
                }
            }
        }
    }
    Ok((checks, Some(json!({ "solutions": solutions }))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_modes_are_odd_and_symmetric() {
        assert_eq!(clifford_modes(1), vec![-3, -1, 1, 3]);
    }
}
