//! Subcommand implementations. Each returns plain text plus a JSON report.

use std::path::PathBuf;

use mcmrep_core::graded::BaseField;
use mcmrep_core::parse::parse_polynomial;
use mcmrep_core::{
    build_defining_ideal, enumerate_points, example_algebra_x2, generator_degree_spread,
    hilbert_series_of_type, hom_component, is_indecomposable, isomorphism_evidence, module_point_in,
    module_point_r, normalize_shifts, orbit_partition, orbits, parameterize, rank_over_s,
    three_orbit_representatives, validate_point, CensusMethod, Error, Field, Fp, GradedAlgebra,
    IsoEvidence, MatrixPoint, NamedModulePoint, PrimeField, Rational, RationalField, ShiftType,
};
use serde::Serialize;

use crate::error::CliError;
use crate::format::parse_algebra;
use crate::report::*;

pub const DEFAULT_DEGREE_BOUND: u64 = 12;
pub const DEFAULT_BUDGET: u128 = 10_000_000;
const HILBERT_TERMS: i64 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Hilbert,
    Repeqs,
    CheckPoint,
    Isom,
    Indec,
    Census,
    Spread,
    Family,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Hilbert => "hilbert",
            Command::Repeqs => "repeqs",
            Command::CheckPoint => "check-point",
            Command::Isom => "isom",
            Command::Indec => "indec",
            Command::Census => "census",
            Command::Spread => "spread",
            Command::Family => "family",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    Family(String),
    File(PathBuf),
    Text(String),
}

/// A fully specified invocation.
#[derive(Clone, Debug)]
pub struct Job {
    pub command: Command,
    pub algebra: Option<AlgebraSource>,
    pub shifts: Option<ShiftType>,
    pub q: Option<u64>,
    pub n: Option<i64>,
    pub modules: Vec<String>,
    pub degree_bound: u64,
    pub budget: u128,
}

impl Job {
    pub fn new(command: Command) -> Self {
        Job {
            command,
            algebra: None,
            shifts: None,
            q: None,
            n: None,
            modules: Vec::new(),
            degree_bound: DEFAULT_DEGREE_BOUND,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub json: String,
}

/// Parses `0,1` or `{0,1}` into a shift type.
pub fn parse_shifts(s: &str) -> Result<ShiftType, CliError> {
    let body = s.trim().trim_start_matches('{').trim_end_matches('}');
    if body.trim().is_empty() {
        return Ok(ShiftType::default());
    }
    body.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Usage(format!("invalid shift '{}'", t.trim())))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(ShiftType::new)
}

fn load_algebra(job: &Job) -> Result<(GradedAlgebra, bool), CliError> {
    match &job.algebra {
        None => Err(CliError::Usage("pass --family x2 or --algebra <file>".into())),
        Some(AlgebraSource::Family(f)) if f == "x2" => Ok((example_algebra_x2(), true)),
        Some(AlgebraSource::Family(f)) => Err(CliError::Usage(format!("unknown family '{f}'; known: x2"))),
        Some(AlgebraSource::File(p)) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?;
            let alg = parse_algebra(&text).map_err(|e| CliError::Syntax(format!("{}: {e}", p.display())))?;
            let x2 = alg.clone().with_field(BaseField::Rational) == example_algebra_x2();
            Ok((alg, x2))
        }
        Some(AlgebraSource::Text(t)) => {
            let alg = parse_algebra(t).map_err(|e| CliError::Syntax(e.to_string()))?;
            let x2 = alg.clone().with_field(BaseField::Rational) == example_algebra_x2();
            Ok((alg, x2))
        }
    }
}

fn base_field(job: &Job, alg: &GradedAlgebra) -> Result<BaseField, CliError> {
    match job.q {
        Some(q) => Ok(BaseField::Prime(PrimeField::new(q)?)),
        None => Ok(alg.field()),
    }
}

fn need_shifts(job: &Job) -> Result<&ShiftType, CliError> {
    job.shifts
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("{} needs --shifts", job.command.name())))
}

fn envelope<T: Serialize>(command: Command, field: &BaseField, result: T) -> String {
    let e = Envelope {
        version: REPORT_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        command: command.name(),
        field: field.to_string(),
        result,
    };
    serde_json::to_string_pretty(&e).expect("reports serialize") + "\n"
}

fn shifts_vec(v: &ShiftType) -> Vec<i64> {
    v.shifts().to_vec()
}

/// Runs a job.
pub fn run(job: &Job) -> Result<Output, CliError> {
    if job.command == Command::Spread && job.algebra.is_none() {
        return spread_only(job);
    }
    let (alg, is_x2) = load_algebra(job)?;
    let field = base_field(job, &alg)?;
    match field {
        BaseField::Rational => run_in::<Rational>(job, &alg, is_x2, &field, RationalField),
        BaseField::Prime(p) => run_in::<Fp>(job, &alg, is_x2, &field, p),
    }
}

fn run_in<F: Field>(
    job: &Job,
    alg: &GradedAlgebra,
    is_x2: bool,
    field: &BaseField,
    desc: F::Desc,
) -> Result<Output, CliError> {
    match job.command {
        Command::Validate => validate(job, alg, field),
        Command::Hilbert => hilbert(job, alg, field),
        Command::Repeqs => repeqs::<F>(job, alg, field, desc),
        Command::CheckPoint => check_point::<F>(job, alg, is_x2, field, desc),
        Command::Isom => isom::<F>(job, alg, is_x2, field, desc),
        Command::Indec => indec::<F>(job, alg, is_x2, field, desc),
        Command::Census => census(job, alg, is_x2, field),
        Command::Spread => spread::<F>(job, alg, is_x2, field, desc),
        Command::Family => family::<F>(job, alg, is_x2, field, desc),
    }
}

fn validate(job: &Job, alg: &GradedAlgebra, field: &BaseField) -> Result<Output, CliError> {
    let violations = alg.validate_presentation();
    let finite = if violations.is_empty() {
        Some(alg.verify_normalization()?)
    } else {
        None
    };
    let valid = violations.is_empty() && finite == Some(true);
    let mut text = format!(
        "algebra over {field}: {} variables, {} relations, normalization {}\n",
        alg.names().len(),
        alg.relations().len(),
        alg.normalization_names().join(", ")
    );
    for v in &violations {
        text += &format!("violation: {v}\n");
    }
    if finite == Some(false) {
        text += "violation: the algebra is not finite over the normalization ring\n";
    }
    text += if valid { "valid\n" } else { "invalid\n" };
    let report = ValidateReport {
        valid,
        variables: alg
            .names()
            .iter()
            .zip(alg.degrees())
            .map(|(n, &d)| VariableEntry { name: n.clone(), degree: d })
            .collect(),
        normalization: alg.normalization_names().to_vec(),
        relations: alg.relations().iter().map(|r| r.render(alg.names())).collect(),
        violations: violations.iter().map(|v| v.to_string()).collect(),
        finite_over_normalization: finite,
    };
    let out = Output {
        text,
        json: envelope(job.command, field, report),
    };
    if valid {
        Ok(out)
    } else {
        Err(CliError::Rejected(out))
    }
}

fn require_valid(alg: &GradedAlgebra) -> Result<(), CliError> {
    let v = alg.validate_presentation();
    if !v.is_empty() {
        return Err(Error::InvalidPresentation(v).into());
    }
    Ok(())
}

fn hilbert(job: &Job, alg: &GradedAlgebra, field: &BaseField) -> Result<Output, CliError> {
    require_valid(alg)?;
    let hs = alg.hilbert_series()?;
    let coeffs = hs.expand_range(0, HILBERT_TERMS - 1);
    for d in 0..=job.degree_bound {
        let c = alg.component_dimension(d)?;
        if hs.coefficient(d as i64) != c as i64 {
            return Err(CliError::Internal(format!(
                "series coefficient {} differs from {c} standard monomials in degree {d}",
                hs.coefficient(d as i64)
            )));
        }
    }
    let hp = match hs.hilbert_polynomial() {
        Ok(p) => Some(p.to_string()),
        Err(Error::NotEventuallyPolynomial) => None,
        Err(e) => return Err(e.into()),
    };
    let list: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    let text = format!(
        "H(t) = {hs}\ncoefficients: {}\nHilbert polynomial: {}\nchecked against standard monomials through degree {}\n",
        list.join(", "),
        hp.as_deref().unwrap_or("none (not eventually polynomial)"),
        job.degree_bound
    );
    let report = HilbertReport {
        series: hs.to_string(),
        numerator: hs.numerator().iter().map(|(&e, &c)| [e, c]).collect(),
        denominator: hs.denominator().to_vec(),
        coefficients: coeffs,
        hilbert_polynomial: hp,
        checked_through_degree: job.degree_bound,
    };
    Ok(Output {
        text,
        json: envelope(job.command, field, report),
    })
}

fn repeqs<F: Field>(job: &Job, alg: &GradedAlgebra, field: &BaseField, desc: F::Desc) -> Result<Output, CliError> {
    let v = need_shifts(job)?;
    let rep = build_defining_ideal::<F>(alg, v, desc)?;
    let ps = rep.parameter_space();
    let n = ps.len();
    let gens: Vec<String> = rep.generators().iter().map(|g| g.to_string()).collect();
    let weights = ps.torus_weights();
    let mut text = format!(
        "Rep_S(R, {v}) over {field}: {n} unknowns {}, {} generators\n",
        if n == 0 { "(none)".to_string() } else { format!("u1..u{n}") },
        gens.len()
    );
    for (i, g) in gens.iter().enumerate() {
        text += &format!("  {}: {g}\n", i + 1);
    }
    text += "unknown  entry            torus weight\n";
    let mut unknowns = Vec::new();
    for k in 0..n {
        let d = ps.describe(k);
        text += &format!("  u{:<5} {:<16} {}\n", k + 1, d, weights[k]);
        unknowns.push(UnknownEntry {
            name: format!("u{}", k + 1),
            entry: d,
            torus_weight: weights[k],
        });
    }
    let report = RepeqsReport {
        shifts: shifts_vec(v),
        unknowns,
        generators: gens,
    };
    Ok(Output {
        text,
        json: envelope(job.command, field, report),
    })
}

fn resolve_module<F: Field>(
    spec: &str,
    job: &Job,
    alg: &GradedAlgebra,
    is_x2: bool,
    desc: &F::Desc,
) -> Result<NamedModulePoint<F>, CliError> {
    let spec = spec.trim();
    // optional twist suffix "(s)"
    let (base, twist) = match spec.strip_suffix(')').and_then(|s| s.rsplit_once('(')) {
        Some((b, t)) if !b.is_empty() && !b.contains(',') => {
            let t: i64 = t
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid twist in '{spec}'")))?;
            (b, t)
        }
        _ => (spec, 0),
    };
    let named = |label: &str| -> Result<NamedModulePoint<F>, CliError> {
        if !is_x2 {
            return Err(CliError::Usage(format!("module '{label}' is only defined for the x2 algebra")));
        }
        Ok(match label {
            "R" => module_point_r::<F>(desc.clone())?,
            "I" => {
                let n = job.n.ok_or_else(|| CliError::Usage("module I needs --n".into()))?;
                module_point_in::<F>(n, desc.clone())?
            }
            _ => {
                let n: i64 = label[2..]
                    .parse()
                    .map_err(|_| CliError::Usage(format!("unknown module '{label}'")))?;
                module_point_in::<F>(n, desc.clone())?
            }
        })
    };
    let mut m = match base {
        "R" | "I" => named(base)?,
        b if b.starts_with("I_") => named(b)?,
        "zero" => {
            let v = need_shifts(job)?;
            NamedModulePoint {
                label: "zero".into(),
                point: MatrixPoint::zero(alg, v, desc.clone())?,
            }
        }
        coords => {
            let v = need_shifts(job)?;
            let ps = parameterize::<F>(alg, v, desc.clone())?;
            let values = if coords.is_empty() {
                Vec::new()
            } else {
                coords
                    .split(',')
                    .map(|c| {
                        let p = parse_polynomial(c, &[])
                            .map_err(|e| CliError::Usage(format!("invalid coordinate '{}': {e}", c.trim())))?;
                        let q = p.terms.get(&Vec::new()).cloned().unwrap_or_default();
                        F::from_rational(desc, &q).ok_or_else(|| Error::CoefficientNotInField(q.to_string()).into())
                    })
                    .collect::<Result<Vec<F>, CliError>>()?
            };
            NamedModulePoint {
                label: format!("({})", coords),
                point: ps.evaluate(&values)?,
            }
        }
    };
    if twist != 0 {
        m.point = m.point.shifted(-twist);
        m.label = format!("{}({twist})", m.label);
    }
    Ok(m)
}

fn modules<F: Field>(job: &Job, alg: &GradedAlgebra, is_x2: bool, desc: &F::Desc, count: usize) -> Result<Vec<NamedModulePoint<F>>, CliError> {
    if job.modules.len() != count {
        return Err(CliError::Usage(format!(
            "{} needs {count} --module argument{}",
            job.command.name(),
            if count == 1 { "" } else { "s" }
        )));
    }
    job.modules.iter().map(|m| resolve_module(m, job, alg, is_x2, desc)).collect()
}

fn module_entry<F: Field>(m: &NamedModulePoint<F>) -> ModuleEntry {
    ModuleEntry {
        label: m.label.clone(),
        shifts: shifts_vec(m.shifts()),
        matrices: m.point.matrices().iter().map(|x| x.to_string()).collect(),
    }
}

fn check_point<F: Field>(job: &Job, alg: &GradedAlgebra, is_x2: bool, field: &BaseField, desc: F::Desc) -> Result<Output, CliError> {
    let m = modules::<F>(job, alg, is_x2, &desc, 1)?.remove(0);
    let valid = validate_point(&m.point, alg, m.shifts())?;
    let text = format!(
        "{} of type {}: {}\n{}\n",
        m.label,
        m.shifts(),
        m.point,
        if valid { "valid point" } else { "not a point: the relations fail" }
    );
    let out = Output {
        text,
        json: envelope(job.command, field, CheckPointReport { module: module_entry(&m), valid }),
    };
    if valid {
        Ok(out)
    } else {
        Err(CliError::Rejected(out))
    }
}

fn isom<F: Field>(job: &Job, alg: &GradedAlgebra, is_x2: bool, field: &BaseField, desc: F::Desc) -> Result<Output, CliError> {
    let ms = modules::<F>(job, alg, is_x2, &desc, 2)?;
    let (a, b) = (&ms[0], &ms[1]);
    let ev = isomorphism_evidence(&a.point, &b.point)?;
    let hom_dim = if a.point.dim() == 0 { 0 } else { hom_component(&a.point, &b.point, 0)?.dim() };
    let (evidence, witness) = match &ev {
        IsoEvidence::SymbolicNonzero => ("generic determinant is nonzero", None),
        IsoEvidence::SymbolicZero => ("generic determinant vanishes", None),
        IsoEvidence::Witness(w) => ("invertible map found by sampling", Some(w.to_string())),
        IsoEvidence::NoMaps => ("no degree-0 maps", None),
        IsoEvidence::Empty => ("both modules are zero", None),
    };
    let iso = ev.is_isomorphic();
    let mut text = format!(
        "{} and {}: {}\ndim Hom_0 = {hom_dim}; {evidence}\n",
        a.label,
        b.label,
        if iso { "isomorphic" } else { "not isomorphic" }
    );
    if let Some(w) = &witness {
        text += &format!("witness: {w}\n");
    }
    let report = IsomReport {
        first: module_entry(a),
        second: module_entry(b),
        isomorphic: iso,
        hom_dimension: hom_dim,
        evidence: evidence.to_string(),
        witness,
    };
    Ok(Output {
        text,
        json: envelope(job.command, field, report),
    })
}

fn indec<F: Field>(job: &Job, alg: &GradedAlgebra, is_x2: bool, field: &BaseField, desc: F::Desc) -> Result<Output, CliError> {
    let m = modules::<F>(job, alg, is_x2, &desc, 1)?.remove(0);
    if !validate_point(&m.point, alg, m.shifts())? {
        return Err(CliError::Usage(format!("{} is not a point of the variety", m.label)));
    }
    let end_dim = if m.point.dim() == 0 { 0 } else { hom_component(&m.point, &m.point, 0)?.dim() };
    let ind = is_indecomposable(&m.point)?;
    let text = format!(
        "{} of type {}: dim End_0 = {end_dim}; {}\n",
        m.label,
        m.shifts(),
        if ind { "indecomposable" } else { "decomposable" }
    );
    let report = IndecReport {
        module: module_entry(&m),
        endomorphism_dimension: end_dim,
        indecomposable: ind,
    };
    Ok(Output {
        text,
        json: envelope(job.command, field, report),
    })
}

fn census(job: &Job, alg: &GradedAlgebra, is_x2: bool, field: &BaseField) -> Result<Output, CliError> {
    let p = match field {
        BaseField::Prime(p) => *p,
        BaseField::Rational => return Err(CliError::Usage("census needs a finite field: pass --q".into())),
    };
    let v = need_shifts(job)?;
    let pts = enumerate_points::<Fp>(alg, v, p, job.budget)?;
    let named: Vec<NamedModulePoint<Fp>> = if is_x2 && *v == ShiftType::new([0, 1]) {
        three_orbit_representatives(p)?
    } else {
        Vec::new()
    };
    let c = orbit_partition(&pts, alg, v, p, &named, orbits::DEFAULT_GROUP_BUDGET)?;
    let method = match c.method {
        CensusMethod::GroupAction => "group action",
        CensusMethod::IsomorphismClustering => "isomorphism clustering",
    };
    let mut text = format!(
        "Rep_S(R, {v}) over F_{}: {} points, |G_V| = {}\n{} orbits ({method}), {} isomorphism classes\n",
        p.modulus(),
        c.total_points,
        c.group_order.map_or("not enumerated".to_string(), |g| g.to_string()),
        c.orbits.len(),
        c.iso_class_count
    );
    let mut orbits_out = Vec::new();
    for (i, o) in c.orbits.iter().enumerate() {
        let rep: Vec<u32> = o.representative.iter().map(|x| x.value()).collect();
        let rep_s: Vec<String> = rep.iter().map(|x| x.to_string()).collect();
        text += &format!(
            "  orbit {}: size {}, stabilizer {}, representative ({}){}\n",
            i + 1,
            o.size,
            o.stabilizer_order.map_or("?".into(), |s| s.to_string()),
            rep_s.join(", "),
            o.label.as_ref().map_or(String::new(), |l| format!(", {l}"))
        );
        orbits_out.push(OrbitEntry {
            representative: rep,
            size: o.size,
            stabilizer_order: o.stabilizer_order,
            label: o.label.clone(),
            iso_class: o.iso_class,
        });
    }
    if c.diverges() {
        text += "note: orbit count over the finite field differs from the isomorphism class count\n";
    }
    let report = CensusReport {
        q: p.modulus() as u64,
        shifts: shifts_vec(v),
        points: c.total_points,
        group_order: c.group_order,
        method: method.to_string(),
        orbit_count: c.orbits.len(),
        iso_class_count: c.iso_class_count,
        divergent: c.diverges(),
        orbits: orbits_out,
    };
    Ok(Output {
        text,
        json: envelope(job.command, field, report),
    })
}

fn spread_report(v: &ShiftType) -> Result<(String, SpreadReport), CliError> {
    let s = generator_degree_spread(v)?;
    let (norm, shift) = normalize_shifts(v)?;
    Ok((
        format!("type {v}: spread {s}; normalized {norm}, shift {shift}\n"),
        SpreadReport {
            shifts: shifts_vec(v),
            spread: s,
            normalized: shifts_vec(&norm),
            shift,
        },
    ))
}

fn spread_only(job: &Job) -> Result<Output, CliError> {
    let v = need_shifts(job)?;
    let (text, report) = spread_report(v)?;
    Ok(Output {
        text,
        json: envelope(job.command, &BaseField::Rational, report),
    })
}

fn spread<F: Field>(job: &Job, alg: &GradedAlgebra, is_x2: bool, field: &BaseField, desc: F::Desc) -> Result<Output, CliError> {
    let v = match job.modules.first() {
        Some(m) => resolve_module::<F>(m, job, alg, is_x2, &desc)?.shifts().clone(),
        None => need_shifts(job)?.clone(),
    };
    let (text, report) = spread_report(&v)?;
    Ok(Output {
        text,
        json: envelope(job.command, field, report),
    })
}

fn family<F: Field>(job: &Job, alg: &GradedAlgebra, is_x2: bool, field: &BaseField, desc: F::Desc) -> Result<Output, CliError> {
    if !is_x2 {
        return Err(CliError::Usage("family is only defined for the x2 algebra".into()));
    }
    let top = job.n.unwrap_or(5);
    if top < 1 {
        return Err(CliError::Usage("family needs --n >= 1".into()));
    }
    let mut text = String::new();
    let mut members = Vec::new();
    let mut seen: Vec<ShiftType> = Vec::new();
    for n in 1..=top {
        let m = module_point_in::<F>(n, desc.clone())?;
        let valid = validate_point(&m.point, alg, m.shifts())?;
        let ind = is_indecomposable(&m.point)?;
        let hs = hilbert_series_of_type(&alg.normalization_degrees(), m.shifts());
        let hp = hs.hilbert_polynomial()?.to_string();
        let (norm, _) = normalize_shifts(m.shifts())?;
        if seen.contains(&norm) {
            return Err(CliError::Internal(format!("normalized type {norm} repeats")));
        }
        seen.push(norm.clone());
        let spread = generator_degree_spread(m.shifts())?;
        text += &format!(
            "{}: type {}, {}, {}, {}, H(t) = {hs}, Hilbert polynomial {hp}, rank {}, normalized {norm}, spread {spread}\n",
            m.label,
            m.shifts(),
            m.point,
            if valid { "valid" } else { "invalid" },
            if ind { "indecomposable" } else { "decomposable" },
            rank_over_s(&m.point)
        );
        members.push(FamilyMember {
            n,
            module: module_entry(&m),
            valid,
            indecomposable: ind,
            series: hs.to_string(),
            hilbert_polynomial: hp,
            rank: rank_over_s(&m.point),
            normalized: shifts_vec(&norm),
            spread,
        });
    }
    Ok(Output {
        text,
        json: envelope(job.command, field, FamilyReport { family: "I_n".into(), members }),
    })
}
