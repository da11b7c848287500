//! End-to-end analyses: input files, singularity reports, toral reports and
//! covariant series.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::arith::{fmt_rational, Rational};
use crate::derivations::{
    ideal_weights, jacobian_ideal, monomialize, preserves_ideal, tangent_derivations_with, Derivation, DerivationModule,
    TangentOptions,
};
use crate::error::{Error, Result};
use crate::groebner::{Colength, Ideal};
use crate::hilbert::{graded_pieces_series, GradedPieceReport, GradedPiecesOptions, ModuleSpec};
use crate::liealg::{fibre_lie_algebra, fibre_lie_algebra_permissive, Fibre, Fingerprint};
use crate::matrix::Matrix;
use crate::poly::{Monomial, Polynomial, Ring};
use crate::repmod::{
    covariant_dimension, highest_weight_certificate, highest_weight_count, sl2_irreducible_certificate, symmetric_power_basis,
    symmetric_power_lengths, LengthPath,
};
use crate::series::DenomFactor;

/// Parsed input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub ideal: Ideal,
    pub weights_given: bool,
}

/// Reads `vars: x,y,z`, optional `weights: 1,2,2` and one or more
/// `ideal: g1; g2` lines. Blank lines and `#` comments are ignored.
pub fn parse_problem(text: &str) -> Result<Problem> {
    let mut vars: Option<Vec<String>> = None;
    let mut weights: Option<Vec<u32>> = None;
    let mut gens: Vec<String> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("line {}: expected `key: value`", lineno + 1)))?;
        let value = value.trim();
        match key.trim() {
            "vars" => {
                let v: Vec<String> = value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                if v.is_empty() {
                    return Err(Error::Parse(format!("line {}: no variables", lineno + 1)));
                }
                vars = Some(v);
            }
            "weights" => {
                let w = value
                    .split(',')
                    .map(|s| s.trim().parse::<u32>().map_err(|_| Error::Parse(format!("line {}: bad weight `{}`", lineno + 1, s.trim()))))
                    .collect::<Result<Vec<u32>>>()?;
                weights = Some(w);
            }
            "ideal" => gens.extend(value.split(';').map(|s| s.trim().to_string()).filter(|s| !s.is_empty())),
            other => return Err(Error::Parse(format!("line {}: unknown key `{other}`", lineno + 1))),
        }
    }
    let vars = vars.ok_or_else(|| Error::Parse("missing `vars:` line".into()))?;
    let weights_given = weights.is_some();
    let ring = match weights {
        Some(w) => {
            if w.len() != vars.len() {
                return Err(Error::Parse(format!("{} weights for {} variables", w.len(), vars.len())));
            }
            Ring::with_weights(vars, w)?
        }
        None => Ring::with_weights(vars.clone(), vec![1; vars.len()])?,
    };
    let polys = gens.iter().map(|g| ring.parse(g)).collect::<Result<Vec<_>>>()?;
    Ok(Problem { ideal: Ideal::new(ring, polys), weights_given })
}

impl Problem {
    /// The ideal over a ring carrying weights that make it quasi-homogeneous,
    /// when such weights are given or can be found.
    pub fn graded_ideal(&self) -> Ideal {
        if self.weights_given || self.ideal.is_quasi_homogeneous() && self.ideal.weights().iter().any(|&w| w != 1) {
            return self.ideal.clone();
        }
        match ideal_weights(&self.ideal) {
            Some(w) => Ideal::new(self.ideal.ring.reweighted(w).expect("same variable count"), self.ideal.generators.clone()),
            None => self.ideal.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    /// Tangent derivations of the ideal itself.
    #[default]
    Tangent,
    /// Tangent derivations of the Jacobian ideal.
    TjurinaAlgebroid,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Tangent => "tangent",
            Mode::TjurinaAlgebroid => "tjurina-algebroid",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub mode: Mode,
    pub series_depth: usize,
    pub tangent: TangentOptions,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { mode: Mode::Tangent, series_depth: 10, tangent: TangentOptions::default() }
    }
}

/// A known solvability result checked against the computed fibre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultCheck {
    pub name: &'static str,
    pub hypotheses: String,
    pub applies: bool,
    /// Computed solvability when the hypotheses hold.
    pub holds: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub input: String,
    pub mode: Mode,
    pub weights: Vec<u32>,
    pub quasi_homogeneous: bool,
    pub algebroid_ideal: String,
    pub tangent_generators: Vec<String>,
    pub free: bool,
    pub logarithmic: bool,
    pub jacobian_ideal: String,
    pub jacobian_colength: Option<usize>,
    pub tjurina_number: Option<usize>,
    pub isolated: bool,
    pub fibre: Fibre,
    pub fingerprint: Fingerprint,
    pub checks: Vec<ResultCheck>,
    pub contradicts_known_result: bool,
    pub graded: Option<GradedSeries>,
    pub series_note: Option<String>,
}

/// Graded series attached to a report, with the ideal `J` it filters by.
#[derive(Clone, Debug)]
pub struct GradedSeries {
    pub filtration: String,
    pub path: String,
    pub report: GradedPieceReport,
}

fn order_at_least(ideal: &Ideal, k: u32) -> bool {
    ideal.generators.iter().all(|g| g.order().is_none_or(|o| o >= k))
}

/// Minimal generators of a weighted-homogeneous ideal (graded Nakayama).
pub fn minimal_generators(ideal: &Ideal) -> Vec<Polynomial> {
    let w = ideal.weights().to_vec();
    let mut gens = ideal.generators.clone();
    gens.sort_by_key(|g| g.weighted_degree(&w).unwrap_or(0));
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in gens {
        let sub = Ideal::new(ideal.ring.clone(), kept.clone());
        if sub.is_zero() || !sub.contains(&g) {
            kept.push(g);
        }
    }
    kept
}

/// Matrices of the linear parts of `ds` on the span of the listed
/// coordinates: entry `(i, j)` is the coefficient of `x_{vars[i]}` in `d(x_{vars[j]})`.
pub fn linear_action(ds: &[Derivation], vars: &[usize]) -> Vec<Matrix> {
    let n = ds.first().map(|d| d.nvars()).unwrap_or(0);
    ds.iter()
        .map(|d| {
            let mut m = Matrix::zeros(vars.len(), vars.len());
            for (j, &vj) in vars.iter().enumerate() {
                for (i, &vi) in vars.iter().enumerate() {
                    m.set(i, j, d.coeffs[vj].coeff(&Monomial::var(vi)));
                }
            }
            let _ = n;
            m
        })
        .collect()
}

/// Denominators of the covariant series for binary forms of small degree.
pub fn covariant_denominator(d: usize) -> Option<Vec<DenomFactor>> {
    match d {
        0 | 1 => Some(vec![DenomFactor::new(1, 1)]),
        2 => Some(vec![DenomFactor::new(1, 1), DenomFactor::new(2, 1)]),
        3 => Some(vec![DenomFactor::new(1, 2), DenomFactor::new(4, 1)]),
        _ => None,
    }
}

fn colength_or_zero(ideal: &Ideal) -> Result<Colength> {
    match ideal.colength() {
        Err(Error::UnitIdeal) => Ok(Colength::Finite { count: 0, standard_monomials: vec![] }),
        other => other,
    }
}

/// Upper bound on `dim S^n(V)` for the highest weight cross-check.
const CROSS_CHECK_DIM: usize = 400;

pub fn analyze_singularity(problem: &Problem, opts: &AnalyzeOptions) -> Result<SingularityReport> {
    let ideal = problem.graded_ideal();
    let input = problem.ideal.fmt();
    if ideal.is_zero() {
        return Err(Error::Precondition("the zero ideal has no singularity to analyse".into()));
    }
    let quasi_homogeneous = ideal.is_quasi_homogeneous();
    if !quasi_homogeneous {
        return Err(Error::NotQuasiHomogeneous(format!(
            "{input} is not weighted-homogeneous for any weights found; supply a quasi-homogeneous representative"
        )));
    }
    let n = ideal.nvars();
    let principal = ideal.generators.len() == 1;
    let jac = jacobian_ideal(&ideal, None).map_err(|e| e.context("Jacobian ideal"))?;
    let jac = Ideal::new(jac.ring.clone(), minimal_generators(&jac));
    let colength = colength_or_zero(&jac)?;
    let isolated = matches!(colength, Colength::Finite { .. });
    // second route: Krull dimension of the singular locus
    let locus_dim = match jac.krull_dimension() {
        Ok(d) => Some(d),
        Err(Error::UnitIdeal) => None,
        Err(e) => return Err(e),
    };
    if isolated != locus_dim.is_none_or(|d| d == 0) {
        return Err(Error::Inconsistent("colength and dimension of the singular locus disagree".into()));
    }
    let jacobian_colength = colength.count();
    let algebroid_ideal = match opts.mode {
        Mode::Tangent => ideal.clone(),
        Mode::TjurinaAlgebroid => jac.clone(),
    };
    let dm = tangent_derivations_with(&algebroid_ideal, &opts.tangent)?;
    let logarithmic = dm.is_logarithmic_at_origin();
    if !logarithmic {
        return Err(Error::NotLogarithmic(format!(
            "T({}) contains fields not vanishing at the origin; the germ has a smooth factor. \
             Remove the trivial directions or use `toral` for monomial ideals",
            algebroid_ideal.fmt()
        )));
    }
    let fibre = fibre_lie_algebra(&dm)?;
    let fingerprint = fibre.algebra.fingerprint();
    let solvable = fingerprint.solvable;
    let free = dm.generators.len() == n;

    let mut checks = Vec::new();
    let regular_sequence = principal || crate::derivations::height(&ideal).ok() == Some(minimal_generators(&ideal).len());
    let ci = ResultCheck {
        name: "complete-intersection",
        hypotheses: "tangent algebroid; I in m^2 generated by a regular sequence; isolated; m^3 if principal".into(),
        applies: opts.mode == Mode::Tangent
            && regular_sequence
            && order_at_least(&ideal, 2)
            && isolated
            && (!principal || order_at_least(&ideal, 3)),
        holds: None,
    };
    checks.push(ci);
    checks.push(ResultCheck {
        name: "jacobian-algebroid",
        hypotheses: "algebroid of the Jacobian ideal; f in m^3 with an isolated singularity".into(),
        applies: opts.mode == Mode::TjurinaAlgebroid && principal && order_at_least(&ideal, 3) && isolated,
        holds: None,
    });
    checks.push(ResultCheck {
        name: "free-low-dimension",
        hypotheses: "tangent algebroid of a principal ideal; free module; n <= 3".into(),
        applies: opts.mode == Mode::Tangent && principal && free && n <= 3,
        holds: None,
    });
    for c in &mut checks {
        if c.applies {
            c.holds = Some(solvable);
        }
    }
    let contradicts_known_result = checks.iter().any(|c| c.holds == Some(false));

    let (graded, series_note) = graded_series(&jac, &dm, &fibre, isolated, solvable, opts.series_depth)?;

    Ok(SingularityReport {
        input,
        mode: opts.mode,
        weights: ideal.weights().to_vec(),
        quasi_homogeneous,
        algebroid_ideal: algebroid_ideal.fmt(),
        tangent_generators: dm.format_generators(),
        free,
        logarithmic,
        jacobian_ideal: jac.fmt(),
        jacobian_colength,
        tjurina_number: if principal { jacobian_colength } else { None },
        isolated,
        fibre,
        fingerprint,
        checks,
        contradicts_known_result,
        graded,
        series_note,
    })
}

fn graded_series(
    jac: &Ideal,
    dm: &DerivationModule,
    fibre: &Fibre,
    isolated: bool,
    solvable: bool,
    depth: usize,
) -> Result<(Option<GradedSeries>, Option<String>)> {
    let smooth = jac.groebner().contains_one();
    if isolated && solvable && !smooth {
        // gr_J(A) has dimension n for m-primary J, so (1 - t)^n clears the poles
        let denominator = Some(vec![DenomFactor::new(1, jac.nvars() as u32)]);
        let opts = GradedPiecesOptions { preserved_by: Some(dm.clone()), fibre_solvable: Some(true), denominator };
        let mut last = String::new();
        for k in [depth, depth + 5] {
            match graded_pieces_series(jac, &ModuleSpec::Ring, k, &opts) {
                Ok(report) => return Ok((Some(GradedSeries { filtration: jac.fmt(), path: "solvable".into(), report }), None)),
                Err(Error::NoStabilization(m)) => last = m,
                Err(e) => return Err(e),
            }
        }
        let note = format!("series did not stabilise through degree {} ({last}); raise the series depth", depth + 5);
        return Ok((None, Some(note)));
    }
    let n = dm.nvars();
    let vars: Vec<usize> = (0..n).collect();
    let mats = linear_action(&fibre.basis, &vars);
    if let Some(d) = sl2_irreducible_certificate(&mats) {
        if let Some(denom) = covariant_denominator(d) {
            let dims: Vec<u64> = (0..=depth).map(|k| covariant_dimension(k as u32, d as u32).try_into().unwrap_or(u64::MAX)).collect();
            if let Some((h, nplus)) = highest_weight_certificate(&mats) {
                for (k, &c) in dims.iter().enumerate() {
                    if symmetric_power_basis(n, k).len() > CROSS_CHECK_DIM {
                        break;
                    }
                    if highest_weight_count(&h, &nplus, k) as u64 != c {
                        return Err(Error::Inconsistent(format!("covariant count and highest weight count differ in degree {k}")));
                    }
                }
            }
            let report = GradedPieceReport::from_dims(dims, &denom, true, None)?;
            let m = Ideal::maximal(&jac.ring);
            return Ok((Some(GradedSeries { filtration: m.fmt(), path: format!("covariant (d = {d})"), report }), None));
        }
    }
    let note = if !isolated {
        "series out of scope (non-isolated)"
    } else if smooth {
        "series out of scope (smooth point)"
    } else {
        "series out of scope (fibre not solvable and no certified length path)"
    };
    Ok((None, Some(note.to_string())))
}

fn check_json(c: &ResultCheck) -> Value {
    json!({ "name": c.name, "hypotheses": c.hypotheses, "applies": c.applies, "solvable": c.holds })
}

pub fn fingerprint_json(fp: &Fingerprint) -> Value {
    serde_json::to_value(fp).expect("plain struct")
}

impl SingularityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input,
            "mode": self.mode.name(),
            "weights": self.weights,
            "quasi_homogeneous": self.quasi_homogeneous,
            "algebroid_ideal": self.algebroid_ideal,
            "tangent_generators": self.tangent_generators,
            "free": self.free,
            "logarithmic_at_origin": self.logarithmic,
            "jacobian_ideal": self.jacobian_ideal,
            "jacobian_colength": self.jacobian_colength,
            "tjurina_number": self.tjurina_number,
            "isolated": self.isolated,
            "fibre": {
                "basis": self.fibre.basis.iter().map(|d| d.format(&self.fibre.module.ring)).collect::<Vec<_>>(),
                "algebra": self.fibre.algebra.to_json(),
                "brackets": self.fibre.algebra.bracket_table(),
                "fingerprint": fingerprint_json(&self.fingerprint),
            },
            "checks": self.checks.iter().map(check_json).collect::<Vec<_>>(),
            "contradicts_known_result": self.contradicts_known_result,
            "graded": self.graded.as_ref().map(|g| json!({
                "filtration": g.filtration,
                "path": g.path,
                "report": g.report.to_json(),
            })),
            "series_note": self.series_note,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        out.push(format!("input: {}", self.input));
        out.push(format!("mode: {}", self.mode.name()));
        out.push(format!("weights: {:?} (quasi-homogeneous: {})", self.weights, self.quasi_homogeneous));
        out.push(format!("T{}: {} generators (free: {})", self.algebroid_ideal, self.tangent_generators.len(), self.free));
        for (k, g) in self.tangent_generators.iter().enumerate() {
            out.push(format!("  d{} = {g}", k + 1));
        }
        out.push(format!("Jacobian ideal: {}", self.jacobian_ideal));
        match self.jacobian_colength {
            Some(c) => out.push(format!("colength: {c} (isolated)")),
            None => out.push("colength: infinite (not isolated)".into()),
        }
        let fp = &self.fingerprint;
        out.push(format!(
            "fibre: dim {}, derived {:?}, lower central {:?}, Killing rank {}, radical {}, centre {}, solvable {}",
            fp.dim, fp.derived, fp.lower_central, fp.killing_rank, fp.radical_dim, fp.center_dim, fp.solvable
        ));
        for b in self.fibre.algebra.bracket_table() {
            out.push(format!("  {b}"));
        }
        for c in &self.checks {
            if c.applies {
                out.push(format!("check {}: solvable = {}", c.name, c.holds == Some(true)));
            }
        }
        if self.contradicts_known_result {
            out.push("CONTRADICTS-KNOWN-RESULT".into());
        }
        if let Some(g) = &self.graded {
            out.push(format!("series along {} ({}): {}", g.filtration, g.path, g.report.series.display()));
            out.push(format!("  dims: {:?}", g.report.dims));
            out.push(format!("  (d, e) = ({}, {})", g.report.dimension, fmt_rational(&g.report.multiplicity)));
            if let Some(c) = &g.report.caveat {
                out.push(format!("  note: {c}"));
            }
        }
        if let Some(n) = &self.series_note {
            out.push(n.clone());
        }
        out.join("\n")
    }
}

#[derive(Clone, Debug)]
pub struct ToralReport {
    pub input: String,
    pub monomials: Vec<String>,
    pub euler_fields: Vec<bool>,
    /// `d/dx_i` lies in the module, per variable.
    pub partial_in_module: Vec<bool>,
    /// `d/dx_i` preserves the ideal, checked directly.
    pub partial_preserves: Vec<bool>,
    pub maximal_defining: Vec<usize>,
    pub maximal_defining_ideal: String,
    pub v_dimension: usize,
    pub fibre: Fibre,
    pub fingerprint: Fingerprint,
    pub length_path: Option<LengthPath>,
    pub v_length: Option<u64>,
    pub series: Option<GradedPieceReport>,
    pub dimension_is_length: Option<bool>,
    pub multiplicity_is_one: Option<bool>,
    /// Scalar test on the connection matrices of the graded pieces of a principal ideal.
    pub connection_scalar: Option<bool>,
    pub note: Option<String>,
}

pub fn analyze_toral(problem: &Problem, depth: usize) -> Result<ToralReport> {
    let ideal = problem.ideal.clone();
    let ring = ideal.ring.clone();
    let n = ideal.nvars();
    let ms = monomialize(&ideal).ok_or(Error::NotMonomial)?;
    let dm = tangent_derivations_with(&ideal, &TangentOptions::default())?;
    let euler_fields: Vec<bool> = (0..n).map(|i| dm.contains(&Derivation::coordinate_euler(&ring, i))).collect();
    let partial_in_module: Vec<bool> = (0..n).map(|i| dm.contains(&Derivation::partial(n, i))).collect();
    let partial_preserves: Vec<bool> = (0..n).map(|i| preserves_ideal(&Derivation::partial(n, i), &ideal)).collect();
    if partial_in_module != partial_preserves {
        return Err(Error::Inconsistent("membership of d/dx_i in the module disagrees with direct preservation".into()));
    }
    let s: Vec<usize> = (0..n).filter(|&i| !partial_in_module[i]).collect();
    let jm = Ideal::new(ring.clone(), s.iter().map(|&i| ring.var(i)).collect());
    let fibre = fibre_lie_algebra_permissive(&dm)?;
    let fingerprint = fibre.algebra.fingerprint();
    let mats = linear_action(&fibre.basis, &s);
    let mut note = None;
    let (length_path, v_length, series, dimension_is_length, multiplicity_is_one) = if s.is_empty() {
        note = Some("no maximal defining directions".to_string());
        (None, None, None, None, None)
    } else {
        match symmetric_power_lengths(&mats, s.len(), depth) {
            Ok((lengths, path)) => {
                let lv = lengths[1];
                let rep = GradedPieceReport::from_dims(lengths, &[DenomFactor::new(1, lv as u32)], true, None)?;
                let d_ok = rep.dimension as u64 == lv;
                let e_ok = rep.multiplicity == Rational::one();
                (Some(path), Some(lv), Some(rep), Some(d_ok), Some(e_ok))
            }
            Err(e) if e.is_precondition() => {
                note = Some(e.to_string());
                (None, None, None, None, None)
            }
            Err(e) => return Err(e),
        }
    };
    let connection_scalar = if ms.len() == 1 {
        let f = Polynomial::monomial(n, ms[0], Rational::one());
        let deltas: Vec<Derivation> = (0..n).filter(|i| !s.contains(i)).map(|i| Derivation::partial(n, i)).collect();
        Some(connection_scalar_test(&f, &s, &deltas, depth.min(4))?)
    } else {
        None
    };
    Ok(ToralReport {
        input: ideal.fmt(),
        monomials: ms.iter().map(|m| ring.fmt_monomial(m)).collect(),
        euler_fields,
        partial_in_module,
        partial_preserves,
        v_dimension: s.len(),
        maximal_defining: s,
        maximal_defining_ideal: jm.fmt(),
        fibre,
        fingerprint,
        length_path,
        v_length,
        series,
        dimension_is_length,
        multiplicity_is_one,
        connection_scalar,
        note,
    })
}

/// For `I = (f)` and each `d` in `deltas`, writes `d(X^b f) = sum_c G_bc X^c f`
/// modulo `J^{k+1} f` on the generators `X^b f` of `J^k I / J^{k+1} I`
/// (`J` generated by the variables in `s`, `|b| = k`), and checks that the
/// matrix `G` at the origin is a scalar matrix, for `k <= max_k`.
pub fn connection_scalar_test(f: &Polynomial, s: &[usize], deltas: &[Derivation], max_k: usize) -> Result<bool> {
    let n = f.nvars();
    let (fm, fc) = f.terms().next().map(|(m, c)| (*m, c.clone())).ok_or_else(|| Error::Precondition("zero generator".into()))?;
    if f.len() != 1 {
        return Err(Error::NotMonomial);
    }
    for d in deltas {
        let df = d.apply(f);
        // lambda = d(f) / f, exact for a preserving field
        let mut lambda = Polynomial::zero(n);
        for (m, c) in df.terms() {
            if !fm.divides(m) {
                return Err(Error::Inconsistent("field does not preserve the principal ideal".into()));
            }
            lambda.add_term(fm.quotient_of(m), c / &fc);
        }
        for k in 0..=max_k {
            let basis = symmetric_power_basis(s.len(), k);
            let index = |mu: &Monomial| -> Option<usize> {
                let part: Vec<u16> = s.iter().map(|&i| mu.exp(i)).collect();
                basis.iter().position(|b| *b == part)
            };
            let mut g = Matrix::zeros(basis.len(), basis.len());
            for (bi, b) in basis.iter().enumerate() {
                let mut exps = [0u16; 8];
                for (t, &i) in s.iter().enumerate() {
                    exps[i] = b[t];
                }
                let xb = Polynomial::monomial(n, Monomial::from_exponents(&exps[..n]), Rational::one());
                let p = &d.apply(&xb) + &(&lambda * &xb);
                for (mu, c) in p.terms() {
                    let s_deg: u32 = s.iter().map(|&i| mu.exp(i) as u32).sum();
                    let rest_zero = (0..n).filter(|i| !s.contains(i)).all(|i| mu.exp(i) == 0);
                    if s_deg as usize == k && rest_zero {
                        let ci = index(mu).expect("degree-k monomial in the basis");
                        let cur = g.get(ci, bi).clone();
                        g.set(ci, bi, cur + c);
                    } else if (s_deg as usize) < k {
                        return Err(Error::Inconsistent("field does not preserve the J-adic filtration".into()));
                    }
                }
            }
            let scalar = if basis.is_empty() { Rational::zero() } else { g.get(0, 0).clone() };
            if g != Matrix::identity(basis.len()).scale(&scalar) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl ToralReport {
    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input,
            "monomials": self.monomials,
            "euler_fields_contained": self.euler_fields,
            "partial_in_module": self.partial_in_module,
            "partial_preserves_ideal": self.partial_preserves,
            "maximal_defining_ideal": self.maximal_defining_ideal,
            "v_dimension": self.v_dimension,
            "fibre": {
                "basis": self.fibre.basis.iter().map(|d| d.format(&self.fibre.module.ring)).collect::<Vec<_>>(),
                "algebra": self.fibre.algebra.to_json(),
                "fingerprint": fingerprint_json(&self.fingerprint),
            },
            "length_path": self.length_path,
            "v_length": self.v_length,
            "series": self.series.as_ref().map(|s| s.to_json()),
            "dimension_is_length": self.dimension_is_length,
            "multiplicity_is_one": self.multiplicity_is_one,
            "connection_scalar": self.connection_scalar,
            "note": self.note,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = Vec::new();
        out.push(format!("input: {}", self.input));
        out.push(format!("monomial generators: {}", self.monomials.join(", ")));
        out.push(format!("Euler fields contained: {:?}", self.euler_fields));
        out.push(format!("maximal defining ideal: {} (dim V = {})", self.maximal_defining_ideal, self.v_dimension));
        let fp = &self.fingerprint;
        out.push(format!(
            "fibre: dim {}, derived {:?}, radical {}, centre {}, solvable {}",
            fp.dim, fp.derived, fp.radical_dim, fp.center_dim, fp.solvable
        ));
        if let Some(s) = &self.series {
            out.push(format!("series: {}", s.series.display()));
            out.push(format!("(d, e) = ({}, {})", s.dimension, fmt_rational(&s.multiplicity)));
        }
        if let Some(c) = self.connection_scalar {
            out.push(format!("connection matrices scalar: {c}"));
        }
        if let Some(n) = &self.note {
            out.push(n.clone());
        }
        out.join("\n")
    }
}

#[derive(Clone, Debug)]
pub struct CovariantsReport {
    pub degree: usize,
    pub report: GradedPieceReport,
}

/// Largest form degree and depth accepted by [`covariants_report`].
pub const COVARIANT_LIMITS: (usize, usize) = (6, 40);

/// Series of covariant dimensions of binary forms of degree `d` through `depth`.
pub fn covariants_report(d: usize, depth: usize, denominator: Option<Vec<DenomFactor>>) -> Result<CovariantsReport> {
    if d > COVARIANT_LIMITS.0 || depth > COVARIANT_LIMITS.1 {
        return Err(Error::Precondition(format!("need d <= {} and depth <= {}", COVARIANT_LIMITS.0, COVARIANT_LIMITS.1)));
    }
    let denom = denominator
        .or_else(|| covariant_denominator(d))
        .ok_or_else(|| Error::Precondition(format!("no default denominator for d = {d}; pass one explicitly")))?;
    let dims: Vec<u64> = (0..=depth).map(|n| covariant_dimension(n as u32, d as u32).try_into().unwrap_or(u64::MAX)).collect();
    let report = GradedPieceReport::from_dims(dims, &denom, true, None)?;
    Ok(CovariantsReport { degree: d, report })
}

impl CovariantsReport {
    pub fn to_json(&self) -> Value {
        let mut v = self.report.to_json();
        v["degree"] = json!(self.degree);
        v
    }
}

/// Parses denominator text such as `1:2,4:1` into `(1 - t)^2 (1 - t^4)`.
pub fn parse_denominator(s: &str) -> Result<Vec<DenomFactor>> {
    s.split(',')
        .map(|part| {
            let (n, m) = part.trim().split_once(':').unwrap_or((part.trim(), "1"));
            let n: u32 = n.trim().parse().map_err(|_| Error::Parse(format!("bad factor `{part}`")))?;
            let m: u32 = m.trim().parse().map_err(|_| Error::Parse(format!("bad factor `{part}`")))?;
            if n == 0 || m == 0 {
                return Err(Error::Parse(format!("bad factor `{part}`")));
            }
            Ok(DenomFactor::new(n, m))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn problem(text: &str) -> Problem {
        parse_problem(text).unwrap()
    }

    #[test]
    fn parsing() {
        let p = problem("# umbrella\nvars: x, y, z\nweights: 1,2,2\nideal: z^2 - x^2*y\n");
        assert_eq!(p.ideal.weights(), &[1, 2, 2]);
        assert!(p.weights_given);
        assert_eq!(p.ideal.generators.len(), 1);
        let p = problem("vars: x,y\nideal: x^2; x*y\nideal: y^3");
        assert_eq!(p.ideal.generators.len(), 3);
        assert!(matches!(parse_problem("ideal: x"), Err(Error::Parse(_))));
        assert!(matches!(parse_problem("vars: x\nweights: 1,2\nideal: x"), Err(Error::Parse(_))));
        assert!(matches!(parse_problem("vars: x\nideal: x +"), Err(Error::Parse(_))));
        assert!(matches!(parse_problem("vars: x\nfoo: 1"), Err(Error::Parse(_))));
    }

    #[test]
    fn weights_are_found() {
        let p = problem("vars: x,y,z\nideal: z^2 - x^2*y");
        assert_eq!(p.graded_ideal().weights(), &[1, 2, 2]);
    }

    #[test]
    fn umbrella_report() {
        let p = problem("vars: x,y,z\nideal: z^2 - x^2*y");
        let r = analyze_singularity(&p, &AnalyzeOptions::default()).unwrap();
        assert!(!r.isolated);
        assert_eq!(r.fingerprint.dim, 4);
        assert_eq!(r.fingerprint.derived, vec![4, 2, 0]);
        assert!(r.fingerprint.solvable);
        assert!(!r.contradicts_known_result);
        assert!(r.graded.is_none());
        assert_eq!(r.series_note.as_deref(), Some("series out of scope (non-isolated)"));
    }

    #[test]
    fn cusp_report() {
        let p = problem("vars: x,y\nideal: x^3 - y^2");
        let r = analyze_singularity(&p, &AnalyzeOptions::default()).unwrap();
        assert!(r.isolated);
        assert_eq!(r.tjurina_number, Some(2));
        assert!(r.free);
        let g = r.graded.unwrap();
        assert_eq!(g.report.dims[..4], [2, 4, 6, 8]);
        assert_eq!((g.report.dimension, g.report.multiplicity), (2, int(2)));
        let fs = r.checks.iter().find(|c| c.name == "free-low-dimension").unwrap();
        assert_eq!(fs.holds, Some(true));
    }

    #[test]
    fn quadric_three_uses_covariant_path() {
        let p = problem("vars: x,y,z\nideal: x^2 + y^2 + z^2");
        let r = analyze_singularity(&p, &AnalyzeOptions::default()).unwrap();
        assert!(r.isolated);
        assert_eq!(r.fingerprint.dim, 4);
        assert!(!r.fingerprint.solvable);
        let g = r.graded.unwrap();
        assert_eq!(g.path, "covariant (d = 2)");
        assert_eq!(g.report.series.display(), "1/((1 - t)*(1 - t^2))");
    }

    #[test]
    fn smooth_factor_is_rejected() {
        let p = problem("vars: x,y,z\nideal: x^2 + y^2");
        assert!(matches!(analyze_singularity(&p, &AnalyzeOptions::default()), Err(Error::NotLogarithmic(_))));
    }

    #[test]
    fn toral_examples() {
        let r = analyze_toral(&problem("vars: x,y,z\nideal: x^2*y*z^3"), 6).unwrap();
        assert_eq!(r.v_dimension, 3);
        assert_eq!(r.fingerprint.dim, 3);
        assert_eq!(r.fingerprint.derived, vec![3, 0]);
        assert_eq!(r.length_path, Some(LengthPath::Solvable));
        assert_eq!(r.dimension_is_length, Some(true));
        assert_eq!(r.multiplicity_is_one, Some(true));
        assert_eq!(r.connection_scalar, Some(true));

        let r = analyze_toral(&problem("vars: x1,x2,x3,x4\nideal: x1; x2"), 6).unwrap();
        assert_eq!(r.maximal_defining, vec![0, 1]);
        assert_eq!((r.fingerprint.dim, r.fingerprint.radical_dim), (6, 3));
        assert_eq!(r.fingerprint.derived, vec![6, 3, 3]);
        assert_eq!(r.v_length, Some(1));
        assert_eq!(r.multiplicity_is_one, Some(true));

        let r = analyze_toral(&problem("vars: x,y,z\nideal: x; y; z"), 5).unwrap();
        assert_eq!(r.fingerprint, crate::liealg::LieAlgebra::gl(3).fingerprint());
        assert_eq!(r.series.unwrap().dims, vec![1; 6]);

        let r = analyze_toral(&problem("vars: x,y,z,w\nideal: x^2*y"), 4).unwrap();
        assert_eq!(r.maximal_defining, vec![0, 1]);
        assert_eq!(r.connection_scalar, Some(true));

        assert!(matches!(analyze_toral(&problem("vars: x,y\nideal: x^2 + y^2"), 4), Err(Error::NotMonomial)));
    }

    #[test]
    fn covariant_reports() {
        let r = covariants_report(2, 12, None).unwrap();
        assert_eq!(r.report.series.display(), "1/((1 - t)*(1 - t^2))");
        let r = covariants_report(3, 20, None).unwrap();
        assert_eq!(r.report.series.display(), "(1 - t + t^2)/((1 - t)^2*(1 - t^4))");
        assert_eq!(r.report.multiplicity, crate::arith::rat(1, 4));
        let r = covariants_report(1, 8, None).unwrap();
        assert_eq!(r.report.dims, vec![1; 9]);
        assert!(covariants_report(5, 10, None).is_err());
        assert_eq!(parse_denominator("1:2,4").unwrap(), vec![DenomFactor::new(1, 2), DenomFactor::new(4, 1)]);
    }

    #[test]
    fn report_json_is_deterministic() {
        let p = problem("vars: x,y,z\nideal: x^3 + y^3 + z^3");
        let a = serde_json::to_string(&analyze_singularity(&p, &AnalyzeOptions::default()).unwrap().to_json()).unwrap();
        let b = serde_json::to_string(&analyze_singularity(&p, &AnalyzeOptions::default()).unwrap().to_json()).unwrap();
        assert_eq!(a, b);
    }
}
