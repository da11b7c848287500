//! Truncated power series, rational series over `prod (1 - t^n)^d`, and
//! quasi-polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::arith::{factorial, fmt_rational, lcm_u64, parse_rational, Rational};
use crate::error::{Error, Result};

/// Coefficients `0..=N` of a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub coeffs: Vec<Rational>,
}

impl SeriesPrefix {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        SeriesPrefix { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(it: I) -> Self {
        SeriesPrefix { coeffs: it.into_iter().map(|c| Rational::from_integer(c.into())).collect() }
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn truncate(&self, n: usize) -> SeriesPrefix {
        SeriesPrefix { coeffs: self.coeffs.iter().take(n + 1).cloned().collect() }
    }

    /// Integer coefficients, if all are integral.
    pub fn integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.numer().clone())).collect()
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.to_integer().to_i64().unwrap_or(i64::MAX)).collect()
    }
}

/// Factor `(1 - t^n)^mult` of a denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DenomFactor {
    pub n: u32,
    pub mult: u32,
}

impl DenomFactor {
    pub fn new(n: u32, mult: u32) -> Self {
        DenomFactor { n, mult }
    }
}

/// `numerator(t) / prod (1 - t^{n_i})^{d_i}`.
#[derive(Clone, Debug)]
pub struct RationalSeries {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<DenomFactor>,
}

impl PartialEq for RationalSeries {
    /// Equality of expansions, checked up to a sufficient bound.
    fn eq(&self, other: &Self) -> bool {
        let n = self.comparison_bound().max(other.comparison_bound());
        expand_series(self, n) == expand_series(other, n)
    }
}

impl RationalSeries {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<DenomFactor>) -> Result<Self> {
        if denominator.iter().any(|f| f.n == 0) {
            return Err(Error::Parse("denominator factor with n = 0".into()));
        }
        let mut rs = RationalSeries {
            numerator,
            denominator: denominator.into_iter().filter(|f| f.mult > 0).collect(),
        };
        rs.trim();
        Ok(rs)
    }

    pub fn from_i64(numerator: &[i64], denominator: &[(u32, u32)]) -> Self {
        RationalSeries::new(
            numerator.iter().map(|&c| BigInt::from(c)).collect(),
            denominator.iter().map(|&(n, m)| DenomFactor::new(n, m)).collect(),
        )
        .expect("valid factors")
    }

    fn trim(&mut self) {
        while self.numerator.last().is_some_and(|c| c.is_zero()) {
            self.numerator.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.iter().all(|c| c.is_zero())
    }

    pub fn numerator_degree(&self) -> Option<usize> {
        self.numerator.iter().rposition(|c| !c.is_zero())
    }

    pub fn denominator_degree(&self) -> u64 {
        self.denominator.iter().map(|f| f.n as u64 * f.mult as u64).sum()
    }

    /// Total pole order at `t = 1`.
    pub fn pole_order(&self) -> u32 {
        self.denominator.iter().map(|f| f.mult).sum()
    }

    pub fn comparison_bound(&self) -> usize {
        self.numerator.len() + self.denominator_degree() as usize + 1
    }

    /// Multiplies by an extra `1/(1-t^n)^mult`.
    pub fn with_factor(&self, n: u32, mult: u32) -> RationalSeries {
        let mut d = self.denominator.clone();
        d.push(DenomFactor::new(n, mult));
        RationalSeries { numerator: self.numerator.clone(), denominator: d }
    }

    /// Cancels denominator factors `1 - t^n` that divide the numerator.
    pub fn reduced(&self) -> RationalSeries {
        let mut num = self.numerator.clone();
        let mut den = self.normalized_denominator();
        for f in den.iter_mut() {
            while f.mult > 0 {
                match divide_one_minus_power(&num, f.n as usize) {
                    Some(q) => {
                        num = q;
                        f.mult -= 1;
                    }
                    None => break,
                }
            }
        }
        RationalSeries::new(num, den).expect("factors already valid")
    }

    /// Merges repeated factors with equal `n` and sorts them.
    pub fn normalized_denominator(&self) -> Vec<DenomFactor> {
        let mut out: Vec<DenomFactor> = Vec::new();
        let mut d = self.denominator.clone();
        d.sort();
        for f in d {
            match out.last_mut() {
                Some(l) if l.n == f.n => l.mult += f.mult,
                _ => out.push(f),
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "numerator": self.numerator.iter().map(bigint_json).collect::<Vec<_>>(),
            "denominator": self.normalized_denominator().iter().map(|f| json!({"n": f.n, "mult": f.mult})).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("series json: {m}"));
        let num = v.get("numerator").and_then(|x| x.as_array()).ok_or_else(|| bad("missing numerator array"))?;
        let numerator = num.iter().map(json_bigint).collect::<Result<Vec<_>>>()?;
        let den = match v.get("denominator") {
            None => vec![],
            Some(d) => d.as_array().ok_or_else(|| bad("denominator must be an array"))?.clone(),
        };
        let mut denominator = Vec::new();
        for f in &den {
            let n = f.get("n").and_then(|x| x.as_u64()).ok_or_else(|| bad("factor needs integer n"))?;
            let mult = f.get("mult").and_then(|x| x.as_u64()).unwrap_or(1);
            if n == 0 {
                return Err(bad("factor with n = 0 is not of the form (1 - t^n)"));
            }
            denominator.push(DenomFactor::new(n as u32, mult as u32));
        }
        RationalSeries::new(numerator, denominator)
    }

    /// Human-readable form such as `(1 - t + t^2)/((1 - t)^2*(1 - t^4))`.
    pub fn display(&self) -> String {
        let num = fmt_int_poly(&self.numerator);
        let factors: Vec<String> = self
            .normalized_denominator()
            .iter()
            .map(|f| {
                let base = if f.n == 1 { "(1 - t)".to_string() } else { format!("(1 - t^{})", f.n) };
                if f.mult == 1 {
                    base
                } else {
                    format!("{base}^{}", f.mult)
                }
            })
            .collect();
        let num_s = if !factors.is_empty() && self.numerator.iter().filter(|c| !c.is_zero()).count() > 1 { format!("({num})") } else { num };
        match factors.len() {
            0 => num_s,
            1 => format!("{num_s}/{}", factors[0]),
            _ => format!("{num_s}/({})", factors.join("*")),
        }
    }
}

fn bigint_json(z: &BigInt) -> Value {
    match z.to_i64() {
        Some(v) => json!(v),
        None => json!(z.to_string()),
    }
}

fn json_bigint(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    if let Some(s) = v.as_str() {
        return s.parse().map_err(|_| Error::Parse(format!("invalid integer '{s}'")));
    }
    Err(Error::Parse(format!("expected integer, got {v}")))
}

/// Exact quotient of `p` by `1 - t^n`, if there is one.
fn divide_one_minus_power(p: &[BigInt], n: usize) -> Option<Vec<BigInt>> {
    if p.iter().all(|c| c.is_zero()) {
        return None;
    }
    // q_i = p_i + q_{i-n}; the division is exact when the tail of q vanishes
    let mut q: Vec<BigInt> = Vec::with_capacity(p.len());
    for i in 0..p.len() {
        let prev = if i >= n { q[i - n].clone() } else { BigInt::zero() };
        q.push(&p[i] + prev);
    }
    let keep = p.len().checked_sub(n)?;
    if q[keep..].iter().any(|c| !c.is_zero()) {
        return None;
    }
    q.truncate(keep);
    Some(q)
}

pub fn fmt_int_poly(c: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, a) in c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        let abs = a.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mon = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        if mon.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mon);
        } else {
            out.push_str(&format!("{abs}*{mon}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Coefficients `0..=n` of the expansion of `rs`.
pub fn expand_series(rs: &RationalSeries, n: usize) -> SeriesPrefix {
    let mut c: Vec<BigInt> = (0..=n).map(|k| rs.numerator.get(k).cloned().unwrap_or_default()).collect();
    for f in &rs.denominator {
        let step = f.n as usize;
        for _ in 0..f.mult {
            // divide by (1 - t^step): running sums with stride step
            for k in step..=n {
                let prev = c[k - step].clone();
                c[k] += prev;
            }
        }
    }
    SeriesPrefix { coeffs: c.into_iter().map(Rational::from_integer).collect() }
}

/// Numerator `prefix * prod (1 - t^{n_i})^{d_i}`, requiring the product to
/// vanish in degrees `(N - deg D, N]`.
pub fn reconstruct_rational(prefix: &SeriesPrefix, denom: &[DenomFactor]) -> Result<RationalSeries> {
    let n = prefix.bound();
    let ints = prefix
        .integers()
        .ok_or_else(|| Error::NoStabilization("prefix has non-integral coefficients".into()))?;
    let dd: usize = denom.iter().map(|f| f.n as usize * f.mult as usize).sum();
    if prefix.coeffs.is_empty() || dd > n {
        return Err(Error::NoStabilization(format!(
            "prefix of length {} too short for denominator degree {dd}",
            prefix.coeffs.len()
        )));
    }
    let mut c = ints;
    for f in denom {
        let step = f.n as usize;
        for _ in 0..f.mult {
            for k in (step..=n).rev() {
                let prev = c[k - step].clone();
                c[k] -= prev;
            }
        }
    }
    let keep = n - dd;
    if let Some(k) = (keep + 1..=n).find(|&k| !c[k].is_zero()) {
        return Err(Error::NoStabilization(format!("product with the denominator is nonzero in degree {k}")));
    }
    c.truncate(keep + 1);
    RationalSeries::new(c, denom.to_vec())
}

/// Quasi-polynomial: for `n >= n0`, value is `residues[n mod period](n)`.
/// Residue polynomials are stored with ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub period: u64,
    pub n0: u64,
    pub residues: Vec<Vec<Rational>>,
}

impl QuasiPolynomial {
    pub fn zero() -> Self {
        QuasiPolynomial { period: 1, n0: 0, residues: vec![vec![]] }
    }

    pub fn eval(&self, n: u64) -> Rational {
        let poly = &self.residues[(n % self.period) as usize];
        let x = Rational::from_integer(n.into());
        poly.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
    }

    /// Maximum residue degree; `None` for the zero quasi-polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.residues.iter().filter_map(|p| p.iter().rposition(|c| !c.is_zero())).max()
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Leading coefficient, required to agree across all residue classes.
    pub fn leading_coefficient(&self) -> Result<Rational> {
        let Some(d) = self.degree() else {
            return Ok(Rational::zero());
        };
        let lead: Vec<Rational> = self.residues.iter().map(|p| p.get(d).cloned().unwrap_or_default()).collect();
        if lead.iter().all(|c| *c == lead[0]) {
            Ok(lead[0].clone())
        } else {
            Err(Error::IllDefinedLeadingTerm(format!(
                "degree-{d} coefficients differ across residues: {}",
                lead.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
            )))
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "period": self.period,
            "n0": self.n0,
            "residues": self.residues.iter().map(|p| p.iter().map(fmt_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("quasi-polynomial json: {m}"));
        let period = v.get("period").and_then(|x| x.as_u64()).ok_or_else(|| bad("missing period"))?;
        let n0 = v.get("n0").and_then(|x| x.as_u64()).unwrap_or(0);
        let res = v.get("residues").and_then(|x| x.as_array()).ok_or_else(|| bad("missing residues"))?;
        let residues = res
            .iter()
            .map(|p| {
                p.as_array()
                    .ok_or_else(|| bad("residue must be an array"))?
                    .iter()
                    .map(|c| match c {
                        Value::String(s) => parse_rational(s),
                        Value::Number(n) => parse_rational(&n.to_string()),
                        _ => Err(bad("coefficient must be a rational string")),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if period == 0 || residues.len() as u64 != period {
            return Err(bad("need one residue polynomial per class"));
        }
        Ok(QuasiPolynomial { period, n0, residues })
    }

    /// Human-readable residue table.
    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        for (r, p) in self.residues.iter().enumerate() {
            parts.push(format!("n = {r} mod {}: {}", self.period, fmt_rational_poly(p, "n")));
        }
        format!("{} (n >= {})", parts.join("; "), self.n0)
    }
}

pub fn fmt_rational_poly(c: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (k, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let neg = a.is_negative();
        let abs = a.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mon = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mon.is_empty() {
            out.push_str(&fmt_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mon);
        } else {
            out.push_str(&format!("{}*{mon}", fmt_rational(&abs)));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Coefficient quasi-polynomial of a series and of its cumulative sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomials {
    pub coefficient: QuasiPolynomial,
    pub cumulative: QuasiPolynomial,
}

pub fn quasi_polynomial_of(rs: &RationalSeries) -> QuasiPolynomials {
    QuasiPolynomials { coefficient: coefficient_quasi_polynomial(rs), cumulative: coefficient_quasi_polynomial(&rs.with_factor(1, 1)) }
}

fn coefficient_quasi_polynomial(rs: &RationalSeries) -> QuasiPolynomial {
    if rs.is_zero() {
        return QuasiPolynomial::zero();
    }
    let period = rs.denominator.iter().fold(1u64, |acc, f| lcm_u64(acc, f.n as u64));
    let num_deg = rs.numerator_degree().unwrap_or(0) as i64;
    let n0 = (num_deg - rs.denominator_degree() as i64 + 1).max(0) as u64;
    // Each residue polynomial has degree < pole order.
    let k = rs.pole_order().max(1) as u64;
    let last = n0 + period * (k + 1) + period;
    let coeffs = expand_series(rs, last as usize).coeffs;
    let mut residues = Vec::with_capacity(period as usize);
    for r in 0..period {
        let first = n0 + (r + period - n0 % period) % period;
        let xs: Vec<u64> = (0..k).map(|i| first + i * period).collect();
        let ys: Vec<Rational> = xs.iter().map(|&x| coeffs[x as usize].clone()).collect();
        let mut p = interpolate(&xs, &ys);
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        residues.push(p);
    }
    let qp = QuasiPolynomial { period, n0, residues };
    debug_assert!((n0..=last).all(|n| qp.eval(n) == coeffs[n as usize]));
    qp
}

/// Ascending coefficients of the interpolating polynomial (Newton form expanded).
fn interpolate(xs: &[u64], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let x: Vec<Rational> = xs.iter().map(|&v| Rational::from_integer(v.into())).collect();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&x[i] - &x[i - j]);
        }
    }
    let mut poly = vec![Rational::zero(); n];
    // Horner over Newton basis from the top
    for i in (0..n).rev() {
        // poly = poly * (t - x_i) + dd[i]
        let mut next = vec![Rational::zero(); n];
        for k in 0..n {
            if poly[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &poly[k];
            }
            next[k] -= &poly[k] * &x[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly
}

/// Dimension `d` and multiplicity `e` from the cumulative quasi-polynomial:
/// `d` is its degree and `e = d! * (leading coefficient)`.
pub fn dimension_multiplicity(rs: &RationalSeries) -> Result<(u32, Rational)> {
    let cumulative = quasi_polynomial_of(rs).cumulative;
    let Some(d) = cumulative.degree() else {
        return Ok((0, Rational::zero()));
    };
    let lead = cumulative.leading_coefficient()?;
    Ok((d as u32, lead * Rational::from_integer(factorial(d as u64))))
}
