//! Sparse multivariate polynomials over Q with weighted gradings, and the
//! textual polynomial grammar shared with the command line.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_rational, int, Rational};
use crate::error::{Error, Result};

/// Hard cap on the number of ring variables.
pub const MAX_VARS: usize = 8;

/// Exponent vector. Unused trailing slots are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(e: &[u16]) -> Self {
        let mut m = Self::one();
        m.0[..e.len()].copy_from_slice(e);
        m
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        weights
            .iter()
            .zip(self.0.iter())
            .map(|(&w, &e)| w as i64 * e as i64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        r
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut r = *other;
        for (a, b) in r.0.iter_mut().zip(self.0.iter()) {
            *a -= *b;
        }
        r
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        r
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0)
    }
}

/// Variable names and positive integer weights of a polynomial ring `Q[x_1..x_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    pub vars: Vec<String>,
    pub weights: Vec<u32>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Ring> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
        Ring::with_weights(vars.clone(), vec![1; vars.len()])
    }

    pub fn with_weights(vars: Vec<String>, weights: Vec<u32>) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::Parse("empty variable list".into()));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::Parse(format!("at most {MAX_VARS} variables are supported")));
        }
        if weights.len() != vars.len() {
            return Err(Error::Parse("weights and variables differ in length".into()));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::Parse("weights must be positive".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::Parse(format!("invalid variable name '{v}'")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Parse(format!("duplicate variable '{v}'")));
            }
        }
        Ok(Ring { vars, weights })
    }

    /// Ring with variables `x1..xn` and unit weights.
    pub fn standard(n: usize) -> Ring {
        let vars: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Ring::new(&vars).expect("standard ring")
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn reweighted(&self, weights: Vec<u32>) -> Result<Ring> {
        Ring::with_weights(self.vars.clone(), weights)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self.nvars(), Monomial::var(i), Rational::one())
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        Parser::new(self, s).parse_all()
    }

    pub fn fmt_poly(&self, p: &Polynomial) -> String {
        p.format(self)
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars() {
            match m.exp(i) {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                e => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Polynomial with rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = Ring::standard(self.nvars.max(1));
        write!(f, "{}", self.format(&ring))
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, Monomial::one(), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                let mut m2 = *m;
                m2.0[i] -= 1;
                out.add_term(m2, c * int(e as i64));
            }
        }
        out
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> Option<i64> {
        self.terms.keys().map(|m| m.weighted_degree(weights)).max()
    }

    pub fn min_weighted_degree(&self, weights: &[u32]) -> Option<i64> {
        self.terms.keys().map(|m| m.weighted_degree(weights)).min()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Lowest total degree of a term (order of vanishing at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(weights));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, weights: &[u32], degree: i64) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree(weights) == degree)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Evaluates at the origin.
    pub fn eval_origin(&self) -> Rational {
        self.constant_term()
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate().take(self.nvars) {
                for _ in 0..m.exp(i) {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        let n = images.first().map(|p| p.nvars).unwrap_or(self.nvars);
        let mut out = Polynomial::zero(n);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(n, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = &t * &img.pow(e as u32);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Embeds into a ring with more variables (new ones appended).
    pub fn with_nvars(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars || self.terms.keys().all(|m| m.0[nvars..].iter().all(|&e| e == 0)));
        Polynomial { nvars, terms: self.terms.clone() }
    }

    /// Leading coefficient with respect to the stored (lexicographic) key order.
    pub fn make_monic_lex(&self) -> Polynomial {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn format(&self, ring: &Ring) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        let w = &ring.weights;
        terms.sort_by(|a, b| {
            b.0.weighted_degree(w)
                .cmp(&a.0.weighted_degree(w))
                .then_with(|| b.0.cmp(a.0))
        });
        let mut s = String::new();
        for (k, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&fmt_rational(&a));
            } else if a.is_one() {
                s.push_str(&ring.fmt_monomial(m));
            } else {
                s.push_str(&fmt_rational(&a));
                s.push('*');
                s.push_str(&ring.fmt_monomial(m));
            }
        }
        s
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars.max(rhs.nvars));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Ring, src: &'a str) -> Self {
        Parser { ring, src, toks: Vec::new(), pos: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse(format!("{} in '{}'", msg.into(), self.src.trim()))
    }

    fn lex(&mut self) -> Result<()> {
        let chars: Vec<char> = self.src.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                self.toks.push(Tok::Num(s.parse().expect("digits")));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                self.toks.push(Tok::Ident(chars[start..i].iter().collect()));
            } else if "+-*/^()".contains(c) {
                self.toks.push(Tok::Op(c));
                i += 1;
            } else {
                return Err(self.err(format!("unexpected character '{c}'")));
            }
        }
        Ok(())
    }

    fn parse_all(mut self) -> Result<Polynomial> {
        self.lex()?;
        if self.toks.is_empty() {
            return Err(self.err("empty expression"));
        }
        let p = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(self.err(format!("unexpected token {:?}", self.toks[self.pos])));
        }
        Ok(p)
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            if c == '*' {
                acc = &acc * &rhs;
            } else {
                let is_const = rhs.terms.keys().all(|m| m.is_one());
                if rhs.is_zero() || !is_const {
                    return Err(self.err("division only by nonzero constants"));
                }
                acc = acc.scale(&rhs.constant_term().recip());
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    if e > 1000 {
                        return Err(self.err("exponent too large"));
                    }
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.ring.nvars();
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Polynomial::constant(n, Rational::from_integer(v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(self.err(format!("undeclared variable '{name}'"))),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err("missing ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
