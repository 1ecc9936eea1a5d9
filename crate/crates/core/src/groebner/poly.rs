use std::cmp::Ordering;
use std::fmt;

use crate::field::Field;

use super::GroebnerError;

/// Exponent vector with cached total degree. `Ord` is degrevlex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars], deg: 0 }
    }

    pub fn new(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Self { exps, deg }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self { exps, deg: 1 }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(), deg: self.deg + other.deg }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Self { exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(), deg: other.deg - self.deg }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Single variable this monomial is a power of, if any.
    pub fn single_var(&self) -> Option<usize> {
        let mut it = self.exps.iter().enumerate().filter(|(_, e)| **e > 0);
        let (i, _) = it.next()?;
        if it.next().is_some() {
            None
        } else {
            Some(i)
        }
    }

    pub fn format(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    // smaller exponent in the last differing variable wins
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// Polynomial with terms in strictly descending degrevlex order and no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: Vec::new() }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        Self::from_terms(field, nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn var(field: &F, nvars: usize, i: usize) -> Self {
        Self { nvars, terms: vec![(Monomial::var(nvars, i), field.one())] }
    }

    /// Sorts, merges equal monomials and drops zeros.
    pub fn from_terms(field: &F, nvars: usize, mut terms: Vec<(Monomial, F::Elem)>) -> Self {
        assert!(terms.iter().all(|(m, _)| m.exps.len() == nvars), "monomial arity differs from nvars");
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Self { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &F::Elem {
        &self.terms[0].1
    }

    pub(crate) fn drop_leading(&mut self) {
        self.terms.remove(0);
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.deg).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.terms.iter().any(|(m, _)| m.exps[i] > 0)).collect()
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        self.sub_scaled(field, &field.neg(&field.one()), &Monomial::one(self.nvars), other)
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        if field.is_zero(c) {
            return Self::zero(self.nvars);
        }
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(m, x)| (m.clone(), field.mul(x, c))).collect() }
    }

    pub fn mul(&self, field: &F, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                terms.push((m.mul(n), field.mul(a, b)));
            }
        }
        Self::from_terms(field, self.nvars, terms)
    }

    /// `self − c·m·g`, merging the two sorted term lists.
    pub fn sub_scaled(&self, field: &F, c: &F::Elem, m: &Monomial, g: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (m.mul(gm), field.neg(&field.mul(c, gc)))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => x.0.cmp(&y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                Ordering::Less => out.push(b.next().expect("peeked")),
                Ordering::Equal => {
                    let (mx, cx) = a.next().expect("peeked");
                    let (_, cy) = b.next().expect("peeked");
                    let s = field.add(cx, &cy);
                    if !field.is_zero(&s) {
                        out.push((mx.clone(), s));
                    }
                }
            }
        }
        Self { nvars: self.nvars, terms: out }
    }

    /// Rescale to the field's canonical representative (primitive integer
    /// polynomial with positive lead over ℚ, monic otherwise). Returns the
    /// factor applied.
    pub fn normalize(&mut self, field: &F) -> F::Elem {
        let mut cs: Vec<F::Elem> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        let s = field.normalize_coefficients(&mut cs);
        for ((_, c), n) in self.terms.iter_mut().zip(cs) {
            *c = n;
        }
        s
    }

    pub fn eval(&self, field: &F, point: &[F::Elem]) -> F::Elem {
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.exps) {
                for _ in 0..e {
                    t = field.mul(&t, x);
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Substitute `x_var = value`; the variable stays in the ring with
    /// exponent 0 everywhere.
    pub fn substitute(&self, field: &F, var: usize, value: &F::Elem) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.clone();
                for _ in 0..m.exps[var] {
                    t = field.mul(&t, value);
                }
                let mut exps = m.exps.clone();
                exps[var] = 0;
                (Monomial::new(exps), t)
            })
            .collect();
        Self::from_terms(field, self.nvars, terms)
    }

    /// Image under a coefficient map; `None` if some coefficient has none.
    pub fn map_field<G: Field>(&self, target: &G, f: impl Fn(&F::Elem) -> Option<G::Elem>) -> Option<Polynomial<G>> {
        let terms: Option<Vec<_>> = self.terms.iter().map(|(m, c)| Some((m.clone(), f(c)?))).collect();
        Some(Polynomial::from_terms(target, self.nvars, terms?))
    }

    pub fn format(&self, field: &F, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mut cs = field.format(c);
            let negative = cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if idx == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            if cs.contains(['+', 'w']) && !m.is_one() {
                cs = format!("({cs})");
            }
            match (m.is_one(), cs == "1") {
                (true, _) => s.push_str(&cs),
                (false, true) => s.push_str(&m.format(names)),
                (false, false) => s.push_str(&format!("{cs}*{}", m.format(names))),
            }
        }
        s
    }
}

pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

/// Parse a polynomial written as a sum of terms `c*x^a*y^b`, e.g.
/// `x^2 - 3/2*x*y + 1`. Coefficients are parsed by the field. Parentheses
/// are not supported.
pub fn parse_polynomial<F: Field>(field: &F, names: &[String], text: &str) -> Result<Polynomial<F>, GroebnerError> {
    let err = |msg: String| GroebnerError::Parse { text: text.to_string(), message: msg };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty polynomial".into()));
    }
    // split into signed terms at top-level + and - (not after ^ or at start)
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.is_empty() && !cur.ends_with('^') && !cur.ends_with('*') {
            pieces.push((negative, std::mem::take(&mut cur)));
            negative = ch == '-';
        } else if (ch == '+' || ch == '-') && cur.is_empty() {
            if ch == '-' {
                negative = !negative;
            }
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(err("dangling sign".into()));
    }
    pieces.push((negative, cur));

    let nvars = names.len();
    let mut terms = Vec::new();
    for (neg, piece) in pieces {
        let mut coeff = field.one();
        let mut exps = vec![0u16; nvars];
        for factor in piece.split('*') {
            if factor.is_empty() {
                return Err(err(format!("empty factor in {piece:?}")));
            }
            let (base, power) = match factor.split_once('^') {
                Some((b, e)) => (b, e.parse::<u16>().map_err(|_| err(format!("bad exponent in {factor:?}")))?),
                None => (factor, 1),
            };
            if let Some(v) = names.iter().position(|n| n == base) {
                exps[v] += power;
            } else if base.starts_with(|c: char| c.is_ascii_digit()) {
                let c = field.parse(base).map_err(|e| err(e.to_string()))?;
                for _ in 0..power {
                    coeff = field.mul(&coeff, &c);
                }
            } else {
                return Err(err(format!("unknown variable {base:?}")));
            }
        }
        if neg {
            coeff = field.neg(&coeff);
        }
        terms.push((Monomial::new(exps), coeff));
    }
    Ok(Polynomial::from_terms(field, nvars, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, RationalField};

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    #[test]
    fn degrevlex_order() {
        let m = |e: [u16; 3]| Monomial::new(e.to_vec());
        // x^2 > xy > y^2 > xz > yz > z^2 > x > y > z > 1
        let chain = [
            m([2, 0, 0]),
            m([1, 1, 0]),
            m([0, 2, 0]),
            m([1, 0, 1]),
            m([0, 1, 1]),
            m([0, 0, 2]),
            m([1, 0, 0]),
            m([0, 1, 0]),
            m([0, 0, 1]),
            m([0, 0, 0]),
        ];
        for w in chain.windows(2) {
            assert!(w[0] > w[1], "{:?} > {:?}", w[0], w[1]);
        }
        // lex would put x*z^2 first
        assert!(m([0, 3, 0]) > m([1, 1, 1]));
        assert!(m([1, 0, 2]) < m([0, 3, 0]));
    }

    #[test]
    fn parse_and_format() {
        let f = RationalField;
        let p = parse_polynomial(&f, &names(), "x^2 - 3/2*x*y + 1").unwrap();
        assert_eq!(p.terms().len(), 3);
        assert_eq!(p.format(&f, &names()), "x^2 - 3/2*x*y + 1");
        let q = parse_polynomial(&f, &names(), "-y + 2*y - x*x").unwrap();
        assert_eq!(q.format(&f, &names()), "-x^2 + y");
        assert!(parse_polynomial(&f, &names(), "x + w").is_err());
        assert!(parse_polynomial(&f, &names(), "x +").is_err());
        assert!(parse_polynomial(&f, &names(), "2^2*x").unwrap().lc() == &Rational::integer(4));
    }

    #[test]
    fn arithmetic() {
        let f = RationalField;
        let n = names();
        let p = parse_polynomial(&f, &n, "x + y").unwrap();
        let q = parse_polynomial(&f, &n, "x - y").unwrap();
        assert_eq!(p.mul(&f, &q).format(&f, &n), "x^2 - y^2");
        assert!(p.sub_scaled(&f, &Rational::one(), &Monomial::one(3), &p).is_zero());
        assert_eq!(p.substitute(&f, 0, &Rational::integer(2)).format(&f, &n), "y + 2");
        assert_eq!(p.eval(&f, &[Rational::integer(1), Rational::integer(2), Rational::zero()]), Rational::integer(3));
        let mut h = parse_polynomial(&f, &n, "-1/2*x + 3/4").unwrap();
        assert_eq!(h.normalize(&f), Rational::integer(-4));
        assert_eq!(h.format(&f, &n), "2*x - 3");
    }
}
