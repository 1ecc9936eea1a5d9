//! Bracketed words in a free nonassociative algebra and their rewriting into
//! sums of left-normed words `[a_1,[a_2,[…[a_{m−1},a_m]…]]]` using
//! `[[a,t],s] = [a,[t,s]] + [a,[s,t]]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::field::{Field, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("generator {0:?} is not bound")]
    Unbound(String),
    #[error("bracketings are enumerated for 1 <= m <= 7, got {0}")]
    OutOfRange(usize),
    #[error("coefficient {0} has no image in the target field")]
    Coefficient(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Expression {
    Generator(String),
    Bracket(Box<Expression>, Box<Expression>),
}

impl Expression {
    pub fn gen(name: &str) -> Self {
        Expression::Generator(name.to_string())
    }

    pub fn bracket(l: Expression, r: Expression) -> Self {
        Expression::Bracket(Box::new(l), Box::new(r))
    }

    /// Generators from left to right.
    pub fn generators(&self) -> Vec<&str> {
        match self {
            Expression::Generator(g) => vec![g.as_str()],
            Expression::Bracket(l, r) => {
                let mut v = l.generators();
                v.extend(r.generators());
                v
            }
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Expression::Generator(_) => 1,
            Expression::Bracket(l, r) => l.len() + r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_left_normed(&self) -> bool {
        match self {
            Expression::Generator(_) => true,
            Expression::Bracket(l, r) => matches!(**l, Expression::Generator(_)) && r.is_left_normed(),
        }
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Generator(g) => write!(f, "{g}"),
            Expression::Bracket(l, r) => write!(f, "[{l},{r}]"),
        }
    }
}

impl std::str::FromStr for Expression {
    type Err = RewriteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err<T>(&self, message: &str) -> Result<T, RewriteError> {
        Err(RewriteError::Syntax { offset: self.pos, message: message.to_string() })
    }

    fn expect(&mut self, c: u8) -> Result<(), RewriteError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else if self.pos == self.src.len() {
            self.err(&format!("expected '{}' but input ended", c as char))
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn expr(&mut self) -> Result<Expression, RewriteError> {
        self.skip_ws();
        match self.src.get(self.pos) {
            None => self.err("unexpected end of input"),
            Some(b'[') => {
                self.pos += 1;
                let l = self.expr()?;
                self.expect(b',')?;
                let r = self.expr()?;
                self.expect(b']')?;
                Ok(Expression::bracket(l, r))
            }
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Expression::gen(name))
            }
            Some(_) => self.err("expected a generator name or '['"),
        }
    }
}

/// `expr := name | "[" expr "," expr "]"`, whitespace-insensitive. Offsets
/// in errors are byte offsets into `text`.
pub fn parse(text: &str) -> Result<Expression, RewriteError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// `[g_1,[g_2,[…[g_{m−1},g_m]…]]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftNormedWord(Vec<String>);

impl LeftNormedWord {
    pub fn new(generators: Vec<String>) -> Self {
        assert!(!generators.is_empty(), "left-normed words have length at least 1");
        LeftNormedWord(generators)
    }

    pub fn generators(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_expression(&self) -> Expression {
        let mut it = self.0.iter().rev();
        let mut e = Expression::gen(it.next().expect("nonempty"));
        for g in it {
            e = Expression::bracket(Expression::gen(g), e);
        }
        e
    }

    fn prepend(&self, a: &str) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(a.to_string());
        v.extend(self.0.iter().cloned());
        LeftNormedWord(v)
    }
}

impl fmt::Display for LeftNormedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expression())
    }
}

/// Finite sum of left-normed words with rational coefficients, kept sorted by
/// generator sequence with zero terms removed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearCombo {
    terms: BTreeMap<LeftNormedWord, Rational>,
}

impl LinearCombo {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: LeftNormedWord) -> Self {
        let mut c = Self::zero();
        c.add_term(w, Rational::one());
        c
    }

    pub fn add_term(&mut self, w: LeftNormedWord, c: Rational) {
        let slot = self.terms.entry(w).or_insert_with(Rational::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&mut self, other: &LinearCombo, scale: &Rational) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * scale);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LeftNormedWord, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn prepend(&self, a: &str) -> Self {
        LinearCombo { terms: self.terms.iter().map(|(w, c)| (w.prepend(a), c.clone())).collect() }
    }
}

impl fmt::Display for LinearCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `[w, u]` for left-normed `w`, `u`. With `w = [a, t]` this is
/// `[a, [t, u]] + [a, [u, t]]`, each inner bracket rewritten recursively;
/// the total length drops by one per level, so the recursion terminates.
fn bracket_left_normed(w: &[String], u: &[String]) -> LinearCombo {
    let a = &w[0];
    if w.len() == 1 {
        let mut v = Vec::with_capacity(u.len() + 1);
        v.push(a.clone());
        v.extend(u.iter().cloned());
        return LinearCombo::word(LeftNormedWord(v));
    }
    let t = &w[1..];
    let mut out = bracket_left_normed(t, u).prepend(a);
    out.add(&bracket_left_normed(u, t).prepend(a), &Rational::one());
    out
}

pub fn left_normalize(e: &Expression) -> LinearCombo {
    match e {
        Expression::Generator(g) => LinearCombo::word(LeftNormedWord(vec![g.clone()])),
        Expression::Bracket(l, r) => {
            let (nl, nr) = (left_normalize(l), left_normalize(r));
            let mut out = LinearCombo::zero();
            for (w, cw) in nl.terms() {
                for (u, cu) in nr.terms() {
                    out.add(&bracket_left_normed(&w.0, &u.0), &(cw * cu));
                }
            }
            out
        }
    }
}

/// Every bracketing of `g1 g2 … gm` (generator names `g1`, …), in a fixed
/// order: by the size of the left factor, then recursively.
pub fn enumerate_bracketings(m: usize) -> Result<Vec<Expression>, RewriteError> {
    if !(1..=7).contains(&m) {
        return Err(RewriteError::OutOfRange(m));
    }
    let names: Vec<String> = (1..=m).map(|i| format!("g{i}")).collect();
    Ok(bracketings(&names))
}

fn bracketings(names: &[String]) -> Vec<Expression> {
    if names.len() == 1 {
        return vec![Expression::gen(&names[0])];
    }
    let mut out = Vec::new();
    for split in 1..names.len() {
        let lefts = bracketings(&names[..split]);
        let rights = bracketings(&names[split..]);
        for l in &lefts {
            for r in &rights {
                out.push(Expression::bracket(l.clone(), r.clone()));
            }
        }
    }
    out
}

pub fn evaluate<F: Field>(
    e: &Expression,
    alg: &Algebra<F>,
    env: &HashMap<String, Vec<F::Elem>>,
) -> Result<Vec<F::Elem>, RewriteError> {
    match e {
        Expression::Generator(g) => env.get(g).cloned().ok_or_else(|| RewriteError::Unbound(g.clone())),
        Expression::Bracket(l, r) => {
            let (x, y) = (evaluate(l, alg, env)?, evaluate(r, alg, env)?);
            alg.product(&x, &y).map_err(|_| RewriteError::Unbound(format!("{e} (vector of wrong length)")))
        }
    }
}

pub fn evaluate_combo<F: Field>(
    c: &LinearCombo,
    alg: &Algebra<F>,
    env: &HashMap<String, Vec<F::Elem>>,
) -> Result<Vec<F::Elem>, RewriteError> {
    let f = alg.field();
    let mut acc = alg.zero_vector();
    for (w, coeff) in c.terms() {
        let k = f.from_rational(coeff).ok_or_else(|| RewriteError::Coefficient(coeff.to_string()))?;
        let v = evaluate(&w.to_expression(), alg, env)?;
        acc = alg.add_vectors(&acc, &alg.scale_vector(&k, &v));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::RationalField;

    fn p(s: &str) -> Expression {
        parse(s).unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(
            p("[[a,b],c]"),
            Expression::bracket(Expression::bracket(Expression::gen("a"), Expression::gen("b")), Expression::gen("c"))
        );
        assert_eq!(p("a"), Expression::gen("a"));
        assert_eq!(p(" [ x1 , [y,z] ] ").to_string(), "[x1,[y,z]]");
        assert!(matches!(parse("[a,[b"), Err(RewriteError::Syntax { offset: 5, .. })));
        assert!(matches!(parse("[a,b]]"), Err(RewriteError::Syntax { offset: 5, .. })));
        assert!(matches!(parse(""), Err(RewriteError::Syntax { offset: 0, .. })));
        assert!(matches!(parse("[a;b]"), Err(RewriteError::Syntax { offset: 2, .. })));
    }

    #[test]
    fn zinbiel_rule() {
        let c = left_normalize(&p("[[a,b],c]"));
        assert_eq!(c.to_string(), "1*[a,[b,c]] + 1*[a,[c,b]]");
        assert_eq!(left_normalize(&p("[a,[b,c]]")).to_string(), "1*[a,[b,c]]");
        assert_eq!(left_normalize(&p("[[[a,b],c],d]")).len(), 6);
        assert_eq!(left_normalize(&p("[[a,a],a]")).to_string(), "2*[a,[a,a]]");
    }

    #[test]
    fn four_letter_left_bracketing_mass() {
        // [[[a,b],c],d]: one rewrite at the top gives 2 terms, each of which
        // needs a further rewrite of a 3-letter left factor.
        let c = left_normalize(&p("[[[a,b],c],d]"));
        let mass: Rational = c.terms().fold(Rational::zero(), |acc, (_, v)| &acc + v);
        assert_eq!(mass, Rational::integer(6));
        for (w, _) in c.terms() {
            let mut g = w.generators().to_vec();
            g.sort();
            assert_eq!(g, vec!["a", "b", "c", "d"]);
            assert_eq!(w.generators()[0], "a");
        }
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=7).map(|m| enumerate_bracketings(m).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
        assert_eq!(enumerate_bracketings(0), Err(RewriteError::OutOfRange(0)));
        assert_eq!(enumerate_bracketings(8), Err(RewriteError::OutOfRange(8)));
    }

    #[test]
    fn evaluation() {
        let a = Algebra::from_products(RationalField, 2, &[(1, 1, 2, Rational::one())]).unwrap();
        let env: HashMap<String, Vec<Rational>> = [("e1".to_string(), a.e(1))].into();
        assert_eq!(evaluate(&p("[e1,e1]"), &a, &env).unwrap(), a.e(2));
        assert_eq!(evaluate_combo(&LinearCombo::zero(), &a, &env).unwrap(), a.zero_vector());
        assert_eq!(evaluate(&p("[e1,x]"), &a, &env), Err(RewriteError::Unbound("x".into())));
    }
}
