//! The supersymmetric algebra on `ℂⁿ ⊗ ℂ^{p|q}`: even generators `e_ij`,
//! odd generators `f_ik`, ordered monomials, leading monomials and
//! determinants.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sort key under the order for a given `(r, s)`: block, then column, then row.
type GeneratorKey = (u8, Reverse<usize>, Reverse<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Even generator `e_{row,col}`, `col ≤ p`.
    E,
    /// Odd generator `f_{row,col}`, `col ≤ q`.
    F,
}

/// A generator `e_{row,col}` or `f_{row,col}`.
///
/// The derived order (kind, then column, then row) is the storage order of
/// factors inside a monomial. It lists odd factors in decreasing position
/// for every choice of `(r, s)`, so one stored sign serves all contexts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: Kind,
    pub col: usize,
    pub row: usize,
}

impl Generator {
    pub fn e(row: usize, col: usize) -> Self {
        Generator { kind: Kind::E, col, row }
    }

    pub fn f(row: usize, col: usize) -> Self {
        Generator { kind: Kind::F, col, row }
    }

    pub fn is_odd(&self) -> bool {
        self.kind == Kind::F
    }

    /// Column index in `1..=p+q`, with the odd columns after the even ones.
    pub fn global_col(&self, p: usize) -> usize {
        match self.kind {
            Kind::E => self.col,
            Kind::F => p + self.col,
        }
    }

    /// Rank of the block this generator falls in under the `(r, s)` split:
    /// `e > f > e' > f'`.
    fn block(&self, r: usize, s: usize) -> u8 {
        match self.kind {
            Kind::E if self.col <= r => 3,
            Kind::F if self.col <= s => 2,
            Kind::E => 1,
            Kind::F => 0,
        }
    }

    fn key(&self, r: usize, s: usize) -> GeneratorKey {
        (self.block(r, s), Reverse(self.col), Reverse(self.row))
    }

    /// Text form under the `(r, s)` split, e.g. `e11`, `f'62`.
    pub fn render(&self, r: usize, s: usize) -> String {
        let (name, col) = match (self.kind, self.block(r, s)) {
            (Kind::E, 3) => ("e", self.col),
            (Kind::F, 2) => ("f", self.col),
            (Kind::E, _) => ("e'", self.col - r),
            (Kind::F, _) => ("f'", self.col - s),
        };
        if self.row < 10 && col < 10 {
            format!("{name}{}{col}", self.row)
        } else {
            format!("{name}({},{col})", self.row)
        }
    }
}

/// The ambient sizes `(n, p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

impl Ambient {
    pub fn new(n: usize, p: usize, q: usize) -> Self {
        Ambient { n, p, q }
    }

    pub fn check(&self, g: &Generator) -> Result<()> {
        let width = match g.kind {
            Kind::E => self.p,
            Kind::F => self.q,
        };
        if g.row == 0 || g.row > self.n || g.col == 0 || g.col > width {
            return Err(Error::Index(format!(
                "{} outside n={}, p={}, q={}",
                g.render(usize::MAX, usize::MAX),
                self.n,
                self.p,
                self.q
            )));
        }
        Ok(())
    }

    pub fn e(&self, row: usize, col: usize) -> Result<SuperPolynomial> {
        let g = Generator::e(row, col);
        self.check(&g)?;
        Ok(SuperPolynomial::generator(g))
    }

    pub fn f(&self, row: usize, col: usize) -> Result<SuperPolynomial> {
        let g = Generator::f(row, col);
        self.check(&g)?;
        Ok(SuperPolynomial::generator(g))
    }

    /// Every generator of the ambient algebra.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for col in 1..=self.p {
            for row in 1..=self.n {
                out.push(Generator::e(row, col));
            }
        }
        for col in 1..=self.q {
            for row in 1..=self.n {
                out.push(Generator::f(row, col));
            }
        }
        out
    }
}

pub fn compare_generators(a: &Generator, b: &Generator, r: usize, s: usize) -> Ordering {
    a.key(r, s).cmp(&b.key(r, s))
}

/// An ordered monomial, factors kept in storage order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMonomial {
    factors: Vec<Generator>,
}

impl SuperMonomial {
    pub fn one() -> Self {
        SuperMonomial::default()
    }

    /// Normalizes a product of generators written in the given order.
    /// Returns the sign picked up by reordering the odd factors, or `None`
    /// when an odd generator repeats.
    pub fn from_factors(mut factors: Vec<Generator>) -> Option<(i8, SuperMonomial)> {
        let odd: Vec<Generator> = factors.iter().filter(|g| g.is_odd()).copied().collect();
        let mut inversions = 0usize;
        for i in 0..odd.len() {
            for j in i + 1..odd.len() {
                match odd[i].cmp(&odd[j]) {
                    Ordering::Equal => return None,
                    Ordering::Greater => inversions += 1,
                    Ordering::Less => {}
                }
            }
        }
        factors.sort_unstable();
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, SuperMonomial { factors }))
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn parity(&self) -> u8 {
        (self.factors.iter().filter(|g| g.is_odd()).count() % 2) as u8
    }

    /// `self · other`, with the sign of moving odd factors into place.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(i8, SuperMonomial)> {
        // count pairs (a in self, b in other) of odd factors with a > b
        let right: Vec<&Generator> = other.factors.iter().filter(|g| g.is_odd()).collect();
        let mut inversions = 0usize;
        let mut j = 0;
        for a in self.factors.iter().filter(|g| g.is_odd()) {
            while j < right.len() && right[j] < a {
                j += 1;
            }
            if j < right.len() && right[j] == a {
                return None;
            }
            inversions += j;
        }
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut x, mut y) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (x.peek(), y.peek()) {
                (Some(a), Some(b)) => {
                    if a <= b {
                        factors.push(*x.next().unwrap());
                    } else {
                        factors.push(*y.next().unwrap());
                    }
                }
                (Some(_), None) => factors.push(*x.next().unwrap()),
                (None, Some(_)) => factors.push(*y.next().unwrap()),
                (None, None) => break,
            }
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, SuperMonomial { factors }))
    }

    /// Factors sorted decreasingly for the `(r, s)` order.
    pub fn ordered(&self, r: usize, s: usize) -> Vec<Generator> {
        let mut v = self.factors.clone();
        v.sort_by(|a, b| compare_generators(b, a, r, s));
        v
    }

    fn order_key(&self, r: usize, s: usize) -> (usize, Vec<GeneratorKey>) {
        let mut keys: Vec<_> = self.factors.iter().map(|g| g.key(r, s)).collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        (keys.len(), keys)
    }

    /// Number of factors in each row `1..=n`.
    pub fn row_profile(&self, n: usize) -> Vec<usize> {
        let mut w = vec![0; n];
        for g in &self.factors {
            w[g.row - 1] += 1;
        }
        w
    }

    /// Number of factors in each global column `1..=p+q`.
    pub fn col_profile(&self, p: usize, q: usize) -> Vec<usize> {
        let mut w = vec![0; p + q];
        for g in &self.factors {
            w[g.global_col(p) - 1] += 1;
        }
        w
    }

    /// Text form under the `(r, s)` split, e.g. `e11^3 e22^3 f31 e'31 f'11`.
    pub fn render(&self, r: usize, s: usize) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        let ordered = self.ordered(r, s);
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < ordered.len() {
            let mut k = i + 1;
            while k < ordered.len() && ordered[k] == ordered[i] {
                k += 1;
            }
            let text = ordered[i].render(r, s);
            parts.push(if k - i > 1 { format!("{text}^{}", k - i) } else { text });
            i = k;
        }
        parts.join(" ")
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(usize::MAX, usize::MAX))
    }
}

/// O6: higher degree is greater; equal degrees compare the decreasingly
/// ordered factor lists lexicographically.
pub fn compare_monomials(a: &SuperMonomial, b: &SuperMonomial, r: usize, s: usize) -> Ordering {
    a.order_key(r, s).cmp(&b.order_key(r, s))
}

/// A finite integer combination of ordered monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperPolynomial {
    terms: BTreeMap<SuperMonomial, BigInt>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        SuperPolynomial::default()
    }

    pub fn one() -> Self {
        SuperPolynomial::monomial(SuperMonomial::one(), BigInt::one())
    }

    pub fn generator(g: Generator) -> Self {
        SuperPolynomial::monomial(SuperMonomial { factors: vec![g] }, BigInt::one())
    }

    pub fn monomial(m: SuperMonomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SuperPolynomial { terms }
    }

    /// The product of the listed generators, in order.
    pub fn product_of(factors: &[Generator]) -> Self {
        match SuperMonomial::from_factors(factors.to_vec()) {
            Some((sign, m)) => SuperPolynomial::monomial(m, BigInt::from(sign)),
            None => SuperPolynomial::zero(),
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &SuperMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return SuperPolynomial::zero();
        }
        SuperPolynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `Some(parity)` if every term has the same parity.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(SuperMonomial::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn multiply(&self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((sign, m)) = a.mul(b) {
                    let c = x * y;
                    out.add_term(m, if sign < 0 { -c } else { c });
                }
            }
        }
        out
    }

    pub fn leading_monomial(&self, r: usize, s: usize) -> Result<SuperMonomial> {
        self.leading_term(r, s).map(|(m, _)| m.clone())
    }

    pub fn leading_term(&self, r: usize, s: usize) -> Result<(&SuperMonomial, &BigInt)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.order_key(r, s), m, c))
            .max_by(|a, b| a.0.cmp(&b.0))
            .map(|(_, m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Text form under `(r, s)`, terms in decreasing order.
    pub fn render(&self, r: usize, s: usize) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| compare_monomials(b.0, a.0, r, s));
        let mut out = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let abs = c.abs();
            if abs.is_one() {
                out.push_str(&m.render(r, s));
            } else if m.degree() == 0 {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&format!("{abs} {}", m.render(r, s)));
            }
        }
        out
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(usize::MAX, usize::MAX))
    }
}

impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, other: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, other: &SuperPolynomial) -> SuperPolynomial {
        self.multiply(other)
    }
}

/// `Σ_σ sgn(σ) a_{σ(1)1} ⋯ a_{σ(k)k}`, factors multiplied in column order.
pub fn determinant(matrix: &[Vec<SuperPolynomial>]) -> Result<SuperPolynomial> {
    let k = matrix.len();
    if matrix.iter().any(|row| row.len() != k) {
        return Err(Error::Dimensions("determinant needs a square matrix".into()));
    }
    if k > 63 {
        return Err(Error::Dimensions("matrix too large".into()));
    }
    let mut memo: HashMap<u64, SuperPolynomial> = HashMap::new();
    Ok(expand(matrix, 0, 0, &mut memo))
}

/// Sum over the ways to fill columns `col..` from rows outside `used`.
fn expand(
    matrix: &[Vec<SuperPolynomial>],
    col: usize,
    used: u64,
    memo: &mut HashMap<u64, SuperPolynomial>,
) -> SuperPolynomial {
    let k = matrix.len();
    if col == k {
        return SuperPolynomial::one();
    }
    if let Some(hit) = memo.get(&used) {
        return hit.clone();
    }
    let mut out = SuperPolynomial::zero();
    for (row, entries) in matrix.iter().enumerate() {
        if used & (1 << row) != 0 || entries[col].is_zero() {
            continue;
        }
        let rest = expand(matrix, col + 1, used | (1 << row), memo);
        if rest.is_zero() {
            continue;
        }
        // inversions added by placing `row` after the rows already used
        let above = (used >> (row + 1)).count_ones();
        let term = entries[col].multiply(&rest);
        if above.is_multiple_of(2) {
            out = &out + &term;
        } else {
            out = &out - &term;
        }
    }
    memo.insert(used, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(i: usize, j: usize) -> SuperPolynomial {
        SuperPolynomial::generator(Generator::e(i, j))
    }

    fn f(i: usize, j: usize) -> SuperPolynomial {
        SuperPolynomial::generator(Generator::f(i, j))
    }

    #[test]
    fn generator_order() {
        let (r, s) = (2, 2);
        assert_eq!(compare_generators(&Generator::e(1, 1), &Generator::e(2, 2), r, s), Ordering::Greater);
        assert_eq!(compare_generators(&Generator::f(3, 1), &Generator::f(3, 2), r, s), Ordering::Greater);
        for g in Ambient::new(3, 4, 4).generators() {
            if g.kind == Kind::F && g.col > s {
                assert_eq!(compare_generators(&Generator::e(3, 2), &g, r, s), Ordering::Greater);
            }
        }
        // e' sits below f
        assert_eq!(compare_generators(&Generator::f(7, 2), &Generator::e(1, 3), r, s), Ordering::Greater);
        assert_eq!(compare_generators(&Generator::e(2, 3), &Generator::e(1, 3), r, s), Ordering::Less);
    }

    #[test]
    fn monomial_order() {
        let m = |fs: &[Generator]| SuperMonomial::from_factors(fs.to_vec()).unwrap().1;
        let long = m(&[Generator::e(3, 3), Generator::e(3, 3), Generator::e(3, 3)]);
        let short = m(&[Generator::e(1, 1), Generator::e(1, 1)]);
        assert_eq!(compare_monomials(&long, &short, 1, 1), Ordering::Greater);
        let a = m(&[Generator::e(1, 1), Generator::e(2, 2)]);
        let b = m(&[Generator::e(1, 1), Generator::e(3, 2)]);
        assert_eq!(compare_monomials(&a, &b, 2, 0), Ordering::Greater);
        assert_eq!(compare_monomials(&a, &a, 2, 0), Ordering::Equal);
    }

    #[test]
    fn relations() {
        assert_eq!(&f(1, 1) * &f(2, 1), -&(&f(2, 1) * &f(1, 1)));
        assert!((&f(1, 1) * &f(1, 1)).is_zero());
        assert_eq!(&e(1, 1) * &f(2, 1), &f(2, 1) * &e(1, 1));
        assert_eq!(&e(1, 1) * &e(1, 1), e(1, 1).multiply(&e(1, 1)));
        assert!(!(&e(1, 1) * &e(1, 1)).is_zero());
    }

    #[test]
    fn determinant_examples() {
        let m = vec![vec![f(1, 1), f(1, 1)], vec![f(2, 1), f(2, 1)]];
        let want = (&f(1, 1) * &f(2, 1)).scale(&BigInt::from(2));
        assert_eq!(determinant(&m).unwrap(), want);
        // swapping the two columns of that matrix leaves it unchanged, swapping rows negates
        let rows = vec![vec![f(2, 1), f(2, 1)], vec![f(1, 1), f(1, 1)]];
        assert_eq!(determinant(&rows).unwrap(), -&want);
        assert_eq!(determinant(&[]).unwrap(), SuperPolynomial::one());
        let m = vec![vec![e(1, 1), e(1, 2)], vec![e(2, 1), e(2, 2)]];
        assert_eq!(determinant(&m).unwrap(), &(&e(1, 1) * &e(2, 2)) - &(&e(2, 1) * &e(1, 2)));
        assert!(determinant(&[vec![e(1, 1), e(1, 2)]]).is_err());
    }

    #[test]
    fn leading_monomials() {
        assert!(SuperPolynomial::zero().leading_monomial(0, 0).is_err());
        let x = &e(3, 1) * &f(2, 2);
        assert_eq!(x.leading_monomial(1, 1).unwrap(), x.terms().next().unwrap().0.clone());
        // det [[f'11, f'12], [f'21, f'22]] with r=s=2 has LM f'11 f'22
        let m = vec![vec![f(1, 3), f(1, 4)], vec![f(2, 3), f(2, 4)]];
        let det = determinant(&m).unwrap();
        assert_eq!(det.leading_monomial(2, 2).unwrap().render(2, 2), "f'11 f'22");
    }

    #[test]
    fn rendering() {
        let x = SuperPolynomial::product_of(&[
            Generator::e(1, 1),
            Generator::e(1, 1),
            Generator::f(3, 1),
            Generator::e(6, 3),
            Generator::f(5, 3),
        ]);
        let (m, _) = x.leading_term(2, 2).unwrap();
        assert_eq!(m.render(2, 2), "e11^2 f31 e'61 f'51");
        assert_eq!(Generator::e(10, 1).render(1, 0), "e(10,1)");
        let det = determinant(&[vec![e(1, 1), e(1, 2)], vec![e(2, 1), e(2, 2)]]).unwrap();
        assert_eq!(det.render(2, 0), "e11 e22 - e21 e12");
        assert_eq!(SuperPolynomial::zero().to_string(), "0");
    }

    fn arb_generator() -> impl Strategy<Value = Generator> {
        (prop::bool::ANY, 1usize..4, 1usize..4).prop_map(|(odd, row, col)| {
            if odd { Generator::f(row, col) } else { Generator::e(row, col) }
        })
    }

    fn arb_poly() -> impl Strategy<Value = SuperPolynomial> {
        prop::collection::vec((prop::collection::vec(arb_generator(), 0..4), -3i64..4), 0..4).prop_map(|terms| {
            let mut out = SuperPolynomial::zero();
            for (fs, c) in terms {
                out = &out + &SuperPolynomial::product_of(&fs).scale(&BigInt::from(c));
            }
            out
        })
    }

    fn arb_homogeneous() -> impl Strategy<Value = SuperPolynomial> {
        (arb_poly(), 0u8..2).prop_map(|(x, parity)| {
            let mut out = SuperPolynomial::zero();
            for (m, c) in x.terms() {
                if m.parity() == parity {
                    out.add_term(m.clone(), c.clone());
                }
            }
            out
        })
    }

    proptest! {
        #[test]
        fn generator_order_is_total(a in arb_generator(), b in arb_generator(), c in arb_generator(), r in 0usize..4, s in 0usize..4) {
            prop_assert_eq!(compare_generators(&a, &b, r, s), compare_generators(&b, &a, r, s).reverse());
            prop_assert_eq!(compare_generators(&a, &b, r, s) == Ordering::Equal, a == b);
            if compare_generators(&a, &b, r, s) == Ordering::Greater && compare_generators(&b, &c, r, s) == Ordering::Greater {
                prop_assert_eq!(compare_generators(&a, &c, r, s), Ordering::Greater);
            }
        }

        #[test]
        fn monomial_order_is_total(x in arb_poly(), y in arb_poly(), z in arb_poly(), r in 0usize..4, s in 0usize..4) {
            for (a, _) in x.terms() {
                for (b, _) in y.terms() {
                    prop_assert_eq!(compare_monomials(a, b, r, s), compare_monomials(b, a, r, s).reverse());
                    prop_assert_eq!(compare_monomials(a, b, r, s) == Ordering::Equal, a == b);
                    for (c, _) in z.terms() {
                        if compare_monomials(a, b, r, s) == Ordering::Greater && compare_monomials(b, c, r, s) == Ordering::Greater {
                            prop_assert_eq!(compare_monomials(a, c, r, s), Ordering::Greater);
                        }
                    }
                }
            }
        }

        #[test]
        fn multiplication_is_associative(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn multiplication_is_graded_commutative(x in arb_homogeneous(), y in arb_homogeneous()) {
            let sign = match (x.parity(), y.parity()) {
                (Some(1), Some(1)) => -1,
                _ => 1,
            };
            prop_assert_eq!(&x * &y, (&y * &x).scale(&BigInt::from(sign)));
        }

        #[test]
        fn leading_monomial_is_multiplicative(x in arb_poly(), y in arb_poly(), r in 0usize..4, s in 0usize..4) {
            let xy = &x * &y;
            if let (Ok(a), Ok(b)) = (x.leading_monomial(r, s), y.leading_monomial(r, s)) {
                if let Some((_, m)) = a.mul(&b) {
                    prop_assert_eq!(xy.leading_monomial(r, s).unwrap(), m);
                }
            }
        }

        #[test]
        fn determinant_rows(m in prop::collection::vec(prop::collection::vec(arb_poly(), 3), 3), i in 0usize..3, j in 0usize..3) {
            let d = determinant(&m).unwrap();
            if i != j {
                let mut swapped = m.clone();
                swapped.swap(i, j);
                prop_assert_eq!(determinant(&swapped).unwrap(), -&d);
                let mut twin = m.clone();
                twin[j] = twin[i].clone();
                prop_assert!(determinant(&twin).unwrap().is_zero());
            }
        }
    }
}
