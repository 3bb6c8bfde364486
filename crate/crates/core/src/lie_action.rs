//! The actions of `gl_n` and `gl(p|q)` on the supersymmetric algebra by
//! (super)derivations, weights, raising operators and an exact kernel
//! computation on graded components.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;
use crate::partitions::Partition;
use crate::superalgebra::{Ambient, Generator, SuperMonomial, SuperPolynomial};
use crate::tableaux::Content;

/// A matrix unit `E_ab` of `gl_n` or of `gl(p|q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BasisOperator {
    GlN { a: usize, b: usize },
    GlPq { a: usize, b: usize },
}

impl BasisOperator {
    /// `[a] + [b]` for `gl(p|q)`, zero for `gl_n`.
    pub fn parity(&self, p: usize) -> u8 {
        match *self {
            BasisOperator::GlN { .. } => 0,
            BasisOperator::GlPq { a, b } => ((a > p) as u8 + (b > p) as u8) % 2,
        }
    }

    fn check(&self, amb: &Ambient) -> Result<()> {
        let (a, b, size) = match *self {
            BasisOperator::GlN { a, b } => (a, b, amb.n),
            BasisOperator::GlPq { a, b } => (a, b, amb.p + amb.q),
        };
        if a == 0 || b == 0 || a > size || b > size {
            return Err(Error::Index(format!("{self} outside size {size}")));
        }
        Ok(())
    }

    /// Image of a single generator.
    fn on_generator(&self, g: &Generator, p: usize) -> Option<Generator> {
        match *self {
            BasisOperator::GlN { a, b } => (g.row == b).then_some(Generator { row: a, ..*g }),
            BasisOperator::GlPq { a, b } => (g.global_col(p) == b).then(|| {
                if a <= p {
                    Generator::e(g.row, a)
                } else {
                    Generator::f(g.row, a - p)
                }
            }),
        }
    }
}

impl std::fmt::Display for BasisOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisOperator::GlN { a, b } => write!(f, "gl_n E({a},{b})"),
            BasisOperator::GlPq { a, b } => write!(f, "gl(p|q) E({a},{b})"),
        }
    }
}

fn act_monomial(op: &BasisOperator, m: &SuperMonomial, p: usize, out: &mut SuperPolynomial, coeff: &BigInt) {
    let odd_op = op.parity(p) == 1;
    let factors = m.factors();
    let mut passed_odd = 0usize;
    for (i, g) in factors.iter().enumerate() {
        if let Some(image) = op.on_generator(g, p) {
            let mut fs = factors.to_vec();
            fs[i] = image;
            if let Some((sign, m2)) = SuperMonomial::from_factors(fs) {
                let mut c = coeff.clone();
                if sign < 0 {
                    c = -c;
                }
                if odd_op && passed_odd % 2 == 1 {
                    c = -c;
                }
                out.add_term(m2, c);
            }
        }
        if g.is_odd() {
            passed_odd += 1;
        }
    }
}

/// `op · x`, extended from generators by the Koszul sign rule.
pub fn act(amb: &Ambient, op: &BasisOperator, x: &SuperPolynomial) -> Result<SuperPolynomial> {
    op.check(amb)?;
    let mut out = SuperPolynomial::zero();
    for (m, c) in x.terms() {
        act_monomial(op, m, amb.p, &mut out, c);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Target {
    /// Cartan of `gl_n`: counts by row.
    HN,
    /// Cartan of `gl(p|q)`: counts by global column.
    HPQ,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weight {
    pub target: Target,
    pub entries: Vec<usize>,
}

fn profile(m: &SuperMonomial, amb: &Ambient, target: Target) -> Vec<usize> {
    match target {
        Target::HN => m.row_profile(amb.n),
        Target::HPQ => m.col_profile(amb.p, amb.q),
    }
}

/// The weight of a weight vector; errors on zero or inhomogeneous input.
pub fn weight_of(amb: &Ambient, x: &SuperPolynomial, target: Target) -> Result<Weight> {
    let mut it = x.terms();
    let (first, _) = it.next().ok_or(Error::ZeroPolynomial)?;
    let entries = profile(first, amb, target);
    for (m, _) in it {
        if profile(m, amb, target) != entries {
            return Err(Error::NotHomogeneous {
                first: first.to_string(),
                second: m.to_string(),
            });
        }
    }
    Ok(Weight { target, entries })
}

pub fn is_annihilated(amb: &Ambient, x: &SuperPolynomial, ops: &[BasisOperator]) -> Result<bool> {
    for op in ops {
        if !act(amb, op, x)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    /// `gl(r|s) ⊕ 𝔥_{r'} ⊕ 𝔥_{s'}`.
    M,
    /// `gl(r|s) ⊕ gl(r'|s')`.
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SubalgebraSpec {
    pub r: usize,
    pub s: usize,
    pub rprime: usize,
    pub sprime: usize,
    pub flavor: Flavor,
}

impl SubalgebraSpec {
    pub fn new(p: usize, q: usize, r: usize, s: usize, flavor: Flavor) -> Result<Self> {
        if r > p || s > q {
            return Err(Error::Dimensions(format!("(r,s)=({r},{s}) exceeds (p,q)=({p},{q})")));
        }
        Ok(SubalgebraSpec { r, s, rprime: p - r, sprime: q - s, flavor })
    }

    pub fn p(&self) -> usize {
        self.r + self.rprime
    }

    pub fn q(&self) -> usize {
        self.s + self.sprime
    }

    /// Index map of `gl(r|s)` into `gl(p|q)`.
    pub fn iota(&self, a: usize) -> usize {
        if a <= self.r {
            a
        } else {
            self.p() + (a - self.r)
        }
    }

    /// Index map of `gl(r'|s')` into `gl(p|q)`.
    pub fn kappa(&self, b: usize) -> usize {
        if b <= self.rprime {
            self.r + b
        } else {
            self.p() + self.s + (b - self.rprime)
        }
    }
}

/// Images of the simple raising operators of the subalgebra.
pub fn raising_generators(spec: &SubalgebraSpec) -> Vec<BasisOperator> {
    let mut out: Vec<BasisOperator> = (1..(spec.r + spec.s))
        .map(|a| BasisOperator::GlPq { a: spec.iota(a), b: spec.iota(a + 1) })
        .collect();
    if spec.flavor == Flavor::Q {
        out.extend(
            (1..(spec.rprime + spec.sprime))
                .map(|b| BasisOperator::GlPq { a: spec.kappa(b), b: spec.kappa(b + 1) }),
        );
    }
    out
}

/// Simple raising operators `E_{i,i+1}` of `gl_n`.
pub fn gl_n_raising(n: usize) -> Vec<BasisOperator> {
    (1..n).map(|a| BasisOperator::GlN { a, b: a + 1 }).collect()
}

/// All monomials with row profile `w_n` and column profile `w_pq`: the
/// exponent matrices with these margins, odd columns restricted to 0/1.
pub fn graded_component(amb: &Ambient, w_n: &[usize], w_pq: &[usize]) -> Result<Vec<SuperMonomial>> {
    Ok(graded_component_bounded(amb, w_n, w_pq, usize::MAX)?.expect("unbounded"))
}

/// As [`graded_component`], giving up with `None` past `limit` monomials.
pub fn graded_component_bounded(
    amb: &Ambient,
    w_n: &[usize],
    w_pq: &[usize],
    limit: usize,
) -> Result<Option<Vec<SuperMonomial>>> {
    if w_n.len() != amb.n || w_pq.len() != amb.p + amb.q {
        return Err(Error::Dimensions("weight lengths do not match the ambient".into()));
    }
    if w_n.iter().sum::<usize>() != w_pq.iter().sum::<usize>() {
        return Ok(Some(Vec::new()));
    }
    let mut walk = Margins {
        p: amb.p,
        w_pq,
        rows: w_n.to_vec(),
        factors: Vec::new(),
        out: Vec::new(),
        limit,
    };
    Ok(walk.column(0).then_some(walk.out))
}

/// Backtracking over exponent matrices, column by column, top to bottom.
struct Margins<'a> {
    p: usize,
    w_pq: &'a [usize],
    rows: Vec<usize>,
    factors: Vec<Generator>,
    out: Vec<SuperMonomial>,
    limit: usize,
}

impl Margins<'_> {
    /// Returns `false` once the limit is exceeded.
    fn column(&mut self, col: usize) -> bool {
        if col == self.w_pq.len() {
            if self.rows.iter().all(|&r| r == 0) {
                self.out.push(SuperMonomial::from_factors(self.factors.clone()).unwrap().1);
            }
            return self.out.len() <= self.limit;
        }
        self.cell(col, 0, self.w_pq[col])
    }

    fn cell(&mut self, col: usize, row: usize, need: usize) -> bool {
        if row == self.rows.len() {
            return need != 0 || self.column(col + 1);
        }
        let cap = if col < self.p { usize::MAX } else { 1 };
        let room: usize = self.rows[row..].iter().map(|&r| r.min(cap)).sum();
        if room < need {
            return true;
        }
        let g = if col < self.p {
            Generator::e(row + 1, col + 1)
        } else {
            Generator::f(row + 1, col + 1 - self.p)
        };
        let hi = need.min(self.rows[row]).min(cap);
        for k in (0..=hi).rev() {
            self.rows[row] -= k;
            self.factors.extend(std::iter::repeat_n(g, k));
            let ok = self.cell(col, row + 1, need - k);
            self.factors.truncate(self.factors.len() - k);
            self.rows[row] += k;
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Dimension of `{x ∈ span(component) : op·x = 0 for all ops}` over ℚ.
pub fn joint_kernel_dim(amb: &Ambient, ops: &[BasisOperator], component: &[SuperMonomial]) -> Result<usize> {
    for op in ops {
        op.check(amb)?;
    }
    if ops.is_empty() {
        return Ok(component.len());
    }
    let images: Vec<Vec<SuperPolynomial>> = par::map(component, |m| {
        let x = SuperPolynomial::monomial(m.clone(), BigInt::one());
        ops.iter().map(|op| act(amb, op, &x).expect("checked")).collect()
    });
    // index target monomials so that vector keys are small
    let mut ids: HashMap<SuperMonomial, usize> = HashMap::new();
    let mut echelon = Echelon::default();
    for per_op in images {
        let mut v: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (k, image) in per_op.into_iter().enumerate() {
            for (m, c) in image.terms() {
                let next = ids.len();
                let id = *ids.entry(m.clone()).or_insert(next);
                v.insert((k, id), c.clone());
            }
        }
        echelon.insert(v);
    }
    Ok(component.len() - echelon.rank())
}

/// Fraction-free incremental row echelon form over ℤ.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<(usize, usize), BTreeMap<(usize, usize), BigInt>>,
}

impl Echelon {
    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn insert(&mut self, mut v: BTreeMap<(usize, usize), BigInt>) {
        while let Some((&lead, a)) = v.iter().next_back() {
            let Some(row) = self.pivots.get(&lead) else {
                normalize(&mut v);
                self.pivots.insert(lead, v);
                return;
            };
            // v <- b·v - a·row, which clears `lead`
            let b = row[&lead].clone();
            let a = a.clone();
            for c in v.values_mut() {
                *c *= &b;
            }
            for (k, c) in row {
                let e = v.entry(*k).or_insert_with(BigInt::zero);
                *e -= &a * c;
                if e.is_zero() {
                    v.remove(k);
                }
            }
            normalize(&mut v);
        }
    }
}

fn normalize(v: &mut BTreeMap<(usize, usize), BigInt>) {
    let g = v.values().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.abs().is_one() {
        for c in v.values_mut() {
            *c /= &g;
        }
    }
}

/// `D♯` read in `gl(r|s)`: the first `r` rows, then column lengths past `r`.
fn sharp_rs(d: &Partition, r: usize, s: usize) -> Result<Vec<usize>> {
    Ok(d.sharp(r, s)?.entries().to_vec())
}

/// The `gl(p|q)` weight of the `(D, α, β)` component:
/// `D♯` through `ι̃`, `α` on columns `r+1..=p`, `β` on `p+s+1..=p+q`.
pub fn component_weight_m(
    spec: &SubalgebraSpec,
    d: &Partition,
    alpha: &Content,
    beta: &Content,
) -> Result<Vec<usize>> {
    let (p, q) = (spec.p(), spec.q());
    let alpha = alpha.padded(spec.rprime)?;
    let beta = beta.padded(spec.sprime)?;
    let dsharp = sharp_rs(d, spec.r, spec.s)?;
    let mut w = vec![0; p + q];
    for (a, x) in dsharp.iter().enumerate() {
        w[spec.iota(a + 1) - 1] = *x;
    }
    for (k, x) in alpha.counts().iter().enumerate() {
        w[spec.r + k] = *x;
    }
    for (k, x) in beta.counts().iter().enumerate() {
        w[p + spec.s + k] = *x;
    }
    Ok(w)
}

/// The `gl(p|q)` weight of the `(D, E)` component: `D♯` through `ι̃`,
/// `E♯` through `κ̃`.
pub fn component_weight_q(spec: &SubalgebraSpec, d: &Partition, e: &Partition) -> Result<Vec<usize>> {
    let dsharp = sharp_rs(d, spec.r, spec.s)?;
    let esharp = sharp_rs(e, spec.rprime, spec.sprime)?;
    let mut w = vec![0; spec.p() + spec.q()];
    for (a, x) in dsharp.iter().enumerate() {
        w[spec.iota(a + 1) - 1] = *x;
    }
    for (b, x) in esharp.iter().enumerate() {
        w[spec.kappa(b + 1) - 1] = *x;
    }
    Ok(w)
}

fn row_weight(f: &Partition, n: usize) -> Result<Vec<usize>> {
    if f.depth() > n {
        return Err(Error::TooManyRows { partition: f.clone(), max: n });
    }
    let mut w = f.parts().to_vec();
    w.resize(n, 0);
    Ok(w)
}

/// Kernel dimension of `u_n ∪ u_𝔪` on the `(ψ^F_n; D, α, β)` component.
pub fn oracle_m(
    amb: &Ambient,
    spec: &SubalgebraSpec,
    f: &Partition,
    d: &Partition,
    alpha: &Content,
    beta: &Content,
) -> Result<usize> {
    let w_n = row_weight(f, amb.n)?;
    let w_pq = component_weight_m(spec, d, alpha, beta)?;
    let component = graded_component(amb, &w_n, &w_pq)?;
    let mut ops = gl_n_raising(amb.n);
    ops.extend(raising_generators(&SubalgebraSpec { flavor: Flavor::M, ..*spec }));
    joint_kernel_dim(amb, &ops, &component)
}

/// Kernel dimension of `u_n ∪ u_𝔮` on the `(ψ^F_n; D♯, E♯)` component.
pub fn oracle_q(
    amb: &Ambient,
    spec: &SubalgebraSpec,
    f: &Partition,
    d: &Partition,
    e: &Partition,
) -> Result<usize> {
    let w_n = row_weight(f, amb.n)?;
    let w_pq = component_weight_q(spec, d, e)?;
    let component = graded_component(amb, &w_n, &w_pq)?;
    let mut ops = gl_n_raising(amb.n);
    ops.extend(raising_generators(&SubalgebraSpec { flavor: Flavor::Q, ..*spec }));
    joint_kernel_dim(amb, &ops, &component)
}
