//! Explicit highest weight vectors: column determinants of `T1 * T2`, their
//! products, the monomials `m_(T1,T2)` and a verification pipeline.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie_action::{
    act, component_weight_m, gl_n_raising, graded_component_bounded, joint_kernel_dim, raising_generators,
    weight_of, BasisOperator, Flavor, SubalgebraSpec, Target,
};
use crate::multiplicities::{branch_n, serialize_count};
use crate::par;
use crate::partitions::Partition;
use crate::superalgebra::{determinant, Ambient, Generator, SuperMonomial, SuperPolynomial};
use crate::tableaux::{enumerate_pairs, star_compose, Content, Origin, StarTableau, TableauJson, TableauPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ColumnType {
    /// The column misses the lower part of `H_D`.
    Zero,
    /// The column meets the lower part of `H_D`; carries the column index.
    Typed(usize),
}

/// A column of `T1 * T2` split into its four parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColumnProfile {
    pub column: usize,
    pub tag: ColumnType,
    /// Length of the initial run `1, 2, …, ℓ`.
    pub part1: usize,
    /// Number of copies of the column index.
    pub part2: usize,
    /// Strictly increasing entries from `T1`.
    pub part3: Vec<usize>,
    /// Weakly increasing entries from `T2`.
    pub part4: Vec<usize>,
}

impl ColumnProfile {
    pub fn height(&self) -> usize {
        self.part1 + self.part2 + self.part3.len() + self.part4.len()
    }
}

/// Splits column `j` of an assembled tableau into its parts.
pub fn column_profile(star: &StarTableau, j: usize, r: usize, s: usize) -> Result<ColumnProfile> {
    let cells = star.column(j);
    let bad = |why: &str| Error::ColumnPattern(format!("column {j}: {why}"));
    if cells.is_empty() {
        return Err(bad("empty column"));
    }
    let mut k = 0;
    while k < cells.len() && cells[k].1 == Origin::HUpper {
        if cells[k].0 != k + 1 {
            return Err(bad("first part is not 1, 2, …, ℓ"));
        }
        k += 1;
    }
    let part1 = k;
    if part1 > r {
        return Err(bad("first part longer than r"));
    }
    while k < cells.len() && cells[k].1 == Origin::HLower {
        if cells[k].0 != j {
            return Err(bad("second part does not repeat the column index"));
        }
        k += 1;
    }
    let part2 = k - part1;
    let tag = if part2 > 0 {
        if part1 != r {
            return Err(bad("second part not preceded by 1, …, r"));
        }
        if j > s {
            return Err(bad("second part in a column beyond s"));
        }
        ColumnType::Typed(j)
    } else {
        ColumnType::Zero
    };
    let mut part3 = Vec::new();
    while k < cells.len() && cells[k].1 == Origin::T1 {
        if part3.last().is_some_and(|&c| c >= cells[k].0) {
            return Err(bad("third part is not strictly increasing"));
        }
        part3.push(cells[k].0);
        k += 1;
    }
    let mut part4 = Vec::new();
    while k < cells.len() && cells[k].1 == Origin::T2 {
        if part4.last().is_some_and(|&d| d > cells[k].0) {
            return Err(bad("fourth part is not weakly increasing"));
        }
        part4.push(cells[k].0);
        k += 1;
    }
    if k != cells.len() {
        return Err(bad("parts out of order"));
    }
    Ok(ColumnProfile { column: j, tag, part1, part2, part3, part4 })
}

/// The generators heading the columns of the determinant, as functions of
/// the row index.
fn column_heads(profile: &ColumnProfile, r: usize, s: usize) -> Vec<Box<dyn Fn(usize) -> Generator>> {
    let mut heads: Vec<Box<dyn Fn(usize) -> Generator>> = Vec::new();
    for a in 1..=profile.part1 {
        heads.push(Box::new(move |i| Generator::e(i, a)));
    }
    let j = profile.column;
    for _ in 0..profile.part2 {
        heads.push(Box::new(move |i| Generator::f(i, j)));
    }
    for &c in &profile.part3 {
        heads.push(Box::new(move |i| Generator::e(i, r + c)));
    }
    for &d in &profile.part4 {
        heads.push(Box::new(move |i| Generator::f(i, s + d)));
    }
    heads
}

/// The `h × h` determinant attached to a column profile.
pub fn delta_column(profile: &ColumnProfile, n: usize, r: usize, s: usize) -> Result<SuperPolynomial> {
    let h = profile.height();
    if h > n {
        return Err(Error::Dimensions(format!("column of height {h} exceeds n={n}")));
    }
    let heads = column_heads(profile, r, s);
    let matrix: Vec<Vec<SuperPolynomial>> = (1..=h)
        .map(|i| heads.iter().map(|g| SuperPolynomial::generator(g(i))).collect())
        .collect();
    determinant(&matrix)
}

/// The diagonal product of a column determinant.
pub fn column_diagonal(profile: &ColumnProfile, r: usize, s: usize) -> Result<SuperMonomial> {
    let heads = column_heads(profile, r, s);
    let diag: Vec<Generator> = heads.iter().enumerate().map(|(i, g)| g(i + 1)).collect();
    SuperMonomial::from_factors(diag)
        .map(|(_, m)| m)
        .ok_or_else(|| Error::ColumnPattern(format!("column {} repeats an odd generator", profile.column)))
}

/// `Δ_(T1,T2)` kept as the ordered list of its column determinants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnProduct {
    pub profiles: Vec<ColumnProfile>,
    pub factors: Vec<SuperPolynomial>,
}

impl ColumnProduct {
    /// Multiplies out the factors, left to right.
    pub fn expand(&self) -> SuperPolynomial {
        self.factors
            .iter()
            .fold(SuperPolynomial::one(), |acc, x| acc.multiply(x))
    }

    /// Upper bound on the number of terms of the expansion.
    pub fn term_bound(&self) -> usize {
        self.factors
            .iter()
            .fold(1usize, |acc, x| acc.saturating_mul(x.len()))
    }

    /// The leading monomial. The order is multiplicative, so the product of
    /// the factors' leading monomials is the answer whenever it is nonzero.
    pub fn leading_monomial(&self, r: usize, s: usize) -> Result<SuperMonomial> {
        let mut acc = SuperMonomial::one();
        for x in &self.factors {
            let lm = x.leading_monomial(r, s)?;
            match acc.mul(&lm) {
                Some((_, m)) => acc = m,
                None => return self.expand().leading_monomial(r, s),
            }
        }
        Ok(acc)
    }

    /// Sum of the factors' weights.
    pub fn weight(&self, amb: &Ambient, target: Target) -> Result<Vec<usize>> {
        let size = match target {
            Target::HN => amb.n,
            Target::HPQ => amb.p + amb.q,
        };
        let mut w = vec![0; size];
        for x in &self.factors {
            for (a, b) in w.iter_mut().zip(weight_of(amb, x, target)?.entries) {
                *a += b;
            }
        }
        Ok(w)
    }

    /// Whether every operator kills the product. Each factor being killed is
    /// enough; otherwise the product is expanded if it has at most `limit`
    /// terms, and the answer is `None` beyond that.
    pub fn is_annihilated(&self, amb: &Ambient, ops: &[BasisOperator], limit: usize) -> Result<Option<bool>> {
        let mut all = true;
        'ops: for op in ops {
            for x in &self.factors {
                if !act(amb, op, x)?.is_zero() {
                    all = false;
                    break 'ops;
                }
            }
        }
        if all {
            return Ok(Some(true));
        }
        if self.term_bound() > limit {
            return Ok(None);
        }
        let x = self.expand();
        for op in ops {
            if !act(amb, op, &x)?.is_zero() {
                return Ok(Some(false));
            }
        }
        Ok(Some(true))
    }
}

/// Column profiles of `T1 * T2`, left to right.
pub fn pair_profiles(pair: &TableauPair, r: usize, s: usize) -> Result<Vec<ColumnProfile>> {
    let star = star_compose(pair, r);
    (1..=pair.f().row(1)).map(|j| column_profile(&star, j, r, s)).collect()
}

/// `Δ_(T1,T2)` in factored form.
pub fn delta_pair_factored(pair: &TableauPair, n: usize, r: usize, s: usize) -> Result<ColumnProduct> {
    let profiles = pair_profiles(pair, r, s)?;
    let factors = profiles
        .iter()
        .map(|p| delta_column(p, n, r, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(ColumnProduct { profiles, factors })
}

/// `Δ_(T1,T2)`, fully expanded.
pub fn delta_pair(pair: &TableauPair, n: usize, r: usize, s: usize) -> Result<SuperPolynomial> {
    Ok(delta_pair_factored(pair, n, r, s)?.expand())
}

/// `m_(T1,T2)`: one generator per box of `T1 * T2`, chosen by the box's
/// origin, its row and its entry.
pub fn monomial_of_pair(pair: &TableauPair, r: usize, s: usize) -> Result<SuperMonomial> {
    let star = star_compose(pair, r);
    let f = pair.f();
    let mut factors = Vec::with_capacity(f.size());
    for (i, j) in f.boxes() {
        let (v, origin) = star.get(i, j).expect("box of F");
        factors.push(match origin {
            Origin::HUpper => Generator::e(i, v),
            Origin::HLower => Generator::f(i, v),
            Origin::T1 => Generator::e(i, r + v),
            Origin::T2 => Generator::f(i, s + v),
        });
    }
    SuperMonomial::from_factors(factors)
        .map(|(_, m)| m)
        .ok_or_else(|| Error::Tableau("m_(T1,T2) repeats an odd generator".into()))
}

/// The candidate basis `𝔅(F, D, α, β)`, one expanded `Δ` per pair.
pub fn basis_b(
    f: &Partition,
    d: &Partition,
    alpha: &Content,
    beta: &Content,
    n: usize,
    r: usize,
    s: usize,
) -> Result<Vec<SuperPolynomial>> {
    let pairs = enumerate_pairs(f, d, alpha, beta, n)?;
    par::map(&pairs, |p| delta_pair(p, n, r, s)).into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// `s ≤ 1`: the elements are claimed to be highest weight vectors.
    HighestWeight,
    /// `s ≥ 2`: only leading monomials and weights are checked.
    WeightVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    #[serde(rename = "E")]
    pub e: Partition,
    pub t1: TableauJson,
    pub t2: TableauJson,
    pub star: TableauJson,
    pub lm: String,
    pub m: String,
    pub lm_matches: bool,
    pub gl_n_highest: bool,
    pub weight_ok: bool,
    pub m_annihilated: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    #[serde(rename = "F")]
    pub f: Partition,
    #[serde(rename = "D")]
    pub d: Partition,
    pub alpha: Content,
    pub beta: Content,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub mode: Mode,
    pub pairs: Vec<PairReport>,
    pub distinct_lms: bool,
    pub basis_size: usize,
    #[serde(serialize_with = "serialize_count_owned")]
    pub branch_n: BigUint,
    pub kernel_dim: Option<usize>,
    pub failures: Vec<String>,
    pub passed: bool,
}

fn serialize_count_owned<S: serde::Serializer>(m: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    serialize_count(&m, s)
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest expansion attempted when factorwise checks are inconclusive.
    pub expand_limit: usize,
    /// Largest graded component handed to the kernel computation.
    pub component_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { expand_limit: 50_000, component_limit: 20_000 }
    }
}

/// Checks the construction for `(F, D, α, β)`. Here `p = r + len(α)` and
/// `q = s + len(β)`.
#[allow(clippy::too_many_arguments)]
pub fn verify_basis(
    f: &Partition,
    d: &Partition,
    alpha: &Content,
    beta: &Content,
    n: usize,
    r: usize,
    s: usize,
    opts: VerifyOptions,
) -> Result<VerifyReport> {
    let (p, q) = (r + alpha.len(), s + beta.len());
    let amb = Ambient::new(n, p, q);
    let spec = SubalgebraSpec::new(p, q, r, s, Flavor::M)?;
    if !f.in_hook(p, q) {
        return Err(Error::NotInHook { partition: f.clone(), p, q });
    }
    if !d.in_hook(r, s) {
        return Err(Error::NotInHook { partition: d.clone(), p: r, q: s });
    }
    let mode = if s <= 1 { Mode::HighestWeight } else { Mode::WeightVector };
    let pairs = enumerate_pairs(f, d, alpha, beta, n)?;
    let expected_pq = component_weight_m(&spec, d, alpha, beta)?;
    let mut expected_n = f.parts().to_vec();
    expected_n.resize(n, 0);
    let un = gl_n_raising(n);
    let um = raising_generators(&spec);

    // column determinants are shared between pairs
    let mut profiles: Vec<ColumnProfile> = Vec::new();
    let mut seen = HashSet::new();
    let mut per_pair = Vec::with_capacity(pairs.len());
    for pair in &pairs {
        let ps = pair_profiles(pair, r, s)?;
        for prof in &ps {
            if seen.insert(prof.clone()) {
                profiles.push(prof.clone());
            }
        }
        per_pair.push(ps);
    }
    let dets = par::map(&profiles, |prof| delta_column(prof, n, r, s));
    let mut cache: HashMap<ColumnProfile, SuperPolynomial> = HashMap::new();
    for (prof, det) in profiles.into_iter().zip(dets) {
        cache.insert(prof, det?);
    }

    let jobs: Vec<(&TableauPair, Vec<ColumnProfile>)> = pairs.iter().zip(per_pair).collect();
    let reports = par::map(&jobs, |(pair, ps)| -> Result<(PairReport, Vec<String>)> {
        let product = ColumnProduct {
            factors: ps.iter().map(|p| cache[p].clone()).collect(),
            profiles: ps.clone(),
        };
        let mut failures = Vec::new();
        let lm = product.leading_monomial(r, s)?;
        let m = monomial_of_pair(pair, r, s)?;
        let lm_matches = lm == m;
        let label = format!("pair E=({})", pair.e());
        if !lm_matches {
            failures.push(format!("{label}: LM {} differs from m {}", lm.render(r, s), m.render(r, s)));
        }
        let gl_n_highest = product.is_annihilated(&amb, &un, 0)? == Some(true);
        if !gl_n_highest {
            failures.push(format!("{label}: not killed by the gl_n raising operators"));
        }
        let weight_ok = match (product.weight(&amb, Target::HN), product.weight(&amb, Target::HPQ)) {
            (Ok(wn), Ok(wpq)) => wn == expected_n && wpq == expected_pq,
            _ => false,
        };
        if !weight_ok {
            failures.push(format!("{label}: wrong or inhomogeneous weight"));
        }
        let m_annihilated = product.is_annihilated(&amb, &um, opts.expand_limit)?;
        if mode == Mode::HighestWeight && m_annihilated != Some(true) {
            failures.push(match m_annihilated {
                Some(_) => format!("{label}: not killed by the raising operators of m"),
                None => format!("{label}: annihilation undecided within the expansion limit"),
            });
        }
        let star = star_compose(pair, r);
        Ok((
            PairReport {
                e: pair.e().clone(),
                t1: pair.t1().to_json(),
                t2: pair.t2().to_json(),
                star: star.tableau().to_json(),
                lm: lm.render(r, s),
                m: m.render(r, s),
                lm_matches,
                gl_n_highest,
                weight_ok,
                m_annihilated,
            },
            failures,
        ))
    });

    let mut failures = Vec::new();
    let mut pair_reports = Vec::with_capacity(reports.len());
    let mut lms = HashSet::new();
    for rep in reports {
        let (rep, fails) = rep?;
        lms.insert(rep.lm.clone());
        failures.extend(fails);
        pair_reports.push(rep);
    }
    let distinct_lms = lms.len() == pair_reports.len();
    if !distinct_lms {
        failures.push("leading monomials are not pairwise distinct".into());
    }
    let bn = branch_n(f, d, alpha, beta);
    if BigUint::from(pair_reports.len()) != bn {
        failures.push(format!("{} pairs but N = {bn}", pair_reports.len()));
    }
    let kernel_dim = if mode == Mode::HighestWeight {
        match graded_component_bounded(&amb, &expected_n, &expected_pq, opts.component_limit)? {
            Some(component) => {
                let mut ops = un.clone();
                ops.extend(um.iter().copied());
                let k = joint_kernel_dim(&amb, &ops, &component)?;
                if BigUint::from(k) != bn {
                    failures.push(format!("kernel dimension {k} but N = {bn}"));
                }
                Some(k)
            }
            None => {
                failures.push("graded component exceeds the size limit; kernel not computed".into());
                None
            }
        }
    } else {
        None
    };
    Ok(VerifyReport {
        f: f.clone(),
        d: d.clone(),
        alpha: alpha.clone(),
        beta: beta.clone(),
        n,
        p,
        q,
        r,
        s,
        mode,
        basis_size: pair_reports.len(),
        pairs: pair_reports,
        distinct_lms,
        branch_n: bn,
        kernel_dim,
        passed: failures.is_empty(),
        failures,
    })
}
