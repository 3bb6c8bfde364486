//! Kostka numbers, Littlewood-Richardson coefficients, branching
//! multiplicities and dimensions.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::par;
use crate::partitions::{compositions, partitions_between, partitions_of, Partition, SkewShape};
use crate::tableaux::{count_lr, count_ssyt, Content};

/// `K_{shape, content}`.
pub fn kostka(shape: &SkewShape, content: &Content) -> BigUint {
    BigUint::from(count_ssyt(shape, content))
}

/// `c^F_{D,E}`; zero unless `D ⊆ F` and `|F| = |D| + |E|`.
pub fn lr_coefficient(f: &Partition, d: &Partition, e: &Partition) -> BigUint {
    if !f.contains(d) || f.size() != d.size() + e.size() {
        return BigUint::zero();
    }
    let shape = SkewShape::new(f.clone(), d.clone()).expect("containment checked");
    BigUint::from(count_lr(&shape, &Content::of_partition(e)))
}

/// `N(F, D, α, β) = Σ_E K_{E/D,α} K_{Fᵗ/Eᵗ,β}`.
pub fn branch_n(f: &Partition, d: &Partition, alpha: &Content, beta: &Content) -> BigUint {
    if !f.contains(d) || f.size() != d.size() + alpha.total() + beta.total() {
        return BigUint::zero();
    }
    let ft = f.conjugate();
    let mut total = BigUint::zero();
    for e in partitions_between(d, f, d.size() + alpha.total()) {
        let lower = count_ssyt(&SkewShape::new(e.clone(), d.clone()).unwrap(), alpha);
        if lower == 0 {
            continue;
        }
        let upper = count_ssyt(&SkewShape::new(ft.clone(), e.conjugate()).unwrap(), beta);
        total += BigUint::from(lower) * BigUint::from(upper);
    }
    total
}

/// All `(α, β)` with `α ∈ ℤ₊^a`, `β ∈ ℤ₊^b` and `|α| + |β| = total`.
pub fn weight_pairs(total: usize, a: usize, b: usize) -> Vec<(Content, Content)> {
    compositions(total, a + b)
        .into_iter()
        .map(|mut c| {
            let beta = c.split_off(a);
            (Content::new(c), Content::new(beta))
        })
        .collect()
}

fn check_depth(f: &Partition, n: usize) -> Result<()> {
    if f.depth() > n {
        return Err(Error::TooManyRows { partition: f.clone(), max: n });
    }
    Ok(())
}

fn check_hook(f: &Partition, p: usize, q: usize) -> Result<()> {
    if !f.in_hook(p, q) {
        return Err(Error::NotInHook { partition: f.clone(), p, q });
    }
    Ok(())
}

fn sum(values: Vec<BigUint>) -> BigUint {
    values.into_iter().fold(BigUint::zero(), |a, b| a + b)
}

/// `Ñ(F, D) = Σ_{α ∈ ℤ₊^{r'}, β ∈ ℤ₊^{s'}} N(F, D, α, β)`.
pub fn branch_ntilde(
    f: &Partition,
    d: &Partition,
    rprime: usize,
    sprime: usize,
    n: usize,
) -> Result<BigUint> {
    check_depth(f, n)?;
    if !f.contains(d) {
        return Ok(BigUint::zero());
    }
    let weights = weight_pairs(f.size() - d.size(), rprime, sprime);
    Ok(sum(par::map(&weights, |(a, b)| branch_n(f, d, a, b))))
}

/// `N'(F, α, β)`, the dimension of the `(α, β)` weight space of `L^F_{p|q}`.
pub fn weight_mult(f: &Partition, alpha: &Content, beta: &Content) -> BigUint {
    branch_n(f, &Partition::empty(), alpha, beta)
}

/// All nonzero weight multiplicities of `L^F_{p|q}`, keyed by `(α, β)`.
pub fn weights(f: &Partition, p: usize, q: usize) -> Result<BTreeMap<(Content, Content), BigUint>> {
    check_hook(f, p, q)?;
    let all = weight_pairs(f.size(), p, q);
    let mults = par::map(&all, |(a, b)| weight_mult(f, a, b));
    Ok(all
        .into_iter()
        .zip(mults)
        .filter(|(_, m)| !m.is_zero())
        .collect())
}

/// `dim L^F_{p|q}`.
pub fn dim_irrep(f: &Partition, p: usize, q: usize) -> Result<BigUint> {
    check_hook(f, p, q)?;
    let all = weight_pairs(f.size(), p, q);
    Ok(sum(par::map(&all, |(a, b)| weight_mult(f, a, b))))
}

/// Dimension of the irreducible polynomial `gl_m`-module `ρ^D_m`.
pub fn dim_gl(d: &Partition, m: usize) -> Result<BigUint> {
    check_depth(d, m)?;
    let shape = SkewShape::straight(d.clone());
    Ok(compositions(d.size(), m)
        .into_iter()
        .map(|c| kostka(&shape, &Content::new(c)))
        .fold(BigUint::zero(), |a, b| a + b))
}

/// `Σ_{E,H} c^F_{D,E} K_{H,α} K_{Eᵗ/Hᵗ,β}`.
pub fn alt_branch_n(f: &Partition, d: &Partition, alpha: &Content, beta: &Content) -> BigUint {
    if !f.contains(d) || f.size() != d.size() + alpha.total() + beta.total() {
        return BigUint::zero();
    }
    let mut total = BigUint::zero();
    for e in partitions_of(f.size() - d.size()) {
        if !f.contains(&e) {
            continue;
        }
        let c = lr_coefficient(f, d, &e);
        if c.is_zero() {
            continue;
        }
        total += c * weight_mult(&e, alpha, beta);
    }
    total
}

/// Row label of a branching table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub d: Partition,
    pub e: Option<Partition>,
    pub alpha: Option<Content>,
    pub beta: Option<Content>,
}

impl Label {
    pub fn pair(d: Partition, e: Partition) -> Self {
        Label { d, e: Some(e), alpha: None, beta: None }
    }

    pub fn weighted(d: Partition, alpha: Content, beta: Content) -> Self {
        Label { d, e: None, alpha: Some(alpha), beta: Some(beta) }
    }

    pub fn single(d: Partition) -> Self {
        Label { d, e: None, alpha: None, beta: None }
    }
}

/// A decomposition: label ↦ positive multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BranchingTable {
    entries: BTreeMap<Label, BigUint>,
}

impl BranchingTable {
    fn from_entries(entries: impl IntoIterator<Item = (Label, BigUint)>) -> Self {
        BranchingTable {
            entries: entries.into_iter().filter(|(_, m)| !m.is_zero()).collect(),
        }
    }

    pub fn entries(&self) -> &BTreeMap<Label, BigUint> {
        &self.entries
    }

    pub fn get(&self, label: &Label) -> BigUint {
        self.entries.get(label).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &BigUint)> {
        self.entries.iter()
    }
}

#[derive(Serialize)]
struct Row<'a> {
    #[serde(rename = "D")]
    d: &'a Partition,
    #[serde(rename = "E", skip_serializing_if = "Option::is_none")]
    e: Option<&'a Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<&'a [usize]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<&'a [usize]>,
    #[serde(serialize_with = "serialize_count")]
    mult: &'a BigUint,
}

/// Writes a count as a JSON number when it fits in `u64`, else as a string.
pub fn serialize_count<S: Serializer>(m: &&BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match m.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&m.to_string()),
    }
}

impl Serialize for BranchingTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.iter().map(|(l, m)| Row {
            d: &l.d,
            e: l.e.as_ref(),
            alpha: l.alpha.as_ref().map(Content::counts),
            beta: l.beta.as_ref().map(Content::counts),
            mult: m,
        }))
    }
}

/// Diagrams `D ⊆ F` in the (r,s)-hook, smallest first.
fn hook_subshapes(f: &Partition, r: usize, s: usize) -> Vec<Partition> {
    (0..=f.size())
        .flat_map(|k| partitions_between(&Partition::empty(), f, k))
        .filter(|d| d.in_hook(r, s))
        .collect()
}

fn check_split(f: &Partition, r: usize, s: usize, rprime: usize, sprime: usize, n: usize) -> Result<()> {
    check_depth(f, n)?;
    check_hook(f, r + rprime, s + sprime)
}

/// Restriction of `L^F_{p|q}` to `gl(r|s) ⊕ gl(r'|s')`: `(D, E) ↦ c^F_{D,E}`.
pub fn branch_to_pair(
    f: &Partition,
    r: usize,
    s: usize,
    rprime: usize,
    sprime: usize,
    n: usize,
) -> Result<BranchingTable> {
    check_split(f, r, s, rprime, sprime, n)?;
    let pairs: Vec<(Partition, Partition)> = hook_subshapes(f, r, s)
        .into_iter()
        .flat_map(|d| {
            partitions_of(f.size() - d.size())
                .into_iter()
                .filter(|e| f.contains(e) && e.in_hook(rprime, sprime))
                .map(move |e| (d.clone(), e))
        })
        .collect();
    let mults = par::map(&pairs, |(d, e)| lr_coefficient(f, d, e));
    Ok(BranchingTable::from_entries(
        pairs.into_iter().zip(mults).map(|((d, e), m)| (Label::pair(d, e), m)),
    ))
}

/// Restriction of `L^F_{p|q}` to the even part `gl_p ⊕ gl_q`.
///
/// The entry at `(D, G)` is the multiplicity of `ρ^D_p ⊗ ρ^{Gᵗ}_q`: the second
/// slot is recorded transposed, so `G` has at most `q` columns.
pub fn branch_to_even(f: &Partition, p: usize, q: usize, n: usize) -> Result<BranchingTable> {
    branch_to_pair(f, p, 0, 0, q, n)
}

/// Restriction to `gl(r|s) ⊕ 𝔥_{r'} ⊕ 𝔥_{s'}`: `(D, α, β) ↦ N(F, D, α, β)`.
pub fn branch_to_m(
    f: &Partition,
    r: usize,
    s: usize,
    rprime: usize,
    sprime: usize,
    n: usize,
) -> Result<BranchingTable> {
    check_split(f, r, s, rprime, sprime, n)?;
    let labels: Vec<(Partition, Content, Content)> = hook_subshapes(f, r, s)
        .into_iter()
        .flat_map(|d| {
            weight_pairs(f.size() - d.size(), rprime, sprime)
                .into_iter()
                .map(move |(a, b)| (d.clone(), a, b))
        })
        .collect();
    let mults = par::map(&labels, |(d, a, b)| branch_n(f, d, a, b));
    Ok(BranchingTable::from_entries(
        labels.into_iter().zip(mults).map(|((d, a, b), m)| (Label::weighted(d, a, b), m)),
    ))
}

/// Restriction to `gl(r|s)`: `D ↦ Ñ(F, D)`.
pub fn branch_to_sub(
    f: &Partition,
    r: usize,
    s: usize,
    rprime: usize,
    sprime: usize,
    n: usize,
) -> Result<BranchingTable> {
    check_split(f, r, s, rprime, sprime, n)?;
    let ds = hook_subshapes(f, r, s);
    let mults = par::map(&ds, |d| {
        let weights = weight_pairs(f.size() - d.size(), rprime, sprime);
        sum(weights.iter().map(|(a, b)| branch_n(f, d, a, b)).collect())
    });
    Ok(BranchingTable::from_entries(
        ds.into_iter().zip(mults).map(|(d, m)| (Label::single(d), m)),
    ))
}
