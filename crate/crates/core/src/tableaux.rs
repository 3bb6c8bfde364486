//! Semistandard and Littlewood-Richardson fillings, the fillings `H_D`, the
//! assembly `T1 * T2`, and the indexing sets of tableau pairs.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{partitions_between, Partition, SkewShape};

/// A content vector `(α_1, …, α_m)`; trailing zeros are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Content {
    counts: Vec<usize>,
}

impl Content {
    pub fn new(counts: Vec<usize>) -> Self {
        Content { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The content of a partition read as a weight.
    pub fn of_partition(p: &Partition) -> Self {
        Content::new(p.parts().to_vec())
    }

    /// Extends with zeros up to `len`; errors if the content is longer and the
    /// extra entries are nonzero.
    pub fn padded(&self, len: usize) -> Result<Content> {
        if self.counts.len() > len && self.counts[len..].iter().any(|&c| c != 0) {
            return Err(Error::Dimensions(format!(
                "content {:?} has more than {len} entries",
                self.counts
            )));
        }
        let mut counts = self.counts.clone();
        counts.resize(len, 0);
        Ok(Content { counts })
    }
}

impl From<Vec<usize>> for Content {
    fn from(counts: Vec<usize>) -> Self {
        Content::new(counts)
    }
}

impl<const N: usize> From<[usize; N]> for Content {
    fn from(counts: [usize; N]) -> Self {
        Content::new(counts.to_vec())
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.counts.iter().map(usize::to_string).collect();
        write!(f, "{}", text.join(","))
    }
}

impl std::str::FromStr for Content {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Content::default());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad content entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Content::new)
    }
}

/// A filling of a skew shape. `rows[i-1]` holds the entries of row `i`
/// for columns `inner_i + 1 ..= outer_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau from per-row entries of the skew boxes.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let depth = shape.outer().depth();
        let mut rows = rows;
        if rows.len() > depth {
            return Err(Error::Tableau(format!("{} rows for shape {shape}", rows.len())));
        }
        rows.resize(depth, Vec::new());
        for (i, row) in rows.iter().enumerate() {
            let want = shape.outer().row(i + 1) - shape.inner().row(i + 1);
            if row.len() != want {
                return Err(Error::Tableau(format!(
                    "row {} has {} entries, shape {shape} needs {want}",
                    i + 1,
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::Tableau("entries must be positive".into()));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn empty(shape: SkewShape) -> Self {
        let depth = shape.outer().depth();
        let rows = (1..=depth)
            .map(|i| vec![0; shape.outer().row(i) - shape.inner().row(i)])
            .collect();
        Tableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entries of the skew boxes of row `i` (1-based).
    pub fn row_entries(&self, i: usize) -> &[usize] {
        self.rows.get(i.wrapping_sub(1)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Entry at `(row, col)`, 1-based; `None` outside the skew shape.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.contains_box(row, col) {
            return None;
        }
        Some(self.rows[row - 1][col - self.shape.inner().row(row) - 1])
    }

    fn set(&mut self, row: usize, col: usize, v: usize) {
        let off = self.shape.inner().row(row);
        self.rows[row - 1][col - off - 1] = v;
    }

    /// Boxes with their entries, row-major.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.shape.boxes().map(move |(i, j)| ((i, j), self.get(i, j).unwrap()))
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn to_json(&self) -> TableauJson {
        let outer = self.shape.outer();
        let rows = (1..=outer.depth())
            .map(|i| (1..=outer.row(i)).map(|j| self.get(i, j)).collect())
            .collect();
        TableauJson {
            shape: outer.to_string(),
            inner: self.shape.inner().to_string(),
            rows,
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outer = self.shape.outer();
        for i in 1..=outer.depth() {
            let cells: Vec<String> = (1..=outer.row(i))
                .map(|j| self.get(i, j).map_or(".".to_string(), |v| v.to_string()))
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauJson {
    pub shape: String,
    pub inner: String,
    pub rows: Vec<Vec<Option<usize>>>,
}

pub fn is_semistandard(t: &Tableau) -> bool {
    t.cells().all(|((i, j), v)| {
        let left_ok = t.get(i, j - 1).is_none_or(|l| l <= v);
        let above_ok = i == 1 || t.get(i - 1, j).is_none_or(|a| a < v);
        left_ok && above_ok
    })
}

pub fn content_of(t: &Tableau) -> Content {
    let mut counts = Vec::new();
    for (_, v) in t.cells() {
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
    }
    Content::new(counts)
}

/// Backtracking over boxes in a fixed order, calling `visit` on each
/// completed filling.
struct Filler<'a> {
    order: Vec<(usize, usize)>,
    remaining: Vec<usize>,
    tableau: Tableau,
    lr: bool,
    visit: &'a mut dyn FnMut(&Tableau),
    // counts of each letter read so far, for the Yamanouchi test
    seen: Vec<usize>,
}

impl Filler<'_> {
    fn run(&mut self, k: usize) {
        if k == self.order.len() {
            (self.visit)(&self.tableau);
            return;
        }
        let (i, j) = self.order[k];
        let t = &self.tableau;
        let mut lo = if i > 1 { t.get(i - 1, j).map_or(1, |a| a + 1) } else { 1 };
        let mut hi = self.remaining.len();
        if self.lr {
            // right-to-left within a row: bounded above by the right neighbour
            if let Some(right) = t.get(i, j + 1) {
                hi = hi.min(right);
            }
        } else if j > 1 {
            if let Some(left) = t.get(i, j - 1) {
                lo = lo.max(left);
            }
        }
        for v in lo..=hi {
            if self.remaining[v - 1] == 0 {
                continue;
            }
            if self.lr && v > 1 && self.seen[v - 2] <= self.seen[v - 1] {
                continue;
            }
            self.remaining[v - 1] -= 1;
            self.tableau.set(i, j, v);
            if self.lr {
                self.seen[v - 1] += 1;
            }
            self.run(k + 1);
            if self.lr {
                self.seen[v - 1] -= 1;
            }
            self.tableau.set(i, j, 0);
            self.remaining[v - 1] += 1;
        }
    }
}

fn fill(shape: &SkewShape, content: &Content, lr: bool, visit: &mut dyn FnMut(&Tableau)) {
    if shape.size() != content.total() {
        return;
    }
    let order: Vec<(usize, usize)> = if lr {
        (1..=shape.outer().depth())
            .flat_map(|i| {
                (shape.inner().row(i) + 1..=shape.outer().row(i))
                    .rev()
                    .map(move |j| (i, j))
            })
            .collect()
    } else {
        shape.boxes().collect()
    };
    let mut filler = Filler {
        order,
        remaining: content.counts().to_vec(),
        tableau: Tableau::empty(shape.clone()),
        lr,
        visit,
        seen: vec![0; content.len()],
    };
    filler.run(0);
}

/// All semistandard fillings of `shape` with the given content, in
/// row-major lexicographic order of entries.
pub fn enumerate_ssyt(shape: &SkewShape, content: &Content) -> Vec<Tableau> {
    let mut out = Vec::new();
    fill(shape, content, false, &mut |t| out.push(t.clone()));
    out
}

/// Number of semistandard fillings, without materializing them.
pub fn count_ssyt(shape: &SkewShape, content: &Content) -> u64 {
    let mut n = 0u64;
    fill(shape, content, false, &mut |_| n += 1);
    n
}

/// Reading word: rows top to bottom, each row right to left.
pub fn word(t: &Tableau) -> Vec<usize> {
    (1..=t.shape().outer().depth())
        .flat_map(|i| t.row_entries(i).iter().rev().copied())
        .collect()
}

pub fn is_yamanouchi(w: &[usize]) -> bool {
    let mut seen: Vec<usize> = Vec::new();
    for &v in w {
        if v == 0 {
            return false;
        }
        if seen.len() < v {
            seen.resize(v, 0);
        }
        seen[v - 1] += 1;
        if v > 1 && seen[v - 1] > seen[v - 2] {
            return false;
        }
    }
    true
}

/// Littlewood-Richardson fillings of `shape` with content `content`.
pub fn enumerate_lr(shape: &SkewShape, content: &Content) -> Vec<Tableau> {
    let mut out = Vec::new();
    fill(shape, content, true, &mut |t| out.push(t.clone()));
    out
}

pub fn count_lr(shape: &SkewShape, content: &Content) -> u64 {
    let mut n = 0u64;
    fill(shape, content, true, &mut |_| n += 1);
    n
}

/// The filling `H_D`: rows `1..=min(ℓ(D), r)` hold their row index, rows
/// below `r` hold their column index.
pub fn h_tableau(d: &Partition, r: usize) -> Tableau {
    let rows = (1..=d.depth())
        .map(|i| {
            (1..=d.row(i))
                .map(|j| if i <= r { i } else { j })
                .collect()
        })
        .collect();
    Tableau {
        shape: SkewShape::straight(d.clone()),
        rows,
    }
}

/// `(T1, T2)` with `T1 ∈ SST(E/D, α)` and `T2 ∈ SST(Fᵗ/Eᵗ, β)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableauPair {
    f: Partition,
    d: Partition,
    e: Partition,
    t1: Tableau,
    t2: Tableau,
}

impl TableauPair {
    pub fn new(f: Partition, d: Partition, e: Partition, t1: Tableau, t2: Tableau) -> Result<Self> {
        let s1 = SkewShape::new(e.clone(), d.clone())?;
        let s2 = SkewShape::new(f.conjugate(), e.conjugate())?;
        if t1.shape() != &s1 || t2.shape() != &s2 {
            return Err(Error::Tableau(format!(
                "pair shapes {} and {} do not match {s1} and {s2}",
                t1.shape(),
                t2.shape()
            )));
        }
        if !is_semistandard(&t1) || !is_semistandard(&t2) {
            return Err(Error::Tableau("pair members must be semistandard".into()));
        }
        Ok(TableauPair { f, d, e, t1, t2 })
    }

    pub fn f(&self) -> &Partition {
        &self.f
    }
    pub fn d(&self) -> &Partition {
        &self.d
    }
    pub fn e(&self) -> &Partition {
        &self.e
    }
    pub fn t1(&self) -> &Tableau {
        &self.t1
    }
    pub fn t2(&self) -> &Tableau {
        &self.t2
    }
}

/// Which part of `T1 * T2` a box came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Origin {
    /// `H_D` in rows `1..=r`.
    HUpper,
    /// `H_D` below row `r`.
    HLower,
    T1,
    T2,
}

/// The assembled filling of shape `F` together with the origin of each box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarTableau {
    tableau: Tableau,
    origins: Vec<Vec<Origin>>,
}

impl StarTableau {
    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn shape(&self) -> &Partition {
        self.tableau.shape().outer()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<(usize, Origin)> {
        let v = self.tableau.get(row, col)?;
        Some((v, self.origins[row - 1][col - 1]))
    }

    /// Column `j` from top to bottom.
    pub fn column(&self, j: usize) -> Vec<(usize, Origin)> {
        (1..=self.shape().column(j))
            .map(|i| self.get(i, j).unwrap())
            .collect()
    }

    /// Recovers `(T1, T2)` from the assembled filling: `T1` lives on the
    /// `T1`-boxes, `T2` on the transposes of the `T2`-boxes.
    pub fn split(&self, d: &Partition, e: &Partition) -> Result<(Tableau, Tableau)> {
        let f = self.shape();
        let s1 = SkewShape::new(e.clone(), d.clone())?;
        let s2 = SkewShape::new(f.conjugate(), e.conjugate())?;
        let mut t1 = Tableau::empty(s1);
        let mut t2 = Tableau::empty(s2);
        for ((i, j), v) in self.tableau.cells() {
            match self.origins[i - 1][j - 1] {
                Origin::T1 => {
                    if !t1.shape().contains_box(i, j) {
                        return Err(Error::Tableau(format!("T1 box ({i},{j}) outside E/D")));
                    }
                    t1.set(i, j, v)
                }
                Origin::T2 => {
                    if !t2.shape().contains_box(j, i) {
                        return Err(Error::Tableau(format!("T2 box ({i},{j}) outside F/E")));
                    }
                    t2.set(j, i, v)
                }
                _ => {}
            }
        }
        if t1.cells().any(|(_, v)| v == 0) || t2.cells().any(|(_, v)| v == 0) {
            return Err(Error::Tableau("origins do not cover E/D and F/E".into()));
        }
        Ok((t1, t2))
    }
}

impl fmt::Display for StarTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tableau)
    }
}

/// Assembles `T1 * T2` on `F`: `H_D` on `D`, `T1` on `E/D`, and `T2` on
/// `F/E` with box `(i, j)` of `T2` placed at `(j, i)`.
pub fn star_compose(pair: &TableauPair, r: usize) -> StarTableau {
    let f = &pair.f;
    let h = h_tableau(&pair.d, r);
    let mut rows: Vec<Vec<usize>> = (1..=f.depth()).map(|i| vec![0; f.row(i)]).collect();
    let mut origins: Vec<Vec<Origin>> =
        (1..=f.depth()).map(|i| vec![Origin::T1; f.row(i)]).collect();
    for ((i, j), v) in h.cells() {
        rows[i - 1][j - 1] = v;
        origins[i - 1][j - 1] = if i <= r { Origin::HUpper } else { Origin::HLower };
    }
    for ((i, j), v) in pair.t1.cells() {
        rows[i - 1][j - 1] = v;
        origins[i - 1][j - 1] = Origin::T1;
    }
    for ((i, j), v) in pair.t2.cells() {
        rows[j - 1][i - 1] = v;
        origins[j - 1][i - 1] = Origin::T2;
    }
    StarTableau {
        tableau: Tableau {
            shape: SkewShape::straight(f.clone()),
            rows,
        },
        origins,
    }
}

/// The set `𝒯(F, D, α, β)`: intermediate `E` in lexicographic order, then
/// `T1`, then `T2`, each in enumeration order. `n` only bounds `ℓ(F)`.
pub fn enumerate_pairs(
    f: &Partition,
    d: &Partition,
    alpha: &Content,
    beta: &Content,
    n: usize,
) -> Result<Vec<TableauPair>> {
    if f.depth() > n {
        return Err(Error::TooManyRows { partition: f.clone(), max: n });
    }
    let mut out = Vec::new();
    if !f.contains(d) || f.size() != d.size() + alpha.total() + beta.total() {
        return Ok(out);
    }
    let ft = f.conjugate();
    for e in partitions_between(d, f, d.size() + alpha.total()) {
        let s1 = SkewShape::new(e.clone(), d.clone())?;
        let s2 = SkewShape::new(ft.clone(), e.conjugate())?;
        let firsts = enumerate_ssyt(&s1, alpha);
        if firsts.is_empty() {
            continue;
        }
        let seconds = enumerate_ssyt(&s2, beta);
        for t1 in &firsts {
            for t2 in &seconds {
                out.push(TableauPair {
                    f: f.clone(),
                    d: d.clone(),
                    e: e.clone(),
                    t1: t1.clone(),
                    t2: t2.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The (p,q)-semistandard tableaux of shape `F` and weight `(α, β)`.
pub fn enumerate_pq_tableaux(f: &Partition, alpha: &Content, beta: &Content) -> Vec<TableauPair> {
    enumerate_pairs(f, &Partition::empty(), alpha, beta, f.depth())
        .expect("depth bound holds by construction")
}
