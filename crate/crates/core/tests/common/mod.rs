//! Independent reference computations used by the integration tests. Shapes
//! are plain `Vec<usize>` here so nothing is shared with the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

use superbranch::{Content, Partition, SkewShape};

pub type Expansion = BTreeMap<Vec<usize>, i64>;

pub fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

pub fn content(c: &[usize]) -> Content {
    Content::new(c.to_vec())
}

fn trim(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Every `ν ⊇ μ` with `ν/μ` a horizontal strip of size `k`.
pub fn horizontal_strips(mu: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(mu: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == mu.len() + 1 {
            if left == 0 {
                out.push(trim(cur.clone()));
            }
            return;
        }
        let base = mu.get(i).copied().unwrap_or(0);
        let cap = if i == 0 { base + left } else { mu[i - 1] };
        for v in base..=cap.min(base + left) {
            cur.push(v);
            go(mu, i + 1, left - (v - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(mu, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Every `ν ⊇ μ` with `ν/μ` a vertical strip of size `k`.
pub fn vertical_strips(mu: &[usize], k: usize) -> Vec<Vec<usize>> {
    let rows = mu.len() + k;
    let mut out = Vec::new();
    for mask in 0u32..(1 << rows) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let nu: Vec<usize> = (0..rows)
            .map(|i| mu.get(i).copied().unwrap_or(0) + ((mask >> i) & 1) as usize)
            .collect();
        if nu.windows(2).all(|w| w[0] >= w[1]) {
            out.push(trim(nu));
        }
    }
    out
}

fn pieri(exp: &Expansion, k: usize, vertical: bool) -> Expansion {
    let mut out = Expansion::new();
    for (mu, c) in exp {
        let strips = if vertical { vertical_strips(mu, k) } else { horizontal_strips(mu, k) };
        for nu in strips {
            *out.entry(nu).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `s_start · h_{α_1} · h_{α_2} ⋯` by repeated single-row Pieri steps.
pub fn iterated_h(start: &[usize], alpha: &[usize]) -> Expansion {
    let mut exp = Expansion::from([(trim(start.to_vec()), 1)]);
    for &a in alpha {
        exp = pieri(&exp, a, false);
    }
    exp
}

/// `s_start · e_{β_1} · e_{β_2} ⋯` by repeated single-column Pieri steps.
pub fn iterated_e(start: &[usize], beta: &[usize]) -> Expansion {
    let mut exp = Expansion::from([(trim(start.to_vec()), 1)]);
    for &b in beta {
        exp = pieri(&exp, b, true);
    }
    exp
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(k - 1) {
        // insert k-1 at every position; moving it left past j entries flips the sign j times
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, k - 1);
            let flips = perm.len() - pos;
            out.push((p, if flips % 2 == 0 { sign } else { -sign }));
        }
    }
    out
}

/// `s_D · s_E` in the Schur basis, with `s_E` expanded by Jacobi-Trudi
/// into products of `h`'s and each product applied by Pieri steps.
pub fn schur_product(d: &[usize], e: &[usize]) -> Expansion {
    let e = trim(e.to_vec());
    let l = e.len();
    let mut total = Expansion::new();
    for (sigma, sign) in permutations(l) {
        let mut ks = Vec::with_capacity(l);
        let mut ok = true;
        for i in 0..l {
            let k = e[i] as i64 - i as i64 + sigma[i] as i64;
            if k < 0 {
                ok = false;
                break;
            }
            ks.push(k as usize);
        }
        if !ok {
            continue;
        }
        for (nu, c) in iterated_h(d, &ks) {
            *total.entry(nu).or_insert(0) += sign * c;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

/// Kostka number by trying every filling of the boxes.
pub fn kostka_brute(outer: &[usize], inner: &[usize], alpha: &[usize]) -> u64 {
    let boxes: Vec<(usize, usize)> = outer
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (inner.get(i).copied().unwrap_or(0)..len).map(move |j| (i, j)))
        .collect();
    if boxes.len() != alpha.iter().sum::<usize>() {
        return 0;
    }
    let m = alpha.len();
    if boxes.is_empty() {
        return 1;
    }
    if m == 0 {
        return 0;
    }
    let total = m.pow(boxes.len() as u32);
    let mut count = 0;
    let mut filling = vec![0usize; boxes.len()];
    for code in 0..total {
        let mut c = code;
        for v in filling.iter_mut() {
            *v = c % m + 1;
            c /= m;
        }
        let mut counts = vec![0; m];
        for &v in &filling {
            counts[v - 1] += 1;
        }
        if counts != alpha {
            continue;
        }
        let at = |i: usize, j: usize| boxes.iter().position(|&b| b == (i, j)).map(|k| filling[k]);
        let ok = boxes.iter().zip(&filling).all(|(&(i, j), &v)| {
            let left = if j > 0 { at(i, j - 1) } else { None };
            let up = if i > 0 { at(i - 1, j) } else { None };
            left.is_none_or(|l| l <= v) && up.is_none_or(|u| u < v)
        });
        if ok {
            count += 1;
        }
    }
    count
}

/// Hook content formula for `dim ρ^D_m`.
#[allow(clippy::needless_range_loop)]
pub fn hook_content(d: &[usize], m: usize) -> u128 {
    let conj: Vec<usize> = (0..d.first().copied().unwrap_or(0))
        .map(|j| d.iter().filter(|&&x| x > j).count())
        .collect();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (i, &len) in d.iter().enumerate() {
        for j in 0..len {
            let c = m as i64 + j as i64 - i as i64;
            if c <= 0 {
                return 0;
            }
            num *= c as u128;
            den *= ((len - j - 1) + (conj[j] - i - 1) + 1) as u128;
        }
    }
    num / den
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `dim S^k(ℂ^{p|q}) = Σ_i dim S^i(ℂ^p) · dim Λ^{k-i}(ℂ^q)`.
pub fn sym_power_dim(k: usize, p: usize, q: usize) -> u128 {
    (0..=k)
        .map(|i| {
            let even = if p == 0 { (i == 0) as u128 } else { binomial(p + i - 1, i) };
            even * binomial(q, k - i)
        })
        .sum()
}

/// `dim Λ^k(ℂ^{p|q}) = Σ_i dim Λ^i(ℂ^p) · dim S^{k-i}(ℂ^q)`.
pub fn ext_power_dim(k: usize, p: usize, q: usize) -> u128 {
    (0..=k)
        .map(|i| {
            let odd = if q == 0 { (k == i) as u128 } else { binomial(q + k - i - 1, k - i) };
            binomial(p, i) * odd
        })
        .sum()
}

/// All partitions of `n`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for v in 1..=rest.min(max) {
            cur.push(v);
            go(rest - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `n` into `len` parts.
pub fn compositions(n: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn contains(outer: &[usize], inner: &[usize]) -> bool {
    inner.len() <= outer.len() && inner.iter().zip(outer).all(|(a, b)| a <= b)
}

pub fn conjugate(p: &[usize]) -> Vec<usize> {
    (0..p.first().copied().unwrap_or(0))
        .map(|j| p.iter().filter(|&&x| x > j).count())
        .collect()
}

pub fn skew(outer: &[usize], inner: &[usize]) -> SkewShape {
    SkewShape::new(part(outer), part(inner)).unwrap()
}
