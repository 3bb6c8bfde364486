use std::fmt::Write as _;

use anyhow::{anyhow, bail, ensure, Context, Result};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use superbranch::hwv::{delta_pair_factored, monomial_of_pair, verify_basis, VerifyOptions, VerifyReport};
use superbranch::lie_action::{oracle_m, oracle_q, Flavor, SubalgebraSpec};
use superbranch::multiplicities::{
    branch_n, branch_to_even, branch_to_m, branch_to_pair, branch_to_sub, dim_irrep, kostka, lr_coefficient,
    weight_pairs, weights as weight_table, BranchingTable,
};
use superbranch::partitions::{hook_partitions, hook_subdiagrams, partitions_between};
use superbranch::superalgebra::Ambient;
use superbranch::tableaux::{enumerate_pairs, star_compose};
use superbranch::{par, Content, Partition, SkewShape};

use crate::{BranchTo, OracleTo, RunConfig};

/// What a command prints, in both formats, and whether it counts as a pass.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, passed: true }
    }
}

const WINDOW: [(usize, usize); 4] = [(1, 1), (2, 1), (1, 2), (2, 2)];

fn count(m: &BigUint) -> Value {
    match u64::try_from(m) {
        Ok(v) => json!(v),
        Err(_) => json!(m.to_string()),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

impl RunConfig {
    fn f(&self) -> Result<&Partition> {
        self.f.as_ref().ok_or_else(|| anyhow!("--F is required"))
    }

    fn d_or_empty(&self) -> Partition {
        self.d.clone().unwrap_or_default()
    }

    fn n(&self) -> Result<usize> {
        Ok(self.n.unwrap_or(self.f()?.depth()))
    }

    fn pq(&self) -> Result<(usize, usize)> {
        match (self.p, self.q) {
            (Some(p), Some(q)) => Ok((p, q)),
            _ => bail!("--p and --q are required"),
        }
    }

    /// `(p, q, r, s)` with `r ≤ p` and `s ≤ q`; `r` and `s` default to zero.
    fn split(&self) -> Result<(usize, usize, usize, usize)> {
        let (p, q) = self.pq()?;
        let (r, s) = (self.r.unwrap_or(0), self.s.unwrap_or(0));
        ensure!(r <= p && s <= q, "need r <= p and s <= q, got r={r} s={s} p={p} q={q}");
        Ok((p, q, r, s))
    }

    /// Split plus `α`, `β` padded to lengths `p - r` and `q - s`. Without
    /// `--p`/`--q` the lengths of `α`, `β` fix them.
    fn weighted(&self) -> Result<(usize, usize, usize, usize, Content, Content)> {
        let (r, s) = (self.r.unwrap_or(0), self.s.unwrap_or(0));
        let alpha = self.alpha.clone().unwrap_or_default();
        let beta = self.beta.clone().unwrap_or_default();
        let p = self.p.unwrap_or(r + alpha.len());
        let q = self.q.unwrap_or(s + beta.len());
        ensure!(r <= p && s <= q, "need r <= p and s <= q, got r={r} s={s} p={p} q={q}");
        let alpha = alpha.padded(p - r).context("--alpha")?;
        let beta = beta.padded(q - s).context("--beta")?;
        Ok((p, q, r, s, alpha, beta))
    }
}

pub fn cmd_kostka(c: &RunConfig) -> Result<Output> {
    let f = c.f()?;
    let d = c.d_or_empty();
    let alpha = c.alpha.clone().ok_or_else(|| anyhow!("--alpha is required"))?;
    let shape = SkewShape::new(f.clone(), d.clone())?;
    let k = kostka(&shape, &alpha);
    Ok(Output::ok(
        json!({ "F": f, "D": d, "alpha": alpha, "kostka": count(&k) }),
        format!("K[{shape}, ({alpha})] = {k}\n"),
    ))
}

pub fn cmd_lr(c: &RunConfig) -> Result<Output> {
    let f = c.f()?;
    let d = c.d.as_ref().ok_or_else(|| anyhow!("--D is required"))?;
    let e = c.e.as_ref().ok_or_else(|| anyhow!("--E is required"))?;
    let v = lr_coefficient(f, d, e);
    Ok(Output::ok(
        json!({ "F": f, "D": d, "E": e, "lr": count(&v) }),
        format!("c[{f}; {d}, {e}] = {v}\n"),
    ))
}

fn table_text(t: &BranchingTable) -> String {
    let mut out = String::new();
    for (label, m) in t.iter() {
        let _ = write!(out, "D=({})", label.d);
        if let Some(e) = &label.e {
            let _ = write!(out, "  E=({e})");
        }
        if let (Some(a), Some(b)) = (&label.alpha, &label.beta) {
            let _ = write!(out, "  alpha=({a})  beta=({b})");
        }
        let _ = writeln!(out, "  mult={m}");
    }
    out
}

pub fn cmd_branch(c: &RunConfig, to: BranchTo) -> Result<Output> {
    let f = c.f()?;
    let n = c.n()?;
    let (p, q, r, s) = c.split()?;
    let table = match to {
        BranchTo::Pair => branch_to_pair(f, r, s, p - r, q - s, n)?,
        BranchTo::Even => branch_to_even(f, p, q, n)?,
        BranchTo::M => branch_to_m(f, r, s, p - r, q - s, n)?,
        BranchTo::Sub => branch_to_sub(f, r, s, p - r, q - s, n)?,
    };
    eprintln!("branch: {} nonzero entries", table.len());
    Ok(Output::ok(to_value(&table), table_text(&table)))
}

pub fn cmd_weights(c: &RunConfig) -> Result<Output> {
    let f = c.f()?;
    let (p, q) = c.pq()?;
    let table = weight_table(f, p, q)?;
    let mut text = String::new();
    let rows: Vec<Value> = table
        .iter()
        .map(|((a, b), m)| {
            let _ = writeln!(text, "alpha=({a})  beta=({b})  mult={m}");
            json!({ "alpha": a, "beta": b, "mult": count(m) })
        })
        .collect();
    Ok(Output::ok(Value::Array(rows), text))
}

pub fn cmd_dim(c: &RunConfig) -> Result<Output> {
    let f = c.f()?;
    let (p, q) = c.pq()?;
    let d = dim_irrep(f, p, q)?;
    Ok(Output::ok(
        json!({ "F": f, "p": p, "q": q, "dim": count(&d) }),
        format!("dim L[{f}; {p}|{q}] = {d}\n"),
    ))
}

pub fn cmd_hwv(c: &RunConfig, expand_limit: usize) -> Result<Output> {
    let f = c.f()?;
    let d = c.d_or_empty();
    let n = c.n()?;
    let (p, q, r, s, alpha, beta) = c.weighted()?;
    ensure!(f.in_hook(p, q), "F=({f}) is not in the ({p},{q})-hook");
    ensure!(d.in_hook(r, s), "D=({d}) is not in the ({r},{s})-hook");
    let pairs = enumerate_pairs(f, &d, &alpha, &beta, n)?;
    eprintln!("hwv: {} tableau pairs", pairs.len());
    let mut text = String::new();
    let mut rows = Vec::with_capacity(pairs.len());
    for pair in &pairs {
        let star = star_compose(pair, r);
        let product = delta_pair_factored(pair, n, r, s)?;
        let lm = product.leading_monomial(r, s)?.render(r, s);
        let m = monomial_of_pair(pair, r, s)?.render(r, s);
        let columns: Vec<String> = product.factors.iter().map(|x| x.render(r, s)).collect();
        let delta = (product.term_bound() <= expand_limit).then(|| product.expand());
        let _ = writeln!(text, "E = ({})", pair.e());
        let _ = write!(text, "T1:\n{}T2:\n{}T1*T2:\n{}", pair.t1(), pair.t2(), star.tableau());
        for (j, col) in columns.iter().enumerate() {
            let _ = writeln!(text, "column {}: {col}", j + 1);
        }
        match &delta {
            Some(x) => {
                let _ = writeln!(text, "delta = {}", x.render(r, s));
            }
            None => {
                let _ = writeln!(text, "delta: not expanded (up to {} terms)", product.term_bound());
            }
        }
        let _ = writeln!(text, "LM = {lm}\nm  = {m}\n");
        rows.push(json!({
            "E": pair.e(),
            "t1": pair.t1().to_json(),
            "t2": pair.t2().to_json(),
            "star": star.tableau().to_json(),
            "columns": columns,
            "delta": delta.as_ref().map(|x| x.render(r, s)),
            "delta_terms": delta.as_ref().map(|x| x.len()),
            "lm": lm,
            "m": m,
        }));
    }
    let json = json!({
        "F": f, "D": d, "alpha": alpha, "beta": beta,
        "n": n, "p": p, "q": q, "r": r, "s": s,
        "pairs": rows,
    });
    Ok(Output::ok(json, text))
}

fn report_text(rep: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "F=({}) D=({}) alpha=({}) beta=({}) n={} p={} q={} r={} s={} mode={:?}",
        rep.f, rep.d, rep.alpha, rep.beta, rep.n, rep.p, rep.q, rep.r, rep.s, rep.mode
    );
    for pair in &rep.pairs {
        let flag = |b: bool| if b { "ok" } else { "FAIL" };
        let ann = match pair.m_annihilated {
            Some(true) => "yes",
            Some(false) => "no",
            None => "unknown",
        };
        let _ = writeln!(
            out,
            "  E=({})  LM {}  gl_n {}  weight {}  killed by m: {ann}\n    LM = {}",
            pair.e,
            flag(pair.lm_matches),
            flag(pair.gl_n_highest),
            flag(pair.weight_ok),
            pair.lm
        );
    }
    let kernel = rep.kernel_dim.map_or("-".to_string(), |k| k.to_string());
    let _ = writeln!(
        out,
        "  basis {}  N {}  kernel {}  distinct LMs {}",
        rep.basis_size, rep.branch_n, kernel, rep.distinct_lms
    );
    for f in &rep.failures {
        let _ = writeln!(out, "  failure: {f}");
    }
    let _ = writeln!(out, "  {}", if rep.passed { "passed" } else { "FAILED" });
    out
}

pub fn cmd_verify(c: &RunConfig, expand_limit: usize, component_limit: usize) -> Result<Output> {
    let f = c.f()?;
    let n = c.n()?;
    let (p, q, r, s, alpha, beta) = c.weighted()?;
    ensure!(f.in_hook(p, q), "F=({f}) is not in the ({p},{q})-hook");
    let opts = VerifyOptions { expand_limit, component_limit };
    let size = f.size().checked_sub(alpha.total() + beta.total());
    let ds: Vec<Partition> = match (&c.d, size) {
        (Some(d), _) => vec![d.clone()],
        (None, Some(k)) => hook_subdiagrams(f, k, r, s)
            .into_iter()
            .filter(|d| branch_n(f, d, &alpha, &beta) != BigUint::default())
            .collect(),
        (None, None) => Vec::new(),
    };
    let mut reports = Vec::with_capacity(ds.len());
    for d in &ds {
        let rep = verify_basis(f, d, &alpha, &beta, n, r, s, opts)?;
        eprintln!(
            "verify: D=({d}) {} pairs, {}",
            rep.basis_size,
            if rep.passed { "passed" } else { "FAILED" }
        );
        reports.push(rep);
    }
    let passed = reports.iter().all(|r| r.passed);
    let text: String = reports.iter().map(report_text).collect();
    let json = if c.d.is_some() {
        to_value(&reports[0])
    } else {
        json!({
            "F": f, "alpha": alpha, "beta": beta,
            "n": n, "p": p, "q": q, "r": r, "s": s,
            "reports": reports,
            "passed": passed,
        })
    };
    Ok(Output { json, text, passed })
}

#[derive(Clone)]
struct Case {
    f: Partition,
    d: Partition,
    e: Option<Partition>,
    alpha: Content,
    beta: Content,
    n: usize,
    p: usize,
    q: usize,
    r: usize,
    s: usize,
}

impl Case {
    fn describe(&self) -> Value {
        let mut v = json!({
            "F": self.f, "D": self.d,
            "n": self.n, "p": self.p, "q": self.q, "r": self.r, "s": self.s,
        });
        if let Some(e) = &self.e {
            v["E"] = to_value(e);
        } else {
            v["alpha"] = to_value(&self.alpha);
            v["beta"] = to_value(&self.beta);
        }
        v
    }

    /// The predicted multiplicity and the kernel dimension.
    fn run(&self) -> superbranch::Result<(BigUint, usize)> {
        let amb = Ambient::new(self.n, self.p, self.q);
        match &self.e {
            Some(e) => {
                let spec = SubalgebraSpec::new(self.p, self.q, self.r, self.s, Flavor::Q)?;
                Ok((lr_coefficient(&self.f, &self.d, e), oracle_q(&amb, &spec, &self.f, &self.d, e)?))
            }
            None => {
                let spec = SubalgebraSpec::new(self.p, self.q, self.r, self.s, Flavor::M)?;
                Ok((
                    branch_n(&self.f, &self.d, &self.alpha, &self.beta),
                    oracle_m(&amb, &spec, &self.f, &self.d, &self.alpha, &self.beta)?,
                ))
            }
        }
    }
}

fn oracle_cases(to: OracleTo, max_size: usize, window: &[(usize, usize)]) -> Vec<Case> {
    let mut cases = Vec::new();
    for size in 1..=max_size {
        for &(p, q) in window {
            for f in hook_partitions(size, p, q, usize::MAX) {
                let n = f.depth();
                for r in 0..=p {
                    for s in 0..=q {
                        let ds = (0..=size).flat_map(|k| hook_subdiagrams(&f, k, r, s));
                        for d in ds {
                            let rest = size - d.size();
                            let base = Case {
                                f: f.clone(),
                                d: d.clone(),
                                e: None,
                                alpha: Content::default(),
                                beta: Content::default(),
                                n,
                                p,
                                q,
                                r,
                                s,
                            };
                            match to {
                                OracleTo::M => {
                                    for (alpha, beta) in weight_pairs(rest, p - r, q - s) {
                                        cases.push(Case { alpha, beta, ..base.clone() });
                                    }
                                }
                                OracleTo::Pair => {
                                    for e in partitions_between(&Partition::empty(), &f, rest) {
                                        if e.in_hook(p - r, q - s) {
                                            cases.push(Case { e: Some(e), ..base.clone() });
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    cases
}

pub fn cmd_oracle(c: &RunConfig, to: OracleTo, max_size: usize) -> Result<Output> {
    let window: Vec<(usize, usize)> = match (c.p, c.q) {
        (Some(p), Some(q)) => vec![(p, q)],
        (None, None) => WINDOW.to_vec(),
        _ => bail!("give both --p and --q, or neither"),
    };
    let cases = oracle_cases(to, max_size, &window);
    eprintln!("oracle: {} components", cases.len());
    let results = par::map(&cases, Case::run);
    let mut mismatches = Vec::new();
    let mut nonzero = 0usize;
    for (case, res) in cases.iter().zip(results) {
        let (want, got) = res?;
        if want != BigUint::default() {
            nonzero += 1;
        }
        if want != BigUint::from(got) {
            let mut v = case.describe();
            v["predicted"] = count(&want);
            v["kernel"] = json!(got);
            mismatches.push(v);
        }
    }
    let passed = mismatches.is_empty();
    let name = match to {
        OracleTo::M => "m",
        OracleTo::Pair => "pair",
    };
    let mut text = format!(
        "oracle --to {name}: {} components, {nonzero} nonzero, {} mismatches\n",
        cases.len(),
        mismatches.len()
    );
    for m in &mismatches {
        let _ = writeln!(text, "  mismatch: {m}");
    }
    let json = json!({
        "to": name,
        "max_size": max_size,
        "window": window,
        "checked": cases.len(),
        "nonzero": nonzero,
        "mismatches": mismatches,
        "passed": passed,
    });
    Ok(Output { json, text, passed })
}
