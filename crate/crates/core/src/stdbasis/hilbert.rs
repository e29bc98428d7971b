use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;

/// Hilbert data of `P/L` for a monomial ideal `L` in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// `hf[j] = dim (P/L)_j` for `j` up to and including the stabilization index (and a few more).
    pub hf: Vec<u64>,
    /// First index from which the Hilbert function agrees with the Hilbert polynomial.
    pub stabilization: usize,
    pub dim: usize,
    /// Multiplicity: the leading coefficient of the Hilbert polynomial times `(dim-1)!`,
    /// the stabilized value when `dim = 1` and the length when `dim = 0`.
    pub e: u64,
    /// `Σ hf` when the quotient is Artinian.
    pub length: Option<u64>,
    /// Numerator `Q(t)` of the reduced Hilbert series `Q(t)/(1-t)^dim`.
    pub numerator: Vec<i64>,
}

impl HilbertData {
    /// Value of the Hilbert function at `j`, extending past the stored prefix.
    pub fn value(&self, j: usize) -> u64 {
        series_coeff(&self.numerator, self.dim, j)
    }

    /// `hf[0..len]`.
    pub fn prefix(&self, len: usize) -> Vec<u64> {
        (0..len).map(|j| self.value(j)).collect()
    }

    /// The numerator `Q(t)`; for a Cohen–Macaulay graded quotient this is the h-vector.
    pub fn h_vector(&self) -> Vec<i64> {
        self.numerator.clone()
    }
}

fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens.drain(..) {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    *gens = out;
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

/// Numerator `N(t)` of the Hilbert series `N(t)/(1-t)^n` of `P/(gens)`.
fn numerator(mut gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    minimalize(&mut gens);
    if gens.is_empty() {
        return vec![1];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut n = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            n = poly_mul(&n, &f);
        }
        return n;
    }
    // pivot on a variable occurring in a non-coprime generator, preferring the most frequent one
    let mut best = (0usize, 0usize);
    for i in 0..nvars {
        let count = gens.iter().filter(|g| g.exp(i) > 0).count();
        if count > best.1 {
            best = (i, count);
        }
    }
    let x = Monomial::var(best.0);
    // N(I) = N(I + (x)) + t·N(I : x)
    let mut plus = gens.clone();
    plus.push(x);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| if g.exp(best.0) > 0 { g.with_exp(best.0, g.exp(best.0) - 1) } else { *g })
        .collect();
    let mut n = numerator(plus, nvars);
    let c = numerator(colon, nvars);
    poly_add(&mut n, &c, 1);
    n
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

/// Coefficient of `t^j` in `Q(t)/(1-t)^d`.
fn series_coeff(q: &[i64], d: usize, j: usize) -> u64 {
    let mut s: i64 = 0;
    for (i, c) in q.iter().enumerate() {
        if i > j {
            break;
        }
        s += if d == 0 {
            if i == j { *c } else { 0 }
        } else {
            c * binom((j - i + d - 1) as i64, (d - 1) as i64)
        };
    }
    s.max(0) as u64
}

/// Hilbert data of `P/(gens)` in `nvars` variables.
pub fn hilbert_of_monomials(gens: &[Monomial], nvars: usize) -> HilbertData {
    let mut q = trim(numerator(gens.to_vec(), nvars));
    let mut dim = nvars;
    // divide by (1 - t) while Q(1) = 0
    while dim > 0 && q.iter().sum::<i64>() == 0 && q.iter().any(|&c| c != 0) {
        let mut out = vec![0i64; q.len() - 1];
        let mut acc = 0i64;
        for (i, c) in q.iter().enumerate().take(q.len() - 1) {
            acc += c;
            out[i] = acc;
        }
        q = trim(out);
        dim -= 1;
    }
    if q.iter().all(|&c| c == 0) {
        return HilbertData { hf: vec![], stabilization: 0, dim: 0, e: 0, length: Some(0), numerator: vec![0] };
    }
    let e = q.iter().sum::<i64>().max(0) as u64;
    // HF agrees with the Hilbert polynomial from deg Q - dim + 1 on
    let stabilization = (q.len() as i64 - dim as i64).max(0) as usize;
    let hf: Vec<u64> = (0..stabilization + 3).map(|j| series_coeff(&q, dim, j)).collect();
    let length = if dim == 0 { Some(e) } else { None };
    HilbertData { hf, stabilization, dim, e, length, numerator: q }
}

/// Krull dimension of `P/(gens)`: the largest set of variables containing no support of a generator.
pub fn krull_dim_of_monomials(gens: &[Monomial], nvars: usize) -> usize {
    let supports: Vec<u32> = gens
        .iter()
        .map(|g| (0..nvars).filter(|&i| g.exp(i) > 0).fold(0u32, |acc, i| acc | (1 << i)))
        .collect();
    (0u32..(1 << nvars))
        .filter(|set| supports.iter().all(|s| s & !set != 0))
        .map(|set| set.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
