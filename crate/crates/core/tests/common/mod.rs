//! Test-only oracles. They share no code with the library: polynomials are
//! plain maps from exponent vectors to coefficients and every algorithm is
//! the most direct one available.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

use mcmrep_core::Polynomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type OraclePoly = BTreeMap<Vec<u32>, BigRational>;

fn weight(e: &[u32], w: &[u32]) -> u64 {
    e.iter().zip(w).map(|(&a, &b)| a as u64 * b as u64).sum()
}

/// Weighted degree first, then the smaller exponent in the last differing
/// variable wins.
pub fn grevlex(a: &[u32], b: &[u32], w: &[u32]) -> Ordering {
    match weight(a, w).cmp(&weight(b, w)) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lead(p: &OraclePoly, w: &[u32]) -> Option<(Vec<u32>, BigRational)> {
    p.iter()
        .max_by(|x, y| grevlex(x.0, y.0, w))
        .map(|(e, c)| (e.clone(), c.clone()))
}

fn add_scaled(acc: &mut OraclePoly, p: &OraclePoly, c: &BigRational, shift: &[u32]) {
    for (e, x) in p {
        let e2: Vec<u32> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
        let v = acc.get(&e2).cloned().unwrap_or_else(BigRational::zero) + x * c;
        if v.is_zero() {
            acc.remove(&e2);
        } else {
            acc.insert(e2, v);
        }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Full reduction of every term.
pub fn reduce(f: &OraclePoly, g: &[OraclePoly], w: &[u32]) -> OraclePoly {
    let mut p = f.clone();
    let mut rem = OraclePoly::new();
    while let Some((e, c)) = lead(&p, w) {
        let hit = g.iter().find_map(|h| {
            let (he, hc) = lead(h, w)?;
            divides(&he, &e).then(|| (h, he, hc))
        });
        match hit {
            Some((h, he, hc)) => {
                let shift: Vec<u32> = e.iter().zip(&he).map(|(a, b)| a - b).collect();
                add_scaled(&mut p, h, &(-c / hc), &shift);
            }
            None => {
                p.remove(&e);
                rem.insert(e, c);
            }
        }
    }
    rem
}

fn monic(p: &OraclePoly, w: &[u32]) -> OraclePoly {
    let (_, c) = lead(p, w).unwrap();
    p.iter().map(|(e, x)| (e.clone(), x / &c)).collect()
}

/// Reduced Groebner basis by the textbook loop over all S-polynomials,
/// sorted by ascending leading monomial.
pub fn naive_groebner(gens: &[OraclePoly], w: &[u32]) -> Vec<OraclePoly> {
    let mut g: Vec<OraclePoly> = gens.iter().filter(|p| !p.is_empty()).cloned().collect();
    loop {
        let mut added = false;
        let n = g.len();
        for i in 0..n {
            for j in i + 1..n {
                let (ei, ci) = lead(&g[i], w).unwrap();
                let (ej, cj) = lead(&g[j], w).unwrap();
                let l: Vec<u32> = ei.iter().zip(&ej).map(|(a, b)| *a.max(b)).collect();
                let si: Vec<u32> = l.iter().zip(&ei).map(|(a, b)| a - b).collect();
                let sj: Vec<u32> = l.iter().zip(&ej).map(|(a, b)| a - b).collect();
                let mut s = OraclePoly::new();
                add_scaled(&mut s, &g[i], &(BigRational::one() / ci), &si);
                add_scaled(&mut s, &g[j], &(-BigRational::one() / cj), &sj);
                let r = reduce(&s, &g, w);
                if !r.is_empty() && !g.contains(&r) {
                    g.push(r);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    // minimize, then inter-reduce
    let leads: Vec<Vec<u32>> = g.iter().map(|p| lead(p, w).unwrap().0).collect();
    let mut keep: Vec<OraclePoly> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, l)| j != i && divides(l, &leads[i]) && (l != &leads[i] || j < i));
        if !redundant {
            keep.push(monic(p, w));
        }
    }
    let mut out: Vec<OraclePoly> = (0..keep.len())
        .map(|i| {
            let others: Vec<OraclePoly> =
                keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
            let (e, c) = lead(&keep[i], w).unwrap();
            let mut tail = keep[i].clone();
            tail.remove(&e);
            let mut r = reduce(&tail, &others, w);
            r.insert(e, c);
            r
        })
        .collect();
    out.sort_by(|a, b| grevlex(&lead(a, w).unwrap().0, &lead(b, w).unwrap().0, w));
    out
}

pub fn from_library(p: &Polynomial<mcmrep_core::Rational>) -> OraclePoly {
    p.terms().map(|(m, c)| (m.exps().to_vec(), c.clone())).collect()
}

/// Integer-coefficient polynomial from distinct `(coefficient, exponents)` terms.
pub fn int_poly(terms: &[(i64, &[u32])]) -> OraclePoly {
    terms
        .iter()
        .filter(|(c, _)| *c != 0)
        .map(|(c, e)| (e.to_vec(), BigRational::from_integer((*c).into())))
        .collect()
}

/// Squares the generic matrix `[[a y, b y^2], [c, d y]]` in `Z[a, b, c, d, y]`
/// and returns, for every entry and every power of `y`, the coefficient as a
/// polynomial in `a, b, c, d` (exponent vectors of length 4).
pub fn square_generic_x2_matrix() -> Vec<BTreeMap<[u32; 4], i64>> {
    type P = BTreeMap<[u32; 5], i64>;
    fn mono(ab: usize, ypow: u32) -> P {
        let mut e = [0u32; 5];
        e[ab] = 1;
        e[4] = ypow;
        [(e, 1)].into_iter().collect()
    }
    fn mul(p: &P, q: &P) -> P {
        let mut out = P::new();
        for (e1, c1) in p {
            for (e2, c2) in q {
                let mut e = [0u32; 5];
                for k in 0..5 {
                    e[k] = e1[k] + e2[k];
                }
                *out.entry(e).or_insert(0) += c1 * c2;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
    fn add(p: &P, q: &P) -> P {
        let mut out = p.clone();
        for (e, c) in q {
            *out.entry(*e).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }
    let m = [[mono(0, 1), mono(1, 2)], [mono(2, 0), mono(3, 1)]];
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let entry = add(&mul(&m[i][0], &m[0][j]), &mul(&m[i][1], &m[1][j]));
            let mut by_y: BTreeMap<u32, BTreeMap<[u32; 4], i64>> = BTreeMap::new();
            for (e, c) in entry {
                by_y.entry(e[4]).or_default().insert([e[0], e[1], e[2], e[3]], c);
            }
            out.extend(by_y.into_values());
        }
    }
    out
}

/// Brute-force census of `Rep_S(k[x,y]/(x^2), {0,1})` over `F_q`.
///
/// Points are `(a, b, c, d)` with `μ = [[a y, b y^2], [c, d y]]` and
/// `μ^2 = 0`; they are grouped by testing every pair for an invertible
/// `α = [[s, t y], [0, u]]` with `α μ = ν α`.
pub struct BruteCensus {
    pub points: Vec<[u64; 4]>,
    pub orbit_sizes: Vec<usize>,
}

pub fn brute_force_x2_census(q: u64) -> BruteCensus {
    // entries are polynomials in y, as coefficient vectors mod q
    type Y = Vec<u64>;
    let padd = |a: &Y, b: &Y| -> Y {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % q)
            .collect()
    };
    let pmul = |a: &Y, b: &Y| -> Y {
        let mut out = vec![0; a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % q;
            }
        }
        out
    };
    let is_zero = |a: &Y| a.iter().all(|&x| x == 0);
    let mono = |c: u64, k: usize| -> Y {
        let mut v = vec![0; k + 1];
        v[k] = c;
        v
    };
    let mmul = |m: &[[Y; 2]; 2], n: &[[Y; 2]; 2]| -> [[Y; 2]; 2] {
        let e = |i: usize, j: usize| padd(&pmul(&m[i][0], &n[0][j]), &pmul(&m[i][1], &n[1][j]));
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    };
    let eq = |m: &[[Y; 2]; 2], n: &[[Y; 2]; 2]| {
        (0..2).all(|i| (0..2).all(|j| is_zero(&padd(&m[i][j], &pmul(&n[i][j], &vec![q - 1])))))
    };
    let mat = |p: &[u64; 4]| [[mono(p[0], 1), mono(p[1], 2)], [mono(p[2], 0), mono(p[3], 1)]];

    let mut points = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = mat(&[a, b, c, d]);
                    let sq = mmul(&m, &m);
                    if sq.iter().flatten().all(is_zero) {
                        points.push([a, b, c, d]);
                    }
                }
            }
        }
    }

    let mut group = Vec::new();
    for s in 1..q {
        for t in 0..q {
            for u in 1..q {
                group.push([[mono(s, 0), mono(t, 1)], [mono(0, 0), mono(u, 0)]]);
            }
        }
    }
    let iso = |p: &[u64; 4], r: &[u64; 4]| {
        let (m, n) = (mat(p), mat(r));
        group.iter().any(|g| eq(&mmul(g, &m), &mmul(&n, g)))
    };
    let mut class: Vec<Option<usize>> = vec![None; points.len()];
    let mut orbit_sizes = Vec::new();
    for i in 0..points.len() {
        if class[i].is_some() {
            continue;
        }
        let id = orbit_sizes.len();
        let mut size = 0;
        for j in i..points.len() {
            if class[j].is_none() && iso(&points[i], &points[j]) {
                class[j] = Some(id);
                size += 1;
            }
        }
        orbit_sizes.push(size);
    }
    BruteCensus { points, orbit_sizes }
}

/// Coefficient of `t^d` in `1 / prod (1 - t^w)`.
pub fn free_count(weights: &[u32], d: usize) -> u64 {
    let mut ways = vec![0u64; d + 1];
    ways[0] = 1;
    for &w in weights {
        for i in w as usize..=d {
            ways[i] += ways[i - w as usize];
        }
    }
    ways[d]
}
