//! Double description over the integers.
//!
//! Computes generators of the cone `{z : <h, z> >= 0 for every row h}` by
//! incremental insertion of constraints with the combinatorial adjacency test.
//! All vectors are kept primitive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

use crate::exact::primitive;

/// Generators of a polyhedral cone: `cone(rays) + span(lines)`.
#[derive(Clone, Debug, Default)]
pub(crate) struct Cone {
    pub rays: Vec<Vec<BigInt>>,
    pub lines: Vec<Vec<BigInt>>,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn contains(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: Bits,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `s*a - t*b`, made primitive.
fn combine(s: &BigInt, a: &[BigInt], t: &BigInt, b: &[BigInt]) -> Vec<BigInt> {
    primitive(a.iter().zip(b).map(|(x, y)| s * x - t * y).collect())
}

pub(crate) fn generators(dim: usize, constraints: &[Vec<BigInt>]) -> Cone {
    let m = constraints.len();
    let mut lines: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, h) in constraints.iter().enumerate() {
        debug_assert_eq!(h.len(), dim);
        if let Some(j) = lines.iter().position(|l| !dot(h, l).is_zero()) {
            let mut p = lines.swap_remove(j);
            let mut s = dot(h, &p);
            if s.is_negative() {
                p.iter_mut().for_each(|x| *x = -&*x);
                s = -s;
            }
            for l in lines.iter_mut() {
                let t = dot(h, l);
                if !t.is_zero() {
                    *l = combine(&s, l, &t, &p);
                }
            }
            for r in rays.iter_mut() {
                let t = dot(h, &r.v);
                if !t.is_zero() {
                    r.v = combine(&s, &r.v, &t, &p);
                }
                r.zeros.set(k);
            }
            let mut zeros = Bits::new(m);
            (0..k).for_each(|i| zeros.set(i));
            rays.push(Ray { v: p, zeros });
            continue;
        }

        let vals: Vec<BigInt> = rays.iter().map(|r| dot(h, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, val) in rays.iter_mut().zip(&vals) {
                if val.is_zero() {
                    r.zeros.set(k);
                }
            }
            continue;
        }

        // Two extreme rays are adjacent iff no third ray is tight on all
        // constraints they share, and they share at least d - 2 of them.
        let pointed_dim = dim - lines.len();
        let mut fresh = Vec::new();
        for &ip in &pos {
            for &in_ in &neg {
                let common = rays[ip].zeros.and(&rays[in_].zeros);
                if common.count() + 2 < pointed_dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != ip && i != in_ && r.zeros.contains(&common));
                if blocked {
                    continue;
                }
                let a = &vals[ip];
                let b = -&vals[in_];
                let v: Vec<BigInt> = rays[in_]
                    .v
                    .iter()
                    .zip(&rays[ip].v)
                    .map(|(n, p)| a * n + &b * p)
                    .collect();
                let mut zeros = common;
                zeros.set(k);
                fresh.push(Ray { v: primitive(v), zeros });
            }
        }
        let mut kept = Vec::with_capacity(rays.len() + fresh.len());
        for (r, val) in rays.into_iter().zip(&vals) {
            match val.sign() {
                num_bigint::Sign::Minus => {}
                num_bigint::Sign::NoSign => {
                    let mut r = r;
                    r.zeros.set(k);
                    kept.push(r);
                }
                num_bigint::Sign::Plus => kept.push(r),
            }
        }
        kept.extend(fresh);
        rays = kept;
    }

    Cone { rays: rays.into_iter().map(|r| r.v).collect(), lines }
}

/// Reduces lines to a primitive row echelon basis and strips line components
/// from rays, so equal cones give identical output after sorting.
pub(crate) fn canonicalize(cone: Cone) -> Cone {
    let lines = echelon_basis(&cone.lines);
    let mut rays: Vec<Vec<BigInt>> = cone
        .rays
        .into_iter()
        .map(|r| project_out(&r, &lines))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(primitive)
        .collect();
    rays.sort_by(|a, b| lex(a, b));
    rays.dedup();
    Cone { rays, lines }
}

pub(crate) fn lex(a: &[BigInt], b: &[BigInt]) -> Ordering {
    a.iter().cmp(b.iter())
}

/// Fraction-free reduced echelon form; rows primitive with positive pivots.
fn echelon_basis(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let n = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let a = m[r][c].clone();
                let b = m[i][c].clone();
                let g = a.gcd(&b);
                let (fa, fb) = (&a / &g, &b / &g);
                let row_r = m[r].clone();
                m[i] = primitive(m[i].iter().zip(&row_r).map(|(x, y)| &fa * x - &fb * y).collect());
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    for (row, &c) in m.iter_mut().zip(&pivots) {
        if row[c].is_negative() {
            row.iter_mut().for_each(|x| *x = -&*x);
        }
        *row = primitive(std::mem::take(row));
    }
    m
}

/// Orthogonal projection onto the complement of `span(lines)`, scaled to
/// stay integral. `lines` must be linearly independent.
pub(crate) fn project_out(v: &[BigInt], lines: &[Vec<BigInt>]) -> Vec<BigInt> {
    if lines.is_empty() {
        return v.to_vec();
    }
    use crate::exact::{QMatrix, Rational};
    let k = lines.len();
    let mut gram = QMatrix::zeros(k, k);
    let mut rhs = Vec::with_capacity(k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = Rational::from_integer(dot(&lines[i], &lines[j]));
        }
        rhs.push(Rational::from_integer(dot(&lines[i], v)));
    }
    let coef = gram.solve(&rhs).expect("independent lines");
    let proj: Vec<Rational> = (0..v.len())
        .map(|c| {
            let s: Rational = (0..k).map(|i| &coef[i] * Rational::from_integer(lines[i][c].clone())).sum();
            Rational::from_integer(v[c].clone()) - s
        })
        .collect();
    crate::exact::primitive_integer(&proj)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sorted(mut v: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
        v.sort_by(|a, b| lex(a, b));
        v
    }

    #[test]
    fn orthant_cone() {
        let c = generators(2, &[iv(&[1, 0]), iv(&[0, 1])]);
        assert!(c.lines.is_empty());
        assert_eq!(sorted(c.rays), vec![iv(&[0, 1]), iv(&[1, 0])]);
    }

    #[test]
    fn half_space_keeps_a_line() {
        let c = canonicalize(generators(2, &[iv(&[1, 1])]));
        assert_eq!(c.lines, vec![iv(&[1, -1])]);
        assert_eq!(c.rays, vec![iv(&[1, 1])]);
    }

    #[test]
    fn square_cone_has_four_rays() {
        // Homogenized square |x|,|y| <= 1 with t >= 0.
        let rows = [iv(&[-1, 0, 1]), iv(&[1, 0, 1]), iv(&[0, -1, 1]), iv(&[0, 1, 1]), iv(&[0, 0, 1])];
        let c = canonicalize(generators(3, &rows));
        assert!(c.lines.is_empty());
        assert_eq!(
            c.rays,
            vec![iv(&[-1, -1, 1]), iv(&[-1, 1, 1]), iv(&[1, -1, 1]), iv(&[1, 1, 1])]
        );
    }

    #[test]
    fn infeasible_cone_is_zero() {
        let c = generators(1, &[iv(&[1]), iv(&[-1])]);
        assert!(c.rays.is_empty() && c.lines.is_empty());
    }

    #[test]
    fn redundant_constraints() {
        let rows = [iv(&[1, 0]), iv(&[2, 0]), iv(&[0, 1]), iv(&[1, 1])];
        let c = canonicalize(generators(2, &rows));
        assert_eq!(c.rays, vec![iv(&[0, 1]), iv(&[1, 0])]);
    }

    #[test]
    fn echelon_is_canonical() {
        let a = echelon_basis(&[iv(&[2, 4, 0]), iv(&[0, 0, 3])]);
        let b = echelon_basis(&[iv(&[1, 2, 5]), iv(&[-1, -2, 1])]);
        assert_eq!(a, b);
    }
}
