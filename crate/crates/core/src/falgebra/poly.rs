//! Univariate polynomials over GF(q) with squarefree, distinct-degree and
//! equal-degree (Cantor–Zassenhaus) factorization.
//!
//! A polynomial is a coefficient vector, lowest degree first, with no
//! trailing zeros. The zero polynomial is the empty vector.

use rand::Rng;

use super::field::{Fe, Field};

pub type Poly = Vec<Fe>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(a: &[Fe]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub fn one() -> Poly {
    vec![Fe::ONE]
}

/// The polynomial `x`.
pub fn x() -> Poly {
    vec![Fe::ZERO, Fe::ONE]
}

pub fn is_one(a: &[Fe]) -> bool {
    a.len() == 1 && a[0] == Fe::ONE
}

pub fn add(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
    let n = a.len().max(b.len());
    let get = |p: &[Fe], i: usize| p.get(i).copied().unwrap_or(Fe::ZERO);
    trim((0..n).map(|i| f.add(get(a, i), get(b, i))).collect())
}

pub fn sub(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
    let n = a.len().max(b.len());
    let get = |p: &[Fe], i: usize| p.get(i).copied().unwrap_or(Fe::ZERO);
    trim((0..n).map(|i| f.sub(get(a, i), get(b, i))).collect())
}

pub fn mul(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Fe::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

pub fn scale(f: &Field, c: Fe, a: &[Fe]) -> Poly {
    trim(a.iter().map(|&x| f.mul(c, x)).collect())
}

pub fn monic(f: &Field, a: &[Fe]) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => scale(f, f.inv(lead), a),
    }
}

/// Quotient and remainder. Panics when dividing by zero.
pub fn divrem(f: &Field, a: &[Fe], b: &[Fe]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut rem = trim(a.to_vec());
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let inv_lead = f.inv(b[db]);
    let mut quot = vec![Fe::ZERO; rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = f.mul(rem[dr], inv_lead);
        let shift = dr - db;
        quot[shift] = c;
        for (i, &bc) in b.iter().enumerate().take(db + 1) {
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, bc));
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub fn rem(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
    divrem(f, a, b).1
}

/// Monic greatest common divisor (zero when both inputs are zero).
pub fn gcd(f: &Field, a: &[Fe], b: &[Fe]) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

/// Returns `(g, s, t)` with `s a + t b = g`, `g` monic.
pub fn ext_gcd(f: &Field, a: &[Fe], b: &[Fe]) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (one(), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), one());
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s2 = sub(f, &s0, &mul(f, &q, &s1));
        let t2 = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (Vec::new(), s0, t0),
        Some(&lead) => {
            let inv = f.inv(lead);
            (scale(f, inv, &r0), scale(f, inv, &s0), scale(f, inv, &t0))
        }
    }
}

pub fn derivative(f: &Field, a: &[Fe]) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int(i as i64), c)).collect())
}

pub fn mulmod(f: &Field, a: &[Fe], b: &[Fe], m: &[Fe]) -> Poly {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: &Field, a: &[Fe], mut n: u64, m: &[Fe]) -> Poly {
    let mut base = rem(f, a, m);
    let mut acc = rem(f, &one(), m);
    while n > 0 {
        if n & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        base = mulmod(f, &base, &base, m);
        n >>= 1;
    }
    acc
}

pub fn eval(f: &Field, a: &[Fe], x: Fe) -> Fe {
    a.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

/// p-th root of a polynomial all of whose exponents are multiples of p.
fn pth_root(f: &Field, a: &[Fe]) -> Poly {
    let p = f.characteristic() as usize;
    // Coefficient p-th root: c^(q/p).
    let root_exp = (f.order() / f.characteristic()) as u64;
    trim(a.iter().step_by(p).map(|&c| f.pow(c, root_exp)).collect())
}

/// Squarefree decomposition of a monic polynomial: pairs `(g_i, i)` with
/// `a = prod g_i^i`, each `g_i` squarefree and pairwise coprime.
pub fn squarefree_factorization(f: &Field, a: &[Fe]) -> Vec<(Poly, usize)> {
    let a = monic(f, a);
    let mut out = Vec::new();
    if degree(&a).unwrap_or(0) == 0 {
        return out;
    }
    let p = f.characteristic() as usize;
    let d = derivative(f, &a);
    if d.is_empty() {
        for (g, m) in squarefree_factorization(f, &pth_root(f, &a)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = gcd(f, &a, &d);
    let mut w = divrem(f, &a, &c).0;
    let mut i = 1;
    while !is_one(&w) {
        let y = gcd(f, &w, &c);
        let fac = divrem(f, &w, &y).0;
        if !is_one(&fac) {
            out.push((monic(f, &fac), i));
        }
        w = y;
        c = divrem(f, &c, &w).0;
        i += 1;
    }
    if !is_one(&c) {
        for (g, m) in squarefree_factorization(f, &pth_root(f, &c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
pub fn distinct_degree_factorization(f: &Field, a: &[Fe]) -> Vec<(Poly, usize)> {
    let q = f.order() as u64;
    let mut rest = monic(f, a);
    let mut out = Vec::new();
    let mut h = x();
    let mut i = 1;
    while degree(&rest).unwrap_or(0) >= 2 * i {
        h = powmod(f, &h, q, &rest);
        let g = gcd(f, &sub(f, &h, &x()), &rest);
        if !is_one(&g) {
            rest = divrem(f, &rest, &g).0;
            h = rem(f, &h, &rest);
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = degree(&rest) {
        if d > 0 {
            out.push((rest, d));
        }
    }
    out
}

/// Splits a monic squarefree product of irreducibles of degree `d`.
pub fn equal_degree_factorization<R: Rng>(f: &Field, a: &[Fe], d: usize, rng: &mut R) -> Vec<Poly> {
    let n = degree(a).expect("nonzero polynomial");
    if n == d {
        return vec![monic(f, a)];
    }
    let q = f.order() as u64;
    loop {
        let cand: Poly = trim((0..n).map(|_| f.element(rng.gen_range(0..f.order()))).collect());
        if degree(&cand).unwrap_or(0) == 0 {
            continue;
        }
        let b = if f.characteristic() == 2 {
            // Absolute trace map to GF(2) composed with the degree-d extension.
            let steps = f.degree() as usize * d;
            let mut t = cand.clone();
            let mut acc = cand.clone();
            for _ in 1..steps {
                t = mulmod(f, &t, &t, a);
                acc = add(f, &acc, &t);
            }
            acc
        } else {
            // cand^((q^d - 1)/2) = (cand * cand^q * ... * cand^(q^(d-1)))^((q-1)/2)
            let mut frob = cand.clone();
            let mut norm = cand.clone();
            for _ in 1..d {
                frob = powmod(f, &frob, q, a);
                norm = mulmod(f, &norm, &frob, a);
            }
            sub(f, &powmod(f, &norm, (q - 1) / 2, a), &one())
        };
        let g = gcd(f, &b, a);
        if let Some(dg) = degree(&g) {
            if dg > 0 && dg < n {
                let h = divrem(f, a, &g).0;
                let mut out = equal_degree_factorization(f, &g, d, rng);
                out.extend(equal_degree_factorization(f, &h, d, rng));
                return out;
            }
        }
    }
}

/// Full factorization into monic irreducibles with multiplicities, sorted by
/// (degree, coefficients).
pub fn factor<R: Rng>(f: &Field, a: &[Fe], rng: &mut R) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    for (sq, mult) in squarefree_factorization(f, a) {
        for (block, d) in distinct_degree_factorization(f, &sq) {
            for irr in equal_degree_factorization(f, &block, d, rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|x, y| {
        (x.0.len(), x.0.iter().rev().collect::<Vec<_>>()).cmp(&(y.0.len(), y.0.iter().rev().collect::<Vec<_>>()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(f: &Field, xs: &[i64]) -> Poly {
        trim(xs.iter().map(|&x| f.from_int(x)).collect())
    }

    fn product(f: &Field, fs: &[(Poly, usize)]) -> Poly {
        fs.iter().fold(one(), |acc, (g, m)| (0..*m).fold(acc, |acc, _| mul(f, &acc, g)))
    }

    #[test]
    fn ext_gcd_bezout() {
        let f = Field::new(5, 1).unwrap();
        let a = p(&f, &[1, 0, 1]);
        let b = p(&f, &[2, 1]);
        let (g, s, t) = ext_gcd(&f, &a, &b);
        assert_eq!(add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b)), g);
    }

    #[test]
    fn factor_recovers_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (pr, e) in [(2, 1), (3, 1), (2, 2), (3, 2), (5, 1)] {
            let f = Field::new(pr, e).unwrap();
            // (x^2 + x + 1)^2 (x + 1)^3 x
            let a = mul(&f, &mul(&f, &p(&f, &[1, 1, 1]), &p(&f, &[1, 1, 1])), &p(&f, &[0, 1]));
            let a = mul(&f, &a, &mul(&f, &p(&f, &[1, 1]), &mul(&f, &p(&f, &[1, 1]), &p(&f, &[1, 1]))));
            let fs = factor(&f, &a, &mut rng);
            assert_eq!(product(&f, &fs), monic(&f, &a), "over GF({pr}^{e})");
            for (g, _) in &fs {
                // Irreducible: only itself among DDF blocks.
                let dd = distinct_degree_factorization(&f, g);
                assert_eq!(dd.len(), 1);
                assert_eq!(dd[0].1, degree(g).unwrap());
            }
        }
    }

    #[test]
    fn x_pow_q_minus_x_splits_into_linears() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = Field::new(3, 2).unwrap();
        let mut a = vec![Fe::ZERO; 10];
        a[9] = Fe::ONE;
        a[1] = f.neg(Fe::ONE);
        let fs = factor(&f, &a, &mut rng);
        assert_eq!(fs.len(), 9);
        assert!(fs.iter().all(|(g, m)| g.len() == 2 && *m == 1));
    }

    #[test]
    fn squarefree_in_characteristic_p() {
        let f = Field::new(2, 1).unwrap();
        // x^4 + 1 = (x + 1)^4 over GF(2)
        let a = p(&f, &[1, 0, 0, 0, 1]);
        assert_eq!(squarefree_factorization(&f, &a), vec![(p(&f, &[1, 1]), 4)]);
    }
}
