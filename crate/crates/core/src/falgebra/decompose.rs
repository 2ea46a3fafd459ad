//! Primitive idempotents, points, the Jacobson radical and idempotent
//! lifting for algebras over a splitting field.
//!
//! The decomposition splits corners `eAe` recursively with idempotents read
//! off from coprime factors of minimal polynomials. A corner is accepted as
//! local only with a certificate: every basis element is a scalar plus a
//! nilpotent, and those nilpotent parts span a nilpotent subalgebra of
//! codimension one. Primitive idempotents are then grouped into points by a
//! Peirce-block linkage test, and the radical is read off block by block.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::Algebra;
use super::field::{Fe, Field};
use super::linalg::{axpy, is_zero, scale, sub, unit_vec, Matrix, Subspace, Vector};
use super::poly::{self, Poly};
use crate::error::{Error, Result};

/// Random candidates tried per corner before giving up.
pub const SPLIT_BUDGET: usize = 64;

/// A primitive idempotent `e` whose corner `eAe` is certified local with
/// residue field `k`.
#[derive(Clone, Debug)]
pub struct LocalIdempotent {
    pub idempotent: Vector,
    pub corner: Subspace,
    /// `J(eAe)`.
    pub radical: Subspace,
    residue: Vector,
    lead: usize,
}

impl LocalIdempotent {
    fn new(f: &Field, idempotent: Vector, corner: Subspace, radical: Subspace) -> Self {
        let residue = radical.reduce(f, &idempotent);
        let lead = residue.iter().position(|c| !c.is_zero()).expect("idempotent lies in its own radical");
        LocalIdempotent { idempotent, corner, radical, residue, lead }
    }

    /// The scalar `c` with `y - c e` in `J(eAe)`, for `y` in `eAe`.
    pub fn residue_scalar(&self, f: &Field, y: &[Fe]) -> Fe {
        let r = self.radical.reduce(f, y);
        f.div(r[self.lead], self.residue[self.lead])
    }
}

/// Row-echelon tracker that reports the first linear relation among the
/// inserted vectors.
struct Relations {
    f: Field,
    rows: Vec<(Vector, Vector, usize)>,
    count: usize,
    cap: usize,
}

impl Relations {
    fn new(f: &Field, cap: usize) -> Self {
        Relations { f: f.clone(), rows: Vec::new(), count: 0, cap }
    }

    /// Inserts `v`; on dependence returns coefficients `c` with
    /// `sum c_i v_i = 0` and `c_last = 1`.
    fn insert(&mut self, mut v: Vector) -> Option<Vector> {
        let f = &self.f;
        let mut coeffs = unit_vec(self.cap, self.count);
        self.count += 1;
        for (row, rc, p) in &self.rows {
            let c = v[*p];
            if !c.is_zero() {
                let nc = f.neg(c);
                axpy(f, &mut v, nc, row);
                axpy(f, &mut coeffs, nc, rc);
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => {
                coeffs.truncate(self.count);
                Some(coeffs)
            }
            Some(p) => {
                let inv = f.inv(v[p]);
                self.rows.push((scale(f, inv, &v), scale(f, inv, &coeffs), p));
                None
            }
        }
    }
}

/// Minimal polynomial of `x` inside the corner with unit `e`.
pub fn minimal_polynomial(alg: &Algebra, e: &[Fe], x: &[Fe]) -> Poly {
    let mut rel = Relations::new(alg.field(), alg.dim() + 2);
    let mut pw = e.to_vec();
    loop {
        if let Some(c) = rel.insert(pw.clone()) {
            return c;
        }
        pw = alg.mul(&pw, x);
    }
}

/// `g(x)` computed in the corner with unit `e`.
pub fn eval_in_corner(alg: &Algebra, g: &[Fe], x: &[Fe], e: &[Fe]) -> Vector {
    let f = alg.field();
    let mut acc = alg.zero();
    for &c in g.iter().rev() {
        acc = alg.mul(&acc, x);
        axpy(f, &mut acc, c, e);
    }
    acc
}

/// `eAe`.
pub fn corner(alg: &Algebra, e: &[Fe]) -> Subspace {
    let f = alg.field();
    let right = Subspace::span(f, alg.dim(), (0..alg.dim()).map(|i| alg.mul(&alg.basis_element(i), e)));
    Subspace::span(f, alg.dim(), right.basis().iter().map(|v| alg.mul(e, v)))
}

/// `eAf`.
pub fn peirce_block(alg: &Algebra, e: &[Fe], f_: &[Fe]) -> Subspace {
    let f = alg.field();
    let right = Subspace::span(f, alg.dim(), (0..alg.dim()).map(|i| alg.mul(&alg.basis_element(i), f_)));
    Subspace::span(f, alg.dim(), right.basis().iter().map(|v| alg.mul(e, v)))
}

enum Analysis {
    Split(Vector),
    Local(LocalIdempotent),
}

/// An idempotent of the corner `e` from `x`, when the minimal polynomial of
/// `x` has at least two distinct irreducible factors.
fn try_split<R: Rng>(alg: &Algebra, e: &[Fe], x: &[Fe], rng: &mut R) -> (Option<Vector>, Poly) {
    let f = alg.field();
    let m = minimal_polynomial(alg, e, x);
    let factors = poly::factor(f, &m, rng);
    if factors.len() < 2 {
        return (None, factors.into_iter().next().map(|(p, _)| p).unwrap_or_default());
    }
    let (ref p0, k0) = factors[0];
    let mut g1 = poly::one();
    for _ in 0..k0 {
        g1 = poly::mul(f, &g1, p0);
    }
    let (g2, r) = poly::divrem(f, &m, &g1);
    debug_assert!(r.is_empty());
    let (g, _, t) = poly::ext_gcd(f, &g1, &g2);
    debug_assert!(poly::is_one(&g));
    let eps = eval_in_corner(alg, &poly::mul(f, &t, &g2), x, e);
    (Some(eps), Vec::new())
}

/// Span of `a`, `a^2`, ... stops at zero within `bound` steps.
fn is_nilpotent_space(alg: &Algebra, j: &Subspace, bound: usize) -> bool {
    let mut pw = j.clone();
    for _ in 0..=bound {
        if pw.is_zero() {
            return true;
        }
        pw = alg.product_space(&pw, j);
    }
    pw.is_zero()
}

fn analyze<R: Rng>(alg: &Algebra, e: &[Fe], rng: &mut R) -> Result<Analysis> {
    let f = alg.field();
    let c = corner(alg, e);
    let m = c.dim();
    if m == 1 {
        return Ok(Analysis::Local(LocalIdempotent::new(f, e.to_vec(), c, Subspace::zero(alg.dim()))));
    }
    let mut scalars = Vec::with_capacity(m);
    for b in c.basis() {
        let (split, irr) = try_split(alg, e, b, rng);
        if let Some(eps) = split {
            return Ok(Analysis::Split(eps));
        }
        // irr is the unique irreducible factor; split residue needs degree 1
        scalars.push(if irr.len() == 2 { Some(f.neg(irr[0])) } else { None });
    }
    if scalars.iter().all(Option::is_some) {
        let nil: Vec<Vector> =
            c.basis().iter().zip(&scalars).map(|(b, s)| sub(f, b, &scale(f, s.unwrap(), e))).collect();
        let j = Subspace::span(f, alg.dim(), nil);
        if j.dim() + 1 == m && alg.product_space(&j, &j).is_subspace_of(f, &j) && is_nilpotent_space(alg, &j, m) {
            return Ok(Analysis::Local(LocalIdempotent::new(f, e.to_vec(), c, j)));
        }
    }
    let basis = c.basis();
    let pairs = (0..m).flat_map(|i| (i + 1..m).map(move |k| (i, k))).take(SPLIT_BUDGET);
    for (i, k) in pairs {
        let x = alg.add(&basis[i], &basis[k]);
        if let (Some(eps), _) = try_split(alg, e, &x, rng) {
            return Ok(Analysis::Split(eps));
        }
    }
    let q = f.order();
    for _ in 0..SPLIT_BUDGET {
        let mut x = alg.zero();
        for b in basis {
            axpy(f, &mut x, f.element(rng.gen_range(0..q)), b);
        }
        if let (Some(eps), _) = try_split(alg, e, &x, rng) {
            return Ok(Analysis::Split(eps));
        }
    }
    Err(Error::RetryBudgetExhausted(SPLIT_BUDGET))
}

/// A decomposition of the unit into certified primitive idempotents grouped
/// into points.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub idempotents: Vec<LocalIdempotent>,
    /// Indices into `idempotents`, one list per point, ordered by first
    /// member.
    pub classes: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn num_points(&self) -> usize {
        self.classes.len()
    }

    /// One primitive idempotent per point.
    pub fn representatives(&self) -> Vec<Vector> {
        self.classes.iter().map(|c| self.idempotents[c[0]].idempotent.clone()).collect()
    }

    /// Number of primitive idempotents in each point.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// Sum of the primitive idempotents of a point.
    pub fn class_sum(&self, alg: &Algebra, class: usize) -> Vector {
        let mut out = alg.zero();
        for &i in &self.classes[class] {
            axpy(alg.field(), &mut out, Fe::ONE, &self.idempotents[i].idempotent);
        }
        out
    }

    /// `J(A)` as the sum of the Peirce pieces `J_ij`.
    pub fn radical(&self, alg: &Algebra) -> Subspace {
        let f = alg.field();
        let mut gens = Vec::new();
        for (i, ei) in self.idempotents.iter().enumerate() {
            for (j, ej) in self.idempotents.iter().enumerate() {
                let x = peirce_block(alg, &ei.idempotent, &ej.idempotent);
                if x.is_zero() {
                    continue;
                }
                if i == j {
                    gens.extend(ei.radical.basis().iter().cloned());
                    continue;
                }
                let y = peirce_block(alg, &ej.idempotent, &ei.idempotent);
                let mut pairing = Matrix::zeros(x.dim(), y.dim());
                for (a, xa) in x.basis().iter().enumerate() {
                    for (b, yb) in y.basis().iter().enumerate() {
                        pairing.set(a, b, ei.residue_scalar(f, &alg.mul(xa, yb)));
                    }
                }
                for w in pairing.left_kernel(f) {
                    gens.push(x.combine(f, &w));
                }
            }
        }
        Subspace::span(f, alg.dim(), gens)
    }

    /// The point containing the primitive idempotent `e`.
    pub fn point_of(&self, alg: &Algebra, e: &[Fe]) -> Result<usize> {
        let mut found = Vec::new();
        for (c, members) in self.classes.iter().enumerate() {
            let ei = &self.idempotents[members[0]];
            if linked(alg, ei, e) {
                found.push(c);
            }
        }
        match found.as_slice() {
            [c] => Ok(*c),
            [] => Err(Error::Verification("idempotent is linked to no point".into())),
            _ => Err(Error::Verification("idempotent is not primitive".into())),
        }
    }
}

/// `e_i` and `f` are conjugate primitive idempotents (when `f` is
/// primitive) iff some `y x` with `y` in `e_i A f`, `x` in `f A e_i` is a
/// unit of the local corner `e_i A e_i`.
fn linked(alg: &Algebra, ei: &LocalIdempotent, f_: &[Fe]) -> bool {
    let f = alg.field();
    let y = peirce_block(alg, &ei.idempotent, f_);
    if y.is_zero() {
        return false;
    }
    let x = peirce_block(alg, f_, &ei.idempotent);
    y.basis().iter().any(|yb| x.basis().iter().any(|xa| !ei.residue_scalar(f, &alg.mul(yb, xa)).is_zero()))
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

/// Decomposes the unit of `alg` into certified primitive idempotents.
///
/// Randomness only enters through the factorization and candidate choice;
/// the number of points, the multiplicities and the radical do not depend
/// on the seed.
pub fn primitive_decomposition(alg: &Algebra, seed: u64) -> Result<Decomposition> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = Vec::new();
    let mut stack = vec![alg.unit().clone()];
    if is_zero(alg.unit()) {
        return Ok(Decomposition { idempotents: Vec::new(), classes: Vec::new() });
    }
    while let Some(e) = stack.pop() {
        match analyze(alg, &e, &mut rng)? {
            Analysis::Local(l) => done.push(l),
            Analysis::Split(eps) => {
                let rest = alg.sub(&e, &eps);
                stack.push(rest);
                stack.push(eps);
            }
        }
    }
    let n = done.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            if find(&mut parent, i) != find(&mut parent, j) && linked(alg, &done[i], &done[j].idempotent) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[rj.max(ri)] = ri.min(rj);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_class = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_class[r] == usize::MAX {
            root_class[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[root_class[r]].push(i);
    }
    Ok(Decomposition { idempotents: done, classes })
}

/// Certified primitive idempotents summing to one.
pub fn primitive_idempotents(alg: &Algebra, seed: u64) -> Result<Vec<Vector>> {
    Ok(primitive_decomposition(alg, seed)?.idempotents.into_iter().map(|l| l.idempotent).collect())
}

/// `J(A)`. The result is independent of the internal seed.
pub fn jacobson_radical(alg: &Algebra) -> Result<Subspace> {
    Ok(primitive_decomposition(alg, 0)?.radical(alg))
}

/// Smallest `t >= 1` with `J^t = 0`.
pub fn nilpotency_degree(alg: &Algebra, j: &Subspace) -> Result<usize> {
    let mut pw = j.clone();
    let mut t = 1;
    while !pw.is_zero() {
        if t > alg.dim() + 1 {
            return Err(Error::Verification("subspace is not nilpotent".into()));
        }
        pw = alg.product_space(&pw, j);
        t += 1;
    }
    Ok(t)
}

/// Lifts `a` (idempotent modulo the nilpotent ideal `j`) to an idempotent of
/// `A` congruent to `a` modulo `j`, iterating `a <- 3a^2 - 2a^3`.
pub fn lift_idempotent(alg: &Algebra, a: &[Fe], j: &Subspace) -> Result<Vector> {
    let f = alg.field();
    let sq = alg.mul(a, a);
    if !j.contains(f, &sub(f, &sq, a)) {
        return Err(Error::InvalidInput("element is not idempotent modulo the ideal".into()));
    }
    let nil = nilpotency_degree(alg, j)?;
    let max_iter = (usize::BITS - (nil.max(1) - 1).leading_zeros()) as usize + 1;
    let three = f.from_int(3);
    let two = f.from_int(2);
    let mut x = a.to_vec();
    for _ in 0..=max_iter {
        let x2 = alg.mul(&x, &x);
        if x2 == x {
            return Ok(x);
        }
        let x3 = alg.mul(&x2, &x);
        x = sub(f, &scale(f, three, &x2), &scale(f, two, &x3));
    }
    Err(Error::LiftingFailed(max_iter))
}

/// Idempotents `e_1, .., e_r`, orthogonal and summing to one, such that
/// their images in `A/J(A)` are the identities of the simple components.
/// Components are ordered like the points of
/// [`primitive_decomposition`] with the same seed.
pub fn wedderburn_components(alg: &Algebra, seed: u64) -> Result<Vec<Vector>> {
    let f = alg.field();
    let dec = primitive_decomposition(alg, seed)?;
    let j = dec.radical(alg);
    let quot = alg.quotient(&j)?;
    let r = dec.num_points();
    let mut out = Vec::with_capacity(r);
    let mut taken = alg.zero();
    for c in 0..r {
        let target = dec.class_sum(alg, c);
        let bar = quot.project(&target);
        let n = dec.classes[c].len();
        let comp = corner(&quot.algebra, &bar);
        if comp.dim() != n * n {
            return Err(Error::Verification(format!("component {c} has dimension {} not {}", comp.dim(), n * n)));
        }
        let e = if c + 1 == r {
            alg.sub(alg.unit(), &taken)
        } else {
            let rest = alg.sub(alg.unit(), &taken);
            let pre = quot.lift(&bar);
            let cut = alg.mul(&alg.mul(&rest, &pre), &rest);
            lift_idempotent(alg, &cut, &j)?
        };
        if !j.contains(f, &sub(f, &e, &target)) || !alg.is_idempotent(&e) {
            return Err(Error::Verification(format!("lift of component {c} is not congruent to its class sum")));
        }
        axpy(f, &mut taken, Fe::ONE, &e);
        out.push(e);
    }
    Ok(out)
}

/// Central primitive idempotents, via the primitive idempotents of the
/// centre.
pub fn blocks(alg: &Algebra, seed: u64) -> Result<Vec<Vector>> {
    let z = alg.subalgebra(&alg.center())?;
    let ids = primitive_idempotents(&z.algebra, seed)?;
    let mut out: Vec<Vector> = ids.iter().map(|v| z.embed(v)).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::linalg::zero_vec;
    use super::*;
    use crate::groups::{symmetric_group, Perm, Subgroup};

    fn group_alg(n: usize, p: u32, e: u32) -> Algebra {
        let g = symmetric_group(n).unwrap();
        Algebra::group_algebra(&Subgroup::whole(&g), &Field::new(p, e).unwrap())
    }

    /// Full matrix algebra `M_n(k)` with basis `E_ij` at index `i n + j`.
    fn matrix_algebra(f: &Field, n: usize) -> Algebra {
        let d = n * n;
        let mut prods = vec![vec![zero_vec(d); d]; d];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    prods[i * n + j][j * n + l] = unit_vec(d, i * n + l);
                }
            }
        }
        let mut unit = zero_vec(d);
        for i in 0..n {
            unit[i * n + i] = Fe::ONE;
        }
        Algebra::from_products(f, d, &prods, unit).unwrap()
    }

    fn check_complete(alg: &Algebra, ids: &[Vector]) {
        let f = alg.field();
        let mut sum = alg.zero();
        for (i, a) in ids.iter().enumerate() {
            assert!(alg.is_idempotent(a));
            for (j, b) in ids.iter().enumerate() {
                if i != j {
                    assert!(is_zero(&alg.mul(a, b)));
                }
            }
            axpy(f, &mut sum, Fe::ONE, a);
        }
        assert_eq!(&sum, alg.unit());
    }

    #[test]
    fn matrix_algebra_is_one_point() {
        let f = Field::new(3, 1).unwrap();
        let a = matrix_algebra(&f, 3);
        let dec = primitive_decomposition(&a, 7).unwrap();
        assert_eq!(dec.idempotents.len(), 3);
        assert_eq!(dec.num_points(), 1);
        assert!(dec.radical(&a).is_zero());
        check_complete(&a, &primitive_idempotents(&a, 1).unwrap());
    }

    #[test]
    fn p_group_algebra_is_local() {
        let g = symmetric_group(4).unwrap();
        let d8 = Subgroup::from_perms(
            &g,
            &[Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(), Perm::from_cycles(4, &[&[0, 2]]).unwrap()],
        )
        .unwrap();
        let a = Algebra::group_algebra(&d8, &Field::new(2, 1).unwrap());
        let dec = primitive_decomposition(&a, 0).unwrap();
        assert_eq!(dec.idempotents.len(), 1);
        let j = dec.radical(&a);
        // augmentation ideal
        assert_eq!(j.dim(), 7);
        assert_eq!(nilpotency_degree(&a, &j).unwrap(), 5);
    }

    #[test]
    fn s3_mod_2() {
        // principal block kC2 (dim 2) plus a matrix block M_2(k)
        let a = group_alg(3, 2, 2);
        let dec = primitive_decomposition(&a, 3).unwrap();
        assert_eq!(dec.num_points(), 2);
        let mut m = dec.multiplicities();
        m.sort();
        assert_eq!(m, vec![1, 2]);
        assert_eq!(dec.radical(&a).dim(), 1);
        let bl = blocks(&a, 0).unwrap();
        assert_eq!(bl.len(), 2);
        let w = wedderburn_components(&a, 3).unwrap();
        check_complete(&a, &w);
    }

    #[test]
    fn s4_mod_3_radical_matches_brute_force() {
        let a = group_alg(4, 3, 1);
        let j = jacobson_radical(&a).unwrap();
        // simple kS4-modules in characteristic 3 have degrees 1, 1, 3, 3
        assert_eq!(j.dim(), 24 - (1 + 1 + 9 + 9));
        assert!(a.is_two_sided_ideal(&j));
        for b in j.basis() {
            assert!(a.is_nilpotent(b));
        }
        let bl = blocks(&a, 5).unwrap();
        assert_eq!(bl.len(), 3);
    }

    #[test]
    fn points_are_seed_independent() {
        let a = group_alg(4, 2, 1);
        let r0 = primitive_decomposition(&a, 0).unwrap();
        for seed in 1..4 {
            let r = primitive_decomposition(&a, seed).unwrap();
            assert_eq!(r.num_points(), r0.num_points());
            let mut m0 = r0.multiplicities();
            let mut m = r.multiplicities();
            m0.sort();
            m.sort();
            assert_eq!(m, m0);
            assert_eq!(r.radical(&a), r0.radical(&a));
        }
    }

    #[test]
    fn lifting_recovers_idempotents() {
        let a = group_alg(3, 3, 1);
        let j = jacobson_radical(&a).unwrap();
        // (1 + t)/2 for a transposition t is idempotent mod J
        let f = a.field();
        let g = symmetric_group(3).unwrap();
        let t = g.index_of(&Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let mut x = a.unit().clone();
        x[t] = Fe::ONE;
        let x = scale(f, f.inv(f.from_int(2)), &x);
        let e = lift_idempotent(&a, &x, &j).unwrap();
        assert!(a.is_idempotent(&e));
        assert!(j.contains(f, &sub(f, &e, &x)));
        assert!(lift_idempotent(&a, &a.basis_element(t), &j).is_err());
    }
}
