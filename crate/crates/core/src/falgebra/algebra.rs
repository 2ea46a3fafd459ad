//! Finite-dimensional associative algebras given by structure constants,
//! together with subalgebras, quotients, group actions, fixed points and
//! relative traces.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Fe, Field};
use super::linalg::{axpy, is_zero, sub, unit_vec, zero_vec, CoordinateMap, Matrix, Subspace, Vector};
use crate::error::{Error, Result};
use crate::groups::{coset_reps, Side, Subgroup};

/// An element of an algebra, as coefficients on its basis.
pub type AlgebraElement = Vector;

/// Sparse structure constants: entry `i * dim + j` lists the nonzero
/// coefficients `(k, c)` of `b_i b_j = sum_k c b_k`.
type Table = Vec<Vec<(u32, Fe)>>;

/// Exhaustive associativity checks are used up to this dimension.
pub const EXHAUSTIVE_ASSOC_DIM: usize = 60;

#[derive(Clone)]
pub struct Algebra {
    field: Field,
    dim: usize,
    table: Arc<Table>,
    unit: Vector,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {} over {:?})", self.dim, self.field)
    }
}

impl Algebra {
    /// Builds an algebra from dense products `products[i][j] = b_i b_j`,
    /// checking the unit and associativity.
    pub fn from_products(field: &Field, dim: usize, products: &[Vec<Vector>], unit: Vector) -> Result<Algebra> {
        let alg = Self::from_products_unchecked(field, dim, products, unit)?;
        alg.check_unit()?;
        alg.check_associative()?;
        Ok(alg)
    }

    /// As [`Algebra::from_products`] without the unit and associativity checks.
    pub fn from_products_unchecked(
        field: &Field,
        dim: usize,
        products: &[Vec<Vector>],
        unit: Vector,
    ) -> Result<Algebra> {
        if products.len() != dim || products.iter().any(|r| r.len() != dim) || unit.len() != dim {
            return Err(Error::InvalidAlgebra("structure constants have the wrong shape".into()));
        }
        let mut table = Vec::with_capacity(dim * dim);
        for row in products {
            for v in row {
                if v.len() != dim {
                    return Err(Error::InvalidAlgebra("structure constants have the wrong shape".into()));
                }
                table.push(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, &c)| (k as u32, c)).collect());
            }
        }
        Ok(Algebra { field: field.clone(), dim, table: Arc::new(table), unit })
    }

    /// The group algebra of `h` with basis in member order.
    pub fn group_algebra(h: &Subgroup, field: &Field) -> Algebra {
        let g = h.parent();
        let n = h.order();
        let mut table = Vec::with_capacity(n * n);
        for &a in h.members() {
            for &b in h.members() {
                let k = h.position(g.mul(a, b)).unwrap();
                table.push(vec![(k as u32, Fe::ONE)]);
            }
        }
        let unit = unit_vec(n, h.position(0).unwrap());
        Algebra { field: field.clone(), dim: n, table: Arc::new(table), unit }
    }

    /// The algebra `k` of dimension one.
    pub fn scalars(field: &Field) -> Algebra {
        Algebra { field: field.clone(), dim: 1, table: Arc::new(vec![vec![(0, Fe::ONE)]]), unit: vec![Fe::ONE] }
    }

    /// Product algebra `k^n` with orthogonal idempotent basis.
    pub fn diagonal(field: &Field, n: usize) -> Algebra {
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            table[i * n + i] = vec![(i as u32, Fe::ONE)];
        }
        Algebra { field: field.clone(), dim: n, table: Arc::new(table), unit: vec![Fe::ONE; n] }
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn zero(&self) -> Vector {
        zero_vec(self.dim)
    }

    pub fn basis_element(&self, i: usize) -> Vector {
        unit_vec(self.dim, i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut out = zero_vec(self.dim);
        for &(k, c) in &self.table[i * self.dim + j] {
            out[k as usize] = c;
        }
        out
    }

    pub fn mul(&self, a: &[Fe], b: &[Fe]) -> Vector {
        let f = &self.field;
        let d = self.dim;
        let mut out = zero_vec(d);
        let bnz: Vec<(usize, Fe)> = b.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, &c)| (j, c)).collect();
        for (i, &ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let row = &self.table[i * d..(i + 1) * d];
            for &(j, bj) in &bnz {
                let c = f.mul(ai, bj);
                for &(k, s) in &row[j] {
                    let k = k as usize;
                    out[k] = f.add(out[k], f.mul(c, s));
                }
            }
        }
        out
    }

    pub fn add(&self, a: &[Fe], b: &[Fe]) -> Vector {
        super::linalg::add(&self.field, a, b)
    }

    pub fn sub(&self, a: &[Fe], b: &[Fe]) -> Vector {
        sub(&self.field, a, b)
    }

    pub fn pow(&self, a: &[Fe], n: usize) -> Vector {
        (0..n).fold(self.unit.clone(), |acc, _| self.mul(&acc, a))
    }

    pub fn is_idempotent(&self, a: &[Fe]) -> bool {
        self.mul(a, a) == a
    }

    /// `a^k = 0` for some `k <= dim + 1`.
    pub fn is_nilpotent(&self, a: &[Fe]) -> bool {
        let mut x = a.to_vec();
        for _ in 0..=self.dim {
            if is_zero(&x) {
                return true;
            }
            x = self.mul(&x, a);
        }
        is_zero(&x)
    }

    /// Matrix of `x -> a x`.
    pub fn left_mul_matrix(&self, a: &[Fe]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis_element(j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `x -> x a`.
    pub fn right_mul_matrix(&self, a: &[Fe]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_element(j), a)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim {
            let b = self.basis_element(i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(Error::InvalidAlgebra(format!("unit fails on basis element {i}")));
            }
        }
        Ok(())
    }

    /// Associativity on basis triples: exhaustive up to
    /// [`EXHAUSTIVE_ASSOC_DIM`], otherwise 1000 seeded random triples.
    pub fn check_associative(&self) -> Result<()> {
        let d = self.dim;
        let check = |i: usize, j: usize, k: usize| -> Result<()> {
            let lhs = self.mul(&self.basis_product(i, j), &self.basis_element(k));
            let rhs = self.mul(&self.basis_element(i), &self.basis_product(j, k));
            if lhs != rhs {
                return Err(Error::InvalidAlgebra(format!("associativity fails on basis triple ({i}, {j}, {k})")));
            }
            Ok(())
        };
        if d <= EXHAUSTIVE_ASSOC_DIM {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        check(i, j, k)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..1000 {
                check(rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d))?;
            }
        }
        Ok(())
    }

    /// Span of all products `x y` with `x` in `a`, `y` in `b`.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let prods: Vec<Vector> = a.basis().iter().flat_map(|x| b.basis().iter().map(move |y| self.mul(x, y))).collect();
        Subspace::span(&self.field, self.dim, prods)
    }

    /// True when `a x` and `x a` lie in `space` for every basis element `a`
    /// and every `x` in `space`.
    pub fn is_two_sided_ideal(&self, space: &Subspace) -> bool {
        let f = &self.field;
        space.basis().iter().all(|x| {
            (0..self.dim).all(|i| {
                let b = self.basis_element(i);
                space.contains(f, &self.mul(&b, x)) && space.contains(f, &self.mul(x, &b))
            })
        })
    }

    pub fn center(&self) -> Subspace {
        // a in Z(A) iff a b_i - b_i a = 0 for every i
        let d = self.dim;
        let f = &self.field;
        let mut rows = Vec::new();
        for i in 0..d {
            let m = self.right_mul_matrix(&self.basis_element(i)).sub(f, &self.left_mul_matrix(&self.basis_element(i)));
            for r in 0..d {
                rows.push(m.row(r).to_vec());
            }
        }
        Subspace::kernel_of(f, &Matrix::from_rows(d, &rows))
    }

    /// The subalgebra carried by `space`, which must be closed under
    /// multiplication and contain the unit.
    pub fn subalgebra(&self, space: &Subspace) -> Result<Subalgebra> {
        let f = &self.field;
        if !space.contains(f, &self.unit) {
            return Err(Error::InvalidAlgebra("subspace does not contain the unit".into()));
        }
        let m = space.dim();
        let mut products = vec![vec![Vector::new(); m]; m];
        for (i, bi) in space.basis().iter().enumerate() {
            for (j, bj) in space.basis().iter().enumerate() {
                let p = self.mul(bi, bj);
                if !space.contains(f, &p) {
                    return Err(Error::InvalidAlgebra("subspace is not closed under multiplication".into()));
                }
                products[i][j] = space.coordinates(&p);
            }
        }
        let unit = space.coordinates(&self.unit);
        let algebra = Algebra::from_products_unchecked(f, m, &products, unit)?;
        Ok(Subalgebra { algebra, space: space.clone() })
    }

    /// The quotient by a two-sided ideal.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        let f = &self.field;
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::InvalidAlgebra("quotient by a subspace that is not an ideal".into()));
        }
        let all: Vec<Vector> = (0..self.dim).map(|i| self.basis_element(i)).collect();
        let section = ideal.extend_with(f, &all);
        let mut basis = ideal.basis().to_vec();
        basis.extend(section.iter().cloned());
        let coords = CoordinateMap::new(f, self.dim, basis).expect("ideal basis extended to a basis");
        let k = ideal.dim();
        let m = section.len();
        let project = |v: &[Fe]| -> Vector { coords.coords(f, v)[k..].to_vec() };
        let mut products = vec![vec![Vector::new(); m]; m];
        for i in 0..m {
            for j in 0..m {
                products[i][j] = project(&self.mul(&section[i], &section[j]));
            }
        }
        let unit = project(&self.unit);
        let algebra = Algebra::from_products_unchecked(f, m, &products, unit)?;
        Ok(Quotient { algebra, ideal: ideal.clone(), section, coords })
    }
}

/// A subalgebra together with its embedding (echelon basis in the parent).
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: Algebra,
    pub space: Subspace,
}

impl Subalgebra {
    /// Parent vector of an element given in subalgebra coordinates.
    pub fn embed(&self, coords: &[Fe]) -> Vector {
        self.space.combine(self.algebra.field(), coords)
    }

    /// Subalgebra coordinates of a parent vector lying in the subalgebra.
    pub fn restrict(&self, v: &[Fe]) -> Vector {
        self.space.coordinates(v)
    }
}

/// `A / I` with a chosen section of the projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    pub ideal: Subspace,
    section: Vec<Vector>,
    coords: CoordinateMap,
}

impl Quotient {
    pub fn project(&self, v: &[Fe]) -> Vector {
        let k = self.ideal.dim();
        self.coords.coords(self.algebra.field(), v)[k..].to_vec()
    }

    /// A preimage of a quotient element.
    pub fn lift(&self, coords: &[Fe]) -> Vector {
        let f = self.algebra.field();
        let n = self.ideal.ambient_dim();
        let mut out = zero_vec(n);
        for (s, &c) in self.section.iter().zip(coords) {
            axpy(f, &mut out, c, s);
        }
        out
    }
}

/// A group acting on an algebra by linear maps, one matrix per member of the
/// acting subgroup (indexed by member position).
#[derive(Clone, Debug)]
pub struct ActionOnAlgebra {
    group: Subgroup,
    matrices: Arc<Vec<Matrix>>,
}

impl ActionOnAlgebra {
    pub fn new(group: &Subgroup, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::InvalidAction("one matrix per group member is required".into()));
        }
        Ok(ActionOnAlgebra { group: group.clone(), matrices: Arc::new(matrices) })
    }

    /// Action through permutations of the basis: `perm(g)[j]` is the image
    /// of basis vector `j`.
    pub fn from_permutations(group: &Subgroup, perms: impl Fn(usize) -> Vec<usize>) -> Self {
        let matrices = group.members().iter().map(|&g| Matrix::permutation(&perms(g))).collect();
        ActionOnAlgebra { group: group.clone(), matrices: Arc::new(matrices) }
    }

    /// The trivial action of `group` on a space of dimension `dim`.
    pub fn trivial(group: &Subgroup, dim: usize) -> Self {
        let matrices = vec![Matrix::identity(dim); group.order()];
        ActionOnAlgebra { group: group.clone(), matrices: Arc::new(matrices) }
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    /// Matrix of a parent element, which must lie in the acting group.
    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[self.group.position(g).expect("element outside the acting group")]
    }

    pub fn apply(&self, field: &Field, g: usize, v: &[Fe]) -> Vector {
        self.matrix(g).apply(field, v)
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<Self> {
        if !h.is_subgroup_of(&self.group) {
            return Err(Error::InvalidAction("restriction to a subgroup outside the acting group".into()));
        }
        let matrices = h.members().iter().map(|&g| self.matrix(g).clone()).collect();
        Ok(ActionOnAlgebra { group: h.clone(), matrices: Arc::new(matrices) })
    }

    /// Checks that generators act by algebra automorphisms and that the
    /// assignment is a homomorphism on generator-by-member products.
    pub fn check(&self, algebra: &Algebra) -> Result<()> {
        let f = algebra.field();
        let d = algebra.dim();
        let g = self.group.parent();
        for &s in self.group.generators() {
            let m = self.matrix(s);
            if m.apply(f, algebra.unit()) != *algebra.unit() {
                return Err(Error::InvalidAction(format!("{} does not fix the unit", g.element(s))));
            }
            for i in 0..d {
                let mi = m.column(i);
                for j in 0..d {
                    let lhs = m.apply(f, &algebra.basis_product(i, j));
                    let rhs = algebra.mul(&mi, &m.column(j));
                    if lhs != rhs {
                        return Err(Error::InvalidAction(format!(
                            "{} is not multiplicative on basis pair ({i}, {j})",
                            g.element(s)
                        )));
                    }
                }
            }
            for &h in self.group.members() {
                if m.mul(f, self.matrix(h)) != *self.matrix(g.mul(s, h)) {
                    return Err(Error::InvalidAction("assignment is not a homomorphism".into()));
                }
            }
        }
        if !self.matrix(0).eq(&Matrix::identity(d)) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        Ok(())
    }
}

/// Fixed points of `h` (a subgroup of the acting group).
pub fn fixed_space(field: &Field, dim: usize, action: &ActionOnAlgebra, h: &Subgroup) -> Subspace {
    if h.is_trivial() {
        return Subspace::full(dim);
    }
    let id = Matrix::identity(dim);
    let mut rows = Vec::new();
    for &g in h.generators() {
        let m = action.matrix(g).sub(field, &id);
        for r in 0..dim {
            rows.push(m.row(r).to_vec());
        }
    }
    Subspace::kernel_of(field, &Matrix::from_rows(dim, &rows))
}

/// `A^H` as a subalgebra.
pub fn fixed_points(algebra: &Algebra, action: &ActionOnAlgebra) -> Result<Subalgebra> {
    let space = fixed_space(algebra.field(), algebra.dim(), action, action.group());
    algebra.subalgebra(&space)
}

fn is_fixed_by(field: &Field, action: &ActionOnAlgebra, q: &Subgroup, a: &[Fe]) -> bool {
    q.generators().iter().all(|&u| action.apply(field, u, a) == a)
}

/// `Tr_Q^H(a) = sum over h in [H/Q] of h.a`.
pub fn relative_trace(field: &Field, action: &ActionOnAlgebra, q: &Subgroup, h: &Subgroup, a: &[Fe]) -> Result<Vector> {
    let reps = coset_reps(h, q, Side::Left)?;
    relative_trace_with_reps(field, action, q, &reps, a)
}

/// As [`relative_trace`] with caller-chosen left coset representatives.
pub fn relative_trace_with_reps(
    field: &Field,
    action: &ActionOnAlgebra,
    q: &Subgroup,
    reps: &[usize],
    a: &[Fe],
) -> Result<Vector> {
    if !is_fixed_by(field, action, q, a) {
        return Err(Error::NotFixed(format!("{q:?}")));
    }
    let mut out = zero_vec(a.len());
    for &r in reps {
        let img = action.apply(field, r, a);
        axpy(field, &mut out, Fe::ONE, &img);
    }
    Ok(out)
}

/// `A^H_Q = Tr_Q^H(A^Q)`.
pub fn trace_image(
    field: &Field,
    dim: usize,
    action: &ActionOnAlgebra,
    q: &Subgroup,
    h: &Subgroup,
) -> Result<Subspace> {
    let fixed = fixed_space(field, dim, action, q);
    let reps = coset_reps(h, q, Side::Left)?;
    let images = fixed
        .basis()
        .iter()
        .map(|b| relative_trace_with_reps(field, action, q, &reps, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(field, dim, images))
}

/// Conjugation action of `h` on the group algebra of `n` (which `h` must
/// normalize), as basis permutations.
pub fn conjugation_action(n: &Subgroup, h: &Subgroup) -> ActionOnAlgebra {
    let g = n.parent();
    ActionOnAlgebra::from_permutations(h, |x| n.members().iter().map(|&m| n.position(g.conj(x, m)).unwrap()).collect())
}
