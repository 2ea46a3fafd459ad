use std::sync::Arc;

use crate::error::{Error, Result};
use crate::falgebra::{conjugation_action, ActionOnAlgebra, Algebra, Fe, Field, Matrix, Vector};
use crate::groups::{coset_decompose, coset_reps, Side, Subgroup};

/// An algebra `A` with a unit-valued homomorphism `alpha: N -> A^x` and an
/// action `phi` of a group `G` (containing `N` as a normal subgroup) by
/// algebra automorphisms, such that `N` acts through `alpha` by inner
/// automorphisms.
#[derive(Clone, Debug)]
pub struct NInteriorGAlgebra {
    algebra: Algebra,
    group: Subgroup,
    normal: Subgroup,
    alpha: Arc<Vec<Vector>>,
    phi: ActionOnAlgebra,
    /// `g -> 1 (x) g` when the algebra is interior for the whole group.
    group_units: Option<Arc<Vec<Vector>>>,
    stable_basis: bool,
}

impl NInteriorGAlgebra {
    /// Assembles and validates an N-interior G-algebra. `alpha` is indexed
    /// by member position in `normal`.
    pub fn new(
        algebra: Algebra,
        group: &Subgroup,
        normal: &Subgroup,
        alpha: Vec<Vector>,
        phi: ActionOnAlgebra,
        stable_basis: bool,
    ) -> Result<Self> {
        let a = Self::new_unchecked(algebra, group, normal, alpha, phi, stable_basis)?;
        a.check_invariants()?;
        Ok(a)
    }

    fn new_unchecked(
        algebra: Algebra,
        group: &Subgroup,
        normal: &Subgroup,
        alpha: Vec<Vector>,
        phi: ActionOnAlgebra,
        stable_basis: bool,
    ) -> Result<Self> {
        if !normal.is_normal_in(group) {
            return Err(Error::NotNormal(format!("{normal:?}")));
        }
        if alpha.len() != normal.order() || phi.group() != group {
            return Err(Error::InvalidInterior("alpha or phi has the wrong domain".into()));
        }
        Ok(NInteriorGAlgebra {
            algebra,
            group: group.clone(),
            normal: normal.clone(),
            alpha: Arc::new(alpha),
            phi,
            group_units: None,
            stable_basis,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The acting group `G`.
    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    /// The interior subgroup `N`.
    pub fn normal(&self) -> &Subgroup {
        &self.normal
    }

    pub fn phi(&self) -> &ActionOnAlgebra {
        &self.phi
    }

    pub fn has_stable_basis(&self) -> bool {
        self.stable_basis
    }

    /// `alpha(n)` for a parent element `n` of `N`.
    pub fn alpha(&self, n: usize) -> &Vector {
        &self.alpha[self.normal.position(n).expect("alpha applied outside N")]
    }

    /// The unit `1 (x) g` when the algebra is interior for its whole group.
    pub fn group_unit(&self, g: usize) -> Option<&Vector> {
        self.group_units.as_ref().map(|u| &u[self.group.position(g).expect("element outside the group")])
    }

    /// Checks all structural invariants: `alpha` multiplicative and unital,
    /// `phi` an action by automorphisms, `N` acting through `alpha`,
    /// compatibility `phi(g)(alpha(n)) = alpha(g n g^-1)`, and stability of
    /// the basis when claimed.
    pub fn check_invariants(&self) -> Result<()> {
        let alg = &self.algebra;
        let f = alg.field();
        let g = self.group.parent();
        if self.alpha(0) != alg.unit() {
            return Err(Error::InvalidInterior("alpha(1) is not the unit".into()));
        }
        for &s in self.normal.generators() {
            for &n in self.normal.members() {
                if alg.mul(self.alpha(s), self.alpha(n)) != *self.alpha(g.mul(s, n)) {
                    return Err(Error::InvalidInterior("alpha is not multiplicative".into()));
                }
            }
        }
        self.phi.check(alg)?;
        for &n in self.normal.generators() {
            let an = self.alpha(n);
            let m = self.phi.matrix(n);
            for i in 0..alg.dim() {
                let lhs = alg.mul(&m.column(i), an);
                let rhs = alg.mul(an, &alg.basis_element(i));
                if lhs != rhs {
                    return Err(Error::InvalidInterior(format!("N does not act through alpha on basis element {i}")));
                }
            }
        }
        for &x in self.group.generators() {
            for &n in self.normal.members() {
                if self.phi.apply(f, x, self.alpha(n)) != *self.alpha(g.conj(x, n)) {
                    return Err(Error::InvalidInterior("phi and alpha are not compatible".into()));
                }
            }
        }
        if let Some(units) = &self.group_units {
            for (k, &x) in self.group.members().iter().enumerate() {
                for i in 0..alg.dim() {
                    let b = alg.basis_element(i);
                    let lhs = alg.mul(&units[k], &b);
                    let rhs = alg.mul(&self.phi.apply(f, x, &b), &units[k]);
                    if lhs != rhs {
                        return Err(Error::InvalidInterior("group units do not induce phi".into()));
                    }
                }
            }
        }
        if self.stable_basis {
            let is_basis_vector = |v: &[Fe]| v.iter().filter(|c| !c.is_zero()).count() == 1 && v.contains(&Fe::ONE);
            for &x in self.group.generators() {
                let m = self.phi.matrix(x);
                if !(0..alg.dim()).all(|i| is_basis_vector(&m.column(i))) {
                    return Err(Error::InvalidInterior("phi does not permute the basis".into()));
                }
            }
            for &n in self.normal.generators() {
                let an = self.alpha(n);
                for i in 0..alg.dim() {
                    let b = alg.basis_element(i);
                    if !is_basis_vector(&alg.mul(an, &b)) || !is_basis_vector(&alg.mul(&b, an)) {
                        return Err(Error::InvalidInterior("basis is not N x N-stable".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// The same algebra viewed as an N-interior L-algebra for `N <= L <= G`.
    pub fn restrict_group(&self, l: &Subgroup) -> Result<Self> {
        if !self.normal.is_subgroup_of(l) || !l.is_subgroup_of(&self.group) {
            return Err(Error::NotSubgroup("restriction must satisfy N <= L <= G".into()));
        }
        let units = self
            .group_units
            .as_ref()
            .map(|u| Arc::new(l.members().iter().map(|&x| u[self.group.position(x).unwrap()].clone()).collect()));
        Ok(NInteriorGAlgebra {
            algebra: self.algebra.clone(),
            group: l.clone(),
            normal: self.normal.clone(),
            alpha: self.alpha.clone(),
            phi: self.phi.restrict(l)?,
            group_units: units,
            stable_basis: self.stable_basis,
        })
    }

    /// A copy with deliberately corrupted structure constants, for exercising
    /// the failure paths of the verifiers.
    #[doc(hidden)]
    pub fn with_broken_structure_constants(&self) -> Result<Self> {
        let alg = &self.algebra;
        let d = alg.dim();
        let mut prods: Vec<Vec<Vector>> = (0..d).map(|i| (0..d).map(|j| alg.basis_product(i, j)).collect()).collect();
        if d < 2 {
            return Err(Error::InvalidInput("algebra too small to corrupt".into()));
        }
        // send b_1 b_1 somewhere else
        prods[1][1] =
            alg.basis_element((alg.basis_product(1, 1).iter().position(|c| !c.is_zero()).unwrap_or(0) + 1) % d);
        let broken = Algebra::from_products_unchecked(alg.field(), d, &prods, alg.unit().clone())?;
        let mut out = self.clone();
        out.algebra = broken;
        Ok(out)
    }
}

/// `kN` as an N-interior G-algebra: `alpha` is the basis inclusion and
/// `G` acts by conjugation.
pub fn make_kn_interior(g: &Subgroup, n: &Subgroup, field: &Field) -> Result<NInteriorGAlgebra> {
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal(format!("{n:?}")));
    }
    let algebra = Algebra::group_algebra(n, field);
    let alpha = (0..n.order()).map(|k| algebra.basis_element(k)).collect();
    let phi = conjugation_action(n, g);
    NInteriorGAlgebra::new(algebra, g, n, alpha, phi, true)
}

/// `kG` as an interior G-algebra (the case `N = G`).
pub fn make_group_interior(g: &Subgroup, field: &Field) -> Result<NInteriorGAlgebra> {
    let mut a = make_kn_interior(g, g, field)?;
    a.group_units = Some(a.alpha.clone());
    Ok(a)
}

/// `A (x)_N L` with basis `b_i (x) x_r`, `x_r` running over the first
/// elements of the cosets `N x` of `L` in enumeration order. Basis index is
/// `r * dim(A) + i`.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub interior: NInteriorGAlgebra,
    pub base: NInteriorGAlgebra,
    reps: Vec<usize>,
}

impl CrossedProduct {
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// `a (x) g` for `a` in the base algebra and `g` in `L`.
    pub fn tensor(&self, a: &[Fe], g: usize) -> Vector {
        let d = self.base.dim();
        let (rep, n) = coset_decompose(self.base.normal(), &self.reps, Side::Right, g);
        let r = self.reps.iter().position(|&x| x == rep).unwrap();
        let v = self.base.algebra().mul(a, self.base.alpha(n));
        let mut out = vec![Fe::ZERO; d * self.reps.len()];
        out[r * d..(r + 1) * d].copy_from_slice(&v);
        out
    }

    /// The base-algebra coefficient of `x_r` in `v`.
    pub fn slice(&self, v: &[Fe], r: usize) -> Vector {
        let d = self.base.dim();
        v[r * d..(r + 1) * d].to_vec()
    }

    /// Index of the coset representative of `g`.
    pub fn rep_index(&self, g: usize) -> usize {
        let (rep, _) = coset_decompose(self.base.normal(), &self.reps, Side::Right, g);
        self.reps.iter().position(|&x| x == rep).unwrap()
    }
}

/// The crossed product `A (x)_N L` for `N <= L <= G`, with product
/// `(a (x) x)(b (x) y) = a (x.b) (x) xy`. The result is an N-interior
/// L-algebra through `alpha(n) (x) 1`, with `L` acting by conjugation with
/// `1 (x) g`.
pub fn crossed_product(a: &NInteriorGAlgebra, l: &Subgroup) -> Result<CrossedProduct> {
    let n = a.normal();
    if !n.is_subgroup_of(l) {
        return Err(Error::NotSubgroup("L does not contain N".into()));
    }
    if !l.is_subgroup_of(a.group()) {
        return Err(Error::NotSubgroup("L is not contained in G".into()));
    }
    let g = l.parent();
    let alg = a.algebra();
    let f = alg.field();
    let d = alg.dim();
    let reps = coset_reps(l, n, Side::Right)?;
    let m = reps.len();
    let dim = d * m;
    let split = |y: usize| -> (usize, usize) {
        let (rep, part) = coset_decompose(n, &reps, Side::Right, y);
        (reps.iter().position(|&x| x == rep).unwrap(), part)
    };
    let place = |r: usize, v: &[Fe]| -> Vector {
        let mut out = vec![Fe::ZERO; dim];
        out[r * d..(r + 1) * d].copy_from_slice(v);
        out
    };
    let mut products = vec![vec![Vector::new(); dim]; dim];
    for (r, &xr) in reps.iter().enumerate() {
        let phi_r = a.phi().matrix(xr);
        for (s, &xs) in reps.iter().enumerate() {
            let (t, nn) = split(g.mul(xr, xs));
            let an = a.alpha(nn);
            for j in 0..d {
                let right = alg.mul(&phi_r.column(j), an);
                for i in 0..d {
                    let v = alg.mul(&alg.basis_element(i), &right);
                    products[r * d + i][s * d + j] = place(t, &v);
                }
            }
        }
    }
    let unit = place(0, alg.unit());
    let algebra = Algebra::from_products_unchecked(f, dim, &products, unit)?;

    let units: Vec<Vector> = l
        .members()
        .iter()
        .map(|&y| {
            let (t, nn) = split(y);
            place(t, a.alpha(nn))
        })
        .collect();
    let matrices: Vec<Matrix> = l
        .members()
        .iter()
        .map(|&y| {
            let phi_y = a.phi().matrix(y);
            let cols: Vec<Vector> = (0..dim)
                .map(|c| {
                    let (r, i) = (c / d, c % d);
                    let (t, nn) = split(g.conj(y, reps[r]));
                    place(t, &alg.mul(&phi_y.column(i), a.alpha(nn)))
                })
                .collect();
            Matrix::from_columns(dim, &cols)
        })
        .collect();
    let phi = ActionOnAlgebra::new(l, matrices)?;
    let alpha = n.members().iter().map(|&x| place(0, a.alpha(x))).collect();
    let mut interior = NInteriorGAlgebra::new_unchecked(algebra, l, n, alpha, phi, a.has_stable_basis())?;
    interior.group_units = Some(Arc::new(units));
    Ok(CrossedProduct { interior, base: a.clone(), reps })
}

/// Checks that `a (x) x -> a x` is an algebra isomorphism from
/// `kN (x)_N L` onto `kL` on every pair of basis elements.
pub fn verify_group_algebra_isomorphism(c: &CrossedProduct) -> Result<()> {
    let l = c.interior.group();
    let n = c.base.normal();
    if c.base.algebra().dim() != n.order() || c.base.algebra().unit()[0] != Fe::ONE {
        return Err(Error::InvalidInput("base algebra is not kN".into()));
    }
    let g = l.parent();
    let kl = Algebra::group_algebra(l, c.interior.field());
    let d = n.order();
    // image of basis vector (r, i) is the basis element of n_i x_r
    let image: Vec<usize> =
        (0..c.interior.dim()).map(|k| l.position(g.mul(n.members()[k % d], c.reps[k / d])).unwrap()).collect();
    let mut seen = vec![false; l.order()];
    for &i in &image {
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::Verification("tensor map is not injective on the basis".into()));
        }
    }
    if image.len() != l.order() {
        return Err(Error::Verification("dimensions differ".into()));
    }
    let map = |v: &[Fe]| -> Vector {
        let mut out = kl.zero();
        for (k, &x) in v.iter().enumerate() {
            out[image[k]] = x;
        }
        out
    };
    let alg = c.interior.algebra();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let lhs = map(&alg.basis_product(i, j));
            let rhs = kl.basis_product(image[i], image[j]);
            if lhs != rhs {
                return Err(Error::Verification(format!("tensor map is not multiplicative on ({i}, {j})")));
            }
        }
    }
    if map(alg.unit()) != *kl.unit() {
        return Err(Error::Verification("tensor map does not preserve the unit".into()));
    }
    Ok(())
}

/// A linear map between N-interior G-algebras, given by its matrix.
#[derive(Clone, Debug)]
pub struct InteriorHom {
    pub source: NInteriorGAlgebra,
    pub target: NInteriorGAlgebra,
    pub matrix: Matrix,
}

impl InteriorHom {
    /// Validates that the map is unital, multiplicative, sends `alpha` to
    /// `alpha` and commutes with the action of the common acting group.
    pub fn new(source: &NInteriorGAlgebra, target: &NInteriorGAlgebra, matrix: Matrix) -> Result<Self> {
        let f = source.field();
        let (sa, ta) = (source.algebra(), target.algebra());
        if matrix.rows() != ta.dim() || matrix.cols() != sa.dim() {
            return Err(Error::NotHomomorphism("matrix has the wrong shape".into()));
        }
        if matrix.apply(f, sa.unit()) != *ta.unit() {
            return Err(Error::NotHomomorphism("unit is not preserved".into()));
        }
        for i in 0..sa.dim() {
            let fi = matrix.column(i);
            for j in 0..sa.dim() {
                if matrix.apply(f, &sa.basis_product(i, j)) != ta.mul(&fi, &matrix.column(j)) {
                    return Err(Error::NotHomomorphism(format!("not multiplicative on ({i}, {j})")));
                }
            }
        }
        if source.normal() != target.normal() {
            return Err(Error::NotHomomorphism("different interior subgroups".into()));
        }
        for &n in source.normal().members() {
            if matrix.apply(f, source.alpha(n)) != *target.alpha(n) {
                return Err(Error::NotHomomorphism("alpha is not preserved".into()));
            }
        }
        let common = source.group().intersection(target.group());
        for &x in common.generators() {
            if matrix.mul(f, source.phi().matrix(x)) != target.phi().matrix(x).mul(f, &matrix) {
                return Err(Error::NotHomomorphism("action is not preserved".into()));
            }
        }
        Ok(InteriorHom { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn identity(a: &NInteriorGAlgebra) -> Self {
        InteriorHom { source: a.clone(), target: a.clone(), matrix: Matrix::identity(a.dim()) }
    }

    /// `a -> a (x) 1` into a crossed product.
    pub fn into_crossed_product(c: &CrossedProduct) -> Result<Self> {
        let d = c.base.dim();
        let cols: Vec<Vector> = (0..d).map(|i| c.tensor(&c.base.algebra().basis_element(i), 0)).collect();
        InteriorHom::new(&c.base, &c.interior, Matrix::from_columns(c.interior.dim(), &cols))
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank(self.source.field()) == self.source.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{symmetric_group, Perm};

    fn sub(g: &Arc<crate::groups::FiniteGroup>, cycles: &[&[&[usize]]]) -> Subgroup {
        let perms: Vec<Perm> = cycles.iter().map(|c| Perm::from_cycles(g.degree(), c).unwrap()).collect();
        Subgroup::from_perms(g, &perms).unwrap()
    }

    #[test]
    fn kn_interior_invariants() {
        let s3 = symmetric_group(3).unwrap();
        let g = Subgroup::whole(&s3);
        let a3 = sub(&s3, &[&[&[0, 1, 2]]]);
        let a = make_kn_interior(&g, &a3, &Field::new(3, 2).unwrap()).unwrap();
        a.check_invariants().unwrap();
        assert!(make_kn_interior(&g, &sub(&s3, &[&[&[0, 1]]]), &Field::new(3, 1).unwrap()).is_err());
    }

    #[test]
    fn kv4_action_image_has_order_six() {
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let a = make_kn_interior(&g, &v4, &Field::new(2, 1).unwrap()).unwrap();
        assert_eq!(a.dim(), 4);
        let mut images: Vec<Matrix> = Vec::new();
        for &x in g.members() {
            let m = a.phi().matrix(x).clone();
            if !images.contains(&m) {
                images.push(m);
            }
        }
        assert_eq!(images.len(), 6);
    }

    #[test]
    fn crossed_products() {
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let d8 = sub(&s4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]);
        let f = Field::new(2, 1).unwrap();
        let a = make_kn_interior(&g, &v4, &f).unwrap();
        let c = crossed_product(&a, &d8).unwrap();
        assert_eq!(c.interior.dim(), 8);
        c.interior.algebra().check_associative().unwrap();
        c.interior.check_invariants().unwrap();
        verify_group_algebra_isomorphism(&c).unwrap();
        let same = crossed_product(&a, &v4).unwrap();
        assert_eq!(same.interior.dim(), 4);
        let full = crossed_product(&a, &g).unwrap();
        verify_group_algebra_isomorphism(&full).unwrap();
        let inc = InteriorHom::into_crossed_product(&c).unwrap();
        assert!(inc.is_injective());
        assert!(crossed_product(&a, &sub(&s4, &[&[&[0, 1]]])).is_err());
    }

    #[test]
    fn broken_constants_are_detected() {
        let s3 = symmetric_group(3).unwrap();
        let g = Subgroup::whole(&s3);
        let a3 = sub(&s3, &[&[&[0, 1, 2]]]);
        let a = make_kn_interior(&g, &a3, &Field::new(3, 1).unwrap()).unwrap();
        let b = a.with_broken_structure_constants().unwrap();
        assert!(b.algebra().check_associative().is_err() || b.check_invariants().is_err());
    }
}
