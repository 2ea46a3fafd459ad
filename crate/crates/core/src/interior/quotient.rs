//! The extended Brauer quotient: one Brauer quotient of a twisted fixed
//! space per automorphism in `S`, glued into a graded algebra.

use super::algebra::{make_kn_interior, InteriorHom, NInteriorGAlgebra};
use super::twisted::{twisted_fixed_points, twisted_trace_image};
use crate::error::{Error, Result};
use crate::falgebra::{
    fixed_points, ActionOnAlgebra, Algebra, CoordinateMap, Fe, Field, Matrix, Subalgebra, Subspace, Vector,
};
use crate::groups::{
    automorphism_index, compute_k_prime, is_closed, maximal_subgroups, normalizer, proper_subgroups, GroupAutomorphism,
    Subgroup,
};

/// One homogeneous component: `N_A^phi(P)` modulo the kernel of its Brauer
/// map, with a chosen section of the projection.
#[derive(Clone, Debug)]
pub struct QuotientComponent {
    pub phi: GroupAutomorphism,
    pub fixed: Subspace,
    pub kernel: Subspace,
    section: Vec<Vector>,
    coords: CoordinateMap,
    offset: usize,
}

impl QuotientComponent {
    pub fn dim(&self) -> usize {
        self.section.len()
    }

    /// Offset of this component in the coordinates of the graded algebra.
    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Lifts of the quotient basis to `N_A^phi(P)`.
    pub fn section(&self) -> &[Vector] {
        &self.section
    }

    /// Quotient coordinates of an element of `N_A^phi(P)`.
    pub fn project(&self, f: &Field, v: &[Fe]) -> Vector {
        let k = self.kernel.dim();
        self.coords.coords(f, v)[k..].to_vec()
    }
}

/// `N̄_A^S(P)`: the graded quotient for a subgroup `S` of `K`, stored both
/// componentwise and as a single algebra whose coordinates concatenate the
/// components in the order of the sorted automorphism list.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    source: NInteriorGAlgebra,
    p: Subgroup,
    auts: Vec<GroupAutomorphism>,
    components: Vec<QuotientComponent>,
    compose: Vec<Vec<usize>>,
    algebra: Algebra,
}

/// Sum of twisted trace images from the given subgroups of `P`.
pub fn brauer_kernel(a: &NInteriorGAlgebra, phi: &GroupAutomorphism, subgroups: &[Subgroup]) -> Result<Subspace> {
    let mut k = Subspace::zero(a.dim());
    for r in subgroups {
        k = k.sum(a.field(), &twisted_trace_image(a, phi, r)?);
    }
    Ok(k)
}

/// Builds `N̄_A^S(P)`. `S` must be closed under composition, consist of
/// automorphisms of `P` in `K`, and `P` must lie in the acting group.
pub fn extended_brauer_quotient(
    a: &NInteriorGAlgebra,
    p: &Subgroup,
    s: &[GroupAutomorphism],
) -> Result<GradedQuotient> {
    let f = a.field();
    let prime = f.characteristic() as usize;
    if !p.is_p_group(prime) {
        return Err(Error::InvalidInput(format!("{p:?} is not a {prime}-group")));
    }
    if !p.is_subgroup_of(a.group()) {
        return Err(Error::NotSubgroup("P is not contained in the acting group".into()));
    }
    let mut auts = s.to_vec();
    auts.sort();
    auts.dedup();
    if auts.is_empty() || auts.iter().any(|x| x.domain() != p) {
        return Err(Error::InvalidInput("S must be a nonempty set of automorphisms of P".into()));
    }
    if !is_closed(&auts) {
        return Err(Error::NotClosed);
    }
    if let Some(bad) = auts.iter().find(|x| !x.displaces_into(a.normal())) {
        return Err(Error::NotInK(format!("{bad:?}")));
    }
    let maximal = maximal_subgroups(p, prime)?;
    let mut components = Vec::with_capacity(auts.len());
    let mut offset = 0;
    for phi in &auts {
        let fixed = twisted_fixed_points(a, phi, p)?.space;
        let kernel = brauer_kernel(a, phi, &maximal)?;
        if !kernel.is_subspace_of(f, &fixed) {
            return Err(Error::Verification(format!("Brauer kernel for {phi:?} leaves the fixed space")));
        }
        let section = kernel.extend_with(f, fixed.basis());
        let mut basis = kernel.basis().to_vec();
        basis.extend(section.iter().cloned());
        let coords = CoordinateMap::new(f, a.dim(), basis)
            .ok_or_else(|| Error::Verification("component basis is dependent".into()))?;
        let dim = section.len();
        components.push(QuotientComponent { phi: phi.clone(), fixed, kernel, section, coords, offset });
        offset += dim;
    }
    let total = offset;
    let compose: Vec<Vec<usize>> =
        auts.iter().map(|x| auts.iter().map(|y| automorphism_index(&auts, &x.compose(y)).unwrap()).collect()).collect();
    let alg = a.algebra();
    let mut products = vec![vec![vec![Fe::ZERO; total]; total]; total];
    for (i, ci) in components.iter().enumerate() {
        for (j, cj) in components.iter().enumerate() {
            let ct = &components[compose[i][j]];
            for (k, x) in ci.section.iter().enumerate() {
                for (l, y) in cj.section.iter().enumerate() {
                    let xy = alg.mul(x, y);
                    if !ct.fixed.contains(f, &xy) {
                        return Err(Error::Verification(format!(
                            "product of {:?} and {:?} components leaves the composite fixed space",
                            ci.phi, cj.phi
                        )));
                    }
                    let pr = ct.project(f, &xy);
                    products[ci.offset + k][cj.offset + l][ct.offset..ct.offset + ct.dim()].copy_from_slice(&pr);
                }
            }
        }
    }
    let id = auts.iter().position(|x| x.is_identity()).ok_or(Error::NotClosed)?;
    let mut unit = vec![Fe::ZERO; total];
    let cid = &components[id];
    unit[cid.offset..cid.offset + cid.dim()].copy_from_slice(&cid.project(f, alg.unit()));
    let algebra = Algebra::from_products_unchecked(f, total, &products, unit)?;
    Ok(GradedQuotient { source: a.clone(), p: p.clone(), auts, components, compose, algebra })
}

impl GradedQuotient {
    pub fn source(&self) -> &NInteriorGAlgebra {
        &self.source
    }

    pub fn p(&self) -> &Subgroup {
        &self.p
    }

    pub fn automorphisms(&self) -> &[GroupAutomorphism] {
        &self.auts
    }

    pub fn components(&self) -> &[QuotientComponent] {
        &self.components
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn component_index(&self, phi: &GroupAutomorphism) -> Option<usize> {
        automorphism_index(&self.auts, phi)
    }

    pub fn identity_component(&self) -> usize {
        self.auts.iter().position(|x| x.is_identity()).unwrap()
    }

    /// Index of the composite `auts[i] ∘ auts[j]`.
    pub fn compose_index(&self, i: usize, j: usize) -> usize {
        self.compose[i][j]
    }

    /// The class of `v` (an element of `N_A^phi(P)` for the component's
    /// `phi`) as an element of the graded algebra.
    pub fn project(&self, comp: usize, v: &[Fe]) -> Result<Vector> {
        let f = self.field();
        let c = &self.components[comp];
        if !c.fixed.contains(f, v) {
            return Err(Error::NotFixed(format!("element is not in the {:?} component", c.phi)));
        }
        let mut out = vec![Fe::ZERO; self.dim()];
        out[c.offset..c.offset + c.dim()].copy_from_slice(&c.project(f, v));
        Ok(out)
    }

    /// `Br_P(a)` for `a` in `A^P`, landing in the identity component.
    pub fn brauer(&self, a: &[Fe]) -> Result<Vector> {
        self.project(self.identity_component(), a)
    }

    /// The part of a graded element lying in component `comp`, as a vector
    /// of the full graded algebra.
    pub fn homogeneous_part(&self, v: &[Fe], comp: usize) -> Vector {
        let c = &self.components[comp];
        let mut out = vec![Fe::ZERO; self.dim()];
        out[c.offset..c.offset + c.dim()].copy_from_slice(&v[c.offset..c.offset + c.dim()]);
        out
    }

    /// Span of the component `comp` inside the graded algebra.
    pub fn component_space(&self, comp: usize) -> Subspace {
        let c = &self.components[comp];
        Subspace::span(self.field(), self.dim(), (c.offset..c.offset + c.dim()).map(|i| self.algebra.basis_element(i)))
    }

    /// A lift to `A` of the component `comp` of a graded element.
    pub fn lift(&self, v: &[Fe], comp: usize) -> Vector {
        let f = self.field();
        let c = &self.components[comp];
        let mut out = vec![Fe::ZERO; self.source.dim()];
        for (k, s) in c.section.iter().enumerate() {
            crate::falgebra::axpy(f, &mut out, v[c.offset + k], s);
        }
        out
    }

    /// `N_N^S(P)`: elements of `N` normalizing `P` whose conjugation lies in `S`.
    pub fn interior_group(&self) -> Result<Subgroup> {
        let n = self.source.normal();
        let norm = normalizer(n, &self.p)?;
        let members = norm
            .members()
            .iter()
            .copied()
            .filter(|&x| self.component_index(&GroupAutomorphism::conjugation(&self.p, x)).is_some())
            .collect();
        Subgroup::from_members(n.parent(), members)
    }

    /// The interior structure: `x` in `N_N^S(P)` goes to the class of
    /// `alpha(x)` in the component of `c_x`.
    pub fn interior(&self, x: usize) -> Result<Vector> {
        if !self.source.normal().contains(x) || !self.p.is_normalized_by(x) {
            return Err(Error::InvalidInput("element is not in N_N(P)".into()));
        }
        let cx = GroupAutomorphism::conjugation(&self.p, x);
        let comp = self.component_index(&cx).ok_or_else(|| Error::NotInK(format!("conjugation {cx:?} is not in S")))?;
        self.project(comp, self.source.alpha(x))
    }

    /// The action of `h <= N_G(P)` (inside the acting group): `x` sends the
    /// `phi` component to the `x.phi` component through `phi(x)`.
    pub fn action(&self, h: &Subgroup) -> Result<ActionOnAlgebra> {
        let f = self.field();
        if !h.is_subgroup_of(self.source.group()) || !h.members().iter().all(|&x| self.p.is_normalized_by(x)) {
            return Err(Error::InvalidAction("acting group must lie in N_G(P)".into()));
        }
        let mut matrices = Vec::with_capacity(h.order());
        for &x in h.members() {
            let mut cols = vec![Vec::new(); self.dim()];
            for c in &self.components {
                let target = self
                    .component_index(&c.phi.conjugated_by(x))
                    .ok_or_else(|| Error::InvalidAction("S is not stable under the acting group".into()))?;
                for (k, s) in c.section.iter().enumerate() {
                    let img = self.source.phi().apply(f, x, s);
                    cols[c.offset + k] = self.project(target, &img)?;
                }
            }
            matrices.push(Matrix::from_columns(self.dim(), &cols));
        }
        ActionOnAlgebra::new(h, matrices)
    }

    /// `N̄_A^S(P)^H`.
    pub fn fixed_subalgebra(&self, h: &Subgroup) -> Result<Subalgebra> {
        fixed_points(&self.algebra, &self.action(h)?)
    }

    /// Brauer kernel of a component recomputed from every proper subgroup.
    pub fn kernel_from_all_proper(&self, comp: usize) -> Result<Subspace> {
        let prime = self.field().characteristic() as usize;
        let proper = proper_subgroups(&self.p, prime)?;
        brauer_kernel(&self.source, &self.components[comp].phi, &proper)
    }
}

/// The isomorphism `kN_N(P) -> N̄_{kN}^{K'}(P)`, verified.
#[derive(Clone, Debug)]
pub struct RhoKPrime {
    pub quotient: GradedQuotient,
    pub domain: Subgroup,
    /// Column `k` is the image of the `k`-th member of `N_N(P)`.
    pub matrix: Matrix,
}

/// Builds `rho^{K'}` for `A = kN` and checks that it is bijective,
/// unital, multiplicative and `N_G(P)`-equivariant.
pub fn rho_k_prime(g: &Subgroup, n: &Subgroup, p: &Subgroup, field: &Field) -> Result<RhoKPrime> {
    let a = make_kn_interior(g, n, field)?;
    let kp = compute_k_prime(n, p)?;
    let q = extended_brauer_quotient(&a, p, &kp)?;
    let domain = normalizer(n, p)?;
    let cols = domain.members().iter().map(|&x| q.interior(x)).collect::<Result<Vec<_>>>()?;
    let matrix = Matrix::from_columns(q.dim(), &cols);
    if q.dim() != domain.order() || matrix.rank(field) != q.dim() {
        return Err(Error::Verification(format!(
            "rho is not bijective: |N_N(P)| = {}, quotient dimension {}, rank {}",
            domain.order(),
            q.dim(),
            matrix.rank(field)
        )));
    }
    let par = g.parent();
    for (i, &x) in domain.members().iter().enumerate() {
        for (j, &y) in domain.members().iter().enumerate() {
            let k = domain.position(par.mul(x, y)).unwrap();
            if q.algebra().mul(&cols[i], &cols[j]) != cols[k] {
                return Err(Error::Verification("rho is not multiplicative".into()));
            }
        }
    }
    if cols[domain.position(0).unwrap()] != *q.algebra().unit() {
        return Err(Error::Verification("rho does not preserve the unit".into()));
    }
    let ng = normalizer(g, p)?;
    let act = q.action(&ng)?;
    for &x in ng.generators() {
        for (i, &y) in domain.members().iter().enumerate() {
            let k = domain.position(par.conj(x, y)).unwrap();
            if act.apply(field, x, &cols[i]) != cols[k] {
                return Err(Error::Verification("rho is not N_G(P)-equivariant".into()));
            }
        }
    }
    Ok(RhoKPrime { quotient: q, domain, matrix })
}

/// The map `N̄_f^S` induced by a homomorphism of N-interior G-algebras.
#[derive(Clone, Debug)]
pub struct InducedHom {
    pub source: GradedQuotient,
    pub target: GradedQuotient,
    pub matrix: Matrix,
}

impl InducedHom {
    pub fn is_injective(&self) -> bool {
        self.matrix.rank(self.source.field()) == self.source.dim()
    }

    /// Multiplicativity and unit preservation on basis pairs.
    pub fn check(&self) -> Result<()> {
        let f = self.source.field();
        let (sa, ta) = (self.source.algebra(), self.target.algebra());
        if self.matrix.apply(f, sa.unit()) != *ta.unit() {
            return Err(Error::NotHomomorphism("induced map does not preserve the unit".into()));
        }
        for i in 0..sa.dim() {
            for j in 0..sa.dim() {
                let lhs = self.matrix.apply(f, &sa.basis_product(i, j));
                let rhs = ta.mul(&self.matrix.column(i), &self.matrix.column(j));
                if lhs != rhs {
                    return Err(Error::NotHomomorphism(format!("induced map not multiplicative on ({i}, {j})")));
                }
            }
        }
        Ok(())
    }
}

/// Builds `N̄_f^S: N̄_A^S(P) -> N̄_B^S(P)` componentwise.
pub fn induced_hom(hom: &InteriorHom, p: &Subgroup, s: &[GroupAutomorphism]) -> Result<InducedHom> {
    let f = hom.source.field();
    let qa = extended_brauer_quotient(&hom.source, p, s)?;
    let qb = extended_brauer_quotient(&hom.target, p, s)?;
    let mut cols = Vec::with_capacity(qa.dim());
    for (i, c) in qa.components().iter().enumerate() {
        for v in c.section() {
            let img = hom.matrix.apply(f, v);
            cols.push(qb.project(i, &img)?);
        }
    }
    let matrix = Matrix::from_columns(qb.dim(), &cols);
    let out = InducedHom { source: qa, target: qb, matrix };
    out.check()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{compute_k, symmetric_group, FiniteGroup, Perm};
    use crate::interior::crossed_product;
    use std::sync::Arc;

    fn sub(g: &Arc<FiniteGroup>, cycles: &[&[&[usize]]]) -> Subgroup {
        let perms: Vec<Perm> = cycles.iter().map(|c| Perm::from_cycles(g.degree(), c).unwrap()).collect();
        Subgroup::from_perms(g, &perms).unwrap()
    }

    #[test]
    fn identity_component_is_brauer_quotient() {
        // (kN)(P) has dimension |C_N(P)|
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let a4 = sub(&s4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let c2 = sub(&s4, &[&[&[0, 1], &[2, 3]]]);
        let f = Field::new(2, 1).unwrap();
        let a = make_kn_interior(&g, &a4, &f).unwrap();
        for p in [&v4, &c2] {
            let q = extended_brauer_quotient(&a, p, &[GroupAutomorphism::identity(p)]).unwrap();
            let cent =
                a4.members().iter().filter(|&&x| p.members().iter().all(|&u| s4.mul(x, u) == s4.mul(u, x))).count();
            assert_eq!(q.dim(), cent);
        }
        let triv = Subgroup::trivial(&s4);
        let q = extended_brauer_quotient(&a, &triv, &[GroupAutomorphism::identity(&triv)]).unwrap();
        assert_eq!(q.dim(), 12);
    }

    #[test]
    fn ka4_k_prime_has_dimension_twelve() {
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let a4 = sub(&s4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let f = Field::new(2, 2).unwrap();
        let rho = rho_k_prime(&g, &a4, &v4, &f).unwrap();
        assert_eq!(rho.quotient.automorphisms().len(), 3);
        assert_eq!(rho.quotient.dim(), 12);
        rho.quotient.algebra().check_associative().unwrap();
    }

    #[test]
    fn rho_for_s3() {
        let s3 = symmetric_group(3).unwrap();
        let g = Subgroup::whole(&s3);
        let a3 = sub(&s3, &[&[&[0, 1, 2]]]);
        let rho = rho_k_prime(&g, &a3, &a3, &Field::new(3, 1).unwrap()).unwrap();
        assert_eq!(rho.quotient.dim(), 3);
        assert_eq!(rho.quotient.automorphisms().len(), 1);
    }

    #[test]
    fn full_k_quotient_and_kernels() {
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let f = Field::new(2, 2).unwrap();
        let a = make_kn_interior(&g, &v4, &f).unwrap();
        let k = compute_k(&g, &v4, &v4).unwrap();
        assert_eq!(k.len(), 6);
        let q = extended_brauer_quotient(&a, &v4, &k).unwrap();
        q.algebra().check_associative().unwrap();
        q.algebra().check_unit().unwrap();
        for c in 0..k.len() {
            assert_eq!(q.kernel_from_all_proper(c).unwrap(), q.components()[c].kernel);
        }
        let act = q.action(&g).unwrap();
        act.check(q.algebra()).unwrap();
        assert!(extended_brauer_quotient(&a, &v4, &k[1..]).is_err());
    }

    #[test]
    fn induced_maps() {
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let d8 = sub(&s4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]);
        let f = Field::new(2, 1).unwrap();
        let a = make_kn_interior(&g, &v4, &f).unwrap();
        let k = compute_k(&g, &v4, &v4).unwrap();
        let id = induced_hom(&InteriorHom::identity(&a), &v4, &k).unwrap();
        assert_eq!(id.matrix, Matrix::identity(id.source.dim()));
        let c = crossed_product(&a, &d8).unwrap();
        let inc = InteriorHom::into_crossed_product(&c).unwrap();
        let ind = induced_hom(&inc, &v4, &k).unwrap();
        assert!(ind.is_injective());
    }
}
