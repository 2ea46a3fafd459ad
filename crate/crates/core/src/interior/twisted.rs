use super::algebra::NInteriorGAlgebra;
use crate::error::{Error, Result};
use crate::falgebra::{axpy, zero_vec, Fe, Matrix, Subspace, Vector};
use crate::groups::{coset_reps, GroupAutomorphism, Side, Subgroup};

/// Matrix of the twisted diagonal action of `(phi(u), u)`:
/// `a -> alpha(phi(u) u^-1) . (u.a)`.
pub fn twisted_action(a: &NInteriorGAlgebra, phi: &GroupAutomorphism, u: usize) -> Result<Matrix> {
    let g = a.group().parent();
    let disp = g.mul(phi.apply(u), g.inv(u));
    if !a.normal().contains(disp) {
        return Err(Error::NotInK(format!("{phi:?} displaces {} outside N", g.element(u))));
    }
    let alg = a.algebra();
    let m = a.phi().matrix(u);
    if disp == 0 {
        return Ok(m.clone());
    }
    let ad = a.alpha(disp);
    let cols: Vec<Vector> = (0..alg.dim()).map(|j| alg.mul(ad, &m.column(j))).collect();
    Ok(Matrix::from_columns(alg.dim(), &cols))
}

/// `N_A^phi(R)`: elements fixed by the twisted action of `R <= P`.
#[derive(Clone, Debug)]
pub struct TwistedFixedSpace {
    pub phi: GroupAutomorphism,
    pub subgroup: Subgroup,
    pub space: Subspace,
}

/// The fixed space of `Delta_phi(R)` for `R` a subgroup of the domain of
/// `phi`.
pub fn twisted_fixed_points(a: &NInteriorGAlgebra, phi: &GroupAutomorphism, r: &Subgroup) -> Result<TwistedFixedSpace> {
    if !r.is_subgroup_of(phi.domain()) {
        return Err(Error::NotSubgroup("R is not contained in the domain of phi".into()));
    }
    let f = a.field();
    let d = a.dim();
    let space = if r.is_trivial() {
        Subspace::full(d)
    } else {
        let id = Matrix::identity(d);
        let mut rows = Vec::new();
        for &u in r.generators() {
            let m = twisted_action(a, phi, u)?.sub(f, &id);
            rows.extend((0..d).map(|i| m.row(i).to_vec()));
        }
        Subspace::kernel_of(f, &Matrix::from_rows(d, &rows))
    };
    Ok(TwistedFixedSpace { phi: phi.clone(), subgroup: r.clone(), space })
}

fn is_twisted_fixed(a: &NInteriorGAlgebra, phi: &GroupAutomorphism, r: &Subgroup, v: &[Fe]) -> Result<bool> {
    for &u in r.generators() {
        if twisted_action(a, phi, u)?.apply(a.field(), v) != v {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Tr_{Delta_phi(R)}^{Delta_phi(P)}(c)`, summing over the left coset
/// representatives of `R` in the domain `P` of `phi`.
pub fn twisted_trace(a: &NInteriorGAlgebra, phi: &GroupAutomorphism, r: &Subgroup, c: &[Fe]) -> Result<Vector> {
    let reps = coset_reps(phi.domain(), r, Side::Left)?;
    twisted_trace_with_reps(a, phi, r, &reps, c)
}

/// As [`twisted_trace`] with caller-chosen coset representatives.
pub fn twisted_trace_with_reps(
    a: &NInteriorGAlgebra,
    phi: &GroupAutomorphism,
    r: &Subgroup,
    reps: &[usize],
    c: &[Fe],
) -> Result<Vector> {
    if !is_twisted_fixed(a, phi, r, c)? {
        return Err(Error::NotFixed(format!("element is not fixed by the twisted action of {r:?}")));
    }
    let f = a.field();
    let mut out = zero_vec(c.len());
    for &u in reps {
        axpy(f, &mut out, Fe::ONE, &twisted_action(a, phi, u)?.apply(f, c));
    }
    Ok(out)
}

/// `Tr_{Delta_phi(R)}^{Delta_phi(P)}(N_A^phi(R))`.
pub fn twisted_trace_image(a: &NInteriorGAlgebra, phi: &GroupAutomorphism, r: &Subgroup) -> Result<Subspace> {
    let fixed = twisted_fixed_points(a, phi, r)?;
    let reps = coset_reps(phi.domain(), r, Side::Left)?;
    let mats = reps.iter().map(|&u| twisted_action(a, phi, u)).collect::<Result<Vec<_>>>()?;
    let f = a.field();
    let images = fixed.space.basis().iter().map(|b| {
        let mut out = zero_vec(b.len());
        for m in &mats {
            axpy(f, &mut out, Fe::ONE, &m.apply(f, b));
        }
        out
    });
    Ok(Subspace::span(f, a.dim(), images.collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::falgebra::{fixed_space, relative_trace, Field};
    use crate::groups::{automorphism_group, compute_k, symmetric_group, FiniteGroup, Perm};
    use crate::interior::make_kn_interior;
    use std::sync::Arc;

    fn sub(g: &Arc<FiniteGroup>, cycles: &[&[&[usize]]]) -> Subgroup {
        let perms: Vec<Perm> = cycles.iter().map(|c| Perm::from_cycles(g.degree(), c).unwrap()).collect();
        Subgroup::from_perms(g, &perms).unwrap()
    }

    #[test]
    fn inversion_on_ka3() {
        let s3 = symmetric_group(3).unwrap();
        let g = Subgroup::whole(&s3);
        let a3 = sub(&s3, &[&[&[0, 1, 2]]]);
        let f = Field::new(3, 1).unwrap();
        let a = make_kn_interior(&g, &a3, &f).unwrap();
        let auts = automorphism_group(&a3).unwrap();
        let inv = auts.iter().find(|x| !x.is_identity()).unwrap();
        let u = a3.generators()[0];
        let m = twisted_action(&a, inv, u).unwrap();
        // a -> alpha(u^-2) (u.a); A3 is abelian so u.a = a
        let u2 = s3.inv(s3.mul(u, u));
        let expected = a.algebra().left_mul_matrix(a.alpha(u2));
        assert_eq!(m, expected);
        assert_eq!(twisted_action(&a, inv, 0).unwrap(), Matrix::identity(3));
        // fixed space: multiplication by a 3-cycle u^-2 = u fixes only the
        // span of the sum of all elements
        let fx = twisted_fixed_points(&a, inv, &a3).unwrap();
        assert_eq!(fx.space.dim(), 1);
        let id = GroupAutomorphism::identity(&a3);
        let plain = twisted_fixed_points(&a, &id, &a3).unwrap();
        assert_eq!(plain.space, fixed_space(&f, 3, &a.phi().restrict(&a3).unwrap(), &a3));
    }

    #[test]
    fn action_outside_k_is_rejected() {
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let a = make_kn_interior(&g, &v4, &Field::new(2, 1).unwrap()).unwrap();
        // sending (0 1) to (0 1)(2 3) displaces it by (2 3), outside V4
        let p = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 1]]]);
        let k = compute_k(&g, &v4, &p).unwrap();
        let all = automorphism_group(&p).unwrap();
        assert!(k.len() < all.len());
        let bad = all.iter().find(|x| !k.contains(x)).unwrap();
        let moved = p.members().iter().copied().find(|&u| twisted_action(&a, bad, u).is_err());
        assert!(moved.is_some());
    }

    #[test]
    fn untwisted_trace_matches_relative_trace() {
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let a4 = sub(&s4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let r = sub(&s4, &[&[&[0, 1], &[2, 3]]]);
        let f = Field::new(2, 1).unwrap();
        let a = make_kn_interior(&g, &a4, &f).unwrap();
        let id = GroupAutomorphism::identity(&v4);
        let act = a.phi().restrict(&v4).unwrap();
        let fixed = twisted_fixed_points(&a, &id, &r).unwrap();
        for b in fixed.space.basis() {
            let t1 = twisted_trace(&a, &id, &r, b).unwrap();
            let t2 = relative_trace(&f, &act, &r, &v4, b).unwrap();
            assert_eq!(t1, t2);
            // explicit two-term sum
            let w = v4.members().iter().copied().find(|&x| !r.contains(x)).unwrap();
            let mut expected = b.clone();
            axpy(&f, &mut expected, Fe::ONE, &act.apply(&f, w, b));
            assert_eq!(t1, expected);
        }
        assert_eq!(twisted_trace(&a, &id, &v4, &a.algebra().basis_element(0)).unwrap(), a.algebra().basis_element(0));
    }
}
