//! Exact verification of the action, grading and trace-product laws on a
//! concrete N-interior G-algebra.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::NInteriorGAlgebra;
use super::quotient::{brauer_kernel, GradedQuotient};
use super::twisted::{twisted_action, twisted_fixed_points, twisted_trace};
use crate::corresp::report::Facts;
use crate::error::{Error, Result};
use crate::falgebra::{axpy, Fe, Matrix, Subspace, Vector};
use crate::groups::{automorphism_index, compute_k_prime, normalizer, proper_subgroups, GroupAutomorphism, Subgroup};

fn fail(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}

/// Twisted action matrices memoised per (automorphism, element).
struct ActionCache<'a> {
    a: &'a NInteriorGAlgebra,
    cache: HashMap<(usize, usize), Matrix>,
}

impl<'a> ActionCache<'a> {
    fn new(a: &'a NInteriorGAlgebra) -> Self {
        ActionCache { a, cache: HashMap::new() }
    }

    fn get(&mut self, auts: &[GroupAutomorphism], i: usize, u: usize) -> Result<&Matrix> {
        if !self.cache.contains_key(&(i, u)) {
            let m = twisted_action(self.a, &auts[i], u)?;
            self.cache.insert((i, u), m);
        }
        Ok(&self.cache[&(i, u)])
    }
}

/// The twisted assignment `u -> (a -> alpha(phi(u) u^-1) u.a)` is an action
/// of `P`, for every `phi` in `S`, checked on all pairs of elements.
pub fn check_twisted_action_law(a: &NInteriorGAlgebra, p: &Subgroup, s: &[GroupAutomorphism]) -> Result<Facts> {
    let f = a.field();
    let g = p.parent();
    let mut cache = ActionCache::new(a);
    let mut pairs = 0usize;
    for i in 0..s.len() {
        if *cache.get(s, i, 0)? != Matrix::identity(a.dim()) {
            return Err(fail(format!("identity does not act trivially for {:?}", s[i])));
        }
        for &u in p.members() {
            for &v in p.members() {
                let lhs = cache.get(s, i, u)?.clone().mul(f, cache.get(s, i, v)?);
                if lhs != *cache.get(s, i, g.mul(u, v))? {
                    return Err(fail(format!("action law fails for {:?}", s[i])));
                }
                pairs += 1;
            }
        }
    }
    let mut facts = Facts::new();
    facts.push("automorphisms", s.len());
    facts.push("pairs_checked", pairs);
    Ok(facts)
}

/// Graded containment `N^psi N^phi ⊆ N^{psi∘phi}` on all basis pairs, the
/// action axioms of `N_G(P)` on `S`, and that the action on the quotient
/// moves the `phi` component isomorphically onto the `x.phi` component,
/// multiplicatively and compatibly with the interior structure.
pub fn check_graded_structure(q: &GradedQuotient) -> Result<Facts> {
    let a = q.source();
    let f = a.field();
    let p = q.p();
    let s = q.automorphisms();
    let alg = a.algebra();
    let comps = q.components();
    let mut products = 0usize;
    for (i, ci) in comps.iter().enumerate() {
        for (j, cj) in comps.iter().enumerate() {
            let t = &comps[q.compose_index(i, j)];
            for x in ci.fixed.basis() {
                for y in cj.fixed.basis() {
                    if !t.fixed.contains(f, &alg.mul(x, y)) {
                        return Err(fail(format!("{:?} times {:?} leaves the composite fixed space", ci.phi, cj.phi)));
                    }
                    products += 1;
                }
            }
        }
    }
    let g = p.parent();
    let ng = normalizer(a.group(), p)?;
    for &x in ng.members() {
        for &y in ng.members() {
            for phi in s {
                if phi.conjugated_by(g.mul(x, y)) != phi.conjugated_by(y).conjugated_by(x) {
                    return Err(fail("conjugation is not an action on S"));
                }
            }
        }
    }
    let kp = compute_k_prime(a.normal(), p)?;
    let nn = normalizer(a.normal(), p)?;
    for &x in nn.members() {
        for phi in &kp {
            if automorphism_index(&kp, &phi.conjugated_by(x)).is_none() {
                return Err(fail("N_N(P) does not preserve K'"));
            }
        }
    }
    let act = q.action(&ng)?;
    act.check(q.algebra())?;
    for &x in ng.generators() {
        let m = act.matrix(x);
        for (i, c) in comps.iter().enumerate() {
            let target = q.component_index(&c.phi.conjugated_by(x)).unwrap();
            let tc = &comps[target];
            if tc.dim() != c.dim() {
                return Err(fail("conjugate components have different dimensions"));
            }
            let cols: Vec<Vector> = (c.offset()..c.offset() + c.dim()).map(|k| m.column(k)).collect();
            let block = Subspace::span(f, q.dim(), cols);
            if block != q.component_space(target) {
                return Err(fail(format!("action does not map component {i} onto component {target}")));
            }
        }
    }
    let interior = q.interior_group()?;
    let qa = q.algebra();
    for &x in interior.generators() {
        let ix = q.interior(x)?;
        for k in 0..q.dim() {
            let b = qa.basis_element(k);
            if qa.mul(&act.apply(f, x, &b), &ix) != qa.mul(&ix, &b) {
                return Err(fail("interior elements do not induce the action"));
            }
        }
    }
    let mut facts = Facts::new();
    facts.push("basis_products_checked", products);
    facts.push("normalizer_order", ng.order());
    facts.push("interior_group_order", interior.order());
    facts.push("component_dims", comps.iter().map(|c| c.dim()).collect::<Vec<_>>());
    Ok(facts)
}

/// Image of `r` under an automorphism of `P`.
fn image(phi: &GroupAutomorphism, r: &Subgroup) -> Result<Subgroup> {
    Subgroup::from_members(r.parent(), r.members().iter().map(|&u| phi.apply(u)).collect())
}

/// The trace-product identities
/// `Tr(c) Tr(c') = Tr_{R'}^{phi∘phi'}(Tr(c) c') = Tr_{phi'^-1(R)}^{phi∘phi'}(c Tr(c'))`
/// on seeded random samples, followed by closure of the Brauer kernels
/// under the graded product and equality of maximal-only and
/// all-proper kernels for `|P| <= 16`.
pub fn check_trace_products(q: &GradedQuotient, seed: u64, samples: usize) -> Result<Facts> {
    let a = q.source();
    let f = a.field();
    let p = q.p();
    let s = q.automorphisms();
    let alg = a.algebra();
    let prime = f.characteristic() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut subgroups = proper_subgroups(p, prime)?;
    subgroups.push(p.clone());
    let rand_elem = |space: &Subspace, rng: &mut ChaCha8Rng| -> Vector {
        let mut v = vec![Fe::ZERO; space.ambient_dim()];
        for b in space.basis() {
            axpy(f, &mut v, f.element(rng.gen_range(0..f.order())), b);
        }
        v
    };
    let mut checked = 0usize;
    for i in 0..s.len() {
        for j in 0..s.len() {
            let comp = q.compose_index(i, j);
            let (phi, phi2, prod) = (&s[i], &s[j], &s[comp]);
            for _ in 0..samples {
                let r = &subgroups[rng.gen_range(0..subgroups.len())];
                let r2 = &subgroups[rng.gen_range(0..subgroups.len())];
                let c = rand_elem(&twisted_fixed_points(a, phi, r)?.space, &mut rng);
                let c2 = rand_elem(&twisted_fixed_points(a, phi2, r2)?.space, &mut rng);
                let t = twisted_trace(a, phi, r, &c)?;
                let t2 = twisted_trace(a, phi2, r2, &c2)?;
                let lhs = alg.mul(&t, &t2);
                let right1 = twisted_trace(a, prod, r2, &alg.mul(&t, &c2))?;
                if lhs != right1 {
                    return Err(fail(format!("trace product identity fails for {phi:?}, {phi2:?}")));
                }
                let r_pulled = image(&phi2.inverse(), r)?;
                let right2 = twisted_trace(a, prod, &r_pulled, &alg.mul(&c, &t2))?;
                if lhs != right2 {
                    return Err(fail(format!("mirrored trace product identity fails for {phi:?}, {phi2:?}")));
                }
                checked += 1;
            }
        }
    }
    let comps = q.components();
    for (i, ci) in comps.iter().enumerate() {
        for (j, cj) in comps.iter().enumerate() {
            let t = &comps[q.compose_index(i, j)];
            for x in ci.kernel.basis() {
                for y in cj.fixed.basis() {
                    if !t.kernel.contains(f, &alg.mul(x, y)) {
                        return Err(fail("kernel is not a left ideal of the graded algebra"));
                    }
                }
            }
            for x in ci.fixed.basis() {
                for y in cj.kernel.basis() {
                    if !t.kernel.contains(f, &alg.mul(x, y)) {
                        return Err(fail("kernel is not a right ideal of the graded algebra"));
                    }
                }
            }
        }
    }
    let mut kernels_compared = 0usize;
    if p.order() <= 16 {
        for (i, c) in comps.iter().enumerate() {
            let all = brauer_kernel(a, &c.phi, &subgroups[..subgroups.len() - 1])?;
            if all != c.kernel {
                return Err(fail(format!("maximal-subgroup kernel differs from the full kernel in component {i}")));
            }
            kernels_compared += 1;
        }
    }
    let mut facts = Facts::new();
    facts.push("samples_checked", checked);
    facts.push("kernels_compared", kernels_compared);
    facts.push("kernel_dims", comps.iter().map(|c| c.kernel.dim()).collect::<Vec<_>>());
    Ok(facts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::falgebra::Field;
    use crate::groups::{compute_k, symmetric_group, FiniteGroup, Perm};
    use crate::interior::{extended_brauer_quotient, make_kn_interior};
    use std::sync::Arc;

    fn sub(g: &Arc<FiniteGroup>, cycles: &[&[&[usize]]]) -> Subgroup {
        let perms: Vec<Perm> = cycles.iter().map(|c| Perm::from_cycles(g.degree(), c).unwrap()).collect();
        Subgroup::from_perms(g, &perms).unwrap()
    }

    #[test]
    fn laws_hold_for_s4_over_a4() {
        let s4 = symmetric_group(4).unwrap();
        let g = Subgroup::whole(&s4);
        let a4 = sub(&s4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let f = Field::new(2, 2).unwrap();
        let a = make_kn_interior(&g, &a4, &f).unwrap();
        let k = compute_k(&g, &a4, &v4).unwrap();
        check_twisted_action_law(&a, &v4, &k).unwrap();
        let q = extended_brauer_quotient(&a, &v4, &k).unwrap();
        check_graded_structure(&q).unwrap();
        check_trace_products(&q, 1, 2).unwrap();
    }
}
