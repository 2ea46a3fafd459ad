//! Normalizers, centralizers, coset representatives, conjugacy classes of
//! p-subgroups, and the automorphism subgroups `K`, `K'` and `T` attached to
//! a normal subgroup `N` and a p-subgroup `P`.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use super::automorphism::{automorphism_group, is_closed, GroupAutomorphism};
use super::group::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// Cap on `|H|` for the p-subgroup search.
pub const P_SUBGROUP_CAP: usize = 10_000;

fn same_parent(a: &Subgroup, b: &Subgroup) -> Result<()> {
    if Arc::ptr_eq(a.parent(), b.parent()) {
        Ok(())
    } else {
        Err(Error::NotSubgroup("subgroups of different groups".into()))
    }
}

/// `{g in within | g P g^-1 = P}`
pub fn normalizer(within: &Subgroup, p: &Subgroup) -> Result<Subgroup> {
    same_parent(within, p)?;
    let members = within.members().iter().copied().filter(|&g| p.is_normalized_by(g)).collect();
    Subgroup::from_members(within.parent(), members)
}

/// `{g in within | g u = u g for all u in P}`
pub fn centralizer(within: &Subgroup, p: &Subgroup) -> Result<Subgroup> {
    same_parent(within, p)?;
    let g = within.parent();
    let members = within
        .members()
        .iter()
        .copied()
        .filter(|&x| p.generators().iter().all(|&u| g.mul(x, u) == g.mul(u, x)))
        .collect();
    Subgroup::from_members(g, members)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Cosets `h L`
    Left,
    /// Cosets `L h`
    Right,
}

/// One representative per coset of `l` in `h`: the first element of each
/// coset in enumeration order. The identity comes first.
pub fn coset_reps(h: &Subgroup, l: &Subgroup, side: Side) -> Result<Vec<usize>> {
    same_parent(h, l)?;
    if !l.is_subgroup_of(h) {
        return Err(Error::NotSubgroup("coset subgroup is not contained in the group".into()));
    }
    let g = h.parent();
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::with_capacity(h.order() / l.order());
    for &x in h.members() {
        if covered[x] {
            continue;
        }
        reps.push(x);
        for &y in l.members() {
            let z = match side {
                Side::Left => g.mul(x, y),
                Side::Right => g.mul(y, x),
            };
            covered[z] = true;
        }
    }
    Ok(reps)
}

/// The representative of `x`'s coset among `reps` (as returned by
/// [`coset_reps`]), together with the element of `l` relating them:
/// `x = rep * l_part` for left cosets, `x = l_part * rep` for right cosets.
pub fn coset_decompose(l: &Subgroup, reps: &[usize], side: Side, x: usize) -> (usize, usize) {
    let g = l.parent();
    for &r in reps {
        let part = match side {
            Side::Left => g.mul(g.inv(r), x),
            Side::Right => g.mul(x, g.inv(r)),
        };
        if l.contains(part) {
            return (r, part);
        }
    }
    panic!("element outside the union of cosets");
}

pub fn are_conjugate(within: &Subgroup, a: &Subgroup, b: &Subgroup) -> bool {
    a.order() == b.order() && within.members().iter().any(|&h| a.conjugate(h) == *b)
}

/// True when some `within`-conjugate of `a` lies in `b`.
pub fn is_subconjugate(within: &Subgroup, a: &Subgroup, b: &Subgroup) -> bool {
    b.order().is_multiple_of(a.order()) && within.members().iter().any(|&h| a.conjugate(h).is_subgroup_of(b))
}

/// Lexicographically least member list among the `within`-conjugates.
fn canonical_conjugate(within: &Subgroup, q: &Subgroup) -> Vec<usize> {
    let g = q.parent();
    within
        .members()
        .iter()
        .map(|&h| {
            let mut m: Vec<usize> = q.members().iter().map(|&x| g.conj(h, x)).collect();
            m.sort_unstable();
            m
        })
        .min()
        .unwrap()
}

/// Every p-subgroup of `h`, sorted by order then member list.
pub fn all_p_subgroups(h: &Subgroup, p: usize) -> Result<Vec<Subgroup>> {
    p_subgroup_layers(h, p, false)
}

/// One representative per `h`-conjugacy class of p-subgroups (including the
/// trivial one), each the lexicographically least member of its class,
/// sorted by order then member list.
pub fn p_subgroups_up_to_conjugacy(h: &Subgroup, p: usize) -> Result<Vec<Subgroup>> {
    p_subgroup_layers(h, p, true)
}

fn p_subgroup_layers(h: &Subgroup, p: usize, up_to_conjugacy: bool) -> Result<Vec<Subgroup>> {
    if h.order() > P_SUBGROUP_CAP {
        return Err(Error::CapExceeded { what: "p-subgroup search", order: h.order(), cap: P_SUBGROUP_CAP });
    }
    let g = h.parent();
    let mut layer = vec![Subgroup::trivial(g)];
    let mut out = layer.clone();
    // Every p-subgroup of order p^(k+1) contains a normal subgroup of index p,
    // so extending class representatives one element at a time reaches every class.
    while !layer.is_empty() {
        let mut next: BTreeSet<Vec<usize>> = BTreeSet::new();
        for q in &layer {
            for &x in h.members() {
                if q.contains(x) || !q.is_normalized_by(x) {
                    continue;
                }
                let xp = (0..p).fold(0, |acc, _| g.mul(acc, x));
                if !q.contains(xp) {
                    continue;
                }
                let mut gens = q.generators().to_vec();
                gens.push(x);
                let r = Subgroup::generated(g, &gens);
                let key = if up_to_conjugacy { canonical_conjugate(h, &r) } else { r.members().to_vec() };
                next.insert(key);
            }
        }
        layer = next.into_iter().map(|m| Subgroup::from_members(g, m)).collect::<Result<Vec<_>>>()?;
        out.extend(layer.iter().cloned());
    }
    out.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    Ok(out)
}

/// The first Sylow p-subgroup in the deterministic order of
/// [`p_subgroups_up_to_conjugacy`].
pub fn sylow_subgroup(h: &Subgroup, p: usize) -> Result<Subgroup> {
    let reps = p_subgroups_up_to_conjugacy(h, p)?;
    let top = reps.iter().map(Subgroup::order).max().unwrap();
    Ok(reps.into_iter().find(|q| q.order() == top).unwrap())
}

/// Subgroups of index `p` in the p-group `q`.
pub fn maximal_subgroups(q: &Subgroup, p: usize) -> Result<Vec<Subgroup>> {
    if q.is_trivial() {
        return Ok(Vec::new());
    }
    let target = q.order() / p;
    Ok(all_p_subgroups(q, p)?.into_iter().filter(|r| r.order() == target).collect())
}

/// Subgroups of `q` other than `q` itself.
pub fn proper_subgroups(q: &Subgroup, p: usize) -> Result<Vec<Subgroup>> {
    Ok(all_p_subgroups(q, p)?.into_iter().filter(|r| r.order() < q.order()).collect())
}

fn check_normal(g: &Subgroup, n: &Subgroup) -> Result<()> {
    if n.is_subgroup_of(g) && n.is_normal_in(g) {
        Ok(())
    } else {
        Err(Error::NotNormal(format!("{n:?}")))
    }
}

/// `K = {phi in Aut(P) | phi(u) u^-1 in N for all u in P}`, sorted.
pub fn compute_k(g: &Subgroup, n: &Subgroup, p: &Subgroup) -> Result<Vec<GroupAutomorphism>> {
    same_parent(n, p)?;
    check_normal(g, n)?;
    let k: Vec<_> = automorphism_group(p)?.into_iter().filter(|a| a.displaces_into(n)).collect();
    if !is_closed(&k) {
        return Err(Error::Verification("K is not closed under composition".into()));
    }
    Ok(k)
}

fn conjugation_image(within: &Subgroup, p: &Subgroup) -> Result<Vec<GroupAutomorphism>> {
    let norm = normalizer(within, p)?;
    let set: BTreeSet<GroupAutomorphism> =
        norm.members().iter().map(|&x| GroupAutomorphism::conjugation(p, x)).collect();
    Ok(set.into_iter().collect())
}

/// Conjugations of `P` by elements of `N_N(P)`, deduplicated and sorted.
pub fn compute_k_prime(n: &Subgroup, p: &Subgroup) -> Result<Vec<GroupAutomorphism>> {
    same_parent(n, p)?;
    conjugation_image(n, p)
}

/// `Aut_G(P)`: conjugations by `N_G(P)`, sorted.
pub fn aut_g(g: &Subgroup, p: &Subgroup) -> Result<Vec<GroupAutomorphism>> {
    conjugation_image(g, p)
}

/// `T = Aut_G(P) ∩ K`, sorted.
pub fn compute_t(g: &Subgroup, n: &Subgroup, p: &Subgroup) -> Result<Vec<GroupAutomorphism>> {
    same_parent(n, p)?;
    check_normal(g, n)?;
    Ok(aut_g(g, p)?.into_iter().filter(|a| a.displaces_into(n)).collect())
}

/// Preimage of `t` under `N_G(P) -> Aut(P)`.
pub fn t_normalizer(g: &Subgroup, p: &Subgroup, t: &[GroupAutomorphism]) -> Result<Subgroup> {
    if !is_closed(t) {
        return Err(Error::NotClosed);
    }
    let set: HashSet<&GroupAutomorphism> = t.iter().collect();
    let norm = normalizer(g, p)?;
    let members =
        norm.members().iter().copied().filter(|&x| set.contains(&GroupAutomorphism::conjugation(p, x))).collect();
    Subgroup::from_members(p.parent(), members)
}

/// `N_G(PN/N)` pulled back to `G`, which is the normalizer of `PN` in `G`.
pub fn bar_normalizer(g: &Subgroup, n: &Subgroup, p: &Subgroup) -> Result<Subgroup> {
    same_parent(n, p)?;
    check_normal(g, n)?;
    let pn = p.join(n);
    normalizer(g, &pn)
}

/// The symmetric group on `n` points, generated by `(0 1)` and `(0 1 .. n-1)`.
pub fn symmetric_group(n: usize) -> Result<Arc<FiniteGroup>> {
    use super::perm::Perm;
    if n < 2 {
        return FiniteGroup::generate(n.max(1), vec![]);
    }
    let t = Perm::from_cycles(n, &[&[0, 1]])?;
    let c: Vec<usize> = (0..n).collect();
    let c = Perm::from_cycles(n, &[&c])?;
    FiniteGroup::generate(n, vec![t, c])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::perm::Perm;

    fn sub(g: &Arc<FiniteGroup>, cycles: &[&[&[usize]]]) -> Subgroup {
        let perms: Vec<Perm> = cycles.iter().map(|c| Perm::from_cycles(g.degree(), c).unwrap()).collect();
        Subgroup::from_perms(g, &perms).unwrap()
    }

    #[test]
    fn normalizer_examples() {
        let s3 = symmetric_group(3).unwrap();
        let whole = Subgroup::whole(&s3);
        let c3 = sub(&s3, &[&[&[0, 1, 2]]]);
        assert_eq!(normalizer(&whole, &c3).unwrap(), whole);
        assert_eq!(normalizer(&whole, &whole).unwrap(), whole);

        let s4 = symmetric_group(4).unwrap();
        let c4 = sub(&s4, &[&[&[0, 1, 2, 3]]]);
        let norm = normalizer(&Subgroup::whole(&s4), &c4).unwrap();
        // brute-force oracle
        let brute = (0..24).filter(|&g| c4.conjugate(g) == c4).count();
        assert_eq!(norm.order(), brute);
        assert_eq!(brute, 8);
    }

    #[test]
    fn centralizer_examples() {
        let s4 = symmetric_group(4).unwrap();
        let a4 = sub(&s4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]]);
        assert_eq!(a4.order(), 12);
        let t = sub(&s4, &[&[&[0, 1], &[2, 3]]]);
        let c = centralizer(&a4, &t).unwrap();
        assert_eq!(c.order(), 4);
        assert_eq!(centralizer(&a4, &Subgroup::trivial(&s4)).unwrap(), a4);
    }

    #[test]
    fn coset_reps_tile() {
        let s4 = symmetric_group(4).unwrap();
        let whole = Subgroup::whole(&s4);
        let d8 = sub(&s4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]);
        for side in [Side::Left, Side::Right] {
            let reps = coset_reps(&whole, &d8, side).unwrap();
            assert_eq!(reps.len(), 3);
            assert_eq!(reps[0], 0);
            let mut seen = [0; 24];
            for &r in &reps {
                for &l in d8.members() {
                    let x = if side == Side::Left { s4.mul(r, l) } else { s4.mul(l, r) };
                    seen[x] += 1;
                }
            }
            assert!(seen.iter().all(|&c| c == 1));
        }
        assert_eq!(coset_reps(&d8, &d8, Side::Left).unwrap(), vec![0]);
        assert!(coset_reps(&d8, &whole, Side::Left).is_err());
    }

    #[test]
    fn automorphism_counts() {
        let s4 = symmetric_group(4).unwrap();
        let c2 = sub(&s4, &[&[&[0, 1]]]);
        assert_eq!(automorphism_group(&c2).unwrap().len(), 1);
        let c3 = sub(&s4, &[&[&[0, 1, 2]]]);
        assert_eq!(automorphism_group(&c3).unwrap().len(), 2);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        assert_eq!(automorphism_group(&v4).unwrap().len(), 6);
        let d8 = sub(&s4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]);
        assert_eq!(automorphism_group(&d8).unwrap().len(), 8);
        for a in automorphism_group(&d8).unwrap() {
            assert!(GroupAutomorphism::new(&d8, a.table().to_vec()).is_ok());
        }
    }

    #[test]
    fn k_examples() {
        let s3 = symmetric_group(3).unwrap();
        let whole = Subgroup::whole(&s3);
        let c3 = sub(&s3, &[&[&[0, 1, 2]]]);
        assert_eq!(compute_k(&whole, &whole, &c3).unwrap().len(), 2);
        assert_eq!(compute_k(&whole, &Subgroup::trivial(&s3), &c3).unwrap().len(), 1);
        assert_eq!(compute_k(&whole, &c3, &c3).unwrap().len(), 2);
        let t = sub(&s3, &[&[&[0, 1]]]);
        assert!(matches!(compute_k(&whole, &t, &c3), Err(Error::NotNormal(_))));
    }

    #[test]
    fn k_prime_examples() {
        let s4 = symmetric_group(4).unwrap();
        let a4 = sub(&s4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]]);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        assert_eq!(compute_k_prime(&a4, &v4).unwrap().len(), 3);
        assert_eq!(compute_k_prime(&v4, &v4).unwrap().len(), 1);

        let s3 = symmetric_group(3).unwrap();
        let t = sub(&s3, &[&[&[0, 1]]]);
        assert_eq!(compute_k_prime(&Subgroup::whole(&s3), &t).unwrap().len(), 1);
    }

    #[test]
    fn t_and_t_normalizer() {
        let s4 = symmetric_group(4).unwrap();
        let whole = Subgroup::whole(&s4);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let p = sub(&s4, &[&[&[0, 1], &[2, 3]]]);
        let t = compute_t(&whole, &v4, &p).unwrap();
        // brute force: conjugations by N_G(P) restricted to P, filtered by the K condition
        let mut brute: Vec<Vec<usize>> = (0..24)
            .filter(|&x| p.conjugate(x) == p)
            .map(|x| p.members().iter().map(|&u| s4.conj(x, u)).collect::<Vec<_>>())
            .filter(|img| p.members().iter().zip(img).all(|(&u, &y)| v4.contains(s4.mul(y, s4.inv(u)))))
            .collect();
        brute.sort();
        brute.dedup();
        assert_eq!(t.iter().map(|a| a.table().to_vec()).collect::<Vec<_>>(), brute);

        let c4 = sub(&s4, &[&[&[0, 1, 2, 3]]]);
        let tc = compute_t(&whole, &v4, &c4).unwrap();
        let tn = t_normalizer(&whole, &c4, &tc).unwrap();
        let brute_tn = (0..24)
            .filter(|&x| c4.conjugate(x) == c4)
            .filter(|&x| tc.contains(&GroupAutomorphism::conjugation(&c4, x)))
            .count();
        assert_eq!(tn.order(), brute_tn);

        let full = aut_g(&whole, &c4).unwrap();
        assert_eq!(t_normalizer(&whole, &c4, &full).unwrap(), normalizer(&whole, &c4).unwrap());
        let id = vec![GroupAutomorphism::identity(&c4)];
        assert_eq!(t_normalizer(&whole, &c4, &id).unwrap(), centralizer(&whole, &c4).unwrap());
    }

    #[test]
    fn bar_normalizer_examples() {
        let s4 = symmetric_group(4).unwrap();
        let whole = Subgroup::whole(&s4);
        let v4 = sub(&s4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let inside = sub(&s4, &[&[&[0, 1], &[2, 3]]]);
        assert_eq!(bar_normalizer(&whole, &v4, &inside).unwrap(), whole);
        assert_eq!(bar_normalizer(&whole, &whole, &inside).unwrap(), whole);
        let c4 = sub(&s4, &[&[&[0, 1, 2, 3]]]);
        // C4 V4 = D8, self-normalizing in S4
        let bn = bar_normalizer(&whole, &v4, &c4).unwrap();
        assert_eq!(bn.order(), 8);
        assert!(c4.is_subgroup_of(&bn));
    }

    #[test]
    fn p_subgroup_classes() {
        let s3 = symmetric_group(3).unwrap();
        let w3 = Subgroup::whole(&s3);
        let r = p_subgroups_up_to_conjugacy(&w3, 3).unwrap();
        assert_eq!(r.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 3]);

        let s4 = symmetric_group(4).unwrap();
        let w4 = Subgroup::whole(&s4);
        let r = p_subgroups_up_to_conjugacy(&w4, 2).unwrap();
        assert_eq!(r.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 2, 2, 4, 4, 4, 8]);
        assert_eq!(sylow_subgroup(&w4, 2).unwrap().order(), 8);

        let c2 = sub(&s4, &[&[&[0, 1]]]);
        assert_eq!(p_subgroups_up_to_conjugacy(&c2, 2).unwrap().len(), 2);
    }
}
