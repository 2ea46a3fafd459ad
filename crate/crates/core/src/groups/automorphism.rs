use std::cmp::Ordering;
use std::fmt;

use super::group::Subgroup;
use crate::error::{Error, Result};

/// Largest subgroup order for which the automorphism group is enumerated.
pub const AUT_ORDER_CAP: usize = 64;

const CANDIDATE_CAP: usize = 5_000_000;

/// An automorphism of a subgroup `P`, stored as the image of every member.
#[derive(Clone)]
pub struct GroupAutomorphism {
    domain: Subgroup,
    /// `images[k]` is the parent index of the image of `domain.members()[k]`.
    images: Vec<usize>,
}

impl PartialEq for GroupAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for GroupAutomorphism {}

impl std::hash::Hash for GroupAutomorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl PartialOrd for GroupAutomorphism {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupAutomorphism {
    fn cmp(&self, other: &Self) -> Ordering {
        self.images.cmp(&other.images)
    }
}

impl fmt::Debug for GroupAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.domain.parent();
        let parts: Vec<String> = self
            .domain
            .generators()
            .iter()
            .map(|&u| format!("{} -> {}", g.element(u), g.element(self.apply(u))))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl GroupAutomorphism {
    /// Validates that `images` defines a bijective homomorphism of `domain`.
    pub fn new(domain: &Subgroup, images: Vec<usize>) -> Result<Self> {
        let g = domain.parent();
        let n = domain.order();
        if images.len() != n || images.iter().any(|&x| !domain.contains(x)) {
            return Err(Error::InvalidInput("automorphism table has wrong shape".into()));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let k = domain.position(x).unwrap();
            if seen[k] {
                return Err(Error::InvalidInput("automorphism table is not a bijection".into()));
            }
            seen[k] = true;
        }
        let aut = GroupAutomorphism { domain: domain.clone(), images };
        for &u in domain.members() {
            for &v in domain.members() {
                if aut.apply(g.mul(u, v)) != g.mul(aut.apply(u), aut.apply(v)) {
                    return Err(Error::InvalidInput("automorphism table is not multiplicative".into()));
                }
            }
        }
        Ok(aut)
    }

    pub fn identity(domain: &Subgroup) -> Self {
        GroupAutomorphism { domain: domain.clone(), images: domain.members().to_vec() }
    }

    /// Restriction of conjugation `u -> x u x^-1` to `domain`; `x` must
    /// normalize the domain.
    pub fn conjugation(domain: &Subgroup, x: usize) -> Self {
        let g = domain.parent();
        let images = domain.members().iter().map(|&u| g.conj(x, u)).collect::<Vec<_>>();
        debug_assert!(images.iter().all(|&y| domain.contains(y)), "x does not normalize the domain");
        GroupAutomorphism { domain: domain.clone(), images }
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn table(&self) -> &[usize] {
        &self.images
    }

    /// Image of the parent element `u`, which must lie in the domain.
    #[inline]
    pub fn apply(&self, u: usize) -> usize {
        self.images[self.domain.position(u).expect("element outside the automorphism's domain")]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        let images = other.images.iter().map(|&y| self.apply(y)).collect();
        GroupAutomorphism { domain: self.domain.clone(), images }
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        let mut images = vec![0; self.images.len()];
        for (k, &y) in self.images.iter().enumerate() {
            images[self.domain.position(y).unwrap()] = self.domain.members()[k];
        }
        GroupAutomorphism { domain: self.domain.clone(), images }
    }

    pub fn is_identity(&self) -> bool {
        self.images == self.domain.members()
    }

    /// The action of `x` in `N_G(P)` on automorphisms:
    /// `(x.phi)(u) = x phi(x^-1 u x) x^-1`.
    pub fn conjugated_by(&self, x: usize) -> GroupAutomorphism {
        let g = self.domain.parent();
        let xi = g.inv(x);
        let images = self.domain.members().iter().map(|&u| g.conj(x, self.apply(g.conj(xi, u)))).collect();
        GroupAutomorphism { domain: self.domain.clone(), images }
    }

    /// True when `phi(u) u^-1` lies in `n` for every `u` in the domain.
    pub fn displaces_into(&self, n: &Subgroup) -> bool {
        let g = self.domain.parent();
        self.domain.members().iter().zip(&self.images).all(|(&u, &img)| n.contains(g.mul(img, g.inv(u))))
    }
}

/// All automorphisms of `p`, sorted lexicographically by table.
pub fn automorphism_group(p: &Subgroup) -> Result<Vec<GroupAutomorphism>> {
    if p.order() > AUT_ORDER_CAP {
        return Err(Error::CapExceeded { what: "automorphism domain", order: p.order(), cap: AUT_ORDER_CAP });
    }
    let g = p.parent();
    let gens = p.generators().to_vec();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let ord = g.element_order(x);
            p.members().iter().copied().filter(|&y| g.element_order(y) == ord).collect()
        })
        .collect();
    let total = candidates.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    if total.is_none_or(|t| t > CANDIDATE_CAP) {
        return Err(Error::CapExceeded { what: "automorphism search space", order: p.order(), cap: AUT_ORDER_CAP });
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let imgs: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(table) = extend_to_homomorphism(p, &gens, &imgs) {
            out.push(GroupAutomorphism { domain: p.clone(), images: table });
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == choice.len() {
                out.sort();
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Extends generator images along the Cayley graph; `None` on conflict or
/// when the resulting map is not injective.
fn extend_to_homomorphism(p: &Subgroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let g = p.parent();
    let n = p.order();
    let mut map: Vec<Option<usize>> = vec![None; n];
    map[p.position(0).unwrap()] = Some(0);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let fx = map[p.position(x).unwrap()].unwrap();
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = g.mul(x, s);
            let fy = g.mul(fx, t);
            let slot = &mut map[p.position(y).unwrap()];
            match *slot {
                Some(v) if v != fy => return None,
                Some(_) => {}
                None => {
                    *slot = Some(fy);
                    queue.push(y);
                }
            }
        }
    }
    let table: Vec<usize> = map.into_iter().map(|x| x.unwrap()).collect();
    let mut seen = vec![false; n];
    for &y in &table {
        let k = p.position(y)?;
        if seen[k] {
            return None;
        }
        seen[k] = true;
    }
    Some(table)
}

/// Checks closure under composition and inverses.
pub fn is_closed(autos: &[GroupAutomorphism]) -> bool {
    let set: std::collections::HashSet<&GroupAutomorphism> = autos.iter().collect();
    autos.iter().all(|a| set.contains(&a.inverse()) && autos.iter().all(|b| set.contains(&a.compose(b))))
}

/// Position of `a` in a sorted automorphism list.
pub fn index_of(autos: &[GroupAutomorphism], a: &GroupAutomorphism) -> Option<usize> {
    autos.binary_search(a).ok()
}
