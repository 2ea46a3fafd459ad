use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::perm::Perm;
use crate::error::{Error, Result};

/// Default cap on the number of elements a generated group may have.
pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// Multiplication tables are cached below this order.
const TABLE_LIMIT: usize = 2048;

/// A fully enumerated permutation group.
///
/// Elements are numbered in breadth-first order from the identity (index 0),
/// extending by the generators in the order given. All other group-theoretic
/// objects in this crate refer to elements by these indices.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Closure of `generators` on `degree` points.
    pub fn generate(degree: usize, generators: Vec<Perm>) -> Result<Arc<FiniteGroup>> {
        Self::generate_with_cap(degree, generators, DEFAULT_GROUP_CAP)
    }

    pub fn generate_with_cap(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Arc<FiniteGroup>> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let y = elements[i].compose(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let inverses = elements.iter().map(|x| index[&x.inverse()]).collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = index[&elements[a].compose(&elements[b])] as u32;
                }
            }
            t
        });
        Ok(Arc::new(FiniteGroup { degree, generators, elements, index, inverses, table }))
    }

    /// Convenience: infer the degree from the first generator (degree 1 when empty).
    pub fn from_generators(generators: Vec<Perm>) -> Result<Arc<FiniteGroup>> {
        let degree = generators.first().map_or(1, Perm::degree);
        Self::generate(degree, generators)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    #[inline]
    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a^-1 b^-1`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A subgroup of an enumerated group, stored as a sorted set of element
/// indices of the parent.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    mask: Vec<bool>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|&g| self.parent.element(g).to_string()).collect();
        write!(f, "<{}> (order {})", gens.join(", "), self.order())
    }
}

impl Subgroup {
    /// Subgroup generated by the given parent element indices.
    pub fn generated(parent: &Arc<FiniteGroup>, gens: &[usize]) -> Subgroup {
        let members = closure(parent, gens);
        Self::from_closed(parent, members)
    }

    pub fn from_perms(parent: &Arc<FiniteGroup>, gens: &[Perm]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|p| {
                parent.index_of(p).ok_or_else(|| Error::NotSubgroup(format!("{p} is not an element of the group")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::generated(parent, &idx))
    }

    /// Validates closure before accepting the member set.
    pub fn from_members(parent: &Arc<FiniteGroup>, mut members: Vec<usize>) -> Result<Subgroup> {
        members.sort_unstable();
        members.dedup();
        let n = parent.order();
        if members.iter().any(|&m| m >= n) {
            return Err(Error::NotSubgroup("index out of range".into()));
        }
        let mut mask = vec![false; n];
        for &m in &members {
            mask[m] = true;
        }
        if !mask[0] {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        for &a in &members {
            if !mask[parent.inv(a)] {
                return Err(Error::NotSubgroup("not closed under inverses".into()));
            }
            for &b in &members {
                if !mask[parent.mul(a, b)] {
                    return Err(Error::NotSubgroup("not closed under products".into()));
                }
            }
        }
        Ok(Self::from_closed(parent, members))
    }

    fn from_closed(parent: &Arc<FiniteGroup>, members: Vec<usize>) -> Subgroup {
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            mask[m] = true;
        }
        let generators = greedy_generators(parent, &members);
        Subgroup { parent: Arc::clone(parent), members, mask, generators }
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        Self::from_closed(parent, (0..parent.order()).collect())
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Subgroup {
        Self::from_closed(parent, vec![0])
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// Sorted parent indices; the position in this slice is the member's
    /// local index.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask[g]
    }

    /// Local index of a parent element.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// `g H g^-1`
    pub fn conjugate(&self, g: usize) -> Subgroup {
        let mut members: Vec<usize> = self.members.iter().map(|&x| self.parent.conj(g, x)).collect();
        members.sort_unstable();
        Self::from_closed(&self.parent, members)
    }

    pub fn is_normalized_by(&self, g: usize) -> bool {
        self.generators.iter().all(|&x| self.contains(self.parent.conj(g, x)))
    }

    pub fn is_normal_in(&self, other: &Subgroup) -> bool {
        self.is_subgroup_of(other) && other.generators.iter().all(|&g| self.is_normalized_by(g))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members = self.members.iter().copied().filter(|&m| other.contains(m)).collect();
        Self::from_closed(&self.parent, members)
    }

    /// The subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = self.generators.iter().chain(&other.generators).copied().collect();
        Self::generated(&self.parent, &gens)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.parent.mul(a, b) == self.parent.mul(b, a)))
    }

    /// True when the order is a power of `p` (the trivial group counts).
    pub fn is_p_group(&self, p: usize) -> bool {
        let mut n = self.order();
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }
}

fn closure(parent: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut mask = vec![false; parent.order()];
    mask[0] = true;
    let mut list = vec![0usize];
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &g in gens {
            let y = parent.mul(x, g);
            if !mask[y] {
                mask[y] = true;
                list.push(y);
            }
        }
        i += 1;
    }
    list.sort_unstable();
    list
}

/// Walks members in order, keeping an element whenever it is not already in
/// the subgroup generated so far.
fn greedy_generators(parent: &FiniteGroup, members: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = vec![false; parent.order()];
    reached[0] = true;
    let mut count = 1;
    for &m in members {
        if count == members.len() {
            break;
        }
        if !reached[m] {
            gens.push(m);
            let cl = closure(parent, &gens);
            count = cl.len();
            for x in cl {
                reached[x] = true;
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        FiniteGroup::generate(
            3,
            vec![Perm::from_cycles(3, &[&[0, 1]]).unwrap(), Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(FiniteGroup::generate(3, vec![]).unwrap().order(), 1);
        assert_eq!(s3().order(), 6);
        let v4 = FiniteGroup::generate(
            4,
            vec![
                Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(v4.order(), 4);
        assert!((1..4).all(|i| v4.element_order(i) == 2));
    }

    #[test]
    fn degree_mismatch_and_cap() {
        let err = FiniteGroup::generate(3, vec![Perm::identity(4)]).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch(3, 4)));
        let g = vec![Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(), Perm::from_cycles(5, &[&[0, 1]]).unwrap()];
        assert!(matches!(FiniteGroup::generate_with_cap(5, g, 50), Err(Error::GroupTooLarge(50))));
    }

    #[test]
    fn group_axioms_exhaustive() {
        let g = s3();
        let n = g.order();
        assert!(g.element(0).is_identity());
        for a in 0..n {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn subgroup_validation() {
        let g = s3();
        let a3 = Subgroup::from_perms(&g, &[Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap()]).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal_in(&Subgroup::whole(&g)));
        let t = g.index_of(&Perm::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        assert!(Subgroup::from_members(
            &g,
            vec![0, t, g.index_of(&Perm::from_cycles(3, &[&[1, 2]]).unwrap()).unwrap()]
        )
        .is_err());
        assert_eq!(g.exponent(), 6);
    }
}
