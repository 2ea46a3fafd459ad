use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::points::{defect_groups, points_on, PointSet};
use super::report::{Facts, Status};
use crate::error::{Error, Result};
use crate::falgebra::{axpy, conjugation_action, is_zero, Algebra, CoordinateMap, Fe, Field, Matrix, Subspace, Vector};
use crate::groups::{
    bar_normalizer, compute_k, compute_t, coset_decompose, coset_reps, is_subconjugate, maximal_subgroups, normalizer,
    p_subgroups_up_to_conjugacy, proper_subgroups, t_normalizer, GroupAutomorphism, Side, Subgroup,
};
use crate::interior::{
    brauer_kernel, crossed_product, extended_brauer_quotient, make_group_interior, make_kn_interior,
    twisted_fixed_points, twisted_trace, CrossedProduct, GradedQuotient, NInteriorGAlgebra,
};

/// One point as it appears in a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSummary {
    pub point_id: usize,
    pub multiplicity: usize,
    pub defect_order: usize,
    /// Members of the defect representative, as parent indices.
    pub defect: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub name: String,
    pub status: Status,
    pub hypotheses: Vec<(String, bool)>,
    pub left: Vec<PointSummary>,
    pub right: Vec<PointSummary>,
    pub matching: Vec<(usize, usize)>,
    pub assertions: Vec<(String, bool)>,
    pub facts: Facts,
    pub diagnostics: Vec<String>,
}

impl CorrespondenceReport {
    fn new(name: &str) -> Self {
        CorrespondenceReport {
            name: name.to_string(),
            status: Status::Pass,
            hypotheses: Vec::new(),
            left: Vec::new(),
            right: Vec::new(),
            matching: Vec::new(),
            assertions: Vec::new(),
            facts: Facts::new(),
            diagnostics: Vec::new(),
        }
    }

    fn hypothesis(&mut self, name: &str, holds: bool) {
        self.hypotheses.push((name.to_string(), holds));
    }

    fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|(_, h)| *h)
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        let name = name.into();
        if !ok {
            self.diagnostics.push(format!("assertion failed: {name}"));
        }
        self.assertions.push((name, ok));
    }

    fn finish(mut self) -> Self {
        self.status = if !self.hypotheses_hold() {
            Status::HypothesisUnsatisfied
        } else if self.assertions.iter().all(|(_, ok)| *ok) {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The assertion with this name, if it was evaluated.
    pub fn assertion(&self, name: &str) -> Option<bool> {
        self.assertions.iter().find(|(n, _)| n == name).map(|(_, ok)| *ok)
    }
}

fn summarize(set: &PointSet) -> Vec<PointSummary> {
    set.points
        .iter()
        .map(|pt| {
            let d = pt.defect.as_ref().map(|d| d.representative.clone());
            PointSummary {
                point_id: pt.point_id,
                multiplicity: pt.multiplicity,
                defect_order: d.as_ref().map_or(0, |d| d.order()),
                defect: d.map_or_else(Vec::new, |d| d.members().to_vec()),
            }
        })
        .collect()
}

/// Sends the chosen left points through `to_quotient` and locates the right
/// point containing each image.
fn match_points(
    report: &mut CorrespondenceReport,
    label: &str,
    left: &PointSet,
    left_ids: &[usize],
    right: &PointSet,
    right_ids: &[usize],
    to_quotient: &dyn Fn(&[Fe]) -> Result<Vector>,
) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    let mut all_primitive = true;
    for &l in left_ids {
        let located = to_quotient(&left.points[l].rep).and_then(|img| {
            if is_zero(&img) {
                return Err(Error::Verification("Br_P image is zero".into()));
            }
            right.point_of(&img)
        });
        match located {
            Ok(r) => pairs.push((l, r)),
            Err(e) => {
                all_primitive = false;
                report.diagnostics.push(format!("{label}: left point {l}: {e}"));
            }
        }
    }
    let targets: BTreeSet<usize> = pairs.iter().map(|&(_, r)| r).collect();
    let expected: BTreeSet<usize> = right_ids.iter().copied().collect();
    report.check(format!("{label}: images are primitive"), all_primitive);
    report.check(format!("{label}: counts agree"), left_ids.len() == right_ids.len());
    report.check(format!("{label}: injective"), targets.len() == pairs.len());
    report.check(format!("{label}: onto"), targets == expected);
    pairs
}

/// Matching restricted to points whose defect contains `p`, checking that
/// defect classes correspond.
fn match_restricted(
    report: &mut CorrespondenceReport,
    h: &Subgroup,
    p: &Subgroup,
    left: &PointSet,
    right: &PointSet,
    to_quotient: &dyn Fn(&[Fe]) -> Result<Vector>,
) {
    let over = |set: &PointSet| -> Vec<usize> {
        set.points
            .iter()
            .filter(|pt| pt.defect.as_ref().is_some_and(|d| is_subconjugate(h, p, &d.representative)))
            .map(|pt| pt.point_id)
            .collect()
    };
    let (lq, rq) = (over(left), over(right));
    let pairs = match_points(report, "restricted", left, &lq, right, &rq, to_quotient);
    let preserved = pairs.iter().all(|&(l, r)| {
        let dl = &left.points[l].defect.as_ref().unwrap().representative;
        let dr = &right.points[r].defect.as_ref().unwrap().representative;
        crate::groups::are_conjugate(h, dl, dr)
    });
    report.check("restricted: defect groups preserved", preserved);
    report.facts.push("restricted_points", lq.len());
}

fn p_commutators_in(p: &Subgroup, n: &Subgroup) -> bool {
    let g = p.parent();
    p.members().iter().all(|&u| p.members().iter().all(|&v| n.contains(g.commutator(u, v))))
}

/// `J(k(P ∩ N)) · X` for a subspace `X` of the quotient.
fn augmentation_times(q: &GradedQuotient, pn: &Subgroup, x: &Subspace) -> Result<Subspace> {
    let f = q.field();
    let alg = q.algebra();
    let one = alg.unit();
    let mut gens = Vec::new();
    for &u in pn.generators() {
        let d = alg.sub(&q.interior(u)?, one);
        gens.extend(x.basis().iter().map(|b| alg.mul(&d, b)));
    }
    Ok(Subspace::span(f, q.dim(), gens))
}

/// The inclusion `N̄^P ⊆ A(P) + J(k(P∩N)) N̄` and the direct sum
/// `N̄^H = A(P)^H ⊕ (Σ_{φ≠id} J(k(P∩N)) N̄^φ)^H` for the given `H`.
fn check_displays(report: &mut CorrespondenceReport, q: &GradedQuotient, hs: &[(&str, &Subgroup)]) -> Result<()> {
    let f = q.field();
    let p = q.p();
    let pn = p.intersection(q.source().normal());
    let id = q.identity_component();
    let ap = q.component_space(id);
    let whole = Subspace::full(q.dim());
    let fixed_p = q.fixed_subalgebra(p)?.space;
    let rhs = ap.sum(f, &augmentation_times(q, &pn, &whole)?);
    report.check("display: N^P in A(P) + J N", fixed_p.is_subspace_of(f, &rhs));
    let mut rest = Subspace::zero(q.dim());
    for c in 0..q.components().len() {
        if c != id {
            rest = rest.sum(f, &augmentation_times(q, &pn, &q.component_space(c))?);
        }
    }
    for (label, h) in hs {
        let fixed = q.fixed_subalgebra(h)?.space;
        let x = ap.intersection(f, &fixed);
        let y = rest.intersection(f, &fixed);
        let ok = x.intersection(f, &y).is_zero() && x.sum(f, &y) == fixed;
        report.check(format!("display: direct sum for H = {label}"), ok);
        report.facts.push(format!("fixed_dim_{label}"), fixed.dim());
        report.facts.push(format!("identity_part_dim_{label}"), x.dim());
    }
    Ok(())
}

/// Points of `H` on `A = kN` with defect `P` against points of `N_H(P)` on
/// `N̄_A^K(P)` with defect `P`, matched through `Br_P`.
pub fn verify_theorem_3_1(
    g: &Subgroup,
    n: &Subgroup,
    p: &Subgroup,
    h: &Subgroup,
    field: &Field,
    seed: u64,
) -> Result<CorrespondenceReport> {
    let prime = field.characteristic() as usize;
    if !p.is_subgroup_of(h) || !h.is_subgroup_of(g) || !p.is_p_group(prime) {
        return Err(Error::InvalidInput("need a p-subgroup P <= H <= G".into()));
    }
    let mut report = CorrespondenceReport::new("thm31");
    report.hypothesis("P ∩ N nontrivial", !p.intersection(n).is_trivial());
    report.hypothesis("P <= N_G^K(P)", p_commutators_in(p, n));
    report.hypothesis("A projective over N on both sides", true);
    if !report.hypotheses_hold() {
        return Ok(report.finish());
    }
    let a = make_kn_interior(g, n, field)?;
    let act = a.phi().restrict(h)?;
    let mut left = points_on("A", a.algebra(), &act, seed)?;
    defect_groups(&mut left, a.algebra(), &act, prime)?;

    let k = compute_k(g, n, p)?;
    let q = extended_brauer_quotient(&a, p, &k)?;
    let nh = normalizer(h, p)?;
    let qact = q.action(&nh)?;
    let mut right = points_on("N(A)", q.algebra(), &qact, seed)?;
    defect_groups(&mut right, q.algebra(), &qact, prime)?;

    let left_ids = left.with_defect(p);
    let right_ids = right.with_defect(p);
    let to_q = |v: &[Fe]| q.brauer(v);
    report.matching = match_points(&mut report, "defect P", &left, &left_ids, &right, &right_ids, &to_q);
    check_displays(&mut report, &q, &[("P", p), ("N_H(P)", &nh)])?;
    if p.is_normal_in(h) {
        match_restricted(&mut report, h, p, &left, &right, &to_q);
    }
    report.facts.push("quotient_dim", q.dim());
    report.facts.push("components", q.components().len());
    report.facts.push("left_points", left.points.len());
    report.facts.push("right_points", right.points.len());
    report.facts.push("left_defect_p", left_ids.len());
    report.facts.push("right_defect_p", right_ids.len());
    report.left = summarize(&left);
    report.right = summarize(&right);
    Ok(report.finish())
}

/// Coordinates of `D` inside `C` when `D`'s acting group lies in `C`'s.
fn embed_crossed(d: &CrossedProduct, c: &CrossedProduct) -> Matrix {
    let base = d.base.algebra();
    let cols: Vec<Vector> = d
        .reps()
        .iter()
        .flat_map(|&x| (0..base.dim()).map(move |i| (x, i)))
        .map(|(x, i)| c.tensor(&base.basis_element(i), x))
        .collect();
    Matrix::from_columns(c.interior.dim(), &cols)
}

/// `Br_P^C` through `D`: splits `C^P = D^P + ker Br_P^C` and applies
/// `Br_P^D` to the `D^P` part.
struct ThroughD<'a> {
    qd: &'a GradedQuotient,
    map: CoordinateMap,
    kernel_len: usize,
    /// Preimage in `D` of each chosen `D^P` vector.
    chosen: Vec<Vector>,
}

impl ThroughD<'_> {
    fn apply(&self, v: &[Fe]) -> Result<Vector> {
        let f = self.qd.field();
        let coords = self.map.coords(f, v);
        if self.map.combine(f, &coords) != v {
            return Err(Error::Verification("element is not in D^P + ker Br_P".into()));
        }
        let mut d = vec![Fe::ZERO; self.qd.source().dim()];
        for (k, pre) in self.chosen.iter().enumerate() {
            axpy(f, &mut d, coords[self.kernel_len + k], pre);
        }
        self.qd.brauer(&d)
    }
}

/// Points of `H` on `C = A ⊗_N G` with defect `P` against points of
/// `N_H(P)` on `N̄_D^K(P)` for `D = A ⊗_N N_G(P̄)`.
pub fn verify_theorem_3_2(
    g: &Subgroup,
    n: &Subgroup,
    p: &Subgroup,
    h: &Subgroup,
    field: &Field,
    seed: u64,
) -> Result<CorrespondenceReport> {
    let a = make_kn_interior(g, n, field)?;
    verify_theorem_3_2_on(&a, p, h, seed)
}

/// As [`verify_theorem_3_2`] for an arbitrary N-interior G-algebra.
pub fn verify_theorem_3_2_on(
    a: &NInteriorGAlgebra,
    p: &Subgroup,
    h: &Subgroup,
    seed: u64,
) -> Result<CorrespondenceReport> {
    let field = a.field();
    let f = field;
    let prime = field.characteristic() as usize;
    let (g, n) = (a.group(), a.normal());
    if !p.is_subgroup_of(h) || !h.is_subgroup_of(g) || !p.is_p_group(prime) {
        return Err(Error::InvalidInput("need a p-subgroup P <= H <= G".into()));
    }
    let mut report = CorrespondenceReport::new("thm32");
    report.hypothesis("N x N-stable basis", a.has_stable_basis());
    report.hypothesis("A projective over N on both sides", true);
    if !report.hypotheses_hold() {
        return Ok(report.finish());
    }
    let c = crossed_product(a, g)?;
    let nbar = bar_normalizer(g, n, p)?;
    let d = crossed_product(a, &nbar)?;
    let cact = c.interior.phi().restrict(h)?;
    let mut left = points_on("C", c.interior.algebra(), &cact, seed)?;
    defect_groups(&mut left, c.interior.algebra(), &cact, prime)?;

    let k = compute_k(g, n, p)?;
    let qd = extended_brauer_quotient(&d.interior, p, &k)?;
    let nh = normalizer(h, p)?;
    let qact = qd.action(&nh)?;
    let mut right = points_on("N(D)", qd.algebra(), &qact, seed)?;
    defect_groups(&mut right, qd.algebra(), &qact, prime)?;

    // C(P) = D(P)
    let id_p = GroupAutomorphism::identity(p);
    let maxes = maximal_subgroups(p, prime)?;
    let ker_c = brauer_kernel(&c.interior, &id_p, &maxes)?;
    let ker_d = brauer_kernel(&d.interior, &id_p, &maxes)?;
    let cp = twisted_fixed_points(&c.interior, &id_p, p)?.space;
    let dp = twisted_fixed_points(&d.interior, &id_p, p)?.space;
    let emb = embed_crossed(&d, &c);
    let dp_in_c: Vec<Vector> = dp.basis().iter().map(|v| emb.apply(f, v)).collect();
    let dp_span = Subspace::span(f, c.interior.dim(), dp_in_c.clone());
    let ker_d_in_c =
        Subspace::span(f, c.interior.dim(), ker_d.basis().iter().map(|v| emb.apply(f, v)).collect::<Vec<_>>());
    report.check("C(P) = D(P): onto", dp_span.sum(f, &ker_c) == cp);
    report.check("C(P) = D(P): injective", dp_span.intersection(f, &ker_c) == ker_d_in_c);
    let mut basis: Vec<Vector> = ker_c.basis().to_vec();
    let mut chosen = Vec::new();
    let mut acc = ker_c.clone();
    for (v, w) in dp.basis().iter().zip(&dp_in_c) {
        if !acc.contains(f, w) {
            acc = acc.sum(f, &Subspace::span(f, c.interior.dim(), [w]));
            basis.push(w.clone());
            chosen.push(v.clone());
        }
    }
    let kernel_len = ker_c.dim();
    let map = CoordinateMap::new(f, c.interior.dim(), basis)
        .ok_or_else(|| Error::Verification("dependent basis for C^P".into()))?;
    let through = ThroughD { qd: &qd, map, kernel_len, chosen };
    let to_q = |v: &[Fe]| through.apply(v);

    let left_ids = left.with_defect(p);
    let right_ids = right.with_defect(p);
    report.matching = match_points(&mut report, "defect P", &left, &left_ids, &right, &right_ids, &to_q);
    if p.is_normal_in(h) {
        match_restricted(&mut report, h, p, &left, &right, &to_q);
    }
    report.facts.push("c_dim", c.interior.dim());
    report.facts.push("d_dim", d.interior.dim());
    report.facts.push("quotient_dim", qd.dim());
    report.facts.push("left_points", left.points.len());
    report.facts.push("right_points", right.points.len());
    report.facts.push("left_defect_p", left_ids.len());
    report.facts.push("right_defect_p", right_ids.len());
    report.left = summarize(&left);
    report.right = summarize(&right);
    Ok(report.finish())
}

/// Blocks of `kG` with defect `P` against blocks of `kN_G(P)` with defect
/// `P`, for every class of p-subgroups. With `realize`, each count is also
/// obtained through the `N = G` case of the crossed-product correspondence.
pub fn verify_first_main(g: &Subgroup, field: &Field, seed: u64, realize: bool) -> Result<CorrespondenceReport> {
    let prime = field.characteristic() as usize;
    let mut report = CorrespondenceReport::new("remark31");
    let kg = Algebra::group_algebra(g, field);
    let act = conjugation_action(g, g);
    let mut blocks = points_on("kG", &kg, &act, seed)?;
    defect_groups(&mut blocks, &kg, &act, prime)?;
    let classes = p_subgroups_up_to_conjugacy(g, prime)?;
    let (mut orders, mut global, mut local) = (Vec::new(), Vec::new(), Vec::new());
    let ga = if realize { Some(make_group_interior(g, field)?) } else { None };
    for p in &classes {
        let np = normalizer(g, p)?;
        let knp = Algebra::group_algebra(&np, field);
        let nact = conjugation_action(&np, &np);
        let mut lb = points_on("kN_G(P)", &knp, &nact, seed)?;
        defect_groups(&mut lb, &knp, &nact, prime)?;
        let (cg, cl) = (blocks.with_defect(p).len(), lb.with_defect(p).len());
        report.check(format!("|P| = {}: block counts agree", p.order()), cg == cl);
        orders.push(p.order());
        global.push(cg);
        local.push(cl);
        if let Some(ga) = &ga {
            let r = verify_theorem_3_2_on(ga, p, g, seed)?;
            let ok = r.passed() && r.facts.int("left_defect_p") == Some(cg as i64);
            if !ok {
                report.diagnostics.extend(r.diagnostics.iter().cloned());
            }
            report.check(format!("|P| = {}: realized through crossed products", p.order()), ok);
        }
    }
    report.facts.push("blocks", blocks.points.len());
    report.facts.push("p_subgroup_orders", orders);
    report.facts.push("blocks_kg_by_defect", global);
    report.facts.push("blocks_local_by_defect", local);
    report.left = summarize(&blocks);
    Ok(report.finish())
}

/// The graded sum `⊕_x N̄_A^T(P) ⊗ x` over `[N_G^T(P)/N_N^T(P)]` against
/// `N̄_E^T(P)` for `E = A ⊗_N N_G^T(P)N`, with an explicit isomorphism.
pub fn verify_prop_3_3(
    g: &Subgroup,
    n: &Subgroup,
    p: &Subgroup,
    field: &Field,
    seed: u64,
) -> Result<CorrespondenceReport> {
    let f = field;
    let prime = field.characteristic() as usize;
    if !p.is_subgroup_of(g) || !p.is_p_group(prime) {
        return Err(Error::InvalidInput("need a p-subgroup P <= G".into()));
    }
    let mut report = CorrespondenceReport::new("prop33");
    let t = compute_t(g, n, p)?;
    let ngt = t_normalizer(g, p, &t)?;
    let nnt = ngt.intersection(n);
    let l = ngt.join(n);
    report.hypothesis("P <= N_G^T(P) N", p.is_subgroup_of(&l));
    if !report.hypotheses_hold() {
        return Ok(report.finish());
    }
    let a = make_kn_interior(g, n, field)?;
    let e = crossed_product(&a, &l)?;
    let qe = extended_brauer_quotient(&e.interior, p, &t)?;
    let qa = extended_brauer_quotient(&a, p, &t)?;
    let xs = coset_reps(&ngt, &nnt, Side::Left)?;
    let m = qa.dim();
    let index = xs.len();
    report.facts.push("e_quotient_dim", qe.dim());
    report.facts.push("a_quotient_dim", qa.dim());
    report.facts.push("index", index);
    report.facts.push("t_order", t.len());
    report.check("dimension identity", qe.dim() == m * index);

    // Psi: class of a in the chi component, placed at x, goes to the class
    // of a ⊗ x in the chi∘c_x component
    let gp = g.parent();
    let mut cols = Vec::with_capacity(m * index);
    let mut homogeneous = true;
    for &x in &xs {
        let cx = GroupAutomorphism::conjugation(p, x);
        for (ci, comp) in qa.components().iter().enumerate() {
            let target = qe
                .component_index(&comp.phi.compose(&cx))
                .ok_or_else(|| Error::Verification("T is not closed under conjugation".into()))?;
            for s in comp.section() {
                match qe.project(target, &e.tensor(s, x)) {
                    Ok(v) => cols.push(v),
                    Err(_) => {
                        homogeneous = false;
                        cols.push(vec![Fe::ZERO; qe.dim()]);
                    }
                }
            }
            for kb in comp.kernel.basis() {
                let ok = qe.components()[target].kernel.contains(f, &e.tensor(kb, x));
                if !ok {
                    report.diagnostics.push(format!("kernel of component {ci} not sent to kernel at x = {x}"));
                }
                homogeneous &= ok;
            }
        }
    }
    report.check("a ⊗ x lands in the predicted component", homogeneous);
    let psi = Matrix::from_columns(qe.dim(), &cols);
    report.check("isomorphism: bijective", psi.rank(f) == qe.dim() && qe.dim() == m * index);

    // product on the graded sum: (a ⊗ x)(b ⊗ y) = a ˣb ι(n) ⊗ z with xy = n z
    let act = qa.action(&ngt)?;
    let qalg = qa.algebra();
    let interiors: Vec<Vector> = nnt.members().iter().map(|&u| qa.interior(u)).collect::<Result<_>>()?;
    let mut multiplicative = true;
    'outer: for (xi, &x) in xs.iter().enumerate() {
        for (yi, &y) in xs.iter().enumerate() {
            let (z, mm) = coset_decompose(&nnt, &xs, Side::Left, gp.mul(x, y));
            let zi = xs.iter().position(|&w| w == z).unwrap();
            let nn = gp.conj(z, mm);
            let iota = &interiors[nnt.position(nn).unwrap()];
            for i in 0..m {
                let ea = qalg.basis_element(i);
                let lhs_a = psi.column(xi * m + i);
                for j in 0..m {
                    let eb = qalg.basis_element(j);
                    let prod = qalg.mul(&qalg.mul(&ea, &act.apply(f, x, &eb)), iota);
                    let mut rhs_coords = vec![Fe::ZERO; m * index];
                    rhs_coords[zi * m..(zi + 1) * m].copy_from_slice(&prod);
                    let lhs = qe.algebra().mul(&lhs_a, &psi.column(yi * m + j));
                    if lhs != psi.apply(f, &rhs_coords) {
                        multiplicative = false;
                        report.diagnostics.push(format!("product mismatch at x = {x}, y = {y}, ({i}, {j})"));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.check("isomorphism: multiplicative", multiplicative);

    // Tr_{Δφ(Q)}(a ⊗ x) = Tr_{Δχ(xQx^-1)}(a) ⊗ x with φ = χ∘c_x
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let proper = proper_subgroups(p, prime)?;
    let mut traces_ok = true;
    let mut traces_checked = 0usize;
    for &x in &xs {
        let cx = GroupAutomorphism::conjugation(p, x);
        for comp in qa.components() {
            let chi = &comp.phi;
            let phi = chi.compose(&cx);
            for q in &proper {
                let qx = q.conjugate(x);
                let fixed = twisted_fixed_points(&a, chi, &qx)?.space;
                let mut sample = vec![Fe::ZERO; a.dim()];
                for b in fixed.basis() {
                    axpy(f, &mut sample, f.element(rng.gen_range(0..f.order())), b);
                }
                let lhs = twisted_trace(&e.interior, &phi, q, &e.tensor(&sample, x))?;
                let rhs = e.tensor(&twisted_trace(&a, chi, &qx, &sample)?, x);
                traces_ok &= lhs == rhs;
                traces_checked += 1;
            }
        }
    }
    report.check("trace identity", traces_ok);
    report.facts.push("traces_checked", traces_checked);
    let unit_ok = psi.apply(f, &{
        let mut u = vec![Fe::ZERO; m * index];
        let r0 = xs.iter().position(|&w| w == 0).unwrap_or(0);
        u[r0 * m..(r0 + 1) * m].copy_from_slice(qalg.unit());
        u
    }) == *qe.algebra().unit();
    report.check("isomorphism: unital", unit_ok);
    Ok(report.finish())
}
