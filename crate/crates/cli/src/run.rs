//! Executes the requested checks and assembles the report.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use extended_brauer::corresp::{
    defect_groups, points_on, verify_first_main, verify_prop_3_3, verify_theorem_3_1, verify_theorem_3_2,
    CorrespondenceReport, Fact, Facts, Status,
};
use extended_brauer::groups::{all_p_subgroups, compute_k, normalizer};
use extended_brauer::interior::checks::{check_graded_structure, check_trace_products, check_twisted_action_law};
use extended_brauer::interior::{
    crossed_product, extended_brauer_quotient, induced_hom, make_kn_interior, rho_k_prime, GradedQuotient, InteriorHom,
    NInteriorGAlgebra,
};
use extended_brauer::Result;

use crate::config::Scenario;

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub timings: bool,
    /// Corrupt the structure constants of `A` before running.
    pub broken_constants: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Environment {
    pub p: u32,
    pub e: u32,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: String,
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub scenario: String,
    pub environment: Environment,
    pub checks: Vec<CheckResult>,
}

impl RunReport {
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail.to_string())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn fact_value(f: &Fact) -> Value {
    match f {
        Fact::Int(x) => json!(x),
        Fact::Ints(x) => json!(x),
        Fact::Bool(x) => json!(x),
        Fact::Text(x) => json!(x),
        Fact::Texts(x) => json!(x),
    }
}

fn facts_value(facts: &Facts) -> Value {
    let mut m = Map::new();
    for (k, v) in &facts.0 {
        m.insert(k.clone(), fact_value(v));
    }
    Value::Object(m)
}

fn pairs_value(pairs: &[(String, bool)]) -> Value {
    Value::Object(pairs.iter().map(|(k, v)| (k.clone(), json!(v))).collect())
}

fn correspondence_value(r: &CorrespondenceReport) -> Value {
    let points = |ps: &[extended_brauer::corresp::PointSummary]| -> Value {
        ps.iter()
            .map(|p| json!({"id": p.point_id, "multiplicity": p.multiplicity, "defect_order": p.defect_order}))
            .collect()
    };
    json!({
        "hypotheses": pairs_value(&r.hypotheses),
        "assertions": pairs_value(&r.assertions),
        "facts": facts_value(&r.facts),
        "left": points(&r.left),
        "right": points(&r.right),
        "matching": r.matching,
        "diagnostics": r.diagnostics,
    })
}

/// Lazily built objects shared between checks.
struct Context<'a> {
    s: &'a Scenario,
    opts: RunOptions,
    a: Option<NInteriorGAlgebra>,
    q: Option<GradedQuotient>,
}

impl Context<'_> {
    fn algebra(&mut self) -> Result<&NInteriorGAlgebra> {
        if self.a.is_none() {
            let a = make_kn_interior(&self.s.g, &self.s.n, &self.s.field)?;
            let a = if self.opts.broken_constants { a.with_broken_structure_constants()? } else { a };
            a.algebra().check_associative()?;
            a.check_invariants()?;
            self.a = Some(a);
        }
        Ok(self.a.as_ref().unwrap())
    }

    fn quotient(&mut self) -> Result<&GradedQuotient> {
        if self.q.is_none() {
            let s = self.s;
            let k = compute_k(&s.g, &s.n, &s.p_sub)?;
            let q = extended_brauer_quotient(self.algebra()?, &s.p_sub, &k)?;
            self.q = Some(q);
        }
        Ok(self.q.as_ref().unwrap())
    }

    fn run_check(&mut self, name: &str) -> Result<(Status, Value)> {
        let s = self.s;
        let pass = |facts: Facts| Ok((Status::Pass, facts_value(&facts)));
        let corresp = |r: CorrespondenceReport| Ok((r.status, correspondence_value(&r)));
        match name {
            "prop21" => {
                let k = compute_k(&s.g, &s.n, &s.p_sub)?;
                pass(check_twisted_action_law(self.algebra()?, &s.p_sub, &k)?)
            }
            "prop22" => pass(check_graded_structure(self.quotient()?)?),
            "lemma23" => {
                let seed = s.seed;
                pass(check_trace_products(self.quotient()?, seed, 2)?)
            }
            "prop24" => {
                let a = self.algebra()?.clone();
                let c = crossed_product(&a, &s.g)?;
                let hom = InteriorHom::into_crossed_product(&c)?;
                let k = compute_k(&s.g, &s.n, &s.p_sub)?;
                let induced = induced_hom(&hom, &s.p_sub, &k)?;
                induced.check()?;
                let mut facts = Facts::new();
                facts.push("source_dim", induced.source.dim());
                facts.push("target_dim", induced.target.dim());
                facts.push("injective", induced.is_injective());
                let status = if induced.is_injective() { Status::Pass } else { Status::Fail };
                Ok((status, facts_value(&facts)))
            }
            "prop25" => {
                self.algebra()?;
                let rho = rho_k_prime(&s.g, &s.n, &s.p_sub, &s.field)?;
                let mut facts = Facts::new();
                facts.push("quotient_dim", rho.quotient.dim());
                facts.push("normalizer_order", rho.domain.order());
                let ok = rho.quotient.dim() == rho.domain.order();
                Ok((if ok { Status::Pass } else { Status::Fail }, facts_value(&facts)))
            }
            "thm31" => {
                self.algebra()?;
                corresp(verify_theorem_3_1(&s.g, &s.n, &s.p_sub, &s.h, &s.field, s.seed)?)
            }
            "thm32" => {
                self.algebra()?;
                corresp(verify_theorem_3_2(&s.g, &s.n, &s.p_sub, &s.h, &s.field, s.seed)?)
            }
            "prop33" => {
                self.algebra()?;
                corresp(verify_prop_3_3(&s.g, &s.n, &s.p_sub, &s.field, s.seed)?)
            }
            "remark31" => {
                if !s.g.order().is_multiple_of(s.prime as usize) {
                    return Ok((Status::Skipped, json!({"reason": "p does not divide |G|"})));
                }
                corresp(verify_first_main(&s.g, &s.field, s.seed, true)?)
            }
            "invariants" => self.invariants(),
            _ => unreachable!("checks are validated at load"),
        }
    }

    /// Structural invariants of `A`, of the quotient, and of the points of
    /// `H` on `A`.
    fn invariants(&mut self) -> Result<(Status, Value)> {
        let s = self.s;
        let prime = s.prime as usize;
        let a = self.algebra()?.clone();
        a.check_invariants()?;
        let mut facts = Facts::new();
        let mut ok = true;
        let q = self.quotient()?;
        q.algebra().check_associative()?;
        q.algebra().check_unit()?;
        facts.push("quotient_dim", q.dim());

        let act = a.phi().restrict(&s.h)?;
        let mut pts = points_on("A", a.algebra(), &act, s.seed)?;
        defect_groups(&mut pts, a.algebra(), &act, prime)?;
        for pt in &pts.points {
            let alg = a.algebra();
            ok &= alg.is_idempotent(&pt.rep) && pts.fixed.space.contains(alg.field(), &pt.rep);
            let d = pt.defect.as_ref().unwrap();
            ok &= d.class.iter().all(|c| c.is_p_group(prime) && c.order() == d.representative.order());
        }
        facts.push("points", pts.points.len());

        let subgroups = all_p_subgroups(&s.h, prime)?;
        let image = |q: &extended_brauer::groups::Subgroup| {
            extended_brauer::falgebra::trace_image(&s.field, a.dim(), &act, q, &s.h)
        };
        let mut monotone = 0usize;
        for q1 in &subgroups {
            for q2 in &subgroups {
                if q1.order() < q2.order() && q1.is_subgroup_of(q2) {
                    ok &= image(q1)?.is_subspace_of(&s.field, &image(q2)?);
                    monotone += 1;
                }
            }
        }
        facts.push("trace_pairs_checked", monotone);
        facts.push("p_subgroups", subgroups.len());
        facts.push("normalizer_order", normalizer(&s.h, &s.p_sub)?.order());
        Ok((if ok { Status::Pass } else { Status::Fail }, facts_value(&facts)))
    }
}

pub fn run(s: &Scenario, opts: RunOptions) -> RunReport {
    let mut ctx = Context { s, opts, a: None, q: None };
    let mut checks = Vec::new();
    for name in &s.checks {
        let start = Instant::now();
        let (status, data) = match ctx.run_check(name) {
            Ok(r) => r,
            Err(e) => (Status::Fail, json!({"error": e.to_string()})),
        };
        checks.push(CheckResult {
            name: name.clone(),
            status: status.to_string(),
            data,
            millis: opts.timings.then(|| start.elapsed().as_millis() as u64),
        });
    }
    RunReport {
        scenario: s.name.clone(),
        environment: Environment { p: s.prime, e: s.field.degree(), seed: s.seed },
        checks,
    }
}
