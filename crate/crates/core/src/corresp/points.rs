use crate::error::{Error, Result};
use crate::falgebra::{
    corner, fixed_points, primitive_decomposition, trace_image, ActionOnAlgebra, Algebra, Decomposition, Fe,
    Subalgebra, Subspace, Vector,
};
use crate::groups::{are_conjugate, is_subconjugate, p_subgroups_up_to_conjugacy, Subgroup};

/// A conjugacy class of defect groups with its canonical representative.
#[derive(Clone, Debug)]
pub struct DefectGroup {
    pub representative: Subgroup,
    pub class: Vec<Subgroup>,
}

impl DefectGroup {
    /// True when `q` is conjugate in `h` to the representative.
    pub fn contains_conjugate_of(&self, h: &Subgroup, q: &Subgroup) -> bool {
        are_conjugate(h, &self.representative, q)
    }
}

/// A point of `H` on an algebra: a class of primitive idempotents of the
/// fixed subalgebra.
#[derive(Clone, Debug)]
pub struct PointedGroup {
    pub carrier: String,
    pub h: Subgroup,
    pub point_id: usize,
    pub multiplicity: usize,
    /// A primitive idempotent of the point, in carrier coordinates.
    pub rep: Vector,
    pub defect: Option<DefectGroup>,
}

/// All points of `H` on a carrier together with the decomposition they came
/// from.
#[derive(Clone, Debug)]
pub struct PointSet {
    pub carrier: String,
    pub fixed: Subalgebra,
    pub decomposition: Decomposition,
    pub points: Vec<PointedGroup>,
}

impl PointSet {
    /// The point containing a primitive idempotent `e` of the fixed
    /// subalgebra, given in carrier coordinates.
    pub fn point_of(&self, e: &[Fe]) -> Result<usize> {
        let f = self.fixed.algebra.field();
        if !self.fixed.space.contains(f, e) {
            return Err(Error::NotFixed("idempotent is not in the fixed subalgebra".into()));
        }
        let alg = &self.fixed.algebra;
        let coords = self.fixed.restrict(e);
        if !alg.is_idempotent(&coords) || crate::falgebra::is_zero(&coords) {
            return Err(Error::Verification("not a nonzero idempotent".into()));
        }
        let c = self.decomposition.point_of(alg, &coords)?;
        // linked to one point only, so e is a sum of m conjugates and its
        // corner is m^2 times as large
        let rep = &self.decomposition.idempotents[self.decomposition.classes[c][0]].idempotent;
        if corner(alg, &coords).dim() != corner(alg, rep).dim() {
            return Err(Error::Verification("idempotent is not primitive".into()));
        }
        Ok(c)
    }

    /// Points whose defect class contains a conjugate of `q`.
    pub fn with_defect(&self, q: &Subgroup) -> Vec<usize> {
        self.points
            .iter()
            .filter(|pt| pt.defect.as_ref().is_some_and(|d| d.contains_conjugate_of(&pt.h, q)))
            .map(|pt| pt.point_id)
            .collect()
    }
}

/// Points of the acting group of `act` on `alg`, one per class of
/// primitive idempotents of the fixed subalgebra.
pub fn points_on(carrier: &str, alg: &Algebra, act: &ActionOnAlgebra, seed: u64) -> Result<PointSet> {
    let fixed = fixed_points(alg, act)?;
    let decomposition = primitive_decomposition(&fixed.algebra, seed)?;
    let points = decomposition
        .classes
        .iter()
        .enumerate()
        .map(|(k, class)| PointedGroup {
            carrier: carrier.to_string(),
            h: act.group().clone(),
            point_id: k,
            multiplicity: class.len(),
            rep: fixed.embed(&decomposition.idempotents[class[0]].idempotent),
            defect: None,
        })
        .collect();
    Ok(PointSet { carrier: carrier.to_string(), fixed, decomposition, points })
}

/// Trace ideals `A_Q^H` for each class of p-subgroups of `H`, ascending by
/// order.
pub struct TraceIdeals {
    pub classes: Vec<Subgroup>,
    pub images: Vec<Subspace>,
}

pub fn trace_ideals(alg: &Algebra, act: &ActionOnAlgebra, p: usize) -> Result<TraceIdeals> {
    let h = act.group();
    let classes = p_subgroups_up_to_conjugacy(h, p)?;
    let images = classes.iter().map(|q| trace_image(alg.field(), alg.dim(), act, q, h)).collect::<Result<Vec<_>>>()?;
    Ok(TraceIdeals { classes, images })
}

impl TraceIdeals {
    /// The minimal `Q` with `e` in `A_Q^H`, which must be unique up to
    /// conjugacy.
    pub fn defect_of(&self, h: &Subgroup, alg: &Algebra, e: &[Fe]) -> Result<DefectGroup> {
        let f = alg.field();
        let hits: Vec<usize> = (0..self.classes.len()).filter(|&k| self.images[k].contains(f, e)).collect();
        let minimal: Vec<usize> = hits
            .iter()
            .copied()
            .filter(|&k| {
                let q = &self.classes[k];
                !hits.iter().any(|&j| {
                    let r = &self.classes[j];
                    r.order() < q.order() && is_subconjugate(h, r, q)
                })
            })
            .collect();
        match minimal.as_slice() {
            [] => Err(Error::Verification("idempotent lies in no trace ideal".into())),
            [k] => {
                let q = self.classes[*k].clone();
                let mut class: Vec<Subgroup> = Vec::new();
                for &x in h.members() {
                    let c = q.conjugate(x);
                    if !class.contains(&c) {
                        class.push(c);
                    }
                }
                class.sort_by(|a, b| a.members().cmp(b.members()));
                Ok(DefectGroup { representative: q, class })
            }
            _ => Err(Error::Verification("minimal defect groups are not conjugate".into())),
        }
    }
}

/// Fills in the defect group of every point.
pub fn defect_groups(set: &mut PointSet, alg: &Algebra, act: &ActionOnAlgebra, p: usize) -> Result<()> {
    let ideals = trace_ideals(alg, act, p)?;
    for pt in &mut set.points {
        pt.defect = Some(ideals.defect_of(act.group(), alg, &pt.rep)?);
    }
    Ok(())
}
