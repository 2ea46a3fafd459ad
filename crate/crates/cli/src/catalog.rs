//! Named groups with canonical generators and a few named subgroups.

use std::sync::Arc;

use extended_brauer::groups::{FiniteGroup, Perm, Subgroup};

use crate::CliError;

type Cycles = &'static [&'static [usize]];

pub struct Preset {
    pub name: &'static str,
    pub order: usize,
    pub degree: usize,
    generators: &'static [Cycles],
    subgroups: &'static [(&'static str, &'static [Cycles])],
    /// Generators given as full image arrays instead of cycles.
    images: Option<&'static [&'static [usize]]>,
}

const fn cyc(name: &'static str, order: usize, degree: usize, generators: &'static [Cycles]) -> Preset {
    Preset { name, order, degree, generators, subgroups: &[], images: None }
}

impl Preset {
    const fn with(mut self, subgroups: &'static [(&'static str, &'static [Cycles])]) -> Preset {
        self.subgroups = subgroups;
        self
    }

    pub fn subgroup_names(&self) -> Vec<&'static str> {
        self.subgroups.iter().map(|(n, _)| *n).collect()
    }

    fn perms(&self, gens: &[Cycles]) -> Result<Vec<Perm>, CliError> {
        gens.iter().map(|c| Perm::from_cycles(self.degree, c).map_err(|e| CliError::Config(e.to_string()))).collect()
    }

    pub fn build(&self) -> Result<Arc<FiniteGroup>, CliError> {
        let gens = match self.images {
            Some(images) => images
                .iter()
                .map(|im| Perm::new(im.to_vec()).map_err(|e| CliError::Config(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?,
            None => self.perms(self.generators)?,
        };
        FiniteGroup::from_generators(gens).map_err(|e| CliError::Config(e.to_string()))
    }

    /// A named subgroup of the preset, built inside `group`.
    pub fn subgroup(&self, group: &Arc<FiniteGroup>, name: &str) -> Option<Result<Subgroup, CliError>> {
        let (_, gens) = self.subgroups.iter().find(|(n, _)| *n == name)?;
        Some(
            self.perms(gens).and_then(|p| Subgroup::from_perms(group, &p).map_err(|e| CliError::Config(e.to_string()))),
        )
    }
}

const Q8_IMAGES: &[&[usize]] = &[&[1, 4, 3, 6, 5, 0, 7, 2], &[2, 7, 4, 1, 6, 3, 0, 5]];

pub static CATALOG: &[Preset] = &[
    cyc("C2", 2, 2, &[&[&[0, 1]]]),
    cyc("C3", 3, 3, &[&[&[0, 1, 2]]]),
    cyc("C4", 4, 4, &[&[&[0, 1, 2, 3]]]).with(&[("C2", &[&[&[0, 2], &[1, 3]]])]),
    cyc("C6", 6, 5, &[&[&[0, 1, 2], &[3, 4]]]).with(&[("C3", &[&[&[0, 1, 2]]]), ("C2", &[&[&[3, 4]]])]),
    cyc("V4", 4, 4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]).with(&[("C2", &[&[&[0, 1], &[2, 3]]])]),
    cyc("S3", 6, 3, &[&[&[0, 1]], &[&[0, 1, 2]]]).with(&[
        ("A3", &[&[&[0, 1, 2]]]),
        ("C3", &[&[&[0, 1, 2]]]),
        ("C2", &[&[&[0, 1]]]),
    ]),
    cyc("S4", 24, 4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]]).with(&[
        ("A4", &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]),
        ("V4", &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]),
        ("D8", &[&[&[0, 1, 2, 3]], &[&[0, 2]]]),
        ("C4", &[&[&[0, 1, 2, 3]]]),
        ("S3", &[&[&[0, 1]], &[&[0, 1, 2]]]),
        ("C3", &[&[&[0, 1, 2]]]),
        ("C2", &[&[&[0, 1]]]),
        ("C2z", &[&[&[0, 1], &[2, 3]]]),
    ]),
    cyc("A4", 12, 4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]).with(&[
        ("V4", &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]),
        ("C3", &[&[&[0, 1, 2]]]),
        ("C2", &[&[&[0, 1], &[2, 3]]]),
    ]),
    cyc("A5", 60, 5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]]).with(&[
        ("A4", &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]]),
        ("V4", &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]),
        ("D10", &[&[&[0, 1, 2, 3, 4]], &[&[1, 4], &[2, 3]]]),
        ("S3", &[&[&[0, 1, 2]], &[&[0, 1], &[3, 4]]]),
        ("C5", &[&[&[0, 1, 2, 3, 4]]]),
        ("C3", &[&[&[0, 1, 2]]]),
        ("C2", &[&[&[0, 1], &[2, 3]]]),
    ]),
    cyc("D8", 8, 4, &[&[&[0, 1, 2, 3]], &[&[0, 2]]]).with(&[
        ("C4", &[&[&[0, 1, 2, 3]]]),
        ("V4", &[&[&[0, 2]], &[&[1, 3]]]),
        ("Z", &[&[&[0, 2], &[1, 3]]]),
    ]),
    Preset {
        name: "Q8",
        order: 8,
        degree: 8,
        generators: &[],
        // left multiplication by i and j on 1, i, j, k, -1, -i, -j, -k
        subgroups: &[("C4", &[&[&[0, 1, 4, 5], &[2, 3, 6, 7]]]), ("Z", &[&[&[0, 4], &[1, 5], &[2, 6], &[3, 7]]])],
        images: Some(Q8_IMAGES),
    },
    cyc("S3xC2", 12, 5, &[&[&[0, 1]], &[&[0, 1, 2]], &[&[3, 4]]]).with(&[
        ("S3", &[&[&[0, 1]], &[&[0, 1, 2]]]),
        ("A3", &[&[&[0, 1, 2]]]),
        ("C6", &[&[&[0, 1, 2], &[3, 4]]]),
        ("C3", &[&[&[0, 1, 2]]]),
        ("C2", &[&[&[3, 4]]]),
    ]),
    cyc("C3xC3", 9, 6, &[&[&[0, 1, 2]], &[&[3, 4, 5]]]).with(&[
        ("C3", &[&[&[0, 1, 2]]]),
        ("C3b", &[&[&[3, 4, 5]]]),
        ("D", &[&[&[0, 1, 2], &[3, 4, 5]]]),
    ]),
];

pub fn preset(name: &str) -> Option<&'static Preset> {
    CATALOG.iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_closures() {
        for p in CATALOG {
            let g = p.build().unwrap();
            assert_eq!(g.order(), p.order, "{}", p.name);
            for name in p.subgroup_names() {
                let h = p.subgroup(&g, name).unwrap().unwrap();
                assert_eq!(p.order % h.order(), 0);
            }
        }
    }

    #[test]
    fn q8_has_one_involution() {
        let g = preset("Q8").unwrap().build().unwrap();
        let involutions = (0..g.order()).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }
}
