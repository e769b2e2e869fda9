//! JSON encodings of the input objects: groups, modules, categories,
//! strict 2-/3-categories, cochains, and Postnikov data.

use serde::{Deserialize, Serialize};

use crate::abgrp::{Elem, FgAbGroup, FiniteGroup, GModule, IntMatrix};
use crate::cat::{ordinal_category, DiGraph, FiniteCategory};
use crate::emac::PostnikovData;
use crate::cocycle::{Cochain, CochainBase};

use crate::error::{Error, Result};
use crate::highercat::{Strict2Cat, Strict3Cat};

#[derive(Serialize, Deserialize)]
pub struct GModuleJson {
    pub group: FiniteGroup,
    pub coeff: FgAbGroup,
    pub action: Vec<Vec<Vec<i64>>>,
}

impl GModuleJson {
    pub fn into_module(self) -> Result<GModule> {
        let mats = self.action.into_iter().map(|rows| IntMatrix { rows }).collect();
        GModule::new(self.group, self.coeff, mats)
    }

    pub fn from_module(m: &GModule) -> Self {
        GModuleJson {
            group: m.group().clone(),
            coeff: m.coeff().clone(),
            action: (0..m.group().order() as u32)
                .map(|g| m.action_matrix(g).rows.clone())
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct CategoryJson {
    pub objects: usize,
    /// `(source, target)` per morphism
    pub morphisms: Vec<(usize, usize)>,
    pub identity: Vec<u32>,
    pub compose: Vec<Vec<Option<u32>>>,
}

impl CategoryJson {
    pub fn into_category(self) -> Result<FiniteCategory> {
        FiniteCategory::new(self.objects, self.morphisms, self.identity, self.compose)
    }
}

#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<DiGraph> {
        DiGraph::new(self.vertices, self.edges)
    }
}

#[derive(Serialize, Deserialize)]
pub struct TwoCatJson {
    pub objects: usize,
    pub cells1: Vec<(u32, u32)>,
    pub cells2: Vec<(u32, u32)>,
    pub id1: Vec<u32>,
    pub id2: Vec<u32>,
    pub comp1: Vec<Vec<Option<u32>>>,
    pub vcomp2: Vec<Vec<Option<u32>>>,
    pub hcomp2: Vec<Vec<Option<u32>>>,
}

impl TwoCatJson {
    pub fn into_2cat(self) -> Result<Strict2Cat> {
        let b = Strict2Cat {
            objects: self.objects,
            cells1: self.cells1,
            cells2: self.cells2,
            id1: self.id1,
            id2: self.id2,
            comp1: self.comp1,
            vcomp2: self.vcomp2,
            hcomp2: self.hcomp2,
        };
        b.validate()?;
        Ok(b)
    }
}

#[derive(Serialize, Deserialize)]
pub struct ThreeCatJson {
    pub objects: usize,
    pub cells1: Vec<(u32, u32)>,
    pub cells2: Vec<(u32, u32)>,
    pub cells3: Vec<(u32, u32)>,
    pub id1: Vec<u32>,
    pub id2: Vec<u32>,
    pub id3: Vec<u32>,
    pub comp1: Vec<Vec<Option<u32>>>,
    pub vcomp2: Vec<Vec<Option<u32>>>,
    pub hcomp2: Vec<Vec<Option<u32>>>,
    pub comp3_2: Vec<Vec<Option<u32>>>,
    pub comp3_1: Vec<Vec<Option<u32>>>,
    pub comp3_0: Vec<Vec<Option<u32>>>,
}

impl ThreeCatJson {
    pub fn into_3cat(self) -> Result<Strict3Cat> {
        let t = Strict3Cat {
            objects: self.objects,
            cells1: self.cells1,
            cells2: self.cells2,
            cells3: self.cells3,
            id1: self.id1,
            id2: self.id2,
            id3: self.id3,
            comp1: self.comp1,
            vcomp2: self.vcomp2,
            hcomp2: self.hcomp2,
            comp3_2: self.comp3_2,
            comp3_1: self.comp3_1,
            comp3_0: self.comp3_0,
        };
        t.validate()?;
        Ok(t)
    }
}

/// Inputs accepted by the nerve command.
#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum NerveInput {
    /// The ordinal category `[p]`.
    Ordinal { p: usize },
    /// A finite group as a one-object category (cyclic shortcut or table).
    Group {
        #[serde(skip_serializing_if = "Option::is_none")]
        cyclic: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        table: Option<Vec<Vec<u32>>>,
    },
    Category(CategoryJson),
    /// One object, one 1-cell, 2-cells a finite abelian group.
    OneObjectOneArrow { group: FgAbGroup },
    /// The double suspension of a finite abelian group.
    Suspension2 { group: FgAbGroup },
    TwoCat(TwoCatJson),
    ThreeCat(ThreeCatJson),
}

impl NerveInput {
    pub fn into_3cat(self) -> Result<Strict3Cat> {
        match self {
            NerveInput::Ordinal { p } => Strict3Cat::from_category(&ordinal_category(p)),
            NerveInput::Group { cyclic, table } => {
                let g = match (cyclic, table) {
                    (Some(n), None) => FiniteGroup::cyclic(n),
                    (None, Some(t)) => FiniteGroup::new(t)?,
                    _ => {
                        return Err(Error::structure(
                            "group input needs exactly one of cyclic/table",
                        ))
                    }
                };
                Strict3Cat::from_category(&FiniteCategory::from_group(&g))
            }
            NerveInput::Category(c) => Strict3Cat::from_category(&c.into_category()?),
            NerveInput::OneObjectOneArrow { group } => {
                Strict3Cat::from_2cat(&Strict2Cat::one_object_one_arrow(&group)?)
            }
            NerveInput::Suspension2 { group } => Strict3Cat::sigma2(&group),
            NerveInput::TwoCat(b) => Strict3Cat::from_2cat(&b.into_2cat()?),
            NerveInput::ThreeCat(t) => t.into_3cat(),
        }
    }
}

/// Postnikov data file: the group, the two modules, `h` dense over `G^3`
/// (lexicographic), `t` dense over `A^6 x G^4` (x-coordinates then
/// sigma-coordinates, each lexicographic).
#[derive(Serialize, Deserialize)]
pub struct PostnikovJson {
    #[serde(rename = "G")]
    pub g: FiniteGroup,
    #[serde(rename = "A")]
    pub a: GModuleJson,
    #[serde(rename = "B")]
    pub b: GModuleJson,
    pub h: Vec<Elem>,
    pub t: Vec<Elem>,
}

impl PostnikovJson {
    pub fn into_data(self) -> Result<PostnikovData> {
        PostnikovData::new(self.g, self.a.into_module()?, self.b.into_module()?, self.h, self.t)
    }
}

/// Cochain file: a base (group or category), plain coefficients, degree,
/// and a sparse table of values on tuples.
#[derive(Serialize, Deserialize)]
pub struct CochainJson {
    pub base: CochainBaseJson,
    pub coeff: FgAbGroup,
    pub degree: usize,
    pub tuples: Vec<Vec<u32>>,
    pub values: Vec<Elem>,
    /// For twisted group checks: an optional action (matrix per group
    /// element) making the coefficients a module.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<i64>>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CochainBaseJson {
    Ordinal { p: usize },
    Group {
        #[serde(skip_serializing_if = "Option::is_none")]
        cyclic: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        table: Option<Vec<Vec<u32>>>,
    },
    Category(CategoryJson),
}

impl CochainJson {
    pub fn into_parts(self) -> Result<(Cochain, Option<GModule>)> {
        let base = match self.base {
            CochainBaseJson::Ordinal { p } => CochainBase::Category(ordinal_category(p)),
            CochainBaseJson::Group { cyclic, table } => {
                let g = match (cyclic, table) {
                    (Some(n), None) => FiniteGroup::cyclic(n),
                    (None, Some(t)) => FiniteGroup::new(t)?,
                    _ => {
                        return Err(Error::structure(
                            "group base needs exactly one of cyclic/table",
                        ))
                    }
                };
                CochainBase::Group(g)
            }
            CochainBaseJson::Category(c) => CochainBase::Category(c.into_category()?),
        };
        if self.tuples.len() != self.values.len() {
            return Err(Error::structure("tuples and values must have equal length"));
        }
        let mut c = Cochain::zero(base.clone(), self.coeff.clone(), self.degree);
        for (t, v) in self.tuples.iter().zip(self.values) {
            c.set(t, v)?;
        }
        let module = match (&base, self.action) {
            (CochainBase::Group(g), Some(action)) => Some(
                GModuleJson { group: g.clone(), coeff: self.coeff, action }.into_module()?,
            ),
            (CochainBase::Group(g), None) => {
                Some(GModule::trivial(g.clone(), self.coeff))
            }
            (_, Some(_)) => {
                return Err(Error::structure("actions only apply to group bases"))
            }
            _ => None,
        };
        Ok((c, module))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nerve_input_round_trips() {
        let text = r#"{"type": "suspension2", "group": {"rank": 0, "torsion": [2]}}"#;
        let input: NerveInput = serde_json::from_str(text).unwrap();
        let t = input.into_3cat().unwrap();
        assert_eq!(t.cells3.len(), 2);
    }

    #[test]
    fn postnikov_json_parses() {
        let g = FiniteGroup::cyclic(2);
        let a = GModule::trivial(g.clone(), FgAbGroup::cyclic(2));
        let p = PostnikovData::zero_tables(g.clone(), a.clone(), a.clone()).unwrap();
        let j = PostnikovJson {
            g,
            a: GModuleJson::from_module(&p.a),
            b: GModuleJson::from_module(&p.b),
            h: vec![vec![0]; 8],
            t: vec![vec![0]; 1024],
        };
        let text = serde_json::to_string(&j).unwrap();
        let back: PostnikovJson = serde_json::from_str(&text).unwrap();
        let q = back.into_data().unwrap();
        assert_eq!(q, p);
    }

    #[test]
    fn cochain_json_checks() {
        let text = r#"{
            "base": {"type": "group", "cyclic": 2},
            "coeff": {"rank": 0, "torsion": [2]},
            "degree": 3,
            "tuples": [[1, 1, 1]],
            "values": [[1]]
        }"#;
        let j: CochainJson = serde_json::from_str(text).unwrap();
        let (c, module) = j.into_parts().unwrap();
        let m = module.unwrap();
        assert!(crate::cocycle::is_z_group_twisted(&m, 3, &c).unwrap());
    }
}
