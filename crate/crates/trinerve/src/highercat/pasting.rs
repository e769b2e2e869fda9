//! A small term language for pasting 3-cells in a strict 3-category:
//! whiskering by identity cells plus the three binary compositions.  In a
//! strict target the value of a well-typed scheme is independent of
//! evaluation order.

use crate::error::{Error, Result};

use super::cells::Strict3Cat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Paste3 {
    /// A 3-cell of the target.
    Cell(u32),
    /// The identity 3-cell of a 2-cell.
    Id2(u32),
    /// Composition along a 2-cell, second argument first.
    VComp(Box<Paste3>, Box<Paste3>),
    /// Composition along a 1-cell, second argument first.
    HComp(Box<Paste3>, Box<Paste3>),
    /// Composition across objects.
    Tensor(Box<Paste3>, Box<Paste3>),
}

impl Paste3 {
    pub fn cell(x: u32) -> Paste3 {
        Paste3::Cell(x)
    }
    pub fn id2(a: u32) -> Paste3 {
        Paste3::Id2(a)
    }
    pub fn vcomp(a: Paste3, b: Paste3) -> Paste3 {
        Paste3::VComp(Box::new(a), Box::new(b))
    }
    pub fn hcomp(a: Paste3, b: Paste3) -> Paste3 {
        Paste3::HComp(Box::new(a), Box::new(b))
    }
    pub fn tensor(a: Paste3, b: Paste3) -> Paste3 {
        Paste3::Tensor(Box::new(a), Box::new(b))
    }
}

/// Evaluate a pasting term to a 3-cell id; ill-typed schemes are structural
/// errors.
pub fn pasting_eval(t: &Strict3Cat, term: &Paste3) -> Result<u32> {
    match term {
        Paste3::Cell(x) => {
            if *x as usize >= t.cells3.len() {
                return Err(Error::structure("3-cell id out of range"));
            }
            Ok(*x)
        }
        Paste3::Id2(a) => {
            if *a as usize >= t.cells2.len() {
                return Err(Error::structure("2-cell id out of range"));
            }
            Ok(t.id3[*a as usize])
        }
        Paste3::VComp(a, b) => {
            let x = pasting_eval(t, a)?;
            let y = pasting_eval(t, b)?;
            t.comp3_2(x, y)
        }
        Paste3::HComp(a, b) => {
            let x = pasting_eval(t, a)?;
            let y = pasting_eval(t, b)?;
            t.comp3_1(x, y)
        }
        Paste3::Tensor(a, b) => {
            let x = pasting_eval(t, a)?;
            let y = pasting_eval(t, b)?;
            t.comp3_0(x, y)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgrp::FgAbGroup;

    #[test]
    fn single_cell_evaluates_to_itself() {
        let t = Strict3Cat::sigma2(&FgAbGroup::cyclic(5)).unwrap();
        assert_eq!(pasting_eval(&t, &Paste3::cell(3)).unwrap(), 3);
    }

    #[test]
    fn vertical_composition_in_sigma2_is_addition() {
        let t = Strict3Cat::sigma2(&FgAbGroup::cyclic(5)).unwrap();
        let term = Paste3::vcomp(Paste3::cell(2), Paste3::cell(4));
        assert_eq!(pasting_eval(&t, &term).unwrap(), 1);
    }

    #[test]
    fn evaluation_order_does_not_matter_in_strict_targets() {
        let t = Strict3Cat::sigma2(&FgAbGroup::cyclic(7)).unwrap();
        // ((a ·₂ b) ⊗ c) vs (a ⊗ c) ·₂ (b ⊗ id): interchange instance
        let lhs = Paste3::tensor(
            Paste3::vcomp(Paste3::cell(1), Paste3::cell(2)),
            Paste3::vcomp(Paste3::cell(3), Paste3::id2(0)),
        );
        let rhs = Paste3::vcomp(
            Paste3::tensor(Paste3::cell(1), Paste3::cell(3)),
            Paste3::tensor(Paste3::cell(2), Paste3::id2(0)),
        );
        assert_eq!(pasting_eval(&t, &lhs).unwrap(), pasting_eval(&t, &rhs).unwrap());
    }

    #[test]
    fn ill_typed_scheme_rejected() {
        let c = crate::cat::ordinal_category(1);
        let t = Strict3Cat::from_category(&c).unwrap();
        // tensoring two endo-cells at different objects in a poset fails
        let term = Paste3::vcomp(Paste3::id2(0), Paste3::id2(1));
        assert!(pasting_eval(&t, &term).is_err());
    }
}
