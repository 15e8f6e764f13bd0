//! Terms compiled to a postfix program over variable slots.

use alloc::string::String;
use alloc::vec::Vec;

use super::term::Term;
use crate::group::{Elem, FiniteGroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("variable {0:?} is not bound")]
    Unbound(String),
}

#[derive(Clone, Copy, Debug)]
enum Instr {
    Load(u16),
    One,
    Inv,
    Mul,
    Pow(i32),
    Conj,
    Bracket,
}

/// A term with its variables resolved to positions in an assignment slice.
#[derive(Clone, Debug)]
pub(crate) struct Program {
    code: Vec<Instr>,
}

impl Program {
    /// Fails with the first variable missing from `slots`.
    pub(crate) fn compile(term: &Term, slots: &[&str]) -> Result<Self, EvalError> {
        let mut code = Vec::new();
        emit(term, slots, &mut code)?;
        Ok(Program { code })
    }

    #[inline]
    pub(crate) fn run(&self, g: &FiniteGroup, asg: &[u32], stack: &mut Vec<u32>) -> u32 {
        stack.clear();
        for ins in &self.code {
            match *ins {
                Instr::Load(i) => stack.push(asg[i as usize]),
                Instr::One => stack.push(0),
                Instr::Inv => {
                    let a = stack.pop().expect("stack");
                    stack.push(g.inv_raw(a));
                }
                Instr::Pow(k) => {
                    let a = stack.pop().expect("stack");
                    stack.push(g.pow_raw(a, k as i64));
                }
                Instr::Mul | Instr::Conj | Instr::Bracket => {
                    let b = stack.pop().expect("stack");
                    let a = stack.pop().expect("stack");
                    stack.push(match *ins {
                        Instr::Mul => g.mul_raw(a, b),
                        Instr::Conj => g.conjugate_raw(a, b),
                        _ => g.commutator_raw(a, b),
                    });
                }
            }
        }
        stack.pop().expect("program leaves one value")
    }
}

fn emit(term: &Term, slots: &[&str], code: &mut Vec<Instr>) -> Result<(), EvalError> {
    match term {
        Term::Var(v) => {
            let i = slots.iter().position(|s| s == v).ok_or_else(|| EvalError::Unbound(v.clone()))?;
            code.push(Instr::Load(i as u16));
        }
        Term::One => code.push(Instr::One),
        Term::Inverse(t) => {
            emit(t, slots, code)?;
            code.push(Instr::Inv);
        }
        Term::Power(t, k) => {
            emit(t, slots, code)?;
            code.push(Instr::Pow(*k));
        }
        Term::Product(a, b) | Term::Bracket(a, b) | Term::Conjugate { base: a, by: b } => {
            emit(a, slots, code)?;
            emit(b, slots, code)?;
            code.push(match term {
                Term::Product(..) => Instr::Mul,
                Term::Bracket(..) => Instr::Bracket,
                _ => Instr::Conj,
            });
        }
    }
    Ok(())
}

/// Evaluates `term` in `group` under `assignment`.
pub fn evaluate(term: &Term, group: &FiniteGroup, assignment: &[(&str, Elem)]) -> Result<Elem, EvalError> {
    let slots: Vec<&str> = assignment.iter().map(|(name, _)| *name).collect();
    let values: Vec<u32> = assignment.iter().map(|(_, e)| e.raw()).collect();
    let program = Program::compile(term, &slots)?;
    Ok(Elem::new(program.run(group, &values, &mut Vec::new()) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_term;

    #[test]
    fn commutator_in_d8() {
        let d8 = FiniteGroup::dihedral(8).unwrap();
        let a = d8.element_by_name("a").unwrap();
        let b = d8.element_by_name("b").unwrap();
        let t = parse_term("[x,y]").unwrap();
        let v = evaluate(&t, &d8, &[("x", a), ("y", b)]).unwrap();
        assert_eq!(d8.name(v), "a6");
    }

    #[test]
    fn squared_commutator_in_d3() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let a = d3.element_by_name("a").unwrap();
        let b = d3.element_by_name("b").unwrap();
        let t = parse_term("[x,y]^2").unwrap();
        assert_eq!(d3.name(evaluate(&t, &d3, &[("x", a), ("y", b)]).unwrap()), "a2");
    }

    #[test]
    fn inverse_cancels() {
        let g = FiniteGroup::metacyclic(7, 3, 2).unwrap();
        let t = parse_term("x^-1 * x").unwrap();
        for x in g.elements() {
            assert_eq!(evaluate(&t, &g, &[("x", x)]).unwrap(), Elem::IDENTITY);
        }
    }

    #[test]
    fn powers_and_conjugates() {
        let c12 = FiniteGroup::cyclic(12).unwrap();
        let a = c12.element_by_name("a").unwrap();
        let t = parse_term("x^-5").unwrap();
        assert_eq!(c12.name(evaluate(&t, &c12, &[("x", a)]).unwrap()), "a7");
        let t = parse_term("x^0").unwrap();
        assert_eq!(evaluate(&t, &c12, &[("x", a)]).unwrap(), Elem::IDENTITY);

        let d8 = FiniteGroup::dihedral(8).unwrap();
        let (a, b) = (d8.element_by_name("a").unwrap(), d8.element_by_name("b").unwrap());
        let t = parse_term("x^y").unwrap();
        assert_eq!(d8.name(evaluate(&t, &d8, &[("x", a), ("y", b)]).unwrap()), "a7");
    }

    #[test]
    fn unbound_variable_is_named() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let t = parse_term("[x,q]").unwrap();
        assert_eq!(evaluate(&t, &g, &[("x", Elem::IDENTITY)]), Err(EvalError::Unbound("q".into())));
    }
}
