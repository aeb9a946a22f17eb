use std::fmt;

use crate::algebra::{FiniteAlgebra, Signature};

/// A term over a signature with variables indexed from zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Op(usize, Vec<Term>),
}

impl Term {
    pub fn eval(&self, a: &FiniteAlgebra, assignment: &[usize]) -> usize {
        match self {
            Term::Var(i) => assignment[*i],
            Term::Op(s, args) => {
                let vals: Vec<usize> = args.iter().map(|t| t.eval(a, assignment)).collect();
                a.apply(*s, &vals)
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::Op(_, args) => 1 + args.iter().map(Term::depth).max().unwrap_or(0),
        }
    }

    /// One more than the largest variable index.
    pub fn variables(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Op(_, args) => args.iter().map(Term::variables).max().unwrap_or(0),
        }
    }

    pub fn display<'a>(&'a self, sig: &'a Signature, vars: &'a [String]) -> TermDisplay<'a> {
        TermDisplay {
            term: self,
            sig,
            vars,
        }
    }
}

pub struct TermDisplay<'a> {
    term: &'a Term,
    sig: &'a Signature,
    vars: &'a [String],
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.term {
            Term::Var(i) => match self.vars.get(*i) {
                Some(name) => write!(f, "{name}"),
                None => write!(f, "v{i}"),
            },
            Term::Op(s, args) => {
                write!(f, "{}", self.sig.name(*s))?;
                if args.is_empty() {
                    return Ok(());
                }
                write!(f, "(")?;
                for (i, t) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", t.display(self.sig, self.vars))?;
                }
                write!(f, ")")
            }
        }
    }
}
