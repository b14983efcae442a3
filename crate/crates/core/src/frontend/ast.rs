use std::fmt;

use super::lexer::CmpOp;
use crate::polyring::Polynomial;
use crate::theorems::CheckId;

/// A parsed session: declarations and commands, each in source order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SessionAst {
    pub declarations: Vec<Declaration>,
    pub commands: Vec<Command>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Declaration {
    Ring { name: String, vars: Vec<String>, relations: Vec<Polynomial> },
    /// `vars` is the variable list of the tensor after clash renaming.
    Tensor { name: String, left: String, right: String, vars: Vec<String> },
    Ideal { name: String, ring: String, generators: Vec<Polynomial> },
}

impl Declaration {
    pub fn name(&self) -> &str {
        match self {
            Declaration::Ring { name, .. } | Declaration::Tensor { name, .. } | Declaration::Ideal { name, .. } => name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Compute(Expr),
    Assert { lhs: Expr, op: CmpOp, rhs: Expr },
    Check { id: CheckId, args: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Bool(bool),
    Grade { ring: String, ideal: String },
    /// `dim(R)` or, with an ideal, the dimension of `R/I`.
    Dim { ring: String, ideal: Option<String> },
    Height { ring: String, ideal: String },
    IsCm { ring: String },
}

fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Declaration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Declaration::Ring { name, vars, relations } => {
                write!(f, "ring {name} = poly(")?;
                list(f, vars)?;
                f.write_str(")")?;
                if !relations.is_empty() {
                    f.write_str(" / (")?;
                    list(f, relations)?;
                    f.write_str(")")?;
                }
                Ok(())
            }
            Declaration::Tensor { name, left, right, .. } => write!(f, "ring {name} = tensor({left}, {right})"),
            Declaration::Ideal { name, ring, generators } => {
                write!(f, "ideal {name} = {ring}:(")?;
                list(f, generators)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Bool(b) => write!(f, "{b}"),
            Expr::Grade { ring, ideal } => write!(f, "grade({ring}, {ideal})"),
            Expr::Dim { ring, ideal: None } => write!(f, "dim({ring})"),
            Expr::Dim { ring, ideal: Some(i) } => write!(f, "dim({ring}, {i})"),
            Expr::Height { ring, ideal } => write!(f, "height({ring}, {ideal})"),
            Expr::IsCm { ring } => write!(f, "is_cm({ring})"),
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Compute(e) => write!(f, "compute {e}"),
            Command::Assert { lhs, op, rhs } => write!(f, "assert {lhs} {} {rhs}", op.as_str()),
            Command::Check { id, args } => {
                write!(f, "check {}(", id.as_str())?;
                list(f, args)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for SessionAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.declarations {
            writeln!(f, "{d};")?;
        }
        for c in &self.commands {
            writeln!(f, "{c};")?;
        }
        Ok(())
    }
}
