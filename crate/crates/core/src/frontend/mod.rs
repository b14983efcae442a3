//! Session language: tokenizer, recursive-descent parser, executor and
//! JSON/text reports.

mod ast;
mod exec;
mod lexer;
mod parser;
mod report;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use ast::{Command, Declaration, Expr, SessionAst};
pub use exec::{execute, RunConfig};
pub use lexer::CmpOp;
pub use parser::{parse_polynomial, parse_session, signature, ArgKind};
pub use report::{CommandResult, RunReport, Status, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    Unbound,
    Arity,
    /// A ring was used where an ideal is required, or vice versa.
    Kind,
    Duplicate,
}

/// A diagnostic with a 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ParseErrorKind::Lexical => "lexical error",
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Unbound => "unbound name",
            ParseErrorKind::Arity => "arity mismatch",
            ParseErrorKind::Kind => "kind mismatch",
            ParseErrorKind::Duplicate => "duplicate name",
        };
        write!(f, "{}:{}: {kind}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::PrimeField;
    use crate::theorems::CheckId;

    fn parse(text: &str) -> Result<SessionAst, ParseError> {
        parse_session(text, PrimeField::default())
    }

    fn run(text: &str) -> RunReport {
        execute(&parse(text).unwrap(), &RunConfig::default()).unwrap()
    }

    const NON_CM: &str = "ring A = poly(x, y) / (x^2, x*y);\nideal I = A:(x, y);\n";

    #[test]
    fn parses_declarations_and_commands() {
        let ast = parse("ring A = poly(x,y) / (x^2, x*y);").unwrap();
        assert_eq!(ast.declarations.len(), 1);
        assert!(matches!(&ast.declarations[0], Declaration::Ring { relations, .. } if relations.len() == 2));
        let ast = parse(&format!("{NON_CM}assert grade(A, I) == 0;")).unwrap();
        assert_eq!(ast.commands.len(), 1);
        assert!(matches!(&ast.commands[0], Command::Assert { op: CmpOp::Eq, rhs: Expr::Int(0), .. }));
        let ast = parse("ring A = poly(x); ring B = poly(x); ring T = tensor(A, B); check thm_2_1(A, B);").unwrap();
        assert!(matches!(&ast.declarations[2], Declaration::Tensor { vars, .. } if vars == &["x", "x1"]));
        assert!(matches!(&ast.commands[0], Command::Check { id: CheckId::Thm21, .. }));
    }

    #[test]
    fn syntax_error_at_empty_generator() {
        let err = parse("ring A = poly(x);\nideal I = A:(x, );").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Syntax);
        assert_eq!((err.line, err.column), (2, 17));
    }

    #[test]
    fn diagnostics() {
        let cases = [
            ("ring A = poly(x); ideal I = B:(x);", ParseErrorKind::Unbound),
            ("ring A = poly(x); ideal I = A:(y);", ParseErrorKind::Unbound),
            ("ring A = poly(x); ring A = poly(y);", ParseErrorKind::Duplicate),
            ("ring A = poly(x, x);", ParseErrorKind::Duplicate),
            ("ring A = poly(x); check thm_2_1(A);", ParseErrorKind::Arity),
            ("ring A = poly(x); ideal I = A:(x); check thm_2_1(A, I);", ParseErrorKind::Kind),
            ("ring A = poly(x); compute grade(A);", ParseErrorKind::Arity),
            ("ring A = poly(x) $;", ParseErrorKind::Lexical),
            ("ring A = poly(x)", ParseErrorKind::Syntax),
            ("ring A = poly(x); ideal I = A:(x y);", ParseErrorKind::Syntax),
            ("ring A = poly(x); check thm_9(A);", ParseErrorKind::Syntax),
            ("ring A = poly(x); ideal I = A:(x^99999);", ParseErrorKind::Syntax),
        ];
        for (text, kind) in cases {
            let err = parse(text).unwrap_err();
            assert_eq!(err.kind, kind, "{text}: {err}");
        }
    }

    #[test]
    fn literals_reduce_mod_p() {
        let f3 = PrimeField::new(3).unwrap();
        let ast = parse_session("ring A = poly(x) / (4*x - 7);", f3).unwrap();
        let Declaration::Ring { relations, .. } = &ast.declarations[0] else { panic!() };
        assert_eq!(relations[0].to_string(), "x - 1");
        let amb = crate::polyring::Ambient::with_vars(&["x"]);
        assert_eq!(parse_polynomial(&amb, "100000").unwrap().to_string(), "3991");
    }

    #[test]
    fn pretty_printing_round_trips() {
        let text = "ring A = poly(x, y) / (x^2, x*y);
            ring B = poly(x);
            ring T = tensor(A, B);
            ideal I = A:(x, y);
            ideal J = B:(x);
            ideal P = T:(x - x1, y, 3*x1^2 - 2);
            compute dim(A);
            compute dim(A, I);
            assert grade(A, I) <= -1;
            assert is_cm(A) != true;
            check thm_1_1_b(A, B, I, J);
            check remark_2_5(T, P);";
        let ast = parse(text).unwrap();
        let again = parse(&ast.to_string()).unwrap();
        assert_eq!(ast, again);
    }

    #[test]
    fn executes_assertions() {
        let r = run(&format!("{NON_CM}assert grade(A, I) == 0;"));
        assert!(r.passed());
        assert_eq!(r.results[0].certificate.len(), 1);
        let r = run(&format!("{NON_CM}assert grade(A, I) == 1;\ncompute dim(A);"));
        assert!(!r.passed());
        assert_eq!(r.results[0].status, Status::Fail);
        // failures do not abort later commands
        assert_eq!(r.results[1].status, Status::Pass);
        assert_eq!(r.results[1].lhs, Some(Value::Int(1)));
    }

    #[test]
    fn executes_checks() {
        let r = run("ring A = poly(x, y) / (x^2 + y^2); ring B = poly(u, v) / (u*v); check thm_2_1(A, B);");
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.results[0].lhs, Some(Value::Bool(true)));
        assert_eq!(r.results[0].certificate.len(), 3);
    }

    #[test]
    fn empty_session() {
        let r = run("");
        assert!(r.results.is_empty() && r.passed());
    }

    #[test]
    fn kernel_errors_are_captured() {
        let r = run("ring A = poly(x) / (x, x - 1); ideal I = A:(x); compute grade(A, I); compute dim(A);");
        assert!(!r.passed());
        assert!(r.results.iter().all(|c| c.status == Status::Error));
        let r = run("ring A = poly(x); ideal I = A:(x + 1, x); compute grade(A, I); compute dim(A);");
        assert_eq!(r.results[0].status, Status::Error);
        assert!(r.results[0].error.as_deref().unwrap().contains("zero quotient"));
        assert_eq!(r.results[1].status, Status::Pass);
        let r = run("ring A = poly(x) / (x^2 - x); compute is_cm(A);");
        assert!(r.results[0].error.as_deref().unwrap().contains("graded"));
        let r = run("ring A = poly(x); compute is_cm(A) < 1;".replace("compute", "assert").as_str());
        assert_eq!(r.results[0].status, Status::Error);
    }

    #[test]
    fn budgets_are_applied() {
        let ast = parse("ring A = poly(x, y, z) / (x^3 - y*z^2 + 1, y^3 - x*z, z^3 - x^2*y + x); compute dim(A);")
            .unwrap();
        let cfg = RunConfig { gb_step_budget: 2, ..RunConfig::default() };
        let r = execute(&ast, &cfg).unwrap();
        assert!(r.results.iter().any(|c| c.error.as_deref().is_some_and(|e| e.contains("budget"))), "{r:?}");
    }

    #[test]
    fn reports_round_trip_and_are_deterministic() {
        let text = format!("{NON_CM}ring B = poly(z); ideal J = B:(z); check thm_1_1_b(A, B, I, J); compute is_cm(A);");
        let a = run(&text);
        let b = run(&text);
        assert_eq!(a.without_timing().to_json(), b.without_timing().to_json());
        assert_eq!(RunReport::from_json(&a.to_json()).unwrap(), a);
        assert!(a.to_text().contains("[pass] check thm_1_1_b(A, B, I, J): 1 vs 1"));
    }

    #[test]
    fn bad_prime_is_rejected() {
        let cfg = RunConfig { prime: 32004, ..RunConfig::default() };
        assert!(execute(&SessionAst::default(), &cfg).is_err());
    }
}
