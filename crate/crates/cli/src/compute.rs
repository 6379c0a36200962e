use std::fmt::Write as _;

use kroncomb::kronecker::{as_hook, as_two_row};
use kroncomb::qseries::{almkvist_poly, b_poly, q_binomial};
use kroncomb::statistics::p_stat_sequence;
use kroncomb::{kronecker_lr, kronecker_oracle, lr_coefficient, mn_character, CycleType, LrCache};
use kroncomb::{IntPolynomial, Partition};
use serde_json::{json, Value};

use crate::report::Format;
use crate::CliError;

/// Largest `|λ|` accepted by the generic LR routes.
pub const LR_GUARD: usize = 16;
/// Largest `n` accepted by the character-table Kronecker route.
pub const ORACLE_GUARD: usize = 12;

#[derive(Debug, Clone, Copy)]
pub struct Guards {
    pub enabled: bool,
}

impl Guards {
    fn check(&self, name: &str, value: usize, limit: usize) -> Result<(), CliError> {
        if self.enabled && value > limit {
            return Err(CliError::Guard(format!(
                "{name} guard: size {value} exceeds {limit} (pass --unsafe-no-guard to override)"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Count(u64),
    Signed(i64),
    Sequence(Vec<i64>),
}

/// The result of a compute subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct Computed {
    pub label: String,
    pub quantity: Quantity,
    /// Which algorithm produced the value, for `kron`.
    pub route: Option<&'static str>,
}

impl Computed {
    fn new(label: String, quantity: Quantity) -> Self {
        Computed {
            label,
            quantity,
            route: None,
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.quantity {
            Quantity::Count(c) => json!(c),
            Quantity::Signed(c) => json!(c),
            Quantity::Sequence(s) => json!(s),
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Json => {
                out.push_str(&self.to_json().to_string());
                out.push('\n');
            }
            Format::Text => {
                let value = match &self.quantity {
                    Quantity::Count(c) => c.to_string(),
                    Quantity::Signed(c) => c.to_string(),
                    Quantity::Sequence(s) => IntPolynomial::new(s.clone()).to_string(),
                };
                let _ = write!(out, "{} = {}", self.label, value);
                if let Some(route) = self.route {
                    let _ = write!(out, "  [{route}]");
                }
                out.push('\n');
            }
            Format::Csv => match &self.quantity {
                Quantity::Sequence(s) => {
                    out.push_str("n,value\n");
                    for (i, c) in s.iter().enumerate() {
                        let _ = writeln!(out, "{i},{c}");
                    }
                }
                Quantity::Count(c) => {
                    let _ = write!(out, "value\n{c}\n");
                }
                Quantity::Signed(c) => {
                    let _ = write!(out, "value\n{c}\n");
                }
            },
        }
        out
    }
}

pub fn parse_partition(text: &str) -> Result<Partition, CliError> {
    text.parse::<Partition>()
        .map_err(|e| CliError::Usage(format!("{text}: {e}")))
}

fn coefficients(poly: IntPolynomial) -> Quantity {
    Quantity::Sequence(poly.into_coeffs())
}

pub fn lr(
    guards: Guards,
    lambda: &Partition,
    alpha: &Partition,
    beta: &Partition,
) -> Result<Computed, CliError> {
    guards.check("LR", lambda.size(), LR_GUARD)?;
    Ok(Computed::new(
        format!("c^{lambda}_{{{alpha},{beta}}}"),
        Quantity::Count(lr_coefficient(lambda, alpha, beta)),
    ))
}

/// `g(λ, μ, ν)`. Since `g` is symmetric in its arguments, any two-row or hook
/// argument is moved to the last slot and the LR route used; otherwise the
/// character table is summed.
pub fn kron(
    guards: Guards,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<Computed, CliError> {
    let label = format!("g({lambda},{mu},{nu})");
    let special = |p: &Partition| as_two_row(p).is_some() || as_hook(p).is_some();
    let ordered = if special(nu) {
        Some((lambda, mu, nu))
    } else if special(mu) {
        Some((lambda, nu, mu))
    } else if special(lambda) {
        Some((mu, nu, lambda))
    } else {
        None
    };
    if lambda.size() != mu.size() || mu.size() != nu.size() {
        return Err(CliError::Library(kroncomb::Error::SizeMismatch(format!(
            "{lambda}, {mu}, {nu} do not have equal sizes"
        ))));
    }
    if let Some((a, b, c)) = ordered {
        guards.check("LR", a.size(), LR_GUARD)?;
        let g = kronecker_lr(&LrCache::new(), a, b, c)?.expect("last argument is two-row or hook");
        let mut out = Computed::new(label, Quantity::Count(g));
        out.route = Some("lr");
        return Ok(out);
    }
    guards.check("oracle Kronecker", lambda.size(), ORACLE_GUARD)?;
    let g = kronecker_oracle(lambda, mu, nu)?;
    let mut out = Computed::new(label, Quantity::Count(g));
    out.route = Some("characters");
    Ok(out)
}

pub fn qbinom(rows: usize, cols: usize) -> Computed {
    Computed::new(
        format!("qbinom({rows},{cols})"),
        coefficients(q_binomial(rows, cols)),
    )
}

pub fn almkvist(m: usize) -> Result<Computed, CliError> {
    Ok(Computed::new(
        format!("almkvist({m})"),
        coefficients(almkvist_poly(m)?),
    ))
}

pub fn bpoly(m: usize) -> Result<Computed, CliError> {
    Ok(Computed::new(
        format!("bpoly({m})"),
        coefficients(b_poly(m)?),
    ))
}

pub fn pstat(rows: usize, cols: usize, r: usize) -> Result<Computed, CliError> {
    let seq = p_stat_sequence(rows, cols, r)?;
    let seq = seq
        .into_iter()
        .map(|c| i64::try_from(c).map_err(|_| kroncomb::Error::Overflow))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Computed::new(
        format!("pstat({rows},{cols},{r})"),
        Quantity::Sequence(seq),
    ))
}

pub fn character(lambda: &Partition, rho: &Partition) -> Result<Computed, CliError> {
    let chi = mn_character(lambda, &CycleType::new(rho.clone()))?;
    Ok(Computed::new(
        format!("chi^{lambda}[{rho}]"),
        Quantity::Signed(chi),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const ON: Guards = Guards { enabled: true };

    fn p(text: &str) -> Partition {
        parse_partition(text).unwrap()
    }

    #[test]
    fn fixtures() {
        assert_eq!(
            qbinom(3, 3).to_json(),
            json!([1, 1, 2, 3, 3, 3, 3, 2, 1, 1])
        );
        assert_eq!(
            pstat(3, 3, 1).unwrap().to_json(),
            json!([0, 1, 2, 4, 5, 6, 5, 4, 2, 1])
        );
        assert_eq!(
            kron(ON, &p("[1]"), &p("[1]"), &p("[1]")).unwrap().to_json(),
            json!(1)
        );
        assert_eq!(
            lr(ON, &p("[5,5,3,2]"), &p("[2,1]"), &p("[4,4,3,1]"))
                .unwrap()
                .to_json(),
            json!(1)
        );
    }

    #[test]
    fn kron_routes() {
        let k = kron(ON, &p("[2,2]"), &p("[2,2]"), &p("[2,2]")).unwrap();
        assert_eq!(k.route, Some("lr"));
        assert_eq!(k.to_json(), json!(1));
        let k = kron(ON, &p("[3,2,1]"), &p("[3,2,1]"), &p("[3,2,1]")).unwrap();
        assert_eq!(k.route, Some("characters"));
        assert_eq!(k.to_json(), json!(5));
    }

    #[test]
    fn guards_refuse() {
        let big = p("[5,4,3,1]");
        let err = kron(ON, &big, &big, &p("[4,3,3,3]")).unwrap_err();
        assert!(matches!(err, CliError::Guard(_)));
        let off = Guards { enabled: false };
        assert!(lr(off, &p("[9,8]"), &p("[9]"), &p("[8]")).is_ok());
        assert!(matches!(
            lr(ON, &p("[9,8]"), &p("[9]"), &p("[8]")),
            Err(CliError::Guard(_))
        ));
    }

    #[test]
    fn text_and_csv() {
        assert_eq!(qbinom(1, 2).render(Format::Text), "qbinom(1,2) = 1+q+q^2\n");
        assert_eq!(qbinom(1, 1).render(Format::Csv), "n,value\n0,1\n1,1\n");
        assert_eq!(
            character(&p("[2,1]"), &p("[3]"))
                .unwrap()
                .render(Format::Csv),
            "value\n-1\n"
        );
    }
}
