//! Number formatting shared by all reports.

use std::f64::consts::PI;

use ovalkit::FourierSupport;
use serde::Serialize;

/// Largest denominator tried when recognising rational multiples of π.
const MAX_DENOMINATOR: i64 = 1000;
/// Absolute distance to `r·πᵏ` accepted as a match.
const SYMBOLIC_TOL: f64 = 1e-9;

/// Decimal with 15 significant digits, trailing zeros trimmed.
pub fn sig15(v: f64) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let prec = (14 - exp).max(0) as usize;
        let s = format!("{v:.prec$}");
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            s
        };
        if s == "-0" {
            "0".to_owned()
        } else {
            s
        }
    } else {
        format!("{v:.14e}")
    }
}

/// `v` as `r·πᵏ` for a rational `r` with denominator ≤ 1000, e.g. `117π`,
/// `25.875π²`, `-2π/9`, `π/2`. Terminating decimals above 1 are written as
/// decimals.
pub fn symbolic(v: f64, pi_power: i32) -> Option<String> {
    if v.abs() <= SYMBOLIC_TOL {
        return Some("0".to_owned());
    }
    let unit = PI.powi(pi_power);
    let q = v / unit;
    if !q.is_finite() || q.abs() > 1e12 {
        return None;
    }
    let (num, den) = (1..=MAX_DENOMINATOR).find_map(|den| {
        let num = (q * den as f64).round();
        ((num / den as f64 * unit - v).abs() <= SYMBOLIC_TOL && num != 0.0)
            .then_some((num as i64, den))
    })?;
    let g = gcd(num.abs(), den);
    let (num, den) = (num / g, den / g);
    let sym = match pi_power {
        1 => "π",
        2 => "π²",
        _ => return None,
    };
    let terminating = {
        let mut d = den;
        while d % 2 == 0 {
            d /= 2;
        }
        while d % 5 == 0 {
            d /= 5;
        }
        d == 1
    };
    Some(if den == 1 {
        match num {
            1 => sym.to_owned(),
            -1 => format!("-{sym}"),
            n => format!("{n}{sym}"),
        }
    } else if terminating && num.abs() > den {
        format!("{}{sym}", sig15(num as f64 / den as f64))
    } else {
        let n = match num {
            1 => String::new(),
            -1 => "-".to_owned(),
            n => n.to_string(),
        };
        format!("{n}{sym}/{den}")
    })
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// A reported quantity: exact value plus its symbolic form when one exists.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Quantity {
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbolic: Option<String>,
}

impl Quantity {
    pub fn new(value: f64, pi_power: i32) -> Self {
        // no "-0.0" in reports
        let value = value + 0.0;
        Quantity {
            value,
            symbolic: symbolic(value, pi_power),
        }
    }

    pub fn plain(value: f64) -> Self {
        Quantity {
            value: value + 0.0,
            symbolic: None,
        }
    }

    /// `69.1150383789754 = 22π`
    pub fn text(&self) -> String {
        match &self.symbolic {
            Some(s) if s == "0" && self.value != 0.0 => format!("{} ≈ 0", sig15(self.value)),
            Some(s) if s != "0" => format!("{} = {s}", sig15(self.value)),
            _ => sig15(self.value),
        }
    }
}

/// `p(θ) = 10 + 2 cos 2θ - 0.333333333333333 sin 3θ`
pub fn describe_support(s: &FourierSupport) -> String {
    let mut out = format!("p(θ) = {}", sig15(s.a0()));
    for h in s.terms() {
        for (c, f) in [(h.a, "cos"), (h.b, "sin")] {
            if c == 0.0 {
                continue;
            }
            let sign = if c < 0.0 { '-' } else { '+' };
            let mag = if c.abs() == 1.0 {
                String::new()
            } else {
                format!("{} ", sig15(c.abs()))
            };
            let arg = if h.n == 1 {
                "θ".to_owned()
            } else {
                format!("{}θ", h.n)
            };
            out.push_str(&format!(" {sign} {mag}{f} {arg}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ovalkit::Harmonic;

    #[test]
    fn significant_digits() {
        assert_eq!(sig15(22.0 * PI), "69.1150383789754");
        assert_eq!(sig15(0.0), "0");
        assert_eq!(sig15(-0.25), "-0.25");
        assert_eq!(sig15(12.0), "12");
        assert_eq!(sig15(1.5e-7), "1.50000000000000e-7");
    }

    #[test]
    fn symbolic_forms() {
        assert_eq!(symbolic(117.0 * PI, 1).as_deref(), Some("117π"));
        assert_eq!(symbolic(-2.0 * PI, 1).as_deref(), Some("-2π"));
        assert_eq!(symbolic(25.875 * PI * PI, 2).as_deref(), Some("25.875π²"));
        assert_eq!(symbolic(-2.0 * PI / 9.0, 1).as_deref(), Some("-2π/9"));
        assert_eq!(
            symbolic(26809.0 * PI / 288.0, 1).as_deref(),
            Some("26809π/288")
        );
        assert_eq!(symbolic(PI / 14.0, 1).as_deref(), Some("π/14"));
        assert_eq!(symbolic(PI, 1).as_deref(), Some("π"));
        assert_eq!(symbolic(PI / 2.0, 1).as_deref(), Some("π/2"));
        assert_eq!(symbolic(1.5 * PI * PI, 2).as_deref(), Some("1.5π²"));
        assert_eq!(symbolic(0.123456789123, 1), None);
    }

    #[test]
    fn support_description() {
        let s = FourierSupport::new(
            10.0,
            [
                Harmonic::new(2, 2.0, 0.0),
                Harmonic::new(3, 0.0, -1.0 / 3.0),
                Harmonic::new(4, -0.25, 0.0),
            ],
        )
        .unwrap();
        assert_eq!(
            describe_support(&s),
            "p(θ) = 10 + 2 cos 2θ - 0.333333333333333 sin 3θ - 0.25 cos 4θ"
        );
        let m = FourierSupport::new(11.0, [Harmonic::new(3, 1.0, 0.0)]).unwrap();
        assert_eq!(describe_support(&m), "p(θ) = 11 + cos 3θ");
    }
}
