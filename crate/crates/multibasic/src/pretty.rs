//! Human-readable rendering: `q1..qN` and `t` with caret exponents,
//! explicit parenthesized denominator factors, terms in the storage
//! (graded-lexicographic) order.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::lattice::LatticeVector;
use crate::laurent::LaurentPolynomial;
use crate::rational::FactoredRationalFunction;

/// Variable names `q1, ..., qN`.
pub fn q_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("q{i}")).collect()
}

/// Variable names `q1, ..., qN, t` — the series convention, dilation
/// variable last.
pub fn qt_names(n: usize) -> Vec<String> {
    let mut names = q_names(n);
    names.push("t".to_string());
    names
}

/// Formal polynomial variables `x1, ..., xN`.
pub fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// A bare power product like `q1^2*q2^-1*t`, or an empty string for the
/// zero exponent vector.
pub fn power_product(e: &LatticeVector, names: &[String]) -> String {
    assert_eq!(e.len(), names.len(), "one name per variable");
    let mut parts = Vec::new();
    for (i, name) in names.iter().enumerate() {
        match e.get(i) {
            0 => {}
            1 => parts.push(name.clone()),
            k => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

fn term(e: &LatticeVector, c: &BigInt, names: &[String]) -> (bool, String) {
    let negative = c.is_negative();
    let magnitude = c.abs();
    let body = power_product(e, names);
    let text = if body.is_empty() {
        magnitude.to_string()
    } else if magnitude == BigInt::from(1) {
        body
    } else {
        format!("{magnitude}*{body}")
    };
    (negative, text)
}

/// Render a Laurent polynomial, e.g. `1 - q1*q2*t^2`.
pub fn laurent(p: &LaurentPolynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let (negative, text) = term(e, c, names);
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&text);
    }
    out
}

/// Render a factored rational function, e.g.
/// `(1 + q1^2*t) / ((1 - q1*t)*(1 - q1^3*t))`.
pub fn rational(r: &FactoredRationalFunction, names: &[String]) -> String {
    let numerator = laurent(r.numerator(), names);
    let factors = r.denominator();
    if factors.is_empty() {
        return numerator;
    }
    let mut denominator = String::new();
    for (i, f) in factors.iter().enumerate() {
        if i > 0 {
            denominator.push('*');
        }
        let base = format!("(1 - {})", power_product(&f.exponent, names));
        denominator.push_str(&base);
        if f.multiplicity > 1 {
            denominator.push_str(&format!("^{}", f.multiplicity));
        }
    }
    format!("({numerator}) / ({denominator})")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vec_i;
    use crate::rational::geometric;

    fn mono(e: &[i64], c: i64) -> LaurentPolynomial {
        LaurentPolynomial::monomial(vec_i(e), BigInt::from(c))
    }

    #[test]
    fn monomials_and_signs() {
        let names = qt_names(2);
        assert_eq!(power_product(&vec_i(&[2, -1, 1]), &names), "q1^2*q2^-1*t");
        assert_eq!(power_product(&vec_i(&[0, 0, 0]), &names), "");
        let p = mono(&[0, 0, 0], 1).sub(&mono(&[1, 1, 2], 1)).unwrap();
        assert_eq!(laurent(&p, &names), "1 - q1*q2*t^2");
        let q = mono(&[1, 0, 0], -2).sub(&mono(&[0, 0, 0], 3)).unwrap();
        assert_eq!(laurent(&q, &names), "-3 - 2*q1");
        assert_eq!(laurent(&LaurentPolynomial::zero(3), &names), "0");
    }

    #[test]
    fn rational_with_factors_and_powers() {
        let names = qt_names(1);
        let r = geometric(vec_i(&[1, 1]))
            .unwrap()
            .mul(&geometric(vec_i(&[1, 1])).unwrap())
            .unwrap()
            .mul(&geometric(vec_i(&[0, 1])).unwrap())
            .unwrap();
        assert_eq!(rational(&r, &names), "(1) / ((1 - t)*(1 - q1*t)^2)");
        let plain = FactoredRationalFunction::from(mono(&[2, 0], 1));
        assert_eq!(rational(&plain, &names), "q1^2");
    }
}
