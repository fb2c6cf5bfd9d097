use std::fmt::{self, Display, Formatter, Write};

use crate::algebra::Symbol;
use crate::lincomb::LinComb;
use crate::tensor::{Pair, Triple};

impl Display for Symbol {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::L(x) => write!(f, "L({x})"),
            Symbol::I(x) => write!(f, "I({x})"),
            Symbol::CL => f.write_str("C_L"),
            Symbol::CI => f.write_str("C_I"),
            Symbol::CLI => f.write_str("C_LI"),
        }
    }
}

impl serde::Serialize for Symbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Keys that print as a product of basis symbols joined by `@`.
pub trait FormatKey {
    fn fmt_key(&self, f: &mut dyn Write) -> fmt::Result;
}

impl FormatKey for Symbol {
    fn fmt_key(&self, f: &mut dyn Write) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FormatKey for Pair {
    fn fmt_key(&self, f: &mut dyn Write) -> fmt::Result {
        write!(f, "{}@{}", self.0, self.1)
    }
}

impl FormatKey for Triple {
    fn fmt_key(&self, f: &mut dyn Write) -> fmt::Result {
        write!(f, "{}@{}@{}", self.0, self.1, self.2)
    }
}

/// Canonical text: terms in key order, unit coefficients omitted, e.g.
/// `L(0)@I(1) - I(1)@L(0)` or `3/2*L(-1) + C_L`; the zero value prints `0`.
impl<K: Ord + Clone + FormatKey> Display for LinComb<K> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            k.fmt_key(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;
    use crate::arith::Rational;
    use crate::tensor::wedge;

    #[test]
    fn examples() {
        let w = wedge(&Element::basis(Symbol::l(0)), &Element::basis(Symbol::i(1)));
        assert_eq!(w.to_string(), "L(0)@I(1) - I(1)@L(0)");
        assert_eq!(Element::zero().to_string(), "0");
        assert_eq!(
            Element::term(Symbol::CI, Rational::from_int(-2)).to_string(),
            "-2*C_I"
        );
        let e: Element = [
            (Symbol::l(-1), Rational::new(3, 2).unwrap()),
            (Symbol::CL, Rational::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(e.to_string(), "3/2*L(-1) + C_L");
        assert_eq!(
            Symbol::i(Rational::new(-1, 2).unwrap()).to_string(),
            "I(-1/2)"
        );
    }
}
