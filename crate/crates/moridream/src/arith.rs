//! Small exact-integer helpers shared across modules.

use num::bigint::Sign;
use num::BigInt;

/// Floor square root paired with an exactness check: `Some(s)` iff `n = s^2`.
pub(crate) fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

pub(crate) fn is_perfect_square(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_detection() {
        assert_eq!(exact_sqrt(&BigInt::from(900)), Some(BigInt::from(30)));
        assert_eq!(exact_sqrt(&BigInt::from(899)), None);
        assert_eq!(exact_sqrt(&BigInt::from(0)), Some(BigInt::from(0)));
        assert_eq!(exact_sqrt(&BigInt::from(-4)), None);
    }
}
