//! Branches: validated good parametrizations, characteristic exponents,
//! implicitization, and intersection numbers by pullback.
//!
//! A branch is given as `(t^n, y(t))` with `y` a polynomial over `F_p`.
//! Validation pins down the hypotheses everything downstream relies on:
//! `n >= 2`, `p` does not divide `n`, `ord(y) > n` (so `i0(f, x) = ord f`),
//! and `gcd(n, supp(y)) = 1` (the parametrization is good, i.e. generically
//! injective).

use std::fmt;

use crate::arith::gcd;
use crate::field::{FieldError, PrimeField};
use crate::poly::{resultant_t, BivarPoly, IntUnivarPoly, Order, PolyError, UnivarPoly};

/// A validated good parametrization `(t^n, y(t))` over `F_p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Parametrization {
    field: PrimeField,
    n: u64,
    y: UnivarPoly,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ValidationError {
    Field(FieldError),
    /// `n < 2`: the curve is smooth, not a singularity.
    SmoothCurve { n: u64 },
    PDividesN { p: u64, n: u64 },
    /// `ord(y) <= n` after reduction mod p.
    OrderNotAboveN { ord: u64, n: u64 },
    /// `gcd(n, supp(y)) > 1`: not a good parametrization.
    NotPrimitive { gcd: u64 },
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationError::Field(e) => write!(f, "{}", e),
            ValidationError::SmoothCurve { n } => {
                write!(f, "branch order n = {} is below 2; the curve is smooth", n)
            }
            ValidationError::PDividesN { p, n } => {
                write!(f, "p = {} divides n = {}", p, n)
            }
            ValidationError::OrderNotAboveN { ord, n } => write!(
                f,
                "ord(y) = {} must exceed n = {}; apply a normalization y <- y - c*x^k \
                 outside the tool to raise the order",
                ord, n
            ),
            ValidationError::NotPrimitive { gcd } => write!(
                f,
                "gcd(n, supp(y)) = {} > 1: the parametrization is not good",
                gcd
            ),
        }
    }
}

impl std::error::Error for ValidationError {}

impl From<FieldError> for ValidationError {
    fn from(e: FieldError) -> Self {
        ValidationError::Field(e)
    }
}

/// Failure of an internal consistency check in [`Parametrization::implicitize`],
/// indicating a bug rather than bad input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ImplicitizeError(pub &'static str);

impl fmt::Display for ImplicitizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "implicitization postcondition failed: {}", self.0)
    }
}

impl std::error::Error for ImplicitizeError {}

impl Parametrization {
    /// Validates raw input: builds `F_p`, reduces `y` mod `p`, then checks
    /// the branch hypotheses.
    pub fn validate(p: u64, n: u64, y: &IntUnivarPoly) -> Result<Self, ValidationError> {
        let field = PrimeField::new(p)?;
        Self::new(field, n, y.reduce(field))
    }

    /// Validates an already-reduced parametrization.
    pub fn new(field: PrimeField, n: u64, y: UnivarPoly) -> Result<Self, ValidationError> {
        assert_eq!(field, y.field(), "y must be reduced in the given field");
        if n < 2 {
            return Err(ValidationError::SmoothCurve { n });
        }
        let p = field.modulus();
        if n.is_multiple_of(p) {
            return Err(ValidationError::PDividesN { p, n });
        }
        if let Order::Finite(o) = y.ord() {
            if o <= n {
                return Err(ValidationError::OrderNotAboveN { ord: o, n });
            }
        }
        let g = y.support().iter().fold(n, |g, &e| gcd(g, e));
        if g != 1 {
            return Err(ValidationError::NotPrimitive { gcd: g });
        }
        Ok(Parametrization { field, n, y })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn prime(&self) -> u64 {
        self.field.modulus()
    }

    /// The order `n = ord f` of the branch.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn y(&self) -> &UnivarPoly {
        &self.y
    }

    /// Support of `y` after reduction mod `p`, ascending.
    pub fn support(&self) -> Vec<u64> {
        self.y.support()
    }

    /// Characteristic exponents by the gcd scan: `e_0 = n`, then repeatedly
    /// `beta_k = min { j in supp(y) : e_{k-1} does not divide j }` and
    /// `e_k = gcd(e_{k-1}, beta_k)` until `e = 1`. Primitivity guarantees
    /// termination.
    pub fn char_exponents(&self) -> CharExponents {
        let supp = self.support();
        let mut beta = vec![self.n];
        let mut eseq = vec![self.n];
        let mut e = self.n;
        while e > 1 {
            let next = supp
                .iter()
                .copied()
                .find(|j| j % e != 0)
                .expect("primitivity guarantees an exponent breaking every gcd > 1");
            beta.push(next);
            e = gcd(e, next);
            eseq.push(e);
        }
        CharExponents { beta, eseq }
    }

    /// Implicit equation `F = Res_t(t^n - x, y(t) - y)`, normalized so the
    /// coefficient of `y^n` is 1. Guarantees `F(t^n, y(t)) = 0`,
    /// `ord F = n` and `deg_y F = n`.
    pub fn implicitize(&self) -> Result<BivarPoly, ImplicitizeError> {
        let fp = self.field;
        let minus_one = fp.modulus() - 1;
        // t^n - x
        let mut a = vec![BivarPoly::zero(fp); (self.n + 1) as usize];
        a[0] = BivarPoly::monomial(fp, 1, 0, minus_one);
        a[self.n as usize] = BivarPoly::one(fp);
        // y(t) - y
        let deg = self.y.degree().expect("y is nonzero for a valid branch");
        let mut b = vec![BivarPoly::zero(fp); (deg + 1) as usize];
        b[0] = BivarPoly::monomial(fp, 0, 1, minus_one);
        for (e, c) in self.y.terms() {
            b[e as usize] = b[e as usize].add(&BivarPoly::constant(fp, c));
        }
        let raw = resultant_t(&a, &b).map_err(|e| match e {
            PolyError::ZeroOperand => ImplicitizeError("resultant operand vanished"),
            PolyError::DegenerateDegree => ImplicitizeError("resultant operand is constant"),
        })?;

        let lead = raw.coeff(0, self.n);
        if lead == 0 {
            return Err(ImplicitizeError("coefficient of y^n is zero"));
        }
        let inv = fp.inv(lead).expect("nonzero leading coefficient");
        let f = raw.scale(inv);

        if f.deg_y() != Some(self.n) {
            return Err(ImplicitizeError("deg_y F != n"));
        }
        if f.ord() != Order::Finite(self.n) {
            return Err(ImplicitizeError("ord F != n"));
        }
        if !f.substitute_param(self.n, &self.y).is_zero() {
            return Err(ImplicitizeError("F does not vanish on the parametrization"));
        }
        Ok(f)
    }

    /// Intersection number `i0(f, h)` computed as `ord_t h(t^n, y(t))`;
    /// `Infinite` when the pullback vanishes identically.
    pub fn intersection_order(&self, h: &BivarPoly) -> Order {
        h.substitute_param(self.n, &self.y).ord()
    }
}

impl fmt::Display for Parametrization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t^{}, {}) over F_{}", self.n, self.y, self.prime())
    }
}

/// Characteristic exponents `beta_0 < beta_1 < ... < beta_g` with the gcd
/// sequence `e_k = gcd(beta_0, ..., beta_k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharExponents {
    beta: Vec<u64>,
    eseq: Vec<u64>,
}

impl CharExponents {
    pub fn beta(&self) -> &[u64] {
        &self.beta
    }

    pub fn eseq(&self) -> &[u64] {
        &self.eseq
    }

    /// The genus `g` (number of characteristic exponents past `beta_0`).
    pub fn genus(&self) -> usize {
        self.beta.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn param(p: u64, n: u64, terms: &[(u64, i128)]) -> Result<Parametrization, ValidationError> {
        Parametrization::validate(p, n, &IntUnivarPoly::from_terms(terms.iter().copied()))
    }

    #[test]
    fn validation_accepts_good_input() {
        let b = param(5, 4, &[(6, 1), (7, 1)]).unwrap();
        assert_eq!(b.n(), 4);
        assert_eq!(b.support(), vec![6, 7]);
    }

    #[test]
    fn validation_rejects_bad_input() {
        assert_eq!(
            param(2, 4, &[(6, 1), (7, 1)]).unwrap_err(),
            ValidationError::PDividesN { p: 2, n: 4 }
        );
        assert_eq!(
            param(5, 4, &[(6, 1), (10, 1)]).unwrap_err(),
            ValidationError::NotPrimitive { gcd: 2 }
        );
        assert_eq!(
            param(5, 1, &[(6, 1)]).unwrap_err(),
            ValidationError::SmoothCurve { n: 1 }
        );
        assert_eq!(
            param(5, 4, &[(3, 1), (7, 1)]).unwrap_err(),
            ValidationError::OrderNotAboveN { ord: 3, n: 4 }
        );
        assert!(matches!(
            param(6, 5, &[(6, 1)]).unwrap_err(),
            ValidationError::Field(FieldError::NotPrime(6))
        ));
    }

    #[test]
    fn reduction_happens_before_validation() {
        // 5*t^7 vanishes mod 5, leaving supp = {6} with gcd(4, 6) = 2.
        assert_eq!(
            param(5, 4, &[(6, 1), (7, 5)]).unwrap_err(),
            ValidationError::NotPrimitive { gcd: 2 }
        );
    }

    #[test]
    fn char_exponent_scan() {
        let b = param(5, 4, &[(6, 1), (7, 1)]).unwrap();
        let ce = b.char_exponents();
        assert_eq!(ce.beta(), &[4, 6, 7]);
        assert_eq!(ce.eseq(), &[4, 2, 1]);
        assert_eq!(ce.genus(), 2);

        let b = param(5, 2, &[(3, 1)]).unwrap();
        let ce = b.char_exponents();
        assert_eq!(ce.beta(), &[2, 3]);
        assert_eq!(ce.eseq(), &[2, 1]);

        let b = param(5, 6, &[(8, 1), (9, 1)]).unwrap();
        let ce = b.char_exponents();
        assert_eq!(ce.beta(), &[6, 8, 9]);
        assert_eq!(ce.eseq(), &[6, 2, 1]);
    }

    #[test]
    fn implicitize_cusp() {
        let b = param(5, 2, &[(3, 1)]).unwrap();
        let f = b.implicitize().unwrap();
        // y^2 - x^3, monic in y
        let fp = b.field();
        assert_eq!(
            f,
            BivarPoly::from_terms(fp, [((0, 2), 1), ((3, 0), fp.modulus() - 1)])
        );
    }

    #[test]
    fn implicitize_monomial_curve() {
        let b = param(13, 3, &[(4, 1)]).unwrap();
        let f = b.implicitize().unwrap();
        let fp = b.field();
        assert_eq!(
            f,
            BivarPoly::from_terms(fp, [((0, 3), 1), ((4, 0), fp.modulus() - 1)])
        );
    }

    #[test]
    fn implicitize_postconditions() {
        for p in [5u64, 13] {
            let b = param(p, 4, &[(6, 1), (7, 1)]).unwrap();
            let f = b.implicitize().unwrap();
            assert_eq!(f.deg_y(), Some(4));
            assert_eq!(f.ord(), Order::Finite(4));
            assert_eq!(f.coeff(0, 4), 1);
            assert!(f.substitute_param(4, b.y()).is_zero());
        }
    }

    #[test]
    fn intersection_orders() {
        let b = param(13, 4, &[(6, 1), (7, 1)]).unwrap();
        let fp = b.field();
        assert_eq!(
            b.intersection_order(&BivarPoly::monomial(fp, 1, 0, 1)),
            Order::Finite(4)
        );
        assert_eq!(
            b.intersection_order(&BivarPoly::monomial(fp, 0, 1, 1)),
            Order::Finite(6)
        );
        // y^2 - x^3 realizes the third generator 13
        let h = BivarPoly::from_terms(fp, [((0, 2), 1), ((3, 0), 12)]);
        assert_eq!(b.intersection_order(&h), Order::Finite(13));
        // the implicit equation itself pulls back to zero
        let f = b.implicitize().unwrap();
        assert_eq!(b.intersection_order(&f), Order::Infinite);
    }
}
