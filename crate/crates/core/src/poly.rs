//! Sparse exact polynomial arithmetic over `F_p`.
//!
//! Two coefficient-map types cover everything the pipeline needs:
//! [`UnivarPoly`] in `t` (parametrizations and pullbacks) and [`BivarPoly`]
//! in `(x, y)` (implicit equations, partials, test curves). Both keep a
//! canonical sparse form: no stored zero coefficients, so equality is map
//! equality and the order of a polynomial is the minimum stored exponent.
//!
//! [`IntUnivarPoly`] / [`IntBivarPoly`] are the integer-coefficient
//! counterparts used for parsed input and prime-sweep templates; they reduce
//! into a concrete `F_p` per prime.
//!
//! The module also provides the Sylvester resultant eliminating `t` from two
//! polynomials with `BivarPoly` coefficients, computed by fraction-free
//! (Bareiss) elimination so every intermediate stays a polynomial.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::{FieldElement, PrimeField};

/// Order of a polynomial; `Infinite` is the dedicated sentinel for the zero
/// polynomial (never a magic integer).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(v) => Some(v),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(v) => write!(f, "{}", v),
            Order::Infinite => write!(f, "infinity"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolyError {
    /// Resultant operand is identically zero.
    ZeroOperand,
    /// Resultant operand is constant in `t`.
    DegenerateDegree,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroOperand => write!(f, "resultant operand is zero"),
            PolyError::DegenerateDegree => {
                write!(f, "resultant operand is constant in the eliminated variable")
            }
        }
    }
}

impl std::error::Error for PolyError {}

// ---------------------------------------------------------------------------
// Univariate polynomials over F_p
// ---------------------------------------------------------------------------

/// Sparse polynomial in one variable `t` over `F_p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnivarPoly {
    field: PrimeField,
    coeffs: BTreeMap<u64, FieldElement>,
}

impl UnivarPoly {
    pub fn zero(field: PrimeField) -> Self {
        UnivarPoly {
            field,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(field: PrimeField, exp: u64, coeff: u64) -> Self {
        let mut p = Self::zero(field);
        p.insert_add(exp, field.reduce_u64(coeff));
        p
    }

    /// Builds from (exponent, coefficient) pairs; coefficients are reduced
    /// and repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (u64, u64)>>(field: PrimeField, terms: I) -> Self {
        let mut p = Self::zero(field);
        for (e, c) in terms {
            p.insert_add(e, field.reduce_u64(c));
        }
        p
    }

    fn insert_add(&mut self, exp: u64, coeff: FieldElement) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry = self.field.add(*entry, coeff);
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn ord(&self) -> Order {
        match self.coeffs.keys().next() {
            Some(&e) => Order::Finite(e),
            None => Order::Infinite,
        }
    }

    pub fn degree(&self) -> Option<u64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u64) -> FieldElement {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<u64> {
        self.coeffs.keys().copied().collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, FieldElement)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.field, other.field,
            "mixed moduli in polynomial arithmetic"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let mut out = self.clone();
        for (&e, &c) in &other.coeffs {
            out.insert_add(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.field);
        for (&e, &c) in &self.coeffs {
            out.coeffs.insert(e, self.field.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let mut out = Self::zero(self.field);
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                out.insert_add(e1 + e2, self.field.mul(c1, c2));
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = self.field.reduce_u64(c);
        let mut out = Self::zero(self.field);
        for (&e, &v) in &self.coeffs {
            out.insert_add(e, self.field.mul(v, c));
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::monomial(self.field, 0, 1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Substitutes `t -> t^n`.
    pub fn inflate(&self, n: u64) -> Self {
        let mut out = Self::zero(self.field);
        for (&e, &c) in &self.coeffs {
            out.coeffs.insert(e * n, c);
        }
        out
    }
}

impl fmt::Display for UnivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, e) {
                (_, 0) => write!(f, "{}", c)?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "t^{}", e)?,
                (_, 1) => write!(f, "{}*t", c)?,
                (_, _) => write!(f, "{}*t^{}", c, e)?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Bivariate polynomials over F_p
// ---------------------------------------------------------------------------

/// Sparse polynomial in `(x, y)` over `F_p`. Keys are `(x-exponent,
/// y-exponent)` pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivarPoly {
    field: PrimeField,
    coeffs: BTreeMap<(u64, u64), FieldElement>,
}

impl BivarPoly {
    pub fn zero(field: PrimeField) -> Self {
        BivarPoly {
            field,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField, c: u64) -> Self {
        Self::monomial(field, 0, 0, c)
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn monomial(field: PrimeField, ex: u64, ey: u64, coeff: u64) -> Self {
        let mut p = Self::zero(field);
        p.insert_add(ex, ey, field.reduce_u64(coeff));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u64, u64), u64)>>(
        field: PrimeField,
        terms: I,
    ) -> Self {
        let mut p = Self::zero(field);
        for ((ex, ey), c) in terms {
            p.insert_add(ex, ey, field.reduce_u64(c));
        }
        p
    }

    fn insert_add(&mut self, ex: u64, ey: u64, coeff: FieldElement) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry((ex, ey)).or_insert(0);
        *entry = self.field.add(*entry, coeff);
        if *entry == 0 {
            self.coeffs.remove(&(ex, ey));
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Minimal total degree of a monomial with nonzero coefficient.
    pub fn ord(&self) -> Order {
        self.coeffs
            .keys()
            .map(|&(i, j)| i + j)
            .min()
            .map_or(Order::Infinite, Order::Finite)
    }

    pub fn deg_y(&self) -> Option<u64> {
        self.coeffs.keys().map(|&(_, j)| j).max()
    }

    pub fn deg_x(&self) -> Option<u64> {
        self.coeffs.keys().map(|&(i, _)| i).max()
    }

    pub fn coeff(&self, ex: u64, ey: u64) -> FieldElement {
        self.coeffs.get(&(ex, ey)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u64, u64), FieldElement)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.field, other.field,
            "mixed moduli in polynomial arithmetic"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let mut out = self.clone();
        for (&(ex, ey), &c) in &other.coeffs {
            out.insert_add(ex, ey, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.field);
        for (&k, &c) in &self.coeffs {
            out.coeffs.insert(k, self.field.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let mut out = Self::zero(self.field);
        for (&(a, b), &c1) in &self.coeffs {
            for (&(i, j), &c2) in &other.coeffs {
                out.insert_add(a + i, b + j, self.field.mul(c1, c2));
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = self.field.reduce_u64(c);
        let mut out = Self::zero(self.field);
        for (&(ex, ey), &v) in &self.coeffs {
            out.insert_add(ex, ey, self.field.mul(v, c));
        }
        out
    }

    pub fn mul_monomial(&self, ex: u64, ey: u64, c: FieldElement) -> Self {
        let mut out = Self::zero(self.field);
        for (&(i, j), &v) in &self.coeffs {
            out.insert_add(i + ex, j + ey, self.field.mul(v, c));
        }
        out
    }

    pub fn swap_xy(&self) -> Self {
        let mut out = Self::zero(self.field);
        for (&(i, j), &c) in &self.coeffs {
            out.coeffs.insert((j, i), c);
        }
        out
    }

    /// Formal partial derivative in `x`; monomials with `x`-exponent
    /// divisible by `p` vanish.
    pub fn partial_x(&self) -> Self {
        let p = self.field.modulus();
        let mut out = Self::zero(self.field);
        for (&(i, j), &c) in &self.coeffs {
            if i == 0 {
                continue;
            }
            let m = self.field.reduce_u64(i % p);
            out.insert_add(i - 1, j, self.field.mul(c, m));
        }
        out
    }

    /// Formal partial derivative in `y`.
    pub fn partial_y(&self) -> Self {
        let p = self.field.modulus();
        let mut out = Self::zero(self.field);
        for (&(i, j), &c) in &self.coeffs {
            if j == 0 {
                continue;
            }
            let m = self.field.reduce_u64(j % p);
            out.insert_add(i, j - 1, self.field.mul(c, m));
        }
        out
    }

    /// Evaluates `h(t^n, y(t))` exactly. `y` is a polynomial, so the result
    /// is a polynomial; accumulation is Horner-style in `y`.
    pub fn substitute_param(&self, n: u64, y: &UnivarPoly) -> UnivarPoly {
        assert_eq!(self.field, y.field(), "mixed moduli in substitution");
        // Collect A_j(t) = sum_i c_{ij} t^{n*i} for each y-exponent j.
        let mut slices: BTreeMap<u64, UnivarPoly> = BTreeMap::new();
        for (&(i, j), &c) in &self.coeffs {
            slices
                .entry(j)
                .or_insert_with(|| UnivarPoly::zero(self.field))
                .insert_add(i * n, c);
        }
        let mut acc = UnivarPoly::zero(self.field);
        let mut prev_j: Option<u64> = None;
        for (&j, a) in slices.iter().rev() {
            if let Some(pj) = prev_j {
                acc = acc.mul(&y.pow(pj - j));
            }
            acc = acc.add(a);
            prev_j = Some(j);
        }
        if let Some(j) = prev_j {
            acc = acc.mul(&y.pow(j));
        }
        acc
    }

    /// Drops every monomial of total degree >= `bound`.
    pub fn truncate_total_degree(&self, bound: u64) -> Self {
        let mut out = Self::zero(self.field);
        for (&(i, j), &c) in &self.coeffs {
            if i + j < bound {
                out.coeffs.insert((i, j), c);
            }
        }
        out
    }

    fn leading_term(&self) -> Option<((u64, u64), FieldElement)> {
        self.coeffs.last_key_value().map(|(&k, &c)| (k, c))
    }

    /// Exact division: returns `q` with `self = q * d`, or `None` when `d`
    /// does not divide `self`. Leading terms are taken in lexicographic
    /// order on `(x-exponent, y-exponent)`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.assert_same_field(d);
        let ((di, dj), dc) = d.leading_term().expect("division by zero polynomial");
        let dinv = self.field.inv(dc).expect("nonzero leading coefficient");
        let mut r = self.clone();
        let mut q = Self::zero(self.field);
        while let Some(((ri, rj), rc)) = r.leading_term() {
            if ri < di || rj < dj {
                return None;
            }
            let (qi, qj) = (ri - di, rj - dj);
            let qc = self.field.mul(rc, dinv);
            q.insert_add(qi, qj, qc);
            r = r.sub(&d.mul_monomial(qi, qj, qc));
        }
        Some(q)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), &c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if c != 1 || (i == 0 && j == 0) {
                parts.push(format!("{}", c));
            }
            match i {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{}", i)),
            }
            match j {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{}", j)),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Sylvester resultant in t over BivarPoly coefficients
// ---------------------------------------------------------------------------

fn effective_degree(coeffs: &[BivarPoly]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// Sylvester resultant eliminating `t` from two polynomials in `t` with
/// `BivarPoly` coefficients (`a[k]` is the coefficient of `t^k`).
///
/// Exact by construction: the determinant is computed by fraction-free
/// Bareiss elimination, where every division is an exact polynomial
/// division.
pub fn resultant_t(a: &[BivarPoly], b: &[BivarPoly]) -> Result<BivarPoly, PolyError> {
    let field = a
        .first()
        .or_else(|| b.first())
        .ok_or(PolyError::ZeroOperand)?
        .field();
    let da = effective_degree(a).ok_or(PolyError::ZeroOperand)?;
    let db = effective_degree(b).ok_or(PolyError::ZeroOperand)?;
    if da == 0 || db == 0 {
        return Err(PolyError::DegenerateDegree);
    }
    let size = da + db;
    let zero = BivarPoly::zero(field);
    let mut m = vec![vec![zero.clone(); size]; size];
    for r in 0..db {
        for k in 0..=da {
            m[r][r + k] = a[da - k].clone();
        }
    }
    for r in 0..da {
        for k in 0..=db {
            m[db + r][r + k] = b[db - k].clone();
        }
    }
    Ok(bareiss_determinant(m, field))
}

fn bareiss_determinant(mut m: Vec<Vec<BivarPoly>>, field: PrimeField) -> BivarPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = BivarPoly::one(field);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BivarPoly::zero(field),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("fraction-free elimination step divides exactly");
            }
            m[i][k] = BivarPoly::zero(field);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

// ---------------------------------------------------------------------------
// Integer-coefficient polynomials (parsed input, sweep templates)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IntPolyError {
    /// Coefficient magnitude exceeded the i128 range during expansion.
    Overflow,
    /// Expansion produced an unreasonable number of terms.
    TooManyTerms,
}

impl fmt::Display for IntPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntPolyError::Overflow => write!(f, "coefficient overflow while expanding"),
            IntPolyError::TooManyTerms => write!(f, "expansion produced too many terms"),
        }
    }
}

impl std::error::Error for IntPolyError {}

const MAX_TERMS: usize = 1 << 16;

/// Sparse integer-coefficient polynomial in `t`; the template form of a
/// parametrization before reduction modulo a concrete prime.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntUnivarPoly {
    coeffs: BTreeMap<u64, i128>,
}

impl IntUnivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (u64, i128)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.insert_add(e, c);
        }
        p
    }

    fn insert_add(&mut self, exp: u64, coeff: i128) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> Vec<u64> {
        self.coeffs.keys().copied().collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, i128)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// Reduces every coefficient into `F_p`; terms divisible by `p` vanish.
    pub fn reduce(&self, field: PrimeField) -> UnivarPoly {
        let mut out = UnivarPoly::zero(field);
        for (&e, &c) in &self.coeffs {
            out.insert_add(e, field.reduce_i128(c));
        }
        out
    }
}

impl fmt::Display for IntUnivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in &self.coeffs {
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (mag, e) {
                (_, 0) => write!(f, "{}", mag)?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "t^{}", e)?,
                (_, 1) => write!(f, "{}*t", mag)?,
                (_, _) => write!(f, "{}*t^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

/// Sparse integer-coefficient polynomial in `(x, y)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntBivarPoly {
    coeffs: BTreeMap<(u64, u64), i128>,
}

impl IntBivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i128) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn monomial(ex: u64, ey: u64, c: i128) -> Self {
        Self::from_terms([((ex, ey), c)])
    }

    pub fn from_terms<I: IntoIterator<Item = ((u64, u64), i128)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((ex, ey), c) in terms {
            p.insert_add(ex, ey, c);
        }
        p
    }

    fn insert_add(&mut self, ex: u64, ey: u64, coeff: i128) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry((ex, ey)).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&(ex, ey));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u64, u64), i128)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(ex, ey), &c) in &other.coeffs {
            out.insert_add(ex, ey, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (&k, &c) in &self.coeffs {
            out.coeffs.insert(k, -c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, IntPolyError> {
        let mut out = Self::zero();
        for (&(a, b), &c1) in &self.coeffs {
            for (&(i, j), &c2) in &other.coeffs {
                let c = c1.checked_mul(c2).ok_or(IntPolyError::Overflow)?;
                let entry = out.coeffs.entry((a + i, b + j)).or_insert(0);
                *entry = entry.checked_add(c).ok_or(IntPolyError::Overflow)?;
                if *entry == 0 {
                    out.coeffs.remove(&(a + i, b + j));
                }
            }
            if out.coeffs.len() > MAX_TERMS {
                return Err(IntPolyError::TooManyTerms);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u64) -> Result<Self, IntPolyError> {
        let mut acc = Self::constant(1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Reduces every coefficient into `F_p`; terms divisible by `p` vanish.
    pub fn reduce(&self, field: PrimeField) -> BivarPoly {
        let mut out = BivarPoly::zero(field);
        for (&(ex, ey), &c) in &self.coeffs {
            out.insert_add(ex, ey, field.reduce_i128(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn canonical_form_cancellation() {
        // (t^6 + t^7) + 4*t^6 == t^7 over F_5
        let fp = f(5);
        let a = UnivarPoly::from_terms(fp, [(6, 1), (7, 1)]);
        let b = UnivarPoly::from_terms(fp, [(6, 4)]);
        let s = a.add(&b);
        assert_eq!(s, UnivarPoly::from_terms(fp, [(7, 1)]));
        assert_eq!(s.ord(), Order::Finite(7));
    }

    #[test]
    fn bivar_mul_and_normalization() {
        let fp = f(7);
        let y = BivarPoly::monomial(fp, 0, 1, 1);
        assert_eq!(y.mul(&y), BivarPoly::monomial(fp, 0, 2, 1));

        // (y^2 - x^3) * 1 keeps -1 normalized to 12 over F_13
        let fp = f(13);
        let g = BivarPoly::from_terms(fp, [((0, 2), 1), ((3, 0), 12)]);
        assert_eq!(g.mul(&BivarPoly::one(fp)), g);
        assert_eq!(g.coeff(3, 0), 12);
    }

    #[test]
    fn zero_poly_order_is_infinite() {
        let fp = f(5);
        assert_eq!(UnivarPoly::zero(fp).ord(), Order::Infinite);
        assert_eq!(BivarPoly::zero(fp).ord(), Order::Infinite);
        assert!(Order::Finite(u64::MAX) < Order::Infinite);
    }

    #[test]
    fn partials_match_hand_expansion() {
        // d/dx (x^5 + y^4) == 0 over F_5
        let fp = f(5);
        let g = BivarPoly::from_terms(fp, [((5, 0), 1), ((0, 4), 1)]);
        assert!(g.partial_x().is_zero());

        // d/dy (y^2 + x^3) == 2y over F_7
        let fp = f(7);
        let g = BivarPoly::from_terms(fp, [((0, 2), 1), ((3, 0), 1)]);
        assert_eq!(g.partial_y(), BivarPoly::monomial(fp, 0, 1, 2));

        // d/dy ((y^2+x^3)^2 + x^5*y) == 4y(y^2+x^3) + x^5 over F_13
        let fp = f(13);
        let inner = BivarPoly::from_terms(fp, [((0, 2), 1), ((3, 0), 1)]);
        let g = inner.mul(&inner).add(&BivarPoly::monomial(fp, 5, 1, 1));
        let expect = BivarPoly::monomial(fp, 0, 1, 4)
            .mul(&inner)
            .add(&BivarPoly::monomial(fp, 5, 0, 1));
        assert_eq!(g.partial_y(), expect);
    }

    #[test]
    fn substitution_examples() {
        let fp = f(13);
        let y = UnivarPoly::from_terms(fp, [(6, 1), (7, 1)]);

        let h = BivarPoly::monomial(fp, 1, 0, 1); // x
        assert_eq!(h.substitute_param(4, &y), UnivarPoly::monomial(fp, 4, 1));

        let h = BivarPoly::monomial(fp, 0, 1, 1); // y
        assert_eq!(h.substitute_param(4, &y), y);

        // y^2 - x^3 pulls back to 2t^13 + t^14
        let h = BivarPoly::from_terms(fp, [((0, 2), 1), ((3, 0), 12)]);
        assert_eq!(
            h.substitute_param(4, &y),
            UnivarPoly::from_terms(fp, [(13, 2), (14, 1)])
        );
    }

    fn t_linear(fp: PrimeField, ex: u64, ey: u64) -> Vec<BivarPoly> {
        // t - x or t - y as a degree-1 polynomial in t
        vec![
            BivarPoly::monomial(fp, ex, ey, fp.modulus() - 1),
            BivarPoly::one(fp),
        ]
    }

    #[test]
    fn resultant_linear_case() {
        // Res_t(t - x, t - y) = +/- (y - x)
        let fp = f(13);
        let r = resultant_t(&t_linear(fp, 1, 0), &t_linear(fp, 0, 1)).unwrap();
        let y_minus_x = BivarPoly::from_terms(fp, [((0, 1), 1), ((1, 0), 12)]);
        assert!(r == y_minus_x || r == y_minus_x.neg());
    }

    #[test]
    fn resultant_cusp() {
        // Res_t(t^2 - x, t^3 - y) = +/- (y^2 - x^3)
        let fp = f(13);
        let a = vec![
            BivarPoly::monomial(fp, 1, 0, 12),
            BivarPoly::zero(fp),
            BivarPoly::one(fp),
        ];
        let b = vec![
            BivarPoly::monomial(fp, 0, 1, 12),
            BivarPoly::zero(fp),
            BivarPoly::zero(fp),
            BivarPoly::one(fp),
        ];
        let r = resultant_t(&a, &b).unwrap();
        let cusp = BivarPoly::from_terms(fp, [((0, 2), 1), ((3, 0), 12)]);
        assert!(r == cusp || r == cusp.neg(), "got {}", r);
    }

    #[test]
    fn resultant_detects_common_factor() {
        // Res_t(t - x, t - x) = 0
        let fp = f(5);
        let r = resultant_t(&t_linear(fp, 1, 0), &t_linear(fp, 1, 0)).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn resultant_rejects_degenerate_input() {
        let fp = f(5);
        let consts = vec![BivarPoly::one(fp)];
        assert_eq!(
            resultant_t(&consts, &t_linear(fp, 1, 0)).unwrap_err(),
            PolyError::DegenerateDegree
        );
        assert_eq!(
            resultant_t(&[], &t_linear(fp, 1, 0)).unwrap_err(),
            PolyError::ZeroOperand
        );
    }

    #[test]
    fn div_exact_roundtrip_and_failure() {
        let fp = f(7);
        let a = BivarPoly::from_terms(fp, [((0, 2), 1), ((3, 0), 6), ((1, 1), 3)]);
        let b = BivarPoly::from_terms(fp, [((1, 0), 2), ((0, 1), 5)]);
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        let off = prod.add(&BivarPoly::one(fp));
        assert!(off.div_exact(&b).is_none());
    }

    #[test]
    fn int_poly_reduce_drops_multiples_of_p() {
        let fp = f(5);
        let y = IntUnivarPoly::from_terms([(6, 1), (7, 5)]);
        assert_eq!(y.reduce(fp), UnivarPoly::from_terms(fp, [(6, 1)]));
        let g = IntBivarPoly::from_terms([((5, 0), -1), ((0, 4), 6)]);
        let red = g.reduce(fp);
        assert_eq!(red.coeff(5, 0), 4);
        assert_eq!(red.coeff(0, 4), 1);
    }

    #[test]
    fn int_poly_pow_expansion() {
        // (x + y)^2 = x^2 + 2xy + y^2
        let s = IntBivarPoly::from_terms([((1, 0), 1), ((0, 1), 1)]);
        let sq = s.pow(2).unwrap();
        assert_eq!(
            sq,
            IntBivarPoly::from_terms([((2, 0), 1), ((1, 1), 2), ((0, 2), 1)])
        );
    }

    fn arb_univar(fp: PrimeField) -> impl Strategy<Value = UnivarPoly> {
        prop::collection::vec((0u64..12, 0u64..fp.modulus()), 0..6)
            .prop_map(move |terms| UnivarPoly::from_terms(fp, terms))
    }

    fn arb_bivar(fp: PrimeField) -> impl Strategy<Value = BivarPoly> {
        prop::collection::vec(((0u64..6, 0u64..6), 0u64..fp.modulus()), 0..6)
            .prop_map(move |terms| BivarPoly::from_terms(fp, terms))
    }

    /// Product of polynomials in t with BivarPoly coefficients.
    fn t_mul(a: &[BivarPoly], b: &[BivarPoly], fp: PrimeField) -> Vec<BivarPoly> {
        let mut out = vec![BivarPoly::zero(fp); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            for (j, cb) in b.iter().enumerate() {
                out[i + j] = out[i + j].add(&ca.mul(cb));
            }
        }
        out
    }

    proptest! {
        /// The resultant vanishes exactly when the operands share a root:
        /// checked on products of linear factors t - r with known roots.
        #[test]
        fn resultant_vanishes_iff_common_root(roots_a in prop::collection::vec(0u64..7, 1..4),
                                              roots_b in prop::collection::vec(0u64..7, 1..4)) {
            let fp = f(7);
            let lin = |r: u64| vec![BivarPoly::constant(fp, fp.neg(r)), BivarPoly::one(fp)];
            let one = vec![BivarPoly::one(fp)];
            let a = roots_a.iter().fold(one.clone(), |acc, &r| t_mul(&acc, &lin(r), fp));
            let b = roots_b.iter().fold(one, |acc, &r| t_mul(&acc, &lin(r), fp));
            let res = resultant_t(&a, &b).unwrap();
            let share = roots_a.iter().any(|r| roots_b.contains(r));
            prop_assert_eq!(res.is_zero(), share);
        }

        #[test]
        fn order_is_additive_under_product(a in arb_univar(f(13)), b in arb_univar(f(13))) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let (oa, ob) = (a.ord().finite().unwrap(), b.ord().finite().unwrap());
            prop_assert_eq!(a.mul(&b).ord(), Order::Finite(oa + ob));
        }

        #[test]
        fn bivar_order_is_additive(a in arb_bivar(f(7)), b in arb_bivar(f(7))) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let (oa, ob) = (a.ord().finite().unwrap(), b.ord().finite().unwrap());
            prop_assert_eq!(a.mul(&b).ord(), Order::Finite(oa + ob));
        }

        #[test]
        fn substitution_is_multiplicative(h1 in arb_bivar(f(13)), h2 in arb_bivar(f(13)),
                                          y in arb_univar(f(13))) {
            let n = 4u64;
            let lhs = h1.mul(&h2).substitute_param(n, &y);
            let rhs = h1.substitute_param(n, &y).mul(&h2.substitute_param(n, &y));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ring_laws(a in arb_bivar(f(5)), b in arb_bivar(f(5)), c in arb_bivar(f(5))) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), BivarPoly::zero(f(5)));
        }
    }
}
