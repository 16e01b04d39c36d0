//! Small finite fields in polynomial-basis representation.
//!
//! Supported: `F_{p^d}` for `p ∈ {2,3,5,7}` and `d ≤ 4`. Each field is
//! `F_p[x]/(m(x))` where `m` is the lexicographically smallest monic
//! irreducible of degree `d` (coefficients read from the leading one down, so
//! the choice is canonical and reproducible; for `F_4` and `F_16` this gives
//! `x²+x+1` and `x⁴+x+1`). Irreducibility is verified at construction.

use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

const SUPPORTED_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// A finite field context. Elements carry an `Arc` to their field.
#[derive(Debug, PartialEq, Eq)]
pub struct FieldCtx {
    p: u64,
    degree: usize,
    /// Monic modulus, little-endian, length `degree + 1`.
    modulus: Vec<u64>,
    q: u64,
}

/// Shared handle to a field.
pub type Field = Arc<FieldCtx>;

impl FieldCtx {
    pub fn new(p: u64, degree: usize) -> Result<Field> {
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::BadField(format!(
                "characteristic {p} (supported: 2, 3, 5, 7)"
            )));
        }
        if !(1..=4).contains(&degree) {
            return Err(Error::BadField(format!(
                "extension degree {degree} (supported: 1..=4)"
            )));
        }
        let modulus = least_irreducible(p, degree);
        let q = p.pow(degree as u32);
        Ok(Arc::new(FieldCtx {
            p,
            degree,
            modulus,
            q,
        }))
    }

    /// Parse `F4`, `F16`, `F9`, ... into a field handle.
    pub fn parse(name: &str) -> Result<Field> {
        let digits = name.trim().trim_start_matches(['F', 'f']);
        let q: u64 = digits
            .parse()
            .map_err(|_| Error::BadField(name.to_string()))?;
        for p in SUPPORTED_PRIMES {
            for d in 1..=4usize {
                if p.pow(d as u32) == q {
                    return FieldCtx::new(p, d);
                }
            }
        }
        Err(Error::BadField(format!(
            "{name} is not p^d with p in {{2,3,5,7}} and d <= 4"
        )))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn name(&self) -> String {
        format!("F{}", self.q)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
}

/// First monic irreducible of degree `d` over `F_p`, ordering candidates by
/// the coefficient tuple `(c_{d-1}, …, c_0)` read as a base-`p` counter.
fn least_irreducible(p: u64, d: usize) -> Vec<u64> {
    let total = p.pow(d as u32);
    for counter in 0..total {
        let mut coeffs = vec![0u64; d + 1];
        coeffs[d] = 1;
        // low counter digits land in low-degree coefficients last, so the
        // counter order is exactly lex order on (c_{d-1}, ..., c_0)
        let mut c = counter;
        for i in 0..d {
            coeffs[i] = c % p;
            c /= p;
        }
        if is_irreducible(p, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducibles of every degree exist over F_p");
}

fn poly_eval(p: u64, coeffs: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = (acc * x + c) % p;
    }
    acc
}

fn poly_rem(p: u64, num: &[u64], den: &[u64]) -> Vec<u64> {
    let mut rem: Vec<u64> = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1, "divisor must be monic");
    while rem.len() > dd {
        let lead = *rem.last().unwrap() % p;
        let shift = rem.len() - 1 - dd;
        if lead != 0 {
            for i in 0..=dd {
                let idx = shift + i;
                rem[idx] = (rem[idx] + p * p - (lead * den[i]) % p) % p;
            }
        }
        rem.pop();
    }
    rem
}

fn is_irreducible(p: u64, coeffs: &[u64]) -> bool {
    let d = coeffs.len() - 1;
    if d == 1 {
        return true;
    }
    // No linear factor
    for x in 0..p {
        if poly_eval(p, coeffs, x) == 0 {
            return false;
        }
    }
    if d <= 3 {
        return true;
    }
    // Degree 4: additionally no irreducible quadratic factor
    for b in 0..p {
        for c in 0..p {
            let quad = vec![c, b, 1];
            if (0..p).any(|x| poly_eval(p, &quad, x) == 0) {
                continue;
            }
            let rem = poly_rem(p, coeffs, &quad);
            if rem.iter().all(|&r| r == 0) {
                return false;
            }
        }
    }
    true
}

/// An element of a finite field, in the polynomial basis.
#[derive(Clone)]
pub struct Fq {
    field: Field,
    /// Little-endian coefficients, length = field degree.
    c: Vec<u64>,
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.assert_same_field(other);
        self.c == other.c
    }
}

impl Eq for Fq {}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field.name(), self)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (i, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl Fq {
    fn assert_same_field(&self, other: &Fq) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field,
            "mixed-field arithmetic: {} vs {}",
            self.field.name(),
            other.field.name()
        );
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Fq) -> Fq {
        self.assert_same_field(other);
        let p = self.field.p;
        let c = self
            .c
            .iter()
            .zip(&other.c)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Fq {
            field: self.field.clone(),
            c,
        }
    }

    pub fn neg(&self) -> Fq {
        let p = self.field.p;
        let c = self.c.iter().map(|&a| (p - a % p) % p).collect();
        Fq {
            field: self.field.clone(),
            c,
        }
    }

    pub fn sub(&self, other: &Fq) -> Fq {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Fq) -> Fq {
        self.assert_same_field(other);
        let p = self.field.p;
        let d = self.field.degree;
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        let mut rem = poly_rem(p, &prod, &self.field.modulus);
        rem.resize(d, 0);
        Fq {
            field: self.field.clone(),
            c: rem,
        }
    }

    pub fn pow(&self, mut e: u64) -> Fq {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Signed power: negative exponents go through the inverse.
    pub fn powi(&self, e: i64) -> Result<Fq> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow((-e) as u64))
        }
    }

    pub fn inv(&self) -> Result<Fq> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.field.name()));
        }
        Ok(self.pow(self.field.q - 2))
    }

    /// The `p`-power Frobenius.
    pub fn frobenius(&self) -> Fq {
        self.pow(self.field.p)
    }

    /// Canonical integer encoding `Σ c_i p^i`.
    pub fn index(&self) -> u64 {
        let p = self.field.p;
        self.c.iter().rev().fold(0, |acc, &c| acc * p + c)
    }
}

impl FieldCtx {
    pub fn zero(self: &Field) -> Fq {
        Fq {
            field: self.clone(),
            c: vec![0; self.degree],
        }
    }

    pub fn one(self: &Field) -> Fq {
        self.from_u64(1)
    }

    /// Element with base-`p` digits of `n` as coefficients (mod `q`).
    pub fn from_u64(self: &Field, n: u64) -> Fq {
        let mut n = n % self.q;
        let mut c = vec![0u64; self.degree];
        for coeff in c.iter_mut() {
            *coeff = n % self.p;
            n /= self.p;
        }
        Fq {
            field: self.clone(),
            c,
        }
    }

    /// All `q` elements, in index order.
    pub fn elements(self: &Field) -> Vec<Fq> {
        (0..self.q).map(|n| self.from_u64(n)).collect()
    }

    /// All `q - 1` nonzero elements.
    pub fn units(self: &Field) -> Vec<Fq> {
        (1..self.q).map(|n| self.from_u64(n)).collect()
    }
}

/// A dense matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct FqMat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl fmt::Debug for FqMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FqMat {}x{} over {}",
            self.rows,
            self.cols,
            self.field.name()
        )?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl FqMat {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> FqMat {
        FqMat {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> FqMat {
        let mut m = FqMat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Fq>>) -> FqMat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        FqMat {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from integer indices via [`FieldCtx::from_u64`].
    pub fn from_indices(field: &Field, rows: &[&[u64]]) -> FqMat {
        FqMat::from_rows(
            field,
            rows.iter()
                .map(|row| row.iter().map(|&n| field.from_u64(n)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Fq {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fq) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &FqMat) -> FqMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = FqMat::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a.mul(other.get(k, j));
                    let cur = out.get(i, j).add(&add);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> FqMat {
        let mut out = FqMat::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &Fq) -> FqMat {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = v.mul(s);
        }
        out
    }

    /// Entrywise map (e.g. the Frobenius twist).
    pub fn map(&self, f: impl Fn(&Fq) -> Fq) -> FqMat {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = f(v);
        }
        out
    }

    pub fn det(&self) -> Fq {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero());
            let Some(pivot) = pivot else {
                return self.field.zero();
            };
            if pivot != col {
                for j in 0..n {
                    let x = a.get(col, j).clone();
                    let y = a.get(pivot, j).clone();
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                }
                det = det.neg();
            }
            let pv = a.get(col, col).clone();
            det = det.mul(&pv);
            let pinv = pv.inv().expect("pivot nonzero");
            for r in (col + 1)..n {
                let factor = a.get(r, col).mul(&pinv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let sub = a.get(col, j).mul(&factor);
                    let val = a.get(r, j).sub(&sub);
                    a.set(r, j, val);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<FqMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = FqMat::identity(&self.field, n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    let x = a.get(col, j).clone();
                    a.set(col, j, a.get(pivot, j).clone());
                    a.set(pivot, j, x);
                    let y = inv.get(col, j).clone();
                    inv.set(col, j, inv.get(pivot, j).clone());
                    inv.set(pivot, j, y);
                }
            }
            let pinv = a.get(col, col).inv()?;
            for j in 0..n {
                a.set(col, j, a.get(col, j).mul(&pinv));
                inv.set(col, j, inv.get(col, j).mul(&pinv));
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let sa = a.get(col, j).mul(&f);
                    a.set(r, j, a.get(r, j).sub(&sa));
                    let si = inv.get(col, j).mul(&f);
                    inv.set(r, j, inv.get(r, j).sub(&si));
                }
            }
        }
        Ok(inv)
    }

    /// Block-diagonal assembly.
    pub fn block_diag(field: &Field, blocks: &[&FqMat]) -> FqMat {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = FqMat::zeros(field, n, n);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, b.cols);
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(off + r, off + c, b.get(r, c).clone());
                }
            }
            off += b.rows;
        }
        out
    }

    /// Copy of the `rows × cols` block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> FqMat {
        let mut out = FqMat::zeros(&self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == FqMat::identity(&self.field, self.rows)
    }
}
