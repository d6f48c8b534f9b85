//! Exact integer matrices over {-1, 0, +1} and the structured builders
//! (circulant, back-circulant, anti-identity) that every construction route
//! relies on.
//!
//! All arithmetic is exact integer arithmetic: entries live in `i8`, products
//! and Gram matrices accumulate in `i32`. Orders are capped at [`MAX_ORDER`]
//! so that no product can approach `i32` range.

use std::fmt;

use thiserror::Error;

/// Hard cap on matrix order; keeps row sums and Gram entries far from
/// `i32` overflow.
pub const MAX_ORDER: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix order must be in 1..={MAX_ORDER}, got {0}")]
    BadOrder(usize),
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare {
        expected: usize,
        row: usize,
        len: usize,
    },
    #[error("entry ({row},{col}) is {value}, expected -1, 0 or +1")]
    BadEntry { row: usize, col: usize, value: i32 },
    #[error("first row must not be empty")]
    EmptyRow,
    #[error("shift {shift} out of range for row of length {len}")]
    ShiftOutOfRange { shift: usize, len: usize },
    #[error("entry ({row},{col}) of the result leaves {{-1,0,+1}}")]
    EntryOutOfRange { row: usize, col: usize },
    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("bad sign character {0:?}, expected '+', '-' or '0'")]
    BadSignChar(char),
    #[error("malformed matrix text: {0}")]
    BadText(String),
}

/// Dense square matrix with every entry in {-1, 0, +1}.
#[derive(Clone, PartialEq, Eq)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>, // row-major
}

impl SignMatrix {
    /// Builds a matrix from a closure. The closure must return -1, 0 or +1;
    /// violations and out-of-range orders panic.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> i32) -> Self {
        assert!(
            order >= 1 && order <= MAX_ORDER,
            "matrix order {order} out of range"
        );
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                let v = f(i, j);
                assert!((-1..=1).contains(&v), "entry ({i},{j}) = {v} out of range");
                entries.push(v as i8);
            }
        }
        SignMatrix { order, entries }
    }

    /// Validating constructor for externally supplied data.
    pub fn from_rows(rows: &[Vec<i32>]) -> Result<Self, MatrixError> {
        let order = rows.len();
        if order == 0 || order > MAX_ORDER {
            return Err(MatrixError::BadOrder(order));
        }
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(MatrixError::NotSquare {
                    expected: order,
                    row: i,
                    len: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !(-1..=1).contains(&v) {
                    return Err(MatrixError::BadEntry {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
                entries.push(v as i8);
            }
        }
        Ok(SignMatrix { order, entries })
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| i32::from(i == j))
    }

    /// The all-ones matrix J.
    pub fn all_ones(order: usize) -> Self {
        Self::from_fn(order, |_, _| 1)
    }

    pub fn zeros(order: usize) -> Self {
        Self::from_fn(order, |_, _| 0)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        i32::from(self.entries[i * self.order + j])
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order, |i, j| -self.get(i, j))
    }

    /// Entry-wise sum; fails if any entry leaves {-1, 0, +1}.
    pub fn try_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.entrywise(other, 1)
    }

    /// Entry-wise difference; fails if any entry leaves {-1, 0, +1}.
    pub fn try_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.entrywise(other, -1)
    }

    fn entrywise(&self, other: &Self, sign: i32) -> Result<Self, MatrixError> {
        if self.order != other.order {
            return Err(MatrixError::OrderMismatch(self.order, other.order));
        }
        let n = self.order;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = self.get(i, j) + sign * other.get(i, j);
                if !(-1..=1).contains(&v) {
                    return Err(MatrixError::EntryOutOfRange { row: i, col: j });
                }
                entries.push(v as i8);
            }
        }
        Ok(SignMatrix { order: n, entries })
    }

    /// Right-multiplication by the anti-identity R, i.e. column reversal.
    pub fn reversed_columns(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(i, self.order - 1 - j))
    }

    /// Left-multiplication by the anti-identity R, i.e. row reversal.
    pub fn reversed_rows(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(self.order - 1 - i, j))
    }

    /// Exact product M·N.
    pub fn mul(&self, other: &Self) -> IntMatrix {
        assert_eq!(self.order, other.order, "order mismatch in product");
        let n = self.order;
        IntMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    /// Exact Gram matrix M·Mᵀ.
    pub fn gram(&self) -> IntMatrix {
        let n = self.order;
        IntMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| self.get(i, k) * self.get(j, k)).sum()
        })
    }

    pub fn row_sum(&self, i: usize) -> i32 {
        (0..self.order).map(|j| self.get(i, j)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// True when M[i][j] = M[0][(j - i) mod n] everywhere.
    pub fn is_type1_circulant(&self) -> bool {
        let n = self.order;
        (0..n).all(|i| (0..n).all(|j| self.get(i, j) == self.get(0, (j + n - i) % n)))
    }

    /// The first row as a type-1 generator, when the matrix is circulant.
    pub fn circulant_first_row(&self) -> Option<FirstRow> {
        if !self.is_type1_circulant() {
            return None;
        }
        let values = (0..self.order).map(|j| self.get(0, j) as i8).collect();
        Some(FirstRow::new_unchecked(values, CirculantType::Type1))
    }

    /// Evaluates the standard structural predicates, all by exact integer
    /// comparison. Never fails; the report simply records what holds.
    pub fn check_properties(&self) -> PropertyReport {
        let n = self.order;
        let is_pm1 = self.entries.iter().all(|&v| v != 0);
        let is_symmetric = self.is_symmetric();
        let zero_diagonal = (0..n).all(|i| self.get(i, i) == 0);
        let offdiag_pm1 = (0..n).all(|i| (0..n).all(|j| i == j || self.get(i, j) != 0));
        let is_skew_plus_identity = (0..n).all(|i| self.get(i, i) == 1)
            && (0..n).all(|i| (0..i).all(|j| self.get(i, j) == -self.get(j, i)));

        let gram = self.gram();
        let gram_is = |diag: i32| -> bool {
            (0..n).all(|i| {
                (0..n).all(|j| gram.get(i, j) == if i == j { diag } else { 0 })
            })
        };
        let is_hadamard = is_pm1 && gram_is(n as i32);
        let is_conference =
            zero_diagonal && offdiag_pm1 && is_symmetric && gram_is(n as i32 - 1);

        PropertyReport {
            order: n,
            is_pm1,
            is_hadamard,
            is_symmetric,
            is_skew_plus_identity,
            is_conference,
        }
    }

    /// Serializes to the plain text matrix format: a `matrix <n>` header line
    /// followed by `n` rows over the alphabet `+`, `-`, `0`.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.order + 2) * (self.order + 1));
        out.push_str(&format!("matrix {}\n", self.order));
        for i in 0..self.order {
            for j in 0..self.order {
                out.push(sign_char(self.get(i, j)));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the format produced by [`SignMatrix::to_text`].
    pub fn from_text(text: &str) -> Result<Self, MatrixError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| MatrixError::BadText("empty input".into()))?;
        let order: usize = header
            .strip_prefix("matrix")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| MatrixError::BadText(format!("bad header line {header:?}")))?;
        if order == 0 || order > MAX_ORDER {
            return Err(MatrixError::BadOrder(order));
        }
        let mut rows = Vec::with_capacity(order);
        for _ in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| MatrixError::BadText("fewer rows than header declares".into()))?;
            let mut row = Vec::with_capacity(order);
            for c in line.chars() {
                row.push(i32::from(sign_value(c)?));
            }
            if row.len() != order {
                return Err(MatrixError::NotSquare {
                    expected: order,
                    row: rows.len(),
                    len: row.len(),
                });
            }
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(MatrixError::BadText("trailing content after matrix".into()));
        }
        Self::from_rows(&rows)
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SignMatrix(order={})", self.order)?;
        for i in 0..self.order {
            for j in 0..self.order {
                write!(f, "{}", sign_char(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn sign_char(v: i32) -> char {
    match v {
        1 => '+',
        -1 => '-',
        _ => '0',
    }
}

fn sign_value(c: char) -> Result<i8, MatrixError> {
    match c {
        '+' => Ok(1),
        '-' => Ok(-1),
        '0' => Ok(0),
        other => Err(MatrixError::BadSignChar(other)),
    }
}

/// Square integer matrix used for Gram products and defects.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i32>,
}

impl IntMatrix {
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> i32) -> Self {
        let entries = (0..order * order)
            .map(|idx| f(idx / order, idx % order))
            .collect();
        IntMatrix { order, entries }
    }

    pub fn scaled_identity(order: usize, c: i32) -> Self {
        Self::from_fn(order, |i, j| if i == j { c } else { 0 })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.order + j]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        Self::from_fn(self.order, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        Self::from_fn(self.order, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, c: i32) -> Self {
        Self::from_fn(self.order, |i, j| c * self.get(i, j))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn from_sign(m: &SignMatrix) -> Self {
        Self::from_fn(m.order(), |i, j| m.get(i, j))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix(order={})", self.order)?;
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Which matrix a first row generates: type-1 circulant
/// (`M[i][j] = row[(j-i) mod n]`) or type-2 back-circulant
/// (`M[i][j] = row[(i+j) mod n]`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CirculantType {
    Type1,
    Type2,
}

/// Compact generator for structured matrices: a length-n vector over
/// {-1, 0, +1} plus the circulant type. The `symmetric` flag records whether
/// `row[i] = row[(n-i) mod n]`, i.e. whether the type-1 circulant it
/// generates is a symmetric matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FirstRow {
    values: Vec<i8>,
    circulant_type: CirculantType,
    symmetric: bool,
}

impl FirstRow {
    pub fn new(values: Vec<i8>, circulant_type: CirculantType) -> Result<Self, MatrixError> {
        if values.is_empty() {
            return Err(MatrixError::EmptyRow);
        }
        if values.len() > MAX_ORDER {
            return Err(MatrixError::BadOrder(values.len()));
        }
        for (j, &v) in values.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(MatrixError::BadEntry {
                    row: 0,
                    col: j,
                    value: i32::from(v),
                });
            }
        }
        Ok(Self::new_unchecked(values, circulant_type))
    }

    fn new_unchecked(values: Vec<i8>, circulant_type: CirculantType) -> Self {
        let n = values.len();
        let symmetric = (1..n).all(|i| values[i] == values[n - i]);
        FirstRow {
            values,
            circulant_type,
            symmetric,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty rows
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn circulant_type(&self) -> CirculantType {
        self.circulant_type
    }

    /// Whether the type-1 circulant generated by this row is symmetric.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn row_sum(&self) -> i32 {
        self.values.iter().map(|&v| i32::from(v)).sum()
    }

    /// Parses a row from the `+`/`-`/`0` alphabet used by the catalog format.
    pub fn parse_signs(s: &str, circulant_type: CirculantType) -> Result<Self, MatrixError> {
        let values = s.chars().map(sign_value).collect::<Result<Vec<_>, _>>()?;
        Self::new(values, circulant_type)
    }

    /// Renders the row in the `+`/`-`/`0` alphabet.
    pub fn to_signs(&self) -> String {
        self.values
            .iter()
            .map(|&v| sign_char(i32::from(v)))
            .collect()
    }
}

/// Builds the structured matrix generated by a first row.
pub fn circulant(row: &FirstRow) -> SignMatrix {
    let n = row.len();
    let v = row.values();
    match row.circulant_type() {
        CirculantType::Type1 => SignMatrix::from_fn(n, |i, j| i32::from(v[(j + n - i) % n])),
        CirculantType::Type2 => SignMatrix::from_fn(n, |i, j| i32::from(v[(i + j) % n])),
    }
}

/// The anti-identity R: ones on the back diagonal (`R[i][j] = 1` iff
/// `i + j = n - 1`), zero elsewhere. Satisfies R = Rᵀ and R² = I.
pub fn anti_identity(n: usize) -> SignMatrix {
    SignMatrix::from_fn(n, |i, j| i32::from(i + j == n - 1))
}

/// Periodic autocorrelation of a first row at a given shift:
/// `Σᵢ row[i]·row[(i+shift) mod n]`. Equals entry `[0][shift]` of the Gram
/// matrix of the type-1 circulant the row generates.
pub fn paf(row: &FirstRow, shift: usize) -> Result<i32, MatrixError> {
    let n = row.len();
    if shift >= n {
        return Err(MatrixError::ShiftOutOfRange { shift, len: n });
    }
    let v = row.values();
    Ok((0..n)
        .map(|i| i32::from(v[i]) * i32::from(v[(i + shift) % n]))
        .sum())
}

/// Outcome of [`SignMatrix::check_properties`]: one exact boolean per
/// structural predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyReport {
    pub order: usize,
    /// No zero entries.
    pub is_pm1: bool,
    /// ±1 entries and M·Mᵀ = n·I.
    pub is_hadamard: bool,
    pub is_symmetric: bool,
    /// (M - I)ᵀ = -(M - I).
    pub is_skew_plus_identity: bool,
    /// Zero diagonal, ±1 off-diagonal, symmetric, M·Mᵀ = (n-1)·I.
    pub is_conference: bool,
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order={} pm1={} hadamard={} symmetric={} skew_plus_identity={} conference={}",
            self.order,
            self.is_pm1,
            self.is_hadamard,
            self.is_symmetric,
            self.is_skew_plus_identity,
            self.is_conference
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row1(values: &[i8]) -> FirstRow {
        FirstRow::new(values.to_vec(), CirculantType::Type1).unwrap()
    }

    fn row2(values: &[i8]) -> FirstRow {
        FirstRow::new(values.to_vec(), CirculantType::Type2).unwrap()
    }

    #[test]
    fn circulant_type1_unrolls_definition() {
        let m = circulant(&row1(&[0, 1, -1]));
        let expected = SignMatrix::from_rows(&[
            vec![0, 1, -1],
            vec![-1, 0, 1],
            vec![1, -1, 0],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn circulant_type2_unrolls_definition() {
        let m = circulant(&row2(&[0, 1, -1]));
        let expected = SignMatrix::from_rows(&[
            vec![0, 1, -1],
            vec![1, -1, 0],
            vec![-1, 0, 1],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn circulant_constant_row_gives_all_ones() {
        assert_eq!(circulant(&row1(&[1, 1, 1])), SignMatrix::all_ones(3));
    }

    #[test]
    fn empty_row_rejected() {
        assert_eq!(
            FirstRow::new(vec![], CirculantType::Type1).unwrap_err(),
            MatrixError::EmptyRow
        );
    }

    #[test]
    fn anti_identity_shape() {
        assert_eq!(anti_identity(1), SignMatrix::identity(1));
        let r = anti_identity(3);
        let expected = SignMatrix::from_rows(&[
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![1, 0, 0],
        ])
        .unwrap();
        assert_eq!(r, expected);
        assert!(r.is_symmetric());
        assert_eq!(r.mul(&r), IntMatrix::scaled_identity(3, 1));
    }

    #[test]
    fn anti_identity_conjugation_transposes_circulants() {
        // R·M·R = Mᵀ for type-1 circulants of order 5, over a spread of rows.
        for bits in 0..32u32 {
            let values: Vec<i8> = (0..5).map(|i| if bits >> i & 1 == 1 { 1 } else { -1 }).collect();
            let m = circulant(&row1(&values));
            let conj = m.reversed_rows().reversed_columns();
            assert_eq!(conj, m.transpose());
            // Back-circulants built from circulants are symmetric.
            assert!(m.reversed_columns().is_symmetric());
        }
    }

    #[test]
    fn back_circulant_is_column_reversed_circulant_of_reversed_row() {
        // type2(r) = type1(r̂)·R where r̂[s] = r[(n-1-s) mod n].
        let r = [0i8, 1, -1, -1, 1];
        let type2 = circulant(&row2(&r));
        let mut rev = r.to_vec();
        rev.reverse();
        let type1 = circulant(&row1(&rev));
        assert_eq!(type1.reversed_columns(), type2);
        assert!(type2.is_symmetric());
    }

    #[test]
    fn gram_of_all_ones() {
        let j3 = SignMatrix::all_ones(3);
        assert_eq!(j3.gram(), IntMatrix::from_fn(3, |_, _| 3));
    }

    #[test]
    fn gram_of_identity() {
        let i4 = SignMatrix::identity(4);
        assert_eq!(i4.gram(), IntMatrix::scaled_identity(4, 1));
    }

    #[test]
    fn gram_matches_hand_expansion() {
        // circulant (1,1,-1): diagonal 3, off-diagonal -1, i.e. 4I - J.
        let m = circulant(&row1(&[1, 1, -1]));
        let expected = IntMatrix::from_fn(3, |i, j| if i == j { 3 } else { -1 });
        assert_eq!(m.gram(), expected);
    }

    #[test]
    fn paf_examples() {
        assert_eq!(paf(&row1(&[1, 1, -1]), 1).unwrap(), -1);
        assert_eq!(paf(&row1(&[1, 1, 1]), 1).unwrap(), 3);
        assert_eq!(paf(&row1(&[0, 1, -1]), 1).unwrap(), -1);
        assert!(matches!(
            paf(&row1(&[1, 1, 1]), 3),
            Err(MatrixError::ShiftOutOfRange { shift: 3, len: 3 })
        ));
    }

    #[test]
    fn paf_shift_zero_is_squared_norm() {
        let r = row1(&[0, 1, -1, -1, 1]);
        assert_eq!(paf(&r, 0).unwrap(), 4);
    }

    #[test]
    fn gram_first_row_equals_paf() {
        let r = row1(&[1, -1, -1, 1, 1, -1, 1]);
        let g = circulant(&r).gram();
        for s in 0..7 {
            assert_eq!(g.get(0, s), paf(&r, s).unwrap());
        }
    }

    #[test]
    fn smallest_hadamard_properties() {
        let h = SignMatrix::from_rows(&[vec![1, 1], vec![1, -1]]).unwrap();
        let p = h.check_properties();
        assert!(p.is_hadamard);
        assert!(p.is_symmetric);
        assert!(!p.is_conference);
    }

    #[test]
    fn skew_core_plus_identity_detected() {
        // circulant (0,1,-1) is skew; adding I gives a skew-plus-identity matrix.
        let q = circulant(&row1(&[0, 1, -1]));
        let m = q.try_add(&SignMatrix::identity(3)).unwrap();
        let p = m.check_properties();
        assert!(p.is_skew_plus_identity);
        assert!(!p.is_symmetric);
    }

    #[test]
    fn non_symmetric_core_is_not_conference() {
        let m = circulant(&row1(&[0, 1, -1]));
        let p = m.check_properties();
        assert!(!p.is_conference);
        assert!(!p.is_hadamard);
        assert!(!p.is_pm1);
    }

    #[test]
    fn all_ones_is_not_hadamard() {
        assert!(!SignMatrix::all_ones(3).check_properties().is_hadamard);
    }

    #[test]
    fn conference_matrix_recognized() {
        // Order-2 conference matrix [[0,1],[1,0]].
        let m = SignMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(m.check_properties().is_conference);
    }

    #[test]
    fn circulants_commute() {
        let a = circulant(&row1(&[1, -1, 1, 1, -1]));
        let b = circulant(&row1(&[0, 1, 1, -1, -1]));
        assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn first_row_symmetry_flag() {
        assert!(row1(&[0, 1, 1]).is_symmetric());
        assert!(row1(&[1]).is_symmetric());
        assert!(!row1(&[0, 1, -1]).is_symmetric());
        assert!(row1(&[1, -1, 0, 0, -1]).is_symmetric());
    }

    #[test]
    fn sign_parsing_round_trip() {
        let r = FirstRow::parse_signs("0+-", CirculantType::Type1).unwrap();
        assert_eq!(r.values(), &[0, 1, -1]);
        assert_eq!(r.to_signs(), "0+-");
        assert!(FirstRow::parse_signs("0+x", CirculantType::Type1).is_err());
    }

    #[test]
    fn matrix_text_round_trip() {
        let m = circulant(&row1(&[0, 1, -1, -1, 1]));
        let text = m.to_text();
        assert!(text.starts_with("matrix 5\n"));
        assert_eq!(SignMatrix::from_text(&text).unwrap(), m);
    }

    #[test]
    fn matrix_text_rejects_garbage() {
        assert!(SignMatrix::from_text("").is_err());
        assert!(SignMatrix::from_text("matrix 2\n++\n").is_err());
        assert!(SignMatrix::from_text("matrix 2\n++\n+x\n").is_err());
        assert!(SignMatrix::from_text("matrix 2\n++\n+-\n--\n").is_err());
    }

    #[test]
    fn try_add_range_check() {
        let j = SignMatrix::all_ones(2);
        assert!(j.try_add(&j).is_err());
        assert_eq!(j.try_sub(&j).unwrap(), SignMatrix::zeros(2));
    }
}
