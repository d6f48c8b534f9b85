//! The propus variation of Miyamoto's theorem: eight order-n ingredient
//! matrices (Uᵢ, Vᵢ) compose into four symmetric Williamson-type matrices of
//! order 2n+1 with the middle pair equal, which the plain array then turns
//! into a symmetric propus-type Hadamard matrix of order 4(2n+1).

use thiserror::Error;

use crate::assembly::{amicable, assemble_p, AssemblyError, PropusTriple};
use crate::constructions::{turyn_pair, ConstructionError, IngredientSource};
use crate::field::{build_field, paley_core, prime_power, FieldError};
use crate::matrix::{anti_identity, IntMatrix, MatrixError, SignMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MiyamotoError {
    #[error("ingredient matrices must share one order")]
    OrderMismatch,
    #[error("ingredient conditions failed: {0}")]
    ConditionsFailed(ConditionReport),
    #[error("{0} is not a prime power ≡ 1 (mod 4)")]
    BadResidue(u64),
    #[error("{0} is not a prime ≡ 3 (mod 4); the back-circulant ingredient set needs a circulant core")]
    NeedsPrimeCore(u64),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Assembly(#[from] AssemblyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Two quadruples of (0, ±1) matrices of equal order, the raw material of
/// the composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiyamotoInput {
    u: [SignMatrix; 4],
    v: [SignMatrix; 4],
}

impl MiyamotoInput {
    pub fn new(u: [SignMatrix; 4], v: [SignMatrix; 4]) -> Result<Self, MiyamotoError> {
        let n = u[0].order();
        if u.iter().chain(v.iter()).any(|m| m.order() != n) {
            return Err(MiyamotoError::OrderMismatch);
        }
        Ok(MiyamotoInput { u, v })
    }

    pub fn order(&self) -> usize {
        self.u[0].order()
    }

    pub fn u(&self) -> &[SignMatrix; 4] {
        &self.u
    }

    pub fn v(&self) -> &[SignMatrix; 4] {
        &self.v
    }
}

/// One exact boolean per ingredient condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionReport {
    /// (i) the Uᵢ are pairwise amicable.
    pub u_pairwise_amicable: bool,
    /// (ii) the Vᵢ are pairwise amicable.
    pub v_pairwise_amicable: bool,
    /// (iii) every Uᵢ + Vᵢ and Uᵢ - Vᵢ is a ±1 matrix.
    pub sums_differences_pm1: bool,
    /// (iv) every row of U₁ sums to 1; rows of U₂, U₃, U₄ sum to 0.
    pub row_sums: bool,
    /// (v) ΣUᵢUᵢᵀ = (2n+1)I - 2J and ΣVᵢVᵢᵀ = (2n+1)I.
    pub gram_sums: bool,
    /// U₂ = U₃ and V₂ = V₃, so that the composed middle pair is equal.
    pub middle_pairs_equal: bool,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.u_pairwise_amicable
            && self.v_pairwise_amicable
            && self.sums_differences_pm1
            && self.row_sums
            && self.gram_sums
            && self.middle_pairs_equal
    }
}

impl std::fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(i) u_amicable={} (ii) v_amicable={} (iii) sums_pm1={} (iv) row_sums={} (v) gram_sums={} middle_equal={}",
            self.u_pairwise_amicable,
            self.v_pairwise_amicable,
            self.sums_differences_pm1,
            self.row_sums,
            self.gram_sums,
            self.middle_pairs_equal
        )
    }
}

fn pairwise_amicable(ms: &[SignMatrix; 4]) -> bool {
    (0..4).all(|i| (i + 1..4).all(|j| amicable(&ms[i], &ms[j])))
}

fn gram_total(ms: &[SignMatrix; 4]) -> IntMatrix {
    ms.iter()
        .map(SignMatrix::gram)
        .reduce(|acc, g| acc.add(&g))
        .unwrap()
}

/// Evaluates conditions (i)-(v) plus the equal-middle structural requirement,
/// each by exact integer computation.
pub fn validate_miyamoto(input: &MiyamotoInput) -> ConditionReport {
    let n = input.order();
    let (u, v) = (&input.u, &input.v);

    let sums_differences_pm1 = (0..4).all(|idx| {
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (a, b) = (u[idx].get(i, j), v[idx].get(i, j));
                (a + b).abs() == 1 && (a - b).abs() == 1
            })
        })
    });

    let row_sums = (0..4).all(|idx| {
        let want = if idx == 0 { 1 } else { 0 };
        (0..n).all(|i| u[idx].row_sum(i) == want)
    });

    let m = 2 * n as i32 + 1;
    let expected_u = IntMatrix::from_fn(n, |i, j| if i == j { m - 2 } else { -2 });
    let expected_v = IntMatrix::scaled_identity(n, m);
    let gram_sums = gram_total(u) == expected_u && gram_total(v) == expected_v;

    ConditionReport {
        u_pairwise_amicable: pairwise_amicable(u),
        v_pairwise_amicable: pairwise_amicable(v),
        sums_differences_pm1,
        row_sums,
        gram_sums,
        middle_pairs_equal: u[1] == u[2] && v[1] == v[2],
    }
}

/// S_j = U_j ⊗ (1 1 / 1 1) + V_j ⊗ (1 -1 / -1 1); every 2×2 cell holds
/// u+v on its diagonal and u-v off it, so condition (iii) makes S a ±1
/// matrix of order 2n.
fn expand(u: &SignMatrix, v: &SignMatrix) -> SignMatrix {
    let n = u.order();
    SignMatrix::from_fn(2 * n, |i, j| {
        let cell = if i % 2 == j % 2 { 1 } else { -1 };
        u.get(i / 2, j / 2) + cell * v.get(i / 2, j / 2)
    })
}

/// Borders S with a corner 1 and a constant ±1 row and column.
fn border(s: &SignMatrix, sign: i32) -> SignMatrix {
    SignMatrix::from_fn(s.order() + 1, |i, j| match (i, j) {
        (0, 0) => 1,
        (0, _) => sign,
        (_, 0) => sign,
        _ => s.get(i - 1, j - 1),
    })
}

/// Composes a validated input into four Williamson-type matrices of order
/// 2n+1: X₁ bordered with -1, X₂ = X₃ and X₄ bordered with +1. The outputs
/// are pairwise amicable with ΣXᵢXᵢᵀ = 4(2n+1)·I, and are all symmetric
/// whenever every ingredient is.
pub fn compose_williamson(input: &MiyamotoInput) -> Result<[SignMatrix; 4], MiyamotoError> {
    let report = validate_miyamoto(input);
    if !report.all_hold() {
        return Err(MiyamotoError::ConditionsFailed(report));
    }
    let s: Vec<SignMatrix> = (0..4)
        .map(|i| expand(&input.u[i], &input.v[i]))
        .collect();
    let x = [
        border(&s[0], -1),
        border(&s[1], 1),
        border(&s[2], 1),
        border(&s[3], 1),
    ];
    debug_assert_eq!(x[1], x[2]);
    Ok(x)
}

/// The intermediate ±1 matrices S₁..S₄ of order 2n; exposed for the
/// identity checks ΣSᵢSᵢᵀ = 4(2n+1)I - 4J.
pub fn compose_doubled(input: &MiyamotoInput) -> Result<[SignMatrix; 4], MiyamotoError> {
    let report = validate_miyamoto(input);
    if !report.all_hold() {
        return Err(MiyamotoError::ConditionsFailed(report));
    }
    Ok([
        expand(&input.u[0], &input.v[0]),
        expand(&input.u[1], &input.v[1]),
        expand(&input.u[2], &input.v[2]),
        expand(&input.u[3], &input.v[3]),
    ])
}

/// Standard ingredient set for a prime power q ≡ 1 (mod 4): U₁ = I,
/// U₂ = U₃ = Q (the symmetric Paley core), U₄ = 0, and V₁ = P, V₂ = V₃ = I,
/// V₄ = S from a Turyn pair (P, S) of order q.
pub fn paley_turyn_input(
    q: u64,
    source: IngredientSource<'_>,
) -> Result<MiyamotoInput, MiyamotoError> {
    if q % 4 != 1 || prime_power(q).is_none() {
        return Err(MiyamotoError::BadResidue(q));
    }
    let pair = turyn_pair(q as usize, source)?;
    paley_turyn_input_from_pair(q, &pair)
}

/// Same ingredient set, reusing a Turyn pair of order q already in hand.
pub fn paley_turyn_input_from_pair(
    q: u64,
    pair: &crate::constructions::TurynPair,
) -> Result<MiyamotoInput, MiyamotoError> {
    let Some((p, k)) = prime_power(q) else {
        return Err(MiyamotoError::BadResidue(q));
    };
    if q % 4 != 1 || pair.order() != q as usize {
        return Err(MiyamotoError::BadResidue(q));
    }
    let field = build_field(p, k)?;
    let core = paley_core(&field)?;
    let n = q as usize;
    let identity = SignMatrix::identity(n);
    MiyamotoInput::new(
        [
            identity.clone(),
            core.clone(),
            core,
            SignMatrix::zeros(n),
        ],
        [pair.x_matrix(), identity.clone(), identity, pair.y_matrix()],
    )
}

/// Back-circulant ingredient set for a prime p ≡ 3 (mod 4): the skew core is
/// replaced by the symmetric back-circulants QR and R, i.e. U₂ = U₃ = QR and
/// V₂ = V₃ = R. Restricted to prime p: only circulant cores turn symmetric
/// under right-multiplication by R.
pub fn paley_turyn_input_back_circulant(
    p: u64,
    source: IngredientSource<'_>,
) -> Result<MiyamotoInput, MiyamotoError> {
    if p % 4 != 3 || !crate::field::is_prime(p) {
        return Err(MiyamotoError::NeedsPrimeCore(p));
    }
    let field = build_field(p, 1)?;
    let core_r = paley_core(&field)?.reversed_columns();
    let pair = turyn_pair(p as usize, source)?;
    let n = p as usize;
    let r = anti_identity(n);
    MiyamotoInput::new(
        [
            SignMatrix::identity(n),
            core_r.clone(),
            core_r,
            SignMatrix::zeros(n),
        ],
        [pair.x_matrix(), r.clone(), r, pair.y_matrix()],
    )
}

/// End-to-end driver: for a prime power q ≡ 1 (mod 4) with a Turyn pair of
/// order q obtainable, composes the Williamson-type matrices of order 2q+1
/// and feeds (X₁, X₂ = X₃, X₄) to the plain array, returning a symmetric
/// Hadamard matrix of order 4(2q+1). Only the equal pair can sit in the
/// middle; the A/D assignment is swapped automatically if the first choice
/// fails verification.
pub fn corollary_driver(
    q: u64,
    source: IngredientSource<'_>,
) -> Result<SignMatrix, MiyamotoError> {
    let input = paley_turyn_input(q, source)?;
    let x = compose_williamson(&input)?;
    let [x1, x2, _x3, x4] = x;
    let first = PropusTriple::new(x1.clone(), x2.clone(), x4.clone())?;
    match assemble_p(&first) {
        Ok(h) => Ok(h),
        Err(AssemblyError::NotHadamard { .. }) => {
            let swapped = PropusTriple::new(x4, x2, x1)?;
            Ok(assemble_p(&swapped)?)
        }
        Err(e) => Err(e.into()),
    }
}
