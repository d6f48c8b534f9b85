//! The named construction routes: Turyn pairs feeding the Williamson route,
//! the conference-matrix route, the D-optimal route and the finite
//! three-equal family.

use thiserror::Error;

use crate::assembly::{
    additive_defect, assemble_gp, assemble_p, classify_triple, AssemblyError, PropusTriple,
    TripleClass,
};
use crate::catalog::Catalog;
use crate::field::{build_field, is_prime, paley_core, prime_power, FieldError, FieldTable};
use crate::matrix::{circulant, CirculantType, FirstRow, IntMatrix, MatrixError, SignMatrix};
use crate::search::{self, SearchSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("no {kind} pair of order {n} found{}", if *exhausted { " (search budget exhausted)" } else { "" })]
    NotFound {
        kind: &'static str,
        n: usize,
        exhausted: bool,
    },
    #[error("catalog has no {kind} entry of order {n}")]
    NotInCatalog { kind: &'static str, n: usize },
    #[error("{q} is not a prime power ≡ 1 (mod 4)")]
    BadResidue { q: u64 },
    #[error("{n} is not a prime ≡ 3 (mod 4)")]
    WrongResidue { n: usize },
    #[error("X must be symmetric")]
    AsymmetricX,
    #[error("invalid {kind} pair: {reason}")]
    InvalidPair { kind: &'static str, reason: String },
    #[error("the three-equal family exists only for orders 3 and 7, got {0}")]
    UnsupportedOrder(usize),
    #[error(transparent)]
    Assembly(#[from] AssemblyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Where a route obtains its first-row ingredients.
#[derive(Debug, Clone, Copy)]
pub enum IngredientSource<'a> {
    /// Exhaustive search with a node budget.
    Search { budget: u64 },
    /// Lookup in a verified catalog.
    Catalog(&'a Catalog),
}

impl IngredientSource<'static> {
    /// Unbounded search.
    pub fn search() -> Self {
        IngredientSource::Search { budget: u64::MAX }
    }
}

fn require_type1(row: &FirstRow, kind: &'static str) -> Result<(), ConstructionError> {
    if row.circulant_type() != CirculantType::Type1 {
        return Err(ConstructionError::InvalidPair {
            kind,
            reason: "rows must be type-1 generators".into(),
        });
    }
    Ok(())
}

fn gram_sum(x: &FirstRow, y: &FirstRow) -> IntMatrix {
    circulant(x).gram().add(&circulant(y).gram())
}

/// Symmetric circulant pair (X, Y) of order n with X·Xᵀ + Y·Yᵀ = (2n-1)·I,
/// X zero-diagonal with ±1 off-diagonal, Y everywhere ±1. Equivalently the
/// two circulant blocks of a symmetric conference matrix of order 2n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TurynPair {
    x: FirstRow,
    y: FirstRow,
}

impl TurynPair {
    pub fn from_rows(x: FirstRow, y: FirstRow) -> Result<Self, ConstructionError> {
        validate_conference_like(&x, &y, "turyn")?;
        Ok(TurynPair { x, y })
    }

    pub fn order(&self) -> usize {
        self.x.len()
    }

    pub fn x_row(&self) -> &FirstRow {
        &self.x
    }

    pub fn y_row(&self) -> &FirstRow {
        &self.y
    }

    pub fn x_matrix(&self) -> SignMatrix {
        circulant(&self.x)
    }

    pub fn y_matrix(&self) -> SignMatrix {
        circulant(&self.y)
    }
}

fn validate_conference_like(
    x: &FirstRow,
    y: &FirstRow,
    kind: &'static str,
) -> Result<(), ConstructionError> {
    require_type1(x, kind)?;
    require_type1(y, kind)?;
    let n = x.len();
    let invalid = |reason: &str| ConstructionError::InvalidPair {
        kind,
        reason: reason.into(),
    };
    if y.len() != n {
        return Err(invalid("row lengths differ"));
    }
    if x.values()[0] != 0 || x.values()[1..].iter().any(|&v| v == 0) {
        return Err(invalid("X must have a zero diagonal and ±1 off-diagonal"));
    }
    if y.values().iter().any(|&v| v == 0) {
        return Err(invalid("Y must be a ±1 row"));
    }
    if !x.is_symmetric() || !y.is_symmetric() {
        return Err(invalid("both rows must be symmetric"));
    }
    let expected = IntMatrix::scaled_identity(n, 2 * n as i32 - 1);
    if gram_sum(x, y) != expected {
        return Err(invalid("Gram identity X·Xᵀ + Y·Yᵀ = (2n-1)·I fails"));
    }
    Ok(())
}

/// The circulant blocks of a two-circulant symmetric conference matrix;
/// structurally identical to a [`TurynPair`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConferencePair {
    a_core: FirstRow,
    b_core: FirstRow,
}

impl ConferencePair {
    pub fn from_rows(a_core: FirstRow, b_core: FirstRow) -> Result<Self, ConstructionError> {
        validate_conference_like(&a_core, &b_core, "conference")?;
        Ok(ConferencePair { a_core, b_core })
    }

    pub fn order(&self) -> usize {
        self.a_core.len()
    }

    pub fn a_row(&self) -> &FirstRow {
        &self.a_core
    }

    pub fn b_row(&self) -> &FirstRow {
        &self.b_core
    }

    /// Assembles the symmetric conference matrix of order 2n from the two
    /// circulant blocks: rows (A B / B -A).
    pub fn conference_matrix(&self) -> SignMatrix {
        let n = self.order();
        let a = circulant(&self.a_core);
        let b = circulant(&self.b_core);
        SignMatrix::from_fn(2 * n, |i, j| match (i / n, j / n) {
            (0, 0) => a.get(i % n, j % n),
            (0, 1) | (1, 0) => b.get(i % n, j % n),
            _ => -a.get(i % n, j % n),
        })
    }
}

impl From<TurynPair> for ConferencePair {
    fn from(p: TurynPair) -> Self {
        ConferencePair {
            a_core: p.x,
            b_core: p.y,
        }
    }
}

impl From<ConferencePair> for TurynPair {
    fn from(p: ConferencePair) -> Self {
        TurynPair {
            x: p.a_core,
            y: p.b_core,
        }
    }
}

/// Circulant ±1 pair (X symmetric, Y) with X·Xᵀ + Y·Yᵀ = (2n-2)·I + 2·J,
/// exactly the Gram identity the D-optimal route consumes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DOptimalPair {
    x: FirstRow,
    y: FirstRow,
}

impl DOptimalPair {
    pub fn from_rows(x: FirstRow, y: FirstRow) -> Result<Self, ConstructionError> {
        require_type1(&x, "doptimal")?;
        require_type1(&y, "doptimal")?;
        let n = x.len();
        let invalid = |reason: &str| ConstructionError::InvalidPair {
            kind: "doptimal",
            reason: reason.into(),
        };
        if y.len() != n {
            return Err(invalid("row lengths differ"));
        }
        if x.values().iter().any(|&v| v == 0) || y.values().iter().any(|&v| v == 0) {
            return Err(invalid("both rows must be ±1"));
        }
        if !x.is_symmetric() {
            return Err(ConstructionError::AsymmetricX);
        }
        let expected =
            IntMatrix::from_fn(n, |i, j| if i == j { 2 * n as i32 } else { 2 });
        if gram_sum(&x, &y) != expected {
            return Err(invalid("Gram identity X·Xᵀ + Y·Yᵀ = (2n-2)·I + 2·J fails"));
        }
        Ok(DOptimalPair { x, y })
    }

    pub fn order(&self) -> usize {
        self.x.len()
    }

    pub fn x_row(&self) -> &FirstRow {
        &self.x
    }

    pub fn y_row(&self) -> &FirstRow {
        &self.y
    }

    pub fn x_matrix(&self) -> SignMatrix {
        circulant(&self.x)
    }

    pub fn y_matrix(&self) -> SignMatrix {
        circulant(&self.y)
    }
}

/// Obtains a Turyn pair of order n, deterministically per source: searches
/// pick the lexicographically least pair whose row sums are both
/// nonnegative (negating a row never breaks the Gram identity, so the
/// normalized representative always exists), catalogs return their least
/// entry.
pub fn turyn_pair(n: usize, source: IngredientSource<'_>) -> Result<TurynPair, ConstructionError> {
    match source {
        IngredientSource::Search { budget } => {
            let outcome = search::search_turyn(&SearchSpec::turyn(n).with_budget(budget));
            let exhausted = !outcome.complete;
            outcome
                .items
                .into_iter()
                .find(|p| p.x_row().row_sum() >= 0 && p.y_row().row_sum() >= 0)
                .ok_or(ConstructionError::NotFound {
                    kind: "turyn",
                    n,
                    exhausted,
                })
        }
        IngredientSource::Catalog(catalog) => catalog
            .turyn_pair(n)
            .ok_or(ConstructionError::NotInCatalog { kind: "turyn", n }),
    }
}

/// Williamson route: for a prime power q ≡ 1 (mod 4), a Turyn pair of order
/// n = (q+1)/2 yields the circulant symmetric triple (X+I, Y, X-I), hence a
/// symmetric Hadamard matrix of order 2(q+1).
pub fn williamson_propus_from_q(
    q: u64,
    source: IngredientSource<'_>,
) -> Result<(PropusTriple, SignMatrix), ConstructionError> {
    if q % 4 != 1 || prime_power(q).is_none() {
        return Err(ConstructionError::BadResidue { q });
    }
    let n = ((q + 1) / 2) as usize;
    let pair = turyn_pair(n, source)?;
    let x = pair.x_matrix();
    let identity = SignMatrix::identity(n);
    let triple = PropusTriple::new(
        x.try_add(&identity)?,
        pair.y_matrix(),
        x.try_sub(&identity)?,
    )?;
    debug_assert_eq!(classify_triple(&triple), TripleClass::Propus);
    let h = assemble_p(&triple)?;
    Ok((triple, h))
}

/// Which variant of the conference route to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConferenceVariant {
    /// Feed (M+I, M-I, M+I) built from the full conference matrix M of order
    /// m = 2n into the plain array; output order 4m.
    Plain,
    /// Feed (A+I, B, A-I) built from the circulant blocks of order n into the
    /// back-circulant array; output order 4n.
    BackCirculant,
}

/// Conference-matrix route for even orders.
pub fn conference_propus(
    pair: &ConferencePair,
    variant: ConferenceVariant,
) -> Result<SignMatrix, ConstructionError> {
    // Re-validate so stale or hand-built pairs cannot slip through.
    validate_conference_like(&pair.a_core, &pair.b_core, "conference")?;
    match variant {
        ConferenceVariant::Plain => {
            let m = pair.conference_matrix();
            debug_assert!(m.check_properties().is_conference);
            let identity = SignMatrix::identity(m.order());
            let triple = PropusTriple::new(
                m.try_add(&identity)?,
                m.try_sub(&identity)?,
                m.try_add(&identity)?,
            )?;
            Ok(assemble_p(&triple)?)
        }
        ConferenceVariant::BackCirculant => {
            let a = circulant(&pair.a_core);
            let identity = SignMatrix::identity(a.order());
            let triple = PropusTriple::new(
                a.try_add(&identity)?,
                circulant(&pair.b_core),
                a.try_sub(&identity)?,
            )?;
            Ok(assemble_gp(&triple)?)
        }
    }
}

/// D-optimal route: for prime n ≡ 3 (mod 4), the triple (X, Q+I, Y) with Q
/// the Paley core of order n goes through the back-circulant array. The
/// closure identity pairs X·Xᵀ + Y·Yᵀ = (2n-2)·I + 2·J against
/// 2(Q+I)(Q+I)ᵀ = (2n+2)·I - 2·J.
pub fn d_optimal_propus(
    pair: &DOptimalPair,
    field: &FieldTable,
) -> Result<SignMatrix, ConstructionError> {
    let n = pair.order();
    if n % 4 != 3 || !is_prime(n as u64) {
        return Err(ConstructionError::WrongResidue { n });
    }
    if field.q() != n || field.k() != 1 {
        return Err(ConstructionError::InvalidPair {
            kind: "doptimal",
            reason: format!("field GF({}) does not match pair order {n}", field.q()),
        });
    }
    if !pair.x_row().is_symmetric() {
        return Err(ConstructionError::AsymmetricX);
    }
    let core = paley_core(field)?;
    let b = core.try_add(&SignMatrix::identity(n))?;
    let triple = PropusTriple::new(pair.x_matrix(), b, pair.y_matrix())?;
    Ok(assemble_gp(&triple)?)
}

/// All symmetric ±1 first rows of length n in lexicographic order
/// (per-position order - < 0 < +).
fn symmetric_pm1_rows(n: usize) -> Vec<FirstRow> {
    let free = n / 2 + 1;
    (0..1u32 << free)
        .map(|c| {
            let mut values = vec![0i8; n];
            for pos in 0..free {
                let v = if c >> (free - 1 - pos) & 1 == 1 { 1 } else { -1 };
                values[pos] = v;
                values[(n - pos) % n] = v;
            }
            FirstRow::new(values, CirculantType::Type1).unwrap()
        })
        .collect()
}

/// Three-equal family: B = C = D = Q+I on the skew Paley core of order
/// n ∈ {3, 7}, with A the lexicographically least symmetric circulant ±1
/// matrix of row sum √(4n-3) that closes the additive property. The family
/// is finite: 4n - 3 must be a perfect square with the remaining three row
/// sums all 1, which happens only at 12 = 9+1+1+1 and 28 = 25+1+1+1.
pub fn three_equal_propus(n: usize) -> Result<SignMatrix, ConstructionError> {
    if n != 3 && n != 7 {
        return Err(ConstructionError::UnsupportedOrder(n));
    }
    let field = build_field(n as u64, 1)?;
    let core = paley_core(&field)?;
    let b = core.try_add(&SignMatrix::identity(n))?;
    let target = ((4 * n - 3) as f64).sqrt() as i32;
    debug_assert_eq!(target * target, 4 * n as i32 - 3);
    for row in symmetric_pm1_rows(n) {
        if row.row_sum() != target {
            continue;
        }
        let triple = PropusTriple::new(circulant(&row), b.clone(), b.clone())?;
        if additive_defect(&triple).is_zero() {
            return Ok(assemble_gp(&triple)?);
        }
    }
    Err(ConstructionError::NotFound {
        kind: "three-equal",
        n,
        exhausted: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::paf;

    fn fr(values: &[i8]) -> FirstRow {
        FirstRow::new(values.to_vec(), CirculantType::Type1).unwrap()
    }

    #[test]
    fn turyn_pair_order_three() {
        let pair = turyn_pair(3, IngredientSource::search()).unwrap();
        assert_eq!(pair.x_row().values(), &[0, 1, 1]);
        assert_eq!(pair.y_row().values(), &[-1, 1, 1]);
    }

    #[test]
    fn turyn_pair_order_one_degenerate() {
        let pair = turyn_pair(1, IngredientSource::search()).unwrap();
        assert_eq!(pair.x_row().values(), &[0]);
        assert_eq!(pair.y_row().values(), &[1]);
        let g = gram_sum(pair.x_row(), pair.y_row());
        assert_eq!(g, IntMatrix::scaled_identity(1, 1));
    }

    #[test]
    fn turyn_pair_order_five_exists() {
        let pair = turyn_pair(5, IngredientSource::search()).unwrap();
        let expected = IntMatrix::scaled_identity(5, 9);
        assert_eq!(gram_sum(pair.x_row(), pair.y_row()), expected);
    }

    #[test]
    fn turyn_rejects_bad_gram() {
        let err = TurynPair::from_rows(fr(&[0, 1, 1]), fr(&[1, 1, 1])).unwrap_err();
        assert!(matches!(err, ConstructionError::InvalidPair { .. }));
    }

    #[test]
    fn turyn_conference_correspondence_exhaustive() {
        // Every Turyn pair is a conference pair and back, and the assembled
        // block matrix is a symmetric conference matrix of order 2n.
        for n in 1..=9usize {
            let outcome = search::search_turyn(&SearchSpec::turyn(n));
            assert!(outcome.complete);
            for pair in outcome.items {
                let conf: ConferencePair = pair.clone().into();
                let back: TurynPair = conf.clone().into();
                assert_eq!(back, pair);
                let m = conf.conference_matrix();
                assert_eq!(m.order(), 2 * n);
                assert!(m.check_properties().is_conference);
            }
        }
    }

    #[test]
    fn williamson_route_small_orders() {
        for q in [5u64, 9, 13] {
            let (triple, h) =
                williamson_propus_from_q(q, IngredientSource::search()).unwrap();
            assert_eq!(classify_triple(&triple), TripleClass::Propus);
            assert_eq!(h.order(), 2 * (q as usize + 1));
            let p = h.check_properties();
            assert!(p.is_hadamard && p.is_symmetric);
        }
    }

    #[test]
    fn williamson_route_rejects_bad_residue() {
        assert!(matches!(
            williamson_propus_from_q(7, IngredientSource::search()),
            Err(ConstructionError::BadResidue { q: 7 })
        ));
        assert!(matches!(
            williamson_propus_from_q(21, IngredientSource::search()),
            Err(ConstructionError::BadResidue { q: 21 })
        ));
    }

    #[test]
    fn conference_route_plain_order_24() {
        let pair = turyn_pair(3, IngredientSource::search()).unwrap();
        let h = conference_propus(&pair.into(), ConferenceVariant::Plain).unwrap();
        assert_eq!(h.order(), 24);
        let p = h.check_properties();
        assert!(p.is_hadamard && p.is_symmetric);
    }

    #[test]
    fn conference_route_back_circulant_order_12() {
        let pair = turyn_pair(3, IngredientSource::search()).unwrap();
        let h = conference_propus(&pair.into(), ConferenceVariant::BackCirculant).unwrap();
        assert_eq!(h.order(), 12);
        let p = h.check_properties();
        assert!(p.is_hadamard && p.is_symmetric);
    }

    #[test]
    fn d_optimal_route_order_three() {
        let pair = DOptimalPair::from_rows(fr(&[1, 1, 1]), fr(&[1, 1, -1])).unwrap();
        // Closure: gram(X) + gram(Y) = (2n-2)I + 2J at n = 3.
        assert_eq!(paf(pair.y_row(), 1).unwrap(), -1);
        let field = build_field(3, 1).unwrap();
        let h = d_optimal_propus(&pair, &field).unwrap();
        assert_eq!(h.order(), 12);
        let p = h.check_properties();
        assert!(p.is_hadamard && p.is_symmetric);
    }

    #[test]
    fn d_optimal_rejects_wrong_residue() {
        // A valid pair exists at n = 5, but 5 ≡ 1 (mod 4) so the route must
        // turn it away.
        let pair =
            DOptimalPair::from_rows(fr(&[-1, 1, 1, 1, 1]), fr(&[-1, 1, 1, 1, 1])).unwrap();
        let field = build_field(5, 1).unwrap();
        assert!(matches!(
            d_optimal_propus(&pair, &field),
            Err(ConstructionError::WrongResidue { n: 5 })
        ));
    }

    #[test]
    fn d_optimal_pair_rejects_asymmetric_x() {
        let err = DOptimalPair::from_rows(fr(&[1, 1, -1]), fr(&[1, 1, 1])).unwrap_err();
        assert!(matches!(err, ConstructionError::AsymmetricX));
    }

    #[test]
    fn three_equal_orders() {
        let h12 = three_equal_propus(3).unwrap();
        assert_eq!(h12.order(), 12);
        assert!(h12.check_properties().is_hadamard);
        assert!(h12.check_properties().is_symmetric);

        let h28 = three_equal_propus(7).unwrap();
        assert_eq!(h28.order(), 28);
        assert!(h28.check_properties().is_hadamard);
        assert!(h28.check_properties().is_symmetric);

        assert!(matches!(
            three_equal_propus(11),
            Err(ConstructionError::UnsupportedOrder(11))
        ));
    }

    #[test]
    fn three_equal_order_seven_uses_j_minus_2i() {
        // Row sum 5 with one -1 per row, on the diagonal.
        let h = three_equal_propus(7).unwrap();
        // A sits in the top-left block of the GP array.
        for i in 0..7 {
            for j in 0..7 {
                let expected = if i == j { -1 } else { 1 };
                assert_eq!(h.get(i, j), expected);
            }
        }
    }

    #[test]
    fn d_optimal_closure_identity() {
        let pair = DOptimalPair::from_rows(fr(&[1, 1, 1]), fr(&[1, 1, -1])).unwrap();
        let n = pair.order();
        let field = build_field(n as u64, 1).unwrap();
        let core = paley_core(&field).unwrap();
        let b = core.try_add(&SignMatrix::identity(n)).unwrap();
        let total = pair
            .x_matrix()
            .gram()
            .add(&pair.y_matrix().gram())
            .add(&b.gram().scale(2));
        assert_eq!(total, IntMatrix::scaled_identity(n, 4 * n as i32));
    }
}
