//! Pruned exhaustive search over first-row spaces.
//!
//! Rows are packed as bit masks (one sign bit per position, plus a nonzero
//! mask), symmetric rows enumerate only their free prefix, and candidates are
//! joined on exact periodic-autocorrelation vectors: a triple or pair is
//! valid precisely when its PAF vectors cancel shift by shift, so the last
//! slot is resolved by hash lookup instead of a nested scan. Filters are
//! applied in order: the row-sum quadratic first (it never excludes a valid
//! result; it is the additive property applied to the all-ones vector), then
//! the per-shift PAF condition.
//!
//! Output order is contractual: results arrive in lexicographic order of
//! their row tuples under the per-position order - < 0 < +, regardless of
//! thread count. The node budget is also applied deterministically: it caps
//! enumerated rows and scheduled join lookups before any parallel work
//! starts, and a search that would exceed it reports `complete = false`
//! rather than returning a partial, order-dependent set.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::assembly::{additive_defect, PropusTriple};
use crate::constructions::{ConferencePair, DOptimalPair, TurynPair};
use crate::matrix::{circulant, CirculantType, FirstRow};

/// Largest searchable order; rows are packed into 64-bit masks.
pub const MAX_SEARCH_ORDER: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchKind {
    Propus,
    Turyn,
    Conference,
    DOptimal,
}

impl SearchKind {
    fn slot_count(self) -> usize {
        match self {
            SearchKind::Propus => 3,
            _ => 2,
        }
    }
}

/// Search parameters. Construct with the per-kind constructors and refine
/// with the builder methods.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub kind: SearchKind,
    pub n: usize,
    symmetry: [bool; 3],
    row_sums: [Option<i32>; 3],
    pub limit: usize,
    pub canonical_only: bool,
    pub budget: u64,
}

impl SearchSpec {
    fn new(kind: SearchKind, n: usize, symmetry: [bool; 3]) -> Self {
        assert!(
            n >= 1 && n <= MAX_SEARCH_ORDER,
            "search order {n} out of 1..={MAX_SEARCH_ORDER}"
        );
        SearchSpec {
            kind,
            n,
            symmetry,
            row_sums: [None; 3],
            limit: usize::MAX,
            canonical_only: false,
            budget: u64::MAX,
        }
    }

    /// Symmetric circulant triples (A, B, D) with the additive property.
    pub fn propus(n: usize) -> Self {
        Self::new(SearchKind::Propus, n, [true; 3])
    }

    /// Zero-diagonal X and ±1 Y, both symmetric, with X·Xᵀ + Y·Yᵀ = (2n-1)·I.
    pub fn turyn(n: usize) -> Self {
        Self::new(SearchKind::Turyn, n, [true, true, true])
    }

    /// Same Gram target as [`SearchSpec::turyn`], typed as conference cores.
    pub fn conference(n: usize) -> Self {
        Self::new(SearchKind::Conference, n, [true, true, true])
    }

    /// Symmetric X and unconstrained Y with X·Xᵀ + Y·Yᵀ = (2n-2)·I + 2·J.
    pub fn doptimal(n: usize) -> Self {
        Self::new(SearchKind::DOptimal, n, [true, false, false])
    }

    /// Relaxes or imposes the symmetry constraint of one slot. Slots that
    /// define the search kind (both Turyn/conference slots, the X slot of the
    /// D-optimal kind) cannot be relaxed.
    pub fn with_slot_symmetry(mut self, slot: usize, symmetric: bool) -> Self {
        assert!(slot < self.kind.slot_count(), "slot {slot} out of range");
        let locked = match self.kind {
            SearchKind::Propus => false,
            SearchKind::Turyn | SearchKind::Conference => true,
            SearchKind::DOptimal => slot == 0,
        };
        assert!(
            !locked || symmetric,
            "slot {slot} of {:?} searches is symmetric by definition",
            self.kind
        );
        self.symmetry[slot] = symmetric;
        self
    }

    /// Requires an exact row sum for one slot.
    pub fn with_row_sum(mut self, slot: usize, sum: i32) -> Self {
        assert!(slot < self.kind.slot_count(), "slot {slot} out of range");
        self.row_sums[slot] = Some(sum);
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        assert!(limit >= 1, "limit must be at least 1");
        self.limit = limit;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Keep only results whose every row is the lexicographically least
    /// member of its orbit under cyclic rotation and global negation.
    pub fn canonical(mut self, canonical_only: bool) -> Self {
        self.canonical_only = canonical_only;
        self
    }
}

/// Search result set plus a completeness marker: `complete = false` means
/// the node budget stopped the search before the space was covered, which is
/// distinct from an exhaustive search that found nothing.
#[derive(Debug, Clone)]
pub struct SearchOutcome<T> {
    pub items: Vec<T>,
    pub complete: bool,
}

impl<T> SearchOutcome<T> {
    fn exhausted() -> Self {
        SearchOutcome {
            items: Vec::new(),
            complete: false,
        }
    }
}

/// A first row packed into sign bits: bit i of `nonzero` marks a ±1 entry,
/// bit i of `plus` marks +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct PackedRow {
    n: u8,
    nonzero: u64,
    plus: u64,
}

impl PackedRow {
    fn values(&self) -> Vec<i8> {
        (0..self.n as usize)
            .map(|i| {
                if self.nonzero >> i & 1 == 0 {
                    0
                } else if self.plus >> i & 1 == 1 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    fn to_first_row(self) -> FirstRow {
        FirstRow::new(self.values(), CirculantType::Type1).expect("packed rows are valid")
    }

    fn row_sum(&self) -> i32 {
        2 * self.plus.count_ones() as i32 - self.nonzero.count_ones() as i32
    }

    #[inline]
    fn rot_right(&self, x: u64, s: usize) -> u64 {
        let n = self.n as usize;
        if s == 0 {
            x
        } else {
            ((x >> s) | (x << (n - s))) & ((1u64 << n) - 1)
        }
    }

    /// Periodic autocorrelation at a shift, straight off the bit masks.
    fn paf(&self, s: usize) -> i32 {
        let m = self.nonzero & self.rot_right(self.nonzero, s);
        let agree = !(self.plus ^ self.rot_right(self.plus, s)) & m;
        2 * agree.count_ones() as i32 - m.count_ones() as i32
    }

    fn paf_vector(&self) -> Vec<i32> {
        (1..=self.n as usize / 2).map(|s| self.paf(s)).collect()
    }

    /// Cyclic shift: result[i] = self[(i + k) mod n].
    fn rotated(&self, k: usize) -> PackedRow {
        PackedRow {
            n: self.n,
            nonzero: self.rot_right(self.nonzero, k),
            plus: self.rot_right(self.plus, k),
        }
    }

    fn negated(&self) -> PackedRow {
        PackedRow {
            n: self.n,
            nonzero: self.nonzero,
            plus: self.plus ^ self.nonzero,
        }
    }
}

/// Structural constraint a slot's rows must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SlotShape {
    Pm1 { symmetric: bool },
    ZeroDiagSymmetric,
}

impl SlotShape {
    fn admits(&self, row: &PackedRow) -> bool {
        let n = row.n as usize;
        let values = row.values();
        let symmetric = (1..n).all(|i| values[i] == values[n - i]);
        match self {
            SlotShape::Pm1 { symmetric: true } => row.nonzero.count_ones() as usize == n && symmetric,
            SlotShape::Pm1 { symmetric: false } => row.nonzero.count_ones() as usize == n,
            SlotShape::ZeroDiagSymmetric => {
                row.nonzero.count_ones() as usize == n - 1 && values[0] == 0 && symmetric
            }
        }
    }
}

/// Lexicographically least representative check for the quotient by cyclic
/// rotation and global negation, restricted to orbit members that still
/// satisfy the slot shape.
fn is_canonical(row: &PackedRow, shape: SlotShape) -> bool {
    let n = row.n as usize;
    let own = row.values();
    for k in 0..n {
        for candidate in [row.rotated(k), row.rotated(k).negated()] {
            if shape.admits(&candidate) && candidate.values() < own {
                return false;
            }
        }
    }
    true
}

struct Candidate {
    row: PackedRow,
    paf: Vec<i32>,
}

/// Enumerates every row of the given shape in lexicographic order
/// (- < 0 < + per position), charging one budget node per row, and keeps only
/// rows passing the row-sum filter. PAF vectors are computed for survivors.
fn enumerate_candidates(
    n: usize,
    shape: SlotShape,
    required_sum: Option<i32>,
    feasible_sum: impl Fn(i32) -> bool,
    budget: &mut u64,
) -> Option<Vec<Candidate>> {
    let (fixed_zero, free): (bool, Vec<usize>) = match shape {
        SlotShape::Pm1 { symmetric: true } => (false, (0..=n / 2).collect()),
        SlotShape::Pm1 { symmetric: false } => (false, (0..n).collect()),
        SlotShape::ZeroDiagSymmetric => (true, (1..=n / 2).collect()),
    };
    let f = free.len();
    let count = 1u64 << f;
    if *budget < count {
        return None;
    }
    *budget -= count;

    let mirror = matches!(
        shape,
        SlotShape::Pm1 { symmetric: true } | SlotShape::ZeroDiagSymmetric
    );
    let mut out = Vec::new();
    for c in 0..count {
        let mut nonzero = 0u64;
        let mut plus = 0u64;
        for (idx, &pos) in free.iter().enumerate() {
            let bit = c >> (f - 1 - idx) & 1;
            nonzero |= 1 << pos;
            plus |= bit << pos;
            if mirror {
                let m = (n - pos) % n;
                nonzero |= 1 << m;
                plus |= bit << m;
            }
        }
        if fixed_zero {
            nonzero &= !1u64;
            plus &= !1u64;
        }
        let row = PackedRow {
            n: n as u8,
            nonzero,
            plus,
        };
        debug_assert!(shape.admits(&row));
        let s = row.row_sum();
        if required_sum.map_or(true, |t| s == t) && feasible_sum(s) {
            out.push(Candidate {
                paf: row.paf_vector(),
                row,
            });
        }
    }
    Some(out)
}

fn index_by_paf(candidates: &[Candidate]) -> HashMap<&[i32], Vec<usize>> {
    let mut map: HashMap<&[i32], Vec<usize>> = HashMap::new();
    for (idx, cand) in candidates.iter().enumerate() {
        map.entry(cand.paf.as_slice()).or_default().push(idx);
    }
    map
}

fn is_square(v: i32) -> bool {
    if v < 0 {
        return false;
    }
    let r = (v as f64).sqrt() as i32;
    (r - 1..=r + 1).any(|c| c >= 0 && c * c == v)
}

const JOIN_CHUNK: usize = 512;

/// Two-slot search shared by the Turyn/conference/D-optimal kinds:
/// `paf_x(s) + paf_y(s) = offdiag` for every shift s ≥ 1.
fn search_pair(
    spec: &SearchSpec,
    x_shape: SlotShape,
    y_shape: SlotShape,
    gram_total: i32,
    offdiag: i32,
) -> SearchOutcome<(FirstRow, FirstRow)> {
    let n = spec.n;
    let mut budget = spec.budget;
    // Row-sum quadratic: sum² = Σ_s paf(s) over all n shifts, so
    // x² + y² = gram_total + (n-1)·offdiag.
    let total = gram_total + (n as i32 - 1) * offdiag;
    let feasible = |s: i32| is_square(total - s * s);
    let Some(xs) = enumerate_candidates(n, x_shape, spec.row_sums[0], feasible, &mut budget)
    else {
        return SearchOutcome::exhausted();
    };
    let Some(ys) = enumerate_candidates(n, y_shape, spec.row_sums[1], feasible, &mut budget)
    else {
        return SearchOutcome::exhausted();
    };

    if budget < xs.len() as u64 {
        return SearchOutcome::exhausted();
    }
    let index = index_by_paf(&ys);

    let half = n / 2;
    let pairs: Vec<(FirstRow, FirstRow)> = xs
        .par_chunks(JOIN_CHUNK)
        .flat_map_iter(|chunk| {
            let index = &index;
            let ys = &ys;
            chunk.iter().flat_map(move |x| {
                let required: Vec<i32> = (0..half).map(|i| offdiag - x.paf[i]).collect();
                let hits = index.get(required.as_slice()).map_or(&[][..], |v| v.as_slice());
                hits.iter().map(move |&yi| {
                    (x.row.to_first_row(), ys[yi].row.to_first_row())
                })
            })
        })
        .collect();

    let mut items: Vec<(FirstRow, FirstRow)> = pairs;
    if spec.canonical_only {
        items.retain(|(x, y)| {
            is_canonical(&pack(x), x_shape) && is_canonical(&pack(y), y_shape)
        });
    }
    items.truncate(spec.limit);
    SearchOutcome {
        items,
        complete: true,
    }
}

fn pack(row: &FirstRow) -> PackedRow {
    let mut nonzero = 0u64;
    let mut plus = 0u64;
    for (i, &v) in row.values().iter().enumerate() {
        if v != 0 {
            nonzero |= 1 << i;
        }
        if v == 1 {
            plus |= 1 << i;
        }
    }
    PackedRow {
        n: row.len() as u8,
        nonzero,
        plus,
    }
}

/// All Turyn pairs of order n: X·Xᵀ + Y·Yᵀ = (2n-1)·I with zero-diagonal
/// symmetric X and symmetric ±1 Y.
pub fn search_turyn(spec: &SearchSpec) -> SearchOutcome<TurynPair> {
    assert_eq!(spec.kind, SearchKind::Turyn, "spec kind mismatch");
    let outcome = search_pair(
        spec,
        SlotShape::ZeroDiagSymmetric,
        SlotShape::Pm1 { symmetric: true },
        2 * spec.n as i32 - 1,
        0,
    );
    SearchOutcome {
        items: outcome
            .items
            .into_iter()
            .map(|(x, y)| TurynPair::from_rows(x, y).expect("search output re-verifies"))
            .collect(),
        complete: outcome.complete,
    }
}

/// Identical Gram target to [`search_turyn`], typed as conference cores.
pub fn search_conference(spec: &SearchSpec) -> SearchOutcome<ConferencePair> {
    assert_eq!(spec.kind, SearchKind::Conference, "spec kind mismatch");
    let outcome = search_pair(
        spec,
        SlotShape::ZeroDiagSymmetric,
        SlotShape::Pm1 { symmetric: true },
        2 * spec.n as i32 - 1,
        0,
    );
    SearchOutcome {
        items: outcome
            .items
            .into_iter()
            .map(|(x, y)| ConferencePair::from_rows(x, y).expect("search output re-verifies"))
            .collect(),
        complete: outcome.complete,
    }
}

/// D-optimal pairs: symmetric X, unconstrained (by default) Y, with
/// X·Xᵀ + Y·Yᵀ = (2n-2)·I + 2·J, i.e. paf_X(s) + paf_Y(s) = 2 for s ≥ 1 and
/// row sums a² + b² = 4n - 2.
pub fn search_doptimal(spec: &SearchSpec) -> SearchOutcome<DOptimalPair> {
    assert_eq!(spec.kind, SearchKind::DOptimal, "spec kind mismatch");
    let outcome = search_pair(
        spec,
        SlotShape::Pm1 { symmetric: true },
        SlotShape::Pm1 {
            symmetric: spec.symmetry[1],
        },
        2 * spec.n as i32,
        2,
    );
    SearchOutcome {
        items: outcome
            .items
            .into_iter()
            .map(|(x, y)| DOptimalPair::from_rows(x, y).expect("search output re-verifies"))
            .collect(),
        complete: outcome.complete,
    }
}

/// All circulant triples with the additive property, symmetric per slot as
/// the spec demands (all three by default), in lexicographic order of
/// (rowA, rowB, rowD).
pub fn search_propus(spec: &SearchSpec) -> SearchOutcome<PropusTriple> {
    assert_eq!(spec.kind, SearchKind::Propus, "spec kind mismatch");
    let n = spec.n;
    let shape = |slot: usize| SlotShape::Pm1 {
        symmetric: spec.symmetry[slot],
    };
    let mut budget = spec.budget;

    // Row-sum quadratic a² + 2b² + d² = 4n, slot by slot.
    let total = 4 * n as i32;
    let a_feasible = |a: i32| feasible_bd(total - a * a);
    let b_feasible = |b: i32| {
        let rest = total - 2 * b * b;
        rest >= 0 && (0..=isqrt(rest)).any(|a| is_square(rest - a * a))
    };
    let d_feasible = |d: i32| {
        let rest = total - d * d;
        rest >= 0
            && (0..=isqrt(rest)).any(|a| (rest - a * a) % 2 == 0 && is_square_half(rest - a * a))
    };
    let Some(asc) = enumerate_candidates(n, shape(0), spec.row_sums[0], a_feasible, &mut budget)
    else {
        return SearchOutcome::exhausted();
    };
    let Some(bsc) = enumerate_candidates(n, shape(1), spec.row_sums[1], b_feasible, &mut budget)
    else {
        return SearchOutcome::exhausted();
    };
    let Some(dsc) = enumerate_candidates(n, shape(2), spec.row_sums[2], d_feasible, &mut budget)
    else {
        return SearchOutcome::exhausted();
    };

    let lookups = (asc.len() as u128) * (bsc.len() as u128);
    if (budget as u128) < lookups {
        return SearchOutcome::exhausted();
    }
    let index = index_by_paf(&dsc);

    let half = n / 2;
    let mut items: Vec<PropusTriple> = asc
        .par_chunks(JOIN_CHUNK.max(1))
        .flat_map_iter(|chunk| {
            let index = &index;
            let bsc = &bsc;
            let dsc = &dsc;
            chunk.iter().flat_map(move |a| {
                let a_sum = a.row.row_sum();
                bsc.iter().flat_map(move |b| {
                    let d2 = total - a_sum * a_sum - 2 * b.row.row_sum() * b.row.row_sum();
                    let hits: &[usize] = if is_square(d2) {
                        let required: Vec<i32> =
                            (0..half).map(|i| -a.paf[i] - 2 * b.paf[i]).collect();
                        index.get(required.as_slice()).map_or(&[][..], |v| v.as_slice())
                    } else {
                        &[]
                    };
                    hits.iter().map(move |&di| {
                        let triple = PropusTriple::new(
                            circulant(&a.row.to_first_row()),
                            circulant(&b.row.to_first_row()),
                            circulant(&dsc[di].row.to_first_row()),
                        )
                        .expect("search rows are ±1");
                        assert!(
                            additive_defect(&triple).is_zero(),
                            "PAF join admitted a defective triple"
                        );
                        triple
                    })
                })
            })
        })
        .collect();

    if spec.canonical_only {
        items.retain(|t| {
            [(t.a(), 0), (t.b(), 1), (t.d(), 2)].iter().all(|(m, slot)| {
                let row = m
                    .circulant_first_row()
                    .expect("search triples are circulant");
                is_canonical(&pack(&row), shape(*slot))
            })
        });
    }
    items.truncate(spec.limit);
    SearchOutcome {
        items,
        complete: true,
    }
}

fn isqrt(v: i32) -> i32 {
    (v.max(0) as f64).sqrt() as i32 + 1
}

fn feasible_bd(rest: i32) -> bool {
    // ∃ b, d with 2b² + d² = rest.
    if rest < 0 {
        return false;
    }
    (0..=isqrt(rest)).any(|b| is_square(rest - 2 * b * b))
}

fn is_square_half(v: i32) -> bool {
    v >= 0 && v % 2 == 0 && is_square(v / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{paf, SignMatrix};

    #[test]
    fn packed_paf_matches_definition() {
        for bits in 0..128u64 {
            let row = PackedRow {
                n: 7,
                nonzero: 0x7f,
                plus: bits,
            };
            let fr = row.to_first_row();
            for s in 0..7 {
                assert_eq!(row.paf(s), paf(&fr, s).unwrap());
            }
        }
        // And with a zero present.
        let row = PackedRow {
            n: 5,
            nonzero: 0b11110,
            plus: 0b01100,
        };
        let fr = row.to_first_row();
        for s in 0..5 {
            assert_eq!(row.paf(s), paf(&fr, s).unwrap());
        }
    }

    #[test]
    fn paf_is_palindromic_in_the_shift() {
        let row = PackedRow {
            n: 9,
            nonzero: 0x1ff,
            plus: 0b101100110,
        };
        let fr = row.to_first_row();
        for s in 1..9 {
            assert_eq!(paf(&fr, s).unwrap(), paf(&fr, 9 - s).unwrap());
        }
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let mut budget = u64::MAX;
        let rows = enumerate_candidates(
            5,
            SlotShape::Pm1 { symmetric: true },
            None,
            |_| true,
            &mut budget,
        )
        .unwrap();
        assert_eq!(rows.len(), 8);
        let values: Vec<Vec<i8>> = rows.iter().map(|c| c.row.values()).collect();
        let mut sorted = values.clone();
        sorted.sort();
        assert_eq!(values, sorted);
        assert_eq!(values[0], vec![-1; 5]);
        assert_eq!(values[7], vec![1; 5]);
    }

    #[test]
    fn enumeration_budget_charges_nodes() {
        let shape = SlotShape::Pm1 { symmetric: true };
        let mut budget = 7u64;
        assert!(enumerate_candidates(5, shape, None, |_| true, &mut budget).is_none());
        let mut budget = 8u64;
        assert!(enumerate_candidates(5, shape, None, |_| true, &mut budget).is_some());
        assert_eq!(budget, 0);
    }

    #[test]
    fn propus_n3_contains_small_special() {
        let outcome = search_propus(&SearchSpec::propus(3));
        assert!(outcome.complete);
        let found = outcome.items.iter().any(|t| {
            t.a() == &SignMatrix::all_ones(3)
                && t.b().get(0, 0) == -1
                && t.b() == t.d()
                && (0..3).all(|i| (0..3).all(|j| t.b().get(i, j) == if i == j { -1 } else { 1 }))
        });
        assert!(found, "J, J-2I, J-2I missing from n=3 results");
    }

    #[test]
    fn propus_n1_includes_sign_variants() {
        let outcome = search_propus(&SearchSpec::propus(1));
        assert!(outcome.complete);
        assert_eq!(outcome.items.len(), 8);
        let target = PropusTriple::new(
            SignMatrix::all_ones(1),
            SignMatrix::all_ones(1),
            SignMatrix::all_ones(1).neg(),
        )
        .unwrap();
        assert!(outcome.items.contains(&target));
    }

    #[test]
    fn propus_n4_nonempty() {
        let outcome = search_propus(&SearchSpec::propus(4));
        assert!(outcome.complete);
        assert!(!outcome.items.is_empty());
    }

    #[test]
    fn propus_results_are_lexicographic_and_deterministic() {
        let spec = SearchSpec::propus(5);
        let serial = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| search_propus(&spec));
        let parallel = search_propus(&spec);
        assert_eq!(serial.items, parallel.items);
        let keys: Vec<_> = parallel
            .items
            .iter()
            .map(|t| {
                (
                    t.a().circulant_first_row().unwrap(),
                    t.b().circulant_first_row().unwrap(),
                    t.d().circulant_first_row().unwrap(),
                )
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn turyn_n3_finds_expected_pair() {
        let outcome = search_turyn(&SearchSpec::turyn(3));
        assert!(outcome.complete);
        assert!(outcome.items.iter().any(|p| {
            p.x_row().values() == [0, 1, 1] && p.y_row().values() == [-1, 1, 1]
        }));
    }

    #[test]
    fn turyn_n2_empty_by_parity() {
        let outcome = search_turyn(&SearchSpec::turyn(2));
        assert!(outcome.complete);
        assert!(outcome.items.is_empty());
    }

    #[test]
    fn turyn_n5_nonempty() {
        let outcome = search_turyn(&SearchSpec::turyn(5));
        assert!(outcome.complete);
        assert!(!outcome.items.is_empty());
    }

    #[test]
    fn doptimal_n3_contains_expected() {
        let outcome = search_doptimal(&SearchSpec::doptimal(3));
        assert!(outcome.complete);
        assert!(outcome.items.iter().any(|p| {
            p.x_row().values() == [1, 1, 1] && p.y_row().values() == [1, 1, -1]
        }));
    }

    #[test]
    fn doptimal_n7_nonempty() {
        let outcome = search_doptimal(&SearchSpec::doptimal(7));
        assert!(outcome.complete);
        assert!(!outcome.items.is_empty());
    }

    #[test]
    fn conference_n13_nonempty() {
        let outcome = search_conference(&SearchSpec::conference(13).with_limit(4));
        assert!(outcome.complete);
        assert!(!outcome.items.is_empty());
    }

    #[test]
    fn budget_exhaustion_reported() {
        let outcome = search_turyn(&SearchSpec::turyn(13).with_budget(10));
        assert!(!outcome.complete);
        assert!(outcome.items.is_empty());
    }

    #[test]
    fn canonical_filter_returns_subset_with_orbit_representatives() {
        let full = search_propus(&SearchSpec::propus(5));
        let canonical = search_propus(&SearchSpec::propus(5).canonical(true));
        assert!(canonical.items.len() <= full.items.len());
        assert!(!canonical.items.is_empty());
        for t in &canonical.items {
            assert!(full.items.contains(t));
        }
    }

    #[test]
    fn limit_truncates_in_order() {
        let full = search_propus(&SearchSpec::propus(3));
        let limited = search_propus(&SearchSpec::propus(3).with_limit(2));
        assert_eq!(limited.items.len(), 2);
        assert_eq!(&full.items[..2], &limited.items[..]);
    }

    /// Unpruned reference: enumerate every ±1 row combination directly and
    /// keep the triples whose additive defect vanishes, checked through full
    /// matrix products only.
    fn naive_propus(n: usize) -> Vec<PropusTriple> {
        let rows: Vec<FirstRow> = (0..1u64 << n)
            .map(|bits| {
                let values: Vec<i8> = (0..n)
                    .map(|i| if bits >> (n - 1 - i) & 1 == 1 { 1 } else { -1 })
                    .collect();
                FirstRow::new(values, CirculantType::Type1).unwrap()
            })
            .filter(|r| r.is_symmetric())
            .collect();
        let mut out = Vec::new();
        for a in &rows {
            for b in &rows {
                for d in &rows {
                    let t = PropusTriple::new(circulant(a), circulant(b), circulant(d)).unwrap();
                    if additive_defect(&t).is_zero() {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn pruned_search_equals_naive_enumeration() {
        for n in 1..=7 {
            let pruned = search_propus(&SearchSpec::propus(n));
            assert!(pruned.complete);
            let naive = naive_propus(n);
            assert_eq!(
                pruned.items.len(),
                naive.len(),
                "result count differs at n={n}"
            );
            for t in &naive {
                assert!(pruned.items.contains(t), "missing triple at n={n}");
            }
        }
    }

    #[test]
    fn row_sum_filter_never_excludes() {
        // Disable the row-sum filter by exhausting it: compare against a
        // search in which every candidate passes (the filter is internal, so
        // equality with the naive enumeration above already covers this; here
        // we re-check at n=5 that every naive triple satisfies the quadratic).
        for t in naive_propus(5) {
            let (a, b, d) = (
                t.a().row_sum(0),
                t.b().row_sum(0),
                t.d().row_sum(0),
            );
            assert_eq!(a * a + 2 * b * b + d * d, 20);
        }
    }

    #[test]
    fn relaxed_symmetry_finds_asymmetric_middles() {
        let spec = SearchSpec::propus(3)
            .with_slot_symmetry(1, false)
            .with_slot_symmetry(2, false);
        let outcome = search_propus(&spec);
        assert!(outcome.complete);
        assert!(outcome
            .items
            .iter()
            .any(|t| !t.b().is_symmetric() || !t.d().is_symmetric()));
        // A = J, B = circ(1,1,-1), D = circ(1,-1,1) is among them.
        let target = PropusTriple::new(
            SignMatrix::all_ones(3),
            circulant(&FirstRow::new(vec![1, 1, -1], CirculantType::Type1).unwrap()),
            circulant(&FirstRow::new(vec![1, -1, 1], CirculantType::Type1).unwrap()),
        )
        .unwrap();
        assert!(outcome.items.contains(&target));
    }
}
