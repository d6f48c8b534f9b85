//! Coverage report: classifies every odd n below a bound as constructed,
//! catalog-dependent or unresolved, and cross-checks the outcome against the
//! reference tables of known results.
//!
//! "Constructed" is claimed only for matrices actually built and verified
//! in-process (exact Hadamard and symmetry checks). "Catalog-dependent"
//! marks orders whose route is backed by an existence theorem or published
//! data but whose ingredient is neither in the catalog nor reachable within
//! the search budget. Everything else is unresolved. A search that covers
//! its whole space and finds nothing kills that route outright rather than
//! deferring to a catalog.

use std::collections::HashMap;

use crate::assembly::{assemble_gp, assemble_p, PropusTriple};
use crate::catalog::Catalog;
use crate::constructions::{turyn_pair, IngredientSource, TurynPair};
use crate::field::prime_power;
use crate::matrix::SignMatrix;
use crate::miyamoto::{compose_williamson, paley_turyn_input_from_pair};
use crate::search::{search_propus, search_turyn, SearchSpec, MAX_SEARCH_ORDER};

/// Odd n < 200 with no known symmetric construction for order 4n in the
/// reference tables this report cross-checks against.
pub fn reference_unresolved_orders() -> &'static [u32] {
    &[
        17, 23, 29, 33, 35, 39, 47, 53, 65, 71, 73, 77, 93, 95, 97, 99, 101, 103, 107, 109,
        113, 125, 131, 133, 137, 143, 149, 151, 153, 155, 161, 163, 165, 167, 171, 173, 179,
        183, 185, 189, 191, 193, 197,
    ]
}

/// Orders with published two-circulant D-optimal data where one circulant is
/// symmetric; importing those rows resolves the order.
pub fn reference_two_circulant_orders() -> &'static [u32] {
    &[3, 7, 19, 31]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// A matrix of order 4n was built and passed the exact Hadamard and
    /// symmetry checks in this run.
    Constructed { route: &'static str },
    /// A route applies and its missing ingredient is importable.
    CatalogDependent { route: &'static str, missing: String },
    Unresolved,
}

#[derive(Debug, Clone)]
pub struct ReportEntry {
    pub n: u32,
    pub classification: Classification,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub max_n: u32,
    pub entries: Vec<ReportEntry>,
    /// Orders constructed here despite appearing in the reference unresolved
    /// table; flagged loudly, never suppressed.
    pub conflicts: Vec<u32>,
}

impl Report {
    pub fn classification(&self, n: u32) -> Option<&Classification> {
        self.entries
            .iter()
            .find(|e| e.n == n)
            .map(|e| &e.classification)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "symmetric propus-Hadamard coverage for orders 4n, odd n < {}\n",
            self.max_n
        ));
        let mut counts = (0usize, 0usize, 0usize);
        for e in &self.entries {
            let line = match &e.classification {
                Classification::Constructed { route } => {
                    counts.0 += 1;
                    format!("n={:<3} order={:<4} constructed [{route}]", e.n, 4 * e.n)
                }
                Classification::CatalogDependent { route, missing } => {
                    counts.1 += 1;
                    format!(
                        "n={:<3} order={:<4} catalog-dependent [{route}: {missing}]",
                        e.n,
                        4 * e.n
                    )
                }
                Classification::Unresolved => {
                    counts.2 += 1;
                    format!("n={:<3} order={:<4} unresolved", e.n, 4 * e.n)
                }
            };
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} constructed, {} catalog-dependent, {} unresolved\n",
            counts.0, counts.1, counts.2
        ));
        if self.conflicts.is_empty() {
            out.push_str("reference cross-check: consistent (nothing in the reference unresolved table was claimed)\n");
        } else {
            for n in &self.conflicts {
                out.push_str(&format!(
                    "!! CONFLICT: n={n} (order {}) was constructed and verified here but the reference tables list it unresolved\n",
                    4 * n
                ));
            }
        }
        out
    }
}

/// A triple becomes a "constructed" claim only if one of the arrays turns it
/// into a verified symmetric Hadamard matrix.
fn symmetric_hadamard_from(triple: &PropusTriple) -> Option<SignMatrix> {
    for assemble in [assemble_p, assemble_gp] {
        if let Ok(h) = assemble(triple) {
            let p = h.check_properties();
            if p.is_hadamard && p.is_symmetric {
                return Some(h);
            }
        }
    }
    None
}

fn verified_symmetric(h: &SignMatrix) -> bool {
    let p = h.check_properties();
    p.is_hadamard && p.is_symmetric
}

struct RouteContext<'a> {
    catalog: &'a Catalog,
    budget: u64,
    turyn_memo: HashMap<usize, TurynSearch>,
}

enum TurynSearch {
    Found(TurynPair),
    Empty,
    Exhausted,
}

impl<'a> RouteContext<'a> {
    fn turyn(&mut self, n: usize) -> &TurynSearch {
        let catalog = self.catalog;
        let budget = self.budget;
        self.turyn_memo.entry(n).or_insert_with(|| {
            if let Ok(pair) = turyn_pair(n, IngredientSource::Catalog(catalog)) {
                return TurynSearch::Found(pair);
            }
            if n > MAX_SEARCH_ORDER {
                return TurynSearch::Exhausted;
            }
            let outcome = search_turyn(&SearchSpec::turyn(n).with_budget(budget));
            match outcome
                .items
                .into_iter()
                .find(|p| p.x_row().row_sum() >= 0 && p.y_row().row_sum() >= 0)
            {
                Some(pair) => TurynSearch::Found(pair),
                None if outcome.complete => TurynSearch::Empty,
                None => TurynSearch::Exhausted,
            }
        })
    }
}

enum RouteResult {
    Built(&'static str),
    CatalogDependent(&'static str, String),
    NoRoute,
}

/// Direct triple: a catalog propus entry, or a small exhaustive search.
fn route_propus(n: usize, ctx: &mut RouteContext) -> RouteResult {
    if let Some(triple) = ctx.catalog.propus_triple(n) {
        if symmetric_hadamard_from(&triple).is_some() {
            return RouteResult::Built("propus catalog");
        }
    }
    if n <= 13 {
        let outcome = search_propus(&SearchSpec::propus(n).with_budget(ctx.budget));
        for triple in &outcome.items {
            if symmetric_hadamard_from(triple).is_some() {
                return RouteResult::Built("propus search");
            }
        }
    }
    RouteResult::NoRoute
}

/// Turyn pair of order n feeding the plain array at order 4n.
fn route_williamson(n: usize, ctx: &mut RouteContext) -> RouteResult {
    let q = 2 * n as u64 - 1;
    if prime_power(q).is_none() {
        return RouteResult::NoRoute;
    }
    match ctx.turyn(n) {
        TurynSearch::Found(pair) => {
            let x = pair.x_matrix();
            let identity = SignMatrix::identity(n);
            let triple = PropusTriple::new(
                x.try_add(&identity).expect("zero diagonal"),
                pair.y_matrix(),
                x.try_sub(&identity).expect("zero diagonal"),
            )
            .expect("pair matrices are compatible");
            match symmetric_hadamard_from(&triple) {
                Some(_) => RouteResult::Built("paley-turyn"),
                None => RouteResult::NoRoute,
            }
        }
        // The pair exists by theorem whenever 2n-1 is a prime power ≡ 1
        // (mod 4); only the desk-scale search ran out.
        TurynSearch::Exhausted => RouteResult::CatalogDependent(
            "paley-turyn",
            format!("turyn pair of order {n} beyond search budget"),
        ),
        TurynSearch::Empty => RouteResult::NoRoute,
    }
}

fn route_doptimal(n: usize, ctx: &mut RouteContext) -> RouteResult {
    if n % 4 != 3 || !crate::field::is_prime(n as u64) {
        return RouteResult::NoRoute;
    }
    let pair = crate::catalog::Catalog::d_optimal_pair(ctx.catalog, n).or_else(|| {
        if n > MAX_SEARCH_ORDER {
            return None;
        }
        let outcome =
            crate::search::search_doptimal(&SearchSpec::doptimal(n).with_budget(ctx.budget));
        let found = outcome
            .items
            .into_iter()
            .find(|p| p.x_row().row_sum() >= 0 && p.y_row().row_sum() >= 0);
        if found.is_none() && outcome.complete {
            // Exhaustive and empty: no such pair at this order.
            return None;
        }
        found
    });
    match pair {
        Some(pair) => {
            let field = match crate::field::build_field(n as u64, 1) {
                Ok(f) => f,
                Err(_) => return RouteResult::NoRoute,
            };
            match crate::constructions::d_optimal_propus(&pair, &field) {
                Ok(h) if verified_symmetric(&h) => RouteResult::Built("doptimal"),
                _ => RouteResult::NoRoute,
            }
        }
        None if reference_two_circulant_orders().contains(&(n as u32)) => {
            RouteResult::CatalogDependent(
                "doptimal",
                format!("published two-circulant rows for n={n} not imported"),
            )
        }
        None => RouteResult::NoRoute,
    }
}

fn route_three_equal(n: usize, _ctx: &mut RouteContext) -> RouteResult {
    if n != 3 && n != 7 {
        return RouteResult::NoRoute;
    }
    match crate::constructions::three_equal_propus(n) {
        Ok(h) if verified_symmetric(&h) => RouteResult::Built("three-equal"),
        _ => RouteResult::NoRoute,
    }
}

/// n = 2q+1 composed from order-q ingredients.
fn route_miyamoto(n: usize, ctx: &mut RouteContext) -> RouteResult {
    if n % 2 == 0 || n < 3 {
        return RouteResult::NoRoute;
    }
    let q = (n as u64 - 1) / 2;
    if q % 4 != 1 || prime_power(q).is_none() {
        return RouteResult::NoRoute;
    }
    match ctx.turyn(q as usize) {
        TurynSearch::Found(pair) => {
            let built = (|| -> Option<SignMatrix> {
                let input = paley_turyn_input_from_pair(q, pair).ok()?;
                let x = compose_williamson(&input).ok()?;
                let [x1, x2, _x3, x4] = x;
                let triple = PropusTriple::new(x1, x2, x4).ok()?;
                symmetric_hadamard_from(&triple)
            })();
            match built {
                Some(_) => RouteResult::Built("miyamoto"),
                None => RouteResult::NoRoute,
            }
        }
        TurynSearch::Exhausted => {
            if prime_power(2 * q - 1).is_some() {
                RouteResult::CatalogDependent(
                    "miyamoto",
                    format!("turyn pair of order {q} beyond search budget"),
                )
            } else {
                // Existence is open here; an importable ingredient is not
                // known, so the order stays unresolved.
                RouteResult::NoRoute
            }
        }
        TurynSearch::Empty => RouteResult::NoRoute,
    }
}

/// Classifies every odd n < max_n. Routes run cheapest first; the first one
/// that actually builds and verifies a matrix wins.
pub fn run_report(max_n: u32, catalog: &Catalog, budget: u64) -> Report {
    let mut ctx = RouteContext {
        catalog,
        budget,
        turyn_memo: HashMap::new(),
    };
    let routes: [fn(usize, &mut RouteContext) -> RouteResult; 5] = [
        route_propus,
        route_williamson,
        route_doptimal,
        route_three_equal,
        route_miyamoto,
    ];
    let mut entries = Vec::new();
    let mut conflicts = Vec::new();
    for n in (1..max_n as usize).step_by(2) {
        let mut classification = Classification::Unresolved;
        for route in routes {
            match route(n, &mut ctx) {
                RouteResult::Built(route_name) => {
                    classification = Classification::Constructed { route: route_name };
                    break;
                }
                RouteResult::CatalogDependent(route_name, missing) => {
                    if classification == Classification::Unresolved {
                        classification = Classification::CatalogDependent {
                            route: route_name,
                            missing,
                        };
                    }
                }
                RouteResult::NoRoute => {}
            }
        }
        if matches!(classification, Classification::Constructed { .. })
            && reference_unresolved_orders().contains(&(n as u32))
        {
            conflicts.push(n as u32);
        }
        entries.push(ReportEntry {
            n: n as u32,
            classification,
        });
    }
    Report {
        max_n,
        entries,
        conflicts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_report(max_n: u32) -> Report {
        run_report(max_n, Catalog::builtin(), 1 << 21)
    }

    #[test]
    fn small_orders_constructed() {
        let report = quick_report(16);
        for n in [1u32, 3, 5, 7, 9, 11, 13, 15] {
            assert!(
                matches!(
                    report.classification(n),
                    Some(Classification::Constructed { .. })
                ),
                "n={n} should be constructed, got {:?}",
                report.classification(n)
            );
        }
    }

    #[test]
    fn n_eleven_goes_through_miyamoto() {
        let report = quick_report(12);
        match report.classification(11) {
            Some(Classification::Constructed { route }) => assert_eq!(*route, "miyamoto"),
            other => panic!("n=11: {other:?}"),
        }
    }

    #[test]
    fn n_seventeen_unresolved() {
        let report = quick_report(18);
        assert_eq!(
            report.classification(17),
            Some(&Classification::Unresolved)
        );
    }

    #[test]
    fn every_odd_n_is_classified() {
        let report = quick_report(40);
        assert_eq!(report.entries.len(), 20);
    }
}
