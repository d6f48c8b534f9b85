//! Order-driven construction: maps a requested Hadamard order and method to
//! the route that produces it, preferring catalog ingredients and falling
//! back to budgeted search.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::assembly::AssemblyError;
use crate::catalog::Catalog;
use crate::constructions::{
    conference_propus, d_optimal_propus, three_equal_propus, williamson_propus_from_q,
    ConferencePair, ConferenceVariant, ConstructionError, DOptimalPair, IngredientSource,
};
use crate::field::build_field;
use crate::matrix::{FirstRow, SignMatrix};
use crate::miyamoto::{corollary_driver, MiyamotoError};
use crate::search::{search_conference, search_doptimal, SearchSpec, MAX_SEARCH_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Auto,
    PaleyTuryn,
    Conference,
    DOptimal,
    ThreeEqual,
    Miyamoto,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::PaleyTuryn => "paley-turyn",
            Method::Conference => "conference",
            Method::DOptimal => "doptimal",
            Method::ThreeEqual => "three-equal",
            Method::Miyamoto => "miyamoto",
        }
    }

    /// Concrete routes in the order `auto` tries them: cheapest first.
    pub const AUTO_ORDER: [Method; 5] = [
        Method::PaleyTuryn,
        Method::Conference,
        Method::DOptimal,
        Method::ThreeEqual,
        Method::Miyamoto,
    ];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Method::Auto),
            "paley-turyn" => Ok(Method::PaleyTuryn),
            "conference" => Ok(Method::Conference),
            "doptimal" => Ok(Method::DOptimal),
            "three-equal" => Ok(Method::ThreeEqual),
            "miyamoto" => Ok(Method::Miyamoto),
            other => Err(format!(
                "unknown method {other:?}; expected auto, paley-turyn, conference, doptimal, three-equal or miyamoto"
            )),
        }
    }
}

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("order must be a positive multiple of 4, got {0}")]
    BadOrder(usize),
    #[error("{method} cannot produce order {order}: {reason}")]
    Inapplicable {
        method: Method,
        order: usize,
        reason: String,
    },
    #[error("no route produced order {order}:{}", attempts.iter().map(|a| format!("\n  {a}")).collect::<String>())]
    Unconstructed {
        order: usize,
        attempts: Vec<String>,
    },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Assembly(#[from] AssemblyError),
    #[error(transparent)]
    Miyamoto(#[from] MiyamotoError),
}

/// A constructed matrix plus how it was built. When the route went through a
/// circulant triple, the triple's first rows ride along for catalog-format
/// output.
#[derive(Debug, Clone)]
pub struct ConstructOutcome {
    pub matrix: SignMatrix,
    pub method: Method,
    pub triple_rows: Option<[FirstRow; 3]>,
}

fn conference_pair_for(
    n: usize,
    catalog: &Catalog,
    budget: u64,
) -> Result<ConferencePair, ConstructionError> {
    if let Some(pair) = catalog
        .conference_pair(n)
        .or_else(|| catalog.turyn_pair(n).map(Into::into))
    {
        return Ok(pair);
    }
    if n > MAX_SEARCH_ORDER {
        return Err(ConstructionError::NotFound {
            kind: "conference",
            n,
            exhausted: true,
        });
    }
    let outcome = search_conference(&SearchSpec::conference(n).with_budget(budget));
    let exhausted = !outcome.complete;
    outcome
        .items
        .into_iter()
        .find(|p| p.a_row().row_sum() >= 0 && p.b_row().row_sum() >= 0)
        .ok_or(ConstructionError::NotFound {
            kind: "conference",
            n,
            exhausted,
        })
}

fn d_optimal_pair_for(
    n: usize,
    catalog: &Catalog,
    budget: u64,
) -> Result<DOptimalPair, ConstructionError> {
    if let Some(pair) = catalog.d_optimal_pair(n) {
        return Ok(pair);
    }
    if n > MAX_SEARCH_ORDER {
        return Err(ConstructionError::NotFound {
            kind: "doptimal",
            n,
            exhausted: true,
        });
    }
    let outcome = search_doptimal(&SearchSpec::doptimal(n).with_budget(budget));
    let exhausted = !outcome.complete;
    outcome
        .items
        .into_iter()
        .find(|p| p.x_row().row_sum() >= 0 && p.y_row().row_sum() >= 0)
        .ok_or(ConstructionError::NotFound {
            kind: "doptimal",
            n,
            exhausted,
        })
}

/// Turyn-pair-consuming routes try the catalog first, then search.
fn run_with_sources<T>(
    catalog: &Catalog,
    budget: u64,
    f: impl Fn(IngredientSource<'_>) -> Result<T, ConstructError>,
) -> Result<T, ConstructError> {
    match f(IngredientSource::Catalog(catalog)) {
        Err(ConstructError::Construction(ConstructionError::NotInCatalog { .. }))
        | Err(ConstructError::Miyamoto(MiyamotoError::Construction(
            ConstructionError::NotInCatalog { .. },
        ))) => f(IngredientSource::Search { budget }),
        other => other,
    }
}

fn triple_rows(t: &crate::assembly::PropusTriple) -> Option<[FirstRow; 3]> {
    Some([
        t.a().circulant_first_row()?,
        t.b().circulant_first_row()?,
        t.d().circulant_first_row()?,
    ])
}

fn construct_one(
    order: usize,
    method: Method,
    catalog: &Catalog,
    budget: u64,
) -> Result<ConstructOutcome, ConstructError> {
    let inapplicable = |reason: String| ConstructError::Inapplicable {
        method,
        order,
        reason,
    };
    match method {
        Method::Auto => unreachable!("auto is expanded by the caller"),
        Method::PaleyTuryn => {
            // order = 2(q+1) with q ≡ 1 (mod 4) a prime power.
            let q = order as u64 / 2 - 1;
            let (triple, h) = run_with_sources(catalog, budget, |src| {
                Ok(williamson_propus_from_q(q, src)?)
            })?;
            Ok(ConstructOutcome {
                matrix: h,
                method,
                triple_rows: triple_rows(&triple),
            })
        }
        Method::Conference => {
            // order = 4m with m ≡ 2 (mod 4) a conference-matrix order.
            let m = order / 4;
            if m % 4 != 2 {
                return Err(inapplicable(format!(
                    "order/4 = {m} is not ≡ 2 (mod 4)"
                )));
            }
            let pair = conference_pair_for(m / 2, catalog, budget)?;
            let h = conference_propus(&pair, ConferenceVariant::Plain)?;
            Ok(ConstructOutcome {
                matrix: h,
                method,
                triple_rows: None,
            })
        }
        Method::DOptimal => {
            let n = order / 4;
            let pair = d_optimal_pair_for(n, catalog, budget)?;
            let field = build_field(n as u64, 1)
                .map_err(|e| inapplicable(e.to_string()))?;
            let h = d_optimal_propus(&pair, &field)?;
            Ok(ConstructOutcome {
                matrix: h,
                method,
                triple_rows: None,
            })
        }
        Method::ThreeEqual => {
            let h = three_equal_propus(order / 4)?;
            Ok(ConstructOutcome {
                matrix: h,
                method,
                triple_rows: None,
            })
        }
        Method::Miyamoto => {
            // order = 4(2q+1) with q ≡ 1 (mod 4) a prime power.
            let m = order / 4;
            if m % 2 == 0 {
                return Err(inapplicable(format!("order/4 = {m} is even")));
            }
            let q = (m as u64 - 1) / 2;
            let h = run_with_sources(catalog, budget, |src| Ok(corollary_driver(q, src)?))?;
            Ok(ConstructOutcome {
                matrix: h,
                method,
                triple_rows: None,
            })
        }
    }
}

/// Builds a symmetric propus-Hadamard matrix of the requested order. `Auto`
/// tries the concrete routes in [`Method::AUTO_ORDER`] and reports every
/// failure if none lands. The returned matrix is always verified Hadamard by
/// the assembly layer.
pub fn construct(
    order: usize,
    method: Method,
    catalog: &Catalog,
    budget: u64,
) -> Result<ConstructOutcome, ConstructError> {
    if order == 0 || order % 4 != 0 {
        return Err(ConstructError::BadOrder(order));
    }
    match method {
        Method::Auto => {
            let mut attempts = Vec::new();
            for m in Method::AUTO_ORDER {
                match construct_one(order, m, catalog, budget) {
                    Ok(outcome) => return Ok(outcome),
                    Err(e) => attempts.push(format!("{m}: {e}")),
                }
            }
            Err(ConstructError::Unconstructed { order, attempts })
        }
        m => construct_one(order, m, catalog, budget),
    }
}
