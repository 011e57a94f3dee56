//! Valuations `K(x,y) → Z⊕Z` (lexicographic) built from w-expansions over the
//! rationals.
//!
//! Given coprime `m, n`, a monic `w ∈ K(x)[y]` of `y`-degree `m` and a basis
//! `α, β` of `Z⊕Z`, an element `f = Σ f_{i,j} y^j w^i` is valued at the least
//! of `−v_inf(f_{i,j})·m·α + j·n·α + i·β` over its nonzero cells.
//!
//! - [`exactfield`]: rationals, `K[x]`, reduced `K(x)` and the degree valuation.
//! - [`ypoly`]: `K(x)[y]`, division by `w`, w-expansions, powers of `y`.
//! - [`valgroup`]: `Z⊕Z`-lex, `∞`, lattice and quotient-class predicates.
//! - [`valuation`]: parameter validation, values, lead terms, axiom audits.
//! - [`witness`]: bounded monic polynomials, successor chains, image samples.

pub mod exactfield;
pub mod valgroup;
pub mod valuation;
pub mod witness;
pub mod ypoly;

pub use exactfield::{Degree, ExtInt, Rat, RatFunc, UniPoly};
pub use valgroup::{ExtValue, MonoidMode, QuotClass, ValuePair};
pub use valuation::{presets, AssociatedMap, AxiomKind, AxiomReport, LeadTerm, SpecError, ValuationSpec};
pub use ypoly::{WExpansion, YPoly, YPowerTable};
